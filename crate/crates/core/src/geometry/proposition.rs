use crate::brackets::{HamiltonianDerivation, SectionExpr};
use crate::superalgebra::{Chart, CoordKind, Parity, SuperPolynomial};

use super::cartan::{cartan, CartanOp, FormOrField, TensorKind};
use super::{delta, lift_multivector, GeometryError, Multivector};

/// One argument of a mixed Dorfman bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Form(SectionExpr),
    Field(SectionExpr),
}

impl Slot {
    pub fn section(&self) -> &SectionExpr {
        match self {
            Slot::Form(u) | Slot::Field(u) => u,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Slot::Field(_))
    }

    fn parity(&self) -> Parity {
        self.section().parity()
    }

    fn tensor(&self) -> FormOrField {
        FormOrField::from_section(self.section())
    }

    fn check(&self) -> Result<(), GeometryError> {
        let fibre = match self {
            Slot::Form(_) => CoordKind::FiberOdd1,
            Slot::Field(_) => CoordKind::FiberOdd2,
        };
        let ok = self
            .section()
            .value()
            .coordinates()
            .iter()
            .all(|c| c.kind == CoordKind::Base || c.kind == fibre);
        if ok {
            Ok(())
        } else {
            Err(GeometryError::KindMismatch(
                "a pure 1-form or vector field slot",
            ))
        }
    }
}

struct Ops<'a> {
    chart: &'a Chart,
    delta: SuperPolynomial,
    lift: &'a SuperPolynomial,
}

impl Ops<'_> {
    fn br(&self, f: &SuperPolynomial, g: &SuperPolynomial) -> SuperPolynomial {
        self.chart.bracket(f, g)
    }

    fn op(&self, k: &SuperPolynomial, op: CartanOp, args: &[FormOrField]) -> SuperPolynomial {
        cartan(self.chart, k, op, args)
            .expect("slot kinds checked")
            .into_chi()
    }

    /// `χ(ι_{η_1} ⋯ ι_{η_r} Y)`, grouped as for vector fields:
    /// `(-1)^r (-1)^{rη_1 + ⋯ + η_r} [χ_{η_1}, …, [χ_{η_r}, χ_Y]⋯]`.
    fn grouped_by_forms(&self, forms: &[&Slot], y: SuperPolynomial) -> SuperPolynomial {
        let r = forms.len();
        let mut acc = y;
        let mut negative = r % 2 == 1;
        for (i, eta) in forms.iter().enumerate().rev() {
            negative ^= eta.parity().is_odd() && (r - i) % 2 == 1;
            acc = self.br(eta.section().value(), &acc);
        }
        acc.signed(negative)
    }
}

/// Coefficients of `ι_{η_1} ⋯ ι_{η_{n-1}} d_P X` and of the terms
/// `ι_{η_1} ⋯ ι̂_{η_j} ⋯ L_{η_j} X`, `j < i`, in `d_n` with `X` in slot `i`.
///
/// Obtained by commuting `χ_X` to the front of the nested bracket and
/// splitting `[K, [χ_{η_j}, χ_X]]` by Jacobi. For even sections this is
/// `(-1)^{X(η_{i+1} + ⋯ + η_n) + i}(2 - i)` and
/// `-(-1)^{X(η_{i+1} + ⋯ + η_n) + n + i}(-1)^{η_j(η_{j+1} + ⋯ + η_n) + j}`;
/// with odd sections the `i - 1` copies of the first term need not cancel
/// against each other as uniformly.
#[derive(Clone, Debug, PartialEq, Eq)]
struct MixedSigns {
    differential: i64,
    lie: Vec<bool>,
}

impl MixedSigns {
    fn new(u: &[Parity], pos: usize) -> Self {
        let n = u.len();
        let r = n - 1;
        let bit = |p: Parity| p.bit();
        let c: Vec<usize> = u.iter().map(|&p| bit(p) + 1).collect();
        let cx = c[pos];
        let sum = |range: std::ops::Range<usize>| -> usize {
            range.filter(|&t| t != pos).map(|t| c[t]).sum()
        };
        let epsilon: usize = (0..n - 1).map(|t| (n - 1 - t) * bit(u[t])).sum();
        let total = sum(0..n);
        // Rnest(forms in order; Y) relative to the grouped insertion
        let grouped = |list: &[usize]| -> usize {
            let m = list.len();
            m + list
                .iter()
                .enumerate()
                .map(|(t, &s)| (m - t) * bit(u[s]))
                .sum::<usize>()
        };
        let forms: Vec<usize> = (0..n).filter(|&t| t != pos).collect();
        let y1 = 1 + cx;
        // E ∋ (-1)^{ε + c_X S(1..i-1)} Lnest([K, χ_X]; forms) and [K, χ_X] = -χ(d_P X)
        let mut differential: i64 = 0;
        let lead = epsilon + cx * sum(0..pos) + r + y1 * total + 1 + grouped(&forms);
        differential += if lead % 2 == 1 { -1 } else { 1 };
        let mut lie = Vec::new();
        for j in 0..pos {
            let cj = c[j];
            let b = epsilon + cx * sum(j + 1..pos) + (cj + cx) * sum(0..j);
            let rest: Vec<usize> = forms.iter().copied().filter(|&t| t != j).collect();
            let cw = 1 + cj + cx;
            let lnest = (r - 1) + cw * (total - cj);
            let later = sum(j + 1..n);
            let copy = b + cj + lnest + cj * later + 1 + grouped(&forms);
            differential += if copy % 2 == 1 { -1 } else { 1 };
            lie.push((b + bit(u[j]) + lnest + grouped(&rest)) % 2 == 1);
        }
        MixedSigns { differential, lie }
    }
}

/// The closed formulas for `d_n` on `Γ(TM ⊕ T*M)` with `θ = Δ + K_P`:
///
/// - all 1-forms: the higher Koszul brackets, the derived brackets of `K_P` alone;
/// - `d_1(X) = -d_P X`, `d_2(X, Y) = [X, Y]_c`;
/// - `d_2(X, η) = L_X η - (-1)^{Xη} ι_η d_P X`, `d_2(η, X) = L_η X - (-1)^{Xη} ι_X dη`;
/// - one field `X` in slot `i` among `n - 1` forms, `n ≥ 3`: for even sections
///   `(-1)^{X(η_{i+1} + ⋯ + η_n) + i} (2 - i) ι_{η_1} ⋯ ι_{η_n} d_P X` minus
///   `(-1)^{X(η_{i+1} + ⋯ + η_n) + n + i} Σ_{j<i} (-1)^{η_j(η_{j+1} + ⋯ + η_n) + j} ι_{η_1} ⋯ ι̂_{η_j} ⋯ ι_{η_n} L_{η_j} X`,
///   with parity-complete coefficients in general;
/// - two or more fields with `n ≥ 3`: zero.
///
/// In arity `n` only the weight `n + 1` part of `K_P` enters `d_P` and `L_η`.
pub fn proposition_oracle(
    p: &Multivector,
    chart: &Chart,
    args: &[Slot],
) -> Result<FormOrField, GeometryError> {
    if args.is_empty() {
        return Err(GeometryError::Bracket(
            crate::brackets::BracketError::EmptyArguments,
        ));
    }
    let lift = lift_multivector(p, chart)?;
    for s in args {
        chart.check(s.section().value())?;
        s.check()?;
    }
    if args.iter().any(|s| s.section().is_zero()) {
        return Ok(FormOrField::zero(TensorKind::Section));
    }
    let n = args.len();
    let ops = Ops {
        chart,
        delta: delta(chart)?,
        lift: &lift,
    };
    let k_n = lift.weight_component(n as u32 + 1);
    let fields: Vec<usize> = (0..n).filter(|&i| args[i].is_field()).collect();
    let chi = match (fields.as_slice(), n) {
        ([], _) => {
            let koszul = HamiltonianDerivation::new(chart.clone(), ops.lift.clone())?;
            let forms: Vec<SectionExpr> = args.iter().map(|s| s.section().clone()).collect();
            koszul.dorfman(&forms)?.into_value()
        }
        ([_], 1) => ops
            .op(&k_n, CartanOp::DifferentialP, &[args[0].tensor()])
            .signed(true),
        ([_, _], 2) => {
            // [X, Y]_c = L_X Y through Δ
            let x = args[0].section();
            ops.br(&ops.br(&ops.delta, x.value()), args[1].section().value())
                .signed(x.parity().is_odd())
        }
        ([0], 2) => {
            let (x, eta) = (&args[0], &args[1]);
            let lie = ops.op(
                &ops.delta,
                CartanOp::LieDerivative,
                &[x.tensor(), eta.tensor()],
            );
            let dx = FormOrField::new(ops.op(&k_n, CartanOp::DifferentialP, &[x.tensor()]))?;
            let ins = ops.op(&k_n, CartanOp::InsertionByForm, &[eta.tensor(), dx]);
            lie - ins.signed(x.parity().flip().times(eta.parity()).is_odd())
        }
        ([1], 2) => {
            let (eta, x) = (&args[0], &args[1]);
            let lie = ops.op(&k_n, CartanOp::LieByForm, &[eta.tensor(), x.tensor()]);
            let deta = FormOrField::new(ops.op(&ops.delta, CartanOp::DeRham, &[eta.tensor()]))?;
            let ins = ops.op(&ops.delta, CartanOp::Insertion, &[x.tensor(), deta]);
            lie - ins.signed(x.parity().times(eta.parity().flip()).is_odd())
        }
        ([pos], _) => {
            let parities: Vec<Parity> = args.iter().map(|s| s.parity()).collect();
            let signs = MixedSigns::new(&parities, *pos);
            let x = &args[*pos];
            let forms: Vec<&Slot> = args
                .iter()
                .enumerate()
                .filter(|(t, _)| t != pos)
                .map(|(_, s)| s)
                .collect();
            let dx = ops.op(&k_n, CartanOp::DifferentialP, &[x.tensor()]);
            let mut acc = ops
                .grouped_by_forms(&forms, dx)
                .scale_int(signs.differential);
            for (j, negative) in signs.lie.iter().enumerate() {
                let rest: Vec<&Slot> = forms
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| *t != j)
                    .map(|(_, s)| *s)
                    .collect();
                let lie = ops.op(&k_n, CartanOp::LieByForm, &[args[j].tensor(), x.tensor()]);
                acc += ops.grouped_by_forms(&rest, lie).signed(*negative);
            }
            acc
        }
        _ => SuperPolynomial::zero(),
    };
    Ok(if chi.is_zero() {
        FormOrField::zero(TensorKind::Section)
    } else {
        FormOrField::new(chi)?
    })
}
