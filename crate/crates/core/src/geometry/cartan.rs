use std::fmt;

use crate::brackets::SectionExpr;
use crate::superalgebra::{Chart, CoordKind, Parity, SuperPolynomial};

use super::{delta, GeometryError};

/// What a χ-image stands for on `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorKind {
    Form(u32),
    Field(u32),
    /// `X + η` with a vector field and a 1-form.
    Section,
    /// A sum over several form or field degrees.
    Inhomogeneous,
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorKind::Form(k) => write!(f, "{k}-form"),
            TensorKind::Field(k) => write!(f, "{k}-vector"),
            TensorKind::Section => write!(f, "section"),
            TensorKind::Inhomogeneous => write!(f, "inhomogeneous"),
        }
    }
}

/// A differential form, multivector field or section, held by its χ-image
/// (forms in `x, ξ`, multivectors in `x, π`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormOrField {
    kind: TensorKind,
    chi: SuperPolynomial,
}

fn infer_kind(chi: &SuperPolynomial) -> Option<TensorKind> {
    let keys: Vec<(u32, u32)> = chi.bidegree_components().into_keys().collect();
    match keys.as_slice() {
        [] => None,
        [(k, 0)] => Some(TensorKind::Form(*k)),
        [(0, m)] => Some(TensorKind::Field(*m)),
        [(0, 1), (1, 0)] => Some(TensorKind::Section),
        _ if keys.iter().all(|&(a, b)| a == 0 || b == 0) => Some(TensorKind::Inhomogeneous),
        _ => None,
    }
}

impl FormOrField {
    /// Reads the kind off the bidegree; zero reads as a function.
    pub fn new(chi: SuperPolynomial) -> Result<Self, GeometryError> {
        if chi
            .coordinates()
            .iter()
            .any(|c| c.kind == CoordKind::Momentum)
            || chi.parity().is_none()
        {
            return Err(GeometryError::KindMismatch("a tensor on M"));
        }
        if chi.is_zero() {
            return Ok(FormOrField::zero(TensorKind::Form(0)));
        }
        let kind = infer_kind(&chi).ok_or(GeometryError::KindMismatch("a tensor on M"))?;
        Ok(FormOrField { kind, chi })
    }

    pub fn zero(kind: TensorKind) -> Self {
        FormOrField {
            kind,
            chi: SuperPolynomial::zero(),
        }
    }

    fn with_kind(chi: SuperPolynomial, kind: TensorKind) -> Result<Self, GeometryError> {
        if chi.is_zero() {
            return Ok(FormOrField::zero(kind));
        }
        let mut got = FormOrField::new(chi)?;
        // functions are both 0-forms and 0-vectors
        if got.kind == TensorKind::Form(0) && kind == TensorKind::Field(0) {
            got.kind = kind;
        }
        if got.kind != kind {
            return Err(GeometryError::KindMismatch("the requested tensor degree"));
        }
        Ok(got)
    }

    pub fn form(chi: SuperPolynomial, degree: u32) -> Result<Self, GeometryError> {
        FormOrField::with_kind(chi, TensorKind::Form(degree))
    }

    pub fn field(chi: SuperPolynomial, degree: u32) -> Result<Self, GeometryError> {
        FormOrField::with_kind(chi, TensorKind::Field(degree))
    }

    /// `χ(η_1 ∧ ⋯ ∧ η_k) = (-1)^{η_1(k-1) + η_2(k-2) + ⋯ + η_{k-1}} χ_{η_1} ⋯ χ_{η_k}`.
    pub fn wedge(one_forms: &[FormOrField]) -> Result<Self, GeometryError> {
        let k = one_forms.len();
        let mut chi = SuperPolynomial::one();
        let mut negative = false;
        for (i, eta) in one_forms.iter().enumerate() {
            if eta.kind != TensorKind::Form(1) {
                return Err(GeometryError::KindMismatch("a wedge of 1-forms"));
            }
            negative ^= eta.parity().is_odd() && (k - 1 - i) % 2 == 1;
            chi = &chi * &eta.chi;
        }
        FormOrField::with_kind(chi.signed(negative), TensorKind::Form(k as u32))
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn chi(&self) -> &SuperPolynomial {
        &self.chi
    }

    pub fn into_chi(self) -> SuperPolynomial {
        self.chi
    }

    pub fn is_zero(&self) -> bool {
        self.chi.is_zero()
    }

    /// Parity of the tensor itself: the χ-image parity shifted by the degree.
    pub fn parity(&self) -> Parity {
        let base = self.chi.parity().unwrap_or(Parity::Even);
        match self.kind {
            TensorKind::Form(k) | TensorKind::Field(k) => base + Parity::from_bit(k as usize),
            TensorKind::Section => base.flip(),
            TensorKind::Inhomogeneous => base,
        }
    }

    pub fn to_section(&self) -> Result<SectionExpr, GeometryError> {
        match self.kind {
            TensorKind::Form(1) | TensorKind::Field(1) | TensorKind::Section => {
                Ok(SectionExpr::new(self.chi.clone(), self.parity())?)
            }
            _ if self.is_zero() => Ok(SectionExpr::zero(self.parity())),
            _ => Err(GeometryError::KindMismatch("a section of TM ⊕ T*M")),
        }
    }

    pub fn from_section(u: &SectionExpr) -> Self {
        match infer_kind(u.value()) {
            Some(kind) => FormOrField {
                kind,
                chi: u.value().clone(),
            },
            None => FormOrField::zero(TensorKind::Section),
        }
    }
}

impl fmt::Display for FormOrField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.chi, self.kind)
    }
}

/// The bracket-defined Cartan operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanOp {
    /// `χ(ι_X η) = (-1)^X [χ_X, χ_η]`
    Insertion,
    /// `χ(L_X η) = (-1)^X [[Δ, χ_X], χ_η]`
    LieDerivative,
    /// `χ(dη) = [Δ, χ_η]`
    DeRham,
    /// `χ(ι_η X) = -(-1)^η [χ_η, χ_X]`
    InsertionByForm,
    /// `χ(L_η X) = (-1)^η [[K_P, χ_η], χ_X]`
    LieByForm,
    /// `χ(d_P X) = -[K_P, χ_X]`
    DifferentialP,
    /// `χ(ι_{X_1} ⋯ ι_{X_n} η) = (-1)^{nX_1 + (n-1)X_2 + ⋯ + X_n} [χ_{X_1}, …, [χ_{X_n}, χ_η]⋯]`
    GroupedInsertion,
}

fn expect(args: &[FormOrField], n: usize, what: &'static str) -> Result<(), GeometryError> {
    if args.len() != n {
        return Err(GeometryError::KindMismatch(what));
    }
    Ok(())
}

fn form_degree(t: &FormOrField, what: &'static str) -> Result<u32, GeometryError> {
    match t.kind {
        TensorKind::Form(k) => Ok(k),
        _ => Err(GeometryError::KindMismatch(what)),
    }
}

fn field_degree(t: &FormOrField, what: &'static str) -> Result<u32, GeometryError> {
    match t.kind {
        TensorKind::Field(k) => Ok(k),
        TensorKind::Form(0) if t.is_zero() => Ok(0),
        _ => Err(GeometryError::KindMismatch(what)),
    }
}

fn infer_or(chi: SuperPolynomial, fallback: TensorKind) -> Result<FormOrField, GeometryError> {
    if chi.is_zero() {
        Ok(FormOrField::zero(fallback))
    } else {
        FormOrField::new(chi)
    }
}

/// Applies `op` on `T*ΠTM`. `k_p` is the lift of the Poisson structure and is
/// only read by the operators on multivector fields.
pub fn cartan(
    chart: &Chart,
    k_p: &SuperPolynomial,
    op: CartanOp,
    args: &[FormOrField],
) -> Result<FormOrField, GeometryError> {
    let delta = delta(chart)?;
    for a in args {
        chart.check(a.chi())?;
    }
    let br = |f: &SuperPolynomial, g: &SuperPolynomial| chart.bracket(f, g);
    match op {
        CartanOp::Insertion | CartanOp::LieDerivative => {
            let what = "a vector field and a form";
            expect(args, 2, what)?;
            if args[0].kind != TensorKind::Field(1) {
                return Err(GeometryError::KindMismatch(what));
            }
            let k = form_degree(&args[1], what)?;
            let sign = args[0].parity().is_odd();
            if op == CartanOp::Insertion {
                let chi = br(args[0].chi(), args[1].chi()).signed(sign);
                FormOrField::with_kind(chi, TensorKind::Form(k.saturating_sub(1)))
            } else {
                let chi = br(&br(&delta, args[0].chi()), args[1].chi()).signed(sign);
                FormOrField::with_kind(chi, TensorKind::Form(k))
            }
        }
        CartanOp::DeRham => {
            expect(args, 1, "a form")?;
            let k = form_degree(&args[0], "a form")?;
            FormOrField::with_kind(br(&delta, args[0].chi()), TensorKind::Form(k + 1))
        }
        CartanOp::InsertionByForm | CartanOp::LieByForm => {
            let what = "a 1-form and a multivector field";
            expect(args, 2, what)?;
            if args[0].kind != TensorKind::Form(1) {
                return Err(GeometryError::KindMismatch(what));
            }
            let m = field_degree(&args[1], what)?;
            let sign = args[0].parity().is_odd();
            if op == CartanOp::InsertionByForm {
                let chi = -br(args[0].chi(), args[1].chi()).signed(sign);
                FormOrField::with_kind(chi, TensorKind::Field(m.saturating_sub(1)))
            } else {
                let chi = br(&br(k_p, args[0].chi()), args[1].chi()).signed(sign);
                infer_or(chi, TensorKind::Field(m))
            }
        }
        CartanOp::DifferentialP => {
            expect(args, 1, "a multivector field")?;
            let m = field_degree(&args[0], "a multivector field")?;
            infer_or(-br(k_p, args[0].chi()), TensorKind::Field(m + 1))
        }
        CartanOp::GroupedInsertion => {
            let what = "vector fields followed by a form";
            let Some((eta, fields)) = args.split_last() else {
                return Err(GeometryError::KindMismatch(what));
            };
            let k = form_degree(eta, what)?;
            let n = fields.len();
            let mut chi = eta.chi().clone();
            let mut negative = false;
            for (i, x) in fields.iter().enumerate().rev() {
                if x.kind != TensorKind::Field(1) {
                    return Err(GeometryError::KindMismatch(what));
                }
                negative ^= x.parity().is_odd() && (n - i) % 2 == 1;
                chi = br(x.chi(), &chi);
            }
            FormOrField::with_kind(
                chi.signed(negative),
                TensorKind::Form(k.saturating_sub(n as u32)),
            )
        }
    }
}
