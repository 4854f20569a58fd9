use dorfman::brackets::{pairing_g, HamiltonianDerivation, SectionExpr};
use dorfman::geometry::classical::{ClassicalBivector, ClassicalForm, VectorField};
use dorfman::geometry::*;
use dorfman::random::PolyGen;
use dorfman::superalgebra::{Chart, ChartKind, Parity, SuperPolynomial};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(gen: &PolyGen, rng: &mut ChaCha8Rng, degree: usize) -> ClassicalForm {
    let dim = gen.chart().base_dim();
    let mut w = ClassicalForm::zero(dim, degree);
    for idx in (1..=dim).combinations(degree) {
        if rng.gen_bool(0.7) {
            w.add_component(&idx, gen.base_function(rng, Parity::Even));
        }
    }
    w
}

fn random_field(gen: &PolyGen, rng: &mut ChaCha8Rng) -> VectorField {
    let dim = gen.chart().base_dim();
    VectorField::new(
        (0..dim)
            .map(|_| gen.base_function(rng, Parity::Even))
            .collect(),
    )
}

fn tensor(chi: SuperPolynomial) -> FormOrField {
    FormOrField::new(chi).unwrap()
}

#[test]
fn insertion_into_a_two_form() {
    // ι_{∂x}(x dx ∧ dy) = x dy
    let ch = symplectic_chart(2).unwrap();
    let w = tensor(&ch.x(1) * &(&ch.xi(1) * &ch.xi(2)));
    let dx = tensor(ch.pi(1));
    let got = cartan(&ch, &SuperPolynomial::zero(), CartanOp::Insertion, &[dx, w]).unwrap();
    assert_eq!(got.chi(), &(&ch.x(1) * &ch.xi(2)));
    let d = cartan(
        &ch,
        &SuperPolynomial::zero(),
        CartanOp::DeRham,
        &[tensor(&ch.x(1) * &ch.xi(2))],
    )
    .unwrap();
    assert_eq!(d.chi(), &(&ch.xi(1) * &ch.xi(2)));
}

#[test]
fn cartan_operators_match_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let zero = SuperPolynomial::zero();
    for dim in 1..=3u16 {
        let ch = symplectic_chart(dim).unwrap();
        let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
        for degree in 0..=dim as usize {
            for _ in 0..8 {
                let w = random_form(&gen, &mut rng, degree);
                let x = random_field(&gen, &mut rng);
                let wc = FormOrField::form(w.to_chi(&ch).unwrap(), degree as u32).unwrap();
                let xc = FormOrField::field(x.to_chi(&ch).unwrap(), 1).unwrap();
                let d = cartan(&ch, &zero, CartanOp::DeRham, std::slice::from_ref(&wc)).unwrap();
                assert_eq!(d.chi(), &w.d().to_chi(&ch).unwrap());
                let dd = cartan(&ch, &zero, CartanOp::DeRham, std::slice::from_ref(&d)).unwrap();
                assert!(dd.is_zero());
                let i = cartan(&ch, &zero, CartanOp::Insertion, &[xc.clone(), wc.clone()]).unwrap();
                assert_eq!(i.chi(), &w.interior(&x).to_chi(&ch).unwrap());
                let l = cartan(
                    &ch,
                    &zero,
                    CartanOp::LieDerivative,
                    &[xc.clone(), wc.clone()],
                )
                .unwrap();
                assert_eq!(l.chi(), &w.lie(&x).to_chi(&ch).unwrap());
                // L_X = d ι_X + ι_X d
                let di = cartan(&ch, &zero, CartanOp::DeRham, &[i]).unwrap();
                let id = cartan(&ch, &zero, CartanOp::Insertion, &[xc, d]).unwrap();
                assert_eq!(l.chi(), &(di.chi() + id.chi()));
            }
        }
    }
}

#[test]
fn grouped_insertion_matches_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ch = symplectic_chart(3).unwrap();
    let gen = PolyGen::new(ch.clone()).max_terms(2).max_base_degree(1);
    for _ in 0..10 {
        let w = random_form(&gen, &mut rng, 3);
        let xs: Vec<VectorField> = (0..2).map(|_| random_field(&gen, &mut rng)).collect();
        let mut args: Vec<FormOrField> = xs
            .iter()
            .map(|x| FormOrField::field(x.to_chi(&ch).unwrap(), 1).unwrap())
            .collect();
        args.push(FormOrField::form(w.to_chi(&ch).unwrap(), 3).unwrap());
        let got = cartan(
            &ch,
            &SuperPolynomial::zero(),
            CartanOp::GroupedInsertion,
            &args,
        )
        .unwrap();
        let expected = w.interior(&xs[1]).interior(&xs[0]);
        assert_eq!(got.chi(), &expected.to_chi(&ch).unwrap());
    }
}

#[test]
fn wedge_prefactor_on_a_super_base() {
    let ch = Chart::new(ChartKind::Symplectic, 1, 1).unwrap();
    // dx^2 is an odd 1-form here
    let a = FormOrField::form(ch.xi(2), 1).unwrap();
    let b = FormOrField::form(ch.xi(1), 1).unwrap();
    assert_eq!(a.parity(), Parity::Odd);
    let ab = FormOrField::wedge(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(ab.chi(), &-(&ch.xi(2) * &ch.xi(1)));
    let ba = FormOrField::wedge(&[b, a]).unwrap();
    assert_eq!(ba.chi(), &(&ch.xi(1) * &ch.xi(2)));
}

#[test]
fn pairing_is_the_canonical_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for dim in 1..=3u16 {
        let ch = symplectic_chart(dim).unwrap();
        let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
        for _ in 0..20 {
            let (x, y) = (random_field(&gen, &mut rng), random_field(&gen, &mut rng));
            let (eta, tau) = (
                random_form(&gen, &mut rng, 1),
                random_form(&gen, &mut rng, 1),
            );
            let u =
                SectionExpr::from_value(x.to_chi(&ch).unwrap() + eta.to_chi(&ch).unwrap()).unwrap();
            let v =
                SectionExpr::from_value(y.to_chi(&ch).unwrap() + tau.to_chi(&ch).unwrap()).unwrap();
            let canonical = tau.interior(&x).add(&eta.interior(&y)).component(&[]);
            assert_eq!(pairing_g(&ch, &u, &v), canonical);
        }
    }
}

#[test]
fn delta_gives_the_classical_dorfman_bracket() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for dim in 1..=3u16 {
        let pre = delta_preset(dim).unwrap();
        let ch = pre.chart.clone();
        let d = pre.derivation();
        let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
        for _ in 0..15 {
            let (x, y) = (random_field(&gen, &mut rng), random_field(&gen, &mut rng));
            let (eta, tau) = (
                random_form(&gen, &mut rng, 1),
                random_form(&gen, &mut rng, 1),
            );
            let u =
                SectionExpr::from_value(x.to_chi(&ch).unwrap() + eta.to_chi(&ch).unwrap()).unwrap();
            let v =
                SectionExpr::from_value(y.to_chi(&ch).unwrap() + tau.to_chi(&ch).unwrap()).unwrap();
            let form = tau
                .lie(&x)
                .add(&eta.d().interior(&y).scale(&SuperPolynomial::int(-1)));
            let expected = x.commutator(&y).to_chi(&ch).unwrap() + form.to_chi(&ch).unwrap();
            assert_eq!(
                d.dorfman(&[u.clone(), v.clone()]).unwrap().value(),
                &expected
            );
            assert!(d.dorfman(std::slice::from_ref(&u)).unwrap().is_zero());
            assert!(d.dorfman(&[u.clone(), v.clone(), u]).unwrap().is_zero());
        }
    }
}

#[test]
fn koszul_bracket_of_a_bivector() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for pre in [bivector_preset().unwrap(), so3_preset().unwrap()] {
        let ch = pre.chart.clone();
        let d = pre.derivation();
        let p = pre.multivector.clone().unwrap();
        let pi = ClassicalBivector::from_multivector(&p).unwrap();
        let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
        for _ in 0..15 {
            let (a, b) = (
                random_form(&gen, &mut rng, 1),
                random_form(&gen, &mut rng, 1),
            );
            let u = SectionExpr::from_value(a.to_chi(&ch).unwrap()).unwrap();
            let v = SectionExpr::from_value(b.to_chi(&ch).unwrap()).unwrap();
            assert_eq!(
                d.dorfman(&[u, v]).unwrap().value(),
                &pi.koszul(&a, &b).to_chi(&ch).unwrap()
            );
            let (f, g) = (
                gen.base_function(&mut rng, Parity::Even),
                gen.base_function(&mut rng, Parity::Even),
            );
            let df = ClassicalForm::function(ch.base_dim(), f.clone()).d();
            let dg = ClassicalForm::function(ch.base_dim(), g.clone()).d();
            let exact = d
                .dorfman(&[
                    SectionExpr::from_value(df.to_chi(&ch).unwrap()).unwrap(),
                    SectionExpr::from_value(dg.to_chi(&ch).unwrap()).unwrap(),
                ])
                .unwrap();
            let bracket = higher_poisson_bracket(&p, &[f, g]).unwrap();
            assert_eq!(
                exact.value(),
                &ClassicalForm::function(ch.base_dim(), bracket)
                    .d()
                    .to_chi(&ch)
                    .unwrap()
            );
        }
    }
}

#[test]
fn commutator_of_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for pre in [bivector_preset().unwrap(), so3_preset().unwrap()] {
        let ch = pre.chart.clone();
        let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
        let p = pre.multivector.clone().unwrap();
        for _ in 0..10 {
            let (x, y) = (random_field(&gen, &mut rng), random_field(&gen, &mut rng));
            let slots = [
                Slot::Field(SectionExpr::from_value(x.to_chi(&ch).unwrap()).unwrap()),
                Slot::Field(SectionExpr::from_value(y.to_chi(&ch).unwrap()).unwrap()),
            ];
            let got = proposition_oracle(&p, &ch, &slots).unwrap();
            assert_eq!(got.chi(), &x.commutator(&y).to_chi(&ch).unwrap());
        }
    }
}

#[test]
fn ternary_bracket_of_exact_forms() {
    let pre = trivector_preset().unwrap();
    let ch = pre.chart.clone();
    let p = pre.multivector.clone().unwrap();
    let d = pre.derivation();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
    let exterior = |f: &SuperPolynomial| {
        cartan(
            &ch,
            &pre.lift,
            CartanOp::DeRham,
            &[FormOrField::new(f.clone()).unwrap()],
        )
        .unwrap()
        .into_chi()
    };
    let mut nonzero = 0;
    for _ in 0..20 {
        let fs: Vec<SuperPolynomial> = (0..3)
            .map(|_| gen.base_function(&mut rng, Parity::Even))
            .collect();
        let args: Vec<SectionExpr> = fs
            .iter()
            .map(|f| SectionExpr::from_value(exterior(f)).unwrap())
            .collect();
        let got = d.dorfman(&args).unwrap();
        let expected = exterior(&higher_poisson_bracket(&p, &fs).unwrap());
        assert_eq!(got.value(), &expected);
        nonzero += usize::from(!expected.is_zero());
    }
    assert!(nonzero > 0);
}

#[test]
fn lifts_are_nilpotent_exactly_for_poisson_structures() {
    let odd = odd_chart(3).unwrap();
    let ch = symplectic_chart(3).unwrap();
    let good = Multivector::bivector(
        odd.clone(),
        &[(1, 2, odd.x(3)), (2, 3, odd.x(1)), (1, 3, -odd.x(2))],
    )
    .unwrap();
    let bad = Multivector::bivector(
        odd.clone(),
        &[(1, 2, odd.x(2)), (2, 3, SuperPolynomial::int(-1))],
    )
    .unwrap();
    let delta = delta(&ch).unwrap();
    for (p, poisson) in [(good, true), (bad, false)] {
        assert_eq!(p.is_homotopy_poisson(), poisson);
        let k = lift_multivector(&p, &ch).unwrap();
        assert_eq!(ch.bracket(&k, &k).is_zero(), poisson);
        assert_eq!(euler_first(&k), k);
        assert!(ch.bracket(&delta, &k).is_zero());
        let theta = &delta + &k;
        assert_eq!(ch.bracket(&theta, &theta).is_zero(), poisson);
        for ((e1, e2), _) in k.bidegree_components() {
            assert_eq!((e1, e2), (1, 2));
        }
    }
}

#[test]
fn lift_bidegrees_follow_weights() {
    let odd = odd_chart(4).unwrap();
    let ch = symplectic_chart(4).unwrap();
    let top = (1..=4).fold(odd.x(1) + odd.x(3), |acc, a| &acc * &odd.xs(a));
    let bi = &(&odd.x(2) * &odd.xs(1)) * &odd.xs(3);
    let p = Multivector::new(odd, top + bi).unwrap();
    assert!(p.is_homotopy_poisson());
    let k = lift_multivector(&p, &ch).unwrap();
    let mut weights = Vec::new();
    for ((e1, e2), part) in k.bidegree_components() {
        assert_eq!(e1, 1);
        assert_eq!(part.weight(), Some(e2 + 1));
        weights.push(e2 + 1);
    }
    assert_eq!(weights, vec![3, 5]);
    assert!(ch.bracket(&k, &k).is_zero());
}

fn random_slot(gen: &PolyGen, rng: &mut ChaCha8Rng, field: bool) -> Slot {
    loop {
        let u = gen.any_section(rng);
        let part = if field { u.field_part() } else { u.form_part() };
        if !part.is_zero() {
            return if field {
                Slot::Field(part)
            } else {
                Slot::Form(part)
            };
        }
    }
}

fn oracle_sweep(pre: &Preset, max_arity: usize, trials: usize, seed: u64) -> usize {
    let ch = &pre.chart;
    let p = pre.multivector.as_ref().unwrap();
    let d = pre.derivation();
    let gen = PolyGen::new(ch.clone()).max_terms(3).max_base_degree(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nonzero = 0;
    for n in 1..=max_arity {
        for pattern in 0..(1u32 << n) {
            for _ in 0..trials {
                let slots: Vec<Slot> = (0..n)
                    .map(|t| random_slot(&gen, &mut rng, pattern >> t & 1 == 1))
                    .collect();
                let args: Vec<SectionExpr> = slots.iter().map(|s| s.section().clone()).collect();
                let engine = d.dorfman(&args).unwrap();
                let oracle = proposition_oracle(p, ch, &slots).unwrap();
                assert_eq!(
                    engine.value(),
                    oracle.chi(),
                    "{} pattern {pattern:0n$b}",
                    pre.name
                );
                if pattern.count_ones() >= 2 && n >= 3 {
                    assert!(engine.is_zero());
                }
                nonzero += usize::from(!engine.is_zero());
            }
        }
    }
    nonzero
}

#[test]
fn oracle_matches_engine_for_a_bivector() {
    assert!(oracle_sweep(&bivector_preset().unwrap(), 4, 4, 1) > 0);
    assert!(oracle_sweep(&so3_preset().unwrap(), 4, 4, 2) > 0);
}

#[test]
fn oracle_matches_engine_for_the_trivector() {
    assert!(oracle_sweep(&trivector_preset().unwrap(), 4, 6, 3) > 0);
}

#[test]
fn oracle_matches_engine_with_odd_sections_in_arity_four() {
    // P = x^4 (x^1 x*_1 x*_2 x*_3 + x*_2 x*_4) + x^4(x^1 + x^2) x*_1 x*_2 x*_3 x*_4 on R^{3|1}
    let odd = Chart::new(ChartKind::OddCotangent, 3, 1).unwrap();
    let three = &(&(&(&odd.x(4) * &odd.x(1)) * &odd.xs(1)) * &odd.xs(2)) * &odd.xs(3);
    let two = &(&odd.x(4) * &odd.xs(2)) * &odd.xs(4);
    let four = (1..=4).fold(&odd.x(4) * &(odd.x(1) + odd.x(2)), |acc, a| {
        &acc * &odd.xs(a)
    });
    let p = Multivector::new(odd, three + two + four).unwrap();
    assert!(p.is_homotopy_poisson());
    let pre = Preset::from_multivector("mixed", p).unwrap();
    assert!(oracle_sweep(&pre, 4, 8, 5) > 0);
}

#[test]
fn binary_mixed_brackets_on_the_plane() {
    // X = ∂_1, η = dx^2 with P = x^1 ∂_1 ∧ ∂_2
    let pre = bivector_preset().unwrap();
    let ch = &pre.chart;
    let p = pre.multivector.as_ref().unwrap();
    let x = SectionExpr::from_value(ch.pi(1)).unwrap();
    let eta = SectionExpr::from_value(&ch.x(1) * &ch.xi(2)).unwrap();
    let d = pre.derivation();
    let xe = d.dorfman(&[x.clone(), eta.clone()]).unwrap();
    let oracle =
        proposition_oracle(p, ch, &[Slot::Field(x.clone()), Slot::Form(eta.clone())]).unwrap();
    assert_eq!(xe.value(), oracle.chi());
    // L_X η = dx^2 is the form part
    assert_eq!(xe.form_part().value(), &ch.xi(2));
    let ex = d.dorfman(&[eta.clone(), x.clone()]).unwrap();
    let oracle = proposition_oracle(p, ch, &[Slot::Form(eta), Slot::Field(x)]).unwrap();
    assert_eq!(ex.value(), oracle.chi());
}

#[test]
fn koszul_derivation_is_the_lift_alone() {
    let pre = so3_preset().unwrap();
    let k = HamiltonianDerivation::new(pre.chart.clone(), pre.lift.clone()).unwrap();
    assert!(k.is_homological());
    let ch = &pre.chart;
    let args = [
        SectionExpr::from_value(ch.xi(1)).unwrap(),
        SectionExpr::from_value(ch.xi(2)).unwrap(),
    ];
    // [dx^1, dx^2]_P = d{x^1, x^2} = dx^3
    assert_eq!(k.dorfman(&args).unwrap().value(), &ch.xi(3));
    assert_eq!(pre.derivation().dorfman(&args).unwrap().value(), &ch.xi(3));
}
