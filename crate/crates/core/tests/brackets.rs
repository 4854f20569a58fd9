use dorfman::brackets::{
    courant, pairing_g, project_p, project_w, HamiltonianDerivation, SectionExpr,
};
use dorfman::combinatorics::binomial;
use dorfman::random::PolyGen;
use dorfman::superalgebra::{Chart, ChartKind, Parity, SuperPolynomial};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn delta(ch: &Chart) -> SuperPolynomial {
    (1..=ch.base_dim()).fold(SuperPolynomial::zero(), |acc, a| acc + &ch.xi(a) * &ch.p(a))
}

fn derivation(ch: &Chart, theta: SuperPolynomial) -> HamiltonianDerivation {
    HamiltonianDerivation::new(ch.clone(), theta).unwrap()
}

#[test]
fn projector_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for ch in [
        Chart::symplectic(2).unwrap(),
        Chart::new(ChartKind::Symplectic, 1, 1).unwrap(),
    ] {
        let gen = PolyGen::new(ch.clone()).max_terms(4).max_weight(4);
        let br = |a: &SuperPolynomial, b: &SuperPolynomial| ch.bracket(a, b);
        for _ in 0..50 {
            let (f, g) = (gen.any(&mut rng), gen.any(&mut rng));
            assert_eq!(project_p(&project_p(&f)), project_p(&f));
            let lhs = project_p(&br(&f, &g)) + br(&project_p(&f), &project_p(&g));
            let rhs = project_p(&br(&project_p(&f), &g)) + project_p(&br(&f, &project_p(&g)));
            assert_eq!(lhs, rhs);
            let s = gen.any_section(&mut rng);
            assert_eq!(br(&project_p(&f), s.value()), project_w(&br(&f, s.value())));
        }
    }
}

#[test]
fn q_preserves_the_subalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let ch = Chart::symplectic(2).unwrap();
    let gen = PolyGen::new(ch.clone()).max_terms(4).max_weight(4);
    for _ in 0..50 {
        let d = derivation(&ch, gen.hamiltonian(&mut rng, &[3, 5]));
        let f = gen.any(&mut rng);
        assert_eq!(project_p(&d.apply(&project_p(&f))), project_p(&d.apply(&f)));
    }
}

#[test]
fn dorfman_output_is_weight_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ch = Chart::new(ChartKind::Symplectic, 1, 1).unwrap();
    let gen = PolyGen::new(ch.clone()).max_terms(3);
    for _ in 0..20 {
        let d = derivation(&ch, gen.hamiltonian(&mut rng, &[2, 3, 4, 5]));
        for n in 1..=4 {
            let args: Vec<_> = (0..n).map(|_| gen.any_section(&mut rng)).collect();
            let out = d.dorfman(&args).unwrap();
            assert!(out.value().weights().iter().all(|&w| w == 1));
            let expected: Parity =
                args.iter().map(|u| u.parity()).sum::<Parity>() + Parity::from_bit(n % 2);
            if !out.is_zero() {
                assert_eq!(out.parity(), expected);
            }
        }
    }
}

#[test]
fn delta_brackets_on_the_line() {
    let ch = Chart::symplectic(1).unwrap();
    let d = derivation(&ch, delta(&ch));
    let field = SectionExpr::from_value(ch.pi(1)).unwrap();
    let form = SectionExpr::from_value(&ch.x(1) * &ch.xi(1)).unwrap();
    let d2 = d.dorfman(&[field.clone(), form.clone()]).unwrap();
    assert_eq!(d2.value(), &ch.xi(1));
    let c = courant(&d, &[field.clone(), form.clone()]).unwrap();
    assert_eq!(
        c.value(),
        &ch.xi(1).scale(&BigRational::new(1.into(), 2.into()))
    );
    assert!(courant(&d, &[field.clone(), field.clone()])
        .unwrap()
        .is_zero());
    assert_eq!(
        pairing_g(&ch, &field, &SectionExpr::from_value(ch.xi(1)).unwrap()),
        SuperPolynomial::one()
    );
}

#[test]
fn pairing_is_graded_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ch = Chart::new(ChartKind::Symplectic, 2, 1).unwrap();
    let gen = PolyGen::new(ch.clone()).max_terms(3);
    for _ in 0..100 {
        let (u, v) = (gen.any_section(&mut rng), gen.any_section(&mut rng));
        let sign = u.parity().times(v.parity()).is_odd();
        assert_eq!(pairing_g(&ch, &u, &v), pairing_g(&ch, &v, &u).signed(sign));
    }
}

#[test]
fn homological_delta_satisfies_every_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in 1..=3 {
        let ch = Chart::symplectic(dim).unwrap();
        let d = derivation(&ch, delta(&ch));
        let gen = PolyGen::new(ch.clone()).max_terms(3);
        for n in 1..=4 {
            for _ in 0..3 {
                let args: Vec<_> = (0..n).map(|_| gen.even_section(&mut rng)).collect();
                let report = d.loday_identity(&args).unwrap();
                assert!(report.holds() && report.matched && report.q_squared.is_zero());
                if n != 2 {
                    assert!(d.dorfman(&args).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn theorem_on_ordinary_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for dim in 1..=2 {
        let ch = Chart::symplectic(dim).unwrap();
        let gen = PolyGen::new(ch.clone()).max_terms(3);
        let mut nonzero = false;
        for _ in 0..6 {
            let d = derivation(&ch, gen.hamiltonian(&mut rng, &[3, 5]));
            for n in (1..=4).flat_map(|n| [n; 3]) {
                let args: Vec<_> = (0..n).map(|_| gen.even_section(&mut rng)).collect();
                let report = d.loday_identity(&args).unwrap();
                assert!(report.matched, "n = {n}, θ = {}", d.theta());
                nonzero |= !report.residual.is_zero();
            }
        }
        assert!(nonzero);
    }
}

#[test]
fn theorem_with_odd_sections_and_odd_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ch = Chart::new(ChartKind::Symplectic, 1, 1).unwrap();
    let gen = PolyGen::new(ch.clone()).max_terms(2);
    for _ in 0..4 {
        let d = derivation(&ch, gen.hamiltonian(&mut rng, &[3, 5]));
        for n in 1..=4 {
            let args: Vec<_> = (0..n).map(|_| gen.any_section(&mut rng)).collect();
            assert!(d.loday_identity(&args).unwrap().matched);
        }
    }
}

#[test]
fn theorem_sign_flips_for_two_even_weight_components() {
    // odd weight-2 Hamiltonians exist only on a super base
    let ch = Chart::new(ChartKind::Symplectic, 1, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let gen = PolyGen::new(ch.clone()).max_terms(3);
    let mut flipped = 0;
    for _ in 0..200 {
        let d = derivation(&ch, gen.hamiltonian(&mut rng, &[2]));
        let u = gen.any_section(&mut rng);
        let report = d.loday_identity(std::slice::from_ref(&u)).unwrap();
        assert_eq!(report.residual, report.q_squared);
        if !report.residual.is_zero() {
            flipped += 1;
            assert!(!report.matched);
        }
    }
    assert!(flipped > 0);
}

#[test]
fn symmetry_defect_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for ch in [
        Chart::symplectic(2).unwrap(),
        Chart::new(ChartKind::Symplectic, 1, 1).unwrap(),
    ] {
        let gen = PolyGen::new(ch.clone()).max_terms(2);
        for _ in 0..4 {
            let d = derivation(&ch, gen.hamiltonian(&mut rng, &[3, 4, 5]));
            for k in 2..=4 {
                let args: Vec<_> = (0..k).map(|_| gen.any_section(&mut rng)).collect();
                for i in 1..k {
                    assert!(
                        d.symmetry_defect_check(&args, i).unwrap(),
                        "k = {k}, i = {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn lwx_relation_for_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let ch = Chart::symplectic(2).unwrap();
    let d = derivation(&ch, delta(&ch));
    let gen = PolyGen::new(ch.clone()).max_terms(3);
    for _ in 0..20 {
        let (u, v) = (gen.even_section(&mut rng), gen.even_section(&mut rng));
        let lhs = d.dorfman(&[u.clone(), v.clone()]).unwrap().into_value()
            + d.dorfman(&[v.clone(), u.clone()]).unwrap().into_value();
        let g = pairing_g(&ch, &u, &v);
        assert_eq!(lhs, d.defect_map(&[], &g).unwrap().into_value());
        // D_2 g is dg
        assert_eq!(lhs, d.apply(&g));
    }
}

#[test]
fn polarisation_matches_the_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ch = Chart::symplectic(1).unwrap();
    let gen = PolyGen::new(ch.clone()).max_terms(2).max_base_degree(1);
    for _ in 0..2 {
        let d = derivation(&ch, gen.hamiltonian(&mut rng, &[3, 5]));
        let u = gen.even_section(&mut rng);
        for n in 1..=6 {
            let full = d.loday_residual(&vec![u.clone(); n]).unwrap();
            assert_eq!(d.polarised_loday(&u, n).unwrap(), full, "n = {n}");
        }
    }
}

fn lemma_inputs(
    seed: u64,
) -> Vec<(
    Chart,
    HamiltonianDerivation,
    SuperPolynomial,
    SuperPolynomial,
)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for ch in [
        Chart::symplectic(1).unwrap(),
        Chart::new(ChartKind::Symplectic, 1, 1).unwrap(),
    ] {
        let gen = PolyGen::new(ch.clone()).max_terms(2).max_base_degree(1);
        for _ in 0..2 {
            let d = derivation(&ch, gen.hamiltonian(&mut rng, &[2, 3, 4]));
            let xi = gen.odd_linear(&mut rng);
            let chi = gen.weight_homogeneous(&mut rng, 1);
            out.push((ch.clone(), d, xi, chi));
        }
    }
    out
}

#[test]
fn lemma_shuffling_two_copies_of_xi() {
    for (ch, d, xi, chi) in lemma_inputs(12) {
        let phi = d.phi_tower(&xi, 7);
        for k in 0..=5 {
            let lhs = ch.bracket(&ch.bracket(&ch.bracket(&phi[k], &chi), &xi), &xi);
            assert_eq!(lhs, ch.bracket(&phi[k + 2], &chi), "k = {k}");
        }
    }
}

#[test]
fn lemma_on_brackets_of_phi() {
    for (ch, d, xi, _) in lemma_inputs(13) {
        let phi = d.phi_tower(&xi, 11);
        for k in 0..=5 {
            for l in 0..=5 {
                let mut lhs = ch.bracket(&phi[k], &phi[l]);
                for r in 0..=3usize {
                    if r > 0 {
                        lhs = ch.bracket(&ch.bracket(&lhs, &xi), &xi);
                    }
                    let rhs = (0..=r).fold(SuperPolynomial::zero(), |acc, s| {
                        let c = BigRational::from_integer(binomial(r as i64, s as i64));
                        acc + ch.bracket(&phi[k + 2 * s], &phi[l + 2 * (r - s)]).scale(&c)
                    });
                    assert_eq!(lhs, rhs, "k = {k}, l = {l}, r = {r}");
                }
            }
        }
    }
}
