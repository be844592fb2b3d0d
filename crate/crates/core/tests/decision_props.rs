use homconj::abelian::{are_conjugate_abelian, are_conjugate_abelian_normalized, AbelianHom};
use homconj::centralizer::{
    aligning_conjugator, centralizer_order, cycles_action, enumerate_centralizer, h_class_of,
    is_unit_mod, sigma_decompose,
};
use homconj::dihedral::{are_conjugate_dihedral, DihedralHom};
use homconj::oracle::{cent_orbit, enumerate_inverting_involutions, find_hom_conjugator};
use homconj::perm::all_permutations;
use homconj::{FailedCondition, Permutation, DEFAULT_CAP};
use proptest::prelude::*;

mod common;
use common::{centralizer_element, commuting_triple, perm_of_degree};

fn oracle_says(phi: &[Permutation], psi: &[Permutation]) -> bool {
    find_hom_conjugator(phi, psi, DEFAULT_CAP)
        .unwrap()
        .is_some()
}

fn conjugates(w: &Permutation, phi: &[Permutation], psi: &[Permutation]) -> bool {
    phi.iter()
        .zip(psi)
        .all(|(f, g)| w.conjugate(f).unwrap() == *g)
}

/// `(r, s, s2, g)` with `s`, `s2` inverting `r`.
fn dihedral_instance(
    max_degree: usize,
) -> impl Strategy<Value = (Permutation, Permutation, Permutation, Permutation)> {
    (1..=max_degree)
        .prop_flat_map(|n| {
            (
                perm_of_degree(n),
                any::<usize>(),
                any::<usize>(),
                perm_of_degree(n),
            )
        })
        .prop_map(|(r, i, j, g)| {
            let invols = enumerate_inverting_involutions(&r, DEFAULT_CAP).unwrap();
            let s = invols[i % invols.len()].clone();
            let s2 = invols[j % invols.len()].clone();
            (r, s, s2, g)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn abelian_verdict_matches_search_and_witness_checks((a, b, c, g) in commuting_triple(7)) {
        let phi = AbelianHom::new(a.clone(), b).unwrap();
        let psi = AbelianHom::new(a, c).unwrap().conjugated_by(&g).unwrap();
        let d = are_conjugate_abelian(&phi, &psi, true).unwrap();
        prop_assert_eq!(d.verdict, oracle_says(&phi.generators(), &psi.generators()));
        prop_assert_eq!(d.verdict, d.failed_condition == FailedCondition::None);
        if let Some(w) = d.witness {
            prop_assert!(conjugates(&w, &phi.generators(), &psi.generators()));
        } else {
            prop_assert!(!d.verdict);
        }
    }

    #[test]
    fn abelian_verdict_is_equivariant_and_symmetric((a, b, c, g) in commuting_triple(7)) {
        let phi = AbelianHom::new(a.clone(), b).unwrap();
        let psi = AbelianHom::new(a, c).unwrap();
        let v = are_conjugate_abelian(&phi, &psi, false).unwrap().verdict;
        let moved = |h: &AbelianHom| h.conjugated_by(&g).unwrap();
        prop_assert_eq!(v, are_conjugate_abelian(&moved(&phi), &psi, false).unwrap().verdict);
        prop_assert_eq!(v, are_conjugate_abelian(&phi, &moved(&psi), false).unwrap().verdict);
        prop_assert_eq!(v, are_conjugate_abelian(&moved(&phi), &moved(&psi), false).unwrap().verdict);
        prop_assert_eq!(v, are_conjugate_abelian(&psi, &phi, false).unwrap().verdict);
        prop_assert_eq!(v, are_conjugate_abelian(&phi.swapped(), &psi.swapped(), false).unwrap().verdict);
    }

    #[test]
    fn abelian_verdict_ignores_choice_of_alignment((a, b, c, g) in commuting_triple(7), k in any::<usize>()) {
        let phi = AbelianHom::new(a.clone(), b).unwrap();
        let psi = AbelianHom::new(a.clone(), c).unwrap().conjugated_by(&g).unwrap();
        let canonical = aligning_conjugator(&psi.a, &phi.a).unwrap();
        let other = centralizer_element(&a, k).compose(&canonical).unwrap();
        let x = are_conjugate_abelian_normalized(&phi, &psi, &canonical, false).unwrap();
        let y = are_conjugate_abelian_normalized(&phi, &psi, &other, false).unwrap();
        prop_assert_eq!(x.verdict, y.verdict);
    }

    #[test]
    fn dihedral_verdict_matches_search((r, s, s2, g) in dihedral_instance(7)) {
        let m = r.order();
        let phi = DihedralHom::new(m, r.clone(), s).unwrap();
        let psi = DihedralHom::new(m, r, s2).unwrap().conjugated_by(&g).unwrap();
        let d = are_conjugate_dihedral(&phi, &psi, true).unwrap();
        prop_assert_eq!(d.verdict, oracle_says(&phi.generators(), &psi.generators()));
        prop_assert_eq!(d.verdict, are_conjugate_dihedral(&psi, &phi, false).unwrap().verdict);
        if let Some(w) = d.witness {
            prop_assert!(conjugates(&w, &phi.generators(), &psi.generators()));
        }
    }

    #[test]
    fn orbit_sizes_divide_centralizer_order((a, b, _c, _g) in commuting_triple(8)) {
        let dec = sigma_decompose(&a);
        let orbit = cent_orbit(&dec, &b, DEFAULT_CAP).unwrap();
        prop_assert_eq!(centralizer_order(&dec) % orbit.len() as u128, 0);
        prop_assert!(orbit.contains(&b));
    }
}

#[test]
fn conjugacy_is_transitive_within_small_degree() {
    let n = 4;
    let a = Permutation::parse_cycles("(1 2)(3 4)", n).unwrap();
    let homs: Vec<AbelianHom> = enumerate_centralizer(&sigma_decompose(&a), DEFAULT_CAP)
        .unwrap()
        .map(|b| AbelianHom::new(a.clone(), b).unwrap())
        .collect();
    let rel = |x: &AbelianHom, y: &AbelianHom| are_conjugate_abelian(x, y, false).unwrap().verdict;
    for x in &homs {
        assert!(rel(x, x));
        for y in &homs {
            for z in &homs {
                if rel(x, y) && rel(y, z) {
                    assert!(rel(x, z));
                }
            }
        }
    }
}

/// The elements of `S_n` sending `sigma` to one of its powers.
fn normalizer_like(sigma: &Permutation) -> Vec<(Permutation, u128)> {
    all_permutations(sigma.degree())
        .filter_map(|x| h_class_of(sigma, &x).unwrap().map(|h| (x, h.z)))
        .collect()
}

#[test]
fn power_classes_are_units_on_uniform_blocks() {
    for (d, k) in [
        (2, 1),
        (2, 2),
        (3, 1),
        (3, 2),
        (4, 1),
        (2, 3),
        (5, 1),
        (6, 1),
        (4, 2),
        (2, 4),
        (7, 1),
        (8, 1),
    ] {
        let sigma = homconj::census::representative(&vec![d; k]);
        for (_, z) in normalizer_like(&sigma) {
            assert!(is_unit_mod(homconj::HClass { z }, d), "z = {z} for d = {d}");
        }
    }
}

#[test]
fn setwise_and_per_cycle_kernels_agree_inside_power_normalizer() {
    for (d, k) in [(2, 2), (3, 2), (2, 3), (4, 2), (2, 4), (3, 1), (6, 1)] {
        let sigma = homconj::census::representative(&vec![d; k]);
        let block = sigma_decompose(&sigma).blocks()[0].clone();
        let taus: Vec<Permutation> = (0..k).map(|i| block.tau(i)).collect();
        for (x, z) in normalizer_like(&sigma) {
            let setwise = cycles_action(&block, &x).unwrap().action.is_identity();
            let per_cycle = taus.iter().all(|t| {
                let c = x.conjugate(t).unwrap();
                (0..d as i64).any(|e| c == t.pow(e))
            });
            let common = taus
                .iter()
                .all(|t| x.conjugate(t).unwrap() == t.pow(z as i64));
            assert_eq!(setwise, per_cycle, "x = {x}");
            assert_eq!(setwise, common, "x = {x}");
        }
    }
}

#[test]
fn cycles_action_kernel_is_generated_by_the_cycles() {
    for (d, k) in [(2, 2), (3, 2), (2, 3), (4, 2), (2, 4)] {
        let sigma = homconj::census::representative(&vec![d; k]);
        let dec = sigma_decompose(&sigma);
        let block = &dec.blocks()[0];
        let mut kernel = std::collections::BTreeSet::new();
        let mut exps = vec![0usize; k];
        loop {
            kernel.insert(block.rotations(&exps));
            let mut i = 0;
            while i < k && exps[i] == d - 1 {
                exps[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            exps[i] += 1;
        }
        for x in enumerate_centralizer(&dec, DEFAULT_CAP).unwrap() {
            let trivial = cycles_action(block, &x).unwrap().action.is_identity();
            assert_eq!(trivial, kernel.contains(&x), "x = {x}");
        }
        assert_eq!(kernel.len(), d.pow(k as u32));
    }
}
