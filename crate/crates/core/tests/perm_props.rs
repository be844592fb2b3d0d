use homconj::perm::all_permutations;
use homconj::Permutation;
use proptest::prelude::*;

mod common;
use common::{perm, perm_of_degree, perm_pair};

proptest! {
    #[test]
    fn format_then_parse_round_trips(p in perm(12)) {
        let text = p.format_cycles();
        prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p.clone());
        let full = format!("{}:{}", p.degree(), p);
        prop_assert_eq!(full.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn composition_is_associative((p, q, r) in (1..=10usize).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n), perm_of_degree(n)))) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in perm(12)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn order_is_first_return_to_identity(p in perm(12)) {
        let order = p.order();
        let mut power = p.clone();
        let mut steps = 1u128;
        while !power.is_identity() {
            power = p.compose(&power).unwrap();
            steps += 1;
        }
        prop_assert_eq!(steps, order);
        prop_assert!(p.pow(order as i64).is_identity());
    }

    #[test]
    fn conjugation_relabels_cycles((g, p) in perm_pair(12)) {
        let c = g.conjugate(&p).unwrap();
        prop_assert_eq!(c.cycle_type(), p.cycle_type());
        for x in 1..=p.degree() {
            prop_assert_eq!(c.apply(g.apply(x)), g.apply(p.apply(x)));
        }
    }

    #[test]
    fn negative_powers_invert(p in perm(10), e in -20i64..20) {
        prop_assert_eq!(p.pow(-e), p.pow(e).inverse());
    }

    #[test]
    fn fixed_points_and_support_partition(p in perm(12)) {
        let fixed = p.fixed_points();
        let support = p.support();
        prop_assert_eq!(fixed.len() + support.len(), p.degree());
        prop_assert!(fixed.is_disjoint(&support));
    }
}

#[test]
fn lexicographic_enumeration_counts_and_orders() {
    let all: Vec<Permutation> = all_permutations(4).collect();
    assert_eq!(all.len(), 24);
    assert!(all.windows(2).all(|w| w[0].images() < w[1].images()));
}

#[test]
fn parse_rejects_bad_input() {
    assert!(Permutation::parse_cycles("(1 2", 3).is_err());
    assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
    assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
    assert!(Permutation::parse_cycles("(1 x)", 3).is_err());
    assert!(Permutation::parse_cycles("()", 0).is_err());
}
