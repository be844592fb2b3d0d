#![allow(dead_code)]

use homconj::centralizer::{enumerate_centralizer, sigma_decompose};
use homconj::{Permutation, DEFAULT_CAP};
use proptest::prelude::*;

pub fn perm_of_degree(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

pub fn perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(perm_of_degree)
}

/// Two permutations of a common degree.
pub fn perm_pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_degree).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n)))
}

/// The `index`-th element (mod size) of the centralizer of `sigma`.
pub fn centralizer_element(sigma: &Permutation, index: usize) -> Permutation {
    let elements: Vec<Permutation> = enumerate_centralizer(&sigma_decompose(sigma), DEFAULT_CAP)
        .unwrap()
        .collect();
    elements[index % elements.len()].clone()
}

/// `(a, b, c, g)`: `b` and `c` commute with `a`, and `g` is arbitrary, all of one degree.
pub fn commuting_triple(
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
        .prop_map(|(a, i, j, g)| {
            let b = centralizer_element(&a, i);
            let c = centralizer_element(&a, j);
            (a, b, c, g)
        })
}
