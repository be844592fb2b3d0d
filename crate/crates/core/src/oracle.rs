//! Brute-force ground truth.
//!
//! Nothing here uses the signature machinery of [`crate::abelian`] or
//! [`crate::dihedral`]: conjugators are found by exhaustive search and orbits
//! by explicit conjugation.

use std::collections::BTreeSet;

use crate::centralizer::{
    aligning_conjugator, enumerate_centralizer, sigma_decompose, CentralizerIter,
    SigmaDecomposition,
};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, factorial, Permutation};

fn check_lists(phi: &[Permutation], psi: &[Permutation]) -> Result<usize> {
    if phi.is_empty() || phi.len() != psi.len() {
        return Err(Error::Precondition(
            "generator lists must be non-empty and of equal length".into(),
        ));
    }
    let n = phi[0].degree();
    if let Some(bad) = phi.iter().chain(psi).find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: bad.degree(),
        });
    }
    Ok(n)
}

fn conjugates_all(rho: &Permutation, phi: &[Permutation], psi: &[Permutation]) -> bool {
    phi.iter()
        .zip(psi)
        .all(|(f, g)| rho.conjugate_unchecked(f) == *g)
}

/// Some `rho` with `rho phi_i rho^-1 = psi_i` for every `i`, if one exists.
///
/// Candidates are `c * lambda` with `lambda` the canonical alignment of the
/// first images and `c` ranging over `Cent(psi_0)` in enumeration order, which
/// covers every conjugator of the first images.
pub fn find_hom_conjugator(
    phi: &[Permutation],
    psi: &[Permutation],
    cap: u128,
) -> Result<Option<Permutation>> {
    check_lists(phi, psi)?;
    let Some(lambda) = aligning_conjugator(&phi[0], &psi[0]) else {
        return Ok(None);
    };
    for c in enumerate_centralizer(&sigma_decompose(&psi[0]), cap)? {
        let rho = c.compose_unchecked(&lambda);
        if conjugates_all(&rho, phi, psi) {
            return Ok(Some(rho));
        }
    }
    Ok(None)
}

/// Scans all of `S_n` in lexicographic order. Slow; kept as a check on
/// [`find_hom_conjugator`].
pub fn find_hom_conjugator_full_scan(
    phi: &[Permutation],
    psi: &[Permutation],
    cap: u128,
) -> Result<Option<Permutation>> {
    let n = check_lists(phi, psi)?;
    let size = factorial(n);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(all_permutations(n).find(|rho| conjugates_all(rho, phi, psi)))
}

/// `{ rho pi rho^-1 : rho in Cent(sigma) }`.
pub fn cent_orbit(
    dec: &SigmaDecomposition,
    pi: &Permutation,
    cap: u128,
) -> Result<BTreeSet<Permutation>> {
    let sigma = dec.reassemble();
    if !pi.commutes_with(&sigma)? {
        return Err(Error::Precondition(format!(
            "{pi} does not commute with {sigma}"
        )));
    }
    Ok(enumerate_centralizer(dec, cap)?
        .map(|rho| rho.conjugate_unchecked(pi))
        .collect())
}

/// Every element commuting with `sigma`.
pub fn enumerate_commuting_elements(sigma: &Permutation, cap: u128) -> Result<CentralizerIter> {
    enumerate_centralizer(&sigma_decompose(sigma), cap)
}

/// Number of candidates [`enumerate_inverting_involutions`] builds.
pub fn inverting_involution_count(sigma: &Permutation) -> u128 {
    let dec = sigma_decompose(sigma);
    dec.blocks()
        .iter()
        .fold(involution_count(dec.fixed_points().len()), |acc, b| {
            // matchings of k cycles into pairs and singletons, d choices for each part
            let d = b.d() as u128;
            let mut total = 0u128;
            for pairs in 0..=b.k() / 2 {
                let singles = b.k() - 2 * pairs;
                let ways =
                    factorial(b.k()) / (factorial(pairs) * (1u128 << pairs) * factorial(singles));
                total = total.saturating_add(
                    ways.saturating_mul(d.saturating_pow((pairs + singles) as u32)),
                );
            }
            acc.saturating_mul(total)
        })
}

fn involution_count(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for i in 2..=n as u128 {
        let c = b.saturating_add((i - 1).saturating_mul(a));
        a = b;
        b = c;
    }
    b
}

/// All `x` with `x^2 = 1` and `x sigma x^-1 = sigma^-1`.
///
/// Per block every cycle is either reflected in place (`d` ways) or swapped
/// with another cycle and reversed (`d` ways per pair); the fixed points of
/// `sigma` carry an arbitrary involution. Each candidate is re-checked
/// against the defining equations before it is returned.
pub fn enumerate_inverting_involutions(sigma: &Permutation, cap: u128) -> Result<Vec<Permutation>> {
    let size = inverting_involution_count(sigma);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let n = sigma.degree();
    let dec = sigma_decompose(sigma);
    let sigma_inv = sigma.inverse();

    // partial 0-based maps, one list per component
    let mut factors: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    let fixed: Vec<usize> = dec.fixed_points().iter().map(|p| p - 1).collect();
    factors.push(involutions_on(&fixed));
    for block in dec.blocks() {
        let d = block.d();
        let cycles = block.raw_cycles();
        let mut options = Vec::new();
        for matching in matchings(block.k()) {
            let mut partial: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
            for part in matching {
                let mut next = Vec::new();
                for base in &partial {
                    for t in 0..d {
                        let mut map = base.clone();
                        match part {
                            (i, None) => {
                                let c = &cycles[i];
                                map.extend((0..d).map(|p| (c[p], c[(t + d - p) % d])));
                            }
                            (i, Some(j)) => {
                                let (ci, cj) = (&cycles[i], &cycles[j]);
                                map.extend((0..d).map(|p| (ci[p], cj[(t + d - p) % d])));
                                map.extend((0..d).map(|q| (cj[q], ci[(t + d - q) % d])));
                            }
                        }
                        next.push(map);
                    }
                }
                partial = next;
            }
            options.extend(partial);
        }
        factors.push(options);
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; factors.len()];
    'outer: loop {
        let x = Permutation::from_partial(
            n,
            idx.iter()
                .zip(&factors)
                .flat_map(|(&i, f)| f[i].iter().copied()),
        );
        if x.compose_unchecked(&x).is_identity() && x.conjugate_unchecked(sigma) == sigma_inv {
            out.push(x);
        }
        for f in (0..factors.len()).rev() {
            idx[f] += 1;
            if idx[f] < factors[f].len() {
                continue 'outer;
            }
            idx[f] = 0;
        }
        break;
    }
    Ok(out)
}

/// Involutions of a point set (identity included) as partial maps.
fn involutions_on(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for mut tail in involutions_on(rest) {
        tail.push((first, first));
        out.push(tail);
    }
    for (i, &other) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &p)| p)
            .collect();
        for mut tail in involutions_on(&remaining) {
            tail.push((first, other));
            tail.push((other, first));
            out.push(tail);
        }
    }
    out
}

/// Partitions of `0..k` into singletons `(i, None)` and pairs `(i, Some(j))`.
fn matchings(k: usize) -> Vec<Vec<(usize, Option<usize>)>> {
    fn go(rest: &[usize]) -> Vec<Vec<(usize, Option<usize>)>> {
        let Some((&first, tail)) = rest.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for mut m in go(tail) {
            m.insert(0, (first, None));
            out.push(m);
        }
        for (i, &other) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &p)| p)
                .collect();
            for mut m in go(&remaining) {
                m.insert(0, (first, Some(other)));
                out.push(m);
            }
        }
        out
    }
    go(&(0..k).collect::<Vec<_>>())
}
