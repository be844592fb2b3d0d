//! Centralizers of a permutation in `S_n`.
//!
//! A permutation `sigma` splits into its fixed points and blocks of equal-length
//! cycles. The centralizer is the direct product of the symmetric group on the
//! fixed points with, for each block of `k` cycles of length `d`, the wreath
//! product `Z_d wr S_k`: independent rotations of each cycle followed by a
//! permutation of the cycles among themselves. The quotient by the rotation
//! subgroup is the induced action on the `k` cycles.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{factorial, gcd, Permutation};

/// Default ceiling on how many elements an enumeration may produce.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// `k` disjoint cycles of a common length `d >= 2`.
#[derive(Clone, PartialEq, Eq)]
pub struct SigmaBlock {
    degree: usize,
    d: usize,
    // 0-based; each cycle starts at its minimum, cycles ascend by minimum
    cycles: Vec<Vec<usize>>,
    // point -> (cycle index, position), for points of this block
    owner: Vec<Option<(usize, usize)>>,
}

impl SigmaBlock {
    fn new(degree: usize, cycles: Vec<Vec<usize>>) -> Self {
        let d = cycles[0].len();
        let mut owner = vec![None; degree];
        for (i, c) in cycles.iter().enumerate() {
            debug_assert_eq!(c.len(), d);
            for (pos, &p) in c.iter().enumerate() {
                owner[p] = Some((i, pos));
            }
        }
        SigmaBlock {
            degree,
            d,
            cycles,
            owner,
        }
    }

    /// Builds a block from 1-based cycles, which must be disjoint, of equal
    /// length at least 2, and written in the direction of the permutation.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let text: String = cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        let sigma = Permutation::parse_cycles(&text, degree)?;
        let dec = sigma_decompose(&sigma);
        match dec.blocks.as_slice() {
            [block] if block.k() == cycles.len() => Ok(block.clone()),
            _ => Err(Error::Precondition(
                "block cycles must be non-trivial and of one common length".into(),
            )),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Common cycle length.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of cycles.
    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    /// 1-based cycles, each listed from its minimum point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles
            .iter()
            .map(|c| c.iter().map(|p| p + 1).collect())
            .collect()
    }

    pub(crate) fn raw_cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Sorted 1-based points covered by the block.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cycles.iter().flatten().map(|p| p + 1).collect();
        s.sort_unstable();
        s
    }

    /// `(cycle index, position)` of a 0-based point, if it lies in the block.
    pub(crate) fn locate(&self, point: usize) -> Option<(usize, usize)> {
        self.owner.get(point).copied().flatten()
    }

    /// The product of the block's cycles as an element of `S_n`.
    pub fn product(&self) -> Permutation {
        self.rotations(&vec![1; self.k()])
    }

    /// A single cycle `tau_i` (0-based index) as an element of `S_n`.
    pub fn tau(&self, i: usize) -> Permutation {
        let mut r = vec![0; self.k()];
        r[i] = 1;
        self.rotations(&r)
    }

    /// `prod tau_i^{r_i}`.
    pub fn rotations(&self, r: &[usize]) -> Permutation {
        let d = self.d;
        Permutation::from_partial(
            self.degree,
            self.cycles
                .iter()
                .zip(r)
                .flat_map(|(c, &ri)| (0..d).map(move |p| (c[p], c[(p + ri) % d]))),
        )
    }

    /// Restriction of `x` to the block, checking that it centralizes the block
    /// product there.
    pub fn component_of(&self, x: &Permutation) -> Result<Permutation> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: x.degree(),
            });
        }
        let d = self.d;
        for c in &self.cycles {
            for p in 0..d {
                let img = x.at(c[p]);
                let Some((j, q)) = self.locate(img) else {
                    return Err(Error::NotInBlockCentralizer { d });
                };
                // x(sigma(c[p])) must equal sigma(x(c[p]))
                if x.at(c[(p + 1) % d]) != self.cycles[j][(q + 1) % d] {
                    return Err(Error::NotInBlockCentralizer { d });
                }
            }
        }
        Ok(Permutation::from_partial(
            self.degree,
            self.cycles.iter().flatten().map(|&p| (p, x.at(p))),
        ))
    }
}

impl fmt::Debug for SigmaBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SigmaBlock(d={}, {})", self.d, self.product())
    }
}

/// `sigma` as fixed points plus blocks of equal-length cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaDecomposition {
    degree: usize,
    fixed_points: Vec<usize>,
    blocks: Vec<SigmaBlock>,
}

impl SigmaDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Sorted 1-based fixed points.
    pub fn fixed_points(&self) -> &[usize] {
        &self.fixed_points
    }

    /// Blocks in strictly increasing order of cycle length.
    pub fn blocks(&self) -> &[SigmaBlock] {
        &self.blocks
    }

    /// Multiplies all cycles back together.
    pub fn reassemble(&self) -> Permutation {
        let mut images: Vec<u32> = (0..self.degree as u32).collect();
        for b in &self.blocks {
            for c in b.raw_cycles() {
                for p in 0..b.d() {
                    images[c[p]] = c[(p + 1) % b.d()] as u32;
                }
            }
        }
        Permutation::from_raw(images)
    }
}

/// Image of an element under the action on a block's cycles, as a permutation
/// of cycle indices `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockQuotientImage {
    pub k: usize,
    pub action: Permutation,
}

/// Exponent `z` with `x sigma x^-1 = sigma^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HClass {
    pub z: u128,
}

pub fn sigma_decompose(sigma: &Permutation) -> SigmaDecomposition {
    let n = sigma.degree();
    let mut fixed_points = Vec::new();
    let mut by_len: std::collections::BTreeMap<usize, Vec<Vec<usize>>> = Default::default();
    for c in sigma.all_cycles_raw() {
        if c.len() == 1 {
            fixed_points.push(c[0] + 1);
        } else {
            by_len.entry(c.len()).or_default().push(c);
        }
    }
    SigmaDecomposition {
        degree: n,
        fixed_points,
        blocks: by_len
            .into_values()
            .map(|cycles| SigmaBlock::new(n, cycles))
            .collect(),
    }
}

/// `|Fix|! * prod d^k k!`, saturating at `u128::MAX`.
pub fn centralizer_order(dec: &SigmaDecomposition) -> u128 {
    dec.blocks
        .iter()
        .fold(factorial(dec.fixed_points.len()), |acc, b| {
            let wreath = (b.d() as u128)
                .saturating_pow(b.k() as u32)
                .saturating_mul(factorial(b.k()));
            acc.saturating_mul(wreath)
        })
}

/// True iff `x` commutes with `sigma`.
pub fn in_centralizer(sigma: &Permutation, x: &Permutation) -> Result<bool> {
    Ok(x.conjugate(sigma)? == *sigma)
}

/// The induced permutation `w` of the block's cycles: `x(tau_i) = tau_{w(i)}`
/// as point sets.
pub fn cycles_action(block: &SigmaBlock, x: &Permutation) -> Result<BlockQuotientImage> {
    if x.degree() != block.degree() {
        return Err(Error::DegreeMismatch {
            left: block.degree(),
            right: x.degree(),
        });
    }
    let k = block.k();
    let mut w = vec![0u32; k];
    let mut hit = vec![false; k];
    for (i, c) in block.raw_cycles().iter().enumerate() {
        let target = block
            .locate(x.at(c[0]))
            .ok_or(Error::NotCyclePermuting { d: block.d() })?
            .0;
        for &p in &c[1..] {
            match block.locate(x.at(p)) {
                Some((j, _)) if j == target => {}
                _ => return Err(Error::NotCyclePermuting { d: block.d() }),
            }
        }
        if hit[target] {
            return Err(Error::NotCyclePermuting { d: block.d() });
        }
        hit[target] = true;
        w[i] = target as u32;
    }
    Ok(BlockQuotientImage {
        k,
        action: Permutation::from_raw(w),
    })
}

/// Finds `z` in `[0, order(sigma))` with `x sigma x^-1 = sigma^z`, if any.
pub fn h_class_of(sigma: &Permutation, x: &Permutation) -> Result<Option<HClass>> {
    let target = x.conjugate(sigma)?;
    let order = sigma.order();
    let mut power = Permutation::identity(sigma.degree());
    for z in 0..order {
        if power == target {
            return Ok(Some(HClass { z }));
        }
        power = sigma.compose_unchecked(&power);
    }
    Ok(None)
}

/// Checks that `h` is a unit modulo `d`.
pub fn is_unit_mod(h: HClass, d: usize) -> bool {
    gcd(h.z, d as u128) == 1
}

/// Lazily enumerates `Cent_{S_n}(sigma)`, each element exactly once.
///
/// Order: lexicographic in the arrangement of the fixed points, then an
/// odometer over the cycle rotations of every block, then lexicographic in
/// every block's permutation of its cycles (last block fastest).
pub fn enumerate_centralizer(dec: &SigmaDecomposition, cap: u128) -> Result<CentralizerIter> {
    let size = centralizer_order(dec);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(CentralizerIter {
        dec: dec.clone(),
        fix: (0..dec.fixed_points.len()).collect(),
        rot: dec.blocks.iter().map(|b| vec![0; b.k()]).collect(),
        arr: dec.blocks.iter().map(|b| (0..b.k()).collect()).collect(),
        remaining: size,
    })
}

pub struct CentralizerIter {
    dec: SigmaDecomposition,
    fix: Vec<usize>,
    rot: Vec<Vec<usize>>,
    arr: Vec<Vec<usize>>,
    remaining: u128,
}

impl CentralizerIter {
    fn current(&self) -> Permutation {
        let n = self.dec.degree;
        let mut images: Vec<u32> = (0..n as u32).collect();
        let fp = &self.dec.fixed_points;
        for (i, &a) in self.fix.iter().enumerate() {
            images[fp[i] - 1] = (fp[a] - 1) as u32;
        }
        for (b, block) in self.dec.blocks.iter().enumerate() {
            let d = block.d();
            let cycles = block.raw_cycles();
            for (i, c) in cycles.iter().enumerate() {
                let target = &cycles[self.arr[b][i]];
                for p in 0..d {
                    images[c[p]] = target[(p + self.rot[b][i]) % d] as u32;
                }
            }
        }
        Permutation::from_raw(images)
    }

    fn advance(&mut self) {
        for b in (0..self.arr.len()).rev() {
            if advance_lex(&mut self.arr[b]) {
                return;
            }
        }
        for b in (0..self.rot.len()).rev() {
            let d = self.dec.blocks[b].d();
            for digit in self.rot[b].iter_mut().rev() {
                *digit += 1;
                if *digit < d {
                    return;
                }
                *digit = 0;
            }
        }
        advance_lex(&mut self.fix);
    }
}

impl Iterator for CentralizerIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.current();
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// Canonical `lambda` with `lambda from lambda^-1 = to`, or `None` when the
/// cycle types differ.
///
/// Cycles of equal length are matched in canonical order (by minimum point)
/// and aligned start to start; fixed points are matched in ascending order.
pub fn aligning_conjugator(from: &Permutation, to: &Permutation) -> Option<Permutation> {
    if from.degree() != to.degree() || from.cycle_type() != to.cycle_type() {
        return None;
    }
    let a = sigma_decompose(from);
    let b = sigma_decompose(to);
    let mut images = vec![0u32; from.degree()];
    for (&x, &y) in a.fixed_points.iter().zip(&b.fixed_points) {
        images[x - 1] = (y - 1) as u32;
    }
    for (ba, bb) in a.blocks.iter().zip(&b.blocks) {
        for (ca, cb) in ba.raw_cycles().iter().zip(bb.raw_cycles()) {
            for (&x, &y) in ca.iter().zip(cb) {
                images[x] = y as u32;
            }
        }
    }
    Some(Permutation::from_raw(images))
}

/// Steps to the next lexicographic arrangement; on wrap-around resets to the
/// sorted arrangement and returns false.
fn advance_lex(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use std::collections::BTreeSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn decompose_identity() {
        let dec = sigma_decompose(&Permutation::identity(4));
        assert_eq!(dec.fixed_points(), &[1, 2, 3, 4]);
        assert!(dec.blocks().is_empty());
    }

    #[test]
    fn decompose_two_four_cycles() {
        let dec = sigma_decompose(&p("(1 2 3 4)(5 6 7 8)", 11));
        assert_eq!(dec.fixed_points(), &[9, 10, 11]);
        assert_eq!(dec.blocks().len(), 1);
        assert_eq!(dec.blocks()[0].d(), 4);
        assert_eq!(
            dec.blocks()[0].cycles(),
            vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]
        );
    }

    #[test]
    fn decompose_mixed_lengths() {
        let sigma = p("(1 2 3)(4 5)(6 7)", 7);
        let dec = sigma_decompose(&sigma);
        assert!(dec.fixed_points().is_empty());
        let b = dec.blocks();
        assert_eq!((b[0].d(), b[0].cycles()), (2, vec![vec![4, 5], vec![6, 7]]));
        assert_eq!((b[1].d(), b[1].cycles()), (3, vec![vec![1, 2, 3]]));
        assert_eq!(dec.reassemble(), sigma);
    }

    #[test]
    fn cycles_start_at_minimum_in_sigma_direction() {
        let dec = sigma_decompose(&p("(3 1 2)(6 5 4)", 6));
        assert_eq!(dec.blocks()[0].cycles(), vec![vec![1, 2, 3], vec![4, 6, 5]]);
    }

    #[test]
    fn order_formula() {
        assert_eq!(
            centralizer_order(&sigma_decompose(&Permutation::identity(4))),
            24
        );
        assert_eq!(
            centralizer_order(&sigma_decompose(&p("(1 2)(3 4)(5 6)(7 8)", 8))),
            384
        );
        assert_eq!(
            centralizer_order(&sigma_decompose(&p("(1 2 3 4)(5 6 7 8)", 11))),
            192
        );
    }

    fn brute_centralizer(sigma: &Permutation) -> BTreeSet<Permutation> {
        all_permutations(sigma.degree())
            .filter(|x| in_centralizer(sigma, x).unwrap())
            .collect()
    }

    #[test]
    fn enumerate_small_examples() {
        let all: Vec<_> =
            enumerate_centralizer(&sigma_decompose(&Permutation::identity(3)), DEFAULT_CAP)
                .unwrap()
                .collect();
        assert_eq!(all.len(), 6);

        let sigma = p("(1 2 3)", 3);
        let got: BTreeSet<_> = enumerate_centralizer(&sigma_decompose(&sigma), DEFAULT_CAP)
            .unwrap()
            .collect();
        let want: BTreeSet<_> = [Permutation::identity(3), sigma.clone(), sigma.inverse()].into();
        assert_eq!(got, want);

        let sigma = p("(1 2)(3 4)", 4);
        let got: BTreeSet<_> = enumerate_centralizer(&sigma_decompose(&sigma), DEFAULT_CAP)
            .unwrap()
            .collect();
        assert_eq!(got.len(), 8);
        assert_eq!(got, brute_centralizer(&sigma));
        assert!(got.contains(&p("(1 3)(2 4)", 4)));
    }

    #[test]
    fn enumeration_matches_filter_of_sn() {
        for n in 1..=6 {
            for sigma in all_permutations(n).step_by(7) {
                let dec = sigma_decompose(&sigma);
                let listed: Vec<_> = enumerate_centralizer(&dec, DEFAULT_CAP).unwrap().collect();
                let set: BTreeSet<_> = listed.iter().cloned().collect();
                assert_eq!(listed.len(), set.len(), "duplicates for {sigma:?}");
                assert_eq!(listed.len() as u128, centralizer_order(&dec));
                assert_eq!(set, brute_centralizer(&sigma), "sigma = {sigma:?}");
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_starts_at_identity() {
        let dec = sigma_decompose(&p("(1 2)(3 4)", 6));
        let a: Vec<_> = enumerate_centralizer(&dec, DEFAULT_CAP).unwrap().collect();
        let b: Vec<_> = enumerate_centralizer(&dec, DEFAULT_CAP).unwrap().collect();
        assert_eq!(a, b);
        assert!(a[0].is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let dec = sigma_decompose(&Permutation::identity(8));
        assert_eq!(
            enumerate_centralizer(&dec, 1000).err(),
            Some(Error::CapExceeded {
                size: 40320,
                cap: 1000
            })
        );
    }

    #[test]
    fn membership_examples() {
        let sigma = p("(1 2 3 4)(5 6 7 8)", 11);
        assert!(in_centralizer(&sigma, &sigma).unwrap());
        assert!(in_centralizer(&sigma, &p("(1 5)(2 6)(3 7)(4 8)", 11)).unwrap());
        assert!(!in_centralizer(&p("(1 2 3)", 3), &p("(1 2)", 3)).unwrap());
    }

    #[test]
    fn quotient_image_examples() {
        let sigma = p("(1 2)(3 4)(5 6)(7 8)", 8);
        let dec = sigma_decompose(&sigma);
        let block = &dec.blocks()[0];
        let a = cycles_action(block, &p("(1 3 2 4)(5 7 6 8)", 8)).unwrap();
        assert_eq!(a.action, p("(1 2)(3 4)", 4));
        let b = cycles_action(block, &p("(1 3 5 7)(2 4 6 8)", 8)).unwrap();
        assert_eq!(b.action, p("(1 2 3 4)", 4));
        assert!(cycles_action(block, &Permutation::identity(8))
            .unwrap()
            .action
            .is_identity());
        assert_eq!(
            cycles_action(block, &p("(2 3)", 8)),
            Err(Error::NotCyclePermuting { d: 2 })
        );
    }

    #[test]
    fn h_class_examples() {
        let sigma = p("(1 2 3)", 3);
        assert_eq!(h_class_of(&sigma, &sigma).unwrap(), Some(HClass { z: 1 }));
        assert_eq!(
            h_class_of(&sigma, &p("(2 3)", 3)).unwrap(),
            Some(HClass { z: 2 })
        );
        assert_eq!(
            h_class_of(&sigma, &p("(1 2)", 3)).unwrap(),
            Some(HClass { z: 2 })
        );
        let sigma = p("(1 2 3)(4 5)", 5);
        assert_eq!(h_class_of(&sigma, &p("(1 4)", 5)).unwrap(), None);
    }

    #[test]
    fn block_component_checks() {
        let sigma = p("(1 2 3 4)(5 6 7 8)", 11);
        let block = sigma_decompose(&sigma).blocks()[0].clone();
        let b = p("(1 5)(2 6)(3 7)(4 8)(9 10)", 11);
        assert_eq!(
            block.component_of(&b).unwrap(),
            p("(1 5)(2 6)(3 7)(4 8)", 11)
        );
        assert!(block.component_of(&p("(1 2)", 11)).is_err());
        assert_eq!(block.product(), sigma);
        assert_eq!(block.tau(1), p("(5 6 7 8)", 11));
    }

    #[test]
    fn alignment_conjugates_from_onto_to() {
        let from = p("(2 5)(1 3 4)", 6);
        let to = p("(1 6 2)(3 4)", 6);
        let lambda = aligning_conjugator(&from, &to).unwrap();
        assert_eq!(lambda.conjugate(&from).unwrap(), to);
        assert!(aligning_conjugator(&from, &p("(1 2 3 4)", 6)).is_none());
        let same = aligning_conjugator(&to, &to).unwrap();
        assert!(same.is_identity());
    }

    #[test]
    fn block_from_cycles() {
        let b = SigmaBlock::from_cycles(8, &[vec![5, 6, 7, 8], vec![2, 3, 4, 1]]).unwrap();
        assert_eq!(b.cycles(), vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]);
        assert!(SigmaBlock::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).is_err());
    }
}
