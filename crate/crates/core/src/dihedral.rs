//! Conjugacy of homomorphisms from the dihedral group
//! `D_2m = <r, s | r^m = s^2 = 1, s r s = r^-1>`.
//!
//! With `phi(r) = psi(r) = sigma`, the image of `s` is an involution inverting
//! `sigma`. On each block it swaps some cycles in pairs (reversing them) and
//! reflects the remaining cycles in place, like the reflections of a regular
//! `d`-gon. For even `d` the in-place reflections fall in two families: through
//! two vertices (two fixed points) or through two edge midpoints (none).

use serde::Serialize;

use crate::centralizer::{
    aligning_conjugator, cycles_action, sigma_decompose, SigmaBlock, SigmaDecomposition,
    DEFAULT_CAP,
};
use crate::decision::{ConjugacyDecision, FailedCondition};
use crate::error::{Error, Result};
use crate::oracle;
use crate::perm::{CycleType, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralHom {
    pub m: u128,
    pub r: Permutation,
    pub s: Permutation,
}

impl DihedralHom {
    /// Checks `r^m = s^2 = 1` and `s r s^-1 = r^-1`. `m` may exceed the order
    /// of `r`.
    pub fn new(m: u128, r: Permutation, s: Permutation) -> Result<Self> {
        if r.degree() != s.degree() {
            return Err(Error::DegreeMismatch {
                left: r.degree(),
                right: s.degree(),
            });
        }
        if m == 0 || !m.is_multiple_of(r.order()) {
            return Err(Error::InvalidHom(format!("r^{m} != 1 for r = {r}")));
        }
        if !s.compose_unchecked(&s).is_identity() {
            return Err(Error::InvalidHom(format!("s = {s} is not an involution")));
        }
        if s.conjugate_unchecked(&r) != r.inverse() {
            return Err(Error::InvalidHom(format!(
                "s = {s} does not invert r = {r}"
            )));
        }
        Ok(DihedralHom { m, r, s })
    }

    pub fn degree(&self) -> usize {
        self.r.degree()
    }

    pub fn generators(&self) -> [Permutation; 2] {
        [self.r.clone(), self.s.clone()]
    }

    pub fn conjugated_by(&self, g: &Permutation) -> Result<DihedralHom> {
        Ok(DihedralHom {
            m: self.m,
            r: g.conjugate(&self.r)?,
            s: g.conjugate(&self.s)?,
        })
    }
}

/// Shape of an inverting involution on one block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockReflection {
    pub d: usize,
    pub k: usize,
    /// 2-cycles of the induced action on cycles.
    pub swapped_pairs: usize,
    /// Cycles reflected onto themselves.
    pub inverted_in_place: usize,
    /// Cycle type of the involution on the block's points.
    pub block_cycle_type: CycleType,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReflectionSignature {
    pub blocks: Vec<BlockReflection>,
    /// Cycle type on the fixed points of sigma (empty when there are none).
    pub fix_part_type: CycleType,
}

fn check_inverting_on_block(block: &SigmaBlock, s: &Permutation) -> Result<()> {
    if s.degree() != block.degree() {
        return Err(Error::DegreeMismatch {
            left: block.degree(),
            right: s.degree(),
        });
    }
    let d = block.d();
    let cycles = block.raw_cycles();
    for c in cycles {
        for pos in 0..d {
            let x = c[pos];
            let sx = s.at(x);
            let Some((j, q)) = block.locate(sx) else {
                return Err(Error::NotInvertingInvolution(format!(
                    "{s} leaves the block"
                )));
            };
            if s.at(sx) != x {
                return Err(Error::NotInvertingInvolution(format!(
                    "{s} is not an involution"
                )));
            }
            // s(sigma(x)) = sigma^-1(s(x))
            if s.at(c[(pos + 1) % d]) != cycles[j][(q + d - 1) % d] {
                return Err(Error::NotInvertingInvolution(format!(
                    "{s} does not invert the block of {d}-cycles"
                )));
            }
        }
    }
    Ok(())
}

/// Reflection data of `s` on one block.
pub fn block_reflection(block: &SigmaBlock, s: &Permutation) -> Result<BlockReflection> {
    check_inverting_on_block(block, s)?;
    let bar = cycles_action(block, s)?;
    let bar_type = bar.action.cycle_type();
    Ok(BlockReflection {
        d: block.d(),
        k: block.k(),
        swapped_pairs: bar_type.count(2),
        inverted_in_place: bar_type.count(1),
        block_cycle_type: s.cycle_type_on(&block.support())?,
    })
}

pub fn reflection_signature(
    dec: &SigmaDecomposition,
    s: &Permutation,
) -> Result<ReflectionSignature> {
    let sigma = dec.reassemble();
    if sigma.degree() != s.degree() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: s.degree(),
        });
    }
    if !s.compose_unchecked(s).is_identity() {
        return Err(Error::NotInvertingInvolution(format!(
            "{s} is not an involution"
        )));
    }
    if s.conjugate_unchecked(&sigma) != sigma.inverse() {
        return Err(Error::NotInvertingInvolution(format!(
            "{s} does not invert {sigma}"
        )));
    }
    let blocks = dec
        .blocks()
        .iter()
        .map(|b| block_reflection(b, s))
        .collect::<Result<Vec<_>>>()?;
    let fix_part_type = if dec.fixed_points().is_empty() {
        CycleType::default()
    } else {
        s.cycle_type_on(dec.fixed_points())?
    };
    Ok(ReflectionSignature {
        blocks,
        fix_part_type,
    })
}

/// Finds `z` in `[0, d)` with `tau^z s1 tau^-z = s2`, where `tau` is cycle `j`
/// when `i != j` and cycle `i` otherwise (indices 1-based).
pub fn canonical_reflection_conjugator(
    block: &SigmaBlock,
    i: usize,
    j: usize,
    s1: &Permutation,
    s2: &Permutation,
) -> Result<usize> {
    let k = block.k();
    if i == 0 || j == 0 || i > k || j > k {
        return Err(Error::Precondition(format!(
            "cycle indices must lie in 1..={k}"
        )));
    }
    let tau_i = block.tau(i - 1);
    let tau = block.tau(j - 1);
    let mut allowed = block.raw_cycles()[i - 1].clone();
    allowed.extend(&block.raw_cycles()[j - 1]);
    for s in [s1, s2] {
        if s.degree() != block.degree() {
            return Err(Error::DegreeMismatch {
                left: block.degree(),
                right: s.degree(),
            });
        }
        if !s.compose_unchecked(s).is_identity() {
            return Err(Error::NotInvertingInvolution(format!(
                "{s} is not an involution"
            )));
        }
        if s.support().iter().any(|p| !allowed.contains(&(p - 1))) {
            return Err(Error::Precondition(format!(
                "{s} moves points outside the cycles"
            )));
        }
        if s.conjugate_unchecked(&tau_i) != tau.inverse() {
            return Err(Error::NotInvertingInvolution(format!(
                "{s} does not send cycle {i} to the inverse of cycle {j}"
            )));
        }
    }
    let mut power = Permutation::identity(block.degree());
    for z in 0..block.d() {
        if power.conjugate_unchecked(s1) == *s2 {
            return Ok(z);
        }
        power = tau.compose_unchecked(&power);
    }
    Err(Error::NoReflectionConjugator)
}

/// Whether some element of the block centralizer conjugates one inverting
/// involution to the other: equal cycle type on the block and equal number
/// of cycles reflected in place.
pub fn h_conjugate_involutions_block(
    block: &SigmaBlock,
    pi: &Permutation,
    pi_prime: &Permutation,
) -> Result<bool> {
    let a = block_reflection(block, pi)?;
    let b = block_reflection(block, pi_prime)?;
    Ok(a.block_cycle_type == b.block_cycle_type && a.inverted_in_place == b.inverted_in_place)
}

fn check_compatible(phi: &DihedralHom, psi: &DihedralHom) -> Result<()> {
    if phi.degree() != psi.degree() {
        return Err(Error::DegreeMismatch {
            left: phi.degree(),
            right: psi.degree(),
        });
    }
    if phi.m != psi.m {
        return Err(Error::Precondition(format!(
            "source groups differ: D_{} vs D_{}",
            2 * phi.m,
            2 * psi.m
        )));
    }
    Ok(())
}

pub fn are_generator_conjugate_dihedral(phi: &DihedralHom, psi: &DihedralHom) -> Result<bool> {
    check_compatible(phi, psi)?;
    Ok(phi.r.cycle_type() == psi.r.cycle_type() && phi.s.cycle_type() == psi.s.cycle_type())
}

/// Compares cycle types of the images of all `r^i` and `r^i s`, `i < m`.
pub fn are_element_conjugate_dihedral(phi: &DihedralHom, psi: &DihedralHom) -> Result<bool> {
    check_compatible(phi, psi)?;
    let n = phi.degree();
    let (mut x, mut y) = (Permutation::identity(n), Permutation::identity(n));
    for _ in 0..phi.m {
        if x.cycle_type() != y.cycle_type()
            || x.compose_unchecked(&phi.s).cycle_type() != y.compose_unchecked(&psi.s).cycle_type()
        {
            return Ok(false);
        }
        x = phi.r.compose_unchecked(&x);
        y = psi.r.compose_unchecked(&y);
    }
    Ok(true)
}

pub fn are_conjugate_dihedral(
    phi: &DihedralHom,
    psi: &DihedralHom,
    want_witness: bool,
) -> Result<ConjugacyDecision> {
    if !are_generator_conjugate_dihedral(phi, psi)? {
        return Ok(ConjugacyDecision::reject(FailedCondition::GeneratorTypes));
    }
    let lambda = aligning_conjugator(&psi.r, &phi.r).expect("cycle types agree");
    let aligned = psi.conjugated_by(&lambda)?;
    let dec = sigma_decompose(&phi.r);
    let fixed = dec.fixed_points();
    if !fixed.is_empty() && phi.s.cycle_type_on(fixed)? != aligned.s.cycle_type_on(fixed)? {
        return Ok(ConjugacyDecision::reject(FailedCondition::FixPart));
    }
    for block in dec.blocks() {
        let a = block_reflection(block, &phi.s)?;
        let b = block_reflection(block, &aligned.s)?;
        if a.inverted_in_place != b.inverted_in_place {
            return Ok(ConjugacyDecision::reject(FailedCondition::BarType));
        }
        if a.block_cycle_type != b.block_cycle_type {
            return Ok(ConjugacyDecision::reject(FailedCondition::BlockType));
        }
    }
    let mut decision = ConjugacyDecision::accept();
    if want_witness {
        let rho =
            oracle::find_hom_conjugator(&phi.generators(), &aligned.generators(), DEFAULT_CAP)?
                .ok_or_else(|| {
                    Error::Inconsistent("no conjugator found for accepted pair".into())
                })?;
        decision.witness = Some(lambda.inverse().compose_unchecked(&rho));
    }
    Ok(decision)
}

/// Element-conjugacy of the restrictions to the fixed points of `phi(r)` and
/// to each of its blocks, after aligning `psi(r)` with `phi(r)`.
pub fn componentwise_element_conjugate_dihedral(
    phi: &DihedralHom,
    psi: &DihedralHom,
) -> Result<bool> {
    if !are_generator_conjugate_dihedral(phi, psi)? {
        return Ok(false);
    }
    let lambda = aligning_conjugator(&psi.r, &phi.r).expect("cycle types agree");
    let aligned = psi.conjugated_by(&lambda)?;
    let dec = sigma_decompose(&phi.r);
    let mut parts: Vec<Vec<usize>> = dec.blocks().iter().map(SigmaBlock::support).collect();
    if !dec.fixed_points().is_empty() {
        parts.push(dec.fixed_points().to_vec());
    }
    for part in parts {
        let restrict = |h: &DihedralHom| -> Result<DihedralHom> {
            DihedralHom::new(h.m, h.r.restrict_to(&part)?, h.s.restrict_to(&part)?)
        };
        if !are_element_conjugate_dihedral(&restrict(phi)?, &restrict(&aligned)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
