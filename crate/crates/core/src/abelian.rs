//! Conjugacy of homomorphisms from an abelian group on two generators.
//!
//! With `phi(a) = psi(a) = sigma`, the homomorphisms are conjugate exactly when
//! some element of `Cent(sigma)` conjugates `psi(b)` to `phi(b)`. That
//! centralizer is a direct product over the fixed points and the blocks of
//! `sigma`, and inside one block `Z_d wr S_k` an element is classified up to
//! conjugacy by its [`CentSignature`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::centralizer::{
    aligning_conjugator, cycles_action, sigma_decompose, BlockQuotientImage, SigmaBlock,
    SigmaDecomposition, DEFAULT_CAP,
};
use crate::decision::{ConjugacyDecision, FailedCondition};
use crate::error::{Error, Result};
use crate::oracle;
use crate::perm::{lcm, CycleType, Permutation};

/// Canonical split `pi = mu * pi0` of a block-centralizer element: `mu` rotates
/// the cycles fixed by the cycles action, `pi0` acts on the moved cycles only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KDecomposition {
    pub bar: BlockQuotientImage,
    /// Bar-fixed cycle index (1-based) to its rotation exponent in `[0, d)`.
    pub exponents: BTreeMap<usize, usize>,
    pub pi0: Permutation,
}

impl KDecomposition {
    /// `prod tau_i^{z_i}` over the bar-fixed cycles.
    pub fn mu(&self, block: &SigmaBlock) -> Permutation {
        let mut r = vec![0; block.k()];
        for (&i, &z) in &self.exponents {
            r[i - 1] = z;
        }
        block.rotations(&r)
    }
}

/// Complete conjugacy invariant of an element of one block's centralizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CentSignature {
    pub d: usize,
    pub bar_type: CycleType,
    /// Sorted rotation exponents of the bar-fixed cycles.
    pub fixed_exponents: Vec<usize>,
    /// Sorted `(m, z)`: one entry per bar-cycle of length `m >= 2`, where
    /// `pi0^m` rotates each cycle of that orbit by `z` steps.
    pub orbits: Vec<(usize, usize)>,
}

impl CentSignature {
    /// First component in which two signatures differ.
    pub fn difference(&self, other: &CentSignature) -> Option<FailedCondition> {
        if self.bar_type != other.bar_type {
            Some(FailedCondition::BarType)
        } else if self.fixed_exponents != other.fixed_exponents {
            Some(FailedCondition::Exponents)
        } else if self.orbits != other.orbits {
            Some(FailedCondition::OrbitPowers)
        } else {
            None
        }
    }

    /// Comparison that only asks each `(m, z)` on one side to occur somewhere
    /// on the other, ignoring multiplicities.
    pub fn matches_existentially(&self, other: &CentSignature) -> bool {
        self.bar_type == other.bar_type
            && self.fixed_exponents == other.fixed_exponents
            && self.orbits.iter().all(|o| other.orbits.contains(o))
            && other.orbits.iter().all(|o| self.orbits.contains(o))
    }
}

/// A homomorphism from an abelian group generated by `a`, `b`, given by the
/// images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianHom {
    pub a: Permutation,
    pub b: Permutation,
    /// Orders of `a` and `b` in the source group, when it is not free abelian.
    pub orders: Option<(u128, u128)>,
}

impl AbelianHom {
    pub fn new(a: Permutation, b: Permutation) -> Result<Self> {
        if !a.commutes_with(&b)? {
            return Err(Error::InvalidHom(format!("{a} and {b} do not commute")));
        }
        Ok(AbelianHom { a, b, orders: None })
    }

    /// Homomorphism from `Z/ma x Z/mb`; the images must satisfy the relations.
    pub fn with_orders(a: Permutation, b: Permutation, ma: u128, mb: u128) -> Result<Self> {
        let mut hom = AbelianHom::new(a, b)?;
        if ma == 0 || mb == 0 {
            return Err(Error::InvalidHom("source orders must be positive".into()));
        }
        if !ma.is_multiple_of(hom.a.order()) || !mb.is_multiple_of(hom.b.order()) {
            return Err(Error::InvalidHom(format!(
                "images of orders {} and {} violate a^{ma} = b^{mb} = 1",
                hom.a.order(),
                hom.b.order()
            )));
        }
        hom.orders = Some((ma, mb));
        Ok(hom)
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn generators(&self) -> [Permutation; 2] {
        [self.a.clone(), self.b.clone()]
    }

    /// Conjugates both images by `g`.
    pub fn conjugated_by(&self, g: &Permutation) -> Result<AbelianHom> {
        Ok(AbelianHom {
            a: g.conjugate(&self.a)?,
            b: g.conjugate(&self.b)?,
            orders: self.orders,
        })
    }

    /// The same homomorphism with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> AbelianHom {
        AbelianHom {
            a: self.b.clone(),
            b: self.a.clone(),
            orders: self.orders.map(|(x, y)| (y, x)),
        }
    }
}

pub fn k_decompose(block: &SigmaBlock, pi: &Permutation) -> Result<KDecomposition> {
    let comp = block.component_of(pi)?;
    let bar = cycles_action(block, &comp)?;
    let cycles = block.raw_cycles();
    let mut exponents = BTreeMap::new();
    let mut moved = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        if bar.action.at(i) == i {
            let (_, z) = block
                .locate(comp.at(c[0]))
                .expect("component stays in block");
            exponents.insert(i + 1, z);
        } else {
            moved.extend(c.iter().map(|&p| (p, comp.at(p))));
        }
    }
    Ok(KDecomposition {
        bar,
        exponents,
        pi0: Permutation::from_partial(block.degree(), moved),
    })
}

pub fn cent_signature(block: &SigmaBlock, pi: &Permutation) -> Result<CentSignature> {
    let kd = k_decompose(block, pi)?;
    let cycles = block.raw_cycles();
    let mut orbits = Vec::new();
    for orbit in kd.bar.action.all_cycles_raw() {
        let m = orbit.len();
        if m < 2 {
            continue;
        }
        let mut residues = orbit.iter().map(|&i| {
            let mut x = cycles[i][0];
            for _ in 0..m {
                x = kd.pi0.at(x);
            }
            let (j, z) = block.locate(x).expect("pi0 stays in block");
            debug_assert_eq!(j, i);
            z
        });
        let z = residues.next().expect("orbit is non-empty");
        if residues.any(|other| other != z) {
            return Err(Error::ResidueDiscrepancy(
                orbit.iter().map(|i| i + 1).collect(),
            ));
        }
        orbits.push((m, z));
    }
    orbits.sort_unstable();
    let mut fixed_exponents: Vec<usize> = kd.exponents.values().copied().collect();
    fixed_exponents.sort_unstable();
    Ok(CentSignature {
        d: block.d(),
        bar_type: kd.bar.action.cycle_type(),
        fixed_exponents,
        orbits,
    })
}

/// Whether some element of the block centralizer conjugates `pi` to `pi_prime`.
pub fn cent_conjugate_block(
    block: &SigmaBlock,
    pi: &Permutation,
    pi_prime: &Permutation,
) -> Result<bool> {
    Ok(cent_signature(block, pi)? == cent_signature(block, pi_prime)?)
}

fn check_same_degree(phi: &AbelianHom, psi: &AbelianHom) -> Result<()> {
    if phi.degree() != psi.degree() {
        return Err(Error::DegreeMismatch {
            left: phi.degree(),
            right: psi.degree(),
        });
    }
    Ok(())
}

pub fn are_generator_conjugate(phi: &AbelianHom, psi: &AbelianHom) -> Result<bool> {
    check_same_degree(phi, psi)?;
    Ok(phi.a.cycle_type() == psi.a.cycle_type() && phi.b.cycle_type() == psi.b.cycle_type())
}

/// Compares cycle types of the images of every `a^i b^j`.
pub fn are_element_conjugate_abelian(phi: &AbelianHom, psi: &AbelianHom) -> Result<bool> {
    check_same_degree(phi, psi)?;
    let la = lcm(phi.a.order(), psi.a.order());
    let lb = lcm(phi.b.order(), psi.b.order());
    let powers = |g: &Permutation, count: u128| -> Vec<Permutation> {
        let mut out = Vec::with_capacity(count as usize);
        let mut cur = Permutation::identity(g.degree());
        for _ in 0..count {
            out.push(cur.clone());
            cur = g.compose_unchecked(&cur);
        }
        out
    };
    let (pa, pb) = (powers(&phi.a, la), powers(&phi.b, lb));
    let (qa, qb) = (powers(&psi.a, la), powers(&psi.b, lb));
    for i in 0..la as usize {
        for j in 0..lb as usize {
            let x = pa[i].compose_unchecked(&pb[j]);
            let y = qa[i].compose_unchecked(&qb[j]);
            if x.cycle_type() != y.cycle_type() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Element-conjugacy test for a single fixed-point-free block: equal exponent
/// multisets and equal orbit residue multisets.
///
/// Requires `sigma` to consist of `k` cycles of one length with no fixed
/// points, and `pi`, `pi_prime` to centralize it with equal cycle types.
pub fn element_conjugacy_criterion(
    dec: &SigmaDecomposition,
    pi: &Permutation,
    pi_prime: &Permutation,
) -> Result<bool> {
    let [block] = dec.blocks() else {
        return Err(Error::Precondition(
            "sigma must be a single uniform block".into(),
        ));
    };
    if !dec.fixed_points().is_empty() {
        return Err(Error::Precondition(
            "sigma must have no fixed points".into(),
        ));
    }
    if pi.cycle_type() != pi_prime.cycle_type() {
        return Err(Error::Precondition(
            "second-generator images must have equal cycle types".into(),
        ));
    }
    let s = cent_signature(block, pi)?;
    let t = cent_signature(block, pi_prime)?;
    Ok(s.fixed_exponents == t.fixed_exponents && s.orbits == t.orbits)
}

/// Decides whether `phi` and `psi` are conjugate. With `want_witness`, a
/// conjugator is searched for and attached when the verdict is true.
pub fn are_conjugate_abelian(
    phi: &AbelianHom,
    psi: &AbelianHom,
    want_witness: bool,
) -> Result<ConjugacyDecision> {
    check_same_degree(phi, psi)?;
    if !are_generator_conjugate(phi, psi)? {
        return Ok(ConjugacyDecision::reject(FailedCondition::GeneratorTypes));
    }
    let lambda = aligning_conjugator(&psi.a, &phi.a).expect("cycle types agree");
    are_conjugate_abelian_normalized(phi, psi, &lambda, want_witness)
}

/// As [`are_conjugate_abelian`], with a caller-chosen `lambda` satisfying
/// `lambda psi(a) lambda^-1 = phi(a)`.
pub fn are_conjugate_abelian_normalized(
    phi: &AbelianHom,
    psi: &AbelianHom,
    lambda: &Permutation,
    want_witness: bool,
) -> Result<ConjugacyDecision> {
    check_same_degree(phi, psi)?;
    if !are_generator_conjugate(phi, psi)? {
        return Ok(ConjugacyDecision::reject(FailedCondition::GeneratorTypes));
    }
    let aligned = psi.conjugated_by(lambda)?;
    if aligned.a != phi.a {
        return Err(Error::Precondition(
            "lambda does not conjugate psi(a) onto phi(a)".into(),
        ));
    }
    let dec = sigma_decompose(&phi.a);
    let fixed = dec.fixed_points();
    if !fixed.is_empty() && phi.b.cycle_type_on(fixed)? != aligned.b.cycle_type_on(fixed)? {
        return Ok(ConjugacyDecision::reject(FailedCondition::FixPart));
    }
    for block in dec.blocks() {
        let s = cent_signature(block, &phi.b)?;
        let t = cent_signature(block, &aligned.b)?;
        if let Some(failed) = s.difference(&t) {
            return Ok(ConjugacyDecision::reject(failed));
        }
    }
    let mut decision = ConjugacyDecision::accept();
    if want_witness {
        // rho phi rho^-1 = lambda psi lambda^-1, so lambda^-1 rho carries phi to psi
        let rho =
            oracle::find_hom_conjugator(&phi.generators(), &aligned.generators(), DEFAULT_CAP)?
                .ok_or_else(|| {
                    Error::Inconsistent("no conjugator found for accepted pair".into())
                })?;
        decision.witness = Some(lambda.inverse().compose_unchecked(&rho));
    }
    Ok(decision)
}

/// Element-conjugacy of the restrictions of `phi` and `psi` to the fixed
/// points of `phi(a)` and to each of its blocks, after aligning `psi(a)` with
/// `phi(a)`. False when the generator images already differ in type.
pub fn componentwise_element_conjugate(phi: &AbelianHom, psi: &AbelianHom) -> Result<bool> {
    if !are_generator_conjugate(phi, psi)? {
        return Ok(false);
    }
    let lambda = aligning_conjugator(&psi.a, &phi.a).expect("cycle types agree");
    let aligned = psi.conjugated_by(&lambda)?;
    let dec = sigma_decompose(&phi.a);
    let mut parts: Vec<Vec<usize>> = dec.blocks().iter().map(SigmaBlock::support).collect();
    if !dec.fixed_points().is_empty() {
        parts.push(dec.fixed_points().to_vec());
    }
    for part in parts {
        let restrict = |h: &AbelianHom| -> Result<AbelianHom> {
            AbelianHom::new(h.a.restrict_to(&part)?, h.b.restrict_to(&part)?)
        };
        if !are_element_conjugate_abelian(&restrict(phi)?, &restrict(&aligned)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
