//! Exhaustive sweeps comparing the structural decisions with brute force.
//!
//! Every sweep takes one representative `sigma` per cycle type, enumerates
//! the instances built on it, and tallies where the decision and the search
//! agree. Side properties are tallied as sub-audits. Instances run in
//! parallel; partial tallies are merged in instance order, so a report does
//! not depend on the number of threads.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Write;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian::{
    are_conjugate_abelian, are_element_conjugate_abelian, cent_conjugate_block, cent_signature,
    componentwise_element_conjugate, element_conjugacy_criterion, AbelianHom,
};
use crate::centralizer::{
    centralizer_order, cycles_action, enumerate_centralizer, sigma_decompose, SigmaDecomposition,
    DEFAULT_CAP,
};
use crate::decision::FailedCondition;
use crate::dihedral::{
    are_conjugate_dihedral, are_element_conjugate_dihedral, block_reflection,
    componentwise_element_conjugate_dihedral, h_conjugate_involutions_block, DihedralHom,
};
use crate::error::{Error, Result};
use crate::oracle::{cent_orbit, enumerate_inverting_involutions, find_hom_conjugator};
use crate::perm::{all_permutations, gcd, Permutation};

/// Counterexamples kept per sub-audit.
const EXAMPLE_LIMIT: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Abelian,
    Dihedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// One block at a time: conjugacy under the block centralizer.
    BlockLevel,
    /// Whole homomorphisms against the conjugator search.
    HomLevel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusParams {
    pub family: Family,
    pub mode: Mode,
    pub n_max: usize,
    /// Largest `m` of `D_2m`; ignored for the abelian family.
    pub m_max: u128,
    pub cap: u128,
    /// Seed for the relabelling applied to the second homomorphism.
    pub seed: u64,
    /// Whether wall times are recorded. Without them, equal parameters give
    /// byte-identical reports.
    pub timings: bool,
}

impl CensusParams {
    pub fn new(family: Family, mode: Mode, n_max: usize) -> Self {
        CensusParams {
            family,
            mode,
            n_max,
            m_max: 6,
            cap: DEFAULT_CAP,
            seed: 0,
            timings: true,
        }
    }
}

/// One compared instance, with enough data to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u128>,
    pub sigma: String,
    /// Generator images of the first homomorphism, in cycle notation.
    pub phi: Vec<String>,
    pub psi: Vec<String>,
    pub theorem_verdict: bool,
    pub oracle_verdict: bool,
    pub failed_condition: FailedCondition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubAudit {
    pub name: String,
    /// Informational audits count divergences that are not failures.
    pub informational: bool,
    pub checked: u64,
    pub counterexamples: u64,
    pub examples: Vec<InstanceRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub instances_total: u64,
    pub agreements: u64,
    pub mismatches: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub parameters: CensusParams,
    pub totals: Totals,
    pub mismatches: Vec<InstanceRecord>,
    pub sub_audits: Vec<SubAudit>,
    /// Seconds per phase.
    pub timings: BTreeMap<String, f64>,
}

impl CensusReport {
    pub fn sub_audit(&self, name: &str) -> Option<&SubAudit> {
        self.sub_audits.iter().find(|a| a.name == name)
    }

    /// Zero mismatches and no counterexample in a non-informational audit.
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
            && self
                .sub_audits
                .iter()
                .all(|a| a.informational || a.counterexamples == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The mismatch table as CSV.
    pub fn write_mismatch_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Precondition(format!("csv output failed: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "degree",
            "m",
            "sigma",
            "phi",
            "psi",
            "theorem_verdict",
            "oracle_verdict",
            "failed_condition",
        ])
        .map_err(io)?;
        for r in &self.mismatches {
            w.write_record([
                r.degree.to_string(),
                r.m.map(|m| m.to_string()).unwrap_or_default(),
                r.sigma.clone(),
                r.phi.join(";"),
                r.psi.join(";"),
                r.theorem_verdict.to_string(),
                r.oracle_verdict.to_string(),
                r.failed_condition.as_str().to_string(),
            ])
            .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::Precondition(format!("csv output failed: {e}")))
    }
}

#[derive(Default)]
struct AuditTally {
    informational: bool,
    checked: u64,
    counterexamples: u64,
    examples: Vec<InstanceRecord>,
}

#[derive(Default)]
struct Tally {
    instances: u64,
    agreements: u64,
    mismatches: Vec<InstanceRecord>,
    audits: BTreeMap<&'static str, AuditTally>,
}

impl Tally {
    fn compare(&mut self, theorem: bool, oracle: bool, record: impl FnOnce() -> InstanceRecord) {
        self.instances += 1;
        if theorem == oracle {
            self.agreements += 1;
        } else {
            self.mismatches.push(record());
        }
    }

    /// Counts one check of property `name`; `holds == false` is a counterexample.
    fn audit(&mut self, name: &'static str, holds: bool, record: impl FnOnce() -> InstanceRecord) {
        self.audit_kind(name, false, holds, record);
    }

    fn divergence(
        &mut self,
        name: &'static str,
        agrees: bool,
        record: impl FnOnce() -> InstanceRecord,
    ) {
        self.audit_kind(name, true, agrees, record);
    }

    fn audit_kind(
        &mut self,
        name: &'static str,
        informational: bool,
        holds: bool,
        record: impl FnOnce() -> InstanceRecord,
    ) {
        let a = self.audits.entry(name).or_default();
        a.informational = informational;
        a.checked += 1;
        if !holds {
            a.counterexamples += 1;
            if a.examples.len() < EXAMPLE_LIMIT {
                a.examples.push(record());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.agreements += other.agreements;
        self.mismatches.extend(other.mismatches);
        for (name, b) in other.audits {
            let a = self.audits.entry(name).or_default();
            a.informational = b.informational;
            a.checked += b.checked;
            a.counterexamples += b.counterexamples;
            let room = EXAMPLE_LIMIT.saturating_sub(a.examples.len());
            a.examples.extend(b.examples.into_iter().take(room));
        }
    }

    fn into_report(self, params: CensusParams, timings: BTreeMap<String, f64>) -> CensusReport {
        CensusReport {
            totals: Totals {
                instances_total: self.instances,
                agreements: self.agreements,
                mismatches: self.mismatches.len() as u64,
            },
            mismatches: self.mismatches,
            sub_audits: self
                .audits
                .into_iter()
                .map(|(name, a)| SubAudit {
                    name: name.to_string(),
                    informational: a.informational,
                    checked: a.checked,
                    counterexamples: a.counterexamples,
                    examples: a.examples,
                })
                .collect(),
            parameters: params,
            timings,
        }
    }
}

struct Clock {
    enabled: bool,
    phases: BTreeMap<String, f64>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock {
            enabled,
            phases: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, phase: String, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.phases.entry(phase).or_default() += start.elapsed().as_secs_f64();
        }
        out
    }
}

/// Sums `f` over `0..len` in parallel, merging in index order.
fn sweep<F>(len: usize, f: F) -> Result<Tally>
where
    F: Fn(usize) -> Result<Tally> + Sync + Send,
{
    let parts: Vec<Result<Tally>> = (0..len).into_par_iter().map(f).collect();
    let mut total = Tally::default();
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

/// Partitions of `n` into positive parts, each in descending order; the
/// partitions themselves come in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The permutation with consecutive cycles `(1 .. l1)(l1+1 .. l1+l2)...`.
pub fn representative(lengths: &[usize]) -> Permutation {
    let n: usize = lengths.iter().sum();
    let mut images = Vec::with_capacity(n);
    let mut start = 1;
    for &l in lengths {
        images.extend((start + 1)..(start + l));
        images.push(start);
        start += l;
    }
    Permutation::from_images(&images).expect("consecutive cycles form a permutation")
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffle is a bijection")
}

fn record(
    sigma: &Permutation,
    m: Option<u128>,
    phi: &[Permutation],
    psi: &[Permutation],
    theorem: bool,
    oracle: bool,
    failed: FailedCondition,
) -> InstanceRecord {
    InstanceRecord {
        degree: sigma.degree(),
        m,
        sigma: sigma.format_cycles(),
        phi: phi.iter().map(Permutation::format_cycles).collect(),
        psi: psi.iter().map(Permutation::format_cycles).collect(),
        theorem_verdict: theorem,
        oracle_verdict: oracle,
        failed_condition: failed,
    }
}

/// Labels every element of `elements` with the index of its orbit under
/// conjugation by the centralizer, checking that orbit sizes divide its order.
fn orbit_labels(
    dec: &SigmaDecomposition,
    elements: &[Permutation],
    cap: u128,
    tally: &mut Tally,
) -> Result<HashMap<Permutation, usize>> {
    orbit_labels_with(dec, elements, tally, |x| cent_orbit(dec, x, cap))
}

/// As [`orbit_labels`], for elements that need not commute with `sigma`.
fn conjugation_labels(
    dec: &SigmaDecomposition,
    elements: &[Permutation],
    cap: u128,
    tally: &mut Tally,
) -> Result<HashMap<Permutation, usize>> {
    orbit_labels_with(dec, elements, tally, |x| {
        Ok(enumerate_centralizer(dec, cap)?
            .map(|rho| rho.conjugate_unchecked(x))
            .collect())
    })
}

fn orbit_labels_with(
    dec: &SigmaDecomposition,
    elements: &[Permutation],
    tally: &mut Tally,
    orbit_of: impl Fn(&Permutation) -> Result<BTreeSet<Permutation>>,
) -> Result<HashMap<Permutation, usize>> {
    let order = centralizer_order(dec);
    let sigma = dec.reassemble();
    let mut label = HashMap::new();
    let mut next = 0;
    for x in elements {
        if label.contains_key(x) {
            continue;
        }
        let orbit = orbit_of(x)?;
        let size = orbit.len() as u128;
        tally.audit("orbit-stabilizer", order.is_multiple_of(size), || {
            record(
                &sigma,
                None,
                std::slice::from_ref(x),
                &[],
                false,
                true,
                FailedCondition::None,
            )
        });
        for y in orbit {
            label.insert(y, next);
        }
        next += 1;
    }
    Ok(label)
}

fn uniform_shapes(n_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for d in 2..=n_max {
        for k in 1..=n_max / d {
            out.push((d, k));
        }
    }
    out
}

/// Abelian census; see [`Mode`] for the two sweeps.
pub fn census_abelian(params: &CensusParams) -> Result<CensusReport> {
    let mut clock = Clock::new(params.timings);
    let mut total = Tally::default();
    match params.mode {
        Mode::BlockLevel => {
            for (d, k) in uniform_shapes(params.n_max) {
                let t = clock.time(format!("d={d} k={k}"), || abelian_block(d, k, params.cap))?;
                total.merge(t);
            }
        }
        Mode::HomLevel => {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            for n in 1..=params.n_max {
                for shape in partitions(n) {
                    let g = random_permutation(n, &mut rng);
                    let t = clock.time(format!("n={n}"), || abelian_hom(&shape, &g, params.cap))?;
                    total.merge(t);
                }
            }
        }
    }
    Ok(total.into_report(params.clone(), clock.phases))
}

fn abelian_block(d: usize, k: usize, cap: u128) -> Result<Tally> {
    let sigma = representative(&vec![d; k]);
    let dec = sigma_decompose(&sigma);
    let block = &dec.blocks()[0];
    let elements: Vec<Permutation> = enumerate_centralizer(&dec, cap)?.collect();
    let mut pre = Tally::default();
    let label = orbit_labels(&dec, &elements, cap, &mut pre)?;

    let mut tally = sweep(elements.len(), |i| {
        let mut t = Tally::default();
        let pi = &elements[i];
        let sig = cent_signature(block, pi)?;
        let pi_type = pi.cycle_type();
        let pi_bar = cycles_action(block, pi)?.action.cycle_type();
        let hom = AbelianHom::new(sigma.clone(), pi.clone())?;
        for pj in &elements {
            let theorem = cent_conjugate_block(block, pi, pj)?;
            let oracle = label[pi] == label[pj];
            let rec = |th: bool, or: bool| {
                let failed = sig
                    .difference(&cent_signature(block, pj).expect("element centralizes"))
                    .unwrap_or(FailedCondition::None);
                record(
                    &sigma,
                    None,
                    &[sigma.clone(), pi.clone()],
                    &[sigma.clone(), pj.clone()],
                    th,
                    or,
                    failed,
                )
            };
            t.compare(theorem, oracle, || rec(theorem, oracle));

            let other = AbelianHom::new(sigma.clone(), pj.clone())?;
            let element_conj = are_element_conjugate_abelian(&hom, &other)?;
            t.audit("local-global-abelian", element_conj == oracle, || {
                rec(element_conj, oracle)
            });

            let same_type = pi_type == pj.cycle_type();
            if same_type {
                let criterion = element_conjugacy_criterion(&dec, pi, pj)?;
                t.audit(
                    "element-conjugacy-criterion",
                    criterion == element_conj,
                    || rec(criterion, element_conj),
                );
                if gcd(pi.order(), d as u128) == 1 {
                    t.audit("coprime-order-sufficiency", oracle, || rec(true, oracle));
                }
                if d == 2 && pi_bar == cycles_action(block, pj)?.action.cycle_type() {
                    t.audit("transposition-block-sufficiency", oracle, || {
                        rec(true, oracle)
                    });
                }
            }
            let existential = sig.matches_existentially(&cent_signature(block, pj)?);
            t.divergence(
                "existential-reading-divergence",
                existential == oracle,
                || rec(existential, oracle),
            );
        }
        Ok(t)
    })?;
    pre.merge(std::mem::take(&mut tally));
    Ok(pre)
}

fn abelian_hom(shape: &[usize], g: &Permutation, cap: u128) -> Result<Tally> {
    let sigma = representative(shape);
    let dec = sigma_decompose(&sigma);
    let single_block = dec.fixed_points().is_empty() && dec.blocks().len() == 1;
    let elements: Vec<Permutation> = enumerate_centralizer(&dec, cap)?.collect();
    let sigma_g = g.conjugate_unchecked(&sigma);

    sweep(elements.len(), |i| {
        let mut t = Tally::default();
        let pi = &elements[i];
        let phi = AbelianHom::new(sigma.clone(), pi.clone())?;
        for pj in &elements {
            let plain = AbelianHom::new(sigma.clone(), pj.clone())?;
            let psi = AbelianHom::new(sigma_g.clone(), g.conjugate_unchecked(pj))?;
            let decision = are_conjugate_abelian(&phi, &psi, false)?;
            let oracle = find_hom_conjugator(&phi.generators(), &psi.generators(), cap)?.is_some();
            let rec = |th: bool, or: bool| {
                record(
                    &sigma,
                    None,
                    &phi.generators(),
                    &psi.generators(),
                    th,
                    or,
                    decision.failed_condition,
                )
            };
            t.compare(decision.verdict, oracle, || rec(decision.verdict, oracle));

            let local = componentwise_element_conjugate(&phi, &psi)?;
            t.audit("local-global-abelian", local == oracle, || {
                rec(local, oracle)
            });

            let element_conj = are_element_conjugate_abelian(&phi, &psi)?;
            t.audit(
                "conjugate-implies-element-conjugate",
                !oracle || element_conj,
                || rec(element_conj, oracle),
            );

            let swapped = are_conjugate_abelian(&phi.swapped(), &psi.swapped(), false)?.verdict;
            t.audit("generator-swap-invariance", swapped == oracle, || {
                rec(swapped, oracle)
            });

            if single_block && pi.cycle_type() == pj.cycle_type() {
                let criterion = element_conjugacy_criterion(&dec, pi, pj)?;
                let brute = are_element_conjugate_abelian(&phi, &plain)?;
                t.audit("element-conjugacy-criterion", criterion == brute, || {
                    rec(criterion, brute)
                });
            }
        }
        Ok(t)
    })
}

/// Dihedral census. Hom-level mode sweeps `D_2m -> S_n` for `n <= n_max`,
/// `m <= m_max`; block-level mode sweeps involutions inverting a uniform
/// `sigma` with `kd <= n_max` and runs the reflection-count audits for
/// cycle lengths up to `n_max`.
pub fn census_dihedral(params: &CensusParams) -> Result<CensusReport> {
    let mut clock = Clock::new(params.timings);
    let mut total = Tally::default();
    match params.mode {
        Mode::BlockLevel => {
            for (d, k) in uniform_shapes(params.n_max) {
                let t = clock.time(format!("d={d} k={k}"), || dihedral_block(d, k, params.cap))?;
                total.merge(t);
            }
            let t = clock.time("paired-cycle-reflections".into(), || {
                paired_cycle_tally(params.n_max)
            });
            total.merge(t);
            let t = clock.time("single-cycle-reflections".into(), || {
                single_cycle_tally(params.n_max)
            });
            total.merge(t);
        }
        Mode::HomLevel => {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            for m in 1..=params.m_max {
                for n in 1..=params.n_max {
                    for shape in partitions(n) {
                        let sigma = representative(&shape);
                        if m % sigma.order() != 0 {
                            continue;
                        }
                        let g = random_permutation(n, &mut rng);
                        let t = clock.time(format!("m={m} n={n}"), || {
                            dihedral_hom(m, &sigma, &g, params.cap)
                        })?;
                        total.merge(t);
                    }
                }
            }
        }
    }
    Ok(total.into_report(params.clone(), clock.phases))
}

fn dihedral_block(d: usize, k: usize, cap: u128) -> Result<Tally> {
    let sigma = representative(&vec![d; k]);
    let dec = sigma_decompose(&sigma);
    let block = &dec.blocks()[0];
    let invols = enumerate_inverting_involutions(&sigma, cap)?;
    let mut tally = Tally::default();
    let label = conjugation_labels(&dec, &invols, cap, &mut tally)?;
    for s in &invols {
        let a = block_reflection(block, s)?;
        for t in &invols {
            let theorem = h_conjugate_involutions_block(block, s, t)?;
            let oracle = label[s] == label[t];
            let rec = |th: bool, or: bool| {
                record(
                    &sigma,
                    None,
                    &[sigma.clone(), s.clone()],
                    &[sigma.clone(), t.clone()],
                    th,
                    or,
                    FailedCondition::None,
                )
            };
            tally.compare(theorem, oracle, || rec(theorem, oracle));
            if d % 2 == 1 && a.block_cycle_type == block_reflection(block, t)?.block_cycle_type {
                tally.audit("odd-length-sufficiency", oracle, || rec(true, oracle));
            }
        }
    }
    Ok(tally)
}

fn dihedral_hom(m: u128, sigma: &Permutation, g: &Permutation, cap: u128) -> Result<Tally> {
    let dec = sigma_decompose(sigma);
    let invols = enumerate_inverting_involutions(sigma, cap)?;
    let sigma_g = g.conjugate_unchecked(sigma);
    let all_odd = !dec.blocks().is_empty() && dec.blocks().iter().all(|b| b.d() % 2 == 1);
    let fixed = dec.fixed_points();

    sweep(invols.len(), |i| {
        let mut t = Tally::default();
        let s = &invols[i];
        let phi = DihedralHom::new(m, sigma.clone(), s.clone())?;
        for s2 in &invols {
            let psi = DihedralHom::new(m, sigma_g.clone(), g.conjugate_unchecked(s2))?;
            let decision = are_conjugate_dihedral(&phi, &psi, false)?;
            let oracle = find_hom_conjugator(&phi.generators(), &psi.generators(), cap)?.is_some();
            let rec = |th: bool, or: bool| {
                record(
                    sigma,
                    Some(m),
                    &phi.generators(),
                    &psi.generators(),
                    th,
                    or,
                    decision.failed_condition,
                )
            };
            t.compare(decision.verdict, oracle, || rec(decision.verdict, oracle));

            let local = componentwise_element_conjugate_dihedral(&phi, &psi)?;
            t.audit("local-global-dihedral", local == oracle, || {
                rec(local, oracle)
            });

            let element_conj = are_element_conjugate_dihedral(&phi, &psi)?;
            t.audit(
                "conjugate-implies-element-conjugate",
                !oracle || element_conj,
                || rec(element_conj, oracle),
            );

            if all_odd {
                let mut same =
                    fixed.is_empty() || s.cycle_type_on(fixed)? == s2.cycle_type_on(fixed)?;
                for b in dec.blocks() {
                    same &= s.cycle_type_on(&b.support())? == s2.cycle_type_on(&b.support())?;
                }
                if same {
                    t.audit("odd-length-sufficiency", oracle, || rec(true, oracle));
                }
            }
        }
        Ok(t)
    })
}

/// For two disjoint `d`-cycles `tau1 = (1 .. d)`, `tau2 = (d+1 .. 2d)`: the
/// products of `d` transpositions pairing their points that conjugate `tau1`
/// to `tau2^-1` number exactly `d` and form one orbit under conjugation by
/// `<tau2>`. One check per `d` in `2..=d_max`.
pub fn audit_paired_cycle_reflections(d_max: usize) -> SubAudit {
    single_audit(paired_cycle_tally(d_max))
}

fn paired_cycle_tally(d_max: usize) -> Tally {
    let mut tally = Tally::default();
    for d in 2..=d_max {
        let sigma = representative(&[d, d]);
        let mut shape = vec![1; d + 1];
        shape[0] = d;
        let tau1 = representative(&shape);
        let tau2 = sigma.compose_unchecked(&tau1.inverse());
        let target = tau2.inverse();
        let mut found = Vec::new();
        for f in all_permutations(d) {
            let mut images = vec![0; 2 * d];
            for i in 0..d {
                let j = d + f.apply(i + 1);
                images[i] = j;
                images[j - 1] = i + 1;
            }
            let x = Permutation::from_images(&images).expect("pairing is a bijection");
            if x.conjugate_unchecked(&tau1) == target {
                found.push(x);
            }
        }
        let orbit = tau_orbit(&tau2, found.first());
        let holds = found.len() == d && orbit.len() == d && found.iter().all(|x| orbit.contains(x));
        tally.audit("paired-cycle-reflections", holds, || {
            record(
                &sigma,
                None,
                &found,
                &[],
                holds,
                true,
                FailedCondition::None,
            )
        });
    }
    tally
}

/// For a single `d`-cycle `tau`: exactly `d` involutions of `S_d` invert it,
/// forming one orbit under conjugation by `<tau>` for odd `d` and two for
/// even `d`. One check per `d` in `2..=d_max`.
pub fn audit_single_cycle_reflections(d_max: usize) -> SubAudit {
    single_audit(single_cycle_tally(d_max))
}

fn single_cycle_tally(d_max: usize) -> Tally {
    let mut tally = Tally::default();
    for d in 2..=d_max {
        let tau = representative(&[d]);
        let tau_inv = tau.inverse();
        let found: Vec<Permutation> = all_permutations(d)
            .filter(|x| {
                x.compose_unchecked(x).is_identity() && x.conjugate_unchecked(&tau) == tau_inv
            })
            .collect();
        let mut orbits = 0;
        let mut seen: Vec<Permutation> = Vec::new();
        for x in &found {
            if !seen.contains(x) {
                orbits += 1;
                seen.extend(tau_orbit(&tau, Some(x)));
            }
        }
        let expected_orbits = if d % 2 == 1 { 1 } else { 2 };
        let holds = found.len() == d && orbits == expected_orbits;
        tally.audit("single-cycle-reflections", holds, || {
            record(&tau, None, &found, &[], holds, true, FailedCondition::None)
        });
    }
    tally
}

/// `{ tau^z x tau^-z }` over all `z`.
fn tau_orbit(tau: &Permutation, x: Option<&Permutation>) -> Vec<Permutation> {
    let Some(x) = x else {
        return Vec::new();
    };
    let mut out: Vec<Permutation> = Vec::new();
    let mut power = Permutation::identity(tau.degree());
    for _ in 0..tau.order() {
        let y = power.conjugate_unchecked(x);
        if !out.contains(&y) {
            out.push(y);
        }
        power = tau.compose_unchecked(&power);
    }
    out
}

/// Runs the census selected by `params.family`.
pub fn run_census(params: &CensusParams) -> Result<CensusReport> {
    match params.family {
        Family::Abelian => census_abelian(params),
        Family::Dihedral => census_dihedral(params),
    }
}

fn single_audit(tally: Tally) -> SubAudit {
    let (name, a) = tally
        .audits
        .into_iter()
        .next()
        .expect("audit ran at least once");
    SubAudit {
        name: name.to_string(),
        informational: a.informational,
        checked: a.checked,
        counterexamples: a.counterexamples,
        examples: a.examples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet(family: Family, mode: Mode, n_max: usize) -> CensusParams {
        CensusParams {
            timings: false,
            ..CensusParams::new(family, mode, n_max)
        }
    }

    #[test]
    fn partitions_of_small_numbers() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(4)[0], vec![4]);
        assert_eq!(partitions(4)[4], vec![1, 1, 1, 1]);
    }

    #[test]
    fn representative_has_requested_type() {
        let p = representative(&[3, 2, 1]);
        assert_eq!(p.format_cycles(), "(1 2 3)(4 5)");
        assert_eq!(p.cycle_type().lengths(), &[3, 2, 1]);
    }

    #[test]
    fn transposition_block_has_four_agreeing_pairs() {
        let r = census_abelian(&quiet(Family::Abelian, Mode::BlockLevel, 2)).unwrap();
        assert_eq!(r.totals.instances_total, 4);
        assert_eq!(r.totals.agreements, 4);
        assert!(r.is_clean());
    }

    #[test]
    fn small_abelian_sweeps_are_clean() {
        for mode in [Mode::BlockLevel, Mode::HomLevel] {
            let r = census_abelian(&quiet(Family::Abelian, mode, 4)).unwrap();
            assert!(r.is_clean(), "{}", r.to_json());
            assert_eq!(
                r.totals.agreements + r.totals.mismatches,
                r.totals.instances_total
            );
        }
    }

    #[test]
    fn small_dihedral_sweeps_are_clean() {
        let mut p = quiet(Family::Dihedral, Mode::HomLevel, 4);
        p.m_max = 4;
        assert!(census_dihedral(&p).unwrap().is_clean());
        let r = census_dihedral(&quiet(Family::Dihedral, Mode::BlockLevel, 5)).unwrap();
        assert!(r.is_clean(), "{}", r.to_json());
        assert_eq!(r.sub_audit("single-cycle-reflections").unwrap().checked, 4);
    }

    #[test]
    fn reflection_count_audits_hold() {
        let a = audit_paired_cycle_reflections(5);
        assert_eq!((a.checked, a.counterexamples), (4, 0));
        let b = audit_single_cycle_reflections(7);
        assert_eq!((b.checked, b.counterexamples), (6, 0));
    }

    #[test]
    fn square_reflections_split_into_two_classes() {
        let sigma = representative(&[4]);
        let dec = sigma_decompose(&sigma);
        let invols = enumerate_inverting_involutions(&sigma, DEFAULT_CAP).unwrap();
        let mut t = Tally::default();
        let labels = conjugation_labels(&dec, &invols, DEFAULT_CAP, &mut t).unwrap();
        let classes: std::collections::BTreeSet<_> = labels.values().collect();
        assert_eq!(classes.len(), 2);
        let block = &dec.blocks()[0];
        let vertex = Permutation::parse_cycles("(2 4)", 4).unwrap();
        let edge = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
        assert!(!h_conjugate_involutions_block(block, &vertex, &edge).unwrap());
        assert_ne!(labels[&vertex], labels[&edge]);
    }

    #[test]
    fn reports_are_reproducible_and_round_trip() {
        let p = quiet(Family::Abelian, Mode::HomLevel, 4);
        let a = census_abelian(&p).unwrap().to_json();
        let b = census_abelian(&p).unwrap().to_json();
        assert_eq!(a, b);
        let back: CensusReport = serde_json::from_str(&a).unwrap();
        assert_eq!(back.to_json(), a);
    }

    #[test]
    fn csv_has_header_only_when_clean() {
        let r = census_abelian(&quiet(Family::Abelian, Mode::BlockLevel, 3)).unwrap();
        let mut buf = Vec::new();
        r.write_mismatch_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("degree,m,sigma"));
    }
}
