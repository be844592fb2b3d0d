//! Command-line front end. Verdicts are printed as JSON.
//!
//! Exit codes: 0 when the command ran, 1 for usage or input errors, 2 when a
//! search would exceed the enumeration cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abelian::{
    are_conjugate_abelian, are_element_conjugate_abelian, are_generator_conjugate, cent_signature,
    AbelianHom,
};
use crate::census::{run_census, CensusParams, Family, Mode};
use crate::centralizer::{centralizer_order, sigma_decompose, DEFAULT_CAP};
use crate::decision::ConjugacyDecision;
use crate::dihedral::{
    are_conjugate_dihedral, are_element_conjugate_dihedral, are_generator_conjugate_dihedral,
    reflection_signature, DihedralHom,
};
use crate::error::{Error, Result};
use crate::oracle::{cent_orbit, find_hom_conjugator};
use crate::perm::Permutation;

#[derive(Debug, Parser)]
#[command(name = "homconj", version)]
#[command(about = "Decide conjugacy of homomorphisms into S_n from abelian and dihedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide conjugacy, element-conjugacy and generator-conjugacy
    Decide {
        #[command(subcommand)]
        source: Source,
        /// Search for and print a conjugator when the pair is conjugate
        #[arg(long, global = true)]
        witness: bool,
    },
    /// Element-conjugacy only
    ElementConjugate {
        #[command(subcommand)]
        source: Source,
    },
    /// Generator-conjugacy only
    GeneratorConjugate {
        #[command(subcommand)]
        source: Source,
    },
    /// Conjugacy invariants of a second image relative to the first
    Signature {
        #[command(subcommand)]
        target: SignatureTarget,
    },
    /// Orbit of PI under conjugation by the centralizer of SIGMA
    Orbit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        pi: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Brute-force search for a common conjugator of generator lists
    Oracle {
        #[arg(long)]
        n: usize,
        /// Generator image of the first homomorphism (repeatable)
        #[arg(long, required = true)]
        phi: Vec<String>,
        /// Generator image of the second homomorphism (repeatable)
        #[arg(long, required = true)]
        psi: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Compare decisions against the search over every small instance
    Census(CensusArgs),
}

#[derive(Debug, Subcommand)]
enum Source {
    /// Source group abelian on generators a, b
    Abelian(AbelianArgs),
    /// Source group D_2m on rotation r and reflection s
    Dihedral(DihedralArgs),
}

#[derive(Debug, Args)]
struct AbelianArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    phi_a: String,
    #[arg(long)]
    phi_b: String,
    #[arg(long)]
    psi_a: String,
    #[arg(long)]
    psi_b: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
}

#[derive(Debug, Args)]
struct DihedralArgs {
    #[arg(long)]
    n: usize,
    /// Order of the rotation in the source group; defaults to the order of phi(r)
    #[arg(long)]
    m: Option<u128>,
    #[arg(long)]
    phi_r: String,
    #[arg(long)]
    phi_s: String,
    #[arg(long)]
    psi_r: String,
    #[arg(long)]
    psi_s: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
}

#[derive(Debug, Subcommand)]
enum SignatureTarget {
    /// Per-block centralizer signature of B relative to A
    Abelian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Reflection signature of S relative to R
    Dihedral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 6)]
    m_max: u128,
    #[arg(long, value_enum, default_value = "hom-level")]
    mode: Mode,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leave wall times out so identical runs give identical bytes
    #[arg(long)]
    no_timings: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
}

/// Runs the command line `argv` (program name first). Returns the exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CapExceeded { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn parse(text: &str, n: usize) -> Result<Permutation> {
    Permutation::parse_cycles(text, n)
}

fn print(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{value}").map_err(|e| Error::Precondition(format!("cannot write output: {e}")))
}

fn abelian_pair(a: &AbelianArgs) -> Result<(AbelianHom, AbelianHom)> {
    Ok((
        AbelianHom::new(parse(&a.phi_a, a.n)?, parse(&a.phi_b, a.n)?)?,
        AbelianHom::new(parse(&a.psi_a, a.n)?, parse(&a.psi_b, a.n)?)?,
    ))
}

fn dihedral_pair(a: &DihedralArgs) -> Result<(DihedralHom, DihedralHom)> {
    let phi_r = parse(&a.phi_r, a.n)?;
    let m = a.m.unwrap_or_else(|| phi_r.order());
    Ok((
        DihedralHom::new(m, phi_r, parse(&a.phi_s, a.n)?)?,
        DihedralHom::new(m, parse(&a.psi_r, a.n)?, parse(&a.psi_s, a.n)?)?,
    ))
}

fn verdict_json(
    decision: &ConjugacyDecision,
    element: bool,
    generator: bool,
    phi: &[Permutation],
    psi: &[Permutation],
) -> Result<Value> {
    let mut v = json!({
        "conjugate": decision.verdict,
        "element_conjugate": element,
        "generator_conjugate": generator,
        "failed_condition": decision.failed_condition,
    });
    if let Some(w) = &decision.witness {
        let verified = phi
            .iter()
            .zip(psi)
            .all(|(f, g)| w.conjugate_unchecked(f) == *g);
        if !verified {
            return Err(Error::Inconsistent(format!(
                "witness {w} does not conjugate"
            )));
        }
        v["witness"] = json!(w.format_cycles());
        v["witness_verified"] = json!(true);
    }
    Ok(v)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Decide { source, witness } => {
            let v = match source {
                Source::Abelian(a) => {
                    let (phi, psi) = abelian_pair(&a)?;
                    let d = are_conjugate_abelian(&phi, &psi, witness)?;
                    verdict_json(
                        &d,
                        are_element_conjugate_abelian(&phi, &psi)?,
                        are_generator_conjugate(&phi, &psi)?,
                        &phi.generators(),
                        &psi.generators(),
                    )?
                }
                Source::Dihedral(a) => {
                    let (phi, psi) = dihedral_pair(&a)?;
                    let d = are_conjugate_dihedral(&phi, &psi, witness)?;
                    verdict_json(
                        &d,
                        are_element_conjugate_dihedral(&phi, &psi)?,
                        are_generator_conjugate_dihedral(&phi, &psi)?,
                        &phi.generators(),
                        &psi.generators(),
                    )?
                }
            };
            print(out, &v)
        }
        Command::ElementConjugate { source } => {
            let verdict = match source {
                Source::Abelian(a) => {
                    let (phi, psi) = abelian_pair(&a)?;
                    are_element_conjugate_abelian(&phi, &psi)?
                }
                Source::Dihedral(a) => {
                    let (phi, psi) = dihedral_pair(&a)?;
                    are_element_conjugate_dihedral(&phi, &psi)?
                }
            };
            print(out, &json!({ "element_conjugate": verdict }))
        }
        Command::GeneratorConjugate { source } => {
            let verdict = match source {
                Source::Abelian(a) => {
                    let (phi, psi) = abelian_pair(&a)?;
                    are_generator_conjugate(&phi, &psi)?
                }
                Source::Dihedral(a) => {
                    let (phi, psi) = dihedral_pair(&a)?;
                    are_generator_conjugate_dihedral(&phi, &psi)?
                }
            };
            print(out, &json!({ "generator_conjugate": verdict }))
        }
        Command::Signature { target } => match target {
            SignatureTarget::Abelian { n, a, b } => {
                let hom = AbelianHom::new(parse(&a, n)?, parse(&b, n)?)?;
                let dec = sigma_decompose(&hom.a);
                let blocks = dec
                    .blocks()
                    .iter()
                    .map(|block| cent_signature(block, &hom.b))
                    .collect::<Result<Vec<_>>>()?;
                let fixed = dec.fixed_points();
                let fix_part_type = if fixed.is_empty() {
                    Default::default()
                } else {
                    hom.b.cycle_type_on(fixed)?
                };
                print(
                    out,
                    &json!({ "blocks": blocks, "fix_part_type": fix_part_type }),
                )
            }
            SignatureTarget::Dihedral { n, r, s } => {
                let (r, s) = (parse(&r, n)?, parse(&s, n)?);
                let sig = reflection_signature(&sigma_decompose(&r), &s)?;
                print(out, &json!(sig))
            }
        },
        Command::Orbit { n, sigma, pi, cap } => {
            let dec = sigma_decompose(&parse(&sigma, n)?);
            let orbit = cent_orbit(&dec, &parse(&pi, n)?, cap)?;
            print(
                out,
                &json!({
                    "centralizer_order": centralizer_order(&dec),
                    "size": orbit.len(),
                    "orbit": orbit.iter().map(Permutation::format_cycles).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Oracle { n, phi, psi, cap } => {
            let phi = phi
                .iter()
                .map(|p| parse(p, n))
                .collect::<Result<Vec<_>>>()?;
            let psi = psi
                .iter()
                .map(|p| parse(p, n))
                .collect::<Result<Vec<_>>>()?;
            let found = find_hom_conjugator(&phi, &psi, cap)?;
            print(
                out,
                &json!({ "conjugator": found.map(|w| w.format_cycles()) }),
            )
        }
        Command::Census(c) => census(c, out),
    }
}

fn census(c: CensusArgs, out: &mut dyn Write) -> Result<()> {
    let params = CensusParams {
        family: c.family,
        mode: c.mode,
        n_max: c.n_max,
        m_max: c.m_max,
        cap: c.cap,
        seed: c.seed,
        timings: !c.no_timings,
    };
    let report = run_census(&params)?;
    let mut bytes = Vec::new();
    match c.format {
        Format::Json => {
            bytes.extend(report.to_json().into_bytes());
            bytes.push(b'\n');
        }
        Format::Csv => report.write_mismatch_csv(&mut bytes)?,
    }
    let io = |e: std::io::Error| Error::Precondition(format!("cannot write report: {e}"));
    match c.out {
        Some(path) => std::fs::write(path, bytes).map_err(io),
        None => out.write_all(&bytes).map_err(io),
    }
}
