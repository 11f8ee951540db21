//! Command-line front end: parse ring specs and ideal literals, dispatch
//! checks, sweeps, law verification and the monomial example scan, and emit
//! deterministic reports.
//!
//! Exit codes: 0 completed (the verdict itself may be false), 1 a failed
//! `check --assert`, 2 input or parse errors, 3 a size or cost cap refusal.
//! All reports go to standard output, diagnostics to standard error.  The
//! `command` echo inside a report contains semantic inputs only, so runs
//! with different `--jobs` or `--format` stay byte-comparable.

use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::ideal::{enumerate_ideals, Ideal};

use crate::parse::{parse_ideal_gens, parse_ring_spec, parse_usize_list};
use crate::predicate::{
    find_i_tuple, is_i_primary, is_n_absorbing, is_n_absorbing_i_primary,
    is_n_absorbing_i_primary_colon, is_n_absorbing_primary, is_primary, is_prime,
    is_weakly_n_absorbing_primary, is_weakly_primary, is_weakly_prime, ScanOpts, Verdict,
};
use crate::report::{emit, example_report, CheckPayload, Format, IdealInfo, Report, RingInfo};
use crate::ring::{build_ring, check_axioms, quotient_ring, RingRef};
use crate::verify::{
    default_battery, ideal_desc, run_theorem, sweep, Reading, VerifyParams, WitnessInfo,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "absorb",
    version,
    about = "Finite commutative rings, ideal predicates and exhaustive law verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format: json, csv (sweep only) or text.
    #[arg(long, global = true, default_value = "json")]
    pub format: String,

    /// Worker threads for the tuple scans (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Stop scans at the first violation found by any worker; the witness is
    /// then not guaranteed minimal.
    #[arg(long, global = true)]
    pub fast: bool,

    /// Ignore the scan cost cap.
    #[arg(long, global = true)]
    pub force: bool,

    /// Let the radical disjunct omit any of the n+1 positions instead of
    /// the printed 1..=n.
    #[arg(long = "symmetric-disjuncts", global = true)]
    pub symmetric_disjuncts: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a ring, report its structure and axiom status.
    Ring {
        /// Ring spec, e.g. "Z/12", "Z/4 x Z/9", "Z/2[x]/(x^2+x+1)".
        #[arg(long)]
        ring: String,
        /// Optional generators of an ideal J: report the quotient ring R/J.
        #[arg(long = "J")]
        j: Option<String>,
    },
    /// Enumerate every ideal of the ring.
    Ideals {
        #[arg(long)]
        ring: String,
        #[arg(long = "J")]
        j: Option<String>,
    },
    /// Decide one predicate for an ideal, with a minimal witness on failure.
    Check {
        #[arg(long)]
        ring: String,
        /// Generators of P, comma separated element literals.
        #[arg(long)]
        ideal: String,
        /// Generators of the relative ideal I (required by I-predicates).
        #[arg(long = "I")]
        i: Option<String>,
        /// Quotient first by the ideal generated by these elements.
        #[arg(long = "J")]
        j: Option<String>,
        /// Absorbing index.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// One of: prime, weakly-prime, primary, weakly-primary,
        /// n-absorbing, n-absorbing-primary, I-primary,
        /// n-absorbing-I-primary, n-absorbing-I-primary-colon,
        /// weakly-n-absorbing-primary, i-tuple.
        #[arg(long)]
        predicate: String,
        /// Exit 1 when the predicate does not hold.
        #[arg(long)]
        assert: bool,
    },
    /// Predicate grid over every ideal pair of the ring.
    Sweep {
        #[arg(long)]
        ring: String,
        #[arg(long = "J")]
        j: Option<String>,
        /// Largest absorbing index (the grid runs n = 1..=n).
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Run one verification law over a ring battery.
    Verify {
        /// Law id: 2.2, 2.4, 2.5, 2.6, 2.7, 2.9, 2.10, 2.11 or 2.12.
        #[arg(long)]
        theorem: String,
        /// "default" or a comma-separated list of ring specs.
        #[arg(long, default_value = "default")]
        rings: String,
        /// Absorbing indices, e.g. "2" or "1,2" or "1-3".
        #[arg(long, default_value = "1,2")]
        n: String,
        /// Exponents m for the power laws.
        #[arg(long, default_value = "1,2")]
        m: String,
        /// Per-factor indices n_i for the intersection/product law.
        #[arg(long, default_value = "1,1")]
        k: String,
        /// Disable one named hypothesis clause (necessity probe).
        #[arg(long)]
        drop: Option<String>,
        /// primary or alternate reading of ambiguous hypotheses.
        #[arg(long, default_value = "primary")]
        reading: String,
    },
    /// Bounded monomial scan of the worked polynomial-ring construction.
    Example21 {
        #[arg(long)]
        n: usize,
        #[arg(long = "deg-bound", default_value_t = 3)]
        deg_bound: u32,
    },
}

impl Cli {
    fn scan_opts(&self) -> ScanOpts {
        ScanOpts {
            minimal_witness: !self.fast,
            symmetric: self.symmetric_disjuncts,
            force: self.force,
        }
    }

    /// Semantic flags shared by every echo.
    fn echo_suffix(&self) -> String {
        let mut out = String::new();
        if self.fast {
            out.push_str(" --fast");
        }
        if self.symmetric_disjuncts {
            out.push_str(" --symmetric-disjuncts");
        }
        out
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Builds the ring named by `--ring`, applying `--J` as a quotient.  Returns
/// the working ring and the projection from the parsed base ring, if any.
fn build_working_ring(
    spec_text: &str,
    j: &Option<String>,
) -> Result<(RingRef, Option<(RingRef, Vec<u32>)>)> {
    let spec = parse_ring_spec(spec_text)?;
    let base = build_ring(&spec)?;
    match j {
        None => Ok((base.clone(), None)),
        Some(j_text) => {
            let gens = parse_ideal_gens(&base, j_text)?;
            let j_ideal = Ideal::from_generators(&base, &gens)?;
            let (quot, proj) = quotient_ring(&base, &j_ideal)?;
            Ok((quot, Some((base, proj))))
        }
    }
}

/// Parses ideal generators against the base ring and pushes them through the
/// quotient projection when `--J` is in effect.
fn parse_working_ideal(
    working: &RingRef,
    base: &Option<(RingRef, Vec<u32>)>,
    text: &str,
) -> Result<Ideal> {
    match base {
        None => {
            let gens = parse_ideal_gens(working, text)?;
            Ideal::from_generators(working, &gens)
        }
        Some((base_ring, proj)) => {
            let gens = parse_ideal_gens(base_ring, text)?;
            let base_ideal = Ideal::from_generators(base_ring, &gens)?;
            Ok(base_ideal.push_forward(working, proj))
        }
    }
}

fn witness_of(ring: &RingRef, v: &Verdict) -> Option<WitnessInfo> {
    v.witness.as_ref().map(|tuple| WitnessInfo {
        tuple: tuple.iter().map(|e| e.0).collect(),
        tuple_text: tuple.iter().map(|&e| ring.element_text(e)).collect(),
        clauses: v.clause_tags.clone(),
        aux: Default::default(),
    })
}

pub const PREDICATE_NAMES: [&str; 11] = [
    "prime",
    "weakly-prime",
    "primary",
    "weakly-primary",
    "n-absorbing",
    "n-absorbing-primary",
    "I-primary",
    "n-absorbing-I-primary",
    "n-absorbing-I-primary-colon",
    "weakly-n-absorbing-primary",
    "i-tuple",
];

fn run_predicate(
    name: &str,
    p: &Ideal,
    i: Option<&Ideal>,
    n: usize,
    scan: &ScanOpts,
) -> Result<(bool, Option<WitnessInfo>)> {
    let ring = p.ring().clone();
    let need_i = || -> Result<&Ideal> {
        i.ok_or_else(|| Error::InvalidArgument(format!("predicate {name} requires --I")))
    };
    let verdict = match name {
        "prime" => is_prime(p, scan)?,
        "weakly-prime" => is_weakly_prime(p, scan)?,
        "primary" => is_primary(p, scan)?,
        "weakly-primary" => is_weakly_primary(p, scan)?,
        "n-absorbing" => is_n_absorbing(p, n, scan)?,
        "n-absorbing-primary" => is_n_absorbing_primary(p, n, scan)?,
        "I-primary" => is_i_primary(p, need_i()?, scan)?,
        "n-absorbing-I-primary" => is_n_absorbing_i_primary(p, need_i()?, n, scan)?,
        "n-absorbing-I-primary-colon" => {
            is_n_absorbing_i_primary_colon(p, need_i()?, n, scan)?
        }
        "weakly-n-absorbing-primary" => is_weakly_n_absorbing_primary(p, n, scan)?,
        "i-tuple" => {
            // Existence search: holds means no obstruction tuple exists.
            let found = find_i_tuple(p, need_i()?, n, scan)?;
            return Ok(match found {
                None => (true, None),
                Some(tuple) => (
                    false,
                    Some(WitnessInfo {
                        tuple: tuple.iter().map(|e| e.0).collect(),
                        tuple_text: tuple.iter().map(|&e| ring.element_text(e)).collect(),
                        clauses: vec!["obstruction_tuple".to_string()],
                        aux: Default::default(),
                    }),
                ),
            });
        }
        other => return Err(Error::UnknownPredicate(other.to_string())),
    };
    Ok((verdict.holds, witness_of(&ring, &verdict)))
}

/// Runs the parsed command and assembles its report.
pub fn run_command(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let scan = cli.scan_opts();
    let mut report = with_jobs(cli.jobs, || -> Result<Report> {
        match &cli.command {
            Command::Ring { ring, j } => {
                let (working, _) = build_working_ring(ring, j)?;
                let mut rep = Report::new(format!(
                    "ring --ring {ring}{}{}",
                    j.as_ref().map(|j| format!(" --J {j}")).unwrap_or_default(),
                    cli.echo_suffix()
                ));
                rep.ring = Some(working.spec_text().to_string());
                let axioms = if working.size() <= 100 {
                    match check_axioms(&working) {
                        None => "pass".to_string(),
                        Some(failure) => failure,
                    }
                } else {
                    format!("skipped (size {} > 100)", working.size())
                };
                rep.ring_info = Some(RingInfo {
                    size: working.size(),
                    one: working.one().0,
                    unit_count: working.elements().filter(|&e| working.is_unit(e)).count(),
                    elements: working.elements().map(|e| working.element_text(e)).collect(),
                    axioms,
                });
                Ok(rep)
            }
            Command::Ideals { ring, j } => {
                let (working, _) = build_working_ring(ring, j)?;
                let ideals = enumerate_ideals(&working)?;
                let mut rep = Report::new(format!(
                    "ideals --ring {ring}{}{}",
                    j.as_ref().map(|j| format!(" --J {j}")).unwrap_or_default(),
                    cli.echo_suffix()
                ));
                rep.ring = Some(working.spec_text().to_string());
                rep.ideals = Some(
                    ideals
                        .iter()
                        .map(|x| {
                            let desc = ideal_desc(x);
                            IdealInfo {
                                gens: desc.gens,
                                gen_indices: desc.gen_indices,
                                members: x.members().map(|m| m as u32).collect(),
                                member_text: x
                                    .members()
                                    .map(|m| working.element_text(crate::ring::Elem(m as u32)))
                                    .collect(),
                                proper: x.is_proper(),
                            }
                        })
                        .collect(),
                );
                Ok(rep)
            }
            Command::Check { ring, ideal, i, j, n, predicate, assert: _ } => {
                let (working, base) = build_working_ring(ring, j)?;
                let p = parse_working_ideal(&working, &base, ideal)?;
                let i_ideal = i
                    .as_ref()
                    .map(|text| parse_working_ideal(&working, &base, text))
                    .transpose()?;
                let (holds, witness) =
                    run_predicate(predicate, &p, i_ideal.as_ref(), *n, &scan)?;
                let mut echo = format!("check --ring {ring} --ideal {ideal}");
                if let Some(i) = i {
                    echo.push_str(&format!(" --I {i}"));
                }
                if let Some(j) = j {
                    echo.push_str(&format!(" --J {j}"));
                }
                echo.push_str(&format!(" --n {n} --predicate {predicate}"));
                echo.push_str(&cli.echo_suffix());
                let mut rep = Report::new(echo);
                rep.ring = Some(working.spec_text().to_string());
                rep.param("n", *n);
                rep.param("predicate", predicate.clone());
                rep.check = Some(CheckPayload {
                    predicate: predicate.clone(),
                    holds,
                    witness,
                    p: ideal_desc(&p),
                    i: i_ideal.as_ref().map(ideal_desc),
                });
                Ok(rep)
            }
            Command::Sweep { ring, j, n } => {
                let (working, _) = build_working_ring(ring, j)?;
                let rows = sweep(&working, *n, &scan)?;
                let mut rep = Report::new(format!(
                    "sweep --ring {ring}{} --n {n}{}",
                    j.as_ref().map(|j| format!(" --J {j}")).unwrap_or_default(),
                    cli.echo_suffix()
                ));
                rep.ring = Some(working.spec_text().to_string());
                rep.param("n_max", *n);
                rep.table = Some(rows);
                Ok(rep)
            }
            Command::Verify { theorem, rings, n, m, k, drop, reading } => {
                let ring_list = if rings == "default" {
                    default_battery()?
                } else {
                    rings
                        .split(',')
                        .map(|t| build_ring(&parse_ring_spec(t.trim())?))
                        .collect::<Result<Vec<_>>>()?
                };
                let reading_mode = match reading.as_str() {
                    "primary" => Reading::Primary,
                    "alternate" => Reading::Alternate,
                    other => {
                        return Err(Error::InvalidArgument(format!(
                            "unknown reading {other:?} (expected primary or alternate)"
                        )))
                    }
                };
                let params = VerifyParams {
                    n_list: parse_usize_list(n)?,
                    m_list: parse_usize_list(m)?,
                    k_lists: vec![parse_usize_list(k)?],
                    reading: reading_mode,
                    dropped: drop.clone(),
                    scan,
                };
                let theorem_report = run_theorem(theorem, &ring_list, &params)?;
                let mut echo = format!(
                    "verify --theorem {theorem} --rings {rings} --n {n} --m {m} --k {k}"
                );
                if let Some(d) = drop {
                    echo.push_str(&format!(" --drop {d}"));
                }
                echo.push_str(&format!(" --reading {reading}"));
                echo.push_str(&cli.echo_suffix());
                let mut rep = Report::new(echo);
                rep.param("theorem", theorem.clone());
                rep.param("n", serde_json::to_value(&params.n_list).unwrap());
                rep.param("m", serde_json::to_value(&params.m_list).unwrap());
                rep.reading = theorem_report.reading.clone();
                rep.report = Some(theorem_report);
                Ok(rep)
            }
            Command::Example21 { n, deg_bound } => {
                let mut rep =
                    Report::new(format!("example21 --n {n} --deg-bound {deg_bound}"));
                rep.param("n", *n);
                rep.param("deg_bound", *deg_bound);
                rep.example = Some(example_report(*n, *deg_bound, cli.force)?);
                Ok(rep)
            }
        }
    })?;
    report.timing.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Full CLI entry: parse, run, emit, map to an exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match run_command(&cli) {
        Ok(report) => match emit(&report, format) {
            Ok(text) => {
                println!("{}", text.trim_end_matches('\n'));
                let failed_assert = matches!(
                    (&cli.command, &report.check),
                    (Command::Check { assert: true, .. }, Some(payload)) if !payload.holds
                );
                if failed_assert {
                    1
                } else {
                    0
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CostCapExceeded { .. } | Error::SizeCapExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}
