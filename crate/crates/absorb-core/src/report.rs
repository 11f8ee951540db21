//! Report envelope and serialization.
//!
//! Every command emits one `Report`.  JSON serialization is canonical:
//! objects are key-sorted (serde_json's BTreeMap-backed `Value`), numbers
//! are integers, and all run-dependent timing lives under the `timing` key
//! (plus `report.elapsed_ms`), which `strip_timing` removes for
//! byte-comparison of runs.  The `command` echo is rebuilt from semantic
//! inputs only, never from execution knobs like `--jobs`, so reports from
//! different worker counts compare equal.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::verify::{IdealDesc, SweepRow, TheoremReport, WitnessInfo, SWEEP_PREDICATES};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Ring structure payload for the `ring` command.
#[derive(Debug, Clone, Serialize)]
pub struct RingInfo {
    pub size: usize,
    pub one: u32,
    pub unit_count: usize,
    pub elements: Vec<String>,
    /// "pass", "skipped (size)" or the violated axiom.
    pub axioms: String,
}

/// Ideal payload for the `ideals` command.
#[derive(Debug, Clone, Serialize)]
pub struct IdealInfo {
    pub gens: Vec<String>,
    pub gen_indices: Vec<u32>,
    pub members: Vec<u32>,
    pub member_text: Vec<String>,
    pub proper: bool,
}

/// Bounded monomial-scan payload for the `example21` command.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub n: u32,
    pub degree_bound: u32,
    pub variables: usize,
    pub p_gens: Vec<String>,
    pub i_gens: Vec<String>,
    pub ip_gens: Vec<String>,
    pub radical_p_gens: Vec<String>,
    /// The construction is advertised as not n-absorbing: the witness tuple
    /// confirming that, if one exists up to the bound.
    pub not_n_absorbing_witness: Option<Vec<String>>,
    pub not_n_absorbing_confirmed: bool,
    /// "monomial-refuted" or "monomial-clean-up-to-bound"; refutation is
    /// sound, cleanliness is only bound-relative.
    pub relative_primary_side: String,
    pub relative_primary_witness: Option<Vec<String>>,
    /// True when the scan refutes the advertised relative-primary property.
    pub conflict_with_advertised_property: bool,
    pub witnesses_revalidated: bool,
}

/// Runs the bounded monomial scan and assembles its payload, flagging any
/// refutation of the advertised relative-primary property.
pub fn example_report(n: usize, deg_bound: u32, force: bool) -> Result<ExampleReport> {
    let scan = crate::monomial::check_example_2_1(n, deg_bound, force)?;
    let revalidated = crate::monomial::revalidate_example_scan(&scan, n);
    let ids = &scan.ideals;
    let refuted = scan.i_primary_refuted.is_some();
    Ok(ExampleReport {
        n: n as u32,
        degree_bound: deg_bound,
        variables: ids.nvars,
        p_gens: ids.p.gens_text(),
        i_gens: ids.i.gens_text(),
        ip_gens: ids.ip.gens_text(),
        radical_p_gens: ids.rad_p.gens_text(),
        not_n_absorbing_witness: scan
            .not_n_absorbing
            .as_ref()
            .map(|w| w.iter().map(|m| m.text()).collect()),
        not_n_absorbing_confirmed: scan.not_n_absorbing.is_some(),
        relative_primary_side: if refuted {
            "monomial-refuted".to_string()
        } else {
            "monomial-clean-up-to-bound".to_string()
        },
        relative_primary_witness: scan
            .i_primary_refuted
            .as_ref()
            .map(|w| w.iter().map(|m| m.text()).collect()),
        conflict_with_advertised_property: refuted,
        witnesses_revalidated: revalidated,
    })
}

/// Verdict payload for the `check` command.
#[derive(Debug, Clone, Serialize)]
pub struct CheckPayload {
    pub predicate: String,
    pub holds: bool,
    pub witness: Option<WitnessInfo>,
    pub p: IdealDesc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<IdealDesc>,
}

/// The envelope shared by every command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub reading: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring_info: Option<RingInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Vec<IdealInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<SweepRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<ExampleReport>,
    pub timing: Timing,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            params: BTreeMap::new(),
            reading: BTreeMap::new(),
            ring: None,
            ring_info: None,
            ideals: None,
            check: None,
            report: None,
            table: None,
            example: None,
            timing: Timing { elapsed_ms: 0 },
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }
}

/// Removes `timing` objects and `elapsed_ms` fields recursively; reports
/// from identical inputs must then compare byte-identical.
pub fn strip_timing(value: &mut Value) {
    match value {
        Value::Object(map) => {
            map.remove("timing");
            map.remove("elapsed_ms");
            for (_, v) in map.iter_mut() {
                strip_timing(v);
            }
        }
        Value::Array(items) => {
            for v in items.iter_mut() {
                strip_timing(v);
            }
        }
        _ => {}
    }
}

/// Canonical serialization: key-sorted JSON via `serde_json::Value`.
pub fn to_canonical_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    serde_json::to_string_pretty(&value).expect("value prints")
}

pub fn emit(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_canonical_json(report)),
        Format::Csv => emit_csv(report),
        Format::Text => Ok(emit_text(report)),
    }
}

/// CSV is defined for the tabular sweep payload only.
fn emit_csv(report: &Report) -> Result<String> {
    let Some(rows) = &report.table else {
        return Err(Error::UnsupportedFormatForPayload("csv".to_string()));
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "ring".to_string(),
        "P".to_string(),
        "I".to_string(),
        "n".to_string(),
        "skipped".to_string(),
    ];
    header.extend(SWEEP_PREDICATES.iter().map(|s| s.to_string()));
    w.write_record(&header).expect("csv write");
    for row in rows {
        let mut record = vec![
            row.ring.clone(),
            row.p.gens.join(" "),
            row.i.gens.join(" "),
            row.n.to_string(),
            row.skipped.to_string(),
        ];
        for pred in SWEEP_PREDICATES {
            record.push(match row.verdicts.get(pred) {
                Some(v) => v.holds.to_string(),
                None => String::new(),
            });
        }
        w.write_record(&record).expect("csv write");
    }
    Ok(String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8"))
}

/// Human-oriented summary; excluded from the determinism guarantees.
fn emit_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", report.command));
    if let Some(ring) = &report.ring {
        out.push_str(&format!("ring: {ring}\n"));
    }
    if let Some(info) = &report.ring_info {
        out.push_str(&format!(
            "size {}, one at index {}, {} units, axioms: {}\n",
            info.size, info.one, info.unit_count, info.axioms
        ));
    }
    if let Some(ideals) = &report.ideals {
        out.push_str(&format!("{} ideals\n", ideals.len()));
        for (k, i) in ideals.iter().enumerate() {
            out.push_str(&format!(
                "  [{k}] ({}) with {} members\n",
                i.gens.join(", "),
                i.members.len()
            ));
        }
    }
    if let Some(check) = &report.check {
        out.push_str(&format!("{}: {}\n", check.predicate, check.holds));
        if let Some(w) = &check.witness {
            out.push_str(&format!(
                "  witness ({}) failing [{}]\n",
                w.tuple_text.join(", "),
                w.clauses.join(", ")
            ));
        }
    }
    if let Some(r) = &report.report {
        out.push_str(&format!(
            "law {}: {} instances, {} hypothesis hits, {} skipped, {} failures\n",
            r.theorem,
            r.instances,
            r.hypothesis_hits,
            r.skipped,
            r.failures.len()
        ));
        for f in &r.failures {
            out.push_str(&format!(
                "  {} in {} (revalidated: {})\n",
                f.conclusion,
                f.ring,
                f.revalidated.unwrap_or(false)
            ));
        }
    }
    if let Some(rows) = &report.table {
        out.push_str(&format!("{} sweep rows\n", rows.len()));
    }
    if let Some(e) = &report.example {
        out.push_str(&format!(
            "variables {}, P = ({}), I = ({})\n",
            e.variables,
            e.p_gens.join(", "),
            e.i_gens.join(", ")
        ));
        out.push_str(&format!(
            "not n-absorbing: {}\n",
            match &e.not_n_absorbing_witness {
                Some(w) => format!("confirmed by ({})", w.join(", ")),
                None => "no monomial witness up to bound".to_string(),
            }
        ));
        out.push_str(&format!("relative primary side: {}", e.relative_primary_side));
        if let Some(w) = &e.relative_primary_witness {
            out.push_str(&format!(" by ({})", w.join(", ")));
        }
        out.push('\n');
        if e.conflict_with_advertised_property {
            out.push_str("CONFLICT: the advertised relative-primary property is refuted\n");
        }
    }
    out.push_str(&format!("elapsed: {} ms\n", report.timing.elapsed_ms));
    out
}
