//! Exhaustive verification harness.
//!
//! Each `verify_*` function scans an instance grid (ring, ideals, n, ...)
//! for one implication law between the predicate checkers, records which
//! hypothesis clauses each instance satisfies, evaluates the conclusion on
//! hypothesis-satisfying instances only, and re-validates every failure
//! witness by direct membership recomputation before reporting it.  Grids
//! iterate in a fixed order, so reports are byte-stable across runs and
//! worker counts.
//!
//! Where a law's printed statement is ambiguous the harness runs a declared
//! primary reading (optionally an alternate one) and names the reading in
//! the report.  `dropped` disables one named hypothesis clause to probe its
//! necessity; the resulting conclusion failures are findings, not errors.
//!
//! Relative (I-dependent) laws quantify I over proper ideals, matching the
//! standing "fixed proper ideal I" convention; the I = R vacuity of the
//! predicates themselves is covered by the predicate tests and sweeps.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::ideal::{enumerate_ideals, Ideal};
use crate::predicate::{
    absorbing_primary_scan, find_i_tuple, is_i_primary, is_n_absorbing,
    is_n_absorbing_i_primary, is_n_absorbing_i_primary_colon, is_n_absorbing_primary,
    is_primary, is_prime, is_weakly_n_absorbing_primary, is_weakly_primary, is_weakly_prime,
    recheck_absorbing_primary_violation, recheck_colon_violation, ScanOpts, Verdict,
};
use crate::ring::{build_ring, quotient_ring, Elem, Ring, RingRef, RingSpec};
use crate::{Error, Result};

/// Which reading of an ambiguously printed hypothesis to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    Primary,
    Alternate,
}

/// Parameters shared by the theorem harnesses.
#[derive(Debug, Clone)]
pub struct VerifyParams {
    /// Absorbing indices n to scan.
    pub n_list: Vec<usize>,
    /// Exponents m (power-difference and tuple-product laws).
    pub m_list: Vec<usize>,
    /// Per-factor absorbing indices for the intersection/product law.
    pub k_lists: Vec<Vec<usize>>,
    pub reading: Reading,
    /// Name of one hypothesis clause to disable, for necessity probes.
    pub dropped: Option<String>,
    pub scan: ScanOpts,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n_list: vec![1, 2],
            m_list: vec![1, 2],
            k_lists: vec![vec![1, 1]],
            reading: Reading::Primary,
            dropped: None,
            scan: ScanOpts::default(),
        }
    }
}

/// The default ring battery for sweeps and theorem runs.
pub fn default_battery_specs() -> Vec<RingSpec> {
    vec![
        RingSpec::Zn(4),
        RingSpec::Zn(6),
        RingSpec::Zn(8),
        RingSpec::Zn(9),
        RingSpec::Zn(12),
        RingSpec::Zn(16),
        RingSpec::Zn(27),
        RingSpec::Zn(30),
        RingSpec::PolyQuot { p: 2, f: vec![0, 0, 1] },
        RingSpec::PolyQuot { p: 3, f: vec![0, 0, 1] },
        RingSpec::PolyQuot { p: 2, f: vec![1, 1, 1] },
        RingSpec::Product(vec![RingSpec::Zn(4), RingSpec::Zn(9)]),
    ]
}

pub fn default_battery() -> Result<Vec<RingRef>> {
    default_battery_specs().iter().map(build_ring).collect()
}

/// Serializable description of an ideal: canonical generators plus their
/// indices, enough for an external tool to rebuild the member set.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct IdealDesc {
    pub gens: Vec<String>,
    pub gen_indices: Vec<u32>,
}

pub fn ideal_desc(x: &Ideal) -> IdealDesc {
    let gens = x.canonical_gens();
    IdealDesc {
        gens: if gens.is_empty() {
            vec!["0".to_string()]
        } else {
            gens.iter().map(|&g| x.ring().element_text(g)).collect()
        },
        gen_indices: gens.iter().map(|g| g.0).collect(),
    }
}

/// A witness in a report: element indices, their rendered text, the failed
/// clause tags, and any law-specific auxiliary data.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct WitnessInfo {
    pub tuple: Vec<u32>,
    pub tuple_text: Vec<String>,
    pub clauses: Vec<String>,
    pub aux: BTreeMap<String, serde_json::Value>,
}

fn witness_info(ring: &Ring, v: &Verdict) -> Option<WitnessInfo> {
    v.witness.as_ref().map(|tuple| WitnessInfo {
        tuple: tuple.iter().map(|e| e.0).collect(),
        tuple_text: tuple.iter().map(|&e| ring.element_text(e)).collect(),
        clauses: v.clause_tags.clone(),
        aux: BTreeMap::new(),
    })
}

fn elem_witness(ring: &Ring, e: Elem, clause: &str) -> WitnessInfo {
    WitnessInfo {
        tuple: vec![e.0],
        tuple_text: vec![ring.element_text(e)],
        clauses: vec![clause.to_string()],
        aux: BTreeMap::new(),
    }
}

/// One evaluated instance: which hypothesis clauses held, whether the
/// conclusion held, and the re-validated witness when it did not.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<IdealDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_list: Option<Vec<IdealDesc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<IdealDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<IdealDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_elem: Option<String>,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_list: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub conclusion: String,
    pub hypothesis_flags: BTreeMap<String, bool>,
    pub conclusion_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessInfo>,
    /// Present on failures: the witness re-validated by membership-only
    /// recomputation.  A false value is a harness bug, not a finding.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub revalidated: Option<bool>,
}

impl InstanceRecord {
    fn new(ring: &Ring, conclusion: &str, n: usize) -> Self {
        InstanceRecord {
            ring: ring.spec_text().to_string(),
            p: None,
            p_list: None,
            i: None,
            j: None,
            r_elem: None,
            n: n as u32,
            n_list: None,
            m: None,
            conclusion: conclusion.to_string(),
            hypothesis_flags: BTreeMap::new(),
            conclusion_holds: true,
            witness: None,
            revalidated: None,
        }
    }
}

/// Aggregated outcome of one law over the instance grid.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub reading: BTreeMap<String, String>,
    pub rings: Vec<String>,
    pub instances: u64,
    pub hypothesis_hits: u64,
    pub skipped: u64,
    pub failures: Vec<InstanceRecord>,
    pub dropped_hypothesis: Option<String>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    fn new(theorem: &str, rings: &[RingRef], params: &VerifyParams) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            reading: BTreeMap::new(),
            rings: rings.iter().map(|r| r.spec_text().to_string()).collect(),
            instances: 0,
            hypothesis_hits: 0,
            skipped: 0,
            failures: Vec::new(),
            dropped_hypothesis: params.dropped.clone(),
            elapsed_ms: 0,
        }
    }

    fn note_reading(&mut self, key: &str, value: &str) {
        self.reading.insert(key.to_string(), value.to_string());
    }
}

/// Hypothesis clause names per law, the vocabulary of `dropped`.
pub fn hypothesis_names(theorem: &str) -> Result<&'static [&'static str]> {
    Ok(match theorem {
        "2.2" => &[],
        "2.4" => &["n_absorbing_I_primary", "radical_product_identity"],
        "2.5" => &[
            "each_Pi_ni_absorbing_I_primary",
            "each_radical_Pi_ni_absorbing_I_primary",
        ],
        "2.6" => &["radical_I_radP_in_IP", "radical_n_minus_1_absorbing"],
        "2.7" => &["annihilator_in_r"],
        "2.9" => &[
            "P_n_absorbing_I_primary",
            "J_in_IP",
            "quotient_P_n_absorbing_I_primary",
            "IP_in_J",
            "JP_in_IP",
            "J_n_absorbing_I_primary",
            "quotient_P_weakly_n_absorbing_primary",
        ],
        "2.10" => &["IP_n_absorbing_primary", "P_n_absorbing_I_primary"],
        "2.11" => &["P_n_absorbing_I_primary"],
        "2.12" => &["P_n_absorbing_I_primary", "P_not_n_absorbing_primary"],
        other => return Err(Error::UnknownTheorem(other.to_string())),
    })
}

fn check_dropped(theorem: &str, params: &VerifyParams) -> Result<()> {
    if let Some(name) = &params.dropped {
        if !hypothesis_names(theorem)?.contains(&name.as_str()) {
            return Err(Error::UnknownHypothesis {
                theorem: theorem.to_string(),
                hypothesis: name.clone(),
            });
        }
    }
    Ok(())
}

/// All hypothesis flags hold, ignoring the dropped clause.
fn hyps_ok(flags: &BTreeMap<String, bool>, dropped: Option<&String>) -> bool {
    flags
        .iter()
        .all(|(name, &ok)| ok || dropped.is_some_and(|d| d == name))
}

fn disjunct_reading(scan: &ScanOpts) -> &'static str {
    if scan.symmetric {
        "symmetric (radical omission over all n+1 positions)"
    } else {
        "as printed (radical omission over positions 1..=n)"
    }
}

/// Per-ring context: the ideal lattice, an index by member set, and verdict
/// caches so repeated grid cells reuse scans.
struct RingCtx {
    ideals: Vec<Ideal>,
    index_of: HashMap<BitSet, usize>,
    scan: ScanOpts,
    nip: HashMap<(usize, usize, usize), Verdict>,
    nap: HashMap<(usize, usize), Verdict>,
}

impl RingCtx {
    fn new(ring: &RingRef, scan: ScanOpts) -> Result<Self> {
        let ideals = enumerate_ideals(ring)?;
        let index_of = ideals
            .iter()
            .enumerate()
            .map(|(k, v)| (v.member_set().clone(), k))
            .collect();
        Ok(RingCtx { ideals, index_of, scan, nip: HashMap::new(), nap: HashMap::new() })
    }

    fn proper_indices(&self) -> Vec<usize> {
        (0..self.ideals.len())
            .filter(|&k| self.ideals[k].is_proper())
            .collect()
    }

    /// Index of an ideal produced by ideal algebra; the enumerated lattice
    /// is complete, so the lookup always succeeds.
    fn index(&self, x: &Ideal) -> usize {
        self.index_of[x.member_set()]
    }

    fn n_absorbing_i_primary(&mut self, p: usize, i: usize, n: usize) -> Result<Verdict> {
        if let Some(v) = self.nip.get(&(p, i, n)) {
            return Ok(v.clone());
        }
        let v = is_n_absorbing_i_primary(&self.ideals[p], &self.ideals[i], n, &self.scan)?;
        self.nip.insert((p, i, n), v.clone());
        Ok(v)
    }

    fn n_absorbing_primary(&mut self, p: usize, n: usize) -> Result<Verdict> {
        if let Some(v) = self.nap.get(&(p, n)) {
            return Ok(v.clone());
        }
        let v = is_n_absorbing_primary(&self.ideals[p], n, &self.scan)?;
        self.nap.insert((p, n), v.clone());
        Ok(v)
    }
}

/// Dispatch by law id.
pub fn run_theorem(
    theorem: &str,
    rings: &[RingRef],
    params: &VerifyParams,
) -> Result<TheoremReport> {
    check_dropped(theorem, params)?;
    match theorem {
        "2.2" => verify_prop_2_2(rings, params),
        "2.4" => verify_prop_2_4(rings, params),
        "2.5" => verify_thm_2_5(rings, params),
        "2.6" => verify_prop_2_6(rings, params),
        "2.7" => verify_prop_2_7(rings, params),
        "2.9" => verify_thm_2_9(rings, params),
        "2.10" => verify_prop_2_10(rings, params),
        "2.11" => verify_thm_2_11(rings, params),
        "2.12" => verify_thm_2_12(rings, params),
        other => Err(Error::UnknownTheorem(other.to_string())),
    }
}

pub const ALL_THEOREMS: [&str; 9] =
    ["2.2", "2.4", "2.5", "2.6", "2.7", "2.9", "2.10", "2.11", "2.12"];

/// Oracle equivalence: the direct tuple checker and the colon-containment
/// checker must agree on `holds` for every (P, I, n); I ranges over the
/// whole lattice here, including R.
pub fn verify_prop_2_2(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.2", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        let all: Vec<usize> = (0..ctx.ideals.len()).collect();
        for &p in &ctx.proper_indices() {
            for &i in &all {
                for &n in &params.n_list {
                    report.instances += 1;
                    report.hypothesis_hits += 1;
                    let direct = ctx.n_absorbing_i_primary(p, i, n)?;
                    let colon = is_n_absorbing_i_primary_colon(
                        &ctx.ideals[p],
                        &ctx.ideals[i],
                        n,
                        &params.scan,
                    )?;
                    if direct.holds == colon.holds {
                        continue;
                    }
                    let mut rec = InstanceRecord::new(ring, "checkers_agree", n);
                    rec.p = Some(ideal_desc(&ctx.ideals[p]));
                    rec.i = Some(ideal_desc(&ctx.ideals[i]));
                    rec.conclusion_holds = false;
                    let failing = if direct.holds { &colon } else { &direct };
                    let mut w = witness_info(ring, failing);
                    if let Some(w) = w.as_mut() {
                        w.aux.insert("direct_holds".into(), direct.holds.into());
                        w.aux.insert("colon_holds".into(), colon.holds.into());
                    }
                    rec.witness = w;
                    let tuple: Vec<Elem> = failing.witness.clone().unwrap_or_default();
                    let revalidated = if direct.holds {
                        recheck_colon_violation(
                            &ctx.ideals[p],
                            &ctx.ideals[i],
                            n,
                            params.scan.symmetric,
                            &tuple,
                        )
                    } else {
                        let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                        recheck_absorbing_primary_violation(
                            &ctx.ideals[p],
                            Some(&ip),
                            n,
                            params.scan.symmetric,
                            &tuple,
                        )
                    };
                    rec.revalidated = Some(revalidated);
                    report.failures.push(rec);
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Radical transfer: if P is n-absorbing I-primary and √(IP) = I·√P, then
/// √P is n-absorbing I-primary.
pub fn verify_prop_2_4(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.4", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        for &p in &ctx.proper_indices() {
            let rad_p = ctx.ideals[p].radical();
            let rad_idx = ctx.index(&rad_p);
            for &i in &ctx.proper_indices() {
                let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                let i_rad_p = ctx.ideals[i].product(&rad_p)?;
                let radical_identity = ip.radical() == i_rad_p;
                for &n in &params.n_list {
                    report.instances += 1;
                    let mut flags = BTreeMap::new();
                    flags.insert(
                        "n_absorbing_I_primary".to_string(),
                        ctx.n_absorbing_i_primary(p, i, n)?.holds,
                    );
                    flags.insert("radical_product_identity".to_string(), radical_identity);
                    if !hyps_ok(&flags, params.dropped.as_ref()) {
                        continue;
                    }
                    report.hypothesis_hits += 1;
                    let verdict = ctx.n_absorbing_i_primary(rad_idx, i, n)?;
                    if verdict.holds {
                        continue;
                    }
                    let mut rec = InstanceRecord::new(ring, "radical_P_n_absorbing_I_primary", n);
                    rec.p = Some(ideal_desc(&ctx.ideals[p]));
                    rec.i = Some(ideal_desc(&ctx.ideals[i]));
                    rec.hypothesis_flags = flags;
                    rec.conclusion_holds = false;
                    rec.witness = witness_info(ring, &verdict);
                    rec.revalidated = Some(recheck_absorbing_primary_violation(
                        &rad_p,
                        Some(&i_rad_p),
                        n,
                        params.scan.symmetric,
                        &verdict.witness.clone().unwrap_or_default(),
                    ));
                    report.failures.push(rec);
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Intersections and products: if each P_i (and, under the primary reading,
/// each √P_i) is n_i-absorbing I-primary, then ∩P_i and ΠP_i are
/// (Σn_i)-absorbing I-primary.
pub fn verify_thm_2_5(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.5", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    report.note_reading(
        "hypothesis",
        match params.reading {
            Reading::Primary => {
                "each P_i and each radical √P_i required n_i-absorbing I-primary \
                 (the printed hypothesis conflates I_i, P_i and q_i)"
            }
            Reading::Alternate => "only each P_i required n_i-absorbing I-primary",
        },
    );
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        let proper = ctx.proper_indices();
        for n_is in &params.k_lists {
            let k = n_is.len();
            let total_n: usize = n_is.iter().sum();
            let mut tuple_idx = vec![0usize; k];
            'tuples: loop {
                let p_indices: Vec<usize> = tuple_idx.iter().map(|&t| proper[t]).collect();
                for &i in &proper {
                    let mut each_p = true;
                    let mut each_rad = true;
                    for (&p, &ni) in p_indices.iter().zip(n_is) {
                        each_p &= ctx.n_absorbing_i_primary(p, i, ni)?.holds;
                        let rad_idx = {
                            let rad = ctx.ideals[p].radical();
                            ctx.index(&rad)
                        };
                        each_rad &= ctx.n_absorbing_i_primary(rad_idx, i, ni)?.holds;
                    }
                    let mut flags = BTreeMap::new();
                    flags.insert("each_Pi_ni_absorbing_I_primary".to_string(), each_p);
                    if params.reading == Reading::Primary {
                        flags.insert(
                            "each_radical_Pi_ni_absorbing_I_primary".to_string(),
                            each_rad,
                        );
                    }
                    let hit = hyps_ok(&flags, params.dropped.as_ref());
                    let mut inter = ctx.ideals[p_indices[0]].clone();
                    let mut prod = ctx.ideals[p_indices[0]].clone();
                    for &p in &p_indices[1..] {
                        inter = inter.intersection(&ctx.ideals[p])?;
                        prod = prod.product(&ctx.ideals[p])?;
                    }
                    for (conclusion, target) in [
                        ("intersection_total_n_absorbing_I_primary", &inter),
                        ("product_total_n_absorbing_I_primary", &prod),
                    ] {
                        report.instances += 1;
                        if !hit {
                            continue;
                        }
                        report.hypothesis_hits += 1;
                        let t_idx = ctx.index(target);
                        let verdict = ctx.n_absorbing_i_primary(t_idx, i, total_n)?;
                        if verdict.holds {
                            continue;
                        }
                        let mut rec = InstanceRecord::new(ring, conclusion, total_n);
                        rec.p_list = Some(
                            p_indices.iter().map(|&p| ideal_desc(&ctx.ideals[p])).collect(),
                        );
                        rec.p = Some(ideal_desc(target));
                        rec.i = Some(ideal_desc(&ctx.ideals[i]));
                        rec.n_list = Some(n_is.iter().map(|&v| v as u32).collect());
                        rec.hypothesis_flags = flags.clone();
                        rec.conclusion_holds = false;
                        rec.witness = witness_info(ring, &verdict);
                        let exclude = ctx.ideals[i].product(target)?;
                        rec.revalidated = Some(recheck_absorbing_primary_violation(
                            target,
                            Some(&exclude),
                            total_n,
                            params.scan.symmetric,
                            &verdict.witness.clone().unwrap_or_default(),
                        ));
                        report.failures.push(rec);
                    }
                }
                // Odometer over k-tuples of proper-ideal indices.
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break 'tuples;
                    }
                    pos -= 1;
                    tuple_idx[pos] += 1;
                    if tuple_idx[pos] < proper.len() {
                        break;
                    }
                    tuple_idx[pos] = 0;
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Absorbing upgrade: if √(I·√P) ⊆ IP and √P is (n-1)-absorbing, then P is
/// n-absorbing I-primary (n ≥ 2).
pub fn verify_prop_2_6(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.6", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        for &p in &ctx.proper_indices() {
            let rad_p = ctx.ideals[p].radical();
            for &i in &ctx.proper_indices() {
                let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                let i_rad_p = ctx.ideals[i].product(&rad_p)?;
                let containment = ip.contains_ideal(&i_rad_p.radical())?;
                for &n in params.n_list.iter().filter(|&&n| n >= 2) {
                    report.instances += 1;
                    let mut flags = BTreeMap::new();
                    flags.insert("radical_I_radP_in_IP".to_string(), containment);
                    flags.insert(
                        "radical_n_minus_1_absorbing".to_string(),
                        is_n_absorbing(&rad_p, n - 1, &params.scan)?.holds,
                    );
                    if !hyps_ok(&flags, params.dropped.as_ref()) {
                        continue;
                    }
                    report.hypothesis_hits += 1;
                    let verdict = ctx.n_absorbing_i_primary(p, i, n)?;
                    if verdict.holds {
                        continue;
                    }
                    let mut rec = InstanceRecord::new(ring, "P_n_absorbing_I_primary", n);
                    rec.p = Some(ideal_desc(&ctx.ideals[p]));
                    rec.i = Some(ideal_desc(&ctx.ideals[i]));
                    rec.hypothesis_flags = flags;
                    rec.conclusion_holds = false;
                    rec.witness = witness_info(ring, &verdict);
                    rec.revalidated = Some(recheck_absorbing_primary_violation(
                        &ctx.ideals[p],
                        Some(&ip),
                        n,
                        params.scan.symmetric,
                        &verdict.witness.clone().unwrap_or_default(),
                    ));
                    report.failures.push(rec);
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Principal-ideal law: for a nonunit r with (0 : r) ⊆ <r>, the m-power
/// relative condition on <r> (difference by <r^m> = <r>^m) is equivalent to
/// <r> being n-absorbing primary.  Both directions are recorded.
pub fn verify_prop_2_7(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.7", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    report.note_reading(
        "statement",
        "a read as r; the relative side excludes <r^m> = <r>^m, following the use \
         of r^m in the argument (the printed text mixes <a>, <r> and I^m)",
    );
    let m_list: Vec<usize> = params.m_list.iter().copied().filter(|&m| m >= 2).collect();
    for ring in rings {
        for r in ring.elements() {
            if ring.is_unit(r) {
                report.skipped += 1;
                continue;
            }
            let principal = Ideal::from_generators(ring, &[r])?;
            let annihilator = Ideal::zero(ring).colon(r);
            let annihilator_in_r = principal.contains_ideal(&annihilator)?;
            for &m in &m_list {
                let r_pow_m = principal.power(m);
                for &n in &params.n_list {
                    let mut flags = BTreeMap::new();
                    flags.insert("annihilator_in_r".to_string(), annihilator_in_r);
                    let hit = hyps_ok(&flags, params.dropped.as_ref());
                    let a = is_n_absorbing_primary(&principal, n, &params.scan)?;
                    let b = absorbing_primary_scan(&principal, Some(&r_pow_m), n, &params.scan)?;

                    // Direction A => B: the relative side cannot fail alone.
                    report.instances += 1;
                    if hit {
                        report.hypothesis_hits += 1;
                        if a.holds && !b.holds {
                            let mut rec = InstanceRecord::new(
                                ring,
                                "absorbing_primary_implies_relative",
                                n,
                            );
                            rec.p = Some(ideal_desc(&principal));
                            rec.r_elem = Some(ring.element_text(r));
                            rec.m = Some(m as u32);
                            rec.hypothesis_flags = flags.clone();
                            rec.conclusion_holds = false;
                            rec.witness = witness_info(ring, &b);
                            rec.revalidated = Some(recheck_absorbing_primary_violation(
                                &principal,
                                Some(&r_pow_m),
                                n,
                                params.scan.symmetric,
                                &b.witness.clone().unwrap_or_default(),
                            ));
                            report.failures.push(rec);
                        }
                    }

                    // Direction B => A.
                    report.instances += 1;
                    if hit {
                        report.hypothesis_hits += 1;
                        if b.holds && !a.holds {
                            let mut rec = InstanceRecord::new(
                                ring,
                                "relative_implies_absorbing_primary",
                                n,
                            );
                            rec.p = Some(ideal_desc(&principal));
                            rec.r_elem = Some(ring.element_text(r));
                            rec.m = Some(m as u32);
                            rec.hypothesis_flags = flags.clone();
                            rec.conclusion_holds = false;
                            rec.witness = witness_info(ring, &a);
                            rec.revalidated = Some(recheck_absorbing_primary_violation(
                                &principal,
                                None,
                                n,
                                params.scan.symmetric,
                                &a.witness.clone().unwrap_or_default(),
                            ));
                            report.failures.push(rec);
                        }
                    }
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Quotient transfer: the four statements moving the relative predicate
/// between R and R/J for proper J ⊊ P, with the image ideal (X+J)/J standing
/// in for every pushed-forward ideal.
pub fn verify_thm_2_9(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.9", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    report.note_reading(
        "quotient_ideals",
        "I(P/J) read as the image product π(I)π(P) = (IP+J)/J",
    );
    report.note_reading(
        "weakly",
        "weakly n-absorbing primary (used but never defined) taken as the \
         nonzero-products specialization",
    );
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        let proper = ctx.proper_indices();
        for &j in &proper {
            let mut quotient_cache: Option<(RingRef, Vec<u32>)> = None;
            for &p in &proper {
                if !ctx.ideals[p].contains_ideal(&ctx.ideals[j])? {
                    continue;
                }
                if p == j {
                    // Degenerate P/J = (0) cell.
                    report.skipped += 1;
                    continue;
                }
                let (q_ring, proj) = match &quotient_cache {
                    Some(pair) => pair.clone(),
                    None => {
                        let pair = quotient_ring(ring, &ctx.ideals[j])?;
                        quotient_cache = Some(pair.clone());
                        pair
                    }
                };
                let p_img = ctx.ideals[p].push_forward(&q_ring, &proj);
                for &i in &proper {
                    let i_img = ctx.ideals[i].push_forward(&q_ring, &proj);
                    let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                    let jp = ctx.ideals[j].product(&ctx.ideals[p])?;
                    let j_desc = ideal_desc(&ctx.ideals[j]);
                    for &n in &params.n_list {
                        let base = ctx.n_absorbing_i_primary(p, i, n)?;
                        let quot = is_n_absorbing_i_primary(&p_img, &i_img, n, &params.scan)?;
                        let quot_weak = is_weakly_n_absorbing_primary(&p_img, n, &params.scan)?;
                        let j_rel = ctx.n_absorbing_i_primary(j, i, n)?;
                        let ip_in_j = ctx.ideals[j].contains_ideal(&ip)?;
                        let j_in_ip = ip.contains_ideal(&ctx.ideals[j])?;
                        let jp_in_ip = ip.contains_ideal(&jp)?;

                        // Part 1: the relative predicate descends to R/J.
                        let mut flags = BTreeMap::new();
                        flags.insert("P_n_absorbing_I_primary".to_string(), base.holds);
                        record_part(
                            &mut report,
                            params,
                            &q_ring,
                            flags,
                            "part1_quotient_P_n_absorbing_I_primary",
                            &quot,
                            n,
                            |rec| {
                                rec.p = Some(ideal_desc(&p_img));
                                rec.i = Some(ideal_desc(&i_img));
                                rec.j = Some(j_desc.clone());
                            },
                            || {
                                let exclude = i_img.product(&p_img).expect("same ring");
                                recheck_absorbing_primary_violation(
                                    &p_img,
                                    Some(&exclude),
                                    n,
                                    params.scan.symmetric,
                                    &quot.witness.clone().unwrap_or_default(),
                                )
                            },
                        );

                        // Part 2: with J ⊆ IP the quotient predicate lifts back.
                        let mut flags = BTreeMap::new();
                        flags.insert("J_in_IP".to_string(), j_in_ip);
                        flags.insert(
                            "quotient_P_n_absorbing_I_primary".to_string(),
                            quot.holds,
                        );
                        record_part(
                            &mut report,
                            params,
                            ring,
                            flags,
                            "part2_P_n_absorbing_I_primary",
                            &base,
                            n,
                            |rec| {
                                rec.p = Some(ideal_desc(&ctx.ideals[p]));
                                rec.i = Some(ideal_desc(&ctx.ideals[i]));
                                rec.j = Some(j_desc.clone());
                            },
                            || {
                                recheck_absorbing_primary_violation(
                                    &ctx.ideals[p],
                                    Some(&ip),
                                    n,
                                    params.scan.symmetric,
                                    &base.witness.clone().unwrap_or_default(),
                                )
                            },
                        );

                        // Part 3: with IP ⊆ J the image is weakly relative.
                        let mut flags = BTreeMap::new();
                        flags.insert("IP_in_J".to_string(), ip_in_j);
                        flags.insert("P_n_absorbing_I_primary".to_string(), base.holds);
                        record_part(
                            &mut report,
                            params,
                            &q_ring,
                            flags,
                            "part3_quotient_P_weakly_n_absorbing_primary",
                            &quot_weak,
                            n,
                            |rec| {
                                rec.p = Some(ideal_desc(&p_img));
                                rec.i = Some(ideal_desc(&ctx.ideals[i]));
                                rec.j = Some(j_desc.clone());
                            },
                            || {
                                let zero = Ideal::zero(&q_ring);
                                recheck_absorbing_primary_violation(
                                    &p_img,
                                    Some(&zero),
                                    n,
                                    params.scan.symmetric,
                                    &quot_weak.witness.clone().unwrap_or_default(),
                                )
                            },
                        );

                        // Part 4: J relative + image weakly relative lift back.
                        let mut flags = BTreeMap::new();
                        flags.insert("JP_in_IP".to_string(), jp_in_ip);
                        flags.insert("J_n_absorbing_I_primary".to_string(), j_rel.holds);
                        flags.insert(
                            "quotient_P_weakly_n_absorbing_primary".to_string(),
                            quot_weak.holds,
                        );
                        record_part(
                            &mut report,
                            params,
                            ring,
                            flags,
                            "part4_P_n_absorbing_I_primary",
                            &base,
                            n,
                            |rec| {
                                rec.p = Some(ideal_desc(&ctx.ideals[p]));
                                rec.i = Some(ideal_desc(&ctx.ideals[i]));
                                rec.j = Some(j_desc.clone());
                            },
                            || {
                                recheck_absorbing_primary_violation(
                                    &ctx.ideals[p],
                                    Some(&ip),
                                    n,
                                    params.scan.symmetric,
                                    &base.witness.clone().unwrap_or_default(),
                                )
                            },
                        );
                    }
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Shared record plumbing for multi-part laws.
#[allow(clippy::too_many_arguments)]
fn record_part(
    report: &mut TheoremReport,
    params: &VerifyParams,
    ring: &Ring,
    flags: BTreeMap<String, bool>,
    conclusion: &str,
    verdict: &Verdict,
    n: usize,
    fill: impl FnOnce(&mut InstanceRecord),
    revalidate: impl FnOnce() -> bool,
) {
    report.instances += 1;
    if !hyps_ok(&flags, params.dropped.as_ref()) {
        return;
    }
    report.hypothesis_hits += 1;
    if verdict.holds {
        return;
    }
    let mut rec = InstanceRecord::new(ring, conclusion, n);
    fill(&mut rec);
    rec.hypothesis_flags = flags;
    rec.conclusion_holds = false;
    rec.witness = witness_info(ring, verdict);
    rec.revalidated = Some(revalidate());
    report.failures.push(rec);
}

/// Downgrade law: if IP is n-absorbing primary and P is n-absorbing
/// I-primary, then P is n-absorbing primary.
pub fn verify_prop_2_10(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.10", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        for &p in &ctx.proper_indices() {
            for &i in &ctx.proper_indices() {
                let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                if !ip.is_proper() {
                    report.skipped += 1;
                    continue;
                }
                let ip_idx = ctx.index(&ip);
                for &n in &params.n_list {
                    report.instances += 1;
                    let mut flags = BTreeMap::new();
                    flags.insert(
                        "IP_n_absorbing_primary".to_string(),
                        ctx.n_absorbing_primary(ip_idx, n)?.holds,
                    );
                    flags.insert(
                        "P_n_absorbing_I_primary".to_string(),
                        ctx.n_absorbing_i_primary(p, i, n)?.holds,
                    );
                    if !hyps_ok(&flags, params.dropped.as_ref()) {
                        continue;
                    }
                    report.hypothesis_hits += 1;
                    let verdict = ctx.n_absorbing_primary(p, n)?;
                    if verdict.holds {
                        continue;
                    }
                    let mut rec = InstanceRecord::new(ring, "P_n_absorbing_primary", n);
                    rec.p = Some(ideal_desc(&ctx.ideals[p]));
                    rec.i = Some(ideal_desc(&ctx.ideals[i]));
                    rec.hypothesis_flags = flags;
                    rec.conclusion_holds = false;
                    rec.witness = witness_info(ring, &verdict);
                    rec.revalidated = Some(recheck_absorbing_primary_violation(
                        &ctx.ideals[p],
                        None,
                        n,
                        params.scan.symmetric,
                        &verdict.witness.clone().unwrap_or_default(),
                    ));
                    report.failures.push(rec);
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Ascending-index subsets of {0..universe-1} of size m, lexicographic.
fn combinations(universe: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        universe: usize,
        m: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for v in start..universe {
            current.push(v);
            go(v + 1, universe, m, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, universe, m, &mut Vec::new(), &mut out);
    out
}

/// Obstruction-tuple law: when P is n-absorbing I-primary and an obstruction
/// tuple (a_1..a_{n+1}) exists, every product of the tuple omitting m ≤ n
/// positions multiplies X^m into IP.  The printed statement has X = I; the
/// argument draws the extra factors from P; both readings run and are
/// reported separately.
pub fn verify_thm_2_11(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.11", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    report.note_reading(
        "exponent_base",
        "both readings evaluated per instance: X = I as printed, X = P as argued",
    );
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        for &p in &ctx.proper_indices() {
            for &i in &ctx.proper_indices() {
                let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                for &n in &params.n_list {
                    let relative = ctx.n_absorbing_i_primary(p, i, n)?;
                    let tuple = find_i_tuple(&ctx.ideals[p], &ctx.ideals[i], n, &params.scan)?;
                    let mut flags = BTreeMap::new();
                    flags.insert("P_n_absorbing_I_primary".to_string(), relative.holds);
                    flags.insert("I_tuple_exists".to_string(), tuple.is_some());
                    let hit =
                        hyps_ok(&flags, params.dropped.as_ref()) && tuple.is_some();
                    for &m in params.m_list.iter().filter(|&&m| m >= 1 && m <= n) {
                        for subset in combinations(n + 1, m) {
                            for (reading, base_idx) in [("I_pow_m", i), ("P_pow_m", p)] {
                                report.instances += 1;
                                if !hit {
                                    continue;
                                }
                                report.hypothesis_hits += 1;
                                let a = tuple.as_ref().unwrap();
                                let kept: Vec<Elem> = a
                                    .iter()
                                    .enumerate()
                                    .filter(|(k, _)| !subset.contains(k))
                                    .map(|(_, &e)| e)
                                    .collect();
                                let hatted = ring.product(&kept);
                                let base_pow = ctx.ideals[base_idx].power(m);
                                let bad = base_pow
                                    .members()
                                    .map(|y| Elem(y as u32))
                                    .find(|&y| !ip.contains_elem(ring.mul(hatted, y)));
                                let Some(y) = bad else { continue };
                                let conclusion =
                                    format!("hatted_product_times_{reading}_in_IP");
                                let mut rec = InstanceRecord::new(ring, &conclusion, n);
                                rec.p = Some(ideal_desc(&ctx.ideals[p]));
                                rec.i = Some(ideal_desc(&ctx.ideals[i]));
                                rec.m = Some(m as u32);
                                rec.hypothesis_flags = flags.clone();
                                rec.conclusion_holds = false;
                                let mut w = WitnessInfo {
                                    tuple: a.iter().map(|e| e.0).collect(),
                                    tuple_text: a
                                        .iter()
                                        .map(|&e| ring.element_text(e))
                                        .collect(),
                                    clauses: vec!["product_with_factor_notin_IP".to_string()],
                                    aux: BTreeMap::new(),
                                };
                                w.aux.insert(
                                    "omitted_positions".into(),
                                    subset.iter().map(|s| s + 1).collect::<Vec<_>>().into(),
                                );
                                w.aux.insert("factor".into(), y.0.into());
                                w.aux
                                    .insert("factor_text".into(), ring.element_text(y).into());
                                w.aux.insert("product".into(), ring.mul(hatted, y).0.into());
                                rec.witness = Some(w);
                                // Membership recheck: the obstruction tuple is
                                // genuine, y lies in the m-th power, and the
                                // product escapes IP.
                                let rad = ctx.ideals[p].radical();
                                let tuple_genuine = ip.contains_elem(ring.product(a))
                                    && !ctx.ideals[p].contains_elem(ring.product(&a[..n]))
                                    && (1..=n).all(|omit| {
                                        let mut rest = a.clone();
                                        rest.remove(omit - 1);
                                        !rad.contains_elem(ring.product(&rest))
                                    });
                                rec.revalidated = Some(
                                    tuple_genuine
                                        && base_pow.contains_elem(y)
                                        && !ip.contains_elem(ring.mul(hatted, y)),
                                );
                                report.failures.push(rec);
                            }
                        }
                    }
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Collapse law: a relative ideal that is not n-absorbing primary satisfies
/// P^{n+1} ⊆ IP and √P = √(IP).
pub fn verify_thm_2_12(rings: &[RingRef], params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("2.12", rings, params);
    report.note_reading("disjuncts", disjunct_reading(&params.scan));
    for ring in rings {
        let mut ctx = RingCtx::new(ring, params.scan)?;
        for &p in &ctx.proper_indices() {
            for &i in &ctx.proper_indices() {
                let ip = ctx.ideals[i].product(&ctx.ideals[p])?;
                for &n in &params.n_list {
                    let mut flags = BTreeMap::new();
                    flags.insert(
                        "P_n_absorbing_I_primary".to_string(),
                        ctx.n_absorbing_i_primary(p, i, n)?.holds,
                    );
                    flags.insert(
                        "P_not_n_absorbing_primary".to_string(),
                        !ctx.n_absorbing_primary(p, n)?.holds,
                    );
                    let hit = hyps_ok(&flags, params.dropped.as_ref());

                    // (i) P^{n+1} ⊆ IP
                    report.instances += 1;
                    if hit {
                        report.hypothesis_hits += 1;
                        let p_pow = ctx.ideals[p].power(n + 1);
                        if let Some(e) =
                            p_pow.member_set().first_difference(ip.member_set())
                        {
                            let e = Elem(e as u32);
                            let mut rec = InstanceRecord::new(ring, "P_pow_n_plus_1_in_IP", n);
                            rec.p = Some(ideal_desc(&ctx.ideals[p]));
                            rec.i = Some(ideal_desc(&ctx.ideals[i]));
                            rec.hypothesis_flags = flags.clone();
                            rec.conclusion_holds = false;
                            rec.witness =
                                Some(elem_witness(ring, e, "in_P_pow_n_plus_1_notin_IP"));
                            rec.revalidated = Some(
                                ctx.ideals[p].power(n + 1).contains_elem(e)
                                    && !ip.contains_elem(e),
                            );
                            report.failures.push(rec);
                        }
                    }

                    // (ii) √P = √(IP); the √(IP) ⊆ √P direction is automatic.
                    report.instances += 1;
                    if hit {
                        report.hypothesis_hits += 1;
                        let rad_p = ctx.ideals[p].radical();
                        let rad_ip = ip.radical();
                        debug_assert!(rad_p.contains_ideal(&rad_ip).unwrap());
                        let diff = rad_p
                            .member_set()
                            .first_difference(rad_ip.member_set())
                            .or_else(|| {
                                rad_ip.member_set().first_difference(rad_p.member_set())
                            });
                        if let Some(e) = diff {
                            let e = Elem(e as u32);
                            let mut rec =
                                InstanceRecord::new(ring, "radical_P_equals_radical_IP", n);
                            rec.p = Some(ideal_desc(&ctx.ideals[p]));
                            rec.i = Some(ideal_desc(&ctx.ideals[i]));
                            rec.hypothesis_flags = flags.clone();
                            rec.conclusion_holds = false;
                            rec.witness = Some(elem_witness(ring, e, "in_radical_difference"));
                            rec.revalidated = Some(
                                ctx.ideals[p].radical().contains_elem(e)
                                    != ip.radical().contains_elem(e),
                            );
                            report.failures.push(rec);
                        }
                    }
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// One sweep row: every predicate verdict for a (P, I, n) cell.  Rows with
/// improper P are kept (marked skipped) so the grid shape matches the ideal
/// lattice.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub ring: String,
    pub p: IdealDesc,
    pub i: IdealDesc,
    pub n: u32,
    pub p_proper: bool,
    pub skipped: bool,
    pub verdicts: BTreeMap<String, SweepVerdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessInfo>,
}

fn sweep_verdict(ring: &Ring, v: &Verdict) -> SweepVerdict {
    SweepVerdict { holds: v.holds, witness: witness_info(ring, v) }
}

/// Names of the predicates evaluated per sweep row, in column order.
pub const SWEEP_PREDICATES: [&str; 10] = [
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
];

/// Classification table: the verdict of every predicate for every ideal
/// pair (P, I) of the ring and every n ≤ n_max, in (P, I, n) lattice order.
pub fn sweep(ring: &RingRef, n_max: usize, scan: &ScanOpts) -> Result<Vec<SweepRow>> {
    let ideals = enumerate_ideals(ring)?;
    let mut rows = Vec::new();
    for p in &ideals {
        let p_desc = ideal_desc(p);
        let proper = p.is_proper();
        // Predicates not depending on I or n, once per P.
        let fixed: Option<[(&str, Verdict); 4]> = if proper {
            Some([
                ("prime", is_prime(p, scan)?),
                ("weakly-prime", is_weakly_prime(p, scan)?),
                ("primary", is_primary(p, scan)?),
                ("weakly-primary", is_weakly_primary(p, scan)?),
            ])
        } else {
            None
        };
        let mut by_n: HashMap<usize, [(&str, Verdict); 3]> = HashMap::new();
        if proper {
            for n in 1..=n_max {
                by_n.insert(
                    n,
                    [
                        ("n-absorbing", is_n_absorbing(p, n, scan)?),
                        ("n-absorbing-primary", is_n_absorbing_primary(p, n, scan)?),
                        (
                            "weakly-n-absorbing-primary",
                            is_weakly_n_absorbing_primary(p, n, scan)?,
                        ),
                    ],
                );
            }
        }
        for i in &ideals {
            let i_verdict = if proper { Some(is_i_primary(p, i, scan)?) } else { None };
            for n in 1..=n_max {
                let mut row = SweepRow {
                    ring: ring.spec_text().to_string(),
                    p: p_desc.clone(),
                    i: ideal_desc(i),
                    n: n as u32,
                    p_proper: proper,
                    skipped: !proper,
                    verdicts: BTreeMap::new(),
                };
                if proper {
                    for (name, v) in fixed.as_ref().unwrap() {
                        row.verdicts.insert(name.to_string(), sweep_verdict(ring, v));
                    }
                    for (name, v) in by_n.get(&n).unwrap() {
                        row.verdicts.insert(name.to_string(), sweep_verdict(ring, v));
                    }
                    row.verdicts.insert(
                        "I-primary".to_string(),
                        sweep_verdict(ring, i_verdict.as_ref().unwrap()),
                    );
                    row.verdicts.insert(
                        "n-absorbing-I-primary".to_string(),
                        sweep_verdict(ring, &is_n_absorbing_i_primary(p, i, n, scan)?),
                    );
                    row.verdicts.insert(
                        "n-absorbing-I-primary-colon".to_string(),
                        sweep_verdict(ring, &is_n_absorbing_i_primary_colon(p, i, n, scan)?),
                    );
                }
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rings(texts: &[&str]) -> Vec<RingRef> {
        texts
            .iter()
            .map(|t| build_ring(&crate::parse::parse_ring_spec(t).unwrap()).unwrap())
            .collect()
    }

    fn params(n: &[usize]) -> VerifyParams {
        VerifyParams { n_list: n.to_vec(), ..VerifyParams::default() }
    }

    #[test]
    fn oracle_equivalence_small() {
        let report =
            verify_prop_2_2(&rings(&["Z/8", "Z/12", "Z/2[x]/(x^2)"]), &params(&[1, 2])).unwrap();
        assert_eq!(report.failures.len(), 0);
        assert_eq!(report.instances, report.hypothesis_hits);
        assert!(report.instances > 0);
    }

    #[test]
    fn radical_transfer_clean_on_z12() {
        let report = verify_prop_2_4(&rings(&["Z/12"]), &params(&[1, 2])).unwrap();
        assert_eq!(report.failures.len(), 0);
        assert!(report.hypothesis_hits > 0);
        assert!(report.instances >= report.hypothesis_hits);
    }

    #[test]
    fn absorbing_upgrade_clean_on_z12() {
        let report = verify_prop_2_6(&rings(&["Z/12"]), &params(&[2])).unwrap();
        assert_eq!(report.failures.len(), 0);
        assert!(report.hypothesis_hits > 0);
    }

    #[test]
    fn downgrade_clean_on_z12() {
        let report = verify_prop_2_10(&rings(&["Z/12"]), &params(&[1, 2])).unwrap();
        assert_eq!(report.failures.len(), 0);
        assert!(report.hypothesis_hits > 0);
    }

    #[test]
    fn collapse_law_on_z16_z27() {
        let report = verify_thm_2_12(&rings(&["Z/16", "Z/27"]), &params(&[2])).unwrap();
        assert_eq!(report.failures.len(), 0);
    }

    #[test]
    fn quotient_transfer_runs_and_revalidates() {
        let report = verify_thm_2_9(&rings(&["Z/12"]), &params(&[1])).unwrap();
        assert!(report.instances > 0);
        assert!(report.skipped > 0); // J = P cells
        for f in &report.failures {
            assert_eq!(f.revalidated, Some(true), "witness failed recheck: {f:?}");
        }
    }

    #[test]
    fn obstruction_tuple_law_runs() {
        let report = verify_thm_2_11(&rings(&["Z/12", "Z/30"]), &params(&[1, 2])).unwrap();
        assert!(report.instances > 0);
        for f in &report.failures {
            assert_eq!(f.revalidated, Some(true));
        }
    }

    #[test]
    fn principal_law_runs() {
        let report = verify_prop_2_7(&rings(&["Z/8"]), &params(&[1, 2])).unwrap();
        assert!(report.skipped > 0); // units skipped
        for f in &report.failures {
            assert_eq!(f.revalidated, Some(true));
        }
    }

    #[test]
    fn intersection_product_law_runs() {
        let report = verify_thm_2_5(&rings(&["Z/12"]), &VerifyParams::default()).unwrap();
        assert!(report.instances > 0);
        for f in &report.failures {
            assert_eq!(f.revalidated, Some(true));
        }
    }

    #[test]
    fn dropped_hypothesis_probes() {
        let mut p = params(&[1, 2]);
        p.dropped = Some("P_not_n_absorbing_primary".to_string());
        let report = verify_thm_2_12(&rings(&["Z/12", "Z/30"]), &p).unwrap();
        // With the non-absorbing hypothesis dropped, ordinary relative ideals
        // break the power containment.
        assert!(!report.failures.is_empty());
        for f in &report.failures {
            assert_eq!(f.revalidated, Some(true));
        }
        assert!(matches!(
            run_theorem(
                "2.12",
                &rings(&["Z/8"]),
                &VerifyParams { dropped: Some("bogus".to_string()), ..VerifyParams::default() }
            ),
            Err(Error::UnknownHypothesis { .. })
        ));
    }

    #[test]
    fn sweep_grid_shape() {
        let ring = &rings(&["Z/12"])[0];
        let rows = sweep(ring, 2, &ScanOpts::default()).unwrap();
        assert_eq!(rows.len(), 6 * 6 * 2);
        let skipped = rows.iter().filter(|r| r.skipped).count();
        assert_eq!(skipped, 6 * 2); // the improper-P block
        for row in rows.iter().filter(|r| !r.skipped) {
            assert_eq!(row.verdicts.len(), SWEEP_PREDICATES.len());
        }
    }

    #[test]
    fn sweep_rows_are_stable() {
        let ring = &rings(&["Z/12"])[0];
        let a = sweep(ring, 2, &ScanOpts::default()).unwrap();
        let b = sweep(ring, 2, &ScanOpts::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
