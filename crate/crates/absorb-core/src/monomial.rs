//! Exact monomial-ideal calculus over a polynomial ring in m variables.
//!
//! Coefficients never appear: membership of a monomial in a monomial ideal
//! is divisibility by some generator, so every operation here is exponent
//! vector combinatorics.  This is enough to build the `t1..t_{n+2}`
//! polynomial-ring construction and to search for monomial witnesses of
//! absorbing-property failures: a monomial witness refutes the property in
//! the full polynomial ring, while a clean scan is only "clean up to the
//! degree bound", never a proof.

use crate::{Error, Result};

/// A monomial as a fixed-length exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable `t{i+1}`.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - a.min(b))
                .collect(),
        }
    }

    /// Exponents clamped to at most 1.
    pub fn squarefree(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// Canonical sort key: (total degree, exponent vector lexicographic).
    fn key(&self) -> (u32, Vec<u32>) {
        (self.degree(), self.exps.clone())
    }

    pub fn text(&self) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("t{}", i + 1)
                } else {
                    format!("t{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A monomial ideal held by its minimal generators: pairwise incomparable
/// under divisibility, sorted by (degree, lex).  No generators means the
/// zero ideal; the single generator 1 means the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn gens_text(&self) -> Vec<String> {
        if self.is_zero() {
            vec!["0".to_string()]
        } else {
            self.gens.iter().map(Monomial::text).collect()
        }
    }
}

/// Drops every generator divisible by another; the result is
/// order-independent.
pub fn minimalize(nvars: usize, gens: &[Monomial]) -> Result<MonomialIdeal> {
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::VariableCountMismatch { expected: nvars, got: g.nvars() });
        }
    }
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(Monomial::key);
    sorted.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in sorted {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    Ok(MonomialIdeal { nvars, gens: minimal })
}

/// Monomial membership: some generator divides `x`.
pub fn member(x: &Monomial, j: &MonomialIdeal) -> bool {
    j.gens.iter().any(|g| g.divides(x))
}

/// Ideal product: minimalized pairwise generator products.
pub fn product(j: &MonomialIdeal, k: &MonomialIdeal) -> Result<MonomialIdeal> {
    if j.nvars != k.nvars {
        return Err(Error::VariableCountMismatch { expected: j.nvars, got: k.nvars });
    }
    let prods: Vec<Monomial> = j
        .gens
        .iter()
        .flat_map(|g| k.gens.iter().map(move |h| g.mul(h)))
        .collect();
    minimalize(j.nvars, &prods)
}

/// Colon by a monomial: minimalized `{g / gcd(g, x)}`.
pub fn colon(j: &MonomialIdeal, x: &Monomial) -> Result<MonomialIdeal> {
    if j.nvars != x.nvars() {
        return Err(Error::VariableCountMismatch { expected: j.nvars, got: x.nvars() });
    }
    let quots: Vec<Monomial> = j.gens.iter().map(|g| g.quotient_by(x)).collect();
    minimalize(j.nvars, &quots)
}

/// Radical: minimalized squarefree parts of the generators.
pub fn radical(j: &MonomialIdeal) -> MonomialIdeal {
    let parts: Vec<Monomial> = j.gens.iter().map(Monomial::squarefree).collect();
    minimalize(j.nvars, &parts).expect("same variable count")
}

/// Intersection via pairwise lcms; used by the invariant tests.
pub fn intersection(j: &MonomialIdeal, k: &MonomialIdeal) -> Result<MonomialIdeal> {
    if j.nvars != k.nvars {
        return Err(Error::VariableCountMismatch { expected: j.nvars, got: k.nvars });
    }
    let lcms: Vec<Monomial> = j
        .gens
        .iter()
        .flat_map(|g| k.gens.iter().map(move |h| g.lcm(h)))
        .collect();
    minimalize(j.nvars, &lcms)
}

/// The worked polynomial-ring construction in `n+2` variables:
/// `P = <t1⋯t_{n+1}, t1^2 t2⋯t_n, t1^2 t_{n+2}>` and
/// `I = <t1⋯t_n, t1⋯t_{n+1}>`, with `IP` and `√P` computed from them.
/// Empty products for small n evaluate to 1; ideals are minimalized.
#[derive(Debug, Clone)]
pub struct ExampleIdeals {
    pub nvars: usize,
    pub p: MonomialIdeal,
    pub i: MonomialIdeal,
    pub ip: MonomialIdeal,
    pub rad_p: MonomialIdeal,
}

pub fn build_example_2_1(n: usize) -> Result<ExampleIdeals> {
    if n < 1 {
        return Err(Error::BadAbsorbingIndex);
    }
    let nvars = n + 2;
    // Product of the variables with 1-based positions in (lo, hi]; empty
    // ranges give 1.
    let var_range = |lo: usize, hi: usize| {
        let mut exps = vec![0u32; nvars];
        for slot in exps.iter_mut().take(hi).skip(lo) {
            *slot = 1;
        }
        Monomial::new(exps)
    };
    let t1 = Monomial::var(0, nvars);
    let t1_sq = t1.mul(&t1);
    let p_gens = vec![
        var_range(0, n + 1),                     // t1 t2 ⋯ t_{n+1}
        t1_sq.mul(&var_range(1, n)),             // t1^2 t2 ⋯ t_n
        t1_sq.mul(&Monomial::var(n + 1, nvars)), // t1^2 t_{n+2}
    ];
    let i_gens = vec![var_range(0, n), var_range(0, n + 1)];
    let p = minimalize(nvars, &p_gens)?;
    let i = minimalize(nvars, &i_gens)?;
    let ip = product(&i, &p)?;
    let rad_p = radical(&p);
    Ok(ExampleIdeals { nvars, p, i, ip, rad_p })
}

/// All monomials of total degree <= bound in (degree, lex) order; the tuple
/// scans below enumerate in this order, so reported witnesses are minimal
/// for it.
pub fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        if exps.iter().sum::<u32>() <= bound {
            out.push(Monomial::new(exps.clone()));
        }
        let mut pos = nvars;
        loop {
            if pos == 0 {
                out.sort_by_key(Monomial::key);
                return out;
            }
            pos -= 1;
            exps[pos] += 1;
            if exps[pos] <= bound {
                break;
            }
            exps[pos] = 0;
        }
    }
}

/// Outcome of the bounded monomial scans: a found witness refutes the
/// property outright; `None` only means no monomial witness up to the bound.
#[derive(Debug, Clone)]
pub struct ExampleScan {
    pub ideals: ExampleIdeals,
    pub degree_bound: u32,
    /// Tuple violating n-absorbency of P, if any.
    pub not_n_absorbing: Option<Vec<Monomial>>,
    /// Tuple violating the relative primary condition of (P, I), if any.
    pub i_primary_refuted: Option<Vec<Monomial>>,
}

/// Scans all (n+1)-tuples of monomials of per-component degree <= bound for
/// (a) a witness that P is not n-absorbing and (b) a witness violating the
/// n-absorbing I-primary condition.
pub fn check_example_2_1(n: usize, degree_bound: u32, force: bool) -> Result<ExampleScan> {
    let ideals = build_example_2_1(n)?;
    let monos = monomials_up_to(ideals.nvars, degree_bound);
    let cost = (monos.len() as u128).saturating_pow((n + 1) as u32);
    if cost > crate::predicate::COST_CAP && !force {
        return Err(Error::CostCapExceeded { cost, cap: crate::predicate::COST_CAP });
    }

    let not_n_absorbing = scan_tuples(&monos, n + 1, |tuple| {
        let full = tuple.iter().fold(Monomial::one(ideals.nvars), |acc, m| acc.mul(m));
        if !member(&full, &ideals.p) {
            return false;
        }
        // Violation: no n-subproduct lands in P.
        (0..tuple.len()).all(|omit| {
            let sub = tuple
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != omit)
                .fold(Monomial::one(ideals.nvars), |acc, (_, m)| acc.mul(m));
            !member(&sub, &ideals.p)
        })
    });

    let i_primary_refuted = scan_tuples(&monos, n + 1, |tuple| {
        let full = tuple.iter().fold(Monomial::one(ideals.nvars), |acc, m| acc.mul(m));
        if !member(&full, &ideals.p) || member(&full, &ideals.ip) {
            return false;
        }
        let first_n = tuple[..n]
            .iter()
            .fold(Monomial::one(ideals.nvars), |acc, m| acc.mul(m));
        if member(&first_n, &ideals.p) {
            return false;
        }
        (1..=n).all(|omit| {
            let sub = tuple
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != omit - 1)
                .fold(Monomial::one(ideals.nvars), |acc, (_, m)| acc.mul(m));
            !member(&sub, &ideals.rad_p)
        })
    });

    Ok(ExampleScan { ideals, degree_bound, not_n_absorbing, i_primary_refuted })
}

/// Membership-only recomputation of both scan witnesses; bypasses the scan
/// loop entirely.  True when every emitted witness exhibits its claimed
/// violation.
pub fn revalidate_example_scan(scan: &ExampleScan, n: usize) -> bool {
    let ids = &scan.ideals;
    if let Some(w) = &scan.not_n_absorbing {
        let full = w.iter().fold(Monomial::one(ids.nvars), |acc, m| acc.mul(m));
        if !member(&full, &ids.p) {
            return false;
        }
        for omit in 0..w.len() {
            let sub = w
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != omit)
                .fold(Monomial::one(ids.nvars), |acc, (_, m)| acc.mul(m));
            if member(&sub, &ids.p) {
                return false;
            }
        }
    }
    if let Some(w) = &scan.i_primary_refuted {
        let full = w.iter().fold(Monomial::one(ids.nvars), |acc, m| acc.mul(m));
        if !member(&full, &ids.p) || member(&full, &ids.ip) {
            return false;
        }
        let first_n = w[..n].iter().fold(Monomial::one(ids.nvars), |acc, m| acc.mul(m));
        if member(&first_n, &ids.p) {
            return false;
        }
        for omit in 1..=n {
            let sub = w
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != omit - 1)
                .fold(Monomial::one(ids.nvars), |acc, (_, m)| acc.mul(m));
            if member(&sub, &ids.rad_p) {
                return false;
            }
        }
    }
    true
}

/// First tuple (lexicographic over the monomial list order) satisfying the
/// violation predicate.
fn scan_tuples<F>(monos: &[Monomial], len: usize, violates: F) -> Option<Vec<Monomial>>
where
    F: Fn(&[Monomial]) -> bool,
{
    let mut idx = vec![0usize; len];
    let mut tuple: Vec<Monomial> = vec![monos[0].clone(); len];
    loop {
        if violates(&tuple) {
            return Some(tuple);
        }
        let mut pos = len;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < monos.len() {
                tuple[pos] = monos[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            tuple[pos] = monos[0].clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn minimalize_filters_divisible_generators() {
        // {t1^2, t1^2 t3, t1 t2} -> {t1 t2, t1^2}
        let j = minimalize(3, &[m(&[2, 0, 0]), m(&[2, 0, 1]), m(&[1, 1, 0])]).unwrap();
        assert_eq!(j.gens(), &[m(&[1, 1, 0]), m(&[2, 0, 0])]);
        // The unit monomial absorbs everything.
        let u = minimalize(2, &[m(&[0, 0]), m(&[1, 0])]).unwrap();
        assert!(u.is_unit());
        assert!(minimalize(2, &[]).unwrap().is_zero());
        assert!(matches!(
            minimalize(2, &[m(&[1])]),
            Err(Error::VariableCountMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn membership_is_divisibility() {
        let j = minimalize(3, &[m(&[2, 0, 0])]).unwrap();
        assert!(member(&m(&[3, 1, 0]), &j)); // t1^3 t2 ∈ <t1^2>
        let k = minimalize(4, &[m(&[1, 1, 0, 0]), m(&[1, 0, 0, 1])]).unwrap();
        assert!(!member(&m(&[0, 1, 1, 0]), &k)); // t2 t3 ∉ <t1t2, t1t4>
        assert!(!member(&m(&[5, 5, 5]), &MonomialIdeal::zero(3)));
    }

    #[test]
    fn product_colon_radical() {
        let t1 = minimalize(3, &[m(&[1, 0, 0])]).unwrap();
        let jk = minimalize(3, &[m(&[1, 1, 0]), m(&[2, 0, 0])]).unwrap();
        // <t1> * <t1t2, t1^2> = <t1^2 t2, t1^3>
        assert_eq!(
            product(&t1, &jk).unwrap().gens(),
            &[m(&[2, 1, 0]), m(&[3, 0, 0])]
        );
        // (<t1t2> : t1) = <t2>
        let j = minimalize(3, &[m(&[1, 1, 0])]).unwrap();
        assert_eq!(colon(&j, &m(&[1, 0, 0])).unwrap().gens(), &[m(&[0, 1, 0])]);
        // rad(<t1^2, t1t2>) = <t1>
        let r = radical(&minimalize(3, &[m(&[2, 0, 0]), m(&[1, 1, 0])]).unwrap());
        assert_eq!(r.gens(), &[m(&[1, 0, 0])]);
    }

    #[test]
    fn colon_identities() {
        let j = minimalize(3, &[m(&[1, 1, 0]), m(&[0, 0, 2])]).unwrap();
        assert_eq!(colon(&j, &Monomial::one(3)).unwrap(), j);
        for g in j.gens() {
            assert!(colon(&j, g).unwrap().is_unit());
        }
        assert_eq!(radical(&radical(&j)), radical(&j));
    }

    #[test]
    fn membership_stable_under_minimalize() {
        let raw = [m(&[2, 0, 0]), m(&[2, 0, 1]), m(&[1, 1, 0]), m(&[3, 2, 1])];
        let minimal = minimalize(3, &raw).unwrap();
        for x in monomials_up_to(3, 6) {
            let direct = raw.iter().any(|g| g.divides(&x));
            assert_eq!(direct, member(&x, &minimal));
        }
    }

    #[test]
    fn product_and_intersection_shrink() {
        let j = minimalize(3, &[m(&[1, 1, 0]), m(&[0, 0, 2])]).unwrap();
        let k = minimalize(3, &[m(&[1, 0, 0])]).unwrap();
        let prod = product(&j, &k).unwrap();
        let inter = intersection(&j, &k).unwrap();
        for x in monomials_up_to(3, 5) {
            if member(&x, &prod) {
                assert!(member(&x, &inter));
            }
            if member(&x, &inter) {
                assert!(member(&x, &j) && member(&x, &k));
            }
        }
    }

    #[test]
    fn example_structure_n2() {
        let e = build_example_2_1(2).unwrap();
        assert_eq!(e.nvars, 4);
        // P = <t1t2t3, t1^2 t4, t1^2 t2> in (degree, lex) order
        assert_eq!(
            e.p.gens(),
            &[m(&[1, 1, 1, 0]), m(&[2, 0, 0, 1]), m(&[2, 1, 0, 0])]
        );
        // I minimalizes to <t1t2>
        assert_eq!(e.i.gens(), &[m(&[1, 1, 0, 0])]);
        // IP = <t1^2 t2^2 t3, t1^3 t2 t4, t1^3 t2^2>
        assert_eq!(
            e.ip.gens(),
            &[m(&[2, 2, 1, 0]), m(&[3, 1, 0, 1]), m(&[3, 2, 0, 0])]
        );
        // √P = <t1t4, t1t2>
        assert_eq!(e.rad_p.gens(), &[m(&[1, 0, 0, 1]), m(&[1, 1, 0, 0])]);
    }

    #[test]
    fn example_structure_n1() {
        let e = build_example_2_1(1).unwrap();
        assert_eq!(e.nvars, 3);
        // Empty products collapse: P = <t1t2, t1^2>, I = <t1>.
        assert_eq!(e.p.gens(), &[m(&[1, 1, 0]), m(&[2, 0, 0])]);
        assert_eq!(e.i.gens(), &[m(&[1, 0, 0])]);
        assert!(build_example_2_1(0).is_err());
    }

    #[test]
    fn bounded_scan_degenerate_bound_zero() {
        let scan = check_example_2_1(1, 0, false).unwrap();
        // Only the monomial 1 exists and 1 ∉ P: both scans are vacuous.
        assert!(scan.not_n_absorbing.is_none());
        assert!(scan.i_primary_refuted.is_none());
    }

    #[test]
    fn bounded_scan_finds_witnesses() {
        let scan = check_example_2_1(1, 2, false).unwrap();
        // Non-absorbing witness re-validates by membership alone.
        let w = scan.not_n_absorbing.as_ref().expect("witness");
        let full = w[0].mul(&w[1]);
        assert!(member(&full, &scan.ideals.p));
        assert!(!member(&w[0], &scan.ideals.p) && !member(&w[1], &scan.ideals.p));
        // The relative-primary side refutes as well: first slot not in P and
        // the kept product escapes √P.
        let v = scan.i_primary_refuted.as_ref().expect("witness");
        let full = v[0].mul(&v[1]);
        assert!(member(&full, &scan.ideals.p) && !member(&full, &scan.ideals.ip));
        assert!(!member(&v[0], &scan.ideals.p));
        assert!(!member(&v[1], &scan.ideals.rad_p));
    }
}
