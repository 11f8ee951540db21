//! Finite commutative rings with identity.
//!
//! A ring is built from a constructor spec: `Z/n`, a finite direct product,
//! or `Z/p[x]/(f)` with `f` monic over the prime field `Z/p`.  Elements are
//! indices `0..size` under a canonical order fixed per constructor (residue
//! value; mixed-radix tuple order; base-`p` coefficient vectors), so witness
//! tuples are reproducible across runs and machines.  Quotient rings `R/J`
//! are built from a ring and a proper ideal, with minimal-index coset
//! representatives.

use std::sync::Arc;

use crate::ideal::Ideal;
use crate::{Error, Result};

/// Rings above this size evaluate arithmetic on demand instead of caching
/// full operation tables.
const TABLE_CAP: usize = 1024;

/// Default cap on realized ring size; `ABSORB_SIZE_CAP` overrides it.
pub const DEFAULT_SIZE_CAP: u128 = 4096;

pub fn size_cap() -> u128 {
    std::env::var("ABSORB_SIZE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

/// Constructor AST for a finite commutative ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    /// Integers modulo `n`, `n >= 2`.
    Zn(u64),
    /// Direct product of at least two factors.
    Product(Vec<RingSpec>),
    /// `Z/p[x]/(f)` with `p` prime and `f` monic of degree >= 1, coefficients
    /// ascending (`f[0]` is the constant term).
    PolyQuot { p: u64, f: Vec<u64> },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    /// Realized element count.
    pub fn size(&self) -> u128 {
        match self {
            RingSpec::Zn(n) => *n as u128,
            RingSpec::Product(factors) => factors.iter().map(|f| f.size()).product(),
            RingSpec::PolyQuot { p, f } => (*p as u128).pow((f.len() - 1) as u32),
        }
    }

    pub fn validate(&self, cap: u128) -> Result<()> {
        self.validate_shape()?;
        let size = self.size();
        if size > cap {
            return Err(Error::SizeCapExceeded { size, cap });
        }
        Ok(())
    }

    fn validate_shape(&self) -> Result<()> {
        match self {
            RingSpec::Zn(n) => {
                if *n < 2 {
                    return Err(Error::BadModulus(*n));
                }
            }
            RingSpec::Product(factors) => {
                if factors.len() < 2 {
                    return Err(Error::TooFewFactors);
                }
                for f in factors {
                    f.validate_shape()?;
                }
            }
            RingSpec::PolyQuot { p, f } => {
                if !is_prime(*p) {
                    return Err(Error::NonPrimeModulus(*p));
                }
                if f.len() < 2 || f.last() != Some(&1) || f.iter().any(|c| c >= p) {
                    return Err(Error::NonMonicPoly);
                }
            }
        }
        Ok(())
    }

    /// Canonical text form; `parse_ring_spec` inverts it.
    pub fn render(&self) -> String {
        match self {
            RingSpec::Zn(n) => format!("Z/{n}"),
            RingSpec::Product(factors) => factors
                .iter()
                .map(RingSpec::render)
                .collect::<Vec<_>>()
                .join(" x "),
            RingSpec::PolyQuot { p, f } => format!("Z/{p}[x]/({})", poly_text(f)),
        }
    }
}

/// Renders an ascending coefficient vector as a descending-power polynomial
/// in `x`, e.g. `[1, 1, 1]` -> `x^2+x+1`.
pub fn poly_text(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (c, k) {
            (c, 0) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (c, 1) => format!("{c}x"),
            (1, k) => format!("x^{k}"),
            (c, k) => format!("{c}x^{k}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// An element of a `Ring`, identified by its canonical index.  Only
/// meaningful together with the ring it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

enum Arith {
    Zn(u64),
    Product(Vec<Arc<Ring>>),
    PolyQuot { p: u64, f: Vec<u64> },
    /// Coset ring: `reps[i]` is the minimal base-ring index in coset `i`,
    /// `coset[b]` the coset index of base element `b`.
    Quotient { base: Arc<Ring>, reps: Vec<u32>, coset: Vec<u32> },
}

/// A realized finite commutative ring.  Immutable after construction; all
/// operations are pure, so rings are shared via `Arc` across workers.
pub struct Ring {
    spec_text: String,
    size: usize,
    one: u32,
    arith: Arith,
    neg_table: Vec<u32>,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
}

pub type RingRef = Arc<Ring>;

/// Borrowed view of a ring's constructor, for literal parsing and bindings.
pub enum RingKind<'a> {
    Zn(u64),
    Product(&'a [RingRef]),
    PolyQuot { p: u64, f: &'a [u64] },
    Quotient,
}

/// Builds the ring described by `spec`, enforcing the configured size cap.
pub fn build_ring(spec: &RingSpec) -> Result<RingRef> {
    build_ring_with_cap(spec, size_cap())
}

pub fn build_ring_with_cap(spec: &RingSpec, cap: u128) -> Result<RingRef> {
    spec.validate(cap)?;
    Ok(build_validated(spec))
}

fn build_validated(spec: &RingSpec) -> RingRef {
    let size = spec.size() as usize;
    let arith = match spec {
        RingSpec::Zn(n) => Arith::Zn(*n),
        RingSpec::Product(factors) => {
            Arith::Product(factors.iter().map(build_validated).collect())
        }
        RingSpec::PolyQuot { p, f } => Arith::PolyQuot { p: *p, f: f.clone() },
    };
    Ring::finish(spec.render(), size, arith)
}

impl Ring {
    fn finish(spec_text: String, size: usize, arith: Arith) -> RingRef {
        let mut ring = Ring {
            spec_text,
            size,
            one: 0,
            arith,
            neg_table: Vec::new(),
            add_table: None,
            mul_table: None,
        };
        ring.one = ring.compute_one();
        ring.neg_table = (0..size as u32).map(|a| ring.eval_neg(a)).collect();
        if size <= TABLE_CAP {
            let mut add = vec![0u16; size * size];
            let mut mul = vec![0u16; size * size];
            for a in 0..size as u32 {
                for b in 0..size as u32 {
                    add[a as usize * size + b as usize] = ring.eval_add(a, b) as u16;
                    mul[a as usize * size + b as usize] = ring.eval_mul(a, b) as u16;
                }
            }
            ring.add_table = Some(add);
            ring.mul_table = Some(mul);
        }
        Arc::new(ring)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn spec_text(&self) -> &str {
        &self.spec_text
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(self.one)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size as u32).map(Elem)
    }

    /// Validates an element index coming from user input.
    pub fn elem(&self, index: u32) -> Result<Elem> {
        if (index as usize) < self.size {
            Ok(Elem(index))
        } else {
            Err(Error::ElementOutOfRange { index, size: self.size })
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!((a.0 as usize) < self.size && (b.0 as usize) < self.size);
        match &self.add_table {
            Some(t) => Elem(t[a.0 as usize * self.size + b.0 as usize] as u32),
            None => Elem(self.eval_add(a.0, b.0)),
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!((a.0 as usize) < self.size && (b.0 as usize) < self.size);
        match &self.mul_table {
            Some(t) => Elem(t[a.0 as usize * self.size + b.0 as usize] as u32),
            None => Elem(self.eval_mul(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg_table[a.0 as usize])
    }

    /// Product of a slice of elements; empty slices give 1.
    pub fn product(&self, elems: &[Elem]) -> Elem {
        elems.iter().fold(self.one(), |acc, &e| self.mul(acc, e))
    }

    /// True iff some b satisfies `ab = 1` (decided by scan).
    pub fn is_unit(&self, a: Elem) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one())
    }

    /// Two rings are interchangeable when they came from the same build or
    /// render identically (identical spec implies identical tables).
    pub fn compatible(&self, other: &Ring) -> bool {
        std::ptr::eq(self, other)
            || (self.size == other.size && self.spec_text == other.spec_text)
    }

    fn compute_one(&self) -> u32 {
        match &self.arith {
            Arith::Zn(_) => 1,
            Arith::Product(factors) => {
                let ones: Vec<u32> = factors.iter().map(|f| f.one).collect();
                self.recompose(&ones)
            }
            Arith::PolyQuot { .. } => 1,
            Arith::Quotient { base, coset, .. } => coset[base.one as usize],
        }
    }

    fn eval_add(&self, a: u32, b: u32) -> u32 {
        match &self.arith {
            Arith::Zn(n) => ((a as u64 + b as u64) % n) as u32,
            Arith::Product(factors) => {
                let da = self.decompose(a);
                let db = self.decompose(b);
                let sums: Vec<u32> = factors
                    .iter()
                    .zip(da.iter().zip(&db))
                    .map(|(f, (&x, &y))| f.add(Elem(x), Elem(y)).0)
                    .collect();
                self.recompose(&sums)
            }
            Arith::PolyQuot { p, f } => {
                let deg = f.len() - 1;
                let mut coeffs = digits(a, *p, deg);
                for (c, d) in coeffs.iter_mut().zip(digits(b, *p, deg)) {
                    *c = (*c + d) % p;
                }
                undigits(&coeffs, *p)
            }
            Arith::Quotient { base, reps, coset } => {
                coset[base.add(Elem(reps[a as usize]), Elem(reps[b as usize])).0 as usize]
            }
        }
    }

    fn eval_mul(&self, a: u32, b: u32) -> u32 {
        match &self.arith {
            Arith::Zn(n) => ((a as u64 * b as u64) % n) as u32,
            Arith::Product(factors) => {
                let da = self.decompose(a);
                let db = self.decompose(b);
                let prods: Vec<u32> = factors
                    .iter()
                    .zip(da.iter().zip(&db))
                    .map(|(f, (&x, &y))| f.mul(Elem(x), Elem(y)).0)
                    .collect();
                self.recompose(&prods)
            }
            Arith::PolyQuot { p, f } => {
                let deg = f.len() - 1;
                let ca = digits(a, *p, deg);
                let cb = digits(b, *p, deg);
                let mut prod = vec![0u64; 2 * deg - 1];
                for (i, &x) in ca.iter().enumerate() {
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // f is monic: x^deg = -(f[0] + ... + f[deg-1] x^{deg-1}).
                for k in (deg..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for j in 0..deg {
                        prod[k - deg + j] = (prod[k - deg + j] + c * (p - f[j]) % p) % p;
                    }
                }
                undigits(&prod[..deg], *p)
            }
            Arith::Quotient { base, reps, coset } => {
                coset[base.mul(Elem(reps[a as usize]), Elem(reps[b as usize])).0 as usize]
            }
        }
    }

    fn eval_neg(&self, a: u32) -> u32 {
        match &self.arith {
            Arith::Zn(n) => ((n - a as u64) % n) as u32,
            Arith::Product(factors) => {
                let da = self.decompose(a);
                let negs: Vec<u32> = factors
                    .iter()
                    .zip(&da)
                    .map(|(f, &x)| f.neg(Elem(x)).0)
                    .collect();
                self.recompose(&negs)
            }
            Arith::PolyQuot { p, f } => {
                let deg = f.len() - 1;
                let coeffs: Vec<u64> = digits(a, *p, deg).iter().map(|c| (p - c) % p).collect();
                undigits(&coeffs, *p)
            }
            Arith::Quotient { base, reps, coset } => {
                coset[base.neg(Elem(reps[a as usize])).0 as usize]
            }
        }
    }

    /// Mixed-radix digits of a product-ring index, first factor most
    /// significant.
    fn decompose(&self, mut idx: u32) -> Vec<u32> {
        match &self.arith {
            Arith::Product(factors) => {
                let mut digits = vec![0u32; factors.len()];
                for (slot, f) in digits.iter_mut().zip(factors).rev() {
                    *slot = idx % f.size as u32;
                    idx /= f.size as u32;
                }
                digits
            }
            _ => unreachable!("decompose on non-product ring"),
        }
    }

    fn recompose(&self, parts: &[u32]) -> u32 {
        match &self.arith {
            Arith::Product(factors) => {
                let mut idx = 0u32;
                for (f, &x) in factors.iter().zip(parts) {
                    idx = idx * f.size as u32 + x;
                }
                idx
            }
            _ => unreachable!("recompose on non-product ring"),
        }
    }

    /// Constructor view used by the element-literal parser.
    pub fn kind(&self) -> RingKind<'_> {
        match &self.arith {
            Arith::Zn(n) => RingKind::Zn(*n),
            Arith::Product(factors) => RingKind::Product(factors),
            Arith::PolyQuot { p, f } => RingKind::PolyQuot { p: *p, f },
            Arith::Quotient { .. } => RingKind::Quotient,
        }
    }

    /// Packs a product-ring element from per-factor indices.
    pub fn elem_from_parts(&self, parts: &[u32]) -> Elem {
        Elem(self.recompose(parts))
    }

    /// Reduces an ascending coefficient vector (coefficients already mod p)
    /// into a polynomial-quotient element.
    pub fn elem_from_poly(&self, mut coeffs: Vec<u64>) -> Elem {
        match &self.arith {
            Arith::PolyQuot { p, f } => {
                let deg = f.len() - 1;
                for k in (deg..coeffs.len()).rev() {
                    let c = coeffs[k];
                    if c == 0 {
                        continue;
                    }
                    coeffs[k] = 0;
                    for j in 0..deg {
                        coeffs[k - deg + j] = (coeffs[k - deg + j] + c * (p - f[j]) % p) % p;
                    }
                }
                coeffs.resize(deg, 0);
                Elem(undigits(&coeffs, *p))
            }
            _ => unreachable!("elem_from_poly on non-polynomial ring"),
        }
    }

    /// Human-readable element literal in the same syntax the parser accepts.
    pub fn element_text(&self, a: Elem) -> String {
        match &self.arith {
            Arith::Zn(_) => a.0.to_string(),
            Arith::Product(factors) => {
                let parts = self.decompose(a.0);
                let texts: Vec<String> = factors
                    .iter()
                    .zip(&parts)
                    .map(|(f, &x)| f.element_text(Elem(x)))
                    .collect();
                format!("({})", texts.join(","))
            }
            Arith::PolyQuot { p, f } => poly_text(&digits(a.0, *p, f.len() - 1)),
            Arith::Quotient { base, reps, .. } => base.element_text(Elem(reps[a.0 as usize])),
        }
    }
}

impl std::fmt::Debug for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ring({}, size {})", self.spec_text, self.size)
    }
}

fn digits(mut idx: u32, p: u64, count: usize) -> Vec<u64> {
    let mut out = vec![0u64; count];
    for slot in out.iter_mut() {
        *slot = idx as u64 % p;
        idx /= p as u32;
    }
    out
}

fn undigits(coeffs: &[u64], p: u64) -> u32 {
    let mut idx = 0u64;
    for &c in coeffs.iter().rev() {
        idx = idx * p + c;
    }
    idx as u32
}

/// Builds the coset ring `R/J` together with the projection table mapping
/// each base element index to its coset index.  The projection is a
/// surjective ring homomorphism.
pub fn quotient_ring(ring: &RingRef, j: &Ideal) -> Result<(RingRef, Vec<u32>)> {
    if !j.ring().compatible(ring) {
        return Err(Error::RingMismatch);
    }
    if !j.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let size = ring.size();
    const UNASSIGNED: u32 = u32::MAX;
    let mut coset = vec![UNASSIGNED; size];
    let mut reps = Vec::new();
    for a in 0..size as u32 {
        if coset[a as usize] != UNASSIGNED {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(a);
        for m in j.members() {
            let shifted = ring.add(Elem(a), Elem(m as u32));
            coset[shifted.0 as usize] = id;
        }
    }
    let spec_text = format!("{} / ({})", ring.spec_text(), j.gens_text().join(", "));
    let quotient = Ring::finish(
        spec_text,
        reps.len(),
        Arith::Quotient { base: Arc::clone(ring), reps, coset: coset.clone() },
    );
    Ok((quotient, coset))
}

/// Exhaustively checks the seven commutative-ring axioms on every element
/// triple; returns the first violation found.
pub fn check_axioms(ring: &Ring) -> Option<String> {
    let zero = ring.zero();
    let one = ring.one();
    if zero == one {
        return Some("0 = 1".to_string());
    }
    for a in ring.elements() {
        if ring.add(a, zero) != a {
            return Some(format!("a+0 != a at a={}", a.0));
        }
        if ring.mul(a, one) != a {
            return Some(format!("a*1 != a at a={}", a.0));
        }
        if ring.add(a, ring.neg(a)) != zero {
            return Some(format!("a+(-a) != 0 at a={}", a.0));
        }
        for b in ring.elements() {
            if ring.add(a, b) != ring.add(b, a) {
                return Some(format!("a+b != b+a at ({}, {})", a.0, b.0));
            }
            if ring.mul(a, b) != ring.mul(b, a) {
                return Some(format!("ab != ba at ({}, {})", a.0, b.0));
            }
            for c in ring.elements() {
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
                    return Some(format!("(ab)c != a(bc) at ({}, {}, {})", a.0, b.0, c.0));
                }
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
                    return Some(format!("a(b+c) != ab+ac at ({}, {}, {})", a.0, b.0, c.0));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;

    fn zn(n: u64) -> RingRef {
        build_ring(&RingSpec::Zn(n)).unwrap()
    }

    #[test]
    fn zn_arithmetic_is_modular() {
        let r = zn(12);
        assert_eq!(r.size(), 12);
        assert_eq!(r.add(Elem(7), Elem(8)), Elem(3));
        assert_eq!(r.mul(Elem(4), Elem(3)), Elem(0));
        assert_eq!(r.neg(Elem(5)), Elem(7));
        assert_eq!(r.element_text(Elem(7)), "7");
    }

    #[test]
    fn poly_quot_mod_x_squared() {
        // Z/2[x]/(x^2): elements 0, 1, x, x+1 with x*x = 0.
        // Oracle: hand-expanded products reduced mod x^2, mod 2.
        let r = build_ring(&RingSpec::PolyQuot { p: 2, f: vec![0, 0, 1] }).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.element_text(Elem(2)), "x");
        assert_eq!(r.element_text(Elem(3)), "x+1");
        let expected_mul = [
            [0, 0, 0, 0], // 0 * _
            [0, 1, 2, 3], // 1 * _
            [0, 2, 0, 2], // x * _: x*x = 0, x*(x+1) = x
            [0, 3, 2, 1], // (x+1) * _: (x+1)^2 = x^2+1 = 1
        ];
        for a in 0..4u32 {
            for b in 0..4u32 {
                assert_eq!(r.mul(Elem(a), Elem(b)), Elem(expected_mul[a as usize][b as usize]));
            }
        }
    }

    #[test]
    fn product_matches_crt_pairing() {
        // Oracle: Z/2 x Z/3 must match Z/6 componentwise under the CRT
        // bijection c <-> (c mod 2, c mod 3).
        let prod = build_ring(&RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(3)])).unwrap();
        assert_eq!(prod.size(), 6);
        let pair_of = |c: u64| Elem((c % 2) as u32 * 3 + (c % 3) as u32);
        for c in 0..6u64 {
            for d in 0..6u64 {
                assert_eq!(prod.add(pair_of(c), pair_of(d)), pair_of(c + d));
                assert_eq!(prod.mul(pair_of(c), pair_of(d)), pair_of(c * d));
            }
        }
        assert_eq!(prod.element_text(Elem(5)), "(1,2)");
    }

    #[test]
    fn units_by_scan() {
        let r = zn(12);
        assert!(r.is_unit(Elem(5))); // 5*5 = 25 = 1
        assert!(!r.is_unit(Elem(4))); // zero divisor: 4*3 = 0
        assert!(r.is_unit(Elem(1)));
    }

    #[test]
    fn axioms_hold_exhaustively_small() {
        let specs = [
            RingSpec::Zn(12),
            RingSpec::Zn(16),
            RingSpec::PolyQuot { p: 2, f: vec![0, 0, 1] },
            RingSpec::PolyQuot { p: 2, f: vec![1, 1, 1] },
            RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(3)]),
        ];
        for spec in &specs {
            let r = build_ring(spec).unwrap();
            assert_eq!(check_axioms(&r), None, "axioms failed in {}", spec.render());
        }
    }

    #[test]
    fn rebuilding_gives_identical_tables() {
        let spec = RingSpec::Product(vec![RingSpec::Zn(4), RingSpec::Zn(9)]);
        let a = build_ring(&spec).unwrap();
        let b = build_ring(&spec).unwrap();
        assert_eq!(a.add_table, b.add_table);
        assert_eq!(a.mul_table, b.mul_table);
        assert_eq!(a.neg_table, b.neg_table);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert_eq!(build_ring(&RingSpec::Zn(1)).unwrap_err(), Error::BadModulus(1));
        assert_eq!(
            build_ring(&RingSpec::PolyQuot { p: 4, f: vec![0, 0, 1] }).unwrap_err(),
            Error::NonPrimeModulus(4)
        );
        assert_eq!(
            build_ring(&RingSpec::PolyQuot { p: 2, f: vec![1] }).unwrap_err(),
            Error::NonMonicPoly
        );
        assert!(matches!(
            build_ring_with_cap(&RingSpec::Zn(5000), 4096).unwrap_err(),
            Error::SizeCapExceeded { size: 5000, cap: 4096 }
        ));
    }

    #[test]
    fn quotient_by_ideal_of_six() {
        let r = zn(12);
        let j = Ideal::from_generators(&r, &[Elem(6)]).unwrap();
        let (q, proj) = quotient_ring(&r, &j).unwrap();
        assert_eq!(q.size(), 6);
        // Projection is a ring homomorphism on all pairs.
        for a in r.elements() {
            for b in r.elements() {
                let pa = Elem(proj[a.0 as usize]);
                let pb = Elem(proj[b.0 as usize]);
                assert_eq!(proj[r.add(a, b).0 as usize], q.add(pa, pb).0);
                assert_eq!(proj[r.mul(a, b).0 as usize], q.mul(pa, pb).0);
            }
        }
        assert_eq!(check_axioms(&q), None);
    }

    #[test]
    fn quotient_degenerate_cases() {
        let r = zn(12);
        let zero = Ideal::from_generators(&r, &[]).unwrap();
        let (q, proj) = quotient_ring(&r, &zero).unwrap();
        assert_eq!(q.size(), 12);
        assert!((0..12).all(|i| proj[i] == i as u32));

        let evens = Ideal::from_generators(&r, &[Elem(2)]).unwrap();
        let (q2, _) = quotient_ring(&r, &evens).unwrap();
        assert_eq!(q2.size(), 2);

        let unit = Ideal::from_generators(&r, &[Elem(1)]).unwrap();
        assert_eq!(quotient_ring(&r, &unit).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn spec_render_text() {
        assert_eq!(RingSpec::Zn(12).render(), "Z/12");
        assert_eq!(
            RingSpec::PolyQuot { p: 2, f: vec![1, 1, 1] }.render(),
            "Z/2[x]/(x^2+x+1)"
        );
        assert_eq!(
            RingSpec::Product(vec![RingSpec::Zn(4), RingSpec::Zn(9)]).render(),
            "Z/4 x Z/9"
        );
    }
}
