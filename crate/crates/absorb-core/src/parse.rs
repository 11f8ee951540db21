//! Text grammar for ring specs, element literals, ideal literals and
//! monomials.
//!
//! Ring specs: `Z/<n>`, products with the `x` infix (`Z/4 x Z/9`), and
//! `Z/<p>[x]/(<poly>)` with the polynomial in expanded monomial form.
//! Element literals: an integer for `Z/n`, a `(a,b,...)` tuple for products,
//! a polynomial in `x` for quotients.  Ideal literals are comma-separated
//! element literals; monomials look like `t1^2*t2`.

use crate::monomial::Monomial;
use crate::ring::{Elem, RingKind, RingRef, RingSpec};
use crate::{Error, Result};

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, expected: expected.to_string() })
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("'{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("digit");
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, expected: "integer".to_string() })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }
}

/// Parses a ring spec such as `Z/12`, `Z/4 x Z/9`, `Z/2[x]/(x^2+x+1)`.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let mut factors = vec![ring_atom(&mut cur)?];
    loop {
        cur.skip_ws();
        if cur.eat(b'x') {
            cur.skip_ws();
            factors.push(ring_atom(&mut cur)?);
        } else {
            break;
        }
    }
    cur.skip_ws();
    if !cur.at_end() {
        return cur.err("end of spec or 'x'");
    }
    let spec = if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        RingSpec::Product(factors)
    };
    spec.validate(u128::MAX)?; // shape only; the size cap applies at build
    Ok(spec)
}

fn ring_atom(cur: &mut Cursor) -> Result<RingSpec> {
    if !cur.eat(b'Z') {
        return cur.err("'Z'");
    }
    cur.expect(b'/')?;
    let n = cur.uint()?;
    if cur.eat(b'[') {
        cur.expect(b'x')?;
        cur.expect(b']')?;
        cur.expect(b'/')?;
        cur.expect(b'(')?;
        let terms = poly_terms(cur, b')')?;
        cur.expect(b')')?;
        if !is_prime_u64(n) {
            return Err(Error::NonPrimeModulus(n));
        }
        let f = terms_to_coeffs(&terms, n);
        if f.len() < 2 || f.last() != Some(&1) {
            return Err(Error::NonMonicPoly);
        }
        Ok(RingSpec::PolyQuot { p: n, f })
    } else {
        Ok(RingSpec::Zn(n))
    }
}

fn is_prime_u64(n: u64) -> bool {
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

/// One parsed polynomial term: signed coefficient and exponent.
struct Term {
    coeff: i64,
    exp: u32,
}

/// Parses `c`, `x`, `c x^k`, `c*x^k`, ... joined by `+`/`-`, stopping at
/// `stop` or end of input.
fn poly_terms(cur: &mut Cursor, stop: u8) -> Result<Vec<Term>> {
    let mut terms = Vec::new();
    let mut sign: i64 = 1;
    cur.skip_ws();
    if cur.eat(b'-') {
        sign = -1;
    }
    loop {
        cur.skip_ws();
        let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            cur.uint()? as i64
        } else {
            1
        };
        cur.skip_ws();
        cur.eat(b'*');
        cur.skip_ws();
        let exp = if cur.eat(b'x') {
            if cur.eat(b'^') {
                cur.uint()? as u32
            } else {
                1
            }
        } else {
            0
        };
        terms.push(Term { coeff: sign * coeff, exp });
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                sign = 1;
            }
            Some(b'-') => {
                cur.bump();
                sign = -1;
            }
            Some(c) if c == stop => break,
            None if stop == 0 => break,
            _ => return cur.err("'+', '-' or end of polynomial"),
        }
    }
    Ok(terms)
}

/// Ascending coefficient vector reduced mod p, trailing zeros trimmed.
fn terms_to_coeffs(terms: &[Term], p: u64) -> Vec<u64> {
    let deg = terms.iter().map(|t| t.exp).max().unwrap_or(0) as usize;
    let mut coeffs = vec![0u64; deg + 1];
    for t in terms {
        let c = t.coeff.rem_euclid(p as i64) as u64;
        coeffs[t.exp as usize] = (coeffs[t.exp as usize] + c) % p;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// Parses one element literal in the syntax of the given ring.
pub fn parse_element(ring: &RingRef, text: &str) -> Result<Elem> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let e = element_inner(ring, &mut cur)?;
    cur.skip_ws();
    if !cur.at_end() {
        return cur.err("end of element literal");
    }
    Ok(e)
}

fn element_inner(ring: &RingRef, cur: &mut Cursor) -> Result<Elem> {
    match ring.kind() {
        RingKind::Zn(n) => {
            let neg = cur.eat(b'-');
            let v = cur.uint()?;
            let r = (v % n) as i64;
            let idx = if neg { (-r).rem_euclid(n as i64) } else { r };
            Ok(Elem(idx as u32))
        }
        RingKind::Product(factors) => {
            cur.expect(b'(')?;
            let mut parts = Vec::with_capacity(factors.len());
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    cur.skip_ws();
                    cur.expect(b',')?;
                }
                cur.skip_ws();
                parts.push(element_inner(f, cur)?.0);
                cur.skip_ws();
            }
            cur.expect(b')')?;
            Ok(ring.elem_from_parts(&parts))
        }
        RingKind::PolyQuot { p, .. } => {
            let terms = poly_terms(cur, 0)?;
            Ok(ring.elem_from_poly(terms_to_coeffs(&terms, p)))
        }
        RingKind::Quotient => cur.err("element literal of a quotient ring"),
    }
}

/// Splits on top-level commas (commas inside parentheses belong to product
/// element literals).
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Parses a comma-separated generator list; empty input gives no generators
/// (the zero ideal).
pub fn parse_ideal_gens(ring: &RingRef, text: &str) -> Result<Vec<Elem>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text)
        .iter()
        .map(|part| parse_element(ring, part.trim()))
        .collect()
}

/// Parses a monomial literal like `t1^2*t2` (or `1`) over `nvars` variables.
pub fn parse_monomial(nvars: usize, text: &str) -> Result<Monomial> {
    let mut cur = Cursor::new(text);
    let mut exps = vec![0u32; nvars];
    cur.skip_ws();
    if cur.peek() == Some(b'1') && !cur.text[cur.pos..].iter().any(|&c| c == b't') {
        cur.bump();
        cur.skip_ws();
        if !cur.at_end() {
            return cur.err("end of monomial");
        }
        return Ok(Monomial::new(exps));
    }
    loop {
        cur.skip_ws();
        if !cur.eat(b't') {
            return cur.err("'t<index>'");
        }
        let idx = cur.uint()? as usize;
        if idx < 1 || idx > nvars {
            return Err(Error::Parse {
                pos: cur.pos,
                expected: format!("variable index in 1..={nvars}"),
            });
        }
        let exp = if cur.eat(b'^') { cur.uint()? as u32 } else { 1 };
        exps[idx - 1] += exp;
        cur.skip_ws();
        if cur.eat(b'*') {
            continue;
        }
        if cur.at_end() {
            return Ok(Monomial::new(exps));
        }
        return cur.err("'*' or end of monomial");
    }
}

pub fn parse_monomial_list(nvars: usize, text: &str) -> Result<Vec<Monomial>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|part| parse_monomial(nvars, part.trim())).collect()
}

/// Parses `2`, `1,3`, or `1-3` into an ascending list of values.
pub fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once('-') {
            let lo: usize = lo.trim().parse().map_err(|_| Error::InvalidArgument(
                format!("bad range bound in {part:?}"),
            ))?;
            let hi: usize = hi.trim().parse().map_err(|_| Error::InvalidArgument(
                format!("bad range bound in {part:?}"),
            ))?;
            if lo > hi {
                return Err(Error::InvalidArgument(format!("empty range {part:?}")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| Error::InvalidArgument(
                format!("bad integer {part:?}"),
            ))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_ring;
    use proptest::prelude::*;

    #[test]
    fn ring_spec_atoms() {
        assert_eq!(parse_ring_spec("Z/12").unwrap(), RingSpec::Zn(12));
        assert_eq!(
            parse_ring_spec("Z/2[x]/(x^2+x+1)").unwrap(),
            RingSpec::PolyQuot { p: 2, f: vec![1, 1, 1] }
        );
        assert_eq!(
            parse_ring_spec("Z/4 x Z/9").unwrap(),
            RingSpec::Product(vec![RingSpec::Zn(4), RingSpec::Zn(9)])
        );
        assert_eq!(
            parse_ring_spec("Z/2[x]/(x^2) x Z/3").unwrap(),
            RingSpec::Product(vec![
                RingSpec::PolyQuot { p: 2, f: vec![0, 0, 1] },
                RingSpec::Zn(3)
            ])
        );
    }

    #[test]
    fn ring_spec_errors() {
        assert!(matches!(parse_ring_spec("Q/4"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_ring_spec("Z/"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ring_spec("Z/12 junk"), Err(Error::Parse { .. })));
        assert_eq!(
            parse_ring_spec("Z/4[x]/(x^2)").unwrap_err(),
            Error::NonPrimeModulus(4)
        );
        assert_eq!(
            parse_ring_spec("Z/3[x]/(2x^2+1)").unwrap_err(),
            Error::NonMonicPoly
        );
        assert_eq!(parse_ring_spec("Z/1").unwrap_err(), Error::BadModulus(1));
    }

    #[test]
    fn element_literals() {
        let zn = build_ring(&RingSpec::Zn(12)).unwrap();
        assert_eq!(parse_element(&zn, "7").unwrap(), Elem(7));
        assert_eq!(parse_element(&zn, "15").unwrap(), Elem(3));
        assert_eq!(parse_element(&zn, "-1").unwrap(), Elem(11));

        let prod = build_ring(&parse_ring_spec("Z/4 x Z/9").unwrap()).unwrap();
        let e = parse_element(&prod, "(3, 7)").unwrap();
        assert_eq!(prod.element_text(e), "(3,7)");

        let pq = build_ring(&parse_ring_spec("Z/2[x]/(x^2)").unwrap()).unwrap();
        assert_eq!(parse_element(&pq, "x+1").unwrap(), Elem(3));
        assert_eq!(parse_element(&pq, "x^2").unwrap(), Elem(0)); // reduced
        assert_eq!(parse_element(&pq, "0").unwrap(), Elem(0));
    }

    #[test]
    fn ideal_literals() {
        let zn = build_ring(&RingSpec::Zn(12)).unwrap();
        assert_eq!(parse_ideal_gens(&zn, "4, 6").unwrap(), vec![Elem(4), Elem(6)]);
        assert_eq!(parse_ideal_gens(&zn, "").unwrap(), vec![]);
        let prod = build_ring(&parse_ring_spec("Z/4 x Z/9").unwrap()).unwrap();
        let gens = parse_ideal_gens(&prod, "(1,0), (0,3)").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(prod.element_text(gens[0]), "(1,0)");
    }

    #[test]
    fn monomial_literals() {
        let m = parse_monomial(3, "t1^2*t2").unwrap();
        assert_eq!(m.exps(), &[2, 1, 0]);
        assert_eq!(parse_monomial(3, "1").unwrap().exps(), &[0, 0, 0]);
        assert_eq!(m.text(), "t1^2*t2");
        assert!(parse_monomial(2, "t3").is_err());
        let list = parse_monomial_list(2, "t1, t2^4").unwrap();
        assert_eq!(list.len(), 2);
    }

    #[test]
    fn usize_lists() {
        assert_eq!(parse_usize_list("2").unwrap(), vec![2]);
        assert_eq!(parse_usize_list("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_usize_list("1-3").unwrap(), vec![1, 2, 3]);
        assert!(parse_usize_list("3-1").is_err());
    }

    fn atom_strategy() -> impl Strategy<Value = RingSpec> {
        prop_oneof![
            (2u64..60).prop_map(RingSpec::Zn),
            (prop_oneof![Just(2u64), Just(3), Just(5)], 1usize..4).prop_flat_map(|(p, deg)| {
                proptest::collection::vec(0..p, deg).prop_map(move |mut f| {
                    f.push(1); // monic leading coefficient
                    RingSpec::PolyQuot { p, f }
                })
            }),
        ]
    }

    fn spec_strategy() -> impl Strategy<Value = RingSpec> {
        prop_oneof![
            atom_strategy(),
            proptest::collection::vec(atom_strategy(), 2..4).prop_map(RingSpec::Product),
        ]
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(spec in spec_strategy()) {
            let rendered = spec.render();
            let parsed = parse_ring_spec(&rendered).unwrap();
            prop_assert_eq!(parsed, spec);
        }
    }

    #[test]
    fn element_text_round_trip() {
        for text in ["Z/12", "Z/4 x Z/9", "Z/2[x]/(x^2)", "Z/3[x]/(x^2)", "Z/2[x]/(x^2+x+1)"] {
            let ring = build_ring(&parse_ring_spec(text).unwrap()).unwrap();
            for e in ring.elements() {
                let parsed = parse_element(&ring, &ring.element_text(e)).unwrap();
                assert_eq!(parsed, e, "round trip in {text}");
            }
        }
    }
}
