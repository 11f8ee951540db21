//! Ideals of a finite ring and the ideal algebra the predicate checkers
//! consume: generation, sum, product, power, intersection, colon, radical,
//! and full lattice enumeration.
//!
//! Ideals are stored as explicit member bitsets; closures are cheap at this
//! scale and set operations become word-parallel.  Generator lists are
//! advisory metadata: equality is set equality.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::ring::{size_cap, Elem, Ring, RingRef};
use crate::{Error, Result};

/// An ideal of a finite ring: the member set plus the generators it was
/// built from (empty for ideals produced by set algebra).
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingRef,
    members: BitSet,
    gens: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.members == other.members
    }
}
impl Eq for Ideal {}

/// Closure of a seed set under addition.  In a finite ring the additive
/// closure of a set containing 0 is already a subgroup.
fn additive_closure(ring: &Ring, seed: impl IntoIterator<Item = u32>) -> BitSet {
    let mut set = BitSet::new(ring.size());
    set.insert(0);
    let mut members: Vec<u32> = vec![0];
    let mut queue: Vec<u32> = seed.into_iter().collect();
    while let Some(x) = queue.pop() {
        if !set.insert(x as usize) {
            continue;
        }
        members.push(x);
        for i in 0..members.len() {
            let s = ring.add(Elem(x), Elem(members[i])).0;
            if !set.contains(s as usize) {
                queue.push(s);
            }
        }
    }
    set
}

impl Ideal {
    /// Smallest ideal containing `gens`: the additive closure of all ring
    /// multiples of the generators.  Empty `gens` gives the zero ideal.
    pub fn from_generators(ring: &RingRef, gens: &[Elem]) -> Result<Ideal> {
        for g in gens {
            ring.elem(g.0)?;
        }
        let multiples = gens
            .iter()
            .flat_map(|&g| ring.elements().map(move |r| (r, g)))
            .map(|(r, g)| ring.mul(r, g).0)
            .collect::<Vec<_>>();
        let members = additive_closure(ring, multiples);
        Ok(Ideal { ring: ring.clone(), members, gens: gens.to_vec() })
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::from_generators(ring, &[]).expect("zero ideal")
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        let one = ring.one();
        Ideal::from_generators(ring, &[one]).expect("unit ideal")
    }

    fn from_members(ring: &RingRef, members: BitSet) -> Ideal {
        Ideal { ring: ring.clone(), members, gens: Vec::new() }
    }

    /// Image of this ideal under a surjective projection (element index ->
    /// image index); images of ideals under surjections are ideals.
    pub fn push_forward(&self, target: &RingRef, projection: &[u32]) -> Ideal {
        let mut members = BitSet::new(target.size());
        for m in self.members() {
            members.insert(projection[m] as usize);
        }
        let image = Ideal::from_members(target, members);
        debug_assert!(image.validate());
        image
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn member_set(&self) -> &BitSet {
        &self.members
    }

    /// Ascending member indices.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // ideals always contain 0
    }

    pub fn contains_elem(&self, x: Elem) -> bool {
        self.members.contains(x.0 as usize)
    }

    pub fn is_proper(&self) -> bool {
        !self.contains_elem(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(other.members.is_subset(&self.members))
    }

    /// `x` lies in the set difference `self - other`.
    pub fn in_difference(&self, x: Elem, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.contains_elem(x) && !other.contains_elem(x))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut members = BitSet::new(self.ring.size());
        for p in self.members() {
            for q in other.members() {
                members.insert(self.ring.add(Elem(p as u32), Elem(q as u32)).0 as usize);
            }
        }
        Ok(Ideal::from_members(&self.ring, members))
    }

    /// Ideal generated by all pairwise products: their additive closure is
    /// already absorbing since rp ∈ P for p ∈ P.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for p in self.members() {
            for q in other.members() {
                prods.push(self.ring.mul(Elem(p as u32), Elem(q as u32)).0);
            }
        }
        let members = additive_closure(&self.ring, prods);
        Ok(Ideal::from_members(&self.ring, members))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Ideal::from_members(&self.ring, members))
    }

    /// Iterated product; `power(1)` is the ideal itself.
    pub fn power(&self, k: usize) -> Ideal {
        assert!(k >= 1, "power requires exponent >= 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `{r : rx ∈ self}`; always an ideal containing `self`.
    pub fn colon(&self, x: Elem) -> Ideal {
        let mut members = BitSet::new(self.ring.size());
        for r in self.ring.elements() {
            if self.contains_elem(self.ring.mul(r, x)) {
                members.insert(r.0 as usize);
            }
        }
        Ideal::from_members(&self.ring, members)
    }

    /// `{r : r^k ∈ self for some 1 <= k <= |R|}`.  The ring-size exponent
    /// bound suffices: powers of r cycle within |R| steps.
    pub fn radical(&self) -> Ideal {
        let mut members = BitSet::new(self.ring.size());
        for r in self.ring.elements() {
            let mut power = r;
            for _ in 0..self.ring.size() {
                if self.contains_elem(power) {
                    members.insert(r.0 as usize);
                    break;
                }
                power = self.ring.mul(power, r);
            }
        }
        Ideal::from_members(&self.ring, members)
    }

    /// Membership invariant check: contains 0, closed under addition,
    /// absorbs ring multiplication.
    pub fn validate(&self) -> bool {
        if !self.contains_elem(self.ring.zero()) {
            return false;
        }
        let idx: Vec<usize> = self.members().collect();
        for &p in &idx {
            for &q in &idx {
                if !self.contains_elem(self.ring.add(Elem(p as u32), Elem(q as u32))) {
                    return false;
                }
            }
            for r in self.ring.elements() {
                if !self.contains_elem(self.ring.mul(r, Elem(p as u32))) {
                    return false;
                }
            }
        }
        true
    }

    /// Greedy minimal generating sequence: scan members ascending, keeping
    /// each element not yet generated.  Deterministic, so reports render
    /// ideals identically across runs.
    pub fn canonical_gens(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = Vec::new();
        let mut closure = Ideal::zero(&self.ring);
        for m in self.members() {
            if m == 0 || closure.contains_elem(Elem(m as u32)) {
                continue;
            }
            gens.push(Elem(m as u32));
            closure = Ideal::from_generators(&self.ring, &gens).expect("members valid");
            if closure.members == self.members {
                break;
            }
        }
        gens
    }

    /// Canonical generator texts; the zero ideal renders as `0`.
    pub fn gens_text(&self) -> Vec<String> {
        let gens = self.canonical_gens();
        if gens.is_empty() {
            vec!["0".to_string()]
        } else {
            gens.iter().map(|&g| self.ring.element_text(g)).collect()
        }
    }

    /// As-built generator list (may be empty for derived ideals).
    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }
}

/// Every ideal of the ring, each exactly once, sorted by
/// (cardinality, member set lexicographic).  Computed as the closure of the
/// principal ideals under pairwise sum: subset enumeration would be 2^|R|.
pub fn enumerate_ideals(ring: &RingRef) -> Result<Vec<Ideal>> {
    let cap = size_cap();
    if ring.size() as u128 > cap {
        return Err(Error::SizeCapExceeded { size: ring.size() as u128, cap });
    }
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut sets: Vec<BitSet> = Vec::new();
    for a in ring.elements() {
        let p = Ideal::from_generators(ring, &[a])?;
        if seen.insert(p.members.clone()) {
            sets.push(p.members);
        }
    }
    let mut frontier: Vec<BitSet> = sets.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for s in sets.iter() {
                let mut sum = BitSet::new(ring.size());
                for p in f.iter() {
                    for q in s.iter() {
                        sum.insert(ring.add(Elem(p as u32), Elem(q as u32)).0 as usize);
                    }
                }
                if !seen.contains(&sum) {
                    seen.insert(sum.clone());
                    next.push(sum);
                }
            }
        }
        sets.extend(next.iter().cloned());
        frontier = next;
    }
    let mut ideals: Vec<Ideal> = sets
        .into_iter()
        .map(|members| Ideal::from_members(ring, members))
        .collect();
    ideals.sort_by(|a, b| {
        (a.len(), a.members.to_vec()).cmp(&(b.len(), b.members.to_vec()))
    });
    Ok(ideals)
}
