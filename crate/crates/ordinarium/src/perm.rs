//! Permutation groups at desk scale: cycle types, transitivity, witness
//! searches, and the full subgroup lattice of S₄ and S₆ built by join-closure
//! of cyclic subgroups.
//!
//! The lattice construction materializes every subgroup, so it is kept to
//! degree ≤ 6 (|S₆| = 720, 1455 subgroups). Elements are indexed into a
//! precomputed multiplication table and subgroups live in fixed bitsets,
//! which keeps the join-closure loop allocation-free.

use crate::{Error, Result};
use std::collections::{HashMap, VecDeque};

pub use crate::splitting::chebotarev_frequency;

/// A permutation of {0, …, n−1} by its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!(
                    "not a permutation: {:?}",
                    images
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Build from disjoint cycles in the usual 1-based notation,
    /// e.g. `from_cycles(4, &[&[1, 2, 3, 4]])` is the 4-cycle (1,2,3,4).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let a = cyc[w]
                    .checked_sub(1)
                    .ok_or_else(|| Error::Precondition("cycle entries are 1-based".into()))?;
                let b = cyc[(w + 1) % cyc.len()] - 1;
                if a >= n || b >= n {
                    return Err(Error::Precondition("cycle entry out of range".into()));
                }
                images[a] = b;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// self ∘ rhs: apply rhs first.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        Perm {
            images: rhs.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Multiset of cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Cycle notation string, fixed points omitted, 1-based.
    pub fn cycles_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut s = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            s.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    s.push(',');
                }
                s.push_str(&(x + 1).to_string());
                first = false;
                x = self.images[x];
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

/// A permutation group with its elements materialized.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Precondition("generator degree mismatch".into()));
            }
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut seen: HashMap<Perm, ()> = elements.iter().cloned().map(|p| (p, ())).collect();
        let mut queue: VecDeque<Perm> = elements.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        elements.sort();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = vec![];
        if degree >= 2 {
            gens.push(Perm::from_cycles(degree, &[&[1, 2]]).unwrap());
            let full: Vec<usize> = (1..=degree).collect();
            gens.push(Perm::from_cycles(degree, &[&full]).unwrap());
        }
        Self::from_generators(degree, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Orbit of 0 is everything.
    pub fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return true;
        }
        let mut reached = vec![false; self.degree];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        reached.into_iter().all(|b| b)
    }

    /// First element (in sorted order) with the given cycle type, or None
    /// after full enumeration.
    pub fn find_cycle_type(&self, partition: &[usize]) -> Option<&Perm> {
        let mut target = partition.to_vec();
        target.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert_eq!(target.iter().sum::<usize>(), self.degree);
        self.elements.iter().find(|p| p.cycle_type() == target)
    }
}

const MAX_ORDER: usize = 720;
const BITS_WORDS: usize = MAX_ORDER / 64 + 1;

/// Fixed bitset over element indices of S_n, n ≤ 6.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Bits([u64; BITS_WORDS]);

impl Bits {
    fn empty() -> Self {
        Bits([0; BITS_WORDS])
    }
    fn set(&mut self, i: u16) {
        self.0[(i / 64) as usize] |= 1 << (i % 64);
    }
    fn has(&self, i: u16) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        (0..MAX_ORDER as u16).filter(move |&i| self.has(i))
    }
}

/// Indexed multiplication table of S_n.
struct SymTable {
    n: usize,
    elems: Vec<Perm>,
    mult: Vec<u16>,
    order: usize,
}

impl SymTable {
    fn new(n: usize) -> Self {
        let sn = PermGroup::symmetric(n);
        let elems = sn.elements().to_vec();
        let order = elems.len();
        let index: HashMap<&Perm, u16> = elems.iter().zip(0u16..).collect();
        let mut mult = vec![0u16; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mult[i * order + j] = index[&a.compose(b)];
            }
        }
        SymTable {
            n,
            elems,
            mult,
            order,
        }
    }

    #[inline]
    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mult[a as usize * self.order + b as usize]
    }

    fn identity_index(&self) -> u16 {
        self.elems
            .iter()
            .position(|p| *p == Perm::identity(self.n))
            .unwrap() as u16
    }

    /// Subgroup generated by the given element indices.
    fn closure(&self, gens: &[u16]) -> Bits {
        let mut bits = Bits::empty();
        let id = self.identity_index();
        bits.set(id);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !bits.has(y) {
                    bits.set(y);
                    queue.push(y);
                }
            }
        }
        bits
    }
}

/// One transitive subgroup in the lattice report.
#[derive(Clone, Debug)]
pub struct TransitiveSubgroupCheck {
    pub order: usize,
    /// An element of cycle type (q, q), when one exists.
    pub witness: Option<Perm>,
}

/// Result of the transitive-subgroup cycle-type verification on S_{2q}.
#[derive(Clone, Debug)]
pub struct Transitive2qReport {
    pub q: usize,
    pub subgroup_count: usize,
    pub transitive: Vec<TransitiveSubgroupCheck>,
    pub all_contain_qq: bool,
}

/// Enumerate every subgroup of S_{2q} (join-closure of cyclic subgroups),
/// filter to the transitive ones, and check each contains an element that is
/// a product of two disjoint q-cycles. Supported for q ∈ {2, 3}.
pub fn verify_transitive_2q(q: usize) -> Result<Transitive2qReport> {
    if !(q == 2 || q == 3) {
        return Err(Error::Budget(format!(
            "q = {} out of range: the subgroup lattice is enumerated only for 2q <= 6",
            q
        )));
    }
    let n = 2 * q;
    let table = SymTable::new(n);

    // distinct cyclic subgroups, keyed by bitset, remembering one generator
    let mut cyclics: Vec<(Bits, u16)> = vec![];
    let mut seen_cyclic: HashMap<Bits, ()> = HashMap::new();
    for e in 0..table.order as u16 {
        let b = table.closure(&[e]);
        if seen_cyclic.insert(b, ()).is_none() {
            cyclics.push((b, e));
        }
    }

    // join-closure: every subgroup is a join of cyclic subgroups
    let mut subgroups: HashMap<Bits, Vec<u16>> = HashMap::new();
    let mut queue: VecDeque<Bits> = VecDeque::new();
    for (b, e) in &cyclics {
        if subgroups.insert(*b, vec![*e]).is_none() {
            queue.push_back(*b);
        }
    }
    while let Some(b) = queue.pop_front() {
        let gens = subgroups[&b].clone();
        for (cb, ce) in &cyclics {
            if cb.is_subset(&b) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*ce);
            let j = table.closure(&joined_gens);
            subgroups.entry(j).or_insert_with(|| {
                queue.push_back(j);
                joined_gens
            });
        }
    }

    let mut all: Vec<(Bits, Vec<u16>)> = subgroups.into_iter().collect();
    all.sort_by_key(|(b, _)| (b.count(), b.0));

    let target = vec![q, q];
    let mut transitive = vec![];
    let mut all_contain = true;
    for (bits, gens) in &all {
        // orbit of 0 under the subgroup's generators
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = table.elems[g as usize].apply(x);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        if !reached.iter().all(|&r| r) {
            continue;
        }
        let order = bits.count();
        // orbit-stabilizer: transitivity forces n | order
        debug_assert_eq!(order % n, 0);
        let witness = bits
            .iter()
            .map(|i| &table.elems[i as usize])
            .find(|p| p.cycle_type() == target)
            .cloned();
        if witness.is_none() {
            all_contain = false;
        }
        transitive.push(TransitiveSubgroupCheck { order, witness });
    }

    Ok(Transitive2qReport {
        q,
        subgroup_count: all.len(),
        transitive,
        all_contain_qq: all_contain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Perm::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        let c4 = Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(c4.cycle_type(), vec![4]);
        let two_threes = Perm::from_cycles(6, &[&[1, 3, 5], &[2, 4, 6]]).unwrap();
        assert_eq!(two_threes.cycle_type(), vec![3, 3]);
    }

    #[test]
    fn transitivity_examples() {
        let c4 = PermGroup::from_generators(
            4,
            vec![Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()],
        )
        .unwrap();
        assert!(c4.is_transitive());
        assert_eq!(c4.order(), 4);
        let swap = PermGroup::from_generators(4, vec![Perm::from_cycles(4, &[&[1, 2]]).unwrap()])
            .unwrap();
        assert!(!swap.is_transitive());
        assert!(PermGroup::symmetric(6).is_transitive());
    }

    #[test]
    fn find_cycle_type_examples() {
        let c4 =
            PermGroup::from_generators(4, vec![Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()])
                .unwrap();
        let w = c4.find_cycle_type(&[2, 2]).unwrap();
        assert_eq!(w, &Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap());

        let c6 =
            PermGroup::from_generators(6, vec![Perm::from_cycles(6, &[&[1, 2, 3, 4, 5, 6]]).unwrap()])
                .unwrap();
        let w = c6.find_cycle_type(&[3, 3]).unwrap();
        assert_eq!(w, &Perm::from_cycles(6, &[&[1, 3, 5], &[2, 4, 6]]).unwrap());

        let a3 = PermGroup::from_generators(3, vec![Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap()])
            .unwrap();
        assert!(a3.find_cycle_type(&[2, 1]).is_none());
    }

    #[test]
    fn group_orders() {
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::symmetric(6).order(), 720);
    }

    #[test]
    fn lattice_s4() {
        let report = verify_transitive_2q(2).unwrap();
        // S4 has 30 subgroups, 9 of them transitive (1 V4 + 3 C4 + 3 D4 + A4 + S4)
        assert_eq!(report.subgroup_count, 30);
        assert_eq!(report.transitive.len(), 9);
        assert!(report.all_contain_qq);
        for t in &report.transitive {
            assert_eq!(t.order % 4, 0);
            assert_eq!(t.witness.as_ref().unwrap().cycle_type(), vec![2, 2]);
        }
    }

    #[test]
    fn rejects_large_q() {
        assert!(verify_transitive_2q(5).is_err());
    }

    #[test]
    fn orders_divide_group_order() {
        let report = verify_transitive_2q(2).unwrap();
        for t in &report.transitive {
            assert_eq!(24 % t.order, 0);
        }
    }
}
