//! Sub-partial-monoids of `[0, n-1]` and their combinatorial invariants.
//!
//! A partial monoid `E` is a subset of `[0, n-1]` that contains 0 and is
//! closed under addition whenever the sum stays below `n`. Everything here is
//! purely combinatorial; the algebra module realises these sets as exponent
//! sets of subalgebras of `K[x]/x^n`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Membership bitmask over `[0, n-1]`.
///
/// Bounds up to 64 fit in a single inline word (the fast path used by every
/// enumeration); larger bounds spill into additional heap words.
#[derive(Clone, Default)]
pub struct Mask {
    words: SmallVec<[u64; 1]>,
}

impl Mask {
    pub fn empty(n: usize) -> Self {
        Self {
            words: SmallVec::from_elem(0, n.div_ceil(64).max(1)),
        }
    }

    pub fn from_u64(bits: u64) -> Self {
        let mut words = SmallVec::new();
        words.push(bits);
        Self { words }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// The mask as a single word, when every member is below 64.
    pub fn as_u64(&self) -> Option<u64> {
        match self.significant_words() {
            [] => Some(0),
            [w] => Some(*w),
            _ => None,
        }
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    fn significant_words(&self) -> &[u64] {
        let end = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..end]
    }
}

impl PartialEq for Mask {
    fn eq(&self, other: &Self) -> bool {
        self.significant_words() == other.significant_words()
    }
}

impl Eq for Mask {}

impl std::hash::Hash for Mask {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.significant_words().hash(state);
    }
}

impl Ord for Mask {
    /// Numeric order of the mask read as a binary integer.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.significant_words();
        let b = other.significant_words();
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A sub-partial-monoid `E` of `[0, n-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialMonoid {
    n: usize,
    members: Mask,
}

impl PartialMonoid {
    /// Validates `members` as a partial monoid of `[0, n-1]`.
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mask = mask_from_indices(n, members)?;
        if !mask.contains(0) {
            return Err(Error::NotPartialMonoid(format!(
                "{members:?} does not contain 0"
            )));
        }
        if let Some((a, b)) = first_closure_gap(n, &mask) {
            return Err(Error::NotPartialMonoid(format!(
                "{a} + {b} = {} is missing from {members:?}",
                a + b
            )));
        }
        Ok(Self { n, members: mask })
    }

    /// Builds from a mask that is already known to be closed.
    pub(crate) fn from_mask_unchecked(n: usize, members: Mask) -> Self {
        debug_assert!(members.contains(0));
        debug_assert!(first_closure_gap(n, &members).is_none());
        Self { n, members }
    }

    /// The whole interval `[0, n-1]`.
    pub fn full(n: usize) -> Result<Self> {
        check_bound(n)?;
        let mut m = Mask::empty(n);
        (0..n).for_each(|i| m.insert(i));
        Ok(Self { n, members: m })
    }

    /// The trivial monoid `{0}`.
    pub fn trivial(n: usize) -> Result<Self> {
        check_bound(n)?;
        let mut m = Mask::empty(n);
        m.insert(0);
        Ok(Self { n, members: m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> &Mask {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.members.contains(i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Co-size `n - #E`; the codimension of any subalgebra with this exponent set.
    pub fn cosize(&self) -> usize {
        self.n - self.len()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }

    pub fn positive(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().filter(|&i| i > 0)
    }

    pub fn max_element(&self) -> usize {
        self.members.iter().last().unwrap_or(0)
    }

    pub fn is_subset(&self, other: &PartialMonoid) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `E \ {n-1}` viewed inside `[0, n-2]`, if `n > 1`.
    ///
    /// Dropping the top element never breaks closure below `n - 1`.
    pub fn truncate(&self) -> Option<PartialMonoid> {
        if self.n <= 1 {
            return None;
        }
        let mut m = self.members.clone();
        m.remove(self.n - 1);
        Some(Self::from_mask_unchecked(self.n - 1, m))
    }
}

impl PartialOrd for PartialMonoid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PartialMonoid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for PartialMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.n)
    }
}

impl fmt::Display for PartialMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct MonoidRepr {
    n: usize,
    #[serde(rename = "E")]
    members: Vec<usize>,
}

impl Serialize for PartialMonoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonoidRepr {
            n: self.n,
            members: self.elements(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialMonoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MonoidRepr::deserialize(d)?;
        PartialMonoid::new(r.n, &r.members).map_err(serde::de::Error::custom)
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidBound(n))
    } else {
        Ok(())
    }
}

fn mask_from_indices(n: usize, s: &[usize]) -> Result<Mask> {
    check_bound(n)?;
    let mut mask = Mask::empty(n);
    for &i in s {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        mask.insert(i);
    }
    Ok(mask)
}

fn first_closure_gap(n: usize, mask: &Mask) -> Option<(usize, usize)> {
    let pos: Vec<usize> = mask.iter().filter(|&i| i > 0).collect();
    for (i, &a) in pos.iter().enumerate() {
        for &b in &pos[i..] {
            if a + b >= n {
                break;
            }
            if !mask.contains(a + b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// True iff `s` contains 0 and is closed under addition below `n`.
pub fn is_partial_monoid(n: usize, s: &[usize]) -> Result<bool> {
    let mask = mask_from_indices(n, s)?;
    Ok(mask.contains(0) && first_closure_gap(n, &mask).is_none())
}

/// All partial monoids of `[0, n-1]` in ascending mask order.
///
/// Membership of each `k` is decided in increasing order: `k` is forced in
/// when it is a sum of two chosen positive elements, and otherwise free.
pub fn enumerate_partial_monoids(n: usize) -> Result<Vec<PartialMonoid>> {
    check_bound(n)?;
    if n > 64 {
        return Err(Error::Unsupported(format!(
            "enumeration is limited to n <= 64, got {n}"
        )));
    }
    fn forced(mask: u64, k: usize) -> bool {
        (1..=k / 2).any(|a| (mask >> a) & 1 == 1 && (mask >> (k - a)) & 1 == 1)
    }
    fn walk(n: usize, k: usize, mask: u64, out: &mut Vec<u64>) {
        if k == n {
            out.push(mask);
            return;
        }
        let with = mask | (1 << k);
        if forced(mask, k) {
            walk(n, k + 1, with, out);
        } else {
            walk(n, k + 1, mask, out);
            walk(n, k + 1, with, out);
        }
    }
    let mut masks = Vec::new();
    walk(n, 1, 1, &mut masks);
    masks.sort_unstable();
    Ok(masks
        .into_iter()
        .map(|m| PartialMonoid::from_mask_unchecked(n, Mask::from_u64(m)))
        .collect())
}

/// Unordered pairs `{a, b}` of positive members with `a + b <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sumset2 {
    pub base: PartialMonoid,
    /// Pairs with `a <= b`, sorted.
    pub pairs: Vec<(usize, usize)>,
}

impl Sumset2 {
    /// The multiset of pair sums, parallel to `pairs`.
    pub fn values(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(a, b)| a + b).collect()
    }

    /// `E^(2)` as a set, ascending.
    pub fn value_set(&self) -> Vec<usize> {
        let mut v = self.values();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Multiplicity of each sum.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for v in self.values() {
            *m.entry(v).or_insert(0) += 1;
        }
        m
    }

    pub fn contains_value(&self, v: usize) -> bool {
        self.pairs.iter().any(|&(a, b)| a + b == v)
    }
}

pub fn sumset2(e: &PartialMonoid) -> Sumset2 {
    let pos: Vec<usize> = e.positive().collect();
    let mut pairs = Vec::new();
    for (i, &a) in pos.iter().enumerate() {
        for &b in &pos[i..] {
            if a + b >= e.n {
                break;
            }
            pairs.push((a, b));
        }
    }
    Sumset2 {
        base: e.clone(),
        pairs,
    }
}

/// Number of minimal generators: positive members that are not a pair sum.
pub fn d_invariant(e: &PartialMonoid) -> usize {
    let sums = sumset2(e).value_set();
    e.positive()
        .filter(|x| sums.binary_search(x).is_err())
        .count()
}

/// The minimal generators themselves, ascending.
pub fn generators(e: &PartialMonoid) -> Vec<usize> {
    let sums = sumset2(e).value_set();
    e.positive()
        .filter(|x| sums.binary_search(x).is_err())
        .collect()
}

/// True iff two distinct pairs share a sum.
pub fn has_multiplicity(e: &PartialMonoid) -> bool {
    sumset2(e).multiplicities().values().any(|&c| c > 1)
}

/// `n-1` is in `E` and is not a pair sum, i.e. `n-1` is a generator.
///
/// Cross-checked against the removal characterisation: `E \ {n-1}` stays
/// closed inside the same ambient interval.
pub fn property_n(e: &PartialMonoid) -> bool {
    let top = e.n - 1;
    let holds = e.n > 1 && e.contains(top) && !sumset2(e).contains_value(top);
    if e.n > 1 && e.contains(top) {
        let rest: Vec<usize> = e.elements().into_iter().filter(|&x| x != top).collect();
        let removable = is_partial_monoid(e.n, &rest).expect("indices already in range");
        assert_eq!(
            holds, removable,
            "generator test and removal test disagree for {e:?}"
        );
    }
    holds
}

/// The invariant `e_n(E)`, computed by unrolling its recursion.
///
/// `e_1 = 0`; when `n-1` is in `E` it is dropped at no cost, otherwise
/// `d(E)` is added and the bound shrinks by one.
pub fn e_invariant(e: &PartialMonoid) -> usize {
    let mut total = 0;
    let mut cur = e.clone();
    while cur.n > 1 {
        if !cur.contains(cur.n - 1) {
            total += d_invariant(&cur);
        }
        cur = cur.truncate().expect("n > 1");
    }
    total
}

/// Memo table for `e_invariant`, keyed by `(mask, n)`.
///
/// Not shared between threads; give each worker its own.
#[derive(Debug, Default)]
pub struct EMemo {
    table: HashMap<(Mask, usize), usize>,
}

impl EMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, e: &PartialMonoid) -> usize {
        if e.n == 1 {
            return 0;
        }
        let key = (e.members.clone(), e.n);
        if let Some(&v) = self.table.get(&key) {
            return v;
        }
        let step = if e.contains(e.n - 1) {
            0
        } else {
            d_invariant(e)
        };
        let v = step + self.get(&e.truncate().expect("n > 1"));
        self.table.insert(key, v);
        v
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Counts of partial monoids grouped by co-size and `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidTable {
    pub n: usize,
    /// `cells[c]` maps `e` to the number of monoids with co-size `c`.
    pub cells: BTreeMap<usize, BTreeMap<usize, u64>>,
}

impl MonoidTable {
    pub fn get(&self, c: usize, e: usize) -> u64 {
        self.cells
            .get(&c)
            .and_then(|row| row.get(&e))
            .copied()
            .unwrap_or(0)
    }

    pub fn row_total(&self, c: usize) -> u64 {
        self.cells.get(&c).map_or(0, |row| row.values().sum())
    }

    pub fn max_e(&self) -> usize {
        self.cells
            .values()
            .flat_map(|row| row.keys())
            .copied()
            .max()
            .unwrap_or(0)
    }
}

pub fn monoid_table(n: usize) -> Result<MonoidTable> {
    let mut memo = EMemo::new();
    let mut cells: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for e in enumerate_partial_monoids(n)? {
        let inv = memo.get(&e);
        *cells.entry(e.cosize()).or_default().entry(inv).or_insert(0) += 1;
    }
    Ok(MonoidTable { n, cells })
}

/// Half-width of the small-element window used to parametrise Frobenius families.
pub fn frobenius_window(f: usize) -> usize {
    if f.is_multiple_of(2) {
        f / 2 - 1
    } else {
        (f - 1) / 2
    }
}

/// The completion of a seed `T ⊆ [1, h]` to a partial monoid of `[0, f]` in
/// which `f` is a generator, or `None` when the closure of `T` reaches `f`.
///
/// The result contains the closure `S` of `T`, every `x` in `[h+1, f-1]` with
/// `f - x ∉ S` (and `2x != f`), and `f` itself.
pub fn frobenius_completion(f: usize, seed: &[usize]) -> Result<Option<PartialMonoid>> {
    if f < 1 {
        return Err(Error::InvalidBound(f));
    }
    let n = f + 1;
    let h = frobenius_window(f);
    let mut closed = Mask::empty(n);
    closed.insert(0);
    for &t in seed {
        if t == 0 || t > h {
            return Err(Error::IndexOutOfRange { index: t, n: h + 1 });
        }
        closed.insert(t);
    }
    // Additive closure within [0, f].
    for k in 1..=f {
        if !closed.contains(k) && (1..=k / 2).any(|a| closed.contains(a) && closed.contains(k - a))
        {
            closed.insert(k);
        }
    }
    if closed.contains(f) {
        return Ok(None);
    }
    let mut out = closed.clone();
    for x in h + 1..f {
        if !closed.contains(f - x) && 2 * x != f {
            out.insert(x);
        }
    }
    out.insert(f);
    Ok(Some(PartialMonoid::from_mask_unchecked(n, out)))
}

/// All seeds `T ⊆ [1, h]`, completed and deduplicated, in ascending mask order.
/// The completion of the empty seed (where `m^2 = 0`) is included.
pub fn frobenius_candidates(f: usize) -> Result<Vec<PartialMonoid>> {
    if f < 1 {
        return Err(Error::InvalidBound(f));
    }
    let h = frobenius_window(f);
    if h >= 63 {
        return Err(Error::Unsupported(format!(
            "Frobenius number {f} too large"
        )));
    }
    let mut out = Vec::new();
    for bits in 0u64..(1 << h) {
        let seed: Vec<usize> = (1..=h).filter(|t| (bits >> (t - 1)) & 1 == 1).collect();
        if let Some(e) = frobenius_completion(f, &seed)? {
            out.push(e);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Inclusion-maximal partial monoids of `[0, f]` having `f` as a generator,
/// excluding the completion of the empty seed (the `m^2 = 0` case).
pub fn frobenius_maximal_monoids(f: usize) -> Result<Vec<PartialMonoid>> {
    let trivial = frobenius_completion(f, &[])?;
    let cands: Vec<PartialMonoid> = frobenius_candidates(f)?
        .into_iter()
        .filter(|e| Some(e) != trivial.as_ref())
        .collect();
    Ok(cands
        .iter()
        .filter(|e| !cands.iter().any(|o| o != *e && e.is_subset(o)))
        .cloned()
        .collect())
}

/// `f` is the Frobenius element of `E ∪ [f+1, ∞)`: every smaller gap is
/// filled consistently and `f` is not a sum of two positive members.
pub fn has_frobenius_element(e: &PartialMonoid, f: usize) -> bool {
    e.n == f + 1 && property_n(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(n: usize, s: &[usize]) -> PartialMonoid {
        PartialMonoid::new(n, s).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert!(is_partial_monoid(4, &[0, 2]).unwrap());
        assert_eq!(
            is_partial_monoid(4, &[0, 2, 4]),
            Err(Error::IndexOutOfRange { index: 4, n: 4 })
        );
        assert!(!is_partial_monoid(6, &[0, 2, 3]).unwrap());
        assert!(!is_partial_monoid(3, &[1, 2]).unwrap());
        assert_eq!(is_partial_monoid(0, &[]), Err(Error::InvalidBound(0)));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partial_monoids(1).unwrap(), vec![pm(1, &[0])]);
        let three = enumerate_partial_monoids(3).unwrap();
        assert_eq!(three, vec![pm(3, &[0]), pm(3, &[0, 2]), pm(3, &[0, 1, 2])]);
        assert_eq!(enumerate_partial_monoids(10).unwrap().len(), 58);
        assert!(enumerate_partial_monoids(0).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_closed() {
        let all = enumerate_partial_monoids(11).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for e in &all {
            assert!(is_partial_monoid(11, &e.elements()).unwrap());
        }
    }

    #[test]
    fn e_invariant_examples() {
        assert_eq!(e_invariant(&pm(4, &[0, 2])), 1);
        assert_eq!(e_invariant(&pm(10, &[0, 5, 6])), 6);
        for n in 1..12 {
            assert_eq!(e_invariant(&PartialMonoid::full(n).unwrap()), 0);
        }
    }

    #[test]
    fn memo_agrees_with_direct() {
        let mut memo = EMemo::new();
        for e in enumerate_partial_monoids(12).unwrap() {
            assert_eq!(memo.get(&e), e_invariant(&e));
        }
        assert!(!memo.is_empty());
    }

    #[test]
    fn sumset_examples() {
        let w = pm(14, &[0, 4, 6, 8, 10, 12, 13]);
        assert_eq!(sumset2(&w).value_set(), vec![8, 10, 12]);
        assert!(sumset2(&pm(5, &[0])).pairs.is_empty());
        let s = sumset2(&pm(13, &[0, 5, 8, 9, 10, 11, 12]));
        assert_eq!(s.pairs, vec![(5, 5)]);
        assert_eq!(s.values(), vec![10]);
    }

    #[test]
    fn d_invariant_examples() {
        assert_eq!(d_invariant(&pm(14, &[0, 4, 6, 8, 10, 12, 13])), 3);
        assert_eq!(d_invariant(&pm(7, &[0])), 0);
        let e = pm(18, &[0, 6, 7, 8, 12, 13, 14, 15, 16, 17]);
        assert_eq!(d_invariant(&e), 4);
        assert_eq!(generators(&e), vec![6, 7, 8, 17]);
    }

    #[test]
    fn multiplicity_examples() {
        assert!(has_multiplicity(&pm(14, &[0, 4, 6, 8, 10, 12, 13])));
        assert!(!has_multiplicity(&pm(13, &[0, 5, 8, 9, 10, 11, 12])));
        assert!(!has_multiplicity(&pm(3, &[0])));
    }

    #[test]
    fn property_n_examples() {
        assert!(!property_n(&pm(4, &[0, 2])));
        assert!(property_n(&pm(14, &[0, 2, 4, 6, 8, 10, 12, 13])));
        assert!(!property_n(&pm(6, &[0, 2, 3, 4, 5])));
        assert!(!property_n(&pm(1, &[0])));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(
            frobenius_maximal_monoids(10).unwrap(),
            vec![pm(11, &[0, 3, 6, 8, 9, 10]), pm(11, &[0, 4, 7, 8, 9, 10])]
        );
        assert_eq!(
            frobenius_maximal_monoids(12).unwrap(),
            vec![pm(13, &[0, 5, 8, 9, 10, 11, 12])]
        );
        assert_eq!(frobenius_maximal_monoids(13).unwrap().len(), 7);
        assert!(frobenius_maximal_monoids(0).is_err());
    }

    #[test]
    fn empty_seed_is_a_candidate() {
        let trivial = frobenius_completion(10, &[]).unwrap().unwrap();
        assert_eq!(trivial, pm(11, &[0, 6, 7, 8, 9, 10]));
        assert!(frobenius_candidates(10).unwrap().contains(&trivial));
    }

    #[test]
    fn monoid_table_examples() {
        assert_eq!(monoid_table(8).unwrap().get(4, 3), 3);
        let t10 = monoid_table(10).unwrap();
        assert_eq!(t10.get(6, 6), 1);
        assert_eq!(t10.row_total(5), 12);
        assert_eq!(monoid_table(2).unwrap().get(1, 0), 1);
    }

    #[test]
    fn wide_mask_spills() {
        let e = PartialMonoid::new(100, &[0, 50, 70, 99]).unwrap();
        assert_eq!(e.elements(), vec![0, 50, 70, 99]);
        assert_eq!(e.mask().as_u64(), None);
        assert_eq!(d_invariant(&e), 3);
        assert!(!is_partial_monoid(101, &[0, 50]).unwrap());
        let narrow = PartialMonoid::new(100, &[0, 60]).unwrap();
        assert!(narrow < e);
    }

    #[test]
    fn serde_uses_sorted_lists() {
        let e = pm(6, &[0, 5, 3]);
        let js = serde_json::to_string(&e).unwrap();
        assert_eq!(js, r#"{"n":6,"E":[0,3,5]}"#);
        let back: PartialMonoid = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<PartialMonoid>(r#"{"n":6,"E":[0,2,3]}"#).is_err());
    }
}
