//! Ground-set arithmetic for the Boolean lattice `2^[n]`: subsets as
//! characteristic bitmasks, canonically ordered families, full chains
//! indexed by permutations, intervals, and exact binomial sums.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set. A subset of `[20]` fits a `u32` mask and
/// `20!` fits a `u64`, so every count stays exact.
pub const MAX_GROUND: u32 = 20;

/// Largest `n` for which `n!` full chains are enumerated.
pub const MAX_CHAIN_ENUM: u32 = 10;

fn check_ground(n: u32) -> Result<()> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::domain(alloc::format!(
            "ground-set size n={n} outside 1..={MAX_GROUND}"
        )));
    }
    Ok(())
}

/// One element of `2^[n]`: a subset of `{1,…,n}` stored as a bitmask
/// (bit `i-1` set iff element `i` is a member).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    n: u32,
    bits: u32,
}

impl Subset {
    pub fn empty(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset { n, bits: 0 })
    }

    /// The full ground set `[n]`.
    pub fn full(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(Subset {
            n,
            bits: mask_all(n),
        })
    }

    pub fn from_bits(n: u32, bits: u32) -> Result<Self> {
        check_ground(n)?;
        if bits & !mask_all(n) != 0 {
            return Err(Error::domain(alloc::format!(
                "bitmask {bits:#x} has elements outside [{n}]"
            )));
        }
        Ok(Subset { n, bits })
    }

    /// Builds a subset from 1-based member values.
    pub fn from_members(n: u32, members: &[u32]) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u32;
        for &e in members {
            if e == 0 || e > n {
                return Err(Error::domain(alloc::format!(
                    "element {e} outside ground set [{n}]"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset { n, bits })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn size(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn has_member(&self, e: u32) -> bool {
        e >= 1 && e <= self.n && self.bits & (1 << (e - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_strict_subset_of(&self, other: &Subset) -> bool {
        self.bits != other.bits && self.is_subset_of(other)
    }

    #[inline]
    pub fn comparable(&self, other: &Subset) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    pub fn complement(&self) -> Subset {
        Subset {
            n: self.n,
            bits: !self.bits & mask_all(self.n),
        }
    }

    /// Members in ascending order (1-based).
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.n;
        let bits = self.bits;
        (1..=n).filter(move |e| bits & (1 << (e - 1)) != 0)
    }

    /// Canonical sort key: size first, then colex. For equal-size sets,
    /// colexicographic order coincides with numeric order of the bitmask.
    #[inline]
    pub fn key(&self) -> (u32, u32) {
        (self.size(), self.bits)
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        let mut first = true;
        for e in self.members() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[inline]
fn mask_all(n: u32) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A finite collection of distinct subsets of one ground set, kept sorted
/// in canonical (size, colex) order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: u32,
    sets: Vec<Subset>,
}

impl Family {
    pub fn empty(n: u32) -> Result<Self> {
        check_ground(n)?;
        Ok(Family { n, sets: Vec::new() })
    }

    /// Builds a family, sorting canonically and dropping duplicates.
    pub fn new(n: u32, sets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        check_ground(n)?;
        let mut v: Vec<Subset> = Vec::new();
        for s in sets {
            if s.n() != n {
                return Err(Error::domain(alloc::format!(
                    "set {s} has ground size {} but family has n={n}",
                    s.n()
                )));
            }
            v.push(s);
        }
        v.sort();
        v.dedup();
        Ok(Family { n, sets: v })
    }

    pub fn from_masks(n: u32, masks: &[u32]) -> Result<Self> {
        let sets = masks
            .iter()
            .map(|&m| Subset::from_bits(n, m))
            .collect::<Result<Vec<_>>>()?;
        Family::new(n, sets)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    #[inline]
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn contains_set(&self, s: &Subset) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    /// The family with one more set (no-op if already present).
    pub fn with(&self, s: Subset) -> Result<Family> {
        let mut sets = self.sets.clone();
        sets.push(s);
        Family::new(self.n, sets)
    }

    /// The family with one set removed (no-op if absent).
    pub fn without(&self, s: &Subset) -> Family {
        Family {
            n: self.n,
            sets: self.sets.iter().filter(|t| *t != s).copied().collect(),
        }
    }

    /// Complements every member; the result is canonically re-sorted.
    pub fn complement(&self) -> Family {
        let mut sets: Vec<Subset> = self.sets.iter().map(|s| s.complement()).collect();
        sets.sort();
        Family { n: self.n, sets }
    }

    pub fn masks(&self) -> Vec<u32> {
        self.sets.iter().map(|s| s.bits()).collect()
    }
}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Family {
    /// Lexicographic over the canonical member sequence; used as the
    /// deterministic tie-break between equal-size search witnesses.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.sets.cmp(&other.sets)
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, [", self.n)?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "])")
    }
}

/// A maximal chain `∅ = A_0 ⊂ A_1 ⊂ … ⊂ A_n = [n]`, represented by the
/// permutation `(x_1,…,x_n)` of `{1,…,n}` with `A_i = {x_1,…,x_i}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FullChain {
    n: u32,
    perm: Vec<u32>,
}

impl FullChain {
    pub fn from_perm(n: u32, perm: Vec<u32>) -> Result<Self> {
        check_ground(n)?;
        if perm.len() != n as usize {
            return Err(Error::domain(alloc::format!(
                "permutation has length {} but n={n}",
                perm.len()
            )));
        }
        let mut seen = 0u32;
        for &x in &perm {
            if x == 0 || x > n || seen & (1 << (x - 1)) != 0 {
                return Err(Error::domain(alloc::format!(
                    "not a permutation of [{n}]"
                )));
            }
            seen |= 1 << (x - 1);
        }
        Ok(FullChain { n, perm })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    /// The i-th chain set `A_i = {x_1,…,x_i}` (so `A_0 = ∅`).
    pub fn prefix(&self, i: u32) -> Subset {
        debug_assert!(i <= self.n);
        let mut bits = 0u32;
        for &x in &self.perm[..i as usize] {
            bits |= 1 << (x - 1);
        }
        Subset { n: self.n, bits }
    }

    /// All n+1 chain sets from `∅` to `[n]`.
    pub fn sets(&self) -> Vec<Subset> {
        let mut out = Vec::with_capacity(self.n as usize + 1);
        let mut bits = 0u32;
        out.push(Subset { n: self.n, bits });
        for &x in &self.perm {
            bits |= 1 << (x - 1);
            out.push(Subset { n: self.n, bits });
        }
        out
    }

    #[inline]
    pub fn contains_set(&self, s: &Subset) -> bool {
        // A_i has i elements, so s can only be the prefix of its size.
        self.prefix(s.size()).bits == s.bits()
    }

    /// Family members lying on this chain, in ascending (chain) order.
    pub fn family_members(&self, f: &Family) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut bits = 0u32;
        for i in 0..=self.n {
            if i > 0 {
                bits |= 1 << (self.perm[i as usize - 1] - 1);
            }
            let s = Subset { n: self.n, bits };
            if f.contains_set(&s) {
                out.push(s);
            }
        }
        out
    }

    pub fn count_family_members(&self, f: &Family) -> usize {
        let mut count = 0;
        let mut bits = 0u32;
        for i in 0..=self.n {
            if i > 0 {
                bits |= 1 << (self.perm[i as usize - 1] - 1);
            }
            if f.contains_set(&Subset { n: self.n, bits }) {
                count += 1;
            }
        }
        count
    }
}

impl fmt::Debug for FullChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chain(")?;
        for (i, x) in self.perm.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Exact binomial coefficient `C(n,i)`; zero outside `0 ≤ i ≤ n`.
pub fn binom(n: u32, i: i64) -> Result<u64> {
    if n > MAX_GROUND {
        return Err(Error::domain(alloc::format!(
            "binom: n={n} exceeds {MAX_GROUND}"
        )));
    }
    if i < 0 || i > n as i64 {
        return Ok(0);
    }
    let i = i as u64;
    let n = n as u64;
    // multiplicative form; every prefix product is itself a binomial, so
    // the division is exact at each step
    let k = core::cmp::min(i, n - i);
    let mut num = 1u64;
    for j in 0..k {
        num = num * (n - j) / (j + 1);
    }
    Ok(num)
}

/// `n!` as an exact `u64` (valid through `n = 20`).
pub fn factorial(n: u32) -> u64 {
    debug_assert!(n <= MAX_GROUND);
    (1..=n as u64).product()
}

/// `Σ(n,k)`: the sum of the `k` largest binomial coefficients of order
/// `n`, counted as a multiset.
pub fn sigma(n: u32, k: u32) -> Result<u64> {
    if n > MAX_GROUND {
        return Err(Error::domain(alloc::format!(
            "sigma: n={n} exceeds {MAX_GROUND}"
        )));
    }
    if k == 0 || k > n + 1 {
        return Err(Error::domain(alloc::format!(
            "sigma: k={k} outside 1..={}",
            n + 1
        )));
    }
    let mut coeffs: Vec<u64> = (0..=n).map(|i| binom(n, i as i64).unwrap()).collect();
    coeffs.sort_unstable_by(|a, b| b.cmp(a));
    Ok(coeffs[..k as usize].iter().sum())
}

/// All subsets of size `i`, as a family of `C(n,i)` sets.
pub fn level(n: u32, i: u32) -> Result<Family> {
    check_ground(n)?;
    if i > n {
        return Err(Error::domain(alloc::format!(
            "level: i={i} outside 0..={n}"
        )));
    }
    let mut sets = Vec::with_capacity(binom(n, i as i64)? as usize);
    for bits in 0..=mask_all(n) {
        if bits.count_ones() == i {
            sets.push(Subset { n, bits });
        }
        if bits == mask_all(n) {
            break;
        }
    }
    Family::new(n, sets)
}

/// Iterator over all `n!` full chains in lexicographic permutation order.
pub fn full_chains(n: u32) -> Result<FullChains> {
    if n == 0 || n > MAX_CHAIN_ENUM {
        return Err(Error::resource(alloc::format!(
            "full-chain enumeration requires 1 ≤ n ≤ {MAX_CHAIN_ENUM}, got {n}"
        )));
    }
    Ok(FullChains {
        n,
        perm: (1..=n).collect(),
        done: false,
    })
}

pub struct FullChains {
    n: u32,
    perm: Vec<u32>,
    done: bool,
}

impl Iterator for FullChains {
    type Item = FullChain;

    fn next(&mut self) -> Option<FullChain> {
        if self.done {
            return None;
        }
        let out = FullChain {
            n: self.n,
            perm: self.perm.clone(),
        };
        if !next_permutation(&mut self.perm) {
            self.done = true;
        }
        Some(out)
    }
}

/// Standard in-place lexicographic successor; false once at the last one.
fn next_permutation(perm: &mut [u32]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The interval `[U,V]` of all sets between `U` and `V`; order-isomorphic
/// to a Boolean lattice of dimension `|V| − |U|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    lower: Subset,
    upper: Subset,
}

impl Interval {
    pub fn new(lower: Subset, upper: Subset) -> Result<Self> {
        if lower.n() != upper.n() {
            return Err(Error::domain(
                "interval endpoints have different ground sets".into(),
            ));
        }
        if !lower.is_subset_of(&upper) {
            return Err(Error::domain(alloc::format!(
                "interval requires {lower} ⊆ {upper}"
            )));
        }
        Ok(Interval { lower, upper })
    }

    #[inline]
    pub fn lower(&self) -> Subset {
        self.lower
    }

    #[inline]
    pub fn upper(&self) -> Subset {
        self.upper
    }

    #[inline]
    pub fn dimension(&self) -> u32 {
        self.upper.size() - self.lower.size()
    }

    #[inline]
    pub fn contains(&self, s: &Subset) -> bool {
        self.lower.is_subset_of(s) && s.is_subset_of(&self.upper)
    }
}

/// Iterator over all saturated chains from `lower` to `upper`; there are
/// exactly `dimension!` of them, one per insertion order of the added
/// elements (yielded in lexicographic order of that sequence).
pub fn chains_in_interval(iv: &Interval) -> Result<IntervalChains> {
    if iv.dimension() > MAX_CHAIN_ENUM {
        return Err(Error::resource(alloc::format!(
            "interval dimension {} exceeds {MAX_CHAIN_ENUM}",
            iv.dimension()
        )));
    }
    let added: Vec<u32> = iv
        .upper
        .members()
        .filter(|&e| !iv.lower.has_member(e))
        .collect();
    Ok(IntervalChains {
        lower: iv.lower,
        order: added,
        done: false,
    })
}

pub struct IntervalChains {
    lower: Subset,
    order: Vec<u32>,
    done: bool,
}

impl Iterator for IntervalChains {
    type Item = Vec<Subset>;

    fn next(&mut self) -> Option<Vec<Subset>> {
        if self.done {
            return None;
        }
        let mut chain = Vec::with_capacity(self.order.len() + 1);
        let mut cur = self.lower;
        chain.push(cur);
        for &e in &self.order {
            cur = Subset {
                n: cur.n,
                bits: cur.bits | (1 << (e - 1)),
            };
            chain.push(cur);
        }
        if !next_permutation(&mut self.order) {
            self.done = true;
        }
        Some(chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32, members: &[u32]) -> Subset {
        Subset::from_members(n, members).unwrap()
    }

    #[test]
    fn binom_basics() {
        assert_eq!(binom(4, 2).unwrap(), 6);
        assert_eq!(binom(5, 0).unwrap(), 1);
        assert_eq!(binom(6, 3).unwrap(), 20);
        assert_eq!(binom(5, -1).unwrap(), 0);
        assert_eq!(binom(5, 6).unwrap(), 0);
        assert_eq!(binom(20, 10).unwrap(), 184_756);
        assert!(binom(21, 1).is_err());
    }

    #[test]
    fn sigma_basics() {
        assert_eq!(sigma(3, 2).unwrap(), 6);
        assert_eq!(sigma(4, 2).unwrap(), 10);
        assert_eq!(sigma(4, 3).unwrap(), 14);
        assert!(sigma(4, 0).is_err());
        assert!(sigma(4, 6).is_err());
    }

    #[test]
    fn sigma_full_sum_is_power_of_two() {
        for n in 1..=10 {
            assert_eq!(sigma(n, n + 1).unwrap(), 1u64 << n);
        }
    }

    #[test]
    fn level_basics() {
        let l = level(3, 1).unwrap();
        assert_eq!(l.sets(), &[s(3, &[1]), s(3, &[2]), s(3, &[3])]);
        let l0 = level(3, 0).unwrap();
        assert_eq!(l0.sets(), &[Subset::empty(3).unwrap()]);
        assert_eq!(level(4, 2).unwrap().len(), 6);
        assert!(level(4, 5).is_err());
    }

    #[test]
    fn levels_partition_the_lattice() {
        for n in 1..=7 {
            let total: usize = (0..=n).map(|i| level(n, i).unwrap().len()).sum();
            assert_eq!(total, 1 << n);
        }
    }

    #[test]
    fn family_canonical_order_is_idempotent() {
        let f = Family::new(4, [s(4, &[1, 2, 3]), s(4, &[2]), s(4, &[1, 2]), s(4, &[2])])
            .unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.sets(), &[s(4, &[2]), s(4, &[1, 2]), s(4, &[1, 2, 3])]);
        let again = Family::new(4, f.sets().to_vec()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn family_rejects_mixed_ground_sets() {
        assert!(Family::new(4, [s(3, &[1])]).is_err());
    }

    #[test]
    fn full_chain_prefixes() {
        let c = FullChain::from_perm(3, alloc::vec![2, 1, 3]).unwrap();
        assert_eq!(
            c.sets(),
            alloc::vec![
                Subset::empty(3).unwrap(),
                s(3, &[2]),
                s(3, &[1, 2]),
                Subset::full(3).unwrap()
            ]
        );
        assert!(FullChain::from_perm(3, alloc::vec![1, 1, 3]).is_err());
        assert!(FullChain::from_perm(3, alloc::vec![1, 2]).is_err());
    }

    #[test]
    fn full_chains_count_and_membership() {
        let chains: Vec<FullChain> = full_chains(3).unwrap().collect();
        assert_eq!(chains.len(), 6);
        // lexicographically first and last
        assert_eq!(chains[0].perm(), &[1, 2, 3]);
        assert_eq!(chains[5].perm(), &[3, 2, 1]);
        // every size-i set lies on i!(n-i)! chains
        for n in 1..=6u32 {
            let chains: Vec<FullChain> = full_chains(n).unwrap().collect();
            assert_eq!(chains.len() as u64, factorial(n));
            for i in 0..=n {
                for sub in level(n, i).unwrap().iter() {
                    let cnt = chains.iter().filter(|c| c.contains_set(sub)).count() as u64;
                    assert_eq!(cnt, factorial(i) * factorial(n - i));
                }
            }
        }
        assert!(full_chains(11).is_err());
        assert!(full_chains(0).is_err());
    }

    #[test]
    fn interval_chain_counts() {
        let iv = Interval::new(Subset::empty(2).unwrap(), Subset::full(2).unwrap()).unwrap();
        assert_eq!(chains_in_interval(&iv).unwrap().count(), 2);

        let single = Interval::new(s(3, &[1]), s(3, &[1])).unwrap();
        let chains: Vec<_> = chains_in_interval(&single).unwrap().collect();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0], alloc::vec![s(3, &[1])]);

        let iv = Interval::new(s(4, &[1]), Subset::full(4).unwrap()).unwrap();
        assert_eq!(chains_in_interval(&iv).unwrap().count(), 6);

        assert!(Interval::new(s(3, &[1, 2]), s(3, &[1])).is_err());
    }

    #[test]
    fn interval_chains_match_full_chains() {
        for n in 1..=5 {
            let iv =
                Interval::new(Subset::empty(n).unwrap(), Subset::full(n).unwrap()).unwrap();
            let mut a: Vec<Vec<Subset>> =
                chains_in_interval(&iv).unwrap().collect();
            let mut b: Vec<Vec<Subset>> =
                full_chains(n).unwrap().map(|c| c.sets()).collect();
            a.sort_by(|x, y| x.iter().map(Subset::key).collect::<Vec<_>>()
                .cmp(&y.iter().map(Subset::key).collect::<Vec<_>>()));
            b.sort_by(|x, y| x.iter().map(Subset::key).collect::<Vec<_>>()
                .cmp(&y.iter().map(Subset::key).collect::<Vec<_>>()));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn complement_is_involutive() {
        for bits in 0..16u32 {
            let sub = Subset::from_bits(4, bits).unwrap();
            assert_eq!(sub.complement().complement(), sub);
            assert_eq!(sub.complement().size(), 4 - sub.size());
        }
    }
}
