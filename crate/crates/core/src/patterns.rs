//! Abstract poset patterns and containment testing.
//!
//! A [`Pattern`] is a finite strict order; [`contains`] searches a family
//! for a weak or induced copy by backtracking; [`detect_y`] is a direct
//! detector specialized to the fork-with-shaft posets `Y_{k,r}` and their
//! duals, used as the hot path inside the extremal search.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Family, Subset};

/// Largest pattern accepted by the generic containment search.
pub const MAX_PATTERN: usize = 12;

/// A finite poset given by its strict-order relation, stored as one
/// bitmask row per element (`lt[i]` has bit `j` iff `i < j`).
#[derive(Clone)]
pub struct Pattern {
    m: usize,
    lt: Vec<u16>,
    label: String,
    names: Vec<String>,
}

impl Pattern {
    /// Builds a pattern from generating relations, taking the transitive
    /// closure and rejecting cycles.
    pub fn from_cover(m: usize, pairs: &[(usize, usize)], label: &str) -> Result<Self> {
        if m == 0 || m > 16 {
            return Err(Error::domain(alloc::format!(
                "pattern must have 1..=16 elements, got {m}"
            )));
        }
        let mut lt = alloc::vec![0u16; m];
        for &(a, b) in pairs {
            if a >= m || b >= m {
                return Err(Error::domain(alloc::format!(
                    "relation ({a},{b}) out of range for {m} elements"
                )));
            }
            lt[a] |= 1 << b;
        }
        // Warshall closure
        for k in 0..m {
            for i in 0..m {
                if lt[i] & (1 << k) != 0 {
                    lt[i] |= lt[k];
                }
            }
        }
        for i in 0..m {
            if lt[i] & (1 << i) != 0 {
                return Err(Error::domain(
                    "relations contain a cycle; not a strict order".into(),
                ));
            }
            for j in 0..m {
                if lt[i] & (1 << j) != 0 && lt[j] & (1 << i) != 0 {
                    return Err(Error::domain(
                        "relations violate antisymmetry".into(),
                    ));
                }
            }
        }
        let names = (0..m).map(|i| alloc::format!("e{}", i + 1)).collect();
        Ok(Pattern {
            m,
            lt,
            label: label.to_string(),
            names,
        })
    }

    fn with_names(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.m);
        self.names = names;
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    #[inline]
    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Strict order test `i <_P j`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i] & (1 << j) != 0
    }

    /// Bitmask of elements strictly above `i`.
    #[inline]
    pub fn upset(&self, i: usize) -> u16 {
        self.lt[i]
    }

    /// Bitmask of elements strictly below `i`.
    pub fn downset(&self, i: usize) -> u16 {
        let mut mask = 0;
        for j in 0..self.m {
            if self.lt(j, i) {
                mask |= 1 << j;
            }
        }
        mask
    }

    /// Number of ordered pairs in the strict relation.
    pub fn relation_count(&self) -> usize {
        self.lt.iter().map(|row| row.count_ones() as usize).sum()
    }

    /// True when the pattern is a total order.
    pub fn is_chain(&self) -> bool {
        self.relation_count() == self.m * (self.m - 1) / 2
            && (0..self.m).all(|i| {
                (0..self.m).all(|j| i == j || self.lt(i, j) || self.lt(j, i))
            })
    }

    /// The order-reversed pattern. Known labels are renamed to their dual
    /// literal; anything else gets a prime toggled.
    pub fn dual(&self) -> Pattern {
        let mut lt = alloc::vec![0u16; self.m];
        for i in 0..self.m {
            for j in 0..self.m {
                if self.lt(i, j) {
                    lt[j] |= 1 << i;
                }
            }
        }
        Pattern {
            m: self.m,
            lt,
            label: dual_label(&self.label),
            names: self.names.clone(),
        }
    }
}

fn dual_label(label: &str) -> String {
    if let Some(rest) = label.strip_prefix("Y':") {
        alloc::format!("Y:{rest}")
    } else if let Some(rest) = label.strip_prefix("Y:") {
        alloc::format!("Y':{rest}")
    } else if let Some(rest) = label.strip_prefix("V:") {
        alloc::format!("L:{rest}")
    } else if let Some(rest) = label.strip_prefix("L:") {
        alloc::format!("V:{rest}")
    } else if let Some(base) = label.strip_suffix('\'') {
        base.to_string()
    } else {
        alloc::format!("{label}'")
    }
}

impl PartialEq for Pattern {
    /// Equality is on the relation only; labels and names are display
    /// metadata.
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.lt == other.lt
    }
}

impl Eq for Pattern {}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({}, m={}", self.label, self.m)?;
        for i in 0..self.m {
            for j in 0..self.m {
                if self.lt(i, j) {
                    write!(f, ", {}<{}", self.names[i], self.names[j])?;
                }
            }
        }
        write!(f, ")")
    }
}

/// The `r`-fork with a `k`-shaft: chain `x_1 < … < x_k` and `x_k < y_i`
/// for `r` pairwise-incomparable `y_i`. Elements are indexed
/// `x_1,…,x_k, y_1,…,y_r`.
pub fn make_y(k: u32, r: u32) -> Result<Pattern> {
    if k < 1 {
        return Err(Error::domain("Y pattern requires k ≥ 1".into()));
    }
    if r < 2 {
        return Err(Error::domain("Y pattern requires r ≥ 2".into()));
    }
    let k = k as usize;
    let r = r as usize;
    let m = k + r;
    if m > 16 {
        return Err(Error::domain(alloc::format!(
            "Y pattern with k+r={m} elements exceeds 16"
        )));
    }
    let mut pairs = Vec::new();
    for i in 1..k {
        pairs.push((i - 1, i));
    }
    for j in 0..r {
        pairs.push((k - 1, k + j));
    }
    let label = if k == 1 {
        alloc::format!("V:{r}")
    } else {
        alloc::format!("Y:{k},{r}")
    };
    let mut names: Vec<String> = (1..=k).map(|i| alloc::format!("x{i}")).collect();
    names.extend((1..=r).map(|j| alloc::format!("y{j}")));
    Ok(Pattern::from_cover(m, &pairs, &label)?.with_names(names))
}

/// The dual fork `Y'_{k,r}`.
pub fn make_y_dual(k: u32, r: u32) -> Result<Pattern> {
    Ok(make_y(k, r)?.dual())
}

/// The chain `P_k` on `k` elements.
pub fn make_chain(k: u32) -> Result<Pattern> {
    if k < 1 || k > 16 {
        return Err(Error::domain(alloc::format!(
            "chain length {k} outside 1..=16"
        )));
    }
    let k = k as usize;
    let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let names = (1..=k).map(|i| alloc::format!("a{i}")).collect();
    Ok(Pattern::from_cover(k, &pairs, &alloc::format!("P:{k}"))?.with_names(names))
}

/// The `r`-fork `V_r` (equals `Y_{1,r}`).
pub fn make_fork(r: u32) -> Result<Pattern> {
    make_y(1, r)
}

/// The `r`-brush `Λ_r`, dual of the fork.
pub fn make_brush(r: u32) -> Result<Pattern> {
    Ok(make_fork(r)?.dual())
}

/// The butterfly `B`: four elements `a,b ≤ c,d`.
pub fn make_butterfly() -> Pattern {
    let names = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    Pattern::from_cover(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], "B")
        .unwrap()
        .with_names(names)
}

/// The diamond `D_2`: `a < b,c < d` with `b`, `c` incomparable.
pub fn make_diamond() -> Pattern {
    let names = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    Pattern::from_cover(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], "D2")
        .unwrap()
        .with_names(names)
}

/// Containment mode: weak preserves strict order in one direction,
/// induced preserves and reflects it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Weak,
    Induced,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Weak => write!(f, "weak"),
            Mode::Induced => write!(f, "induced"),
        }
    }
}

/// A witness injection from pattern elements to family sets;
/// `images[i]` is the image of pattern element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub images: Vec<Subset>,
}

/// Searches `f` for a copy of `p` in the given mode. Returns the first
/// witness in canonical order (pattern elements processed by decreasing
/// comparability degree, candidate sets in family order), so the result
/// is deterministic.
pub fn contains(f: &Family, p: &Pattern, mode: Mode) -> Result<Option<Embedding>> {
    if p.len() > MAX_PATTERN {
        return Err(Error::resource(alloc::format!(
            "pattern with {} elements exceeds search bound {MAX_PATTERN}",
            p.len()
        )));
    }
    Ok(contains_impl(f.n(), &f.masks(), p, mode, None)
        .map(|images| embedding_from_masks(f.n(), images)))
}

/// Containment over raw canonical masks with an optional family index
/// that the embedding must use; shared by the public API and the
/// search's incremental feasibility check.
pub(crate) fn contains_impl(
    _n: u32,
    masks: &[u32],
    p: &Pattern,
    mode: Mode,
    required: Option<usize>,
) -> Option<Vec<u32>> {
    let m = p.len();
    let fam = masks.len();
    if m > fam {
        return None;
    }

    // family comparability matrix and up/down degree counts
    let mut strict = alloc::vec![false; fam * fam]; // strict[i*fam+j]: i ⊂ j
    let mut updeg = alloc::vec![0u32; fam];
    let mut downdeg = alloc::vec![0u32; fam];
    for i in 0..fam {
        for j in 0..fam {
            if masks[i] != masks[j] && masks[i] & !masks[j] == 0 {
                strict[i * fam + j] = true;
                updeg[i] += 1;
                downdeg[j] += 1;
            }
        }
    }

    // process pattern elements by decreasing comparability degree
    let mut order: Vec<usize> = (0..m).collect();
    let degree = |i: usize| (p.upset(i) | p.downset(i)).count_ones();
    order.sort_by(|&a, &b| degree(b).cmp(&degree(a)).then(a.cmp(&b)));

    let mut ctx = EmbedCtx {
        p,
        mode,
        fam,
        strict,
        updeg,
        downdeg,
        order,
        assign: alloc::vec![None; m],
        used: alloc::vec![false; fam],
    };

    let found = match required {
        None => ctx.backtrack(0),
        Some(r) => {
            // the required set must appear in the image; pin it to each
            // pattern element in turn
            (0..m).any(|elem| {
                if ctx.updeg[r] < ctx.p.upset(elem).count_ones()
                    || ctx.downdeg[r] < ctx.p.downset(elem).count_ones()
                {
                    return false;
                }
                ctx.assign[elem] = Some(r);
                ctx.used[r] = true;
                let ok = ctx.backtrack(0);
                if !ok {
                    ctx.assign[elem] = None;
                    ctx.used[r] = false;
                }
                ok
            })
        }
    };

    if found {
        Some(ctx.assign.iter().map(|slot| masks[slot.unwrap()]).collect())
    } else {
        None
    }
}

struct EmbedCtx<'a> {
    p: &'a Pattern,
    mode: Mode,
    fam: usize,
    strict: Vec<bool>,
    updeg: Vec<u32>,
    downdeg: Vec<u32>,
    order: Vec<usize>,
    assign: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl EmbedCtx<'_> {
    fn consistent(&self, elem: usize, set: usize) -> bool {
        for (other, slot) in self.assign.iter().enumerate() {
            let Some(oset) = *slot else { continue };
            if other == elem {
                continue;
            }
            let forward = self.p.lt(elem, other);
            let backward = self.p.lt(other, elem);
            let sub_fw = self.strict[set * self.fam + oset];
            let sub_bw = self.strict[oset * self.fam + set];
            match self.mode {
                Mode::Weak => {
                    if (forward && !sub_fw) || (backward && !sub_bw) {
                        return false;
                    }
                }
                Mode::Induced => {
                    if forward != sub_fw || backward != sub_bw {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn backtrack(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let elem = self.order[pos];
        if self.assign[elem].is_some() {
            // pinned by the caller
            return self.backtrack(pos + 1);
        }
        let need_up = self.p.upset(elem).count_ones();
        let need_down = self.p.downset(elem).count_ones();
        for set in 0..self.fam {
            if self.used[set] || self.updeg[set] < need_up || self.downdeg[set] < need_down {
                continue;
            }
            if !self.consistent(elem, set) {
                continue;
            }
            self.assign[elem] = Some(set);
            self.used[set] = true;
            if self.backtrack(pos + 1) {
                return true;
            }
            self.used[set] = false;
            self.assign[elem] = None;
        }
        false
    }
}

fn embedding_from_masks(n: u32, masks: Vec<u32>) -> Embedding {
    Embedding {
        images: masks
            .into_iter()
            .map(|m| Subset::from_bits(n, m).expect("mask came from a valid family"))
            .collect(),
    }
}

/// Direct detector for induced `Y_{k,r}` (or its dual when `dualized`):
/// finds a chain of `k` family members whose top (bottom, if dualized)
/// has at least `r` pairwise-incomparable strict supersets (subsets) in
/// the family. Outcome-equivalent to `contains` with the corresponding
/// pattern in induced mode.
pub fn detect_y(f: &Family, k: u32, r: u32, dualized: bool) -> Result<Option<Embedding>> {
    if k < 1 {
        return Err(Error::domain("detect_y requires k ≥ 1".into()));
    }
    if r < 2 {
        return Err(Error::domain("detect_y requires r ≥ 2".into()));
    }
    let n = f.n();
    if dualized {
        let comp: Vec<u32> = {
            let mut v = f.complement().masks();
            v.sort_by_key(|m| (m.count_ones(), *m));
            v
        };
        let full = if n >= 32 { u32::MAX } else { (1 << n) - 1 };
        Ok(detect_y_masks(&comp, k, r).map(|(chain, tops)| {
            // map complements back; the chain reverses into the dual's x order
            let mut images: Vec<u32> = chain.iter().rev().map(|m| full & !m).collect();
            images.extend(tops.iter().map(|m| full & !m));
            embedding_from_masks(n, images)
        }))
    } else {
        Ok(detect_y_masks(&sorted_masks(f), k, r).map(|(mut chain, tops)| {
            chain.extend(tops);
            embedding_from_masks(n, chain)
        }))
    }
}

fn sorted_masks(f: &Family) -> Vec<u32> {
    // Family is canonically sorted already
    f.masks()
}

/// Core detector over canonically sorted masks. Returns
/// `(chain bottom→top of length k, r pairwise-incomparable supersets)`.
pub(crate) fn detect_y_masks(masks: &[u32], k: u32, r: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    let fam = masks.len();
    if fam < (k + r) as usize {
        return None;
    }
    // longest member chain ending at each set; canonical order is
    // topological for strict inclusion
    let mut longest = alloc::vec![1u32; fam];
    for i in 0..fam {
        for j in 0..i {
            if masks[j] != masks[i] && masks[j] & !masks[i] == 0 {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    for top in 0..fam {
        if longest[top] < k {
            continue;
        }
        let ups: Vec<usize> = (top + 1..fam)
            .filter(|&t| masks[top] != masks[t] && masks[top] & !masks[t] == 0)
            .collect();
        if (ups.len() as u32) < r {
            continue;
        }
        if let Some(antichain) = first_antichain(masks, &ups, r as usize) {
            // rebuild the chain greedily, smallest candidates first
            let mut chain = alloc::vec![masks[top]];
            let mut cur = top;
            for depth in (1..k).rev() {
                let prev = (0..cur)
                    .find(|&j| {
                        longest[j] >= depth
                            && masks[j] != masks[cur]
                            && masks[j] & !masks[cur] == 0
                    })
                    .expect("chain reconstruction follows the DP");
                chain.push(masks[prev]);
                cur = prev;
            }
            chain.reverse();
            let tops = antichain.into_iter().map(|i| masks[i]).collect();
            return Some((chain, tops));
        }
    }
    None
}

/// First (in index order) antichain of the given size among candidates.
fn first_antichain(masks: &[u32], cands: &[usize], want: usize) -> Option<Vec<usize>> {
    fn rec(
        masks: &[u32],
        cands: &[usize],
        want: usize,
        start: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == want {
            return true;
        }
        if cands.len() - start < want - chosen.len() {
            return false;
        }
        for pos in start..cands.len() {
            let c = cands[pos];
            let ok = chosen.iter().all(|&o| {
                let (a, b) = (masks[o], masks[c]);
                a & !b != 0 && b & !a != 0
            });
            if ok {
                chosen.push(c);
                if rec(masks, cands, want, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(want);
    if rec(masks, cands, want, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Longest chain of family members, for the specialized `P_k` check.
pub(crate) fn longest_chain_len(masks: &[u32]) -> u32 {
    let fam = masks.len();
    let mut sorted: Vec<u32> = masks.to_vec();
    sorted.sort_by_key(|m| (m.count_ones(), *m));
    let mut longest = alloc::vec![1u32; fam];
    let mut best = 0;
    for i in 0..fam {
        for j in 0..i {
            if sorted[j] != sorted[i] && sorted[j] & !sorted[i] == 0 {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
        best = best.max(longest[i]);
    }
    if fam == 0 {
        0
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::level;

    fn fam(n: u32, sets: &[&[u32]]) -> Family {
        Family::new(
            n,
            sets.iter().map(|m| Subset::from_members(n, m).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn y22_shape() {
        let y = make_y(2, 2).unwrap();
        assert_eq!(y.len(), 4);
        assert_eq!(y.relation_count(), 5);
        assert!(y.lt(0, 1) && y.lt(0, 2) && y.lt(0, 3) && y.lt(1, 2) && y.lt(1, 3));
        assert!(!y.lt(2, 3) && !y.lt(3, 2));
    }

    #[test]
    fn y12_is_the_fork() {
        let v = make_y(1, 2).unwrap();
        assert_eq!(v, make_fork(2).unwrap());
        assert_eq!(v.len(), 3);
        assert_eq!(v.relation_count(), 2);
    }

    #[test]
    fn y32_unique_incomparable_pair() {
        let y = make_y(3, 2).unwrap();
        assert_eq!(y.len(), 5);
        let mut incomparable = alloc::vec::Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                if !y.lt(i, j) && !y.lt(j, i) {
                    incomparable.push((i, j));
                }
            }
        }
        assert_eq!(incomparable, alloc::vec![(3, 4)]);
    }

    #[test]
    fn make_y_rejects_bad_params() {
        assert!(make_y(0, 2).is_err());
        assert!(make_y(2, 1).is_err());
    }

    #[test]
    fn dual_is_involutive() {
        for p in [
            make_y(2, 2).unwrap(),
            make_y(3, 4).unwrap(),
            make_butterfly(),
            make_diamond(),
            make_chain(3).unwrap(),
        ] {
            assert_eq!(p.dual().dual(), p);
        }
        assert_eq!(make_y(2, 2).unwrap().dual().label(), "Y':2,2");
        assert_eq!(make_fork(3).unwrap().dual().label(), "L:3");
    }

    #[test]
    fn dual_chain_is_chain() {
        let p = make_chain(4).unwrap();
        assert!(p.dual().is_chain());
    }

    #[test]
    fn butterfly_and_diamond_relations() {
        let b = make_butterfly();
        assert_eq!(b.relation_count(), 4);
        assert!(b.lt(0, 2) && b.lt(0, 3) && b.lt(1, 2) && b.lt(1, 3));
        let d = make_diamond();
        assert_eq!(d.relation_count(), 5);
        assert!(d.lt(0, 3), "closure adds a < d");
        assert!(!d.lt(1, 2) && !d.lt(2, 1));
    }

    #[test]
    fn pattern_rejects_cycles() {
        assert!(Pattern::from_cover(3, &[(0, 1), (1, 2), (2, 0)], "bad").is_err());
        assert!(Pattern::from_cover(2, &[(0, 1), (1, 0)], "bad").is_err());
    }

    #[test]
    fn contains_finds_y2_witness() {
        let f = fam(4, &[&[1], &[1, 2], &[1, 2, 3], &[1, 2, 4]]);
        let y = make_y(2, 2).unwrap();
        let emb = contains(&f, &y, Mode::Induced).unwrap().unwrap();
        let expect: alloc::vec::Vec<Subset> = [
            &[1][..],
            &[1, 2][..],
            &[1, 2, 3][..],
            &[1, 2, 4][..],
        ]
        .iter()
        .map(|m| Subset::from_members(4, m).unwrap())
        .collect();
        assert_eq!(emb.images, expect);
    }

    #[test]
    fn middle_levels_have_no_induced_y2() {
        let mut sets = level(4, 2).unwrap().sets().to_vec();
        sets.extend(level(4, 3).unwrap().sets().iter().copied());
        let f = Family::new(4, sets).unwrap();
        let y = make_y(2, 2).unwrap();
        assert!(contains(&f, &y, Mode::Induced).unwrap().is_none());
        assert!(detect_y(&f, 2, 2, false).unwrap().is_none());
    }

    #[test]
    fn butterfly_without_induced_forks() {
        let f0 = fam(4, &[&[1], &[2], &[1, 2, 3], &[1, 2, 4]]);
        assert!(contains(&f0, &make_butterfly(), Mode::Weak).unwrap().is_some());
        let y = make_y(2, 2).unwrap();
        assert!(contains(&f0, &y, Mode::Induced).unwrap().is_none());
        assert!(contains(&f0, &y.dual(), Mode::Induced).unwrap().is_none());
        assert!(detect_y(&f0, 2, 2, false).unwrap().is_none());
        assert!(detect_y(&f0, 2, 2, true).unwrap().is_none());
    }

    #[test]
    fn detect_y_agrees_on_worked_examples() {
        let f = fam(4, &[&[1], &[1, 2], &[1, 2, 3], &[1, 2, 4]]);
        let emb = detect_y(&f, 2, 2, false).unwrap().unwrap();
        assert_eq!(emb.images.len(), 4);
        // chain then fork tops
        assert!(emb.images[0].is_strict_subset_of(&emb.images[1]));
        assert!(emb.images[1].is_strict_subset_of(&emb.images[2]));
        assert!(emb.images[1].is_strict_subset_of(&emb.images[3]));
        assert!(!emb.images[2].comparable(&emb.images[3]));
    }

    #[test]
    fn detect_y_dualized_mirror() {
        let f = fam(4, &[&[1, 2, 3], &[1, 2], &[1], &[2]]);
        // {1},{2} ⊂ {1,2} ⊂ {1,2,3}: dual fork with 2-shaft
        let emb = detect_y(&f, 2, 2, true).unwrap().unwrap();
        // Y' element order: x1 (maximal) … xk, then minimal y's
        assert!(emb.images[1].is_strict_subset_of(&emb.images[0]));
        assert!(emb.images[2].is_strict_subset_of(&emb.images[1]));
        assert!(emb.images[3].is_strict_subset_of(&emb.images[1]));
        assert!(!emb.images[2].comparable(&emb.images[3]));
        assert!(detect_y(&f, 2, 2, false).unwrap().is_none());
    }

    #[test]
    fn detect_validates_params() {
        let f = fam(3, &[&[1]]);
        assert!(detect_y(&f, 0, 2, false).is_err());
        assert!(detect_y(&f, 1, 1, false).is_err());
    }

    #[test]
    fn contains_rejects_oversized_pattern() {
        let big = make_chain(13).unwrap();
        let f = fam(3, &[&[1]]);
        assert!(contains(&f, &big, Mode::Weak).is_err());
    }

    #[test]
    fn empty_family_contains_nothing() {
        let f = Family::empty(3).unwrap();
        assert!(contains(&f, &make_chain(1).unwrap(), Mode::Weak)
            .unwrap()
            .is_none());
        assert!(detect_y(&f, 1, 2, false).unwrap().is_none());
    }
}
