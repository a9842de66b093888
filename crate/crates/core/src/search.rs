//! Exact computation of `La(n,·)` and `La#(n,·)` by branch and bound
//! over the subsets of `[n]` with certificate families.
//!
//! Candidates are ordered middle-out (extremal families concentrate near
//! level `n/2`). The search explores ties on the size bound so the
//! returned witness is the canonically smallest maximum family; this
//! makes results identical across runs and across any subtree split, so
//! a parallel driver only needs a deterministic merge.

use alloc::vec::Vec;

use crate::construct::middle_levels;
use crate::error::{Error, Result};
use crate::lattice::{factorial, sigma, Family, Subset};
use crate::patterns::{
    contains_impl, detect_y_masks, longest_chain_len, make_y, Mode, Pattern,
};

/// Largest ground set the search will attempt.
pub const MAX_SEARCH_N: u32 = 12;

/// Default branch-node budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// The forbidden configurations: patterns paired with their containment
/// mode.
#[derive(Clone, Debug)]
pub struct ForbiddenSet {
    items: Vec<(Pattern, Mode)>,
}

impl ForbiddenSet {
    pub fn new(items: Vec<(Pattern, Mode)>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::domain("forbidden set must be non-empty".into()));
        }
        Ok(ForbiddenSet { items })
    }

    pub fn items(&self) -> &[(Pattern, Mode)] {
        &self.items
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Branch-node budget; exceeding it stops the search with
    /// `exhaustive = false`.
    pub budget: u64,
    /// Opt-in LYM pruning. Heuristic: only exact when every feasible
    /// family minus `{∅,[n]}` satisfies the cross-multiplied LYM bound
    /// for the inferred parameter (true for `{Y_k, Y'_k}` induced and
    /// for forbidden chains).
    pub lym_prune: bool,
    /// Opt-in symmetry reduction: restricts the canonically smallest
    /// chosen set to a prefix `{1,…,i}`. Affects node counts and the
    /// witness representative, never the optimum.
    pub symmetry: bool,
    /// Optional feasible incumbent to seed the bound.
    pub initial: Option<Family>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            lym_prune: false,
            symmetry: false,
            initial: None,
        }
    }
}

/// Outcome of a search. When `exhaustive` is true the optimum is proved;
/// otherwise it is the best lower bound found within the budget.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub optimum: usize,
    pub witness: Family,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

/// Fast feasibility checkers; the generic backtracking detector is kept
/// for post-hoc validation so the two routes stay independent.
enum Checker {
    /// Forbidden chain `P_k` (weak and induced coincide for chains).
    ChainLen { k: u32 },
    /// Induced `Y_{k,r}` or its dual.
    Fork { k: u32, r: u32, dual: bool },
    /// Anything else: generic embedding search pinned to the added set.
    Generic { pattern: Pattern, mode: Mode },
}

fn classify(pattern: &Pattern, mode: Mode) -> Checker {
    if pattern.is_chain() {
        return Checker::ChainLen {
            k: pattern.len() as u32,
        };
    }
    if mode == Mode::Induced {
        let m = pattern.len() as u32;
        for r in 2..m {
            let k = m - r;
            if let Ok(y) = make_y(k, r) {
                if *pattern == y {
                    return Checker::Fork { k, r, dual: false };
                }
                if *pattern == y.dual() {
                    return Checker::Fork { k, r, dual: true };
                }
            }
        }
    }
    Checker::Generic {
        pattern: pattern.clone(),
        mode,
    }
}

impl Checker {
    /// Does the canonically sorted family `masks` contain the forbidden
    /// configuration? `added` is the index of the set whose insertion
    /// triggered the check (used to pin the generic search).
    fn violated(&self, n: u32, masks: &[u32], added: usize) -> bool {
        match self {
            Checker::ChainLen { k } => longest_chain_len(masks) >= *k,
            Checker::Fork { k, r, dual } => {
                if *dual {
                    let full = mask_all(n);
                    let mut comp: Vec<u32> = masks.iter().map(|m| full & !m).collect();
                    comp.sort_unstable_by_key(|m| (m.count_ones(), *m));
                    detect_y_masks(&comp, *k, *r).is_some()
                } else {
                    detect_y_masks(masks, *k, *r).is_some()
                }
            }
            Checker::Generic { pattern, mode } => {
                contains_impl(n, masks, pattern, *mode, Some(added)).is_some()
            }
        }
    }
}

#[inline]
fn mask_all(n: u32) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

/// A prepared search instance. `run` explores the whole tree;
/// `run_subtree` explores one forced prefix of include/exclude
/// decisions, which is how the parallel driver splits work.
pub struct Search {
    n: u32,
    candidates: Vec<u32>,
    checkers: Vec<Checker>,
    forbidden: ForbiddenSet,
    budget: u64,
    symmetry: bool,
    /// (ascending non-exempt weights prefix sums, exempt counts) for the
    /// optional LYM bound.
    lym: Option<LymBound>,
    seed: Option<(usize, Vec<u32>)>,
}

struct LymBound {
    /// Cross-multiplied budget `param · n!`.
    budget: i128,
    /// Prefix sums of non-exempt candidate weights in candidate order
    /// (ascending, since the order is middle-out).
    prefix: Vec<i128>,
    /// Number of non-exempt candidates strictly before index i.
    nonexempt_before: Vec<usize>,
    /// Number of exempt (∅/[n]) candidates at index ≥ i.
    exempt_from: Vec<usize>,
}

impl Search {
    pub fn new(n: u32, forbidden: ForbiddenSet, options: &SearchOptions) -> Result<Self> {
        if n == 0 || n > MAX_SEARCH_N {
            return Err(Error::resource(alloc::format!(
                "search requires 1 ≤ n ≤ {MAX_SEARCH_N}, got {n}"
            )));
        }
        let full = mask_all(n);
        let mut candidates: Vec<u32> = (0..=full).collect();
        // middle-out: |2·size − n| ascending, then canonical (size, colex)
        candidates.sort_unstable_by_key(|&m| {
            let s = m.count_ones() as i32;
            ((2 * s - n as i32).abs(), s, m)
        });

        let checkers = forbidden
            .items()
            .iter()
            .map(|(p, mode)| classify(p, *mode))
            .collect();

        let lym = if options.lym_prune {
            Some(build_lym_bound(n, &candidates, &forbidden)?)
        } else {
            None
        };

        let seed = match &options.initial {
            None => None,
            Some(fam) => {
                if fam.n() != n {
                    return Err(Error::domain(
                        "initial incumbent has wrong ground set".into(),
                    ));
                }
                let masks = fam.masks();
                for (p, mode) in forbidden.items() {
                    if contains_impl(n, &masks, p, *mode, None).is_some() {
                        return Err(Error::domain(alloc::format!(
                            "initial incumbent contains forbidden {} ({})",
                            p.label(),
                            mode
                        )));
                    }
                }
                Some((masks.len(), masks))
            }
        };

        Ok(Search {
            n,
            candidates,
            checkers,
            forbidden,
            budget: options.budget,
            symmetry: options.symmetry,
            lym,
            seed,
        })
    }

    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    /// Explores the full decision tree with the instance budget.
    pub fn run(&self) -> Result<SearchResult> {
        self.run_subtree(&[], self.budget)
    }

    /// Explores the subtree where the first `prefix.len()` candidates are
    /// forced to the given include/exclude decisions.
    pub fn run_subtree(&self, prefix: &[bool], budget: u64) -> Result<SearchResult> {
        let mut state = SearchState {
            chosen: Vec::new(),
            chosen_sorted: Vec::new(),
            min_chosen: None,
            lym_spent: 0,
            best_size: self.seed.as_ref().map_or(0, |(s, _)| *s),
            best: self.seed.as_ref().map(|(_, m)| m.clone()),
            nodes: 0,
            budget,
            exhausted: false,
        };
        // best_size tracks a size only; an empty best with seed size 0
        // means the empty family
        if state.best.is_none() {
            state.best = Some(Vec::new());
        }
        self.explore(0, prefix, &mut state);
        let best_masks = state.best.unwrap();
        let witness = Family::from_masks(self.n, &best_masks)?;
        let result = SearchResult {
            optimum: state.best_size,
            witness,
            nodes_explored: state.nodes,
            exhaustive: !state.exhausted,
        };
        self.validate(&result)?;
        Ok(result)
    }

    /// Post-hoc validation with the generic detector (never the
    /// incremental checkers).
    fn validate(&self, result: &SearchResult) -> Result<()> {
        let masks = result.witness.masks();
        for (p, mode) in self.forbidden.items() {
            if contains_impl(self.n, &masks, p, *mode, None).is_some() {
                return Err(Error::Internal(alloc::format!(
                    "witness contains forbidden {} ({})",
                    p.label(),
                    mode
                )));
            }
        }
        Ok(())
    }

    fn explore(&self, idx: usize, prefix: &[bool], state: &mut SearchState) {
        if state.exhausted {
            return;
        }
        state.nodes += 1;
        if state.nodes > state.budget {
            state.exhausted = true;
            return;
        }
        let bound = state.chosen.len() + self.remaining_bound(idx, state);
        if bound < state.best_size {
            return;
        }
        if idx == self.candidates.len() {
            self.offer(state);
            return;
        }
        let include_allowed = prefix.get(idx).copied().unwrap_or(true);
        let exclude_allowed = prefix.get(idx).map_or(true, |&inc| !inc);

        if include_allowed {
            let c = self.candidates[idx];
            if self.symmetry_ok(c, state) {
                if let Some(pos) = self.try_include(c, state) {
                    self.explore(idx + 1, prefix, state);
                    self.undo_include(c, pos, state);
                }
            }
        }
        if exclude_allowed {
            self.explore(idx + 1, prefix, state);
        }
    }

    /// Feasibility check: insert `c` into the sorted view and ask every
    /// checker; on failure the insertion is rolled back.
    fn try_include(&self, c: u32, state: &mut SearchState) -> Option<usize> {
        let key = (c.count_ones(), c);
        let pos = state
            .chosen_sorted
            .binary_search_by_key(&key, |&m| (m.count_ones(), m))
            .unwrap_err();
        state.chosen_sorted.insert(pos, c);
        let ok = self
            .checkers
            .iter()
            .all(|ch| !ch.violated(self.n, &state.chosen_sorted, pos));
        if !ok {
            state.chosen_sorted.remove(pos);
            return None;
        }
        state.chosen.push(c);
        if let Some(l) = &self.lym {
            if !is_exempt(self.n, c) {
                state.lym_spent += weight_of(self.n, c) as i128;
            }
            let _ = l;
        }
        if state.min_chosen.map_or(true, |m| key < (m.count_ones(), m)) {
            state.min_chosen = Some(c);
        }
        Some(pos)
    }

    fn undo_include(&self, c: u32, pos: usize, state: &mut SearchState) {
        state.chosen_sorted.remove(pos);
        state.chosen.pop();
        if self.lym.is_some() && !is_exempt(self.n, c) {
            state.lym_spent -= weight_of(self.n, c) as i128;
        }
        if state.min_chosen == Some(c) {
            state.min_chosen = state
                .chosen
                .iter()
                .copied()
                .min_by_key(|&m| (m.count_ones(), m));
        }
    }

    /// Symmetry reduction: any family can be relabeled so its canonical
    /// minimum is a prefix set, so only those representatives are
    /// explored.
    fn symmetry_ok(&self, c: u32, state: &SearchState) -> bool {
        if !self.symmetry {
            return true;
        }
        let key = (c.count_ones(), c);
        let becomes_min = state
            .min_chosen
            .map_or(true, |m| key < (m.count_ones(), m));
        if becomes_min {
            let s = c.count_ones();
            c == mask_all(s.min(31)) || c == 0
        } else {
            true
        }
    }

    fn remaining_bound(&self, idx: usize, state: &SearchState) -> usize {
        let count_bound = self.candidates.len() - idx;
        match &self.lym {
            None => count_bound,
            Some(l) => {
                let exempt = l.exempt_from[idx];
                let start = l.nonexempt_before[idx];
                let budget_left = l.budget - state.lym_spent;
                // largest t with prefix[start+t] − prefix[start] ≤ budget_left
                let base = l.prefix[start];
                let mut lo = 0usize;
                let mut hi = l.prefix.len() - 1 - start;
                while lo < hi {
                    let mid = (lo + hi + 1) / 2;
                    if l.prefix[start + mid] - base <= budget_left {
                        lo = mid;
                    } else {
                        hi = mid - 1;
                    }
                }
                count_bound.min(exempt + lo)
            }
        }
    }

    fn offer(&self, state: &mut SearchState) {
        let size = state.chosen.len();
        if size > state.best_size {
            state.best_size = size;
            state.best = Some(state.chosen_sorted.clone());
        } else if size == state.best_size {
            let cur = state.best.as_ref().unwrap();
            if canonical_less(&state.chosen_sorted, cur) {
                state.best = Some(state.chosen_sorted.clone());
            }
        }
    }
}

struct SearchState {
    chosen: Vec<u32>,
    chosen_sorted: Vec<u32>,
    min_chosen: Option<u32>,
    lym_spent: i128,
    best_size: usize,
    best: Option<Vec<u32>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

fn canonical_less(a: &[u32], b: &[u32]) -> bool {
    let ka = a.iter().map(|&m| (m.count_ones(), m));
    let kb = b.iter().map(|&m| (m.count_ones(), m));
    ka.cmp(kb) == core::cmp::Ordering::Less
}

#[inline]
fn is_exempt(n: u32, mask: u32) -> bool {
    mask == 0 || mask == mask_all(n)
}

#[inline]
fn weight_of(n: u32, mask: u32) -> u64 {
    let s = mask.count_ones();
    factorial(s) * factorial(n - s)
}

/// Infers the LYM parameter from the forbidden set: `m−1` for a
/// forbidden chain `P_m`, and `k` when both `Y_{k,r}` and `Y'_{k,r'}`
/// are forbidden induced. Errors when nothing applies.
fn build_lym_bound(n: u32, candidates: &[u32], forb: &ForbiddenSet) -> Result<LymBound> {
    let mut param: Option<u32> = None;
    let mut forks: Vec<(u32, bool)> = Vec::new();
    for (p, mode) in forb.items() {
        if p.is_chain() && p.len() >= 2 {
            let cand = p.len() as u32 - 1;
            param = Some(param.map_or(cand, |cur| cur.min(cand)));
        }
        if *mode == Mode::Induced {
            let m = p.len() as u32;
            for r in 2..m {
                let k = m - r;
                if let Ok(y) = make_y(k, r) {
                    if *p == y {
                        forks.push((k, false));
                    } else if *p == y.dual() {
                        forks.push((k, true));
                    }
                }
            }
        }
    }
    for &(k, dual) in &forks {
        if !dual && forks.contains(&(k, true)) {
            param = Some(param.map_or(k, |cur| cur.min(k)));
        }
    }
    let Some(param) = param else {
        return Err(Error::domain(
            "lym pruning needs a forbidden chain or a dual pair of induced forks".into(),
        ));
    };

    let mut prefix = alloc::vec![0i128];
    let mut nonexempt_before = Vec::with_capacity(candidates.len() + 1);
    let mut exempt_suffix = alloc::vec![0usize; candidates.len() + 1];
    let mut nonexempt = 0usize;
    for &c in candidates {
        nonexempt_before.push(nonexempt);
        if !is_exempt(n, c) {
            prefix.push(prefix.last().unwrap() + weight_of(n, c) as i128);
            nonexempt += 1;
        }
    }
    nonexempt_before.push(nonexempt);
    for i in (0..candidates.len()).rev() {
        exempt_suffix[i] = exempt_suffix[i + 1] + usize::from(is_exempt(n, candidates[i]));
    }
    Ok(LymBound {
        budget: param as i128 * factorial(n) as i128,
        prefix,
        nonexempt_before,
        exempt_from: exempt_suffix,
    })
}

/// Computes the extremal number for the forbidden set, with certificate.
pub fn extremal(n: u32, forbidden: &ForbiddenSet, options: &SearchOptions) -> Result<SearchResult> {
    Search::new(n, forbidden.clone(), options)?.run()
}

/// Searches for a family strictly larger than `Σ(n,k)` avoiding only the
/// induced fork `Y_{k,2}` (or its dual). Absence at small `n` is not a
/// refutation; strictness may need larger ground sets.
pub fn witness_exceeding_sigma(n: u32, k: u32, dualized: bool) -> Result<Option<Family>> {
    let pattern = if dualized {
        make_y(k, 2)?.dual()
    } else {
        make_y(k, 2)?
    };
    let forb = ForbiddenSet::new(alloc::vec![(pattern, Mode::Induced)])?;
    let result = extremal(n, &forb, &SearchOptions::default())?;
    if result.optimum as u64 > sigma(n, k)? {
        Ok(Some(result.witness))
    } else {
        Ok(None)
    }
}

/// One row of a conjecture scan.
#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub k: u32,
    pub r: u32,
    pub n: u32,
    pub optimum: usize,
    pub sigma: u64,
    pub exhaustive: bool,
    /// Middle-levels lower bound `optimum ≥ Σ(n,k)` observed.
    pub lower_bound_ok: bool,
    pub matches_sigma: bool,
}

/// Tabulates `La#(n, {Y_{k,r}, Y'_{k,r}})` against `Σ(n,k)` over the
/// given ranges. Combinations with `k > n+1` are skipped. Each search is
/// seeded with the middle-levels family, so the reported optimum is
/// always at least `Σ(n,k)` even under a budget stop.
pub fn conjecture_scan(
    ks: core::ops::RangeInclusive<u32>,
    rs: core::ops::RangeInclusive<u32>,
    ns: core::ops::RangeInclusive<u32>,
    options: &SearchOptions,
) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for k in ks.clone() {
        if k < 2 {
            return Err(Error::domain("conjecture scan requires k ≥ 2".into()));
        }
        for r in rs.clone() {
            if r < 2 {
                return Err(Error::domain("conjecture scan requires r ≥ 2".into()));
            }
            for n in ns.clone() {
                if k > n + 1 {
                    continue;
                }
                let y = make_y(k, r)?;
                let forb =
                    ForbiddenSet::new(alloc::vec![(y.clone(), Mode::Induced), (y.dual(), Mode::Induced)])?;
                let mut opts = options.clone();
                opts.initial = Some(middle_levels(n, k)?);
                let result = extremal(n, &forb, &opts)?;
                let sig = sigma(n, k)?;
                rows.push(ConjectureRow {
                    k,
                    r,
                    n,
                    optimum: result.optimum,
                    sigma: sig,
                    exhaustive: result.exhaustive,
                    lower_bound_ok: result.optimum as u64 >= sig,
                    matches_sigma: result.optimum as u64 == sig,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_butterfly, make_chain};

    fn forb(items: Vec<(Pattern, Mode)>) -> ForbiddenSet {
        ForbiddenSet::new(items).unwrap()
    }

    #[test]
    fn sperner_n3() {
        let f = forb(alloc::vec![(make_chain(2).unwrap(), Mode::Weak)]);
        let r = extremal(3, &f, &SearchOptions::default()).unwrap();
        assert_eq!(r.optimum, 3);
        assert!(r.exhaustive);
        assert_eq!(r.witness.len(), 3);
    }

    #[test]
    fn theorem_one_n3() {
        let y = make_y(2, 2).unwrap();
        let f = forb(alloc::vec![
            (y.clone(), Mode::Induced),
            (y.dual(), Mode::Induced)
        ]);
        let r = extremal(3, &f, &SearchOptions::default()).unwrap();
        assert_eq!(r.optimum, 6);
        assert!(r.exhaustive);
    }

    #[test]
    fn single_element_ground_set() {
        let f = forb(alloc::vec![(make_chain(2).unwrap(), Mode::Weak)]);
        let r = extremal(1, &f, &SearchOptions::default()).unwrap();
        assert_eq!(r.optimum, 1);
    }

    #[test]
    fn butterfly_weak_n3() {
        // La(3,B) = Σ(3,2) = 6
        let f = forb(alloc::vec![(make_butterfly(), Mode::Weak)]);
        let r = extremal(3, &f, &SearchOptions::default()).unwrap();
        assert_eq!(r.optimum, 6);
    }

    #[test]
    fn budget_stop_reports_lower_bound() {
        let y = make_y(2, 2).unwrap();
        let f = forb(alloc::vec![
            (y.clone(), Mode::Induced),
            (y.dual(), Mode::Induced)
        ]);
        let mut opts = SearchOptions::default();
        opts.budget = 10;
        let r = extremal(4, &f, &opts).unwrap();
        assert!(!r.exhaustive);
        assert!(r.optimum <= 10);
    }

    #[test]
    fn infeasible_seed_rejected() {
        let y = make_y(2, 2).unwrap();
        let bad = Family::from_masks(4, &[0b0001, 0b0011, 0b0111, 0b1011]).unwrap();
        let f = forb(alloc::vec![(y, Mode::Induced)]);
        let mut opts = SearchOptions::default();
        opts.initial = Some(bad);
        assert!(Search::new(4, f, &opts).is_err());
    }

    #[test]
    fn symmetry_switch_preserves_optimum() {
        let y = make_y(2, 2).unwrap();
        let f = forb(alloc::vec![
            (y.clone(), Mode::Induced),
            (y.dual(), Mode::Induced)
        ]);
        let plain = extremal(3, &f, &SearchOptions::default()).unwrap();
        let mut opts = SearchOptions::default();
        opts.symmetry = true;
        let reduced = extremal(3, &f, &opts).unwrap();
        assert_eq!(plain.optimum, reduced.optimum);
        assert!(reduced.nodes_explored <= plain.nodes_explored);
    }

    #[test]
    fn lym_prune_agrees() {
        let y = make_y(2, 2).unwrap();
        let f = forb(alloc::vec![
            (y.clone(), Mode::Induced),
            (y.dual(), Mode::Induced)
        ]);
        let plain = extremal(3, &f, &SearchOptions::default()).unwrap();
        let mut opts = SearchOptions::default();
        opts.lym_prune = true;
        let pruned = extremal(3, &f, &opts).unwrap();
        assert_eq!(plain.optimum, pruned.optimum);
        assert_eq!(plain.witness, pruned.witness);
    }

    #[test]
    fn lym_prune_requires_inferable_parameter() {
        let f = forb(alloc::vec![(make_butterfly(), Mode::Weak)]);
        let mut opts = SearchOptions::default();
        opts.lym_prune = true;
        assert!(Search::new(3, f, &opts).is_err());
    }

    #[test]
    fn exceeding_sigma_witness_at_n3() {
        // dropping ∅ from 2^[3] leaves 7 > Σ(3,2) = 6 sets with no
        // induced Y₂
        let w = witness_exceeding_sigma(3, 2, false).unwrap().unwrap();
        assert_eq!(w.len(), 7);
        assert!(crate::patterns::detect_y(&w, 2, 2, false)
            .unwrap()
            .is_none());
        let w = witness_exceeding_sigma(3, 2, true).unwrap().unwrap();
        assert_eq!(w.len(), 7);
    }

    #[test]
    fn subtree_split_covers_the_tree() {
        let y = make_y(2, 2).unwrap();
        let f = forb(alloc::vec![
            (y.clone(), Mode::Induced),
            (y.dual(), Mode::Induced)
        ]);
        let search = Search::new(3, f, &SearchOptions::default()).unwrap();
        let whole = search.run().unwrap();
        let mut best: Option<(usize, Family)> = None;
        let mut nodes = 0;
        for bits in 0..4u32 {
            let prefix = alloc::vec![bits & 1 != 0, bits & 2 != 0];
            let part = search.run_subtree(&prefix, DEFAULT_BUDGET).unwrap();
            nodes += part.nodes_explored;
            let better = match &best {
                None => true,
                Some((s, w)) => {
                    part.optimum > *s || (part.optimum == *s && part.witness < *w)
                }
            };
            if better {
                best = Some((part.optimum, part.witness));
            }
        }
        let (opt, wit) = best.unwrap();
        assert_eq!(opt, whole.optimum);
        assert_eq!(wit, whole.witness);
        assert!(nodes >= whole.nodes_explored);
    }
}
