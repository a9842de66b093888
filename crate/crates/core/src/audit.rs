//! Mechanical verification of the spine/weight bookkeeping behind the
//! LYM-type bound for induced-fork-free families.
//!
//! Given a family `F` and shaft parameter `k`, a *spine* is a saturated
//! chain carrying exactly `k−1` members of `F` with both endpoints in
//! `F`. Every full chain is associated with zero or more spines, each
//! associated pair carries a weight in `{−1,0,+1}`, and the module
//! checks, in exact integers:
//!
//! * per spine: the full-chain weight sum equals `a₁b₁ − a₀b₀` computed
//!   from interval chain counts, and is ≤ 0 under the hypotheses;
//! * the summation-order exchange (spine-outer vs chain-outer);
//! * the double count `Σ_C (|F∩C| − k) = Σ_F |F|!(n−|F|)! − k·n!`;
//! * the LYM inequality `Σ_F |F|!(n−|F|)! ≤ k·n!`;
//! * the prefix-chain swap injection (avoiding ≥ hitting).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{
    chains_in_interval, factorial, full_chains, Family, FullChain, Interval, Subset,
    MAX_CHAIN_ENUM,
};
use crate::patterns::{detect_y, Embedding};

/// A saturated chain `A₁ ⊂ … ⊂ A_ℓ` containing exactly `k−1` family
/// members, with `A₁, A_ℓ ∈ F`. For `k = 2` a spine is a single member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Spine {
    sets: Vec<Subset>,
    k: u32,
}

impl Spine {
    /// Validates the spine conditions against the family it audits.
    pub fn new(sets: Vec<Subset>, f: &Family, k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain("spine requires k ≥ 2".into()));
        }
        if sets.is_empty() {
            return Err(Error::domain("spine must be non-empty".into()));
        }
        for w in sets.windows(2) {
            if !w[0].is_strict_subset_of(&w[1]) || w[1].size() != w[0].size() + 1 {
                return Err(Error::domain("spine must be a saturated chain".into()));
            }
        }
        let members = sets.iter().filter(|s| f.contains_set(s)).count();
        if members != (k - 1) as usize {
            return Err(Error::domain(alloc::format!(
                "spine carries {members} family members, expected k−1 = {}",
                k - 1
            )));
        }
        let first = sets.first().unwrap();
        let last = sets.last().unwrap();
        if !f.contains_set(first) || !f.contains_set(last) {
            return Err(Error::domain("spine endpoints must be family members".into()));
        }
        Ok(Spine { sets, k })
    }

    fn from_chain_segment(sets: Vec<Subset>, k: u32) -> Self {
        Spine { sets, k }
    }

    #[inline]
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn bottom(&self) -> Subset {
        *self.sets.first().unwrap()
    }

    #[inline]
    pub fn top(&self) -> Subset {
        *self.sets.last().unwrap()
    }

    /// True when every set of the spine lies on the chain; by saturation
    /// the spine is then a contiguous subchain.
    pub fn lies_on(&self, c: &FullChain) -> bool {
        self.sets.iter().all(|s| c.contains_set(s))
    }
}

/// Per-spine audit numbers.
///
/// `a₀`/`a₁` count full chains of `[∅,A₁]` avoiding/hitting
/// `(F∩[∅,A₁])∖{A₁}`, and `b₀`/`b₁` likewise in `[A_ℓ,[n]]` for
/// `(F∩[A_ℓ,[n]])∖{A_ℓ}`. `direct_sum` is the weight sum over all full
/// chains, enumerated independently of the product form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineAudit {
    pub a0: u64,
    pub a1: u64,
    pub b0: u64,
    pub b1: u64,
    pub direct_sum: i128,
    pub product_sum: i128,
    pub g1_is_chain: bool,
    pub g2_is_chain: bool,
}

/// Association of one full chain with its spines.
#[derive(Clone, Debug)]
pub struct ChainAudit {
    pub members: usize,
    pub associated_spines: Vec<Spine>,
    pub weight_sum: i128,
}

/// Enumerates every spine of `f` for shaft parameter `k`: each chain of
/// `k−1` family members together with each saturated connecting path
/// whose interior avoids the family. Deterministic canonical order.
pub fn enumerate_spines(f: &Family, k: u32) -> Result<Vec<Spine>> {
    if k < 2 {
        return Err(Error::domain("spine enumeration requires k ≥ 2".into()));
    }
    if f.n() > MAX_CHAIN_ENUM {
        return Err(Error::resource(alloc::format!(
            "spine enumeration requires n ≤ {MAX_CHAIN_ENUM}"
        )));
    }
    let mut out = Vec::new();
    let mut tuple: Vec<Subset> = Vec::new();
    pick_members(f, k, 0, &mut tuple, &mut out);
    Ok(out)
}

fn pick_members(f: &Family, k: u32, from: usize, tuple: &mut Vec<Subset>, out: &mut Vec<Spine>) {
    if tuple.len() == (k - 1) as usize {
        let mut chain = alloc::vec![tuple[0]];
        connect_segments(f, k, tuple, 1, &mut chain, out);
        return;
    }
    for i in from..f.len() {
        let s = f.sets()[i];
        if let Some(last) = tuple.last() {
            if !last.is_strict_subset_of(&s) {
                continue;
            }
        }
        tuple.push(s);
        pick_members(f, k, i + 1, tuple, out);
        tuple.pop();
    }
}

/// Extends `chain` (currently ending at `tuple[seg-1]`) by every
/// saturated family-avoiding path to `tuple[seg]`, recursing across
/// segments; emits one spine per complete combination.
fn connect_segments(
    f: &Family,
    k: u32,
    tuple: &[Subset],
    seg: usize,
    chain: &mut Vec<Subset>,
    out: &mut Vec<Spine>,
) {
    if seg == tuple.len() {
        out.push(Spine::from_chain_segment(chain.clone(), k));
        return;
    }
    let target = tuple[seg];
    extend_paths(f, k, tuple, seg, target, chain, out);
}

fn extend_paths(
    f: &Family,
    k: u32,
    tuple: &[Subset],
    seg: usize,
    target: Subset,
    chain: &mut Vec<Subset>,
    out: &mut Vec<Spine>,
) {
    let cur = *chain.last().unwrap();
    if cur == target {
        connect_segments(f, k, tuple, seg + 1, chain, out);
        return;
    }
    for e in target.members() {
        if cur.has_member(e) {
            continue;
        }
        let next = Subset::from_bits(cur.n(), cur.bits() | (1 << (e - 1))).unwrap();
        // interior sets must not be family members
        if next != target && f.contains_set(&next) {
            continue;
        }
        chain.push(next);
        extend_paths(f, k, tuple, seg, target, chain, out);
        chain.pop();
    }
}

/// Associates a full chain with its spines:
/// exactly `k−1` members → the single spanning spine; `k+x` members
/// (`x ≥ 1`) → the `x` interior spines skipping the first and last
/// `k−1` member windows; otherwise none.
pub fn associate(c: &FullChain, f: &Family, k: u32) -> Result<ChainAudit> {
    if k < 2 {
        return Err(Error::domain("association requires k ≥ 2".into()));
    }
    let mem = c.family_members(f);
    let m = mem.len();
    let kk = (k - 1) as usize;
    let mut spines = Vec::new();
    if m == kk {
        spines.push(subchain(c, &mem[0], &mem[m - 1], k));
    } else if m >= k as usize + 1 {
        let x = m - k as usize;
        // spines S_{F_i} for 2 ≤ i ≤ x+1, spanning F_i … F_{i+k−2}
        for i in 2..=x + 1 {
            spines.push(subchain(c, &mem[i - 1], &mem[i + kk - 2], k));
        }
    }
    let per_pair: i128 = if m == kk {
        -1
    } else if m >= k as usize + 1 {
        1
    } else {
        0
    };
    let weight_sum = per_pair * spines.len() as i128;
    Ok(ChainAudit {
        members: m,
        associated_spines: spines,
        weight_sum,
    })
}

fn subchain(c: &FullChain, from: &Subset, to: &Subset, k: u32) -> Spine {
    let sets: Vec<Subset> = (from.size()..=to.size()).map(|i| c.prefix(i)).collect();
    Spine::from_chain_segment(sets, k)
}

/// Weight of the pair `(S, C)`: `+1` when `C` contains `S` as a spine
/// and carries at least `k+1` members, `−1` when it contains `S` and
/// carries exactly `k−1`, else `0`. Implemented from the association
/// rule directly, independent of [`associate`]'s spine construction.
pub fn weight(s: &Spine, c: &FullChain, f: &Family, k: u32) -> i32 {
    if !s.lies_on(c) {
        return 0;
    }
    let mem = c.family_members(f);
    let m = mem.len();
    let kk = (k - 1) as usize;
    if m == kk {
        // the single associated spine spans all members; it equals S
        // exactly when every member lies on S
        let all_on_s = mem.iter().all(|t| s.sets.binary_search(t).is_ok());
        if all_on_s {
            -1
        } else {
            0
        }
    } else if m >= k as usize + 1 {
        // S spans the member window starting at its bottom; it is an
        // associated spine iff that window is interior on both sides
        let bottom = s.bottom();
        let Ok(j) = mem.binary_search(&bottom) else {
            return 0;
        };
        let j1 = j + 1; // 1-based index of F_j
        if j1 >= 2 && j1 + kk - 1 <= m - 1 {
            1
        } else {
            0
        }
    } else {
        0
    }
}

/// Audits one spine: the direct weight sum over all `n!` full chains,
/// the interval counts `a₀,a₁,b₀,b₁` with the product form
/// `a₁b₁ − a₀b₀`, and the chain-ness of `F∩[∅,A₁]` and `F∩[A_ℓ,[n]]`.
pub fn audit_spine(f: &Family, k: u32, s: &Spine) -> Result<SpineAudit> {
    let n = f.n();
    let mut direct_sum: i128 = 0;
    for c in full_chains(n)? {
        direct_sum += weight(s, &c, f, k) as i128;
    }

    let empty = Subset::empty(n)?;
    let full = Subset::full(n)?;
    let (a0, a1, g1) = interval_counts(f, &Interval::new(empty, s.bottom())?, &s.bottom())?;
    let (b0, b1, g2) = interval_counts(f, &Interval::new(s.top(), full)?, &s.top())?;

    Ok(SpineAudit {
        a0,
        a1,
        b0,
        b1,
        direct_sum,
        product_sum: a1 as i128 * b1 as i128 - a0 as i128 * b0 as i128,
        g1_is_chain: g1,
        g2_is_chain: g2,
    })
}

/// Counts interval chains avoiding/hitting the family members inside the
/// interval other than `exclude`; also reports whether the full
/// intersection `F ∩ interval` is a chain.
fn interval_counts(
    f: &Family,
    iv: &Interval,
    exclude: &Subset,
) -> Result<(u64, u64, bool)> {
    let inside: Vec<Subset> = f
        .iter()
        .filter(|s| iv.contains(s))
        .copied()
        .collect();
    let is_chain = inside
        .iter()
        .enumerate()
        .all(|(i, a)| inside.iter().skip(i + 1).all(|b| a.comparable(b)));
    let targets: Vec<Subset> = inside.into_iter().filter(|s| s != exclude).collect();
    let mut avoid = 0u64;
    let mut hit = 0u64;
    for chain in chains_in_interval(iv)? {
        if chain.iter().any(|s| targets.binary_search(s).is_ok()) {
            hit += 1;
        } else {
            avoid += 1;
        }
    }
    Ok((avoid, hit, is_chain))
}

/// Per-chain identity `Σ_{S ∈ spine(C)} w(S,C) = |F∩C| − k`; holds
/// exactly when the chain carries at least `k−1` members.
pub fn per_chain_identity(f: &Family, k: u32, c: &FullChain) -> Result<(i128, i128, bool)> {
    let audit = associate(c, f, k)?;
    let lhs = audit.weight_sum;
    let rhs = audit.members as i128 - k as i128;
    Ok((lhs, rhs, lhs == rhs))
}

/// Both sides of the double count: `Σ_C (|F∩C| − k)` by chain
/// enumeration and `Σ_F |F|!(n−|F|)! − k·n!` by the factorial formula.
/// They agree for every family, no hypotheses needed.
pub fn double_count(f: &Family, k: u32) -> Result<(i128, i128)> {
    let n = f.n();
    let mut chain_side: i128 = 0;
    for c in full_chains(n)? {
        chain_side += c.count_family_members(f) as i128 - k as i128;
    }
    let factorial_side = lym_lhs(f) - k as i128 * factorial(n) as i128;
    Ok((chain_side, factorial_side))
}

fn lym_lhs(f: &Family) -> i128 {
    let n = f.n();
    f.iter()
        .map(|s| factorial(s.size()) as i128 * factorial(n - s.size()) as i128)
        .sum()
}

/// LYM check in cross-multiplied integer form:
/// `Σ_F |F|!(n−|F|)! ≤ k·n!`. Runs on any family; the guarantee applies
/// under the fork-freeness hypotheses.
pub fn lym_check(f: &Family, k: u32) -> (i128, i128, bool) {
    let lhs = lym_lhs(f);
    let rhs = k as i128 * factorial(f.n()) as i128;
    (lhs, rhs, lhs <= rhs)
}

/// Result of the prefix-chain counting check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoreEmptyReport {
    pub avoiding: u64,
    pub hitting: u64,
    pub injection_ok: bool,
}

/// For `G` a set of prefix sets `{1},{1,2},…,{1,…,n−1}`: counts full
/// chains avoiding all of `G` versus hitting some member, and verifies
/// the swap injection from hitting chains into avoiding chains (find the
/// last `G`-set `{1..j}` on the chain, swap the entries at the position
/// of element 1 and position `j+1`).
pub fn moreempty_check(n: u32, g: &[Subset]) -> Result<MoreEmptyReport> {
    if n < 2 {
        return Err(Error::domain("prefix-chain check requires n ≥ 2".into()));
    }
    if n > 8 {
        return Err(Error::resource(
            "prefix-chain check enumerates n! chains; n ≤ 8 required".into(),
        ));
    }
    let mut lens = Vec::new();
    for s in g {
        if s.n() != n {
            return Err(Error::domain("G member has wrong ground set".into()));
        }
        let j = s.size();
        if j == 0 || j >= n || s.bits() != (1 << j) - 1 {
            return Err(Error::domain(alloc::format!(
                "{s} is not a prefix set {{1,…,j}} with 1 ≤ j ≤ n−1"
            )));
        }
        lens.push(j);
    }
    lens.sort_unstable();
    lens.dedup();

    let last_g_prefix = |perm: &[u32]| -> Option<u32> {
        // chain contains {1..j} iff the first j entries are a permutation of 1..j
        let mut seen = 0u32;
        let mut last = None;
        for (idx, &x) in perm.iter().enumerate() {
            seen |= 1 << (x - 1);
            let j = idx as u32 + 1;
            if seen == (1 << j) - 1 && lens.binary_search(&j).is_ok() {
                last = Some(j);
            }
        }
        last
    };

    let mut avoiding = 0u64;
    let mut hitting = 0u64;
    let mut images: Vec<Vec<u32>> = Vec::new();
    let mut injection_ok = true;

    for c in full_chains(n)? {
        match last_g_prefix(c.perm()) {
            None => avoiding += 1,
            Some(j) => {
                hitting += 1;
                let mut perm = c.perm().to_vec();
                let i = perm.iter().position(|&x| x == 1).unwrap();
                debug_assert!(i < j as usize);
                perm.swap(i, j as usize); // positions i+1 and j+1, 1-based
                if last_g_prefix(&perm).is_some() {
                    injection_ok = false; // image must avoid G
                }
                images.push(perm);
            }
        }
    }
    images.sort_unstable();
    let distinct = {
        let mut v = images.clone();
        v.dedup();
        v.len()
    };
    if distinct as u64 != hitting {
        injection_ok = false;
    }
    Ok(MoreEmptyReport {
        avoiding,
        hitting,
        injection_ok,
    })
}

/// One spine row of a full audit.
#[derive(Clone, Debug)]
pub struct SpineRow {
    pub spine: Spine,
    pub audit: SpineAudit,
    /// Nonpositive weight sum, and the product form matches whenever
    /// both interval intersections are chains.
    pub ok: bool,
}

/// Hypothesis status of the audited family.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub empty_in_family: bool,
    pub full_in_family: bool,
    pub n_large_enough: bool,
    pub y_witness: Option<Embedding>,
    pub y_dual_witness: Option<Embedding>,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        !self.empty_in_family
            && !self.full_in_family
            && self.n_large_enough
            && self.y_witness.is_none()
            && self.y_dual_witness.is_none()
    }
}

/// Aggregated audit over every spine and chain.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub k: u32,
    pub rows: Vec<SpineRow>,
    /// Σ_S Σ_C w(S,C) computed spine-outer.
    pub eq2_lhs: i128,
    /// Σ_C Σ_S w(S,C) computed chain-outer, an independent code path.
    pub eq2_rhs: i128,
    pub double_count_lhs: i128,
    pub double_count_rhs: i128,
    pub lym_lhs: i128,
    pub lym_rhs: i128,
    pub lym_holds: bool,
    pub hypotheses: HypothesisReport,
    pub all_ok: bool,
}

/// Runs the full audit: every spine's direct and product sums, the
/// summation-order exchange, the double count, the LYM check, and the
/// hypothesis flags with fork witnesses when the family violates them.
/// The audit always reports; it never refuses a hypothesis-violating
/// family.
pub fn full_audit(f: &Family, k: u32) -> Result<AuditReport> {
    if f.n() > 8 {
        return Err(Error::resource(
            "full audit enumerates chains × spines; n ≤ 8 required".into(),
        ));
    }
    let spines = enumerate_spines(f, k)?;
    let mut rows = Vec::with_capacity(spines.len());
    let mut eq2_lhs: i128 = 0;
    for spine in spines {
        let audit = audit_spine(f, k, &spine)?;
        eq2_lhs += audit.direct_sum;
        let product_consistent = !(audit.g1_is_chain && audit.g2_is_chain)
            || audit.direct_sum == audit.product_sum;
        let ok = audit.direct_sum <= 0 && product_consistent;
        rows.push(SpineRow { spine, audit, ok });
    }

    let mut eq2_rhs: i128 = 0;
    for c in full_chains(f.n())? {
        eq2_rhs += associate(&c, f, k)?.weight_sum;
    }

    let (dc_lhs, dc_rhs) = double_count(f, k)?;
    let (lym_l, lym_r, lym_holds) = lym_check(f, k);

    let empty = Subset::empty(f.n())?;
    let full = Subset::full(f.n())?;
    let hypotheses = HypothesisReport {
        empty_in_family: f.contains_set(&empty),
        full_in_family: f.contains_set(&full),
        n_large_enough: f.n() >= k + 1,
        y_witness: detect_y(f, k, 2, false)?,
        y_dual_witness: detect_y(f, k, 2, true)?,
    };

    let all_ok = rows.iter().all(|r| r.ok)
        && eq2_lhs == eq2_rhs
        && dc_lhs == dc_rhs
        && lym_holds;

    Ok(AuditReport {
        k,
        rows,
        eq2_lhs,
        eq2_rhs,
        double_count_lhs: dc_lhs,
        double_count_rhs: dc_rhs,
        lym_lhs: lym_l,
        lym_rhs: lym_r,
        lym_holds,
        hypotheses,
        all_ok,
    })
}
