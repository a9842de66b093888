//! Canonical level-union families: the k-middle-levels lower bound and
//! the same-parity equality-case variants.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{binom, level, sigma, Family};

/// A union of full levels of `2^[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSpec {
    pub n: u32,
    pub levels: Vec<u32>,
}

impl LevelSpec {
    pub fn new(n: u32, mut levels: Vec<u32>) -> Result<Self> {
        for &l in &levels {
            if l > n {
                return Err(Error::domain(alloc::format!(
                    "level {l} outside 0..={n}"
                )));
            }
        }
        levels.sort_unstable();
        levels.dedup();
        Ok(LevelSpec { n, levels })
    }
}

/// Union of the listed levels.
pub fn from_levels(spec: &LevelSpec) -> Result<Family> {
    let mut sets = Vec::new();
    for &l in &spec.levels {
        sets.extend(level(spec.n, l)?.sets().iter().copied());
    }
    Family::new(spec.n, sets)
}

/// Starting index of the heaviest window of `k` consecutive levels,
/// found by brute force; ties break toward the lower start.
pub fn max_window_start(n: u32, k: u32) -> Result<u32> {
    if k == 0 || k > n + 1 {
        return Err(Error::domain(alloc::format!(
            "window width k={k} outside 1..={}",
            n + 1
        )));
    }
    let mut best_start = 0;
    let mut best_sum = 0u64;
    for start in 0..=(n + 1 - k) {
        let sum: u64 = (start..start + k)
            .map(|i| binom(n, i as i64).unwrap())
            .sum();
        if sum > best_sum {
            best_sum = sum;
            best_start = start;
        }
    }
    Ok(best_start)
}

/// The union of the `k` consecutive levels with the largest total size;
/// its size is exactly `Σ(n,k)` since the binomials are unimodal.
pub fn middle_levels(n: u32, k: u32) -> Result<Family> {
    let start = max_window_start(n, k)?;
    let spec = LevelSpec::new(n, (start..start + k).collect())?;
    let fam = from_levels(&spec)?;
    debug_assert_eq!(fam.len() as u64, sigma(n, k).unwrap());
    Ok(fam)
}

/// Same-parity equality-case family: the `k−1` middle levels
/// `(n−k)/2+1 … (n−k)/2+k−1` plus one full flanking level — the level
/// `(n−k)/2+k` above them when `use_top`, else the level `(n−k)/2`
/// below. Both variants have size `Σ(n,k)`.
pub fn equality_case_same_parity(n: u32, k: u32, use_top: bool) -> Result<Family> {
    if k < 2 {
        return Err(Error::domain("equality case requires k ≥ 2".into()));
    }
    if n % 2 != k % 2 {
        return Err(Error::domain(alloc::format!(
            "equality case requires n ≡ k (mod 2); got n={n}, k={k}"
        )));
    }
    if n < k + 2 {
        return Err(Error::domain(alloc::format!(
            "equality case requires n ≥ k+2; got n={n}, k={k}"
        )));
    }
    let base = (n - k) / 2;
    let mut levels: Vec<u32> = (base + 1..base + k).collect();
    levels.push(if use_top { base + k } else { base });
    let fam = from_levels(&LevelSpec::new(n, levels)?)?;
    debug_assert_eq!(fam.len() as u64, sigma(n, k).unwrap());
    Ok(fam)
}
