//! Exact search and verification for forbidden-subposet problems in the
//! Boolean lattice `2^[n]`.
//!
//! The crate has five parts:
//!
//! * [`lattice`] — subsets as bitmasks, families, full chains, intervals,
//!   binomials and `Σ(n,k)`;
//! * [`patterns`] — abstract poset patterns (`Y_{k,r}` forks, chains,
//!   butterfly, diamond) and weak/induced containment tests;
//! * [`search`] — branch-and-bound computation of `La(n,·)` and
//!   `La#(n,·)` with certificate families;
//! * [`audit`] — mechanical verification of the spine/weight discharging
//!   bookkeeping: chain association, per-spine sums, the double-count
//!   identity and the LYM inequality in exact integers;
//! * [`construct`] — level-union families used as lower bounds and
//!   equality cases.
//!
//! Everything is exact integer arithmetic; no floating point anywhere.
//! The crate is `no_std` (with `alloc`) so the algorithms carry no IO or
//! platform dependencies; file formats and the CLI live in the companion
//! `lapose` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod audit;
pub mod construct;
pub mod error;
pub mod lattice;
pub mod patterns;
pub mod search;

pub use error::{Error, Result};
pub use lattice::{Family, FullChain, Interval, Subset};
pub use patterns::{Embedding, Mode, Pattern};
pub use search::{ForbiddenSet, SearchOptions, SearchResult};
