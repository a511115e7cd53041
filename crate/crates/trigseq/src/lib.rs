//! Exact and high-precision verification of the binomial sequence
//! S_n = C(6n,3n)·C(3n,n)/(2(2n+1)·C(2n,n)) (A176898, with S_0 = 1/2) and
//! its companion T_n = 16ⁿ·C(3n,n)/(24(3n-1)): divisibility and
//! integrality, prime congruences, the formal expansions of
//! sin(t·arcsin x) and cos(t·arcsin x) the sequences embed into, the
//! convergent-series identities those expansions imply, and OEIS b-file
//! cross-checks.
//!
//! Structure:
//! - [`exact`] — big-integer/rational sequence values and closed forms
//! - [`modular`] — congruence sweeps over primes
//! - [`series`] — truncated power series with exact rational coefficients
//! - [`numeric`] — arbitrary-precision analytic verification
//! - [`bfile`] — OEIS b-file parsing and cross-checking
//! - [`report`] — serializable verification reports
//! - [`checks`] — the named claim-check registry behind the CLI

pub mod bfile;
pub mod checks;
pub mod exact;
pub mod modular;
pub mod numeric;
pub mod report;
pub mod series;

pub use exact::{Integer, Rational};
