//! Registry of named claim checks.
//!
//! Every verifiable claim family is one [`Check`] behind a common trait,
//! registered by name and selectable at runtime (`verify <suite>`,
//! `eval <target>`, `series`, `radius`, or `report` for everything). All
//! checks are pure functions of the [`RunConfig`], so independent checks
//! can fan out across workers; items are re-sorted on collection, which
//! keeps reports deterministic regardless of completion order.

mod analytic;
mod congruences;
mod sequences;
mod series_checks;

use crate::exact::Rational;
use crate::report::{CheckItem, VerificationReport};

/// Shared knobs for a check run. Defaults are desk-scale-light so that a
/// full `report` stays interactive; sweeps widen via the CLI flags.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Upper index for sequence sweeps (divisibility, integrality, Guo).
    pub max_n: u64,
    /// Exclusive upper bound for prime sweeps.
    pub prime_bound: u64,
    /// Term budget for series summations.
    pub terms: u64,
    /// Working precision in bits.
    pub prec_bits: usize,
    /// Truncation order for coefficient-level series identities.
    pub series_order: usize,
    /// Optional exact evaluation point overriding a check's default sweep.
    pub x: Option<Rational>,
    /// Optional t parameter for the trigonometric identity check.
    pub t: Option<Rational>,
    /// Evaluate the two-series identity at x = ±1/(6√3) instead of --x.
    pub conjecture_boundary: Option<i8>,
    /// Custom (a, b, x1) for the integral check; defaults run the three
    /// built-in parameter sets.
    pub integral_params: Option<(Rational, Rational, Rational)>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: 200,
            prime_bound: 100,
            terms: 10_000,
            prec_bits: 256,
            series_order: 50,
            x: None,
            t: None,
            conjecture_boundary: None,
            integral_params: None,
        }
    }
}

/// One named, runtime-selectable claim check.
pub trait Check: Sync {
    /// Unique registry key.
    fn name(&self) -> &'static str;
    /// Selector family the check belongs to (a CLI suite token).
    fn group(&self) -> &'static str;
    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem>;
}

/// Every registered check, in report order.
pub static REGISTRY: &[&dyn Check] = &[
    &sequences::Divisibility,
    &sequences::SIntegrality,
    &sequences::SProductAgree,
    &sequences::SPublishedList,
    &sequences::TIdentityAgree,
    &congruences::Fermat,
    &congruences::SpCongruence,
    &congruences::TpCongruence,
    &congruences::Guo,
    &congruences::Lemma32Quotient,
    &congruences::Lemma32Product,
    &series_checks::SSeriesAgree,
    &series_checks::TSeriesAgree,
    &series_checks::SeriesParity,
    &series_checks::SeriesRecurrence,
    &series_checks::CosPrefactorForm,
    &series_checks::ChebyshevTermination,
    &analytic::GfIdentity,
    &analytic::WeightedSum,
    &analytic::BoundarySum,
    &analytic::ConjectureIdentity,
    &analytic::PropTrig,
    &analytic::IntegralTheorem,
    &analytic::FValue,
    &analytic::StirlingApprox,
    &analytic::RadiusRoot,
];

/// Checks answering to a selector: a check name, a group token, or "all".
pub fn select(selector: &str) -> Vec<&'static dyn Check> {
    REGISTRY
        .iter()
        .copied()
        .filter(|c| selector == "all" || c.name() == selector || c.group() == selector)
        .collect()
}

/// Run a selection, optionally fanning checks out over `jobs` workers
/// (0 = auto). Item order and the exit-code-relevant summary are
/// deterministic functions of the inputs either way.
pub fn run_checks(selector: &str, cfg: &RunConfig, jobs: usize) -> Option<VerificationReport> {
    let checks = select(selector);
    if checks.is_empty() {
        return None;
    }
    let nested: Vec<Vec<CheckItem>> = if jobs == 1 {
        checks.iter().map(|c| c.run(cfg)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| {
            use rayon::prelude::*;
            checks.par_iter().map(|c| c.run(cfg)).collect()
        })
    };
    Some(VerificationReport::new(
        selector,
        nested.into_iter().flatten().collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<&str> = REGISTRY.iter().map(|c| c.name()).collect();
        names.sort();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn selectors_resolve() {
        assert_eq!(select("all").len(), REGISTRY.len());
        assert!(!select("congruences").is_empty());
        assert!(!select("divisibility").is_empty());
        assert_eq!(select("no-such-check").len(), 0);
        // name-level selection picks exactly one
        assert_eq!(select("gf-identity").len(), 1);
    }

    #[test]
    fn parallel_and_serial_runs_agree() {
        let cfg = RunConfig {
            max_n: 20,
            prime_bound: 20,
            terms: 500,
            series_order: 8,
            ..RunConfig::default()
        };
        let serial = run_checks("congruences", &cfg, 1).unwrap();
        let parallel = run_checks("congruences", &cfg, 4).unwrap();
        assert_eq!(serial.items, parallel.items);
        assert_eq!(serial.summary, parallel.summary);
    }
}
