//! Congruence sweeps over primes and indices.

use super::{Check, RunConfig};
use crate::exact::Integer;
use crate::modular::{self, CongruenceReport};
use crate::report::{CheckItem, Status};

fn item_from_congruence(r: &CongruenceReport, params: String) -> CheckItem {
    CheckItem::new(
        r.claim,
        params,
        if r.pass { Status::Pass } else { Status::Fail },
        format!("lhs {} vs rhs {}", r.lhs, r.rhs),
    )
}

/// Exhaustive Fermat sweep: a^{p-1} ≡ 1 (mod p) for every a in [1, p)
/// over the small fixed prime set.
pub struct Fermat;

impl Check for Fermat {
    fn name(&self) -> &'static str {
        "fermat"
    }

    fn group(&self) -> &'static str {
        "congruences"
    }

    fn run(&self, _cfg: &RunConfig) -> Vec<CheckItem> {
        [3u64, 5, 7, 11, 13]
            .iter()
            .map(|&p| {
                let all = (1..p).all(|a| {
                    modular::verify_fermat(&Integer::from(a), p)
                        .map(|r| r.pass)
                        .unwrap_or(false)
                });
                CheckItem::new(
                    "fermat",
                    format!("p={p}"),
                    if all { Status::Pass } else { Status::Fail },
                    format!("a^(p-1) = 1 mod p for all a in [1;{p})"),
                )
            })
            .collect()
    }
}

/// S_p ≡ 15 - 30p + 60p² (mod p³) for odd primes below the bound.
pub struct SpCongruence;

impl Check for SpCongruence {
    fn name(&self) -> &'static str {
        "sp-congruence"
    }

    fn group(&self) -> &'static str {
        "congruences"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        modular::primes_below(cfg.prime_bound)
            .into_iter()
            .filter(|&p| p != 2)
            .map(|p| {
                let r = modular::verify_sp_congruence(p).expect("odd prime");
                item_from_congruence(&r, format!("p={p}"))
            })
            .collect()
    }
}

/// T_p ≡ -2 (mod p) for every prime below the bound, p = 2 included.
pub struct TpCongruence;

impl Check for TpCongruence {
    fn name(&self) -> &'static str {
        "tp-congruence"
    }

    fn group(&self) -> &'static str {
        "congruences"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        modular::primes_below(cfg.prime_bound)
            .into_iter()
            .map(|p| {
                let r = modular::verify_tp_congruence(p);
                item_from_congruence(&r, format!("p={p}"))
            })
            .collect()
    }
}

/// 3·S_n ≡ 0 (mod 2n+3) for n in [1, max_n].
pub struct Guo;

impl Check for Guo {
    fn name(&self) -> &'static str {
        "guo"
    }

    fn group(&self) -> &'static str {
        "guo"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        modular::verify_guo_range(cfg.max_n)
            .iter()
            .map(|r| item_from_congruence(r, format!("n={}", r.parameter)))
            .collect()
    }
}

/// (1/p)·C(3p-2, p-1) ≡ -2 (mod p) for primes below the bound.
pub struct Lemma32Quotient;

impl Check for Lemma32Quotient {
    fn name(&self) -> &'static str {
        "lemma32-quotient"
    }

    fn group(&self) -> &'static str {
        "lemma32"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        modular::primes_below(cfg.prime_bound)
            .into_iter()
            .map(|p| match modular::verify_lemma32(p) {
                Ok(r) => item_from_congruence(&r, format!("p={p}")),
                Err(e) => CheckItem::new(
                    "lemma32-quotient",
                    format!("p={p}"),
                    Status::Error,
                    e.to_string(),
                ),
            })
            .collect()
    }
}

/// Exact product identity behind the quotient congruence, for odd primes.
/// The factors are exact rationals whose sizes grow quickly, so the sweep
/// is capped at 100.
pub struct Lemma32Product;

impl Check for Lemma32Product {
    fn name(&self) -> &'static str {
        "lemma32-product"
    }

    fn group(&self) -> &'static str {
        "lemma32"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        modular::primes_below(cfg.prime_bound.min(100))
            .into_iter()
            .filter(|&p| p != 2)
            .map(|p| {
                let ok = modular::lemma32_product_identity(p);
                CheckItem::new(
                    "lemma32-product",
                    format!("p={p}"),
                    if ok { Status::Pass } else { Status::Fail },
                    "C(3p-2;p-1)/p = 2 prod_j (3p/(j+1) - 1)",
                )
            })
            .collect()
    }
}
