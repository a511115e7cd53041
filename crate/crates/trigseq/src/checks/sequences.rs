//! Exact sequence-level checks: divisibility, integrality, agreement of
//! the alternative closed forms, and the published value list.

use num_traits::{One, Signed};

use super::{Check, RunConfig};
use crate::bfile::render_rational;
use crate::exact::{self, Integer};
use crate::report::{CheckItem, Status};

pub struct Divisibility;

impl Check for Divisibility {
    fn name(&self) -> &'static str {
        "divisibility"
    }

    fn group(&self) -> &'static str {
        "divisibility"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        (1..=cfg.max_n)
            .map(|n| {
                let ok = exact::check_divisibility(n);
                CheckItem::new(
                    "divisibility",
                    format!("n={n}"),
                    if ok { Status::Pass } else { Status::Fail },
                    "2(2n+1)C(2n;n) | C(6n;3n)C(3n;n)",
                )
            })
            .collect()
    }
}

pub struct SIntegrality;

impl Check for SIntegrality {
    fn name(&self) -> &'static str {
        "s-integrality"
    }

    fn group(&self) -> &'static str {
        "integrality"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        (1..=cfg.max_n)
            .map(|n| {
                let v = exact::s_binomial_def(n);
                let ok = v.denom().is_one();
                CheckItem::new(
                    "s-integrality",
                    format!("n={n}"),
                    if ok { Status::Pass } else { Status::Fail },
                    format!("S_n={}", render_rational(&v)),
                )
            })
            .collect()
    }
}

/// The product form rebuilds (2n+1)! from scratch per index, so this
/// agreement sweep is capped at 200 independently of --max-n.
pub struct SProductAgree;

impl Check for SProductAgree {
    fn name(&self) -> &'static str {
        "s-product-agree"
    }

    fn group(&self) -> &'static str {
        "values"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        (0..=cfg.max_n.min(200))
            .map(|n| {
                let a = exact::s_binomial_def(n);
                let b = exact::s_product_formula(n);
                let ok = a == b;
                CheckItem::new(
                    "s-product-agree",
                    format!("n={n}"),
                    if ok { Status::Pass } else { Status::Fail },
                    format!(
                        "binomial form {} vs product form {}",
                        render_rational(&a),
                        render_rational(&b)
                    ),
                )
            })
            .collect()
    }
}

/// Compare the defining formula against the published value list for
/// n = 1..8. The n = 3 row is a known transcription error (14568 printed,
/// 14586 computed) and is surfaced as a documented mismatch rather than
/// silently matched or skipped.
pub struct SPublishedList;

impl Check for SPublishedList {
    fn name(&self) -> &'static str {
        "s-published-list"
    }

    fn group(&self) -> &'static str {
        "values"
    }

    fn run(&self, _cfg: &RunConfig) -> Vec<CheckItem> {
        exact::PUBLISHED_S_LIST
            .iter()
            .map(|(n, printed)| {
                let computed = exact::s_binomial_def(*n).to_integer();
                let printed: Integer = printed.parse().expect("static literal");
                if computed == printed {
                    CheckItem::pass(
                        "s-published-list",
                        format!("n={n}"),
                        format!("value={computed}"),
                    )
                } else {
                    CheckItem::new(
                        "s-published-list",
                        format!("n={n}"),
                        Status::Mismatch,
                        format!(
                            "published list gives {printed}; defining formula gives \
                             {computed}; the mod-27 congruence check supports {computed}"
                        ),
                    )
                }
            })
            .collect()
    }
}

pub struct TIdentityAgree;

impl Check for TIdentityAgree {
    fn name(&self) -> &'static str {
        "t-identity-agree"
    }

    fn group(&self) -> &'static str {
        "integrality"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        (1..=cfg.max_n)
            .map(|n| {
                let item = match exact::t_closed_form(n) {
                    Err(e) => CheckItem::new(
                        "t-identity-agree",
                        format!("n={n}"),
                        Status::Error,
                        e.to_string(),
                    ),
                    Ok(closed) => {
                        let direct = exact::t_integer_identity(n);
                        let ok = closed == direct && closed.is_positive();
                        CheckItem::new(
                            "t-identity-agree",
                            format!("n={n}"),
                            if ok { Status::Pass } else { Status::Fail },
                            format!("closed form {closed} vs integral form {direct}"),
                        )
                    }
                };
                item
            })
            .collect()
    }
}
