//! Coefficient-level identities of the sin/cos(t·arcsin x) expansions.

use num_traits::{One, Signed, Zero};

use super::{Check, RunConfig};
use crate::bfile::render_rational;
use crate::exact::{self, Integer, Rational};
use crate::numeric::{self, EvalContext};
use crate::report::{CheckItem, Status};
use crate::series;

fn pass_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// S_n from the series route equals the binomial definition.
pub struct SSeriesAgree;

impl Check for SSeriesAgree {
    fn name(&self) -> &'static str {
        "s-series-agree"
    }

    fn group(&self) -> &'static str {
        "series"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let via_series = series::s_coefficients_via_series(cfg.series_order);
        via_series
            .iter()
            .enumerate()
            .map(|(n, v)| {
                let direct = exact::s_binomial_def(n as u64);
                CheckItem::new(
                    "s-series-agree",
                    format!("n={n}"),
                    pass_fail(v == &direct),
                    format!(
                        "series {} vs binomial {}",
                        render_rational(v),
                        render_rational(&direct)
                    ),
                )
            })
            .collect()
    }
}

/// T_n from the series route equals the closed form and is positive.
pub struct TSeriesAgree;

impl Check for TSeriesAgree {
    fn name(&self) -> &'static str {
        "t-series-agree"
    }

    fn group(&self) -> &'static str {
        "series"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        match series::t_coefficients_via_series(cfg.series_order) {
            Err(e) => vec![CheckItem::new(
                "t-series-agree",
                format!("order={}", cfg.series_order),
                Status::Error,
                e.to_string(),
            )],
            Ok(ts) => ts
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let n = (i + 1) as u64;
                    let direct = exact::t_closed_form(n).expect("T integrality");
                    CheckItem::new(
                        "t-series-agree",
                        format!("n={n}"),
                        pass_fail(v == &direct && v.is_positive()),
                        format!("series {v} vs closed form {direct}"),
                    )
                })
                .collect(),
        }
    }
}

/// sin carries only odd powers, cos only even, for several t.
pub struct SeriesParity;

impl Check for SeriesParity {
    fn name(&self) -> &'static str {
        "series-parity"
    }

    fn group(&self) -> &'static str {
        "series"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let order = cfg.series_order.max(4);
        ["2/3", "1/2", "-5/7", "3"]
            .iter()
            .map(|ts| {
                let t: Rational = ts.parse().expect("static literal");
                let s = series::sin_t_arcsin_series(&t, order);
                let c = series::cos_t_arcsin_series(&t, order);
                let ok = (0..=order).all(|i| {
                    if i % 2 == 0 {
                        s.coeff(i).is_zero()
                    } else {
                        c.coeff(i).is_zero()
                    }
                });
                CheckItem::new(
                    "series-parity",
                    format!("t={ts};order={order}"),
                    pass_fail(ok),
                    "sin odd-only; cos even-only",
                )
            })
            .collect()
    }
}

/// Consecutive sin coefficients obey
/// a_{n+1}/a_n = -(t² - (2n+1)²)/((2n+2)(2n+3)) exactly.
pub struct SeriesRecurrence;

impl Check for SeriesRecurrence {
    fn name(&self) -> &'static str {
        "series-recurrence"
    }

    fn group(&self) -> &'static str {
        "series"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let order = (2 * cfg.series_order + 1).max(9);
        ["2/3", "4/7"]
            .iter()
            .map(|ts| {
                let t: Rational = ts.parse().expect("static literal");
                let s = series::sin_t_arcsin_series(&t, order);
                let t2 = &t * &t;
                let mut ok = true;
                let mut n = 0u64;
                while (2 * n + 3) as usize <= order {
                    let idx = (2 * n + 1) as usize;
                    let odd = Integer::from(2 * n + 1);
                    let expect = -(&t2 - Rational::from(&odd * &odd))
                        / Rational::from(Integer::from((2 * n + 2) * (2 * n + 3)));
                    if s.coeff(idx + 2) != &(s.coeff(idx) * expect) {
                        ok = false;
                        break;
                    }
                    n += 1;
                }
                CheckItem::new(
                    "series-recurrence",
                    format!("t={ts};order={order}"),
                    pass_fail(ok),
                    "a(n+1)/a(n) = -(t^2-(2n+1)^2)/((2n+2)(2n+3))",
                )
            })
            .collect()
    }
}

/// The alternative display of the cos coefficients at t = 2/3 — prefactor
/// 4/9^n with product (6i+2)(6i-2) — agrees with the direct expansion.
pub struct CosPrefactorForm;

impl Check for CosPrefactorForm {
    fn name(&self) -> &'static str {
        "cos-prefactor-form"
    }

    fn group(&self) -> &'static str {
        "series"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let n_max = cfg.series_order.max(8);
        let t = Rational::new(2.into(), 3.into());
        let expansion = series::cos_t_arcsin_series(&t, 2 * n_max);
        let mut items = Vec::with_capacity(n_max);
        let mut prod = Rational::one();
        let mut fact = Rational::from(Integer::from(2)); // (2n)! at n = 1
        for n in 1..=n_max {
            if n >= 2 {
                let i = (n - 1) as u64;
                prod *= Rational::from(Integer::from((6 * i + 2) * (6 * i - 2)));
                let k = 2 * n as u64;
                fact *= Rational::from(Integer::from((k - 1) * k));
            }
            let display = -Rational::new(4.into(), Integer::from(9).pow(n as u32)) * &prod / &fact;
            let ok = expansion.coeff(2 * n) == &display;
            items.push(CheckItem::new(
                "cos-prefactor-form",
                format!("n={n}"),
                pass_fail(ok),
                format!("coefficient {}", render_rational(&display)),
            ));
        }
        items
    }
}

/// For integer t of matching parity the expansion terminates at degree t
/// and the terminated polynomial reproduces the multiple-angle value at
/// sampled angles.
pub struct ChebyshevTermination;

impl Check for ChebyshevTermination {
    fn name(&self) -> &'static str {
        "chebyshev"
    }

    fn group(&self) -> &'static str {
        "series"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = EvalContext::new(cfg.prec_bits, cfg.terms.max(1));
        let mut items = Vec::new();
        for t in 1..=15u64 {
            let order = (t as usize + 10).max(16);
            let terminated = series::chebyshev_termination(t, order);
            let kind = if t % 2 == 1 { "sin" } else { "cos" };
            let handoff = multiple_angle_handoff(t, order, &ctx);
            items.push(CheckItem::new(
                format!("chebyshev-{kind}"),
                format!("t={t}"),
                pass_fail(terminated && handoff),
                format!("terminates at degree {t}; 20-angle multiple-angle agreement"),
            ));
        }
        items
    }
}

/// Evaluate the terminated polynomial at x = sin θ (odd t) or the cos
/// expansion at x = sin θ against cos(tθ) (even t) for 20 angles.
fn multiple_angle_handoff(t: u64, order: usize, ctx: &EvalContext) -> bool {
    let p = ctx.precision();
    let rm = ctx.rounding();
    let tr = Rational::from(Integer::from(t));
    let coeffs = if t % 2 == 1 {
        series::sin_t_arcsin_series(&tr, order)
    } else {
        series::cos_t_arcsin_series(&tr, order)
    };
    let tol = ctx.pow2(32 - p as i32).mul(&ctx.uint(1 + t), p, rm);
    let pi = ctx.pi();
    for j in 1..=20u64 {
        // θ in (0, π/2]
        let theta = pi.mul(&ctx.uint(j), p, rm).div(&ctx.uint(40), p, rm);
        let x = ctx.sin(&theta);
        let poly = numeric::eval_poly(coeffs.coefficients(), &x, ctx);
        let t_theta = theta.mul(&ctx.uint(t), p, rm);
        let reference = if t % 2 == 1 {
            ctx.sin(&t_theta)
        } else {
            ctx.cos(&t_theta)
        };
        let resid = poly.sub(&reference, p, rm).abs();
        if !numeric::le(&resid, &tol) {
            return false;
        }
    }
    true
}
