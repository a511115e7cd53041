//! High-precision analytic identity checks.

use super::{Check, RunConfig};
use crate::exact::Rational;
use crate::numeric::{self, EvalContext, TailPolicy};
use crate::report::{item_from_eval, CheckItem, Status};

fn ctx_for(cfg: &RunConfig, terms: u64) -> EvalContext {
    EvalContext::new(cfg.prec_bits, terms)
}

fn rational_label(x: &Rational) -> String {
    crate::bfile::render_rational(x)
}

/// Σ S_n xⁿ against its trigonometric closed form on the open interior.
/// Default sweep: x ∈ {1/200, 1/150, 1/109}.
pub struct GfIdentity;

impl Check for GfIdentity {
    fn name(&self) -> &'static str {
        "gf-identity"
    }

    fn group(&self) -> &'static str {
        "gf"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms);
        let points: Vec<Rational> = match &cfg.x {
            Some(x) => vec![x.clone()],
            None => [200u64, 150, 109]
                .iter()
                .map(|d| Rational::new(1.into(), (*d).into()))
                .collect(),
        };
        points
            .iter()
            .map(|x| {
                let xf = ctx.from_rational(x);
                match numeric::verify_gf_identity(&xf, &ctx) {
                    Ok(r) => item_from_eval(&r, cfg.prec_bits, &format!("x={}", rational_label(x))),
                    Err(e) => CheckItem::new(
                        "gf-identity",
                        format!("x={}", rational_label(x)),
                        Status::Error,
                        e.to_string(),
                    ),
                }
            })
            .collect()
    }
}

/// Σ S_n/((2n+3)·108ⁿ) = 27√3/256.
pub struct WeightedSum;

impl Check for WeightedSum {
    fn name(&self) -> &'static str {
        "weighted-sum"
    }

    fn group(&self) -> &'static str {
        "sum13"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms).with_tail_policy(TailPolicy::TermCount);
        let r = numeric::verify_sum_over_2n3(&ctx);
        vec![item_from_eval(
            &r,
            cfg.prec_bits,
            &format!("terms={}", cfg.terms),
        )]
    }
}

/// Σ S_n/108ⁿ = 3√3/8 at the boundary of convergence.
pub struct BoundarySum;

impl Check for BoundarySum {
    fn name(&self) -> &'static str {
        "boundary-sum"
    }

    fn group(&self) -> &'static str {
        "sum14"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms).with_tail_policy(TailPolicy::TermCount);
        let r = numeric::verify_sum_at_boundary(&ctx);
        vec![item_from_eval(
            &r,
            cfg.prec_bits,
            &format!("terms={}", cfg.terms),
        )]
    }
}

/// Σ S_k x^{2k+1} + 1/24 − Σ T_k x^{2k} = cos((2/3)·arccos(6√3·x))/12.
/// Default sweep: 11 rationals with |x| ≤ 0.9/(6√3), including negatives
/// and zero, plus the two boundary points at envelope tolerance.
pub struct ConjectureIdentity;

impl ConjectureIdentity {
    pub fn default_points() -> Vec<Rational> {
        let mut pts = vec![Rational::new(0.into(), 1.into())];
        for (n, d) in [(1i64, 20i64), (1, 15), (1, 12), (2, 25), (43, 500)] {
            pts.push(Rational::new(n.into(), d.into()));
            pts.push(Rational::new((-n).into(), d.into()));
        }
        pts
    }
}

impl Check for ConjectureIdentity {
    fn name(&self) -> &'static str {
        "conjecture-identity"
    }

    fn group(&self) -> &'static str {
        "conjecture"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms);
        let p = cfg.prec_bits;
        let rm = ctx.rounding();
        let mut items = Vec::new();

        let boundary_points: Vec<(i8, &str)> = match cfg.conjecture_boundary {
            Some(s) if s >= 0 => vec![(1, "+1/(6*sqrt3)")],
            Some(_) => vec![(-1, "-1/(6*sqrt3)")],
            None => {
                if cfg.x.is_none() {
                    vec![(1, "+1/(6*sqrt3)"), (-1, "-1/(6*sqrt3)")]
                } else {
                    vec![]
                }
            }
        };

        if cfg.conjecture_boundary.is_none() {
            let points = match &cfg.x {
                Some(x) => vec![x.clone()],
                None => Self::default_points(),
            };
            for x in &points {
                let xf = ctx.from_rational(x);
                match numeric::verify_conjecture_identity(&xf, &ctx) {
                    Ok(r) => items.push(item_from_eval(&r, p, &format!("x={}", rational_label(x)))),
                    Err(e) => items.push(CheckItem::new(
                        "conjecture-identity",
                        format!("x={}", rational_label(x)),
                        Status::Error,
                        e.to_string(),
                    )),
                }
            }
        }

        for (sign, label) in boundary_points {
            let mut xf = ctx
                .uint(1)
                .div(&ctx.uint(6).mul(&ctx.sqrt_u(3), p, rm), p, rm);
            if sign < 0 {
                xf = xf.neg();
            }
            match numeric::verify_conjecture_identity(&xf, &ctx) {
                Ok(r) => items.push(item_from_eval(&r, p, &format!("x={label}"))),
                Err(e) => items.push(CheckItem::new(
                    "conjecture-identity",
                    format!("x={label}"),
                    Status::Error,
                    e.to_string(),
                )),
            }
        }
        items
    }
}

/// sin(πt/2)sin(t·arcsin x) + cos(πt/2)cos(t·arcsin x) = cos(t·arccos x),
/// on a 10×10 grid over [-3,3]×[-1,1] (or a single --t/--x point).
pub struct PropTrig;

impl Check for PropTrig {
    fn name(&self) -> &'static str {
        "prop-trig"
    }

    fn group(&self) -> &'static str {
        "prop"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms);
        if cfg.t.is_some() || cfg.x.is_some() {
            let t = cfg
                .t
                .clone()
                .unwrap_or_else(|| Rational::new(2.into(), 3.into()));
            let x = cfg
                .x
                .clone()
                .unwrap_or_else(|| Rational::new(1.into(), 2.into()));
            let item = match numeric::verify_prop_trig(
                &ctx.from_rational(&t),
                &ctx.from_rational(&x),
                &ctx,
            ) {
                Ok(r) => item_from_eval(
                    &r,
                    cfg.prec_bits,
                    &format!("t={};x={}", rational_label(&t), rational_label(&x)),
                ),
                Err(e) => CheckItem::new(
                    "prop-trig",
                    format!("t={};x={}", rational_label(&t), rational_label(&x)),
                    Status::Error,
                    e.to_string(),
                ),
            };
            return vec![item];
        }
        // 10×10 grid: t_i = (6i-27)/9, x_j = (2j-9)/9 for i,j in 0..10
        let mut items = Vec::with_capacity(10);
        for i in 0..10i64 {
            let t = Rational::new((6 * i - 27).into(), 9.into());
            let tf = ctx.from_rational(&t);
            let mut row_pass = true;
            let mut worst: Option<astro_float::BigFloat> = None;
            for j in 0..10i64 {
                let x = Rational::new((2 * j - 9).into(), 9.into());
                let r = numeric::verify_prop_trig(&tf, &ctx.from_rational(&x), &ctx)
                    .expect("grid stays inside [-1,1]");
                row_pass &= r.pass;
                let bigger = match &worst {
                    None => true,
                    Some(w) => numeric::le(w, &r.residual),
                };
                if bigger {
                    worst = Some(r.residual);
                }
            }
            items.push(CheckItem::new(
                "prop-trig",
                format!("row={i};t={}", rational_label(&t)),
                if row_pass { Status::Pass } else { Status::Fail },
                format!(
                    "max residual over 10 x-samples {}@{}b",
                    worst.expect("nonempty row"),
                    cfg.prec_bits
                ),
            ));
        }
        items
    }
}

/// ∫₀^{x1} x·sin(a·arcsin(bx)) dx against the closed-form antiderivative.
/// Defaults run three parameter sets: the endpoint case
/// (a=2/3, b=6√3, x1=1/(6√3)), the degenerate x1=0, and a smooth interior
/// case (a=1/2, b=1, x1=1/2).
pub struct IntegralTheorem;

impl Check for IntegralTheorem {
    fn name(&self) -> &'static str {
        "integral-theorem"
    }

    fn group(&self) -> &'static str {
        "integral"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms);
        let p = cfg.prec_bits;
        let rm = ctx.rounding();

        let mut cases: Vec<(
            String,
            astro_float::BigFloat,
            astro_float::BigFloat,
            astro_float::BigFloat,
        )> = Vec::new();
        if let Some((a, b, x1)) = &cfg.integral_params {
            cases.push((
                format!(
                    "a={};b={};x1={}",
                    rational_label(a),
                    rational_label(b),
                    rational_label(x1)
                ),
                ctx.from_rational(a),
                ctx.from_rational(b),
                ctx.from_rational(x1),
            ));
        } else {
            let six_sqrt3 = ctx.uint(6).mul(&ctx.sqrt_u(3), p, rm);
            cases.push((
                "a=2/3;b=6sqrt3;x1=1/(6sqrt3)".into(),
                ctx.uint(2).div(&ctx.uint(3), p, rm),
                six_sqrt3.clone(),
                ctx.uint(1).div(&six_sqrt3, p, rm),
            ));
            cases.push(("a=1;b=1;x1=0".into(), ctx.uint(1), ctx.uint(1), ctx.uint(0)));
            cases.push((
                "a=1/2;b=1;x1=1/2".into(),
                ctx.uint(1).div(&ctx.uint(2), p, rm),
                ctx.uint(1),
                ctx.uint(1).div(&ctx.uint(2), p, rm),
            ));
        }

        cases
            .into_iter()
            .map(
                |(label, a, b, x1)| match numeric::verify_integral_theorem(&a, &b, &x1, &ctx) {
                    Ok(r) => item_from_eval(&r, p, &label),
                    Err(e) => {
                        CheckItem::new("integral-theorem", label, Status::Error, e.to_string())
                    }
                },
            )
            .collect()
    }
}

/// f(1/(6√3)) = 1/6144 by closed form, partial sum and exact rationals.
pub struct FValue;

impl Check for FValue {
    fn name(&self) -> &'static str {
        "f-value"
    }

    fn group(&self) -> &'static str {
        "fvalue"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms).with_tail_policy(TailPolicy::TermCount);
        numeric::verify_f_value(&ctx)
            .iter()
            .map(|r| item_from_eval(r, cfg.prec_bits, &format!("terms={}", cfg.terms)))
            .collect()
    }
}

/// Relative error of the factorial approximation
/// Γ(α) ≈ ((α-1)/e)^{α-1}·√(2π(α-1)): below 1% from α = 11 on and
/// monotonically decreasing over the integer range [12, 50].
pub struct StirlingApprox;

impl Check for StirlingApprox {
    fn name(&self) -> &'static str {
        "stirling-relerr"
    }

    fn group(&self) -> &'static str {
        "radius"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms);
        let mut items = Vec::new();

        let e11 = numeric::stirling_relative_error(11, &ctx);
        let ok11 = approx_f64(&e11) < 0.01;
        items.push(CheckItem::new(
            "stirling-relerr",
            "alpha=11",
            if ok11 { Status::Pass } else { Status::Fail },
            format!("relative error {e11}@{}b (< 1% required)", cfg.prec_bits),
        ));

        let mut prev = numeric::stirling_relative_error(12, &ctx);
        let mut monotone = true;
        for alpha in 13..=50u64 {
            let cur = numeric::stirling_relative_error(alpha, &ctx);
            if !numeric::le(&cur, &prev) {
                monotone = false;
            }
            prev = cur;
        }
        items.push(CheckItem::new(
            "stirling-relerr",
            "alpha=12..50",
            if monotone { Status::Pass } else { Status::Fail },
            "relative error decreases monotonically over integer alpha",
        ));
        items
    }
}

/// S_n^{1/n} climbs toward (and stays below) 108.
pub struct RadiusRoot;

impl Check for RadiusRoot {
    fn name(&self) -> &'static str {
        "radius-root"
    }

    fn group(&self) -> &'static str {
        "radius"
    }

    fn run(&self, cfg: &RunConfig) -> Vec<CheckItem> {
        let ctx = ctx_for(cfg, cfg.terms);
        let samples = [100u64, 200, 400, 800, 1600];
        let mut items = Vec::new();
        let mut prev: Option<astro_float::BigFloat> = None;
        let mut increasing = true;
        for n in samples {
            let est = numeric::radius_estimate(n, &ctx);
            let below = approx_f64(&est) < 108.0;
            if let Some(pv) = &prev {
                if !numeric::le(pv, &est) {
                    increasing = false;
                }
            }
            items.push(CheckItem::new(
                "radius-root",
                format!("n={n}"),
                if below { Status::Pass } else { Status::Fail },
                format!("S_n^(1/n) = {est}@{}b", cfg.prec_bits),
            ));
            prev = Some(est);
        }
        items.push(CheckItem::new(
            "radius-root",
            "n=100..1600",
            if increasing {
                Status::Pass
            } else {
                Status::Fail
            },
            "estimates strictly increase toward 108",
        ));
        items
    }
}

fn approx_f64(v: &astro_float::BigFloat) -> f64 {
    format!("{v}").parse::<f64>().unwrap_or(f64::NAN)
}
