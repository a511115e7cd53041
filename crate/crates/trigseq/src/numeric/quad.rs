//! Adaptive Gauss–Legendre quadrature at context precision, used to check
//! the antiderivative of x·sin(a·arcsin(bx)) against its closed form
//!
//! ```text
//! F(x) = [sin((a-2)·arcsin(bx))/(a-2) - sin((a+2)·arcsin(bx))/(a+2)] / (4b²)
//! ```
//!
//! The integrand is smooth on the open domain; at |bx| = 1 the arcsin
//! derivative is singular, so panels never close exactly on that endpoint
//! (the upper limit is pulled back by a relative 2^{-p/2} and the skipped
//! sliver is charged to the error estimate).

use astro_float::BigFloat;

use super::{le, lt, EvalContext, EvalReport, NumericError};

/// Gauss–Legendre nodes and weights on [-1, 1], computed at the requested
/// precision by Newton refinement of the Legendre roots from f64 seeds.
struct GaussLegendre {
    nodes: Vec<BigFloat>,
    weights: Vec<BigFloat>,
}

impl GaussLegendre {
    fn new(order: usize, ctx: &EvalContext) -> Self {
        let p = ctx.precision();
        let rm = ctx.rounding();
        let n = order;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut seed = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            // polish the seed in f64 first, then let big-float Newton
            // double the correct bits from ~50 up to the precision
            for _ in 0..8 {
                let (pn, dpn) = legendre_pair_f64(n, seed);
                seed -= pn / dpn;
            }
            let mut x = BigFloat::from_f64(seed, p);
            let mut dpn = ctx.uint(1);
            let step_floor = ctx.pow2(-(p as i32) + 4);
            for _ in 0..64 {
                let (pn, pn_prev) = legendre_pair(n, &x, ctx);
                // P'_n = n·(x·P_n - P_{n-1})/(x² - 1)
                let x2m1 = x.mul(&x, p, rm).sub(&ctx.uint(1), p, rm);
                dpn = ctx
                    .uint(n as u64)
                    .mul(&x.mul(&pn, p, rm).sub(&pn_prev, p, rm), p, rm)
                    .div(&x2m1, p, rm);
                let step = pn.div(&dpn, p, rm);
                x = x.sub(&step, p, rm);
                if le(&step.abs(), &step_floor) {
                    break;
                }
            }
            // w = 2/((1-x²)·P'_n²)
            let one_m_x2 = ctx.uint(1).sub(&x.mul(&x, p, rm), p, rm);
            let w = ctx
                .uint(2)
                .div(&one_m_x2.mul(&dpn.mul(&dpn, p, rm), p, rm), p, rm);
            nodes.push(x);
            weights.push(w);
        }
        GaussLegendre { nodes, weights }
    }

    fn integrate<F: Fn(&BigFloat) -> BigFloat>(
        &self,
        f: &F,
        a: &BigFloat,
        b: &BigFloat,
        ctx: &EvalContext,
    ) -> BigFloat {
        let p = ctx.precision();
        let rm = ctx.rounding();
        let half = b.sub(a, p, rm).div(&ctx.uint(2), p, rm);
        let mid = a.add(b, p, rm).div(&ctx.uint(2), p, rm);
        let mut acc = ctx.uint(0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let t = mid.add(&half.mul(x, p, rm), p, rm);
            acc = acc.add(&w.mul(&f(&t), p, rm), p, rm);
        }
        acc.mul(&half, p, rm)
    }
}

fn legendre_pair_f64(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1f64;
    let mut p_cur = x;
    for k in 1..n {
        let next = ((2 * k + 1) as f64 * x * p_cur - k as f64 * p_prev) / (k + 1) as f64;
        p_prev = p_cur;
        p_cur = next;
    }
    let dp = n as f64 * (x * p_cur - p_prev) / (x * x - 1.0);
    (p_cur, dp)
}

fn legendre_pair(n: usize, x: &BigFloat, ctx: &EvalContext) -> (BigFloat, BigFloat) {
    let p = ctx.precision();
    let rm = ctx.rounding();
    let mut p_prev = ctx.uint(1);
    let mut p_cur = x.clone();
    for k in 1..n {
        // (k+1)·P_{k+1} = (2k+1)·x·P_k - k·P_{k-1}
        let next = ctx
            .uint(2 * k as u64 + 1)
            .mul(&x.mul(&p_cur, p, rm), p, rm)
            .sub(&ctx.uint(k as u64).mul(&p_prev, p, rm), p, rm)
            .div(&ctx.uint(k as u64 + 1), p, rm);
        p_prev = p_cur;
        p_cur = next;
    }
    (p_cur, p_prev)
}

struct Panel {
    lo: BigFloat,
    hi: BigFloat,
    value: BigFloat,
    err: BigFloat,
}

/// Globally adaptive bisection with a G7/G15 rule pair per panel: the
/// panel with the worst pair difference is split until the summed
/// estimate fits `target` (or the panel budget runs out, in which case
/// the achieved estimate is simply reported and the caller's tolerance
/// reflects it). Splitting worst-first is what keeps the refinement
/// anchored to the singular chain instead of fanning out over panels
/// whose error is already negligible.
fn adaptive_integrate<F: Fn(&BigFloat) -> BigFloat>(
    f: &F,
    a: &BigFloat,
    b: &BigFloat,
    target: &BigFloat,
    ctx: &EvalContext,
) -> (BigFloat, BigFloat) {
    let p = ctx.precision();
    let rm = ctx.rounding();
    let g7 = GaussLegendre::new(7, ctx);
    let g15 = GaussLegendre::new(15, ctx);

    let evaluate = |lo: &BigFloat, hi: &BigFloat| -> Panel {
        let coarse = g7.integrate(f, lo, hi, ctx);
        let fine = g15.integrate(f, lo, hi, ctx);
        let err = fine.sub(&coarse, p, rm).abs();
        Panel {
            lo: lo.clone(),
            hi: hi.clone(),
            value: fine,
            err,
        }
    };

    let min_len = b.sub(a, p, rm).abs().mul(&ctx.pow2(-(p as i32)), p, rm);
    let mut panels = vec![evaluate(a, b)];
    let mut total_err = panels[0].err.clone();
    while panels.len() < 4000 && lt(target, &total_err) {
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| {
                x.err
                    .partial_cmp(&y.err)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .map(|(i, _)| i)
            .expect("nonempty panel list");
        let Panel { lo, hi, err, .. } = panels.swap_remove(worst);
        if le(&hi.sub(&lo, p, rm), &min_len) {
            // cannot refine further at this precision
            panels.push(evaluate(&lo, &hi));
            break;
        }
        let mid = lo.add(&hi, p, rm).div(&ctx.uint(2), p, rm);
        let left = evaluate(&lo, &mid);
        let right = evaluate(&mid, &hi);
        total_err = total_err
            .sub(&err, p, rm)
            .add(&left.err, p, rm)
            .add(&right.err, p, rm);
        panels.push(left);
        panels.push(right);
    }

    let mut sum = ctx.uint(0);
    let mut err = ctx.uint(0);
    for panel in &panels {
        sum = sum.add(&panel.value, p, rm);
        err = err.add(&panel.err, p, rm);
    }
    (sum, err)
}

/// ∫₀^{x₁} x·sin(a·arcsin(bx)) dx against F(x₁) − F(0), for a ∉ {-2, 2}
/// and |b·x₁| ≤ 1. Pass iff the two sides agree within the quadrature
/// error estimate (plus the skipped-sliver charge and rounding).
pub fn verify_integral_theorem(
    a: &BigFloat,
    b: &BigFloat,
    x1: &BigFloat,
    ctx: &EvalContext,
) -> Result<EvalReport, NumericError> {
    let p = ctx.precision();
    let rm = ctx.rounding();

    let two = ctx.uint(2);
    if a == &two || a == &two.neg() {
        return Err(NumericError::SingularParameter {
            value: format!("{a}"),
        });
    }
    let bx1 = b.mul(x1, p, rm);
    let slack = ctx.pow2(4 - p as i32);
    if lt(&ctx.uint(1).add(&slack, p, rm), &bx1.abs()) {
        return Err(NumericError::Domain {
            domain: "|b*x1| <= 1",
            value: format!("{bx1}"),
        });
    }

    let anti = |y: &BigFloat| -> BigFloat {
        let arg = super::clamp_unit(&b.mul(y, p, rm), ctx);
        let asn = ctx.asin(&arg);
        let am2 = a.sub(&two, p, rm);
        let ap2 = a.add(&two, p, rm);
        let first = ctx.sin(&am2.mul(&asn, p, rm)).div(&am2, p, rm);
        let second = ctx.sin(&ap2.mul(&asn, p, rm)).div(&ap2, p, rm);
        first
            .sub(&second, p, rm)
            .div(&ctx.uint(4).mul(&b.mul(b, p, rm), p, rm), p, rm)
    };
    let rhs = anti(x1).sub(&anti(&ctx.uint(0)), p, rm);

    if x1.is_zero() {
        let tolerance = ctx.allowance(&[&rhs]);
        return Ok(EvalReport::new(
            "integral-theorem",
            ctx.uint(0),
            rhs,
            tolerance,
            0,
            ctx,
        ));
    }

    // Pull the upper limit off a singular endpoint by a relative 2^{-p/2}.
    let near_singular = {
        let gap = ctx.uint(1).sub(&bx1.abs(), p, rm);
        le(&gap, &ctx.pow2(-(p as i32) / 2))
    };
    let x1_adj = if near_singular {
        let shrink = ctx.uint(1).sub(&ctx.pow2(-(p as i32) / 2), p, rm);
        x1.mul(&shrink, p, rm)
    } else {
        x1.clone()
    };

    let integrand = |y: &BigFloat| -> BigFloat {
        let arg = super::clamp_unit(&b.mul(y, p, rm), ctx);
        y.mul(&ctx.sin(&a.mul(&ctx.asin(&arg), p, rm)), p, rm)
    };

    let target = ctx
        .pow2(-(p as i32) / 2 - 8)
        .mul(&ctx.uint(1).add(&rhs.abs(), p, rm), p, rm);
    let (lo, hi, negate) = if x1_adj.is_negative() {
        (x1_adj.clone(), ctx.uint(0), true)
    } else {
        (ctx.uint(0), x1_adj.clone(), false)
    };
    let (mut quad, err_est) = adaptive_integrate(&integrand, &lo, &hi, &target, ctx);
    if negate {
        quad = quad.neg();
    }

    // bound on the skipped [x1_adj, x1] sliver: |f| ≤ |x1| there
    let sliver = x1
        .sub(&x1_adj, p, rm)
        .abs()
        .mul(&x1.abs(), p, rm)
        .mul(&two, p, rm);

    let tolerance = err_est
        .add(&sliver, p, rm)
        .add(&ctx.allowance(&[&quad, &rhs]), p, rm);
    Ok(EvalReport::new(
        "integral-theorem",
        quad,
        rhs,
        tolerance,
        0,
        ctx,
    ))
}
