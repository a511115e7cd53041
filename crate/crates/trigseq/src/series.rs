//! Truncated formal power series with exact rational coefficients, and the
//! two parameterized expansions everything in this crate hangs off:
//!
//! ```text
//! sin(t·arcsin x) = Σ_{n≥0} (-1)^n t (Π_{i<n} (t²-(2i+1)²)) x^{2n+1}/(2n+1)!
//! cos(t·arcsin x) = Σ_{n≥0} (-1)^n   (Π_{i<n} (t²-(2i)²))   x^{2n}/(2n)!
//! ```
//!
//! Coefficients are generated by the exact term-ratio recurrence rather
//! than recomputing the product per term; the recurrence itself is a
//! tested invariant. There is deliberately no general composition or
//! reversion here — the crate only ever needs parameterized families plus
//! substitution-by-scaling, applied at coefficient-extraction time.

use num_traits::{One, Zero};

use crate::exact::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("coefficient {index} does not reduce to an integer: {value}")]
    NonInteger { index: usize, value: Rational },
}

/// Dense coefficient vector c_0..c_N in one formal variable, truncated at
/// order N. Arithmetic between two series truncates to the smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series has at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// Truncation order N; coefficients are exact for indices 0..=N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Pointwise equality up to the smaller of the two orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        (0..=n).all(|i| self.coeffs[i] == other.coeffs[i])
    }

    /// Index of the highest nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

/// Series of sin(t·arcsin x) up to x^order.
///
/// Odd-index coefficients only; generated from c_1 = t by
/// c_{2n+3} = c_{2n+1} · -(t² - (2n+1)²)/((2n+2)(2n+3)).
pub fn sin_t_arcsin_series(t: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    if order >= 1 {
        let t2 = t * t;
        let mut c = t.clone();
        let mut idx = 1usize;
        loop {
            coeffs[idx] = c.clone();
            if idx + 2 > order {
                break;
            }
            let n = ((idx - 1) / 2) as u64;
            let odd = Integer::from(2 * n + 1);
            let num = &t2 - Rational::from(&odd * &odd);
            let den = Rational::from(Integer::from((2 * n + 2) * (2 * n + 3)));
            c = -c * num / den;
            idx += 2;
        }
    }
    TruncatedSeries { coeffs }
}

/// Series of cos(t·arcsin x) up to x^order.
///
/// Even-index coefficients only; constant term 1, then
/// c_{2n+2} = c_{2n} · -(t² - (2n)²)/((2n+1)(2n+2)).
pub fn cos_t_arcsin_series(t: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let t2 = t * t;
    let mut c = Rational::one();
    let mut idx = 0usize;
    loop {
        coeffs[idx] = c.clone();
        if idx + 2 > order {
            break;
        }
        let n = (idx / 2) as u64;
        let even = Integer::from(2 * n);
        let num = &t2 - Rational::from(&even * &even);
        let den = Rational::from(Integer::from((2 * n + 1) * (2 * n + 2)));
        c = -c * num / den;
        idx += 2;
    }
    TruncatedSeries { coeffs }
}

/// S_0..S_N extracted from the sin expansion at t = 2/3:
/// S_n = (3/4)·108^n·[x^{2n+1}] sin((2/3)·arcsin x).
///
/// The fractional-power substitution that links this to the generating
/// function in x never enters the series type; the algebraic reduction is
/// applied here, at extraction time.
pub fn s_coefficients_via_series(n_max: usize) -> Vec<Rational> {
    let t = Rational::new(2.into(), 3.into());
    let series = sin_t_arcsin_series(&t, 2 * n_max + 1);
    let three_quarters = Rational::new(3.into(), 4.into());
    let mut scale = three_quarters;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(series.coeff(2 * n + 1) * &scale);
        scale *= Rational::from(Integer::from(108));
    }
    out
}

/// T_1..T_N extracted from the cos expansion at t = 2/3:
/// T_n = -(108^n·[x^{2n}] cos((2/3)·arcsin x))/24, each checked to be an
/// integer. (The n = 0 term of the expansion is the constant 1, consistent
/// with the 1 - 24·Σ T_n x^{2n} bookkeeping.)
pub fn t_coefficients_via_series(n_max: usize) -> Result<Vec<Integer>, SeriesError> {
    let t = Rational::new(2.into(), 3.into());
    let series = cos_t_arcsin_series(&t, 2 * n_max);
    let mut scale = Rational::new(Integer::from(-1), Integer::from(24));
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        scale *= Rational::from(Integer::from(108));
        let v = series.coeff(2 * n) * &scale;
        if !v.denom().is_one() {
            return Err(SeriesError::NonInteger { index: n, value: v });
        }
        out.push(v.to_integer());
    }
    Ok(out)
}

/// Whether the expansion of matching parity terminates exactly at degree t
/// for integer t: sin(t·arcsin x) for odd t, cos(t·arcsin x) for even t.
/// The coefficient product vanishes from the first factor equal to t², so
/// beyond degree t everything must be exactly zero, and the degree-t
/// coefficient itself must be nonzero.
pub fn chebyshev_termination(t: u64, order: usize) -> bool {
    assert!(t >= 1);
    assert!(order >= t as usize, "order must reach degree t");
    let tr = Rational::from(Integer::from(t));
    let series = if t % 2 == 1 {
        sin_t_arcsin_series(&tr, order)
    } else {
        cos_t_arcsin_series(&tr, order)
    };
    series.degree() == Some(t as usize)
}
