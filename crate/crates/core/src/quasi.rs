//! Quasi-Riordan arrays `[g, f]`: the matrix whose columns have generating
//! functions `g, f, t f, t^2 f, ...`.
//!
//! Every product and inverse below is written so that the quotients by `t`
//! pair up and cancel, so results keep the minimum precision of the inputs.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{BlockMatrix, Triangle};
use crate::riordan::RiordanPair;
use crate::series::{Order, Rational, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiRiordan {
    g: Series,
    f: Series,
}

/// `t * (a/t) * (b/t)` for `a`, `b` with zero constant terms, i.e. `a b / t`.
fn product_over_t(a: &Series, b: &Series) -> Result<Series> {
    Ok((&a.div_t()? * &b.div_t()?).mul_t_pow(1))
}

impl QuasiRiordan {
    pub fn new(g: Series, f: Series) -> Result<Self> {
        if !g.coeff(0).is_one() {
            return Err(Error::InvalidPair(format!(
                "g(0) must be 1, got {}",
                g.coeff(0)
            )));
        }
        if f.order() != Order::Finite(1) {
            return Err(Error::InvalidPair(format!(
                "f must have order 1, got order {}",
                f.order()
            )));
        }
        Ok(Self { g, f })
    }

    /// `[1, t]`.
    pub fn identity(prec: usize) -> Self {
        Self {
            g: Series::one(prec),
            f: Series::t(prec),
        }
    }

    /// `[g, f]` built from the same series as the Riordan array `(g, f)`.
    pub fn from_riordan(ra: &RiordanPair) -> Self {
        Self {
            g: ra.g().clone(),
            f: ra.f().clone(),
        }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn prec(&self) -> usize {
        self.g.prec().min(self.f.prec())
    }

    /// Leading `n x n` block: column 0 holds `g`, column `j >= 1` holds `t^{j-1} f`.
    pub fn matrix(&self, n: usize) -> Result<BlockMatrix> {
        if n > self.prec() + 1 {
            return Err(Error::InsufficientPrecision {
                requested: n.saturating_sub(1),
                available: self.prec(),
            });
        }
        Ok(Triangle::from_fn(n, |r, c| {
            if c == 0 {
                self.g.coeff(r).clone()
            } else {
                self.f.coeff(r + 1 - c).clone()
            }
        }))
    }

    /// `[g, f] u = g u(0) + (f/t)(u - u(0))`.
    pub fn apply(&self, u: &Series) -> Result<Series> {
        let u0 = u.coeff(0).clone();
        let shifted = u - &Series::constant(u0.clone(), u.prec());
        Ok(&self.g.scale(&u0) + &product_over_t(&self.f, &shifted)?)
    }

    /// `[g, f][d, h] = [g + (f/t)(d - 1), f h / t]`.
    pub fn mul(&self, other: &QuasiRiordan) -> Result<QuasiRiordan> {
        let d_minus_one = &other.g - &Series::one(other.g.prec());
        let g = &self.g + &product_over_t(&self.f, &d_minus_one)?;
        let f = product_over_t(&self.f, &other.f)?;
        QuasiRiordan::new(g, f)
    }

    /// `[g, f]^{-1} = [1 + (t/f)(1 - g), t^2/f]`.
    pub fn inverse(&self) -> Result<QuasiRiordan> {
        let t_over_f = self.f.div_t()?.reciprocal()?;
        let one_minus_g = &Series::one(self.g.prec()) - &self.g;
        let correction = (&t_over_f * &one_minus_g.div_t()?).mul_t_pow(1);
        let g = &Series::one(correction.prec()) + &correction;
        let f = t_over_f.mul_t_pow(1);
        QuasiRiordan::new(g, f)
    }

    /// `by * self * by^{-1}`.
    pub fn conjugate(&self, by: &QuasiRiordan) -> Result<QuasiRiordan> {
        by.mul(self)?.mul(&by.inverse()?)
    }
}

/// `[1] ⊕ m`.
pub fn direct_sum_one(m: &Triangle) -> BlockMatrix {
    m.direct_sum_one()
}

/// Whether `(g,f)_n = [g,f]_n ([1] ⊕ (g,f)_{n-1})` holds exactly.
pub fn factorization_check(ra: &RiordanPair, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::DimensionMismatch(
            "factorization needs order n >= 1".into(),
        ));
    }
    let lhs = ra.triangle(n)?;
    let quasi = QuasiRiordan::from_riordan(ra).matrix(n)?;
    let rhs = quasi.mul(&direct_sum_one(&ra.triangle(n - 1)?))?;
    Ok(lhs == rhs)
}

/// Recovers `(g, F)` when `m` is the leading block of a Riordan array:
/// column 0 gives `g`, column 1 gives `g F`, and every later column must
/// equal `g F^k`. Returns `None` when no such pair exists.
pub fn as_riordan(m: &Triangle) -> Option<RiordanPair> {
    let n = m.order();
    if n < 2 {
        return None;
    }
    let p = n - 1;
    let g = Series::new(m.column(0));
    let col1 = Series::new(
        std::iter::once(Rational::zero())
            .chain(m.column(1))
            .collect(),
    );
    let big_f = &col1 * &g.reciprocal().ok()?;
    let ra = RiordanPair::new(g, big_f.cap(p)).ok()?;
    (ra.triangle(n).ok()? == *m).then_some(ra)
}
