//! Proper Riordan arrays `(g, f)` and their group structure.
//!
//! Entries `d_{n,k} = [t^n] g f^k` can be produced three ways: the closed
//! form (repeated series products), the vertical recursion through the
//! coefficients of `f`, and the fully unrolled nested sum. Triangles are
//! generated by the vertical recursion; the other two are kept as oracles.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Triangle;
use crate::series::{Order, Rational, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanPair {
    g: Series,
    f: Series,
}

/// Coefficients of the horizontal recursion: `a` rebuilds columns `k >= 1`,
/// `z` rebuilds column 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AZSequences {
    a: Series,
    z: Series,
}

impl AZSequences {
    pub fn new(a: Series, z: Series) -> Result<Self> {
        if a.coeff(0).is_zero() {
            return Err(Error::NotProperASequence);
        }
        Ok(Self { a, z })
    }

    pub fn a(&self) -> &Series {
        &self.a
    }

    pub fn z(&self) -> &Series {
        &self.z
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subgroup {
    Appell,
    Lagrange,
    /// `(g, t g^k)` for the given `k >= 1`.
    Bell(u32),
    HittingTime,
    Derivative,
    Checkerboard,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subgroup::Appell => write!(f, "Appell"),
            Subgroup::Lagrange => write!(f, "Lagrange"),
            Subgroup::Bell(k) => write!(f, "{k}-Bell"),
            Subgroup::HittingTime => write!(f, "hitting-time"),
            Subgroup::Derivative => write!(f, "derivative"),
            Subgroup::Checkerboard => write!(f, "checkerboard"),
        }
    }
}

/// Subgroup labels whose defining identity holds for every coefficient
/// up to `checked_to`. Not a proof for the infinite array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub labels: Vec<Subgroup>,
    pub checked_to: usize,
}

impl Membership {
    pub fn contains(&self, s: Subgroup) -> bool {
        self.labels.contains(&s)
    }
}

fn range_err(n: usize, k: usize) -> Error {
    Error::IndexOutOfRange {
        n: n as i64,
        k: k as i64,
    }
}

impl RiordanPair {
    /// Requires `g(0) = 1`, `f(0) = 0` and `f_1 != 0`.
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

    pub fn identity(prec: usize) -> Self {
        Self {
            g: Series::one(prec),
            f: Series::t(prec),
        }
    }

    /// `(g, t)`.
    pub fn appell(g: Series) -> Result<Self> {
        let p = g.prec();
        Self::new(g, Series::t(p))
    }

    /// `(1, f)`.
    pub fn lagrange(f: Series) -> Result<Self> {
        let p = f.prec();
        Self::new(Series::one(p), f)
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// Largest row index whose entries are determined by the stored coefficients.
    pub fn prec(&self) -> usize {
        self.g.prec().min(self.f.prec())
    }

    fn check_index(&self, n: usize, k: usize) -> Result<()> {
        if k > n || n > self.prec() {
            return Err(range_err(n, k));
        }
        Ok(())
    }

    /// `d_{n,k} = [t^n] g f^k`.
    pub fn entry_closed(&self, n: usize, k: usize) -> Result<Rational> {
        self.check_index(n, k)?;
        let col = &self.g.cap(n) * &self.f.cap(n).pow(k);
        Ok(col.coeff(n).clone())
    }

    /// `d_{n,k} = sum_{j=1}^{n-k+1} f_j d_{n-j,k-1}`, column by column from `g`.
    pub fn entry_vertical(&self, n: usize, k: usize) -> Result<Rational> {
        self.check_index(n, k)?;
        // column kk is only needed down to row n - (k - kk)
        let mut col: Vec<Rational> = self.g.coeffs()[..=n - k].to_vec();
        for kk in 1..=k {
            let last = n - (k - kk);
            let mut next = vec![Rational::zero(); last + 1];
            for m in kk..=last {
                let mut s = Rational::zero();
                for j in 1..=(m + 1 - kk) {
                    let fj = self.f.coeff(j);
                    if !fj.is_zero() && !col[m - j].is_zero() {
                        s += fj * &col[m - j];
                    }
                }
                next[m] = s;
            }
            col = next;
        }
        Ok(col[n].clone())
    }

    /// The `k`-fold nested sum over `i_k, ..., i_1 >= 1` of
    /// `f_{i_k} ... f_{i_1} g_{n - i_1 - ... - i_k}`, expanded without memoisation.
    /// Exponential in `k`; intended for small `n`.
    pub fn entry_nested(&self, n: usize, k: usize) -> Result<Rational> {
        self.check_index(n, k)?;
        Ok(self.nested_level(n, k, 0))
    }

    // level counts the remaining indices; `used` is i_k + ... + i_{level+1}.
    fn nested_level(&self, n: usize, level: usize, used: usize) -> Rational {
        if level == 0 {
            return self.g.coeff(n - used).clone();
        }
        let upper = n - (level - 1) - used;
        let mut s = Rational::zero();
        for i in 1..=upper {
            let fi = self.f.coeff(i);
            if fi.is_zero() {
                continue;
            }
            s += fi * self.nested_level(n, level - 1, used + i);
        }
        s
    }

    /// Leading principal submatrix `(g,f)_n` (rows `0..n`) via the vertical recursion.
    pub fn triangle(&self, n: usize) -> Result<Triangle> {
        if n > self.prec() + 1 {
            return Err(Error::InsufficientPrecision {
                requested: n.saturating_sub(1),
                available: self.prec(),
            });
        }
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
        if n > 0 {
            cols.push(self.g.coeffs()[..n].to_vec());
        }
        for k in 1..n {
            let prev = &cols[k - 1];
            let mut col = vec![Rational::zero(); n];
            for m in k..n {
                let mut s = Rational::zero();
                for j in 1..=(m + 1 - k) {
                    let fj = self.f.coeff(j);
                    if !fj.is_zero() && !prev[m - j].is_zero() {
                        s += fj * &prev[m - j];
                    }
                }
                col[m] = s;
            }
            cols.push(col);
        }
        Ok(Triangle::from_fn(n, |r, c| cols[c][r].clone()))
    }

    /// The same leading submatrix built from the columns `g f^k` by repeated products.
    pub fn closed_triangle(&self, n: usize) -> Result<Triangle> {
        if n > self.prec() + 1 {
            return Err(Error::InsufficientPrecision {
                requested: n.saturating_sub(1),
                available: self.prec(),
            });
        }
        if n == 0 {
            return Triangle::from_rows(Vec::new());
        }
        let f = self.f.cap(n - 1);
        let mut col = self.g.cap(n - 1);
        let mut cols = Vec::with_capacity(n);
        for _ in 0..n {
            cols.push(col.clone());
            col = &col * &f;
        }
        Ok(Triangle::from_fn(n, |r, c| cols[c].coeff(r).clone()))
    }

    /// `(g1 g2(f1), f2(f1))`.
    pub fn mul(&self, other: &RiordanPair) -> Result<RiordanPair> {
        let g = &self.g * &other.g.compose(&self.f)?;
        let f = other.f.compose(&self.f)?;
        RiordanPair::new(g, f)
    }

    /// `(1/g(f̄), f̄)`.
    pub fn inverse(&self) -> Result<RiordanPair> {
        let fbar = self.f.compositional_inverse()?;
        let g = self.g.compose(&fbar)?.reciprocal()?;
        RiordanPair::new(g, fbar)
    }

    /// Action on a series: `(g, f) h = g h(f)`.
    pub fn apply(&self, h: &Series) -> Result<Series> {
        Ok(&self.g * &h.compose(&self.f)?)
    }

    /// `A(t) = (f/t)(f̄)` and `Z(t) = (g(f̄) - 1) / (f̄ g(f̄))`.
    pub fn az(&self) -> Result<AZSequences> {
        let fbar = self.f.compositional_inverse()?;
        let a = self.f.div_t()?.compose(&fbar)?;
        let g_fbar = self.g.compose(&fbar)?;
        let num = (&g_fbar - &Series::one(g_fbar.prec())).div_t()?;
        let den = (&fbar * &g_fbar).div_t()?;
        let z = &num * &den.reciprocal()?;
        AZSequences::new(a, z)
    }

    /// `((g, t), (1, f))`, whose product is `self`.
    pub fn semidirect_split(&self) -> (RiordanPair, RiordanPair) {
        let appell = RiordanPair {
            g: self.g.clone(),
            f: Series::t(self.g.prec()),
        };
        let lagrange = RiordanPair {
            g: Series::one(self.f.prec()),
            f: self.f.clone(),
        };
        (appell, lagrange)
    }

    pub fn subgroups(&self) -> Result<Membership> {
        let p = self.prec();
        let g = self.g.cap(p);
        let f = self.f.cap(p);
        let mut labels = Vec::new();

        let is_t = f.agrees_with(&Series::t(p));
        let is_one = g.agrees_with(&Series::one(p));
        if is_t {
            labels.push(Subgroup::Appell);
        }
        if is_one {
            labels.push(Subgroup::Lagrange);
        }
        if let Some(k) = bell_exponent(&g, &f) {
            labels.push(Subgroup::Bell(k));
        }
        if p >= 1 {
            let fprime = f.derivative()?;
            let hitting = &fprime * &f.div_t()?.reciprocal()?;
            if g.agrees_with(&hitting) {
                labels.push(Subgroup::HittingTime);
            }
            if g.agrees_with(&fprime) {
                labels.push(Subgroup::Derivative);
            }
        }
        let g_even = g.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero());
        let f_odd = f.coeffs().iter().step_by(2).all(|c| c.is_zero());
        if g_even && f_odd {
            labels.push(Subgroup::Checkerboard);
        }
        Ok(Membership {
            labels,
            checked_to: p,
        })
    }
}

/// The `k >= 1` with `f = t g^k`, if any. When `g = 1` only `f = t` qualifies
/// and `k = 1` is reported.
fn bell_exponent(g: &Series, f: &Series) -> Option<u32> {
    let p = g.prec().min(f.prec());
    if p == 0 {
        return None;
    }
    if !f.coeff(1).is_one() {
        return None;
    }
    let k = match (1..p).find(|&j| !g.coeff(j).is_zero()) {
        None => 1,
        Some(j) => {
            let ratio = f.coeff(j + 1) / g.coeff(j);
            if !ratio.is_integer() || ratio <= Rational::zero() {
                return None;
            }
            u32::try_from(ratio.to_integer()).ok()?
        }
    };
    let candidate = g.pow(k as usize).mul_t_pow(1).cap(p);
    candidate.agrees_with(f).then_some(k)
}

/// Rebuilds `(g,f)_n` from its A- and Z-sequences:
/// `d_{0,0} = 1`, `d_{m+1,0} = sum_j z_j d_{m,j}`, `d_{m+1,k+1} = sum_j a_j d_{m,k+j}`.
pub fn reconstruct_from_az(az: &AZSequences, n: usize) -> Result<Triangle> {
    if az.a.coeff(0).is_zero() {
        return Err(Error::NotProperASequence);
    }
    let needed = n.saturating_sub(2);
    for s in [&az.a, &az.z] {
        if n >= 2 && s.prec() < needed {
            return Err(Error::InsufficientPrecision {
                requested: needed,
                available: s.prec(),
            });
        }
    }
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
    if n == 0 {
        return Triangle::from_rows(rows);
    }
    rows.push(vec![Rational::one()]);
    for m in 0..n - 1 {
        let prev = &rows[m];
        let mut row = Vec::with_capacity(m + 2);
        let mut s = Rational::zero();
        for (j, d) in prev.iter().enumerate() {
            s += az.z.coeff(j) * d;
        }
        row.push(s);
        for k in 0..=m {
            let mut s = Rational::zero();
            for j in 0..=(m - k) {
                s += az.a.coeff(j) * &prev[k + j];
            }
            row.push(s);
        }
        rows.push(row);
    }
    Triangle::from_rows(rows)
}
