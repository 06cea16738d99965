//! Weighted Riordan classes.
//!
//! A weight sequence `c` rescales `d_{n,k}` to `(c_n/c_k) d_{n,k}`; a weight
//! triangle `C` rescales it to `(c_{n,n}/c_{n,k}) d_{n,k}`. The factorial
//! sequence turns Pascal into the rook triangle and the triangle
//! `c_{n,k} = (-1)^k/(n)_k` turns it into the Laguerre triangle.
//!
//! Both classes carry a horizontal recursion (through the base array's A- and
//! Z-sequences) and a vertical recursion (through the coefficients of `f`).
//! The recursions rebuild the weighted triangle without reading the
//! transformed entries, so they serve as independent checks of the transform.

use num_traits::{One, Zero};

use crate::catalog::{factorial, falling};
use crate::error::{Error, Result};
use crate::matrix::Triangle;
use crate::riordan::{AZSequences, RiordanPair};
use crate::series::{int, Rational};

/// `(c_0, c_1, ..., c_N)` with `c_0 = 1` and every `c_k != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSeq(Vec<Rational>);

impl WeightSeq {
    pub fn new(c: Vec<Rational>) -> Result<Self> {
        match c.first() {
            Some(c0) if c0.is_one() => {}
            _ => return Err(Error::InvalidWeight("c_0 must be 1".into())),
        }
        if let Some(k) = c.iter().position(|x| x.is_zero()) {
            return Err(Error::InvalidWeight(format!("c_{k} is zero")));
        }
        Ok(Self(c))
    }

    /// `c_n = n!` for `n < len`.
    pub fn factorial(len: usize) -> Self {
        Self((0..len).map(factorial).collect())
    }

    /// `c_n = k^n` for `n < len`; `k` must be nonzero.
    pub fn power(k: &Rational, len: usize) -> Result<Self> {
        let mut c = Vec::with_capacity(len);
        let mut p = Rational::one();
        for _ in 0..len {
            c.push(p.clone());
            p = &p * k;
        }
        Self::new(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, n: usize) -> &Rational {
        &self.0[n]
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// `(1/c_0, 1/c_1, ...)`.
    pub fn reciprocal(&self) -> Self {
        Self(self.0.iter().map(|x| x.recip()).collect())
    }

    /// The weight triangle with `c_{n,k} = c_k`.
    pub fn lift(&self) -> WeightTri {
        WeightTri(Triangle::from_fn(self.len(), |_, k| self.0[k].clone()))
    }
}

/// Lower-triangular `(c_{n,k})` with `c_{n,0} = 1` and `c_{n,k} != 0` for `k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTri(Triangle);

impl WeightTri {
    pub fn new(c: Triangle) -> Result<Self> {
        for r in 0..c.order() {
            if !c.entry(r, 0).is_one() {
                return Err(Error::InvalidWeight(format!("c_{{{r},0}} must be 1")));
            }
            if let Some(k) = c.row(r).iter().position(|x| x.is_zero()) {
                return Err(Error::InvalidWeight(format!("c_{{{r},{k}}} is zero")));
            }
        }
        Ok(Self(c))
    }

    /// `c_{n,k} = (-1)^k / (n)_k`, rows `0..n`.
    pub fn laguerre(n: usize) -> Self {
        Self(Triangle::from_fn(n, |r, k| {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            sign / falling(r as i64, k)
        }))
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, n: usize, k: usize) -> &Rational {
        &self.0.row(n)[k]
    }

    pub fn table(&self) -> &Triangle {
        &self.0
    }

    /// `(1/c_{n,k})`.
    pub fn reciprocal(&self) -> Self {
        Self(Triangle::from_fn(self.order(), |r, k| {
            self.0.row(r)[k].recip()
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Seq(WeightSeq),
    Tri(WeightTri),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTriangle {
    base: RiordanPair,
    weight: Weight,
    entries: Triangle,
}

impl WeightedTriangle {
    pub fn base(&self) -> &RiordanPair {
        &self.base
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn entries(&self) -> &Triangle {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.order()
    }

    /// Horizontal recursion driven by the A- and Z-sequences extracted from the base.
    pub fn horizontal(&self) -> Result<HorizontalRecursion<'_>> {
        Ok(HorizontalRecursion {
            x: self,
            az: self.base.az()?,
        })
    }

    pub fn vertical(&self) -> VerticalRecursion<'_> {
        VerticalRecursion { x: self }
    }
}

/// `((c_n/c_k) d_{n,k})` for rows `0..n`.
pub fn c_transform(ra: &RiordanPair, c: &WeightSeq, n: usize) -> Result<WeightedTriangle> {
    if c.len() < n {
        return Err(Error::InvalidWeight(format!(
            "weights defined through index {}, order {n} needs {}",
            c.len() as i64 - 1,
            n as i64 - 1
        )));
    }
    let d = ra.triangle(n)?;
    let entries = Triangle::from_fn(n, |r, k| c.get(r) / c.get(k) * d.entry(r, k));
    Ok(WeightedTriangle {
        base: ra.clone(),
        weight: Weight::Seq(c.clone()),
        entries,
    })
}

/// `((c_{n,n}/c_{n,k}) d_{n,k})` for rows `0..n`.
pub fn big_c_transform(ra: &RiordanPair, c: &WeightTri, n: usize) -> Result<WeightedTriangle> {
    if c.order() < n {
        return Err(Error::InvalidWeight(format!(
            "weight triangle has {} rows, order {n} needs {n}",
            c.order()
        )));
    }
    let d = ra.triangle(n)?;
    let entries = Triangle::from_fn(n, |r, k| c.get(r, r) / c.get(r, k) * d.entry(r, k));
    Ok(WeightedTriangle {
        base: ra.clone(),
        weight: Weight::Tri(c.clone()),
        entries,
    })
}

/// Product in the `(c)`-group: the matrix product of two arrays sharing one weight sequence.
pub fn c_group_mul(x: &WeightedTriangle, y: &WeightedTriangle) -> Result<WeightedTriangle> {
    let (cx, cy) = match (&x.weight, &y.weight) {
        (Weight::Seq(a), Weight::Seq(b)) => (a, b),
        _ => {
            return Err(Error::WeightMismatch(
                "(C)-weighted arrays do not form a group under multiplication".into(),
            ))
        }
    };
    if x.order() != y.order() {
        return Err(Error::DimensionMismatch(format!(
            "orders {} and {}",
            x.order(),
            y.order()
        )));
    }
    let n = x.order();
    if cx.values()[..n] != cy.values()[..n] {
        return Err(Error::WeightMismatch("different weight sequences".into()));
    }
    Ok(WeightedTriangle {
        base: x.base.mul(&y.base)?,
        weight: x.weight.clone(),
        entries: x.entries.mul(&y.entries)?,
    })
}

/// The `(c)`-group inverse: the transform of the inverse base array.
pub fn c_group_inverse(x: &WeightedTriangle) -> Result<WeightedTriangle> {
    match &x.weight {
        Weight::Seq(c) => c_transform(&x.base.inverse()?, c, x.order()),
        Weight::Tri(_) => Err(Error::WeightMismatch(
            "(C)-weighted arrays do not form a group under multiplication".into(),
        )),
    }
}

pub struct HorizontalRecursion<'a> {
    x: &'a WeightedTriangle,
    az: AZSequences,
}

impl HorizontalRecursion<'_> {
    pub fn az(&self) -> &AZSequences {
        &self.az
    }

    /// Entry `(m+1, k)` computed from row `m`.
    fn step(&self, prev: &[Rational], m: usize, k: usize) -> Rational {
        let a = self.az.a();
        let z = self.az.z();
        match &self.x.weight {
            Weight::Seq(c) => {
                if k == 0 {
                    // d_{m+1,0} = c_{m+1}/c_m sum_j z_j c_j d_{m,j}
                    let s: Rational = (0..=m).map(|j| z.coeff(j) * c.get(j) * &prev[j]).sum();
                    c.get(m + 1) / c.get(m) * s
                } else {
                    // d_{m+1,k} = c_{m+1}/(c_m c_k) sum_j a_j c_{k-1+j} d_{m,k-1+j}
                    let kk = k - 1;
                    let s: Rational = (0..=m - kk)
                        .map(|j| a.coeff(j) * c.get(kk + j) * &prev[kk + j])
                        .sum();
                    c.get(m + 1) / (c.get(m) * c.get(k)) * s
                }
            }
            Weight::Tri(c) => {
                if k == 0 {
                    // d_{m+1,0} = c_{m+1,m+1}/c_{m,m} sum_j z_j c_{m,j} d_{m,j}
                    let s: Rational = (0..=m).map(|j| z.coeff(j) * c.get(m, j) * &prev[j]).sum();
                    c.get(m + 1, m + 1) / c.get(m, m) * s
                } else {
                    // d_{m+1,k} = c_{m+1,m+1}/(c_{m,m} c_{m+1,k}) sum_j a_j c_{m,k-1+j} d_{m,k-1+j}
                    let kk = k - 1;
                    let s: Rational = (0..=m - kk)
                        .map(|j| a.coeff(j) * c.get(m, kk + j) * &prev[kk + j])
                        .sum();
                    c.get(m + 1, m + 1) / (c.get(m, m) * c.get(m + 1, k)) * s
                }
            }
        }
    }

    /// Entry `(n, k)`, `n >= 1`, from row `n - 1` of the weighted triangle.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rational> {
        if n == 0 || k > n || n >= self.x.order() {
            return Err(Error::IndexOutOfRange {
                n: n as i64,
                k: k as i64,
            });
        }
        Ok(self.step(self.x.entries.row(n - 1), n - 1, k))
    }

    /// The whole triangle from `d_{0,0} = 1` using only the recursion.
    pub fn rebuild(&self) -> Result<Triangle> {
        let n = self.x.order();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
        if n > 0 {
            rows.push(vec![Rational::one()]);
        }
        for m in 0..n.saturating_sub(1) {
            let row = (0..=m + 1).map(|k| self.step(&rows[m], m, k)).collect();
            rows.push(row);
        }
        Triangle::from_rows(rows)
    }
}

pub struct VerticalRecursion<'a> {
    x: &'a WeightedTriangle,
}

impl VerticalRecursion<'_> {
    /// Entry `(n, k)`, `k >= 1`, from column `k - 1` given as `col(row)`.
    fn step(&self, col: impl Fn(usize) -> Rational, n: usize, k: usize) -> Rational {
        let f = self.x.base.f();
        match &self.x.weight {
            Weight::Seq(c) => {
                // d_{n,k} = c_n/c_k sum_j f_j c_{k-1}/c_{n-j} d_{n-j,k-1}
                let s: Rational = (1..=n + 1 - k)
                    .filter(|&j| !f.coeff(j).is_zero())
                    .map(|j| f.coeff(j) * c.get(k - 1) / c.get(n - j) * col(n - j))
                    .sum();
                c.get(n) / c.get(k) * s
            }
            Weight::Tri(c) => {
                // d_{n,k} = c_{n,n}/c_{n,k} sum_j f_j c_{n-j,k-1}/c_{n-j,n-j} d_{n-j,k-1}
                let s: Rational = (1..=n + 1 - k)
                    .filter(|&j| !f.coeff(j).is_zero())
                    .map(|j| f.coeff(j) * c.get(n - j, k - 1) / c.get(n - j, n - j) * col(n - j))
                    .sum();
                c.get(n, n) / c.get(n, k) * s
            }
        }
    }

    /// Entry `(n, k)`, `k >= 1`, from column `k - 1` of the weighted triangle.
    pub fn entry(&self, n: usize, k: usize) -> Result<Rational> {
        if k == 0 || k > n || n >= self.x.order() {
            return Err(Error::IndexOutOfRange {
                n: n as i64,
                k: k as i64,
            });
        }
        let e = &self.x.entries;
        Ok(self.step(|r| e.entry(r, k - 1), n, k))
    }

    /// The whole triangle from the weighted first column using only the recursion.
    pub fn rebuild(&self) -> Result<Triangle> {
        let n = self.x.order();
        let g = self.x.base.g();
        let first: Vec<Rational> = (0..n)
            .map(|r| match &self.x.weight {
                Weight::Seq(c) => c.get(r) * g.coeff(r),
                Weight::Tri(c) => c.get(r, r) / c.get(r, 0) * g.coeff(r),
            })
            .collect();
        let mut cols: Vec<Vec<Rational>> = vec![first];
        for k in 1..n {
            let prev = &cols[k - 1];
            let col = (0..n)
                .map(|r| {
                    if r < k {
                        Rational::zero()
                    } else {
                        self.step(|i| prev[i].clone(), r, k)
                    }
                })
                .collect();
            cols.push(col);
        }
        Ok(Triangle::from_fn(n, |r, k| cols[k][r].clone()))
    }
}

/// `((n!/k!) d_{n,k})`, the rook triangle generalised to any base array.
pub fn generalized_rook(ra: &RiordanPair, n: usize) -> Result<WeightedTriangle> {
    c_transform(ra, &WeightSeq::factorial(n), n)
}

/// `((-1)^{n-k}/(n-k)! d_{n,k})`: the Laguerre weight triangle applied to any base array.
pub fn generalized_laguerre(ra: &RiordanPair, n: usize) -> Result<WeightedTriangle> {
    big_c_transform(ra, &WeightTri::laguerre(n), n)
}

/// Outcome of comparing the generalised rook and Laguerre triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    /// First `(n, k)` with `r̂_{n,n-k} != (-1)^{n-k} n! L̂_{n,k}`.
    pub entry_mismatch: Option<(usize, usize)>,
    /// First `(n, x)` with `r̂_n(x) != n! x^n L̂_n(-1/x)`.
    pub polynomial_mismatch: Option<(usize, Rational)>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.entry_mismatch.is_none() && self.polynomial_mismatch.is_none()
    }
}

/// Sample points for the polynomial form of the duality.
pub fn duality_sample_points() -> Vec<Rational> {
    vec![int(1), int(2), Rational::new((-1).into(), 2.into())]
}

/// Compares rows `0..=n` entrywise and as polynomials at [`duality_sample_points`].
pub fn rook_laguerre_duality(ra: &RiordanPair, n: usize) -> Result<DualityReport> {
    let rook = generalized_rook(ra, n + 1)?;
    let lag = generalized_laguerre(ra, n + 1)?;
    let (r, l) = (rook.entries(), lag.entries());

    let mut entry_mismatch = None;
    'rows: for m in 0..=n {
        let nf = factorial(m);
        for k in 0..=m {
            let sign = if (m - k) % 2 == 0 { int(1) } else { int(-1) };
            if r.entry(m, m - k) != sign * &nf * l.entry(m, k) {
                entry_mismatch = Some((m, k));
                break 'rows;
            }
        }
    }

    let mut polynomial_mismatch = None;
    'poly: for m in 0..=n {
        let nf = factorial(m);
        for x in duality_sample_points() {
            // r̂_m(x) = sum_k r̂_{m,k} x^{m-k}
            let lhs: Rational = (0..=m).map(|k| r.entry(m, k) * pow(&x, m - k)).sum();
            let y = -x.recip();
            let lag_at: Rational = (0..=m).map(|k| l.entry(m, k) * pow(&y, m - k)).sum();
            if lhs != &nf * pow(&x, m) * lag_at {
                polynomial_mismatch = Some((m, x));
                break 'poly;
            }
        }
    }

    Ok(DualityReport {
        entry_mismatch,
        polynomial_mismatch,
    })
}

fn pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{laguerre_triangle, named_riordan, rook_triangle};
    use crate::series::frac;

    const P: usize = 24;

    fn pascal() -> RiordanPair {
        named_riordan("pascal", P).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn weight_invariants() {
        assert!(WeightSeq::new(ints(&[2, 1])).is_err());
        assert!(WeightSeq::new(ints(&[1, 0, 3])).is_err());
        assert!(WeightSeq::new(vec![]).is_err());
        assert!(WeightSeq::power(&int(0), 3).is_err());
        let bad = Triangle::from_rows(vec![vec![int(1)], vec![int(1), int(0)]]).unwrap();
        assert!(WeightTri::new(bad).is_err());
        let bad = Triangle::from_rows(vec![vec![int(1)], vec![int(2), int(1)]]).unwrap();
        assert!(WeightTri::new(bad).is_err());
        assert!(WeightTri::new(WeightTri::laguerre(6).table().clone()).is_ok());
    }

    #[test]
    fn rook_from_factorial_weights() {
        let x = c_transform(&pascal(), &WeightSeq::factorial(6), 6).unwrap();
        assert_eq!(x.entries().row(3), ints(&[6, 18, 9, 1]).as_slice());
        assert_eq!(x.entries(), &rook_triangle(6));
    }

    #[test]
    fn unit_weights_leave_triangle_alone() {
        let ones = WeightSeq::new(vec![int(1); 8]).unwrap();
        let x = c_transform(&pascal(), &ones, 8).unwrap();
        assert_eq!(x.entries(), &pascal().triangle(8).unwrap());
        let x = big_c_transform(&pascal(), &ones.lift(), 8).unwrap();
        assert_eq!(x.entries(), &pascal().triangle(8).unwrap());
    }

    #[test]
    fn power_weights() {
        let c = WeightSeq::power(&int(2), 6).unwrap();
        let x = c_transform(&pascal(), &c, 6).unwrap();
        assert_eq!(x.entries().row(2), ints(&[4, 4, 1]).as_slice());
        for n in 0..6i64 {
            for k in 0..=n {
                let expected = int(1 << (n - k)) * crate::catalog::binomial(n, k);
                assert_eq!(x.entries().entry(n as usize, k as usize), expected);
            }
        }
    }

    #[test]
    fn laguerre_from_weight_triangle() {
        let x = big_c_transform(&pascal(), &WeightTri::laguerre(6), 6).unwrap();
        assert_eq!(
            x.entries().row(3),
            &[frac(-1, 6), frac(3, 2), int(-3), int(1)]
        );
        assert_eq!(x.entries(), &laguerre_triangle(6));
    }

    #[test]
    fn lifted_weights_and_reciprocal_class() {
        let c = WeightSeq::new(ints(&[1, 2, -3, 5, 7, 11])).unwrap();
        let ra = named_riordan("catalan_bell", P).unwrap();
        let direct = c_transform(&ra, &c, 6).unwrap();
        let lifted = big_c_transform(&ra, &c.lift(), 6).unwrap();
        assert_eq!(direct.entries(), lifted.entries());

        // lifting 1/c gives (c_k/c_n) d_{n,k}, the (1/c)-class element
        let recip_lift = big_c_transform(&ra, &c.reciprocal().lift(), 6).unwrap();
        let recip = c_transform(&ra, &c.reciprocal(), 6).unwrap();
        assert_eq!(recip_lift.entries(), recip.entries());
        let d = ra.triangle(6).unwrap();
        for n in 0..6 {
            for k in 0..=n {
                assert_eq!(
                    recip.entries().entry(n, k),
                    c.get(k) / c.get(n) * d.entry(n, k)
                );
            }
        }
    }

    #[test]
    fn transform_needs_enough_weights() {
        assert!(c_transform(&pascal(), &WeightSeq::factorial(4), 5).is_err());
        assert!(big_c_transform(&pascal(), &WeightTri::laguerre(4), 5).is_err());
    }

    #[test]
    fn group_product_and_inverse() {
        let n = 10;
        let c = WeightSeq::factorial(n);
        let x = c_transform(&pascal(), &c, n).unwrap();
        let id = c_transform(&RiordanPair::identity(P), &c, n).unwrap();
        assert_eq!(c_group_mul(&x, &id).unwrap().entries(), x.entries());
        assert_eq!(c_group_mul(&id, &x).unwrap().entries(), x.entries());

        let sq = c_group_mul(&x, &x).unwrap();
        let direct = c_transform(&pascal().mul(&pascal()).unwrap(), &c, n).unwrap();
        assert_eq!(sq.entries(), direct.entries());

        let inv = c_group_inverse(&x).unwrap();
        assert_eq!(
            c_group_mul(&x, &inv).unwrap().entries(),
            &Triangle::identity(n)
        );
    }

    #[test]
    fn group_rejects_mismatched_or_triangle_weights() {
        let x = c_transform(&pascal(), &WeightSeq::factorial(5), 5).unwrap();
        let y = c_transform(&pascal(), &WeightSeq::power(&int(2), 5).unwrap(), 5).unwrap();
        assert!(matches!(c_group_mul(&x, &y), Err(Error::WeightMismatch(_))));
        let l = big_c_transform(&pascal(), &WeightTri::laguerre(5), 5).unwrap();
        assert!(matches!(c_group_mul(&l, &l), Err(Error::WeightMismatch(_))));
        assert!(c_group_inverse(&l).is_err());
    }

    #[test]
    fn rook_horizontal_recursion() {
        let x = generalized_rook(&pascal(), 21).unwrap();
        let h = x.horizontal().unwrap();
        assert_eq!(h.entry(4, 2).unwrap(), int(72));
        let col0: Vec<Rational> = (1..6).map(|n| h.entry(n, 0).unwrap()).collect();
        assert_eq!(col0, ints(&[1, 2, 6, 24, 120]));
        assert_eq!(h.rebuild().unwrap(), *x.entries());
        for n in 1..21 {
            for k in 0..=n {
                assert_eq!(h.entry(n, k).unwrap(), x.entries().entry(n, k));
            }
        }
    }

    #[test]
    fn laguerre_horizontal_recursion() {
        let x = generalized_laguerre(&pascal(), 21).unwrap();
        let h = x.horizontal().unwrap();
        assert_eq!(h.entry(4, 2).unwrap(), int(3));
        let col0: Vec<Rational> = (1..5).map(|n| h.entry(n, 0).unwrap()).collect();
        assert_eq!(col0, vec![int(-1), frac(1, 2), frac(-1, 6), frac(1, 24)]);
        assert_eq!(h.rebuild().unwrap(), *x.entries());
    }

    #[test]
    fn vertical_recursions() {
        let rook = generalized_rook(&pascal(), 21).unwrap();
        let v = rook.vertical();
        assert_eq!(v.entry(2, 1).unwrap(), int(4));
        for n in 1..8 {
            assert_eq!(v.entry(n, n).unwrap(), rook.entries().entry(n, n));
        }
        assert_eq!(v.rebuild().unwrap(), *rook.entries());
        assert!(v.entry(3, 0).is_err());

        let lag = generalized_laguerre(&pascal(), 21).unwrap();
        let v = lag.vertical();
        assert_eq!(v.entry(2, 1).unwrap(), int(-2));
        for n in 1..21 {
            assert_eq!(v.entry(n, n).unwrap(), int(1));
        }
        assert_eq!(v.rebuild().unwrap(), *lag.entries());
    }

    #[test]
    fn generalized_rook_examples() {
        assert_eq!(
            generalized_rook(&pascal(), 8).unwrap().entries(),
            &rook_triangle(8)
        );
        let id = generalized_rook(&RiordanPair::identity(P), 6).unwrap();
        assert_eq!(id.entries(), &Triangle::identity(6));
        let cb = named_riordan("catalan_bell", P).unwrap();
        assert_eq!(
            generalized_rook(&cb, 4).unwrap().entries().entry(3, 1),
            int(30)
        );
    }

    #[test]
    fn generalized_laguerre_examples() {
        assert_eq!(
            generalized_laguerre(&pascal(), 8).unwrap().entries(),
            &laguerre_triangle(8)
        );
        let cb = named_riordan("catalan_bell", P).unwrap();
        let l = generalized_laguerre(&cb, 8).unwrap();
        for n in 0..8 {
            assert_eq!(l.entries().entry(n, n), cb.entry_closed(n, n).unwrap());
        }
    }

    #[test]
    fn duality_classical_and_trivial() {
        assert!(rook_laguerre_duality(&pascal(), 8).unwrap().holds());
        assert!(
            rook_laguerre_duality(&named_riordan("catalan_bell", P).unwrap(), 0)
                .unwrap()
                .holds()
        );
    }
}
