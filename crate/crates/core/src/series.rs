//! Truncated formal power series over the rationals.
//!
//! A [`Series`] stores the coefficients `c_0..=c_prec`; everything above
//! `prec` is unknown. Binary operations return the minimum precision of
//! their operands, and reading an index above `prec` is an error rather
//! than an implicit zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Order of a series: index of the first nonzero coefficient, or the
/// zero-series marker when every trusted coefficient vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Zero,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(r) => write!(f, "{r}"),
            Order::Zero => write!(f, "zero-series"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from its trusted coefficients; `prec = coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series always trusts at least `c_0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Self { coeffs }
    }

    /// A polynomial read as an exact series: coefficients past the given
    /// ones are known zeros up to `prec`.
    pub fn polynomial(mut coeffs: Vec<Rational>, prec: usize) -> Result<Self> {
        if let Some(last) = coeffs.iter().rposition(|c| !c.is_zero()) {
            if last > prec {
                return Err(Error::InsufficientPrecision {
                    requested: last,
                    available: prec,
                });
            }
        }
        coeffs.resize(prec + 1, Rational::zero());
        Ok(Self { coeffs })
    }

    pub fn from_ints(coeffs: &[i64], prec: usize) -> Result<Self> {
        Self::polynomial(coeffs.iter().map(|&c| int(c)).collect(), prec)
    }

    pub fn from_fn(prec: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self {
            coeffs: (0..=prec).map(f).collect(),
        }
    }

    pub fn zero(prec: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); prec + 1],
        }
    }

    pub fn one(prec: usize) -> Self {
        Self::constant(Rational::one(), prec)
    }

    pub fn constant(c: Rational, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k` known up to `prec`.
    pub fn monomial(c: Rational, k: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if k <= prec {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(prec: usize) -> Self {
        Self::monomial(Rational::one(), 1, prec)
    }

    /// `1/(1 - c t)`.
    pub fn geometric(c: Rational, prec: usize) -> Self {
        let mut pow = Rational::one();
        Self::from_fn(prec, |_| {
            let out = pow.clone();
            pow = &pow * &c;
            out
        })
    }

    /// Parses a comma-separated list of rationals (`"1, 1/2, -3/4"`, index 0
    /// first) as a polynomial known up to `prec`.
    pub fn parse_literal(text: &str, prec: usize) -> Result<Self> {
        let mut coeffs = Vec::new();
        for token in text.split(',') {
            coeffs.push(parse_rational(token)?);
        }
        Self::polynomial(coeffs, prec)
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    /// Coefficient of `t^n`. Panics when `n > prec`.
    pub fn coeff(&self, n: usize) -> &Rational {
        match self.coeffs.get(n) {
            Some(c) => c,
            None => panic!(
                "coefficient {n} requested from a series trusted up to {}",
                self.prec()
            ),
        }
    }

    pub fn try_coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::InsufficientPrecision {
            requested: n,
            available: self.prec(),
        })
    }

    pub fn order(&self) -> Order {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(r) => Order::Finite(r),
            None => Order::Zero,
        }
    }

    /// `h|_r = h_0 + ... + h_r t^r`.
    pub fn truncate(&self, r: usize) -> Result<Self> {
        if r > self.prec() {
            return Err(Error::InsufficientPrecision {
                requested: r,
                available: self.prec(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=r].to_vec(),
        })
    }

    /// Lowers the precision to `min(prec, r)`.
    pub fn cap(&self, r: usize) -> Self {
        let r = r.min(self.prec());
        Self {
            coeffs: self.coeffs[..=r].to_vec(),
        }
    }

    /// Exact equality of the coefficients both series trust.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let p = self.prec().min(other.prec());
        self.coeffs[..=p] == other.coeffs[..=p]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `(self - self(0)) / t`, precision drops by one.
    pub fn tail_quotient(&self) -> Result<Self> {
        if self.prec() == 0 {
            return Err(Error::InsufficientPrecision {
                requested: 1,
                available: 0,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self / t`. Requires a zero constant term; precision drops by one.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidPair(format!(
                "cannot divide by t: constant term is {}",
                self.coeffs[0]
            )));
        }
        self.tail_quotient()
    }

    /// `t^k * self`, precision grows by `k` (the new low coefficients are exact zeros).
    pub fn mul_t_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Formal derivative, precision drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.prec() == 0 {
            return Err(Error::InsufficientPrecision {
                requested: 1,
                available: 0,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Series::one(self.prec());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse of a series of order 0.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotAUnit {
                order: self.order().to_string(),
            });
        }
        let inv0 = a0.recip();
        let p = self.prec();
        let mut out: Vec<Rational> = Vec::with_capacity(p + 1);
        out.push(inv0.clone());
        for n in 1..=p {
            let mut s = Rational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &out[n - j];
                }
            }
            out.push(-(s * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `self(f(t))` by Horner evaluation; `f` must have zero constant term.
    pub fn compose(&self, f: &Series) -> Result<Self> {
        if !f.coeffs[0].is_zero() {
            return Err(Error::CompositionUndefined);
        }
        let p = self.prec().min(f.prec());
        let f = f.cap(p);
        let mut acc = Series::constant(self.coeffs[p].clone(), p);
        for i in (0..p).rev() {
            acc = &acc * &f;
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Compositional inverse `f̄` with `f(f̄(t)) = f̄(f(t)) = t`.
    ///
    /// Solved one coefficient at a time: `[t^n] f(f̄) = f_1 b_n + sum_{i>=2} f_i [t^n] f̄^i`
    /// and the powers `f̄^i` at index `n` only involve `b_1..b_{n-1}`.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if self.order() != Order::Finite(1) {
            return Err(Error::NoCompositionalInverse {
                order: self.order().to_string(),
            });
        }
        let p = self.prec();
        let f1_inv = self.coeffs[1].recip();
        let mut b = vec![Rational::zero(); p + 1];
        // powers[i][n] = [t^n] f̄^i, for 1 <= i <= n <= p
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::zero(); p + 1]; p + 1];
        for n in 1..=p {
            let mut s = Rational::zero();
            for i in 2..=n {
                let mut v = Rational::zero();
                for m in 1..=(n + 1 - i) {
                    let prev = &powers[i - 1][n - m];
                    if !b[m].is_zero() && !prev.is_zero() {
                        v += &b[m] * prev;
                    }
                }
                if !self.coeffs[i].is_zero() {
                    s += &self.coeffs[i] * &v;
                }
                powers[i][n] = v;
            }
            let target = if n == 1 {
                Rational::one()
            } else {
                Rational::zero()
            };
            b[n] = (target - s) * &f1_inv;
            powers[1][n] = b[n].clone();
        }
        Ok(Self { coeffs: b })
    }

    pub fn is_zero_series(&self) -> bool {
        self.order() == Order::Zero
    }
}

/// Parses `p`, `p/q` (surrounding whitespace allowed).
pub fn parse_rational(token: &str) -> Result<Rational> {
    let t = token.trim();
    let bad = || Error::Parse(format!("malformed rational {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.prec() + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let p = self.prec().min(rhs.prec());
        Series::from_fn(p, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let p = self.prec().min(rhs.prec());
        Series::from_fn(p, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let p = self.prec().min(rhs.prec());
        let mut out = vec![Rational::zero(); p + 1];
        for (i, a) in self.coeffs[..=p].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=p - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], p: usize) -> Series {
        Series::from_ints(c, p).unwrap()
    }

    fn catalan(p: usize) -> Series {
        // brute force from C = 1 + t C^2
        let mut c = vec![int(1)];
        for n in 1..=p {
            let mut v = int(0);
            for j in 0..n {
                v += &c[j] * &c[n - 1 - j];
            }
            c.push(v);
        }
        Series::new(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&s(&[1, 1], 5) + &s(&[1, -1], 5), s(&[2], 5));
        let a = s(&[3, 1, 4, 1, 5], 6);
        assert_eq!(&Series::zero(6) + &a, a);
        assert_eq!(&s(&[1, 2, 3], 4) + &s(&[0, 1, 1], 4), s(&[1, 3, 4], 4));
    }

    #[test]
    fn add_takes_min_precision() {
        let r = &s(&[1], 3) + &s(&[1], 7);
        assert_eq!(r.prec(), 3);
    }

    #[test]
    fn mul_examples() {
        let c = catalan(5);
        assert_eq!(
            (&c * &c).coeffs()[..5],
            [int(1), int(2), int(5), int(14), int(42)]
        );
        let a = s(&[2, -1, 7], 8);
        assert_eq!(&a * &Series::one(8), a);
        assert_eq!(
            &s(&[1, -1], 10) * &Series::geometric(int(1), 10),
            Series::one(10)
        );
    }

    #[test]
    fn order_examples() {
        assert_eq!(s(&[1, 1], 4).order(), Order::Finite(0));
        assert_eq!(s(&[0, 0, 1, 1], 4).order(), Order::Finite(2));
        assert_eq!(Series::zero(10).order(), Order::Zero);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            s(&[1, -1], 9).reciprocal().unwrap(),
            Series::geometric(int(1), 9)
        );
        assert_eq!(Series::one(4).reciprocal().unwrap(), Series::one(4));
        assert!(matches!(
            Series::t(4).reciprocal(),
            Err(Error::NotAUnit { .. })
        ));
        assert!(matches!(
            Series::zero(4).reciprocal(),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn compose_examples() {
        let p = 12;
        let h = Series::geometric(int(1), p);
        let f = &Series::t(p) * &h;
        // 1/(1 - t/(1-t)) = (1-t)/(1-2t) = 1 + t + 2t^2 + 4t^3 + ...
        let expected = &s(&[1, -1], p) * &Series::geometric(int(2), p);
        assert_eq!(&expected.coeffs()[..4], &[int(1), int(1), int(2), int(4)]);
        assert_eq!(h.compose(&f).unwrap(), expected);
        assert_eq!(h.compose(&Series::t(p)).unwrap(), h);

        let c = catalan(p);
        let inner = s(&[0, 1, -1], p);
        let composed = c.compose(&inner).unwrap();
        assert_eq!(&s(&[1, -1], p) * &composed, Series::one(p));
    }

    #[test]
    fn compose_rejects_unit_inner() {
        let h = Series::geometric(int(1), 5);
        assert_eq!(h.compose(&Series::one(5)), Err(Error::CompositionUndefined));
    }

    #[test]
    fn compositional_inverse_examples() {
        let p = 15;
        let f = (&Series::t(p) * &Series::geometric(int(1), p)).cap(p);
        let fbar = f.compositional_inverse().unwrap();
        assert_eq!(fbar, &Series::t(p) * &Series::geometric(int(-1), p));
        assert_eq!(f.compose(&fbar).unwrap(), Series::t(p));

        assert_eq!(Series::t(p).compositional_inverse().unwrap(), Series::t(p));

        let tc = catalan(p).mul_t_pow(1).cap(p);
        assert_eq!(tc.compositional_inverse().unwrap(), s(&[0, 1, -1], p));
    }

    #[test]
    fn compositional_inverse_requires_order_one() {
        for bad in [s(&[1, 1], 5), s(&[0, 0, 1], 5), Series::zero(5)] {
            assert!(matches!(
                bad.compositional_inverse(),
                Err(Error::NoCompositionalInverse { .. })
            ));
        }
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(s(&[1, 1, 1], 2).truncate(1).unwrap(), s(&[1, 1], 1));
        let h = s(&[4, 0, 2], 6);
        assert_eq!(h.truncate(6).unwrap(), h);
        assert!(matches!(
            h.truncate(7),
            Err(Error::InsufficientPrecision {
                requested: 7,
                available: 6
            })
        ));
        let g = Series::geometric(int(1), 8);
        let q = g.tail_quotient().unwrap().truncate(4 - 2).unwrap();
        assert_eq!(q, s(&[1, 1, 1], 2));
    }

    #[test]
    fn literal_parsing() {
        let a = Series::parse_literal("1, 1/2, -3/4", 4).unwrap();
        assert_eq!(
            a.coeffs(),
            &[int(1), frac(1, 2), frac(-3, 4), int(0), int(0)]
        );
        assert!(matches!(
            Series::parse_literal("1, x", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Series::parse_literal("1/0", 4),
            Err(Error::Parse(_))
        ));
        assert!(Series::parse_literal("1,2,3", 1).is_err());
    }

    #[test]
    #[should_panic]
    fn reading_past_precision_panics() {
        let _ = s(&[1], 3).coeff(4);
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
