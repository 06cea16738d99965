//! Named series, arrays and coefficient tables: Catalan and Fuss-Catalan
//! numbers, the Pascal, rook, remainder and Laguerre triangles, and the
//! rook-polynomial expansion.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Triangle;
use crate::riordan::RiordanPair;
use crate::series::{frac, int, Rational, Series};

/// `binomial(top, k)` for any integer `top` and `k >= 0` (zero for `k < 0`).
pub fn binomial(top: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut r = Rational::one();
    for i in 0..k {
        r = r * int(top - i) / int(i + 1);
    }
    r
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// Falling factorial `(n)_j = n (n-1) ... (n-j+1)`.
pub fn falling(n: i64, j: usize) -> Rational {
    (0..j as i64).fold(Rational::one(), |acc, i| acc * int(n - i))
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn check_nonneg(n: i64, k: i64) -> Result<()> {
    if n < 0 || k < 0 {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(())
}

/// `C(n,k) = [t^n] C(t)^k = k/(2n+k) binomial(2n+k, n)`, with `C(0,0) = 1`.
pub fn catalan_power_coeff(n: i64, k: i64) -> Result<Rational> {
    check_nonneg(n, k)?;
    if k == 0 {
        return Ok(if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    Ok(frac(k, 2 * n + k) * binomial(2 * n + k, n))
}

/// `F_m(n, r) = r/(mn+r) binomial(mn+r, n)`.
pub fn fuss_catalan(m: i64, n: i64, r: i64) -> Result<Rational> {
    if m < 1 || n < 0 {
        return Err(Error::IndexOutOfRange { n, k: m });
    }
    let top = m * n + r;
    if top == 0 {
        return Err(Error::Singular(format!("F_{m}({n},{r}): mn + r = 0")));
    }
    Ok(frac(r, top) * binomial(top, n))
}

/// `F_m(t) = sum_n F_m(n, 1) t^n`, the solution of `F = 1 + t F^m`.
pub fn fuss_series(m: usize, prec: usize) -> Result<Series> {
    if m == 0 {
        return Err(Error::IndexOutOfRange { n: 0, k: 0 });
    }
    let coeffs = (0..=prec)
        .map(|n| fuss_catalan(m as i64, n as i64, 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::new(coeffs))
}

pub fn catalan_series(prec: usize) -> Series {
    fuss_series(2, prec).expect("m = 2 is valid")
}

fn check_triangle_index(n: i64, k: i64, max_k: i64) -> Result<()> {
    if n < 0 || k < 0 || k > max_k {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(())
}

/// `r_{n,k} = (n!/k!) binomial(n,k)`, the number of ways to place `n - k`
/// non-attacking rooks on an `n x n` board; `r_n(x) = sum_k r_{n,k} x^{n-k}`.
pub fn rook_entry(n: i64, k: i64) -> Result<Rational> {
    check_triangle_index(n, k, n)?;
    Ok(factorial(n as usize) / factorial(k as usize) * binomial(n, k))
}

/// Coefficients of the remainder polynomial `r(E_n, x) = r_{n+1}(x) - x r_n(x)`:
/// `E_{n,k} = (n^2+n+k)/(n-k+1) (n-k)! binomial(n,k)^2` for `k <= n`, `E_{n,n+1} = 1`.
pub fn remainder_entry(n: i64, k: i64) -> Result<Rational> {
    check_triangle_index(n, k, n + 1)?;
    if k == n + 1 {
        return Ok(Rational::one());
    }
    let b = binomial(n, k);
    Ok(frac(n * n + n + k, n - k + 1) * factorial((n - k) as usize) * &b * &b)
}

/// `L_{n,k} = (-1)^{n-k}/(n-k)! binomial(n,k)`.
pub fn laguerre_entry(n: i64, k: i64) -> Result<Rational> {
    check_triangle_index(n, k, n)?;
    let d = (n - k) as usize;
    Ok(sign(d) / factorial(d) * binomial(n, k))
}

pub fn rook_triangle(n: usize) -> Triangle {
    Triangle::from_fn(n, |r, c| rook_entry(r as i64, c as i64).expect("in range"))
}

pub fn laguerre_triangle(n: usize) -> Triangle {
    Triangle::from_fn(n, |r, c| {
        laguerre_entry(r as i64, c as i64).expect("in range")
    })
}

/// Rows `0..n` of the remainder table; row `r` has `r + 2` entries.
pub fn remainder_table(n: usize) -> Vec<Vec<Rational>> {
    (0..n as i64)
        .map(|r| {
            (0..=r + 1)
                .map(|c| remainder_entry(r, c).expect("in range"))
                .collect()
        })
        .collect()
}

/// Dense polynomial, coefficients by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    /// `sum_k row[k] x^{deg - k}`: the row-to-polynomial convention of the rook,
    /// remainder and Laguerre polynomials.
    pub fn from_descending_row(row: &[Rational], deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (k, c) in row.iter().enumerate() {
            coeffs[deg - k] += c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        Self { coeffs }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn mul_x_pow(&self, k: usize) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{d}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `r_n(x) = sum_{k=0}^n r_{n,k} x^{n-k}`.
pub fn rook_poly(n: usize) -> Polynomial {
    let row: Vec<Rational> = (0..=n as i64)
        .map(|k| rook_entry(n as i64, k).unwrap())
        .collect();
    Polynomial::from_descending_row(&row, n)
}

/// `r(E_n, x) = sum_{k=0}^{n+1} E_{n,k} x^{n+1-k}`.
pub fn remainder_poly(n: usize) -> Polynomial {
    let row: Vec<Rational> = (0..=n as i64 + 1)
        .map(|k| remainder_entry(n as i64, k).unwrap())
        .collect();
    Polynomial::from_descending_row(&row, n + 1)
}

/// `L_n(x) = sum_{k=0}^n L_{n,k} x^{n-k}`.
pub fn laguerre_poly(n: usize) -> Polynomial {
    let row: Vec<Rational> = (0..=n as i64)
        .map(|k| laguerre_entry(n as i64, k).unwrap())
        .collect();
    Polynomial::from_descending_row(&row, n)
}

/// Checks, for the given `n`:
/// the recursion `r_{n+1}(x) = x r_n(x) + r(E_n, x)`,
/// its coefficient form `r_{n+1,k} = r_{n,k} + E_{n,k}` for `0 <= k <= n+1`,
/// and the telescoped expansion `r_{n+1}(x) = sum_{k=0}^n x^{n-k} r(E_k, x) + x^{n+1}`.
pub fn rook_poly_expansion_check(n: usize) -> bool {
    let next = rook_poly(n + 1);
    let recursion = rook_poly(n).mul_x_pow(1).add(&remainder_poly(n)) == next;

    let ni = n as i64;
    let matrix_form = (0..=ni + 1).all(|k| {
        let r_nk = if k <= ni {
            rook_entry(ni, k).unwrap()
        } else {
            Rational::zero()
        };
        rook_entry(ni + 1, k).unwrap() == r_nk + remainder_entry(ni, k).unwrap()
    });

    let telescoped = (0..=n)
        .map(|k| remainder_poly(k).mul_x_pow(n - k))
        .fold(Polynomial::monomial(n + 1), |acc, p| acc.add(&p))
        == next;

    recursion && matrix_form && telescoped
}

/// Named arrays accepted by [`named_riordan`], sorted.
pub const ARRAY_NAMES: &[&str] = &["catalan_bell", "fuss_bell:<m>", "identity", "pascal"];

/// Named series accepted by [`named_series`], sorted.
pub const SERIES_NAMES: &[&str] = &["catalan", "fuss:<m>", "geometric", "one", "ternary"];

/// Named weights understood by the weighted constructions, sorted.
pub const WEIGHT_NAMES: &[&str] = &["factorial", "laguerre", "power:<k>"];

/// Every registry entry as `kind:name`, sorted.
pub fn registry_listing() -> Vec<String> {
    let mut out: Vec<String> = ARRAY_NAMES
        .iter()
        .map(|n| format!("array {n}"))
        .chain(SERIES_NAMES.iter().map(|n| format!("series {n}")))
        .chain(WEIGHT_NAMES.iter().map(|n| format!("weight {n}")))
        .collect();
    out.sort();
    out
}

fn split_param(name: &str) -> (&str, Option<&str>) {
    match name.split_once(':') {
        Some((base, p)) => (base.trim(), Some(p.trim())),
        None => (name.trim(), None),
    }
}

fn parse_m(name: &str, p: Option<&str>) -> Result<usize> {
    let p =
        p.ok_or_else(|| Error::UnknownName(format!("{name} needs a parameter, e.g. {name}:3")))?;
    match p.parse::<usize>() {
        Ok(m) if m >= 1 => Ok(m),
        _ => Err(Error::Parse(format!("bad parameter {p:?} for {name}"))),
    }
}

/// Looks up `pascal`, `identity`, `catalan_bell` or `fuss_bell:m`.
pub fn named_riordan(name: &str, prec: usize) -> Result<RiordanPair> {
    let (base, param) = split_param(name);
    let geo = Series::geometric(int(1), prec);
    match (base, param) {
        ("pascal", None) => RiordanPair::new(geo.clone(), &Series::t(prec) * &geo),
        ("identity", None) => Ok(RiordanPair::identity(prec)),
        ("catalan_bell", None) => bell_of(catalan_series(prec)),
        ("fuss_bell", p) => bell_of(fuss_series(parse_m(base, p)?, prec)?),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn bell_of(g: Series) -> Result<RiordanPair> {
    let p = g.prec();
    let f = g.mul_t_pow(1).cap(p);
    RiordanPair::new(g, f)
}

/// Looks up `catalan`, `fuss:m`, `ternary`, `geometric` (`1/(1-t)`) or `one`.
pub fn named_series(name: &str, prec: usize) -> Result<Series> {
    let (base, param) = split_param(name);
    match (base, param) {
        ("catalan", None) => Ok(catalan_series(prec)),
        ("ternary", None) => fuss_series(3, prec),
        ("fuss", p) => fuss_series(parse_m(base, p)?, prec),
        ("geometric", None) => Ok(Series::geometric(int(1), prec)),
        ("one", None) => Ok(Series::one(prec)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Ten arrays spanning the named subgroups, used as a fixed test corpus.
pub fn reference_corpus(prec: usize) -> Vec<(String, RiordanPair)> {
    let geo = |c: i64| Series::geometric(int(c), prec);
    let t = Series::t(prec);
    let poly = |c: &[i64]| Series::from_ints(c, prec).expect("fits");
    let pascal_f = &t * &geo(1);
    let mk = |name: &str, g: Series, f: Series| {
        (
            name.to_string(),
            RiordanPair::new(g, f).expect("valid corpus pair"),
        )
    };
    vec![
        ("pascal".into(), named_riordan("pascal", prec).unwrap()),
        ("identity".into(), RiordanPair::identity(prec)),
        (
            "catalan_bell".into(),
            named_riordan("catalan_bell", prec).unwrap(),
        ),
        (
            "fuss_bell:3".into(),
            named_riordan("fuss_bell:3", prec).unwrap(),
        ),
        mk("appell_geometric", geo(1), t.clone()),
        mk("lagrange_pascal", Series::one(prec), pascal_f.clone()),
        mk(
            "derivative_pascal",
            pascal_f.derivative().unwrap().cap(prec - 1),
            pascal_f.cap(prec - 1),
        ),
        mk("pascal_2", geo(2), &t * &geo(2)),
        mk("checkerboard", poly(&[1, 0, 1]), poly(&[0, 1, 0, -1])),
        mk("mixed", poly(&[1, -2, 3, 1]), poly(&[0, 2, -1, 0, 1])),
    ]
}
