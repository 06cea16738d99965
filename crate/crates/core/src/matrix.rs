//! Finite lower-triangular matrices with exact rational entries.
//!
//! One representation serves Riordan triangles, quasi-Riordan block
//! matrices and weighted triangles.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{parse_rational, Rational};

/// `n x n` lower-triangular matrix; row `r` stores columns `0..=r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
}

/// The quasi-Riordan block matrices share the triangle representation.
pub type BlockMatrix = Triangle;

impl Triangle {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (0..n).map(|r| (0..=r).map(|c| f(r, c)).collect()).collect();
        Self { rows }
    }

    pub fn try_from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<Rational>,
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = Vec::with_capacity(r + 1);
            for c in 0..=r {
                row.push(f(r, c)?);
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    /// Builds from ragged rows; row `r` must have exactly `r + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {}",
                    row.len(),
                    r + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    /// Builds from a full square matrix, rejecting nonzero entries above the diagonal.
    pub fn from_square(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut out = Vec::with_capacity(n);
        for (r, mut row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} entries in a {n}x{n} matrix",
                    row.len()
                )));
            }
            if row[r + 1..].iter().any(|x| !x.is_zero()) {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has a nonzero entry above the diagonal"
                )));
            }
            row.truncate(r + 1);
            out.push(row);
        }
        Ok(Self { rows: out })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.rows[r]
    }

    /// Entry `(r, c)`; `None` above the diagonal or outside the matrix.
    pub fn get(&self, r: usize, c: usize) -> Option<&Rational> {
        self.rows.get(r).and_then(|row| row.get(c))
    }

    /// Entry `(r, c)` with the structural zeros filled in. Panics outside the matrix.
    pub fn entry(&self, r: usize, c: usize) -> Rational {
        assert!(
            r < self.order() && c < self.order(),
            "({r}, {c}) outside {0}x{0}",
            self.order()
        );
        self.get(r, c).cloned().unwrap_or_else(Rational::zero)
    }

    /// Column `c` read from row `c` down.
    pub fn column(&self, c: usize) -> Vec<Rational> {
        (c..self.order()).map(|r| self.rows[r][c].clone()).collect()
    }

    /// Leading principal submatrix of order `m`.
    pub fn leading(&self, m: usize) -> Result<Self> {
        if m > self.order() {
            return Err(Error::DimensionMismatch(format!(
                "cannot take order {m} leading block of order {} matrix",
                self.order()
            )));
        }
        Ok(Self {
            rows: self.rows[..m].to_vec(),
        })
    }

    pub fn mul(&self, other: &Triangle) -> Result<Triangle> {
        if self.order() != other.order() {
            return Err(Error::DimensionMismatch(format!(
                "{0}x{0} times {1}x{1}",
                self.order(),
                other.order()
            )));
        }
        Ok(Self::from_fn(self.order(), |r, c| {
            let mut s = Rational::zero();
            for j in c..=r {
                let a = &self.rows[r][j];
                let b = &other.rows[j][c];
                if !a.is_zero() && !b.is_zero() {
                    s += a * b;
                }
            }
            s
        }))
    }

    /// Inverse by forward substitution; every diagonal entry must be nonzero.
    pub fn inverse(&self) -> Result<Triangle> {
        let n = self.order();
        let mut inv: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for r in 0..n {
            let d = &self.rows[r][r];
            if d.is_zero() {
                return Err(Error::Singular(format!("zero diagonal entry at row {r}")));
            }
            let d_inv = d.recip();
            let mut row = vec![Rational::zero(); r + 1];
            row[r] = d_inv.clone();
            for c in (0..r).rev() {
                let mut s = Rational::zero();
                for j in c..r {
                    let a = &self.rows[r][j];
                    if !a.is_zero() && !inv[j][c].is_zero() {
                        s += a * &inv[j][c];
                    }
                }
                row[c] = -(s * &d_inv);
            }
            inv.push(row);
        }
        Ok(Self { rows: inv })
    }

    /// Matrix times column vector; the vector must have at least `order` entries.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() < self.order() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for order {} matrix",
                v.len(),
                self.order()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `[1] ⊕ self`: one more row and column, `1` in the corner, zero border.
    pub fn direct_sum_one(&self) -> Triangle {
        let n = self.order() + 1;
        Self::from_fn(n, |r, c| match (r, c) {
            (0, 0) => Rational::one(),
            (_, 0) => Rational::zero(),
            _ => self.rows[r - 1][c - 1].clone(),
        })
    }

    /// Row-major CSV, one row per line, zeros above the diagonal written out.
    pub fn to_csv(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        for r in 0..n {
            let line: Vec<String> = (0..n).map(|c| self.entry(r, c).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_square(rows)
    }

    /// JSON array of arrays of strings, full square, row 0 first.
    pub fn to_json_value(&self) -> serde_json::Value {
        let n = self.order();
        serde_json::Value::Array(
            (0..n)
                .map(|r| {
                    serde_json::Value::Array(
                        (0..n)
                            .map(|c| serde_json::Value::String(self.entry(r, c).to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = raw
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_square(rows)
    }
}
