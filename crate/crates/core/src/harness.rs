//! Exact comparison of two entry generators over a triangular index range.
//!
//! [`verify`] walks `(n, k)` in lexicographic order and stops at the first
//! mismatch or evaluation error. [`builtin_suite`] runs every catalogued
//! identity at its default range.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::catalog::{
    binomial, catalan_power_coeff, factorial, falling, fuss_series, laguerre_entry, named_riordan,
    remainder_entry, remainder_poly, rook_entry, rook_poly, Polynomial,
};
use crate::error::Result;
use crate::matrix::Triangle;
use crate::quasi::{direct_sum_one, QuasiRiordan};
use crate::riordan::RiordanPair;
use crate::series::{int, Rational, Series};
use crate::weighted::{
    big_c_transform, c_transform, generalized_laguerre, generalized_rook, WeightSeq, WeightTri,
    WeightedTriangle,
};

type EvalFn = dyn Fn(usize, usize) -> Result<Rational> + Send + Sync;

/// One side of an identity, as a function of `(n, k)`.
pub struct EntryGenerator {
    pub description: String,
    eval: Box<EvalFn>,
}

impl EntryGenerator {
    pub fn new(
        description: impl Into<String>,
        eval: impl Fn(usize, usize) -> Result<Rational> + Send + Sync + 'static,
    ) -> Self {
        Self {
            description: description.into(),
            eval: Box::new(eval),
        }
    }

    /// Generator reading a precomputed triangle; indices outside it are an error.
    pub fn from_triangle(description: impl Into<String>, t: Triangle) -> Self {
        Self::new(description, move |n, k| {
            t.get(n, k)
                .cloned()
                .ok_or(crate::error::Error::IndexOutOfRange {
                    n: n as i64,
                    k: k as i64,
                })
        })
    }

    pub fn eval(&self, n: usize, k: usize) -> Result<Rational> {
        (self.eval)(n, k)
    }
}

impl fmt::Debug for EntryGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EntryGenerator")
            .field("description", &self.description)
            .finish_non_exhaustive()
    }
}

/// Which columns are checked in row `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KPolicy {
    /// `0 <= k <= n`
    All,
    /// `1 <= k <= n`
    Positive,
    /// `1 <= k < n`
    PositiveBelowDiagonal,
    /// `k = 0`
    ColumnZero,
    /// `0 <= k <= n + 1`
    Extended,
}

impl KPolicy {
    pub fn columns(self, n: usize) -> std::ops::Range<usize> {
        match self {
            KPolicy::All => 0..n + 1,
            KPolicy::Positive => 1..n + 1,
            KPolicy::PositiveBelowDiagonal => 1..n,
            KPolicy::ColumnZero => 0..1,
            KPolicy::Extended => 0..n + 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexRange {
    pub n_min: usize,
    pub n_max: usize,
    pub k_policy: KPolicy,
}

impl IndexRange {
    /// `0 <= k <= n <= n_max`.
    pub fn all(n_max: usize) -> Self {
        Self {
            n_min: 0,
            n_max,
            k_policy: KPolicy::All,
        }
    }

    pub fn new(n_min: usize, n_max: usize, k_policy: KPolicy) -> Self {
        Self {
            n_min,
            n_max,
            k_policy,
        }
    }

    /// Every index point in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (self.n_min..=self.n_max).flat_map(move |n| self.k_policy.columns(n).map(move |k| (n, k)))
    }
}

fn ser_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Verified,
    Counterexample {
        n: usize,
        k: usize,
        #[serde(serialize_with = "ser_rational")]
        lhs: Rational,
        #[serde(serialize_with = "ser_rational")]
        rhs: Rational,
    },
    /// A generator failed; `at` is `None` when the generators could not be built.
    Inconclusive {
        at: Option<(usize, usize)>,
        error: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: IndexRange,
    #[serde(flatten)]
    pub status: Status,
    #[serde(rename = "wall_time_ms", serialize_with = "ser_millis")]
    pub wall_time: Duration,
}

/// Equality of everything except the wall time.
impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity && self.range == other.range && self.status == other.status
    }
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.identity)?;
        match &self.status {
            Status::Verified => write!(f, "verified for n <= {}", self.range.n_max),
            Status::Counterexample { n, k, lhs, rhs } => {
                write!(f, "counterexample at ({n}, {k}): {lhs} != {rhs}")
            }
            Status::Inconclusive {
                at: Some((n, k)),
                error,
            } => {
                write!(f, "inconclusive at ({n}, {k}): {error}")
            }
            Status::Inconclusive { at: None, error } => write!(f, "inconclusive: {error}"),
        }
    }
}

/// Checks `lhs(n, k) == rhs(n, k)` over `range`, stopping at the first failure.
pub fn verify(
    identity: &str,
    lhs: &EntryGenerator,
    rhs: &EntryGenerator,
    range: IndexRange,
) -> VerificationReport {
    let start = Instant::now();
    let mut status = Status::Verified;
    for (n, k) in range.points() {
        let pair = lhs.eval(n, k).and_then(|l| rhs.eval(n, k).map(|r| (l, r)));
        match pair {
            Ok((l, r)) if l == r => {}
            Ok((lhs, rhs)) => {
                status = Status::Counterexample { n, k, lhs, rhs };
                break;
            }
            Err(e) => {
                status = Status::Inconclusive {
                    at: Some((n, k)),
                    error: e.to_string(),
                };
                break;
            }
        }
    }
    VerificationReport {
        identity: identity.to_string(),
        range,
        status,
        wall_time: start.elapsed(),
    }
}

/// 0 when all verified, 1 on any counterexample, otherwise 2 if anything was inconclusive.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports
        .iter()
        .any(|r| matches!(r.status, Status::Counterexample { .. }))
    {
        1
    } else if reports
        .iter()
        .any(|r| matches!(r.status, Status::Inconclusive { .. }))
    {
        2
    } else {
        0
    }
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

type Builder = Box<dyn FnOnce(usize) -> Result<(EntryGenerator, EntryGenerator)>>;

/// A named identity with its default range, built lazily.
struct Check {
    name: String,
    range: IndexRange,
    build: Builder,
}

impl Check {
    fn new(
        name: impl Into<String>,
        range: IndexRange,
        build: impl FnOnce(usize) -> Result<(EntryGenerator, EntryGenerator)> + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            range,
            build: Box::new(build),
        }
    }

    fn run(self, limit: Option<usize>) -> VerificationReport {
        let mut range = self.range;
        if let Some(l) = limit {
            range.n_max = range.n_max.min(l);
        }
        let start = Instant::now();
        match (self.build)(range.n_max) {
            Ok((lhs, rhs)) => {
                let mut report = verify(&self.name, &lhs, &rhs, range);
                report.wall_time = start.elapsed();
                report
            }
            Err(e) => VerificationReport {
                identity: self.name,
                range,
                status: Status::Inconclusive {
                    at: None,
                    error: e.to_string(),
                },
                wall_time: start.elapsed(),
            },
        }
    }
}

fn gen(
    description: &str,
    eval: impl Fn(usize, usize) -> Result<Rational> + Send + Sync + 'static,
) -> EntryGenerator {
    EntryGenerator::new(description, eval)
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Rook entry with `r_{n,k} = 0` for `k > n`.
fn rook(n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Ok(Rational::zero());
    }
    rook_entry(n as i64, k as i64)
}

fn laguerre(n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Ok(Rational::zero());
    }
    laguerre_entry(n as i64, k as i64)
}

fn binom(n: usize, k: usize) -> Rational {
    binomial(n as i64, k as i64)
}

fn poly_coeff(p: &Polynomial, deg: usize, k: usize) -> Rational {
    // coefficient of x^{deg-k}
    if k > deg {
        Rational::zero()
    } else {
        p.coeff(deg - k)
    }
}

const FUSS_M: std::ops::RangeInclusive<i64> = 1..=5;
const FACTORIZATION_PAIRS: &[&str] = &["pascal", "identity", "catalan_bell", "fuss_bell:3"];
const WEIGHTED_PAIRS: &[&str] = &["pascal", "catalan_bell"];

fn weighted_checks(out: &mut Vec<Check>) {
    #[derive(Clone, Copy)]
    enum Side {
        HorizontalColumns,
        HorizontalZero,
        Vertical,
    }
    let n_max = 20;
    let build = |pair: &'static str, tri: bool, side: Side| {
        move |n_max: usize| -> Result<(EntryGenerator, EntryGenerator)> {
            let order = n_max + 1;
            let ra = named_riordan(pair, order)?;
            let x: WeightedTriangle = if tri {
                big_c_transform(&ra, &WeightTri::laguerre(order), order)?
            } else {
                c_transform(&ra, &WeightSeq::factorial(order), order)?
            };
            let recursed = match side {
                Side::HorizontalColumns | Side::HorizontalZero => {
                    let h = x.horizontal()?;
                    Triangle::try_from_fn(order, |n, k| {
                        if n == 0 {
                            Ok(Rational::zero())
                        } else {
                            h.entry(n, k)
                        }
                    })?
                }
                Side::Vertical => {
                    let v = x.vertical();
                    Triangle::try_from_fn(order, |n, k| {
                        if k == 0 {
                            Ok(Rational::zero())
                        } else {
                            v.entry(n, k)
                        }
                    })?
                }
            };
            Ok((
                EntryGenerator::from_triangle("weighted transform", x.entries().clone()),
                EntryGenerator::from_triangle(
                    "recursion from the previous row or column",
                    recursed,
                ),
            ))
        }
    };
    for &pair in WEIGHTED_PAIRS {
        for (tri, weight) in [(false, "factorial"), (true, "laguerre")] {
            let class = if tri { "C" } else { "c" };
            out.push(Check::new(
                format!("{class}_horizontal_recursion[{pair};{weight}]"),
                IndexRange::new(1, n_max, KPolicy::Positive),
                build(pair, tri, Side::HorizontalColumns),
            ));
            out.push(Check::new(
                format!("{class}_horizontal_column_zero[{pair};{weight}]"),
                IndexRange::new(1, n_max, KPolicy::ColumnZero),
                build(pair, tri, Side::HorizontalZero),
            ));
            out.push(Check::new(
                format!("{class}_vertical_recursion[{pair};{weight}]"),
                IndexRange::new(1, n_max, KPolicy::Positive),
                build(pair, tri, Side::Vertical),
            ));
        }
    }
}

fn checks() -> Vec<Check> {
    let mut out = Vec::new();

    for m in FUSS_M {
        out.push(Check::new(
            format!("fuss_functional_equation[m={m}]"),
            IndexRange::new(0, 40, KPolicy::ColumnZero),
            move |_| {
                let prec = 40;
                let f = fuss_series(m as usize, prec)?;
                let rhs = &Series::one(prec) + &f.pow(m as usize).mul_t_pow(1);
                Ok((
                    gen("F_m", move |n, _| Ok(f.try_coeff(n)?.clone())),
                    gen("1 + t F_m^m", move |n, _| Ok(rhs.try_coeff(n)?.clone())),
                ))
            },
        ));
    }

    out.push(Check::new(
        "pascal_vertical_recursion",
        IndexRange::new(0, 30, KPolicy::Positive),
        |_| {
            Ok((
                gen("binomial(n,k)", |n, k| Ok(binom(n, k))),
                gen("sum_j binomial(n-j,k-1)", |n, k| {
                    Ok((1..=n - k + 1).map(|j| binom(n - j, k - 1)).sum())
                }),
            ))
        },
    ));

    for m in FUSS_M {
        out.push(Check::new(
            format!("fuss_power_convolution[m={m}]"),
            IndexRange::all(25),
            move |n_max| {
                // summand factors: 1/(mj+1) binomial(mj+1, j) and k/(mr+k) binomial(mr+k, r)
                let first: Vec<Rational> = (0..=n_max as i64)
                    .map(|j| binomial(m * j + 1, j) / int(m * j + 1))
                    .collect();
                let second: Vec<Vec<Rational>> = (0..=n_max as i64)
                    .map(|r| {
                        (0..=n_max as i64)
                            .map(|k| {
                                if m * r + k == 0 {
                                    Rational::one()
                                } else {
                                    int(k) / int(m * r + k) * binomial(m * r + k, r)
                                }
                            })
                            .collect()
                    })
                    .collect();
                Ok((
                    gen(
                        "(k+1)/(m(n-k)+k+1) binomial(m(n-k)+k+1, n-k)",
                        move |n, k| {
                            let (n, k) = (n as i64, k as i64);
                            let top = m * (n - k) + k + 1;
                            Ok(int(k + 1) / int(top) * binomial(top, n - k))
                        },
                    ),
                    gen("convolution of binomial products", move |n, k| {
                        Ok((0..=n - k).map(|j| &first[j] * &second[n - k - j][k]).sum())
                    }),
                ))
            },
        ));
    }

    out.push(Check::new(
        "catalan_power_convolution_binomial",
        IndexRange::all(40),
        |n_max| {
            let first: Vec<Rational> = (0..=n_max as i64)
                .map(|j| binomial(2 * j + 1, j) / int(2 * j + 1))
                .collect();
            let second: Vec<Vec<Rational>> = (0..=n_max as i64)
                .map(|r| {
                    (0..=n_max as i64)
                        .map(|k| {
                            if 2 * r + k == 0 {
                                Rational::one()
                            } else {
                                int(k) / int(2 * r + k) * binomial(2 * r + k, r)
                            }
                        })
                        .collect()
                })
                .collect();
            Ok((
                gen("(k+1)/(2n-k+1) binomial(2n-k+1, n-k)", |n, k| {
                    let (n, k) = (n as i64, k as i64);
                    Ok(int(k + 1) / int(2 * n - k + 1) * binomial(2 * n - k + 1, n - k))
                }),
                gen("convolution of binomial products", move |n, k| {
                    Ok((0..=n - k).map(|j| &first[j] * &second[n - k - j][k]).sum())
                }),
            ))
        },
    ));

    out.push(Check::new(
        "catalan_power_convolution",
        IndexRange::all(40),
        |n_max| {
            let table = (0..=n_max as i64)
                .map(|r| {
                    (0..=n_max as i64 + 1)
                        .map(|k| catalan_power_coeff(r, k))
                        .collect()
                })
                .collect::<Result<Vec<Vec<Rational>>>>()?;
            let lhs_table = table.clone();
            Ok((
                gen("C(n-k, k+1)", move |n, k| {
                    Ok(lhs_table[n - k][k + 1].clone())
                }),
                gen("sum_j C(j,1) C(n-j-k, k)", move |n, k| {
                    Ok((0..=n - k)
                        .map(|j| &table[j][1] * &table[n - j - k][k])
                        .sum())
                }),
            ))
        },
    ));

    for &name in FACTORIZATION_PAIRS {
        out.push(Check::new(
            format!("riordan_factorization[{name}]"),
            IndexRange::all(24),
            move |n_max| {
                let ra = named_riordan(name, n_max + 1)?;
                let q = QuasiRiordan::from_riordan(&ra);
                let tri = ra.triangle(n_max + 1)?;
                // column k of [1] ⊕ (g,f) is t g f^{k-1}; [g,f] maps it to column k of (g,f)
                let mut cols = vec![q.apply(&Series::one(ra.prec()))?];
                let mut gfk = ra.g().clone();
                for _ in 1..=n_max {
                    cols.push(q.apply(&gfk.mul_t_pow(1))?);
                    gfk = &gfk * ra.f();
                }
                Ok((
                    EntryGenerator::from_triangle("(g,f)", tri),
                    gen(
                        "[g,f] acting on the columns of [1] ⊕ (g,f)",
                        move |n, k| Ok(cols[k].try_coeff(n)?.clone()),
                    ),
                ))
            },
        ));
        out.push(Check::new(
            format!("riordan_block_factorization[{name}]"),
            IndexRange::all(24),
            move |n_max| {
                let order = n_max + 1;
                let ra = named_riordan(name, order)?;
                let lhs = ra.triangle(order)?;
                let rhs = QuasiRiordan::from_riordan(&ra)
                    .matrix(order)?
                    .mul(&direct_sum_one(&ra.triangle(order - 1)?))?;
                Ok((
                    EntryGenerator::from_triangle("(g,f)_n", lhs),
                    EntryGenerator::from_triangle("[g,f]_n ([1] ⊕ (g,f)_{n-1})", rhs),
                ))
            },
        ));
    }

    weighted_checks(&mut out);

    out.push(Check::new(
        "rook_horizontal_recursion",
        IndexRange::new(1, 30, KPolicy::Positive),
        |_| {
            Ok((
                gen("r_{n,k}", rook),
                gen("n r_{n-1,k} + (n/k) r_{n-1,k-1}", |n, k| {
                    Ok(int(n as i64) * rook(n - 1, k)?
                        + int(n as i64) / int(k as i64) * rook(n - 1, k - 1)?)
                }),
            ))
        },
    ));
    out.push(Check::new(
        "rook_column_zero_recursion",
        IndexRange::new(1, 30, KPolicy::ColumnZero),
        |_| {
            Ok((
                gen("r_{n,0}", rook),
                gen("n r_{n-1,0}", |n, _| Ok(int(n as i64) * rook(n - 1, 0)?)),
            ))
        },
    ));
    out.push(Check::new(
        "rook_vertical_recursion",
        IndexRange::new(1, 30, KPolicy::Positive),
        |_| {
            Ok((
                gen("r_{n,k}", rook),
                gen("sum_j (n)_j/k r_{n-j,k-1}", |n, k| {
                    (1..=n - k + 1)
                        .map(|j| Ok(falling(n as i64, j) / int(k as i64) * rook(n - j, k - 1)?))
                        .sum()
                }),
            ))
        },
    ));
    out.push(Check::new(
        "binomial_square_horizontal",
        IndexRange::new(2, 30, KPolicy::PositiveBelowDiagonal),
        |_| {
            Ok((
                gen("binomial(n,k)^2", |n, k| Ok(binom(n, k).pow(2))),
                gen(
                    "n/(n-k) binomial(n-1,k)^2 + n/k binomial(n-1,k-1)^2",
                    |n, k| {
                        let (ni, ki) = (n as i64, k as i64);
                        Ok(int(ni) / int(ni - ki) * binom(n - 1, k).pow(2)
                            + int(ni) / int(ki) * binom(n - 1, k - 1).pow(2))
                    },
                ),
            ))
        },
    ));
    out.push(Check::new(
        "binomial_square_vertical",
        IndexRange::new(1, 30, KPolicy::Positive),
        |_| {
            Ok((
                gen("binomial(n,k)^2", |n, k| Ok(binom(n, k).pow(2))),
                gen("sum_j (n)_j/(k (n-k)_{j-1}) binomial(n-j,k-1)^2", |n, k| {
                    Ok((1..=n - k + 1)
                        .map(|j| {
                            falling(n as i64, j) / (int(k as i64) * falling((n - k) as i64, j - 1))
                                * binom(n - j, k - 1).pow(2)
                        })
                        .sum())
                }),
            ))
        },
    ));

    out.push(Check::new(
        "laguerre_horizontal_recursion",
        IndexRange::new(1, 30, KPolicy::Positive),
        |_| {
            Ok((
                gen("L_{n,k}", laguerre),
                gen("L_{n-1,k-1} - L_{n-1,k}/(n-k)", |n, k| {
                    let mut v = laguerre(n - 1, k - 1)?;
                    if k < n {
                        v -= laguerre(n - 1, k)? / int((n - k) as i64);
                    }
                    Ok(v)
                }),
            ))
        },
    ));
    out.push(Check::new(
        "laguerre_column_zero_recursion",
        IndexRange::new(1, 30, KPolicy::ColumnZero),
        |_| {
            Ok((
                gen("L_{n,0}", laguerre),
                gen("-L_{n-1,0}/n", |n, _| {
                    Ok(-laguerre(n - 1, 0)? / int(n as i64))
                }),
            ))
        },
    ));
    out.push(Check::new(
        "laguerre_vertical_recursion",
        IndexRange::new(1, 30, KPolicy::Positive),
        |_| {
            Ok((
                gen("L_{n,k}", laguerre),
                gen(
                    "1/(n-k)! sum_j (-1)^{j-1} (n-k-j+1)! L_{n-j,k-1}",
                    |n, k| {
                        let s =
                            (1..=n - k + 1)
                                .map(|j| {
                                    Ok(sign(j - 1)
                                        * factorial(n - k + 1 - j)
                                        * laguerre(n - j, k - 1)?)
                                })
                                .sum::<Result<Rational>>()?;
                        Ok(s / factorial(n - k))
                    },
                ),
            ))
        },
    ));

    out.push(Check::new(
        "rook_laguerre_duality",
        IndexRange::all(12),
        |_| {
            Ok((
                gen("r_{n,n-k}", |n, k| rook(n, n - k)),
                gen("(-1)^{n-k} n! L_{n,k}", |n, k| {
                    Ok(sign(n - k) * factorial(n) * laguerre(n, k)?)
                }),
            ))
        },
    ));
    out.push(Check::new(
        "generalized_rook_laguerre_duality[pascal]",
        IndexRange::all(12),
        |n_max| {
            let order = n_max + 1;
            let ra: RiordanPair = named_riordan("pascal", order)?;
            let r = generalized_rook(&ra, order)?.entries().clone();
            let l = generalized_laguerre(&ra, order)?.entries().clone();
            Ok((
                gen("generalized r_{n,n-k}", move |n, k| Ok(r.entry(n, n - k))),
                gen("(-1)^{n-k} n! generalized L_{n,k}", move |n, k| {
                    Ok(sign(n - k) * factorial(n) * l.entry(n, k))
                }),
            ))
        },
    ));

    out.push(Check::new(
        "rook_polynomial_expansion",
        IndexRange::new(0, 12, KPolicy::Extended),
        |_| {
            Ok((
                gen("[x^{n+1-k}] r_{n+1}(x)", |n, k| {
                    Ok(poly_coeff(&rook_poly(n + 1), n + 1, k))
                }),
                gen("[x^{n+1-k}] (x r_n(x) + r(E_n, x))", |n, k| {
                    let p = rook_poly(n).mul_x_pow(1).add(&remainder_poly(n));
                    Ok(poly_coeff(&p, n + 1, k))
                }),
            ))
        },
    ));
    out.push(Check::new(
        "rook_remainder_matrix",
        IndexRange::new(0, 12, KPolicy::Extended),
        |_| {
            Ok((
                gen("r_{n+1,k}", |n, k| rook(n + 1, k)),
                gen("r_{n,k} + E_{n,k}", |n, k| {
                    Ok(rook(n, k)? + remainder_entry(n as i64, k as i64)?)
                }),
            ))
        },
    ));
    out.push(Check::new(
        "rook_polynomial_expansion_sum",
        IndexRange::new(0, 12, KPolicy::Extended),
        |_| {
            Ok((
                gen("[x^{n+1-k}] r_{n+1}(x)", |n, k| {
                    Ok(poly_coeff(&rook_poly(n + 1), n + 1, k))
                }),
                gen("[x^{n+1-k}] (sum_j x^{n-j} r(E_j, x) + x^{n+1})", |n, k| {
                    let p = (0..=n)
                        .map(|j| remainder_poly(j).mul_x_pow(n - j))
                        .fold(Polynomial::monomial(n + 1), |acc, q| acc.add(&q));
                    Ok(poly_coeff(&p, n + 1, k))
                }),
            ))
        },
    ));

    out
}

/// Names of every builtin identity, in suite order.
pub fn builtin_names() -> Vec<String> {
    checks().into_iter().map(|c| c.name).collect()
}

/// Runs every builtin identity; `limit` caps each `n_max`.
pub fn builtin_suite(limit: Option<usize>) -> Vec<VerificationReport> {
    checks().into_iter().map(|c| c.run(limit)).collect()
}
