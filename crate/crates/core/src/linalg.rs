//! Exact rational linear algebra: rank, solving, and row-span membership
//! with certificates. Everything is exact; there is no floating point here.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` rendering used in reports (`q = 1` is still written out).
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<Rational>>,
    cols: usize,
}

/// Outcome of [`RationalMatrix::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// `x` with `M x = rhs`.
    Solved(Vec<Rational>),
    /// `y` with `y^T M = 0` and `y . rhs != 0`.
    Inconsistent(Vec<Rational>),
}

/// Outcome of [`RationalMatrix::in_row_span`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanMembership {
    /// Coefficients `c` with `c^T M = v`.
    InSpan(Vec<Rational>),
    /// `y` with `M y = 0` and `v . y != 0`.
    NotInSpan(Vec<Rational>),
}

impl SpanMembership {
    pub fn is_in_span(&self) -> bool {
        matches!(self, SpanMembership::InSpan(_))
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(RationalMatrix { rows, cols })
    }

    pub fn zeros(nrows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows: vec![vec![Rational::zero(); cols]; nrows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.rows[k][k] = Rational::one();
        }
        m
    }

    pub fn from_integers(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn transpose(&self) -> RationalMatrix {
        let rows = (0..self.cols)
            .map(|c| self.rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        RationalMatrix {
            rows,
            cols: self.rows.len(),
        }
    }

    /// `M x`.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x.len(), self.cols)?;
        Ok(self.rows.iter().map(|r| dot(r, x)).collect())
    }

    /// `y^T M`.
    pub fn vec_mul(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(y.len(), self.rows.len())?;
        let mut out = vec![Rational::zero(); self.cols];
        for (coef, row) in y.iter().zip(&self.rows) {
            if coef.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += coef * x;
                }
            }
        }
        Ok(out)
    }

    fn check_len(&self, got: usize, expected: usize) -> Result<()> {
        if got != expected {
            return Err(Error::DimensionMismatch { expected, got });
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        Elimination::run(self, &[], false).pivots.len()
    }

    /// Solves `M x = rhs` exactly.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Solution> {
        Ok(self.solve_many(std::slice::from_ref(&rhs.to_vec()))?.remove(0))
    }

    /// Solves `M x = b` for each `b`, sharing one elimination.
    pub fn solve_many(&self, rhs: &[Vec<Rational>]) -> Result<Vec<Solution>> {
        for b in rhs {
            self.check_len(b.len(), self.rows.len())?;
        }
        let elim = Elimination::run(self, rhs, true);
        let rank = elim.pivots.len();
        let out = (0..rhs.len())
            .map(|k| {
                let col = self.cols + k;
                if let Some(row) = (rank..self.rows.len()).find(|&r| !elim.rows[r][col].is_zero()) {
                    return Solution::Inconsistent(elim.transform[row].clone());
                }
                let mut x = vec![Rational::zero(); self.cols];
                for (row, &pc) in elim.pivots.iter().enumerate() {
                    x[pc] = elim.rows[row][col].clone();
                }
                Solution::Solved(x)
            })
            .collect();
        Ok(out)
    }

    /// Decides whether `v` lies in the rational row span.
    pub fn in_row_span(&self, v: &[Rational]) -> Result<SpanMembership> {
        Ok(self.in_row_span_many(std::slice::from_ref(&v.to_vec()))?.remove(0))
    }

    pub fn in_row_span_many(&self, vs: &[Vec<Rational>]) -> Result<Vec<SpanMembership>> {
        let out = self
            .transpose()
            .solve_many(vs)?
            .into_iter()
            .map(|s| match s {
                Solution::Solved(c) => SpanMembership::InSpan(c),
                Solution::Inconsistent(y) => SpanMembership::NotInSpan(y),
            })
            .collect();
        Ok(out)
    }

    /// Checks a membership verdict by re-multiplication.
    pub fn verify_membership(&self, v: &[Rational], verdict: &SpanMembership) -> bool {
        match verdict {
            SpanMembership::InSpan(c) => self.vec_mul(c).map(|w| w == v).unwrap_or(false),
            SpanMembership::NotInSpan(y) => match self.mul_vec(y) {
                Ok(my) => my.iter().all(Zero::is_zero) && !dot(v, y).is_zero(),
                Err(_) => false,
            },
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of `[M | rhs...]`, pivoting only in the columns
/// of `M`, first nonzero entry in column order. When tracked, `transform`
/// satisfies `transform * [M | rhs] = rows`.
struct Elimination {
    rows: Vec<Vec<Rational>>,
    transform: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Elimination {
    fn run(m: &RationalMatrix, rhs: &[Vec<Rational>], track: bool) -> Self {
        let nrows = m.rows.len();
        let mut rows: Vec<Vec<Rational>> = m
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut row = row.clone();
                row.extend(rhs.iter().map(|b| b[r].clone()));
                row
            })
            .collect();
        let mut transform = if track {
            RationalMatrix::identity(nrows).rows
        } else {
            Vec::new()
        };
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            if next == nrows {
                break;
            }
            let Some(p) = (next..nrows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            if track {
                transform.swap(next, p);
            }
            let inv = rows[next][col].recip();
            scale_row(&mut rows[next], &inv);
            if track {
                scale_row(&mut transform[next], &inv);
            }
            for r in 0..nrows {
                if r == next || rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].clone();
                let (pivot_row, target) = pick_two(&mut rows, next, r);
                axpy(target, pivot_row, &factor);
                if track {
                    let (pivot_t, target_t) = pick_two(&mut transform, next, r);
                    axpy(target_t, pivot_t, &factor);
                }
            }
            pivots.push(col);
            next += 1;
        }
        Elimination {
            rows,
            transform,
            pivots,
        }
    }
}

fn scale_row(row: &mut [Rational], by: &Rational) {
    for x in row.iter_mut().filter(|x| !x.is_zero()) {
        *x *= by;
    }
}

// target -= factor * source
fn axpy(target: &mut [Rational], source: &[Rational], factor: &Rational) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= factor * s;
        }
    }
}

fn pick_two<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}
