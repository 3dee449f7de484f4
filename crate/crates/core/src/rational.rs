//! Exact square matrices over `ℚ`.
//!
//! Ranks and determinants go through fraction-free (Bareiss) elimination
//! on integer matrices obtained by clearing row denominators.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Parses `p/q` or `p`.
pub fn parse_q(text: &str) -> Result<Q> {
    let t = text.trim();
    let parsed = match t.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            let b = BigInt::from_str(b.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            if b.is_zero() {
                return Err(Error::Parse(format!("{t:?}: zero denominator")));
            }
            Q::new(a, b)
        }
        None => Q::from_integer(BigInt::from_str(t).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?),
    };
    Ok(parsed)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix { n, data: vec![Q::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::Dimension { expected: n, got: r.len() });
            }
            data.extend(r);
        }
        Ok(RationalMatrix { n, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        Self::from_rows(rows).expect("square literal")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.data.chunks(self.n).map(<[Q]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        m
    }

    /// Entries mapped through `f(i, j, x)`.
    pub fn map_indexed(&self, f: impl Fn(usize, usize, &Q) -> Q) -> Self {
        let n = self.n;
        let data = (0..n * n).map(|k| f(k / n, k % n, &self.data[k])).collect();
        RationalMatrix { n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Zero wherever `pred(i, j)` is false.
    pub fn supported_in(&self, pred: impl Fn(usize, usize) -> bool) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| pred(i, j) || self.get(i, j).is_zero()))
    }

    pub fn is_upper(&self) -> bool {
        self.supported_in(|i, j| i <= j)
    }

    pub fn is_lower(&self) -> bool {
        self.supported_in(|i, j| i >= j)
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i).is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.supported_in(|i, j| i == j)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension { expected: self.n, got: other.n });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.data[col * n + j] /= &p;
                inv.data[col * n + j] /= &p;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let (x, y) = (a.data[col * n + j].clone(), inv.data[col * n + j].clone());
                    a.data[r * n + j] -= &f * x;
                    inv.data[r * n + j] -= &f * y;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.data.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    /// Integer rows proportional to the chosen rows/columns, and the
    /// product of the scaling factors.
    fn integer_block(&self, rows: &[usize], cols: &[usize]) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let block = rows
            .iter()
            .map(|&i| {
                let l = cols.iter().fold(BigInt::one(), |acc, &j| acc.lcm(self.get(i, j).denom()));
                scale *= &l;
                cols.iter()
                    .map(|&j| {
                        let x = self.get(i, j);
                        x.numer() * (&l / x.denom())
                    })
                    .collect()
            })
            .collect();
        (block, scale)
    }

    /// Rank of the submatrix on `rows × cols`.
    pub fn rank_of(&self, rows: &[usize], cols: &[usize]) -> usize {
        let (m, _) = self.integer_block(rows, cols);
        bareiss(m).0
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.n).collect();
        self.rank_of(&all, &all)
    }

    /// Minor on `rows × cols` (equal lengths).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Q {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Q::one();
        }
        let (m, scale) = self.integer_block(rows, cols);
        let (_, det) = bareiss(m);
        Q::new(det, scale)
    }

    pub fn det(&self) -> Q {
        let all: Vec<usize> = (0..self.n).collect();
        self.minor(&all, &all)
    }

    /// True iff every leading principal minor is nonzero, i.e. Gaussian
    /// elimination without pivoting never meets a zero pivot.
    pub fn leading_minors_nonzero(&self) -> bool {
        self.lu().is_ok()
    }

    /// `A = L U`, `L` unit lower, `U` upper; no pivoting.
    pub fn lu(&self) -> Result<(Self, Self)> {
        let n = self.n;
        let mut u = self.clone();
        let mut l = Self::identity(n);
        for k in 0..n {
            if u.get(k, k).is_zero() {
                return Err(Error::FactorizationFailed(format!("zero pivot at {k} in LU")));
            }
            let p = u.get(k, k).clone();
            for r in (k + 1)..n {
                if u.get(r, k).is_zero() {
                    continue;
                }
                let f = u.get(r, k) / &p;
                for j in k..n {
                    let x = u.data[k * n + j].clone();
                    u.data[r * n + j] -= &f * x;
                }
                l.data[r * n + k] = f;
            }
        }
        Ok((l, u))
    }

    /// Conjugation by the antidiagonal permutation `i ↦ n−1−i`.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        self.map_indexed(|i, j, _| self.get(n - 1 - i, n - 1 - j).clone())
    }

    /// `A = U L`, `U` unit upper, `L` lower; no pivoting.
    pub fn ul(&self) -> Result<(Self, Self)> {
        let (l, u) = self
            .reversed()
            .lu()
            .map_err(|_| Error::FactorizationFailed("zero pivot in UL".into()))?;
        Ok((l.reversed(), u.reversed()))
    }

    /// Splits `self = D · N` with `D` diagonal and `N` unit, for triangular
    /// input (returns `None` on a zero diagonal entry).
    pub fn split_diagonal_left(&self) -> Option<(Self, Self)> {
        let n = self.n;
        let mut d = Self::zeros(n);
        let mut m = self.clone();
        for i in 0..n {
            let x = self.get(i, i).clone();
            if x.is_zero() {
                return None;
            }
            for j in 0..n {
                m.data[i * n + j] /= &x;
            }
            d.data[i * n + i] = x;
        }
        Some((d, m))
    }

    pub fn max_bits(&self) -> u64 {
        self.data
            .iter()
            .map(|x| x.numer().bits().max(x.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }
}

/// Fraction-free elimination with full pivot search. Returns the rank and,
/// for square full-rank input, the determinant (zero otherwise).
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    if rows == 0 {
        return (0, BigInt::one());
    }
    let cols = m[0].len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    let det = if rank == rows && rows == cols { sign * prev } else { BigInt::zero() };
    (rank, det)
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Mul for RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: RationalMatrix) -> RationalMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| match v {
                        serde_json::Value::String(s) => parse_q(&s).map_err(D::Error::custom),
                        serde_json::Value::Number(n) => {
                            parse_q(&n.to_string()).map_err(D::Error::custom)
                        }
                        other => Err(D::Error::custom(format!("bad matrix entry {other}"))),
                    })
                    .collect::<std::result::Result<Vec<Q>, D::Error>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        RationalMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}
