//! Exact linear algebra over Q and F_p.
//!
//! Matrices always store `BigRational` entries. Over a prime field the
//! entries are residues in `[0, p)` and arithmetic is done on machine words.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Config(format!("{} is not prime", p)))
        }
    }

    /// Brings a rational into canonical form for this field.
    pub fn normalize(&self, x: &BigRational) -> Result<BigRational> {
        match *self {
            Field::Rational => Ok(x.clone()),
            Field::Prime(p) => Ok(BigRational::from_integer(BigInt::from(reduce_mod(x, p)?))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{}", p),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Residue of `x` modulo the prime `p`.
pub fn reduce_mod(x: &BigRational, p: u32) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return Err(Error::Config(format!(
            "entry {} has denominator divisible by {}",
            x, p
        )));
    }
    let num = x.numer().mod_floor(&pb).to_u64().unwrap();
    Ok(num * inv_mod(den, p as u64) % p as u64)
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<BigRational>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "expected a {}x{} matrix",
                rows, cols
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigRational>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: BigRational) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigRational> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, field: Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * other.get(k, c);
                }
                m.set(r, c, field.normalize(&acc)?);
            }
        }
        Ok(m)
    }

    pub fn normalized(&self, field: Field) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| field.normalize(x))
                .collect::<Result<_>>()?,
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Rank of `m` over `field`.
pub fn rank(field: Field, m: &Matrix) -> Result<usize> {
    match field {
        Field::Rational => Ok(rank_q(m)),
        Field::Prime(p) => {
            let mut a = FpMat::from_matrix(m, p)?;
            Ok(a.rref().len())
        }
    }
}

/// Rank over Q by fraction-free (Bareiss) elimination. Rows are scaled to
/// integers first; a checked i128 pass is tried before falling back to
/// big integers.
fn rank_q(m: &Matrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect();
    if let Some(mut a) = small {
        if let Some(r) = bareiss_rank_i128(&mut a, m.cols) {
            return r;
        }
    }
    bareiss_rank_big(&mut rows, m.cols)
}

fn bareiss_rank_i128(a: &mut [Vec<i128>], cols: usize) -> Option<usize> {
    let n = a.len();
    let mut k = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if k == n {
            break;
        }
        let Some(p) = (k..n).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(k, p);
        let piv = a[k][c];
        for i in k + 1..n {
            let lead = a[i][c];
            for j in c + 1..cols {
                let v = piv
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[k][j])?)?;
                debug_assert_eq!(v % prev, 0);
                a[i][j] = v / prev;
            }
            a[i][c] = 0;
        }
        prev = piv;
        k += 1;
    }
    Some(k)
}

fn bareiss_rank_big(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let n = a.len();
    let mut k = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if k == n {
            break;
        }
        let Some(p) = (k..n).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(k, p);
        let piv = a[k][c].clone();
        for i in k + 1..n {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let v = &piv * &a[i][j] - &lead * &a[k][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = piv;
        k += 1;
    }
    k
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(field: Field, m: &Matrix) -> Result<(Matrix, Vec<usize>)> {
    match field {
        Field::Rational => {
            let mut a = m.clone();
            let piv = rref_q(&mut a);
            Ok((a, piv))
        }
        Field::Prime(p) => {
            let mut a = FpMat::from_matrix(m, p)?;
            let piv = a.rref();
            Ok((a.to_matrix(), piv))
        }
    }
}

fn rref_q(a: &mut Matrix) -> Vec<usize> {
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&r| !a.get(r, c).is_zero()) else {
            continue;
        };
        if p != k {
            for j in 0..cols {
                a.data.swap(p * cols + j, k * cols + j);
            }
        }
        let inv = a.get(k, c).recip();
        for j in c..cols {
            let v = a.get(k, j) * &inv;
            a.set(k, j, v);
        }
        for r in 0..rows {
            if r == k || a.get(r, c).is_zero() {
                continue;
            }
            let f = a.get(r, c).clone();
            for j in c..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let v = a.get(r, j) - &f * a.get(k, j);
                a.set(r, j, v);
            }
        }
        pivots.push(c);
        k += 1;
    }
    pivots
}

/// Basis of the null space {x : m x = 0}, one vector per free column.
pub fn kernel(field: Field, m: &Matrix) -> Result<Vec<Vec<BigRational>>> {
    let (r, pivots) = rref(field, m)?;
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let neg_one = match field {
        Field::Rational => -BigRational::one(),
        Field::Prime(p) => BigRational::from_integer(BigInt::from(p - 1)),
    };
    Ok(free
        .iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[fc] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                let x = r.get(i, fc);
                if !x.is_zero() {
                    v[pc] = field.normalize(&(&neg_one * x)).expect("normalized");
                }
            }
            v
        })
        .collect())
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(field: Field, m: &Matrix) -> Result<Option<Matrix>> {
    if m.rows != m.cols {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows;
    let aug = m.hstack(&Matrix::identity(n));
    let (r, pivots) = rref(field, &aug)?;
    if pivots.len() < n || pivots[n - 1] >= n {
        return Ok(None);
    }
    let idx: Vec<usize> = (0..n).collect();
    let right: Vec<usize> = (n..2 * n).collect();
    Ok(Some(r.select(&idx, &right)))
}

/// Dense matrix over F_p on machine words.
#[derive(Clone, Debug)]
pub(crate) struct FpMat {
    pub rows: usize,
    pub cols: usize,
    pub p: u64,
    pub data: Vec<u64>,
}

impl FpMat {
    pub fn from_matrix(m: &Matrix, p: u32) -> Result<Self> {
        Ok(FpMat {
            rows: m.rows,
            cols: m.cols,
            p: p as u64,
            data: m
                .data
                .iter()
                .map(|x| reduce_mod(x, p))
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        let mut k = 0;
        for c in 0..cols {
            if k == rows {
                break;
            }
            let Some(pr) = (k..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != k {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, k * cols + j);
                }
            }
            let inv = inv_mod(self.data[k * cols + c], p);
            for j in c..cols {
                self.data[k * cols + j] = self.data[k * cols + j] * inv % p;
            }
            for r in 0..rows {
                let f = self.data[r * cols + c];
                if r == k || f == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = self.data[k * cols + j];
                    if v != 0 {
                        self.data[r * cols + j] = (self.data[r * cols + j] + (p - f) * v) % p;
                    }
                }
            }
            pivots.push(c);
            k += 1;
        }
        pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn rank_over_q_and_fp_differ_when_they_should() {
        // det = 2
        let m = Matrix::from_i64(2, 2, &[1, 1, 1, -1]);
        assert_eq!(rank(Field::Rational, &m).unwrap(), 2);
        assert_eq!(rank(Field::Prime(2), &m).unwrap(), 1);
        assert_eq!(rank(Field::Prime(3), &m).unwrap(), 2);
    }

    #[test]
    fn rank_with_rational_entries() {
        let mut m = Matrix::zeros(2, 2);
        m.set(0, 0, BigRational::new(1.into(), 2.into()));
        m.set(0, 1, BigRational::new(1.into(), 3.into()));
        m.set(1, 0, q(3));
        m.set(1, 1, q(2));
        assert_eq!(rank(Field::Rational, &m).unwrap(), 1);
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let big = i64::MAX;
        let m = Matrix::from_i64(3, 3, &[big, big, 1, big, 1, big, 1, big, big]);
        let r = rank(Field::Rational, &m).unwrap();
        let (_, piv) = rref(Field::Rational, &m).unwrap();
        assert_eq!(r, piv.len());
        assert_eq!(r, 3);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = Matrix::from_i64(2, 4, &[1, 2, 3, 4, 2, 4, 7, 9]);
        for field in [Field::Rational, Field::Prime(5)] {
            let ker = kernel(field, &m).unwrap();
            assert_eq!(ker.len(), 4 - rank(field, &m).unwrap());
            for v in ker {
                let col = Matrix::from_columns(4, &[v]);
                assert!(m.mul(field, &col).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 0, 1, 1, 1, 0, 3]);
        let inv = inverse(Field::Rational, &m).unwrap().unwrap();
        assert_eq!(m.mul(Field::Rational, &inv).unwrap(), Matrix::identity(3));
        let inv5 = inverse(Field::Prime(5), &m).unwrap().unwrap();
        assert_eq!(m.mul(Field::Prime(5), &inv5).unwrap(), Matrix::identity(3));
        // det = 7
        assert!(inverse(Field::Prime(7), &m).unwrap().is_none());
        let sing = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(inverse(Field::Rational, &sing).unwrap().is_none());
    }

    #[test]
    fn reduce_mod_handles_fractions() {
        assert_eq!(reduce_mod(&BigRational::new(1.into(), 2.into()), 5).unwrap(), 3);
        assert_eq!(reduce_mod(&q(-1), 7).unwrap(), 6);
        assert!(reduce_mod(&BigRational::new(1.into(), 3.into()), 3).is_err());
    }

    #[test]
    fn primality() {
        let ps: Vec<u32> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(Field::prime(4).is_err());
    }
}
