//! Exact linear maps between coordinate spaces.
//!
//! A map is stored row-major; column `j` is the image of the j-th basis
//! vector of the domain. Tensor products use the left-factor-major index
//! convention `(i, j) -> i * dim2 + j` throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    entries: Vec<Scalar>, // rows * cols, row-major
}

pub fn vec_add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

pub fn vec_sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

pub fn vec_scale(c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| c.mul(a)).collect()
}

pub fn vec_is_zero(x: &[Scalar]) -> bool {
    x.iter().all(|a| a.is_zero())
}

pub fn vec_zero(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn vec_unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec_zero(field, n);
    v[i] = field.one();
    v
}

impl LinearMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> LinearMap {
        LinearMap {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> LinearMap {
        let mut m = LinearMap::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Flip map tau: V (x) W -> W (x) V on coordinates, dim(V) = m, dim(W) = n.
    pub fn flip(field: Field, m: usize, n: usize) -> LinearMap {
        let mut t = LinearMap::zero(field, m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                t.set(j * m + i, i * n + j, field.one());
            }
        }
        t
    }

    pub fn from_cols(field: Field, rows: usize, cols: Vec<Vec<Scalar>>) -> LinearMap {
        let ncols = cols.len();
        let mut m = LinearMap::zero(field, rows, ncols);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, s) in col.into_iter().enumerate() {
                m.set(i, j, s);
            }
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> LinearMap {
        let nrows = rows.len();
        let ncols = rows[0].len();
        let mut m = LinearMap::zero(field, nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols);
            for (j, s) in row.into_iter().enumerate() {
                m.set(i, j, s);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.entries[i * self.cols + j] = s;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec_zero(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out[i] = out[i].add(&e.mul(x));
                }
            }
        }
        Ok(out)
    }

    /// self after other: (self . other)(v) = self(other(v)).
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = LinearMap::zero(self.field, self.rows, other.cols);
        for j in 0..other.cols {
            let img = self.apply(&other.col(j))?;
            for (i, s) in img.into_iter().enumerate() {
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = LinearMap::zero(self.field, rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<LinearMap> {
        if self.rows != self.cols {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = LinearMap::identity(self.field, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.get(pivot, j).clone();
                    a.set(pivot, j, a.get(col, j).clone());
                    a.set(col, j, tmp);
                    let tmp = inv.get(pivot, j).clone();
                    inv.set(pivot, j, inv.get(col, j).clone());
                    inv.set(col, j, tmp);
                }
            }
            let p = a.get(col, col).clone();
            let pinv = p.inv().map_err(|_| Error::Singular)?;
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul(&pinv));
                inv.set(col, j, inv.get(col, j).mul(&pinv));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let na = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, na);
                    let ni = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, ni);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(
            self.field,
            (0..self.rows).map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).clone())
                    .collect::<Vec<_>>()
            }),
        )
    }
}

/// Exact rank of a list of row vectors.
///
/// Over the rationals rows are scaled to integers and reduced by
/// fraction-free (Bareiss) elimination to keep intermediate entries small;
/// over GF(p) ordinary elimination is already exact.
pub fn rank_of_rows(field: Field, rows: impl IntoIterator<Item = Vec<Scalar>>) -> usize {
    match field {
        Field::Rational => {
            let int_rows: Vec<Vec<BigInt>> = rows
                .into_iter()
                .map(|row| {
                    let rats: Vec<BigRational> = row
                        .into_iter()
                        .map(|s| match s {
                            Scalar::Q(q) => q,
                            _ => unreachable!(),
                        })
                        .collect();
                    let mut lcm = BigInt::one();
                    for r in &rats {
                        lcm = num_integer::lcm(lcm, r.denom().clone());
                    }
                    rats.into_iter()
                        .map(|r| r.numer() * (&lcm / r.denom()))
                        .collect()
                })
                .collect();
            bareiss_rank(int_rows)
        }
        Field::Gfp { .. } => {
            let mut mat: Vec<Vec<Scalar>> = rows.into_iter().collect();
            let mut rank = 0;
            let ncols = if mat.is_empty() { 0 } else { mat[0].len() };
            for col in 0..ncols {
                let Some(pr) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
                    continue;
                };
                mat.swap(rank, pr);
                let pinv = mat[rank][col].inv().unwrap();
                for r in rank + 1..mat.len() {
                    if mat[r][col].is_zero() {
                        continue;
                    }
                    let f = mat[r][col].mul(&pinv);
                    for c in col..ncols {
                        let v = mat[r][c].sub(&f.mul(&mat[rank][c]));
                        mat[r][c] = v;
                    }
                }
                rank += 1;
            }
            rank
        }
    }
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(field: Field, n: i64) -> Scalar {
        field.int(n)
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = LinearMap::identity(Field::rationals(), 4);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn tensor_of_identities() {
        let k = Field::rationals();
        let t = LinearMap::identity(k, 2).tensor(&LinearMap::identity(k, 3));
        assert!(t.is_identity());
        assert_eq!(t.rows, 6);
    }

    #[test]
    fn invert_singular() {
        let k = Field::rationals();
        let m = LinearMap::from_rows(k, vec![vec![q(k, 1), q(k, 2)], vec![q(k, 2), q(k, 4)]]);
        assert!(matches!(m.invert(), Err(Error::Singular)));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn invert_round_trip() {
        let k = Field::rationals();
        let m = LinearMap::from_rows(
            k,
            vec![
                vec![q(k, 2), q(k, 1), q(k, 0)],
                vec![q(k, 0), q(k, 1), q(k, 3)],
                vec![q(k, 1), q(k, 0), q(k, 1)],
            ],
        );
        let inv = m.invert().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&m).unwrap().is_identity());
    }

    #[test]
    fn flip_is_an_involution_when_square() {
        let k = Field::rationals();
        let t = LinearMap::flip(k, 3, 3);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn rank_with_fractions() {
        let k = Field::rationals();
        let half = k.parse("1/2").unwrap();
        let m = LinearMap::from_rows(
            k,
            vec![vec![half.clone(), q(k, 1)], vec![q(k, 1), q(k, 2)]],
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_gfp() {
        let k = Field::prime(5).unwrap();
        let m = LinearMap::from_rows(
            k,
            vec![vec![k.int(1), k.int(2)], vec![k.int(3), k.int(2)]],
        );
        assert_eq!(m.rank(), 2);
        // Singular mod 5 although the integer matrix has rank 2.
        let s = LinearMap::from_rows(
            k,
            vec![vec![k.int(1), k.int(2)], vec![k.int(3), k.int(1)]],
        );
        assert_eq!(s.rank(), 1);
    }
}
