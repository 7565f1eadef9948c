//! Dense linear algebra over any coefficient field: row reduction, rank,
//! kernel bases, and linear solves. Generic over the `Coeff` domains so the
//! same code serves F_p, F_q and exact rational computations.

use crate::error::{Error, Result};
use crate::poly::coeff::Coeff;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<C> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn new(rows: usize, cols: usize, data: Vec<C>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, zero: &C) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Result<Vec<usize>> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = self.at(r, c).inv()?;
            for j in c..self.cols {
                let v = self.at(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j).sub(&self.at(r, j).mul(&f));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.rref()?.len())
    }

    /// Basis for the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<C>>> {
        let zero = match self.data.first() {
            Some(c) => c.zero(),
            None => return Ok(vec![]),
        };
        let one = zero.one();
        let mut m = self.clone();
        let pivots = m.rref()?;
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec_ = vec![zero.clone(); self.cols];
            vec_[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                vec_[pc] = m.at(r, free).neg();
            }
            out.push(vec_);
        }
        Ok(out)
    }

    /// One solution of A·x = b, or an error if inconsistent.
    pub fn solve(&self, b: &[C]) -> Result<Vec<C>> {
        assert_eq!(b.len(), self.rows);
        let zero = b
            .first()
            .map(|c| c.zero())
            .or_else(|| self.data.first().map(|c| c.zero()))
            .ok_or(Error::RankIndeterminate)?;
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, &zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref()?;
        if pivots.contains(&self.cols) {
            return Err(Error::Invariant("inconsistent linear system".into()));
        }
        let mut x = vec![zero; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Ok(x)
    }

    pub fn mat_vec(&self, x: &[C]) -> Vec<C> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = x[0].zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&x[j]));
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff::Fp;

    fn fp(v: i64) -> Fp {
        Fp::new(v, 557)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Fp> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| fp(v)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank().unwrap(), 2);
        let ker = a.kernel_basis().unwrap();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(a.mat_vec(v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, 2]]);
        let x = a.solve(&[fp(3), fp(5)]).unwrap();
        assert_eq!(a.mat_vec(&x), vec![fp(3), fp(5)]);
        let sing = m(&[&[1, 1], &[2, 2]]);
        assert!(sing.solve(&[fp(1), fp(3)]).is_err());
        assert!(sing.solve(&[fp(1), fp(2)]).is_ok());
    }

    #[test]
    fn rref_identity() {
        let mut a = m(&[&[2, 0], &[0, 3]]);
        let pivots = a.rref().unwrap();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a, m(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn rank_rational() {
        use num_rational::BigRational;
        let one = BigRational::from_i64(&BigRational::new(1.into(), 1.into()), 1);
        let half = BigRational::new(1.into(), 2.into());
        let a = Matrix::from_rows(vec![
            vec![one.clone(), half.clone()],
            vec![half.clone(), one.mul(&half).mul(&half)],
        ]);
        // rows are dependent: (1, 1/2) and (1/2, 1/4)
        assert_eq!(a.rank().unwrap(), 1);
    }
}
