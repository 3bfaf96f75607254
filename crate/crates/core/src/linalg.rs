//! Dense exact-rational matrices, just enough for rank computations on
//! vanishing-condition systems.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::Result;

/// A dense matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<BigRational>,
}

/// Convenience: an exact rational from an integer.
pub fn qint(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMatrix {
            nrows,
            ncols,
            data: vec![BigRational::zero(); nrows * ncols],
        }
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::Domain {
                    what: "matrix",
                    detail: format!("ragged rows: {} vs {ncols}", r.len()),
                });
            }
        }
        Ok(QMatrix {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.ncols + j] = v;
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.ncols {
            self.data.swap(i * self.ncols + k, j * self.ncols + k);
        }
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.ncols {
            if rank == m.nrows {
                break;
            }
            let Some(pivot) = (rank..m.nrows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m.at(rank, col).recip();
            for k in col..m.ncols {
                let v = m.at(rank, k) * &inv;
                m.set(rank, k, v);
            }
            for r in 0..m.nrows {
                if r != rank && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for k in col..m.ncols {
                        let v = m.at(r, k) - &factor * m.at(rank, k);
                        m.set(r, k, v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}
