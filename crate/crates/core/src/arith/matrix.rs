use std::fmt;
use std::ops::{Index, IndexMut};

use super::cyclo::CycloNumber;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense matrix over one cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<CycloNumber>,
}

impl CycloMatrix {
    pub fn zeros(conductor: u32, rows: usize, cols: usize) -> Self {
        let z = CycloNumber::zero(conductor);
        CycloMatrix {
            rows,
            cols,
            conductor,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(conductor: u32, n: usize) -> Self {
        let mut m = Self::zeros(conductor, n, n);
        let one = CycloNumber::one(conductor);
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    pub fn from_rows(conductor: u32, rows: Vec<Vec<CycloNumber>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for x in row {
                if x.conductor() != conductor {
                    return Err(Error::DimensionMismatch(format!(
                        "entry with conductor {} in a conductor-{conductor} matrix",
                        x.conductor()
                    )));
                }
                data.push(x);
            }
        }
        Ok(CycloMatrix {
            rows: r,
            cols: c,
            conductor,
            data,
        })
    }

    pub fn from_rational_rows(conductor: u32, rows: &[Vec<Rational>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| CycloNumber::from_rational(conductor, q.clone()))
                    .collect()
            })
            .collect();
        Self::from_rows(conductor, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn row(&self, r: usize) -> &[CycloNumber] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CycloNumber>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<CycloNumber> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn mul(&self, other: &CycloMatrix) -> Result<CycloMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.conductor, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> CycloNumber {
        let mut t = CycloNumber::zero(self.conductor);
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn determinant(&self) -> Result<CycloNumber> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let mut a = self.clone();
        let n = self.rows;
        let mut det = CycloNumber::one(self.conductor);
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(CycloNumber::zero(self.conductor));
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det = &det * &p;
            let inv = p.inverse()?;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &inv;
                for c in col..n {
                    let t = &f * &a[(col, c)];
                    a[(r, c)] -= &t;
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(piv, rank);
            let inv = a[(rank, col)].inverse().expect("nonzero pivot");
            for r in rank + 1..self.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &inv;
                for c in col..self.cols {
                    let t = &f * &a[(rank, c)];
                    a[(r, c)] -= &t;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for CycloMatrix {
    type Output = CycloNumber;
    fn index(&self, (r, c): (usize, usize)) -> &CycloNumber {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for CycloMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut CycloNumber {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "CycloMatrix {}x{} (conductor {})",
            self.rows, self.cols, self.conductor
        )?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_rotation_like_matrix() {
        let z = CycloNumber::root_of_unity(8, 1);
        let m = CycloMatrix::from_rows(
            8,
            vec![
                vec![z.clone(), CycloNumber::zero(8)],
                vec![CycloNumber::zero(8), z.inverse().unwrap()],
            ],
        )
        .unwrap();
        assert!(m.determinant().unwrap().is_one());
        assert_eq!(m.rank(), 2);
        assert!(m.mul(&CycloMatrix::identity(8, 2)).unwrap() == m);
    }
}
