//! Exact affine linear systems `A·v = b` over a cyclotomic field.
//!
//! Elimination runs over columns from the last unknown to the first and picks the
//! first row with a nonzero entry as pivot. The result is a reduced echelon form
//! whose particular point and kernel basis depend only on the row space of
//! `[A | b]`, so two systems with the same solution set produce identical output.

use serde::Serialize;

use super::cyclo::CycloNumber;
use super::matrix::CycloMatrix;
use crate::error::{Error, Result};

/// The solution set of an affine system: `particular + span(kernel)`, or empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineSolution {
    pub variables: Vec<String>,
    pub particular: Vec<CycloNumber>,
    pub kernel: Vec<Vec<CycloNumber>>,
    pub empty: bool,
    /// Rank of the coefficient matrix.
    pub rank: usize,
}

impl AffineSolution {
    pub fn unknowns(&self) -> usize {
        self.variables.len()
    }

    /// Dimension of the solution set, `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        (!self.empty).then_some(self.kernel.len())
    }

    /// Whether `point` lies in the solution set.
    pub fn contains(&self, point: &[CycloNumber]) -> bool {
        if self.empty || point.len() != self.unknowns() {
            return false;
        }
        let diff: Vec<CycloNumber> = point
            .iter()
            .zip(&self.particular)
            .map(|(p, q)| p - q)
            .collect();
        in_span(&self.kernel, &diff)
    }

    /// Set equality of two affine solution sets.
    pub fn same_set(&self, other: &AffineSolution) -> bool {
        if self.empty || other.empty {
            return self.empty == other.empty;
        }
        self.kernel.len() == other.kernel.len()
            && self.contains(&other.particular)
            && other.kernel.iter().all(|v| in_span(&self.kernel, v))
    }

    /// Whether every solution has coordinate `idx` equal to zero (vacuously true
    /// for an empty set).
    pub fn coordinate_forced_zero(&self, idx: usize) -> bool {
        self.empty
            || (self.particular[idx].is_zero() && self.kernel.iter().all(|v| v[idx].is_zero()))
    }

    /// Whether some solution has coordinate `idx` equal to zero.
    pub fn meets_coordinate_zero(&self, idx: usize) -> bool {
        !self.empty
            && (self.particular[idx].is_zero() || self.kernel.iter().any(|v| !v[idx].is_zero()))
    }
}

fn in_span(basis: &[Vec<CycloNumber>], v: &[CycloNumber]) -> bool {
    if v.iter().all(CycloNumber::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let m = v[0].conductor();
    let mut rows: Vec<Vec<CycloNumber>> = basis.to_vec();
    let r0 = CycloMatrix::from_rows(m, rows.clone())
        .expect("consistent basis")
        .rank();
    rows.push(v.to_vec());
    CycloMatrix::from_rows(m, rows)
        .expect("consistent basis")
        .rank()
        == r0
}

/// Default variable names for the parameter space `(k, c_2, …, c_ν)`.
pub fn parameter_names(nu: usize) -> Vec<String> {
    std::iter::once("k".to_string())
        .chain((2..=nu).map(|s| format!("c_{s}")))
        .collect()
}

/// Solves `A·v = b` exactly.
pub fn solve_affine(a: &CycloMatrix, b: &[CycloNumber]) -> Result<AffineSolution> {
    solve_affine_named(a, b, None)
}

pub fn solve_affine_named(
    a: &CycloMatrix,
    b: &[CycloNumber],
    names: Option<Vec<String>>,
) -> Result<AffineSolution> {
    let (rows, cols) = (a.rows(), a.cols());
    if b.len() != rows {
        return Err(Error::DimensionMismatch(format!(
            "{rows} equations but right-hand side of length {}",
            b.len()
        )));
    }
    let variables = match names {
        Some(n) if n.len() == cols => n,
        Some(n) => {
            return Err(Error::DimensionMismatch(format!(
                "{} names for {cols} unknowns",
                n.len()
            )))
        }
        None => (0..cols).map(|i| format!("x{i}")).collect(),
    };
    let m = a.conductor();
    if b.iter().any(|x| x.conductor() != m) {
        return Err(Error::DimensionMismatch("right-hand side conductor".into()));
    }

    // augmented matrix
    let mut aug: Vec<Vec<CycloNumber>> = (0..rows)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0;
    for col in (0..cols).rev() {
        if next_row == rows {
            break;
        }
        let Some(piv) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(piv, next_row);
        let inv = aug[next_row][col].inverse()?;
        for x in aug[next_row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = aug[next_row].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }
    let rank = pivots.len();
    let zero = CycloNumber::zero(m);

    let inconsistent = aug[rank..].iter().any(|row| !row[cols].is_zero());
    if inconsistent {
        return Ok(AffineSolution {
            variables,
            particular: Vec::new(),
            kernel: Vec::new(),
            empty: true,
            rank,
        });
    }

    let mut particular = vec![zero.clone(); cols];
    for &(r, c) in &pivots {
        particular[c] = aug[r][cols].clone();
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &(_, c) in &pivots {
            v[c] = true;
        }
        v
    };
    let one = CycloNumber::one(m);
    let kernel = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![zero.clone(); cols];
            v[f] = one.clone();
            for &(r, c) in &pivots {
                v[c] = -&aug[r][f];
            }
            v
        })
        .collect();

    Ok(AffineSolution {
        variables,
        particular,
        kernel,
        empty: false,
        rank,
    })
}

/// Accumulates a large, highly redundant stream of linear equations in a few
/// unknowns, keeping only an independent reduced set.
#[derive(Clone, Debug)]
pub struct EquationAccumulator {
    conductor: u32,
    unknowns: usize,
    /// Reduced rows `[coeffs | rhs]` with their pivot column.
    rows: Vec<(usize, Vec<CycloNumber>)>,
    inconsistent: bool,
}

impl EquationAccumulator {
    pub fn new(conductor: u32, unknowns: usize) -> Self {
        EquationAccumulator {
            conductor,
            unknowns,
            rows: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Adds `coeffs · v = rhs`.
    pub fn push(&mut self, coeffs: &[CycloNumber], rhs: &CycloNumber) {
        debug_assert_eq!(coeffs.len(), self.unknowns);
        if self.inconsistent {
            return;
        }
        let mut row: Vec<CycloNumber> = coeffs.to_vec();
        row.push(rhs.clone());
        for (pc, prow) in &self.rows {
            if row[*pc].is_zero() {
                continue;
            }
            let f = row[*pc].clone();
            for (x, p) in row.iter_mut().zip(prow) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        let Some(pc) = (0..self.unknowns).find(|&c| !row[c].is_zero()) else {
            if !row[self.unknowns].is_zero() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = row[pc].inverse().expect("nonzero pivot");
        for x in row.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, prow) in self.rows.iter_mut() {
            if prow[pc].is_zero() {
                continue;
            }
            let f = prow[pc].clone();
            for (x, p) in prow.iter_mut().zip(&row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        self.rows.push((pc, row));
    }

    /// Solves the accumulated system in canonical form.
    pub fn solve(&self, names: Vec<String>) -> Result<AffineSolution> {
        if self.inconsistent {
            return Ok(AffineSolution {
                variables: names,
                particular: Vec::new(),
                kernel: Vec::new(),
                empty: true,
                rank: self.rows.len(),
            });
        }
        let (a, b) = self.system();
        solve_affine_named(&a, &b, Some(names))
    }

    pub fn system(&self) -> (CycloMatrix, Vec<CycloNumber>) {
        let mut a = CycloMatrix::zeros(self.conductor, self.rows.len(), self.unknowns);
        let mut b = Vec::with_capacity(self.rows.len());
        for (r, (_, row)) in self.rows.iter().enumerate() {
            for c in 0..self.unknowns {
                a[(r, c)] = row[c].clone();
            }
            b.push(row[self.unknowns].clone());
        }
        (a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn c(n: i64) -> CycloNumber {
        CycloNumber::from_int(2, n)
    }

    #[test]
    fn single_hyperplane() {
        // 1 + k + c = 0  ->  k + c = -1
        let a = CycloMatrix::from_rows(2, vec![vec![c(1), c(1)]]).unwrap();
        let s = solve_affine(&a, &[c(-1)]).unwrap();
        assert!(!s.empty);
        assert_eq!(s.rank, 1);
        assert_eq!(s.particular, vec![c(0), c(-1)]);
        assert_eq!(s.kernel, vec![vec![c(1), c(-1)]]);
    }

    #[test]
    fn identity_system() {
        let a = CycloMatrix::identity(2, 2);
        let s = solve_affine(&a, &[c(0), c(0)]).unwrap();
        assert_eq!(s.particular, vec![c(0), c(0)]);
        assert!(s.kernel.is_empty());
        assert_eq!(s.dimension(), Some(0));
    }

    #[test]
    fn inconsistent_system() {
        let a = CycloMatrix::from_rows(2, vec![vec![c(0), c(0)]]).unwrap();
        let s = solve_affine(&a, &[c(1)]).unwrap();
        assert!(s.empty);
        assert_eq!(s.dimension(), None);
    }

    #[test]
    fn malformed_rhs() {
        let a = CycloMatrix::identity(2, 2);
        assert!(solve_affine(&a, &[c(0)]).is_err());
    }

    #[test]
    fn accumulator_matches_direct_solve() {
        let m = 5;
        let z = CycloNumber::root_of_unity(m, 1);
        let one = CycloNumber::one(m);
        let zero = CycloNumber::zero(m);
        let r1 = vec![one.clone(), z.clone(), zero.clone()];
        let r2 = vec![zero.clone(), one.clone(), &z * &z];
        let r3: Vec<CycloNumber> = r1.iter().zip(&r2).map(|(a, b)| a + &(&z * b)).collect();
        let b1 = CycloNumber::from_int(m, 3);
        let b2 = z.clone();
        let b3 = &b1 + &(&z * &b2);

        let mut acc = EquationAccumulator::new(m, 3);
        for (r, b) in [(&r1, &b1), (&r2, &b2), (&r3, &b3), (&r1, &b1)] {
            acc.push(r, b);
        }
        let names = parameter_names(3);
        let via_acc = acc.solve(names.clone()).unwrap();
        let a = CycloMatrix::from_rows(m, vec![r1.clone(), r2.clone()]).unwrap();
        let direct = solve_affine_named(&a, &[b1.clone(), b2.clone()], Some(names)).unwrap();
        assert_eq!(via_acc, direct);
        assert!(via_acc.same_set(&direct));

        acc.push(&r1, &(&b1 + &one));
        assert!(acc.is_inconsistent());
        assert!(acc.solve(parameter_names(3)).unwrap().empty);
    }

    #[test]
    fn set_equality_ignores_basis_choice() {
        let m = 3;
        let q = |n: i64, d: i64| CycloNumber::from_rational(m, Rational::new(n, d));
        let s = AffineSolution {
            variables: parameter_names(2),
            particular: vec![q(0, 1), q(-1, 1)],
            kernel: vec![vec![q(1, 1), q(-1, 1)]],
            empty: false,
            rank: 1,
        };
        let t = AffineSolution {
            particular: vec![q(-1, 1), q(0, 1)],
            kernel: vec![vec![q(-1, 2), q(1, 2)]],
            ..s.clone()
        };
        assert!(s.same_set(&t));
        assert!(s.meets_coordinate_zero(0));
        assert!(!s.coordinate_forced_zero(0));
    }
}
