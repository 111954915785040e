//! Young's orthogonal and seminormal forms.

use std::collections::HashMap;
use std::fmt::Debug;

use crate::arith::Rational;

use super::{content, rectangle_of, Partition};

/// The two coefficient fields used for symmetric-group matrices.
pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn magnitude(&self) -> f64;
}

impl Field for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(q: &Rational) -> Self {
        q.to_f64()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::from_integer(0)
    }
    fn one() -> Self {
        Rational::from_integer(1)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}

/// Small dense square or rectangular matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Field> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.magnitude() == 0.0 {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(o.get(k, j)));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Largest entry magnitude of `self - o`.
    pub fn distance(&self, o: &Self) -> f64 {
        self.data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.sub(b).magnitude())
            .fold(0.0, f64::max)
    }

    /// The scalar `x` if `self = x·I` within `tol`.
    pub fn as_scalar(&self, tol: f64) -> Option<T> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(T::zero());
        }
        let x = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let dev = if i == j {
                    v.sub(&x).magnitude()
                } else {
                    v.magnitude()
                };
                if dev > tol {
                    return None;
                }
            }
        }
        Some(x)
    }
}

/// A standard tableau, stored as the cell `(row, col)` of each entry `0..N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau(pub Vec<(usize, usize)>);

impl Tableau {
    fn content_of(&self, entry: usize) -> i64 {
        let (r, c) = self.0[entry];
        c as i64 - r as i64
    }

    fn swapped(&self, i: usize) -> Tableau {
        let mut t = self.0.clone();
        t.swap(i, i + 1);
        Tableau(t)
    }

    fn is_standard(&self) -> bool {
        let pos: HashMap<(usize, usize), usize> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, &cell)| (cell, k))
            .collect();
        self.0.iter().enumerate().all(|(k, &(r, c))| {
            (r == 0 || pos[&(r - 1, c)] < k) && (c == 0 || pos[&(r, c - 1)] < k)
        })
    }
}

/// Standard tableaux of shape `λ`, generated by placing `1, 2, …` and trying
/// upper rows first.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(
        lambda: &[usize],
        fill: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Tableau>,
    ) {
        if cur.len() == lambda.iter().sum::<usize>() {
            out.push(Tableau(cur.clone()));
            return;
        }
        for r in 0..lambda.len() {
            if fill[r] < lambda[r] && (r == 0 || fill[r - 1] > fill[r]) {
                cur.push((r, fill[r]));
                fill[r] += 1;
                rec(lambda, fill, cur, out);
                fill[r] -= 1;
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(
        lambda.parts(),
        &mut vec![0; lambda.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn generators<T: Field>(
    lambda: &Partition,
    entry: impl Fn(i64, bool) -> (T, T),
) -> Vec<DenseMatrix<T>> {
    let tabs = standard_tableaux(lambda);
    let index: HashMap<&Tableau, usize> = tabs.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let d = tabs.len();
    let n = lambda.size();
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut m = DenseMatrix::zeros(d, d);
            for (col, t) in tabs.iter().enumerate() {
                let r = t.content_of(i + 1) - t.content_of(i);
                let rq = Rational::new(1, r);
                let st = t.swapped(i);
                if r.abs() == 1 || !st.is_standard() {
                    m.set(col, col, T::from_rational(&rq));
                    continue;
                }
                let row = index[&st];
                // i+1 sits in a lower row than i exactly when r < 0
                let (diag, off) = entry(r, r < 0);
                m.set(col, col, diag);
                m.set(row, col, off);
            }
            m
        })
        .collect()
}

/// Young's orthogonal form: matrices of `s_1, …, s_{N-1}` on `W_λ`.
pub fn young_orthogonal_gens(lambda: &Partition) -> Vec<DenseMatrix<f64>> {
    generators(lambda, |r, _| {
        let inv = 1.0 / r as f64;
        (inv, (1.0 - inv * inv).sqrt())
    })
}

/// Young's seminormal form: rational matrices of `s_1, …, s_{N-1}` on `W_λ`.
pub fn young_seminormal_gens(lambda: &Partition) -> Vec<DenseMatrix<Rational>> {
    generators(lambda, |r, lower| {
        let inv = Rational::new(1, r);
        let off = if lower {
            Rational::from_integer(1)
        } else {
            &Rational::from_integer(1) - &(&inv * &inv)
        };
        (inv, off)
    })
}

/// Matrices of the transpositions `s_{1j}`, `j = 2..N`, built from adjacent generators.
fn first_row_transpositions<T: Field>(gens: &[DenseMatrix<T>]) -> Vec<DenseMatrix<T>> {
    let mut out: Vec<DenseMatrix<T>> = Vec::with_capacity(gens.len());
    for g in gens {
        // s_{1,j+1} = s_j s_{1,j} s_j
        let t = match out.last() {
            None => g.clone(),
            Some(prev) => g.mul(prev).mul(g),
        };
        out.push(t);
    }
    out
}

/// Outcome of testing whether a matrix is scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarCheck<T> {
    pub is_scalar: bool,
    pub scalar: Option<T>,
}

fn transposition_sum<T: Field>(gens: &[DenseMatrix<T>], dim: usize) -> DenseMatrix<T> {
    first_row_transpositions(gens)
        .iter()
        .fold(DenseMatrix::zeros(dim, dim), |acc, m| acc.add(m))
}

/// Whether `s_{12} + … + s_{1N}` acts on `W_λ` as a scalar, computed exactly in
/// the seminormal form.
pub fn transposition_sum_check(lambda: &Partition) -> ScalarCheck<Rational> {
    if lambda.size() <= 1 {
        return ScalarCheck {
            is_scalar: true,
            scalar: Some(Rational::from_integer(0)),
        };
    }
    let gens = young_seminormal_gens(lambda);
    let scalar = transposition_sum(&gens, gens[0].rows).as_scalar(0.0);
    ScalarCheck {
        is_scalar: scalar.is_some(),
        scalar,
    }
}

/// Floating-point variant using the orthogonal form, with tolerance `1e-9`.
pub fn transposition_sum_check_float(lambda: &Partition) -> ScalarCheck<f64> {
    if lambda.size() <= 1 {
        return ScalarCheck {
            is_scalar: true,
            scalar: Some(0.0),
        };
    }
    let gens = young_orthogonal_gens(lambda);
    let scalar = transposition_sum(&gens, gens[0].rows).as_scalar(1e-9);
    ScalarCheck {
        is_scalar: scalar.is_some(),
        scalar,
    }
}

/// `2·C(λ)/N`, the scalar expected on a rectangle.
pub fn expected_scalar(lambda: &Partition) -> Option<Rational> {
    rectangle_of(lambda)?;
    let n = lambda.size() as i64;
    Some(if n == 0 {
        Rational::from_integer(0)
    } else {
        Rational::new(2 * content(lambda), n)
    })
}
