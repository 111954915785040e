use std::fmt::Debug;

use num_complex::Complex64;

use crate::arith::{CycloNumber, Rational};
use crate::partitions::{
    young_orthogonal_gens, young_seminormal_gens, DenseMatrix, Field, Partition,
};

/// Float tolerance below which a complex entry counts as zero.
pub const FLOAT_TOL: f64 = 1e-9;

/// Entry type of verifier matrices: exact cyclotomic numbers or complex floats.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync {
    const EXACT: bool;

    fn zero(conductor: u32) -> Self;
    fn one(conductor: u32) -> Self;
    fn from_cyclo(x: &CycloNumber) -> Self;
    fn from_rational(conductor: u32, q: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Structural zero, used to keep sparse storage sparse.
    fn is_zero(&self) -> bool;
    /// Zero up to the mode's tolerance.
    fn negligible(&self) -> bool;
    fn magnitude(&self) -> f64;
    /// Matrices of the adjacent transpositions on `W_λ`.
    fn young_generators(lambda: &Partition, conductor: u32) -> Vec<Vec<Vec<Self>>>;
}

fn convert<T: Field, S>(gens: Vec<DenseMatrix<T>>, f: impl Fn(&T) -> S) -> Vec<Vec<Vec<S>>> {
    gens.into_iter()
        .map(|m| {
            (0..m.rows)
                .map(|r| (0..m.cols).map(|c| f(m.get(r, c))).collect())
                .collect()
        })
        .collect()
}

impl Scalar for CycloNumber {
    const EXACT: bool = true;

    fn zero(conductor: u32) -> Self {
        CycloNumber::zero(conductor)
    }
    fn one(conductor: u32) -> Self {
        CycloNumber::one(conductor)
    }
    fn from_cyclo(x: &CycloNumber) -> Self {
        x.clone()
    }
    fn from_rational(conductor: u32, q: &Rational) -> Self {
        CycloNumber::from_rational(conductor, q.clone())
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
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn negligible(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
    fn young_generators(lambda: &Partition, conductor: u32) -> Vec<Vec<Vec<Self>>> {
        convert(young_seminormal_gens(lambda), |q| {
            CycloNumber::from_rational(conductor, q.clone())
        })
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero(_: u32) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one(_: u32) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_cyclo(x: &CycloNumber) -> Self {
        x.to_complex()
    }
    fn from_rational(_: u32, q: &Rational) -> Self {
        Complex64::new(q.to_f64(), 0.0)
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
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn negligible(&self) -> bool {
        self.norm() < FLOAT_TOL
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn young_generators(lambda: &Partition, _: u32) -> Vec<Vec<Vec<Self>>> {
        convert(young_orthogonal_gens(lambda), |&x| Complex64::new(x, 0.0))
    }
}
