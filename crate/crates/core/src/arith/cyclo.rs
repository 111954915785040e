//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! Elements are residues modulo the `m`-th cyclotomic polynomial `Φ_m`, stored as
//! rational coefficient vectors of length `φ(m)` in the power basis
//! `1, ζ, …, ζ^{φ(m)-1}`. Reduction modulo `Φ_m` (rather than `x^m - 1`) keeps
//! the representation canonical and the ring a field.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Shared data for one cyclotomic field.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    /// Monic `Φ_m`, low degree first; `phi.len() == degree + 1`.
    phi: Vec<i64>,
    /// `ζ^k mod Φ_m` for `k in 0..m`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[i64] {
        &self.phi
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let t = rem[i + dd];
        quot[i] = t;
        if t != 0 {
            for (j, &c) in den.iter().enumerate() {
                rem[i + j] -= t * c;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn cyclotomic_poly(m: u32) -> Vec<i64> {
    // x^m - 1 = prod_{d | m} Φ_d
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn build_field(m: u32) -> CyclotomicField {
    let phi = cyclotomic_poly(m);
    let deg = phi.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; deg];
    cur[0] = 1;
    if deg == 0 {
        unreachable!("Φ_m has positive degree");
    }
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x and reduce
        let top = cur[deg - 1];
        for i in (1..deg).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..deg {
                cur[i] -= top * phi[i];
            }
        }
    }
    CyclotomicField {
        conductor: m,
        phi,
        powers,
    }
}

/// Returns the (cached) field `Q(ζ_m)`.
pub fn field(m: u32) -> Arc<CyclotomicField> {
    assert!(m >= 1, "conductor must be positive");
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("field cache poisoned");
    guard
        .entry(m)
        .or_insert_with(|| Arc::new(build_field(m)))
        .clone()
}

/// An exact element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn zero(m: u32) -> Self {
        let field = field(m);
        let coeffs = vec![Rational::from_integer(0); field.degree()];
        CycloNumber { field, coeffs }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, Rational::from_integer(1))
    }

    pub fn from_int(m: u32, n: i64) -> Self {
        Self::from_rational(m, Rational::from_integer(n))
    }

    pub fn from_rational(m: u32, q: Rational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = q;
        z
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        let field = field(m);
        let idx = k.rem_euclid(m as i64) as usize;
        let coeffs = field.powers[idx]
            .iter()
            .map(|&c| Rational::from_integer(c))
            .collect();
        CycloNumber { field, coeffs }
    }

    /// Reduces an arbitrary rational polynomial in `ζ_m` to canonical form.
    pub fn reduce(raw: &[Rational], m: u32) -> Self {
        let field = field(m);
        let deg = field.degree();
        let mut coeffs = vec![Rational::from_integer(0); deg];
        for (k, a) in raw.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if k < deg {
                coeffs[k] += a;
            } else {
                let pw = &field.powers[k % m as usize];
                for (c, &p) in coeffs.iter_mut().zip(pw) {
                    if p != 0 {
                        *c += &(a * &Rational::from_integer(p));
                    }
                }
            }
        }
        CycloNumber { field, coeffs }
    }

    /// Builds an element from canonical coefficients; the length must be `φ(m)`.
    pub fn from_coeffs(m: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let field = field(m);
        if coeffs.len() != field.degree() {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for conductor {m}, got {}",
                field.degree(),
                coeffs.len()
            )));
        }
        Ok(CycloNumber { field, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Zero in the same field, without touching the field cache.
    pub fn zero_like(&self) -> Self {
        CycloNumber {
            field: self.field.clone(),
            coeffs: vec![Rational::from_integer(0); self.coeffs.len()],
        }
    }

    pub fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = Rational::from_integer(1);
        z
    }

    pub fn rational_like(&self, q: Rational) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = q;
        z
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().and_then(Rational::to_i64)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "mixed cyclotomic conductors"
        );
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.field.conductor as usize;
        let mut raw = vec![Rational::from_integer(0); m];
        for (k, a) in self.coeffs.iter().enumerate() {
            raw[(m - k) % m] += a;
        }
        Self::reduce(&raw, self.field.conductor)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.conductor(), q.recip().unwrap()));
        }
        // Solve (multiplication-by-self matrix) * u = e_0.
        let m = self.conductor();
        let d = self.field.degree();
        let mut mat: Vec<Vec<Rational>> = vec![vec![Rational::from_integer(0); d + 1]; d];
        let mut basis = Self::one(m);
        let zeta = Self::root_of_unity(m, 1);
        for col in 0..d {
            let prod = self * &basis;
            for (row, c) in prod.coeffs.iter().enumerate() {
                mat[row][col] = c.clone();
            }
            basis = &basis * &zeta;
        }
        mat[0][d] = Rational::from_integer(1);
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !mat[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            mat.swap(col, piv);
            let inv = mat[col][col].recip().unwrap();
            for x in mat[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..d {
                if r != col && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c in col..=d {
                        let t = &f * &mat[col][c];
                        mat[r][c] -= &t;
                    }
                }
            }
        }
        let coeffs = mat.into_iter().map(|row| row[d].clone()).collect();
        Ok(CycloNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Embeds into `Q(ζ_M)` for a multiple `M` of the conductor.
    pub fn lift_to(&self, target: u32) -> Result<Self> {
        let m = self.conductor();
        if !target.is_multiple_of(m) {
            return Err(Error::InvalidInput(format!(
                "conductor {m} does not divide {target}"
            )));
        }
        let step = (target / m) as usize;
        let mut raw = vec![Rational::from_integer(0); target as usize];
        for (k, a) in self.coeffs.iter().enumerate() {
            raw[(k * step) % target as usize] += a;
        }
        Ok(Self::reduce(&raw, target))
    }

    /// Complex embedding `ζ_m ↦ exp(2πi/m)`.
    pub fn to_complex(&self) -> Complex64 {
        let m = self.conductor() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| Complex64::from_polar(a.to_f64(), std::f64::consts::TAU * k as f64 / m))
            .sum()
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        self.same_field(rhs);
        CycloNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self.same_field(rhs);
        CycloNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.same_field(rhs);
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        let d = self.field.degree();
        let mut prod = vec![Rational::from_integer(0); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        let phi = &self.field.phi;
        for i in (d..2 * d - 1).rev() {
            if prod[i].is_zero() {
                continue;
            }
            let t = std::mem::replace(&mut prod[i], Rational::from_integer(0));
            for (j, &c) in phi[..d].iter().enumerate() {
                if c != 0 {
                    prod[i - d + j] -= &(&t * &Rational::from_integer(c));
                }
            }
        }
        prod.truncate(d);
        CycloNumber {
            field: self.field.clone(),
            coeffs: prod,
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        self.same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        self.same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.conductor();
        let mut wrote = false;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z{m}")?;
                    } else {
                        write!(f, "z{m}^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let z = self.to_complex();
        let mut st = serializer.serialize_struct("CycloNumber", 3)?;
        st.serialize_field("conductor", &self.conductor())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("approx", &[clean(z.re), clean(z.im)])?;
        st.end()
    }
}

/// Rounds away float noise so renderings are stable across platforms.
fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(field(1).minimal_polynomial(), &[-1, 1]);
        assert_eq!(field(2).minimal_polynomial(), &[1, 1]);
        assert_eq!(field(4).minimal_polynomial(), &[1, 0, 1]);
        assert_eq!(field(6).minimal_polynomial(), &[1, -1, 1]);
        assert_eq!(field(8).minimal_polynomial(), &[1, 0, 0, 0, 1]);
        assert_eq!(field(12).minimal_polynomial(), &[1, 0, -1, 0, 1]);
        assert_eq!(field(5).degree(), 4);
    }

    #[test]
    fn reduce_examples() {
        // ζ_4^2 = -1
        let z = CycloNumber::reduce(&[q(0, 1), q(0, 1), q(1, 1)], 4);
        assert_eq!(z, CycloNumber::from_int(4, -1));
        // ζ_3 + ζ_3^2 = -1
        let z = CycloNumber::reduce(&[q(0, 1), q(1, 1), q(1, 1)], 3);
        assert_eq!(z, CycloNumber::from_int(3, -1));
        // ζ_2 = -1
        let z = CycloNumber::reduce(&[q(0, 1), q(1, 1)], 2);
        assert_eq!(z, CycloNumber::from_int(2, -1));
    }

    #[test]
    fn zero_has_no_inverse() {
        let err = CycloNumber::zero(7).inverse().unwrap_err();
        assert_eq!(err.to_string(), "division by zero in cyclotomic field");
    }

    #[test]
    fn inverse_and_conjugate() {
        let x = &CycloNumber::root_of_unity(12, 1) + &CycloNumber::from_int(12, 2);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        let z = CycloNumber::root_of_unity(12, 5);
        assert_eq!(z.conj(), CycloNumber::root_of_unity(12, 7));
        let c = x.to_complex() * x.conj().to_complex();
        let n = (&x * &x.conj()).to_complex();
        assert!((c - n).norm() < 1e-12);
    }

    #[test]
    fn lifting_preserves_value() {
        let i4 = CycloNumber::root_of_unity(4, 1);
        let lifted = i4.lift_to(12).unwrap();
        assert_eq!(lifted, CycloNumber::root_of_unity(12, 3));
        assert!(i4.lift_to(6).is_err());
    }

    #[test]
    fn golden_ratio_in_q_zeta5() {
        // φ = 1 + ζ + ζ^4 satisfies φ^2 = φ + 1
        let phi = &(&CycloNumber::one(5) + &CycloNumber::root_of_unity(5, 1))
            + &CycloNumber::root_of_unity(5, 4);
        assert_eq!(&phi * &phi, &phi + &CycloNumber::one(5));
        assert!((phi.to_complex().re - 1.618_033_988_749_895).abs() < 1e-12);
    }
}
