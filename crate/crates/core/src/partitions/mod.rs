//! Young diagrams and the representation theory of symmetric groups at desk scale.

mod characters;
mod young;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use characters::{centralizer_order, mn_character, refl_hom_multiplicity};
pub use young::{
    expected_scalar, standard_tableaux, transposition_sum_check, transposition_sum_check_float,
    young_orthogonal_gens, young_seminormal_gens, DenseMatrix, Field, ScalarCheck, Tableau,
};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of removable cells.
    pub fn corners(&self) -> usize {
        let mut parts = self.0.clone();
        parts.dedup();
        parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..w)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn hook_dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j + conj.0[j] - i - 1) as u128;
            }
        }
        let fact: u128 = (1..=self.size() as u128).product();
        (fact / hooks) as u64
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Height `a` and width `b` of a rectangular diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RectShape {
    pub a: usize,
    pub b: usize,
}

impl RectShape {
    /// `b - a`.
    pub fn skew(&self) -> i64 {
        self.b as i64 - self.a as i64
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: i64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("cannot partition {n}")));
    }
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as usize, n as usize, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Some((a, b))` when all parts are equal; the empty partition gives `(0, 0)`.
pub fn rectangle_of(lambda: &Partition) -> Option<RectShape> {
    match lambda.0.first() {
        None => Some(RectShape { a: 0, b: 0 }),
        Some(&b) if lambda.0.iter().all(|&p| p == b) => Some(RectShape { a: lambda.len(), b }),
        _ => None,
    }
}

/// Sum of `col - row` over all cells.
pub fn content(lambda: &Partition) -> i64 {
    lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, &row)| (0..row as i64).map(|j| j - i as i64).sum::<i64>())
        .sum()
}
