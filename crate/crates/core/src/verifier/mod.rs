//! Matrix-level check of the classification for cyclic and dicyclic groups.
//!
//! For each candidate the induced representation is built explicitly, both
//! relations are assembled as full matrices, and every matrix entry becomes one
//! exact linear equation in `(k, c_2, …, c_ν)`. The resulting solution set is
//! compared with the classifier's parameter family.

mod induced;
mod perm;
mod relations;
mod scalar;
mod sparse;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{AffineSolution, CycloNumber, Rational};
use crate::classify::{all_candidates, family_for, ReprCandidate};
use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::mckay::{build_mckay, McKayGraph};

pub use induced::{
    build_induced, irrep_matrices, max_induced_dim, InducedRep, IrrepMatrices, DEFAULT_MAX_DIM,
};
pub use perm::{compose, coset_representatives, inverse, transposition, CosetTable, Perm, MAX_N};
pub use relations::{
    relation_matrices, residuals_at, solve_params_from_matrices, solve_params_from_relations,
    OracleSolution, RelationMatrices, Residuals,
};
pub use scalar::{Scalar, FLOAT_TOL};
pub use sparse::SparseMatrix;

/// Arithmetic used for the residual evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Cyclotomic arithmetic with Young's seminormal form.
    Exact,
    /// Complex floats with Young's orthogonal form.
    Float,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Error::InvalidInput(format!(
                "unknown mode {s:?} (expected exact or float)"
            ))),
        }
    }
}

/// A point `(k, c_2, …, c_ν)` of parameter space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamPoint {
    pub k: CycloNumber,
    pub c: Vec<CycloNumber>,
}

impl ParamPoint {
    pub fn coords(&self) -> Vec<CycloNumber> {
        std::iter::once(self.k.clone())
            .chain(self.c.iter().cloned())
            .collect()
    }
}

/// Point of the family with `k ≠ 0`: the particular point if its `k` is nonzero,
/// otherwise the particular point plus the first kernel vector with nonzero `k`,
/// scaled so that `k = 1`.
pub fn default_point(sol: &AffineSolution) -> Option<Vec<CycloNumber>> {
    if sol.empty {
        return None;
    }
    if !sol.particular[0].is_zero() {
        return Some(sol.particular.clone());
    }
    let v = sol.kernel.iter().find(|v| !v[0].is_zero())?;
    let f = v[0].inverse().ok()?;
    Some(
        sol.particular
            .iter()
            .zip(v)
            .map(|(p, x)| p + &(x * &f))
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub candidate: ReprCandidate,
    pub mode: Mode,
    pub dim_induced: u128,
    pub point: ParamPoint,
    #[serde(rename = "residual_R1")]
    pub residual_r1: f64,
    #[serde(rename = "residual_R2")]
    pub residual_r2: f64,
    pub residuals_vanish: bool,
    pub oracle: OracleSolution,
    pub classifier_accepts: bool,
    pub oracle_accepts: bool,
    pub agrees_with_classifier: bool,
}

fn exact_residuals(
    rel: &RelationMatrices<CycloNumber>,
    point: &[CycloNumber],
    m: u32,
) -> Residuals {
    residuals_at(rel, point, m)
}

fn float_residuals(
    g: &GroupData,
    cand: &ReprCandidate,
    point: &[CycloNumber],
) -> Result<Residuals> {
    let rep = build_induced::<Complex64>(g, cand)?;
    let rel = relation_matrices(&rep, g.nu());
    let p: Vec<Complex64> = point.iter().map(CycloNumber::to_complex).collect();
    Ok(residuals_at(&rel, &p, g.conductor))
}

/// Evaluates both relations of `cand` at `point` in the given mode.
pub fn relation_residuals(
    g: &GroupData,
    cand: &ReprCandidate,
    point: &[CycloNumber],
    mode: Mode,
) -> Result<Residuals> {
    match mode {
        Mode::Exact => {
            let rep = build_induced::<CycloNumber>(g, cand)?;
            Ok(exact_residuals(
                &relation_matrices(&rep, g.nu()),
                point,
                g.conductor,
            ))
        }
        Mode::Float => float_residuals(g, cand, point),
    }
}

/// Runs the oracle on one candidate and compares with the classifier.
pub fn verify_candidate(
    g: &GroupData,
    graph: &McKayGraph,
    cand: &ReprCandidate,
    mode: Mode,
) -> Result<VerificationReport> {
    let rep = build_induced::<CycloNumber>(g, cand)?;
    let rel = relation_matrices(&rep, g.nu());
    let oracle = solve_params_from_matrices(&rel, g.conductor)?;
    let oracle_accepts = !oracle.solution.empty && !oracle.k_forced_zero;

    let classifier_accepts = cand.rectangles().is_some() && graph.is_independent(&cand.support());
    let agrees = match (classifier_accepts, oracle_accepts) {
        (true, true) => family_for(g, cand)?.solution.same_set(&oracle.solution),
        (a, b) => a == b,
    };

    let m = g.conductor;
    let point = default_point(&oracle.solution)
        .filter(|_| oracle_accepts)
        .unwrap_or_else(|| {
            std::iter::once(CycloNumber::one(m))
                .chain((1..g.nu()).map(|_| CycloNumber::zero(m)))
                .collect()
        });
    let res = match mode {
        Mode::Exact => exact_residuals(&rel, &point, m),
        Mode::Float => float_residuals(g, cand, &point)?,
    };
    Ok(VerificationReport {
        candidate: cand.clone(),
        mode,
        dim_induced: cand.induced_dimension(g),
        point: ParamPoint {
            k: point[0].clone(),
            c: point[1..].to_vec(),
        },
        residual_r1: res.r1,
        residual_r2: res.r2,
        residuals_vanish: res.vanish,
        oracle,
        classifier_accepts,
        oracle_accepts,
        agrees_with_classifier: agrees,
    })
}

/// Candidates skipped because their induced dimension exceeds the guard.
#[derive(Clone, Debug, Serialize)]
pub struct SkippedCandidate {
    pub candidate: ReprCandidate,
    pub dim_induced: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationSweep {
    pub reports: Vec<VerificationReport>,
    pub skipped: Vec<SkippedCandidate>,
}

impl VerificationSweep {
    pub fn all_agree(&self) -> bool {
        self.reports.iter().all(|r| r.agrees_with_classifier)
    }
}

/// Verifies every candidate of `S_N ⋉ Γ^N` accepted by `filter`.
pub fn verify_all(
    g: &GroupData,
    n: usize,
    mode: Mode,
    filter: impl Fn(&ReprCandidate) -> bool + Sync,
) -> Result<VerificationSweep> {
    if !g.has_elements() {
        return Err(Error::Unsupported(
            "matrix verification unsupported for exceptional groups".into(),
        ));
    }
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!(
            "N = {n} is outside the verifier range 1..={MAX_N}"
        )));
    }
    let graph = build_mckay(g)?;
    let cap = max_induced_dim();
    let (run, skip): (Vec<ReprCandidate>, Vec<ReprCandidate>) = all_candidates(g.nu(), n)
        .into_iter()
        .filter(|c| filter(c))
        .partition(|c| c.induced_dimension(g) <= cap);
    let reports = run
        .par_iter()
        .map(|c| verify_candidate(g, &graph, c, mode))
        .collect::<Result<Vec<_>>>()?;
    let skipped = skip
        .into_iter()
        .map(|c| SkippedCandidate {
            dim_induced: c.induced_dimension(g),
            candidate: c,
        })
        .collect();
    Ok(VerificationSweep { reports, skipped })
}

/// `(k, c) = (1, 0)`, the point used for candidates with no `k ≠ 0` solution.
pub fn unit_k_point(g: &GroupData) -> Vec<CycloNumber> {
    let m = g.conductor;
    std::iter::once(CycloNumber::from_rational(m, Rational::from_integer(1)))
        .chain((1..g.nu()).map(|_| CycloNumber::zero(m)))
        .collect()
}
