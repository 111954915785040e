//! The relations imposed on `S_N ⋉ Γ^N`-modules where `x_i, y_i` act by zero:
//!
//! * for each `i`: `1 + (k/2) Σ_{j≠i} Σ_γ s_ij γ_i γ_j⁻¹ + Σ_{γ≠e} c_γ γ_i = 0`;
//! * for `i ≠ j` and `u, v ∈ {x, y}`: `(k/2) Σ_γ ω(γu, v) γ_i γ_j⁻¹ = 0`.
//!
//! Both are assembled as full matrices of the induced representation. The first
//! is affine in `(k, c_2, …, c_ν)` and the second is linear in `k`.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::{parameter_names, AffineSolution, CycloNumber, EquationAccumulator, Rational};
use crate::error::Result;
use crate::groups::symplectic_form;

use super::induced::InducedRep;
use super::perm::transposition;
use super::scalar::Scalar;
use super::sparse::SparseMatrix;

/// Coefficient matrices of both relations.
#[derive(Clone, Debug)]
pub struct RelationMatrices<S> {
    pub nu: usize,
    /// Per `i`: coefficient of `k` in the first relation.
    pub k_coef: Vec<SparseMatrix<S>>,
    /// Per `i`, per class `s = 2..ν`: coefficient of `c_s`.
    pub c_coef: Vec<Vec<SparseMatrix<S>>>,
    /// Per `(i, j, u, v)`: coefficient of `k` in the second relation.
    pub r2: Vec<((usize, usize, usize, usize), SparseMatrix<S>)>,
}

fn basis_vector(m: u32, u: usize) -> [CycloNumber; 2] {
    if u == 0 {
        [CycloNumber::one(m), CycloNumber::zero(m)]
    } else {
        [CycloNumber::zero(m), CycloNumber::one(m)]
    }
}

/// Assembles the relation matrices of `rep`; `nu` is the class count of `Γ`.
pub fn relation_matrices<S: Scalar>(rep: &InducedRep<S>, nu: usize) -> RelationMatrices<S> {
    let m = rep.conductor;
    let n = rep.n();
    let d = rep.dim();
    let order = rep.group_order();
    let half = S::from_rational(m, &Rational::new(1, 2));
    let gam: Vec<Vec<SparseMatrix<S>>> = (0..n)
        .map(|i| (0..order).map(|e| rep.gamma_matrix(i, e)).collect())
        .collect();
    // ω(γu, v) for each element and u, v ∈ {x, y}
    let omega: Vec<[[S; 2]; 2]> = rep
        .tautological
        .iter()
        .map(|t| {
            let w = |u: usize, v: usize| {
                let gu: Vec<CycloNumber> = (0..2)
                    .map(|r| {
                        &(&t[(r, 0)] * &basis_vector(m, u)[0])
                            + &(&t[(r, 1)] * &basis_vector(m, u)[1])
                    })
                    .collect();
                S::from_cyclo(&symplectic_form(&gu, &basis_vector(m, v)))
            };
            [[w(0, 0), w(0, 1)], [w(1, 0), w(1, 1)]]
        })
        .collect();

    let mut k_coef = vec![SparseMatrix::zeros(m, d); n];
    let mut r2 = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut plain = SparseMatrix::zeros(m, d);
            let mut weighted = vec![SparseMatrix::zeros(m, d); 4];
            for e in 0..order {
                let prod = gam[i][e].mul(&gam[j][rep.inverse_of[e]]);
                plain = plain.add(&prod);
                for (uv, acc) in weighted.iter_mut().enumerate() {
                    let w = &omega[e][uv / 2][uv % 2];
                    if !w.is_zero() {
                        *acc = acc.add_scaled(&prod, w);
                    }
                }
            }
            let sij = rep.perm_matrix(&transposition(n, i, j));
            k_coef[i] = k_coef[i].add_scaled(&sij.mul(&plain), &half);
            for (uv, acc) in weighted.into_iter().enumerate() {
                r2.push(((i, j, uv / 2, uv % 2), acc.scale(&half)));
            }
        }
    }
    let c_coef = (0..n)
        .map(|i| {
            (1..nu)
                .map(|s| {
                    (0..order)
                        .filter(|&e| rep.class_of[e] == s)
                        .fold(SparseMatrix::zeros(m, d), |acc, e| acc.add(&gam[i][e]))
                })
                .collect()
        })
        .collect();
    RelationMatrices {
        nu,
        k_coef,
        c_coef,
        r2,
    }
}

/// Solution set of the relations in `(k, c_2, …, c_ν)`.
#[derive(Clone, Debug, Serialize)]
pub struct OracleSolution {
    pub solution: AffineSolution,
    /// The relations admit no solution with `k ≠ 0`: either the second relation
    /// has a nonzero coefficient, or the solution set is nonempty with `k ≡ 0`.
    pub k_forced_zero: bool,
    /// Some coefficient of the second relation is nonzero.
    pub r2_nonzero: bool,
}

/// Stacks every matrix entry of every relation as one linear equation and solves.
pub fn solve_params_from_matrices(
    rel: &RelationMatrices<CycloNumber>,
    conductor: u32,
) -> Result<OracleSolution> {
    let nu = rel.nu;
    let mut acc = EquationAccumulator::new(conductor, nu);
    let mut seen: HashSet<Vec<CycloNumber>> = HashSet::new();
    let zero = CycloNumber::zero(conductor);
    'outer: for (i, kc) in rel.k_coef.iter().enumerate() {
        let mats: Vec<&SparseMatrix<CycloNumber>> =
            std::iter::once(kc).chain(rel.c_coef[i].iter()).collect();
        for a in 0..kc.dim() {
            let mut cols: Vec<usize> = mats
                .iter()
                .flat_map(|mm| mm.row(a).iter().map(|e| e.0))
                .collect();
            cols.push(a);
            cols.sort_unstable();
            cols.dedup();
            for b in cols {
                let mut row: Vec<CycloNumber> = mats.iter().map(|mm| mm.get(a, b)).collect();
                // the identity term moves to the right-hand side
                row.push(if a == b {
                    CycloNumber::from_int(conductor, -1)
                } else {
                    zero.clone()
                });
                if row.iter().all(CycloNumber::is_zero) || !seen.insert(row.clone()) {
                    continue;
                }
                acc.push(&row[..nu], &row[nu]);
                if acc.is_inconsistent() {
                    break 'outer;
                }
            }
        }
    }
    // every entry of the second relation reads coef·k = 0, so one nonzero entry says it all
    let r2_entry = rel
        .r2
        .iter()
        .flat_map(|(_, mm)| (0..mm.dim()).flat_map(move |a| mm.row(a).iter().map(|e| e.1.clone())))
        .find(|v| !v.is_zero());
    if let Some(c) = &r2_entry {
        let mut row = vec![zero.clone(); nu];
        row[0] = c.clone();
        acc.push(&row, &zero);
    }
    let solution = acc.solve(parameter_names(nu))?;
    Ok(OracleSolution {
        k_forced_zero: r2_entry.is_some()
            || (!solution.empty && solution.coordinate_forced_zero(0)),
        r2_nonzero: r2_entry.is_some(),
        solution,
    })
}

/// Solves the relations of an exact induced representation.
pub fn solve_params_from_relations(
    rep: &InducedRep<CycloNumber>,
    nu: usize,
) -> Result<OracleSolution> {
    solve_params_from_matrices(&relation_matrices(rep, nu), rep.conductor)
}

/// Largest residual entries of both relations at a parameter point.
#[derive(Clone, Debug, Serialize)]
pub struct Residuals {
    pub r1: f64,
    pub r2: f64,
    /// Both relations vanish (exactly in exact mode, within tolerance in float mode).
    pub vanish: bool,
}

/// Evaluates both relations at `point = (k, c_2, …, c_ν)`.
pub fn residuals_at<S: Scalar>(
    rel: &RelationMatrices<S>,
    point: &[S],
    conductor: u32,
) -> Residuals {
    let d = rel.k_coef.first().map_or(0, SparseMatrix::dim);
    let id = SparseMatrix::identity(conductor, d);
    let mut r1 = 0.0f64;
    let mut r2 = 0.0f64;
    let mut vanish = true;
    for (i, kc) in rel.k_coef.iter().enumerate() {
        let mut total = id.add_scaled(kc, &point[0]);
        for (s, cc) in rel.c_coef[i].iter().enumerate() {
            total = total.add_scaled(cc, &point[s + 1]);
        }
        r1 = r1.max(total.max_magnitude());
        vanish &= total.is_negligible();
    }
    for (_, mm) in &rel.r2 {
        let total = mm.scale(&point[0]);
        r2 = r2.max(total.max_magnitude());
        vanish &= total.is_negligible();
    }
    Residuals { r1, r2, vanish }
}
