//! Explicit matrices of `W ⊗ Y↑`, induced from the inertia subgroup
//! `S_{N⃗} ⋉ Γ^N` to `S_N ⋉ Γ^N`.
//!
//! Positions `0..N` are grouped into consecutive blocks, one per active irrep
//! `h` in increasing order, and position `p` carries the factor `Y_{h_p}`. The
//! basis vector `σ_l ⊗ w ⊗ y` has index `(l·dim W + w)·dim Y + y`, with `y` in
//! mixed radix over positions (position 0 most significant).

use crate::arith::{CycloMatrix, CycloNumber};
use crate::classify::ReprCandidate;
use crate::error::{Error, Result};
use crate::groups::{GroupData, Word};

use super::perm::{compose, inverse, transposition, CosetTable, Perm};
use super::scalar::Scalar;
use super::sparse::SparseMatrix;

/// Matrices of one irreducible of `Γ`, aligned with `GroupData::enumerate_elements`.
#[derive(Clone, Debug)]
pub struct IrrepMatrices {
    pub h: usize,
    pub dim: usize,
    pub words: Vec<Word>,
    pub matrices: Vec<CycloMatrix>,
}

impl IrrepMatrices {
    pub fn matrix(&self, w: Word) -> &CycloMatrix {
        let i = self
            .words
            .iter()
            .position(|&x| x == w)
            .expect("word of this group");
        &self.matrices[i]
    }
}

fn unsupported() -> Error {
    Error::Unsupported("matrix verification unsupported for exceptional groups".into())
}

/// Explicit matrices of the irreducible `Y_h`, checked for multiplicativity and
/// against the character table.
pub fn irrep_matrices(g: &GroupData, h: usize) -> Result<IrrepMatrices> {
    if !g.has_elements() {
        return Err(unsupported());
    }
    if h >= g.nu() {
        return Err(Error::InvalidInput(format!("irrep index {h} out of range")));
    }
    let m = g.conductor;
    let elements = g.enumerate_elements()?;
    let dim = g.dim(h);
    let words: Vec<Word> = elements.iter().map(|e| e.word).collect();
    let matrices: Vec<CycloMatrix> = match dim {
        1 => words
            .iter()
            .map(|&w| CycloMatrix::from_rows(m, vec![vec![g.character(h, g.class_of(w)).clone()]]))
            .collect::<Result<_>>()?,
        2 => {
            let crate::groups::GroupSpec::Dicyclic(q) = g.spec else {
                return Err(Error::Invariant(format!(
                    "unexpected 2-dimensional irrep of {}",
                    g.spec
                )));
            };
            // δ_{h+1}: α ↦ diag(ε^{h+1}, ε^{-(h+1)}), β ↦ [[0, ε^{(h+1)q}], [1, 0]]
            let step = (m as usize / (2 * q)) as i64;
            let hh = (h + 1) as i64;
            let zero = CycloNumber::zero(m);
            words
                .iter()
                .map(|&w| {
                    let Word::Dicyclic { s, t } = w else {
                        unreachable!()
                    };
                    let e = |k: i64| CycloNumber::root_of_unity(m, k * step);
                    let a = CycloMatrix::from_rows(
                        m,
                        vec![
                            vec![e(hh * s as i64), zero.clone()],
                            vec![zero.clone(), e(-hh * s as i64)],
                        ],
                    )?;
                    if t == 0 {
                        return Ok(a);
                    }
                    let b = CycloMatrix::from_rows(
                        m,
                        vec![
                            vec![zero.clone(), e(hh * q as i64)],
                            vec![CycloNumber::one(m), zero.clone()],
                        ],
                    )?;
                    a.mul(&b)
                })
                .collect::<Result<_>>()?
        }
        d => {
            return Err(Error::Invariant(format!(
                "no explicit matrices for dimension {d}"
            )))
        }
    };
    let rep = IrrepMatrices {
        h,
        dim,
        words,
        matrices,
    };
    for (i, &w) in rep.words.iter().enumerate() {
        if rep.matrices[i].trace() != *g.character(h, g.class_of(w)) {
            return Err(Error::Invariant(format!(
                "irrep {h}: trace mismatch at {w:?}"
            )));
        }
        for (j, &v) in rep.words.iter().enumerate() {
            let prod = rep.matrices[i].mul(&rep.matrices[j])?;
            if prod != *rep.matrix(g.multiply(w, v)) {
                return Err(Error::Invariant(format!("irrep {h} is not multiplicative")));
            }
        }
    }
    if !rep
        .matrix(g.identity_word().expect("has elements"))
        .is_identity()
    {
        return Err(Error::Invariant(format!(
            "irrep {h} does not fix the identity"
        )));
    }
    Ok(rep)
}

type Dense<S> = Vec<Vec<S>>;

fn dense_identity<S: Scalar>(m: u32, n: usize) -> Dense<S> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one(m) } else { S::zero(m) })
                .collect()
        })
        .collect()
}

fn dense_mul<S: Scalar>(m: u32, a: &Dense<S>, b: &Dense<S>) -> Dense<S> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(S::zero(m), |acc, (x, brow)| acc.add(&x.mul(&brow[j])))
                })
                .collect()
        })
        .collect()
}

fn kron<S: Scalar>(a: &Dense<S>, b: &Dense<S>) -> Dense<S> {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a.first().map_or(0, Vec::len), b.first().map_or(0, Vec::len));
    (0..ra * rb)
        .map(|r| {
            (0..ca * cb)
                .map(|c| a[r / rb][c / cb].mul(&b[r % rb][c % cb]))
                .collect()
        })
        .collect()
}

/// The induced representation with its generator data.
#[derive(Clone, Debug)]
pub struct InducedRep<S> {
    pub candidate: ReprCandidate,
    pub conductor: u32,
    pub cosets: CosetTable,
    /// Irrep index carried by each position.
    pub pos_irrep: Vec<usize>,
    pub dim_w: usize,
    pub dim_y: usize,
    pub words: Vec<Word>,
    /// Index of the inverse of each element.
    pub inverse_of: Vec<usize>,
    /// Class index of each element.
    pub class_of: Vec<usize>,
    /// Tautological 2×2 matrix of each element.
    pub tautological: Vec<CycloMatrix>,
    /// Per irrep `h`: matrix of each element, when `h` is active.
    elem_mats: Vec<Option<Vec<Dense<S>>>>,
    /// Per block: adjacent-transposition matrices on `W_{λ_b}`.
    w_gens: Vec<Vec<Dense<S>>>,
    w_dims: Vec<usize>,
    y_dims: Vec<usize>,
    y_strides: Vec<usize>,
}

/// Default cap on `M · dim W · dim Y`, overridable with `SREFL_MAX_DIM`.
pub const DEFAULT_MAX_DIM: u128 = 20000;

pub fn max_induced_dim() -> u128 {
    std::env::var("SREFL_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

/// Builds `W ⊗ Y↑` for a cyclic or dicyclic group and checks it is a representation.
pub fn build_induced<S: Scalar>(g: &GroupData, cand: &ReprCandidate) -> Result<InducedRep<S>> {
    if !g.has_elements() {
        return Err(unsupported());
    }
    if cand.type_vec.len() != g.nu() {
        return Err(Error::InvalidInput(format!(
            "type vector has {} entries, group has {} irreducibles",
            cand.type_vec.len(),
            g.nu()
        )));
    }
    let cosets = CosetTable::new(&cand.type_vec)?;
    let dim = cand.induced_dimension(g);
    let cap = max_induced_dim();
    if dim > cap {
        return Err(Error::InvalidInput(format!(
            "induced dimension {dim} exceeds the guard {cap}; raise SREFL_MAX_DIM to allow it"
        )));
    }
    let m = g.conductor;
    let elements = g.enumerate_elements()?;
    let words: Vec<Word> = elements.iter().map(|e| e.word).collect();
    let inverse_of = words
        .iter()
        .map(|&w| {
            let inv = g.inverse(w);
            words
                .iter()
                .position(|&x| x == inv)
                .expect("closed under inverse")
        })
        .collect();
    let mut elem_mats = vec![None; g.nu()];
    for &h in cand.partitions.keys() {
        let rep = irrep_matrices(g, h)?;
        elem_mats[h] = Some(
            rep.matrices
                .iter()
                .map(|mat| {
                    mat.to_rows()
                        .iter()
                        .map(|row| row.iter().map(S::from_cyclo).collect())
                        .collect()
                })
                .collect(),
        );
    }
    let mut pos_irrep = Vec::new();
    let mut w_gens = Vec::new();
    let mut w_dims = Vec::new();
    for (&h, lambda) in &cand.partitions {
        pos_irrep.extend(std::iter::repeat_n(h, lambda.size()));
        w_gens.push(S::young_generators(lambda, m));
        w_dims.push(lambda.hook_dimension() as usize);
    }
    let y_dims: Vec<usize> = pos_irrep.iter().map(|&h| g.dim(h)).collect();
    let mut y_strides = vec![1; y_dims.len()];
    for p in (0..y_dims.len().saturating_sub(1)).rev() {
        y_strides[p] = y_strides[p + 1] * y_dims[p + 1];
    }
    let rep = InducedRep {
        candidate: cand.clone(),
        conductor: m,
        pos_irrep,
        dim_w: w_dims.iter().product(),
        dim_y: y_dims.iter().product(),
        inverse_of,
        class_of: elements.iter().map(|e| e.class).collect(),
        tautological: elements.into_iter().map(|e| e.matrix).collect(),
        words,
        cosets,
        elem_mats,
        w_gens,
        w_dims,
        y_dims,
        y_strides,
    };
    if rep.dim() as u128 != dim {
        return Err(Error::Invariant(format!(
            "induced dimension {} differs from M·dim W·dim Y = {dim}",
            rep.dim()
        )));
    }
    rep.check_invariants(g)?;
    Ok(rep)
}

impl<S: Scalar> InducedRep<S> {
    pub fn n(&self) -> usize {
        self.pos_irrep.len()
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.dim_w * self.dim_y
    }

    pub fn group_order(&self) -> usize {
        self.words.len()
    }

    fn index(&self, l: usize, w: usize, y: usize) -> usize {
        (l * self.dim_w + w) * self.dim_y + y
    }

    /// Matrix of a permutation of `W_{λ_b}`, from a reduced word.
    fn young_matrix(&self, b: usize, tau: &[usize]) -> Dense<S> {
        let m = self.conductor;
        let mut pi = tau.to_vec();
        let mut word = Vec::new();
        // π = (π∘s_i)∘s_i peels a descent off the right end
        while let Some(i) = (0..pi.len().saturating_sub(1)).find(|&i| pi[i] > pi[i + 1]) {
            word.push(i);
            pi.swap(i, i + 1);
        }
        let mut mat = dense_identity::<S>(m, self.w_dims[b]);
        for &i in word.iter().rev() {
            mat = dense_mul(m, &mat, &self.w_gens[b][i]);
        }
        mat
    }

    /// Image of the permutation `π` of positions.
    pub fn perm_matrix(&self, pi: &[usize]) -> SparseMatrix<S> {
        let mut entries = Vec::new();
        for l in 0..self.cosets.len() {
            let (r, tau) = self.cosets.factor(pi, l);
            let mut w_mat: Dense<S> = vec![vec![S::one(self.conductor)]];
            for (b, &(start, len)) in self.cosets.blocks.iter().enumerate() {
                let local: Perm = (start..start + len).map(|p| tau[p] - start).collect();
                w_mat = kron(&w_mat, &self.young_matrix(b, &local));
            }
            for y in 0..self.dim_y {
                // the factor at position p moves to τ(p)
                let mut y2 = 0;
                for p in 0..self.n() {
                    let digit = (y / self.y_strides[p]) % self.y_dims[p];
                    y2 += digit * self.y_strides[tau[p]];
                }
                for w in 0..self.dim_w {
                    for (w2, row) in w_mat.iter().enumerate() {
                        if !row[w].is_zero() {
                            entries.push((
                                self.index(r, w2, y2),
                                self.index(l, w, y),
                                row[w].clone(),
                            ));
                        }
                    }
                }
            }
        }
        SparseMatrix::from_triplets(self.conductor, self.dim(), entries)
    }

    /// Image of the element `e` of `Γ` placed in factor `i`.
    pub fn gamma_matrix(&self, i: usize, e: usize) -> SparseMatrix<S> {
        let mut entries = Vec::new();
        for (l, sigma) in self.cosets.reps.iter().enumerate() {
            let p = inverse(sigma)[i];
            let rho = &self.elem_mats[self.pos_irrep[p]]
                .as_ref()
                .expect("active irrep")[e];
            let (stride, d) = (self.y_strides[p], self.y_dims[p]);
            for y in 0..self.dim_y {
                let a = (y / stride) % d;
                let base = y - a * stride;
                for (a2, row) in rho.iter().enumerate() {
                    if row[a].is_zero() {
                        continue;
                    }
                    for w in 0..self.dim_w {
                        entries.push((
                            self.index(l, w, base + a2 * stride),
                            self.index(l, w, y),
                            row[a].clone(),
                        ));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(self.conductor, self.dim(), entries)
    }

    /// Images of the adjacent transpositions `s_0, …, s_{N-2}`.
    pub fn adjacent_transpositions(&self) -> Vec<SparseMatrix<S>> {
        (0..self.n().saturating_sub(1))
            .map(|k| self.perm_matrix(&transposition(self.n(), k, k + 1)))
            .collect()
    }

    /// Coxeter relations, commutation of factors of `Γ^N`, and
    /// `σ γ_i σ⁻¹ = γ_{σ(i)}` for adjacent `σ` and generators `γ` of `Γ`.
    fn check_invariants(&self, g: &GroupData) -> Result<()> {
        let fail = |what: &str| Err(Error::Invariant(format!("induced representation: {what}")));
        let n = self.n();
        let s = self.adjacent_transpositions();
        for (i, a) in s.iter().enumerate() {
            if !a.mul(a).is_identity() {
                return fail("s_i^2 != 1");
            }
            for (j, b) in s.iter().enumerate().skip(i + 1) {
                let ok = if j == i + 1 {
                    a.mul(b).mul(a).approx_eq(&b.mul(a).mul(b))
                } else {
                    a.mul(b).approx_eq(&b.mul(a))
                };
                if !ok {
                    return fail("braid relation fails");
                }
            }
        }
        let gens: Vec<usize> = match g.spec {
            crate::groups::GroupSpec::Cyclic(_) => vec![Word::Cyclic { s: 1 }],
            _ => vec![Word::Dicyclic { s: 1, t: 0 }, Word::Dicyclic { s: 0, t: 1 }],
        }
        .into_iter()
        .map(|w| self.words.iter().position(|&x| x == w).expect("generator"))
        .collect();
        let gm: Vec<Vec<SparseMatrix<S>>> = (0..n)
            .map(|i| gens.iter().map(|&e| self.gamma_matrix(i, e)).collect())
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                for a in &gm[i] {
                    for b in &gm[j] {
                        if !a.mul(b).approx_eq(&b.mul(a)) {
                            return fail("factors of Γ^N do not commute");
                        }
                    }
                }
            }
            for (k, sk) in s.iter().enumerate() {
                let target = compose(&transposition(n, k, k + 1), &[i])[0];
                for (x, a) in gm[i].iter().enumerate() {
                    if !sk.mul(a).mul(sk).approx_eq(&gm[target][x]) {
                        return fail("σ γ_i σ⁻¹ != γ_σ(i)");
                    }
                }
            }
        }
        Ok(())
    }
}
