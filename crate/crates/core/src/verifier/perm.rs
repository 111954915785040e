//! Permutations in one-line notation on `0..N`, composed right to left:
//! `(a∘b)(i) = a[b[i]]`.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Perm = Vec<usize>;

/// Largest `N` the matrix verifier accepts.
pub const MAX_N: usize = 8;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i, j);
    p
}

/// Minimal-length representatives of `S_N / (S_{N_1} × ⋯ × S_{N_r})`, where the
/// Young subgroup permutes consecutive runs of positions.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// `(start, len)` of each block of positions.
    pub blocks: Vec<(usize, usize)>,
    pub reps: Vec<Perm>,
    block_of: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
}

impl CosetTable {
    /// `sizes` may contain zeros, which are skipped.
    pub fn new(sizes: &[usize]) -> Result<Self> {
        let n: usize = sizes.iter().sum();
        if n > MAX_N {
            return Err(Error::InvalidInput(format!(
                "N = {n} exceeds the verifier limit of {MAX_N}; use a smaller N"
            )));
        }
        let mut blocks = Vec::new();
        let mut block_of = Vec::with_capacity(n);
        for &len in sizes.iter().filter(|&&l| l > 0) {
            blocks.push((block_of.len(), len));
            block_of.extend(std::iter::repeat_n(blocks.len() - 1, len));
        }
        let mut words = Vec::new();
        let mut counts: Vec<usize> = blocks.iter().map(|b| b.1).collect();
        words_rec(&mut counts, &mut Vec::with_capacity(n), &mut words);
        let reps: Vec<Perm> = words.iter().map(|w| rep_from_word(&blocks, w)).collect();
        let index = words.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(CosetTable {
            blocks,
            reps,
            block_of,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn block_of(&self, position: usize) -> usize {
        self.block_of[position]
    }

    /// Writes `π∘σ_l = σ_r∘τ` with `τ` in the Young subgroup; returns `(r, τ)`.
    pub fn factor(&self, pi: &[usize], l: usize) -> (usize, Perm) {
        let rho = compose(pi, &self.reps[l]);
        let mut word = vec![0; rho.len()];
        for (p, &v) in rho.iter().enumerate() {
            word[v] = self.block_of[p];
        }
        let r = self.index[&word];
        let tau = compose(&inverse(&self.reps[r]), &rho);
        (r, tau)
    }
}

fn words_rec(counts: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if counts.iter().all(|&c| c == 0) {
        out.push(cur.clone());
        return;
    }
    for b in 0..counts.len() {
        if counts[b] > 0 {
            counts[b] -= 1;
            cur.push(b);
            words_rec(counts, cur, out);
            cur.pop();
            counts[b] += 1;
        }
    }
}

/// The permutation sending block `b`'s positions, in order, onto the values `v`
/// with `word[v] = b`, in order.
fn rep_from_word(blocks: &[(usize, usize)], word: &[usize]) -> Perm {
    let mut sigma = vec![0; word.len()];
    let mut next: Vec<usize> = blocks.iter().map(|b| b.0).collect();
    for (v, &b) in word.iter().enumerate() {
        sigma[next[b]] = v;
        next[b] += 1;
    }
    sigma
}

/// Coset representatives for a type vector `(N_1, …, N_ν)`.
pub fn coset_representatives(type_vec: &[usize]) -> Result<Vec<Perm>> {
    Ok(CosetTable::new(type_vec)?.reps)
}
