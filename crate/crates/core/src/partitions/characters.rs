use std::collections::BTreeMap;

use crate::arith::Rational;
use crate::error::{Error, Result};

use super::{enumerate_partitions, Partition};

/// Character of the irreducible `W_λ` on the class of cycle type `μ`, by
/// Murnaghan–Nakayama on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::DimensionMismatch(format!(
            "character of a partition of {} on a class of S_{}",
            lambda.size(),
            mu.size()
        )));
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    Ok(mn_beta(beta, mu.parts()))
}

fn mn_beta(beta: Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(next, rest);
    }
    total
}

/// Order of the centralizer of a permutation of cycle type `μ`.
pub fn centralizer_order(mu: &Partition) -> u64 {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(i, m)| (i as u64).pow(m as u32) * (1..=m).product::<u64>())
        .product()
}

/// Multiplicity of `W_λ` in `𝔥 ⊗ W_λ`, where `𝔥` is the reflection representation
/// of `S_N` with character `fix(μ) - 1`.
pub fn refl_hom_multiplicity(lambda: &Partition) -> Result<i64> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::InvalidInput(
            "reflection representation needs N >= 2".into(),
        ));
    }
    let mut acc = Rational::from_integer(0);
    for mu in enumerate_partitions(n as i64)? {
        let fix = mu.parts().iter().filter(|&&p| p == 1).count() as i64;
        let chi = mn_character(lambda, &mu)?;
        let term = Rational::new((fix - 1) * chi * chi, centralizer_order(&mu) as i64);
        acc += &term;
    }
    acc.to_i64()
        .filter(|_| acc.is_integer())
        .ok_or_else(|| Error::Invariant(format!("non-integral multiplicity {acc} for {lambda}")))
}
