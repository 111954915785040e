//! Which irreducibles of `S_N ⋉ Γ^N` extend to the symplectic reflection algebra
//! with `x_i, y_i` acting by zero, and for which parameters `(k, c_2, …, c_ν)`.
//!
//! An irreducible `W ⊗ Y↑` of type `(N_1, …, N_ν)` extends iff every block
//! partition `λ_h` is an `a_h × b_h` rectangle and the support `{h : N_h > 0}` is
//! an independent set of the McKay graph. The parameters then form the affine
//! space cut out by one hyperplane per active block,
//! `dim Y_h + (b_h - a_h)(k/2)|Γ| + Σ_s c_s |C_s| χ_h(C_s) = 0`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::{
    parameter_names, solve_affine_named, AffineSolution, CycloMatrix, CycloNumber, Rational,
};
use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::mckay::{build_mckay, McKayGraph};
use crate::partitions::{enumerate_partitions, rectangle_of, Partition, RectShape};

/// A wreath-product irreducible: a type vector and one partition per active block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReprCandidate {
    pub type_vec: Vec<usize>,
    /// Partition of `N_h` for each `h` with `N_h > 0`.
    pub partitions: BTreeMap<usize, Partition>,
}

impl ReprCandidate {
    pub fn new(type_vec: Vec<usize>, partitions: BTreeMap<usize, Partition>) -> Result<Self> {
        for (h, &nh) in type_vec.iter().enumerate() {
            match partitions.get(&h) {
                Some(p) if p.size() == nh && nh > 0 => {}
                None if nh == 0 => {}
                Some(p) => {
                    return Err(Error::InvalidInput(format!(
                        "block {h} has size {nh} but partition {p}"
                    )))
                }
                None => return Err(Error::InvalidInput(format!("block {h} has no partition"))),
            }
        }
        if let Some(&h) = partitions.keys().find(|&&h| h >= type_vec.len()) {
            return Err(Error::InvalidInput(format!(
                "partition given for missing block {h}"
            )));
        }
        Ok(ReprCandidate {
            type_vec,
            partitions,
        })
    }

    pub fn n(&self) -> usize {
        self.type_vec.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.partitions.keys().copied().collect()
    }

    /// `M = N! / (N_1! ⋯ N_ν!)`, the index of the inertia subgroup.
    pub fn coset_count(&self) -> u128 {
        let f = |n: usize| (1..=n as u128).product::<u128>();
        self.type_vec
            .iter()
            .fold(f(self.n()), |acc, &nh| acc / f(nh))
    }

    /// `M · dim W · dim Y`.
    pub fn induced_dimension(&self, g: &GroupData) -> u128 {
        let w: u128 = self
            .partitions
            .values()
            .map(|p| p.hook_dimension() as u128)
            .product();
        let y: u128 = self
            .type_vec
            .iter()
            .enumerate()
            .map(|(h, &nh)| (g.dim(h) as u128).pow(nh as u32))
            .product();
        self.coset_count() * w * y
    }

    pub fn rectangles(&self) -> Option<BTreeMap<usize, RectShape>> {
        self.partitions
            .iter()
            .map(|(&h, p)| rectangle_of(p).map(|r| (h, r)))
            .collect()
    }
}

impl Serialize for ReprCandidate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ReprCandidate", 2)?;
        st.serialize_field("type", &self.type_vec)?;
        st.serialize_field("partitions", &self.partitions)?;
        st.end()
    }
}

/// A support set of the McKay graph with positive block sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    pub vertices: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl Support {
    pub fn type_vector(&self, nu: usize) -> Vec<usize> {
        let mut t = vec![0; nu];
        for (&h, &n) in self.vertices.iter().zip(&self.sizes) {
            t[h] = n;
        }
        t
    }
}

/// Compositions of `n` into `parts` positive summands, in lexicographic order.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(parts - 1) {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Independent supports with block sizes summing to `n`, ordered by support then sizes.
pub fn admissible_supports(graph: &McKayGraph, n: usize) -> Vec<Support> {
    let mut sets = graph.independent_sets(n);
    sets.sort();
    sets.into_iter()
        .flat_map(|vertices| {
            compositions(n, vertices.len())
                .into_iter()
                .map(move |sizes| Support {
                    vertices: vertices.clone(),
                    sizes,
                })
        })
        .collect()
}

/// Rectangular partitions of `n` (heights increasing).
fn rectangles_of_size(n: usize) -> Vec<Partition> {
    enumerate_partitions(n as i64)
        .expect("n is non-negative")
        .into_iter()
        .filter(|p| rectangle_of(p).is_some())
        .collect()
}

fn partition_products(blocks: &[(usize, Vec<Partition>)]) -> Vec<BTreeMap<usize, Partition>> {
    let mut out = vec![BTreeMap::new()];
    for (h, choices) in blocks {
        out = out
            .into_iter()
            .flat_map(|m| {
                choices.iter().map(move |p| {
                    let mut m = m.clone();
                    m.insert(*h, p.clone());
                    m
                })
            })
            .collect();
    }
    out
}

/// The linear system `A·(k, c_2, …, c_ν) = b` with one row per active block.
#[derive(Clone, Debug)]
pub struct HyperplaneSystem {
    /// Irrep index of each row.
    pub blocks: Vec<usize>,
    pub matrix: CycloMatrix,
    /// `-dim Y_h` per row.
    pub rhs: Vec<CycloNumber>,
}

impl HyperplaneSystem {
    /// Row `i` as `(constant, k-coefficient, c-coefficients)`, so that the
    /// hyperplane reads `constant + k·a + Σ c_s·b_s = 0`.
    pub fn row(&self, i: usize) -> (CycloNumber, CycloNumber, Vec<CycloNumber>) {
        let r = self.matrix.row(i);
        (-&self.rhs[i], r[0].clone(), r[1..].to_vec())
    }
}

/// Builds the hyperplanes for a candidate whose blocks are all rectangles.
pub fn hyperplane_system(g: &GroupData, cand: &ReprCandidate) -> Result<HyperplaneSystem> {
    let nu = g.nu();
    if cand.type_vec.len() != nu {
        return Err(Error::InvalidInput(format!(
            "type vector has {} entries, group has {nu} irreducibles",
            cand.type_vec.len()
        )));
    }
    let m = g.conductor;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut blocks = Vec::new();
    for (&h, lambda) in &cand.partitions {
        let rect = rectangle_of(lambda).ok_or_else(|| {
            Error::InvalidInput(format!(
                "rectangular Young diagram condition violated: block {h} has shape {lambda}"
            ))
        })?;
        let mut row = Vec::with_capacity(nu);
        row.push(CycloNumber::from_rational(
            m,
            Rational::new(rect.skew() * g.order as i64, 2),
        ));
        for s in 1..nu {
            row.push(
                g.character(h, s)
                    .scale(&Rational::from_integer(g.class_size(s) as i64)),
            );
        }
        rows.push(row);
        rhs.push(CycloNumber::from_int(m, -(g.dim(h) as i64)));
        blocks.push(h);
    }
    Ok(HyperplaneSystem {
        blocks,
        matrix: CycloMatrix::from_rows(m, rows)?,
        rhs,
    })
}

/// An extendable irreducible together with its parameter family.
#[derive(Clone, Debug)]
pub struct ExtendableFamily {
    pub candidate: ReprCandidate,
    pub rects: BTreeMap<usize, RectShape>,
    pub solution: AffineSolution,
    pub dim_induced: u128,
    pub contains_k0: bool,
    pub nu: usize,
}

impl ExtendableFamily {
    /// Number of hyperplanes.
    pub fn r(&self) -> usize {
        self.rects.len()
    }
}

impl Serialize for ExtendableFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Sol<'a> {
            variables: &'a [String],
            particular: &'a [CycloNumber],
            kernel: &'a [Vec<CycloNumber>],
        }
        let rect: BTreeMap<usize, [usize; 2]> =
            self.rects.iter().map(|(&h, r)| (h, [r.a, r.b])).collect();
        let mut st = s.serialize_struct("ExtendableFamily", 7)?;
        st.serialize_field("type", &self.candidate.type_vec)?;
        st.serialize_field("partitions", &self.candidate.partitions)?;
        st.serialize_field("rect", &rect)?;
        st.serialize_field("dim_induced", &self.dim_induced)?;
        st.serialize_field(
            "solution",
            &Sol {
                variables: &self.solution.variables,
                particular: &self.solution.particular,
                kernel: &self.solution.kernel,
            },
        )?;
        st.serialize_field("dimension", &self.solution.kernel.len())?;
        st.serialize_field("contains_k0", &self.contains_k0)?;
        st.end()
    }
}

/// Solves the hyperplane system of one candidate.
pub fn family_for(g: &GroupData, cand: &ReprCandidate) -> Result<ExtendableFamily> {
    let sys = hyperplane_system(g, cand)?;
    let solution = solve_affine_named(&sys.matrix, &sys.rhs, Some(parameter_names(g.nu())))?;
    let family = ExtendableFamily {
        candidate: cand.clone(),
        rects: cand.rectangles().expect("checked by hyperplane_system"),
        contains_k0: solution.meets_coordinate_zero(0),
        dim_induced: cand.induced_dimension(g),
        nu: g.nu(),
        solution,
    };
    solution_dimension(&family)?;
    Ok(family)
}

/// Candidates admitted by the rectangle and independence conditions, in
/// deterministic order.
pub fn extendable_candidates(graph: &McKayGraph, n: usize) -> Vec<ReprCandidate> {
    let nu = graph.nu();
    admissible_supports(graph, n)
        .into_iter()
        .flat_map(|sup| {
            let blocks: Vec<(usize, Vec<Partition>)> = sup
                .vertices
                .iter()
                .zip(&sup.sizes)
                .map(|(&h, &nh)| (h, rectangles_of_size(nh)))
                .collect();
            let type_vec = sup.type_vector(nu);
            partition_products(&blocks)
                .into_iter()
                .map(move |partitions| ReprCandidate {
                    type_vec: type_vec.clone(),
                    partitions,
                })
        })
        .collect()
}

/// Every extendable irreducible of `S_N ⋉ Γ^N` with its parameter family.
pub fn classify_all(g: &GroupData, n: usize) -> Result<Vec<ExtendableFamily>> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1".into()));
    }
    let graph = build_mckay(g)?;
    extendable_candidates(&graph, n)
        .par_iter()
        .map(|c| family_for(g, c))
        .collect()
}

/// Every irreducible of `S_N ⋉ Γ^N` (all types, all partition tuples).
pub fn all_candidates(nu: usize, n: usize) -> Vec<ReprCandidate> {
    let mut out = Vec::new();
    for k in 1..=nu.min(n) {
        for support in subsets(nu, k) {
            for sizes in compositions(n, k) {
                let blocks: Vec<(usize, Vec<Partition>)> = support
                    .iter()
                    .zip(&sizes)
                    .map(|(&h, &nh)| (h, enumerate_partitions(nh as i64).expect("non-negative")))
                    .collect();
                let sup = Support {
                    vertices: support.clone(),
                    sizes,
                };
                for partitions in partition_products(&blocks) {
                    out.push(ReprCandidate {
                        type_vec: sup.type_vector(nu),
                        partitions,
                    });
                }
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the parameter family, checked against `ν - r`.
pub fn solution_dimension(family: &ExtendableFamily) -> Result<usize> {
    let r = family.r();
    let want = family.nu.checked_sub(r);
    match family.solution.dimension() {
        Some(d) if Some(d) == want && family.solution.rank == r => Ok(d),
        got => Err(Error::Invariant(format!(
            "parameter family of {:?} has dimension {got:?}, rank {}, expected {want:?} with rank {r}",
            family.candidate.type_vec, family.solution.rank
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, GroupSpec};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn cand(t: &[usize], parts: &[(usize, &[usize])]) -> ReprCandidate {
        ReprCandidate::new(t.to_vec(), parts.iter().map(|&(h, l)| (h, p(l))).collect()).unwrap()
    }

    fn group(spec: GroupSpec) -> GroupData {
        build_group(spec).unwrap()
    }

    #[test]
    fn supports_c2() {
        let g = group(GroupSpec::Cyclic(2));
        let s = admissible_supports(&build_mckay(&g).unwrap(), 2);
        let flat: Vec<(Vec<usize>, Vec<usize>)> =
            s.into_iter().map(|x| (x.vertices, x.sizes)).collect();
        assert_eq!(flat, vec![(vec![0], vec![2]), (vec![1], vec![2])]);
    }

    #[test]
    fn supports_c3_and_d2() {
        let g = group(GroupSpec::Cyclic(3));
        assert!(admissible_supports(&build_mckay(&g).unwrap(), 2)
            .iter()
            .all(|s| s.vertices.len() == 1));
        let g = group(GroupSpec::Dicyclic(2));
        let s = admissible_supports(&build_mckay(&g).unwrap(), 2);
        assert_eq!(s.iter().filter(|x| x.vertices.len() == 1).count(), 5);
        let pairs: Vec<_> = s.iter().filter(|x| x.vertices.len() == 2).collect();
        assert_eq!(pairs.len(), 6);
        assert!(pairs
            .iter()
            .all(|x| !x.vertices.contains(&0) && x.sizes == vec![1, 1]));
    }

    #[test]
    fn c2_rows() {
        let g = group(GroupSpec::Cyclic(2));
        let int = |n| CycloNumber::from_int(2, n);
        let sys = hyperplane_system(&g, &cand(&[2, 0], &[(0, &[2])])).unwrap();
        assert_eq!(sys.row(0), (int(1), int(1), vec![int(1)]));
        let sys = hyperplane_system(&g, &cand(&[0, 2], &[(1, &[1, 1])])).unwrap();
        assert_eq!(sys.row(0), (int(1), int(-1), vec![int(-1)]));
        let sys = hyperplane_system(&g, &cand(&[1, 0], &[(0, &[1])])).unwrap();
        assert_eq!(sys.row(0), (int(1), int(0), vec![int(1)]));
        let err = hyperplane_system(
            &group(GroupSpec::Cyclic(3)),
            &cand(&[3, 0, 0], &[(0, &[2, 1])]),
        )
        .unwrap_err();
        assert!(err.to_string().contains("rectangular"));
    }

    #[test]
    fn c2_families() {
        let g = group(GroupSpec::Cyclic(2));
        let fams = classify_all(&g, 2).unwrap();
        assert_eq!(fams.len(), 4);
        assert!(fams.iter().all(|f| solution_dimension(f).unwrap() == 1));
        let first = &fams[0];
        assert_eq!(first.candidate.type_vec, vec![2, 0]);
        assert_eq!(
            first.solution.particular,
            vec![CycloNumber::zero(2), CycloNumber::from_int(2, -1)]
        );

        let fams = classify_all(&g, 1).unwrap();
        assert_eq!(fams.len(), 2);
        let c: Vec<i64> = fams
            .iter()
            .map(|f| f.solution.particular[1].as_integer().unwrap())
            .collect();
        assert_eq!(c, vec![-1, 1]);
        for f in &fams {
            // k is free, c is pinned
            assert_eq!(
                f.solution.kernel,
                vec![vec![CycloNumber::one(2), CycloNumber::zero(2)]]
            );
        }
    }

    #[test]
    fn c3_excludes_non_rectangles() {
        let g = group(GroupSpec::Cyclic(3));
        let fams = classify_all(&g, 3).unwrap();
        assert!(fams.iter().all(|f| f
            .candidate
            .partitions
            .values()
            .all(|l| rectangle_of(l).is_some())));
        assert_eq!(classify_all(&g, 2).unwrap().len(), 6);
    }

    #[test]
    fn solution_dimensions() {
        let g = group(GroupSpec::Dicyclic(2));
        let f = family_for(
            &g,
            &cand(
                &[0, 1, 1, 1, 1],
                &[(1, &[1]), (2, &[1]), (3, &[1]), (4, &[1])],
            ),
        )
        .unwrap();
        assert_eq!(solution_dimension(&f).unwrap(), 1);
        let g = group(GroupSpec::Cyclic(4));
        let f = family_for(&g, &cand(&[0, 1, 0, 1], &[(1, &[1]), (3, &[1])])).unwrap();
        assert_eq!(solution_dimension(&f).unwrap(), 2);
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(cand(&[2, 1], &[(0, &[2]), (1, &[1])]).coset_count(), 3);
        let g = group(GroupSpec::Dicyclic(2));
        let c = cand(&[2, 1, 0, 0, 0], &[(0, &[1, 1]), (1, &[1])]);
        assert_eq!(c.induced_dimension(&g), 3 * 4);
        // sum of squared dimensions of all irreducibles is |Γ_N| = N!·|Γ|^N
        for (spec, n) in [
            (GroupSpec::Cyclic(2), 3),
            (GroupSpec::Dicyclic(2), 2),
            (GroupSpec::Cyclic(3), 2),
        ] {
            let g = group(spec);
            let total: u128 = all_candidates(g.nu(), n)
                .iter()
                .map(|c| {
                    let d = c.induced_dimension(&g);
                    d * d
                })
                .sum();
            let want = (1..=n as u128).product::<u128>() * (g.order as u128).pow(n as u32);
            assert_eq!(total, want, "{spec}");
        }
    }

    #[test]
    fn json_record() {
        let g = group(GroupSpec::Cyclic(2));
        let f = &classify_all(&g, 2).unwrap()[0];
        let v = serde_json::to_value(f).unwrap();
        assert_eq!(v["type"], serde_json::json!([2, 0]));
        assert_eq!(v["partitions"]["0"], serde_json::json!([2]));
        assert_eq!(v["rect"]["0"], serde_json::json!([1, 2]));
        assert_eq!(v["contains_k0"], true);
        assert_eq!(v["solution"]["kernel"].as_array().unwrap().len(), 1);
    }
}
