//! McKay graphs of finite subgroups of `SL(2, C)` and their extended Dynkin types.

use std::fmt;

use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::UnGraph;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::{CycloNumber, Rational};
use crate::error::{Error, Result};
use crate::groups::GroupData;

/// An extended (affine) Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagram {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl Diagram {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Diagram::A(n) | Diagram::D(n) => n + 1,
            Diagram::E6 => 7,
            Diagram::E7 => 8,
            Diagram::E8 => 9,
        }
    }

    /// Candidate diagrams with `nu` vertices.
    fn with_vertices(nu: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        if nu >= 2 {
            out.push(Diagram::A(nu - 1));
        }
        if nu >= 5 {
            out.push(Diagram::D(nu - 1));
        }
        match nu {
            7 => out.push(Diagram::E6),
            8 => out.push(Diagram::E7),
            9 => out.push(Diagram::E8),
            _ => {}
        }
        out
    }

    /// Template graph: node weight `(dim label, is extending vertex)`, edge weight multiplicity.
    fn template(&self) -> UnGraph<(usize, bool), usize> {
        let mut g = UnGraph::new_undirected();
        let chain = |g: &mut UnGraph<(usize, bool), usize>, labels: &[usize]| {
            let ids: Vec<_> = labels.iter().map(|&d| g.add_node((d, false))).collect();
            for w in ids.windows(2) {
                g.add_edge(w[0], w[1], 1);
            }
            ids
        };
        match *self {
            Diagram::A(1) => {
                let a = g.add_node((1, true));
                let b = g.add_node((1, false));
                g.add_edge(a, b, 2);
            }
            Diagram::A(n) => {
                let ids = chain(&mut g, &vec![1; n + 1]);
                g.add_edge(ids[n], ids[0], 1);
                g[ids[0]].1 = true;
            }
            Diagram::D(n) => {
                let spine = chain(&mut g, &vec![2; n - 3]);
                let leaves: Vec<_> = (0..4).map(|_| g.add_node((1, false))).collect();
                g.add_edge(leaves[0], spine[0], 1);
                g.add_edge(leaves[1], spine[0], 1);
                g.add_edge(leaves[2], spine[n - 4], 1);
                g.add_edge(leaves[3], spine[n - 4], 1);
                g[leaves[0]].1 = true;
            }
            Diagram::E6 => {
                let center = g.add_node((3, false));
                for arm in 0..3 {
                    let ids = chain(&mut g, &[2, 1]);
                    g.add_edge(center, ids[0], 1);
                    if arm == 0 {
                        g[ids[1]].1 = true;
                    }
                }
            }
            Diagram::E7 => {
                let ids = chain(&mut g, &[1, 2, 3, 4, 3, 2, 1]);
                let top = g.add_node((2, false));
                g.add_edge(top, ids[3], 1);
                g[ids[0]].1 = true;
            }
            Diagram::E8 => {
                let ids = chain(&mut g, &[1, 2, 3, 4, 5, 6, 4, 2]);
                let top = g.add_node((3, false));
                g.add_edge(top, ids[5], 1);
                g[ids[0]].1 = true;
            }
        }
        g
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(n) => write!(f, "A~{n}"),
            Diagram::D(n) => write!(f, "D~{n}"),
            Diagram::E6 => f.write_str("E~6"),
            Diagram::E7 => f.write_str("E~7"),
            Diagram::E8 => f.write_str("E~8"),
        }
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct McKayGraph {
    pub dims: Vec<usize>,
    /// Symmetric multiplicity matrix.
    pub mult: Vec<Vec<usize>>,
    pub diagram: Diagram,
    /// Index of the trivial representation.
    pub extending: usize,
}

/// Multiplicity of `Y_h` in `Y_{h'} ⊗ L`.
pub fn tensor_multiplicity_with_l(g: &GroupData, h: usize, h2: usize) -> Result<usize> {
    let taut = g.tautological_character();
    let mut acc = CycloNumber::zero(g.conductor);
    for s in 0..g.nu() {
        let t = &(&taut[s] * g.character(h2, s)) * &g.character(h, s).conj();
        acc += &t.scale(&Rational::from_integer(g.class_size(s) as i64));
    }
    let m = acc.scale(&Rational::new(1, g.order as i64));
    match m.as_integer() {
        Some(v) if v >= 0 => Ok(v as usize),
        _ => Err(Error::Invariant(format!(
            "{}: multiplicity of irrep {h} in irrep {h2} ⊗ L is {m}",
            g.spec
        ))),
    }
}

/// Builds the McKay graph and identifies its extended Dynkin type.
pub fn build_mckay(g: &GroupData) -> Result<McKayGraph> {
    let nu = g.nu();
    let mut mult = vec![vec![0usize; nu]; nu];
    for (h, row) in mult.iter_mut().enumerate() {
        for (h2, m) in row.iter_mut().enumerate() {
            *m = tensor_multiplicity_with_l(g, h, h2)?;
        }
    }
    let graph = McKayGraph {
        dims: g.dims(),
        mult,
        diagram: Diagram::A(0),
        extending: g.trivial_index(),
    };
    graph.check_invariants()?;
    let diagram = graph.identify().ok_or_else(|| {
        Error::Invariant(format!("{}: McKay graph matches no affine diagram", g.spec))
    })?;
    Ok(McKayGraph { diagram, ..graph })
}

impl McKayGraph {
    pub fn nu(&self) -> usize {
        self.dims.len()
    }

    fn check_invariants(&self) -> Result<()> {
        let nu = self.nu();
        for h in 0..nu {
            if self.mult[h][h] != 0 {
                return Err(Error::Invariant(format!("loop at vertex {h}")));
            }
            let mut weighted = 0;
            for h2 in 0..nu {
                if self.mult[h][h2] != self.mult[h2][h] {
                    return Err(Error::Invariant(format!(
                        "asymmetric multiplicity at ({h},{h2})"
                    )));
                }
                weighted += self.mult[h][h2] * self.dims[h2];
            }
            if weighted != 2 * self.dims[h] {
                return Err(Error::Invariant(format!(
                    "null-vector condition fails at vertex {h}"
                )));
            }
        }
        Ok(())
    }

    fn to_petgraph(&self) -> UnGraph<(usize, bool), usize> {
        let mut g = UnGraph::new_undirected();
        let ids: Vec<_> = (0..self.nu())
            .map(|h| g.add_node((self.dims[h], h == self.extending)))
            .collect();
        for a in 0..self.nu() {
            for b in a + 1..self.nu() {
                if self.mult[a][b] > 0 {
                    g.add_edge(ids[a], ids[b], self.mult[a][b]);
                }
            }
        }
        g
    }

    fn identify(&self) -> Option<Diagram> {
        let g = self.to_petgraph();
        Diagram::with_vertices(self.nu())
            .into_iter()
            .find(|d| is_isomorphic_matching(&g, &d.template(), |a, b| a == b, |a, b| a == b))
    }

    pub fn is_adjacent(&self, h: usize, h2: usize) -> Result<bool> {
        if h == h2 {
            return Err(Error::InvalidInput(format!(
                "adjacency of vertex {h} with itself is undefined"
            )));
        }
        if h >= self.nu() || h2 >= self.nu() {
            return Err(Error::InvalidInput(format!(
                "vertex index out of range ({h}, {h2})"
            )));
        }
        Ok(self.mult[h][h2] > 0)
    }

    /// Whether no two vertices of `set` are joined by an edge.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && self.mult[a][b] == 0))
    }

    /// All independent vertex sets with at most `max_size` elements, each sorted,
    /// ordered by size then lexicographically.
    pub fn independent_sets(&self, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_independent(0, max_size, &mut cur, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn extend_independent(
        &self,
        start: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for v in start..self.nu() {
            if cur.iter().all(|&u| self.mult[u][v] == 0) {
                cur.push(v);
                self.extend_independent(v + 1, max, cur, out);
                cur.pop();
            }
        }
    }

    pub fn max_independent_set(&self) -> usize {
        self.independent_sets(self.nu()).last().map_or(0, Vec::len)
    }
}

impl Serialize for McKayGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Vertex {
            index: usize,
            dim: usize,
        }
        #[derive(Serialize)]
        struct Edge {
            a: usize,
            b: usize,
            mult: usize,
        }
        let vertices: Vec<Vertex> = self
            .dims
            .iter()
            .enumerate()
            .map(|(index, &dim)| Vertex { index, dim })
            .collect();
        let mut edges = Vec::new();
        for a in 0..self.nu() {
            for b in a + 1..self.nu() {
                if self.mult[a][b] > 0 {
                    edges.push(Edge {
                        a,
                        b,
                        mult: self.mult[a][b],
                    });
                }
            }
        }
        let mut st = s.serialize_struct("McKayGraph", 4)?;
        st.serialize_field("vertices", &vertices)?;
        st.serialize_field("edges", &edges)?;
        st.serialize_field("diagram", &self.diagram)?;
        st.serialize_field("extending", &self.extending)?;
        st.end()
    }
}
