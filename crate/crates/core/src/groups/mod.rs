//! Finite subgroups of `SL(2, C)`: cyclic, dicyclic (binary dihedral) and the three
//! binary polyhedral groups.
//!
//! Cyclic and dicyclic character tables are generated from closed forms. The
//! class order is fixed: identity, then powers of `α`, then the two `β`-classes.
//! Irreducibles of the cyclic group `C_m` are `χ_0` (trivial), …, `χ_{m-1}` with
//! `χ_h(α^s) = ε^{hs}`; irreducibles of the dicyclic group `D_q` are
//! `δ_1, …, δ_{q-1}` (two-dimensional) followed by the four one-dimensional
//! characters `δ_q` (trivial), `δ_{q+1}`, `δ_{q+2}`, `δ_{q+3}`.

mod exceptional;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{CycloMatrix, CycloNumber, Rational};
use crate::error::{Error, Result};
use exceptional::ExceptionalTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupSpec {
    /// Cyclic group of the given order.
    Cyclic(usize),
    /// Dicyclic group of order `4q`.
    Dicyclic(usize),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupSpec::Cyclic(0) => Err(Error::InvalidGroupSpec("C0".into())),
            GroupSpec::Cyclic(1) => Err(Error::TrivialGroup),
            GroupSpec::Dicyclic(q) if q < 2 => Err(Error::InvalidGroupSpec(format!("D{q}"))),
            _ => Ok(()),
        }
    }

    pub fn is_exceptional(&self) -> bool {
        !matches!(self, GroupSpec::Cyclic(_) | GroupSpec::Dicyclic(_))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "C{m}"),
            GroupSpec::Dicyclic(q) => write!(f, "D{q}"),
            GroupSpec::BinaryTetrahedral => f.write_str("T"),
            GroupSpec::BinaryOctahedral => f.write_str("O"),
            GroupSpec::BinaryIcosahedral => f.write_str("I"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let spec = match t.as_str() {
            "T" => GroupSpec::BinaryTetrahedral,
            "O" => GroupSpec::BinaryOctahedral,
            "I" => GroupSpec::BinaryIcosahedral,
            _ => {
                let (head, num) = t.split_at(t.len().min(1));
                let n: usize = num
                    .parse()
                    .map_err(|_| Error::InvalidGroupSpec(s.to_string()))?;
                match head {
                    "C" => GroupSpec::Cyclic(n),
                    "D" => GroupSpec::Dicyclic(n),
                    _ => return Err(Error::InvalidGroupSpec(s.to_string())),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub size: usize,
    pub representative: String,
    pub element_order: usize,
}

/// How the tautological representation `L` decomposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tautological {
    /// `L` is the irreducible with this index.
    Irreducible(usize),
    /// Cyclic case: `L = χ_a ⊕ χ_b` (the characters of `ε` and `ε^{-1}`).
    Split(usize, usize),
}

/// Normal form of an element of a cyclic or dicyclic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Word {
    /// `α^s`, `0 ≤ s < m`.
    Cyclic { s: usize },
    /// `α^s β^t`, `0 ≤ s < 2q`, `t ∈ {0, 1}`.
    Dicyclic { s: usize, t: usize },
}

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub word: Word,
    /// Image in the tautological representation.
    pub matrix: CycloMatrix,
    /// Index of the conjugacy class.
    pub class: usize,
}

/// A finite subgroup of `SL(2, C)` with its exact character table.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub spec: GroupSpec,
    pub order: usize,
    pub conductor: u32,
    pub classes: Vec<ConjugacyClass>,
    pub irrep_names: Vec<String>,
    /// Rows are irreducibles, columns are classes.
    pub table: CycloMatrix,
    pub tautological: Tautological,
}

/// Builds and validates the group data for `spec`.
pub fn build_group(spec: GroupSpec) -> Result<GroupData> {
    spec.validate()?;
    let g = match spec {
        GroupSpec::Cyclic(m) => cyclic(m),
        GroupSpec::Dicyclic(q) => dicyclic(q),
        GroupSpec::BinaryTetrahedral => from_table(spec, &exceptional::TETRAHEDRAL),
        GroupSpec::BinaryOctahedral => from_table(spec, &exceptional::OCTAHEDRAL),
        GroupSpec::BinaryIcosahedral => from_table(spec, &exceptional::ICOSAHEDRAL),
    }?;
    g.validate()?;
    Ok(g)
}

fn cyclic(m: usize) -> Result<GroupData> {
    let cond = m as u32;
    let classes = (0..m)
        .map(|s| ConjugacyClass {
            size: 1,
            representative: if s == 0 { "e".into() } else { format!("a^{s}") },
            element_order: m / m.gcd(&s),
        })
        .collect();
    let rows = (0..m)
        .map(|h| {
            (0..m)
                .map(|s| CycloNumber::root_of_unity(cond, (h * s) as i64))
                .collect()
        })
        .collect();
    Ok(GroupData {
        spec: GroupSpec::Cyclic(m),
        order: m,
        conductor: cond,
        classes,
        irrep_names: (0..m).map(|h| format!("chi{h}")).collect(),
        table: CycloMatrix::from_rows(cond, rows)?,
        tautological: Tautological::Split(1 % m, m - 1),
    })
}

/// Conductor used for the dicyclic group of order `4q`.
pub fn dicyclic_conductor(q: usize) -> u32 {
    (2 * q).lcm(&4) as u32
}

fn dicyclic(q: usize) -> Result<GroupData> {
    let cond = dicyclic_conductor(q);
    // ε = primitive 2q-th root of unity, i = primitive 4th root
    let eps_step = (cond as usize / (2 * q)) as i64;
    let eps = |k: i64| CycloNumber::root_of_unity(cond, k * eps_step);
    let imag = CycloNumber::root_of_unity(cond, cond as i64 / 4);
    let int = |n: i64| CycloNumber::from_int(cond, n);
    let nu = q + 3;

    let mut classes = vec![ConjugacyClass {
        size: 1,
        representative: "e".into(),
        element_order: 1,
    }];
    for s in 1..q {
        classes.push(ConjugacyClass {
            size: 2,
            representative: format!("a^{s}"),
            element_order: (2 * q) / (2 * q).gcd(&s),
        });
    }
    classes.push(ConjugacyClass {
        size: 1,
        representative: format!("a^{q}"),
        element_order: 2,
    });
    classes.push(ConjugacyClass {
        size: q,
        representative: "b".into(),
        element_order: 4,
    });
    classes.push(ConjugacyClass {
        size: q,
        representative: "ba".into(),
        element_order: 4,
    });

    let mut rows: Vec<Vec<CycloNumber>> = Vec::with_capacity(nu);
    for h in 1..q {
        let mut row = vec![int(2)];
        for s in 1..q {
            let hs = (h * s) as i64;
            row.push(&eps(hs) + &eps(-hs));
        }
        row.push(int(if h % 2 == 0 { 2 } else { -2 }));
        row.push(int(0));
        row.push(int(0));
        rows.push(row);
    }
    let alt = |s: usize| int(if s.is_multiple_of(2) { 1 } else { -1 });
    let one_dim = |alpha_sign: bool, b_even: CycloNumber, b_odd: CycloNumber| {
        let mut row = vec![int(1)];
        for s in 1..=q {
            row.push(if alpha_sign { alt(s) } else { int(1) });
        }
        row.push(b_even);
        row.push(b_odd);
        row
    };
    rows.push(one_dim(false, int(1), int(1)));
    rows.push(one_dim(false, int(-1), int(-1)));
    if q.is_multiple_of(2) {
        rows.push(one_dim(true, int(-1), int(1)));
        rows.push(one_dim(true, int(1), int(-1)));
    } else {
        rows.push(one_dim(true, -&imag, imag.clone()));
        rows.push(one_dim(true, imag.clone(), -&imag));
    }

    let irrep_names = (1..=nu).map(|h| format!("delta{h}")).collect();
    Ok(GroupData {
        spec: GroupSpec::Dicyclic(q),
        order: 4 * q,
        conductor: cond,
        classes,
        irrep_names,
        table: CycloMatrix::from_rows(cond, rows)?,
        tautological: Tautological::Irreducible(0),
    })
}

fn from_table(spec: GroupSpec, t: &ExceptionalTable) -> Result<GroupData> {
    let nu = t.nu();
    let rows = (0..nu)
        .map(|h| (0..nu).map(|s| t.value(h, s)).collect())
        .collect();
    Ok(GroupData {
        spec,
        order: t.order,
        conductor: t.conductor,
        classes: t.class_list(),
        irrep_names: t.irreps.iter().map(|(n, _)| n.to_string()).collect(),
        table: CycloMatrix::from_rows(t.conductor, rows)?,
        tautological: Tautological::Irreducible(t.tautological),
    })
}

impl GroupData {
    /// Number of conjugacy classes (and of irreducibles).
    pub fn nu(&self) -> usize {
        self.classes.len()
    }

    pub fn character(&self, h: usize, s: usize) -> &CycloNumber {
        &self.table[(h, s)]
    }

    pub fn class_size(&self, s: usize) -> usize {
        self.classes[s].size
    }

    /// `dim Y_h`, read off the identity column.
    pub fn dim(&self, h: usize) -> usize {
        self.table[(h, 0)]
            .as_integer()
            .expect("identity column holds dimensions") as usize
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..self.nu()).map(|h| self.dim(h)).collect()
    }

    pub fn trivial_index(&self) -> usize {
        (0..self.nu())
            .find(|&h| (0..self.nu()).all(|s| self.table[(h, s)].is_one()))
            .expect("validated table has a trivial row")
    }

    /// Character of the tautological representation, per class.
    pub fn tautological_character(&self) -> Vec<CycloNumber> {
        (0..self.nu())
            .map(|s| match self.tautological {
                Tautological::Irreducible(h) => self.table[(h, s)].clone(),
                Tautological::Split(a, b) => &self.table[(a, s)] + &self.table[(b, s)],
            })
            .collect()
    }

    /// Scalar by which `Σ_{γ ∈ C_s} γ` acts on `Y_h`: `|C_s| χ_h(C_s) / dim Y_h`.
    pub fn central_class_scalar(&self, h: usize, s: usize) -> CycloNumber {
        let q = Rational::new(self.class_size(s) as i64, self.dim(h) as i64);
        self.table[(h, s)].scale(&q)
    }

    /// Exact check of the class-size sum, dimension sum, row and column
    /// orthogonality, and self-duality of `L`.
    pub fn validate(&self) -> Result<()> {
        let nu = self.nu();
        let bad = |msg: String| Err(Error::Invariant(format!("{}: {msg}", self.spec)));
        if self.table.rows() != nu || self.table.cols() != nu {
            return bad("character table is not square".into());
        }
        if self.classes[0].size != 1 {
            return bad("first class is not the identity".into());
        }
        let class_sum: usize = self.classes.iter().map(|c| c.size).sum();
        if class_sum != self.order {
            return bad(format!("class sizes sum to {class_sum}"));
        }
        let mut dim_sq = 0usize;
        for h in 0..nu {
            match self.table[(h, 0)].as_integer() {
                Some(d) if d > 0 => dim_sq += (d * d) as usize,
                _ => return bad(format!("irrep {h} has non-positive-integer dimension")),
            }
        }
        if dim_sq != self.order {
            return bad(format!("sum of squared dimensions is {dim_sq}"));
        }
        let conj: Vec<Vec<CycloNumber>> = (0..nu)
            .map(|h| (0..nu).map(|s| self.table[(h, s)].conj()).collect())
            .collect();
        let m = self.conductor;
        for h in 0..nu {
            for h2 in h..nu {
                let mut acc = CycloNumber::zero(m);
                for s in 0..nu {
                    let t = &self.table[(h, s)] * &conj[h2][s];
                    acc += &t.scale(&Rational::from_integer(self.class_size(s) as i64));
                }
                let want = if h == h2 { self.order as i64 } else { 0 };
                if acc != CycloNumber::from_int(m, want) {
                    return bad(format!("rows {h},{h2} not orthogonal: {acc}"));
                }
            }
        }
        for s in 0..nu {
            for t in s..nu {
                let mut acc = CycloNumber::zero(m);
                for h in 0..nu {
                    acc += &(&self.table[(h, s)] * &conj[h][t]);
                }
                let want = if s == t {
                    CycloNumber::from_rational(
                        m,
                        Rational::new(self.order as i64, self.class_size(s) as i64),
                    )
                } else {
                    CycloNumber::zero(m)
                };
                if acc != want {
                    return bad(format!("columns {s},{t} not orthogonal"));
                }
            }
        }
        if self.tautological_character().iter().any(|x| x.conj() != *x) {
            return bad("tautological character is not real".into());
        }
        if self.tautological_character()[0].as_integer() != Some(2) {
            return bad("tautological character has degree != 2".into());
        }
        Ok(())
    }

    /// Whether the group supports element-level enumeration.
    pub fn has_elements(&self) -> bool {
        !self.spec.is_exceptional()
    }

    /// Group law on normal forms.
    pub fn multiply(&self, a: Word, b: Word) -> Word {
        match (self.spec, a, b) {
            (GroupSpec::Cyclic(m), Word::Cyclic { s: x }, Word::Cyclic { s: y }) => {
                Word::Cyclic { s: (x + y) % m }
            }
            (
                GroupSpec::Dicyclic(q),
                Word::Dicyclic { s: s1, t: t1 },
                Word::Dicyclic { s: s2, t: t2 },
            ) => {
                let n = 2 * q;
                if t1 == 0 {
                    Word::Dicyclic {
                        s: (s1 + s2) % n,
                        t: t2,
                    }
                } else {
                    // α^{s1} β α^{s2} β^{t2} = α^{s1 - s2} β^{1 + t2}, β² = α^q
                    let s = (s1 + n - s2) % n;
                    if t2 == 0 {
                        Word::Dicyclic { s, t: 1 }
                    } else {
                        Word::Dicyclic {
                            s: (s + q) % n,
                            t: 0,
                        }
                    }
                }
            }
            _ => panic!("word does not belong to {}", self.spec),
        }
    }

    pub fn identity_word(&self) -> Option<Word> {
        match self.spec {
            GroupSpec::Cyclic(_) => Some(Word::Cyclic { s: 0 }),
            GroupSpec::Dicyclic(_) => Some(Word::Dicyclic { s: 0, t: 0 }),
            _ => None,
        }
    }

    pub fn inverse(&self, w: Word) -> Word {
        match (self.spec, w) {
            (GroupSpec::Cyclic(m), Word::Cyclic { s }) => Word::Cyclic { s: (m - s) % m },
            (GroupSpec::Dicyclic(q), Word::Dicyclic { s, t: 0 }) => Word::Dicyclic {
                s: (2 * q - s) % (2 * q),
                t: 0,
            },
            // (α^s β)^2 = α^s α^{-s} β^2 = α^q, so (α^s β)^{-1} = α^s β · α^{-q}
            (GroupSpec::Dicyclic(q), Word::Dicyclic { s, t: 1 }) => Word::Dicyclic {
                s: (s + q) % (2 * q),
                t: 1,
            },
            _ => panic!("word does not belong to {}", self.spec),
        }
    }

    /// Class index of a normal form.
    pub fn class_of(&self, w: Word) -> usize {
        match (self.spec, w) {
            (GroupSpec::Cyclic(_), Word::Cyclic { s }) => s,
            (GroupSpec::Dicyclic(q), Word::Dicyclic { s, t: 0 }) => {
                if s <= q {
                    s
                } else {
                    2 * q - s
                }
            }
            // α^s β = β α^{-s}: even s lies in the class of β α^{2j}
            (GroupSpec::Dicyclic(q), Word::Dicyclic { s, t: 1 }) => {
                if s % 2 == 0 {
                    q + 1
                } else {
                    q + 2
                }
            }
            _ => panic!("word does not belong to {}", self.spec),
        }
    }

    /// Image of a normal form in the tautological representation.
    pub fn tautological_matrix(&self, w: Word) -> CycloMatrix {
        let m = self.conductor;
        let zero = CycloNumber::zero(m);
        match (self.spec, w) {
            (GroupSpec::Cyclic(_), Word::Cyclic { s }) => {
                let e = CycloNumber::root_of_unity(m, s as i64);
                let ei = CycloNumber::root_of_unity(m, -(s as i64));
                CycloMatrix::from_rows(m, vec![vec![e, zero.clone()], vec![zero, ei]]).expect("2x2")
            }
            (GroupSpec::Dicyclic(q), Word::Dicyclic { s, t }) => {
                let step = (m as usize / (2 * q)) as i64;
                let e = CycloNumber::root_of_unity(m, s as i64 * step);
                let ei = CycloNumber::root_of_unity(m, -(s as i64) * step);
                let a =
                    CycloMatrix::from_rows(m, vec![vec![e, zero.clone()], vec![zero.clone(), ei]])
                        .expect("2x2");
                if t == 0 {
                    a
                } else {
                    // β ↦ [[0, ε^q], [1, 0]] with ε^q = -1
                    let b = CycloMatrix::from_rows(
                        m,
                        vec![
                            vec![zero.clone(), CycloNumber::from_int(m, -1)],
                            vec![CycloNumber::one(m), zero],
                        ],
                    )
                    .expect("2x2");
                    a.mul(&b).expect("2x2")
                }
            }
            _ => panic!("word does not belong to {}", self.spec),
        }
    }

    /// All elements of a cyclic or dicyclic group in normal form.
    pub fn enumerate_elements(&self) -> Result<Vec<GroupElement>> {
        let words: Vec<Word> = match self.spec {
            GroupSpec::Cyclic(m) => (0..m).map(|s| Word::Cyclic { s }).collect(),
            GroupSpec::Dicyclic(q) => (0..2)
                .flat_map(|t| (0..2 * q).map(move |s| Word::Dicyclic { s, t }))
                .collect(),
            _ => {
                return Err(Error::Unsupported(
                    "element-level enumeration unsupported for exceptional groups".into(),
                ))
            }
        };
        Ok(words
            .into_iter()
            .map(|word| GroupElement {
                word,
                matrix: self.tautological_matrix(word),
                class: self.class_of(word),
            })
            .collect())
    }
}

/// The symplectic form on `L` in the basis `x, y` with `ω(x, y) = 1`.
pub fn symplectic_form(u: &[CycloNumber], v: &[CycloNumber]) -> CycloNumber {
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_specs() -> Vec<GroupSpec> {
        let mut v: Vec<GroupSpec> = (2..=12).map(GroupSpec::Cyclic).collect();
        v.extend((2..=8).map(GroupSpec::Dicyclic));
        v.extend([
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
            GroupSpec::BinaryIcosahedral,
        ]);
        v
    }

    #[test]
    fn parse_specs() {
        assert_eq!("c4".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(4));
        assert_eq!("D3".parse::<GroupSpec>().unwrap(), GroupSpec::Dicyclic(3));
        assert_eq!(
            "i".parse::<GroupSpec>().unwrap(),
            GroupSpec::BinaryIcosahedral
        );
        assert_eq!("C1".parse::<GroupSpec>().unwrap_err(), Error::TrivialGroup);
        assert!(Error::TrivialGroup
            .to_string()
            .contains("contains a copy of the Weyl algebra"));
        assert!("D1".parse::<GroupSpec>().is_err());
        assert!("X3".parse::<GroupSpec>().is_err());
        assert!("C".parse::<GroupSpec>().is_err());
        assert!(build_group(GroupSpec::Cyclic(1)).is_err());
    }

    #[test]
    fn cyclic_four() {
        let g = build_group(GroupSpec::Cyclic(4)).unwrap();
        assert_eq!(g.nu(), 4);
        assert_eq!(g.dims(), vec![1; 4]);
        for h in 0..4 {
            for s in 0..4 {
                assert_eq!(
                    *g.character(h, s),
                    CycloNumber::root_of_unity(4, (h * s) as i64)
                );
            }
        }
    }

    #[test]
    fn quaternion_group() {
        let g = build_group(GroupSpec::Dicyclic(2)).unwrap();
        assert_eq!(g.order, 8);
        assert_eq!(g.nu(), 5);
        assert_eq!(g.dims(), vec![2, 1, 1, 1, 1]);
        let sizes: Vec<usize> = g.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 1, 2, 2]);
        assert_eq!(g.trivial_index(), 1);
    }

    #[test]
    fn icosahedral_sizes() {
        let g = build_group(GroupSpec::BinaryIcosahedral).unwrap();
        assert_eq!(g.order, 120);
        assert_eq!(g.nu(), 9);
        assert_eq!(g.dims().iter().map(|d| d * d).sum::<usize>(), 120);
    }

    #[test]
    fn all_tables_validate() {
        for spec in all_specs() {
            build_group(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        }
    }

    #[test]
    fn central_scalars() {
        let c2 = build_group(GroupSpec::Cyclic(2)).unwrap();
        assert_eq!(c2.central_class_scalar(1, 1), CycloNumber::from_int(2, -1));
        let d2 = build_group(GroupSpec::Dicyclic(2)).unwrap();
        // class of α² is index q = 2
        assert_eq!(d2.central_class_scalar(0, 2), CycloNumber::from_int(4, -1));
        for spec in all_specs() {
            let g = build_group(spec).unwrap();
            for h in 0..g.nu() {
                assert!(g.central_class_scalar(h, 0).is_one());
            }
        }
    }

    #[test]
    fn element_enumeration() {
        let c2 = build_group(GroupSpec::Cyclic(2)).unwrap();
        let els = c2.enumerate_elements().unwrap();
        assert_eq!(els.len(), 2);
        assert!(els[0].matrix.is_identity());
        assert_eq!(els[1].matrix[(0, 0)], CycloNumber::from_int(2, -1));
        assert_eq!(els[1].matrix[(1, 1)], CycloNumber::from_int(2, -1));

        let c3 = build_group(GroupSpec::Cyclic(3)).unwrap();
        let a = &c3.enumerate_elements().unwrap()[1].matrix;
        assert_eq!(a[(0, 0)], CycloNumber::root_of_unity(3, 1));
        assert_eq!(a[(1, 1)], CycloNumber::root_of_unity(3, 2));

        let d2 = build_group(GroupSpec::Dicyclic(2)).unwrap();
        let els = d2.enumerate_elements().unwrap();
        assert_eq!(els.len(), 8);
        let alpha = d2.tautological_matrix(Word::Dicyclic { s: 1, t: 0 });
        assert_eq!(alpha[(0, 0)], CycloNumber::root_of_unity(4, 1));
        assert_eq!(alpha[(1, 1)], CycloNumber::root_of_unity(4, -1));
        let beta = d2.tautological_matrix(Word::Dicyclic { s: 0, t: 1 });
        assert_eq!(beta[(0, 1)], CycloNumber::from_int(4, -1));
        assert!(beta[(1, 0)].is_one());

        let t = build_group(GroupSpec::BinaryTetrahedral).unwrap();
        let err = t.enumerate_elements().unwrap_err();
        assert!(err
            .to_string()
            .contains("unsupported for exceptional groups"));
    }

    #[test]
    fn elements_match_table() {
        for spec in all_specs().into_iter().filter(|s| !s.is_exceptional()) {
            let g = build_group(spec).unwrap();
            let els = g.enumerate_elements().unwrap();
            assert_eq!(els.len(), g.order);
            let taut = g.tautological_character();
            let mut counts = vec![0usize; g.nu()];
            for e in &els {
                counts[e.class] += 1;
                assert!(e.matrix.determinant().unwrap().is_one());
                assert_eq!(e.matrix.trace(), taut[e.class], "{spec} {:?}", e.word);
                // matrices respect the group law
                for f in els.iter().step_by(3) {
                    let prod = g.multiply(e.word, f.word);
                    assert_eq!(
                        e.matrix.mul(&f.matrix).unwrap(),
                        g.tautological_matrix(prod)
                    );
                }
                let inv = g.inverse(e.word);
                assert_eq!(g.multiply(e.word, inv), g.identity_word().unwrap());
            }
            let sizes: Vec<usize> = g.classes.iter().map(|c| c.size).collect();
            assert_eq!(counts, sizes, "{spec}");
        }
    }

    #[test]
    fn symplectic_form_basis() {
        let x = [CycloNumber::one(3), CycloNumber::zero(3)];
        let y = [CycloNumber::zero(3), CycloNumber::one(3)];
        assert!(symplectic_form(&x, &y).is_one());
        assert_eq!(symplectic_form(&y, &x), CycloNumber::from_int(3, -1));
        assert!(symplectic_form(&x, &x).is_zero());
    }
}
