//! Character tables of the binary tetrahedral, octahedral and icosahedral groups.
//!
//! Each value is stored as `a + b·u` for a single irrational unit `u` per group:
//! `ω = ζ_3` for the tetrahedral group, `√2` for the octahedral group and the
//! golden ratio `φ = (1 + √5)/2` for the icosahedral group. Classes are ordered by
//! element order, then class size. The tables are only accepted after the exact
//! invariant checks in [`super::GroupData::validate`].

use super::ConjugacyClass;
use crate::arith::CycloNumber;

pub(super) struct ExceptionalTable {
    pub conductor: u32,
    pub order: usize,
    /// (element order, class size, representative description)
    pub classes: &'static [(usize, usize, &'static str)],
    pub irreps: &'static [(&'static str, [(i64, i64); 9])],
    pub tautological: usize,
    unit: fn() -> CycloNumber,
}

impl ExceptionalTable {
    pub fn nu(&self) -> usize {
        self.classes.len()
    }

    pub fn class_list(&self) -> Vec<ConjugacyClass> {
        self.classes
            .iter()
            .map(|&(order, size, rep)| ConjugacyClass {
                size,
                representative: rep.to_string(),
                element_order: order,
            })
            .collect()
    }

    pub fn value(&self, h: usize, s: usize) -> CycloNumber {
        let (a, b) = self.irreps[h].1[s];
        let u = (self.unit)();
        &CycloNumber::from_int(self.conductor, a) + &u.scale(&b.into())
    }
}

fn omega() -> CycloNumber {
    CycloNumber::root_of_unity(3, 1)
}

fn sqrt2() -> CycloNumber {
    &CycloNumber::root_of_unity(8, 1) - &CycloNumber::root_of_unity(8, 3)
}

fn golden() -> CycloNumber {
    let one = CycloNumber::one(5);
    &(&one + &CycloNumber::root_of_unity(5, 1)) + &CycloNumber::root_of_unity(5, 4)
}

const Z: (i64, i64) = (0, 0);

// x = (1+i+j+k)/2 has order 6; classes: e, -1, [x^2], [x^4], [i], [x], [x^5].
// ω² is written as -1 - ω.
pub(super) static TETRAHEDRAL: ExceptionalTable = ExceptionalTable {
    conductor: 3,
    order: 24,
    classes: &[
        (1, 1, "e"),
        (2, 1, "-1"),
        (3, 4, "x^2"),
        (3, 4, "x^4"),
        (4, 6, "i"),
        (6, 4, "x"),
        (6, 4, "x^5"),
    ],
    irreps: &[
        (
            "1",
            [(1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), Z, Z],
        ),
        (
            "1'",
            [
                (1, 0),
                (1, 0),
                (-1, -1),
                (0, 1),
                (1, 0),
                (0, 1),
                (-1, -1),
                Z,
                Z,
            ],
        ),
        (
            "1''",
            [
                (1, 0),
                (1, 0),
                (0, 1),
                (-1, -1),
                (1, 0),
                (-1, -1),
                (0, 1),
                Z,
                Z,
            ],
        ),
        (
            "2",
            [
                (2, 0),
                (-2, 0),
                (-1, 0),
                (-1, 0),
                (0, 0),
                (1, 0),
                (1, 0),
                Z,
                Z,
            ],
        ),
        (
            "2'",
            [
                (2, 0),
                (-2, 0),
                (1, 1),
                (0, -1),
                (0, 0),
                (0, 1),
                (-1, -1),
                Z,
                Z,
            ],
        ),
        (
            "2''",
            [
                (2, 0),
                (-2, 0),
                (0, -1),
                (1, 1),
                (0, 0),
                (-1, -1),
                (0, 1),
                Z,
                Z,
            ],
        ),
        (
            "3",
            [
                (3, 0),
                (3, 0),
                (0, 0),
                (0, 0),
                (-1, 0),
                (0, 0),
                (0, 0),
                Z,
                Z,
            ],
        ),
    ],
    tautological: 3,
    unit: omega,
};

pub(super) static OCTAHEDRAL: ExceptionalTable = ExceptionalTable {
    conductor: 8,
    order: 48,
    classes: &[
        (1, 1, "e"),
        (2, 1, "-1"),
        (3, 8, "(-1+i+j+k)/2"),
        (4, 6, "i"),
        (4, 12, "(i+j)/sqrt2"),
        (6, 8, "(1+i+j+k)/2"),
        (8, 6, "(1+i)/sqrt2"),
        (8, 6, "(-1+i)/sqrt2"),
    ],
    irreps: &[
        (
            "1",
            [
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                Z,
            ],
        ),
        (
            "1'",
            [
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (-1, 0),
                (1, 0),
                (-1, 0),
                (-1, 0),
                Z,
            ],
        ),
        (
            "2",
            [
                (2, 0),
                (2, 0),
                (-1, 0),
                (2, 0),
                (0, 0),
                (-1, 0),
                (0, 0),
                (0, 0),
                Z,
            ],
        ),
        (
            "3",
            [
                (3, 0),
                (3, 0),
                (0, 0),
                (-1, 0),
                (1, 0),
                (0, 0),
                (-1, 0),
                (-1, 0),
                Z,
            ],
        ),
        (
            "3'",
            [
                (3, 0),
                (3, 0),
                (0, 0),
                (-1, 0),
                (-1, 0),
                (0, 0),
                (1, 0),
                (1, 0),
                Z,
            ],
        ),
        (
            "2s",
            [
                (2, 0),
                (-2, 0),
                (-1, 0),
                (0, 0),
                (0, 0),
                (1, 0),
                (0, 1),
                (0, -1),
                Z,
            ],
        ),
        (
            "2s'",
            [
                (2, 0),
                (-2, 0),
                (-1, 0),
                (0, 0),
                (0, 0),
                (1, 0),
                (0, -1),
                (0, 1),
                Z,
            ],
        ),
        (
            "4s",
            [
                (4, 0),
                (-4, 0),
                (1, 0),
                (0, 0),
                (0, 0),
                (-1, 0),
                (0, 0),
                (0, 0),
                Z,
            ],
        ),
    ],
    tautological: 5,
    unit: sqrt2,
};

// Order-5 and order-10 classes are split by the trace of the natural
// representation: 5a has trace φ-1, 5b has -φ, 10a has φ, 10b has 1-φ.
pub(super) static ICOSAHEDRAL: ExceptionalTable = ExceptionalTable {
    conductor: 5,
    order: 120,
    classes: &[
        (1, 1, "e"),
        (2, 1, "-1"),
        (3, 20, "order 3"),
        (4, 30, "order 4"),
        (5, 12, "order 5, trace phi-1"),
        (5, 12, "order 5, trace -phi"),
        (6, 20, "order 6"),
        (10, 12, "order 10, trace phi"),
        (10, 12, "order 10, trace 1-phi"),
    ],
    irreps: &[
        (
            "1",
            [
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
                (1, 0),
            ],
        ),
        (
            "2",
            [
                (2, 0),
                (-2, 0),
                (-1, 0),
                (0, 0),
                (-1, 1),
                (0, -1),
                (1, 0),
                (0, 1),
                (1, -1),
            ],
        ),
        (
            "3",
            [
                (3, 0),
                (3, 0),
                (0, 0),
                (-1, 0),
                (1, -1),
                (0, 1),
                (0, 0),
                (0, 1),
                (1, -1),
            ],
        ),
        (
            "4",
            [
                (4, 0),
                (-4, 0),
                (1, 0),
                (0, 0),
                (-1, 0),
                (-1, 0),
                (-1, 0),
                (1, 0),
                (1, 0),
            ],
        ),
        (
            "5",
            [
                (5, 0),
                (5, 0),
                (-1, 0),
                (1, 0),
                (0, 0),
                (0, 0),
                (-1, 0),
                (0, 0),
                (0, 0),
            ],
        ),
        (
            "6",
            [
                (6, 0),
                (-6, 0),
                (0, 0),
                (0, 0),
                (1, 0),
                (1, 0),
                (0, 0),
                (-1, 0),
                (-1, 0),
            ],
        ),
        (
            "2'",
            [
                (2, 0),
                (-2, 0),
                (-1, 0),
                (0, 0),
                (0, -1),
                (-1, 1),
                (1, 0),
                (1, -1),
                (0, 1),
            ],
        ),
        (
            "3'",
            [
                (3, 0),
                (3, 0),
                (0, 0),
                (-1, 0),
                (0, 1),
                (1, -1),
                (0, 0),
                (1, -1),
                (0, 1),
            ],
        ),
        (
            "4'",
            [
                (4, 0),
                (4, 0),
                (1, 0),
                (0, 0),
                (-1, 0),
                (-1, 0),
                (1, 0),
                (-1, 0),
                (-1, 0),
            ],
        ),
    ],
    tautological: 1,
    unit: golden,
};
