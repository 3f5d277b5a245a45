//! Published reference data: coefficient rows, forbidden initial parts,
//! congruence rows, three explicit difference matrices and the closed-form
//! specialisation products.

mod tables;

use std::collections::{BTreeMap, BTreeSet};

use rrcrystal_core::productside::{EulerProduct, PochhammerFactor};
use rrcrystal_core::sumside::ColoredPart;
use rrcrystal_core::{AffineType, CrystalElement, DifferenceMatrix};

pub use tables::{COEFFICIENTS, CONGRUENCE_ROWS, INITIAL_CONDITIONS, MATRICES};

fn el(name: &str) -> CrystalElement {
    name.parse()
        .unwrap_or_else(|e| panic!("bad element name in reference data: {e}"))
}

/// `c(1), ..., c(60)`.
pub fn coefficients(t: AffineType) -> &'static [u64; 60] {
    &COEFFICIENTS
        .iter()
        .find(|(x, _)| *x == t)
        .expect("all types present")
        .1
}

pub fn initial_conditions(t: AffineType) -> Vec<ColoredPart> {
    INITIAL_CONDITIONS
        .iter()
        .find(|(x, _)| *x == t)
        .expect("all types present")
        .1
        .iter()
        .map(|&(v, name)| ColoredPart::new(v, el(name)))
        .collect()
}

/// `(modulus, residue -> colors)`.
pub fn congruence_rows(t: AffineType) -> (u32, BTreeMap<u32, BTreeSet<CrystalElement>>) {
    let (_, modulus, rows) = CONGRUENCE_ROWS
        .iter()
        .find(|(x, _, _)| *x == t)
        .expect("all types present");
    let map = rows
        .iter()
        .map(|(r, names)| (*r, names.iter().map(|n| el(n)).collect()))
        .collect();
    (*modulus, map)
}

/// The published difference matrix, for the three types where it is given
/// in full.
pub fn published_matrix(t: AffineType) -> Option<DifferenceMatrix> {
    let (_, order, entries) = MATRICES.iter().find(|(x, _, _)| *x == t)?;
    let order = order.iter().map(|n| el(n)).collect();
    Some(
        DifferenceMatrix::from_parts(t, order, entries.to_vec())
            .expect("reference matrix is square"),
    )
}

const fn p(x: u32, y: u32, e: i32) -> PochhammerFactor {
    PochhammerFactor::new(x, y, e)
}

/// Closed forms of the specialisations of the dual denominator and of the
/// normalised character.
#[derive(Debug, Clone)]
pub struct SpecializationProducts {
    /// All-ones specialisation of `D(dual)`.
    pub principal: EulerProduct,
    /// `(2, 1, ..., 1)` specialisation of `D(dual)`.
    pub level_one: EulerProduct,
    /// Their quotient, the normalised character.
    pub character: EulerProduct,
}

pub fn specialization_products(t: AffineType) -> SpecializationProducts {
    use AffineType::*;
    let (principal, level_one, character): (Vec<_>, Vec<_>, Vec<_>) = match t {
        G2_1 => (
            vec![p(1, 1, 2), p(1, 6, 1), p(5, 6, 1)],
            vec![p(1, 1, 2), p(6, 15, -1), p(9, 15, -1)],
            vec![p(1, 6, -1), p(5, 6, -1), p(6, 15, -1), p(9, 15, -1)],
        ),
        D4_3 => (
            vec![p(1, 1, 2), p(1, 6, 1), p(5, 6, 1)],
            vec![p(1, 1, 2)],
            vec![p(5, 6, -1), p(1, 6, -1)],
        ),
        F4_1 => (
            vec![p(1, 1, 4), p(5, 6, 1), p(1, 6, 1)],
            vec![p(1, 1, 4), p(8, 20, -1), p(12, 20, -1)],
            vec![p(8, 20, -1), p(12, 20, -1), p(1, 6, -1), p(5, 6, -1)],
        ),
        E6_2 => (
            vec![p(1, 1, 4), p(5, 6, 1), p(1, 6, 1)],
            vec![p(1, 1, 4)],
            vec![p(5, 6, -1), p(1, 6, -1)],
        ),
        E6_1 => (
            vec![p(1, 1, 6), p(1, 6, 1), p(5, 6, 1), p(4, 12, 1), p(8, 12, 1)],
            vec![p(1, 1, 6)],
            vec![p(1, 6, -1), p(5, 6, -1), p(4, 12, -1), p(8, 12, -1)],
        ),
        E7_1 => (
            vec![p(1, 1, 7), p(1, 6, 1), p(5, 6, 1), p(9, 18, 1)],
            vec![p(1, 1, 7)],
            vec![p(1, 6, -1), p(5, 6, -1), p(9, 18, -1)],
        ),
        E8_1 => (
            vec![
                p(1, 1, 8),
                p(1, 6, 1),
                p(5, 6, 1),
                p(5, 30, -1),
                p(25, 30, -1),
            ],
            vec![p(1, 1, 8)],
            [1, 7, 11, 13, 17, 19, 23, 29]
                .into_iter()
                .map(|x| p(x, 30, -1))
                .collect(),
        ),
    };
    SpecializationProducts {
        principal: EulerProduct(principal),
        level_one: EulerProduct(level_one),
        character: EulerProduct(character),
    }
}
