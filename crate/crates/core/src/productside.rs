//! Euler products, the product side `c(p)` and principal specialisations of
//! the denominator of the dual type.

use alloc::vec::Vec;
use core::fmt;

use crate::rootsystem::{
    affine_config, affine_positive_root_heights, level_one, principal, AffineType,
};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// `(q^x; q^y)_inf ^ exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochhammerFactor {
    pub x: u32,
    pub y: u32,
    pub exponent: i32,
}

impl PochhammerFactor {
    pub const fn new(x: u32, y: u32, exponent: i32) -> Self {
        PochhammerFactor { x, y, exponent }
    }
}

impl fmt::Display for PochhammerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.x, self.y)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// A finite product of Pochhammer factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerProduct(pub Vec<PochhammerFactor>);

impl EulerProduct {
    pub fn expand(&self, degree: usize) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::one(degree);
        for f in &self.0 {
            apply_pochhammer(&mut s, f.x, f.y, f.exponent)?;
        }
        Ok(s)
    }
}

impl fmt::Display for EulerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for factor in &self.0 {
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

fn apply_pochhammer(s: &mut TruncatedSeries, x: u32, y: u32, exponent: i32) -> Result<()> {
    if exponent == 0 {
        return Ok(());
    }
    if y == 0 {
        return Err(Error::Integrity(alloc::format!(
            "Pochhammer step must be >= 1, got ({x};{y})"
        )));
    }
    if x == 0 {
        if exponent < 0 {
            return Err(Error::ZeroPochhammer { y, exponent });
        }
        *s = TruncatedSeries::zero(s.degree());
        return Ok(());
    }
    let mut m = x as usize;
    while m <= s.degree() {
        s.mul_one_minus_power(m, exponent as i64)?;
        m += y as usize;
    }
    Ok(())
}

/// Expansion of `(q^x; q^y)_inf ^ exponent` modulo `q^{N+1}`.
pub fn pochhammer_factor(x: u32, y: u32, exponent: i32, degree: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(degree);
    apply_pochhammer(&mut s, x, y, exponent)?;
    Ok(s)
}

/// Residue classes `m = r_t (mod N_t)` making up the multiset `P_X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceClassData {
    pub affine_type: AffineType,
    pub classes: &'static [(u32, u32)],
}

impl CongruenceClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn congruence_classes(t: AffineType) -> CongruenceClassData {
    let classes: &'static [(u32, u32)] = match t {
        AffineType::G2_1 => &[(0, 6), (1, 6), (5, 6), (6, 15), (9, 15)],
        AffineType::D4_3 => &[(1, 6), (5, 6), (0, 4)],
        AffineType::F4_1 => &[(1, 6), (5, 6), (8, 20), (12, 20), (0, 12)],
        AffineType::E6_2 => &[(1, 6), (5, 6), (0, 9)],
        AffineType::E6_1 => &[(1, 6), (5, 6), (0, 12), (4, 12), (8, 12)],
        AffineType::E7_1 => &[(1, 6), (5, 6), (0, 18), (9, 18)],
        AffineType::E8_1 => &[
            (0, 30),
            (1, 30),
            (7, 30),
            (11, 30),
            (13, 30),
            (17, 30),
            (19, 30),
            (23, 30),
            (29, 30),
        ],
    };
    CongruenceClassData {
        affine_type: t,
        classes,
    }
}

/// Number of classes of `P_X` containing `m`.
pub fn multiplicity_a(t: AffineType, m: u32) -> u32 {
    congruence_classes(t)
        .classes
        .iter()
        .filter(|&&(r, n)| m % n == r)
        .count() as u32
}

/// `prod_{m=1}^{N} (1 - q^m)^{-a_m}` modulo `q^{N+1}`.
pub fn product_side_series(t: AffineType, degree: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(degree);
    for m in 1..=degree {
        let a = multiplicity_a(t, m as u32);
        if a > 0 {
            s.mul_one_minus_power(m, -(a as i64))?;
        }
    }
    Ok(s)
}

/// `prod (1 - q^{ht_s(alpha)})^{mult(alpha)}` over the affine positive roots
/// of `dual_type`, modulo `q^{N+1}`.
pub fn specialized_d(dual_type: AffineType, s: &[u32], degree: usize) -> Result<TruncatedSeries> {
    let config = affine_config(dual_type);
    let mut out = TruncatedSeries::one(degree);
    if degree == 0 {
        // still validate the specialisation vector
        affine_positive_root_heights(&config, s, 1)?;
        return Ok(out);
    }
    let cutoff = u32::try_from(degree).map_err(|_| Error::Overflow)?;
    for root in affine_positive_root_heights(&config, s, cutoff)? {
        out.mul_one_minus_power(root.height as usize, root.multiplicity as i64)?;
    }
    Ok(out)
}

/// `F_1` of the normalised level-one character: the `(2,1,...,1)`
/// specialisation of the dual denominator divided by the principal one.
pub fn normalized_character_series(t: AffineType, degree: usize) -> Result<TruncatedSeries> {
    let dual = affine_config(t).dual;
    let dual_config = affine_config(dual);
    let num = specialized_d(dual, &level_one(&dual_config), degree)?;
    let den = specialized_d(dual, &principal(&dual_config), degree)?;
    num.div(&den)
}
