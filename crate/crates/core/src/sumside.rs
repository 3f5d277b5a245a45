//! The colored partition model: congruences, forbidden parts, difference
//! conditions, and the counting series `d(p)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::crystal::{build_crystal, CrystalElement};
use crate::energy::{difference_matrix_of, DifferenceMatrix, Traversal};
use crate::rootsystem::AffineType;
use crate::{Error, Result};

/// Default largest weight accepted by [`SumSideModel::enumerate_partitions`].
pub const DEFAULT_ORACLE_BOUND: usize = 25;

/// A colored integer `value^color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPart {
    pub value: u32,
    pub color: CrystalElement,
}

impl ColoredPart {
    pub fn new(value: u32, color: CrystalElement) -> Self {
        ColoredPart { value, color }
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

/// Parts listed from the top, ending with the ground part `(0, phi)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPartition {
    pub parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    pub fn ground() -> Self {
        ColoredPartition {
            parts: vec![ColoredPart::new(0, CrystalElement::Ground)],
        }
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Everything needed to test and count admissible partitions for one type.
#[derive(Debug, Clone)]
pub struct SumSideModel {
    matrix: DifferenceMatrix,
    ht_delta: u32,
    gamma: Vec<u32>,
    // positive forbidden value of each color, if any
    forbidden: Vec<Option<u32>>,
    oracle_bound: usize,
}

impl SumSideModel {
    pub fn new(t: AffineType) -> Result<Self> {
        let crystal = build_crystal(t);
        let matrix = difference_matrix_of(&crystal, Traversal::BreadthFirst)?;
        Ok(Self::from_matrix(matrix))
    }

    /// Builds the model over an already computed (or loaded) matrix.
    pub fn from_matrix(matrix: DifferenceMatrix) -> Self {
        let ht_delta = crate::rootsystem::affine_config(matrix.affine_type()).ht_delta as u32;
        let gamma = matrix
            .order()
            .iter()
            .map(|b| gamma_of(b, ht_delta))
            .collect();
        let forbidden = matrix
            .order()
            .iter()
            .map(|b| match b {
                CrystalElement::Neg(_) => Some((-b.ht_wt()) as u32),
                _ => None,
            })
            .collect();
        SumSideModel {
            matrix,
            ht_delta,
            gamma,
            forbidden,
            oracle_bound: DEFAULT_ORACLE_BOUND,
        }
    }

    pub fn with_oracle_bound(mut self, bound: usize) -> Self {
        self.oracle_bound = bound;
        self
    }

    pub fn affine_type(&self) -> AffineType {
        self.matrix.affine_type()
    }

    pub fn matrix(&self) -> &DifferenceMatrix {
        &self.matrix
    }

    pub fn ht_delta(&self) -> u32 {
        self.ht_delta
    }

    pub fn gamma(&self, b: &CrystalElement) -> Option<u32> {
        self.matrix.position(b).map(|i| self.gamma[i])
    }

    /// Colors of `B` grouped by residue, in canonical order within a row.
    pub fn congruence_table(&self) -> BTreeMap<u32, Vec<CrystalElement>> {
        let mut table: BTreeMap<u32, Vec<CrystalElement>> = BTreeMap::new();
        for (b, &g) in self.matrix.order().iter().zip(&self.gamma) {
            table.entry(g).or_default().push(*b);
        }
        table
    }

    /// All forbidden parts, including the zero-valued `0^b` with `b != phi`.
    pub fn forbidden_parts(&self) -> BTreeSet<ColoredPart> {
        let mut out = BTreeSet::new();
        for (b, f) in self.matrix.order().iter().zip(&self.forbidden) {
            if b.is_ground() {
                continue;
            }
            out.insert(ColoredPart::new(0, *b));
            if let Some(v) = f {
                out.insert(ColoredPart::new(*v, *b));
            }
        }
        out
    }

    /// Forbidden parts with a positive value, ordered by value.
    pub fn positive_forbidden_parts(&self) -> Vec<ColoredPart> {
        let mut out: Vec<_> = self
            .forbidden_parts()
            .into_iter()
            .filter(|p| p.value > 0)
            .collect();
        out.sort();
        out
    }

    fn is_forbidden(&self, value: u32, idx: usize) -> bool {
        self.forbidden[idx] == Some(value)
    }

    // row = color of the lower part, column = color of the upper part
    fn min_gap(&self, lower: usize, upper: usize) -> i64 {
        self.matrix.get(lower, upper) as i64
    }

    fn part_allowed(&self, value: u32, idx: usize) -> bool {
        value >= 1 && value % self.ht_delta == self.gamma[idx] && !self.is_forbidden(value, idx)
    }

    pub fn is_admissible(&self, parts: &[ColoredPart]) -> bool {
        let Some((last, upper)) = parts.split_last() else {
            return false;
        };
        if last.value != 0 || !last.color.is_ground() {
            return false;
        }
        let mut idx = Vec::with_capacity(parts.len());
        for p in parts {
            match self.matrix.position(&p.color) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        for (k, p) in upper.iter().enumerate() {
            if !self.part_allowed(p.value, idx[k]) {
                return false;
            }
        }
        parts
            .windows(2)
            .zip(idx.windows(2))
            .all(|(w, i)| w[0].value as i64 - w[1].value as i64 >= self.min_gap(i[1], i[0]))
    }

    /// `d(0), ..., d(p_max)`.
    pub fn count_d_series(&self, p_max: usize) -> Result<Vec<u64>> {
        let n = self.matrix.size();
        let ground = self
            .matrix
            .position(&CrystalElement::Ground)
            .ok_or_else(|| Error::Integrity("ground element missing".into()))?;
        let stride_w = (p_max + 1) * n;
        // cnt[w][v][b] and prefix[w][b][x] = sum_{v <= x} cnt[w][v][b]
        let at = |w: usize, v: usize, b: usize| w * stride_w + v * n + b;
        let pre_at = |w: usize, b: usize, x: usize| w * stride_w + b * (p_max + 1) + x;
        let mut cnt = vec![0u64; (p_max + 1) * stride_w];
        let mut prefix = vec![0u64; (p_max + 1) * stride_w];
        cnt[at(0, 0, ground)] = 1;
        for x in 0..=p_max {
            prefix[pre_at(0, ground, x)] = 1;
        }
        let mut d = vec![0u64; p_max + 1];
        d[0] = 1;
        for w in 1..=p_max {
            for v in 1..=w {
                let rest = w - v;
                for b_new in 0..n {
                    if !self.part_allowed(v as u32, b_new) {
                        continue;
                    }
                    let mut total = 0u64;
                    for b in 0..n {
                        let bound = v as i64 - self.min_gap(b, b_new);
                        if bound < 0 {
                            continue;
                        }
                        let x = (bound as usize).min(rest);
                        total = total
                            .checked_add(prefix[pre_at(rest, b, x)])
                            .ok_or(Error::Overflow)?;
                    }
                    cnt[at(w, v, b_new)] = total;
                    d[w] = d[w].checked_add(total).ok_or(Error::Overflow)?;
                }
            }
            for b in 0..n {
                let mut acc = 0u64;
                for x in 0..=p_max {
                    if x <= w {
                        acc = acc.checked_add(cnt[at(w, x, b)]).ok_or(Error::Overflow)?;
                    }
                    prefix[pre_at(w, b, x)] = acc;
                }
            }
        }
        Ok(d)
    }

    /// Every admissible partition of weight `p`, by exhaustive search from
    /// the top part down.
    pub fn enumerate_partitions(&self, p: usize) -> Result<Vec<ColoredPartition>> {
        if p > self.oracle_bound {
            return Err(Error::Budget {
                requested: p,
                bound: self.oracle_bound,
            });
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.descend(p as u32, None, &mut stack, &mut out);
        Ok(out)
    }

    fn descend(
        &self,
        remaining: u32,
        above: Option<(u32, usize)>,
        stack: &mut Vec<ColoredPart>,
        out: &mut Vec<ColoredPartition>,
    ) {
        let n = self.matrix.size();
        if remaining == 0 {
            let mut parts = stack.clone();
            parts.push(ColoredPart::new(0, CrystalElement::Ground));
            if self.is_admissible(&parts) {
                out.push(ColoredPartition { parts });
            }
            return;
        }
        for b in 0..n {
            let max_v = match above {
                None => remaining as i64,
                Some((v, bu)) => (remaining as i64).min(v as i64 - self.min_gap(b, bu)),
            };
            for v in 1..=max_v.max(0) as u32 {
                if !self.part_allowed(v, b) {
                    continue;
                }
                stack.push(ColoredPart::new(v, self.matrix.order()[b]));
                self.descend(remaining - v, Some((v, b)), stack, out);
                stack.pop();
            }
        }
    }

    /// `lambda_k = (pi_k + ht(wt b_k)) / ht(delta)` for each part.
    pub fn reconstruct_lambda(&self, parts: &[ColoredPart]) -> Result<Vec<i64>> {
        let h = self.ht_delta as i64;
        parts
            .iter()
            .map(|p| {
                let num = p.value as i64 + p.color.ht_wt() as i64;
                if num.rem_euclid(h) != 0 {
                    Err(Error::Integrity(format!(
                        "part {p} does not come from an integer lambda"
                    )))
                } else {
                    Ok(num.div_euclid(h))
                }
            })
            .collect()
    }
}

/// `(-ht(wt b)) mod ht(delta)`.
pub fn gamma_of(b: &CrystalElement, ht_delta: u32) -> u32 {
    (-(b.ht_wt() as i64)).rem_euclid(ht_delta as i64) as u32
}
