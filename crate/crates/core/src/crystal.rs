//! The level-one perfect crystal `B = B(theta) + B(0)`.
//!
//! Elements are `phi` (the ground element), `x_alpha` and `x_{-alpha}` for
//! `alpha` in `R+`, and `r_i` for simple roots `alpha_i` in `Sigma`. Arrows:
//!
//! - `i != 0`: `x_alpha -> x_beta` iff `alpha - alpha_i = beta`, plus
//!   `x_{alpha_i} -> r_i -> x_{-alpha_i}` for `alpha_i` in `Sigma`;
//! - `i = 0`: `x_alpha -> x_beta` iff `alpha + theta = beta` (`alpha`
//!   negative, `alpha != -theta`), plus `x_{-theta} -> phi -> x_theta`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use crate::rootsystem::{affine_config, crystal_root_data, AffineType, Root};
use crate::{Error, Result};

/// An element of `B`. `Neg` stores the positive root `alpha` of `x_{-alpha}`;
/// `Mid` stores the 1-based node index `i` of `r_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrystalElement {
    Ground,
    Pos(Root),
    Mid(u8),
    Neg(Root),
}

impl CrystalElement {
    /// Height of the classical weight.
    pub fn ht_wt(&self) -> i32 {
        match self {
            CrystalElement::Ground | CrystalElement::Mid(_) => 0,
            CrystalElement::Pos(r) => r.height(),
            CrystalElement::Neg(r) => -r.height(),
        }
    }

    pub fn is_ground(&self) -> bool {
        matches!(self, CrystalElement::Ground)
    }
}

/// ASCII names: `phi`, `r<i>`, `+<digits>`, `-<digits>`.
impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalElement::Ground => f.write_str("phi"),
            CrystalElement::Mid(i) => write!(f, "r{i}"),
            CrystalElement::Pos(r) => write!(f, "+{}", r.digits()),
            CrystalElement::Neg(r) => write!(f, "-{}", r.digits()),
        }
    }
}

impl FromStr for CrystalElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownElement(s.to_string());
        let digits = |t: &str| -> Result<Root> {
            if t.is_empty() || t.len() > crate::rootsystem::MAX_RANK {
                return Err(bad());
            }
            let mut c = [0i8; crate::rootsystem::MAX_RANK];
            for (slot, b) in c.iter_mut().zip(t.bytes()) {
                if !b.is_ascii_digit() {
                    return Err(bad());
                }
                *slot = (b - b'0') as i8;
            }
            let root = Root::new(&c[..t.len()]);
            if root.is_positive() {
                Ok(root)
            } else {
                Err(bad())
            }
        };
        match s {
            "phi" => Ok(CrystalElement::Ground),
            _ if s.starts_with('+') => digits(&s[1..]).map(CrystalElement::Pos),
            _ if s.starts_with('-') => digits(&s[1..]).map(CrystalElement::Neg),
            _ if s.starts_with('r') => s[1..]
                .parse::<u8>()
                .ok()
                .filter(|&i| i >= 1 && s[1..].bytes().all(|b| b.is_ascii_digit()))
                .map(CrystalElement::Mid)
                .ok_or_else(bad),
            _ => Err(bad()),
        }
    }
}

/// The crystal graph of `B` for one affine type, with dense arrow tables.
#[derive(Debug, Clone)]
pub struct Crystal {
    affine_type: AffineType,
    rank: usize,
    ht_delta: i32,
    theta: Root,
    elements: Vec<CrystalElement>,
    index: BTreeMap<CrystalElement, usize>,
    f_arrows: Vec<Option<u16>>,
    e_arrows: Vec<Option<u16>>,
    epsilon: Vec<u8>,
    phi: Vec<u8>,
}

impl Crystal {
    pub fn affine_type(&self) -> AffineType {
        self.affine_type
    }

    /// Number of affine nodes `n + 1`.
    pub fn node_count(&self) -> usize {
        self.rank + 1
    }

    pub fn ht_delta(&self) -> i32 {
        self.ht_delta
    }

    pub fn theta(&self) -> Root {
        self.theta
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical order: `phi`, positives (lex descending), `r_i`
    /// (ascending `i`), negatives (lex ascending in the underlying root).
    pub fn elements(&self) -> &[CrystalElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> CrystalElement {
        self.elements[idx]
    }

    pub fn index_of(&self, b: &CrystalElement) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Index of the ground element, always 0.
    pub fn ground(&self) -> usize {
        0
    }

    pub fn f(&self, b: usize, i: usize) -> Option<usize> {
        self.f_arrows[b * self.node_count() + i].map(usize::from)
    }

    pub fn e(&self, b: usize, i: usize) -> Option<usize> {
        self.e_arrows[b * self.node_count() + i].map(usize::from)
    }

    pub fn epsilon(&self, b: usize, i: usize) -> u8 {
        self.epsilon[b * self.node_count() + i]
    }

    pub fn phi(&self, b: usize, i: usize) -> u8 {
        self.phi[b * self.node_count() + i]
    }

    /// `(epsilon_i(b), phi_i(b))`: backward and forward `i`-string lengths.
    pub fn string_stats(&self, b: &CrystalElement, i: usize) -> Option<(u8, u8)> {
        let idx = self.index_of(b)?;
        (i < self.node_count()).then(|| (self.epsilon(idx, i), self.phi(idx, i)))
    }

    /// Number of `i`-arrows.
    pub fn arrow_count(&self, i: usize) -> usize {
        (0..self.len()).filter(|&b| self.f(b, i).is_some()).count()
    }

    /// Length (number of arrows) of the longest `i`-string over all `i`.
    pub fn max_string_length(&self) -> u8 {
        (0..self.len())
            .flat_map(|b| (0..self.node_count()).map(move |i| (b, i)))
            .map(|(b, i)| self.epsilon(b, i) + self.phi(b, i))
            .max()
            .unwrap_or(0)
    }
}

/// Builds `B` with its arrows and string statistics.
pub fn build_crystal(t: AffineType) -> Crystal {
    let config = affine_config(t);
    let data = crystal_root_data(&config);
    let n = config.rank();

    let mut positives = data.positive.clone();
    positives.sort_by_key(|r| Reverse(*r));
    let mut negatives = data.positive.clone();
    negatives.sort();

    let mut elements = vec![CrystalElement::Ground];
    elements.extend(positives.iter().map(|&r| CrystalElement::Pos(r)));
    elements.extend(data.sigma.iter().map(|&i| CrystalElement::Mid(i as u8 + 1)));
    elements.extend(negatives.iter().map(|&r| CrystalElement::Neg(r)));
    let index: BTreeMap<_, _> = elements.iter().enumerate().map(|(k, &b)| (b, k)).collect();

    // signed root -> element
    let from_signed = |r: &Root| -> Option<usize> {
        if r.is_positive() {
            index.get(&CrystalElement::Pos(*r)).copied()
        } else if r.neg().is_positive() {
            index.get(&CrystalElement::Neg(r.neg())).copied()
        } else {
            None
        }
    };

    let nodes = n + 1;
    let mut f_arrows = vec![None; elements.len() * nodes];
    let mut e_arrows = vec![None; elements.len() * nodes];
    let mut add = |from: usize, to: usize, i: usize| {
        assert!(
            f_arrows[from * nodes + i].is_none() && e_arrows[to * nodes + i].is_none(),
            "{t}: f_{i} is not a partial bijection at {} -> {}",
            elements[from],
            elements[to]
        );
        f_arrows[from * nodes + i] = Some(to as u16);
        e_arrows[to * nodes + i] = Some(from as u16);
    };

    for (src, b) in elements.iter().enumerate() {
        let signed = match b {
            CrystalElement::Pos(r) => *r,
            CrystalElement::Neg(r) => r.neg(),
            _ => continue,
        };
        for i in 1..=n {
            let target = signed.sub(&Root::simple(n, i - 1));
            if let Some(dst) = from_signed(&target) {
                add(src, dst, i);
            }
        }
        if let CrystalElement::Neg(r) = b {
            if *r != data.theta {
                if let Some(dst) = index.get(&CrystalElement::Pos(data.theta.sub(r))) {
                    add(src, *dst, 0);
                }
            }
        }
    }
    for &i in &data.sigma {
        let simple = Root::simple(n, i);
        let mid = index[&CrystalElement::Mid(i as u8 + 1)];
        add(index[&CrystalElement::Pos(simple)], mid, i + 1);
        add(mid, index[&CrystalElement::Neg(simple)], i + 1);
    }
    add(index[&CrystalElement::Neg(data.theta)], 0, 0);
    add(0, index[&CrystalElement::Pos(data.theta)], 0);

    let mut epsilon = vec![0u8; elements.len() * nodes];
    let mut phi = vec![0u8; elements.len() * nodes];
    for b in 0..elements.len() {
        for i in 0..nodes {
            let chain = |table: &[Option<u16>]| {
                let mut len = 0u8;
                let mut cur = b;
                while let Some(next) = table[cur * nodes + i] {
                    cur = next as usize;
                    len += 1;
                }
                len
            };
            phi[b * nodes + i] = chain(&f_arrows);
            epsilon[b * nodes + i] = chain(&e_arrows);
        }
    }

    Crystal {
        affine_type: t,
        rank: n,
        ht_delta: config.ht_delta,
        theta: data.theta,
        elements,
        index,
        f_arrows,
        e_arrows,
        epsilon,
        phi,
    }
}

/// Renders an element the way the reference tables print it, e.g.
/// `\overline{(2321)}`.
pub fn latex_name(b: &CrystalElement) -> String {
    use alloc::format;
    match b {
        CrystalElement::Ground => "\\phi".into(),
        CrystalElement::Mid(i) => format!("r_{i}"),
        CrystalElement::Pos(r) => format!("({})", r.digits()),
        CrystalElement::Neg(r) => format!("\\overline{{({})}}", r.digits()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn el(s: &str) -> CrystalElement {
        s.parse().unwrap()
    }

    fn names(c: &Crystal) -> Vec<String> {
        c.elements().iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn d4_3_order() {
        let c = build_crystal(AffineType::D4_3);
        assert_eq!(
            names(&c),
            ["phi", "+21", "+11", "+10", "r1", "-10", "-11", "-21"]
        );
    }

    #[test]
    fn g2_1_order() {
        let c = build_crystal(AffineType::G2_1);
        assert_eq!(
            names(&c),
            [
                "phi", "+23", "+13", "+12", "+11", "+10", "+01", "r1", "r2", "-01", "-10", "-11",
                "-12", "-13", "-23"
            ]
        );
    }

    #[test]
    fn e8_size() {
        assert_eq!(build_crystal(AffineType::E8_1).len(), 249);
    }

    #[test]
    fn string_stat_examples() {
        for t in AffineType::ALL {
            let c = build_crystal(t);
            assert_eq!(
                c.string_stats(&CrystalElement::Ground, 0),
                Some((1, 1)),
                "{t}"
            );
            let top = CrystalElement::Pos(c.theta());
            assert_eq!(c.string_stats(&top, 0), Some((2, 0)), "{t}");
        }
        let d4 = build_crystal(AffineType::D4_3);
        assert_eq!(d4.string_stats(&el("r1"), 1), Some((1, 1)));
        assert_eq!(d4.string_stats(&el("r1"), 7), None);
    }

    #[test]
    fn arrows_are_inverse() {
        for t in AffineType::ALL {
            let c = build_crystal(t);
            for b in 0..c.len() {
                for i in 0..c.node_count() {
                    if let Some(b2) = c.f(b, i) {
                        assert_eq!(c.e(b2, i), Some(b));
                    }
                    if let Some(b0) = c.e(b, i) {
                        assert_eq!(c.f(b0, i), Some(b));
                    }
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for t in AffineType::ALL {
            let c = build_crystal(t);
            for b in c.elements() {
                assert_eq!(&b.to_string().parse::<CrystalElement>().unwrap(), b);
            }
        }
        for bad in [
            "",
            "ph",
            "+",
            "-0",
            "+00",
            "r",
            "r0",
            "rx",
            "+123456789",
            "x12",
        ] {
            assert!(bad.parse::<CrystalElement>().is_err(), "{bad}");
        }
    }

    #[test]
    fn latex_names() {
        assert_eq!(latex_name(&el("-2321")), "\\overline{(2321)}");
        assert_eq!(latex_name(&el("r2")), "r_2");
    }
}
