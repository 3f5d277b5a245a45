//! Cartan and root data for the seven exceptional affine types.
//!
//! Finite roots are coefficient vectors over the simple roots `alpha_1 ..
//! alpha_n` of the finite type obtained by deleting node 0. Node numbering
//! follows the coefficient vectors of the reference root lists (Bourbaki for
//! the simply laced types; long-then-short for `G2(1)`/`F4(1)` and
//! short-then-long for their Langlands duals `D4(3)`/`E6(2)`).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest finite rank among the supported types (`E8`).
pub const MAX_RANK: usize = 8;

/// The seven exceptional affine types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffineType {
    G2_1,
    D4_3,
    F4_1,
    E6_2,
    E6_1,
    E7_1,
    E8_1,
}

impl AffineType {
    pub const ALL: [AffineType; 7] = [
        AffineType::G2_1,
        AffineType::D4_3,
        AffineType::F4_1,
        AffineType::E6_2,
        AffineType::E6_1,
        AffineType::E7_1,
        AffineType::E8_1,
    ];

    /// Machine-friendly tag, e.g. `"E6_2"`.
    pub fn tag(self) -> &'static str {
        match self {
            AffineType::G2_1 => "G2_1",
            AffineType::D4_3 => "D4_3",
            AffineType::F4_1 => "F4_1",
            AffineType::E6_2 => "E6_2",
            AffineType::E6_1 => "E6_1",
            AffineType::E7_1 => "E7_1",
            AffineType::E8_1 => "E8_1",
        }
    }

    /// Accepts `E6_2`, `e6_2` and `E6(2)`.
    pub fn from_tag(s: &str) -> Option<AffineType> {
        let mut norm = [0u8; 8];
        let mut len = 0;
        for c in s.trim().bytes() {
            let c = match c {
                b'(' => b'_',
                b')' => continue,
                c => c.to_ascii_uppercase(),
            };
            if len == norm.len() {
                return None;
            }
            norm[len] = c;
            len += 1;
        }
        AffineType::ALL
            .into_iter()
            .find(|t| t.tag().as_bytes() == &norm[..len])
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Whether `B(theta)` is built from all roots or from the short roots only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrystalRootKind {
    AllRoots,
    ShortRootsOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootLength {
    Short,
    Long,
}

/// A root written over the finite simple roots. Coefficients are all `>= 0`
/// (positive roots) or all `<= 0` (negative roots).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    rank: u8,
    coeffs: [i8; MAX_RANK],
}

impl Root {
    pub fn new(coeffs: &[i8]) -> Root {
        assert!(coeffs.len() <= MAX_RANK, "rank exceeds {MAX_RANK}");
        let mut c = [0i8; MAX_RANK];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Root {
            rank: coeffs.len() as u8,
            coeffs: c,
        }
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut r = Root::new(&[0; MAX_RANK][..rank]);
        r.coeffs[i] = 1;
        r
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs[..self.rank as usize]
    }

    pub fn height(&self) -> i32 {
        self.coeffs().iter().map(|&c| c as i32).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs().iter().all(|&c| c >= 0) && self.coeffs().iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        let mut r = *self;
        for c in &mut r.coeffs[..self.rank as usize] {
            *c = -*c;
        }
        r
    }

    pub fn add(&self, other: &Root) -> Root {
        debug_assert_eq!(self.rank, other.rank);
        let mut r = *self;
        for (a, b) in r.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += *b;
        }
        r
    }

    pub fn sub(&self, other: &Root) -> Root {
        self.add(&other.neg())
    }

    /// `ht_s` with `s` indexed by the finite nodes `1..=n` (`weights[0]` is
    /// the weight of `alpha_1`).
    pub fn weighted_height(&self, weights: &[u32]) -> i64 {
        self.coeffs()
            .iter()
            .zip(weights)
            .map(|(&c, &w)| c as i64 * w as i64)
            .sum()
    }

    /// Compact digit string, e.g. `"2342"` (absolute values).
    pub fn digits(&self) -> DigitString<'_> {
        DigitString(self)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.coeffs())
    }
}

pub struct DigitString<'a>(&'a Root);

impl fmt::Display for DigitString<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in self.0.coeffs() {
            write!(f, "{}", c.unsigned_abs())?;
        }
        Ok(())
    }
}

/// Static description of one affine type.
#[derive(Debug, Clone, Copy)]
pub struct TypeConfig {
    pub affine_type: AffineType,
    /// Finite Cartan matrix, `cartan[i][j] = <alpha_i^vee, alpha_j>` (0-based
    /// over the finite nodes).
    pub cartan: &'static [&'static [i8]],
    /// Diagonal `s_i` with `diag(s) * cartan` symmetric.
    pub symmetrizer: &'static [i8],
    /// Null root over `(alpha_0, alpha_1, ..., alpha_n)`.
    pub delta_coeffs: &'static [i8],
    pub ht_delta: i32,
    /// Langlands dual type.
    pub dual: AffineType,
    pub crystal_root_kind: CrystalRootKind,
    /// Long real roots of the twisted types repeat with period `twist * delta`.
    pub twist: u8,
    /// Multiplicity of `r * delta` when `twist` divides `r`.
    pub imaginary_mult: u32,
    /// Multiplicity of `r * delta` otherwise (twisted types only).
    pub imaginary_mult_twisted: u32,
}

impl TypeConfig {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Multiplicity of the imaginary root `r * delta`, `r >= 1`.
    pub fn imaginary_multiplicity(&self, r: u32) -> u32 {
        if r.is_multiple_of(self.twist as u32) {
            self.imaginary_mult
        } else {
            self.imaginary_mult_twisted
        }
    }
}

const G2_LONG_FIRST: &[&[i8]] = &[&[2, -1], &[-3, 2]];
const G2_SHORT_FIRST: &[&[i8]] = &[&[2, -3], &[-1, 2]];
const F4_LONG_FIRST: &[&[i8]] = &[
    &[2, -1, 0, 0],
    &[-1, 2, -1, 0],
    &[0, -2, 2, -1],
    &[0, 0, -1, 2],
];
const F4_SHORT_FIRST: &[&[i8]] = &[
    &[2, -1, 0, 0],
    &[-1, 2, -2, 0],
    &[0, -1, 2, -1],
    &[0, 0, -1, 2],
];
const E6: &[&[i8]] = &[
    &[2, 0, -1, 0, 0, 0],
    &[0, 2, 0, -1, 0, 0],
    &[-1, 0, 2, -1, 0, 0],
    &[0, -1, -1, 2, -1, 0],
    &[0, 0, 0, -1, 2, -1],
    &[0, 0, 0, 0, -1, 2],
];
const E7: &[&[i8]] = &[
    &[2, 0, -1, 0, 0, 0, 0],
    &[0, 2, 0, -1, 0, 0, 0],
    &[-1, 0, 2, -1, 0, 0, 0],
    &[0, -1, -1, 2, -1, 0, 0],
    &[0, 0, 0, -1, 2, -1, 0],
    &[0, 0, 0, 0, -1, 2, -1],
    &[0, 0, 0, 0, 0, -1, 2],
];
const E8: &[&[i8]] = &[
    &[2, 0, -1, 0, 0, 0, 0, 0],
    &[0, 2, 0, -1, 0, 0, 0, 0],
    &[-1, 0, 2, -1, 0, 0, 0, 0],
    &[0, -1, -1, 2, -1, 0, 0, 0],
    &[0, 0, 0, -1, 2, -1, 0, 0],
    &[0, 0, 0, 0, -1, 2, -1, 0],
    &[0, 0, 0, 0, 0, -1, 2, -1],
    &[0, 0, 0, 0, 0, 0, -1, 2],
];

/// Static configuration record for `t`.
pub fn affine_config(t: AffineType) -> TypeConfig {
    use AffineType::*;
    use CrystalRootKind::*;
    let base = |cartan, symmetrizer, delta_coeffs, ht_delta, dual| TypeConfig {
        affine_type: t,
        cartan,
        symmetrizer,
        delta_coeffs,
        ht_delta,
        dual,
        crystal_root_kind: AllRoots,
        twist: 1,
        imaginary_mult: 0,
        imaginary_mult_twisted: 0,
    };
    let mut c = match t {
        G2_1 => base(G2_LONG_FIRST, &[3, 1], &[1, 2, 3], 6, D4_3),
        D4_3 => TypeConfig {
            crystal_root_kind: ShortRootsOnly,
            twist: 3,
            imaginary_mult_twisted: 1,
            ..base(G2_SHORT_FIRST, &[1, 3], &[1, 2, 1], 4, G2_1)
        },
        F4_1 => base(F4_LONG_FIRST, &[2, 2, 1, 1], &[1, 2, 3, 4, 2], 12, E6_2),
        E6_2 => TypeConfig {
            crystal_root_kind: ShortRootsOnly,
            twist: 2,
            imaginary_mult_twisted: 2,
            ..base(F4_SHORT_FIRST, &[1, 1, 2, 2], &[1, 2, 3, 2, 1], 9, F4_1)
        },
        E6_1 => base(E6, &[1; 6], &[1, 1, 2, 2, 3, 2, 1], 12, E6_1),
        E7_1 => base(E7, &[1; 7], &[1, 2, 2, 3, 4, 3, 2, 1], 18, E7_1),
        E8_1 => base(E8, &[1; 8], &[1, 2, 3, 4, 6, 5, 4, 3, 2], 30, E8_1),
    };
    c.imaginary_mult = c.rank() as u32;
    if c.twist == 1 {
        c.imaginary_mult_twisted = c.imaginary_mult;
    }
    c
}

/// Symmetrised norm `(beta, beta)` with `(alpha_i, alpha_j) = s_i a_ij`.
pub fn root_norm(cartan: &[&[i8]], symmetrizer: &[i8], root: &Root) -> i64 {
    let c = root.coeffs();
    let mut norm = 0i64;
    for i in 0..c.len() {
        for j in 0..c.len() {
            norm += c[i] as i64 * c[j] as i64 * symmetrizer[i] as i64 * cartan[i][j] as i64;
        }
    }
    norm
}

/// Positive roots of the finite root system of `cartan`, generated by
/// closing the simple roots under simple reflections and keeping the
/// positive orbit. Returned in ascending (height, coefficients) order.
pub fn positive_roots_from_cartan(
    cartan: &[&[i8]],
    symmetrizer: &[i8],
) -> Result<Vec<(Root, RootLength)>> {
    const LIMIT: usize = 1024;
    let n = cartan.len();
    let mut seen: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut queue: Vec<Root> = seen.iter().copied().collect();
    while let Some(beta) = queue.pop() {
        for (i, row) in cartan.iter().enumerate() {
            let pairing: i32 = beta
                .coeffs()
                .iter()
                .zip(row.iter())
                .map(|(&c, &a)| c as i32 * a as i32)
                .sum();
            if pairing == 0 {
                continue;
            }
            let mut reflected = beta;
            let ci = reflected.coeffs[i] as i32 - pairing;
            if !(i8::MIN as i32..=i8::MAX as i32).contains(&ci) {
                return Err(Error::RootClosure(seen.len()));
            }
            reflected.coeffs[i] = ci as i8;
            if reflected.is_positive() && seen.insert(reflected) {
                if seen.len() > LIMIT {
                    return Err(Error::RootClosure(seen.len()));
                }
                queue.push(reflected);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.height(), *r));
    let max_norm = roots
        .iter()
        .map(|r| root_norm(cartan, symmetrizer, r))
        .max()
        .unwrap_or(0);
    Ok(roots
        .into_iter()
        .map(|r| {
            let len = if root_norm(cartan, symmetrizer, &r) == max_norm {
                RootLength::Long
            } else {
                RootLength::Short
            };
            (r, len)
        })
        .collect())
}

/// All positive roots of the finite part of `config`, with length classes.
pub fn finite_positive_roots(config: &TypeConfig) -> Vec<(Root, RootLength)> {
    positive_roots_from_cartan(config.cartan, config.symmetrizer)
        .expect("built-in Cartan data generates a finite root system")
}

/// The root data `(R+, Sigma, theta)` that `B(theta)` is built from.
#[derive(Debug, Clone)]
pub struct CrystalRootData {
    pub positive: Vec<Root>,
    /// 0-based finite node indices of the simple roots in `R+`.
    pub sigma: Vec<usize>,
    pub theta: Root,
}

pub fn crystal_root_data(config: &TypeConfig) -> CrystalRootData {
    let n = config.rank();
    let positive: Vec<Root> = finite_positive_roots(config)
        .into_iter()
        .filter(|(_, len)| {
            config.crystal_root_kind == CrystalRootKind::AllRoots || *len == RootLength::Short
        })
        .map(|(r, _)| r)
        .collect();
    let sigma = (0..n)
        .filter(|&i| positive.contains(&Root::simple(n, i)))
        .collect();
    let theta = *positive
        .iter()
        .max_by_key(|r| r.height())
        .expect("nonempty root system");
    debug_assert_eq!(
        positive
            .iter()
            .filter(|r| r.height() == theta.height())
            .count(),
        1
    );
    CrystalRootData {
        positive,
        sigma,
        theta,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineRootKind {
    Real,
    Imaginary,
}

/// One affine positive root after specialisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecializedRoot {
    pub height: u32,
    pub multiplicity: u32,
    pub kind: AffineRootKind,
}

/// Every affine positive root `alpha` of `config` with `ht_s(alpha) <=
/// cutoff`, as `(ht_s(alpha), mult(alpha))`.
///
/// `s` has one entry per affine node, `s[0]` weighting `alpha_0`. Real roots
/// are `alpha + r*delta` (`r >= 0`) and `-alpha + r*delta` (`r >= 1`) with
/// `delta` replaced by `twist * delta` for long roots of twisted types;
/// imaginary roots are `r*delta` with the type's multiplicities.
pub fn affine_positive_root_heights(
    config: &TypeConfig,
    s: &[u32],
    cutoff: u32,
) -> Result<Vec<SpecializedRoot>> {
    if s.len() != config.rank() + 1 || s.contains(&0) {
        return Err(Error::InvalidSpecialization {
            expected: config.rank() + 1,
            got: s.to_vec(),
        });
    }
    if cutoff < 1 {
        return Err(Error::InvalidCutoff(cutoff));
    }
    let cutoff = cutoff as i64;
    let ht_delta: i64 = config
        .delta_coeffs
        .iter()
        .zip(s)
        .map(|(&d, &w)| d as i64 * w as i64)
        .sum();
    let mut out = Vec::new();
    let push_progression = |start: i64, step: i64, out: &mut Vec<SpecializedRoot>| {
        let mut h = start;
        while h <= cutoff {
            out.push(SpecializedRoot {
                height: h as u32,
                multiplicity: 1,
                kind: AffineRootKind::Real,
            });
            h += step;
        }
    };
    for (alpha, len) in finite_positive_roots(config) {
        let period = match (config.twist, len) {
            (k, RootLength::Long) if k > 1 => k as i64 * ht_delta,
            _ => ht_delta,
        };
        let h = alpha.weighted_height(&s[1..]);
        push_progression(h, period, &mut out);
        push_progression(period - h, period, &mut out);
    }
    let mut r = 1u32;
    while r as i64 * ht_delta <= cutoff {
        out.push(SpecializedRoot {
            height: r * ht_delta as u32,
            multiplicity: config.imaginary_multiplicity(r),
            kind: AffineRootKind::Imaginary,
        });
        r += 1;
    }
    out.sort_by_key(|x| x.height);
    Ok(out)
}

/// All-ones specialisation vector for `config`.
pub fn principal(config: &TypeConfig) -> Vec<u32> {
    vec![1; config.rank() + 1]
}

/// The vector `(2, 1, ..., 1)` used for the level-one weight `Lambda_0`.
pub fn level_one(config: &TypeConfig) -> Vec<u32> {
    let mut s = principal(config);
    s[0] = 2;
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_examples() {
        let g2 = affine_config(AffineType::G2_1);
        assert_eq!(g2.ht_delta, 6);
        assert_eq!(g2.delta_coeffs, &[1, 2, 3]);
        let e8 = affine_config(AffineType::E8_1);
        assert_eq!(e8.ht_delta, 30);
        assert_eq!(e8.dual, AffineType::E8_1);
        let d4 = affine_config(AffineType::D4_3);
        assert_eq!(d4.crystal_root_kind, CrystalRootKind::ShortRootsOnly);
        assert_eq!(d4.dual, AffineType::G2_1);
    }

    #[test]
    fn ht_delta_table_and_theta() {
        let expect = [6, 4, 12, 9, 12, 18, 30];
        for (t, h) in AffineType::ALL.into_iter().zip(expect) {
            let c = affine_config(t);
            assert_eq!(c.ht_delta, h, "{t}");
            assert_eq!(c.delta_coeffs.iter().map(|&x| x as i32).sum::<i32>(), h);
            let data = crystal_root_data(&c);
            assert_eq!(data.theta.height() + 1, c.ht_delta, "{t}");
            // delta = alpha_0 + theta
            assert_eq!(&c.delta_coeffs[1..], data.theta.coeffs(), "{t}");
            assert_eq!(affine_config(c.dual).dual, t);
        }
    }

    #[test]
    fn symmetrizer_symmetrizes() {
        for t in AffineType::ALL {
            let c = affine_config(t);
            for i in 0..c.rank() {
                for j in 0..c.rank() {
                    assert_eq!(
                        c.symmetrizer[i] * c.cartan[i][j],
                        c.symmetrizer[j] * c.cartan[j][i],
                        "{t}"
                    );
                }
            }
        }
    }

    #[test]
    fn rank_one_fixture() {
        let roots = positive_roots_from_cartan(&[&[2]], &[1]).unwrap();
        assert_eq!(roots, vec![(Root::new(&[1]), RootLength::Long)]);
    }

    #[test]
    fn bad_cartan_does_not_stabilise() {
        // hyperbolic: infinitely many real roots
        let err = positive_roots_from_cartan(&[&[2, -3], &[-3, 2]], &[1, 1]).unwrap_err();
        assert!(matches!(err, Error::RootClosure(_)));
    }

    #[test]
    fn g2_lengths() {
        let roots = finite_positive_roots(&affine_config(AffineType::G2_1));
        let long: BTreeSet<_> = roots
            .iter()
            .filter(|r| r.1 == RootLength::Long)
            .map(|r| r.0)
            .collect();
        let expect: BTreeSet<_> = [[1, 0], [1, 3], [2, 3]]
            .iter()
            .map(|c| Root::new(c))
            .collect();
        assert_eq!(long, expect);
    }

    #[test]
    fn crystal_root_examples() {
        let d = crystal_root_data(&affine_config(AffineType::D4_3));
        let set: BTreeSet<_> = d.positive.iter().copied().collect();
        let expect: BTreeSet<_> = [[1, 0], [1, 1], [2, 1]]
            .iter()
            .map(|c| Root::new(c))
            .collect();
        assert_eq!(set, expect);
        assert_eq!(d.sigma, vec![0]);
        assert_eq!(d.theta, Root::new(&[2, 1]));

        let f = crystal_root_data(&affine_config(AffineType::F4_1));
        assert_eq!(f.positive.len(), 24);
        assert_eq!(f.theta, Root::new(&[2, 3, 4, 2]));

        let e = crystal_root_data(&affine_config(AffineType::E6_2));
        assert_eq!(e.positive.len(), 12);
        assert_eq!(e.theta, Root::new(&[2, 3, 2, 1]));
        assert_eq!(e.sigma, vec![0, 1]);
    }

    #[test]
    fn imaginary_multiplicities() {
        let g2 = affine_config(AffineType::G2_1);
        let hs = affine_positive_root_heights(&g2, &principal(&g2), 30).unwrap();
        let im: Vec<_> = hs
            .iter()
            .filter(|r| r.kind == AffineRootKind::Imaginary)
            .map(|r| (r.height, r.multiplicity))
            .collect();
        assert_eq!(im, vec![(6, 2), (12, 2), (18, 2), (24, 2), (30, 2)]);

        let d4 = affine_config(AffineType::D4_3);
        let hs = affine_positive_root_heights(&d4, &principal(&d4), 24).unwrap();
        let im: Vec<_> = hs
            .iter()
            .filter(|r| r.kind == AffineRootKind::Imaginary)
            .map(|r| (r.height / 4, r.multiplicity))
            .collect();
        assert_eq!(im, vec![(1, 1), (2, 1), (3, 2), (4, 1), (5, 1), (6, 2)]);
    }

    #[test]
    fn rejects_bad_arguments() {
        let g2 = affine_config(AffineType::G2_1);
        assert_eq!(
            affine_positive_root_heights(&g2, &principal(&g2), 0),
            Err(Error::InvalidCutoff(0))
        );
        assert!(matches!(
            affine_positive_root_heights(&g2, &[1, 1], 5),
            Err(Error::InvalidSpecialization { .. })
        ));
        assert!(matches!(
            affine_positive_root_heights(&g2, &[1, 0, 1], 5),
            Err(Error::InvalidSpecialization { .. })
        ));
    }

    #[test]
    fn parses_tags() {
        assert_eq!(AffineType::from_tag("E6(2)"), Some(AffineType::E6_2));
        assert_eq!(AffineType::from_tag("g2_1"), Some(AffineType::G2_1));
        assert_eq!(AffineType::from_tag("A1_1"), None);
        assert_eq!(AffineType::from_tag("E6_2_extra_long"), None);
    }
}
