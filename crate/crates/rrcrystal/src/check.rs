//! End-to-end comparison of the product side `c(p)` with the partition
//! count `d(p)` and the published coefficients.

use rrcrystal_core::{product_side_series, AffineType, SumSideModel};
use serde::Serialize;

use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// First degree `p >= 1` at which the series disagree.
    Fail {
        first_mismatch: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    #[serde(rename = "type")]
    pub affine_type: String,
    pub p_max: usize,
    /// `c(0), ..., c(p_max)`.
    pub c: Vec<u64>,
    /// `d(0), ..., d(p_max)`.
    pub d: Vec<u64>,
    /// Published `c(0), ..., c(p_max)` when `p_max <= 60`.
    pub reference: Option<Vec<u64>>,
    pub verdict: Verdict,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn run_check(t: AffineType, p_max: usize) -> rrcrystal_core::Result<CheckReport> {
    let c = product_side_series(t, p_max)?
        .coeffs()
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| rrcrystal_core::Error::Overflow))
        .collect::<rrcrystal_core::Result<Vec<_>>>()?;
    let d = SumSideModel::new(t)?.count_d_series(p_max)?;
    let reference = (p_max <= 60).then(|| {
        let mut r = vec![1];
        r.extend_from_slice(&reference::coefficients(t)[..p_max]);
        r
    });
    let first_mismatch =
        (1..=p_max).find(|&p| c[p] != d[p] || reference.as_ref().is_some_and(|r| r[p] != c[p]));
    let verdict = match first_mismatch {
        None if c[0] == d[0] => Verdict::Pass,
        None => Verdict::Fail { first_mismatch: 0 },
        Some(p) => Verdict::Fail { first_mismatch: p },
    };
    Ok(CheckReport {
        affine_type: t.tag().to_string(),
        p_max,
        c,
        d,
        reference,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_check_passes() {
        let r = run_check(AffineType::G2_1, 1).unwrap();
        assert!(r.passed());
        assert_eq!((r.c[1], r.d[1]), (1, 1));
    }

    #[test]
    fn reference_only_up_to_sixty() {
        let r = run_check(AffineType::E8_1, 61).unwrap();
        assert!(r.reference.is_none());
        assert!(r.passed());
    }
}
