//! Exact integer power series truncated at `q^N`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// `c_0 + c_1 q + ... + c_N q^N (mod q^{N+1})`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i128>,
}

impl TruncatedSeries {
    pub fn one(degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[0] = 1;
        TruncatedSeries { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; degree + 1],
        }
    }

    /// Pads or truncates `coeffs` to `degree + 1` terms.
    pub fn from_coeffs(degree: usize, coeffs: &[i128]) -> Self {
        let mut c = vec![0; degree + 1];
        for (slot, &x) in c.iter_mut().zip(coeffs) {
            *slot = x;
        }
        TruncatedSeries { coeffs: c }
    }

    /// Truncation degree `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn truncate(&self, degree: usize) -> Self {
        TruncatedSeries::from_coeffs(degree, &self.coeffs)
    }

    /// Multiplies in place by `(1 - q^m)^e`.
    pub fn mul_one_minus_power(&mut self, m: usize, e: i64) -> Result<()> {
        let n = self.degree();
        if m == 0 {
            return if e > 0 {
                self.coeffs.iter_mut().for_each(|c| *c = 0);
                Ok(())
            } else if e == 0 {
                Ok(())
            } else {
                Err(Error::NonUnit(0))
            };
        }
        if m > n {
            return Ok(());
        }
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for j in (m..=n).rev() {
                    self.coeffs[j] = self.coeffs[j]
                        .checked_sub(self.coeffs[j - m])
                        .ok_or(Error::Overflow)?;
                }
            } else {
                for j in m..=n {
                    self.coeffs[j] = self.coeffs[j]
                        .checked_add(self.coeffs[j - m])
                        .ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.degree().min(other.degree());
        let mut out = vec![0i128; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.degree().min(other.degree());
        let coeffs = (0..=n)
            .map(|k| {
                self.coeffs[k]
                    .checked_add(other.coeffs[k])
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnit(c0));
        }
        let n = self.degree();
        let mut inv = vec![0i128; n + 1];
        inv[0] = c0;
        for k in 1..=n {
            let mut acc: i128 = 0;
            for j in 1..=k {
                let term = self.coeffs[j]
                    .checked_mul(inv[k - j])
                    .ok_or(Error::Overflow)?;
                acc = acc.checked_add(term).ok_or(Error::Overflow)?;
            }
            // c0 * inv_k = -acc, and c0 = 1/c0
            inv[k] = acc.checked_neg().ok_or(Error::Overflow)? * c0;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.mul(&divisor.inverse()?)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(q^{})", self.coeffs, self.degree() + 1)
    }
}
