//! Exact coefficient expansion of the two counting series.
//!
//! `F(z)` counts multi-edge trees by total weight and satisfies
//! `z F^2 - (1 - z) F + (1 - z) = 0`. `M(z)` counts 3-coloured Motzkin paths
//! by length and satisfies `M = 1 + 3 z M + z^2 M^2`. The two are tied by
//! `F = 1 + z M`.
//!
//! Comparing coefficients of `z^N` in the quadratic for `F` gives, for `N >= 1`,
//!
//! ```text
//! f_N = f_{N-1} - [N = 1] + sum_{i=0}^{N-1} f_i f_{N-1-i}
//! ```
//!
//! and the residual functions below re-expand both equations from the
//! computed coefficients, so the recurrences are checked independently of any
//! printed values.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// Multi-edge trees by weight.
    F,
    /// 3-coloured Motzkin paths by length.
    M,
}

/// Truncated power series with nonnegative integer coefficients; index `i`
/// holds the coefficient of `z^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSeries {
    kind: SeriesKind,
    coeffs: Vec<BigUint>,
}

impl CoeffSeries {
    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    pub fn get(&self, power: usize) -> Option<&BigUint> {
        self.coeffs.get(power)
    }

    /// Highest power held.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn last(&self) -> &BigUint {
        self.coeffs
            .last()
            .expect("series holds at least one coefficient")
    }
}

impl fmt::Display for CoeffSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `sum_{i=0}^{n} a_i a_{n-i}`
fn self_convolution(a: &[BigUint], n: usize) -> BigUint {
    (0..=n).map(|i| &a[i] * &a[n - i]).sum()
}

/// `f_0 ..= f_up_to`.
pub fn f_coeffs(up_to: usize) -> CoeffSeries {
    let mut f: Vec<BigUint> = Vec::with_capacity(up_to + 1);
    f.push(BigUint::one());
    for n in 1..=up_to {
        let mut next = &f[n - 1] + self_convolution(&f, n - 1);
        if n == 1 {
            next -= 1u32;
        }
        f.push(next);
    }
    CoeffSeries {
        kind: SeriesKind::F,
        coeffs: f,
    }
}

/// `m_0 ..= m_up_to`, from `m_L = 3 m_{L-1} + sum_{i=0}^{L-2} m_i m_{L-2-i}`.
pub fn m_coeffs(up_to: usize) -> CoeffSeries {
    let mut m: Vec<BigUint> = Vec::with_capacity(up_to + 1);
    m.push(BigUint::one());
    for l in 1..=up_to {
        let mut next = &m[l - 1] * 3u32;
        if l >= 2 {
            next += self_convolution(&m, l - 2);
        }
        m.push(next);
    }
    CoeffSeries {
        kind: SeriesKind::M,
        coeffs: m,
    }
}

/// First index where `F = 1 + z M` fails.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("F = 1 + zM fails at z^{index}: f = {f}, expected {expected}")]
pub struct IdentityMismatch {
    pub index: usize,
    pub f: BigUint,
    pub expected: BigUint,
}

/// Checks `f_0 = 1` and `f_N = m_{N-1}` for `1 <= N <= up_to`.
pub fn check_identity(up_to: usize) -> Result<(), IdentityMismatch> {
    let f = f_coeffs(up_to);
    let m = m_coeffs(up_to.saturating_sub(1));
    compare_identity(&f, &m)
}

/// Identity check on precomputed series; `m` must reach order `f.order() - 1`.
pub fn compare_identity(f: &CoeffSeries, m: &CoeffSeries) -> Result<(), IdentityMismatch> {
    let one = BigUint::one();
    for (index, fc) in f.coeffs().iter().enumerate() {
        let expected = if index == 0 {
            &one
        } else {
            &m.coeffs()[index - 1]
        };
        if fc != expected {
            return Err(IdentityMismatch {
                index,
                f: fc.clone(),
                expected: expected.clone(),
            });
        }
    }
    Ok(())
}

fn signed(a: &[BigUint]) -> Vec<BigInt> {
    a.iter().map(|c| BigInt::from(c.clone())).collect()
}

/// Coefficients of `z F^2 - (1 - z) F + (1 - z)` through the order of `f`.
pub fn f_residual(f: &CoeffSeries) -> Vec<BigInt> {
    let c = signed(f.coeffs());
    (0..c.len())
        .map(|n| {
            let mut r = BigInt::zero();
            if n >= 1 {
                r += (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum::<BigInt>();
                r += &c[n - 1];
            }
            r -= &c[n];
            match n {
                0 => r += 1,
                1 => r -= 1,
                _ => {}
            }
            r
        })
        .collect()
}

/// Coefficients of `M - 1 - 3 z M - z^2 M^2` through the order of `m`.
pub fn m_residual(m: &CoeffSeries) -> Vec<BigInt> {
    let c = signed(m.coeffs());
    (0..c.len())
        .map(|n| {
            let mut r = c[n].clone();
            if n == 0 {
                r -= 1;
            }
            if n >= 1 {
                r -= &c[n - 1] * 3;
            }
            if n >= 2 {
                r -= (0..=n - 2).map(|i| &c[i] * &c[n - 2 - i]).sum::<BigInt>();
            }
            r
        })
        .collect()
}
