//! The scaled Arndt inequality `s·c[2i-1] > t·c[2i] + k` and its parameters.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Reduced inequality parameters: coprime `s, t ≥ 1` and an affine offset `k`.
///
/// `k = 0` is the scaled Arndt condition proper. Any other offset is only
/// usable by the exhaustive enumeration path; every residue-system based
/// operation rejects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledConstraint {
    s: u64,
    t: u64,
    k: i64,
}

/// Reduce `(s, t, k)` by `gcd(s, t)`.
///
/// Scaling `s` and `t` by a common factor does not change the admitted set
/// when `k = 0`, so the pair is divided down. With `k ≠ 0` no such identity
/// holds, and a non-coprime pair is refused.
pub fn normalize(s: u64, t: u64, k: i64) -> Result<ScaledConstraint> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidParameters { s, t });
    }
    let g = s.gcd(&t);
    if g > 1 && k != 0 {
        return Err(Error::NonNormalizableAffine { s, t, k });
    }
    Ok(ScaledConstraint {
        s: s / g,
        t: t / g,
        k,
    })
}

impl ScaledConstraint {
    /// Same as [`normalize`].
    pub fn new(s: u64, t: u64, k: i64) -> Result<Self> {
        normalize(s, t, k)
    }

    /// Shorthand for `normalize(s, t, 0)`.
    pub fn scaled(s: u64, t: u64) -> Result<Self> {
        normalize(s, t, 0)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// `s + t`, the modulus of the associated residue system.
    pub fn modulus(&self) -> u64 {
        self.s + self.t
    }

    pub fn is_affine(&self) -> bool {
        self.k != 0
    }

    /// Fails with [`Error::AffineUnsupported`] unless `k = 0`.
    pub fn require_linear(&self) -> Result<()> {
        if self.k != 0 {
            return Err(Error::AffineUnsupported { k: self.k });
        }
        Ok(())
    }

    /// Whether the pair `(a, b)` satisfies `s·a > t·b + k`.
    #[inline]
    pub fn admits_pair(&self, a: u64, b: u64) -> bool {
        // u64·u64 plus |k| ≤ 2^63 stays below 2^128
        let lhs = self.s as u128 * a as u128;
        let rhs = self.t as u128 * b as u128;
        let offset = self.k.unsigned_abs() as u128;
        if self.k >= 0 {
            lhs > rhs + offset
        } else {
            lhs + offset > rhs
        }
    }
}

impl fmt::Display for ScaledConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}·c[2i-1] > {}·c[2i]", self.s, self.t)
        } else {
            write!(f, "{}·c[2i-1] > {}·c[2i] + {}", self.s, self.t, self.k)
        }
    }
}

/// Whether every consecutive pair `(parts[2i], parts[2i+1])` is admitted.
///
/// A trailing unpaired part imposes no condition, and the empty composition
/// satisfies every constraint.
pub fn satisfies(parts: &[u64], cons: &ScaledConstraint) -> bool {
    parts
        .chunks_exact(2)
        .all(|pair| cons.admits_pair(pair[0], pair[1]))
}

/// `⌈a / b⌉` for `b > 0`.
#[inline]
pub(crate) fn ceil_div(a: u64, b: u64) -> u64 {
    debug_assert!(b > 0);
    a.div_ceil(b)
}
