use std::fmt;

use crate::constraint::{ceil_div, ScaledConstraint};
use crate::error::{Error, Result};

/// Allowed residues `m_r = r + ⌈(r·t + 1)/s⌉` for `r = 0..s`, modulo `s + t`.
///
/// Compositions into parts from these classes are equinumerous with the
/// scaled Arndt compositions for the same `(s, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSystem {
    s: u64,
    t: u64,
    residues: Vec<u64>,
}

/// Residue system of a linear (`k = 0`) constraint.
pub fn residue_system(cons: &ScaledConstraint) -> Result<ResidueSystem> {
    cons.require_linear()?;
    let (s, t) = (cons.s(), cons.t());
    let residues = (0..s).map(|r| residue_for(s, t, r)).collect();
    Ok(ResidueSystem { s, t, residues })
}

/// `m_r` for a single index.
pub(crate) fn residue_for(s: u64, t: u64, r: u64) -> u64 {
    r + ceil_div(r * t + 1, s)
}

impl ResidueSystem {
    pub fn modulus(&self) -> u64 {
        self.s + self.t
    }

    /// `[m_0, …, m_{s-1}]`, strictly increasing, starting at 1.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn contains(&self, part: u64) -> bool {
        part >= 1
            && self
                .residues
                .binary_search(&(part % self.modulus()))
                .is_ok()
    }

    /// The unique `(q, r)` with `part = q·(s+t) + m_r`.
    pub fn decompose(&self, part: u64) -> Result<(u64, usize)> {
        let modulus = self.modulus();
        match self.residues.binary_search(&(part % modulus)) {
            Ok(r) if part >= 1 => Ok((part / modulus, r)),
            _ => Err(Error::PartOutsideResidueSystem {
                part,
                system: self.to_string(),
            }),
        }
    }
}

/// Renders as `1,2,4 (mod 5)`.
impl fmt::Display for ResidueSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.residues.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, " (mod {})", self.modulus())
    }
}

pub fn residue_class_contains(rs: &ResidueSystem, part: u64) -> bool {
    rs.contains(part)
}

pub fn decompose_part(rs: &ResidueSystem, part: u64) -> Result<(u64, usize)> {
    rs.decompose(part)
}
