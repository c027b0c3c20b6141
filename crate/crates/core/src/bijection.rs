//! Sum-preserving bijection between scaled Arndt compositions and
//! compositions into the parts of the matching residue system.
//!
//! Forward, each pair `(a, b)` with `b = q·s + r` becomes a run of ones
//! followed by one anchor part:
//!
//! ```text
//! (a, b)  ↦  (1^(a - q·t - ⌈(r·t+1)/s⌉), q·(s+t) + m_r)
//! ```
//!
//! and a trailing unpaired part `c` becomes `1^c`. Backward, the composition
//! is cut after every part ≥ 2; each block `(1^c, d)` maps back to a pair and
//! a trailing run of ones becomes a singleton.

use crate::composition::Composition;
use crate::constraint::{ceil_div, satisfies, ScaledConstraint};
use crate::error::{Error, Result};
use crate::residue::{residue_system, ResidueSystem};

/// One pair `(c[2i-1], c[2i])` of a scaled Arndt composition.
///
/// `b = 0` encodes an unpaired final part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArndtPair {
    pub a: u64,
    pub b: u64,
}

impl ArndtPair {
    pub fn new(a: u64, b: u64) -> Self {
        ArndtPair { a, b }
    }

    pub fn singleton(a: u64) -> Self {
        ArndtPair { a, b: 0 }
    }

    pub fn is_singleton(&self) -> bool {
        self.b == 0
    }

    /// `(q, r)` with `b = q·s + r`, `0 ≤ r < s`.
    pub fn split(&self, s: u64) -> (u64, u64) {
        (self.b / s, self.b % s)
    }

    pub fn sum(&self) -> u64 {
        self.a + self.b
    }

    fn push_onto(&self, out: &mut Vec<u64>) {
        out.push(self.a);
        if self.b > 0 {
            out.push(self.b);
        }
    }
}

/// A run of `ones` parts equal to 1, closed by an anchor part `≥ 2`, or
/// unclosed when it ends the composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OnesBlock {
    pub ones: u64,
    pub anchor: Option<u64>,
}

impl OnesBlock {
    pub fn anchored(ones: u64, anchor: u64) -> Self {
        OnesBlock {
            ones,
            anchor: Some(anchor),
        }
    }

    pub fn trailing(ones: u64) -> Self {
        OnesBlock { ones, anchor: None }
    }

    pub fn sum(&self) -> u64 {
        self.ones + self.anchor.unwrap_or(0)
    }

    fn push_onto(&self, out: &mut Vec<u64>) {
        out.extend(std::iter::repeat_n(1, self.ones as usize));
        out.extend(self.anchor);
    }
}

/// Maps a pair to its block. A singleton pair maps to a trailing block.
pub fn map_pair(pair: ArndtPair, cons: &ScaledConstraint) -> Result<OnesBlock> {
    cons.require_linear()?;
    if pair.a == 0 {
        return Err(Error::ZeroPart);
    }
    if pair.is_singleton() {
        return Ok(OnesBlock::trailing(pair.a));
    }
    if !cons.admits_pair(pair.a, pair.b) {
        return Err(violation(&[pair.a, pair.b], cons));
    }
    let (s, t) = (cons.s(), cons.t());
    let (q, r) = pair.split(s);
    let lift = ceil_div(r * t + 1, s);
    // s·a > t·b forces a ≥ q·t + ⌈(r·t+1)/s⌉
    let ones = pair.a - q * t - lift;
    Ok(OnesBlock::anchored(ones, q * (s + t) + r + lift))
}

/// Maps a block back to a pair (or to a singleton for a trailing block).
pub fn unmap_block(block: OnesBlock, cons: &ScaledConstraint) -> Result<ArndtPair> {
    let rs = residue_system(cons)?;
    unmap_with(block, cons, &rs)
}

fn unmap_with(block: OnesBlock, cons: &ScaledConstraint, rs: &ResidueSystem) -> Result<ArndtPair> {
    let Some(anchor) = block.anchor else {
        if block.ones == 0 {
            return Err(Error::ZeroPart);
        }
        return Ok(ArndtPair::singleton(block.ones));
    };
    if anchor < 2 {
        return Err(Error::PartOutsideResidueSystem {
            part: anchor,
            system: rs.to_string(),
        });
    }
    let (q, idx) = rs.decompose(anchor)?;
    let r = idx as u64;
    let (s, t) = (cons.s(), cons.t());
    Ok(ArndtPair::new(
        block.ones + q * t + ceil_div(r * t + 1, s),
        q * s + r,
    ))
}

/// Image of a scaled Arndt composition in the congruence-restricted set.
pub fn forward(c: &Composition, cons: &ScaledConstraint) -> Result<Composition> {
    cons.require_linear()?;
    if !satisfies(c.parts(), cons) {
        return Err(violation(c.parts(), cons));
    }
    let mut out = Vec::with_capacity(c.len());
    for pair in pairs(c.parts()) {
        map_pair(pair, cons)?.push_onto(&mut out);
    }
    Ok(Composition::from_parts_unchecked(out))
}

/// Preimage of a congruence-restricted composition.
pub fn backward(c: &Composition, cons: &ScaledConstraint) -> Result<Composition> {
    let rs = residue_system(cons)?;
    if let Some(&bad) = c.parts().iter().find(|&&p| !rs.contains(p)) {
        return Err(Error::PartOutsideResidueSystem {
            part: bad,
            system: rs.to_string(),
        });
    }
    let mut out = Vec::with_capacity(c.len());
    for block in blocks(c.parts()) {
        unmap_with(block, cons, &rs)?.push_onto(&mut out);
    }
    Ok(Composition::from_parts_unchecked(out))
}

/// Consecutive pairs, with an odd trailing part as a singleton.
pub fn pairs(parts: &[u64]) -> impl Iterator<Item = ArndtPair> + '_ {
    parts.chunks(2).map(|w| match *w {
        [a, b] => ArndtPair::new(a, b),
        [a] => ArndtPair::singleton(a),
        _ => unreachable!(),
    })
}

/// Maximal runs of ones, each closed by the following part `≥ 2`; a final
/// run with no closing part becomes a trailing block.
pub fn blocks(parts: &[u64]) -> Vec<OnesBlock> {
    let mut out = Vec::new();
    let mut ones = 0;
    for &p in parts {
        if p == 1 {
            ones += 1;
        } else {
            out.push(OnesBlock::anchored(ones, p));
            ones = 0;
        }
    }
    if ones > 0 {
        out.push(OnesBlock::trailing(ones));
    }
    out
}

fn violation(parts: &[u64], cons: &ScaledConstraint) -> Error {
    Error::ConstraintViolated {
        composition: Composition::from_parts_unchecked(parts.to_vec()).to_string(),
        constraint: cons.to_string(),
    }
}
