use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered sequence of positive parts.
///
/// The empty composition is the unique composition of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    /// Caller guarantees every part is positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }
}

impl AsRef<[u64]> for Composition {
    fn as_ref(&self) -> &[u64] {
        &self.parts
    }
}

impl TryFrom<Vec<u64>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// Comma-separated parts, e.g. `4,1,1`. The empty composition renders as "".
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Strict parser: ASCII digits separated by single commas, no whitespace,
/// no signs, no zero parts. The empty string is the empty composition.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let malformed = || Error::MalformedComposition {
            input: s.to_string(),
        };
        let parts = s
            .split(',')
            .map(|field| {
                if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed());
                }
                match field.parse::<u64>() {
                    Ok(0) => Err(Error::ZeroPart),
                    Ok(v) => Ok(v),
                    Err(_) => Err(malformed()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition { parts })
    }
}
