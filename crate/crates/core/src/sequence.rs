//! Exact counting sequences `a_{s,t}(n)`.
//!
//! Compositions into parts from the residue classes `m_r mod (s+t)` have the
//! ordinary generating function
//!
//! ```text
//!            1 - x^(s+t)
//! ---------------------------------
//! 1 - x^(s+t) - Σ_{r=0}^{s-1} x^m_r
//! ```
//!
//! The denominator gives the recurrence
//! `a(n) = Σ_r a(n - m_r) + a(n - s - t)` for `n > s + t`. The numerator's
//! `-x^(s+t)` term breaks that recurrence at `n = s + t`, so the first
//! `s + t + 1` terms are read off the series expansion instead.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::constraint::ScaledConstraint;
use crate::count::BigCount;
use crate::enumerate::count_brute;
use crate::error::{Error, Result};
use crate::residue::residue_system;

/// Numerator and denominator of the generating function, as dense integer
/// coefficient vectors indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    constraint: ScaledConstraint,
    numerator: Vec<i64>,
    denominator: Vec<i64>,
}

impl RationalGF {
    pub fn constraint(&self) -> &ScaledConstraint {
        &self.constraint
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i64] {
        &self.denominator
    }
}

pub fn build_gf(cons: &ScaledConstraint) -> Result<RationalGF> {
    let rs = residue_system(cons)?;
    let d = rs.modulus() as usize;

    let mut numerator = vec![0; d + 1];
    numerator[0] = 1;
    numerator[d] = -1;

    let mut denominator = numerator.clone();
    for &m in rs.residues() {
        denominator[m as usize] -= 1;
    }
    Ok(RationalGF {
        constraint: *cons,
        numerator,
        denominator,
    })
}

/// Coefficients `a(0..=N)` of a generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    constraint: ScaledConstraint,
    coefficients: Vec<BigCount>,
}

impl SeriesExpansion {
    pub fn constraint(&self) -> &ScaledConstraint {
        &self.constraint
    }

    pub fn coefficients(&self) -> &[BigCount] {
        &self.coefficients
    }

    pub fn get(&self, n: usize) -> Option<&BigCount> {
        self.coefficients.get(n)
    }

    pub fn into_coefficients(self) -> Vec<BigCount> {
        self.coefficients
    }
}

/// Power-series quotient `numerator / denominator` through degree `max_degree`.
///
/// Uses `c_n = num_n - Σ_{j≥1} den_j · c_{n-j}`, valid since `den_0 = 1`.
pub fn expand(gf: &RationalGF, max_degree: usize) -> SeriesExpansion {
    debug_assert_eq!(gf.denominator[0], 1);
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut c = BigInt::from(gf.numerator.get(n).copied().unwrap_or(0));
        for (j, &d) in gf.denominator.iter().enumerate().skip(1).take(n) {
            if d != 0 {
                c -= &coeffs[n - j] * d;
            }
        }
        coeffs.push(c);
    }
    let coefficients = coeffs
        .into_iter()
        .map(|c| {
            debug_assert!(!c.is_negative());
            BigCount::from(c.to_biguint().expect("composition counts are nonnegative"))
        })
        .collect();
    SeriesExpansion {
        constraint: gf.constraint,
        coefficients,
    }
}

/// Memo for the recurrence of a single constraint. Owned by the caller.
#[derive(Debug, Clone)]
pub struct RecurrenceCache {
    constraint: ScaledConstraint,
    residues: Vec<u64>,
    terms: Vec<BigCount>,
}

impl RecurrenceCache {
    /// Seeds the cache with `a(0..=s+t)` from the series expansion.
    pub fn new(cons: &ScaledConstraint) -> Result<Self> {
        let rs = residue_system(cons)?;
        let seeds = expand(&build_gf(cons)?, rs.modulus() as usize);
        Ok(RecurrenceCache {
            constraint: *cons,
            residues: rs.residues().to_vec(),
            terms: seeds.into_coefficients(),
        })
    }

    pub fn constraint(&self) -> &ScaledConstraint {
        &self.constraint
    }

    /// Number of memoized terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&mut self, n: u64) -> &BigCount {
        let n = n as usize;
        let modulus = self.constraint.modulus() as usize;
        while self.terms.len() <= n {
            let m = self.terms.len();
            let mut next = self.terms[m - modulus].clone();
            for &r in &self.residues {
                next += &self.terms[m - r as usize];
            }
            self.terms.push(next);
        }
        &self.terms[n]
    }

    /// Memoized terms `a(0..len)`.
    pub fn terms(&self) -> &[BigCount] {
        &self.terms
    }
}

/// `a_{s,t}(n)` via the recurrence, memoized in `cache`.
pub fn count_recurrence(cache: &mut RecurrenceCache, n: u64) -> BigCount {
    cache.get(n).clone()
}

/// `a_{s,t}(n)` via the recurrence, keeping only a sliding window of the
/// last `s + t` terms.
pub fn count_recurrence_uncached(cons: &ScaledConstraint, n: u64) -> Result<BigCount> {
    let rs = residue_system(cons)?;
    let modulus = rs.modulus() as usize;
    let seeds = expand(&build_gf(cons)?, modulus).into_coefficients();
    if (n as usize) < seeds.len() {
        return Ok(seeds[n as usize].clone());
    }
    // a(m - modulus), …, a(m - 1)
    let mut window: VecDeque<BigCount> = seeds.into_iter().skip(1).collect();
    for _ in modulus + 1..=n as usize {
        let mut next = window[0].clone();
        for &r in rs.residues() {
            next += &window[modulus - r as usize];
        }
        window.pop_front();
        window.push_back(next);
    }
    Ok(window.pop_back().expect("nonempty window"))
}

/// How [`sequence_range`] evaluates each term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    Series,
    Brute,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "recurrence" => Ok(Method::Recurrence),
            "series" => Ok(Method::Series),
            "brute" => Ok(Method::Brute),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// `a_{s,t}(n)` for `lo ≤ n ≤ hi`.
///
/// Only [`Method::Brute`] accepts an affine constraint.
pub fn sequence_range(
    cons: &ScaledConstraint,
    lo: u64,
    hi: u64,
    method: Method,
) -> Result<Vec<BigCount>> {
    if lo > hi {
        return Err(Error::InvertedRange { lo, hi });
    }
    match method {
        Method::Recurrence => {
            let mut cache = RecurrenceCache::new(cons)?;
            Ok((lo..=hi).map(|n| count_recurrence(&mut cache, n)).collect())
        }
        Method::Series => {
            let series = expand(&build_gf(cons)?, hi as usize);
            Ok(series.coefficients[lo as usize..].to_vec())
        }
        Method::Brute => (lo..=hi).map(|n| count_brute(n, cons)).collect(),
    }
}

/// OEIS b-file text: one `index value` line per term, indices counting up
/// from `offset`.
pub fn export_bfile(cons: &ScaledConstraint, lo: u64, hi: u64, offset: u64) -> Result<String> {
    let values = sequence_range(cons, lo, hi, Method::Recurrence)?;
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {}", offset + i as u64, v).expect("writing to a String");
    }
    Ok(out)
}

/// Convolution of an expansion with its generating function's denominator,
/// truncated to the expansion's length.
pub fn times_denominator(gf: &RationalGF, series: &SeriesExpansion) -> Vec<BigInt> {
    let coeffs = series.coefficients();
    (0..coeffs.len())
        .map(|n| {
            gf.denominator
                .iter()
                .enumerate()
                .take(n + 1)
                .filter(|(_, d)| **d != 0)
                .fold(BigInt::zero(), |acc, (j, &d)| {
                    acc + BigInt::from(coeffs[n - j].value().clone()) * d
                })
        })
        .collect()
}
