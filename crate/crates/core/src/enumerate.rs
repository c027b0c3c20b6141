//! Exhaustive, lexicographically ordered composition streams.
//!
//! Streams extend a prefix one part at a time and reject a candidate part as
//! soon as the prefix can no longer satisfy the filter, so filtered streams
//! never visit the full `2^(n-1)` space. Memory use is `O(n)` per stream.
//!
//! Brute-force counting is the reference against which the bijection and the
//! recurrence are checked.

use crate::composition::Composition;
use crate::constraint::ScaledConstraint;
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::residue::ResidueSystem;

/// Largest `n` accepted by [`count_brute`].
///
/// An unfiltered count at this size visits `2^25 ≈ 3.4·10^7` compositions,
/// under a second in a release build.
pub const BRUTE_FORCE_MAX_N: u64 = 26;

/// Which compositions a stream admits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    /// Every composition.
    All,
    /// Compositions satisfying `s·c[2i-1] > t·c[2i] + k` for every pair.
    Arndt(ScaledConstraint),
    /// Compositions whose parts all lie in the residue system.
    Congruence(ResidueSystem),
}

impl From<ScaledConstraint> for Filter {
    fn from(c: ScaledConstraint) -> Self {
        Filter::Arndt(c)
    }
}

impl From<&ScaledConstraint> for Filter {
    fn from(c: &ScaledConstraint) -> Self {
        Filter::Arndt(*c)
    }
}

impl From<ResidueSystem> for Filter {
    fn from(rs: ResidueSystem) -> Self {
        Filter::Congruence(rs)
    }
}

impl From<&ResidueSystem> for Filter {
    fn from(rs: &ResidueSystem) -> Self {
        Filter::Congruence(rs.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Single-consumer iterator over the compositions of `n` admitted by a
/// [`Filter`], in lexicographic order of part lists.
///
/// Use [`advance`](Self::advance) and [`current`](Self::current) to walk the
/// stream without allocating per item; the `Iterator` impl clones each one.
#[derive(Debug, Clone)]
pub struct CompositionStream {
    n: u64,
    filter: Filter,
    parts: Vec<u64>,
    remaining: u64,
    state: State,
}

impl CompositionStream {
    pub fn new(n: u64, filter: impl Into<Filter>) -> Self {
        CompositionStream {
            n,
            filter: filter.into(),
            parts: Vec::new(),
            remaining: n,
            state: State::Fresh,
        }
    }

    pub fn target(&self) -> u64 {
        self.n
    }

    pub fn filter(&self) -> &Filter {
        &self.filter
    }

    /// Parts of the composition produced by the last successful `advance`.
    pub fn current(&self) -> &[u64] {
        &self.parts
    }

    /// Moves to the next admitted composition. Returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => return false,
            State::Fresh => {
                self.state = State::Running;
                if self.descend() {
                    return true;
                }
            }
            State::Running => {}
        }
        // Backtrack: bump the deepest part that still has an admissible
        // successor value, then refill with the smallest admissible parts.
        while let Some(last) = self.parts.pop() {
            self.remaining += last;
            if let Some(next) = self.smallest_admissible(last + 1) {
                self.push(next);
                if self.descend() {
                    return true;
                }
            }
        }
        self.state = State::Done;
        false
    }

    /// Counts the remaining compositions without materializing them.
    pub fn count_remaining(&mut self) -> BigCount {
        let mut total: u64 = 0;
        while self.advance() {
            total += 1;
        }
        BigCount::from(total)
    }

    fn push(&mut self, part: u64) {
        self.parts.push(part);
        self.remaining -= part;
    }

    fn descend(&mut self) -> bool {
        while self.remaining > 0 {
            match self.smallest_admissible(1) {
                Some(part) => self.push(part),
                None => return false,
            }
        }
        true
    }

    /// Smallest part `p ≥ from`, `p ≤ remaining`, that may extend the prefix.
    fn smallest_admissible(&self, from: u64) -> Option<u64> {
        if from > self.remaining {
            return None;
        }
        match &self.filter {
            Filter::All => Some(from),
            Filter::Arndt(cons) => {
                if self.parts.len().is_multiple_of(2) {
                    // opens a new pair; constrained only by its partner
                    Some(from)
                } else {
                    // admissibility is monotone decreasing in the second part
                    let first = *self.parts.last().expect("odd length prefix");
                    cons.admits_pair(first, from).then_some(from)
                }
            }
            Filter::Congruence(rs) => (from..=self.remaining).find(|&p| rs.contains(p)),
        }
    }
}

impl Iterator for CompositionStream {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.advance()
            .then(|| Composition::from_parts_unchecked(self.parts.clone()))
    }
}

impl std::iter::FusedIterator for CompositionStream {}

/// Every composition of `n`; `n = 0` yields only the empty composition.
pub fn all_compositions(n: u64) -> CompositionStream {
    CompositionStream::new(n, Filter::All)
}

/// Compositions of `n` satisfying the (possibly affine) scaled Arndt condition.
pub fn arndt_compositions(n: u64, cons: &ScaledConstraint) -> CompositionStream {
    CompositionStream::new(n, cons)
}

/// Compositions of `n` with every part in the residue system.
pub fn congruence_compositions(n: u64, rs: &ResidueSystem) -> CompositionStream {
    CompositionStream::new(n, rs)
}

/// Exhaustive count of the compositions of `n` admitted by `filter`.
///
/// Refuses `n > BRUTE_FORCE_MAX_N`.
pub fn count_brute(n: u64, filter: impl Into<Filter>) -> Result<BigCount> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::BruteForceCeiling {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    Ok(CompositionStream::new(n, filter).count_remaining())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraint::{normalize, satisfies};
    use crate::residue::residue_system;

    fn lists(stream: CompositionStream) -> Vec<Vec<u64>> {
        stream.map(Composition::into_parts).collect()
    }

    /// Independent generator: every composition of n from the n-1 bit cut mask.
    fn by_bitmask(n: u64) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for mask in 0u64..(1 << (n - 1)) {
            let mut parts = vec![];
            let mut run = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            out.push(parts);
        }
        out.sort();
        out
    }

    #[test]
    fn all_compositions_small() {
        assert_eq!(lists(all_compositions(0)), vec![Vec::<u64>::new()]);
        assert_eq!(
            lists(all_compositions(3)),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
        assert_eq!(all_compositions(10).count(), 512);
    }

    #[test]
    fn all_compositions_match_bitmask_generator() {
        for n in 0..=12 {
            assert_eq!(lists(all_compositions(n)), by_bitmask(n), "n={n}");
        }
        for n in 1..=16u64 {
            assert_eq!(all_compositions(n).count_remaining(), BigCount::pow2(n - 1));
        }
    }

    #[test]
    fn arndt_examples() {
        let c23 = normalize(2, 3, 0).unwrap();
        let mut expected = vec![
            vec![6],
            vec![5, 1],
            vec![4, 2],
            vec![4, 1, 1],
            vec![3, 1, 2],
            vec![2, 1, 3],
            vec![2, 1, 2, 1],
        ];
        expected.sort();
        assert_eq!(lists(arndt_compositions(6, &c23)), expected);

        let c11 = normalize(1, 1, 0).unwrap();
        expected.push(vec![3, 2, 1]);
        expected.sort();
        assert_eq!(lists(arndt_compositions(6, &c11)), expected);
        assert_eq!(
            lists(arndt_compositions(3, &c11)),
            vec![vec![2, 1], vec![3]]
        );
    }

    #[test]
    fn affine_example_against_exhaustive_filter() {
        let c = normalize(1, 1, 1).unwrap();
        let oracle: Vec<Vec<u64>> = by_bitmask(4)
            .into_iter()
            .filter(|p| p.chunks_exact(2).all(|w| w[0] > w[1] + 1))
            .collect();
        // (3,1) and (4) survive: 3 > 1 + 1
        assert_eq!(oracle, vec![vec![3, 1], vec![4]]);
        assert_eq!(lists(arndt_compositions(4, &c)), oracle);
    }

    #[test]
    fn negative_offset_is_more_permissive() {
        let loose = normalize(1, 1, -1).unwrap();
        let strict = normalize(1, 1, 0).unwrap();
        for n in 1..=10 {
            let loose_set = lists(arndt_compositions(n, &loose));
            for c in arndt_compositions(n, &strict) {
                assert!(loose_set.contains(&c.into_parts()));
            }
            // 1·a > 1·b - 1 is a ≥ b
            let oracle: Vec<_> = by_bitmask(n)
                .into_iter()
                .filter(|p| p.chunks_exact(2).all(|w| w[0] >= w[1]))
                .collect();
            assert_eq!(loose_set, oracle);
        }
    }

    #[test]
    fn congruence_examples() {
        let rs = residue_system(&normalize(2, 3, 0).unwrap()).unwrap();
        let mut expected = vec![
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 3],
            vec![6],
            vec![1, 1, 3, 1],
            vec![1, 3, 1, 1],
            vec![3, 1, 1, 1],
            vec![3, 3],
        ];
        expected.sort();
        assert_eq!(lists(congruence_compositions(6, &rs)), expected);

        let rs11 = residue_system(&normalize(1, 1, 0).unwrap()).unwrap();
        assert_eq!(lists(congruence_compositions(2, &rs11)), vec![vec![1, 1]]);

        let rs32 = residue_system(&normalize(3, 2, 0).unwrap()).unwrap();
        let oracle: Vec<_> = by_bitmask(7)
            .into_iter()
            .filter(|p| p.iter().all(|x| [1, 2, 4].contains(&(x % 5))))
            .collect();
        assert_eq!(lists(congruence_compositions(7, &rs32)), oracle);
        assert_eq!(oracle.len(), 34);
    }

    #[test]
    fn count_brute_examples() {
        let c23 = normalize(2, 3, 0).unwrap();
        assert_eq!(count_brute(6, c23).unwrap(), 7u64);
        assert_eq!(count_brute(0, c23).unwrap(), 1u64);
        assert_eq!(count_brute(0, Filter::All).unwrap(), 1u64);
        assert_eq!(count_brute(9, normalize(5, 3, 0).unwrap()).unwrap(), 124u64);
    }

    #[test]
    fn count_brute_ceiling() {
        let c = normalize(1, 1, 0).unwrap();
        assert_eq!(
            count_brute(BRUTE_FORCE_MAX_N + 1, c),
            Err(Error::BruteForceCeiling {
                n: BRUTE_FORCE_MAX_N + 1,
                max: BRUTE_FORCE_MAX_N
            })
        );
        // F_22
        assert_eq!(count_brute(22, c).unwrap(), 17711u64);
    }

    #[test]
    fn filtered_streams_are_exact_subsets() {
        for (s, t, k) in [
            (1, 1, 0),
            (2, 3, 0),
            (3, 2, 0),
            (1, 4, 2),
            (3, 1, -2),
            (2, 5, 7),
        ] {
            let cons = normalize(s, t, k).unwrap();
            for n in 0..=11 {
                let expected: Vec<_> = by_bitmask(n)
                    .into_iter()
                    .filter(|p| satisfies(p, &cons))
                    .collect();
                assert_eq!(
                    lists(arndt_compositions(n, &cons)),
                    expected,
                    "{cons} n={n}"
                );
            }
        }
    }

    #[test]
    fn stream_is_fused() {
        let mut s = all_compositions(2);
        assert_eq!(s.by_ref().count(), 2);
        assert!(s.next().is_none());
        assert!(!s.advance());
    }
}
