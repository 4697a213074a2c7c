//! Brute-force enumeration of consistent mappings for small polyominoes.
//!
//! Every square tries all 48 placements directly, in row-major order from
//! the top row, and a partial assignment is pruned as soon as two assigned
//! squares disagree on a shared corner across a present edge. The seed square
//! (leftmost of the top row) is pinned to the bottom placement, as in the
//! BFS search, so both produce the same witness sets. Nothing here uses the
//! two-option extension rule.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cube::{all_placements, Direction, Placement, ALL_FACES};
use crate::polyomino::{GridPoint, Polyomino};
use crate::search::{Mapping, SearchResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_squares: usize,
    pub max_witnesses: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_squares: 8, max_witnesses: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{squares} squares exceed the oracle limit of {limit}")]
    TooLarge { squares: usize, limit: usize },
}

/// Row-major order from the top row, left to right.
pub fn row_major(p: &Polyomino) -> Vec<GridPoint> {
    let mut v: Vec<GridPoint> = p.squares().iter().copied().collect();
    v.sort_by_key(|s| (-s.y, s.x));
    v
}

pub fn brute_force(p: &Polyomino, limits: &OracleLimits) -> Result<SearchResult, OracleError> {
    brute_force_in_order(p, &row_major(p), limits)
}

/// Same enumeration over a caller-chosen square order (a permutation of the
/// squares). The seed square stays pinned wherever it appears.
pub fn brute_force_in_order(
    p: &Polyomino,
    order: &[GridPoint],
    limits: &OracleLimits,
) -> Result<SearchResult, OracleError> {
    if p.len() > limits.max_squares {
        return Err(OracleError::TooLarge { squares: p.len(), limit: limits.max_squares });
    }
    let seed = row_major(p)[0];
    let pos: BTreeMap<GridPoint, usize> = order.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    // Constraints against earlier squares: (earlier position, direction from
    // the current square to it).
    let constraints: Vec<Vec<(usize, Direction)>> = order
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            p.neighbors(s)
                .filter_map(|(d, nb)| {
                    let j = pos[&nb];
                    (j < k).then_some((j, d))
                })
                .collect()
        })
        .collect();
    let alphabet = all_placements();
    let mut run = Run {
        order,
        seed,
        constraints: &constraints,
        alphabet: &alphabet,
        current: Vec::with_capacity(order.len()),
        found: Vec::new(),
        nodes: 0,
    };
    run.descend();

    let consistent_count = run.found.len() as u64;
    let mut witnesses: Vec<Mapping> = run
        .found
        .iter()
        .filter(|f| f.iter().fold(0u8, |m, p| m | p.face().bit()) == ALL_FACES)
        .map(|f| Mapping::new(order.iter().copied().zip(f.iter().copied())))
        .collect();
    let covering_count = witnesses.len() as u64;
    witnesses.sort();
    witnesses.truncate(limits.max_witnesses);
    Ok(SearchResult {
        consistent_exists: consistent_count > 0,
        covering_exists: covering_count > 0,
        witnesses,
        consistent_count,
        covering_count,
        states_explored: run.nodes,
        truncated: false,
    })
}

struct Run<'a> {
    order: &'a [GridPoint],
    seed: GridPoint,
    constraints: &'a [Vec<(usize, Direction)>],
    alphabet: &'a [Placement],
    current: Vec<Placement>,
    found: Vec<Vec<Placement>>,
    nodes: u64,
}

impl Run<'_> {
    fn descend(&mut self) {
        self.nodes += 1;
        let k = self.current.len();
        if k == self.order.len() {
            self.found.push(self.current.clone());
            return;
        }
        let square = self.order[k];
        for &cand in self.alphabet {
            if square == self.seed && cand != Placement::BOTTOM {
                continue;
            }
            let ok = self.constraints[k].iter().all(|&(j, d)| shares_edge(&cand, &self.current[j], d));
            if ok {
                self.current.push(cand);
                self.descend();
                self.current.pop();
            }
        }
    }
}

/// True iff `mine` and `theirs` (the neighbor in direction `d`) map the two
/// grid points of their common edge to the same cube corners.
fn shares_edge(mine: &Placement, theirs: &Placement, d: Direction) -> bool {
    // Corner indices SW=0, SE=1, NE=2, NW=3; pairs (mine, theirs).
    let pairs: [(usize, usize); 2] = match d {
        Direction::N => [(3, 0), (2, 1)],
        Direction::E => [(1, 0), (2, 3)],
        Direction::S => [(0, 3), (1, 2)],
        Direction::W => [(0, 1), (3, 2)],
    };
    pairs.iter().all(|&(a, b)| mine.corners[a] == theirs.corners[b])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    #[test]
    fn single_square() {
        let p = Polyomino::rectangle(1, 1).unwrap();
        let r = brute_force(&p, &OracleLimits::default()).unwrap();
        assert!(r.consistent_exists);
        assert!(!r.covering_exists);
        assert_eq!(r.consistent_count, 1);
    }

    #[test]
    fn domino_has_two() {
        let r = brute_force(&Polyomino::rectangle(2, 1).unwrap(), &OracleLimits::default()).unwrap();
        assert_eq!(r.consistent_count, 2);
        let r = brute_force(&Polyomino::rectangle(1, 2).unwrap(), &OracleLimits::default()).unwrap();
        assert_eq!(r.consistent_count, 2);
    }

    #[test]
    fn strip_of_six_never_covers() {
        let r = brute_force(&Polyomino::rectangle(6, 1).unwrap(), &OracleLimits::default()).unwrap();
        assert!(r.consistent_exists);
        assert!(!r.covering_exists);
        assert_eq!(r.consistent_count, 32);
    }

    #[test]
    fn too_large() {
        let p = Polyomino::rectangle(3, 3).unwrap();
        assert_eq!(brute_force(&p, &OracleLimits::default()), Err(OracleError::TooLarge { squares: 9, limit: 8 }));
    }

    #[test]
    fn order_does_not_matter() {
        let p = Polyomino::new([gp(1, 0), gp(1, 1), gp(1, 2), gp(1, 3), gp(0, 2), gp(2, 2)], []).unwrap();
        let base = brute_force(&p, &OracleLimits::default()).unwrap();
        let mut rev = row_major(&p);
        rev.reverse();
        let other = brute_force_in_order(&p, &rev, &OracleLimits::default()).unwrap();
        assert_eq!(base.witnesses, other.witnesses);
        assert_eq!(base.consistent_count, other.consistent_count);
        assert!(base.covering_exists);
    }
}
