//! Search for consistent grid-point mappings onto the cube.
//!
//! Squares are numbered by a breadth-first search over the dual graph
//! starting from the leftmost square of the top row. The first square is
//! placed on the bottom face; each later square branches over the two
//! placements its BFS parent allows (quarter fold first, then flat fold) and
//! keeps only branches that agree with every already-placed neighbor across
//! a present edge. All partial mappings of a level are kept and
//! deduplicated.
//!
//! A polyomino with no total consistent mapping covering all six faces
//! cannot fold into the cube.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::cube::{Direction, FaceId, Placement, PlacementTable, ALL_FACES};
use crate::polyomino::{GridPoint, Polyomino};

/// Per-square placements, sorted by square.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mapping {
    entries: Vec<(GridPoint, Placement)>,
}

impl Mapping {
    pub fn new(entries: impl IntoIterator<Item = (GridPoint, Placement)>) -> Self {
        let mut entries: Vec<_> = entries.into_iter().collect();
        entries.sort();
        entries.dedup_by_key(|e| e.0);
        Mapping { entries }
    }

    pub fn entries(&self) -> &[(GridPoint, Placement)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, square: GridPoint) -> Option<&Placement> {
        self.entries.binary_search_by_key(&square, |e| e.0).ok().map(|i| &self.entries[i].1)
    }

    pub fn face(&self, square: GridPoint) -> Option<FaceId> {
        self.get(square).map(Placement::face)
    }

    /// Bitmask of covered faces.
    pub fn face_mask(&self) -> u8 {
        self.entries.iter().fold(0, |m, (_, p)| m | p.face().bit())
    }

    pub fn is_covering(&self) -> bool {
        self.face_mask() == ALL_FACES
    }

    /// Image of grid point `p` as seen from `square`, if `p` is a corner of it.
    pub fn corner_image(&self, square: GridPoint, p: GridPoint) -> Option<crate::cube::CubeCorner> {
        self.get(square)?.corner_at(p.x - square.x, p.y - square.y)
    }

    /// Every square placed, and every present edge's squares agree on both
    /// shared corners.
    pub fn is_consistent_for(&self, poly: &Polyomino) -> bool {
        if self.entries.len() != poly.len() || !poly.squares().iter().all(|s| self.get(*s).is_some()) {
            return false;
        }
        poly.present_edges().all(|e| {
            let (s, t) = e.squares();
            [e.a(), e.b()].into_iter().all(|p| self.corner_image(s, p) == self.corner_image(t, p))
        })
    }
}

/// BFS numbering of the squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsOrder {
    pub sequence: Vec<GridPoint>,
    /// For each square after the first: the position of its parent in
    /// `sequence` and the direction from parent to child.
    pub parent: Vec<Option<(usize, Direction)>>,
}

/// Neighbor expansion order: row-major from the top (N, W, E, S).
const EXPAND_ORDER: [Direction; 4] = [Direction::N, Direction::W, Direction::E, Direction::S];

pub fn bfs_order(p: &Polyomino) -> BfsOrder {
    let start = *p.squares().iter().max_by_key(|s| (s.y, -s.x)).expect("nonempty polyomino");
    let mut index: BTreeMap<GridPoint, usize> = BTreeMap::new();
    let mut sequence = Vec::with_capacity(p.len());
    let mut parent = Vec::with_capacity(p.len());
    index.insert(start, 0);
    sequence.push(start);
    parent.push(None);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let from = index[&s];
        for d in EXPAND_ORDER {
            let n = s.step(d);
            if !p.is_present(&crate::polyomino::LatticeEdge::of_square(s, d)) || index.contains_key(&n) {
                continue;
            }
            index.insert(n, sequence.len());
            sequence.push(n);
            parent.push(Some((from, d)));
            queue.push_back(n);
        }
    }
    BfsOrder { sequence, parent }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_states: u64,
    pub max_witnesses: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_states: 10_000_000, max_witnesses: 64 }
    }
}

/// How partial mappings are merged between levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Keep every distinct partial mapping; enumerates all total mappings.
    Enumerate,
    /// Merge partial mappings that agree on the squares still bordering
    /// unplaced ones and on the faces covered so far. Decides existence
    /// only; keeps one representative per merged class.
    Frontier,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub consistent_exists: bool,
    pub covering_exists: bool,
    /// Covering total mappings in canonical order, at most `max_witnesses`.
    pub witnesses: Vec<Mapping>,
    /// Number of total consistent mappings (exact under `Enumerate`).
    pub consistent_count: u64,
    /// Number of covering total mappings (exact under `Enumerate`).
    pub covering_count: u64,
    pub states_explored: u64,
    pub truncated: bool,
}

impl SearchResult {
    fn truncated(states: u64) -> Self {
        SearchResult {
            consistent_exists: false,
            covering_exists: false,
            witnesses: Vec::new(),
            consistent_count: 0,
            covering_count: 0,
            states_explored: states,
            truncated: true,
        }
    }
}

/// Full enumeration of consistent mappings.
pub fn search(p: &Polyomino, limits: &Limits) -> SearchResult {
    search_with(p, limits, Strategy::Enumerate)
}

struct Plan {
    order: BfsOrder,
    /// For square k: already-placed neighbors `(j, dir from j to k)`.
    checks: Vec<Vec<(usize, Direction)>>,
    /// For level k (squares `0..k` placed): positions that still border an
    /// unplaced square across a present edge.
    frontier: Vec<Vec<usize>>,
}

impl Plan {
    fn new(p: &Polyomino) -> Self {
        let order = bfs_order(p);
        let pos: BTreeMap<GridPoint, usize> = order.sequence.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let n = order.sequence.len();
        let mut checks = Vec::with_capacity(n);
        // Last position of a neighbor for each square.
        let mut last_neighbor = Vec::with_capacity(n);
        for (k, &s) in order.sequence.iter().enumerate() {
            let mut here = Vec::new();
            let mut last = k;
            for (d, nb) in p.neighbors(s) {
                let j = pos[&nb];
                if j < k {
                    here.push((j, d.opposite()));
                }
                last = last.max(j);
            }
            here.sort();
            checks.push(here);
            last_neighbor.push(last);
        }
        let frontier = (0..=n).map(|k| (0..k).filter(|&j| last_neighbor[j] >= k).collect()).collect();
        Plan { order, checks, frontier }
    }
}

/// Final level of a search run.
struct Run {
    order: BfsOrder,
    /// Total mappings flattened with stride `n`, as placement indices.
    states: Vec<u8>,
    masks: Vec<u8>,
    explored: u64,
    truncated: bool,
}

fn run(p: &Polyomino, table: &PlacementTable, max_states: u64, strategy: Strategy) -> Run {
    let plan = Plan::new(p);
    let n = plan.order.sequence.len();

    // States of the current level, flattened with stride `k`, plus face masks.
    let mut states: Vec<u8> = alloc::vec![table.index_of(&Placement::BOTTOM)];
    let mut masks: Vec<u8> = alloc::vec![Placement::BOTTOM.face().bit()];
    let mut explored: u64 = 1;

    for k in 1..n {
        let (pi, dir) = plan.order.parent[k].expect("non-root has a parent");
        let count = masks.len();
        let mut next: Vec<u8> = Vec::with_capacity((k + 1) * count * 2);
        let mut next_masks: Vec<u8> = Vec::with_capacity(count * 2);
        for s in 0..count {
            let row = &states[s * k..(s + 1) * k];
            let (quarter, flat) = table.extend(row[pi], dir);
            for option in [quarter, flat] {
                let ok = plan.checks[k].iter().all(|&(j, d)| {
                    let (q, f) = table.extend(row[j], d);
                    option == q || option == f
                });
                if ok {
                    next.extend_from_slice(row);
                    next.push(option);
                    next_masks.push(masks[s] | table.face(option).bit());
                }
            }
        }
        let width = k + 1;
        let (deduped, deduped_masks) = merge(&next, &next_masks, width, &plan.frontier[width], strategy);
        states = deduped;
        masks = deduped_masks;
        explored += masks.len() as u64;
        if explored > max_states {
            return Run { order: plan.order, states: Vec::new(), masks: Vec::new(), explored, truncated: true };
        }
        if masks.is_empty() {
            break;
        }
    }
    if states.len() != masks.len() * n {
        states.clear();
        masks.clear();
    }
    Run { order: plan.order, states, masks, explored, truncated: false }
}

impl Run {
    fn mapping(&self, table: &PlacementTable, s: usize) -> Mapping {
        let n = self.order.sequence.len();
        let row = &self.states[s * n..(s + 1) * n];
        Mapping::new(self.order.sequence.iter().zip(row).map(|(sq, &idx)| (*sq, table.placement(idx))))
    }
}

/// Search with an explicit merge strategy.
pub fn search_with(p: &Polyomino, limits: &Limits, strategy: Strategy) -> SearchResult {
    let table = PlacementTable::new();
    let r = run(p, &table, limits.max_states, strategy);
    if r.truncated {
        return SearchResult::truncated(r.explored);
    }
    let mut witnesses = Vec::new();
    let mut covering_count = 0u64;
    for (s, &m) in r.masks.iter().enumerate() {
        if m == ALL_FACES {
            covering_count += 1;
            witnesses.push(r.mapping(&table, s));
        }
    }
    witnesses.sort();
    witnesses.truncate(limits.max_witnesses);
    SearchResult {
        consistent_exists: !r.masks.is_empty(),
        covering_exists: covering_count > 0,
        witnesses,
        consistent_count: r.masks.len() as u64,
        covering_count,
        states_explored: r.explored,
        truncated: false,
    }
}

/// Every total consistent mapping, sorted; `None` if `max_states` is hit.
pub fn consistent_mappings(p: &Polyomino, max_states: u64) -> Option<Vec<Mapping>> {
    let table = PlacementTable::new();
    let r = run(p, &table, max_states, Strategy::Enumerate);
    if r.truncated {
        return None;
    }
    let mut out: Vec<Mapping> = (0..r.masks.len()).map(|s| r.mapping(&table, s)).collect();
    out.sort();
    Some(out)
}

/// Sorts and deduplicates a level. Under `Frontier`, the merge key is the
/// frontier placements plus the face mask, and the first state of each key
/// (in sorted order of full rows) is kept.
fn merge(states: &[u8], masks: &[u8], width: usize, frontier: &[usize], strategy: Strategy) -> (Vec<u8>, Vec<u8>) {
    let count = masks.len();
    let row = |i: usize| &states[i * width..(i + 1) * width];
    let mut idx: Vec<usize> = (0..count).collect();
    idx.sort_by(|&a, &b| row(a).cmp(row(b)));
    idx.dedup_by(|a, b| row(*a) == row(*b));
    if strategy == Strategy::Frontier {
        let key = |i: usize| {
            let r = row(i);
            let mut k: Vec<u8> = frontier.iter().map(|&j| r[j]).collect();
            k.push(masks[i]);
            k
        };
        let mut keyed: Vec<(Vec<u8>, usize)> = idx.iter().map(|&i| (key(i), i)).collect();
        // Stable: equal keys keep the order of their full rows.
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        idx = keyed.into_iter().map(|(_, i)| i).collect();
        idx.sort_by(|&a, &b| row(a).cmp(row(b)));
    }
    let mut out = Vec::with_capacity(idx.len() * width);
    let mut out_masks = Vec::with_capacity(idx.len());
    for i in idx {
        out.extend_from_slice(row(i));
        out_masks.push(masks[i]);
    }
    (out, out_masks)
}

/// Outcome of the necessary-condition check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Necessary {
    /// No total consistent mapping covers all six faces: cannot fold.
    ///
    /// Consistent mappings always exist (fold everything accordion-style
    /// onto one face), so the only thing that can fail is covering.
    Fail,
    /// A covering consistent mapping exists.
    PassCovering,
    /// The state limit was hit.
    Inconclusive,
}

/// Runs the frontier-merging search and returns the outcome together with
/// the search details (one covering witness when one exists).
pub fn check_necessary_detailed(p: &Polyomino, limits: &Limits) -> (Necessary, SearchResult) {
    let r = search_with(p, limits, Strategy::Frontier);
    let outcome = if r.truncated {
        Necessary::Inconclusive
    } else if r.covering_exists {
        Necessary::PassCovering
    } else {
        Necessary::Fail
    };
    (outcome, r)
}

pub fn check_necessary(p: &Polyomino, limits: &Limits) -> Necessary {
    check_necessary_detailed(p, limits).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::{Bounds, LatticeEdge};
    use alloc::vec;

    fn gp(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn cross() -> Polyomino {
        Polyomino::new([gp(1, 0), gp(1, 1), gp(1, 2), gp(1, 3), gp(0, 2), gp(2, 2)], []).unwrap()
    }

    fn ring() -> Polyomino {
        let b = Bounds { min_x: 0, min_y: 0, max_x: 3, max_y: 3 };
        Polyomino::new(b.squares().filter(|s| *s != gp(1, 1)), []).unwrap()
    }

    #[test]
    fn strip_order_is_left_to_right() {
        let strip = Polyomino::rectangle(3, 1).unwrap();
        let o = bfs_order(&strip);
        assert_eq!(o.sequence, vec![gp(0, 0), gp(1, 0), gp(2, 0)]);
        assert_eq!(o.parent, vec![None, Some((0, Direction::E)), Some((1, Direction::E))]);
    }

    #[test]
    fn ring_order_starts_top_left() {
        let o = bfs_order(&ring());
        assert_eq!(o.sequence[0], gp(0, 2));
        assert_eq!(o.sequence.len(), 8);
        for (k, par) in o.parent.iter().enumerate().skip(1) {
            let (j, d) = par.unwrap();
            assert!(j < k);
            assert_eq!(o.sequence[j].step(d), o.sequence[k]);
        }
    }

    #[test]
    fn cross_is_covering() {
        let r = search(&cross(), &Limits::default());
        assert!(r.consistent_exists && r.covering_exists);
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert!(w.is_consistent_for(&cross()));
            assert!(w.is_covering());
        }
        assert_eq!(check_necessary(&cross(), &Limits::default()), Necessary::PassCovering);
    }

    #[test]
    fn domino_has_two_mappings() {
        let r = search(&Polyomino::rectangle(2, 1).unwrap(), &Limits::default());
        assert_eq!(r.consistent_count, 2);
        assert!(!r.covering_exists);
    }

    #[test]
    fn two_by_two_is_consistent_but_never_covers() {
        let sq = Polyomino::rectangle(2, 2).unwrap();
        assert_eq!(check_necessary(&sq, &Limits::default()), Necessary::Fail);
        let r = search(&sq, &Limits::default());
        assert!(r.consistent_exists);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn ring_fails() {
        assert_eq!(check_necessary(&ring(), &Limits::default()), Necessary::Fail);
    }

    #[test]
    fn truncation_is_reported() {
        let limits = Limits { max_states: 3, max_witnesses: 4 };
        let r = search(&cross(), &limits);
        assert!(r.truncated);
        assert!(r.states_explored > limits.max_states);
        assert_eq!(check_necessary(&cross(), &limits), Necessary::Inconclusive);
    }

    #[test]
    fn slit_cuts_the_constraint() {
        // 2x2 with one interior slit: the squares across the slit are only
        // tied through the other three edges.
        let sq = Polyomino::rectangle(2, 2).unwrap();
        let cut = sq.with_slit(LatticeEdge::new(gp(1, 0), gp(1, 1)).unwrap()).unwrap();
        let full = search(&sq, &Limits::default());
        let open = search(&cut, &Limits::default());
        assert!(open.consistent_count >= full.consistent_count);
    }

    #[test]
    fn strategies_agree_on_small_shapes() {
        for p in [cross(), ring(), Polyomino::rectangle(3, 2).unwrap()] {
            let a = search_with(&p, &Limits::default(), Strategy::Enumerate);
            let b = search_with(&p, &Limits::default(), Strategy::Frontier);
            assert_eq!(a.consistent_exists, b.consistent_exists);
            assert_eq!(a.covering_exists, b.covering_exists);
            if let Some(w) = b.witnesses.first() {
                assert!(a.witnesses.contains(w) || a.covering_count > a.witnesses.len() as u64);
            }
        }
    }
}
