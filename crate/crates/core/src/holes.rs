//! Holes of a polyomino and their classification into the five basic shapes.
//!
//! Hole topology is computed on a doubled-resolution grid: node `(2x+1,
//! 2y+1)` is square `(x,y)`, `(2x, 2y+1)` and `(2x+1, 2y)` are the vertical
//! and horizontal edges leaving grid point `(x,y)`, and `(2x, 2y)` is the grid
//! point itself. A node is material when it belongs to the paper: a present
//! square, a present interior edge, or a grid point all of whose four incident
//! edges are present. The non-material nodes split into 4-connected
//! components; every component other than the unbounded one is a hole.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cube::Direction;
use crate::polyomino::{GridPoint, LatticeEdge, Polyomino, Symmetry};

/// A bounded component of the complement of a polyomino.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hole {
    /// Absent squares inside the hole.
    pub squares: BTreeSet<GridPoint>,
    /// Slit edges inside the hole.
    pub slits: BTreeSet<LatticeEdge>,
    /// Grid points on the hole (its closure's lattice points).
    pub points: BTreeSet<GridPoint>,
    /// Lexicographically smallest grid point of the hole.
    pub anchor: GridPoint,
}

impl Hole {
    pub fn min_x(&self) -> i32 {
        self.points.iter().map(|p| p.x).min().unwrap_or(0)
    }

    pub fn max_x(&self) -> i32 {
        self.points.iter().map(|p| p.x).max().unwrap_or(0)
    }

    pub fn min_y(&self) -> i32 {
        self.points.iter().map(|p| p.y).min().unwrap_or(0)
    }

    pub fn max_y(&self) -> i32 {
        self.points.iter().map(|p| p.y).max().unwrap_or(0)
    }

    pub fn is_slit(&self) -> bool {
        self.squares.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlitAxis {
    Horizontal,
    Vertical,
}

/// Hole shape, matched up to translation only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HoleClass {
    UnitSquare,
    Slit1,
    StraightSlit2(SlitAxis),
    /// An L of two slit edges; the arms leave the corner point in the
    /// directions `vertical` (N or S) and `horizontal` (E or W).
    LSlit2 {
        vertical: Direction,
        horizontal: Direction,
    },
    /// Three sides of a unit square; `opening` names the missing side.
    /// Opening S is an A-slit.
    USlit3(Direction),
    NonBasic,
}

impl HoleClass {
    pub fn is_basic(self) -> bool {
        self != HoleClass::NonBasic
    }

    pub fn is_a_slit(self) -> bool {
        self == HoleClass::USlit3(Direction::S)
    }

    pub fn is_u_slit(self) -> bool {
        matches!(self, HoleClass::USlit3(_))
    }

    /// Tag without orientation, e.g. `USlit3`.
    pub fn tag(self) -> &'static str {
        match self {
            HoleClass::UnitSquare => "UnitSquare",
            HoleClass::Slit1 => "Slit1",
            HoleClass::StraightSlit2(_) => "StraightSlit2",
            HoleClass::LSlit2 { .. } => "LSlit2",
            HoleClass::USlit3(_) => "USlit3",
            HoleClass::NonBasic => "NonBasic",
        }
    }

    /// Orientation label, if the class carries one.
    pub fn orientation(self) -> Option<&'static str> {
        match self {
            HoleClass::StraightSlit2(SlitAxis::Horizontal) => Some("horizontal"),
            HoleClass::StraightSlit2(SlitAxis::Vertical) => Some("vertical"),
            HoleClass::LSlit2 { vertical, horizontal } => Some(match (vertical, horizontal) {
                (Direction::N, Direction::E) => "NE",
                (Direction::N, _) => "NW",
                (_, Direction::E) => "SE",
                _ => "SW",
            }),
            HoleClass::USlit3(d) => Some(match d {
                Direction::N => "N",
                Direction::E => "E",
                Direction::S => "S",
                Direction::W => "W",
            }),
            _ => None,
        }
    }

    /// The class of the image hole under `t`.
    pub fn transformed(self, t: Symmetry) -> HoleClass {
        match self {
            HoleClass::StraightSlit2(axis) => {
                let d = match axis {
                    SlitAxis::Horizontal => Direction::E,
                    SlitAxis::Vertical => Direction::N,
                };
                HoleClass::StraightSlit2(if t.apply_dir(d).is_vertical() {
                    SlitAxis::Vertical
                } else {
                    SlitAxis::Horizontal
                })
            }
            HoleClass::LSlit2 { vertical, horizontal } => {
                let (a, b) = (t.apply_dir(vertical), t.apply_dir(horizontal));
                if a.is_vertical() {
                    HoleClass::LSlit2 { vertical: a, horizontal: b }
                } else {
                    HoleClass::LSlit2 { vertical: b, horizontal: a }
                }
            }
            HoleClass::USlit3(d) => HoleClass::USlit3(t.apply_dir(d)),
            other => other,
        }
    }
}

impl fmt::Display for HoleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation() {
            Some(o) => write!(f, "{}({})", self.tag(), o),
            None => f.write_str(self.tag()),
        }
    }
}

/// Doubled-resolution occupancy of a polyomino with a one-cell frame.
struct DoubledGrid {
    origin_x: i32,
    origin_y: i32,
    width: usize,
    height: usize,
    material: Vec<bool>,
}

impl DoubledGrid {
    fn new(p: &Polyomino) -> Self {
        let b = p.bounds();
        // Grid points from (min-1) to (max+1) inclusive.
        let origin_x = 2 * (b.min_x - 1);
        let origin_y = 2 * (b.min_y - 1);
        let width = (2 * (b.width() + 2) + 1) as usize;
        let height = (2 * (b.height() + 2) + 1) as usize;
        let mut material = vec![false; width * height];
        for j in 0..height {
            for i in 0..width {
                let (x, y) = (origin_x + i as i32, origin_y + j as i32);
                let m = match (x.rem_euclid(2), y.rem_euclid(2)) {
                    (1, 1) => p.contains(GridPoint::new((x - 1) / 2, (y - 1) / 2)),
                    (0, 1) => {
                        let a = GridPoint::new(x / 2, (y - 1) / 2);
                        p.is_present(&LatticeEdge::new(a, a.offset(0, 1)).expect("unit"))
                    }
                    (1, 0) => {
                        let a = GridPoint::new((x - 1) / 2, y / 2);
                        p.is_present(&LatticeEdge::new(a, a.offset(1, 0)).expect("unit"))
                    }
                    _ => p.is_interior_point(GridPoint::new(x / 2, y / 2)),
                };
                material[j * width + i] = m;
            }
        }
        DoubledGrid { origin_x, origin_y, width, height, material }
    }

    /// Component labels of non-material nodes; `usize::MAX` for material.
    fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.material.len()];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.material.len() {
            if self.material[start] || label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(n) = stack.pop() {
                let (i, j) = (n % self.width, n / self.width);
                let mut visit = |ni: usize, nj: usize| {
                    let m = nj * self.width + ni;
                    if !self.material[m] && label[m] == usize::MAX {
                        label[m] = count;
                        stack.push(m);
                    }
                };
                if i > 0 {
                    visit(i - 1, j);
                }
                if i + 1 < self.width {
                    visit(i + 1, j);
                }
                if j > 0 {
                    visit(i, j - 1);
                }
                if j + 1 < self.height {
                    visit(i, j + 1);
                }
            }
            count += 1;
        }
        (label, count)
    }
}

/// All holes of `p`, sorted by anchor.
pub fn holes(p: &Polyomino) -> Vec<Hole> {
    let grid = DoubledGrid::new(p);
    let (label, count) = grid.components();
    // Node 0 is the frame corner, always outside.
    let outer = label[0];
    let mut found: Vec<Hole> = (0..count)
        .map(|_| Hole {
            squares: BTreeSet::new(),
            slits: BTreeSet::new(),
            points: BTreeSet::new(),
            anchor: GridPoint::new(0, 0),
        })
        .collect();
    for (n, &l) in label.iter().enumerate() {
        if l == usize::MAX || l == outer {
            continue;
        }
        let x = grid.origin_x + (n % grid.width) as i32;
        let y = grid.origin_y + (n / grid.width) as i32;
        let hole = &mut found[l];
        match (x.rem_euclid(2), y.rem_euclid(2)) {
            (1, 1) => {
                hole.squares.insert(GridPoint::new((x - 1) / 2, (y - 1) / 2));
            }
            (0, 1) => {
                let a = GridPoint::new(x / 2, (y - 1) / 2);
                let e = LatticeEdge::new(a, a.offset(0, 1)).expect("unit");
                if p.is_slit(&e) {
                    hole.slits.insert(e);
                }
            }
            (1, 0) => {
                let a = GridPoint::new((x - 1) / 2, y / 2);
                let e = LatticeEdge::new(a, a.offset(1, 0)).expect("unit");
                if p.is_slit(&e) {
                    hole.slits.insert(e);
                }
            }
            _ => {
                hole.points.insert(GridPoint::new(x / 2, y / 2));
            }
        }
    }
    let mut out: Vec<Hole> = found
        .into_iter()
        .enumerate()
        .filter(|(i, h)| *i != outer && !h.points.is_empty())
        .map(|(_, mut h)| {
            h.anchor = *h.points.iter().next().expect("nonempty");
            h
        })
        .collect();
    out.sort_by_key(|h| h.anchor);
    out
}

/// Slit edges not enclosed by any hole (dead-end cuts from the outer
/// boundary).
pub fn boundary_slits(p: &Polyomino, holes: &[Hole]) -> BTreeSet<LatticeEdge> {
    p.slits().iter().filter(|e| !holes.iter().any(|h| h.slits.contains(e))).copied().collect()
}

/// Exact shape match against the five basic holes.
pub fn classify_hole(h: &Hole) -> HoleClass {
    match (h.squares.len(), h.slits.len()) {
        (1, 0) => HoleClass::UnitSquare,
        (0, 1) => HoleClass::Slit1,
        (0, 2) => classify_pair(h),
        (0, 3) => classify_triple(h),
        _ => HoleClass::NonBasic,
    }
}

fn classify_pair(h: &Hole) -> HoleClass {
    let mut it = h.slits.iter();
    let (e, f) = (it.next().expect("two"), it.next().expect("two"));
    match (e.is_horizontal(), f.is_horizontal()) {
        (true, true) => HoleClass::StraightSlit2(SlitAxis::Horizontal),
        (false, false) => HoleClass::StraightSlit2(SlitAxis::Vertical),
        _ => {
            let corner = [e.a(), e.b()].into_iter().find(|p| f.contains_point(*p)).expect("hole slits share a point");
            let away = |edge: &LatticeEdge| {
                let far = if edge.a() == corner { edge.b() } else { edge.a() };
                Direction::from_offset(far.x - corner.x, far.y - corner.y).expect("unit")
            };
            let (v, hz) = if e.is_horizontal() { (away(f), away(e)) } else { (away(e), away(f)) };
            HoleClass::LSlit2 { vertical: v, horizontal: hz }
        }
    }
}

fn classify_triple(h: &Hole) -> HoleClass {
    let first = h.slits.iter().next().expect("three");
    let (s, t) = first.squares();
    for square in [s, t] {
        let sides: Vec<Direction> =
            Direction::ALL.into_iter().filter(|d| h.slits.contains(&LatticeEdge::of_square(square, *d))).collect();
        if sides.len() == 3 {
            let open = Direction::ALL.into_iter().find(|d| !sides.contains(d)).expect("one side open");
            return HoleClass::USlit3(open);
        }
    }
    HoleClass::NonBasic
}

/// Gap between two holes in full unit rows and columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapMetrics {
    /// Rows strictly between the top of the lower hole and the bottom of the
    /// upper one; `None` when their y-extents are not separated.
    pub rows_between: Option<i32>,
    pub cols_between: Option<i32>,
}

pub fn gap_metrics(h1: &Hole, h2: &Hole) -> GapMetrics {
    let sep = |lo1: i32, hi1: i32, lo2: i32, hi2: i32| {
        if lo2 > hi1 {
            Some(lo2 - hi1)
        } else if lo1 > hi2 {
            Some(lo1 - hi2)
        } else {
            None
        }
    };
    GapMetrics {
        rows_between: sep(h1.min_y(), h1.max_y(), h2.min_y(), h2.max_y()),
        cols_between: sep(h1.min_x(), h1.max_x(), h2.min_x(), h2.max_x()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::Bounds;

    fn gp(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn edge(a: (i32, i32), b: (i32, i32)) -> LatticeEdge {
        LatticeEdge::new(gp(a.0, a.1), gp(b.0, b.1)).unwrap()
    }

    type Cut = ((i32, i32), (i32, i32));

    fn rect_minus(w: i32, h: i32, missing: &[(i32, i32)], slits: &[Cut]) -> Polyomino {
        let b = Bounds { min_x: 0, min_y: 0, max_x: w, max_y: h };
        let squares = b.squares().filter(|s| !missing.contains(&(s.x, s.y)));
        Polyomino::new(squares, slits.iter().map(|&(a, b)| edge(a, b))).unwrap()
    }

    #[test]
    fn ring_has_unit_square_hole() {
        let ring = rect_minus(3, 3, &[(1, 1)], &[]);
        let hs = holes(&ring);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].squares.iter().copied().collect::<Vec<_>>(), vec![gp(1, 1)]);
        assert_eq!(hs[0].anchor, gp(1, 1));
        assert_eq!(classify_hole(&hs[0]), HoleClass::UnitSquare);
    }

    #[test]
    fn simply_connected_has_no_holes() {
        assert!(holes(&Polyomino::rectangle(2, 3).unwrap()).is_empty());
        // A dead-end slit from the outer boundary is not a hole.
        let notch = rect_minus(2, 3, &[], &[((1, 0), (1, 1))]);
        assert!(holes(&notch).is_empty());
        assert_eq!(boundary_slits(&notch, &[]).len(), 1);
    }

    #[test]
    fn l_slit_is_one_hole() {
        let p = rect_minus(3, 4, &[], &[((1, 1), (1, 2)), ((1, 2), (2, 2))]);
        let hs = holes(&p);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].slits.len(), 2);
        assert_eq!(classify_hole(&hs[0]), HoleClass::LSlit2 { vertical: Direction::S, horizontal: Direction::E });
    }

    #[test]
    fn u_slit_orientations() {
        // Slits on the W, N and E sides of square (1,1): opens to the south.
        let a = rect_minus(3, 3, &[], &[((1, 1), (1, 2)), ((1, 2), (2, 2)), ((2, 1), (2, 2))]);
        let hs = holes(&a);
        assert_eq!(hs.len(), 1);
        let class = classify_hole(&hs[0]);
        assert_eq!(class, HoleClass::USlit3(Direction::S));
        assert!(class.is_a_slit());
        let rotated = a.transform(Symmetry::ALL[2]);
        assert_eq!(classify_hole(&holes(&rotated)[0]), HoleClass::USlit3(Direction::N));
    }

    #[test]
    fn straight_slits() {
        let vertical = rect_minus(3, 4, &[], &[((1, 1), (1, 2)), ((1, 2), (1, 3))]);
        let hs = holes(&vertical);
        assert_eq!(classify_hole(&hs[0]), HoleClass::StraightSlit2(SlitAxis::Vertical));
        let rot = vertical.transform(Symmetry::ALL[1]);
        assert_eq!(classify_hole(&holes(&rot)[0]), HoleClass::StraightSlit2(SlitAxis::Horizontal));
        let three = rect_minus(3, 5, &[], &[((1, 1), (1, 2)), ((1, 2), (1, 3)), ((1, 3), (1, 4))]);
        assert_eq!(classify_hole(&holes(&three)[0]), HoleClass::NonBasic);
        let one = rect_minus(2, 3, &[], &[((1, 1), (1, 2))]);
        assert_eq!(classify_hole(&holes(&one)[0]), HoleClass::Slit1);
    }

    #[test]
    fn diagonal_squares_merge() {
        let p = rect_minus(4, 4, &[(1, 1), (2, 2)], &[]);
        let hs = holes(&p);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].squares.len(), 2);
        assert_eq!(classify_hole(&hs[0]), HoleClass::NonBasic);
    }

    #[test]
    fn square_with_incident_slit_is_nonbasic() {
        let p = rect_minus(3, 4, &[(1, 1)], &[((1, 2), (1, 3))]);
        let hs = holes(&p);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].slits.len(), 1);
        assert_eq!(classify_hole(&hs[0]), HoleClass::NonBasic);
    }

    #[test]
    fn gap_metric_examples() {
        let p = rect_minus(3, 8, &[(1, 2), (1, 5)], &[]);
        let hs = holes(&p);
        assert_eq!(hs.len(), 2);
        let g = gap_metrics(&hs[0], &hs[1]);
        assert_eq!(g.rows_between, Some(2));
        assert_eq!(g.cols_between, None);
        assert_eq!(gap_metrics(&hs[1], &hs[0]), g);

        // A-slit below a square hole with two rows between.
        let q = rect_minus(3, 7, &[(1, 4)], &[((1, 1), (1, 2)), ((1, 2), (2, 2)), ((2, 1), (2, 2))]);
        let hs = holes(&q);
        assert_eq!(hs.len(), 2);
        let classes: Vec<_> = hs.iter().map(classify_hole).collect();
        assert!(classes.contains(&HoleClass::USlit3(Direction::S)));
        assert!(classes.contains(&HoleClass::UnitSquare));
        assert_eq!(gap_metrics(&hs[0], &hs[1]).rows_between, Some(2));
    }
}
