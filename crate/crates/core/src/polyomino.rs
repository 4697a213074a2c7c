//! Polyominoes with slit edges.
//!
//! A square is named by its SW grid point and spans `(x,y)..(x+1,y+1)`, with
//! `y` increasing upward. A shared edge between two present squares belongs
//! to the paper unless it is listed as a slit.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::cube::Direction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x: i32,
    pub y: i32,
}

impl GridPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        GridPoint { x, y }
    }

    pub const fn step(self, dir: Direction) -> Self {
        let (dx, dy) = dir.offset();
        GridPoint::new(self.x + dx, self.y + dy)
    }

    pub const fn offset(self, dx: i32, dy: i32) -> Self {
        GridPoint::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit lattice segment, endpoints in canonical (sorted) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeEdge {
    a: GridPoint,
    b: GridPoint,
}

impl LatticeEdge {
    /// `None` unless the points are at unit distance along one axis.
    pub fn new(p: GridPoint, q: GridPoint) -> Option<Self> {
        let d = (p.x - q.x).abs() + (p.y - q.y).abs();
        if d != 1 {
            return None;
        }
        Some(if p <= q { LatticeEdge { a: p, b: q } } else { LatticeEdge { a: q, b: p } })
    }

    /// The edge of `square` facing `dir`.
    pub fn of_square(square: GridPoint, dir: Direction) -> Self {
        let GridPoint { x, y } = square;
        let (p, q) = match dir {
            Direction::N => ((x, y + 1), (x + 1, y + 1)),
            Direction::E => ((x + 1, y), (x + 1, y + 1)),
            Direction::S => ((x, y), (x + 1, y)),
            Direction::W => ((x, y), (x, y + 1)),
        };
        LatticeEdge { a: GridPoint::new(p.0, p.1), b: GridPoint::new(q.0, q.1) }
    }

    pub const fn a(&self) -> GridPoint {
        self.a
    }

    pub const fn b(&self) -> GridPoint {
        self.b
    }

    /// True for an edge running along the x axis.
    pub const fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    /// The two squares sharing this edge: (below, above) for a horizontal
    /// edge, (left, right) for a vertical one.
    pub const fn squares(&self) -> (GridPoint, GridPoint) {
        if self.is_horizontal() {
            (GridPoint::new(self.a.x, self.a.y - 1), self.a)
        } else {
            (GridPoint::new(self.a.x - 1, self.a.y), self.a)
        }
    }

    pub fn contains_point(&self, p: GridPoint) -> bool {
        self.a == p || self.b == p
    }

    /// The four edges incident to a grid point.
    pub fn around(p: GridPoint) -> [LatticeEdge; 4] {
        [
            LatticeEdge { a: p, b: p.offset(0, 1) },
            LatticeEdge { a: p, b: p.offset(1, 0) },
            LatticeEdge { a: p.offset(0, -1), b: p },
            LatticeEdge { a: p.offset(-1, 0), b: p },
        ]
    }
}

impl fmt::Display for LatticeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("polyomino has no squares")]
    Empty,
    #[error("square {0} listed twice")]
    DuplicateSquare(GridPoint),
    #[error("slit edge {0} listed twice")]
    DuplicateSlit(LatticeEdge),
    #[error("slit edge {0} is not shared by two squares of the polyomino")]
    SlitNotInterior(LatticeEdge),
    #[error("{0} and {1} do not form a unit lattice edge")]
    NotUnitEdge(GridPoint, GridPoint),
    #[error("squares are not connected across present edges")]
    Disconnected,
}

/// Axis-aligned bounding box of the squares, in grid-point coordinates
/// (`max_x`/`max_y` are the far grid lines).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub min_x: i32,
    pub min_y: i32,
    pub max_x: i32,
    pub max_y: i32,
}

impl Bounds {
    pub const fn width(&self) -> i32 {
        self.max_x - self.min_x
    }

    pub const fn height(&self) -> i32 {
        self.max_y - self.min_y
    }

    pub fn squares(&self) -> impl Iterator<Item = GridPoint> + '_ {
        (self.min_y..self.max_y).flat_map(move |y| (self.min_x..self.max_x).map(move |x| GridPoint::new(x, y)))
    }
}

/// A validated polyomino: nonempty, slits interior, connected across
/// present edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyomino {
    squares: BTreeSet<GridPoint>,
    slits: BTreeSet<LatticeEdge>,
}

impl Polyomino {
    pub fn new(
        squares: impl IntoIterator<Item = GridPoint>,
        slits: impl IntoIterator<Item = LatticeEdge>,
    ) -> Result<Self, ShapeError> {
        let mut sq = BTreeSet::new();
        for s in squares {
            if !sq.insert(s) {
                return Err(ShapeError::DuplicateSquare(s));
            }
        }
        let mut sl = BTreeSet::new();
        for e in slits {
            if !sl.insert(e) {
                return Err(ShapeError::DuplicateSlit(e));
            }
        }
        Self::from_sets(sq, sl)
    }

    pub fn from_sets(squares: BTreeSet<GridPoint>, slits: BTreeSet<LatticeEdge>) -> Result<Self, ShapeError> {
        if squares.is_empty() {
            return Err(ShapeError::Empty);
        }
        for e in &slits {
            let (s, t) = e.squares();
            if !squares.contains(&s) || !squares.contains(&t) {
                return Err(ShapeError::SlitNotInterior(*e));
            }
        }
        let p = Polyomino { squares, slits };
        if !p.is_connected() {
            return Err(ShapeError::Disconnected);
        }
        Ok(p)
    }

    /// A solid `width` x `height` rectangle with its SW square at the origin.
    pub fn rectangle(width: i32, height: i32) -> Result<Self, ShapeError> {
        let b = Bounds { min_x: 0, min_y: 0, max_x: width, max_y: height };
        Polyomino::new(b.squares(), [])
    }

    pub fn squares(&self) -> &BTreeSet<GridPoint> {
        &self.squares
    }

    pub fn slits(&self) -> &BTreeSet<LatticeEdge> {
        &self.slits
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, square: GridPoint) -> bool {
        self.squares.contains(&square)
    }

    pub fn is_slit(&self, e: &LatticeEdge) -> bool {
        self.slits.contains(e)
    }

    /// True iff `e` is shared by two present squares and is not a slit.
    pub fn is_present(&self, e: &LatticeEdge) -> bool {
        let (s, t) = e.squares();
        self.contains(s) && self.contains(t) && !self.is_slit(e)
    }

    /// Neighbors of `square` across present edges, with the direction.
    pub fn neighbors(&self, square: GridPoint) -> impl Iterator<Item = (Direction, GridPoint)> + '_ {
        Direction::ALL.into_iter().filter_map(move |d| {
            let n = square.step(d);
            self.is_present(&LatticeEdge::of_square(square, d)).then_some((d, n))
        })
    }

    /// All interior present edges, sorted.
    pub fn present_edges(&self) -> impl Iterator<Item = LatticeEdge> + '_ {
        self.squares.iter().flat_map(move |&s| {
            [Direction::E, Direction::N].into_iter().filter_map(move |d| {
                let e = LatticeEdge::of_square(s, d);
                self.is_present(&e).then_some(e)
            })
        })
    }

    pub fn bounds(&self) -> Bounds {
        let mut b = Bounds { min_x: i32::MAX, min_y: i32::MAX, max_x: i32::MIN, max_y: i32::MIN };
        for s in &self.squares {
            b.min_x = b.min_x.min(s.x);
            b.min_y = b.min_y.min(s.y);
            b.max_x = b.max_x.max(s.x + 1);
            b.max_y = b.max_y.max(s.y + 1);
        }
        b
    }

    /// A grid point is interior iff all four incident edges are present.
    pub fn is_interior_point(&self, p: GridPoint) -> bool {
        LatticeEdge::around(p).iter().all(|e| self.is_present(e))
    }

    fn is_connected(&self) -> bool {
        let Some(&start) = self.squares.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for (_, n) in self.neighbors(s) {
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.squares.len()
    }

    /// The same polyomino with one more slit edge.
    pub fn with_slit(&self, e: LatticeEdge) -> Result<Self, ShapeError> {
        let mut slits = self.slits.clone();
        if !slits.insert(e) {
            return Err(ShapeError::DuplicateSlit(e));
        }
        Polyomino::from_sets(self.squares.clone(), slits)
    }

    /// Image under a square symmetry, translated so the bounding box starts
    /// at the origin.
    pub fn transform(&self, t: Symmetry) -> Polyomino {
        let mut squares: BTreeSet<GridPoint> = self.squares.iter().map(|&s| t.apply_square(s)).collect();
        let mut slits: BTreeSet<LatticeEdge> = self.slits.iter().map(|e| t.apply_edge(e)).collect();
        let (mx, my) = squares.iter().fold((i32::MAX, i32::MAX), |(mx, my), s| (mx.min(s.x), my.min(s.y)));
        squares = squares.into_iter().map(|s| s.offset(-mx, -my)).collect();
        slits = slits.into_iter().map(|e| LatticeEdge { a: e.a.offset(-mx, -my), b: e.b.offset(-mx, -my) }).collect();
        Polyomino { squares, slits }
    }

    /// Translated so the bounding box starts at the origin.
    pub fn normalized(&self) -> Polyomino {
        self.transform(Symmetry::IDENTITY)
    }
}

/// All fixed polyominoes (distinct up to translation) with `n` squares and
/// no slits, each normalized to the origin, in a deterministic order.
pub fn fixed_polyominoes(n: usize) -> Vec<Polyomino> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Vec<GridPoint>> = BTreeSet::new();
    level.insert(alloc::vec![GridPoint::new(0, 0)]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for shape in &level {
            for s in shape {
                for d in Direction::ALL {
                    let t = s.step(d);
                    if shape.contains(&t) {
                        continue;
                    }
                    let mut grown: Vec<GridPoint> = shape.iter().copied().chain([t]).collect();
                    let mx = grown.iter().map(|g| g.x).min().expect("nonempty");
                    let my = grown.iter().map(|g| g.y).min().expect("nonempty");
                    for g in &mut grown {
                        *g = g.offset(-mx, -my);
                    }
                    grown.sort();
                    next.insert(grown);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|sq| Polyomino::new(sq, []).expect("grown shapes are connected")).collect()
}

/// An element of the symmetry group of the square: an optional mirror in
/// the y axis followed by `quarter_turns` counterclockwise rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symmetry {
    pub mirror: bool,
    pub quarter_turns: u8,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { mirror: false, quarter_turns: 0 };

    pub const ALL: [Symmetry; 8] = [
        Symmetry { mirror: false, quarter_turns: 0 },
        Symmetry { mirror: false, quarter_turns: 1 },
        Symmetry { mirror: false, quarter_turns: 2 },
        Symmetry { mirror: false, quarter_turns: 3 },
        Symmetry { mirror: true, quarter_turns: 0 },
        Symmetry { mirror: true, quarter_turns: 1 },
        Symmetry { mirror: true, quarter_turns: 2 },
        Symmetry { mirror: true, quarter_turns: 3 },
    ];

    /// Acts on a lattice vector.
    pub const fn apply_vec(self, x: i32, y: i32) -> (i32, i32) {
        let (mut x, mut y) = if self.mirror { (-x, y) } else { (x, y) };
        let mut k = self.quarter_turns % 4;
        while k > 0 {
            let t = x;
            x = -y;
            y = t;
            k -= 1;
        }
        (x, y)
    }

    pub const fn apply_point(self, p: GridPoint) -> GridPoint {
        let (x, y) = self.apply_vec(p.x, p.y);
        GridPoint::new(x, y)
    }

    /// Image of a square, named by its new SW corner.
    pub fn apply_square(self, s: GridPoint) -> GridPoint {
        let a = self.apply_point(s);
        let b = self.apply_point(s.offset(1, 1));
        GridPoint::new(a.x.min(b.x), a.y.min(b.y))
    }

    pub fn apply_edge(self, e: &LatticeEdge) -> LatticeEdge {
        LatticeEdge::new(self.apply_point(e.a), self.apply_point(e.b)).expect("isometry")
    }

    pub fn apply_dir(self, d: Direction) -> Direction {
        let (dx, dy) = d.offset();
        let (x, y) = self.apply_vec(dx, dy);
        Direction::from_offset(x, y).expect("isometry")
    }

    pub const fn inverse(self) -> Symmetry {
        if self.mirror {
            // Mirrors are involutions.
            self
        } else {
            Symmetry { mirror: false, quarter_turns: (4 - self.quarter_turns % 4) % 4 }
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirror {
            write!(f, "mirror+rot{}", self.quarter_turns as u32 * 90)
        } else {
            write!(f, "rot{}", self.quarter_turns as u32 * 90)
        }
    }
}
