//! Geometry of the unit cube: corners, faces, and the placements of a unit
//! square onto a face.
//!
//! A [`Placement`] assigns the four corners of a polyomino square (in the
//! fixed order SW, SE, NE, NW) to the four corners of one cube face. Two
//! edge-adjacent squares whose shared edge is present in the paper must agree
//! on the two shared corners; given one placement there are exactly two
//! placements of the neighbor that do, one per fold magnitude (see
//! [`extend_over_edge`]).

use alloc::vec::Vec;
use core::fmt;

/// A corner of the unit cube with coordinates in `{0,1}^3`.
///
/// Stored as a 3-bit mask: bit 0 is `x`, bit 1 is `y`, bit 2 is `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CubeCorner(u8);

impl CubeCorner {
    pub const ALL: [CubeCorner; 8] = [
        CubeCorner(0),
        CubeCorner(1),
        CubeCorner(2),
        CubeCorner(3),
        CubeCorner(4),
        CubeCorner(5),
        CubeCorner(6),
        CubeCorner(7),
    ];

    pub const fn new(x: u8, y: u8, z: u8) -> Self {
        CubeCorner((x & 1) | ((y & 1) << 1) | ((z & 1) << 2))
    }

    pub const fn from_bits(bits: u8) -> Self {
        CubeCorner(bits & 7)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn x(self) -> u8 {
        self.0 & 1
    }

    pub const fn y(self) -> u8 {
        (self.0 >> 1) & 1
    }

    pub const fn z(self) -> u8 {
        (self.0 >> 2) & 1
    }

    pub const fn coord(self, axis: Axis) -> u8 {
        (self.0 >> axis.index()) & 1
    }

    /// The corner across the cube edge parallel to `axis`.
    pub const fn flip(self, axis: Axis) -> Self {
        CubeCorner(self.0 ^ (1 << axis.index()))
    }

    /// True iff the two corners span a cube edge.
    pub const fn is_adjacent(self, other: CubeCorner) -> bool {
        (self.0 ^ other.0).count_ones() == 1
    }
}

impl fmt::Display for CubeCorner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x(), self.y(), self.z())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub const fn index(self) -> u8 {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// One of the six faces: the corners whose `axis` coordinate equals `side`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId {
    pub axis: Axis,
    pub side: u8,
}

impl FaceId {
    pub const ALL: [FaceId; 6] = [
        FaceId::new(Axis::X, 0),
        FaceId::new(Axis::X, 1),
        FaceId::new(Axis::Y, 0),
        FaceId::new(Axis::Y, 1),
        FaceId::new(Axis::Z, 0),
        FaceId::new(Axis::Z, 1),
    ];

    pub const fn new(axis: Axis, side: u8) -> Self {
        FaceId { axis, side: side & 1 }
    }

    /// Dense index in `0..6`, matching the order of [`FaceId::ALL`].
    pub const fn index(self) -> usize {
        (self.axis.index() as usize) * 2 + self.side as usize
    }

    pub const fn bit(self) -> u8 {
        1 << self.index()
    }

    pub fn contains(self, c: CubeCorner) -> bool {
        c.coord(self.axis) == self.side
    }

    pub fn corners(self) -> impl Iterator<Item = CubeCorner> {
        CubeCorner::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    pub const fn opposite(self) -> FaceId {
        FaceId::new(self.axis, self.side ^ 1)
    }

    /// Face number on a standard die, opposite faces summing to 7.
    /// The bottom face is 1.
    pub const fn die_number(self) -> u8 {
        match (self.axis, self.side) {
            (Axis::Z, 0) => 1,
            (Axis::Z, _) => 6,
            (Axis::Y, 0) => 2,
            (Axis::Y, _) => 5,
            (Axis::X, 0) => 3,
            (Axis::X, _) => 4,
        }
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axis = match self.axis {
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        };
        write!(f, "{}{}", axis, self.side)
    }
}

/// Bitmask over the six faces (bit `FaceId::index`).
pub const ALL_FACES: u8 = 0b11_1111;

/// Edge direction from a square to its neighbor in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    N,
    E,
    S,
    W,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::N, Direction::E, Direction::S, Direction::W];

    pub const fn offset(self) -> (i32, i32) {
        match self {
            Direction::N => (0, 1),
            Direction::E => (1, 0),
            Direction::S => (0, -1),
            Direction::W => (-1, 0),
        }
    }

    pub fn from_offset(dx: i32, dy: i32) -> Option<Direction> {
        match (dx, dy) {
            (0, 1) => Some(Direction::N),
            (1, 0) => Some(Direction::E),
            (0, -1) => Some(Direction::S),
            (-1, 0) => Some(Direction::W),
            _ => None,
        }
    }

    pub const fn opposite(self) -> Direction {
        match self {
            Direction::N => Direction::S,
            Direction::E => Direction::W,
            Direction::S => Direction::N,
            Direction::W => Direction::E,
        }
    }

    pub const fn index(self) -> usize {
        match self {
            Direction::N => 0,
            Direction::E => 1,
            Direction::S => 2,
            Direction::W => 3,
        }
    }

    pub const fn is_vertical(self) -> bool {
        matches!(self, Direction::N | Direction::S)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::N => "N",
            Direction::E => "E",
            Direction::S => "S",
            Direction::W => "W",
        };
        f.write_str(s)
    }
}

/// Offsets of a square's corners from its SW corner, in placement order.
pub const SQUARE_CORNERS: [(i32, i32); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];

/// Index into [`SQUARE_CORNERS`] for a corner offset.
pub fn square_corner_index(dx: i32, dy: i32) -> Option<usize> {
    SQUARE_CORNERS.iter().position(|&c| c == (dx, dy))
}

/// Images of a square's corners (SW, SE, NE, NW) on the cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub corners: [CubeCorner; 4],
}

impl Placement {
    /// The canonical seed: the bottom face with the identity orientation.
    pub const BOTTOM: Placement = Placement {
        corners: [
            CubeCorner::new(0, 0, 0),
            CubeCorner::new(1, 0, 0),
            CubeCorner::new(1, 1, 0),
            CubeCorner::new(0, 1, 0),
        ],
    };

    pub fn new(corners: [CubeCorner; 4]) -> Option<Self> {
        let p = Placement { corners };
        p.is_valid().then_some(p)
    }

    /// Cyclically adjacent, pairwise distinct, and coplanar on one face.
    pub fn is_valid(&self) -> bool {
        let c = &self.corners;
        let cyclic = (0..4).all(|i| c[i].is_adjacent(c[(i + 1) % 4]));
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| c[i] != c[j]));
        cyclic && distinct && self.common_face().is_some()
    }

    fn common_face(&self) -> Option<FaceId> {
        FaceId::ALL.into_iter().find(|f| self.corners.iter().all(|c| f.contains(*c)))
    }

    /// The face holding all four corners.
    ///
    /// Panics if the placement is not valid; [`Placement::new`] and
    /// [`all_placements`] only produce valid ones.
    pub fn face(&self) -> FaceId {
        self.common_face().expect("placement corners lie on one face")
    }

    /// Image of the square corner at offset `(dx, dy)` from its SW corner.
    pub fn corner_at(&self, dx: i32, dy: i32) -> Option<CubeCorner> {
        square_corner_index(dx, dy).map(|i| self.corners[i])
    }

    /// Dense index in `0..48` into [`all_placements`].
    pub fn index(&self) -> usize {
        all_placements().binary_search(self).expect("valid placement")
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.corners;
        write!(f, "[{} {} {} {}]", c[0], c[1], c[2], c[3])
    }
}

/// Every valid placement, sorted.
///
/// Built by filtering all `8^4` corner quadruples, so the result does not
/// depend on any construction of the face symmetries.
pub fn all_placements() -> Vec<Placement> {
    let mut out = Vec::with_capacity(48);
    for a in CubeCorner::ALL {
        for b in CubeCorner::ALL {
            for c in CubeCorner::ALL {
                for d in CubeCorner::ALL {
                    if let Some(p) = Placement::new([a, b, c, d]) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The face of a valid placement.
pub fn face_of(p: &Placement) -> FaceId {
    p.face()
}

/// The two placements of the neighbor across edge `dir` of a square placed
/// as `p`: `(quarter, flat)`.
///
/// The quarter option turns the neighbor by 90° onto the other face holding
/// the image of the shared edge. The flat option folds it back by 180° onto
/// the same face, mirroring `p` across the shared edge. Both agree with `p`
/// on the shared corners.
pub fn extend_over_edge(p: &Placement, dir: Direction) -> (Placement, Placement) {
    let normal = p.face().axis;
    let (dx, dy) = dir.offset();
    let mut quarter = [CubeCorner::default(); 4];
    let mut flat = [CubeCorner::default(); 4];
    for (i, &(cx, cy)) in SQUARE_CORNERS.iter().enumerate() {
        // Corner of the neighbor, expressed in the frame of `p`'s square.
        let (px, py) = (cx + dx, cy + dy);
        if let Some(j) = square_corner_index(px, py) {
            quarter[i] = p.corners[j];
            flat[i] = p.corners[j];
        } else {
            let near = square_corner_index(px - dx, py - dy).expect("edge corner");
            let mirror = square_corner_index(px - 2 * dx, py - 2 * dy).expect("far corner");
            quarter[i] = p.corners[near].flip(normal);
            flat[i] = p.corners[mirror];
        }
    }
    (Placement { corners: quarter }, Placement { corners: flat })
}

/// Precomputed placement alphabet with the extension relation, indexed by
/// `u8` for compact search states.
#[derive(Clone, Debug)]
pub struct PlacementTable {
    placements: Vec<Placement>,
    faces: Vec<FaceId>,
    /// `extend[p][dir] = (quarter, flat)` as indices.
    extend: Vec<[(u8, u8); 4]>,
}

impl PlacementTable {
    pub fn new() -> Self {
        let placements = all_placements();
        let faces = placements.iter().map(Placement::face).collect();
        let index = |q: &Placement| placements.binary_search(q).expect("valid") as u8;
        let extend = placements
            .iter()
            .map(|p| {
                let mut row = [(0u8, 0u8); 4];
                for dir in Direction::ALL {
                    let (q, f) = extend_over_edge(p, dir);
                    row[dir.index()] = (index(&q), index(&f));
                }
                row
            })
            .collect();
        PlacementTable { placements, faces, extend }
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn placement(&self, idx: u8) -> Placement {
        self.placements[idx as usize]
    }

    pub fn face(&self, idx: u8) -> FaceId {
        self.faces[idx as usize]
    }

    pub fn index_of(&self, p: &Placement) -> u8 {
        self.placements.binary_search(p).expect("valid placement") as u8
    }

    pub fn extend(&self, idx: u8, dir: Direction) -> (u8, u8) {
        self.extend[idx as usize][dir.index()]
    }
}

impl Default for PlacementTable {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: u8, y: u8, z: u8) -> CubeCorner {
        CubeCorner::new(x, y, z)
    }

    #[test]
    fn forty_eight_placements() {
        let all = all_placements();
        assert_eq!(all.len(), 48);
        assert!(all.contains(&Placement::BOTTOM));
        // 8 per face: 4 rotations x 2 reflections.
        for f in FaceId::ALL {
            assert_eq!(all.iter().filter(|p| p.face() == f).count(), 8);
        }
    }

    #[test]
    fn faces_of_examples() {
        assert_eq!(face_of(&Placement::BOTTOM), FaceId::new(Axis::Z, 0));
        let west = Placement::new([c(0, 0, 0), c(0, 1, 0), c(0, 1, 1), c(0, 0, 1)]).unwrap();
        assert_eq!(face_of(&west), FaceId::new(Axis::X, 0));
        let mut rotated = Placement::BOTTOM.corners;
        rotated.rotate_left(1);
        assert_eq!(face_of(&Placement::new(rotated).unwrap()), face_of(&Placement::BOTTOM));
    }

    #[test]
    fn east_extension_of_bottom() {
        let (quarter, flat) = extend_over_edge(&Placement::BOTTOM, Direction::E);
        assert_eq!(quarter.face(), FaceId::new(Axis::X, 1));
        assert_eq!(flat.face(), FaceId::new(Axis::Z, 0));
        // Flat option: the far corners land on the western corners of p.
        assert_eq!(flat.corners[1], Placement::BOTTOM.corners[0]);
        assert_eq!(flat.corners[2], Placement::BOTTOM.corners[3]);
        assert_eq!(quarter.corners, [c(1, 0, 0), c(1, 0, 1), c(1, 1, 1), c(1, 1, 0)]);
    }

    #[test]
    fn flat_is_an_involution() {
        for p in all_placements() {
            for dir in Direction::ALL {
                let (_, flat) = extend_over_edge(&p, dir);
                let (_, back) = extend_over_edge(&flat, dir.opposite());
                assert_eq!(back, p);
                let (_, twice) = extend_over_edge(&flat, dir);
                assert_eq!(twice, p);
            }
        }
    }

    #[test]
    fn extension_matches_filtered_alphabet() {
        let all = all_placements();
        for p in &all {
            for dir in Direction::ALL {
                let (dx, dy) = dir.offset();
                // Shared corners: neighbor corner k sits at offset k + dir in p's frame.
                let agrees = |q: &Placement| {
                    SQUARE_CORNERS.iter().enumerate().all(|(k, &(cx, cy))| match p.corner_at(cx + dx, cy + dy) {
                        Some(img) => q.corners[k] == img,
                        None => true,
                    })
                };
                let mut expected: Vec<Placement> = all.iter().copied().filter(agrees).collect();
                let (q, f) = extend_over_edge(p, dir);
                assert_ne!(q, f);
                let mut got = alloc::vec![q, f];
                expected.sort();
                got.sort();
                assert_eq!(expected, got, "p={p} dir={dir}");
                // The quarter face meets face_of(p) in exactly one cube edge.
                let shared = q.face().corners().filter(|x| p.face().contains(*x)).count();
                assert_eq!(shared, 2);
                assert_ne!(q.face(), p.face());
            }
        }
    }

    #[test]
    fn table_is_consistent() {
        let t = PlacementTable::new();
        assert_eq!(t.len(), 48);
        for i in 0..48u8 {
            let p = t.placement(i);
            assert_eq!(t.index_of(&p), i);
            assert_eq!(p.index(), i as usize);
            for dir in Direction::ALL {
                let (q, f) = t.extend(i, dir);
                let (eq, ef) = extend_over_edge(&p, dir);
                assert_eq!(t.placement(q), eq);
                assert_eq!(t.placement(f), ef);
            }
        }
    }

    #[test]
    fn die_numbers_are_opposite_sum_seven() {
        let mut seen = [false; 7];
        for f in FaceId::ALL {
            assert_eq!(f.die_number() + f.opposite().die_number(), 7);
            seen[f.die_number() as usize] = true;
        }
        assert!(seen[1..].iter().all(|s| *s));
    }
}
