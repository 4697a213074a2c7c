//! Crease magnitudes and hole fold kinds derived from a mapping.

use alloc::collections::BTreeMap;

use crate::cube::{CubeCorner, Direction};
use crate::holes::{classify_hole, Hole, HoleClass};
use crate::polyomino::{GridPoint, LatticeEdge, Polyomino};
use crate::search::Mapping;

/// Fold magnitude of an interior crease; the sign is not modeled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Magnitude {
    /// ±90°: the two squares lie on different faces.
    Quarter,
    /// ±180°: the two squares lie on the same face.
    Flat,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CreasePattern {
    pub magnitudes: BTreeMap<LatticeEdge, Magnitude>,
}

impl CreasePattern {
    pub fn get(&self, e: &LatticeEdge) -> Option<Magnitude> {
        self.magnitudes.get(e).copied()
    }

    pub fn is_flat(&self, e: &LatticeEdge) -> bool {
        self.get(e) == Some(Magnitude::Flat)
    }
}

/// Magnitude of every interior present edge under `m`.
///
/// Panics if `m` does not place every square of `p`.
pub fn pattern_of(p: &Polyomino, m: &Mapping) -> CreasePattern {
    let magnitudes = p
        .present_edges()
        .map(|e| {
            let (s, t) = e.squares();
            let same = m.face(s).expect("square placed") == m.face(t).expect("square placed");
            (e, if same { Magnitude::Flat } else { Magnitude::Quarter })
        })
        .collect();
    CreasePattern { magnitudes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HoleFoldKind {
    /// The hole boundary maps onto the boundary of one face.
    Trivial,
    /// One diagonal pair of hole corners is glued; the boundary maps to two
    /// cube edges forming an L.
    LShape,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FoldKindError {
    #[error("fold kind is defined for unit-square holes, L-slits and U-slits, not {0}")]
    Unsupported(HoleClass),
    #[error("square {0} is not placed by the mapping")]
    Unplaced(GridPoint),
    #[error("all edges of the hole at {0} map to a single cube edge")]
    InternalInvariantViolation(GridPoint),
}

/// The four hole corners in cyclic order, with the squares whose placement
/// gives each corner's image as seen from outside the hole.
///
/// `(corner, witness square)` pairs; corners 0 and 2 form one diagonal.
pub fn hole_corner_frame(h: &Hole) -> Result<[(GridPoint, GridPoint); 4], FoldKindError> {
    let class = classify_hole(h);
    match class {
        HoleClass::UnitSquare => {
            let s = *h.squares.iter().next().expect("one square");
            let below = s.offset(0, -1);
            let above = s.offset(0, 1);
            Ok([(s, below), (s.offset(1, 0), below), (s.offset(1, 1), above), (s.offset(0, 1), above)])
        }
        HoleClass::USlit3(open) => {
            // The flap is the square enclosed on three sides.
            let e = h.slits.iter().next().expect("three slits");
            let (s, t) = e.squares();
            let flap =
                if Direction::ALL.iter().filter(|d| h.slits.contains(&LatticeEdge::of_square(s, **d))).count() == 3 {
                    s
                } else {
                    t
                };
            // Corners on the closed side are seen from the square beyond it;
            // corners on the open side are tied to the flap through the opening.
            let beyond = flap.step(open.opposite());
            let corners = [flap, flap.offset(1, 0), flap.offset(1, 1), flap.offset(0, 1)];
            let mut out = [(flap, flap); 4];
            for (i, c) in corners.into_iter().enumerate() {
                let on_closed_side = corner_side(flap, c, open.opposite());
                out[i] = (c, if on_closed_side { beyond } else { flap });
            }
            Ok(out)
        }
        HoleClass::LSlit2 { vertical, horizontal } => {
            let corner = lslit_corner(h);
            let (vx, vy) = vertical.offset();
            let (hx, hy) = horizontal.offset();
            // The square inside the L has the slit corner as one of its corners.
            let inside = GridPoint::new(corner.x.min(corner.x + hx), corner.y.min(corner.y + vy));
            let outside = GridPoint::new(corner.x.min(corner.x - hx), corner.y.min(corner.y - vy));
            let far = corner.offset(hx + vx, vy + hy);
            Ok([(corner, outside), (corner.offset(hx, hy), inside), (far, inside), (corner.offset(vx, vy), inside)])
        }
        other => Err(FoldKindError::Unsupported(other)),
    }
}

fn lslit_corner(h: &Hole) -> GridPoint {
    let mut it = h.slits.iter();
    let (e, f) = (it.next().expect("two"), it.next().expect("two"));
    if f.contains_point(e.a()) {
        e.a()
    } else {
        e.b()
    }
}

/// True iff corner `c` of square `s` lies on its side facing `d`.
fn corner_side(s: GridPoint, c: GridPoint, d: Direction) -> bool {
    match d {
        Direction::N => c.y == s.y + 1,
        Direction::S => c.y == s.y,
        Direction::E => c.x == s.x + 1,
        Direction::W => c.x == s.x,
    }
}

/// Images of the four hole corners in cyclic order.
pub fn hole_corner_images(m: &Mapping, h: &Hole) -> Result<[CubeCorner; 4], FoldKindError> {
    let frame = hole_corner_frame(h)?;
    let mut out = [CubeCorner::default(); 4];
    for (i, (c, sq)) in frame.into_iter().enumerate() {
        out[i] = m.corner_image(sq, c).ok_or(FoldKindError::Unplaced(sq))?;
    }
    Ok(out)
}

/// How the hole's boundary closes up under the mapping.
pub fn hole_fold_kind(_p: &Polyomino, m: &Mapping, h: &Hole) -> Result<HoleFoldKind, FoldKindError> {
    let img = hole_corner_images(m, h)?;
    kind_of_cycle(&img).ok_or(FoldKindError::InternalInvariantViolation(h.anchor))
}

/// Classifies a closed walk of four cube corners. `None` for the walk that
/// runs back and forth along one cube edge.
pub fn kind_of_cycle(img: &[CubeCorner; 4]) -> Option<HoleFoldKind> {
    let diag_a = img[0] == img[2];
    let diag_b = img[1] == img[3];
    match (diag_a, diag_b) {
        (false, false) => Some(HoleFoldKind::Trivial),
        (true, true) => None,
        _ => Some(HoleFoldKind::LShape),
    }
}
