//! Structural properties every consistent mapping satisfies, as checks that
//! report violations instead of asserting.
//!
//! These are used to cross-check the search: a violation on a mapping the
//! search produced points at a bug in the search, not at the shape.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::crease::{
    hole_corner_images, hole_fold_kind, kind_of_cycle, pattern_of, CreasePattern, FoldKindError, HoleFoldKind,
    Magnitude,
};
use crate::cube::FaceId;
use crate::holes::{classify_hole, gap_metrics, holes, Hole, HoleClass};
use crate::polyomino::{GridPoint, LatticeEdge, Polyomino};
use crate::search::Mapping;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Four squares around a grid point, connected among themselves, cover
    /// at most three faces.
    CornerFaces,
    /// Around an interior grid point: at most two faces, and a collinear
    /// pair of incident creases is flat.
    InteriorPoint,
    /// In a solid sub-rectangle, collinear creases share a magnitude and all
    /// horizontal or all vertical creases are flat.
    RectangleDichotomy,
    /// Hole edges never all map to one cube edge.
    HoleNotOnOneEdge,
    /// Creases around a non-trivially folded unit-square hole.
    SquareHoleCreases,
    /// Squares across a size-1 slit still agree on their shared corners.
    SlitTransparency,
    /// Two separated basic holes are not both folded non-trivially.
    HolePairFolds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub at: GridPoint,
    pub detail: String,
}

fn violation(check: Check, at: GridPoint, detail: String) -> Violation {
    Violation { check, at, detail }
}

/// Runs every check that applies to `m` as a consistent mapping of `p`.
pub fn audit_mapping(p: &Polyomino, m: &Mapping) -> Vec<Violation> {
    let pat = pattern_of(p, m);
    let hs = holes(p);
    let mut out = Vec::new();
    out.extend(corner_faces(p, m));
    out.extend(interior_points(p, m, &pat));
    out.extend(rectangle_dichotomy(p, &pat));
    for h in &hs {
        out.extend(hole_not_on_one_edge(p, m, h));
        out.extend(square_hole_creases(m, &pat, h));
        out.extend(slit_transparency(m, h));
    }
    out.extend(hole_pair_folds(p, m, &hs));
    out
}

fn corner_points(p: &Polyomino) -> BTreeSet<GridPoint> {
    p.squares().iter().flat_map(|s| [*s, s.offset(1, 0), s.offset(1, 1), s.offset(0, 1)]).collect()
}

/// Squares around grid point `v`: SW, SE, NE, NW of it.
fn around(v: GridPoint) -> [GridPoint; 4] {
    [v.offset(-1, -1), v.offset(0, -1), v, v.offset(-1, 0)]
}

/// Edges at `v` between consecutive squares of [`around`]: S, E, N, W arms.
fn arms(v: GridPoint) -> [LatticeEdge; 4] {
    let e = |a: GridPoint, b: GridPoint| LatticeEdge::new(a, b).expect("unit");
    [e(v, v.offset(0, -1)), e(v, v.offset(1, 0)), e(v, v.offset(0, 1)), e(v, v.offset(-1, 0))]
}

fn distinct_faces(m: &Mapping, squares: &[GridPoint]) -> usize {
    squares.iter().filter_map(|s| m.face(*s)).collect::<BTreeSet<FaceId>>().len()
}

pub fn corner_faces(p: &Polyomino, m: &Mapping) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in corner_points(p) {
        let sq = around(v);
        if !sq.iter().all(|s| p.contains(*s)) {
            continue;
        }
        // Connected iff at most one of the four arms is missing.
        let missing = arms(v).iter().filter(|e| !p.is_present(e)).count();
        if missing > 1 {
            continue;
        }
        let n = distinct_faces(m, &sq);
        if n > 3 {
            out.push(violation(Check::CornerFaces, v, format!("{n} faces around {v}")));
        }
    }
    out
}

pub fn interior_points(p: &Polyomino, m: &Mapping, pat: &CreasePattern) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in corner_points(p) {
        if !p.is_interior_point(v) {
            continue;
        }
        let n = distinct_faces(m, &around(v));
        if n > 2 {
            out.push(violation(Check::InteriorPoint, v, format!("{n} faces around interior point")));
        }
        let [s, e, nn, w] = arms(v);
        let vertical_pair = pat.is_flat(&s) && pat.is_flat(&nn);
        let horizontal_pair = pat.is_flat(&e) && pat.is_flat(&w);
        if !vertical_pair && !horizontal_pair {
            out.push(violation(Check::InteriorPoint, v, "no collinear flat pair".into()));
        }
    }
    out
}

/// Every solid sub-rectangle of at least 2x2 squares whose interior edges
/// are all present.
pub fn solid_subrectangles(p: &Polyomino) -> Vec<(GridPoint, GridPoint)> {
    let b = p.bounds();
    let mut out = Vec::new();
    for x0 in b.min_x..b.max_x {
        for y0 in b.min_y..b.max_y {
            for x1 in x0 + 2..=b.max_x {
                for y1 in y0 + 2..=b.max_y {
                    if is_solid(p, x0, y0, x1, y1) {
                        out.push((GridPoint::new(x0, y0), GridPoint::new(x1, y1)));
                    }
                }
            }
        }
    }
    out
}

fn is_solid(p: &Polyomino, x0: i32, y0: i32, x1: i32, y1: i32) -> bool {
    for x in x0..x1 {
        for y in y0..y1 {
            let s = GridPoint::new(x, y);
            if !p.contains(s) {
                return false;
            }
            if x + 1 < x1 && !p.is_present(&LatticeEdge::of_square(s, crate::cube::Direction::E)) {
                return false;
            }
            if y + 1 < y1 && !p.is_present(&LatticeEdge::of_square(s, crate::cube::Direction::N)) {
                return false;
            }
        }
    }
    true
}

pub fn rectangle_dichotomy(p: &Polyomino, pat: &CreasePattern) -> Vec<Violation> {
    let mut out = Vec::new();
    for (lo, hi) in solid_subrectangles(p) {
        let mut vertical_all_flat = true;
        let mut horizontal_all_flat = true;
        // Vertical creases on the interior lines x = lo.x+1 .. hi.x-1.
        for x in lo.x + 1..hi.x {
            let line: Vec<Magnitude> = (lo.y..hi.y)
                .map(|y| {
                    let e = LatticeEdge::new(GridPoint::new(x, y), GridPoint::new(x, y + 1)).expect("unit");
                    pat.get(&e).expect("interior edge")
                })
                .collect();
            if line.windows(2).any(|w| w[0] != w[1]) {
                out.push(violation(Check::RectangleDichotomy, lo, format!("vertical line x={x} mixes magnitudes")));
            }
            vertical_all_flat &= line.iter().all(|m| *m == Magnitude::Flat);
        }
        for y in lo.y + 1..hi.y {
            let line: Vec<Magnitude> = (lo.x..hi.x)
                .map(|x| {
                    let e = LatticeEdge::new(GridPoint::new(x, y), GridPoint::new(x + 1, y)).expect("unit");
                    pat.get(&e).expect("interior edge")
                })
                .collect();
            if line.windows(2).any(|w| w[0] != w[1]) {
                out.push(violation(Check::RectangleDichotomy, lo, format!("horizontal line y={y} mixes magnitudes")));
            }
            horizontal_all_flat &= line.iter().all(|m| *m == Magnitude::Flat);
        }
        if !vertical_all_flat && !horizontal_all_flat {
            out.push(violation(Check::RectangleDichotomy, lo, format!("neither direction all flat in {lo}..{hi}")));
        }
    }
    out
}

pub fn hole_not_on_one_edge(p: &Polyomino, m: &Mapping, h: &Hole) -> Vec<Violation> {
    match hole_fold_kind(p, m, h) {
        Err(FoldKindError::InternalInvariantViolation(at)) => {
            alloc::vec![violation(Check::HoleNotOnOneEdge, at, "hole edges on one cube edge".into())]
        }
        _ => Vec::new(),
    }
}

/// Radiating creases of a unit-square hole at `s`, two per hole corner, in
/// the cyclic corner order SW, SE, NE, NW of the hole.
pub fn square_hole_arms(s: GridPoint) -> [[LatticeEdge; 2]; 4] {
    let e = |a: GridPoint, b: GridPoint| LatticeEdge::new(a, b).expect("unit");
    let (a, b, c, d) = (s, s.offset(1, 0), s.offset(1, 1), s.offset(0, 1));
    [
        [e(a, a.offset(-1, 0)), e(a, a.offset(0, -1))],
        [e(b, b.offset(1, 0)), e(b, b.offset(0, -1))],
        [e(c, c.offset(1, 0)), e(c, c.offset(0, 1))],
        [e(d, d.offset(-1, 0)), e(d, d.offset(0, 1))],
    ]
}

pub fn square_hole_creases(m: &Mapping, pat: &CreasePattern, h: &Hole) -> Vec<Violation> {
    if classify_hole(h) != HoleClass::UnitSquare {
        return Vec::new();
    }
    let Ok(img) = hole_corner_images(m, h) else {
        return Vec::new();
    };
    if kind_of_cycle(&img) != Some(HoleFoldKind::LShape) {
        return Vec::new();
    }
    let s = *h.squares.iter().next().expect("one square");
    let arms = square_hole_arms(s);
    let glued = if img[0] == img[2] { [0, 2] } else { [1, 3] };
    let mut flat = Vec::new();
    for (i, pair) in arms.iter().enumerate() {
        for e in pair {
            if pat.is_flat(e) {
                flat.push((i, *e));
            }
        }
    }
    let ok = flat.len() == 2
        && flat[0].0 == glued[0]
        && flat[1].0 == glued[1]
        && flat[0].1.is_horizontal() == flat[1].1.is_horizontal();
    if ok {
        Vec::new()
    } else {
        alloc::vec![violation(
            Check::SquareHoleCreases,
            h.anchor,
            format!("flat arms {:?} with glued corners {:?}", flat.iter().map(|f| f.0).collect::<Vec<_>>(), glued),
        )]
    }
}

pub fn slit_transparency(m: &Mapping, h: &Hole) -> Vec<Violation> {
    if classify_hole(h) != HoleClass::Slit1 {
        return Vec::new();
    }
    let e = *h.slits.iter().next().expect("one slit");
    let (s, t) = e.squares();
    let agree = [e.a(), e.b()]
        .into_iter()
        .all(|q| m.corner_image(s, q).is_some() && m.corner_image(s, q) == m.corner_image(t, q));
    if agree {
        Vec::new()
    } else {
        alloc::vec![violation(Check::SlitTransparency, h.anchor, format!("squares across {e} disagree"))]
    }
}

/// True when the two-hole configuration meets the hypotheses under which
/// not both holes can fold non-trivially.
pub fn separated_hole_pair(p: &Polyomino, hs: &[Hole]) -> bool {
    if hs.len() != 2 {
        return false;
    }
    let allowed = |c: HoleClass| matches!(c, HoleClass::UnitSquare | HoleClass::LSlit2 { .. } | HoleClass::USlit3(_));
    if !hs.iter().all(|h| allowed(classify_hole(h))) {
        return false;
    }
    let g = gap_metrics(&hs[0], &hs[1]);
    if !matches!((g.rows_between, g.cols_between), (Some(r), Some(c)) if r >= 1 && c >= 1) {
        return false;
    }
    let x0 = hs.iter().map(Hole::min_x).min().expect("two");
    let x1 = hs.iter().map(Hole::max_x).max().expect("two");
    let y0 = hs.iter().map(Hole::min_y).min().expect("two");
    let y1 = hs.iter().map(Hole::max_y).max().expect("two");
    (x0..x1).all(|x| {
        (y0..y1).all(|y| {
            let s = GridPoint::new(x, y);
            p.contains(s) || hs.iter().any(|h| h.squares.contains(&s))
        })
    })
}

pub fn hole_pair_folds(p: &Polyomino, m: &Mapping, hs: &[Hole]) -> Vec<Violation> {
    if !m.is_covering() || !separated_hole_pair(p, hs) {
        return Vec::new();
    }
    let both = hs.iter().all(|h| hole_fold_kind(p, m, h) == Ok(HoleFoldKind::LShape));
    if both {
        alloc::vec![violation(Check::HolePairFolds, hs[0].anchor, "both holes folded non-trivially".into())]
    } else {
        Vec::new()
    }
}
