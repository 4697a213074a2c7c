//! Folding away the rows and columns around a hole.
//!
//! Columns left and right of the hole are folded by 180° one at a time onto
//! the column directly beside it, then the rows above and below likewise.
//! Folding merges layers: a square is present if any layer has it, and an
//! edge is present if any layer has both incident squares joined by it.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::holes::Hole;
use crate::polyomino::{GridPoint, LatticeEdge, Polyomino, ShapeError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoldLine {
    /// The vertical line `x = c`.
    Vertical(i32),
    /// The horizontal line `y = c`.
    Horizontal(i32),
}

/// Which side of the line is folded over onto the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoldSide {
    /// Squares with smaller coordinates than the line move.
    Low,
    /// Squares with larger coordinates than the line move.
    High,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FoldStep {
    pub line: FoldLine,
    pub side: FoldSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTranscript {
    pub steps: Vec<FoldStep>,
    pub result: Polyomino,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("hole at {0} has no material on some side")]
    NotApplicable(GridPoint),
    #[error("folded shape is invalid: {0}")]
    Shape(#[from] ShapeError),
}

/// Reflects everything on the moving side of the line onto the other side
/// and merges the layers.
pub fn apply_fold(p: &Polyomino, step: FoldStep) -> Result<Polyomino, ShapeError> {
    let moves = |s: GridPoint| match (step.line, step.side) {
        (FoldLine::Vertical(c), FoldSide::Low) => s.x < c,
        (FoldLine::Vertical(c), FoldSide::High) => s.x >= c,
        (FoldLine::Horizontal(c), FoldSide::Low) => s.y < c,
        (FoldLine::Horizontal(c), FoldSide::High) => s.y >= c,
    };
    let reflect_square = |s: GridPoint| {
        if !moves(s) {
            return s;
        }
        match step.line {
            FoldLine::Vertical(c) => GridPoint::new(2 * c - 1 - s.x, s.y),
            FoldLine::Horizontal(c) => GridPoint::new(s.x, 2 * c - 1 - s.y),
        }
    };
    let squares: BTreeSet<GridPoint> = p.squares().iter().map(|s| reflect_square(*s)).collect();
    // Present edges of the image: any layer's present edge that does not
    // cross the fold line.
    let mut present: BTreeSet<LatticeEdge> = BTreeSet::new();
    for e in p.present_edges() {
        let (s, t) = e.squares();
        if moves(s) != moves(t) {
            continue;
        }
        let (s2, t2) = (reflect_square(s), reflect_square(t));
        let (dx, dy) = (t2.x - s2.x, t2.y - s2.y);
        let dir = crate::cube::Direction::from_offset(dx, dy).expect("adjacent");
        present.insert(LatticeEdge::of_square(s2, dir));
    }
    let mut slits = BTreeSet::new();
    for &s in &squares {
        for dir in [crate::cube::Direction::E, crate::cube::Direction::N] {
            let e = LatticeEdge::of_square(s, dir);
            if squares.contains(&s.step(dir)) && !present.contains(&e) {
                slits.insert(e);
            }
        }
    }
    Polyomino::from_sets(squares, slits)
}

/// Folds the columns and rows around `h` onto those directly beside it.
pub fn reduce_single_hole(p: &Polyomino, h: &Hole) -> Result<ReductionTranscript, ReductionError> {
    let b = p.bounds();
    let (hx0, hx1, hy0, hy1) = (h.min_x(), h.max_x(), h.min_y(), h.max_y());
    // Columns kept: hx0-1 ..= hx1 (as square x), rows hy0-1 ..= hy1.
    if hx0 - 1 < b.min_x || hx1 + 1 > b.max_x || hy0 - 1 < b.min_y || hy1 + 1 > b.max_y {
        return Err(ReductionError::NotApplicable(h.anchor));
    }
    let mut steps = Vec::new();
    for c in b.min_x + 1..hx0 {
        steps.push(FoldStep { line: FoldLine::Vertical(c), side: FoldSide::Low });
    }
    for c in (hx1 + 1..b.max_x).rev() {
        steps.push(FoldStep { line: FoldLine::Vertical(c), side: FoldSide::High });
    }
    for c in b.min_y + 1..hy0 {
        steps.push(FoldStep { line: FoldLine::Horizontal(c), side: FoldSide::Low });
    }
    for c in (hy1 + 1..b.max_y).rev() {
        steps.push(FoldStep { line: FoldLine::Horizontal(c), side: FoldSide::High });
    }
    let result = replay(p, &steps)?;
    Ok(ReductionTranscript { steps, result })
}

pub fn replay(p: &Polyomino, steps: &[FoldStep]) -> Result<Polyomino, ShapeError> {
    let mut cur = p.clone();
    for s in steps {
        cur = apply_fold(&cur, *s)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holes::{classify_hole, holes, HoleClass};
    use crate::polyomino::Bounds;

    fn gp(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn rect_minus(w: i32, h: i32, missing: &[(i32, i32)]) -> Polyomino {
        let b = Bounds { min_x: 0, min_y: 0, max_x: w, max_y: h };
        Polyomino::new(b.squares().filter(|s| !missing.contains(&(s.x, s.y))), []).unwrap()
    }

    #[test]
    fn domino_hole_in_five_by_five() {
        let p = rect_minus(5, 5, &[(2, 2), (2, 3)]);
        let h = &holes(&p)[0];
        let t = reduce_single_hole(&p, h).unwrap();
        let b = t.result.bounds();
        assert_eq!((b.width(), b.height()), (3, 4));
        assert_eq!(t.result.len(), 10);
        assert_eq!(replay(&p, &t.steps).unwrap(), t.result);
        let hs = holes(&t.result);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].squares.len(), 2);
    }

    #[test]
    fn fixed_point() {
        let p = rect_minus(3, 3, &[(1, 1)]);
        let t = reduce_single_hole(&p, &holes(&p)[0]).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.result, p);
    }

    #[test]
    fn l_tromino_hole_stays_nonbasic() {
        let p = rect_minus(4, 4, &[(1, 1), (2, 1), (1, 2)]);
        let h = &holes(&p)[0];
        assert_eq!(classify_hole(h), HoleClass::NonBasic);
        let t = reduce_single_hole(&p, h).unwrap();
        let hs = holes(&t.result);
        assert_eq!(hs.len(), 1);
        assert_eq!(classify_hole(&hs[0]), HoleClass::NonBasic);
    }

    #[test]
    fn slit_reduction_keeps_the_slit() {
        // Straight slit of size 3 inside a 6x7 rectangle.
        let mut slits = Vec::new();
        for y in 2..5 {
            slits.push(LatticeEdge::new(gp(3, y), gp(3, y + 1)).unwrap());
        }
        let b = Bounds { min_x: 0, min_y: 0, max_x: 6, max_y: 7 };
        let p = Polyomino::new(b.squares(), slits).unwrap();
        let h = &holes(&p)[0];
        let t = reduce_single_hole(&p, h).unwrap();
        let rb = t.result.bounds();
        assert_eq!((rb.width(), rb.height()), (2, 5));
        let hs = holes(&t.result);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].slits.len(), 3);
    }
}
