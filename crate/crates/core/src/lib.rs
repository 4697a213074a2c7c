//! Decide, certify, or bound whether a polyomino with holes and slits folds
//! into a unit cube when creases follow lattice lines with fold angles of
//! ±90° or ±180°.
//!
//! * [`cube`]: cube corners, faces and square placements.
//! * [`polyomino`], [`holes`]: shapes, validation, symmetries, hole analysis.
//! * [`search`]: BFS search for consistent corner mappings (a necessary
//!   condition for folding).
//! * [`oracle`]: brute-force enumerator used to cross-check the search.
//! * [`rules`], [`reduce`]: theorem-based verdicts with provenance.
//! * [`crease`], [`audit`]: crease magnitudes, hole fold kinds and the
//!   structural properties every consistent mapping must satisfy.

#![no_std]

extern crate alloc;

pub mod audit;
pub mod crease;
pub mod cube;
pub mod holes;
pub mod oracle;
pub mod polyomino;
pub mod reduce;
pub mod rules;
pub mod search;

pub use cube::{all_placements, extend_over_edge, face_of, CubeCorner, Direction, FaceId, Placement};
pub use holes::{classify_hole, gap_metrics, holes, GapMetrics, Hole, HoleClass};
pub use polyomino::{fixed_polyominoes, GridPoint, LatticeEdge, Polyomino, ShapeError, Symmetry};
pub use rules::{classify, corroborate, Decision, Rule, Verdict};
pub use search::{bfs_order, check_necessary, search, Limits, Mapping, Necessary, SearchResult};
