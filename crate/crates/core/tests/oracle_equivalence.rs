use cubefold_core::oracle::{brute_force, brute_force_in_order, row_major, OracleLimits};
use cubefold_core::search::{search_with, Strategy};
use cubefold_core::*;

fn wide() -> Limits {
    Limits { max_states: 10_000_000, max_witnesses: usize::MAX }
}

fn oracle_wide() -> OracleLimits {
    OracleLimits { max_squares: 8, max_witnesses: usize::MAX }
}

/// Every polyomino with up to 5 squares, plus each shape with 4 or 5
/// squares cut along one interior edge when it stays connected.
fn corpus() -> Vec<Polyomino> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for p in fixed_polyominoes(n) {
            if n >= 4 {
                for e in p.present_edges().collect::<Vec<_>>() {
                    if let Ok(cut) = p.with_slit(e) {
                        out.push(cut);
                    }
                }
            }
            out.push(p);
        }
    }
    out
}

fn gp(x: i32, y: i32) -> GridPoint {
    GridPoint::new(x, y)
}

fn larger() -> Vec<Polyomino> {
    let ring =
        Polyomino::new((0..3).flat_map(|x| (0..3).map(move |y| gp(x, y))).filter(|s| *s != gp(1, 1)), []).unwrap();
    let cut_ring = ring.with_slit(LatticeEdge::new(gp(1, 0), gp(1, 1)).unwrap()).unwrap();
    vec![
        Polyomino::new([gp(1, 0), gp(1, 1), gp(1, 2), gp(1, 3), gp(0, 2), gp(2, 2)], []).unwrap(),
        Polyomino::new([gp(0, 0), gp(1, 0), gp(1, 1), gp(2, 1), gp(2, 2), gp(3, 2)], []).unwrap(),
        Polyomino::new([gp(0, 0), gp(1, 0), gp(2, 0), gp(3, 0), gp(1, 1), gp(2, 1), gp(1, -1)], []).unwrap(),
        Polyomino::rectangle(2, 3).unwrap(),
        Polyomino::rectangle(2, 4).unwrap(),
        Polyomino::rectangle(7, 1).unwrap(),
        ring,
        cut_ring,
    ]
}

#[test]
fn search_matches_brute_force() {
    let shapes: Vec<Polyomino> = corpus().into_iter().chain(larger()).collect();
    assert!(shapes.len() >= 50);
    assert!(shapes.iter().any(|p| !p.slits().is_empty()));
    for p in &shapes {
        let s = search(p, &wide());
        let o = brute_force(p, &oracle_wide()).unwrap();
        assert!(!s.truncated, "{p:?}");
        assert_eq!(s.consistent_exists, o.consistent_exists, "{p:?}");
        assert_eq!(s.covering_exists, o.covering_exists, "{p:?}");
        assert_eq!(s.consistent_count, o.consistent_count, "{p:?}");
        assert_eq!(s.witnesses, o.witnesses, "{p:?}");
    }
}

#[test]
fn frontier_search_decides_the_same() {
    for p in corpus().iter().chain(larger().iter()) {
        let full = search(p, &wide());
        let merged = search_with(p, &wide(), Strategy::Frontier);
        assert_eq!(full.consistent_exists, merged.consistent_exists);
        assert_eq!(full.covering_exists, merged.covering_exists, "{p:?}");
        if let Some(w) = merged.witnesses.first() {
            assert!(full.witnesses.contains(w));
        }
    }
}

#[test]
fn every_witness_is_consistent_and_covering() {
    for p in larger() {
        for w in search(&p, &wide()).witnesses {
            assert!(w.is_covering());
            assert!(w.is_consistent_for(&p));
            assert_eq!(w.len(), p.len());
        }
    }
}

#[test]
fn oracle_order_is_irrelevant() {
    for p in larger() {
        let base = brute_force(&p, &oracle_wide()).unwrap();
        let mut order = row_major(&p);
        order.reverse();
        let other = brute_force_in_order(&p, &order, &oracle_wide()).unwrap();
        assert_eq!(base.consistent_count, other.consistent_count);
        assert_eq!(base.witnesses, other.witnesses);
    }
}
