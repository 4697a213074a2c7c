use std::collections::BTreeSet;

use cubefold::format::{parse, parse_ascii, parse_json, to_ascii, to_compact, to_expanded, to_json, Format};
use cubefold_core::{GridPoint, LatticeEdge, Polyomino};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = Polyomino> {
    (1i32..6, 1i32..6, -3i32..3, -3i32..3)
        .prop_flat_map(|(w, h, ox, oy)| {
            let cells = (w * h) as usize;
            (
                Just((w, h, ox, oy)),
                proptest::collection::vec(any::<bool>(), cells),
                proptest::collection::vec(0u8..6, 2 * cells),
            )
        })
        .prop_filter_map("invalid shape", |((w, h, ox, oy), keep, cut)| {
            let squares: BTreeSet<GridPoint> = (0..w)
                .flat_map(|x| (0..h).map(move |y| GridPoint::new(x + ox, y + oy)))
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(s, _)| s)
                .collect();
            let base = Polyomino::from_sets(squares, BTreeSet::new()).ok()?;
            let slits: BTreeSet<LatticeEdge> =
                base.present_edges().zip(cut).filter(|(_, c)| *c == 0).map(|(e, _)| e).collect();
            Polyomino::from_sets(base.squares().clone(), slits).ok()
        })
}

proptest! {
    #[test]
    fn json_round_trip(p in shape()) {
        prop_assert_eq!(parse_json(&to_json(&p)).unwrap(), p);
    }

    #[test]
    fn ascii_round_trip(p in shape()) {
        let text = to_ascii(&p);
        let back = parse(&text, Format::Ascii).unwrap();
        prop_assert_eq!(&back, &p.normalized());
        prop_assert_eq!(to_ascii(&back), text);
    }

    #[test]
    fn expanded_covers_slit_free_shapes_too(p in shape()) {
        prop_assert_eq!(parse_ascii(&to_expanded(&p)).unwrap(), p.normalized());
        if p.slits().is_empty() {
            prop_assert_eq!(parse_ascii(&to_compact(&p)).unwrap(), p.normalized());
        }
    }
}
