//! SVG drawings of polyominoes, crease magnitudes and face labels.
//!
//! Cells are 40px. The outer boundary and hole boundaries are bold, slits
//! are white gaps, Quarter creases thin dotted and Flat creases thick dotted
//! purple. Face labels are die numbers. Only magnitudes are drawn; fold
//! signs are not modeled.

use std::collections::BTreeMap;
use std::fmt::Write;

use cubefold_core::crease::{CreasePattern, Magnitude};
use cubefold_core::{Direction, FaceId, GridPoint, LatticeEdge, Polyomino};

pub const CELL: i32 = 40;
const MARGIN: i32 = 20;

struct Frame {
    min_x: i32,
    max_y: i32,
}

impl Frame {
    fn px(&self, p: GridPoint) -> (i32, i32) {
        (MARGIN + (p.x - self.min_x) * CELL, MARGIN + (self.max_y - p.y) * CELL)
    }

    fn line(&self, out: &mut String, e: &LatticeEdge, attrs: &str) {
        let (x1, y1) = self.px(e.a());
        let (x2, y2) = self.px(e.b());
        writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {attrs}/>"#).unwrap();
    }
}

pub fn render_svg(
    p: &Polyomino,
    pattern: Option<&CreasePattern>,
    labels: Option<&BTreeMap<GridPoint, FaceId>>,
) -> String {
    let b = p.bounds();
    let frame = Frame { min_x: b.min_x, max_y: b.max_y };
    let width = 2 * MARGIN + b.width() * CELL;
    let height = 2 * MARGIN + b.height() * CELL;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();

    writeln!(out, r##"<g class="cells" fill="#f3ecd8" stroke="none">"##).unwrap();
    for s in p.squares() {
        let (x, y) = frame.px(s.offset(0, 1));
        writeln!(out, r#"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r#"<g class="creases" stroke-linecap="round">"#).unwrap();
    for e in p.present_edges() {
        let style = match pattern.and_then(|pat| pat.get(&e)) {
            None => r##"stroke="#c8c0a8" stroke-width="1""##,
            Some(Magnitude::Quarter) => r##"stroke="#555555" stroke-width="1.5" stroke-dasharray="2 4""##,
            Some(Magnitude::Flat) => r##"stroke="#7b2fa8" stroke-width="4" stroke-dasharray="5 5""##,
        };
        frame.line(&mut out, &e, style);
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r#"<g class="boundary" stroke="black" stroke-width="3" stroke-linecap="square">"#).unwrap();
    for s in p.squares() {
        for d in Direction::ALL {
            if !p.contains(s.step(d)) {
                frame.line(&mut out, &LatticeEdge::of_square(*s, d), "");
            }
        }
    }
    writeln!(out, "</g>").unwrap();

    if !p.slits().is_empty() {
        writeln!(out, r#"<g class="slits" stroke="black" stroke-width="1.5">"#).unwrap();
        for e in p.slits() {
            frame.line(&mut out, e, r#"stroke="white" stroke-width="5""#);
            frame.line(&mut out, e, r#"stroke-dasharray="1 3""#);
        }
        writeln!(out, "</g>").unwrap();
    }

    if let Some(labels) = labels {
        writeln!(
            out,
            r#"<g class="faces" font-family="sans-serif" font-size="18" text-anchor="middle" dominant-baseline="central">"#
        )
        .unwrap();
        for (s, f) in labels {
            let (x, y) = frame.px(*s);
            writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, x + CELL / 2, y - CELL / 2, f.die_number()).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubefold_core::crease::pattern_of;
    use cubefold_core::{extend_over_edge, search, Limits, Mapping, Placement};

    fn gp(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    #[test]
    fn ring_has_eight_cells_and_bold_hole() {
        let ring =
            Polyomino::new((0..3).flat_map(|x| (0..3).map(move |y| gp(x, y))).filter(|s| *s != gp(1, 1)), []).unwrap();
        let svg = render_svg(&ring, None, None);
        assert_eq!(svg.matches(r#"<rect x="#).count(), 8);
        // 12 outer and 4 hole boundary segments.
        let boundary = svg.split(r#"<g class="boundary""#).nth(1).unwrap().split("</g>").next().unwrap();
        assert_eq!(boundary.matches("<line").count(), 16);
        assert_eq!(svg, render_svg(&ring, None, None));
    }

    #[test]
    fn flat_domino() {
        let d = Polyomino::rectangle(2, 1).unwrap();
        let (_, flat) = extend_over_edge(&Placement::BOTTOM, Direction::E);
        let m = Mapping::new([(gp(0, 0), Placement::BOTTOM), (gp(1, 0), flat)]);
        let svg = render_svg(&d, Some(&pattern_of(&d, &m)), None);
        assert_eq!(svg.matches(r#"stroke-width="4" stroke-dasharray"#).count(), 1);
    }

    #[test]
    fn cross_labels_are_six_distinct_faces() {
        let cross = Polyomino::new([gp(1, 0), gp(1, 1), gp(1, 2), gp(1, 3), gp(0, 2), gp(2, 2)], []).unwrap();
        let w = search(&cross, &Limits::default()).witnesses.remove(0);
        let labels: BTreeMap<GridPoint, FaceId> = w.entries().iter().map(|(s, pl)| (*s, pl.face())).collect();
        let svg = render_svg(&cross, Some(&pattern_of(&cross, &w)), Some(&labels));
        let mut numbers: Vec<&str> =
            svg.split("<text").skip(1).map(|t| t.split('>').nth(1).unwrap().trim_end_matches("</text")).collect();
        numbers.sort();
        assert_eq!(numbers, ["1", "2", "3", "4", "5", "6"]);
    }
}
