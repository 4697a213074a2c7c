//! Shape files: JSON and two ASCII layouts.
//!
//! JSON is `{"squares": [[x, y], ...], "slits": [[[x1, y1], [x2, y2]], ...]}`
//! with `slits` optional. A slit may also be written `{"a": [x1, y1], "b": [x2, y2]}`.
//!
//! Compact ASCII draws one character per square, rows top to bottom, `#`
//! for a square and `.` for none. It cannot express slits.
//!
//! Expanded ASCII is a (2H+1) x (2W+1) character grid. Squares sit at odd
//! row and column positions. The position between two horizontally
//! adjacent squares holds `|` when the edge is present and a space when it
//! is a slit; vertically adjacent squares use `-`. Even-even positions may
//! hold `+` and are otherwise ignored, as are marks on the outer boundary.

use std::collections::BTreeSet;
use std::path::Path;

use cubefold_core::{GridPoint, LatticeEdge, Polyomino, ShapeError};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Ascii,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid shape: {0}")]
    Validation(#[from] ShapeError),
}

fn syntax(msg: impl Into<String>) -> ParseError {
    ParseError::Syntax(msg.into())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ShapeFile {
    squares: Vec<[i32; 2]>,
    #[serde(default)]
    slits: Vec<SlitRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SlitRepr {
    Pair([[i32; 2]; 2]),
    Named(NamedSlit),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NamedSlit {
    a: [i32; 2],
    b: [i32; 2],
}

/// Picks the format from the file extension, falling back to the content.
pub fn detect(path: Option<&Path>, text: &str) -> Format {
    match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        Some("txt") | Some("ascii") => Format::Ascii,
        _ if text.trim_start().starts_with('{') => Format::Json,
        _ => Format::Ascii,
    }
}

pub fn parse(text: &str, format: Format) -> Result<Polyomino, ParseError> {
    match format {
        Format::Json => parse_json(text),
        Format::Ascii => parse_ascii(text),
    }
}

pub fn parse_json(text: &str) -> Result<Polyomino, ParseError> {
    let file: ShapeFile = serde_json::from_str(text).map_err(|e| syntax(e.to_string()))?;
    let squares = file.squares.iter().map(|[x, y]| GridPoint::new(*x, *y));
    let mut slits = Vec::with_capacity(file.slits.len());
    for s in &file.slits {
        let (a, b) = match s {
            SlitRepr::Pair([a, b]) => (a, b),
            SlitRepr::Named(n) => (&n.a, &n.b),
        };
        let e = LatticeEdge::new(GridPoint::new(a[0], a[1]), GridPoint::new(b[0], b[1]))
            .ok_or(ShapeError::NotUnitEdge(GridPoint::new(a[0], a[1]), GridPoint::new(b[0], b[1])))?;
        slits.push(e);
    }
    Ok(Polyomino::new(squares, slits)?)
}

pub fn to_json(p: &Polyomino) -> String {
    let file = ShapeFile {
        squares: p.squares().iter().map(|s| [s.x, s.y]).collect(),
        slits: p.slits().iter().map(|e| SlitRepr::Pair([[e.a().x, e.a().y], [e.b().x, e.b().y]])).collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

/// Lines with trailing whitespace removed, without leading or trailing
/// blank lines.
fn rows(text: &str) -> Vec<&str> {
    let mut v: Vec<&str> = text.lines().map(str::trim_end).collect();
    while v.last().is_some_and(|l| l.is_empty()) {
        v.pop();
    }
    let first = v.iter().position(|l| !l.is_empty()).unwrap_or(v.len());
    v.drain(..first);
    v
}

pub fn parse_ascii(text: &str) -> Result<Polyomino, ParseError> {
    let lines = rows(text);
    if lines.is_empty() {
        return Err(ShapeError::Empty.into());
    }
    let compact = lines.iter().all(|l| l.chars().all(|c| c == '#' || c == '.'));
    if compact {
        parse_compact(&lines)
    } else {
        parse_expanded(&text.lines().map(str::trim_end).collect::<Vec<_>>())
    }
}

fn parse_compact(lines: &[&str]) -> Result<Polyomino, ParseError> {
    let width = lines[0].chars().count();
    if lines.iter().any(|l| l.chars().count() != width) {
        return Err(syntax("compact rows must all have the same length"));
    }
    let h = lines.len() as i32;
    let mut squares = Vec::new();
    for (r, line) in lines.iter().enumerate() {
        for (x, c) in line.chars().enumerate() {
            if c == '#' {
                squares.push(GridPoint::new(x as i32, h - 1 - r as i32));
            }
        }
    }
    Ok(Polyomino::new(squares, [])?)
}

fn parse_expanded(lines: &[&str]) -> Result<Polyomino, ParseError> {
    // Crop to the squares plus one boundary row and column on each side, so
    // blank boundary rows or columns trimmed by an editor do not matter.
    let chars: Vec<Vec<char>> = lines.iter().map(|l| l.chars().collect()).collect();
    let hashes = || {
        chars
            .iter()
            .enumerate()
            .flat_map(|(r, l)| l.iter().enumerate().filter(|(_, c)| **c == '#').map(move |(c, _)| (r, c)))
    };
    let (Some(r0), Some(r1)) = (hashes().map(|h| h.0).min(), hashes().map(|h| h.0).max()) else {
        return Err(ShapeError::Empty.into());
    };
    let c0 = hashes().map(|h| h.1).min().expect("nonempty");
    let c1 = hashes().map(|h| h.1).max().expect("nonempty");
    for (r, line) in chars.iter().enumerate() {
        for (c, ch) in line.iter().enumerate() {
            let inside = r + 1 >= r0 && r <= r1 + 1 && c + 1 >= c0 && c <= c1 + 1;
            if !inside && !matches!(ch, ' ' | '+' | '.') {
                return Err(syntax(format!("unexpected {ch:?} outside the shape at line {}, column {}", r + 1, c + 1)));
            }
        }
    }
    let (height, width) = (r1 - r0 + 3, c1 - c0 + 3);
    if height % 2 == 0 || width % 2 == 0 {
        return Err(syntax("squares must sit at every other row and column"));
    }
    let grid: Vec<Vec<char>> = (0..height)
        .map(|i| {
            (0..width)
                .map(|j| {
                    let (r, c) = ((r0 + i).checked_sub(1), (c0 + j).checked_sub(1));
                    r.zip(c).and_then(|(r, c)| chars.get(r).and_then(|l| l.get(c))).copied().unwrap_or(' ')
                })
                .collect()
        })
        .collect();
    let rows = grid.len();
    let h = ((rows - 1) / 2) as i32;
    // Grid position (r, c) of square (x, y) is (2(h-1-y)+1, 2x+1).
    let at = |r: usize, c: usize| grid[r][c];
    let mut squares = BTreeSet::new();
    for (r, row) in grid.iter().enumerate() {
        for (c, &ch) in row.iter().enumerate() {
            let allowed: &[char] = match (r % 2, c % 2) {
                (1, 1) => &['#', '.', ' '],
                (1, 0) => &['|', ' ', '.'],
                (0, 1) => &['-', ' ', '.'],
                _ => &['+', ' ', '.'],
            };
            if !allowed.contains(&ch) {
                return Err(syntax(format!("unexpected {ch:?} at line {}, column {}", r + 1, c + 1)));
            }
            if ch == '#' {
                squares.insert(GridPoint::new((c / 2) as i32, h - 1 - (r / 2) as i32));
            }
        }
    }
    let mut slits = BTreeSet::new();
    for &s in &squares {
        let (r, c) = ((2 * (h - 1 - s.y) + 1) as usize, (2 * s.x + 1) as usize);
        let east = GridPoint::new(s.x + 1, s.y);
        if squares.contains(&east) && at(r, c + 1) != '|' {
            slits.insert(LatticeEdge::of_square(s, cubefold_core::Direction::E));
        }
        let north = GridPoint::new(s.x, s.y + 1);
        if squares.contains(&north) && at(r - 1, c) != '-' {
            slits.insert(LatticeEdge::of_square(s, cubefold_core::Direction::N));
        }
    }
    Ok(Polyomino::from_sets(squares, slits)?)
}

/// Compact ASCII when the shape has no slits, expanded otherwise. The
/// drawing is relative to the bounding box.
pub fn to_ascii(p: &Polyomino) -> String {
    if p.slits().is_empty() {
        to_compact(p)
    } else {
        to_expanded(p)
    }
}

pub fn to_compact(p: &Polyomino) -> String {
    let b = p.bounds();
    let mut out = String::new();
    for y in (b.min_y..b.max_y).rev() {
        for x in b.min_x..b.max_x {
            out.push(if p.contains(GridPoint::new(x, y)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn to_expanded(p: &Polyomino) -> String {
    let b = p.bounds();
    let (w, h) = (b.width() as usize, b.height() as usize);
    let mut grid = vec![vec![' '; 2 * w + 1]; 2 * h + 1];
    let pos = |x: i32, y: i32| ((2 * (b.max_y - 1 - y) + 1) as usize, (2 * (x - b.min_x) + 1) as usize);
    for x in b.min_x..b.max_x {
        for y in b.min_y..b.max_y {
            let s = GridPoint::new(x, y);
            let (r, c) = pos(x, y);
            if !p.contains(s) {
                grid[r][c] = '.';
                continue;
            }
            grid[r][c] = '#';
            for (dr, dc) in [(0, 0), (0, 2), (2, 0), (2, 2)] {
                grid[r + dr - 1][c + dc - 1] = '+';
            }
            if p.is_present(&LatticeEdge::of_square(s, cubefold_core::Direction::E)) {
                grid[r][c + 1] = '|';
            }
            if p.is_present(&LatticeEdge::of_square(s, cubefold_core::Direction::N)) {
                grid[r - 1][c] = '-';
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
