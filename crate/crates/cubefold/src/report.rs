//! Machine-readable reports. Field order is fixed by the struct layout and
//! every collection is sorted, so equal inputs give byte-identical JSON.

use std::fmt::Write;

use cubefold_core::crease::{pattern_of, Magnitude};
use cubefold_core::oracle::{brute_force, OracleLimits};
use cubefold_core::rules::{Corroboration, CorroborationStatus, SearchSummary};
use cubefold_core::search::{search, Necessary};
use cubefold_core::{classify_hole, gap_metrics, holes, Hole, HoleClass, Limits, Mapping, Polyomino, Verdict};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub input: String,
    pub decision: &'static str,
    pub provenance: &'static str,
    pub notes: Vec<String>,
    pub holes: Vec<HoleReport>,
    pub search: SearchReport,
    pub witness: Option<WitnessReport>,
    pub oracle: Option<OracleReport>,
    pub corroboration: Option<CorroborationReport>,
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleReport {
    pub anchor: [i32; 2],
    pub class: &'static str,
    pub orientation: Option<&'static str>,
    pub squares: usize,
    pub slits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub holes: [usize; 2],
    pub rows_between: Option<i32>,
    pub cols_between: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolesReport {
    pub input: String,
    pub holes: Vec<HoleReport>,
    pub gaps: Vec<GapReport>,
}

/// `covering` is `None` when no search ran (a theorem decided without one).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub outcome: Option<&'static str>,
    pub states: u64,
    pub truncated: bool,
    pub covering: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceEntry {
    pub square: [i32; 2],
    pub face: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CreaseEntry {
    pub edge: [[i32; 2]; 2],
    pub magnitude: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub faces: Vec<FaceEntry>,
    pub creases: Vec<CreaseEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    /// `agrees`, `disagrees` or `skipped`.
    pub status: &'static str,
    pub detail: Option<String>,
    pub consistent: Option<u64>,
    pub covering: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorroborationReport {
    /// `agrees`, `unchecked` or `contradiction`.
    pub status: &'static str,
    pub detail: Option<String>,
}

pub fn outcome_str(n: Necessary) -> &'static str {
    match n {
        Necessary::Fail => "fail",
        Necessary::PassCovering => "pass_covering",
        Necessary::Inconclusive => "inconclusive",
    }
}

pub fn class_name(c: HoleClass) -> &'static str {
    match c {
        HoleClass::UnitSquare => "UnitSquare",
        HoleClass::Slit1 => "Slit1",
        HoleClass::StraightSlit2(_) => "StraightSlit2",
        HoleClass::LSlit2 { .. } => "LSlit2",
        HoleClass::USlit3(_) => "USlit3",
        HoleClass::NonBasic => "NonBasic",
    }
}

pub fn hole_report(h: &Hole) -> HoleReport {
    let class = classify_hole(h);
    HoleReport {
        anchor: [h.anchor.x, h.anchor.y],
        class: class_name(class),
        orientation: class.orientation(),
        squares: h.squares.len(),
        slits: h.slits.len(),
    }
}

pub fn holes_report(input: &str, p: &Polyomino) -> HolesReport {
    let hs = holes(p);
    let mut gaps = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            let g = gap_metrics(&hs[i], &hs[j]);
            gaps.push(GapReport { holes: [i, j], rows_between: g.rows_between, cols_between: g.cols_between });
        }
    }
    HolesReport { input: input.to_string(), holes: hs.iter().map(hole_report).collect(), gaps }
}

pub fn witness_report(p: &Polyomino, m: &Mapping) -> WitnessReport {
    let faces =
        m.entries().iter().map(|(s, pl)| FaceEntry { square: [s.x, s.y], face: pl.face().die_number() }).collect();
    let creases = pattern_of(p, m)
        .magnitudes
        .iter()
        .map(|(e, mag)| CreaseEntry {
            edge: [[e.a().x, e.a().y], [e.b().x, e.b().y]],
            magnitude: match mag {
                Magnitude::Quarter => "quarter",
                Magnitude::Flat => "flat",
            },
        })
        .collect();
    WitnessReport { faces, creases }
}

fn search_report(s: Option<&SearchSummary>) -> SearchReport {
    match s {
        Some(s) => SearchReport {
            outcome: Some(outcome_str(s.outcome)),
            states: s.states,
            truncated: s.truncated,
            covering: (!s.truncated).then_some(s.outcome == Necessary::PassCovering),
        },
        None => SearchReport { outcome: None, states: 0, truncated: false, covering: None },
    }
}

pub fn corroboration_report(c: &Corroboration) -> CorroborationReport {
    let (status, detail) = match &c.status {
        CorroborationStatus::Agrees => ("agrees", None),
        CorroborationStatus::Unchecked => ("unchecked", Some("search truncated".to_string())),
        CorroborationStatus::Contradiction(d) => ("contradiction", Some(d.clone())),
    };
    CorroborationReport { status, detail }
}

/// Runs the brute-force enumerator and compares it with the search.
pub fn oracle_report(p: &Polyomino, limits: &Limits) -> OracleReport {
    let olimits = OracleLimits { max_witnesses: limits.max_witnesses, ..OracleLimits::default() };
    let o = match brute_force(p, &olimits) {
        Ok(o) => o,
        Err(e) => {
            return OracleReport { status: "skipped", detail: Some(e.to_string()), consistent: None, covering: None }
        }
    };
    let s = search(p, limits);
    let detail = if s.truncated {
        Some("search truncated".to_string())
    } else if s.consistent_exists != o.consistent_exists || s.covering_exists != o.covering_exists {
        Some("existence differs".to_string())
    } else if s.witnesses != o.witnesses {
        Some("witness sets differ".to_string())
    } else {
        None
    };
    OracleReport {
        status: if detail.is_none() { "agrees" } else { "disagrees" },
        detail,
        consistent: Some(o.consistent_count),
        covering: Some(o.covering_count),
    }
}

/// Assembles the report. The search summary and witness come from the
/// verdict, or from the corroborating search when the verdict has none.
pub fn build(
    input: &str,
    p: &Polyomino,
    v: &Verdict,
    corroboration: Option<&Corroboration>,
    oracle: Option<OracleReport>,
    timing_ms: Option<u64>,
) -> Report {
    let summary = v.search.as_ref().or(corroboration.map(|c| &c.search));
    let witness = v.witness.as_ref().or(corroboration.and_then(|c| c.witness.as_ref()));
    Report {
        input: input.to_string(),
        decision: v.decision.as_str(),
        provenance: v.provenance.id(),
        notes: v.notes.clone(),
        holes: holes(p).iter().map(hole_report).collect(),
        search: search_report(summary),
        witness: witness.map(|m| witness_report(p, m)),
        oracle,
        corroboration: corroboration.map(corroboration_report),
        timing_ms,
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn is_contradiction(&self) -> bool {
        self.corroboration.as_ref().is_some_and(|c| c.status == "contradiction")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}: {} ({})", self.input, self.decision, self.provenance).unwrap();
        if self.holes.is_empty() {
            writeln!(out, "  holes: none").unwrap();
        }
        for h in &self.holes {
            let orient = h.orientation.map(|o| format!(" {o}")).unwrap_or_default();
            writeln!(out, "  hole at ({}, {}): {}{}", h.anchor[0], h.anchor[1], h.class, orient).unwrap();
        }
        if let Some(outcome) = self.search.outcome {
            let cut = if self.search.truncated { ", truncated" } else { "" };
            writeln!(out, "  search: {outcome}, {} states{cut}", self.search.states).unwrap();
        }
        if let Some(w) = &self.witness {
            let flat = w.creases.iter().filter(|c| c.magnitude == "flat").count();
            writeln!(out, "  witness: {} squares, {} creases ({} flat)", w.faces.len(), w.creases.len(), flat).unwrap();
        }
        if let Some(o) = &self.oracle {
            let detail = o.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default();
            writeln!(out, "  oracle: {}{detail}", o.status).unwrap();
        }
        if let Some(c) = &self.corroboration {
            let detail = c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default();
            writeln!(out, "  corroboration: {}{detail}", c.status).unwrap();
        }
        for n in &self.notes {
            writeln!(out, "  note: {n}").unwrap();
        }
        out
    }
}

impl HolesReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}: {} hole(s)", self.input, self.holes.len()).unwrap();
        for (i, h) in self.holes.iter().enumerate() {
            let orient = h.orientation.map(|o| format!(" {o}")).unwrap_or_default();
            writeln!(out, "  [{i}] ({}, {}): {}{}", h.anchor[0], h.anchor[1], h.class, orient).unwrap();
        }
        let show = |v: Option<i32>| v.map_or("overlapping".to_string(), |n| n.to_string());
        for g in &self.gaps {
            writeln!(
                out,
                "  [{}]-[{}]: rows between {}, columns between {}",
                g.holes[0],
                g.holes[1],
                show(g.rows_between),
                show(g.cols_between)
            )
            .unwrap();
        }
        out
    }
}
