//! Theorem-driven verdicts.
//!
//! Rules are tried in a fixed order and the first match wins. Rules about
//! hole pairs are orientation sensitive (an A-slit opens downward, row gaps
//! differ from column gaps), so they are matched against all eight
//! symmetric images of the shape; foldability does not depend on how the
//! paper is turned. When no rule applies, the mapping search decides what it
//! can: no covering mapping means the shape cannot fold, anything else stays
//! unknown.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::audit::separated_hole_pair;
use crate::holes::{boundary_slits, classify_hole, gap_metrics, holes, Hole, HoleClass, SlitAxis};
use crate::polyomino::{LatticeEdge, Polyomino, Symmetry};
use crate::search::{check_necessary_detailed, Limits, Mapping, Necessary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decision {
    Folds,
    DoesNotFold,
    Unknown,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Folds => "folds",
            Decision::DoesNotFold => "does_not_fold",
            Decision::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which rule produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// A hole that is not one of the five basic shapes.
    SingleNonBasic,
    /// Solid rectangle.
    Rectangle,
    /// Rectangle with one unit-square hole.
    RectangleSquareHole,
    /// Rectangle with one size-1 slit.
    RectangleSlit1,
    /// Rectangle with two unit-square holes in one row, even column gap.
    TwoSquareHolesEvenGap,
    /// Two vertical straight size-2 slits, at least two columns and an odd
    /// number of rows apart.
    TwoSlitsOddRows,
    /// A-slit with a unit-square hole or U-slit above it in the same column,
    /// even row gap.
    ASlitAboveEven,
    /// A-slit with a unit-square hole or U-slit below it, odd row gap.
    ASlitBelowOdd,
    /// Two unit-square holes in the same or neighboring columns, odd row gap.
    TwoSquareHolesOddRows,
    /// No covering consistent mapping exists.
    SearchFail,
    /// Covering or consistent mappings exist; no rule decides.
    SearchPassOnly,
    /// The search hit its state limit.
    SearchInconclusive,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::SingleNonBasic => "THM_SINGLE_NONBASIC",
            Rule::Rectangle => "COR_RECT",
            Rule::RectangleSquareHole => "THM_RECT_SQHOLE",
            Rule::RectangleSlit1 => "THM_RECT_SLIT1",
            Rule::TwoSquareHolesEvenGap => "THM_TWOHOLES_EVEN",
            Rule::TwoSlitsOddRows => "THM_2SLITS_ODD_ROWS",
            Rule::ASlitAboveEven => "THM_ASLIT_ABOVE_EVEN",
            Rule::ASlitBelowOdd => "THM_ASLIT_BELOW_ODD",
            Rule::TwoSquareHolesOddRows => "THM_2UNITSQ_ODD",
            Rule::SearchFail => "SEARCH_FAIL",
            Rule::SearchPassOnly => "SEARCH_PASS_ONLY",
            Rule::SearchInconclusive => "SEARCH_INCONCLUSIVE",
        }
    }

    /// Rules that conclude from a theorem rather than from the search.
    pub fn is_theorem(self) -> bool {
        !matches!(self, Rule::SearchFail | Rule::SearchPassOnly | Rule::SearchInconclusive)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Summary of a necessary-condition search run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub outcome: Necessary,
    pub states: u64,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub decision: Decision,
    pub provenance: Rule,
    /// A covering consistent mapping, when the search produced one.
    pub witness: Option<Mapping>,
    pub notes: Vec<String>,
    pub search: Option<SearchSummary>,
}

/// Shape facts the rules look at, computed once per orientation.
struct Facts {
    holes: Vec<Hole>,
    classes: Vec<HoleClass>,
    rectangle_outline: bool,
}

impl Facts {
    fn new(p: &Polyomino) -> Self {
        let hs = holes(p);
        let classes = hs.iter().map(classify_hole).collect();
        let b = p.bounds();
        let filled = b.squares().all(|s| p.contains(s) || hs.iter().any(|h| h.squares.contains(&s)));
        let rectangle_outline = filled && boundary_slits(p, &hs).is_empty();
        Facts { holes: hs, classes, rectangle_outline }
    }

    fn only(&self, class: HoleClass) -> bool {
        self.classes.len() == 1 && self.classes[0] == class
    }
}

fn is_odd(v: Option<i32>) -> bool {
    matches!(v, Some(n) if n % 2 == 1)
}

fn is_even(v: Option<i32>) -> bool {
    matches!(v, Some(n) if n % 2 == 0)
}

fn two_square_holes_even_gap(f: &Facts) -> bool {
    if !f.rectangle_outline || f.classes != [HoleClass::UnitSquare, HoleClass::UnitSquare] {
        return false;
    }
    let (a, b) = (&f.holes[0], &f.holes[1]);
    a.min_y() == b.min_y() && is_even(gap_metrics(a, b).cols_between)
}

fn two_slits_odd_rows(f: &Facts) -> bool {
    let v = HoleClass::StraightSlit2(SlitAxis::Vertical);
    if f.classes != [v, v] {
        return false;
    }
    let g = gap_metrics(&f.holes[0], &f.holes[1]);
    matches!(g.cols_between, Some(c) if c >= 2) && is_odd(g.rows_between)
}

fn partner(c: HoleClass) -> bool {
    c == HoleClass::UnitSquare || c.is_u_slit()
}

/// Tries both assignments of (A-slit, partner) among two holes.
fn a_slit_pairs(f: &Facts) -> impl Iterator<Item = (&Hole, &Hole)> {
    let ok = f.holes.len() == 2;
    [(0usize, 1usize), (1, 0)].into_iter().filter_map(move |(i, j)| {
        (ok && f.classes[i].is_a_slit() && partner(f.classes[j])).then_some((&f.holes[i], &f.holes[j]))
    })
}

fn a_slit_above_even(f: &Facts) -> bool {
    a_slit_pairs(f).any(|(a, o)| {
        o.min_x() == a.min_x() && o.max_x() == a.max_x() && o.min_y() > a.max_y() && (o.min_y() - a.max_y()) % 2 == 0
    })
}

fn a_slit_below_odd(f: &Facts) -> bool {
    a_slit_pairs(f).any(|(a, o)| a.min_y() > o.max_y() && (a.min_y() - o.max_y()) % 2 == 1)
}

fn two_square_holes_odd_rows(f: &Facts) -> bool {
    if f.classes != [HoleClass::UnitSquare, HoleClass::UnitSquare] {
        return false;
    }
    let (a, b) = (&f.holes[0], &f.holes[1]);
    (a.min_x() - b.min_x()).abs() <= 1 && is_odd(gap_metrics(a, b).rows_between)
}

/// The first theorem that applies, if any.
pub fn matching_rule(p: &Polyomino) -> Option<Rule> {
    let f = Facts::new(p);
    if f.classes.contains(&HoleClass::NonBasic) {
        return Some(Rule::SingleNonBasic);
    }
    if f.rectangle_outline && f.holes.is_empty() && p.slits().is_empty() {
        return Some(Rule::Rectangle);
    }
    if f.rectangle_outline && f.only(HoleClass::UnitSquare) {
        return Some(Rule::RectangleSquareHole);
    }
    if f.rectangle_outline && f.only(HoleClass::Slit1) {
        return Some(Rule::RectangleSlit1);
    }
    if f.holes.len() != 2 {
        return None;
    }
    let images: Vec<Facts> = Symmetry::ALL
        .iter()
        .map(|t| if *t == Symmetry::IDENTITY { Facts::new(p) } else { Facts::new(&p.transform(*t)) })
        .collect();
    type Test = fn(&Facts) -> bool;
    let ordered: [(Rule, Test); 5] = [
        (Rule::TwoSquareHolesEvenGap, two_square_holes_even_gap),
        (Rule::TwoSlitsOddRows, two_slits_odd_rows),
        (Rule::ASlitAboveEven, a_slit_above_even),
        (Rule::ASlitBelowOdd, a_slit_below_odd),
        (Rule::TwoSquareHolesOddRows, two_square_holes_odd_rows),
    ];
    ordered.into_iter().find(|(_, test)| images.iter().any(test)).map(|(rule, _)| rule)
}

fn decision_of(rule: Rule) -> Decision {
    match rule {
        Rule::SingleNonBasic
        | Rule::TwoSlitsOddRows
        | Rule::ASlitAboveEven
        | Rule::ASlitBelowOdd
        | Rule::TwoSquareHolesOddRows => Decision::Folds,
        Rule::Rectangle
        | Rule::RectangleSquareHole
        | Rule::RectangleSlit1
        | Rule::TwoSquareHolesEvenGap
        | Rule::SearchFail => Decision::DoesNotFold,
        Rule::SearchPassOnly | Rule::SearchInconclusive => Decision::Unknown,
    }
}

fn summary(outcome: Necessary, r: &crate::search::SearchResult) -> SearchSummary {
    SearchSummary { outcome, states: r.states_explored, truncated: r.truncated }
}

/// Verdict with provenance. Folds verdicts carry a covering witness from
/// the search when it completes within `limits`.
pub fn classify(p: &Polyomino, limits: &Limits) -> Verdict {
    let mut notes = Vec::new();
    let hs = holes(p);
    if separated_hole_pair(p, &hs) {
        notes.push(String::from("two separated basic holes: in any folding at most one is folded non-trivially"));
    }
    if let Some(rule) = matching_rule(p) {
        let decision = decision_of(rule);
        let mut verdict = Verdict { decision, provenance: rule, witness: None, notes, search: None };
        if decision == Decision::Folds {
            let (outcome, r) = check_necessary_detailed(p, limits);
            verdict.search = Some(summary(outcome, &r));
            match outcome {
                Necessary::PassCovering => verdict.witness = r.witnesses.into_iter().next(),
                Necessary::Inconclusive => {
                    verdict.notes.push(format!("search truncated after {} states; no witness", r.states_explored))
                }
                _ => verdict.notes.push(String::from("search found no covering mapping for a folding rule")),
            }
        }
        return verdict;
    }
    let (outcome, r) = check_necessary_detailed(p, limits);
    let rule = match outcome {
        Necessary::Fail => Rule::SearchFail,
        Necessary::PassCovering => Rule::SearchPassOnly,
        Necessary::Inconclusive => {
            notes.push(format!("search truncated after {} states", r.states_explored));
            Rule::SearchInconclusive
        }
    };
    Verdict {
        decision: decision_of(rule),
        provenance: rule,
        witness: if outcome == Necessary::PassCovering { r.witnesses.first().cloned() } else { None },
        notes,
        search: Some(summary(outcome, &r)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorroborationStatus {
    /// The search agrees with the verdict.
    Agrees,
    /// The search could not finish within limits.
    Unchecked,
    /// A theorem verdict disagrees with the search.
    Contradiction(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corroboration {
    pub status: CorroborationStatus,
    pub search: SearchSummary,
    pub witness: Option<Mapping>,
}

impl Corroboration {
    pub fn is_contradiction(&self) -> bool {
        matches!(self.status, CorroborationStatus::Contradiction(_))
    }
}

/// Cross-checks a verdict against the necessary-condition search.
///
/// A Folds verdict needs a covering witness; a theorem's DoesNotFold needs
/// the search to find none.
pub fn corroborate(p: &Polyomino, v: &Verdict, limits: &Limits) -> Corroboration {
    let (outcome, r) = check_necessary_detailed(p, limits);
    let witness = r.witnesses.first().cloned();
    let search = summary(outcome, &r);
    let status = match (outcome, v.decision) {
        (Necessary::Inconclusive, _) => CorroborationStatus::Unchecked,
        (Necessary::PassCovering, Decision::DoesNotFold) => CorroborationStatus::Contradiction(format!(
            "{} says the shape does not fold, but a covering mapping exists",
            v.provenance
        )),
        (Necessary::Fail, Decision::Folds) => CorroborationStatus::Contradiction(format!(
            "{} says the shape folds, but no covering mapping exists",
            v.provenance
        )),
        _ => CorroborationStatus::Agrees,
    };
    Corroboration { status, search, witness }
}

/// Verdicts before and after cutting one more size-1 slit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlitExperiment {
    pub base: Verdict,
    pub with_slit: Verdict,
}

impl SlitExperiment {
    /// False only when the cut shape folds and the uncut one provably does
    /// not, which would refute the claim that a size-1 slit never helps.
    pub fn consistent_with_claim(&self) -> bool {
        !(self.with_slit.decision == Decision::Folds && self.base.decision == Decision::DoesNotFold)
    }
}

/// Experiment only; never feeds into [`classify`].
pub fn compare_with_added_slit(
    p: &Polyomino,
    slit: LatticeEdge,
    limits: &Limits,
) -> Result<SlitExperiment, crate::polyomino::ShapeError> {
    let cut = p.with_slit(slit)?;
    Ok(SlitExperiment { base: classify(p, limits), with_slit: classify(&cut, limits) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino::{Bounds, GridPoint};

    fn gp(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn rect_minus(w: i32, h: i32, missing: &[(i32, i32)]) -> Polyomino {
        let b = Bounds { min_x: 0, min_y: 0, max_x: w, max_y: h };
        Polyomino::new(b.squares().filter(|s| !missing.contains(&(s.x, s.y))), []).unwrap()
    }

    #[test]
    fn domino_hole_folds() {
        let p = rect_minus(4, 4, &[(1, 1), (2, 1)]);
        let v = classify(&p, &Limits::default());
        assert_eq!(v.decision, Decision::Folds);
        assert_eq!(v.provenance, Rule::SingleNonBasic);
        assert!(v.witness.as_ref().is_some_and(|w| w.is_covering()));
    }

    #[test]
    fn solid_rectangle() {
        let v = classify(&Polyomino::rectangle(3, 5).unwrap(), &Limits::default());
        assert_eq!((v.decision, v.provenance), (Decision::DoesNotFold, Rule::Rectangle));
        assert!(v.witness.is_none());
    }

    #[test]
    fn rectangle_with_square_hole() {
        let v = classify(&rect_minus(5, 5, &[(2, 2)]), &Limits::default());
        assert_eq!((v.decision, v.provenance), (Decision::DoesNotFold, Rule::RectangleSquareHole));
    }

    #[test]
    fn cross_is_unknown_with_witness() {
        let cross = Polyomino::new([gp(1, 0), gp(1, 1), gp(1, 2), gp(1, 3), gp(0, 2), gp(2, 2)], []).unwrap();
        let v = classify(&cross, &Limits::default());
        assert_eq!((v.decision, v.provenance), (Decision::Unknown, Rule::SearchPassOnly));
        assert!(v.witness.is_some());
        let c = corroborate(&cross, &v, &Limits::default());
        assert_eq!(c.status, CorroborationStatus::Agrees);
    }

    #[test]
    fn corroborate_flags_a_false_folds() {
        let p = Polyomino::rectangle(2, 2).unwrap();
        let fake = Verdict {
            decision: Decision::Folds,
            provenance: Rule::SingleNonBasic,
            witness: None,
            notes: Vec::new(),
            search: None,
        };
        assert!(corroborate(&p, &fake, &Limits::default()).is_contradiction());
    }

    #[test]
    fn ids_are_stable() {
        assert_eq!(Rule::TwoSquareHolesOddRows.id(), "THM_2UNITSQ_ODD");
        assert_eq!(Decision::DoesNotFold.as_str(), "does_not_fold");
    }
}
