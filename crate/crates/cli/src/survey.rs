//! Live computation of the survey and census tables over the connected
//! trivalent cyclic Haar classes: nothing here is hard-coded, every row is
//! enumerated, searched and measured on the spot.

use crate::render::{self, Align};
use rayon::prelude::*;
use splitconf::graph::Extent;
use splitconf::haar::{build_haar, enumerate_haar_classes, HaarSymbol};
use splitconf::splittability::{
    brute_force_splittable, find_splitting_set, ColorRestriction, SplitError,
};
use splitconf::symmetry::is_arc_transitive;

/// One enumerated class and its measured attributes.
#[derive(Debug, Clone)]
pub struct SurveyRow {
    pub n: usize,
    pub symbol: HaarSymbol,
    pub splittable: bool,
    pub girth: usize,
    pub diameter: usize,
    pub arc_transitive: bool,
}

/// Per-modulus class counts: total, girth 6, split by splittability and both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub classes: usize,
    pub girth6: usize,
    pub splittable: usize,
    pub unsplittable: usize,
    pub splittable_girth6: usize,
    pub unsplittable_girth6: usize,
}

impl CensusRow {
    fn check_invariants(&self) {
        debug_assert!(self.girth6 <= self.classes);
        debug_assert_eq!(self.splittable + self.unsplittable, self.classes);
        debug_assert!(self.splittable_girth6 <= self.splittable);
        debug_assert!(self.unsplittable_girth6 <= self.unsplittable);
        debug_assert_eq!(
            self.splittable_girth6 + self.unsplittable_girth6,
            self.girth6
        );
    }
}

/// One measured row per isomorphism class, ordered by (n, canonical symbol).
pub fn survey_rows(n_min: usize, n_max: usize) -> Vec<SurveyRow> {
    let mut rows: Vec<SurveyRow> = (n_min..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            enumerate_haar_classes(n, 3)
                .into_iter()
                .map(move |symbol| measure_class(n, symbol))
        })
        .collect();
    rows.sort_by(|a, b| (a.n, &a.symbol).cmp(&(b.n, &b.symbol)));
    rows
}

fn measure_class(n: usize, symbol: HaarSymbol) -> SurveyRow {
    let h = build_haar(&symbol);
    let g = h.graph();
    let report =
        find_splitting_set(g, None, ColorRestriction::Any).expect("enumerated class is connected");
    let girth = match g.girth() {
        Extent::Finite(v) => v,
        Extent::Infinite => unreachable!("trivalent haar graphs have cycles"),
    };
    debug_assert!(girth == 4 || girth == 6, "H({n},..) has girth {girth}");
    let diameter = match g.diameter() {
        Extent::Finite(v) => v,
        Extent::Infinite => unreachable!("enumerated class is connected"),
    };
    SurveyRow {
        n,
        symbol,
        splittable: report.verdict.is_splittable(),
        girth,
        diameter,
        arc_transitive: is_arc_transitive(g),
    }
}

/// Cross-checks every row that fits the oracle bound against the
/// brute-force decision; returns the offenders.
pub fn oracle_disagreements(rows: &[SurveyRow]) -> Vec<String> {
    rows.par_iter()
        .filter_map(|row| {
            let h = build_haar(&row.symbol);
            match brute_force_splittable(h.graph(), None, ColorRestriction::Any) {
                Ok(report) => {
                    if report.verdict.is_splittable() != row.splittable {
                        Some(format!(
                            "oracle disagrees on H({};{}): search says {}, oracle says {}",
                            row.n,
                            row.symbol.set_text(),
                            row.splittable,
                            report.verdict.is_splittable()
                        ))
                    } else {
                        None
                    }
                }
                Err(SplitError::SizeGuard { .. }) => None,
                Err(e) => Some(format!("oracle error on H({};..): {e}", row.n)),
            }
        })
        .collect()
}

pub fn census_rows(n_min: usize, n_max: usize) -> Vec<CensusRow> {
    census_from_survey(n_min, n_max, &survey_rows(n_min, n_max))
}

pub fn census_from_survey(n_min: usize, n_max: usize, rows: &[SurveyRow]) -> Vec<CensusRow> {
    (n_min..=n_max)
        .map(|n| {
            let mut row = CensusRow {
                n,
                classes: 0,
                girth6: 0,
                splittable: 0,
                unsplittable: 0,
                splittable_girth6: 0,
                unsplittable_girth6: 0,
            };
            for r in rows.iter().filter(|r| r.n == n) {
                row.classes += 1;
                let g6 = r.girth == 6;
                if g6 {
                    row.girth6 += 1;
                }
                if r.splittable {
                    row.splittable += 1;
                    if g6 {
                        row.splittable_girth6 += 1;
                    }
                } else {
                    row.unsplittable += 1;
                    if g6 {
                        row.unsplittable_girth6 += 1;
                    }
                }
            }
            row.check_invariants();
            row
        })
        .collect()
}

const CENSUS_HEADERS: [&str; 7] = ["n", "a", "b", "c", "d", "e", "f"];

fn census_cells(rows: &[CensusRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.classes.to_string(),
                r.girth6.to_string(),
                r.splittable.to_string(),
                r.unsplittable.to_string(),
                r.splittable_girth6.to_string(),
                r.unsplittable_girth6.to_string(),
            ]
        })
        .collect()
}

pub fn census_table(rows: &[CensusRow]) -> String {
    render::table(&CENSUS_HEADERS, &[Align::Right; 7], &census_cells(rows))
}

pub fn census_tsv(rows: &[CensusRow]) -> String {
    render::tsv(&CENSUS_HEADERS, &census_cells(rows))
}

const SURVEY_HEADERS: [&str; 6] = [
    "n",
    "S",
    "splittable",
    "girth",
    "diameter",
    "arc-transitive",
];

fn survey_cells(rows: &[SurveyRow], human: bool) -> Vec<Vec<String>> {
    let render_bool = if human {
        render::bool_mark
    } else {
        render::bool_tsv
    };
    rows.iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.symbol.set_text(),
                render_bool(r.splittable).to_string(),
                r.girth.to_string(),
                r.diameter.to_string(),
                render_bool(r.arc_transitive).to_string(),
            ]
        })
        .collect()
}

pub fn survey_table(rows: &[SurveyRow]) -> String {
    let aligns = [
        Align::Right,
        Align::Left,
        Align::Left,
        Align::Right,
        Align::Right,
        Align::Left,
    ];
    render::table(&SURVEY_HEADERS, &aligns, &survey_cells(rows, true))
}

pub fn survey_tsv(rows: &[SurveyRow]) -> String {
    render::tsv(&SURVEY_HEADERS, &survey_cells(rows, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_survey_rows() {
        let rows = survey_rows(3, 8);
        let brief: Vec<(usize, String, bool, usize, usize, bool)> = rows
            .iter()
            .map(|r| {
                (
                    r.n,
                    r.symbol.set_text(),
                    r.splittable,
                    r.girth,
                    r.diameter,
                    r.arc_transitive,
                )
            })
            .collect();
        let expected: Vec<(usize, String, bool, usize, usize, bool)> = vec![
            (3, "{0,1,2}".into(), false, 4, 2, true),
            (4, "{0,1,2}".into(), false, 4, 3, true),
            (5, "{0,1,2}".into(), false, 4, 3, false),
            (6, "{0,1,2}".into(), false, 4, 4, false),
            (6, "{0,1,3}".into(), false, 4, 3, false),
            (7, "{0,1,2}".into(), false, 4, 4, false),
            (7, "{0,1,3}".into(), false, 6, 3, true),
            (8, "{0,1,2}".into(), false, 4, 5, false),
            (8, "{0,1,3}".into(), false, 6, 4, true),
            (8, "{0,1,4}".into(), true, 4, 4, false),
        ];
        assert_eq!(brief, expected);
    }

    #[test]
    fn census_aggregation() {
        let rows = census_rows(7, 8);
        assert_eq!(
            rows,
            vec![
                CensusRow {
                    n: 7,
                    classes: 2,
                    girth6: 1,
                    splittable: 0,
                    unsplittable: 2,
                    splittable_girth6: 0,
                    unsplittable_girth6: 1,
                },
                CensusRow {
                    n: 8,
                    classes: 3,
                    girth6: 1,
                    splittable: 1,
                    unsplittable: 2,
                    splittable_girth6: 0,
                    unsplittable_girth6: 1,
                },
            ]
        );
    }

    #[test]
    fn renderings_are_stable() {
        let rows = census_rows(3, 4);
        assert_eq!(
            census_tsv(&rows),
            "n\ta\tb\tc\td\te\tf\n3\t1\t0\t0\t1\t0\t0\n4\t1\t0\t0\t1\t0\t0\n"
        );
        assert_eq!(
            census_table(&rows),
            "n  a  b  c  d  e  f\n3  1  0  0  1  0  0\n4  1  0  0  1  0  0\n"
        );
        let survey = survey_rows(3, 3);
        assert_eq!(
            survey_tsv(&survey),
            "n\tS\tsplittable\tgirth\tdiameter\tarc-transitive\n3\t{0,1,2}\t0\t4\t2\t1\n"
        );
        assert_eq!(
            survey_table(&survey),
            "n  S        splittable  girth  diameter  arc-transitive\n\
             3  {0,1,2}  \u{22a5}               4         2  \u{22a4}\n"
        );
    }

    #[test]
    fn oracle_agrees_on_small_range() {
        let rows = survey_rows(3, 10);
        assert!(oracle_disagreements(&rows).is_empty());
    }
}
