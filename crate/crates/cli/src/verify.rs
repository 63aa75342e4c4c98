//! The built-in checklist: explicit splitting-set families, the unsplittable
//! prefixes, the certificate graphs, and the grid expansion, each rerun from
//! scratch and reported pass/fail.

use splitconf::families::{
    build_gp, expand_at_line, gp_splitting_set, gray_configuration, hexagon_splitting_set, GpParams,
};
use splitconf::graph::{Extent, Graph};
use splitconf::haar::{build_haar, HaarSymbol};
use splitconf::splittability::{find_splitting_set, verify_splitting_set, ColorRestriction};
use splitconf::symmetry::are_isomorphic;
use splitconf::Verdict;

pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn pass(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: true,
        detail,
    }
}

fn fail(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: false,
        detail,
    }
}

/// Runs every check up to the requested modulus bound. The fault switch
/// corrupts one certificate on purpose so failure detection stays honest.
pub fn run_checks(n_max: usize, inject_fault: bool) -> Vec<CheckResult> {
    vec![
        check_hexagon_sweep(n_max),
        check_explicit_families(n_max),
        check_unsplittable_prefix("f1-prefix", n_max, |n| {
            (n >= 7).then(|| HaarSymbol::new(n, &[0, 1, 3]).unwrap())
        }),
        check_unsplittable_prefix("f2-prefix", n_max, |n| {
            (n % 3 == 0 && n >= 6).then(|| HaarSymbol::new(n, &[0, 1, n / 3]).unwrap())
        }),
        check_certificate_graphs(inject_fault),
        check_grid_expansion(),
    ]
}

/// Every admissible (n, a, b) produces a verified splitting set on a girth-6
/// graph.
fn check_hexagon_sweep(n_max: usize) -> CheckResult {
    const NAME: &str = "hexagon-splitting-sets";
    let mut verified = 0u64;
    for n in 3..=n_max {
        for a in 1..n {
            for b in a + 1..n {
                let Some(sigma) = hexagon_splitting_set(n, a, b).expect("0 < a < b < n") else {
                    continue;
                };
                let h = build_haar(&HaarSymbol::new(n, &[0, a, b]).unwrap());
                let check = verify_splitting_set(h.graph(), &sigma);
                if !check.is_valid() {
                    return fail(NAME, format!("({n},{a},{b}): rejected set: {check:?}"));
                }
                if h.graph().girth() != Extent::Finite(6) {
                    return fail(NAME, format!("({n},{a},{b}): girth is not 6"));
                }
                verified += 1;
            }
        }
    }
    pass(
        NAME,
        format!("{verified} admissible triples verified, n <= {n_max}"),
    )
}

/// The three explicit families hold from their bounds and the construction
/// is absent just below them.
fn check_explicit_families(n_max: usize) -> CheckResult {
    const NAME: &str = "explicit-families";
    let families: [(usize, usize, usize); 3] = [(13, 1, 4), (16, 1, 5), (16, 2, 5)];
    let mut verified = 0u64;
    for (bound, a, b) in families {
        match hexagon_splitting_set(bound - 1, a, b) {
            Ok(None) => {}
            other => {
                return fail(
                    NAME,
                    format!(
                        "H({};{{0,{a},{b}}}) below the bound: expected absent, got {other:?}",
                        bound - 1
                    ),
                )
            }
        }
        for n in bound..=n_max.max(bound) {
            let Ok(Some(sigma)) = hexagon_splitting_set(n, a, b) else {
                return fail(NAME, format!("H({n};{{0,{a},{b}}}): no splitting set"));
            };
            let h = build_haar(&HaarSymbol::new(n, &[0, a, b]).unwrap());
            if !verify_splitting_set(h.graph(), &sigma).is_valid() {
                return fail(NAME, format!("H({n};{{0,{a},{b}}}): set rejected"));
            }
            verified += 1;
        }
    }
    pass(
        NAME,
        format!("{verified} family instances verified up to n = {n_max}, absent below bounds"),
    )
}

fn check_unsplittable_prefix(
    name: &'static str,
    n_max: usize,
    member: impl Fn(usize) -> Option<HaarSymbol>,
) -> CheckResult {
    let mut verified = 0u64;
    for n in 3..=n_max {
        let Some(sym) = member(n) else { continue };
        let h = build_haar(&sym);
        let report = find_splitting_set(h.graph(), None, ColorRestriction::Any)
            .expect("family members are connected");
        if report.verdict != Verdict::Unsplittable {
            return fail(
                name,
                format!(
                    "{} is splittable with set {:?}",
                    sym.to_text(),
                    report.certificate
                ),
            );
        }
        verified += 1;
    }
    pass(
        name,
        format!("{verified} family members unsplittable, n <= {n_max}"),
    )
}

/// The certificate graphs: the three unsplittable ones, the isomorphism
/// between the two presentations of the 16-vertex one, and the two explicit
/// splitting sets with their cycle decompositions.
fn check_certificate_graphs(inject_fault: bool) -> CheckResult {
    const NAME: &str = "certificate-graphs";
    let heawood = build_haar(&HaarSymbol::new(7, &[0, 1, 3]).unwrap());
    let mk = build_haar(&HaarSymbol::new(8, &[0, 1, 3]).unwrap());
    let gp83 = build_gp(GpParams::new(8, 3).unwrap());
    if are_isomorphic(&gp83, mk.graph()).is_none() {
        return fail(NAME, "GP(8,3) is not isomorphic to H(8;0,1,3)".to_string());
    }
    for (name, g) in [
        ("H(7;0,1,3)", heawood.graph().clone()),
        ("GP(8,3)", gp83),
        ("GP(10,3)", build_gp(GpParams::new(10, 3).unwrap())),
    ] {
        let report = find_splitting_set(&g, None, ColorRestriction::Any).expect("connected");
        if report.verdict != Verdict::Unsplittable {
            return fail(NAME, format!("{name} should be unsplittable"));
        }
    }
    for (n, k, pieces, len) in [(12usize, 5usize, 3usize, 6usize), (24, 5, 3, 12)] {
        let params = GpParams::new(n, k).unwrap();
        let g = build_gp(params);
        let mut sigma = gp_splitting_set(params).expect("explicit set for these parameters");
        if inject_fault && n == 12 {
            // swap one member for a vertex adjacent to another member
            sigma[0] = 1;
        }
        match verify_splitting_set(&g, &sigma) {
            splitconf::SigmaCheck::Valid { components } => {
                if components.len() != pieces
                    || components
                        .iter()
                        .any(|c| are_isomorphic(&g.induced(c), &Graph::cycle(len)).is_none())
                {
                    return fail(
                        NAME,
                        format!("GP({n},{k}) - S should fall into {pieces} copies of C{len}"),
                    );
                }
            }
            reason => {
                return fail(NAME, format!("GP({n},{k}) set rejected: {reason:?}"));
            }
        }
        let report = find_splitting_set(&g, None, ColorRestriction::Any).expect("connected");
        if report.verdict != Verdict::Splittable {
            return fail(NAME, format!("GP({n},{k}) search says unsplittable"));
        }
    }
    pass(
        NAME,
        "3 unsplittable graphs, GP(8,3) = H(8;0,1,3), GP(12,5) - S = 3 C6, GP(24,5) - S = 3 C12"
            .to_string(),
    )
}

/// Expanding the 27-point grid once gives a balanced (81_3) configuration
/// whose two witness families verify.
fn check_grid_expansion() -> CheckResult {
    const NAME: &str = "grid-expansion";
    let gray = match gray_configuration(3) {
        Ok(c) => c,
        Err(e) => return fail(NAME, e.to_string()),
    };
    let line = gray.line_ids()[0].clone();
    let expansion = match expand_at_line(&gray, &line) {
        Ok(e) => e,
        Err(e) => return fail(NAME, e.to_string()),
    };
    if expansion.config.balanced() != Some((81, 3)) {
        return fail(
            NAME,
            "expansion is not a balanced (81_3) configuration".to_string(),
        );
    }
    let levi = expansion.config.levi();
    if !verify_splitting_set(&levi.graph, &expansion.line_witness_vertices()).is_valid() {
        return fail(NAME, "new-line witness rejected".to_string());
    }
    for copy in 0..3 {
        if !verify_splitting_set(&levi.graph, &expansion.point_witness_vertices(copy)).is_valid() {
            return fail(NAME, format!("copy {copy} point witness rejected"));
        }
    }
    pass(
        NAME,
        "grid (27_3) expands to a balanced (81_3) with verified witnesses".to_string(),
    )
}

/// One line per check plus a summary; true when everything passed.
pub fn render_results(results: &[CheckResult]) -> (String, bool) {
    let mut out = String::new();
    let mut failed = 0;
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {}: {}\n", r.name, r.detail));
        if !r.passed {
            failed += 1;
        }
    }
    out.push_str(&format!("{} checks, {} failed\n", results.len(), failed));
    (out, failed == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_at_small_bound() {
        let results = run_checks(16, false);
        let (text, ok) = render_results(&results);
        assert!(ok, "{text}");
        assert_eq!(results.len(), 6);
    }

    #[test]
    fn injected_fault_is_detected() {
        let results = run_checks(12, true);
        let (text, ok) = render_results(&results);
        assert!(!ok);
        assert!(text.contains("FAIL certificate-graphs"));
        assert!(text.contains("NotIndependent"));
    }
}
