//! Single-graph analysis: parse a graph description, measure it, decide
//! splittability with a certificate, classify the configuration when one is
//! present, and report symmetry.

use crate::render::yes_no;
use splitconf::families::{build_gp, gp_labels, GpParams};
use splitconf::graph::{Extent, Graph};
use splitconf::haar::{self, build_haar, HaarError, HaarSymbol};
use splitconf::incidence::Color;
use splitconf::splittability::{certificate_text, find_splitting_set, ColorRestriction};
use splitconf::symmetry;
use splitconf::SplittingType;
use std::fmt;

/// A parsed analysis subject: the graph plus optional display labels and an
/// optional black-and-white coloring.
#[derive(Debug)]
pub struct Subject {
    pub name: String,
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
    pub colors: Option<Vec<Color>>,
}

#[derive(Debug, PartialEq, Eq)]
pub struct AnalyzeError {
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for AnalyzeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.column {
            Some(c) => write!(f, "parse error at column {c}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl From<HaarError> for AnalyzeError {
    fn from(e: HaarError) -> AnalyzeError {
        match e {
            HaarError::Parse { column, message } => AnalyzeError {
                column: Some(column),
                message,
            },
            other => AnalyzeError {
                column: None,
                message: other.to_string(),
            },
        }
    }
}

fn err(message: impl Into<String>) -> AnalyzeError {
    AnalyzeError {
        column: None,
        message: message.into(),
    }
}

/// Accepts `H(n;s1,...)`, `GP(n,k)`, `LCF[a,...]^r`, or a path to an
/// edge-list file with one `u v` pair per line.
pub fn parse_subject(spec: &str) -> Result<Subject, AnalyzeError> {
    if spec.starts_with("H(") {
        let sym = HaarSymbol::parse(spec)?;
        let h = build_haar(&sym);
        let n = sym.modulus();
        let mut colors = vec![Color::Black; n];
        colors.extend(vec![Color::White; n]);
        return Ok(Subject {
            name: sym.to_text(),
            labels: Some(h.labels()),
            graph: h.into_graph(),
            colors: Some(colors),
        });
    }
    if spec.starts_with("GP(") {
        let (n, k) = parse_gp(spec)?;
        let params = GpParams::new(n, k).map_err(|e| err(e.to_string()))?;
        return Ok(Subject {
            name: format!("GP({n},{k})"),
            graph: build_gp(params),
            labels: Some(gp_labels(params)),
            colors: None,
        });
    }
    if spec.starts_with("LCF[") {
        let (steps, reps) = haar::parse_lcf(spec)?;
        let graph = haar::build_lcf(&steps, reps)?;
        return Ok(Subject {
            name: haar::lcf_to_text(&steps, reps),
            graph,
            labels: None,
            colors: None,
        });
    }
    edge_list_subject(spec)
}

fn parse_gp(spec: &str) -> Result<(usize, usize), AnalyzeError> {
    let fail = |column: usize, message: &str| AnalyzeError {
        column: Some(column),
        message: message.to_string(),
    };
    let body = &spec[3..];
    let close = body
        .find(')')
        .ok_or_else(|| fail(spec.len() + 1, "expected ')'"))?;
    if close + 1 != body.len() {
        return Err(fail(3 + close + 2, "unexpected trailing input"));
    }
    let comma = body[..close]
        .find(',')
        .ok_or_else(|| fail(4, "expected 'GP(n,k)'"))?;
    let n = body[..comma]
        .parse::<usize>()
        .map_err(|_| fail(4, "expected a number"))?;
    let k = body[comma + 1..close]
        .parse::<usize>()
        .map_err(|_| fail(3 + comma + 2, "expected a number"))?;
    Ok((n, k))
}

fn edge_list_subject(path: &str) -> Result<Subject, AnalyzeError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| err(format!("cannot read {path:?}: {e}")))?;
    let mut edges = Vec::new();
    let mut max = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, AnalyzeError> {
            tok.ok_or_else(|| err(format!("{path}:{}: expected 'u v'", lineno + 1)))?
                .parse::<usize>()
                .map_err(|_| err(format!("{path}:{}: expected 'u v'", lineno + 1)))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(err(format!("{path}:{}: expected 'u v'", lineno + 1)));
        }
        max = max.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(err(format!("{path}: edge list is empty")));
    }
    let graph = Graph::from_edges(max + 1, &edges).map_err(|e| err(e.to_string()))?;
    Ok(Subject {
        name: path.to_string(),
        graph,
        labels: None,
        colors: None,
    })
}

/// The deterministic multi-section report.
pub fn report(subject: &Subject) -> String {
    use std::fmt::Write;
    let g = &subject.graph;
    let mut out = String::new();
    let _ = writeln!(out, "spec: {}", subject.name);
    let _ = writeln!(out, "vertices: {}", g.vertex_count());
    let _ = writeln!(out, "edges: {}", g.edge_count());
    let connected = g.is_connected();
    let _ = writeln!(out, "connected: {}", yes_no(connected));
    let bipartite = g.bipartition().is_some();
    let _ = writeln!(out, "bipartite: {}", yes_no(bipartite));
    let girth = g.girth();
    let _ = writeln!(out, "girth: {girth}");
    let _ = writeln!(out, "diameter: {}", g.diameter());
    match g.vertex_connectivity_at_least(3) {
        Ok(answer) => {
            let _ = writeln!(out, "3-connected: {}", yes_no(answer));
        }
        Err(_) => {
            let _ = writeln!(out, "3-connected: n/a (disconnected)");
        }
    }

    if connected && g.vertex_count() >= 2 {
        let labels = subject.labels.as_deref();
        let report = find_splitting_set(g, None, ColorRestriction::Any)
            .expect("connected graph with unrestricted search");
        let _ = writeln!(
            out,
            "splittable: {}",
            yes_no(report.verdict.is_splittable())
        );
        if let Some(sigma) = &report.certificate {
            let _ = writeln!(out, "splitting set: {}", certificate_text(sigma, labels));
            let sizes: Vec<String> = report
                .components
                .as_ref()
                .expect("splittable verdicts carry components")
                .iter()
                .map(|c| c.len().to_string())
                .collect();
            let _ = writeln!(out, "components after removal: sizes {}", sizes.join(" "));
        }

        let colors = subject.colors.clone().or_else(|| {
            g.bipartition().map(|p| {
                p.iter()
                    .map(|&w| if w { Color::White } else { Color::Black })
                    .collect()
            })
        });
        let girth_ok = match girth {
            Extent::Finite(v) => v >= 6,
            Extent::Infinite => true,
        };
        match colors {
            Some(colors) if girth_ok => {
                let _ = writeln!(
                    out,
                    "configuration analysis (black = points, white = lines):"
                );
                let point = find_splitting_set(g, Some(&colors), ColorRestriction::BlackOnly)
                    .expect("connected colored graph");
                let line = find_splitting_set(g, Some(&colors), ColorRestriction::WhiteOnly)
                    .expect("connected colored graph");
                let _ = writeln!(
                    out,
                    "  point-splittable: {}",
                    yes_no(point.verdict.is_splittable())
                );
                let _ = writeln!(
                    out,
                    "  line-splittable: {}",
                    yes_no(line.verdict.is_splittable())
                );
                let ty = SplittingType::from_flags(
                    point.verdict.is_splittable(),
                    line.verdict.is_splittable(),
                );
                let _ = writeln!(out, "  splitting type: {ty}");
            }
            Some(_) => {
                let _ = writeln!(
                    out,
                    "configuration analysis: skipped (girth {girth} is below 6)"
                );
            }
            None => {
                let _ = writeln!(out, "configuration analysis: skipped (not bipartite)");
            }
        }

        let group = symmetry::automorphism_group(g, None);
        let _ = writeln!(out, "automorphism group order: {}", group.order);
        let _ = writeln!(
            out,
            "vertex-transitive: {}",
            yes_no(symmetry::is_vertex_transitive(g))
        );
        let _ = writeln!(
            out,
            "arc-transitive: {}",
            yes_no(symmetry::is_arc_transitive(g))
        );
        let _ = writeln!(
            out,
            "zero-symmetric (GRR): {}",
            yes_no(symmetry::is_zero_symmetric(g))
        );
    } else {
        let _ = writeln!(out, "splittable: n/a (graph is disconnected)");
    }
    out
}

pub fn dot(subject: &Subject) -> String {
    subject.graph.to_dot(subject.labels.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_grammars() {
        assert_eq!(
            parse_subject("H(7;0,1,3)").unwrap().graph.vertex_count(),
            14
        );
        assert_eq!(parse_subject("GP(12,5)").unwrap().graph.vertex_count(), 24);
        assert_eq!(
            parse_subject("LCF[5,-5]^7").unwrap().graph.vertex_count(),
            14
        );
    }

    #[test]
    fn parse_errors_carry_columns() {
        let e = parse_subject("H(7;0,1,x)").unwrap_err();
        assert_eq!(e.column, Some(9));
        let e = parse_subject("GP(12;5)").unwrap_err();
        assert!(e.column.is_some());
        let e = parse_subject("GP(3,9)").unwrap_err();
        assert!(e.message.contains("generalized Petersen"));
    }

    #[test]
    fn heawood_report_shape() {
        let subject = parse_subject("H(7;0,1,3)").unwrap();
        let text = report(&subject);
        assert!(text.contains("girth: 6"));
        assert!(text.contains("diameter: 3"));
        assert!(text.contains("splittable: no"));
        assert!(text.contains("splitting type: T4"));
        assert!(text.contains("arc-transitive: yes"));
        assert!(text.contains("automorphism group order: 336"));
    }

    #[test]
    fn gp5_2_skips_configuration_analysis() {
        let subject = parse_subject("GP(5,2)").unwrap();
        let text = report(&subject);
        assert!(text.contains("girth: 5"));
        assert!(text.contains("configuration analysis: skipped (not bipartite)"));
    }

    #[test]
    fn gp12_5_report_has_certificate() {
        let subject = parse_subject("GP(12,5)").unwrap();
        let text = report(&subject);
        assert!(text.contains("splittable: yes"));
        assert!(text.contains("splitting set: "));
        assert!(text.contains("components after removal"));
    }

    #[test]
    fn girth_four_haar_skips_configuration_analysis() {
        let subject = parse_subject("H(8;0,1,4)").unwrap();
        let text = report(&subject);
        assert!(text.contains("splittable: yes"));
        assert!(text.contains("configuration analysis: skipped (girth 4 is below 6)"));
    }

    #[test]
    fn disconnected_input_reports_gracefully() {
        let subject = parse_subject("H(4;0)").unwrap();
        let text = report(&subject);
        assert!(text.contains("connected: no"));
        assert!(text.contains("splittable: n/a (graph is disconnected)"));
        assert!(text.contains("diameter: infinite"));
    }

    #[test]
    fn edge_list_round_trip() {
        let dir = std::env::temp_dir().join("splitconf-analyze-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c6.txt");
        std::fs::write(&path, "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
        let subject = parse_subject(path.to_str().unwrap()).unwrap();
        assert_eq!(subject.graph.vertex_count(), 6);
        let text = report(&subject);
        assert!(text.contains("splittable: yes"));
        let bad = dir.join("bad.txt");
        std::fs::write(&bad, "0 1\n2\n").unwrap();
        let e = parse_subject(bad.to_str().unwrap()).unwrap_err();
        assert!(e.message.contains(":2:"));
    }
}
