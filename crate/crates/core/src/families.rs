//! Constructive machinery for the named graph and configuration families:
//! explicit splitting sets for H(n, {0,a,b}), the splittable and unsplittable
//! infinite families, generalized Petersen graphs with their certificates,
//! flag-transitive symbol extraction, grid (Gray-type) configurations, the
//! k-fold expansion construction, and the evidence scanners.

use crate::graph::{Extent, Graph};
use crate::haar::{self, build_haar, canonical_symbol, enumerate_haar_classes, HaarSymbol};
use crate::incidence::{Configuration, IncidenceError};
use crate::splittability::{self, ColorRestriction, Verdict};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamiliesError {
    #[error("require 0 < a < b < n, got (n, a, b) = ({n}, {a}, {b})")]
    ParamOrder { n: usize, a: usize, b: usize },
    #[error("generalized Petersen parameters need n >= 3 and 1 <= k < n/2, got ({n}, {k})")]
    GpParams { n: usize, k: usize },
    #[error("grid configurations need k >= 2, got {0}")]
    GridArity(usize),
    #[error(
        "k = {k} gives {points} points, above the guard of {guard}; use the unbounded builder"
    )]
    GridSizeGuard {
        k: usize,
        points: usize,
        guard: usize,
    },
    #[error("the scanner covers symbols of arity 4 and up, got {0}")]
    ScanArity(usize),
    #[error("scan bound n = {n} is above the guard of {guard}")]
    ScanSizeGuard { n: usize, guard: usize },
    #[error("configuration is not balanced")]
    NotBalanced,
    #[error("no line named {0:?}")]
    UnknownLine(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

/// The two 12-element residue multisets whose distinctness makes the
/// hexagon-isolating splitting set of H(n, {0,a,b}) work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexagonCut {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    /// residues of the white-side gadget, with multiplicity
    pub white: Vec<usize>,
    /// residues of the black-side gadget, with multiplicity
    pub black: Vec<usize>,
}

impl HexagonCut {
    pub fn new(n: usize, a: usize, b: usize) -> Result<HexagonCut, FamiliesError> {
        if !(0 < a && a < b && b < n) {
            return Err(FamiliesError::ParamOrder { n, a, b });
        }
        let m = n as i64;
        let (ai, bi) = (a as i64, b as i64);
        let reduce = |x: i64| x.rem_euclid(m) as usize;
        let white = [
            0,
            ai,
            bi,
            2 * bi,
            bi + ai,
            bi - ai,
            2 * bi - ai,
            2 * bi - 2 * ai,
            3 * bi - ai,
            3 * bi - 2 * ai,
            2 * bi + ai,
            3 * bi,
        ]
        .map(reduce)
        .to_vec();
        let black = [
            0,
            ai,
            bi,
            2 * bi,
            bi + ai,
            bi - ai,
            2 * bi - ai,
            2 * bi - 2 * ai,
            3 * bi - ai,
            3 * bi - 2 * ai,
            -ai,
            bi - 2 * ai,
        ]
        .map(reduce)
        .to_vec();
        Ok(HexagonCut {
            n,
            a,
            b,
            white,
            black,
        })
    }

    /// Admissible iff both multisets are in fact 12-element sets.
    pub fn admissible(&self) -> bool {
        all_distinct(&self.white) && all_distinct(&self.black)
    }

    /// The splitting set {0+, 2b+, (2b-2a)+, (b-a)-, (b+a)-, (3b-a)-} as
    /// vertex indices of `build_haar(H(n, {0,a,b}))`, when admissible.
    pub fn splitting_set(&self) -> Option<Vec<usize>> {
        if !self.admissible() {
            return None;
        }
        let (n, a, b) = (self.n as i64, self.a as i64, self.b as i64);
        let plus = |x: i64| x.rem_euclid(n) as usize;
        let minus = |x: i64| self.n + x.rem_euclid(n) as usize;
        let mut sigma = vec![
            plus(0),
            plus(2 * b),
            plus(2 * b - 2 * a),
            minus(b - a),
            minus(b + a),
            minus(3 * b - a),
        ];
        sigma.sort_unstable();
        Some(sigma)
    }
}

fn all_distinct(values: &[usize]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Splitting set for H(n, {0,a,b}) when the distinctness condition holds.
pub fn hexagon_splitting_set(
    n: usize,
    a: usize,
    b: usize,
) -> Result<Option<Vec<usize>>, FamiliesError> {
    Ok(HexagonCut::new(n, a, b)?.splitting_set())
}

/// Membership in one of the three explicitly splittable families:
/// {0,1,4} from n = 13, {0,1,5} from n = 16, {0,2,5} from n = 16, all up to
/// symbol equivalence.
pub fn explicit_family_member(sym: &HaarSymbol) -> bool {
    let n = sym.modulus();
    let families: [(usize, [usize; 3]); 3] = [(13, [0, 1, 4]), (16, [0, 1, 5]), (16, [0, 2, 5])];
    let canon = canonical_symbol(sym);
    families.iter().any(|&(bound, rs)| {
        n >= bound && canon == canonical_symbol(&HaarSymbol::new(n, &rs).unwrap())
    })
}

/// The three conjecturally complete unsplittable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    /// H(n, {0,1,3}), n >= 7
    F1,
    /// H(3m, {0,1,m}), m >= 2
    F2,
    /// H(3m, {0,1,m+1}), m >= 4, m not divisible by 3
    F3,
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyTag::F1 => write!(f, "F1"),
            FamilyTag::F2 => write!(f, "F2"),
            FamilyTag::F3 => write!(f, "F3"),
        }
    }
}

/// Tags symbols equivalent to a member of one of the unsplittable families,
/// preferring F1 over F2 over F3 when presentations overlap.
pub fn unsplittable_family_member(sym: &HaarSymbol) -> Option<FamilyTag> {
    let n = sym.modulus();
    let canon = canonical_symbol(sym);
    let equals = |rs: &[usize]| match HaarSymbol::new(n, rs) {
        Ok(s) => s.arity() == 3 && canon == canonical_symbol(&s),
        Err(_) => false,
    };
    if n >= 7 && equals(&[0, 1, 3]) {
        return Some(FamilyTag::F1);
    }
    if n.is_multiple_of(3) {
        let m = n / 3;
        if m >= 2 && equals(&[0, 1, m]) {
            return Some(FamilyTag::F2);
        }
        if m >= 4 && !m.is_multiple_of(3) && equals(&[0, 1, m + 1]) {
            return Some(FamilyTag::F3);
        }
    }
    None
}

/// Parameters of a generalized Petersen graph GP(n, k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GpParams {
    pub n: usize,
    pub k: usize,
}

impl GpParams {
    pub fn new(n: usize, k: usize) -> Result<GpParams, FamiliesError> {
        if n >= 3 && k >= 1 && 2 * k < n {
            Ok(GpParams { n, k })
        } else {
            Err(FamiliesError::GpParams { n, k })
        }
    }
}

/// GP(n, k) on 2n vertices: rim cycle on the primed vertices, a skip-k cycle
/// on the unprimed ones, and a spoke matching. Vertex `i` is unprimed,
/// `n + i` is `i'`.
pub fn build_gp(p: GpParams) -> Graph {
    let n = p.n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
        edges.push((i, (i + p.k) % n));
    }
    Graph::from_edges(2 * n, &edges).expect("gp edges are valid by construction")
}

pub fn gp_labels(p: GpParams) -> Vec<String> {
    let mut labels: Vec<String> = (0..p.n).map(|i| i.to_string()).collect();
    labels.extend((0..p.n).map(|i| format!("{i}'")));
    labels
}

/// The two explicit generalized Petersen splitting sets, as vertex indices of
/// [`build_gp`]: {0',4',8',2,6,10} for GP(12,5) and its doubled analogue for
/// GP(24,5). Absent for all other parameters.
pub fn gp_splitting_set(p: GpParams) -> Option<Vec<usize>> {
    let with = |rim: &[usize], skip: &[usize]| {
        let mut sigma: Vec<usize> = rim.iter().map(|&i| p.n + i).collect();
        sigma.extend_from_slice(skip);
        sigma.sort_unstable();
        sigma
    };
    match (p.n, p.k) {
        (12, 5) => Some(with(&[0, 4, 8], &[2, 6, 10])),
        (24, 5) => Some(with(&[0, 4, 8, 12, 16, 20], &[2, 6, 10, 14, 18, 22])),
        _ => None,
    }
}

/// Canonical symbols {0, 1, r+1} with r invertible and r^2 + r + 1 = 0
/// (mod n) for odd n >= 11, plus the n = 7 symbol {0,1,3}; these are the
/// arc-transitive girth-6 cyclic Haar graphs apart from H(8, {0,1,3}).
pub fn flag_transitive_symbols(n: usize) -> Vec<HaarSymbol> {
    let mut out: Vec<HaarSymbol> = Vec::new();
    if n == 7 {
        out.push(canonical_symbol(&HaarSymbol::new(7, &[0, 1, 3]).unwrap()));
    }
    if n >= 11 && n % 2 == 1 {
        for r in 1..n {
            if haar::gcd(r, n) == 1 && (r * r + r + 1) % n == 0 {
                let sym = canonical_symbol(&HaarSymbol::new(n, &[0, 1, r + 1]).unwrap());
                if !out.contains(&sym) {
                    out.push(sym);
                }
            }
        }
    }
    out.sort();
    out
}

const GRID_POINT_GUARD: usize = 1024;

/// The k-dimensional k x ... x k grid configuration: points are coordinate
/// tuples, lines are the axis-parallel point rows. Balanced (k^k)_k. Guarded
/// at k <= 4; see [`grid_configuration_unbounded`].
pub fn gray_configuration(k: usize) -> Result<Configuration, FamiliesError> {
    let points = k
        .checked_pow(k as u32)
        .ok_or(FamiliesError::GridSizeGuard {
            k,
            points: usize::MAX,
            guard: GRID_POINT_GUARD,
        })?;
    if points > GRID_POINT_GUARD {
        return Err(FamiliesError::GridSizeGuard {
            k,
            points,
            guard: GRID_POINT_GUARD,
        });
    }
    grid_configuration_unbounded(k)
}

/// [`gray_configuration`] without the size guard; k is still capped at 9 so
/// coordinates stay single digits.
pub fn grid_configuration_unbounded(k: usize) -> Result<Configuration, FamiliesError> {
    if k < 2 {
        return Err(FamiliesError::GridArity(k));
    }
    assert!(k <= 9, "coordinates must stay single digits");
    let point_count = k.pow(k as u32);
    let digits = |mut idx: usize| {
        let mut coords = vec![0usize; k];
        for d in (0..k).rev() {
            coords[d] = idx % k;
            idx /= k;
        }
        coords
    };
    let point_ids: Vec<String> = (0..point_count)
        .map(|i| digits(i).iter().map(|c| c.to_string()).collect::<String>())
        .collect();
    let mut line_ids = Vec::new();
    let mut incidences = Vec::new();
    for axis in 0..k {
        let stride = k.pow((k - 1 - axis) as u32);
        for base in 0..point_count {
            let coords = digits(base);
            if coords[axis] != 0 {
                continue;
            }
            let mut id: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            id[axis] = "*".to_string();
            let line = line_ids.len();
            line_ids.push(id.concat());
            for step in 0..k {
                incidences.push((base + step * stride, line));
            }
        }
    }
    Ok(Configuration::new(point_ids, line_ids, &incidences)?)
}

/// Result of the k-fold expansion of a balanced configuration at a line:
/// the expanded configuration together with its two witness families.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub config: Configuration,
    /// identifiers of the k new lines; a line splitting set
    pub new_lines: Vec<String>,
    /// per copy, the identifiers of that copy's images of the removed line's
    /// points; each is a point splitting set
    pub copy_points: Vec<Vec<String>>,
}

/// Removes the chosen line, takes k disjoint copies of the remainder, and
/// rejoins them with k new lines through corresponding copies of the removed
/// line's points. A balanced (v_k) input yields a balanced (kv_k) output that
/// is both point- and line-splittable; both witness sets are verified before
/// returning.
pub fn expand_at_line(c: &Configuration, line_id: &str) -> Result<Expansion, FamiliesError> {
    let (v, k) = c.balanced().ok_or(FamiliesError::NotBalanced)?;
    let l = c
        .line_index(line_id)
        .ok_or_else(|| FamiliesError::UnknownLine(line_id.to_string()))?;
    let l_points = c.points_of_line(l).to_vec();
    let kept: Vec<usize> = (0..c.line_count()).filter(|&x| x != l).collect();

    let mut point_ids = Vec::with_capacity(k * v);
    for copy in 1..=k {
        for pid in c.point_ids() {
            point_ids.push(format!("{pid}@{copy}"));
        }
    }
    let mut line_ids = Vec::with_capacity(k * v);
    for copy in 1..=k {
        for &lx in &kept {
            line_ids.push(format!("{}@{copy}", c.line_ids()[lx]));
        }
    }
    let new_lines: Vec<String> = (1..=k).map(|i| format!("M{i}")).collect();
    line_ids.extend(new_lines.iter().cloned());

    let mut incidences = Vec::new();
    for copy in 0..k {
        for (j, &lx) in kept.iter().enumerate() {
            for &p in c.points_of_line(lx) {
                incidences.push((copy * v + p, copy * (v - 1) + j));
            }
        }
    }
    for (i, &p) in l_points.iter().enumerate() {
        let line = k * (v - 1) + i;
        for copy in 0..k {
            incidences.push((copy * v + p, line));
        }
    }
    let config = Configuration::new(point_ids, line_ids, &incidences)?;

    let copy_points: Vec<Vec<String>> = (1..=k)
        .map(|copy| {
            l_points
                .iter()
                .map(|&p| format!("{}@{copy}", c.point_ids()[p]))
                .collect()
        })
        .collect();

    let expansion = Expansion {
        config,
        new_lines,
        copy_points,
    };
    expansion.verify_witnesses();
    Ok(expansion)
}

impl Expansion {
    /// Levi vertices of the new-line witness.
    pub fn line_witness_vertices(&self) -> Vec<usize> {
        self.new_lines
            .iter()
            .map(|id| {
                self.config
                    .levi_line_vertex(self.config.line_index(id).expect("new line exists"))
            })
            .collect()
    }

    /// Levi vertices of the point witness for one copy.
    pub fn point_witness_vertices(&self, copy: usize) -> Vec<usize> {
        self.copy_points[copy]
            .iter()
            .map(|id| {
                self.config
                    .levi_point_vertex(self.config.point_index(id).expect("copied point exists"))
            })
            .collect()
    }

    fn verify_witnesses(&self) {
        let levi = self.config.levi();
        let check = splittability::verify_splitting_set(&levi.graph, &self.line_witness_vertices());
        assert!(check.is_valid(), "new-line witness failed: {check:?}");
        for copy in 0..self.copy_points.len() {
            let check = splittability::verify_splitting_set(
                &levi.graph,
                &self.point_witness_vertices(copy),
            );
            assert!(
                check.is_valid(),
                "copy {copy} point witness failed: {check:?}"
            );
        }
    }
}

/// One scanned girth-6 cyclic class: computed verdict against predicted
/// family membership.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub n: usize,
    pub symbol: HaarSymbol,
    pub girth: usize,
    pub verdict: Verdict,
    pub family: Option<FamilyTag>,
    /// labeled certificate for splittable rows, verified before being stored
    pub certificate: Option<Vec<String>>,
    pub certificate_verified: bool,
}

impl ScanRow {
    /// A row contradicting the only-the-three-families picture.
    pub fn is_mismatch(&self) -> bool {
        (self.verdict == Verdict::Unsplittable) != self.family.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn mismatches(&self) -> Vec<&ScanRow> {
        self.rows.iter().filter(|r| r.is_mismatch()).collect()
    }

    pub fn counterexamples(&self) -> Vec<&ScanRow> {
        self.rows
            .iter()
            .filter(|r| r.verdict == Verdict::Splittable && r.family.is_none())
            .collect()
    }

    pub fn unsplittable_girth6_by_n(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for row in &self.rows {
            if row.verdict == Verdict::Unsplittable {
                *out.entry(row.n).or_insert(0) += 1;
            }
        }
        out
    }

    /// Tab-separated rows: n, symbol, girth, verdict, family_tag, certificate.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tsymbol\tgirth\tverdict\tfamily_tag\tcertificate\n");
        for row in &self.rows {
            let verdict = match row.verdict {
                Verdict::Splittable => "splittable",
                Verdict::Unsplittable => "unsplittable",
            };
            let family = row.family.map_or("-".to_string(), |f| f.to_string());
            let cert = row
                .certificate
                .as_ref()
                .map_or("-".to_string(), |c| c.join(" "));
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                row.n,
                row.symbol.set_text(),
                row.girth,
                verdict,
                family,
                cert
            ));
        }
        out
    }
}

fn scan_symbol(sym: &HaarSymbol, with_family: bool) -> Option<ScanRow> {
    let h = build_haar(sym);
    let girth = match h.graph().girth() {
        Extent::Finite(6) => 6,
        _ => return None,
    };
    let report = splittability::find_splitting_set(h.graph(), None, ColorRestriction::Any)
        .expect("enumerated classes are connected");
    let labels = h.labels();
    let (certificate, certificate_verified) = match &report.certificate {
        Some(sigma) => {
            let verified = splittability::verify_splitting_set(h.graph(), sigma).is_valid();
            let named = sigma.iter().map(|&v| labels[v].clone()).collect();
            (Some(named), verified)
        }
        None => (None, true),
    };
    Some(ScanRow {
        n: sym.modulus(),
        symbol: sym.clone(),
        girth,
        verdict: report.verdict,
        family: if with_family {
            unsplittable_family_member(sym)
        } else {
            None
        },
        certificate,
        certificate_verified,
    })
}

/// Compares the computed verdict of every girth-6 trivalent cyclic class
/// with n <= n_max against predicted family membership. Mismatches are
/// reported, never suppressed.
pub fn scan_unsplittable_families(n_max: usize) -> ScanReport {
    assert!(
        n_max >= 7,
        "the smallest girth-6 cyclic class lives at n = 7"
    );
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for sym in enumerate_haar_classes(n, 3) {
            if let Some(row) = scan_symbol(&sym, true) {
                rows.push(row);
            }
        }
    }
    ScanReport { rows }
}

const ARITY_SCAN_GUARD: usize = 32;

/// Surveys girth-6 cyclic Haar classes of arity k >= 4 in the given modulus
/// range and reports a verdict per class. A splittable finding would refute
/// the all-unsplittable expectation and is surfaced via `counterexamples`,
/// always with a verified certificate.
pub fn scan_higher_arity(
    k: usize,
    n_min: usize,
    n_max: usize,
) -> Result<ScanReport, FamiliesError> {
    if k < 4 {
        return Err(FamiliesError::ScanArity(k));
    }
    if n_max > ARITY_SCAN_GUARD {
        return Err(FamiliesError::ScanSizeGuard {
            n: n_max,
            guard: ARITY_SCAN_GUARD,
        });
    }
    let mut rows = Vec::new();
    for n in n_min.max(k)..=n_max {
        for sym in enumerate_haar_classes(n, k) {
            if let Some(row) = scan_symbol(&sym, false) {
                rows.push(row);
            }
        }
    }
    Ok(ScanReport { rows })
}
