//! Cyclic Haar graphs H(n, S): construction, symbol canonicalization,
//! exhaustive enumeration up to isomorphism, and LCF-notation builds.
//!
//! H(n, S) is the bipartite graph on vertices `{i+ | i in Z_n}` and
//! `{i- | i in Z_n}` with an edge from `i+` to `(i+k)-` for every `k` in the
//! symbol `S`. Vertex `i+` gets index `i` and `i-` gets index `n + i`.

use crate::graph::{Graph, GraphError};
use crate::symmetry;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HaarError {
    #[error("symbol must contain at least one residue")]
    EmptySymbol,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("LCF length {0} times repetitions {1} must give at least 3 vertices")]
    LcfTooSmall(usize, usize),
    #[error("LCF graph must have an even number of vertices, got {0}")]
    LcfOddVertices(usize),
    #[error("LCF step at index {index} produces a self-loop")]
    LcfSelfLoop { index: usize },
    #[error("LCF step at index {index} duplicates an existing edge")]
    LcfDuplicateEdge { index: usize },
    #[error("LCF step at index {index} gives vertex {vertex} a second chord")]
    LcfChordCollision { index: usize, vertex: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The pair (n, S) describing H(n, S). Residues are stored reduced mod n,
/// sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HaarSymbol {
    n: usize,
    residues: Vec<usize>,
}

impl HaarSymbol {
    pub fn new(n: usize, residues: &[usize]) -> Result<HaarSymbol, HaarError> {
        if n == 0 {
            return Err(HaarError::ZeroModulus);
        }
        if residues.is_empty() {
            return Err(HaarError::EmptySymbol);
        }
        let mut rs: Vec<usize> = residues.iter().map(|&r| r % n).collect();
        rs.sort_unstable();
        rs.dedup();
        Ok(HaarSymbol { n, residues: rs })
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn arity(&self) -> usize {
        self.residues.len()
    }

    /// Text form `H(n;s1,s2,...)`, e.g. `H(7;0,1,3)`.
    pub fn to_text(&self) -> String {
        let rs: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        format!("H({};{})", self.n, rs.join(","))
    }

    /// Parses the `H(n;s1,...)` form emitted by [`HaarSymbol::to_text`].
    pub fn parse(text: &str) -> Result<HaarSymbol, HaarError> {
        let mut p = Parser::new(text);
        p.expect_str("H(")?;
        let n = p.number()?;
        p.expect(';')?;
        let mut residues = vec![p.number()?];
        while p.peek() == Some(',') {
            p.expect(',')?;
            residues.push(p.number()?);
        }
        p.expect(')')?;
        p.end()?;
        HaarSymbol::new(n, &residues)
    }

    /// Compact set form `{0,1,3}` used in survey tables.
    pub fn set_text(&self) -> String {
        let rs: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        format!("{{{}}}", rs.join(","))
    }
}

/// H(n, S) together with its symbol and the `i+`/`i-` vertex naming.
#[derive(Debug, Clone)]
pub struct HaarGraph {
    symbol: HaarSymbol,
    graph: Graph,
}

impl HaarGraph {
    pub fn symbol(&self) -> &HaarSymbol {
        &self.symbol
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Index of `i+`.
    pub fn plus(&self, i: usize) -> usize {
        i % self.symbol.n
    }

    /// Index of `i-`.
    pub fn minus(&self, i: usize) -> usize {
        self.symbol.n + i % self.symbol.n
    }

    pub fn vertex_label(&self, v: usize) -> String {
        let n = self.symbol.n;
        if v < n {
            format!("{v}+")
        } else {
            format!("{}-", v - n)
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..2 * self.symbol.n)
            .map(|v| self.vertex_label(v))
            .collect()
    }
}

/// Expands the symbol into the graph. The result has `2n` vertices and is
/// `|S|`-regular and bipartite with the plus side first.
pub fn build_haar(symbol: &HaarSymbol) -> HaarGraph {
    let n = symbol.n;
    let mut edges = Vec::with_capacity(n * symbol.residues.len());
    for i in 0..n {
        for &k in &symbol.residues {
            edges.push((i, n + (i + k) % n));
        }
    }
    let graph = Graph::from_edges(2 * n, &edges).expect("haar edges are valid by construction");
    HaarGraph {
        symbol: symbol.clone(),
        graph,
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether H(n, S) is connected, decided by BFS on the expanded graph. The
/// arithmetic criterion gcd(n, {s - s' : s, s' in S}) = 1 is kept as a
/// cross-check.
pub fn is_connected_haar(symbol: &HaarSymbol) -> bool {
    let connected = build_haar(symbol).graph.is_connected();
    let mut d = symbol.n;
    for (i, &s) in symbol.residues.iter().enumerate() {
        for &t in &symbol.residues[i + 1..] {
            d = gcd(d, t - s);
        }
    }
    debug_assert_eq!(
        connected,
        d == 1,
        "BFS and gcd criterion disagree on {symbol:?}"
    );
    connected
}

pub(crate) fn units(n: usize) -> Vec<usize> {
    (1..n.max(2)).filter(|&a| gcd(a, n) == 1).collect()
}

/// Lexicographically least member of the orbit `{a*S + b : a invertible, b}`.
/// Two symbols with equal canonical forms give isomorphic graphs; the map
/// `x+ -> (ax+b)+`, `x- -> (ax+b)-` realizes the isomorphism directly.
pub fn canonical_symbol(symbol: &HaarSymbol) -> HaarSymbol {
    let n = symbol.n;
    let mut best: Option<Vec<usize>> = None;
    for a in units(n) {
        let mapped: Vec<usize> = symbol.residues.iter().map(|&s| (a * s) % n).collect();
        // The minimum over all translations contains 0, so it is enough to
        // translate each element of a*S to 0 in turn.
        for &t in &mapped {
            let mut cand: Vec<usize> = mapped.iter().map(|&s| (s + n - t) % n).collect();
            cand.sort_unstable();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    HaarSymbol {
        n,
        residues: best.expect("symbol is nonempty"),
    }
}

/// One canonical representative per isomorphism class of connected cyclic
/// Haar graphs on 2n vertices with `arity` symbol elements, sorted.
///
/// Symbol-orbit canonicalization is the fast pre-filter; final class identity
/// is certified by the graph-isomorphism oracle, so the count stays correct
/// even if symbol equivalence under-merges.
pub fn enumerate_haar_classes(n: usize, arity: usize) -> Vec<HaarSymbol> {
    assert!(n >= 1 && arity >= 1);
    let mut canonical: Vec<HaarSymbol> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    // Every symbol translates to one containing 0.
    let mut residues = vec![0usize; arity];
    collect_symbols(n, arity, 1, &mut residues, &mut |rs| {
        let sym = HaarSymbol {
            n,
            residues: rs.to_vec(),
        };
        if !is_connected_haar(&sym) {
            return;
        }
        let canon = canonical_symbol(&sym);
        if seen.insert(canon.residues.clone()) {
            canonical.push(canon);
        }
    });
    canonical.sort();

    // Merge canonical symbols whose graphs are still isomorphic.
    let graphs: Vec<Graph> = canonical
        .iter()
        .map(|s| build_haar(s).into_graph())
        .collect();
    let mut class_of: Vec<usize> = (0..canonical.len()).collect();
    for i in 0..canonical.len() {
        if class_of[i] != i {
            continue;
        }
        for j in i + 1..canonical.len() {
            if class_of[j] == j && symmetry::are_isomorphic(&graphs[i], &graphs[j]).is_some() {
                class_of[j] = i;
            }
        }
    }
    canonical
        .into_iter()
        .enumerate()
        .filter(|(i, _)| class_of[*i] == *i)
        .map(|(_, s)| s)
        .collect()
}

fn collect_symbols(
    n: usize,
    arity: usize,
    depth: usize,
    residues: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == arity {
        f(residues);
        return;
    }
    let start = residues[depth - 1] + 1;
    for r in start..n {
        residues[depth] = r;
        collect_symbols(n, arity, depth + 1, residues, f);
    }
}

/// Builds the LCF graph: a Hamiltonian cycle on `steps.len() * repetitions`
/// vertices plus the chord `i -- i + steps[i mod len]` for every `i`. Chords
/// must pair up (the step at the far endpoint leads back), so every vertex
/// carries exactly one chord and the result is cubic.
pub fn build_lcf(steps: &[i64], repetitions: usize) -> Result<Graph, HaarError> {
    let len = steps.len();
    let n = len * repetitions;
    if n < 3 {
        return Err(HaarError::LcfTooSmall(len, repetitions));
    }
    if !n.is_multiple_of(2) {
        return Err(HaarError::LcfOddVertices(n));
    }
    let step = |i: usize| steps[i % len].rem_euclid(n as i64) as usize;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let s = step(i);
        if s == 0 {
            return Err(HaarError::LcfSelfLoop { index: i });
        }
        if s == 1 || s == n - 1 {
            return Err(HaarError::LcfDuplicateEdge { index: i });
        }
        let j = (i + s) % n;
        if (step(j) + s) % n != 0 {
            return Err(HaarError::LcfChordCollision {
                index: i,
                vertex: j,
            });
        }
        if i < j {
            edges.push((i, j));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Text form `LCF[5,-5]^7`.
pub fn lcf_to_text(steps: &[i64], repetitions: usize) -> String {
    let ss: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
    format!("LCF[{}]^{}", ss.join(","), repetitions)
}

/// Parses `LCF[a,b,...]^r`.
pub fn parse_lcf(text: &str) -> Result<(Vec<i64>, usize), HaarError> {
    let mut p = Parser::new(text);
    p.expect_str("LCF[")?;
    let mut steps = vec![p.signed()?];
    while p.peek() == Some(',') {
        p.expect(',')?;
        steps.push(p.signed()?);
    }
    p.expect(']')?;
    p.expect('^')?;
    let reps = p.number()?;
    p.end()?;
    Ok((steps, reps))
}

/// Minimal cursor-based parser shared by the text formats; reports 1-based
/// column positions on errors.
pub(crate) struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, HaarError> {
        Err(HaarError::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), HaarError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    pub(crate) fn expect_str(&mut self, s: &str) -> Result<(), HaarError> {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            self.err(format!("expected \"{s}\""))
        }
    }

    pub(crate) fn number(&mut self) -> Result<usize, HaarError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        match self.text[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => self.err("number out of range"),
        }
    }

    pub(crate) fn signed(&mut self) -> Result<i64, HaarError> {
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let v = self.number()? as i64;
        Ok(if neg { -v } else { v })
    }

    pub(crate) fn end(&self) -> Result<(), HaarError> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}
