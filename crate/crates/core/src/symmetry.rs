//! Automorphism groups, arc-transitivity, GRR testing and exact graph
//! isomorphism by partition refinement with backtracking.
//!
//! Refinement keys on the multiset of neighbor cell ids; individualization
//! always picks the first smallest non-singleton cell. Every bijection a
//! search returns is verified edge-by-edge before being accepted, so bugs in
//! the pruning machinery can only cost time, never correctness of a witness.

use crate::graph::Graph;

/// Ordered partition of `0..n`; cell ids correspond across the two sides of a
/// lockstep search.
#[derive(Clone)]
struct Partition {
    cell_of: Vec<usize>,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        Partition {
            cell_of: vec![0; n],
            cells: if n == 0 {
                Vec::new()
            } else {
                vec![(0..n).collect()]
            },
        }
    }

    fn from_coloring(colors: &[usize]) -> Partition {
        let mut distinct: Vec<usize> = colors.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let mut cells = vec![Vec::new(); distinct.len()];
        let mut cell_of = vec![0; colors.len()];
        for (v, c) in colors.iter().enumerate() {
            let id = distinct.binary_search(c).unwrap();
            cells[id].push(v);
            cell_of[v] = id;
        }
        Partition { cell_of, cells }
    }

    /// Moves `v` into a fresh singleton cell appended at the end.
    fn individualize(&mut self, v: usize) {
        let c = self.cell_of[v];
        self.cells[c].retain(|&u| u != v);
        self.cell_of[v] = self.cells.len();
        self.cells.push(vec![v]);
    }

    /// First smallest cell with at least two members.
    fn pick_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() >= 2)
            .min_by_key(|(id, c)| (c.len(), *id))
            .map(|(id, _)| id)
    }
}

/// Splits cells by the multiset of neighbor cell ids until stable. The
/// procedure is deterministic and isomorphism-invariant, so two isomorphic
/// graphs with corresponding partitions refine to corresponding partitions.
fn refine(g: &Graph, p: &mut Partition) {
    loop {
        let mut changed = false;
        let cell_count = p.cells.len();
        for cell_id in 0..cell_count {
            if p.cells[cell_id].len() <= 1 {
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> = p.cells[cell_id]
                .iter()
                .map(|&v| (neighbor_signature(g, p, v), v))
                .collect();
            keyed.sort();
            if keyed.first().map(|k| &k.0) == keyed.last().map(|k| &k.0) {
                continue;
            }
            // first group keeps this id, later groups go to the end in key order
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut last: Option<&Vec<(usize, usize)>> = None;
            for (key, v) in &keyed {
                if last != Some(key) {
                    groups.push(Vec::new());
                    last = Some(key);
                }
                groups.last_mut().unwrap().push(*v);
            }
            let mut iter = groups.into_iter();
            p.cells[cell_id] = iter.next().unwrap();
            for v in &p.cells[cell_id] {
                p.cell_of[*v] = cell_id;
            }
            for group in iter {
                let id = p.cells.len();
                for v in &group {
                    p.cell_of[*v] = id;
                }
                p.cells.push(group);
            }
            changed = true;
        }
        if !changed {
            return;
        }
    }
}

fn neighbor_signature(g: &Graph, p: &Partition, v: usize) -> Vec<(usize, usize)> {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    let mut ids: Vec<usize> = g.neighbors(v).map(|u| p.cell_of[u]).collect();
    ids.sort_unstable();
    for id in ids {
        match counts.last_mut() {
            Some((last, c)) if *last == id => *c += 1,
            _ => counts.push((id, 1)),
        }
    }
    counts
}

fn compatible(pa: &Partition, pb: &Partition) -> bool {
    pa.cells.len() == pb.cells.len()
        && pa
            .cells
            .iter()
            .zip(&pb.cells)
            .all(|(a, b)| a.len() == b.len())
}

/// Checks that `perm` maps `a` onto `b` edge for edge.
fn is_isomorphism(a: &Graph, b: &Graph, perm: &[usize]) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v]))
}

/// Backtracking core: find one bijection of `ga` onto `gb` respecting the
/// given partitions, or prove there is none.
fn search(ga: &Graph, mut pa: Partition, gb: &Graph, mut pb: Partition) -> Option<Vec<usize>> {
    refine(ga, &mut pa);
    refine(gb, &mut pb);
    if !compatible(&pa, &pb) {
        return None;
    }
    match pa.pick_cell() {
        None => {
            let mut perm = vec![0; ga.vertex_count()];
            for (ca, cb) in pa.cells.iter().zip(&pb.cells) {
                perm[ca[0]] = cb[0];
            }
            is_isomorphism(ga, gb, &perm).then_some(perm)
        }
        Some(cell) => {
            let v = pa.cells[cell][0];
            for &u in &pb.cells[cell] {
                let mut pa2 = pa.clone();
                pa2.individualize(v);
                let mut pb2 = pb.clone();
                pb2.individualize(u);
                if let Some(perm) = search(ga, pa2, gb, pb2) {
                    return Some(perm);
                }
            }
            None
        }
    }
}

/// A witness bijection from `a` to `b`, or `None` when the graphs are not
/// isomorphic. The returned permutation maps edges to edges bijectively.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    search(
        a,
        Partition::unit(a.vertex_count()),
        b,
        Partition::unit(b.vertex_count()),
    )
}

/// Isomorphism respecting vertex colors: `perm[v]` always has the same color
/// as `v`. Used for color-preserving Levi graph comparisons.
pub fn are_isomorphic_colored(
    a: &Graph,
    a_colors: &[usize],
    b: &Graph,
    b_colors: &[usize],
) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    // cell ids must describe the same colors on both sides
    let mut da: Vec<usize> = a_colors.to_vec();
    da.sort_unstable();
    da.dedup();
    let mut db: Vec<usize> = b_colors.to_vec();
    db.sort_unstable();
    db.dedup();
    if da != db {
        return None;
    }
    let pa = Partition::from_coloring(a_colors);
    let pb = Partition::from_coloring(b_colors);
    if !compatible(&pa, &pb) {
        return None;
    }
    search(a, pa, b, pb)
}

/// Automorphism group given by generators and its exact order.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub generators: Vec<Vec<usize>>,
    pub order: u64,
}

impl AutomorphismGroup {
    /// Orbit of a vertex under the generated group.
    pub fn vertex_orbit(&self, v: usize, n: usize) -> Vec<usize> {
        let mut seen = vec![false; n];
        seen[v] = true;
        let mut queue = vec![v];
        while let Some(u) = queue.pop() {
            for gen in &self.generators {
                let w = gen[u];
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        (0..n).filter(|&u| seen[u]).collect()
    }
}

/// Generators and exact order of the automorphism group, color-preserving
/// when a coloring is supplied. The order is assembled from orbit sizes along
/// the stabilizer chain discovered by the search, never by listing the group.
pub fn automorphism_group(g: &Graph, coloring: Option<&[usize]>) -> AutomorphismGroup {
    let p = match coloring {
        Some(c) => {
            assert_eq!(
                c.len(),
                g.vertex_count(),
                "coloring length must match vertex count"
            );
            Partition::from_coloring(c)
        }
        None => Partition::unit(g.vertex_count()),
    };
    let (generators, order) = aut_search(g, p);
    for gen in &generators {
        debug_assert!(is_isomorphism(g, g, gen));
    }
    AutomorphismGroup { generators, order }
}

fn aut_search(g: &Graph, mut p: Partition) -> (Vec<Vec<usize>>, u64) {
    refine(g, &mut p);
    let Some(cell) = p.pick_cell() else {
        return (Vec::new(), 1);
    };
    let v = p.cells[cell][0];

    let mut stab_part = p.clone();
    stab_part.individualize(v);
    let (mut generators, stab_order) = aut_search(g, stab_part);

    // Grow the orbit of v: one coset representative per new orbit member.
    let mut orbit = orbit_of(v, &generators, g.vertex_count());
    let candidates: Vec<usize> = p.cells[cell].clone();
    for u in candidates {
        if orbit.contains(&u) {
            continue;
        }
        let mut pa = p.clone();
        pa.individualize(v);
        let mut pb = p.clone();
        pb.individualize(u);
        if let Some(perm) = search(g, pa, g, pb) {
            generators.push(perm);
            orbit = orbit_of(v, &generators, g.vertex_count());
        }
    }
    (generators, stab_order * orbit.len() as u64)
}

fn orbit_of(v: usize, generators: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut queue = vec![v];
    while let Some(u) = queue.pop() {
        for gen in generators {
            let w = gen[u];
            if !seen[w] {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    (0..n).filter(|&u| seen[u]).collect()
}

/// True when the automorphism group acts transitively on ordered adjacent
/// pairs. Requires a connected graph with at least one edge.
pub fn is_arc_transitive(g: &Graph) -> bool {
    assert!(
        g.vertex_count() >= 2,
        "arc transitivity needs at least 2 vertices"
    );
    assert!(
        g.is_connected(),
        "arc transitivity is defined for connected graphs"
    );
    if g.edge_count() == 0 {
        return false;
    }
    let group = automorphism_group(g, None);
    let (u0, v0) = g.edges()[0];
    let mut seen = std::collections::HashSet::new();
    seen.insert((u0, v0));
    let mut queue = vec![(u0, v0)];
    while let Some((u, v)) = queue.pop() {
        for gen in &group.generators {
            let arc = (gen[u], gen[v]);
            if seen.insert(arc) {
                queue.push(arc);
            }
        }
    }
    seen.len() == 2 * g.edge_count()
}

/// True when the automorphism group acts regularly on the vertices, i.e. the
/// graph is vertex-transitive and the group order equals the vertex count.
pub fn is_zero_symmetric(g: &Graph) -> bool {
    assert!(
        g.is_connected(),
        "GRR testing is defined for connected graphs"
    );
    let n = g.vertex_count();
    let group = automorphism_group(g, None);
    group.order == n as u64 && group.vertex_orbit(0, n).len() == n
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    automorphism_group(g, None).vertex_orbit(0, n).len() == n
}

/// One-line image notation, `"0 3 1 2"` for the permutation sending 1 to 3.
pub fn format_permutation(perm: &[usize]) -> String {
    perm.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
