//! Recognizers for the basic classes and the supporting graph classes:
//! series-parallel, complete bipartite trigraphs, prisms, thetas, line
//! trigraphs with qualified roots, cyclically 3-connected graphs.

use crate::freeness;
use crate::trigraph::{
    full_mask, mask_to_vec, vec_to_mask, NarrowPath, SimpleGraph, Trigraph,
};

// ---------------------------------------------------------------------------
// series-parallel
// ---------------------------------------------------------------------------

/// A small multigraph supporting degree-2 suppression, used by the
/// subdivision tests and the series-parallel reduction.
#[derive(Debug, Clone)]
pub struct Multigraph {
    n: usize,
    counts: Vec<Vec<u32>>,
    loops: Vec<u32>,
    alive: Vec<bool>,
}

impl Multigraph {
    pub fn from_graph(h: &SimpleGraph) -> Multigraph {
        let n = h.n();
        let mut counts = vec![vec![0u32; n]; n];
        for (u, v) in h.edges() {
            counts[u][v] = 1;
            counts[v][u] = 1;
        }
        Multigraph { n, counts, loops: vec![0; n], alive: vec![true; n] }
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.counts[v].iter().sum::<u32>() + 2 * self.loops[v]
    }

    pub fn alive_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.alive[v]).collect()
    }

    pub fn has_loop(&self) -> bool {
        self.loops.iter().any(|&l| l > 0)
    }

    pub fn has_parallel(&self) -> bool {
        (0..self.n).any(|u| self.counts[u].iter().any(|&c| c > 1))
    }

    pub fn edge_multiplicity(&self, u: usize, v: usize) -> u32 {
        self.counts[u][v]
    }

    /// Splice out every degree-2 vertex without a loop; repeats to a fixpoint.
    pub fn suppress_degree_two(&mut self) {
        loop {
            let v = (0..self.n)
                .find(|&v| self.alive[v] && self.loops[v] == 0 && self.degree(v) == 2);
            let Some(v) = v else { break };
            let mut ends = Vec::new();
            for u in 0..self.n {
                for _ in 0..self.counts[v][u] {
                    ends.push(u);
                }
            }
            debug_assert_eq!(ends.len(), 2);
            let (a, b) = (ends[0], ends[1]);
            self.counts[v][a] -= 1;
            self.counts[a][v] -= 1;
            self.counts[v][b] -= 1;
            self.counts[b][v] -= 1;
            if a == b {
                self.loops[a] += 1;
            } else {
                self.counts[a][b] += 1;
                self.counts[b][a] += 1;
            }
            self.alive[v] = false;
        }
    }

    /// The simple graph on the alive vertices, relabeled ascending, or `None`
    /// when loops or parallel edges remain.
    pub fn to_simple(&self) -> Option<(SimpleGraph, Vec<usize>)> {
        if self.has_loop() || self.has_parallel() {
            return None;
        }
        let alive = self.alive_vertices();
        let pos = |v: usize| alive.binary_search(&v).unwrap();
        let mut edges = Vec::new();
        for &u in &alive {
            for &v in &alive {
                if u < v && self.counts[u][v] == 1 {
                    edges.push((pos(u), pos(v)));
                }
            }
        }
        Some((SimpleGraph::from_edges(alive.len(), &edges), alive))
    }
}

/// No subdivision of K4 as a (not necessarily induced) subgraph of the full
/// realization. Multigraph reduction: delete loops and degree-≤1 vertices,
/// merge parallel edges, suppress degree-2 vertices; series-parallel iff
/// everything reduces away.
pub fn is_series_parallel(g: &Trigraph) -> bool {
    let h = g.full_realization();
    let mut m = Multigraph::from_graph(&h);
    loop {
        let mut acted = false;
        for v in 0..m.n {
            if !m.alive[v] {
                continue;
            }
            if m.loops[v] > 0 {
                m.loops[v] = 0;
                acted = true;
            }
            for u in 0..m.n {
                if m.counts[v][u] > 1 {
                    m.counts[v][u] = 1;
                    m.counts[u][v] = 1;
                    acted = true;
                }
            }
        }
        for v in 0..m.n {
            if m.alive[v] && m.degree(v) <= 1 {
                for u in 0..m.n {
                    m.counts[u][v] = 0;
                    m.counts[v][u] = 0;
                }
                m.loops[v] = 0;
                m.alive[v] = false;
                acted = true;
            }
        }
        for v in 0..m.n {
            if m.alive[v] && m.loops[v] == 0 && m.degree(v) == 2 {
                let mut ends = Vec::new();
                for u in 0..m.n {
                    for _ in 0..m.counts[v][u] {
                        ends.push(u);
                    }
                }
                let (a, b) = (ends[0], ends[1]);
                m.counts[v][a] -= 1;
                m.counts[a][v] -= 1;
                m.counts[v][b] -= 1;
                m.counts[b][v] -= 1;
                if a == b {
                    m.loops[a] += 1;
                } else {
                    m.counts[a][b] += 1;
                    m.counts[b][a] += 1;
                }
                m.alive[v] = false;
                acted = true;
                break;
            }
        }
        if !acted {
            break;
        }
    }
    m.alive_vertices().is_empty()
}

/// Direct search for a K4 subdivision as a subgraph: four branch vertices
/// and six pairwise internally disjoint connecting paths. The independent
/// route the reduction is checked against.
pub fn has_k4_subdivision_subgraph(h: &SimpleGraph) -> bool {
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let n = h.n();
    if n < 4 {
        return false;
    }

    fn route(h: &SimpleGraph, branch: &[usize; 4], used: &mut u64, idx: usize) -> bool {
        const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        if idx == 6 {
            return true;
        }
        let (s, t) = (branch[PAIRS[idx].0], branch[PAIRS[idx].1]);
        extend(h, branch, used, idx, s, t)
    }

    fn extend(
        h: &SimpleGraph,
        branch: &[usize; 4],
        used: &mut u64,
        idx: usize,
        last: usize,
        t: usize,
    ) -> bool {
        if h.adjacent(last, t) && route(h, branch, used, idx + 1) {
            return true;
        }
        for w in mask_to_vec(h.neighbor_mask(last) & !*used) {
            if branch.contains(&w) {
                continue;
            }
            *used |= 1 << w;
            if extend(h, branch, used, idx, w, t) {
                return true;
            }
            *used &= !(1 << w);
        }
        false
    }

    let _ = PAIRS;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let branch = [a, b, c, d];
                    let mut used = vec_to_mask(&branch);
                    if route(h, &branch, &mut used, 0) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// complete bipartite trigraphs
// ---------------------------------------------------------------------------

/// A bipartition into two strongly stable sets, strongly complete to each
/// other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Bipartition {
    pub fn is_thick(&self) -> bool {
        self.a.len().min(self.b.len()) >= 3
    }

    /// Re-validate the invariants against a host trigraph.
    pub fn validate(&self, g: &Trigraph) -> bool {
        let mut all: Vec<usize> = self.a.iter().chain(self.b.iter()).copied().collect();
        all.sort_unstable();
        all == g.vertices().collect::<Vec<_>>()
            && g.is_strongly_stable(&self.a)
            && g.is_strongly_stable(&self.b)
            && self.a.iter().all(|&u| self.b.iter().all(|&v| g.strongly_adjacent(u, v)))
    }
}

/// The bipartition of a complete bipartite trigraph, if one exists, plus the
/// thick flag. Sides are forced: the strongly-adjacent pairs must form a
/// connected complete bipartite graph whose unique 2-coloring gives the
/// sides (side `a` holds the smallest vertex).
pub fn as_complete_bipartite(g: &Trigraph) -> Option<(Bipartition, bool)> {
    let n = g.vertex_count();
    if g.pairs().any(|(u, v)| g.semi_adjacent(u, v)) {
        return None;
    }
    let result = if n == 0 {
        Bipartition { a: vec![], b: vec![] }
    } else {
        let plus_edges: Vec<(usize, usize)> =
            g.pairs().filter(|&(u, v)| g.strongly_adjacent(u, v)).collect();
        if plus_edges.is_empty() {
            Bipartition { a: (0..n).collect(), b: vec![] }
        } else {
            // 2-color the strong adjacency graph from vertex 0
            let mut color = vec![u8::MAX; n];
            color[0] = 0;
            let mut queue = std::collections::VecDeque::from([0usize]);
            while let Some(v) = queue.pop_front() {
                for u in 0..n {
                    if u != v && g.strongly_adjacent(u, v) {
                        if color[u] == u8::MAX {
                            color[u] = 1 - color[v];
                            queue.push_back(u);
                        } else if color[u] == color[v] {
                            return None; // odd cycle
                        }
                    }
                }
            }
            if color.iter().any(|&c| c == u8::MAX) {
                return None; // disconnected strong graph cannot be complete bipartite
            }
            let a: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
            let b: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
            if plus_edges.len() != a.len() * b.len() {
                return None; // not strongly complete across
            }
            Bipartition { a, b }
        }
    };
    if !result.validate(g) {
        return None;
    }
    let thick = result.is_thick();
    Some((result, thick))
}

// ---------------------------------------------------------------------------
// prisms
// ---------------------------------------------------------------------------

/// The named pieces of a prism: two strong triangles and the three flat
/// branches joining them (`branches[i]` runs from `triangle1[i]` to
/// `triangle2[i]`).
#[derive(Debug, Clone)]
pub struct PrismPieces {
    pub triangle1: [usize; 3],
    pub triangle2: [usize; 3],
    pub branches: [NarrowPath; 3],
}

impl PrismPieces {
    pub fn triangle_pieces(&self) -> [[usize; 3]; 2] {
        [self.triangle1, self.triangle2]
    }

    pub fn branch_pieces(&self) -> &[NarrowPath; 3] {
        &self.branches
    }
}

fn verify_prism(g: &Trigraph, pieces: &PrismPieces) -> bool {
    let n = g.vertex_count();
    // branches partition the vertex set and carry the matched endpoints
    let mut seen = vec![false; n];
    for (i, br) in pieces.branches.iter().enumerate() {
        let (s, e) = br.endpoints();
        if s != pieces.triangle1[i] || e != pieces.triangle2[i] {
            return false;
        }
        for &v in br.order() {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return false;
    }
    if !g.is_strong_clique(&pieces.triangle1) || !g.is_strong_clique(&pieces.triangle2) {
        return false;
    }
    for br in &pieces.branches {
        // valid narrow path
        if NarrowPath::new(g, br.order().to_vec()).is_err() {
            return false;
        }
        // flat in g: no adjacent pair of the branch lies in a triangle of g
        if br.order().windows(2).any(|w| g.pair_in_triangle(w[0], w[1])) {
            return false;
        }
    }
    // cross conditions: the triangle edges are the only adjacent pairs
    // between distinct branches
    for i in 0..3 {
        for j in i + 1..3 {
            for &u in pieces.branches[i].order() {
                for &v in pieces.branches[j].order() {
                    let is_t1 = u == pieces.triangle1[i] && v == pieces.triangle1[j];
                    let is_t2 = u == pieces.triangle2[i] && v == pieces.triangle2[j];
                    if is_t1 || is_t2 {
                        if !g.strongly_adjacent(u, v) {
                            return false;
                        }
                    } else if !g.strongly_anti_adjacent(u, v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Recognize the whole trigraph as a prism and name its pieces.
pub fn as_prism(g: &Trigraph) -> Option<PrismPieces> {
    let triangles = g.strong_triangles();
    const PERMS: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for (ti, t1) in triangles.iter().enumerate() {
        for t2 in triangles.iter().skip(ti + 1) {
            if t1.iter().any(|v| t2.contains(v)) {
                continue;
            }
            for perm in PERMS {
                let matched = [t2[perm[0]], t2[perm[1]], t2[perm[2]]];
                if let Some(pieces) = try_prism(g, *t1, matched) {
                    return Some(pieces);
                }
            }
        }
    }
    None
}

fn try_prism(g: &Trigraph, t1: [usize; 3], t2: [usize; 3]) -> Option<PrismPieces> {
    let mut branches: Vec<NarrowPath> = Vec::with_capacity(3);
    for i in 0..3 {
        let start = t1[i];
        let target = t2[i];
        let mates: Vec<usize> = t1.iter().copied().filter(|&v| v != start).collect();
        let first: Vec<usize> = g
            .neighbors(start)
            .into_iter()
            .filter(|v| !mates.contains(v))
            .collect();
        if first.len() != 1 {
            return None;
        }
        let mut order = vec![start, first[0]];
        loop {
            let last = *order.last().unwrap();
            if last == target {
                break;
            }
            if t1.contains(&last) || t2.contains(&last) {
                return None;
            }
            let prev = order[order.len() - 2];
            let nexts: Vec<usize> =
                g.neighbors(last).into_iter().filter(|&v| v != prev).collect();
            if nexts.len() != 1 || order.contains(&nexts[0]) {
                return None;
            }
            order.push(nexts[0]);
        }
        branches.push(NarrowPath::new(g, order).ok()?);
    }
    let pieces = PrismPieces {
        triangle1: t1,
        triangle2: t2,
        branches: [branches[0].clone(), branches[1].clone(), branches[2].clone()],
    };
    verify_prism(g, &pieces).then_some(pieces)
}

// ---------------------------------------------------------------------------
// line trigraphs
// ---------------------------------------------------------------------------

/// A recognized root graph: the full realization of the trigraph equals the
/// line graph of `graph` under `edge_map` (`edge_map[v]` is the root edge
/// carried by trigraph vertex `v`).
#[derive(Debug, Clone)]
pub struct RootGraph {
    pub graph: SimpleGraph,
    pub edge_map: Vec<(usize, usize)>,
}

impl RootGraph {
    /// Edge list plus the edge → vertex map, for external re-verification.
    pub fn serialize(&self) -> String {
        let mut out = format!("root-graph n={}\n", self.graph.n());
        for (v, &(a, b)) in self.edge_map.iter().enumerate() {
            out.push_str(&format!("edge {a} {b} -> vertex {v}\n"));
        }
        out
    }
}

/// Recognize a line trigraph: every triangle strong and the full realization
/// a line graph; returns the root with its edge map. Root reconstruction is
/// a Krausz-style partition of the edges into cliques with every vertex in
/// at most two cliques, preferring larger cliques (so the triangle resolves
/// to the claw root K_{1,3}).
pub fn as_line_trigraph(g: &Trigraph) -> Option<RootGraph> {
    // all triangles strong: no semi pair may lie in a triangle
    for (u, v) in g.pairs() {
        if g.semi_adjacent(u, v) && g.pair_in_triangle(u, v) {
            return None;
        }
    }
    let h = g.full_realization();
    let cliques = krausz_partition(&h)?;

    // assemble the root
    let mut vertex_cliques: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            vertex_cliques[v].push(ci);
        }
    }
    let mut root_n = cliques.len();
    let mut edge_map: Vec<(usize, usize)> = Vec::with_capacity(h.n());
    for v in 0..h.n() {
        let ends: (usize, usize) = match vertex_cliques[v].as_slice() {
            [c1, c2] => (*c1, *c2),
            [c1] => {
                let pendant = root_n;
                root_n += 1;
                (*c1, pendant)
            }
            [] => {
                let (p, q) = (root_n, root_n + 1);
                root_n += 2;
                (p, q)
            }
            _ => return None,
        };
        edge_map.push((ends.0.min(ends.1), ends.0.max(ends.1)));
    }
    // a simple root needs pairwise distinct edges
    let mut sorted = edge_map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != edge_map.len() {
        return None;
    }
    let root = SimpleGraph::from_edges(root_n, &edge_map);

    // round-trip check, always executed: adjacency in the full realization
    // must coincide with sharing a root endpoint
    for (u, v) in h.as_trigraph().pairs() {
        let (a, b) = edge_map[u];
        let (c, d) = edge_map[v];
        let share = a == c || a == d || b == c || b == d;
        if share != h.adjacent(u, v) {
            return None;
        }
    }
    Some(RootGraph { graph: root, edge_map })
}

/// Partition the edges of `h` into cliques with every vertex in at most two,
/// preferring larger cliques at each uncovered edge.
fn krausz_partition(h: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let edges = h.edges();
    let edge_index: std::collections::HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut covered = vec![false; edges.len()];
    let mut count = vec![0u8; h.n()];
    let mut cliques: Vec<Vec<usize>> = Vec::new();

    fn clique_edges(
        c: &[usize],
        edge_index: &std::collections::HashMap<(usize, usize), usize>,
    ) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                out.push(edge_index[&(c[i].min(c[j]), c[i].max(c[j]))]);
            }
        }
        out
    }

    fn solve(
        h: &SimpleGraph,
        edges: &[(usize, usize)],
        edge_index: &std::collections::HashMap<(usize, usize), usize>,
        covered: &mut Vec<bool>,
        count: &mut Vec<u8>,
        cliques: &mut Vec<Vec<usize>>,
    ) -> bool {
        let Some(first) = covered.iter().position(|&c| !c) else {
            return true;
        };
        let (u, v) = edges[first];
        if count[u] >= 2 || count[v] >= 2 {
            return false;
        }
        // candidate cliques through uv: {u,v} plus a clique inside the common
        // neighborhood, larger candidates first
        let common: Vec<usize> = mask_to_vec(h.neighbor_mask(u) & h.neighbor_mask(v));
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        let m = common.len();
        for sub in 0..(1u64 << m) {
            let mut c = vec![u, v];
            c.extend(mask_to_vec(sub).into_iter().map(|i| common[i]));
            candidates.push(c);
        }
        candidates.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        'cand: for c in candidates {
            // internal pairs must be edges (common-neighborhood subsets may
            // not be cliques), uncovered, and counts must stay within two
            for i in 2..c.len() {
                for j in 2..i {
                    if !h.adjacent(c[i], c[j]) {
                        continue 'cand;
                    }
                }
            }
            let ce = clique_edges(&c, edge_index);
            if ce.iter().any(|&e| covered[e]) {
                continue;
            }
            if c.iter().any(|&w| count[w] >= 2) {
                continue;
            }
            for &e in &ce {
                covered[e] = true;
            }
            for &w in &c {
                count[w] += 1;
            }
            cliques.push(c.clone());
            // a saturated vertex with uncovered incident edges is a dead end
            let dead = c.iter().any(|&w| {
                count[w] == 2
                    && h.neighbors(w).iter().any(|&x| {
                        !covered[edge_index[&(w.min(x), w.max(x))]]
                    })
            });
            if !dead && solve(h, edges, edge_index, covered, count, cliques) {
                return true;
            }
            cliques.pop();
            for &w in &c {
                count[w] -= 1;
            }
            for &e in &ce {
                covered[e] = false;
            }
        }
        false
    }

    solve(&h.clone(), &edges, &edge_index, &mut covered, &mut count, &mut cliques)
        .then_some(cliques)
}

// ---------------------------------------------------------------------------
// root qualification
// ---------------------------------------------------------------------------

/// The three flags of the strong decomposition theorem's line-trigraph
/// outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootQualification {
    pub chordless: bool,
    pub cyclically_3_connected: bool,
    pub max_degree_3: bool,
}

impl RootQualification {
    pub fn all(self) -> bool {
        self.chordless && self.cyclically_3_connected && self.max_degree_3
    }
}

pub fn qualify_root(h: &SimpleGraph) -> RootQualification {
    RootQualification {
        chordless: freeness::is_chordless(h),
        cyclically_3_connected: is_cyclically_3_connected(h),
        max_degree_3: (0..h.n()).all(|v| h.degree(v) <= 3),
    }
}

fn is_two_connected(h: &SimpleGraph) -> bool {
    h.n() >= 3
        && h.is_connected()
        && (0..h.n()).all(|v| {
            h.component_masks(full_mask(h.n()) & !(1 << v)).len() == 1
        })
}

pub fn is_cycle_graph(h: &SimpleGraph) -> bool {
    h.n() >= 3 && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}

fn mask_has_cycle(h: &SimpleGraph, mask: u64) -> bool {
    let vs = mask_to_vec(mask);
    let mut edge_count = 0usize;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[..i] {
            if h.adjacent(u, v) {
                edge_count += 1;
            }
        }
    }
    edge_count > vs.len() - h.component_masks(mask).len()
}

/// 2-connected, not a cycle, and without a 2-separation whose both sides
/// have cycles. Separation sides are unions of whole components of `h − S`
/// plus `S`, which the component-bipartition enumeration captures exactly.
pub fn is_cyclically_3_connected(h: &SimpleGraph) -> bool {
    if !is_two_connected(h) || is_cycle_graph(h) {
        return false;
    }
    let n = h.n();
    let mut cut_sets: Vec<u64> = vec![0];
    for u in 0..n {
        cut_sets.push(1 << u);
        for v in u + 1..n {
            cut_sets.push((1 << u) | (1 << v));
        }
    }
    for s in cut_sets {
        let comps = h.component_masks(full_mask(n) & !s);
        let k = comps.len();
        if k < 2 {
            continue;
        }
        // component 0 pinned to one side to avoid mirrored bipartitions
        for assign in 0..(1u64 << (k - 1)) {
            let mut side_a = comps[0];
            let mut side_b = 0u64;
            for (i, &c) in comps.iter().enumerate().skip(1) {
                if assign & (1 << (i - 1)) != 0 {
                    side_a |= c;
                } else {
                    side_b |= c;
                }
            }
            if side_b == 0 {
                continue;
            }
            if mask_has_cycle(h, side_a | s) && mask_has_cycle(h, side_b | s) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// thetas and subdivisions of 3-connected graphs
// ---------------------------------------------------------------------------

/// Any subdivision of K_{2,3}: two degree-3 vertices joined by three
/// internally disjoint paths, each of length ≥ 2.
pub fn is_theta(h: &SimpleGraph) -> bool {
    let mut m = Multigraph::from_graph(h);
    m.suppress_degree_two();
    let alive = m.alive_vertices();
    if alive.len() != 2 || m.has_loop() {
        return false;
    }
    let (a, b) = (alive[0], alive[1]);
    // exactly the triple edge, and no length-1 branch (K_{2,3} subdivisions
    // have all three paths of length ≥ 2)
    m.edge_multiplicity(a, b) == 3 && !h.adjacent(a, b)
}

fn is_three_connected(h: &SimpleGraph) -> bool {
    let n = h.n();
    if n < 4 || !h.is_connected() {
        return false;
    }
    for u in 0..n {
        if h.component_masks(full_mask(n) & !(1 << u)).len() != 1 {
            return false;
        }
        for v in u + 1..n {
            let rest = full_mask(n) & !(1 << u) & !(1 << v);
            if h.component_masks(rest).len() != 1 {
                return false;
            }
        }
    }
    true
}

/// Suppressing the degree-2 vertices yields a simple 3-connected graph on at
/// least four vertices.
pub fn is_subdivision_of_3connected(h: &SimpleGraph) -> bool {
    let mut m = Multigraph::from_graph(h);
    m.suppress_degree_two();
    match m.to_simple() {
        None => false,
        Some((core, _)) => core.n() >= 4 && is_three_connected(&core),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::ForbiddenPattern;
    use crate::generate;
    use crate::trigraph::AdjValue;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    fn k4() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn series_parallel_examples() {
        assert!(is_series_parallel(cycle(4).as_trigraph()));
        assert!(!is_series_parallel(k4().as_trigraph()));
        assert!(!is_series_parallel(&generate::strong_k33()));
        assert!(is_series_parallel(&Trigraph::new(0)));
        assert!(is_series_parallel(&Trigraph::new(1)));
    }

    #[test]
    fn series_parallel_agrees_with_subgraph_search_small() {
        // exhaustive over all labeled graphs on <= 5 vertices
        for n in 0..=5usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for code in 0u32..(1 << pairs) {
                let mut edges = Vec::new();
                for (idx, (u, v)) in (0..n)
                    .flat_map(|hi| (0..hi).map(move |lo| (lo, hi)))
                    .enumerate()
                {
                    if code & (1 << idx) != 0 {
                        edges.push((u, v));
                    }
                }
                let h = SimpleGraph::from_edges(n, &edges);
                assert_eq!(
                    is_series_parallel(h.as_trigraph()),
                    !has_k4_subdivision_subgraph(&h),
                    "n={n} code={code}"
                );
            }
        }
    }

    #[test]
    fn series_parallel_agrees_on_random_n7() {
        for seed in 0..120u64 {
            let g = generate::random_trigraph(7, 0.35, 0.0, seed);
            let h = g.full_realization();
            assert_eq!(is_series_parallel(&g), !has_k4_subdivision_subgraph(&h));
        }
    }

    #[test]
    fn complete_bipartite_examples() {
        let (bip, thick) = as_complete_bipartite(&generate::strong_k33()).unwrap();
        assert!(thick);
        assert_eq!(bip.a.len(), 3);
        assert_eq!(bip.b.len(), 3);

        let with_semi = generate::with_semi_pairs(generate::strong_k33(), &[(0, 3)]).unwrap();
        assert!(as_complete_bipartite(&with_semi).is_none());

        let (bip, thick) = as_complete_bipartite(&generate::complete_bipartite(1, 4)).unwrap();
        assert!(!thick);
        assert_eq!(bip.a.len().min(bip.b.len()), 1);

        // edgeless: single side
        let (bip, thick) = as_complete_bipartite(&Trigraph::new(3)).unwrap();
        assert_eq!(bip.a.len(), 3);
        assert!(bip.b.is_empty());
        assert!(!thick);
    }

    #[test]
    fn prism_recognizer_examples() {
        let p = generate::prism(&[1, 1, 1], &[]).unwrap();
        let pieces = as_prism(&p).unwrap();
        assert!(pieces.branches.iter().all(|b| b.len() == 1));

        let semi_triangle = generate::prism(&[1, 1, 1], &[(0, 1)]).unwrap();
        assert!(as_prism(&semi_triangle).is_none());

        assert!(as_prism(cycle(6).as_trigraph()).is_none());

        // semi pairs on branches are fine
        let p2 = generate::prism(&[2, 2, 2], &[(0, 6)]).unwrap();
        assert!(as_prism(&p2).is_some());

        let p3 = generate::prism(&[1, 2, 3], &[]).unwrap();
        let pieces = as_prism(&p3).unwrap();
        let mut lens: Vec<usize> = pieces.branches.iter().map(|b| b.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 2, 3]);
    }

    #[test]
    fn generated_prisms_are_isk4_and_wheel_free() {
        for l1 in 1..=3usize {
            for l2 in l1..=3 {
                for l3 in l2..=3 {
                    let p = generate::prism(&[l1, l2, l3], &[]).unwrap();
                    assert!(crate::freeness::is_free_fast(&p, ForbiddenPattern::Isk4));
                    assert!(crate::freeness::is_free_fast(&p, ForbiddenPattern::Wheel));
                }
            }
        }
    }

    #[test]
    fn line_trigraph_examples() {
        // prism -> root is a theta
        let p = generate::prism(&[1, 1, 1], &[]).unwrap();
        let root = as_line_trigraph(&p).unwrap();
        assert!(is_theta(&root.graph));

        // triangle with a semi pair: a non-strong triangle
        let mut tri = Trigraph::new(3);
        for (u, v) in [(0, 1), (0, 2)] {
            tri.set(u, v, AdjValue::StronglyAdjacent);
        }
        tri.set(1, 2, AdjValue::SemiAdjacent);
        assert!(as_line_trigraph(&tri).is_none());

        // strong K3: root is the claw K_{1,3}
        let mut k3 = Trigraph::new(3);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            k3.set(u, v, AdjValue::StronglyAdjacent);
        }
        let root = as_line_trigraph(&k3).unwrap();
        assert_eq!(root.graph.n(), 4);
        let mut degs: Vec<usize> = (0..4).map(|v| root.graph.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3]);

        // K_{3,3} is not a line graph (it has claws)
        assert!(as_line_trigraph(&generate::strong_k33()).is_none());
    }

    #[test]
    fn line_trigraph_round_trip_on_families() {
        for counts in [[1, 1, 1, 1, 1, 1], [2, 1, 1, 1, 1, 1], [2, 2, 1, 1, 2, 1]] {
            let g = generate::line_trigraph_of_subdivided_k4(&counts, &[]).unwrap();
            let root = as_line_trigraph(&g).unwrap();
            let (lg, _) = generate::line_graph(&root.graph);
            let a = generate::canonical_form(lg.as_trigraph());
            let b = generate::canonical_form(g.full_realization().as_trigraph());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn qualify_root_examples() {
        let theta = generate::theta_graph(&[2, 2, 2]).unwrap();
        let q = qualify_root(&theta);
        assert!(q.chordless && q.cyclically_3_connected && q.max_degree_3);

        let q = qualify_root(&k4());
        assert!(!q.chordless);
        assert!(q.cyclically_3_connected);
        assert!(q.max_degree_3);

        let q = qualify_root(&cycle(6));
        assert!(q.chordless);
        assert!(!q.cyclically_3_connected, "a cycle is excluded by definition");
        assert!(q.max_degree_3);
    }

    #[test]
    fn theta_and_subdivision_examples() {
        let k23 = SimpleGraph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(is_theta(&k23));
        assert!(!is_subdivision_of_3connected(&k23));

        let sk4 = generate::subdivided_k4(&[1; 6]).unwrap();
        assert!(is_subdivision_of_3connected(&sk4));
        assert!(!is_theta(&sk4));

        let c8 = cycle(8);
        assert!(!is_theta(&c8));
        assert!(!is_subdivision_of_3connected(&c8));

        // theta with a direct hub-hub edge is not a subdivision of K_{2,3}
        let fake = SimpleGraph::from_edges(
            6,
            &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 1)],
        );
        assert!(!is_theta(&fake));
    }

    #[test]
    fn lemma45_spot_check_small() {
        for n in 1..=6usize {
            let pairs = n * n.saturating_sub(1) / 2;
            let step = if n == 6 { 17 } else { 1 }; // sampled at n=6, exhaustive below
            let mut code = 0u32;
            while (code as u64) < (1u64 << pairs) {
                let mut edges = Vec::new();
                for (idx, (u, v)) in (0..n)
                    .flat_map(|hi| (0..hi).map(move |lo| (lo, hi)))
                    .enumerate()
                {
                    if code & (1 << idx) != 0 {
                        edges.push((u, v));
                    }
                }
                let h = SimpleGraph::from_edges(n, &edges);
                assert_eq!(
                    is_cyclically_3_connected(&h),
                    is_theta(&h) || is_subdivision_of_3connected(&h),
                    "n={n} code={code}"
                );
                code += step;
            }
        }
    }
}
