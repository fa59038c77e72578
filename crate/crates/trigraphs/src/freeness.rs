//! Detection of forbidden structures — ISK4, wheel, diamond, K4, K_{3,3} —
//! in simple graphs and, via realizations, in trigraphs.
//!
//! A trigraph is pattern-free when every realization is; the default
//! detector therefore enumerates realizations and runs a graph detector.
//! For the fixed-size patterns (diamond, K4, K_{3,3}) a subset can realize a
//! pattern edge `uv` iff θ ≥ 0 and a non-edge iff θ ≤ 0, each pair being
//! decided independently, so those are scanned directly. The same rule
//! drives constructive searches for ISK4 and wheels which the verification
//! harness cross-checks against the realization-enumeration route.

use crate::trigraph::{full_mask, mask_to_vec, SimpleGraph, Trigraph};

/// Minimum length of a wheel's rim hole. The verifier can re-run wheel
/// detection with triangle rims allowed (`min_rim = 3`).
pub const DEFAULT_MIN_RIM: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForbiddenPattern {
    Isk4,
    Wheel,
    Diamond,
    K4,
    K33,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 5] = [
        ForbiddenPattern::Isk4,
        ForbiddenPattern::Wheel,
        ForbiddenPattern::Diamond,
        ForbiddenPattern::K4,
        ForbiddenPattern::K33,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::Isk4 => "isk4",
            ForbiddenPattern::Wheel => "wheel",
            ForbiddenPattern::Diamond => "diamond",
            ForbiddenPattern::K4 => "k4",
            ForbiddenPattern::K33 => "k33",
        }
    }

    pub fn parse(s: &str) -> Option<ForbiddenPattern> {
        match s.to_ascii_lowercase().as_str() {
            "isk4" => Some(ForbiddenPattern::Isk4),
            "wheel" => Some(ForbiddenPattern::Wheel),
            "diamond" => Some(ForbiddenPattern::Diamond),
            "k4" => Some(ForbiddenPattern::K4),
            "k33" => Some(ForbiddenPattern::K33),
            _ => None,
        }
    }
}

/// A located forbidden structure. `vertices` are host coordinates; the
/// realization choice (one decision per semi-adjacent pair of the host) is
/// present only when the host is a trigraph.
#[derive(Debug, Clone)]
pub struct Witness {
    pub kind: ForbiddenPattern,
    pub vertices: Vec<usize>,
    pub realization: Option<Vec<(usize, usize, bool)>>,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "witness kind={} vertices={:?}", self.kind.name(), self.vertices)?;
        if let Some(ch) = &self.realization {
            let decided: Vec<String> = ch
                .iter()
                .map(|&(u, v, e)| format!("{u}-{v}:{}", if e { "edge" } else { "nonedge" }))
                .collect();
            write!(f, " realization=[{}]", decided.join(","))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// graph-level detectors
// ---------------------------------------------------------------------------

/// Is the subgraph induced by `mask` a subdivision of K4?
pub fn is_subdivision_of_k4_mask(h: &SimpleGraph, mask: u64) -> bool {
    let vs = mask_to_vec(mask);
    if vs.len() < 4 {
        return false;
    }
    let deg = |v: usize| (h.neighbor_mask(v) & mask).count_ones();
    let mut branch = Vec::with_capacity(4);
    for &v in &vs {
        match deg(v) {
            3 => branch.push(v),
            2 => {}
            _ => return false,
        }
    }
    if branch.len() != 4 {
        return false;
    }
    if h.component_masks(mask).len() != 1 {
        return false;
    }
    // walk the six chains; suppressing degree-2 vertices must give K4 with no
    // loops or parallel edges
    let mut walked: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut chain_pairs: Vec<(usize, usize)> = Vec::new();
    for &b in &branch {
        for w in mask_to_vec(h.neighbor_mask(b) & mask) {
            if walked.contains(&(b.min(w), b.max(w))) {
                continue;
            }
            let mut prev = b;
            let mut cur = w;
            walked.insert((b.min(w), b.max(w)));
            while deg(cur) == 2 {
                let next = mask_to_vec(h.neighbor_mask(cur) & mask)
                    .into_iter()
                    .find(|&u| u != prev)
                    .expect("degree-2 vertex has two neighbors");
                walked.insert((cur.min(next), cur.max(next)));
                prev = cur;
                cur = next;
            }
            if cur == b {
                return false; // chain loops back
            }
            chain_pairs.push((b.min(cur), b.max(cur)));
        }
    }
    if chain_pairs.len() != 6 {
        return false;
    }
    chain_pairs.sort_unstable();
    chain_pairs.dedup();
    chain_pairs.len() == 6 // all six branch-vertex pairs, no parallels
}

/// Is `h` (the whole graph) a subdivision of K4?
pub fn is_subdivision_of_k4(h: &SimpleGraph) -> bool {
    is_subdivision_of_k4_mask(h, full_mask(h.n()))
}

/// First vertex set (by ascending subset mask) inducing a subdivision of K4,
/// or `None`. Exhaustive and correct; exponential time, desk scale.
pub fn find_isk4(h: &SimpleGraph) -> Option<Vec<usize>> {
    let n = h.n();
    for mask in 0..=full_mask(n) {
        if mask.count_ones() >= 4 && is_subdivision_of_k4_mask(h, mask) {
            return Some(mask_to_vec(mask));
        }
    }
    None
}

/// A hole (chordless cycle of length ≥ `min_rim`) plus a hub with at least
/// three neighbors on it.
#[derive(Debug, Clone)]
pub struct WheelParts {
    pub hole: Vec<usize>,
    pub hub: usize,
}

/// Is the subgraph induced by `mask` a chordless cycle of length ≥ `min_rim`?
pub fn is_hole_mask(h: &SimpleGraph, mask: u64, min_rim: usize) -> bool {
    if (mask.count_ones() as usize) < min_rim {
        return false;
    }
    let vs = mask_to_vec(mask);
    vs.iter().all(|&v| (h.neighbor_mask(v) & mask).count_ones() == 2)
        && h.component_masks(mask).len() == 1
}

pub fn find_wheel_rim(h: &SimpleGraph, min_rim: usize) -> Option<WheelParts> {
    let n = h.n();
    for mask in 0..=full_mask(n) {
        if !is_hole_mask(h, mask, min_rim) {
            continue;
        }
        for hub in 0..n {
            if mask & (1 << hub) != 0 {
                continue;
            }
            if (h.neighbor_mask(hub) & mask).count_ones() >= 3 {
                return Some(WheelParts { hole: hole_order(h, mask), hub });
            }
        }
    }
    None
}

pub fn find_wheel(h: &SimpleGraph) -> Option<WheelParts> {
    find_wheel_rim(h, DEFAULT_MIN_RIM)
}

/// Cyclic order of a hole given as a mask.
fn hole_order(h: &SimpleGraph, mask: u64) -> Vec<usize> {
    let vs = mask_to_vec(mask);
    let start = vs[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = mask_to_vec(h.neighbor_mask(start) & mask)[0];
    while cur != start {
        order.push(cur);
        let next = mask_to_vec(h.neighbor_mask(cur) & mask)
            .into_iter()
            .find(|&u| u != prev)
            .expect("hole vertex has two cycle neighbors");
        prev = cur;
        cur = next;
    }
    order
}

/// Is the whole graph a wheel (hole of length ≥ `min_rim` plus a hub with
/// ≥ 3 neighbors on it)?
pub fn is_wheel_graph(h: &SimpleGraph, min_rim: usize) -> bool {
    let n = h.n();
    if n < min_rim + 1 {
        return false;
    }
    (0..n).any(|hub| {
        let rest = full_mask(n) & !(1 << hub);
        is_hole_mask(h, rest, min_rim) && h.degree(hub) >= 3
    })
}

/// Every cycle is induced. Checked edge by edge: `uv` is a chord of some
/// cycle iff `h − uv` still has two internally vertex-disjoint u–v paths.
pub fn is_chordless(h: &SimpleGraph) -> bool {
    h.edges().iter().all(|&(u, v)| !two_internally_disjoint_paths(h, u, v))
}

/// Are there two internally vertex-disjoint u–v paths in `h` minus the edge
/// `uv` (if present)? Unit-capacity max-flow on the vertex-split graph.
fn two_internally_disjoint_paths(h: &SimpleGraph, s: usize, t: usize) -> bool {
    let n = h.n();
    // node 2v = v_in, 2v+1 = v_out
    let mut cap = vec![vec![0i32; 2 * n]; 2 * n];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { 2 } else { 1 };
    }
    for (a, b) in h.edges() {
        if (a, b) == (s.min(t), s.max(t)) {
            continue;
        }
        cap[2 * a + 1][2 * b] = 1;
        cap[2 * b + 1][2 * a] = 1;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < 2 {
        // BFS augmenting path on residual capacities
        let mut parent = vec![usize::MAX; 2 * n];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..2 * n {
                if parent[y] == usize::MAX && cap[x][y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow >= 2
}

// ---------------------------------------------------------------------------
// trigraph-level detectors
// ---------------------------------------------------------------------------

/// A witness for pattern `p` in trigraph `g`, or `None` iff every realization
/// of `g` is `p`-free. Diamond/K4/K33 are scanned directly over fixed-size
/// subsets; ISK4 and wheel enumerate realizations and run the graph
/// detectors (first witness in counter-then-subset order wins).
pub fn pattern_witness(g: &Trigraph, p: ForbiddenPattern) -> Option<Witness> {
    pattern_witness_rim(g, p, DEFAULT_MIN_RIM)
}

pub fn pattern_witness_rim(g: &Trigraph, p: ForbiddenPattern, min_rim: usize) -> Option<Witness> {
    match p {
        ForbiddenPattern::Diamond | ForbiddenPattern::K4 | ForbiddenPattern::K33 => {
            scan_fixed_pattern(g, p)
        }
        ForbiddenPattern::Isk4 | ForbiddenPattern::Wheel => {
            let semis = g.semi_pairs();
            assert!(semis.len() < 64, "too many semi-adjacent pairs to enumerate");
            for counter in 0..(1u64 << semis.len()) {
                let r = crate::trigraph::Realizations::realize(g, &semis, counter);
                let vertices = match p {
                    ForbiddenPattern::Isk4 => find_isk4(&r),
                    ForbiddenPattern::Wheel => find_wheel_rim(&r, min_rim).map(|w| {
                        let mut vs = w.hole.clone();
                        vs.push(w.hub);
                        vs.sort_unstable();
                        vs
                    }),
                    _ => unreachable!(),
                };
                if let Some(vs) = vertices {
                    return Some(Witness {
                        kind: p,
                        vertices: vs,
                        realization: Some(crate::trigraph::Realizations::choice(&semis, counter)),
                    });
                }
            }
            None
        }
    }
}

pub fn is_free(g: &Trigraph, p: ForbiddenPattern) -> bool {
    pattern_witness(g, p).is_none()
}

/// As [`pattern_witness`], but ISK4 and wheel use the constructive
/// trigraph-level searches instead of realization enumeration. Agreement
/// with the enumeration route is machine-checked by the verifier.
pub fn pattern_witness_fast(g: &Trigraph, p: ForbiddenPattern) -> Option<Witness> {
    pattern_witness_fast_rim(g, p, DEFAULT_MIN_RIM)
}

pub fn pattern_witness_fast_rim(
    g: &Trigraph,
    p: ForbiddenPattern,
    min_rim: usize,
) -> Option<Witness> {
    match p {
        ForbiddenPattern::Diamond | ForbiddenPattern::K4 | ForbiddenPattern::K33 => {
            scan_fixed_pattern(g, p)
        }
        ForbiddenPattern::Isk4 => scan_isk4(g),
        ForbiddenPattern::Wheel => scan_wheel(g, min_rim),
    }
}

pub fn is_free_fast(g: &Trigraph, p: ForbiddenPattern) -> bool {
    pattern_witness_fast(g, p).is_none()
}

pub fn is_free_all_fast(g: &Trigraph, patterns: &[ForbiddenPattern]) -> bool {
    patterns.iter().all(|&p| is_free_fast(g, p))
}

/// Realization decisions for a witness: pairs playing an edge role are
/// decided up, every other semi-adjacent pair down.
fn choice_for_roles(g: &Trigraph, edge_roles: &std::collections::HashSet<(usize, usize)>) -> Vec<(usize, usize, bool)> {
    g.semi_pairs()
        .into_iter()
        .map(|(u, v)| (u, v, edge_roles.contains(&(u, v))))
        .collect()
}

/// Direct subset scan for the fixed patterns: a subset realizes the pattern
/// iff every pattern edge has θ ≥ 0 and every pattern non-edge has θ ≤ 0.
fn scan_fixed_pattern(g: &Trigraph, p: ForbiddenPattern) -> Option<Witness> {
    let n = g.vertex_count();
    match p {
        ForbiddenPattern::K4 => {
            for a in 0..n {
                for b in a + 1..n {
                    if !g.adjacent(a, b) {
                        continue;
                    }
                    for c in b + 1..n {
                        if !g.adjacent(a, c) || !g.adjacent(b, c) {
                            continue;
                        }
                        for d in c + 1..n {
                            if g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d) {
                                let vs = vec![a, b, c, d];
                                let mut roles = std::collections::HashSet::new();
                                for i in 0..4 {
                                    for j in i + 1..4 {
                                        roles.insert((vs[i].min(vs[j]), vs[i].max(vs[j])));
                                    }
                                }
                                return Some(Witness {
                                    kind: p,
                                    vertices: vs,
                                    realization: Some(choice_for_roles(g, &roles)),
                                });
                            }
                        }
                    }
                }
            }
            None
        }
        ForbiddenPattern::Diamond => {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let vs = [a, b, c, d];
                            // choose the missing pair
                            for miss in 0..6 {
                                let pairs =
                                    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                                let ok = pairs.iter().enumerate().all(|(k, &(i, j))| {
                                    if k == miss {
                                        g.anti_adjacent(vs[i], vs[j])
                                    } else {
                                        g.adjacent(vs[i], vs[j])
                                    }
                                });
                                if ok {
                                    let mut roles = std::collections::HashSet::new();
                                    for (k, &(i, j)) in pairs.iter().enumerate() {
                                        if k != miss {
                                            roles.insert((
                                                vs[i].min(vs[j]),
                                                vs[i].max(vs[j]),
                                            ));
                                        }
                                    }
                                    return Some(Witness {
                                        kind: p,
                                        vertices: vs.to_vec(),
                                        realization: Some(choice_for_roles(g, &roles)),
                                    });
                                }
                            }
                        }
                    }
                }
            }
            None
        }
        ForbiddenPattern::K33 => {
            if n < 6 {
                return None;
            }
            let sets = crate::util::subsets_of_size(n, 6);
            for vs in sets {
                // bipartitions with vs[0] pinned to side A
                for i in 1..5 {
                    for j in i + 1..6 {
                        let side_a = [vs[0], vs[i], vs[j]];
                        let side_b: Vec<usize> =
                            vs.iter().copied().filter(|v| !side_a.contains(v)).collect();
                        let internal_ok = |side: &[usize]| {
                            side.iter().enumerate().all(|(x, &u)| {
                                side[..x].iter().all(|&w| g.anti_adjacent(u, w))
                            })
                        };
                        let cross_ok = side_a
                            .iter()
                            .all(|&u| side_b.iter().all(|&w| g.adjacent(u, w)));
                        if internal_ok(&side_a) && internal_ok(&side_b) && cross_ok {
                            let mut roles = std::collections::HashSet::new();
                            for &u in &side_a {
                                for &w in &side_b {
                                    roles.insert((u.min(w), u.max(w)));
                                }
                            }
                            return Some(Witness {
                                kind: p,
                                vertices: vs.clone(),
                                realization: Some(choice_for_roles(g, &roles)),
                            });
                        }
                    }
                }
            }
            None
        }
        _ => unreachable!("scan_fixed_pattern only handles fixed-size patterns"),
    }
}

// ---------------------------------------------------------------------------
// constructive trigraph-level searches
// ---------------------------------------------------------------------------

const BRANCH_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

struct Isk4Search<'a> {
    g: &'a Trigraph,
    placed: Vec<usize>,
    in_placed: u64,
    branch: [usize; 4],
    interiors: [Vec<usize>; 6],
}

impl<'a> Isk4Search<'a> {
    /// DFS over the six paths; `path_idx` is the next path to route.
    fn route(&mut self, path_idx: usize) -> bool {
        if path_idx == 6 {
            return true;
        }
        let (bi, bj) = BRANCH_PAIRS[path_idx];
        let (bu, bv) = (self.branch[bi], self.branch[bj]);
        self.extend(path_idx, bu, bv)
    }

    fn extend(&mut self, path_idx: usize, last: usize, bv: usize) -> bool {
        // option 1: close the path at bv
        if self.g.adjacent(last, bv) && self.try_close(path_idx, bv) {
            if self.route(path_idx + 1) {
                return true;
            }
        }
        // option 2: append an interior vertex
        for w in 0..self.g.vertex_count() {
            if self.in_placed & (1 << w) != 0 || !self.g.adjacent(last, w) {
                continue;
            }
            // w must be realizable as non-adjacent to everything placed
            // except its predecessor; its relation to bv is settled when the
            // path closes
            let ok = self
                .placed
                .iter()
                .all(|&x| x == last || x == bv || self.g.anti_adjacent(w, x));
            if !ok {
                continue;
            }
            self.placed.push(w);
            self.in_placed |= 1 << w;
            self.interiors[path_idx].push(w);
            if self.extend(path_idx, w, bv) {
                return true;
            }
            self.interiors[path_idx].pop();
            self.in_placed &= !(1 << w);
            self.placed.pop();
        }
        false
    }

    /// Deferred checks when a path reaches its target.
    fn try_close(&self, path_idx: usize, bv: usize) -> bool {
        let ints = &self.interiors[path_idx];
        if ints.is_empty() {
            return true; // direct edge, nothing deferred
        }
        // all interiors but the last must be non-adjacent to bv, and the two
        // branch vertices must be realizable as a non-edge
        let (bi, bj) = BRANCH_PAIRS[path_idx];
        let bu = self.branch[bi];
        debug_assert_eq!(bv, self.branch[bj]);
        ints[..ints.len() - 1].iter().all(|&x| self.g.anti_adjacent(x, bv))
            && self.g.anti_adjacent(bu, bv)
    }

    fn witness(&self) -> Witness {
        let mut roles = std::collections::HashSet::new();
        for (idx, &(bi, bj)) in BRANCH_PAIRS.iter().enumerate() {
            let mut seq = vec![self.branch[bi]];
            seq.extend(self.interiors[idx].iter().copied());
            seq.push(self.branch[bj]);
            for w in seq.windows(2) {
                roles.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        let mut vs = self.placed.clone();
        vs.sort_unstable();
        Witness {
            kind: ForbiddenPattern::Isk4,
            vertices: vs,
            realization: Some(choice_for_roles(self.g, &roles)),
        }
    }
}

/// Constructive ISK4 search: choose four branch vertices and route six
/// internally disjoint paths, every structure pair realizable as edge
/// (θ ≥ 0 consecutive) or non-edge (θ ≤ 0 elsewhere).
pub fn scan_isk4(g: &Trigraph) -> Option<Witness> {
    let n = g.vertex_count();
    if n < 4 {
        return None;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let mut s = Isk4Search {
                        g,
                        placed: vec![a, b, c, d],
                        in_placed: (1 << a) | (1 << b) | (1 << c) | (1 << d),
                        branch: [a, b, c, d],
                        interiors: Default::default(),
                    };
                    if s.route(0) {
                        return Some(s.witness());
                    }
                }
            }
        }
    }
    None
}

/// Constructive wheel search: enumerate realizable holes (consecutive pairs
/// θ ≥ 0, non-consecutive θ ≤ 0) and scan for a hub with ≥ 3 neighbors.
pub fn scan_wheel(g: &Trigraph, min_rim: usize) -> Option<Witness> {
    let n = g.vertex_count();
    if n < min_rim + 1 {
        return None;
    }
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for v0 in 0..n {
        path.clear();
        path.push(v0);
        if let Some(w) = wheel_dfs(g, &mut path, min_rim) {
            return Some(w);
        }
    }
    None
}

fn wheel_dfs(g: &Trigraph, path: &mut Vec<usize>, min_rim: usize) -> Option<Witness> {
    let v0 = path[0];
    let k = path.len() - 1;
    let last = path[k];

    // try closing the hole
    if path.len() >= min_rim
        && g.adjacent(v0, last)
        && path[1] < last
        && path[2..k].iter().all(|&x| g.anti_adjacent(v0, x))
    {
        if let Some(w) = hub_for_hole(g, path, min_rim) {
            return Some(w);
        }
    }

    // extend
    for w in v0 + 1..g.vertex_count() {
        if path.contains(&w) || !g.adjacent(last, w) {
            continue;
        }
        if k >= 2 && !path[1..k].iter().all(|&x| g.anti_adjacent(x, w)) {
            continue;
        }
        path.push(w);
        if let Some(found) = wheel_dfs(g, path, min_rim) {
            return Some(found);
        }
        path.pop();
    }
    None
}

fn hub_for_hole(g: &Trigraph, hole: &[usize], _min_rim: usize) -> Option<Witness> {
    for hub in 0..g.vertex_count() {
        if hole.contains(&hub) {
            continue;
        }
        let nbrs: Vec<usize> =
            hole.iter().copied().filter(|&c| g.adjacent(hub, c)).collect();
        if nbrs.len() < 3 {
            continue;
        }
        let mut roles = std::collections::HashSet::new();
        for i in 0..hole.len() {
            let (u, v) = (hole[i], hole[(i + 1) % hole.len()]);
            roles.insert((u.min(v), u.max(v)));
        }
        for &c in &nbrs {
            roles.insert((hub.min(c), hub.max(c)));
        }
        let mut vs = hole.to_vec();
        vs.push(hub);
        vs.sort_unstable();
        return Some(Witness {
            kind: ForbiddenPattern::Wheel,
            vertices: vs,
            realization: Some(choice_for_roles(g, &roles)),
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::trigraph::AdjValue;

    fn strong_k4() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn k23() -> SimpleGraph {
        SimpleGraph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    }

    fn prism_graph() -> SimpleGraph {
        generate::prism(&[1, 1, 1], &[]).unwrap().full_realization()
    }

    #[test]
    fn subdivision_of_k4_examples() {
        assert!(is_subdivision_of_k4(&strong_k4()));
        // K4 with one edge subdivided once
        let g = SimpleGraph::from_edges(
            5,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)],
        );
        assert!(is_subdivision_of_k4(&g));
        // K_{2,3} is a theta, degree sequence 3,3,2,2,2 fails the 4-branch test
        assert!(!is_subdivision_of_k4(&k23()));
    }

    #[test]
    fn find_isk4_examples() {
        assert_eq!(find_isk4(&strong_k4()), Some(vec![0, 1, 2, 3]));
        assert!(find_isk4(&prism_graph()).is_none());
        let k33 = SimpleGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        );
        assert!(find_isk4(&k33).is_none());
    }

    #[test]
    fn find_wheel_examples() {
        // C4 plus a vertex adjacent to 3 cycle vertices
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)]);
        assert!(find_wheel(&g).is_some());
        assert!(find_wheel(&prism_graph()).is_none());
        // long rich squares are not wheel-free
        let lrs = generate::long_rich_square(&[2, 2]).unwrap();
        assert!(find_wheel(&lrs.full_realization()).is_some());
    }

    #[test]
    fn chordless_examples() {
        let tree = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert!(is_chordless(&tree));
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(is_chordless(&c5));
        assert!(!is_chordless(&strong_k4()));
        assert!(is_chordless(&k23()));
    }

    #[test]
    fn chordless_agrees_with_cycle_enumeration_oracle() {
        // oracle: enumerate all cycles, look for a chord
        fn oracle(h: &SimpleGraph) -> bool {
            let n = h.n();
            let mut ok = true;
            let mut path: Vec<usize> = Vec::new();
            fn dfs(h: &SimpleGraph, path: &mut Vec<usize>, ok: &mut bool) {
                let v0 = path[0];
                let last = *path.last().unwrap();
                if path.len() >= 3 && h.adjacent(v0, last) && path[1] < last {
                    // found a cycle; check chords
                    for i in 0..path.len() {
                        for j in i + 2..path.len() {
                            if i == 0 && j == path.len() - 1 {
                                continue;
                            }
                            if h.adjacent(path[i], path[j]) {
                                *ok = false;
                            }
                        }
                    }
                }
                for w in v0 + 1..h.n() {
                    if !path.contains(&w) && h.adjacent(last, w) {
                        path.push(w);
                        dfs(h, path, ok);
                        path.pop();
                    }
                }
            }
            for v0 in 0..n {
                path.clear();
                path.push(v0);
                dfs(h, &mut path, &mut ok);
            }
            ok
        }

        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
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
                assert_eq!(is_chordless(&h), oracle(&h), "n={n} code={code}");
            }
        }
    }

    #[test]
    fn trigraph_witness_examples() {
        // 4 vertices, all semi, pattern K4
        let mut g = Trigraph::new(4);
        for (u, v) in g.pairs().collect::<Vec<_>>() {
            g.set(u, v, AdjValue::SemiAdjacent);
        }
        let w = pattern_witness(&g, ForbiddenPattern::K4).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(w.realization.unwrap().iter().all(|&(_, _, e)| e));

        // strong K_{3,3}: ISK4-free
        let k33 = generate::strong_k33();
        assert!(pattern_witness(&k33, ForbiddenPattern::Isk4).is_none());
        assert!(scan_isk4(&k33).is_none());

        // C4 plus hub strongly adjacent to 3 cycle vertices: wheel, with the
        // unique realization choice empty
        let mut g = Trigraph::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)] {
            g.set(u, v, AdjValue::StronglyAdjacent);
        }
        let w = pattern_witness(&g, ForbiddenPattern::Wheel).unwrap();
        assert!(w.realization.unwrap().is_empty());
        assert!(scan_wheel(&g, 4).is_some());
    }

    #[test]
    fn fast_and_default_agree_exhaustively_n4() {
        for g in generate::enumerate_trigraphs(4, false).unwrap() {
            for p in ForbiddenPattern::ALL {
                assert_eq!(
                    pattern_witness(&g, p).is_some(),
                    pattern_witness_fast(&g, p).is_some(),
                    "pattern {p:?} disagrees on {g:?}"
                );
            }
        }
    }

    #[test]
    fn fast_and_default_agree_on_random_n6() {
        let mut seed = 11u64;
        for _ in 0..150 {
            let g = generate::random_trigraph(6, 0.35, 0.2, seed);
            seed += 1;
            for p in [ForbiddenPattern::Isk4, ForbiddenPattern::Wheel] {
                assert_eq!(
                    pattern_witness(&g, p).is_some(),
                    pattern_witness_fast(&g, p).is_some(),
                    "pattern {p:?} disagrees on {g:?}"
                );
            }
        }
    }

    #[test]
    fn hereditary_isk4_spot_check() {
        let mut seed = 5u64;
        let mut checked = 0;
        while checked < 25 {
            let g = generate::random_trigraph(7, 0.3, 0.0, seed);
            seed += 1;
            let h = g.full_realization();
            if find_isk4(&h).is_some() {
                continue;
            }
            checked += 1;
            for drop in 0..7 {
                let sub = h.as_trigraph().without(&[drop]);
                let sg = SimpleGraph::from_trigraph(sub.trigraph).unwrap();
                assert!(find_isk4(&sg).is_none());
            }
        }
    }

    #[test]
    fn monotone_under_semi_realization_n4() {
        // if g' is a semi-realization of g and g is p-free then g' is p-free
        let all: Vec<Trigraph> = generate::enumerate_trigraphs(4, false).unwrap().collect();
        for g in &all {
            for p in [ForbiddenPattern::K4, ForbiddenPattern::Diamond] {
                if pattern_witness(g, p).is_none() {
                    for h in all.iter().filter(|h| h.is_semi_realization_of(g)) {
                        assert!(pattern_witness(h, p).is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn witness_realization_contains_pattern() {
        let mut g = Trigraph::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            g.set(u, v, AdjValue::SemiAdjacent);
        }
        for (u, v) in [(4, 0), (4, 1), (4, 2)] {
            g.set(u, v, AdjValue::StronglyAdjacent);
        }
        let w = pattern_witness(&g, ForbiddenPattern::Wheel).unwrap();
        // replay the chosen realization and confirm the witness subset
        let mut t = g.clone();
        for (u, v, e) in w.realization.unwrap() {
            t.set(
                u,
                v,
                if e { AdjValue::StronglyAdjacent } else { AdjValue::StronglyAntiAdjacent },
            );
        }
        let r = SimpleGraph::from_trigraph(t).unwrap();
        let sub = r.as_trigraph().induced(&w.vertices).unwrap();
        let sg = SimpleGraph::from_trigraph(sub.trigraph).unwrap();
        assert!(is_wheel_graph(&sg, 4));
    }
}
