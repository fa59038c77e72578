//! The trigraph data model: three-valued adjacency, realizations, induced
//! subtrigraphs, connectivity, narrow paths, and branch structure.

use crate::error::{Error, Result};

/// Hard cap on vertex counts. Everything in this crate is desk scale, and the
/// bound lets connectivity searches run on `u64` vertex masks.
pub const MAX_VERTICES: usize = 64;

/// One value of the adjacency function: strongly anti-adjacent (−1),
/// semi-adjacent (0), or strongly adjacent (+1). The derived order is the
/// numeric order −1 < 0 < +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdjValue {
    StronglyAntiAdjacent,
    SemiAdjacent,
    StronglyAdjacent,
}

impl AdjValue {
    pub const ALL: [AdjValue; 3] = [
        AdjValue::StronglyAntiAdjacent,
        AdjValue::SemiAdjacent,
        AdjValue::StronglyAdjacent,
    ];

    pub fn as_i8(self) -> i8 {
        match self {
            AdjValue::StronglyAntiAdjacent => -1,
            AdjValue::SemiAdjacent => 0,
            AdjValue::StronglyAdjacent => 1,
        }
    }

    pub fn from_i8(v: i8) -> Option<AdjValue> {
        match v {
            -1 => Some(AdjValue::StronglyAntiAdjacent),
            0 => Some(AdjValue::SemiAdjacent),
            1 => Some(AdjValue::StronglyAdjacent),
            _ => None,
        }
    }

    /// Negation, as used by the trigraph complement.
    pub fn negate(self) -> AdjValue {
        match self {
            AdjValue::StronglyAntiAdjacent => AdjValue::StronglyAdjacent,
            AdjValue::SemiAdjacent => AdjValue::SemiAdjacent,
            AdjValue::StronglyAdjacent => AdjValue::StronglyAntiAdjacent,
        }
    }

    /// The `.tri` symbol: `+`, `0`, or `-`.
    pub fn symbol(self) -> char {
        match self {
            AdjValue::StronglyAntiAdjacent => '-',
            AdjValue::SemiAdjacent => '0',
            AdjValue::StronglyAdjacent => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<AdjValue> {
        match c {
            '-' => Some(AdjValue::StronglyAntiAdjacent),
            '0' => Some(AdjValue::SemiAdjacent),
            '+' => Some(AdjValue::StronglyAdjacent),
            _ => None,
        }
    }
}

/// A trigraph: vertices `0..n` plus a total three-valued adjacency function on
/// unordered vertex pairs, stored as a flat triangular array indexed by pair
/// rank so every lookup is O(1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trigraph {
    n: usize,
    theta: Vec<AdjValue>,
}

/// Rank of the unordered pair `{u, v}` in the colex order
/// (0,1), (0,2), (1,2), (0,3), ...
#[inline]
pub fn pair_rank(u: usize, v: usize) -> usize {
    debug_assert!(u != v);
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

impl Trigraph {
    /// A trigraph on `n` vertices with every pair strongly anti-adjacent.
    pub fn new(n: usize) -> Trigraph {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Trigraph {
            n,
            theta: vec![AdjValue::StronglyAntiAdjacent; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn from_theta(n: usize, theta: Vec<AdjValue>) -> Trigraph {
        assert!(n <= MAX_VERTICES);
        assert_eq!(theta.len(), n * n.saturating_sub(1) / 2);
        Trigraph { n, theta }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All unordered pairs in colex order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |hi| (0..hi).map(move |lo| (lo, hi)))
    }

    pub fn theta(&self, u: usize, v: usize) -> AdjValue {
        self.theta[pair_rank(u, v)]
    }

    pub fn set(&mut self, u: usize, v: usize, value: AdjValue) {
        self.theta[pair_rank(u, v)] = value;
    }

    pub fn theta_slice(&self) -> &[AdjValue] {
        &self.theta
    }

    /// θ(uv) ≥ 0: `v` is a neighbor of `u`.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.theta(u, v) >= AdjValue::SemiAdjacent
    }

    /// θ(uv) ≤ 0.
    pub fn anti_adjacent(&self, u: usize, v: usize) -> bool {
        self.theta(u, v) <= AdjValue::SemiAdjacent
    }

    pub fn strongly_adjacent(&self, u: usize, v: usize) -> bool {
        self.theta(u, v) == AdjValue::StronglyAdjacent
    }

    pub fn strongly_anti_adjacent(&self, u: usize, v: usize) -> bool {
        self.theta(u, v) == AdjValue::StronglyAntiAdjacent
    }

    pub fn semi_adjacent(&self, u: usize, v: usize) -> bool {
        self.theta(u, v) == AdjValue::SemiAdjacent
    }

    /// Neighbors of `v` (θ ≥ 0), ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.adjacent(u, v)).collect()
    }

    /// Number of neighbors; semi-adjacent pairs count.
    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| u != v && self.adjacent(u, v)).count()
    }

    /// Bitmask of the neighbors of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        let mut m = 0u64;
        for u in 0..self.n {
            if u != v && self.adjacent(u, v) {
                m |= 1 << u;
            }
        }
        m
    }

    /// Semi-adjacent pairs in colex order.
    pub fn semi_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(u, v)| self.semi_adjacent(u, v)).collect()
    }

    pub fn is_graph(&self) -> bool {
        !self.theta.iter().any(|&t| t == AdjValue::SemiAdjacent)
    }

    /// All pairs pairwise strongly adjacent.
    pub fn is_strong_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[..i].iter().all(|&v| self.strongly_adjacent(u, v)))
    }

    /// All pairs pairwise adjacent (θ ≥ 0).
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[..i].iter().all(|&v| self.adjacent(u, v)))
    }

    /// All pairs pairwise anti-adjacent (θ ≤ 0).
    pub fn is_stable(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[..i].iter().all(|&v| self.anti_adjacent(u, v)))
    }

    pub fn is_strongly_stable(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[..i].iter().all(|&v| self.strongly_anti_adjacent(u, v)))
    }

    /// Does the adjacent pair `uv` lie in a triangle (a clique of size three)?
    pub fn pair_in_triangle(&self, u: usize, v: usize) -> bool {
        (0..self.n).any(|w| w != u && w != v && self.adjacent(w, u) && self.adjacent(w, v))
    }

    /// Strong triangles (pairwise strongly adjacent triples), lexicographic.
    pub fn strong_triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.strongly_adjacent(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.strongly_adjacent(a, c) && self.strongly_adjacent(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// The complement: every pair value negated. An involution.
    pub fn complement(&self) -> Trigraph {
        Trigraph {
            n: self.n,
            theta: self.theta.iter().map(|t| t.negate()).collect(),
        }
    }

    /// The subtrigraph induced by `x`, relabeled to `0..x.len()` with the
    /// old-vertex map recorded so witnesses can be reported in host
    /// coordinates. `x` is sorted; duplicates and unknown vertices error.
    pub fn induced(&self, x: &[usize]) -> Result<InducedSubtrigraph> {
        let mut map: Vec<usize> = x.to_vec();
        map.sort_unstable();
        if map.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate vertex in induced set".into()));
        }
        if let Some(&v) = map.last() {
            if v >= self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for trigraph on {} vertices",
                    self.n
                )));
            }
        }
        let mut sub = Trigraph::new(map.len());
        for i in 0..map.len() {
            for j in 0..i {
                sub.set(j, i, self.theta(map[j], map[i]));
            }
        }
        Ok(InducedSubtrigraph { trigraph: sub, vertex_map: map })
    }

    /// Induced subtrigraph on the complement of `cut`.
    pub fn without(&self, cut: &[usize]) -> InducedSubtrigraph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !cut.contains(v)).collect();
        self.induced(&keep).expect("complement set is always valid")
    }

    /// The full realization: every semi-adjacent pair becomes an edge.
    pub fn full_realization(&self) -> SimpleGraph {
        let mut t = self.clone();
        for v in t.theta.iter_mut() {
            if *v == AdjValue::SemiAdjacent {
                *v = AdjValue::StronglyAdjacent;
            }
        }
        SimpleGraph::from_trigraph(t).expect("no semi-adjacent pairs remain")
    }

    /// The null realization: every semi-adjacent pair becomes a non-edge.
    pub fn null_realization(&self) -> SimpleGraph {
        let mut t = self.clone();
        for v in t.theta.iter_mut() {
            if *v == AdjValue::SemiAdjacent {
                *v = AdjValue::StronglyAntiAdjacent;
            }
        }
        SimpleGraph::from_trigraph(t).expect("no semi-adjacent pairs remain")
    }

    /// All `2^m` realizations exactly once, in a fixed order: semi-adjacent
    /// pairs sorted colexicographically, decisions running as a binary
    /// counter (bit set = edge). Counter value 0 is the null realization and
    /// the final value is the full realization.
    pub fn realizations(&self) -> Realizations<'_> {
        let semis = self.semi_pairs();
        assert!(semis.len() < 64, "too many semi-adjacent pairs to enumerate");
        Realizations { base: self, semis, next: 0, done: false }
    }

    pub fn realization_count(&self) -> u64 {
        1u64 << self.semi_pairs().len()
    }

    /// Is `other` obtainable from `self` by deciding some semi-adjacent pairs?
    pub fn is_semi_realization_of(&self, base: &Trigraph) -> bool {
        self.n == base.n
            && self.theta.iter().zip(base.theta.iter()).all(|(&s, &b)| match b {
                AdjValue::SemiAdjacent => true,
                _ => s == b,
            })
    }

    /// Components of the full realization as sorted vertex sets, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        let masks: Vec<u64> = (0..self.n).map(|v| self.neighbor_mask(v)).collect();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut next = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= masks[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            comps.push(mask_to_vec(comp));
        }
        comps
    }

    /// Connected iff the full realization is connected; the null trigraph is
    /// not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// A shortest path of the full realization between `a` and `b`, which is
    /// then induced and hence a narrow path of the trigraph; `None` when the
    /// endpoints lie in different components. Deterministic (BFS visiting
    /// neighbors in ascending order).
    pub fn find_narrow_path(&self, a: usize, b: usize) -> Option<NarrowPath> {
        assert!(a < self.n && b < self.n);
        if a == b {
            return Some(NarrowPath { order: vec![a] });
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[a] = a;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for u in self.neighbors(v) {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        if parent[b] == usize::MAX {
            return None;
        }
        let mut order = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            order.push(cur);
        }
        order.reverse();
        let path = NarrowPath::new(self, order).expect("shortest BFS path is narrow");
        Some(path)
    }

    /// Branch vertices (degree ≥ 3), the branches between them, and per-branch
    /// flat flags (no adjacent pair of the branch lies in a triangle).
    pub fn branch_structure(&self) -> BranchStructure {
        let degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let branch_vertices: Vec<usize> = (0..self.n).filter(|&v| degs[v] >= 3).collect();
        let is_bv = |v: usize| degs[v] >= 3;
        let mut branches: Vec<Branch> = Vec::new();
        let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();

        for &b in &branch_vertices {
            for w in self.neighbors(b) {
                // walk from b through degree-2 vertices until another branch vertex
                let mut order = vec![b, w];
                let ok = loop {
                    let last = *order.last().unwrap();
                    if is_bv(last) {
                        break true;
                    }
                    if degs[last] != 2 {
                        break false; // dead end
                    }
                    let prev = order[order.len() - 2];
                    let next = self
                        .neighbors(last)
                        .into_iter()
                        .find(|&u| u != prev)
                        .expect("degree-2 vertex has a second neighbor");
                    if order.contains(&next) {
                        break false; // closed a cycle (endpoints not distinct)
                    }
                    order.push(next);
                };
                if !ok {
                    continue;
                }
                let e = *order.last().unwrap();
                if e == b {
                    continue;
                }
                // a branch is a narrow path: with interior degrees two, the only
                // possible chord is between the endpoints
                if order.len() > 2 && self.adjacent(b, e) {
                    continue;
                }
                let canonical = if order[0] <= *order.last().unwrap() {
                    order.clone()
                } else {
                    let mut r = order.clone();
                    r.reverse();
                    r
                };
                if !seen.insert(canonical.clone()) {
                    continue;
                }
                let path = NarrowPath::new(self, canonical).expect("walked branch is narrow");
                let flat = path
                    .order()
                    .windows(2)
                    .all(|w| !self.pair_in_triangle(w[0], w[1]));
                branches.push(Branch { path, flat });
            }
        }
        branches.sort_by(|x, y| x.path.order().cmp(y.path.order()));
        BranchStructure { branch_vertices, branches }
    }
}

impl std::fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Trigraph(n={}; ", self.n)?;
        for (u, v) in self.pairs() {
            if self.theta(u, v) != AdjValue::StronglyAntiAdjacent {
                write!(f, "{u}-{v}:{} ", self.theta(u, v).symbol())?;
            }
        }
        write!(f, ")")
    }
}

pub fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub fn vec_to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// An induced subtrigraph together with the map back to host coordinates:
/// `vertex_map[new] = old`.
#[derive(Debug, Clone)]
pub struct InducedSubtrigraph {
    pub trigraph: Trigraph,
    pub vertex_map: Vec<usize>,
}

impl InducedSubtrigraph {
    /// Map a set of sub-coordinates back into the host.
    pub fn to_host(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.vertex_map[v]).collect()
    }

    /// Position of a host vertex inside the subtrigraph, if present.
    pub fn from_host(&self, host_vertex: usize) -> Option<usize> {
        self.vertex_map.binary_search(&host_vertex).ok()
    }
}

/// A trigraph all of whose pairs are decided: its own full and null
/// realization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    t: Trigraph,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn from_trigraph(t: Trigraph) -> Result<SimpleGraph> {
        if !t.is_graph() {
            return Err(Error::InvalidInput("trigraph has semi-adjacent pairs".into()));
        }
        let adj = (0..t.vertex_count()).map(|v| t.neighbor_mask(v)).collect();
        Ok(SimpleGraph { t, adj })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut t = Trigraph::new(n);
        for &(u, v) in edges {
            t.set(u, v, AdjValue::StronglyAdjacent);
        }
        SimpleGraph::from_trigraph(t).expect("built without semi pairs")
    }

    pub fn n(&self) -> usize {
        self.t.vertex_count()
    }

    pub fn as_trigraph(&self) -> &Trigraph {
        &self.t
    }

    pub fn into_trigraph(self) -> Trigraph {
        self.t
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_to_vec(self.adj[v])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.t.pairs().filter(|&(u, v)| self.adjacent(u, v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Components restricted to `within` (a vertex mask), as masks.
    pub fn component_masks(&self, within: u64) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n() {
            let bit = 1u64 << start;
            if within & bit == 0 || seen & bit != 0 {
                continue;
            }
            let mut comp = bit;
            loop {
                let mut next = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= self.adj[v] & within;
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_masks(full_mask(self.n())).len() == 1
    }

    /// Induced subgraph on the vertices of `mask`, relabeled ascending.
    pub fn induced_mask(&self, mask: u64) -> SimpleGraph {
        let vs = mask_to_vec(mask);
        let sub = self.t.induced(&vs).expect("mask within range");
        SimpleGraph::from_trigraph(sub.trigraph).expect("induced graph stays simple")
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n(), self.edges())
    }
}

pub fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over all realizations of a trigraph, with the decision order
/// fixed for reproducibility.
pub struct Realizations<'a> {
    base: &'a Trigraph,
    semis: Vec<(usize, usize)>,
    next: u64,
    done: bool,
}

impl<'a> Realizations<'a> {
    /// Build the realization for a specific decision counter.
    pub fn realize(base: &Trigraph, semis: &[(usize, usize)], counter: u64) -> SimpleGraph {
        let mut t = base.clone();
        for (i, &(u, v)) in semis.iter().enumerate() {
            let val = if counter & (1u64 << i) != 0 {
                AdjValue::StronglyAdjacent
            } else {
                AdjValue::StronglyAntiAdjacent
            };
            t.set(u, v, val);
        }
        SimpleGraph::from_trigraph(t).expect("all semi pairs decided")
    }

    pub fn semi_pairs(&self) -> &[(usize, usize)] {
        &self.semis
    }

    /// The decision vector for a counter value: `(u, v, decided-as-edge)`.
    pub fn choice(semis: &[(usize, usize)], counter: u64) -> Vec<(usize, usize, bool)> {
        semis
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, counter & (1u64 << i) != 0))
            .collect()
    }
}

impl<'a> Iterator for Realizations<'a> {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        if self.done {
            return None;
        }
        let g = Self::realize(self.base, &self.semis, self.next);
        if self.next + 1 == (1u64 << self.semis.len()) {
            self.done = true;
        } else {
            self.next += 1;
        }
        Some(g)
    }
}

/// A sequence of distinct vertices whose consecutive pairs are adjacent and
/// whose non-consecutive pairs are strongly anti-adjacent; equivalently, the
/// full realization of the induced subtrigraph is a path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NarrowPath {
    order: Vec<usize>,
}

impl NarrowPath {
    /// Validate `order` against `host` and build the path.
    pub fn new(host: &Trigraph, order: Vec<usize>) -> Result<NarrowPath> {
        if order.is_empty() {
            return Err(Error::InvalidInput("narrow path must be non-null".into()));
        }
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("narrow path repeats a vertex".into()));
        }
        if sorted.last().copied().unwrap() >= host.vertex_count() {
            return Err(Error::InvalidInput("narrow path vertex out of range".into()));
        }
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if j == i + 1 {
                    if !host.adjacent(order[i], order[j]) {
                        return Err(Error::InvalidInput(format!(
                            "consecutive vertices {} and {} not adjacent",
                            order[i], order[j]
                        )));
                    }
                } else if !host.strongly_anti_adjacent(order[i], order[j]) {
                    return Err(Error::InvalidInput(format!(
                        "non-consecutive vertices {} and {} not strongly anti-adjacent",
                        order[i], order[j]
                    )));
                }
            }
        }
        Ok(NarrowPath { order })
    }

    /// Recover a narrow path from an unordered vertex set, if the set induces
    /// one. The returned order starts at the smaller endpoint.
    pub fn from_vertex_set(host: &Trigraph, set: &[usize]) -> Option<NarrowPath> {
        if set.is_empty() {
            return None;
        }
        if set.len() == 1 {
            return NarrowPath::new(host, vec![set[0]]).ok();
        }
        let degree_in = |v: usize| set.iter().filter(|&&u| u != v && host.adjacent(u, v)).count();
        let mut ends: Vec<usize> = set.iter().copied().filter(|&v| degree_in(v) == 1).collect();
        ends.sort_unstable();
        if ends.len() != 2 {
            return None;
        }
        let mut order = vec![ends[0]];
        while order.len() < set.len() {
            let last = *order.last().unwrap();
            let next = set
                .iter()
                .copied()
                .find(|&u| !order.contains(&u) && host.adjacent(u, last))?;
            order.push(next);
        }
        NarrowPath::new(host, order).ok()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.order[0], *self.order.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.order[1..self.order.len() - 1]
    }

    pub fn vertices_sorted(&self) -> Vec<usize> {
        let mut v = self.order.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, v: usize) -> bool {
        self.order.contains(&v)
    }
}

/// Output of [`Trigraph::branch_structure`].
#[derive(Debug, Clone)]
pub struct BranchStructure {
    pub branch_vertices: Vec<usize>,
    pub branches: Vec<Branch>,
}

#[derive(Debug, Clone)]
pub struct Branch {
    pub path: NarrowPath,
    pub flat: bool,
}

impl BranchStructure {
    pub fn flat_branches(&self) -> impl Iterator<Item = &NarrowPath> {
        self.branches.iter().filter(|b| b.flat).map(|b| &b.path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn all_semi(n: usize) -> Trigraph {
        let mut t = Trigraph::new(n);
        for (u, v) in t.pairs().collect::<Vec<_>>() {
            t.set(u, v, AdjValue::SemiAdjacent);
        }
        t
    }

    fn strong_cycle(n: usize) -> Trigraph {
        let mut t = Trigraph::new(n);
        for v in 0..n {
            t.set(v, (v + 1) % n, AdjValue::StronglyAdjacent);
        }
        t
    }

    #[test]
    fn complement_trivia() {
        let single = Trigraph::new(1);
        assert_eq!(single.complement(), single);

        let mut triangle = Trigraph::new(3);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            triangle.set(u, v, AdjValue::StronglyAdjacent);
        }
        let co = triangle.complement();
        assert!(co.pairs().all(|(u, v)| co.strongly_anti_adjacent(u, v)));
    }

    #[test]
    fn complement_involution_exhaustive_n4() {
        for g in generate::enumerate_trigraphs(4, false).unwrap() {
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn clique_iff_complement_stable_n4() {
        for g in generate::enumerate_trigraphs(4, false).unwrap() {
            let all: Vec<usize> = g.vertices().collect();
            assert_eq!(g.is_clique(&all), g.complement().is_stable(&all));
        }
    }

    #[test]
    fn induced_edges() {
        let g = all_semi(4);
        let empty = g.induced(&[]).unwrap();
        assert!(empty.trigraph.is_null());
        let full = g.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(full.trigraph, g);
        assert!(g.induced(&[0, 0]).is_err());
        assert!(g.induced(&[5]).is_err());

        let mut k4 = Trigraph::new(4);
        for (u, v) in k4.pairs().collect::<Vec<_>>() {
            k4.set(u, v, AdjValue::StronglyAdjacent);
        }
        let tri = k4.induced(&[0, 2, 3]).unwrap();
        assert!(tri.trigraph.is_strong_clique(&[0, 1, 2]));
        assert_eq!(tri.vertex_map, vec![0, 2, 3]);
    }

    #[test]
    fn realization_counts() {
        let mut g = Trigraph::new(2);
        assert_eq!(g.realizations().count(), 1);
        g.set(0, 1, AdjValue::SemiAdjacent);
        let rs: Vec<_> = g.realizations().collect();
        assert_eq!(rs.len(), 2);
        assert!(!rs[0].adjacent(0, 1));
        assert!(rs[1].adjacent(0, 1));

        // 3 vertices, all semi: 8 realizations, exactly 1 triangle
        let g = all_semi(3);
        let rs: Vec<_> = g.realizations().collect();
        assert_eq!(rs.len(), 8);
        let triangles = rs
            .iter()
            .filter(|r| r.adjacent(0, 1) && r.adjacent(0, 2) && r.adjacent(1, 2))
            .count();
        assert_eq!(triangles, 1);
    }

    #[test]
    fn semi_realization_counts_small() {
        // a trigraph with m semi pairs has 3^m semi-realizations and 2^m
        // realizations; enumerate all 3-vertex trigraphs as candidates
        let mut g = all_semi(3);
        g.set(0, 1, AdjValue::StronglyAdjacent);
        let m = g.semi_pairs().len();
        assert_eq!(m, 2);
        let all3: Vec<Trigraph> = generate::enumerate_trigraphs(3, false).unwrap().collect();
        let semi_count = all3.iter().filter(|h| h.is_semi_realization_of(&g)).count();
        assert_eq!(semi_count, 9);
        assert_eq!(g.realizations().count(), 4);
        for r in g.realizations() {
            assert!(r.as_trigraph().is_semi_realization_of(&g));
        }
        assert!(g.full_realization().as_trigraph().is_semi_realization_of(&g));
        assert!(g.null_realization().as_trigraph().is_semi_realization_of(&g));
    }

    #[test]
    fn connectivity_cases() {
        let null = Trigraph::new(0);
        assert!(null.components().is_empty());
        assert!(!null.is_connected());

        let mut semi_edge = Trigraph::new(2);
        semi_edge.set(0, 1, AdjValue::SemiAdjacent);
        assert!(semi_edge.is_connected());

        let anti = Trigraph::new(2);
        assert_eq!(anti.components().len(), 2);
    }

    #[test]
    fn connectivity_matches_full_realization_n4() {
        for g in generate::enumerate_trigraphs(4, false).unwrap() {
            assert_eq!(g.is_connected(), g.full_realization().is_connected());
        }
    }

    #[test]
    fn narrow_path_trivia() {
        let g = strong_cycle(5);
        let p = g.find_narrow_path(0, 0).unwrap();
        assert_eq!(p.len(), 0);
        let p = g.find_narrow_path(0, 1).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn narrow_path_on_c5_matches_brute_force() {
        // distance-2 endpoints on a 5-cycle: the unique 2-edge side
        let g = strong_cycle(5);
        let p = g.find_narrow_path(0, 2).unwrap();
        assert_eq!(p.order(), &[0, 1, 2]);

        // brute-force oracle: shortest vertex sequence that validates
        let mut best: Option<Vec<usize>> = None;
        let mut stack = vec![vec![0usize]];
        while let Some(cur) = stack.pop() {
            if *cur.last().unwrap() == 2 && NarrowPath::new(&g, cur.clone()).is_ok() {
                if best.as_ref().map_or(true, |b| cur.len() < b.len()) {
                    best = Some(cur.clone());
                }
            }
            if cur.len() < 5 {
                for v in 0..5 {
                    if !cur.contains(&v) {
                        let mut nx = cur.clone();
                        nx.push(v);
                        stack.push(nx);
                    }
                }
            }
        }
        assert_eq!(best.unwrap().len() - 1, p.len());
    }

    #[test]
    fn disconnected_narrow_path_absent() {
        let g = Trigraph::new(3);
        assert!(g.find_narrow_path(0, 2).is_none());
    }

    #[test]
    fn branch_structure_cycle_and_theta() {
        let c6 = strong_cycle(6);
        let bs = c6.branch_structure();
        assert!(bs.branch_vertices.is_empty());
        assert!(bs.branches.is_empty());

        // theta: hubs 0 and 1, three paths of length 2 through 2, 3, 4
        let theta = generate::theta_graph(&[2, 2, 2]).unwrap();
        let bs = theta.as_trigraph().branch_structure();
        assert_eq!(bs.branch_vertices.len(), 2);
        assert_eq!(bs.branches.len(), 3);
        assert!(bs.branches.iter().all(|b| b.flat));
    }

    #[test]
    fn branch_structure_prism() {
        let prism = generate::prism(&[1, 1, 1], &[]).unwrap();
        let bs = prism.branch_structure();
        assert_eq!(bs.branch_vertices.len(), 6);
        let flat: Vec<_> = bs.branches.iter().filter(|b| b.flat).collect();
        let non_flat: Vec<_> = bs.branches.iter().filter(|b| !b.flat).collect();
        assert_eq!(flat.len(), 3, "the three inter-triangle branches are flat");
        assert_eq!(non_flat.len(), 6, "triangle edges lie in triangles");

        let prism2 = generate::prism(&[2, 2, 2], &[]).unwrap();
        let bs2 = prism2.branch_structure();
        assert_eq!(bs2.branch_vertices.len(), 6);
        assert_eq!(bs2.branches.iter().filter(|b| b.flat).count(), 3);
        assert!(bs2.branches.iter().filter(|b| b.flat).all(|b| b.path.len() == 2));
    }

    #[test]
    fn branch_endpoint_chord_is_rejected() {
        // path 0-2-1 plus edge 0-1, with 0 and 1 made branch vertices by
        // pendant structure: {0,2,1} induces a triangle, not a branch
        let mut t = Trigraph::new(7);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6)] {
            t.set(u, v, AdjValue::StronglyAdjacent);
        }
        let bs = t.branch_structure();
        assert!(bs.branches.iter().all(|b| !(b.path.contains(2) && b.path.len() == 2)));
        // the direct edge 0-1 is itself a branch
        assert!(bs.branches.iter().any(|b| b.path.order() == [0, 1]));
    }

    #[test]
    fn narrow_path_from_set() {
        let g = strong_cycle(6);
        let p = NarrowPath::from_vertex_set(&g, &[2, 0, 1]).unwrap();
        assert_eq!(p.order(), &[0, 1, 2]);
        assert!(NarrowPath::from_vertex_set(&g, &[0, 1, 2, 3, 4, 5]).is_none());
    }
}
