//! Constructors and enumerators: the named families, random trigraphs, and
//! isomorphism-rejecting exhaustive enumeration.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freeness::{self, ForbiddenPattern};
use crate::trigraph::{AdjValue, SimpleGraph, Trigraph};

/// Largest `n` for labeled exhaustive enumeration (3^15 instances at n = 6).
pub const LABELED_ENUMERATION_BOUND: usize = 6;
/// Largest `n` for enumeration modulo isomorphism.
pub const ISO_ENUMERATION_BOUND: usize = 7;

// ---------------------------------------------------------------------------
// named families
// ---------------------------------------------------------------------------

/// Demote the listed pairs to semi-adjacent.
pub fn with_semi_pairs(mut g: Trigraph, pairs: &[(usize, usize)]) -> Result<Trigraph> {
    for &(u, v) in pairs {
        if u == v || u >= g.vertex_count() || v >= g.vertex_count() {
            return Err(Error::InvalidInput(format!("bad semi pair {u} {v}")));
        }
        g.set(u, v, AdjValue::SemiAdjacent);
    }
    Ok(g)
}

/// A prism: strong triangles {0,1,2} and {3,4,5}, joined by three flat
/// branches of the given lengths (≥ 1 each). All pairs strong unless a semi
/// pattern is supplied.
pub fn prism(lengths: &[usize], semi: &[(usize, usize)]) -> Result<Trigraph> {
    if lengths.len() != 3 || lengths.iter().any(|&l| l < 1) {
        return Err(Error::InvalidInput("prism wants three branch lengths >= 1".into()));
    }
    let n = 6 + lengths.iter().map(|&l| l - 1).sum::<usize>();
    let mut g = Trigraph::new(n);
    for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
        g.set(u, v, AdjValue::StronglyAdjacent);
    }
    let mut next = 6;
    for (i, &len) in lengths.iter().enumerate() {
        let (start, end) = (i, i + 3);
        let mut prev = start;
        for _ in 0..len - 1 {
            g.set(prev, next, AdjValue::StronglyAdjacent);
            prev = next;
            next += 1;
        }
        g.set(prev, end, AdjValue::StronglyAdjacent);
    }
    with_semi_pairs(g, semi)
}

/// A theta: two degree-3 vertices 0 and 1 joined by three internally
/// disjoint paths, each of length ≥ 2 (a subdivision of K_{2,3}).
pub fn theta_graph(lengths: &[usize]) -> Result<SimpleGraph> {
    if lengths.len() != 3 || lengths.iter().any(|&l| l < 2) {
        return Err(Error::InvalidInput("theta wants three path lengths >= 2".into()));
    }
    let n = 2 + lengths.iter().map(|&l| l - 1).sum::<usize>();
    let mut g = Trigraph::new(n);
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            g.set(prev, next, AdjValue::StronglyAdjacent);
            prev = next;
            next += 1;
        }
        g.set(prev, 1, AdjValue::StronglyAdjacent);
    }
    Ok(SimpleGraph::from_trigraph(g).expect("theta is a graph"))
}

/// Complete bipartite trigraph with strongly stable sides `0..a` and
/// `a..a+b`, strongly complete to each other.
pub fn complete_bipartite(a: usize, b: usize) -> Trigraph {
    let mut g = Trigraph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.set(u, v, AdjValue::StronglyAdjacent);
        }
    }
    g
}

/// The strong K_{3,3}.
pub fn strong_k33() -> Trigraph {
    complete_bipartite(3, 3)
}

/// A long rich square: central square 0-1-2-3-0 plus the given long links,
/// each link attaching one endpoint to {0,1} and the other to {2,3}.
pub fn long_rich_square(link_lengths: &[usize]) -> Result<Trigraph> {
    if link_lengths.len() < 2 || link_lengths.iter().any(|&l| l < 1) {
        return Err(Error::InvalidInput(
            "long rich square wants at least two links of length >= 1".into(),
        ));
    }
    let n = 4 + link_lengths.iter().map(|&l| l + 1).sum::<usize>();
    let mut g = Trigraph::new(n);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
        g.set(u, v, AdjValue::StronglyAdjacent);
    }
    let mut next = 4;
    for &len in link_lengths {
        let first = next;
        let last = next + len;
        for v in first..last {
            g.set(v, v + 1, AdjValue::StronglyAdjacent);
        }
        g.set(first, 0, AdjValue::StronglyAdjacent);
        g.set(first, 1, AdjValue::StronglyAdjacent);
        g.set(last, 2, AdjValue::StronglyAdjacent);
        g.set(last, 3, AdjValue::StronglyAdjacent);
        next = last + 1;
    }
    Ok(g)
}

/// The order of K4's edges used by the subdivision families.
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// K4 with `counts[e]` subdivision vertices inserted on edge `e` (each ≥ 1,
/// which makes the result chordless).
pub fn subdivided_k4(counts: &[usize]) -> Result<SimpleGraph> {
    if counts.len() != 6 || counts.iter().any(|&c| c < 1) {
        return Err(Error::InvalidInput("k4 subdivision wants six counts >= 1".into()));
    }
    let n = 4 + counts.iter().sum::<usize>();
    let mut g = Trigraph::new(n);
    let mut next = 4;
    for (e, &(u, v)) in K4_EDGES.iter().enumerate() {
        let mut prev = u;
        for _ in 0..counts[e] {
            g.set(prev, next, AdjValue::StronglyAdjacent);
            prev = next;
            next += 1;
        }
        g.set(prev, v, AdjValue::StronglyAdjacent);
    }
    Ok(SimpleGraph::from_trigraph(g).expect("subdivision is a graph"))
}

/// The line graph of `h`: one vertex per edge (in colex order), adjacent
/// when the edges share an endpoint. Also returns the vertex → edge map.
pub fn line_graph(h: &SimpleGraph) -> (SimpleGraph, Vec<(usize, usize)>) {
    let edges = h.edges();
    let mut g = Trigraph::new(edges.len());
    for i in 0..edges.len() {
        for j in 0..i {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                g.set(i, j, AdjValue::StronglyAdjacent);
            }
        }
    }
    (SimpleGraph::from_trigraph(g).expect("line graph is a graph"), edges)
}

/// The (all-strong) line trigraph of a subdivided K4.
pub fn line_trigraph_of_subdivided_k4(counts: &[usize], semi: &[(usize, usize)]) -> Result<Trigraph> {
    let root = subdivided_k4(counts)?;
    let (lg, _) = line_graph(&root);
    with_semi_pairs(lg.into_trigraph(), semi)
}

/// CLI-facing family dispatch.
pub fn make_family(name: &str, params: &[usize], semi: &[(usize, usize)]) -> Result<Trigraph> {
    match name {
        "prism" => prism(params, semi),
        "theta" => {
            let g = theta_graph(params)?;
            with_semi_pairs(g.into_trigraph(), semi)
        }
        "k33" => {
            if !params.is_empty() {
                return Err(Error::InvalidInput("k33 takes no parameters".into()));
            }
            with_semi_pairs(strong_k33(), semi)
        }
        "complete-bipartite" => {
            if params.len() != 2 {
                return Err(Error::InvalidInput("complete-bipartite wants two side sizes".into()));
            }
            with_semi_pairs(complete_bipartite(params[0], params[1]), semi)
        }
        "long-rich-square" => {
            let g = long_rich_square(params)?;
            with_semi_pairs(g, semi)
        }
        "k4-subdivision" => {
            let g = subdivided_k4(params)?;
            with_semi_pairs(g.into_trigraph(), semi)
        }
        "line-k4-subdivision" => line_trigraph_of_subdivided_k4(params, semi),
        other => Err(Error::InvalidInput(format!("unknown family `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// random trigraphs
// ---------------------------------------------------------------------------

/// I.i.d. pair values: +1 with probability `p_plus`, 0 with `p_zero`, −1
/// otherwise; fully deterministic given the seed.
pub fn random_trigraph(n: usize, p_plus: f64, p_zero: f64, seed: u64) -> Trigraph {
    assert!(p_plus + p_zero <= 1.0 + 1e-12, "p_plus + p_zero must be <= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Trigraph::new(n);
    for (u, v) in g.pairs().collect::<Vec<_>>() {
        let x: f64 = rng.random();
        let val = if x < p_plus {
            AdjValue::StronglyAdjacent
        } else if x < p_plus + p_zero {
            AdjValue::SemiAdjacent
        } else {
            AdjValue::StronglyAntiAdjacent
        };
        g.set(u, v, val);
    }
    g
}

/// Rejection-sample until the trigraph is free of all requested patterns, or
/// attempts run out.
pub fn random_free_trigraph(
    n: usize,
    p_plus: f64,
    p_zero: f64,
    patterns: &[ForbiddenPattern],
    seed: u64,
    max_attempts: u32,
) -> Option<Trigraph> {
    assert!(max_attempts >= 1);
    for attempt in 0..max_attempts {
        let g = random_trigraph(n, p_plus, p_zero, seed.wrapping_add(attempt as u64));
        if freeness::is_free_all_fast(&g, patterns) {
            return Some(g);
        }
    }
    None
}

const GROW_ATTEMPTS_PER_VERTEX: usize = 24;
const GROW_P_ZERO: f64 = 0.08;

/// Extend `g` with one vertex whose row of pair values is given.
fn extend_with_row(g: &Trigraph, row: &[AdjValue]) -> Trigraph {
    let n = g.vertex_count();
    let mut out = Trigraph::new(n + 1);
    for (u, v) in g.pairs() {
        out.set(u, v, g.theta(u, v));
    }
    for (u, &val) in row.iter().enumerate() {
        out.set(u, n, val);
    }
    out
}

/// Instance factory for the attachment lemma checks: adds vertices one at a
/// time with random attachments, rolling back any addition that violates
/// freeness. The result contains `base` induced and is pattern-free; every
/// prefix of the growth is free.
pub fn grow_free_instance(
    base: &Trigraph,
    n_extra: usize,
    patterns: &[ForbiddenPattern],
    seed: u64,
) -> Trigraph {
    assert!(
        freeness::is_free_all_fast(base, patterns),
        "grow_free_instance wants a pattern-free base"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = base.clone();
    for _ in 0..n_extra {
        let cur = g.vertex_count();
        let p_plus = (2.5 / cur as f64).min(0.25);
        for _ in 0..GROW_ATTEMPTS_PER_VERTEX {
            let row: Vec<AdjValue> = (0..cur)
                .map(|_| {
                    let x: f64 = rng.random();
                    if x < p_plus {
                        AdjValue::StronglyAdjacent
                    } else if x < p_plus + GROW_P_ZERO {
                        AdjValue::SemiAdjacent
                    } else {
                        AdjValue::StronglyAntiAdjacent
                    }
                })
                .collect();
            let candidate = extend_with_row(&g, &row);
            if freeness::is_free_all_fast(&candidate, patterns) {
                g = candidate;
                break;
            }
        }
    }
    g
}

// ---------------------------------------------------------------------------
// canonical forms and exhaustive enumeration
// ---------------------------------------------------------------------------

/// A canonical code identifying a trigraph up to isomorphism: the minimum,
/// over all vertex permutations, of the colex pair-value encoding. Exact;
/// factorial time with branch-and-bound pruning, fine at enumeration scale.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

pub fn canonical_form(g: &Trigraph) -> CanonicalForm {
    let n = g.vertex_count();
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut cur: Vec<u8> = Vec::with_capacity(n * (n - 1) / 2);

    // candidate order heuristic: vertices with small (plus, zero) degree
    // vectors first, so a tight incumbent appears early and prunes more
    let mut order: Vec<usize> = (0..n).collect();
    let key = |v: usize| {
        let mut plus = 0usize;
        let mut zero = 0usize;
        for u in 0..n {
            if u == v {
                continue;
            }
            match g.theta(u, v) {
                AdjValue::StronglyAdjacent => plus += 1,
                AdjValue::SemiAdjacent => zero += 1,
                AdjValue::StronglyAntiAdjacent => {}
            }
        }
        (plus, zero)
    };
    order.sort_by_key(|&v| key(v));

    fn rec(
        g: &Trigraph,
        order: &[usize],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        cur: &mut Vec<u8>,
        best: &mut Option<Vec<u8>>,
    ) {
        let n = g.vertex_count();
        let k = perm.len();
        if k == n {
            if best.as_ref().map_or(true, |b| cur.as_slice() < b.as_slice()) {
                *best = Some(cur.clone());
            }
            return;
        }
        for &cand in order {
            if used[cand] {
                continue;
            }
            let row_start = cur.len();
            for &p in perm.iter() {
                cur.push(match g.theta(p, cand) {
                    AdjValue::StronglyAntiAdjacent => 0,
                    AdjValue::SemiAdjacent => 1,
                    AdjValue::StronglyAdjacent => 2,
                });
            }
            let prune = if let Some(b) = best.as_ref() {
                cur.as_slice() > &b[..cur.len()]
            } else {
                false
            };
            if !prune {
                used[cand] = true;
                perm.push(cand);
                rec(g, order, perm, used, cur, best);
                perm.pop();
                used[cand] = false;
            }
            cur.truncate(row_start);
        }
    }
    rec(g, &order, &mut perm, &mut used, &mut cur, &mut best);
    CanonicalForm(best.unwrap_or_default())
}

/// Rebuild the canonical representative from a code.
pub fn trigraph_from_code(n: usize, code: &[u8]) -> Trigraph {
    let mut g = Trigraph::new(n);
    for (idx, (u, v)) in g.pairs().enumerate().collect::<Vec<_>>() {
        let val = match code[idx] {
            0 => AdjValue::StronglyAntiAdjacent,
            1 => AdjValue::SemiAdjacent,
            _ => AdjValue::StronglyAdjacent,
        };
        g.set(u, v, val);
    }
    g
}

pub enum TrigraphEnumeration {
    Labeled { n: usize, next: u64, total: u64 },
    Classes(std::vec::IntoIter<Trigraph>),
}

impl Iterator for TrigraphEnumeration {
    type Item = Trigraph;

    fn next(&mut self) -> Option<Trigraph> {
        match self {
            TrigraphEnumeration::Labeled { n, next, total } => {
                if next == total {
                    return None;
                }
                let mut g = Trigraph::new(*n);
                let mut x = *next;
                for (u, v) in g.pairs().collect::<Vec<_>>() {
                    let digit = (x % 3) as i8;
                    x /= 3;
                    g.set(u, v, AdjValue::from_i8(digit - 1).unwrap());
                }
                *next += 1;
                Some(g)
            }
            TrigraphEnumeration::Classes(it) => it.next(),
        }
    }
}

/// All `3^(n(n−1)/2)` labeled trigraphs on `n` vertices, or one canonical
/// representative per isomorphism class.
pub fn enumerate_trigraphs(n: usize, modulo_iso: bool) -> Result<TrigraphEnumeration> {
    if modulo_iso {
        if n > ISO_ENUMERATION_BOUND {
            return Err(Error::InvalidInput(format!(
                "enumeration modulo isomorphism is bounded at n = {ISO_ENUMERATION_BOUND}"
            )));
        }
        Ok(TrigraphEnumeration::Classes(enumerate_classes(n).into_iter()))
    } else {
        if n > LABELED_ENUMERATION_BOUND {
            return Err(Error::InvalidInput(format!(
                "labeled enumeration is bounded at n = {LABELED_ENUMERATION_BOUND}"
            )));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        Ok(TrigraphEnumeration::Labeled { n, next: 0, total: 3u64.pow(pairs as u32) })
    }
}

/// One canonical representative per isomorphism class, by augmenting the
/// class representatives one vertex at a time and deduplicating on codes.
fn enumerate_classes(n: usize) -> Vec<Trigraph> {
    if n == 0 {
        return vec![Trigraph::new(0)];
    }
    let mut reps = vec![Trigraph::new(1)];
    for level in 2..=n {
        let mut seen: std::collections::HashSet<Vec<u8>> = std::collections::HashSet::new();
        let mut next: Vec<Trigraph> = Vec::new();
        let rows = 3u64.pow((level - 1) as u32);
        for rep in &reps {
            for row_code in 0..rows {
                let mut x = row_code;
                let row: Vec<AdjValue> = (0..level - 1)
                    .map(|_| {
                        let d = (x % 3) as i8;
                        x /= 3;
                        AdjValue::from_i8(d - 1).unwrap()
                    })
                    .collect();
                let candidate = extend_with_row(rep, &row);
                let code = canonical_form(&candidate).0;
                if seen.insert(code.clone()) {
                    next.push(trigraph_from_code(level, &code));
                }
            }
        }
        reps = next;
    }
    reps
}
