//! Cut structure: cut-partitions, clique-cutsets, stable 2-cutsets.

use crate::trigraph::Trigraph;

/// A partition (a, b, c) of the vertex set with `a`, `b` non-empty and `a`
/// strongly anti-complete to `b`; `c` is the cutset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl CutPartition {
    /// Re-validate the invariants against the host trigraph.
    pub fn validate(&self, g: &Trigraph) -> bool {
        let mut all: Vec<usize> =
            self.a.iter().chain(self.b.iter()).chain(self.c.iter()).copied().collect();
        all.sort_unstable();
        all == g.vertices().collect::<Vec<_>>()
            && !self.a.is_empty()
            && !self.b.is_empty()
            && self
                .a
                .iter()
                .all(|&u| self.b.iter().all(|&v| g.strongly_anti_adjacent(u, v)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutKind {
    CliqueCutset,
    Stable2Cutset,
}

impl CutKind {
    pub fn name(self) -> &'static str {
        match self {
            CutKind::CliqueCutset => "clique-cutset",
            CutKind::Stable2Cutset => "stable-2-cutset",
        }
    }
}

/// A cutset of the recognized kind together with a witnessing cut-partition.
#[derive(Debug, Clone)]
pub struct CutsetReport {
    pub kind: CutKind,
    pub cut: Vec<usize>,
    pub partition: CutPartition,
}

impl std::fmt::Display for CutsetReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} cut={:?} a={:?} b={:?}",
            self.kind.name(),
            self.cut,
            self.partition.a,
            self.partition.b
        )
    }
}

/// Does deleting `cut` leave at least two components?
fn disconnects(g: &Trigraph, cut: &[usize]) -> bool {
    g.without(cut).trigraph.components().len() >= 2
}

/// The canonical cut-partition for a cutset: `a` is the component of
/// `g ∖ cut` containing the smallest vertex, `b` the rest; absent when the
/// deletion leaves fewer than two components.
pub fn cut_partition_for(g: &Trigraph, cut: &[usize]) -> Option<CutPartition> {
    let sub = g.without(cut);
    let comps = sub.trigraph.components();
    if comps.len() < 2 {
        return None;
    }
    let a = sub.to_host(&comps[0]);
    let mut b: Vec<usize> = comps[1..]
        .iter()
        .flat_map(|comp| sub.to_host(comp))
        .collect();
    b.sort_unstable();
    let mut c = cut.to_vec();
    c.sort_unstable();
    let partition = CutPartition { a, b, c };
    assert!(partition.validate(g), "components give a strongly anti-complete split");
    Some(partition)
}

/// Strong cliques of `g` of size `size`, lexicographic.
fn strong_cliques_of_size(g: &Trigraph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(size);
    fn rec(g: &Trigraph, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..g.vertex_count() {
            if cur.iter().all(|&u| g.strongly_adjacent(u, v)) {
                cur.push(v);
                rec(g, size, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(g, size, 0, &mut cur, &mut out);
    out
}

/// A minimal-cardinality strong-clique cutset (the empty clique qualifies
/// when `g` is disconnected), ties broken by lexicographically smallest
/// vertex set; `None` when no strong clique disconnects `g`.
pub fn find_clique_cutset(g: &Trigraph) -> Option<CutsetReport> {
    for size in 0..=g.vertex_count() {
        let cliques = strong_cliques_of_size(g, size);
        if size > 0 && cliques.is_empty() {
            break; // no larger strong cliques exist
        }
        for cut in cliques {
            if disconnects(g, &cut) {
                let partition = cut_partition_for(g, &cut).expect("cut disconnects");
                return Some(CutsetReport { kind: CutKind::CliqueCutset, cut, partition });
            }
        }
    }
    None
}

/// A stable 2-cutset: an anti-adjacent pair (θ ≤ 0; a semi-adjacent pair
/// qualifies) whose deletion disconnects `g`. Lexicographically first.
pub fn find_stable_2_cutset(g: &Trigraph) -> Option<CutsetReport> {
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if !g.anti_adjacent(u, v) {
                continue;
            }
            let cut = vec![u, v];
            if disconnects(g, &cut) {
                let partition = cut_partition_for(g, &cut).expect("cut disconnects");
                return Some(CutsetReport { kind: CutKind::Stable2Cutset, cut, partition });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::trigraph::AdjValue;

    fn strong_cycle(n: usize) -> Trigraph {
        let mut t = Trigraph::new(n);
        for v in 0..n {
            t.set(v, (v + 1) % n, AdjValue::StronglyAdjacent);
        }
        t
    }

    fn two_triangles_sharing_vertex() -> Trigraph {
        let mut t = Trigraph::new(5);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)] {
            t.set(u, v, AdjValue::StronglyAdjacent);
        }
        t
    }

    #[test]
    fn clique_cutset_examples() {
        // disconnected: the empty clique
        let g = Trigraph::new(3);
        let report = find_clique_cutset(&g).unwrap();
        assert!(report.cut.is_empty());
        assert_eq!(report.kind, CutKind::CliqueCutset);

        let g = two_triangles_sharing_vertex();
        let report = find_clique_cutset(&g).unwrap();
        assert_eq!(report.cut, vec![2]);

        assert!(find_clique_cutset(&strong_cycle(5)).is_none());
    }

    #[test]
    fn stable_2_cutset_examples() {
        let c4 = strong_cycle(4);
        let report = find_stable_2_cutset(&c4).unwrap();
        assert_eq!(report.cut, vec![0, 2]);

        let mut k4 = Trigraph::new(4);
        for (u, v) in k4.pairs().collect::<Vec<_>>() {
            k4.set(u, v, AdjValue::StronglyAdjacent);
        }
        assert!(find_stable_2_cutset(&k4).is_none());

        let prism = generate::prism(&[1, 1, 1], &[]).unwrap();
        assert!(find_stable_2_cutset(&prism).is_none());

        // a semi-adjacent pair is anti-adjacent, so it may serve as the cut
        let mut path = Trigraph::new(4);
        path.set(0, 1, AdjValue::StronglyAdjacent);
        path.set(1, 2, AdjValue::SemiAdjacent);
        path.set(1, 3, AdjValue::StronglyAdjacent);
        path.set(2, 3, AdjValue::StronglyAdjacent);
        // deleting {1,2} (semi pair) splits 0 from 3
        let report = find_stable_2_cutset(&path);
        assert!(report.is_some());
    }

    #[test]
    fn cut_partition_examples() {
        let mut path = Trigraph::new(3);
        path.set(0, 1, AdjValue::StronglyAdjacent);
        path.set(1, 2, AdjValue::StronglyAdjacent);
        let p = cut_partition_for(&path, &[1]).unwrap();
        assert_eq!(p.a, vec![0]);
        assert_eq!(p.b, vec![2]);
        assert_eq!(p.c, vec![1]);

        assert!(cut_partition_for(&path, &[]).is_none());

        let iso = Trigraph::new(2);
        let p = cut_partition_for(&iso, &[]).unwrap();
        assert_eq!((p.a, p.b, p.c), (vec![0], vec![1], vec![]));
    }

    #[test]
    fn small_cutsets_are_clique_or_stable_exhaustive_n4() {
        // any cutset of size <= 2 is a clique-cutset or a stable 2-cutset
        for g in generate::enumerate_trigraphs(4, false).unwrap() {
            let n = g.vertex_count();
            let mut cuts: Vec<Vec<usize>> = vec![vec![]];
            for u in 0..n {
                cuts.push(vec![u]);
                for v in u + 1..n {
                    cuts.push(vec![u, v]);
                }
            }
            for cut in cuts {
                if !disconnects(&g, &cut) {
                    continue;
                }
                let clique = g.is_strong_clique(&cut);
                let stable2 = cut.len() == 2 && g.anti_adjacent(cut[0], cut[1]);
                assert!(clique || stable2, "cut {cut:?} of {g:?}");
            }
        }
    }

    #[test]
    fn no_clique_cutset_means_no_cut_vertex() {
        for g in generate::enumerate_trigraphs(4, false).unwrap() {
            if g.is_connected() && find_clique_cutset(&g).is_none() {
                for v in g.vertices() {
                    assert!(g.without(&[v]).trigraph.components().len() <= 1 || g.vertex_count() <= 2);
                }
            }
        }
    }
}
