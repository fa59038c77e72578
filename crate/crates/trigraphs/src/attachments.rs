//! Attachments over induced subtrigraphs, type-triangle / type-branch
//! classification, augmenting paths, minimal violating subtrigraphs, and the
//! named piece structure of line trigraphs of K4 subdivisions.

use crate::error::{Error, Result};
use crate::freeness;
use crate::structure;
use crate::trigraph::{InducedSubtrigraph, NarrowPath, Trigraph};

/// Precomputed structure of a host: its strong triangles and flat branches,
/// all in host (outer) coordinates.
pub struct HostStructure {
    pub sub: InducedSubtrigraph,
    pub strong_triangles: Vec<[usize; 3]>,
    pub flat_branches: Vec<NarrowPath>,
}

pub fn host_structure(g: &Trigraph, host: &[usize]) -> Result<HostStructure> {
    let sub = g.induced(host)?;
    let strong_triangles = sub
        .trigraph
        .strong_triangles()
        .into_iter()
        .map(|t| {
            let m = sub.to_host(&t);
            [m[0], m[1], m[2]]
        })
        .collect();
    let flat_branches = sub
        .trigraph
        .branch_structure()
        .branches
        .into_iter()
        .filter(|b| b.flat)
        .map(|b| {
            NarrowPath::new(g, sub.to_host(b.path.order()))
                .expect("host branch stays narrow in the ambient trigraph")
        })
        .collect();
    Ok(HostStructure { sub, strong_triangles, flat_branches })
}

/// The attachment of `part` over `host`: host vertices with a neighbor in
/// the part, plus the type flags. The empty attachment is of type triangle
/// (respectively branch) exactly when the host has a strong triangle
/// (respectively a flat branch) to contain it.
#[derive(Debug, Clone)]
pub struct AttachmentReport {
    pub over: Vec<usize>,
    pub type_triangle: bool,
    pub type_branch: bool,
}

impl AttachmentReport {
    pub fn typed(&self) -> bool {
        self.type_triangle || self.type_branch
    }
}

pub fn attachment(g: &Trigraph, host: &[usize], part: &[usize]) -> Result<AttachmentReport> {
    let hs = host_structure(g, host)?;
    attachment_with(g, &hs, host, part)
}

/// As [`attachment`], reusing a precomputed [`HostStructure`].
pub fn attachment_with(
    g: &Trigraph,
    hs: &HostStructure,
    host: &[usize],
    part: &[usize],
) -> Result<AttachmentReport> {
    if part.iter().any(|p| host.contains(p)) {
        return Err(Error::InvalidInput("host and part overlap".into()));
    }
    if part.iter().any(|&p| p >= g.vertex_count()) {
        return Err(Error::InvalidInput("part vertex out of range".into()));
    }
    let mut over: Vec<usize> = host
        .iter()
        .copied()
        .filter(|&h| part.iter().any(|&p| g.adjacent(h, p)))
        .collect();
    over.sort_unstable();
    let type_triangle = if over.is_empty() {
        !hs.strong_triangles.is_empty()
    } else {
        hs.strong_triangles
            .iter()
            .any(|t| over.iter().all(|v| t.contains(v)))
    };
    let type_branch = if over.is_empty() {
        !hs.flat_branches.is_empty()
    } else {
        hs.flat_branches
            .iter()
            .any(|b| over.iter().all(|&v| b.contains(v)))
    };
    Ok(AttachmentReport { over, type_triangle, type_branch })
}

/// Certificate that a narrow path augments a host: each endpoint has exactly
/// two host neighbors forming a strong triangle with it, the two neighbor
/// pairs sit inside two distinct flat branches, and the interior avoids the
/// host entirely.
#[derive(Debug, Clone)]
pub struct AugmentingPathCertificate {
    pub path: NarrowPath,
    pub endpoint_triangles: [[usize; 3]; 2],
    pub host_branches: [NarrowPath; 2],
}

pub fn is_augmenting_path(
    g: &Trigraph,
    host: &[usize],
    path: &NarrowPath,
) -> Option<AugmentingPathCertificate> {
    assert!(
        path.order().iter().all(|v| !host.contains(v)),
        "augmenting-path candidate must be disjoint from the host"
    );
    let hs = host_structure(g, host).ok()?;
    is_augmenting_path_with(g, &hs, host, path)
}

pub fn is_augmenting_path_with(
    g: &Trigraph,
    hs: &HostStructure,
    host: &[usize],
    path: &NarrowPath,
) -> Option<AugmentingPathCertificate> {
    if NarrowPath::new(g, path.order().to_vec()).is_err() {
        return None;
    }
    if path.len() < 1 {
        return None;
    }
    if path
        .interior()
        .iter()
        .any(|&p| host.iter().any(|&h| !g.strongly_anti_adjacent(p, h)))
    {
        return None;
    }
    let (a, b) = path.endpoints();
    let mut triangles = Vec::with_capacity(2);
    let mut branches = Vec::with_capacity(2);
    for x in [a, b] {
        let nbrs: Vec<usize> = host.iter().copied().filter(|&h| g.adjacent(x, h)).collect();
        if nbrs.len() != 2 {
            return None;
        }
        let (x1, x2) = (nbrs[0], nbrs[1]);
        if !g.strongly_adjacent(x, x1)
            || !g.strongly_adjacent(x, x2)
            || !g.strongly_adjacent(x1, x2)
        {
            return None;
        }
        let branch = hs
            .flat_branches
            .iter()
            .find(|f| f.contains(x1) && f.contains(x2))?;
        triangles.push([x, x1, x2]);
        branches.push(branch.clone());
    }
    if branches[0].order() == branches[1].order() {
        return None; // the two flat branches must be distinct
    }
    Some(AugmentingPathCertificate {
        path: path.clone(),
        endpoint_triangles: [triangles[0], triangles[1]],
        host_branches: [branches[0].clone(), branches[1].clone()],
    })
}

/// Which host shapes [`minimal_violator`] accepts.
fn host_shape_supported(g: &Trigraph, host: &[usize]) -> Result<()> {
    let sub = g.induced(host)?;
    if structure::as_prism(&sub.trigraph).is_some() {
        return Ok(());
    }
    if let Some(root) = structure::as_line_trigraph(&sub.trigraph) {
        let chordless_k4 = freeness::is_subdivision_of_k4(&root.graph)
            && freeness::is_chordless(&root.graph);
        if chordless_k4 || structure::qualify_root(&root.graph).all() {
            return Ok(());
        }
    }
    Err(Error::InvalidInput(
        "host is not a prism or a qualified line trigraph".into(),
    ))
}

/// An inclusion-wise minimal connected vertex set outside the host whose
/// attachment is neither of type triangle nor of type branch; `None` when
/// every connected outside set is typed. Minimality by greedy deletion in
/// ascending vertex order: since being untyped is upward-closed, a set with
/// no single removable vertex has no untyped connected proper subset at all.
pub fn minimal_violator(g: &Trigraph, host: &[usize]) -> Result<Option<Vec<usize>>> {
    host_shape_supported(g, host)?;
    let hs = host_structure(g, host)?;
    let outside: Vec<usize> = g.vertices().filter(|v| !host.contains(v)).collect();
    if outside.is_empty() {
        return Ok(None);
    }
    let out_sub = g.induced(&outside)?;
    let untyped = |set: &[usize]| -> bool {
        !attachment_with(g, &hs, host, set)
            .expect("outside sets are disjoint from the host")
            .typed()
    };
    let mut current: Option<Vec<usize>> = None;
    for comp in out_sub.trigraph.components() {
        let comp_host = out_sub.to_host(&comp);
        if untyped(&comp_host) {
            current = Some(comp_host);
            break;
        }
    }
    let Some(mut current) = current else {
        return Ok(None);
    };
    let connected = |set: &[usize]| -> bool {
        g.induced(set).map(|s| s.trigraph.is_connected()).unwrap_or(false)
    };
    'shrink: loop {
        for (i, _) in current.iter().enumerate() {
            if current.len() == 1 {
                break;
            }
            let mut candidate = current.clone();
            candidate.remove(i);
            if connected(&candidate) && untyped(&candidate) {
                current = candidate;
                continue 'shrink;
            }
        }
        break;
    }
    current.sort_unstable();
    Ok(Some(current))
}

/// The named pieces of a line trigraph of a chordless K4 subdivision: four
/// strong triangles (one per root branch vertex, ascending) and six narrow
/// paths, `paths[i]` joining `triangles[K4_PAIRS[i].0]` to
/// `triangles[K4_PAIRS[i].1]`. All in ambient coordinates.
#[derive(Debug, Clone)]
pub struct K4LinePieces {
    pub host: Vec<usize>,
    pub triangles: [[usize; 3]; 4],
    pub paths: Vec<NarrowPath>,
}

pub const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl K4LinePieces {
    /// The prism sub-host `K_xy`: the host minus the vertices of `P_xy`.
    pub fn prism_sub_host(&self, pair_index: usize) -> Vec<usize> {
        self.host
            .iter()
            .copied()
            .filter(|&v| !self.paths[pair_index].contains(v))
            .collect()
    }
}

pub fn pieces_of_k4_line(g: &Trigraph, host: &[usize]) -> Option<K4LinePieces> {
    let sub = g.induced(host).ok()?;
    let root = structure::as_line_trigraph(&sub.trigraph)?;
    let h = &root.graph;
    if !freeness::is_subdivision_of_k4(h) || !freeness::is_chordless(h) {
        return None;
    }
    let branch_vertices: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 3).collect();
    debug_assert_eq!(branch_vertices.len(), 4);

    // root edge -> line-trigraph vertex (sub coordinates)
    let edge_of: std::collections::HashMap<(usize, usize), usize> = root
        .edge_map
        .iter()
        .enumerate()
        .map(|(v, &e)| (e, v))
        .collect();

    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(4);
    for &x in &branch_vertices {
        let mut tri: Vec<usize> = h
            .neighbors(x)
            .into_iter()
            .map(|y| sub.vertex_map[edge_of[&(x.min(y), x.max(y))]])
            .collect();
        tri.sort_unstable();
        let tri = [tri[0], tri[1], tri[2]];
        if !g.is_strong_clique(&tri) {
            return None;
        }
        triangles.push(tri);
    }

    let mut paths = Vec::with_capacity(6);
    for &(i, j) in &K4_PAIRS {
        let (x, y) = (branch_vertices[i], branch_vertices[j]);
        // the unique branch of the root between x and y
        let mut found = None;
        for w in h.neighbors(x) {
            let mut prev = x;
            let mut cur = w;
            let mut root_path = vec![x, w];
            while h.degree(cur) == 2 {
                let next = h
                    .neighbors(cur)
                    .into_iter()
                    .find(|&u| u != prev)
                    .expect("degree-2 root vertex has a second neighbor");
                prev = cur;
                cur = next;
                root_path.push(next);
            }
            if cur == y {
                found = Some(root_path);
                break;
            }
        }
        let root_path = found?;
        let order: Vec<usize> = root_path
            .windows(2)
            .map(|e| sub.vertex_map[edge_of[&(e[0].min(e[1]), e[0].max(e[1]))]])
            .collect();
        if order.len() < 2 {
            return None; // every P_xy has length >= 1
        }
        paths.push(NarrowPath::new(g, order).ok()?);
    }

    // the six paths are vertex-disjoint and cover the host
    let mut covered: Vec<usize> = paths.iter().flat_map(|p| p.order().to_vec()).collect();
    covered.sort_unstable();
    let mut host_sorted = host.to_vec();
    host_sorted.sort_unstable();
    if covered != host_sorted {
        return None;
    }

    Some(K4LinePieces {
        host: host_sorted,
        triangles: [triangles[0], triangles[1], triangles[2], triangles[3]],
        paths,
    })
}

/// Add an augmenting path to a qualified line-trigraph host. The union must
/// again induce a line trigraph whose root gains a path (one edge longer
/// than the augmenting path) between the two degree-2 root vertices; that is
/// re-verified here and a failure signals an internal inconsistency or an
/// input outside the {ISK4,wheel,diamond}-free class.
pub fn extend_line_trigraph(
    g: &Trigraph,
    host: &[usize],
    aug: &AugmentingPathCertificate,
) -> Result<Vec<usize>> {
    let sub = g.induced(host)?;
    let old_root = structure::as_line_trigraph(&sub.trigraph)
        .ok_or_else(|| Error::InvalidInput("host is not a line trigraph".into()))?;
    if !structure::qualify_root(&old_root.graph).all() {
        return Err(Error::InvalidInput("host root is not qualified".into()));
    }
    if is_augmenting_path(g, host, &aug.path).is_none() {
        return Err(Error::InvalidInput("certificate does not augment the host".into()));
    }

    let shared_root_vertex = |root: &structure::RootGraph,
                              s: &InducedSubtrigraph,
                              v1: usize,
                              v2: usize|
     -> Result<usize> {
        let e1 = root.edge_map[s.from_host(v1).expect("host vertex")];
        let e2 = root.edge_map[s.from_host(v2).expect("host vertex")];
        for x in [e1.0, e1.1] {
            if x == e2.0 || x == e2.1 {
                return Ok(x);
            }
        }
        Err(Error::Internal("endpoint edges share no root vertex".into()))
    };

    // the attachment pairs meet in degree-2 root vertices
    for t in &aug.endpoint_triangles {
        let b = shared_root_vertex(&old_root, &sub, t[1], t[2])?;
        if old_root.graph.degree(b) != 2 {
            return Err(Error::Internal("attachment pair does not meet in a degree-2 root vertex".into()));
        }
    }

    let mut new_host: Vec<usize> = host.to_vec();
    new_host.extend(aug.path.order().iter().copied());
    new_host.sort_unstable();

    let new_sub = g.induced(&new_host)?;
    let new_root = structure::as_line_trigraph(&new_sub.trigraph)
        .ok_or_else(|| Error::Internal("extended host is not a line trigraph".into()))?;

    let len = aug.path.len();
    if new_root.graph.n() != old_root.graph.n() + len {
        return Err(Error::Internal("extended root has the wrong vertex count".into()));
    }
    if new_root.graph.edge_count() != old_root.graph.edge_count() + len + 1 {
        return Err(Error::Internal("extended root has the wrong edge count".into()));
    }
    // the meeting vertices now have degree three
    for t in &aug.endpoint_triangles {
        let b = shared_root_vertex(&new_root, &new_sub, t[1], t[2])?;
        if new_root.graph.degree(b) != 3 {
            return Err(Error::Internal("extension did not raise the root degree to three".into()));
        }
    }
    Ok(new_host)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::trigraph::AdjValue;

    /// A prism plus one extra vertex with the given strong attachments.
    fn prism_plus_vertex(lengths: &[usize], attach: &[usize]) -> (Trigraph, Vec<usize>) {
        let base = generate::prism(lengths, &[]).unwrap();
        let n = base.vertex_count();
        let mut g = Trigraph::new(n + 1);
        for (u, v) in base.pairs() {
            g.set(u, v, base.theta(u, v));
        }
        for &a in attach {
            g.set(a, n, AdjValue::StronglyAdjacent);
        }
        (g, (0..n).collect())
    }

    #[test]
    fn attachment_examples() {
        // part strongly anti-complete to host: empty attachment, both flags
        let (g, host) = prism_plus_vertex(&[1, 1, 1], &[]);
        let r = attachment(&g, &host, &[6]).unwrap();
        assert!(r.over.is_empty() && r.type_triangle && r.type_branch);

        // adjacent to one triangle vertex: both flags
        let (g, host) = prism_plus_vertex(&[1, 1, 1], &[0]);
        let r = attachment(&g, &host, &[6]).unwrap();
        assert_eq!(r.over, vec![0]);
        assert!(r.type_triangle && r.type_branch);

        // one vertex in each of two branch pieces, no common triangle
        let (g, host) = prism_plus_vertex(&[2, 2, 2], &[6, 7]);
        let r = attachment(&g, &host, &[9]).unwrap();
        assert_eq!(r.over, vec![6, 7]);
        assert!(!r.type_triangle && !r.type_branch);

        // overlap errors
        assert!(attachment(&g, &host, &[0]).is_err());
    }

    #[test]
    fn empty_attachment_flags_follow_host_structure() {
        // a host with no strong triangle and no flat branch: a single edge
        let mut g = Trigraph::new(3);
        g.set(0, 1, AdjValue::StronglyAdjacent);
        let r = attachment(&g, &[0, 1], &[2]).unwrap();
        assert!(r.over.is_empty());
        assert!(!r.type_triangle && !r.type_branch);
    }

    /// Prism with length-1 branches plus an augmenting edge p-p' where p
    /// attaches to both ends of branch x (vertices 0,3) and p' to branch y
    /// (vertices 1,4).
    fn prism_with_augmenting_edge() -> (Trigraph, Vec<usize>, NarrowPath) {
        let base = generate::prism(&[1, 1, 1], &[]).unwrap();
        let mut g = Trigraph::new(8);
        for (u, v) in base.pairs() {
            g.set(u, v, base.theta(u, v));
        }
        g.set(6, 7, AdjValue::StronglyAdjacent);
        g.set(6, 0, AdjValue::StronglyAdjacent);
        g.set(6, 3, AdjValue::StronglyAdjacent);
        g.set(7, 1, AdjValue::StronglyAdjacent);
        g.set(7, 4, AdjValue::StronglyAdjacent);
        let host: Vec<usize> = (0..6).collect();
        let path = NarrowPath::new(&g, vec![6, 7]).unwrap();
        (g, host, path)
    }

    #[test]
    fn augmenting_path_examples() {
        let (g, host, path) = prism_with_augmenting_edge();
        let cert = is_augmenting_path(&g, &host, &path).unwrap();
        assert_eq!(cert.endpoint_triangles[0], [6, 0, 3]);
        assert_eq!(cert.endpoint_triangles[1], [7, 1, 4]);
        assert_ne!(cert.host_branches[0].order(), cert.host_branches[1].order());

        // anti-adjacent host neighbors: the strong triangle fails
        let (mut g2, host2, path2) = prism_with_augmenting_edge();
        g2.set(0, 3, AdjValue::StronglyAntiAdjacent);
        g2.set(1, 0, AdjValue::StronglyAdjacent); // keep 0 connected sensibly
        assert!(is_augmenting_path(&g2, &host2, &path2).is_none());

        // a single vertex is not an augmenting path
        let (g3, host3, _) = prism_with_augmenting_edge();
        let single = NarrowPath::new(&g3, vec![6]).unwrap();
        assert!(is_augmenting_path(&g3, &host3, &single).is_none());
    }

    #[test]
    fn minimal_violator_examples() {
        // no outside vertices
        let base = generate::prism(&[1, 1, 1], &[]).unwrap();
        let host: Vec<usize> = (0..6).collect();
        assert!(minimal_violator(&base, &host).unwrap().is_none());

        // a valid augmenting path is returned exactly
        let (g, host, path) = prism_with_augmenting_edge();
        let viol = minimal_violator(&g, &host).unwrap().unwrap();
        assert_eq!(viol, path.vertices_sorted());

        // unsupported hosts error
        let c6 = {
            let mut t = Trigraph::new(7);
            for v in 0..6 {
                t.set(v, (v + 1) % 6, AdjValue::StronglyAdjacent);
            }
            t
        };
        assert!(minimal_violator(&c6, &(0..6).collect::<Vec<_>>()).is_err());
    }

    #[test]
    fn minimal_violator_is_inclusion_minimal() {
        let (g, host, _) = prism_with_augmenting_edge();
        let viol = minimal_violator(&g, &host).unwrap().unwrap();
        // exhaustive: no proper connected untyped subset
        let hs = host_structure(&g, &host).unwrap();
        for mask in 1u32..(1 << viol.len()) - 1 {
            let subset: Vec<usize> = viol
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            let conn = g.induced(&subset).unwrap().trigraph.is_connected();
            if conn {
                let r = attachment_with(&g, &hs, &host, &subset).unwrap();
                assert!(r.typed(), "proper subset {subset:?} is untyped");
            }
        }
    }

    #[test]
    fn k4_line_pieces_examples() {
        let g = generate::line_trigraph_of_subdivided_k4(&[1; 6], &[]).unwrap();
        let host: Vec<usize> = g.vertices().collect();
        let pieces = pieces_of_k4_line(&g, &host).unwrap();
        assert!(pieces.paths.iter().all(|p| p.len() == 1));
        for i in 0..6 {
            let sub_host = pieces.prism_sub_host(i);
            let sub = g.induced(&sub_host).unwrap();
            assert!(structure::as_prism(&sub.trigraph).is_some(), "K_xy is a prism");
        }

        let prism = generate::prism(&[1, 1, 1], &[]).unwrap();
        assert!(pieces_of_k4_line(&prism, &(0..6).collect::<Vec<_>>()).is_none());

        let mut c7 = Trigraph::new(7);
        for v in 0..7 {
            c7.set(v, (v + 1) % 7, AdjValue::StronglyAdjacent);
        }
        assert!(pieces_of_k4_line(&c7, &(0..7).collect::<Vec<_>>()).is_none());
    }

    #[test]
    fn extend_line_trigraph_examples() {
        // prism + augmenting path of length 1: an 8-vertex line trigraph
        let (g, host, path) = prism_with_augmenting_edge();
        let cert = is_augmenting_path(&g, &host, &path).unwrap();
        let old_root = structure::as_line_trigraph(&g.induced(&host).unwrap().trigraph).unwrap();
        let new_host = extend_line_trigraph(&g, &host, &cert).unwrap();
        assert_eq!(new_host.len(), 8);
        let new_root =
            structure::as_line_trigraph(&g.induced(&new_host).unwrap().trigraph).unwrap();
        assert_eq!(
            new_root.graph.edge_count(),
            old_root.graph.edge_count() + path.len() + 1
        );

        // length-2 augmenting path: 9-vertex host, root gains a length-3 path
        let base = generate::prism(&[1, 1, 1], &[]).unwrap();
        let mut g = Trigraph::new(9);
        for (u, v) in base.pairs() {
            g.set(u, v, base.theta(u, v));
        }
        for (u, v) in [(6, 7), (7, 8)] {
            g.set(u, v, AdjValue::StronglyAdjacent);
        }
        for (u, v) in [(6, 0), (6, 3), (8, 1), (8, 4)] {
            g.set(u, v, AdjValue::StronglyAdjacent);
        }
        let host: Vec<usize> = (0..6).collect();
        let path = NarrowPath::new(&g, vec![6, 7, 8]).unwrap();
        let cert = is_augmenting_path(&g, &host, &path).unwrap();
        let new_host = extend_line_trigraph(&g, &host, &cert).unwrap();
        assert_eq!(new_host.len(), 9);
    }
}
