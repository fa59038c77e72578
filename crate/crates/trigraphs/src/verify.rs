//! Machine checks of the decomposition theorem and its supporting
//! propositions at desk scale, with reproducible pass/fail reports and
//! counterexample artifacts.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::attachments;
use crate::cutsets;
use crate::decompose;
use crate::error::{Error, Result};
use crate::freeness::{self, ForbiddenPattern};
use crate::generate;
use crate::io;
use crate::structure;
use crate::trigraph::{full_mask, mask_to_vec, NarrowPath, SimpleGraph, Trigraph};

/// Instance and size caps for a verification run. `modulo_iso: None` keeps
/// each property's own default (labeled for the theorem, modulo isomorphism
/// for the delete-three scan).
#[derive(Debug, Clone)]
pub struct Budget {
    pub n_max: Option<usize>,
    pub samples: u64,
    pub seed: u64,
    pub modulo_iso: Option<bool>,
    pub min_wheel_rim: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            n_max: None,
            samples: 1000,
            seed: 20120924,
            modulo_iso: None,
            min_wheel_rim: freeness::DEFAULT_MIN_RIM,
        }
    }
}

/// Outcome of one property run; passes iff no counterexamples were found.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub property_id: String,
    pub instances_checked: u64,
    pub counterexamples: Vec<(Trigraph, String)>,
    pub elapsed: Duration,
    pub stats: Vec<(String, u64)>,
}

impl PropertyReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn stat(&self, key: &str) -> Option<u64> {
        self.stats.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    /// Everything except the elapsed time; equal fingerprints mean the run
    /// reproduced bit-for-bit.
    pub fn fingerprint(&self) -> String {
        let mut out = format!("{} instances={}\n", self.property_id, self.instances_checked);
        for (k, v) in &self.stats {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for (g, diag) in &self.counterexamples {
            out.push_str(&format!("cex {diag}\n{}", io::write_tri(g)));
        }
        out
    }
}

impl std::fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "property {}: {} (instances={}, counterexamples={}, elapsed={:.2?})",
            self.property_id,
            if self.pass() { "PASS" } else { "FAIL" },
            self.instances_checked,
            self.counterexamples.len(),
            self.elapsed
        )?;
        for (k, v) in &self.stats {
            writeln!(f, "  {k}: {v}")?;
        }
        for (g, diag) in &self.counterexamples {
            writeln!(f, "  counterexample: {diag}")?;
            for line in io::write_tri(g).lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

struct ReportBuilder {
    property_id: String,
    instances: u64,
    counterexamples: Vec<(Trigraph, String)>,
    stats: Vec<(String, u64)>,
    start: Instant,
}

impl ReportBuilder {
    fn new(id: &str) -> ReportBuilder {
        ReportBuilder {
            property_id: id.to_string(),
            instances: 0,
            counterexamples: Vec::new(),
            stats: Vec::new(),
            start: Instant::now(),
        }
    }

    fn bump(&mut self, key: &str) {
        match self.stats.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v += 1,
            None => self.stats.push((key.to_string(), 1)),
        }
    }

    fn set_stat(&mut self, key: &str, value: u64) {
        match self.stats.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v = value,
            None => self.stats.push((key.to_string(), value)),
        }
    }

    fn cex(&mut self, g: &Trigraph, diag: String) {
        self.counterexamples.push((g.clone(), diag));
    }

    fn finish(mut self) -> PropertyReport {
        self.counterexamples.sort_by(|a, b| a.1.cmp(&b.1));
        PropertyReport {
            property_id: self.property_id,
            instances_checked: self.instances,
            counterexamples: self.counterexamples,
            elapsed: self.start.elapsed(),
            stats: self.stats,
        }
    }
}

fn is_isk4_wheel_free_default(g: &Trigraph, min_rim: usize) -> bool {
    freeness::pattern_witness(g, ForbiddenPattern::Isk4).is_none()
        && freeness::pattern_witness_rim(g, ForbiddenPattern::Wheel, min_rim).is_none()
}

fn is_narrow_path_trigraph(g: &Trigraph) -> bool {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return false;
    }
    if n == 1 {
        return true;
    }
    let mut ones = 0;
    for v in 0..n {
        match g.degree(v) {
            1 => ones += 1,
            2 => {}
            _ => return false,
        }
    }
    ones == 2
}

// ---------------------------------------------------------------------------
// theorem
// ---------------------------------------------------------------------------

/// For every {ISK4,wheel}-free trigraph of each size up to `n_max`, classify
/// must return at least one label. Records per-size scanned and free counts.
pub fn verify_theorem(n_max: usize, budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("theorem");
    let modulo_iso = budget.modulo_iso.unwrap_or(false);
    for n in 1..=n_max {
        let mut scanned = 0u64;
        let mut free = 0u64;
        for g in generate::enumerate_trigraphs(n, modulo_iso)? {
            scanned += 1;
            rb.instances += 1;
            if !is_isk4_wheel_free_default(&g, budget.min_wheel_rim) {
                continue;
            }
            free += 1;
            if decompose::classify(&g).is_empty() {
                rb.cex(&g, format!("free trigraph on {n} vertices has no label"));
            }
        }
        rb.set_stat(&format!("n={n} scanned"), scanned);
        rb.set_stat(&format!("n={n} free"), free);
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// oracle agreement
// ---------------------------------------------------------------------------

pub mod oracles {
    //! Brute-force routes the implementations are cross-validated against.

    use super::*;

    /// Does the induced subgraph on `mask` belong to the pattern class?
    pub fn subset_matches(
        h: &SimpleGraph,
        mask: u64,
        p: ForbiddenPattern,
        min_rim: usize,
    ) -> bool {
        let size = mask.count_ones() as usize;
        let edges_within = || -> usize {
            let vs = mask_to_vec(mask);
            let mut e = 0;
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[..i] {
                    if h.adjacent(u, v) {
                        e += 1;
                    }
                }
            }
            e
        };
        match p {
            ForbiddenPattern::Isk4 => freeness::is_subdivision_of_k4_mask(h, mask),
            ForbiddenPattern::Wheel => mask_to_vec(mask).into_iter().any(|hub| {
                let hole = mask & !(1 << hub);
                freeness::is_hole_mask(h, hole, min_rim)
                    && (h.neighbor_mask(hub) & hole).count_ones() >= 3
            }),
            ForbiddenPattern::Diamond => size == 4 && edges_within() == 5,
            ForbiddenPattern::K4 => size == 4 && edges_within() == 6,
            ForbiddenPattern::K33 => {
                if size != 6 {
                    return false;
                }
                let vs = mask_to_vec(mask);
                for i in 1..5 {
                    for j in i + 1..6 {
                        let a = [vs[0], vs[i], vs[j]];
                        let b: Vec<usize> =
                            vs.iter().copied().filter(|v| !a.contains(v)).collect();
                        let stable = |side: &[usize]| {
                            side.iter().enumerate().all(|(x, &u)| {
                                side[..x].iter().all(|&w| !h.adjacent(u, w))
                            })
                        };
                        if stable(&a)
                            && stable(&b)
                            && a.iter().all(|&u| b.iter().all(|&w| h.adjacent(u, w)))
                        {
                            return true;
                        }
                    }
                }
                false
            }
        }
    }

    /// The definitional route: some realization has some subset in the class.
    pub fn brute_force_has_pattern(g: &Trigraph, p: ForbiddenPattern, min_rim: usize) -> bool {
        let n = g.vertex_count();
        g.realizations()
            .any(|r| (0..=full_mask(n)).any(|mask| subset_matches(&r, mask, p, min_rim)))
    }

    /// Complete-bipartite recognition by brute force over all 2^n side
    /// assignments; returns (any bipartition exists, a thick one exists).
    pub fn brute_force_complete_bipartite(g: &Trigraph) -> (bool, bool) {
        let n = g.vertex_count();
        let mut any = false;
        let mut thick = false;
        for assign in 0..=full_mask(n) {
            let a = mask_to_vec(assign);
            let b = mask_to_vec(full_mask(n) & !assign);
            let ok = g.is_strongly_stable(&a)
                && g.is_strongly_stable(&b)
                && a.iter().all(|&u| b.iter().all(|&v| g.strongly_adjacent(u, v)));
            if ok {
                any = true;
                if a.len().min(b.len()) >= 3 {
                    thick = true;
                }
            }
        }
        (any, thick)
    }
}

/// Exhaustive cross-validation: (a) the trigraph freeness detectors (both
/// the realization-enumeration default and the constructive searches)
/// against the ∀-realization-∀-subset brute force, (b) the series-parallel
/// reduction against the direct K4-subdivision subgraph search, (c) the
/// complete-bipartite recognizer against the bipartition brute force.
pub fn verify_oracle_agreement(n_max: usize, budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("oracle");
    if n_max > 4 {
        return Err(Error::InvalidInput(
            "oracle agreement is exhaustive only up to n = 4".into(),
        ));
    }
    let rim = budget.min_wheel_rim;
    for n in 1..=n_max {
        for g in generate::enumerate_trigraphs(n, false)? {
            rb.instances += 1;
            for p in ForbiddenPattern::ALL {
                let brute = oracles::brute_force_has_pattern(&g, p, rim);
                let default = freeness::pattern_witness_rim(&g, p, rim).is_some();
                let fast = freeness::pattern_witness_fast_rim(&g, p, rim).is_some();
                if brute != default || brute != fast {
                    rb.cex(
                        &g,
                        format!(
                            "freeness disagreement on {}: brute={brute} default={default} fast={fast}",
                            p.name()
                        ),
                    );
                } else if brute {
                    rb.bump(&format!("n={n} {} non-free", p.name()));
                }
            }
            let sp = structure::is_series_parallel(&g);
            let sp_oracle = !structure::has_k4_subdivision_subgraph(&g.full_realization());
            if sp != sp_oracle {
                rb.cex(&g, format!("series-parallel disagreement: reduction={sp} search={sp_oracle}"));
            }
            let (any, thick) = oracles::brute_force_complete_bipartite(&g);
            let rec = structure::as_complete_bipartite(&g);
            if any != rec.is_some() || (any && thick != rec.as_ref().map(|r| r.1).unwrap()) {
                rb.cex(&g, "complete-bipartite disagreement".to_string());
            }
        }
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// sampled attachment-lemma instances
// ---------------------------------------------------------------------------

const GROW_PATTERNS: [ForbiddenPattern; 3] =
    [ForbiddenPattern::Isk4, ForbiddenPattern::Wheel, ForbiddenPattern::Diamond];

#[derive(Clone, Copy, PartialEq)]
enum HostKind {
    Prism,
    K4Line,
    Alternate,
}

struct AttachmentInstance {
    g: Trigraph,
    host: Vec<usize>,
}

/// Append an augmenting path of random length to the trigraph: endpoints
/// attach to strongly adjacent consecutive pairs inside two distinct flat
/// branches of the host, forming strong triangles. Keeps the instance in
/// the free class (the attached structure is again a line trigraph of a
/// qualified root); falls back to `None` when the host lacks two usable
/// branches or freeness would break.
fn plant_augmenting_path(
    g: &Trigraph,
    host: &[usize],
    rng: &mut ChaCha8Rng,
) -> Option<Trigraph> {
    let hs = attachments::host_structure(g, host).ok()?;
    let branches = &hs.flat_branches;
    if branches.len() < 2 {
        return None;
    }
    // only pairs strictly inside the branch keep the extended root chordless
    // (both split segments need length >= 2)
    let strong_windows = |b: &NarrowPath| -> Vec<(usize, usize)> {
        let l = b.len();
        b.order()
            .windows(2)
            .enumerate()
            .filter(|(t, w)| *t >= 1 && *t + 2 <= l && g.strongly_adjacent(w[0], w[1]))
            .map(|(_, w)| (w[0], w[1]))
            .collect()
    };
    let usable: Vec<usize> =
        (0..branches.len()).filter(|&i| !strong_windows(&branches[i]).is_empty()).collect();
    if usable.len() < 2 {
        return None;
    }
    let i_pos = (rng.random::<u64>() % usable.len() as u64) as usize;
    let mut j_pos = (rng.random::<u64>() % (usable.len() - 1) as u64) as usize;
    if j_pos >= i_pos {
        j_pos += 1;
    }
    let (bi, bj) = (usable[i_pos], usable[j_pos]);
    let wi = strong_windows(&branches[bi]);
    let wj = strong_windows(&branches[bj]);
    let (x1, x2) = wi[(rng.random::<u64>() % wi.len() as u64) as usize];
    let (y1, y2) = wj[(rng.random::<u64>() % wj.len() as u64) as usize];
    let len = 1 + (rng.random::<u64>() % 2) as usize;
    let n0 = g.vertex_count();
    let mut out = Trigraph::new(n0 + len + 1);
    for (u, v) in g.pairs() {
        out.set(u, v, g.theta(u, v));
    }
    for step in 0..len {
        out.set(n0 + step, n0 + step + 1, crate::trigraph::AdjValue::StronglyAdjacent);
    }
    for a in [x1, x2] {
        out.set(n0, a, crate::trigraph::AdjValue::StronglyAdjacent);
    }
    for b in [y1, y2] {
        out.set(n0 + len, b, crate::trigraph::AdjValue::StronglyAdjacent);
    }
    freeness::is_free_all_fast(&out, &GROW_PATTERNS).then_some(out)
}

/// Deterministic instance for one trial: a prism or K4-line host, possibly
/// seeded with explicit augmenting paths so the minimal-violator machinery
/// has something to find, grown by a few random vertices while staying
/// {ISK4,wheel,diamond}-free.
fn attachment_instance(kind: HostKind, trial_seed: u64) -> AttachmentInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let use_k4 = match kind {
        HostKind::Prism => false,
        HostKind::K4Line => true,
        HostKind::Alternate => rng.random::<u64>() % 2 == 0,
    };
    // plantable hosts need two branches of length >= 3
    let plants = (rng.random::<u64>() % 3) as usize;
    let base = if use_k4 {
        let mut counts = [1usize; 6];
        if plants > 0 {
            counts[0] = 3;
            counts[3] = 3; // vertex-disjoint K4 edges (0,1) and (1,2)
        } else {
            let bumps = (rng.random::<u64>() % 3) as usize;
            for _ in 0..bumps {
                counts[(rng.random::<u64>() % 6) as usize] = 2;
            }
        }
        generate::line_trigraph_of_subdivided_k4(&counts, &[]).expect("valid counts")
    } else {
        let lengths: Vec<usize> = if plants > 0 {
            vec![
                3 + (rng.random::<u64>() % 2) as usize,
                3 + (rng.random::<u64>() % 2) as usize,
                1 + (rng.random::<u64>() % 3) as usize,
            ]
        } else {
            (0..3).map(|_| 1 + (rng.random::<u64>() % 3) as usize).collect()
        };
        generate::prism(&lengths, &[]).expect("valid lengths")
    };
    let host: Vec<usize> = (0..base.vertex_count()).collect();
    let mut seeded = base;
    for _ in 0..plants {
        if let Some(planted) = plant_augmenting_path(&seeded, &host, &mut rng) {
            seeded = planted;
        }
    }
    let extra = 2 + (rng.random::<u64>() % 4) as usize;
    let g = generate::grow_free_instance(&seeded, extra, &GROW_PATTERNS, trial_seed ^ 0x9e37_79b9);
    AttachmentInstance { g, host }
}

fn check_vertex_attachments(
    rb: &mut ReportBuilder,
    inst: &AttachmentInstance,
    seed: u64,
    trial: u64,
) {
    let hs = match attachments::host_structure(&inst.g, &inst.host) {
        Ok(hs) => hs,
        Err(e) => {
            rb.cex(&inst.g, format!("seed={seed} trial={trial}: host structure failed: {e}"));
            return;
        }
    };
    for v in inst.g.vertices().filter(|v| !inst.host.contains(v)) {
        let nbrs: Vec<usize> =
            inst.host.iter().copied().filter(|&h| inst.g.adjacent(v, h)).collect();
        let report = attachments::attachment_with(&inst.g, &hs, &inst.host, &[v])
            .expect("outside vertex is disjoint from host");
        if nbrs.len() > 2 || !report.type_branch {
            rb.cex(
                &inst.g,
                format!(
                    "seed={seed} trial={trial} vertex={v}: neighbors={nbrs:?} type_branch={}",
                    report.type_branch
                ),
            );
        }
    }
}

fn check_minimal_violator_augments(
    rb: &mut ReportBuilder,
    inst: &AttachmentInstance,
    seed: u64,
    trial: u64,
) {
    match attachments::minimal_violator(&inst.g, &inst.host) {
        Err(e) => rb.cex(&inst.g, format!("seed={seed} trial={trial}: violator search failed: {e}")),
        Ok(None) => {
            rb.bump("trials with every connected set typed");
        }
        Ok(Some(set)) => {
            rb.bump("violators found");
            let Some(path) = NarrowPath::from_vertex_set(&inst.g, &set) else {
                rb.cex(
                    &inst.g,
                    format!("seed={seed} trial={trial}: minimal violator {set:?} is not a narrow path"),
                );
                return;
            };
            if attachments::is_augmenting_path(&inst.g, &inst.host, &path).is_none() {
                rb.cex(
                    &inst.g,
                    format!("seed={seed} trial={trial}: minimal violator {set:?} is not augmenting"),
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// propositions
// ---------------------------------------------------------------------------

pub fn verify_proposition(id: &str, budget: &Budget) -> Result<PropertyReport> {
    match id {
        "theorem" => verify_theorem(budget.n_max.unwrap_or(4), budget),
        "oracle" => verify_oracle_agreement(budget.n_max.unwrap_or(4), budget),
        "delete-three" => verify_delete_three(budget),
        "diamond" => verify_diamond(budget),
        "prism-vertex" => verify_attachment_vertex("prism-vertex", HostKind::Prism, budget),
        "k4-vertex" => verify_attachment_vertex("k4-vertex", HostKind::K4Line, budget),
        "prism-conn" => verify_attachment_conn("prism-conn", HostKind::Prism, budget),
        "k4-conn" => verify_attachment_conn("k4-conn", HostKind::K4Line, budget),
        "cyclic3-conn" => verify_attachment_conn("cyclic3-conn", HostKind::Alternate, budget),
        "max-cyclic3" => verify_max_cyclic3(budget),
        "k33-vertex" => verify_k33("k33-vertex", budget),
        "k33-comp" => verify_k33("k33-comp", budget),
        "k33-strong" => verify_k33_strong(budget),
        "prism-realization" => verify_prism_realization(budget),
        "k33-or-prism" => verify_k33_or_prism(budget),
        "lemma45" => verify_lemma45(budget),
        "long-rich-square" => verify_long_rich_square(budget),
        other => Err(Error::UnknownProperty(other.to_string())),
    }
}

pub const PROPERTY_IDS: [&str; 17] = [
    "theorem",
    "oracle",
    "delete-three",
    "diamond",
    "prism-vertex",
    "prism-conn",
    "k4-vertex",
    "k4-conn",
    "cyclic3-conn",
    "max-cyclic3",
    "k33-vertex",
    "k33-comp",
    "k33-strong",
    "prism-realization",
    "k33-or-prism",
    "lemma45",
    "long-rich-square",
];

/// Every connected trigraph that is not a narrow path has at least three
/// vertices whose individual deletion preserves connectivity.
fn verify_delete_three(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("delete-three");
    let n_max = budget.n_max.unwrap_or(6);
    let modulo_iso = budget.modulo_iso.unwrap_or(true);
    for n in 1..=n_max {
        for g in generate::enumerate_trigraphs(n, modulo_iso)? {
            if !g.is_connected() || is_narrow_path_trigraph(&g) {
                continue;
            }
            rb.instances += 1;
            let removable = g
                .vertices()
                .filter(|&v| g.without(&[v]).trigraph.is_connected())
                .count();
            if removable < 3 {
                rb.cex(&g, format!("only {removable} connectivity-preserving deletions"));
            }
        }
    }
    Ok(rb.finish())
}

/// Over {K4,wheel}-free trigraphs: diamond-free, or a clique-cutset, or a
/// stable 2-cutset. Also reported over the ISK4-free subclass.
fn verify_diamond(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("diamond");
    let n_max = budget.n_max.unwrap_or(5);
    let rim = budget.min_wheel_rim;
    for n in 1..=n_max {
        for g in generate::enumerate_trigraphs(n, budget.modulo_iso.unwrap_or(false))? {
            if freeness::pattern_witness(&g, ForbiddenPattern::K4).is_some()
                || freeness::pattern_witness_rim(&g, ForbiddenPattern::Wheel, rim).is_some()
            {
                continue;
            }
            rb.instances += 1;
            rb.bump(&format!("n={n} k4-wheel-free"));
            let isk4_free = freeness::pattern_witness_fast(&g, ForbiddenPattern::Isk4).is_none();
            if isk4_free {
                rb.bump(&format!("n={n} also isk4-free"));
            }
            let holds = freeness::pattern_witness(&g, ForbiddenPattern::Diamond).is_none()
                || cutsets::find_clique_cutset(&g).is_some()
                || cutsets::find_stable_2_cutset(&g).is_some();
            if !holds {
                rb.cex(&g, format!("n={n}: diamond present and no small cutset"));
            }
        }
    }
    Ok(rb.finish())
}

fn verify_attachment_vertex(id: &str, kind: HostKind, budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new(id);
    for trial in 0..budget.samples {
        let trial_seed = budget.seed.wrapping_add(trial);
        let inst = attachment_instance(kind, trial_seed);
        rb.instances += 1;
        check_vertex_attachments(&mut rb, &inst, budget.seed, trial);
    }
    Ok(rb.finish())
}

fn verify_attachment_conn(id: &str, kind: HostKind, budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new(id);
    for trial in 0..budget.samples {
        let trial_seed = budget.seed.wrapping_add(trial);
        let inst = attachment_instance(kind, trial_seed);
        rb.instances += 1;
        check_minimal_violator_augments(&mut rb, &inst, budget.seed, trial);
    }
    Ok(rb.finish())
}

/// Operational form of the maximality proposition: repeatedly take a minimal
/// violator, certify it as an augmenting path, and extend the host; the loop
/// must end with every outside component of type branch or type triangle.
fn verify_max_cyclic3(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("max-cyclic3");
    'trials: for trial in 0..budget.samples {
        let trial_seed = budget.seed.wrapping_add(trial);
        let inst = attachment_instance(HostKind::Alternate, trial_seed);
        rb.instances += 1;
        let mut host = inst.host.clone();
        loop {
            match attachments::minimal_violator(&inst.g, &host) {
                Err(e) => {
                    rb.cex(
                        &inst.g,
                        format!("seed={} trial={trial}: host no longer qualified: {e}", budget.seed),
                    );
                    continue 'trials;
                }
                Ok(None) => break,
                Ok(Some(set)) => {
                    let Some(path) = NarrowPath::from_vertex_set(&inst.g, &set) else {
                        rb.cex(
                            &inst.g,
                            format!("seed={} trial={trial}: violator {set:?} is not a narrow path", budget.seed),
                        );
                        continue 'trials;
                    };
                    let Some(cert) = attachments::is_augmenting_path(&inst.g, &host, &path) else {
                        rb.cex(
                            &inst.g,
                            format!("seed={} trial={trial}: violator {set:?} is not augmenting", budget.seed),
                        );
                        continue 'trials;
                    };
                    match attachments::extend_line_trigraph(&inst.g, &host, &cert) {
                        Ok(new_host) => {
                            rb.bump("extensions performed");
                            host = new_host;
                        }
                        Err(e) => {
                            rb.cex(
                                &inst.g,
                                format!("seed={} trial={trial}: extension failed: {e}", budget.seed),
                            );
                            continue 'trials;
                        }
                    }
                }
            }
        }
        // final host: every outside component typed
        let hs = attachments::host_structure(&inst.g, &host).expect("host still induced");
        let outside: Vec<usize> =
            inst.g.vertices().filter(|v| !host.contains(v)).collect();
        if !outside.is_empty() {
            let out_sub = inst.g.induced(&outside).expect("outside set valid");
            for comp in out_sub.trigraph.components() {
                let comp_host = out_sub.to_host(&comp);
                let rep = attachments::attachment_with(&inst.g, &hs, &host, &comp_host)
                    .expect("components disjoint from host");
                if !rep.typed() {
                    rb.cex(
                        &inst.g,
                        format!(
                            "seed={} trial={trial}: component {comp_host:?} untyped after closure",
                            budget.seed
                        ),
                    );
                }
            }
        }
    }
    Ok(rb.finish())
}

/// Grow around a strong K_{3,3}, close the host into a maximal thick
/// complete bipartite subtrigraph, then check the K33-vertex or K33-comp
/// bound (at most one attachment vertex per side).
fn verify_k33(id: &str, budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new(id);
    let patterns = [ForbiddenPattern::Isk4, ForbiddenPattern::Wheel];
    for trial in 0..budget.samples {
        let trial_seed = budget.seed.wrapping_add(trial);
        let g = generate::grow_free_instance(
            &generate::strong_k33(),
            2 + (trial % 4) as usize,
            &patterns,
            trial_seed,
        );
        rb.instances += 1;

        // greedy closure to a maximal thick complete bipartite host
        let mut side_a: Vec<usize> = vec![0, 1, 2];
        let mut side_b: Vec<usize> = vec![3, 4, 5];
        loop {
            let in_host = |v: usize| side_a.contains(&v) || side_b.contains(&v);
            let addable = g.vertices().find(|&v| {
                !in_host(v)
                    && ((side_a.iter().all(|&u| g.strongly_anti_adjacent(u, v))
                        && side_b.iter().all(|&u| g.strongly_adjacent(u, v)))
                        || (side_b.iter().all(|&u| g.strongly_anti_adjacent(u, v))
                            && side_a.iter().all(|&u| g.strongly_adjacent(u, v))))
            });
            match addable {
                None => break,
                Some(v) => {
                    if side_a.iter().all(|&u| g.strongly_anti_adjacent(u, v)) {
                        side_a.push(v);
                    } else {
                        side_b.push(v);
                    }
                    rb.bump("host extensions");
                }
            }
        }
        let host: Vec<usize> = side_a.iter().chain(side_b.iter()).copied().collect();

        if id == "k33-vertex" {
            for v in g.vertices().filter(|v| !host.contains(v)) {
                let in_a = side_a.iter().filter(|&&u| g.adjacent(u, v)).count();
                let in_b = side_b.iter().filter(|&&u| g.adjacent(u, v)).count();
                if in_a > 1 || in_b > 1 {
                    rb.cex(
                        &g,
                        format!(
                            "seed={} trial={trial} vertex={v}: {in_a} neighbors in A, {in_b} in B",
                            budget.seed
                        ),
                    );
                }
            }
        } else {
            let outside: Vec<usize> = g.vertices().filter(|v| !host.contains(v)).collect();
            if outside.is_empty() {
                continue;
            }
            let out_sub = g.induced(&outside).expect("outside set valid");
            for comp in out_sub.trigraph.components() {
                let comp_host = out_sub.to_host(&comp);
                let over_a = side_a
                    .iter()
                    .filter(|&&u| comp_host.iter().any(|&p| g.adjacent(u, p)))
                    .count();
                let over_b = side_b
                    .iter()
                    .filter(|&&u| comp_host.iter().any(|&p| g.adjacent(u, p)))
                    .count();
                if over_a > 1 || over_b > 1 {
                    rb.cex(
                        &g,
                        format!(
                            "seed={} trial={trial} component={comp_host:?}: attachment has {over_a} in A, {over_b} in B",
                            budget.seed
                        ),
                    );
                }
            }
        }
    }
    Ok(rb.finish())
}

/// Exhaustive over 6-vertex K_{3,3}-trigraphs: the ISK4-free ones contain no
/// semi-adjacent pairs.
fn verify_k33_strong(budget: &Budget) -> Result<PropertyReport> {
    let _ = budget;
    let mut rb = ReportBuilder::new("k33-strong");
    let mut seen: std::collections::HashSet<Vec<i8>> = std::collections::HashSet::new();
    for split in crate::util::subsets_of_size(6, 3) {
        if !split.contains(&0) {
            continue; // each unordered split once
        }
        let other: Vec<usize> = (0..6).filter(|v| !split.contains(v)).collect();
        let cross: Vec<(usize, usize)> = split
            .iter()
            .flat_map(|&u| other.iter().map(move |&v| (u.min(v), u.max(v))))
            .collect();
        let internal: Vec<(usize, usize)> = {
            let mut out = Vec::new();
            for side in [&split, &other] {
                for i in 0..3 {
                    for j in i + 1..3 {
                        out.push((side[i].min(side[j]), side[i].max(side[j])));
                    }
                }
            }
            out
        };
        for cross_bits in 0u32..(1 << 9) {
            for internal_bits in 0u32..(1 << 6) {
                let mut g = Trigraph::new(6);
                for (i, &(u, v)) in cross.iter().enumerate() {
                    let val = if cross_bits & (1 << i) != 0 {
                        crate::trigraph::AdjValue::StronglyAdjacent
                    } else {
                        crate::trigraph::AdjValue::SemiAdjacent
                    };
                    g.set(u, v, val);
                }
                for (i, &(u, v)) in internal.iter().enumerate() {
                    let val = if internal_bits & (1 << i) != 0 {
                        crate::trigraph::AdjValue::StronglyAntiAdjacent
                    } else {
                        crate::trigraph::AdjValue::SemiAdjacent
                    };
                    g.set(u, v, val);
                }
                let key: Vec<i8> = g.theta_slice().iter().map(|v| v.as_i8()).collect();
                if !seen.insert(key) {
                    continue;
                }
                rb.instances += 1;
                if freeness::pattern_witness_fast(&g, ForbiddenPattern::Isk4).is_some() {
                    continue;
                }
                rb.bump("isk4-free k33-trigraphs");
                if !g.is_graph() {
                    rb.cex(&g, "ISK4-free K33-trigraph with a semi-adjacent pair".into());
                }
            }
        }
    }
    Ok(rb.finish())
}

/// {ISK4,wheel}-free trigraphs whose full realization has an induced prism
/// contain a prism as an induced subtrigraph. Instances: prisms with random
/// pairs demoted to semi-adjacent (freeness re-checked), slightly grown.
fn verify_prism_realization(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("prism-realization");
    for trial in 0..budget.samples {
        let trial_seed = budget.seed.wrapping_add(trial);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let lengths: Vec<usize> =
            (0..3).map(|_| 1 + (rng.random::<u64>() % 3) as usize).collect();
        let base = generate::prism(&lengths, &[]).expect("valid lengths");
        let n0 = base.vertex_count();
        let strong_pairs: Vec<(usize, usize)> = base
            .pairs()
            .filter(|&(u, v)| base.strongly_adjacent(u, v))
            .collect();
        let demote = 1 + (rng.random::<u64>() % 3) as usize;
        let mut semis = Vec::new();
        for _ in 0..demote {
            semis.push(strong_pairs[(rng.random::<u64>() % strong_pairs.len() as u64) as usize]);
        }
        let g0 = generate::with_semi_pairs(base, &semis).expect("pairs in range");
        rb.instances += 1;
        if !freeness::is_free_fast(&g0, ForbiddenPattern::Isk4)
            || !freeness::is_free_fast(&g0, ForbiddenPattern::Wheel)
        {
            rb.bump("rejected (demotion broke freeness)");
            continue;
        }
        rb.bump("accepted free instances");
        let g = generate::grow_free_instance(
            &g0,
            (rng.random::<u64>() % 3) as usize,
            &[ForbiddenPattern::Isk4, ForbiddenPattern::Wheel],
            trial_seed ^ 0x51ed_270b,
        );
        // the base vertex set realizes a prism in the full realization, so
        // the trigraph must induce one there
        let base_set: Vec<usize> = (0..n0).collect();
        let sub = g.induced(&base_set).expect("base set in range");
        if structure::as_prism(&sub.trigraph).is_none() {
            rb.cex(
                &g,
                format!("seed={} trial={trial}: base set is no prism subtrigraph", budget.seed),
            );
        }
    }
    Ok(rb.finish())
}

/// Free trigraphs are series-parallel or contain a prism or a strong K33 as
/// an induced subtrigraph: exhaustive to n = 5 (where it reduces to
/// series-parallel), sampled at n = 6, 7.
fn verify_k33_or_prism(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("k33-or-prism");
    let rim = budget.min_wheel_rim;
    let exhaustive_max = budget.n_max.unwrap_or(5).min(5);
    for n in 1..=exhaustive_max {
        for g in generate::enumerate_trigraphs(n, false)? {
            if !freeness::is_free_fast(&g, ForbiddenPattern::Isk4)
                || freeness::pattern_witness_fast_rim(&g, ForbiddenPattern::Wheel, rim).is_some()
            {
                continue;
            }
            rb.instances += 1;
            rb.bump(&format!("n={n} free"));
            if !structure::is_series_parallel(&g) {
                rb.cex(&g, format!("n={n}: free, not series-parallel, too small for prism/K33"));
            }
        }
    }
    // sampled part at n = 6 and 7
    let mut found_free = 0u64;
    for trial in 0..budget.samples {
        let trial_seed = budget.seed.wrapping_add(trial);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let n = 6 + (trial % 2) as usize;
        let p_plus = 0.15 + (rng.random::<f64>() * 0.25);
        let g = generate::random_trigraph(n, p_plus, 0.1, trial_seed);
        if !freeness::is_free_fast(&g, ForbiddenPattern::Isk4)
            || freeness::pattern_witness_fast_rim(&g, ForbiddenPattern::Wheel, rim).is_some()
        {
            continue;
        }
        rb.instances += 1;
        found_free += 1;
        if structure::is_series_parallel(&g) {
            continue;
        }
        let mut ok = false;
        'subsets: for mask in 0..=full_mask(n) {
            if (mask.count_ones() as usize) < 6 {
                continue;
            }
            let vs = mask_to_vec(mask);
            let sub = g.induced(&vs).expect("mask in range");
            if structure::as_prism(&sub.trigraph).is_some() {
                ok = true;
                break 'subsets;
            }
            if vs.len() == 6 && sub.trigraph.is_graph() {
                if let Some((bip, true)) = structure::as_complete_bipartite(&sub.trigraph) {
                    if bip.a.len() == 3 {
                        ok = true;
                        break 'subsets;
                    }
                }
            }
        }
        if !ok {
            rb.cex(
                &g,
                format!("seed={} trial={trial}: free, not SP, no prism or strong K33", budget.seed),
            );
        }
    }
    rb.set_stat("sampled free instances", found_free);
    Ok(rb.finish())
}

/// Lemma 4.5: cyclically 3-connected iff a theta or a subdivision of a
/// 3-connected graph; exhaustive over all labeled graphs up to `n_max`.
fn verify_lemma45(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("lemma45");
    let n_max = budget.n_max.unwrap_or(7);
    for n in 1..=n_max {
        let pairs = n * (n - 1) / 2;
        for code in 0u64..(1u64 << pairs) {
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
            rb.instances += 1;
            let lhs = structure::is_cyclically_3_connected(&h);
            let rhs = structure::is_theta(&h) || structure::is_subdivision_of_3connected(&h);
            if lhs != rhs {
                rb.cex(
                    h.as_trigraph(),
                    format!("n={n} code={code}: cyc3={lhs} theta-or-subdivision={rhs}"),
                );
            }
        }
        rb.set_stat(&format!("n={n} graphs"), 1u64 << pairs);
    }
    Ok(rb.finish())
}

/// Long rich squares are not wheel-free: sweep 2–3 links with lengths in
/// {1,2,3}; every instance must yield a wheel witness.
fn verify_long_rich_square(budget: &Budget) -> Result<PropertyReport> {
    let mut rb = ReportBuilder::new("long-rich-square");
    let rim = budget.min_wheel_rim;
    let lengths_choices: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        for a in 1..=3usize {
            for b in 1..=3usize {
                out.push(vec![a, b]);
                for c in 1..=3usize {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out
    };
    for lengths in lengths_choices {
        let g = generate::long_rich_square(&lengths)?;
        rb.instances += 1;
        if freeness::find_wheel_rim(&g.full_realization(), rim).is_none() {
            rb.cex(&g, format!("no wheel in long rich square with links {lengths:?}"));
        }
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
