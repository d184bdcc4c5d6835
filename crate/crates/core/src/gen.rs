//! Seeded random-graph generators and graph summary statistics.
//!
//! Six models are provided: Erdos-Renyi (`er`), Barabasi-Albert preferential
//! attachment (`ba`), Watts-Strogatz small-world (`ws`), K-regular via the
//! pairing construction (`kreg`), K-nearest-neighbour geometric (`knn`), and
//! degree-preserving assortative rewiring of an Erdos-Renyi base (`assort`).
//! Every generator is a pure function of `(parameters, seed)`.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::{ordered, Graph};
use crate::{Error, Result};

/// Iteration cap for the assortative rewiring loop.
pub const DEFAULT_ASSORT_MAX_ITERS: usize = 1_000_000;

/// Connectivity rejection-sampling cap used when a generator needs a
/// connected base internally.
const BASE_MAX_TRIES: usize = 1_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// Each pair independently with probability `p`.
    Er { p: f64 },
    /// Preferential attachment, `m` edges per new node, star seed graph.
    Ba { m: usize },
    /// Ring lattice of degree `k`, each edge rewired with probability `p`.
    Ws { k: usize, p: f64 },
    /// Every node has degree exactly `k` (pairing construction with restarts).
    KReg { k: usize },
    /// Union of directed k-nearest-neighbour relations on uniform points in
    /// the unit square.
    Knn { k: usize },
    /// Erdos-Renyi base rewired towards endpoint-degree correlation
    /// `threshold`, keeping the degree sequence fixed.
    Assortative {
        er_p: f64,
        rewire_p: f64,
        threshold: f64,
    },
}

impl Model {
    pub fn label(&self) -> &'static str {
        match self {
            Model::Er { .. } => "er",
            Model::Ba { .. } => "ba",
            Model::Ws { .. } => "ws",
            Model::KReg { .. } => "kreg",
            Model::Knn { .. } => "knn",
            Model::Assortative { .. } => "assort",
        }
    }

    /// Paper-calibrated default parameters for a model tag.
    pub fn with_defaults(tag: &str, n: usize) -> Result<Model> {
        let nf = n as f64;
        match tag {
            "er" => Ok(Model::Er { p: nf.ln() / nf }),
            "ba" => Ok(Model::Ba { m: 3 }),
            "ws" => Ok(Model::Ws { k: 4, p: 0.1 }),
            "kreg" => Ok(Model::KReg { k: 3 }),
            "knn" => Ok(Model::Knn { k: 3 }),
            "assort" => Ok(Model::Assortative {
                er_p: nf.ln() / nf,
                rewire_p: 1.0,
                threshold: 0.8,
            }),
            other => Err(Error::Parse(format!("unknown graph model {other:?}"))),
        }
    }
}

/// A fully specified generation request: model, size, and seed.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: Model, n: usize, seed: u64) -> GenSpec {
        GenSpec { model, n, seed }
    }

    pub fn er(n: usize, p: f64, seed: u64) -> GenSpec {
        GenSpec::new(Model::Er { p }, n, seed)
    }

    pub fn ba(n: usize, m: usize, seed: u64) -> GenSpec {
        GenSpec::new(Model::Ba { m }, n, seed)
    }

    pub fn ws(n: usize, k: usize, p: f64, seed: u64) -> GenSpec {
        GenSpec::new(Model::Ws { k, p }, n, seed)
    }

    pub fn kreg(n: usize, k: usize, seed: u64) -> GenSpec {
        GenSpec::new(Model::KReg { k }, n, seed)
    }

    pub fn knn(n: usize, k: usize, seed: u64) -> GenSpec {
        GenSpec::new(Model::Knn { k }, n, seed)
    }

    pub fn assortative(n: usize, er_p: f64, rewire_p: f64, threshold: f64, seed: u64) -> GenSpec {
        GenSpec::new(
            Model::Assortative {
                er_p,
                rewire_p,
                threshold,
            },
            n,
            seed,
        )
    }

    /// Draws one graph, seeding a fresh stream from `self.seed`.
    pub fn generate(&self) -> Result<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        self.generate_with(&mut rng)
    }

    /// Draws one graph from an existing stream (used by rejection sampling).
    pub fn generate_with<R: Rng>(&self, rng: &mut R) -> Result<Graph> {
        match &self.model {
            Model::Er { p } => gen_er(self.n, *p, rng),
            Model::Ba { m } => gen_ba(self.n, *m, rng),
            Model::Ws { k, p } => gen_ws(self.n, *k, *p, rng),
            Model::KReg { k } => gen_kreg(self.n, *k, rng),
            Model::Knn { k } => gen_knn(self.n, *k, rng),
            Model::Assortative {
                er_p,
                rewire_p,
                threshold,
            } => gen_assortative(
                self.n,
                *er_p,
                *rewire_p,
                *threshold,
                DEFAULT_ASSORT_MAX_ITERS,
                rng,
            ),
        }
    }
}

/// Rejection-samples the model until the draw is connected, advancing the
/// seeded stream between tries.
pub fn sample_connected(spec: &GenSpec, max_tries: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    sample_connected_with(spec, max_tries, &mut rng)
}

pub fn sample_connected_with<R: Rng>(
    spec: &GenSpec,
    max_tries: usize,
    rng: &mut R,
) -> Result<Graph> {
    if max_tries == 0 {
        return Err(Error::InvalidParam("max_tries must be at least 1".into()));
    }
    for _ in 0..max_tries {
        let g = spec.generate_with(rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no connected {} sample in {} tries",
        spec.model.label(),
        max_tries
    )))
}

pub fn gen_er<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParam(format!(
            "edge probability must be in (0, 1], got {p}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

pub fn gen_ba<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if m < 1 || m >= n {
        return Err(Error::InvalidParam(format!(
            "preferential attachment needs 1 <= m < n, got m={m}, n={n}"
        )));
    }
    // Star seed on m+1 nodes, hub at node 0.
    let mut edges: Vec<(usize, usize)> = (1..=m).map(|v| (0, v)).collect();
    // One entry per unit of degree; uniform draws from this list are
    // degree-proportional.
    let mut weighted: Vec<usize> = Vec::with_capacity(2 * (m + m * n));
    weighted.extend(std::iter::repeat(0).take(m));
    weighted.extend(1..=m);

    for new_node in (m + 1)..n {
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let candidate = weighted[rng.random_range(0..weighted.len())];
            if !targets.contains(&candidate) {
                targets.push(candidate);
            }
        }
        for &t in &targets {
            edges.push((new_node, t));
            weighted.push(t);
        }
        weighted.extend(std::iter::repeat(new_node).take(m));
    }
    Graph::new(n, &edges)
}

pub fn gen_ws<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if k % 2 != 0 || k == 0 || k >= n {
        return Err(Error::InvalidParam(format!(
            "ring lattice needs even 0 < K < n, got K={k}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParam(format!(
            "rewiring probability must be in [0, 1], got {p}"
        )));
    }
    let mut edges = std::collections::BTreeSet::new();
    for offset in 1..=(k / 2) {
        for i in 0..n {
            edges.insert(ordered(i, (i + offset) % n));
        }
    }
    let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for &(u, v) in &edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for offset in 1..=(k / 2) {
        for i in 0..n {
            if rng.random::<f64>() >= p {
                continue;
            }
            let old = (i + offset) % n;
            // Candidates exclude i itself and every current neighbour
            // (including `old`), so no duplicate edges can arise.
            let candidates: Vec<usize> = (0..n)
                .filter(|&w| w != i && !adj[i].contains(&w))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            let new = candidates[rng.random_range(0..candidates.len())];
            edges.remove(&ordered(i, old));
            adj[i].remove(&old);
            adj[old].remove(&i);
            edges.insert(ordered(i, new));
            adj[i].insert(new);
            adj[new].insert(i);
        }
    }
    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::new(n, &edge_list)
}

pub fn gen_kreg<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<Graph> {
    if k >= n || n.checked_mul(k).map_or(true, |nk| nk % 2 != 0) {
        return Err(Error::InvalidParam(format!(
            "K-regular graph needs K < n and n*K even, got K={k}, n={n}"
        )));
    }
    if k == 0 {
        return Ok(Graph::new(n, &[])?);
    }
    const MAX_RESTARTS: usize = 10_000;
    for _ in 0..MAX_RESTARTS {
        if let Some(edges) = try_pairing(n, k, rng) {
            return Graph::new(n, &edges);
        }
    }
    Err(Error::GenerationFailed(format!(
        "pairing construction kept dead-ending for n={n}, K={k}"
    )))
}

/// One attempt of the pairing construction: shuffle the degree stubs, match
/// them greedily, and feed failed stubs back in. Returns `None` on a
/// dead-end (a round with no progress), which triggers a full restart.
fn try_pairing<R: Rng>(n: usize, k: usize, rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|u| std::iter::repeat(u).take(k)).collect();
    let mut edges = std::collections::BTreeSet::new();
    while !stubs.is_empty() {
        stubs.shuffle(rng);
        let mut leftover = Vec::new();
        let mut progress = false;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u != v && edges.insert(ordered(u, v)) {
                progress = true;
            } else {
                leftover.push(u);
                leftover.push(v);
            }
        }
        if !progress {
            return None;
        }
        stubs = leftover;
    }
    Some(edges.into_iter().collect())
}

pub fn gen_knn<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParam(format!(
            "nearest-neighbour graph needs 0 < K < n, got K={k}, n={n}"
        )));
    }
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect();
    knn_from_points(&points, k)
}

/// K-nearest-neighbour graph for explicit point coordinates: `u ~ v` when
/// either endpoint lists the other among its `k` nearest. Distance ties are
/// broken by node index.
pub fn knn_from_points(points: &[(f64, f64)], k: usize) -> Result<Graph> {
    let n = points.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidParam(format!(
            "nearest-neighbour graph needs 0 < K < n, got K={k}, n={n}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        let mut by_dist: Vec<(f64, usize)> = (0..n)
            .filter(|&v| v != u)
            .map(|v| {
                let dx = points[u].0 - points[v].0;
                let dy = points[u].1 - points[v].1;
                (dx * dx + dy * dy, v)
            })
            .collect();
        by_dist.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for &(_, v) in by_dist.iter().take(k) {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn gen_assortative<R: Rng>(
    n: usize,
    er_p: f64,
    rewire_p: f64,
    threshold: f64,
    max_iters: usize,
    rng: &mut R,
) -> Result<Graph> {
    if !(0.0..=1.0).contains(&rewire_p) {
        return Err(Error::InvalidParam(format!(
            "rewire probability must be in [0, 1], got {rewire_p}"
        )));
    }
    let mut base = None;
    for _ in 0..BASE_MAX_TRIES {
        let g = gen_er(n, er_p, rng)?;
        if g.is_connected() {
            base = Some(g);
            break;
        }
    }
    let g = base.ok_or_else(|| {
        Error::GenerationFailed(format!(
            "no connected base sample in {BASE_MAX_TRIES} tries"
        ))
    })?;
    xbs_rewire(&g, rewire_p, threshold, max_iters, rng)
}

/// Degree-preserving rewiring loop that raises endpoint-degree correlation:
/// repeatedly pick two disjoint edges, delete both, reconnect the two
/// highest-degree and the two lowest-degree of the four nodes. Iterations
/// that would disconnect the graph or duplicate an edge are discarded.
pub fn xbs_rewire<R: Rng>(
    g: &Graph,
    rewire_p: f64,
    threshold: f64,
    max_iters: usize,
    rng: &mut R,
) -> Result<Graph> {
    let n = g.node_count();
    let degrees = g.degrees();
    if degrees.iter().all(|&d| d == degrees[0]) {
        return Err(Error::GenerationFailed(
            "degree sequence has zero variance; endpoint-degree correlation is undefined".into(),
        ));
    }
    let mut current = g.clone();
    let mut correlation = degree_correlation(&current)
        .ok_or_else(|| Error::GenerationFailed("degree correlation undefined".into()))?;
    for _ in 0..max_iters {
        if correlation >= threshold {
            return Ok(current);
        }
        let edges: Vec<(usize, usize)> = current.edges().collect();
        let (u, v) = edges[rng.random_range(0..edges.len())];
        let (a, b) = edges[rng.random_range(0..edges.len())];
        if u == a || u == b || v == a || v == b {
            continue;
        }
        let assortative_step = rewire_p >= 1.0 || rng.random::<f64>() < rewire_p;
        let (hi, lo) = if assortative_step {
            let mut nodes = [u, v, a, b];
            nodes.sort_by_key(|&x| (std::cmp::Reverse(current.degree(x)), x));
            (ordered(nodes[0], nodes[1]), ordered(nodes[2], nodes[3]))
        } else {
            // Random step: one of the two non-identity pairings.
            if rng.random::<bool>() {
                (ordered(u, a), ordered(v, b))
            } else {
                (ordered(u, b), ordered(v, a))
            }
        };
        // Skip degenerate reconnections: re-adding one of the deleted pair is
        // fine, but colliding with an untouched edge is not.
        let survives = |e: (usize, usize)| e != ordered(u, v) && e != ordered(a, b);
        if (survives(hi) && current.has_edge(hi.0, hi.1))
            || (survives(lo) && current.has_edge(lo.0, lo.1))
            || hi == lo
        {
            continue;
        }
        let mut edge_set: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&e| e != ordered(u, v) && e != ordered(a, b))
            .collect();
        edge_set.push(hi);
        edge_set.push(lo);
        let candidate = Graph::new(n, &edge_set)?;
        if !candidate.is_connected() {
            continue;
        }
        correlation = match degree_correlation(&candidate) {
            Some(c) => c,
            None => continue,
        };
        current = candidate;
    }
    if correlation >= threshold {
        return Ok(current);
    }
    Err(Error::GenerationFailed(format!(
        "assortative rewiring hit the {max_iters}-iteration cap at correlation {correlation:.4} (target {threshold})"
    )))
}

/// Pearson correlation of endpoint degrees over both orientations of every
/// edge. `None` when the degree sequence over incidences has zero variance.
pub fn degree_correlation(g: &Graph) -> Option<f64> {
    let mut xs = Vec::with_capacity(2 * g.edge_count());
    let mut ys = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
        xs.push(du);
        ys.push(dv);
        xs.push(dv);
        ys.push(du);
    }
    pearson(&xs, &ys)
}

/// Sample Pearson correlation; `None` on empty input or zero variance.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n == 0 {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        cov += (x - mx) * (y - my);
        vx += (x - mx) * (x - mx);
        vy += (y - my) * (y - my);
    }
    if vx <= 0.0 || vy <= 0.0 {
        return None;
    }
    Some(cov / (vx * vy).sqrt())
}

/// Degree and distance summary for one (connected) graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub mean_degree: f64,
    pub degree_std: f64,
    pub avg_shortest_path: f64,
    pub diameter: usize,
    pub degree_corr: Option<f64>,
}

/// Computes [`GraphStats`]. Path metrics need a connected graph.
pub fn summary_stats(g: &Graph) -> Result<GraphStats> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.node_count();
    let mean_degree = if n == 0 {
        0.0
    } else {
        2.0 * g.edge_count() as f64 / n as f64
    };
    let variance = g
        .degrees()
        .iter()
        .map(|&d| {
            let diff = d as f64 - mean_degree;
            diff * diff
        })
        .sum::<f64>()
        / n.max(1) as f64;
    let degree_std = variance.sqrt();

    let mut total = 0u64;
    let mut count = 0u64;
    let mut diameter = 0usize;
    for source in 0..n {
        let dist = bfs_distances(g, source);
        for (v, d) in dist.iter().enumerate() {
            if v != source {
                let d = d.expect("connected graph");
                total += d as u64;
                count += 1;
                diameter = diameter.max(d);
            }
        }
    }
    let avg_shortest_path = if count == 0 {
        0.0
    } else {
        total as f64 / count as f64
    };
    Ok(GraphStats {
        mean_degree,
        degree_std,
        avg_shortest_path,
        diameter,
        degree_corr: degree_correlation(g),
    })
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[source] = Some(0);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in g.neighbourhood(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_determinism_and_range() {
        let spec = GenSpec::er(30, 0.2, 42);
        let a = spec.generate().unwrap();
        let b = spec.generate().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.node_count(), 30);
    }

    #[test]
    fn er_p_one_is_complete() {
        let g = GenSpec::er(4, 1.0, 0).generate().unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn er_vanishing_p_is_empty() {
        let g = GenSpec::er(10, 1e-9, 123).generate().unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn er_rejects_bad_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(gen_er(5, 0.0, &mut rng).is_err());
        assert!(gen_er(5, 1.5, &mut rng).is_err());
    }

    #[test]
    fn ba_edge_count_and_connectivity() {
        for seed in 0..10 {
            let g = GenSpec::ba(50, 3, seed).generate().unwrap();
            assert_eq!(g.edge_count(), 3 + 3 * (50 - 3 - 1));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn ba_star_base_case() {
        let g = GenSpec::ba(4, 3, 1).generate().unwrap();
        assert_eq!(g.degrees(), &[3, 1, 1, 1]);
    }

    #[test]
    fn ba_m1_is_tree() {
        let g = GenSpec::ba(5, 1, 7).generate().unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn ws_no_rewiring_is_ring_lattice() {
        let g = GenSpec::ws(10, 4, 0.0, 5).generate().unwrap();
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(0, 8));
    }

    #[test]
    fn ws_edge_count_preserved_under_full_rewiring() {
        for seed in 0..20 {
            let g = GenSpec::ws(10, 4, 1.0, seed).generate().unwrap();
            assert_eq!(g.edge_count(), 20);
        }
    }

    #[test]
    fn kreg_exact_degrees() {
        for seed in 0..10 {
            let g = GenSpec::kreg(20, 3, seed).generate().unwrap();
            assert!(g.degrees().iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn kreg_forced_k4() {
        let g = GenSpec::kreg(4, 3, 9).generate().unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn kreg_odd_product_rejected() {
        assert!(matches!(
            GenSpec::kreg(3, 3, 0).generate(),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn knn_two_nodes_single_edge() {
        let g = GenSpec::knn(2, 1, 3).generate().unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn knn_union_of_directions() {
        // Middle point is nearest to the left point; the right point's
        // nearest is the middle, giving edges {0,1} and {1,2}.
        let points = [(0.0, 0.0), (0.4, 0.0), (1.0, 0.0)];
        let g = knn_from_points(&points, 1).unwrap();
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn knn_degree_between_k_and_2k() {
        let g = GenSpec::knn(60, 3, 11).generate().unwrap();
        for &d in g.degrees() {
            assert!((3..=60).contains(&d));
        }
        let mean = 2.0 * g.edge_count() as f64 / 60.0;
        assert!(mean >= 3.0 && mean <= 6.0);
    }

    #[test]
    fn assortative_reaches_threshold_and_preserves_degrees() {
        let n = 60;
        let p = (n as f64).ln() / n as f64;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut base = None;
        for _ in 0..200 {
            let g = gen_er(n, p, &mut rng).unwrap();
            if g.is_connected() {
                base = Some(g);
                break;
            }
        }
        let base = base.unwrap();
        let rewired = xbs_rewire(&base, 1.0, 0.8, DEFAULT_ASSORT_MAX_ITERS, &mut rng).unwrap();
        let mut before = base.degrees().to_vec();
        let mut after = rewired.degrees().to_vec();
        before.sort_unstable();
        after.sort_unstable();
        assert_eq!(before, after);
        assert_eq!(base.degrees(), rewired.degrees());
        assert!(degree_correlation(&rewired).unwrap() >= 0.8);
        assert!(rewired.is_connected());
    }

    #[test]
    fn assortative_rejects_regular_base() {
        let ring = GenSpec::ws(10, 4, 0.0, 0).generate().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(
            xbs_rewire(&ring, 1.0, 0.8, 100, &mut rng),
            Err(Error::GenerationFailed(_))
        ));
    }

    #[test]
    fn xbs_single_step_reconnects_by_degree() {
        // Degrees: 0 -> 3, 1 -> 2, 2 -> 2, 3 -> 1. Forcing the step to pick
        // the two disjoint edges (0,3)? none exist disjointly... use a
        // 6-node fixture with two disjoint edges of known degrees instead.
        //
        // Path 0-1-2-3 plus pendant 4-5: degrees (1,2,2,1,1,1).
        // Sampling edges (1,2) and (4,5) must reconnect {1,2} (degrees 2,2)
        // and {4,5} (degrees 1,1), which re-creates both edges: a no-op.
        // Exhaustively verify the pairing rule on the fixture instead.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let mut nodes = [1usize, 2, 4, 5];
        nodes.sort_by_key(|&x| (std::cmp::Reverse(g.degree(x)), x));
        assert_eq!(ordered(nodes[0], nodes[1]), (1, 2));
        assert_eq!(ordered(nodes[2], nodes[3]), (4, 5));

        // Mixed degrees: edges (0,1) [degrees 1,2] and (2,3) [degrees 2,1]
        // in a path 0-1-2-3 are not disjoint; use 0-1 2-3 with a hub.
        let h = Graph::new(5, &[(0, 1), (1, 2), (3, 4), (1, 4)]).unwrap();
        // degrees: 0:1, 1:3, 2:1, 3:1, 4:2. Disjoint edges (0,1) and (3,4):
        // highest two of {0,1,3,4} are 1 (deg 3) and 4 (deg 2).
        let mut quad = [0usize, 1, 3, 4];
        quad.sort_by_key(|&x| (std::cmp::Reverse(h.degree(x)), x));
        assert_eq!(ordered(quad[0], quad[1]), (1, 4));
        assert_eq!(ordered(quad[2], quad[3]), (0, 3));
    }

    #[test]
    fn sample_connected_deterministic_and_bounded() {
        let spec = GenSpec::kreg(30, 3, 4);
        let a = sample_connected(&spec, 100).unwrap();
        let b = sample_connected(&spec, 100).unwrap();
        assert_eq!(a, b);

        let sparse = GenSpec::er(40, 1e-4, 2);
        assert!(matches!(
            sample_connected(&sparse, 5),
            Err(Error::GenerationFailed(_))
        ));
    }

    #[test]
    fn kreg_connected_acceptance_rate() {
        let mut accepted_first_try = 0;
        for seed in 0..100 {
            let g = GenSpec::kreg(50, 3, seed).generate().unwrap();
            if g.is_connected() {
                accepted_first_try += 1;
            }
        }
        assert!(accepted_first_try >= 90, "only {accepted_first_try}/100 connected");
    }

    #[test]
    fn stats_on_c6() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let s = summary_stats(&g).unwrap();
        assert_eq!(s.mean_degree, 2.0);
        assert_eq!(s.degree_std, 0.0);
        assert_eq!(s.diameter, 3);
        // Each node sees distances 1, 1, 2, 2, 3.
        assert!((s.avg_shortest_path - 1.8).abs() < 1e-15);
        assert!(s.degree_corr.is_none());
    }

    #[test]
    fn stats_star_degree_correlation() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = summary_stats(&star).unwrap();
        assert!((s.degree_corr.unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn stats_require_connectivity() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(summary_stats(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn mean_degree_identity() {
        for seed in 0..5 {
            let g = GenSpec::er(30, 0.2, seed).generate().unwrap();
            if !g.is_connected() {
                continue;
            }
            let s = summary_stats(&g).unwrap();
            assert_eq!(s.mean_degree, 2.0 * g.edge_count() as f64 / 30.0);
        }
    }
}
