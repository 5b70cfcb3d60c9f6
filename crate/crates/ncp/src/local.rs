//! Seeded spectral community extraction: approximate personalized PageRank
//! diffusion (residual push) followed by degree-normalized sweep-cut
//! rounding. Every emitted candidate is internally connected; sweep
//! prefixes that are momentarily disconnected are skipped, not repaired.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Cluster, Graph};
use crate::profile::{Generator, ScoredCluster};

/// Approximate personalized PageRank state after the push loop.
#[derive(Debug, Clone)]
pub struct DiffusionVector {
    /// Settled mass p(u), positive entries only.
    pub mass: HashMap<u32, f64>,
    /// Residual mass r(u), positive entries only.
    pub residual: HashMap<u32, f64>,
    pub alpha: f64,
    pub epsilon: f64,
    pub seed_node: u32,
}

impl DiffusionVector {
    /// Total mass in p and r together; stays 1 throughout the push loop.
    pub fn conservation(&self) -> f64 {
        self.mass.values().sum::<f64>() + self.residual.values().sum::<f64>()
    }

    /// Support of p sorted by node id.
    pub fn support(&self) -> Vec<(u32, f64)> {
        let mut out: Vec<(u32, f64)> = self
            .mass
            .iter()
            .filter(|&(_, &p)| p > 0.0)
            .map(|(&u, &p)| (u, p))
            .collect();
        out.sort_unstable_by_key(|&(u, _)| u);
        out
    }
}

/// Run the residual push loop until `r(u) < epsilon * d(u)` for all `u`.
/// FIFO work-queue discipline makes runs reproducible.
pub fn ppr_push(g: &Graph, seed_node: usize, alpha: f64, epsilon: f64) -> Result<DiffusionVector> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be in (0,1), got {alpha}"
        )));
    }
    if epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if seed_node >= g.node_count() {
        return Err(Error::NodeOutOfRange(seed_node));
    }
    let mut mass: HashMap<u32, f64> = HashMap::new();
    let mut residual: HashMap<u32, f64> = HashMap::new();
    residual.insert(seed_node as u32, 1.0);

    let needs_push = |g: &Graph, u: u32, r: f64| {
        let d = g.degree(u as usize);
        d > 0 && r >= epsilon * d as f64
    };

    let mut queue = VecDeque::new();
    let mut queued: HashMap<u32, bool> = HashMap::new();
    if g.degree(seed_node) == 0 {
        // isolated seed: all mass settles immediately
        mass.insert(seed_node as u32, 1.0);
        residual.clear();
    } else if needs_push(g, seed_node as u32, 1.0) {
        queue.push_back(seed_node as u32);
        queued.insert(seed_node as u32, true);
    }

    while let Some(u) = queue.pop_front() {
        queued.insert(u, false);
        let r_u = residual.get(&u).copied().unwrap_or(0.0);
        let d_u = g.degree(u as usize);
        if d_u == 0 || r_u < epsilon * d_u as f64 {
            continue;
        }
        *mass.entry(u).or_insert(0.0) += alpha * r_u;
        let stay = (1.0 - alpha) * r_u / 2.0;
        residual.insert(u, stay);
        let share = stay / d_u as f64;
        for &v in g.neighbors(u as usize) {
            let rv = residual.entry(v).or_insert(0.0);
            *rv += share;
            if needs_push(g, v, *rv) && !queued.get(&v).copied().unwrap_or(false) {
                queue.push_back(v);
                queued.insert(v, true);
            }
        }
        if needs_push(g, u, stay) && !queued.get(&u).copied().unwrap_or(false) {
            queue.push_back(u);
            queued.insert(u, true);
        }
    }

    residual.retain(|_, r| *r > 0.0);
    mass.retain(|_, p| *p > 0.0);
    Ok(DiffusionVector {
        mass,
        residual,
        alpha,
        epsilon,
        seed_node: seed_node as u32,
    })
}

/// One recorded sweep prefix.
#[derive(Debug, Clone)]
pub struct SweepPrefix {
    pub size: usize,
    pub cluster: Cluster,
    pub conductance: f64,
    pub connected: bool,
}

/// Result of sweeping a diffusion vector: nodes ranked by `p(u)/d(u)`
/// descending (ties by smaller id) with per-prefix conductance.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub ordering: Vec<u32>,
    pub prefixes: Vec<SweepPrefix>,
    /// Index into `prefixes` of the minimum-conductance prefix.
    pub best_index: usize,
}

/// Incremental prefix scan over an arbitrary node ordering: per-prefix
/// stats in O(vol), connectivity via union-find. The full-graph prefix is
/// never recorded. Nodes in `ordering` must be distinct.
pub(crate) fn scan_prefixes(g: &Graph, ordering: &[u32]) -> Vec<SweepPrefix> {
    let total_volume = g.total_volume();
    let mut in_prefix = vec![false; g.node_count()];
    let mut dsu = Dsu::new(g.node_count());
    let mut components = 0usize;
    let mut members: Vec<u32> = Vec::with_capacity(ordering.len());
    let mut volume = 0usize;
    let mut boundary = 0usize;
    let mut prefixes = Vec::new();

    for &u in ordering {
        let internal_new = g
            .neighbors(u as usize)
            .iter()
            .filter(|&&v| in_prefix[v as usize])
            .count();
        in_prefix[u as usize] = true;
        members.push(u);
        volume += g.degree(u as usize);
        boundary = boundary + g.degree(u as usize) - 2 * internal_new;
        components += 1;
        for &v in g.neighbors(u as usize) {
            if in_prefix[v as usize] && dsu.union(u as usize, v as usize) {
                components -= 1;
            }
        }
        let k = members.len();
        if k == g.node_count() {
            break; // whole graph is not a candidate
        }
        let internal_edges = (volume - boundary) / 2;
        let conductance = boundary as f64 / volume.min(total_volume - volume) as f64;
        prefixes.push(SweepPrefix {
            size: k,
            cluster: Cluster::from_parts(members.clone(), internal_edges, boundary, volume),
            conductance,
            connected: components == 1,
        });
    }
    prefixes
}

pub fn sweep(g: &Graph, dv: &DiffusionVector) -> Result<SweepResult> {
    let support = dv.support();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut ordering: Vec<u32> = support.iter().map(|&(u, _)| u).collect();
    ordering.sort_by(|&a, &b| {
        let ra = dv.mass[&a] / g.degree(a as usize).max(1) as f64;
        let rb = dv.mass[&b] / g.degree(b as usize).max(1) as f64;
        rb.partial_cmp(&ra).unwrap().then(a.cmp(&b))
    });

    let prefixes = scan_prefixes(g, &ordering);
    if prefixes.is_empty() {
        return Err(Error::EmptySupport);
    }
    let best_index = prefixes
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.conductance.partial_cmp(&b.conductance).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    Ok(SweepResult {
        ordering,
        prefixes,
        best_index,
    })
}

/// Parameter grids for [`local_cluster`].
#[derive(Debug, Clone)]
pub struct LocalParams {
    pub alphas: Vec<f64>,
    pub epsilons: Vec<f64>,
}

impl LocalParams {
    /// Alpha grid {0.01, 0.05, 0.1, 0.2, 0.5}; epsilons chosen so push
    /// supports target volumes 10, 100, ... up to vol(G)/2
    /// (`epsilon ~ 1/(10 * target_volume)`).
    pub fn default_for(g: &Graph) -> LocalParams {
        let mut epsilons = Vec::new();
        let mut target = 10usize;
        loop {
            epsilons.push(1.0 / (10.0 * target as f64));
            if target >= g.total_volume() / 2 {
                break;
            }
            target = target.saturating_mul(10);
        }
        LocalParams {
            alphas: vec![0.01, 0.05, 0.1, 0.2, 0.5],
            epsilons,
        }
    }
}

/// Run push + sweep over the parameter grid and emit every connected
/// prefix as a candidate.
pub fn local_cluster(g: &Graph, seed_node: usize, params: &LocalParams) -> Result<Vec<ScoredCluster>> {
    let mut out = Vec::new();
    for &alpha in &params.alphas {
        for &epsilon in &params.epsilons {
            let dv = ppr_push(g, seed_node, alpha, epsilon)?;
            let tag = format!("seed={seed_node} alpha={alpha} eps={epsilon:e}");
            if dv.mass.is_empty() {
                // zero pushes: the only candidate this run supports is the seed
                if g.node_count() > 1 {
                    let cluster = g.cluster_stats(&[seed_node as u32])?;
                    out.push(ScoredCluster::with_connectivity(
                        g,
                        cluster,
                        Generator::LocalSpectral,
                        seed_node as u64,
                        tag,
                        true,
                    ));
                } else {
                    let cluster = Cluster::from_parts(vec![seed_node as u32], 0, 0, 0);
                    out.push(ScoredCluster::with_connectivity(
                        g,
                        cluster,
                        Generator::LocalSpectral,
                        seed_node as u64,
                        tag,
                        true,
                    ));
                }
                continue;
            }
            if g.node_count() == 1 {
                // no nontrivial prefix exists; the seed itself is the candidate
                let cluster = Cluster::from_parts(vec![seed_node as u32], 0, 0, 0);
                out.push(ScoredCluster::with_connectivity(
                    g,
                    cluster,
                    Generator::LocalSpectral,
                    seed_node as u64,
                    tag,
                    true,
                ));
                continue;
            }
            let swept = sweep(g, &dv)?;
            for prefix in swept.prefixes {
                if prefix.connected {
                    out.push(ScoredCluster::with_connectivity(
                        g,
                        prefix.cluster,
                        Generator::LocalSpectral,
                        seed_node as u64,
                        tag.clone(),
                        true,
                    ));
                }
            }
        }
    }
    Ok(out)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two sets were merged (were previously distinct).
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
