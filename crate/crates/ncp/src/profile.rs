//! Candidate-cluster bookkeeping and network community profiles.
//!
//! A profile is the per-size lower envelope of a candidate collection:
//! `Phi(k) = min over stored candidates of size k` (maximum for the
//! higher-is-better kinds). The exact brute-force oracle lives here too,
//! together with the structural-bias metrics (internal conductance,
//! average shortest path) used to compare partitioner families.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::flow;
use crate::graph::{Cluster, Graph};
use crate::local::{self, LocalParams};
use crate::scoring::{self, Orientation, ScoreKind, ScoreValue};

/// Which algorithm family produced a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Generator {
    LocalSpectral,
    Mqi,
    GlobalSpectral,
    Dendrogram,
    Oracle,
    SplitChild,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Generator::LocalSpectral => "local-spectral",
            Generator::Mqi => "mqi",
            Generator::GlobalSpectral => "global-spectral",
            Generator::Dendrogram => "dendrogram",
            Generator::Oracle => "oracle",
            Generator::SplitChild => "split-child",
        };
        f.write_str(name)
    }
}

/// A candidate cluster with provenance and cached scores.
#[derive(Debug, Clone)]
pub struct ScoredCluster {
    pub cluster: Cluster,
    pub generator: Generator,
    pub seed: u64,
    pub params: String,
    pub connected: bool,
    conductance: Option<f64>,
    scores: Vec<ScoreValue>,
}

impl ScoredCluster {
    /// Build a candidate, checking connectivity by BFS.
    pub fn new(
        g: &Graph,
        cluster: Cluster,
        generator: Generator,
        seed: u64,
        params: String,
    ) -> ScoredCluster {
        let connected = g.is_connected_subset(cluster.members());
        ScoredCluster::with_connectivity(g, cluster, generator, seed, params, connected)
    }

    /// Build a candidate whose connectivity the caller already knows
    /// (e.g. maintained incrementally during a sweep).
    pub fn with_connectivity(
        g: &Graph,
        cluster: Cluster,
        generator: Generator,
        seed: u64,
        params: String,
        connected: bool,
    ) -> ScoredCluster {
        debug_assert_eq!(connected, g.is_connected_subset(cluster.members()));
        let conductance = scoring::score(g, &cluster, ScoreKind::Conductance)
            .ok()
            .map(|v| v.value);
        ScoredCluster {
            cluster,
            generator,
            seed,
            params,
            connected,
            conductance,
            scores: Vec::new(),
        }
    }

    /// External conductance, if the cluster is non-degenerate.
    pub fn conductance(&self) -> Option<f64> {
        self.conductance
    }

    /// Cached value under `kind`, computing and caching on first use.
    pub fn score(&mut self, g: &Graph, kind: ScoreKind) -> Option<f64> {
        if let Some(v) = self.scores.iter().find(|v| v.kind == kind) {
            return Some(v.value);
        }
        if kind == ScoreKind::Conductance {
            return self.conductance;
        }
        let value = scoring::score(g, &self.cluster, kind).ok()?;
        self.scores.push(value);
        Some(value.value)
    }

    pub fn cached_scores(&self) -> &[ScoreValue] {
        &self.scores
    }
}

/// One point of a profile: the envelope value and the candidate that
/// witnesses it.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct EnvelopePoint {
    pub value: f64,
    pub witness: usize,
}

/// Size-resolved best-score envelope for one score kind. Only realized
/// sizes (1 ..= floor(n/2)) appear.
#[derive(Debug, Clone, PartialEq)]
pub struct NcpProfile {
    pub kind: ScoreKind,
    envelope: BTreeMap<usize, EnvelopePoint>,
}

impl NcpProfile {
    pub fn empty(kind: ScoreKind) -> NcpProfile {
        NcpProfile {
            kind,
            envelope: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.envelope.is_empty()
    }

    pub fn value_at(&self, k: usize) -> Option<f64> {
        self.envelope.get(&k).map(|p| p.value)
    }

    pub fn witness_at(&self, k: usize) -> Option<usize> {
        self.envelope.get(&k).map(|p| p.witness)
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, &EnvelopePoint)> {
        self.envelope.iter().map(|(&k, p)| (k, p))
    }

    /// True when `candidate` beats `current` under this profile's
    /// orientation (ties broken by smaller witness id).
    fn improves(&self, candidate: (f64, usize), current: (f64, usize)) -> bool {
        let better = match self.kind.orientation() {
            Orientation::HigherIsBetter => candidate.0 > current.0,
            _ => candidate.0 < current.0,
        };
        better || (candidate.0 == current.0 && candidate.1 < current.1)
    }

    fn offer(&mut self, k: usize, value: f64, witness: usize) {
        match self.envelope.get(&k) {
            Some(&p) if !self.improves((value, witness), (p.value, p.witness)) => {}
            _ => {
                self.envelope.insert(k, EnvelopePoint { value, witness });
            }
        }
    }

    /// Pointwise best of two profiles over the same candidate id space.
    pub fn merge(&self, other: &NcpProfile) -> NcpProfile {
        assert_eq!(self.kind, other.kind);
        let mut out = self.clone();
        for (k, p) in other.points() {
            out.offer(k, p.value, p.witness);
        }
        out
    }

    /// Best envelope value over all sizes.
    pub fn best(&self) -> Option<(usize, f64)> {
        let mut iter = self.envelope.iter();
        let first = iter.next()?;
        let mut best = (*first.0, first.1.value);
        for (&k, p) in iter {
            let better = match self.kind.orientation() {
                Orientation::HigherIsBetter => p.value > best.1,
                _ => p.value < best.1,
            };
            if better {
                best = (k, p.value);
            }
        }
        Some(best)
    }
}

/// Build the envelope for `kind` from `candidates`. Candidate sizes above
/// `floor(n/2)` map through the complement for boundary-symmetric kinds
/// and are dropped otherwise.
pub fn build_ncp(g: &Graph, candidates: &mut [ScoredCluster], kind: ScoreKind) -> NcpProfile {
    let mut profile = NcpProfile::empty(kind);
    let half = g.node_count() / 2;
    for (id, cand) in candidates.iter_mut().enumerate() {
        let k = cand.cluster.node_count();
        let Some(value) = cand.score(g, kind) else {
            continue;
        };
        if k <= half {
            profile.offer(k, value, id);
        } else if kind.boundary_symmetric() {
            let comp = g.node_count() - k;
            if comp >= 1 && comp <= half {
                profile.offer(comp, value, id);
            }
        }
    }
    profile
}

/// Replace internally disconnected candidates by one child per connected
/// component, rescored from scratch.
pub fn split_disconnected(g: &Graph, candidates: Vec<ScoredCluster>) -> Vec<ScoredCluster> {
    let mut out = Vec::with_capacity(candidates.len());
    for cand in candidates {
        if cand.connected {
            out.push(cand);
            continue;
        }
        let components = g.subset_components(cand.cluster.members());
        for comp in components {
            let cluster = g.cluster_stats(&comp).expect("members are valid");
            out.push(ScoredCluster::with_connectivity(
                g,
                cluster,
                Generator::SplitChild,
                cand.seed,
                format!("{} <- {}", cand.params, cand.generator),
                true,
            ));
        }
    }
    out
}

pub const EXACT_NCP_DEFAULT_MAX_N: usize = 18;

/// Exact profile by enumeration of all nontrivial subsets (optionally only
/// the connected ones). Returns the profile together with the witness
/// clusters it references.
pub fn exact_ncp(
    g: &Graph,
    kind: ScoreKind,
    max_n: usize,
    connected_only: bool,
) -> Result<(NcpProfile, Vec<ScoredCluster>)> {
    let n = g.node_count();
    if n > max_n || n > 30 {
        return Err(Error::TooLargeForExact { n, max_n: max_n.min(30) });
    }
    let half = n / 2;
    let mut best: BTreeMap<usize, (f64, u32)> = BTreeMap::new();
    let orientation = kind.orientation();
    for mask in 1u32..(1u32 << n) - 1 {
        let k = mask.count_ones() as usize;
        if k > half {
            continue;
        }
        let members: Vec<u32> = (0..n as u32).filter(|&u| mask >> u & 1 == 1).collect();
        if connected_only && !g.is_connected_subset(&members) {
            continue;
        }
        let cluster = g.cluster_stats(&members)?;
        let Ok(value) = scoring::score(g, &cluster, kind) else {
            continue;
        };
        let value = value.value;
        let better = match best.get(&k) {
            None => true,
            Some(&(cur, _)) => match orientation {
                Orientation::HigherIsBetter => value > cur,
                _ => value < cur,
            },
        };
        if better {
            best.insert(k, (value, mask));
        }
    }
    let mut profile = NcpProfile::empty(kind);
    let mut witnesses = Vec::new();
    for (k, (value, mask)) in best {
        let members: Vec<u32> = (0..n as u32).filter(|&u| mask >> u & 1 == 1).collect();
        let cluster = g.cluster_stats(&members)?;
        let id = witnesses.len();
        witnesses.push(ScoredCluster::new(
            g,
            cluster,
            Generator::Oracle,
            0,
            format!("exact k={k}"),
        ));
        profile.offer(k, value, id);
    }
    Ok((profile, witnesses))
}

/// Exact minimum conductance over all subsets, found by branch-and-bound
/// over connected sets (the unrestricted minimum is always attained by a
/// connected set under the min-volume denominator). Works on graphs up to
/// 64 nodes given a reasonable `incumbent` upper bound to prune with.
pub fn pruned_min_conductance(g: &Graph, incumbent: f64) -> Result<(f64, Vec<u32>)> {
    let n = g.node_count();
    if n > 64 {
        return Err(Error::TooLargeForExact { n, max_n: 64 });
    }
    if n < 2 {
        return Err(Error::ClusterTooSmall { need: 2, got: n });
    }
    let adj: Vec<u64> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(0u64, |acc, &v| acc | 1u64 << v)
        })
        .collect();
    let deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let total = g.total_volume();
    let m = g.edge_count();

    struct Search<'a> {
        adj: &'a [u64],
        deg: &'a [usize],
        total: usize,
        m: usize,
        best: f64,
        best_mask: u64,
    }

    impl Search<'_> {
        #[allow(clippy::too_many_arguments)]
        fn rec(
            &mut self,
            s_mask: u64,
            x_mask: u64,
            ext: u64,
            vol_s: usize,
            internal2: usize, // twice the internal edge count
            cut_sx: usize,
        ) {
            // evaluate the current connected set
            let c_s = vol_s - internal2;
            let denom = vol_s.min(self.total - vol_s);
            if denom > 0 {
                let phi = c_s as f64 / denom as f64;
                if phi < self.best {
                    self.best = phi;
                    self.best_mask = s_mask;
                }
            }
            if ext == 0 {
                return;
            }
            // any completion keeps at least the committed S-X boundary
            let free_vol: usize = {
                let mut fv = 0;
                let mut rest = ext;
                // ext underestimates free volume, but every future member
                // must pass through ext at some point; for the bound we use
                // all nodes outside S and X
                let all = !(s_mask | x_mask);
                rest |= all;
                let mut v = rest & all;
                while v != 0 {
                    let u = v.trailing_zeros() as usize;
                    if u >= self.deg.len() {
                        break;
                    }
                    fv += self.deg[u];
                    v &= v - 1;
                }
                fv
            };
            let denom_cap = (vol_s + free_vol).min(self.m);
            if denom_cap == 0 || cut_sx as f64 / denom_cap as f64 >= self.best {
                return;
            }
            let u = ext.trailing_zeros() as usize;
            let u_bit = 1u64 << u;
            // include u
            let new_internal = (self.adj[u] & s_mask).count_ones() as usize;
            let new_cut_edges = (self.adj[u] & x_mask).count_ones() as usize;
            let new_ext = (ext | self.adj[u]) & !(s_mask | u_bit) & !x_mask;
            self.rec(
                s_mask | u_bit,
                x_mask,
                new_ext,
                vol_s + self.deg[u],
                internal2 + 2 * new_internal,
                cut_sx + new_cut_edges,
            );
            // exclude u
            let lost = (self.adj[u] & s_mask).count_ones() as usize;
            self.rec(
                s_mask,
                x_mask | u_bit,
                ext & !u_bit,
                vol_s,
                internal2,
                cut_sx + lost,
            );
        }
    }

    let mut search = Search {
        adj: &adj,
        deg: &deg,
        total,
        m,
        best: incumbent,
        best_mask: 0,
    };
    for root in 0..n {
        // roots processed in increasing order; smaller ids are excluded
        let banned: u64 = (1u64 << root) - 1;
        let root_bit = 1u64 << root;
        let ext = adj[root] & !banned;
        let cut_banned = (adj[root] & banned).count_ones() as usize;
        search.rec(root_bit, banned, ext, deg[root], 0, cut_banned);
    }
    if search.best_mask == 0 {
        return Err(Error::InvalidParameter(
            "incumbent below true minimum conductance".into(),
        ));
    }
    let members: Vec<u32> = (0..n as u32)
        .filter(|&u| search.best_mask >> u & 1 == 1)
        .collect();
    Ok((search.best, members))
}

/// Budget for [`internal_conductance`].
#[derive(Debug, Clone)]
pub struct InternalBudget {
    /// Use exhaustive enumeration up to this size.
    pub exact_limit: usize,
    /// Parameter grid for the local-spectral pass on larger clusters.
    pub local_params: Option<LocalParams>,
    pub seed: u64,
}

impl Default for InternalBudget {
    fn default() -> Self {
        InternalBudget {
            exact_limit: EXACT_NCP_DEFAULT_MAX_N,
            local_params: None,
            seed: 0,
        }
    }
}

/// Best conductance of a cut inside the cluster: exact for small clusters,
/// otherwise an upper bound from local-spectral (all seeds) plus one
/// bisect + quotient improvement inside the induced subgraph.
pub fn internal_conductance(g: &Graph, s: &Cluster, budget: &InternalBudget) -> Result<f64> {
    if s.node_count() < 2 {
        return Err(Error::ClusterTooSmall {
            need: 2,
            got: s.node_count(),
        });
    }
    let sub = g.induced_subgraph(s.members())?;
    if !sub.is_connected() {
        return Err(Error::DisconnectedSubgraph);
    }
    if sub.node_count() <= budget.exact_limit {
        let (profile, _) = exact_ncp(&sub, ScoreKind::Conductance, budget.exact_limit, false)?;
        return Ok(profile.best().map(|(_, v)| v).unwrap_or(1.0));
    }
    let mut best = f64::INFINITY;
    let params = budget
        .local_params
        .clone()
        .unwrap_or_else(|| LocalParams::default_for(&sub));
    for seed_node in 0..sub.node_count() {
        for cand in local::local_cluster(&sub, seed_node, &params)? {
            if let Some(phi) = cand.conductance() {
                best = best.min(phi);
            }
        }
    }
    if let Ok(bisection) = flow::bisect(&sub, budget.seed, 0.02) {
        let small = if bisection.side_a.volume() <= bisection.side_b.volume() {
            &bisection.side_a
        } else {
            &bisection.side_b
        };
        if small.node_count() > 0 {
            let improved = flow::mqi(&sub, small)?;
            let phi = scoring::score(&sub, &improved, ScoreKind::Conductance)?;
            best = best.min(phi.value);
        }
    }
    Ok(best)
}

/// One row of the structural-bias report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BiasRow {
    pub candidate_id: usize,
    pub generator: String,
    pub k: usize,
    pub phi_external: f64,
    pub phi_internal: f64,
    pub ratio: f64,
    pub avg_path: f64,
    pub connected: bool,
}

/// Per-candidate external/internal conductance and compactness table.
/// Disconnected candidates get internal metrics from their split
/// children; the parent row keeps `connected = false` as the flag.
pub fn bias_report(
    g: &Graph,
    candidates: &[ScoredCluster],
    budget: &InternalBudget,
    path_sample_pairs: usize,
) -> Result<Vec<BiasRow>> {
    // identical member sets recur across sweeps; compute each once
    let mut memo: std::collections::HashMap<Vec<u32>, (f64, f64)> = std::collections::HashMap::new();
    let mut rows = Vec::with_capacity(candidates.len());
    for (id, cand) in candidates.iter().enumerate() {
        let k = cand.cluster.node_count();
        let phi_external = cand.conductance().unwrap_or(f64::NAN);
        let pieces: Vec<Cluster> = if cand.connected {
            vec![cand.cluster.clone()]
        } else {
            g.subset_components(cand.cluster.members())
                .into_iter()
                .map(|comp| g.cluster_stats(&comp).expect("valid members"))
                .collect()
        };
        let mut phi_internal = f64::INFINITY;
        let mut path_sum = 0.0;
        let mut path_weight = 0usize;
        for piece in &pieces {
            if piece.node_count() >= 2 {
                let (phi, path) = match memo.get(piece.members()) {
                    Some(&cached) => cached,
                    None => {
                        let phi = internal_conductance(g, piece, budget)?;
                        let path = avg_path_weighted(g, piece, path_sample_pairs, budget.seed)?;
                        memo.insert(piece.members().to_vec(), (phi, path));
                        (phi, path)
                    }
                };
                phi_internal = phi_internal.min(phi);
                path_sum += path * piece.node_count() as f64;
                path_weight += piece.node_count();
            }
        }
        // clusters made only of singletons cannot be cut again
        if !phi_internal.is_finite() {
            phi_internal = 1.0;
        }
        let avg_path = if path_weight > 0 {
            path_sum / path_weight as f64
        } else {
            0.0
        };
        rows.push(BiasRow {
            candidate_id: id,
            generator: cand.generator.to_string(),
            k,
            phi_external,
            phi_internal,
            ratio: phi_external / phi_internal,
            avg_path,
            connected: cand.connected,
        });
    }
    Ok(rows)
}

fn avg_path_weighted(g: &Graph, piece: &Cluster, sample_pairs: usize, seed: u64) -> Result<f64> {
    scoring::avg_shortest_path(g, piece, sample_pairs.max(1), seed)
}
