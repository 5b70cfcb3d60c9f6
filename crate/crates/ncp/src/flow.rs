//! Flow-based partitioning: a Dinic max-flow core, quotient-cut
//! improvement over a fixed ground set (MQI), a multilevel spectral
//! bisection, and the recursive bisection + improvement sampler.

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Cluster, Graph};
use crate::linalg;
use crate::profile::{Generator, ScoredCluster};

/// Max-flow network with integer capacities.
pub struct FlowNetwork {
    head: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap: Vec<i64>,
    orig: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> FlowNetwork {
        FlowNetwork {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.head.len()
    }

    /// Directed arc `u -> v` with capacity `cap` and reverse capacity
    /// `rev_cap` (0 for a plain directed arc).
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i64, rev_cap: i64) -> Result<()> {
        if u >= self.head.len() || v >= self.head.len() || u == v {
            return Err(Error::InvalidTerminal(u.max(v)));
        }
        if cap < 0 || rev_cap < 0 {
            return Err(Error::CapacityOverflow);
        }
        let id = self.to.len() as u32;
        self.head[u].push(id);
        self.to.push(v as u32);
        self.cap.push(cap);
        self.orig.push(cap);
        self.head[v].push(id + 1);
        self.to.push(u as u32);
        self.cap.push(rev_cap);
        self.orig.push(rev_cap);
        Ok(())
    }

    /// Dinic max flow. Capacities are consumed in place.
    pub fn max_flow(&mut self, s: usize, t: usize) -> Result<i64> {
        if s >= self.head.len() || t >= self.head.len() || s == t {
            return Err(Error::InvalidTerminal(s.max(t)));
        }
        let n = self.head.len();
        let mut total: i64 = 0;
        let mut level = vec![u32::MAX; n];
        let mut iter = vec![0usize; n];
        loop {
            level.iter_mut().for_each(|l| *l = u32::MAX);
            level[s] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                for &e in &self.head[u as usize] {
                    let v = self.to[e as usize];
                    if self.cap[e as usize] > 0 && level[v as usize] == u32::MAX {
                        level[v as usize] = level[u as usize] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[t] == u32::MAX {
                break;
            }
            iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total = total
                    .checked_add(pushed)
                    .ok_or(Error::CapacityOverflow)?;
            }
        }
        Ok(total)
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64, level: &[u32], iter: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while iter[u] < self.head[u].len() {
            let e = self.head[u][iter[u]] as usize;
            let v = self.to[e] as usize;
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]), level, iter);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Nodes reachable from `s` in the residual network (the source side
    /// of a minimum cut after `max_flow`).
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.head[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Total original capacity of arcs leaving `side`. After `max_flow`,
    /// equality with the flow value certifies a minimum cut.
    pub fn crossing_capacity(&self, side: &[bool]) -> i64 {
        let mut total = 0i64;
        for u in 0..self.head.len() {
            if !side[u] {
                continue;
            }
            for &e in &self.head[u] {
                let v = self.to[e as usize] as usize;
                if !side[v] {
                    total += self.orig[e as usize];
                }
            }
        }
        total
    }
}

/// Best quotient cut `c(S) / vol(S)` over nonempty subsets of the ground
/// set `a`, found by repeated parametric max-flow (Dinkelbach iteration).
/// The ground set stays fixed; only the quotient target moves, so the
/// final set is a global minimizer within `a`. The result may be
/// internally disconnected.
pub fn mqi(g: &Graph, a: &Cluster) -> Result<Cluster> {
    let k = a.node_count();
    if k == 0 {
        return Err(Error::EmptyCluster);
    }
    if a.boundary_edges() == 0 {
        // quotient 0 already, nothing to improve
        return Ok(a.clone());
    }
    let members = a.members();
    let mut local_id = std::collections::HashMap::with_capacity(k);
    for (i, &u) in members.iter().enumerate() {
        local_id.insert(u, i);
    }
    // boundary multiplicity of each ground-set node
    let boundary: Vec<i64> = members
        .iter()
        .map(|&u| {
            g.neighbors(u as usize)
                .iter()
                .filter(|&&v| !local_id.contains_key(&v))
                .count() as i64
        })
        .collect();
    let degrees: Vec<i64> = members.iter().map(|&u| g.degree(u as usize) as i64).collect();

    let mut cur = a.clone();
    let mut c_cur = cur.boundary_edges() as i64;
    let mut vol_cur = cur.volume() as i64;
    let vol_a = a.volume() as i64;
    let guard = vol_a
        .checked_mul(c_cur)
        .ok_or(Error::CapacityOverflow)?;
    let _ = guard;

    loop {
        // arcs: s -> u cap c_cur * d(u); u -> t cap vol_cur * b(u);
        // internal edges cap vol_cur each way. A source-side set S has
        // cut value  c_cur*vol(A) + [vol_cur*c(S) - c_cur*vol(S)],
        // so maxflow < c_cur*vol(A) certifies a strictly better quotient.
        let s = k;
        let t = k + 1;
        let mut net = FlowNetwork::new(k + 2);
        for i in 0..k {
            net.add_arc(s, i, c_cur.checked_mul(degrees[i]).ok_or(Error::CapacityOverflow)?, 0)?;
            if boundary[i] > 0 {
                net.add_arc(
                    i,
                    t,
                    vol_cur
                        .checked_mul(boundary[i])
                        .ok_or(Error::CapacityOverflow)?,
                    0,
                )?;
            }
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in g.neighbors(u as usize) {
                if let Some(&j) = local_id.get(&v) {
                    if i < j {
                        net.add_arc(i, j, vol_cur, vol_cur)?;
                    }
                }
            }
        }
        let target = c_cur.checked_mul(vol_a).ok_or(Error::CapacityOverflow)?;
        let flow = net.max_flow(s, t)?;
        // min-cut certificate: residual source side must induce a cut of
        // exactly the flow value
        let side = net.source_side(s);
        debug_assert_eq!(net.crossing_capacity(&side), flow);
        if flow >= target {
            return Ok(cur);
        }
        let chosen: Vec<u32> = (0..k)
            .filter(|&i| side[i])
            .map(|i| members[i])
            .collect();
        if chosen.is_empty() {
            return Ok(cur);
        }
        let next = g.cluster_stats(&chosen)?;
        let c_next = next.boundary_edges() as i64;
        let vol_next = next.volume() as i64;
        // strict quotient improvement, compared without division
        debug_assert!(c_next * vol_cur < c_cur * vol_next);
        if c_next * vol_cur >= c_cur * vol_next {
            return Ok(cur);
        }
        cur = next;
        c_cur = c_next;
        vol_cur = vol_next;
        if c_cur == 0 {
            return Ok(cur);
        }
    }
}

/// A two-way split with its cut size.
#[derive(Debug, Clone)]
pub struct Bisection {
    pub side_a: Cluster,
    pub side_b: Cluster,
    pub cut_edges: usize,
}

struct Level {
    adj: Vec<Vec<(u32, u64)>>,
    vol: Vec<u64>,
    // map from this level's nodes to the next coarser level
    coarse_of: Vec<u32>,
}

/// Multilevel bisection: heavy-edge matching down to at most 64 nodes, a
/// Fiedler-vector split of the coarsest graph balanced by volume, then
/// greedy boundary refinement at every level under a volume-balance
/// tolerance `tol` (fraction of total volume).
pub fn bisect(g: &Graph, seed: u64, tol: f64) -> Result<Bisection> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::ClusterTooSmall { need: 2, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // finest level from the CSR graph, unit edge weights
    let mut adj: Vec<Vec<(u32, u64)>> = (0..n)
        .map(|u| g.neighbors(u).iter().map(|&v| (v, 1u64)).collect())
        .collect();
    let mut vol: Vec<u64> = (0..n).map(|u| g.degree(u) as u64).collect();
    let mut levels: Vec<Level> = Vec::new();

    while adj.len() > 64 {
        let cur_n = adj.len();
        let mut order: Vec<u32> = (0..cur_n as u32).collect();
        order.shuffle(&mut rng);
        let mut mate = vec![u32::MAX; cur_n];
        for &u in &order {
            if mate[u as usize] != u32::MAX {
                continue;
            }
            // heaviest unmatched neighbor, ties to the smaller id
            let mut best: Option<(u64, u32)> = None;
            for &(v, w) in &adj[u as usize] {
                if mate[v as usize] == u32::MAX {
                    let cand = (w, v);
                    best = Some(match best {
                        None => cand,
                        Some(b) => {
                            if cand.0 > b.0 || (cand.0 == b.0 && cand.1 < b.1) {
                                cand
                            } else {
                                b
                            }
                        }
                    });
                }
            }
            match best {
                Some((_, v)) => {
                    mate[u as usize] = v;
                    mate[v as usize] = u;
                }
                None => mate[u as usize] = u,
            }
        }
        let mut coarse_of = vec![u32::MAX; cur_n];
        let mut next_id = 0u32;
        for u in 0..cur_n {
            if coarse_of[u] != u32::MAX {
                continue;
            }
            coarse_of[u] = next_id;
            let m = mate[u] as usize;
            if m != u && coarse_of[m] == u32::MAX {
                coarse_of[m] = next_id;
            }
            next_id += 1;
        }
        let coarse_n = next_id as usize;
        if coarse_n as f64 > cur_n as f64 * 0.95 {
            break; // matching stalled
        }
        let mut coarse_adj: Vec<std::collections::BTreeMap<u32, u64>> =
            vec![std::collections::BTreeMap::new(); coarse_n];
        let mut coarse_vol = vec![0u64; coarse_n];
        for u in 0..cur_n {
            let cu = coarse_of[u];
            coarse_vol[cu as usize] += vol[u];
            for &(v, w) in &adj[u] {
                let cv = coarse_of[v as usize];
                if cu != cv {
                    *coarse_adj[cu as usize].entry(cv).or_insert(0) += w;
                }
            }
        }
        levels.push(Level {
            adj,
            vol,
            coarse_of,
        });
        adj = coarse_adj
            .into_iter()
            .map(|m| m.into_iter().collect())
            .collect();
        // each undirected weight was counted from both endpoints already,
        // so the collected maps are symmetric as required
        vol = coarse_vol;
    }

    // Fiedler split of the coarsest graph, balanced by accumulated volume
    let cn = adj.len();
    let mut side = vec![false; cn];
    if cn == 2 {
        side[0] = true;
    } else {
        let mut lap = DMatrix::zeros(cn, cn);
        for (u, nbrs) in adj.iter().enumerate() {
            for &(v, w) in nbrs {
                lap[(u, v as usize)] -= w as f64;
                lap[(u, u)] += w as f64;
            }
        }
        let ones = vec![1.0 / (cn as f64).sqrt(); cn];
        let (_, fiedler) = linalg::dense_smallest(&lap, &[ones]);
        let mut order: Vec<usize> = (0..cn).collect();
        order.sort_by(|&a, &b| {
            fiedler[a]
                .partial_cmp(&fiedler[b])
                .unwrap()
                .then(a.cmp(&b))
        });
        let total: u64 = vol.iter().sum();
        let mut acc = 0u64;
        for &u in &order {
            if acc * 2 >= total {
                break;
            }
            side[u] = true;
            acc += vol[u];
        }
    }

    refine(&adj, &vol, &mut side, tol);
    while let Some(level) = levels.pop() {
        let fine_n = level.adj.len();
        let mut fine_side = vec![false; fine_n];
        for u in 0..fine_n {
            fine_side[u] = side[level.coarse_of[u] as usize];
        }
        side = fine_side;
        refine(&level.adj, &level.vol, &mut side, tol);
    }

    let a: Vec<u32> = (0..n as u32).filter(|&u| side[u as usize]).collect();
    let b: Vec<u32> = (0..n as u32).filter(|&u| !side[u as usize]).collect();
    if a.is_empty() || b.is_empty() {
        return Err(Error::DegenerateCluster {
            kind: "bisection".into(),
            size: a.len().max(b.len()),
            n,
        });
    }
    let side_a = g.cluster_stats(&a)?;
    let side_b = g.cluster_stats(&b)?;
    let cut_edges = side_a.boundary_edges();
    debug_assert_eq!(cut_edges, side_b.boundary_edges());
    Ok(Bisection {
        side_a,
        side_b,
        cut_edges,
    })
}

/// Greedy boundary passes: flip a node when that strictly reduces the cut
/// weight and keeps both side volumes at least `(0.5 - tol)` of the total.
fn refine(adj: &[Vec<(u32, u64)>], vol: &[u64], side: &mut [bool], tol: f64) {
    let total: u64 = vol.iter().sum();
    let floor = ((0.5 - tol) * total as f64).max(0.0);
    let mut vol_true: u64 = (0..vol.len()).filter(|&u| side[u]).map(|u| vol[u]).sum();
    for _ in 0..8 {
        let mut moved = false;
        for u in 0..adj.len() {
            let mut same = 0u64;
            let mut other = 0u64;
            for &(v, w) in &adj[u] {
                if side[v as usize] == side[u] {
                    same += w;
                } else {
                    other += w;
                }
            }
            if other <= same {
                continue;
            }
            let (new_true, new_false) = if side[u] {
                (vol_true - vol[u], total - vol_true + vol[u])
            } else {
                (vol_true + vol[u], total - vol_true - vol[u])
            };
            if (new_true as f64) < floor || (new_false as f64) < floor {
                continue;
            }
            side[u] = !side[u];
            vol_true = new_true;
            moved = true;
        }
        if !moved {
            break;
        }
    }
}

/// Candidate clusters from a recursive bisection tree with quotient
/// improvement applied to every tree node. Each trial reshuffles the
/// coarsening with a distinct stream of the base seed.
pub fn recursive_bisection_sample(
    g: &Graph,
    base_seed: u64,
    trials: usize,
    tol: f64,
) -> Result<Vec<ScoredCluster>> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::ClusterTooSmall { need: 2, got: n });
    }
    let max_depth = if n <= 20 {
        1
    } else {
        ((n as f64 / 20.0).log2().ceil() as usize).max(1)
    };
    let mut out = Vec::new();
    for trial in 0..trials {
        let seed = base_seed.wrapping_add(trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let all: Vec<u32> = (0..n as u32).collect();
        descend(g, &all, seed, 0, max_depth, tol, &mut out)?;
    }
    Ok(out)
}

fn descend(
    g: &Graph,
    members: &[u32],
    seed: u64,
    depth: usize,
    max_depth: usize,
    tol: f64,
    out: &mut Vec<ScoredCluster>,
) -> Result<()> {
    if depth >= max_depth || members.len() < 4 {
        return Ok(());
    }
    let sub = g.induced_subgraph(members)?;
    let Ok(split) = bisect(&sub, seed.wrapping_add(depth as u64), tol) else {
        return Ok(());
    };
    for half in [&split.side_a, &split.side_b] {
        let original: Vec<u32> = half
            .members()
            .iter()
            .map(|&u| members[u as usize])
            .collect();
        let piece = g.cluster_stats(&original)?;
        if piece.boundary_edges() > 0 && piece.node_count() < g.node_count() {
            let improved = mqi(g, &piece)?;
            out.push(ScoredCluster::new(
                g,
                improved,
                Generator::Mqi,
                seed,
                format!("recursive-bisection depth={depth}"),
            ));
        }
        descend(g, &original, seed, depth + 1, max_depth, tol, out)?;
    }
    Ok(())
}
