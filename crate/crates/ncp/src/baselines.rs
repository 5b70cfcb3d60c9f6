//! Global baselines: the Fiedler-vector sweep and the divisive
//! edge-betweenness dendrogram. Both emit candidates scored against the
//! original graph so they feed the same profile machinery as the local
//! and flow partitioners.

use std::collections::VecDeque;
use std::fmt;

use crate::bounds;
use crate::error::{Error, Result};
use crate::flow;
use crate::graph::Graph;
use crate::local;
use crate::profile::{Generator, ScoredCluster};

/// Degree-normalized Fiedler embedding: the generalized eigenvector of
/// `L y = lambda D y` for the second-smallest eigenvalue, scaled to unit
/// norm with the first nonzero entry positive. Sorting nodes by this
/// embedding gives the spectral sweep order.
pub fn fiedler_vector(g: &Graph) -> Result<Vec<f64>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let spectral = bounds::spectral_lower_bound(g)?;
    // certificate vector is already the generalized eigenvector, unit norm
    let mut y = spectral.vector;
    let mut sign = 0.0;
    for &v in &y {
        if v.abs() > 1e-12 {
            sign = v.signum();
            break;
        }
    }
    if sign == 0.0 {
        sign = 1.0;
    }
    for v in &mut y {
        *v *= sign;
    }
    Ok(y)
}

/// Sweep over the Fiedler order: every connected prefix becomes a
/// candidate, plus one quotient-improved refinement of the best
/// volume-balanced prefix (volume within [1/4, 3/4] of the total).
pub fn global_spectral_sweep(g: &Graph, seed: u64) -> Result<Vec<ScoredCluster>> {
    let y = fiedler_vector(g)?;
    let mut order: Vec<u32> = (0..g.node_count() as u32).collect();
    order.sort_by(|&a, &b| {
        y[a as usize]
            .partial_cmp(&y[b as usize])
            .unwrap()
            .then(a.cmp(&b))
    });
    let prefixes = local::scan_prefixes(g, &order);
    let total = g.total_volume();
    let mut out = Vec::new();
    let mut best_balanced: Option<(f64, usize)> = None;
    for (i, prefix) in prefixes.iter().enumerate() {
        if prefix.connected {
            out.push(ScoredCluster::with_connectivity(
                g,
                prefix.cluster.clone(),
                Generator::GlobalSpectral,
                seed,
                format!("fiedler-sweep k={}", prefix.size),
                true,
            ));
        }
        let vol = prefix.cluster.volume();
        if 4 * vol >= total && 4 * vol <= 3 * total {
            let better = best_balanced.map_or(true, |(phi, _)| prefix.conductance < phi);
            if better {
                best_balanced = Some((prefix.conductance, i));
            }
        }
    }
    if let Some((_, i)) = best_balanced {
        let cluster = &prefixes[i].cluster;
        let ground = if cluster.volume() * 2 <= total {
            cluster.clone()
        } else {
            cluster.complement(g)
        };
        let improved = flow::mqi(g, &ground)?;
        out.push(ScoredCluster::new(
            g,
            improved,
            Generator::Mqi,
            seed,
            "fiedler-sweep balanced + quotient improvement".to_string(),
        ));
    }
    Ok(out)
}

/// Brandes betweenness for every edge, indexed in the order of
/// [`Graph::edges`]. Each unordered node pair contributes once.
pub fn edge_betweenness(g: &Graph) -> Vec<f64> {
    let adj: Vec<Vec<u32>> = (0..g.node_count())
        .map(|u| g.neighbors(u).to_vec())
        .collect();
    let index = edge_index(g);
    let mut scores = vec![0.0; g.edge_count()];
    betweenness_into(&adj, &index, &mut scores);
    scores
}

fn edge_index(g: &Graph) -> std::collections::HashMap<(u32, u32), usize> {
    g.edges()
        .enumerate()
        .map(|(i, (u, v))| ((u.min(v), u.max(v)), i))
        .collect()
}

fn betweenness_into(
    adj: &[Vec<u32>],
    index: &std::collections::HashMap<(u32, u32), usize>,
    scores: &mut [f64],
) {
    let n = adj.len();
    scores.iter_mut().for_each(|s| *s = 0.0);
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        sigma.iter_mut().for_each(|x| *x = 0.0);
        delta.iter_mut().for_each(|x| *x = 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        let mut queue = VecDeque::new();
        queue.push_back(s as u32);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &adj[u as usize] {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    queue.push_back(v);
                }
                if dist[v as usize] == dist[u as usize] + 1 {
                    sigma[v as usize] += sigma[u as usize];
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in &adj[w as usize] {
                if dist[v as usize] + 1 == dist[w as usize] {
                    let c = sigma[v as usize] / sigma[w as usize] * (1.0 + delta[w as usize]);
                    delta[v as usize] += c;
                    let key = (v.min(w), v.max(w));
                    if let Some(&e) = index.get(&key) {
                        scores[e] += c;
                    }
                }
            }
        }
    }
    // every pair was counted from both endpoints
    scores.iter_mut().for_each(|s| *s *= 0.5);
}

/// A node of the divisive dendrogram. Leaves hold the members of a
/// component that was never split.
#[derive(Debug, Clone)]
pub enum DendroNode {
    Leaf(Vec<u32>),
    Split(Box<DendroNode>, Box<DendroNode>),
}

impl fmt::Display for DendroNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DendroNode::Leaf(members) => {
                if members.len() == 1 {
                    write!(f, "{}", members[0])
                } else {
                    write!(f, "{{")?;
                    for (i, u) in members.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{u}")?;
                    }
                    write!(f, "}}")
                }
            }
            DendroNode::Split(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// Result of the divisive edge-betweenness process.
#[derive(Debug, Clone)]
pub struct GnDendrogram {
    pub tree: DendroNode,
    /// Edges in removal order, as (smaller, larger) node ids.
    pub removals: Vec<(u32, u32)>,
    /// Every component created by a split, scored against the original
    /// graph, in creation order.
    pub candidates: Vec<ScoredCluster>,
}

/// Divisive clustering: repeatedly recompute edge betweenness on the
/// remaining graph and delete the top edge (ties broken by the smaller
/// canonical endpoint pair). Stops after `max_splits` component splits or
/// when no edges remain.
pub fn gn_dendrogram(g: &Graph, max_splits: usize) -> Result<GnDendrogram> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut adj: Vec<Vec<u32>> = (0..n).map(|u| g.neighbors(u).to_vec()).collect();
    let index = edge_index(g);
    let mut alive: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    let mut scores = vec![0.0; g.edge_count()];

    // forest of current components; tree nodes are patched in place when
    // their component splits
    let mut comp_of: Vec<usize> = vec![0; n];
    let mut roots: Vec<Vec<u32>> = vec![(0..n as u32).collect()];
    let mut slots: Vec<usize> = vec![0]; // component id -> arena index
    let mut arena: Vec<DendroNode> = vec![DendroNode::Leaf((0..n as u32).collect())];

    let mut removals = Vec::new();
    let mut candidates = Vec::new();
    let mut splits = 0usize;

    while splits < max_splits && !alive.is_empty() {
        betweenness_into(&adj, &index, &mut scores);
        let mut best: Option<((u32, u32), f64)> = None;
        for &(u, v) in &alive {
            let s = scores[index[&(u, v)]];
            best = Some(match best {
                None => ((u, v), s),
                Some((edge, bs)) => {
                    if s > bs + 1e-9 || ((s - bs).abs() <= 1e-9 && (u, v) < edge) {
                        ((u, v), s)
                    } else {
                        (edge, bs)
                    }
                }
            });
        }
        let ((u, v), _) = best.expect("alive is nonempty");
        adj[u as usize].retain(|&x| x != v);
        adj[v as usize].retain(|&x| x != u);
        alive.retain(|&e| e != (u, v));
        removals.push((u, v));

        // did the removal split u's component?
        let cid = comp_of[u as usize];
        let mut reach = vec![false; n];
        let mut stack = vec![u];
        reach[u as usize] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x as usize] {
                if !reach[y as usize] {
                    reach[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        if reach[v as usize] {
            continue;
        }
        let (part_a, part_b): (Vec<u32>, Vec<u32>) =
            roots[cid].iter().partition(|&&x| reach[x as usize]);
        splits += 1;
        let slot = slots[cid];
        let new_cid = roots.len();
        for &x in &part_b {
            comp_of[x as usize] = new_cid;
        }
        roots[cid] = part_a.clone();
        roots.push(part_b.clone());
        let leaf_a = arena.len();
        arena.push(DendroNode::Leaf(part_a.clone()));
        let leaf_b = arena.len();
        arena.push(DendroNode::Leaf(part_b.clone()));
        slots[cid] = leaf_a;
        slots.push(leaf_b);
        arena[slot] = DendroNode::Split(
            Box::new(DendroNode::Leaf(Vec::new())), // patched below
            Box::new(DendroNode::Leaf(Vec::new())),
        );
        // record the arena children inside the split node lazily; the tree
        // is materialized after the loop from slot indices
        if let DendroNode::Split(a, b) = &mut arena[slot] {
            *a = Box::new(DendroNode::Leaf(vec![leaf_a as u32]));
            *b = Box::new(DendroNode::Leaf(vec![leaf_b as u32]));
        }
        for part in [&part_a, &part_b] {
            if part.len() < n {
                let cluster = g.cluster_stats(part)?;
                candidates.push(ScoredCluster::with_connectivity(
                    g,
                    cluster,
                    Generator::Dendrogram,
                    0,
                    format!("betweenness split={splits}"),
                    true,
                ));
            }
        }
    }

    let tree = materialize(&arena, 0);
    Ok(GnDendrogram {
        tree,
        removals,
        candidates,
    })
}

// split nodes store arena indices of their children inside placeholder
// leaves; rebuild the real tree recursively
fn materialize(arena: &[DendroNode], slot: usize) -> DendroNode {
    match &arena[slot] {
        DendroNode::Leaf(members) => DendroNode::Leaf(members.clone()),
        DendroNode::Split(a, b) => {
            let ia = match a.as_ref() {
                DendroNode::Leaf(v) => v[0] as usize,
                _ => unreachable!(),
            };
            let ib = match b.as_ref() {
                DendroNode::Leaf(v) => v[0] as usize,
                _ => unreachable!(),
            };
            DendroNode::Split(
                Box::new(materialize(arena, ia)),
                Box::new(materialize(arena, ib)),
            )
        }
    }
}
