//! Immutable sparse undirected graphs and per-cluster statistics.
//!
//! Graphs are stored in compressed adjacency form with dense node ids
//! `0..n-1`; the ids found in the input file are kept in a side map.
//! Self-loops are dropped and duplicate or reversed-duplicate edges are
//! merged at load time, so every formula downstream can assume a simple
//! undirected graph.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Options for [`Graph::load_edge_list`].
#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    /// Keep only the largest connected component after loading.
    pub keep_largest_component: bool,
}

/// An immutable undirected simple graph in compressed adjacency form.
#[derive(Debug, Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    original_ids: Vec<i64>,
    edge_count: usize,
}

impl Graph {
    /// Build a graph from raw (possibly duplicated, possibly self-looped)
    /// edge pairs in the original id space.
    pub fn from_edge_pairs(pairs: &[(i64, i64)]) -> Result<Graph> {
        let mut ids: Vec<i64> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let index_of = |id: i64| ids.binary_search(&id).unwrap() as u32;
        let mut edges: Vec<(u32, u32)> = pairs
            .iter()
            .filter(|&&(u, v)| u != v)
            .map(|&(u, v)| {
                let (a, b) = (index_of(u), index_of(v));
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_dense_edges(ids.len(), &edges, ids))
    }

    /// `edges` must hold deduplicated pairs `(u, v)` with `u < v < n`.
    fn from_dense_edges(n: usize, edges: &[(u32, u32)], original_ids: Vec<i64>) -> Graph {
        let mut degrees = vec![0usize; n];
        for &(u, v) in edges {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for u in 0..n {
            offsets[u + 1] = offsets[u] + degrees[u];
        }
        let mut neighbors = vec![0u32; offsets[n]];
        let mut cursor = offsets.clone();
        for &(u, v) in edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for u in 0..n {
            neighbors[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Graph {
            offsets,
            neighbors,
            original_ids,
            edge_count: edges.len(),
        }
    }

    /// Load a whitespace-separated edge list. Lines beginning with `#` are
    /// ignored; every other non-blank line must hold exactly two integer
    /// tokens. Directed inputs are symmetrized.
    pub fn load_edge_list<R: BufRead>(reader: R, options: LoadOptions) -> Result<Graph> {
        let mut pairs = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<i64> {
                let tok = tok.ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "expected two node tokens".into(),
                })?;
                tok.parse::<i64>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid node token '{tok}'"),
                })
            };
            let u = parse(tokens.next())?;
            let v = parse(tokens.next())?;
            if tokens.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected exactly two node tokens".into(),
                });
            }
            pairs.push((u, v));
        }
        let g = Graph::from_edge_pairs(&pairs)?;
        if options.keep_largest_component {
            Ok(g.largest_connected_component())
        } else {
            Ok(g)
        }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sum of all degrees, equal to `2m`.
    pub fn total_volume(&self) -> usize {
        2 * self.edge_count
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Undirected edges as `(u, v)` with `u < v`, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| (u as u32) < v)
                .map(move |&v| (u as u32, v))
        })
    }

    pub fn original_id(&self, u: usize) -> i64 {
        self.original_ids[u]
    }

    pub fn node_of_original(&self, id: i64) -> Result<usize> {
        // original ids are not necessarily sorted after LCC extraction
        self.original_ids
            .iter()
            .position(|&x| x == id)
            .ok_or(Error::UnknownOriginalId(id))
    }

    /// Connected components as sorted node-id lists, ordered by the id of
    /// their smallest node.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start as u32];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v);
                        queue.push_back(v as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The component with the most nodes; ties broken by the smallest
    /// contained original id.
    pub fn largest_connected_component(&self) -> Graph {
        let comps = self.components();
        let best = comps
            .iter()
            .min_by_key(|c| {
                let min_orig = c.iter().map(|&u| self.original_id(u as usize)).min().unwrap();
                (std::cmp::Reverse(c.len()), min_orig)
            })
            .expect("graph is nonempty");
        self.induced_subgraph_of(best)
    }

    /// Subgraph induced by `members` (dense node ids of `self`); the result
    /// keeps the members' original ids.
    pub fn induced_subgraph(&self, members: &[u32]) -> Result<Graph> {
        for &u in members {
            if (u as usize) >= self.node_count() {
                return Err(Error::NodeOutOfRange(u as usize));
            }
        }
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateMember(w[0] as usize));
            }
        }
        Ok(self.induced_subgraph_of(&sorted))
    }

    /// `members` must be sorted, deduplicated and in range.
    fn induced_subgraph_of(&self, members: &[u32]) -> Graph {
        let rank = |u: u32| members.binary_search(&u).ok().map(|i| i as u32);
        let mut edges = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for &v in self.neighbors(u as usize) {
                if u < v {
                    if let Some(j) = rank(v) {
                        edges.push((i as u32, j));
                    }
                }
            }
        }
        edges.sort_unstable();
        let original_ids = members
            .iter()
            .map(|&u| self.original_id(u as usize))
            .collect();
        Graph::from_dense_edges(members.len(), &edges, original_ids)
    }

    /// Compute cached statistics for a node subset in O(vol(S)).
    pub fn cluster_stats(&self, members: &[u32]) -> Result<Cluster> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateMember(w[0] as usize));
            }
        }
        for &u in &sorted {
            if (u as usize) >= self.node_count() {
                return Err(Error::NodeOutOfRange(u as usize));
            }
        }
        let mut volume = 0usize;
        let mut internal_twice = 0usize;
        for &u in &sorted {
            volume += self.degree(u as usize);
            for &v in self.neighbors(u as usize) {
                if sorted.binary_search(&v).is_ok() {
                    internal_twice += 1;
                }
            }
        }
        let internal_edges = internal_twice / 2;
        let boundary_edges = volume - internal_twice;
        Ok(Cluster {
            members: sorted,
            internal_edges,
            boundary_edges,
            volume,
        })
    }

    /// Connected components of the subgraph induced by `members`, each as a
    /// sorted list of `self` node ids.
    pub fn subset_components(&self, members: &[u32]) -> Vec<Vec<u32>> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        let in_set = |u: u32| sorted.binary_search(&u).is_ok();
        let mut seen = vec![false; sorted.len()];
        let mut out = Vec::new();
        for i in 0..sorted.len() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            let mut comp = vec![sorted[i]];
            let mut queue = VecDeque::from([sorted[i]]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u as usize) {
                    if in_set(v) {
                        let j = sorted.binary_search(&v).unwrap();
                        if !seen[j] {
                            seen[j] = true;
                            comp.push(v);
                            queue.push_back(v);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected_subset(&self, members: &[u32]) -> bool {
        !members.is_empty() && self.subset_components(members).len() == 1
    }

    /// Write the graph back out in edge-list format (original id space).
    pub fn save<W: Write>(&self, mut writer: W) -> Result<()> {
        for (u, v) in self.edges() {
            writeln!(
                writer,
                "{} {}",
                self.original_id(u as usize),
                self.original_id(v as usize)
            )?;
        }
        Ok(())
    }

    /// BFS distances inside the whole graph from `start`; unreachable nodes
    /// get `usize::MAX`.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.node_count()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u] + 1;
                    queue.push_back(v as usize);
                }
            }
        }
        dist
    }
}

/// A node subset with cached statistics.
///
/// The identity `vol(S) = 2 m_S + c_S` holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    members: Vec<u32>,
    internal_edges: usize,
    boundary_edges: usize,
    volume: usize,
}

impl Cluster {
    /// Assemble a cluster from already-known statistics. Callers are
    /// responsible for the stats matching `members`; the identity
    /// `vol = 2 m_S + c_S` is checked in debug builds.
    pub(crate) fn from_parts(
        mut members: Vec<u32>,
        internal_edges: usize,
        boundary_edges: usize,
        volume: usize,
    ) -> Cluster {
        members.sort_unstable();
        debug_assert_eq!(volume, 2 * internal_edges + boundary_edges);
        Cluster {
            members,
            internal_edges,
            boundary_edges,
            volume,
        }
    }

    /// Sorted member node ids (dense id space of the graph the cluster was
    /// computed against).
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn node_count(&self) -> usize {
        self.members.len()
    }

    pub fn internal_edges(&self) -> usize {
        self.internal_edges
    }

    pub fn boundary_edges(&self) -> usize {
        self.boundary_edges
    }

    pub fn volume(&self) -> usize {
        self.volume
    }

    pub fn contains(&self, u: u32) -> bool {
        self.members.binary_search(&u).is_ok()
    }

    /// The complementary node set, with stats derived from this cluster.
    pub fn complement(&self, g: &Graph) -> Cluster {
        let members: Vec<u32> = (0..g.node_count() as u32)
            .filter(|&u| !self.contains(u))
            .collect();
        let volume = g.total_volume() - self.volume;
        let boundary_edges = self.boundary_edges;
        let internal_edges = (volume - boundary_edges) / 2;
        Cluster {
            members,
            internal_edges,
            boundary_edges,
            volume,
        }
    }
}
