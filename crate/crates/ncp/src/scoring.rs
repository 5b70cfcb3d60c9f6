//! The twelve community-quality objective functions, plus the structural
//! metrics (out-degree fractions, sampled average shortest path) used by the
//! bias reports.
//!
//! All scores are closed-form in `(n, m, n_S, m_S, c_S, vol_S)` and the
//! per-node out-degree fractions. Conductance uses the min-volume
//! denominator `c_S / min(vol(S), vol(V\S))` so profiles are symmetric
//! around half volume; for `vol(S) <= m` this coincides with
//! `c_S / (2 m_S + c_S)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Cluster, Graph};

/// Whether smaller or larger values of a score indicate a better community.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    LowerIsBetter,
    HigherIsBetter,
    /// Purely descriptive quantity (no preferred direction).
    Descriptive,
}

/// The twelve community scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum ScoreKind {
    Conductance,
    Expansion,
    InternalDensity,
    CutRatio,
    NormalizedCut,
    MaxODF,
    AvgODF,
    FlakeODF,
    Modularity,
    ModularityRatio,
    Volume,
    EdgesCut,
}

pub const ALL_SCORE_KINDS: [ScoreKind; 12] = [
    ScoreKind::Conductance,
    ScoreKind::Expansion,
    ScoreKind::InternalDensity,
    ScoreKind::CutRatio,
    ScoreKind::NormalizedCut,
    ScoreKind::MaxODF,
    ScoreKind::AvgODF,
    ScoreKind::FlakeODF,
    ScoreKind::Modularity,
    ScoreKind::ModularityRatio,
    ScoreKind::Volume,
    ScoreKind::EdgesCut,
];

impl ScoreKind {
    pub fn orientation(self) -> Orientation {
        match self {
            ScoreKind::Modularity | ScoreKind::ModularityRatio => Orientation::HigherIsBetter,
            ScoreKind::Volume => Orientation::Descriptive,
            _ => Orientation::LowerIsBetter,
        }
    }

    /// Scores for which `f(S) = f(V \ S)`, so sizes above `n/2` can be
    /// mapped through the complement.
    pub fn boundary_symmetric(self) -> bool {
        matches!(
            self,
            ScoreKind::Conductance | ScoreKind::CutRatio | ScoreKind::EdgesCut
        )
    }
}

impl fmt::Display for ScoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ScoreKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_SCORE_KINDS
            .into_iter()
            .find(|k| format!("{k:?}").eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownScoreKind(s.to_string()))
    }
}

/// A score kind together with its evaluated value.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ScoreValue {
    pub kind: ScoreKind,
    pub value: f64,
}

/// Evaluate one score on one cluster.
pub fn score(g: &Graph, s: &Cluster, kind: ScoreKind) -> Result<ScoreValue> {
    let n = g.node_count();
    let m = g.edge_count();
    let n_s = s.node_count();
    let m_s = s.internal_edges();
    let c_s = s.boundary_edges();
    let vol = s.volume();
    let degenerate = n_s == 0 || n_s == n;
    let value = match kind {
        ScoreKind::Conductance => {
            if degenerate {
                return Err(Error::DegenerateCluster {
                    kind: "Conductance",
                    size: n_s,
                    n,
                });
            }
            let denom = vol.min(g.total_volume() - vol);
            if denom == 0 {
                // every member (or every non-member) is isolated
                return Err(Error::DegenerateCluster {
                    kind: "Conductance",
                    size: n_s,
                    n,
                });
            }
            c_s as f64 / denom as f64
        }
        ScoreKind::Expansion => {
            if n_s == 0 {
                return Err(Error::EmptyCluster);
            }
            c_s as f64 / n_s as f64
        }
        ScoreKind::InternalDensity => {
            if n_s == 0 {
                return Err(Error::EmptyCluster);
            }
            if n_s == 1 {
                // the defining formula divides by n_S(n_S-1)/2 = 0;
                // a singleton has no internal edges, score it worst
                1.0
            } else {
                1.0 - m_s as f64 / (n_s as f64 * (n_s as f64 - 1.0) / 2.0)
            }
        }
        ScoreKind::CutRatio => {
            if degenerate {
                return Err(Error::DegenerateCluster {
                    kind: "CutRatio",
                    size: n_s,
                    n,
                });
            }
            c_s as f64 / (n_s as f64 * (n - n_s) as f64)
        }
        ScoreKind::NormalizedCut => {
            if degenerate {
                return Err(Error::DegenerateCluster {
                    kind: "NormalizedCut",
                    size: n_s,
                    n,
                });
            }
            if 2 * m_s + c_s == 0 || 2 * (m - m_s) + c_s == 0 {
                // an isolated side makes one of the denominators vanish
                return Err(Error::DegenerateCluster {
                    kind: "NormalizedCut",
                    size: n_s,
                    n,
                });
            }
            c_s as f64 / (2 * m_s + c_s) as f64 + c_s as f64 / (2 * (m - m_s) + c_s) as f64
        }
        ScoreKind::MaxODF => {
            let fracs = out_degree_fractions(g, s)?;
            fracs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        }
        ScoreKind::AvgODF => {
            let fracs = out_degree_fractions(g, s)?;
            fracs.iter().sum::<f64>() / fracs.len() as f64
        }
        ScoreKind::FlakeODF => {
            if n_s == 0 {
                return Err(Error::EmptyCluster);
            }
            let mut weak = 0usize;
            for &u in s.members() {
                let d = g.degree(u as usize);
                if d == 0 {
                    return Err(Error::IsolatedMember(u as usize));
                }
                let internal = g
                    .neighbors(u as usize)
                    .iter()
                    .filter(|&&v| s.contains(v))
                    .count();
                if 2 * internal < d {
                    weak += 1;
                }
            }
            weak as f64 / n_s as f64
        }
        ScoreKind::Modularity => {
            let expected = vol as f64 * vol as f64 / (4.0 * m as f64);
            (m_s as f64 - expected) / (4.0 * m as f64)
        }
        ScoreKind::ModularityRatio => {
            let expected = vol as f64 * vol as f64 / (4.0 * m as f64);
            if expected == 0.0 {
                return Err(Error::ZeroExpectedEdges);
            }
            m_s as f64 / expected
        }
        ScoreKind::Volume => vol as f64,
        ScoreKind::EdgesCut => c_s as f64,
    };
    Ok(ScoreValue { kind, value })
}

/// Evaluate every kind; inapplicable kinds are carried as errors rather
/// than silently skipped.
pub fn score_all(g: &Graph, s: &Cluster) -> Vec<(ScoreKind, Result<ScoreValue>)> {
    ALL_SCORE_KINDS
        .into_iter()
        .map(|kind| (kind, score(g, s, kind)))
        .collect()
}

/// Per-member fraction of edges leaving the cluster, in member order.
pub fn out_degree_fractions(g: &Graph, s: &Cluster) -> Result<Vec<f64>> {
    if s.node_count() == 0 {
        return Err(Error::EmptyCluster);
    }
    s.members()
        .iter()
        .map(|&u| {
            let d = g.degree(u as usize);
            if d == 0 {
                return Err(Error::IsolatedMember(u as usize));
            }
            let out = g
                .neighbors(u as usize)
                .iter()
                .filter(|&&v| !s.contains(v))
                .count();
            Ok(out as f64 / d as f64)
        })
        .collect()
}

/// Mean BFS distance over sampled unordered node pairs inside the induced
/// subgraph of `s`. Exhaustive when the pair count fits the budget;
/// deterministic for a fixed seed otherwise.
pub fn avg_shortest_path(g: &Graph, s: &Cluster, sample_pairs: usize, seed: u64) -> Result<f64> {
    let k = s.node_count();
    if k < 2 {
        return Err(Error::ClusterTooSmall { need: 2, got: k });
    }
    if sample_pairs == 0 {
        return Err(Error::InvalidParameter("sample_pairs must be >= 1".into()));
    }
    let sub = g.induced_subgraph(s.members())?;
    if !sub.is_connected() {
        return Err(Error::DisconnectedSubgraph);
    }
    let total_pairs = k * (k - 1) / 2;
    if total_pairs <= sample_pairs {
        // exact all-pairs mean
        let mut sum = 0usize;
        for u in 0..k {
            let dist = sub.bfs_distances(u);
            for v in (u + 1)..k {
                sum += dist[v];
            }
        }
        return Ok(sum as f64 / total_pairs as f64);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = sample(&mut rng, total_pairs, sample_pairs);
    // decode pair index into (u, v), u < v, lexicographic by u
    let decode = |mut idx: usize| {
        for u in 0..k {
            let row = k - 1 - u;
            if idx < row {
                return (u, u + 1 + idx);
            }
            idx -= row;
        }
        unreachable!("pair index in range");
    };
    let mut pairs: Vec<(usize, usize)> = chosen.iter().map(decode).collect();
    pairs.sort_unstable();
    let mut sum = 0usize;
    let mut cached_source = usize::MAX;
    let mut dist = Vec::new();
    for (u, v) in pairs {
        if u != cached_source {
            dist = sub.bfs_distances(u);
            cached_source = u;
        }
        sum += dist[v];
    }
    Ok(sum as f64 / sample_pairs as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LoadOptions;
    use proptest::prelude::*;
    use std::io::Cursor;

    fn complete_graph(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n as i64 {
            for v in (u + 1)..n as i64 {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_pairs(&pairs).unwrap()
    }

    fn barbell() -> Graph {
        Graph::load_edge_list(
            Cursor::new(include_str!("../data/barbell.txt")),
            LoadOptions::default(),
        )
        .unwrap()
    }

    fn toy() -> Graph {
        Graph::load_edge_list(
            Cursor::new(include_str!("../data/toy.txt")),
            LoadOptions::default(),
        )
        .unwrap()
    }

    fn val(g: &Graph, members: &[u32], kind: ScoreKind) -> f64 {
        let c = g.cluster_stats(members).unwrap();
        score(g, &c, kind).unwrap().value
    }

    #[test]
    fn toy_sets_a_and_b() {
        let g = toy();
        assert_eq!(val(&g, &[0, 1, 2, 3], ScoreKind::Conductance), 2.0 / 14.0);
        assert_eq!(val(&g, &[4, 5, 6, 7], ScoreKind::Conductance), 1.0 / 11.0);
    }

    #[test]
    fn single_node_scores() {
        let g = barbell();
        let d = g.degree(3) as f64;
        assert_eq!(val(&g, &[3], ScoreKind::Conductance), 1.0);
        assert_eq!(val(&g, &[3], ScoreKind::Expansion), d);
        assert_eq!(val(&g, &[3], ScoreKind::EdgesCut), d);
        assert_eq!(val(&g, &[3], ScoreKind::InternalDensity), 1.0);
    }

    #[test]
    fn whole_graph_null_model_identities() {
        let g = barbell();
        let all: Vec<u32> = (0..10).collect();
        assert_eq!(val(&g, &all, ScoreKind::Modularity), 0.0);
        assert_eq!(val(&g, &all, ScoreKind::ModularityRatio), 1.0);
        assert_eq!(val(&g, &all, ScoreKind::Volume), g.total_volume() as f64);
        assert_eq!(val(&g, &all, ScoreKind::EdgesCut), 0.0);
    }

    #[test]
    fn barbell_k5_side_closed_forms() {
        let g = barbell();
        let side: Vec<u32> = (0..5).collect();
        assert_eq!(val(&g, &side, ScoreKind::Conductance), 1.0 / 21.0);
        assert_eq!(val(&g, &side, ScoreKind::Expansion), 1.0 / 5.0);
        assert_eq!(val(&g, &side, ScoreKind::CutRatio), 1.0 / 25.0);
        assert_eq!(val(&g, &side, ScoreKind::MaxODF), 1.0 / 5.0);
        assert_eq!(val(&g, &side, ScoreKind::AvgODF), 1.0 / 25.0);
        assert_eq!(val(&g, &side, ScoreKind::FlakeODF), 0.0);
        assert_eq!(val(&g, &side, ScoreKind::InternalDensity), 0.0);
    }

    #[test]
    fn k4_pair_normalized_cut() {
        // c=4, m_S=1, m=6: 4/(2+4) + 4/(10+4) = 2/3 + 2/7
        let g = complete_graph(4);
        let expect = 2.0 / 3.0 + 2.0 / 7.0;
        assert!((val(&g, &[0, 1], ScoreKind::NormalizedCut) - expect).abs() < 1e-15);
    }

    #[test]
    fn degenerate_cluster_errors() {
        let g = complete_graph(4);
        let all = g.cluster_stats(&[0, 1, 2, 3]).unwrap();
        assert!(score(&g, &all, ScoreKind::Conductance).is_err());
        assert!(score(&g, &all, ScoreKind::NormalizedCut).is_err());
        assert!(score(&g, &all, ScoreKind::CutRatio).is_err());
    }

    #[test]
    fn score_all_consistent_with_individual_calls() {
        let g = barbell();
        let c = g.cluster_stats(&[0, 1, 2, 3, 4]).unwrap();
        for (kind, res) in score_all(&g, &c) {
            let direct = score(&g, &c, kind).unwrap();
            assert_eq!(res.unwrap().value, direct.value);
        }
    }

    #[test]
    fn boundary_symmetric_kinds_agree_on_complement() {
        let g = barbell();
        let s = g.cluster_stats(&[7]).unwrap();
        let comp = s.complement(&g);
        for kind in [ScoreKind::Conductance, ScoreKind::CutRatio, ScoreKind::EdgesCut] {
            assert_eq!(
                score(&g, &s, kind).unwrap().value,
                score(&g, &comp, kind).unwrap().value
            );
        }
    }

    #[test]
    fn odf_aggregates_match_fraction_list() {
        let g = barbell();
        let s = g.cluster_stats(&[0, 1, 2, 3, 4]).unwrap();
        let fracs = out_degree_fractions(&g, &s).unwrap();
        let mut sorted = fracs.clone();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(sorted, vec![0.0, 0.0, 0.0, 0.0, 1.0 / 5.0]);
        assert_eq!(
            score(&g, &s, ScoreKind::MaxODF).unwrap().value,
            fracs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        );
        assert_eq!(
            score(&g, &s, ScoreKind::AvgODF).unwrap().value,
            fracs.iter().sum::<f64>() / fracs.len() as f64
        );
    }

    #[test]
    fn out_degree_fractions_all_zero_for_whole_graph() {
        let g = barbell();
        let s = g.cluster_stats(&(0..10).collect::<Vec<_>>()).unwrap();
        assert!(out_degree_fractions(&g, &s).unwrap().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn path_graph_avg_shortest_path() {
        let g = Graph::from_edge_pairs(&[(0, 1), (1, 2)]).unwrap();
        let s = g.cluster_stats(&[0, 1, 2]).unwrap();
        let asp = avg_shortest_path(&g, &s, 1000, 7).unwrap();
        assert!((asp - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn clique_avg_shortest_path_is_one() {
        let g = complete_graph(6);
        let s = g.cluster_stats(&(0..6).collect::<Vec<_>>()).unwrap();
        assert_eq!(avg_shortest_path(&g, &s, 1000, 7).unwrap(), 1.0);
    }

    #[test]
    fn exhaustive_matches_all_pairs_oracle_on_random_graph() {
        // deterministic pseudo-random connected graph on 20 nodes
        let mut pairs: Vec<(i64, i64)> = (1..20).map(|v| (v, (v * 7 + 3) % v)).collect();
        pairs.extend((0..15).map(|i| ((i * 13 + 5) % 20, (i * 17 + 11) % 20)));
        let g = Graph::from_edge_pairs(&pairs).unwrap();
        assert!(g.is_connected());
        let members: Vec<u32> = (0..20).collect();
        let s = g.cluster_stats(&members).unwrap();
        // oracle: full BFS from every node
        let mut sum = 0usize;
        for u in 0..20 {
            let dist = g.bfs_distances(u);
            for v in (u + 1)..20 {
                sum += dist[v];
            }
        }
        let oracle = sum as f64 / 190.0;
        assert_eq!(avg_shortest_path(&g, &s, 190, 1).unwrap(), oracle);
    }

    #[test]
    fn sampled_avg_shortest_path_is_deterministic() {
        let g = barbell();
        let s = g.cluster_stats(&(0..5).collect::<Vec<_>>()).unwrap();
        let a = avg_shortest_path(&g, &s, 4, 42).unwrap();
        let b = avg_shortest_path(&g, &s, 4, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disconnected_induced_subgraph_is_an_error() {
        let g = Graph::from_edge_pairs(&[(0, 1), (2, 3)]).unwrap();
        let s = g.cluster_stats(&[0, 1, 2, 3]).unwrap();
        assert!(matches!(
            avg_shortest_path(&g, &s, 10, 0),
            Err(Error::DisconnectedSubgraph)
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in ALL_SCORE_KINDS {
            assert_eq!(kind.to_string().parse::<ScoreKind>().unwrap(), kind);
        }
        assert!("Bogus".parse::<ScoreKind>().is_err());
    }

    /// Naive per-kind formulas over explicit edge sets.
    fn brute_score(g: &Graph, members: &[u32], kind: ScoreKind) -> Option<f64> {
        let n = g.node_count();
        let m = g.edge_count();
        let in_set = |u: u32| members.contains(&u);
        let m_s = g.edges().filter(|&(u, v)| in_set(u) && in_set(v)).count();
        let c_s = g.edges().filter(|&(u, v)| in_set(u) != in_set(v)).count();
        let vol: usize = members.iter().map(|&u| g.degree(u as usize)).sum();
        let n_s = members.len();
        let odf: Vec<f64> = members
            .iter()
            .map(|&u| {
                g.neighbors(u as usize).iter().filter(|&&v| !in_set(v)).count() as f64
                    / g.degree(u as usize) as f64
            })
            .collect();
        Some(match kind {
            ScoreKind::Conductance => c_s as f64 / (vol.min(2 * m - vol)) as f64,
            ScoreKind::Expansion => c_s as f64 / n_s as f64,
            ScoreKind::InternalDensity => {
                if n_s == 1 {
                    1.0
                } else {
                    1.0 - m_s as f64 / (n_s * (n_s - 1) / 2) as f64
                }
            }
            ScoreKind::CutRatio => c_s as f64 / (n_s * (n - n_s)) as f64,
            ScoreKind::NormalizedCut => {
                c_s as f64 / (2 * m_s + c_s) as f64 + c_s as f64 / (2 * (m - m_s) + c_s) as f64
            }
            ScoreKind::MaxODF => odf.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            ScoreKind::AvgODF => odf.iter().sum::<f64>() / n_s as f64,
            ScoreKind::FlakeODF => {
                odf.iter().filter(|&&x| x > 0.5).count() as f64 / n_s as f64
            }
            ScoreKind::Modularity => {
                (m_s as f64 - (vol * vol) as f64 / (4 * m) as f64) / (4 * m) as f64
            }
            ScoreKind::ModularityRatio => m_s as f64 / ((vol * vol) as f64 / (4 * m) as f64),
            ScoreKind::Volume => vol as f64,
            ScoreKind::EdgesCut => c_s as f64,
        })
    }

    proptest! {
        #[test]
        fn scores_match_brute_force_formulas(
            edges in proptest::collection::vec((0i64..12, 0i64..12), 3..40),
            picks in proptest::collection::vec(any::<bool>(), 12),
        ) {
            let Ok(g) = Graph::from_edge_pairs(&edges) else { return Ok(()); };
            let members: Vec<u32> = (0..g.node_count() as u32)
                .filter(|&u| picks[u as usize % picks.len()])
                .collect();
            if members.is_empty() || members.len() == g.node_count() {
                return Ok(());
            }
            if members.iter().any(|&u| g.degree(u as usize) == 0) {
                return Ok(());
            }
            let c = g.cluster_stats(&members).unwrap();
            for kind in ALL_SCORE_KINDS {
                let got = match score(&g, &c, kind) {
                    Ok(v) => v.value,
                    Err(_) => continue,
                };
                let want = brute_score(&g, &members, kind).unwrap();
                prop_assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0),
                    "{kind}: got {got}, want {want}");
            }
        }

        #[test]
        fn declared_ranges_hold(
            edges in proptest::collection::vec((0i64..10, 0i64..10), 3..30),
            picks in proptest::collection::vec(any::<bool>(), 10),
        ) {
            let Ok(g) = Graph::from_edge_pairs(&edges) else { return Ok(()); };
            let members: Vec<u32> = (0..g.node_count() as u32)
                .filter(|&u| picks[u as usize % picks.len()] && g.degree(u as usize) > 0)
                .collect();
            if members.is_empty() || members.len() == g.node_count() {
                return Ok(());
            }
            let c = g.cluster_stats(&members).unwrap();
            for (kind, lo, hi) in [
                (ScoreKind::Conductance, 0.0, 1.0),
                (ScoreKind::InternalDensity, 0.0, 1.0),
                (ScoreKind::NormalizedCut, 0.0, 2.0),
                (ScoreKind::MaxODF, 0.0, 1.0),
                (ScoreKind::AvgODF, 0.0, 1.0),
                (ScoreKind::FlakeODF, 0.0, 1.0),
            ] {
                if let Ok(v) = score(&g, &c, kind) {
                    prop_assert!(v.value >= lo - 1e-12 && v.value <= hi + 1e-12,
                        "{kind} out of range: {}", v.value);
                }
            }
        }
    }
}
