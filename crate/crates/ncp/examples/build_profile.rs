//! Assemble a network community profile: generate candidates with every
//! partitioner family, then take the per-size best-score envelope.
//!
//! Run with: `cargo run --example build_profile`

use std::fs::File;
use std::io::BufReader;

use ncp::baselines::{global_spectral_sweep, gn_dendrogram};
use ncp::flow::recursive_bisection_sample;
use ncp::local::{local_cluster, LocalParams};
use ncp::profile::{build_ncp, split_disconnected};
use ncp::scoring::ScoreKind;
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;

    let mut candidates = Vec::new();
    let params = LocalParams::default_for(&g);
    for seed_node in 0..g.node_count() {
        candidates.extend(local_cluster(&g, seed_node, &params)?);
    }
    candidates.extend(recursive_bisection_sample(&g, 42, 8, 0.02)?);
    candidates.extend(global_spectral_sweep(&g, 42)?);
    candidates.extend(gn_dendrogram(&g, 16)?.candidates);
    // flow-based sets may be disconnected; their components join the pool
    let mut candidates = split_disconnected(&g, candidates);
    println!("candidate pool: {}", candidates.len());

    let phi = build_ncp(&g, &mut candidates, ScoreKind::Conductance);
    println!("conductance envelope (size, phi, generator):");
    for (k, point) in phi.points() {
        println!(
            "  {k:>2}  {:.6}  {}",
            point.value,
            candidates[point.witness].generator
        );
    }
    let (best_k, best_phi) = phi.best().unwrap();
    println!("best: phi {best_phi:.6} at size {best_k}");

    // higher-is-better kinds build an upper envelope instead
    let q = build_ncp(&g, &mut candidates, ScoreKind::Modularity);
    let (qk, qv) = q.best().unwrap();
    println!("best modularity {qv:.6} at size {qk}");
    Ok(())
}
