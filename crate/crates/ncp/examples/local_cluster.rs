//! Seeded local clustering: personalized PageRank push plus a conductance
//! sweep, then the full parameter-grid search around one seed.
//!
//! Run with: `cargo run --example local_cluster`

use std::fs::File;
use std::io::BufReader;

use ncp::local::{local_cluster, ppr_push, sweep, LocalParams};
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/toy.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;

    // one diffusion: mass settles near the seed, residuals stay below
    // epsilon * degree
    let seed = g.node_of_original(4)?;
    let dv = ppr_push(&g, seed, 0.1, 1e-4)?;
    println!("diffusion from node {seed} (alpha 0.1, eps 1e-4)");
    println!("  conservation {:.12}", dv.conservation());
    for (u, p) in dv.support().iter().take(6) {
        println!("  p({u}) = {p:.5}");
    }

    // sweep prefixes ranked by p(u)/d(u)
    let swept = sweep(&g, &dv)?;
    println!("sweep order {:?}", swept.ordering);
    let best = &swept.prefixes[swept.best_index];
    println!(
        "best prefix size {} phi {:.6} members {:?}",
        best.size,
        best.conductance,
        best.cluster.members()
    );

    // the grid search emits every connected prefix as a candidate
    let params = LocalParams::default_for(&g);
    let mut candidates = local_cluster(&g, seed, &params)?;
    candidates.sort_by(|a, b| {
        a.conductance()
            .unwrap_or(f64::INFINITY)
            .total_cmp(&b.conductance().unwrap_or(f64::INFINITY))
    });
    println!("grid search: {} candidates, best three:", candidates.len());
    for cand in candidates.iter().take(3) {
        println!(
            "  phi {:.6} k {} params [{}] members {:?}",
            cand.conductance().unwrap(),
            cand.cluster.node_count(),
            cand.params,
            cand.cluster.members()
        );
    }
    Ok(())
}
