//! Multilevel bisection and the recursive sampling partitioner built on
//! top of it.
//!
//! Run with: `cargo run --example bisect_and_sample`

use std::fs::File;
use std::io::BufReader;

use ncp::flow::{bisect, recursive_bisection_sample};
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/barbell.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;

    // volume-balanced split; the bridge edge is the natural cut
    let split = bisect(&g, 42, 0.02)?;
    println!(
        "bisection: cut {} sides {:?} / {:?}",
        split.cut_edges,
        split.side_a.members(),
        split.side_b.members()
    );

    // recursive splits with quotient improvement at every tree node;
    // trials differ only in the coarsening shuffle
    let candidates = recursive_bisection_sample(&g, 42, 4, 0.02)?;
    let best = candidates
        .iter()
        .min_by(|a, b| {
            a.conductance()
                .unwrap_or(f64::INFINITY)
                .total_cmp(&b.conductance().unwrap_or(f64::INFINITY))
        })
        .expect("sampler yields candidates");
    println!(
        "sampler: {} candidates, best phi {:.6} = {:?}",
        candidates.len(),
        best.conductance().unwrap(),
        best.cluster.members()
    );
    Ok(())
}
