//! Exhaustive small-graph oracles: the exact profile by subset
//! enumeration and the branch-and-bound minimum-conductance search.
//!
//! Run with: `cargo run --example exact_oracle`

use std::fs::File;
use std::io::BufReader;

use ncp::profile::{exact_ncp, pruned_min_conductance};
use ncp::scoring::ScoreKind;
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

    // all 2^14 subsets of the toy graph
    let file = BufReader::new(File::open(format!("{dir}/toy.txt")).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;
    let (profile, witnesses) = exact_ncp(&g, ScoreKind::Conductance, 18, true)?;
    println!("exact conductance profile of the toy graph:");
    for (k, point) in profile.points() {
        let labels: Vec<i64> = witnesses[point.witness]
            .cluster
            .members()
            .iter()
            .map(|&u| g.original_id(u as usize))
            .collect();
        println!("  {k:>2}  {:.6}  witness {labels:?}", point.value);
    }

    // branch and bound over connected sets scales past enumeration
    let file = BufReader::new(File::open(format!("{dir}/karate.txt")).expect("bundled dataset"));
    let karate = Graph::load_edge_list(file, LoadOptions::default())?;
    let (phi, members) = pruned_min_conductance(&karate, f64::INFINITY)?;
    let labels: Vec<i64> = members
        .iter()
        .map(|&u| karate.original_id(u as usize))
        .collect();
    println!("karate exact minimum conductance {phi:.6}");
    println!("  witness (original labels) {labels:?}");
    Ok(())
}
