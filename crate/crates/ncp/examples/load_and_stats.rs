//! Load an edge list and print basic graph statistics.
//!
//! Run with: `cargo run --example load_and_stats`

use std::fs::File;
use std::io::BufReader;

use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;

    let n = g.node_count();
    let degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    println!("nodes      {}", n);
    println!("edges      {}", g.edge_count());
    println!("volume     {}", g.total_volume());
    println!("components {}", g.components().len());
    println!(
        "degrees    min {} max {} avg {:.3}",
        degrees.iter().min().unwrap(),
        degrees.iter().max().unwrap(),
        g.total_volume() as f64 / n as f64
    );

    // node ids are remapped to a dense 0..n space; original labels survive
    let hub = (0..n).max_by_key(|&u| g.degree(u)).unwrap();
    println!(
        "hub        internal id {} = original label {} with degree {}",
        hub,
        g.original_id(hub),
        g.degree(hub)
    );

    // whole-graph statistics of a node subset
    let members: Vec<u32> = (0..5).collect();
    let c = g.cluster_stats(&members)?;
    println!(
        "subset {:?}: internal {} boundary {} volume {}",
        c.members(),
        c.internal_edges(),
        c.boundary_edges(),
        c.volume()
    );
    Ok(())
}
