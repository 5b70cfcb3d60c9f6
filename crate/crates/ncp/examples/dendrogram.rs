//! Divisive clustering by repeated edge-betweenness removal, recorded as
//! a dendrogram.
//!
//! Run with: `cargo run --example dendrogram`

use std::fs::File;
use std::io::BufReader;

use ncp::baselines::{edge_betweenness, gn_dendrogram};
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/toy.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;

    // betweenness concentrates on the three attachment edges
    let scores = edge_betweenness(&g);
    let mut ranked: Vec<((u32, u32), f64)> = g.edges().zip(scores).collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1));
    println!("highest-betweenness edges:");
    for ((u, v), s) in ranked.iter().take(3) {
        println!(
            "  ({}, {}) {:.2}",
            g.original_id(*u as usize),
            g.original_id(*v as usize),
            s
        );
    }

    let dendro = gn_dendrogram(&g, 3)?;
    println!("removal order: {:?}", dendro.removals);
    println!("tree: {}", dendro.tree);
    println!("split components as candidates:");
    for cand in &dendro.candidates {
        println!(
            "  k {} phi {:?} members {:?}",
            cand.cluster.node_count(),
            cand.conductance(),
            cand.cluster.members()
        );
    }
    Ok(())
}
