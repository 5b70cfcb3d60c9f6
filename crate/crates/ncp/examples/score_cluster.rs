//! Score node sets under the twelve cluster quality objectives.
//!
//! Run with: `cargo run --example score_cluster`

use std::fs::File;
use std::io::BufReader;

use ncp::scoring::{score_all, ALL_SCORE_KINDS};
use ncp::{Graph, LoadOptions};

fn load(path: &str) -> Graph {
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    Graph::load_edge_list(file, LoadOptions::default()).expect("well-formed edge list")
}

fn members(path: &str, g: &Graph) -> Vec<u32> {
    std::fs::read_to_string(path)
        .expect("bundled node set")
        .split_whitespace()
        .map(|t| {
            let id: i64 = t.parse().expect("node id");
            g.node_of_original(id).expect("node in graph") as u32
        })
        .collect()
}

fn main() -> ncp::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let g = load(&format!("{dir}/toy.txt"));
    let set_a = members(&format!("{dir}/toy_set_a.txt"), &g);
    let set_b = members(&format!("{dir}/toy_set_b.txt"), &g);

    println!("{} kinds: {:?}", ALL_SCORE_KINDS.len(), ALL_SCORE_KINDS);
    for (name, m) in [("A", &set_a), ("B", &set_b)] {
        let cluster = g.cluster_stats(m)?;
        println!(
            "\nset {name} = {:?} (k={} mS={} cS={})",
            cluster.members(),
            cluster.node_count(),
            cluster.internal_edges(),
            cluster.boundary_edges()
        );
        for (kind, value) in score_all(&g, &cluster) {
            match value {
                Ok(v) => println!("  {kind:<16} {:.6}", v.value),
                Err(e) => println!("  {kind:<16} not applicable ({e})"),
            }
        }
    }
    Ok(())
}
