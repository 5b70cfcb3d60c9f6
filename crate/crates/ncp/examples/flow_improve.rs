//! Flow-based quotient-cut improvement: trim a seed set to the
//! best-conductance subset it contains, via repeated max-flow.
//!
//! Run with: `cargo run --example flow_improve`

use std::fs::File;
use std::io::BufReader;

use ncp::flow::{mqi, FlowNetwork};
use ncp::scoring::{score, ScoreKind};
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    // a standalone max-flow instance: 4 inner nodes, source 0, sink 5
    let mut net = FlowNetwork::new(6);
    net.add_arc(0, 1, 10, 0)?;
    net.add_arc(0, 2, 10, 0)?;
    net.add_arc(1, 2, 2, 0)?;
    net.add_arc(1, 3, 4, 0)?;
    net.add_arc(1, 4, 8, 0)?;
    net.add_arc(2, 4, 9, 0)?;
    net.add_arc(4, 3, 6, 0)?;
    net.add_arc(3, 5, 10, 0)?;
    net.add_arc(4, 5, 10, 0)?;
    let flow = net.max_flow(0, 5)?;
    println!("max flow {} (min cut {:?})", flow, net.source_side(0));

    // quotient improvement on the toy graph: start from the near-clique
    // plus one extra attachment node and let the flow trim it
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/toy.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;
    let loose: Vec<u32> = [4, 5, 6, 7, 10]
        .iter()
        .map(|&id| g.node_of_original(id).unwrap() as u32)
        .collect();
    let start = g.cluster_stats(&loose)?;
    let phi_start = score(&g, &start, ScoreKind::Conductance)?.value;
    let improved = mqi(&g, &start)?;
    let phi_end = score(&g, &improved, ScoreKind::Conductance)?.value;
    println!(
        "mqi: {:?} phi {:.6} -> {:?} phi {:.6}",
        start.members(),
        phi_start,
        improved.members(),
        phi_end
    );
    Ok(())
}
