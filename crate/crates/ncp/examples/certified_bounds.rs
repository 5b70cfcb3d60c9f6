//! Certified conductance lower bounds: the spectral bound for cuts of any
//! balance and the SDP bound for volume-balanced cuts, both verified by an
//! independent checker.
//!
//! Run with: `cargo run --release --example certified_bounds`

use std::fs::File;
use std::io::BufReader;

use ncp::bounds::{bounds_report, verify_sdp, verify_spectral};
use ncp::{Graph, LoadOptions};

fn main() -> ncp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.txt");
    let file = BufReader::new(File::open(path).expect("bundled dataset"));
    let g = Graph::load_edge_list(file, LoadOptions::default())?;

    let report = bounds_report(&g, "karate", 42)?;
    println!(
        "spectral: lambda2 {:.6} bound {:.6} residual {:.2e}",
        report.spectral.lambda2, report.spectral.bound, report.spectral.residual
    );
    println!(
        "sdp: primal {:.6} dual {:.6} bound {:.6} lambda_min {:.2e}",
        report.sdp.primal_value, report.sdp.dual_value, report.sdp.bound, report.sdp.lambda_min
    );
    println!("ratio {:.6} certified {}", report.ratio, report.certified);

    // the checker recomputes everything from the certificate alone
    verify_spectral(&g, &report.spectral)?;
    verify_sdp(&g, &report.sdp)?;
    println!("independent verification passed");

    // inflating the dual must be caught
    let mut forged = report.sdp.clone();
    forged.dual_diag[0] += 0.5;
    forged.dual_value += 0.5;
    forged.bound = 2.0 * forged.dual_value / g.total_volume() as f64;
    println!(
        "forged certificate rejected: {}",
        verify_sdp(&g, &forged).is_err()
    );
    Ok(())
}
