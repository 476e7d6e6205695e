//! Classifies small graphs as completeness-resolvable or not and reports
//! metric dimension alongside.
//!
//! Pass graph6 strings on the command line to classify your own graphs.

use crslab::graph::graph6::from_graph6;
use crslab::resolving::{is_completeness_resolvable, metric_dimension};

fn main() -> crslab::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        // P4, K_{1,3}, C5, K4
        inputs = ["Ch", "Cs", "Dhc", "C~"].map(String::from).to_vec();
    }
    for text in inputs {
        let g = from_graph6(&text)?;
        let class = is_completeness_resolvable(&g)?;
        let basis = metric_dimension(&g)?;
        println!(
            "{text:>6}: n = {}, verdict {:?}, dim = {}",
            g.order(),
            class.verdict,
            basis.dimension
        );
        if let Some(cert) = class.witness {
            println!("        witness W = {:?}, m = {}", cert.w(), cert.m());
        }
    }
    Ok(())
}
