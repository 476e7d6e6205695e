//! Builds the named lattice graphs and composites and checks membership.
//!
//! ```text
//! cargo run --example construct_families -- 3
//! ```

use crslab::families::{
    complete_base, compose, max_b, max_c, member_b, member_c, null_base, p2_box, q_canon, r_graph,
    t_graph, u_graph, v_graph,
};

fn main() -> crslab::Result<()> {
    let k: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);

    println!("lattice graphs on [2]^{k}");
    let complete = complete_base(k)?;
    let null = null_base(k)?;
    for (name, lattice) in [("U", u_graph(k)?), ("V", v_graph(k)?)] {
        let report = member_b(&complete, &lattice)?;
        println!(
            "  {name}_{k}: {} edges, in ℬ with K base: {}",
            lattice.size(),
            report.member
        );
    }
    for (name, lattice) in [("R", r_graph(k)?), ("P2 box power", p2_box(k)?)] {
        let report = member_b(&null, &lattice)?;
        println!(
            "  {name}: {} edges, in ℬ with null base: {}",
            lattice.size(),
            report.member
        );
    }

    println!("lattice graphs on [3]^{k}");
    for (name, lattice) in [("T", t_graph(k)?), ("Q canonical", q_canon(k)?)] {
        println!(
            "  {name}: {} edges, in 𝒞: {}",
            lattice.size(),
            member_c(&lattice)?.member
        );
    }

    let u = compose(&complete, &u_graph(k)?, k, 2)?;
    let g = u.materialize();
    println!(
        "K ∘ U_{k}: order {}, size {}, cross edges {}",
        g.order(),
        g.size(),
        u.cross_edge_count()
    );
    for c in [max_b(k)?, max_c(k)?] {
        println!(
            "maximal composite with m = {}: {} edges",
            c.m(),
            c.edge_count()
        );
    }
    Ok(())
}
