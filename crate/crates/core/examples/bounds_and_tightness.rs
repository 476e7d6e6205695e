//! Edge-count bounds for minimal lattice graphs and which graphs meet them.

use crslab::extremal::{bounds_b, bounds_c, tightness_b, tightness_c};
use crslab::families::{
    complete_base, null_base, p2_box, q_canon, r_graph, t_graph, u_graph, v_graph,
};

fn main() -> crslab::Result<()> {
    for k in 2..=5 {
        let b = bounds_c(k)?;
        println!(
            "𝒞_{k}: minimal lattice graphs have between {} and {} edges",
            b.lower, b.upper
        );
    }
    for k in 2..=4 {
        let b = bounds_b(&null_base(k)?)?;
        println!(
            "ℬ_{k} with null base: between {} and {} edges",
            b.lower, b.upper
        );
    }

    let cases = [
        ("U_2 over K", complete_base(2)?, u_graph(2)?),
        ("V_2 over K", complete_base(2)?, v_graph(2)?),
        ("R_3 over null", null_base(3)?, r_graph(3)?),
        ("P2^□3 over null", null_base(3)?, p2_box(3)?),
    ];
    for (name, base, lattice) in cases {
        let r = tightness_b(&base, &lattice)?;
        println!(
            "{name}: {} edges in [{}, {}], lower tight {:?}, upper tight {:?}",
            lattice.size(),
            r.lower,
            r.upper,
            r.lower_tight,
            r.upper_tight
        );
    }
    for (name, lattice) in [("T_3", t_graph(3)?), ("Q canonical, k = 3", q_canon(3)?)] {
        let r = tightness_c(&lattice)?;
        println!(
            "{name}: {} edges, lower tight {:?}, upper tight {:?}",
            lattice.size(),
            r.lower_tight,
            r.upper_tight
        );
    }
    Ok(())
}
