//! Lists the minimal lattice graphs for k = 2 and samples the maximum
//! minimal family for k = 3.

use crslab::extremal::{
    count_members_c, enumerate_minimal_b, enumerate_minimal_c, enumerate_q,
    DEFAULT_ENUMERATION_CAP, DEFAULT_Q_CAP,
};
use crslab::families::{complete_base, null_base};
use std::collections::BTreeMap;

fn main() -> crslab::Result<()> {
    for (name, base) in [("K", complete_base(2)?), ("null", null_base(2)?)] {
        let minimal = enumerate_minimal_b(&base, DEFAULT_ENUMERATION_CAP)?;
        println!(
            "ℬ_2 with {name} base: {} minimal lattice graphs",
            minimal.len()
        );
        for g in &minimal {
            let edges: Vec<String> = g.edge_labels().map(|(a, b)| format!("{a}-{b}")).collect();
            println!("  {}", edges.join(" "));
        }
    }

    let members = count_members_c(2, DEFAULT_ENUMERATION_CAP)?;
    let minimal = enumerate_minimal_c(2, DEFAULT_ENUMERATION_CAP)?;
    let mut sizes = BTreeMap::new();
    for g in &minimal {
        *sizes.entry(g.size()).or_insert(0) += 1;
    }
    println!(
        "𝒞_2: {members} members, {} minimal, by size {sizes:?}",
        minimal.len()
    );

    let q = enumerate_q(3, DEFAULT_Q_CAP)?;
    println!("𝒬_3: {:?} members of size {}", q.count(), q.member_size());
    if let Some(g) = q.nth(12_345) {
        println!("  member #12345 has {} edges", g.size());
    }
    Ok(())
}
