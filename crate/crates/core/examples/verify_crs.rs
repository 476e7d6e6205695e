//! Checks a proposed completeness-resolving set and prints the certificate,
//! then shows a failing choice of `W`.

use crslab::families::{compose, null_base, q_canon};
use crslab::resolving::{check_crs, find_all_crs};
use crslab::VertexLabel;

fn main() -> crslab::Result<()> {
    let g = compose(&null_base(2)?, &q_canon(2)?, 2, 3)?.materialize();
    let w = [VertexLabel::Base(1), VertexLabel::Base(2)];

    match check_crs(&g, &w)? {
        Ok(cert) => {
            println!("W = {{b1, b2}} is a CRS with m = {}", cert.m());
            for (u, x) in cert.table() {
                println!("  {u} ↦ {x}");
            }
        }
        Err(failure) => println!("unexpected failure: {failure:?}"),
    }

    let bad = [VertexLabel::Base(1), VertexLabel::lattice(&[1, 1])];
    if let Err(failure) = check_crs(&g, &bad)? {
        println!("W = {{b1, (1,1)}} fails: {failure:?}");
    }

    let all = find_all_crs(&g)?;
    println!("{} CRS found in total", all.len());
    Ok(())
}
