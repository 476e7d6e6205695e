//! Writes one composite in every supported format and reads it back.

use crslab::families::{complete_base, compose, v_graph};
use crslab::io::{read_input, write_composite, write_graph, Format, Input};

fn main() -> crslab::Result<()> {
    let c = compose(&complete_base(2)?, &v_graph(2)?, 2, 2)?;
    let g = c.materialize();

    let compact = write_composite(&c, Format::Json);
    println!("compact composite JSON:\n{compact}");
    println!("graph6: {}", write_graph(&g, Format::G6).trim());
    println!("DOT:\n{}", write_graph(&g, Format::Dot));

    match read_input(&compact)? {
        Input::Composite(back) => assert_eq!(back.materialize(), g),
        Input::Graph(_) => unreachable!("compact form parses as a composite"),
    }
    let plain = read_input(&write_graph(&g, Format::G6))?.graph();
    println!(
        "graph6 round trip keeps {} vertices and {} edges",
        plain.order(),
        plain.size()
    );
    Ok(())
}
