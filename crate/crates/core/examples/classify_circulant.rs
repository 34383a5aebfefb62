//! Classifies a circulant given on the command line, e.g.
//! `cargo run --example classify_circulant -- 10 2 5`.

use serre::circulant::CirculantGraph;
use serre::classify::{classify_circulant, ClassifyOptions};

fn main() -> serre::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, gens) = match args.split_first() {
        Some((&n, gens)) => (n, gens.to_vec()),
        None => (16, vec![2, 8]),
    };
    let g = CirculantGraph::new(n, gens)?;
    let r = classify_circulant(&g, &ClassifyOptions::default())?;
    println!("{g}: {} facets, dim {}", r.facets, r.dim);
    println!("well-covered {}  S2 {}", r.well_covered, r.s2);
    println!("Cohen-Macaulay {:?}", r.cohen_macaulay.by_char);
    println!("Buchsbaum      {:?}", r.buchsbaum);
    println!("shellable {:?}  vertex decomposable {:?}", r.shellable, r.vertex_decomposable);
    for w in &r.witnesses {
        println!("  witness {}", serde_json::to_string(w)?);
    }
    Ok(())
}
