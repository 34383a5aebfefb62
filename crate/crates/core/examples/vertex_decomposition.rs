//! Vertex decomposability and shedding vertices on small complexes.

use serre::circulant::CirculantGraph;
use serre::classify::{is_shedding_vertex, is_vertex_decomposable, DEFAULT_BUDGET};
use serre::SimplicialComplex;

fn main() -> serre::Result<()> {
    for (n, gens) in [(5, vec![1]), (7, vec![1]), (8, vec![4]), (10, vec![2, 5])] {
        let g = CirculantGraph::new(n, gens)?;
        let delta = SimplicialComplex::independence_complex(g.graph());
        let shedding: Vec<usize> = (0..n).filter(|&v| is_shedding_vertex(&delta, v)).collect();
        println!(
            "{:<10} vd {:?}  shedding vertices {:?}",
            g.to_string(),
            is_vertex_decomposable(&delta, DEFAULT_BUDGET)?,
            shedding
        );
    }
    Ok(())
}
