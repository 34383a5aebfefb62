//! Every witness of a classification re-validated against the complex alone.

use serre::circulant::CirculantGraph;
use serre::classify::{classify_circulant, ClassifyOptions};
use serre::SimplicialComplex;

fn main() -> serre::Result<()> {
    for (n, gens) in [(6, vec![1, 3]), (9, vec![1, 2]), (16, vec![2, 8])] {
        let g = CirculantGraph::new(n, gens)?;
        let report = classify_circulant(&g, &ClassifyOptions::default())?;
        let delta = SimplicialComplex::independence_complex(g.graph());
        for w in &report.witnesses {
            println!("{g:<10} {:<5} {}", w.recheck(&delta, Some(g.graph()))?, serde_json::to_string(w)?);
        }
    }
    Ok(())
}
