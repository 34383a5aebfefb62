//! Component decomposition of cubic circulants with explicit isomorphisms.

use serre::circulant::{cubic, CirculantGraph};
use serre::theorems::{component_certificate, davis_domke};

fn main() -> serre::Result<()> {
    for (two_n, a) in [(16, 2), (20, 4), (24, 3), (18, 6)] {
        let (copies, m, gens) = davis_domke(two_n, a);
        let target = CirculantGraph::new(m, gens)?;
        let g = cubic(two_n, a)?.graph;
        let cert = component_certificate(two_n, a, &target)?;
        let ok = cert.as_ref().is_some_and(|c| c.recheck(g.graph()));
        println!("{g:<12} = {copies} x {target:<10} certified {ok}");
    }
    Ok(())
}
