//! Compares Serre's condition at several levels with the connectivity test
//! for a few powers of cycles.

use serre::circulant::power_of_cycle;
use serre::classify::{is_s2, is_sr_terai, SerreLevel};
use serre::homology::FieldSpec;
use serre::SimplicialComplex;

fn main() -> serre::Result<()> {
    let q = FieldSpec::new(0)?;
    for (n, d) in [(6, 2), (7, 2), (8, 2), (11, 2), (12, 3), (15, 3)] {
        let g = power_of_cycle(n, d)?.graph;
        let delta = SimplicialComplex::independence_complex(g.graph());
        let levels: Vec<bool> = (1..=4)
            .map(|r| Ok(is_sr_terai(&delta, SerreLevel::new(r)?, q)?.holds))
            .collect::<serre::Result<_>>()?;
        println!("{:<12} connectivity S2 {:<5}  S1..S4 {:?}", g.to_string(), is_s2(&delta)?.holds, levels);
    }
    Ok(())
}
