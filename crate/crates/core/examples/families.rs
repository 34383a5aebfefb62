//! Builds one member of each named circulant family and prints its
//! generators and independence complex size.

use serre::circulant::{cubic, omit_one, one_paired, plain_cycle, power_of_cycle, upper_interval};
use serre::SimplicialComplex;

fn main() -> serre::Result<()> {
    let members = [
        power_of_cycle(11, 2)?,
        upper_interval(10, 3)?,
        omit_one(9, 3)?,
        one_paired(12, 2, 3)?,
        cubic(16, 2)?,
        plain_cycle(7)?,
    ];
    for inst in members {
        let delta = SimplicialComplex::independence_complex(inst.graph.graph());
        println!(
            "{:<40} {:<14} facets {:>3}  pure {}",
            serde_json::to_string(&inst.params)?,
            inst.graph.to_string(),
            delta.facets().len(),
            delta.is_pure()
        );
    }
    Ok(())
}
