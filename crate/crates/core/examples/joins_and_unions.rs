//! `S_2` is preserved by joins of complexes and disjoint unions of graphs,
//! while Buchsbaumness is lost when both sides fail to be Cohen-Macaulay.

use serre::circulant::CirculantGraph;
use serre::classify::{is_buchsbaum, is_s2};
use serre::homology::FieldSpec;
use serre::SimplicialComplex;

fn ind(n: usize, gens: &[usize]) -> serre::Result<(CirculantGraph, SimplicialComplex)> {
    let g = CirculantGraph::new(n, gens.iter().copied())?;
    let d = SimplicialComplex::independence_complex(g.graph());
    Ok((g, d))
}

fn main() -> serre::Result<()> {
    let q = FieldSpec::new(0)?;
    let (c7, d7) = ind(7, &[1])?;
    let (c5, d5) = ind(5, &[1])?;
    let join = d7.disjoint_join(&d5)?;
    println!("{c7} * {c5}: S2 {}", is_s2(&join)?.holds);

    let (c8, d8) = ind(8, &[1, 4])?;
    println!("{c8}: Buchsbaum {}  S2 {}", is_buchsbaum(&d8, q)?.holds, is_s2(&d8)?.holds);
    let union = c8.graph().disjoint_union(c8.graph())?;
    let du = SimplicialComplex::independence_complex(&union);
    println!("{c8} + {c8}: Buchsbaum {}  S2 {}", is_buchsbaum(&du, q)?.holds, is_s2(&du)?.holds);
    Ok(())
}
