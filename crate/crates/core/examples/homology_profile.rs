//! Reduced homology of the six-vertex projective plane, and how the Betti
//! numbers change with the coefficient field.

use serre::homology::{reduced_homology, FieldSpec};
use serre::theorems::projective_plane;

fn main() -> serre::Result<()> {
    let rp2 = projective_plane();
    let h = reduced_homology(&rp2)?;
    for g in h.dims() {
        println!("H~_{} = Z^{} torsion {:?}", g.i, g.rank, g.torsion);
    }
    for k in [0, 2, 3] {
        let k = FieldSpec::new(k)?;
        let betti: Vec<u64> = (-1..=h.top()).map(|i| h.betti(i, k)).collect();
        println!("char {}: {:?}", k.characteristic(), betti);
    }
    Ok(())
}
