use std::ops::ControlFlow;

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;

use super::serre::{is_orbit_rep, LinkHomologyCache};
use super::{Verdict, Witness};

/// Reisner-criterion results for a list of characteristics.
#[derive(Clone, Debug)]
pub struct ReisnerScan {
    pub chars: Vec<FieldSpec>,
    pub cohen_macaulay: Vec<Verdict>,
    pub buchsbaum: Vec<Verdict>,
    /// Integral homology of every link vanishes below its dimension.
    pub cohen_macaulay_all_fields: Verdict,
}

pub fn is_cohen_macaulay(delta: &SimplicialComplex, k: FieldSpec) -> Result<Verdict> {
    Ok(reisner_scan(delta, &[k], None, true)?.cohen_macaulay.remove(0))
}

pub fn is_cohen_macaulay_all_fields(delta: &SimplicialComplex) -> Result<Verdict> {
    Ok(reisner_scan(delta, &[], None, true)?.cohen_macaulay_all_fields)
}

/// Pure, with every vertex link Cohen–Macaulay over `k`.
pub fn is_buchsbaum(delta: &SimplicialComplex, k: FieldSpec) -> Result<Verdict> {
    Ok(reisner_scan(delta, &[k], None, true)?.buchsbaum.remove(0))
}

/// Checks every face link once for all characteristics in `chars`.
///
/// With `rotation = Some(n)` only orbit representatives are visited. With
/// `factorize`, joins are split and their factors decided separately.
pub fn reisner_scan(
    delta: &SimplicialComplex,
    chars: &[FieldSpec],
    rotation: Option<usize>,
    factorize: bool,
) -> Result<ReisnerScan> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(n) = rotation {
        if !delta.rotation_invariant(n) {
            return Err(Error::NotRotationInvariant(n));
        }
    }
    if factorize && delta.is_pure() {
        let factors = delta.join_factors();
        if factors.len() > 1 {
            return join_scan(delta, &factors, chars);
        }
    }
    raw_scan(delta, chars, rotation)
}

fn join_scan(delta: &SimplicialComplex, factors: &[SimplicialComplex], chars: &[FieldSpec]) -> Result<ReisnerScan> {
    let scans = factors
        .iter()
        .map(|f| raw_scan(f, chars, None))
        .collect::<Result<Vec<_>>>()?;
    let lift = |idx: usize, v: &Verdict| -> Verdict {
        let Some(Witness::NonvanishingLinkHomology { face, dimension, characteristic, serre_level }) = &v.witness else {
            return v.clone();
        };
        let rest = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .fold(VertexSet::EMPTY, |acc, (_, f)| acc.union(f.facets()[0]));
        Verdict::fail(Witness::NonvanishingLinkHomology {
            face: face.union(rest),
            dimension: *dimension,
            characteristic: *characteristic,
            serre_level: *serre_level,
        })
    };
    let combine = |pick: &dyn Fn(&ReisnerScan) -> &Verdict| -> Verdict {
        scans
            .iter()
            .enumerate()
            .find(|(_, s)| !pick(s).holds)
            .map_or(Verdict::HOLDS, |(i, s)| lift(i, pick(s)))
    };
    let cohen_macaulay: Vec<Verdict> = (0..chars.len()).map(|j| combine(&|s| &s.cohen_macaulay[j])).collect();
    debug_assert!(delta.facets().len() > 1);
    Ok(ReisnerScan {
        chars: chars.to_vec(),
        buchsbaum: cohen_macaulay.clone(),
        cohen_macaulay,
        cohen_macaulay_all_fields: combine(&|s| &s.cohen_macaulay_all_fields),
    })
}

fn raw_scan(delta: &SimplicialComplex, chars: &[FieldSpec], rotation: Option<usize>) -> Result<ReisnerScan> {
    let mut scan = ReisnerScan {
        chars: chars.to_vec(),
        cohen_macaulay: vec![Verdict::HOLDS; chars.len()],
        buchsbaum: vec![Verdict::HOLDS; chars.len()],
        cohen_macaulay_all_fields: Verdict::HOLDS,
    };
    if let Some((smaller, larger)) = delta.impure_pair() {
        let v = Verdict::fail(Witness::ImpureFacetPair { smaller, larger });
        scan.cohen_macaulay.fill(v.clone());
        scan.buchsbaum.fill(v.clone());
        scan.cohen_macaulay_all_fields = v;
        return Ok(scan);
    }
    let size = delta.facets()[0].len();
    if size < 2 {
        return Ok(scan);
    }
    let mut cache = LinkHomologyCache::default();
    let res = delta.for_each_face_upto(size - 2, |face, containing| {
        if rotation.is_some_and(|n| !is_orbit_rep(face, n)) {
            return ControlFlow::Continue(());
        }
        let cone = containing.iter().fold(!VertexSet::EMPTY.bits(), |acc, g| acc & g.bits());
        if VertexSet::from_bits(cone) != face {
            return ControlFlow::Continue(());
        }
        let dl = (size - face.len()) as isize - 1;
        let profile = match cache.get(containing, face, dl - 1) {
            Ok(p) => p,
            Err(e) => return ControlFlow::Break(Err(e)),
        };
        for (j, &k) in chars.iter().enumerate() {
            let open_cm = scan.cohen_macaulay[j].holds;
            let open_b = scan.buchsbaum[j].holds && !face.is_empty();
            if !open_cm && !open_b {
                continue;
            }
            if let Some(i) = (-1..dl).find(|&i| profile.betti(i, k) > 0) {
                let v = Verdict::fail(Witness::NonvanishingLinkHomology {
                    face,
                    dimension: i,
                    characteristic: k.characteristic(),
                    serre_level: None,
                });
                if open_cm {
                    scan.cohen_macaulay[j] = v.clone();
                }
                if open_b {
                    scan.buchsbaum[j] = v;
                }
            }
        }
        if scan.cohen_macaulay_all_fields.holds {
            let bad = (-1..dl).find_map(|i| {
                if profile.free_rank(i) > 0 {
                    Some((i, 0))
                } else {
                    profile.torsion(i).first().map(|&t| (i, smallest_prime_factor(t)))
                }
            });
            if let Some((i, p)) = bad {
                scan.cohen_macaulay_all_fields = Verdict::fail(Witness::NonvanishingLinkHomology {
                    face,
                    dimension: i,
                    characteristic: p,
                    serre_level: None,
                });
            }
        }
        let done = !scan.cohen_macaulay_all_fields.holds && scan.buchsbaum.iter().all(|v| !v.holds);
        if done {
            ControlFlow::Break(Ok(()))
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(Err(e)) = res {
        return Err(e);
    }
    Ok(scan)
}

fn smallest_prime_factor(t: u64) -> u32 {
    (2..).take_while(|d| d * d <= t).find(|d| t.is_multiple_of(*d)).unwrap_or(t) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantGraph;
    use crate::homology::tests::projective_plane;

    fn ind(n: usize, gens: &[usize]) -> SimplicialComplex {
        SimplicialComplex::independence_complex(CirculantGraph::new(n, gens.iter().copied()).unwrap().graph())
    }

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    #[test]
    fn c4_1_2_is_cm_everywhere() {
        let d = ind(4, &[1, 2]);
        assert!(is_cohen_macaulay_all_fields(&d).unwrap().holds);
        for k in [0, 2, 3, 5] {
            assert!(is_cohen_macaulay(&d, FieldSpec::new(k).unwrap()).unwrap().holds);
        }
    }

    #[test]
    fn seven_cycle_is_not_cm() {
        let d = ind(7, &[1]);
        let v = is_cohen_macaulay(&d, q()).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().recheck(&d, None).unwrap());
    }

    #[test]
    fn simplex_is_cm() {
        let d = SimplicialComplex::simplex(5, VertexSet::full(5)).unwrap();
        assert!(is_cohen_macaulay_all_fields(&d).unwrap().holds);
        assert!(is_buchsbaum(&d, q()).unwrap().holds);
    }

    #[test]
    fn buchsbaum_examples() {
        assert!(is_buchsbaum(&ind(8, &[1, 4]), q()).unwrap().holds);
        assert!(is_buchsbaum(&ind(8, &[1, 2, 3]), q()).unwrap().holds);
        assert!(!is_cohen_macaulay(&ind(8, &[1, 2, 3]), q()).unwrap().holds);
        let d = ind(16, &[2, 8]);
        let v = is_buchsbaum(&d, q()).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().recheck(&d, None).unwrap());
    }

    #[test]
    fn factorized_and_raw_agree() {
        let chars = [0, 2, 3].map(|k| FieldSpec::new(k).unwrap());
        for (n, gens) in [(16, vec![2, 8]), (8, vec![4]), (12, vec![2, 6]), (12, vec![4, 6]), (10, vec![2, 5])] {
            let d = ind(n, &gens);
            let a = reisner_scan(&d, &chars, None, true).unwrap();
            let b = reisner_scan(&d, &chars, Some(n), false).unwrap();
            for j in 0..chars.len() {
                assert_eq!(a.cohen_macaulay[j].holds, b.cohen_macaulay[j].holds, "C{n}{gens:?}");
                assert_eq!(a.buchsbaum[j].holds, b.buchsbaum[j].holds, "C{n}{gens:?}");
            }
            assert_eq!(a.cohen_macaulay_all_fields.holds, b.cohen_macaulay_all_fields.holds);
            for v in a.cohen_macaulay.iter().chain(&a.buchsbaum) {
                if let Some(w) = &v.witness {
                    assert!(w.recheck(&d, None).unwrap());
                }
            }
        }
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let d = projective_plane();
        assert!(is_cohen_macaulay(&d, q()).unwrap().holds);
        assert!(is_cohen_macaulay(&d, FieldSpec::new(3).unwrap()).unwrap().holds);
        let v = is_cohen_macaulay(&d, FieldSpec::new(2).unwrap()).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().recheck(&d, None).unwrap());
        let all = is_cohen_macaulay_all_fields(&d).unwrap();
        assert!(!all.holds);
        assert!(all.witness.unwrap().recheck(&d, None).unwrap());
    }
}
