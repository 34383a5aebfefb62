use std::collections::BTreeSet;

use crate::bits::VertexSet;
use crate::circulant::{
    cubic, omit_one, one_paired, plain_cycle, power_of_cycle, upper_interval, CirculantGraph, FamilyInstance,
};
use crate::complex::SimplicialComplex;

/// A named complex, with its graph when it is an independence complex.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub complex: SimplicialComplex,
    pub graph: Option<CirculantGraph>,
}

/// The six-vertex real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let tris = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2], [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4]];
    let facets: Vec<Vec<usize>> = tris.iter().map(|t| t.iter().map(|v| v - 1).collect()).collect();
    SimplicialComplex::from_vertex_lists(6, &facets).expect("valid triangulation")
}

/// Facets `{i, ..., i+d}` for `i = 0..n-d` on a line of `n` vertices.
pub fn interval_complex(n: usize, d: usize) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..n.saturating_sub(d)).map(|i| (i..=i + d).collect()).collect();
    SimplicialComplex::from_vertex_lists(n, &facets).expect("valid intervals")
}

/// Every family member on at most `max_n` vertices, without repeats.
pub fn family_instances(max_n: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend((1..=n / 2).filter_map(|d| power_of_cycle(n, d).ok()));
        out.extend((1..n).filter_map(|d| upper_interval(n, d).ok()));
        out.extend((1..=n / 2).filter_map(|i| omit_one(n, i).ok()));
        for a in 1..=n {
            out.extend((2..=n).filter_map(|b| one_paired(n, a, b).ok()));
        }
        out.extend((1..n / 2).filter_map(|a| cubic(n, a).ok()));
        out.extend(plain_cycle(n).ok());
    }
    let mut seen = BTreeSet::new();
    out.retain(|inst| seen.insert((inst.graph.n(), inst.graph.gens().to_vec())));
    out
}

/// The circulants of [`family_instances`] as graphs.
pub fn circulant_corpus(max_n: usize) -> Vec<CirculantGraph> {
    family_instances(max_n).into_iter().map(|i| i.graph).collect()
}

/// Hand-made complexes together with every family independence complex on
/// at most 12 vertices.
pub fn corpus() -> Vec<CorpusEntry> {
    let named = |name: &str, complex: SimplicialComplex| CorpusEntry { name: name.to_string(), complex, graph: None };
    let lists = |n: usize, f: &[&[usize]]| {
        SimplicialComplex::from_vertex_lists(n, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).expect("valid")
    };
    let mut out = vec![
        named("projective-plane", projective_plane()),
        named("interval-8-3", interval_complex(8, 3)),
        named("interval-6-1", interval_complex(6, 1)),
        named("two-edges", lists(4, &[&[0, 1], &[2, 3]])),
        named("two-triangles", lists(6, &[&[0, 1, 2], &[3, 4, 5]])),
        named("bowtie", lists(5, &[&[0, 1, 2], &[2, 3, 4]])),
        named("edge-and-point", lists(3, &[&[0, 1], &[2]])),
        named("simplex-4", SimplicialComplex::simplex(4, VertexSet::full(4)).expect("valid")),
        named("irrelevant", SimplicialComplex::irrelevant(1)),
        named("tetrahedron-boundary", lists(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])),
        named("cone-over-two-edges", lists(5, &[&[0, 1, 4], &[2, 3, 4]])),
        named("octahedron", lists(6, &[&[0, 1, 2], &[0, 1, 5], &[0, 4, 2], &[0, 4, 5], &[3, 1, 2], &[3, 1, 5], &[3, 4, 2], &[3, 4, 5]])),
        named("band", lists(6, &[&[0, 1, 3], &[1, 3, 4], &[1, 2, 4], &[2, 4, 5], &[0, 2, 5], &[0, 3, 5]])),
    ];
    for g in circulant_corpus(12) {
        out.push(CorpusEntry {
            name: g.to_string(),
            complex: SimplicialComplex::independence_complex(g.graph()),
            graph: Some(g),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_has_no_duplicate_circulants() {
        let gs = circulant_corpus(12);
        let set: BTreeSet<(usize, Vec<usize>)> = gs.iter().map(|g| (g.n(), g.gens().to_vec())).collect();
        assert_eq!(set.len(), gs.len());
        assert!(gs.iter().any(|g| g.n() == 8 && g.gens() == [1, 4]));
    }

    #[test]
    fn named_complexes_are_well_formed() {
        for e in corpus() {
            assert!(!e.complex.is_void(), "{}", e.name);
        }
        assert_eq!(projective_plane().facets().len(), 10);
        assert_eq!(interval_complex(8, 3).facets().len(), 5);
    }
}
