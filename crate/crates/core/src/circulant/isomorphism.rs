use crate::bits::VertexSet;
use crate::error::{Error, Result};

use super::Graph;

/// Default vertex limit for [`graphs_isomorphic`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 16;

/// Searches for an isomorphism `g -> h`; `Some(map)` sends vertex `v` of `g`
/// to `map[v]` in `h`.
pub fn graphs_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    graphs_isomorphic_within(g, h, ISOMORPHISM_VERTEX_LIMIT)
}

/// [`graphs_isomorphic`] with an explicit vertex limit.
pub fn graphs_isomorphic_within(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    for n in [g.n(), h.n()] {
        if n > limit {
            return Err(Error::IsomorphismBudget { n, limit });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (lg, lh) = (labels(g), labels(h));
    let mut sg = lg.clone();
    let mut sh = lh.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return Ok(None);
    }

    let order = search_order(g);
    let mut map = vec![usize::MAX; g.n()];
    let mut search = Search { g, h, lg: &lg, lh: &lh, order: &order, map: &mut map };
    if search.extend(0, VertexSet::EMPTY, VertexSet::EMPTY) {
        debug_assert!(is_isomorphism(g, h, &map));
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Checks that `map` is a bijection preserving adjacency and non-adjacency.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.n() != h.n() || map.len() != g.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &w in map {
        if w >= h.n() || seen.contains(w) {
            return false;
        }
        seen.insert(w);
    }
    g.edges().into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// Degree followed by the sorted neighbour degrees.
fn labels(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut l: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            l.sort_unstable();
            l.insert(0, g.degree(v));
            l
        })
        .collect()
}

/// Breadth-first order so each new vertex is constrained by mapped neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut placed = VertexSet::EMPTY;
    for comp in g.connected_components() {
        let root = *comp.vertices.iter().max_by_key(|&&v| g.degree(v)).unwrap();
        let mut queue = std::collections::VecDeque::from([root]);
        placed.insert(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v).difference(placed).iter() {
                placed.insert(w);
                queue.push_back(w);
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    lg: &'a [Vec<usize>],
    lh: &'a [Vec<usize>],
    order: &'a [usize],
    map: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, domain: VertexSet, image: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let wanted: VertexSet = self.g.neighbors(v).intersection(domain).iter().map(|u| self.map[u]).collect();
        for c in VertexSet::full(self.h.n()).difference(image).iter() {
            if self.lh[c] != self.lg[v] || self.h.neighbors(c).intersection(image) != wanted {
                continue;
            }
            self.map[v] = c;
            if self.extend(depth + 1, domain.with(v), image.with(c)) {
                return true;
            }
        }
        self.map[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantGraph;

    #[test]
    fn components_of_c16_2_8_match_c8_1_4() {
        let big = CirculantGraph::new(16, [2, 8]).unwrap();
        let small = CirculantGraph::new(8, [1, 4]).unwrap();
        let comps = big.graph().connected_components();
        assert_eq!(comps.len(), 2);
        for c in comps {
            let map = graphs_isomorphic(&c.graph, small.graph()).unwrap().unwrap();
            assert!(is_isomorphism(&c.graph, small.graph(), &map));
        }
    }

    #[test]
    fn c6_1_3_differs_from_c6_2_3() {
        let a = CirculantGraph::new(6, [1, 3]).unwrap();
        let b = CirculantGraph::new(6, [2, 3]).unwrap();
        assert_eq!(graphs_isomorphic(a.graph(), b.graph()).unwrap(), None);
    }

    #[test]
    fn self_isomorphism_exists() {
        let g = CirculantGraph::new(12, [1, 5]).unwrap();
        let map = graphs_isomorphic(g.graph(), g.graph()).unwrap().unwrap();
        assert!(is_isomorphism(g.graph(), g.graph(), &map));
    }

    #[test]
    fn budget_guard() {
        let g = CirculantGraph::new(17, [1]).unwrap();
        assert!(matches!(
            graphs_isomorphic(g.graph(), g.graph()),
            Err(Error::IsomorphismBudget { n: 17, limit: 16 })
        ));
        assert!(graphs_isomorphic_within(g.graph(), g.graph(), 24).unwrap().is_some());
    }

    #[test]
    fn rejects_non_bijection() {
        let g = CirculantGraph::new(4, [1]).unwrap();
        assert!(!is_isomorphism(g.graph(), g.graph(), &[0, 0, 1, 2]));
        assert!(!is_isomorphism(g.graph(), g.graph(), &[0, 2, 1, 3]));
    }
}
