use serde::{Deserialize, Serialize};

use crate::bits::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple undirected graph on `0..n` stored as bit-vector adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// A maximal connected piece of a graph, relabelled to `0..k`.
///
/// `vertices[j]` is the original label of vertex `j` of `graph`; labels are
/// ascending, so the cyclic order of a circulant is preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParams(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Edge list as `u,v` CSV rows.
    pub fn edges_csv(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u},{v}\n"));
        }
        s
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n).map(|v| full.difference(self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Places `other` on the vertices `self.n()..self.n() + other.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| VertexSet::from_bits(a.bits() << shift)));
        Ok(Graph { n, adj })
    }

    /// Induced subgraph on `vertices`, relabelled by position in the slice.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = [usize::MAX; 64];
        for (j, &v) in vertices.iter().enumerate() {
            pos[v] = j;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&w| pos[w] != usize::MAX)
                    .map(|w| pos[w])
                    .collect()
            })
            .collect();
        Graph { n: vertices.len(), adj }
    }

    /// Components ordered by their smallest original vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut block = VertexSet::singleton(start);
            let mut frontier = block;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v]);
                }
                frontier = next.difference(block);
                block = block.union(frontier);
            }
            seen = seen.union(block);
            let vertices = block.to_vec();
            let graph = self.induced(&vertices);
            out.push(Component { vertices, graph });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}
