//! Simple undirected graphs on at most 64 vertices.
//!
//! A [`Graph`] stores one adjacency bitmask per vertex, which keeps every
//! neighbourhood query a single word operation. Graphs are immutable: edge
//! surgery returns a new graph.

mod distance;
mod families;
mod graph6;
mod set;

pub use distance::{all_pairs_distances, DistanceMatrix, INFINITY};
pub use families::{generate, Family, FamilySpec};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_VERTICES};
pub use set::{k_subsets, Iter as VertexSetIter, VertexSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Size(format!(
                "{n} vertices requested, at most {MAX_VERTICES} supported"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Argument(format!(
                "edge {{{u},{v}}} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Argument(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_from(&self, start: usize, blocked: VertexSet) -> VertexSet {
        let allowed = self.vertices().difference(blocked);
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, each in
    /// order of smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let blocked = self.vertices().difference(within);
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable_from(v, blocked);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_from(0, VertexSet::EMPTY) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Subgraph induced on `vs`, relabelled `0..|vs|` in ascending id order.
    /// The returned vector maps new ids back to old ones.
    pub fn induced_subgraph(&self, vs: VertexSet) -> (Graph, Vec<usize>) {
        let ids = vs.to_vec();
        let mut local = [u8::MAX; MAX_VERTICES];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i as u8;
        }
        let mut adj = vec![0u64; ids.len()];
        for (i, &v) in ids.iter().enumerate() {
            for w in self.neighbors(v).intersection(vs) {
                adj[i] |= 1 << local[w];
            }
        }
        (Graph { n: ids.len(), adj }, ids)
    }

    /// Relabels vertex `v` as `image[v]`.
    pub fn relabel(&self, image: &[usize]) -> Result<Graph> {
        if image.len() != self.n {
            return Err(Error::Argument("relabelling has wrong length".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &w in image {
            if w >= self.n || seen.contains(w) {
                return Err(Error::Argument("relabelling is not a bijection".into()));
            }
            seen = seen.with(w);
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (image[u], image[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// A copy with the edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if self.has_edge(u, v) {
            return Err(Error::Argument(format!("{{{u},{v}}} is already an edge")));
        }
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// A copy with the edge `{u, v}` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::Argument(format!("{{{u},{v}}} is not an edge")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Replaces the edge `{u, v}` by a path `u - n - v` through a new vertex `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let g = self.delete_edge(u, v)?;
        if g.n == MAX_VERTICES {
            return Err(Error::Size("no room for a subdivision vertex".into()));
        }
        let z = g.n;
        let mut adj = g.adj;
        adj.push(0);
        let mut h = Graph { n: z + 1, adj };
        h.insert_edge(u, z)?;
        h.insert_edge(z, v)?;
        Ok(h)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + shift, v + shift)?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// JSON edge-list form: `{"n": 4, "edges": [[0,1],[1,2],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Graph> {
        let mut g = Graph::empty(list.n)?;
        for [u, v] in list.edges {
            g.insert_edge(u, v).map_err(|e| Error::Format(e.to_string()))?;
        }
        Ok(g)
    }
}
