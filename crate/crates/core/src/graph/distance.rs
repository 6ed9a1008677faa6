use super::{Graph, VertexSet};

/// Marker for unreachable pairs.
pub const INFINITY: u32 = u32::MAX;

/// Shortest-path lengths between all vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `INFINITY` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn has_infinite(&self) -> bool {
        self.dist.contains(&INFINITY)
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = vec![INFINITY; n * n];
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(g.neighbors(v));
            }
            frontier = next.difference(seen);
            for v in frontier {
                row[v] = d;
            }
            seen = seen.union(frontier);
        }
    }
    DistanceMatrix { n, dist }
}
