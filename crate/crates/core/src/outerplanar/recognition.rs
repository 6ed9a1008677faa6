//! Outerplanarity by blocks: a block with three or more vertices is
//! outerplanar exactly when it has a Hamilton cycle whose remaining edges
//! pairwise do not cross. Such a cycle is unique, so the first one found
//! decides.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::blocks::biconnected_components;

pub const OUTERPLANAR_MAX_VERTICES: usize = 32;

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > OUTERPLANAR_MAX_VERTICES {
        return Err(Error::Size(format!(
            "outerplanarity test is capped at {OUTERPLANAR_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    check_size(g)?;
    Ok(biconnected_components(g)
        .into_iter()
        .filter(|b| b.len() >= 3)
        .all(|b| block_is_outerplanar(&g.induced_subgraph(b).0)))
}

fn block_is_outerplanar(h: &Graph) -> bool {
    if h.edge_count() > 2 * h.n() - 3 {
        return false;
    }
    match hamilton_cycles(h, 1).first() {
        Some(cycle) => chords_do_not_cross(h, cycle),
        None => false,
    }
}

fn chords_do_not_cross(h: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    let mut pos = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let chords: Vec<(usize, usize)> = h
        .edges()
        .map(|(u, v)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            (a, b)
        })
        .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
        .collect();
    chords.iter().enumerate().all(|(i, &(a, b))| {
        chords[i + 1..]
            .iter()
            .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
    })
}

/// Up to `limit` Hamilton cycles, each starting at 0 and listed in the
/// direction whose second vertex is smaller than its last.
fn hamilton_cycles(h: &Graph, limit: usize) -> Vec<Vec<usize>> {
    fn walk(h: &Graph, path: &mut Vec<usize>, unvisited: VertexSet, limit: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("path starts at 0");
        if unvisited.is_empty() {
            if h.has_edge(last, 0) && path[1] < path[path.len() - 1] {
                out.push(path.clone());
            }
            return;
        }
        // every unvisited vertex still needs two ways in
        let open = unvisited.with(last).with(0);
        if unvisited.iter().any(|u| h.neighbors(u).intersection(open).len() < 2) {
            return;
        }
        for next in h.neighbors(last).intersection(unvisited) {
            path.push(next);
            walk(h, path, unvisited.without(next), limit, out);
            path.pop();
            if out.len() >= limit {
                return;
            }
        }
    }

    let mut out = Vec::new();
    if h.n() >= 3 {
        walk(h, &mut vec![0], h.vertices().without(0), limit, &mut out);
    }
    out
}

/// The Hamilton cycle of a 2-connected outerplanar graph, starting at 0 and
/// continuing to the smaller of 0's two cycle neighbours.
pub fn hamilton_cycle(g: &Graph) -> Result<Vec<usize>> {
    check_size(g)?;
    let blocks = biconnected_components(g);
    if g.n() < 3 || blocks.len() != 1 || !block_is_outerplanar(g) {
        return Err(Error::Domain(
            "Hamilton cycle analysis needs a 2-connected outerplanar graph on 3 or more vertices".into(),
        ));
    }
    let mut cycles = hamilton_cycles(g, 2);
    if cycles.len() != 1 {
        return Err(Error::Internal(format!(
            "expected a unique Hamilton cycle, found {}",
            cycles.len()
        )));
    }
    Ok(cycles.remove(0))
}
