//! Blocks, cutvertices, the block-cutvertex tree and blockbranches.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Maximal 2-connected subgraphs (including bridges as `K_2` and isolated
/// vertices as singletons), as vertex sets in lexicographic order.
pub fn biconnected_components(g: &Graph) -> Vec<VertexSet> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: [u32; MAX_VERTICES],
        low: [u32; MAX_VERTICES],
        time: u32,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block = block.with(a).with(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let mut dfs = Dfs {
        g,
        disc: [0; MAX_VERTICES],
        low: [0; MAX_VERTICES],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.n() {
        if dfs.disc[v] == 0 {
            if g.degree(v) == 0 {
                dfs.out.push(VertexSet::singleton(v));
            }
            dfs.visit(v, None);
        }
    }
    let mut blocks = dfs.out;
    blocks.sort_by(|a, b| a.lex_cmp(*b));
    blocks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Center {
    Block { index: usize },
    Cutvertex { vertex: usize },
}

/// Tree nodes `0..blocks.len()` are blocks; node `blocks.len() + i` is
/// `cutvertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockCutTree {
    pub blocks: Vec<VertexSet>,
    pub cutvertices: Vec<usize>,
    pub tree_adj: Vec<Vec<usize>>,
    pub center: Center,
}

impl BlockCutTree {
    pub fn is_cutvertex(&self, v: usize) -> bool {
        self.cutvertices.contains(&v)
    }

    pub fn block_index(&self, block: VertexSet) -> Option<usize> {
        self.blocks.iter().position(|&b| b == block)
    }

    pub fn center_block(&self) -> Option<VertexSet> {
        match self.center {
            Center::Block { index } => Some(self.blocks[index]),
            Center::Cutvertex { .. } => None,
        }
    }
}

pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Domain("block-cutvertex tree needs a connected graph".into()));
    }
    let blocks = biconnected_components(g);
    let cutvertices: Vec<usize> = (0..g.n())
        .filter(|&v| blocks.iter().filter(|b| b.contains(v)).count() >= 2)
        .collect();
    let nb = blocks.len();
    let mut tree_adj = vec![Vec::new(); nb + cutvertices.len()];
    for (ci, &c) in cutvertices.iter().enumerate() {
        for (bi, b) in blocks.iter().enumerate() {
            if b.contains(c) {
                tree_adj[bi].push(nb + ci);
                tree_adj[nb + ci].push(bi);
            }
        }
    }
    // leaves of this tree are all blocks, so stripping them ends on one node
    let mut alive = vec![true; tree_adj.len()];
    let mut remaining = tree_adj.len();
    while remaining > 1 {
        let leaves: Vec<usize> = (0..tree_adj.len())
            .filter(|&i| alive[i] && tree_adj[i].iter().filter(|&&j| alive[j]).count() <= 1)
            .collect();
        if leaves.len() == remaining {
            return Err(Error::Internal("block-cutvertex tree has a central edge".into()));
        }
        for i in leaves {
            alive[i] = false;
            remaining -= 1;
        }
    }
    let node = alive.iter().position(|&a| a).expect("one node survives");
    let center = if node < nb {
        Center::Block { index: node }
    } else {
        Center::Cutvertex {
            vertex: cutvertices[node - nb],
        }
    };
    Ok(BlockCutTree {
        blocks,
        cutvertices,
        tree_adj,
        center,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Blockbranch {
    pub attach_vertex: usize,
    pub vertices: VertexSet,
    /// Just the attach vertex itself.
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockbranchClasses {
    pub cutvertex: usize,
    pub branches: Vec<Blockbranch>,
    /// Indices into `branches`, grouped by isomorphism fixing the cutvertex.
    pub iso_classes: Vec<Vec<usize>>,
}

/// All blockbranches at cutvertex `v`: each component of `G - v` with `v`.
pub fn blockbranches_at(g: &Graph, bct: &BlockCutTree, v: usize) -> Result<BlockbranchClasses> {
    if !bct.is_cutvertex(v) {
        return Err(Error::Argument(format!("vertex {v} is not a cutvertex")));
    }
    Ok(classes_at(g, v))
}

pub(crate) fn classes_at(g: &Graph, v: usize) -> BlockbranchClasses {
    let branches: Vec<Blockbranch> = g
        .components_within(g.vertices().without(v))
        .into_iter()
        .map(|c| Blockbranch {
            attach_vertex: v,
            vertices: c.with(v),
            trivial: false,
        })
        .collect();
    let mut iso_classes: Vec<Vec<usize>> = Vec::new();
    for (i, b) in branches.iter().enumerate() {
        match iso_classes
            .iter_mut()
            .find(|c| rooted_isomorphic(g, branches[c[0]].vertices, b.vertices, v))
        {
            Some(class) => class.push(i),
            None => iso_classes.push(vec![i]),
        }
    }
    BlockbranchClasses {
        cutvertex: v,
        branches,
        iso_classes,
    }
}

/// Everything hanging off `block` at its vertex `v`, including `v`: the
/// trivial blockbranch plus all blockbranches at `v` that avoid the block.
pub fn blockbranches_of_block(g: &Graph, block: VertexSet, v: usize) -> Vec<Blockbranch> {
    let rest = block.without(v);
    std::iter::once(Blockbranch {
        attach_vertex: v,
        vertices: VertexSet::singleton(v),
        trivial: true,
    })
    .chain(
        g.components_within(g.vertices().without(v))
            .into_iter()
            .filter(|c| !c.intersects(rest))
            .map(|c| Blockbranch {
                attach_vertex: v,
                vertices: c.with(v),
                trivial: false,
            }),
    )
    .collect()
}

/// Is there an isomorphism `G[a] -> G[b]` sending `root` to itself?
pub fn rooted_isomorphic(g: &Graph, a: VertexSet, b: VertexSet, root: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (ga, ia) = g.induced_subgraph(a);
    let (gb, ib) = g.induced_subgraph(b);
    if ga.edge_count() != gb.edge_count() {
        return false;
    }
    let degrees = |h: &Graph| {
        let mut d: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(&ga) != degrees(&gb) {
        return false;
    }
    let ra = ia.iter().position(|&x| x == root).expect("root in a");
    let rb = ib.iter().position(|&x| x == root).expect("root in b");
    find_isomorphism(&ga, &gb, ra, rb).is_some()
}

/// Isomorphism `g1 -> g2` with `r1 -> r2`, trying vertices of `g1` in BFS
/// order from `r1`.
pub(crate) fn find_isomorphism(g1: &Graph, g2: &Graph, r1: usize, r2: usize) -> Option<Vec<usize>> {
    let n = g1.n();
    if n != g2.n() || g1.degree(r1) != g2.degree(r2) {
        return None;
    }
    let mut order = vec![r1];
    let mut seen = VertexSet::singleton(r1);
    let mut i = 0;
    while i < order.len() {
        for w in g1.neighbors(order[i]).difference(seen) {
            seen = seen.with(w);
            order.push(w);
        }
        i += 1;
    }
    for v in 0..n {
        if !seen.contains(v) {
            order.push(v);
        }
    }

    fn extend(g1: &Graph, g2: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: VertexSet) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        for t in VertexSet::full(g2.n()).difference(used) {
            if g1.degree(u) != g2.degree(t) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&x| g1.has_edge(u, x) == g2.has_edge(t, map[x]));
            if consistent {
                map[u] = t;
                if extend(g1, g2, order, depth + 1, map, used.with(t)) {
                    return true;
                }
            }
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    map[r1] = r2;
    extend(g1, g2, &order, 1, &mut map, VertexSet::singleton(r2)).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, FamilySpec};

    pub(crate) fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn bowtie_tree() {
        let bct = block_cut_tree(&bowtie()).unwrap();
        assert_eq!(bct.blocks.len(), 2);
        assert_eq!(bct.cutvertices, vec![2]);
        assert_eq!(bct.center, Center::Cutvertex { vertex: 2 });
        let classes = blockbranches_at(&bowtie(), &bct, 2).unwrap();
        assert_eq!(classes.branches.len(), 2);
        assert_eq!(classes.iso_classes.len(), 1);
        assert!(blockbranches_at(&bowtie(), &bct, 0).is_err());
    }

    #[test]
    fn path_tree() {
        let p4 = generate(&FamilySpec::new(Family::Path, vec![4])).unwrap();
        let bct = block_cut_tree(&p4).unwrap();
        assert_eq!(bct.blocks.len(), 3);
        assert_eq!(bct.cutvertices, vec![1, 2]);
        assert_eq!(bct.center_block(), Some(VertexSet::from_ids(4, &[1, 2]).unwrap()));
    }

    #[test]
    fn two_connected_is_one_block() {
        let c6 = generate(&FamilySpec::new(Family::Cycle, vec![6])).unwrap();
        let bct = block_cut_tree(&c6).unwrap();
        assert_eq!(bct.blocks, vec![c6.vertices()]);
        assert_eq!(bct.center, Center::Block { index: 0 });
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(block_cut_tree(&disconnected), Err(Error::Domain(_))));
    }

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let bct = block_cut_tree(&g).unwrap();
        let classes = blockbranches_at(&g, &bct, 2).unwrap();
        assert_eq!((classes.branches.len(), classes.iso_classes.len()), (2, 2));
        let hanging = blockbranches_of_block(&g, VertexSet::from_ids(4, &[0, 1, 2]).unwrap(), 2);
        assert_eq!(hanging.len(), 2);
        assert!(hanging[0].trivial);
        assert_eq!(hanging[1].vertices, VertexSet::from_ids(4, &[2, 3]).unwrap());
    }

    #[test]
    fn spider_legs_classed_by_length() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        let bct = block_cut_tree(&g).unwrap();
        let classes = blockbranches_at(&g, &bct, 0).unwrap();
        assert_eq!(classes.iso_classes, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn rooted_iso_respects_root() {
        // paths 0-1-2 and 0-3-4 rooted at 0 match; 0-1-2 against 1 as root does not
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (3, 4)]).unwrap();
        let a = VertexSet::from_ids(5, &[0, 1, 2]).unwrap();
        let b = VertexSet::from_ids(5, &[0, 3, 4]).unwrap();
        assert!(rooted_isomorphic(&g, a, b, 0));
        let h = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(find_isomorphism(&h, &h, 0, 1).is_none());
        assert_eq!(find_isomorphism(&h, &h, 0, 2), Some(vec![2, 1, 0]));
    }
}
