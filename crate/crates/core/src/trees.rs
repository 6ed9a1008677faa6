//! Minimal resolving and determining sets of trees, read off the branch
//! structure instead of searched for.
//!
//! A branch at `v` is a component of `T - v` together with `v`. Resolving
//! sets are governed by the branch paths ("legs") of exterior major vertices.
//! Determining sets are governed by isomorphism classes of branches, once a
//! bicentral tree has had its central edge subdivided.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::system::SetKind;

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::Domain("input graph is not a tree".into()))
    }
}

fn is_path_graph(t: &Graph) -> bool {
    (0..t.n()).all(|v| t.degree(v) <= 2)
}

fn require_non_path_tree(t: &Graph) -> Result<()> {
    require_tree(t)?;
    if is_path_graph(t) {
        return Err(Error::Domain(
            "paths have minimal resolving sets of different sizes; use the search oracle".into(),
        ));
    }
    Ok(())
}

/// Branches at `v`, each including `v`, ordered by their smallest other vertex.
pub fn branches_at(t: &Graph, v: usize) -> Vec<VertexSet> {
    let rest = t.vertices().without(v);
    t.components_within(rest)
        .into_iter()
        .map(|c| c.with(v))
        .collect()
}

/// Canonical string of the subtree induced on `within`, rooted at `root`:
/// a leaf is `()`, an inner vertex wraps its sorted child strings.
pub fn rooted_encoding(t: &Graph, root: usize, within: VertexSet) -> String {
    fn enc(t: &Graph, v: usize, parent: Option<usize>, within: VertexSet) -> String {
        let mut children: Vec<String> = t
            .neighbors(v)
            .intersection(within)
            .iter()
            .filter(|&w| Some(w) != parent)
            .map(|w| enc(t, w, Some(v), within))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    enc(t, root, None, within)
}

/// Branches at one vertex with their shapes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BranchDecomposition {
    pub root: usize,
    pub branches: Vec<VertexSet>,
    /// Whether each branch is a path.
    pub branch_path_flags: Vec<bool>,
    /// Canonical encoding of each branch rooted at `root`.
    pub encodings: Vec<String>,
    /// Indices into `branches`, grouped by rooted isomorphism; classes are
    /// ordered by their first member.
    pub iso_classes: Vec<Vec<usize>>,
}

impl BranchDecomposition {
    fn new(t: &Graph, v: usize) -> Self {
        let branches = branches_at(t, v);
        let branch_path_flags = branches
            .iter()
            .map(|b| b.without(v).iter().all(|w| t.degree(w) <= 2))
            .collect();
        let encodings: Vec<String> = branches.iter().map(|&b| rooted_encoding(t, v, b)).collect();
        let mut iso_classes: Vec<Vec<usize>> = Vec::new();
        for (i, e) in encodings.iter().enumerate() {
            match iso_classes.iter_mut().find(|c| &encodings[c[0]] == e) {
                Some(class) => class.push(i),
                None => iso_classes.push(vec![i]),
            }
        }
        BranchDecomposition {
            root: v,
            branches,
            branch_path_flags,
            encodings,
            iso_classes,
        }
    }

    /// Index of the branch holding `w != root`.
    pub fn branch_of(&self, w: usize) -> Option<usize> {
        if w == self.root {
            return None;
        }
        self.branches.iter().position(|b| b.contains(w))
    }
}

pub fn branch_iso_classes(t: &Graph, v: usize) -> Result<BranchDecomposition> {
    require_tree(t)?;
    if v >= t.n() {
        return Err(Error::Argument(format!("vertex {v} out of range")));
    }
    Ok(BranchDecomposition::new(t, v))
}

/// A vertex of degree at least three that owns at least one branch path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExteriorMajorVertex {
    pub vertex: usize,
    pub branch_paths: Vec<VertexSet>,
}

pub fn exterior_major_vertices(t: &Graph) -> Result<Vec<ExteriorMajorVertex>> {
    require_tree(t)?;
    Ok((0..t.n())
        .filter(|&v| t.degree(v) >= 3)
        .filter_map(|v| {
            let d = BranchDecomposition::new(t, v);
            let branch_paths: Vec<VertexSet> = d
                .branches
                .iter()
                .zip(&d.branch_path_flags)
                .filter(|(_, &is_path)| is_path)
                .map(|(&b, _)| b)
                .collect();
            (!branch_paths.is_empty()).then_some(ExteriorMajorVertex {
                vertex: v,
                branch_paths,
            })
        })
        .collect())
}

/// Slater's rule: at every exterior major vertex, all but one of its branch
/// paths carry exactly one landmark, the last carries none, and there are
/// no other landmarks.
pub fn is_minimal_resolving_tree(t: &Graph, s: VertexSet) -> Result<bool> {
    require_non_path_tree(t)?;
    let emvs = exterior_major_vertices(t)?;
    Ok(slater_condition(&emvs, s))
}

fn slater_condition(emvs: &[ExteriorMajorVertex], s: VertexSet) -> bool {
    let mut covered = VertexSet::EMPTY;
    for emv in emvs {
        let mut ones = 0;
        let mut empties = 0;
        for &path in &emv.branch_paths {
            let leg = path.without(emv.vertex);
            covered = covered.union(leg);
            match leg.intersection(s).len() {
                0 => empties += 1,
                1 => ones += 1,
                _ => return false,
            }
        }
        if empties != 1 || ones + 1 != emv.branch_paths.len() {
            return false;
        }
    }
    s.is_subset(covered)
}

fn leaf_of(t: &Graph, path: VertexSet, root: usize) -> usize {
    path.without(root)
        .iter()
        .find(|&w| t.degree(w) == 1)
        .expect("a branch path ends in a leaf")
}

/// One leaf per branch path, skipping at each exterior major vertex the path
/// with the largest encoding (smallest vertex id on ties).
pub fn construct_minimal_resolving_tree(t: &Graph) -> Result<VertexSet> {
    require_non_path_tree(t)?;
    let mut s = VertexSet::EMPTY;
    for emv in exterior_major_vertices(t)? {
        let keyed: Vec<(String, usize, VertexSet)> = emv
            .branch_paths
            .iter()
            .map(|&p| {
                let leg = p.without(emv.vertex);
                (rooted_encoding(t, emv.vertex, p), leg.first().unwrap_or(0), p)
            })
            .collect();
        let exempt = keyed
            .iter()
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|k| k.2);
        for &(_, _, p) in &keyed {
            if Some(p) != exempt {
                s = s.with(leaf_of(t, p, emv.vertex));
            }
        }
    }
    Ok(s)
}

/// Centre of a tree: one vertex, or the two ends of the central edge.
pub fn tree_center(t: &Graph) -> Result<Vec<usize>> {
    require_tree(t)?;
    let mut alive = t.vertices();
    while alive.len() > 2 {
        let leaves: VertexSet = alive
            .iter()
            .filter(|&v| t.neighbors(v).intersection(alive).len() <= 1)
            .collect();
        alive = alive.difference(leaves);
    }
    Ok(alive.to_vec())
}

/// Subdivides the central edge of a bicentral tree (new vertex id `n`);
/// returns unicentral trees unchanged. Minimal determining sets are the same
/// before and after.
pub fn normalize_center(t: &Graph) -> Result<Graph> {
    match tree_center(t)?.as_slice() {
        &[x, y] => t.subdivide_edge(x, y),
        _ => Ok(t.clone()),
    }
}

/// At every vertex, within every isomorphism class of branches, at most one
/// branch misses `s` (not counting the vertex itself).
pub fn is_determining_tree(t: &Graph, s: VertexSet) -> Result<bool> {
    require_tree(t)?;
    let t = normalize_center(t)?;
    Ok(class_condition(&t, s))
}

fn class_condition(t: &Graph, s: VertexSet) -> bool {
    (0..t.n()).all(|v| {
        let d = BranchDecomposition::new(t, v);
        d.iso_classes.iter().all(|class| {
            class
                .iter()
                .filter(|&&i| !d.branches[i].without(v).intersects(s))
                .count()
                <= 1
        })
    })
}

pub fn is_minimal_determining_tree(t: &Graph, s: VertexSet) -> Result<bool> {
    require_tree(t)?;
    let t = normalize_center(t)?;
    Ok(class_condition(&t, s) && s.iter().all(|x| !class_condition(&t, s.without(x))))
}

/// The member of `s` to give up for `r`, following the exchange argument:
/// first a member on the same branch (path) as `r`, otherwise one on a
/// sibling branch of the same shape. The result is checked against the
/// characterization before being returned.
pub fn tree_exchange_swap(t: &Graph, kind: SetKind, s: VertexSet, r: usize) -> Result<usize> {
    if r >= t.n() {
        return Err(Error::Argument(format!("vertex {r} out of range")));
    }
    match kind {
        SetKind::Resolving => resolving_swap(t, s, r),
        SetKind::Determining => determining_swap(t, s, r),
    }
}

fn resolving_swap(t: &Graph, s: VertexSet, r: usize) -> Result<usize> {
    require_non_path_tree(t)?;
    let emvs = exterior_major_vertices(t)?;
    if !slater_condition(&emvs, s) {
        return Err(Error::Argument(format!("{s} is not a minimal resolving set")));
    }
    if s.contains(r) {
        return Ok(r);
    }
    let (emv, home) = emvs
        .iter()
        .filter(|e| e.branch_paths.len() >= 2)
        .find_map(|e| {
            e.branch_paths
                .iter()
                .position(|p| p.without(e.vertex).contains(r))
                .map(|i| (e, i))
        })
        .ok_or_else(|| {
            Error::Argument(format!("vertex {r} lies in no minimal resolving set"))
        })?;
    let order = std::iter::once(home).chain((0..emv.branch_paths.len()).filter(|&i| i != home));
    for i in order {
        let leg = emv.branch_paths[i].without(emv.vertex);
        for x in leg.intersection(s) {
            if slater_condition(&emvs, s.without(x).with(r)) {
                return Ok(x);
            }
        }
    }
    Err(Error::Internal(format!(
        "no member of {s} can be exchanged for {r}"
    )))
}

fn determining_swap(t: &Graph, s: VertexSet, r: usize) -> Result<usize> {
    require_tree(t)?;
    let norm = normalize_center(t)?;
    let minimal = |x: VertexSet| {
        class_condition(&norm, x) && x.iter().all(|y| !class_condition(&norm, x.without(y)))
    };
    if !minimal(s) {
        return Err(Error::Argument(format!("{s} is not a minimal determining set")));
    }
    if s.contains(r) {
        return Ok(r);
    }
    let center = tree_center(&norm)?[0];
    // walk from r towards the centre until r's branch has a twin
    let dist_to_center = crate::graph::all_pairs_distances(&norm);
    let mut prev = r;
    let mut found = None;
    while prev != center {
        let next = norm
            .neighbors(prev)
            .iter()
            .find(|&w| dist_to_center.get(w, center) < dist_to_center.get(prev, center))
            .expect("a step towards the centre exists");
        let d = BranchDecomposition::new(&norm, next);
        let home = d.branch_of(r).expect("r is not the branch root");
        let class = d
            .iso_classes
            .iter()
            .find(|c| c.contains(&home))
            .expect("every branch has a class");
        if class.len() >= 2 {
            found = Some((home, class.clone(), d));
            break;
        }
        prev = next;
    }
    let (home, class, d) = found.ok_or_else(|| {
        Error::Argument(format!("vertex {r} lies in no minimal determining set"))
    })?;
    let order = std::iter::once(home).chain(class.into_iter().filter(|&i| i != home));
    for i in order {
        for x in d.branches[i].without(d.root).intersection(s) {
            if minimal(s.without(x).with(r)) {
                return Ok(x);
            }
        }
    }
    Err(Error::Argument(format!(
        "vertex {r} lies in no minimal determining set containing a swap for {s}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, FamilySpec};

    fn set(ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(64, ids).unwrap()
    }

    /// Path a1..a8 (ids 0..7) with pendants on a3 (id 8) and a6 (id 9).
    pub(crate) fn two_centre_tree() -> Graph {
        let mut edges: Vec<_> = (1..8).map(|i| (i - 1, i)).collect();
        edges.extend([(2, 8), (5, 9)]);
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Centre 0 with legs of the given lengths; returns the graph and the leaves.
    fn spider(legs: &[usize]) -> (Graph, Vec<usize>) {
        let mut edges = Vec::new();
        let mut leaves = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            leaves.push(prev);
        }
        (Graph::from_edges(next, &edges).unwrap(), leaves)
    }

    #[test]
    fn emvs() {
        let (sp, _) = spider(&[2, 2, 2]);
        let e = exterior_major_vertices(&sp).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].branch_paths.len(), 3);

        let p = generate(&FamilySpec::new(Family::Path, vec![6])).unwrap();
        assert!(exterior_major_vertices(&p).unwrap().is_empty());

        let fig = two_centre_tree();
        let e = exterior_major_vertices(&fig).unwrap();
        assert_eq!(e.iter().map(|x| x.vertex).collect::<Vec<_>>(), vec![2, 5]);
        assert_eq!(e[0].branch_paths, vec![set(&[0, 1, 2]), set(&[2, 8])]);
        assert_eq!(e[1].branch_paths, vec![set(&[5, 6, 7]), set(&[5, 9])]);
    }

    #[test]
    fn slater_on_spiders_and_stars() {
        let (sp, l) = spider(&[2, 2, 2]);
        assert!(is_minimal_resolving_tree(&sp, set(&[l[0], l[1]])).unwrap());
        assert!(!is_minimal_resolving_tree(&sp, set(&l)).unwrap());
        assert_eq!(construct_minimal_resolving_tree(&sp).unwrap().len(), 2);

        let star = generate(&FamilySpec::new(Family::Star, vec![4])).unwrap();
        assert!(is_minimal_resolving_tree(&star, set(&[1, 2, 3])).unwrap());
        assert!(is_minimal_resolving_tree(&star, set(&[2, 3, 4])).unwrap());
        assert!(!is_minimal_resolving_tree(&star, set(&[0, 1, 2])).unwrap());
        assert_eq!(construct_minimal_resolving_tree(&star).unwrap().len(), 3);
    }

    #[test]
    fn paths_and_non_trees_rejected() {
        let p = generate(&FamilySpec::new(Family::Path, vec![5])).unwrap();
        assert!(matches!(is_minimal_resolving_tree(&p, set(&[0])), Err(Error::Domain(_))));
        let c = generate(&FamilySpec::new(Family::Cycle, vec![5])).unwrap();
        assert!(matches!(is_determining_tree(&c, set(&[0])), Err(Error::Domain(_))));
        assert!(matches!(exterior_major_vertices(&c), Err(Error::Domain(_))));
    }

    #[test]
    fn caterpillar_construction() {
        // spine 0-1-2-3 with extra leaves 4 on 1 and 5 on 2
        let t = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        let s = construct_minimal_resolving_tree(&t).unwrap();
        assert_eq!(s.len(), 2);
        assert!(is_minimal_resolving_tree(&t, s).unwrap());
    }

    #[test]
    fn center_normalization() {
        let p4 = generate(&FamilySpec::new(Family::Path, vec![4])).unwrap();
        assert_eq!(tree_center(&p4).unwrap(), vec![1, 2]);
        let p5 = normalize_center(&p4).unwrap();
        assert_eq!(p5.n(), 5);
        assert_eq!(tree_center(&p5).unwrap(), vec![4]);
        let unchanged = generate(&FamilySpec::new(Family::Path, vec![5])).unwrap();
        assert_eq!(normalize_center(&unchanged).unwrap(), unchanged);

        let fig = two_centre_tree();
        assert_eq!(tree_center(&fig).unwrap(), vec![3, 4]);
        let norm = normalize_center(&fig).unwrap();
        assert_eq!(norm.n(), 11);
        assert_eq!(tree_center(&norm).unwrap(), vec![10]);
    }

    #[test]
    fn iso_classes() {
        let p5 = generate(&FamilySpec::new(Family::Path, vec![5])).unwrap();
        let d = branch_iso_classes(&p5, 2).unwrap();
        assert_eq!((d.branches.len(), d.iso_classes.len()), (2, 1));

        let (sp, _) = spider(&[2, 2, 3]);
        let d = branch_iso_classes(&sp, 0).unwrap();
        assert_eq!(d.iso_classes, vec![vec![0, 1], vec![2]]);

        let k13 = generate(&FamilySpec::new(Family::Star, vec![3])).unwrap();
        let d = branch_iso_classes(&k13, 0).unwrap();
        assert_eq!(d.iso_classes, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn determining_on_small_trees() {
        let fig = two_centre_tree();
        assert!(!is_determining_tree(&fig, VertexSet::EMPTY).unwrap());
        assert!(is_determining_tree(&fig, set(&[0])).unwrap());
        let p5 = generate(&FamilySpec::new(Family::Path, vec![5])).unwrap();
        assert!(!is_determining_tree(&p5, set(&[2])).unwrap());
        assert!(is_determining_tree(&p5, set(&[0])).unwrap());
    }

    #[test]
    fn swaps() {
        let (sp, l) = spider(&[2, 2, 2]);
        let s = set(&[l[0], l[1]]);
        let x = tree_exchange_swap(&sp, SetKind::Resolving, s, l[2]).unwrap();
        assert!(x == l[0] || x == l[1]);
        assert!(is_minimal_resolving_tree(&sp, s.without(x).with(l[2])).unwrap());
        assert_eq!(tree_exchange_swap(&sp, SetKind::Resolving, s, l[0]).unwrap(), l[0]);

        let fig = two_centre_tree();
        assert_eq!(tree_exchange_swap(&fig, SetKind::Determining, set(&[0]), 7).unwrap(), 0);
        assert_eq!(tree_exchange_swap(&fig, SetKind::Determining, set(&[0]), 0).unwrap(), 0);
        assert!(matches!(
            tree_exchange_swap(&fig, SetKind::Determining, set(&[0, 7]), 1),
            Err(Error::Argument(_))
        ));
    }
}
