//! Labeled rooted trees on `{1..n}`, uprooted trees, and the inversion
//! statistics used to refine their counts.
//!
//! Trees are enumerated through Prüfer codes: every code of length `n - 2`
//! over `{1..n}` paired with every root gives each of the `n^(n-1)` rooted
//! labeled trees exactly once.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distribution::Distribution;
use crate::error::{param, Error, Result};
use crate::seqcore::BoundedVectors;

/// Prüfer sequence of a labeled tree on `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrueferCode {
    n: usize,
    code: Vec<u32>,
}

impl PrueferCode {
    pub fn new(n: usize, code: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(param("a tree needs at least one vertex"));
        }
        if code.len() != n.saturating_sub(2) {
            return Err(param(format!(
                "a Prüfer code for n = {n} has length {}, got {}",
                n.saturating_sub(2),
                code.len()
            )));
        }
        if let Some(bad) = code.iter().find(|&&v| v == 0 || v as usize > n) {
            return Err(param(format!("Prüfer label {bad} outside 1..={n}")));
        }
        Ok(PrueferCode { n, code })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u32] {
        &self.code
    }
}

/// An undirected edge `(a, b)` with `a < b`.
pub type Edge = (u32, u32);

fn edge(a: u32, b: u32) -> Edge {
    (a.min(b), a.max(b))
}

/// Edges of the tree with the given Prüfer code, sorted.
pub fn prufer_decode(code: &PrueferCode) -> Vec<Edge> {
    let n = code.n;
    if n < 2 {
        return Vec::new();
    }
    let mut degree = vec![1u32; n + 1];
    for &v in &code.code {
        degree[v as usize] += 1;
    }
    let mut leaves: BTreeSet<u32> = (1..=n as u32)
        .filter(|&v| degree[v as usize] == 1)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code.code {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push(edge(leaf, v));
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<u32> = leaves.into_iter().collect();
    debug_assert_eq!(last.len(), 2);
    edges.push(edge(last[0], last[1]));
    edges.sort_unstable();
    edges
}

fn adjacency(n: usize, edges: &[Edge]) -> Result<Vec<Vec<u32>>> {
    if edges.len() + 1 != n {
        return Err(param(format!(
            "a tree on {n} vertices has {} edges, got {}",
            n - 1,
            edges.len()
        )));
    }
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        if a == 0 || b == 0 || a as usize > n || b as usize > n || a == b {
            return Err(param(format!("edge ({a}, {b}) is not valid on 1..={n}")));
        }
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    Ok(adj)
}

/// Prüfer code of the tree with the given edges.
pub fn prufer_encode(n: usize, edges: &[Edge]) -> Result<PrueferCode> {
    if n == 0 {
        return Err(param("a tree needs at least one vertex"));
    }
    let adj = adjacency(n, edges)?;
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n + 1];
    let mut leaves: BTreeSet<u32> = (1..=n as u32)
        .filter(|&v| degree[v as usize] == 1)
        .collect();
    let mut code = Vec::with_capacity(n.saturating_sub(2));
    for _ in 0..n.saturating_sub(2) {
        let leaf = leaves
            .pop_first()
            .ok_or_else(|| param("edge list is not a tree"))?;
        removed[leaf as usize] = true;
        let next = adj[leaf as usize]
            .iter()
            .copied()
            .find(|&w| !removed[w as usize])
            .ok_or_else(|| param("edge list is not a tree"))?;
        code.push(next);
        degree[next as usize] -= 1;
        if degree[next as usize] == 1 {
            leaves.insert(next);
        }
    }
    // Reject disconnected input: decoding must give the edges back.
    let out = PrueferCode::new(n, code)?;
    let mut sorted: Vec<Edge> = edges.iter().map(|&(a, b)| edge(a, b)).collect();
    sorted.sort_unstable();
    if prufer_decode(&out) != sorted {
        return Err(param("edge list is not a tree"));
    }
    Ok(out)
}

/// All Prüfer codes for `n` vertices, lexicographically.
pub fn enumerate_codes(n: usize) -> impl Iterator<Item = PrueferCode> {
    let len = n.saturating_sub(2);
    let codes: Box<dyn Iterator<Item = Vec<u32>>> = if n == 0 {
        Box::new(std::iter::empty())
    } else if len == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(BoundedVectors::new(len, n as u32).map(|v| v.into_iter().map(|x| x + 1).collect()))
    };
    codes.map(move |code| PrueferCode { n, code })
}

/// A labeled rooted tree on `{1..n}` stored as parent pointers.
///
/// The derived ordering on `(n, root, parents)` doubles as the canonical form
/// for deduplication.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TreeRepr", into = "TreeRepr")]
pub struct RootedTree {
    n: usize,
    root: u32,
    // parents[v - 1] is the parent of v, 0 for the root.
    parents: Vec<u32>,
}

/// Wire form of a [`RootedTree`]: the root plus one parent label per
/// vertex, `0` marking the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRepr {
    pub root: u32,
    pub parents: Vec<u32>,
}

impl TryFrom<TreeRepr> for RootedTree {
    type Error = Error;

    fn try_from(r: TreeRepr) -> Result<Self> {
        RootedTree::from_parents(r.root, r.parents)
    }
}

impl From<RootedTree> for TreeRepr {
    fn from(t: RootedTree) -> Self {
        TreeRepr {
            root: t.root,
            parents: t.parents,
        }
    }
}

impl RootedTree {
    /// Orients an undirected tree away from `root`.
    pub fn from_edges(n: usize, edges: &[Edge], root: u32) -> Result<Self> {
        if n == 0 || root == 0 || root as usize > n {
            return Err(param(format!("root {root} outside 1..={n}")));
        }
        let adj = adjacency(n, edges)?;
        let mut parents = vec![u32::MAX; n];
        parents[root as usize - 1] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if parents[w as usize - 1] == u32::MAX {
                    parents[w as usize - 1] = v;
                    queue.push_back(w);
                }
            }
        }
        if parents.contains(&u32::MAX) {
            return Err(param("edge list is not connected"));
        }
        Ok(RootedTree { n, root, parents })
    }

    /// Builds a tree from parent labels, `0` at the root.
    pub fn from_parents(root: u32, parents: Vec<u32>) -> Result<Self> {
        let n = parents.len();
        if n == 0 || root == 0 || root as usize > n {
            return Err(param(format!("root {root} outside 1..={n}")));
        }
        for (i, &p) in parents.iter().enumerate() {
            let v = i as u32 + 1;
            if (v == root) != (p == 0) {
                return Err(param(format!(
                    "vertex {v} has parent {p} but the root is {root}"
                )));
            }
            if p as usize > n || p == v {
                return Err(param(format!("vertex {v} has invalid parent {p}")));
            }
        }
        // Every vertex must reach the root within n - 1 steps.
        for start in 1..=n as u32 {
            let mut v = start;
            let mut steps = 0;
            while v != root {
                v = parents[v as usize - 1];
                steps += 1;
                if steps >= n {
                    return Err(param(format!("parent pointers from {start} form a cycle")));
                }
            }
        }
        Ok(RootedTree { n, root, parents })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn parents(&self) -> &[u32] {
        &self.parents
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        match self.parents.get(v as usize - 1) {
            Some(0) | None => None,
            Some(p) => Some(*p),
        }
    }

    pub fn children(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.parents
            .iter()
            .enumerate()
            .filter(move |(_, p)| **p == v)
            .map(|(i, _)| i as u32 + 1)
    }

    /// Undirected edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self
            .parents
            .iter()
            .enumerate()
            .filter(|(_, p)| **p != 0)
            .map(|(i, p)| edge(i as u32 + 1, *p))
            .collect();
        e.sort_unstable();
        e
    }

    /// Proper ancestors of `v`, nearest first.
    fn ancestors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        let mut cur = v;
        std::iter::from_fn(move || {
            let p = self.parent(cur)?;
            cur = p;
            Some(p)
        })
    }
}

impl fmt::Display for RootedTree {
    /// `root:parent_1,...,parent_n`, e.g. `4:4,4,4,0` for the star at 4.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.root)?;
        for (i, p) in self.parents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Every rooted labeled tree on `{1..n}`, ordered by (Prüfer code, root).
pub fn enumerate_rooted_trees(n: usize) -> impl Iterator<Item = RootedTree> {
    enumerate_codes(n).flat_map(move |code| {
        let edges = prufer_decode(&code);
        (1..=n as u32).map(move |root| {
            RootedTree::from_edges(n, &edges, root).expect("decoded trees are valid")
        })
    })
}

/// Every labeled tree on `{1..n}` rooted at `root`, ordered by Prüfer code.
pub fn enumerate_trees_rooted_at(n: usize, root: u32) -> Result<impl Iterator<Item = RootedTree>> {
    if n == 0 || root == 0 || root as usize > n {
        return Err(param(format!("root {root} outside 1..={n}")));
    }
    Ok(enumerate_codes(n).map(move |code| {
        RootedTree::from_edges(n, &prufer_decode(&code), root).expect("decoded trees are valid")
    }))
}

/// The root exceeds each of its children.
pub fn is_uprooted(t: &RootedTree) -> bool {
    t.children(t.root).all(|c| c < t.root)
}

pub fn enumerate_uprooted(n: usize) -> impl Iterator<Item = RootedTree> {
    enumerate_rooted_trees(n).filter(is_uprooted)
}

pub fn root_degree(t: &RootedTree) -> usize {
    t.children(t.root).count()
}

/// Pairs `(alpha, beta)` with `beta` a proper descendant of `alpha` and
/// `alpha > beta`.
pub fn inversions(t: &RootedTree) -> usize {
    (1..=t.n as u32)
        .map(|beta| t.ancestors(beta).filter(|&alpha| alpha > beta).count())
        .sum()
}

/// Inversions in which neither vertex is the root.
pub fn surface_inversions(t: &RootedTree) -> usize {
    (1..=t.n as u32)
        .filter(|&beta| beta != t.root)
        .map(|beta| {
            t.ancestors(beta)
                .filter(|&alpha| alpha != t.root && alpha > beta)
                .count()
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeStatistic {
    RootDegree,
    SurfaceInversions,
}

impl TreeStatistic {
    pub fn eval(self, t: &RootedTree) -> usize {
        match self {
            TreeStatistic::RootDegree => root_degree(t),
            TreeStatistic::SurfaceInversions => surface_inversions(t),
        }
    }
}

impl FromStr for TreeStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "root_degree" | "root-degree" => Ok(TreeStatistic::RootDegree),
            "surface_inversions" | "surface-inversions" => Ok(TreeStatistic::SurfaceInversions),
            other => Err(param(format!("unknown tree statistic {other:?}"))),
        }
    }
}

/// Histogram of `statistic` over the uprooted trees on `{1..n}`.
pub fn uprooted_statistic_distribution(n: usize, statistic: TreeStatistic) -> Result<Distribution> {
    if n < 2 {
        return Err(param(format!(
            "uprooted tree statistics need n >= 2, got {n}"
        )));
    }
    let codes: Vec<PrueferCode> = enumerate_codes(n).collect();
    Ok(codes
        .par_iter()
        .map(|code| {
            let edges = prufer_decode(code);
            let mut d = Distribution::new();
            for root in 1..=n as u32 {
                let t = RootedTree::from_edges(n, &edges, root).expect("decoded trees are valid");
                if is_uprooted(&t) {
                    d.increment(statistic.eval(&t) as i64);
                }
            }
            d
        })
        .reduce(Distribution::new, Distribution::merge))
}

/// Histogram of [`inversions`] over all trees on `{1..n}` rooted at 1.
pub fn inversion_distribution(n: usize) -> Result<Distribution> {
    let trees: Vec<RootedTree> = enumerate_trees_rooted_at(n, 1)?.collect();
    Ok(trees
        .par_iter()
        .map(|t| {
            let mut d = Distribution::new();
            d.increment(inversions(t) as i64);
            d
        })
        .reduce(Distribution::new, Distribution::merge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{binom, f_closed, power};
    use crate::ExactInt;

    fn dist(pairs: &[(i64, u64)]) -> Distribution {
        pairs.iter().copied().collect()
    }

    fn tree(root: u32, parents: &[u32]) -> RootedTree {
        RootedTree::from_parents(root, parents.to_vec()).unwrap()
    }

    #[test]
    fn decode_examples() {
        let c = PrueferCode::new(2, vec![]).unwrap();
        assert_eq!(prufer_decode(&c), vec![(1, 2)]);
        let star = PrueferCode::new(4, vec![1, 1]).unwrap();
        assert_eq!(prufer_decode(&star), vec![(1, 2), (1, 3), (1, 4)]);
        assert!(PrueferCode::new(4, vec![1, 5]).is_err());
        assert!(PrueferCode::new(4, vec![0, 1]).is_err());
        assert!(PrueferCode::new(4, vec![1]).is_err());
    }

    #[test]
    fn sixteen_distinct_trees_on_four() {
        let trees: BTreeSet<Vec<Edge>> = enumerate_codes(4).map(|c| prufer_decode(&c)).collect();
        assert_eq!(trees.len(), 16);
    }

    #[test]
    fn prufer_round_trips() {
        for n in 1..=6 {
            let mut seen = BTreeSet::new();
            for code in enumerate_codes(n) {
                let edges = prufer_decode(&code);
                assert_eq!(prufer_encode(n, &edges).unwrap(), code);
                assert!(seen.insert(edges));
            }
            for t in enumerate_rooted_trees(n) {
                let code = prufer_encode(n, &t.edges()).unwrap();
                let back = RootedTree::from_edges(n, &prufer_decode(&code), t.root()).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn encode_rejects_non_trees() {
        assert!(prufer_encode(4, &[(1, 2), (2, 3), (1, 3)]).is_err());
        assert!(prufer_encode(4, &[(1, 2), (2, 3)]).is_err());
        assert!(prufer_encode(3, &[(1, 1), (2, 3)]).is_err());
    }

    #[test]
    fn from_parents_validation() {
        assert!(RootedTree::from_parents(1, vec![0, 1, 2]).is_ok());
        assert!(RootedTree::from_parents(1, vec![0, 3, 2]).is_err());
        assert!(RootedTree::from_parents(1, vec![2, 1, 1]).is_err());
        assert!(RootedTree::from_parents(4, vec![0, 1, 1]).is_err());
        assert!(RootedTree::from_parents(1, vec![0, 2]).is_err());
    }

    #[test]
    fn rooted_tree_counts() {
        assert_eq!(enumerate_rooted_trees(1).count(), 1);
        assert_eq!(enumerate_rooted_trees(2).count(), 2);
        assert_eq!(enumerate_rooted_trees(3).count(), 9);
        assert_eq!(enumerate_rooted_trees(4).count(), 64);
        for n in 2..=7usize {
            let all: BTreeSet<RootedTree> = enumerate_rooted_trees(n).collect();
            assert_eq!(all.len(), n.pow((n - 1) as u32));
            assert_eq!(enumerate_uprooted(n).count(), (n - 1).pow((n - 1) as u32));
        }
    }

    #[test]
    fn uprooted_examples() {
        assert!(is_uprooted(&tree(4, &[4, 4, 4, 0])));
        for n in 2..=5u32 {
            assert!(enumerate_rooted_trees(n as usize)
                .filter(|t| t.root() == 1)
                .all(|t| !is_uprooted(&t)));
        }
        let path = tree(3, &[2, 3, 0]);
        assert!(is_uprooted(&path));
        assert_eq!(enumerate_uprooted(2).count(), 1);
        assert_eq!(enumerate_uprooted(3).count(), 4);
        assert_eq!(enumerate_uprooted(4).count(), 27);
    }

    #[test]
    fn root_degree_examples() {
        assert_eq!(root_degree(&tree(1, &[0, 1, 1, 1])), 3);
        assert_eq!(root_degree(&tree(1, &[0, 1, 2, 3])), 1);
        assert_eq!(root_degree(&tree(1, &[0])), 0);
        assert_eq!(
            uprooted_statistic_distribution(4, TreeStatistic::RootDegree).unwrap(),
            dist(&[(1, 18), (2, 8), (3, 1)])
        );
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversions(&tree(1, &[0, 1, 1, 1])), 0);
        // 1 -> 3 -> 2
        assert_eq!(inversions(&tree(1, &[0, 3, 1])), 1);
        assert_eq!(
            inversion_distribution(4).unwrap(),
            dist(&[(0, 6), (1, 6), (2, 3), (3, 1)])
        );
    }

    #[test]
    fn surface_inversion_examples() {
        assert_eq!(surface_inversions(&tree(4, &[4, 4, 4, 0])), 0);
        assert_eq!(surface_inversions(&tree(3, &[2, 3, 0])), 1);
        assert_eq!(
            uprooted_statistic_distribution(2, TreeStatistic::SurfaceInversions).unwrap(),
            dist(&[(0, 1)])
        );
        assert_eq!(
            uprooted_statistic_distribution(4, TreeStatistic::SurfaceInversions).unwrap(),
            dist(&[(0, 12), (1, 10), (2, 4), (3, 1)])
        );
    }

    #[test]
    fn surface_inversions_never_exceed_inversions() {
        for n in 1..=6 {
            for t in enumerate_rooted_trees(n) {
                assert!(surface_inversions(&t) <= inversions(&t));
            }
        }
    }

    #[test]
    fn statistic_names() {
        assert_eq!(
            "root_degree".parse::<TreeStatistic>().unwrap(),
            TreeStatistic::RootDegree
        );
        assert_eq!(
            "surface-inversions".parse::<TreeStatistic>().unwrap(),
            TreeStatistic::SurfaceInversions
        );
        assert!("height".parse::<TreeStatistic>().is_err());
        assert!(uprooted_statistic_distribution(1, TreeStatistic::RootDegree).is_err());
    }

    #[test]
    fn root_degree_refinement() {
        for n in 2..=7u64 {
            let d = uprooted_statistic_distribution(n as usize, TreeStatistic::RootDegree).unwrap();
            for s in 1..n {
                let expect = binom(n, s + 1) * f_closed(n - 1, s).unwrap();
                assert_eq!(d.get(s as i64), expect, "n = {n}, s = {s}");
            }
            assert_eq!(d.total(), &power(n as i64 - 1, (n - 1) as u32));
        }
    }

    #[test]
    fn tree_json_shape() {
        let t = tree(3, &[2, 3, 0]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"root":3,"parents":[2,3,0]}"#);
        assert_eq!(serde_json::from_str::<RootedTree>(&json).unwrap(), t);
        assert!(serde_json::from_str::<RootedTree>(r#"{"root":1,"parents":[0,3,2]}"#).is_err());
        assert_eq!(t.to_string(), "3:2,3,0");
        let _ = ExactInt::from(0);
    }
}
