//! Pattern graphs with canonical decompositions.
//!
//! Packing and path problems need decompositions at sizes where exhaustive
//! search is out of reach, so each pattern family comes with a direct
//! construction: unions hang one subtree per component under a root with an
//! empty bag.

use super::decomposition::EXACT_TD_MAX_VERTICES;
use super::{exact_tree_decomposition, Graph, TreeDecomposition, Vertex};
use crate::error::{domain, Result};

/// Largest base graph for `k` copies of an explicit graph.
pub const MAX_COPY_BASE: usize = 5;
/// Largest explicit component of a multiset pattern.
pub const MAX_COMPONENT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSpec {
    /// `k` disjoint edges.
    Matching { k: usize },
    /// `k` disjoint triangles.
    Triangles { k: usize },
    /// `k` disjoint copies of an explicit graph.
    Copies { k: usize, base: Graph },
    /// Disjoint copies of every graph in the list.
    Multiset(Vec<Graph>),
    /// `k` disjoint cycles on `l` vertices each.
    Cycles { k: usize, l: usize },
    /// `k` disjoint paths on `l` vertices each.
    Paths { k: usize, l: usize },
    /// An explicit forest.
    Forest(Graph),
    /// A path with `length` edges whose first and last vertex are anchors.
    AnchoredPath { length: usize },
}

/// A pattern graph, a valid decomposition of it, and bookkeeping for
/// solvers built on top of embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub graph: Graph,
    pub td: TreeDecomposition,
    /// Vertices of each component copy, in order.
    pub components: Vec<Vec<Vertex>>,
    /// Vertices marked as anchors (first and last vertex of an anchored
    /// path); empty otherwise.
    pub anchors: Vec<Vertex>,
}

impl Pattern {
    /// The same pattern with edges oriented from smaller to larger vertex.
    /// Paths become directed paths.
    pub fn oriented(mut self) -> Self {
        self.graph = self.graph.oriented();
        self
    }
}

pub fn build_pattern(spec: &PatternSpec) -> Result<Pattern> {
    match spec {
        PatternSpec::Matching { k } => copies(*k, &Graph::complete(2)),
        PatternSpec::Triangles { k } => copies(*k, &Graph::complete(3)),
        PatternSpec::Copies { k, base } => {
            if base.vertex_count() > MAX_COPY_BASE {
                return Err(domain(format!(
                    "base graph has {} vertices, at most {MAX_COPY_BASE} allowed",
                    base.vertex_count()
                )));
            }
            copies(*k, base)
        }
        PatternSpec::Multiset(parts) => {
            if parts.is_empty() {
                return Err(domain("multiset pattern needs at least one graph"));
            }
            if let Some(g) = parts.iter().find(|g| g.vertex_count() > MAX_COMPONENT) {
                return Err(domain(format!(
                    "component has {} vertices, at most {MAX_COMPONENT} allowed",
                    g.vertex_count()
                )));
            }
            let tds = parts.iter().map(single_bag).collect::<Vec<_>>();
            union(parts, &tds)
        }
        PatternSpec::Cycles { k, l } => {
            positive(*k, "k")?;
            if *l < 3 {
                return Err(domain(format!("cycles need length at least 3, got {l}")));
            }
            let parts = vec![Graph::cycle(*l); *k];
            let tds = vec![cycle_decomposition(*l); *k];
            union(&parts, &tds)
        }
        PatternSpec::Paths { k, l } => {
            positive(*k, "k")?;
            positive(*l, "l")?;
            let parts = vec![Graph::path(*l); *k];
            let tds = vec![path_decomposition(*l); *k];
            union(&parts, &tds)
        }
        PatternSpec::Forest(forest) => forest_pattern(forest),
        PatternSpec::AnchoredPath { length } => {
            let n = length + 1;
            let graph = Graph::path(n);
            Ok(Pattern {
                td: path_decomposition(n),
                components: vec![(0..n).collect()],
                anchors: vec![0, n - 1],
                graph,
            })
        }
    }
}

fn positive(v: usize, name: &str) -> Result<()> {
    if v == 0 {
        return Err(domain(format!("{name} must be positive")));
    }
    Ok(())
}

fn copies(k: usize, base: &Graph) -> Result<Pattern> {
    positive(k, "k")?;
    let parts = vec![base.clone(); k];
    let tds = vec![single_bag(base); k];
    union(&parts, &tds)
}

fn single_bag(g: &Graph) -> TreeDecomposition {
    TreeDecomposition::new(vec![None], vec![(0..g.vertex_count()).collect()]).expect("single node")
}

/// Bags `{0, i, i+1}` for `i = 1..l-2`, chained.
fn cycle_decomposition(l: usize) -> TreeDecomposition {
    let bags: Vec<Vec<Vertex>> = (1..l - 1).map(|i| vec![0, i, i + 1]).collect();
    let parent = (0..bags.len()).map(|i| i.checked_sub(1)).collect();
    TreeDecomposition::new(parent, bags).expect("chain")
}

/// Edge bags `{i, i+1}` chained; a single vertex gets one bag.
fn path_decomposition(l: usize) -> TreeDecomposition {
    if l == 1 {
        return TreeDecomposition::new(vec![None], vec![vec![0]]).expect("single node");
    }
    let bags: Vec<Vec<Vertex>> = (0..l - 1).map(|i| vec![i, i + 1]).collect();
    let parent = (0..bags.len()).map(|i| i.checked_sub(1)).collect();
    TreeDecomposition::new(parent, bags).expect("chain")
}

fn union(parts: &[Graph], tds: &[TreeDecomposition]) -> Result<Pattern> {
    let graph = Graph::disjoint_union(parts)?;
    let mut offset = 0;
    let mut shifted = Vec::with_capacity(parts.len());
    let mut components = Vec::with_capacity(parts.len());
    for (g, td) in parts.iter().zip(tds) {
        let o = offset;
        shifted.push(td.map_vertices(|v| v + o));
        components.push((o..o + g.vertex_count()).collect());
        offset += g.vertex_count();
    }
    let td = TreeDecomposition::join_under_empty_root(&shifted);
    Ok(Pattern { graph, td, components, anchors: Vec::new() })
}

fn forest_pattern(forest: &Graph) -> Result<Pattern> {
    if forest.is_directed() {
        return Err(domain("forest patterns must be undirected"));
    }
    let comps = forest.components();
    let edges_in: usize = forest.edge_count();
    if edges_in + comps.len() != forest.vertex_count() {
        return Err(domain("pattern graph is not a forest"));
    }
    let mut parts = Vec::with_capacity(comps.len());
    let mut tds = Vec::with_capacity(comps.len());
    let mut order = Vec::with_capacity(forest.vertex_count());
    for comp in &comps {
        let (tree, _) = forest.induced(comp);
        let td = if tree.vertex_count() <= EXACT_TD_MAX_VERTICES {
            exact_tree_decomposition(&tree)?
        } else {
            rooted_tree_decomposition(&tree)
        };
        order.extend(comp.iter().copied());
        parts.push(tree);
        tds.push(td);
    }
    let mut pattern = union(&parts, &tds)?;
    // `union` numbers vertices component by component; map back to the
    // caller's numbering so witnesses refer to the given forest.
    let mut back = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        back[new] = old;
    }
    pattern.graph = forest.clone();
    pattern.td = pattern.td.map_vertices(|v| back[v]);
    pattern.components = comps;
    Ok(pattern)
}

/// Width-1 decomposition of a tree rooted at vertex 0: the root gets the bag
/// `{0}` and each other vertex `v` the bag `{parent(v), v}` below its
/// parent's bag.
fn rooted_tree_decomposition(tree: &Graph) -> TreeDecomposition {
    let n = tree.vertex_count();
    let mut parent_node = vec![None; n];
    let mut bags = vec![Vec::new(); n];
    bags[0] = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                bags[w] = vec![u, w];
                parent_node[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    TreeDecomposition::new(parent_node, bags).expect("BFS tree")
}
