use super::{Graph, Vertex};
use crate::error::{guard, Error, Result};

/// Largest pattern for which [`exact_tree_decomposition`] searches all
/// elimination orders.
pub const EXACT_TD_MAX_VERTICES: usize = 8;

/// A rooted tree of bags over the vertices of some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    parent: Vec<Option<usize>>,
    bags: Vec<Vec<Vertex>>,
    children: Vec<Vec<usize>>,
    root: usize,
    /// Distance to the deepest leaf below each node.
    height: Vec<usize>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated. Fails unless `parent` describes a
    /// single rooted tree.
    pub fn new(parent: Vec<Option<usize>>, mut bags: Vec<Vec<Vertex>>) -> Result<Self> {
        let count = parent.len();
        if count == 0 || bags.len() != count {
            return Err(Error::InvalidDecomposition("need one bag per node and at least one node".into()));
        }
        let roots: Vec<usize> = (0..count).filter(|&i| parent[i].is_none()).collect();
        let [root] = roots[..] else {
            return Err(Error::InvalidDecomposition(format!("expected exactly one root, found {}", roots.len())));
        };
        let mut children = vec![Vec::new(); count];
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= count || p == i {
                    return Err(Error::InvalidDecomposition(format!("node {i} has invalid parent {p}")));
                }
                children[p].push(i);
            }
        }
        // Every node must reach the root.
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            order.extend(children[order[i]].iter().copied());
            i += 1;
        }
        if order.len() != count {
            return Err(Error::InvalidDecomposition("parent pointers contain a cycle".into()));
        }
        let mut height = vec![0; count];
        for &v in order.iter().rev() {
            height[v] = children[v].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
        }
        for bag in bags.iter_mut() {
            bag.sort_unstable();
            bag.dedup();
        }
        Ok(TreeDecomposition { parent, bags, children, root, height })
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn bag(&self, node: usize) -> &[Vertex] {
        &self.bags[node]
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    /// Largest bag size minus one (0 when every bag has at most one vertex).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Edges on the longest root-to-leaf path.
    pub fn tree_depth(&self) -> usize {
        self.height[self.root]
    }

    /// `max(width, tree_depth)`.
    pub fn depth(&self) -> usize {
        self.width().max(self.tree_depth())
    }

    /// Number of levels, which is the number of sequential phases of a
    /// bottom-up pass.
    pub fn levels(&self) -> usize {
        self.tree_depth() + 1
    }

    /// Nodes grouped by height, leaves first. A node only depends on nodes
    /// in earlier groups.
    pub fn bottom_up_levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.levels()];
        for (node, &h) in self.height.iter().enumerate() {
            levels[h].push(node);
        }
        levels
    }

    /// Re-labels bag contents through `map` (used to shift decompositions
    /// of components into a disjoint union).
    pub(crate) fn map_vertices(&self, map: impl Fn(Vertex) -> Vertex) -> Self {
        let bags = self.bags.iter().map(|b| b.iter().map(|&v| map(v)).collect()).collect();
        TreeDecomposition::new(self.parent.clone(), bags).expect("relabeling keeps the tree")
    }

    /// Hangs the given decompositions under a fresh root with an empty bag.
    pub(crate) fn join_under_empty_root(parts: &[TreeDecomposition]) -> Self {
        let mut parent = vec![None];
        let mut bags = vec![Vec::new()];
        for td in parts {
            let offset = parent.len();
            for i in 0..td.node_count() {
                parent.push(Some(td.parent[i].map_or(0, |p| p + offset)));
                bags.push(td.bags[i].clone());
            }
        }
        TreeDecomposition::new(parent, bags).expect("joined tree is rooted")
    }
}

/// Outcome of checking a decomposition against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdValidation {
    Valid {
        width: usize,
    },
    BagVertexOutOfRange {
        node: usize,
        vertex: Vertex,
    },
    UncoveredEdge(Vertex, Vertex),
    /// The nodes containing this vertex do not form a connected subtree.
    Disconnected(Vertex),
    /// No bag contains this vertex.
    UncoveredVertex(Vertex),
}

impl TdValidation {
    pub fn is_valid(&self) -> bool {
        matches!(self, TdValidation::Valid { .. })
    }
}

/// Checks edge coverage and the connected-occurrence condition, reporting
/// the first violation found. Vertices that occur in no bag are reported as
/// uncovered.
pub fn validate_tree_decomposition(h: &Graph, td: &TreeDecomposition) -> TdValidation {
    let n = h.vertex_count();
    for (node, bag) in td.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= n) {
            return TdValidation::BagVertexOutOfRange { node, vertex: v };
        }
    }
    for &(u, v) in h.edges() {
        if !td.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()) {
            return TdValidation::UncoveredEdge(u, v);
        }
    }
    for v in 0..n {
        let holding: Vec<bool> = td.bags.iter().map(|b| b.binary_search(&v).is_ok()).collect();
        let count = holding.iter().filter(|&&x| x).count();
        if count == 0 {
            return TdValidation::UncoveredVertex(v);
        }
        // A set of tree nodes is connected iff exactly one of them has its
        // parent outside the set.
        let tops = (0..td.node_count()).filter(|&i| holding[i] && td.parent[i].is_none_or(|p| !holding[p])).count();
        if tops != 1 {
            return TdValidation::Disconnected(v);
        }
    }
    TdValidation::Valid { width: td.width() }
}

/// A minimum-width decomposition, by search over all elimination orders.
/// Direction is ignored.
pub fn exact_tree_decomposition(h: &Graph) -> Result<TreeDecomposition> {
    let n = h.vertex_count();
    if n > EXACT_TD_MAX_VERTICES {
        return Err(guard(format!(
            "exact tree decomposition supports at most {EXACT_TD_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return TreeDecomposition::new(vec![None], vec![Vec::new()]);
    }
    let adj: Vec<u16> = (0..n).map(|v| h.undirected_neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect();
    let mut best = (usize::MAX, Vec::new());
    let mut order = Vec::with_capacity(n);
    search_orders(&adj, (1u16 << n) - 1, 0, &mut order, &mut best);
    Ok(decomposition_from_order(&adj, &best.1))
}

fn search_orders(adj: &[u16], remaining: u16, width: usize, order: &mut Vec<usize>, best: &mut (usize, Vec<usize>)) {
    if width >= best.0 {
        return;
    }
    if remaining == 0 {
        *best = (width, order.clone());
        return;
    }
    for v in 0..adj.len() {
        if remaining >> v & 1 == 0 {
            continue;
        }
        let mut next = adj.to_vec();
        let nb = next[v] & remaining & !(1 << v);
        for u in 0..adj.len() {
            if nb >> u & 1 == 1 {
                next[u] |= nb & !(1 << u);
            }
        }
        order.push(v);
        search_orders(&next, remaining & !(1 << v), width.max(nb.count_ones() as usize), order, best);
        order.pop();
    }
}

fn decomposition_from_order(adj: &[u16], order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut fill = adj.to_vec();
    let mut remaining: u16 = (1u16 << n) - 1;
    let mut bags = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let nb = fill[v] & remaining & !(1 << v);
        for u in 0..n {
            if nb >> u & 1 == 1 {
                fill[u] |= nb & !(1 << u);
            }
        }
        remaining &= !(1 << v);
        let mut bag = vec![v];
        bag.extend((0..n).filter(|&u| nb >> u & 1 == 1));
        bags.push(bag);
        let next = (0..n).filter(|&u| nb >> u & 1 == 1).map(|u| position[u]).min();
        parent.push(match next {
            Some(j) => Some(j),
            None if i + 1 < n => Some(n - 1),
            None => None,
        });
    }
    TreeDecomposition::new(parent, bags).expect("elimination order yields a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn td(parent: Vec<Option<usize>>, bags: Vec<Vec<usize>>) -> TreeDecomposition {
        TreeDecomposition::new(parent, bags).unwrap()
    }

    #[test]
    fn validation_examples() {
        let p3 = Graph::path(3);
        let ok = td(vec![None, Some(0)], vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(validate_tree_decomposition(&p3, &ok), TdValidation::Valid { width: 1 });

        let k3 = Graph::complete(3);
        let one = td(vec![None], vec![vec![0, 1, 2]]);
        assert_eq!(validate_tree_decomposition(&k3, &one), TdValidation::Valid { width: 2 });

        let bad = td(vec![None, Some(0)], vec![vec![0, 1], vec![2]]);
        assert_eq!(validate_tree_decomposition(&p3, &bad), TdValidation::UncoveredEdge(1, 2));
    }

    #[test]
    fn detects_disconnected_occurrence() {
        let p3 = Graph::path(3);
        // vertex 0 appears in nodes 1 and 2 which are separated by node 0
        let bad = td(vec![None, Some(0), Some(0)], vec![vec![1], vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(validate_tree_decomposition(&p3, &bad), TdValidation::Disconnected(0));
        let missing = td(vec![None], vec![vec![0, 1]]);
        assert_eq!(validate_tree_decomposition(&Graph::empty(3), &missing), TdValidation::UncoveredVertex(2));
    }

    #[test]
    fn rejects_malformed_trees() {
        assert!(TreeDecomposition::new(vec![None, None], vec![vec![], vec![]]).is_err());
        assert!(TreeDecomposition::new(vec![Some(1), Some(0)], vec![vec![], vec![]]).is_err());
        assert!(TreeDecomposition::new(vec![None, Some(2), Some(1)], vec![vec![]; 3]).is_err());
    }

    #[test]
    fn depth_accounting() {
        let chain = td(vec![None, Some(0), Some(1)], vec![vec![0], vec![0, 1], vec![1, 2]]);
        assert_eq!(chain.tree_depth(), 2);
        assert_eq!(chain.levels(), 3);
        assert_eq!(chain.width(), 1);
        assert_eq!(chain.depth(), 2);
        assert_eq!(chain.bottom_up_levels(), vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn exact_widths() {
        assert_eq!(exact_tree_decomposition(&Graph::complete(3)).unwrap().width(), 2);
        assert_eq!(exact_tree_decomposition(&Graph::path(4)).unwrap().width(), 1);
        assert_eq!(exact_tree_decomposition(&Graph::complete(4)).unwrap().width(), 3);
        assert_eq!(exact_tree_decomposition(&Graph::cycle(4)).unwrap().width(), 2);
        assert_eq!(exact_tree_decomposition(&Graph::empty(3)).unwrap().width(), 0);
        assert!(matches!(exact_tree_decomposition(&Graph::path(9)), Err(Error::Guard(_))));
    }

    #[test]
    fn exact_decompositions_validate() {
        for g in [Graph::complete(5), Graph::cycle(7), Graph::star(5), Graph::empty(1), Graph::empty(0)] {
            let t = exact_tree_decomposition(&g).unwrap();
            assert!(validate_tree_decomposition(&g, &t).is_valid(), "{g:?}");
        }
    }
}
