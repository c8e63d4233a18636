//! Simple undirected graphs with bit-set adjacency rows.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::constructors::format_subset;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest ground set accepted by [`intersection_graph`].
pub const MAX_INTERSECTION_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(order); order],
            labels: None,
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            g.add_edge(u, (u + 1) % order);
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 1..order {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range 0..{order}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on `order` vertices with `u ~ v` iff `adjacent(u, v)`
    /// for `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "label count must equal the order");
        self.labels = Some(labels);
        self
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    /// `N[u]`: the neighbourhood of `u` together with `u`.
    pub fn closed_neighborhood(&self, u: usize) -> FixedBitSet {
        let mut set = self.adj[u].clone();
        set.insert(u);
        set
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, u: usize) -> String {
        match &self.labels {
            Some(labels) => labels[u].clone(),
            None => u.to_string(),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::from_fn(self.order(), |u, v| !self.has_edge(u, v));
        g.labels = self.labels.clone();
        g
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]));
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Whether the vertices in `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Symmetric, loop-free and rows sized to the order.
    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        (0..n).all(|u| {
            self.adj[u].len() == n
                && !self.adj[u].contains(u)
                && self.adj[u].ones().all(|v| self.adj[v].contains(u))
        })
    }

    pub fn stats(&self) -> GraphStats {
        let degrees = self.degrees();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        let n = self.order();
        GraphStats {
            order: n,
            is_connected: components(self).len() <= 1,
            is_complete: degrees.iter().all(|&d| d + 1 == n),
            is_null: edge_count == 0,
            edge_count,
            degrees,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = GraphDoc {
            order: self.order(),
            labels: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        let mut g = Graph::from_edges(doc.order, &edges)?;
        if let Some(labels) = doc.labels {
            if labels.len() != doc.order {
                return Err(Error::InvalidGraph(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    doc.order
                )));
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for u in 0..self.order() {
            let _ = writeln!(out, "  {u} [label={:?}];", self.label(u));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_edge_list(&self) -> String {
        self.edges().into_iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    order: usize,
    labels: Option<Vec<String>>,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub order: usize,
    pub degrees: Vec<usize>,
    pub edge_count: usize,
    pub is_connected: bool,
    pub is_complete: bool,
    pub is_null: bool,
}

/// Connected components by breadth-first search.
pub fn components(g: &Graph) -> Partition {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).ones() {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    Partition::from_assignment(&comp)
}

pub fn all_components_complete(g: &Graph) -> bool {
    components(g).classes().iter().all(|c| g.is_clique(c))
}

/// Intersection graph of the non-empty subsets of `{0, .., n-1}`. Vertex `i`
/// is the subset with bitmask `i + 1`.
pub fn intersection_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("ground set must be non-empty".into()));
    }
    if n > MAX_INTERSECTION_N {
        return Err(Error::SizeLimitExceeded {
            what: "n",
            value: n,
            limit: MAX_INTERSECTION_N,
        });
    }
    let masks: Vec<u32> = (1..1u32 << n).collect();
    let labels = masks.iter().map(|&m| format_subset(m)).collect();
    Ok(Graph::from_fn(masks.len(), |u, v| masks[u] & masks[v] != 0).with_labels(labels))
}

/// Degree of a `k`-element subset in the intersection graph on an `n`-set:
/// `2^n - 2^(n-k) - 1`.
pub fn degree_of_subset_vertex(n: u32, k: u32) -> u64 {
    assert!(1 <= k && k <= n, "rank must lie in 1..=n");
    (1u64 << n) - (1u64 << (n - k)) - 1
}

/// Edge count of the intersection graph on an `n`-set:
/// `((2^n - 1)^2 - (3^n - 2^n)) / 2`.
pub fn intersection_graph_edge_count(n: u32) -> u64 {
    let two = 1u64 << n;
    ((two - 1).pow(2) - (3u64.pow(n) - two)) / 2
}
