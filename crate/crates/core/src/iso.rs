//! Isomorphism testing for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::is_permutation;

/// Default soft limit on the order accepted by [`are_isomorphic`].
pub const DEFAULT_MAX_ORDER: usize = 64;

/// Whether `map` (vertex `u` of `g` to `map[u]` of `h`) preserves adjacency
/// and non-adjacency.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> Result<bool> {
    if g.order() != h.order() || !is_permutation(map, h.order()) {
        return Err(Error::NotABijection);
    }
    Ok(first_mismatch(g, h, map).is_none())
}

/// First pair `(u, v)` whose adjacency is not preserved by `map`.
pub(crate) fn first_mismatch(g: &Graph, h: &Graph, map: &[usize]) -> Option<(usize, usize)> {
    (0..g.order()).find_map(|u| {
        (u + 1..g.order())
            .find(|&v| g.has_edge(u, v) != h.has_edge(map[u], map[v]))
            .map(|v| (u, v))
    })
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with_limit(g, h, DEFAULT_MAX_ORDER)
}

/// Backtracking search for an isomorphism `g -> h`, pruned by degree and
/// sorted neighbour-degree signatures.
pub fn are_isomorphic_with_limit(g: &Graph, h: &Graph, max_order: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > max_order || h.order() > max_order {
        return Err(Error::SizeLimitExceeded {
            what: "graph order",
            value: n.max(h.order()),
            limit: max_order,
        });
    }
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return Ok(None);
    }

    let order = search_order(g, &sig_g);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&w| sig_h[w] == sig_g[u]).collect())
        .collect();

    let mut search = Search {
        g,
        h,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(search.extend(0).then_some(search.map))
}

type Signature = (usize, Vec<usize>);

fn signatures(g: &Graph) -> Vec<Signature> {
    let degrees = g.degrees();
    (0..g.order())
        .map(|u| {
            let mut nd: Vec<usize> = g.neighbors(u).ones().map(|v| degrees[v]).collect();
            nd.sort_unstable();
            (degrees[u], nd)
        })
        .collect()
}

/// Vertices ordered so each next vertex has as many already-placed
/// neighbours as possible; ties go to the rarer signature.
fn search_order(g: &Graph, sig: &[Signature]) -> Vec<usize> {
    let n = g.order();
    let rarity: Vec<usize> = (0..n)
        .map(|u| sig.iter().filter(|s| **s == sig[u]).count())
        .collect();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| (std::cmp::Reverse(links[u]), rarity[u], u))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for v in g.neighbors(next).ones() {
            links[v] += 1;
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for &w in &self.candidates[u] {
            if self.used[w] || !self.consistent(depth, u, w) {
                continue;
            }
            self.map[u] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[u] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, u: usize, w: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&p| self.g.has_edge(u, p) == self.h.has_edge(w, self.map[p]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::intersection_graph;

    #[test]
    fn cycle_is_isomorphic_to_itself() {
        let c5 = Graph::cycle(5);
        let map = are_isomorphic(&c5, &c5).unwrap().unwrap();
        assert!(verify_isomorphism(&c5, &c5, &map).unwrap());
    }

    #[test]
    fn degree_sequences_separate_c4_and_k4() {
        assert_eq!(are_isomorphic(&Graph::cycle(4), &Graph::complete(4)).unwrap(), None);
    }

    #[test]
    fn relabelled_intersection_graph_is_found() {
        let g = intersection_graph(3).unwrap();
        let perm = [6, 2, 4, 0, 1, 5, 3];
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            edges.push((perm[u], perm[v]));
        }
        let h = Graph::from_edges(7, &edges).unwrap();
        let map = are_isomorphic(&g, &h).unwrap().unwrap();
        assert!(verify_isomorphism(&g, &h, &map).unwrap());
    }

    #[test]
    fn same_degrees_but_not_isomorphic() {
        // C6 versus two triangles: both 2-regular on 6 vertices.
        let c6 = Graph::cycle(6);
        let triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(are_isomorphic(&c6, &triangles).unwrap(), None);
    }

    #[test]
    fn verification_rejects_bad_maps() {
        let k3 = Graph::complete(3);
        assert!(!verify_isomorphism(&k3, &Graph::empty(3), &[0, 1, 2]).unwrap());
        assert!(verify_isomorphism(&k3, &k3, &[0, 1, 2]).unwrap());
        assert_eq!(verify_isomorphism(&k3, &k3, &[0, 0, 1]), Err(Error::NotABijection));
        assert_eq!(verify_isomorphism(&k3, &Graph::complete(2), &[0, 1]), Err(Error::NotABijection));
    }

    #[test]
    fn size_guard() {
        let big = Graph::empty(10);
        assert!(matches!(
            are_isomorphic_with_limit(&big, &big, 8),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
