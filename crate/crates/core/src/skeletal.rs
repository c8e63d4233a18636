//! Skeletal homomorphisms: surjective vertex maps `phi: G -> H` under which
//! `a ~ b` in `G` exactly when `phi(a)` and `phi(b)` are equal or adjacent
//! in `H`.
//!
//! The fibres of such a map are always sets of pairwise closed twins, so the
//! quotient by closed-twin classes is the smallest skeletal and a graph is a
//! skeleton exactly when it has no closed twins. The partition brute force in
//! this module exists to check that characterization on small graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::verify_isomorphism;
use crate::partition::Partition;

/// Largest order accepted by the partition brute force (Bell(8) = 4140).
pub const MAX_BRUTE_FORCE_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    domain_order: usize,
    codomain_order: usize,
    map: Vec<usize>,
}

impl VertexMap {
    /// A surjection `0..map.len()` onto `0..codomain_order`.
    pub fn new(map: Vec<usize>, codomain_order: usize) -> Result<Self> {
        let mut hit = vec![false; codomain_order];
        for &v in &map {
            if v >= codomain_order {
                return Err(Error::SizeMismatch(format!(
                    "image {v} outside codomain 0..{codomain_order}"
                )));
            }
            hit[v] = true;
        }
        if let Some(v) = hit.iter().position(|&h| !h) {
            return Err(Error::NotSurjective(v));
        }
        Ok(VertexMap {
            domain_order: map.len(),
            codomain_order,
            map,
        })
    }

    pub fn identity(order: usize) -> Self {
        VertexMap {
            domain_order: order,
            codomain_order: order,
            map: (0..order).collect(),
        }
    }

    /// The quotient map onto the classes of `partition`.
    pub fn from_partition(partition: &Partition) -> Self {
        VertexMap {
            domain_order: partition.universe(),
            codomain_order: partition.len(),
            map: partition.class_ids().to_vec(),
        }
    }

    pub fn domain_order(&self) -> usize {
        self.domain_order
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    pub fn apply(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn fibre(&self, v: usize) -> Vec<usize> {
        (0..self.domain_order).filter(|&u| self.map[u] == v).collect()
    }

    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.codomain_order];
        for &v in &self.map {
            sizes[v] += 1;
        }
        sizes
    }

    /// Whether some fibre has more than one vertex.
    pub fn is_proper(&self) -> bool {
        self.codomain_order < self.domain_order
    }

    /// `other` after `self`.
    pub fn then(&self, other: &VertexMap) -> Result<VertexMap> {
        if self.codomain_order != other.domain_order {
            return Err(Error::SizeMismatch(format!(
                "cannot compose a map into {} vertices with a map from {}",
                self.codomain_order, other.domain_order
            )));
        }
        Ok(VertexMap {
            domain_order: self.domain_order,
            codomain_order: other.codomain_order,
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletalReport {
    pub is_skeletal: bool,
    /// First pair `(a, b)`, `a < b`, violating the adjacency condition.
    pub witness: Option<(usize, usize)>,
    pub fibre_sizes: Vec<usize>,
}

fn check_shapes(g: &Graph, h: &Graph, phi: &VertexMap) -> Result<()> {
    if phi.domain_order != g.order() || phi.codomain_order != h.order() {
        return Err(Error::SizeMismatch(format!(
            "map {} -> {} does not fit graphs of order {} and {}",
            phi.domain_order,
            phi.codomain_order,
            g.order(),
            h.order()
        )));
    }
    if let Some(v) = phi.fibre_sizes().iter().position(|&k| k == 0) {
        return Err(Error::NotSurjective(v));
    }
    Ok(())
}

pub fn verify_skeletal(g: &Graph, h: &Graph, phi: &VertexMap) -> Result<SkeletalReport> {
    check_shapes(g, h, phi)?;
    let n = g.order();
    let witness = (0..n).find_map(|a| {
        (a + 1..n)
            .find(|&b| {
                let (pa, pb) = (phi.map[a], phi.map[b]);
                g.has_edge(a, b) != (pa == pb || h.has_edge(pa, pb))
            })
            .map(|b| (a, b))
    });
    Ok(SkeletalReport {
        is_skeletal: witness.is_none(),
        witness,
        fibre_sizes: phi.fibre_sizes(),
    })
}

fn require_skeletal(g: &Graph, h: &Graph, phi: &VertexMap) -> Result<()> {
    match verify_skeletal(g, h, phi)?.witness {
        None => Ok(()),
        Some((a, b)) => Err(Error::NotSkeletal(a, b)),
    }
}

/// Closed-twin classes: `u` and `v` share a class iff `N[u] = N[v]`.
pub fn twin_partition(g: &Graph) -> Partition {
    let closed: Vec<_> = (0..g.order()).map(|u| g.closed_neighborhood(u)).collect();
    let p = Partition::from_keys(&closed);
    debug_assert!(p.classes().iter().all(|c| g.is_clique(c)));
    p
}

/// Quotient of `g` by `partition`, with two blocks adjacent when some cross
/// pair is adjacent. Fails unless the quotient map is skeletal.
pub fn quotient(g: &Graph, partition: &Partition) -> Result<(Graph, VertexMap)> {
    if partition.universe() != g.order() {
        return Err(Error::SizeMismatch(format!(
            "partition of {} elements for a graph of order {}",
            partition.universe(),
            g.order()
        )));
    }
    let phi = VertexMap::from_partition(partition);
    let mut h = Graph::empty(partition.len());
    for (u, v) in g.edges() {
        let (bu, bv) = (phi.map[u], phi.map[v]);
        if bu != bv {
            h.add_edge(bu, bv);
        }
    }
    if let Some(labels) = g.labels() {
        h = h.with_labels(partition.classes().iter().map(|c| labels[c[0]].clone()).collect());
    }
    if let Some((a, b)) = verify_skeletal(g, &h, &phi)?.witness {
        let (ba, bb) = (phi.map[a], phi.map[b]);
        return Err(if ba == bb {
            Error::NotSkeletal(a, b)
        } else {
            Error::InconsistentQuotient(ba.min(bb), ba.max(bb))
        });
    }
    Ok((h, phi))
}

/// The quotient by closed-twin classes: the skeletal with the fewest vertices.
pub fn max_skeletal(g: &Graph) -> (Graph, VertexMap) {
    quotient(g, &twin_partition(g)).expect("closed-twin quotient is always skeletal")
}

/// True when `g` has no proper skeletal, i.e. no two closed twins.
pub fn is_skeleton(g: &Graph) -> bool {
    twin_partition(g).is_discrete()
}

/// Every partition of `V(g)` whose quotient is skeletal, as restricted growth
/// strings (block ids in order of first appearance).
pub fn skeletal_partitions(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(Error::SizeLimitExceeded {
            what: "graph order",
            value: n,
            limit: MAX_BRUTE_FORCE_ORDER,
        });
    }
    let mut found = Vec::new();
    let mut blocks = Vec::with_capacity(n);
    enumerate_partitions(n, &mut blocks, 0, &mut |blocks, count| {
        if partition_is_skeletal(g, blocks, count) {
            found.push(blocks.to_vec());
        }
    });
    Ok(found)
}

fn enumerate_partitions(
    n: usize,
    blocks: &mut Vec<usize>,
    count: usize,
    visit: &mut impl FnMut(&[usize], usize),
) {
    if blocks.len() == n {
        visit(blocks, count);
        return;
    }
    for b in 0..=count {
        blocks.push(b);
        enumerate_partitions(n, blocks, count.max(b + 1), visit);
        blocks.pop();
    }
}

fn partition_is_skeletal(g: &Graph, blocks: &[usize], count: usize) -> bool {
    // 0 = unseen, 1 = adjacent, 2 = non-adjacent
    let mut state = vec![0u8; count * count];
    let n = blocks.len();
    for u in 0..n {
        for v in u + 1..n {
            let adjacent = g.has_edge(u, v);
            let (bu, bv) = (blocks[u], blocks[v]);
            if bu == bv {
                if !adjacent {
                    return false;
                }
                continue;
            }
            let want = if adjacent { 1 } else { 2 };
            let slot = &mut state[bu.min(bv) * count + bu.max(bv)];
            if *slot == 0 {
                *slot = want;
            } else if *slot != want {
                return false;
            }
        }
    }
    true
}

/// Whether some partition with a block of size at least two has a skeletal
/// quotient.
pub fn brute_force_has_proper_skeletal(g: &Graph) -> Result<bool> {
    let n = g.order();
    Ok(skeletal_partitions(g)?
        .iter()
        .any(|rgs| rgs.iter().max().map_or(0, |m| m + 1) < n))
}

/// Fewest vertices of any skeletal of `g`, by exhaustive search.
pub fn brute_force_min_skeletal_order(g: &Graph) -> Result<usize> {
    Ok(skeletal_partitions(g)?
        .iter()
        .map(|rgs| rgs.iter().max().map_or(0, |m| m + 1))
        .min()
        .unwrap_or(0))
}

/// `psi` after `phi`, after checking both are skeletal. The composite is
/// checked again before it is returned.
pub fn compose_skeletal(
    g: &Graph,
    h: &Graph,
    k: &Graph,
    phi: &VertexMap,
    psi: &VertexMap,
) -> Result<VertexMap> {
    require_skeletal(g, h, phi)?;
    require_skeletal(h, k, psi)?;
    let composite = phi.then(psi)?;
    require_skeletal(g, k, &composite)?;
    Ok(composite)
}

/// Induced copy of `H` inside `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedCopy {
    /// `vertices[v]` is the chosen representative of the fibre over `v`.
    pub vertices: Vec<usize>,
    /// The subgraph of `G` induced on `vertices`; its vertex `v` maps to
    /// vertex `v` of `H`.
    pub subgraph: Graph,
}

pub fn embedded_copy(g: &Graph, h: &Graph, phi: &VertexMap) -> Result<EmbeddedCopy> {
    require_skeletal(g, h, phi)?;
    let mut vertices = vec![usize::MAX; h.order()];
    for u in (0..g.order()).rev() {
        vertices[phi.map[u]] = u;
    }
    let subgraph = g.induced_subgraph(&vertices);
    let identity: Vec<usize> = (0..h.order()).collect();
    if !verify_isomorphism(&subgraph, h, &identity)? {
        let (a, b) = crate::iso::first_mismatch(&subgraph, h, &identity).unwrap_or_default();
        return Err(Error::IsomorphismCheckFailed(a, b));
    }
    Ok(EmbeddedCopy { vertices, subgraph })
}

/// Whether the fibre over `v` induces a complete subgraph of `g`.
pub fn fibre_subgraph_is_complete(g: &Graph, h: &Graph, phi: &VertexMap, v: usize) -> Result<bool> {
    require_skeletal(g, h, phi)?;
    if v >= h.order() {
        return Err(Error::SizeMismatch(format!("vertex {v} outside codomain")));
    }
    Ok(g.is_clique(&phi.fibre(v)))
}
