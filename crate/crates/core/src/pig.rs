//! Principal ideal graphs of a semigroup and their L-class (R-class)
//! quotients.
//!
//! The vertices of the full graph are the non-zero elements in element
//! order; two are adjacent when their principal ideals on the chosen side
//! share an element other than the zero. Without a zero any common element
//! counts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructors::{partial_bijections, MAX_ISN};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::green::{green_classes, principal_ideals, Side};
use crate::iso::{first_mismatch, verify_isomorphism};
use crate::partition::Partition;
use crate::semigroup::Semigroup;
use crate::skeletal::{quotient, VertexMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reduction {
    /// One vertex per non-zero element.
    Full,
    /// One vertex per L-class (R-class) of non-zero elements.
    Skeletal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PigVariant {
    pub side: Side,
    pub reduction: Reduction,
}

impl fmt::Display for PigVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.reduction {
            Reduction::Full => "",
            Reduction::Skeletal => "S",
        };
        let side = match self.side {
            Side::Left => "Lambda",
            Side::Right => "P",
        };
        write!(f, "{prefix}{side}")
    }
}

/// Non-zero elements in element order; vertex `i` of every full graph is
/// element `vertices[i]`.
pub fn pig_vertices(s: &Semigroup) -> Vec<usize> {
    s.elements().filter(|&x| Some(x) != s.zero()).collect()
}

fn vertex_labels(s: &Semigroup, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&x| s.label(x)).collect()
}

fn nonempty_vertices(s: &Semigroup) -> Result<Vec<usize>> {
    let vertices = pig_vertices(s);
    if vertices.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    Ok(vertices)
}

/// Principal ideal graph on `side`, straight from the ideals.
pub fn principal_ideal_graph(s: &Semigroup, side: Side) -> Result<Graph> {
    let vertices = nonempty_vertices(s)?;
    let mut ideals = principal_ideals(s, side);
    if let Some(z) = s.zero() {
        for ideal in &mut ideals {
            ideal.set(z, false);
        }
    }
    let g = Graph::from_fn(vertices.len(), |u, v| {
        !ideals[vertices[u]].is_disjoint(&ideals[vertices[v]])
    });
    Ok(g.with_labels(vertex_labels(s, &vertices)))
}

pub fn left_pig(s: &Semigroup) -> Result<Graph> {
    principal_ideal_graph(s, Side::Left)
}

pub fn right_pig(s: &Semigroup) -> Result<Graph> {
    principal_ideal_graph(s, Side::Right)
}

/// Inverse-semigroup adjacency: `x ~ y` in the left graph iff `x y^-1 != 0`,
/// and in the right graph iff `x^-1 y != 0`.
pub fn pig_inverse_fast(s: &Semigroup, side: Side) -> Result<Graph> {
    let inv = s.inverses().ok_or(Error::NotInverseSemigroup)?;
    let vertices = nonempty_vertices(s)?;
    let g = match s.zero() {
        None => Graph::complete(vertices.len()),
        Some(z) => Graph::from_fn(vertices.len(), |u, v| {
            let (x, y) = (vertices[u], vertices[v]);
            let p = match side {
                Side::Left => s.mul(x, inv[y]),
                Side::Right => s.mul(inv[x], y),
            };
            p != z
        }),
    };
    Ok(g.with_labels(vertex_labels(s, &vertices)))
}

pub fn left_pig_inverse_fast(s: &Semigroup) -> Result<Graph> {
    pig_inverse_fast(s, Side::Left)
}

/// Left graph of `IS_n` from image intersections, without a Cayley table.
/// Vertex order and labels match [`left_pig`] on `symmetric_inverse(n)`.
pub fn isn_left_pig(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n > MAX_ISN {
        return Err(Error::SizeLimitExceeded {
            what: "n",
            value: n,
            limit: MAX_ISN,
        });
    }
    let maps: Vec<_> = partial_bijections(n).into_iter().skip(1).collect();
    let images: Vec<u32> = maps.iter().map(|m| m.image()).collect();
    let g = Graph::from_fn(maps.len(), |u, v| images[u] & images[v] != 0);
    Ok(g.with_labels(maps.iter().map(ToString::to_string).collect()))
}

/// Quotient of the full graph on `side` by Green's L (or R) classes,
/// together with the quotient map `a -> L_a`. Classes are ordered by their
/// smallest element.
///
/// The quotient is checked on the spot: every pair of representatives of
/// two classes must agree on adjacency, otherwise this fails with
/// [`Error::InconsistentQuotient`].
pub fn skeletal_pig(s: &Semigroup, side: Side) -> Result<(Graph, VertexMap)> {
    let g = principal_ideal_graph(s, side)?;
    let classes = green_classes(s, side);
    let keys: Vec<usize> = pig_vertices(s).iter().map(|&x| classes.class_of(x)).collect();
    quotient(&g, &Partition::from_keys(&keys))
}

pub fn s_left_pig(s: &Semigroup) -> Result<(Graph, VertexMap)> {
    skeletal_pig(s, Side::Left)
}

pub fn s_right_pig(s: &Semigroup) -> Result<(Graph, VertexMap)> {
    skeletal_pig(s, Side::Right)
}

pub fn build_pig(s: &Semigroup, variant: PigVariant) -> Result<Graph> {
    match variant.reduction {
        Reduction::Full => principal_ideal_graph(s, variant.side),
        Reduction::Skeletal => skeletal_pig(s, variant.side).map(|(g, _)| g),
    }
}

/// `x -> x^-1` as a vertex bijection from the left graph to the right graph,
/// checked pair by pair.
pub fn involution_pig_isomorphism(s: &Semigroup) -> Result<Vec<usize>> {
    let inv = s.inverses().ok_or(Error::NotInverseSemigroup)?;
    involution_pig_isomorphism_with(s, &inv)
}

/// As [`involution_pig_isomorphism`] for an explicitly supplied involution.
pub fn involution_pig_isomorphism_with(s: &Semigroup, sigma: &[usize]) -> Result<Vec<usize>> {
    if !s.check_involution(sigma)? {
        return Err(Error::InvalidParameter("map is not an involution of the semigroup".into()));
    }
    let vertices = nonempty_vertices(s)?;
    let mut position = vec![usize::MAX; s.order()];
    for (i, &x) in vertices.iter().enumerate() {
        position[x] = i;
    }
    let map: Vec<usize> = vertices.iter().map(|&x| position[sigma[x]]).collect();
    let left = left_pig(s)?;
    let right = right_pig(s)?;
    if !verify_isomorphism(&left, &right, &map)? {
        let (a, b) = first_mismatch(&left, &right, &map).unwrap_or_default();
        return Err(Error::IsomorphismCheckFailed(a, b));
    }
    Ok(map)
}
