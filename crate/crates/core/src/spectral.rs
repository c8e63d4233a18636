//! Exact integer linear algebra for adjacency, Laplacian and signless
//! Laplacian matrices, and eigenvalue multiplicity checks around closed-twin
//! classes.
//!
//! For a real symmetric matrix the multiplicity of an eigenvalue equals the
//! nullity of `M - lambda I`, so every multiplicity here is an exact rank
//! computation over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::skeletal::{max_skeletal, verify_skeletal, VertexMap};

/// Dense square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = IntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.entries[i * self.n + j] = value.into();
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self - lambda I`.
    pub fn shifted(&self, lambda: i64) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] -= lambda;
        }
        m
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<BigInt> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| x[j] != 0)
                    .map(|j| self.get(i, j) * x[j])
                    .sum()
            })
            .collect()
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        (0..self.n).map(|j| self.get(i, j)).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[BigInt]>::to_vec).collect()
    }
}

/// The 0/1 adjacency matrix `A`.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

fn degree_plus(g: &Graph, sign: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.order());
    for u in 0..g.order() {
        m.set(u, u, g.degree(u) as i64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, sign);
        m.set(v, u, sign);
    }
    m
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &Graph) -> IntMatrix {
    let m = degree_plus(g, -1);
    debug_assert!((0..m.dim()).all(|i| m.row_sum(i).is_zero()));
    m
}

/// `Q = D + A`.
pub fn signless_laplacian_matrix(g: &Graph) -> IntMatrix {
    degree_plus(g, 1)
}

/// Rank over the rationals by fraction-free (Bareiss) elimination with row
/// pivoting. Every division is exact.
pub fn integer_rank(m: &IntMatrix) -> usize {
    let n = m.n;
    let mut a = m.to_rows();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..n {
            for j in col + 1..n {
                let t = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = t / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Multiplicity of `lambda` as an eigenvalue of the symmetric matrix `m`,
/// i.e. the nullity of `m - lambda I`.
pub fn eigen_multiplicity(m: &IntMatrix, lambda: i64) -> Result<usize> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(m.n - integer_rank(&m.shifted(lambda)))
}

/// Multiplicities around one fibre of size `k >= 2` of a skeletal map. The
/// fibre's vertices are closed twins, so they share the degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClassSpectrum {
    pub vertices: Vec<usize>,
    pub k: usize,
    pub degree: usize,
    /// Multiplicity of -1 in `A`.
    pub adjacency_multiplicity: usize,
    /// Multiplicity of `degree + 1` in `L`.
    pub laplacian_multiplicity: usize,
    /// Multiplicity of `degree - 1` in `Q`.
    pub signless_multiplicity: usize,
    /// `e_u - e_v` for the first two members satisfies `M x = lambda x`
    /// exactly for all three matrices.
    pub eigenvector_verified: bool,
    pub passes: bool,
    /// Degree of the fibre's image vertex in the skeletal.
    pub skeletal_degree: usize,
    /// Multiplicity of `skeletal_degree + 1` in `L`.
    pub laplacian_multiplicity_at_skeletal_degree: usize,
    /// Multiplicity of `skeletal_degree - 1` in `Q`.
    pub signless_multiplicity_at_skeletal_degree: usize,
    /// Whether both skeletal-degree multiplicities reach `k - 1`.
    pub skeletal_degree_form_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinSpectralReport {
    pub classes: Vec<TwinClassSpectrum>,
    pub all_pass: bool,
}

fn eigenvector_holds(m: &IntMatrix, lambda: i64, x: &[i64]) -> bool {
    m.mul_vec(x)
        .iter()
        .zip(x)
        .all(|(mx, &xi)| *mx == BigInt::from(lambda * xi))
}

/// For every closed-twin class of size `k >= 2` with common degree `d`:
/// `-1` in `A`, `d + 1` in `L` and `d - 1` in `Q` each have multiplicity at
/// least `k - 1`.
pub fn twin_spectral_report(g: &Graph) -> TwinSpectralReport {
    let (h, phi) = max_skeletal(g);
    fibre_spectral_report(g, &h, &phi).expect("twin quotient is skeletal")
}

/// Same checks as [`twin_spectral_report`] over the fibres of a given
/// skeletal map `phi: g -> h`.
pub fn fibre_spectral_report(g: &Graph, h: &Graph, phi: &VertexMap) -> Result<TwinSpectralReport> {
    if let Some((a, b)) = verify_skeletal(g, h, phi)?.witness {
        return Err(Error::NotSkeletal(a, b));
    }
    let a = adjacency_matrix(g);
    let l = laplacian_matrix(g);
    let q = signless_laplacian_matrix(g);
    let n = g.order();
    let mult = |m: &IntMatrix, lambda: i64| eigen_multiplicity(m, lambda).expect("graph matrices are symmetric");

    let classes: Vec<TwinClassSpectrum> = (0..h.order())
        .map(|v| phi.fibre(v))
        .filter(|fibre| fibre.len() >= 2)
        .map(|fibre| {
            let k = fibre.len();
            let degree = g.degree(fibre[0]);
            let d = degree as i64;
            let mut x = vec![0i64; n];
            x[fibre[0]] = 1;
            x[fibre[1]] = -1;
            let eigenvector_verified =
                eigenvector_holds(&a, -1, &x) && eigenvector_holds(&l, d + 1, &x) && eigenvector_holds(&q, d - 1, &x);
            let adjacency_multiplicity = mult(&a, -1);
            let laplacian_multiplicity = mult(&l, d + 1);
            let signless_multiplicity = mult(&q, d - 1);
            let skeletal_degree = h.degree(phi.apply(fibre[0]));
            let s = skeletal_degree as i64;
            let laplacian_at_s = mult(&l, s + 1);
            let signless_at_s = mult(&q, s - 1);
            TwinClassSpectrum {
                vertices: fibre,
                k,
                degree,
                adjacency_multiplicity,
                laplacian_multiplicity,
                signless_multiplicity,
                eigenvector_verified,
                passes: eigenvector_verified
                    && adjacency_multiplicity + 1 >= k
                    && laplacian_multiplicity + 1 >= k
                    && signless_multiplicity + 1 >= k,
                skeletal_degree,
                laplacian_multiplicity_at_skeletal_degree: laplacian_at_s,
                signless_multiplicity_at_skeletal_degree: signless_at_s,
                skeletal_degree_form_holds: laplacian_at_s + 1 >= k && signless_at_s + 1 >= k,
            }
        })
        .collect();
    let all_pass = classes.iter().all(|c| c.passes);
    Ok(TwinSpectralReport { classes, all_pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn k2_matrices() {
        let g = Graph::complete(2);
        assert_eq!(adjacency_matrix(&g), small(&[&[0, 1], &[1, 0]]));
        assert_eq!(laplacian_matrix(&g), small(&[&[1, -1], &[-1, 1]]));
        assert_eq!(signless_laplacian_matrix(&g), small(&[&[1, 1], &[1, 1]]));
    }

    #[test]
    fn null_graph_matrices_vanish() {
        let g = Graph::empty(3);
        for m in [adjacency_matrix(&g), laplacian_matrix(&g), signless_laplacian_matrix(&g)] {
            assert_eq!(m, IntMatrix::zeros(3));
        }
    }

    #[test]
    fn k4_laplacian_entries() {
        let l = laplacian_matrix(&Graph::complete(4));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*l.get(i, j), BigInt::from(if i == j { 3 } else { -1 }));
            }
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(integer_rank(&IntMatrix::identity(3)), 3);
        assert_eq!(integer_rank(&small(&[&[1; 4], &[1; 4], &[1; 4], &[1; 4]])), 1);
        assert_eq!(integer_rank(&adjacency_matrix(&Graph::complete(4)).shifted(-1)), 1);
        assert_eq!(integer_rank(&IntMatrix::zeros(2)), 0);
        // pivot column skipped: second column is twice the first
        assert_eq!(integer_rank(&small(&[&[0, 0, 1], &[1, 2, 3], &[2, 4, 7]])), 2);
    }

    #[test]
    fn k4_multiplicities() {
        let g = Graph::complete(4);
        assert_eq!(eigen_multiplicity(&adjacency_matrix(&g), -1).unwrap(), 3);
        assert_eq!(eigen_multiplicity(&laplacian_matrix(&g), 4).unwrap(), 3);
        assert_eq!(eigen_multiplicity(&laplacian_matrix(&Graph::complete(2)), 5).unwrap(), 0);
    }

    #[test]
    fn multiplicity_needs_symmetry() {
        let m = small(&[&[0, 1], &[0, 0]]);
        assert_eq!(eigen_multiplicity(&m, 0), Err(Error::NotSymmetric));
    }

    #[test]
    fn k4_report() {
        let report = twin_spectral_report(&Graph::complete(4));
        assert!(report.all_pass);
        let c = &report.classes[0];
        assert_eq!((c.k, c.degree), (4, 3));
        assert_eq!(
            (c.adjacency_multiplicity, c.laplacian_multiplicity, c.signless_multiplicity),
            (3, 3, 3)
        );
    }

    #[test]
    fn two_k2_report() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let report = twin_spectral_report(&g);
        assert_eq!(report.classes.len(), 2);
        for c in &report.classes {
            assert_eq!((c.k, c.degree), (2, 1));
            assert_eq!(
                (c.adjacency_multiplicity, c.laplacian_multiplicity, c.signless_multiplicity),
                (2, 2, 2)
            );
            assert!(c.passes);
            // quotient is two isolated vertices: s + 1 = 1 is not in {0, 2}
            assert_eq!(c.laplacian_multiplicity_at_skeletal_degree, 0);
            assert!(!c.skeletal_degree_form_holds);
        }
    }

    #[test]
    fn k4_onto_k2_fibres() {
        let g = Graph::complete(4);
        let h = Graph::complete(2);
        let phi = VertexMap::new(vec![0, 0, 0, 1], 2).unwrap();
        let report = fibre_spectral_report(&g, &h, &phi).unwrap();
        assert_eq!(report.classes.len(), 1);
        let c = &report.classes[0];
        assert_eq!((c.k, c.degree, c.skeletal_degree), (3, 3, 1));
        assert!(c.passes);
        // 2 is not a Laplacian eigenvalue of K4
        assert_eq!(c.laplacian_multiplicity_at_skeletal_degree, 0);
        assert!(!c.skeletal_degree_form_holds);
    }

    #[test]
    fn twin_free_graph_gives_empty_report() {
        let report = twin_spectral_report(&Graph::cycle(5));
        assert!(report.classes.is_empty());
        assert!(report.all_pass);
    }
}
