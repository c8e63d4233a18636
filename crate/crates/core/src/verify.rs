//! Named verification suites. Each check states a structural fact about
//! principal ideal graphs or skeletals and evaluates it on concrete
//! semigroups and graphs.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::constructors::{
    brandt, cyclic_group, left_zero, subset_meet_semilattice, symmetric_inverse, BrandtLabel,
};
use crate::error::{Error, Result};
use crate::graph::{
    all_components_complete, components, degree_of_subset_vertex, intersection_graph,
    intersection_graph_edge_count, Graph,
};
use crate::green::{green_classes, principal_left_ideal, Side};
use crate::iso::{are_isomorphic, verify_isomorphism};
use crate::partition::Partition;
use crate::pig::{
    involution_pig_isomorphism, isn_left_pig, left_pig, left_pig_inverse_fast, pig_inverse_fast,
    pig_vertices, principal_ideal_graph, right_pig, s_left_pig, s_right_pig,
};
use crate::random::{gnp, graph_with_twins, random_tree, seeded};
use crate::semigroup::{Family, Semigroup};
use crate::skeletal::{
    brute_force_has_proper_skeletal, brute_force_min_skeletal_order, compose_skeletal,
    embedded_copy, fibre_subgraph_is_complete, is_skeleton, max_skeletal, quotient,
    skeletal_partitions, twin_partition, verify_skeletal, VertexMap,
};
use crate::spectral::{
    adjacency_matrix, eigen_multiplicity, laplacian_matrix, twin_spectral_report,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Isn,
    Brandt,
    Semilattice,
    Skeletal,
    Spectral,
    Green,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["all", "isn", "brandt", "semilattice", "skeletal", "spectral", "green"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "isn" => Suite::Isn,
            "brandt" => Suite::Brandt,
            "semilattice" => Suite::Semilattice,
            "skeletal" => Suite::Skeletal,
            "spectral" => Suite::Spectral,
            "green" => Suite::Green,
            other => return Err(Error::InvalidParameter(format!("unknown suite {other:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::All,
            Suite::Isn,
            Suite::Brandt,
            Suite::Semilattice,
            Suite::Skeletal,
            Suite::Spectral,
            Suite::Green,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    /// Ground-set size for `IS_n` and subset semilattices.
    pub n: usize,
    pub group_order: usize,
    pub indices: usize,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n: 3,
            group_order: 2,
            indices: 2,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSuiteResult {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl fmt::Display for VerificationSuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "[{mark}] {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(
            f,
            "suite {}: {} checks, {} failed => {}",
            self.suite,
            self.checks.len(),
            failed,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Default)]
struct Checks(Vec<CheckResult>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn note(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.check(name, true, detail);
    }

    fn finish(self, suite: Suite) -> VerificationSuiteResult {
        let passed = self.0.iter().all(|c| c.passed);
        VerificationSuiteResult {
            suite: suite.to_string(),
            checks: self.0,
            passed,
        }
    }
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<VerificationSuiteResult> {
    let mut checks = Checks::default();
    match suite {
        Suite::All => {
            isn_checks(&mut checks, params.n)?;
            brandt_checks(&mut checks, params.group_order, params.indices)?;
            semilattice_checks(&mut checks, params.n)?;
            green_checks(&mut checks)?;
            skeletal_checks(&mut checks, params.seed)?;
            spectral_checks(&mut checks, params.seed)?;
        }
        Suite::Isn => isn_checks(&mut checks, params.n)?,
        Suite::Brandt => brandt_checks(&mut checks, params.group_order, params.indices)?,
        Suite::Semilattice => semilattice_checks(&mut checks, params.n)?,
        Suite::Green => green_checks(&mut checks)?,
        Suite::Skeletal => skeletal_checks(&mut checks, params.seed)?,
        Suite::Spectral => spectral_checks(&mut checks, params.seed)?,
    }
    Ok(checks.finish(suite))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Nonzero idempotent representing each vertex of the L-class quotient.
fn class_idempotents(s: &Semigroup, phi: &VertexMap) -> Vec<usize> {
    let vertices = pig_vertices(s);
    let idem = s.idempotents();
    (0..phi.codomain_order())
        .map(|c| {
            phi.fibre(c)
                .into_iter()
                .map(|v| vertices[v])
                .find(|x| idem.contains(x))
                .expect("every L-class of an inverse semigroup holds an idempotent")
        })
        .collect()
}

/// Shared checks for any inverse semigroup with a zero.
fn inverse_semigroup_checks(c: &mut Checks, name: &str, s: &Semigroup) -> Result<()> {
    let lam = left_pig(s)?;
    c.check(
        format!("{name}: adjacency x~y iff x y^-1 != 0 matches the ideal definition"),
        left_pig_inverse_fast(s)? == lam,
        format!("{} vertices, {} edges", lam.order(), lam.edge_count()),
    );
    c.check(
        format!("{name}: right graph matches x^-1 y != 0"),
        pig_inverse_fast(s, Side::Right)? == right_pig(s)?,
        "",
    );
    let iso = involution_pig_isomorphism(s);
    c.check(
        format!("{name}: x -> x^-1 is an isomorphism from the left to the right graph"),
        iso.is_ok(),
        iso.err().map(|e| e.to_string()).unwrap_or_default(),
    );

    let vertices = pig_vertices(s);
    let zero = s.zero();
    let idem: Vec<usize> = s.idempotents().into_iter().filter(|&e| Some(e) != zero).collect();
    let position = |x: usize| vertices.iter().position(|&v| v == x).unwrap();
    let lemma = idem.iter().all(|&e| {
        idem.iter()
            .filter(|&&f| f != e)
            .all(|&f| lam.has_edge(position(e), position(f)) == (Some(s.mul(e, f)) != zero))
    });
    c.check(
        format!("{name}: non-zero idempotents e, f adjacent iff ef != 0"),
        lemma,
        format!("{} non-zero idempotents", idem.len()),
    );

    let (sk, phi) = s_left_pig(s)?;
    let reps = class_idempotents(s, &phi);
    let complement = sk.complement();
    let zero_divisor = pairs(sk.order()).all(|(a, b)| {
        complement.has_edge(a, b) == (Some(s.mul(reps[a], reps[b])) == zero)
    });
    c.check(
        format!("{name}: complement of the L-class graph joins L_e, L_f exactly when ef = 0"),
        zero_divisor,
        format!("{} classes", sk.order()),
    );
    c.check(
        format!("{name}: L-class quotient is a skeletal of the full graph"),
        verify_skeletal(&lam, &sk, &phi)?.is_skeletal,
        "",
    );
    c.note(
        format!("{name}: L-class graph is itself a skeleton"),
        if is_skeleton(&sk) { "yes" } else { "no, it has closed twins" },
    );
    Ok(())
}

fn isn_checks(c: &mut Checks, n: usize) -> Result<()> {
    let s = symmetric_inverse(n)?;
    let Some(Family::SymmetricInverse { maps, .. }) = s.family() else {
        unreachable!("constructor attaches partial bijections")
    };
    let binomial = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    let expected: usize = (0..=n).map(|k| binomial(n, k).pow(2) * (1..=k).product::<usize>()).sum();
    c.check(
        format!("IS_{n}: order equals sum_k C(n,k)^2 k!"),
        s.order() == expected,
        format!("enumerated {}, formula {expected}", s.order()),
    );
    let power = (n + 1).pow(n as u32);
    c.check(
        format!("IS_{n}: (n+1)^n agrees with the enumerated order only for n = 1"),
        (power == s.order()) == (n == 1),
        format!("(n+1)^n = {power}, enumerated {}", s.order()),
    );
    c.check(
        format!("IS_{n}: 2^n idempotents"),
        s.idempotents().len() == 1 << n,
        format!("{}", s.idempotents().len()),
    );
    let images: Vec<u32> = maps.iter().map(|m| m.image()).collect();
    let domains: Vec<u32> = maps.iter().map(|m| m.domain()).collect();
    c.check(
        format!("IS_{n}: L-classes are the image classes, R-classes the domain classes"),
        green_classes(&s, Side::Left) == Partition::from_keys(&images)
            && green_classes(&s, Side::Right) == Partition::from_keys(&domains),
        "",
    );

    let lam = left_pig(&s)?;
    c.check(
        format!("IS_{n}: adjacency iff images intersect"),
        isn_left_pig(n)? == lam,
        format!("{} vertices, {} edges", lam.order(), lam.edge_count()),
    );
    inverse_semigroup_checks(c, &format!("IS_{n}"), &s)?;
    monoid_checks(c, &format!("IS_{n}"), &s, &lam)?;

    let (sk, phi) = s_left_pig(&s)?;
    let reps = class_idempotents(&s, &phi);
    let verts = 1usize << n;
    c.check(
        format!("IS_{n}: L-class graph has 2^n - 1 vertices"),
        sk.order() == verts - 1,
        format!("{}", sk.order()),
    );
    let degrees_ok = (0..sk.order()).all(|v| {
        let k = maps[reps[v]].rank() as u32;
        sk.degree(v) as u64 == degree_of_subset_vertex(n as u32, k)
    });
    c.check(
        format!("IS_{n}: rank-k class has degree 2^n - 2^(n-k) - 1"),
        degrees_ok,
        "",
    );
    let edges = intersection_graph_edge_count(n as u32);
    c.check(
        format!("IS_{n}: L-class graph has ((2^n-1)^2 - (3^n-2^n))/2 edges"),
        sk.edge_count() as u64 == edges,
        format!("counted {}, formula {edges}", sk.edge_count()),
    );
    let target = intersection_graph(n)?;
    let canonical: Vec<usize> = reps.iter().map(|&e| maps[e].image() as usize - 1).collect();
    c.check(
        format!("IS_{n}: L_e -> image(e) is an isomorphism onto the subset intersection graph"),
        verify_isomorphism(&sk, &target, &canonical)?,
        "",
    );
    c.check(
        format!("IS_{n}: generic search finds an isomorphism onto the subset intersection graph"),
        match are_isomorphic(&sk, &target)? {
            Some(map) => verify_isomorphism(&sk, &target, &map)?,
            None => false,
        },
        "",
    );
    Ok(())
}

fn monoid_checks(c: &mut Checks, name: &str, s: &Semigroup, lam: &Graph) -> Result<()> {
    if s.is_monoid() {
        c.check(
            format!("{name}: monoid, so the left graph is connected"),
            lam.stats().is_connected,
            "",
        );
    }
    let vertices = pig_vertices(s);
    for side in [Side::Left, Side::Right] {
        let classes = green_classes(s, side);
        let g = principal_ideal_graph(s, side)?;
        let ok = pairs(vertices.len())
            .filter(|&(u, v)| classes.same_class(vertices[u], vertices[v]))
            .all(|(u, v)| g.has_edge(u, v));
        let rel = if side == Side::Left { "L" } else { "R" };
        c.check(format!("{name}: {rel}-related pairs are adjacent"), ok, "");
    }
    Ok(())
}

fn brandt_checks(c: &mut Checks, group_order: usize, indices: usize) -> Result<()> {
    let g = cyclic_group(group_order)?;
    let s = brandt(&g, indices)?;
    let name = format!("B(C{group_order}, {indices})");
    let Some(Family::Brandt { elements }) = s.family() else {
        unreachable!("constructor attaches Brandt labels")
    };
    let vertices = pig_vertices(&s);
    let index = |v: usize, right: bool| match elements[vertices[v]] {
        BrandtLabel::Triple { i, j, .. } => {
            if right {
                j
            } else {
                i
            }
        }
        BrandtLabel::Zero => unreachable!("zero is not a vertex"),
    };

    let lam = left_pig(&s)?;
    let comps = components(&lam);
    c.check(
        format!("{name}: left graph splits into |I| cliques of size |I||G|"),
        comps.len() == indices
            && all_components_complete(&lam)
            && comps.classes().iter().all(|k| k.len() == indices * group_order),
        format!("{} components", comps.len()),
    );
    c.check(
        format!("{name}: (i,g,j) ~ (k,h,l) iff j = l"),
        pairs(lam.order()).all(|(u, v)| lam.has_edge(u, v) == (index(u, true) == index(v, true))),
        "",
    );
    let rho = right_pig(&s)?;
    c.check(
        format!("{name}: right graph joins elements with equal left index"),
        pairs(rho.order()).all(|(u, v)| rho.has_edge(u, v) == (index(u, false) == index(v, false))),
        "",
    );
    let (sl, _) = s_left_pig(&s)?;
    let (sr, _) = s_right_pig(&s)?;
    c.check(
        format!("{name}: L-class and R-class graphs are null on |I| vertices"),
        sl.order() == indices && sl.stats().is_null && sr.order() == indices && sr.stats().is_null,
        "",
    );
    let zero = s.zero();
    let idem: Vec<usize> = s.idempotents().into_iter().filter(|&e| Some(e) != zero).collect();
    c.check(
        format!("{name}: product of distinct idempotents is zero"),
        idem.iter()
            .all(|&e| idem.iter().filter(|&&f| f != e).all(|&f| Some(s.mul(e, f)) == zero)),
        "",
    );
    inverse_semigroup_checks(c, &name, &s)?;
    monoid_checks(c, &name, &s, &lam)?;
    Ok(())
}

fn semilattice_checks(c: &mut Checks, n: usize) -> Result<()> {
    let s = subset_meet_semilattice(n)?;
    let name = format!("2^[{n}]");
    let lam = left_pig(&s)?;
    c.check(
        format!("{name}: left and right graphs coincide"),
        lam == right_pig(&s)?,
        "",
    );
    let (sk, phi) = s_left_pig(&s)?;
    c.check(
        format!("{name}: left graph and its L-class graph are isomorphic"),
        phi == VertexMap::identity(lam.order()) && sk == lam,
        "",
    );
    inverse_semigroup_checks(c, &name, &s)?;
    monoid_checks(c, &name, &s, &lam)?;
    Ok(())
}

fn green_checks(c: &mut Checks) -> Result<()> {
    let family: Vec<(String, Semigroup)> = vec![
        ("IS_2".into(), symmetric_inverse(2)?),
        ("IS_3".into(), symmetric_inverse(3)?),
        ("B(C2, 2)".into(), brandt(&cyclic_group(2)?, 2)?),
        ("B(C3, 2)".into(), brandt(&cyclic_group(3)?, 2)?),
        ("2^[3]".into(), subset_meet_semilattice(3)?),
        ("C3".into(), cyclic_group(3)?),
        ("C4 with zero".into(), cyclic_group(4)?.adjoin_zero()),
        ("LZ_3 with zero".into(), left_zero(3)?.adjoin_zero()),
        ("LZ_3".into(), left_zero(3)?),
    ];
    for (name, s) in &family {
        let lam = left_pig(s)?;
        monoid_checks(c, name, s, &lam)?;
        let Some(inv) = s.inverses() else {
            c.note(format!("{name}: not an inverse semigroup"), "");
            continue;
        };
        let idem = s.idempotents();
        c.check(
            format!("{name}: idempotents commute"),
            idem.iter().all(|&e| idem.iter().all(|&f| s.mul(e, f) == s.mul(f, e))),
            "",
        );
        c.check(
            format!("{name}: x x^-1 x = x and (x^-1)^-1 = x"),
            s.elements().all(|x| s.mul(s.mul(x, inv[x]), x) == x && inv[inv[x]] == x),
            "",
        );
        c.check(format!("{name}: x -> x^-1 is an involution"), s.check_involution(&inv)?, "");
        let one_idempotent = [Side::Left, Side::Right].iter().all(|&side| {
            green_classes(s, side)
                .classes()
                .iter()
                .all(|cl| cl.iter().filter(|x| idem.contains(x)).count() == 1)
        });
        c.check(format!("{name}: each L- and R-class has one idempotent"), one_idempotent, "");
        let meets = idem.iter().all(|&e| {
            idem.iter().all(|&f| {
                let mut m = principal_left_ideal(s, e);
                m.intersect_with(&principal_left_ideal(s, f));
                m == principal_left_ideal(s, s.mul(e, f))
            })
        });
        c.check(format!("{name}: Se ∩ Sf = Sef for idempotents"), meets, "");
        if s.zero().is_none() {
            c.check(
                format!("{name}: inverse without zero, so both graphs and quotients are complete"),
                lam.stats().is_complete
                    && right_pig(s)?.stats().is_complete
                    && s_left_pig(s)?.0.stats().is_complete
                    && s_right_pig(s)?.0.stats().is_complete,
                "",
            );
        }
    }
    let k3 = left_pig(&left_zero(3)?.adjoin_zero())?;
    c.check(
        "left-zero semigroup of order 3 with zero adjoined gives K3",
        k3.order() == 3 && k3.stats().is_complete,
        "",
    );
    Ok(())
}

/// Triangle {a, b, c} joined to d, collapsed onto an edge.
pub fn k4_onto_k2() -> (Graph, Graph, VertexMap) {
    let g = Graph::complete(4).with_labels(["a", "b", "c", "d"].map(String::from).to_vec());
    let h = Graph::complete(2).with_labels(vec!["u".into(), "v".into()]);
    let phi = VertexMap::new(vec![0, 0, 0, 1], 2).expect("surjective");
    (g, h, phi)
}

/// Whether `K2` is a skeletal of `g`, by exhaustive partition search.
pub fn brute_force_has_k2_skeletal(g: &Graph) -> Result<bool> {
    Ok(skeletal_partitions(g)?.iter().any(|rgs| {
        rgs.iter().max() == Some(&1) && {
            let a = rgs.iter().position(|&b| b == 0).unwrap();
            let b = rgs.iter().position(|&b| b == 1).unwrap();
            g.has_edge(a, b)
        }
    }))
}

/// All labelled graphs on `order` vertices (order <= 6).
pub fn all_graphs(order: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = pairs(order).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(order, &edges).expect("valid edges")
    })
}

/// A random refinement of the twin partition: each twin class is split into
/// up to two blocks.
fn random_twin_refinement<R: Rng>(rng: &mut R, g: &Graph) -> Partition {
    let twins = twin_partition(g);
    let mut block = vec![0usize; g.order()];
    for (id, class) in twins.classes().iter().enumerate() {
        for &v in class {
            block[v] = 2 * id + usize::from(rng.gen_bool(0.5));
        }
    }
    Partition::from_assignment(&block)
}

/// Runs the skeletal-theorem parts on one graph: the twin quotient is
/// skeletal and minimal-size, fibres are cliques, representatives embed a
/// copy, and two stacked skeletals compose.
pub fn skeletal_theorem_parts<R: Rng>(rng: &mut R, g: &Graph) -> std::result::Result<(), String> {
    let (h, phi) = max_skeletal(g);
    let report = verify_skeletal(g, &h, &phi).map_err(|e| e.to_string())?;
    if !report.is_skeletal {
        return Err(format!("twin quotient not skeletal, witness {:?}", report.witness));
    }
    for v in 0..h.order() {
        if !fibre_subgraph_is_complete(g, &h, &phi, v).map_err(|e| e.to_string())? {
            return Err(format!("fibre over {v} is not a clique"));
        }
    }
    let copy = embedded_copy(g, &h, &phi).map_err(|e| e.to_string())?;
    let identity: Vec<usize> = (0..h.order()).collect();
    if !verify_isomorphism(&copy.subgraph, &h, &identity).map_err(|e| e.to_string())? {
        return Err("embedded copy is not isomorphic".into());
    }
    let finer = random_twin_refinement(rng, g);
    let (mid, first) = quotient(g, &finer).map_err(|e| e.to_string())?;
    let (top, second) = max_skeletal(&mid);
    let composite = compose_skeletal(g, &mid, &top, &first, &second).map_err(|e| e.to_string())?;
    if !verify_skeletal(g, &top, &composite).map_err(|e| e.to_string())?.is_skeletal {
        return Err("composite is not skeletal".into());
    }
    if top.order() != h.order() {
        return Err("stacked quotient differs in size from the twin quotient".into());
    }
    Ok(())
}

fn skeletal_checks(c: &mut Checks, seed: u64) -> Result<()> {
    let mut rng = seeded(seed);
    let (g, h, phi) = k4_onto_k2();
    let copy = embedded_copy(&g, &h, &phi)?;
    c.check(
        "triangle joined to a vertex collapses onto K2",
        verify_skeletal(&g, &h, &phi)?.is_skeletal
            && fibre_subgraph_is_complete(&g, &h, &phi, 0)?
            && copy.vertices == vec![0, 3],
        "fibres {a,b,c} and {d}; copy on {a, d}",
    );

    let mut trees_ok = true;
    for order in 3..=8 {
        for _ in 0..10 {
            let t = random_tree(&mut rng, order);
            trees_ok &= is_skeleton(&t) && !brute_force_has_proper_skeletal(&t)?;
        }
    }
    c.check("trees on 3..8 vertices are skeletons", trees_ok, "10 random trees per order");
    let cycles_ok = (4..=8).all(|n| is_skeleton(&Graph::cycle(n)))
        && (4..=8).all(|n| !brute_force_has_proper_skeletal(&Graph::cycle(n)).unwrap_or(true));
    c.check("cycles C4..C8 are skeletons", cycles_ok, "");
    c.check(
        "K2 and K3 are not skeletons",
        !is_skeleton(&Graph::complete(2)) && !is_skeleton(&Graph::complete(3)),
        "",
    );

    let mut k2_ok = true;
    let mut tested = 0;
    for order in 3..=5 {
        for g in all_graphs(order) {
            k2_ok &= g.stats().is_complete == brute_force_has_k2_skeletal(&g)?;
            tested += 1;
        }
    }
    c.check(
        "order >= 3: complete iff K2 is a skeletal",
        k2_ok,
        format!("all {tested} labelled graphs of order 3..5"),
    );

    let mut agree = true;
    let mut minimal = true;
    let mut count = 0;
    for order in 1..=5 {
        for g in all_graphs(order) {
            agree &= is_skeleton(&g) != brute_force_has_proper_skeletal(&g)?;
            count += 1;
        }
    }
    for _ in 0..100 {
        let order = rng.gen_range(6..=7);
        let g = gnp(&mut rng, order, 0.5);
        agree &= is_skeleton(&g) != brute_force_has_proper_skeletal(&g)?;
        minimal &= max_skeletal(&g).0.order() == brute_force_min_skeletal_order(&g)?;
        count += 1;
    }
    c.check(
        "no closed twins iff no proper skeletal",
        agree,
        format!("{count} graphs checked against partition search"),
    );
    c.check("twin quotient has the fewest vertices of any skeletal", minimal, "");

    let mut failure = None;
    for _ in 0..100 {
        let g = graph_with_twins(&mut rng, 6, 0.5, 3);
        if let Err(e) = skeletal_theorem_parts(&mut rng, &g) {
            failure = Some(e);
            break;
        }
    }
    c.check(
        "fibres are cliques, representatives embed H, skeletals compose",
        failure.is_none(),
        failure.unwrap_or_else(|| "100 random graphs with planted twins".into()),
    );

    let is2 = symmetric_inverse(2)?;
    let lam = left_pig(&is2)?;
    let (sk, phi) = s_left_pig(&is2)?;
    let (top, psi) = max_skeletal(&sk);
    let composite = compose_skeletal(&lam, &sk, &top, &phi, &psi)?;
    let copy = embedded_copy(&lam, &sk, &phi)?;
    c.check(
        "IS_2 graph -> L-class graph -> twin quotient composes",
        verify_skeletal(&lam, &top, &composite)?.is_skeletal && copy.subgraph.edge_count() == 2,
        format!("{} -> {} -> {} vertices", lam.order(), sk.order(), top.order()),
    );
    Ok(())
}

fn spectral_checks(c: &mut Checks, seed: u64) -> Result<()> {
    let mut rng = seeded(seed);
    let mut graphs: Vec<(String, Graph)> = vec![
        ("K4".into(), Graph::complete(4)),
        ("2K2".into(), Graph::from_edges(4, &[(0, 1), (2, 3)])?),
        ("Lambda(IS_2)".into(), left_pig(&symmetric_inverse(2)?)?),
        ("Lambda(B(C2, 2))".into(), left_pig(&brandt(&cyclic_group(2)?, 2)?)?),
    ];
    for i in 0..50 {
        graphs.push((format!("random #{i}"), graph_with_twins(&mut rng, 5, 0.5, 3)));
    }
    let mut classes = 0;
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let report = twin_spectral_report(g);
        classes += report.classes.len();
        if !report.all_pass {
            failures.push(name.clone());
        }
    }
    c.check(
        "twin class of size k and degree d: mult(A,-1), mult(L,d+1), mult(Q,d-1) >= k-1",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} graphs, {classes} twin classes", graphs.len())
        } else {
            format!("failed on {}", failures.join(", "))
        },
    );

    let mut components_ok = true;
    for (_, g) in &graphs {
        components_ok &= eigen_multiplicity(&laplacian_matrix(g), 0)? >= components(g).len();
    }
    c.check("mult(L, 0) >= number of components", components_ok, "");

    let (g, h, phi) = k4_onto_k2();
    let s = h.degree(phi.apply(0)) as i64;
    let at_s = eigen_multiplicity(&laplacian_matrix(&g), s + 1)?;
    let at_d = eigen_multiplicity(&laplacian_matrix(&g), 4)?;
    c.check(
        "K4 onto K2: skeletal degree + 1 = 2 is not a Laplacian eigenvalue, graph degree + 1 = 4 is",
        at_s == 0 && at_d == 3,
        format!("mult(L, 2) = {at_s}, mult(L, 4) = {at_d}"),
    );
    let a = adjacency_matrix(&g);
    c.check("K4: mult(A, -1) = 3", eigen_multiplicity(&a, -1)? == 3, "");
    Ok(())
}
