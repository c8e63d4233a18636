//! Example semigroup families: symmetric inverse semigroups, Brandt
//! semigroups, subset semilattices, cyclic groups and left-zero semigroups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::{Family, Semigroup};

/// Largest ground set accepted by [`symmetric_inverse`] (|IS_5| = 1546).
pub const MAX_ISN: usize = 5;
/// Largest ground set accepted by [`subset_meet_semilattice`].
pub const MAX_SEMILATTICE: usize = 5;

/// A partial injective map on `{0, .., n-1}`.
///
/// Ordered lexicographically by the map array, with "undefined" sorting
/// before every defined value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    map: Vec<Option<u8>>,
}

impl PartialBijection {
    pub fn new(map: Vec<Option<u8>>) -> Result<Self> {
        let n = map.len();
        let mut seen = 0u32;
        for &v in map.iter().flatten() {
            let v = v as usize;
            if v >= n || seen & (1 << v) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "{map:?} is not a partial injection on {n} points"
                )));
            }
            seen |= 1 << v;
        }
        Ok(PartialBijection { map })
    }

    pub fn empty(n: usize) -> Self {
        PartialBijection { map: vec![None; n] }
    }

    pub fn identity_on(n: usize, set: u32) -> Self {
        PartialBijection {
            map: (0..n)
                .map(|i| (set & (1 << i) != 0).then_some(i as u8))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.map[i].map(usize::from)
    }

    pub fn domain(&self) -> u32 {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_some())
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn image(&self) -> u32 {
        self.map.iter().flatten().fold(0, |acc, &v| acc | (1 << v))
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &PartialBijection) -> PartialBijection {
        PartialBijection {
            map: self
                .map
                .iter()
                .map(|v| v.and_then(|v| other.map[v as usize]))
                .collect(),
        }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut map = vec![None; self.n()];
        for (i, v) in self.map.iter().enumerate() {
            if let Some(v) = v {
                map[*v as usize] = Some(i as u8);
            }
        }
        PartialBijection { map }
    }

    /// Base-(n+1) code with "undefined" as digit 0.
    fn code(&self) -> usize {
        self.map
            .iter()
            .fold(0, |acc, v| acc * (self.n() + 1) + v.map_or(0, |v| v as usize + 1))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match v {
                Some(v) => write!(f, "{v}")?,
                None => f.write_str("-")?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for PartialBijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse partial bijection {s:?}"));
        let inner = s.strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
        let map = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| match t.trim() {
                    "-" => Ok(None),
                    t => t.parse::<u8>().map(Some).map_err(|_| bad()),
                })
                .collect::<Result<Vec<_>>>()?
        };
        PartialBijection::new(map)
    }
}

/// All partial bijections on `n` points in lexicographic order.
pub fn partial_bijections(n: usize) -> Vec<PartialBijection> {
    fn extend(n: usize, used: u32, prefix: &mut Vec<Option<u8>>, out: &mut Vec<PartialBijection>) {
        if prefix.len() == n {
            out.push(PartialBijection { map: prefix.clone() });
            return;
        }
        prefix.push(None);
        extend(n, used, prefix, out);
        prefix.pop();
        for v in 0..n {
            if used & (1 << v) == 0 {
                prefix.push(Some(v as u8));
                extend(n, used | (1 << v), prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

fn check_size(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{what} must be positive")));
    }
    if value > limit {
        return Err(Error::SizeLimitExceeded { what, value, limit });
    }
    Ok(())
}

/// The symmetric inverse semigroup `IS_n` under left-to-right composition:
/// `x*y` applies `x` first, then `y`. Element 0 is the empty map (the zero).
pub fn symmetric_inverse(n: usize) -> Result<Semigroup> {
    check_size("n", n, MAX_ISN)?;
    let maps = partial_bijections(n);
    let mut index_of = vec![usize::MAX; (n + 1).pow(n as u32)];
    for (i, m) in maps.iter().enumerate() {
        index_of[m.code()] = i;
    }
    let labels = maps.iter().map(ToString::to_string).collect();
    let product = |x: usize, y: usize| index_of[maps[x].then(&maps[y]).code()];
    let family = Family::SymmetricInverse { n, maps: maps.clone() };
    Ok(Semigroup::from_trusted_product(maps.len(), product, labels, family))
}

/// Element of a Brandt semigroup `B(G, I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BrandtLabel {
    Zero,
    Triple { i: usize, g: usize, j: usize },
}

impl fmt::Display for BrandtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrandtLabel::Zero => f.write_str("0"),
            BrandtLabel::Triple { i, g, j } => write!(f, "({i},{g},{j})"),
        }
    }
}

impl FromStr for BrandtLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(BrandtLabel::Zero);
        }
        let bad = || Error::InvalidParameter(format!("cannot parse Brandt element {s:?}"));
        let inner = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match parts[..] {
            [i, g, j] => Ok(BrandtLabel::Triple { i, g, j }),
            _ => Err(bad()),
        }
    }
}

/// Checks that `group` has an identity and every element has a two-sided
/// inverse, returning the inverse map.
pub fn group_inverses(group: &Semigroup) -> Result<Vec<usize>> {
    let e = group
        .identity()
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    group
        .elements()
        .map(|x| {
            group
                .elements()
                .find(|&y| group.mul(x, y) == e && group.mul(y, x) == e)
                .ok_or_else(|| Error::NotAGroup(format!("element {} has no inverse", group.label(x))))
        })
        .collect()
}

/// The Brandt semigroup over `group` with `indices` row/column indices.
///
/// Nonzero elements `(i, g, j)` are ordered lexicographically; the zero is the
/// last element.
pub fn brandt(group: &Semigroup, indices: usize) -> Result<Semigroup> {
    group_inverses(group)?;
    if indices == 0 {
        return Err(Error::InvalidParameter("index set must be non-empty".into()));
    }
    let r = indices;
    let m = group.order();
    let zero = r * r * m;
    let mut elements: Vec<BrandtLabel> = (0..zero)
        .map(|idx| BrandtLabel::Triple {
            i: idx / (m * r),
            g: (idx / r) % m,
            j: idx % r,
        })
        .collect();
    elements.push(BrandtLabel::Zero);
    let index = |i: usize, g: usize, j: usize| (i * m + g) * r + j;
    let product = |x: usize, y: usize| match (elements[x], elements[y]) {
        (BrandtLabel::Triple { i, g, j }, BrandtLabel::Triple { i: k, g: h, j: l }) if j == k => {
            index(i, group.mul(g, h), l)
        }
        _ => zero,
    };
    let labels = elements.iter().map(ToString::to_string).collect();
    let family = Family::Brandt { elements: elements.clone() };
    Ok(Semigroup::from_trusted_product(zero + 1, product, labels, family))
}

pub fn format_subset(mask: u32) -> String {
    let items: Vec<String> = (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

pub fn parse_subset(s: &str) -> Option<u32> {
    let inner = s.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(0);
    }
    inner.split(',').try_fold(0u32, |acc, t| {
        let i = t.trim().parse::<u32>().ok()?;
        (i < 32).then(|| acc | (1 << i))
    })
}

/// All subsets of `{0, .., n-1}` under intersection; element index = bitmask.
pub fn subset_meet_semilattice(n: usize) -> Result<Semigroup> {
    check_size("n", n, MAX_SEMILATTICE)?;
    let order = 1usize << n;
    let subsets: Vec<u32> = (0..order as u32).collect();
    let labels = subsets.iter().map(|&m| format_subset(m)).collect();
    let family = Family::Semilattice { n, subsets };
    Ok(Semigroup::from_trusted_product(order, |x, y| x & y, labels, family))
}

/// Integers modulo `m` under addition.
pub fn cyclic_group(m: usize) -> Result<Semigroup> {
    if m == 0 {
        return Err(Error::InvalidParameter("group order must be positive".into()));
    }
    let labels = (0..m).map(|g| g.to_string()).collect();
    Ok(Semigroup::from_trusted_product(m, |x, y| (x + y) % m, labels, Family::Cyclic))
}

/// `x*y = x` on `n` elements.
pub fn left_zero(n: usize) -> Result<Semigroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("left zero semigroup must be non-empty".into()));
    }
    let labels = (0..n).map(|x| format!("x{x}")).collect();
    Ok(Semigroup::from_trusted_product(n, |x, _| x, labels, Family::LeftZero))
}
