//! Finite semigroups stored as validated Cayley tables.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructors::{self, BrandtLabel, PartialBijection};
use crate::error::{Error, Result};

/// Structured labels attached by the family constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    SymmetricInverse { n: usize, maps: Vec<PartialBijection> },
    Brandt { elements: Vec<BrandtLabel> },
    Semilattice { n: usize, subsets: Vec<u32> },
    Cyclic,
    LeftZero,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::SymmetricInverse { .. } => "isn",
            Family::Brandt { .. } => "brandt",
            Family::Semilattice { .. } => "semilattice",
            Family::Cyclic => "cyclic",
            Family::LeftZero => "leftzero",
        }
    }
}

/// How associativity of the table was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Every triple was checked.
    Exhaustive,
    /// The table came from a constructor whose product is associative by construction.
    ByConstruction,
}

/// A finite semigroup. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    order: usize,
    table: Vec<u32>,
    labels: Option<Vec<String>>,
    zero: Option<usize>,
    identity: Option<usize>,
    family: Option<Family>,
    validation: Validation,
}

impl Semigroup {
    /// Builds a semigroup from a square Cayley table (row `x`, column `y` holds `x*y`),
    /// checking every associativity triple.
    pub fn from_cayley_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        let flat = flatten_table(&table)?;
        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(Error::LabelCount {
                    got: labels.len(),
                    order,
                });
            }
        }
        if let Some((x, y, z)) = associativity_witness(order, &flat) {
            return Err(Error::AssociativityViolation(x, y, z));
        }
        Ok(Self::assemble(order, flat, labels, None, Validation::Exhaustive))
    }

    /// Builds a semigroup from a product that is associative by construction.
    pub(crate) fn from_trusted_product(
        order: usize,
        product: impl Fn(usize, usize) -> usize + Sync,
        labels: Vec<String>,
        family: Family,
    ) -> Self {
        let table: Vec<u32> = (0..order * order)
            .into_par_iter()
            .map(|i| product(i / order, i % order) as u32)
            .collect();
        Self::assemble(order, table, Some(labels), Some(family), Validation::ByConstruction)
    }

    fn assemble(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        family: Option<Family>,
        validation: Validation,
    ) -> Self {
        let mut s = Semigroup {
            order,
            table,
            labels,
            zero: None,
            identity: None,
            family,
            validation,
        };
        s.zero = s.detect_zero();
        s.identity = s.detect_identity();
        s
    }

    pub(crate) fn with_family(mut self, family: Family) -> Self {
        self.family = Some(family);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The two-sided zero, if the semigroup has one.
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn family(&self) -> Option<&Family> {
        self.family.as_ref()
    }

    pub fn validation(&self) -> Validation {
        self.validation
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Printable name of `x`; falls back to the index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    fn detect_zero(&self) -> Option<usize> {
        (0..self.order).find(|&z| (0..self.order).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    fn detect_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Elements `e` with `e*e = e`, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// The map `x -> x^-1` if every element has exactly one inverse
    /// (`x y x = x` and `y x y = y`), otherwise `None`.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        let mut inv = Vec::with_capacity(self.order);
        for x in 0..self.order {
            let mut found = None;
            for y in 0..self.order {
                let xy = self.mul(x, y);
                if self.mul(xy, x) == x && self.mul(self.mul(y, x), y) == y {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(y);
                }
            }
            inv.push(found?);
        }
        Some(inv)
    }

    pub fn is_inverse_semigroup(&self) -> bool {
        self.inverses().is_some()
    }

    /// Whether `sigma` is an anti-automorphism of order at most two:
    /// `sigma(ab) = sigma(b) sigma(a)` and `sigma(sigma(a)) = a`.
    pub fn check_involution(&self, sigma: &[usize]) -> Result<bool> {
        if !is_permutation(sigma, self.order) {
            return Err(Error::NotAPermutation);
        }
        let n = self.order;
        let involutive = (0..n).all(|a| sigma[sigma[a]] == a);
        Ok(involutive
            && (0..n).all(|a| (0..n).all(|b| sigma[self.mul(a, b)] == self.mul(sigma[b], sigma[a]))))
    }

    /// `S^0`: a new absorbing element appended as the last index.
    pub fn adjoin_zero(&self) -> Semigroup {
        let n = self.order;
        let z = n;
        let mut table = Vec::with_capacity((n + 1) * (n + 1));
        for x in 0..=n {
            for y in 0..=n {
                let v = if x == z || y == z { z } else { self.mul(x, y) };
                table.push(v as u32);
            }
        }
        let labels = self.labels.as_ref().map(|labels| {
            let mut labels = labels.clone();
            let name = if labels.iter().any(|l| l == "0") { "zero" } else { "0" };
            labels.push(name.to_string());
            labels
        });
        Self::assemble(n + 1, table, labels, None, self.validation)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = SemigroupDoc {
            order: self.order,
            table: self.table_rows(),
            labels: self.labels.clone(),
            zero: Some(self.zero),
            identity: Some(self.identity),
            family: self.family.as_ref().map(|f| f.tag().to_string()),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    /// Parses and validates a semigroup document. Tables tagged `isn` are
    /// checked by rebuilding the family from its labels; all others get the
    /// exhaustive associativity check.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SemigroupDoc = serde_json::from_str(text)?;
        if doc.table.len() != doc.order {
            return Err(Error::SizeMismatch(format!(
                "order {} but table has {} rows",
                doc.order,
                doc.table.len()
            )));
        }
        let s = match doc.family.as_deref() {
            Some("isn") => rebuild_symmetric_inverse(&doc)?,
            _ => {
                let s = Semigroup::from_cayley_table(doc.table, doc.labels)?;
                match doc.family.as_deref() {
                    None => s,
                    Some(tag) => {
                        let family = parse_family(tag, &s)?;
                        s.with_family(family)
                    }
                }
            }
        };
        if let Some(zero) = doc.zero {
            check_declared("zero", zero, s.zero)?;
        }
        if let Some(identity) = doc.identity {
            check_declared("identity", identity, s.identity)?;
        }
        Ok(s)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct SemigroupDoc {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    // absent: not checked; null: checked to be missing
    #[serde(default, deserialize_with = "present")]
    zero: Option<Option<usize>>,
    #[serde(default, deserialize_with = "present")]
    identity: Option<Option<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
}

fn present<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Option<Option<usize>>, D::Error> {
    Option::<usize>::deserialize(d).map(Some)
}

fn check_declared(field: &'static str, declared: Option<usize>, detected: Option<usize>) -> Result<()> {
    if declared == detected {
        Ok(())
    } else {
        Err(Error::DeclaredElementMismatch {
            field,
            declared,
            detected,
        })
    }
}

fn bad_label(family: &str, label: &str) -> Error {
    Error::BadLabel {
        family: family.to_string(),
        label: label.to_string(),
    }
}

fn rebuild_symmetric_inverse(doc: &SemigroupDoc) -> Result<Semigroup> {
    let labels = doc.labels.as_ref().ok_or_else(|| bad_label("isn", "<missing labels>"))?;
    let first = labels.first().ok_or(Error::EmptySemigroup)?;
    let n = first
        .parse::<PartialBijection>()
        .map_err(|_| bad_label("isn", first))?
        .n();
    let rebuilt = constructors::symmetric_inverse(n)?;
    if rebuilt.order != doc.order
        || rebuilt.labels.as_deref() != Some(labels.as_slice())
        || rebuilt.table_rows() != doc.table
    {
        return Err(Error::InvalidParameter(
            "table tagged isn does not match the symmetric inverse semigroup on its labels".into(),
        ));
    }
    Ok(rebuilt)
}

fn parse_family(tag: &str, s: &Semigroup) -> Result<Family> {
    let labels = || s.labels.as_deref().ok_or_else(|| bad_label(tag, "<missing labels>"));
    match tag {
        "brandt" => {
            let elements = labels()?
                .iter()
                .map(|l| l.parse::<BrandtLabel>().map_err(|_| bad_label(tag, l)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Family::Brandt { elements })
        }
        "semilattice" => {
            let subsets = labels()?
                .iter()
                .map(|l| constructors::parse_subset(l).ok_or_else(|| bad_label(tag, l)))
                .collect::<Result<Vec<_>>>()?;
            let n = s.order.trailing_zeros() as usize;
            Ok(Family::Semilattice { n, subsets })
        }
        "cyclic" => Ok(Family::Cyclic),
        "leftzero" => Ok(Family::LeftZero),
        other => Err(Error::InvalidParameter(format!("unknown family tag {other:?}"))),
    }
}

fn flatten_table(table: &[Vec<usize>]) -> Result<Vec<u32>> {
    let order = table.len();
    if order == 0 {
        return Err(Error::EmptySemigroup);
    }
    let mut flat = Vec::with_capacity(order * order);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(Error::NotSquare {
                row,
                len: entries.len(),
                order,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(Error::IndexOutOfRange {
                    row,
                    col,
                    value,
                    order,
                });
            }
            flat.push(value as u32);
        }
    }
    Ok(flat)
}

/// Lexicographically first triple violating associativity.
fn associativity_witness(order: usize, table: &[u32]) -> Option<(usize, usize, usize)> {
    let mul = |x: usize, y: usize| table[x * order + y] as usize;
    (0..order).into_par_iter().find_map_first(|x| {
        for y in 0..order {
            let xy = mul(x, y);
            for z in 0..order {
                if mul(xy, z) != mul(x, mul(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
        None
    })
}

pub(crate) fn is_permutation(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}
