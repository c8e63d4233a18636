use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

/// A set partition of `0..len`. Classes are listed in order of their
/// smallest member, and members within a class ascend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups `0..keys.len()` by equal keys.
    pub fn from_keys<K: Hash + Eq>(keys: &[K]) -> Self {
        let mut ids: HashMap<&K, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(keys.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, key) in keys.iter().enumerate() {
            let id = *ids.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(x);
            class_of.push(id);
        }
        Partition { class_of, classes }
    }

    /// Canonicalizes an arbitrary block assignment.
    pub fn from_assignment(block: &[usize]) -> Self {
        Self::from_keys(block)
    }

    pub fn discrete(len: usize) -> Self {
        Partition {
            class_of: (0..len).collect(),
            classes: (0..len).map(|x| vec![x]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class(&self, id: usize) -> &[usize] {
        &self.classes[id]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// True when every class is a singleton.
    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }
}
