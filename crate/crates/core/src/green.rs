//! Principal one-sided ideals and Green's L and R relations.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// `S^1 a = {s a : s in S} ∪ {a}` as a bit-set over element indices.
pub fn principal_left_ideal(s: &Semigroup, a: usize) -> FixedBitSet {
    principal_ideal(s, a, Side::Left)
}

/// `a S^1 = {a s : s in S} ∪ {a}`.
pub fn principal_right_ideal(s: &Semigroup, a: usize) -> FixedBitSet {
    principal_ideal(s, a, Side::Right)
}

pub fn principal_ideal(s: &Semigroup, a: usize, side: Side) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.order());
    set.insert(a);
    for x in s.elements() {
        let p = match side {
            Side::Left => s.mul(x, a),
            Side::Right => s.mul(a, x),
        };
        set.insert(p);
    }
    set
}

/// Principal ideals of every element, indexed by element.
pub fn principal_ideals(s: &Semigroup, side: Side) -> Vec<FixedBitSet> {
    s.elements().map(|a| principal_ideal(s, a, side)).collect()
}

pub fn l_classes(s: &Semigroup) -> Partition {
    green_classes(s, Side::Left)
}

pub fn r_classes(s: &Semigroup) -> Partition {
    green_classes(s, Side::Right)
}

/// Partition by equality of principal ideals on the given side.
pub fn green_classes(s: &Semigroup, side: Side) -> Partition {
    Partition::from_keys(&principal_ideals(s, side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{brandt, cyclic_group, left_zero, subset_meet_semilattice, symmetric_inverse};
    use crate::semigroup::Family;

    fn members(set: &FixedBitSet) -> Vec<usize> {
        set.ones().collect()
    }

    #[test]
    fn semilattice_ideals_are_downsets() {
        let s = subset_meet_semilattice(3).unwrap();
        for a in s.elements() {
            let down: Vec<usize> = s.elements().filter(|&b| b & a == b).collect();
            assert_eq!(members(&principal_left_ideal(&s, a)), down);
            assert_eq!(members(&principal_right_ideal(&s, a)), down);
        }
    }

    #[test]
    fn brandt_ideals() {
        let b = brandt(&cyclic_group(1).unwrap(), 2).unwrap();
        let a = (0..b.order()).find(|&x| b.label(x) == "(0,0,1)").unwrap();
        let names = |set: FixedBitSet| set.ones().map(|x| b.label(x)).collect::<Vec<_>>();
        assert_eq!(names(principal_left_ideal(&b, a)), vec!["(0,0,1)", "(1,0,1)", "0"]);
        assert_eq!(names(principal_right_ideal(&b, a)), vec!["(0,0,0)", "(0,0,1)", "0"]);
    }

    #[test]
    fn identity_generates_everything() {
        let s = symmetric_inverse(2).unwrap();
        let id = s.identity().unwrap();
        assert_eq!(principal_left_ideal(&s, id).count_ones(..), 7);
    }

    #[test]
    fn left_zero_right_ideal_is_singleton() {
        let s = left_zero(2).unwrap();
        assert_eq!(members(&principal_right_ideal(&s, 0)), vec![0]);
    }

    #[test]
    fn isn_l_classes_by_image_r_classes_by_domain() {
        for n in 1..=3 {
            let s = symmetric_inverse(n).unwrap();
            let Some(Family::SymmetricInverse { maps, .. }) = s.family() else { panic!() };
            let images: Vec<u32> = maps.iter().map(|m| m.image()).collect();
            let domains: Vec<u32> = maps.iter().map(|m| m.domain()).collect();
            assert_eq!(l_classes(&s), Partition::from_keys(&images));
            assert_eq!(r_classes(&s), Partition::from_keys(&domains));
        }
        let s = symmetric_inverse(2).unwrap();
        let sizes: Vec<usize> = l_classes(&s).classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2]);
    }

    #[test]
    fn brandt_classes_by_index() {
        let b = brandt(&cyclic_group(2).unwrap(), 2).unwrap();
        let Some(Family::Brandt { elements }) = b.family() else { panic!() };
        let right_index: Vec<Option<usize>> = elements
            .iter()
            .map(|e| match e {
                crate::constructors::BrandtLabel::Triple { j, .. } => Some(*j),
                _ => None,
            })
            .collect();
        let l = l_classes(&b);
        assert_eq!(l, Partition::from_keys(&right_index));
        let mut sizes: Vec<usize> = l.classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 4, 4]);
        let r_sizes: Vec<usize> = r_classes(&b).classes().iter().map(Vec::len).collect();
        assert_eq!(r_sizes, vec![4, 4, 1]);
    }

    #[test]
    fn groups_have_one_class() {
        let g = cyclic_group(4).unwrap();
        assert_eq!(l_classes(&g).len(), 1);
        assert_eq!(r_classes(&g).len(), 1);
    }

    #[test]
    fn each_l_class_of_an_inverse_semigroup_has_one_idempotent() {
        let families = [
            symmetric_inverse(3).unwrap(),
            brandt(&cyclic_group(2).unwrap(), 3).unwrap(),
            subset_meet_semilattice(3).unwrap(),
        ];
        for s in &families {
            let idem = s.idempotents();
            for side in [Side::Left, Side::Right] {
                for class in green_classes(s, side).classes() {
                    assert_eq!(class.iter().filter(|x| idem.contains(x)).count(), 1);
                }
            }
        }
    }

    #[test]
    fn ideal_intersection_of_idempotents() {
        let s = symmetric_inverse(3).unwrap();
        let idem = s.idempotents();
        for &e in &idem {
            for &f in &idem {
                let mut meet = principal_left_ideal(&s, e);
                meet.intersect_with(&principal_left_ideal(&s, f));
                assert_eq!(meet, principal_left_ideal(&s, s.mul(e, f)));
            }
        }
    }
}
