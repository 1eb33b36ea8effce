//! Standard parabolic subgroups as subsets of the simple roots, tagged
//! with the ambient Levi they live in. The tag makes the silent moves
//! between G-level and M_1-level parabolics explicit.

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// A standard parabolic `P = Delta_P`, as a bitset over simple-root
/// indices, living inside an ambient Levi (itself a subset of Delta).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSet {
    members: u64,
    ambient: u64,
}

impl ParabolicSet {
    pub fn new(members: u64, ambient: u64) -> Result<ParabolicSet> {
        if members & !ambient != 0 {
            return Err(Error::InvalidNesting(
                "parabolic set not contained in its ambient Levi".into(),
            ));
        }
        Ok(ParabolicSet { members, ambient })
    }

    /// A parabolic at the level of the full group G.
    pub fn in_group(rs: &RootSystem, members: u64) -> Result<ParabolicSet> {
        ParabolicSet::new(members, rs.full_mask())
    }

    pub fn members(&self) -> u64 {
        self.members
    }

    pub fn ambient(&self) -> u64 {
        self.ambient
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    /// P equals its ambient group (a "full" parabolic, P = G or P = M_1).
    pub fn is_full(&self) -> bool {
        self.members == self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn contains(&self, other: &ParabolicSet) -> bool {
        other.members & !self.members == 0
    }

    fn check_ambient(&self, other: &ParabolicSet) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::MixedAmbient);
        }
        Ok(())
    }

    /// `Delta_{P n P_1} = Delta_P n Delta_{P_1}`.
    pub fn meet(&self, other: &ParabolicSet) -> Result<ParabolicSet> {
        self.check_ambient(other)?;
        Ok(ParabolicSet {
            members: self.members & other.members,
            ambient: self.ambient,
        })
    }

    /// `Delta_P u Delta_{P_1}`, the group `<P, P_1>`.
    pub fn join(&self, other: &ParabolicSet) -> Result<ParabolicSet> {
        self.check_ambient(other)?;
        Ok(ParabolicSet {
            members: self.members | other.members,
            ambient: self.ambient,
        })
    }

    /// The standard parabolic of the Levi M_1 given by
    /// `Delta_P n Delta_{M_1}`, re-tagged with ambient M_1.
    pub fn levi_intersection(&self, m1: &ParabolicSet) -> Result<ParabolicSet> {
        self.check_ambient(m1)?;
        Ok(ParabolicSet {
            members: self.members & m1.members,
            ambient: m1.members,
        })
    }

    /// The same subset viewed inside a larger ambient Levi.
    pub fn widen_ambient(&self, ambient: u64) -> Result<ParabolicSet> {
        ParabolicSet::new(self.members, ambient)
    }

    /// Sorted label list, e.g. ["a1", "a3"].
    pub fn to_labels(&self, rs: &RootSystem) -> Vec<String> {
        rs.mask_labels(self.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, CartanDatum, CartanType};

    fn a2() -> RootSystem {
        build_root_system(CartanDatum::of_type(&CartanType::A(2))).unwrap()
    }

    #[test]
    fn meet_join_examples() {
        let rs = a2();
        let p1 = ParabolicSet::in_group(&rs, 0b01).unwrap();
        let p2 = ParabolicSet::in_group(&rs, 0b10).unwrap();
        let full = ParabolicSet::in_group(&rs, 0b11).unwrap();
        let empty = ParabolicSet::in_group(&rs, 0).unwrap();
        assert_eq!(p1.meet(&p2).unwrap(), empty);
        assert_eq!(p1.meet(&full).unwrap(), p1);
        assert_eq!(p1.join(&p2).unwrap(), full);
        assert_eq!(p1.join(&empty).unwrap(), p1);
        assert_eq!(p1.join(&p1).unwrap(), p1);
    }

    #[test]
    fn mixed_ambient_rejected() {
        let rs = a2();
        let p = ParabolicSet::in_group(&rs, 0b01).unwrap();
        let q = ParabolicSet::new(0b01, 0b01).unwrap();
        assert_eq!(p.meet(&q), Err(Error::MixedAmbient));
    }

    #[test]
    fn levi_intersection_retags() {
        let rs = a2();
        let empty = ParabolicSet::in_group(&rs, 0).unwrap();
        let m1 = ParabolicSet::in_group(&rs, 0b01).unwrap();
        let inner = empty.levi_intersection(&m1).unwrap();
        assert_eq!(inner.members(), 0);
        assert_eq!(inner.ambient(), 0b01);

        let full = ParabolicSet::in_group(&rs, 0b11).unwrap();
        let all_of_m1 = full.levi_intersection(&m1).unwrap();
        assert!(all_of_m1.is_full());
    }

    #[test]
    fn distributive_lattice_laws() {
        let rs = a2();
        let sets: Vec<ParabolicSet> = (0..=3)
            .map(|m| ParabolicSet::in_group(&rs, m).unwrap())
            .collect();
        for a in &sets {
            for b in &sets {
                for c in &sets {
                    let lhs = a.meet(&b.join(c).unwrap()).unwrap();
                    let rhs = a.meet(b).unwrap().join(&a.meet(c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
                // containment matches subset order
                assert_eq!(a.contains(b), b.members() & !a.members() == 0);
            }
        }
    }

    #[test]
    fn labels_sorted() {
        let rs = build_root_system(CartanDatum::of_type(&CartanType::A(3))).unwrap();
        let p = ParabolicSet::in_group(&rs, 0b101).unwrap();
        assert_eq!(p.to_labels(&rs), vec!["a1", "a3"]);
    }
}
