//! Subsets of a group: arbitrary element sets and subgroups.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// An arbitrary set of element indices. Product sets such as `HK` or `HKHK`
/// live here since they are generally not subgroups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: BitSet,
}

impl ElementSet {
    pub fn new(members: BitSet) -> Self {
        ElementSet { members }
    }

    pub fn empty(g: &GroupTable) -> Self {
        ElementSet::new(BitSet::new(g.order()))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(g: &GroupTable, indices: I) -> Self {
        ElementSet::new(BitSet::from_indices(g.order(), indices))
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn into_members(self) -> BitSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn universe(&self) -> usize {
        self.members.universe()
    }

    /// True when the set is a subgroup of `g`.
    pub fn is_subgroup(&self, g: &GroupTable) -> bool {
        is_closed(g, &self.members)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}

impl From<SubgroupSet> for ElementSet {
    fn from(h: SubgroupSet) -> Self {
        ElementSet::new(h.members)
    }
}

/// A subgroup, stored as the bitset of its element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: BitSet,
    size: usize,
}

impl SubgroupSet {
    /// Wraps a bitset already known to be a subgroup.
    pub(crate) fn from_closed(members: BitSet) -> Self {
        debug_assert!(members.contains(0));
        let size = members.len();
        SubgroupSet { members, size }
    }

    /// Checks that `members` is a subgroup of `g`.
    pub fn try_new(g: &GroupTable, members: BitSet) -> Result<Self> {
        if members.universe() != g.order() {
            return Err(Error::ParentMismatch {
                left: members.universe(),
                right: g.order(),
            });
        }
        if !is_closed(g, &members) {
            return Err(Error::NotSubgroup);
        }
        Ok(SubgroupSet::from_closed(members))
    }

    pub fn trivial(g: &GroupTable) -> Self {
        SubgroupSet::from_closed(g.identity_set())
    }

    pub fn whole(g: &GroupTable) -> Self {
        SubgroupSet::from_closed(g.full_set())
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn as_elements(&self) -> ElementSet {
        ElementSet::new(self.members.clone())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.size
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.size <= other.size && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn meet(&self, other: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(self.members.intersection(&other.members))
    }

    /// 1-based element indices, the form used in exported reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.members.iter().map(|i| i + 1).collect()
    }

    /// Canonical order: by size, then lexicographically by member list.
    pub fn canonical_cmp(&self, other: &SubgroupSet) -> std::cmp::Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members.cmp_members(&other.members))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.size, self.members)
    }
}

/// Nonempty and closed under multiplication, which for a finite group makes
/// the set a subgroup.
fn is_closed(g: &GroupTable, set: &BitSet) -> bool {
    if set.universe() != g.order() || !set.contains(0) {
        return false;
    }
    let members: Vec<usize> = set.iter().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(g.mul(a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn s3() -> GroupTable {
        GroupTable::closure(
            &[
                Permutation::parse_cycles("(1 2)", 3).unwrap(),
                Permutation::parse_cycles("(1 2 3)", 3).unwrap(),
            ],
            100,
        )
        .unwrap()
    }

    #[test]
    fn subgroup_validation() {
        let g = s3();
        assert!(SubgroupSet::try_new(&g, g.full_set()).is_ok());
        assert!(SubgroupSet::try_new(&g, g.identity_set()).is_ok());
        let t = g
            .element_index(&Permutation::parse_cycles("(1 2)", 3).unwrap())
            .unwrap()
            .unwrap();
        assert!(SubgroupSet::try_new(&g, BitSet::from_indices(6, [0, t])).is_ok());
        assert_eq!(
            SubgroupSet::try_new(&g, BitSet::from_indices(6, [t])).unwrap_err(),
            Error::NotSubgroup
        );
        assert_eq!(
            SubgroupSet::try_new(&g, BitSet::new(7)).unwrap_err(),
            Error::ParentMismatch { left: 7, right: 6 }
        );
    }
}
