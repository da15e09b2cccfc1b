//! A subgroup rebuilt as a group in its own right, with the index maps
//! between its table and the parent's.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};
use crate::perm::Permutation;
use crate::sets::SubgroupSet;
use crate::structure::generated_with_generators;

#[derive(Debug, Clone)]
pub struct SubgroupTable {
    table: Arc<GroupTable>,
    /// Subgroup element index → parent element index.
    to_parent: Vec<usize>,
    /// Parent element index → subgroup element index, `u32::MAX` outside.
    from_parent: Vec<u32>,
}

impl SubgroupTable {
    pub fn new(g: &GroupTable, h: &SubgroupSet, limits: &Limits) -> Result<SubgroupTable> {
        let (_, gens) = generated_with_generators(g, h.members());
        let perms: Vec<Permutation> = if gens.is_empty() {
            vec![Permutation::identity(g.degree())]
        } else {
            gens.iter().map(|&x| g.element(x).clone()).collect()
        };
        Self::from_generators(g, &perms, limits)
    }

    /// Builds the subgroup from explicit generator permutations, keeping
    /// their order (and thus the table's element order and generators).
    pub fn from_generators(
        g: &GroupTable,
        perms: &[Permutation],
        limits: &Limits,
    ) -> Result<SubgroupTable> {
        let table = GroupTable::closure(perms, limits.max_order)?;
        let mut from_parent = vec![u32::MAX; g.order()];
        let mut to_parent = Vec::with_capacity(table.order());
        for (i, p) in table.elements().iter().enumerate() {
            let j = g.element_index(p)?.ok_or(Error::NotInGroup)?;
            to_parent.push(j);
            from_parent[j] = i as u32;
        }
        Ok(SubgroupTable {
            table: Arc::new(table),
            to_parent,
            from_parent,
        })
    }

    pub fn table(&self) -> &Arc<GroupTable> {
        &self.table
    }

    pub fn to_parent(&self, i: usize) -> usize {
        self.to_parent[i]
    }

    pub fn from_parent(&self, j: usize) -> Option<usize> {
        match self.from_parent[j] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// Re-indexes a parent subset into the subgroup's table.
    pub fn restrict(&self, set: &BitSet) -> Result<BitSet> {
        let mut out = BitSet::new(self.table.order());
        for j in set.iter() {
            out.insert(self.from_parent(j).ok_or(Error::NotContained)?);
        }
        Ok(out)
    }

    pub fn restrict_subgroup(&self, h: &SubgroupSet) -> Result<SubgroupSet> {
        SubgroupSet::try_new(&self.table, self.restrict(h.members())?)
    }

    pub fn lift(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.from_parent.len(),
            set.iter().map(|i| self.to_parent[i]),
        )
    }
}
