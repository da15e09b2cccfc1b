//! Everything computed about one group, built lazily and shared.
//!
//! Inner predicates ("sqn4 inside K", "permutable inside H") are decided on a
//! freshly built table for the subgroup; those sub-analyses are memoized per
//! lattice index, as are quotient analyses per normal subgroup.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};
use crate::lattice::Lattice;
use crate::permutability::Sweep;
use crate::quotient::QuotientMap;
use crate::sets::SubgroupSet;
use crate::subtable::SubgroupTable;

/// Outcome of a transitivity check: the first chain `(inner, outer)` of
/// lattice indices that breaks transitivity, if any.
pub type ChainResult = Option<(usize, usize)>;

pub struct GroupContext {
    sweep: Sweep,
    limits: Limits,
    children: Vec<OnceLock<Result<Arc<SubgroupContext>>>>,
    quotients: Vec<OnceLock<Result<Arc<QuotientContext>>>>,
    pub(crate) pt: OnceLock<Result<ChainResult>>,
    pub(crate) sq4t: OnceLock<Result<ChainResult>>,
}

pub struct SubgroupContext {
    pub embedding: SubgroupTable,
    pub context: GroupContext,
}

pub struct QuotientContext {
    pub map: QuotientMap,
    pub context: GroupContext,
}

impl std::fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupContext")
            .field("order", &self.table().order())
            .field("subgroups", &self.lattice().len())
            .finish()
    }
}

impl GroupContext {
    pub fn new(table: Arc<GroupTable>, limits: Limits) -> Result<GroupContext> {
        let lattice = Arc::new(Lattice::build(table, &limits)?);
        Ok(Self::from_lattice(lattice, limits))
    }

    pub fn from_lattice(lattice: Arc<Lattice>, limits: Limits) -> GroupContext {
        let n = lattice.len();
        GroupContext {
            sweep: Sweep::new(lattice),
            limits,
            children: (0..n).map(|_| OnceLock::new()).collect(),
            quotients: (0..n).map(|_| OnceLock::new()).collect(),
            pt: OnceLock::new(),
            sq4t: OnceLock::new(),
        }
    }

    pub fn table(&self) -> &GroupTable {
        self.sweep.group()
    }

    pub fn table_arc(&self) -> &Arc<GroupTable> {
        self.sweep.lattice().group_arc()
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.sweep.lattice()
    }

    pub fn sweep(&self) -> &Sweep {
        &self.sweep
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn subgroup(&self, i: usize) -> &SubgroupSet {
        self.lattice().get(i)
    }

    /// Analysis of subgroup `i` as a group in its own right.
    pub fn child(&self, i: usize) -> Result<&Arc<SubgroupContext>> {
        self.children[i]
            .get_or_init(|| {
                let embedding = SubgroupTable::new(self.table(), self.subgroup(i), &self.limits)?;
                let context = GroupContext::new(embedding.table().clone(), self.limits)?;
                Ok(Arc::new(SubgroupContext { embedding, context }))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Index, in the lattice of subgroup `outer`, of subgroup `inner`.
    pub fn index_in_child(&self, inner: usize, outer: usize) -> Result<usize> {
        let child = self.child(outer)?;
        let members = child.embedding.restrict(self.subgroup(inner).members())?;
        Ok(child
            .context
            .lattice()
            .index_of(&members)
            .expect("restricted subgroup is in the child lattice"))
    }

    /// Whether subgroup `inner` is sqn4 in subgroup `outer`.
    pub fn sqn4_in(&self, inner: usize, outer: usize) -> Result<bool> {
        if !self.subgroup(inner).is_subgroup_of(self.subgroup(outer)) {
            return Err(Error::NotContained);
        }
        if outer == self.lattice().whole_index() {
            return Ok(self.sweep.is_sqn4(inner));
        }
        let j = self.index_in_child(inner, outer)?;
        Ok(self.child(outer)?.context.sweep().is_sqn4(j))
    }

    /// Whether subgroup `inner` is permutable in subgroup `outer`.
    pub fn permutable_in(&self, inner: usize, outer: usize) -> Result<bool> {
        if !self.subgroup(inner).is_subgroup_of(self.subgroup(outer)) {
            return Err(Error::NotContained);
        }
        if outer == self.lattice().whole_index() {
            return Ok(self.sweep.is_permutable(inner));
        }
        let j = self.index_in_child(inner, outer)?;
        Ok(self.child(outer)?.context.sweep().is_permutable(j))
    }

    /// Analysis of `G/N` for the normal subgroup at lattice index `n`.
    pub fn quotient(&self, n: usize) -> Result<&Arc<QuotientContext>> {
        self.quotients[n]
            .get_or_init(|| {
                let map = QuotientMap::new(self.table(), self.subgroup(n))?;
                let context = GroupContext::new(map.quotient().clone(), self.limits)?;
                Ok(Arc::new(QuotientContext { map, context }))
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn ctx(d: usize, gens: &[&str]) -> GroupContext {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, d).unwrap())
            .collect();
        let g = Arc::new(GroupTable::closure(&gens, 2000).unwrap());
        GroupContext::new(g, Limits::default()).unwrap()
    }

    #[test]
    fn inner_predicates_match_direct_construction() {
        let c = ctx(4, &["(1 2 3 4)", "(2 4)"]);
        let l = c.lattice();
        for outer in 0..l.len() {
            for inner in 0..l.len() {
                if !l.get(inner).is_subgroup_of(l.get(outer)) {
                    assert_eq!(c.sqn4_in(inner, outer).unwrap_err(), Error::NotContained);
                    continue;
                }
                let direct = crate::permutability::sqn4_in_subgroup(
                    c.table(),
                    l.get(inner),
                    l.get(outer),
                    c.limits(),
                )
                .unwrap();
                assert_eq!(c.sqn4_in(inner, outer).unwrap(), direct);
            }
        }
    }

    #[test]
    fn quotient_contexts() {
        let c = ctx(4, &["(1 2 3)", "(2 3 4)"]);
        let p = c
            .lattice()
            .normal_indices()
            .find(|&i| c.subgroup(i).order() == 4)
            .unwrap();
        let q = c.quotient(p).unwrap();
        assert_eq!(q.context.table().order(), 3);
        assert_eq!(q.context.lattice().len(), 2);
        let not_normal = (0..c.lattice().len())
            .find(|&i| !c.lattice().is_normal(i))
            .unwrap();
        assert_eq!(c.quotient(not_normal).err(), Some(Error::NotNormal));
    }
}
