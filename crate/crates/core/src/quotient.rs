//! Quotients `G/N` realized as permutation groups on the cosets of `N`.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Permutation;
use crate::sets::SubgroupSet;
use crate::structure;

#[derive(Debug, Clone)]
pub struct QuotientMap {
    kernel: SubgroupSet,
    coset_of: Vec<usize>,
    quotient: Arc<GroupTable>,
}

impl QuotientMap {
    /// Builds `g / n`. Coset labels coincide with element indices of the
    /// quotient table, so the identity coset is 0.
    pub fn new(g: &GroupTable, n: &SubgroupSet) -> Result<QuotientMap> {
        if n.members().universe() != g.order() {
            return Err(Error::ParentMismatch {
                left: n.members().universe(),
                right: g.order(),
            });
        }
        SubgroupSet::try_new(g, n.members().clone())?;
        if !structure::is_normal(g, n) {
            return Err(Error::NotNormal);
        }

        // Label left cosets xN in order of first appearance.
        let order = g.order();
        let mut label = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order {
            if label[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for y in n.iter() {
                label[g.mul(x, y)] = c;
            }
        }
        let index = reps.len();

        // Left translation by x sends the coset of r to the coset of x·r.
        let translate = |x: usize| {
            let images = reps.iter().map(|&r| label[g.mul(x, r)]).collect();
            Permutation::from_images(images).expect("left translation permutes cosets")
        };
        let gens: Vec<Permutation> = g.generators().iter().map(|&s| translate(s)).collect();
        let quotient = GroupTable::closure(&gens, index)?;
        debug_assert_eq!(quotient.order(), index);

        let mut by_label = vec![usize::MAX; index];
        for (c, &r) in reps.iter().enumerate() {
            by_label[c] = quotient
                .element_index(&translate(r))?
                .expect("coset translation lies in the quotient");
        }
        let coset_of = label.iter().map(|&c| by_label[c]).collect();

        Ok(QuotientMap {
            kernel: n.clone(),
            coset_of,
            quotient: Arc::new(quotient),
        })
    }

    pub fn kernel(&self) -> &SubgroupSet {
        &self.kernel
    }

    pub fn quotient(&self) -> &Arc<GroupTable> {
        &self.quotient
    }

    /// Quotient element index of the coset containing parent element `i`.
    pub fn coset_of(&self, i: usize) -> usize {
        self.coset_of[i]
    }

    pub fn coset_map(&self) -> &[usize] {
        &self.coset_of
    }

    /// Image of a subgroup of the parent.
    pub fn image(&self, h: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(BitSet::from_indices(
            self.quotient.order(),
            h.iter().map(|i| self.coset_of[i]),
        ))
    }

    /// Full preimage of a subset of the quotient.
    pub fn preimage(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.coset_of.len(),
            (0..self.coset_of.len()).filter(|&i| set.contains(self.coset_of[i])),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::subgroup_from_generators;

    fn group(d: usize, gens: &[&str]) -> GroupTable {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, d).unwrap())
            .collect();
        GroupTable::closure(&gens, 2000).unwrap()
    }

    fn elt(g: &GroupTable, s: &str) -> usize {
        g.element_index(&Permutation::parse_cycles(s, g.degree()).unwrap())
            .unwrap()
            .unwrap()
    }

    fn check_map(g: &GroupTable, q: &QuotientMap) {
        let n = q.kernel();
        assert_eq!(q.coset_of(0), 0);
        assert_eq!(q.quotient().order() * n.order(), g.order());
        q.quotient().check_invariants().unwrap();
        for i in 0..g.order() {
            for j in 0..g.order() {
                let same = q.coset_of(i) == q.coset_of(j);
                assert_eq!(same, n.contains(g.mul(i, g.inv(j))));
                // the coset map is a homomorphism
                assert_eq!(
                    q.coset_of(g.mul(i, j)),
                    q.quotient().mul(q.coset_of(i), q.coset_of(j))
                );
            }
        }
    }

    #[test]
    fn s3_mod_a3() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let a3 = subgroup_from_generators(&g, &[elt(&g, "(1 2 3)")]);
        let q = QuotientMap::new(&g, &a3).unwrap();
        assert_eq!(q.quotient().order(), 2);
        check_map(&g, &q);
    }

    #[test]
    fn trivial_kernel_is_isomorphic() {
        let g = group(4, &["(1 2 3)", "(2 3 4)"]);
        let q = QuotientMap::new(&g, &SubgroupSet::trivial(&g)).unwrap();
        assert_eq!(q.quotient().order(), 12);
        check_map(&g, &q);
        let bijective: std::collections::BTreeSet<_> = q.coset_map().iter().collect();
        assert_eq!(bijective.len(), 12);
    }

    #[test]
    fn d12_mod_rotation_cube() {
        let g = group(6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]);
        let r2 = subgroup_from_generators(&g, &[elt(&g, "(1 3 5)(2 4 6)")]);
        let q = QuotientMap::new(&g, &r2).unwrap();
        assert_eq!(q.quotient().order(), 4);
        assert!(structure::is_abelian(q.quotient()));
        assert!((1..4).all(|x| q.quotient().element_order(x) == 2));
        check_map(&g, &q);
    }

    #[test]
    fn whole_kernel() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let q = QuotientMap::new(&g, &SubgroupSet::whole(&g)).unwrap();
        assert_eq!(q.quotient().order(), 1);
    }

    #[test]
    fn rejects_non_normal() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let t = subgroup_from_generators(&g, &[elt(&g, "(1 2)")]);
        assert_eq!(QuotientMap::new(&g, &t).unwrap_err(), Error::NotNormal);
    }
}
