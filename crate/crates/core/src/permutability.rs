//! Permutability predicates decided by explicit product sets.
//!
//! `H` and `K` permute when `HK = KH`; they are 4-permutable when
//! `HKHK = ⟨H, K⟩`. A subgroup is strongly 4-quasinormal (sqn4) when it is
//! 4-permutable with every subgroup, and 4-quasinormal (qn4) when it is
//! 4-permutable with every cyclic subgroup. The predicates are not assumed
//! symmetric: `perm4(H, K)` and `perm4(K, H)` are decided separately.

use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::{prime_divisors, Lattice};
use crate::sets::{ElementSet, SubgroupSet};
use crate::structure;

/// `{ x·y : x ∈ a, y ∈ b }`.
pub fn product_set(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    for set in [a, b] {
        if set.universe() != g.order() {
            return Err(Error::ParentMismatch {
                left: set.universe(),
                right: g.order(),
            });
        }
    }
    Ok(product_unchecked(g, a.members(), b.members()))
}

fn product_unchecked(g: &GroupTable, a: &BitSet, b: &BitSet) -> ElementSet {
    let mut out = BitSet::new(g.order());
    let bs: Vec<usize> = b.iter().collect();
    for x in a.iter() {
        for &y in &bs {
            out.insert(g.mul(x, y));
        }
    }
    ElementSet::new(out)
}

/// `((H·K)·H)·K`.
pub fn hkhk(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> ElementSet {
    let hk = product_unchecked(g, h.members(), k.members());
    let hkh = product_unchecked(g, hk.members(), h.members());
    product_unchecked(g, hkh.members(), k.members())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm4Verdict {
    pub holds: bool,
    pub join: SubgroupSet,
    pub product: ElementSet,
    pub witness_note: String,
}

/// Decides `⟨H, K⟩ = HKHK`.
pub fn perm4(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> Perm4Verdict {
    let join = structure::join(g, h, k);
    let product = hkhk(g, h, k);
    let holds = product.members() == join.members();
    let witness_note = if holds {
        format!("HKHK = <H,K>, order {}", join.order())
    } else {
        format!("|HKHK| = {} but |<H,K>| = {}", product.len(), join.order())
    };
    Perm4Verdict {
        holds,
        join,
        product,
        witness_note,
    }
}

/// Decides `HK = KH`.
pub fn permutes(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    product_unchecked(g, h.members(), k.members()) == product_unchecked(g, k.members(), h.members())
}

/// Permutable (quasinormal): permutes with every subgroup in the lattice.
pub fn is_permutable(lattice: &Lattice, h: &SubgroupSet) -> bool {
    let g = lattice.group();
    lattice.subgroups().iter().all(|k| permutes(g, h, k))
}

/// S-permutable: permutes with every Sylow subgroup for every prime divisor
/// of the group order.
pub fn is_s_permutable(lattice: &Lattice, h: &SubgroupSet) -> bool {
    let g = lattice.group();
    prime_divisors(g.order()).into_iter().all(|p| {
        lattice
            .sylow_subgroups(p)
            .expect("prime divides the order")
            .into_iter()
            .all(|i| permutes(g, h, lattice.get(i)))
    })
}

/// Outcome of a universally quantified 4-permutability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sqn4Verdict {
    pub holds: bool,
    /// First subgroup in canonical lattice order that `H` fails to be
    /// 4-permutable with.
    pub witness: Option<SubgroupSet>,
}

impl Sqn4Verdict {
    fn from_witness(lattice: &Lattice, w: Option<usize>) -> Self {
        Sqn4Verdict {
            holds: w.is_none(),
            witness: w.map(|i| lattice.get(i).clone()),
        }
    }
}

/// Strongly 4-quasinormal: 4-permutable with every subgroup.
pub fn is_sqn4(lattice: &Lattice, h: &SubgroupSet) -> Sqn4Verdict {
    let g = lattice.group();
    let w = (0..lattice.len()).find(|&i| !perm4(g, h, lattice.get(i)).holds);
    Sqn4Verdict::from_witness(lattice, w)
}

/// 4-quasinormal: 4-permutable with every cyclic subgroup.
pub fn is_qn4(lattice: &Lattice, h: &SubgroupSet) -> Sqn4Verdict {
    let g = lattice.group();
    let w = (0..lattice.len())
        .filter(|&i| lattice.is_cyclic(i))
        .find(|&i| !perm4(g, h, lattice.get(i)).holds);
    Sqn4Verdict::from_witness(lattice, w)
}

/// Decides whether `h` is sqn4 inside the group `k` (with `h ≤ k ≤ g`) by
/// building `k`'s own table and lattice.
pub fn sqn4_in_subgroup(
    g: &GroupTable,
    h: &SubgroupSet,
    k: &SubgroupSet,
    limits: &crate::group::Limits,
) -> Result<bool> {
    if !h.is_subgroup_of(k) {
        return Err(Error::NotContained);
    }
    let sub = crate::subtable::SubgroupTable::new(g, k, limits)?;
    let inner = Lattice::build(sub.table().clone(), limits)?;
    let h_inner = sub.restrict_subgroup(h)?;
    Ok(is_sqn4(&inner, &h_inner).holds)
}

/// Memoized pairwise predicates over one lattice. Safe to share between
/// threads: each cache slot is written at most once.
pub struct Sweep {
    lattice: Arc<Lattice>,
    perm4: Vec<OnceLock<bool>>,
    permutes: Vec<OnceLock<bool>>,
    sqn4: Vec<OnceLock<Option<u32>>>,
    qn4: Vec<OnceLock<Option<u32>>>,
    permutable: Vec<OnceLock<bool>>,
}

impl Sweep {
    pub fn new(lattice: Arc<Lattice>) -> Sweep {
        let n = lattice.len();
        Sweep {
            perm4: slots(n * n),
            permutes: slots(n * n),
            sqn4: slots(n),
            qn4: slots(n),
            permutable: slots(n),
            lattice,
        }
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn group(&self) -> &GroupTable {
        self.lattice.group()
    }

    /// `perm4(H_i, H_j)`.
    pub fn perm4(&self, i: usize, j: usize) -> bool {
        let n = self.lattice.len();
        *self.perm4[i * n + j].get_or_init(|| {
            let l = &*self.lattice;
            let join = l.join(i, j);
            let product = hkhk(l.group(), l.get(i), l.get(j));
            product.members() == l.get(join).members()
        })
    }

    /// `H_i H_j = H_j H_i`.
    pub fn permutes(&self, i: usize, j: usize) -> bool {
        let n = self.lattice.len();
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        *self.permutes[a * n + b].get_or_init(|| {
            let l = &*self.lattice;
            permutes(l.group(), l.get(a), l.get(b))
        })
    }

    pub fn sqn4_witness(&self, i: usize) -> Option<usize> {
        self.sqn4[i]
            .get_or_init(|| {
                (0..self.lattice.len())
                    .find(|&j| !self.perm4(i, j))
                    .map(|j| j as u32)
            })
            .map(|j| j as usize)
    }

    pub fn is_sqn4(&self, i: usize) -> bool {
        self.sqn4_witness(i).is_none()
    }

    pub fn qn4_witness(&self, i: usize) -> Option<usize> {
        self.qn4[i]
            .get_or_init(|| {
                (0..self.lattice.len())
                    .filter(|&j| self.lattice.is_cyclic(j))
                    .find(|&j| !self.perm4(i, j))
                    .map(|j| j as u32)
            })
            .map(|j| j as usize)
    }

    pub fn is_qn4(&self, i: usize) -> bool {
        self.qn4_witness(i).is_none()
    }

    pub fn is_permutable(&self, i: usize) -> bool {
        *self.permutable[i].get_or_init(|| {
            self.lattice.is_normal(i) || (0..self.lattice.len()).all(|j| self.permutes(i, j))
        })
    }

    pub fn is_s_permutable(&self, i: usize) -> bool {
        let l = &self.lattice;
        prime_divisors(l.group().order()).into_iter().all(|p| {
            l.sylow_subgroups(p)
                .expect("prime divides the order")
                .into_iter()
                .all(|j| self.permutes(i, j))
        })
    }

    pub fn sqn4_indices(&self) -> Vec<usize> {
        (0..self.lattice.len())
            .filter(|&i| self.is_sqn4(i))
            .collect()
    }

    pub fn permutable_indices(&self) -> Vec<usize> {
        (0..self.lattice.len())
            .filter(|&i| self.is_permutable(i))
            .collect()
    }
}

fn slots<T>(m: usize) -> Vec<OnceLock<T>> {
    (0..m).map(|_| OnceLock::new()).collect()
}
