//! Structural queries on subgroups of a `GroupTable`.

use crate::bitset::BitSet;
use crate::group::GroupTable;
use crate::sets::{ElementSet, SubgroupSet};

/// Closes `{identity}` under right multiplication by `gens`.
pub(crate) fn close_generators(g: &GroupTable, gens: &[usize]) -> BitSet {
    let mut set = g.identity_set();
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

/// The subgroup generated by the given element indices.
pub fn subgroup_from_generators(g: &GroupTable, gens: &[usize]) -> SubgroupSet {
    SubgroupSet::from_closed(close_generators(g, gens))
}

/// Smallest subgroup containing `seed`, together with a (greedy, irredundant)
/// generating set drawn from the seed in ascending index order.
pub fn generated_with_generators(g: &GroupTable, seed: &BitSet) -> (SubgroupSet, Vec<usize>) {
    let mut gens = Vec::new();
    let mut current = g.identity_set();
    for x in seed.iter() {
        if !current.contains(x) {
            gens.push(x);
            current = close_generators(g, &gens);
        }
    }
    (SubgroupSet::from_closed(current), gens)
}

/// `⟨seed⟩`. An empty seed gives the trivial subgroup.
pub fn generated_subgroup(g: &GroupTable, seed: &ElementSet) -> SubgroupSet {
    generated_with_generators(g, seed.members()).0
}

/// `⟨H ∪ K⟩`.
pub fn join(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
    if h.is_subgroup_of(k) {
        return k.clone();
    }
    if k.is_subgroup_of(h) {
        return h.clone();
    }
    generated_with_generators(g, &h.members().union(k.members())).0
}

/// Cyclic subgroup `⟨x⟩`.
pub fn cyclic_subgroup(g: &GroupTable, x: usize) -> SubgroupSet {
    subgroup_from_generators(g, &[x])
}

/// `x⁻¹ H x`.
pub fn conjugate(g: &GroupTable, h: &SubgroupSet, x: usize) -> SubgroupSet {
    SubgroupSet::from_closed(BitSet::from_indices(
        g.order(),
        h.iter().map(|y| g.conj(y, x)),
    ))
}

fn normalized_by(g: &GroupTable, h: &SubgroupSet, x: usize) -> bool {
    h.iter().all(|y| h.contains(g.conj(y, x)))
}

/// Normal in `g`: invariant under conjugation by every generator of `g`.
pub fn is_normal(g: &GroupTable, h: &SubgroupSet) -> bool {
    g.generators().iter().all(|&s| normalized_by(g, h, s))
}

/// Normal in the subgroup `ambient` (which must contain `h`).
pub fn is_normal_in(g: &GroupTable, h: &SubgroupSet, ambient: &SubgroupSet) -> bool {
    ambient.iter().all(|x| normalized_by(g, h, x))
}

/// Smallest normal subgroup of `ambient` containing `h`.
pub fn normal_closure(g: &GroupTable, h: &SubgroupSet, ambient: &SubgroupSet) -> SubgroupSet {
    let mut seed = BitSet::new(g.order());
    for y in h.iter() {
        for x in ambient.iter() {
            seed.insert(g.conj(y, x));
        }
    }
    generated_with_generators(g, &seed).0
}

/// `[H, K]`, generated by all `h⁻¹k⁻¹hk`.
pub fn commutator_subgroup(g: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
    let mut seed = BitSet::new(g.order());
    for x in h.iter() {
        for y in k.iter() {
            seed.insert(g.commutator(x, y));
        }
    }
    generated_with_generators(g, &seed).0
}

/// `G ≥ G' ≥ G'' ≥ …`, ending with the first repeated term.
pub fn derived_series(g: &GroupTable) -> Vec<SubgroupSet> {
    let mut series = vec![SubgroupSet::whole(g)];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        let done = next == *last;
        series.push(next);
        if done {
            return series;
        }
    }
}

pub fn centralizer(g: &GroupTable, h: &SubgroupSet) -> SubgroupSet {
    let members = (0..g.order()).filter(|&x| h.iter().all(|y| g.mul(x, y) == g.mul(y, x)));
    SubgroupSet::from_closed(BitSet::from_indices(g.order(), members))
}

pub fn normalizer(g: &GroupTable, h: &SubgroupSet) -> SubgroupSet {
    let members = (0..g.order()).filter(|&x| normalized_by(g, h, x));
    SubgroupSet::from_closed(BitSet::from_indices(g.order(), members))
}

pub fn center(g: &GroupTable) -> SubgroupSet {
    centralizer(g, &SubgroupSet::whole(g))
}

/// Subnormality by normal-closure descent: replace the ambient group by the
/// normal closure of `h` in it until nothing changes, then compare with `h`.
pub fn is_subnormal(g: &GroupTable, h: &SubgroupSet) -> bool {
    let mut ambient = SubgroupSet::whole(g);
    loop {
        if ambient == *h {
            return true;
        }
        let next = normal_closure(g, h, &ambient);
        if next == ambient {
            return false;
        }
        ambient = next;
    }
}

pub fn is_abelian(g: &GroupTable) -> bool {
    let gens = g.generators();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn is_abelian_subgroup(g: &GroupTable, h: &SubgroupSet) -> bool {
    h.iter()
        .all(|a| h.iter().all(|b| g.mul(a, b) == g.mul(b, a)))
}
