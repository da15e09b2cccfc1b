#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use permcheck::perm::compose;
use permcheck::{GroupSpec, GroupTable, Limits, Permutation};

pub fn table(name: &str) -> std::sync::Arc<GroupTable> {
    GroupSpec::parse(name)
        .unwrap()
        .build(&Limits::default())
        .unwrap()
        .table
}

/// Multiplication table rebuilt from raw composition, indexed like
/// `g.elements()` but computed without the engine's table.
pub fn naive_products(g: &GroupTable) -> Vec<Vec<usize>> {
    let elems = g.elements();
    let index: HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| index[&compose(a, b).unwrap()])
                .collect()
        })
        .collect()
}

/// Every subset of a small group that is closed under the
/// product, found by brute force over all subsets containing the identity.
pub fn power_set_subgroups(g: &GroupTable) -> BTreeSet<u32> {
    let n = g.order();
    assert!(n <= 20, "power-set oracle is exponential");
    let prod = naive_products(g);
    let id = g.elements().iter().position(|p| p.is_identity()).unwrap();
    let mut out = BTreeSet::new();
    for rest in 0u64..(1u64 << (n - 1)) {
        // Spread the n-1 free bits around the identity's position.
        let low = rest & ((1u64 << id) - 1);
        let high = (rest >> id) << (id + 1);
        let mask = (low | high | (1u64 << id)) as u32;
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| mask >> prod[a][b] & 1 == 1));
        if closed {
            out.insert(mask);
        }
    }
    out
}

/// Naive closure of a set of permutations under composition.
pub fn naive_closure(gens: &[Permutation], degree: usize) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    set.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g).unwrap();
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}
