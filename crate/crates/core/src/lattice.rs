//! Complete subgroup lattices.
//!
//! Every subgroup is a join of cyclic subgroups, so enumeration starts from
//! the cyclic subgroups and repeatedly joins each known subgroup with each
//! cyclic one until no new subgroup appears.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{GroupTable, Limits};
use crate::sets::SubgroupSet;
use crate::structure::{self, close_generators};

pub struct Lattice {
    group: Arc<GroupTable>,
    subgroups: Vec<SubgroupSet>,
    generators: Vec<Vec<usize>>,
    normal: BitSet,
    cyclic: BitSet,
    index: HashMap<BitSet, usize>,
    joins: Vec<OnceLock<u32>>,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("order", &self.group.order())
            .field("subgroups", &self.subgroups.len())
            .finish()
    }
}

/// One entry of the JSON lattice export.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LatticeEntry {
    pub order: usize,
    pub members: Vec<usize>,
    pub normal: bool,
}

impl Lattice {
    /// Enumerates every subgroup of `group`. Fails if the group order is
    /// above `limits.lattice_cap`.
    pub fn build(group: Arc<GroupTable>, limits: &Limits) -> Result<Lattice> {
        limits.check_lattice(group.order())?;
        let g = &*group;
        let n = g.order();

        let mut found: HashMap<BitSet, Vec<usize>> = HashMap::new();
        let mut cyclic_gens: Vec<usize> = Vec::new();
        for x in 0..n {
            let members = close_generators(g, &[x]);
            found.entry(members).or_insert_with(|| {
                cyclic_gens.push(x);
                if x == 0 {
                    vec![]
                } else {
                    vec![x]
                }
            });
        }

        let mut frontier: Vec<(BitSet, Vec<usize>)> =
            found.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        frontier.sort_by(|a, b| a.0.cmp_members(&b.0));
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (members, gens) in &frontier {
                for &c in &cyclic_gens {
                    if members.contains(c) {
                        continue;
                    }
                    let mut joined_gens = gens.clone();
                    joined_gens.push(c);
                    let joined = close_generators(g, &joined_gens);
                    if !found.contains_key(&joined) {
                        found.insert(joined.clone(), joined_gens.clone());
                        next.push((joined, joined_gens));
                    }
                }
            }
            frontier = next;
        }

        let mut entries: Vec<(SubgroupSet, Vec<usize>)> = found
            .into_iter()
            .map(|(members, gens)| (SubgroupSet::from_closed(members), gens))
            .collect();
        entries.sort_by(|a, b| a.0.canonical_cmp(&b.0));

        let count = entries.len();
        let mut normal = BitSet::new(count);
        let mut cyclic = BitSet::new(count);
        let mut index = HashMap::with_capacity(count);
        let mut subgroups = Vec::with_capacity(count);
        let mut generators = Vec::with_capacity(count);
        for (i, (h, gens)) in entries.into_iter().enumerate() {
            if structure::is_normal(g, &h) {
                normal.insert(i);
            }
            if h.iter().any(|x| g.element_order(x) == h.order()) {
                cyclic.insert(i);
            }
            index.insert(h.members().clone(), i);
            subgroups.push(h);
            generators.push(gens);
        }

        Ok(Lattice {
            group,
            subgroups,
            generators,
            normal,
            cyclic,
            index,
            joins: (0..count * count).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &SubgroupSet {
        &self.subgroups[i]
    }

    /// A generating set of subgroup `i` (empty for the trivial subgroup).
    pub fn generators_of(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    pub fn index_of(&self, members: &BitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn index_of_subgroup(&self, h: &SubgroupSet) -> Option<usize> {
        self.index_of(h.members())
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal.contains(i)
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic.contains(i)
    }

    pub fn normal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.normal.iter()
    }

    /// Lattice index of `⟨H_i ∪ H_j⟩`, memoized.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        *self.joins[i * n + j].get_or_init(|| {
            let (a, b) = (&self.subgroups[i], &self.subgroups[j]);
            let idx = if a.is_subgroup_of(b) {
                j
            } else if b.is_subgroup_of(a) {
                i
            } else {
                let mut gens = self.generators[i].clone();
                gens.extend_from_slice(&self.generators[j]);
                let joined = close_generators(&self.group, &gens);
                self.index[&joined]
            };
            idx as u32
        }) as usize
    }

    /// Lattice index of `H_i ∩ H_j`.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let m = self.subgroups[i]
            .members()
            .intersection(self.subgroups[j].members());
        self.index[&m]
    }

    /// All Sylow `p`-subgroups.
    pub fn sylow_subgroups(&self, p: usize) -> Result<Vec<usize>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = self.group.order();
        if !order.is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide { p, order });
        }
        let mut pa = 1;
        while order.is_multiple_of(pa * p) {
            pa *= p;
        }
        Ok((0..self.len())
            .filter(|&i| self.subgroups[i].order() == pa)
            .collect())
    }

    /// Subgroups whose order involves only `primes` and whose index is
    /// coprime to every member of `primes`.
    pub fn hall_subgroups(&self, primes: &[usize]) -> Vec<usize> {
        let order = self.group.order();
        (0..self.len())
            .filter(|&i| {
                let size = self.subgroups[i].order();
                let index = order / size;
                only_primes(size, primes) && primes.iter().all(|&p| !index.is_multiple_of(p))
            })
            .collect()
    }

    /// Pairs `(i, j)` where `H_i` is a maximal subgroup of `H_j`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for j in 0..self.len() {
            let below: Vec<usize> = (0..j)
                .filter(|&i| self.subgroups[i].is_subgroup_of(&self.subgroups[j]) && i != j)
                .collect();
            for &i in &below {
                let covered = below.iter().any(|&k| {
                    k != i
                        && self.subgroups[k].order() > self.subgroups[i].order()
                        && self.subgroups[i].is_subgroup_of(&self.subgroups[k])
                });
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn entries(&self) -> Vec<LatticeEntry> {
        self.subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| LatticeEntry {
                order: h.order(),
                members: h.one_based(),
                normal: self.is_normal(i),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries()).expect("lattice entries serialize")
    }

    /// Hasse diagram in Graphviz DOT. Nodes are numbered by lattice index;
    /// normal subgroups are drawn as boxes.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, h) in self.subgroups.iter().enumerate() {
            let shape = if self.is_normal(i) { "box" } else { "ellipse" };
            let _ = writeln!(
                out,
                "  h{i} [label=\"{i}: order {}\", shape={shape}];",
                h.order()
            );
        }
        for (i, j) in self.hasse_edges() {
            let _ = writeln!(out, "  h{i} -> h{j};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn only_primes(mut n: usize, primes: &[usize]) -> bool {
    for &p in primes {
        while p > 1 && n.is_multiple_of(p) {
            n /= p;
        }
    }
    n == 1
}
