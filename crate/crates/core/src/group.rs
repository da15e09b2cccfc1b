//! Finite permutation groups as fully indexed Cayley tables.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::perm::{compose_unchecked, Permutation};

pub const DEFAULT_MAX_ORDER: usize = 2000;
pub const DEFAULT_MAX_DEGREE: usize = 64;
pub const DEFAULT_LATTICE_CAP: usize = 360;

/// Resource caps for exhaustive computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order `closure` will build.
    pub max_order: usize,
    /// Largest permutation degree accepted from input.
    pub max_degree: usize,
    /// Largest group order whose full subgroup lattice is enumerated.
    pub lattice_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_degree: DEFAULT_MAX_DEGREE,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

impl Limits {
    pub fn check_lattice(&self, order: usize) -> Result<()> {
        if order > self.lattice_cap {
            return Err(Error::LatticeCapExceeded {
                order,
                cap: self.lattice_cap,
            });
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: self.max_degree,
            });
        }
        Ok(())
    }
}

/// A finite permutation group with its multiplication and inverse tables.
///
/// Element 0 is always the identity. Elements are ordered by breadth-first
/// discovery from the identity, right-multiplying by the generators in input
/// order, so the same generator list always yields the same table.
#[derive(Clone)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    index: HashMap<Permutation, usize>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroupTable {
    /// Builds the group generated by `generators`, aborting once more than
    /// `max_order` elements have been found.
    pub fn closure(generators: &[Permutation], max_order: usize) -> Result<GroupTable> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }

        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        // Right multiplication by each generator, and the BFS tree used to
        // fill the full table without further hashing.
        let ngens = generators.len();
        let mut right: Vec<u32> = Vec::new();
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];

        let mut head = 0;
        while head < elements.len() {
            for (k, g) in generators.iter().enumerate() {
                let y = compose_unchecked(&elements[head], g);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= max_order {
                            return Err(Error::OrderCapExceeded { cap: max_order });
                        }
                        index.insert(y.clone(), i);
                        elements.push(y);
                        parent.push((head as u32, k as u32));
                        i
                    }
                };
                right.push(idx as u32);
            }
            head += 1;
        }

        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            let row = i * n;
            mul[row] = i as u32;
            for j in 1..n {
                let (p, k) = parent[j];
                let ip = mul[row + p as usize] as usize;
                mul[row + j] = right[ip * ngens + k as usize];
            }
        }
        let inv = (0..n)
            .map(|i| {
                let row = &mul[i * n..(i + 1) * n];
                row.iter()
                    .position(|&x| x == 0)
                    .expect("finite group row contains identity") as u32
            })
            .collect();
        let generator_indices = generators.iter().map(|g| index[g]).collect();

        Ok(GroupTable {
            degree,
            elements,
            mul,
            inv,
            generators: generator_indices,
            index,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Indices of the generators the table was built from, in input order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Looks up a permutation. `Ok(None)` means the permutation has the
    /// right degree but is not a group element.
    pub fn element_index(&self, p: &Permutation) -> Result<Option<usize>> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.index.get(p).copied())
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.order())
    }

    pub fn identity_set(&self) -> BitSet {
        BitSet::from_indices(self.order(), [0])
    }

    /// A hash of the multiplication table, used to memoize per-table work.
    pub fn table_fingerprint(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.mul.hash(&mut h);
        h.finish()
    }

    /// Verifies the table invariants: identity first, inverses, Latin square,
    /// involutive inverse map and associativity (exhaustive up to order 64,
    /// sampled above).
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.order();
        if !self.elements[0].is_identity() {
            return Err("element 0 is not the identity".into());
        }
        for i in 0..n {
            if self.mul(i, self.inv(i)) != 0 || self.mul(self.inv(i), i) != 0 {
                return Err(format!("inverse of element {i} is wrong"));
            }
            if self.inv(self.inv(i)) != i {
                return Err(format!("inv(inv({i})) != {i}"));
            }
            let mut row = BitSet::new(n);
            let mut col = BitSet::new(n);
            for j in 0..n {
                row.insert(self.mul(i, j));
                col.insert(self.mul(j, i));
            }
            if row.len() != n || col.len() != n {
                return Err(format!("row or column {i} is not a permutation"));
            }
        }
        let assoc = |i: usize, j: usize, k: usize| {
            self.mul(self.mul(i, j), k) == self.mul(i, self.mul(j, k))
        };
        if n <= 64 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !assoc(i, j, k) {
                            return Err(format!("associativity fails at ({i}, {j}, {k})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            for _ in 0..10 * n {
                let (i, j, k) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !assoc(i, j, k) {
                    return Err(format!("associativity fails at ({i}, {j}, {k})"));
                }
            }
        }
        for (i, p) in self.elements.iter().enumerate() {
            for j in [0, n / 2, n - 1] {
                if compose_unchecked(p, &self.elements[j]) != self.elements[self.mul(i, j)] {
                    return Err(format!("table disagrees with composition at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, cs: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(d, &cs).unwrap()
    }

    #[test]
    fn symmetric_three() {
        let g = GroupTable::closure(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 2000).unwrap();
        assert_eq!(g.order(), 6);
        g.check_invariants().unwrap();
    }

    #[test]
    fn trivial_group() {
        let g = GroupTable::closure(&[Permutation::identity(3)], 2000).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.generators(), &[0]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn dihedral_eight() {
        let g = GroupTable::closure(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])], 2000).unwrap();
        assert_eq!(g.order(), 8);
        g.check_invariants().unwrap();
    }

    #[test]
    fn bfs_ordering() {
        // identity, then r, s, then r·r, r·s, ...
        let r = cyc(4, &[&[0, 1, 2, 3]]);
        let s = cyc(4, &[&[1, 3]]);
        let g = GroupTable::closure(&[r.clone(), s.clone()], 2000).unwrap();
        assert_eq!(g.element(1), &r);
        assert_eq!(g.element(2), &s);
        assert_eq!(g.element(3), &compose_unchecked(&r, &r));
        assert_eq!(g.generators(), &[1, 2]);
    }

    #[test]
    fn order_cap() {
        let gens = [cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2, 3, 4, 5]])];
        assert_eq!(
            GroupTable::closure(&gens, 100).unwrap_err(),
            Error::OrderCapExceeded { cap: 100 }
        );
        assert_eq!(GroupTable::closure(&gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            GroupTable::closure(&[], 10).unwrap_err(),
            Error::NoGenerators
        );
        assert!(matches!(
            GroupTable::closure(&[Permutation::identity(2), Permutation::identity(3)], 10),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn element_lookup() {
        let g = GroupTable::closure(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 2000).unwrap();
        assert_eq!(g.element_index(&Permutation::identity(3)), Ok(Some(0)));
        let t = cyc(3, &[&[0, 1]]);
        let i = g.element_index(&t).unwrap().unwrap();
        assert_eq!(g.element(i), &t);
        assert!(matches!(
            g.element_index(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { .. })
        ));
        let c3 = GroupTable::closure(&[cyc(3, &[&[0, 1, 2]])], 10).unwrap();
        assert_eq!(c3.element_index(&t), Ok(None));
    }

    #[test]
    fn closure_is_idempotent() {
        let g = GroupTable::closure(&[cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])], 2000)
            .unwrap();
        let again = GroupTable::closure(g.elements(), 2000).unwrap();
        let a: std::collections::BTreeSet<_> = g.elements().iter().cloned().collect();
        let b: std::collections::BTreeSet<_> = again.elements().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn sampled_associativity_for_large_groups() {
        let g =
            GroupTable::closure(&[cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])], 2000).unwrap();
        assert_eq!(g.order(), 120);
        g.check_invariants().unwrap();
    }
}
