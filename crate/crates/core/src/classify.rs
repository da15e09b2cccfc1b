//! Group-level classes: abelian, nilpotent, solvable, supersolvable, PT,
//! Sq4T, and Zacher's PT witness.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::context::{ChainResult, GroupContext};
use crate::error::Result;
use crate::group::{GroupTable, Limits};
use crate::lattice::{is_prime, prime_divisors, Lattice};
use crate::quotient::QuotientMap;
use crate::structure;

pub fn is_abelian(g: &GroupTable) -> bool {
    structure::is_abelian(g)
}

/// The derived series reaches the trivial subgroup.
pub fn is_solvable(g: &GroupTable) -> bool {
    structure::derived_series(g)
        .last()
        .is_some_and(|h| h.is_trivial())
}

/// Every Sylow subgroup is normal. Decided by counting `p`-elements: the
/// Sylow `p`-subgroup is normal iff exactly `p^a` elements have `p`-power
/// order.
pub fn is_nilpotent(g: &GroupTable) -> bool {
    let n = g.order();
    prime_divisors(n).into_iter().all(|p| {
        let mut pa = 1;
        while n.is_multiple_of(pa * p) {
            pa *= p;
        }
        let p_elements = (0..n)
            .filter(|&x| is_power_of(g.element_order(x), p))
            .count();
        p_elements == pa
    })
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Trivial, or some normal subgroup of prime order has a supersolvable
/// quotient.
pub fn is_supersolvable(g: &GroupTable, limits: &Limits) -> Result<bool> {
    limits.check_lattice(g.order())?;
    supersolvable_memo(g, &mut HashMap::new())
}

fn supersolvable_memo(g: &GroupTable, memo: &mut HashMap<(usize, u64), bool>) -> Result<bool> {
    if g.order() == 1 {
        return Ok(true);
    }
    let key = (g.order(), g.table_fingerprint());
    if let Some(&known) = memo.get(&key) {
        return Ok(known);
    }
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut verdict = false;
    for x in 1..g.order() {
        if !is_prime(g.element_order(x)) {
            continue;
        }
        let c = structure::cyclic_subgroup(g, x);
        if !seen.insert(c.members().clone()) || !structure::is_normal(g, &c) {
            continue;
        }
        let q = QuotientMap::new(g, &c)?;
        if supersolvable_memo(q.quotient(), memo)? {
            verdict = true;
            break;
        }
    }
    memo.insert(key, verdict);
    Ok(verdict)
}

/// First triple `(X, Y, Z)` with `X ≤ Z` violating
/// `⟨X ∪ (Y ∩ Z)⟩ = ⟨X ∪ Y⟩ ∩ Z`.
pub fn modular_violation(lattice: &Lattice) -> Option<(usize, usize, usize)> {
    let n = lattice.len();
    for z in 0..n {
        for x in 0..=z {
            if !lattice.get(x).is_subgroup_of(lattice.get(z)) {
                continue;
            }
            for y in 0..n {
                let left = lattice.join(x, lattice.meet(y, z));
                let right = lattice.meet(lattice.join(x, y), z);
                if left != right {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// The subgroup lattice satisfies the modular law.
pub fn is_modular_lattice(lattice: &Lattice) -> bool {
    modular_violation(lattice).is_none()
}

/// PT: whenever `K` is permutable in `H` and `H` is permutable in `G`, `K`
/// is permutable in `G`. Returns the first violating chain `(K, H)`.
pub fn is_pt_group(ctx: &GroupContext) -> Result<ChainResult> {
    ctx.pt
        .get_or_init(|| {
            let l = ctx.lattice();
            let sweep = ctx.sweep();
            let mut outers: Vec<usize> = sweep.permutable_indices();
            outers.sort_by_key(|&h| std::cmp::Reverse(l.get(h).order()));
            for h in outers {
                for k in 0..l.len() {
                    if !l.get(k).is_subgroup_of(l.get(h)) || sweep.is_permutable(k) {
                        continue;
                    }
                    if ctx.permutable_in(k, h)? {
                        return Ok(Some((k, h)));
                    }
                }
            }
            Ok(None)
        })
        .clone()
}

/// Sq4T: whenever `H` is sqn4 in `K` and `K` is sqn4 in `G`, `H` is sqn4 in
/// `G`. Outer loop over `K` by descending order, inner over `H ≤ K` in
/// canonical order. Returns the first violating chain `(H, K)`.
pub fn is_sq4t_group(ctx: &GroupContext) -> Result<ChainResult> {
    ctx.sq4t
        .get_or_init(|| {
            let l = ctx.lattice();
            let sweep = ctx.sweep();
            let mut outers: Vec<usize> = sweep.sqn4_indices();
            outers.sort_by_key(|&k| std::cmp::Reverse(l.get(k).order()));
            for k in outers {
                for h in 0..l.len() {
                    if !l.get(h).is_subgroup_of(l.get(k)) || sweep.is_sqn4(h) {
                        continue;
                    }
                    if ctx.sqn4_in(h, k)? {
                        return Ok(Some((h, k)));
                    }
                }
            }
            Ok(None)
        })
        .clone()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZacherChecks {
    pub quotient_order: usize,
    pub quotient_nilpotent: bool,
    pub quotient_modular: bool,
    pub power_automorphisms: bool,
}

impl ZacherChecks {
    pub fn all(&self) -> bool {
        self.quotient_nilpotent && self.quotient_modular && self.power_automorphisms
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZacherWitness {
    /// Lattice index of `L`.
    pub subgroup: usize,
    pub order: usize,
    pub checks: ZacherChecks,
}

/// Normal abelian Hall subgroups of odd order, largest first.
pub fn zacher_candidates(ctx: &GroupContext) -> Vec<usize> {
    let l = ctx.lattice();
    let g = ctx.table();
    let order = g.order();
    (0..l.len())
        .filter(|&i| {
            let size = l.get(i).order();
            size % 2 == 1
                && gcd(size, order / size) == 1
                && l.is_normal(i)
                && structure::is_abelian_subgroup(g, l.get(i))
        })
        .rev()
        .collect()
}

/// Checks one candidate `L`: `G/L` nilpotent with modular subgroup lattice,
/// and every element of `G` maps each `x ∈ L` into `⟨x⟩` by conjugation.
pub fn zacher_checks(ctx: &GroupContext, l: usize) -> Result<ZacherChecks> {
    let g = ctx.table();
    let sub = ctx.subgroup(l);
    let q = ctx.quotient(l)?;
    let power_automorphisms = sub.iter().all(|x| {
        let cyclic = structure::cyclic_subgroup(g, x);
        (0..g.order()).all(|y| cyclic.contains(g.conj(x, y)))
    });
    Ok(ZacherChecks {
        quotient_order: q.context.table().order(),
        quotient_nilpotent: is_nilpotent(q.context.table()),
        quotient_modular: is_modular_lattice(q.context.lattice()),
        power_automorphisms,
    })
}

/// First `L` satisfying Zacher's criterion for soluble PT-groups.
pub fn zacher_witness(ctx: &GroupContext) -> Result<Option<ZacherWitness>> {
    for l in zacher_candidates(ctx) {
        let checks = zacher_checks(ctx, l)?;
        if checks.all() {
            return Ok(Some(ZacherWitness {
                subgroup: l,
                order: ctx.subgroup(l).order(),
                checks,
            }));
        }
    }
    Ok(None)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub supersolvable: bool,
    pub pt: bool,
    pub sq4t: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub claim: String,
    /// Subgroups involved, as 1-based element index lists.
    pub subgroups: Vec<Vec<usize>>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub group_name: String,
    pub order: usize,
    pub num_subgroups: usize,
    pub flags: Flags,
    pub witnesses: Vec<Witness>,
    /// Wall time per flag; only populated on request, since it makes output
    /// nondeterministic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<BTreeMap<String, f64>>,
}

/// Runs every predicate on the group and assembles a report.
pub fn classify(name: &str, ctx: &GroupContext, timings: bool) -> Result<ClassificationReport> {
    let g = ctx.table();
    let l = ctx.lattice();
    let mut elapsed = BTreeMap::new();
    let mut timed = |label: &str, start: Instant| {
        elapsed.insert(label.to_string(), start.elapsed().as_secs_f64() * 1e3);
    };

    let t = Instant::now();
    let abelian = is_abelian(g);
    timed("abelian", t);
    let t = Instant::now();
    let nilpotent = is_nilpotent(g);
    timed("nilpotent", t);
    let t = Instant::now();
    let series = structure::derived_series(g);
    let solvable = series.last().is_some_and(|h| h.is_trivial());
    timed("solvable", t);
    let t = Instant::now();
    let supersolvable = is_supersolvable(g, ctx.limits())?;
    timed("supersolvable", t);
    let t = Instant::now();
    let pt_chain = is_pt_group(ctx)?;
    timed("pt", t);
    let t = Instant::now();
    let sq4t_chain = is_sq4t_group(ctx)?;
    timed("sq4t", t);
    let t = Instant::now();
    let zacher = if solvable { zacher_witness(ctx)? } else { None };
    timed("zacher", t);

    let flags = Flags {
        abelian,
        nilpotent,
        solvable,
        supersolvable,
        pt: pt_chain.is_none(),
        sq4t: sq4t_chain.is_none(),
    };
    assert!(
        !flags.abelian || flags.nilpotent,
        "{name}: abelian but not nilpotent"
    );
    assert!(
        !flags.nilpotent || flags.supersolvable,
        "{name}: nilpotent but not supersolvable"
    );
    assert!(
        !flags.supersolvable || flags.solvable,
        "{name}: supersolvable but not solvable"
    );

    let mut witnesses = vec![Witness {
        claim: format!(
            "derived series orders {:?}",
            series.iter().map(|h| h.order()).collect::<Vec<_>>()
        ),
        subgroups: series.iter().map(|h| h.one_based()).collect(),
        verdict: solvable,
    }];
    if let Some((k, h)) = pt_chain {
        witnesses.push(Witness {
            claim: "pt counterexample: K permutable in H, H permutable in G, K not permutable in G"
                .into(),
            subgroups: vec![l.get(k).one_based(), l.get(h).one_based()],
            verdict: false,
        });
    }
    if let Some((h, k)) = sq4t_chain {
        witnesses.push(Witness {
            claim: "sq4t counterexample: H sqn4 in K, K sqn4 in G, H not sqn4 in G".into(),
            subgroups: vec![l.get(h).one_based(), l.get(k).one_based()],
            verdict: false,
        });
    }
    if solvable {
        witnesses.push(match &zacher {
            Some(w) => Witness {
                claim: format!(
                    "zacher witness: L of order {} normal abelian odd-order Hall, G/L of order {} nilpotent and modular, power automorphisms on L",
                    w.order, w.checks.quotient_order
                ),
                subgroups: vec![l.get(w.subgroup).one_based()],
                verdict: true,
            },
            None => Witness {
                claim: "zacher witness: none".into(),
                subgroups: vec![],
                verdict: false,
            },
        });
    }

    Ok(ClassificationReport {
        group_name: name.to_string(),
        order: g.order(),
        num_subgroups: l.len(),
        flags,
        witnesses,
        elapsed_ms: timings.then_some(elapsed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn table(d: usize, gens: &[&str]) -> Arc<GroupTable> {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, d).unwrap())
            .collect();
        Arc::new(GroupTable::closure(&gens, 2000).unwrap())
    }

    fn ctx(d: usize, gens: &[&str]) -> GroupContext {
        GroupContext::new(table(d, gens), Limits::default()).unwrap()
    }

    const S3: (usize, &[&str]) = (3, &["(1 2)", "(1 2 3)"]);
    const A4: (usize, &[&str]) = (4, &["(1 2 3)", "(2 3 4)"]);
    const D8: (usize, &[&str]) = (4, &["(1 2 3 4)", "(2 4)"]);
    const D12: (usize, &[&str]) = (6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]);
    const V4: (usize, &[&str]) = (4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    const C6: (usize, &[&str]) = (5, &["(1 2)(3 4 5)"]);
    const C1: (usize, &[&str]) = (1, &["()"]);

    #[test]
    fn solvability() {
        assert!(is_solvable(&table(A4.0, A4.1)));
        assert!(is_solvable(&table(C1.0, C1.1)));
        assert!(!is_solvable(&table(5, &["(1 2 3)", "(1 2 3 4 5)"])));
    }

    #[test]
    fn supersolvability() {
        let limits = Limits::default();
        assert!(!is_supersolvable(&table(A4.0, A4.1), &limits).unwrap());
        assert!(is_supersolvable(&table(C6.0, C6.1), &limits).unwrap());
        assert!(is_supersolvable(&table(S3.0, S3.1), &limits).unwrap());
        assert!(is_supersolvable(&table(C1.0, C1.1), &limits).unwrap());
        // S4 is solvable but not supersolvable
        assert!(!is_supersolvable(&table(4, &["(1 2)", "(1 2 3 4)"]), &limits).unwrap());
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&table(V4.0, V4.1)));
        assert!(is_nilpotent(&table(C6.0, C6.1)));
        assert!(is_nilpotent(&table(D8.0, D8.1)));
        assert!(!is_nilpotent(&table(S3.0, S3.1)));
        assert!(!is_nilpotent(&table(A4.0, A4.1)));
    }

    #[test]
    fn nilpotent_iff_sylows_normal() {
        for (d, gens) in [S3, A4, D8, D12, V4, C6, C1] {
            let c = ctx(d, gens);
            let l = c.lattice();
            let all_normal = prime_divisors(c.table().order()).into_iter().all(|p| {
                l.sylow_subgroups(p)
                    .unwrap()
                    .into_iter()
                    .all(|i| l.is_normal(i))
            });
            assert_eq!(is_nilpotent(c.table()), all_normal);
        }
    }

    #[test]
    fn modularity() {
        assert!(is_modular_lattice(ctx(V4.0, V4.1).lattice()));
        assert!(is_modular_lattice(ctx(C6.0, C6.1).lattice()));
        assert!(!is_modular_lattice(ctx(A4.0, A4.1).lattice()));
        assert!(is_modular_lattice(ctx(S3.0, S3.1).lattice()));
    }

    #[test]
    fn transitivity_classes() {
        let d12 = ctx(D12.0, D12.1);
        assert_eq!(is_pt_group(&d12).unwrap(), None);
        let (h, k) = is_sq4t_group(&d12).unwrap().unwrap();
        assert_eq!(d12.subgroup(h).order(), 2);
        assert_eq!(d12.subgroup(k).order(), 6);

        let d8 = ctx(D8.0, D8.1);
        let (k, h) = is_pt_group(&d8).unwrap().unwrap();
        assert_eq!(d8.subgroup(k).order(), 2);
        assert_eq!(d8.subgroup(h).order(), 4);
        assert_eq!(is_sq4t_group(&d8).unwrap(), None);

        assert_eq!(is_sq4t_group(&ctx(A4.0, A4.1)).unwrap(), None);
        assert_eq!(is_sq4t_group(&ctx(C1.0, C1.1)).unwrap(), None);
        assert_eq!(is_pt_group(&ctx(C1.0, C1.1)).unwrap(), None);
    }

    #[test]
    fn zacher() {
        let d12 = ctx(D12.0, D12.1);
        let w = zacher_witness(&d12).unwrap().unwrap();
        assert_eq!(w.order, 3);
        assert_eq!(w.checks.quotient_order, 4);
        assert!(zacher_witness(&ctx(A4.0, A4.1)).unwrap().is_none());
        let c15 = ctx(8, &["(1 2 3)(4 5 6 7 8)"]);
        let w = zacher_witness(&c15).unwrap().unwrap();
        assert_eq!(w.subgroup, c15.lattice().whole_index());
    }

    #[test]
    fn reports() {
        let r = classify("A4", &ctx(A4.0, A4.1), false).unwrap();
        assert!(r.flags.solvable && !r.flags.supersolvable && r.flags.sq4t && !r.flags.pt);
        assert_eq!(r.num_subgroups, 10);
        assert!(r.elapsed_ms.is_none());

        let r = classify("C1", &ctx(C1.0, C1.1), true).unwrap();
        let f = r.flags;
        assert!(f.abelian && f.nilpotent && f.solvable && f.supersolvable && f.pt && f.sq4t);
        assert_eq!(r.elapsed_ms.unwrap().len(), 7);
    }
}
