//! Exhaustive property sweeps over one group.
//!
//! Each property is checked for every relevant subgroup, pair or chain of
//! the group's lattice. Violations are collected, never swallowed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{is_solvable, is_sq4t_group};
use crate::context::GroupContext;
use crate::error::Result;
use crate::permutability::hkhk;
use crate::structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Every subgroup order divides the group order.
    Lagrange,
    /// `|HK| = |H||K| / |H ∩ K|`.
    ProductFormula,
    /// `HKHK ⊆ ⟨H, K⟩`.
    ProductInJoin,
    /// `[H, K]` is normal in `⟨H, K⟩`.
    CommutatorNormalInJoin,
    /// `[H, K] = [K, H]`.
    CommutatorSymmetric,
    /// `[H, K] ≤ K` iff `H` normalizes `K`.
    NormalizesIffCommutatorInside,
    /// `HK = KH` implies `HKHK = ⟨H, K⟩`.
    PermutesImpliesPerm4,
    /// Permutable subgroups are sqn4.
    PermutableImpliesSqn4,
    /// Permutable subgroups are subnormal.
    PermutableImpliesSubnormal,
    /// sqn4 subgroups are qn4.
    Sqn4ImpliesQn4,
    /// `H` sqn4 in `G` and `H ≤ K` implies `H` sqn4 in `K`.
    Sqn4RestrictsToIntermediate,
    /// `H` sqn4 in `G` and `N ⊴ G`, `N ≤ H` implies `H/N` sqn4 in `G/N`.
    Sqn4PassesToQuotient,
    /// Sq4T groups are solvable.
    Sq4tImpliesSolvable,
    /// Subgroups of Sq4T groups are Sq4T.
    Sq4tSubgroupClosed,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::Lagrange,
        Property::ProductFormula,
        Property::ProductInJoin,
        Property::CommutatorNormalInJoin,
        Property::CommutatorSymmetric,
        Property::NormalizesIffCommutatorInside,
        Property::PermutesImpliesPerm4,
        Property::PermutableImpliesSqn4,
        Property::PermutableImpliesSubnormal,
        Property::Sqn4ImpliesQn4,
        Property::Sqn4RestrictsToIntermediate,
        Property::Sqn4PassesToQuotient,
        Property::Sq4tImpliesSolvable,
        Property::Sq4tSubgroupClosed,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::Lagrange => "lagrange",
            Property::ProductFormula => "product-formula",
            Property::ProductInJoin => "product-in-join",
            Property::CommutatorNormalInJoin => "commutator-normal-in-join",
            Property::CommutatorSymmetric => "commutator-symmetric",
            Property::NormalizesIffCommutatorInside => "normalizes-iff-commutator-inside",
            Property::PermutesImpliesPerm4 => "permutes-implies-perm4",
            Property::PermutableImpliesSqn4 => "permutable-implies-sqn4",
            Property::PermutableImpliesSubnormal => "permutable-implies-subnormal",
            Property::Sqn4ImpliesQn4 => "sqn4-implies-qn4",
            Property::Sqn4RestrictsToIntermediate => "sqn4-restricts-to-intermediate",
            Property::Sqn4PassesToQuotient => "sqn4-passes-to-quotient",
            Property::Sq4tImpliesSolvable => "sq4t-implies-solvable",
            Property::Sq4tSubgroupClosed => "sq4t-subgroup-closed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: Property,
    pub group: String,
    pub detail: String,
}

/// Instances checked per property, and every violation found.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub checked: BTreeMap<Property, u64>,
    pub violations: Vec<Violation>,
}

impl Audit {
    fn record(
        &mut self,
        group: &str,
        property: Property,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        *self.checked.entry(property).or_default() += 1;
        if !ok {
            self.violations.push(Violation {
                property,
                group: group.to_string(),
                detail: detail(),
            });
        }
    }

    pub fn merge(&mut self, other: Audit) {
        for (p, n) in other.checked {
            *self.checked.entry(p).or_default() += n;
        }
        self.violations.extend(other.violations);
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations_of(&self, property: Property) -> usize {
        self.violations
            .iter()
            .filter(|v| v.property == property)
            .count()
    }
}

/// Runs every property sweep on one group.
pub fn audit_group(name: &str, ctx: &GroupContext) -> Result<Audit> {
    let mut audit = Audit::default();
    let g = ctx.table();
    let l = ctx.lattice();
    let sweep = ctx.sweep();
    let n = l.len();
    let label = |i: usize| format!("#{i} (order {})", l.get(i).order());

    for i in 0..n {
        audit.record(
            name,
            Property::Lagrange,
            g.order().is_multiple_of(l.get(i).order()),
            || label(i),
        );
    }

    for i in 0..n {
        let h = l.get(i);
        for j in 0..n {
            let k = l.get(j);
            let hk = crate::permutability::product_set(g, &h.as_elements(), &k.as_elements())?;
            let meet = l.get(l.meet(i, j)).order();
            audit.record(
                name,
                Property::ProductFormula,
                hk.len() * meet == h.order() * k.order(),
                || format!("H={} K={}: |HK|={}", label(i), label(j), hk.len()),
            );

            let join = l.get(l.join(i, j));
            let product = hkhk(g, h, k);
            let inside = product.members().is_subset(join.members());
            let eq_matches = (product.members() == join.members()) == sweep.perm4(i, j);
            audit.record(name, Property::ProductInJoin, inside && eq_matches, || {
                format!("H={} K={}", label(i), label(j))
            });

            let hk_comm = structure::commutator_subgroup(g, h, k);
            audit.record(
                name,
                Property::CommutatorNormalInJoin,
                hk_comm.is_subgroup_of(join) && structure::is_normal_in(g, &hk_comm, join),
                || format!("H={} K={}", label(i), label(j)),
            );
            let kh_comm = structure::commutator_subgroup(g, k, h);
            audit.record(
                name,
                Property::CommutatorSymmetric,
                hk_comm == kh_comm,
                || format!("H={} K={}", label(i), label(j)),
            );
            let normalizes = h.iter().all(|x| structure::conjugate(g, k, x) == *k);
            audit.record(
                name,
                Property::NormalizesIffCommutatorInside,
                hk_comm.is_subgroup_of(k) == normalizes,
                || format!("H={} K={}", label(i), label(j)),
            );

            if sweep.permutes(i, j) {
                audit.record(
                    name,
                    Property::PermutesImpliesPerm4,
                    sweep.perm4(i, j),
                    || format!("H={} K={}", label(i), label(j)),
                );
            }
        }
    }

    for i in 0..n {
        if sweep.is_permutable(i) {
            audit.record(
                name,
                Property::PermutableImpliesSqn4,
                sweep.is_sqn4(i),
                || label(i),
            );
            audit.record(
                name,
                Property::PermutableImpliesSubnormal,
                structure::is_subnormal(g, l.get(i)),
                || label(i),
            );
        }
        if sweep.is_sqn4(i) {
            audit.record(name, Property::Sqn4ImpliesQn4, sweep.is_qn4(i), || label(i));
        }
    }

    let sqn4 = sweep.sqn4_indices();
    for &h in &sqn4 {
        for k in 0..n {
            if l.get(h).is_subgroup_of(l.get(k)) {
                let ok = ctx.sqn4_in(h, k)?;
                audit.record(name, Property::Sqn4RestrictsToIntermediate, ok, || {
                    format!("H={} K={}", label(h), label(k))
                });
            }
        }
    }

    for normal in l.normal_indices().collect::<Vec<_>>() {
        let above: Vec<usize> = sqn4
            .iter()
            .copied()
            .filter(|&h| l.get(normal).is_subgroup_of(l.get(h)))
            .collect();
        if above.is_empty() {
            continue;
        }
        let q = ctx.quotient(normal)?;
        let ql = q.context.lattice();
        for h in above {
            let image = q.map.image(l.get(h));
            let idx = ql
                .index_of_subgroup(&image)
                .expect("image is a subgroup of the quotient");
            audit.record(
                name,
                Property::Sqn4PassesToQuotient,
                q.context.sweep().is_sqn4(idx),
                || format!("H={} N={}", label(h), label(normal)),
            );
        }
    }

    let sq4t = is_sq4t_group(ctx)?.is_none();
    if sq4t {
        audit.record(name, Property::Sq4tImpliesSolvable, is_solvable(g), || {
            format!("{name} is Sq4T of order {} but not solvable", g.order())
        });
        for i in 0..n {
            let child = ctx.child(i)?;
            let chain = is_sq4t_group(&child.context)?;
            audit.record(name, Property::Sq4tSubgroupClosed, chain.is_none(), || {
                let (a, b) = chain.unwrap();
                format!(
                    "subgroup {} is not Sq4T: chain of orders {} <= {}",
                    label(i),
                    child.context.subgroup(a).order(),
                    child.context.subgroup(b).order()
                )
            });
        }
    }

    Ok(audit)
}
