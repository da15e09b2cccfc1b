//! Fixed checklist reproducing the worked examples, plus property sweeps.

use std::fmt::Display;

use serde::Serialize;

use crate::audit::Property;
use crate::catalog::{BuiltGroup, GroupSpec};
use crate::classify::{is_pt_group, is_solvable, is_sq4t_group, is_supersolvable, zacher_witness};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::group::Limits;
use crate::permutability::{hkhk, perm4};
use crate::structure;
use crate::survey::run_survey;

/// Largest order swept by the property checks.
pub const SWEEP_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyPaperResult {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyPaperResult {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Default)]
struct Checklist {
    checks: Vec<Check>,
}

impl Checklist {
    fn expect(&mut self, id: &str, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.checks.push(Check {
            id: id.into(),
            expected,
            actual,
            pass,
        });
    }

    fn finish(self) -> VerifyPaperResult {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let failed = self.checks.len() - passed;
        VerifyPaperResult {
            checks: self.checks,
            summary: Summary { passed, failed },
        }
    }
}

struct Example {
    built: BuiltGroup,
    ctx: GroupContext,
}

impl Example {
    fn new(name: &str, limits: &Limits) -> Result<Example> {
        let built = GroupSpec::parse(name)?.build(limits)?;
        let ctx = GroupContext::new(built.table.clone(), *limits)?;
        Ok(Example { built, ctx })
    }

    /// Lattice index of the subgroup generated by `;`-separated elements.
    fn sub(&self, gens: &str) -> Result<usize> {
        let elems = self.built.parse_elements(gens)?;
        let h = structure::subgroup_from_generators(self.ctx.table(), &elems);
        self.ctx
            .lattice()
            .index_of_subgroup(&h)
            .ok_or(Error::NotSubgroup)
    }

    fn count(&self, pred: impl Fn(usize) -> bool) -> String {
        let n = self.ctx.lattice().len();
        format!("{}/{}", (0..n).filter(|&i| pred(i)).count(), n)
    }
}

fn all_of(n: usize) -> String {
    format!("{n}/{n}")
}

/// Runs every check. Only construction errors are returned; mismatches are
/// recorded as failing checks.
pub fn verify_paper(limits: &Limits, jobs: Option<usize>) -> Result<VerifyPaperResult> {
    let mut list = Checklist::default();
    s3(&mut list, limits)?;
    d12(&mut list, limits)?;
    d8(&mut list, limits)?;
    a5(&mut list, limits)?;
    a4(&mut list, limits)?;
    sweeps(&mut list, limits, jobs);
    Ok(list.finish())
}

fn s3(list: &mut Checklist, limits: &Limits) -> Result<()> {
    let ex = Example::new("S3", limits)?;
    let (g, l, sweep) = (ex.ctx.table(), ex.ctx.lattice(), ex.ctx.sweep());
    let h = ex.sub("(1 2)")?;
    let k = ex.sub("(1 3)")?;
    let v = perm4(g, l.get(h), l.get(k));
    list.expect("e1-permutes-HK", false, sweep.permutes(h, k));
    list.expect("e1-perm4-HK", true, v.holds);
    list.expect(
        "e1-join-product-orders",
        "6/6",
        format!("{}/{}", v.join.order(), v.product.len()),
    );
    list.expect("e1-sqn4-S3", all_of(6), ex.count(|i| sweep.is_sqn4(i)));
    list.expect("e1-qn4-S3", all_of(6), ex.count(|i| sweep.is_qn4(i)));
    Ok(())
}

fn d12(list: &mut Checklist, limits: &Limits) -> Result<()> {
    let ex = Example::new("D12", limits)?;
    let (g, l, sweep) = (ex.ctx.table(), ex.ctx.lattice(), ex.ctx.sweep());
    let r = ex.built.generator("r").expect("dihedral r");
    let s = ex.built.generator("s").expect("dihedral s");
    list.expect("e2-relation", true, g.conj(r, s) == g.pow(r, 5));

    list.expect("e2-pt-direct", true, is_pt_group(&ex.ctx)?.is_none());
    let witness = zacher_witness(&ex.ctx)?;
    list.expect(
        "e2-zacher-witness",
        "L of order 3, G/L of order 4",
        match &witness {
            Some(w) => format!(
                "L of order {}, G/L of order {}",
                w.order, w.checks.quotient_order
            ),
            None => "none".into(),
        },
    );
    let big_l = ex.sub("r^2")?;
    list.expect(
        "e2-zacher-l-is-r2",
        true,
        witness.is_some_and(|w| w.subgroup == big_l),
    );

    let h = ex.sub("r^2; s")?;
    let k = ex.sub("s")?;
    let m = ex.sub("s r")?;
    list.expect("e2-h-sqn4", true, sweep.is_sqn4(h));
    list.expect("e2-k-sqn4-in-h", true, ex.ctx.sqn4_in(k, h)?);
    list.expect("e2-k-not-sqn4", false, sweep.is_sqn4(k));
    list.expect("e2-kmkm-size", 8, hkhk(g, l.get(k), l.get(m)).len());
    list.expect("e2-km-join-order", 12, l.get(l.join(k, m)).order());
    list.expect("e2-sq4t", false, is_sq4t_group(&ex.ctx)?.is_none());
    Ok(())
}

fn d8(list: &mut Checklist, limits: &Limits) -> Result<()> {
    let ex = Example::new("D8", limits)?;
    let sweep = ex.ctx.sweep();
    let s = ex.sub("s")?;
    let klein = ex.sub("r^2; s")?;
    list.expect("ex2-s-perm-in-klein", true, ex.ctx.permutable_in(s, klein)?);
    list.expect("ex2-klein-perm-in-g", true, sweep.is_permutable(klein));
    list.expect("ex2-s-not-perm-in-g", false, sweep.is_permutable(s));
    list.expect("ex2-all-sqn4", all_of(10), ex.count(|i| sweep.is_sqn4(i)));
    list.expect("ex2-sq4t", true, is_sq4t_group(&ex.ctx)?.is_none());
    list.expect("ex2-pt", false, is_pt_group(&ex.ctx)?.is_none());
    Ok(())
}

fn a5(list: &mut Checklist, limits: &Limits) -> Result<()> {
    let ex = Example::new("A5", limits)?;
    let l = ex.ctx.lattice();
    list.expect("ex3-a5-subgroups", 59, l.len());
    let permutable = ex.ctx.sweep().permutable_indices();
    let actual = if permutable == [l.trivial_index(), l.whole_index()] {
        "{1, A5}".to_string()
    } else {
        let orders: Vec<_> = permutable.iter().map(|&i| l.get(i).order()).collect();
        format!("orders {orders:?}")
    };
    list.expect("ex3-a5-permutables", "{1, A5}", actual);
    list.expect("ex3-a5-pt", true, is_pt_group(&ex.ctx)?.is_none());
    list.expect("ex3-a5-solvable", false, is_solvable(ex.ctx.table()));
    list.expect("ex3-a5-sq4t", false, is_sq4t_group(&ex.ctx)?.is_none());
    Ok(())
}

fn a4(list: &mut Checklist, limits: &Limits) -> Result<()> {
    let ex = Example::new("A4", limits)?;
    let (g, l, sweep) = (ex.ctx.table(), ex.ctx.lattice(), ex.ctx.sweep());
    let w1: Vec<usize> = l.normal_indices().collect();
    let w2: Vec<usize> = (0..l.len()).filter(|&i| l.get(i).order() == 2).collect();
    let w3: Vec<usize> = (0..l.len()).filter(|&i| l.get(i).order() == 3).collect();
    let covered = w1.len() + w2.len() + w3.len() == l.len();
    list.expect(
        "ex4-partition",
        "3/3/4 of 10",
        format!(
            "{}/{}/{} of {}{}",
            w1.len(),
            w2.len(),
            w3.len(),
            l.len(),
            if covered { "" } else { " (overlap)" }
        ),
    );

    let p = ex.sub("(1 2)(3 4); (1 3)(2 4)")?;
    let pairs = |set: &[usize]| -> Vec<(usize, usize)> {
        set.iter()
            .flat_map(|&a| set.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
            .collect()
    };
    let h_comms: Vec<_> = pairs(&w2)
        .into_iter()
        .map(|(a, b)| structure::commutator_subgroup(g, l.get(a), l.get(b)))
        .collect();
    list.expect(
        "ex4-commutator-h1h2",
        "1",
        if h_comms.iter().all(|c| c.is_trivial()) {
            "1".to_string()
        } else {
            "nontrivial".into()
        },
    );
    let k_comms: Vec<_> = pairs(&w3)
        .into_iter()
        .map(|(a, b)| structure::commutator_subgroup(g, l.get(a), l.get(b)))
        .collect();
    list.expect(
        "ex4-commutator-k1k2",
        "P",
        if k_comms.iter().all(|c| c == l.get(p)) {
            "P".to_string()
        } else {
            "not P".into()
        },
    );
    list.expect("ex4-all-sqn4", all_of(10), ex.count(|i| sweep.is_sqn4(i)));
    list.expect("ex4-sq4t", true, is_sq4t_group(&ex.ctx)?.is_none());
    list.expect("ex4-supersolvable", false, is_supersolvable(g, limits)?);
    list.expect("ex4-solvable", true, is_solvable(g));
    Ok(())
}

fn sweeps(list: &mut Checklist, limits: &Limits, jobs: Option<usize>) {
    let survey = run_survey(SWEEP_MAX_ORDER, limits, jobs, false);
    list.expect(
        "sweep-groups-built",
        "0 errors",
        format!("{} errors", survey.errors.len()),
    );
    for p in Property::ALL {
        list.expect(
            &format!("sweep-{}", p.id()),
            "0 violations",
            format!("{} violations", survey.audit.violations_of(p)),
        );
    }
}
