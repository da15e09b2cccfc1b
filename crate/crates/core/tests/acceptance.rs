//! One line per acceptance criterion, then a single assertion over all of
//! them. Lines go straight to stderr so they show without `--nocapture`.

mod common;

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use permcheck::audit::Property;
use permcheck::catalog::{survey_corpus, BuiltGroup};
use permcheck::classify::{
    is_pt_group, is_solvable, is_sq4t_group, is_supersolvable, zacher_witness,
};
use permcheck::permutability::perm4;
use permcheck::structure::{commutator_subgroup, subgroup_from_generators};
use permcheck::survey::{run_specs, run_survey};
use permcheck::{GroupContext, GroupSpec, Lattice, Limits};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn group(name: &str) -> (BuiltGroup, GroupContext) {
    let limits = Limits::default();
    let built = GroupSpec::parse(name).unwrap().build(&limits).unwrap();
    let ctx = GroupContext::new(built.table.clone(), limits).unwrap();
    (built, ctx)
}

fn sub(built: &BuiltGroup, ctx: &GroupContext, gens: &str) -> usize {
    let elems = built.parse_elements(gens).unwrap();
    let h = subgroup_from_generators(ctx.table(), &elems);
    ctx.lattice().index_of_subgroup(&h).unwrap()
}

fn example_s3() -> Outcome {
    let (b, ctx) = group("S3");
    let (g, l, sweep) = (ctx.table(), ctx.lattice(), ctx.sweep());
    let h = sub(&b, &ctx, "(1 2)");
    let k = sub(&b, &ctx, "(1 3)");
    let v = perm4(g, l.get(h), l.get(k));
    let all_sqn4 = (0..l.len()).all(|i| sweep.is_sqn4(i));
    let pass =
        !sweep.permutes(h, k) && v.holds && v.join.order() == 6 && v.product.len() == 6 && all_sqn4;
    outcome(
        pass,
        format!(
            "permutes={} perm4={} |join|={} |HKHK|={} all sqn4={all_sqn4}",
            sweep.permutes(h, k),
            v.holds,
            v.join.order(),
            v.product.len()
        ),
    )
}

fn example_d12() -> Outcome {
    let (b, ctx) = group("D12");
    let (g, l, sweep) = (ctx.table(), ctx.lattice(), ctx.sweep());
    let pt = is_pt_group(&ctx).unwrap().is_none();
    let zacher = zacher_witness(&ctx).unwrap().map(|w| w.order);
    let h = sub(&b, &ctx, "r^2; s");
    let k = sub(&b, &ctx, "s");
    let m = sub(&b, &ctx, "s r");
    let kmkm = perm4(g, l.get(k), l.get(m)).product.len();
    let chain = is_sq4t_group(&ctx).unwrap();
    let chain_valid = chain
        .is_some_and(|(x, y)| ctx.sqn4_in(x, y).unwrap() && sweep.is_sqn4(y) && !sweep.is_sqn4(x));
    let pass = pt && zacher == Some(3) && sweep.is_sqn4(h) && kmkm == 8 && chain_valid;
    outcome(
        pass,
        format!(
            "pt={pt} zacher L order={zacher:?} H sqn4={} |KMKM|={kmkm} sq4t chain={:?}",
            sweep.is_sqn4(h),
            chain.map(|(x, y)| (l.get(x).order(), l.get(y).order()))
        ),
    )
}

fn example_d8() -> Outcome {
    let (b, ctx) = group("D8");
    let sweep = ctx.sweep();
    let s = sub(&b, &ctx, "s");
    let klein = sub(&b, &ctx, "r^2; s");
    let s_in_klein = ctx.permutable_in(s, klein).unwrap();
    let klein_in_g = sweep.is_permutable(klein);
    let s_in_g = sweep.is_permutable(s);
    let all_sqn4 = (0..ctx.lattice().len()).all(|i| sweep.is_sqn4(i));
    let sq4t = is_sq4t_group(&ctx).unwrap().is_none();
    let pt = is_pt_group(&ctx).unwrap().is_none();
    let pass = s_in_klein && klein_in_g && !s_in_g && all_sqn4 && sq4t && !pt;
    outcome(
        pass,
        format!("<s> perm in <r2,s>={s_in_klein} <r2,s> perm in G={klein_in_g} <s> perm in G={s_in_g} all sqn4={all_sqn4} sq4t={sq4t} pt={pt}"),
    )
}

fn example_a4() -> Outcome {
    let (b, ctx) = group("A4");
    let (g, l) = (ctx.table(), ctx.lattice());
    let w1: Vec<usize> = l.normal_indices().collect();
    let w2: Vec<usize> = (0..l.len()).filter(|&i| l.get(i).order() == 2).collect();
    let w3: Vec<usize> = (0..l.len()).filter(|&i| l.get(i).order() == 3).collect();
    let p = sub(&b, &ctx, "(1 2)(3 4); (1 3)(2 4)");
    let distinct_pairs = |set: &[usize]| {
        set.iter()
            .flat_map(|&x| set.iter().filter(move |&&y| y != x).map(move |&y| (x, y)))
            .collect::<Vec<_>>()
    };
    let k_ok = distinct_pairs(&w3)
        .into_iter()
        .all(|(x, y)| commutator_subgroup(g, l.get(x), l.get(y)) == *l.get(p));
    let h_ok = distinct_pairs(&w2)
        .into_iter()
        .all(|(x, y)| commutator_subgroup(g, l.get(x), l.get(y)).is_trivial());
    let sq4t = is_sq4t_group(&ctx).unwrap().is_none();
    let ss = is_supersolvable(g, &Limits::default()).unwrap();
    let solvable = is_solvable(g);
    let partition = (w1.len(), w2.len(), w3.len());
    let pass = l.len() == 10 && partition == (3, 3, 4) && k_ok && h_ok && sq4t && !ss && solvable;
    outcome(
        pass,
        format!("{} subgroups, W1/W2/W3={partition:?} [K1,K2]=P:{k_ok} [H1,H2]=1:{h_ok} sq4t={sq4t} supersolvable={ss} solvable={solvable}", l.len()),
    )
}

fn example_a5() -> Outcome {
    let (_, ctx) = group("A5");
    let l = ctx.lattice();
    let naive = common_a5_count();
    let permutable = ctx.sweep().permutable_indices();
    let perm_ok = permutable == [l.trivial_index(), l.whole_index()];
    let pt = is_pt_group(&ctx).unwrap().is_none();
    let solvable = is_solvable(ctx.table());
    let sq4t = is_sq4t_group(&ctx).unwrap().is_none();
    let pass = l.len() == 59 && naive == 59 && perm_ok && pt && !solvable && !sq4t;
    outcome(
        pass,
        format!("{} subgroups (oracle {naive}) permutables={{1,A5}}:{perm_ok} pt={pt} solvable={solvable} sq4t={sq4t}", l.len()),
    )
}

/// Joins of cyclic subgroups of A5 over raw permutations.
fn common_a5_count() -> usize {
    use std::collections::BTreeSet;
    let g = common::table("A5");
    let cyclic: BTreeSet<_> = g
        .elements()
        .iter()
        .map(|x| common::naive_closure(std::slice::from_ref(x), g.degree()))
        .collect();
    let mut all = cyclic.clone();
    let mut frontier: Vec<_> = all.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            let gens: Vec<_> = h.iter().chain(c.iter()).cloned().collect();
            let j = common::naive_closure(&gens, g.degree());
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    all.len()
}

const SUITE: [Property; 12] = [
    Property::Lagrange,
    Property::ProductFormula,
    Property::ProductInJoin,
    Property::CommutatorNormalInJoin,
    Property::CommutatorSymmetric,
    Property::NormalizesIffCommutatorInside,
    Property::PermutesImpliesPerm4,
    Property::PermutableImpliesSqn4,
    Property::PermutableImpliesSubnormal,
    Property::Sqn4RestrictsToIntermediate,
    Property::Sqn4PassesToQuotient,
    Property::Sq4tImpliesSolvable,
];

fn property_suites() -> Outcome {
    let s = run_survey(24, &Limits::default(), None, false);
    let bad: usize = SUITE.iter().map(|&p| s.audit.violations_of(p)).sum();
    let missing: Vec<_> = SUITE
        .iter()
        .filter(|p| !s.audit.checked.contains_key(p))
        .map(|p| p.id())
        .collect();
    let checks: u64 = SUITE.iter().filter_map(|p| s.audit.checked.get(p)).sum();
    let pass = bad == 0 && missing.is_empty() && s.errors.is_empty();
    outcome(
        pass,
        format!("{} groups, {checks} checks, {bad} violations, {} build errors, unexercised {missing:?}", s.rows.len(), s.errors.len()),
    )
}

fn sq4t_subgroup_closed() -> Outcome {
    let s = run_specs(&survey_corpus(24), 24, &Limits::default(), None, false);
    let p = Property::Sq4tSubgroupClosed;
    let checked = s.audit.checked.get(&p).copied().unwrap_or(0);
    let bad: Vec<_> = s
        .audit
        .violations
        .iter()
        .filter(|v| v.property == p)
        .collect();
    let sq4t_groups = s.rows.iter().filter(|r| r.flags.sq4t).count();
    outcome(
        bad.is_empty() && checked > 0,
        format!("{sq4t_groups} Sq4T groups, {checked} subgroups checked, violations {bad:?}"),
    )
}

fn power_set_oracle() -> Outcome {
    let mut groups = 0;
    let mut mismatched = Vec::new();
    for spec in survey_corpus(16) {
        let g = spec.build(&Limits::default()).unwrap().table;
        let l = Lattice::build(g.clone(), &Limits::default()).unwrap();
        let engine: std::collections::BTreeSet<u32> = l
            .subgroups()
            .iter()
            .map(|h| h.iter().fold(0u32, |m, i| m | 1 << i))
            .collect();
        if engine != common::power_set_subgroups(&g) || engine.len() != l.len() {
            mismatched.push(spec.name.clone());
        }
        groups += 1;
    }
    outcome(
        mismatched.is_empty(),
        format!("{groups} groups, mismatches {mismatched:?}"),
    )
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_permcheck"))
            .args(["survey", "--max-order", "24", "--format", "json"])
            .env_remove("PERMCHECK_CAP")
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout;
    let ok = a.status.success() && b.status.success() && !a.stdout.is_empty();
    outcome(
        same && ok,
        format!(
            "{} bytes, identical={same}, exit {:?}",
            a.stdout.len(),
            a.status.code()
        ),
    )
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let second = Duration::from_secs(1);
    let criteria: [Criterion; 9] = [
        ("1 S3 worked example", example_s3, second),
        ("2 D12 worked example", example_d12, second),
        ("3 D8 worked example", example_d8, second),
        ("4 A4 worked example", example_a4, second),
        ("5 A5 worked example", example_a5, Duration::from_secs(60)),
        (
            "6 property suites to order 24",
            property_suites,
            Duration::from_secs(120),
        ),
        (
            "7 Sq4T closed under subgroups",
            sq4t_subgroup_closed,
            Duration::from_secs(120),
        ),
        (
            "8 power-set lattice oracle",
            power_set_oracle,
            Duration::from_secs(120),
        ),
        (
            "9 survey output deterministic",
            determinism,
            Duration::from_secs(120),
        ),
    ];
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = o.pass && in_time;
        let line = format!(
            "{} criterion {name}: {} [{:.3}s of {}s]\n",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        std::io::stderr().write_all(line.as_bytes()).unwrap();
        if !pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
