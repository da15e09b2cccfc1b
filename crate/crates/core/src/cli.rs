//! Command-line front end. `run` renders to a string so tests can drive it
//! without spawning a process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{BuiltGroup, GroupSpec};
use crate::classify::classify;
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::group::{Limits, DEFAULT_LATTICE_CAP, DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER};
use crate::permutability::perm4;
use crate::report::{self, Format};
use crate::reproduce::verify_paper;
use crate::structure;
use crate::survey::run_survey;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "permcheck",
    version,
    about = "Permutability and 4-quasinormality in finite permutation groups"
)]
pub struct Cli {
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, env = "PERMCHECK_CAP", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order_cap: usize,
    /// Largest group order whose subgroup lattice will be built.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    pub lattice_cap: usize,
    /// Output format; `dot` applies to `lattice` only.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Worker threads for `survey` and `verify-paper`; defaults to one per core.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Reserved. Every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one group.
    Classify {
        #[arg(long)]
        group: String,
        /// Include wall-clock time per predicate (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Compare two subgroups given by generators.
    Check {
        #[arg(long)]
        group: String,
        /// Generators of H; repeat the flag or separate with `;`.
        #[arg(long = "h", required = true)]
        h: Vec<String>,
        /// Generators of K; repeat the flag or separate with `;`.
        #[arg(long = "k", required = true)]
        k: Vec<String>,
    },
    /// Export the subgroup lattice.
    Lattice {
        #[arg(long)]
        group: String,
    },
    /// Classify and audit every corpus group up to an order.
    Survey {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Run the fixed checklist of worked examples and property sweeps.
    VerifyPaper,
}

/// Rendered output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    if e.is_cap() {
        EXIT_CAP
    } else {
        EXIT_INPUT
    }
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order_cap,
            max_degree: DEFAULT_MAX_DEGREE,
            lattice_cap: self.lattice_cap,
        }
    }
}

fn build(name: &str, limits: &Limits) -> Result<(BuiltGroup, GroupContext)> {
    let built = GroupSpec::parse(name)?.build(limits)?;
    let ctx = GroupContext::new(built.table.clone(), *limits)?;
    Ok((built, ctx))
}

fn no_dot(format: Format, command: &str) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::parse(
            1,
            format!("--format dot is only available for `lattice`, not `{command}`"),
        ));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let limits = cli.limits();
    let format = cli.format;
    match &cli.command {
        Command::Classify { group, timings } => {
            no_dot(format, "classify")?;
            let (_, ctx) = build(group, &limits)?;
            let r = classify(group, &ctx, *timings)?;
            Ok(Outcome::ok(match format {
                Format::Json => report::to_json(&r),
                Format::Csv => report::classification_csv(&r),
                _ => report::classification_text(&r),
            }))
        }
        Command::Check { group, h, k } => {
            no_dot(format, "check")?;
            let (built, ctx) = build(group, &limits)?;
            let v = check(&built, &ctx, h, k)?;
            Ok(Outcome::ok(match format {
                Format::Json => report::to_json(&v),
                Format::Csv => v.csv(),
                _ => v.text(),
            }))
        }
        Command::Lattice { group } => {
            let (_, ctx) = build(group, &limits)?;
            let l = ctx.lattice();
            Ok(Outcome::ok(match format {
                Format::Json => report::to_json(&l.entries()),
                Format::Dot => l.to_dot(group),
                Format::Csv => report::lattice_csv(l),
                Format::Text => report::lattice_text(l),
            }))
        }
        Command::Survey { max_order, timings } => {
            no_dot(format, "survey")?;
            if *max_order == 0 {
                return Err(Error::parse(1, "--max-order must be at least 1"));
            }
            let s = run_survey(*max_order, &limits, cli.jobs, *timings);
            let stdout = match format {
                Format::Json => report::to_json(&s),
                Format::Csv => report::survey_csv(&s),
                _ => report::survey_text(&s),
            };
            let code = if s.violations() > 0 {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            Ok(Outcome { stdout, code })
        }
        Command::VerifyPaper => {
            no_dot(format, "verify-paper")?;
            let r = verify_paper(&limits, cli.jobs)?;
            let stdout = match format {
                Format::Json => report::to_json(&r),
                _ => {
                    let mut out = String::new();
                    for c in &r.checks {
                        let _ = writeln!(
                            out,
                            "{} {:<40} expected {:<30} actual {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.id,
                            c.expected,
                            c.actual
                        );
                    }
                    let _ = writeln!(
                        out,
                        "{} passed, {} failed",
                        r.summary.passed, r.summary.failed
                    );
                    out
                }
            };
            let code = if r.all_passed() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            };
            Ok(Outcome { stdout, code })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupInfo {
    pub generators: Vec<String>,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub group: String,
    #[serde(rename = "H")]
    pub h: SubgroupInfo,
    #[serde(rename = "K")]
    pub k: SubgroupInfo,
    pub perm4: bool,
    pub permutes: bool,
    pub join_order: usize,
    /// `|HKHK|`.
    pub product_order: usize,
    /// `|HK|`.
    pub hk_order: usize,
}

impl CheckVerdict {
    fn csv(&self) -> String {
        format!(
            "group,h_order,k_order,perm4,permutes,join_order,product_order,hk_order\n{},{},{},{},{},{},{},{}\n",
            self.group,
            self.h.order,
            self.k.order,
            self.perm4,
            self.permutes,
            self.join_order,
            self.product_order,
            self.hk_order
        )
    }

    fn text(&self) -> String {
        format!(
            "group          {}\nH              <{}> order {}\nK              <{}> order {}\nperm4          {}\npermutes       {}\njoin_order     {}\nproduct_order  {}\nhk_order       {}\n",
            self.group,
            self.h.generators.join(", "),
            self.h.order,
            self.k.generators.join(", "),
            self.k.order,
            self.perm4,
            self.permutes,
            self.join_order,
            self.product_order,
            self.hk_order
        )
    }
}

fn check(
    built: &BuiltGroup,
    ctx: &GroupContext,
    h: &[String],
    k: &[String],
) -> Result<CheckVerdict> {
    let g = ctx.table();
    let subgroup = |texts: &[String]| -> Result<_> {
        let mut elems = Vec::new();
        for t in texts {
            elems.extend(built.parse_elements(t)?);
        }
        let info = SubgroupInfo {
            generators: elems.iter().map(|&x| g.element(x).to_string()).collect(),
            order: 0,
        };
        Ok((structure::subgroup_from_generators(g, &elems), info))
    };
    let (hs, mut hi) = subgroup(h)?;
    let (ks, mut ki) = subgroup(k)?;
    hi.order = hs.order();
    ki.order = ks.order();
    let v = perm4(g, &hs, &ks);
    let hk = crate::permutability::product_set(g, &hs.as_elements(), &ks.as_elements())?;
    Ok(CheckVerdict {
        group: built.name.clone(),
        h: hi,
        k: ki,
        perm4: v.holds,
        permutes: crate::permutability::permutes(g, &hs, &ks),
        join_order: v.join.order(),
        product_order: v.product.len(),
        hk_order: hk.len(),
    })
}
