//! Classification and audit over the survey corpus.

use rayon::prelude::*;
use serde::Serialize;

use crate::audit::{audit_group, Audit};
use crate::catalog::{survey_corpus, GroupSpec};
use crate::classify::{classify, ClassificationReport};
use crate::context::GroupContext;
use crate::error::Result;
use crate::group::Limits;

#[derive(Debug, Clone, Serialize)]
pub struct RowError {
    pub group: String,
    pub error: String,
    #[serde(skip)]
    pub cap: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyResult {
    pub max_order: usize,
    pub rows: Vec<ClassificationReport>,
    pub errors: Vec<RowError>,
    pub audit: Audit,
}

impl SurveyResult {
    pub fn violations(&self) -> usize {
        self.audit.violations.len()
    }
}

/// Classifies and audits one group.
pub fn survey_group(
    spec: &GroupSpec,
    limits: &Limits,
    timings: bool,
) -> Result<(ClassificationReport, Audit)> {
    let built = spec.build(limits)?;
    let ctx = GroupContext::new(built.table, *limits)?;
    let report = classify(&spec.name, &ctx, timings)?;
    let audit = audit_group(&spec.name, &ctx)?;
    Ok((report, audit))
}

/// Runs the survey over `specs`. With `jobs = Some(n)` at most `n` worker
/// threads are used; otherwise one per core. Row order follows `specs`.
pub fn run_specs(
    specs: &[GroupSpec],
    max_order: usize,
    limits: &Limits,
    jobs: Option<usize>,
    timings: bool,
) -> SurveyResult {
    let work = || -> Vec<(String, Result<(ClassificationReport, Audit)>)> {
        specs
            .par_iter()
            .map(|spec| (spec.name.clone(), survey_group(spec, limits, timings)))
            .collect()
    };
    let outcomes = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };

    let mut result = SurveyResult {
        max_order,
        rows: Vec::new(),
        errors: Vec::new(),
        audit: Audit::default(),
    };
    for (name, outcome) in outcomes {
        match outcome {
            Ok((report, audit)) => {
                result.rows.push(report);
                result.audit.merge(audit);
            }
            Err(e) => result.errors.push(RowError {
                group: name,
                cap: e.is_cap(),
                error: e.to_string(),
            }),
        }
    }
    result
}

pub fn run_survey(
    max_order: usize,
    limits: &Limits,
    jobs: Option<usize>,
    timings: bool,
) -> SurveyResult {
    run_specs(&survey_corpus(max_order), max_order, limits, jobs, timings)
}
