//! Rendering of reports as JSON, CSV or plain text.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::ClassificationReport;
use crate::lattice::Lattice;
use crate::survey::SurveyResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

const FLAG_COLUMNS: [&str; 6] = [
    "abelian",
    "nilpotent",
    "solvable",
    "supersolvable",
    "pt",
    "sq4t",
];

fn flag_values(r: &ClassificationReport) -> [bool; 6] {
    let f = r.flags;
    [
        f.abelian,
        f.nilpotent,
        f.solvable,
        f.supersolvable,
        f.pt,
        f.sq4t,
    ]
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn csv_header() -> Vec<&'static str> {
    let mut h = vec!["group", "order", "num_subgroups"];
    h.extend(FLAG_COLUMNS);
    h
}

fn csv_row(r: &ClassificationReport) -> Vec<String> {
    let mut row = vec![
        r.group_name.clone(),
        r.order.to_string(),
        r.num_subgroups.to_string(),
    ];
    row.extend(flag_values(r).iter().map(|b| b.to_string()));
    row
}

pub fn classification_csv(r: &ClassificationReport) -> String {
    let mut w = csv_writer();
    w.write_record(csv_header()).unwrap();
    w.write_record(csv_row(r)).unwrap();
    csv_finish(w)
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group          {}", r.group_name);
    let _ = writeln!(out, "order          {}", r.order);
    let _ = writeln!(out, "subgroups      {}", r.num_subgroups);
    for (name, value) in FLAG_COLUMNS.iter().zip(flag_values(r)) {
        let _ = writeln!(out, "{name:<14} {value}");
    }
    for w in &r.witnesses {
        let _ = writeln!(
            out,
            "- {} [{}]",
            w.claim,
            if w.verdict { "holds" } else { "fails" }
        );
        for s in &w.subgroups {
            let _ = writeln!(out, "    order {:>4}: {:?}", s.len(), s);
        }
    }
    if let Some(times) = &r.elapsed_ms {
        for (k, v) in times {
            let _ = writeln!(out, "time {k:<14} {v:.3} ms");
        }
    }
    out
}

pub fn survey_csv(s: &SurveyResult) -> String {
    let mut w = csv_writer();
    let mut header = csv_header();
    header.push("error");
    w.write_record(&header).unwrap();
    for r in &s.rows {
        let mut row = csv_row(r);
        row.push(String::new());
        w.write_record(&row).unwrap();
    }
    for e in &s.errors {
        let mut row = vec![e.group.clone()];
        row.extend(std::iter::repeat_n(String::new(), header.len() - 2));
        row.push(e.error.clone());
        w.write_record(&row).unwrap();
    }
    let mut out = csv_finish(w);
    out.push_str(&audit_lines(s, "# "));
    out
}

pub fn survey_text(s: &SurveyResult) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<16} {:>5} {:>5}  {}",
        "group",
        "order",
        "subs",
        FLAG_COLUMNS
            .map(|c| format!("{c:<13}"))
            .join(" ")
            .trim_end()
    );
    for r in &s.rows {
        let flags = flag_values(r).map(|b| format!("{:<13}", if b { "yes" } else { "no" }));
        let _ = writeln!(
            out,
            "{:<16} {:>5} {:>5}  {}",
            r.group_name,
            r.order,
            r.num_subgroups,
            flags.join(" ").trim_end()
        );
    }
    for e in &s.errors {
        let _ = writeln!(out, "{:<16} error: {}", e.group, e.error);
    }
    out.push('\n');
    out.push_str(&audit_lines(s, ""));
    out
}

fn audit_lines(s: &SurveyResult, prefix: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{prefix}audit: {} groups, {} checks, {} violations",
        s.rows.len(),
        s.audit.checked.values().sum::<u64>(),
        s.audit.violations.len()
    );
    for (p, n) in &s.audit.checked {
        let bad = s.audit.violations_of(*p);
        let _ = writeln!(
            out,
            "{prefix}  {:<34} {:>9} checked {:>4} violations",
            p.id(),
            n,
            bad
        );
    }
    for v in &s.audit.violations {
        let _ = writeln!(
            out,
            "{prefix}VIOLATION {} in {}: {}",
            v.property.id(),
            v.group,
            v.detail
        );
    }
    out
}

pub fn lattice_csv(l: &Lattice) -> String {
    let mut w = csv_writer();
    w.write_record(["index", "order", "normal", "cyclic", "members"])
        .unwrap();
    for (i, e) in l.entries().into_iter().enumerate() {
        let members = e
            .members
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        w.write_record([
            i.to_string(),
            e.order.to_string(),
            e.normal.to_string(),
            l.is_cyclic(i).to_string(),
            members,
        ])
        .unwrap();
    }
    csv_finish(w)
}

pub fn lattice_text(l: &Lattice) -> String {
    let mut out = String::new();
    let g = l.group();
    for (i, h) in l.subgroups().iter().enumerate() {
        let gens: Vec<String> = l
            .generators_of(i)
            .iter()
            .map(|&x| g.element(x).to_string())
            .collect();
        let _ = writeln!(
            out,
            "{i:>4}  order {:>4}  {:<6} <{}>",
            h.order(),
            if l.is_normal(i) { "normal" } else { "" },
            gens.join(", ")
        );
    }
    out
}
