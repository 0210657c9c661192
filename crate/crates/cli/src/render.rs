//! Plain-text rendering. Every text view shows the same data as the JSON
//! view, laid out as aligned tables.

use std::fmt::Write as _;

use serde_json::Value;
use stabprod::verify::ClaimReport;
use stabprod::SchurExpansion;

/// Columns are right-aligned when every cell in them is numeric.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<I, S>(header: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }

    pub fn render(&self, out: &mut String) {
        let cols = self.header.len();
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        let mut numeric = vec![true; cols];
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate().take(cols) {
                width[i] = width[i].max(cell.chars().count());
                numeric[i] &= cell.parse::<i64>().is_ok() || cell == "-";
            }
        }
        let line = |cells: &[String], out: &mut String| {
            let mut text = String::new();
            for (i, cell) in cells.iter().enumerate().take(cols) {
                if i > 0 {
                    text.push_str("  ");
                }
                let pad = width[i] - cell.chars().count();
                if numeric[i] {
                    text.push_str(&" ".repeat(pad));
                    text.push_str(cell);
                } else {
                    text.push_str(cell);
                    text.push_str(&" ".repeat(pad));
                }
            }
            out.push_str(text.trim_end());
            out.push('\n');
        };
        line(&self.header, out);
        for row in &self.rows {
            line(row, out);
        }
    }
}

/// `key  value` lines with the keys padded to a common width.
pub fn fields(pairs: &[(&str, String)], out: &mut String) {
    let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in pairs {
        let _ = writeln!(out, "{k:<w$}  {v}");
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

/// Header fields, then the degree and value, then one row per term.
pub fn expansion(head: &[(&str, String)], e: &SchurExpansion, out: &mut String) {
    let mut all = head.to_vec();
    all.push(("degree", e.degree().to_string()));
    all.push(("value", e.to_string()));
    fields(&all, out);
    if !e.is_zero() {
        out.push('\n');
        let mut t = Table::new(["partition", "coefficient"]);
        for (p, c) in e.terms() {
            t.row([p.to_string(), c.to_string()]);
        }
        t.render(out);
    }
}

fn bounds(r: &ClaimReport) -> String {
    if r.bounds.is_empty() {
        return "-".into();
    }
    r.bounds
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A single report in full.
pub fn claim(r: &ClaimReport, out: &mut String) {
    let mut head = vec![
        ("claim", r.claim_id.clone()),
        ("params", compact(&r.params)),
        ("threshold", opt(r.paper_bound)),
        ("bounds", bounds(r)),
        ("onset", opt(r.onset)),
    ];
    if let Some(d) = &r.details {
        head.push(("details", compact(d)));
    }
    head.push(("verdict", r.verdict.to_string()));
    fields(&head, out);

    if !r.per_n.is_empty() {
        out.push('\n');
        let mut t = Table::new(["n", "zero", "terms"]);
        for p in &r.per_n {
            t.row([p.n.to_string(), yes_no(p.zero), p.term_count.to_string()]);
        }
        t.render(out);
    }
    if !r.minimality.is_empty() {
        out.push('\n');
        let mut t = Table::new(["removed", "window", "nonzero throughout", "terms"]);
        for m in &r.minimality {
            let window = match (m.window.first(), m.window.last()) {
                (Some(a), Some(b)) => format!("{}..={}", a.n, b.n),
                _ => "empty".into(),
            };
            let terms = m
                .window
                .iter()
                .map(|p| p.term_count.to_string())
                .collect::<Vec<_>>()
                .join(",");
            t.row([m.removed_op.to_string(), window, yes_no(m.window_nonzero), terms]);
        }
        t.render(out);
    }
    if !r.diagnostics.is_empty() {
        out.push('\n');
        for d in &r.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
    }
}

/// One line per report plus a verdict tally.
pub fn claim_grid(reports: &[ClaimReport], out: &mut String) {
    let mut t = Table::new(["#", "claim", "params", "threshold", "onset", "verdict"]);
    for (i, r) in reports.iter().enumerate() {
        t.row([
            (i + 1).to_string(),
            r.claim_id.clone(),
            compact(&r.params),
            opt(r.paper_bound),
            opt(r.onset),
            r.verdict.to_string(),
        ]);
    }
    t.render(out);
    out.push('\n');
    for (verdict, count) in crate::commands::tally(reports) {
        let _ = writeln!(out, "{verdict}: {count}");
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}
