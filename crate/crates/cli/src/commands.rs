//! One function per subcommand. Each validates its parameters completely,
//! runs the computation, and returns the report in both formats.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};
use stabprod::polytope::{self, Face};
use stabprod::sequence::{eval_composed, first_valid_index, DiffOp};
use stabprod::verify::{self, CheckOptions, ClaimReport, StableInput, Verdict};
use stabprod::{Partition, SchurExpansion, SequenceFamily};

use crate::family::{parse_alpha, parse_family, parse_partition, parse_u32_list};
use crate::{render, ApplyDeltaArgs, Claim, ConjectureArgs, PolytopeArgs, ProductArgs, UsageError, VerifyArgs};

pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// Every verdict is pass or supporting evidence.
    pub success: bool,
}

pub enum Failure {
    Usage(UsageError),
    Compute(stabprod::Error),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(UsageError(msg.into()))
}

fn json_of<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types always serialize")
}

fn expansion_outcome(mut head: Vec<(&str, Value)>, e: &SchurExpansion) -> Outcome {
    let mut text = String::new();
    let fields: Vec<(&str, String)> = head
        .iter()
        .map(|(k, v)| (*k, v.as_str().map_or_else(|| v.to_string(), str::to_string)))
        .collect();
    render::expansion(&fields, e, &mut text);
    head.push(("expansion", json_of(e)));
    let json = Value::Object(head.into_iter().map(|(k, v)| (k.to_string(), v)).collect());
    Outcome {
        json,
        text,
        success: true,
    }
}

pub fn product(args: &ProductArgs) -> Result<Outcome, Failure> {
    if let Some(factors) = &args.factors {
        let parts = factors.split(';').map(parse_partition).collect::<Result<Vec<_>, _>>()?;
        let mut acc = SchurExpansion::one();
        for p in &parts {
            acc = acc
                .schur_multiply(&SchurExpansion::basis(p.clone()))
                .map_err(Failure::Compute)?;
        }
        let names: Vec<String> = parts.iter().map(Partition::to_string).collect();
        return Ok(expansion_outcome(vec![("factors", json!(names))], &acc));
    }
    let (Some(spec), Some(n)) = (&args.seq, args.n) else {
        return Err(usage("give either --factors or both --seq and --n"));
    };
    let family = parse_family(spec)?;
    if n < family.floor() {
        return Err(usage(format!(
            "{} is defined from n = {} on, got --n {n}",
            family.label(),
            family.floor()
        )));
    }
    let value = family.at(n).map_err(Failure::Compute)?;
    Ok(expansion_outcome(
        vec![("seq", json!(family.label())), ("n", json!(n))],
        &value,
    ))
}

pub fn apply_delta(args: &ApplyDeltaArgs) -> Result<Outcome, Failure> {
    let ops = DiffOp::parse_list(&args.ops).map_err(|e| usage(e.to_string()))?;
    if ops.is_empty() {
        return Err(usage("--ops lists no operators"));
    }
    let family = parse_family(&args.seq)?;
    if let Some(op) = ops.iter().find(|o| o.slope() != family.slope()) {
        return Err(usage(format!(
            "operator {op} has slope {} (|λ|/m) but {} has slope {}",
            op.slope(),
            family.label(),
            family.slope()
        )));
    }
    let first = first_valid_index(&ops, &family);
    if args.n < first {
        return Err(usage(format!(
            "these operators on {} need n ≥ {first}, got --n {}",
            family.label(),
            args.n
        )));
    }
    let value = eval_composed(&ops, &family, args.n).map_err(Failure::Compute)?;
    let names: Vec<String> = ops.iter().map(ToString::to_string).collect();
    Ok(expansion_outcome(
        vec![
            ("ops", json!(names)),
            ("seq", json!(family.label())),
            ("n", json!(args.n)),
        ],
        &value,
    ))
}

pub fn enumerate_polytope(args: &PolytopeArgs) -> Result<Outcome, Failure> {
    if !(1..=5).contains(&args.k) {
        return Err(usage(stabprod::Error::UnsupportedK(args.k).to_string()));
    }
    let alpha = match &args.alpha {
        Some(s) => parse_alpha(s)?,
        None => vec![0; args.k],
    };
    if alpha.len() != args.k {
        return Err(usage(format!(
            "--alpha has {} entries but --k is {}",
            alpha.len(),
            args.k
        )));
    }
    let faces = match &args.face {
        Some(s) => s
            .split(',')
            .map(|f| {
                let face: Face = f.parse().map_err(|e: stabprod::Error| usage(e.to_string()))?;
                face.check_k(args.k).map_err(|e| usage(e.to_string()))?;
                Ok(face)
            })
            .collect::<Result<Vec<_>, Failure>>()?,
        None => Vec::new(),
    };

    let mut points = polytope::enumerate_points(args.n, &alpha).map_err(Failure::Compute)?;
    for &face in &faces {
        points = polytope::face_filter(&points, face).map_err(Failure::Compute)?;
    }
    let mut shapes: BTreeMap<Partition, u64> = BTreeMap::new();
    for p in &points {
        *shapes.entry(p.shape()).or_insert(0) += 1;
    }

    let face_names: Vec<&str> = faces.iter().map(|f| f.name()).collect();
    let mut json = json!({
        "k": args.k,
        "n": args.n,
        "alpha": alpha,
        "faces": face_names,
        "count": points.len(),
        "row_sum_shapes": shapes
            .iter()
            .map(|(p, c)| json!({ "partition": p, "count": c }))
            .collect::<Vec<_>>(),
    });
    if args.points {
        json["points"] = json!(points.iter().map(|p| p.rows()).collect::<Vec<_>>());
    }

    let mut text = String::new();
    render::fields(
        &[
            ("k", args.k.to_string()),
            ("n", args.n.to_string()),
            ("alpha", json!(alpha).to_string()),
            (
                "faces",
                if faces.is_empty() {
                    "-".into()
                } else {
                    face_names.join(",")
                },
            ),
            ("count", points.len().to_string()),
        ],
        &mut text,
    );
    text.push('\n');
    let mut t = render::Table::new(["row sums", "count"]);
    for (p, c) in &shapes {
        t.row([p.to_string(), c.to_string()]);
    }
    t.render(&mut text);
    if args.points {
        text.push('\n');
        let mut t = render::Table::new(["#", "rows"]);
        for (i, p) in points.iter().enumerate() {
            t.row([(i + 1).to_string(), json!(p.rows()).to_string()]);
        }
        t.render(&mut text);
    }
    Ok(Outcome {
        json,
        text,
        success: true,
    })
}

/// Verdict counts in verdict order.
pub fn tally(reports: &[ClaimReport]) -> BTreeMap<Verdict, usize> {
    let mut out = BTreeMap::new();
    for r in reports {
        *out.entry(r.verdict).or_insert(0) += 1;
    }
    out
}

/// A grid cell: what it checks, and how to report it if the check errors.
struct Cell {
    claim: &'static str,
    params: Value,
    run: Box<dyn Fn() -> stabprod::Result<ClaimReport> + Send + Sync>,
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(';').map(str::trim)
}

fn alphas(args: &VerifyArgs, len: usize) -> Result<Vec<Vec<u32>>, Failure> {
    let spec = args
        .alpha
        .as_deref()
        .ok_or_else(|| usage(format!("--alpha is required ({len} weakly decreasing entries)")))?;
    split_list(spec)
        .map(|a| {
            let alpha = parse_alpha(a)?;
            if alpha.len() != len {
                return Err(usage(format!(
                    "alpha {a:?} has {} entries, expected {len}",
                    alpha.len()
                )));
            }
            Ok(alpha)
        })
        .collect()
}

/// The candidate partitions for each λ flag.
fn lambda_lists(args: &VerifyArgs, count: usize) -> Result<Vec<Vec<Partition>>, Failure> {
    let flags = [&args.lambda1, &args.lambda2, &args.lambda3, &args.lambda4];
    if let Some(i) = (count..4).find(|&i| flags[i].is_some()) {
        return Err(usage(format!("--lambda{} does not apply to this claim", i + 1)));
    }
    flags[..count]
        .iter()
        .map(|flag| match (flag, args.grid_weight) {
            (Some(s), _) => split_list(s)
                .map(|p| parse_partition(p).map_err(Failure::from))
                .collect(),
            (None, Some(w)) => Ok(Partition::all_up_to_weight(w)),
            (None, None) => Ok(vec![Partition::empty()]),
        })
        .collect()
}

fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

fn n_list(args: &VerifyArgs, min: u32) -> Result<Vec<u32>, Failure> {
    let spec = args
        .n
        .as_deref()
        .ok_or_else(|| usage("--n is required (comma-separated indices)"))?;
    let ns = parse_u32_list(spec)?;
    if ns.is_empty() {
        return Err(usage("--n lists no indices"));
    }
    if let Some(n) = ns.iter().find(|&&n| n < min) {
        return Err(usage(format!("this claim needs n ≥ {min}, got {n}")));
    }
    Ok(ns)
}

fn opts(n_max: Option<u32>, threshold: i64, window: u32) -> CheckOptions {
    let n_max = n_max.unwrap_or_else(|| (threshold.max(0) as u32).saturating_add(window));
    CheckOptions { n_max, window }
}

fn build_cells(args: &VerifyArgs) -> Result<Vec<Cell>, Failure> {
    if args.window == 0 {
        return Err(usage("--window must be positive"));
    }
    let window = args.window;
    let mut cells = Vec::new();
    match args.claim {
        Claim::Pair => {
            let lambdas = lambda_lists(args, 2)?;
            for alpha in alphas(args, 2)? {
                for ls in cartesian(&lambdas) {
                    let alpha = [alpha[0], alpha[1]];
                    let ls = [ls[0].clone(), ls[1].clone()];
                    let o = opts(args.n_max, verify::pair_bound(alpha, &ls), window);
                    cells.push(Cell {
                        claim: "pair",
                        params: json!({ "alpha": alpha, "lambdas": ls, "n_max": o.n_max, "window": window }),
                        run: Box::new(move || verify::check_pair_theorem(alpha, ls.clone(), o)),
                    });
                }
            }
        }
        Claim::Triple => {
            let lambdas = lambda_lists(args, 3)?;
            for alpha in alphas(args, 3)? {
                for ls in cartesian(&lambdas) {
                    let alpha = [alpha[0], alpha[1], alpha[2]];
                    let ls = [ls[0].clone(), ls[1].clone(), ls[2].clone()];
                    let (general, one_row) = verify::triple_bounds(alpha, &ls);
                    let o = opts(args.n_max, general.max(one_row), window);
                    cells.push(Cell {
                        claim: "triple",
                        params: json!({ "alpha": alpha, "lambdas": ls, "n_max": o.n_max, "window": window }),
                        run: Box::new(move || verify::check_triple_theorem(alpha, ls.clone(), o)),
                    });
                }
            }
        }
        Claim::Conjecture => {
            let lambdas = lambda_lists(args, 4)?;
            let plain = args.lambda1.is_none()
                && args.lambda2.is_none()
                && args.lambda3.is_none()
                && args.lambda4.is_none()
                && args.grid_weight.is_none();
            for alpha in alphas(args, 4)? {
                for ls in cartesian(&lambdas) {
                    let alpha = [alpha[0], alpha[1], alpha[2], alpha[3]];
                    let ls = (!plain).then(|| [ls[0].clone(), ls[1].clone(), ls[2].clone(), ls[3].clone()]);
                    let o = CheckOptions {
                        n_max: args.n_max.unwrap_or(12),
                        window,
                    };
                    cells.push(Cell {
                        claim: "conjecture",
                        params: json!({ "alpha": alpha, "lambdas": ls, "n_max": o.n_max, "window": window }),
                        run: Box::new(move || verify::explore_conjecture(alpha, ls.clone(), o)),
                    });
                }
            }
        }
        Claim::Residual | Claim::Multiplicity => {
            lambda_lists(args, 0)?;
            let residual = args.claim == Claim::Residual;
            let ns = n_list(args, if residual { 5 } else { 4 })?;
            for alpha in alphas(args, 3)? {
                let alpha = [alpha[0], alpha[1], alpha[2]];
                if !residual && alpha[2] != 0 {
                    return Err(usage("the multiplicity count needs α3 = 0"));
                }
                for &n in &ns {
                    let (claim, run): (&'static str, Box<dyn Fn() -> _ + Send + Sync>) = if residual {
                        ("residual", Box::new(move || verify::check_triple_residual(alpha, n)))
                    } else {
                        (
                            "multiplicity",
                            Box::new(move || verify::check_multiplicity_count(alpha, n)),
                        )
                    };
                    cells.push(Cell {
                        claim,
                        params: json!({ "alpha": alpha, "n": n }),
                        run,
                    });
                }
            }
        }
        Claim::Corollary => {
            lambda_lists(args, 0)?;
            if args.alpha.is_some() {
                return Err(usage("the corollary takes its families from --input"));
            }
            if !(2..=3).contains(&args.input.len()) {
                return Err(usage(format!(
                    "the corollary needs two or three --input SPEC@N, got {}",
                    args.input.len()
                )));
            }
            let mut inputs = Vec::new();
            for spec in &args.input {
                let (family, declared) = spec
                    .rsplit_once('@')
                    .ok_or_else(|| usage(format!("{spec:?}: expected SPEC@N")))?;
                let declared: u32 = declared
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("{spec:?}: {declared:?} is not a stabilization index")))?;
                let family: SequenceFamily = parse_family(family)?;
                if family.slope() != 1 {
                    return Err(usage(format!(
                        "{spec:?}: corollary inputs need one factor (slope 1), got slope {}",
                        family.slope()
                    )));
                }
                inputs.push(StableInput {
                    m: family.offset(),
                    family,
                    declared,
                });
            }
            let pairs: Vec<(u32, u32)> = inputs.iter().map(|i| (i.m, i.declared)).collect();
            let threshold = verify::corollary_bounds(&pairs)
                .map_err(|e| usage(e.to_string()))?
                .values()
                .copied()
                .max()
                .unwrap_or(0);
            let o = opts(args.n_max, threshold, window);
            let claim = if inputs.len() == 3 {
                "corollary-triple"
            } else {
                "corollary-pair"
            };
            cells.push(Cell {
                claim,
                params: json!({
                    "inputs": inputs
                        .iter()
                        .map(|i| json!({ "family": i.family.label(), "m": i.m, "declared_stable_at": i.declared }))
                        .collect::<Vec<_>>(),
                    "n_max": o.n_max,
                    "window": window,
                }),
                run: Box::new(move || verify::check_corollary(&inputs, o)),
            });
        }
    }
    if matches!(args.claim, Claim::Residual | Claim::Multiplicity | Claim::Corollary) && args.grid_weight.is_some() {
        return Err(usage("--grid-weight applies to pair, triple and conjecture"));
    }
    Ok(cells)
}

fn run_cells(cells: Vec<Cell>, jobs: usize) -> Vec<ClaimReport> {
    let run = |c: &Cell| (c.run)().unwrap_or_else(|e| ClaimReport::from_error(c.claim, c.params.clone(), &e));
    if jobs <= 1 || cells.len() <= 1 {
        return cells.iter().map(run).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        // `collect` on an indexed parallel iterator keeps input order.
        Ok(pool) => pool.install(|| cells.par_iter().map(run).collect()),
        Err(_) => cells.iter().map(run).collect(),
    }
}

fn claims_outcome(reports: Vec<ClaimReport>) -> Outcome {
    let success = reports.iter().all(|r| r.verdict.is_success());
    let mut text = String::new();
    let json = if let [single] = reports.as_slice() {
        render::claim(single, &mut text);
        json_of(single)
    } else {
        render::claim_grid(&reports, &mut text);
        let summary: BTreeMap<&str, usize> = tally(&reports).into_iter().map(|(v, c)| (v.as_str(), c)).collect();
        json!({ "cells": reports.len(), "summary": summary, "reports": reports })
    };
    Outcome { json, text, success }
}

pub fn verify(args: &VerifyArgs, jobs: usize) -> Result<Outcome, Failure> {
    let cells = build_cells(args)?;
    if cells.is_empty() {
        return Err(usage("the grid is empty"));
    }
    Ok(claims_outcome(run_cells(cells, jobs)))
}

pub fn explore_conjecture(args: &ConjectureArgs) -> Result<Outcome, Failure> {
    let alpha = parse_alpha(&args.alpha)?;
    let alpha: [u32; 4] = alpha
        .try_into()
        .map_err(|a: Vec<u32>| usage(format!("--alpha has {} entries, expected 4", a.len())))?;
    let lambdas = match &args.lambdas {
        Some(s) => {
            let ls = s.split('|').map(parse_partition).collect::<Result<Vec<_>, _>>()?;
            let ls: [Partition; 4] = ls
                .try_into()
                .map_err(|l: Vec<Partition>| usage(format!("--lambdas has {} partitions, expected 4", l.len())))?;
            Some(ls)
        }
        None => None,
    };
    if args.window == 0 {
        return Err(usage("--window must be positive"));
    }
    let o = CheckOptions {
        n_max: args.n_max,
        window: args.window,
    };
    let params = json!({ "alpha": alpha, "lambdas": lambdas, "n_max": o.n_max, "window": o.window });
    let report = verify::explore_conjecture(alpha, lambdas, o)
        .unwrap_or_else(|e| ClaimReport::from_error("conjecture", params, &e));
    Ok(claims_outcome(vec![report]))
}
