use std::fmt::Write;

use cqf_core::lab::{
    self, classify_paths, main_theorem_case_analysis, random_unequal_trees, verify_psi, verify_stacked_rows,
    BipartiteVerdict, RegularRibbon, StackedRows,
};
use cqf_core::qsym::{Palindromicity, Symmetry};
use cqf_core::ribbon::{Anchor, SubribbonMatch};
use cqf_core::{cqf_descent, parse_graph, Composition, QSymExpansion, RibbonDiagram};
use serde_json::json;

use crate::error::CliError;
use crate::input::{parse_ribbon, parse_tableau};

pub const CQF_MAX_N: usize = 12;
pub const CLASSIFY_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub json: bool,
    pub allow_large: bool,
}

/// What to print, and the reason for a nonzero exit if a check failed.
pub struct Report {
    pub output: String,
    pub failure: Option<String>,
}

impl Report {
    fn ok(output: String) -> Report {
        Report { output, failure: None }
    }

    fn check(output: String, holds: bool, reason: impl FnOnce() -> String) -> Report {
        Report {
            output,
            failure: (!holds).then(reason),
        }
    }
}

fn check_bound(what: &'static str, n: usize, max: usize, opts: Options) -> Result<(), CliError> {
    if n > max && !opts.allow_large {
        return Err(CliError::OutOfBounds { what, n, max });
    }
    Ok(())
}

fn cells(cs: &[usize]) -> String {
    let one_based: Vec<String> = cs.iter().map(|c| (c + 1).to_string()).collect();
    one_based.join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict_line(q: &QSymExpansion, m: usize) -> String {
    let palindromic = match q.palindromicity(m) {
        Palindromicity::Palindromic => "yes".to_string(),
        Palindromicity::Nonpalindromic { alpha, i } => format!("no (witness {alpha} at q^{i})"),
    };
    let symmetric = match q.symmetry() {
        Symmetry::Symmetric => "yes".to_string(),
        Symmetry::Nonsymmetric { alpha, beta } => format!("no (witness {alpha}/{beta})"),
    };
    format!("palindromic: {palindromic}, symmetric: {symmetric}")
}

pub fn cqf(text: &str, descents: bool, opts: Options) -> Result<Report, CliError> {
    let g = parse_graph(text)?;
    check_bound("cqf", g.vertex_count(), CQF_MAX_N, opts)?;
    let q = if descents { cqf_descent(&g) } else { cqf_core::cqf(&g) };
    if opts.json {
        return Ok(Report::ok(format!("{}\n", q.to_json())));
    }
    Ok(Report::ok(format!("{q}\n{}\n", verdict_line(&q, g.edge_count()))))
}

pub fn classify(n: usize, opts: Options) -> Result<Report, CliError> {
    check_bound("classify", n, CLASSIFY_MAX_N, opts)?;
    let report = classify_paths(n)?;
    let output = if opts.json {
        format!("{}\n", report.to_json())
    } else {
        report.to_table()
    };
    Ok(Report::check(output, report.theorem_holds(), || {
        format!("n = {n}: symmetric patterns other than the two natural ones, or an unconfirmed witness")
    }))
}

fn anchored(r: &RibbonDiagram, queries: &[String], anchor: Anchor) -> Result<Vec<(Composition, Vec<usize>)>, CliError> {
    queries
        .iter()
        .map(|q| {
            let beta: Composition = q.parse()?;
            let starts = r.find_subribbon(&beta, anchor).iter().map(|m| m.start).collect();
            Ok((beta, starts))
        })
        .collect()
}

pub fn ribbon(text: &str, contains: &[String], begins: &[String], ends: &[String], opts: Options) -> Result<Report, CliError> {
    let r = parse_ribbon(text)?;
    let corners = r.corners();
    let regular: Vec<usize> = r.regular_subribbons().iter().map(|m| m.start).collect();
    let cases: Vec<String> = match main_theorem_case_analysis(&r) {
        Ok(labels) => labels.iter().map(ToString::to_string).collect(),
        Err(_) => Vec::new(),
    };
    let queries = [
        ("contains", anchored(&r, contains, Anchor::Anywhere)?),
        ("begins with", anchored(&r, begins, Anchor::Begins)?),
        ("ends with", anchored(&r, ends, Anchor::Ends)?),
    ];

    if opts.json {
        let one_based = |v: &[usize]| v.iter().map(|c| c + 1).collect::<Vec<_>>();
        let query_json: Vec<_> = queries
            .iter()
            .flat_map(|(kind, results)| {
                results.iter().map(move |(beta, starts)| {
                    json!({"query": kind, "subribbon": beta, "found": !starts.is_empty(), "starts": one_based(starts)})
                })
            })
            .collect();
        let value = json!({
            "composition": r.composition(),
            "pattern": r.pattern().to_string(),
            "cells": r.len(),
            "lu": one_based(&corners.lu),
            "rl": one_based(&corners.rl),
            "regular": r.is_regular(),
            "regular_subribbons": one_based(&regular),
            "reflection": r.reflect().composition(),
            "cases": cases,
            "queries": query_json,
        });
        let text = serde_json::to_string_pretty(&value).expect("ribbon report serializes");
        return Ok(Report::ok(format!("{text}\n")));
    }

    let mut out = String::new();
    let _ = writeln!(out, "composition: {}", r.composition());
    let pattern = r.pattern().to_string();
    let _ = writeln!(out, "pattern: {}", if pattern.is_empty() { "-" } else { &pattern });
    out.push_str(&r.render());
    let _ = writeln!(out, "LU={}, RL={}", corners.lu.len(), corners.rl.len());
    let _ = writeln!(out, "LU cells: {}", cells(&corners.lu));
    let _ = writeln!(out, "RL cells: {}", cells(&corners.rl));
    if regular.is_empty() {
        let _ = writeln!(out, "regular: no");
    } else {
        let _ = writeln!(out, "regular: yes ((2,1) sub-ribbons starting at cells {})", cells(&regular));
    }
    let _ = writeln!(out, "reflection: {}", r.reflect().composition());
    let _ = writeln!(
        out,
        "cases: {}",
        if cases.is_empty() { "none (natural labeling)".to_string() } else { cases.join(", ") }
    );
    for (kind, results) in &queries {
        for (beta, starts) in results {
            if starts.is_empty() {
                let _ = writeln!(out, "{kind} {beta}: no");
            } else {
                let _ = writeln!(out, "{kind} {beta}: yes (cells starting at {})", cells(starts));
            }
        }
    }
    Ok(Report::ok(out))
}

pub fn verify_star(ns: &[usize], opts: Options) -> Result<Report, CliError> {
    let tables = ns.iter().map(|&n| lab::verify_star(n)).collect::<Result<Vec<_>, _>>()?;
    let failing: Vec<usize> = tables.iter().filter(|t| !t.holds()).map(|t| t.n).collect();
    let output = if opts.json {
        format!("{}\n", serde_json::to_string_pretty(&tables).expect("star tables serialize"))
    } else {
        let mut out = String::new();
        for t in &tables {
            let _ = writeln!(out, "n={} {}", t.n, if t.holds() { "ok" } else { "FAILED" });
            for row in &t.rows {
                let _ = writeln!(
                    out,
                    "  center={:<2} palindromic: {:<3} (predicted {:<3}) symmetric: {:<3} c(1,n-1) = q^(n-center): {:<3} c(n-1,1) = q^(center-1): {}",
                    row.center,
                    yes_no(row.palindromic),
                    yes_no(row.predicted_palindromic),
                    yes_no(row.symmetric),
                    yes_no(row.head_is_single_term),
                    yes_no(row.tail_is_single_term),
                );
            }
        }
        out
    };
    Ok(Report::check(output, failing.is_empty(), || {
        format!("star verdicts disagree for n in {failing:?}")
    }))
}

pub enum Sample {
    Given(String),
    Random { count: usize, sizes: Vec<usize>, seed: u64 },
}

pub fn verify_bipartite(sample: Sample, opts: Options) -> Result<Report, CliError> {
    let graphs = match sample {
        Sample::Given(text) => vec![parse_graph(&text)?],
        Sample::Random { count, sizes, seed } => random_unequal_trees(count, &sizes, seed)?,
    };
    for g in &graphs {
        check_bound("verify-bipartite", g.vertex_count(), CQF_MAX_N, opts)?;
    }
    let verdicts = lab::verify_bipartite(&graphs)?;
    let failed = verdicts.iter().filter(|v| v.holds() == Some(false)).count();
    let checked = verdicts.iter().filter(|v| v.holds().is_some()).count();
    let output = if opts.json {
        format!("{}\n", serde_json::to_string_pretty(&verdicts).expect("verdicts serialize"))
    } else {
        let mut out = String::new();
        for v in &verdicts {
            match v {
                BipartiteVerdict::Checked {
                    graph,
                    a,
                    b,
                    edges,
                    r,
                    s,
                    nonpalindromic_witness,
                    holds,
                } => {
                    let exp = |e: &Option<usize>| e.map_or("-".to_string(), |e| format!("q^{e}"));
                    let witness = nonpalindromic_witness
                        .as_ref()
                        .map_or("-".to_string(), |(alpha, i)| format!("{alpha} at q^{i}"));
                    let _ = writeln!(
                        out,
                        "{} {graph}: parts {a},{b}, {edges} edges, c({a},{b}) = {}, c({b},{a}) = {}, nonpalindromic witness {witness}",
                        if *holds { "ok" } else { "FAILED" },
                        exp(r),
                        exp(s),
                    );
                }
                BipartiteVerdict::Skipped { graph, reason } => {
                    let _ = writeln!(out, "skipped {graph}: {reason}");
                }
            }
        }
        let _ = writeln!(
            out,
            "{checked} checked, {} skipped, {failed} failed",
            verdicts.len() - checked
        );
        out
    };
    Ok(Report::check(output, failed == 0, || format!("{failed} graphs failed the bipartite check")))
}

pub fn witness_zeta(
    ribbon: &str,
    ib: Option<(usize, usize)>,
    apply: Option<&str>,
    opts: Options,
) -> Result<Report, CliError> {
    let r = parse_ribbon(ribbon)?;
    let all = match ib {
        Some((i, b)) => vec![StackedRows::new(&r, i, b)?],
        None => StackedRows::all(&r)?,
    };
    let reports = all.iter().map(verify_stacked_rows).collect::<Result<Vec<_>, _>>()?;
    let holds = reports.iter().all(|rep| rep.holds());

    let applied = match apply {
        Some(t) => {
            let params = &all[0];
            let t = parse_tableau(t)?;
            if t.diagram() != params.ribbon() {
                return Err(CliError::Usage(format!(
                    "tableau has shape {}, expected {}",
                    t.diagram().composition(),
                    r.composition()
                )));
            }
            Some(if params.in_a(&t)? {
                let z = params.zeta(&t)?;
                let in_b = params.in_b(&z)?;
                ("zeta", t, z, in_b)
            } else {
                let z = params.zeta_inverse(&t)?;
                ("zeta^-1", t, z, false)
            })
        }
        None => None,
    };

    let output = if opts.json {
        let mut value = json!({ "reports": reports });
        if let Some((map, input, image, in_b)) = &applied {
            value["applied"] = json!({"map": map, "input": input.to_string(), "image": image.to_string(), "image_in_b": in_b});
        }
        format!("{}\n", serde_json::to_string_pretty(&value).expect("zeta reports serialize"))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "ribbon {}", r.composition());
        for rep in &reports {
            let p = &rep.params;
            let _ = writeln!(
                out,
                "i={} b={}: |A|={} |B|={} |B'|={} zeta bijective: {} B inside B': {}",
                p.i,
                p.b,
                rep.a,
                rep.b_size,
                rep.bprime,
                yes_no(rep.zeta_bijective),
                yes_no(rep.b_inside_bprime)
            );
            let _ = writeln!(out, "  in B' but not B: {}", rep.witness);
        }
        if let Some((map, input, image, in_b)) = &applied {
            let _ = writeln!(out, "{map}({input}) = {image}");
            if *map == "zeta" {
                let _ = writeln!(out, "image in B: {}", yes_no(*in_b));
            }
            out.push_str(&image.render());
        }
        out
    };
    Ok(Report::check(output, holds, || {
        format!("zeta check failed on {}", r.composition())
    }))
}

pub fn witness_psi(ribbon: &str, subribbon: Option<usize>, apply: Option<&str>, opts: Options) -> Result<Report, CliError> {
    let r = parse_ribbon(ribbon)?;
    let reg = RegularRibbon::new(&r)?;
    let s = match subribbon {
        Some(0) => return Err(CliError::Usage("sub-ribbon cells are numbered from 1".into())),
        Some(start) => SubribbonMatch { start: start - 1, len: 3 },
        None => reg.default_subribbon(),
    };
    let report = verify_psi(&r, Some(s))?;

    let applied = match apply {
        Some(t) => {
            let t = parse_tableau(t)?;
            let image = reg.psi(&t)?;
            let t_prime = reg.psi_nonsurjectivity_witness_from(&image, s)?;
            Some((t, image, t_prime))
        }
        None => None,
    };

    let output = if opts.json {
        let mut value = json!({ "report": report, "subribbon_start": s.start + 1 });
        if let Some((t, image, t_prime)) = &applied {
            value["applied"] = json!({"input": t.to_string(), "image": image.to_string(), "witness_from_image": t_prime.to_string()});
        }
        format!("{}\n", serde_json::to_string_pretty(&value).expect("psi report serializes"))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "ribbon {} with k={} LU corners", r.composition(), report.k);
        let _ = writeln!(out, "(2,1) sub-ribbon starting at cell {}", s.start + 1);
        let _ = writeln!(
            out,
            "|A|={} |B|={} psi injective: {} every image has its 2 next to one 1: {}",
            report.a,
            report.b,
            yes_no(report.injective),
            yes_no(report.images_have_one_neighbouring_one)
        );
        let _ = writeln!(
            out,
            "in A but not an image: {} ({})",
            report.witness,
            if report.witness_outside_image { "confirmed" } else { "NOT confirmed" }
        );
        if let Some((t, image, t_prime)) = &applied {
            let _ = writeln!(out, "psi({t}) = {image}");
            out.push_str(&image.render());
            let _ = writeln!(out, "from psi(T), 2 moved to the sub-ribbon's RL cell: {t_prime}");
            out.push_str(&t_prime.render());
        }
        out
    };
    Ok(Report::check(output, report.holds(), || {
        format!("psi check failed on {}", r.composition())
    }))
}
