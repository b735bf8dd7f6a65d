use std::fs;
use std::path::Path;

use pentagon::algebra::{FiniteSemigroup, MAX_ORDER};
use pentagon::format::{parse_cayley, parse_construction, parse_solution, parse_theta, write_solution, ParseError, ParseErrorKind};
use pentagon::lab::{mutation_sweep, run_catalog, standard_instances, Detection, Instance, LAB_SEARCH_CAP};
use pentagon::pentagon::{classify, classify_table, verify_solution, PentagonError, PentagonSolution, ThetaTable};
use pentagon::search::{census, enumerate_solutions, enumerate_thetas, with_pool, CensusOptions, SearchOptions, DEFAULT_SEARCH_CAP};
use serde_json::{json, Value};

use crate::{Cli, Command, SolutionInput};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PROPERTY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

enum Failure {
    /// Unreadable or malformed input, or an invalid request.
    Input(String),
    /// Well-formed input that does not have the required property.
    Property(String),
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

pub fn run(cli: &Cli) -> u8 {
    let workers = usize::from(cli.common.workers);
    let result = match &cli.command {
        Command::Verify(input) => verify(input),
        Command::Classify(input) => classify_cmd(input),
        Command::Enumerate { table, filter, up_to_iso, allow_large } => {
            enumerate(table, filter, *up_to_iso, *allow_large, workers)
        }
        Command::Census { order, allow_large } => census_cmd(*order, *allow_large, workers),
        Command::Construct { table, data } => construct(table, data),
        Command::Iso { left, right } => iso(left, right),
        Command::Lab { max_order, table, theta, mutation, summary } => {
            lab(*max_order, table.as_deref(), theta.as_deref(), *mutation, *summary, workers)
        }
    };
    match result {
        Ok(report) => {
            let body = if cli.common.json {
                let mut s = serde_json::to_string_pretty(&report.json).expect("reports serialize");
                s.push('\n');
                s
            } else {
                report.text
            };
            let written = match &cli.common.output {
                Some(path) => fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            match written {
                Err(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_INPUT
                }
                Ok(()) if report.ok => EXIT_OK,
                Ok(()) => EXIT_PROPERTY,
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Property(msg)) => {
            eprintln!("error: {msg}");
            EXIT_PROPERTY
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, ParseError>) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| {
        let msg = format!("{}: {e}", path.display());
        match e.kind {
            ParseErrorKind::Pentagon(PentagonError::NotASolution(_)) => Failure::Property(msg),
            _ => Failure::Input(msg),
        }
    })
}

fn load_pair(input: &SolutionInput) -> Result<(FiniteSemigroup, ThetaTable), Failure> {
    match (&input.table, &input.theta, &input.solution) {
        (Some(table), Some(theta), _) => {
            let s = load(table, parse_cayley)?;
            let t = load(theta, parse_theta)?;
            if t.order() != s.order() {
                return Err(Failure::Input(format!(
                    "{}: θ-table has order {}, the semigroup has order {}",
                    theta.display(),
                    t.order(),
                    s.order()
                )));
            }
            Ok((s, t))
        }
        (_, _, Some(path)) => {
            let sol = load(path, parse_solution)?;
            Ok((sol.semigroup().clone(), sol.into_theta()))
        }
        _ => Err(Failure::Input("give --table with --theta, or --solution".into())),
    }
}

/// `Ok(Err(report))` is the finished failure report for a non-solution.
fn checked(s: &FiniteSemigroup, theta: &ThetaTable) -> Result<Result<(), Report>, Failure> {
    let v = verify_solution(s, theta).map_err(|e| Failure::Input(e.to_string()))?;
    if v.holds() {
        return Ok(Ok(()));
    }
    let mut text = format!("solution: no\n{} violation(s)\n", v.total);
    for violation in &v.violations {
        text.push_str(&format!("  {violation}\n"));
    }
    if v.total > v.violations.len() {
        text.push_str(&format!("  ... {} more\n", v.total - v.violations.len()));
    }
    let json = json!({ "solution": false, "violations": v.violations, "total_violations": v.total });
    Ok(Err(Report { text, json, ok: false }))
}

fn verify(input: &SolutionInput) -> Result<Report, Failure> {
    let (s, theta) = load_pair(input)?;
    if let Err(report) = checked(&s, &theta)? {
        return Ok(report);
    }
    let flags = classify_table(&s, &theta).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(Report {
        text: format!(
            "solution: yes; idempotent: {}; non-degenerate: {}\n",
            yes_no(flags.idempotent),
            yes_no(flags.nondegenerate)
        ),
        json: json!({
            "solution": true,
            "idempotent": flags.idempotent,
            "nondegenerate": flags.nondegenerate,
            "violations": [],
            "total_violations": 0,
        }),
        ok: true,
    })
}

fn classify_cmd(input: &SolutionInput) -> Result<Report, Failure> {
    let (s, theta) = load_pair(input)?;
    if let Err(report) = checked(&s, &theta)? {
        return Ok(report);
    }
    let flags = classify_table(&s, &theta).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(Report {
        text: format!("solution: yes\n{flags}\n"),
        json: json!({ "solution": true, "flags": flags }),
        ok: true,
    })
}

fn solution_json(sol: &PentagonSolution) -> Value {
    let s = sol.semigroup();
    json!({
        "n": s.order(),
        "identity": s.identity(),
        "mul": s.rows(),
        "theta": sol.theta().rows(),
        "flags": classify(sol),
    })
}

fn enumerate(
    table: &Path,
    filter: &[pentagon::pentagon::Property],
    up_to_iso: bool,
    allow_large: bool,
    workers: usize,
) -> Result<Report, Failure> {
    let s = load(table, parse_cayley)?;
    let opts = SearchOptions {
        filter: filter.to_vec(),
        up_to_iso,
        worker_count: workers,
        max_order: if allow_large { MAX_ORDER } else { DEFAULT_SEARCH_CAP },
    };
    let sols = enumerate_solutions(&s, &opts).map_err(|e| Failure::Input(e.to_string()))?;
    let names: Vec<&str> = filter.iter().map(|p| p.name()).collect();

    let mut text = format!("order {}\n", s.order());
    text.push_str(&format!("filter {}\n", if names.is_empty() { "none".to_string() } else { names.join(",") }));
    text.push_str(&format!("up-to-iso {}\n", yes_no(up_to_iso)));
    for (i, sol) in sols.iter().enumerate() {
        text.push_str(&format!("\n[solution {}]\nflags {}\n", i + 1, classify(sol)));
        for row in sol.theta().rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            text.push_str(&cells.join(" "));
            text.push('\n');
        }
    }
    text.push_str(&format!("\nTOTAL_SOLUTIONS={}\n", sols.len()));
    let json = json!({
        "order": s.order(),
        "filter": names,
        "up_to_iso": up_to_iso,
        "solutions": sols.iter().map(|sol| json!({ "theta": sol.theta().rows(), "flags": classify(sol) })).collect::<Vec<_>>(),
        "total": sols.len(),
    });
    Ok(Report { text, json, ok: true })
}

fn census_cmd(order: usize, allow_large: bool, workers: usize) -> Result<Report, Failure> {
    let report = census(CensusOptions { order, worker_count: workers, allow_large })
        .map_err(|e| Failure::Input(e.to_string()))?;
    let json = serde_json::to_value(&report).expect("census serializes");
    Ok(Report { text: report.render_text(), json, ok: true })
}

fn construct(table: &Path, data: &Path) -> Result<Report, Failure> {
    let s = load(table, parse_cayley)?;
    let spec = load(data, |text| parse_construction(text, s.order()))?;
    let sol = spec.build(&s).map_err(|e| Failure::Property(format!("{}: construction data rejected: {e}", data.display())))?;
    Ok(Report { text: write_solution(&sol), json: solution_json(&sol), ok: true })
}

fn iso(left: &Path, right: &Path) -> Result<Report, Failure> {
    let a = load(left, parse_solution)?;
    let b = load(right, parse_solution)?;
    Ok(match pentagon::pentagon::solutions_isomorphic(&a, &b) {
        Some(found) => {
            let map = found.witness.table();
            let pairs: Vec<String> = map.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
            Report {
                text: format!("isomorphic: yes\nwitness {}\n", pairs.join(" ")),
                json: json!({ "isomorphic": true, "witness": map }),
                ok: true,
            }
        }
        None => Report {
            text: "isomorphic: no\n".into(),
            json: json!({ "isomorphic": false, "witness": null }),
            ok: false,
        },
    })
}

fn lab(
    max_order: usize,
    table: Option<&Path>,
    theta: Option<&Path>,
    mutation: bool,
    summary: bool,
    workers: usize,
) -> Result<Report, Failure> {
    let input = |e: pentagon::search::SearchError| Failure::Input(e.to_string());
    let instances = match table {
        Some(path) => {
            let s = load(path, parse_cayley)?;
            match theta {
                Some(tp) => {
                    let t = load(tp, parse_theta)?;
                    vec![Instance { label: "input".into(), semigroup: s, solution: Some(t) }]
                }
                None => {
                    let opts = SearchOptions { max_order: LAB_SEARCH_CAP, ..Default::default() };
                    let thetas = enumerate_thetas(&s, &opts).map_err(input)?;
                    let mut out = vec![Instance { label: "input".into(), semigroup: s.clone(), solution: None }];
                    out.extend(thetas.into_iter().enumerate().map(|(j, t)| Instance {
                        label: format!("input/θ{}", j + 1),
                        semigroup: s.clone(),
                        solution: Some(t),
                    }));
                    out
                }
            }
        }
        None => standard_instances(max_order).map_err(input)?,
    };
    let report = with_pool(workers, || run_catalog(&instances)).map_err(input)?;
    let sweep = match (mutation, table) {
        (false, _) => None,
        (true, None) => Some(with_pool(workers, || mutation_sweep(max_order)).map_err(input)?.map_err(input)?),
        (true, Some(_)) => return Err(Failure::Input("--mutation runs on generated instances only".into())),
    };

    let mut text = if summary { report.machine_lines() } else { report.render_text() };
    let mut undetected = 0;
    if let Some(results) = &sweep {
        if !summary {
            text.push('\n');
        }
        for r in results {
            let detection = match r.detection {
                Detection::Fail => "fail",
                Detection::Skip => "skip",
                Detection::Undetected => {
                    undetected += 1;
                    "undetected"
                }
            };
            text.push_str(&format!("mutation case={} detection={detection}\n", r.case_id));
        }
        text.push_str(&format!("UNDETECTED_MUTATIONS={undetected}\n"));
    }
    let ok = report.is_clean() && report.rejected.is_empty() && undetected == 0;
    let json = json!({ "report": report, "mutation": sweep });
    Ok(Report { text, json, ok })
}
