use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::Args;
use serde::Serialize;

use domlab::constructions::{build_and_verify, ConstructionKind};
use domlab::formulas::evaluate;
use domlab::solver::{solve_min, SolveConfig};
use domlab::{product_instance, Family, ParamKind};

use crate::{node_budget, parse_family, parse_param, print_json, CliError, Format, Status};

#[derive(Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_param)]
    param: ParamKind,
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    n_range: RangeInclusive<usize>,
    /// Inclusive range `C..D`.
    #[arg(long, value_parser = parse_range)]
    m_range: RangeInclusive<usize>,
    /// Compute exact values by search.
    #[arg(long)]
    with_solver: bool,
    /// Build and check the matching explicit construction.
    #[arg(long)]
    with_construction: bool,
    /// Rows computed at once; defaults to the number of CPUs.
    #[arg(long)]
    threads: Option<usize>,
    /// Search nodes allowed per row.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range `A..B`, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range bound `{t}` in `{s}`"))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    family: &'static str,
    param: &'static str,
    n: usize,
    m: usize,
    formula: Option<usize>,
    solver: Option<usize>,
    construction: Option<usize>,
    construction_valid: Option<bool>,
    agree: bool,
    #[serde(skip)]
    solver_note: Option<String>,
}

impl TableRow {
    fn values(&self) -> impl Iterator<Item = usize> {
        [self.formula, self.solver, self.construction].into_iter().flatten()
    }

    fn describe(&self) -> String {
        let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut line = format!(
            "{} {} n={} m={}: formula {}, solver {}",
            self.family,
            self.param,
            self.n,
            self.m,
            show(self.formula),
            self.solver_note.clone().unwrap_or_else(|| show(self.solver)),
        );
        if let Some(size) = self.construction {
            line.push_str(&format!(", construction {size}"));
            if self.construction_valid == Some(false) {
                line.push_str(&format!(" (not a valid {} set)", self.param));
            }
        }
        line
    }
}

fn compute_row(args: &TableArgs, n: usize, m: usize, budget: u64) -> TableRow {
    let formula = evaluate(args.family, args.param, n, m).ok().map(|r| r.value);
    let mut solver = None;
    let mut solver_note = None;
    if args.with_solver {
        match product_instance(args.family, n, m) {
            Ok(g) => {
                let cfg = SolveConfig {
                    node_budget: Some(budget),
                    canonical_certificate: false,
                    ..SolveConfig::default()
                };
                match solve_min(&g, args.param, &cfg) {
                    Ok(r) => solver = Some(r.value),
                    Err(e) => solver_note = Some(format!("unavailable ({e})")),
                }
            }
            Err(e) => solver_note = Some(format!("unavailable ({e})")),
        }
    }
    let (mut construction, mut construction_valid) = (None, None);
    if args.with_construction {
        if let Some(kind) = ConstructionKind::for_instance(args.family, args.param, n, m) {
            let report = build_and_verify(kind, n, m).expect("guard already checked");
            construction = Some(report.set.len());
            construction_valid = report.verdict(args.param).map(|v| v.ok);
        }
    }
    let mut row = TableRow {
        family: args.family.name(),
        param: args.param.name(),
        n,
        m,
        formula,
        solver,
        construction,
        construction_valid,
        agree: false,
        solver_note,
    };
    let mut values = row.values();
    let first = values.next();
    row.agree = values.all(|v| Some(v) == first) && construction_valid != Some(false);
    row
}

pub fn cmd_table(args: &TableArgs) -> Result<Status, CliError> {
    let budget = node_budget(args.budget)?;
    let points: Vec<(usize, usize)> = args
        .n_range
        .clone()
        .flat_map(|n| args.m_range.clone().map(move |m| (n, m)))
        .collect();
    let threads = args
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .max(1);
    let next = AtomicUsize::new(0);
    let rows: Mutex<Vec<TableRow>> = Mutex::new(Vec::with_capacity(points.len()));
    std::thread::scope(|scope| {
        for _ in 0..threads.min(points.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(n, m)) = points.get(i) else { break };
                let row = compute_row(args, n, m, budget);
                rows.lock().unwrap().push(row);
            });
        }
    });
    let mut rows = rows.into_inner().unwrap();
    rows.sort_by_key(|r| (r.n, r.m));

    let agreements = rows.iter().filter(|r| r.agree).count();
    let discrepancies: Vec<&TableRow> = rows.iter().filter(|r| !r.agree).collect();
    let summary = format!(
        "AGREEMENTS {}/{}, DISCREPANCIES {}",
        agreements,
        rows.len(),
        discrepancies.len()
    );
    match args.format {
        Format::Json => {
            for row in &rows {
                print_json(row);
            }
            eprintln!("{summary}");
        }
        Format::Text => {
            print_text(&rows);
            println!("{summary}");
            for row in discrepancies {
                println!("  {}", row.describe());
            }
        }
    }
    Ok(Status::Ok)
}

fn print_text(rows: &[TableRow]) {
    let cell = |v: Option<usize>| v.map_or("—".to_string(), |x| x.to_string());
    println!(
        "{:<13} {:<6} {:>4} {:>4} {:>8} {:>8} {:>13} {:>6}",
        "family", "param", "n", "m", "formula", "solver", "construction", "agree"
    );
    for r in rows {
        let construction = match (r.construction, r.construction_valid) {
            (Some(size), Some(false)) => format!("{size}!"),
            (size, _) => cell(size),
        };
        let solver = match (&r.solver_note, r.solver) {
            (Some(_), _) => "?".to_string(),
            (None, v) => cell(v),
        };
        println!(
            "{:<13} {:<6} {:>4} {:>4} {:>8} {:>8} {:>13} {:>6}",
            r.family,
            r.param,
            r.n,
            r.m,
            cell(r.formula),
            solver,
            construction,
            if r.agree { "yes" } else { "no" }
        );
    }
}
