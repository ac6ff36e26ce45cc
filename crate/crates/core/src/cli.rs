//! Command-line front end.
//!
//! Every command prints one record: JSON with sorted keys and every float
//! written with 17 significant digits, or CSV with shortest round-trip
//! floats. Exit status is 0 on success, 1 on a usage or validation error,
//! and 2 when the series was refused or failed and the oracle answer was
//! printed in its place.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::eos::{self, EquilibriumResult, LandauParams, SweepCell, SweepGrid};
use crate::oracle::{find_all_roots, OracleConfig};
use crate::poly::{DepressedQuintic, PrincipalQuintic, RootSet};
use crate::series::{
    convergence_margin, passare_tsikh_root, trinomial_root, trinomial_root_printed, SeriesResult, Trinomial,
    DEFAULT_MAX_SHELLS, DEFAULT_MAX_TERMS, DEFAULT_REL_TOL,
};
use crate::tschirnhaus::{solve_pipeline, PipelineOptions, PipelineReport};

pub const SCHEMA_VERSION: &str = "1";

/// Environment variable that replaces the default shell budget.
pub const MAX_SHELLS_ENV: &str = "QUINTIC_MAX_SHELLS";

pub const SWEEP_CSV_HEADER: &str = "a,f,u_eq,method,margin,terms_used,residual,degenerate";

#[derive(Debug, Parser)]
#[command(name = "quintic", version, about = "Series solutions of quintic equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root of B x^5 + A x^2 + x + 1 = 0 from the double series.
    SolvePrincipal(PrincipalArgs),
    /// All roots of x^5 + a3 x^3 + a1 x + a0 = 0 through the reduction pipeline.
    SolveDepressed(DepressedArgs),
    /// Root of 1 + x^m + a x^n = 0 from the trinomial series.
    SolveTrinomial(TrinomialArgs),
    /// Landau equation of state a u + b u^3 + c u^5 = f.
    Eos {
        #[command(subcommand)]
        command: EosCommand,
    },
}

#[derive(Debug, Args)]
pub struct PrincipalArgs {
    #[arg(long = "A", value_name = "RE[,IM]", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Complex64,
    #[arg(long = "B", value_name = "RE[,IM]", value_parser = parse_complex, allow_hyphen_values = true)]
    pub b: Complex64,
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    pub rel_tol: f64,
    /// Defaults to $QUINTIC_MAX_SHELLS, then 500.
    #[arg(long)]
    pub max_shells: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DepressedArgs {
    #[arg(long, value_name = "RE[,IM]", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a3: Complex64,
    #[arg(long, value_name = "RE[,IM]", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a1: Complex64,
    #[arg(long, value_name = "RE[,IM]", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a0: Complex64,
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    pub rel_tol: f64,
    /// Defaults to $QUINTIC_MAX_SHELLS, then 500.
    #[arg(long)]
    pub max_shells: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TrinomialArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_name = "RE[,IM]", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Complex64,
    /// Which m-th root of -1 the series starts from.
    #[arg(long, default_value_t = 0)]
    pub branch: u32,
    /// Sum the commonly printed gamma-ratio coefficients instead; these only
    /// give a root for m = 1.
    #[arg(long, alias = "verbatim-eq15")]
    pub verbatim: bool,
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum EosCommand {
    /// Equilibrium order parameter at one parameter point.
    Solve(EosSolveArgs),
    /// Equilibria over an (a, f) grid, a outer and f inner.
    Sweep(EosSweepArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EosSolveArgs {
    /// Quadratic coefficient; alternatively give --temperature and --t-c.
    #[arg(long, required_unless_present = "temperature", conflicts_with = "temperature")]
    pub a: Option<f64>,
    /// Temperature T, turned into a = slope (T - T_c).
    #[arg(long, requires = "t_c")]
    pub temperature: Option<f64>,
    #[arg(long)]
    pub t_c: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub slope: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long)]
    pub c: f64,
    #[arg(long)]
    pub f: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EosSweepArgs {
    #[arg(long)]
    pub a_min: f64,
    #[arg(long)]
    pub a_max: f64,
    #[arg(long)]
    pub a_steps: usize,
    #[arg(long)]
    pub f_min: f64,
    #[arg(long)]
    pub f_max: f64,
    #[arg(long)]
    pub f_steps: usize,
    #[arg(long)]
    pub b: f64,
    #[arg(long)]
    pub c: f64,
    /// Write the table here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Parses `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parse = |part: &str| -> Result<f64, String> {
        let v: f64 = part.parse().map_err(|_| format!("`{part}` is not a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("`{part}` is not finite"))
        }
    };
    match s.split_once(',') {
        None => Ok(Complex64::new(parse(s)?, 0.0)),
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
    }
}

/// Serializes `value` with keys in sorted order, two-space indentation and
/// every float as `d.dddddddddddddddde±x` (17 significant digits), so that
/// parsing and re-serializing reproduces the same bytes.
pub fn to_canonical_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.push_str(&"  ".repeat(d));
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_u64(), n.as_i64(), n.as_f64()) {
            (Some(u), _, _) => write!(out, "{u}").unwrap(),
            (None, Some(i), _) => write!(out, "{i}").unwrap(),
            (_, _, Some(f)) => write!(out, "{f:.16e}").unwrap(),
            _ => unreachable!("serde_json numbers are u64, i64 or f64"),
        },
        Value::String(s) => out.push_str(&serde_json::to_string(s).expect("strings serialize")),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, key) in keys.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&serde_json::to_string(key).expect("strings serialize"));
                out.push_str(": ");
                write_value(out, &map[*key], depth + 1);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

fn pair(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

fn opt_pair(z: Option<Complex64>) -> Value {
    z.map_or(Value::Null, pair)
}

fn pairs(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|&z| pair(z)).collect())
}

fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

fn series_json(s: &SeriesResult) -> Value {
    json!({
        "root": pair(s.value),
        "terms_used": s.terms_used,
        "converged": s.converged,
        "last_term_magnitude": num(s.last_term_magnitude),
    })
}

fn root_set_json(set: &RootSet) -> Value {
    json!({
        "roots": pairs(&set.roots),
        "residuals": nums(&set.residuals),
        "method": set.method.as_str(),
    })
}

/// What a command produced before it is rendered.
struct Outcome {
    command: &'static str,
    inputs: Value,
    results: Value,
    /// Rows for `--format csv`, header first.
    csv: Vec<String>,
    exit: i32,
}

fn record(outcome: &Outcome, elapsed_ms: f64) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": outcome.command,
        "inputs": outcome.inputs,
        "results": outcome.results,
        "timing_ms": num(elapsed_ms),
    })
}

fn max_shells_default() -> Result<usize, String> {
    match std::env::var(MAX_SHELLS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{MAX_SHELLS_ENV}={v} is not a positive integer")),
        Err(_) => Ok(DEFAULT_MAX_SHELLS),
    }
}

fn check_rel_tol(rel_tol: f64) -> Result<(), String> {
    if rel_tol > 0.0 && rel_tol.is_finite() {
        Ok(())
    } else {
        Err(format!("--rel-tol must be positive, got {rel_tol}"))
    }
}

fn csv_root_rows(rows: &mut Vec<String>, source: &str, roots: &[Complex64], residuals: &[f64]) {
    for (i, (z, r)) in roots.iter().zip(residuals).enumerate() {
        rows.push(format!("{source},{i},{},{},{r}", z.re, z.im));
    }
}

const ROOT_CSV_HEADER: &str = "source,index,re,im,residual";

fn cmd_solve_principal(args: &PrincipalArgs) -> Result<Outcome, String> {
    check_rel_tol(args.rel_tol)?;
    let max_shells = match args.max_shells {
        Some(n) => n,
        None => max_shells_default()?,
    };
    let quintic = PrincipalQuintic::new(args.a, args.b);
    let poly = quintic.to_poly();
    let margin = convergence_margin(&quintic);
    let inside = margin < 0.0;
    // On the boundary the series is still attempted; at the origin it is
    // exactly -1, elsewhere the stopping rule decides.
    let series = if margin <= 0.0 {
        Some(passare_tsikh_root(&quintic, args.rel_tol, max_shells))
    } else {
        None
    };
    let oracle = find_all_roots(&poly, &OracleConfig::default()).map_err(|e| format!("oracle failed: {e}"))?;

    let mut results = Map::new();
    results.insert("convergence_margin".into(), num(margin));
    results.insert("inside_domain".into(), json!(inside));
    results.insert("oracle".into(), root_set_json(&oracle));
    let (method, exit, series_error, matched) = match &series {
        Some(Ok(s)) => {
            let (index, distance) = nearest(&oracle.roots, s.value);
            results.insert("series".into(), series_json(s));
            results.insert("series_residual".into(), num(poly.residual(s.value)));
            results.insert("match_distance".into(), num(distance));
            ("series", 0, None, Some(index))
        }
        Some(Err(e)) => ("oracle", 2, Some(e.to_string()), None),
        None => ("oracle", 2, Some("outside the convergence domain".to_string()), None),
    };
    results.entry("series").or_insert(Value::Null);
    results.insert("series_error".into(), series_error.map_or(Value::Null, Value::String));
    results.insert("matched_oracle_index".into(), matched.map_or(Value::Null, |i| json!(i)));
    results.insert("method".into(), json!(method));

    let mut csv = vec![ROOT_CSV_HEADER.to_string()];
    if let Some(Ok(s)) = &series {
        csv_root_rows(&mut csv, "series", &[s.value], &[poly.residual(s.value)]);
    }
    csv_root_rows(&mut csv, "oracle", &oracle.roots, &oracle.residuals);

    Ok(Outcome {
        command: "solve-principal",
        inputs: json!({
            "A": pair(args.a),
            "B": pair(args.b),
            "rel_tol": num(args.rel_tol),
            "max_shells": max_shells,
        }),
        results: Value::Object(results),
        csv,
        exit,
    })
}

fn nearest(roots: &[Complex64], z: Complex64) -> (usize, f64) {
    roots
        .iter()
        .enumerate()
        .map(|(i, r)| (i, (r - z).norm()))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("a quintic has roots")
}

fn pipeline_json(r: &PipelineReport) -> Value {
    let map = r.map.map_or(Value::Null, |m| {
        json!({
            "alpha": pair(m.alpha),
            "beta": pair(m.beta),
            "b2": pair(m.b2),
            "b1": pair(m.b1),
            "b0": pair(m.b0),
            "identity": m.identity,
        })
    });
    let scaled = r.scaled.map_or(Value::Null, |s| {
        json!({ "A": pair(s.quintic.a), "B": pair(s.quintic.b), "scale": pair(s.scale) })
    });
    let d = &r.diagnostics;
    json!({
        "map": map,
        "scaled": scaled,
        "convergence_margin": opt_num(r.margin),
        "series": r.series_root.as_ref().map_or(Value::Null, series_json),
        "principal_roots": pairs(&r.principal_roots),
        "roots": pairs(&r.recovered_roots.roots),
        "residuals": nums(&r.recovered_roots.residuals),
        "method": if r.series_path() { "pipeline" } else { "oracle" },
        "fallback_used": r.fallback_used,
        "fallback_reason": r.fallback_reason.as_ref().map_or(Value::Null, |f| json!(f.to_string())),
        "diagnostics": {
            "principality_defect": opt_num(d.principality_defect),
            "deflation_residual": opt_num(d.deflation_residual),
            "quartic_max_residual": opt_num(d.quartic_max_residual),
            "principal_max_residual": opt_num(d.principal_max_residual),
            "max_pullback_residual": opt_num(d.max_pullback_residual),
            "oracle_match_distance": opt_num(d.oracle_match_distance),
            "printed_alpha": opt_pair(d.printed_alpha),
            "printed_beta": opt_pair(d.printed_beta),
        },
    })
}

fn cmd_solve_depressed(args: &DepressedArgs) -> Result<Outcome, String> {
    check_rel_tol(args.rel_tol)?;
    let max_shells = match args.max_shells {
        Some(n) => n,
        None => max_shells_default()?,
    };
    let q = DepressedQuintic::new(args.a3, args.a1, args.a0);
    let opts = PipelineOptions {
        rel_tol: args.rel_tol,
        max_shells,
        ..Default::default()
    };
    let report = solve_pipeline(&q, &opts);
    let mut csv = vec![ROOT_CSV_HEADER.to_string()];
    let source = if report.series_path() { "pipeline" } else { "oracle" };
    csv_root_rows(&mut csv, source, &report.recovered_roots.roots, &report.recovered_roots.residuals);
    Ok(Outcome {
        command: "solve-depressed",
        inputs: json!({
            "a3": pair(args.a3),
            "a1": pair(args.a1),
            "a0": pair(args.a0),
            "rel_tol": num(args.rel_tol),
            "max_shells": max_shells,
        }),
        results: pipeline_json(&report),
        csv,
        exit: if report.fallback_used { 2 } else { 0 },
    })
}

fn cmd_solve_trinomial(args: &TrinomialArgs) -> Result<Outcome, String> {
    check_rel_tol(args.rel_tol)?;
    let t = Trinomial::new(args.m, args.n, args.a, args.branch).map_err(|e| e.to_string())?;
    let poly = t.to_poly();
    let series = if args.verbatim {
        trinomial_root_printed(&t, args.rel_tol, args.max_terms)
    } else {
        trinomial_root(&t, args.rel_tol, args.max_terms)
    };
    let oracle = find_all_roots(&poly, &OracleConfig::default()).map_err(|e| format!("oracle failed: {e}"))?;

    let mut results = Map::new();
    results.insert("epsilon".into(), pair(t.epsilon()));
    results.insert("radius".into(), num(crate::series::trinomial_radius(args.m, args.n)));
    results.insert("form".into(), json!(if args.verbatim { "printed" } else { "repaired" }));
    results.insert("oracle".into(), root_set_json(&oracle));
    let mut csv = vec![ROOT_CSV_HEADER.to_string()];
    let exit = match &series {
        Ok(s) => {
            let (index, distance) = nearest(&oracle.roots, s.value);
            let residual = poly.residual(s.value);
            results.insert("series".into(), series_json(s));
            results.insert("series_residual".into(), num(residual));
            results.insert("series_error".into(), Value::Null);
            results.insert("matched_oracle_index".into(), json!(index));
            results.insert("match_distance".into(), num(distance));
            results.insert("method".into(), json!("series"));
            csv_root_rows(&mut csv, "series", &[s.value], &[residual]);
            0
        }
        Err(e) => {
            results.insert("series".into(), Value::Null);
            results.insert("series_error".into(), json!(e.to_string()));
            results.insert("matched_oracle_index".into(), Value::Null);
            results.insert("method".into(), json!("oracle"));
            2
        }
    };
    csv_root_rows(&mut csv, "oracle", &oracle.roots, &oracle.residuals);
    Ok(Outcome {
        command: "solve-trinomial",
        inputs: json!({
            "m": args.m,
            "n": args.n,
            "a": pair(args.a),
            "branch": args.branch,
            "verbatim": args.verbatim,
            "rel_tol": num(args.rel_tol),
            "max_terms": args.max_terms,
        }),
        results: Value::Object(results),
        csv,
        exit,
    })
}

fn equilibrium_json(p: &LandauParams, r: &EquilibriumResult) -> Value {
    let stationary: Vec<Value> = r
        .all_stationary
        .iter()
        .map(|s| json!({ "u": num(s.u), "free_energy": num(s.free_energy), "stable": s.stable }))
        .collect();
    json!({
        "u_eq": num(r.u_eq),
        "free_energy": num(eos::free_energy(p, r.u_eq)),
        "residual": num(p.state_residual(r.u_eq).abs()),
        "all_stationary": stationary,
        "minimizers": nums(&r.minimizers()),
        "method": r.method.as_str(),
        "degenerate": r.degenerate,
        "convergence_margin": opt_num(r.margin),
        "terms_used": r.terms_used.map_or(Value::Null, |t| json!(t)),
    })
}

fn opts_from_env() -> Result<PipelineOptions, String> {
    Ok(PipelineOptions {
        max_shells: max_shells_default()?,
        ..Default::default()
    })
}

fn cmd_eos_solve(args: &EosSolveArgs) -> Result<Outcome, String> {
    let a = match (args.a, args.temperature, args.t_c) {
        (Some(a), _, _) => a,
        (None, Some(t), Some(t_c)) => eos::landau_a(args.slope, t, t_c),
        _ => return Err("give --a, or --temperature with --t-c".into()),
    };
    let p = LandauParams::new(a, args.b, args.c, args.f);
    let r = eos::equilibrium_with(&p, &opts_from_env()?).map_err(|e| e.to_string())?;
    let csv = vec![
        SWEEP_CSV_HEADER.to_string(),
        sweep_row(&SweepCell {
            params: p,
            result: Ok(r.clone()),
        }),
    ];
    Ok(Outcome {
        command: "eos solve",
        inputs: json!({ "a": num(a), "b": num(args.b), "c": num(args.c), "f": num(args.f) }),
        results: equilibrium_json(&p, &r),
        csv,
        exit: 0,
    })
}

fn sweep_row(cell: &SweepCell) -> String {
    let p = &cell.params;
    match &cell.result {
        Ok(r) => format!(
            "{},{},{},{},{},{},{},{}",
            p.a,
            p.f,
            r.u_eq,
            r.method.as_str(),
            r.margin.map_or(String::new(), |m| m.to_string()),
            r.terms_used.map_or(String::new(), |t| t.to_string()),
            cell.residual().expect("cell has a result"),
            r.degenerate,
        ),
        Err(_) => format!("{},{},,error,,,,", p.a, p.f),
    }
}

fn cmd_eos_sweep(args: &EosSweepArgs) -> Result<(Outcome, Option<PathBuf>), String> {
    let grid = SweepGrid {
        a_min: args.a_min,
        a_max: args.a_max,
        a_steps: args.a_steps,
        f_min: args.f_min,
        f_max: args.f_max,
        f_steps: args.f_steps,
        b: args.b,
        c: args.c,
    };
    let cells = eos::sweep_with(&grid, &opts_from_env()?).map_err(|e| e.to_string())?;
    let mut csv = vec![SWEEP_CSV_HEADER.to_string()];
    csv.extend(cells.iter().map(sweep_row));
    let json_cells: Vec<Value> = cells
        .iter()
        .map(|cell| {
            let p = &cell.params;
            match &cell.result {
                Ok(r) => {
                    let mut v = equilibrium_json(p, r);
                    v["a"] = num(p.a);
                    v["f"] = num(p.f);
                    v["error"] = Value::Null;
                    v
                }
                Err(e) => json!({ "a": num(p.a), "f": num(p.f), "error": e.to_string() }),
            }
        })
        .collect();
    let outcome = Outcome {
        command: "eos sweep",
        inputs: json!({
            "a_min": num(args.a_min),
            "a_max": num(args.a_max),
            "a_steps": args.a_steps,
            "f_min": num(args.f_min),
            "f_max": num(args.f_max),
            "f_steps": args.f_steps,
            "b": num(args.b),
            "c": num(args.c),
        }),
        results: json!({ "cells": json_cells }),
        csv,
        exit: 0,
    };
    Ok((outcome, args.out.clone()))
}

/// Parses `args` (program name first) and runs the command, writing the
/// record to `out` and diagnostics to `err`. Returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };

    let start = Instant::now();
    let (result, format, path) = match &cli.command {
        Command::SolvePrincipal(a) => (cmd_solve_principal(a), a.format, None),
        Command::SolveDepressed(a) => (cmd_solve_depressed(a), a.format, None),
        Command::SolveTrinomial(a) => (cmd_solve_trinomial(a), a.format, None),
        Command::Eos {
            command: EosCommand::Solve(a),
        } => (cmd_eos_solve(a), a.format, None),
        Command::Eos {
            command: EosCommand::Sweep(a),
        } => match cmd_eos_sweep(a) {
            Ok((o, path)) => (Ok(o), a.format, path),
            Err(e) => (Err(e), a.format, None),
        },
    };
    let outcome = match result {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let text = match format {
        Format::Json => to_canonical_json(&record(&outcome, elapsed_ms)),
        Format::Csv => outcome.csv.join("\n") + "\n",
    };
    if outcome.exit == 2 {
        let _ = writeln!(err, "warning: series not used; oracle roots reported");
    }
    let written = match path {
        Some(path) => std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return 1;
    }
    outcome.exit
}

/// [`run_with`] on the process's own arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
