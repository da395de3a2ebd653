//! The `table` command: regenerates the tables of dimensions, traces and
//! sign-split dimensions for all levels up to a bound.

use std::fmt::Write as _;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use newform_trace::arith::{factor, format_rat, nstar, Factored};
use newform_trace::dimension::dim_newform;
use newform_trace::eigensplit::d_table;
use newform_trace::hecke_trace::trace_newform;
use newform_trace::{Result, TraceQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    /// `dim S_k^0(N)`.
    Dims,
    /// `tr T(2)` on `S_k^0(N)`.
    Trace2,
    /// `tr T(3)` on `S_k^0(N)`.
    Trace3,
    /// `tr T(l)` on `S_k^0(N)` for `l >= 5` with `(l, N//l) = 1` and `(l, N) > 2 sqrt(l)`.
    #[value(name = "traceL")]
    #[serde(rename = "traceL")]
    TraceL,
    /// `d_k(N; i) = dim S_k^0(N; i) - [k = 2][i = 1] mu(N)`.
    Dtables,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One row: its key and one exact value per weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub level: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hecke: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub class: Option<u64>,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub table: Which,
    pub weights: Vec<u32>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Copy)]
struct Key {
    level: u64,
    hecke: Option<u64>,
    class: Option<u64>,
}

fn f(n: u64) -> Result<Factored> {
    factor(n)
}

fn keys(which: Which, max_level: u64) -> Result<Vec<Key>> {
    let plain = |level, hecke| Key {
        level,
        hecke,
        class: None,
    };
    let mut out = Vec::new();
    match which {
        Which::Dims => out.extend((1..=max_level).map(|n| plain(n, None))),
        Which::Trace2 => out.extend((1..=max_level).map(|n| plain(n, Some(2)))),
        Which::Trace3 => out.extend((1..=max_level).map(|n| plain(n, Some(3)))),
        Which::TraceL => {
            for l in 5..=max_level {
                let lf = f(l)?;
                if !lf.is_squarefree() {
                    continue;
                }
                for n in 1..=max_level {
                    let nf = f(n)?;
                    let g = lf.gcd(&nf).value();
                    if lf.coprime_to(&nf.exclusive_quotient(&lf)) && g * g > 4 * l {
                        out.push(plain(n, Some(l)));
                    }
                }
            }
        }
        Which::Dtables => {
            for n in 1..=max_level {
                for i in nstar(&f(n)?).divisors() {
                    out.push(Key {
                        level: n,
                        hecke: None,
                        class: Some(i),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The value of one cell, as written in every output format.
pub fn cell(
    which: Which,
    level: u64,
    hecke: Option<u64>,
    class: Option<u64>,
    k: u32,
) -> Result<String> {
    let nf = f(level)?;
    Ok(match which {
        Which::Dims => dim_newform(k, &nf)?.to_string(),
        Which::Trace2 | Which::Trace3 | Which::TraceL => {
            let l = match (which, hecke) {
                (Which::Trace2, _) => 2,
                (Which::Trace3, _) => 3,
                (_, Some(l)) => l,
                _ => {
                    return Err(newform_trace::Error::InvalidInput(
                        "row without Hecke index".into(),
                    ))
                }
            };
            format_rat(&trace_newform(&TraceQuery::new(k, level, l)?)?)
        }
        Which::Dtables => {
            let i = class
                .ok_or_else(|| newform_trace::Error::InvalidInput("row without class".into()))?;
            d_table(k, &nf, &f(i)?)?.to_string()
        }
    })
}

/// Builds the table, evaluating rows in parallel and keeping their order.
pub fn build(which: Which, max_level: u64, weights: &[u32]) -> Result<Table> {
    let rows = keys(which, max_level)?
        .into_par_iter()
        .map(|key| {
            let values = weights
                .iter()
                .map(|&k| cell(which, key.level, key.hecke, key.class, k))
                .collect::<Result<Vec<_>>>()?;
            Ok(Row {
                level: key.level,
                hecke: key.hecke,
                class: key.class,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        table: which,
        weights: weights.to_vec(),
        rows,
    })
}

fn key_headers(which: Which) -> Vec<&'static str> {
    match which {
        Which::Dims | Which::Trace2 | Which::Trace3 => vec!["N"],
        Which::TraceL => vec!["l", "N"],
        Which::Dtables => vec!["N", "i"],
    }
}

fn key_fields(which: Which, row: &Row) -> Vec<String> {
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    match which {
        Which::Dims | Which::Trace2 | Which::Trace3 => vec![row.level.to_string()],
        Which::TraceL => vec![opt(row.hecke), row.level.to_string()],
        Which::Dtables => vec![row.level.to_string(), opt(row.class)],
    }
}

fn headers(table: &Table) -> Vec<String> {
    key_headers(table.table)
        .into_iter()
        .map(String::from)
        .chain(table.weights.iter().map(|k| format!("k={k}")))
        .collect()
}

fn records(table: &Table) -> Vec<Vec<String>> {
    table
        .rows
        .iter()
        .map(|row| {
            let mut rec = key_fields(table.table, row);
            rec.extend(row.values.iter().cloned());
            rec
        })
        .collect()
}

fn title(which: Which) -> &'static str {
    match which {
        Which::Dims => "dim S_k^0(N)",
        Which::Trace2 => "tr(T(2) | S_k^0(N))",
        Which::Trace3 => "tr(T(3) | S_k^0(N))",
        Which::TraceL => "tr(T(l) | S_k^0(N)), (l, N//l) = 1, (l, N) > 2 sqrt(l)",
        Which::Dtables => "d_k(N; i) = dim S_k^0(N; i) - [k = 2][i = 1] mu(N)",
    }
}

pub fn render(table: &Table, format: Format) -> std::result::Result<String, String> {
    match format {
        Format::Text => Ok(render_text(table)),
        Format::Csv => render_csv(table).map_err(|e| e.to_string()),
        Format::Json => serde_json::to_string_pretty(table)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
    }
}

fn render_text(table: &Table) -> String {
    let head = headers(table);
    let body = records(table);
    let widths: Vec<usize> = (0..head.len())
        .map(|c| {
            body.iter()
                .map(|r| r[c].len())
                .chain([head[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "# {}", title(table.table));
    let _ = writeln!(out, "{}", line(&head));
    for rec in &body {
        let _ = writeln!(out, "{}", line(rec));
    }
    out
}

fn render_csv(table: &Table) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers(table))?;
    for rec in records(table) {
        w.write_record(rec)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// A weight list as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights(pub Vec<u32>);

impl Weights {
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        parse_weights(s).map(Weights)
    }
}

/// Parses `2..24` (even weights, inclusive) or a comma list such as `2,4,12`.
pub fn parse_weights(s: &str) -> std::result::Result<Vec<u32>, String> {
    let weights: Vec<u32> = if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a
            .trim()
            .parse()
            .map_err(|_| format!("bad weight range {s:?}"))?;
        let b: u32 = b
            .trim()
            .parse()
            .map_err(|_| format!("bad weight range {s:?}"))?;
        (a..=b).filter(|k| k % 2 == 0).collect()
    } else {
        s.split(',')
            .map(|k| k.trim().parse().map_err(|_| format!("bad weight {k:?}")))
            .collect::<std::result::Result<_, _>>()?
    };
    if weights.is_empty() {
        return Err(format!("no weights in {s:?}"));
    }
    if let Some(k) = weights.iter().find(|&&k| k < 2 || k % 2 == 1) {
        return Err(format!("weight must be even and at least 2, got {k}"));
    }
    Ok(weights)
}
