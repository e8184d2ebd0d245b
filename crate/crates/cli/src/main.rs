use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use strictpoly::homalg::{ext_table, ExtConfig, ExtTable};
use strictpoly::partitions::{blocks, BlockTable, Partition};
use strictpoly::primefield::is_prime;
use strictpoly::schur::SchurCaps;
use strictpoly::symchar::{dim_schur, graded_dim_ai, graded_dim_schur, lr_coeff};
use strictpoly::verify::{self, Report, Status, VerifyConfig};
use strictpoly::wreath::CornerCaps;

#[derive(Parser, Debug)]
#[command(name = "strictpoly", version, about = "Strict polynomial functors over prime fields")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Largest tensor space n^d a Schur algebra may act on.
    #[arg(long, global = true)]
    max_tensor_dim: Option<usize>,
    /// Largest pair table (tensor_dim^2) for the orbit basis.
    #[arg(long, global = true)]
    max_pair_table: Option<usize>,
    /// Largest wreath product for corner algebras.
    #[arg(long, global = true)]
    max_wreath_dim: Option<usize>,
    /// Write output here (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(format!("{e}")),
    }
}

fn prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not a prime"))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partitions of d grouped into p-blocks.
    Blocks {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = prime)]
        p: u32,
    },
    /// dim S_λ(k^n), and with --p/--i the graded dimension of S_λ(k^n ⊗ A_i).
    Dims {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = prime, requires = "i")]
        p: Option<u32>,
        #[arg(long, requires = "p", value_parser = clap::value_parser!(u32).range(1..))]
        i: Option<u32>,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// dim Ext^s(L(p^i λ), L(μ)) for all μ.
    Ext {
        #[arg(long, value_parser = prime)]
        p: u32,
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        smax: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Duality palindromes of Ext tables for basic λ.
    DualityCheck {
        #[arg(long, value_parser = prime)]
        p: u32,
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Graded dimension and palindrome of the corner algebra of λ.
    CyCheck {
        #[arg(long, value_parser = prime)]
        p: u32,
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
        #[arg(long)]
        lambda: Partition,
    },
    /// Cauchy identity and its block decomposition.
    CauchyCheck {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = prime)]
        p: u32,
    },
    /// Which blocks of degree ≤ dmax are basic.
    BasicCensus {
        #[arg(long, value_parser = prime)]
        p: u32,
        #[arg(long)]
        dmax: usize,
    },
    /// Ext^*(L((p^i)), L((p^i))) against A_i.
    Cor56 {
        #[arg(long, value_parser = prime)]
        p: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
    },
}

/// Rendered output plus whether a check failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(cli.out.as_deref(), &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    use strictpoly::Error as E;
    match e.downcast_ref::<E>() {
        Some(err) if err.is_resource_refusal() => 3,
        Some(
            E::PartitionSyntax(_)
            | E::NotPrime(_)
            | E::NotBasic(..)
            | E::InvalidCore { .. }
            | E::TooManyRows { .. }
            | E::WeightMismatch { .. }
            | E::InvalidArgument(_),
        ) => 2,
        _ => 1,
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).context("creating temporary output file")?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn configs(cli: &Cli) -> VerifyConfig {
    let mut caps = SchurCaps::default();
    if let Some(v) = cli.max_tensor_dim {
        caps.max_tensor_dim = v;
    }
    if let Some(v) = cli.max_pair_table {
        caps.max_pair_table = v;
    }
    let mut corner = CornerCaps::default();
    if let Some(v) = cli.max_wreath_dim {
        corner.max_wreath_dim = v;
    }
    VerifyConfig {
        ext: ExtConfig {
            caps,
            ..ExtConfig::default()
        },
        corner,
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let cfg = configs(cli);
    let f = cli.format;
    let report = |r: strictpoly::Result<Report>| -> Result<Output> {
        let r = r?;
        Ok(Output {
            failed: r.status == Status::Fail,
            text: render_report(&r, f)?,
        })
    };
    match &cli.command {
        Command::Blocks { d, p } => Ok(Output::ok(render_blocks(&blocks(*d, *p), f)?)),
        Command::Dims { lambda, n, p, i } => {
            let dim = dim_schur(lambda, *n);
            let graded = match (p, i) {
                (Some(p), Some(i)) => Some(graded_dim_schur(lambda, &graded_dim_ai(*p, *i).copies(*n))),
                _ => None,
            };
            let text = match f {
                Format::Json => json_line(&json!({ "lambda": lambda, "n": n, "dim": dim, "graded_dim": graded }))?,
                Format::Csv => {
                    let mut row = vec![lambda.to_string(), n.to_string(), dim.to_string()];
                    let mut header = vec!["lambda", "n", "dim"];
                    if let Some(g) = &graded {
                        header.push("graded_dim");
                        row.push(g.to_string());
                    }
                    csv_text(&header, &[row])?
                }
                Format::Table => match &graded {
                    Some(g) => format!("{dim}\n{g}\n"),
                    None => format!("{dim}\n"),
                },
            };
            Ok(Output::ok(text))
        }
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coeff(lambda, mu, nu);
            let text = match f {
                Format::Json => json_line(&json!({ "lambda": lambda, "mu": mu, "nu": nu, "coefficient": c }))?,
                Format::Csv => csv_text(
                    &["lambda", "mu", "nu", "coefficient"],
                    &[vec![lambda.to_string(), mu.to_string(), nu.to_string(), c.to_string()]],
                )?,
                Format::Table => format!("{c}\n"),
            };
            Ok(Output::ok(text))
        }
        Command::Ext {
            p,
            d,
            i,
            lambda,
            smax,
            n,
        } => {
            let ext_cfg = ExtConfig {
                n: *n,
                s_max: *smax,
                ..cfg.ext
            };
            let comp = ext_table(lambda, *p, *d, *i, &ext_cfg)?;
            Ok(Output::ok(render_ext(&comp.table, f)?))
        }
        Command::DualityCheck { p, d, i, lambda } => {
            report(verify::duality_experiment(*p, *d, *i, lambda.as_ref(), &cfg))
        }
        Command::CyCheck { p, d, i, lambda } => report(verify::cy_experiment(*p, *d, *i, lambda, &cfg)),
        Command::CauchyCheck { n, m, d, p } => report(verify::cauchy_experiment(*n, *m, *d, *p)),
        Command::BasicCensus { p, dmax } => report(verify::basic_census(*p, *dmax)),
        Command::Cor56 { p, i } => report(verify::cor56_experiment(*p, *i, &cfg)),
    }
}

fn json_line<T: serde::Serialize + ?Sized>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Left-aligned columns separated by two spaces.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn render_blocks(t: &BlockTable, f: Format) -> Result<String> {
    let rows: Vec<(String, Vec<String>, bool)> = t
        .cores()
        .into_iter()
        .map(|c| {
            let fiber = t.fiber(c).unwrap_or_default().iter().map(Partition::to_string).collect();
            (c.to_string(), fiber, t.is_basic_block(c))
        })
        .collect();
    match f {
        Format::Json => {
            let blocks: Vec<Value> = rows
                .iter()
                .map(|(c, fib, b)| json!({ "core": c, "fiber": fib, "basic": b }))
                .collect();
            json_line(&json!({ "p": t.p, "d": t.d, "blocks": blocks }))
        }
        Format::Csv => csv_text(
            &["core", "fiber", "basic"],
            &rows
                .iter()
                .map(|(c, fib, b)| vec![c.clone(), fib.join(" "), b.to_string()])
                .collect::<Vec<_>>(),
        ),
        Format::Table => Ok(aligned(
            &["core", "fiber", "basic"],
            &rows
                .iter()
                .map(|(c, fib, b)| vec![c.clone(), fib.join(" "), if *b { "yes" } else { "no" }.into()])
                .collect::<Vec<_>>(),
        )),
    }
}

fn render_ext(t: &ExtTable, f: Format) -> Result<String> {
    let header: Vec<String> = std::iter::once("mu".to_string())
        .chain((0..=t.s_max()).map(|s| format!("s{s}")))
        .collect();
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| {
            std::iter::once(r.mu.to_string())
                .chain(r.dims.iter().map(usize::to_string))
                .collect()
        })
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    match f {
        Format::Json => json_line(t),
        Format::Csv => csv_text(&header, &rows),
        Format::Table => Ok(format!(
            "Ext^s(L({}), L(mu)), duality degree {}\n{}",
            strictpoly::schur::twist_label(&t.lambda, t.p, t.i),
            t.duality_degree,
            aligned(&header, &rows)
        )),
    }
}

fn render_report(r: &Report, f: Format) -> Result<String> {
    let rows: Vec<Vec<String>> = r
        .assertions
        .iter()
        .map(|a| {
            vec![
                if a.pass { "pass" } else { "FAIL" }.to_string(),
                a.name.clone(),
                a.lhs.to_string(),
                a.rhs.to_string(),
            ]
        })
        .collect();
    match f {
        Format::Json => json_line(r),
        Format::Csv => csv_text(&["pass", "name", "lhs", "rhs"], &rows),
        Format::Table => {
            let status = serde_json::to_value(r.status)?;
            let mut out = format!(
                "{}: {} ({} ms)\n",
                r.experiment,
                status.as_str().unwrap_or_default(),
                r.elapsed_ms
            );
            if let Some(note) = &r.note {
                out.push_str(&format!("{note}\n"));
            }
            if !rows.is_empty() {
                out.push_str(&aligned(&["", "assertion", "lhs", "rhs"], &rows));
            }
            Ok(out)
        }
    }
}
