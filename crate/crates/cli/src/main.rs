use std::fmt;
use std::io::{self, Read};

use clap::{Parser, Subcommand, ValueEnum};

use eqq_core::basis;
use eqq_core::diagram;
use eqq_core::element::{Element, QMonomial};
use eqq_core::error::EqqError;
use eqq_core::expr::{self, Value};
use eqq_core::grading::{self, Grading};
use eqq_core::grassmann;
use eqq_core::hpoint::HElem;
use eqq_core::render;
use eqq_core::restrict;
use eqq_core::rewrite::{self, Zeta};
use eqq_core::space::Space;

mod cache;
mod checks;
mod config;

use cache::CacheSession;

#[derive(Parser)]
#[command(
    name = "eqq",
    version,
    about = "Exact calculator for C2-equivariant cohomology rings of quadrics, projective spaces, and the 2-plane Grassmannian"
)]
struct Cli {
    /// Ambient space: quadric:<p>, proj:<p>|<q>, or grass
    #[arg(long, global = true, value_name = "SPACE")]
    space: Option<String>,

    /// Coset index for basis listings
    #[arg(long, global = true, value_name = "N", allow_negative_numbers = true)]
    coset: Option<i64>,

    /// Output format (svg applies to diagram only)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Ignore the persisted product-table cache
    #[arg(long, global = true)]
    no_cache: bool,

    /// Include step-by-step detail where available
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Copy, Clone, ValueEnum)]
enum ZetaArg {
    Z0,
    Z1,
}

impl From<ZetaArg> for Zeta {
    fn from(z: ZetaArg) -> Zeta {
        match z {
            ZetaArg::Z0 => Zeta::Z0,
            ZetaArg::Z1 => Zeta::Z1,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum DiagramKind {
    Ro2Basis,
    HpointChart,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression and print its normal form
    Normalize {
        /// Expression, or - to read it from stdin
        expr: String,
    },
    /// Multiply two expressions and print the normal form of the product
    Mul {
        lhs: String,
        rhs: String,
    },
    /// List the basis cells of one coset with their gradings
    Basis,
    /// List the rank/twist lattice of basis cells
    Ro2Basis,
    /// Print the grading of a homogeneous expression
    Grading {
        expr: String,
    },
    /// Map an expression to the underlying nonequivariant ring
    Restrict {
        expr: String,
    },
    /// Map an expression to the fixed-point ring
    Fixed {
        expr: String,
    },
    /// Divide an expression by a power of z0 or z1
    Divide {
        expr: String,
        /// Which Euler class to divide by
        #[arg(long, value_enum)]
        zeta: ZetaArg,
        /// Exponent of the divisor
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Verify the ring identity suite for the active space
    CheckIdentities,
    /// Count the 27 lines on a cubic surface equivariantly
    Lines27,
    /// Draw a lattice diagram
    Diagram {
        #[arg(long, value_enum)]
        kind: DiagramKind,
    },
}

enum CliError {
    Usage(String),
    Engine(EqqError),
    Io(io::Error),
}

impl From<EqqError> for CliError {
    fn from(e: EqqError) -> CliError {
        CliError::Engine(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Engine(e) => engine_code(e),
            CliError::Io(_) => 4,
        }
    }
}

fn engine_code(e: &EqqError) -> i32 {
    match e {
        EqqError::Parse { .. } => 2,
        EqqError::UnknownGenerator(_)
        | EqqError::OutOfScopeRegion { .. }
        | EqqError::NotDivisible { .. }
        | EqqError::Parity { .. }
        | EqqError::SpaceMismatch { .. }
        | EqqError::NotHomogeneous(..)
        | EqqError::AmbiguousGrading(_)
        | EqqError::InconsistentTargets
        | EqqError::IndexRange { .. } => 3,
        EqqError::InternalNonTerminating(_)
        | EqqError::InternalStuck(_)
        | EqqError::InternalNonDivisible(_) => 4,
    }
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 1 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.code()
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let cfg = config::load();
    let format = resolve_format(&cli, &cfg)?;
    let space = match cli.space.as_deref().or(cfg.space.as_deref()) {
        Some(text) => Some(text.parse::<Space>().map_err(CliError::Engine)?),
        None => None,
    };
    if format == Format::Svg && !matches!(cli.cmd, Cmd::Diagram { .. }) {
        return Err(CliError::Usage(
            "svg output is only available for diagram".to_string(),
        ));
    }

    match &cli.cmd {
        Cmd::Normalize { expr } => {
            let src = read_expr(expr, &mut false)?;
            let value = expr::eval(&src, space)?;
            Ok(match format {
                Format::Text => format!("{}\n", value_text(&value)),
                _ => pretty(value_json(&value)),
            })
        }
        Cmd::Mul { lhs, rhs } => {
            let mut used_stdin = false;
            let lhs = read_expr(lhs, &mut used_stdin)?;
            let rhs = read_expr(rhs, &mut used_stdin)?;
            let src = format!("({lhs}) * ({rhs})");
            let value = expr::eval(&src, space)?;
            Ok(match format {
                Format::Text => format!("{}\n", value_text(&value)),
                _ => pretty(value_json(&value)),
            })
        }
        Cmd::Basis => {
            let sp = need_space(space)?;
            let n = cli
                .coset
                .ok_or_else(|| CliError::Usage("basis needs --coset".to_string()))?;
            let cells = basis::basis(sp, n);
            match format {
                Format::Text => {
                    let mut out = String::new();
                    for cell in &cells {
                        out.push_str(&format!(
                            "{}  @  {}\n",
                            cell_text(sp, cell),
                            cell.grading(sp)
                        ));
                    }
                    Ok(out)
                }
                _ => {
                    let cells: Vec<serde_json::Value> = cells
                        .iter()
                        .map(|cell| {
                            serde_json::json!({
                                "text": cell_text(sp, cell),
                                "monomial": render::JsonMonomial::from(cell),
                                "grading": json_grading(cell.grading(sp)),
                            })
                        })
                        .collect();
                    Ok(pretty(serde_json::json!({
                        "space": sp.to_string(),
                        "coset": n,
                        "cells": cells,
                    })))
                }
            }
        }
        Cmd::Ro2Basis => {
            let sp = need_space(space)?;
            let cells = basis::ro2_basis(sp)?;
            match format {
                Format::Text => {
                    let mut out = String::new();
                    for (cell, (u, s)) in &cells {
                        out.push_str(&format!("{}  @  ({u}, {s})\n", cell_text(sp, cell)));
                    }
                    Ok(out)
                }
                _ => {
                    let cells: Vec<serde_json::Value> = cells
                        .iter()
                        .map(|(cell, (u, s))| {
                            serde_json::json!({
                                "text": cell_text(sp, cell),
                                "monomial": render::JsonMonomial::from(cell),
                                "position": {"u": u, "s": s},
                            })
                        })
                        .collect();
                    Ok(pretty(serde_json::json!({
                        "space": sp.to_string(),
                        "cells": cells,
                    })))
                }
            }
        }
        Cmd::Grading { expr } => {
            let src = read_expr(expr, &mut false)?;
            let value = expr::eval(&src, space)?;
            let g: Option<Grading> = match &value {
                Value::Ring(e) => e.grading()?,
                Value::Point(c) => c.grading()?,
                Value::Int(0) => None,
                Value::Int(_) => Some(grading::ZERO),
                _ => {
                    return Err(CliError::Engine(EqqError::SpaceMismatch {
                        operation: "grading",
                        space: "the underlying point ring".to_string(),
                    }))
                }
            };
            match format {
                Format::Text => Ok(match g {
                    Some(g) => format!("{g}  (u={}, s={}, w={})\n", g.u, g.s, g.w),
                    None => "zero (grading unconstrained)\n".to_string(),
                }),
                _ => Ok(pretty(serde_json::json!({
                    "grading": g.map(json_grading),
                    "text": match g {
                        Some(g) => g.to_string(),
                        None => "zero".to_string(),
                    },
                }))),
            }
        }
        Cmd::Restrict { expr } => {
            let src = read_expr(expr, &mut false)?;
            let e = to_ring(expr::eval(&src, space)?, space)?;
            let image = restrict::rho_quadric(&e)?;
            map_output(format, e.space, "underlying", &image.to_string())
        }
        Cmd::Fixed { expr } => {
            let src = read_expr(expr, &mut false)?;
            let e = to_ring(expr::eval(&src, space)?, space)?;
            let image = restrict::fixed_quadric(&e)?;
            map_output(format, e.space, "fixed", &image.to_string())
        }
        Cmd::Divide { expr, zeta, power } => {
            let src = read_expr(expr, &mut false)?;
            let e = to_ring(expr::eval(&src, space)?, space)?;
            let quotient = rewrite::divide(&e, (*zeta).into(), *power)?;
            Ok(match format {
                Format::Text => format!("{}\n", render::element_text(&quotient)),
                _ => pretty(serde_json::to_value(render::JsonElement::from_element(&quotient)).expect("serializable")),
            })
        }
        Cmd::CheckIdentities => {
            let sp = need_space(space)?;
            let mut session = if cli.no_cache {
                CacheSession::disabled()
            } else {
                CacheSession::open()
            };
            let lines = checks::run(sp, &mut session)?;
            session.persist();
            match format {
                Format::Text => {
                    let mut out = String::new();
                    if cli.trace {
                        for line in &lines {
                            out.push_str(line);
                            out.push('\n');
                        }
                    }
                    out.push_str(&format!(
                        "checked {} identities for {sp}: all hold\n",
                        lines.len()
                    ));
                    Ok(out)
                }
                _ => {
                    let mut body = serde_json::json!({
                        "space": sp.to_string(),
                        "checked": lines.len(),
                        "all_hold": true,
                    });
                    if cli.trace {
                        body["trace"] = serde_json::json!(lines);
                    }
                    Ok(pretty(body))
                }
            }
        }
        Cmd::Lines27 => {
            let sp = space.unwrap_or(Space::Grass);
            let comp = grassmann::euler_sym3(sp)?;
            let report = grassmann::lines_report(comp.coefficient);
            match format {
                Format::Text => {
                    let mut out = String::new();
                    out.push_str(&format!("{}\n", render::element_text(&comp.result)));
                    out.push_str(&format!("grading: {}\n", comp.grading));
                    out.push_str(&format!("underlying target: {}\n", comp.rho_target));
                    out.push_str(&format!("fixed target: {}\n", comp.fixed_target));
                    out.push_str(&format!("type I: {}\n", report.type_i));
                    out.push_str(&format!("type II: {}\n", report.type_ii));
                    out.push_str(&format!("type III: {}\n", report.type_iii));
                    out.push_str(&format!("type IV: {} (conjugate pairs)\n", report.type_iv));
                    out.push_str(&format!("total: {}\n", report.total()));
                    out.push_str(&format!("C2-set: {}\n", report.c2_set()));
                    if cli.trace {
                        out.push_str("derivation:\n");
                        for line in &comp.trace {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                    Ok(out)
                }
                _ => {
                    let mut body = serde_json::json!({
                        "space": sp.to_string(),
                        "grading": json_grading(comp.grading),
                        "monomial": render::JsonMonomial::from(&comp.basis_monomial),
                        "coefficient": {"a": comp.coefficient.a, "b": comp.coefficient.b},
                        "element": render::JsonElement::from_element(&comp.result),
                        "report": {
                            "type_i": report.type_i,
                            "type_ii": report.type_ii,
                            "type_iii": report.type_iii,
                            "type_iv": report.type_iv,
                            "total": report.total(),
                            "c2_set": report.c2_set(),
                        },
                    });
                    if cli.trace {
                        body["trace"] = serde_json::json!(comp.trace);
                    }
                    Ok(pretty(body))
                }
            }
        }
        Cmd::Diagram { kind } => {
            if format == Format::Json {
                return Err(CliError::Usage(
                    "diagram emits text or svg, not json".to_string(),
                ));
            }
            let svg = format == Format::Svg;
            let body = match kind {
                DiagramKind::Ro2Basis => {
                    let sp = need_space(space)?;
                    if svg {
                        diagram::ro2_diagram_svg(sp)?
                    } else {
                        diagram::ro2_diagram_ascii(sp)?
                    }
                }
                DiagramKind::HpointChart => {
                    if svg {
                        diagram::hpoint_chart_svg()
                    } else {
                        diagram::hpoint_chart_ascii()
                    }
                }
            };
            Ok(if body.ends_with('\n') {
                body
            } else {
                body + "\n"
            })
        }
    }
}

fn resolve_format(cli: &Cli, cfg: &config::Config) -> Result<Format, CliError> {
    if let Some(f) = cli.format {
        return Ok(f);
    }
    match cfg.format.as_deref() {
        None => Ok(Format::Text),
        Some("text") => Ok(Format::Text),
        Some("json") => Ok(Format::Json),
        Some("svg") => Ok(Format::Svg),
        Some(other) => Err(CliError::Usage(format!(
            "config format `{other}` is not one of text, json, svg"
        ))),
    }
}

fn need_space(space: Option<Space>) -> Result<Space, CliError> {
    space.ok_or_else(|| {
        CliError::Usage(
            "no space selected: pass --space or set `space=` in the config file".to_string(),
        )
    })
}

fn read_expr(arg: &str, used_stdin: &mut bool) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    if *used_stdin {
        return Err(CliError::Usage(
            "at most one expression may be read from stdin".to_string(),
        ));
    }
    *used_stdin = true;
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(CliError::Io)?;
    Ok(buf.trim().to_string())
}

fn to_ring(value: Value, space: Option<Space>) -> Result<Element, CliError> {
    match value {
        Value::Ring(e) => Ok(e),
        Value::Int(k) => {
            let sp = need_space(space)?;
            Ok(Element::one(sp).scale(k))
        }
        Value::Point(c) => {
            let sp = need_space(space)?;
            Ok(rewrite::reduce(&Element::from_monomial(sp, QMonomial::ONE, c))?)
        }
        _ => Err(CliError::Usage(
            "expression does not evaluate to a ring element".to_string(),
        )),
    }
}

fn value_text(value: &Value) -> String {
    match value {
        Value::Int(k) => k.to_string(),
        Value::Iota(x) => x.to_string(),
        Value::Point(c) => c.to_string(),
        Value::Ring(e) => render::element_text(e),
        Value::Noneq { elem, .. } => elem.to_string(),
    }
}

fn value_json(value: &Value) -> serde_json::Value {
    match value {
        Value::Ring(e) => serde_json::to_value(render::JsonElement::from_element(e))
            .expect("serializable"),
        Value::Point(c) => {
            serde_json::to_value(render::JsonElement::from_point(c)).expect("serializable")
        }
        Value::Int(k) => {
            serde_json::to_value(render::JsonElement::from_point(&HElem::from_int(*k)))
                .expect("serializable")
        }
        Value::Iota(x) => serde_json::json!({
            "space": "point",
            "map": "underlying",
            "text": x.to_string(),
        }),
        Value::Noneq { space, elem } => serde_json::json!({
            "space": space.to_string(),
            "map": "underlying",
            "text": elem.to_string(),
        }),
    }
}

fn map_output(
    format: Format,
    space: Space,
    map: &str,
    text: &str,
) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => format!("{text}\n"),
        _ => pretty(serde_json::json!({
            "space": space.to_string(),
            "map": map,
            "text": text,
        })),
    })
}

fn cell_text(space: Space, cell: &QMonomial) -> String {
    let text = render::monomial_text(space, cell);
    if text.is_empty() {
        "1".to_string()
    } else {
        text
    }
}

fn json_grading(g: Grading) -> serde_json::Value {
    serde_json::json!({"u": g.u, "s": g.s, "w": g.w})
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}
