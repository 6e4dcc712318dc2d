//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the exit status with the report text; the binary only prints it.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::complex::OrbitStructure;
use crate::cspcheck::{
    catalan_residues, orbit_table, reference_expansion, render_expansion, verify, verify_facets_catalan, CSPInstance,
    CSPReport, CellStatus,
};
use crate::error::{Error, Result};
use crate::polygons::{
    bijection_a, bijection_a_inverse, bijection_b, bijection_b_inverse, bijection_d_t0, bijection_d_t0_inverse,
    bijection_d_t1, bijection_d_t1_inverse, switch_colors, BijectionImage, Color, DDiagonal, Face, I2Model, PartText,
    TypeA, TypeB, TypeD,
};
use crate::qpoly::{
    closed_form_eval, divisors, eval_at_primitive_root, face_poly, q_catalan, ComplexType, CoxeterDatum, CoxeterType,
    Family, RootOfUnitySpec,
};
use crate::rootsys::ColoredComplex;

#[derive(Debug, Parser)]
#[command(
    name = "clustersieve",
    version,
    about = "Cyclic sieving checks for generalized cluster complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
struct Target {
    /// Polygon family: A, B, D or I2.
    #[arg(long)]
    family: Option<String>,
    /// Coxeter type for the root-system model, e.g. E6, H3, B3.
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long)]
    n: Option<usize>,
    /// Dihedral parameter for I2.
    #[arg(long)]
    a: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the cyclic sieving phenomenon for the k-faces.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Face size; defaults to facets.
        #[arg(long)]
        k: Option<usize>,
        /// Use the alternative type-D polynomial.
        #[arg(long)]
        alternate: bool,
    },
    /// List the k-faces.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: usize,
        /// Print the compatibility graph as an edge list instead.
        #[arg(long)]
        edges: bool,
    },
    /// Orbit structure of the k-faces.
    Orbits {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: usize,
    },
    /// Image (μ, ν) of a rotation-invariant dissection, with a round trip.
    Bijection {
        #[command(flatten)]
        target: Target,
        /// Face as `N,part,part,...`.
        #[arg(long)]
        face: String,
        /// Rotation order for type A.
        #[arg(long)]
        d: Option<usize>,
        /// Half the rotation order for types B and D.
        #[arg(long)]
        t: Option<usize>,
    },
    /// X(ω_d) for every divisor d, or one d.
    Evaluate {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Orbit structures of the exceptional types against the reference table.
    Table13 {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        /// Run every k regardless of --max-k.
        #[arg(long)]
        full: bool,
    },
    /// Residues of Cat^(s)(Φ, q) modulo q^{sh+2} - 1.
    Catalan {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
    },
}

enum Resolved {
    Polygon(ComplexType),
    Roots(CoxeterType, usize),
}

impl Target {
    fn resolve(&self) -> Result<Resolved> {
        match (&self.family, &self.ty) {
            (Some(f), None) => {
                let family: Family = f.parse()?;
                let rank = match family {
                    Family::I2 => self.a.or(self.n),
                    _ => self.n,
                }
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "family {family} needs --{}",
                        if family == Family::I2 { "a" } else { "n" }
                    ))
                })?;
                Ok(Resolved::Polygon(ComplexType::new(family, rank, self.s)?))
            }
            (None, Some(t)) => {
                let ty: CoxeterType = t.parse()?;
                if self.s == 0 {
                    return Err(crate::error::out_of_range("s", 0, "s >= 1"));
                }
                Ok(Resolved::Roots(ty, self.s))
            }
            (Some(_), Some(_)) => Err(Error::InvalidParameter(
                "give either --family or --type, not both".into(),
            )),
            (None, None) => Err(Error::InvalidParameter("missing --family or --type".into())),
        }
    }
}

/// Outcome of a command: rendered text, JSON value and whether every check
/// passed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

fn error_line(e: &Error) -> String {
    json!({"error": e.kind(), "message": e.to_string()}).to_string()
}

/// Runs the command line `argv` (program name first). Exit status 0 means
/// every requested check passed, 1 a failed check, 2 an invalid request.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => {
                    let msg = e.to_string();
                    let first = msg
                        .lines()
                        .next()
                        .unwrap_or("")
                        .trim_start_matches("error: ")
                        .to_string();
                    (2, json!({"error": "usage", "message": first}).to_string())
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return (2, error_line(&Error::InvalidParameter(e.to_string()))),
    };
    let outcome = pool.install(|| dispatch(&cli.command));
    match outcome {
        Err(e) => (2, error_line(&e)),
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json"),
            };
            let code = if o.ok { 0 } else { 1 };
            match &cli.output {
                Some(path) => match std::fs::write(path, format!("{body}\n")) {
                    Ok(()) => (code, String::new()),
                    Err(e) => (2, json!({"error": "io", "message": e.to_string()}).to_string()),
                },
                None => (code, body),
            }
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Verify { target, k, alternate } => cmd_verify(target, *k, *alternate),
        Command::Enumerate { target, k, edges } => cmd_enumerate(target, *k, *edges),
        Command::Orbits { target, k } => cmd_orbits(target, *k),
        Command::Bijection { target, face, d, t } => cmd_bijection(target, face, *d, *t),
        Command::Evaluate { target, k, d } => cmd_evaluate(target, *k, *d),
        Command::Table13 { ty, max_k, full } => cmd_table(ty, *max_k, *full),
        Command::Catalan { ty, s } => cmd_catalan(ty, *s),
    }
}

fn report_outcome(r: CSPReport) -> Outcome {
    Outcome {
        text: r.to_string(),
        json: serde_json::to_value(&r).expect("json"),
        ok: r.passed(),
    }
}

fn cmd_verify(target: &Target, k: Option<usize>, alternate: bool) -> Result<Outcome> {
    match target.resolve()? {
        Resolved::Polygon(t) => {
            let k = k.unwrap_or(t.max_k());
            let inst = if alternate {
                if t.family() != Family::D {
                    return Err(Error::InvalidParameter("--alternate applies to family D only".into()));
                }
                CSPInstance::polygon_d_alternate(t.s(), t.rank_param(), k)?
            } else {
                CSPInstance::polygon(t, k)?
            };
            Ok(report_outcome(verify(&inst)?))
        }
        Resolved::Roots(ty, s) => {
            if k.is_some_and(|k| k != ty.rank()) {
                return Err(Error::InvalidParameter(format!(
                    "root-system models are verified on facets only (k = {})",
                    ty.rank()
                )));
            }
            Ok(report_outcome(verify_facets_catalan(ty, s)?))
        }
    }
}

fn faces_text<T: PartText + Ord>(faces: &[Face<T>]) -> Vec<String> {
    faces.iter().map(|f| f.to_string()).collect()
}

fn cmd_enumerate(target: &Target, k: usize, edges: bool) -> Result<Outcome> {
    let (label, lines): (serde_json::Value, Vec<String>) = match target.resolve()? {
        Resolved::Polygon(t) => {
            if edges {
                return Err(Error::InvalidParameter(
                    "--edges is available for root-system models".into(),
                ));
            }
            let (s, n) = (t.s(), t.rank_param());
            let lines = match t.family() {
                Family::A => faces_text(&TypeA::model(s, n)?.enumerate(k)?),
                Family::B => faces_text(&TypeB::model(s, n)?.enumerate(k)?),
                Family::D => faces_text(&TypeD::model(s, n)?.enumerate(k)?),
                Family::I2 => faces_text(&I2Model::model(s, n)?.enumerate(k)?),
            };
            (
                json!({"family": t.family().to_string(), "s": s, "n_or_a": n, "k": k}),
                lines,
            )
        }
        Resolved::Roots(ty, s) => {
            let c = ColoredComplex::new(ty, s)?;
            if edges {
                let text = c.edge_list();
                let edges: Vec<[usize; 2]> = c.complex().graph().edges().into_iter().map(|(u, v)| [u, v]).collect();
                let elements: Vec<String> = c.elements().iter().map(|&x| c.display(x)).collect();
                return Ok(Outcome {
                    text: text.trim_end().to_string(),
                    json: json!({"type": ty.to_string(), "s": s, "elements": elements, "edges": edges}),
                    ok: true,
                });
            }
            let lines = c
                .faces(k)?
                .iter()
                .map(|f| {
                    let parts: Vec<String> = f.iter().map(|&x| c.display(x)).collect();
                    format!("{{{}}}", parts.join(", "))
                })
                .collect();
            (
                json!({"family": ty.to_string(), "s": s, "n_or_a": ty.rank(), "k": k}),
                lines,
            )
        }
    };
    let mut json = label;
    json["count"] = json!(lines.len());
    json["faces"] = json!(lines);
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    let _ = write!(text, "# {} faces", lines.len());
    Ok(Outcome { text, json, ok: true })
}

fn cmd_orbits(target: &Target, k: usize) -> Result<Outcome> {
    let (name, order, orbits): (String, usize, OrbitStructure) = match target.resolve()? {
        Resolved::Polygon(t) => {
            let (s, n) = (t.s(), t.rank_param());
            let o = match t.family() {
                Family::A => TypeA::model(s, n)?.orbit_counts(k)?,
                Family::B => TypeB::model(s, n)?.orbit_counts(k)?,
                Family::D => TypeD::model(s, n)?.orbit_counts(k)?,
                Family::I2 => I2Model::model(s, n)?.orbit_counts(k)?,
            };
            (format!("{} s={s} n_or_a={n}", t.family()), t.group_order(), o.into())
        }
        Resolved::Roots(ty, s) => {
            let c = ColoredComplex::new(ty, s)?;
            (format!("{ty} s={s}"), c.group_order(), c.orbit_structure(k)?)
        }
    };
    let entries: Vec<serde_json::Value> = orbits
        .entries()
        .iter()
        .map(|&(size, count)| json!({"size": size, "count": count}))
        .collect();
    Ok(Outcome {
        text: format!("{name} k={k} N={order} |X|={}\n{orbits}", orbits.total()),
        json: json!({"label": name, "k": k, "group_order": order, "faces": orbits.total(), "orbits": entries}),
        ok: true,
    })
}

fn image_json(class: &str, img: &BijectionImage, back: bool) -> serde_json::Value {
    json!({"class": class, "image": img.to_string(), "mu": img.mu, "nu": img.nu, "round_trip": back})
}

fn cmd_bijection(target: &Target, face: &str, d: Option<usize>, t: Option<usize>) -> Result<Outcome> {
    let Resolved::Polygon(ty) = target.resolve()? else {
        return Err(Error::InvalidParameter(
            "bijections are defined for polygon families".into(),
        ));
    };
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Error::InvalidParameter(format!("missing --{name}")));
    let (s, n) = (ty.s(), ty.rank_param());
    let (class, img, back) = match ty.family() {
        Family::A => {
            let d = need(d, "d")?;
            let m = TypeA::model(s, n)?;
            let x = Face::parse(face)?;
            let img = bijection_a(&m, &x, d)?;
            let back = bijection_a_inverse(&m, &img, d)? == x;
            ("A", img, back)
        }
        Family::B => {
            let t = need(t, "t")?;
            let m = TypeB::model(s, n)?;
            let x = Face::parse(face)?;
            let img = bijection_b(&m, &x, t)?;
            let back = bijection_b_inverse(&m, &img, t)? == x;
            ("B", img, back)
        }
        Family::D => {
            let t = need(t, "t")?;
            let m = TypeD::model(s, n)?;
            let x = Face::<DDiagonal>::parse(face)?;
            let first = x.parts.iter().find_map(|p| match p {
                DDiagonal::Diameter { color, .. } => Some(*color),
                DDiagonal::Pair(_) => None,
            });
            match first {
                None => {
                    let img = bijection_d_t0(&m, &x, t)?;
                    let back = bijection_d_t0_inverse(&m, &img, t)? == x;
                    ("T0", img, back)
                }
                Some(Color::Red) => {
                    let img = bijection_d_t1(&m, &x, t)?;
                    let back = bijection_d_t1_inverse(&m, &img, t)? == x;
                    ("T1", img, back)
                }
                Some(Color::Blue) => {
                    let y = switch_colors(&x);
                    let img = bijection_d_t1(&m, &y, t)?;
                    let back = switch_colors(&bijection_d_t1_inverse(&m, &img, t)?) == x;
                    ("T2", img, back)
                }
            }
        }
        Family::I2 => return Err(Error::InvalidParameter("no bijection for I2".into())),
    };
    Ok(Outcome {
        text: format!("{class} {img}\nround trip: {}", if back { "ok" } else { "FAILED" }),
        json: image_json(class, &img, back),
        ok: back,
    })
}

fn cmd_evaluate(target: &Target, k: Option<usize>, d: Option<usize>) -> Result<Outcome> {
    let (poly, order, closed): (crate::qpoly::QPolynomial, usize, Option<(ComplexType, usize)>) =
        match target.resolve()? {
            Resolved::Polygon(t) => {
                let k = k.unwrap_or(t.max_k());
                (face_poly(t, k)?, t.group_order(), Some((t, k)))
            }
            Resolved::Roots(ty, s) => {
                if k.is_some_and(|k| k != ty.rank()) {
                    return Err(Error::InvalidParameter(
                        "root-system models evaluate the Catalan polynomial only".into(),
                    ));
                }
                let datum = CoxeterDatum::new(ty);
                (q_catalan(&datum, s)?, s * datum.h + 2, None)
            }
        };
    let ds = match d {
        Some(d) if d == 0 || order % d != 0 => return Err(Error::NotDivisor { d, order }),
        Some(d) => vec![d],
        None => divisors(order),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    let mut text = format!("{:>6} {:>12} {:>12}\n", "d", "X(w_d)", "closed");
    for d in ds {
        let spec = RootOfUnitySpec::new(d)?;
        let value = eval_at_primitive_root(&poly, spec)?;
        let cf = closed.map(|(t, k)| closed_form_eval(t, k, spec)).transpose()?;
        if cf.as_ref().is_some_and(|c| *c != value) {
            ok = false;
        }
        let cf_text = cf.as_ref().map_or("-".to_string(), |c| c.to_string());
        let _ = writeln!(text, "{d:>6} {value:>12} {cf_text:>12}");
        rows.push(json!({"d": d, "value": value.to_string(), "closed_form": cf.map(|c| c.to_string())}));
    }
    Ok(Outcome {
        text: text.trim_end().to_string(),
        json: json!({"group_order": order, "values": rows}),
        ok,
    })
}

fn cmd_table(ty: &str, max_k: usize, full: bool) -> Result<Outcome> {
    let ty: CoxeterType = ty.parse()?;
    let max_k = if full { ty.rank() } else { max_k };
    let cells = orbit_table(ty, max_k)?;
    let mut text = format!("{ty}  N = {}\n", CoxeterDatum::new(ty).h + 2);
    for c in &cells {
        let status = match c.status {
            CellStatus::Match => "match".to_string(),
            CellStatus::PrintedInconsistent => format!(
                "printed cell differs; it totals {} faces, f_k = {}",
                c.printed.parse::<OrbitStructure>().map(|o| o.total()).unwrap_or(0),
                c.face_number.unwrap_or(0)
            ),
            CellStatus::Mismatch => format!("MISMATCH (printed {})", c.printed),
        };
        let _ = writeln!(text, "k={}  {:<28} {status}", c.k, c.computed);
    }
    let ok = cells.iter().all(|c| c.ok());
    Ok(Outcome {
        text: text.trim_end().to_string(),
        json: json!({"type": ty.to_string(), "cells": cells}),
        ok,
    })
}

fn cmd_catalan(ty: &str, s: usize) -> Result<Outcome> {
    let ty: CoxeterType = ty.parse()?;
    if s == 0 {
        return Err(crate::error::out_of_range("s", 0, "s >= 1"));
    }
    let residues = catalan_residues(ty, s)?;
    let expansion = render_expansion(&residues);
    let order = residues.len();
    let reference = if s == 1 { reference_expansion(ty).ok() } else { None };
    let ok = reference.is_none_or(|r| r == expansion);
    let mut text = format!("Cat^({s})({ty}, q) mod q^{order} - 1\n");
    let _ = writeln!(
        text,
        "residues: {}",
        residues.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ")
    );
    let _ = write!(text, "expansion: {expansion}");
    if let Some(r) = reference {
        let _ = write!(
            text,
            "\nreference: {}",
            if r == expansion { "match" } else { "MISMATCH" }
        );
    }
    Ok(Outcome {
        text,
        json: json!({
            "type": ty.to_string(),
            "s": s,
            "group_order": order,
            "residues": residues,
            "expansion": expansion,
            "reference_match": reference.map(|r| r == expansion),
        }),
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> (i32, String) {
        run(std::iter::once("clustersieve").chain(args.split_whitespace()))
    }

    #[test]
    fn verify_json() {
        let (code, out) = go("verify --family A --s 2 --n 3 --k 2 --format json");
        assert_eq!(code, 0, "{out}");
        let r = CSPReport::from_json(&out).unwrap();
        assert_eq!(r.residues, vec![2, 1, 2, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn table_h3() {
        let (code, out) = go("table13 --type H3");
        assert_eq!(code, 0);
        for row in ["6(3)", "6(8)", "6(5), 2(1)"] {
            assert!(out.contains(row), "{out}");
        }
    }

    #[test]
    fn catalan_e7() {
        let (code, out) = go("catalan --type E7 --s 1");
        assert_eq!(code, 0);
        assert!(out.contains("residues: 416 0 416 0"), "{out}");
    }

    #[test]
    fn errors_are_one_json_line() {
        for args in [
            "verify --family Q --n 3",
            "verify --family A --s 2",
            "orbits --family A --n 3 --k 9",
            "frobnicate",
        ] {
            let (code, out) = go(args);
            assert_eq!(code, 2, "{args}");
            assert_eq!(out.lines().count(), 1, "{args}");
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert!(v["error"].is_string() && v["message"].is_string());
        }
    }

    #[test]
    fn bijection_round_trip() {
        let (code, out) = go("bijection --family A --s 2 --n 11 --d 3 --face 24,3-8,8-11,11-16,16-19,19-24,3-24");
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("A ((3,8),(0,1,1))"));
    }

    #[test]
    fn deterministic_across_threads() {
        let a = go("enumerate --family D --s 2 --n 3 --k 2 --threads 1");
        let b = go("enumerate --family D --s 2 --n 3 --k 2 --threads 4");
        assert_eq!(a, b);
    }
}
