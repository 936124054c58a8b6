//! File formats, subcommand dispatch, and report rendering for the
//! command-line tool.
//!
//! Polytope file: line 1 is `n d` (rank and vertex count), then `d` lines
//! of `n` integers. Triangulation file: line 1 is `n p m`, then `p` point
//! rows and `m` simplex rows of `n` zero-based point indices. Lines
//! starting with `#` and blank lines are skipped in both.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::divisors::{
    build_divisor_lattice, cone_interior_disjoint, kahler_cone, section_space, Divisor,
    RationalCone,
};
use crate::error::{Error, Result};
use crate::exactlin::{Int, Rat};
use crate::mirror::{deformation_dim, degeneration_cone, mirror_check, picard_dim, HodgeReport};
use crate::polytope::{LatticePoint, LatticePolytope};
use crate::triangulation::Triangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Vertices of the dual polytope.
    Dual,
    /// Whether the polytope and its dual are both integral.
    Reflexive,
    /// Lattice point and boundary point counts.
    Points,
    /// Boundary triangulation in the triangulation file format.
    Triangulate,
    /// Picard and deformation dimension reports.
    Hodge,
    /// Nef cone generators in divisor-class coordinates.
    Kahler,
    /// Degeneration cone computed on the dual side.
    Degeneration,
    /// Full mirror-pair verification.
    Mirror,
    /// Flip circuits; with --apply, the flipped triangulation.
    Flops,
    /// Section space of a divisor given by --rho.
    Sections,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "toric-mirror", version, about = "Lattice polytope mirror-symmetry toolkit")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Polytope file.
    pub file: PathBuf,
    /// Triangulation file for the primal side; built if absent.
    #[arg(long)]
    pub triangulation: Option<PathBuf>,
    /// Triangulation file for the dual side; built if absent.
    #[arg(long)]
    pub dual_triangulation: Option<PathBuf>,
    /// Divisor coefficients: comma-separated integers or `anticanonical`.
    #[arg(long)]
    pub rho: Option<String>,
    /// Apply the k-th flip circuit (0-based).
    #[arg(long)]
    pub apply: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Structured result of one invocation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub payload: Value,
    pub warnings: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their original 1-based line numbers, comments and
/// blanks removed.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_int_row(line: usize, s: &str, expect: usize, what: &str) -> Result<Vec<Int>> {
    let row: Vec<Int> = s
        .split_whitespace()
        .map(|tok| {
            tok.parse::<Int>()
                .map_err(|_| parse_error(line, format!("invalid integer `{tok}`")))
        })
        .collect::<Result<_>>()?;
    if row.len() != expect {
        return Err(parse_error(
            line,
            format!("expected {expect} {what}, found {}", row.len()),
        ));
    }
    Ok(row)
}

/// Parses a polytope file, returning the polytope and any warnings.
pub fn parse_polytope(text: &str) -> Result<(LatticePolytope, Vec<String>)> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_error(1, "empty input"));
    };
    let head = parse_int_row(hline, header, 2, "header fields")?;
    let n = to_usize(hline, &head[0])?;
    let d = to_usize(hline, &head[1])?;
    if lines.len() != d + 1 {
        return Err(parse_error(
            hline,
            format!("header promises {d} vertex rows, found {}", lines.len() - 1),
        ));
    }
    let mut vertices = Vec::with_capacity(d);
    let mut warnings = Vec::new();
    for &(ln, row) in &lines[1..] {
        let v = parse_int_row(ln, row, n, "coordinates")?;
        if vertices.contains(&v) {
            warnings.push(format!("line {ln}: duplicate vertex"));
        }
        vertices.push(v);
    }
    let p = LatticePolytope::from_vertices(&vertices)?;
    if p.vertices().len() < d {
        warnings.push(format!(
            "{} input rows are not extreme points",
            d - p.vertices().len()
        ));
    }
    Ok((p, warnings))
}

/// Parses a triangulation file over the given host polytope.
pub fn parse_triangulation(text: &str, host: &LatticePolytope) -> Result<Triangulation> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_error(1, "empty input"));
    };
    let head = parse_int_row(hline, header, 3, "header fields")?;
    let n = to_usize(hline, &head[0])?;
    let p = to_usize(hline, &head[1])?;
    let m = to_usize(hline, &head[2])?;
    if n != host.rank() {
        return Err(parse_error(
            hline,
            format!("rank {n} does not match the polytope rank {}", host.rank()),
        ));
    }
    if lines.len() != 1 + p + m {
        return Err(parse_error(
            hline,
            format!(
                "header promises {p} point rows and {m} simplex rows, found {}",
                lines.len() - 1
            ),
        ));
    }
    let mut points: Vec<LatticePoint> = Vec::with_capacity(p);
    for &(ln, row) in &lines[1..1 + p] {
        points.push(parse_int_row(ln, row, n, "coordinates")?);
    }
    let mut maximal = Vec::with_capacity(m);
    for &(ln, row) in &lines[1 + p..] {
        let ids = parse_int_row(ln, row, n, "point indices")?;
        let mut s = Vec::with_capacity(n);
        for x in &ids {
            let i = to_usize(ln, x)?;
            if i >= p {
                return Err(parse_error(ln, format!("point index {i} out of range")));
            }
            s.push(i);
        }
        maximal.push(s);
    }
    Triangulation::from_parts(host.clone(), points, maximal)
}

fn to_usize(line: usize, x: &Int) -> Result<usize> {
    if x.is_negative() {
        return Err(parse_error(line, "negative count"));
    }
    let s = x.to_string();
    s.parse::<usize>()
        .map_err(|_| parse_error(line, "count out of range"))
}

fn int_row(v: &[Int]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn rat_row(v: &[Rat]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cone_json(c: &RationalCone) -> Value {
    // Ray enumeration grows combinatorially with the ambient dimension;
    // emit rays only when they are already known or cheap to obtain.
    let small = c.generators_if_available().is_some() || c.ambient_dim() <= 8;
    let g = small.then(|| c.generators());
    json!({
        "ambient_dim": c.ambient_dim(),
        // the exact dimension of a large inequality-described cone costs
        // one feasibility solve per normal; skip it there
        "dimension": small.then(|| c.dimension()),
        "full_dimensional": c.is_full_dimensional(),
        "rays": g.map(|g| g.rays.iter().map(|r| int_row(r)).collect::<Vec<_>>()),
        "lineality": g.map(|g| g.lineality.iter().map(|r| int_row(r)).collect::<Vec<_>>()),
        "facet_normals": c.facet_normals().iter().map(|r| int_row(r)).collect::<Vec<_>>(),
    })
}

fn hodge_json(h: &HodgeReport) -> Value {
    json!({
        "d": h.d,
        "n": h.n,
        "base": h.base,
        "total": h.total,
        "spanning_index": h.spanning_index.as_ref().map(|x| x.to_string()),
        "corrections": h.corrections.iter().map(|c| json!({
            "face_dim": c.face.dim,
            "face_index": c.face.index,
            "interior_points": c.interior_points,
            "dual_interior_points": c.dual_interior_points,
            "product": c.product,
        })).collect::<Vec<_>>(),
    })
}

fn triangulation_json(t: &Triangulation) -> Value {
    json!({
        "rank": t.rank(),
        "points": t.points().iter().map(|p| int_row(p)).collect::<Vec<_>>(),
        "simplices": t.maximal_simplices().to_vec(),
    })
}

/// Triangulation in the text file format, reusable as `--triangulation`
/// input.
pub fn triangulation_file(t: &Triangulation) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {}",
        t.rank(),
        t.points().len(),
        t.maximal_simplices().len()
    );
    for p in t.points() {
        let _ = writeln!(out, "{}", int_row(p));
    }
    for s in t.maximal_simplices() {
        let row = s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "{row}");
    }
    out
}

fn parse_rho(raw: &str, size: usize) -> Result<Divisor> {
    if raw == "anticanonical" {
        return Ok(Divisor::anticanonical(size));
    }
    let coeffs: Vec<Rat> = raw
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<Int>()
                .map(Rat::from)
                .map_err(|_| Error::InvalidInput(format!("invalid coefficient `{tok}`")))
        })
        .collect::<Result<_>>()?;
    if coeffs.len() != size {
        return Err(Error::InvalidInput(format!(
            "{} coefficients given, {} points present",
            coeffs.len(),
            size
        )));
    }
    Ok(Divisor::new(coeffs))
}

fn load_triangulation(
    p: &LatticePolytope,
    path: &Option<PathBuf>,
) -> Result<Triangulation> {
    match path {
        Some(f) => {
            let text = std::fs::read_to_string(f)?;
            parse_triangulation(&text, p)
        }
        None => Triangulation::build(p),
    }
}

/// Executes a parsed invocation and produces the report.
pub fn run(cli: &Cli) -> Result<Report> {
    let text = std::fs::read_to_string(&cli.file)?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    let (p, mut warnings) = parse_polytope(&text)?;

    let payload = match cli.command {
        Command::Dual => {
            let dual = p.dual_polytope();
            if dual.is_integral() {
                let dp = p.dual_lattice_polytope()?;
                json!({
                    "integral": true,
                    "rank": dp.rank(),
                    "vertices": dp.vertices().iter().map(|v| int_row(v)).collect::<Vec<_>>(),
                })
            } else {
                json!({
                    "integral": false,
                    "rank": dual.rank,
                    "vertices": dual.vertices.iter().map(|v| rat_row(v)).collect::<Vec<_>>(),
                })
            }
        }
        Command::Reflexive => json!({ "reflexive": p.is_reflexive() }),
        Command::Points => {
            let all = p.lattice_points();
            let skeleton = crate::triangulation::boundary_skeleton_points(&p)?;
            json!({
                "lattice_points": all.len(),
                "boundary_skeleton_points": skeleton.len(),
                "vertices": p.vertices().len(),
                "points": all.iter().map(|v| int_row(v)).collect::<Vec<_>>(),
            })
        }
        Command::Triangulate => {
            let t = load_triangulation(&p, &cli.triangulation)?;
            let mut v = triangulation_json(&t);
            v["file"] = Value::String(triangulation_file(&t));
            v
        }
        Command::Hodge => {
            let t = load_triangulation(&p, &cli.triangulation)?;
            let pic = picard_dim(&t)?;
            if pic.spanning_index != Some(Int::from(1)) {
                warnings.push("triangulation points do not span the lattice".into());
            }
            let def = deformation_dim(&p)?;
            json!({ "picard": hodge_json(&pic), "deformation": hodge_json(&def) })
        }
        Command::Kahler => {
            let t = load_triangulation(&p, &cli.triangulation)?;
            let dl = build_divisor_lattice(&t)?;
            cone_json(&kahler_cone(&t, &dl)?)
        }
        Command::Degeneration => {
            let dual = p.dual_lattice_polytope()?;
            let t_dual = load_triangulation(&dual, &cli.dual_triangulation)?;
            let dl = build_divisor_lattice(&t_dual)?;
            cone_json(&degeneration_cone(&t_dual, &dl)?)
        }
        Command::Mirror => {
            let t = load_triangulation(&p, &cli.triangulation)?;
            let dual = p.dual_lattice_polytope()?;
            let t_dual = load_triangulation(&dual, &cli.dual_triangulation)?;
            let r = mirror_check(&t, &t_dual)?;
            json!({
                "picard": hodge_json(&r.pic),
                "deformation": hodge_json(&r.def),
                "mirror_picard": hodge_json(&r.mirror_pic),
                "mirror_deformation": hodge_json(&r.mirror_def),
                "dimensions_swap": r.dimensions_swap,
                "cones_identified": r.cones_identified,
                "k3_sum": r.k3_sum.map(|(s, ok)| json!({ "sum": s, "is_twenty": ok })),
            })
        }
        Command::Flops => {
            let t = load_triangulation(&p, &cli.triangulation)?;
            let circuits = t.flop_candidates()?;
            let listed: Vec<Value> = circuits
                .iter()
                .map(|c| {
                    json!({
                        "pair": [c.s.clone(), c.t.clone()],
                        "mirrored_pair": [c.s2.clone(), c.t2.clone()],
                        "apexes": [c.d0, c.d0m],
                        "circuit": [c.d1, c.d4, c.d2, c.d3],
                    })
                })
                .collect();
            let mut payload = json!({ "circuits": listed });
            if let Some(k) = cli.apply {
                let c = circuits
                    .get(k)
                    .ok_or_else(|| Error::InvalidInput(format!("no circuit {k}")))?;
                let flipped = t.apply_flop(c)?;
                let dl = build_divisor_lattice(&t)?;
                let dl_f = build_divisor_lattice(&flipped)?;
                let cone = kahler_cone(&t, &dl)?;
                let cone_f = kahler_cone(&flipped, &dl_f)?;
                let disjoint = cone_interior_disjoint(&cone, &cone_f)?;
                payload["applied"] = json!({
                    "triangulation": triangulation_json(&flipped),
                    "file": triangulation_file(&flipped),
                    "interiors_disjoint": disjoint.disjoint,
                    "cone": cone_json(&cone),
                    "flipped_cone": cone_json(&cone_f),
                });
            }
            payload
        }
        Command::Sections => {
            let t = load_triangulation(&p, &cli.triangulation)?;
            let dl = build_divisor_lattice(&t)?;
            let raw = cli
                .rho
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--rho is required for sections".into()))?;
            let rho = parse_rho(raw, dl.size())?;
            let space = section_space(&t, &dl, &rho)?;
            json!({
                "divisor": rat_row(&space.rho.coeffs),
                "count": space.sections.len(),
                "sections": space.sections.iter().map(|(v, e)| json!({
                    "point": int_row(v),
                    "exponents": int_row(e),
                })).collect::<Vec<_>>(),
            })
        }
    };

    Ok(Report {
        command: format!("{:?}", cli.command).to_lowercase(),
        input_digest: digest,
        payload,
        warnings,
    })
}

/// Renders a report: JSON for machine format, an indented listing for
/// text.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "command: {}", report.command);
            let _ = writeln!(out, "input: sha256:{}", report.input_digest);
            for w in &report.warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            render_value(&mut out, "", &report.payload);
            out
        }
    }
}

fn render_value(out: &mut String, indent: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{indent}{k}:");
                        render_value(out, &format!("{indent}  "), val);
                    }
                    _ => {
                        let _ = writeln!(out, "{indent}{k}: {}", scalar(val));
                    }
                }
            }
        }
        Value::Array(items) => {
            for val in items {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{indent}-");
                        render_value(out, &format!("{indent}  "), val);
                    }
                    _ => {
                        let _ = writeln!(out, "{indent}- {}", scalar(val));
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{indent}{}", scalar(v));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Binary entry point: parse arguments, run, print, return the exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", render(&report, cli.format));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAMOND: &str = "2 4\n1 0\n0 1\n-1 0\n0 -1\n";

    #[test]
    fn parses_the_diamond() {
        let (p, warnings) = parse_polytope(DIAMOND).unwrap();
        assert_eq!(p.rank(), 2);
        assert_eq!(p.vertices().len(), 4);
        assert!(warnings.is_empty());
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# diamond\n\n2 4\n1 0\n# middle\n0 1\n-1 0\n0 -1\n";
        let (p, _) = parse_polytope(text).unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn header_mismatch_reports_line() {
        let text = "2 5\n1 0\n0 1\n-1 0\n0 -1\n";
        match parse_polytope(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn bad_integer_reports_line() {
        let text = "2 4\n1 0\n0 x\n-1 0\n0 -1\n";
        match parse_polytope(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_vertices_warn() {
        let text = "2 5\n1 0\n0 1\n-1 0\n0 -1\n1 0\n";
        let (_, warnings) = parse_polytope(text).unwrap();
        assert!(!warnings.is_empty());
    }

    #[test]
    fn triangulation_roundtrip_through_file_format() {
        let (p, _) = parse_polytope(DIAMOND).unwrap();
        let t = Triangulation::build(&p).unwrap();
        let text = triangulation_file(&t);
        let back = parse_triangulation(&text, &p).unwrap();
        assert_eq!(back.maximal_simplices(), t.maximal_simplices());
        assert_eq!(back.points(), t.points());
    }

    #[test]
    fn rho_parsing() {
        assert!(parse_rho("anticanonical", 4).unwrap().is_integral());
        let d = parse_rho("1,2,3,4", 4).unwrap();
        assert_eq!(d.coeffs[3], Rat::from(Int::from(4)));
        assert!(parse_rho("1,2", 4).is_err());
        assert!(parse_rho("1,a,3,4", 4).is_err());
    }
}
