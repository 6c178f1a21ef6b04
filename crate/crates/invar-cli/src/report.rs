//! Report construction and rendering.
//!
//! A run produces a [`Report`]: one section per scanned dimension, one row
//! per family. The machine rendering is a versioned JSON document with every
//! number as an exact fraction string and parameters named t1, t2, …; it
//! parses back losslessly. The text rendering mimics hand-written subspace
//! tables and names parameters α, β, γ, ….

use crate::problem::ProblemFile;
use invar_core::{
    dimension_scan, full_lattice_scan, Error, InvariantFamily, MatrixSet, ParamPoly, Rat,
    DEFAULT_CASE_BUDGET,
};
use num::{One, Zero};
use serde::{Deserialize, Serialize};

/// Version tag of the machine-format schema.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Scan settings taken from the command line.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Restricts the scan to one dimension; `None` scans 0..=n.
    pub dim: Option<usize>,
    /// Overrides both the automatic shift and any shift in the problem file.
    pub shift: Option<Rat>,
    /// Depth budget for constraint case analysis.
    pub case_budget: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            dim: None,
            shift: None,
            case_budget: DEFAULT_CASE_BUDGET,
        }
    }
}

/// Result of a scan in a serialization-stable shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    /// Ambient dimension.
    pub n: usize,
    /// Number of matrices in the set.
    pub matrices: usize,
    /// Shift actually used, as an exact fraction string.
    pub shift: String,
    pub case_budget: usize,
    pub dimensions: Vec<DimensionSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionSection {
    pub dimension: usize,
    pub families: Vec<FamilyRow>,
}

/// One invariant-subspace family. Polynomial strings use parameters
/// t1, t2, …; `residual` is non-empty exactly when the chart was left
/// unsolved, in which case `generators` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    /// Eigenvalue tuple of the shifted matrices, absent for dimension 0.
    pub eigenvalues: Option<Vec<String>>,
    pub chart: usize,
    pub free_parameters: usize,
    /// Basis rows; each row has n polynomial coordinate strings.
    pub generators: Vec<Vec<String>>,
    /// Unresolved constraints, each understood as `… = 0`.
    pub residual: Vec<String>,
}

fn machine_name(i: usize) -> String {
    format!("t{}", i + 1)
}

const GREEK: [&str; 8] = ["α", "β", "γ", "δ", "ε", "ζ", "η", "θ"];

fn text_name(i: usize) -> String {
    GREEK
        .get(i)
        .map(|s| s.to_string())
        .unwrap_or_else(|| machine_name(i))
}

fn family_row(f: &InvariantFamily) -> FamilyRow {
    let render = |p: &ParamPoly| p.render(&machine_name);
    FamilyRow {
        eigenvalues: f
            .eigen
            .as_ref()
            .map(|t| t.values().iter().map(Rat::to_string).collect()),
        chart: f.chart,
        free_parameters: f.free_params,
        generators: (0..f.generators.rows())
            .map(|r| f.generators.row(r).iter().map(render).collect())
            .collect(),
        residual: f.residual.iter().map(render).collect(),
    }
}

/// Runs the scan described by the problem file and options.
pub fn run(problem: &ProblemFile, opts: &RunOptions) -> invar_core::Result<Report> {
    if let Some(d) = opts.dim {
        if d > problem.n {
            return Err(Error::DegreeOutOfRange {
                d: d as u32,
                n: problem.n as u32,
            });
        }
    }
    let shift = opts.shift.clone().or_else(|| problem.shift.clone());
    let ms = match shift {
        Some(s) => MatrixSet::with_shift(problem.matrices.clone(), s)?,
        None => MatrixSet::new(problem.matrices.clone())?,
    };
    let scan: Vec<(usize, Vec<InvariantFamily>)> = match opts.dim {
        Some(d) => vec![(d, dimension_scan(&ms, d, opts.case_budget)?)],
        None => full_lattice_scan(&ms, opts.case_budget)?.into_iter().collect(),
    };
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        n: ms.n(),
        matrices: problem.matrices.len(),
        shift: ms.shift().to_string(),
        case_budget: opts.case_budget,
        dimensions: scan
            .into_iter()
            .map(|(dimension, families)| DimensionSection {
                dimension,
                families: families.iter().map(family_row).collect(),
            })
            .collect(),
    })
}

/// Number of rows that were left unsolved at the case budget.
pub fn unsolved_rows(report: &Report) -> usize {
    report
        .dimensions
        .iter()
        .flat_map(|s| &s.families)
        .filter(|f| !f.residual.is_empty())
        .count()
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Machine => render_machine(report),
    }
}

pub fn render_machine(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization cannot fail");
    s.push('\n');
    s
}

/// Parses a machine-format report back into its in-memory form.
pub fn parse_report(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

/// Parses a polynomial string as produced by the machine rendering
/// (parameters t1, t2, …, terms joined by ` + ` / ` - `, factors by `*`).
pub fn parse_poly(s: &str) -> Result<ParamPoly, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty polynomial".to_string());
    }
    if s == "0" {
        return Ok(ParamPoly::zero());
    }
    let mut out = ParamPoly::zero();
    let mut rest = s;
    let mut neg = false;
    if let Some(r) = rest.strip_prefix('-') {
        neg = true;
        rest = r;
    }
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let split = match (plus, minus) {
            (Some(p), Some(m)) => Some((p.min(m), m < p)),
            (Some(p), None) => Some((p, false)),
            (None, Some(m)) => Some((m, true)),
            (None, None) => None,
        };
        match split {
            Some((at, next_neg)) => {
                out = out + parse_term(&rest[..at], neg)?;
                neg = next_neg;
                rest = &rest[at + 3..];
            }
            None => {
                out = out + parse_term(rest, neg)?;
                break;
            }
        }
    }
    Ok(out)
}

fn parse_term(term: &str, neg: bool) -> Result<ParamPoly, String> {
    let mut acc = ParamPoly::constant(if neg {
        -Rat::one()
    } else {
        Rat::one()
    });
    for factor in term.split('*') {
        let factor = factor.trim();
        if let Some(var) = factor.strip_prefix('t') {
            let (idx, exp) = match var.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.parse::<u32>()
                        .map_err(|_| format!("bad exponent in {factor:?}"))?,
                ),
                None => (var, 1),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| format!("bad parameter name {factor:?}"))?;
            if idx == 0 {
                return Err(format!("bad parameter name {factor:?}"));
            }
            for _ in 0..exp {
                acc = acc * ParamPoly::var(idx - 1);
            }
        } else {
            let c = crate::problem::parse_rat(factor)?;
            acc = acc * ParamPoly::constant(c);
        }
    }
    Ok(acc)
}

/// Renders a coordinate vector as a combination of basis vectors e1…en.
fn render_vector_text(coords: &[ParamPoly]) -> String {
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (i, p) in coords.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let basis = format!("e{}", i + 1);
        if p.terms().count() == 1 {
            let rendered = p.render(&text_name);
            let (neg, mag) = match rendered.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, rendered),
            };
            let body = if mag == "1" {
                basis
            } else {
                format!("{mag} {basis}")
            };
            pieces.push((neg, body));
        } else {
            pieces.push((false, format!("({}) {}", p.render(&text_name), basis)));
        }
    }
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, body)) in pieces.iter().enumerate() {
        if k == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

fn reparse(entry: &str) -> ParamPoly {
    parse_poly(entry).expect("report polynomial strings parse back")
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("n = {}\n", report.n));
    out.push_str(&format!("matrices = {}\n", report.matrices));
    out.push_str(&format!("shift = {}\n", report.shift));
    out.push_str(&format!("case budget = {}\n", report.case_budget));
    for section in &report.dimensions {
        out.push_str(&format!("\ndimension {}:\n", section.dimension));
        if section.families.is_empty() {
            out.push_str("  (none)\n");
            continue;
        }
        for fam in &section.families {
            out.push_str("  ");
            if let Some(vals) = &fam.eigenvalues {
                out.push_str(&format!("({})  ", vals.join(", ")));
            }
            if fam.residual.is_empty() {
                if fam.generators.is_empty() {
                    out.push_str("<0>\n");
                } else {
                    let rows: Vec<String> = fam
                        .generators
                        .iter()
                        .map(|row| {
                            let coords: Vec<ParamPoly> =
                                row.iter().map(|e| reparse(e)).collect();
                            render_vector_text(&coords)
                        })
                        .collect();
                    out.push_str(&format!("<{}>\n", rows.join(", ")));
                }
            } else {
                let constraints: Vec<String> = fam
                    .residual
                    .iter()
                    .map(|e| format!("{} = 0", reparse(e).render(&text_name)))
                    .collect();
                out.push_str(&format!(
                    "chart {} unsolved with {} free parameter(s): {}\n",
                    fam.chart,
                    fam.free_parameters,
                    constraints.join("; ")
                ));
            }
        }
    }
    out
}
