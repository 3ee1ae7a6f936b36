//! Reports emitted by the command-line tool.
//!
//! A report carries a JSON payload and a flat table used for the text and TSV
//! renderings. The JSON envelope is `{kind, tool_version, inputs, payload}`
//! with object keys in sorted order, so identical inputs give identical bytes.

use crate::error::{Error, Result};
use crate::geometry::{self, SectionAtom, SectionFormula, YCondition};
use crate::induction;
use crate::rational::{fmt_rational, rational_json};
use crate::rootdata::{build_root_datum, Series};
use crate::subregular::{
    enumerate_subregular, family_ranks, levi_slope_roots, standard_class, SeriesTag, ALL_TAGS,
};
use crate::verify::{self, Check, Suite};
use serde::Serialize;
use serde_json::{json, Map, Value};

/// Version string written into every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// What a report contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    Classification,
    WeightsTable,
    DegreesTable,
    RootsTable,
    BlowupPlan,
    Singularity,
    Verification,
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// Aligned columns.
    Text,
    /// Pretty-printed JSON.
    Json,
    /// Tab-separated values with a header line.
    Tsv,
}

/// A rendered-ready report.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    /// Report kind.
    pub kind: ReportKind,
    /// Inputs that produced the report.
    pub inputs: Map<String, Value>,
    /// Structured content.
    pub payload: Value,
    /// Column headers of the flat table.
    pub columns: Vec<String>,
    /// Rows of the flat table.
    pub rows: Vec<Vec<String>>,
    /// Lines printed after the table in text mode.
    pub notes: Vec<String>,
}

/// Replaces the non-ASCII symbols used in reports by ASCII spellings.
pub fn ascii_fold(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        let rep = match c {
            'ϖ' => "w",
            'α' => "a",
            'β' => "b",
            'θ' => "theta",
            'μ' => "mu",
            'ρ' => "rho",
            'χ' => "chi",
            'λ' => "lambda",
            '∨' => "v",
            '−' => "-",
            '⟨' => "<",
            '⟩' => ">",
            '⊕' => "+",
            '⊔' => "u",
            '⫽' => "//",
            '∞' => "inf",
            '≥' => ">=",
            '≤' => "<=",
            '≠' => "!=",
            '∅' => "{}",
            '′' => "'",
            '²' => "^2",
            '³' => "^3",
            '⁴' => "^4",
            '¹' => "^1",
            '⁰' => "^0",
            '⁵' => "^5",
            '⁶' => "^6",
            '⁷' => "^7",
            '⁸' => "^8",
            '⁹' => "^9",
            '⁻' => "^-",
            'Ŷ' => "Y^",
            '→' => "->",
            '·' => ".",
            _ => {
                out.push(c);
                continue;
            }
        };
        out.push_str(rep);
    }
    out
}

fn fold_value(v: Value) -> Value {
    match v {
        Value::String(s) => Value::String(ascii_fold(&s)),
        Value::Array(a) => Value::Array(a.into_iter().map(fold_value).collect()),
        Value::Object(m) => Value::Object(
            m.into_iter()
                .map(|(k, v)| (ascii_fold(&k), fold_value(v)))
                .collect(),
        ),
        other => other,
    }
}

impl Report {
    fn new(kind: ReportKind, inputs: Value, payload: Value, columns: &[&str]) -> Self {
        let inputs = match inputs {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Report {
            kind,
            inputs,
            payload,
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// The JSON envelope.
    pub fn to_json_value(&self) -> Value {
        json!({
            "kind": self.kind,
            "tool_version": TOOL_VERSION,
            "inputs": Value::Object(self.inputs.clone()),
            "payload": self.payload.clone(),
        })
    }

    /// Renders in the chosen format; `ascii` folds every non-ASCII symbol.
    pub fn render(&self, format: Format, ascii: bool) -> String {
        match format {
            Format::Json => {
                let v = self.to_json_value();
                let v = if ascii { fold_value(v) } else { v };
                let mut s =
                    serde_json::to_string_pretty(&v).expect("report values are serializable");
                s.push('\n');
                s
            }
            Format::Text => self.maybe_fold(self.render_text(), ascii),
            Format::Tsv => self.maybe_fold(self.render_tsv(), ascii),
        }
    }

    fn maybe_fold(&self, s: String, ascii: bool) -> String {
        if ascii {
            ascii_fold(&s)
        } else {
            s
        }
    }

    fn render_text(&self) -> String {
        let width = |s: &str| s.chars().count();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| width(c)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(cell));
            }
        }
        let line = |cells: &[String]| -> String {
            let mut s = String::new();
            for (idx, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                s.push_str(cell);
                if idx + 1 < cells.len() {
                    s.push_str(&" ".repeat(w - width(cell) + 2));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&line(&self.columns));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str(note);
            out.push('\n');
        }
        out
    }

    fn render_tsv(&self) -> String {
        let mut out = self.columns.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

fn rationals_json(v: &[crate::rational::Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

fn fmt_list<T: std::fmt::Display>(v: &[T]) -> String {
    format!(
        "[{}]",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn type_inputs(series: Series, rank: usize) -> Value {
    json!({ "series": series.letter().to_string(), "rank": rank })
}

/// All subregular classes of `series_rank`.
pub fn classification(series: Series, rank: usize) -> Result<Report> {
    let rd = build_root_datum(series, rank)?;
    let classes = enumerate_subregular(&rd)?;
    let mut rep = Report::new(
        ReportKind::Classification,
        type_inputs(series, rank),
        Value::Null,
        &[
            "tag",
            "t(P)",
            "⟨ϖ_k, μ⟩",
            "α_i",
            "α_j",
            "n0",
            "n1",
            "d",
            "N",
            "−⟨2ρ, μ⟩",
        ],
    );
    let mut items = Vec::new();
    for c in &classes {
        let tp: Vec<usize> = c.tp.t().iter().copied().collect();
        items.push(json!({
            "tag": c.tag,
            "label": c.label(),
            "t_p": tp,
            "mu": rationals_json(&c.mu.0),
            "alpha_i": c.alpha_i,
            "alpha_j": c.alpha_j,
            "c0": c.c0,
            "c1": c.c1,
            "n0": c.n0(),
            "n1": c.n1(),
            "d": c.d,
            "N": c.big_n,
            "minus_two_rho_mu": rational_json(&c.minus_two_rho_mu()),
        }));
        let mu: Vec<String> = c.mu.0.iter().map(fmt_rational).collect();
        rep.rows.push(vec![
            c.tag.to_string(),
            fmt_list(&tp),
            format!("({})", mu.join(", ")),
            c.alpha_i.to_string(),
            c.alpha_j.map_or("-".into(), |j| j.to_string()),
            c.n0().to_string(),
            c.n1().to_string(),
            c.d.to_string(),
            c.big_n.to_string(),
            fmt_rational(&c.minus_two_rho_mu()),
        ]);
    }
    rep.payload = json!({ "group": rd.name(), "classes": items });
    rep.notes.push(format!(
        "{} subregular class(es) in {}",
        classes.len(),
        rd.name()
    ));
    Ok(rep)
}

/// The weights table: Looijenga weights of the base, `(μ | −)` and slice weights.
pub fn weights_table(max_rank: usize, ascii: bool) -> Result<Report> {
    let mut rep = Report::new(
        ReportKind::WeightsTable,
        json!({ "max_rank": max_rank }),
        Value::Null,
        &["row", "Ŷ⫽W", "(μ|−)", "slice", "total", "discrepancy"],
    );
    let mut items = Vec::new();
    for tag in ALL_TAGS {
        for l in family_ranks(tag, max_rank) {
            let row = induction::weights_row(tag, l)?;
            let printed = induction::printed_weights_row(tag, l)
                .map(|p| json!({ "base": p.base, "mu_weight": p.mu_weight, "slice": p.slice }));
            items.push(json!({
                "label": row.label,
                "tag": tag,
                "rank": l,
                "base": row.base,
                "mu_weight": row.mu_weight,
                "slice": row.slice,
                "slice_total": row.slice.total(),
                "fiber_dimension": row.fiber_dimension,
                "printed": printed,
                "discrepancies": row.discrepancies,
            }));
            let mu = row
                .mu_weight
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            rep.rows.push(vec![
                row.label.clone(),
                row.base.render(ascii),
                if row.mu_weight.len() == 1 {
                    mu
                } else {
                    format!("({mu})")
                },
                row.slice.render(ascii),
                row.slice.total().to_string(),
                if row.discrepancies.is_empty() {
                    "-".into()
                } else {
                    row.discrepancies.join("; ")
                },
            ]);
        }
    }
    rep.payload = json!({ "rows": items });
    Ok(rep)
}

/// Degrees of `(D_1)_y`, with the tag A degree sums.
pub fn degrees_table(max_rank: usize) -> Result<Report> {
    let mut rep = Report::new(
        ReportKind::DegreesTable,
        json!({ "max_rank": max_rank }),
        Value::Null,
        &["row", "d", "n0", "N", "(E²) in (D_1')_y", "deg (D_1)_y"],
    );
    let mut items = Vec::new();
    for tag in ALL_TAGS {
        if tag == SeriesTag::A1 {
            continue;
        }
        for l in family_ranks(tag, max_rank) {
            let c = standard_class(tag, l)?;
            let (e2, degree, sum) = if tag == SeriesTag::A {
                (None, None, Some(geometry::degree_sum_type_a(&c)?))
            } else {
                (
                    Some(geometry::base_self_intersection(&c)?),
                    Some(geometry::degree_d1(&c)?),
                    None,
                )
            };
            items.push(json!({
                "label": c.label(),
                "tag": tag,
                "rank": l,
                "d": c.d,
                "n0": c.n0(),
                "N": c.big_n,
                "base_self_intersection": e2,
                "degree": degree,
                "degree_sum": sum,
            }));
            rep.rows.push(vec![
                c.label(),
                c.d.to_string(),
                c.n0().to_string(),
                c.big_n.to_string(),
                e2.map_or("-".into(), |x| x.to_string()),
                match (degree, sum) {
                    (Some(x), _) => x.to_string(),
                    (_, Some(s)) => format!("sum {s}"),
                    _ => "-".into(),
                },
            ]);
        }
    }
    rep.payload = json!({ "rows": items });
    Ok(rep)
}

fn root_string(coeffs: &[i64], ascii: bool) -> String {
    SectionFormula::new(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (c, SectionAtom::Alpha(k + 1))),
    )
    .render(ascii)
}

/// Roots of the Levi with negative pairing against `μ'`, for the `B`, `C`, `D` families.
pub fn roots_table(max_rank: usize, ascii: bool) -> Result<Report> {
    let mut rep = Report::new(
        ReportKind::RootsTable,
        json!({ "max_rank": max_rank }),
        Value::Null,
        &["row", "α", "⟨α, μ′⟩", "⟨α, ϖ_l∨⟩"],
    );
    let mut items = Vec::new();
    for tag in [SeriesTag::B, SeriesTag::C, SeriesTag::D] {
        for l in family_ranks(tag, max_rank) {
            let c = standard_class(tag, l)?;
            let rows = levi_slope_roots(&c)?;
            let mut roots = Vec::new();
            for r in &rows {
                roots.push(json!({
                    "root": r.root,
                    "mu_prime": rational_json(&r.mu_prime),
                    "varpi_l": rational_json(&r.varpi_l),
                }));
                rep.rows.push(vec![
                    c.label(),
                    root_string(&r.root, ascii),
                    fmt_rational(&r.mu_prime),
                    fmt_rational(&r.varpi_l),
                ]);
            }
            items.push(json!({ "label": c.label(), "tag": tag, "rank": l, "alpha_i": c.alpha_i, "roots": roots }));
        }
    }
    rep.payload = json!({ "rows": items });
    Ok(rep)
}

/// Blowup plans of every class of `series_rank`.
pub fn blowup_plan(series: Series, rank: usize, ascii: bool) -> Result<Report> {
    let rd = build_root_datum(series, rank)?;
    let mut rep = Report::new(
        ReportKind::BlowupPlan,
        type_inputs(series, rank),
        Value::Null,
        &["class", "item", "value"],
    );
    let mut items = Vec::new();
    for c in enumerate_subregular(&rd)? {
        let who = c.describe();
        let mut push =
            |item: &str, value: String| rep.rows.push(vec![who.clone(), item.to_string(), value]);
        if c.alpha_j.is_none() {
            push("plan", "no slice for this class".into());
            items.push(json!({ "label": c.label(), "alpha_i": c.alpha_i, "plan": Value::Null }));
            continue;
        }
        let dec = geometry::divisor_decomposition(&c)?;
        let theta = geometry::theta_sections(&c)?;
        let theta_p = geometry::theta_prime_sections(&c)?;
        let hirz = geometry::hirzebruch_component(&c)?;
        let generic = geometry::base_surface(&c, YCondition::Generic)?;
        let special = geometry::base_surface(&c, YCondition::Special)?;
        let e2 = geometry::base_self_intersection(&c).ok();
        let (degree, sum) = if c.tag == SeriesTag::A {
            (None, Some(geometry::degree_sum_type_a(&c)?))
        } else {
            (Some(geometry::degree_d1(&c)?), None)
        };
        let flops = (c.tag == SeriesTag::E).then(|| c.n0());
        let dec_text = dec
            .terms
            .iter()
            .map(|t| format!("{}·D[{}]", t.multiplicity, t.label))
            .collect::<Vec<_>>()
            .join(" + ");
        push("divisor", dec_text);
        for (k, f) in theta.iter().enumerate() {
            push(&format!("θ_{}", k + 1), f.render(ascii));
        }
        for (k, f) in theta_p.iter().enumerate() {
            push(&format!("θ′_{}", k + 1), f.render(ascii));
        }
        push("D[α_i∨+α_j∨] fibre", hirz.render(ascii));
        push("(D_1′)_y generic", generic.render(ascii));
        push("(D_1′)_y special", special.render(ascii));
        if let Some(x) = e2 {
            push("(E²) in (D_1′)_y", x.to_string());
        }
        if let Some(x) = degree {
            push("deg (D_1)_y", x.to_string());
        }
        if let Some(x) = sum {
            push("deg (D_1)_y + deg (D_1′)_y", x.to_string());
        }
        if let Some(x) = flops {
            push("flopping curves", x.to_string());
        }
        let render = |v: &[SectionFormula]| v.iter().map(|f| f.render(ascii)).collect::<Vec<_>>();
        items.push(json!({
            "label": c.label(),
            "alpha_i": c.alpha_i,
            "alpha_j": c.alpha_j,
            "plan": {
                "divisor": dec,
                "theta": render(&theta),
                "theta_prime": render(&theta_p),
                "hirzebruch_component": hirz,
                "base_surface": { "generic": generic, "special": special },
                "base_self_intersection": e2,
                "degree_d1": degree,
                "degree_sum": sum,
                "flop_count": flops,
                "relabelling": geometry::relabelling(&c),
            },
        }));
    }
    rep.payload = json!({ "group": rd.name(), "classes": items });
    Ok(rep)
}

/// Singular fibre and its singularities for every class of `series_rank`.
pub fn singularity(series: Series, rank: usize, ascii: bool) -> Result<Report> {
    let rd = build_root_datum(series, rank)?;
    let mut rep = Report::new(
        ReportKind::Singularity,
        type_inputs(series, rank),
        Value::Null,
        &["class", "χ⁻¹(0)", "singularities", "characteristic"],
    );
    let mut items = Vec::new();
    for c in enumerate_subregular(&rd)? {
        let (desc, report) = geometry::singularity_report(&c)?;
        rep.rows.push(vec![
            c.describe(),
            desc.render(ascii),
            report.summary.clone(),
            if report.characteristic_flags.is_empty() {
                "-".into()
            } else {
                report.characteristic_flags.join("; ")
            },
        ]);
        items.push(json!({
            "label": c.label(),
            "alpha_i": c.alpha_i,
            "singular_fiber": desc,
            "description": desc.render(ascii),
            "report": report,
        }));
    }
    rep.payload = json!({ "group": rd.name(), "classes": items });
    Ok(rep)
}

/// Runs the given suites and collects every check.
pub fn verification(suites: &[Suite], max_rank: usize) -> Result<Report> {
    let mut checks: Vec<Check> = Vec::new();
    for &s in suites {
        checks.extend(verify::run_suite(s, max_rank)?);
    }
    let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    let mut rep = Report::new(
        ReportKind::Verification,
        json!({ "suites": names, "max_rank": max_rank }),
        Value::Null,
        &["status", "suite", "check", "detail"],
    );
    for c in &checks {
        rep.rows.push(vec![
            if c.passed { "PASS" } else { "FAIL" }.into(),
            c.suite.to_string(),
            c.name.clone(),
            c.detail.clone(),
        ]);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let first = checks.iter().find(|c| !c.passed);
    if let Some(f) = first {
        rep.notes.push(format!(
            "first counterexample: [{}] {}: {}",
            f.suite, f.name, f.detail
        ));
    }
    rep.notes
        .push(format!("{} checks, {} failed", checks.len(), failed));
    rep.payload = json!({
        "passed": failed == 0,
        "total": checks.len(),
        "failed": failed,
        "first_failure": first,
        "checks": checks,
    });
    Ok(rep)
}

/// Whether a verification report recorded no failures.
pub fn verification_passed(rep: &Report) -> Result<bool> {
    if rep.kind != ReportKind::Verification {
        return Err(Error::InvalidConfiguration(
            "not a verification report".into(),
        ));
    }
    Ok(rep.payload["passed"].as_bool().unwrap_or(false))
}
