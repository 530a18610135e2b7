//! Rendering of reports, roots, and linear forms, in the display
//! conventions the per-root tables use.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::BigRational;
use crate::k_stability::InvariantReport;
use crate::polynomial::UniPoly;
use crate::root_system::{DynkinDiagram, Root};

/// Flags controlling the human-readable rendering.
#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub color: bool,
    pub table: bool,
    pub factor: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { color: color_enabled(), table: true, factor: true }
    }
}

/// ANSI styling is on unless `KSTAB_NO_COLOR` is set (to anything).
pub fn color_enabled() -> bool {
    std::env::var_os("KSTAB_NO_COLOR").is_none()
}

/// Root label: coordinate tuple for a single component, `α`-combination for
/// products (a leading rank-one factor is labeled `α_0`).
pub fn format_root(root: &Root, diagram: &DynkinDiagram) -> String {
    if diagram.components().len() == 1 {
        return root.to_string();
    }
    let base = diagram.node_label_base();
    let mut parts = Vec::new();
    for (i, &c) in root.coeffs().iter().enumerate() {
        let label = i + base;
        match c {
            0 => {}
            1 => parts.push(format!("α_{label}")),
            _ => parts.push(format!("{c}α_{label}")),
        }
    }
    parts.join("+")
}

/// Linear form in the table style: `x`, `3x`, `8-x`, `6+x`, `(24-x)/2`.
/// Non-integer coefficients factor out their common denominator.
pub fn format_linear(p: &UniPoly) -> String {
    assert!(p.degree().is_none_or(|d| d <= 1), "not a linear form: {p}");
    let c0 = p.coeff(0);
    let c1 = p.coeff(1);
    let den = c0.denom().lcm(c1.denom());
    if den.is_one() {
        return format_integer_linear(c0.numer(), c1.numer());
    }
    let scaled0 = (&c0 * BigRational::from_integer(den.clone())).to_integer();
    let scaled1 = (&c1 * BigRational::from_integer(den.clone())).to_integer();
    format!("({})/{den}", format_integer_linear(&scaled0, &scaled1))
}

fn format_integer_linear(c0: &BigInt, c1: &BigInt) -> String {
    let x_part = |c: &BigInt, lead: bool| -> String {
        let mag = c.abs();
        let sign = if c.is_negative() {
            "-"
        } else if lead {
            ""
        } else {
            "+"
        };
        if mag.is_one() {
            format!("{sign}x")
        } else {
            format!("{sign}{mag}x")
        }
    };
    if c1.is_zero() {
        return c0.to_string();
    }
    if c0.is_zero() {
        return x_part(c1, true);
    }
    format!("{c0}{}", x_part(c1, false))
}

fn paint(s: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

/// The three-column per-root table. Rows are unpadded
/// `root | numerator | denominator` lines so golden-file comparison stays
/// trivial.
pub fn render_table(report: &InvariantReport) -> String {
    let mut out = String::from("  root | numerator | denominator\n");
    for row in &report.table {
        out.push_str(&format!(
            "  {} | {} | {}\n",
            format_root(&row.root, &report.diagram),
            format_linear(&row.numerator),
            row.denominator
        ));
    }
    out
}

pub fn render_report_text(report: &InvariantReport, opts: &RenderOptions) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} ({})\n", report.name, report.diagram));
    out.push_str(&format!("  xi   = {}\n", report.xi));
    if opts.factor {
        if let Some(f) = &report.xi_factored {
            out.push_str(&format!("       = {f}\n"));
        }
    }
    out.push_str(&format!("  beta = {}\n", report.beta));
    out.push_str(&format!(
        "  A = {}   S = {}   L^n = {}\n",
        report.log_discrepancy, report.s_invariant, report.anticanonical_volume
    ));
    out.push_str(&format!("  volume polynomial:  {}\n", report.volume_poly));
    out.push_str(&format!("  integrand:          {}\n", report.integrand_poly));
    let verdict = match report.verdict {
        crate::k_stability::Verdict::Positive => paint("positive", "32;1", opts.color),
        crate::k_stability::Verdict::Zero => paint("zero", "33;1", opts.color),
        crate::k_stability::Verdict::Negative => paint("negative", "31;1", opts.color),
    };
    out.push_str(&format!("  verdict: xi {verdict}"));
    match report.verdict {
        crate::k_stability::Verdict::Positive => out.push_str(
            " — K-polystable, given uniqueness of the G-invariant divisor \
             and reductivity of Aut^0\n",
        ),
        _ => out.push('\n'),
    }
    if opts.table {
        out.push('\n');
        out.push_str(&render_table(report));
    }
    out
}

/// Schema-stable JSON: keys `{name, xi: {value, factored}, beta, S, A,
/// L_to_n, volume_poly, integrand_poly, table, verdict}`, all rationals as
/// strings.
pub fn render_report_json(report: &InvariantReport) -> serde_json::Value {
    serde_json::json!({
        "name": report.name,
        "xi": {
            "value": report.xi.to_string(),
            "factored": report.xi_factored.as_ref().map(|f| f.to_string()),
        },
        "beta": report.beta.to_string(),
        "S": report.s_invariant.to_string(),
        "A": report.log_discrepancy.to_string(),
        "L_to_n": report.anticanonical_volume.to_string(),
        "volume_poly": report.volume_poly.to_string(),
        "integrand_poly": report.integrand_poly.to_string(),
        "table": report.table.iter().map(|row| {
            serde_json::json!({
                "root": format_root(&row.root, &report.diagram),
                "numerator": format_linear(&row.numerator),
                "denominator": row.denominator.to_string(),
            })
        }).collect::<Vec<_>>(),
        "verdict": report.verdict.as_str(),
    })
}
