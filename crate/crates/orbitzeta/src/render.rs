//! Canonical machine-readable renderings shared by the CLI and the C API:
//! polynomial term lists, rational-series text, JSON reports with big
//! integers as decimal strings, and the CSV row formats. Everything here is
//! deterministic byte-for-byte.

use serde_json::{json, Value};

use crate::analysis::NaturalBoundaryReport;
use crate::carlitz::{FuneqReport, ScanRow, UnitaryReport, UnitaryStatus};
use crate::orbit::{AsymptoticFit, EulerFactor, OrbitData};
use crate::poly::BivarPoly;
use crate::series::RationalSeries;

/// JSON form of a polynomial: a list of [x-exp, q-exp, coeff-decimal-string].
pub fn poly_json(p: &BivarPoly) -> Value {
    Value::Array(
        p.to_json_terms()
            .into_iter()
            .map(|(i, j, c)| json!([i, j, c]))
            .collect(),
    )
}

/// Text form of a factored rational series, e.g.
/// `(1 + 4*t + t^2) / (1 - t)^3`.
pub fn series_text(s: &RationalSeries, xname: &str, qname: &str) -> String {
    let num = s.numerator().to_text(xname, qname);
    if s.denominator().is_empty() {
        return num;
    }
    let den: Vec<String> = s
        .denominator()
        .iter()
        .map(|f| {
            let base = BivarPoly::one_minus(f.x_exp, f.q_exp).to_text(xname, qname);
            if f.mult == 1 {
                format!("({base})")
            } else {
                format!("({base})^{}", f.mult)
            }
        })
        .collect();
    format!("({num}) / {}", den.join(" * "))
}

pub fn series_json(s: &RationalSeries, var_hint: &str) -> Value {
    json!({
        "variable": var_hint,
        "numerator": poly_json(s.numerator()),
        "denominator_factors": s.denominator().iter().map(|f| {
            json!({"x_exp": f.x_exp, "q_exp": f.q_exp, "mult": f.mult})
        }).collect::<Vec<_>>(),
    })
}

pub fn euler_factor_json(f: &EulerFactor) -> Value {
    json!({
        "partition": f.partition.to_string(),
        "prime": f.prime,
        "shift": f.shift,
        "numerator": poly_json(&f.numerator),
        "numerator_text": f.numerator.to_text("t", "p"),
        "denominator_factors": f.denom_multipliers.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "series_prefix": f.series_prefix.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

pub fn funeq_json(report: &FuneqReport) -> Value {
    json!({
        "partition": report.partition.to_string(),
        "variant": "polynomial",
        "holds": report.holds,
        "x_exponent": report.exponents.map(|e| e.0),
        "q_exponent": report.exponents.map(|e| e.1),
        "monicity_witness": report.monicity_witness.as_ref().map(|w| w.to_string()),
    })
}

/// The Euler-factor functional-equation report; `holds` comes from the
/// symbolic check at the given prime.
pub fn euler_funeq_json(report: &FuneqReport, prime: u64, holds: bool) -> Value {
    let r = report.partition.parts()[0] as i64;
    let m = report.partition.m() as i64;
    json!({
        "partition": report.partition.to_string(),
        "variant": "euler",
        "prime": prime,
        "holds": holds,
        "sign": if holds { Some(if (r * m) % 2 == 0 { 1 } else { -1 }) } else { None },
        "p_exponent": if holds { Some(m * r * (r + 1) / 2 - r) } else { None },
        "t_exponent": if holds { Some(r) } else { None },
        "monicity_witness": report.monicity_witness.as_ref().map(|w| w.to_string()),
    })
}

pub fn unitary_json(report: &UnitaryReport) -> Value {
    let status = match report.status {
        UnitaryStatus::NonzeroCharneyDavis => "nonzero-charney-davis",
        UnitaryStatus::Factored => "factored",
        UnitaryStatus::ZeroNoCandidate => "zero-charney-davis-no-candidate",
        UnitaryStatus::CandidateFailed => "candidate-failed",
    };
    json!({
        "partition": report.partition.to_string(),
        "charney_davis": report.charney_davis.to_string(),
        "status": status,
        "factor": report.factor.as_ref().map(|f| f.to_text("x", "q")),
        "cofactor": report.cofactor.as_ref().map(|f| f.to_text("x", "q")),
    })
}

pub fn boundary_report_json(report: &NaturalBoundaryReport) -> Value {
    let p = &report.data.partition;
    json!({
        "partition": p.to_string(),
        "type": report.boundary_type.as_str(),
        "boundary_re_s": p.n() as i64 - 2,
        "alpha": report.data.alpha.to_string(),
        "beta": report.data.beta.to_string(),
        "ghost": report.data.ghost.to_text("U", "_"),
        "gamma": report.data.gamma,
        "b_polys": report.data.b_polys.iter()
            .map(|b| b.to_text("U", "_")).collect::<Vec<_>>(),
        "b_gamma_at_omega": report.b_gamma_at_omega.as_ref().map(|v| v.to_string()),
        "omega": report.data.omega,
        "charney_davis": report.charney_davis.to_string(),
        "unitary_factor_removed": report.unitary_factor_removed.as_ref()
            .map(|f| f.to_text("X", "Y")),
        "conjecture_dependency": report.conjecture_dependency,
    })
}

pub const SCAN_CSV_HEADER: &str = "lambda1,lambda2,value,stanton_covered";

pub fn scan_csv_row(row: &ScanRow) -> String {
    format!(
        "{},{},{},{}",
        row.lambda1,
        row.lambda2,
        row.value,
        u8::from(row.stanton_covered)
    )
}

pub fn scan_json(max_n: u32, rows: &[ScanRow]) -> Value {
    use num_traits::Zero;
    let zeros: Vec<Value> = rows
        .iter()
        .filter(|r| r.value.is_zero())
        .map(|r| json!([r.lambda1, r.lambda2]))
        .collect();
    json!({
        "max_N": max_n,
        "pairs_scanned": rows.len(),
        "zeros": zeros,
        "rows": rows.iter().map(|r| json!({
            "lambda1": r.lambda1,
            "lambda2": r.lambda2,
            "value": r.value.to_string(),
            "stanton_covered": r.stanton_covered,
        })).collect::<Vec<_>>(),
    })
}

pub const ORBIT_CSV_HEADER: &str = "n,orbit_count,partial_sum";

pub fn orbit_csv_row(data: &OrbitData, n: u64) -> String {
    format!("{},{},{}", n, data.value(n), data.partial_sum(n))
}

pub fn orbit_data_json(data: &OrbitData) -> Value {
    json!({
        "partition": data.partition.to_string(),
        "n_max": data.n_max(),
        "values": data.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "partial_sums": data.partial_sums.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

/// Floats are printed with fixed six decimals; this is the only place any
/// floating-point value reaches the output layer.
pub fn asymptotic_fit_json(fit: &AsymptoticFit) -> Value {
    json!({
        "partition": fit.partition.to_string(),
        "n_max": fit.n_max,
        "expected_exponent": fit.partition.n(),
        "fitted_exponent": format!("{:.6}", fit.fitted_exponent),
        "k_estimate": format!("{:.6}", fit.k_estimate),
        "decade_ratios": fit.decade_ratios.iter().map(|(n, r)| {
            json!({"n": n, "ratio": format!("{r:.6}")})
        }).collect::<Vec<_>>(),
    })
}
