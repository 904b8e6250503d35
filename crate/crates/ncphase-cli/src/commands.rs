//! Command implementations. Each returns the rendered stdout plus the exit
//! code; error paths map to the exit-code contract (0 success, 1
//! verification failure, 2 usage/config error, 3 domain error).

use serde::Serialize;

use ncphase_core::bounds::{self, CodataConstants, ThetaBoundRoute};
use ncphase_core::corrections::{self, CorrectionError, CorrectionRoute};
use ncphase_core::hydrogen::{self, HydrogenError, QuantumNumbers};
use ncphase_core::oscillator::NcParams;
use ncphase_core::suite::{run_algebra_suite, SuiteOptions};
use ncphase_core::Representation;
use num_traits::ToPrimitive;

use crate::config::{OutputFormat, Units};
use crate::output::{csv_line, fmt_f64, to_json};
use crate::CliError;

pub struct CommandOutcome {
    pub stdout: String,
    pub exit: u8,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { stdout, exit: 0 }
    }
}

/// Hidden test hook: deliberately corrupt the representation so the suite
/// must fail.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum CorruptMode {
    /// Drop the 1/2 from the coordinate coupling.
    DropHalfX,
}

pub fn cmd_verify(
    seed: u64,
    corrupt: Option<CorruptMode>,
    format: OutputFormat,
) -> Result<CommandOutcome, CliError> {
    let rep = match corrupt {
        None => Representation::standard(),
        Some(CorruptMode::DropHalfX) => Representation::corrupted_coordinate_coupling(),
    };
    let report = run_algebra_suite(&rep, &SuiteOptions::with_seed(seed));
    let stdout = match format {
        OutputFormat::Json => to_json(&report.entries),
        OutputFormat::Csv => {
            let mut out = String::from("id,lhs,rhs,pass\n");
            for e in &report.entries {
                out.push_str(&csv_line(&[
                    e.id.clone(),
                    e.lhs.clone(),
                    e.rhs.clone(),
                    e.pass.to_string(),
                ]));
                out.push('\n');
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for e in report.failures() {
                out.push_str(&format!(
                    "FAIL {}\n  computed: {}\n  expected: {}\n",
                    e.id, e.lhs, e.rhs
                ));
            }
            let failures = report.failures().count();
            out.push_str(&format!(
                "checked {} identities (seed {}): {}\n",
                report.entries.len(),
                report.seed,
                if failures == 0 {
                    "all pass".to_string()
                } else {
                    format!("{failures} FAILURES")
                }
            ));
            out
        }
    };
    Ok(CommandOutcome {
        stdout,
        exit: if report.all_pass() { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct CorrectionEmission {
    n: u32,
    l: u32,
    route: CorrectionRoute,
    delta_theta: f64,
    delta_eta: f64,
    total: f64,
    unit: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    si: Option<SiCorrection>,
}

#[derive(Serialize)]
struct SiCorrection {
    delta_theta: f64,
    delta_eta: f64,
    total: f64,
    unit: &'static str,
}

fn map_correction_error(e: CorrectionError) -> CliError {
    match e {
        CorrectionError::DivergentFormula { .. } => CliError::domain(e.to_string()),
        _ => CliError::usage(e.to_string()),
    }
}

pub fn cmd_correction(
    n: u32,
    l: u32,
    nc: &NcParams,
    units: Units,
    constants: &CodataConstants,
    format: OutputFormat,
) -> Result<CommandOutcome, CliError> {
    let c = corrections::correction(n, l, nc).map_err(map_correction_error)?;
    let si = match units {
        Units::Hartree => None,
        Units::Si => Some(SiCorrection {
            delta_theta: c.delta_theta * constants.hartree_j,
            delta_eta: c.delta_eta * constants.hartree_j,
            total: c.total * constants.hartree_j,
            unit: "J",
        }),
    };
    let emission = CorrectionEmission {
        n: c.n,
        l: c.l,
        route: c.route,
        delta_theta: c.delta_theta,
        delta_eta: c.delta_eta,
        total: c.total,
        unit: "hartree",
        si,
    };
    let stdout = match format {
        OutputFormat::Json => to_json(&emission),
        OutputFormat::Csv => {
            let mut out = String::from("n,l,delta_theta,delta_eta,total,route\n");
            out.push_str(&csv_line(&[
                emission.n.to_string(),
                emission.l.to_string(),
                fmt_f64(emission.delta_theta),
                fmt_f64(emission.delta_eta),
                fmt_f64(emission.total),
                route_name(c.route).to_string(),
            ]));
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "level n={} l={} ({})\n  delta_theta = {} hartree\n  delta_eta   = {} hartree\n  total       = {} hartree\n",
                emission.n,
                emission.l,
                route_name(c.route),
                fmt_f64(emission.delta_theta),
                fmt_f64(emission.delta_eta),
                fmt_f64(emission.total),
            );
            if let Some(si) = &emission.si {
                out.push_str(&format!(
                    "  delta_theta = {} J\n  delta_eta   = {} J\n  total       = {} J\n",
                    fmt_f64(si.delta_theta),
                    fmt_f64(si.delta_eta),
                    fmt_f64(si.total),
                ));
            }
            out
        }
    };
    Ok(CommandOutcome::ok(stdout))
}

fn route_name(route: CorrectionRoute) -> &'static str {
    match route {
        CorrectionRoute::GenericLGe2 => "generic_l_ge_2",
        CorrectionRoute::NsFormula => "ns_formula",
    }
}

#[derive(Serialize)]
struct ScanRow {
    n: u32,
    l: u32,
    delta_theta: Option<f64>,
    delta_eta: f64,
    total: Option<f64>,
    route: &'static str,
}

pub const SCAN_MAX_N: u32 = 50;

pub fn cmd_scan(
    n_max: u32,
    nc: &NcParams,
    format: OutputFormat,
) -> Result<CommandOutcome, CliError> {
    if !(1..=SCAN_MAX_N).contains(&n_max) {
        return Err(CliError::usage(format!(
            "n-max must be in 1..={SCAN_MAX_N}"
        )));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for l in 0..n {
            let delta_eta = corrections::delta_eta(n, l, nc).expect("valid (n, l)");
            let row = match corrections::correction(n, l, nc) {
                Ok(c) => ScanRow {
                    n,
                    l,
                    delta_theta: Some(c.delta_theta),
                    delta_eta: c.delta_eta,
                    total: Some(c.total),
                    route: route_name(c.route),
                },
                Err(CorrectionError::DivergentFormula { .. }) => ScanRow {
                    n,
                    l,
                    delta_theta: None,
                    delta_eta,
                    total: None,
                    route: "unsupported",
                },
                Err(e) => return Err(CliError::usage(e.to_string())),
            };
            rows.push(row);
        }
    }
    let stdout = match format {
        OutputFormat::Json => to_json(&rows),
        // the table is the text form too
        OutputFormat::Csv | OutputFormat::Text => {
            let mut out = String::from("n,l,delta_theta,delta_eta,total,route\n");
            for r in &rows {
                out.push_str(&csv_line(&[
                    r.n.to_string(),
                    r.l.to_string(),
                    r.delta_theta.map(fmt_f64).unwrap_or_default(),
                    fmt_f64(r.delta_eta),
                    r.total.map(fmt_f64).unwrap_or_default(),
                    r.route.to_string(),
                ]));
                out.push('\n');
            }
            out
        }
    };
    Ok(CommandOutcome::ok(stdout))
}

pub fn cmd_bounds(
    accuracy: f64,
    budget_fraction: f64,
    route: ThetaBoundRoute,
    constants: &CodataConstants,
    format: OutputFormat,
) -> Result<CommandOutcome, CliError> {
    let result = bounds::bounds(accuracy, budget_fraction, route, constants)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let stdout = match format {
        OutputFormat::Json => to_json(&result),
        OutputFormat::Csv => {
            let mut out = String::from(
                "accuracy,budget_fraction,theta_tilde,theta_si_m2,eta_tilde,eta_si_kg2_m2_s2,published_order_match,published_value_discrepancy\n",
            );
            out.push_str(&csv_line(&[
                fmt_f64(result.accuracy_used),
                fmt_f64(result.budget_fraction),
                fmt_f64(result.theta.tilde),
                fmt_f64(result.theta.si_m2),
                fmt_f64(result.eta.tilde),
                fmt_f64(result.eta.si_kg2_m2_s2),
                result.published_order_match.to_string(),
                result.published_value_discrepancy.to_string(),
            ]));
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let (f, acc) = bounds::transition_reference();
            format!(
                "1s-2s reference: f = {} Hz, relative accuracy {}\n\
                 budget per parameter: {}\n\
                 theta: tilde <= {}, hbar<theta> <= {} m^2 (published order {:.0e}: {})\n\
                 eta:   tilde <= {}, hbar*sqrt(<eta^2>) <= {} kg^2 m^2/s^2 (published {:.0e}: {})\n",
                f,
                fmt_f64(acc),
                fmt_f64(accuracy * budget_fraction),
                fmt_f64(result.theta.tilde),
                fmt_f64(result.theta.si_m2),
                result.published_theta_order_m2,
                if result.published_order_match { "match" } else { "NO MATCH" },
                fmt_f64(result.eta.tilde),
                fmt_f64(result.eta.si_kg2_m2_s2),
                result.published_eta_value,
                if result.published_value_discrepancy { "DISCREPANCY" } else { "match" },
            )
        }
    };
    Ok(CommandOutcome::ok(stdout))
}

#[derive(Serialize)]
struct MomentEmission {
    n: u32,
    l: u32,
    s: i32,
    /// Exact rational value, e.g. `1/24`.
    closed_form: String,
    closed_form_value: f64,
    quadrature_value: f64,
    relative_gap: f64,
}

pub fn cmd_moment(
    n: u32,
    l: u32,
    s: i32,
    tol: f64,
    format: OutputFormat,
) -> Result<CommandOutcome, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::usage("tol must be positive".into()));
    }
    let q = QuantumNumbers::new(n, l, 0).map_err(|e| CliError::usage(e.to_string()))?;
    let map_err = |e: HydrogenError| match e {
        HydrogenError::InvalidQuantumNumbers { .. } => CliError::usage(e.to_string()),
        _ => CliError::domain(e.to_string()),
    };
    let exact = hydrogen::radial_moment(&q, s).map_err(map_err)?;
    let closed_form_value = exact.to_f64().unwrap();
    let quadrature_value = hydrogen::quadrature_moment(&q, s, tol).map_err(map_err)?;
    let relative_gap = ((quadrature_value - closed_form_value) / closed_form_value).abs();
    let emission = MomentEmission {
        n,
        l,
        s,
        closed_form: exact.to_string(),
        closed_form_value,
        quadrature_value,
        relative_gap,
    };
    let stdout = match format {
        OutputFormat::Json => to_json(&emission),
        OutputFormat::Csv => {
            let mut out =
                String::from("n,l,s,closed_form,closed_form_value,quadrature_value,relative_gap\n");
            out.push_str(&csv_line(&[
                n.to_string(),
                l.to_string(),
                s.to_string(),
                emission.closed_form.clone(),
                fmt_f64(closed_form_value),
                fmt_f64(quadrature_value),
                fmt_f64(relative_gap),
            ]));
            out.push('\n');
            out
        }
        OutputFormat::Text => format!(
            "<r^{s}> for n={n} l={l}\n  closed form: {} = {}\n  quadrature:  {}\n  relative gap: {}\n",
            emission.closed_form,
            fmt_f64(closed_form_value),
            fmt_f64(quadrature_value),
            fmt_f64(relative_gap),
        ),
    };
    Ok(CommandOutcome::ok(stdout))
}
