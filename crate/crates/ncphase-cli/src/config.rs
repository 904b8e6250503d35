//! Run configuration: a single flat JSON document, optionally pointed to by
//! `--config` or the `NCPHASE_CONFIG` environment variable, with
//! command-line flags overriding file values. Unknown keys are rejected.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use ncphase_core::bounds::CodataConstants;
use ncphase_core::oscillator::{NcMoments, NcParams, OscillatorParams, PLANCK_LENGTH_BOHR};

use crate::CliError;

/// Environment variable naming the config file when `--config` is absent.
pub const CONFIG_ENV_VAR: &str = "NCPHASE_CONFIG";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    #[default]
    Hartree,
    Si,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaRouteArg {
    Closed,
    NsDifference,
}

impl From<ThetaRouteArg> for ncphase_core::bounds::ThetaBoundRoute {
    fn from(v: ThetaRouteArg) -> Self {
        match v {
            ThetaRouteArg::Closed => Self::ClosedCoefficient,
            ThetaRouteArg::NsDifference => Self::NsDifference,
        }
    }
}

/// The flat config document. All keys optional; flags override.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub units: Option<Units>,
    pub output: Option<OutputFormat>,
    pub seed: Option<u64>,

    // noncommutativity inputs, raw form
    pub l0: Option<f64>,
    pub p0: Option<f64>,
    pub l_p: Option<f64>,
    // noncommutativity inputs, dimensionless-moments form
    pub theta_tilde: Option<f64>,
    pub theta_sq_tilde: Option<f64>,
    pub eta_sq_tilde: Option<f64>,

    // bound inference
    pub accuracy: Option<f64>,
    pub budget_fraction: Option<f64>,
    pub theta_route: Option<ThetaRouteArg>,

    // CODATA overrides
    pub bohr_radius_m: Option<f64>,
    pub hbar_j_s: Option<f64>,
    pub electron_mass_kg: Option<f64>,
    pub hartree_j: Option<f64>,
    pub planck_constant_j_s: Option<f64>,
    pub planck_length_m: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("invalid config {}: {e}", path.display())))
    }

    /// Resolve the config source: explicit flag first, then the
    /// environment variable, then empty defaults.
    pub fn resolve(flag: Option<&PathBuf>) -> Result<Self, CliError> {
        if let Some(path) = flag {
            return Self::load(path);
        }
        if let Ok(path) = std::env::var(CONFIG_ENV_VAR) {
            if !path.is_empty() {
                return Self::load(Path::new(&path));
            }
        }
        Ok(Self::default())
    }

    pub fn constants(&self) -> CodataConstants {
        let d = CodataConstants::default();
        CodataConstants {
            bohr_radius_m: self.bohr_radius_m.unwrap_or(d.bohr_radius_m),
            hbar_j_s: self.hbar_j_s.unwrap_or(d.hbar_j_s),
            electron_mass_kg: self.electron_mass_kg.unwrap_or(d.electron_mass_kg),
            hartree_j: self.hartree_j.unwrap_or(d.hartree_j),
            planck_constant_j_s: self.planck_constant_j_s.unwrap_or(d.planck_constant_j_s),
            planck_length_m: self.planck_length_m.unwrap_or(d.planck_length_m),
        }
    }
}

/// Noncommutativity flags shared by `correction` and `scan`.
#[derive(Clone, Copy, Debug, Default, clap::Args)]
pub struct NcArgs {
    /// Coordinate coupling constant l0 (atomic units)
    #[arg(long)]
    pub l0: Option<f64>,
    /// Momentum coupling constant p0 (atomic units)
    #[arg(long)]
    pub p0: Option<f64>,
    /// Oscillator length l_p (atomic units; defaults to the Planck length)
    #[arg(long = "l-p")]
    pub l_p: Option<f64>,
    /// Dimensionless moment θ̃ = ℏ⟨θ⟩/a_B²
    #[arg(long)]
    pub theta_tilde: Option<f64>,
    /// Dimensionless moment θ̃² = ℏ²⟨θ²⟩/a_B⁴
    #[arg(long)]
    pub theta_sq_tilde: Option<f64>,
    /// Dimensionless moment η̃² = a_B⁴⟨η²⟩/ℏ²
    #[arg(long)]
    pub eta_sq_tilde: Option<f64>,
}

/// Merge file config and flags into the noncommutativity inputs. Exactly
/// one input form may be present; every magnitude must be ≥ 0.
pub fn resolve_nc_params(file: &FileConfig, flags: &NcArgs) -> Result<NcParams, CliError> {
    let l0 = flags.l0.or(file.l0);
    let p0 = flags.p0.or(file.p0);
    let l_p = flags.l_p.or(file.l_p);
    let theta_tilde = flags.theta_tilde.or(file.theta_tilde);
    let theta_sq_tilde = flags.theta_sq_tilde.or(file.theta_sq_tilde);
    let eta_sq_tilde = flags.eta_sq_tilde.or(file.eta_sq_tilde);

    let raw_given = l0.is_some() || p0.is_some() || l_p.is_some();
    let moments_given = theta_tilde.is_some() || theta_sq_tilde.is_some() || eta_sq_tilde.is_some();
    if raw_given && moments_given {
        return Err(CliError::usage(
            "give either raw inputs (l0/p0/l-p) or dimensionless moments (theta-tilde/theta-sq-tilde/eta-sq-tilde), not both".into(),
        ));
    }

    if raw_given {
        let params = OscillatorParams::new(
            l0.unwrap_or(0.0),
            p0.unwrap_or(0.0),
            l_p.unwrap_or(PLANCK_LENGTH_BOHR),
        )
        .map_err(|e| CliError::usage(format!("invalid noncommutativity inputs: {e}")))?;
        return Ok(NcParams::Raw(params));
    }

    let m = NcMoments {
        theta_tilde: theta_tilde.unwrap_or(0.0),
        theta_sq_tilde: theta_sq_tilde.unwrap_or(0.0),
        eta_sq_tilde: eta_sq_tilde.unwrap_or(0.0),
    };
    if m.theta_tilde < 0.0 || m.theta_sq_tilde < 0.0 || m.eta_sq_tilde < 0.0 {
        return Err(CliError::usage("moments must be ≥ 0".into()));
    }
    Ok(NcParams::Moments(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_rejected() {
        let err = serde_json::from_str::<FileConfig>(r#"{"bogus": 1}"#);
        assert!(err.is_err());
    }

    #[test]
    fn mixed_nc_forms_rejected() {
        let file = FileConfig {
            l0: Some(1.0),
            ..Default::default()
        };
        let flags = NcArgs {
            theta_tilde: Some(1.0),
            ..Default::default()
        };
        assert!(resolve_nc_params(&file, &flags).is_err());
    }

    #[test]
    fn flags_override_file() {
        let file: FileConfig = serde_json::from_str(r#"{"eta_sq_tilde": 2.0}"#).unwrap();
        let flags = NcArgs {
            eta_sq_tilde: Some(3.0),
            ..Default::default()
        };
        let nc = resolve_nc_params(&file, &flags).unwrap();
        assert_eq!(nc.moments().eta_sq_tilde, 3.0);
    }

    #[test]
    fn raw_form_defaults_planck_length() {
        let file = FileConfig::default();
        let flags = NcArgs {
            l0: Some(1.0),
            ..Default::default()
        };
        let nc = resolve_nc_params(&file, &flags).unwrap();
        match nc {
            NcParams::Raw(p) => assert_eq!(p.l_p(), PLANCK_LENGTH_BOHR),
            _ => panic!("expected raw params"),
        }
    }

    #[test]
    fn empty_input_is_zero_moments() {
        let nc = resolve_nc_params(&FileConfig::default(), &NcArgs::default()).unwrap();
        assert_eq!(nc.moments(), NcMoments::default());
    }
}
