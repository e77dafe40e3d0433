//! Flag parsing. Every invocation becomes a [`JobSpec`], so flags and
//! `--job` files go through the same validation and produce the same output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::job::{Beta, Command, Format, JobSpec, Suite};
use crate::run::run;

#[derive(Debug, Parser)]
#[command(
    name = "szeta",
    version,
    about = "Spectra, spectral zeta functions and heat traces of the singular oscillator",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    /// Read the whole job from a JSON file instead of flags.
    #[arg(long, value_name = "FILE")]
    pub job: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Sub>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Eigenvalues λ_0 … λ_{n_max}.
    Spectrum(Common),
    /// ζ_β(s) at the given points.
    Zeta(Common),
    /// Pole positions and residues of ζ_β.
    Poles(Common),
    /// Heat-trace coefficients and numerical traces.
    Heat(Common),
    /// Run acceptance criteria.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub g: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<f64>,
    /// Finite value or `-inf`.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<Beta>,
    /// Extension angle γ.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Levels summed exactly before the tail model.
    #[arg(long = "M")]
    pub big_m: Option<usize>,
    #[arg(long = "N-max")]
    pub big_n_max: Option<usize>,
    #[arg(long)]
    pub n_pole_max: Option<usize>,
    /// `re` or `re,im`; repeatable.
    #[arg(long = "s", allow_hyphen_values = true)]
    pub s: Vec<String>,
    /// Repeatable.
    #[arg(long = "t")]
    pub t: Vec<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub merge_tol: Option<f64>,
    #[arg(long)]
    pub pole_guard: Option<f64>,
}

impl Common {
    fn into_spec(self, command: Command) -> JobSpec {
        let mut spec = JobSpec::new(command);
        spec.g = self.g;
        spec.kappa = self.kappa;
        spec.beta = self.beta;
        spec.gamma = self.gamma;
        if let Some(v) = self.n_max {
            spec.n_max = v;
        }
        if let Some(v) = self.big_m {
            spec.big_m = v;
        }
        if let Some(v) = self.big_n_max {
            spec.big_n_max = v;
        }
        if let Some(v) = self.n_pole_max {
            spec.n_pole_max = v;
        }
        spec.s_values = self.s;
        spec.t_values = self.t;
        spec.format = self.format;
        if let Some(v) = self.merge_tol {
            spec.merge_tol = v;
        }
        if let Some(v) = self.pole_guard {
            spec.pole_guard = v;
        }
        spec
    }
}

impl Cli {
    pub fn into_spec(self) -> Result<JobSpec, CliError> {
        if let Some(path) = self.job {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
            return JobSpec::from_json(&text);
        }
        Ok(match self.command {
            Some(Sub::Spectrum(c)) => c.into_spec(Command::Spectrum),
            Some(Sub::Zeta(c)) => c.into_spec(Command::Zeta),
            Some(Sub::Poles(c)) => c.into_spec(Command::Poles),
            Some(Sub::Heat(c)) => c.into_spec(Command::Heat),
            Some(Sub::Verify { suite, format }) => {
                let mut spec = JobSpec::new(Command::Verify);
                spec.suite = suite;
                spec.format = format;
                spec
            }
            None => return Err(CliError::Validation("a subcommand or --job is required".into())),
        })
    }
}

/// Runs a job and writes its document; a verify run with failures still
/// writes its report before returning [`CliError::VerifyFailed`].
pub fn execute_spec(spec: &JobSpec, out: &mut impl Write) -> Result<(), CliError> {
    let job = spec.validate()?;
    let doc = run(&job)?;
    doc.write(spec.format, &mut *out)?;
    if spec.command == Command::Verify {
        let failed = doc.json["criteria"]
            .as_array()
            .map_or(0, |a| a.iter().filter(|c| c["passed"] != true).count());
        if failed > 0 {
            return Err(CliError::VerifyFailed(failed));
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the job.
pub fn execute<I, T>(args: I, out: &mut impl Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Validation(first_line(&e.to_string())))?;
    execute_spec(&cli.into_spec()?, out)
}

fn first_line(text: &str) -> String {
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("bad arguments");
    line.trim_start_matches("error: ").to_string()
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    use super::*;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn flags_fill_the_spec() {
        let cli = Cli::try_parse_from([
            "szeta", "zeta", "--kappa", "0.8", "--beta", "-inf", "--M", "50", "--N-max", "3", "--s", "-0.5,1", "--s", "2",
        ])
        .unwrap();
        let spec = cli.into_spec().unwrap();
        assert_eq!(spec.command, Command::Zeta);
        assert_eq!(spec.beta, Some(Beta(szeta_core::ExtensionParam::MinusInfinity)));
        assert_eq!((spec.big_m, spec.big_n_max), (50, 3));
        assert_eq!(spec.s_values, vec!["-0.5,1".to_string(), "2".to_string()]);
        assert!(Cli::try_parse_from(["szeta", "--job", "x.json", "spectrum"]).is_err());
    }
}
