//! JSON and CSV rendering.
//!
//! Every JSON document carries `"schema": "szeta.v1"`; CSV output has a
//! header row, `.` decimals and `\n` line endings. Column orders:
//!
//! | command  | columns |
//! |----------|---------|
//! | spectrum | `n,lambda,provenance` |
//! | zeta     | `s_re,s_im,value_re,value_im,err_estimate,region` |
//! | poles    | `position,residue,vanishing,contributors` |
//! | heat     | `record,power,coefficient,defined,t,trace,err_estimate` |
//! | verify   | `criterion,passed,measured,tolerance,detail` |

use std::io::Write;

use serde_json::{json, Value};
use szeta_core::{ExtensionParam, Regime, SecularContext};

use crate::error::CliError;
use crate::job::Format;

pub const SCHEMA: &str = "szeta.v1";

pub const SPECTRUM_COLUMNS: &[&str] = &["n", "lambda", "provenance"];
pub const ZETA_COLUMNS: &[&str] = &["s_re", "s_im", "value_re", "value_im", "err_estimate", "region"];
pub const POLES_COLUMNS: &[&str] = &["position", "residue", "vanishing", "contributors"];
pub const HEAT_COLUMNS: &[&str] = &["record", "power", "coefficient", "defined", "t", "trace", "err_estimate"];
pub const VERIFY_COLUMNS: &[&str] = &["criterion", "passed", "measured", "tolerance", "detail"];

/// One run's result in both renderings.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub json: Value,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
}

impl Document {
    pub fn write<W: Write>(&self, format: Format, mut out: W) -> Result<(), CliError> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                out.write_all(b"\n")?;
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(out);
                w.write_record(self.columns)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        String::from_utf8(buf).map_err(|e| CliError::Internal(e.to_string()))
    }
}

/// Shortest round-trip text, exponent form for very large or small values.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

/// JSON number, or `null` for non-finite values.
pub fn jnum(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

pub fn beta_value(ext: ExtensionParam) -> Value {
    match ext {
        ExtensionParam::Finite(b) => json!(b),
        ExtensionParam::MinusInfinity => json!("-inf"),
    }
}

pub fn params_block(ctx: &SecularContext, gamma: Option<f64>) -> Value {
    let p = ctx.params;
    let sae = ctx.regime() == Regime::NontrivialSAE;
    json!({
        "g": p.g,
        "alpha": p.alpha,
        "kappa": p.kappa,
        "regime": match ctx.regime() {
            Regime::NontrivialSAE => "nontrivial-sae",
            Regime::EssentiallySelfAdjoint => "essentially-self-adjoint",
        },
        "beta": if sae { beta_value(ctx.ext) } else { Value::Null },
        "gamma": gamma.map_or(Value::Null, |g| json!(g)),
        "negative_state_threshold": if sae { jnum(ctx.threshold()) } else { Value::Null },
    })
}

/// How residues and heat coefficients are defined, and how the sign was
/// settled.
pub fn convention() -> Value {
    json!({
        "residue_formula": "Res_{s=-N(2k-1)-2n} = ((-1)^N/pi) C_{N,n}(k,beta) sin(2 pi N k)",
        "normative": "residue_formula",
        "adjudicated_sign": 1,
        "adjudication": "Richardson residues of the continued zeta function agree in sign with residue_formula; at k = 3/4 the pole at s = -1/2 has residue -beta/pi and the pole at s = -3/2 has residue +4 beta^3/pi",
        "heat_coefficient": "Gamma(position) * residue, coefficient of t^(-position)",
        "excluded_levels": "non-positive eigenvalues are left out of zeta sums and reported separately",
    })
}

/// The envelope shared by all commands.
pub fn envelope(command: &str, params: Value, settings: Value) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("params".into(), params);
    m.insert("settings".into(), settings);
    m.insert("convention".into(), convention());
    m
}
