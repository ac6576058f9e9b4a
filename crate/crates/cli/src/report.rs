use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use qsphere::numcheck::ConvergenceRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub exact_value: Option<String>,
    pub float_value: Option<f64>,
    pub runtime_ms: u128,
}

/// What a single check produces before timing is attached.
#[derive(Default)]
pub struct Outcome {
    pub pass: bool,
    pub exact: Option<String>,
    pub float: Option<f64>,
}

impl Outcome {
    pub fn flag(pass: bool) -> Self {
        Outcome { pass, ..Default::default() }
    }

    pub fn exact(pass: bool, value: impl ToString) -> Self {
        Outcome { pass, exact: Some(value.to_string()), float: None }
    }

    pub fn float(pass: bool, value: f64) -> Self {
        Outcome { pass, exact: None, float: Some(value) }
    }
}

pub fn run_check<F>(id: &str, anchor: &str, f: F) -> Check
where
    F: FnOnce() -> Result<Outcome, String>,
{
    let start = Instant::now();
    let result = f();
    let runtime_ms = start.elapsed().as_millis();
    let (status, exact_value, float_value) = match result {
        Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.exact, o.float),
        Err(e) => (Status::Error, Some(e), None),
    };
    Check { id: id.into(), paper_anchor: anchor.into(), status, exact_value, float_value, runtime_ms }
}

#[derive(Debug, Serialize)]
pub struct Report<C: Serialize> {
    pub version: String,
    pub config: C,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub convergence: Vec<ConvergenceRow>,
}

impl<C: Serialize> Report<C> {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn write_json<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut out = out;
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)
    }

    /// Check rows, or the convergence table when the run produced one and nothing else.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        if !self.convergence.is_empty() && self.checks.iter().all(|c| c.id.starts_with("numcheck.")) {
            for row in &self.convergence {
                w.serialize(row)?;
            }
        } else {
            w.write_record(["id", "paper_anchor", "status", "exact_value", "float_value", "runtime_ms"])?;
            for c in &self.checks {
                let status = serde_json::to_value(c.status).map(|v| v.as_str().unwrap_or_default().to_string());
                w.write_record([
                    c.id.clone(),
                    c.paper_anchor.clone(),
                    status.unwrap_or_default(),
                    c.exact_value.clone().unwrap_or_default(),
                    c.float_value.map(|v| format!("{v:e}")).unwrap_or_default(),
                    c.runtime_ms.to_string(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            let mut value = c.exact_value.clone().unwrap_or_default();
            if let Some(f) = c.float_value {
                if !value.is_empty() {
                    value.push_str("  ");
                }
                value.push_str(&format!("{f:.3e}"));
            }
            writeln!(out, "{tag} {:width$}  {value}  [{} ms]", c.id, c.runtime_ms)?;
        }
        if !self.convergence.is_empty() {
            writeln!(out, "\n{:<6} {:>4} {:>6} {:>22} {:>12}", "check", "K", "q0", "value", "abs_error")?;
            for r in &self.convergence {
                writeln!(out, "{:<6} {:>4} {:>6} {:>22.15} {:>12.3e}", r.check, r.k, r.q0, r.value, r.abs_error)?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        writeln!(out, "{passed}/{} checks passed", self.checks.len())
    }
}
