//! Job description files.
//!
//! Plain-text `key = value` lines, `#` comments and blank lines allowed.
//! Recognized keys:
//!
//! ```text
//! characteristic      = 0
//! variables           = x, y, z
//! ideal               = x^2 + y^2 + z^2, x^4 + y^4 + z^4, x*y*z
//! forms.z             = z
//! forms.y             = x + 2y
//! sampling.seed       = 42
//! sampling.lambda     = 1, 2, 3, 4, 5
//! sampling.coeff_bound = 2
//! sampling.samples    = 25
//! analyses            = all
//! ```
//!
//! `ideal` may be repeated to append generators. `analyses` is a comma list
//! of `jordan`, `commutator`, `csm`, `gr`, `wlp`, `slp`, or `all`.

use std::collections::BTreeSet;
use std::fmt;

use commutant::lefschetz::SamplingPolicy;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for JobError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Analysis {
    Jordan,
    Commutator,
    Csm,
    Gr,
    Wlp,
    Slp,
}

impl Analysis {
    pub const ALL: [Analysis; 6] = [
        Analysis::Jordan,
        Analysis::Commutator,
        Analysis::Csm,
        Analysis::Gr,
        Analysis::Wlp,
        Analysis::Slp,
    ];
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub characteristic: u64,
    pub variables: Vec<String>,
    /// Generator expressions with the (line, column) where each starts.
    pub ideal: Vec<(String, usize, usize)>,
    /// Named linear forms, e.g. `z` and `y`, with source locations.
    pub forms: Vec<(String, String, usize, usize)>,
    pub sampling: SamplingPolicy,
    pub analyses: BTreeSet<Analysis>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> JobError {
    JobError { line, column, message: message.into() }
}

fn parse_usize(v: &str, line: usize, col: usize, what: &str) -> Result<usize, JobError> {
    v.trim().parse().map_err(|_| err(line, col, format!("invalid {what}: `{}`", v.trim())))
}

pub fn parse_job(text: &str) -> Result<JobSpec, JobError> {
    let mut characteristic: Option<u64> = None;
    let mut variables: Vec<String> = Vec::new();
    let mut ideal: Vec<(String, usize, usize)> = Vec::new();
    let mut forms: Vec<(String, String, usize, usize)> = Vec::new();
    let mut sampling = SamplingPolicy::default();
    let mut analyses: BTreeSet<Analysis> = BTreeSet::new();
    let mut saw_analyses = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let Some(eq) = line.find('=') else {
            return Err(err(line_no, 1, "expected `key = value`"));
        };
        let key = line[..eq].trim();
        let value = line[eq + 1..].trim();
        let value_col = eq + 2 + line[eq + 1..].len() - line[eq + 1..].trim_start().len();
        if value.is_empty() {
            return Err(err(line_no, value_col, format!("empty value for `{key}`")));
        }
        match key {
            "characteristic" => {
                let c: u64 = value
                    .parse()
                    .map_err(|_| err(line_no, value_col, format!("invalid characteristic `{value}`")))?;
                characteristic = Some(c);
            }
            "variables" => {
                for name in value.split(',') {
                    let name = name.trim();
                    if name.is_empty()
                        || !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(err(line_no, value_col, format!("invalid variable name `{name}`")));
                    }
                    if variables.iter().any(|v| v == name) {
                        return Err(err(line_no, value_col, format!("duplicate variable `{name}`")));
                    }
                    variables.push(name.to_string());
                }
            }
            "ideal" => {
                let mut col = value_col;
                for gen in value.split(',') {
                    let lead = gen.len() - gen.trim_start().len();
                    ideal.push((gen.trim().to_string(), line_no, col + lead));
                    col += gen.len() + 1;
                }
            }
            k if k.starts_with("forms.") => {
                let name = k["forms.".len()..].trim();
                if name.is_empty() {
                    return Err(err(line_no, 1, "form key must be `forms.<name>`"));
                }
                if forms.iter().any(|(n, _, _, _)| n == name) {
                    return Err(err(line_no, 1, format!("duplicate form `{name}`")));
                }
                forms.push((name.to_string(), value.to_string(), line_no, value_col));
            }
            "sampling.seed" => {
                sampling.seed = value
                    .parse()
                    .map_err(|_| err(line_no, value_col, format!("invalid seed `{value}`")))?;
            }
            "sampling.lambda" => {
                let mut lambdas = Vec::new();
                for v in value.split(',') {
                    let l: i64 = v.trim().parse().map_err(|_| {
                        err(line_no, value_col, format!("invalid lambda `{}`", v.trim()))
                    })?;
                    lambdas.push(l);
                }
                sampling.lambdas = lambdas;
            }
            "sampling.coeff_bound" => {
                let b = parse_usize(value, line_no, value_col, "coefficient bound")?;
                if b == 0 {
                    return Err(err(line_no, value_col, "coefficient bound must be positive"));
                }
                sampling.coeff_bound = b as i64;
            }
            "sampling.samples" => {
                let s = parse_usize(value, line_no, value_col, "sample count")?;
                if s == 0 {
                    return Err(err(line_no, value_col, "sample count must be positive"));
                }
                sampling.samples = s;
            }
            "analyses" => {
                saw_analyses = true;
                for a in value.split(',') {
                    match a.trim() {
                        "jordan" => {
                            analyses.insert(Analysis::Jordan);
                        }
                        "commutator" => {
                            analyses.insert(Analysis::Commutator);
                        }
                        "csm" => {
                            analyses.insert(Analysis::Csm);
                        }
                        "gr" => {
                            analyses.insert(Analysis::Gr);
                        }
                        "wlp" => {
                            analyses.insert(Analysis::Wlp);
                        }
                        "slp" => {
                            analyses.insert(Analysis::Slp);
                        }
                        "all" => {
                            analyses.extend(Analysis::ALL);
                        }
                        other => {
                            return Err(err(
                                line_no,
                                value_col,
                                format!("unknown analysis `{other}`"),
                            ));
                        }
                    }
                }
            }
            other => {
                return Err(err(line_no, 1, format!("unknown key `{other}`")));
            }
        }
    }

    if variables.is_empty() {
        return Err(err(1, 1, "missing `variables`"));
    }
    if !saw_analyses {
        analyses.extend(Analysis::ALL);
    }
    Ok(JobSpec {
        characteristic: characteristic.unwrap_or(0),
        variables,
        ideal,
        forms,
        sampling,
        analyses,
    })
}
