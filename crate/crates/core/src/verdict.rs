//! Structured outcomes of identity checks.

use std::fmt;

use serde_json::{json, Value};

use crate::kernel::Vector;
use crate::poly::{find_nonzero_point, MultiPoly};

const DIGEST_TERMS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Failure),
}

/// Details of a failed check. `witness` holds one point per variable block
/// (e.g. `a, b, c`) at which the residual is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Failure {
    pub coordinate: Option<usize>,
    pub witness: Option<Vec<Vector>>,
    pub residual: Option<String>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            outcome: Outcome::Pass,
        }
    }

    pub fn fail(check: impl Into<String>, failure: Failure) -> Self {
        Verdict {
            check: check.into(),
            outcome: Outcome::Fail(failure),
        }
    }

    /// A failure that is described in words rather than by a residual.
    pub fn fail_note(check: impl Into<String>, note: impl Into<String>) -> Self {
        Self::fail(
            check,
            Failure {
                note: Some(note.into()),
                ..Failure::default()
            },
        )
    }

    /// Verdict for the identity `residual = 0`, where `residual` lists the
    /// output coordinates as polynomials in `blocks` blocks of `dim`
    /// variables each. The check passes iff every coordinate is the zero
    /// polynomial; otherwise a witness is searched coordinate by coordinate.
    pub fn from_residual(check: impl Into<String>, residual: &[MultiPoly], dim: usize) -> Self {
        let Some(first) = residual.iter().position(|p| !p.is_zero()) else {
            return Self::pass(check);
        };
        let mut failure = Failure {
            coordinate: Some(first),
            residual: Some(digest(&residual[first])),
            ..Failure::default()
        };
        for (k, p) in residual.iter().enumerate().skip(first) {
            if p.is_zero() {
                continue;
            }
            if let Some(point) = find_nonzero_point(p) {
                failure.coordinate = Some(k);
                failure.residual = Some(digest(p));
                failure.witness = Some(split_blocks(&point, dim));
                break;
            }
        }
        if failure.witness.is_none() {
            failure.note = Some("symbolically nonzero, no pointwise witness guaranteed".into());
        }
        Self::fail(check, failure)
    }

    /// Pass under `check` if every part passes; otherwise the first failing
    /// part, renamed, with its own name kept in the note.
    pub fn all(check: impl Into<String>, parts: impl IntoIterator<Item = Verdict>) -> Self {
        let check = check.into();
        for part in parts {
            if let Outcome::Fail(mut f) = part.outcome {
                let note = match f.note.take() {
                    Some(n) => format!("{}: {n}", part.check),
                    None => part.check,
                };
                f.note = Some(note);
                return Self::fail(check, f);
            }
        }
        Self::pass(check)
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn failure(&self) -> Option<&Failure> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail(f) => Some(f),
        }
    }

    pub fn witness(&self) -> Option<&[Vector]> {
        self.failure().and_then(|f| f.witness.as_deref())
    }

    pub fn renamed(mut self, check: impl Into<String>) -> Self {
        self.check = check.into();
        self
    }

    /// Report object `{check, pass, witness?, residual?, note?}`.
    pub fn to_json(&self) -> Value {
        let mut obj = json!({ "check": self.check, "pass": self.passed() });
        if let Some(f) = self.failure() {
            let map = obj.as_object_mut().expect("object literal");
            if let Some(w) = &f.witness {
                let pts: Vec<Value> = w
                    .iter()
                    .map(|v| Value::Array(v.iter().map(|s| json!(s.to_string())).collect()))
                    .collect();
                map.insert("witness".into(), Value::Array(pts));
            }
            if let Some(k) = f.coordinate {
                map.insert("coordinate".into(), json!(k));
            }
            if let Some(r) = &f.residual {
                map.insert("residual".into(), json!(r));
            }
            if let Some(n) = &f.note {
                map.insert("note".into(), json!(n));
            }
        }
        obj
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "{}: PASS", self.check),
            Outcome::Fail(fail) => {
                write!(f, "{}: FAIL", self.check)?;
                if let Some(w) = &fail.witness {
                    let pts: Vec<String> = w.iter().map(Vector::to_string).collect();
                    write!(f, " witness={}", pts.join(";"))?;
                }
                if let Some(n) = &fail.note {
                    write!(f, " ({n})")?;
                }
                Ok(())
            }
        }
    }
}

fn split_blocks(point: &Vector, dim: usize) -> Vec<Vector> {
    if dim == 0 {
        return Vec::new();
    }
    point
        .entries()
        .chunks(dim)
        .map(|c| Vector::new(point.field(), c.to_vec()).expect("same field"))
        .collect()
}

/// Leading terms of a residual, grlex order, for failure reports.
pub fn digest(p: &MultiPoly) -> String {
    let n = p.len();
    if n <= DIGEST_TERMS {
        return p.to_term_string();
    }
    let head = MultiPoly::from_terms(
        p.ctx(),
        p.terms().rev().take(DIGEST_TERMS).map(|(m, c)| (m.clone(), c.clone())),
    );
    format!("{} + ... ({} more terms)", head.to_term_string(), n - DIGEST_TERMS)
}
