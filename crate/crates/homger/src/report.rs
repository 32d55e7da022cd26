//! Verification reports shared by every checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// 1-based basis indices of the failing tuple.
    pub basis: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub label: String,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub dims: Vec<Dims>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: Vec::new(), dims: Vec::new(), elapsed_ms: None }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// `Some(true)` if the check exists and passed.
    pub fn status(&self, id: &str) -> Option<bool> {
        self.get(id).map(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
    }

    /// Appends the checks of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
        self.dims.extend(other.dims);
    }

    pub fn push_check(&mut self, id: impl Into<String>, ok: bool) {
        self.checks.push(Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
        });
    }

    pub fn push_dims(&mut self, label: impl Into<String>, values: Vec<usize>) {
        self.dims.push(Dims { label: label.into(), values });
    }

    pub fn render_text(&self, color: bool) -> String {
        let (g, r, z) = if color { ("\x1b[32m", "\x1b[31m", "\x1b[0m") } else { ("", "", "") };
        let mut out = format!("{}\n", self.name);
        for c in &self.checks {
            match c.status {
                Status::Pass => out += &format!("  {g}PASS{z} {}\n", c.id),
                Status::Fail => {
                    out += &format!("  {r}FAIL{z} {}", c.id);
                    if let Some(w) = &c.witness {
                        out += &format!(
                            " at {:?}: lhs=[{}] rhs=[{}]",
                            w.basis,
                            w.lhs.join(", "),
                            w.rhs.join(", ")
                        );
                    }
                    out.push('\n');
                }
            }
        }
        for d in &self.dims {
            let v: Vec<String> = d.values.iter().map(|x| x.to_string()).collect();
            out += &format!("  {}: ({})\n", d.label, v.join(", "));
        }
        if let Some(ms) = self.elapsed_ms {
            out += &format!("  elapsed: {ms} ms\n");
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text(false))
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Accumulates named checks, keeping the first failing witness per id.
#[derive(Default)]
pub struct Checker {
    checks: Vec<Check>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    fn slot(&mut self, id: &str) -> &mut Check {
        let pos = match self.checks.iter().position(|c| c.id == id) {
            Some(p) => p,
            None => {
                self.checks.push(Check { id: id.to_string(), status: Status::Pass, witness: None });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    /// Registers `id` so it is reported even when no tuple exercised it.
    pub fn declare(&mut self, id: &str) {
        self.slot(id);
    }

    pub fn compare(&mut self, id: &str, tuple: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> bool {
        let ok = lhs == rhs;
        self.record(id, ok, tuple, || (strings(lhs), strings(rhs)));
        ok
    }

    pub fn assert(&mut self, id: &str, ok: bool, tuple: &[usize]) -> bool {
        self.record(id, ok, tuple, || (Vec::new(), Vec::new()));
        ok
    }

    fn record(&mut self, id: &str, ok: bool, tuple: &[usize], sides: impl FnOnce() -> (Vec<String>, Vec<String>)) {
        let c = self.slot(id);
        if !ok && c.status == Status::Pass {
            let (lhs, rhs) = sides();
            c.status = Status::Fail;
            c.witness = Some(Witness { basis: tuple.iter().map(|i| i + 1).collect(), lhs, rhs });
        }
    }

    pub fn failed(&self, id: &str) -> bool {
        self.checks.iter().any(|c| c.id == id && c.status == Status::Fail)
    }

    pub fn finish(self, name: impl Into<String>) -> Report {
        Report { name: name.into(), checks: self.checks, dims: Vec::new(), elapsed_ms: None }
    }
}
