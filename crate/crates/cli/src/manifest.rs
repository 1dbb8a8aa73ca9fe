//! Expected check outcomes for a directory of structure files.
//!
//! ```text
//! # file      check  expected
//! Z2.struct   frob   pass
//! SL2.struct  frob   fail F
//! ```

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub file: String,
    /// The `check` kind, e.g. `frob`.
    pub check: String,
    /// Laws expected to fail; empty means the check passes.
    pub failing: Vec<String>,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} {:<6}", self.file, self.check)?;
        if self.failing.is_empty() {
            write!(f, " pass")
        } else {
            write!(f, " fail {}", self.failing.join(" "))
        }
    }
}

pub fn parse(text: &str) -> Result<Vec<Expectation>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let bad = || {
            format!(
                "manifest line {}: expected 'FILE CHECK pass' or 'FILE CHECK fail LAW…'",
                i + 1
            )
        };
        match words.as_slice() {
            [file, check, "pass"] => out.push(Expectation {
                file: file.to_string(),
                check: check.to_string(),
                failing: Vec::new(),
            }),
            [file, check, "fail", laws @ ..] if !laws.is_empty() => out.push(Expectation {
                file: file.to_string(),
                check: check.to_string(),
                failing: laws.iter().map(|s| s.to_string()).collect(),
            }),
            _ => return Err(bad()),
        }
    }
    Ok(out)
}

pub fn print(entries: &[Expectation]) -> String {
    let mut s = String::from("# file       check  expected\n");
    for e in entries {
        s.push_str(&e.to_string());
        s.push('\n');
    }
    s
}
