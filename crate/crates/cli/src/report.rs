use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// How a command turned out; maps one-to-one onto the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Property holds, verdict Yes, or a plain computation succeeded.
    Holds,
    Fails,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Holds => 0,
            Outcome::Fails => 1,
            Outcome::Inconclusive => 2,
        }
    }
}

pub const USAGE_EXIT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl From<Outcome> for Verdict {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Holds => Verdict::Yes,
            Outcome::Fails => Verdict::No,
            Outcome::Inconclusive => Verdict::Inconclusive,
        }
    }
}

/// The JSON body of a command's result. It holds no timing, so identical
/// inputs give byte-identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub inputs: Value,
}

#[derive(Serialize)]
struct Timing {
    wall_ms: u128,
}

#[derive(Serialize)]
struct Envelope<'a> {
    report: &'a Report,
    timing: Timing,
}

/// A finished command: its report, the human-readable text and the outcome.
pub struct Output {
    pub report: Report,
    pub text: String,
    pub outcome: Outcome,
}

impl Output {
    pub fn emit(&self, json: bool, elapsed: Duration, out: &mut impl Write) -> io::Result<()> {
        if json {
            let envelope = Envelope {
                report: &self.report,
                timing: Timing {
                    wall_ms: elapsed.as_millis(),
                },
            };
            serde_json::to_writer(&mut *out, &envelope)?;
            writeln!(out)
        } else {
            write!(out, "{}", self.text)?;
            if !self.text.is_empty() && !self.text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(())
        }
    }
}
