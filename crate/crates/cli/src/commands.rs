use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use apw_core::antipower::{
    check_k_anti_power, check_k_anti_power_naive, count_anti_power_sequences,
    enumerate_k_anti_power, AntiPowerViolation,
};
use apw_core::decide::{decide_k_anti_power, Check, Decision, Witness};
use apw_core::morphism::{parse_morphism, profile, Morphism};
use apw_core::word::{find_power_geq, max_exponent, Alphabet, FractionalPowerOccurrence, Word};
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::{Outcome, Output, Report, Verdict};
use crate::{CheckWord, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] apw_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Morphism {
        path: PathBuf,
        source: apw_core::Error,
    },
    #[error("reading standard input: {0}")]
    Stdin(std::io::Error),
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<Output> {
    match command {
        Command::CheckWord(args) => check_word(args),
        Command::CheckMorphism { k, evidence, file } => check_morphism(k, evidence, &file),
        Command::Profile { file } => profile_cmd(&file),
        Command::Generate {
            file,
            start,
            length,
        } => generate(&file, start, length),
        Command::VerifyPrefix {
            file,
            start,
            length,
            k,
            naive,
        } => verify_prefix(&file, start, length, k, naive),
        Command::Enumerate {
            alphabet,
            k,
            max_len,
        } => enumerate(&alphabet, k, max_len),
        Command::Count { alpha, k, n } => count(alpha, k, n),
        Command::Exponent { word } => exponent(&word),
        Command::FindPower { threshold, word } => find_power(threshold, &word),
    }
}

fn load_morphism(path: &Path) -> Result<Morphism> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_morphism(&text).map_err(|source| CliError::Morphism {
        path: path.to_owned(),
        source,
    })
}

fn render(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn report(command: &'static str, inputs: Value) -> Report {
    Report {
        command,
        verdict: None,
        witness: None,
        certificate: None,
        reason: None,
        evidence: None,
        result: None,
        inputs,
    }
}

fn describe_violation(w: &Word, v: &AntiPowerViolation) -> String {
    let window = v.window(w).map(|x| x.to_string()).unwrap_or_default();
    format!(
        "level {}, block length {}, window at {} ({}), blocks {} and {} equal",
        v.level, v.block_len, v.window_start, window, v.first_block, v.second_block
    )
}

fn violation_json(w: &Word, v: &AntiPowerViolation) -> Value {
    json!({
        "window_start": v.window_start,
        "block_len": v.block_len,
        "first_block": v.first_block,
        "second_block": v.second_block,
        "level": v.level,
        "window": v.window(w).map(|x| x.to_string()).unwrap_or_default(),
    })
}

fn occurrence_json(w: &Word, o: &FractionalPowerOccurrence) -> Value {
    json!({
        "start": o.start,
        "period": o.period,
        "span": o.span,
        "exponent": o.exponent,
        "factor": o.factor(w).map(|x| x.to_string()).unwrap_or_default(),
    })
}

/// Shared by `check-word` and `verify-prefix`.
fn anti_power_verdict(
    command: &'static str,
    w: &Word,
    k: usize,
    naive: bool,
    inputs: Value,
) -> Result<Output> {
    let violation = if naive {
        check_k_anti_power_naive(w, k)?
    } else {
        check_k_anti_power(w, k)?
    };
    let mut r = report(command, inputs);
    let (outcome, text) = match violation {
        None => (
            Outcome::Holds,
            format!("yes: {}-anti-power (length {})", k, w.len()),
        ),
        Some(v) => {
            r.witness = Some(violation_json(w, &v));
            (
                Outcome::Fails,
                format!("no: not {}-anti-power: {}", k, describe_violation(w, &v)),
            )
        }
    };
    r.verdict = Some(outcome.into());
    Ok(Output {
        report: r,
        text,
        outcome,
    })
}

fn read_stdin_word() -> Result<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(CliError::Stdin)?;
    if buf.ends_with('\n') {
        buf.pop();
        if buf.ends_with('\r') {
            buf.pop();
        }
    }
    Ok(buf)
}

fn check_word(args: CheckWord) -> Result<Output> {
    let raw = match args.word {
        Some(word) if !args.stdin => word,
        _ => read_stdin_word()?,
    };
    let w: Word = raw.parse()?;
    let inputs = json!({ "k": args.k, "naive": args.naive, "word": w });
    anti_power_verdict("check-word", &w, args.k, args.naive, inputs)
}

fn describe_check(c: &Check) -> String {
    match c {
        Check::UniformLength { length } => format!("uniform, L = {length}"),
        Check::OddLength { length } => format!("L = {length} is odd"),
        Check::SquareFreeCriterion { max_len, bound, words_checked } => format!(
            "square-free ({words_checked} square-free words of length <= {max_len} checked, bound {bound})"
        ),
        Check::AntiPowerUpTo { k, max_len, words_checked } => {
            format!("{k}-anti-power up to {max_len} ({words_checked} words checked)")
        }
        Check::FiniteDomain { domain_size, words_checked } => {
            format!("all {words_checked} 3-anti-power words over the {domain_size}-letter domain checked")
        }
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::AntiPower {
            word,
            k,
            image,
            violation,
        } => json!({
            "kind": "anti_power",
            "word": word,
            "k": k,
            "image": image,
            "violation": violation_json(image, violation),
        }),
        Witness::Square {
            word,
            image,
            occurrence,
        } => json!({
            "kind": "square",
            "word": word,
            "image": image,
            "occurrence": occurrence_json(image, occurrence),
        }),
    }
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::AntiPower {
            word,
            k,
            image,
            violation,
        } => format!(
            "{} is {}-anti-power but f({}) = {} is not: {}",
            render(word),
            k,
            render(word),
            image,
            describe_violation(image, violation)
        ),
        Witness::Square {
            word,
            image,
            occurrence,
        } => format!(
            "{} is square-free but f({}) = {} contains the square {} at {}",
            render(word),
            render(word),
            image,
            occurrence
                .factor(image)
                .map(|x| x.to_string())
                .unwrap_or_default(),
            occurrence.start
        ),
    }
}

fn check_morphism(k: usize, evidence: usize, file: &Path) -> Result<Output> {
    let f = load_morphism(file)?;
    let decision = decide_k_anti_power(&f, k, evidence)?;
    let inputs = json!({ "k": k, "evidence": evidence, "file": file.display().to_string() });
    let mut r = report("check-morphism", inputs);
    let (outcome, text) = match &decision {
        Decision::Yes { certificate } => {
            r.certificate =
                Some(serde_json::to_value(certificate).expect("certificate serializes"));
            let checks: Vec<String> = certificate.checks.iter().map(describe_check).collect();
            (
                Outcome::Holds,
                format!("yes: {k}-anti-power morphism ({})", checks.join("; ")),
            )
        }
        Decision::No { witness } => {
            r.witness = Some(witness_json(witness));
            (Outcome::Fails, format!("no: {}", describe_witness(witness)))
        }
        Decision::Inconclusive { reason, evidence } => {
            r.reason = Some(serde_json::to_value(reason).expect("reason serializes"));
            r.evidence = Some(serde_json::to_value(evidence).expect("evidence serializes"));
            let reason = serde_json::to_value(reason)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default();
            (
                Outcome::Inconclusive,
                format!(
                    "inconclusive ({reason}): no counterexample among {} {}-anti-power words of length <= {}",
                    evidence.words_checked, evidence.k, evidence.checked_up_to
                ),
            )
        }
    };
    r.verdict = Some(outcome.into());
    Ok(Output {
        report: r,
        text,
        outcome,
    })
}

fn profile_cmd(file: &Path) -> Result<Output> {
    let f = load_morphism(file)?;
    let p = profile(&f);
    let mut r = report("profile", json!({ "file": file.display().to_string() }));
    r.result = Some(serde_json::to_value(p).expect("profile serializes"));
    let mut text = String::new();
    let uniform = p.uniform_length.map_or("no".to_string(), |l| l.to_string());
    let _ = writeln!(text, "domain: {}", f.domain());
    let _ = writeln!(text, "codomain: {}", f.codomain());
    let _ = writeln!(text, "uniform_length: {uniform}");
    for (name, flag) in [
        ("non_erasing", p.non_erasing),
        ("prefix", p.prefix),
        ("suffix", p.suffix),
        ("bifix", p.bifix),
        ("ps", p.ps),
    ] {
        let _ = writeln!(text, "{name}: {flag}");
    }
    Ok(Output {
        report: r,
        text,
        outcome: Outcome::Holds,
    })
}

fn generate(file: &Path, start: char, length: usize) -> Result<Output> {
    let f = load_morphism(file)?;
    let w = f.fixed_point_prefix(start, length)?;
    let mut r = report(
        "generate",
        json!({ "file": file.display().to_string(), "start": start, "length": length }),
    );
    r.result = Some(json!(w));
    let mut text = w.to_string();
    text.push('\n');
    Ok(Output {
        report: r,
        text,
        outcome: Outcome::Holds,
    })
}

fn verify_prefix(file: &Path, start: char, length: usize, k: usize, naive: bool) -> Result<Output> {
    let f = load_morphism(file)?;
    let w = f.fixed_point_prefix(start, length)?;
    let inputs = json!({
        "file": file.display().to_string(),
        "start": start,
        "length": length,
        "k": k,
        "naive": naive,
    });
    anti_power_verdict("verify-prefix", &w, k, naive, inputs)
}

fn enumerate(alphabet: &str, k: usize, max_len: usize) -> Result<Output> {
    let alphabet: Alphabet = alphabet.parse()?;
    let words: Vec<Word> = enumerate_k_anti_power(&alphabet, k, max_len)?.collect();
    let mut r = report(
        "enumerate",
        json!({ "alphabet": alphabet.to_string(), "k": k, "max_len": max_len }),
    );
    r.result = Some(json!(words));
    let text: String = words.iter().map(|w| render(w) + "\n").collect();
    Ok(Output {
        report: r,
        text,
        outcome: Outcome::Holds,
    })
}

fn count(alpha: usize, k: usize, n: usize) -> Result<Output> {
    let c = count_anti_power_sequences(alpha, k, n)?;
    let mut r = report("count", json!({ "alpha": alpha, "k": k, "n": n }));
    // decimal string: the count is unbounded
    r.result = Some(json!(c.to_string()));
    Ok(Output {
        report: r,
        text: format!("{c}\n"),
        outcome: Outcome::Holds,
    })
}

fn exponent(word: &str) -> Result<Output> {
    let w: Word = word.parse()?;
    let e = max_exponent(&w)?;
    let mut r = report("exponent", json!({ "word": w }));
    r.result = Some(json!(e));
    Ok(Output {
        report: r,
        text: format!("{e}\n"),
        outcome: Outcome::Holds,
    })
}

fn find_power(threshold: apw_core::word::Rational, word: &str) -> Result<Output> {
    let w: Word = word.parse()?;
    let found = find_power_geq(&w, threshold)?;
    let mut r = report("find-power", json!({ "threshold": threshold, "word": w }));
    let (outcome, text) = match found {
        None => (
            Outcome::Holds,
            format!("yes: {} is {threshold}-power-free", render(&w)),
        ),
        Some(o) => {
            r.witness = Some(occurrence_json(&w, &o));
            let factor = o.factor(&w).map(|x| x.to_string()).unwrap_or_default();
            (
                Outcome::Fails,
                format!(
                    "no: {factor} at {} is a {}-power (period {}, length {})",
                    o.start, o.exponent, o.period, o.span
                ),
            )
        }
    };
    r.verdict = Some(Verdict::from(outcome));
    Ok(Output {
        report: r,
        text,
        outcome,
    })
}
