//! Command-line front end. `run` parses arguments, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code:
//! 0 on success or a true predicate, 1 on a false predicate or failed
//! verification, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::braid::{BraidWord, GeneratorWord};
use crate::error::BraidError;
use crate::garside::{equal, normal_form};
use crate::genset::{decompose, GensetTarget, Variant};
use crate::presentations::{h1, presentation, verify, Group, QbClassifier};
use crate::purebraid::comb;
use crate::quasitoric::{factor, is_quasitoric, QuasitoricForm};

#[derive(Debug, Parser)]
#[command(
    name = "qtbraid",
    version,
    about = "Braid group and quasitoric braid group computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct WordInput {
    /// Number of strands.
    #[arg(short = 'n')]
    strands: usize,
    /// σ-word such as "1 2 -3", or @path to read it from a file.
    #[arg(allow_hyphen_values = true)]
    word: Option<String>,
    /// Read a quasitoric sign-matrix file instead of a word.
    #[arg(long, conflicts_with = "word")]
    form: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GroupInput {
    #[arg(long, value_enum, default_value = "qb")]
    group: GroupArg,
    /// Number of strands (at least 3).
    #[arg(short = 'n')]
    strands: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupArg {
    Qb,
    Pb,
    Pmod,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Qb => Group::Qb,
            GroupArg::Pb => Group::Pb,
            GroupArg::Pmod => Group::Pmod,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Thm41,
    Thm42,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Garside normal form.
    Nf(WordInput),
    /// Test two σ-words for equality in B_n.
    Eq {
        #[arg(short = 'n')]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Permutation of a braid, in one-line notation.
    Perm(WordInput),
    /// Expand a generator word into a σ-word.
    Expand {
        #[arg(short = 'n')]
        strands: usize,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Least k with perm(w) = ρ^k, or "none".
    IsQt {
        #[command(flatten)]
        input: WordInput,
        /// Also print the sign matrix when the word is literally a quasitoric form.
        #[arg(long)]
        emit_form: bool,
    },
    /// Split a quasitoric braid as δ_0^k · p with p pure.
    Factor(WordInput),
    /// Comb a pure braid into Artin generators.
    Comb(WordInput),
    /// Write a quasitoric braid over a minimal generating set.
    Decompose {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_enum, default_value = "thm41")]
        target: TargetArg,
    },
    /// Homology class of a quasitoric braid in H_1(QB_n).
    Abelianize(WordInput),
    /// First homology of a presented group.
    H1(GroupInput),
    /// Check every relator against the normal form.
    Verify(GroupInput),
    /// List relators, one per line.
    Relators(GroupInput),
    /// Number of components of the closure.
    Components(WordInput),
}

#[derive(Debug)]
enum Failure {
    Input(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn read_source(text: &str) -> Result<String, Failure> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn check_strands(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(BraidError::TooFewStrands(n).into());
    }
    Ok(())
}

fn parse_word(n: usize, text: &str) -> Result<BraidWord, Failure> {
    check_strands(n)?;
    Ok(BraidWord::parse(n, &read_source(text)?)?)
}

impl WordInput {
    fn braid(&self) -> Result<BraidWord, Failure> {
        check_strands(self.strands)?;
        match (&self.word, &self.form) {
            (_, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
                Ok(QuasitoricForm::parse_text(self.strands, &text)?.to_word())
            }
            (Some(w), None) => parse_word(self.strands, w),
            (None, None) => Err(Failure::Input("expected a word or --form <path>".into())),
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Input(e.to_string()))?;
    line(out, &text)
}

fn line(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::Input(e.to_string()))
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Nf(input) => {
            let nf = normal_form(&input.braid()?);
            if input.json {
                let factors: Vec<Vec<usize>> = nf.factors.iter().map(|p| p.one_line()).collect();
                emit(
                    out,
                    &json!({"strands": nf.strands, "inf": nf.inf, "factors": factors}),
                )?;
            } else {
                line(out, &nf.to_string())?;
            }
            Ok(0)
        }
        Command::Eq {
            strands,
            left,
            right,
            json,
        } => {
            let same = equal(&parse_word(strands, &left)?, &parse_word(strands, &right)?)?;
            if json {
                emit(out, &json!({ "equal": same }))?;
            } else {
                line(out, if same { "true" } else { "false" })?;
            }
            Ok(if same { 0 } else { 1 })
        }
        Command::Perm(input) => {
            let p = input.braid()?.perm();
            if input.json {
                emit(out, &json!({ "perm": p.one_line() }))?;
            } else {
                line(out, &p.to_string())?;
            }
            Ok(0)
        }
        Command::Expand {
            strands,
            word,
            json,
        } => {
            check_strands(strands)?;
            let w = GeneratorWord::parse(&read_source(&word)?)?.expand(strands)?;
            if json {
                emit(out, &json!({ "word": w.signed() }))?;
            } else {
                line(out, &w.to_string())?;
            }
            Ok(0)
        }
        Command::IsQt { input, emit_form } => {
            let w = input.braid()?;
            let k = is_quasitoric(&w);
            let form = if emit_form {
                QuasitoricForm::parse_word(&w)
            } else {
                None
            };
            if input.json {
                let mut v = json!({ "k": k });
                if emit_form {
                    v["form"] = json!(form.as_ref().map(|f| f.to_string()));
                }
                emit(out, &v)?;
            } else {
                match k {
                    Some(k) => line(out, &k.to_string())?,
                    None => line(out, "none")?,
                }
                if let Some(f) = &form {
                    write!(out, "{f}").map_err(|e| Failure::Input(e.to_string()))?;
                }
            }
            Ok(if k.is_some() { 0 } else { 1 })
        }
        Command::Factor(input) => {
            let (k, p) = factor(&input.braid()?)?;
            if input.json {
                emit(out, &json!({ "k": k, "pure": p.signed() }))?;
            } else {
                line(out, &format!("k={k}"))?;
                line(out, &format!("p={p}"))?;
            }
            Ok(0)
        }
        Command::Comb(input) => {
            let gw = comb(&input.braid()?)?;
            if input.json {
                emit(out, &json!({ "word": gw.to_string() }))?;
            } else {
                line(out, &gw.to_string())?;
            }
            Ok(0)
        }
        Command::Decompose { input, target } => {
            let variant = match target {
                TargetArg::Thm41 => Variant::Thm41,
                TargetArg::Thm42 => Variant::Thm42,
            };
            let w = input.braid()?;
            let target = GensetTarget::new(variant, input.strands)?;
            let gw = decompose(&w, &target)?;
            if input.json {
                emit(out, &json!({ "target": variant, "word": gw.to_string() }))?;
            } else {
                line(out, &gw.to_string())?;
            }
            Ok(0)
        }
        Command::Abelianize(input) => {
            let w = input.braid()?;
            let classifier = QbClassifier::new(input.strands)?;
            let class = classifier.class(&w)?;
            if input.json {
                emit(out, &class)?;
            } else {
                line(out, &class.to_string())?;
            }
            Ok(0)
        }
        Command::H1(g) => {
            let a = h1(&presentation(g.group.into(), g.strands)?)?;
            if g.json {
                emit(out, &a)?;
            } else {
                line(out, &a.describe())?;
            }
            Ok(0)
        }
        Command::Verify(g) => {
            let report = verify(&presentation(g.group.into(), g.strands)?)?;
            if g.json {
                emit(out, &report)?;
            } else {
                line(
                    out,
                    &format!(
                        "checked={} failures={}",
                        report.checked,
                        report.failures.len()
                    ),
                )?;
                for f in &report.failures {
                    line(out, &format!("failed {} {}", f.index, f.relator))?;
                }
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Relators(g) => {
            let p = presentation(g.group.into(), g.strands)?;
            if g.json {
                let rows: Vec<_> = p
                    .relators
                    .iter()
                    .map(|r| json!({ "family": r.family, "word": r.word.to_string() }))
                    .collect();
                emit(out, &rows)?;
            } else {
                for r in &p.relators {
                    line(out, &r.word.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Components(input) => {
            let c = input.braid()?.closure_components();
            if input.json {
                emit(out, &json!({ "components": c }))?;
            } else {
                line(out, &c.to_string())?;
            }
            Ok(0)
        }
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let first = text.lines().next().unwrap_or("usage error");
                let _ = writeln!(err, "{first}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qtbraid").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eq_braid_relation() {
        assert_eq!(call(&["eq", "-n", "3", "1 2 1", "2 1 2"]).0, 0);
        assert_eq!(call(&["eq", "-n", "3", "1 2", "2 1"]).0, 1);
    }

    #[test]
    fn words_may_start_with_a_minus() {
        assert_eq!(call(&["eq", "-n", "3", "-1 1", ""]).0, 0);
        assert_eq!(call(&["perm", "-n", "3", "-1 -2"]).1, "2 3 1\n");
    }

    #[test]
    fn is_qt_codes() {
        let (code, out, _) = call(&["is-qt", "-n", "3", "1"]);
        assert_eq!((code, out.as_str()), (1, "none\n"));
        let (code, out, _) = call(&["is-qt", "-n", "4", "--emit-form", "1 2 3 -1 -2 3"]);
        assert_eq!((code, out.as_str()), (0, "2\n+++\n--+\n"));
    }

    #[test]
    fn h1_examples() {
        assert_eq!(
            call(&["h1", "--group", "qb", "-n", "4"]).1,
            "rank=2 torsion=[2]\n"
        );
        assert_eq!(
            call(&["h1", "--group", "pmod", "-n", "4"]).1,
            "rank=5 torsion=[]\n"
        );
    }

    #[test]
    fn input_errors_exit_two() {
        let (code, _, err) = call(&["perm", "-n", "3", "1 x"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        assert_eq!(call(&["perm", "-n", "3", "3"]).0, 2);
        assert_eq!(call(&["perm", "-n", "1", "1"]).0, 2);
        assert_eq!(call(&["factor", "-n", "3", "1"]).0, 2);
        assert_eq!(call(&["verify", "--group", "pmod", "-n", "4"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn nf_and_factor_output() {
        assert_eq!(call(&["nf", "-n", "3", "1 2 1"]).1, "D^1\n");
        assert_eq!(call(&["nf", "-n", "3", ""]).1, "D^0\n");
        let (_, out, _) = call(&["factor", "-n", "3", "1 2"]);
        assert!(out.starts_with("k=1\np="));
    }

    #[test]
    fn relators_and_verify() {
        let (code, out, _) = call(&["relators", "--group", "pb", "-n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        let (code, out, _) = call(&["verify", "--group", "qb", "-n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "checked=17 failures=0\n");
    }
}
