use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use tracefa::classroom::{classify_trace, profile_student, ModelId};
use tracefa::io::{deserialize_dfa, export_dot, parse_trace, serialize_dfa, SessionName};
use tracefa::{
    compile_str, equivalent, hopcroft_minimize, symbol::is_token, Alphabet, AutomatonError, Dfa,
    Equivalence, Word,
};

/// Outcome of a successful command: exit 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Negative,
}

impl From<Status> for std::process::ExitCode {
    fn from(status: Status) -> Self {
        match status {
            Status::Success => std::process::ExitCode::SUCCESS,
            Status::Negative => std::process::ExitCode::from(1),
        }
    }
}

/// An input or usage error; always exit 2.
#[derive(Debug)]
pub struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn fail(message: impl Into<String>) -> Failure {
    Failure(message.into())
}

fn with_path(path: &Path) -> impl Fn(&dyn fmt::Display) -> Failure + '_ {
    move |e| fail(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| with_path(path)(&e))
}

fn write_or_print(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| with_path(path)(&e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

const MODEL_PREFIX: &str = "model:";

/// A built-in model (`model:<name>`) or an automaton document on disk.
fn load_automaton(spec: &str) -> Result<Dfa, Failure> {
    if let Some(name) = spec.strip_prefix(MODEL_PREFIX) {
        return Ok(parse_model(name)?.model().machine);
    }
    let path = Path::new(spec);
    deserialize_dfa(&read(path)?).map_err(|e| with_path(path)(&e))
}

fn parse_model(name: &str) -> Result<ModelId, Failure> {
    name.parse().map_err(|e| fail(format!("{e}")))
}

fn load_trace(path: &Path) -> Result<Word, Failure> {
    parse_trace(&read(path)?).map_err(|e| with_path(path)(&e))
}

pub fn compile(
    regex: Option<&str>,
    file: Option<&Path>,
    alphabet: Option<&str>,
    minimize: bool,
    output: Option<&Path>,
) -> Result<Status, Failure> {
    let text = match (regex, file) {
        (Some(text), _) => text.to_owned(),
        (None, Some(path)) => read(path)?,
        (None, None) => return Err(fail("no expression given")),
    };
    let declared = alphabet
        .map(|list| {
            Alphabet::from_names(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
                .map_err(|e| fail(format!("--alphabet: {e}")))
        })
        .transpose()?;
    let mut dfa = compile_str(&text, declared.as_ref()).map_err(|e| fail(e.to_string()))?;
    if minimize {
        dfa = hopcroft_minimize(&dfa);
    }
    let document = serialize_dfa(&dfa);
    match output {
        Some(_) => {
            write_or_print(output, &document)?;
            println!("states: {}", dfa.state_count());
        }
        None => {
            print!("{document}");
            eprintln!("states: {}", dfa.state_count());
        }
    }
    Ok(Status::Success)
}

pub fn accept(
    automaton: &str,
    trace: &Path,
    show_run: bool,
    reject_unknown: bool,
) -> Result<Status, Failure> {
    let dfa = load_automaton(automaton)?;
    let word = load_trace(trace)?;
    let (run, error) = match dfa.run(&word) {
        Ok(run) => (run, None),
        Err(e) => (e.partial, Some(e.source)),
    };
    let mut out = String::new();
    if show_run {
        for config in &run {
            writeln!(out, "[{}, {}]", config.state, config.remaining.len()).unwrap();
        }
    }
    let accepted = match error {
        None => dfa.is_accepting(run.last().expect("nonempty run").state),
        Some(e @ AutomatonError::UnknownSymbol { .. }) if reject_unknown => {
            eprintln!("{}: {e}", trace.display());
            false
        }
        Some(e) => {
            print!("{out}");
            return Err(with_path(trace)(&e));
        }
    };
    out.push_str(if accepted { "ACCEPT\n" } else { "REJECT\n" });
    print!("{out}");
    Ok(if accepted { Status::Success } else { Status::Negative })
}

pub fn minimize(automaton: &str, output: Option<&Path>) -> Result<Status, Failure> {
    let dfa = load_automaton(automaton)?;
    write_or_print(output, &serialize_dfa(&hopcroft_minimize(&dfa)))?;
    Ok(Status::Success)
}

pub fn equiv(left: &str, right: &str) -> Result<Status, Failure> {
    let (l, r) = (load_automaton(left)?, load_automaton(right)?);
    match equivalent(&l, &r).map_err(|e| fail(e.to_string()))? {
        Equivalence::Equal => Ok(Status::Success),
        Equivalence::Counterexample(word) => {
            eprintln!("not equivalent; counterexample of length {}", word.len());
            let lines: String = word.iter().map(|e| format!("{e}\n")).collect();
            print!("{lines}");
            Ok(Status::Negative)
        }
    }
}

fn default_graph_name(automaton: &str) -> String {
    if let Some(name) = automaton.strip_prefix(MODEL_PREFIX) {
        return name.to_owned();
    }
    Path::new(automaton)
        .file_stem()
        .and_then(|s| s.to_str())
        .filter(|s| is_token(s))
        .unwrap_or("automaton")
        .to_owned()
}

pub fn dot(automaton: &str, name: Option<&str>, output: Option<&Path>) -> Result<Status, Failure> {
    let dfa = load_automaton(automaton)?;
    let name = match name {
        Some(n) if is_token(n) => n.to_owned(),
        Some(n) => return Err(fail(format!("--name: {n:?} is not a valid token"))),
        None => default_graph_name(automaton),
    };
    write_or_print(output, &export_dot(&dfa, &name))?;
    Ok(Status::Success)
}

pub fn classify(model: &str, traces: &[PathBuf]) -> Result<Status, Failure> {
    let model = parse_model(model)?.model();
    let mut out = String::new();
    let mut all_accepted = true;
    for path in traces {
        let word = load_trace(path)?;
        let verdict = classify_trace(&model, &word).map_err(|e| with_path(path)(&e))?;
        all_accepted &= verdict.accepted;
        let offset = verdict
            .failure_offset
            .map_or_else(|| "-".to_owned(), |i| i.to_string());
        writeln!(
            out,
            "{}\t{}\t{offset}\t{}",
            path.display(),
            if verdict.accepted { "ACCEPT" } else { "REJECT" },
            verdict.query_count
        )
        .unwrap();
    }
    print!("{out}");
    Ok(if all_accepted { Status::Success } else { Status::Negative })
}

pub fn profile(dir: &Path, model: &str) -> Result<Status, Failure> {
    let id = parse_model(model)?;
    let entries = fs::read_dir(dir).map_err(|e| with_path(dir)(&e))?;
    let mut students: BTreeMap<String, Vec<(u32, PathBuf)>> = BTreeMap::new();
    for entry in entries {
        let path = entry.map_err(|e| with_path(dir)(&e))?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("trace") || !path.is_file() {
            continue;
        }
        let file_name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        let session = SessionName::parse(file_name).ok_or_else(|| {
            fail(format!(
                "{}: session files must be named <student-id>__<nn>.trace",
                path.display()
            ))
        })?;
        students
            .entry(session.student_id.to_string())
            .or_default()
            .push((session.number, path));
    }

    let mut out = String::new();
    for (student, mut sessions) in students {
        sessions.sort();
        let traces = sessions
            .iter()
            .map(|(_, path)| load_trace(path).map(|w| (id, w)))
            .collect::<Result<Vec<_>, _>>()?;
        let student_id = tracefa::Symbol::new(&student).expect("validated by SessionName");
        let profile = profile_student(student_id, &traces).map_err(|e| {
            with_path(&sessions[e.session].1)(&e.source)
        })?;
        writeln!(
            out,
            "{student}\t{}\t{}\t{}",
            profile.sessions,
            profile.accepted(id),
            profile.mean_query_rate.to_decimal(4)
        )
        .unwrap();
    }
    print!("{out}");
    Ok(Status::Success)
}
