//! The two classroom-interaction models and trace classification against them.
//!
//! Event names are normalized to underscore identifiers; the table below maps
//! the original spellings to the tokens used here.
//!
//! | original spelling                 | token                   |
//! |-----------------------------------|-------------------------|
//! | `Resonse_Queries`                 | `Response_Queries`      |
//! | `Emotional Environment`           | `Emotional_Environment` |
//! | `Positive behavior`               | `Positive_Behavior`     |
//! | `Positive Language`               | `Positive_Language`     |
//! | `Extra motivation`, `Extra Motivation` | `Extra_Motivation` |
//! | `give_respect`                    | `Give_Respect`          |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::compile::compile_minimal;
use crate::dfa::{AutomatonError, Configuration, Dfa};
use crate::regex::{parse_regex, RegexAst, RegexSource};
use crate::symbol::{Alphabet, Symbol, Word};

pub const SIMPLE_ALPHABET: [&str; 4] = [
    "Deliver_Lecture",
    "Response_Queries",
    "Understand_Lecture",
    "Ask_Queries",
];

pub const SIMPLE_REGEX: &str = "(Deliver_Lecture)* . Understand_Lecture \
     + (Deliver_Lecture . (Ask_Queries . Response_Queries)*)* . Understand_Lecture";

pub const EMOTIONAL_ALPHABET: [&str; 8] = [
    "Deliver_Lecture",
    "Emotional_Environment",
    "Positive_Behavior",
    "Positive_Language",
    "Extra_Motivation",
    "Understand_Lecture",
    "Minimum_Queries",
    "Give_Respect",
];

// The inner group is the four teacher-language events in listed order, joined
// to Deliver_Lecture by juxtaposition.
pub const EMOTIONAL_REGEX: &str = "(Deliver_Lecture (Emotional_Environment Positive_Behavior \
     . Positive_Language . Extra_Motivation))* . Understand_Lecture \
     . (Minimum_Queries . Give_Respect)* . Understand_Lecture . Give_Respect";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    Simple,
    Emotional,
}

impl ModelId {
    pub const ALL: [ModelId; 2] = [ModelId::Simple, ModelId::Emotional];

    pub fn name(self) -> &'static str {
        match self {
            ModelId::Simple => "simple",
            ModelId::Emotional => "emotional",
        }
    }

    /// The event counted as a query in this model.
    pub fn query_symbol(self) -> &'static str {
        match self {
            ModelId::Simple => "Ask_Queries",
            ModelId::Emotional => "Minimum_Queries",
        }
    }

    pub fn model(self) -> ClassroomModel {
        match self {
            ModelId::Simple => simple_model(),
            ModelId::Emotional => emotional_model(),
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown model `{0}` (expected `simple` or `emotional`)")]
pub struct UnknownModel(pub String);

impl FromStr for ModelId {
    type Err = UnknownModel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simple" => Ok(ModelId::Simple),
            "emotional" => Ok(ModelId::Emotional),
            other => Err(UnknownModel(other.to_owned())),
        }
    }
}

/// A compiled classroom model: its source expression and the canonical
/// minimal machine for it.
#[derive(Debug, Clone)]
pub struct ClassroomModel {
    pub id: ModelId,
    pub alphabet: Alphabet,
    pub source_regex: RegexAst,
    pub machine: Dfa,
    query: Symbol,
    live: Vec<bool>,
}

impl ClassroomModel {
    fn build(id: ModelId, names: &[&str], text: &str) -> Self {
        let alphabet = Alphabet::from_names(names).expect("model alphabet is well formed");
        let source_regex = parse_regex(&RegexSource::with_alphabet(text, &alphabet))
            .expect("model expression parses");
        let machine = compile_minimal(&source_regex, &alphabet).expect("model expression compiles");
        let live = machine.live_states();
        ClassroomModel {
            id,
            query: Symbol::new(id.query_symbol()).expect("query symbol is a token"),
            alphabet,
            source_regex,
            machine,
            live,
        }
    }

    pub fn query_symbol(&self) -> &Symbol {
        &self.query
    }

    pub fn accepts(&self, trace: &[Symbol]) -> Result<bool, AutomatonError> {
        self.machine.accepts(trace)
    }
}

pub fn simple_model() -> ClassroomModel {
    ClassroomModel::build(ModelId::Simple, &SIMPLE_ALPHABET, SIMPLE_REGEX)
}

pub fn emotional_model() -> ClassroomModel {
    ClassroomModel::build(ModelId::Emotional, &EMOTIONAL_ALPHABET, EMOTIONAL_REGEX)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceVerdict {
    pub accepted: bool,
    pub run: Vec<Configuration>,
    /// Index of the first event whose consumption leaves the machine in a
    /// state from which no accepting state is reachable.
    pub failure_offset: Option<usize>,
    pub query_count: usize,
}

/// Runs `trace` through the model and reports acceptance, the full run, the
/// earliest hopeless position and the number of query events.
pub fn classify_trace(model: &ClassroomModel, trace: &[Symbol]) -> Result<TraceVerdict, AutomatonError> {
    let run = model.machine.run(trace).map_err(|e| e.source)?;
    let end = run.last().expect("a run has at least one configuration").state;
    let accepted = model.machine.is_accepting(end);
    // run[i + 1] is the configuration after consuming trace[i].
    let failure_offset = run[1..].iter().position(|c| !model.live[c.state.0]);
    let query_count = trace.iter().filter(|&e| e == &model.query).count();
    Ok(TraceVerdict {
        accepted,
        run,
        failure_offset: if accepted { None } else { failure_offset },
        query_count,
    })
}

/// Queries per event as an exact ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QueryRate {
    pub queries: u64,
    pub events: u64,
}

impl QueryRate {
    pub fn as_f64(self) -> f64 {
        if self.events == 0 {
            0.0
        } else {
            self.queries as f64 / self.events as f64
        }
    }

    /// Decimal rendering with `places` digits, rounding half to even.
    /// Zero events render as zero.
    pub fn to_decimal(self, places: u32) -> String {
        let scale = 10u128.pow(places);
        let (mut units, remainder, denominator) = if self.events == 0 {
            (0, 0, 1)
        } else {
            let numerator = self.queries as u128 * scale;
            let denominator = self.events as u128;
            (numerator / denominator, numerator % denominator, denominator)
        };
        match (2 * remainder).cmp(&denominator) {
            std::cmp::Ordering::Greater => units += 1,
            std::cmp::Ordering::Equal if units % 2 == 1 => units += 1,
            _ => {}
        }
        let whole = units / scale;
        if places == 0 {
            return whole.to_string();
        }
        let fraction = units % scale;
        format!("{whole}.{fraction:0width$}", width = places as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StudentProfile {
    pub student_id: Symbol,
    pub sessions: usize,
    pub accepted_simple: usize,
    pub accepted_emotional: usize,
    pub mean_query_rate: QueryRate,
}

impl StudentProfile {
    pub fn accepted(&self, model: ModelId) -> usize {
        match model {
            ModelId::Simple => self.accepted_simple,
            ModelId::Emotional => self.accepted_emotional,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("session {session}: {source}")]
pub struct ProfileError {
    pub session: usize,
    pub source: AutomatonError,
}

/// Aggregates the verdicts of one student's sessions. The query rate is the
/// total number of query events over the total number of events.
pub fn profile_student(
    student_id: Symbol,
    sessions: &[(ModelId, Word)],
) -> Result<StudentProfile, ProfileError> {
    let simple = sessions
        .iter()
        .any(|(m, _)| *m == ModelId::Simple)
        .then(simple_model);
    let emotional = sessions
        .iter()
        .any(|(m, _)| *m == ModelId::Emotional)
        .then(emotional_model);

    let mut profile = StudentProfile {
        student_id,
        sessions: sessions.len(),
        accepted_simple: 0,
        accepted_emotional: 0,
        mean_query_rate: QueryRate::default(),
    };
    for (session, (id, trace)) in sessions.iter().enumerate() {
        let model = match id {
            ModelId::Simple => simple.as_ref(),
            ModelId::Emotional => emotional.as_ref(),
        }
        .expect("model built for every id present");
        let verdict =
            classify_trace(model, trace).map_err(|source| ProfileError { session, source })?;
        if verdict.accepted {
            match id {
                ModelId::Simple => profile.accepted_simple += 1,
                ModelId::Emotional => profile.accepted_emotional += 1,
            }
        }
        profile.mean_query_rate.queries += verdict.query_count as u64;
        profile.mean_query_rate.events += trace.len() as u64;
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compile::brute_force_match;

    fn word(tokens: &[&str]) -> Word {
        Word::from_tokens(tokens).unwrap()
    }

    #[test]
    fn simple_examples() {
        let m = simple_model();
        assert_eq!(m.accepts(&word(&["Deliver_Lecture", "Understand_Lecture"])), Ok(true));
        assert_eq!(m.accepts(&[]), Ok(false));
        assert_eq!(
            m.accepts(&word(&["Deliver_Lecture", "Ask_Queries", "Response_Queries", "Understand_Lecture"])),
            Ok(true)
        );
        let w = word(&["Ask_Queries", "Understand_Lecture"]);
        assert!(!brute_force_match(&m.source_regex, &w));
        assert_eq!(m.accepts(&w), Ok(false));
    }

    #[test]
    fn emotional_examples() {
        let m = emotional_model();
        assert_eq!(
            m.accepts(&word(&["Understand_Lecture", "Understand_Lecture", "Give_Respect"])),
            Ok(true)
        );
        assert_eq!(
            m.accepts(&word(&[
                "Deliver_Lecture",
                "Emotional_Environment",
                "Positive_Behavior",
                "Positive_Language",
                "Extra_Motivation",
                "Understand_Lecture",
                "Minimum_Queries",
                "Give_Respect",
                "Understand_Lecture",
                "Give_Respect",
            ])),
            Ok(true)
        );
        let w = word(&["Understand_Lecture", "Give_Respect"]);
        assert!(!brute_force_match(&m.source_regex, &w));
        assert_eq!(m.accepts(&w), Ok(false));
    }

    #[test]
    fn alphabets_follow_listing_order() {
        let names = |m: &ClassroomModel| m.alphabet.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(names(&simple_model()), SIMPLE_ALPHABET);
        assert_eq!(names(&emotional_model()), EMOTIONAL_ALPHABET);
    }

    #[test]
    fn classify_accepting_trace() {
        let v = classify_trace(&simple_model(), &word(&["Deliver_Lecture", "Understand_Lecture"])).unwrap();
        assert!(v.accepted);
        assert_eq!(v.query_count, 0);
        assert_eq!(v.run.len(), 3);
        assert_eq!(v.failure_offset, None);
    }

    #[test]
    fn classify_failure_offsets() {
        let v = classify_trace(&simple_model(), &word(&["Understand_Lecture", "Understand_Lecture"])).unwrap();
        assert!(!v.accepted);
        assert_eq!(v.failure_offset, Some(1));

        let v = classify_trace(&emotional_model(), &word(&["Positive_Language"])).unwrap();
        assert!(!v.accepted);
        assert_eq!(v.failure_offset, Some(0));

        // Rejected but still live: a proper prefix of an accepted trace.
        let v = classify_trace(&simple_model(), &word(&["Deliver_Lecture"])).unwrap();
        assert!(!v.accepted);
        assert_eq!(v.failure_offset, None);

        let v = classify_trace(&simple_model(), &[]).unwrap();
        assert!(!v.accepted);
        assert_eq!(v.failure_offset, None);
        assert_eq!(v.run.len(), 1);
    }

    #[test]
    fn classify_counts_queries_and_rejects_foreign_events() {
        let trace = word(&["Deliver_Lecture", "Ask_Queries", "Response_Queries", "Ask_Queries"]);
        assert_eq!(classify_trace(&simple_model(), &trace).unwrap().query_count, 2);
        let err = classify_trace(&simple_model(), &word(&["Deliver_Lecture", "Give_Respect"])).unwrap_err();
        assert_eq!(
            err,
            AutomatonError::UnknownSymbol { symbol: Symbol::new("Give_Respect").unwrap(), offset: 1 }
        );
    }

    #[test]
    fn profiles() {
        let id = Symbol::new("s01").unwrap();
        let empty = profile_student(id.clone(), &[]).unwrap();
        assert_eq!((empty.sessions, empty.accepted_simple, empty.accepted_emotional), (0, 0, 0));
        assert_eq!(empty.mean_query_rate.to_decimal(4), "0.0000");

        let one = profile_student(
            id.clone(),
            &[(
                ModelId::Simple,
                word(&["Deliver_Lecture", "Ask_Queries", "Response_Queries", "Understand_Lecture"]),
            )],
        )
        .unwrap();
        assert_eq!(one.accepted_simple, 1);
        assert_eq!(one.mean_query_rate, QueryRate { queries: 1, events: 4 });
        assert_eq!(one.mean_query_rate.to_decimal(4), "0.2500");

        let two = profile_student(
            id.clone(),
            &[
                (ModelId::Simple, word(&["Deliver_Lecture", "Understand_Lecture"])),
                (ModelId::Simple, word(&["Ask_Queries"])),
            ],
        )
        .unwrap();
        assert_eq!((two.sessions, two.accepted_simple), (2, 1));

        let err = profile_student(
            id,
            &[
                (ModelId::Simple, word(&["Understand_Lecture"])),
                (ModelId::Simple, word(&["Give_Respect"])),
            ],
        )
        .unwrap_err();
        assert_eq!(err.session, 1);
    }

    #[test]
    fn half_even_rounding() {
        let rate = |q, e| QueryRate { queries: q, events: e }.to_decimal(4);
        assert_eq!(rate(1, 3), "0.3333");
        assert_eq!(rate(2, 3), "0.6667");
        assert_eq!(rate(1, 1), "1.0000");
        // 1/32 = 0.03125 -> tie, round to even 0.0312
        assert_eq!(rate(1, 32), "0.0312");
        // 3/32 = 0.09375 -> tie, round to even 0.0938
        assert_eq!(rate(3, 32), "0.0938");
        assert_eq!(QueryRate { queries: 5, events: 2 }.to_decimal(0), "2");
        assert_eq!(QueryRate { queries: 7, events: 2 }.to_decimal(0), "4");
    }

    #[test]
    fn model_names_round_trip() {
        for id in ModelId::ALL {
            assert_eq!(id.name().parse::<ModelId>(), Ok(id));
        }
        assert!("bogus".parse::<ModelId>().is_err());
    }
}
