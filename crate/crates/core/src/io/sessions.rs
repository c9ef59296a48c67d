//! Session file naming: `<student-id>__<nn>.trace`.

use std::fmt;

use crate::symbol::{is_token, Symbol};

pub const EXTENSION: &str = "trace";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SessionName {
    pub student_id: Symbol,
    pub number: u32,
}

impl SessionName {
    /// Parses a file name such as `s01__03.trace`. The student id must be a
    /// valid token and `nn` one or more decimal digits.
    pub fn parse(file_name: &str) -> Option<SessionName> {
        let stem = file_name.strip_suffix(".trace")?;
        let (id, number) = stem.rsplit_once("__")?;
        if !is_token(id) || number.is_empty() || !number.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(SessionName {
            student_id: Symbol::new(id).ok()?,
            number: number.parse().ok()?,
        })
    }
}

impl fmt::Display for SessionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}__{:02}.{EXTENSION}", self.student_id, self.number)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_renders() {
        let name = SessionName::parse("amna_k__07.trace").unwrap();
        assert_eq!(name.student_id.as_str(), "amna_k");
        assert_eq!(name.number, 7);
        assert_eq!(name.to_string(), "amna_k__07.trace");
        // Ids may contain "__" themselves; the last separator wins.
        let nested = SessionName::parse("a__b__1.trace").unwrap();
        assert_eq!((nested.student_id.as_str(), nested.number), ("a__b", 1));
    }

    #[test]
    fn rejects_malformed_names() {
        for bad in ["s01_01.trace", "s01__.trace", "s01__1a.trace", "__01.trace", "s01__01.txt", "1s__01.trace"] {
            assert_eq!(SessionName::parse(bad), None, "{bad}");
        }
    }
}
