//! The `.ws` witness-script format.
//!
//! One assignment per line, `x1 = s1 A1`, where `A<k>` is letter `k`
//! (numbered from 1) and `s<j>` is element `j` of the carrier. Blank lines
//! and lines starting with `#` are skipped.

use super::{FreeProductElement, FreeprodError, Segment, WitnessScript};
use crate::algebra::FiniteSemigroup;

pub fn parse_script(text: &str, s: &FiniteSemigroup) -> Result<WitnessScript, FreeprodError> {
    let mut assignments: Vec<(String, FreeProductElement)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| FreeprodError::Script { line: lineno + 1, message };
        let (name, rhs) = line.split_once('=').ok_or_else(|| err("expected `<variable> = <segments>`".into()))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(err(format!("bad variable name `{name}`")));
        }
        if assignments.iter().any(|(v, _)| v == name) {
            return Err(err(format!("`{name}` assigned twice")));
        }
        let mut segments = Vec::new();
        for tok in rhs.split_whitespace() {
            let number = |rest: &str| rest.parse::<usize>().map_err(|_| err(format!("bad token `{tok}`")));
            if let Some(rest) = tok.strip_prefix('A') {
                let k = number(rest)?;
                if k == 0 {
                    return Err(err("letters are numbered from 1".into()));
                }
                segments.push(Segment::Free(vec![k]));
            } else if let Some(rest) = tok.strip_prefix('s') {
                let a = number(rest)?;
                if a >= s.order() {
                    return Err(err(format!("element {a} out of range for order {}", s.order())));
                }
                segments.push(Segment::Carrier(a));
            } else {
                return Err(err(format!("bad token `{tok}`")));
            }
        }
        let value = FreeProductElement::from_segments(segments, s).ok_or_else(|| err("empty value".into()))?;
        assignments.push((name.to_owned(), value));
    }
    Ok(WitnessScript { assignments })
}
