//! The profile file format and JSON reports.
//!
//! A profile file is UTF-8 text with LF or CRLF line ends:
//!
//! ```text
//! # NUMBER ALTERNATIVES: 3
//! # NUMBER VOTERS: 3
//! # ALTERNATIVE NAME 1: a
//! # ALTERNATIVE NAME 2: b
//! # ALTERNATIVE NAME 3: c
//! 2: 1,2,3
//! 1: 3,1,2
//! ```
//!
//! Body lines are `count: ids` with 1-based alternative ids; other lines
//! starting with `#` are comments and blank lines are skipped. Both count
//! headers are optional; when present they are checked. Names are optional
//! but, if any is given, every alternative needs one.
//!
//! Ids in JSON output are 0-based.

pub mod json;
mod report;

pub use report::{analyze, recognize_domain, report_to_json, AnalysisReport, DomainEntry, DomainTag, SCHEMA_VERSION};

use prefstruct_core::{Profile, ProfileError};
use thiserror::Error;

/// A rejected profile file. Lines and columns are 1-based; column 0 means
/// the whole line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

/// Reads a profile, expanding multiplicities and shifting ids to 0-based.
pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut declared_m: Option<(usize, usize)> = None;
    let mut declared_n: Option<(usize, usize)> = None;
    let mut names: Vec<(usize, usize, String)> = Vec::new();
    let mut votes: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.split('\n').enumerate() {
        let line_no = k + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            continue;
        }
        last_line = line_no;
        if let Some(comment) = line.strip_prefix('#') {
            let body = comment.trim();
            let column = line.len() - comment.trim_start().len() + 1;
            if let Some(value) = body.strip_prefix("NUMBER ALTERNATIVES:") {
                declared_m = Some((number(value, line_no, column)?, line_no));
            } else if let Some(value) = body.strip_prefix("NUMBER VOTERS:") {
                declared_n = Some((number(value, line_no, column)?, line_no));
            } else if let Some(rest) = body.strip_prefix("ALTERNATIVE NAME") {
                let Some((id, name)) = rest.split_once(':') else {
                    return fail(line_no, column, "expected 'ALTERNATIVE NAME k: text'");
                };
                let id = number(id, line_no, column)?;
                names.push((id, line_no, name.trim().to_string()));
            }
            continue;
        }
        let Some((count, ids)) = line.split_once(':') else {
            return fail(line_no, 0, "expected 'count: id,id,...'");
        };
        let offset = count.len() + 2;
        let count = number(count, line_no, 1)?;
        if count == 0 {
            return fail(line_no, 1, "multiplicity must be positive");
        }
        let m = declared_m.map(|(m, _)| m).or_else(|| votes.first().map(Vec::len));
        let vote = parse_vote(ids, offset, line_no, m)?;
        if votes.len().saturating_add(count) > 1 << 28 {
            return fail(line_no, 1, "too many voters");
        }
        votes.extend(std::iter::repeat_n(vote, count));
    }
    if votes.is_empty() {
        return fail(last_line.max(1), 0, "no votes");
    }
    if let Some((n, line)) = declared_n {
        if n != votes.len() {
            return fail(line, 0, format!("header declares {n} voters, body has {}", votes.len()));
        }
    }
    let profile = Profile::new(votes).map_err(|e| ParseError { line: last_line, column: 0, message: e.to_string() })?;
    if names.is_empty() {
        return Ok(profile);
    }
    let m = profile.m();
    let mut slots: Vec<Option<String>> = vec![None; m];
    for (id, line, name) in names {
        if id == 0 || id > m {
            return fail(line, 0, format!("alternative {id} is out of range 1..={m}"));
        }
        if slots[id - 1].replace(name).is_some() {
            return fail(line, 0, format!("alternative {id} is named twice"));
        }
    }
    if let Some(missing) = slots.iter().position(Option::is_none) {
        return fail(0, 0, format!("alternative {} has no name", missing + 1));
    }
    profile
        .with_names(slots.into_iter().map(Option::unwrap).collect())
        .map_err(|e: ProfileError| ParseError { line: 0, column: 0, message: e.to_string() })
}

fn number(text: &str, line: usize, column: usize) -> Result<usize, ParseError> {
    let t = text.trim();
    t.parse().or_else(|_| fail(line, column, format!("expected a non-negative integer, found '{t}'")))
}

/// Parses the comma-separated ids after the colon; `offset` is the column
/// where that text starts.
fn parse_vote(text: &str, offset: usize, line: usize, m: Option<usize>) -> Result<Vec<usize>, ParseError> {
    let mut vote = Vec::new();
    let mut column = offset;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let at = column + lead;
        let id: usize = number(token, line, at)?;
        if id == 0 {
            return fail(line, at, "ids are 1-based");
        }
        if m.is_some_and(|m| id > m) {
            return fail(line, at, format!("id {id} exceeds the {} alternatives", m.unwrap_or(0)));
        }
        vote.push(id - 1);
        column += token.len() + 1;
    }
    let len = m.unwrap_or(vote.len());
    if vote.len() != len {
        return fail(line, offset, format!("vote has {} ids, expected {len}", vote.len()));
    }
    let mut seen = vec![false; len];
    for &a in &vote {
        if a >= len {
            return fail(line, offset, format!("id {} exceeds the {len} alternatives", a + 1));
        }
        if std::mem::replace(&mut seen[a], true) {
            return fail(line, offset, format!("id {} appears twice", a + 1));
        }
    }
    Ok(vote)
}

/// Writes a profile in the file format, merging runs of identical votes.
pub fn write_profile(p: &Profile) -> String {
    let mut out = format!("# NUMBER ALTERNATIVES: {}\n# NUMBER VOTERS: {}\n", p.m(), p.n());
    if let Some(names) = p.names() {
        for (k, name) in names.iter().enumerate() {
            out.push_str(&format!("# ALTERNATIVE NAME {}: {name}\n", k + 1));
        }
    }
    let mut i = 0;
    while i < p.n() {
        let run = (i..p.n()).take_while(|&j| p.vote(j) == p.vote(i)).count();
        let ids: Vec<String> = p.vote(i).iter().map(|a| (a + 1).to_string()).collect();
        out.push_str(&format!("{run}: {}\n", ids.join(",")));
        i += run;
    }
    out
}
