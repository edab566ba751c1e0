//! Plain-text formats.
//!
//! Covering files: the first content line lists the universe in order, each
//! further content line is one block. Blank lines and lines starting with
//! `#` are ignored.
//!
//! ```text
//! a b c d e f
//! a b
//! a c d
//! a b c d
//! d e f
//! ```
//!
//! Set specs are comma-separated element names, optionally wrapped in
//! braces; the empty string and `{}` both denote the empty set.

use crate::covering::{Covering, ElementSet, Universe};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_covering(text: &str) -> Result<Covering> {
    let mut lines = content_lines(text);
    let (uline, first) = lines
        .next()
        .ok_or_else(|| Error::Syntax("missing universe line".into()))?;
    let universe = Universe::new(first.split_whitespace()).map_err(|e| e.at_line(uline))?;
    let mut blocks = Vec::new();
    for (line, l) in lines {
        let block = universe.set(l.split_whitespace()).map_err(|e| e.at_line(line))?;
        blocks.push(block);
    }
    Covering::from_sets(&universe, blocks)
}

/// Inverse of [`parse_covering`]; block members are listed in universe
/// order. Ends with a newline.
pub fn covering_to_text(cov: &Covering) -> String {
    let mut out = cov.universe().names().join(" ");
    out.push('\n');
    for b in cov.blocks() {
        out.push_str(&b.names().collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_set_spec(universe: &Universe, spec: &str) -> Result<ElementSet> {
    let mut s = spec.trim();
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        s = inner.trim();
    }
    if s.is_empty() {
        return Ok(universe.empty_set());
    }
    let names = s
        .split(',')
        .map(str::trim)
        .map(|n| {
            if n.is_empty() {
                Err(Error::Syntax(format!("empty element name in set '{spec}'")))
            } else {
                Ok(n)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    universe.set(names)
}

/// One set spec per content line.
pub fn parse_sets_file(universe: &Universe, text: &str) -> Result<Vec<ElementSet>> {
    content_lines(text)
        .map(|(line, l)| parse_set_spec(universe, l).map_err(|e| e.at_line(line)))
        .collect()
}
