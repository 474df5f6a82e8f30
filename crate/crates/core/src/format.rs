//! Line-oriented text files for leaf sets and comajor sets.
//!
//! ```text
//! csl v1 d=3 depth=4 seed=1/2
//! 1/6-5/6
//! ...
//! ```
//!
//! ```text
//! cscl v1 max_period=3 max_preperiod=1
//! 1/24-23/24 pre=1 per=2 kind=preperiod1
//! ...
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Readers recompute
//! everything derived (generations, orbit data, verdicts) and reject files
//! whose stored fields disagree.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::chords::Chord;
use crate::comajors::{ComajorRecord, CsclApprox, Kind};
use crate::error::{Error, Result};
use crate::legality::SymmetricPair;
use crate::pullback::LeafSet;

pub enum LaminationFile {
    Leaves(LeafSet),
    Comajors(CsclApprox),
}

pub fn write_leafset(ls: &LeafSet) -> String {
    let seed = ls.seed().map_or_else(|| "none".to_string(), |s| s.c.to_string());
    let mut out = format!("csl v1 d=3 depth={} seed={seed}\n", ls.depth());
    for l in ls.leaves() {
        let _ = writeln!(out, "{l}");
    }
    out
}

pub fn write_cscl(approx: &CsclApprox) -> String {
    let mut out = format!(
        "cscl v1 max_period={} max_preperiod={}\n",
        approx.max_period, approx.max_preperiod
    );
    for r in &approx.records {
        let _ = writeln!(out, "{} pre={} per={} kind={}", r.chord(), r.preperiod, r.period, r.kind);
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<'a>(line: usize, tokens: impl Iterator<Item = &'a str>) -> Result<HashMap<&'a str, &'a str>> {
    let mut map = HashMap::new();
    for t in tokens {
        let (k, v) = t.split_once('=').ok_or_else(|| Error::Format {
            line,
            msg: format!("expected key=value, found `{t}`"),
        })?;
        if map.insert(k, v).is_some() {
            return Err(Error::Format {
                line,
                msg: format!("repeated field `{k}`"),
            });
        }
    }
    Ok(map)
}

fn take<'a>(map: &mut HashMap<&str, &'a str>, key: &str, line: usize) -> Result<&'a str> {
    map.remove(key).ok_or_else(|| Error::Format {
        line,
        msg: format!("missing field `{key}`"),
    })
}

fn number(value: &str, key: &str, line: usize) -> Result<usize> {
    value.parse().map_err(|_| Error::Format {
        line,
        msg: format!("`{key}` must be a non-negative integer, found `{value}`"),
    })
}

fn no_extra(map: &HashMap<&str, &str>, line: usize) -> Result<()> {
    match map.keys().next() {
        Some(k) => Err(Error::Format {
            line,
            msg: format!("unknown field `{k}`"),
        }),
        None => Ok(()),
    }
}

fn chord_at(token: &str, line: usize) -> Result<Chord> {
    Chord::parse(token).map_err(|e| Error::Format { line, msg: e.to_string() })
}

/// Reads either file kind, dispatching on the header.
pub fn read_any(text: &str) -> Result<LaminationFile> {
    match content_lines(text).next() {
        Some((_, h)) if h.starts_with("csl ") => read_leafset(text).map(LaminationFile::Leaves),
        Some((_, h)) if h.starts_with("cscl ") => read_cscl(text).map(LaminationFile::Comajors),
        Some((line, _)) => Err(Error::Format {
            line,
            msg: "unknown header; expected `csl v1` or `cscl v1`".into(),
        }),
        None => Err(Error::Format {
            line: 0,
            msg: "empty file".into(),
        }),
    }
}

pub fn read_leafset(text: &str) -> Result<LeafSet> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Format {
        line: 0,
        msg: "empty file".into(),
    })?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("csl") || tokens.next() != Some("v1") {
        return Err(Error::Format {
            line: hl,
            msg: "expected header `csl v1 ...`".into(),
        });
    }
    let mut map = fields(hl, tokens)?;
    if take(&mut map, "d", hl)? != "3" {
        return Err(Error::Format {
            line: hl,
            msg: "only degree d=3 is supported".into(),
        });
    }
    let depth = number(take(&mut map, "depth", hl)?, "depth", hl)?;
    let seed_token = take(&mut map, "seed", hl)?;
    no_extra(&map, hl)?;

    let mut chords = Vec::new();
    for (line, l) in lines {
        let c = chord_at(l, line)?;
        if c.is_degenerate() {
            return Err(Error::Format {
                line,
                msg: "leaves must be chords, not points".into(),
            });
        }
        chords.push(c);
    }
    let n = chords.len();
    chords.sort();
    chords.dedup();
    if chords.len() != n {
        return Err(Error::Format {
            line: hl,
            msg: "repeated leaf".into(),
        });
    }
    if seed_token == "none" {
        return Ok(LeafSet::from_chords(chords));
    }
    let seed = SymmetricPair::new(chord_at(seed_token, hl)?);
    LeafSet::from_seeded_leaves(chords, depth, seed).map_err(|e| Error::Format {
        line: hl,
        msg: e.to_string(),
    })
}

pub fn read_cscl(text: &str) -> Result<CsclApprox> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Format {
        line: 0,
        msg: "empty file".into(),
    })?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("cscl") || tokens.next() != Some("v1") {
        return Err(Error::Format {
            line: hl,
            msg: "expected header `cscl v1 ...`".into(),
        });
    }
    let mut map = fields(hl, tokens)?;
    let max_period = number(take(&mut map, "max_period", hl)?, "max_period", hl)?;
    let max_preperiod = number(take(&mut map, "max_preperiod", hl)?, "max_preperiod", hl)?;
    no_extra(&map, hl)?;

    let mut records = Vec::new();
    for (line, l) in lines {
        let mut tokens = l.split_whitespace();
        let chord = chord_at(tokens.next().unwrap_or_default(), line)?;
        let mut map = fields(line, tokens)?;
        let pre = number(take(&mut map, "pre", line)?, "pre", line)?;
        let per = number(take(&mut map, "per", line)?, "per", line)?;
        let kind_token = take(&mut map, "kind", line)?;
        no_extra(&map, line)?;
        let kind = Kind::parse(kind_token).ok_or_else(|| Error::Format {
            line,
            msg: format!("unknown kind `{kind_token}`"),
        })?;
        let record = ComajorRecord::for_chord(chord).map_err(|e| Error::Format { line, msg: e.to_string() })?;
        if (record.preperiod, record.period, record.kind) != (pre, per, kind) {
            return Err(Error::Format {
                line,
                msg: format!(
                    "stored pre={pre} per={per} kind={kind} but {} has pre={} per={} kind={}",
                    record.chord(),
                    record.preperiod,
                    record.period,
                    record.kind
                ),
            });
        }
        records.push(record);
    }
    records.sort_by(|x, y| x.pair.c.cmp(&y.pair.c));
    Ok(CsclApprox {
        records,
        max_period,
        max_preperiod,
    })
}
