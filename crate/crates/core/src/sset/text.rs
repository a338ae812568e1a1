//! Plain-text complex format.
//!
//! ```text
//! # the 2-sphere
//! truncation 3
//! basepoint 0
//! 0 0
//! 2 0 : s0(0) s0(0) s0(0)
//! ```
//!
//! After the header, each line declares one nondegenerate simplex as
//! `<level> <id>`, followed for positive levels by `:` and its faces
//! `d_0 .. d_n`. A face is either a simplex id one level down or a degeneracy
//! word applied to an id, written with decreasing indices as in `s2s0(4)`.
//! Ids run consecutively from 0 within each level.

use std::fmt::Write;

use super::{Builder, FinSSet, Simplex};
use crate::error::{Error, Result};

impl FinSSet {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "truncation {}", self.truncation()).unwrap();
        writeln!(out, "basepoint {}", self.basepoint()).unwrap();
        for n in 0..=self.truncation() {
            for x in 0..self.count(n) {
                write!(out, "{n} {x}").unwrap();
                if n > 0 {
                    out.push_str(" :");
                    for f in self.faces_of(n, x) {
                        out.push(' ');
                        out.push_str(&face_token(f));
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(src: &str) -> Result<FinSSet> {
        let mut truncation: Option<usize> = None;
        let mut basepoint: Option<usize> = None;
        let mut builder: Option<Builder> = None;
        for (ln, raw) in src.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let tokens = tokenize(line);
            let Some(&(col, first)) = tokens.first() else {
                continue;
            };
            match first {
                "truncation" | "basepoint" => {
                    let &(vcol, value) = tokens
                        .get(1)
                        .ok_or_else(|| Error::parse(line_no, col + first.len(), "expected a number"))?;
                    let v: usize = value
                        .parse()
                        .map_err(|_| Error::parse(line_no, vcol, "expected a number"))?;
                    if let Some(&(c, _)) = tokens.get(2) {
                        return Err(Error::parse(line_no, c, "unexpected token"));
                    }
                    if first == "truncation" {
                        if truncation.is_some() {
                            return Err(Error::parse(line_no, col, "truncation declared twice"));
                        }
                        if v > 24 {
                            return Err(Error::parse(line_no, vcol, "truncation too large"));
                        }
                        truncation = Some(v);
                        builder = Some(Builder::new(v));
                    } else {
                        basepoint = Some(v);
                    }
                }
                _ => {
                    let b = builder
                        .as_mut()
                        .ok_or_else(|| Error::parse(line_no, col, "simplex before truncation line"))?;
                    let level: usize = first
                        .parse()
                        .map_err(|_| Error::parse(line_no, col, "expected a level"))?;
                    if level > b.truncation() {
                        return Err(Error::parse(line_no, col, "level above the truncation"));
                    }
                    let &(icol, id) = tokens
                        .get(1)
                        .ok_or_else(|| Error::parse(line_no, col + first.len(), "expected an id"))?;
                    let id: usize = id.parse().map_err(|_| Error::parse(line_no, icol, "expected an id"))?;
                    if id != b.count(level) {
                        return Err(Error::parse(
                            line_no,
                            icol,
                            format!("expected id {} at level {level}", b.count(level)),
                        ));
                    }
                    if level == 0 {
                        if let Some(&(c, _)) = tokens.get(2) {
                            return Err(Error::parse(line_no, c, "vertices have no faces"));
                        }
                        b.add_vertex();
                        continue;
                    }
                    match tokens.get(2) {
                        Some(&(_, ":")) => {}
                        Some(&(c, _)) => return Err(Error::parse(line_no, c, "expected ':'")),
                        None => return Err(Error::parse(line_no, raw.len() + 1, "expected ':'")),
                    }
                    let faces: Vec<Simplex> = tokens[3..]
                        .iter()
                        .map(|&(c, t)| parse_face(t, level - 1).map_err(|m| Error::parse(line_no, c, &m)))
                        .collect::<Result<_>>()?;
                    if faces.len() != level + 1 {
                        return Err(Error::parse(
                            line_no,
                            raw.len() + 1,
                            format!("expected {} faces, found {}", level + 1, faces.len()),
                        ));
                    }
                    for f in &faces {
                        let m = f.base_level(level - 1);
                        if f.id >= b.count(m) {
                            return Err(Error::parse(
                                line_no,
                                col,
                                format!("face refers to undeclared simplex {} at level {m}", f.id),
                            ));
                        }
                    }
                    b.add(&faces);
                }
            }
        }
        let b = builder.ok_or_else(|| Error::parse(1, 1, "missing truncation line"))?;
        let base = basepoint.ok_or_else(|| Error::parse(1, 1, "missing basepoint line"))?;
        b.finish(base)
    }
}

fn face_token(f: &Simplex) -> String {
    let mut s = String::new();
    for j in (0..32).rev() {
        if f.degen >> j & 1 == 1 {
            write!(s, "s{j}").unwrap();
        }
    }
    if f.degen == 0 {
        f.id.to_string()
    } else {
        format!("{s}({})", f.id)
    }
}

/// Splits on whitespace, keeping 1-based columns; `:` is always its own token.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() || ch == ':' {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
            if ch == ':' {
                out.push((i + 1, ":"));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_face(tok: &str, level: usize) -> std::result::Result<Simplex, String> {
    let Some(rest) = tok.strip_prefix('s') else {
        let id = tok.parse().map_err(|_| format!("bad face '{tok}'"))?;
        return Ok(Simplex::nondegenerate(id));
    };
    let open = rest.find('(').ok_or_else(|| format!("bad face '{tok}'"))?;
    let inner = rest[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| format!("missing ')' in '{tok}'"))?;
    let id: usize = inner.parse().map_err(|_| format!("bad id in '{tok}'"))?;
    let mut mask = 0u32;
    let mut prev: Option<usize> = None;
    for part in rest[..open].split('s') {
        let j: usize = part.parse().map_err(|_| format!("bad degeneracy word in '{tok}'"))?;
        if prev.is_some_and(|p| j >= p) {
            return Err(format!("degeneracy word in '{tok}' is not strictly decreasing"));
        }
        if j >= level {
            return Err(format!("s{j} is out of range at level {level}"));
        }
        mask |= 1 << j;
        prev = Some(j);
    }
    Ok(Simplex { degen: mask, id })
}
