//! Finitely presented groups, free reduction and abelianization.
//!
//! Presentation syntax accepted by [`FpGroup::parse`]:
//!
//! ```text
//! < x, y | x^2 y^-3, x y x^-1 y^-1 >
//! ```
//!
//! The angle brackets are optional. A word is a sequence of generator names,
//! each optionally followed by `^k` for an integer `k`; `1` is the empty word.
//! Names are identifiers; juxtaposed names are split greedily against the
//! declared generators, so `xxy^-1` works when generators are single letters.

use std::fmt;

use crate::abgroup::{AbElt, AbGroup};
use crate::error::{Error, Result};
use crate::intlin::{Int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// From signed 1-based indices: `k > 0` is generator `k - 1`, `k < 0` its inverse.
    pub fn from_signed(letters: &[i64]) -> Self {
        Word(
            letters
                .iter()
                .map(|&k| {
                    assert!(k != 0, "0 is not a letter");
                    Letter {
                        gen: (k.unsigned_abs() - 1) as usize,
                        inverse: k < 0,
                    }
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Exponent sum of every generator.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut v = vec![0; generators];
        for l in &self.0 {
            v[l.gen] += l.sign();
        }
        v
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &Word, generators: usize) -> Result<Word> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if l.gen >= generators {
            return Err(Error::GeneratorOutOfRange {
                index: l.gen,
                count: generators,
            });
        }
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Ok(Word(out))
}

fn cyclic_reduce(mut w: Vec<Letter>) -> Vec<Letter> {
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpGroup {
    names: Vec<String>,
    relators: Vec<Word>,
}

/// `G^ab` together with `η`, which sends generator `i` to basis coset `i`.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub group: AbGroup,
    /// Exponent-sum matrix: generators × relators.
    pub exponents: IntMatrix,
}

impl Abelianization {
    /// `η(w)`: the class of the exponent-sum vector.
    pub fn eta(&self, w: &Word) -> Result<AbElt> {
        let n = self.group.generators();
        if let Some(l) = w.0.iter().find(|l| l.gen >= n) {
            return Err(Error::GeneratorOutOfRange {
                index: l.gen,
                count: n,
            });
        }
        self.group.elt(w.exponent_sums(n).into_iter().map(Int::from).collect())
    }
}

impl FpGroup {
    /// Generators are named `x0, x1, ...`.
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self> {
        let names = (0..generators).map(|i| format!("x{i}")).collect();
        Self::with_names(names, relators)
    }

    pub fn with_names(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = names.len();
        let relators = relators
            .iter()
            .map(|r| free_reduce(r, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(FpGroup { names, relators })
    }

    pub fn free(generators: usize) -> Self {
        Self::new(generators, Vec::new()).expect("no relators")
    }

    pub fn generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn exponent_matrix(&self) -> IntMatrix {
        let n = self.generators();
        let cols: Vec<Vec<Int>> = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(n).into_iter().map(Int::from).collect())
            .collect();
        IntMatrix::from_columns(n, &cols)
    }

    /// Cokernel of the relator exponent-sum matrix.
    pub fn abelianization(&self) -> Abelianization {
        let exponents = self.exponent_matrix();
        let group = AbGroup::new(self.generators(), exponents.clone()).expect("shape");
        Abelianization { group, exponents }
    }

    /// Tries to show the group is trivial by repeatedly deleting a generator that
    /// some relator, after removing already-deleted generators and cyclic
    /// reduction, equals on its own. Returns the deletion order on success.
    /// Sound but incomplete: `None` does not mean the group is nontrivial.
    pub fn prove_trivial(&self) -> Option<Vec<usize>> {
        let n = self.generators();
        let mut dead = vec![false; n];
        let mut order = Vec::new();
        loop {
            let mut progress = false;
            for r in &self.relators {
                let kept: Vec<Letter> = r.0.iter().copied().filter(|l| !dead[l.gen]).collect();
                let reduced = cyclic_reduce(free_reduce(&Word(kept), n).ok()?.0);
                if reduced.len() == 1 && !dead[reduced[0].gen] {
                    dead[reduced[0].gen] = true;
                    order.push(reduced[0].gen);
                    progress = true;
                }
            }
            if dead.iter().all(|&d| d) {
                return Some(order);
            }
            if !progress {
                return None;
            }
        }
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.0.len() {
            let l = w.0[i];
            let mut k = 1;
            while i + k < w.0.len() && w.0[i + k] == l {
                k += 1;
            }
            let exp = if l.inverse { -(k as i64) } else { k as i64 };
            let name = &self.names[l.gen];
            parts.push(if exp == 1 {
                name.clone()
            } else {
                format!("{name}^{exp}")
            });
            i += k;
        }
        parts.join(" ")
    }

    pub fn parse(src: &str) -> Result<Self> {
        Parser::new(src).presentation()
    }
}

impl fmt::Display for FpGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.names.join(", "), rels.join(", "))
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
    }

    fn location(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.location();
        Error::parse(l, c, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
        {
            if self.pos == start && !self.chars[self.pos].is_alphabetic() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a generator name"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn presentation(&mut self) -> Result<FpGroup> {
        let bracketed = self.eat('<');
        let mut names = Vec::new();
        if self.peek() != Some('|') {
            loop {
                let name = self.ident()?;
                if names.contains(&name) {
                    return Err(self.err(format!("duplicate generator {name}")));
                }
                names.push(name);
                if !self.eat(',') {
                    break;
                }
            }
        }
        let mut relators = Vec::new();
        if self.eat('|') {
            loop {
                let p = self.peek();
                if p.is_none() || p == Some('>') {
                    break;
                }
                relators.push(self.word(&names)?);
                if !self.eat(',') {
                    break;
                }
            }
        }
        if bracketed && !self.eat('>') {
            return Err(self.err("expected '>'"));
        }
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        FpGroup::with_names(names, relators)
    }

    fn word(&mut self, names: &[String]) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            match self.peek() {
                Some('1') => {
                    self.pos += 1;
                }
                Some('*') => {
                    self.pos += 1;
                }
                Some(c) if c.is_alphabetic() => {
                    let gen = self.generator(names)?;
                    let exp = if self.eat('^') { self.integer()? } else { 1 };
                    let l = Letter {
                        gen,
                        inverse: exp < 0,
                    };
                    for _ in 0..exp.unsigned_abs() {
                        letters.push(l);
                    }
                }
                _ => break,
            }
        }
        Ok(Word(letters))
    }

    /// Longest declared generator name at the cursor.
    fn generator(&mut self, names: &[String]) -> Result<usize> {
        self.skip_ws();
        let rest: String = self.chars[self.pos..]
            .iter()
            .take_while(|c| c.is_alphanumeric() || **c == '_')
            .collect();
        let best = names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.chars().count();
                Ok(i)
            }
            None => Err(self.err(format!("unknown generator in '{rest}'"))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.chars.len() && (self.chars[self.pos] == '-' || self.chars[self.pos] == '+')
        {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected an integer exponent"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let w = Word::from_signed(&[1, -1]);
        assert!(free_reduce(&w, 1).unwrap().is_empty());
        let w = Word::from_signed(&[1, 2, -2, 1]);
        assert_eq!(free_reduce(&w, 2).unwrap(), Word::from_signed(&[1, 1]));
        let r = Word::from_signed(&[1, 2, -1]);
        assert_eq!(free_reduce(&r, 2).unwrap(), r);
        assert!(matches!(
            free_reduce(&Word::from_signed(&[3]), 2),
            Err(Error::GeneratorOutOfRange { index: 2, count: 2 })
        ));
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(FpGroup::free(2).abelianization().group.to_string(), "Z^2");
        let trefoil = FpGroup::parse("<x, y | x^2 y^-3>").unwrap();
        assert_eq!(trefoil.abelianization().group.to_string(), "Z");
        let q8 = FpGroup::parse("<i, j | i^4, i^2 j^-2, j^-1 i j i>").unwrap();
        assert_eq!(q8.abelianization().group.to_string(), "Z/2 + Z/2");
    }

    #[test]
    fn parse_juxtaposed_letters() {
        let g = FpGroup::parse("a, b | aab^-1").unwrap();
        assert_eq!(g.relators()[0], Word::from_signed(&[1, 1, -2]));
        assert_eq!(g.to_string(), "< a, b | a^2 b^-1 >");
        let round = FpGroup::parse(&g.to_string()).unwrap();
        assert_eq!(round, g);
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = FpGroup::parse("<x | x z>").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 8, .. }), "{e:?}");
        let e = FpGroup::parse("<x, y\n| x^>").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
    }

    #[test]
    fn eta_is_additive() {
        let g = FpGroup::parse("<x, y | x^3>").unwrap();
        let ab = g.abelianization();
        let u = Word::from_signed(&[1, 2, 1]);
        let v = Word::from_signed(&[-2, 1]);
        let lhs = ab.eta(&u.concat(&v)).unwrap();
        let rhs = &ab.eta(&u).unwrap() + &ab.eta(&v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn triviality_certificates() {
        let g = FpGroup::parse("<a, b | a, a b a^-1>").unwrap();
        assert_eq!(g.prove_trivial(), Some(vec![0, 1]));
        let z = FpGroup::parse("<a | >").unwrap();
        assert_eq!(z.prove_trivial(), None);
        let z2 = FpGroup::parse("<a | a^2>").unwrap();
        assert_eq!(z2.prove_trivial(), None);
    }
}
