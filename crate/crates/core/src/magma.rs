//! Finite magmas, weak morphisms and an exhaustive Eckmann–Hilton check.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// A binary operation on `{0, .., n-1}` given by its table, with an optional unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMagma {
    n: usize,
    table: Vec<usize>,
    unit: Option<usize>,
}

impl FiniteMagma {
    pub fn new(n: usize, table: Vec<usize>, unit: Option<usize>) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::InvariantViolation(format!("table entry {bad} out of range")));
        }
        if let Some(e) = unit {
            if e >= n {
                return Err(Error::InvariantViolation(format!("unit {e} out of range")));
            }
            if let Some(x) = (0..n).find(|&x| table[e * n + x] != x || table[x * n + e] != x) {
                return Err(Error::InvariantViolation(format!(
                    "{e} is not a unit: fails at x = {x}"
                )));
            }
        }
        Ok(FiniteMagma { n, table, unit })
    }

    /// `(Z/n, +)` with unit 0.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::new(n, table, Some(0)).expect("valid")
    }

    pub fn from_fn(n: usize, unit: Option<usize>, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(n, (0..n * n).map(|k| op(k / n, k % n)).collect(), unit)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c))))
        })
    }
}

/// Whether `f` respects the operations: `f(x·y) = f(x)·f(y)` for every pair.
///
/// `f` is given by its values on `0..m.size()`.
pub fn is_weak_morphism(f: &[usize], m: &FiniteMagma, n: &FiniteMagma) -> Result<bool> {
    if f.len() != m.size() {
        return Err(Error::CarrierMismatch {
            expected: m.size(),
            found: f.len(),
        });
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= n.size()) {
        return Err(Error::InvalidMap(format!("value {bad} outside the target carrier")));
    }
    Ok((0..m.size()).all(|x| (0..m.size()).all(|y| f[m.op(x, y)] == n.op(f[x], f[y]))))
}

/// Two unital operations with a shared unit satisfying the interchange law
/// `(a⋆b)·(c⋆d) = (a·c)⋆(b·d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDoubleMagma {
    dot: FiniteMagma,
    star: FiniteMagma,
}

impl FiniteDoubleMagma {
    pub fn new(n: usize, dot: Vec<usize>, star: Vec<usize>, unit: usize) -> Result<Self> {
        let dot = FiniteMagma::new(n, dot, Some(unit))?;
        let star = FiniteMagma::new(n, star, Some(unit))?;
        if let Some((a, b, c, d)) = interchange_witness(&dot, &star) {
            return Err(Error::InvariantViolation(format!(
                "interchange fails at (a, b, c, d) = ({a}, {b}, {c}, {d})"
            )));
        }
        Ok(FiniteDoubleMagma { dot, star })
    }

    pub fn dot(&self) -> &FiniteMagma {
        &self.dot
    }

    pub fn star(&self) -> &FiniteMagma {
        &self.star
    }
}

fn interchange_witness(dot: &FiniteMagma, star: &FiniteMagma) -> Option<(usize, usize, usize, usize)> {
    let n = dot.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if dot.op(star.op(a, b), star.op(c, d)) != star.op(dot.op(a, c), dot.op(b, d)) {
                        return Some((a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EckmannHiltonReport {
    pub operations_equal: bool,
    pub commutative: bool,
    pub associative: bool,
}

impl EckmannHiltonReport {
    pub fn all(&self) -> bool {
        self.operations_equal && self.commutative && self.associative
    }
}

pub fn eckmann_hilton(m: &FiniteDoubleMagma) -> EckmannHiltonReport {
    EckmannHiltonReport {
        operations_equal: m.dot == m.star,
        commutative: m.dot.is_commutative(),
        associative: m.dot.is_associative(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExhaustiveReport {
    pub carrier: usize,
    /// Number of (unit, dot, star) triples satisfying unitality and interchange.
    pub instances: usize,
    pub all_pass: bool,
    /// A (dot, star, unit) triple where some flag failed.
    pub counterexample: Option<Counterexample>,
}

/// `(dot, star, unit)`.
pub type Counterexample = (Vec<usize>, Vec<usize>, usize);

const UNSET: usize = usize::MAX;

/// Enumerates every pair of tables on `n` elements that are unital with a shared
/// unit and satisfy interchange, and runs [`eckmann_hilton`] on each.
///
/// Backtracking assigns the non-unit cells of both tables and abandons a branch
/// as soon as some fully determined instance of the interchange law fails, so
/// every surviving leaf is a genuine double magma.
pub fn exhaustive_eckmann_hilton(n: usize) -> ExhaustiveReport {
    let per_unit: Vec<(usize, Option<Counterexample>)> = (0..n)
        .into_par_iter()
        .map(|unit| {
            let mut search = Search::new(n, unit);
            search.run(0);
            (search.instances, search.counterexample)
        })
        .collect();
    let instances = per_unit.iter().map(|p| p.0).sum();
    let counterexample = per_unit.into_iter().find_map(|p| p.1);
    ExhaustiveReport {
        carrier: n,
        instances,
        all_pass: counterexample.is_none(),
        counterexample,
    }
}

struct Search {
    n: usize,
    unit: usize,
    dot: Vec<usize>,
    star: Vec<usize>,
    cells: Vec<(usize, usize)>,
    instances: usize,
    counterexample: Option<(Vec<usize>, Vec<usize>, usize)>,
}

impl Search {
    fn new(n: usize, unit: usize) -> Self {
        let mut dot = vec![UNSET; n * n];
        for x in 0..n {
            dot[unit * n + x] = x;
            dot[x * n + unit] = x;
        }
        let star = dot.clone();
        let mut cells = Vec::new();
        for a in (0..n).filter(|&a| a != unit) {
            for b in (0..n).filter(|&b| b != unit) {
                cells.push((a, b));
            }
        }
        Search {
            n,
            unit,
            dot,
            star,
            cells,
            instances: 0,
            counterexample: None,
        }
    }

    /// `false` if some interchange instance with every operand known fails.
    fn consistent(&self) -> bool {
        let n = self.n;
        let get = |t: &Vec<usize>, a: usize, b: usize| {
            if a == UNSET || b == UNSET {
                UNSET
            } else {
                t[a * n + b]
            }
        };
        for a in 0..n {
            for b in 0..n {
                let ab = self.star[a * n + b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let ac = self.dot[a * n + c];
                    if ac == UNSET {
                        continue;
                    }
                    for d in 0..n {
                        let lhs = get(&self.dot, ab, self.star[c * n + d]);
                        if lhs == UNSET {
                            continue;
                        }
                        let rhs = get(&self.star, ac, self.dot[b * n + d]);
                        if rhs != UNSET && lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Step `k` assigns dot (even `k`) or star (odd `k`) at cell `k / 2`.
    fn run(&mut self, k: usize) {
        if self.counterexample.is_some() {
            return;
        }
        if k == 2 * self.cells.len() {
            self.instances += 1;
            let m = FiniteDoubleMagma {
                dot: FiniteMagma {
                    n: self.n,
                    table: self.dot.clone(),
                    unit: Some(self.unit),
                },
                star: FiniteMagma {
                    n: self.n,
                    table: self.star.clone(),
                    unit: Some(self.unit),
                },
            };
            debug_assert!(interchange_witness(&m.dot, &m.star).is_none());
            if !eckmann_hilton(&m).all() {
                self.counterexample = Some((self.dot.clone(), self.star.clone(), self.unit));
            }
            return;
        }
        let (a, b) = self.cells[k / 2];
        let idx = a * self.n + b;
        for v in 0..self.n {
            if k.is_multiple_of(2) {
                self.dot[idx] = v;
            } else {
                self.star[idx] = v;
            }
            if self.consistent() {
                self.run(k + 1);
            }
        }
        if k.is_multiple_of(2) {
            self.dot[idx] = UNSET;
        } else {
            self.star[idx] = UNSET;
        }
    }
}
