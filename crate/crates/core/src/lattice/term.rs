use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A disjunction of conjunctions of generator names.
///
/// `TOP` is the disjunction holding the empty conjunction, `BOTTOM` the
/// empty disjunction. Operations return terms in antichain normal form:
/// no conjunction is a superset of another.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeTerm {
    clauses: BTreeSet<BTreeSet<String>>,
}

impl LatticeTerm {
    pub fn top() -> Self {
        LatticeTerm {
            clauses: std::iter::once(BTreeSet::new()).collect(),
        }
    }

    pub fn bottom() -> Self {
        LatticeTerm {
            clauses: BTreeSet::new(),
        }
    }

    pub fn gen(name: &str) -> Self {
        LatticeTerm::conj([name])
    }

    /// A single conjunction.
    pub fn conj<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        LatticeTerm {
            clauses: std::iter::once(names.into_iter().map(str::to_string).collect()).collect(),
        }
    }

    /// Raw constructor; the result is not normalized.
    pub fn from_clauses(clauses: impl IntoIterator<Item = BTreeSet<String>>) -> Self {
        LatticeTerm {
            clauses: clauses.into_iter().collect(),
        }
    }

    pub fn clauses(&self) -> &BTreeSet<BTreeSet<String>> {
        &self.clauses
    }

    pub fn is_top(&self) -> bool {
        self.clauses.iter().any(BTreeSet::is_empty)
    }

    pub fn is_bottom(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn generators(&self) -> BTreeSet<&str> {
        self.clauses
            .iter()
            .flat_map(|c| c.iter().map(String::as_str))
            .collect()
    }

    /// Drop every conjunction that contains another one (absorption).
    pub fn normalize(&self) -> LatticeTerm {
        let clauses = self
            .clauses
            .iter()
            .filter(|c| {
                !self
                    .clauses
                    .iter()
                    .any(|d| d != *c && d.is_subset(c))
            })
            .cloned()
            .collect();
        LatticeTerm { clauses }
    }

    pub fn or(&self, other: &LatticeTerm) -> LatticeTerm {
        LatticeTerm {
            clauses: self.clauses.union(&other.clauses).cloned().collect(),
        }
        .normalize()
    }

    pub fn and(&self, other: &LatticeTerm) -> LatticeTerm {
        let mut clauses = BTreeSet::new();
        for a in &self.clauses {
            for b in &other.clauses {
                clauses.insert(a.union(b).cloned().collect());
            }
        }
        LatticeTerm { clauses }.normalize()
    }

    pub fn or_all<'a>(terms: impl IntoIterator<Item = &'a LatticeTerm>) -> LatticeTerm {
        terms
            .into_iter()
            .fold(LatticeTerm::bottom(), |acc, t| acc.or(t))
    }

    pub fn and_all<'a>(terms: impl IntoIterator<Item = &'a LatticeTerm>) -> LatticeTerm {
        terms.into_iter().fold(LatticeTerm::top(), |acc, t| acc.and(t))
    }

    /// Exchange meets and joins (and TOP with BOTTOM), returned in DNF.
    pub fn flip(&self) -> LatticeTerm {
        // ∨ᵢ ∧ C_i  ↦  ∧ᵢ ∨ C_i, distributed back out
        self.clauses.iter().fold(LatticeTerm::top(), |acc, clause| {
            let disj = LatticeTerm {
                clauses: clause
                    .iter()
                    .map(|g| std::iter::once(g.clone()).collect())
                    .collect(),
            };
            acc.and(&disj)
        })
    }

    /// Rename generators (used to move terms between presentations).
    pub fn rename(&self, f: impl Fn(&str) -> String) -> LatticeTerm {
        LatticeTerm {
            clauses: self
                .clauses
                .iter()
                .map(|c| c.iter().map(|g| f(g)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for LatticeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            return write!(f, "BOTTOM");
        }
        if self.is_top() {
            return write!(f, "TOP");
        }
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| c.iter().cloned().collect::<Vec<_>>().join("&"))
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

/// Textual form `a&b | c`, with `TOP` and `BOTTOM`.
impl FromStr for LatticeTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty lattice term".into()));
        }
        let mut out = LatticeTerm::bottom();
        for disjunct in s.split('|') {
            let mut clause = LatticeTerm::top();
            for lit in disjunct.split('&') {
                let lit = lit.trim();
                let t = match lit {
                    "TOP" => LatticeTerm::top(),
                    "BOTTOM" => LatticeTerm::bottom(),
                    "" => return Err(Error::Parse(format!("empty literal in '{}'", s))),
                    name => LatticeTerm::gen(name),
                };
                clause = clause.and(&t);
            }
            out = out.or(&clause);
        }
        Ok(out)
    }
}
