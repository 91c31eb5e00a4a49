//! 3-CNF formulas, DIMACS input and a brute-force satisfiability oracle.

mod reduction;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use reduction::{
    assignment_from_path, path_from_assignment, reduce, verify_reduction, AuxLabel, Label,
    ReductionInstance, ReductionReport, Side,
};

/// Largest variable count accepted by [`brute_force_sat`].
pub const MAX_BRUTE_FORCE_VARS: usize = 24;

/// A literal is `+k` for `x_k` and `-k` for `¬x_k`, with `k ≥ 1`.
pub type Literal = i32;

/// A formula with exactly three pairwise distinct literals per clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf3 {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Cnf3 {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for (i, &lit) in clause.iter().enumerate() {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidCnf(format!(
                        "clause {}: literal {lit} outside 1..={num_vars}",
                        j + 1
                    )));
                }
                if clause[..i].contains(&lit) {
                    return Err(Error::InvalidCnf(format!(
                        "clause {}: literal {lit} repeated",
                        j + 1
                    )));
                }
            }
        }
        Ok(Cnf3 { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// `assignment[k - 1]` is the value of `x_k`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|&lit| literal_value(lit, assignment)))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            out.push_str(&format!("{a} {b} {c} 0\n"));
        }
        out
    }
}

pub(crate) fn literal_value(lit: Literal, assignment: &[bool]) -> bool {
    assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)
}

impl fmt::Display for Cnf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "⊤");
        }
        let lit = |l: Literal| {
            if l > 0 {
                format!("x{l}")
            } else {
                format!("¬x{}", -l)
            }
        };
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("({} ∨ {} ∨ {})", lit(c[0]), lit(c[1]), lit(c[2])))
            .collect();
        write!(f, "{}", parts.join(" ∧ "))
    }
}

/// Parses DIMACS CNF. Comment lines start with `c`; clauses may span lines
/// and each ends with `0`. Clauses must have width three.
pub fn parse_dimacs(text: &str) -> Result<Cnf3> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match fields.as_slice() {
                ["cnf", v, c] if header.is_none() => {
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("line {}: bad header number {s}", lineno + 1)))
                    };
                    header = Some((parse(v)?, parse(c)?));
                }
                _ => return Err(Error::Parse(format!("line {}: bad header {line:?}", lineno + 1))),
            }
            continue;
        }
        if header.is_none() {
            return Err(Error::Parse(format!("line {}: clause before header", lineno + 1)));
        }
        for token in line.split_whitespace() {
            let lit: Literal = token
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad literal {token:?}", lineno + 1)))?;
            if lit != 0 {
                current.push(lit);
                continue;
            }
            let clause: [Literal; 3] = current.as_slice().try_into().map_err(|_| {
                Error::InvalidCnf(format!(
                    "clause {} has {} literals, expected 3",
                    clauses.len() + 1,
                    current.len()
                ))
            })?;
            clauses.push(clause);
            current.clear();
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| Error::Parse("missing p cnf header".into()))?;
    if !current.is_empty() {
        return Err(Error::Parse("last clause is not terminated by 0".into()));
    }
    if clauses.len() != num_clauses {
        return Err(Error::Parse(format!(
            "header announces {num_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    Cnf3::new(num_vars, clauses)
}

/// The first satisfying assignment in lexicographic order (`x_1` most
/// significant, false before true), or `None` if unsatisfiable.
pub fn brute_force_sat(cnf: &Cnf3) -> Result<Option<Vec<bool>>> {
    let n = cnf.num_vars;
    if n > MAX_BRUTE_FORCE_VARS {
        return Err(Error::TooLarge {
            what: "variables",
            size: n,
            limit: MAX_BRUTE_FORCE_VARS,
        });
    }
    let mut assignment = vec![false; n];
    for mask in 0u32..1 << n {
        for (k, value) in assignment.iter_mut().enumerate() {
            *value = mask >> (n - 1 - k) & 1 == 1;
        }
        if cnf.is_satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All eight sign patterns over three variables.
    pub(crate) fn all_eight() -> Cnf3 {
        let clauses = (0..8)
            .map(|m| {
                let s = |bit: i32, v: i32| if m >> bit & 1 == 1 { -v } else { v };
                [s(0, 1), s(1, 2), s(2, 3)]
            })
            .collect();
        Cnf3::new(3, clauses).unwrap()
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(matches!(Cnf3::new(3, vec![[1, 1, 2]]), Err(Error::InvalidCnf(_))));
        assert!(Cnf3::new(3, vec![[1, 0, 2]]).is_err());
        assert!(Cnf3::new(2, vec![[1, 2, 3]]).is_err());
        // complementary literals are allowed
        assert!(Cnf3::new(2, vec![[1, -1, 2]]).is_ok());
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c example\np cnf 3 2\n-1 2 3 0\n1 -2\n 3 0\n";
        let cnf = parse_dimacs(text).unwrap();
        assert_eq!(cnf.clauses(), &[[-1, 2, 3], [1, -2, 3]]);
        assert_eq!(parse_dimacs(&cnf.to_dimacs()).unwrap(), cnf);
    }

    #[test]
    fn dimacs_rejects_bad_input() {
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 0\n"), Err(Error::InvalidCnf(_))));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 2 0\n"), Err(Error::InvalidCnf(_))));
        assert!(matches!(parse_dimacs("1 2 3 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 3\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_sat(&all_eight()).unwrap(), None);
        let one = Cnf3::new(3, vec![[-1, 2, 3]]).unwrap();
        assert_eq!(brute_force_sat(&one).unwrap(), Some(vec![false, false, false]));
        let pos = Cnf3::new(3, vec![[1, 2, 3]]).unwrap();
        assert_eq!(brute_force_sat(&pos).unwrap(), Some(vec![false, false, true]));
        let empty = Cnf3::new(0, vec![]).unwrap();
        assert_eq!(brute_force_sat(&empty).unwrap(), Some(vec![]));
        let big = Cnf3::new(25, vec![]).unwrap();
        assert!(matches!(brute_force_sat(&big), Err(Error::TooLarge { .. })));
    }
}
