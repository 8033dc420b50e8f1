//! A small DSL for group identities and the power-commutation property.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! law    := word "=" word
//! word   := factor+ | "1"
//! factor := atom ["^" integer]
//! atom   := name | "[" word "," word "]" | "(" word ")"
//! name   := letter alnum*
//! ```
//!
//! Juxtaposition is product; `[u,v]` is the commutator u⁻¹v⁻¹uv.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use crate::arith::coprime;
use crate::error::GroupError;
use crate::group::{Caps, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Var(String),
    Commutator(Word, Word),
    Group(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: i64,
}

/// A product of factors; the empty word is the identity and prints as `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub factors: Vec<Factor>,
}

/// An identity `lhs = rhs` with the variables listed in order of first
/// appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Law {
    pub lhs: Word,
    pub rhs: Word,
    pub variables: Vec<String>,
}

/// Outcome of a property-𝒫 check on one group for one exponent pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub group: String,
    pub order: usize,
    pub m: u64,
    pub n: u64,
    pub satisfies_p: bool,
    pub is_abelian: bool,
    /// On failure: the first pair (a, b) violating the law for the stored
    /// exponent.
    pub witness: Option<PowerWitness>,
    /// Set when the pair is not coprime and was forced through anyway; the
    /// structure theorems say nothing about such pairs.
    pub theorems_inapplicable: bool,
    /// Filled by std-side drivers; the core has no clock.
    pub wall_micros: Option<u64>,
}

/// A concrete violation of `a^i b^i = b^i a^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerWitness {
    pub a: usize,
    pub b: usize,
    pub exponent: u64,
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for factor in &self.factors {
            match &factor.atom {
                Atom::Var(name) => write!(f, "{name}")?,
                Atom::Commutator(u, v) => write!(f, "[{u},{v}]")?,
                Atom::Group(w) => write!(f, "({w})")?,
            }
            if factor.exp != 1 {
                write!(f, "^{}", factor.exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, message: &str) -> GroupError {
        GroupError::SyntaxError { offset: self.pos, message: message.to_string() }
    }

    fn word(&mut self) -> Result<Word, GroupError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Word { factors: vec![] });
        }
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'[' || c == b'(' => {
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        if factors.is_empty() {
            return Err(self.err("expected a word"));
        }
        Ok(Word { factors })
    }

    fn factor(&mut self) -> Result<Factor, GroupError> {
        let atom = match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let u = self.word()?;
                if self.peek() != Some(b',') {
                    return Err(self.err("expected `,` in commutator"));
                }
                self.pos += 1;
                let v = self.word()?;
                if self.peek() != Some(b']') {
                    return Err(self.err("expected `]`"));
                }
                self.pos += 1;
                Atom::Commutator(u, v)
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Atom::Group(w)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                Atom::Var(
                    core::str::from_utf8(&self.bytes[start..self.pos])
                        .expect("ascii slice")
                        .to_string(),
                )
            }
            _ => return Err(self.err("expected an atom")),
        };
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.integer()?
        } else {
            1
        };
        Ok(Factor { atom, exp })
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        text.parse().map_err(|_| self.err("expected an integer"))
    }
}

/// Parses a law; `parse_law(&law.to_string())` reproduces an equal AST.
pub fn parse_law(text: &str) -> Result<Law, GroupError> {
    if text.trim().is_empty() {
        return Err(GroupError::EmptyInput);
    }
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let lhs = p.word()?;
    if p.peek() != Some(b'=') {
        return Err(p.err("expected `=`"));
    }
    p.pos += 1;
    let rhs = p.word()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    let mut variables = Vec::new();
    collect_vars(&lhs, &mut variables);
    collect_vars(&rhs, &mut variables);
    Ok(Law { lhs, rhs, variables })
}

fn collect_vars(word: &Word, out: &mut Vec<String>) {
    for factor in &word.factors {
        match &factor.atom {
            Atom::Var(name) => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Atom::Commutator(u, v) => {
                collect_vars(u, out);
                collect_vars(v, out);
            }
            Atom::Group(w) => collect_vars(w, out),
        }
    }
}

/// Evaluates a word left to right under an assignment of variables to
/// element ids. `[u,v]` expands to u⁻¹v⁻¹uv.
pub fn eval_word(
    g: &FiniteGroup,
    word: &Word,
    assignment: &BTreeMap<String, usize>,
) -> Result<usize, GroupError> {
    let mut acc = 0usize;
    for factor in &word.factors {
        let base = match &factor.atom {
            Atom::Var(name) => *assignment
                .get(name)
                .ok_or_else(|| GroupError::UnboundVariable { name: name.clone() })?,
            Atom::Commutator(u, v) => {
                let a = eval_word(g, u, assignment)?;
                let b = eval_word(g, v, assignment)?;
                g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b))
            }
            Atom::Group(w) => eval_word(g, w, assignment)?,
        };
        acc = g.mul(acc, g.power(base, factor.exp));
    }
    Ok(acc)
}

/// Universal check of a law over all assignments, in lexicographic order.
///
/// Returns the first violating assignment as the witness. Fails up front
/// with `BudgetExceeded` when |G|^#vars would exceed `caps.eval_budget`.
pub fn holds(
    g: &FiniteGroup,
    law: &Law,
    caps: &Caps,
) -> Result<(bool, Option<BTreeMap<String, usize>>), GroupError> {
    let k = law.variables.len() as u32;
    let required = (g.order() as u64).checked_pow(k).unwrap_or(u64::MAX);
    if required > caps.eval_budget {
        return Err(GroupError::BudgetExceeded { required, budget: caps.eval_budget });
    }
    let mut ids = vec![0usize; law.variables.len()];
    loop {
        let assignment: BTreeMap<String, usize> = law
            .variables
            .iter()
            .cloned()
            .zip(ids.iter().copied())
            .collect();
        if eval_word(g, &law.lhs, &assignment)? != eval_word(g, &law.rhs, &assignment)? {
            return Ok((false, Some(assignment)));
        }
        // Odometer step over |G|^k.
        let mut carry = true;
        for slot in ids.iter_mut().rev() {
            *slot += 1;
            if *slot < g.order() {
                carry = false;
                break;
            }
            *slot = 0;
        }
        if carry || ids.is_empty() {
            return Ok((true, None));
        }
    }
}

/// Checks that m-th powers commute: equivalent to
/// `holds(G, "[x^m,y^m]=1")` but via the image set Gᵐ = {aᵐ}, so the
/// pairwise scan is O(|Gᵐ|²) instead of O(|G|²).
pub fn power_commute(g: &FiniteGroup, m: u64) -> (bool, Option<PowerWitness>) {
    let mut image = vec![false; g.order()];
    for a in 0..g.order() {
        image[g.power(a, m as i64)] = true;
    }
    let image: Vec<usize> = (0..g.order()).filter(|&x| image[x]).collect();
    let commutes = image
        .iter()
        .all(|&x| image.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    if commutes {
        return (true, None);
    }
    // Only on failure: recover the lexicographically first witness pair.
    for a in 0..g.order() {
        let am = g.power(a, m as i64);
        for b in 0..g.order() {
            let bm = g.power(b, m as i64);
            if g.mul(am, bm) != g.mul(bm, am) {
                return (false, Some(PowerWitness { a, b, exponent: m }));
            }
        }
    }
    unreachable!("pairwise failure must have a witness");
}

/// Property 𝒫: m-th powers commute and n-th powers commute, for coprime
/// m, n. A non-coprime pair is rejected unless `allow_non_coprime` is set,
/// in which case the report is marked `theorems_inapplicable`.
pub fn satisfies_p(
    g: &FiniteGroup,
    m: u64,
    n: u64,
    allow_non_coprime: bool,
) -> Result<PropertyReport, GroupError> {
    assert!(m >= 1 && n >= 1);
    if !coprime(m, n) && !allow_non_coprime {
        return Err(GroupError::NotCoprime { m, n });
    }
    let (m_ok, m_witness) = power_commute(g, m);
    let witness = if m_ok { power_commute(g, n).1 } else { m_witness };
    Ok(PropertyReport {
        group: g.name().to_string(),
        order: g.order(),
        m,
        n,
        satisfies_p: witness.is_none(),
        is_abelian: g.is_abelian().0,
        witness,
        theorems_inapplicable: !coprime(m, n),
        wall_micros: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use alloc::format;

    fn s3() -> FiniteGroup {
        catalog::make("S3", &Caps::default()).unwrap()
    }

    #[test]
    fn parses_square_commutator_law() {
        let law = parse_law("[x^2,y^2]=1").unwrap();
        assert_eq!(law.variables, vec!["x", "y"]);
        assert_eq!(format!("{law}"), "[x^2,y^2]=1");
    }

    #[test]
    fn parses_trivial_law() {
        let law = parse_law("x=x").unwrap();
        assert!(holds(&s3(), &law, &Caps::default()).unwrap().0);
    }

    #[test]
    fn unbalanced_bracket_reports_offset() {
        match parse_law("[x,y") {
            Err(GroupError::SyntaxError { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert_eq!(parse_law("   "), Err(GroupError::EmptyInput));
    }

    #[test]
    fn eval_zero_power_is_identity() {
        let g = s3();
        let law = parse_law("x^0=1").unwrap();
        assert!(holds(&g, &law, &Caps::default()).unwrap().0);
    }

    #[test]
    fn commutators_vanish_in_abelian_groups() {
        let c12 = FiniteGroup::cyclic(12);
        let law = parse_law("[x,y]=1").unwrap();
        assert!(holds(&c12, &law, &Caps::default()).unwrap().0);
    }

    #[test]
    fn commutator_of_transpositions_is_a_three_cycle() {
        let g = s3();
        let word = parse_law("[x,y]=1").unwrap().lhs;
        let mut transpositions = (1..6).filter(|&a| g.element_order(a) == 2);
        let x = transpositions.next().unwrap();
        let y = transpositions.next().unwrap();
        let assignment: BTreeMap<String, usize> =
            [("x".to_string(), x), ("y".to_string(), y)].into();
        let value = eval_word(&g, &word, &assignment).unwrap();
        assert_eq!(g.element_order(value), 3);
    }

    #[test]
    fn squares_commute_in_s3_cubes_do_not() {
        let g = s3();
        let caps = Caps::default();
        assert!(power_commute(&g, 2).0);
        let (ok, witness) = power_commute(&g, 3);
        assert!(!ok);
        let w = witness.unwrap();
        let a3 = g.power(w.a, 3);
        let b3 = g.power(w.b, 3);
        assert_ne!(g.mul(a3, b3), g.mul(b3, a3));

        let squares = parse_law("[x^2,y^2]=1").unwrap();
        assert!(holds(&g, &squares, &caps).unwrap().0);
        let cubes = parse_law("[x^3,y^3]=1").unwrap();
        let (ok, witness) = holds(&g, &cubes, &caps).unwrap();
        assert!(!ok);
        let w = witness.unwrap();
        assert_ne!(eval_word(&g, &cubes.lhs, &w).unwrap(), 0);
    }

    #[test]
    fn first_powers_commuting_is_abelianness() {
        for spec in ["C6", "S3", "Q8", "C2xC2"] {
            let g = catalog::make(spec, &Caps::default()).unwrap();
            assert_eq!(power_commute(&g, 1).0, g.is_abelian().0, "{spec}");
        }
    }

    #[test]
    fn property_p_reports() {
        let g = s3();
        let report = satisfies_p(&g, 2, 3, false).unwrap();
        assert!(!report.satisfies_p);
        assert!(!report.is_abelian);
        assert_eq!(report.witness.unwrap().exponent, 3);

        let c12 = FiniteGroup::cyclic(12);
        let report = satisfies_p(&c12, 2, 3, false).unwrap();
        assert!(report.satisfies_p && report.is_abelian);

        assert_eq!(satisfies_p(&g, 2, 4, false), Err(GroupError::NotCoprime { m: 2, n: 4 }));
        let forced = satisfies_p(&g, 2, 4, true).unwrap();
        assert!(forced.theorems_inapplicable);
    }

    #[test]
    fn budget_is_enforced() {
        let caps = Caps { eval_budget: 10, ..Caps::default() };
        let law = parse_law("[x,y]=1").unwrap();
        assert!(matches!(
            holds(&s3(), &law, &caps),
            Err(GroupError::BudgetExceeded { required: 36, .. })
        ));
    }
}
