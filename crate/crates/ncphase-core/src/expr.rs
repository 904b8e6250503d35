//! Operator polynomials in the 18 canonical generators, kept in canonical
//! (normal-ordered) form.
//!
//! Canonical form: every word is sorted non-decreasingly by the generator
//! order of [`crate::generator`], like terms are merged, zero terms dropped.
//! Reordering an adjacent out-of-order pair `g·h` (with `g > h`) rewrites it
//! as `h·g + [g, h]`; the commutator is `±iℏ` for conjugate pairs and zero
//! otherwise, so the rewriting terminates and the result is unique. Two
//! expressions are equal iff their canonical forms are structurally equal.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::generator::GeneratorId;
use crate::scalar::{render_term, ParamScalar, Symbol};

/// Hard cap on the word length. Every identity the crate verifies stays
/// below degree 8; hitting the cap means a runaway rewriting bug, so it is
/// a panic rather than a recoverable error.
pub const WORD_DEGREE_CAP: usize = 16;

type Word = Vec<GeneratorId>;

/// An element of the enveloping algebra: a finite sum of normal-ordered
/// words with [`ParamScalar`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OperatorExpr {
    terms: BTreeMap<Word, ParamScalar>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        OperatorExpr {
            terms: BTreeMap::new(),
        }
    }

    /// The identity operator (empty word, coefficient 1).
    pub fn identity() -> Self {
        Self::scalar(ParamScalar::one())
    }

    /// A scalar multiple of the identity.
    pub fn scalar(c: ParamScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        OperatorExpr { terms }
    }

    /// A single generator with coefficient 1.
    pub fn generator(g: GeneratorId) -> Self {
        Self::monomial(ParamScalar::one(), vec![g])
    }

    /// `c · g_1 g_2 ⋯ g_k`; the word is normal-ordered on construction.
    pub fn monomial(c: ParamScalar, word: Vec<GeneratorId>) -> Self {
        let mut terms = BTreeMap::new();
        normal_order_into(&mut terms, c, word);
        OperatorExpr { terms }
    }

    /// Build from arbitrary (coefficient, word) pairs, normal-ordering each.
    pub fn from_raw_terms<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (ParamScalar, Vec<GeneratorId>)>,
    {
        let mut terms = BTreeMap::new();
        for (c, w) in raw {
            normal_order_into(&mut terms, c, w);
        }
        OperatorExpr { terms }
    }

    /// Re-run normal ordering. Expressions are canonical by construction,
    /// so this is the identity map; it exists so idempotence is testable.
    pub fn canonicalize(&self) -> Self {
        Self::from_raw_terms(self.terms.iter().map(|(w, c)| (c.clone(), w.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest word length present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut terms = BTreeMap::new();
        for (w, cw) in &self.terms {
            let scaled = c * cw;
            if !scaled.is_zero() {
                terms.insert(w.clone(), scaled);
            }
        }
        OperatorExpr { terms }
    }

    /// `ab − ba` in canonical form.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`; identically zero over the
    /// canonical generators.
    pub fn jacobi_defect(a: &Self, b: &Self, c: &Self) -> Self {
        let t1 = Self::commutator(a, &Self::commutator(b, c));
        let t2 = Self::commutator(b, &Self::commutator(c, a));
        let t3 = Self::commutator(c, &Self::commutator(a, b));
        &(&t1 + &t2) + &t3
    }

    /// Substitute a rational value for a formal symbol in every coefficient.
    pub fn substitute(&self, sym: Symbol, value: &BigRational) -> Self {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let s = c.substitute(sym, value);
            if !s.is_zero() {
                terms.insert(w.clone(), s);
            }
        }
        OperatorExpr { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[GeneratorId], &ParamScalar)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }
}

/// Exact equality of canonical forms.
pub fn verify_relation(lhs: &OperatorExpr, rhs: &OperatorExpr) -> bool {
    lhs == rhs
}

fn add_term(terms: &mut BTreeMap<Word, ParamScalar>, word: Word, c: ParamScalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&word) {
        Some(existing) => {
            let sum = &*existing + &c;
            if sum.is_zero() {
                terms.remove(&word);
            } else {
                *existing = sum;
            }
        }
        None => {
            terms.insert(word, c);
        }
    }
}

fn first_inversion(word: &[GeneratorId]) -> Option<usize> {
    word.windows(2).position(|w| w[0] > w[1])
}

/// Rewrite `c·word` into normal-ordered terms, accumulating into `terms`.
///
/// Worklist rewriting: an out-of-order adjacent pair `g·h` becomes the
/// swapped word plus (for conjugate pairs) the word with the pair deleted,
/// scaled by `±iℏ`. Each step lowers the inversion count or the length, so
/// the loop terminates.
fn normal_order_into(terms: &mut BTreeMap<Word, ParamScalar>, c: ParamScalar, word: Word) {
    assert!(
        word.len() <= WORD_DEGREE_CAP,
        "operator word exceeds the degree cap of {WORD_DEGREE_CAP}"
    );
    let mut stack: Vec<(ParamScalar, Word)> = vec![(c, word)];
    while let Some((c, w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        match first_inversion(&w) {
            None => add_term(terms, w, c),
            Some(i) => {
                let g = w[i];
                let h = w[i + 1];
                let sign = g.ccr_sign(h);
                if sign != 0 {
                    let mut reduced = w.clone();
                    reduced.drain(i..=i + 1);
                    let ccr = ParamScalar::i_hbar() * ParamScalar::from_int(sign);
                    stack.push((&c * &ccr, reduced));
                }
                let mut swapped = w;
                swapped.swap(i, i + 1);
                stack.push((c, swapped));
            }
        }
    }
}

impl Add for &OperatorExpr {
    type Output = OperatorExpr;

    fn add(self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        OperatorExpr { terms }
    }
}

impl Sub for &OperatorExpr {
    type Output = OperatorExpr;

    fn sub(self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_term(&mut terms, w.clone(), -c);
        }
        OperatorExpr { terms }
    }
}

impl Mul for &OperatorExpr {
    type Output = OperatorExpr;

    fn mul(self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let mut word = Vec::with_capacity(wa.len() + wb.len());
                word.extend_from_slice(wa);
                word.extend_from_slice(wb);
                normal_order_into(&mut terms, ca * cb, word);
            }
        }
        OperatorExpr { terms }
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;

    fn neg(self) -> OperatorExpr {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        OperatorExpr { terms }
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        &self + &rhs
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        &self - &rhs
    }
}

impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        &self * &rhs
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        -&self
    }
}

impl fmt::Display for OperatorExpr {
    /// Linear syntax: terms joined by ` + `, each
    /// `coefficient[*symbols][*generators]`, e.g. `(1/2)*i*l0*a3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            for (powers, c) in coeff.terms() {
                parts.push(render_term(c, powers));
            }
            let coeff_str = if parts.len() == 1 {
                parts.pop().unwrap()
            } else {
                use alloc::format;
                format!("[{}]", parts.join(" + "))
            };
            write!(f, "{coeff_str}")?;
            for g in word {
                write!(f, "*{g}")?;
            }
        }
        Ok(())
    }
}
