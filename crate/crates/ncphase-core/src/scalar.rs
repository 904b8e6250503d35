//! Coefficient ring of the operator algebra: exact Gaussian rationals times
//! Laurent monomials in the formal symbols `hbar`, `l0`, `p0`, `kappa`.
//!
//! All arithmetic is exact; zero has the unique representation "empty sum",
//! so equality of scalars (and of operator expressions built on them) is a
//! straight structural comparison.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Formal symbols the coefficients may carry.
///
/// `Hbar` is the reduced Planck constant, `L0` and `P0` the coupling
/// constants of coordinate and momentum noncommutativity, and `Kappa` the
/// oscillator stiffness `m_osc ω²` kept as a single placeholder (it only
/// ever appears in commutator checks, never in numerics).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    Hbar,
    L0,
    P0,
    Kappa,
}

impl Symbol {
    pub const COUNT: usize = 4;
    pub const ALL: [Symbol; Self::COUNT] = [Symbol::Hbar, Symbol::L0, Symbol::P0, Symbol::Kappa];

    fn index(self) -> usize {
        match self {
            Symbol::Hbar => 0,
            Symbol::L0 => 1,
            Symbol::P0 => 2,
            Symbol::Kappa => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Hbar => "hbar",
            Symbol::L0 => "l0",
            Symbol::P0 => "p0",
            Symbol::Kappa => "kappa",
        }
    }
}

/// Laurent exponent vector over [`Symbol::ALL`]. Exponents may be negative
/// (expressions like `l0/(2 hbar)` occur throughout).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SymPowers {
    exps: [i16; Symbol::COUNT],
}

impl SymPowers {
    pub const IDENTITY: SymPowers = SymPowers {
        exps: [0; Symbol::COUNT],
    };

    pub fn of(pairs: &[(Symbol, i16)]) -> Self {
        let mut out = Self::IDENTITY;
        for &(sym, e) in pairs {
            out.exps[sym.index()] += e;
        }
        out
    }

    pub fn exponent(&self, sym: Symbol) -> i16 {
        self.exps[sym.index()]
    }

    fn combine(&self, other: &Self) -> Self {
        let mut exps = [0i16; Symbol::COUNT];
        for ((out, &a), &b) in exps.iter_mut().zip(&self.exps).zip(&other.exps) {
            *out = a.checked_add(b).expect("symbol exponent overflow");
        }
        SymPowers { exps }
    }

    fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// Exact complex rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Real rational `num/den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// Purely imaginary rational `(num/den)·i`.
    pub fn ratio_i(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        GaussRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        GaussRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn neg(&self) -> Self {
        GaussRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "({})", self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                write!(f, "i")
            } else {
                write!(f, "({})*i", self.im)
            }
        } else if self.im.is_negative() {
            write!(f, "({}{}*i)", self.re, self.im)
        } else {
            write!(f, "({}+{}*i)", self.re, self.im)
        }
    }
}

/// A finite sum of Gaussian-rational coefficients times symbol monomials.
///
/// Kept canonical at all times: no zero coefficients, terms stored in a
/// sorted map so iteration (and printing) is deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamScalar {
    terms: BTreeMap<SymPowers, GaussRational>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussRational::one())
    }

    /// The imaginary unit as a scalar.
    pub fn i() -> Self {
        Self::from_gauss(GaussRational::i())
    }

    /// `i·hbar`, the right-hand side of every canonical commutator.
    pub fn i_hbar() -> Self {
        Self::term(GaussRational::i(), SymPowers::of(&[(Symbol::Hbar, 1)]))
    }

    pub fn from_gauss(c: GaussRational) -> Self {
        Self::term(c, SymPowers::IDENTITY)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_gauss(GaussRational::ratio(num, den))
    }

    pub fn symbol(sym: Symbol) -> Self {
        Self::term(GaussRational::one(), SymPowers::of(&[(sym, 1)]))
    }

    /// Single term `c · Π sym^e`.
    pub fn term(c: GaussRational, powers: SymPowers) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(powers, c);
        }
        ParamScalar { terms }
    }

    /// Convenience builder: `(num/den) · Π sym^e`, or the purely imaginary
    /// variant when `imaginary` is set.
    pub fn monomial(num: i64, den: i64, imaginary: bool, powers: &[(Symbol, i16)]) -> Self {
        let c = if imaginary {
            GaussRational::ratio_i(num, den)
        } else {
            GaussRational::ratio(num, den)
        };
        Self::term(c, SymPowers::of(powers))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&SymPowers::IDENTITY)
                .map(|c| c.re.is_one() && c.im.is_zero())
                .unwrap_or(false)
    }

    fn insert_term(
        terms: &mut BTreeMap<SymPowers, GaussRational>,
        powers: SymPowers,
        c: GaussRational,
    ) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&powers) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    terms.remove(&powers);
                } else {
                    *existing = sum;
                }
            }
            None => {
                terms.insert(powers, c);
            }
        }
    }

    /// Substitute a rational value for a formal symbol. Panics if the value
    /// is zero while the symbol occurs with a negative exponent (that never
    /// happens for the substitutions the crate performs: only `l0`, `p0`
    /// and `kappa` are substituted and they only occur with exponents ≥ 0).
    pub fn substitute(&self, sym: Symbol, value: &BigRational) -> Self {
        let mut terms = BTreeMap::new();
        for (powers, c) in &self.terms {
            let e = powers.exponent(sym);
            let mut new_powers = *powers;
            new_powers.exps[sym.index()] = 0;
            let factor = if e == 0 {
                BigRational::one()
            } else if value.is_zero() {
                assert!(
                    e > 0,
                    "substituting zero for a symbol with negative exponent"
                );
                BigRational::zero()
            } else {
                rational_pow(value, e)
            };
            let scaled = GaussRational {
                re: &c.re * &factor,
                im: &c.im * &factor,
            };
            Self::insert_term(&mut terms, new_powers, scaled);
        }
        ParamScalar { terms }
    }

    /// Numerical value of a symbol-free scalar; `None` if any symbol or an
    /// imaginary part remains.
    pub fn to_f64(&self) -> Option<f64> {
        if self.terms.is_empty() {
            return Some(0.0);
        }
        if self.terms.len() != 1 {
            return None;
        }
        let (powers, c) = self.terms.iter().next().unwrap();
        if !powers.is_identity() || !c.im.is_zero() {
            return None;
        }
        c.re.to_f64()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymPowers, &GaussRational)> {
        self.terms.iter()
    }
}

fn rational_pow(value: &BigRational, exp: i16) -> BigRational {
    value.pow(exp as i32)
}

impl Add for &ParamScalar {
    type Output = ParamScalar;

    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        let mut terms = self.terms.clone();
        for (powers, c) in &rhs.terms {
            ParamScalar::insert_term(&mut terms, *powers, c.clone());
        }
        ParamScalar { terms }
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;

    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        let mut terms = self.terms.clone();
        for (powers, c) in &rhs.terms {
            ParamScalar::insert_term(&mut terms, *powers, c.neg());
        }
        ParamScalar { terms }
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;

    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        let mut terms = BTreeMap::new();
        for (pa, ca) in &self.terms {
            for (pb, cb) in &rhs.terms {
                ParamScalar::insert_term(&mut terms, pa.combine(pb), ca.mul(cb));
            }
        }
        ParamScalar { terms }
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;

    fn neg(self) -> ParamScalar {
        let terms = self.terms.iter().map(|(p, c)| (*p, c.neg())).collect();
        ParamScalar { terms }
    }
}

impl Add for ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: ParamScalar) -> ParamScalar {
        &self + &rhs
    }
}

impl Sub for ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: ParamScalar) -> ParamScalar {
        &self - &rhs
    }
}

impl Mul for ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: ParamScalar) -> ParamScalar {
        &self * &rhs
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl fmt::Display for ParamScalar {
    /// Linear syntax, e.g. `(1/2)*i*l0*hbar^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self.terms.iter().map(|(p, c)| render_term(c, p)).collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

pub(crate) fn render_term(c: &GaussRational, powers: &SymPowers) -> String {
    use alloc::format;
    let mut parts: Vec<String> = alloc::vec![format!("{c}")];
    for sym in Symbol::ALL {
        let e = powers.exponent(sym);
        if e == 1 {
            parts.push(String::from(sym.name()));
        } else if e != 0 {
            parts.push(format!("{}^{}", sym.name(), e));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_empty_sum() {
        let a = ParamScalar::symbol(Symbol::L0);
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff, ParamScalar::zero());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = ParamScalar::i();
        assert_eq!(&i * &i, ParamScalar::from_int(-1));
    }

    #[test]
    fn laurent_powers_cancel() {
        let hbar = ParamScalar::symbol(Symbol::Hbar);
        let inv = ParamScalar::monomial(1, 1, false, &[(Symbol::Hbar, -1)]);
        assert_eq!(&hbar * &inv, ParamScalar::one());
    }

    #[test]
    fn substitute_zero_kills_positive_powers() {
        // l0 + l0^2 - 3 -> -3 under l0 -> 0
        let e = ParamScalar::symbol(Symbol::L0)
            + ParamScalar::monomial(1, 1, false, &[(Symbol::L0, 2)])
            + ParamScalar::from_int(-3);
        let z = num_rational::BigRational::zero();
        assert_eq!(e.substitute(Symbol::L0, &z), ParamScalar::from_int(-3));
    }

    #[test]
    fn display_linear_syntax() {
        use alloc::string::ToString;
        let s = ParamScalar::monomial(1, 2, true, &[(Symbol::L0, 1)]);
        assert_eq!(s.to_string(), "(1/2)*i*l0");
        let t = ParamScalar::monomial(-1, 4, false, &[(Symbol::Hbar, -2), (Symbol::P0, 1)]);
        assert_eq!(t.to_string(), "(-1/4)*hbar^-2*p0");
    }

    #[test]
    fn to_f64_only_for_pure_numbers() {
        assert_eq!(ParamScalar::ratio(3, 4).to_f64(), Some(0.75));
        assert_eq!(ParamScalar::symbol(Symbol::P0).to_f64(), None);
        assert_eq!(ParamScalar::i().to_f64(), None);
        assert_eq!(ParamScalar::zero().to_f64(), Some(0.0));
    }
}
