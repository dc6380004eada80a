use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_traits::One;

use super::point::ParamPoint;
use super::rational::{pow_i, Rational};
use crate::error::{Error, Result};

/// Parameter names. `R`, `S` and `T` are the square roots of `A`, `C` and `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    A,
    B,
    C,
    E,
    Y,
    Q,
    R,
    S,
    T,
}

impl Symbol {
    pub const ALL: [Symbol; 9] = [
        Symbol::A,
        Symbol::B,
        Symbol::C,
        Symbol::E,
        Symbol::Y,
        Symbol::Q,
        Symbol::R,
        Symbol::S,
        Symbol::T,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::E => "e",
            Symbol::Y => "y",
            Symbol::Q => "q",
            Symbol::R => "r",
            Symbol::S => "s",
            Symbol::T => "t",
        }
    }

    /// For a root symbol, the symbol it is the square root of.
    pub fn square(self) -> Option<Symbol> {
        match self {
            Symbol::R => Some(Symbol::A),
            Symbol::S => Some(Symbol::C),
            Symbol::T => Some(Symbol::Q),
            _ => None,
        }
    }

    /// For a squared symbol, its root symbol.
    pub fn root(self) -> Option<Symbol> {
        match self {
            Symbol::A => Some(Symbol::R),
            Symbol::C => Some(Symbol::S),
            Symbol::Q => Some(Symbol::T),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.name() == s.trim())
            .ok_or_else(|| Error::Invalid(format!("unknown symbol `{s}`")))
    }
}

/// `±Π sym^exp` with integer exponents. Zero exponents are never stored, so
/// structural equality is monomial equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    negative: bool,
    exponents: BTreeMap<Symbol, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            negative: false,
            exponents: BTreeMap::new(),
        }
    }

    pub fn sym(s: Symbol) -> Self {
        Self::power(s, 1)
    }

    pub fn power(s: Symbol, e: i64) -> Self {
        let mut m = Self::one();
        if e != 0 {
            m.exponents.insert(s, e);
        }
        m
    }

    pub fn q_pow(e: i64) -> Self {
        Self::power(Symbol::Q, e)
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn exponent(&self, s: Symbol) -> i64 {
        self.exponents.get(&s).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Symbol, i64)> + '_ {
        self.exponents.iter().map(|(&s, &e)| (s, e))
    }

    pub fn pow(&self, k: i64) -> Self {
        Monomial {
            negative: self.negative && k % 2 != 0,
            exponents: self
                .exponents
                .iter()
                .filter(|_| k != 0)
                .map(|(&s, &e)| (s, e * k))
                .collect(),
        }
    }

    pub fn recip(&self) -> Self {
        self.pow(-1)
    }

    /// Splits off the power of `q`: `self = rest · q^e`.
    pub fn split_q(&self) -> (Monomial, i64) {
        let mut rest = self.clone();
        let e = rest.exponents.remove(&Symbol::Q).unwrap_or(0);
        (rest, e)
    }

    /// True when the monomial is `+q^e` for some `e` (including `+1`).
    pub fn is_pure_q_power(&self) -> bool {
        !self.negative && self.exponents.keys().all(|&s| s == Symbol::Q)
    }

    pub fn eval(&self, p: &ParamPoint) -> Result<Rational> {
        let mut acc = Rational::one();
        for (&s, &e) in &self.exponents {
            acc *= pow_i(p.get(s)?, e)?;
        }
        Ok(if self.negative { -acc } else { acc })
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl From<Symbol> for Monomial {
    fn from(s: Symbol) -> Self {
        Monomial::sym(s)
    }
}

impl Mul<&Monomial> for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&s, &e) in &rhs.exponents {
            let slot = exponents.entry(s).or_insert(0);
            *slot += e;
            if *slot == 0 {
                exponents.remove(&s);
            }
        }
        Monomial {
            negative: self.negative != rhs.negative,
            exponents,
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl Mul<Symbol> for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Symbol) -> Monomial {
        &self * &Monomial::sym(rhs)
    }
}

impl Neg for Monomial {
    type Output = Monomial;

    fn neg(mut self) -> Monomial {
        self.negative = !self.negative;
        self
    }
}

impl Neg for &Monomial {
    type Output = Monomial;

    fn neg(self) -> Monomial {
        -self.clone()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        for (i, (s, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match e {
                1 => write!(f, "{s}")?,
                _ => write!(f, "{s}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Builds a monomial from `(symbol, exponent)` pairs.
pub fn mono(parts: &[(Symbol, i64)]) -> Monomial {
    parts.iter().fold(Monomial::one(), |acc, &(s, e)| {
        &acc * &Monomial::power(s, e)
    })
}
