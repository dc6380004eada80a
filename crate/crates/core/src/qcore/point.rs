use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::monomial::Symbol;
use super::rational::{exact_sqrt, parse_rational, to_exact_string, Rational};
use crate::error::{Error, Result};

/// An exact assignment of parameter values.
///
/// Root symbols are tied to their squares: setting `r` also sets `a = r²`,
/// `s` sets `c = s²` and `t` sets `q = t²`. Every q-point has `0 < q < 1`.
/// A classical point (used by the `_pF_q` checks) carries no `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoint {
    values: BTreeMap<Symbol, Rational>,
}

impl ParamPoint {
    pub fn new(q: Rational) -> Result<Self> {
        ParamPoint::classical().set(Symbol::Q, q)
    }

    /// Point with `q = t²`.
    pub fn from_q_root(t: Rational) -> Result<Self> {
        ParamPoint::classical().set(Symbol::T, t)
    }

    /// Point without `q`, for the classical checks.
    pub fn classical() -> Self {
        ParamPoint {
            values: BTreeMap::new(),
        }
    }

    pub fn set(mut self, sym: Symbol, value: Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::InvalidPoint(format!("{sym} must be nonzero")));
        }
        let (root, square) = match (sym.root(), sym.square()) {
            (_, Some(sq)) => (Some((sym, value.clone())), (sq, &value * &value)),
            (Some(rt), None) => {
                if let Some(r) = self.values.get(&rt) {
                    if (r * r) != value {
                        return Err(Error::InvalidPoint(format!(
                            "{sym} = {value} conflicts with {rt} = {r}"
                        )));
                    }
                }
                (None, (sym, value))
            }
            (None, None) => (None, (sym, value)),
        };
        if square.0 == Symbol::Q && !(square.1.is_positive() && square.1 < Rational::one()) {
            return Err(Error::InvalidPoint(format!(
                "q = {} is not in (0, 1)",
                square.1
            )));
        }
        if let Some((rs, rv)) = root {
            self.values.insert(rs, rv);
        }
        self.values.insert(square.0, square.1);
        Ok(self)
    }

    pub fn get(&self, sym: Symbol) -> Result<&Rational> {
        self.values.get(&sym).ok_or(Error::Unassigned(sym))
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.values.contains_key(&sym)
    }

    pub fn q(&self) -> Result<&Rational> {
        self.get(Symbol::Q)
    }

    pub fn is_classical(&self) -> bool {
        !self.contains(Symbol::Q)
    }

    /// Fills in `r`, `s`, `t` from `a`, `c`, `q` wherever the square root is rational.
    pub fn complete_roots(mut self) -> Self {
        for sq in [Symbol::A, Symbol::C, Symbol::Q] {
            let rt = sq.root().expect("squared symbol");
            if self.values.contains_key(&rt) {
                continue;
            }
            if let Some(root) = self.values.get(&sq).and_then(exact_sqrt) {
                self.values.insert(rt, root);
            }
        }
        self
    }

    /// Requires the given root symbols to be present.
    pub fn require(&self, symbols: &[Symbol]) -> Result<()> {
        for &s in symbols {
            if !self.contains(s) {
                let why = match s.square() {
                    Some(sq) => format!("{sq} must be the square of a rational ({s} is missing)"),
                    None => format!("{s} is missing"),
                };
                return Err(Error::InvalidPoint(why));
            }
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, &Rational)> {
        self.values.iter().map(|(&s, v)| (s, v))
    }

    /// Parses `a=1/4,c=1/9,q=1/4`, then completes roots.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in text.split(',').filter(|s| !s.trim().is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("expected name=value, got `{item}`")))?;
            pairs.push((k.trim().parse::<Symbol>()?, parse_rational(v)?));
        }
        // roots first so that explicit squares are checked against them
        pairs.sort_by_key(|(s, _)| s.square().is_none());
        let mut point = ParamPoint::classical();
        for (s, v) in pairs {
            point = point.set(s, v)?;
        }
        Ok(point.complete_roots())
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.values.len()))?;
        for (s, v) in &self.values {
            map.serialize_entry(s.name(), &to_exact_string(v))?;
        }
        map.end()
    }
}
