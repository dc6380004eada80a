//! Executable identity checks, one per formula, plus sampling and suites.

mod checks;
mod sampling;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::rational::to_exact_string;
use crate::qcore::{ParamPoint, Rational};

pub use checks::{
    check_bailey_2_08, check_bailey_2_11, check_clausen, check_gasper, check_jackson,
    check_srivastava, check_thm1, check_thm2, check_thm2_variant, check_thm3, check_thm4,
};
pub use sampling::{sample_case, sample_point, Sampler, MAX_ATTEMPTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Thm1,
    Thm2,
    Thm2Variant,
    Thm3,
    Thm4,
    Srivastava,
    Jackson,
    Gasper,
    Clausen,
    #[serde(rename = "bailey_2_11")]
    Bailey211,
    #[serde(rename = "bailey_2_08")]
    Bailey208,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Thm2Variant,
        IdentityId::Thm3,
        IdentityId::Thm4,
        IdentityId::Srivastava,
        IdentityId::Jackson,
        IdentityId::Gasper,
        IdentityId::Clausen,
        IdentityId::Bailey211,
        IdentityId::Bailey208,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Thm2Variant => "thm2_variant",
            IdentityId::Thm3 => "thm3",
            IdentityId::Thm4 => "thm4",
            IdentityId::Srivastava => "srivastava",
            IdentityId::Jackson => "jackson",
            IdentityId::Gasper => "gasper",
            IdentityId::Clausen => "clausen",
            IdentityId::Bailey211 => "bailey_2_11",
            IdentityId::Bailey208 => "bailey_2_08",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "terminating q-Watson 4phi3 summation",
            IdentityId::Thm2 => "terminating q-Whipple 4phi3 summation (a = q^-n)",
            IdentityId::Thm2Variant => "q-Whipple with c = q^-2n and generic a (informational)",
            IdentityId::Thm3 => "2phi1[a,-a;a^2] x 2phi1[b,-b;b^2](-z) = 4phi3 in q^2, z^2",
            IdentityId::Thm4 => {
                "2phi1[a,q/a;-q] x 2phi1[b,q/b;-q](-z), single sum and parity split"
            }
            IdentityId::Srivastava => "2phi1[a,b;-ab](z) x 2phi1[a,b;-ab](-z) = 4phi3 in q^2, z^2",
            IdentityId::Jackson => "q-Clausen product in base q^2 with arguments z and qz",
            IdentityId::Gasper => "terminating q-Clausen: square of a 4phi3 equals a 5phi4",
            IdentityId::Clausen => "Clausen: (2F1)^2 = 3F2",
            IdentityId::Bailey211 => "1F1[a;2a](z) x 1F1[b;2b](-z) = 2F3(z^2/4)",
            IdentityId::Bailey208 => "2F0[a,1-a](z) x 2F0[b,1-b](-z) = 4F1 - z 4F1, formal",
        }
    }

    /// Takes a termination index `n`.
    pub fn is_terminating(self) -> bool {
        matches!(
            self,
            IdentityId::Thm1 | IdentityId::Thm2 | IdentityId::Thm2Variant | IdentityId::Gasper
        )
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            IdentityId::Clausen | IdentityId::Bailey211 | IdentityId::Bailey208
        )
    }

    /// Whether a failure of this identity fails a run.
    pub fn is_gating(self) -> bool {
        self != IdentityId::Thm2Variant
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown identity `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub point: ParamPoint,
    pub n: Option<usize>,
    pub order: usize,
}

impl IdentityCase {
    pub fn new(id: IdentityId, point: ParamPoint, n: Option<usize>, order: usize) -> Result<Self> {
        if id.is_terminating() != n.is_some() {
            return Err(Error::Invalid(format!(
                "{id} {} a termination index",
                if id.is_terminating() {
                    "requires"
                } else {
                    "does not take"
                }
            )));
        }
        Ok(IdentityCase {
            id,
            point,
            n,
            order,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub index: usize,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
}

fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_exact_string(x))
}

/// Outcome of one check. `Fail` always carries a discrepancy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub point: ParamPoint,
    pub n: Option<usize>,
    #[serde(rename = "order")]
    pub checked_orders: usize,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub detail: Option<String>,
    #[serde(skip)]
    pole: bool,
}

impl VerificationReport {
    fn new(identity: IdentityId, point: &ParamPoint, n: Option<usize>, order: usize) -> Self {
        VerificationReport {
            identity,
            point: point.clone(),
            n,
            checked_orders: order,
            status: Status::Pass,
            first_discrepancy: None,
            detail: None,
            pole: false,
        }
    }

    fn fail(mut self, index: usize, lhs: Rational, rhs: Rational, detail: Option<String>) -> Self {
        self.status = Status::Fail;
        self.first_discrepancy = Some(Discrepancy { index, lhs, rhs });
        self.detail = detail;
        self
    }

    fn error(mut self, err: &Error) -> Self {
        self.status = Status::Error;
        self.detail = Some(err.to_string());
        self.pole = err.is_pole();
        self
    }

    /// The check hit a vanishing denominator at this point.
    pub fn hit_pole(&self) -> bool {
        self.pole
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        write!(f, "{status:5} {:12} [{}]", self.identity.name(), self.point)?;
        match self.n {
            Some(n) => write!(f, " n={n}")?,
            None => write!(f, " order={}", self.checked_orders)?,
        }
        if let Some(d) = &self.first_discrepancy {
            write!(
                f,
                " first discrepancy at {}: lhs={} rhs={}",
                d.index, d.lhs, d.rhs
            )?;
        }
        if let Some(detail) = &self.detail {
            write!(f, " ({detail})")?;
        }
        Ok(())
    }
}

pub fn check_case(case: &IdentityCase) -> VerificationReport {
    let p = &case.point;
    let n = case.n.unwrap_or(0);
    let order = case.order;
    match case.id {
        IdentityId::Thm1 => check_thm1(n, p),
        IdentityId::Thm2 => check_thm2(n, p),
        IdentityId::Thm2Variant => check_thm2_variant(n, p),
        IdentityId::Thm3 => check_thm3(p, order),
        IdentityId::Thm4 => check_thm4(p, order),
        IdentityId::Srivastava => check_srivastava(p, order),
        IdentityId::Jackson => check_jackson(p, order),
        IdentityId::Gasper => check_gasper(n, p),
        IdentityId::Clausen => checks::classical_with_point(IdentityId::Clausen, p, order),
        IdentityId::Bailey211 => checks::classical_with_point(IdentityId::Bailey211, p, order),
        IdentityId::Bailey208 => checks::classical_with_point(IdentityId::Bailey208, p, order),
    }
}

/// Runs every case (in parallel); reports come back in case order.
pub fn run_suite(cases: &[IdentityCase]) -> Vec<VerificationReport> {
    cases.par_iter().map(check_case).collect()
}
