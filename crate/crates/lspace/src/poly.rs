//! Symmetric Laurent polynomials in one variable `T`, with integer
//! coefficients and a stable text format.
//!
//! The text format writes terms in decreasing exponent order, e.g.
//! `T^3 - T^2 + 1 - T^-2 + T^-3`. The parser also accepts explicit
//! coefficients (`2*T^3`, `-3T^-1`), lone constants, and arbitrary
//! whitespace.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A Laurent polynomial `sum_e c_e T^e` with integer coefficients.
///
/// Internally a sparse exponent-to-coefficient map with no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Laurent {
    coeffs: BTreeMap<i32, i64>,
}

impl Laurent {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Laurent::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Laurent::from_terms([(0, 1)])
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert(0i64);
            *entry += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Laurent { coeffs }
    }

    /// Coefficient at exponent `e` (zero when absent).
    pub fn coeff(&self, e: i32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// True when there are no terms.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// `p(1)`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// True when `c_e = c_{-e}` for all exponents.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == c)
    }

    /// Number of nonzero terms.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.coeffs.iter().rev() {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "T")?,
                (1, m) => write!(f, "{m}*T")?,
                (e, 1) => write!(f, "T^{e}")?,
                (e, m) => write!(f, "{m}*T^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Laurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let bytes = compact.as_bytes();
        let mut pos = 0usize;
        while pos < bytes.len() {
            let mut sign = 1i64;
            // Leading sign(s) of this term.
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            if pos >= bytes.len() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            // Optional integer magnitude.
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mag: Option<i64> = if pos > digits_start {
                Some(
                    compact[digits_start..pos]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {s:?}")))?,
                )
            } else {
                None
            };
            let starred = pos < bytes.len() && bytes[pos] == b'*';
            if starred {
                pos += 1;
            }
            // Optional variable part (mandatory after '*').
            if starred && (pos >= bytes.len() || (bytes[pos] != b'T' && bytes[pos] != b't')) {
                return Err(Error::Parse(format!("expected T after '*' in {s:?}")));
            }
            if pos < bytes.len() && (bytes[pos] == b'T' || bytes[pos] == b't') {
                pos += 1;
                let exp: i32 = if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let minus = pos < bytes.len() && bytes[pos] == b'-';
                    if minus {
                        pos += 1;
                    }
                    let e_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == e_start {
                        return Err(Error::Parse(format!("missing exponent in {s:?}")));
                    }
                    let e: i32 = compact[e_start..pos]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                    if minus {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                };
                terms.push((exp, sign * mag.unwrap_or(1)));
            } else {
                match mag {
                    Some(m) => terms.push((0, sign * m)),
                    None => {
                        return Err(Error::Parse(format!(
                            "expected term at byte {pos} of {compact:?}"
                        )))
                    }
                }
            }
        }
        Ok(Laurent::from_terms(terms))
    }
}
