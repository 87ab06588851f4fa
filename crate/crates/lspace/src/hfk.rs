//! Staircase Alexander polynomials and the knot Floer homology they
//! determine.
//!
//! A knot admitting a positive L-space surgery has Alexander polynomial of
//! the rigid shape
//!
//! ```text
//! (-1)^k + sum_{j=1..k} (-1)^{k-j} (T^{n_j} + T^{-n_j}),   0 < n_1 < ... < n_k,
//! ```
//!
//! and that polynomial already determines the whole knot Floer homology: one
//! free generator per exponent, sitting in a Maslov grading computed by a
//! descending recursion. This module validates the shape, runs the
//! recursion, and derives τ and the genus bound (both equal the top
//! exponent).

use serde::Serialize;

use crate::poly::Laurent;
use crate::{Error, Result};

/// A validated staircase Alexander polynomial, stored by its positive
/// exponent sequence `n_1 < ... < n_k` (empty for the unknot).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LSpaceAlex {
    exponents: Vec<u32>,
}

impl LSpaceAlex {
    /// The strictly increasing positive exponents.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The number of positive exponents.
    pub fn k(&self) -> usize {
        self.exponents.len()
    }

    /// Rebuilds the polynomial this sequence encodes.
    pub fn to_laurent(&self) -> Laurent {
        let k = self.k();
        let mut terms = vec![(0i32, if k % 2 == 0 { 1i64 } else { -1 })];
        for (j, &n) in self.exponents.iter().enumerate() {
            let sign = if (k - (j + 1)) % 2 == 0 { 1i64 } else { -1 };
            terms.push((n as i32, sign));
            terms.push((-(n as i32), sign));
        }
        Laurent::from_terms(terms)
    }
}

/// Why a polynomial failed staircase validation; ordered by which condition
/// is checked first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// The zero polynomial.
    Zero,
    /// `c_e != c_{-e}` for some exponent.
    NotSymmetric,
    /// Some nonzero coefficient has absolute value greater than one.
    CoefficientTooBig,
    /// The constant term is absent.
    MissingConstantTerm,
    /// Adjacent nonzero coefficients share a sign.
    SignsDoNotAlternate,
    /// The top coefficient is `-1` (so the alternation is misaligned).
    TopCoefficientNotPlusOne,
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RejectReason::Zero => "zero polynomial",
            RejectReason::NotSymmetric => "not symmetric under T -> 1/T",
            RejectReason::CoefficientTooBig => "coefficient magnitude exceeds 1",
            RejectReason::MissingConstantTerm => "no constant term",
            RejectReason::SignsDoNotAlternate => "nonzero coefficients do not alternate in sign",
            RejectReason::TopCoefficientNotPlusOne => "leading coefficient is not +1",
        };
        f.write_str(s)
    }
}

/// Validates the staircase shape and extracts the exponent sequence.
///
/// ```
/// use lspace::hfk::validate_lspace_alex;
/// let p = "1 - T - T^-1 + T^2 + T^-2".parse().unwrap();
/// assert_eq!(validate_lspace_alex(&p).unwrap().exponents(), &[1, 2]);
/// ```
pub fn validate_lspace_alex(f: &Laurent) -> std::result::Result<LSpaceAlex, RejectReason> {
    if f.is_zero() {
        return Err(RejectReason::Zero);
    }
    if !f.is_symmetric() {
        return Err(RejectReason::NotSymmetric);
    }
    if f.terms().any(|(_, c)| c.abs() > 1) {
        return Err(RejectReason::CoefficientTooBig);
    }
    if f.coeff(0) == 0 {
        return Err(RejectReason::MissingConstantTerm);
    }
    // Support is now {0, +-n_1, ..., +-n_k}; walk the nonnegative side from
    // the top and demand strict sign alternation down to the constant term.
    let exponents: Vec<u32> = f
        .terms()
        .filter(|&(e, _)| e > 0)
        .map(|(e, _)| e as u32)
        .collect();
    let mut expect = 1i64;
    for &n in exponents.iter().rev() {
        if f.coeff(n as i32) != expect {
            return if expect == 1 && f.coeff(n as i32) == -1 && n as i32 == f.degree().unwrap_or(0)
            {
                Err(RejectReason::TopCoefficientNotPlusOne)
            } else {
                Err(RejectReason::SignsDoNotAlternate)
            };
        }
        expect = -expect;
    }
    if f.coeff(0) != expect {
        return Err(RejectReason::SignsDoNotAlternate);
    }
    Ok(LSpaceAlex { exponents })
}

/// One knot Floer homology generator: a rank-one group at Alexander grading
/// `alexander`, supported in Maslov grading `maslov`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Generator {
    /// The Alexander grading `n_i` (negative for `i < 0`).
    pub alexander: i32,
    /// The Maslov grading `delta_i`.
    pub maslov: i64,
}

/// The full knot Floer homology of an L-space knot: `2k + 1` rank-one
/// generators listed top Alexander grading first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HfkSummary {
    /// Generators in decreasing Alexander grading.
    pub generators: Vec<Generator>,
}

/// Runs the Maslov-grading recursion on a validated exponent sequence:
///
/// ```text
/// delta_k = 0
/// delta_i = delta_{i+1} - 2 (n_{i+1} - n_i) + 1   (k - i odd)
/// delta_i = delta_{i+1} - 1                       (k - i > 0 even)
/// ```
///
/// over `i = k, k-1, ..., -k` with `n_{-i} = -n_i`.
pub fn hfk_from_alex(a: &LSpaceAlex) -> HfkSummary {
    let k = a.k() as i64;
    // n_i for i = -k..=k.
    let n = |i: i64| -> i64 {
        match i.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => a.exponents[(i - 1) as usize] as i64,
            std::cmp::Ordering::Less => -(a.exponents[(-i - 1) as usize] as i64),
        }
    };
    let mut generators = Vec::with_capacity((2 * k + 1) as usize);
    let mut delta = 0i64;
    generators.push(Generator {
        alexander: n(k) as i32,
        maslov: delta,
    });
    let mut i = k - 1;
    while i >= -k {
        delta = if (k - i) % 2 == 1 {
            delta - 2 * (n(i + 1) - n(i)) + 1
        } else {
            delta - 1
        };
        generators.push(Generator {
            alexander: n(i) as i32,
            maslov: delta,
        });
        i -= 1;
    }
    HfkSummary { generators }
}

impl HfkSummary {
    /// Reassembles the Euler characteristic `sum (-1)^{maslov} T^{alexander}`,
    /// which must reproduce the input polynomial.
    pub fn euler_characteristic(&self) -> Laurent {
        Laurent::from_terms(self.generators.iter().map(|g| {
            let sign = if g.maslov.rem_euclid(2) == 0 { 1i64 } else { -1 };
            (g.alexander, sign)
        }))
    }
}

/// τ and the four-ball genus lower bound determined by a staircase
/// polynomial: both equal the top exponent.
pub fn tau_and_genus(a: &LSpaceAlex) -> (u32, u32) {
    let top = a.exponents.last().copied().unwrap_or(0);
    (top, top)
}

/// The symmetrized Alexander polynomial of the `(p, q)` torus knot,
/// computed by exact polynomial division of
/// `(T^{pq} - 1)(T - 1) / ((T^p - 1)(T^q - 1))` and recentered.
pub fn torus_knot_alex(p: u32, q: u32) -> Result<Laurent> {
    if p < 2 || q < 2 {
        return Err(Error::OutOfRange {
            what: "torus knot parameter",
            got: p.min(q) as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    if crate::arith::gcd(p as u64, q as u64) != 1 {
        return Err(Error::NotCoprime {
            a: p as i64,
            b: q as i64,
        });
    }
    let (p, q) = (p as usize, q as usize);
    // Numerator (T^{pq} - 1)(T - 1) as a dense coefficient vector.
    let mut num = vec![0i64; p * q + 2];
    num[p * q + 1] += 1;
    num[p * q] -= 1;
    num[1] -= 1;
    num[0] += 1;
    // Divide by T^p - 1, then by T^q - 1 (exact long division, ascending).
    for d in [p, q] {
        let mut quot = vec![0i64; num.len() - d];
        for e in (0..quot.len()).rev() {
            let c = num[e + d];
            quot[e] = c;
            num[e + d] = 0;
            num[e] += c;
        }
        debug_assert!(num.iter().all(|&c| c == 0), "division must be exact");
        num = quot;
    }
    let degree = num.len() - 1;
    debug_assert_eq!(degree % 2, 0, "Alexander degree (p-1)(q-1) is even");
    let half = (degree / 2) as i32;
    Ok(Laurent::from_terms(
        num.iter().enumerate().map(|(e, &c)| (e as i32 - half, c)),
    ))
}

/// Recognizes the dense alternating polynomial of the `(2, 2n+1)` torus
/// knot, returning `n`. Any alternating knot with an L-space surgery is
/// forced to have a polynomial of exactly this shape.
pub fn recognize_t2(f: &Laurent) -> std::result::Result<u32, String> {
    let a = validate_lspace_alex(f).map_err(|r| r.to_string())?;
    let n = a.k() as u32;
    for (j, &e) in a.exponents().iter().enumerate() {
        if e != j as u32 + 1 {
            return Err(format!("support has a gap at +-{}", j + 1));
        }
    }
    Ok(n)
}
