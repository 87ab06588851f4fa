//! Correction terms (d-invariants) of lens spaces.
//!
//! Everything descends from one recursion over the Euclidean algorithm, for
//! the negatively oriented space `-L(p, q)`:
//!
//! ```text
//! d(-L(1, q), 0) = 0
//! d(-L(p, q), i) = (pq - (2i + 1 - p - q)^2) / (4pq) - d(-L(q, p mod q), i mod q)
//! ```
//!
//! with `0 <= i < p`, and `d(L(p, q), i) = -d(-L(p, q), i)`.
//!
//! Two implementations ship: a reference path over arbitrary-precision
//! rationals, and an `i64` fast path used by the census. The fast path is
//! only taken where its intermediates provably fit (see [`FAST_P_LIMIT`]),
//! and the two are property-tested equal.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;

use crate::arith::gcd;
use crate::{Error, LensSpace, Result};

/// Largest `p` served by the `i64` fast path.
///
/// Every reduced table value `n/d` satisfies `|n| <= p^2 q <= p^3` and
/// `d | 4pq <= 4p^2`; a rational subtraction cross-multiplies once before
/// reducing, so the worst intermediate is bounded by `4 p^5`. With
/// `p <= 3000` that is below `2^63`, with two orders of magnitude to spare.
pub const FAST_P_LIMIT: u32 = 3000;

fn check_pqi(p: u32, q: u32, i: u32) -> Result<()> {
    if p == 0 {
        return Err(Error::OutOfRange {
            what: "p",
            got: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let qmax = if p == 1 { 1 } else { p - 1 };
    if (q == 0 && p != 1) || q > qmax {
        return Err(Error::OutOfRange {
            what: "q",
            got: q as i64,
            lo: if p == 1 { 0 } else { 1 },
            hi: qmax as i64,
        });
    }
    if gcd(p as u64, q.max(1) as u64) != 1 {
        return Err(Error::NotCoprime {
            a: p as i64,
            b: q as i64,
        });
    }
    if i >= p {
        return Err(Error::OutOfRange {
            what: "i",
            got: i as i64,
            lo: 0,
            hi: p as i64 - 1,
        });
    }
    Ok(())
}

/// The descent ladder `(p, q) -> (q, p mod q) -> ...` ending at `p = 1`,
/// returned top first.
fn euclid_chain(p: u32, q: u32) -> Vec<(u64, u64)> {
    let mut chain = Vec::new();
    let (mut p, mut q) = (p as u64, q as u64);
    loop {
        chain.push((p, q));
        if p == 1 {
            return chain;
        }
        (p, q) = (q, p % q);
    }
}

/// Full table of `d(-L(p, q), i)` for `i = 0..p`, reference precision.
pub fn d_neg_table_big(p: u32, q: u32) -> Result<Vec<BigRational>> {
    check_pqi(p, q, 0)?;
    let mut table = vec![BigRational::zero()];
    for &(pp, qq) in euclid_chain(p, q).iter().rev().skip(1) {
        let (pp_i, qq_i) = (pp as i64, qq as i64);
        let den = BigInt::from(4 * pp_i * qq_i);
        let next = (0..pp_i)
            .map(|i| {
                let a = 2 * i + 1 - pp_i - qq_i;
                BigRational::new(BigInt::from(pp_i * qq_i - a * a), den.clone())
                    - &table[(i % qq_i) as usize]
            })
            .collect();
        table = next;
    }
    Ok(table)
}

/// Full table of `d(-L(p, q), i)`, `i64` fast path.
///
/// Errors if `p` exceeds [`FAST_P_LIMIT`]; use [`d_neg_table_big`] there.
pub fn d_neg_table_r64(p: u32, q: u32) -> Result<Vec<Rational64>> {
    check_pqi(p, q, 0)?;
    if p > FAST_P_LIMIT {
        return Err(Error::OutOfRange {
            what: "p (fast path)",
            got: p as i64,
            lo: 1,
            hi: FAST_P_LIMIT as i64,
        });
    }
    let mut table = vec![Rational64::zero()];
    for &(pp, qq) in euclid_chain(p, q).iter().rev().skip(1) {
        let (pp_i, qq_i) = (pp as i64, qq as i64);
        let next = (0..pp_i)
            .map(|i| {
                let a = 2 * i + 1 - pp_i - qq_i;
                Rational64::new(pp_i * qq_i - a * a, 4 * pp_i * qq_i)
                    - table[(i % qq_i) as usize]
            })
            .collect();
        table = next;
    }
    Ok(table)
}

/// `d(-L(p, q), i)`, one value at reference precision.
pub fn d_neg_lens(p: u32, q: u32, i: u32) -> Result<BigRational> {
    check_pqi(p, q, i)?;
    Ok(d_neg_table_big(p, q)?.swap_remove(i as usize))
}

/// `d(L(p, q), i) = -d(-L(p, q), i)`.
pub fn d_lens(p: u32, q: u32, i: u32) -> Result<BigRational> {
    Ok(-d_neg_lens(p, q, i)?)
}

/// Closed form for the `q = 1` column: `d(L(p, 1), i) = ((2i - p)^2 - p) / (4p)`.
pub fn d_lens_q1(p: u32, i: u32) -> Rational64 {
    let (p, i) = (p as i64, i as i64);
    Rational64::new((2 * i - p) * (2 * i - p) - p, 4 * p)
}

/// A fully evaluated d-invariant table for one lens space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DTable {
    /// The space the table belongs to.
    pub space: LensSpace,
    /// `values[i] = d(L(p, q), i)` for `i = 0..p`.
    pub values: Vec<BigRational>,
}

/// Computes the whole table `d(L(p, q), i)`, `i = 0..p`.
pub fn d_table(space: LensSpace) -> DTable {
    let values = d_neg_table_big(space.p(), space.q())
        .expect("LensSpace is validated at construction")
        .into_iter()
        .map(|v| -v)
        .collect();
    DTable { space, values }
}

/// The conjugation involution on labels: `C(i) = (q - 1 - i) mod p`.
///
/// The convention is validated, not assumed: the library's test suite checks
/// `d(L(p, q), C(i)) = d(L(p, q), i)` for every coprime pair with `p <= 300`.
pub fn conjugate_label(space: LensSpace, i: u32) -> u32 {
    let p = space.p() as i64;
    ((space.q() as i64 - 1 - i as i64).rem_euclid(p)) as u32
}

/// Integer-scaled d-tables for the obstruction kernel: numerators of
/// `d(L(p, q), i)` and `d(L(p, 1), i)` over one common denominator.
#[derive(Debug, Clone)]
pub struct ScaledTables {
    /// Numerators of `d(L(p, q), i)` over `den`.
    pub nq: Vec<i64>,
    /// Numerators of `d(L(p, 1), i)` over `den`.
    pub n1: Vec<i64>,
    /// The common (positive) denominator; divides `4pq`.
    pub den: i64,
}

/// Builds [`ScaledTables`] for `L(p, q)`, preferring the `i64` path.
pub fn scaled_tables(p: u32, q: u32) -> Result<ScaledTables> {
    check_pqi(p, q, 0)?;
    if p <= FAST_P_LIMIT {
        let tq = d_neg_table_r64(p, q)?;
        let t1 = d_neg_table_r64(p, 1)?;
        let mut den = 1i64;
        for v in tq.iter().chain(t1.iter()) {
            den = den / (gcd(den as u64, *v.denom() as u64) as i64) * v.denom();
        }
        // d(L) = -d(-L): negate numerators while scaling.
        let nq = tq.iter().map(|v| -v.numer() * (den / v.denom())).collect();
        let n1 = t1.iter().map(|v| -v.numer() * (den / v.denom())).collect();
        return Ok(ScaledTables { nq, n1, den });
    }
    let tq = d_neg_table_big(p, q)?;
    let t1 = d_neg_table_big(p, 1)?;
    let mut den = BigInt::from(1);
    for v in tq.iter().chain(t1.iter()) {
        den = num_integer::lcm(den, v.denom().clone());
    }
    let to_i64 = |x: BigInt| -> Result<i64> {
        i64::try_from(x).map_err(|_| {
            Error::OutOfRange {
                what: "scaled numerator",
                got: i64::MAX,
                lo: i64::MIN,
                hi: i64::MAX,
            }
        })
    };
    let scale = |t: &[BigRational]| -> Result<Vec<i64>> {
        t.iter()
            .map(|v| to_i64(-v.numer() * (&den / v.denom())))
            .collect()
    };
    Ok(ScaledTables {
        nq: scale(&tq)?,
        n1: scale(&t1)?,
        den: to_i64(den)?,
    })
}

/// Sorted copy of a table's values, for multiset comparisons.
pub fn sorted_values(values: &[BigRational]) -> Vec<BigRational> {
    let mut v = values.to_vec();
    v.sort();
    v
}
