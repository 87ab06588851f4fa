//! Modular arithmetic and continued-fraction helpers shared by every module.

use crate::{Error, Result};

/// Greatest common divisor of two non-negative integers.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x mod m` normalized into `0..m` for possibly negative `x`.
pub fn modnorm(x: i64, m: u64) -> u64 {
    let m = m as i64;
    (((x % m) + m) % m) as u64
}

/// Multiplicative inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn modinv(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(modnorm(t as i64, m))
}

/// The units of `Z/m` in increasing order.
pub fn units(m: u32) -> Vec<u32> {
    (1..m.max(2)).filter(|&u| gcd(u as u64, m as u64) == 1).collect()
}

/// Negative-regular continued-fraction expansion of `p/q`:
/// `p/q = a_1 - 1/(a_2 - 1/(...))` with every `a_i >= 2`.
///
/// This is the expansion whose coefficients, negated, give the weights of
/// the linear plumbing chain bounding the lens space `L(p, q)`.
///
/// ```
/// use lspace::arith::hj_expansion;
/// assert_eq!(hj_expansion(3, 1).unwrap(), vec![3]);
/// assert_eq!(hj_expansion(11, 2).unwrap(), vec![6, 2]);
/// assert_eq!(hj_expansion(7, 4).unwrap(), vec![2, 4]);
/// assert_eq!(hj_expansion(12, 7).unwrap(), vec![2, 4, 2]);
/// ```
pub fn hj_expansion(p: u32, q: u32) -> Result<Vec<u32>> {
    if q == 0 || q >= p {
        return Err(Error::OutOfRange {
            what: "q",
            got: q as i64,
            lo: 1,
            hi: p.saturating_sub(1) as i64,
        });
    }
    if gcd(p as u64, q as u64) != 1 {
        return Err(Error::NotCoprime {
            a: p as i64,
            b: q as i64,
        });
    }
    let (mut p, mut q) = (p as u64, q as u64);
    let mut out = Vec::new();
    while q > 0 {
        let a = p.div_ceil(q);
        out.push(a as u32);
        (p, q) = (q, a * q - p);
    }
    Ok(out)
}

/// Evaluates a negative-regular continued fraction back to `p/q`,
/// returning the pair `(p, q)` in lowest terms.
pub fn hj_evaluate(coeffs: &[u32]) -> (u64, u64) {
    // Walk right-to-left: value = a - 1/value_rest, tracked as a fraction.
    let (mut num, mut den) = (1u64, 0u64);
    for &a in coeffs.iter().rev() {
        (num, den) = (a as u64 * num - den, num);
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(1, 1), 1);
    }

    #[test]
    fn modinv_small() {
        assert_eq!(modinv(3, 7), Some(5));
        assert_eq!(modinv(2, 4), None);
        assert_eq!(modinv(1, 1), Some(0));
        for m in 2..50u64 {
            for a in 1..m {
                if gcd(a, m) == 1 {
                    let inv = modinv(a, m).unwrap();
                    assert_eq!(a * inv % m, 1, "a={a} m={m}");
                } else {
                    assert_eq!(modinv(a, m), None);
                }
            }
        }
    }

    #[test]
    fn units_of_small_moduli() {
        assert_eq!(units(5), vec![1, 2, 3, 4]);
        assert_eq!(units(6), vec![1, 5]);
        assert_eq!(units(2), vec![1]);
        assert_eq!(units(1), vec![1]);
    }

    #[test]
    fn expansion_round_trips() {
        for p in 2..200u32 {
            for q in 1..p {
                if gcd(p as u64, q as u64) != 1 {
                    continue;
                }
                let e = hj_expansion(p, q).unwrap();
                assert!(e.iter().all(|&a| a >= 2), "L({p},{q}) gave {e:?}");
                assert_eq!(hj_evaluate(&e), (p as u64, q as u64));
            }
        }
    }

    #[test]
    fn expansion_rejects_bad_input() {
        assert!(hj_expansion(4, 2).is_err());
        assert!(hj_expansion(5, 5).is_err());
        assert!(hj_expansion(5, 0).is_err());
    }

    proptest! {
        #[test]
        fn modnorm_in_range(x in -10_000i64..10_000, m in 1u64..500) {
            let r = modnorm(x, m);
            prop_assert!(r < m);
            prop_assert_eq!((r as i64 - x).rem_euclid(m as i64), 0);
        }
    }
}
