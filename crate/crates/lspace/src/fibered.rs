//! Fiberedness of knots presented by a one-relator positive word, via
//! Brown's partial-sum criterion.
//!
//! A surgery description `(p, q, k)` determines a word in two generators:
//! sweep `i = 1..=p` and append `X`, then `Y` exactly when
//! `(i + j) q mod p < k` (the offset `j` defaults to zero). Weighting `X`
//! by `-k` and `Y` by `p` makes the total vanish; the presented group is a
//! fibered-knot group exactly when the walk of partial sums attains its
//! maximum once and its minimum once.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::{Error, Result};

/// One letter of a two-generator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Letter {
    /// The spine generator.
    X,
    /// The winding generator.
    Y,
}

/// A positive word in `X, Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<Letter>);

impl Word {
    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `other` is a cyclic rotation of `self`.
    pub fn cyclic_eq(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        (0..self.len()).any(|r| {
            self.0
                .iter()
                .cycle()
                .skip(r)
                .take(self.len())
                .eq(other.0.iter())
        })
    }
}

impl std::fmt::Display for Word {
    /// Run-length form: `XYXYX^5YXYX^3`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let c = match self.0[i] {
                Letter::X => 'X',
                Letter::Y => 'Y',
            };
            if j - i == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    /// Accepts run-length form (`X^5Y`) and plain letters (`XXXXXY`).
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'X' | 'x' => Letter::X,
                'Y' | 'y' => Letter::Y,
                other => return Err(Error::Parse(format!("unexpected {other:?} in word"))),
            };
            let mut count = 1usize;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    digits.push(chars.next().unwrap());
                }
                count = digits
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad exponent in word: {e}")))?;
                if count == 0 {
                    return Err(Error::Parse("zero exponent in word".into()));
                }
            }
            out.extend(std::iter::repeat_n(letter, count));
        }
        Ok(Word(out))
    }
}

/// `E(i) = 1` exactly when `(i + j) q mod p < k`, for `i = 1..=p`.
pub fn exponent_pattern(p: u32, q: u32, k: u32, j: u32) -> Result<Vec<bool>> {
    check_triple(p, q, k)?;
    let (p64, q64, j64) = (p as u64, q as u64, j as u64);
    Ok((1..=p64)
        .map(|i| (i + j64) * q64 % p64 < k as u64)
        .collect())
}

/// The presentation word of `(p, q, k)` with offset `j`.
pub fn relator(p: u32, q: u32, k: u32, j: u32) -> Result<Word> {
    let mut word = Vec::new();
    for e in exponent_pattern(p, q, k, j)? {
        word.push(Letter::X);
        if e {
            word.push(Letter::Y);
        }
    }
    Ok(Word(word))
}

/// Outcome of Brown's criterion on one weighted word.
#[derive(Debug, Clone, Serialize)]
pub struct BrownVerdict {
    /// Whether max and min are each attained exactly once.
    pub fibered: bool,
    /// Largest partial sum.
    pub max: i64,
    /// Smallest partial sum.
    pub min: i64,
    /// How many prefixes attain the maximum.
    pub max_count: usize,
    /// How many prefixes attain the minimum.
    pub min_count: usize,
    /// 1-based position of the first maximum attainment.
    pub max_at: usize,
    /// 1-based position of the first minimum attainment.
    pub min_at: usize,
}

/// Runs Brown's criterion on `word` with the given letter weights, over the
/// partial sums `S_1..S_n` (the empty prefix is excluded).
pub fn brown(word: &Word, x_weight: i64, y_weight: i64) -> Result<BrownVerdict> {
    if word.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    let mut sum = 0i64;
    let (mut max, mut min) = (i64::MIN, i64::MAX);
    let (mut max_count, mut min_count) = (0usize, 0usize);
    let (mut max_at, mut min_at) = (0usize, 0usize);
    for (idx, letter) in word.0.iter().enumerate() {
        sum += match letter {
            Letter::X => x_weight,
            Letter::Y => y_weight,
        };
        if sum > max {
            max = sum;
            max_count = 1;
            max_at = idx + 1;
        } else if sum == max {
            max_count += 1;
        }
        if sum < min {
            min = sum;
            min_count = 1;
            min_at = idx + 1;
        } else if sum == min {
            min_count += 1;
        }
    }
    Ok(BrownVerdict {
        fibered: max_count == 1 && min_count == 1,
        max,
        min,
        max_count,
        min_count,
        max_at,
        min_at,
    })
}

/// Brown's criterion for the `(p, q, k)` presentation (offset zero),
/// weighting `X` by `-k` and `Y` by `p`.
pub fn is_fibered(p: u32, q: u32, k: u32) -> Result<BrownVerdict> {
    brown(&relator(p, q, k, 0)?, -(k as i64), p as i64)
}

fn check_triple(p: u32, q: u32, k: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::OutOfRange {
            what: "p",
            got: p as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    for (name, v) in [("q", q), ("k", k)] {
        if v == 0 || v >= p {
            return Err(Error::OutOfRange {
                what: name,
                got: v as i64,
                lo: 1,
                hi: p as i64 - 1,
            });
        }
        if gcd(p as u64, v as u64) != 1 {
            return Err(Error::NotCoprime {
                a: v as i64,
                b: p as i64,
            });
        }
    }
    Ok(())
}

/// Aggregate result of sweeping every admissible triple up to `pmax`.
#[derive(Debug, Clone, Serialize)]
pub struct FiberedCensus {
    /// Largest order swept.
    pub pmax: u32,
    /// Number of `(p, q, k)` triples checked.
    pub triples: usize,
    /// Triples failing the criterion (expected empty).
    pub failures: Vec<(u32, u32, u32)>,
}

/// Checks every triple `2 <= p <= pmax`, `q, k` units mod `p`.
pub fn fiberedness_census(pmax: u32) -> Result<FiberedCensus> {
    if pmax < 2 {
        return Err(Error::OutOfRange {
            what: "pmax",
            got: pmax as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    let per_p = (2..=pmax)
        .into_par_iter()
        .map(|p| -> Result<(usize, Vec<(u32, u32, u32)>)> {
            let units = crate::arith::units(p);
            let mut triples = 0usize;
            let mut failures = Vec::new();
            for &q in &units {
                for &k in &units {
                    triples += 1;
                    if !is_fibered(p, q, k)?.fibered {
                        failures.push((p, q, k));
                    }
                }
            }
            Ok((triples, failures))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut census = FiberedCensus {
        pmax,
        triples: 0,
        failures: Vec::new(),
    };
    for (n, mut f) in per_p {
        census.triples += n;
        census.failures.append(&mut f);
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_fixture_11_2_4() {
        let e = exponent_pattern(11, 2, 4, 0).unwrap();
        let ones: Vec<usize> = e
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1))
            .collect();
        assert_eq!(ones, vec![1, 6, 7, 11]);
        let expected: Word = "XYXYX^5YXYX^3".parse().unwrap();
        assert!(relator(11, 2, 4, 0).unwrap().cyclic_eq(&expected));
    }

    #[test]
    fn fixture_5_1_1() {
        let w = relator(5, 1, 1, 0).unwrap();
        assert_eq!(w.to_string(), "X^5Y");
        let v = brown(&w, -1, 5).unwrap();
        assert!(v.fibered);
        assert_eq!((v.min, v.max), (-5, 0));
        assert_eq!((v.min_at, v.max_at), (5, 6));
    }

    #[test]
    fn synthetic_non_fibered() {
        let w: Word = "XYXY".parse().unwrap();
        let v = brown(&w, -2, 2).unwrap();
        assert!(!v.fibered);
        assert_eq!(v.max_count, 2);
    }

    #[test]
    fn word_round_trip() {
        for s in ["XYXYX^5YXYX^3", "X^5Y", "XY", "X"] {
            let w: Word = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
            let reparsed: Word = w.to_string().parse().unwrap();
            assert_eq!(w, reparsed);
        }
        let plain: Word = "XXXXXY".parse().unwrap();
        assert_eq!(plain.to_string(), "X^5Y");
        assert!("Z".parse::<Word>().is_err());
        assert!("X^0".parse::<Word>().is_err());
    }

    #[test]
    fn cyclic_equality() {
        let a: Word = "XXY".parse().unwrap();
        let b: Word = "XYX".parse().unwrap();
        let c: Word = "YXX".parse().unwrap();
        let d: Word = "XYY".parse().unwrap();
        assert!(a.cyclic_eq(&b) && a.cyclic_eq(&c) && b.cyclic_eq(&c));
        assert!(!a.cyclic_eq(&d));
        assert!(a.cyclic_eq(&a));
    }

    #[test]
    fn verdict_rotation_invariant() {
        // Rotating a zero-sum word shifts all partial sums by a constant,
        // so the attainment counts cannot change.
        for (p, q, k) in [(7u32, 2u32, 3u32), (11, 2, 4), (13, 5, 4), (9, 2, 5)] {
            let base = is_fibered(p, q, k).unwrap();
            let w = relator(p, q, k, 0).unwrap();
            for r in 0..w.len() {
                let rotated = Word(
                    w.0.iter()
                        .cycle()
                        .skip(r)
                        .take(w.len())
                        .copied()
                        .collect(),
                );
                let v = brown(&rotated, -(k as i64), p as i64).unwrap();
                assert_eq!(v.fibered, base.fibered, "({p},{q},{k}) rot {r}");
                assert_eq!(v.max_count, base.max_count);
                assert_eq!(v.min_count, base.min_count);
            }
        }
    }

    #[test]
    fn offset_rotates_word() {
        for j in 0..11 {
            let w = relator(11, 2, 4, j).unwrap();
            assert!(w.cyclic_eq(&relator(11, 2, 4, 0).unwrap()), "j={j}");
        }
    }

    #[test]
    fn letter_counts() {
        // The sweep visits each residue once, so the word has p letters X
        // and k letters Y.
        for (p, q, k) in [(11u32, 2u32, 4u32), (13, 5, 6), (20, 3, 7)] {
            let w = relator(p, q, k, 0).unwrap();
            let xs = w.0.iter().filter(|&&l| l == Letter::X).count();
            let ys = w.0.iter().filter(|&&l| l == Letter::Y).count();
            assert_eq!((xs, ys), (p as usize, k as usize));
        }
    }

    #[test]
    fn small_census_clean() {
        let census = fiberedness_census(40).unwrap();
        assert!(census.failures.is_empty(), "{:?}", census.failures);
        assert!(census.triples > 0);
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(is_fibered(10, 2, 3).is_err());
        assert!(is_fibered(10, 3, 5).is_err());
        assert!(is_fibered(7, 0, 1).is_err());
        assert!(is_fibered(7, 1, 7).is_err());
        assert!(is_fibered(1, 1, 1).is_err());
    }
}
