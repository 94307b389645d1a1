//! Integer vectors in the Dynkin (fundamental-weight) basis.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::{Error, Result};

/// A vector of Dynkin labels. Used for weights, roots and exponents of `a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The `j`-th fundamental weight, 1-based.
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[j - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    /// Sum of the labels; the total degree of an `L`-exponent.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of absolute values of the labels.
    pub fn abs_grade(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { weight: self.clone(), expected: rank, got: self.rank() })
        }
    }

    /// Parse a comma-separated list of integers such as `1,-2`.
    pub fn parse(s: &str) -> Result<Weight> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("`{}`: {}", t.trim(), e))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    /// All dominant weights of total degree at most `deg`, by degree then lex.
    pub fn dominant_up_to(rank: usize, deg: i64) -> Vec<Weight> {
        fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() == rank {
                out.push(Weight(cur.clone()));
                return;
            }
            for x in 0..=left {
                cur.push(x);
                rec(rank, left - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rank, deg, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        out
    }

    /// Graded-lex comparison key used for canonical output order.
    pub fn graded_key(&self) -> (i64, &[i64]) {
        (self.abs_grade(), &self.0)
    }
}

pub fn graded_cmp(a: &Weight, b: &Weight) -> std::cmp::Ordering {
    a.graded_key().cmp(&b.graded_key())
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Weight {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), o.rank());
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), o.rank());
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = Weight::parse("1, -2").unwrap();
        assert_eq!(w, Weight::from([1, -2]));
        assert_eq!(w.to_string(), "(1,-2)");
        assert!(Weight::parse("1,x").is_err());
        assert!(Weight::parse("").is_err());
    }

    #[test]
    fn dominance() {
        assert!(Weight::from([0, 2]).is_dominant());
        assert!(!Weight::from([0, 2]).is_strictly_dominant());
        assert!(!Weight::from([1, -1]).is_dominant());
    }

    #[test]
    fn graded_order() {
        let mut v = vec![Weight::from([0, -2]), Weight::from([1, 0]), Weight::from([-1, 0])];
        v.sort_by(graded_cmp);
        assert_eq!(v, vec![Weight::from([-1, 0]), Weight::from([1, 0]), Weight::from([0, -2])]);
    }
}
