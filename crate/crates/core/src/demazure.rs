//! Demazure operators acting monomial-wise on the `a`-part of polynomials and series.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{CharPoly, GenSeries};
use crate::rootsys::AlgebraSpec;
use crate::weight::Weight;
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKind {
    /// `D̂ᵢ`, the string-summing projection.
    D,
    /// `d̂ᵢ = D̂ᵢ − 1`.
    Small,
    /// `D̄ᵢ = d̂ᵢ − r̂ᵢ`.
    Dbar,
    /// `d̂ᵢ` with `αᵢ` replaced by `−αᵢ`.
    DNeg,
    /// `r̂ᵢ`.
    Reflect,
}

impl FromStr for OpKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<OpKind> {
        match s {
            "D" => Ok(OpKind::D),
            "d" => Ok(OpKind::Small),
            "Dbar" | "dbar" => Ok(OpKind::Dbar),
            "dneg" | "d_neg" => Ok(OpKind::DNeg),
            "r" | "reflect" => Ok(OpKind::Reflect),
            other => Err(Error::Parse(format!("unknown operator kind `{other}` (expected D, d, Dbar, dneg, r)"))),
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpKind::D => "D",
            OpKind::Small => "d",
            OpKind::Dbar => "Dbar",
            OpKind::DNeg => "dneg",
            OpKind::Reflect => "r",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DemazureOp {
    pub kind: OpKind,
    pub index: usize,
}

impl DemazureOp {
    pub fn new(kind: OpKind, index: usize) -> Self {
        DemazureOp { kind, index }
    }

    pub fn apply(&self, spec: &AlgebraSpec, s: &GenSeries) -> GenSeries {
        apply(spec, self.kind, self.index, s)
    }
}

/// Push `sign · Σ_{k∈ks} a^{φ + k·step·αᵢ}` into `out`.
fn push_string(spec: &AlgebraSpec, out: &mut CharPoly, phi: &Weight, i: usize, ks: std::ops::RangeInclusive<i64>, step: i64, c: &BigInt) {
    for k in ks {
        out.add_term(spec.add_root(phi, i, k * step), c.clone());
    }
}

fn monomial_action(spec: &AlgebraSpec, kind: OpKind, i: usize, phi: &Weight, c: &BigInt, out: &mut CharPoly) {
    let p = phi[i - 1];
    let neg = -c;
    match kind {
        OpKind::D => {
            if p >= 0 {
                push_string(spec, out, phi, i, 0..=p, -1, c);
            } else if p <= -2 {
                push_string(spec, out, phi, i, 1..=(-p - 1), 1, &neg);
            }
        }
        OpKind::Small => {
            if p >= 1 {
                push_string(spec, out, phi, i, 1..=p, -1, c);
            } else if p <= -1 {
                push_string(spec, out, phi, i, 0..=(-p - 1), 1, &neg);
            }
        }
        OpKind::DNeg => {
            if p <= -1 {
                push_string(spec, out, phi, i, 1..=-p, 1, c);
            } else if p >= 1 {
                push_string(spec, out, phi, i, 0..=(p - 1), -1, &neg);
            }
        }
        OpKind::Dbar => {
            monomial_action(spec, OpKind::Small, i, phi, c, out);
            out.add_term(spec.reflect(i, phi), neg);
        }
        OpKind::Reflect => out.add_term(spec.reflect(i, phi), c.clone()),
    }
}

pub fn apply_poly(spec: &AlgebraSpec, kind: OpKind, i: usize, p: &CharPoly) -> CharPoly {
    p.flat_map(|phi, c, out| monomial_action(spec, kind, i, phi, c, out))
}

pub fn apply(spec: &AlgebraSpec, kind: OpKind, i: usize, s: &GenSeries) -> GenSeries {
    s.map_polys(|p| apply_poly(spec, kind, i, p))
}

#[allow(non_snake_case)]
pub fn apply_D(spec: &AlgebraSpec, i: usize, s: &GenSeries) -> GenSeries {
    apply(spec, OpKind::D, i, s)
}

pub fn apply_d(spec: &AlgebraSpec, i: usize, s: &GenSeries) -> GenSeries {
    apply(spec, OpKind::Small, i, s)
}

#[allow(non_snake_case)]
pub fn apply_Dbar(spec: &AlgebraSpec, i: usize, s: &GenSeries) -> GenSeries {
    apply(spec, OpKind::Dbar, i, s)
}

pub fn apply_d_neg(spec: &AlgebraSpec, i: usize, s: &GenSeries) -> GenSeries {
    apply(spec, OpKind::DNeg, i, s)
}

pub fn apply_reflect(spec: &AlgebraSpec, i: usize, s: &GenSeries) -> GenSeries {
    apply(spec, OpKind::Reflect, i, s)
}

/// `op_{i₁} op_{i₂} ⋯ op_{i_k} s`: the rightmost letter acts first. The word must be reduced.
pub fn compose_over_word(spec: &AlgebraSpec, group: &WeylGroup, kind: OpKind, word: &[usize], s: &GenSeries) -> Result<GenSeries> {
    for &i in word {
        spec.check_index(i)?;
    }
    if !group.is_reduced(word)? {
        return Err(Error::NonReducedWord(word.to_vec()));
    }
    Ok(compose_unchecked(spec, kind, word, s))
}

pub(crate) fn compose_unchecked(spec: &AlgebraSpec, kind: OpKind, word: &[usize], s: &GenSeries) -> GenSeries {
    word.iter().rev().fold(s.clone(), |acc, &i| apply(spec, kind, i, &acc))
}

pub(crate) fn compose_poly(spec: &AlgebraSpec, kind: OpKind, word: &[usize], p: &CharPoly) -> CharPoly {
    word.iter().rev().fold(p.clone(), |acc, &i| apply_poly(spec, kind, i, &acc))
}

/// Largest `r̂ᵢ`-invariant sub-sum of `p`: each pair `{φ, rᵢφ}` contributes its smaller coefficient.
pub fn invariant_part(spec: &AlgebraSpec, i: usize, p: &CharPoly) -> CharPoly {
    let mut out = CharPoly::zero();
    for (phi, c) in p.terms() {
        let partner = spec.reflect(i, phi);
        let m = c.clone().min(p.coeff(&partner));
        if m > BigInt::from(0) {
            out.add_term(phi.clone(), m);
        }
    }
    out
}
