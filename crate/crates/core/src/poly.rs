//! Exact Laurent polynomials in `a` and truncated series in `L` over them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::weight::{graded_cmp, Weight};
use crate::weyl::WeylElement;

/// Integer Laurent polynomial in `a₁…a_r`, keyed by exponent.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharPoly {
    terms: BTreeMap<Weight, BigInt>,
}

impl CharPoly {
    pub fn zero() -> Self {
        CharPoly::default()
    }

    pub fn one(rank: usize) -> Self {
        CharPoly::monomial(Weight::zero(rank), 1)
    }

    pub fn monomial(exp: Weight, coeff: impl Into<BigInt>) -> Self {
        let mut p = CharPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut p = CharPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: Weight, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical graded-lex order.
    pub fn canonical_terms(&self) -> Vec<(&Weight, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_cmp(a.0, b.0));
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Weight) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn contains(&self, exp: &Weight) -> bool {
        self.terms.contains_key(exp)
    }

    /// Value at `a = (1,…,1)`: the sum of coefficients.
    pub fn specialize_a_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> CharPoly {
        if k.is_zero() {
            return CharPoly::zero();
        }
        CharPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// Multiply by the monomial `a^shift`.
    pub fn shift(&self, shift: &Weight) -> CharPoly {
        CharPoly { terms: self.terms.iter().map(|(w, c)| (w + shift, c.clone())).collect() }
    }

    /// Apply `f` to every exponent, summing collisions.
    pub fn map_exponents(&self, mut f: impl FnMut(&Weight) -> Weight) -> CharPoly {
        let mut out = CharPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Linear extension of a per-monomial map.
    pub fn flat_map(&self, mut f: impl FnMut(&Weight, &BigInt, &mut CharPoly)) -> CharPoly {
        let mut out = CharPoly::zero();
        for (w, c) in &self.terms {
            f(w, c, &mut out);
        }
        out
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.canonical_terms().into_iter().map(|(w, c)| json!({"exp": w.0, "coeff": bigint_json(c)})).collect())
    }

    pub fn from_json(v: &Value) -> Result<CharPoly> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("CharPoly must be an array".into()))?;
        let mut p = CharPoly::zero();
        for t in arr {
            let exp: Vec<i64> = serde_json::from_value(t["exp"].clone())?;
            p.add_term(Weight(exp), bigint_from_json(&t["coeff"])?);
        }
        Ok(p)
    }
}

pub fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    if let Some(x) = v.as_i64() {
        return Ok(BigInt::from(x));
    }
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| Error::Parse(format!("bad coefficient {v}")))
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Option<&Weight>, &Weight, &BigInt)> = self.canonical_terms().into_iter().map(|(w, c)| (None, w, c)).collect();
        f.write_str(&format_terms(&terms))
    }
}

fn monomial_factors(l: Option<&Weight>, a: &Weight) -> Vec<String> {
    let mut out = Vec::new();
    let mut push = |name: &str, k: usize, e: i64| match e {
        0 => {}
        1 => out.push(format!("{name}{k}")),
        e => out.push(format!("{name}{k}^{e}")),
    };
    if let Some(l) = l {
        for (k, &e) in l.0.iter().enumerate() {
            push("L", k + 1, e);
        }
    }
    for (k, &e) in a.0.iter().enumerate() {
        push("a", k + 1, e);
    }
    out
}

fn format_terms(terms: &[(Option<&Weight>, &Weight, &BigInt)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (n, (l, a, c)) in terms.iter().enumerate() {
        let factors = monomial_factors(*l, a).join("*");
        let neg = c.is_negative();
        let mag = c.abs();
        if neg {
            s.push('-');
        } else if n > 0 {
            s.push('+');
        }
        if factors.is_empty() {
            s.push_str(&mag.to_string());
        } else if mag.is_one() {
            s.push_str(&factors);
        } else {
            s.push_str(&format!("{mag}*{factors}"));
        }
    }
    s
}

impl Add for &CharPoly {
    type Output = CharPoly;
    fn add(self, o: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;
    fn sub(self, o: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl AddAssign<&CharPoly> for CharPoly {
    fn add_assign(&mut self, o: &CharPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&CharPoly> for CharPoly {
    fn sub_assign(&mut self, o: &CharPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        CharPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;
    fn mul(self, o: &CharPoly) -> CharPoly {
        let mut acc: HashMap<Weight, BigInt> = HashMap::with_capacity(self.len() * o.len());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                *acc.entry(w1 + w2).or_default() += c1 * c2;
            }
        }
        CharPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(CharPoly);
owned_ops!(GenSeries);

/// Series in `L₁…L_r` with `CharPoly` coefficients, truncated at total `L`-degree `trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct GenSeries {
    rank: usize,
    trunc: u32,
    coeffs: BTreeMap<Weight, CharPoly>,
}

impl GenSeries {
    pub fn zero(rank: usize, trunc: u32) -> Self {
        GenSeries { rank, trunc, coeffs: BTreeMap::new() }
    }

    pub fn one(rank: usize, trunc: u32) -> Self {
        GenSeries::constant(CharPoly::one(rank), rank, trunc)
    }

    pub fn constant(p: CharPoly, rank: usize, trunc: u32) -> Self {
        let mut s = GenSeries::zero(rank, trunc);
        s.add_poly(Weight::zero(rank), &p);
        s
    }

    /// `L^l a^wt`; zero if the degree of `l` exceeds `trunc`.
    pub fn monomial(l: Weight, wt: Weight, trunc: u32) -> Self {
        let rank = l.rank();
        let mut s = GenSeries::zero(rank, trunc);
        s.add_poly(l, &CharPoly::monomial(wt, 1));
        s
    }

    /// `L^{Λʲ} a^wt` for a 1-based fundamental index `j`.
    pub fn generator(j: usize, wt: Weight, trunc: u32) -> Self {
        let rank = wt.rank();
        GenSeries::monomial(Weight::fundamental(rank, j), wt, trunc)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn coeffs(&self) -> &BTreeMap<Weight, CharPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, l: &Weight) -> CharPoly {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of `(L, a)` monomials.
    pub fn num_terms(&self) -> usize {
        self.coeffs.values().map(|p| p.len()).sum()
    }

    /// Maximal total `L`-degree present.
    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().map(|l| l.degree()).max()
    }

    pub fn add_poly(&mut self, l: Weight, p: &CharPoly) {
        if p.is_zero() || l.degree() > self.trunc as i64 {
            return;
        }
        let entry = self.coeffs.entry(l.clone()).or_default();
        *entry += p;
        if entry.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn add_term(&mut self, l: Weight, a: Weight, c: BigInt) {
        self.add_poly(l, &CharPoly::monomial(a, c));
    }

    /// Flat `(L, a, coeff)` triples in canonical order.
    pub fn flat_terms(&self) -> Vec<(&Weight, &Weight, &BigInt)> {
        let mut ls: Vec<&Weight> = self.coeffs.keys().collect();
        ls.sort_by(|a, b| graded_cmp(a, b));
        ls.into_iter().flat_map(|l| self.coeffs[l].canonical_terms().into_iter().map(move |(a, c)| (l, a, c))).collect()
    }

    /// Same series viewed at a different truncation (never raises the window above the data).
    pub fn with_trunc(&self, trunc: u32) -> GenSeries {
        GenSeries {
            rank: self.rank,
            trunc,
            coeffs: self.coeffs.iter().filter(|(l, _)| l.degree() <= trunc as i64).map(|(l, p)| (l.clone(), p.clone())).collect(),
        }
    }

    /// Terms of total `L`-degree exactly `d`.
    pub fn degree_slice(&self, d: i64) -> GenSeries {
        GenSeries {
            rank: self.rank,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().filter(|(l, _)| l.degree() == d).map(|(l, p)| (l.clone(), p.clone())).collect(),
        }
    }

    pub fn map_polys(&self, mut f: impl FnMut(&CharPoly) -> CharPoly) -> GenSeries {
        let mut out = GenSeries::zero(self.rank, self.trunc);
        for (l, p) in &self.coeffs {
            out.add_poly(l.clone(), &f(p));
        }
        out
    }

    pub fn try_map_polys(&self, mut f: impl FnMut(&CharPoly) -> Result<CharPoly>) -> Result<GenSeries> {
        let mut out = GenSeries::zero(self.rank, self.trunc);
        for (l, p) in &self.coeffs {
            out.add_poly(l.clone(), &f(p)?);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> GenSeries {
        self.map_polys(|p| p.scale(k))
    }

    /// `[x] = Σ_{n≤N} xⁿ`; `x` must have no term of `L`-degree zero.
    pub fn bracket(&self) -> Result<GenSeries> {
        if self.coeffs.keys().any(|l| l.degree() == 0) {
            return Err(Error::NonInvertibleBracket);
        }
        let mut out = GenSeries::one(self.rank, self.trunc);
        let mut power = GenSeries::one(self.rank, self.trunc);
        for _ in 0..self.trunc {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mut ls: Vec<&Weight> = self.coeffs.keys().collect();
        ls.sort_by(|a, b| graded_cmp(a, b));
        Value::Array(ls.into_iter().map(|l| json!({"L": l.0, "poly": self.coeffs[l].to_json()})).collect())
    }

    pub fn from_json(v: &Value, rank: usize, trunc: u32) -> Result<GenSeries> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("GenSeries must be an array".into()))?;
        let mut s = GenSeries::zero(rank, trunc);
        for t in arr {
            let l: Vec<i64> = serde_json::from_value(t["L"].clone())?;
            s.add_poly(Weight(l), &CharPoly::from_json(&t["poly"])?);
        }
        Ok(s)
    }

    /// Location and values of the first canonical-order coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &GenSeries) -> Option<(Weight, Weight, BigInt, BigInt)> {
        let diff = self - other;
        let (l, a, _) = diff.flat_terms().into_iter().next()?;
        let l = l.clone();
        let a = a.clone();
        Some((l.clone(), a.clone(), self.coeff(&l).coeff(&a), other.coeff(&l).coeff(&a)))
    }
}

impl fmt::Display for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Option<&Weight>, &Weight, &BigInt)> = self.flat_terms().into_iter().map(|(l, a, c)| (Some(l), a, c)).collect();
        f.write_str(&format_terms(&terms))
    }
}

impl fmt::Debug for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [trunc {}]", self, self.trunc)
    }
}

impl Add for &GenSeries {
    type Output = GenSeries;
    fn add(self, o: &GenSeries) -> GenSeries {
        let mut out = self.with_trunc(self.trunc.min(o.trunc));
        for (l, p) in &o.coeffs {
            out.add_poly(l.clone(), p);
        }
        out
    }
}

impl Sub for &GenSeries {
    type Output = GenSeries;
    fn sub(self, o: &GenSeries) -> GenSeries {
        self + &(-o)
    }
}

impl Neg for &GenSeries {
    type Output = GenSeries;
    fn neg(self) -> GenSeries {
        self.map_polys(|p| -p)
    }
}

impl Mul for &GenSeries {
    type Output = GenSeries;
    fn mul(self, o: &GenSeries) -> GenSeries {
        let trunc = self.trunc.min(o.trunc);
        let mut out = GenSeries::zero(self.rank, trunc);
        for (l1, p1) in &self.coeffs {
            let d1 = l1.degree();
            for (l2, p2) in &o.coeffs {
                if d1 + l2.degree() > trunc as i64 {
                    continue;
                }
                out.add_poly(l1 + l2, &(p1 * p2));
            }
        }
        out
    }
}

/// `ŵ(L^v a^μ) = L^v a^{wμ}`.
pub fn weyl_act(w: &WeylElement, s: &GenSeries) -> GenSeries {
    s.map_polys(|p| p.map_exponents(|e| w.act(e)))
}

/// An integrity-basis element `L^{Λʲ} a^φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegrityElement {
    pub shape: usize,
    pub weight: Weight,
}

impl IntegrityElement {
    pub fn to_series(&self, trunc: u32) -> GenSeries {
        GenSeries::generator(self.shape, self.weight.clone(), trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn monomials_and_truncation() {
        assert_eq!(GenSeries::monomial(w([0, 0]), w([0, 0]), 3), GenSeries::one(2, 3));
        assert_eq!(GenSeries::monomial(w([1, 0]), w([1, 0]), 3).to_string(), "L1*a1");
        assert!(GenSeries::monomial(w([4, 0]), w([1, 0]), 3).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let zero = GenSeries::zero(1, 2);
        assert_eq!(zero.bracket().unwrap(), GenSeries::one(1, 2));
        let x = GenSeries::monomial(w([1]), w([1]), 2);
        assert_eq!(x.bracket().unwrap().to_string(), "1+L1*a1+L1^2*a1^2");
        let y = GenSeries::monomial(w([1]), w([-1]), 2);
        let prod = &x.bracket().unwrap() * &y.bracket().unwrap();
        assert_eq!(prod.to_string(), "1+L1*a1^-1+L1*a1+L1^2+L1^2*a1^-2+L1^2*a1^2");
        let bad = GenSeries::one(1, 2);
        assert!(matches!(bad.bracket(), Err(Error::NonInvertibleBracket)));
    }

    #[test]
    fn display_and_json() {
        let p = CharPoly::from_terms([(w([0, 0]), 2), (w([1, -1]), -1), (w([-1, 0]), 1)]);
        assert_eq!(p.to_string(), "2+a1^-1-a1*a2^-1");
        let j = p.to_json();
        assert_eq!(j.to_string(), r#"[{"coeff":2,"exp":[0,0]},{"coeff":1,"exp":[-1,0]},{"coeff":-1,"exp":[1,-1]}]"#);
        assert_eq!(CharPoly::from_json(&j).unwrap(), p);
        assert_eq!(p.specialize_a_one(), BigInt::from(2));
        assert_eq!(CharPoly::zero().specialize_a_one(), BigInt::from(0));
        assert_eq!(CharPoly::zero().to_string(), "0");
    }

    #[test]
    fn big_coefficients_serialize_as_strings() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let p = CharPoly::monomial(w([0]), big.clone());
        let j = p.to_json();
        assert_eq!(CharPoly::from_json(&j).unwrap().coeff(&w([0])), big);
    }

    fn arb_weight() -> impl Strategy<Value = Weight> {
        prop::collection::vec(-3i64..=3, 2).prop_map(Weight)
    }

    fn arb_poly() -> impl Strategy<Value = CharPoly> {
        prop::collection::vec((arb_weight(), -3i64..=3), 0..5).prop_map(CharPoly::from_terms)
    }

    fn arb_series(trunc: u32) -> impl Strategy<Value = GenSeries> {
        prop::collection::vec((prop::collection::vec(0i64..=2, 2), arb_poly()), 0..4).prop_map(move |ts| {
            let mut s = GenSeries::zero(2, trunc);
            for (l, p) in ts {
                s.add_poly(Weight(l), &p);
            }
            s
        })
    }

    fn arb_positive_series(trunc: u32) -> impl Strategy<Value = GenSeries> {
        arb_series(trunc).prop_map(|s| {
            let mut out = GenSeries::zero(2, s.trunc());
            for (l, p) in s.coeffs() {
                if l.degree() > 0 {
                    out.add_poly(l.clone(), p);
                }
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(3), b in arb_series(3), c in arb_series(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn charpoly_ring(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn bracket_inverts(x in arb_positive_series(3)) {
            let one = GenSeries::one(2, 3);
            prop_assert_eq!(&x.bracket().unwrap() * &(&one - &x), one);
        }

        #[test]
        fn truncation_coherence(a in arb_series(4), b in arb_series(4), m in 0u32..=4) {
            let lo = &a.with_trunc(m) * &b.with_trunc(m);
            prop_assert_eq!((&a * &b).with_trunc(m), lo);
        }

        #[test]
        fn json_round_trip(a in arb_series(3)) {
            prop_assert_eq!(GenSeries::from_json(&a.to_json(), 2, 3).unwrap(), a);
        }
    }
}
