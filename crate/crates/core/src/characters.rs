//! Irreducible characters by Freudenthal's recursion and by Demazure sweeps, orbit sums,
//! and the `ĉh` operator that folds monomials back to characters by the shifted action.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::demazure::{compose_poly, OpKind};
use crate::error::{Error, Result};
use crate::poly::{CharPoly, GenSeries};
use crate::weight::Weight;
use crate::Algebra;

/// Write-once memo of `ch_λ`, safe for concurrent readers.
#[derive(Default, Debug)]
pub struct CharacterCache {
    map: RwLock<HashMap<Weight, Arc<CharPoly>>>,
}

impl CharacterCache {
    fn get_or_insert(&self, lam: &Weight, make: impl FnOnce() -> CharPoly) -> Arc<CharPoly> {
        if let Some(p) = self.map.read().expect("cache lock").get(lam) {
            return p.clone();
        }
        let p = Arc::new(make());
        self.map.write().expect("cache lock").entry(lam.clone()).or_insert(p).clone()
    }
}

fn check_dominant(alg: &Algebra, lam: &Weight) -> Result<()> {
    lam.check_rank(alg.rank())?;
    if lam.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lam.clone()))
    }
}

/// The dominant weight in the (linear) Weyl orbit of `mu`.
pub fn dominant_rep(alg: &Algebra, mu: &Weight) -> Weight {
    let mut nu = mu.clone();
    while let Some(i) = (0..alg.rank()).find(|&i| nu[i] < 0) {
        nu = alg.spec.reflect(i + 1, &nu);
    }
    nu
}

/// Dominant weights `μ ≤ λ` with multiplicities, highest first.
pub fn dominant_multiplicities(alg: &Algebra, lam: &Weight) -> Result<Vec<(Weight, i64)>> {
    check_dominant(alg, lam)?;
    let spec = &alg.spec;
    let r = alg.rank();
    // (simple-root coordinates of λ − μ) for every dominant μ, found by subtracting positive roots
    let mut coords: HashMap<Weight, Vec<i64>> = HashMap::new();
    coords.insert(lam.clone(), vec![0; r]);
    let mut queue = VecDeque::from([lam.clone()]);
    while let Some(mu) = queue.pop_front() {
        for beta in &spec.positive_roots {
            let nu = &mu - &beta.labels;
            if nu.is_dominant() && !coords.contains_key(&nu) {
                let c: Vec<i64> = coords[&mu].iter().zip(&beta.coords).map(|(a, b)| a + b).collect();
                coords.insert(nu.clone(), c);
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<(Weight, Vec<i64>)> = coords.into_iter().collect();
    order.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });

    let two_rho = spec.rho().scale(2);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    let lookup = |m: &HashMap<Weight, i64>, nu: &Weight| m.get(&dominant_rep(alg, nu)).copied().unwrap_or(0);
    for (mu, c) in &order {
        if mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num = 0i64;
        for beta in &spec.positive_roots {
            let mut k = 1;
            loop {
                let nu = &mu.clone() + &beta.labels.scale(k);
                let m = lookup(&mult, &nu);
                if m == 0 {
                    break;
                }
                num += m * spec.pair_with_root(&nu, &beta.coords);
                k += 1;
            }
        }
        let den = spec.pair_with_root(&(&(lam + mu) + &two_rho), c);
        debug_assert!(den > 0 && (2 * num) % den == 0);
        mult.insert(mu.clone(), 2 * num / den);
    }
    Ok(order
        .into_iter()
        .map(|(mu, _)| {
            let m = mult[&mu];
            (mu, m)
        })
        .collect())
}

/// Multiplicity of `sigma` in the irreducible representation of highest weight `lam`.
pub fn freudenthal_multiplicity(alg: &Algebra, lam: &Weight, sigma: &Weight) -> Result<u64> {
    sigma.check_rank(alg.rank())?;
    let dom = dominant_rep(alg, sigma);
    Ok(dominant_multiplicities(alg, lam)?.into_iter().find(|(mu, _)| *mu == dom).map(|(_, m)| m as u64).unwrap_or(0))
}

/// `𝒪_λ = Σ_{σ∈Wλ} a^σ`.
pub fn orbit_sum(alg: &Algebra, lam: &Weight) -> CharPoly {
    CharPoly::from_terms(alg.group.orbit(&alg.spec, lam).into_iter().map(|w| (w, 1)))
}

/// `ch_λ` assembled from Freudenthal multiplicities (memoized).
pub fn weyl_character(alg: &Algebra, lam: &Weight) -> Result<Arc<CharPoly>> {
    check_dominant(alg, lam)?;
    Ok(alg.characters.get_or_insert(lam, || {
        let mut ch = CharPoly::zero();
        for (mu, m) in dominant_multiplicities(alg, lam).expect("checked dominant") {
            ch += &orbit_sum(alg, &mu).scale(&BigInt::from(m));
        }
        ch
    }))
}

/// `ch_λ = D̂_{w_L}(a^λ)` over the sweep word of the longest element.
pub fn demazure_character(alg: &Algebra, lam: &Weight) -> Result<CharPoly> {
    check_dominant(alg, lam)?;
    Ok(compose_poly(&alg.spec, OpKind::D, &alg.longest.sweep_word, &CharPoly::monomial(lam.clone(), 1)))
}

/// Fold `ν` to the dominant chamber by the shifted action, always reflecting at the most
/// negative label. Returns `None` when `ν + ρ` meets a wall, else `(det w, w.ν)`.
pub fn shifted_dominant(alg: &Algebra, nu: &Weight) -> Option<(i64, Weight)> {
    let mut nu = nu.clone();
    let mut sign = 1;
    let bound = alg.spec.positive_roots.len();
    for _ in 0..=bound {
        if nu.0.contains(&-1) {
            return None;
        }
        let (i, &min) = nu.0.iter().enumerate().min_by_key(|&(k, &x)| (x, k)).expect("rank ≥ 1");
        if min >= 0 {
            return Some((sign, nu));
        }
        nu = alg.spec.shifted_reflect(i + 1, &nu);
        sign = -sign;
    }
    unreachable!("shifted reduction exceeded |Δ+| steps")
}

/// `ĉh p` as a combination of characters: dominant `ν` ↦ coefficient of `ch_ν`.
pub fn chhat_decompose(alg: &Algebra, p: &CharPoly) -> BTreeMap<Weight, BigInt> {
    let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (nu, c) in p.terms() {
        if let Some((sign, dom)) = shifted_dominant(alg, nu) {
            *out.entry(dom).or_default() += c * sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expand a character combination into a polynomial.
pub fn expand_characters(alg: &Algebra, combo: &BTreeMap<Weight, BigInt>) -> Result<CharPoly> {
    let mut out = CharPoly::zero();
    for (nu, c) in combo {
        out += &weyl_character(alg, nu)?.scale(c);
    }
    Ok(out)
}

pub fn chhat(alg: &Algebra, p: &CharPoly) -> CharPoly {
    expand_characters(alg, &chhat_decompose(alg, p)).expect("dominant weights only")
}

pub fn chhat_series(alg: &Algebra, s: &GenSeries) -> GenSeries {
    s.map_polys(|p| chhat(alg, p))
}

/// `Σ_{w∈W} d̂_w(a^λ)` using each element's canonical word.
pub fn sum_of_small_demazure(alg: &Algebra, lam: &Weight) -> CharPoly {
    let mono = CharPoly::monomial(lam.clone(), 1);
    let mut out = CharPoly::zero();
    for w in alg.group.elements() {
        out += &compose_poly(&alg.spec, OpKind::Small, &w.word, &mono);
    }
    out
}
