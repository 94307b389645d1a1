//! Library results against independent closed forms.

use chargen::characters::weyl_character;
use chargen::genfun;
use chargen::{Algebra, CharPoly, GenSeries, Weight};
use num_bigint::BigInt;

const ALGEBRAS: [&str; 7] = ["A1", "A2", "A3", "A4", "B2", "C2", "G2"];

/// Weyl dimension formula: `∏_{α>0} (λ+ρ, α) / (ρ, α)` with `(μ, α) = Σ_j c_j d_j μ_j`.
fn weyl_dimension(alg: &Algebra, lam: &Weight) -> BigInt {
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for root in &alg.spec.positive_roots {
        let pair = |shift: i64| -> i64 { (0..alg.rank()).map(|j| root.coords[j] * alg.spec.half_norms[j] * (lam[j] * shift + 1)).sum() };
        num *= pair(1);
        den *= pair(0);
    }
    assert_eq!(&num % &den, BigInt::from(0));
    num / den
}

#[test]
fn dimensions_match_weyl_formula() {
    for name in ALGEBRAS {
        let alg = Algebra::named(name).unwrap();
        for lam in Weight::dominant_up_to(alg.rank(), 3) {
            let ch = weyl_character(&alg, &lam).unwrap();
            assert_eq!(ch.specialize_a_one(), weyl_dimension(&alg, &lam), "{name} {lam}");
        }
    }
}

#[test]
fn characters_satisfy_the_alternant_identity() {
    for name in ALGEBRAS {
        let alg = Algebra::named(name).unwrap();
        let rho = alg.spec.rho().clone();
        let alternant = |mu: &Weight| {
            let mut p = CharPoly::zero();
            for w in alg.group.elements() {
                p.add_term(w.act(mu), BigInt::from(w.det));
            }
            p
        };
        let denominator = alternant(&rho);
        for lam in Weight::dominant_up_to(alg.rank(), 2) {
            let ch = weyl_character(&alg, &lam).unwrap();
            assert_eq!(&*ch * &denominator, alternant(&(&lam + &rho)), "{name} {lam}");
        }
    }
}

#[test]
fn a1_generator_closed_form() {
    // X = 1 / ((1 - L a)(1 - L a^-1)) for su(2).
    let n = 7;
    let mut want = GenSeries::zero(1, n);
    for deg in 0..=n as i64 {
        for k in 0..=deg {
            want.add_term(Weight(vec![deg]), Weight(vec![deg - 2 * k]), BigInt::from(1));
        }
    }
    let alg = Algebra::named("A1").unwrap();
    assert_eq!(genfun::x_by_definition(&alg, n).unwrap(), want);
}

#[test]
fn a2_denominator_is_the_product_over_both_orbits() {
    // Z for su(3) is the product of (1 - L^Λ a^φ) over the 3 weights of each fundamental orbit.
    let alg = Algebra::named("A2").unwrap();
    let n = 4;
    let mut want = GenSeries::one(2, n);
    for (l, wts) in [([1, 0], [[1, 0], [-1, 1], [0, -1]]), ([0, 1], [[0, 1], [1, -1], [-1, 0]])] {
        for a in wts {
            let factor = &GenSeries::one(2, n) - &GenSeries::monomial(Weight::from(l), Weight::from(a), n);
            want = &want * &factor;
        }
    }
    assert_eq!(genfun::z_denominator(&alg, n).unwrap(), want);
}

#[test]
fn outside_generators_are_fundamental_orbits() {
    for name in ALGEBRAS {
        let alg = Algebra::named(name).unwrap();
        let count: usize = (1..=alg.rank()).map(|j| alg.group.order() / alg.group.stabilizer_size(&alg.fundamental(j))).sum();
        assert_eq!(genfun::outside_generators(&alg).len(), count, "{name}");
    }
}
