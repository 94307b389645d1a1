//! Every generator route against the defining sum, beyond the rank-two cases.

use chargen::posetgraph;
use chargen::rootsys::AlgebraSpec;
use chargen::{genfun, Algebra, Error, GenSeries};

fn agree(alg: &Algebra, n: u32, graph: bool) {
    let x = genfun::x_by_definition(alg, n).unwrap();
    let name = alg.name();
    assert_eq!(genfun::x_via_yz(alg, n).unwrap(), x, "{name} yz");
    assert_eq!(genfun::x_via_demazure(alg, n, None).unwrap(), x, "{name} demazure");
    match genfun::x_via_demazure_numerator(alg, n) {
        Ok(s) => assert_eq!(s, x, "{name} demazure numerator"),
        Err(Error::UnsupportedFormula { .. }) => assert!(alg.rank() >= 4, "{name} numerator refused"),
        Err(e) => panic!("{name}: {e}"),
    }
    let zx = &genfun::z_denominator(alg, n).unwrap() * &x;
    assert_eq!(zx, genfun::y_via_chhat_to(alg, Some(n)).unwrap().y.with_trunc(n), "{name} Z X = Y");
    if graph {
        assert_eq!(posetgraph::x_via_graph(alg, n).unwrap(), x, "{name} graph");
    }
}

#[test]
fn rank_one_and_two() {
    for (name, n) in [("A1", 5), ("A2", 4), ("B2", 3), ("C2", 3), ("G2", 3)] {
        agree(&Algebra::named(name).unwrap(), n, true);
    }
}

#[test]
fn higher_rank_type_a() {
    for (name, n) in [("A3", 2), ("A4", 2)] {
        let alg = Algebra::named(name).unwrap();
        agree(&alg, n, true);
        let x = genfun::x_by_definition(&alg, n).unwrap();
        assert_eq!(posetgraph::x_via_multichains(&alg, n).unwrap(), x, "{name} multichains");
        assert_eq!(posetgraph::baclawski_x(&alg, n, None).unwrap(), x, "{name} baclawski");
    }
}

#[test]
fn x_has_nonnegative_coefficients() {
    for name in ["A3", "B2", "G2"] {
        let alg = Algebra::named(name).unwrap();
        assert!(genfun::is_nonnegative(&genfun::x_by_definition(&alg, 2).unwrap()), "{name}");
    }
}

#[test]
fn custom_cartan_matches_builtin() {
    let spec = AlgebraSpec::from_json_str(r#"{"rank": 2, "cartan": [[2, -3], [-1, 2]]}"#, "custom").unwrap();
    let custom = Algebra::new(spec).unwrap();
    let g2 = Algebra::named("G2").unwrap();
    assert_eq!(custom.name(), "custom");
    assert_eq!(genfun::x_by_definition(&custom, 2).unwrap(), genfun::x_by_definition(&g2, 2).unwrap());
    agree(&custom, 2, true);
}

#[test]
fn invalid_cartan_rejected() {
    assert!(AlgebraSpec::from_json_str(r#"{"rank": 2, "cartan": [[2, -1], [-1, 2], [0, 0]]}"#, "x").is_err());
    assert!(AlgebraSpec::from_json_str(r#"{"rank": 2, "cartan": [[2, -2], [-2, 2]]}"#, "affine").is_err());
    assert!(Algebra::named("E6").is_err());
}

#[test]
fn truncation_is_consistent() {
    let alg = Algebra::named("B2").unwrap();
    let x3 = genfun::x_by_definition(&alg, 3).unwrap();
    let x2: GenSeries = genfun::x_by_definition(&alg, 2).unwrap();
    assert_eq!(x3.with_trunc(2), x2);
}

#[test]
fn truncated_numerator_agrees_with_exact() {
    for name in ["B2", "G2"] {
        let alg = Algebra::named(name).unwrap();
        let exact = genfun::y_via_chhat(&alg).unwrap();
        for n in 0..4 {
            assert_eq!(genfun::y_via_chhat_to(&alg, Some(n)).unwrap().y, exact.y.with_trunc(n), "{name} {n}");
            assert_eq!(genfun::y_via_partition_to(&alg, Some(n)).unwrap().y, exact.y.with_trunc(n), "{name} {n}");
        }
    }
}
