//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion followed by the
//! individual checks, and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use chargen::characters::{demazure_character, orbit_sum, weyl_character};
use chargen::demazure::{apply, apply_poly, invariant_part, OpKind};
use chargen::posetgraph::{self, GeneratorGraph, Linking};
use chargen::verify::{self, CheckResult};
use chargen::{genfun, Algebra, CharPoly, GenSeries, Weight};

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn poly(terms: &[([i64; 2], i64)]) -> CharPoly {
    CharPoly::from_terms(terms.iter().map(|(e, c)| (w(e), *c)))
}

fn alg(name: &str) -> Algebra {
    Algebra::named(name).expect("built-in algebra")
}

/// Series equality ignoring the truncation bookkeeping.
fn series_check(name: impl Into<String>, got: &GenSeries, want: &GenSeries) -> CheckResult {
    let d = got.max_degree().unwrap_or(0).max(want.max_degree().unwrap_or(0)).max(0) as u32;
    CheckResult::series(name, &got.with_trunc(d), &want.with_trunc(d))
}

fn poly_check(name: impl Into<String>, got: &CharPoly, want: &CharPoly) -> CheckResult {
    CheckResult::polys(name, got, want)
}

fn timing(name: &str, elapsed: Duration, limit: u64) -> CheckResult {
    CheckResult::from_bool(
        format!("{name} runtime < {limit} s"),
        elapsed.as_secs_f64() < limit as f64,
        format!("{:.2} s", elapsed.as_secs_f64()),
    )
}

fn series_from(rank: usize, terms: &[([i64; 2], &CharPoly)]) -> GenSeries {
    let mut s = GenSeries::zero(rank, 64);
    for (l, p) in terms {
        s.add_poly(w(l), p);
    }
    s
}

// Rank-two characters as printed.

fn b2_ch01() -> CharPoly {
    poly(&[([0, 1], 1), ([-1, 1], 1), ([0, -1], 1), ([1, -1], 1)])
}

fn g2_ch10() -> CharPoly {
    poly(&[
        ([0, 0], 2),
        ([1, 0], 1),
        ([-1, 3], 1),
        ([2, -3], 1),
        ([-2, 3], 1),
        ([1, -3], 1),
        ([-1, 0], 1),
        ([0, 1], 1),
        ([-1, 2], 1),
        ([-1, 1], 1),
        ([0, -1], 1),
        ([1, -2], 1),
        ([1, -1], 1),
    ])
}

fn g2_ch01() -> CharPoly {
    poly(&[([0, 0], 1), ([0, 1], 1), ([1, -1], 1), ([-1, 2], 1), ([1, -2], 1), ([-1, 1], 1), ([0, -1], 1)])
}

fn g2_ch11() -> CharPoly {
    poly(&[
        ([0, 0], 4),
        ([0, 2], 2),
        ([0, 1], 4),
        ([1, 0], 2),
        ([2, -3], 2),
        ([-1, 3], 2),
        ([-2, 3], 2),
        ([1, -3], 2),
        ([-1, 0], 2),
        ([-1, 2], 4),
        ([-1, 1], 4),
        // Printed a second time as 4a^{Λ²}; the weight diagram requires a^{-Λ²}.
        ([0, -1], 4),
        ([1, -2], 4),
        ([1, -1], 4),
        ([2, -2], 2),
        ([2, -4], 2),
        ([0, -2], 2),
        ([-2, 2], 2),
        ([-2, 4], 2),
        ([1, 1], 1),
        ([2, -1], 1),
        ([3, -5], 1),
        ([2, -5], 1),
        ([1, -4], 1),
        ([-2, 1], 1),
        ([-3, 4], 1),
        ([-3, 5], 1),
        ([-2, 5], 1),
        ([-1, 4], 1),
        ([-1, -1], 1),
        ([3, -4], 1),
    ])
}

fn g2_ch02() -> CharPoly {
    poly(&[
        ([0, 0], 3),
        ([0, 1], 2),
        ([1, -1], 2),
        ([-1, 2], 2),
        ([1, -2], 2),
        ([-1, 1], 2),
        ([0, -1], 2),
        ([1, 0], 1),
        ([-1, 3], 1),
        ([2, -3], 1),
        ([-2, 3], 1),
        ([1, -3], 1),
        ([-1, 0], 1),
        ([2, -2], 1),
        ([2, -4], 1),
        ([0, -2], 1),
        ([-2, 2], 1),
        ([-2, 4], 1),
        ([0, 2], 1),
    ])
}

/// G2 numerator as printed: scalar terms, then the ch(0,1), ch(1,0), ch(1,1), ch(0,2) groups.
fn g2_y_printed() -> GenSeries {
    let one = CharPoly::monomial(w(&[0, 0]), 1);
    let (c10, c01, c11, c02) = (g2_ch10(), g2_ch01(), g2_ch11(), g2_ch02());
    let mut y = GenSeries::zero(2, 64);
    for l in
        [[0, 0], [1, 0], [0, 1], [3, 3], [1, 4], [3, 0], [4, 3], [1, 1], [1, 3], [1, 2], [3, 2], [4, 4], [2, 4], [3, 4], [3, 1], [2, 0]]
    {
        y.add_poly(w(&l), &one);
    }
    for (l, c) in [([3, 4], 1), ([2, 4], 1), ([1, 0], 1), ([2, 0], 1), ([2, 2], 2), ([3, 1], -1), ([1, 3], -1)] {
        y.add_poly(w(&l), &c01.scale(&c.into()));
    }
    for (l, c) in [([3, 2], 1), ([1, 2], 1), ([2, 1], -1), ([2, 3], -1)] {
        y.add_poly(w(&l), &c10.scale(&c.into()));
    }
    y.add_poly(w(&[2, 2]), &c11);
    for l in [[1, 1], [2, 1], [3, 3], [2, 3]] {
        y.add_poly(w(&l), &c02.scale(&(-1).into()));
    }
    y
}

fn criterion_1() -> Vec<CheckResult> {
    let start = Instant::now();
    let y = |name: &str| genfun::y_via_chhat(&alg(name)).unwrap().y;
    let one = CharPoly::monomial(w(&[0, 0]), 1);
    let mut out = vec![series_check("A1 Y = 1", &y("A1"), &GenSeries::one(1, 0))];
    out.push(series_check("A2 Y = 1 - L1 L2", &y("A2"), &series_from(2, &[([0, 0], &one), ([1, 1], &one.scale(&(-1).into()))])));
    let b2 = series_from(2, &[([0, 0], &one), ([1, 0], &one), ([1, 1], &b2_ch01().scale(&(-1).into())), ([1, 2], &one), ([2, 2], &one)]);
    out.push(series_check("B2 Y = 1 + L1 - L1 L2 ch(0,1) + L1 L2^2 + L1^2 L2^2", &y("B2"), &b2));
    out.push(series_check("G2 Y re-expanded from the printed table and characters", &y("G2"), &g2_y_printed()));
    out.push(timing("criterion 1", start.elapsed(), 10));
    out
}

fn criterion_2() -> Vec<CheckResult> {
    let start = Instant::now();
    let mut out = Vec::new();
    for (name, n) in [("A2", 3), ("B2", 3), ("G2", 2)] {
        let a = alg(name);
        let x = genfun::x_by_definition(&a, n).unwrap();
        out.push(series_check(format!("{name} N={n} yz = def"), &genfun::x_via_yz(&a, n).unwrap(), &x));
        out.push(series_check(format!("{name} N={n} demazure = def"), &genfun::x_via_demazure(&a, n, None).unwrap(), &x));
        out.push(series_check(format!("{name} N={n} graph = def"), &posetgraph::x_via_graph(&a, n).unwrap(), &x));
    }
    out.push(timing("criterion 2", start.elapsed(), 60));
    out
}

fn criterion_3() -> Vec<CheckResult> {
    let start = Instant::now();
    let mut out = Vec::new();
    for name in ["A1", "A2", "A3", "B2", "G2"] {
        let a = alg(name);
        let weights = Weight::dominant_up_to(a.rank(), 4);
        let bad: Vec<String> = weights
            .iter()
            .filter(|lam| *weyl_character(&a, lam).unwrap() != demazure_character(&a, lam).unwrap())
            .map(|lam| lam.to_string())
            .collect();
        out.push(CheckResult::from_bool(
            format!("{name} Freudenthal = Demazure for |lambda| <= 4"),
            bad.is_empty(),
            if bad.is_empty() { format!("{} weights", weights.len()) } else { bad.join(" ") },
        ));
    }
    let g2 = alg("G2");
    for (lam, printed, dim) in [([1, 0], g2_ch10(), "14"), ([0, 1], g2_ch01(), "7"), ([1, 1], g2_ch11(), "64"), ([0, 2], g2_ch02(), "27")] {
        let ch = weyl_character(&g2, &w(&lam)).unwrap();
        out.push(poly_check(format!("G2 ch{} matches the printed expansion", w(&lam)), &ch, &printed));
        let d = ch.specialize_a_one().to_string();
        out.push(CheckResult::from_bool(format!("G2 dim ch{} = {dim}", w(&lam)), d == dim, d));
    }
    out.push(timing("criterion 3", start.elapsed(), 30));
    out
}

fn criterion_4() -> Vec<CheckResult> {
    let a2 = alg("A2");
    let d = |i: usize, p: &CharPoly| apply_poly(&a2.spec, OpKind::D, i, p);
    let start = CharPoly::monomial(w(&[2, 1]), 1);
    let step1 = d(1, &start);
    let step2 = d(2, &step1);
    let inv = invariant_part(&a2.spec, 1, &step2);
    let rest = &step2 - &inv;
    let swept_rest = d(1, &rest);
    let eq87 = poly(&[([2, 1], 1), ([0, 2], 1), ([-2, 3], 1), ([1, 0], 1), ([-1, 1], 1), ([0, -1], 1)]);
    let eq88 = poly(&[
        ([3, -1], 1),
        ([1, 0], 1),
        ([-1, 1], 1),
        ([-3, 2], 1),
        ([2, -2], 1),
        ([0, -1], 1),
        ([-2, 0], 1),
        ([1, -3], 1),
        ([-1, -2], 1),
    ]);
    let ch = weyl_character(&a2, &w(&[2, 1])).unwrap();
    let union = &eq87 + &eq88;
    let occurrences = eq87.len() + eq88.len();
    let all_unit = eq87.terms().chain(eq88.terms()).all(|(_, c)| c.to_string() == "1");
    vec![
        poly_check("D1 a^(2,1) three terms", &step1, &poly(&[([2, 1], 1), ([0, 2], 1), ([-2, 3], 1)])),
        poly_check(
            "D2 D1 a^(2,1) nine terms",
            &step2,
            &poly(&[
                ([2, 1], 1),
                ([3, -1], 1),
                ([0, 2], 1),
                ([1, 0], 1),
                ([2, -2], 1),
                ([-2, 3], 1),
                ([-1, 1], 1),
                ([0, -1], 1),
                ([1, -3], 1),
            ]),
        ),
        poly_check("r1-invariant part of D2 D1 a^(2,1)", &inv, &eq87),
        poly_check("D1 of the remainder", &swept_rest, &eq88),
        CheckResult::from_bool(
            "union has 15 monomials, all coefficients 1",
            occurrences == 15 && all_unit,
            format!("{occurrences} monomials"),
        ),
        poly_check("union equals ch(2,1)", &union, &ch),
        poly_check("D1 D2 D1 a^(2,1) equals ch(2,1)", &d(1, &step2), &ch),
        CheckResult::from_bool(
            "no negative coefficient at any step",
            [&step1, &step2, &inv, &rest, &swept_rest].iter().all(|p| !p.has_negative()),
            "5 intermediates",
        ),
    ]
}

fn criterion_5() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for name in ["A1", "A2", "B2", "C2", "G2"] {
        let a = alg(name);
        for c in verify::operator_identities(&a, verify::DEFAULT_SEED, 100).unwrap() {
            out.push(CheckResult { name: format!("{name} {}", c.name), ..c });
        }
    }
    // The inversion-set identities exactly as printed, then with w^-1 where the printed form
    // needs it. Only the printed forms decide the verdict.
    for name in ["B2", "G2"] {
        for c in verify::weyl_vector_identities(&alg(name)) {
            let printed = c.advisory;
            let label = if printed { "printed" } else { "corrected, informational" };
            out.push(CheckResult { name: format!("{name} {} ({label})", c.name), advisory: !printed, ..c });
        }
    }
    out
}

fn criterion_6() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let ch = |a: &Algebra, l: [i64; 2]| (*weyl_character(a, &w(&l)).unwrap()).clone();
    let one = CharPoly::monomial(w(&[0, 0]), 1);
    let zero = CharPoly::zero();

    // Inside parts of the fundamental characters.
    let (a2, b2, g2) = (alg("A2"), alg("B2"), alg("G2"));
    let inside_printed: [(&Algebra, [CharPoly; 2]); 3] = [
        (&a2, [zero.clone(), zero.clone()]),
        (&b2, [one.clone(), zero.clone()]),
        (&g2, [&one + &ch(&g2, [0, 1]), &ch(&g2, [1, 0]) + &ch(&g2, [0, 1])]),
    ];
    for (a, printed) in &inside_printed {
        let split = genfun::inside_outside_split(a).unwrap();
        for (k, want) in printed.iter().enumerate() {
            out.push(poly_check(format!("{} I_{} as printed", a.name(), k + 1), &split[k].inside, want));
        }
        let exp = genfun::y_expansion_terms(a).unwrap();
        let y = genfun::y_via_chhat(a).unwrap().y;
        out.push(series_check(format!("{} Y1 = sum L^Lambda I_Lambda", a.name()), &exp.y1, &y.degree_slice(1)));
    }
    out.push(poly_check(
        "G2 I_2 = 1 (orbit of size 6 inside a 7-dim character)",
        &genfun::inside_outside_split(&g2).unwrap()[1].inside,
        &one,
    ));

    // Products S and the ch(2 Lambda) - O(2 Lambda) differences.
    let s = |a: &Algebra, j, k| genfun::s_product(a, j, k).unwrap();
    let diff = |a: &Algebra, l: [i64; 2]| &ch(a, l) - &orbit_sum(a, &w(&l));
    let table: Vec<(&Algebra, &str, CharPoly, CharPoly)> = vec![
        (&a2, "S12", s(&a2, 1, 2), one.clone()),
        (&a2, "S11", s(&a2, 1, 1), ch(&a2, [0, 1])),
        (&a2, "S22", s(&a2, 2, 2), ch(&a2, [1, 0])),
        (&a2, "ch(2,0) - O(2,0)", diff(&a2, [2, 0]), ch(&a2, [0, 1])),
        (&a2, "ch(0,2) - O(0,2)", diff(&a2, [0, 2]), ch(&a2, [1, 0])),
        (&b2, "S11", s(&b2, 1, 1), &one + &ch(&b2, [0, 2])),
        (&b2, "S12", s(&b2, 1, 2), ch(&b2, [0, 1])),
        (&b2, "S22", s(&b2, 2, 2), &one + &ch(&b2, [1, 0])),
        (&b2, "ch(2,0) - O(2,0)", diff(&b2, [2, 0]), ch(&b2, [0, 2])),
        (&b2, "ch(0,2) - O(0,2)", diff(&b2, [0, 2]), &one + &ch(&b2, [1, 0])),
        // Printed with the label S12 on the first line; the content is S11.
        (&g2, "S11", s(&g2, 1, 1), &(&(&one + &ch(&g2, [1, 0])) + &ch(&g2, [0, 2])) + &ch(&g2, [0, 3])),
        (&g2, "S12", s(&g2, 1, 2), &ch(&g2, [0, 1]) + &ch(&g2, [0, 2])),
        (&g2, "S22", s(&g2, 2, 2), &(&one + &ch(&g2, [1, 0])) + &ch(&g2, [0, 1])),
        (&g2, "ch(2,0) - O(2,0)", diff(&g2, [2, 0]), &(&ch(&g2, [0, 3]) - &ch(&g2, [0, 1])) + &one),
        (&g2, "ch(0,2) - O(0,2)", diff(&g2, [0, 2]), &ch(&g2, [1, 0]) + &ch(&g2, [0, 1])),
    ];
    for (a, label, got, want) in &table {
        out.push(poly_check(format!("{} {label} as printed", a.name()), got, want));
    }

    // Quadratic part of Y.
    let neg = |p: &CharPoly| p.scale(&(-1).into());
    let y2_printed = [
        (&a2, series_from(2, &[([1, 1], &neg(&one))])),
        (&b2, series_from(2, &[([1, 1], &neg(&ch(&b2, [0, 1])))])),
        (&g2, series_from(2, &[([2, 0], &(&one + &ch(&g2, [0, 1]))), ([1, 1], &(&one - &ch(&g2, [0, 2])))])),
    ];
    for (a, want) in &y2_printed {
        let exp = genfun::y_expansion_terms(a).unwrap();
        let y = genfun::y_via_chhat(a).unwrap().y;
        out.push(series_check(format!("{} Y2 of the numerator as printed", a.name()), &y.degree_slice(2), want));
        out.push(series_check(format!("{} Y2 from I, S and O data", a.name()), &exp.y2, want));
    }

    // Incompatible products. The G2 checks run on the published in-in set (which decides the
    // verdict) and on the corrected set (informational).
    for a in [&a2, &b2, &g2] {
        for c in genfun::verify_incompatibility_decomposition(a).unwrap() {
            let corrected = c.name.contains("corrected");
            out.push(if corrected { CheckResult { name: format!("{} (informational)", c.name), ..c }.advisory() } else { c });
        }
    }
    out
}

fn vertex(graph: &GeneratorGraph, letter: &str, trunc: u32) -> GenSeries {
    graph.vertices[graph.index_of(letter).unwrap()].label(trunc)
}

fn sum_of(graph: &GeneratorGraph, inside: &[([i64; 2], [i64; 2])], vertices: &[&str]) -> GenSeries {
    let mut s = GenSeries::zero(2, 2);
    for (l, a) in inside {
        s.add_term(w(l), w(a), 1.into());
    }
    for v in vertices {
        s = &s + &vertex(graph, v, 2);
    }
    s
}

fn common_terms(a: &GenSeries, b: &GenSeries) -> GenSeries {
    let mut s = GenSeries::zero(a.rank(), a.trunc());
    let bt: BTreeSet<(Weight, Weight)> = b.flat_terms().into_iter().map(|(l, x, _)| (l.clone(), x.clone())).collect();
    for (l, x, c) in a.flat_terms() {
        if bt.contains(&(l.clone(), x.clone())) {
            s.add_term(l.clone(), x.clone(), c.clone());
        }
    }
    s
}

fn criterion_7() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let build = |name: &str| {
        let a = alg(name);
        let g = posetgraph::build_generator_graph(&a).unwrap();
        (a, g)
    };
    let (_, a2) = build("A2");
    let chains = posetgraph::maximal_chains(&a2, true).len();
    out.push(CheckResult::from_bool(
        "A2 has 6 vertices and 2 maximal chains",
        a2.vertices.len() == 6 && chains == 2,
        format!("{} vertices, {chains} chains", a2.vertices.len()),
    ));

    let (_, b2) = build("B2");
    let labels: Vec<String> =
        b2.hasse_edges().filter(|e| !e.label.is_zero()).map(|e| format!("{} 1+{}", b2.edge_name(e), e.label)).collect();
    out.push(CheckResult::from_bool("B2 has 8 vertices", b2.vertices.len() == 8, b2.vertices.len().to_string()));
    out.push(CheckResult::from_bool("B2 single non-unit Hasse label 1+L1 on FG", labels == ["FG 1+L1"], labels.join(", ")));

    let (g2a, g2) = build("G2");
    let op = |kind: OpKind, word: &[usize], s: &GenSeries| word.iter().rev().fold(s.clone(), |acc, &i| apply(&g2a.spec, kind, i, &acc));
    let l1 = [1, 0];
    let (i, j, z) = (([1, 0], [-1, 2]), ([1, 0], [1, -2]), ([1, 0], [0, 0]));
    let zp = ([1, 0], [0, 0]);
    let (g, h, k, ell) = ((l1, [0, 1]), (l1, [1, -1]), (l1, [-1, 1]), (l1, [0, -1]));
    let d121_g = op(OpKind::Small, &[1, 2, 1], &vertex(&g2, "G", 2));
    let dn2121_l = op(OpKind::DNeg, &[2, 1, 2, 1], &vertex(&g2, "L", 2));
    let d2121_g = op(OpKind::Small, &[2, 1, 2, 1], &vertex(&g2, "G", 2));
    let dn121_l = op(OpKind::DNeg, &[1, 2, 1], &vertex(&g2, "L", 2));
    out.push(series_check("d_121 G = i + z' + J", &d121_g, &sum_of(&g2, &[i, zp], &["J"])));
    out.push(series_check("d_-2-1-2-1 L = z + i + h + g + H", &dn2121_l, &sum_of(&g2, &[z, i, h, g], &["H"])));
    out.push(series_check("d_2121 G = z + j + k + l + K", &d2121_g, &sum_of(&g2, &[z, j, k, ell], &["K"])));
    out.push(series_check("d_-1-2-1 L = j + z' + I", &dn121_l, &sum_of(&g2, &[j, zp], &["I"])));
    let single = |t: ([i64; 2], [i64; 2])| sum_of(&g2, &[t], &[]);
    // z and z' are distinct generators but the same monomial L1, so as monomials the
    // intersections below also share that term (z' on one side, z on the other).
    let with_l1 = |t| sum_of(&g2, &[t, z], &[]);
    out.push(series_check("common monomials of d_121 G and d_-2-1-2-1 L are i and L1", &common_terms(&d121_g, &dn2121_l), &with_l1(i)));
    out.push(series_check("common monomials of d_2121 G and d_-1-2-1 L are j and L1", &common_terms(&d2121_g, &dn121_l), &with_l1(j)));
    out.push(series_check("common part of d_2121 G and d_-2-1-2-1 L is z", &common_terms(&d2121_g, &dn2121_l), &single(z)));
    let hv = vertex(&g2, "H", 2);
    let db2_h = op(OpKind::Dbar, &[2], &hv);
    let via_h = [
        ("HJ", op(OpKind::Small, &[1], &db2_h)),
        ("IK", op(OpKind::Reflect, &[2], &op(OpKind::Small, &[1], &db2_h))),
        ("HK", op(OpKind::Dbar, &[2], &op(OpKind::Small, &[1], &db2_h))),
    ];
    let extra: Vec<String> = g2.extra_edges().map(|e| g2.edge_name(e)).collect();
    out.push(CheckResult::from_bool("G2 has 12 vertices", g2.vertices.len() == 12, g2.vertices.len().to_string()));
    out.push(CheckResult::from_bool(
        "G2 extra edges are HJ, IK, HK",
        extra.iter().cloned().collect::<BTreeSet<_>>() == ["HJ", "HK", "IK"].map(String::from).into(),
        extra.join(", "),
    ));
    for ((edge, from_h), want) in via_h.iter().zip([single(i), single(j), single(z)]) {
        let (a, b) = (&edge[..1], &edge[1..]);
        let label = g2.edge(g2.index_of(a).unwrap(), g2.index_of(b).unwrap()).map(|e| e.label.clone());
        out.push(series_check(format!("{edge} label from the Demazure operators on H"), from_h, &want));
        match label {
            Some(l) => out.push(series_check(format!("{edge} label in the graph"), &l, &want)),
            None => out.push(CheckResult::fail(format!("{edge} label in the graph"), "edge missing")),
        }
    }
    let chains = posetgraph::maximal_chains(&g2, true).len();
    out.push(CheckResult::from_bool("G2 extended chain count is 12", chains == 12, chains.to_string()));
    out
}

fn criterion_8() -> Vec<CheckResult> {
    let start = Instant::now();
    let mut out = Vec::new();
    let a2 = alg("A2");
    let graph = posetgraph::build_generator_graph(&a2).unwrap();
    let n = 3;
    let x = genfun::x_by_definition(&a2, n).unwrap();
    let v = |s: &str| vertex(&graph, s, n);
    let br = |s: &str| v(s).bracket().unwrap();
    let eq117 = &(&(&(&br("A") * &br("B")) * &(&br("D") + &(&v("C") * &br("C")))) * &br("E")) * &br("F");
    let eq119a = &(&(&(&br("C") * &br("A")) * &(&br("E") + &(&v("B") * &br("B")))) * &br("F")) * &br("D");
    let eq119b = &(&(&(&br("B") * &br("C")) * &(&br("F") + &(&v("A") * &br("A")))) * &br("D")) * &br("E");
    out.push(series_check("[A][B]([D] + C[C])[E][F] = X", &eq117, &x));
    out.push(series_check("[C][A]([E] + B[B])[F][D] = X", &eq119a, &x));
    out.push(series_check("[B][C]([F] + A[A])[D][E] = X", &eq119b, &x));
    for (triple, want) in [(["B", "C", "E"], ["[ABDEF]", "[AB]C[CEF]"]), (["B", "D", "E"], ["[ABCEF]", "[AB]D[DEF]"])] {
        let linking = Linking::from_letters(&graph, &[triple]).unwrap();
        let terms = posetgraph::baclawski_terms(&a2, &graph, &linking).unwrap();
        let mut rendered: Vec<String> = terms.iter().map(|t| t.render(&graph)).collect();
        rendered.sort();
        let tag = triple.join(">");
        out.push(CheckResult::from_bool(format!("Link- {{{tag}}} chain terms"), rendered == want, rendered.join(" + ")));
        let value = posetgraph::baclawski_x(&a2, n, Some(&linking)).unwrap();
        out.push(series_check(format!("Link- {{{tag}}} value equals [A][B]([D] + C[C])[E][F]"), &value, &eq117));
    }
    for name in ["A1", "A2", "A3"] {
        let a = alg(name);
        let x = genfun::x_by_definition(&a, 2).unwrap();
        out.push(series_check(format!("{name} multichain sum = X at N=2"), &posetgraph::x_via_multichains(&a, 2).unwrap(), &x));
    }
    out.push(timing("criterion 8", start.elapsed(), 30));
    out
}

fn criterion_9() -> Vec<CheckResult> {
    let n = 3;
    ["A1", "A2", "B2", "G2"]
        .iter()
        .map(|name| {
            let a = alg(name);
            let zx = &genfun::z_denominator(&a, n).unwrap() * &genfun::x_by_definition(&a, n).unwrap();
            let y = genfun::y_via_chhat(&a).unwrap().y.with_trunc(n);
            series_check(format!("{name} Z X = Y mod degree > {n}"), &zx, &y)
        })
        .collect()
}

type Criterion = (&'static str, fn() -> Vec<CheckResult>);

fn main() {
    let criteria: [Criterion; 9] = [
        ("Y golden values", criterion_1),
        ("route agreement", criterion_2),
        ("character engine", criterion_3),
        ("Demazure worked example", criterion_4),
        ("operator identities", criterion_5),
        ("incompatibility layer", criterion_6),
        ("graph structure goldens", criterion_7),
        ("Baclawski layer", criterion_8),
        ("Z X = Y certification", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (title, run)) in criteria.iter().enumerate() {
        let checks = run();
        let ok = verify::all_passed(&checks);
        println!("{} criterion {}: {title}", if ok { "PASS" } else { "FAIL" }, k + 1);
        for c in &checks {
            let mark = match (c.passed, c.advisory) {
                (true, _) => "ok  ",
                (false, false) => "FAIL",
                (false, true) => "note",
            };
            println!("    {mark} {}: {}", c.name, c.detail);
        }
        if !ok {
            failed.push(k + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
    } else {
        println!("acceptance: criteria {failed:?} fail");
        std::process::exit(1);
    }
}
