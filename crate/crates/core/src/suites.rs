//! Check suites behind the CLI subcommands. Each suite compares computed
//! values with the reference tables in a [`Golden`].

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::exactnum::{Matrix, Q};
use crate::exterior::{compute_calibrations, eval4, hodge_star7, IndexSet, MultiVector};
use crate::geometry::{
    analyze_all, bb_cell_counts, classify_smoothness, compare_tangent, fixed_point_candidates, fixed_points_in_x,
    isolation_certificates, stabilizer_check, subgroup_is_regular, tangent_weights, verify_sigma_description,
    FixedPointRecord, TAU,
};
use crate::golden::Golden;
use crate::grassmann::{cayley_functionals, is_cayley_plane, jacobian_at_origin, localized_equations, Basis, Chart};
use crate::liegroups::{
    cartan_roots_parabolic, combined_action, eigenbasis_change, g2_lie_algebra, perturbed_torus, preserves_phi,
    reference_unipotent, pullback_invariance, sl2_infinitesimal, sl2_unipotent, span_dim, torus_at,
    torus_matrix_symbolic, verify_invariance_of, verify_l_block_identities, weight_of_basis, weight_support_invariance,
    SL2_ACTIONS,
};
use crate::octonion::{cross4, random_orthogonal, random_scalar, table, Octonion, Quaternion};
use crate::report::{timed, CheckResult, Report, Section};

/// Samples per randomized property.
pub const SAMPLES: usize = 200;
const SEED: u64 = 0x0c7a_4e5f;

fn one(f: impl FnOnce() -> CheckResult) -> Vec<CheckResult> {
    timed(|| vec![f()])
}

fn count_ok(samples: usize, mut f: impl FnMut(&mut ChaCha8Rng) -> bool) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..samples).filter(|_| f(&mut rng)).count()
}

fn e(k: usize) -> Octonion {
    Octonion::basis(k)
}

fn tilde_vector(k: usize) -> Octonion {
    Octonion(eigenbasis_change().column(k).try_into().expect("eight"))
}

/// Composition-algebra identities on seeded random samples.
pub fn algebra(_g: &Golden) -> Report {
    let mut checks = Vec::new();
    checks.extend(one(|| {
        let t = table();
        let ok = (0..8).all(|i| t.get(0, i).index as usize == i && t.get(i, 0).index as usize == i)
            && (1..8).all(|i| {
                let s = t.get(i, i);
                s.index == 0 && s.sign == -1
            });
        CheckResult::predicate("algebra.table.unit_and_squares", ok, "e0 unit, ei² = −1", ok)
    }));
    checks.extend(one(|| {
        let actual = json!({
            "e1*e2": format!("{:?}", e(1).mul(&e(2))),
            "e4*e2": format!("{:?}", e(4).mul(&e(2))),
            "e4 x e5": format!("{:?}", e(4).mul(&e(5)).im()),
        });
        CheckResult::compare("algebra.products", json!({"e1*e2": "(1)e3", "e4*e2": "(1)e6", "e4 x e5": "(-1)e1"}), actual)
    }));
    let prop = |id: &str, f: &mut dyn FnMut(&mut ChaCha8Rng) -> bool| {
        let id = id.to_string();
        one(move || CheckResult::compare(id, SAMPLES, count_ok(SAMPLES, f)))
    };
    checks.extend(prop("algebra.composition", &mut |r| {
        let (u, v) = (Octonion::random(r), Octonion::random(r));
        u.mul(&v).norm() == &u.norm() * &v.norm()
    }));
    checks.extend(prop("algebra.norm_scaling", &mut |r| {
        let (u, v, w) = (Octonion::random(r), Octonion::random(r), Octonion::random(r));
        let lhs = &u.norm() * &v.bilinear(&w);
        lhs == u.mul(&v).bilinear(&u.mul(&w)) && lhs == v.mul(&u).bilinear(&w.mul(&u))
    }));
    checks.extend(prop("algebra.conjugation_anti_involution", &mut |r| {
        let (u, v) = (Octonion::random(r), Octonion::random(r));
        u.mul(&v).conj() == v.conj().mul(&u.conj()) && u.conj().conj() == u
    }));
    checks.extend(prop("algebra.alternativity", &mut |r| {
        let (a, b) = (Octonion::random(r), Octonion::random(r));
        a.mul(&a).mul(&b) == a.mul(&a.mul(&b)) && a.mul(&b).mul(&b) == a.mul(&b.mul(&b))
    }));
    checks.extend(prop("algebra.cross4_alternating", &mut |r| {
        let v: Vec<Octonion> = (0..4).map(|_| Octonion::random(r)).collect();
        let s = random_scalar(r);
        let base = cross4(&v[0], &v[1], &v[2], &v[3]);
        let swapped = cross4(&v[1], &v[0], &v[2], &v[3]);
        let repeated = cross4(&v[0], &v[1], &v[0], &v[3]);
        let scaled = cross4(&v[0].scale(&s), &v[1], &v[2], &v[3]);
        (&base + &swapped).is_zero() && repeated.is_zero() && scaled == base.scale(&s)
    }));
    checks.extend(prop("algebra.cross4_norm", &mut |r| {
        let o = random_orthogonal(r, 4);
        let n: Q = o.iter().map(Octonion::norm).fold(Q::one(), |a, b| &a * &b);
        cross4(&o[0], &o[1], &o[2], &o[3]).norm() == n
    }));
    Report { checks, sections: vec![multiplication_section()] }
}

fn multiplication_section() -> Section {
    let t = table();
    Section {
        title: "multiplication table (row · column)".into(),
        headers: std::iter::once("·".to_string()).chain((0..8).map(|k| format!("e{k}"))).collect(),
        rows: (0..8)
            .map(|a| {
                std::iter::once(format!("e{a}"))
                    .chain((0..8).map(|b| {
                        let s = t.get(a, b);
                        format!("{}e{}", if s.sign < 0 { "−" } else { "" }, s.index)
                    }))
                    .collect()
            })
            .collect(),
        trailer: None,
    }
}

/// φ, Φ, Ξ term-for-term, and Φ = e⁰∧φ + *φ.
pub fn forms(g: &Golden) -> Report {
    let c = compute_calibrations();
    let mut checks = Vec::new();
    checks.extend(one(|| CheckResult::compare("forms.phi", g.forms.phi.to_json(), c.phi.to_json())));
    checks.extend(one(|| CheckResult::compare("forms.Phi", g.forms.big_phi.to_json(), c.big_phi.to_json())));
    for k in 1..=7 {
        checks.extend(one(|| {
            CheckResult::compare(format!("forms.Xi.e{k}"), g.forms.xi.component(k).to_json(), c.xi.component(k).to_json())
        }));
    }
    checks.extend(one(|| {
        CheckResult::compare("forms.term_counts", [7, 14, 56], [c.phi.len(), c.big_phi.len(), c.xi.term_count()])
    }));
    checks.extend(one(|| {
        let e0 = MultiVector::basis(IndexSet::singleton(0));
        let rhs = e0.wedge(&c.phi).expect("grade 4").add(&hodge_star7(&c.phi).expect("no e0"));
        CheckResult::compare("forms.Phi_identity", c.big_phi.to_json(), rhs.to_json())
    }));
    checks.extend(one(|| {
        let v = eval4(&c.big_phi, &e(0), &e(1), &e(2), &e(3));
        CheckResult::compare("forms.Phi(e0,e1,e2,e3)", "1", v.to_string())
    }));
    Report { checks, sections: Vec::new() }
}

fn weight_rows(map: &BTreeMap<crate::liegroups::WeightVector, Vec<IndexSet>>) -> Vec<Vec<String>> {
    map.iter()
        .map(|(w, sets)| vec![w.to_string(), sets.iter().map(|s| format!("ẽ{s}")).collect::<Vec<_>>().join(", ")])
        .collect()
}

/// Torus membership in Spin(7) and the eigen-tables.
pub fn torus(g: &Golden) -> Report {
    let mut checks = Vec::new();
    checks.extend(one(|| {
        let r = verify_l_block_identities();
        CheckResult::compare("torus.L_in_SO2", "ok", r.map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()))
    }));
    let h = torus_matrix_symbolic();
    let status = |r: Result<(), crate::liegroups::InvarianceFailure>| r.map(|_| "invariant".to_string()).unwrap_or_else(|e| e.to_string());
    checks.extend(one(|| CheckResult::compare("torus.pullback", "invariant", status(pullback_invariance(&h)))));
    checks.extend(one(|| CheckResult::compare("torus.weight_support", "invariant", status(weight_support_invariance(&h)))));
    checks.extend(one(|| CheckResult::compare("torus.criteria_agree", "invariant", status(verify_invariance_of(&h)))));
    checks.extend(one(|| {
        let r = verify_invariance_of(&perturbed_torus());
        let both_reject = pullback_invariance(&perturbed_torus()).is_err() && weight_support_invariance(&perturbed_torus()).is_err();
        CheckResult::predicate("torus.negative_control", r.is_err() && both_reject, "rejected by both criteria", status(r))
    }));
    checks.extend(one(|| {
        let m1 = -Q::one();
        CheckResult::compare("torus.kernel", true, torus_at(&m1, &m1, &m1) == Matrix::identity(8))
    }));
    checks.extend(one(|| {
        let expected: Vec<_> =
            g.eigenbasis.iter().map(|e| json!({"index": e.index, "weight": e.weight, "vector": e.vector})).collect();
        let actual: Vec<_> = (0..8)
            .map(|k| json!({"index": k, "weight": weight_of_basis(k), "vector": eigenbasis_change().column(k)}))
            .collect();
        CheckResult::compare("eigen.basis_table", expected, actual)
    }));
    let candidates = fixed_point_candidates();
    checks.extend(one(|| {
        let expected: BTreeMap<String, Vec<IndexSet>> = g.lambda4.iter().map(|r| (r.weight.to_string(), r.sets.clone())).collect();
        let actual: BTreeMap<String, Vec<IndexSet>> = candidates.iter().map(|(w, s)| (w.to_string(), s.clone())).collect();
        CheckResult::compare("eigen.lambda4_table", expected, actual)
    }));
    let sections = vec![
        Section {
            title: "eigenbasis of h(λ,μ,γ)".into(),
            headers: vec!["eigenvalue".into(), "eigenvector".into()],
            rows: (0..8)
                .map(|k| {
                    let v = eigenbasis_change().column(k);
                    let terms: Vec<String> =
                        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("({c})e{i}")).collect();
                    vec![weight_of_basis(k).to_string(), format!("ẽ{k} = {}", terms.join(" + "))]
                })
                .collect(),
            trailer: None,
        },
        Section {
            title: "Λ⁴ eigenvectors".into(),
            headers: vec!["eigenvalue".into(), "eigenvector".into()],
            rows: weight_rows(&candidates),
            trailer: None,
        },
    ];
    Report { checks, sections }
}

/// Infinitesimal and unipotent invariance for the three SL(2) actions.
pub fn sl2(g: &Golden) -> Report {
    let phi = &compute_calibrations().big_phi;
    let mut checks = Vec::new();
    for which in SL2_ACTIONS {
        for (k, name) in [(1, 'i'), (2, 'j'), (3, 'k')] {
            checks.extend(one(|| {
                let x = sl2_infinitesimal(which, &Quaternion::basis(k));
                CheckResult::compare(format!("sl2.lie.{which}.{name}"), json!({}), phi.act_on_form(&x).to_json())
            }));
        }
    }
    let us: Vec<Q> = {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        (0..10).map(|_| random_scalar(&mut rng)).collect()
    };
    for which in SL2_ACTIONS {
        checks.extend(one(|| {
            let n = us.iter().filter(|u| preserves_phi(&sl2_unipotent(which, u))).count();
            CheckResult::compare(format!("sl2.unipotent.{which}"), us.len(), n)
        }));
    }
    checks.extend(one(|| {
        let ev = |u: &Q| g.unipotent_b.map(|p| p.eval(std::slice::from_ref(u)).expect("polynomial"));
        let n = us.iter().filter(|u| preserves_phi(&Matrix::direct_sum(&[&ev(u), &ev(u)]))).count();
        CheckResult::compare("sl2.unipotent.reference_B", us.len(), n)
    }));
    checks.extend(one(|| {
        // the reference A-blocks are orthogonal but do not preserve Φ
        let n = us.iter().filter(|u| preserves_phi(&reference_unipotent(1, u))).count();
        CheckResult::compare("sl2.unipotent.reference_A_not_invariant", 0, n)
    }));
    checks.extend(one(|| {
        let m1 = Quaternion::one().scale(&-Q::one());
        CheckResult::compare("sl2.kernel", true, combined_action(&m1, &m1, &m1) == Matrix::identity(8))
    }));
    Report { checks, sections: Vec::new() }
}

/// The 44 coordinate points in X and their isolation certificates.
pub fn fixed_points(g: &Golden) -> Report {
    let mut checks = Vec::new();
    checks.extend(one(|| {
        CheckResult::compare("ftilde.reference", &g.ftilde, cayley_functionals(Basis::Tilde).to_vec())
    }));
    let pts = fixed_points_in_x();
    checks.extend(one(|| CheckResult::compare("fixed.count", 44, pts.len())));
    checks.extend(one(|| {
        let mut expected: Vec<IndexSet> = g.fixed_points.iter().flat_map(|r| r.sets.clone()).collect();
        expected.sort();
        CheckResult::compare("fixed.list", expected, &pts)
    }));
    checks.extend(one(|| {
        let ex = [IndexSet::of(&[0, 2, 5, 7]), IndexSet::of(&[1, 3, 4, 6])];
        CheckResult::compare("fixed.excluded", [false, false], ex.map(|s| pts.contains(&s)))
    }));
    checks.extend(one(|| {
        let bad: Vec<IndexSet> = pts
            .iter()
            .copied()
            .filter(|s| {
                let v: Vec<Octonion> = s.indices().into_iter().map(tilde_vector).collect();
                !is_cayley_plane([&v[0], &v[1], &v[2], &v[3]]).unwrap_or(false)
            })
            .collect();
        CheckResult::compare("fixed.cayley_planes", Vec::<IndexSet>::new(), bad)
    }));
    checks.extend(one(|| match isolation_certificates() {
        Ok(certs) => {
            let pairs: usize = fixed_point_candidates().values().map(|m| m.len() * (m.len() - 1) / 2).sum();
            let verified = certs.iter().filter(|c| c.verify()).map(|c| c.pairs.len()).sum::<usize>();
            CheckResult::compare("fixed.isolation_certificates", pairs, verified)
        }
        Err(e) => CheckResult::compare("fixed.isolation_certificates", "all pairs certified", e.to_string()),
    }));
    let rows: BTreeMap<_, Vec<IndexSet>> = fixed_point_candidates()
        .into_iter()
        .map(|(w, s)| (w, s.into_iter().filter(|p| pts.contains(p)).collect::<Vec<_>>()))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    let sections = vec![Section {
        title: "torus-fixed points in X".into(),
        headers: vec!["eigenvalue".into(), "eigenvector".into()],
        rows: weight_rows(&rows),
        trailer: Some(format!("fixed points: {}", pts.len())),
    }];
    Report { checks, sections }
}

fn rank_check(g: &Golden, p: IndexSet) -> CheckResult {
    let rec = classify_smoothness(p);
    if g.singular_points.contains(&p) {
        CheckResult::predicate(format!("rank.{p}"), rec.jacobian_rank < 4, "<4", rec.jacobian_rank)
    } else {
        CheckResult::compare(format!("rank.{p}"), 4, rec.jacobian_rank)
    }
}

/// Jacobian ranks at the fixed points; the reference chart data.
pub fn smoothness(g: &Golden, point: Option<IndexSet>) -> Report {
    let mut checks = Vec::new();
    if let Some(p) = point {
        checks.extend(one(|| rank_check(g, p)));
        return Report { checks, sections: Vec::new() };
    }
    let u0123 = IndexSet::of(&[0, 1, 2, 3]);
    checks.extend(one(|| {
        let sys = localized_equations(u0123, Basis::Standard);
        let ring = Chart::get(u0123).ring();
        let expected: Vec<String> = g.localized_u0123.iter().map(|p| g.localized_u0123_ring.display(p)).collect();
        let actual: Vec<String> = sys.equations.iter().map(|p| ring.display(p)).collect();
        CheckResult::compare("localized.0123", expected, actual)
    }));
    checks.extend(one(|| {
        let j = jacobian_at_origin(&localized_equations(u0123, Basis::Tilde));
        CheckResult::compare("jacobian.0123", &g.jacobian_0123, j)
    }));
    let pts = fixed_points_in_x();
    let recs: Vec<FixedPointRecord> = pts.iter().map(|&p| classify_smoothness(p)).collect();
    for &p in &pts {
        checks.extend(one(|| rank_check(g, p)));
    }
    checks.extend(one(|| CheckResult::compare("smooth.count", 38, recs.iter().filter(|r| r.smooth).count())));
    checks.extend(one(|| {
        let singular: Vec<IndexSet> = recs.iter().filter(|r| !r.smooth).map(|r| r.index_set).collect();
        CheckResult::compare("singular.points", &g.singular_points, singular)
    }));
    let sections = vec![Section {
        title: "Jacobian ranks".into(),
        headers: vec!["point".into(), "rank".into(), "smooth".into()],
        rows: recs.iter().map(|r| vec![format!("ẽ{}", r.index_set), r.jacobian_rank.to_string(), r.smooth.to_string()]).collect(),
        trailer: None,
    }];
    Report { checks, sections }
}

/// `∂0127 + ∂2457`, `∂0245 − ∂0267`, `(1/2)∂0124 − (i)∂0136`.
fn linear_combination(v: &BTreeMap<IndexSet, Q>) -> String {
    let mut out = String::new();
    for (n, (k, c)) in v.iter().enumerate() {
        let (neg, mag) = if c.is_real() && c.re_num().sign() == num_bigint::Sign::Minus { (true, -c) } else { (false, c.clone()) };
        out.push_str(match (n, neg) {
            (0, false) => "",
            (0, true) => "−",
            (_, false) => " + ",
            (_, true) => " − ",
        });
        if !mag.is_one() {
            out.push_str(&format!("({mag})"));
        }
        out.push_str(&format!("∂{k}"));
    }
    out
}

fn tangent_section(rec: &FixedPointRecord) -> Section {
    let mut tangent = rec.tangent.clone();
    tangent.sort_by_key(|t| t.weight);
    Section {
        title: format!("tangent space at ẽ{}", rec.index_set),
        headers: vec!["vector".into(), "weight".into()],
        rows: tangent
            .iter()
            .map(|t| {
                vec![linear_combination(&t.vector), format!("λ^{}", t.weight)]
            })
            .collect(),
        trailer: Some(format!("positive weights: {}", rec.positive_count.unwrap_or(0))),
    }
}

fn weight_check(g: &Golden, rec: &FixedPointRecord, subgroup: [i64; 3]) -> CheckResult {
    let id = format!("weights.{}", rec.index_set);
    if subgroup != g.subgroup {
        return CheckResult::skip(id, "no reference table for this subgroup");
    }
    let Some(table) = g.tangent_table(rec.index_set) else {
        return CheckResult::compare(id, "reference table", "missing");
    };
    let mut expected: Vec<i64> = table.vectors.iter().map(|t| t.weight).collect();
    expected.sort();
    let mut actual: Vec<i64> = rec.tangent.iter().map(|t| t.weight).collect();
    actual.sort();
    let exp = json!({"weights": expected, "positive": table.positive_count, "spans": "equal"});
    match compare_tangent(rec, table) {
        Ok(()) => CheckResult::compare(id, exp.clone(), exp),
        Err(msg) => CheckResult::predicate(id, false, exp, json!({"weights": actual, "positive": rec.positive_count, "spans": msg})),
    }
}

/// Tangent weights at one smooth point, or at all of them.
pub fn weights(g: &Golden, point: Option<IndexSet>, subgroup: [i64; 3]) -> Result<Report, String> {
    let recs: Vec<FixedPointRecord> = match point {
        Some(p) => vec![tangent_weights(p, subgroup).map_err(|e| e.to_string())?],
        None => analyze_all(subgroup).into_iter().filter(|r| r.smooth).collect(),
    };
    let mut checks = Vec::new();
    for r in &recs {
        checks.extend(one(|| weight_check(g, r, subgroup)));
    }
    Ok(Report { checks, sections: recs.iter().map(tangent_section).collect() })
}

/// Positive-weight histogram over the smooth fixed points.
pub fn betti(g: &Golden) -> Report {
    let recs = analyze_all(TAU);
    let mut checks = Vec::new();
    let hist = bb_cell_counts(&recs);
    checks.extend(one(|| {
        let mut expected: BTreeMap<usize, usize> = BTreeMap::new();
        for t in &g.tangent {
            *expected.entry(t.positive_count).or_insert(0) += 1;
        }
        CheckResult::compare("betti.histogram", expected, &hist)
    }));
    checks.extend(one(|| CheckResult::compare("betti.total", 38, hist.values().sum::<usize>())));
    checks.extend(one(|| CheckResult::compare("betti.tau_regular", true, subgroup_is_regular(&fixed_points_in_x(), TAU))));
    let sections = vec![Section {
        title: "positive-weight counts".into(),
        headers: vec!["positive weights".into(), "points".into()],
        rows: hist.iter().map(|(k, v)| vec![k.to_string(), v.to_string()]).collect(),
        trailer: Some(format!("smooth points: {}", hist.values().sum::<usize>())),
    }];
    Report { checks, sections }
}

/// The linear description of Σ on its chart, and Σ^T.
pub fn singular_locus(g: &Golden, chart: IndexSet) -> Report {
    let mut checks = Vec::new();
    if chart != g.sigma.chart {
        checks.push(CheckResult::skip(format!("sigma.{chart}"), "generators are only available on the reference chart"));
        return Report { checks, sections: Vec::new() };
    }
    checks.extend(timed(|| match verify_sigma_description(&g.sigma) {
        Ok(r) => vec![
            CheckResult::compare("sigma.generators", 11, r.generators),
            CheckResult::compare("sigma.equations_vanish", true, r.equations_vanish),
            CheckResult::predicate("sigma.minors_vanish", r.jacobian_rank_on_family < 4, "<4", r.jacobian_rank_on_family),
            CheckResult::compare("sigma.free_parameters", 5, r.free_variables.len()),
            CheckResult::compare("sigma.torus_stable", true, r.torus_stable),
        ],
        Err(e) => vec![CheckResult::compare("sigma.identities", "all vanish", e.to_string())],
    }));
    checks.extend(one(|| {
        let n = fixed_points_in_x().into_iter().filter(|&p| !classify_smoothness(p).smooth).count();
        CheckResult::compare("sigma.fixed_points", g.singular_points.len(), n)
    }));
    Report { checks, sections: Vec::new() }
}

/// 𝔤₂, its roots, 𝔭₂, and the stabilizer of the line ẽ₀₂₄₆.
pub fn g2_stabilizer(_g: &Golden) -> Report {
    let mut checks = Vec::new();
    checks.extend(one(|| CheckResult::compare("g2.dim", 14, g2_lie_algebra().len())));
    checks.extend(timed(|| match cartan_roots_parabolic() {
        Ok(rd) => vec![
            CheckResult::compare("g2.roots", 12, rd.roots.len()),
            CheckResult::compare("g2.length_ratio", "3", rd.length_ratio.to_string()),
            CheckResult::compare("g2.p2_dim", 9, span_dim(&rd.p2)),
        ],
        Err(e) => vec![CheckResult::compare("g2.roots", 12, e.to_string())],
    }));
    checks.extend(timed(|| match stabilizer_check() {
        Ok(r) => vec![
            CheckResult::compare("g2.stabilizer_dim", 9, r.dim_stabilizer),
            CheckResult::compare("g2.stabilizer_is_p2", true, r.equals_p2),
            CheckResult::compare("g2.stabilizer_contains_borel", true, r.contains_cartan_and_positive),
            CheckResult::compare("g2.stabilizer_excludes_minus_alpha1", true, r.excludes_minus_alpha1),
        ],
        Err(e) => vec![CheckResult::compare("g2.stabilizer_is_p2", true, e.to_string())],
    }));
    Report { checks, sections: Vec::new() }
}

/// Every suite, in a fixed order.
pub fn all(g: &Golden) -> Report {
    let mut r = Report::default();
    r.extend(algebra(g));
    r.extend(forms(g));
    r.extend(torus(g));
    r.extend(sl2(g));
    r.extend(fixed_points(g));
    r.extend(smoothness(g, None));
    r.extend(weights(g, None, g.subgroup).unwrap_or_else(|e| Report {
        checks: vec![CheckResult::compare("weights", "computed", e)],
        sections: Vec::new(),
    }));
    r.extend(betti(g));
    r.extend(singular_locus(g, g.sigma.chart));
    r.extend(g2_stabilizer(g));
    r
}
