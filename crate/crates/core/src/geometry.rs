//! Torus-fixed points of the Cayley Grassmannian X, their smoothness, the
//! tangent weights under a one-parameter subgroup, the singular locus Σ and
//! the stabilizer of its highest-weight point.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::{Matrix, Poly, Ring, Q};
use crate::exterior::{IndexSet, MultiVector};
use crate::golden::{SigmaData, TangentTable};
use crate::grassmann::{
    cayley_functionals, jacobian_at_origin, jacobian_matrix, localized_equations, Basis, Chart, PluckerRelation,
};
use crate::liegroups::{
    cartan_roots_parabolic, coordinates_in, eigenbasis_change, eigenbasis_change_inverse, g2_lie_algebra, same_span,
    span_dim, weight_of_plucker, LieAlgebraElement, RootError, WeightVector,
};

/// The one-parameter subgroup `τ(t) = h(t, t¹⁰, t¹⁰⁰)`.
pub const TAU: [i64; 3] = [1, 10, 100];

/// Dimension of X, so a smooth point has Jacobian rank 16 − 12.
pub const DIM_X: usize = 12;
pub const SMOOTH_RANK: usize = 16 - DIM_X;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("no isolating relation for the pair {0}, {1}")]
    CertificateNotFound(IndexSet, IndexSet),
    #[error("ẽ{point} is not a smooth point (Jacobian rank {rank})")]
    PointNotSmooth { point: IndexSet, rank: usize },
    #[error("the kernel at ẽ{0} does not split into τ-weight spaces")]
    WeightMixing(IndexSet),
    #[error("identity fails: {0}")]
    IdentityFailure(String),
    #[error("stabilizer mismatch, separating vector {0}")]
    MismatchReport(String),
    #[error(transparent)]
    Roots(#[from] RootError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentVector {
    /// Coefficients on the chart directions ∂_I.
    pub vector: BTreeMap<IndexSet, Q>,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointRecord {
    pub index_set: IndexSet,
    pub weight: WeightVector,
    #[serde(rename = "in_X")]
    pub in_x: bool,
    pub jacobian_rank: usize,
    pub smooth: bool,
    pub tangent: Vec<TangentVector>,
    pub positive_count: Option<usize>,
}

/// The 70 coordinate points ẽ_I grouped by torus weight.
pub fn fixed_point_candidates() -> BTreeMap<WeightVector, Vec<IndexSet>> {
    let mut out: BTreeMap<WeightVector, Vec<IndexSet>> = BTreeMap::new();
    for s in IndexSet::all(4) {
        out.entry(weight_of_plucker(s)).or_default().push(s);
    }
    out
}

/// ẽ_I lies in X iff every f̃ₖ has zero coefficient on p̃_I.
pub fn in_x(set: IndexSet) -> bool {
    cayley_functionals(Basis::Tilde).iter().all(|f| f.coeff(set).is_zero())
}

/// The coordinate points ẽ_I lying in X, in lexicographic order.
pub fn fixed_points_in_x() -> Vec<IndexSet> {
    IndexSet::all(4).into_iter().filter(|&s| in_x(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCertificate {
    pub pair: (IndexSet, IndexSet),
    pub relation: PluckerRelation,
}

/// For a weight class W: a relation `p_I p_J = Σ ± p_K p_L` per pair with
/// every `{K, L} ⊄ W`, so `p_I p_J = 0` on the eigenspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationCertificate {
    pub weight_class: WeightVector,
    pub members: Vec<IndexSet>,
    pub pairs: Vec<PairCertificate>,
}

impl IsolationCertificate {
    /// Re-check every stored relation against the class.
    pub fn verify(&self) -> bool {
        let class: BTreeSet<IndexSet> = self.members.iter().copied().collect();
        self.pairs.iter().all(|pc| certifies(&pc.relation, pc.pair, &class))
    }
}

fn certifies(rel: &PluckerRelation, (i, j): (IndexSet, IndexSet), class: &BTreeSet<IndexSet>) -> bool {
    let is_pair = |k: IndexSet, l: IndexSet| (k == i && l == j) || (k == j && l == i);
    let mut found = false;
    for &(_, k, l) in &rel.terms {
        if is_pair(k, l) {
            found = true;
        } else if class.contains(&k) && class.contains(&l) {
            return false;
        }
    }
    found
}

/// First relation, in lexicographic order of (triple, five-set), whose
/// only term inside the class is `p_I p_J`.
pub fn find_certificate(i: IndexSet, j: IndexSet, class: &BTreeSet<IndexSet>) -> Option<PluckerRelation> {
    let mut candidates = Vec::new();
    for (x, y) in [(i, j), (j, i)] {
        for a in x.difference(y).members() {
            candidates.push((x.remove(a), y.insert(a)));
        }
    }
    candidates.sort();
    candidates.into_iter().find_map(|(t, f)| {
        let rel = PluckerRelation::new(t.to_vec().try_into().ok()?, f.to_vec().try_into().ok()?);
        certifies(&rel, (i, j), class).then_some(rel)
    })
}

pub fn isolation_certificates() -> Result<Vec<IsolationCertificate>, GeometryError> {
    let mut out = Vec::new();
    for (w, members) in fixed_point_candidates() {
        if members.len() < 2 {
            continue;
        }
        let class: BTreeSet<IndexSet> = members.iter().copied().collect();
        let mut pairs = Vec::new();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let relation = find_certificate(i, j, &class).ok_or(GeometryError::CertificateNotFound(i, j))?;
                pairs.push(PairCertificate { pair: (i, j), relation });
            }
        }
        out.push(IsolationCertificate { weight_class: w, members, pairs });
    }
    Ok(out)
}

/// Jacobian of the f̃ system at the origin of the chart Ũ_point.
pub fn jacobian_at_point(point: IndexSet) -> Matrix<Q> {
    jacobian_at_origin(&localized_equations(point, Basis::Tilde))
}

/// Rank and smoothness at ẽ_point.
pub fn classify_smoothness(point: IndexSet) -> FixedPointRecord {
    let rank = jacobian_at_point(point).rank();
    FixedPointRecord {
        index_set: point,
        weight: weight_of_plucker(point),
        in_x: in_x(point),
        jacobian_rank: rank,
        smooth: rank == SMOOTH_RANK,
        tangent: Vec::new(),
        positive_count: None,
    }
}

/// τ-weight of the chart direction ∂_I at Ũ_base.
pub fn direction_weight(base: IndexSet, dir: IndexSet, subgroup: [i64; 3]) -> i64 {
    (weight_of_plucker(dir) - weight_of_plucker(base)).pair(subgroup)
}

/// The kernel of the Jacobian at ẽ_point, split into τ-weight spaces.
pub fn tangent_weights(point: IndexSet, subgroup: [i64; 3]) -> Result<FixedPointRecord, GeometryError> {
    let mut rec = classify_smoothness(point);
    if !rec.smooth {
        return Err(GeometryError::PointNotSmooth { point, rank: rec.jacobian_rank });
    }
    let j = jacobian_at_point(point);
    let vars = Chart::get(point).variables();
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (k, &v) in vars.iter().enumerate() {
        by_weight.entry(direction_weight(point, v, subgroup)).or_default().push(k);
    }
    let mut tangent = Vec::new();
    for (&w, cols) in &by_weight {
        let sub = j.submatrix(&(0..j.rows()).collect::<Vec<_>>(), cols);
        for kv in sub.kernel_basis() {
            let vector = cols.iter().zip(kv).filter(|(_, c)| !c.is_zero()).map(|(&k, c)| (vars[k], c)).collect();
            tangent.push(TangentVector { vector, weight: w });
        }
    }
    if tangent.len() != 16 - rec.jacobian_rank {
        return Err(GeometryError::WeightMixing(point));
    }
    rec.positive_count = Some(tangent.iter().filter(|t| t.weight > 0).count());
    rec.tangent = tangent;
    Ok(rec)
}

/// Compare a computed record with a reference table: weight multiset,
/// span of each weight space, and positive count.
pub fn compare_tangent(rec: &FixedPointRecord, table: &TangentTable) -> Result<(), String> {
    let multiset = |ws: Vec<i64>| {
        let mut ws = ws;
        ws.sort();
        ws
    };
    let ours = multiset(rec.tangent.iter().map(|t| t.weight).collect());
    let theirs = multiset(table.vectors.iter().map(|t| t.weight).collect());
    if ours != theirs {
        return Err(format!("weights {ours:?} vs {theirs:?}"));
    }
    if rec.positive_count != Some(table.positive_count) {
        return Err(format!("positive count {:?} vs {}", rec.positive_count, table.positive_count));
    }
    let vars = Chart::get(rec.index_set).variables();
    let row = |v: &BTreeMap<IndexSet, Q>| vars.iter().map(|s| v.get(s).cloned().unwrap_or_else(Q::zero)).collect::<Vec<_>>();
    let weights: BTreeSet<i64> = ours.into_iter().collect();
    for w in weights {
        let a: Vec<Vec<Q>> = rec.tangent.iter().filter(|t| t.weight == w).map(|t| row(&t.vector)).collect();
        let b: Vec<Vec<Q>> = table.vectors.iter().filter(|t| t.weight == w).map(|t| row(&t.vector)).collect();
        for (k, _) in table.vectors.iter().filter(|t| t.weight == w).flat_map(|t| t.vector.iter()) {
            if direction_weight(rec.index_set, *k, TAU) != w {
                return Err(format!("reference direction ∂{k} does not have weight {w}"));
            }
        }
        let rank = |rows: Vec<Vec<Q>>| Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0);
        let (ra, rb) = (rank(a.clone()), rank(b.clone()));
        let rj = rank(a.into_iter().chain(b).collect());
        if ra != rj || rb != rj {
            return Err(format!("weight space {w}: spans differ"));
        }
    }
    Ok(())
}

/// All 44 fixed points, analysed in parallel and merged in index-set order.
pub fn analyze_all(subgroup: [i64; 3]) -> Vec<FixedPointRecord> {
    with_pool(|| {
        fixed_points_in_x()
            .into_par_iter()
            .map(|p| tangent_weights(p, subgroup).unwrap_or_else(|_| classify_smoothness(p)))
            .collect()
    })
}

/// Run inside a pool capped by `CAYLEY_THREADS` (0 or unset: default).
pub fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let n = std::env::var("CAYLEY_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).unwrap_or(0);
    match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Histogram of positive-weight counts over the smooth points.
pub fn bb_cell_counts(records: &[FixedPointRecord]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for r in records.iter().filter(|r| r.smooth) {
        if let Some(c) = r.positive_count {
            *h.entry(c).or_insert(0) += 1;
        }
    }
    h
}

/// τ separates all distinct torus weights among the points, so its fixed
/// points are those of the whole torus.
pub fn subgroup_is_regular(points: &[IndexSet], subgroup: [i64; 3]) -> bool {
    points.iter().all(|&a| {
        points.iter().all(|&b| {
            let d = weight_of_plucker(a) - weight_of_plucker(b);
            d.is_zero() || d.pair(subgroup) != 0
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    pub chart: IndexSet,
    pub generators: usize,
    pub free_variables: Vec<IndexSet>,
    pub equations_vanish: bool,
    pub minors_checked: usize,
    /// Rank of the Jacobian restricted to the family, over the field of
    /// rational functions; all 4×4 minors vanish iff it is below 4.
    pub jacobian_rank_on_family: usize,
    pub torus_stable: bool,
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The linear generators cut out a family inside the chart; substituting
/// it makes the localized equations and all 4×4 minors of the Jacobian
/// vanish identically.
pub fn verify_sigma_description(sigma: &SigmaData) -> Result<SigmaReport, GeometryError> {
    let chart = Chart::get(sigma.chart);
    if sigma.variables != chart.variables() {
        return Err(GeometryError::IdentityFailure("generator variables are not the chart variables".into()));
    }
    let gens = &sigma.generators;
    for g in gens {
        if !g.constant_term().is_zero() || g.degree().unwrap_or(0) > 1 {
            return Err(GeometryError::IdentityFailure(format!("{} is not linear", sigma.ring.display(g))));
        }
    }
    let coeffs = Matrix::from_fn(gens.len(), 16, |r, c| g_coeff(&gens[r], c));
    let (red, pivots) = coeffs.rref();
    let free: Vec<usize> = (0..16).filter(|c| !pivots.contains(c)).collect();
    let mut subst: BTreeMap<u16, Poly> = BTreeMap::new();
    for (row, &p) in pivots.iter().enumerate() {
        let mut e = Poly::zero();
        for &f in &free {
            let c = red.get(row, f);
            if !c.is_zero() {
                e = e.add_ref(&Poly::var(f as u16).scale(&-c));
            }
        }
        subst.insert(p as u16, e);
    }
    let sys = localized_equations(sigma.chart, Basis::Tilde);
    let ring = chart.ring();
    for (k, e) in sys.equations.iter().enumerate() {
        let s = e.substitute(&subst).map_err(|e| GeometryError::IdentityFailure(e.to_string()))?;
        if !s.is_zero() {
            return Err(GeometryError::IdentityFailure(format!("f{} ↦ {}", k + 1, ring.display(&s))));
        }
    }
    let jac = jacobian_matrix(&sys).map(|p| p.substitute(&subst).expect("polynomial substitution"));
    // a minor using an identically zero column vanishes, so only minors
    // inside the nonzero columns need expanding
    let nonzero: Vec<usize> = (0..16).filter(|&c| (0..7).any(|r| !jac.get(r, c).is_zero())).collect();
    let row_sets = choose(7, 4);
    for cols in choose(nonzero.len(), 4) {
        let cols: Vec<usize> = cols.iter().map(|&i| nonzero[i]).collect();
        for rows in &row_sets {
            let m = jac.submatrix(rows, &cols).det_laplace();
            if !m.is_zero() {
                return Err(GeometryError::IdentityFailure(format!("minor rows {rows:?} cols {cols:?} ↦ {}", ring.display(&m))));
            }
        }
    }
    let minors_checked = row_sets.len() * choose(16, 4).len();
    // rank over rational functions: evaluate at a generic point of the family
    let generic: Vec<Q> = (0..16).map(|k| Q::new(3 + 2 * k as i64, (k as i64 % 3) - 1, 7)).collect();
    let jrank = jac.map(|p| p.eval(&generic).expect("polynomial")).rank();
    let torus_stable = gens.iter().all(|g| {
        let ws: BTreeSet<WeightVector> = g.variables().iter().map(|&v| weight_of_plucker(chart.variables()[v as usize])).collect();
        ws.len() <= 1
    });
    Ok(SigmaReport {
        chart: sigma.chart,
        generators: gens.len(),
        free_variables: free.iter().map(|&k| chart.variables()[k]).collect(),
        equations_vanish: true,
        minors_checked,
        jacobian_rank_on_family: jrank,
        torus_stable,
    })
}

fn g_coeff(p: &Poly, v: usize) -> Q {
    p.linear_part().get(&(v as u16)).cloned().unwrap_or_else(Q::zero)
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizerReport {
    pub dim_g2: usize,
    pub dim_stabilizer: usize,
    pub dim_p2: usize,
    pub equals_p2: bool,
    pub contains_cartan_and_positive: bool,
    pub excludes_minus_alpha1: bool,
    #[serde(skip)]
    pub stabilizer: Vec<LieAlgebraElement>,
}

fn tilde_of(x: &Matrix<Q>) -> Matrix<Q> {
    eigenbasis_change_inverse().mul(x).and_then(|y| y.mul(&eigenbasis_change())).expect("8x8")
}

/// `X·ẽ₀₂₄₆` for X in the standard basis.
pub fn act_on_highest(x: &Matrix<Q>) -> MultiVector {
    MultiVector::basis(IndexSet::of(&[0, 2, 4, 6])).act_on_multivector(&tilde_of(x))
}

/// `𝔰 = {X ∈ 𝔤₂ : X·ẽ₀₂₄₆ ∈ ℂ ẽ₀₂₄₆}` compared with 𝔭₂.
pub fn stabilizer_check() -> Result<StabilizerReport, GeometryError> {
    let g2 = g2_lie_algebra();
    let line = IndexSet::of(&[0, 2, 4, 6]);
    let images: Vec<MultiVector> = g2.iter().map(act_on_highest).collect();
    let sets = IndexSet::all(4);
    // unknowns x₁..x₁₄ and c with Σ xₖ (Xₖ·v) − c v = 0
    let n = g2.len();
    let sys = Matrix::from_fn(70, n + 1, |r, c| {
        if c < n {
            images[c].coeff(sets[r])
        } else if sets[r] == line {
            -Q::one()
        } else {
            Q::zero()
        }
    });
    let stab: Vec<Matrix<Q>> = sys
        .kernel_basis()
        .into_iter()
        .map(|v| g2.iter().zip(&v).fold(Matrix::zeros(8, 8), |acc, (x, c)| acc.add(&x.scale(c)).expect("8x8")))
        .filter(|m| !m.is_zero())
        .collect();
    let rd = cartan_roots_parabolic()?;
    let dim_stabilizer = span_dim(&stab);
    let equals_p2 = same_span(&stab, &rd.p2);
    let mut must_contain: Vec<Matrix<Q>> = rd.cartan.clone();
    for r in rd.roots.iter().filter(|r| r.positive) {
        must_contain.extend(r.space.iter().cloned());
    }
    let contains = must_contain.iter().all(|x| coordinates_in(&stab, x).is_some());
    let a1 = &rd.alpha1().values;
    let neg = [-&a1[0], -&a1[1]];
    let x = &rd.root_space(&neg).expect("negative root").space[0];
    let moved = act_on_highest(x);
    let excludes = moved.terms().any(|(k, _)| *k != line);
    let report = StabilizerReport {
        dim_g2: g2.len(),
        dim_stabilizer,
        dim_p2: span_dim(&rd.p2),
        equals_p2,
        contains_cartan_and_positive: contains,
        excludes_minus_alpha1: excludes,
        stabilizer: stab,
    };
    if !equals_p2 {
        let sep = rd
            .p2
            .iter()
            .find(|x| coordinates_in(&report.stabilizer, x).is_none())
            .map(|x| format!("{x:?} ∈ 𝔭₂ ∖ 𝔰"))
            .or_else(|| {
                report.stabilizer.iter().find(|x| coordinates_in(&rd.p2, x).is_none()).map(|x| format!("{x:?} ∈ 𝔰 ∖ 𝔭₂"))
            })
            .unwrap_or_default();
        return Err(GeometryError::MismatchReport(sep));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    fn s(x: &str) -> IndexSet {
        x.parse().unwrap()
    }

    #[test]
    fn candidates_match_reference() {
        let c = fixed_point_candidates();
        assert_eq!(c.values().map(Vec::len).sum::<usize>(), 70);
        let zero: Vec<IndexSet> = ["0123", "0145", "0167", "0257", "1346", "2345", "2367", "4567"].iter().map(|x| s(x)).collect();
        assert_eq!(c[&WeightVector::ZERO], zero);
        assert_eq!(weight_of_plucker(s("0246")), WeightVector::new(4, 0, 0));
        let reference: BTreeMap<WeightVector, Vec<IndexSet>> =
            golden::bundled().lambda4.iter().map(|r| (r.weight, r.sets.clone())).collect();
        assert_eq!(c, reference);
    }

    #[test]
    fn fixed_points_match_reference() {
        let pts = fixed_points_in_x();
        assert_eq!(pts.len(), 44);
        assert!(!pts.contains(&s("0257")) && !pts.contains(&s("1346")));
        assert!(pts.contains(&s("0123")));
        let reference: Vec<IndexSet> = {
            let mut v: Vec<IndexSet> = golden::bundled().fixed_points.iter().flat_map(|r| r.sets.clone()).collect();
            v.sort();
            v
        };
        assert_eq!(pts, reference);
    }

    #[test]
    fn certificates_exist() {
        let certs = isolation_certificates().unwrap();
        assert!(certs.iter().all(IsolationCertificate::verify));
        let zero = certs.iter().find(|c| c.weight_class.is_zero()).unwrap();
        let pc = zero.pairs.iter().find(|p| p.pair == (s("0123"), s("4567"))).unwrap();
        for &(_, k, l) in &pc.relation.terms {
            if (k, l) != (s("0123"), s("4567")) && (k, l) != (s("4567"), s("0123")) {
                let split = |a: IndexSet| (a.intersection(s("0123")).len(), a.intersection(s("4567")).len());
                assert!(matches!(split(k), (3, 1) | (1, 3)) && matches!(split(l), (3, 1) | (1, 3)));
            }
        }
        let gm2 = weight_of_plucker(s("0156"));
        assert_eq!(gm2, weight_of_plucker(s("2356")));
        assert!(certs.iter().any(|c| c.weight_class == gm2 && c.pairs.iter().any(|p| p.pair == (s("0156"), s("2356")))));
    }

    #[test]
    fn smoothness_classification() {
        assert_eq!(classify_smoothness(s("0123")).jacobian_rank, 4);
        let singular: Vec<IndexSet> = fixed_points_in_x().into_iter().filter(|&p| !classify_smoothness(p).smooth).collect();
        assert_eq!(singular, golden::bundled().singular_points);
    }

    #[test]
    fn rank_agrees_between_bases() {
        // the transported (unscaled) functionals give the same ranks
        let tr = crate::grassmann::transported_functionals();
        for p in fixed_points_in_x() {
            let eqs = crate::grassmann::localize(Chart::get(p), &tr);
            assert_eq!(crate::grassmann::jacobian_of(&eqs).rank(), classify_smoothness(p).jacobian_rank);
        }
    }

    #[test]
    fn tangent_examples() {
        let r = tangent_weights(s("0247"), TAU).unwrap();
        assert_eq!(r.positive_count, Some(1));
        assert_eq!(direction_weight(s("0247"), s("0124"), TAU), -110);
        assert_eq!(tangent_weights(s("4567"), TAU).unwrap().positive_count, Some(6));
        assert_eq!(tangent_weights(s("1356"), TAU).unwrap().positive_count, Some(11));
        assert!(matches!(tangent_weights(s("0246"), TAU), Err(GeometryError::PointNotSmooth { .. })));
        let g = golden::bundled();
        for p in [s("0247"), s("4567"), s("1356")] {
            compare_tangent(&tangent_weights(p, TAU).unwrap(), g.tangent_table(p).unwrap()).unwrap();
        }
    }

    #[test]
    fn regular_subgroup() {
        assert!(subgroup_is_regular(&fixed_points_in_x(), TAU));
        assert!(!subgroup_is_regular(&fixed_points_in_x(), [1, 1, 0]));
    }

    #[test]
    fn sigma() {
        let r = verify_sigma_description(&golden::bundled().sigma).unwrap();
        assert_eq!(r.generators, 11);
        assert_eq!(r.free_variables.len(), 5);
        assert!(r.torus_stable);
        assert!(r.jacobian_rank_on_family < 4);
        // dropping a generator leaves a family on which f̃ does not vanish
        let mut bad = golden::bundled().sigma.clone();
        bad.generators.remove(0);
        assert!(verify_sigma_description(&bad).is_err());
    }

    #[test]
    fn stabilizer() {
        let r = stabilizer_check().unwrap();
        assert_eq!(r.dim_stabilizer, 9);
        assert!(r.contains_cartan_and_positive && r.excludes_minus_alpha1);
    }
}
