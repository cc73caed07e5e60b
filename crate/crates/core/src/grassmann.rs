//! Gr(4,8) in ℙ(Λ⁴𝕆): Plücker coordinates and relations, affine charts,
//! straightening into chart variables, and the localized Cayley equations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::exactnum::{Matrix, Poly, PolyRing, Ring, Q};
use crate::exterior::{calibrations, pullback4, sort_sign, wedge4, IndexSet, MultiVector};
use crate::liegroups::eigenbasis_change;
use crate::octonion::Octonion;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GrassmannError {
    #[error("the vectors are linearly dependent")]
    DegeneratePlane,
    #[error("{0} is not a 4-subset")]
    NotFourSubset(IndexSet),
}

/// Homogeneous coordinates `p_I`, indexed by the 70 four-subsets in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PluckerPoint {
    coords: Vec<Q>,
}

impl PluckerPoint {
    pub fn from_fn(f: impl Fn(IndexSet) -> Q) -> Self {
        PluckerPoint { coords: IndexSet::all(4).into_iter().map(f).collect() }
    }

    pub fn from_multivector(m: &MultiVector) -> Self {
        Self::from_fn(|s| m.coeff(s))
    }

    /// The coordinate point `p_I = 1`, all others 0.
    pub fn coordinate(set: IndexSet) -> Self {
        Self::from_fn(|s| if s == set { Q::one() } else { Q::zero() })
    }

    pub fn get(&self, set: IndexSet) -> &Q {
        &self.coords[set.lex_rank4()]
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Q::is_zero)
    }

    /// Scaled so that the first nonzero coordinate (lexicographically) is 1.
    pub fn normalized(&self) -> Option<Self> {
        let lead = self.coords.iter().find(|c| !c.is_zero())?;
        let inv = lead.inv().ok()?;
        Some(PluckerPoint { coords: self.coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn projectively_equal(&self, other: &Self) -> bool {
        match (self.normalized(), other.normalized()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Every Plücker quadric vanishes.
    pub fn on_grassmannian(&self) -> bool {
        plucker_relations().iter().all(|r| r.eval(self).is_zero())
    }
}

/// Coefficients of `v₁∧v₂∧v₃∧v₄`.
pub fn plucker_of_plane(v: [&Octonion; 4]) -> Result<PluckerPoint, GrassmannError> {
    let p = PluckerPoint::from_multivector(&wedge4(v));
    if p.is_zero() {
        Err(GrassmannError::DegeneratePlane)
    } else {
        Ok(p)
    }
}

/// `p` of an arbitrary index sequence: the sorting sign times `p_sorted`,
/// or nothing when an index repeats.
fn signed_set(seq: &[u8]) -> Option<(i32, IndexSet)> {
    let s = sort_sign(seq);
    (s != 0).then(|| (s, IndexSet::of(seq)))
}

/// `Σ_k (−1)^{k−1} p_{i₁i₂i₃j_k} p_{j₁…ĵ_k…j₅} = 0` for a triple `i` and an
/// ordered five-tuple `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerRelation {
    pub triple: [u8; 3],
    pub five: [u8; 5],
    /// Nonvanishing terms `(sign, K, L)` standing for `sign · p_K p_L`,
    /// the k-th term of the sum (1-based) at position k−1 when present.
    pub terms: Vec<(i32, IndexSet, IndexSet)>,
    /// Position in the sum of each entry of `terms`.
    pub positions: Vec<usize>,
}

impl PluckerRelation {
    pub fn new(triple: [u8; 3], five: [u8; 5]) -> Self {
        let mut terms = Vec::new();
        let mut positions = Vec::new();
        for k in 0..5 {
            let left = [triple[0], triple[1], triple[2], five[k]];
            let right: Vec<u8> = (0..5).filter(|&m| m != k).map(|m| five[m]).collect();
            if let (Some((s1, a)), Some((s2, b))) = (signed_set(&left), signed_set(&right)) {
                let sign = if k % 2 == 0 { 1 } else { -1 } * s1 * s2;
                terms.push((sign, a, b));
                positions.push(k);
            }
        }
        PluckerRelation { triple, five, terms, positions }
    }

    /// The quadric in the 70 variables `p_I` (variable index = lex rank).
    pub fn poly(&self) -> Poly {
        let mut out = Poly::zero();
        for (s, a, b) in &self.terms {
            let t = Poly::var(a.lex_rank4() as u16).mul_ref(&Poly::var(b.lex_rank4() as u16));
            out = out.add_ref(&t.scale(&Q::from_int(*s as i64)));
        }
        out
    }

    pub fn eval(&self, p: &PluckerPoint) -> Q {
        self.terms.iter().map(|(s, a, b)| &(p.get(*a) * p.get(*b)) * &Q::from_int(*s as i64)).sum()
    }
}

/// Variable names `p0123`, … for the ambient ℙ(Λ⁴).
pub fn plucker_ring() -> PolyRing {
    PolyRing::new(IndexSet::all(4).into_iter().map(|s| format!("p{s}")))
}

/// All relations over sorted triples and sorted five-sets, dropping those
/// that vanish identically and identifying relations equal up to a scalar.
pub fn plucker_relations() -> &'static [PluckerRelation] {
    static RELS: OnceLock<Vec<PluckerRelation>> = OnceLock::new();
    RELS.get_or_init(|| {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for t in IndexSet::all(3) {
            for f in IndexSet::all(5) {
                let triple: [u8; 3] = t.to_vec().try_into().expect("3");
                let five: [u8; 5] = f.to_vec().try_into().expect("5");
                let r = PluckerRelation::new(triple, five);
                let p = r.poly();
                let Some((_, lead)) = p.terms().next() else { continue };
                let lead = lead.clone();
                let key = format!("{:?}", p.scale(&lead.inv().expect("nonzero")));
                if seen.insert(key) {
                    out.push(r);
                }
            }
        }
        out
    })
}

/// Basis in which the Plücker coordinates are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Basis {
    /// `e_I`.
    Standard,
    /// `ẽ_I`, the torus eigenbasis.
    Tilde,
}

/// The affine chart `p_base ≠ 0` with coordinates `q_I = p_I / p_base`,
/// `|I ∩ base| = 3`.
#[derive(Clone, Debug)]
pub struct Chart {
    base: IndexSet,
    variables: Vec<IndexSet>,
    ring: PolyRing,
    straightened: Vec<Poly>,
}

impl Chart {
    pub fn new(base: IndexSet) -> Result<Self, GrassmannError> {
        if base.len() != 4 {
            return Err(GrassmannError::NotFourSubset(base));
        }
        let variables: Vec<IndexSet> =
            IndexSet::all(4).into_iter().filter(|s| s.intersection(base).len() == 3).collect();
        debug_assert_eq!(variables.len(), 16);
        let ring = PolyRing::new(variables.iter().map(|v| format!("q{v}")));
        let mut chart = Chart { base, variables, ring, straightened: Vec::new() };
        let mut memo: BTreeMap<IndexSet, Poly> = BTreeMap::new();
        chart.straightened = IndexSet::all(4).into_iter().map(|t| chart.straighten_rec(t, &mut memo)).collect();
        Ok(chart)
    }

    /// Shared instance per base.
    pub fn get(base: IndexSet) -> &'static Chart {
        static CHARTS: OnceLock<Vec<OnceLock<Chart>>> = OnceLock::new();
        let slots = CHARTS.get_or_init(|| (0..70).map(|_| OnceLock::new()).collect());
        slots[base.lex_rank4()].get_or_init(|| Chart::new(base).expect("four-subset"))
    }

    pub fn base(&self) -> IndexSet {
        self.base
    }

    pub fn variables(&self) -> &[IndexSet] {
        &self.variables
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn variable_index(&self, set: IndexSet) -> Option<usize> {
        self.variables.iter().position(|&v| v == set)
    }

    /// The Plücker relation used to rewrite `q_target`: triple
    /// `target ∖ {j}` and five-tuple `(j, base…)` for the smallest
    /// `j ∈ target ∖ base`.
    pub fn rewriting_relation(&self, target: IndexSet) -> Option<PluckerRelation> {
        let j = target.difference(self.base).members().next()?;
        if target.intersection(self.base).len() >= 3 {
            return None;
        }
        let triple: [u8; 3] = target.remove(j).to_vec().try_into().expect("3");
        let b = self.base.to_vec();
        Some(PluckerRelation::new(triple, [j, b[0], b[1], b[2], b[3]]))
    }

    fn straighten_rec(&self, target: IndexSet, memo: &mut BTreeMap<IndexSet, Poly>) -> Poly {
        if target == self.base {
            return Poly::one();
        }
        if let Some(k) = self.variable_index(target) {
            return Poly::var(k as u16);
        }
        if let Some(p) = memo.get(&target) {
            return p.clone();
        }
        // p_target p_base = −Σ_{k≥2} (±) p_K p_L; divide by p_base².
        // Each K gains one element of base, each L is a chart variable.
        let rel = self.rewriting_relation(target).expect("target is neither base nor a chart variable");
        let (lead_sign, a, b) = rel.terms[0];
        debug_assert!(rel.positions[0] == 0 && a == target && b == self.base);
        let mut acc = Poly::zero();
        for &(s, k, l) in &rel.terms[1..] {
            let t = self.straighten_rec(k, memo).mul_ref(&self.straighten_rec(l, memo));
            acc = acc.add_ref(&t.scale(&Q::from_int(-(s * lead_sign) as i64)));
        }
        memo.insert(target, acc.clone());
        acc
    }

    /// `q_target` as a polynomial in the 16 chart variables.
    pub fn straighten(&self, target: IndexSet) -> Poly {
        self.straightened[target.lex_rank4()].clone()
    }

    /// 4×8 matrix whose row space is the generic plane of the chart: the
    /// base columns form the identity and its 4×4 minors are `q_I`.
    pub fn matrix(&self) -> Matrix<Poly> {
        let b = self.base.to_vec();
        let mut m: Matrix<Poly> = Matrix::zeros(4, 8);
        for (r, &br) in b.iter().enumerate() {
            m.set(r, br as usize, Poly::one());
        }
        for (r, &br) in b.iter().enumerate() {
            for x in 0..8u8 {
                if self.base.contains(x) {
                    continue;
                }
                let set = self.base.remove(br).insert(x);
                let k = self.variable_index(set).expect("chart variable");
                // the minor on `set` picks up the sign of moving column x
                // into the slot of b_r
                let mut cols: Vec<u8> = b.clone();
                cols[r] = x;
                let s = sort_sign(&cols);
                m.set(r, x as usize, Poly::var(k as u16).scale(&Q::from_int(s as i64)));
            }
        }
        m
    }

    /// `q_target` as the 4×4 minor of [`Chart::matrix`]; an independent
    /// route to the same polynomial as [`Chart::straighten`].
    pub fn minor_oracle(&self, target: IndexSet) -> Poly {
        self.matrix().submatrix(&[0, 1, 2, 3], &target.indices()).det_laplace()
    }

    /// Chart coordinates of a point with `p_base ≠ 0`.
    pub fn coordinates(&self, p: &PluckerPoint) -> Option<Vec<Q>> {
        let inv = p.get(self.base).inv().ok()?;
        Some(self.variables.iter().map(|&v| p.get(v) * &inv).collect())
    }

    /// Whether `p` lies in the chart.
    pub fn contains(&self, p: &PluckerPoint) -> bool {
        !p.get(self.base).is_zero()
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{}", self.base)
    }
}

/// The seven linear functionals cutting X out of Gr(4,8), in Plücker
/// coordinates of the requested basis. Standard: the components of Ξ.
/// Tilde: the same functionals rewritten in ẽ-coordinates, each scaled so
/// that its lexicographically first coefficient is 1.
pub fn cayley_functionals(basis: Basis) -> &'static [MultiVector] {
    static STD: OnceLock<Vec<MultiVector>> = OnceLock::new();
    static TILDE: OnceLock<Vec<MultiVector>> = OnceLock::new();
    match basis {
        Basis::Standard => STD.get_or_init(|| (1..=7).map(|k| calibrations().xi.component(k).clone()).collect()),
        Basis::Tilde => TILDE.get_or_init(|| {
            transported_functionals()
                .into_iter()
                .map(|f| {
                    let lead = f.terms().next().map(|(_, c)| c.clone()).expect("nonzero functional");
                    f.scale(&lead.inv().expect("nonzero"))
                })
                .collect()
        }),
    }
}

/// `f_k` rewritten in ẽ-coordinates without rescaling: since
/// `p_I = Σ_J det C[I,J] p̃_J`, the coefficient on `p̃_J` is
/// `Σ_I a_I det C[I,J]`.
pub fn transported_functionals() -> Vec<MultiVector> {
    let c = eigenbasis_change();
    cayley_functionals(Basis::Standard).iter().map(|f| pullback4(&c, f)).collect()
}

/// Seven polynomials in the 16 chart variables.
#[derive(Clone, Debug)]
pub struct LocalizedSystem {
    pub chart: IndexSet,
    pub basis: Basis,
    pub equations: Vec<Poly>,
}

impl LocalizedSystem {
    pub fn chart(&self) -> &'static Chart {
        Chart::get(self.chart)
    }

    pub fn eval(&self, q: &[Q]) -> Vec<Q> {
        self.equations.iter().map(|e| e.eval(q).expect("polynomial")).collect()
    }

    /// One line `fk = …` per equation, terms in graded-lex order.
    pub fn canonical_text(&self) -> String {
        let ring = self.chart().ring();
        let mut s = String::new();
        for (k, e) in self.equations.iter().enumerate() {
            s.push_str(&format!("f{} = {}\n", k + 1, ring.display(e)));
        }
        s
    }
}

/// Substitute the straightened coordinates into linear functionals.
pub fn localize(chart: &Chart, functionals: &[MultiVector]) -> Vec<Poly> {
    functionals
        .iter()
        .map(|f| f.terms().fold(Poly::zero(), |acc, (set, c)| acc.add_ref(&chart.straighten(*set).scale(c))))
        .collect()
}

pub fn localized_equations(chart: IndexSet, basis: Basis) -> LocalizedSystem {
    let ch = Chart::get(chart);
    LocalizedSystem { chart, basis, equations: localize(ch, cayley_functionals(basis)) }
}

/// Entry (i, j): coefficient of the j-th chart variable in the linear part
/// of equation i.
pub fn jacobian_at_origin(sys: &LocalizedSystem) -> Matrix<Q> {
    jacobian_of(&sys.equations)
}

pub fn jacobian_of(eqs: &[Poly]) -> Matrix<Q> {
    let mut m = Matrix::zeros(eqs.len(), 16);
    for (i, e) in eqs.iter().enumerate() {
        for (v, c) in e.linear_part() {
            m.set(i, v as usize, c);
        }
    }
    m
}

/// The full 7×16 Jacobian of partial derivatives.
pub fn jacobian_matrix(sys: &LocalizedSystem) -> Matrix<Poly> {
    Matrix::from_fn(sys.equations.len(), 16, |i, j| sys.equations[i].partial(j as u16))
}

/// Ξ vanishes on the plane.
pub fn is_cayley_plane(v: [&Octonion; 4]) -> Result<bool, GrassmannError> {
    let p = plucker_of_plane(v)?;
    Ok(cayley_functionals(Basis::Standard).iter().all(|f| f.terms().map(|(s, c)| c * p.get(*s)).sum::<Q>().is_zero()))
}
