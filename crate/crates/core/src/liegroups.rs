//! The maximal torus h(λ,μ,γ) of Spin(7,ℂ) and its weights, the three
//! SL(2,ℂ) actions, and the Lie algebra 𝔤₂ with its Cartan subalgebra,
//! roots and the parabolic 𝔭₂.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Matrix, Monomial, Poly, PolyRing, Ring, Q};
use crate::exterior::{calibrations, pullback4, IndexSet, MultiVector};
use crate::golden;
use crate::octonion::Quaternion;

/// Exponents `(a, b, c)` of the character λᵃμᵇγᶜ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct WeightVector {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl WeightVector {
    pub const ZERO: WeightVector = WeightVector { a: 0, b: 0, c: 0 };

    pub fn new(a: i64, b: i64, c: i64) -> Self {
        WeightVector { a, b, c }
    }

    /// Pairing with a one-parameter subgroup `t ↦ h(tˣ, tʸ, tᶻ)`.
    pub fn pair(self, sub: [i64; 3]) -> i64 {
        self.a * sub[0] + self.b * sub[1] + self.c * sub[2]
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl From<[i64; 3]> for WeightVector {
    fn from([a, b, c]: [i64; 3]) -> Self {
        WeightVector { a, b, c }
    }
}

impl From<WeightVector> for [i64; 3] {
    fn from(w: WeightVector) -> Self {
        [w.a, w.b, w.c]
    }
}

impl Add for WeightVector {
    type Output = WeightVector;
    fn add(self, o: Self) -> Self {
        WeightVector::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for WeightVector {
    type Output = WeightVector;
    fn sub(self, o: Self) -> Self {
        WeightVector::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for WeightVector {
    type Output = WeightVector;
    fn neg(self) -> Self {
        WeightVector::new(-self.a, -self.b, -self.c)
    }
}

impl std::iter::Sum for WeightVector {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// Monomial notation, e.g. `λ^2μ^-1γ`; the zero weight prints as `1`.
impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("1");
        }
        for (sym, e) in [("λ", self.a), ("μ", self.b), ("γ", self.c)] {
            match e {
                0 => {}
                1 => f.write_str(sym)?,
                _ => write!(f, "{sym}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Laurent polynomial matrix over ℚ(i).
pub type LaurentMatrix = Matrix<Poly>;

/// Variables λ, μ, γ of the symbolic torus.
pub fn torus_ring() -> PolyRing {
    PolyRing::new(["λ", "μ", "γ"])
}

fn laurent_var(v: u16, e: i32) -> Poly {
    Poly::term(Monomial::from_pairs([(v, e)]), Q::one())
}

/// `L_t = [[P, −iM], [iM, P]]` with `P = (t + t⁻¹)/2`, `M = (t − t⁻¹)/2`,
/// where `t = x^e` for the variable `x`.
pub fn l_block(var: u16, e: i32) -> LaurentMatrix {
    let half = Q::ratio(1, 2);
    let t = laurent_var(var, e);
    let ti = laurent_var(var, -e);
    let p = t.add_ref(&ti).scale(&half);
    let m = t.sub_ref(&ti).scale(&half);
    let i = Q::i();
    Matrix::from_rows(vec![vec![p.clone(), m.scale(&-&i)], vec![m.scale(&i), p]]).expect("2x2")
}

fn identity_poly(n: usize) -> LaurentMatrix {
    Matrix::identity(n)
}

/// The three factors `A_λ = L_λ⁴`, `B_μ = L_μ ⊕ L_{μ⁻¹} ⊕ I₄`,
/// `C_γ = I₄ ⊕ L_γ ⊕ L_{γ⁻¹}` with the exponent of each variable scaled by
/// `exps` (so `exps = (1,1,1)` is the generic torus element).
pub fn torus_factors_in(vars: [u16; 3], exps: [i32; 3]) -> [LaurentMatrix; 3] {
    let [l, m, g] = vars;
    let [el, em, eg] = exps;
    let i2 = identity_poly(2);
    let a = Matrix::direct_sum(&[&l_block(l, el), &l_block(l, el), &l_block(l, el), &l_block(l, el)]);
    let b = Matrix::direct_sum(&[&l_block(m, em), &l_block(m, -em), &i2, &i2]);
    let c = Matrix::direct_sum(&[&i2, &i2, &l_block(g, eg), &l_block(g, -eg)]);
    [a, b, c]
}

/// `h(λ, μ, γ) = A_λ B_μ C_γ` as a Laurent matrix in the standard basis.
pub fn torus_matrix_symbolic() -> LaurentMatrix {
    let [a, b, c] = torus_factors_in([0, 1, 2], [1, 1, 1]);
    a.mul(&b).and_then(|ab| ab.mul(&c)).expect("8x8")
}

/// `h(tᵃ, tᵇ, tᶜ)` as a Laurent matrix in the single variable `t`.
pub fn torus_matrix(a: i32, b: i32, c: i32) -> LaurentMatrix {
    let [x, y, z] = torus_factors_in([0, 0, 0], [a, b, c]);
    x.mul(&y).and_then(|xy| xy.mul(&z)).expect("8x8")
}

/// `h(λ, μ, γ)` at nonzero scalar arguments.
pub fn torus_at(l: &Q, m: &Q, g: &Q) -> Matrix<Q> {
    let h = torus_matrix_symbolic();
    let pt = [l.clone(), m.clone(), g.clone()];
    h.map(|p| p.eval(&pt).expect("nonzero torus parameters"))
}

/// Columns are ẽ₀, …, ẽ₇ in e-coordinates: ẽ₂ₖ = e₂ₖ + i·e₂ₖ₊₁ and
/// ẽ₂ₖ₊₁ = e₂ₖ − i·e₂ₖ₊₁. It maps ẽ-coordinates to e-coordinates; its
/// inverse ([`eigenbasis_change_inverse`]) goes the other way.
pub fn eigenbasis_change() -> Matrix<Q> {
    let mut c = Matrix::zeros(8, 8);
    for k in 0..4 {
        c.set(2 * k, 2 * k, Q::one());
        c.set(2 * k + 1, 2 * k, Q::i());
        c.set(2 * k, 2 * k + 1, Q::one());
        c.set(2 * k + 1, 2 * k + 1, -Q::i());
    }
    c
}

pub fn eigenbasis_change_inverse() -> Matrix<Q> {
    static INV: OnceLock<Matrix<Q>> = OnceLock::new();
    INV.get_or_init(|| eigenbasis_change().inverse().expect("invertible")).clone()
}

/// Express a matrix given in the standard basis in the ẽ basis: `C⁻¹ M C`.
pub fn to_tilde<T: Ring>(m: &Matrix<T>, lift: impl Fn(&Q) -> T) -> Matrix<T> {
    let c = eigenbasis_change().map(&lift);
    let ci = eigenbasis_change_inverse().map(&lift);
    ci.mul(m).and_then(|x| x.mul(&c)).expect("8x8")
}

/// Read the character of a diagonal Laurent entry `λᵃμᵇγᶜ`.
fn monomial_weight(p: &Poly) -> Option<WeightVector> {
    let mut it = p.terms();
    let (m, c) = it.next()?;
    if it.next().is_some() || !c.is_one() {
        return None;
    }
    let mut w = [0i64; 3];
    for &(v, e) in m.pairs() {
        *w.get_mut(v as usize)? = e as i64;
    }
    Some(w.into())
}

/// The diagonal of `C⁻¹ h C`, if it is diagonal with monomial entries.
pub fn diagonal_weights(h: &LaurentMatrix) -> Option<[WeightVector; 8]> {
    let d = to_tilde(h, |x| Poly::constant(x.clone()));
    for r in 0..8 {
        for c in 0..8 {
            if r != c && !d.get(r, c).is_zero() {
                return None;
            }
        }
    }
    let ws: Option<Vec<WeightVector>> = (0..8).map(|k| monomial_weight(d.get(k, k))).collect();
    ws.map(|v| v.try_into().expect("eight"))
}

fn basis_weights() -> &'static [WeightVector; 8] {
    static W: OnceLock<[WeightVector; 8]> = OnceLock::new();
    W.get_or_init(|| diagonal_weights(&torus_matrix_symbolic()).expect("the eigenbasis diagonalises h"))
}

/// Character by which h scales ẽᵢ, read off the diagonalised torus.
pub fn weight_of_basis(i: usize) -> WeightVector {
    basis_weights()[i]
}

/// Character of ẽ_I: the sum of the member weights.
pub fn weight_of_plucker(set: IndexSet) -> WeightVector {
    set.members().map(|k| weight_of_basis(k as usize)).sum()
}

/// Φ in ẽ-coordinates: the coefficient on ẽ^J is Φ(ẽ_{j₁}, …, ẽ_{j₄}).
pub fn phi_tilde() -> MultiVector {
    pullback4(&eigenbasis_change(), &calibrations().big_phi)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvarianceFailure {
    #[error("L_λ is not in SO(2): {0}")]
    NotSpecialOrthogonal(String),
    #[error("pullback of Φ differs at e^{key}: {value}")]
    Pullback { key: String, value: String },
    #[error("Φ has a component of nonzero weight {weight} on ẽ^{key}")]
    WeightSupport { key: String, weight: String },
    #[error("the torus element is not diagonalised by the eigenbasis")]
    NotDiagonal,
    #[error("the two invariance criteria disagree (pullback {pullback}, weight support {weights})")]
    Disagreement { pullback: bool, weights: bool },
    #[error("SL(2) action {action}, generator {generator}: X·Φ ≠ 0")]
    Infinitesimal { action: usize, generator: char },
}

/// SO(2) identities for L: `Lᵀ_λ = L_{λ⁻¹}`, `L_λ L_{λ⁻¹} = I`, `det L_λ = 1`
/// and `L_λ L_μ = L_{λμ}`, all as Laurent identities.
pub fn verify_l_block_identities() -> Result<(), InvarianceFailure> {
    let l = l_block(0, 1);
    let li = l_block(0, -1);
    let fail = |s: &str| Err(InvarianceFailure::NotSpecialOrthogonal(s.to_string()));
    if l.transpose() != li {
        return fail("transpose is not the inverse parameter");
    }
    if l.mul(&li).expect("2x2") != identity_poly(2) {
        return fail("L_λ L_λ⁻¹ ≠ I");
    }
    if !l.det_laplace().sub_ref(&Poly::one()).is_zero() {
        return fail("det ≠ 1");
    }
    // L_λ L_μ = L_{λμ}: compare with the block built from the product monomial
    let lm = l.mul(&l_block(1, 1)).expect("2x2");
    let half = Q::ratio(1, 2);
    let t = Poly::term(Monomial::from_pairs([(0, 1), (1, 1)]), Q::one());
    let ti = Poly::term(Monomial::from_pairs([(0, -1), (1, -1)]), Q::one());
    let p = t.add_ref(&ti).scale(&half);
    let m = t.sub_ref(&ti).scale(&half);
    let expected = Matrix::from_rows(vec![vec![p.clone(), m.scale(&-Q::i())], vec![m.scale(&Q::i()), p]]).expect("2x2");
    if lm != expected {
        return fail("L_λ L_μ ≠ L_λμ");
    }
    Ok(())
}

/// Direct criterion: `h*Φ = Φ` coefficient by coefficient.
pub fn pullback_invariance(h: &LaurentMatrix) -> Result<(), InvarianceFailure> {
    let phi = calibrations().big_phi.map(|c| Poly::constant(c.clone()));
    let pulled = pullback4(h, &phi);
    let diff = pulled.sub(&phi);
    let first = diff.terms().next().map(|(k, v)| (k.to_string(), format!("{v:?}")));
    match first {
        None => Ok(()),
        Some((key, value)) => Err(InvarianceFailure::Pullback { key, value }),
    }
}

/// Eigenbasis criterion: after diagonalising h, Φ may only involve ẽ^J of
/// total weight zero.
pub fn weight_support_invariance(h: &LaurentMatrix) -> Result<(), InvarianceFailure> {
    let ws = diagonal_weights(h).ok_or(InvarianceFailure::NotDiagonal)?;
    for (k, _) in phi_tilde().terms() {
        let w: WeightVector = k.members().map(|i| ws[i as usize]).sum();
        if !w.is_zero() {
            return Err(InvarianceFailure::WeightSupport { key: k.to_string(), weight: w.to_string() });
        }
    }
    Ok(())
}

/// Both criteria, which must agree; the first failure is reported.
pub fn verify_invariance_of(h: &LaurentMatrix) -> Result<(), InvarianceFailure> {
    let direct = pullback_invariance(h);
    let weights = weight_support_invariance(h);
    match (&direct, &weights) {
        (Ok(()), Ok(())) => Ok(()),
        (Err(_), Err(_)) => direct,
        _ => Err(InvarianceFailure::Disagreement { pullback: direct.is_ok(), weights: weights.is_ok() }),
    }
}

/// The torus lies in Spin(7,ℂ): SO(2) identities for L_λ and invariance of
/// Φ under h(λ,μ,γ), checked both directly and through weights.
pub fn verify_spin7_invariance() -> Result<(), InvarianceFailure> {
    verify_l_block_identities()?;
    verify_invariance_of(&torus_matrix_symbolic())
}

/// h with the first A-block replaced by L_{λ²}; not in Spin(7).
pub fn perturbed_torus() -> LaurentMatrix {
    let mut h = torus_matrix_symbolic();
    let [_, b, c] = torus_factors_in([0, 1, 2], [1, 1, 1]);
    let l = l_block(0, 1);
    let a = Matrix::direct_sum(&[&l_block(0, 2), &l, &l, &l]);
    h = a.mul(&b).and_then(|x| x.mul(&c)).unwrap_or(h);
    h
}

// ---------------------------------------------------------------------------
// SL(2,ℂ) actions on 𝕆 = ℍ ⊕ 𝐥ℍ, v = x + 𝐥y.

/// Which of the three actions: 1: `(xg⁻¹, y)`, 2: `(x, yg⁻¹)`, 3: `(gx, gy)`.
pub const SL2_ACTIONS: [usize; 3] = [1, 2, 3];

/// Matrix of `g ∈ SL(2,ℂ)` (a unit quaternion) under action `which`.
pub fn sl2_action_matrix(which: usize, g: &Quaternion) -> Matrix<Q> {
    let i4 = Matrix::identity(4);
    match which {
        1 => Matrix::direct_sum(&[&g.inv().expect("unit quaternion").right_matrix(), &i4]),
        2 => Matrix::direct_sum(&[&i4, &g.inv().expect("unit quaternion").right_matrix()]),
        3 => {
            let l = g.left_matrix();
            Matrix::direct_sum(&[&l, &l])
        }
        _ => panic!("action index must be 1, 2 or 3"),
    }
}

/// Derivative at the identity of action `which` along `ξ ∈ Im ℍ`.
pub fn sl2_infinitesimal(which: usize, xi: &Quaternion) -> Matrix<Q> {
    let z = Matrix::zeros(4, 4);
    match which {
        1 => Matrix::direct_sum(&[&xi.right_matrix().scale(&-Q::one()), &z]),
        2 => Matrix::direct_sum(&[&z, &xi.right_matrix().scale(&-Q::one())]),
        3 => {
            let l = xi.left_matrix();
            Matrix::direct_sum(&[&l, &l])
        }
        _ => panic!("action index must be 1, 2 or 3"),
    }
}

/// The unit quaternion corresponding to `[[1, u], [0, 1]]`.
pub fn unipotent_quaternion(u: &Q) -> Quaternion {
    let m = Matrix::from_rows(vec![vec![Q::one(), u.clone()], vec![Q::zero(), Q::one()]]).expect("2x2");
    Quaternion::from_sl2(&m)
}

/// Matrix of the unipotent `[[1, u], [0, 1]]` under action `which`, derived
/// from the action itself.
pub fn sl2_unipotent(which: usize, u: &Q) -> Matrix<Q> {
    sl2_action_matrix(which, &unipotent_quaternion(u))
}

/// The block matrices diag(A, I₄), diag(I₄, A), diag(B, B) built from
/// `golden/unipotent.json`, evaluated at `u`. Only diag(B, B) preserves Φ;
/// [`sl2_unipotent`] is the derived replacement for all three actions.
pub fn reference_unipotent(which: usize, u: &Q) -> Matrix<Q> {
    let g = golden::bundled();
    let ev = |m: &Matrix<Poly>| m.map(|p| p.eval(std::slice::from_ref(u)).expect("polynomial"));
    let (a, b) = (ev(&g.unipotent_a), ev(&g.unipotent_b));
    let i4 = Matrix::identity(4);
    match which {
        1 => Matrix::direct_sum(&[&a, &i4]),
        2 => Matrix::direct_sum(&[&i4, &a]),
        3 => Matrix::direct_sum(&[&b, &b]),
        _ => panic!("action index must be 1, 2 or 3"),
    }
}

/// `(a, b, c)·(x, y) = (c x a⁻¹, c y b⁻¹)`.
pub fn combined_action(a: &Quaternion, b: &Quaternion, c: &Quaternion) -> Matrix<Q> {
    let ai = a.inv().expect("unit").right_matrix();
    let bi = b.inv().expect("unit").right_matrix();
    let lc = c.left_matrix();
    let top = lc.mul(&ai).expect("4x4");
    let bottom = lc.mul(&bi).expect("4x4");
    Matrix::direct_sum(&[&top, &bottom])
}

/// 𝐢·Φ = 𝐣·Φ = 𝐤·Φ = 0 for each of the three actions.
pub fn sl2_lie_invariance() -> Result<(), InvarianceFailure> {
    let phi = &calibrations().big_phi;
    for which in SL2_ACTIONS {
        for (k, name) in [(1, 'i'), (2, 'j'), (3, 'k')] {
            let x = sl2_infinitesimal(which, &Quaternion::basis(k));
            if !phi.act_on_form(&x).is_zero() {
                return Err(InvarianceFailure::Infinitesimal { action: which, generator: name });
            }
        }
    }
    Ok(())
}

/// `M` is B-orthogonal: `MᵀM = I`.
pub fn is_orthogonal(m: &Matrix<Q>) -> bool {
    m.transpose().mul(m).map(|p| p == Matrix::identity(m.rows())).unwrap_or(false)
}

/// Whether `M*Φ = Φ`.
pub fn preserves_phi(m: &Matrix<Q>) -> bool {
    let phi = &calibrations().big_phi;
    &pullback4(m, phi) == phi
}

// ---------------------------------------------------------------------------
// 𝔰𝔬(7), 𝔤₂ and root data. Elements of 𝔰𝔬(7) are stored as 8×8 matrices
// acting on Im 𝕆 = span(e₁..e₇) with row and column 0 zero.

pub type LieAlgebraElement = Matrix<Q>;

/// `E_ij − E_ji` for 1 ≤ i < j ≤ 7, in lexicographic order.
pub fn so7_basis() -> Vec<LieAlgebraElement> {
    let mut out = Vec::new();
    for i in 1..8 {
        for j in i + 1..8 {
            let mut m = Matrix::zeros(8, 8);
            m.set(i, j, Q::one());
            m.set(j, i, -Q::one());
            out.push(m);
        }
    }
    out
}

pub fn is_antisymmetric(x: &LieAlgebraElement) -> bool {
    x.transpose().add(x).map(|s| s.is_zero()).unwrap_or(false)
}

pub fn bracket(x: &Matrix<Q>, y: &Matrix<Q>) -> Matrix<Q> {
    x.mul(y).and_then(|a| y.mul(x).and_then(|b| a.sub(&b))).expect("square")
}

fn flatten(m: &Matrix<Q>) -> Vec<Q> {
    m.entries().to_vec()
}

fn unflatten(v: &[Q]) -> Matrix<Q> {
    Matrix::from_fn(8, 8, |r, c| v[r * 8 + c].clone())
}

/// Coordinates of `x` in a basis, if it lies in the span.
pub fn coordinates_in(basis: &[Matrix<Q>], x: &Matrix<Q>) -> Option<Vec<Q>> {
    let cols: Vec<Vec<Q>> = basis.iter().map(flatten).collect();
    let target = flatten(x);
    let n = cols.len();
    let aug = Matrix::from_fn(64, n + 1, |r, c| if c < n { cols[c][r].clone() } else { target[r].clone() });
    let (red, pivots) = aug.rref();
    if pivots.contains(&n) {
        return None;
    }
    let mut out = vec![Q::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        out[p] = red.get(row, n).clone();
    }
    Some(out)
}

/// Dimension of the span of a set of matrices.
pub fn span_dim(ms: &[Matrix<Q>]) -> usize {
    if ms.is_empty() {
        return 0;
    }
    Matrix::from_rows(ms.iter().map(flatten).collect()).expect("uniform").rank()
}

/// `span(a) = span(b)`.
pub fn same_span(a: &[Matrix<Q>], b: &[Matrix<Q>]) -> bool {
    let joint: Vec<Matrix<Q>> = a.iter().chain(b).cloned().collect();
    let (ra, rb, rj) = (span_dim(a), span_dim(b), span_dim(&joint));
    ra == rj && rb == rj
}

/// A basis of `{X ∈ 𝔰𝔬(7) : X·φ = 0}`, as the kernel of 𝔰𝔬(7) → Λ³.
pub fn g2_lie_algebra() -> Vec<LieAlgebraElement> {
    static G2: OnceLock<Vec<LieAlgebraElement>> = OnceLock::new();
    G2.get_or_init(|| {
        let phi = &calibrations().phi;
        let so7 = so7_basis();
        let triples = IndexSet::all(3);
        let images: Vec<MultiVector> = so7.iter().map(|x| phi.act_on_form(x)).collect();
        let m = Matrix::from_fn(triples.len(), so7.len(), |r, c| images[c].coeff(triples[r]));
        m.kernel_basis()
            .into_iter()
            .map(|v| {
                so7.iter().zip(&v).fold(Matrix::zeros(8, 8), |acc, (b, c)| acc.add(&b.scale(c)).expect("8x8"))
            })
            .collect()
    })
    .clone()
}

/// Lie(T) in the standard basis: the derivatives of h at λ = μ = γ = 1.
pub fn torus_lie_algebra() -> [Matrix<Q>; 3] {
    let j = Matrix::from_rows(vec![vec![Q::zero(), -Q::i()], vec![Q::i(), Q::zero()]]).expect("2x2");
    let nj = j.scale(&-Q::one());
    let z = Matrix::zeros(2, 2);
    [
        Matrix::direct_sum(&[&j, &j, &j, &j]),
        Matrix::direct_sum(&[&j, &nj, &z, &z]),
        Matrix::direct_sum(&[&z, &z, &j, &nj]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("Cartan subalgebra is not regular: {0}")]
    NonRegularCartan(String),
    #[error("positivity choice is ambiguous: {0}")]
    AmbiguousChamber(String),
}

/// A root of 𝔤₂ as a functional on the Cartan basis `(H₁, H₂)`, with its
/// root space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    pub values: [Q; 2],
    pub positive: bool,
    #[serde(skip)]
    pub space: Vec<LieAlgebraElement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootData {
    /// `H₁ = H_a − H_b`, `H₂ = H_c`.
    pub cartan: Vec<Matrix<Q>>,
    /// Gram matrix of the trace form on the Cartan basis.
    pub gram: Matrix<Q>,
    pub roots: Vec<Root>,
    /// Indices into `roots` of (α₁, α₂), α₂ long.
    pub simple: (usize, usize),
    pub length_ratio: Q,
    /// The 𝔥-weight of ẽ₀₂₄₆ used to orient the positive roots.
    pub highest: [Q; 2],
    #[serde(skip)]
    pub p2: Vec<LieAlgebraElement>,
}

impl RootData {
    /// `⟨α, β⟩` induced by the trace form on 𝔥.
    pub fn inner(&self, a: &[Q; 2], b: &[Q; 2]) -> Q {
        let gi = self.gram.inverse().expect("nondegenerate");
        let mut acc = Q::zero();
        for (r, x) in a.iter().enumerate() {
            for (c, y) in b.iter().enumerate() {
                acc += &(&(x * gi.get(r, c)) * y);
            }
        }
        acc
    }

    pub fn alpha1(&self) -> &Root {
        &self.roots[self.simple.0]
    }

    pub fn alpha2(&self) -> &Root {
        &self.roots[self.simple.1]
    }

    pub fn root_space(&self, values: &[Q; 2]) -> Option<&Root> {
        self.roots.iter().find(|r| &r.values == values)
    }
}

fn positive_real(q: &Q) -> bool {
    use num_traits::Signed;
    q.is_real() && q.re_num().is_positive()
}

/// Restrict a torus weight to 𝔥: `(x, y, z) ↦ (x − y, z)`.
pub fn restrict_to_cartan(w: WeightVector) -> [Q; 2] {
    [Q::from_int(w.a - w.b), Q::from_int(w.c)]
}

/// Cartan subalgebra `𝔥 = 𝔤₂ ∩ Lie(T)`, root decomposition, the positive
/// system making ẽ₀₂₄₆ highest, simple roots, and `𝔭₂`.
pub fn cartan_roots_parabolic() -> Result<RootData, RootError> {
    let g2 = g2_lie_algebra();
    // 𝔥: combinations of Lie(T) lying in 𝔤₂
    let t = torus_lie_algebra();
    let mut cols: Vec<Vec<Q>> = t.iter().map(flatten).collect();
    cols.extend(g2.iter().map(|x| flatten(&x.scale(&-Q::one()))));
    let sys = Matrix::from_fn(64, cols.len(), |r, c| cols[c][r].clone());
    let cartan_raw: Vec<Matrix<Q>> = sys
        .kernel_basis()
        .into_iter()
        .map(|v| t.iter().zip(&v).fold(Matrix::zeros(8, 8), |acc, (h, c)| acc.add(&h.scale(c)).expect("8x8")))
        .collect();
    if span_dim(&cartan_raw) != 2 {
        return Err(RootError::NonRegularCartan(format!("dim 𝔤₂ ∩ Lie(T) = {}", span_dim(&cartan_raw))));
    }
    let h1 = t[0].sub(&t[1]).expect("8x8");
    let h2 = t[2].clone();
    let cartan = vec![h1, h2];
    if !same_span(&cartan, &cartan_raw) {
        return Err(RootError::NonRegularCartan("𝔥 is not spanned by H_a − H_b and H_c".into()));
    }
    let trace = |x: &Matrix<Q>, y: &Matrix<Q>| -> Q {
        let p = x.mul(y).expect("8x8");
        (0..8).map(|k| p.get(k, k).clone()).sum()
    };
    let gram = Matrix::from_fn(2, 2, |r, c| trace(&cartan[r], &cartan[c]));

    // root decomposition through the ẽ basis, where 𝔥 is diagonal
    let rho: Vec<[Q; 2]> = (0..8).map(|k| restrict_to_cartan(weight_of_basis(k))).collect();
    let c = eigenbasis_change();
    let ci = eigenbasis_change_inverse();
    let tilde: Vec<Matrix<Q>> = g2.iter().map(|x| ci.mul(x).and_then(|y| y.mul(&c)).expect("8x8")).collect();
    type RootKey = (String, String);
    let mut by_root: BTreeMap<RootKey, ([Q; 2], Vec<Matrix<Q>>)> = BTreeMap::new();
    for xt in &tilde {
        let mut parts: BTreeMap<RootKey, ([Q; 2], Matrix<Q>)> = BTreeMap::new();
        for p in 0..8 {
            for q in 0..8 {
                let v = xt.get(p, q);
                if v.is_zero() {
                    continue;
                }
                let root = [&rho[p][0] - &rho[q][0], &rho[p][1] - &rho[q][1]];
                let key = (root[0].to_string(), root[1].to_string());
                let entry = parts.entry(key).or_insert_with(|| (root, Matrix::zeros(8, 8)));
                entry.1.set(p, q, v.clone());
            }
        }
        for (key, (root, m)) in parts {
            let back = c.mul(&m).and_then(|y| y.mul(&ci)).expect("8x8");
            by_root.entry(key).or_insert_with(|| (root, Vec::new())).1.push(back);
        }
    }
    let zero = [Q::zero(), Q::zero()];
    let mut roots = Vec::new();
    for (_, (values, ms)) in by_root {
        let d = span_dim(&ms);
        if values == zero {
            if d != 2 {
                return Err(RootError::NonRegularCartan(format!("zero weight space has dimension {d}")));
            }
            continue;
        }
        if d != 1 {
            return Err(RootError::NonRegularCartan(format!("root space of dimension {d}")));
        }
        let (red, _) = Matrix::from_rows(ms.iter().map(flatten).collect()).expect("uniform").rref();
        roots.push(Root { values, positive: false, space: vec![unflatten(red.row(0))] });
    }
    if roots.len() != 12 {
        return Err(RootError::NonRegularCartan(format!("{} nonzero roots", roots.len())));
    }

    let highest = restrict_to_cartan(weight_of_plucker(IndexSet::of(&[0, 2, 4, 6])));
    let mut data = RootData {
        cartan,
        gram,
        roots,
        simple: (0, 0),
        length_ratio: Q::zero(),
        highest: highest.clone(),
        p2: Vec::new(),
    };

    // positivity: pair with the highest weight, breaking ties on the wall by
    // either sign of the second Cartan coordinate; both chambers are tried
    let mut outcomes = Vec::new();
    for tie in [1i64, -1] {
        let positive: Vec<bool> = data
            .roots
            .iter()
            .map(|r| {
                let s = data.inner(&highest, &r.values);
                if !s.is_zero() {
                    positive_real(&s)
                } else {
                    let x = &r.values[1] * &Q::from_int(tie);
                    positive_real(&x) || (x.is_zero() && positive_real(&r.values[0]))
                }
            })
            .collect();
        let pos_idx: Vec<usize> = (0..12).filter(|&k| positive[k]).collect();
        let is_sum = |k: usize| {
            pos_idx.iter().any(|&a| {
                pos_idx.iter().any(|&b| {
                    a != b
                        && (&data.roots[a].values[0] + &data.roots[b].values[0]) == data.roots[k].values[0]
                        && (&data.roots[a].values[1] + &data.roots[b].values[1]) == data.roots[k].values[1]
                })
            })
        };
        let simple: Vec<usize> = pos_idx.iter().copied().filter(|&k| !is_sum(k)).collect();
        if pos_idx.len() != 6 || simple.len() != 2 {
            return Err(RootError::NonRegularCartan(format!("{} positive, {} simple roots", pos_idx.len(), simple.len())));
        }
        let len = |k: usize| data.inner(&data.roots[k].values, &data.roots[k].values);
        let (s0, s1) = (simple[0], simple[1]);
        let (short, long) = if positive_real(&(&len(s1) - &len(s0))) { (s0, s1) } else { (s1, s0) };
        let ratio = &len(long) / &len(short);
        // ẽ₀₂₄₆ must be dominant: nonnegative pairing with both simple roots
        let dominant = [short, long].iter().all(|&k| !positive_real(&-data.inner(&highest, &data.roots[k].values)));
        let neg_long = [-&data.roots[long].values[0], -&data.roots[long].values[1]];
        let mut p2: Vec<Matrix<Q>> = data.cartan.clone();
        for &k in &pos_idx {
            p2.extend(data.roots[k].space.iter().cloned());
        }
        let nl = data.roots.iter().find(|r| r.values == neg_long).expect("roots come in ± pairs");
        p2.extend(nl.space.iter().cloned());
        outcomes.push((positive, (short, long), ratio, dominant, p2));
    }
    let dominant: Vec<_> = outcomes.into_iter().filter(|o| o.3).collect();
    if dominant.is_empty() {
        return Err(RootError::AmbiguousChamber("no chamber makes ẽ₀₂₄₆ dominant".into()));
    }
    if dominant.len() == 2 && !same_span(&dominant[0].4, &dominant[1].4) {
        return Err(RootError::AmbiguousChamber("the dominant chambers give different 𝔭₂".into()));
    }
    let (positive, simple, ratio, _, p2) = dominant.into_iter().next().expect("nonempty");
    for (r, p) in data.roots.iter_mut().zip(positive) {
        r.positive = p;
    }
    data.simple = simple;
    data.length_ratio = ratio;
    data.p2 = p2;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn torus_examples() {
        assert_eq!(torus_matrix(0, 0, 0), Matrix::identity(8));
        let l = l_block(0, 1);
        assert_eq!(l.det_laplace(), Poly::one());
        // L_λ (1, i)ᵀ = λ (1, i)ᵀ
        let v = [Poly::one(), Poly::constant(Q::i())];
        let lv = l.apply(&v);
        let lam = Poly::var(0);
        assert_eq!(lv, vec![lam.clone(), lam.scale(&Q::i())]);
        verify_l_block_identities().unwrap();
    }

    #[test]
    fn factors_commute_and_kernel() {
        let [a, b, c] = torus_factors_in([0, 1, 2], [1, 1, 1]);
        for (x, y) in [(&a, &b), (&a, &c), (&b, &c)] {
            assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
        }
        let m1 = -Q::one();
        assert_eq!(torus_at(&m1, &m1, &m1), Matrix::identity(8));
        let (l, m, g) = (Q::from_int(2), Q::ratio(1, 3), Q::new(1, 1, 1));
        assert_eq!(torus_at(&l, &m, &g), torus_at(&-&l, &-&m, &-&g));
    }

    #[test]
    fn eigenbasis_examples() {
        let c = eigenbasis_change();
        assert_eq!(c.column(2), vec![Q::zero(), Q::zero(), Q::one(), Q::i(), Q::zero(), Q::zero(), Q::zero(), Q::zero()]);
        assert!(!c.det().is_zero());
        assert_eq!(weight_of_basis(4), WeightVector::new(1, 0, 1));
        assert_eq!(weight_of_basis(2), WeightVector::new(1, -1, 0));
        assert_eq!(weight_of_plucker(IndexSet::of(&[0, 1, 2, 3])), WeightVector::ZERO);
        assert_eq!(weight_of_plucker(IndexSet::of(&[1, 3, 5, 6])), WeightVector::new(-2, 0, -2));
        let distinct: std::collections::BTreeSet<_> = (0..8).map(weight_of_basis).collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn spin7_membership() {
        verify_spin7_invariance().unwrap();
        assert!(verify_invariance_of(&Matrix::identity(8)).is_ok());
        assert!(verify_invariance_of(&perturbed_torus()).is_err());
        assert!(pullback_invariance(&perturbed_torus()).is_err());
        assert!(weight_support_invariance(&perturbed_torus()).is_err());
    }

    #[test]
    fn unipotent_quaternion_matches_sl2_matrix() {
        let u = Q::from_int(3);
        let g = unipotent_quaternion(&u);
        assert_eq!(g, Quaternion::new(Q::one(), Q::ratio(-3, 2), Q::new(0, -3, 2), Q::zero()));
        assert_eq!(g.norm(), Q::one());
    }

    #[test]
    fn derived_unipotents_preserve_b_and_phi() {
        assert_eq!(sl2_unipotent(1, &Q::zero()), Matrix::identity(8));
        for which in SL2_ACTIONS {
            for u in [Q::from_int(3), Q::new(1, -2, 3)] {
                let m = sl2_unipotent(which, &u);
                assert!(is_orthogonal(&m), "action {which}");
                assert!(preserves_phi(&m), "action {which}");
            }
        }
    }

    #[test]
    fn reference_unipotent_blocks() {
        let u = Q::one();
        let b = reference_unipotent(3, &u);
        assert_eq!(b.get(6, 6), &Q::ratio(3, 2));
        assert_eq!(b.get(6, 7), &Q::new(0, -1, 2));
        for which in SL2_ACTIONS {
            assert!(is_orthogonal(&reference_unipotent(which, &Q::from_int(2))));
        }
        // diag(B, B) preserves Φ; the reference A-blocks do not
        assert!(preserves_phi(&reference_unipotent(3, &Q::from_int(2))));
        assert!(!preserves_phi(&reference_unipotent(1, &Q::from_int(2))));
        assert!(!preserves_phi(&reference_unipotent(2, &Q::from_int(2))));
    }

    #[test]
    fn infinitesimal_invariance() {
        sl2_lie_invariance().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = Matrix::from_fn(8, 8, |_, _| crate::octonion::random_scalar(&mut rng));
        let skew = x.sub(&x.transpose()).unwrap();
        assert!(!calibrations().big_phi.act_on_form(&skew).is_zero());
    }

    #[test]
    fn combined_action_kernel() {
        let m1 = Quaternion::one().scale(&-Q::one());
        assert_eq!(combined_action(&m1, &m1, &m1), Matrix::identity(8));
        let g = unipotent_quaternion(&Q::from_int(2));
        assert_ne!(combined_action(&g, &g, &g), Matrix::identity(8));
    }

    #[test]
    fn g2_basics() {
        let g2 = g2_lie_algebra();
        assert_eq!(g2.len(), 14);
        let phi = &calibrations().phi;
        for x in &g2 {
            assert!(is_antisymmetric(x));
            assert!(phi.act_on_form(x).is_zero());
        }
        for x in &g2 {
            for y in &g2 {
                assert!(coordinates_in(&g2, &bracket(x, y)).is_some());
            }
        }
    }

    #[test]
    fn root_data() {
        let rd = cartan_roots_parabolic().unwrap();
        assert_eq!(rd.roots.len(), 12);
        assert_eq!(rd.roots.iter().filter(|r| r.positive).count(), 6);
        assert_eq!(rd.length_ratio, Q::from_int(3));
        assert_eq!(span_dim(&rd.p2), 9);
        assert!(rd.inner(&rd.highest, &rd.alpha2().values).is_zero());
        for r in &rd.roots {
            let neg = [-&r.values[0], -&r.values[1]];
            assert!(rd.root_space(&neg).is_some());
        }
    }
}
