//! Exterior algebra on ℂ⁸: index sets, sparse multivectors, wedge, the
//! seven-dimensional Hodge star, pullback of forms, and the calibrations
//! φ, Φ, Ξ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{Matrix, Ring, Q};
use crate::golden;
use crate::octonion::{cross3, cross4, Octonion};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("wedge of grades {0} and {1} exceeds 8")]
    GradeOverflow(usize, usize),
    #[error("Hodge star on the imaginary 7-space needs index sets inside 1..7, got {0}")]
    IndexZeroPresent(IndexSet),
    #[error("invalid index set {0:?}")]
    InvalidIndexSet(String),
    #[error("computed {form} disagrees with the reference expansion at {key}: computed {computed}, expected {expected}")]
    TableValidationFailure { form: String, key: String, computed: String, expected: String },
}

/// A subset of {0,…,7}, stored as a bitmask and ordered lexicographically
/// on its sorted members (so 0123 < 0124 < … < 4567).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u8);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_mask(mask: u8) -> Self {
        IndexSet(mask)
    }

    pub fn new(members: &[u8]) -> Result<Self, ExteriorError> {
        let mut m = 0u8;
        for &k in members {
            if k > 7 || m & (1 << k) != 0 {
                return Err(ExteriorError::InvalidIndexSet(format!("{members:?}")));
            }
            m |= 1 << k;
        }
        Ok(IndexSet(m))
    }

    /// Panicking constructor for literals, e.g. `IndexSet::of(&[0, 2, 4, 6])`.
    pub fn of(members: &[u8]) -> Self {
        Self::new(members).expect("valid index set")
    }

    pub fn singleton(k: u8) -> Self {
        IndexSet(1 << k)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, k: u8) -> bool {
        k < 8 && self.0 & (1 << k) != 0
    }

    pub fn members(self) -> impl Iterator<Item = u8> {
        (0..8u8).filter(move |&k| self.0 & (1 << k) != 0)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.members().collect()
    }

    pub fn indices(self) -> Vec<usize> {
        self.members().map(usize::from).collect()
    }

    pub fn union(self, o: IndexSet) -> IndexSet {
        IndexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: IndexSet) -> IndexSet {
        IndexSet(self.0 & o.0)
    }

    pub fn difference(self, o: IndexSet) -> IndexSet {
        IndexSet(self.0 & !o.0)
    }

    pub fn insert(self, k: u8) -> IndexSet {
        IndexSet(self.0 | (1 << k))
    }

    pub fn remove(self, k: u8) -> IndexSet {
        IndexSet(self.0 & !(1 << k))
    }

    /// Complement inside {0,…,7}.
    pub fn complement(self) -> IndexSet {
        IndexSet(!self.0)
    }

    /// Complement inside {1,…,7}.
    pub fn complement7(self) -> IndexSet {
        IndexSet(!self.0 & 0xfe)
    }

    /// All k-subsets of {0,…,7} in lexicographic order.
    pub fn all(k: usize) -> Vec<IndexSet> {
        let mut v: Vec<IndexSet> = (0..=255u8).map(IndexSet).filter(|s| s.len() == k).collect();
        v.sort();
        v
    }

    /// Position among the 70 four-subsets in lexicographic order.
    pub fn lex_rank4(self) -> usize {
        static TABLE: OnceLock<[u8; 256]> = OnceLock::new();
        let t = TABLE.get_or_init(|| {
            let mut t = [u8::MAX; 256];
            for (r, s) in IndexSet::all(4).into_iter().enumerate() {
                t[s.0 as usize] = r as u8;
            }
            t
        });
        assert_eq!(self.len(), 4, "lex_rank4 on a set of size {}", self.len());
        t[self.0 as usize] as usize
    }
}

/// Sign of the permutation sorting the concatenation of two disjoint sets.
pub fn shuffle_sign(a: IndexSet, b: IndexSet) -> i32 {
    debug_assert!(a.intersection(b).is_empty());
    let mut inversions = 0;
    for x in a.members() {
        inversions += b.members().filter(|&y| y < x).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation sorting `seq` (distinct entries), or 0 when an
/// entry repeats.
pub fn sort_sign(seq: &[u8]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                Ordering::Equal => return 0,
                Ordering::Greater => sign = -sign,
                Ordering::Less => {}
            }
        }
    }
    sign
}

impl Ord for IndexSet {
    fn cmp(&self, o: &Self) -> Ordering {
        self.members().cmp(o.members())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in self.members() {
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Digit-string syntax, e.g. `"0246"`.
impl FromStr for IndexSet {
    type Err = ExteriorError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        let digits = digits.ok_or_else(|| ExteriorError::InvalidIndexSet(s.to_string()))?;
        if digits.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ExteriorError::InvalidIndexSet(s.to_string()));
        }
        IndexSet::new(&digits).map_err(|_| ExteriorError::InvalidIndexSet(s.to_string()))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A homogeneous element of Λᵏ, stored sparsely. The same type holds forms
/// (keys read as `e^I`) and multivectors (keys read as `e_I`).
#[derive(Clone, PartialEq, Eq)]
pub struct MultiVector<T = Q> {
    grade: usize,
    coeffs: BTreeMap<IndexSet, T>,
}

impl<T: Ring> MultiVector<T> {
    pub fn zero(grade: usize) -> Self {
        MultiVector { grade, coeffs: BTreeMap::new() }
    }

    pub fn basis(set: IndexSet) -> Self {
        let mut m = Self::zero(set.len());
        m.coeffs.insert(set, T::one());
        m
    }

    pub fn from_terms(grade: usize, terms: impl IntoIterator<Item = (IndexSet, T)>) -> Self {
        let mut m = Self::zero(grade);
        for (k, c) in terms {
            m.add_term(k, c);
        }
        m
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coeff(&self, key: IndexSet) -> T {
        self.coeffs.get(&key).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &T)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<IndexSet> {
        self.coeffs.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, key: IndexSet, c: T) {
        assert_eq!(key.len(), self.grade, "index set {key} in a grade-{} element", self.grade);
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&key) {
            Some(old) => old.add_ref(&c),
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.grade, o.grade);
        let mut out = self.clone();
        for (k, c) in &o.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MultiVector { grade: self.grade, coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg_ref())).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_terms(self.grade, self.coeffs.iter().map(|(k, c)| (*k, c.mul_ref(s))))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> MultiVector<U> {
        MultiVector::from_terms(self.grade, self.coeffs.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn wedge(&self, o: &Self) -> Result<Self, ExteriorError> {
        if self.grade + o.grade > 8 {
            return Err(ExteriorError::GradeOverflow(self.grade, o.grade));
        }
        let mut out = Self::zero(self.grade + o.grade);
        for (a, x) in &self.coeffs {
            for (b, y) in &o.coeffs {
                if !a.intersection(*b).is_empty() {
                    continue;
                }
                let p = x.mul_ref(y);
                out.add_term(a.union(*b), if shuffle_sign(*a, *b) > 0 { p } else { p.neg_ref() });
            }
        }
        Ok(out)
    }

    /// Derivation action of a matrix `X` on a covariant form:
    /// `(X·ω)(v₁,…,v_k) = −Σᵢ ω(v₁,…,Xvᵢ,…,v_k)`.
    pub fn act_on_form(&self, x: &Matrix<T>) -> Self {
        let mut out = Self::zero(self.grade);
        for (set, c) in &self.coeffs {
            let members = set.to_vec();
            for (slot, &i) in members.iter().enumerate() {
                // e^i ∘ X = Σ_j X[i][j] e^j
                for j in 0..x.cols() as u8 {
                    let xij = x.get(i as usize, j as usize);
                    if xij.is_zero() {
                        continue;
                    }
                    let mut seq = members.clone();
                    seq[slot] = j;
                    let s = sort_sign(&seq);
                    if s == 0 {
                        continue;
                    }
                    let key = IndexSet::new(&seq).expect("distinct");
                    let v = c.mul_ref(xij);
                    out.add_term(key, if s > 0 { v.neg_ref() } else { v });
                }
            }
        }
        out
    }

    /// Derivation action of `X` on a multivector:
    /// `X·(v₁∧…∧v_k) = Σᵢ v₁∧…∧Xvᵢ∧…∧v_k`.
    pub fn act_on_multivector(&self, x: &Matrix<T>) -> Self {
        let mut out = Self::zero(self.grade);
        for (set, c) in &self.coeffs {
            let members = set.to_vec();
            for (slot, &j) in members.iter().enumerate() {
                // X e_j = Σ_i X[i][j] e_i
                for i in 0..x.rows() as u8 {
                    let xij = x.get(i as usize, j as usize);
                    if xij.is_zero() {
                        continue;
                    }
                    let mut seq = members.clone();
                    seq[slot] = i;
                    let s = sort_sign(&seq);
                    if s == 0 {
                        continue;
                    }
                    let key = IndexSet::new(&seq).expect("distinct");
                    let v = c.mul_ref(xij);
                    out.add_term(key, if s > 0 { v } else { v.neg_ref() });
                }
            }
        }
        out
    }
}

impl MultiVector<Q> {
    /// Build from `{"0123": "1", …}` style pairs.
    pub fn from_strs(grade: usize, terms: &[(&str, &str)]) -> Result<Self, ExteriorError> {
        let mut m = Self::zero(grade);
        for (k, v) in terms {
            let key: IndexSet = k.parse()?;
            let c: Q = v.parse().map_err(|_| ExteriorError::InvalidIndexSet(v.to_string()))?;
            if key.len() != grade {
                return Err(ExteriorError::InvalidIndexSet(k.to_string()));
            }
            m.add_term(key, c);
        }
        Ok(m)
    }

    /// Signed-term notation, e.g. `"+0123 -0145 +1/2*4567"`.
    pub fn parse_terms(grade: usize, s: &str) -> Result<Self, ExteriorError> {
        let mut m = Self::zero(grade);
        for tok in s.split_whitespace() {
            let bad = || ExteriorError::InvalidIndexSet(tok.to_string());
            let (sign, body) = match tok.as_bytes()[0] {
                b'-' => (-1, &tok[1..]),
                b'+' => (1, &tok[1..]),
                _ => (1, tok),
            };
            let (coef, key) = match body.rsplit_once('*') {
                Some((c, k)) => (c.parse::<Q>().map_err(|_| bad())?, k),
                None => (Q::one(), body),
            };
            let key: IndexSet = key.parse()?;
            if key.len() != grade {
                return Err(bad());
            }
            m.add_term(key, if sign < 0 { -coef } else { coef });
        }
        Ok(m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl<T: Ring + fmt::Display> fmt::Display for MultiVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                let s = c.to_string();
                match s.as_str() {
                    "1" => format!("+{k}"),
                    "-1" => format!("-{k}"),
                    _ => format!("+({s})*{k}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl<T: Ring> fmt::Debug for MultiVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter().map(|(k, c)| (k.to_string(), c))).finish()
    }
}

/// JSON map `{"0123": "1", "0145": "-1", …}`.
impl Serialize for MultiVector<Q> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, &Q> = self.coeffs.iter().map(|(k, c)| (k.to_string(), c)).collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiVector<Q> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = BTreeMap::<String, Q>::deserialize(d)?;
        let mut grade = None;
        let mut out = BTreeMap::new();
        for (k, c) in m {
            let key: IndexSet = k.parse().map_err(serde::de::Error::custom)?;
            if *grade.get_or_insert(key.len()) != key.len() {
                return Err(serde::de::Error::custom("mixed grades"));
            }
            if !c.is_zero() {
                out.insert(key, c);
            }
        }
        Ok(MultiVector { grade: grade.unwrap_or(0), coeffs: out })
    }
}

/// An Im 𝕆-valued form: component `k` (for k = 1..7) is the coefficient of eₖ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorValuedForm {
    pub components: [MultiVector; 7],
}

impl VectorValuedForm {
    pub fn component(&self, k: usize) -> &MultiVector {
        assert!((1..=7).contains(&k), "components are indexed by e1..e7");
        &self.components[k - 1]
    }

    pub fn term_count(&self) -> usize {
        self.components.iter().map(MultiVector::len).sum()
    }

    pub fn eval(&self, v: [&Octonion; 4]) -> Octonion {
        let mut out = Octonion::zero();
        for k in 1..=7 {
            out.0[k] = eval4(self.component(k), v[0], v[1], v[2], v[3]);
        }
        out
    }
}

/// `*` on Λ(ℝ⁷) spanned by e¹..e⁷ with volume form e^{1234567}:
/// `e^I ∧ *e^I = e^{1234567}`.
pub fn hodge_star7(a: &MultiVector) -> Result<MultiVector, ExteriorError> {
    let mut out = MultiVector::zero(7 - a.grade());
    for (k, c) in a.terms() {
        if k.contains(0) {
            return Err(ExteriorError::IndexZeroPresent(*k));
        }
        let comp = k.complement7();
        let s = shuffle_sign(*k, comp);
        out.add_term(comp, if s > 0 { c.clone() } else { -c });
    }
    Ok(out)
}

/// Determinant of the rows `rows` and columns `cols` of `m`.
pub fn minor<T: Ring>(m: &Matrix<T>, rows: IndexSet, cols: IndexSet) -> T {
    m.submatrix(&rows.indices(), &cols.indices()).det_laplace()
}

/// `(m*ω)(v₁,…,v₄) = ω(mv₁,…,mv₄)`: the coefficient on `e^J` is
/// `Σ_I ω_I · det m[I, J]`.
pub fn pullback4<T: Ring>(m: &Matrix<T>, form: &MultiVector<T>) -> MultiVector<T> {
    pullback(m, form)
}

/// Pullback of a form of any grade.
pub fn pullback<T: Ring>(m: &Matrix<T>, form: &MultiVector<T>) -> MultiVector<T> {
    let k = form.grade();
    let mut out = MultiVector::zero(k);
    for j in IndexSet::all(k) {
        let mut acc = T::zero();
        for (i, c) in form.terms() {
            let d = minor(m, *i, j);
            if !d.is_zero() {
                acc = acc.add_ref(&c.mul_ref(&d));
            }
        }
        out.add_term(j, acc);
    }
    out
}

/// The induced 70×70 matrix Λ⁴m on four-vectors, rows and columns in
/// lexicographic order: `(Λ⁴m)[I][J] = det m[I, J]`.
pub fn induced_lambda4<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    let sets = IndexSet::all(4);
    Matrix::from_fn(70, 70, |r, c| minor(m, sets[r], sets[c]))
}

/// Alternating evaluation `ω(v₁,v₂,v₃,v₄)`.
pub fn eval4(form: &MultiVector, v1: &Octonion, v2: &Octonion, v3: &Octonion, v4: &Octonion) -> Q {
    let cols = [v1, v2, v3, v4];
    let m = Matrix::from_fn(8, 4, |r, c| cols[c].0[r].clone());
    form.terms()
        .map(|(i, c)| c * &m.submatrix(&i.indices(), &[0, 1, 2, 3]).det_laplace())
        .sum()
}

/// The four-vector `v₁∧v₂∧v₃∧v₄` in the basis `e_I`.
pub fn wedge4(vs: [&Octonion; 4]) -> MultiVector {
    let m = Matrix::from_fn(8, 4, |r, c| vs[c].0[r].clone());
    MultiVector::from_terms(4, IndexSet::all(4).into_iter().map(|i| (i, m.submatrix(&i.indices(), &[0, 1, 2, 3]).det_laplace())))
}

/// The three calibration objects computed from the octonion product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibrations {
    pub phi: MultiVector,
    pub big_phi: MultiVector,
    pub xi: VectorValuedForm,
}

/// Evaluate `φ(u,v,w) = B(u, v×w)`, `Φ(x,u,v,w) = B(x, u×v×w)` and
/// `Ξ = Im(x×u×v×w)` on basis tuples, without comparing to anything.
pub fn compute_calibrations() -> Calibrations {
    let e = Octonion::basis;
    let mut phi = MultiVector::zero(3);
    for set in IndexSet::all(3).into_iter().filter(|s| !s.contains(0)) {
        let [a, b, c] = <[usize; 3]>::try_from(set.indices()).expect("3");
        let vw = e(b).mul(&e(c)).im();
        phi.add_term(set, e(a).bilinear(&vw));
    }
    let mut big_phi = MultiVector::zero(4);
    let mut comps: [MultiVector; 7] = std::array::from_fn(|_| MultiVector::zero(4));
    for set in IndexSet::all(4) {
        let [a, b, c, d] = <[usize; 4]>::try_from(set.indices()).expect("4");
        big_phi.add_term(set, e(a).bilinear(&cross3(&e(b), &e(c), &e(d))));
        let x = cross4(&e(a), &e(b), &e(c), &e(d));
        for k in 1..8 {
            comps[k - 1].add_term(set, x.0[k].clone());
        }
    }
    Calibrations { phi, big_phi, xi: VectorValuedForm { components: comps } }
}

fn compare(form: &str, computed: &MultiVector, expected: &MultiVector) -> Result<(), ExteriorError> {
    let keys: std::collections::BTreeSet<IndexSet> = computed.support().into_iter().chain(expected.support()).collect();
    for k in keys {
        let (c, e) = (computed.coeff(k), expected.coeff(k));
        if c != e {
            return Err(ExteriorError::TableValidationFailure {
                form: form.to_string(),
                key: k.to_string(),
                computed: c.to_string(),
                expected: e.to_string(),
            });
        }
    }
    Ok(())
}

/// Validate computed calibrations against reference expansions.
pub fn validate_calibrations(c: &Calibrations, reference: &golden::Forms) -> Result<(), ExteriorError> {
    compare("phi", &c.phi, &reference.phi)?;
    compare("Phi", &c.big_phi, &reference.big_phi)?;
    for k in 1..=7 {
        compare(&format!("Xi[e{k}]"), c.xi.component(k), reference.xi.component(k))?;
    }
    Ok(())
}

/// φ, Φ and Ξ, checked term-for-term against the bundled reference
/// expansions. A mismatch would mean the multiplication table carries the
/// wrong sign convention.
pub fn build_calibrations() -> Result<Calibrations, ExteriorError> {
    let c = compute_calibrations();
    validate_calibrations(&c, &golden::bundled().forms)?;
    Ok(c)
}

/// Cached, validated calibrations.
pub fn calibrations() -> &'static Calibrations {
    static CAL: OnceLock<Calibrations> = OnceLock::new();
    CAL.get_or_init(|| build_calibrations().expect("calibrations validate against the reference expansions"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(grade: usize, s: &str) -> MultiVector {
        MultiVector::parse_terms(grade, s).unwrap()
    }

    #[test]
    fn index_set_order_and_text() {
        let all = IndexSet::all(4);
        assert_eq!(all.len(), 70);
        assert_eq!(all[0].to_string(), "0123");
        assert_eq!(all[1].to_string(), "0124");
        assert_eq!(all[69].to_string(), "4567");
        for (r, s) in all.iter().enumerate() {
            assert_eq!(s.lex_rank4(), r);
        }
        assert!("0213".parse::<IndexSet>().is_err());
        assert!("0128".parse::<IndexSet>().is_err());
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(mv(2, "01").wedge(&mv(2, "23")).unwrap(), mv(4, "0123"));
        assert!(mv(1, "1").wedge(&mv(1, "1")).unwrap().is_zero());
        assert_eq!(mv(2, "23").wedge(&mv(2, "01")).unwrap(), mv(4, "0123"));
        assert_eq!(mv(1, "1").wedge(&mv(1, "0")).unwrap(), mv(2, "-01"));
        assert_eq!(mv(4, "0123").wedge(&mv(5, "34567")), Err(ExteriorError::GradeOverflow(4, 5)));
    }

    #[test]
    fn wedge_sign_matches_permutation_parity() {
        // brute force: sign of sorting the concatenated sequence
        for a in IndexSet::all(2) {
            for b in IndexSet::all(2) {
                if !a.intersection(b).is_empty() {
                    continue;
                }
                let seq: Vec<u8> = a.members().chain(b.members()).collect();
                let w = MultiVector::<Q>::basis(a).wedge(&MultiVector::basis(b)).unwrap();
                assert_eq!(w.coeff(a.union(b)), Q::from_int(sort_sign(&seq) as i64));
            }
        }
    }

    #[test]
    fn hodge_star_examples() {
        assert_eq!(hodge_star7(&mv(3, "123")).unwrap(), mv(4, "4567"));
        assert_eq!(hodge_star7(&hodge_star7(&mv(3, "145")).unwrap()).unwrap(), mv(3, "145"));
        assert_eq!(hodge_star7(&mv(3, "-246")).unwrap(), mv(4, "-1357"));
        assert_eq!(hodge_star7(&mv(3, "246")).unwrap(), mv(4, "1357"));
        assert!(matches!(hodge_star7(&mv(3, "012")), Err(ExteriorError::IndexZeroPresent(_))));
        for s in IndexSet::all(3).into_iter().filter(|s| !s.contains(0)) {
            let a = MultiVector::basis(s);
            let vol = a.wedge(&hodge_star7(&a).unwrap()).unwrap();
            assert_eq!(vol, mv(7, "1234567"));
        }
    }

    #[test]
    fn calibration_examples() {
        let c = calibrations();
        assert_eq!(c.phi.coeff("257".parse().unwrap()), Q::one());
        assert_eq!(c.big_phi.coeff("1247".parse().unwrap()), -Q::one());
        assert_eq!(c.xi.component(7).coeff("0124".parse().unwrap()), Q::one());
        assert_eq!(c.phi.len(), 7);
        assert_eq!(c.big_phi.len(), 14);
        assert_eq!(c.xi.term_count(), 56);
    }

    #[test]
    fn calibration_identity() {
        let c = calibrations();
        let e0 = mv(1, "0");
        let rhs = e0.wedge(&c.phi).unwrap().add(&hodge_star7(&c.phi).unwrap());
        assert_eq!(rhs, c.big_phi);
    }

    #[test]
    fn validation_rejects_a_sign_flip() {
        let mut reference = golden::bundled().forms.clone();
        reference.big_phi = reference.big_phi.neg();
        let err = validate_calibrations(&compute_calibrations(), &reference).unwrap_err();
        assert!(matches!(err, ExteriorError::TableValidationFailure { .. }));
    }

    #[test]
    fn evaluation_examples() {
        let phi = &calibrations().big_phi;
        let e = Octonion::basis;
        assert_eq!(eval4(phi, &e(0), &e(1), &e(2), &e(3)), Q::one());
        assert!(eval4(phi, &e(0), &e(0), &e(2), &e(3)).is_zero());
        assert_eq!(eval4(phi, &e(1), &e(2), &e(4), &e(7)), -Q::one());
    }

    #[test]
    fn pullback_examples() {
        let phi = &calibrations().big_phi;
        assert_eq!(&pullback4(&Matrix::identity(8), phi), phi);
        let minus = Matrix::identity(8).scale(&-Q::one());
        assert_eq!(&pullback4(&minus, phi), phi);
    }

    #[test]
    fn derivation_actions_are_dual() {
        // ⟨X·ω, v⟩ + ⟨ω, X·v⟩ = 0 for the natural pairing of e^I with e_J
        let x = Matrix::from_fn(8, 8, |r, c| Q::from_int(((r * 5 + c * 3) % 7) as i64 - 3));
        let form = &calibrations().big_phi;
        for v in IndexSet::all(4).into_iter().take(12) {
            let v = MultiVector::basis(v);
            let lhs: Q = form.act_on_form(&x).terms().map(|(k, c)| c * &v.coeff(*k)).sum();
            let rhs: Q = v.act_on_multivector(&x).terms().map(|(k, c)| c * &form.coeff(*k)).sum();
            assert_eq!(lhs + rhs, Q::zero());
        }
    }

    #[test]
    fn json_form() {
        let m = mv(4, "0123 -0145");
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"0123":"1","0145":"-1"}"#);
        let back: MultiVector = serde_json::from_str(r#"{"0123":"1","0145":"-1"}"#).unwrap();
        assert_eq!(back, m);
    }
}
