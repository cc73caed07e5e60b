//! Complex octonions 𝕆 ≅ ℂ⁸ with exact coordinates.
//!
//! Basis: e₀ = 1, e₁ = 𝐢, e₂ = 𝐣, e₃ = 𝐤, e₄ = 𝐥, e₅ = 𝐥𝐢, e₆ = 𝐥𝐣, e₇ = 𝐥𝐤.
//! The multiplication table is produced by Cayley–Dickson doubling of the
//! quaternions,
//!
//! ```text
//! (x, y)(u, v) = (xu − v̄y, vx + yū),   𝐥 = (0, 1),   e₄₊ₖ = 𝐥·eₖ,
//! ```
//!
//! and [`crate::exterior::build_calibrations`] checks it against the
//! expected coordinate expressions of φ, Φ and Ξ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Matrix, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OctonionError {
    #[error("argument {0} of the two-fold cross product is not imaginary")]
    NotImaginary(usize),
}

/// A quaternion `a + b𝐢 + c𝐣 + d𝐤` over ℚ(i).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Quaternion(pub [Q; 4]);

impl Quaternion {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Self {
        Quaternion([a, b, c, d])
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(k: usize) -> Self {
        let mut q = Quaternion::default();
        q.0[k] = Q::one();
        q
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b, -c, -d])
    }

    pub fn norm(&self) -> Q {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().inv().ok()?;
        Some(self.conj().scale(&n))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Quaternion(self.0.clone().map(|x| &x * s))
    }

    pub fn mul(&self, rhs: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }

    pub fn add(&self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }

    pub fn sub(&self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }

    /// The 2×2 complex matrix `[[a − id, −b + ic], [b + ic, a + id]]`,
    /// multiplicative in the quaternion.
    pub fn to_sl2(&self) -> Matrix<Q> {
        let [a, b, c, d] = &self.0;
        let i = Q::i();
        Matrix::from_rows(vec![
            vec![a - &(&i * d), -b + &(&i * c)],
            vec![b + &(&i * c), a + &(&i * d)],
        ])
        .expect("2x2")
    }

    /// Inverse of [`Quaternion::to_sl2`].
    pub fn from_sl2(m: &Matrix<Q>) -> Self {
        let half = Q::ratio(1, 2);
        let i = Q::i();
        let (p, q, r, s) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        let a = &(p + s) * &half;
        let d = &(&(s - p) * &half) * &(-&i);
        let b = &(r - q) * &half;
        let c = &(&(r + q) * &half) * &(-&i);
        Quaternion([a, b, c, d])
    }

    /// Matrix of `x ↦ self·x` on coordinates.
    pub fn left_matrix(&self) -> Matrix<Q> {
        let cols: Vec<Quaternion> = (0..4).map(|k| self.mul(&Quaternion::basis(k))).collect();
        Matrix::from_fn(4, 4, |r, c| cols[c].0[r].clone())
    }

    /// Matrix of `x ↦ x·self` on coordinates.
    pub fn right_matrix(&self) -> Matrix<Q> {
        let cols: Vec<Quaternion> = (0..4).map(|k| Quaternion::basis(k).mul(self)).collect();
        Matrix::from_fn(4, 4, |r, c| cols[c].0[r].clone())
    }
}

/// Signed basis index: `e_a · e_b = sign · e_index`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SignedIndex {
    pub sign: i8,
    pub index: u8,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicationTable {
    pub products: [[SignedIndex; 8]; 8],
}

impl MultiplicationTable {
    /// Build the table by Cayley–Dickson doubling.
    pub fn cayley_dickson() -> Self {
        // octonions as pairs of quaternions
        type Pair = (Quaternion, Quaternion);
        let dmul = |(x, y): &Pair, (u, v): &Pair| -> Pair {
            (x.mul(u).sub(&v.conj().mul(y)), v.mul(x).add(&y.mul(&u.conj())))
        };
        let unit = |k: usize| -> Pair {
            if k < 4 {
                (Quaternion::basis(k), Quaternion::default())
            } else {
                (Quaternion::default(), Quaternion::basis(k - 4))
            }
        };
        let l = unit(4);
        // e₄₊ₖ = 𝐥·eₖ as pairs; each is ± a pair unit vector
        let basis: Vec<Pair> = (0..8).map(|k| if k < 4 { unit(k) } else { dmul(&l, &unit(k - 4)) }).collect();
        let flat = |(x, y): &Pair| -> [Q; 8] { std::array::from_fn(|k| if k < 4 { x.0[k].clone() } else { y.0[k - 4].clone() }) };
        let basis_flat: Vec<[Q; 8]> = basis.iter().map(flat).collect();
        let locate = |v: &[Q; 8]| -> SignedIndex {
            for (k, b) in basis_flat.iter().enumerate() {
                let pos = b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
                if !v[pos].is_zero() {
                    let sign = if v[pos] == b[pos] { 1 } else { -1 };
                    return SignedIndex { sign, index: k as u8 };
                }
            }
            unreachable!("product of basis elements is a signed basis element")
        };
        let products = std::array::from_fn(|a| std::array::from_fn(|b| locate(&flat(&dmul(&basis[a], &basis[b])))));
        MultiplicationTable { products }
    }

    pub fn get(&self, a: usize, b: usize) -> SignedIndex {
        self.products[a][b]
    }
}

impl fmt::Display for MultiplicationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "| · | e0 | e1 | e2 | e3 | e4 | e5 | e6 | e7 |")?;
        writeln!(f, "|---|----|----|----|----|----|----|----|----|")?;
        for (a, row) in self.products.iter().enumerate() {
            write!(f, "| e{a} |")?;
            for p in row {
                write!(f, " {}e{} |", if p.sign < 0 { "−" } else { "" }, p.index)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn table() -> &'static MultiplicationTable {
    static TABLE: OnceLock<MultiplicationTable> = OnceLock::new();
    TABLE.get_or_init(MultiplicationTable::cayley_dickson)
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Octonion(pub [Q; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(k: usize) -> Self {
        let mut x = Octonion::default();
        x.0[k] = Q::one();
        x
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion(c.map(Q::from_int))
    }

    pub fn coords(&self) -> &[Q; 8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Q::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.0[0].is_zero()
    }

    pub fn scale(&self, s: &Q) -> Self {
        Octonion(std::array::from_fn(|k| &self.0[k] * s))
    }

    pub fn mul(&self, rhs: &Octonion) -> Octonion {
        let t = table();
        let mut out = Octonion::zero();
        for (a, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = t.get(a, b);
                let v = x * y;
                let slot = &mut out.0[p.index as usize];
                *slot = if p.sign > 0 { &*slot + &v } else { &*slot - &v };
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Octonion(std::array::from_fn(|k| if k == 0 { self.0[0].clone() } else { -&self.0[k] }))
    }

    pub fn re(&self) -> Self {
        let mut x = Octonion::zero();
        x.0[0] = self.0[0].clone();
        x
    }

    pub fn im(&self) -> Self {
        let mut x = self.clone();
        x.0[0] = Q::zero();
        x
    }

    /// `N(a) = B(a, a)`; the sum of squared coordinates.
    pub fn norm(&self) -> Q {
        self.0.iter().map(|x| x * x).sum()
    }

    /// `B(u, v) = Re(ū v)`, the complex-bilinear (not Hermitian) form.
    pub fn bilinear(&self, rhs: &Octonion) -> Q {
        self.0.iter().zip(&rhs.0).map(|(a, b)| a * b).sum()
    }

    /// Quaternion halves `(x, y)` with `self = x + 𝐥y`.
    pub fn halves(&self) -> (Quaternion, Quaternion) {
        (
            Quaternion(std::array::from_fn(|k| self.0[k].clone())),
            Quaternion(std::array::from_fn(|k| self.0[k + 4].clone())),
        )
    }

    pub fn from_halves(x: &Quaternion, y: &Quaternion) -> Self {
        Octonion(std::array::from_fn(|k| if k < 4 { x.0[k].clone() } else { y.0[k - 4].clone() }))
    }

    /// A random element with small Gaussian-rational coordinates.
    pub fn random<R: rand::Rng>(rng: &mut R) -> Self {
        Octonion(std::array::from_fn(|_| random_scalar(rng)))
    }

    pub fn random_imaginary<R: rand::Rng>(rng: &mut R) -> Self {
        Self::random(rng).im()
    }
}

/// A random Gaussian rational with small numerators and denominators.
pub fn random_scalar<R: rand::Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(-6i64..=6), rng.gen_range(-6i64..=6), rng.gen_range(1i64..=3))
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.0.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| format!("({x})e{k}")).collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|k| -&self.0[k]))
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

/// `u × v = Im(uv)` for imaginary `u`, `v`.
pub fn cross2(u: &Octonion, v: &Octonion) -> Result<Octonion, OctonionError> {
    if !u.is_imaginary() {
        return Err(OctonionError::NotImaginary(0));
    }
    if !v.is_imaginary() {
        return Err(OctonionError::NotImaginary(1));
    }
    Ok(u.mul(v).im())
}

/// `u × v × w = ½((u v̄)w − (w v̄)u)`.
pub fn cross3(u: &Octonion, v: &Octonion, w: &Octonion) -> Octonion {
    let vb = v.conj();
    let a = u.mul(&vb).mul(w);
    let b = w.mul(&vb).mul(u);
    (&a - &b).scale(&Q::ratio(1, 2))
}

/// `x × u × v × w = −¼[(x×u×v)w̄ − (w×x×u)v̄ + (v×w×x)ū − (u×v×w)x̄]`.
pub fn cross4(x: &Octonion, u: &Octonion, v: &Octonion, w: &Octonion) -> Octonion {
    let t1 = cross3(x, u, v).mul(&w.conj());
    let t2 = cross3(w, x, u).mul(&v.conj());
    let t3 = cross3(v, w, x).mul(&u.conj());
    let t4 = cross3(u, v, w).mul(&x.conj());
    let s = &(&(&t1 - &t2) + &t3) - &t4;
    s.scale(&Q::ratio(-1, 4))
}

/// Exact Gram–Schmidt for the bilinear form `B`. Returns `None` when a step
/// meets an isotropic vector (`B(w, w) = 0`), which the complex form admits.
pub fn gram_schmidt(vs: &[Octonion]) -> Option<Vec<Octonion>> {
    let mut out: Vec<(Octonion, Q)> = Vec::with_capacity(vs.len());
    for v in vs {
        let mut w = v.clone();
        for (b, n) in &out {
            let c = &v.bilinear(b) / n;
            w = &w - &b.scale(&c);
        }
        let n = w.norm();
        if n.is_zero() {
            return None;
        }
        out.push((w, n));
    }
    Some(out.into_iter().map(|(w, _)| w).collect())
}

/// A random `B`-orthogonal tuple of `n` non-isotropic vectors.
pub fn random_orthogonal<R: rand::Rng>(rng: &mut R, n: usize) -> Vec<Octonion> {
    loop {
        let vs: Vec<Octonion> = (0..n).map(|_| Octonion::random(rng)).collect();
        if let Some(w) = gram_schmidt(&vs) {
            return w;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(k: usize) -> Octonion {
        Octonion::basis(k)
    }

    #[test]
    fn table_rows() {
        let expected = [
            "+0 +1 +2 +3 +4 +5 +6 +7",
            "+1 -0 +3 -2 -5 +4 -7 +6",
            "+2 -3 -0 +1 -6 +7 +4 -5",
            "+3 +2 -1 -0 -7 -6 +5 +4",
            "+4 +5 +6 +7 -0 -1 -2 -3",
            "+5 -4 -7 +6 +1 -0 -3 +2",
            "+6 +7 -4 -5 +2 +3 -0 -1",
            "+7 -6 +5 -4 +3 -2 +1 -0",
        ];
        for (a, line) in expected.iter().enumerate() {
            let got: Vec<String> = table().products[a]
                .iter()
                .map(|p| format!("{}{}", if p.sign > 0 { '+' } else { '-' }, p.index))
                .collect();
            assert_eq!(&got.join(" "), line, "row {a}");
        }
    }

    #[test]
    fn product_examples() {
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(4).mul(&e(2)), e(6));
        let x = Octonion::from_ints([1, -2, 3, 0, 5, 0, -1, 7]);
        assert_eq!(e(0).mul(&x), x);
        for k in 1..8 {
            assert_eq!(e(k).mul(&e(k)), -&e(0));
        }
    }

    #[test]
    fn conjugation_and_norm() {
        assert_eq!(e(3).conj(), -&e(3));
        assert_eq!(e(4).norm(), Q::one());
        let h = Octonion::from_ints([2, 3, 5, 7, 0, 0, 0, 0]);
        assert_eq!(h.norm(), Q::from_int(4 + 9 + 25 + 49));
        let x = Octonion::from_ints([1, 2, 0, -1, 3, 0, 1, 1]);
        assert_eq!(&x.re() + &x.im(), x);
        assert_eq!(x.norm(), x.bilinear(&x));
        assert_eq!(x.conj().mul(&x).re().0[0], x.norm());
    }

    #[test]
    fn cross_products() {
        assert_eq!(cross2(&e(1), &e(2)).unwrap(), e(3));
        assert!(cross2(&e(5), &e(5)).unwrap().is_zero());
        assert_eq!(cross2(&e(4), &e(5)).unwrap(), -&e(1));
        assert_eq!(cross2(&e(0), &e(1)), Err(OctonionError::NotImaginary(0)));
        assert_eq!(cross3(&e(1), &e(2), &e(3)).bilinear(&e(0)), Q::one());
        assert!(cross3(&e(1), &e(2), &e(1)).is_zero());
        assert_eq!(cross3(&e(4), &e(5), &e(6)).bilinear(&e(7)), -Q::one());
        assert_eq!(cross4(&e(0), &e(1), &e(2), &e(3)), e(0));
        assert!(cross4(&e(0), &e(1), &e(1), &e(3)).is_zero());
        assert_eq!(cross4(&e(1), &e(2), &e(3), &e(4)).0[4], Q::one());
    }

    #[test]
    fn sl2_correspondence_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let (a, b) = Octonion::random(&mut rng).halves();
            assert_eq!(a.mul(&b).to_sl2(), a.to_sl2().mul(&b.to_sl2()).unwrap());
            assert_eq!(a.to_sl2().det(), a.norm());
            assert_eq!(Quaternion::from_sl2(&a.to_sl2()), a);
        }
    }

    #[test]
    fn gram_schmidt_orthogonalises() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let w = random_orthogonal(&mut rng, 4);
        for i in 0..4 {
            for j in 0..i {
                assert!(w[i].bilinear(&w[j]).is_zero());
            }
        }
        // an isotropic first vector aborts
        let iso = Octonion([Q::one(), Q::i(), Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::zero()]);
        assert!(gram_schmidt(&[iso]).is_none());
    }
}
