//! Sparse multivariate Laurent polynomials over ℚ(i).
//!
//! A [`Poly`] knows its variables only by index; a [`PolyRing`] attaches
//! names, validates indices and handles text conversion.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{ExactError, GaussianRational, Ring};

/// Exponent vector stored sparsely as `(variable, exponent)` pairs sorted by
/// variable with no zero exponents. Negative exponents are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(u16, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u16) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u16, i32)>) -> Self {
        let mut acc: BTreeMap<u16, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn pairs(&self) -> &[(u16, i32)] {
        &self.0
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: u16) -> i32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    if ea + eb != 0 {
                        out.push((va, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&x), Some(&(vb, _))) if x.0 < vb => {
                    out.push(x);
                    i += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (_, Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    fn lex_cmp(&self, rhs: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &rhs.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let x = a.get(i).copied();
            let y = b.get(j).copied();
            match (x, y) {
                (None, None) => return Ordering::Equal,
                (Some((va, ea)), Some((vb, eb))) if va == vb => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
                // the side whose next variable comes first has a nonzero
                // exponent where the other has zero
                (Some((va, ea)), Some((vb, _))) if va < vb => return ea.cmp(&0),
                (Some((_, ea)), None) => return ea.cmp(&0),
                (_, Some((_, eb))) => return 0.cmp(&eb),
            }
        }
    }
}

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent vector in declared variable order.
impl Ord for Monomial {
    fn cmp(&self, rhs: &Self) -> Ordering {
        self.degree().cmp(&rhs.degree()).then_with(|| self.lex_cmp(rhs))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, rhs: &Self) -> Option<Ordering> {
        Some(self.cmp(rhs))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn var(v: u16) -> Self {
        Self::term(Monomial::var(v), GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Highest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Variables that occur with a nonzero exponent.
    pub fn variables(&self) -> Vec<u16> {
        let mut vs: Vec<u16> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul_ref(self))
    }

    /// Formal partial derivative with respect to variable `v`.
    pub fn partial(&self, v: u16) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let dm = m.mul(&Monomial(vec![(v, -1)]));
            out.add_term(dm, c * &GaussianRational::from_int(e as i64));
        }
        out
    }

    /// Coefficients of the degree-one monomials, keyed by variable.
    pub fn linear_part(&self) -> BTreeMap<u16, GaussianRational> {
        self.terms
            .iter()
            .filter_map(|(m, c)| match m.0.as_slice() {
                [(v, 1)] => Some((*v, c.clone())),
                _ => None,
            })
            .collect()
    }

    /// Evaluate at a point given as one value per variable index. Negative
    /// exponents require a nonzero value.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational, ExactError> {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point
                    .get(v as usize)
                    .ok_or_else(|| ExactError::UnknownVariable(format!("#{v}")))?;
                t = &t * &x.pow(e)?;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Replace variables by polynomials; variables without an entry stay.
    pub fn substitute(&self, map: &BTreeMap<u16, Poly>) -> Result<Poly, ExactError> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut keep = Vec::new();
            let mut t = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                match map.get(&v) {
                    Some(p) if e < 0 => {
                        if p.terms.len() != 1 {
                            return Err(ExactError::NegativeExponent(format!("#{v}")));
                        }
                        let (pm, pc) = p.terms.iter().next().expect("one term");
                        let inv_m = Monomial(pm.0.iter().map(|&(w, f)| (w, f * e)).collect());
                        t = t.mul_ref(&Poly::term(inv_m, pc.pow(e)?));
                    }
                    Some(p) => t = t.mul_ref(&p.pow(e as u32)),
                    None => keep.push((v, e)),
                }
            }
            let kept = Poly::term(Monomial(keep), GaussianRational::one());
            for (tm, tc) in t.mul_ref(&kept).terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Set the given variables to zero.
    pub fn vanish(&self, vars: &[u16]) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.0.iter().any(|(v, _)| vars.contains(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl From<GaussianRational> for Poly {
    fn from(c: GaussianRational) -> Self {
        Poly::constant(c)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.variables().last().copied().unwrap_or(0)).map(|v| format!("x{v}")).collect();
        f.write_str(&PolyRing::new(names).display(self))
    }
}

/// A named variable list; the polynomials themselves refer to variables by
/// position in this list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        PolyRing { names: names.into_iter().map(Into::into).collect() }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Result<u16, ExactError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|k| k as u16)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))
    }

    pub fn var(&self, name: &str) -> Result<Poly, ExactError> {
        Ok(Poly::var(self.index(name)?))
    }

    pub fn partial(&self, p: &Poly, var: &str) -> Result<Poly, ExactError> {
        Ok(p.partial(self.index(var)?))
    }

    pub fn partial_index(&self, p: &Poly, var: u16) -> Result<Poly, ExactError> {
        if var as usize >= self.names.len() {
            return Err(ExactError::UnknownVariable(format!("#{var}")));
        }
        Ok(p.partial(var))
    }

    /// Canonical text: terms in descending graded-lex order, e.g.
    /// `q0124*q1237 - 2*q0456 + (1+i)*q3456^2 - 1`.
    pub fn display(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().enumerate() {
            let (negative, mag) = if c.is_real() {
                (c.re_num() < &0.into(), if c.re_num() < &0.into() { -c } else { c.clone() })
            } else if c.re_num() == &0.into() {
                (c.im_num() < &0.into(), if c.im_num() < &0.into() { -c } else { c.clone() })
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coef = if !mag.is_real() && mag.re_num() != &0.into() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            let vars: Vec<String> = m
                .0
                .iter()
                .map(|&(v, e)| {
                    let n = self.names.get(v as usize).cloned().unwrap_or_else(|| format!("x{v}"));
                    if e == 1 {
                        n
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            match (mag.is_one(), vars.is_empty()) {
                (_, true) => out.push_str(&coef),
                (true, false) => out.push_str(&vars.join("*")),
                (false, false) => {
                    out.push_str(&coef);
                    out.push('*');
                    out.push_str(&vars.join("*"));
                }
            }
        }
        out
    }

    /// Parse the canonical text form (and small variations of it: free
    /// whitespace, `^-2` exponents, parenthesised or bare coefficients).
    pub fn parse(&self, s: &str) -> Result<Poly, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad());
        }
        let mut out = Poly::zero();
        let mut pos = 0;
        while pos < src.len() {
            let mut sign = GaussianRational::one();
            while pos < src.len() && (src[pos] == '+' || src[pos] == '-') {
                if src[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let mut coef = sign;
            let mut mono = Monomial::one();
            loop {
                if pos >= src.len() {
                    return Err(bad());
                }
                if src[pos] == '(' {
                    let close = src[pos..].iter().position(|&c| c == ')').ok_or_else(bad)? + pos;
                    let inner: String = src[pos + 1..close].iter().collect();
                    coef = &coef * &inner.parse::<GaussianRational>()?;
                    pos = close + 1;
                } else if src[pos].is_ascii_digit() {
                    let start = pos;
                    while pos < src.len() && (src[pos].is_ascii_digit() || src[pos] == '/') {
                        pos += 1;
                    }
                    let lit: String = src[start..pos].iter().collect();
                    coef = &coef * &lit.parse::<GaussianRational>()?;
                } else if src[pos].is_alphabetic() || src[pos] == '_' {
                    let start = pos;
                    while pos < src.len() && (src[pos].is_alphanumeric() || src[pos] == '_') {
                        pos += 1;
                    }
                    let name: String = src[start..pos].iter().collect();
                    let mut e = 1i32;
                    if pos < src.len() && src[pos] == '^' {
                        pos += 1;
                        let start = pos;
                        if pos < src.len() && src[pos] == '-' {
                            pos += 1;
                        }
                        while pos < src.len() && src[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        e = src[start..pos].iter().collect::<String>().parse().map_err(|_| bad())?;
                    }
                    if name == "i" && !self.names.iter().any(|n| n == "i") {
                        coef = &coef * &GaussianRational::i().pow(e)?;
                    } else {
                        mono = mono.mul(&Monomial::from_pairs([(self.index(&name)?, e)]));
                    }
                } else {
                    return Err(bad());
                }
                if pos < src.len() && src[pos] == '*' {
                    pos += 1;
                    continue;
                }
                break;
            }
            out.add_term(mono, coef);
            if pos < src.len() && src[pos] != '+' && src[pos] != '-' {
                return Err(bad());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    type Q = GaussianRational;

    fn ring() -> PolyRing {
        PolyRing::new(["q1", "q2", "q3"])
    }

    #[test]
    fn partial_derivatives() {
        let r = ring();
        let q1 = r.var("q1").unwrap();
        let q2 = r.var("q2").unwrap();
        assert_eq!(r.partial(&q1.mul_ref(&q2), "q1").unwrap(), q2);
        assert_eq!(r.partial(&q1.pow(2), "q1").unwrap(), q1.scale(&Q::from_int(2)));
        assert_eq!(r.partial(&q1, "q9"), Err(ExactError::UnknownVariable("q9".into())));
        assert!(r.partial_index(&q1, 7).is_err());
    }

    #[test]
    fn graded_lex_display() {
        let r = ring();
        let p = r.parse("q3 + q1*q2 - 2 + q1^2 + i*q2").unwrap();
        assert_eq!(r.display(&p), "q1^2 + q1*q2 + i*q2 + q3 - 2");
        let p = r.parse("(1/2+i)*q2*q3 - 3/4*i").unwrap();
        assert_eq!(r.display(&p), "(1/2+i)*q2*q3 - 3/4*i");
        assert_eq!(r.parse(&r.display(&p)).unwrap(), p);
    }

    #[test]
    fn graded_lex_order_on_monomials() {
        let x = |pairs: &[(u16, i32)]| Monomial::from_pairs(pairs.iter().copied());
        assert!(x(&[(0, 1)]) > x(&[(1, 1)]));
        assert!(x(&[(1, 2)]) > x(&[(0, 1)]));
        assert!(x(&[(0, 1), (2, 1)]) > x(&[(1, 2)]));
        assert!(x(&[(1, 1), (2, 1)]) < x(&[(0, 1), (2, 1)]));
        assert!(x(&[]) < x(&[(2, 1)]));
    }

    #[test]
    fn laurent_and_substitution() {
        let r = PolyRing::new(["l"]);
        let l = r.var("l").unwrap();
        let inv = Poly::term(Monomial::from_pairs([(0, -1)]), Q::one());
        assert_eq!(l.mul_ref(&inv), Poly::one());
        let p = r.parse("l^2 + l^-1").unwrap();
        assert_eq!(p.eval(&[Q::from_int(2)]).unwrap(), Q::ratio(9, 2));
        assert!(p.eval(&[Q::zero()]).is_err());
        let mut m = BTreeMap::new();
        m.insert(0, r.parse("3*l").unwrap());
        assert_eq!(p.substitute(&m).unwrap(), r.parse("9*l^2 + 1/3*l^-1").unwrap());
    }

    #[test]
    fn linear_part_and_vanishing() {
        let r = ring();
        let p = r.parse("q1*q2 - q1 + 5*q3 + 7").unwrap();
        let lin = p.linear_part();
        assert_eq!(lin[&0], Q::from_int(-1));
        assert_eq!(lin[&2], Q::from_int(5));
        assert_eq!(p.vanish(&[0]), r.parse("5*q3 + 7").unwrap());
    }
}
