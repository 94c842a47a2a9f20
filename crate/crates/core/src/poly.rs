//! Bihomogeneous polynomials `V(λ)`, projective points and (de)homogenization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::degree::{DegreeVec, Mono};
use crate::error::{Error, Result};
use crate::scalar::{rat, GaussRat, Rat};

/// A point `(a:b)` of `ℂP¹`; `(0,0)` is rejected.
#[derive(Clone, Debug)]
pub struct P1 {
    pub a: GaussRat,
    pub b: GaussRat,
}

impl P1 {
    pub fn new(a: GaussRat, b: GaussRat) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegeneratePoint);
        }
        Ok(P1 { a, b })
    }

    /// `(z:1)`.
    pub fn finite(z: GaussRat) -> Self {
        P1 { a: z, b: GaussRat::one() }
    }

    pub fn real(r: Rat) -> Self {
        Self::finite(GaussRat::real(r))
    }

    /// The point at infinity `(−1:0)`.
    pub fn infinity() -> Self {
        P1 { a: GaussRat::int(-1), b: GaussRat::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }

    /// Affine coordinate `a/b`, `None` at infinity.
    pub fn affine(&self) -> Option<GaussRat> {
        if self.b.is_zero() {
            None
        } else {
            Some(&self.a / &self.b)
        }
    }

    /// Projective equality `a·b' = a'·b`.
    pub fn proj_eq(&self, other: &P1) -> bool {
        &self.a * &other.b == &other.a * &self.b
    }

    /// Representative `(z:1)` or `(−1:0)`.
    pub fn normalized(&self) -> P1 {
        match self.affine() {
            Some(z) => P1::finite(z),
            None => P1::infinity(),
        }
    }
}

impl PartialEq for P1 {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.a, self.b)
    }
}

/// A point of `(ℂP¹)^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPoint(pub Vec<P1>);

impl ProjPoint {
    pub fn new(coords: Vec<P1>) -> Self {
        ProjPoint(coords)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Builds from raw pairs, rejecting any `(0,0)`.
    pub fn from_pairs(pairs: Vec<(GaussRat, GaussRat)>) -> Result<Self> {
        pairs.into_iter().map(|(a, b)| P1::new(a, b)).collect::<Result<Vec<_>>>().map(ProjPoint)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Which variable of a pair a partial derivative acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Element of `V(λ)`: `Σ_{μ≤λ} p_μ x^μ y^{λ−μ}`, stored sparsely by `μ`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiHomPoly {
    degree: DegreeVec,
    coeffs: BTreeMap<Mono, GaussRat>,
}

impl BiHomPoly {
    pub fn zero(degree: DegreeVec) -> Self {
        BiHomPoly { degree, coeffs: BTreeMap::new() }
    }

    /// The constant `c ∈ V(0^m)`.
    pub fn constant(m: usize, c: GaussRat) -> Self {
        Self::monomial(DegreeVec::zeros(m), vec![0; m], c).expect("constant is in range")
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, GaussRat::one())
    }

    pub fn monomial(degree: DegreeVec, mu: Vec<u32>, c: GaussRat) -> Result<Self> {
        let mut p = Self::zero(degree);
        p.add_term(mu, c)?;
        Ok(p)
    }

    /// Sums the given terms; repeated indices accumulate.
    pub fn from_terms(degree: DegreeVec, terms: impl IntoIterator<Item = (Vec<u32>, GaussRat)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (mu, c) in terms {
            p.add_term(mu, c)?;
        }
        Ok(p)
    }

    /// Univariate `Σ c_k x^k y^{n−k}` from `c[0..=n]`.
    pub fn univariate(coeffs: &[GaussRat]) -> Self {
        assert!(!coeffs.is_empty(), "V(n) needs n+1 coefficients");
        let n = coeffs.len() as u32 - 1;
        Self::from_terms(
            DegreeVec::univariate(n),
            coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())),
        )
        .expect("indices in range")
    }

    /// Univariate with integer coefficients `c[k]` on `x^k y^{n−k}`.
    pub fn univariate_ints(coeffs: &[i64]) -> Self {
        Self::univariate(&coeffs.iter().map(|&c| GaussRat::int(c)).collect::<Vec<_>>())
    }

    /// `b·x − a·y ∈ V(1)`, vanishing exactly at `(a:b)`.
    pub fn linear_form_vanishing_at(p: &P1) -> Self {
        Self::univariate(&[-&p.a, p.b.clone()])
    }

    pub(crate) fn add_term(&mut self, mu: Vec<u32>, c: GaussRat) -> Result<()> {
        if !self.degree.dominates(&mu) {
            return Err(Error::DegreeOverflow { exponent: mu, degree: self.degree.clone() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let key = Mono(mu);
        let remove = match self.coeffs.get_mut(&key) {
            Some(v) => {
                *v += &c;
                v.is_zero()
            }
            None => {
                self.coeffs.insert(key.clone(), c);
                false
            }
        };
        if remove {
            self.coeffs.remove(&key);
        }
        Ok(())
    }

    pub fn degree(&self) -> &DegreeVec {
        &self.degree
    }

    pub fn arity(&self) -> usize {
        self.degree.arity()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient `p_μ` (zero when absent).
    pub fn coeff(&self, mu: &[u32]) -> GaussRat {
        self.coeffs.get(&Mono(mu.to_vec())).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &GaussRat)> {
        self.coeffs.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Coefficients `c[k]` of `x^k y^{n−k}` for a univariate polynomial.
    pub fn univariate_coeffs(&self) -> Vec<GaussRat> {
        assert_eq!(self.arity(), 1, "univariate polynomial expected");
        let n = self.degree.0[0] as usize;
        let mut out = vec![GaussRat::zero(); n + 1];
        for (mu, c) in self.terms() {
            out[mu[0] as usize] = c.clone();
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.values().all(GaussRat::is_real)
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussRat) -> GaussRat) -> Self {
        let mut out = Self::zero(self.degree.clone());
        for (mu, c) in &self.coeffs {
            let v = f(c);
            if !v.is_zero() {
                out.coeffs.insert(mu.clone(), v);
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(GaussRat::conj)
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree.clone(), other.degree.clone()));
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu.0.clone(), c.clone())?;
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree.clone());
        }
        self.map_coeffs(|c| c * s)
    }

    /// Product in `V(λ+α)`; both factors must have the same arity.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let degree = self.degree.add(&other.degree)?;
        let mut acc: BTreeMap<Mono, GaussRat> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let mu = Mono(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                let prod = ca * cb;
                acc.entry(mu).and_modify(|v| *v += &prod).or_insert(prod);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(BiHomPoly { degree, coeffs: acc })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity());
        for _ in 0..e {
            acc = acc.mul(self).expect("same arity");
        }
        acc
    }

    /// `p ⊗ q ∈ V(λ ⊔ α)` with the variables of `q` appended after those of `p`.
    pub fn tensor(&self, other: &Self) -> Self {
        let degree = self.degree.concat(&other.degree);
        let mut coeffs = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let mut mu = a.0.clone();
                mu.extend_from_slice(&b.0);
                coeffs.insert(Mono(mu), ca * cb);
            }
        }
        BiHomPoly { degree, coeffs }
    }

    /// The multiplication map `V(λ ⊔ α) → V(λ+α)` identifying pair `k` of the
    /// first group with pair `k` of the second.
    pub fn collapse_groups(&self) -> Result<Self> {
        let m2 = self.arity();
        if !m2.is_multiple_of(2) {
            return Err(Error::ArityMismatch(m2, m2 + 1));
        }
        let m = m2 / 2;
        let (l, a) = self.degree.0.split_at(m);
        let degree = DegreeVec::new(l.to_vec()).add(&DegreeVec::new(a.to_vec()))?;
        Self::from_terms(
            degree,
            self.coeffs.iter().map(|(mu, c)| ((0..m).map(|k| mu.0[k] + mu.0[m + k]).collect(), c.clone())),
        )
    }

    /// `∂_{x_k}` or `∂_{y_k}`; lands in `V(λ − δ_k)`.
    pub fn partial(&self, k: usize, which: Var) -> Result<Self> {
        let degree = self.degree.lower(k)?;
        let n = self.degree.0[k];
        let mut out = Self::zero(degree);
        for (mu, c) in &self.coeffs {
            let e = match which {
                Var::X => mu.0[k],
                Var::Y => n - mu.0[k],
            };
            if e == 0 {
                continue;
            }
            let mut nu = mu.0.clone();
            if which == Var::X {
                nu[k] -= 1;
            }
            out.coeffs.insert(Mono(nu), c.scale(&rat(e as i64)));
        }
        Ok(out)
    }

    /// Value at the given representative.
    pub fn evaluate(&self, z: &ProjPoint) -> Result<GaussRat> {
        if z.arity() != self.arity() {
            return Err(Error::ArityMismatch(self.arity(), z.arity()));
        }
        let pows: Vec<(Vec<GaussRat>, Vec<GaussRat>)> = z
            .0
            .iter()
            .zip(&self.degree.0)
            .map(|(p, &n)| (powers(&p.a, n), powers(&p.b, n)))
            .collect();
        let mut acc = GaussRat::zero();
        for (mu, c) in &self.coeffs {
            let mut t = c.clone();
            for (k, &e) in mu.0.iter().enumerate() {
                let n = self.degree.0[k];
                t = &t * &pows[k].0[e as usize];
                t = &t * &pows[k].1[(n - e) as usize];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes points for every pair except `k`, leaving an element of `V(λ_k)`.
    pub fn section(&self, k: usize, z: &ProjPoint) -> Result<Self> {
        if z.arity() != self.arity() || k >= self.arity() {
            return Err(Error::ArityMismatch(self.arity(), z.arity()));
        }
        let pows: Vec<(Vec<GaussRat>, Vec<GaussRat>)> = z
            .0
            .iter()
            .zip(&self.degree.0)
            .map(|(p, &n)| (powers(&p.a, n), powers(&p.b, n)))
            .collect();
        let mut out = Self::zero(DegreeVec::univariate(self.degree.0[k]));
        for (mu, c) in &self.coeffs {
            let mut t = c.clone();
            for (j, &e) in mu.0.iter().enumerate() {
                if j == k {
                    continue;
                }
                let n = self.degree.0[j];
                t = &t * &pows[j].0[e as usize];
                t = &t * &pows[j].1[(n - e) as usize];
            }
            out.add_term(vec![mu.0[k]], t)?;
        }
        Ok(out)
    }

    /// Coefficient of `x^λ` equals 1.
    pub fn is_top_degree_monic(&self) -> bool {
        self.coeff(&self.degree.0).is_one()
    }

    /// `Hmg_λ(f)`: `x^μ ↦ x^μ y^{λ−μ}`.
    pub fn homogenize(f: &AffinePoly, degree: &DegreeVec) -> Result<Self> {
        if f.arity != degree.arity() {
            return Err(Error::ArityMismatch(f.arity, degree.arity()));
        }
        Self::from_terms(degree.clone(), f.coeffs.iter().map(|(mu, c)| (mu.clone(), c.clone())))
    }

    /// Sets every `y_k = 1`.
    pub fn dehomogenize(&self) -> AffinePoly {
        AffinePoly {
            arity: self.arity(),
            coeffs: self.coeffs.iter().map(|(mu, c)| (mu.0.clone(), c.clone())).collect(),
        }
    }

    /// Renames the pairs: pair `j` of the result is pair `perm[j]` of `self`.
    pub fn permute_pairs(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity());
        let degree = DegreeVec::new(perm.iter().map(|&j| self.degree.0[j]).collect());
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mu, c)| (Mono(perm.iter().map(|&j| mu.0[j]).collect()), c.clone()))
            .collect();
        BiHomPoly { degree, coeffs }
    }

    /// Dense coefficient vector over the graded-lex basis of `V(λ)`.
    pub fn to_dense(&self) -> Vec<GaussRat> {
        self.degree.monomials().iter().map(|m| self.coeff(&m.0)).collect()
    }

    pub fn from_dense(degree: DegreeVec, v: &[GaussRat]) -> Self {
        let basis = degree.monomials();
        assert_eq!(basis.len(), v.len(), "dense vector length");
        Self::from_terms(degree, basis.into_iter().zip(v.iter().cloned()).map(|(m, c)| (m.0, c)))
            .expect("basis indices are in range")
    }

    pub(crate) fn from_raw(degree: DegreeVec, mut coeffs: BTreeMap<Mono, GaussRat>) -> Self {
        coeffs.retain(|_, v| !v.is_zero());
        debug_assert!(coeffs.keys().all(|m| degree.dominates(&m.0)));
        BiHomPoly { degree, coeffs }
    }
}

pub(crate) fn powers(z: &GaussRat, n: u32) -> Vec<GaussRat> {
    let mut v = Vec::with_capacity(n as usize + 1);
    v.push(GaussRat::one());
    for i in 0..n as usize {
        let next = &v[i] * z;
        v.push(next);
    }
    v
}

/// Gaussian integer `(re, im)`.
type GaussInt = (BigInt, BigInt);

fn gi_mul(x: &GaussInt, y: &GaussInt) -> GaussInt {
    (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
}

/// Common denominator of the entries.
fn common_denominator<'a>(zs: impl IntoIterator<Item = &'a GaussRat>) -> BigInt {
    zs.into_iter().fold(BigInt::one(), |l, z| l.lcm(z.re.denom()).lcm(z.im.denom()))
}

fn to_gauss_int(z: &GaussRat, scale: &BigInt) -> GaussInt {
    ((&z.re * scale).to_integer(), (&z.im * scale).to_integer())
}

/// Vanishing test without rational normalization: coefficients and point
/// coordinates are scaled to Gaussian integers, which leaves the zero set
/// unchanged.
#[derive(Clone, Debug)]
pub struct ZeroTest {
    degree: DegreeVec,
    terms: Vec<(Vec<u32>, GaussInt)>,
}

impl ZeroTest {
    pub fn new(p: &BiHomPoly) -> Self {
        let l = common_denominator(p.coeffs.values());
        let terms = p.coeffs.iter().map(|(mu, c)| (mu.0.clone(), to_gauss_int(c, &l))).collect();
        ZeroTest { degree: p.degree.clone(), terms }
    }

    /// `p(z) = 0`; panics on an arity mismatch.
    pub fn vanishes_at(&self, z: &ProjPoint) -> bool {
        assert_eq!(z.arity(), self.degree.arity(), "point arity");
        let pows: Vec<(Vec<GaussInt>, Vec<GaussInt>)> = z
            .0
            .iter()
            .zip(&self.degree.0)
            .map(|(w, &n)| {
                let l = common_denominator([&w.a, &w.b]);
                let powers = |x: GaussInt| {
                    let mut v = vec![(BigInt::one(), BigInt::zero())];
                    for i in 0..n as usize {
                        let next = gi_mul(&v[i], &x);
                        v.push(next);
                    }
                    v
                };
                (powers(to_gauss_int(&w.a, &l)), powers(to_gauss_int(&w.b, &l)))
            })
            .collect();
        let mut acc: GaussInt = (BigInt::zero(), BigInt::zero());
        for (mu, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in mu.iter().enumerate() {
                let n = self.degree.0[k];
                t = gi_mul(&t, &pows[k].0[e as usize]);
                t = gi_mul(&t, &pows[k].1[(n - e) as usize]);
            }
            acc.0 += t.0;
            acc.1 += t.1;
        }
        acc.0.is_zero() && acc.1.is_zero()
    }
}

impl fmt::Display for BiHomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let m = self.arity();
        let name = |base: &str, k: usize| if m == 1 { base.to_string() } else { format!("{base}{}", k + 1) };
        let mut first = true;
        for (mu, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for k in 0..m {
                let (ex, ey) = (mu.0[k], self.degree.0[k] - mu.0[k]);
                for (e, b) in [(ex, "x"), (ey, "y")] {
                    match e {
                        0 => {}
                        1 => write!(f, "·{}", name(b, k))?,
                        _ => write!(f, "·{}^{e}", name(b, k))?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiHomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in V{}", self, self.degree)
    }
}

/// Sparse affine polynomial in `x_1, …, x_m` (the dehomogenized side).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoly {
    pub arity: usize,
    pub coeffs: BTreeMap<Vec<u32>, GaussRat>,
}

impl AffinePoly {
    pub fn new(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, GaussRat)>) -> Self {
        let mut coeffs: BTreeMap<Vec<u32>, GaussRat> = BTreeMap::new();
        for (mu, c) in terms {
            assert_eq!(mu.len(), arity);
            let e = coeffs.entry(mu).or_insert_with(GaussRat::zero);
            *e += &c;
        }
        coeffs.retain(|_, v| !v.is_zero());
        AffinePoly { arity, coeffs }
    }

    /// Largest exponent of each variable.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.arity];
        for mu in self.coeffs.keys() {
            for (k, &e) in mu.iter().enumerate() {
                d[k] = d[k].max(e);
            }
        }
        d
    }
}

/// `Σ` of a list of polynomials of one degree.
pub fn sum_all(degree: &DegreeVec, items: impl IntoIterator<Item = BiHomPoly>) -> Result<BiHomPoly> {
    items.into_iter().try_fold(BiHomPoly::zero(degree.clone()), |acc, p| acc.add(&p))
}
