//! Dense univariate polynomials in the affine coordinate `t = x/y` over an
//! exact field, with gcds, square-free factorization, Sturm sequences and
//! rational real-root isolation.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::BiHomPoly;
use crate::scalar::{simplest_between, GaussRat, Rat};

/// Exact field scalars usable in [`UPoly`].
pub trait Field:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn from_u64(n: u64) -> Self;
}

impl Field for Rat {
    fn from_u64(n: u64) -> Self {
        Rat::from_integer(n.into())
    }
}

impl Field for GaussRat {
    fn from_u64(n: u64) -> Self {
        GaussRat::real(Rat::from_integer(n.into()))
    }
}

/// `Σ c[k] t^k`, trimmed so the last coefficient is nonzero (empty = 0).
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F: Field> {
    c: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(a: F) -> Self {
        Self::new(vec![a])
    }

    /// `t − r`.
    pub fn linear_root(r: F) -> Self {
        Self::new(vec![-r, F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn lc(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.c.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.c.iter().map(|c| c.clone() * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(l) => {
                let inv = F::one() / l;
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = F::zero();
        Self::new((0..n).map(|k| self.c.get(k).unwrap_or(&z).clone() + o.c.get(k).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = F::zero();
        Self::new((0..n).map(|k| self.c.get(k).unwrap_or(&z).clone() - o.c.get(k).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(k, c)| c.clone() * &F::from_u64(k as u64)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dn = d.degree().expect("division by the zero polynomial");
        let lc_inv = F::one() / d.lc().expect("nonzero");
        let mut r = self.c.clone();
        if r.len() <= dn {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let f = r[k + dn].clone() * &lc_inv;
            if f.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[k + j] = r[k + j].clone() - &(f.clone() * dc);
            }
            q[k] = f;
        }
        r.truncate(dn);
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free factorization: `self = lc · Π f_i^i` with `f_i`
    /// monic, square-free and pairwise coprime; `out[i-1] = f_i`.
    pub fn squarefree_factors(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.div_exact(&a);
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|f| f.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Square-free part, monic.
    pub fn squarefree_part(&self) -> Self {
        self.squarefree_factors().iter().fold(Self::constant(F::one()), |acc, f| acc.mul(f))
    }

    /// `self(t)^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(F::one()), |acc, _| acc.mul(self))
    }
}

/// Dehomogenizes `p ∈ V(n)` to `Σ p_k t^k`; the degree drop is the root
/// multiplicity at `∞`.
pub fn dehomogenize(p: &BiHomPoly) -> UPoly<GaussRat> {
    UPoly::new(p.univariate_coeffs())
}

/// Real parts of a univariate, as a polynomial over ℚ.
pub fn real_part(p: &UPoly<GaussRat>) -> UPoly<Rat> {
    UPoly::new(p.coeffs().iter().map(|c| c.re.clone()).collect())
}

pub fn imag_part(p: &UPoly<GaussRat>) -> UPoly<Rat> {
    UPoly::new(p.coeffs().iter().map(|c| c.im.clone()).collect())
}

pub fn to_gauss(p: &UPoly<Rat>) -> UPoly<GaussRat> {
    UPoly::new(p.coeffs().iter().map(|c| GaussRat::real(c.clone())).collect())
}

/// Infinity multiplicity of `p ∈ V(n)`.
pub fn infinity_multiplicity(p: &BiHomPoly) -> u32 {
    let n = p.degree().0[0];
    match dehomogenize(p).degree() {
        Some(d) => n - d as u32,
        None => n,
    }
}

/// Sturm sequence of a real polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<UPoly<Rat>>,
    // positive multiples of `seq` with integer coefficients, for sign evaluation
    ints: Vec<Vec<BigInt>>,
}

fn sign_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last: Option<Sign> = None;
    let mut n = 0;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if last.is_some_and(|l| l != s) {
            n += 1;
        }
        last = Some(s);
    }
    n
}

/// Sign of `Σ c_k a^k b^(n−k)`, which is the sign of `p(a/b)` for `b > 0`.
fn homogeneous_sign(c: &[BigInt], a: &BigInt, b: &BigInt) -> Sign {
    let Some((lead, rest)) = c.split_last() else {
        return Sign::NoSign;
    };
    let mut acc = lead.clone();
    let mut bk = BigInt::one();
    for ck in rest.iter().rev() {
        bk *= b;
        acc = acc * a + ck * &bk;
    }
    acc.sign()
}

impl UPoly<Rat> {
    /// Positive multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Self {
        let den = self.c.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = self.c.iter().fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * &den / c.denom())));
        if num.is_zero() {
            return self.clone();
        }
        self.scale(&Rat::new(den, num))
    }
}

impl Sturm {
    pub fn new(p: &UPoly<Rat>) -> Self {
        let mut seq = vec![p.clone()];
        if p.degree().unwrap_or(0) > 0 {
            // positive rescaling keeps every sign count; it only bounds coefficient growth
            seq.push(p.derivative().primitive());
            loop {
                let n = seq.len();
                let r = seq[n - 2].div_rem(&seq[n - 1]).1;
                if r.is_zero() {
                    break;
                }
                seq.push(r.scale(&-Rat::one()).primitive());
            }
        }
        let ints = seq.iter().map(|q| q.primitive().c.iter().map(|c| c.numer().clone()).collect()).collect();
        Sturm { seq, ints }
    }

    /// Degree of the last element, `deg gcd(p, p')`.
    pub fn gcd_degree(&self) -> usize {
        self.seq.last().and_then(|g| g.degree()).unwrap_or(0)
    }

    pub fn poly(&self) -> &UPoly<Rat> {
        &self.seq[0]
    }

    fn sign_at(&self, i: usize, t: &Rat) -> Sign {
        homogeneous_sign(&self.ints[i], t.numer(), t.denom())
    }

    fn var_at(&self, t: &Rat) -> usize {
        sign_changes((0..self.ints.len()).map(|i| self.sign_at(i, t)))
    }

    fn var_at_inf(&self, positive: bool) -> usize {
        sign_changes(self.ints.iter().map(|c| {
            let s = c.last().map_or(Sign::NoSign, BigInt::sign);
            if !positive && c.len() % 2 == 0 {
                -s
            } else {
                s
            }
        }))
    }

    fn var_bound(&self, t: Option<&Rat>, positive_inf: bool) -> usize {
        match t {
            Some(t) => self.var_at(t),
            None => self.var_at_inf(positive_inf),
        }
    }

    /// Distinct real roots in the open interval `(lo, hi)`; `None` is `∓∞`.
    /// Exact for square-free polynomials, endpoints may be roots.
    pub fn count_open(&self, lo: Option<&Rat>, hi: Option<&Rat>) -> usize {
        let a = self.var_bound(lo, false);
        let b = self.var_bound(hi, true);
        let at_hi = hi.is_some_and(|h| self.sign_at(0, h) == Sign::NoSign);
        (a - b) - usize::from(at_hi)
    }

    /// All distinct real roots.
    pub fn count_all(&self) -> usize {
        self.count_open(None, None)
    }
}

/// A real root pinned in `(lo, hi)`, or exactly `lo` when `lo == hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub lo: Rat,
    pub hi: Rat,
}

impl RealRoot {
    pub fn exact(r: Rat) -> Self {
        RealRoot { lo: r.clone(), hi: r }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }
}

/// Cauchy bound: every root satisfies `|t| < 1 + max |c_k / c_n|`.
pub fn cauchy_bound(p: &UPoly<Rat>) -> Rat {
    let lc = p.lc().expect("nonzero").abs();
    let m = p.coeffs()[..p.coeffs().len() - 1].iter().map(|c| c.abs() / &lc).fold(Rat::zero(), |a, b| a.max(b));
    m + Rat::one()
}

/// Isolates the distinct real roots of a square-free `p` in increasing order.
/// Rational roots found during bisection or by a simplest-rational probe are
/// reported exactly.
pub fn isolate_real_roots(p: &UPoly<Rat>) -> Vec<RealRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let st = Sturm::new(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = st.count_open(Some(&lo), Some(&hi));
        if n == 0 {
            continue;
        }
        if n == 1 {
            let probe = simplest_between(&lo, &hi);
            if p.eval(&probe).is_zero() {
                out.push(RealRoot::exact(probe));
            } else {
                out.push(RealRoot { lo, hi });
            }
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(2.into());
        if p.eval(&mid).is_zero() {
            out.push(RealRoot::exact(mid.clone()));
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Bisects a simple root's isolating interval to width at most `width`.
pub fn refine_root(p: &UPoly<Rat>, r: &RealRoot, width: &Rat) -> RealRoot {
    let mut r = r.clone();
    if r.is_exact() {
        return r;
    }
    let mut s_lo = p.eval(&r.lo).is_positive();
    while &r.width() > width {
        let mid = r.midpoint();
        let v = p.eval(&mid);
        if v.is_zero() {
            return RealRoot::exact(mid);
        }
        if v.is_positive() == s_lo {
            r.lo = mid;
            s_lo = v.is_positive();
        } else {
            r.hi = mid;
        }
    }
    r
}

/// `true` iff `r` is a root of `g` (which must share the square-free
/// isolating interval of `r` with its parent polynomial).
pub fn root_of(g: &UPoly<Rat>, r: &RealRoot) -> bool {
    if g.is_zero() {
        return true;
    }
    if r.is_exact() {
        return g.eval(&r.lo).is_zero();
    }
    Sturm::new(g).count_open(Some(&r.lo), Some(&r.hi)) > 0
}

/// Real roots with multiplicity of `p ≠ 0`, increasing.
pub fn real_roots_with_multiplicity(p: &UPoly<Rat>) -> Vec<(RealRoot, u32)> {
    let mut out = Vec::new();
    for (i, f) in p.squarefree_factors().iter().enumerate() {
        for r in isolate_real_roots(f) {
            out.push((r, i as u32 + 1));
        }
    }
    separate_and_sort(p, out)
}

/// `true` if the isolating sets (open intervals or points) cannot hold the same root.
pub fn disjoint(a: &RealRoot, b: &RealRoot) -> bool {
    match (a.is_exact(), b.is_exact()) {
        (true, true) => a.lo != b.lo,
        (true, false) => !(b.lo < a.lo && a.lo < b.hi),
        (false, true) => !(a.lo < b.lo && b.lo < a.hi),
        (false, false) => a.hi <= b.lo || b.hi <= a.lo,
    }
}

// Roots from different square-free factors are distinct; shrink their
// intervals until pairwise disjoint so sorting by midpoint is sound.
fn separate_and_sort(p: &UPoly<Rat>, mut roots: Vec<(RealRoot, u32)>) -> Vec<(RealRoot, u32)> {
    let factors = p.squarefree_factors();
    loop {
        let clash = (0..roots.len())
            .flat_map(|i| (i + 1..roots.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !disjoint(&roots[i].0, &roots[j].0));
        let Some((i, j)) = clash else { break };
        for k in [i, j] {
            let (r, m) = roots[k].clone();
            if !r.is_exact() {
                let w = r.width() / Rat::from_integer(4.into());
                roots[k] = (refine_root(&factors[m as usize - 1], &r, &w), m);
            }
        }
    }
    roots.sort_by_key(|a| a.0.midpoint());
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn q(c: &[i64]) -> UPoly<Rat> {
        UPoly::new(c.iter().map(|&k| rat(k)).collect())
    }

    #[test]
    fn arithmetic_and_gcd() {
        let a = q(&[-1, 0, 1]); // t² − 1
        let b = q(&[1, 1]); // t + 1
        let (qq, r) = a.div_rem(&b);
        assert_eq!(qq, q(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&q(&[-1, 0, 0, 1])), q(&[-1, 1]));
        assert_eq!(a.derivative(), q(&[0, 2]));
    }

    #[test]
    fn yun() {
        // (t−1)³ (t+2)
        let p = q(&[-1, 1]).pow(3).mul(&q(&[2, 1]));
        let f = p.squarefree_factors();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], q(&[2, 1]));
        assert_eq!(f[1].degree(), Some(0));
        assert_eq!(f[2], q(&[-1, 1]));
        assert_eq!(p.squarefree_part(), q(&[-2, 1, 1]));
    }

    #[test]
    fn sturm_counts() {
        let p = q(&[2, -3, 1]); // roots 1, 2
        let s = Sturm::new(&p);
        assert_eq!(s.count_all(), 2);
        assert_eq!(s.count_open(Some(&rat(1)), Some(&rat(2))), 0);
        assert_eq!(s.count_open(Some(&rat(0)), Some(&rat(2))), 1);
        assert_eq!(s.count_open(Some(&ratio(1, 2)), None), 2);
        assert_eq!(Sturm::new(&q(&[1, 0, 1])).count_all(), 0);
        // (t − 1)²(t + 3), distinct roots counted once; last element is t − 1
        let s = Sturm::new(&q(&[3, -5, 1, 1]));
        assert_eq!((s.count_all(), s.gcd_degree()), (2, 1));
        assert_eq!(s.count_open(Some(&ratio(-7, 2)), Some(&rat(1))), 1);
    }

    #[test]
    fn primitive_is_a_positive_multiple() {
        let p = UPoly::new(vec![ratio(-1, 2), ratio(3, 4), ratio(-5, 6)]);
        assert_eq!(p.primitive(), q(&[-6, 9, -10]));
    }

    #[test]
    fn isolation() {
        let r = isolate_real_roots(&q(&[2, -3, 1]));
        assert_eq!(r, vec![RealRoot::exact(rat(1)), RealRoot::exact(rat(2))]);
        let r = isolate_real_roots(&q(&[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        let s2 = refine_root(&q(&[-2, 0, 1]), &r[1], &ratio(1, 1_000_000));
        assert!(&s2.lo * &s2.lo < rat(2) && &s2.hi * &s2.hi > rat(2));
        let m = real_roots_with_multiplicity(&q(&[-1, 1]).pow(2).mul(&q(&[0, 1])));
        assert_eq!(m, vec![(RealRoot::exact(rat(0)), 1), (RealRoot::exact(rat(1)), 2)]);
    }
}
