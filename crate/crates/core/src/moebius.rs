//! Möbius maps acting on `ℂP¹` and on `V(λ)`, poles and polar derivatives.
//!
//! A map `φ = [[a,b],[c,d]]` acts on points by matrix multiplication and on
//! polynomials by substituting the adjugate, `p(x,y) ↦ p(dx − by, −cx + ay)`.
//! The adjugate is `det φ · φ^{-1}`, so roots move by `φ` exactly as with the
//! true inverse, the action is a group homomorphism, and for `det φ = 1` the
//! two substitutions coincide. Keeping the adjugate makes every identity of
//! the form "`φ^{-1} ∘ D ∘ φ = det(φ)·D`" exact for non-unimodular maps.

use num_traits::Zero;

use crate::degree::Mono;
use crate::error::{Error, Result};
use crate::poly::{BiHomPoly, Var, P1};
use crate::scalar::GaussRat;
use std::collections::BTreeMap;

/// Invertible `[[a,b],[c,d]]` over `ℚ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoebiusMap {
    pub a: GaussRat,
    pub b: GaussRat,
    pub c: GaussRat,
    pub d: GaussRat,
}

impl MoebiusMap {
    pub fn new(a: GaussRat, b: GaussRat, c: GaussRat, d: GaussRat) -> Result<Self> {
        let m = MoebiusMap { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(m)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(GaussRat::int(a), GaussRat::int(b), GaussRat::int(c), GaussRat::int(d))
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).expect("nonsingular")
    }

    /// `z ↦ z + t`.
    pub fn translation(t: GaussRat) -> Self {
        Self::new(GaussRat::one(), t, GaussRat::zero(), GaussRat::one()).expect("nonsingular")
    }

    /// `z ↦ −z`, exchanging the upper and lower half-planes.
    pub fn reflection() -> Self {
        Self::from_ints(-1, 0, 0, 1).expect("nonsingular")
    }

    /// Cayley transform `z ↦ (z − i)/(z + i)`, taking `H₊` onto the unit disk.
    pub fn cayley() -> Self {
        Self::new(GaussRat::one(), -GaussRat::i(), GaussRat::one(), GaussRat::i()).expect("nonsingular")
    }

    pub fn det(&self) -> GaussRat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    /// `[[d,−b],[−c,a]]`.
    pub fn adjugate(&self) -> Self {
        MoebiusMap { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    /// Exact `φ^{-1} = adj(φ)/det(φ)`.
    pub fn inverse(&self) -> Self {
        let inv = self.det().inv().expect("nonsingular");
        let adj = self.adjugate();
        MoebiusMap { a: &adj.a * &inv, b: &adj.b * &inv, c: &adj.c * &inv, d: &adj.d * &inv }
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        MoebiusMap {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        MoebiusMap { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }

    /// `(aα + bβ : cα + dβ)`.
    pub fn apply_point(&self, z: &P1) -> P1 {
        P1 { a: &self.a * &z.a + &self.b * &z.b, b: &self.c * &z.a + &self.d * &z.b }
    }

    /// `(−d : c)`, the preimage of `∞`.
    pub fn pole(&self) -> P1 {
        P1 { a: -&self.d, b: self.c.clone() }
    }

    /// A unimodular map whose pole is the given point.
    pub fn with_pole(pole: &P1) -> Self {
        // c = β, d = −α, and det = −aα − bβ = 1.
        let (alpha, beta) = (&pole.a, &pole.b);
        let (a, b) = if !alpha.is_zero() {
            (-alpha.inv().expect("nonzero"), GaussRat::zero())
        } else {
            (GaussRat::zero(), -beta.inv().expect("nonzero"))
        };
        Self::new(a, b, beta.clone(), -alpha).expect("det is 1")
    }

    /// The map rescaled to real entries, if some complex multiple of it is real.
    pub fn real_form(&self) -> Option<MoebiusMap> {
        let pivot = [&self.a, &self.b, &self.c, &self.d].into_iter().find(|e| !e.is_zero())?;
        let inv = pivot.inv()?;
        let m = self.scale(&inv);
        [&m.a, &m.b, &m.c, &m.d].iter().all(|e| e.is_real()).then_some(m)
    }
}

/// One map per variable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoebiusTuple(pub Vec<MoebiusMap>);

impl MoebiusTuple {
    pub fn new(maps: Vec<MoebiusMap>) -> Self {
        MoebiusTuple(maps)
    }

    pub fn identity(m: usize) -> Self {
        MoebiusTuple(vec![MoebiusMap::identity(); m])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn inverse(&self) -> Self {
        MoebiusTuple(self.0.iter().map(MoebiusMap::inverse).collect())
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(MoebiusTuple(self.0.iter().zip(&other.0).map(|(a, b)| a.compose(b)).collect()))
    }

    /// Repeats map `k` over `counts[k]` consecutive pairs.
    pub fn repeat(&self, counts: &[u32]) -> Self {
        MoebiusTuple(
            self.0.iter().zip(counts).flat_map(|(m, &n)| std::iter::repeat_n(m.clone(), n as usize)).collect(),
        )
    }
}

/// Acts on `p` pairwise by substituting the adjugate of each map.
pub fn act_poly(phi: &MoebiusTuple, p: &BiHomPoly) -> Result<BiHomPoly> {
    if phi.arity() != p.arity() {
        return Err(Error::ArityMismatch(p.arity(), phi.arity()));
    }
    let mut cur = p.clone();
    for (k, m) in phi.0.iter().enumerate() {
        let adj = m.adjugate();
        cur = substitute_pair(&cur, k, &adj);
    }
    Ok(cur)
}

/// Single-map convenience for univariate polynomials.
pub fn act_univariate(phi: &MoebiusMap, p: &BiHomPoly) -> Result<BiHomPoly> {
    act_poly(&MoebiusTuple(vec![phi.clone()]), p)
}

/// `p(…, αx_k + βy_k, γx_k + δy_k, …)` for `s = [[α,β],[γ,δ]]`.
pub(crate) fn substitute_pair(p: &BiHomPoly, k: usize, s: &MoebiusMap) -> BiHomPoly {
    let n = p.degree().0[k];
    // Images of x^i y^{n−i} as coefficient vectors in the x-exponent.
    let lx = [s.b.clone(), s.a.clone()]; // αx + βy: coeff of y then x
    let ly = [s.d.clone(), s.c.clone()];
    let px = power_vectors(&lx, n);
    let py = power_vectors(&ly, n);
    let mut images = Vec::with_capacity(n as usize + 1);
    for i in 0..=n as usize {
        images.push(poly_mul(&px[i], &py[n as usize - i]));
    }
    let mut acc: BTreeMap<Mono, GaussRat> = BTreeMap::new();
    for (mu, c) in p.terms() {
        let img = &images[mu[k] as usize];
        for (j, v) in img.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut nu = mu.to_vec();
            nu[k] = j as u32;
            let t = c * v;
            acc.entry(Mono(nu)).and_modify(|e| *e += &t).or_insert(t);
        }
    }
    BiHomPoly::from_raw(p.degree().clone(), acc)
}

fn power_vectors(lin: &[GaussRat; 2], n: u32) -> Vec<Vec<GaussRat>> {
    let mut out = vec![vec![GaussRat::one()]];
    for i in 0..n as usize {
        let next = poly_mul(&out[i], lin);
        out.push(next);
    }
    out
}

fn poly_mul(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut out = vec![GaussRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// `d_φ p = (d·∂_{x_k} − c·∂_{y_k}) p`, the derivative conjugated by `φ`.
pub fn polar_derivative(phi: &MoebiusMap, p: &BiHomPoly, k: usize) -> Result<BiHomPoly> {
    let dx = p.partial(k, Var::X)?.scale(&phi.d);
    let dy = p.partial(k, Var::Y)?.scale(&phi.c);
    dx.sub(&dy)
}

impl MoebiusMap {
    /// `true` if `det` is a positive rational (orientation-preserving on `ℝ̄`
    /// for real maps).
    pub fn det_is_positive_real(&self) -> bool {
        let d = self.det();
        d.is_real() && d.re > num_rational::BigRational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::DegreeVec;
    use crate::poly::ProjPoint;
    use crate::scalar::{rat, Rat};

    fn pt(z: i64) -> P1 {
        P1::real(rat(z))
    }

    #[test]
    fn point_action() {
        assert_eq!(MoebiusMap::identity().apply_point(&pt(3)), pt(3));
        let rot = MoebiusMap::from_ints(0, -1, 1, 0).unwrap();
        assert_eq!(rot.apply_point(&P1::infinity()), pt(0));
        let t = MoebiusMap::translation(GaussRat::int(5));
        assert_eq!(t.apply_point(&pt(2)), pt(7));
    }

    #[test]
    fn translation_moves_root() {
        // x − 2y has root (2:1); translating by 3 moves it to (5:1).
        let p = BiHomPoly::univariate_ints(&[-2, 1]);
        let q = act_univariate(&MoebiusMap::translation(GaussRat::int(3)), &p).unwrap();
        assert_eq!(q, BiHomPoly::univariate_ints(&[-5, 1]));
    }

    #[test]
    fn poles() {
        assert_eq!(MoebiusMap::identity().pole(), P1::infinity());
        assert_eq!(MoebiusMap::from_ints(0, -1, 1, 0).unwrap().pole(), pt(0));
        let x0 = P1::finite(GaussRat::new(Rat::new(3.into(), 4.into()), rat(-2)));
        let phi = MoebiusMap::with_pole(&x0);
        assert!(phi.is_unimodular());
        assert_eq!(phi.pole(), x0);
        assert_eq!(phi.inverse().apply_point(&P1::infinity()), x0);
        let inf = MoebiusMap::with_pole(&P1::infinity());
        assert!(inf.is_unimodular());
        assert!(inf.pole().is_infinity());
    }

    #[test]
    fn polar_derivative_examples() {
        let p = BiHomPoly::univariate_ints(&[2, -3, 1]); // (x−y)(x−2y)
        let id = MoebiusMap::identity();
        assert_eq!(polar_derivative(&id, &p, 0).unwrap(), p.partial(0, Var::X).unwrap());
        // Pole (0:1): c = 1, d = 0 → −∂_y p = 3x − 4y.
        let phi = MoebiusMap::from_ints(0, -1, 1, 0).unwrap();
        assert_eq!(polar_derivative(&phi, &p, 0).unwrap(), BiHomPoly::univariate_ints(&[-4, 3]));
    }

    #[test]
    fn act_identity_and_inverse() {
        let p = BiHomPoly::from_terms(
            DegreeVec::new(vec![2, 1]),
            [(vec![2, 1], GaussRat::int(3)), (vec![0, 0], GaussRat::ints(1, -1)), (vec![1, 0], GaussRat::int(2))],
        )
        .unwrap();
        let id = MoebiusTuple::identity(2);
        assert_eq!(act_poly(&id, &p).unwrap(), p);
        let phi = MoebiusTuple(vec![
            MoebiusMap::from_ints(2, 1, 1, 3).unwrap(),
            MoebiusMap::new(GaussRat::i(), GaussRat::one(), GaussRat::int(2), GaussRat::zero()).unwrap(),
        ]);
        let there = act_poly(&phi, &p).unwrap();
        assert_eq!(act_poly(&phi.inverse(), &there).unwrap(), p);
        // Roots follow the point action.
        let z = ProjPoint(vec![pt(1), pt(2)]);
        let moved = ProjPoint(phi.0.iter().zip(&z.0).map(|(m, q)| m.apply_point(q)).collect());
        let v0 = p.evaluate(&z).unwrap();
        let v1 = there.evaluate(&moved).unwrap();
        assert_eq!(v0.is_zero(), v1.is_zero());
    }
}
