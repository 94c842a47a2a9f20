//! The invariant operator `D = ∂_x⊗∂_y − ∂_y⊗∂_x`, transvectants, the
//! apolarity form, and the symbol isomorphism `Hom(V(λ),V(α)) ≅ V(λ⊔α)`.
//!
//! Tensors live in `V(λ⊔α)`: the first `split` pairs carry the first factor.
//! Full contractions `D^λ` are evaluated in closed form: on a single pair of
//! degree `n`, `D^n(x^{n−j}y^j ⊗ x^j y^{n−j}) = n!·(−1)^j·(n−j)!·j!` and every
//! other monomial pairing vanishes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::degree::{DegreeVec, Mono};
use crate::error::{Error, Result};
use crate::poly::{BiHomPoly, ProjPoint, Var};
use crate::scalar::{GaussRat, Rat};

/// An element of `V(λ) ⊗ V(α)` stored in `V(λ ⊔ α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    pub poly: BiHomPoly,
    /// Number of pairs in the first group.
    pub split: usize,
}

impl TensorPoly {
    pub fn new(poly: BiHomPoly, split: usize) -> Result<Self> {
        if split > poly.arity() {
            return Err(Error::ArityMismatch(split, poly.arity()));
        }
        Ok(TensorPoly { poly, split })
    }

    /// `p ⊗ q`.
    pub fn from_pair(p: &BiHomPoly, q: &BiHomPoly) -> Self {
        TensorPoly { poly: p.tensor(q), split: p.arity() }
    }

    pub fn first_degree(&self) -> DegreeVec {
        DegreeVec::new(self.poly.degree().0[..self.split].to_vec())
    }

    pub fn second_degree(&self) -> DegreeVec {
        DegreeVec::new(self.poly.degree().0[self.split..].to_vec())
    }
}

/// One application of `D` on pair `k` of both groups.
pub fn d_map(t: &TensorPoly, k: usize) -> Result<TensorPoly> {
    let k2 = t.split + k;
    if k >= t.split || k2 >= t.poly.arity() {
        return Err(Error::ArityMismatch(t.split, t.poly.arity()));
    }
    let xy = t.poly.partial(k, Var::X)?.partial(k2, Var::Y)?;
    let yx = t.poly.partial(k, Var::Y)?.partial(k2, Var::X)?;
    Ok(TensorPoly { poly: xy.sub(&yx)?, split: t.split })
}

/// Splits exponents of `p` into the first `m` pairs and the rest, grouping the
/// residual polynomials by their leading part.
fn group_by_head(p: &BiHomPoly, m: usize) -> BTreeMap<Mono, BiHomPoly> {
    let tail = DegreeVec::new(p.degree().0[m..].to_vec());
    let mut out: BTreeMap<Mono, BiHomPoly> = BTreeMap::new();
    for (mu, c) in p.terms() {
        let head = Mono(mu[..m].to_vec());
        let rest = mu[m..].to_vec();
        let entry = out.entry(head).or_insert_with(|| BiHomPoly::zero(tail.clone()));
        entry.add_term(rest, c.clone()).expect("tail index in range");
    }
    out
}

/// `D^λ` contracting the first `m` pairs of `a ∈ V(λ⊔β)` against the first `m`
/// pairs of `b ∈ V(λ⊔γ)`; the result lies in `V(β⊔γ)`.
pub fn contract(a: &BiHomPoly, b: &BiHomPoly, m: usize) -> Result<BiHomPoly> {
    if a.arity() < m || b.arity() < m {
        return Err(Error::ArityMismatch(a.arity().min(b.arity()), m));
    }
    let lam = DegreeVec::new(a.degree().0[..m].to_vec());
    let lam_b = DegreeVec::new(b.degree().0[..m].to_vec());
    if lam != lam_b {
        return Err(Error::DegreeMismatch(lam, lam_b));
    }
    let beta = DegreeVec::new(a.degree().0[m..].to_vec());
    let gamma = DegreeVec::new(b.degree().0[m..].to_vec());
    let out_deg = beta.concat(&gamma);
    let ga = group_by_head(a, m);
    let gb = group_by_head(b, m);
    let lam_fact = lam.factorial();
    let mut acc = BiHomPoly::zero(out_deg);
    for (nu, b_part) in &gb {
        let comp: Vec<u32> = lam.0.iter().zip(&nu.0).map(|(l, n)| l - n).collect();
        let Some(a_part) = ga.get(&Mono(comp.clone())) else { continue };
        let w = pairing_weight(&lam_fact, &nu.0, &comp);
        let t = a_part.tensor(b_part).scale(&GaussRat::real(Rat::from_integer(w)));
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

// λ!·(−1)^{|ν|}·(λ−ν)!·ν!
fn pairing_weight(lam_fact: &BigInt, nu: &[u32], comp: &[u32]) -> BigInt {
    let mut w = lam_fact.clone();
    for (&n, &c) in nu.iter().zip(comp) {
        w *= crate::scalar::factorial(n) * crate::scalar::factorial(c);
    }
    if nu.iter().sum::<u32>() % 2 == 1 {
        -w
    } else {
        w
    }
}

/// The apolarity form `D^λ(p ⊗ q) ∈ V(0^m) ≅ ℂ`.
pub fn apolarity_form(p: &BiHomPoly, q: &BiHomPoly) -> Result<GaussRat> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree().clone(), q.degree().clone()));
    }
    let s = contract(p, q, p.arity())?;
    Ok(s.coeff(&[]))
}

/// `×∘D^r(p ⊗ q)`, applying `D` `r_k` times on pair `k`.
pub fn transvectant(p: &BiHomPoly, q: &BiHomPoly, r: &DegreeVec) -> Result<BiHomPoly> {
    let m = p.arity();
    if q.arity() != m || r.arity() != m {
        return Err(Error::ArityMismatch(m, q.arity().max(r.arity())));
    }
    for k in 0..m {
        if r.0[k] > p.degree().0[k] || r.0[k] > q.degree().0[k] {
            return Err(Error::DegreeUnderflow(k));
        }
    }
    let mut t = TensorPoly::from_pair(p, q);
    for k in 0..m {
        for _ in 0..r.0[k] {
            t = d_map(&t, k)?;
        }
    }
    t.poly.collapse_groups()
}

/// The binomial-weighted form `Σ_μ binom(λ,μ)^{-1} (−1)^{|μ|} p_μ q_{λ−μ}`.
pub fn classical_apolarity_form(p: &BiHomPoly, q: &BiHomPoly) -> Result<GaussRat> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree().clone(), q.degree().clone()));
    }
    let lam = p.degree();
    let mut acc = GaussRat::zero();
    for (mu, c) in p.terms() {
        let comp: Vec<u32> = lam.0.iter().zip(mu).map(|(l, m)| l - m).collect();
        let qc = q.coeff(&comp);
        if qc.is_zero() {
            continue;
        }
        let mut w = Rat::new(BigInt::one(), lam.binom(mu));
        if mu.iter().sum::<u32>() % 2 == 1 {
            w = -w;
        }
        acc += &(c * &qc).scale(&w);
    }
    Ok(acc)
}

/// The factor `κ_λ` with `D^λ(p⊗q) = κ_λ·⟨p,q⟩_classical`, read off the
/// monomial pair `(x^λ, y^λ)`.
pub fn classical_to_d_factor(lam: &DegreeVec) -> Rat {
    let m = lam.arity();
    let top = BiHomPoly::monomial(lam.clone(), lam.0.clone(), GaussRat::one()).expect("in range");
    let bottom = BiHomPoly::monomial(lam.clone(), vec![0; m], GaussRat::one()).expect("in range");
    let d = apolarity_form(&top, &bottom).expect("same degree");
    let c = classical_apolarity_form(&top, &bottom).expect("same degree");
    (&d / &c).re
}

/// Gram matrix of `D^λ` on the monomial basis of `V(λ)`.
pub fn gram_matrix(lam: &DegreeVec) -> Vec<Vec<GaussRat>> {
    let basis: Vec<BiHomPoly> = lam
        .monomials()
        .into_iter()
        .map(|m| BiHomPoly::monomial(lam.clone(), m.0, GaussRat::one()).expect("in range"))
        .collect();
    basis
        .iter()
        .map(|p| basis.iter().map(|q| apolarity_form(p, q).expect("same degree")).collect())
        .collect()
}

/// Rank of a dense matrix by exact elimination.
pub fn rank(rows: &[Vec<GaussRat>]) -> usize {
    let mut a: Vec<Vec<GaussRat>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, piv);
        let inv = a[r][col].inv().expect("nonzero pivot");
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = &row[col] * &inv;
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &(&f * p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Bounded nondegeneracy check of `D^λ`: the Gram matrix on monomials has full rank.
pub fn is_nondegenerate(lam: &DegreeVec) -> bool {
    let g = gram_matrix(lam);
    rank(&g) == g.len()
}

/// Dense linear map `V(λ) → V(α)` over graded-lex bases; column `j` holds
/// the image of the `j`-th basis monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOp {
    in_degree: DegreeVec,
    out_degree: DegreeVec,
    rows: usize,
    cols: usize,
    /// Column-major entries.
    data: Vec<GaussRat>,
}

/// Upper bound on `dim V(λ) · dim V(α)` for dense operators.
pub const DIMENSION_GUARD: u128 = 1_000_000;

impl LinearOp {
    fn check_dims(in_degree: &DegreeVec, out_degree: &DegreeVec) -> Result<(usize, usize)> {
        let size = in_degree.dim() * out_degree.dim();
        if size > DIMENSION_GUARD {
            return Err(Error::DimensionGuard(size));
        }
        Ok((out_degree.dim() as usize, in_degree.dim() as usize))
    }

    pub fn zero(in_degree: DegreeVec, out_degree: DegreeVec) -> Result<Self> {
        let (rows, cols) = Self::check_dims(&in_degree, &out_degree)?;
        Ok(LinearOp { in_degree, out_degree, rows, cols, data: vec![GaussRat::zero(); rows * cols] })
    }

    /// From column-major entries.
    pub fn from_columns(in_degree: DegreeVec, out_degree: DegreeVec, data: Vec<GaussRat>) -> Result<Self> {
        let (rows, cols) = Self::check_dims(&in_degree, &out_degree)?;
        if data.len() != rows * cols {
            return Err(Error::Parse(format!("expected {} matrix entries, got {}", rows * cols, data.len())));
        }
        Ok(LinearOp { in_degree, out_degree, rows, cols, data })
    }

    /// Tabulates `f` on the monomial basis of `V(λ)`.
    pub fn from_fn(
        in_degree: DegreeVec,
        out_degree: DegreeVec,
        f: impl Fn(&BiHomPoly) -> Result<BiHomPoly>,
    ) -> Result<Self> {
        let mut op = Self::zero(in_degree.clone(), out_degree.clone())?;
        for (j, mu) in in_degree.monomials().into_iter().enumerate() {
            let b = BiHomPoly::monomial(in_degree.clone(), mu.0, GaussRat::one())?;
            let img = f(&b)?;
            if img.degree() != &out_degree {
                return Err(Error::DegreeMismatch(img.degree().clone(), out_degree.clone()));
            }
            op.set_column(j, &img);
        }
        Ok(op)
    }

    pub fn identity(lam: DegreeVec) -> Result<Self> {
        Self::from_fn(lam.clone(), lam, |p| Ok(p.clone()))
    }

    fn set_column(&mut self, j: usize, img: &BiHomPoly) {
        let col = img.to_dense();
        self.data[j * self.rows..(j + 1) * self.rows].clone_from_slice(&col);
    }

    pub fn in_degree(&self) -> &DegreeVec {
        &self.in_degree
    }

    pub fn out_degree(&self) -> &DegreeVec {
        &self.out_degree
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &GaussRat {
        &self.data[col * self.rows + row]
    }

    pub fn data(&self) -> &[GaussRat] {
        &self.data
    }

    /// Image of the `j`-th basis monomial.
    pub fn column(&self, j: usize) -> BiHomPoly {
        BiHomPoly::from_dense(self.out_degree.clone(), &self.data[j * self.rows..(j + 1) * self.rows])
    }

    pub fn apply(&self, p: &BiHomPoly) -> Result<BiHomPoly> {
        if p.degree() != &self.in_degree {
            return Err(Error::DegreeMismatch(p.degree().clone(), self.in_degree.clone()));
        }
        let v = p.to_dense();
        let mut out = vec![GaussRat::zero(); self.rows];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let e = &self.data[j * self.rows + i];
                if !e.is_zero() {
                    *o += &(e * c);
                }
            }
        }
        Ok(BiHomPoly::from_dense(self.out_degree.clone(), &out))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearOp) -> Result<LinearOp> {
        if other.out_degree != self.in_degree {
            return Err(Error::DegreeMismatch(other.out_degree.clone(), self.in_degree.clone()));
        }
        LinearOp::from_fn(other.in_degree.clone(), self.out_degree.clone(), |b| self.apply(&other.apply(b)?))
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &GaussRat, other: &LinearOp, b: &GaussRat) -> Result<LinearOp> {
        if self.in_degree != other.in_degree || self.out_degree != other.out_degree {
            return Err(Error::DegreeMismatch(self.in_degree.clone(), other.in_degree.clone()));
        }
        let data = self.data.iter().zip(&other.data).map(|(x, y)| a * x + b * y).collect();
        Ok(LinearOp { data, ..self.clone() })
    }
}

/// `Symb(T) = Σ_μ binom(λ,μ) z^{λ−μ} (−w)^μ ⊗ T(x^μ y^{λ−μ})`, an element of
/// `V(λ⊔α)` whose first `m` pairs are `(z,w)`.
pub fn symbol(t: &LinearOp) -> BiHomPoly {
    let lam = t.in_degree();
    let deg = lam.concat(t.out_degree());
    let mut acc: BTreeMap<Mono, GaussRat> = BTreeMap::new();
    for (j, mu) in lam.monomials().into_iter().enumerate() {
        let img = t.column(j);
        if img.is_zero() {
            continue;
        }
        let mut w = GaussRat::real(Rat::from_integer(lam.binom(&mu.0)));
        if mu.total() % 2 == 1 {
            w = -w;
        }
        let head: Vec<u32> = lam.0.iter().zip(&mu.0).map(|(l, m)| l - m).collect();
        for (nu, c) in img.terms() {
            let mut idx = head.clone();
            idx.extend_from_slice(nu);
            acc.insert(Mono(idx), c * &w);
        }
    }
    BiHomPoly::from_raw(deg, acc)
}

/// Inverts [`symbol`]: `T(q) = (λ!)^{-2} D^λ(s ⊗ q)` contracting the first group.
pub fn operator_from_symbol(s: &BiHomPoly, lam: &DegreeVec, alpha: &DegreeVec) -> Result<LinearOp> {
    if &lam.concat(alpha) != s.degree() {
        return Err(Error::DegreeMismatch(s.degree().clone(), lam.concat(alpha)));
    }
    let f = lam.factorial();
    let norm = GaussRat::real(Rat::new(BigInt::one(), &f * &f));
    let m = lam.arity();
    LinearOp::from_fn(lam.clone(), alpha.clone(), |q| Ok(contract(s, q, m)?.scale(&norm)))
}

/// `Π_j (b_j x_j − a_j y_j)^{λ_j}`, the symbol of evaluation at `(a:b)`.
pub fn evaluation_symbol(z: &ProjPoint, lam: &DegreeVec) -> Result<BiHomPoly> {
    if z.arity() != lam.arity() {
        return Err(Error::ArityMismatch(lam.arity(), z.arity()));
    }
    let mut acc = BiHomPoly::one(0);
    for (p, &n) in z.0.iter().zip(&lam.0) {
        acc = acc.tensor(&BiHomPoly::linear_form_vanishing_at(p).pow(n));
    }
    Ok(acc)
}

/// `D^λ(s_T ⊗ q·r)` with `q·r ∈ V(λ⊔α)`; by the Symbol Lemma this equals
/// `(λ!)²·T(q) ⊗ r`.
pub fn symbol_lemma_contract(s: &BiHomPoly, q: &BiHomPoly, r: &BiHomPoly) -> Result<TensorPoly> {
    let m = q.arity();
    let expect = q.degree().concat(r.degree());
    if s.degree() != &expect {
        return Err(Error::DegreeMismatch(s.degree().clone(), expect));
    }
    let out = contract(s, &q.tensor(r), m)?;
    TensorPoly::new(out, r.arity())
}

/// `(−1)^n`.
pub fn sign_pow(n: u32) -> GaussRat {
    if n.is_multiple_of(2) {
        GaussRat::one()
    } else {
        GaussRat::int(-1)
    }
}

/// `true` if `a = c·b` for some scalar `c` (either may be zero only if both are).
pub fn proportional(a: &BiHomPoly, b: &BiHomPoly) -> Option<GaussRat> {
    if a.degree() != b.degree() {
        return None;
    }
    if a.is_zero() || b.is_zero() {
        return (a.is_zero() && b.is_zero()).then(GaussRat::zero);
    }
    let (mu, cb) = b.terms().next()?;
    let c = &a.coeff(mu) / cb;
    (b.scale(&c) == *a).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::{act_poly, MoebiusMap, MoebiusTuple};
    use crate::poly::P1;
    use crate::scalar::rat;

    fn uni(c: &[i64]) -> BiHomPoly {
        BiHomPoly::univariate_ints(c)
    }

    #[test]
    fn d_map_on_linear_forms() {
        let t = TensorPoly::from_pair(&uni(&[0, 1]), &uni(&[1, 0]));
        assert_eq!(d_map(&t, 0).unwrap().poly, BiHomPoly::one(2));
        let swapped = TensorPoly::from_pair(&uni(&[1, 0]), &uni(&[0, 1]));
        assert_eq!(d_map(&swapped, 0).unwrap().poly, BiHomPoly::constant(2, GaussRat::int(-1)));
    }

    #[test]
    fn linear_pairing_matches_hand_expansion() {
        // p = p1 x + p0 y, q = q1 x + q0 y: D(p⊗q) = p1 q0 − p0 q1.
        let p = uni(&[3, 5]);
        let q = uni(&[-2, 7]);
        assert_eq!(apolarity_form(&p, &q).unwrap(), GaussRat::int(5 * -2 - 3 * 7));
        // x − a y vs x − b y gives a − b.
        let a = uni(&[-4, 1]);
        let b = uni(&[-9, 1]);
        assert_eq!(apolarity_form(&a, &b).unwrap(), GaussRat::int(4 - 9));
    }

    #[test]
    fn binomial_cube_is_self_apolar() {
        let d = DegreeVec::ones(3);
        let p = BiHomPoly::from_terms(d, [(vec![1, 1, 1], GaussRat::one()), (vec![0, 0, 0], GaussRat::int(-1))])
            .unwrap();
        assert!(apolarity_form(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn transvectants() {
        let p = uni(&[1, 2, 0, 1]);
        let q = uni(&[0, -1, 3]);
        let r0 = transvectant(&p, &q, &DegreeVec::univariate(0)).unwrap();
        assert_eq!(r0, p.mul(&q).unwrap());
        let j = transvectant(&p, &q, &DegreeVec::univariate(1)).unwrap();
        let jac = p
            .partial(0, Var::X)
            .unwrap()
            .mul(&q.partial(0, Var::Y).unwrap())
            .unwrap()
            .sub(&p.partial(0, Var::Y).unwrap().mul(&q.partial(0, Var::X).unwrap()).unwrap())
            .unwrap();
        assert_eq!(j, jac);
        assert!(transvectant(&p, &q, &DegreeVec::univariate(3)).is_err());
    }

    #[test]
    fn hessian_is_second_transvectant() {
        // p = x² + y²: second transvectant with itself vs the Hessian determinant.
        let p = uni(&[1, 0, 1]);
        let h = transvectant(&p, &p, &DegreeVec::univariate(2)).unwrap();
        let pxx = p.partial(0, Var::X).unwrap().partial(0, Var::X).unwrap();
        let pyy = p.partial(0, Var::Y).unwrap().partial(0, Var::Y).unwrap();
        let pxy = p.partial(0, Var::X).unwrap().partial(0, Var::Y).unwrap();
        let hess = pxx.mul(&pyy).unwrap().sub(&pxy.mul(&pxy).unwrap()).unwrap();
        assert_eq!(h.coeff(&[0]), GaussRat::int(8));
        assert_eq!(hess.coeff(&[0]), GaussRat::int(4));
        assert_eq!(proportional(&h, &hess), Some(GaussRat::int(2)));
    }

    #[test]
    fn dual_basis_identity() {
        let lam = DegreeVec::univariate(3);
        let p = uni(&[2, -1, 5, 7]);
        for a in 0..=3u32 {
            let q = BiHomPoly::monomial(lam.clone(), vec![a], GaussRat::one()).unwrap();
            let lhs = apolarity_form(&p, &q).unwrap();
            let mut d = p.clone();
            for _ in 0..(3 - a) {
                d = d.partial(0, Var::X).unwrap();
            }
            for _ in 0..a {
                d = d.partial(0, Var::Y).unwrap();
            }
            let sign = sign_pow(a);
            let rhs = d.coeff(&[0]) * GaussRat::int(6) * sign;
            assert_eq!(lhs, rhs, "a = {a}");
        }
    }

    #[test]
    fn symbol_examples() {
        for n in 1..=4u32 {
            let lam = DegreeVec::univariate(n);
            let id = LinearOp::identity(lam.clone()).unwrap();
            let zy_xw = BiHomPoly::from_terms(
                DegreeVec::new(vec![1, 1]),
                [(vec![1, 0], GaussRat::one()), (vec![0, 1], GaussRat::int(-1))],
            )
            .unwrap();
            assert_eq!(symbol(&id), zy_xw.pow(n));
            assert_eq!(operator_from_symbol(&zy_xw.pow(n), &lam, &lam).unwrap(), id);
        }
    }

    #[test]
    fn evaluation_symbols() {
        let z = ProjPoint(vec![P1::real(rat(0))]);
        assert_eq!(evaluation_symbol(&z, &DegreeVec::univariate(3)).unwrap(), uni(&[0, 0, 0, 1]));
        let one = ProjPoint(vec![P1::real(rat(1))]);
        assert_eq!(evaluation_symbol(&one, &DegreeVec::univariate(2)).unwrap(), uni(&[1, -2, 1]));
    }

    #[test]
    fn classical_form_factor() {
        for lam in [vec![1], vec![2], vec![3], vec![1, 2], vec![2, 2]] {
            let lam = DegreeVec::new(lam);
            let k = classical_to_d_factor(&lam);
            let f = Rat::from_integer(lam.factorial());
            let sign = if lam.total().is_multiple_of(2) { rat(1) } else { rat(-1) };
            assert_eq!(k, &f * &f * sign);
        }
    }

    #[test]
    fn gram_is_nondegenerate_for_small_degrees() {
        for lam in [vec![1], vec![4], vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
            assert!(is_nondegenerate(&DegreeVec::new(lam)));
        }
    }

    #[test]
    fn conjugation_scales_by_determinant() {
        let p = uni(&[1, -2, 3]);
        let q = uni(&[0, 4, -1]);
        let phi = MoebiusMap::from_ints(2, 1, 1, 3).unwrap();
        let t = MoebiusTuple(vec![phi.clone()]);
        let lhs = apolarity_form(&act_poly(&t, &p).unwrap(), &act_poly(&t, &q).unwrap()).unwrap();
        let rhs = apolarity_form(&p, &q).unwrap() * phi.det().pow(2);
        assert_eq!(lhs, rhs);
    }
}
