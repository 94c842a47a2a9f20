//! Polarization `Π↑: V(λ) → V(1^{|λ|})` and projection `Π↓`, the inverse
//! pair behind the Grace–Walsh–Szegő coincidence.
//!
//! Variable `k` of `V(λ)` expands to the consecutive pairs
//! `(k,1), …, (k,λ_k)` of the polarized space.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::apolarity::{apolarity_form, contract, evaluation_symbol, symbol, LinearOp};
use crate::degree::{DegreeVec, Mono};
use crate::error::{Error, Result};
use crate::poly::{BiHomPoly, ProjPoint};
use crate::scalar::{GaussRat, Rat};

/// 0/1 exponent vectors of length `n` with exactly `k` ones, lexicographic.
fn choose_vectors(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let left = n - cur.len() as u32;
        let used: u32 = cur.iter().sum();
        if left == 0 {
            if used == k {
                out.push(cur.clone());
            }
            return;
        }
        if used < k {
            cur.push(1);
            go(n, k, cur, out);
            cur.pop();
        }
        if k - used < left {
            cur.push(0);
            go(n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// `Π_λ↑ p`: the coefficient of `x_S y_{S^c}` within group `k` is `p_μ / binom(λ_k, μ_k)`
/// for every `|S| = μ_k`.
pub fn polarize(p: &BiHomPoly) -> BiHomPoly {
    let lam = p.degree().clone();
    let n = lam.total() as usize;
    let mut out: BTreeMap<Mono, GaussRat> = BTreeMap::new();
    for (mu, c) in p.terms() {
        let w = Rat::new(BigInt::from(1), lam.binom(mu));
        let coeff = c.scale(&w);
        let mut partial: Vec<Vec<u32>> = vec![Vec::with_capacity(n)];
        for (&l, &m) in lam.0.iter().zip(mu) {
            let choices = choose_vectors(l, m);
            partial = partial
                .into_iter()
                .flat_map(|pre| {
                    choices.iter().map(move |ch| {
                        let mut v = pre.clone();
                        v.extend_from_slice(ch);
                        v
                    })
                })
                .collect();
        }
        for idx in partial {
            out.insert(Mono(idx), coeff.clone());
        }
    }
    BiHomPoly::from_raw(DegreeVec::ones(n), out)
}

/// `Π_λ↓ p`: identifies the pairs of each group.
pub fn project(p: &BiHomPoly, groups: &DegreeVec) -> Result<BiHomPoly> {
    let n = groups.total() as usize;
    if p.degree() != &DegreeVec::ones(n) {
        return Err(Error::DegreeMismatch(p.degree().clone(), DegreeVec::ones(n)));
    }
    let mut out = BiHomPoly::zero(groups.clone());
    for (idx, c) in p.terms() {
        let mut mu = Vec::with_capacity(groups.arity());
        let mut pos = 0usize;
        for &l in &groups.0 {
            mu.push(idx[pos..pos + l as usize].iter().sum());
            pos += l as usize;
        }
        out.add_term(mu, c.clone())?;
    }
    Ok(out)
}

/// The constant `c_λ` with `D^{1^λ}(Π↑p ⊗ Π↑q) = c_λ·D^λ(p ⊗ q)`, measured on
/// the pair `(x^λ, y^λ)` and cached per `λ`.
pub fn form_constant(lam: &DegreeVec) -> Rat {
    static CACHE: OnceLock<Mutex<HashMap<DegreeVec, Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("cache poisoned").get(lam) {
        return c.clone();
    }
    let top = BiHomPoly::monomial(lam.clone(), lam.0.clone(), GaussRat::one()).expect("in range");
    let bottom = BiHomPoly::monomial(lam.clone(), vec![0; lam.arity()], GaussRat::one()).expect("in range");
    let lhs = apolarity_form(&polarize(&top), &polarize(&bottom)).expect("same degree");
    let rhs = apolarity_form(&top, &bottom).expect("same degree");
    let c = (&lhs / &rhs).re;
    cache.lock().expect("cache poisoned").insert(lam.clone(), c.clone());
    c
}

/// `(Π_λ↑ p)(pts)` through the contraction `c_λ·D^λ(Π↓(ev_pts) ⊗ p)`, without
/// materializing the polarization.
pub fn polarized_evaluation(p: &BiHomPoly, pts: &ProjPoint) -> Result<GaussRat> {
    let lam = p.degree();
    let n = lam.total() as usize;
    if pts.arity() != n {
        return Err(Error::ArityMismatch(n, pts.arity()));
    }
    let ev = evaluation_symbol(pts, &DegreeVec::ones(n))?;
    let folded = project(&ev, lam)?;
    let d = contract(&folded, p, lam.arity())?.coeff(&[]);
    Ok(d.scale(&form_constant(lam)))
}

/// `Π_α↑ ∘ T ∘ Π_λ↓ : V(1^λ) → V(1^α)`.
pub fn polarize_operator(t: &LinearOp) -> Result<LinearOp> {
    let lam = t.in_degree().clone();
    let n_in = DegreeVec::ones(lam.total() as usize);
    let n_out = DegreeVec::ones(t.out_degree().total() as usize);
    LinearOp::from_fn(n_in, n_out, |q| Ok(polarize(&t.apply(&project(q, &lam)?)?)))
}

/// `polarize(symbol(T))`, which matches `symbol(polarize_operator(T))`.
pub fn polarized_symbol(t: &LinearOp) -> BiHomPoly {
    polarize(&symbol(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::P1;
    use crate::scalar::{rat, ratio};

    #[test]
    fn polarize_examples() {
        let x2 = BiHomPoly::univariate_ints(&[0, 0, 1]);
        let p = polarize(&x2);
        assert_eq!(p, BiHomPoly::monomial(DegreeVec::ones(2), vec![1, 1], GaussRat::one()).unwrap());
        let xy = BiHomPoly::univariate_ints(&[0, 1, 0]);
        let half = GaussRat::frac(1, 2);
        let expect = BiHomPoly::from_terms(DegreeVec::ones(2), [(vec![1, 0], half.clone()), (vec![0, 1], half)])
            .unwrap();
        assert_eq!(polarize(&xy), expect);
        assert_eq!(project(&expect, &DegreeVec::univariate(2)).unwrap(), xy);
        let y3 = BiHomPoly::univariate_ints(&[1, 0, 0, 0]);
        assert_eq!(polarize(&y3), BiHomPoly::monomial(DegreeVec::ones(3), vec![0, 0, 0], GaussRat::one()).unwrap());
    }

    #[test]
    fn round_trip_multivariate() {
        let lam = DegreeVec::new(vec![2, 1]);
        let p = BiHomPoly::from_terms(
            lam.clone(),
            [(vec![2, 1], GaussRat::int(3)), (vec![1, 0], GaussRat::ints(0, -2)), (vec![0, 1], GaussRat::frac(5, 7))],
        )
        .unwrap();
        assert_eq!(project(&polarize(&p), &lam).unwrap(), p);
        assert!(project(&p, &lam).is_err());
    }

    #[test]
    fn evaluation_paths_agree() {
        let x2 = BiHomPoly::univariate_ints(&[0, 0, 1]);
        let pts = ProjPoint(vec![P1::real(rat(1)), P1::real(rat(2))]);
        assert_eq!(polarized_evaluation(&x2, &pts).unwrap(), GaussRat::int(2));
        assert_eq!(polarize(&x2).evaluate(&pts).unwrap(), GaussRat::int(2));

        let xy = BiHomPoly::univariate_ints(&[0, 1, 0]);
        let pts = ProjPoint(vec![P1::real(rat(0)), P1::real(rat(1))]);
        assert_eq!(polarized_evaluation(&xy, &pts).unwrap(), GaussRat::frac(1, 2));
    }

    #[test]
    fn form_constants() {
        assert_eq!(form_constant(&DegreeVec::univariate(2)), ratio(1, 4));
        assert_eq!(form_constant(&DegreeVec::univariate(3)), ratio(1, 36));
        assert_eq!(form_constant(&DegreeVec::new(vec![2, 2])), ratio(1, 16));
    }
}
