//! Additive and multiplicative convolutions on `V(n)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::BiHomPoly;
use crate::scalar::{binomial, factorial, GaussRat, Rat};

fn same_univariate(p: &BiHomPoly, q: &BiHomPoly) -> Result<u32> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch(1, p.arity()));
    }
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree().clone(), q.degree().clone()));
    }
    Ok(p.degree().0[0])
}

fn int(n: BigInt) -> GaussRat {
    GaussRat::real(Rat::from_integer(n))
}

/// `(1/n!) Σ_k y^k·∂_x^k p · (∂_x^{n−k} q)(0:1)`.
///
/// On coefficients: `r_i = (1/n!) Σ_k (n−k)!·q_{n−k}·p_{i+k}·(i+k)!/i!`.
pub fn additive_convolution(p: &BiHomPoly, q: &BiHomPoly) -> Result<BiHomPoly> {
    let n = same_univariate(p, q)?;
    let (pc, qc) = (p.univariate_coeffs(), q.univariate_coeffs());
    let nf = int(factorial(n)).inv().expect("nonzero");
    let out: Vec<GaussRat> = (0..=n)
        .map(|i| {
            let mut acc = GaussRat::zero();
            for k in 0..=(n - i) {
                let w = int(factorial(n - k) * factorial(i + k) / factorial(i));
                acc += &(&(&w * &qc[(n - k) as usize]) * &pc[(i + k) as usize]);
            }
            &acc * &nf
        })
        .collect();
    Ok(BiHomPoly::univariate(&out))
}

/// `Σ_k binom(n,k)^{−1}·(−1)^k·p_k·q_k·x^k y^{n−k}`.
pub fn multiplicative_convolution(p: &BiHomPoly, q: &BiHomPoly) -> Result<BiHomPoly> {
    let n = same_univariate(p, q)?;
    let (pc, qc) = (p.univariate_coeffs(), q.univariate_coeffs());
    let out: Vec<GaussRat> = (0..=n)
        .map(|k| {
            let c = &(&pc[k as usize] * &qc[k as usize]) * &int(binomial(n, k)).inv().expect("nonzero");
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Ok(BiHomPoly::univariate(&out))
}
