//! Degree vectors `λ ∈ ℕ₀^m` and multi-indices ordered graded-lexicographically.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial};

/// Degree vector `λ = (λ_1, …, λ_m)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVec(pub Vec<u32>);

impl DegreeVec {
    pub fn new(entries: Vec<u32>) -> Self {
        DegreeVec(entries)
    }

    pub fn univariate(n: u32) -> Self {
        DegreeVec(vec![n])
    }

    /// `0^m`.
    pub fn zeros(m: usize) -> Self {
        DegreeVec(vec![0; m])
    }

    /// `1^n`, the degree of a multi-affine polynomial in `n` pairs.
    pub fn ones(n: usize) -> Self {
        DegreeVec(vec![1; n])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ! = Π λ_k!`.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&n| factorial(n)).product()
    }

    /// `binom(λ, μ) = Π binom(λ_k, μ_k)`.
    pub fn binom(&self, mu: &[u32]) -> BigInt {
        self.0
            .iter()
            .zip(mu)
            .map(|(&n, &k)| binomial(n, k))
            .fold(BigInt::one(), |a, b| a * b)
    }

    /// Componentwise `μ ≤ λ`.
    pub fn dominates(&self, mu: &[u32]) -> bool {
        mu.len() == self.0.len() && mu.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `λ ⊔ α`: concatenation of variable lists.
    pub fn concat(&self, other: &DegreeVec) -> DegreeVec {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        DegreeVec(v)
    }

    pub fn add(&self, other: &DegreeVec) -> Result<DegreeVec> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(DegreeVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &DegreeVec) -> Option<DegreeVec> {
        if self.arity() != other.arity() {
            return None;
        }
        let v: Option<Vec<u32>> = self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect();
        v.map(DegreeVec)
    }

    /// `λ − δ_k`.
    pub fn lower(&self, k: usize) -> Result<DegreeVec> {
        match self.0.get(k) {
            Some(&n) if n >= 1 => {
                let mut v = self.0.clone();
                v[k] -= 1;
                Ok(DegreeVec(v))
            }
            _ => Err(Error::DegreeUnderflow(k)),
        }
    }

    /// `Π (λ_k + 1)`, the dimension of `V(λ)`.
    pub fn dim(&self) -> u128 {
        self.0.iter().map(|&n| n as u128 + 1).product()
    }

    /// All `μ ≤ λ` in graded-lex order (the basis order of `V(λ)`).
    pub fn monomials(&self) -> Vec<Mono> {
        let mut out = Vec::with_capacity(self.dim() as usize);
        let mut cur = vec![0u32; self.arity()];
        loop {
            out.push(Mono(cur.clone()));
            // Odometer increment.
            let mut k = 0;
            loop {
                if k == cur.len() {
                    out.sort();
                    return out;
                }
                if cur[k] < self.0[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

impl fmt::Display for DegreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DegreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multi-index `μ` of the monomial `x^μ y^{λ−μ}`; ordered by total degree,
/// then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Desk-scale caps on degree vectors accepted at the input boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_total: u32,
    pub max_arity: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_total: 24, max_arity: 6 }
    }
}

impl Limits {
    pub fn check(&self, d: &DegreeVec) -> Result<()> {
        if d.total() > self.max_total || d.arity() > self.max_arity {
            return Err(Error::TooLarge(d.clone()));
        }
        Ok(())
    }
}
