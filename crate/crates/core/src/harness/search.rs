//! Searching for pairs of stable polynomials with vanishing apolarity.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apolarity::apolarity_form;
use crate::degree::DegreeVec;
use crate::error::{Error, Result};
use crate::poly::BiHomPoly;
use crate::regions::{classify_grace_pair, GraceCase, RegionProduct};
use crate::scalar::GaussRat;
use crate::stability::{multivariate_stable, StabilityOptions, Status};

use super::gen::gen_stable;

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub case: GraceCase,
    /// `(p, q)` with `p` not known to vanish on `A`, `q` likewise on `B`,
    /// and apolarity zero.
    pub found: Option<(BiHomPoly, BiHomPoly)>,
    /// `"seed"` or `"random"` when found.
    pub source: Option<String>,
    pub tried: usize,
    pub exhausted: bool,
}

/// `Π x_k ∓ Π y_k` on `1^m`.
fn seeds(m: usize) -> Vec<BiHomPoly> {
    let lam = DegreeVec::ones(m);
    [-1i64, 1]
        .iter()
        .map(|&s| {
            BiHomPoly::from_terms(lam.clone(), [(vec![1; m], GaussRat::one()), (vec![0; m], GaussRat::int(s))])
                .expect("degree 1^m")
        })
        .collect()
}

fn survives(p: &BiHomPoly, r: &RegionProduct, opts: &StabilityOptions) -> bool {
    let v = multivariate_stable(p, r, opts);
    matches!(v.status, Status::Stable | Status::Indeterminate) && (v.status == Status::Stable || v.leaning_stable)
}

/// Looks for a Grace counterexample for `(A, B)` within `budget` candidate
/// pairs. Seeded candidates come first when their degree fits.
pub fn search_grace_counterexample(a: &RegionProduct, b: &RegionProduct, budget: usize, seed: u64) -> Result<SearchReport> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch(a.arity(), b.arity()));
    }
    let case = classify_grace_pair(a, b);
    let mut report = SearchReport { case, found: None, source: None, tried: 0, exhausted: false };
    let m = a.arity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = StabilityOptions { seed, ..StabilityOptions::default() };
    for p in seeds(m) {
        if report.tried >= budget {
            report.exhausted = true;
            return Ok(report);
        }
        report.tried += 1;
        if apolarity_form(&p, &p)?.is_zero() && survives(&p, a, &opts) && survives(&p, b, &opts) {
            report.found = Some((p.clone(), p));
            report.source = Some("seed".into());
            return Ok(report);
        }
    }
    let lam = DegreeVec::ones(m);
    while report.tried < budget {
        report.tried += 1;
        let (Ok(p), Ok(q)) = (gen_stable(&mut rng, &lam, a), gen_stable(&mut rng, &lam, b)) else {
            continue;
        };
        if apolarity_form(&p, &q)?.is_zero() {
            report.found = Some((p, q));
            report.source = Some("random".into());
            return Ok(report);
        }
    }
    report.exhausted = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::Region;

    #[test]
    fn mixed_disk_product_has_a_counterexample() {
        let d = Region::disk();
        let e = Region::exterior();
        let a = RegionProduct(vec![d.closure(), d.clone(), d]);
        let b = RegionProduct(vec![e.clone(), e.closure(), e.closure()]);
        let r = search_grace_counterexample(&a, &b, 10, 1).unwrap();
        assert_eq!(r.case, GraceCase::NotCovered);
        assert_eq!(r.source.as_deref(), Some("seed"));
        assert!(r.found.is_some());
    }

    #[test]
    fn zero_budget_is_exhausted() {
        let u = RegionProduct::power(&crate::regions::Region::upper(), 2);
        let r = search_grace_counterexample(&u, &u, 0, 0).unwrap();
        assert!(r.exhausted && r.found.is_none());
    }
}
