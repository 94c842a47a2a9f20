//! Random instances for the suites.
//!
//! Every generator that promises stability does so by construction: it
//! multiplies linear factors whose roots avoid the region and bilinear
//! factors `x_j·(c·x_k + d·y_k) − y_j·(a·x_k + b·y_k)` that vanish only on
//! the graph of a Möbius map `ψ` carrying `C_k` off `C_j`.

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apolarity::LinearOp;
use crate::degree::DegreeVec;
use crate::error::Result;
use crate::moebius::MoebiusMap;
use crate::poly::{BiHomPoly, ProjPoint, P1};
use crate::regions::{Arc, Endpoint, Region, RegionProduct};
use crate::scalar::{GaussRat, Rat};

pub fn small_rat<R: Rng + ?Sized>(rng: &mut R, span: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(-span..=span).into(), rng.gen_range(1..=max_den).into())
}

pub fn positive_rat<R: Rng + ?Sized>(rng: &mut R, span: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(1..=span).into(), rng.gen_range(1..=max_den).into())
}

pub fn small_gauss<R: Rng + ?Sized>(rng: &mut R) -> GaussRat {
    GaussRat::new(small_rat(rng, 6, 3), small_rat(rng, 6, 3))
}

pub fn nonzero_gauss<R: Rng + ?Sized>(rng: &mut R) -> GaussRat {
    loop {
        let z = small_gauss(rng);
        if !z.is_zero() {
            return z;
        }
    }
}

pub fn nonzero_real<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    loop {
        let r = small_rat(rng, 6, 3);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A point of `ℂP¹` with small Gaussian-rational coordinates; `∞` one time in eight.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> P1 {
    if rng.gen_ratio(1, 8) {
        P1::infinity()
    } else {
        P1::finite(small_gauss(rng))
    }
}

pub fn random_proj_point<R: Rng + ?Sized>(rng: &mut R, m: usize) -> ProjPoint {
    ProjPoint((0..m).map(|_| random_point(rng)).collect())
}

/// A nonsingular map with Gaussian-integer entries in `[-3, 3]`.
pub fn random_moebius<R: Rng + ?Sized>(rng: &mut R) -> MoebiusMap {
    loop {
        let mut e = || GaussRat::ints(rng.gen_range(-3..=3), if rng.gen_bool(0.5) { rng.gen_range(-2..=2) } else { 0 });
        if let Ok(m) = MoebiusMap::new(e(), e(), e(), e()) {
            return m;
        }
    }
}

/// A real map with `det > 0`, preserving each half-plane.
pub fn random_real_moebius<R: Rng + ?Sized>(rng: &mut R) -> MoebiusMap {
    loop {
        let mut e = || GaussRat::int(rng.gen_range(-3..=3));
        if let Ok(m) = MoebiusMap::new(e(), e(), e(), e()) {
            if m.det().re.is_positive() {
                return m;
            }
        }
    }
}

/// A real map with nonnegative entries and `det > 0`; it maps `[0, ∞]` into itself.
fn random_ray_moebius<R: Rng + ?Sized>(rng: &mut R) -> MoebiusMap {
    loop {
        let mut e = || GaussRat::int(rng.gen_range(0..=3));
        if let Ok(m) = MoebiusMap::new(e(), e(), e(), e()) {
            if m.det().re.is_positive() {
                return m;
            }
        }
    }
}

pub fn random_endpoint<R: Rng + ?Sized>(rng: &mut R) -> Endpoint {
    if rng.gen_ratio(1, 6) {
        Endpoint::Infinity
    } else {
        Endpoint::Finite(small_rat(rng, 6, 2))
    }
}

/// An arc with distinct endpoints and random closedness.
pub fn random_arc<R: Rng + ?Sized>(rng: &mut R) -> Arc {
    let start = random_endpoint(rng);
    let end = loop {
        let e = random_endpoint(rng);
        if e != start {
            break e;
        }
    };
    Arc { start, end, start_closed: rng.gen_bool(0.5), end_closed: rng.gen_bool(0.5) }
}

/// `φ · (H₊ ∪ J)` for a random boundary part `J`, complemented half the time.
pub fn random_convex_region<R: Rng + ?Sized>(rng: &mut R) -> Region {
    let base = match rng.gen_range(0..4) {
        0 => Region::upper(),
        1 => Region::upper().closure(),
        _ => Region::upper().with_arc(random_arc(rng)).expect("open half-plane takes an arc"),
    };
    let base = if rng.gen_bool(0.5) { base.complement() } else { base };
    base.image(&random_moebius(rng))
}

/// `(φ·closure(H₊), φ·H₋)` or the open/closed mirror of it.
pub fn random_circular_pair<R: Rng + ?Sized>(rng: &mut R, closed_first: bool) -> (Region, Region) {
    let phi = random_moebius(rng);
    let closed = Region::upper().closure().image(&phi);
    let open = closed.complement();
    if closed_first {
        (closed, open)
    } else {
        (open, closed)
    }
}

/// Degree vector of arity `m`, every entry at least 1, total at most `max_total`.
pub fn random_degree<R: Rng + ?Sized>(rng: &mut R, m: usize, max_total: u32) -> DegreeVec {
    let mut d = vec![1u32; m];
    let extra = rng.gen_range(0..=max_total.saturating_sub(m as u32));
    for _ in 0..extra {
        d[rng.gen_range(0..m)] += 1;
    }
    DegreeVec::new(d)
}

/// A polynomial with independent random coefficients.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, lam: &DegreeVec) -> BiHomPoly {
    let terms = lam.monomials().into_iter().map(|mu| (mu.0.clone(), small_gauss(rng))).collect::<Vec<_>>();
    BiHomPoly::from_terms(lam.clone(), terms).expect("monomials of lam")
}

pub fn random_real_poly<R: Rng + ?Sized>(rng: &mut R, lam: &DegreeVec) -> BiHomPoly {
    let terms = lam.monomials().into_iter().map(|mu| (mu.0.clone(), GaussRat::real(small_rat(rng, 6, 3)))).collect::<Vec<_>>();
    BiHomPoly::from_terms(lam.clone(), terms).expect("monomials of lam")
}

pub fn random_operator<R: Rng + ?Sized>(rng: &mut R, lam: &DegreeVec, alpha: &DegreeVec) -> Result<LinearOp> {
    let n = (lam.dim() * alpha.dim()) as usize;
    LinearOp::from_columns(lam.clone(), alpha.clone(), (0..n).map(|_| small_gauss(rng)).collect())
}

/// The linear form in variable `k` of `m` vanishing exactly at `root`.
pub fn linear_factor(k: usize, m: usize, root: &P1) -> BiHomPoly {
    let mut deg = vec![0; m];
    deg[k] = 1;
    let mut x = vec![0; m];
    x[k] = 1;
    BiHomPoly::from_terms(DegreeVec::new(deg), [(x, root.b.clone()), (vec![0; m], -&root.a)]).expect("degree e_k")
}

/// Bilinear form in variables `k ≠ j` of `m` vanishing exactly when
/// `z_j = ψ(z_k)`.
pub fn coupling_factor(psi: &MoebiusMap, k: usize, j: usize, m: usize) -> BiHomPoly {
    assert_ne!(k, j, "coupling needs two variables");
    let mut deg = vec![0; m];
    deg[k] = 1;
    deg[j] = 1;
    let mono = |xk: u32, xj: u32| {
        let mut mu = vec![0; m];
        mu[k] = xk;
        mu[j] = xj;
        mu
    };
    BiHomPoly::from_terms(
        DegreeVec::new(deg),
        [
            (mono(1, 1), psi.c.clone()),
            (mono(0, 1), psi.d.clone()),
            (mono(1, 0), -&psi.a),
            (mono(0, 0), -&psi.b),
        ],
    )
    .expect("degree e_k + e_j")
}

/// `z ↦ 1/(z + i) − i/4`, carrying `closure(H₊)` (with `∞`) into a compact
/// subset of the open lower half-plane.
fn upper_into_lower() -> MoebiusMap {
    MoebiusMap::new(GaussRat::new(Rat::zero(), Rat::new((-1).into(), 4.into())), GaussRat::frac(5, 4), GaussRat::one(), GaussRat::i())
        .expect("det = -1")
}

/// A map carrying `from` into `ℂP¹ ∖ to`, when both regions are
/// projectively convex.
pub fn separating_map<R: Rng + ?Sized>(rng: &mut R, from: &Region, to: &Region) -> Option<MoebiusMap> {
    let f = from.convex_form()?;
    let t = to.convex_form()?;
    let inner = random_real_moebius(rng).compose(&upper_into_lower()).compose(&random_real_moebius(rng));
    Some(t.chart.compose(&inner).compose(&f.chart.inverse()))
}

/// A nonzero polynomial whose `ℂP¹` roots are sampled from `region`.
pub fn gen_rooted_with<R: Rng + ?Sized>(rng: &mut R, n: u32, region: &Region) -> Result<BiHomPoly> {
    let mut p = BiHomPoly::constant(1, nonzero_gauss(rng));
    for _ in 0..n {
        p = p.mul(&linear_factor(0, 1, &region.sample_with(rng)?))?;
    }
    Ok(p)
}

/// [`gen_rooted_with`] driven by a seed.
pub fn gen_rooted(n: u32, region: &Region, seed: u64) -> Result<BiHomPoly> {
    gen_rooted_with(&mut ChaCha8Rng::seed_from_u64(seed), n, region)
}

/// A nonzero `(C₁ × ⋯ × C_m)`-stable polynomial of degree `lam`.
pub fn gen_stable<R: Rng + ?Sized>(rng: &mut R, lam: &DegreeVec, regions: &RegionProduct) -> Result<BiHomPoly> {
    let m = lam.arity();
    assert_eq!(m, regions.arity(), "region arity");
    let mut rest = lam.0.clone();
    let mut p = BiHomPoly::constant(m, nonzero_gauss(rng));
    if m >= 2 {
        for _ in 0..lam.total() {
            if !rng.gen_bool(0.6) {
                continue;
            }
            let open: Vec<usize> = (0..m).filter(|&k| rest[k] > 0).collect();
            if open.len() < 2 {
                break;
            }
            let pair: Vec<usize> = open.choose_multiple(rng, 2).copied().collect();
            let (k, j) = (pair[0], pair[1]);
            let Some(psi) = separating_map(rng, &regions.0[k], &regions.0[j]) else { continue };
            p = p.mul(&coupling_factor(&psi, k, j, m))?;
            rest[k] -= 1;
            rest[j] -= 1;
        }
    }
    for (k, &r) in rest.iter().enumerate() {
        let outside = regions.0[k].complement();
        for _ in 0..r {
            p = p.mul(&linear_factor(k, m, &outside.sample_with(rng)?))?;
        }
    }
    Ok(p)
}

/// Monic real factor of degree 1 or 2 with real roots, the quadratic ones
/// usually irrational.
fn real_rooted_factor<R: Rng + ?Sized>(rng: &mut R, room: u32) -> BiHomPoly {
    if room >= 2 && rng.gen_bool(0.3) {
        // (x − c·y)² − a·y², roots c ± √a
        let c = small_rat(rng, 4, 2);
        let a = positive_rat(rng, 9, 4);
        let lin = BiHomPoly::univariate(&[GaussRat::real(-c), GaussRat::one()]);
        lin.pow(2).sub(&BiHomPoly::univariate(&[GaussRat::real(a), GaussRat::zero(), GaussRat::zero()])).expect("V(2)")
    } else {
        linear_factor(0, 1, &P1::real(small_rat(rng, 8, 2)))
    }
}

/// A monic real-rooted polynomial of degree `n` with finite roots.
pub fn gen_real_rooted_monic<R: Rng + ?Sized>(rng: &mut R, n: u32) -> BiHomPoly {
    let mut p = BiHomPoly::one(1);
    while p.degree().total() < n {
        let f = real_rooted_factor(rng, n - p.degree().total());
        p = p.mul(&f).expect("univariate");
    }
    p
}

/// A monic polynomial of degree `n` with positive roots, some irrational.
pub fn gen_positive_rooted_monic<R: Rng + ?Sized>(rng: &mut R, n: u32) -> BiHomPoly {
    let mut p = BiHomPoly::one(1);
    while p.degree().total() < n {
        let room = n - p.degree().total();
        let f = if room >= 2 && rng.gen_bool(0.3) {
            // (x − c·y)² − c²u·y² with 0 < u < 1 keeps both roots positive
            let c = positive_rat(rng, 8, 2);
            let u = Rat::new(rng.gen_range(1..=7).into(), 8.into());
            let lin = BiHomPoly::univariate(&[GaussRat::real(-c.clone()), GaussRat::one()]);
            let shift = BiHomPoly::univariate(&[GaussRat::real(&c * &c * u), GaussRat::zero(), GaussRat::zero()]);
            lin.pow(2).sub(&shift).expect("V(2)")
        } else {
            linear_factor(0, 1, &P1::real(positive_rat(rng, 8, 2)))
        };
        p = p.mul(&f).expect("univariate");
    }
    p
}

/// A real polynomial with a root at `∞` one time in ten.
pub fn gen_real_rooted<R: Rng + ?Sized>(rng: &mut R, n: u32) -> BiHomPoly {
    let mut p = BiHomPoly::constant(1, GaussRat::real(nonzero_real(rng)));
    while p.degree().total() < n {
        let room = n - p.degree().total();
        let f = if rng.gen_ratio(1, 10) { linear_factor(0, 1, &P1::infinity()) } else { real_rooted_factor(rng, room) };
        p = p.mul(&f).expect("univariate");
    }
    p
}

/// A real `H₊^m`-stable polynomial: real-rooted factors and real couplings
/// with `det ψ < 0`.
pub fn gen_real_stable<R: Rng + ?Sized>(rng: &mut R, lam: &DegreeVec) -> BiHomPoly {
    let m = lam.arity();
    let mut rest = lam.0.clone();
    let mut p = BiHomPoly::constant(m, GaussRat::real(nonzero_real(rng)));
    if m >= 2 {
        for _ in 0..lam.total() {
            let open: Vec<usize> = (0..m).filter(|&k| rest[k] > 0).collect();
            if open.len() < 2 || !rng.gen_bool(0.5) {
                continue;
            }
            let pair: Vec<usize> = open.choose_multiple(rng, 2).copied().collect();
            let psi = random_real_moebius(rng).compose(&MoebiusMap::reflection());
            p = p.mul(&coupling_factor(&psi, pair[0], pair[1], m)).expect("same arity");
            rest[pair[0]] -= 1;
            rest[pair[1]] -= 1;
        }
    }
    for (k, &r) in rest.iter().enumerate() {
        for _ in 0..r {
            let root = if rng.gen_ratio(1, 10) { P1::infinity() } else { P1::real(small_rat(rng, 8, 2)) };
            p = p.mul(&linear_factor(k, m, &root)).expect("same arity");
        }
    }
    p
}

/// Real symbol in `V(lam ⊔ alpha)` stable on `closure(H₋)^m × H₊^l`: every
/// input unit is coupled to some output variable by a real `ψ` with
/// `det ψ > 0`; the remaining output degree gets real roots. Returns the
/// symbol with its output degree.
pub fn gen_real_symbol<R: Rng + ?Sized>(rng: &mut R, lam: &DegreeVec, l: usize, max_out: u32) -> (BiHomPoly, DegreeVec) {
    let m = lam.arity();
    let mut alpha = vec![0u32; l];
    let mut links = Vec::new();
    for k in 0..m {
        for _ in 0..lam.0[k] {
            let j = rng.gen_range(0..l);
            alpha[j] += 1;
            links.push((k, j));
        }
    }
    for a in alpha.iter_mut() {
        if *a < max_out {
            *a += rng.gen_range(0..=(max_out - *a).min(2));
        }
    }
    let total = m + l;
    let mut s = BiHomPoly::constant(total, GaussRat::real(nonzero_real(rng)));
    let mut used = vec![0u32; l];
    for (k, j) in links {
        s = s.mul(&coupling_factor(&random_real_moebius(rng), k, m + j, total)).expect("same arity");
        used[j] += 1;
    }
    for j in 0..l {
        for _ in used[j]..alpha[j] {
            s = s.mul(&linear_factor(m + j, total, &P1::real(small_rat(rng, 8, 2)))).expect("same arity");
        }
    }
    (s, DegreeVec::new(alpha))
}

/// A real map with `det > 0` carrying `closure(I)` onto `[u0, u1]`, for an
/// interval or ray `I ⊆ ℝ`.
pub fn interval_map<R: Rng + ?Sized>(rng: &mut R, i: &Arc, u0: &Rat, u1: &Rat) -> MoebiusMap {
    let g = |r: &Rat| GaussRat::real(r.clone());
    let one = GaussRat::one;
    let zero = GaussRat::zero;
    // onto [0, ∞], orientation preserved
    let to_ray = match (&i.start, &i.end) {
        (Endpoint::Finite(a), Endpoint::Finite(b)) => MoebiusMap::new(one(), -g(a), -one(), g(b)),
        (Endpoint::Finite(a), Endpoint::Infinity) => MoebiusMap::new(one(), -g(a), zero(), one()),
        (Endpoint::Infinity, Endpoint::Finite(b)) => MoebiusMap::new(zero(), -one(), one(), -g(b)),
        (Endpoint::Infinity, Endpoint::Infinity) => unreachable!("I has distinct endpoints"),
    }
    .expect("nonsingular");
    let onto = MoebiusMap::new(g(u1), g(u0), one(), one()).expect("u0 < u1");
    onto.compose(&random_ray_moebius(rng)).compose(&to_ray)
}

/// An interval or ray inside `ℝ` with random closedness, as an arc.
pub fn random_real_interval<R: Rng + ?Sized>(rng: &mut R) -> Arc {
    let a = small_rat(rng, 5, 2);
    let (start, end) = match rng.gen_range(0..4) {
        0 => (Endpoint::Finite(a), Endpoint::Infinity),
        1 => (Endpoint::Infinity, Endpoint::Finite(a)),
        _ => (Endpoint::Finite(a.clone()), Endpoint::Finite(a + positive_rat(rng, 6, 2))),
    };
    let start_closed = start != Endpoint::Infinity && rng.gen_bool(0.5);
    let end_closed = end != Endpoint::Infinity && rng.gen_bool(0.5);
    Arc { start, end, start_closed, end_closed }
}

/// Real symbol in `V(n) ⊗ V(k)` stable on `(H₋ ∪ I) × (closure(H₊) ∖ J)`
/// for a bounded interval `J`. `[u0, u1]` must lie in `J`.
pub fn gen_interval_symbol<R: Rng + ?Sized>(rng: &mut R, n: u32, k: u32, i: &Arc, u0: &Rat, u1: &Rat) -> BiHomPoly {
    assert!(k >= 1 || n == 0);
    let mut s = BiHomPoly::constant(2, GaussRat::real(nonzero_real(rng)));
    let couplings = rng.gen_range(n.min(1)..=n.min(k));
    for _ in 0..couplings {
        s = s.mul(&coupling_factor(&interval_map(rng, i, u0, u1), 0, 1, 2)).expect("same arity");
    }
    // z-factors: real roots outside I (∞ allowed since I ⊆ ℝ)
    for _ in couplings..n {
        let root = loop {
            let e = if rng.gen_ratio(1, 4) { Endpoint::Infinity } else { Endpoint::Finite(small_rat(rng, 10, 2)) };
            if !i.contains(&e) && !arc_touches(i, &e) {
                break e;
            }
        };
        s = s.mul(&linear_factor(0, 2, &root.to_p1())).expect("same arity");
    }
    let width = u1 - u0;
    for _ in couplings..k {
        let t = Rat::new(rng.gen_range(0..=8).into(), 8.into());
        s = s.mul(&linear_factor(1, 2, &P1::real(u0 + &width * t))).expect("same arity");
    }
    s
}

/// `e` is an endpoint of `i` (excluded so the symbol stays stable on closure cases).
fn arc_touches(i: &Arc, e: &Endpoint) -> bool {
    &i.start == e || &i.end == e
}

/// A polynomial of degree `n` whose roots are sampled from the interval `i`.
pub fn gen_interval_rooted<R: Rng + ?Sized>(rng: &mut R, n: u32, i: &Arc) -> Result<BiHomPoly> {
    let region = Region::arc_only(i.clone());
    let mut p = BiHomPoly::constant(1, GaussRat::real(nonzero_real(rng)));
    for _ in 0..n {
        p = p.mul(&linear_factor(0, 1, &region.sample_with(rng)?))?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::parse_region;
    use crate::stability::{multivariate_stable, real_rooted, univariate_stable, Status, StabilityOptions};

    #[test]
    fn rooted_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let one = P1::real(Rat::from_integer(1.into()));
        let two = P1::real(Rat::from_integer(2.into()));
        let p = linear_factor(0, 1, &one).mul(&linear_factor(0, 1, &two)).unwrap();
        assert_eq!(p, BiHomPoly::univariate_ints(&[2, -3, 1]));
        assert_eq!(linear_factor(0, 1, &P1::finite(GaussRat::i())), BiHomPoly::univariate(&[-GaussRat::i(), GaussRat::one()]));
        for seed in 0..100 {
            let r = random_convex_region(&mut rng);
            let p = gen_rooted(rng.gen_range(1..=6), &r, seed).unwrap();
            assert_eq!(univariate_stable(&p, &r.complement(), 64).unwrap().status, Status::Stable, "{r}");
        }
    }

    #[test]
    fn coupling_vanishes_on_graph() {
        let psi = MoebiusMap::from_ints(1, 2, 3, 5).unwrap();
        let f = coupling_factor(&psi, 2, 0, 3);
        let z = P1::finite(GaussRat::frac(1, 3));
        let pt = ProjPoint(vec![psi.apply_point(&z), P1::real(Rat::zero()), z]);
        assert!(f.evaluate(&pt).unwrap().is_zero());
    }

    #[test]
    fn separating_maps_separate() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (c, d) = (random_convex_region(&mut rng), random_convex_region(&mut rng));
            let psi = separating_map(&mut rng, &c, &d).unwrap();
            let z = c.sample_with(&mut rng).unwrap();
            assert!(!d.contains(&psi.apply_point(&z)));
        }
    }

    #[test]
    fn stable_products_survive_falsification() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let opts = StabilityOptions { budget: 300, ..Default::default() };
        for _ in 0..20 {
            let m = rng.gen_range(2..=3);
            let regions = RegionProduct((0..m).map(|_| random_convex_region(&mut rng)).collect());
            let lam = random_degree(&mut rng, m, 5);
            let p = gen_stable(&mut rng, &lam, &regions).unwrap();
            assert_eq!(p.degree(), &lam);
            assert_ne!(multivariate_stable(&p, &regions, &opts).status, Status::Unstable);
        }
    }

    #[test]
    fn real_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            assert!(real_rooted(&gen_real_rooted(&mut rng, n)).unwrap());
            let p = gen_real_rooted_monic(&mut rng, n);
            assert!(real_rooted(&p).unwrap() && p.is_top_degree_monic());
            let q = gen_positive_rooted_monic(&mut rng, n);
            let pos = parse_region("compl(H+|arc(0,inf))").unwrap();
            assert_eq!(univariate_stable(&q, &pos, 64).unwrap().status, Status::Stable);
        }
    }

    #[test]
    fn interval_maps_land_in_window() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (u0, u1) = (Rat::from_integer(1.into()), Rat::from_integer(3.into()));
        for _ in 0..100 {
            let i = random_real_interval(&mut rng);
            let psi = interval_map(&mut rng, &i, &u0, &u1);
            assert!(psi.det().re.is_positive());
            let z = Region::arc_only(i.clone()).sample_with(&mut rng).unwrap();
            let w = psi.apply_point(&z).affine().unwrap().re;
            assert!(u0 <= w && w <= u1, "{i} {w}");
        }
    }
}
