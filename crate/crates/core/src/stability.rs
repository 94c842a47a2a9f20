//! Stability decisions.
//!
//! Real-root questions are decided exactly with Sturm sequences. Complex root
//! location uses certified disks from [`crate::roots`]; a disk that cannot be
//! separated from the region boundary yields `Indeterminate`. For two or more
//! variables only falsification is available, so a search that finds no zero
//! reports `Indeterminate` leaning stable together with its budget.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::moebius::{act_univariate, MoebiusMap};
use crate::poly::{BiHomPoly, ProjPoint, ZeroTest, P1};
use crate::regions::{Arc, CanonicalPoint, Endpoint, Region, RegionProduct};
use crate::roots::{certify_real_poly_roots, certify_roots, default_precision, RootDisk};
use crate::scalar::{approx_rat, GaussRat, Rat};
use crate::upoly::{
    dehomogenize, imag_part, infinity_multiplicity, isolate_real_roots, real_part, real_roots_with_multiplicity,
    refine_root, to_gauss, RealRoot, Sturm, UPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Stable,
    Unstable,
    Indeterminate,
    /// The zero polynomial: weakly stable, never strongly.
    WeaklyZero,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Stable => "STABLE",
            Status::Unstable => "UNSTABLE",
            Status::Indeterminate => "INDETERMINATE",
            Status::WeaklyZero => "WEAKLY_ZERO",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub status: Status,
    /// A zero inside the region, for `Unstable`.
    pub witness: Option<ProjPoint>,
    /// Distance bound from `witness` to the true zero, measured in the
    /// region's canonical frame; zero for exact witnesses.
    pub witness_radius: Option<Rat>,
    /// Lower bound on the canonical-frame distance from the non-real roots to
    /// the boundary circle, for `Stable` numeric decisions.
    pub margin: Option<Rat>,
    /// Sample budget spent by a multivariate search.
    pub budget: Option<usize>,
    /// `Indeterminate` because no counterexample was found, not because of a tie.
    pub leaning_stable: bool,
}

impl Verdict {
    pub fn new(status: Status) -> Self {
        Verdict { status, witness: None, witness_radius: None, margin: None, budget: None, leaning_stable: false }
    }

    fn unstable(witness: ProjPoint, radius: Rat) -> Self {
        Verdict { witness: Some(witness), witness_radius: Some(radius), ..Self::new(Status::Unstable) }
    }

    pub fn is_stable(&self) -> bool {
        self.status == Status::Stable
    }
}

/// Knobs shared by the numeric and sampling paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityOptions {
    /// Certified disks have radius at most `2^-precision`.
    pub precision: u32,
    /// Points examined by the multivariate search.
    pub budget: usize,
    pub seed: u64,
}

impl Default for StabilityOptions {
    fn default() -> Self {
        StabilityOptions { precision: default_precision(), budget: 2000, seed: 0 }
    }
}

fn univariate_real(p: &BiHomPoly) -> Result<UPoly<Rat>> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch(1, p.arity()));
    }
    if !p.is_real() {
        return Err(Error::NotReal);
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(real_part(&dehomogenize(p)))
}

/// All roots in `ℝ̄`, infinity included. The zero polynomial is reported as
/// [`Error::ZeroPolynomial`].
pub fn real_rooted(p: &BiHomPoly) -> Result<bool> {
    let f = univariate_real(p)?;
    // distinct real roots against distinct roots, read off one Sturm chain
    let st = Sturm::new(&f);
    Ok(st.count_all() == f.degree().unwrap_or(0) - st.gcd_degree())
}

fn count_in_arc(s: &UPoly<Rat>, arc: &Arc) -> usize {
    let st = Sturm::new(s);
    let at = |e: &Endpoint, closed: bool| match e {
        Endpoint::Finite(r) => usize::from(closed && s.eval(r).is_zero()),
        Endpoint::Infinity => 0,
    };
    let fin = |e: &Endpoint| match e {
        Endpoint::Finite(r) => Some(r.clone()),
        Endpoint::Infinity => None,
    };
    if arc.start == arc.end {
        let on = at(&arc.start, true);
        return if arc.start_closed && arc.end_closed { on } else { st.count_all() - on };
    }
    let ends = at(&arc.start, arc.start_closed) + at(&arc.end, arc.end_closed);
    let (s0, e0) = (fin(&arc.start), fin(&arc.end));
    let inner = if arc.start < arc.end {
        st.count_open(s0.as_ref(), e0.as_ref())
    } else {
        let upper = s0.as_ref().map_or(0, |s| st.count_open(Some(s), None));
        let lower = e0.as_ref().map_or(0, |e| st.count_open(None, Some(e)));
        upper + lower
    };
    ends + inner
}

/// Every root, `∞` included, lies in the boundary arc `j`.
pub fn roots_in_boundary_set(p: &BiHomPoly, j: &Arc) -> Result<bool> {
    if !real_rooted(p)? {
        return Ok(false);
    }
    if infinity_multiplicity(p) > 0 && !j.contains(&Endpoint::Infinity) {
        return Ok(false);
    }
    let s = univariate_real(p)?.squarefree_part();
    Ok(count_in_arc(&s, j) == s.degree().unwrap_or(0))
}

fn check_monic_real_rooted(p: &BiHomPoly) -> Result<UPoly<Rat>> {
    let f = univariate_real(p)?;
    if !p.is_top_degree_monic() {
        return Err(Error::NotMonic);
    }
    if !real_rooted(p)? {
        return Err(Error::NotRealRooted);
    }
    Ok(f)
}

/// Sorted roots of `p` and `q` as positions in the merged list of distinct roots.
fn merged_positions(f: &UPoly<Rat>, g: &UPoly<Rat>) -> (Vec<usize>, Vec<usize>) {
    let s = f.mul(g).squarefree_part();
    let roots = isolate_real_roots(&s);
    let derivs = |h: &UPoly<Rat>| {
        let mut out = Vec::new();
        let mut d = h.clone();
        while d.degree().unwrap_or(0) > 0 {
            out.push(s.gcd(&d));
            d = d.derivative();
        }
        out
    };
    let (df, dg) = (derivs(f), derivs(g));
    let mut pf = Vec::new();
    let mut pg = Vec::new();
    for (idx, r) in roots.iter().enumerate() {
        // multiplicity: leading run of derivatives vanishing at r
        let mf = df.iter().take_while(|h| crate::upoly::root_of(h, r)).count();
        let mg = dg.iter().take_while(|h| crate::upoly::root_of(h, r)).count();
        pf.extend(std::iter::repeat_n(idx, mf));
        pg.extend(std::iter::repeat_n(idx, mg));
    }
    (pf, pg)
}

/// `α₁ ≤ β₁ ≤ α₂ ≤ β₂ ≤ …` for the roots `α` of `p` and `β` of `q`, both
/// real-rooted and top-degree monic of the same degree.
pub fn interlace(p: &BiHomPoly, q: &BiHomPoly) -> Result<bool> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree().clone(), q.degree().clone()));
    }
    let f = check_monic_real_rooted(p)?;
    let g = check_monic_real_rooted(q)?;
    let (a, b) = merged_positions(&f, &g);
    Ok((0..a.len()).all(|i| a[i] <= b[i] && (i + 1 == a.len() || b[i] <= a[i + 1])))
}

/// Sorted roots satisfy `α_k ≤ β_k` for every `k`; same preconditions as
/// [`interlace`].
pub fn roots_below(p: &BiHomPoly, q: &BiHomPoly) -> Result<bool> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree().clone(), q.degree().clone()));
    }
    let f = check_monic_real_rooted(p)?;
    let g = check_monic_real_rooted(q)?;
    let (a, b) = merged_positions(&f, &g);
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// A rational `t` that is not a root of any of `ps`.
fn non_root(ps: &[&UPoly<GaussRat>]) -> Rat {
    (0i64..)
        .flat_map(|k| [k, -k - 1])
        .map(|k| Rat::from_integer(k.into()))
        .find(|t| ps.iter().all(|p| !p.eval(&GaussRat::real(t.clone())).is_zero()))
        .expect("finitely many roots")
}

fn rescale_monic(p: &BiHomPoly) -> BiHomPoly {
    let lc = p.coeff(&p.degree().0);
    p.scale(&lc.inv().expect("full degree"))
}

/// Proper position `p ≪ q`: `q + i·p` weakly stable on the upper half-plane.
/// One variable is decided exactly by interlacing; more variables delegate
/// to [`multivariate_stable`].
pub fn proper_position(p: &BiHomPoly, q: &BiHomPoly, opts: &StabilityOptions) -> Result<Verdict> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree().clone(), q.degree().clone()));
    }
    if !p.is_real() || !q.is_real() {
        return Err(Error::NotReal);
    }
    let combo = q.add(&p.scale(&GaussRat::i()))?;
    if combo.is_zero() {
        return Ok(Verdict::new(Status::WeaklyZero));
    }
    if p.arity() != 1 {
        return Ok(multivariate_stable(&combo, &RegionProduct::power(&Region::upper(), p.arity()), opts));
    }
    let decided = |ok: bool| -> Result<Verdict> {
        if ok {
            Ok(Verdict::new(Status::Stable))
        } else {
            let v = univariate_stable(&combo, &Region::upper(), opts.precision)?;
            Ok(if v.status == Status::Unstable { v } else { Verdict::new(Status::Unstable) })
        }
    };
    if p.is_zero() {
        return decided(real_rooted(q)?);
    }
    if q.is_zero() {
        return decided(real_rooted(p)?);
    }
    if !real_rooted(p)? || !real_rooted(q)? {
        return decided(false);
    }
    // Move a non-root to ∞ with a real unimodular map, which preserves H₊.
    let t = non_root(&[&dehomogenize(p), &dehomogenize(q)]);
    let phi = MoebiusMap::with_pole(&P1::real(t));
    let pt = act_univariate(&phi, p)?;
    let qt = act_univariate(&phi, q)?;
    if p.degree().0[0] == 0 {
        return decided(true);
    }
    let n = p.degree().0.clone();
    let s = &pt.coeff(&n).re / &qt.coeff(&n).re;
    let (pm, qm) = (rescale_monic(&pt), rescale_monic(&qt));
    let ok = if s.is_positive() { interlace(&pm, &qm)? } else { interlace(&qm, &pm)? };
    decided(ok)
}

/// Decides whether a real root isolated in `r` (a simple root of `g`) lies in
/// the region, in canonical coordinates.
fn real_root_in_region(region: &Region, g: &UPoly<Rat>, r: &RealRoot) -> bool {
    if r.is_exact() {
        return region.contains_canonical(&CanonicalPoint::Boundary(Endpoint::Finite(r.lo.clone())));
    }
    let ends: Vec<Rat> = region
        .arc
        .iter()
        .flat_map(|a| [a.start.clone(), a.end.clone()])
        .filter_map(|e| match e {
            Endpoint::Finite(x) => Some(x),
            Endpoint::Infinity => None,
        })
        .collect();
    for e in &ends {
        if g.eval(e).is_zero() && r.lo < *e && *e < r.hi {
            return region.contains_canonical(&CanonicalPoint::Boundary(Endpoint::Finite(e.clone())));
        }
    }
    let mut r = r.clone();
    while ends.iter().any(|e| r.lo <= *e && *e <= r.hi) {
        let w = r.width() / Rat::from_integer(2.into());
        r = refine_root(g, &r, &w);
        if r.is_exact() {
            break;
        }
    }
    region.contains_canonical(&CanonicalPoint::Boundary(Endpoint::Finite(r.midpoint())))
}

/// Exact rational point near `z` with small denominators, if it is a root.
fn snap_exact(f: &UPoly<GaussRat>, z: &GaussRat) -> Option<GaussRat> {
    if f.eval(z).is_zero() {
        return Some(z.clone());
    }
    let c = z.to_complex();
    let re = approx_rat(c.re, 1 << 20)?;
    let im = approx_rat(c.im, 1 << 20)?;
    let s = GaussRat::new(re, im);
    f.eval(&s).is_zero().then_some(s)
}

fn mapped_witness(region: &Region, w: P1) -> ProjPoint {
    ProjPoint(vec![region.chart.apply_point(&w).normalized()])
}

/// Certified disks, each off the real axis, for the non-real roots of a
/// square-free `f` whose real roots are those of `g = gcd(Re f, Im f)`.
fn nonreal_disks(f: &UPoly<GaussRat>, g: &UPoly<Rat>, precision: u32) -> Option<Vec<RootDisk>> {
    let dg = g.degree().unwrap_or(0);
    let h = if dg > 0 { f.div_exact(&to_gauss(g)) } else { f.clone() };
    let real_count = if dg > 0 { Sturm::new(g).count_all() } else { 0 };
    let cap = precision.saturating_mul(8).max(512);
    let mut prec = precision;
    loop {
        let attempt = (|| {
            let mut out: Vec<RootDisk> = Vec::new();
            if dg > real_count {
                let d = certify_real_poly_roots(g, prec)?;
                out.extend(d.into_iter().filter(|x| x.im_sign() != 0));
                if out.len() != dg - real_count {
                    return None;
                }
            }
            let d = certify_roots(&h, prec)?;
            if d.iter().any(|x| x.im_sign() == 0) {
                return None;
            }
            out.extend(d);
            Some(out)
        })();
        if attempt.is_some() || prec >= cap {
            return attempt;
        }
        prec = prec.saturating_mul(2).max(64);
    }
}

/// Stability of `p ∈ V(n)` on `R` (nonvanishing on `R`), with numeric
/// certification at `2^-precision`.
pub fn univariate_stable(p: &BiHomPoly, region: &Region, precision: u32) -> Result<Verdict> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch(1, p.arity()));
    }
    if p.is_zero() {
        return Ok(Verdict::new(Status::WeaklyZero));
    }
    let q = act_univariate(&region.chart.adjugate(), p)?;
    if infinity_multiplicity(&q) > 0 && region.contains_canonical(&CanonicalPoint::Boundary(Endpoint::Infinity)) {
        return Ok(Verdict::unstable(mapped_witness(region, P1::infinity()), Rat::zero()));
    }
    let f = dehomogenize(&q);
    let mut undecided = false;
    let mut margin: Option<Rat> = None;
    for fi in f.squarefree_factors() {
        let g = real_part(&fi).gcd(&imag_part(&fi));
        for r in isolate_real_roots(&g) {
            if real_root_in_region(region, &g, &r) {
                let r = refine_root(&g, &r, &Rat::new(1.into(), num_bigint::BigInt::one() << precision as usize));
                let radius = r.width() / Rat::from_integer(2.into());
                return Ok(Verdict::unstable(mapped_witness(region, P1::real(r.midpoint())), radius));
            }
        }
        let Some(disks) = nonreal_disks(&fi, &g, precision) else {
            undecided = true;
            continue;
        };
        for d in &disks {
            let side = if d.im_sign() > 0 { CanonicalPoint::Upper } else { CanonicalPoint::Lower };
            if region.contains_canonical(&side) {
                let (w, radius) = match snap_exact(&fi, &d.center) {
                    Some(z) => (z, Rat::zero()),
                    None => (d.center.clone(), d.radius.clone()),
                };
                return Ok(Verdict::unstable(mapped_witness(region, P1::finite(w)), radius));
            }
            let gap = d.center.im.abs() - &d.radius;
            margin = Some(margin.map_or(gap.clone(), |m| m.min(gap)));
        }
    }
    if undecided {
        return Ok(Verdict::new(Status::Indeterminate));
    }
    Ok(Verdict { margin, ..Verdict::new(Status::Stable) })
}

/// Canonical points tried first in each factor: `∞, 0, ±1, ±i` and arc ends.
fn distinguished_points(r: &Region) -> Vec<P1> {
    let mut cands = vec![
        P1::infinity(),
        P1::real(Rat::zero()),
        P1::real(Rat::one()),
        P1::real(-Rat::one()),
        P1::finite(GaussRat::i()),
        P1::finite(-GaussRat::i()),
    ];
    if let Some(a) = &r.arc {
        cands.push(a.start.to_p1());
        cands.push(a.end.to_p1());
    }
    let mut out: Vec<P1> = Vec::new();
    for w in cands {
        let z = r.chart.apply_point(&w).normalized();
        if r.contains(&z) && !out.iter().any(|o| o.proj_eq(&z)) {
            out.push(z);
        }
    }
    out
}

/// Falsification search for zeros of `p` on `C₁ × ⋯ × C_m`.
pub fn multivariate_stable(p: &BiHomPoly, region: &RegionProduct, opts: &StabilityOptions) -> Verdict {
    if p.is_zero() {
        return Verdict::new(Status::WeaklyZero);
    }
    let m = p.arity();
    assert_eq!(m, region.arity(), "region arity");
    if m == 1 {
        return univariate_stable(p, &region.0[0], opts.precision).expect("univariate input");
    }
    let tester = ZeroTest::new(p);
    let exact_zero = |z: &ProjPoint| tester.vanishes_at(z);

    // Grid of distinguished points, capped.
    let grids: Vec<Vec<P1>> = region.0.iter().map(distinguished_points).collect();
    let mut idx = vec![0usize; m];
    let mut spent = 0usize;
    if grids.iter().all(|g| !g.is_empty()) {
        'grid: loop {
            let z = ProjPoint(idx.iter().zip(&grids).map(|(&i, g)| g[i].clone()).collect());
            spent += 1;
            if exact_zero(&z) {
                return Verdict { budget: Some(spent), ..Verdict::unstable(z, Rat::zero()) };
            }
            if spent >= 512 {
                break;
            }
            for k in 0..m {
                idx[k] += 1;
                if idx[k] < grids[k].len() {
                    continue 'grid;
                }
                idx[k] = 0;
            }
            break;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples = opts.budget.saturating_sub(spent);
    let sections = (samples / 16).clamp(1, 64);
    for _ in 0..samples.saturating_sub(sections) {
        let Ok(z) = region.sample_with(&mut rng) else { break };
        spent += 1;
        if exact_zero(&z) {
            return Verdict { budget: Some(spent), ..Verdict::unstable(z, Rat::zero()) };
        }
    }
    for s in 0..sections {
        let k = s % m;
        let Ok(mut z) = region.sample_with(&mut rng) else { break };
        if rng.gen_bool(0.25) {
            for (j, g) in grids.iter().enumerate() {
                if j != k && !g.is_empty() {
                    z.0[j] = g[rng.gen_range(0..g.len())].clone();
                }
            }
        }
        spent += 1;
        let sec = p.section(k, &z).expect("arity checked");
        if sec.is_zero() {
            return Verdict { budget: Some(spent), ..Verdict::unstable(z, Rat::zero()) };
        }
        match univariate_stable(&sec, &region.0[k], opts.precision) {
            Ok(v) if v.status == Status::Unstable => {
                let w = v.witness.expect("unstable carries a witness");
                z.0[k] = w.0[0].clone();
                return Verdict { budget: Some(spent), witness_radius: v.witness_radius, ..Verdict::unstable(z, Rat::zero()) };
            }
            _ => {}
        }
    }
    Verdict { budget: Some(spent), leaning_stable: true, ..Verdict::new(Status::Indeterminate) }
}

/// Root enclosures of `p ∈ V(n)`: exact real roots plus certified disks.
#[derive(Clone, Debug, PartialEq)]
pub struct RootIsolation {
    pub real: Vec<(RealRoot, u32)>,
    pub complex: Vec<(RootDisk, u32)>,
    pub infinity_multiplicity: u32,
}

impl RootIsolation {
    /// Roots counted with multiplicity, `∞` included.
    pub fn total(&self) -> u32 {
        self.real.iter().map(|r| r.1).sum::<u32>() + self.complex.iter().map(|r| r.1).sum::<u32>() + self.infinity_multiplicity
    }
}

/// Isolates every root of `p ∈ V(n)` in `ℂP¹`; `None` if certification fails.
pub fn isolate_roots(p: &BiHomPoly, precision: u32) -> Result<Option<RootIsolation>> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch(1, p.arity()));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = dehomogenize(p);
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for (i, fi) in f.squarefree_factors().into_iter().enumerate() {
        let mult = i as u32 + 1;
        let g = real_part(&fi).gcd(&imag_part(&fi));
        real.extend(isolate_real_roots(&g).into_iter().map(|r| (r, mult)));
        let Some(disks) = nonreal_disks(&fi, &g, precision) else { return Ok(None) };
        complex.extend(disks.into_iter().map(|d| (d, mult)));
    }
    real.sort_by_key(|r| r.0.midpoint());
    Ok(Some(RootIsolation { real, complex, infinity_multiplicity: infinity_multiplicity(p) }))
}

/// Enclosures of the smallest and largest roots of a real-rooted `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct MinMaxRoots {
    pub min: Option<RealRoot>,
    pub max: Option<RealRoot>,
    /// The largest root is `∞`.
    pub max_infinite: bool,
}

pub fn minmax_root(p: &BiHomPoly, precision: u32) -> Result<MinMaxRoots> {
    if !real_rooted(p)? {
        return Err(Error::NotRealRooted);
    }
    let f = univariate_real(p)?;
    let width = Rat::new(1.into(), num_bigint::BigInt::one() << precision as usize);
    let factors = f.squarefree_factors();
    let roots = real_roots_with_multiplicity(&f);
    let tight = |(r, m): &(RealRoot, u32)| refine_root(&factors[*m as usize - 1], r, &width);
    Ok(MinMaxRoots {
        min: roots.first().map(tight),
        max: roots.last().map(tight),
        max_infinite: infinity_multiplicity(p) > 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::DegreeVec;
    use crate::regions::{parse_product, parse_region, upper_with_positive_ray};
    use crate::scalar::{rat, ratio};

    fn uni(c: &[i64]) -> BiHomPoly {
        BiHomPoly::univariate_ints(c)
    }

    #[test]
    fn real_rootedness() {
        assert!(real_rooted(&uni(&[2, -3, 1])).unwrap());
        assert!(!real_rooted(&uni(&[1, 0, 1])).unwrap());
        assert!(real_rooted(&uni(&[0, 1, 0])).unwrap());
        assert!(matches!(real_rooted(&BiHomPoly::zero(DegreeVec::univariate(2))), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn boundary_sets() {
        let p = uni(&[8, -6, 1]); // (x−2y)(x−4y)
        let closed = Arc::closed(Endpoint::Finite(rat(2)), Endpoint::Finite(rat(4)));
        let half = Arc { start_closed: false, ..closed.clone() };
        assert!(roots_in_boundary_set(&p, &closed).unwrap());
        assert!(!roots_in_boundary_set(&p, &half).unwrap());
        let xy = uni(&[0, 1, 0]);
        assert!(roots_in_boundary_set(&xy, &Arc::closed(Endpoint::Finite(rat(0)), Endpoint::Infinity)).unwrap());
        assert!(!roots_in_boundary_set(&xy, &Arc { end_closed: false, ..Arc::closed(Endpoint::Finite(rat(0)), Endpoint::Infinity) }).unwrap());
    }

    #[test]
    fn interlacing() {
        let p = uni(&[3, -4, 1]); // roots 1, 3
        let q = uni(&[8, -6, 1]); // roots 2, 4
        assert!(interlace(&p, &q).unwrap());
        assert!(!interlace(&q, &p).unwrap());
        assert!(interlace(&p, &p).unwrap());
        let a = uni(&[4, -5, 1]); // 1, 4
        let b = uni(&[6, -5, 1]); // 2, 3
        assert!(!interlace(&a, &b).unwrap());
        // the critical point of x(x − 2) is a root of the other polynomial
        assert!(interlace(&uni(&[0, -2, 1]), &uni(&[3, -4, 1])).unwrap());
        assert!(roots_below(&uni(&[0, -2, 1]), &uni(&[3, -4, 1])).unwrap());
        assert!(matches!(interlace(&uni(&[1, 0, 2]), &q), Err(Error::NotMonic)));
        assert!(matches!(interlace(&uni(&[1, 0, 1]), &q), Err(Error::NotRealRooted)));
    }

    #[test]
    fn proper_positions() {
        let opts = StabilityOptions::default();
        let q = uni(&[2, -3, 1]);
        let dq = uni(&[-3, 2, 0]);
        assert!(proper_position(&dq, &q, &opts).unwrap().is_stable());
        assert_eq!(proper_position(&q, &dq, &opts).unwrap().status, Status::Unstable);
        let zero = BiHomPoly::zero(DegreeVec::univariate(2));
        assert!(proper_position(&zero, &q, &opts).unwrap().is_stable());
        assert_eq!(proper_position(&zero, &zero, &opts).unwrap().status, Status::WeaklyZero);
    }

    #[test]
    fn univariate_verdicts() {
        let v = univariate_stable(&uni(&[1, 0, 1]), &Region::upper(), 64).unwrap();
        assert_eq!(v.status, Status::Unstable);
        assert!(v.witness.unwrap().0[0].proj_eq(&P1::finite(GaussRat::i())));
        assert!(univariate_stable(&uni(&[2, -3, 1]), &Region::upper(), 64).unwrap().is_stable());
        // Roots 0 and ∞ both lie outside the complement of the closed positive ray.
        let r = parse_region("compl(arc[0,inf])").unwrap();
        assert!(univariate_stable(&uni(&[0, 1, 0]), &r, 64).unwrap().is_stable());
        let ray = parse_region("arc[0,inf]").unwrap();
        assert_eq!(univariate_stable(&uni(&[0, 1, 0]), &ray, 64).unwrap().status, Status::Unstable);
        let c = upper_with_positive_ray();
        // x² − 2y² has the root √2 on the closed positive ray.
        let v = univariate_stable(&uni(&[-2, 0, 1]), &c, 64).unwrap();
        assert_eq!(v.status, Status::Unstable);
        assert!(univariate_stable(&uni(&[-2, 0, 1]), &Region::upper(), 64).unwrap().is_stable());
        assert_eq!(univariate_stable(&BiHomPoly::zero(DegreeVec::univariate(1)), &c, 64).unwrap().status, Status::WeaklyZero);
    }

    #[test]
    fn disk_and_exterior() {
        // x − y/2 has the root 1/2 inside the unit disk.
        let p = BiHomPoly::univariate(&[GaussRat::frac(-1, 2), GaussRat::one()]);
        assert_eq!(univariate_stable(&p, &Region::disk(), 64).unwrap().status, Status::Unstable);
        assert!(univariate_stable(&p, &Region::exterior(), 64).unwrap().is_stable());
        // (x − y)(x + y): roots on the unit circle.
        let c = uni(&[-1, 0, 1]);
        assert!(univariate_stable(&c, &Region::disk(), 64).unwrap().is_stable());
        assert_eq!(univariate_stable(&c, &Region::disk().closure(), 64).unwrap().status, Status::Unstable);
    }

    #[test]
    fn multivariate() {
        let lam = DegreeVec::ones(2);
        let p = BiHomPoly::from_terms(lam, [(vec![1, 1], GaussRat::one()), (vec![0, 0], GaussRat::int(-1))]).unwrap();
        let opts = StabilityOptions { budget: 200, ..Default::default() };
        let v = multivariate_stable(&p, &parse_product("H+^2").unwrap(), &opts);
        assert_eq!(v.status, Status::Indeterminate);
        assert!(v.leaning_stable && v.budget.is_some());
        let pt = parse_product("arc[1,1]^2").unwrap();
        assert_eq!(multivariate_stable(&p, &pt, &opts).status, Status::Unstable);
        let cube = BiHomPoly::from_terms(DegreeVec::ones(3), [(vec![1, 1, 1], GaussRat::one()), (vec![0, 0, 0], GaussRat::int(-1))])
            .unwrap();
        let v = multivariate_stable(&cube, &parse_product("closure(disk)^3").unwrap(), &opts);
        assert_eq!(v.status, Status::Unstable);
        let w = v.witness.unwrap();
        assert!(cube.evaluate(&w).unwrap().is_zero());
    }

    #[test]
    fn minmax() {
        let m = minmax_root(&uni(&[3, -4, 1]), 64).unwrap();
        assert_eq!(m.min, Some(RealRoot::exact(rat(1))));
        assert_eq!(m.max, Some(RealRoot::exact(rat(3))));
        let s = minmax_root(&uni(&[-2, 0, 1]), 40).unwrap().max.unwrap();
        assert!(&s.lo * &s.lo < rat(2) && &s.hi * &s.hi > rat(2) && s.width() <= ratio(1, 1 << 40));
        assert!(minmax_root(&uni(&[0, 1, 0]), 64).unwrap().max_infinite);
    }

    #[test]
    fn isolation_counts_roots() {
        for c in [vec![1, 0, 1], vec![0, 0, 1, 0], vec![-1, 0, 0, 0, 1], vec![0, 1, 2, 1]] {
            let p = uni(&c);
            let iso = isolate_roots(&p, 64).unwrap().unwrap();
            assert_eq!(iso.total(), p.degree().0[0]);
        }
    }
}
