//! The suite catalog.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::apolarity::{
    apolarity_form, contract, d_map, evaluation_symbol, operator_from_symbol, proportional, sign_pow, symbol,
    symbol_lemma_contract, LinearOp, TensorPoly,
};
use crate::degree::DegreeVec;
use crate::error::Result;
use crate::moebius::{act_poly, polar_derivative, MoebiusMap, MoebiusTuple};
use crate::polarization::{form_constant, polarize, polarize_operator, polarized_evaluation, polarized_symbol, project};
use crate::poly::{BiHomPoly, ProjPoint, Var, P1};
use crate::regions::{
    classify_grace_pair, lower_with_negative_ray, upper_with_positive_ray, Arc, Endpoint, GraceCase, Region,
    RegionProduct,
};
use crate::scalar::{GaussRat, Rat};
use crate::stability::{
    interlace, minmax_root, multivariate_stable, proper_position, real_rooted, roots_below, roots_in_boundary_set,
    univariate_stable, Status,
};
use crate::upoly::{dehomogenize, isolate_real_roots, real_part, refine_root};

use super::convolution::{additive_convolution, multiplicative_convolution};
use super::gen::*;
use super::{Check, Ctx};

pub(super) type CaseFn = fn(&mut Ctx) -> Result<Check>;

pub(super) struct SuiteDef {
    pub name: &'static str,
    /// Fixed cases occupying the first indices.
    pub regressions: &'static [(&'static str, CaseFn)],
    /// Random checks, assigned round-robin to the remaining indices.
    pub kinds: &'static [(&'static str, CaseFn)],
}

impl SuiteDef {
    pub fn case(&self, index: usize) -> (&'static str, CaseFn) {
        if index < self.regressions.len() {
            self.regressions[index]
        } else {
            self.kinds[(index - self.regressions.len()) % self.kinds.len()]
        }
    }
}

pub(super) const CATALOG: &[SuiteDef] = &[
    SuiteDef {
        name: "grace",
        regressions: &[("mixed-product-counterexample", grace_mixed_product)],
        kinds: &[
            ("positive-ray", grace_positive_ray),
            ("two-point", grace_two_point),
            ("closed-open", grace_closed_open),
            ("open-closed", grace_open_closed),
            ("univariate", grace_univariate),
        ],
    },
    SuiteDef {
        name: "ev-grace",
        regressions: &[],
        kinds: &[("stable-q", ev_stable_q), ("planted-zero", ev_planted_zero), ("rooted-q", ev_rooted_q)],
    },
    SuiteDef {
        name: "symbol-lemma",
        regressions: &[],
        kinds: &[
            ("symbol-lemma", symbol_lemma),
            ("evaluation-symbol-lemma", evaluation_symbol_lemma),
            ("d-conjugation", d_conjugation),
            ("symbol-round-trip", symbol_round_trip),
        ],
    },
    SuiteDef {
        name: "laguerre",
        regressions: &[],
        kinds: &[("univariate", laguerre_univariate), ("multivariate", laguerre_multivariate)],
    },
    SuiteDef {
        name: "hermite-biehler",
        regressions: &[],
        kinds: &[("interlacing-pair", hb_interlacing_pair), ("random-pair", hb_random_pair), ("total-order", hb_total_order)],
    },
    SuiteDef {
        name: "gws",
        regressions: &[],
        kinds: &[
            ("univariate", gws_univariate),
            ("circular", gws_circular),
            ("form-constant", gws_form_constant),
            ("polarized-evaluation", gws_polarized_evaluation),
            ("operator-round-trip", gws_operator_round_trip),
        ],
    },
    SuiteDef {
        name: "cops",
        regressions: &[("derivative-symbol", cops_derivative_symbol)],
        kinds: &[
            ("symbol-to-operator", cops_symbol_to_operator),
            ("operator-witness", cops_operator_witness),
            ("convolution-symbols", cops_convolution_symbols),
            ("additive-sandwich", cops_additive_sandwich),
            ("multiplicative-sandwich", cops_multiplicative_sandwich),
            ("convolution-algebra", cops_convolution_algebra),
        ],
    },
    SuiteDef {
        name: "rops",
        regressions: &[],
        kinds: &[("univariate", rops_univariate), ("multivariate", rops_multivariate)],
    },
    SuiteDef {
        name: "jops",
        regressions: &[("fisk", jops_fisk), ("window-exact", jops_window_exact)],
        kinds: &[
            ("interval-symbol", jops_interval_symbol),
            ("window", jops_window),
            ("degenerate", jops_degenerate),
        ],
    },
];

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Ok(Check::Fail(format!($($arg)*)));
        }
    };
}

fn lam_fact_sq(lam: &DegreeVec) -> GaussRat {
    let f = lam.factorial();
    GaussRat::real(Rat::from_integer(&f * &f))
}

fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn product_string(r: &RegionProduct) -> String {
    r.to_string()
}

/// Exact univariate verdict: any zero fails, undecided ties are indeterminate.
fn univariate_check(p: &BiHomPoly, region: &Region, precision: u32, what: &str) -> Result<Check> {
    let v = univariate_stable(p, region, precision)?;
    Ok(Check::from_falsification(&v, what))
}

fn stability_check(ctx: &mut Ctx, p: &BiHomPoly, regions: &RegionProduct, what: &str) -> Result<Check> {
    if p.is_zero() {
        return Ok(Check::Fail(format!("{what}: zero polynomial")));
    }
    if regions.arity() == 1 {
        return univariate_check(p, &regions.0[0], ctx.cfg.precision, what);
    }
    let opts = ctx.opts();
    Ok(Check::from_falsification(&multivariate_stable(p, regions, &opts), what))
}

// ---------------------------------------------------------------- grace

fn grace_pair(ctx: &mut Ctx, a: &RegionProduct, b: &RegionProduct, expect: Option<GraceCase>, lam: &DegreeVec) -> Result<Check> {
    ctx.note("a", product_string(a));
    ctx.note("b", product_string(b));
    ctx.note("lambda", lam.0.clone());
    let case = classify_grace_pair(a, b);
    ctx.note("case", case.to_string());
    if let Some(e) = expect {
        ensure!(case == e, "classified {case}, expected {e}");
    }
    ensure!(case != GraceCase::NotCovered, "pair not covered");
    let p = gen_stable(&mut ctx.rng, lam, a)?;
    let q = gen_stable(&mut ctx.rng, lam, b)?;
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    ensure!(!apolarity_form(&p, &q)?.is_zero(), "apolarity vanishes on a stable pair");
    Ok(Check::Pass)
}

fn multi_degree(ctx: &mut Ctx) -> DegreeVec {
    let m = ctx.rng.gen_range(1..=3);
    random_degree(&mut ctx.rng, m, 6)
}

fn grace_positive_ray(ctx: &mut Ctx) -> Result<Check> {
    let lam = multi_degree(ctx);
    let m = lam.arity();
    let a = RegionProduct::power(&upper_with_positive_ray(), m);
    let b = RegionProduct::power(&lower_with_negative_ray(), m);
    grace_pair(ctx, &a, &b, Some(GraceCase::TwoPointIntersection), &lam)
}

fn grace_two_point(ctx: &mut Ctx) -> Result<Check> {
    let lam = multi_degree(ctx);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for _ in 0..lam.arity() {
        let phi = random_moebius(&mut ctx.rng);
        let j = random_arc(&mut ctx.rng);
        let closed = Arc::closed(j.start.clone(), j.end.clone());
        let open = Arc::open(j.start, j.end);
        a.push(Region::upper().with_arc(closed)?.image(&phi));
        b.push(Region::upper().with_arc(open)?.complement().image(&phi));
    }
    let expect = (lam.arity() > 1).then_some(GraceCase::TwoPointIntersection);
    grace_pair(ctx, &RegionProduct(a), &RegionProduct(b), expect, &lam)
}

fn circular_pairs(ctx: &mut Ctx, m: usize, closed_first: bool) -> (RegionProduct, RegionProduct) {
    let (a, b): (Vec<Region>, Vec<Region>) = (0..m).map(|_| random_circular_pair(&mut ctx.rng, closed_first)).unzip();
    (RegionProduct(a), RegionProduct(b))
}

fn grace_closed_open(ctx: &mut Ctx) -> Result<Check> {
    let lam = multi_degree(ctx);
    let (a, b) = circular_pairs(ctx, lam.arity(), true);
    let expect = (lam.arity() > 1).then_some(GraceCase::ClosedOpen);
    grace_pair(ctx, &a, &b, expect, &lam)
}

fn grace_open_closed(ctx: &mut Ctx) -> Result<Check> {
    let lam = multi_degree(ctx);
    let (a, b) = circular_pairs(ctx, lam.arity(), false);
    let expect = (lam.arity() > 1).then_some(GraceCase::OpenClosed);
    grace_pair(ctx, &a, &b, expect, &lam)
}

fn grace_univariate(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=8);
    let phi = random_moebius(&mut ctx.rng);
    let j1 = random_arc(&mut ctx.rng);
    let c = Region::upper().with_arc(j1.clone())?;
    // B ⊇ complement(C): drop some of the arc's closed endpoints from C's complement
    let j2 = if ctx.rng.gen_bool(0.5) { j1 } else { Arc::open(j1.start, j1.end) };
    let b = Region::upper().with_arc(j2)?.complement();
    let (c, b) = if ctx.rng.gen_bool(0.5) { (c, b) } else { (b, c) };
    let (a, b) = (RegionProduct(vec![c.image(&phi)]), RegionProduct(vec![b.image(&phi)]));
    grace_pair(ctx, &a, &b, None, &DegreeVec::univariate(n))
}

fn mixed_counterexample() -> BiHomPoly {
    BiHomPoly::from_terms(DegreeVec::ones(3), [(vec![1, 1, 1], GaussRat::one()), (vec![0, 0, 0], -GaussRat::one())])
        .expect("degree 1^3")
}

fn grace_mixed_product(ctx: &mut Ctx) -> Result<Check> {
    let p = mixed_counterexample();
    let disk = Region::disk();
    let ext = Region::exterior();
    let a = RegionProduct(vec![disk.closure(), disk.clone(), disk.clone()]);
    let b = RegionProduct(vec![ext.clone(), ext.closure(), ext.closure()]);
    ctx.note_poly("p", &p);
    ctx.note("a", product_string(&a));
    ctx.note("b", product_string(&b));
    ensure!(classify_grace_pair(&a, &b) == GraceCase::NotCovered, "mixed product classified as covered");
    ensure!(apolarity_form(&p, &p)?.is_zero(), "self-apolarity is nonzero");
    let ones = ProjPoint(vec![P1::real(Rat::one()); 3]);
    ensure!(p.evaluate(&ones)?.is_zero(), "p(1,1,1) is nonzero");
    let closed = RegionProduct::power(&disk.closure(), 3);
    let v = multivariate_stable(&p, &closed, &ctx.opts());
    ensure!(v.status == Status::Unstable, "no zero found on the closed disk product");
    let w = v.witness.expect("unstable carries a witness");
    ensure!(closed.contains(&w) && p.evaluate(&w)?.is_zero(), "witness is not an exact zero in the product");
    let on_a = stability_check(ctx, &p, &a, "p on the mixed disk product")?;
    let on_b = stability_check(ctx, &p, &b, "p on the mixed exterior product")?;
    Ok(on_a.and(on_b))
}

// ---------------------------------------------------------------- ev-grace

/// A disjoint pair: complementary circular factors, or one projectively
/// convex region against its complement.
fn disjoint_pair(ctx: &mut Ctx, m: usize) -> (RegionProduct, RegionProduct) {
    if m == 1 && ctx.rng.gen_bool(0.5) {
        let c = random_convex_region(&mut ctx.rng);
        let b = c.complement();
        return (RegionProduct(vec![c]), RegionProduct(vec![b]));
    }
    let closed_first = ctx.rng.gen_bool(0.5);
    circular_pairs(ctx, m, closed_first)
}

fn avoids(z: &ProjPoint, a: &RegionProduct) -> bool {
    z.0.iter().zip(&a.0).all(|(w, r)| !r.contains(w))
}

fn ev_stable_q(ctx: &mut Ctx) -> Result<Check> {
    let lam = multi_degree(ctx);
    let (a, b) = disjoint_pair(ctx, lam.arity());
    ctx.note("a", product_string(&a));
    ctx.note("b", product_string(&b));
    let q = gen_stable(&mut ctx.rng, &lam, &b)?;
    ctx.note_poly("q", &q);
    for _ in 0..3 {
        let p = gen_stable(&mut ctx.rng, &lam, &a)?;
        ensure!(!apolarity_form(&p, &q)?.is_zero(), "stable p pairs to zero: {}", crate::json::poly_to_string(&p));
    }
    let scale = lam_fact_sq(&lam);
    for _ in 0..3 {
        let beta = b.sample_with(&mut ctx.rng)?;
        ensure!(avoids(&beta, &a), "sample of B meets A");
        let e = evaluation_symbol(&beta, &lam)?;
        let d = apolarity_form(&e, &q)?;
        ensure!(d == &scale * &q.evaluate(&beta)?, "evaluation symbol lemma fails");
        ensure!(!d.is_zero(), "evaluation symbol pairs to zero");
    }
    Ok(Check::Pass)
}

fn ev_planted_zero(ctx: &mut Ctx) -> Result<Check> {
    let lam = multi_degree(ctx);
    let m = lam.arity();
    let (a, b) = disjoint_pair(ctx, m);
    ctx.note("a", product_string(&a));
    ctx.note("b", product_string(&b));
    let z0 = b.sample_with(&mut ctx.rng)?;
    let k = ctx.rng.gen_range(0..m);
    let rest = gen_stable(&mut ctx.rng, &lam.lower(k)?, &b)?;
    let q = linear_factor(k, m, &z0.0[k]).mul(&rest)?;
    ctx.note_poly("q", &q);
    ctx.note_point("zero", &z0);
    ensure!(q.degree() == &lam, "planted polynomial has the wrong degree");
    ensure!(avoids(&z0, &a), "planted zero lies in A");
    let e = evaluation_symbol(&z0, &lam)?;
    ensure!(apolarity_form(&e, &q)?.is_zero(), "evaluation symbol at a zero of q pairs nonzero");
    Ok(Check::Pass)
}

fn ev_rooted_q(ctx: &mut Ctx) -> Result<Check> {
    let c = random_convex_region(&mut ctx.rng);
    let b = c.complement();
    let n = ctx.rng.gen_range(1..=8);
    let mut q = BiHomPoly::constant(1, nonzero_gauss(&mut ctx.rng));
    let mut bad = None;
    for _ in 0..n {
        let from_b = ctx.rng.gen_ratio(1, 4);
        let z = if from_b { b.sample_with(&mut ctx.rng)? } else { c.sample_with(&mut ctx.rng)? };
        if from_b {
            bad = Some(z.clone());
        }
        q = q.mul(&linear_factor(0, 1, &z))?;
    }
    ctx.note("c", c.to_string());
    ctx.note_poly("q", &q);
    let v = univariate_stable(&q, &b, ctx.cfg.precision)?;
    match (&bad, v.status) {
        (_, Status::Indeterminate) => return Ok(Check::Indeterminate("univariate verdict undecided".into())),
        (Some(_), s) => ensure!(s == Status::Unstable, "q has a root in B but the verdict is {}", s.as_str()),
        (None, s) => ensure!(s == Status::Stable, "q avoids B but the verdict is {}", s.as_str()),
    }
    let lam = DegreeVec::univariate(n);
    if let Some(z) = bad {
        let e = evaluation_symbol(&ProjPoint(vec![z]), &lam)?;
        ensure!(apolarity_form(&e, &q)?.is_zero(), "evaluation symbol at a root in B pairs nonzero");
    } else {
        for _ in 0..3 {
            let beta = ProjPoint(vec![b.sample_with(&mut ctx.rng)?]);
            ensure!(!apolarity_form(&evaluation_symbol(&beta, &lam)?, &q)?.is_zero(), "evaluation symbol pairs to zero");
            let p = gen_rooted_with(&mut ctx.rng, n, &b)?;
            ensure!(!apolarity_form(&p, &q)?.is_zero(), "C-stable p pairs to zero");
        }
    }
    Ok(Check::Pass)
}

// ---------------------------------------------------------------- symbol-lemma

fn small_degrees(ctx: &mut Ctx) -> (DegreeVec, DegreeVec) {
    let m = ctx.rng.gen_range(1..=2);
    let l = ctx.rng.gen_range(1..=2);
    (random_degree(&mut ctx.rng, m, 4), random_degree(&mut ctx.rng, l, 4))
}

fn symbol_lemma(ctx: &mut Ctx) -> Result<Check> {
    let (lam, alpha) = small_degrees(ctx);
    let t = random_operator(&mut ctx.rng, &lam, &alpha)?;
    let q = random_poly(&mut ctx.rng, &lam);
    let r = random_poly(&mut ctx.rng, &alpha);
    ctx.note_op("t", &t);
    ctx.note_poly("q", &q);
    ctx.note_poly("r", &r);
    let lhs = symbol_lemma_contract(&symbol(&t), &q, &r)?;
    let rhs = TensorPoly::from_pair(&t.apply(&q)?, &r);
    ensure!(lhs.poly == rhs.poly.scale(&lam_fact_sq(&lam)), "symbol lemma identity fails");
    Ok(Check::Pass)
}

fn evaluation_symbol_lemma(ctx: &mut Ctx) -> Result<Check> {
    let m = ctx.rng.gen_range(1..=3);
    let lam = random_degree(&mut ctx.rng, m, 6);
    let p = random_poly(&mut ctx.rng, &lam);
    let z = random_proj_point(&mut ctx.rng, m);
    ctx.note_poly("p", &p);
    ctx.note_point("z", &z);
    let d = contract(&evaluation_symbol(&z, &lam)?, &p, m)?;
    ensure!(d.degree().total() == 0, "contraction left free variables");
    ensure!(d.coeff(&[]) == &lam_fact_sq(&lam) * &p.evaluate(&z)?, "evaluation symbol lemma fails");
    Ok(Check::Pass)
}

fn d_conjugation(ctx: &mut Ctx) -> Result<Check> {
    let m = ctx.rng.gen_range(1..=2);
    let a = random_degree(&mut ctx.rng, m, 4);
    let b = random_degree(&mut ctx.rng, m, 4);
    let p = random_poly(&mut ctx.rng, &a);
    let q = random_poly(&mut ctx.rng, &b);
    let phi = random_moebius(&mut ctx.rng);
    let k = ctx.rng.gen_range(0..m);
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    ctx.note_map("phi", &phi);
    ctx.note("pair", k);
    let all = MoebiusTuple(vec![phi.clone(); 2 * m]);
    let t = TensorPoly::from_pair(&p, &q);
    let moved = TensorPoly::new(act_poly(&all, &t.poly)?, m)?;
    let lhs = d_map(&moved, k)?.poly;
    let rhs = act_poly(&all, &d_map(&t, k)?.poly)?.scale(&phi.det());
    ensure!(lhs == rhs, "D does not intertwine the action up to det (unimodular: {})", phi.is_unimodular());
    Ok(Check::Pass)
}

fn symbol_round_trip(ctx: &mut Ctx) -> Result<Check> {
    let (lam, alpha) = small_degrees(ctx);
    let t = random_operator(&mut ctx.rng, &lam, &alpha)?;
    ctx.note_op("t", &t);
    let s = symbol(&t);
    ensure!(operator_from_symbol(&s, &lam, &alpha)? == t, "operator_from_symbol(symbol(T)) != T");
    let s2 = random_poly(&mut ctx.rng, &lam.concat(&alpha));
    ensure!(symbol(&operator_from_symbol(&s2, &lam, &alpha)?) == s2, "symbol(operator_from_symbol(s)) != s");
    Ok(Check::Pass)
}

// ---------------------------------------------------------------- laguerre

fn laguerre_univariate(ctx: &mut Ctx) -> Result<Check> {
    let c = random_convex_region(&mut ctx.rng);
    let n = ctx.rng.gen_range(1..=8);
    let p = gen_rooted_with(&mut ctx.rng, n, &c.complement())?;
    let zeta = c.sample_with(&mut ctx.rng)?;
    let phi = MoebiusMap::with_pole(&zeta);
    ctx.note("c", c.to_string());
    ctx.note_poly("p", &p);
    ctx.note_map("phi", &phi);
    ensure!(phi.pole().proj_eq(&zeta), "with_pole has the wrong pole");
    let dp = polar_derivative(&phi, &p, 0)?;
    ensure!(!dp.is_zero(), "polar derivative vanishes");
    univariate_check(&dp, &c, ctx.cfg.precision, "polar derivative")
}

fn laguerre_multivariate(ctx: &mut Ctx) -> Result<Check> {
    let m = ctx.rng.gen_range(2..=3);
    let lam = random_degree(&mut ctx.rng, m, 6);
    let regions = RegionProduct((0..m).map(|_| random_convex_region(&mut ctx.rng)).collect());
    let p = gen_stable(&mut ctx.rng, &lam, &regions)?;
    let k = ctx.rng.gen_range(0..m);
    let zeta = regions.0[k].sample_with(&mut ctx.rng)?;
    let phi = MoebiusMap::with_pole(&zeta);
    ctx.note("regions", product_string(&regions));
    ctx.note_poly("p", &p);
    ctx.note_map("phi", &phi);
    ctx.note("variable", k);
    let dp = polar_derivative(&phi, &p, k)?;
    ensure!(!dp.is_zero(), "polar derivative vanishes");
    stability_check(ctx, &dp, &regions, "polar derivative")
}

// ---------------------------------------------------------------- hermite-biehler

fn random_pair_coeffs(ctx: &mut Ctx) -> (GaussRat, GaussRat) {
    (GaussRat::real(small_rat(&mut ctx.rng, 8, 4)), GaussRat::real(small_rat(&mut ctx.rng, 8, 4)))
}

/// Values `c` near critical points of `q/p`, where `c·p − q` is most likely
/// to lose real-rootedness.
fn critical_values(p: &BiHomPoly, q: &BiHomPoly) -> Vec<Rat> {
    let f = real_part(&dehomogenize(p));
    let g = real_part(&dehomogenize(q));
    let w = g.derivative().mul(&f).sub(&g.mul(&f.derivative()));
    if w.is_zero() {
        return Vec::new();
    }
    let s = w.squarefree_part();
    let width = Rat::new(BigInt::one(), BigInt::one() << 40);
    let mut out = Vec::new();
    for r in isolate_real_roots(&s) {
        let t = refine_root(&s, &r, &width).midpoint();
        let ft = f.eval(&t);
        if ft.is_zero() {
            continue;
        }
        let c0 = g.eval(&t) / ft;
        for k in [3usize, 8, 16, 30] {
            let h = Rat::new(BigInt::one(), BigInt::one() << k);
            out.push(&c0 + &h);
            out.push(&c0 - &h);
        }
    }
    out
}

/// A real combination of `p` and `q` that is not real-rooted.
fn non_real_rooted_combination(ctx: &mut Ctx, p: &BiHomPoly, q: &BiHomPoly, tries: usize) -> Result<Option<String>> {
    for c in critical_values(p, q) {
        let h = p.scale(&GaussRat::real(c.clone())).sub(q)?;
        if !h.is_zero() && !real_rooted(&h)? {
            return Ok(Some(format!("{c}·p − q")));
        }
    }
    for _ in 0..tries {
        let (a, b) = random_pair_coeffs(ctx);
        let h = p.scale(&a).add(&q.scale(&b))?;
        if !h.is_zero() && !real_rooted(&h)? {
            return Ok(Some(format!("{a}·p + {b}·q")));
        }
    }
    Ok(None)
}

/// Monic `p ≪ q` of degree `n` with interleaved rational roots.
fn interlacing_pair(ctx: &mut Ctx, n: u32) -> (BiHomPoly, BiHomPoly) {
    let mut v: Vec<Rat> = (0..2 * n).map(|_| small_rat(&mut ctx.rng, 12, 3)).collect();
    v.sort();
    let mut p = BiHomPoly::one(1);
    let mut q = BiHomPoly::one(1);
    for i in 0..n as usize {
        p = p.mul(&linear_factor(0, 1, &P1::real(v[2 * i].clone()))).expect("univariate");
        q = q.mul(&linear_factor(0, 1, &P1::real(v[2 * i + 1].clone()))).expect("univariate");
    }
    (p, q)
}

fn hb_interlacing_pair(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=8);
    let (p, q) = interlacing_pair(ctx, n);
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    ensure!(interlace(&p, &q)?, "constructed pair does not interlace");
    let opts = ctx.opts();
    ensure!(proper_position(&p, &q, &opts)?.status == Status::Stable, "p ≪ q not detected");
    if let Some(h) = non_real_rooted_combination(ctx, &p, &q, 100)? {
        return Ok(Check::Fail(format!("{h} is not real-rooted for an interlacing pair")));
    }
    Ok(Check::Pass)
}

fn hb_random_pair(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=8);
    let p = gen_real_rooted_monic(&mut ctx.rng, n);
    let q = gen_real_rooted_monic(&mut ctx.rng, n);
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    let opts = ctx.opts();
    let pq = proper_position(&p, &q, &opts)?.status;
    let qp = proper_position(&q, &p, &opts)?.status;
    ensure!(interlace(&p, &q)? == (pq == Status::Stable), "interlacing and proper position disagree");
    ensure!(interlace(&q, &p)? == (qp == Status::Stable), "interlacing and proper position disagree (swapped)");
    let found = non_real_rooted_combination(ctx, &p, &q, 100)?;
    match (pq == Status::Stable || qp == Status::Stable, found) {
        (true, Some(h)) => Ok(Check::Fail(format!("{h} is not real-rooted for a pair in proper position"))),
        (true, None) | (false, Some(_)) => Ok(Check::Pass),
        (false, None) => Ok(Check::Indeterminate("no non-real-rooted combination found".into())),
    }
}

fn hb_total_order(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=6);
    let (p, q) = interlacing_pair(ctx, n);
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    let combos: Vec<BiHomPoly> = (0..4)
        .map(|_| {
            let t = Rat::new(ctx.rng.gen_range(-16i64..=24).into(), 8.into());
            let one_minus = Rat::one() - &t;
            p.scale(&GaussRat::real(t)).add(&q.scale(&GaussRat::real(one_minus))).expect("same degree")
        })
        .collect();
    let opts = ctx.opts();
    for f in &combos {
        ensure!(real_rooted(f)?, "monic combination is not real-rooted");
    }
    for (i, f) in combos.iter().enumerate() {
        for g in &combos[i + 1..] {
            let fg = interlace(f, g)?;
            let gf = interlace(g, f)?;
            ensure!(fg || gf, "combinations are not comparable");
            if fg {
                ensure!(roots_below(f, g)?, "f ≪ g without root ordering");
            }
            if gf {
                ensure!(roots_below(g, f)?, "g ≪ f without root ordering");
            }
            ensure!((proper_position(f, g, &opts)?.status == Status::Stable) == fg, "proper position disagrees");
        }
    }
    Ok(Check::Pass)
}

// ---------------------------------------------------------------- gws

fn gws_univariate(ctx: &mut Ctx) -> Result<Check> {
    let c = random_convex_region(&mut ctx.rng);
    let n = ctx.rng.gen_range(1..=6);
    let p = gen_rooted_with(&mut ctx.rng, n, &c.complement())?;
    ctx.note("c", c.to_string());
    ctx.note_poly("p", &p);
    let big = polarize(&p);
    stability_check(ctx, &big, &RegionProduct::power(&c, n as usize), "polarization")
}

fn gws_circular(ctx: &mut Ctx) -> Result<Check> {
    let m = ctx.rng.gen_range(2..=3);
    let lam = random_degree(&mut ctx.rng, m, 6);
    let closed_first = ctx.rng.gen_bool(0.5);
    let (c, _) = circular_pairs(ctx, m, closed_first);
    let p = gen_stable(&mut ctx.rng, &lam, &c)?;
    ctx.note("c", product_string(&c));
    ctx.note_poly("p", &p);
    let repeated = RegionProduct(c.0.iter().zip(&lam.0).flat_map(|(r, &n)| std::iter::repeat_n(r.clone(), n as usize)).collect());
    stability_check(ctx, &polarize(&p), &repeated, "polarization")
}

/// Degrees on which the form constant is checked.
pub(crate) fn form_constant_degrees() -> [DegreeVec; 4] {
    [DegreeVec::univariate(2), DegreeVec::univariate(3), DegreeVec::new(vec![1, 2]), DegreeVec::new(vec![2, 2])]
}

fn gws_form_constant(ctx: &mut Ctx) -> Result<Check> {
    for lam in form_constant_degrees() {
        let c = GaussRat::real(form_constant(&lam));
        for _ in 0..2 {
            let p = random_poly(&mut ctx.rng, &lam);
            let q = random_poly(&mut ctx.rng, &lam);
            ensure!(project(&polarize(&p), &lam)? == p, "projection does not invert polarization on {lam}");
            let lhs = apolarity_form(&polarize(&p), &polarize(&q))?;
            ensure!(lhs == &c * &apolarity_form(&p, &q)?, "form constant inconsistent on {lam}");
        }
    }
    Ok(Check::Pass)
}

fn gws_polarized_evaluation(ctx: &mut Ctx) -> Result<Check> {
    let m = ctx.rng.gen_range(1..=2);
    let lam = random_degree(&mut ctx.rng, m, 4);
    let p = random_poly(&mut ctx.rng, &lam);
    let pts = random_proj_point(&mut ctx.rng, lam.total() as usize);
    ctx.note_poly("p", &p);
    ctx.note_point("points", &pts);
    ensure!(polarized_evaluation(&p, &pts)? == polarize(&p).evaluate(&pts)?, "polarized evaluation paths disagree");
    let z = random_proj_point(&mut ctx.rng, m);
    let diag = ProjPoint(z.0.iter().zip(&lam.0).flat_map(|(w, &n)| std::iter::repeat_n(w.clone(), n as usize)).collect());
    ensure!(polarize(&p).evaluate(&diag)? == p.evaluate(&z)?, "diagonal evaluation differs from p");
    Ok(Check::Pass)
}

fn gws_operator_round_trip(ctx: &mut Ctx) -> Result<Check> {
    let lam = DegreeVec::univariate(ctx.rng.gen_range(1..=3));
    let alpha = DegreeVec::univariate(ctx.rng.gen_range(1..=3));
    let t = random_operator(&mut ctx.rng, &lam, &alpha)?;
    ctx.note_op("t", &t);
    let lhs = symbol(&polarize_operator(&t)?);
    let rhs = polarized_symbol(&t);
    match proportional(&lhs, &rhs) {
        Some(c) if !c.is_zero() || lhs.is_zero() => Ok(Check::Pass),
        _ => Ok(Check::Fail("symbol of the polarized operator is not the polarized symbol".into())),
    }
}

// ---------------------------------------------------------------- cops

/// `−n·w·(zy − xw)^{n−1}` in `V(n) ⊗ V(n−1)`, variables `(z:w), (x:y)`.
pub(crate) fn derivative_symbol_closed_form(n: u32) -> BiHomPoly {
    let w = BiHomPoly::monomial(DegreeVec::new(vec![1, 0]), vec![0, 0], GaussRat::one()).expect("in range");
    let zy_xw = BiHomPoly::from_terms(DegreeVec::new(vec![1, 1]), [(vec![1, 0], GaussRat::one()), (vec![0, 1], -GaussRat::one())])
        .expect("in range");
    w.mul(&zy_xw.pow(n - 1)).expect("same arity").scale(&GaussRat::int(-(n as i64)))
}

pub(crate) fn derivative_operator(n: u32) -> Result<LinearOp> {
    LinearOp::from_fn(DegreeVec::univariate(n), DegreeVec::univariate(n - 1), |p| p.partial(0, Var::X))
}

fn cops_derivative_symbol(ctx: &mut Ctx) -> Result<Check> {
    for n in 1..=6 {
        ctx.note("n_max", n);
        ensure!(symbol(&derivative_operator(n)?) == derivative_symbol_closed_form(n), "Symb(∂x) differs from the closed form at n = {n}");
    }
    Ok(Check::Pass)
}

fn cops_symbol_to_operator(ctx: &mut Ctx) -> Result<Check> {
    let m = ctx.rng.gen_range(1..=2);
    let l = ctx.rng.gen_range(1..=2);
    let lam = random_degree(&mut ctx.rng, m, 4);
    let alpha = random_degree(&mut ctx.rng, l, 4);
    let (a, b) = disjoint_pair(ctx, m);
    let s_out = RegionProduct((0..l).map(|_| random_convex_region(&mut ctx.rng)).collect());
    let mut both = b.0.clone();
    both.extend(s_out.0.iter().cloned());
    let s = gen_stable(&mut ctx.rng, &lam.concat(&alpha), &RegionProduct(both))?;
    let t = operator_from_symbol(&s, &lam, &alpha)?;
    let p = gen_stable(&mut ctx.rng, &lam, &a)?;
    ctx.note("a", product_string(&a));
    ctx.note("b", product_string(&b));
    ctx.note("s", product_string(&s_out));
    ctx.note_poly("symbol", &s);
    ctx.note_poly("p", &p);
    let out = t.apply(&p)?;
    ensure!(!out.is_zero(), "T(p) is zero");
    let first = stability_check(ctx, &out, &s_out, "T(p)")?;
    if first.is_fail() {
        return Ok(first);
    }
    let beta = b.sample_with(&mut ctx.rng)?;
    let ev = t.apply(&evaluation_symbol(&beta, &lam)?)?;
    ensure!(!ev.is_zero(), "T maps an A-stable evaluation symbol to zero");
    Ok(first.and(stability_check(ctx, &ev, &s_out, "T(evaluation symbol)")?))
}

fn cops_operator_witness(ctx: &mut Ctx) -> Result<Check> {
    let lam = DegreeVec::univariate(ctx.rng.gen_range(1..=3));
    let alpha = DegreeVec::univariate(ctx.rng.gen_range(1..=3));
    let (a, b) = disjoint_pair(ctx, 1);
    let s_out = random_convex_region(&mut ctx.rng);
    let t = random_operator(&mut ctx.rng, &lam, &alpha)?;
    ctx.note("a", product_string(&a));
    ctx.note("s", s_out.to_string());
    ctx.note_op("t", &t);
    let s = symbol(&t);
    let sign = sign_pow(lam.total());
    for _ in 0..8 {
        let beta = b.sample_with(&mut ctx.rng)?;
        let out = t.apply(&evaluation_symbol(&beta, &lam)?)?;
        let violated = out.is_zero() || univariate_stable(&out, &s_out, ctx.cfg.precision)?.status == Status::Unstable;
        if !violated {
            continue;
        }
        // The symbol's section over β is ±T(evaluation symbol), so the violating
        // root of T's output is a zero of Symb(T) in B × S.
        let section = contract(&evaluation_symbol(&beta, &lam)?, &s, 1)?;
        ensure!(section == out.scale(&(&lam_fact_sq(&lam) * &sign)), "symbol section differs from T(evaluation symbol)");
        ctx.note_point("symbol_witness_input", &beta);
        return Ok(Check::Pass);
    }
    Ok(Check::Pass)
}

/// `q` with `n` nonzero rational roots, and the roots.
fn rooted_with_nonzero_roots(ctx: &mut Ctx, n: u32) -> (BiHomPoly, Vec<GaussRat>) {
    let roots: Vec<GaussRat> = (0..n).map(|_| nonzero_gauss(&mut ctx.rng)).collect();
    let mut q = BiHomPoly::one(1);
    for z in &roots {
        q = q.mul(&linear_factor(0, 1, &P1::finite(z.clone()))).expect("univariate");
    }
    (q, roots)
}

fn cops_convolution_symbols(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=4);
    let (q, roots) = rooted_with_nonzero_roots(ctx, n);
    ctx.note_poly("q", &q);
    let deg = DegreeVec::univariate(n);
    let pair = DegreeVec::new(vec![1, 1]);
    let add = LinearOp::from_fn(deg.clone(), deg.clone(), |p| additive_convolution(p, &q))?;
    let mul = LinearOp::from_fn(deg.clone(), deg, |p| multiplicative_convolution(p, &q))?;
    let mut add_expect = BiHomPoly::one(2);
    let mut mul_expect = BiHomPoly::one(2);
    for z in &roots {
        // xw − (z + z_j w)y and xw − z_j·z·y, exponents listed as [z, x]
        let af = BiHomPoly::from_terms(pair.clone(), [(vec![0, 1], GaussRat::one()), (vec![1, 0], -GaussRat::one()), (vec![0, 0], -z)])?;
        let mf = BiHomPoly::from_terms(pair.clone(), [(vec![0, 1], GaussRat::one()), (vec![1, 0], -z)])?;
        add_expect = add_expect.mul(&af)?;
        mul_expect = mul_expect.mul(&mf)?;
    }
    ensure!(proportional(&symbol(&add), &add_expect).is_some_and(|c| !c.is_zero()), "additive convolution symbol does not factor");
    ensure!(proportional(&symbol(&mul), &mul_expect).is_some_and(|c| !c.is_zero()), "multiplicative convolution symbol does not factor");
    Ok(Check::Pass)
}

/// Enclosure bits for the root sandwiches: width `2^-34 < 10^-9`.
pub(crate) const SANDWICH_BITS: u32 = 34;

fn cops_additive_sandwich(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=6);
    let p = gen_real_rooted_monic(&mut ctx.rng, n);
    let q = gen_real_rooted_monic(&mut ctx.rng, n);
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    let r = additive_convolution(&p, &q)?;
    ensure!(r.is_top_degree_monic(), "additive convolution of monic inputs is not monic");
    ensure!(real_rooted(&r)?, "additive convolution is not real-rooted");
    let (mp, mq, mr) = (minmax_root(&p, SANDWICH_BITS)?, minmax_root(&q, SANDWICH_BITS)?, minmax_root(&r, SANDWICH_BITS)?);
    let lo = |x: &crate::stability::MinMaxRoots| x.min.clone().expect("degree ≥ 1");
    let hi = |x: &crate::stability::MinMaxRoots| x.max.clone().expect("degree ≥ 1");
    ensure!(lo(&mr).hi >= &lo(&mp).lo + &lo(&mq).lo, "minroot(p ⊞ q) below minroot(p) + minroot(q)");
    ensure!(hi(&mr).lo <= &hi(&mp).hi + &hi(&mq).hi, "maxroot(p ⊞ q) above maxroot(p) + maxroot(q)");
    Ok(Check::Pass)
}

fn cops_multiplicative_sandwich(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=6);
    let p = gen_positive_rooted_monic(&mut ctx.rng, n);
    let q = gen_positive_rooted_monic(&mut ctx.rng, n);
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    let r = multiplicative_convolution(&p, &q)?.scale(&sign_pow(n));
    ensure!(r.is_top_degree_monic(), "normalized multiplicative convolution is not monic");
    ensure!(real_rooted(&r)?, "multiplicative convolution is not real-rooted");
    let (mp, mq, mr) = (minmax_root(&p, SANDWICH_BITS)?, minmax_root(&q, SANDWICH_BITS)?, minmax_root(&r, SANDWICH_BITS)?);
    let lo = |x: &crate::stability::MinMaxRoots| x.min.clone().expect("degree ≥ 1");
    let hi = |x: &crate::stability::MinMaxRoots| x.max.clone().expect("degree ≥ 1");
    ensure!(lo(&mr).hi.is_positive(), "multiplicative convolution has a nonpositive root");
    ensure!(lo(&mr).hi >= &lo(&mp).lo * &lo(&mq).lo, "minroot(p ⊠ q) below minroot(p)·minroot(q)");
    ensure!(hi(&mr).lo <= &hi(&mp).hi * &hi(&mq).hi, "maxroot(p ⊠ q) above maxroot(p)·maxroot(q)");
    Ok(Check::Pass)
}

fn cops_convolution_algebra(ctx: &mut Ctx) -> Result<Check> {
    let deg = DegreeVec::univariate(ctx.rng.gen_range(1..=6));
    let (p, q, r) = (random_poly(&mut ctx.rng, &deg), random_poly(&mut ctx.rng, &deg), random_poly(&mut ctx.rng, &deg));
    let (a, b) = (small_gauss(&mut ctx.rng), small_gauss(&mut ctx.rng));
    ctx.note_poly("p", &p);
    ctx.note_poly("q", &q);
    ctx.note_poly("r", &r);
    type Conv = fn(&BiHomPoly, &BiHomPoly) -> Result<BiHomPoly>;
    for (name, f) in [("additive", additive_convolution as Conv), ("multiplicative", multiplicative_convolution as Conv)] {
        ensure!(f(&p, &q)? == f(&q, &p)?, "{name} convolution is not symmetric");
        let combo = p.scale(&a).add(&r.scale(&b))?;
        let lin = f(&p, &q)?.scale(&a).add(&f(&r, &q)?.scale(&b))?;
        ensure!(f(&combo, &q)? == lin, "{name} convolution is not linear");
    }
    Ok(Check::Pass)
}

// ---------------------------------------------------------------- rops

fn is_real_op(t: &LinearOp) -> bool {
    t.data().iter().all(GaussRat::is_real)
}

fn rops_case(ctx: &mut Ctx, m: usize, l: usize) -> Result<Check> {
    let lam = random_degree(&mut ctx.rng, m, 3);
    let (s, alpha) = gen_real_symbol(&mut ctx.rng, &lam, l, 4);
    let t = operator_from_symbol(&s, &lam, &alpha)?;
    let p = gen_real_stable(&mut ctx.rng, &lam);
    ctx.note_poly("symbol", &s);
    ctx.note_poly("p", &p);
    ensure!(is_real_op(&t), "operator from a real symbol is not real");
    let out = t.apply(&p)?;
    ensure!(!out.is_zero(), "T(p) is zero");
    ensure!(out.is_real(), "T(p) is not real");
    if l == 1 {
        ensure!(real_rooted(&out)?, "T(p) is not real-rooted");
        return Ok(Check::Pass);
    }
    stability_check(ctx, &out, &RegionProduct::power(&Region::upper(), l), "T(p)")
}

fn rops_univariate(ctx: &mut Ctx) -> Result<Check> {
    rops_case(ctx, 1, 1)
}

fn rops_multivariate(ctx: &mut Ctx) -> Result<Check> {
    let (m, l) = *[(1, 2), (2, 1), (2, 2)].choose(&mut ctx.rng).expect("nonempty");
    rops_case(ctx, m, l)
}

// ---------------------------------------------------------------- jops

/// `T₂: x^k y^{2−k} ↦ Hmg₂[x(x−1)⋯(x−k+1)]`.
pub(crate) fn falling_factorial_operator() -> Result<LinearOp> {
    let cols = [[1, 0, 0], [0, 1, 0], [0, -1, 1]];
    let data = cols.iter().flatten().map(|&c| GaussRat::int(c)).collect();
    LinearOp::from_columns(DegreeVec::univariate(2), DegreeVec::univariate(2), data)
}

/// `(xw − zy)² − x·y·w²`, the homogenized `(x − z)² − x`.
pub(crate) fn falling_factorial_symbol() -> BiHomPoly {
    let d = DegreeVec::new(vec![1, 1]);
    let xw_zy = BiHomPoly::from_terms(d, [(vec![0, 1], GaussRat::one()), (vec![1, 0], -GaussRat::one())]).expect("in range");
    let xyw2 = BiHomPoly::monomial(DegreeVec::new(vec![2, 2]), vec![0, 1], GaussRat::one()).expect("in range");
    xw_zy.pow(2).sub(&xyw2).expect("same degree")
}

fn jops_fisk(ctx: &mut Ctx) -> Result<Check> {
    let t = falling_factorial_operator()?;
    ctx.note_op("t", &t);
    let input = BiHomPoly::univariate_ints(&[1, 2, 1]);
    let out = t.apply(&input)?;
    ensure!(out == BiHomPoly::univariate_ints(&[1, 1, 1]), "T₂(x²+2xy+y²) differs");
    ensure!(!real_rooted(&out)?, "T₂(x²+2xy+y²) is real-rooted");
    let s = symbol(&t);
    ensure!(s == falling_factorial_symbol(), "Symb(T₂) differs from the closed form");
    let x = ProjPoint(vec![P1::real(-Rat::one())]);
    let section = s.section(0, &ProjPoint(vec![P1::real(Rat::zero()), x.0[0].clone()]))?;
    ensure!(!real_rooted(&section)?, "section at x = −1 is real-rooted");
    let z = P1::finite(GaussRat::ints(-1, -1));
    ensure!(s.evaluate(&ProjPoint(vec![z.clone(), x.0[0].clone()]))?.is_zero(), "no zero at (−1−i, −1)");
    let positive = Arc::open(Endpoint::Finite(Rat::zero()), Endpoint::Infinity);
    let rest = Arc::closed(Endpoint::Infinity, Endpoint::Finite(Rat::zero()));
    let input_region = Region::upper().with_arc(rest.clone())?.complement();
    let upper_minus = Region::upper().with_arc(rest)?;
    let lower_minus = Region::upper().with_arc(positive)?.complement();
    ensure!(input_region.contains(&z), "witness input outside H₋ ∪ (0,∞)");
    ensure!(upper_minus.contains(&x.0[0]) && lower_minus.contains(&x.0[0]), "witness output outside both regions");
    Ok(Check::Pass)
}

/// `g ↦ y·∂_x g − α·g` on `V(n)`.
fn shifted_derivative(alpha: &Rat, g: &BiHomPoly) -> Result<BiHomPoly> {
    let y = BiHomPoly::univariate_ints(&[1, 0]);
    y.mul(&g.partial(0, Var::X)?)?.sub(&g.scale(&GaussRat::real(alpha.clone())))
}

/// `−(α(zy − xw) + n·w·y)(zy − xw)^{n−1}`.
fn shifted_derivative_symbol(alpha: &Rat, n: u32) -> BiHomPoly {
    let d = DegreeVec::new(vec![1, 1]);
    let zy_xw = BiHomPoly::from_terms(d.clone(), [(vec![1, 0], GaussRat::one()), (vec![0, 1], -GaussRat::one())]).expect("in range");
    let wy = BiHomPoly::monomial(d, vec![0, 0], GaussRat::int(n as i64)).expect("in range");
    let head = zy_xw.scale(&GaussRat::real(alpha.clone())).add(&wy).expect("same degree");
    head.mul(&zy_xw.pow(n - 1)).expect("same arity").neg()
}

fn jops_window_exact(ctx: &mut Ctx) -> Result<Check> {
    let g = BiHomPoly::univariate_ints(&[4, -4, 1]);
    ctx.note_poly("g", &g);
    let out = shifted_derivative(&Rat::one(), &g)?;
    let expect = BiHomPoly::univariate_ints(&[-2, 1]).mul(&BiHomPoly::univariate_ints(&[4, -1]))?;
    ensure!(out == expect, "(y∂x − 1)(x − 2y)² differs from (x − 2y)(4y − x)");
    for r in [2, 4] {
        ensure!(out.evaluate(&ProjPoint(vec![P1::real(int(r))]))?.is_zero(), "{r} is not a root");
    }
    // window [b + 0, c + n/α] with b = c = 2, n = 2, α = 1
    let window = Arc::closed(Endpoint::Finite(int(2)), Endpoint::Finite(int(2) + int(2)));
    ensure!(roots_in_boundary_set(&out, &window)?, "roots escape the window");
    Ok(Check::Pass)
}

fn jops_window(ctx: &mut Ctx) -> Result<Check> {
    let n = ctx.rng.gen_range(1..=6);
    let b = small_rat(&mut ctx.rng, 4, 2);
    let c = &b + positive_rat(&mut ctx.rng, 6, 2);
    let g = gen_interval_rooted(&mut ctx.rng, n, &Arc::closed(Endpoint::Finite(b.clone()), Endpoint::Finite(c.clone())))?;
    let alphas: Vec<Rat> = (0..ctx.rng.gen_range(1..=3)).map(|_| nonzero_real(&mut ctx.rng)).collect();
    ctx.note_poly("g", &g);
    ctx.note("alphas", alphas.iter().map(crate::scalar::format_rat).collect::<Vec<_>>());
    let n_rat = int(n as i64);
    let (mut lo, mut hi) = (b, c);
    let mut out = g;
    for a in &alphas {
        out = shifted_derivative(a, &out)?;
        if a.is_negative() {
            lo += &n_rat / a;
        } else {
            hi += &n_rat / a;
        }
    }
    let a0 = alphas[0].clone();
    let deg = DegreeVec::univariate(n);
    let op = LinearOp::from_fn(deg.clone(), deg, |p| shifted_derivative(&a0, p))?;
    ensure!(symbol(&op) == shifted_derivative_symbol(&a0, n), "Symb(y∂x − α) differs from the closed form");
    ensure!(!out.is_zero(), "f(∂x)g vanishes");
    ensure!(roots_in_boundary_set(&out, &Arc::closed(Endpoint::Finite(lo), Endpoint::Finite(hi)))?, "roots escape the window");
    Ok(Check::Pass)
}

/// `J` with random closedness and the inner window `[u0, u1]`.
fn output_interval(ctx: &mut Ctx) -> (Arc, Rat, Rat) {
    let j0 = small_rat(&mut ctx.rng, 5, 2);
    let width = positive_rat(&mut ctx.rng, 6, 2);
    let j1 = &j0 + &width;
    let quarter = &width / int(4);
    let (u0, u1) = (&j0 + &quarter, &j1 - &quarter);
    let j = Arc { start: Endpoint::Finite(j0), end: Endpoint::Finite(j1), start_closed: ctx.rng.gen_bool(0.5), end_closed: ctx.rng.gen_bool(0.5) };
    (j, u0, u1)
}

fn weakly_real_rooted(p: &BiHomPoly) -> Result<bool> {
    Ok(p.is_zero() || real_rooted(p)?)
}

fn jops_interval_symbol(ctx: &mut Ctx) -> Result<Check> {
    let i = random_real_interval(&mut ctx.rng);
    let (j, u0, u1) = output_interval(ctx);
    let n = ctx.rng.gen_range(1..=4);
    let k = ctx.rng.gen_range(1..=5);
    let s = gen_interval_symbol(&mut ctx.rng, n, k, &i, &u0, &u1);
    let t = operator_from_symbol(&s, &DegreeVec::univariate(n), &DegreeVec::univariate(k))?;
    let p = gen_interval_rooted(&mut ctx.rng, n, &i)?;
    ctx.note("i", i.to_string());
    ctx.note("j", j.to_string());
    ctx.note_poly("symbol", &s);
    ctx.note_poly("p", &p);
    ensure!(is_real_op(&t), "operator from a real symbol is not real");
    let out = t.apply(&p)?;
    ensure!(!out.is_zero(), "T(p) is zero");
    ensure!(roots_in_boundary_set(&out, &j)?, "T(p) is not J-rooted");
    let r = gen_real_rooted(&mut ctx.rng, n);
    ctx.note_poly("real_rooted_input", &r);
    ensure!(weakly_real_rooted(&t.apply(&r)?)?, "T does not preserve weak real-rootedness");
    Ok(Check::Pass)
}

/// Two points outside `closure(I)` on the same finite side.
fn same_side_points(ctx: &mut Ctx, i: &Arc) -> (Rat, Rat) {
    let gap = |ctx: &mut Ctx| positive_rat(&mut ctx.rng, 6, 2);
    let below = |ctx: &mut Ctx, e: &Rat| (e - gap(ctx), e - gap(ctx));
    let above = |ctx: &mut Ctx, s: &Rat| (s + gap(ctx), s + gap(ctx));
    match (&i.start, &i.end) {
        (Endpoint::Finite(s), Endpoint::Infinity) => below(ctx, s),
        (Endpoint::Infinity, Endpoint::Finite(e)) => above(ctx, e),
        (Endpoint::Finite(s), Endpoint::Finite(e)) => {
            if ctx.rng.gen_bool(0.5) {
                below(ctx, s)
            } else {
                above(ctx, e)
            }
        }
        (Endpoint::Infinity, Endpoint::Infinity) => unreachable!("I has distinct endpoints"),
    }
}

fn jops_degenerate(ctx: &mut Ctx) -> Result<Check> {
    let i = random_real_interval(&mut ctx.rng);
    let (j, u0, u1) = output_interval(ctx);
    let n = ctx.rng.gen_range(1..=4);
    let k = ctx.rng.gen_range(1..=4);
    // q ≪ r, both monic with interleaved roots in [u0, u1]
    let width = &u1 - &u0;
    let mut v: Vec<Rat> = (0..2 * k).map(|_| &u0 + &width * Rat::new(ctx.rng.gen_range(0..=16).into(), 16.into())).collect();
    v.sort();
    let mut q = BiHomPoly::one(1);
    let mut r = BiHomPoly::one(1);
    for idx in 0..k as usize {
        q = q.mul(&linear_factor(0, 1, &P1::real(v[2 * idx].clone())))?;
        r = r.mul(&linear_factor(0, 1, &P1::real(v[2 * idx + 1].clone())))?;
    }
    let (t1, t2) = same_side_points(ctx, &i);
    let (e1, e2) = (ProjPoint(vec![P1::real(t1.clone())]), ProjPoint(vec![P1::real(t2.clone())]));
    let t = LinearOp::from_fn(DegreeVec::univariate(n), DegreeVec::univariate(k), |p| {
        q.scale(&p.evaluate(&e1)?).add(&r.scale(&p.evaluate(&e2)?))
    })?;
    let p = gen_interval_rooted(&mut ctx.rng, n, &i)?;
    ctx.note("i", i.to_string());
    ctx.note("j", j.to_string());
    ctx.note_poly("q", &q);
    ctx.note_poly("r", &r);
    ctx.note("points", vec![crate::scalar::format_rat(&t1), crate::scalar::format_rat(&t2)]);
    ctx.note_poly("p", &p);
    let out = t.apply(&p)?;
    ensure!(!out.is_zero(), "T(p) is zero");
    ensure!(roots_in_boundary_set(&out, &j)?, "T(p) is not J-rooted");
    let rr = gen_real_rooted(&mut ctx.rng, n);
    ensure!(weakly_real_rooted(&t.apply(&rr)?)?, "T does not preserve weak real-rootedness");
    Ok(Check::Pass)
}
