//! Acceptance run: one `PASS`/`FAIL` line per criterion, then a summary.
//! Exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stability_kit::apolarity::{
    apolarity_form, contract, d_map, evaluation_symbol, operator_from_symbol, symbol, symbol_lemma_contract, LinearOp,
    TensorPoly,
};
use stability_kit::harness::gen::{
    gen_real_rooted, random_degree, random_moebius, random_operator, random_poly, random_proj_point, random_real_poly,
};
use stability_kit::harness::{run_case, run_suite, Check, SuiteConfig, SuiteReport};
use stability_kit::moebius::{act_poly, MoebiusMap, MoebiusTuple};
use stability_kit::polarization::{form_constant, polarize, project};
use stability_kit::poly::Var;
use stability_kit::regions::{Arc, Endpoint, Region, RegionProduct};
use stability_kit::roots::numeric_real_rooted;
use stability_kit::stability::{multivariate_stable, real_rooted, roots_in_boundary_set, StabilityOptions, Status};
use stability_kit::upoly::{dehomogenize, real_part, real_roots_with_multiplicity, RealRoot};
use stability_kit::{BiHomPoly, DegreeVec, GaussRat, ProjPoint, Rat, P1};

const SEED: u64 = 20_241;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

struct Ledger {
    lines: Vec<(String, bool)>,
}

impl Ledger {
    fn run(&mut self, id: &str, what: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let mut o = result.unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| e.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            outcome(false, format!("panicked: {msg}"))
        });
        if let Some(limit) = limit {
            if elapsed > limit {
                o.pass = false;
                o.detail.push_str(&format!("; over the {} s limit", limit.as_secs()));
            }
        }
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{id}] {what}: {} ({:.1} s)", o.detail, elapsed.as_secs_f64());
        self.lines.push((id.to_string(), o.pass));
    }
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn fact_sq(lam: &DegreeVec) -> GaussRat {
    let f = lam.factorial();
    GaussRat::real(Rat::from_integer(&f * &f))
}

fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

// ---------------------------------------------------------------- exact identities

fn symbol_lemma(n: usize) -> Outcome {
    let mut rng = rng(1);
    for i in 0..n {
        let m = rng.gen_range(1..=2);
        let lam = random_degree(&mut rng, m, 4);
        let m = rng.gen_range(1..=2);
        let alpha = random_degree(&mut rng, m, 4);
        let t = random_operator(&mut rng, &lam, &alpha).unwrap();
        let q = random_poly(&mut rng, &lam);
        let r = random_poly(&mut rng, &alpha);
        let lhs = symbol_lemma_contract(&symbol(&t), &q, &r).unwrap().poly;
        let rhs = t.apply(&q).unwrap().tensor(&r).scale(&fact_sq(&lam));
        if lhs != rhs {
            return outcome(false, format!("mismatch at instance {i}, λ = {lam}, α = {alpha}"));
        }
    }
    outcome(true, format!("{n}/{n} exact equalities"))
}

fn evaluation_symbol_lemma(n: usize) -> Outcome {
    let mut rng = rng(2);
    for i in 0..n {
        let m = rng.gen_range(1..=3);
        let lam = random_degree(&mut rng, m, 6);
        let p = random_poly(&mut rng, &lam);
        let z = random_proj_point(&mut rng, m);
        let d = contract(&evaluation_symbol(&z, &lam).unwrap(), &p, m).unwrap();
        if d.coeff(&[]) != &fact_sq(&lam) * &p.evaluate(&z).unwrap() {
            return outcome(false, format!("mismatch at instance {i}, λ = {lam}"));
        }
    }
    outcome(true, format!("{n}/{n} exact equalities"))
}

/// Product of elementary shears with Gaussian integer entries; determinant 1.
fn random_unimodular(rng: &mut ChaCha8Rng) -> MoebiusMap {
    let mut phi = MoebiusMap::identity();
    for _ in 0..3 {
        let t = GaussRat::ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let (upper, lower) = (GaussRat::one(), GaussRat::zero());
        let shear = if rng.gen_bool(0.5) {
            MoebiusMap::new(upper.clone(), t, lower.clone(), upper).unwrap()
        } else {
            MoebiusMap::new(upper.clone(), lower, t, upper).unwrap()
        };
        phi = phi.compose(&shear);
    }
    phi
}

fn d_conjugation(n: usize) -> Outcome {
    let mut rng = rng(3);
    let (mut unimodular, mut general) = (0, 0);
    for i in 0..n {
        let phi = if i % 2 == 0 {
            random_unimodular(&mut rng)
        } else {
            let mut phi = random_moebius(&mut rng);
            while phi.is_unimodular() {
                phi = random_moebius(&mut rng);
            }
            phi
        };
        if phi.is_unimodular() {
            unimodular += 1;
        } else {
            general += 1;
        }
        let m = rng.gen_range(1..=2);
        let a = random_degree(&mut rng, m, 4);
        let b = random_degree(&mut rng, m, 4);
        let t = TensorPoly::from_pair(&random_poly(&mut rng, &a), &random_poly(&mut rng, &b));
        let k = rng.gen_range(0..m);
        let all = MoebiusTuple(vec![phi.clone(); 2 * m]);
        let moved = TensorPoly::new(act_poly(&all, &t.poly).unwrap(), m).unwrap();
        let lhs = d_map(&moved, k).unwrap().poly;
        let rhs = act_poly(&all, &d_map(&t, k).unwrap().poly).unwrap().scale(&phi.det());
        if lhs != rhs {
            return outcome(false, format!("mismatch at instance {i}"));
        }
    }
    outcome(true, format!("{n}/{n} exact ({unimodular} unimodular, {general} with det ≠ 1)"))
}

fn round_trip(n: usize) -> Outcome {
    let mut rng = rng(4);
    for i in 0..n {
        let m = rng.gen_range(1..=2);
        let lam = random_degree(&mut rng, m, 4);
        let m = rng.gen_range(1..=2);
        let alpha = random_degree(&mut rng, m, 4);
        let t = random_operator(&mut rng, &lam, &alpha).unwrap();
        if operator_from_symbol(&symbol(&t), &lam, &alpha).unwrap() != t {
            return outcome(false, format!("operator round trip fails at {i}"));
        }
        let s = random_poly(&mut rng, &lam.concat(&alpha));
        if symbol(&operator_from_symbol(&s, &lam, &alpha).unwrap()) != s {
            return outcome(false, format!("symbol round trip fails at {i}"));
        }
    }
    outcome(true, format!("{n}/{n} operators and {n}/{n} symbols"))
}

fn polarization_constants(pairs: usize) -> Outcome {
    let mut rng = rng(5);
    let mut seen = Vec::new();
    for lam in [DegreeVec::univariate(2), DegreeVec::univariate(3), DegreeVec::new(vec![1, 2]), DegreeVec::new(vec![2, 2])] {
        let c = form_constant(&lam);
        let cg = GaussRat::real(c.clone());
        let mut nonzero = 0;
        for i in 0..pairs {
            let p = random_poly(&mut rng, &lam);
            let q = random_poly(&mut rng, &lam);
            if project(&polarize(&p), &lam).unwrap() != p {
                return outcome(false, format!("projection does not invert polarization on {lam} at {i}"));
            }
            let base = apolarity_form(&p, &q).unwrap();
            nonzero += usize::from(!base.is_zero());
            if apolarity_form(&polarize(&p), &polarize(&q)).unwrap() != &cg * &base {
                return outcome(false, format!("constant {c} inconsistent on {lam} at {i}"));
            }
        }
        seen.push(format!("c{lam} = {c} ({nonzero} nonzero pairings)"));
    }
    outcome(true, format!("{pairs} pairs per degree; {}", seen.join(", ")))
}

// ---------------------------------------------------------------- regressions

fn regression_case(suite: &str, index: usize) -> Result<(), String> {
    let cfg = SuiteConfig { cases: index + 1, ..SuiteConfig::default() };
    match run_case(suite, SEED, index, &cfg).map_err(|e| e.to_string())?.outcome {
        Check::Pass | Check::Budgeted => Ok(()),
        other => Err(format!("{suite} case {index}: {other:?}")),
    }
}

fn mixed_product() -> Outcome {
    let p = BiHomPoly::from_terms(DegreeVec::ones(3), [(vec![1, 1, 1], GaussRat::one()), (vec![0, 0, 0], -GaussRat::one())])
        .unwrap();
    let self_pairing = apolarity_form(&p, &p).unwrap();
    let ones = ProjPoint(vec![P1::real(int(1)); 3]);
    let at_ones = p.evaluate(&ones).unwrap();
    let closed = RegionProduct::power(&Region::disk().closure(), 3);
    let v = multivariate_stable(&p, &closed, &StabilityOptions { seed: SEED, ..StabilityOptions::default() });
    let witness_ok = v.witness.as_ref().is_some_and(|w| closed.contains(w) && p.evaluate(w).unwrap().is_zero());
    let suite = regression_case("grace", 0);
    let pass = self_pairing.is_zero() && at_ones.is_zero() && v.status == Status::Unstable && witness_ok && suite.is_ok();
    let w = v.witness.map_or("none".to_string(), |w| w.to_string());
    outcome(pass, format!("D(p,p) = {self_pairing}, p(1,1,1) = {at_ones}, closed disk product: {} at {w}; {suite:?}", v.status.as_str()))
}

/// `−n·w·(zy − xw)^{n−1}` with variables `(z:w), (x:y)`.
fn derivative_symbol_closed_form(n: u32) -> BiHomPoly {
    let w = BiHomPoly::monomial(DegreeVec::new(vec![1, 0]), vec![0, 0], GaussRat::one()).unwrap();
    let zy_minus_xw = BiHomPoly::from_terms(
        DegreeVec::new(vec![1, 1]),
        [(vec![1, 0], GaussRat::one()), (vec![0, 1], -GaussRat::one())],
    )
    .unwrap();
    w.mul(&zy_minus_xw.pow(n - 1)).unwrap().scale(&GaussRat::int(-(n as i64)))
}

fn derivative_symbols() -> Outcome {
    for n in 1..=6u32 {
        let dx =
            LinearOp::from_fn(DegreeVec::univariate(n), DegreeVec::univariate(n - 1), |p| p.partial(0, Var::X)).unwrap();
        if symbol(&dx) != derivative_symbol_closed_form(n) {
            return outcome(false, format!("n = {n} differs"));
        }
    }
    let suite = regression_case("cops", 0);
    outcome(suite.is_ok(), format!("n = 1..6 exact; {suite:?}"))
}

fn fisk() -> Outcome {
    // columns: y² ↦ y², xy ↦ xy, x² ↦ x² − xy
    let cols = [[1, 0, 0], [0, 1, 0], [0, -1, 1]];
    let data = cols.iter().flatten().map(|&c| GaussRat::int(c)).collect();
    let t = LinearOp::from_columns(DegreeVec::univariate(2), DegreeVec::univariate(2), data).unwrap();
    let out = t.apply(&BiHomPoly::univariate_ints(&[1, 2, 1])).unwrap();
    let expect_out = BiHomPoly::univariate_ints(&[1, 1, 1]);
    // (xw − zy)² − x·y·w², variables (z:w), (x:y)
    let xw_zy = BiHomPoly::from_terms(
        DegreeVec::new(vec![1, 1]),
        [(vec![0, 1], GaussRat::one()), (vec![1, 0], -GaussRat::one())],
    )
    .unwrap();
    let xyw2 = BiHomPoly::monomial(DegreeVec::new(vec![2, 2]), vec![0, 1], GaussRat::one()).unwrap();
    let expect_symbol = xw_zy.pow(2).sub(&xyw2).unwrap();
    let rr = real_rooted(&out).unwrap();
    let suite = regression_case("jops", 0);
    let pass = out == expect_out && symbol(&t) == expect_symbol && !rr && suite.is_ok();
    outcome(pass, format!("T₂(x²+2xy+y²) = {out}, real_rooted = {rr}, symbol matches = {}; {suite:?}", symbol(&t) == expect_symbol))
}

fn window() -> Outcome {
    let g = BiHomPoly::univariate_ints(&[4, -4, 1]); // (x − 2y)²
    let y = BiHomPoly::univariate_ints(&[1, 0]);
    let out = y.mul(&g.partial(0, Var::X).unwrap()).unwrap().sub(&g).unwrap();
    let expect = BiHomPoly::univariate_ints(&[-2, 1]).mul(&BiHomPoly::univariate_ints(&[4, -1])).unwrap();
    let roots = real_roots_with_multiplicity(&real_part(&dehomogenize(&out)));
    let vanishes = |t: i64| out.evaluate(&ProjPoint(vec![P1::real(int(t))])).unwrap().is_zero();
    let encloses = |(r, m): &(RealRoot, u32), t: i64| *m == 1 && r.lo <= int(t) && int(t) <= r.hi;
    let roots_ok = roots.len() == 2 && encloses(&roots[0], 2) && encloses(&roots[1], 4) && vanishes(2) && vanishes(4);
    let in_window = roots_in_boundary_set(&out, &Arc::closed(Endpoint::Finite(int(2)), Endpoint::Finite(int(4)))).unwrap();
    let suite = regression_case("jops", 1);
    let pass = out == expect && roots_ok && in_window && suite.is_ok();
    outcome(pass, format!("output = {out}, simple roots exactly 2 and 4 = {roots_ok}, inside [2, 4] = {in_window}; {suite:?}"))
}

// ---------------------------------------------------------------- suites

fn suite_line(r: &SuiteReport) -> String {
    format!(
        "{} cases, {} passed ({} budgeted), {} failed, {} indeterminate ({:.2}%)",
        r.cases,
        r.passed,
        r.budgeted,
        r.failures.len(),
        r.indeterminates.len(),
        100.0 * r.indeterminate_fraction()
    )
}

fn suite(name: &str, cases: usize) -> Outcome {
    let cfg = SuiteConfig { cases, ..SuiteConfig::default() };
    let r = run_suite(name, SEED, &cfg).unwrap();
    let mut detail = suite_line(&r);
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!("; first failure: case {} {}: {}", f.index, f.check, f.detail));
    }
    outcome(r.is_clean() && r.indeterminate_fraction() <= 0.01, detail)
}

/// Runs the cases of `suite` whose check is `check`, until `count` of them.
fn suite_kind(suite: &str, check: &str, count: usize) -> Outcome {
    let cfg = SuiteConfig::default();
    let (mut run, mut failed, mut undecided, mut first) = (0, 0, 0, None);
    let mut index = 0;
    while run < count {
        let c = run_case(suite, SEED, index, &cfg).unwrap();
        index += 1;
        if c.check != check {
            continue;
        }
        run += 1;
        match c.outcome {
            Check::Pass | Check::Budgeted => {}
            Check::Indeterminate(_) => undecided += 1,
            Check::Fail(d) => {
                failed += 1;
                first.get_or_insert(format!("case {}: {d}", c.index));
            }
        }
    }
    let mut detail = format!("{run} pairs, {failed} failed, {undecided} indeterminate");
    if let Some(f) = first {
        detail.push_str(&format!("; {f}"));
    }
    outcome(failed == 0 && undecided * 100 <= run, detail)
}

// ---------------------------------------------------------------- soundness and determinism

fn real_rootedness(n: usize) -> Outcome {
    let mut rng = rng(6);
    let (mut yes, mut no, mut disagree, mut undecided) = (0, 0, 0, 0);
    for i in 0..n {
        let deg = rng.gen_range(1..=8);
        let p = if i % 2 == 0 { gen_real_rooted(&mut rng, deg) } else { random_real_poly(&mut rng, &DegreeVec::univariate(deg)) };
        if p.is_zero() {
            continue;
        }
        let exact = real_rooted(&p).unwrap();
        // the numeric route works on the affine part; roots at ∞ are real
        let f = real_part(&dehomogenize(&p));
        match numeric_real_rooted(&f, 64) {
            Some(b) if b == exact => {}
            Some(_) => disagree += 1,
            None => undecided += 1,
        }
        if exact {
            yes += 1;
        } else {
            no += 1;
        }
    }
    outcome(
        disagree == 0 && undecided == 0,
        format!("{} polynomials ({yes} real-rooted, {no} not), {disagree} disagreements, {undecided} undecided", yes + no),
    )
}

fn determinism(cases: usize) -> Outcome {
    let cfg = SuiteConfig { cases, budget: 500, ..SuiteConfig::default() };
    let mut checked = Vec::new();
    for name in stability_kit::harness::suite_names() {
        let a = run_suite(name, SEED + 1, &cfg).unwrap();
        let b = run_suite(name, SEED + 1, &cfg).unwrap();
        if a.to_json_untimed() != b.to_json_untimed() {
            return outcome(false, format!("{name} differs between runs"));
        }
        if SuiteReport::from_json(&a.to_json()).unwrap() != a {
            return outcome(false, format!("{name} report does not round-trip"));
        }
        checked.push(name);
    }
    outcome(true, format!("{} suites × {cases} cases byte-identical: {}", checked.len(), checked.join(", ")))
}

fn main() {
    let mut l = Ledger { lines: Vec::new() };
    let secs = |s| Some(Duration::from_secs(s));

    l.run("1.1", "symbol identity on 200 random (T, q, r)", secs(60), || symbol_lemma(200));
    l.run("1.2", "evaluation symbol identity on 200 random (p, point)", secs(30), || evaluation_symbol_lemma(200));
    l.run("1.3", "D scales by det under Möbius maps, 200 maps", None, || d_conjugation(200));
    l.run("1.4", "symbol/operator round trip, 100 operators", None, || round_trip(100));
    l.run("1.5", "projection inverts polarization; form constant consistent", None, || polarization_constants(100));

    l.run("2.1", "x₁x₂x₃ − y₁y₂y₃ self-apolar with a closed-product zero", None, mixed_product);
    l.run("2.2", "derivative symbol closed form, n = 1..6", None, derivative_symbols);
    l.run("2.3", "falling-factorial operator example", None, fisk);
    l.run("2.4", "(y∂x − 1)(x − 2y)² roots and window [2, 4]", None, window);

    l.run("3.1", "grace suite, 500 cases", secs(300), || suite("grace", 500));
    for name in ["laguerre", "hermite-biehler", "gws", "ev-grace"] {
        l.run(&format!("3.{name}"), &format!("{name} suite, 300 cases"), secs(180), || suite(name, 300));
    }
    l.run("3.cops", "cops suite, 300 cases", None, || suite("cops", 300));
    l.run("3.add", "additive root sandwich, 200 monic pairs at 2^-34", None, || suite_kind("cops", "additive-sandwich", 200));
    l.run("3.mul", "multiplicative root sandwich, 200 positive pairs at 2^-34", None, || {
        suite_kind("cops", "multiplicative-sandwich", 200)
    });
    l.run("3.rops", "rops suite, 200 cases", None, || suite("rops", 200));
    l.run("3.jops", "jops suite, 200 cases", None, || suite("jops", 200));

    l.run("4", "real_rooted against certified numeric isolation, 500 polynomials", None, || real_rootedness(500));
    l.run("5", "identical seeds give identical reports", None, || determinism(24));

    let failed: Vec<&str> = l.lines.iter().filter(|(_, ok)| !ok).map(|(id, _)| id.as_str()).collect();
    println!("{} criteria, {} passed, {} failed", l.lines.len(), l.lines.len() - failed.len(), failed.len());
    if !failed.is_empty() {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
