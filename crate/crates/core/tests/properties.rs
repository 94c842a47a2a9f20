use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stability_kit::apolarity::{apolarity_form, operator_from_symbol, symbol};
use stability_kit::harness::gen::{
    gen_real_rooted_monic, random_arc, random_convex_region, random_degree, random_moebius, random_operator, random_point,
    random_poly, random_proj_point,
};
use stability_kit::harness::{additive_convolution, multiplicative_convolution};
use stability_kit::moebius::{act_poly, MoebiusMap, MoebiusTuple};
use stability_kit::polarization::{polarize, polarized_evaluation, project};
use stability_kit::poly::ZeroTest;
use stability_kit::regions::{parse_product, parse_region, Region, RegionProduct};
use stability_kit::stability::real_rooted;
use stability_kit::{DegreeVec, GaussRat};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn degree(rng: &mut ChaCha8Rng, max_m: usize, max_total: u32) -> DegreeVec {
    let m = rng.gen_range(1..=max_m);
    random_degree(rng, m, max_total)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn zero_test_agrees_with_evaluation(seed: u64) {
        let mut r = rng(seed);
        let lam = degree(&mut r, 3, 5);
        let p = random_poly(&mut r, &lam);
        let z = random_proj_point(&mut r, lam.arity());
        prop_assert_eq!(ZeroTest::new(&p).vanishes_at(&z), p.evaluate(&z).unwrap().is_zero());
    }

    #[test]
    fn apolarity_is_invariant_under_unimodular_maps(seed: u64) {
        let mut r = rng(seed);
        let lam = degree(&mut r, 2, 4);
        let p = random_poly(&mut r, &lam);
        let q = random_poly(&mut r, &lam);
        let phi = random_moebius(&mut r);
        let all = MoebiusTuple::new(vec![phi.clone(); lam.arity()]);
        let lhs = apolarity_form(&act_poly(&all, &p).unwrap(), &act_poly(&all, &q).unwrap()).unwrap();
        let mut factor = GaussRat::one();
        for _ in 0..lam.total() {
            factor = &factor * &phi.det();
        }
        prop_assert_eq!(lhs, &factor * &apolarity_form(&p, &q).unwrap());
    }

    #[test]
    fn symbol_and_operator_are_inverse(seed: u64) {
        let mut r = rng(seed);
        let lam = degree(&mut r, 2, 3);
        let alpha = degree(&mut r, 2, 3);
        let t = random_operator(&mut r, &lam, &alpha).unwrap();
        prop_assert_eq!(operator_from_symbol(&symbol(&t), &lam, &alpha).unwrap(), t);
    }

    #[test]
    fn projection_inverts_polarization(seed: u64) {
        let mut r = rng(seed);
        let lam = degree(&mut r, 2, 4);
        let p = random_poly(&mut r, &lam);
        prop_assert_eq!(project(&polarize(&p), &lam).unwrap(), p);
    }

    #[test]
    fn polarized_evaluation_on_the_diagonal(seed: u64) {
        let mut r = rng(seed);
        let lam = degree(&mut r, 2, 4);
        let p = random_poly(&mut r, &lam);
        let z = random_proj_point(&mut r, lam.arity());
        let diagonal = stability_kit::ProjPoint(
            z.0.iter().zip(lam.entries()).flat_map(|(w, &n)| std::iter::repeat_n(w.clone(), n as usize)).collect(),
        );
        prop_assert_eq!(polarized_evaluation(&p, &diagonal).unwrap(), p.evaluate(&z).unwrap());
    }

    #[test]
    fn convolutions_are_symmetric(seed: u64) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=5);
        let lam = DegreeVec::univariate(n);
        let p = random_poly(&mut r, &lam);
        let q = random_poly(&mut r, &lam);
        prop_assert_eq!(additive_convolution(&p, &q).unwrap(), additive_convolution(&q, &p).unwrap());
        prop_assert_eq!(multiplicative_convolution(&p, &q).unwrap(), multiplicative_convolution(&q, &p).unwrap());
    }

    #[test]
    fn convolutions_are_linear_in_each_argument(seed: u64) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=5);
        let lam = DegreeVec::univariate(n);
        let (p, p2, q) = (random_poly(&mut r, &lam), random_poly(&mut r, &lam), random_poly(&mut r, &lam));
        let sum = p.add(&p2).unwrap();
        for conv in [additive_convolution, multiplicative_convolution] {
            let split = conv(&p, &q).unwrap().add(&conv(&p2, &q).unwrap()).unwrap();
            prop_assert_eq!(conv(&sum, &q).unwrap(), split);
        }
    }

    #[test]
    fn additive_convolution_keeps_real_roots(seed: u64) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=5);
        let p = gen_real_rooted_monic(&mut r, n);
        let q = gen_real_rooted_monic(&mut r, n);
        prop_assert!(real_rooted(&additive_convolution(&p, &q).unwrap()).unwrap());
    }

    #[test]
    fn region_text_round_trips(seed: u64) {
        let mut r = rng(seed);
        let mut region = random_convex_region(&mut r);
        if r.gen_bool(0.5) {
            region = region.complement();
        }
        if r.gen_bool(0.3) {
            region = Region::arc_only(random_arc(&mut r));
        }
        let text = region.to_string();
        prop_assert_eq!(parse_region(&text).unwrap(), region.clone(), "{}", text);
        let product = RegionProduct(vec![region.clone(), region.complement()]);
        prop_assert_eq!(parse_product(&product.to_string()).unwrap(), product);
    }

    #[test]
    fn complement_partitions_the_sphere(seed: u64) {
        let mut r = rng(seed);
        let region = random_convex_region(&mut r);
        let c = region.complement();
        for _ in 0..8 {
            let z = random_point(&mut r);
            prop_assert_ne!(region.contains(&z), c.contains(&z));
        }
    }

    #[test]
    fn moebius_image_moves_membership(seed: u64) {
        let mut r = rng(seed);
        let region = random_convex_region(&mut r);
        let phi: MoebiusMap = random_moebius(&mut r);
        let image = region.image(&phi);
        for _ in 0..8 {
            let z = random_point(&mut r);
            prop_assert_eq!(region.contains(&z), image.contains(&phi.apply_point(&z)));
        }
    }
}
