//! Certified complex root enclosures for square-free polynomials.
//!
//! Floating-point seeds come from the Schur form of the companion matrix.
//! Seeds are rounded to dyadic rationals and improved by Weierstrass steps in
//! exact arithmetic. Certification uses Smith's bound: with
//! `W_i = f(z_i) / (lc·Π_{j≠i}(z_i − z_j))`, the disks `|z − z_i| ≤ n|W_i|`
//! cover all roots, and a disk disjoint from the others holds exactly one.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::scalar::{round_to_bits, sqrt_upper, GaussRat, Rat};
use crate::upoly::{to_gauss, UPoly};

/// Default certification exponent: disk radii at most `2^-64`.
pub const DEFAULT_PRECISION: u32 = 64;

/// Precision from `STABILITY_KIT_PRECISION`, else [`DEFAULT_PRECISION`].
pub fn default_precision() -> u32 {
    std::env::var("STABILITY_KIT_PRECISION")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_PRECISION)
}

/// A closed disk holding exactly one root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDisk {
    pub center: GaussRat,
    /// Exact upper bound on the distance from `center` to the root.
    pub radius: Rat,
}

impl RootDisk {
    pub fn exact(z: GaussRat) -> Self {
        RootDisk { center: z, radius: Rat::zero() }
    }

    pub fn meets_real_axis(&self) -> bool {
        self.center.im.abs() <= self.radius
    }

    /// `+1` if the disk lies in `Im > 0`, `−1` in `Im < 0`, `0` if it meets ℝ.
    pub fn im_sign(&self) -> i8 {
        if self.meets_real_axis() {
            0
        } else if self.center.im.is_positive() {
            1
        } else {
            -1
        }
    }

    fn disjoint(&self, o: &RootDisk) -> bool {
        let d = &self.center - &o.center;
        let r = &self.radius + &o.radius;
        d.norm_sqr() > &r * &r
    }
}

fn companion_seeds(p: &UPoly<GaussRat>) -> Option<Vec<Complex64>> {
    let n = p.degree()?;
    let lc = p.lc()?.to_complex();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for (i, c) in p.coeffs()[..n].iter().enumerate() {
        m[(i, n - 1)] = -c.to_complex() / lc;
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return None;
    }
    let schur = nalgebra::Schur::try_new(m, 1e-14, 10_000)?;
    let (_, t) = schur.unpack();
    let ev: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    ev.iter().all(|z| z.re.is_finite() && z.im.is_finite()).then_some(ev)
}

// Aberth–Ehrlich iteration in double precision.
fn aberth_seeds(p: &UPoly<GaussRat>) -> Vec<Complex64> {
    let c: Vec<Complex64> = p.coeffs().iter().map(GaussRat::to_complex).collect();
    let n = c.len() - 1;
    let dc: Vec<Complex64> = (1..=n).map(|k| c[k] * k as f64).collect();
    let eval = |cs: &[Complex64], z: Complex64| cs.iter().rev().fold(Complex64::zero(), |a, &b| a * z + b);
    let radius = 1.0 + c[..n].iter().map(|x| (x / c[n]).norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let ratio = eval(&c, z[i]) / eval(&dc, z[i]);
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            if w.re.is_finite() && w.im.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm());
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn seeds(p: &UPoly<GaussRat>) -> Vec<Complex64> {
    companion_seeds(p).unwrap_or_else(|| aberth_seeds(p))
}

/// Weierstrass corrections at the current approximations; `None` if two coincide.
fn weierstrass(f: &UPoly<GaussRat>, z: &[GaussRat]) -> Option<Vec<GaussRat>> {
    let lc = f.lc()?;
    z.iter()
        .enumerate()
        .map(|(i, zi)| {
            let mut den = lc.clone();
            for (j, zj) in z.iter().enumerate() {
                if i != j {
                    den *= &(zi - zj);
                }
            }
            den.inv().map(|d| f.eval(zi) * d)
        })
        .collect()
}

fn smith_disks(z: &[GaussRat], w: &[GaussRat], bits: u32) -> Vec<RootDisk> {
    let n = Rat::from_integer(z.len().into());
    z.iter()
        .zip(w)
        .map(|(c, wi)| RootDisk { center: c.clone(), radius: &n * sqrt_upper(&wi.norm_sqr(), bits) })
        .collect()
}

fn pairwise_disjoint(d: &[RootDisk]) -> bool {
    (0..d.len()).all(|i| (i + 1..d.len()).all(|j| d[i].disjoint(&d[j])))
}

/// Certified disks, one per root, of a square-free `f` with radii at most
/// `2^-precision`. With `real_snap`, near-real centers are moved onto ℝ; for
/// real `f` an isolated real-centered disk then holds a real root.
fn certify(f: &UPoly<GaussRat>, precision: u32, real_snap: bool) -> Option<Vec<RootDisk>> {
    let n = f.degree()?;
    if n == 0 {
        return Some(Vec::new());
    }
    if n == 1 {
        let c = f.coeffs();
        return Some(vec![RootDisk::exact(-(&c[0] / &c[1]))]);
    }
    let target = Rat::new(1.into(), num_bigint::BigInt::from(1) << precision as usize);
    let cap = 4 * precision + 512;
    let mut bits = 53u32;
    let mut z: Vec<GaussRat> = seeds(f).into_iter().map(|s| GaussRat::from_complex(s).round_to_bits(bits)).collect();
    for _ in 0..64 {
        let w = match weierstrass(f, &z) {
            Some(w) => w,
            None => {
                // Coincident approximations: nudge apart deterministically.
                for (k, zk) in z.iter_mut().enumerate() {
                    *zk += &GaussRat::new(Rat::zero(), Rat::new((k as i64 + 1).into(), num_bigint::BigInt::from(1) << bits as usize));
                }
                continue;
            }
        };
        let disks = smith_disks(&z, &w, bits + 8);
        if real_snap {
            let snapped: Vec<GaussRat> = disks
                .iter()
                .map(|d| if d.meets_real_axis() { GaussRat::real(d.center.re.clone()) } else { d.center.clone() })
                .collect();
            if snapped != z {
                if let Some(ws) = weierstrass(f, &snapped) {
                    let alt = smith_disks(&snapped, &ws, bits + 8);
                    if pairwise_disjoint(&alt) && alt.iter().all(|d| d.radius <= target) {
                        return Some(alt);
                    }
                }
            }
        }
        if pairwise_disjoint(&disks) && disks.iter().all(|d| d.radius <= target) {
            return Some(disks);
        }
        bits = (bits * 2).min(cap);
        z = z.iter().zip(&w).map(|(zi, wi)| (zi - wi).round_to_bits(bits)).collect();
    }
    None
}

/// Certified disks for the roots of a square-free complex polynomial.
pub fn certify_roots(f: &UPoly<GaussRat>, precision: u32) -> Option<Vec<RootDisk>> {
    certify(f, precision, false)
}

/// Certified disks for a square-free real polynomial; real roots get
/// real-centered disks.
pub fn certify_real_poly_roots(f: &UPoly<Rat>, precision: u32) -> Option<Vec<RootDisk>> {
    certify(&to_gauss(f), precision, true)
}

/// Numeric real-rootedness of a real polynomial: `Some(true)` if every root
/// (over all square-free factors) sits in an isolated real-centered disk,
/// `Some(false)` if some certified disk misses ℝ, `None` if undecided.
pub fn numeric_real_rooted(p: &UPoly<Rat>, precision: u32) -> Option<bool> {
    let mut undecided = false;
    for f in p.squarefree_factors() {
        let disks = certify_real_poly_roots(&f, precision)?;
        for d in &disks {
            if !d.meets_real_axis() {
                return Some(false);
            }
            if !d.center.im.is_zero() {
                undecided = true;
            }
        }
    }
    (!undecided).then_some(true)
}

/// Rounds a disk center to `bits` and keeps the radius valid.
pub fn coarsen(d: &RootDisk, bits: u32) -> RootDisk {
    let c = GaussRat::new(round_to_bits(&d.center.re, bits), round_to_bits(&d.center.im, bits));
    let shift = sqrt_upper(&(&c - &d.center).norm_sqr(), bits + 4);
    RootDisk { center: c, radius: &d.radius + shift }
}
