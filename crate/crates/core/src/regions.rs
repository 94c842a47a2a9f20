//! Circular and projectively convex regions of `ℂP¹`.
//!
//! A region is `chart · S` where `S` lives in the canonical frame: the open
//! upper half-plane `H₊` (or its closure, or nothing) together with an
//! optional arc of the boundary `ℝ̄ = ℝ ∪ {∞}`, possibly complemented.
//! Membership of Gaussian-rational points is decided exactly.

mod dsl;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::poly::{ProjPoint, P1};
use crate::scalar::{GaussRat, Rat};

pub use dsl::{parse_product, parse_region};

/// A point of the canonical boundary `ℝ̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Finite(Rat),
    Infinity,
}

impl Endpoint {
    pub fn to_p1(&self) -> P1 {
        match self {
            Endpoint::Finite(r) => P1::real(r.clone()),
            Endpoint::Infinity => P1::infinity(),
        }
    }

    fn neg(&self) -> Endpoint {
        match self {
            Endpoint::Finite(r) => Endpoint::Finite(-r),
            Endpoint::Infinity => Endpoint::Infinity,
        }
    }
}

// `∞` is the largest element of the linear order on `ℝ̄`.
impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a.cmp(b),
            (Endpoint::Finite(_), Endpoint::Infinity) => Ordering::Less,
            (Endpoint::Infinity, Endpoint::Finite(_)) => Ordering::Greater,
            (Endpoint::Infinity, Endpoint::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Finite(r) => write!(f, "{r}"),
            Endpoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Connected subset of `ℝ̄` running upward from `start` to `end`, wrapping
/// through `∞` when `end < start`. With `start == end` it is the single
/// point if both ends are closed, and `ℝ̄` minus that point otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub start: Endpoint,
    pub end: Endpoint,
    pub start_closed: bool,
    pub end_closed: bool,
}

impl Arc {
    pub fn closed(start: Endpoint, end: Endpoint) -> Self {
        Arc { start, end, start_closed: true, end_closed: true }
    }

    pub fn open(start: Endpoint, end: Endpoint) -> Self {
        Arc { start, end, start_closed: false, end_closed: false }
    }

    fn is_point(&self) -> bool {
        self.start == self.end && self.start_closed && self.end_closed
    }

    pub fn contains(&self, x: &Endpoint) -> bool {
        if self.start == self.end {
            return if self.is_point() { x == &self.start } else { x != &self.start };
        }
        if x == &self.start {
            return self.start_closed;
        }
        if x == &self.end {
            return self.end_closed;
        }
        if self.start < self.end {
            &self.start < x && x < &self.end
        } else {
            x > &self.start || x < &self.end
        }
    }

    /// `ℝ̄ ∖ self`.
    pub fn complement(&self) -> Arc {
        Arc {
            start: self.end.clone(),
            end: self.start.clone(),
            start_closed: !self.end_closed,
            end_closed: !self.start_closed,
        }
    }

    /// Image under `z ↦ −z`.
    fn negated(&self) -> Arc {
        Arc {
            start: self.end.neg(),
            end: self.start.neg(),
            start_closed: self.end_closed,
            end_closed: self.start_closed,
        }
    }

    /// Image under a real Möbius map `m`; orientation flips when `det m < 0`.
    fn mapped(&self, m: &MoebiusMap) -> Arc {
        let s = map_endpoint(m, &self.start);
        let e = map_endpoint(m, &self.end);
        if m.det().re.is_positive() {
            Arc { start: s, end: e, ..self.clone() }
        } else {
            Arc { start: e, end: s, start_closed: self.end_closed, end_closed: self.start_closed }
        }
    }

    fn closure(&self) -> Arc {
        if self.start == self.end && !self.is_point() {
            // ℝ̄ minus a point closes up to ℝ̄; callers encode that as a closed base.
            return self.clone();
        }
        Arc { start_closed: true, end_closed: true, ..self.clone() }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.start_closed { '[' } else { '(' };
        let r = if self.end_closed { ']' } else { ')' };
        write!(f, "arc{l}{},{}{r}", self.start, self.end)
    }
}

fn map_endpoint(m: &MoebiusMap, e: &Endpoint) -> Endpoint {
    match m.apply_point(&e.to_p1()).affine() {
        Some(z) => Endpoint::Finite(z.re),
        None => Endpoint::Infinity,
    }
}

/// The canonical base set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    OpenHPlus,
    ClosedHPlus,
    /// No interior; only the boundary arc (if any).
    Empty,
}

/// Where a point falls in the canonical frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalPoint {
    Upper,
    Lower,
    Boundary(Endpoint),
}

impl CanonicalPoint {
    pub fn of(w: &P1) -> Self {
        match w.affine() {
            None => CanonicalPoint::Boundary(Endpoint::Infinity),
            Some(z) if z.im.is_positive() => CanonicalPoint::Upper,
            Some(z) if z.im.is_negative() => CanonicalPoint::Lower,
            Some(z) => CanonicalPoint::Boundary(Endpoint::Finite(z.re)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub chart: MoebiusMap,
    pub base: Base,
    pub arc: Option<Arc>,
    pub complemented: bool,
}

/// `chart · (H₊ ∪ boundary)` with the boundary part as a subset of `ℝ̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexForm {
    pub chart: MoebiusMap,
    pub boundary: BoundarySet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundarySet {
    None,
    Full,
    Arc(Arc),
}

impl BoundarySet {
    pub fn contains(&self, x: &Endpoint) -> bool {
        match self {
            BoundarySet::None => false,
            BoundarySet::Full => true,
            BoundarySet::Arc(a) => a.contains(x),
        }
    }

    fn endpoints(&self) -> Vec<Endpoint> {
        match self {
            BoundarySet::Arc(a) => vec![a.start.clone(), a.end.clone()],
            _ => Vec::new(),
        }
    }

    fn mapped(&self, m: &MoebiusMap) -> BoundarySet {
        match self {
            BoundarySet::Arc(a) => BoundarySet::Arc(a.mapped(m)),
            other => other.clone(),
        }
    }
}

/// Pieces of `ℝ̄` on which membership in any of `sets` is constant: every
/// breakpoint, then one representative per open gap.
fn pieces(sets: &[&BoundarySet]) -> (Vec<Endpoint>, Vec<Endpoint>) {
    let mut finite: Vec<Rat> = sets
        .iter()
        .flat_map(|s| s.endpoints())
        .filter_map(|e| match e {
            Endpoint::Finite(r) => Some(r),
            Endpoint::Infinity => None,
        })
        .collect();
    finite.sort();
    finite.dedup();
    let mut points: Vec<Endpoint> = finite.iter().cloned().map(Endpoint::Finite).collect();
    points.push(Endpoint::Infinity);
    let gaps = if finite.is_empty() {
        vec![Endpoint::Finite(Rat::zero())]
    } else {
        let two = Rat::from_integer(2.into());
        let mut g: Vec<Endpoint> = finite.windows(2).map(|w| Endpoint::Finite((&w[0] + &w[1]) / &two)).collect();
        g.push(Endpoint::Finite(finite[finite.len() - 1].clone() + Rat::one()));
        g.push(Endpoint::Finite(finite[0].clone() - Rat::one()));
        g
    };
    (points, gaps)
}

/// Which clause of the Grace-pair catalog a region pair matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraceCase {
    /// Projectively convex factors covering `ℂP¹` and meeting in exactly two points.
    TwoPointIntersection,
    /// Closed circular against open circular, covering `ℂP¹`.
    ClosedOpen,
    /// Open circular against closed circular, covering `ℂP¹`.
    OpenClosed,
    /// One variable, projectively convex, covering `ℂP¹`.
    Univariate,
    NotCovered,
}

impl fmt::Display for GraceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraceCase::TwoPointIntersection => "two-point",
            GraceCase::ClosedOpen => "closed-open",
            GraceCase::OpenClosed => "open-closed",
            GraceCase::Univariate => "univariate",
            GraceCase::NotCovered => "not-covered",
        })
    }
}

impl Region {
    pub fn canonical(base: Base) -> Self {
        Region { chart: MoebiusMap::identity(), base, arc: None, complemented: false }
    }

    /// Open upper half-plane.
    pub fn upper() -> Self {
        Self::canonical(Base::OpenHPlus)
    }

    /// Open lower half-plane.
    pub fn lower() -> Self {
        Self::upper().image(&MoebiusMap::reflection())
    }

    /// Open unit disk.
    pub fn disk() -> Self {
        Self::upper().image(&MoebiusMap::cayley())
    }

    /// Open exterior of the unit disk, including `∞`.
    pub fn exterior() -> Self {
        Self::disk().closure().complement()
    }

    /// A boundary arc alone.
    pub fn arc_only(arc: Arc) -> Self {
        Region { arc: Some(arc), ..Self::canonical(Base::Empty) }
    }

    /// `H₊ ∪ arc` in the canonical frame.
    pub fn with_arc(&self, arc: Arc) -> Result<Self> {
        if self.complemented || self.base == Base::ClosedHPlus || self.arc.is_some() {
            return Err(Error::Parse("an arc attaches only to an open half-plane or bare chart".into()));
        }
        Ok(Region { arc: Some(arc), ..self.clone() })
    }

    /// The single point `z`, as the closed degenerate arc at `0` moved onto `z`.
    pub fn point(z: &P1) -> Self {
        let to_zero = match z.affine() {
            Some(a) => MoebiusMap::translation(a),
            None => MoebiusMap::from_ints(0, -1, 1, 0).expect("nonsingular"),
        };
        Region { chart: to_zero, ..Self::arc_only(Arc::closed(Endpoint::Finite(Rat::zero()), Endpoint::Finite(Rat::zero()))) }
    }

    pub fn complement(&self) -> Self {
        Region { complemented: !self.complemented, ..self.clone() }
    }

    pub fn closure(&self) -> Self {
        if self.complemented {
            // closure(ℂP¹ ∖ X) = ℂP¹ ∖ interior(X).
            let base = if self.base == Base::Empty { Base::Empty } else { Base::OpenHPlus };
            return Region { chart: self.chart.clone(), base, arc: None, complemented: true };
        }
        match self.base {
            Base::Empty => Region { arc: self.arc.as_ref().map(Arc::closure), ..self.clone() },
            _ => Region { base: Base::ClosedHPlus, arc: None, ..self.clone() },
        }
    }

    /// `φ · R`.
    pub fn image(&self, phi: &MoebiusMap) -> Self {
        Region { chart: phi.compose(&self.chart), ..self.clone() }
    }

    pub fn locate(&self, z: &P1) -> CanonicalPoint {
        CanonicalPoint::of(&self.chart.adjugate().apply_point(z))
    }

    /// Membership of a canonical-frame location.
    pub fn contains_canonical(&self, w: &CanonicalPoint) -> bool {
        let inside = match w {
            CanonicalPoint::Upper => self.base != Base::Empty,
            CanonicalPoint::Lower => false,
            CanonicalPoint::Boundary(e) => {
                self.base == Base::ClosedHPlus || self.arc.as_ref().is_some_and(|a| a.contains(e))
            }
        };
        inside != self.complemented
    }

    pub fn contains(&self, z: &P1) -> bool {
        self.contains_canonical(&self.locate(z))
    }

    /// Which canonical open half-planes lie in the region: `(upper, lower)`.
    pub fn open_halves(&self) -> (bool, bool) {
        (self.contains_canonical(&CanonicalPoint::Upper), self.contains_canonical(&CanonicalPoint::Lower))
    }

    /// `chart · (H₊ ∪ B)` form, or `None` without interior or with interior on
    /// both sides of the circle.
    pub fn convex_form(&self) -> Option<ConvexForm> {
        let b = match self.base {
            Base::Empty => return None,
            Base::OpenHPlus => self.arc.clone().map_or(BoundarySet::None, BoundarySet::Arc),
            Base::ClosedHPlus => BoundarySet::Full,
        };
        if !self.complemented {
            return Some(ConvexForm { chart: self.chart.clone(), boundary: b });
        }
        let rest = match b {
            BoundarySet::None => BoundarySet::Full,
            BoundarySet::Full => BoundarySet::None,
            BoundarySet::Arc(a) => BoundarySet::Arc(a.complement().negated()),
        };
        Some(ConvexForm { chart: self.chart.compose(&MoebiusMap::reflection()), boundary: rest })
    }

    pub fn is_projectively_convex(&self) -> bool {
        self.convex_form().is_some()
    }

    pub fn is_closed_circular(&self) -> bool {
        self.convex_form().is_some_and(|f| f.boundary == BoundarySet::Full)
    }

    pub fn is_open_circular(&self) -> bool {
        self.convex_form().is_some_and(|f| f.boundary == BoundarySet::None)
    }

    /// A point of the region, deterministic in `seed`.
    pub fn sample(&self, seed: u64) -> Result<P1> {
        self.sample_with(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Rejection sampling over canonical-frame proposals mapped through the chart.
    pub fn sample_with<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<P1> {
        const ATTEMPTS: usize = 512;
        for _ in 0..ATTEMPTS {
            let w = self.propose(rng);
            if self.contains_canonical(&CanonicalPoint::of(&w)) {
                return Ok(self.chart.apply_point(&w).normalized());
            }
        }
        Err(Error::EmptyRegion(ATTEMPTS))
    }

    fn propose<R: Rng + ?Sized>(&self, rng: &mut R) -> P1 {
        match rng.gen_range(0..8) {
            0..=2 => P1::finite(GaussRat::new(random_rat(rng), random_positive(rng))),
            3 | 4 => P1::finite(GaussRat::new(random_rat(rng), -random_positive(rng))),
            5 => P1::real(random_rat(rng)),
            6 => match &self.arc {
                Some(a) if rng.gen_bool(0.5) => a.start.to_p1(),
                Some(a) => a.end.to_p1(),
                None => P1::infinity(),
            },
            _ => match &self.arc {
                Some(a) => arc_interior_point(a, rng).to_p1(),
                None => P1::real(random_rat(rng)),
            },
        }
    }
}

fn random_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(-24i64..=24).into(), rng.gen_range(1i64..=8).into())
}

fn random_positive<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(1i64..=24).into(), rng.gen_range(1i64..=8).into())
}

fn arc_interior_point<R: Rng + ?Sized>(a: &Arc, rng: &mut R) -> Endpoint {
    use Endpoint::{Finite, Infinity};
    let u = Rat::new(rng.gen_range(1i64..16).into(), 16.into());
    match (&a.start, &a.end) {
        (s, e) if s == e => match s {
            Finite(r) => Finite(r + random_positive(rng)),
            Infinity => Finite(random_rat(rng)),
        },
        (Finite(s), Finite(e)) if s < e => Finite(s + (e - s) * u),
        (Finite(s), Infinity) => Finite(s + random_positive(rng)),
        (Infinity, Finite(e)) => Finite(e - random_positive(rng)),
        (Finite(s), Finite(e)) => match rng.gen_range(0..3) {
            0 => Infinity,
            1 => Finite(s + random_positive(rng)),
            _ => Finite(e - random_positive(rng)),
        },
        (Infinity, Infinity) => Infinity,
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut core = match (self.base, &self.arc) {
            (Base::OpenHPlus, None) => "H+".to_string(),
            (Base::ClosedHPlus, _) => "closure(H+)".to_string(),
            (Base::OpenHPlus, Some(a)) => format!("H+|{a}"),
            (Base::Empty, Some(a)) => a.to_string(),
            (Base::Empty, None) => "empty".to_string(),
        };
        if self.complemented {
            core = format!("compl({core})");
        }
        if self.chart != MoebiusMap::identity() {
            let m = &self.chart;
            core = format!("mobius({},{},{},{};{core})", m.a, m.b, m.c, m.d);
        }
        f.write_str(&core)
    }
}

/// `C₁ × ⋯ × C_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionProduct(pub Vec<Region>);

impl RegionProduct {
    pub fn power(r: &Region, m: usize) -> Self {
        RegionProduct(vec![r.clone(); m])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, z: &ProjPoint) -> bool {
        z.arity() == self.arity() && self.0.iter().zip(&z.0).all(|(r, p)| r.contains(p))
    }

    pub fn sample_with<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<ProjPoint> {
        Ok(ProjPoint(self.0.iter().map(|r| r.sample_with(rng)).collect::<Result<_>>()?))
    }

    pub fn sample(&self, seed: u64) -> Result<ProjPoint> {
        self.sample_with(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn complement_each(&self) -> Self {
        RegionProduct(self.0.iter().map(Region::complement).collect())
    }
}

impl fmt::Display for RegionProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Region::to_string).collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Union/intersection data of one factor pair expressed in `c`'s frame.
struct FactorPair {
    covers: bool,
    /// `Some(k)` if the intersection is finite with `k` points.
    meet_points: Option<usize>,
    c_full: bool,
    c_none: bool,
    b_full: bool,
    b_none: bool,
}

fn factor_pair(c: &Region, b: &Region) -> Option<FactorPair> {
    let fc = c.convex_form()?;
    let fb = b.convex_form()?;
    let n = fc.chart.adjugate().compose(&fb.chart).real_form()?;
    let opposite = n.det().re.is_negative();
    let bb = fb.boundary.mapped(&n);
    let (points, gaps) = pieces(&[&fc.boundary, &bb]);
    let in_union = |e: &Endpoint| fc.boundary.contains(e) || bb.contains(e);
    let in_meet = |e: &Endpoint| fc.boundary.contains(e) && bb.contains(e);
    let covers = opposite && points.iter().chain(&gaps).all(in_union);
    let meet_points = if !opposite || gaps.iter().any(in_meet) {
        None
    } else {
        Some(points.iter().filter(|e| in_meet(e)).count())
    };
    Some(FactorPair {
        covers,
        meet_points,
        c_full: fc.boundary == BoundarySet::Full,
        c_none: fc.boundary == BoundarySet::None,
        b_full: fb.boundary == BoundarySet::Full,
        b_none: fb.boundary == BoundarySet::None,
    })
}

/// Matches `(A, B)` against the Grace-pair catalog. Only pairs sharing the
/// same boundary circle per factor are recognized; anything else is
/// `NotCovered`, which makes no claim either way.
pub fn classify_grace_pair(a: &RegionProduct, b: &RegionProduct) -> GraceCase {
    if a.arity() != b.arity() || a.arity() == 0 {
        return GraceCase::NotCovered;
    }
    let Some(pairs) = a.0.iter().zip(&b.0).map(|(c, b)| factor_pair(c, b)).collect::<Option<Vec<_>>>() else {
        return GraceCase::NotCovered;
    };
    if !pairs.iter().all(|p| p.covers) {
        return GraceCase::NotCovered;
    }
    if pairs.iter().all(|p| p.meet_points == Some(2)) {
        GraceCase::TwoPointIntersection
    } else if pairs.iter().all(|p| p.c_full && p.b_none) {
        GraceCase::ClosedOpen
    } else if pairs.iter().all(|p| p.c_none && p.b_full) {
        GraceCase::OpenClosed
    } else if pairs.len() == 1 {
        GraceCase::Univariate
    } else {
        GraceCase::NotCovered
    }
}

/// The set `H₊ ∪ [0, ∞]`.
pub fn upper_with_positive_ray() -> Region {
    Region::upper()
        .with_arc(Arc::closed(Endpoint::Finite(Rat::zero()), Endpoint::Infinity))
        .expect("open base")
}

/// The set `H₋ ∪ [−∞, 0]`.
pub fn lower_with_negative_ray() -> Region {
    Region::lower()
        .with_arc(Arc::closed(Endpoint::Finite(Rat::zero()), Endpoint::Infinity))
        .expect("open base")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn pt(re: i64, im: i64) -> P1 {
        P1::finite(GaussRat::ints(re, im))
    }

    #[test]
    fn half_plane_membership() {
        let h = Region::upper();
        assert!(h.contains(&pt(0, 1)));
        assert!(!h.contains(&pt(0, -1)));
        assert!(!h.contains(&pt(3, 0)));
        assert!(!h.contains(&P1::infinity()));
        assert!(h.closure().contains(&P1::infinity()));
        let c = h.complement();
        assert!(c.contains(&pt(0, -1)) && c.contains(&pt(0, 0)) && !c.contains(&pt(0, 1)));
        assert!(Region::lower().contains(&pt(1, -2)));
    }

    #[test]
    fn ray_region() {
        let c = upper_with_positive_ray();
        assert!(c.contains(&pt(0, 0)));
        assert!(c.contains(&pt(5, 0)));
        assert!(c.contains(&P1::infinity()));
        assert!(!c.contains(&pt(-1, 0)));
        let nc = c.complement();
        assert!(nc.contains(&pt(-1, 0)) && nc.contains(&pt(2, -1)));
        assert!(!nc.contains(&pt(0, 0)) && !nc.contains(&P1::infinity()));
        let l = lower_with_negative_ray();
        assert!(l.contains(&pt(-3, 0)) && l.contains(&pt(0, 0)) && !l.contains(&pt(3, 0)));
    }

    #[test]
    fn disks() {
        let d = Region::disk();
        assert!(d.contains(&pt(0, 0)));
        assert!(!d.contains(&pt(1, 0)));
        assert!(d.closure().contains(&pt(1, 0)));
        assert!(d.closure().contains(&P1::finite(GaussRat::new(ratio(3, 5), ratio(4, 5)))));
        let e = Region::exterior();
        assert!(e.contains(&pt(2, 0)) && e.contains(&P1::infinity()));
        assert!(!e.contains(&pt(1, 0)) && !e.contains(&pt(0, 0)));
        assert!(Region::upper().image(&MoebiusMap::cayley()).contains(&MoebiusMap::cayley().apply_point(&pt(0, 1))));
    }

    #[test]
    fn translated_arc() {
        let a = Region::arc_only(Arc::closed(Endpoint::Finite(rat(0)), Endpoint::Finite(rat(1))));
        let t = a.image(&MoebiusMap::translation(GaussRat::int(1)));
        assert!(t.contains(&pt(1, 0)) && t.contains(&pt(2, 0)));
        assert!(!t.contains(&pt(0, 0)) && !t.contains(&pt(3, 0)));
    }

    #[test]
    fn wrapped_arc() {
        let a = Arc::closed(Endpoint::Finite(rat(2)), Endpoint::Finite(rat(-1)));
        assert!(a.contains(&Endpoint::Infinity));
        assert!(a.contains(&Endpoint::Finite(rat(5))) && a.contains(&Endpoint::Finite(rat(-4))));
        assert!(!a.contains(&Endpoint::Finite(rat(0))));
        let c = a.complement();
        assert!(c.contains(&Endpoint::Finite(rat(0))) && !c.contains(&Endpoint::Finite(rat(2))));
    }

    #[test]
    fn classification() {
        let c = RegionProduct::power(&upper_with_positive_ray(), 2);
        let b = RegionProduct::power(&lower_with_negative_ray(), 2);
        assert_eq!(classify_grace_pair(&c, &b), GraceCase::TwoPointIntersection);
        let cd = RegionProduct(vec![Region::disk().closure()]);
        let oe = RegionProduct(vec![Region::exterior()]);
        assert_eq!(classify_grace_pair(&cd, &oe), GraceCase::ClosedOpen);
        assert_eq!(classify_grace_pair(&oe, &cd), GraceCase::OpenClosed);
        let mixed_a = RegionProduct(vec![Region::disk().closure(), Region::disk(), Region::disk()]);
        let mixed_b = RegionProduct(vec![Region::exterior(), Region::exterior().closure(), Region::exterior().closure()]);
        assert_eq!(classify_grace_pair(&mixed_a, &mixed_b), GraceCase::NotCovered);
        let u = RegionProduct(vec![upper_with_positive_ray()]);
        let v = RegionProduct(vec![Region::upper().complement()]);
        assert_eq!(classify_grace_pair(&u, &v), GraceCase::Univariate);
        let same = RegionProduct(vec![Region::upper()]);
        assert_eq!(classify_grace_pair(&same, &same), GraceCase::NotCovered);
    }

    #[test]
    fn sampling_respects_membership() {
        for r in [Region::upper(), Region::exterior(), Region::disk().closure(), upper_with_positive_ray().complement()] {
            for seed in 0..50 {
                assert!(r.contains(&r.sample(seed).unwrap()), "{r} seed {seed}");
            }
        }
        let a = Region::arc_only(Arc::closed(Endpoint::Finite(rat(0)), Endpoint::Finite(rat(1))));
        for seed in 0..50 {
            let z = a.sample(seed).unwrap().affine().unwrap();
            assert!(z.im.is_zero() && z.re >= rat(0) && z.re <= rat(1));
        }
        assert!(Region::arc_only(Arc::open(Endpoint::Finite(rat(0)), Endpoint::Finite(rat(0)))).complement().sample(1).is_ok());
    }

    #[test]
    fn point_region() {
        let p = Region::point(&P1::real(rat(1)));
        assert!(p.contains(&pt(1, 0)));
        assert!(!p.contains(&pt(2, 0)) && !p.contains(&pt(1, 1)));
        let inf = Region::point(&P1::infinity());
        assert!(inf.contains(&P1::infinity()) && !inf.contains(&pt(0, 0)));
    }
}
