//! Homogeneous points and lines over the integers.
//!
//! All predicates are exact determinant tests. This module is the
//! construction oracle the theorem modules are checked against.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{format_rational, ProjRatio, Rational};

type Triple = [BigInt; 3];

fn cross(u: &Triple, v: &Triple) -> Triple {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn dot(u: &Triple, v: &Triple) -> BigInt {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

fn det3(u: &Triple, v: &Triple, w: &Triple) -> BigInt {
    dot(u, &cross(v, w))
}

/// Divides out the content and makes the first nonzero entry (in `order`)
/// positive.
fn canonical(mut t: Triple, order: [usize; 3]) -> Result<Triple> {
    let g = t.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let lead = order.iter().map(|&i| &t[i]).find(|x| !x.is_zero()).unwrap();
    let g = if lead.is_negative() { -g } else { g };
    for x in t.iter_mut() {
        *x = &*x / &g;
    }
    Ok(t)
}

/// A point `(x : y : w)`; `w = 0` is a point at infinity.
///
/// Canonical: primitive, first nonzero among `(w, x, y)` positive, so affine
/// points always carry `w > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint([BigInt; 3]);

/// A line `l·x + m·y + n·w = 0`.
///
/// Canonical: primitive, first nonzero among `(l, m, n)` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line([BigInt; 3]);

const POINT_ORDER: [usize; 3] = [2, 0, 1];
const LINE_ORDER: [usize; 3] = [0, 1, 2];

impl ProjPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, w: impl Into<BigInt>) -> Result<Self> {
        Self::from_triple([x.into(), y.into(), w.into()])
    }

    fn from_triple(t: Triple) -> Result<Self> {
        canonical(t, POINT_ORDER).map(Self)
    }

    /// The affine point `(x, y)`.
    pub fn affine(x: &Rational, y: &Rational) -> Self {
        let t = [
            x.numer() * y.denom(),
            y.numer() * x.denom(),
            x.denom() * y.denom(),
        ];
        Self::from_triple(t).expect("w is nonzero")
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(x, y, 1).expect("w is nonzero")
    }

    pub fn x(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn y(&self) -> &BigInt {
        &self.0[1]
    }

    pub fn w(&self) -> &BigInt {
        &self.0[2]
    }

    pub fn is_infinite(&self) -> bool {
        self.0[2].is_zero()
    }

    /// Affine coordinates, or `None` at infinity.
    pub fn coords(&self) -> Option<(Rational, Rational)> {
        if self.is_infinite() {
            return None;
        }
        let w = &self.0[2];
        Some((
            Rational::new(self.0[0].clone(), w.clone()),
            Rational::new(self.0[1].clone(), w.clone()),
        ))
    }

    pub fn triple(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// `true` iff the point lies on `line`.
    pub fn lies_on(&self, line: &Line) -> bool {
        dot(&self.0, &line.0).is_zero()
    }
}

impl fmt::Display for ProjPoint {
    /// Affine points print as `(x, y)`, points at infinity as the direction
    /// triple `(x : y : 0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coords() {
            Some((x, y)) => write!(f, "({}, {})", format_rational(&x), format_rational(&y)),
            None => write!(f, "({} : {} : 0)", self.0[0], self.0[1]),
        }
    }
}

impl Line {
    pub fn new(l: impl Into<BigInt>, m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        Self::from_triple([l.into(), m.into(), n.into()])
    }

    fn from_triple(t: Triple) -> Result<Self> {
        canonical(t, LINE_ORDER).map(Self)
    }

    pub fn coefficients(&self) -> &[BigInt; 3] {
        &self.0
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<Line> {
    Line::from_triple(cross(&p.0, &q.0)).map_err(|_| Error::UndefinedLine)
}

/// The common point of two distinct lines; parallel lines meet at infinity.
pub fn meet(l1: &Line, l2: &Line) -> Result<ProjPoint> {
    ProjPoint::from_triple(cross(&l1.0, &l2.0)).map_err(|_| Error::UndefinedPoint)
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(&p.0, &q.0, &r.0).is_zero()
}

/// Three lines through one point, possibly at infinity (a parallel pencil).
pub fn concurrent(l1: &Line, l2: &Line, l3: &Line) -> bool {
    det3(&l1.0, &l2.0, &l3.0).is_zero()
}

/// Signed area of the triangle `p q r`; positive when counter-clockwise.
pub fn signed_area(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Result<Rational> {
    if p.is_infinite() || q.is_infinite() || r.is_infinite() {
        return Err(Error::NotAffine);
    }
    let det = det3(&p.0, &q.0, &r.0);
    let den = BigInt::from(2) * p.w() * q.w() * r.w();
    Ok(Rational::new(det, den))
}

/// Representatives of `b` and `c` scaled to a common `w`, i.e. the affine
/// points `b/w_b` and `c/w_c` multiplied by `w_b·w_c`.
fn common_scale(b: &ProjPoint, c: &ProjPoint) -> Result<(Triple, Triple)> {
    if b.is_infinite() || c.is_infinite() || b == c {
        return Err(Error::InvalidSegment);
    }
    let bs = [&b.0[0] * c.w(), &b.0[1] * c.w(), b.w() * c.w()];
    let cs = [&c.0[0] * b.w(), &c.0[1] * b.w(), b.w() * c.w()];
    Ok((bs, cs))
}

/// The point `D` on line `BC` with signed ratio `|BD| / |DC| = r`.
///
/// For `r = (p : q)` this is `q·B + p·C` over affine-normalized
/// representatives: `r = 0` gives `B`, `r = ∞` gives `C`, and `r = -1` gives
/// the point at infinity of `BC`.
pub fn section_point(b: &ProjPoint, c: &ProjPoint, r: &ProjRatio) -> Result<ProjPoint> {
    let (bs, cs) = common_scale(b, c)?;
    let t = [0, 1, 2].map(|i| r.q() * &bs[i] + r.p() * &cs[i]);
    Ok(ProjPoint::from_triple(t).expect("B and C are independent"))
}

/// Inverse of [`section_point`]: the ratio `|BD| / |DC|` of a point on `BC`.
pub fn ratio_of_section(b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Result<ProjRatio> {
    let (bs, cs) = common_scale(b, c)?;
    if !collinear(b, c, d) {
        return Err(Error::OffLine);
    }
    // d ~ q·bs + p·cs, so d × cs = q·n and d × bs = -p·n with n = bs × cs.
    let n = cross(&bs, &cs);
    let p = -dot(&cross(&d.0, &bs), &n);
    let q = dot(&cross(&d.0, &cs), &n);
    ProjRatio::new(p, q)
}

/// A non-degenerate reference triangle with affine vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    a: ProjPoint,
    b: ProjPoint,
    c: ProjPoint,
}

impl Triangle {
    pub fn new(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Result<Self> {
        if signed_area(&a, &b, &c)?.is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self { a, b, c })
    }

    /// `A = (0, 0)`, `B = (1, 0)`, `C = (0, 1)`.
    pub fn canonical() -> Self {
        Self::new(
            ProjPoint::from_ints(0, 0),
            ProjPoint::from_ints(1, 0),
            ProjPoint::from_ints(0, 1),
        )
        .expect("canonical triangle is non-degenerate")
    }

    pub fn a(&self) -> &ProjPoint {
        &self.a
    }

    pub fn b(&self) -> &ProjPoint {
        &self.b
    }

    pub fn c(&self) -> &ProjPoint {
        &self.c
    }

    pub fn vertices(&self) -> [&ProjPoint; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn signed_area(&self) -> Rational {
        signed_area(&self.a, &self.b, &self.c).expect("vertices are affine")
    }

    /// The point with (unnormalized) barycentric weights `(α, β, γ)` on
    /// `A, B, C`. Weights summing to zero give a point at infinity.
    pub fn barycentric(&self, weights: &[BigInt; 3]) -> Result<ProjPoint> {
        let [wa, wb, wc] = [self.a.w(), self.b.w(), self.c.w()];
        // Scale each vertex to the common w = wa·wb·wc.
        let scale = [wb * wc, wa * wc, wa * wb];
        let verts = self.vertices();
        let t = [0, 1, 2].map(|i| {
            (0..3)
                .map(|v| &weights[v] * &scale[v] * &verts[v].0[i])
                .fold(BigInt::zero(), |acc, x| acc + x)
        });
        ProjPoint::from_triple(t)
    }

    pub fn transform(&self, map: &AffineMap) -> Self {
        Self::new(map.apply(&self.a), map.apply(&self.b), map.apply(&self.c))
            .expect("invertible maps preserve non-degeneracy")
    }
}

/// An invertible affine map `(x, y) ↦ M·(x, y) + t` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    linear: [[Rational; 2]; 2],
    translation: [Rational; 2],
    // Integer homogeneous matrix proportional to the map.
    homogeneous: [Triple; 3],
}

impl AffineMap {
    pub fn new(linear: [[Rational; 2]; 2], translation: [Rational; 2]) -> Result<Self> {
        let det = &linear[0][0] * &linear[1][1] - &linear[0][1] * &linear[1][0];
        if det.is_zero() {
            return Err(Error::SingularMap);
        }
        let entries = [
            &linear[0][0],
            &linear[0][1],
            &translation[0],
            &linear[1][0],
            &linear[1][1],
            &translation[1],
        ];
        let lcm = entries.iter().fold(BigInt::one(), |l, e| l.lcm(e.denom()));
        let scaled = |r: &Rational| (r * Rational::from_integer(lcm.clone())).to_integer();
        let homogeneous = [
            [scaled(entries[0]), scaled(entries[1]), scaled(entries[2])],
            [scaled(entries[3]), scaled(entries[4]), scaled(entries[5])],
            [BigInt::zero(), BigInt::zero(), lcm.clone()],
        ];
        Ok(Self {
            linear,
            translation,
            homogeneous,
        })
    }

    pub fn identity() -> Self {
        let (o, z) = (Rational::one(), Rational::zero());
        Self::new([[o.clone(), z.clone()], [z.clone(), o]], [z.clone(), z]).unwrap()
    }

    /// Determinant of the linear part.
    pub fn det(&self) -> Rational {
        let m = &self.linear;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn linear(&self) -> &[[Rational; 2]; 2] {
        &self.linear
    }

    pub fn translation(&self) -> &[Rational; 2] {
        &self.translation
    }

    /// Applies the map; points at infinity map to points at infinity.
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let h = &self.homogeneous;
        let t = [0, 1, 2].map(|i| dot(&h[i], &p.0));
        ProjPoint::from_triple(t).expect("invertible map")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, w: i64) -> ProjPoint {
        ProjPoint::new(x, y, w).unwrap()
    }

    fn ln(l: i64, m: i64, n: i64) -> Line {
        Line::new(l, m, n).unwrap()
    }

    fn q(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(pt(2, 4, 2), pt(1, 2, 1));
        assert_eq!(pt(-2, -4, -2), pt(1, 2, 1));
        assert_eq!(pt(-2, 2, 0), pt(1, -1, 0));
        assert_eq!(pt(0, -3, 0), pt(0, 1, 0));
        assert_eq!(ln(-2, 2, 2), ln(1, -1, -1));
        assert_eq!(ProjPoint::new(0, 0, 0), Err(Error::ZeroVector));
        assert_eq!(ProjPoint::affine(&q(2, 3), &q(1, 3)), pt(2, 1, 3));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&pt(0, 0, 1), &pt(1, 0, 1)).unwrap(), ln(0, 1, 0));
        assert_eq!(join(&pt(1, 0, 1), &pt(1, 1, 0)).unwrap(), ln(1, -1, -1));
        assert_eq!(join(&pt(1, 1, 1), &pt(2, 2, 2)), Err(Error::UndefinedLine));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&ln(0, 1, 0), &ln(1, 0, 0)).unwrap(), pt(0, 0, 1));
        // y = x - 1 and y = x + 1
        assert_eq!(meet(&ln(1, -1, -1), &ln(1, -1, 1)).unwrap(), pt(1, 1, 0));
        assert_eq!(meet(&ln(1, 2, 3), &ln(2, 4, 6)), Err(Error::UndefinedPoint));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pt(0, 0, 1), &pt(1, 1, 1), &pt(2, 2, 1)));
        assert!(!collinear(&pt(0, 0, 1), &pt(1, 0, 1), &pt(0, 1, 1)));
        assert!(collinear(&pt(3, 1, 1), &pt(3, 1, 1), &pt(-5, 7, 2)));
    }

    #[test]
    fn concurrent_examples() {
        let (a, b, c) = (pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1));
        let mid =
            |p: &ProjPoint, r: &ProjPoint| section_point(p, r, &ProjRatio::integer(1)).unwrap();
        let medians = [
            join(&a, &mid(&b, &c)).unwrap(),
            join(&b, &mid(&c, &a)).unwrap(),
            join(&c, &mid(&a, &b)).unwrap(),
        ];
        assert!(concurrent(&medians[0], &medians[1], &medians[2]));
        assert!(!concurrent(&ln(0, 1, 0), &ln(1, 0, 0), &ln(1, 1, -1)));
        assert!(concurrent(&ln(0, 1, 0), &ln(0, 1, -1), &ln(0, 1, -2)));
    }

    #[test]
    fn signed_area_examples() {
        let (a, b, c) = (pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1));
        assert_eq!(signed_area(&a, &b, &c).unwrap(), q(1, 2));
        assert_eq!(signed_area(&a, &c, &b).unwrap(), q(-1, 2));
        assert_eq!(
            signed_area(&a, &pt(1, 1, 1), &pt(4, 4, 2)).unwrap(),
            q(0, 1)
        );
        assert_eq!(signed_area(&a, &b, &pt(1, 0, 0)), Err(Error::NotAffine));
    }

    #[test]
    fn section_point_examples() {
        let (b, c) = (pt(1, 0, 1), pt(0, 1, 1));
        let s = |p, qq| section_point(&b, &c, &ProjRatio::new(p, qq).unwrap()).unwrap();
        assert_eq!(s(1, 1), ProjPoint::affine(&q(1, 2), &q(1, 2)));
        assert_eq!(s(-1, 1), pt(1, -1, 0));
        let d = s(1, 2);
        assert_eq!(d, ProjPoint::affine(&q(2, 3), &q(1, 3)));
        // |BD| / |DC| by coordinate subtraction.
        let (dx, _) = d.coords().unwrap();
        let bd = dx.clone() - q(1, 1);
        let dc = q(0, 1) - dx;
        assert_eq!(bd / dc, q(1, 2));
        assert_eq!(s(0, 1), b);
        assert_eq!(s(1, 0), c);
        assert_eq!(
            section_point(&b, &b, &ProjRatio::zero()),
            Err(Error::InvalidSegment)
        );
        assert_eq!(
            section_point(&b, &pt(1, 0, 0), &ProjRatio::zero()),
            Err(Error::InvalidSegment)
        );
    }

    #[test]
    fn ratio_of_section_conventions() {
        // Non-unit w on both endpoints.
        let (b, c) = (pt(3, 1, 2), pt(-4, 5, 3));
        assert_eq!(ratio_of_section(&b, &c, &b).unwrap(), ProjRatio::zero());
        assert_eq!(ratio_of_section(&b, &c, &c).unwrap(), ProjRatio::infinity());
        let at_inf = meet(&join(&b, &c).unwrap(), &Line::new(0, 0, 1).unwrap()).unwrap();
        assert_eq!(
            ratio_of_section(&b, &c, &at_inf).unwrap(),
            ProjRatio::minus_one()
        );
        assert_eq!(ratio_of_section(&b, &c, &pt(0, 0, 1)), Err(Error::OffLine));
        assert_eq!(ratio_of_section(&b, &b, &b), Err(Error::InvalidSegment));
    }

    #[test]
    fn barycentric_matches_section() {
        let t = Triangle::new(pt(1, 2, 3), pt(-5, 1, 2), pt(4, 4, 1)).unwrap();
        let w = [BigInt::zero(), BigInt::from(2), BigInt::from(3)];
        let d = t.barycentric(&w).unwrap();
        // weights 2 on B and 3 on C: |BD|/|DC| = 3/2
        assert_eq!(
            ratio_of_section(t.b(), t.c(), &d).unwrap(),
            ProjRatio::new(3, 2).unwrap()
        );
    }

    #[test]
    fn affine_map_scales_area() {
        let map = AffineMap::new(
            [[q(2, 3), q(1, 1)], [q(-1, 2), q(5, 7)]],
            [q(3, 1), q(-1, 4)],
        )
        .unwrap();
        let t = Triangle::canonical();
        let u = t.transform(&map);
        assert_eq!(u.signed_area(), t.signed_area() * map.det());
        assert!(
            AffineMap::new([[q(1, 1), q(2, 1)], [q(2, 1), q(4, 1)]], [q(0, 1), q(0, 1)]).is_err()
        );
        assert_eq!(map.apply(&pt(1, 0, 0)).w(), &BigInt::zero());
    }
}
