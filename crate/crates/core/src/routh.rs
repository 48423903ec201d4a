//! Signed area ratios of the triangles cut out by cevians and edge points.
//!
//! Each formula is evaluated in cleared integer form as a numerator and three
//! denominator factors, one per vertex of the derived triangle. Vertex order
//! is fixed: the vertex with index `i` is the one whose factor is `i`, and
//! the geometric constructions below list vertices in that same order, so
//! signs compare directly.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cleared::{self, Term};
use crate::error::{Error, Result};
use crate::number::{ProjRatio, Rational};
use crate::projective::{join, meet, section_point, Line, ProjPoint, Triangle};
use crate::theorems::{self, CevianRatios, Component, SixRatios};

/// Class of an [`AreaRatio`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AreaClass {
    Finite,
    Unbounded,
    Indeterminate,
}

/// Signed ratio of a derived triangle's area to the reference area.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AreaRatio {
    Finite(Rational),
    /// Zero denominator: a vertex at infinity.
    Unbounded,
    /// The formula evaluates to `0/0`.
    Indeterminate,
}

impl AreaRatio {
    pub fn from_cleared(numerator: BigInt, denominator: BigInt) -> Self {
        match (numerator.is_zero(), denominator.is_zero()) {
            (true, true) => AreaRatio::Indeterminate,
            (false, true) => AreaRatio::Unbounded,
            _ => AreaRatio::Finite(Rational::new(numerator, denominator)),
        }
    }

    pub fn class(&self) -> AreaClass {
        match self {
            AreaRatio::Finite(_) => AreaClass::Finite,
            AreaRatio::Unbounded => AreaClass::Unbounded,
            AreaRatio::Indeterminate => AreaClass::Indeterminate,
        }
    }

    /// The value as a projective ratio; unbounded is `∞`.
    pub fn value(&self) -> Option<ProjRatio> {
        match self {
            AreaRatio::Finite(r) => Some(ProjRatio::from_rational(r)),
            AreaRatio::Unbounded => Some(ProjRatio::infinity()),
            AreaRatio::Indeterminate => None,
        }
    }
}

/// A formula in cleared form: `numerator / (factors[0]·factors[1]·factors[2])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedArea {
    pub numerator: BigInt,
    /// Denominator factors in vertex order.
    pub factors: [BigInt; 3],
}

impl ClearedArea {
    pub fn denominator(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn ratio(&self) -> AreaRatio {
        AreaRatio::from_cleared(self.numerator.clone(), self.denominator())
    }
}

use Component::{AMinus as AM, APlus as AP, BMinus as BM, BPlus as BP, CMinus as CM, CPlus as CP};

/// `1 - a+a- + b-(1 + a-) + c+(1 + a+)` over `[a+, a-, b-, c+]`.
const EDGE_FACTOR: [Term; 6] = [
    (1, 0),
    (-1, 0b0011),
    (1, 0b0100),
    (1, 0b0110),
    (1, 0b1000),
    (1, 0b1001),
];
/// Barycentric weights `(1 - a-a+, c+ + a-b-, b- + a+c+)` of the first edge
/// vertex, over `[a+, a-, b-, c+]`.
const EDGE_WEIGHTS: [&[Term]; 3] = [
    &[(1, 0), (-1, 0b0011)],
    &[(1, 0b1000), (1, 0b0110)],
    &[(1, 0b0100), (1, 0b1001)],
];
/// Variables of each edge vertex; cyclic images of the first.
const EDGE_VARS: [[Component; 4]; 3] = [[AP, AM, BM, CP], [BP, BM, CM, AP], [CP, CM, AM, BP]];

/// `1 + c+ + b-` over `[c+, b-]`.
const VERTEX_FACTOR: [Term; 3] = [(1, 0), (1, 0b01), (1, 0b10)];
/// Weights `(1, c+, b-)` of the first hat-point.
const VERTEX_WEIGHTS: [&[Term]; 3] = [&[(1, 0)], &[(1, 0b01)], &[(1, 0b10)]];
const VERTEX_VARS: [[Component; 2]; 3] = [[CP, BM], [AP, CM], [BP, AM]];

fn pick<'a, const N: usize>(r: &'a SixRatios, vars: &[Component; N]) -> [&'a ProjRatio; N] {
    vars.map(|c| r.get(c))
}

/// `(def - 1)² / ((1 + f + fd)(1 + d + de)(1 + e + ef))`, factors in
/// the vertex order of [`cevian_triangle_vertices`].
pub fn routh_cevian_cleared(r: &CevianRatios) -> ClearedArea {
    let inner = theorems::ceva_cleared(r);
    // 1 + x + xy over [x, y]
    let factor: [Term; 3] = [(1, 0), (1, 0b01), (1, 0b11)];
    ClearedArea {
        numerator: &inner * &inner,
        factors: [
            cleared::eval(&[&r.f, &r.d], &factor),
            cleared::eval(&[&r.d, &r.e], &factor),
            cleared::eval(&[&r.e, &r.f], &factor),
        ],
    }
}

/// `(def + 1) / ((1 + d)(1 + e)(1 + f))`, factors in order `D, E, F`.
pub fn routh_menelaus_cleared(r: &CevianRatios) -> ClearedArea {
    let factor: [Term; 2] = [(1, 0), (1, 1)];
    ClearedArea {
        numerator: theorems::menelaus_cleared(r),
        factors: [
            cleared::eval(&[&r.d], &factor),
            cleared::eval(&[&r.e], &factor),
            cleared::eval(&[&r.f], &factor),
        ],
    }
}

/// Six-point edge-line triangle. The inner numerator is cleared over all six
/// ratios and squared; each factor is cleared over its four ratios, so every
/// ratio has degree two above and below.
pub fn sixpoint_edge_cleared(r: &SixRatios) -> ClearedArea {
    let inner = theorems::concurrence_cleared(r);
    ClearedArea {
        numerator: &inner * &inner,
        factors: EDGE_VARS.map(|vars| cleared::eval(&pick(r, &vars), &EDGE_FACTOR)),
    }
}

/// Six-point hat-point triangle.
pub fn sixpoint_vertex_cleared(r: &SixRatios) -> ClearedArea {
    ClearedArea {
        numerator: theorems::collinearity_cleared(r),
        factors: VERTEX_VARS.map(|vars| cleared::eval(&pick(r, &vars), &VERTEX_FACTOR)),
    }
}

/// Area of the triangle with edge-lines `AD`, `BE`, `CF`.
pub fn routh_cevian_triangle_ratio(r: &CevianRatios) -> AreaRatio {
    routh_cevian_cleared(r).ratio()
}

/// Area of the triangle `DEF`.
pub fn routh_menelaus_triangle_ratio(r: &CevianRatios) -> AreaRatio {
    routh_menelaus_cleared(r).ratio()
}

/// Area of the triangle with edge-lines `B+C-`, `C+A-`, `A+B-`.
pub fn sixpoint_edge_triangle_ratio(r: &SixRatios) -> AreaRatio {
    sixpoint_edge_cleared(r).ratio()
}

/// Area of the triangle of hat-points `B-C+`, `C-A+`, `A-B+`.
pub fn sixpoint_vertex_triangle_ratio(r: &SixRatios) -> AreaRatio {
    sixpoint_vertex_cleared(r).ratio()
}

/// The six edge points of a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixPoints {
    pub a_plus: ProjPoint,
    pub a_minus: ProjPoint,
    pub b_plus: ProjPoint,
    pub b_minus: ProjPoint,
    pub c_plus: ProjPoint,
    pub c_minus: ProjPoint,
}

impl SixPoints {
    pub fn get(&self, c: Component) -> &ProjPoint {
        match c {
            Component::APlus => &self.a_plus,
            Component::AMinus => &self.a_minus,
            Component::BPlus => &self.b_plus,
            Component::BMinus => &self.b_minus,
            Component::CPlus => &self.c_plus,
            Component::CMinus => &self.c_minus,
        }
    }
}

/// Places the six points, each with its own edge orientation:
/// `A+` on `B→C`, `A-` on `C→B`, `B+` on `C→A`, `B-` on `A→C`, `C+` on
/// `A→B`, `C-` on `B→A`.
pub fn construct_six_points(t: &Triangle, r: &SixRatios) -> Result<SixPoints> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    Ok(SixPoints {
        a_plus: section_point(b, c, &r.a_plus)?,
        a_minus: section_point(c, b, &r.a_minus)?,
        b_plus: section_point(c, a, &r.b_plus)?,
        b_minus: section_point(a, c, &r.b_minus)?,
        c_plus: section_point(a, b, &r.c_plus)?,
        c_minus: section_point(b, a, &r.c_minus)?,
    })
}

fn join_named(p: &ProjPoint, q: &ProjPoint, name: &str) -> Result<Line> {
    join(p, q).map_err(|_| Error::DegenerateConfiguration(format!("line {name} is undefined")))
}

fn meet_named(l1: &Line, l2: &Line, name: &str) -> Result<ProjPoint> {
    meet(l1, l2)
        .map_err(|_| Error::DegenerateConfiguration(format!("lines meeting at {name} coincide")))
}

/// Vertex `i` of a triangle bounded by `lines` is the meet of the two lines
/// other than `lines[i]`.
fn triangle_of_lines(lines: &[Line; 3], names: [&str; 3]) -> Result<[ProjPoint; 3]> {
    Ok([
        meet_named(&lines[1], &lines[2], names[0])?,
        meet_named(&lines[2], &lines[0], names[1])?,
        meet_named(&lines[0], &lines[1], names[2])?,
    ])
}

/// Lines `B+C-`, `C+A-`, `A+B-`.
pub fn edge_lines(t: &Triangle, r: &SixRatios) -> Result<[Line; 3]> {
    let s = construct_six_points(t, r)?;
    Ok([
        join_named(&s.b_plus, &s.c_minus, "B+C-")?,
        join_named(&s.c_plus, &s.a_minus, "C+A-")?,
        join_named(&s.a_plus, &s.b_minus, "A+B-")?,
    ])
}

/// Cevian pairs whose meets are the hat-points: `(BB-, CC+)`, `(CC-, AA+)`,
/// `(AA-, BB+)`.
pub fn hat_point_lines(t: &Triangle, r: &SixRatios) -> Result<[[Line; 2]; 3]> {
    let s = construct_six_points(t, r)?;
    let (a, b, c) = (t.a(), t.b(), t.c());
    Ok([
        [
            join_named(b, &s.b_minus, "BB-")?,
            join_named(c, &s.c_plus, "CC+")?,
        ],
        [
            join_named(c, &s.c_minus, "CC-")?,
            join_named(a, &s.a_plus, "AA+")?,
        ],
        [
            join_named(a, &s.a_minus, "AA-")?,
            join_named(b, &s.b_plus, "BB+")?,
        ],
    ])
}

/// Vertices of the triangle with edge-lines `B+C-`, `C+A-`, `A+B-`, by
/// pairwise meets. The closed barycentric form is checked against the meets
/// in debug builds.
pub fn edge_triangle_vertices(t: &Triangle, r: &SixRatios) -> Result<[ProjPoint; 3]> {
    let vertices = triangle_of_lines(&edge_lines(t, r)?, ["V_A", "V_B", "V_C"])?;
    debug_assert_eq!(
        edge_triangle_vertices_closed_form(t, r).as_ref(),
        Ok(&vertices)
    );
    Ok(vertices)
}

/// The three hat-points, by meets of cevian pairs.
pub fn vertex_triangle_vertices(t: &Triangle, r: &SixRatios) -> Result<[ProjPoint; 3]> {
    let pairs = hat_point_lines(t, r)?;
    let names = ["B-C+", "C-A+", "A-B+"];
    let mut out = Vec::with_capacity(3);
    for (pair, name) in pairs.iter().zip(names) {
        out.push(meet_named(&pair[0], &pair[1], name)?);
    }
    let vertices: [ProjPoint; 3] = out.try_into().expect("three hat-points");
    debug_assert_eq!(
        vertex_triangle_vertices_closed_form(t, r).as_ref(),
        Ok(&vertices)
    );
    Ok(vertices)
}

/// Places weights computed for vertex `i` (listed starting at vertex `i`
/// and going cyclically) onto `(A, B, C)`.
fn rotate(weights: [BigInt; 3], i: usize) -> [BigInt; 3] {
    let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (k, w) in weights.into_iter().enumerate() {
        out[(i + k) % 3] = w;
    }
    out
}

fn closed_form<const N: usize>(
    t: &Triangle,
    r: &SixRatios,
    vars: &[[Component; N]; 3],
    weights: &[&[Term]; 3],
    names: [&str; 3],
) -> Result<[ProjPoint; 3]> {
    let mut out = Vec::with_capacity(3);
    for (i, name) in names.into_iter().enumerate() {
        let args = pick(r, &vars[i]);
        let w = weights.map(|terms| cleared::eval(&args, terms));
        let point = t.barycentric(&rotate(w, i)).map_err(|_| {
            Error::DegenerateConfiguration(format!("barycentric weights of {name} vanish"))
        })?;
        out.push(point);
    }
    Ok(out.try_into().expect("three vertices"))
}

/// Edge-line triangle vertices from the closed barycentric form
/// `A(1 - a-a+) + B(c+ + a-b-) + C(b- + a+c+)` and its cyclic images.
pub fn edge_triangle_vertices_closed_form(t: &Triangle, r: &SixRatios) -> Result<[ProjPoint; 3]> {
    closed_form(t, r, &EDGE_VARS, &EDGE_WEIGHTS, ["V_A", "V_B", "V_C"])
}

/// Hat-points from the closed form `A + B·c+ + C·b-` and its cyclic images.
pub fn vertex_triangle_vertices_closed_form(t: &Triangle, r: &SixRatios) -> Result<[ProjPoint; 3]> {
    closed_form(
        t,
        r,
        &VERTEX_VARS,
        &VERTEX_WEIGHTS,
        ["B-C+", "C-A+", "A-B+"],
    )
}

/// Points `D` on `B→C`, `E` on `C→A`, `F` on `A→B`.
pub fn menelaus_points(t: &Triangle, r: &CevianRatios) -> Result<[ProjPoint; 3]> {
    Ok([
        section_point(t.b(), t.c(), &r.d)?,
        section_point(t.c(), t.a(), &r.e)?,
        section_point(t.a(), t.b(), &r.f)?,
    ])
}

/// Cevians `AD`, `BE`, `CF`.
pub fn cevian_lines(t: &Triangle, r: &CevianRatios) -> Result<[Line; 3]> {
    let [d, e, f] = menelaus_points(t, r)?;
    Ok([
        join_named(t.a(), &d, "AD")?,
        join_named(t.b(), &e, "BE")?,
        join_named(t.c(), &f, "CF")?,
    ])
}

/// Vertices `CF∧AD`, `AD∧BE`, `BE∧CF` of the cevian triangle; this is the
/// edge-line triangle of the classical embedding.
pub fn cevian_triangle_vertices(t: &Triangle, r: &CevianRatios) -> Result<[ProjPoint; 3]> {
    let [ad, be, cf] = cevian_lines(t, r)?;
    triangle_of_lines(&[be, cf, ad], ["CF^AD", "AD^BE", "BE^CF"])
}

/// Signed area of `vertices` over the area of `t`; unbounded when any
/// vertex is at infinity.
pub fn oracle_area_ratio(t: &Triangle, vertices: &[ProjPoint; 3]) -> AreaRatio {
    match crate::projective::signed_area(&vertices[0], &vertices[1], &vertices[2]) {
        Ok(area) => AreaRatio::Finite(area / t.signed_area()),
        Err(_) => AreaRatio::Unbounded,
    }
}
