//! Named, runtime-selectable criteria and area formulas.
//!
//! Each theorem is a strategy object carrying both its formula side and its
//! construction-oracle side, so callers (the CLI, the fuzzer) pick one by
//! name and run either.

use std::fmt;

use crate::error::{Error, Result};
use crate::projective::{collinear, concurrent, Line, ProjPoint, Triangle};
use crate::routh::{self, AreaRatio, ClearedArea};
use crate::theorems::{self, CevianRatios, SixRatios};

/// Which ratio tuple a strategy consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cevian,
    SixPoint,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cevian => "cevian (d, e, f)",
            Family::SixPoint => "six-point (a+, a-, b+, b-, c+, c-)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ratios {
    Cevian(CevianRatios),
    Six(SixRatios),
}

impl Ratios {
    pub fn family(&self) -> Family {
        match self {
            Ratios::Cevian(_) => Family::Cevian,
            Ratios::Six(_) => Family::SixPoint,
        }
    }

    fn cevian(&self, mode: &str) -> Result<&CevianRatios> {
        match self {
            Ratios::Cevian(r) => Ok(r),
            Ratios::Six(_) => Err(family_mismatch(mode, Family::Cevian)),
        }
    }

    fn six(&self, mode: &str) -> Result<&SixRatios> {
        match self {
            Ratios::Six(r) => Ok(r),
            Ratios::Cevian(_) => Err(family_mismatch(mode, Family::SixPoint)),
        }
    }
}

fn family_mismatch(mode: &str, wanted: Family) -> Error {
    Error::Usage(format!("ratios: mode {mode} expects {wanted} ratios"))
}

/// A concurrence or collinearity criterion.
pub trait Criterion: Send + Sync {
    fn name(&self) -> &'static str;
    fn family(&self) -> Family;
    fn description(&self) -> &'static str;
    /// The formula side: an exact predicate on the ratios alone.
    fn holds(&self, ratios: &Ratios) -> Result<bool>;
    /// The construction side on a concrete triangle. Configurations with an
    /// undefined line, coincident lines or coincident points yield
    /// [`Error::DegenerateConfiguration`].
    fn oracle(&self, triangle: &Triangle, ratios: &Ratios) -> Result<bool>;
}

/// A signed area-ratio formula.
pub trait AreaFormula: Send + Sync {
    fn name(&self) -> &'static str;
    fn family(&self) -> Family;
    fn description(&self) -> &'static str;
    fn cleared(&self, ratios: &Ratios) -> Result<ClearedArea>;
    /// Derived-triangle vertices, in factor order.
    fn vertices(&self, triangle: &Triangle, ratios: &Ratios) -> Result<[ProjPoint; 3]>;

    fn ratio(&self, ratios: &Ratios) -> Result<AreaRatio> {
        Ok(self.cleared(ratios)?.ratio())
    }

    fn oracle(&self, triangle: &Triangle, ratios: &Ratios) -> Result<AreaRatio> {
        Ok(routh::oracle_area_ratio(
            triangle,
            &self.vertices(triangle, ratios)?,
        ))
    }
}

fn concurrence_oracle(lines: &[Line; 3]) -> Result<bool> {
    let [l1, l2, l3] = lines;
    if l1 == l2 || l2 == l3 || l1 == l3 {
        return Err(Error::DegenerateConfiguration(
            "two of the three lines coincide".into(),
        ));
    }
    Ok(concurrent(l1, l2, l3))
}

fn collinearity_oracle(points: &[ProjPoint; 3]) -> Result<bool> {
    let [p1, p2, p3] = points;
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(Error::DegenerateConfiguration(
            "two of the three points coincide".into(),
        ));
    }
    Ok(collinear(p1, p2, p3))
}

pub struct Ceva;
pub struct Menelaus;
pub struct SixPointConcurrence;
pub struct SixPointCollinearity;

impl Criterion for Ceva {
    fn name(&self) -> &'static str {
        "ceva"
    }
    fn family(&self) -> Family {
        Family::Cevian
    }
    fn description(&self) -> &'static str {
        "lines AD, BE, CF are concurrent"
    }
    fn holds(&self, ratios: &Ratios) -> Result<bool> {
        Ok(theorems::ceva_holds(ratios.cevian(self.name())?))
    }
    fn oracle(&self, triangle: &Triangle, ratios: &Ratios) -> Result<bool> {
        concurrence_oracle(&routh::cevian_lines(triangle, ratios.cevian(self.name())?)?)
    }
}

impl Criterion for Menelaus {
    fn name(&self) -> &'static str {
        "menelaus"
    }
    fn family(&self) -> Family {
        Family::Cevian
    }
    fn description(&self) -> &'static str {
        "points D, E, F are collinear"
    }
    fn holds(&self, ratios: &Ratios) -> Result<bool> {
        Ok(theorems::menelaus_holds(ratios.cevian(self.name())?))
    }
    fn oracle(&self, triangle: &Triangle, ratios: &Ratios) -> Result<bool> {
        collinearity_oracle(&routh::menelaus_points(
            triangle,
            ratios.cevian(self.name())?,
        )?)
    }
}

impl Criterion for SixPointConcurrence {
    fn name(&self) -> &'static str {
        "concurrence"
    }
    fn family(&self) -> Family {
        Family::SixPoint
    }
    fn description(&self) -> &'static str {
        "lines B+C-, C+A-, A+B- are concurrent"
    }
    fn holds(&self, ratios: &Ratios) -> Result<bool> {
        Ok(theorems::sixpoint_concurrence_holds(
            ratios.six(self.name())?,
        ))
    }
    fn oracle(&self, triangle: &Triangle, ratios: &Ratios) -> Result<bool> {
        concurrence_oracle(&routh::edge_lines(triangle, ratios.six(self.name())?)?)
    }
}

impl Criterion for SixPointCollinearity {
    fn name(&self) -> &'static str {
        "collinearity"
    }
    fn family(&self) -> Family {
        Family::SixPoint
    }
    fn description(&self) -> &'static str {
        "hat-points B-C+, C-A+, A-B+ are collinear"
    }
    fn holds(&self, ratios: &Ratios) -> Result<bool> {
        Ok(theorems::sixpoint_collinearity_holds(
            ratios.six(self.name())?,
        ))
    }
    fn oracle(&self, triangle: &Triangle, ratios: &Ratios) -> Result<bool> {
        collinearity_oracle(&routh::vertex_triangle_vertices(
            triangle,
            ratios.six(self.name())?,
        )?)
    }
}

pub struct CevianTriangle;
pub struct MenelausTriangle;
pub struct SixPointEdgeTriangle;
pub struct SixPointVertexTriangle;

impl AreaFormula for CevianTriangle {
    fn name(&self) -> &'static str {
        "cevian"
    }
    fn family(&self) -> Family {
        Family::Cevian
    }
    fn description(&self) -> &'static str {
        "triangle with edge-lines AD, BE, CF"
    }
    fn cleared(&self, ratios: &Ratios) -> Result<ClearedArea> {
        Ok(routh::routh_cevian_cleared(ratios.cevian(self.name())?))
    }
    fn vertices(&self, triangle: &Triangle, ratios: &Ratios) -> Result<[ProjPoint; 3]> {
        routh::cevian_triangle_vertices(triangle, ratios.cevian(self.name())?)
    }
}

impl AreaFormula for MenelausTriangle {
    fn name(&self) -> &'static str {
        "menelaus-triangle"
    }
    fn family(&self) -> Family {
        Family::Cevian
    }
    fn description(&self) -> &'static str {
        "triangle with vertices D, E, F"
    }
    fn cleared(&self, ratios: &Ratios) -> Result<ClearedArea> {
        Ok(routh::routh_menelaus_cleared(ratios.cevian(self.name())?))
    }
    fn vertices(&self, triangle: &Triangle, ratios: &Ratios) -> Result<[ProjPoint; 3]> {
        routh::menelaus_points(triangle, ratios.cevian(self.name())?)
    }
}

impl AreaFormula for SixPointEdgeTriangle {
    fn name(&self) -> &'static str {
        "sixpoint-edges"
    }
    fn family(&self) -> Family {
        Family::SixPoint
    }
    fn description(&self) -> &'static str {
        "triangle with edge-lines B+C-, C+A-, A+B-"
    }
    fn cleared(&self, ratios: &Ratios) -> Result<ClearedArea> {
        Ok(routh::sixpoint_edge_cleared(ratios.six(self.name())?))
    }
    fn vertices(&self, triangle: &Triangle, ratios: &Ratios) -> Result<[ProjPoint; 3]> {
        routh::edge_triangle_vertices(triangle, ratios.six(self.name())?)
    }
}

impl AreaFormula for SixPointVertexTriangle {
    fn name(&self) -> &'static str {
        "sixpoint-vertices"
    }
    fn family(&self) -> Family {
        Family::SixPoint
    }
    fn description(&self) -> &'static str {
        "triangle with vertices B-C+, C-A+, A-B+"
    }
    fn cleared(&self, ratios: &Ratios) -> Result<ClearedArea> {
        Ok(routh::sixpoint_vertex_cleared(ratios.six(self.name())?))
    }
    fn vertices(&self, triangle: &Triangle, ratios: &Ratios) -> Result<[ProjPoint; 3]> {
        routh::vertex_triangle_vertices(triangle, ratios.six(self.name())?)
    }
}

/// Strategies registered by name.
#[derive(Default)]
pub struct Registry {
    criteria: Vec<Box<dyn Criterion>>,
    areas: Vec<Box<dyn AreaFormula>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The four criteria and four area formulas this crate implements.
    pub fn builtin() -> Self {
        let mut r = Self::new();
        r.register_criterion(Box::new(Ceva));
        r.register_criterion(Box::new(Menelaus));
        r.register_criterion(Box::new(SixPointConcurrence));
        r.register_criterion(Box::new(SixPointCollinearity));
        r.register_area(Box::new(CevianTriangle));
        r.register_area(Box::new(MenelausTriangle));
        r.register_area(Box::new(SixPointEdgeTriangle));
        r.register_area(Box::new(SixPointVertexTriangle));
        r
    }

    /// Registers a criterion, replacing any existing one with the same name.
    pub fn register_criterion(&mut self, c: Box<dyn Criterion>) {
        self.criteria.retain(|x| x.name() != c.name());
        self.criteria.push(c);
    }

    pub fn register_area(&mut self, a: Box<dyn AreaFormula>) {
        self.areas.retain(|x| x.name() != a.name());
        self.areas.push(a);
    }

    pub fn criterion(&self, name: &str) -> Option<&dyn Criterion> {
        self.criteria
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn area(&self, name: &str) -> Option<&dyn AreaFormula> {
        self.areas
            .iter()
            .find(|a| a.name() == name)
            .map(|a| a.as_ref())
    }

    pub fn criteria(&self) -> impl Iterator<Item = &dyn Criterion> {
        self.criteria.iter().map(|c| c.as_ref())
    }

    pub fn areas(&self) -> impl Iterator<Item = &dyn AreaFormula> {
        self.areas.iter().map(|a| a.as_ref())
    }

    pub fn criterion_names(&self) -> Vec<&'static str> {
        self.criteria().map(|c| c.name()).collect()
    }

    pub fn area_names(&self) -> Vec<&'static str> {
        self.areas().map(|a| a.name()).collect()
    }
}
