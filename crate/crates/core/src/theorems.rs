//! Concurrence and collinearity criteria on ratio tuples.
//!
//! Every criterion is one integer equality obtained by clearing
//! denominators, so infinite ratios need no limit arguments.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cleared::{self, Term};
use crate::error::{Error, Result};
use crate::number::ProjRatio;

/// Ratios `d = |BD|/|DC|`, `e = |CE|/|EA|`, `f = |AF|/|FB|` of points on the
/// edge-lines opposite `A`, `B`, `C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CevianRatios {
    pub d: ProjRatio,
    pub e: ProjRatio,
    pub f: ProjRatio,
}

impl CevianRatios {
    pub fn new(d: ProjRatio, e: ProjRatio, f: ProjRatio) -> Self {
        Self { d, e, f }
    }

    pub(crate) fn vars(&self) -> [&ProjRatio; 3] {
        [&self.d, &self.e, &self.f]
    }

    pub fn infinite_count(&self) -> usize {
        self.vars().iter().filter(|r| r.is_infinite()).count()
    }
}

/// The six edge ratios. Plus ratios run along `B→C`, `C→A`, `A→B`; minus
/// ratios run the opposite way:
///
/// ```text
/// a+ = |B A+| / |A+ C|    a- = |C A-| / |A- B|
/// b+ = |C B+| / |B+ A|    b- = |A B-| / |B- C|
/// c+ = |A C+| / |C+ B|    c- = |B C-| / |C- A|
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SixRatios {
    pub a_plus: ProjRatio,
    pub a_minus: ProjRatio,
    pub b_plus: ProjRatio,
    pub b_minus: ProjRatio,
    pub c_plus: ProjRatio,
    pub c_minus: ProjRatio,
}

/// Names one of the six ratios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    APlus,
    AMinus,
    BPlus,
    BMinus,
    CPlus,
    CMinus,
}

impl Component {
    pub const ALL: [Component; 6] = [
        Component::APlus,
        Component::AMinus,
        Component::BPlus,
        Component::BMinus,
        Component::CPlus,
        Component::CMinus,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Component::APlus => "a+",
            Component::AMinus => "a-",
            Component::BPlus => "b+",
            Component::BMinus => "b-",
            Component::CPlus => "c+",
            Component::CMinus => "c-",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.key() == key)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl SixRatios {
    pub fn new(
        a_plus: ProjRatio,
        a_minus: ProjRatio,
        b_plus: ProjRatio,
        b_minus: ProjRatio,
        c_plus: ProjRatio,
        c_minus: ProjRatio,
    ) -> Self {
        Self {
            a_plus,
            a_minus,
            b_plus,
            b_minus,
            c_plus,
            c_minus,
        }
    }

    pub fn uniform(r: ProjRatio) -> Self {
        Self::new(r.clone(), r.clone(), r.clone(), r.clone(), r.clone(), r)
    }

    /// Components in [`Component::ALL`] order.
    pub fn vars(&self) -> [&ProjRatio; 6] {
        [
            &self.a_plus,
            &self.a_minus,
            &self.b_plus,
            &self.b_minus,
            &self.c_plus,
            &self.c_minus,
        ]
    }

    pub fn get(&self, c: Component) -> &ProjRatio {
        self.vars()[c.index()]
    }

    pub fn set(&mut self, c: Component, value: ProjRatio) {
        let slot = match c {
            Component::APlus => &mut self.a_plus,
            Component::AMinus => &mut self.a_minus,
            Component::BPlus => &mut self.b_plus,
            Component::BMinus => &mut self.b_minus,
            Component::CPlus => &mut self.c_plus,
            Component::CMinus => &mut self.c_minus,
        };
        *slot = value;
    }

    pub fn infinite_count(&self) -> usize {
        self.vars().iter().filter(|r| r.is_infinite()).count()
    }
}

// Variable bits in Component::ALL order.
const AP: u8 = 1;
const AM: u8 = 2;
const BP: u8 = 4;
const BM: u8 = 8;
const CP: u8 = 16;
const CM: u8 = 32;

/// `a+b+c+ + a-b-c- + a+a- + b+b- + c+c- - 1`; zero iff the lines
/// `B+C-`, `C+A-`, `A+B-` concur.
pub(crate) const CONCURRENCE: [Term; 6] = [
    (1, AP | BP | CP),
    (1, AM | BM | CM),
    (1, AP | AM),
    (1, BP | BM),
    (1, CP | CM),
    (-1, 0),
];

/// `a+b+c+ + a-b-c- - a+a- - b+b- - c+c- + 1`; zero iff the three
/// hat-points are collinear.
pub(crate) const COLLINEARITY: [Term; 6] = [
    (1, AP | BP | CP),
    (1, AM | BM | CM),
    (-1, AP | AM),
    (-1, BP | BM),
    (-1, CP | CM),
    (1, 0),
];

/// `def - 1`
pub(crate) const CEVA: [Term; 2] = [(1, 0b111), (-1, 0)];
/// `def + 1`
pub(crate) const MENELAUS: [Term; 2] = [(1, 0b111), (1, 0)];

/// Ceva's condition with denominators cleared; zero exactly when it holds.
pub fn ceva_cleared(r: &CevianRatios) -> BigInt {
    cleared::eval(&r.vars(), &CEVA)
}

pub fn menelaus_cleared(r: &CevianRatios) -> BigInt {
    cleared::eval(&r.vars(), &MENELAUS)
}

/// The six-point concurrence condition with denominators cleared.
pub fn concurrence_cleared(r: &SixRatios) -> BigInt {
    cleared::eval(&r.vars(), &CONCURRENCE)
}

pub fn collinearity_cleared(r: &SixRatios) -> BigInt {
    cleared::eval(&r.vars(), &COLLINEARITY)
}

/// Lines `AD`, `BE`, `CF` concur: `d·e·f = 1`.
pub fn ceva_holds(r: &CevianRatios) -> bool {
    ceva_cleared(r).is_zero()
}

/// Points `D`, `E`, `F` are collinear: `d·e·f = -1`.
pub fn menelaus_holds(r: &CevianRatios) -> bool {
    menelaus_cleared(r).is_zero()
}

/// Lines `B+C-`, `C+A-`, `A+B-` pass through a common point.
pub fn sixpoint_concurrence_holds(r: &SixRatios) -> bool {
    concurrence_cleared(r).is_zero()
}

/// The hat-points `B-C+`, `C-A+`, `A-B+` lie on a common line.
pub fn sixpoint_collinearity_holds(r: &SixRatios) -> bool {
    collinearity_cleared(r).is_zero()
}

/// Embeds classical ratios with `a+ = d`, `b+ = e`, `c+ = f` and all minus
/// ratios zero, i.e. `A- = C`, `B- = A`, `C- = B`.
pub fn classical_embedding(r: &CevianRatios) -> SixRatios {
    SixRatios::new(
        r.d.clone(),
        ProjRatio::zero(),
        r.e.clone(),
        ProjRatio::zero(),
        r.f.clone(),
        ProjRatio::zero(),
    )
}

/// Which six-point equation to solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SixPointMode {
    Concurrence,
    Collinearity,
}

/// Outcome of [`solve_sixth_ratio`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SixthRatio {
    Unique(ProjRatio),
    /// Every value satisfies the equation.
    Any,
    /// No finite value does. The cleared projective equation is then
    /// satisfied only by `∞`.
    None,
}

/// Five known ratios and one unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialSixRatios {
    pub a_plus: Option<ProjRatio>,
    pub a_minus: Option<ProjRatio>,
    pub b_plus: Option<ProjRatio>,
    pub b_minus: Option<ProjRatio>,
    pub c_plus: Option<ProjRatio>,
    pub c_minus: Option<ProjRatio>,
}

impl PartialSixRatios {
    pub fn from_complete(r: &SixRatios) -> Self {
        Self {
            a_plus: Some(r.a_plus.clone()),
            a_minus: Some(r.a_minus.clone()),
            b_plus: Some(r.b_plus.clone()),
            b_minus: Some(r.b_minus.clone()),
            c_plus: Some(r.c_plus.clone()),
            c_minus: Some(r.c_minus.clone()),
        }
    }

    pub fn without(mut self, c: Component) -> Self {
        *self.slot(c) = None;
        self
    }

    fn slot(&mut self, c: Component) -> &mut Option<ProjRatio> {
        match c {
            Component::APlus => &mut self.a_plus,
            Component::AMinus => &mut self.a_minus,
            Component::BPlus => &mut self.b_plus,
            Component::BMinus => &mut self.b_minus,
            Component::CPlus => &mut self.c_plus,
            Component::CMinus => &mut self.c_minus,
        }
    }

    fn slots(&self) -> [&Option<ProjRatio>; 6] {
        [
            &self.a_plus,
            &self.a_minus,
            &self.b_plus,
            &self.b_minus,
            &self.c_plus,
            &self.c_minus,
        ]
    }

    /// The single missing component.
    pub fn missing(&self) -> Result<Component> {
        let missing: Vec<Component> = Component::ALL
            .into_iter()
            .zip(self.slots())
            .filter(|(_, s)| s.is_none())
            .map(|(c, _)| c)
            .collect();
        match missing.as_slice() {
            [c] => Ok(*c),
            _ => Err(Error::Usage(format!(
                "exactly one ratio must be unspecified, found {}",
                missing.len()
            ))),
        }
    }

    /// Fills the missing component.
    pub fn complete(&self, value: ProjRatio) -> Result<SixRatios> {
        let missing = self.missing()?;
        let mut filled = self.clone();
        *filled.slot(missing) = Some(value);
        let [ap, am, bp, bm, cp, cm] = filled.slots().map(|s| s.clone().unwrap());
        Ok(SixRatios::new(ap, am, bp, bm, cp, cm))
    }
}

/// Solves the chosen six-point equation for the one missing ratio.
///
/// The cleared equation is `α·p + β·q = 0` in the unknown `(p : q)`; `α` and
/// `β` are read off by evaluating at `∞` and at `0`.
pub fn solve_sixth_ratio(known: &PartialSixRatios, mode: SixPointMode) -> Result<SixthRatio> {
    known.missing()?;
    if let Some(c) = Component::ALL
        .into_iter()
        .zip(known.slots())
        .find(|(_, s)| s.as_ref().is_some_and(ProjRatio::is_infinite))
        .map(|(c, _)| c)
    {
        return Err(Error::Usage(format!("given ratio {c} must be finite")));
    }
    let eval = |r: &SixRatios| match mode {
        SixPointMode::Concurrence => concurrence_cleared(r),
        SixPointMode::Collinearity => collinearity_cleared(r),
    };
    let alpha = eval(&known.complete(ProjRatio::infinity())?);
    let beta = eval(&known.complete(ProjRatio::zero())?);
    Ok(match (alpha.is_zero(), beta.is_zero()) {
        (true, true) => SixthRatio::Any,
        (true, false) => SixthRatio::None,
        (false, _) => SixthRatio::Unique(ProjRatio::new(-beta, alpha)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> ProjRatio {
        ProjRatio::new(p, q).unwrap()
    }

    fn n(v: i64) -> ProjRatio {
        ProjRatio::integer(v)
    }

    fn cev(d: ProjRatio, e: ProjRatio, f: ProjRatio) -> CevianRatios {
        CevianRatios::new(d, e, f)
    }

    /// Six ratios listed as (a+, b+, c+, a-, b-, c-).
    fn six_pm(p: [ProjRatio; 3], m: [ProjRatio; 3]) -> SixRatios {
        let [ap, bp, cp] = p;
        let [am, bm, cm] = m;
        SixRatios::new(ap, am, bp, bm, cp, cm)
    }

    #[test]
    fn ceva_examples() {
        assert!(ceva_holds(&cev(n(1), n(1), n(1))));
        assert!(ceva_holds(&cev(n(2), n(3), r(1, 6))));
        assert!(!ceva_holds(&cev(n(1), n(1), n(2))));
    }

    #[test]
    fn menelaus_examples() {
        assert!(menelaus_holds(&cev(n(2), n(2), r(-1, 4))));
        assert!(!menelaus_holds(&cev(n(1), n(1), n(1))));
        assert!(menelaus_holds(&cev(n(-1), r(3, 7), r(7, 3))));
    }

    #[test]
    fn concurrence_examples() {
        assert!(sixpoint_concurrence_holds(&SixRatios::uniform(r(1, 2))));
        assert!(sixpoint_concurrence_holds(&six_pm(
            [n(2), n(1), n(1)],
            [n(1), n(2), r(-5, 3)]
        )));
        let zeros = [ProjRatio::zero(), ProjRatio::zero(), ProjRatio::zero()];
        assert!(sixpoint_concurrence_holds(&six_pm(
            [n(1), n(1), n(1)],
            zeros
        )));
    }

    #[test]
    fn collinearity_examples() {
        let zeros = || [ProjRatio::zero(), ProjRatio::zero(), ProjRatio::zero()];
        assert!(sixpoint_collinearity_holds(&six_pm(
            [n(2), n(3), r(-1, 6)],
            zeros()
        )));
        assert!(sixpoint_collinearity_holds(&SixRatios::uniform(n(1))));
        assert!(!sixpoint_collinearity_holds(&six_pm(
            [n(1), n(1), n(2)],
            zeros()
        )));
    }

    #[test]
    fn embedding_sets_minus_ratios_to_zero() {
        let e = classical_embedding(&cev(n(1), n(1), n(1)));
        assert_eq!(
            e,
            six_pm(
                [n(1), n(1), n(1)],
                [ProjRatio::zero(), ProjRatio::zero(), ProjRatio::zero()]
            )
        );
    }

    #[test]
    fn embedding_reduces_on_special_values() {
        let specials = [
            ProjRatio::zero(),
            ProjRatio::infinity(),
            ProjRatio::minus_one(),
            n(1),
            r(2, 3),
        ];
        for d in &specials {
            for e in &specials {
                for f in &specials {
                    let c = cev(d.clone(), e.clone(), f.clone());
                    let s = classical_embedding(&c);
                    assert_eq!(sixpoint_concurrence_holds(&s), ceva_holds(&c));
                    assert_eq!(sixpoint_collinearity_holds(&s), menelaus_holds(&c));
                }
            }
        }
    }

    #[test]
    fn solve_examples() {
        let known =
            PartialSixRatios::from_complete(&six_pm([n(2), n(1), n(1)], [n(1), n(2), n(0)]))
                .without(Component::CMinus);
        assert_eq!(
            solve_sixth_ratio(&known, SixPointMode::Concurrence).unwrap(),
            SixthRatio::Unique(r(-5, 3))
        );

        let known =
            PartialSixRatios::from_complete(&SixRatios::uniform(n(1))).without(Component::CMinus);
        assert_eq!(
            solve_sixth_ratio(&known, SixPointMode::Collinearity).unwrap(),
            SixthRatio::Any
        );

        // c- has coefficient a-b- + c+ = 1 - 1 = 0; the rest is a+b+c+ + a+a- + b+b- - 1 = -1
        let known =
            PartialSixRatios::from_complete(&six_pm([n(2), n(2), n(-1)], [n(1), n(1), n(0)]))
                .without(Component::CMinus);
        assert_eq!(
            solve_sixth_ratio(&known, SixPointMode::Concurrence).unwrap(),
            SixthRatio::None
        );
        for x in -20..=20 {
            for den in 1..=5 {
                let s = known.complete(r(x, den)).unwrap();
                assert!(!sixpoint_concurrence_holds(&s));
            }
        }
        // ∞ does satisfy the projective equation.
        assert!(sixpoint_concurrence_holds(
            &known.complete(ProjRatio::infinity()).unwrap()
        ));
    }

    #[test]
    fn solve_usage_errors() {
        let full = PartialSixRatios::from_complete(&SixRatios::uniform(n(1)));
        assert!(matches!(
            solve_sixth_ratio(&full, SixPointMode::Concurrence),
            Err(Error::Usage(_))
        ));
        let two = full
            .clone()
            .without(Component::APlus)
            .without(Component::BMinus);
        assert!(matches!(
            solve_sixth_ratio(&two, SixPointMode::Concurrence),
            Err(Error::Usage(_))
        ));
        let mut inf = SixRatios::uniform(n(1));
        inf.set(Component::BPlus, ProjRatio::infinity());
        let inf = PartialSixRatios::from_complete(&inf).without(Component::APlus);
        assert!(matches!(
            solve_sixth_ratio(&inf, SixPointMode::Collinearity),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn component_keys_roundtrip() {
        for c in Component::ALL {
            assert_eq!(Component::from_key(c.key()), Some(c));
        }
        assert_eq!(Component::from_key("d"), None);
    }
}
