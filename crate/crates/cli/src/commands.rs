//! The `check`, `area`, `construct` and `embed` commands.

use sixpoint_core::projective::meet;
use sixpoint_core::routh::{self, AreaClass, AreaRatio};
use sixpoint_core::{
    classical_embedding, AreaFormula, CevianRatios, Component, Criterion, Error, Line, ProjPoint,
    Ratios, Registry, SixRatios, Triangle,
};

use crate::config::{format_triangle, ConfigDoc};
use crate::error::{CliError, Result};
use crate::report::Report;

/// A finished command: its report and whether any non-degenerate
/// formula/oracle disagreement was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub report: Report,
    pub disagreement: bool,
}

pub fn format_area(a: &AreaRatio) -> String {
    match a {
        AreaRatio::Finite(v) => sixpoint_core::number::format_rational(v),
        AreaRatio::Unbounded => "inf".into(),
        AreaRatio::Indeterminate => "indeterminate".into(),
    }
}

pub fn format_class(c: AreaClass) -> &'static str {
    match c {
        AreaClass::Finite => "finite",
        AreaClass::Unbounded => "unbounded",
        AreaClass::Indeterminate => "indeterminate",
    }
}

fn format_points(points: &[ProjPoint]) -> String {
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn echo_ratios(report: &mut Report, ratios: &Ratios) {
    match ratios {
        Ratios::Cevian(r) => {
            report.push("ratios", "cevian");
            report.push("ratio.d", &r.d);
            report.push("ratio.e", &r.e);
            report.push("ratio.f", &r.f);
        }
        Ratios::Six(r) => {
            report.push("ratios", "six-point");
            for c in Component::ALL {
                report.push(format!("ratio.{c}"), r.get(c));
            }
        }
    }
}

fn echo_inputs(command: &str, config: &ConfigDoc) -> Report {
    let mut report = Report::new();
    report.push("command", command);
    if let Some(mode) = &config.mode {
        report.push("mode", mode);
    }
    echo_ratios(&mut report, &config.ratios);
    if let Some(t) = &config.triangle {
        report.push("triangle", format_triangle(t));
    }
    report
}

fn degenerate_reason(e: &Error) -> String {
    match e {
        Error::DegenerateConfiguration(reason) => reason.clone(),
        other => other.to_string(),
    }
}

fn select_criteria<'r>(
    registry: &'r Registry,
    config: &ConfigDoc,
) -> Result<Vec<&'r dyn Criterion>> {
    match &config.mode {
        Some(mode) => registry.criterion(mode).map(|c| vec![c]).ok_or_else(|| {
            CliError::Usage(format!(
                "mode: unknown criterion {mode:?} (expected one of {})",
                registry.criterion_names().join(", ")
            ))
        }),
        None => Ok(registry
            .criteria()
            .filter(|c| c.family() == config.ratios.family())
            .collect()),
    }
}

fn select_areas<'r>(
    registry: &'r Registry,
    config: &ConfigDoc,
) -> Result<Vec<&'r dyn AreaFormula>> {
    match &config.mode {
        Some(mode) => registry.area(mode).map(|a| vec![a]).ok_or_else(|| {
            CliError::Usage(format!(
                "mode: unknown area formula {mode:?} (expected one of {})",
                registry.area_names().join(", ")
            ))
        }),
        None => Ok(registry
            .areas()
            .filter(|a| a.family() == config.ratios.family())
            .collect()),
    }
}

/// Evaluates the selected criteria and, with a triangle, their oracles.
pub fn run_check(registry: &Registry, config: &ConfigDoc) -> Result<Outcome> {
    let mut report = echo_inputs("check", config);
    let mut all_agree = true;
    let mut disagreement = false;
    for criterion in select_criteria(registry, config)? {
        let name = criterion.name();
        let holds = criterion.holds(&config.ratios)?;
        report.push(format!("{name}.holds"), holds);
        let Some(t) = &config.triangle else { continue };
        match criterion.oracle(t, &config.ratios) {
            Ok(oracle) => {
                report.push(format!("{name}.oracle"), oracle);
                report.push(format!("{name}.degenerate"), false);
                report.push(format!("{name}.agreement"), oracle == holds);
                all_agree &= oracle == holds;
                disagreement |= oracle != holds;
            }
            Err(e) => {
                report.push(format!("{name}.oracle"), "degenerate");
                report.push(format!("{name}.degenerate"), degenerate_reason(&e));
                report.push(format!("{name}.agreement"), false);
                all_agree = false;
            }
        }
    }
    if config.triangle.is_some() {
        report.push("agreement", all_agree);
    }
    Ok(Outcome {
        report,
        disagreement,
    })
}

/// Evaluates the selected area formulas and, with a triangle, their oracles.
pub fn run_area(registry: &Registry, config: &ConfigDoc) -> Result<Outcome> {
    let mut report = echo_inputs("area", config);
    let mut all_agree = true;
    let mut disagreement = false;
    for formula in select_areas(registry, config)? {
        let name = formula.name();
        let cleared = formula.cleared(&config.ratios)?;
        let value = cleared.ratio();
        report.push(format!("{name}.formula"), format_area(&value));
        report.push(format!("{name}.class"), format_class(value.class()));
        report.push(format!("{name}.numerator"), &cleared.numerator);
        report.push(format!("{name}.denominator"), cleared.denominator());
        let Some(t) = &config.triangle else { continue };
        let formula_degenerate = value == AreaRatio::Indeterminate;
        match formula.vertices(t, &config.ratios) {
            Ok(vertices) => {
                let oracle = routh::oracle_area_ratio(t, &vertices);
                let agree = oracle == value;
                report.push(format!("{name}.vertices"), format_points(&vertices));
                report.push(format!("{name}.oracle"), format_area(&oracle));
                report.push(format!("{name}.oracle_class"), format_class(oracle.class()));
                let degenerate = if formula_degenerate {
                    "formula is 0/0".to_string()
                } else {
                    "false".to_string()
                };
                report.push(format!("{name}.degenerate"), degenerate);
                report.push(format!("{name}.agreement"), agree);
                all_agree &= agree;
                disagreement |= !agree && !formula_degenerate;
            }
            Err(e) => {
                report.push(format!("{name}.oracle"), "degenerate");
                report.push(format!("{name}.degenerate"), degenerate_reason(&e));
                report.push(format!("{name}.agreement"), formula_degenerate);
                all_agree &= formula_degenerate;
            }
        }
    }
    if config.triangle.is_some() {
        report.push("agreement", all_agree);
    }
    Ok(Outcome {
        report,
        disagreement,
    })
}

fn push_line(report: &mut Report, key: String, line: &sixpoint_core::Result<Line>) {
    match line {
        Ok(l) => report.push(key, l),
        Err(e) => report.push(key, format!("degenerate: {}", degenerate_reason(e))),
    }
}

fn push_point(report: &mut Report, key: String, point: &sixpoint_core::Result<ProjPoint>) {
    match point {
        Ok(p) => report.push(key, p),
        Err(e) => report.push(key, format!("degenerate: {}", degenerate_reason(e))),
    }
}

/// Meets for each vertex of a triangle bounded by three (possibly
/// undefined) lines, reported one by one.
fn vertices_of(lines: &[sixpoint_core::Result<Line>; 3]) -> [sixpoint_core::Result<ProjPoint>; 3] {
    let m = |i: usize, j: usize| match (&lines[i], &lines[j]) {
        (Ok(a), Ok(b)) => meet(a, b),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    [m(1, 2), m(2, 0), m(0, 1)]
}

fn push_triangle(
    report: &mut Report,
    prefix: &str,
    names: [&str; 3],
    t: &Triangle,
    v: [sixpoint_core::Result<ProjPoint>; 3],
) {
    for (name, p) in names.iter().zip(&v) {
        push_point(report, format!("{prefix}.{name}"), p);
    }
    if let [Ok(a), Ok(b), Ok(c)] = v {
        let ratio = routh::oracle_area_ratio(t, &[a, b, c]);
        report.push(format!("{prefix}.area_ratio"), format_area(&ratio));
    }
}

fn join_all(
    pairs: [(&ProjPoint, &ProjPoint); 3],
    name: &[&str; 3],
) -> [sixpoint_core::Result<Line>; 3] {
    [0, 1, 2].map(|i| {
        sixpoint_core::join(pairs[i].0, pairs[i].1)
            .map_err(|_| Error::DegenerateConfiguration(format!("line {} is undefined", name[i])))
    })
}

fn construct_six(report: &mut Report, t: &Triangle, r: &SixRatios) -> Result<()> {
    let s = routh::construct_six_points(t, r)?;
    for c in Component::ALL {
        report.push(format!("point.{}", c.key().to_uppercase()), s.get(c));
    }
    let edge_names = ["B+C-", "C+A-", "A+B-"];
    let lines = join_all(
        [
            (&s.b_plus, &s.c_minus),
            (&s.c_plus, &s.a_minus),
            (&s.a_plus, &s.b_minus),
        ],
        &edge_names,
    );
    for (name, l) in edge_names.iter().zip(&lines) {
        push_line(report, format!("line.{name}"), l);
    }
    push_triangle(
        report,
        "edge_triangle",
        ["V_A", "V_B", "V_C"],
        t,
        vertices_of(&lines),
    );
    if let (Ok(meets), Ok(closed)) = (
        routh::edge_triangle_vertices(t, r),
        routh::edge_triangle_vertices_closed_form(t, r),
    ) {
        report.push("edge_triangle.closed_form_agrees", meets == closed);
    }

    let (a, b, c) = (t.a(), t.b(), t.c());
    let cevian_names = [["BB-", "CC+"], ["CC-", "AA+"], ["AA-", "BB+"]];
    let cevian_pairs = [
        [(b, &s.b_minus), (c, &s.c_plus)],
        [(c, &s.c_minus), (a, &s.a_plus)],
        [(a, &s.a_minus), (b, &s.b_plus)],
    ];
    let hat_names = ["B-C+", "C-A+", "A-B+"];
    let hats: Vec<sixpoint_core::Result<ProjPoint>> = cevian_pairs
        .iter()
        .zip(cevian_names)
        .map(|(pair, names)| {
            let l1 = sixpoint_core::join(pair[0].0, pair[0].1).map_err(|_| {
                Error::DegenerateConfiguration(format!("line {} is undefined", names[0]))
            })?;
            let l2 = sixpoint_core::join(pair[1].0, pair[1].1).map_err(|_| {
                Error::DegenerateConfiguration(format!("line {} is undefined", names[1]))
            })?;
            meet(&l1, &l2).map_err(|_| {
                Error::DegenerateConfiguration(format!(
                    "lines {} and {} coincide",
                    names[0], names[1]
                ))
            })
        })
        .collect();
    let hats: [sixpoint_core::Result<ProjPoint>; 3] = hats.try_into().expect("three hat-points");
    push_triangle(report, "hat_point", hat_names, t, hats);
    if let (Ok(meets), Ok(closed)) = (
        routh::vertex_triangle_vertices(t, r),
        routh::vertex_triangle_vertices_closed_form(t, r),
    ) {
        report.push("hat_point.closed_form_agrees", meets == closed);
    }
    Ok(())
}

fn construct_cevian(report: &mut Report, t: &Triangle, r: &CevianRatios) -> Result<()> {
    let [d, e, f] = routh::menelaus_points(t, r)?;
    report.push("point.D", &d);
    report.push("point.E", &e);
    report.push("point.F", &f);
    let names = ["AD", "BE", "CF"];
    let lines = join_all([(t.a(), &d), (t.b(), &e), (t.c(), &f)], &names);
    for (name, l) in names.iter().zip(&lines) {
        push_line(report, format!("line.{name}"), l);
    }
    // Vertex i is opposite line i in the order BE, CF, AD.
    let [ad, be, cf] = lines;
    push_triangle(
        report,
        "cevian_triangle",
        ["CF^AD", "AD^BE", "BE^CF"],
        t,
        vertices_of(&[be, cf, ad]),
    );
    let ratio = routh::oracle_area_ratio(t, &[d, e, f]);
    report.push("menelaus_triangle.area_ratio", format_area(&ratio));
    Ok(())
}

/// Exact coordinates of every constructed object. Uses the reference
/// triangle `(0,0), (1,0), (0,1)` when none is configured.
pub fn run_construct(config: &ConfigDoc) -> Result<Outcome> {
    let mut report = echo_inputs("construct", config);
    let t = config.triangle.clone().unwrap_or_else(Triangle::canonical);
    if config.triangle.is_none() {
        report.push("triangle", format_triangle(&t));
    }
    match &config.ratios {
        Ratios::Six(r) => construct_six(&mut report, &t, r)?,
        Ratios::Cevian(r) => construct_cevian(&mut report, &t, r)?,
    }
    let disagreement = report
        .entries()
        .iter()
        .any(|(k, v)| k.ends_with("closed_form_agrees") && v == "false");
    Ok(Outcome {
        report,
        disagreement,
    })
}

/// Embeds cevian ratios into six-point form and compares every classical
/// predicate and formula with its six-point counterpart.
pub fn run_embed(registry: &Registry, config: &ConfigDoc) -> Result<Outcome> {
    let Ratios::Cevian(r) = &config.ratios else {
        return Err(CliError::Usage(
            "ratios: embed expects cevian ratios d, e, f".into(),
        ));
    };
    let mut report = echo_inputs("embed", config);
    let six = Ratios::Six(classical_embedding(r));
    for c in Component::ALL {
        if let Ratios::Six(s) = &six {
            report.push(format!("embedded.{c}"), s.get(c));
        }
    }
    let mut agree = true;
    for (classical, general) in [("ceva", "concurrence"), ("menelaus", "collinearity")] {
        let x = registry
            .criterion(classical)
            .expect("builtin")
            .holds(&config.ratios)?;
        let y = registry.criterion(general).expect("builtin").holds(&six)?;
        report.push(format!("{classical}.holds"), x);
        report.push(format!("{general}.holds"), y);
        agree &= x == y;
    }
    for (classical, general) in [
        ("cevian", "sixpoint-edges"),
        ("menelaus-triangle", "sixpoint-vertices"),
    ] {
        let x = registry
            .area(classical)
            .expect("builtin")
            .ratio(&config.ratios)?;
        let y = registry.area(general).expect("builtin").ratio(&six)?;
        report.push(format!("{classical}.formula"), format_area(&x));
        report.push(format!("{general}.formula"), format_area(&y));
        agree &= x == y;
    }
    report.push("agreement", agree);
    Ok(Outcome {
        report,
        disagreement: !agree,
    })
}
