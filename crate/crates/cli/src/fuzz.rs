//! Seeded differential fuzzing: every formula against its construction
//! oracle, plus reduction, affine-invariance and closed-form checks.
//!
//! Trials are independent (see [`crate::gen`]) and run in parallel; results
//! are aggregated in trial order, so reports are byte-identical across runs.

use rayon::prelude::*;

use sixpoint_core::routh::{self, AreaRatio};
use sixpoint_core::{
    classical_embedding, AffineMap, AreaFormula, CevianRatios, Criterion, Family, Ratios, Registry,
    SixRatios, Triangle,
};

use crate::commands::{echo_ratios, Outcome};
use crate::config::format_triangle;
use crate::error::{CliError, Result};
use crate::gen::Generator;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    pub max_magnitude: i64,
    /// `all`, or the name of one criterion or area formula.
    pub scope: String,
}

impl FuzzConfig {
    pub fn validate(&self, registry: &Registry) -> Result<()> {
        if self.trials < 1 {
            return Err(CliError::Usage("trials: must be at least 1".into()));
        }
        if self.max_magnitude < 1 {
            return Err(CliError::Usage("max-magnitude: must be at least 1".into()));
        }
        if self.scope != "all"
            && registry.criterion(&self.scope).is_none()
            && registry.area(&self.scope).is_none()
        {
            return Err(CliError::Usage(format!(
                "scope: unknown formula {:?}",
                self.scope
            )));
        }
        Ok(())
    }

    fn includes(&self, name: &str) -> bool {
        self.scope == "all" || self.scope == name
    }
}

/// Outcome of one check in one trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    /// Undefined construction or 0/0 formula; skipped.
    Degenerate,
    /// Disagreement on a draw with two or more infinite ratios, where the
    /// configuration may collapse.
    ExpectedDegenerate,
    Disagree(String),
}

/// The inputs drawn for one trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialInput {
    pub triangle: Triangle,
    pub map: AffineMap,
    pub cevian: CevianRatios,
    pub six: SixRatios,
}

impl TrialInput {
    /// Draw order is fixed and independent of scope.
    pub fn draw(seed: u64, trial: u64, max_magnitude: i64) -> Self {
        let mut g = Generator::for_trial(seed, trial, max_magnitude);
        let triangle = g.triangle();
        let map = g.affine_map();
        let cevian = g.cevian(true);
        let six = g.six(true);
        Self {
            triangle,
            map,
            cevian,
            six,
        }
    }

    fn ratios(&self, family: Family) -> Ratios {
        match family {
            Family::Cevian => Ratios::Cevian(self.cevian.clone()),
            Family::SixPoint => Ratios::Six(self.six.clone()),
        }
    }

    fn multi_infinite(&self, family: Family) -> bool {
        match family {
            Family::Cevian => self.cevian.infinite_count() >= 2,
            Family::SixPoint => self.six.infinite_count() >= 2,
        }
    }

    pub fn any_multi_infinite(&self) -> bool {
        self.multi_infinite(Family::Cevian) || self.multi_infinite(Family::SixPoint)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialResult {
    pub index: u64,
    pub multi_infinite: bool,
    pub checks: Vec<(String, Verdict)>,
}

fn mismatch(multi_infinite: bool, detail: String) -> Verdict {
    if multi_infinite {
        Verdict::ExpectedDegenerate
    } else {
        Verdict::Disagree(detail)
    }
}

fn equal_or<T: PartialEq + std::fmt::Debug>(a: T, b: T, multi_infinite: bool) -> Verdict {
    if a == b {
        Verdict::Agree
    } else {
        mismatch(multi_infinite, format!("{a:?} != {b:?}"))
    }
}

fn criterion_checks(c: &dyn Criterion, input: &TrialInput, out: &mut Vec<(String, Verdict)>) {
    let family = c.family();
    let ratios = input.ratios(family);
    let multi = input.multi_infinite(family);
    let holds = c.holds(&ratios).expect("family matches");
    let oracle = c.oracle(&input.triangle, &ratios);
    let verdict = match &oracle {
        Ok(o) if *o == holds => Verdict::Agree,
        Ok(o) => mismatch(multi, format!("formula {holds}, oracle {o}")),
        Err(_) => Verdict::Degenerate,
    };
    out.push((c.name().to_string(), verdict));

    let mapped = c.oracle(&input.triangle.transform(&input.map), &ratios);
    let verdict = match (oracle, mapped) {
        (Err(_), Err(_)) => Verdict::Degenerate,
        (a, b) => equal_or(a.ok(), b.ok(), multi),
    };
    out.push((format!("{}.invariance", c.name()), verdict));
}

fn area_checks(a: &dyn AreaFormula, input: &TrialInput, out: &mut Vec<(String, Verdict)>) {
    let family = a.family();
    let ratios = input.ratios(family);
    let multi = input.multi_infinite(family);
    let formula = a.ratio(&ratios).expect("family matches");
    let oracle = a.oracle(&input.triangle, &ratios);
    let verdict = match &oracle {
        _ if formula == AreaRatio::Indeterminate => Verdict::Degenerate,
        Err(_) => Verdict::Degenerate,
        Ok(o) => equal_or(&formula, o, multi),
    };
    out.push((a.name().to_string(), verdict));

    let mapped = a.oracle(&input.triangle.transform(&input.map), &ratios);
    let verdict = match (oracle, mapped) {
        (Err(_), Err(_)) => Verdict::Degenerate,
        (x, y) => equal_or(x.ok(), y.ok(), multi),
    };
    out.push((format!("{}.invariance", a.name()), verdict));
}

fn reduction_checks(
    registry: &Registry,
    cfg: &FuzzConfig,
    input: &TrialInput,
    out: &mut Vec<(String, Verdict)>,
) {
    let classical = Ratios::Cevian(input.cevian.clone());
    let embedded = Ratios::Six(classical_embedding(&input.cevian));
    for (small, big) in [("ceva", "concurrence"), ("menelaus", "collinearity")] {
        if cfg.includes(small) || cfg.includes(big) {
            let x = registry
                .criterion(small)
                .expect("builtin")
                .holds(&classical)
                .expect("cevian");
            let y = registry
                .criterion(big)
                .expect("builtin")
                .holds(&embedded)
                .expect("six");
            out.push((format!("reduction.{small}"), equal_or(x, y, false)));
        }
    }
    for (small, big) in [
        ("cevian", "sixpoint-edges"),
        ("menelaus-triangle", "sixpoint-vertices"),
    ] {
        if cfg.includes(small) || cfg.includes(big) {
            let x = registry
                .area(small)
                .expect("builtin")
                .ratio(&classical)
                .expect("cevian");
            let y = registry
                .area(big)
                .expect("builtin")
                .ratio(&embedded)
                .expect("six");
            out.push((format!("reduction.{small}"), equal_or(x, y, false)));
        }
    }
}

fn closed_form_checks(cfg: &FuzzConfig, input: &TrialInput, out: &mut Vec<(String, Verdict)>) {
    let (t, r) = (&input.triangle, &input.six);
    if cfg.includes("sixpoint-edges") {
        let verdict =
            match routh::edge_lines(t, r).and_then(|_| routh::edge_triangle_vertices(t, r)) {
                Ok(meets) => equal_or(
                    Ok(meets),
                    routh::edge_triangle_vertices_closed_form(t, r),
                    false,
                ),
                Err(_) => Verdict::Degenerate,
            };
        out.push(("closed_form.sixpoint-edges".into(), verdict));
    }
    if cfg.includes("sixpoint-vertices") {
        let verdict = match routh::vertex_triangle_vertices(t, r) {
            Ok(meets) => equal_or(
                Ok(meets),
                routh::vertex_triangle_vertices_closed_form(t, r),
                false,
            ),
            Err(_) => Verdict::Degenerate,
        };
        out.push(("closed_form.sixpoint-vertices".into(), verdict));
    }
}

/// Runs every check in scope for one trial.
pub fn run_trial(registry: &Registry, cfg: &FuzzConfig, index: u64) -> TrialResult {
    let input = TrialInput::draw(cfg.seed, index, cfg.max_magnitude);
    let mut checks = Vec::new();
    for c in registry.criteria().filter(|c| cfg.includes(c.name())) {
        criterion_checks(c, &input, &mut checks);
    }
    for a in registry.areas().filter(|a| cfg.includes(a.name())) {
        area_checks(a, &input, &mut checks);
    }
    reduction_checks(registry, cfg, &input, &mut checks);
    closed_form_checks(cfg, &input, &mut checks);
    TrialResult {
        index,
        multi_infinite: input.any_multi_infinite(),
        checks,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    agree: u64,
    degenerate: u64,
    expected_degenerate: u64,
    disagree: u64,
}

fn header(cfg: &FuzzConfig) -> Report {
    let mut report = Report::new();
    report.push("command", "fuzz");
    report.push("seed", cfg.seed);
    report.push("trials", cfg.trials);
    report.push("max_magnitude", cfg.max_magnitude);
    report.push("scope", &cfg.scope);
    report
}

/// Runs `cfg.trials` trials. Exit status is a disagreement iff some check
/// disagreed on a draw that was neither degenerate nor multi-infinite.
pub fn run_fuzz(registry: &Registry, cfg: &FuzzConfig) -> Result<Outcome> {
    cfg.validate(registry)?;
    let results: Vec<TrialResult> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(registry, cfg, i))
        .collect();

    let mut tallies: Vec<(String, Tally)> = Vec::new();
    let mut failures = Vec::new();
    for result in &results {
        for (name, verdict) in &result.checks {
            let pos = match tallies.iter().position(|(n, _)| n == name) {
                Some(p) => p,
                None => {
                    tallies.push((name.clone(), Tally::default()));
                    tallies.len() - 1
                }
            };
            let tally = &mut tallies[pos].1;
            match verdict {
                Verdict::Agree => tally.agree += 1,
                Verdict::Degenerate => tally.degenerate += 1,
                Verdict::ExpectedDegenerate => tally.expected_degenerate += 1,
                Verdict::Disagree(detail) => {
                    tally.disagree += 1;
                    failures.push(format!("trial {}: {name}: {detail}", result.index));
                }
            }
        }
    }

    let mut report = header(cfg);
    report.push(
        "multi_infinite_draws",
        results.iter().filter(|r| r.multi_infinite).count(),
    );
    for (name, t) in &tallies {
        report.push(format!("check.{name}.agree"), t.agree);
        report.push(format!("check.{name}.degenerate"), t.degenerate);
        report.push(
            format!("check.{name}.expected_degenerate"),
            t.expected_degenerate,
        );
        report.push(format!("check.{name}.disagree"), t.disagree);
    }
    report.push("disagreements", failures.len());
    for (k, failure) in failures.iter().enumerate() {
        report.push(format!("disagreement.{k}"), failure);
    }
    Ok(Outcome {
        report,
        disagreement: !failures.is_empty(),
    })
}

/// Re-runs a single trial, echoing its inputs.
pub fn replay_trial(registry: &Registry, cfg: &FuzzConfig, index: u64) -> Result<Outcome> {
    cfg.validate(registry)?;
    let input = TrialInput::draw(cfg.seed, index, cfg.max_magnitude);
    let result = run_trial(registry, cfg, index);
    let mut report = header(cfg);
    report.push("trial", index);
    report.push("triangle", format_triangle(&input.triangle));
    let m = input.map.linear();
    let tr = input.map.translation();
    report.push(
        "map.linear",
        format!("[{}, {}; {}, {}]", m[0][0], m[0][1], m[1][0], m[1][1]),
    );
    report.push("map.translation", format!("[{}, {}]", tr[0], tr[1]));
    let mut cevian = Report::new();
    echo_ratios(&mut cevian, &Ratios::Cevian(input.cevian.clone()));
    report.extend("cevian", cevian);
    let mut six = Report::new();
    echo_ratios(&mut six, &Ratios::Six(input.six.clone()));
    report.extend("six", six);
    let mut disagreement = false;
    for (name, verdict) in &result.checks {
        let text = match verdict {
            Verdict::Agree => "agree".to_string(),
            Verdict::Degenerate => "degenerate".to_string(),
            Verdict::ExpectedDegenerate => "expected_degenerate".to_string(),
            Verdict::Disagree(d) => {
                disagreement = true;
                format!("disagree: {d}")
            }
        };
        report.push(format!("check.{name}"), text);
    }
    Ok(Outcome {
        report,
        disagreement,
    })
}
