//! Configuration documents.
//!
//! A config file is line-oriented `key = value` text; `#` starts a comment.
//! Recognized keys are `mode`, `triangle` and the ratio names `d e f` or
//! `a+ a- b+ b- c+ c-`:
//!
//! ```text
//! mode = concurrence
//! triangle = 0,0; 1,0; 0,1
//! a+ = 1/2
//! a- = 1/2
//! ...
//! ```
//!
//! Command-line flags use the same value grammar: `--ratios d=2,e=2,f=2`,
//! `--triangle "0,0;1,0;0,1"`.

use std::collections::BTreeMap;

use sixpoint_core::{
    parse_ratio, parse_rational, CevianRatios, Component, ProjPoint, ProjRatio, Ratios, SixRatios,
    Triangle,
};

use crate::error::{CliError, Result};

const CEVIAN_KEYS: [&str; 3] = ["d", "e", "f"];

/// Unvalidated configuration fields, merged from a file and flags.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawConfig {
    pub mode: Option<String>,
    pub triangle: Option<String>,
    pub ratios: BTreeMap<String, String>,
}

/// A validated configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigDoc {
    pub triangle: Option<Triangle>,
    pub ratios: Ratios,
    pub mode: Option<String>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn is_ratio_key(key: &str) -> bool {
    CEVIAN_KEYS.contains(&key) || Component::from_key(key).is_some()
}

impl RawConfig {
    /// Parses a `key = value` document.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = RawConfig::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("line {}: expected `key = value`", n + 1)))?;
            raw.set(key.trim(), value.trim())?;
        }
        Ok(raw)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "mode" => self.mode = Some(value.to_string()),
            "triangle" => self.triangle = Some(value.to_string()),
            k if is_ratio_key(k) => {
                self.ratios.insert(k.to_string(), value.to_string());
            }
            k => return Err(usage(format!("{k}: unknown key"))),
        }
        Ok(())
    }

    /// Parses `--ratios` text: comma-separated `key=value` pairs.
    pub fn set_ratios(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| usage(format!("ratios: expected key=value, got {item:?}")))?;
            let key = key.trim();
            if !is_ratio_key(key) {
                return Err(usage(format!("ratios.{key}: unknown ratio name")));
            }
            self.ratios
                .insert(key.to_string(), value.trim().to_string());
        }
        Ok(())
    }

    /// Overlays `other`'s fields on top of `self`.
    pub fn merge(mut self, other: RawConfig) -> Self {
        if other.mode.is_some() {
            self.mode = other.mode;
        }
        if other.triangle.is_some() {
            self.triangle = other.triangle;
        }
        self.ratios.extend(other.ratios);
        self
    }

    pub fn resolve(&self) -> Result<ConfigDoc> {
        let triangle = self.triangle.as_deref().map(parse_triangle).transpose()?;
        Ok(ConfigDoc {
            triangle,
            ratios: self.resolve_ratios()?,
            mode: self.mode.clone(),
        })
    }

    fn resolve_ratios(&self) -> Result<Ratios> {
        let cevian = self
            .ratios
            .keys()
            .find(|k| CEVIAN_KEYS.contains(&k.as_str()));
        let six = self
            .ratios
            .keys()
            .find(|k| Component::from_key(k).is_some());
        let get = |key: &str| -> Result<ProjRatio> {
            let text = self
                .ratios
                .get(key)
                .ok_or_else(|| usage(format!("ratios.{key}: missing")))?;
            parse_ratio(text).map_err(|e| usage(format!("ratios.{key}: {e}")))
        };
        match (cevian, six) {
            (Some(c), Some(s)) => Err(usage(format!(
                "ratios: cannot mix cevian key {c} with six-point key {s}"
            ))),
            (None, None) => Err(usage("ratios: none given")),
            (Some(_), None) => Ok(Ratios::Cevian(CevianRatios::new(
                get("d")?,
                get("e")?,
                get("f")?,
            ))),
            (None, Some(_)) => {
                let [ap, am, bp, bm, cp, cm] = Component::ALL.map(|c| get(c.key()));
                Ok(Ratios::Six(SixRatios::new(ap?, am?, bp?, bm?, cp?, cm?)))
            }
        }
    }
}

/// Parses `x,y; x,y; x,y` (separators `;`, whitespace ignored).
pub fn parse_triangle(text: &str) -> Result<Triangle> {
    let pairs: Vec<&str> = text.split(';').map(str::trim).collect();
    if pairs.len() != 3 {
        return Err(usage(
            "triangle: expected three `x,y` pairs separated by `;`",
        ));
    }
    let mut points = Vec::with_capacity(3);
    for (pair, name) in pairs.iter().zip(["A", "B", "C"]) {
        let (x, y) = pair
            .split_once(',')
            .ok_or_else(|| usage(format!("triangle.{name}: expected `x,y`, got {pair:?}")))?;
        let coord =
            |s: &str| parse_rational(s.trim()).map_err(|e| usage(format!("triangle.{name}: {e}")));
        points.push(ProjPoint::affine(&coord(x)?, &coord(y)?));
    }
    let [a, b, c]: [ProjPoint; 3] = points.try_into().expect("three points");
    Triangle::new(a, b, c).map_err(|e| usage(format!("triangle: {e}")))
}

pub fn format_triangle(t: &Triangle) -> String {
    t.vertices().map(|p| p.to_string()).join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments() {
        let raw = RawConfig::parse("# demo\nmode = ceva\n d = 2 \ne=2 # inline\nf = 2\n").unwrap();
        let doc = raw.resolve().unwrap();
        assert_eq!(doc.mode.as_deref(), Some("ceva"));
        let two = ProjRatio::integer(2);
        assert_eq!(
            doc.ratios,
            Ratios::Cevian(CevianRatios::new(two.clone(), two.clone(), two))
        );
        assert!(doc.triangle.is_none());
    }

    #[test]
    fn errors_name_the_field() {
        let err = |text: &str| {
            RawConfig::parse(text)
                .and_then(|r| r.resolve())
                .unwrap_err()
                .to_string()
        };
        assert!(err("d = 0/0\ne = 1\nf = 1").starts_with("ratios.d:"));
        assert!(err("d = 1\ne = 1").starts_with("ratios.f: missing"));
        assert!(err("d = 1\ne = 1\nf = 1\na+ = 2").starts_with("ratios: cannot mix"));
        assert!(err("colour = red").starts_with("colour: unknown key"));
        assert!(err("d = 1\ne = 1\nf = 1\ntriangle = 0,0; 1,1; 2,2").starts_with("triangle:"));
        assert!(err("d = 1\ne = 1\nf = 1\ntriangle = 0,0; 1,x; 2,2").starts_with("triangle.B:"));
        assert!(err("mode").starts_with("line 1:"));
    }

    #[test]
    fn flags_override_file() {
        let mut flags = RawConfig::default();
        flags
            .set_ratios("a+=1/2, a-=1/2,b+=1/2,b-=1/2,c+=1/2,c-=inf")
            .unwrap();
        let file = RawConfig::parse("c- = 1\nmode = concurrence").unwrap();
        let doc = file.merge(flags).resolve().unwrap();
        match doc.ratios {
            Ratios::Six(s) => assert!(s.c_minus.is_infinite()),
            _ => panic!("expected six ratios"),
        }
        assert_eq!(doc.mode.as_deref(), Some("concurrence"));
    }

    #[test]
    fn triangle_grammar() {
        let t = parse_triangle("0,0; 1,0; 0,1").unwrap();
        assert_eq!(t, Triangle::canonical());
        assert_eq!(format_triangle(&t), "(0, 0) (1, 0) (0, 1)");
        assert!(parse_triangle("0,0;1,0").is_err());
        assert!(parse_triangle("1/2,-3/4;5,0;0,7").is_ok());
    }
}
