//! Reports: ordered key/value documents with byte-stable rendering.

use std::fmt::Display;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned `key  value` columns for reading.
    #[default]
    Text,
    /// `key = value` lines; the same grammar config files use.
    Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for (k, v) in other.entries {
            self.entries.push((format!("{prefix}.{k}"), v));
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Structured => {
                for (k, v) in &self.entries {
                    out.push_str(&format!("{k} = {v}\n"));
                }
            }
            Format::Text => {
                let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    out.push_str(&format!("{k:<width$}  {v}\n"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_in_insertion_order() {
        let mut r = Report::new();
        r.push("command", "check");
        r.push("ceva.holds", true);
        assert_eq!(
            r.render(Format::Structured),
            "command = check\nceva.holds = true\n"
        );
        assert_eq!(
            r.render(Format::Text),
            "command     check\nceva.holds  true\n"
        );
        assert_eq!(r.get("ceva.holds"), Some("true"));
    }
}
