//! Line-oriented `key: value` run manifests. Two runs over identical
//! inputs produce identical manifests except for `*_ms` timing lines.

use std::fmt::Display;
use std::path::Path;

use crate::CliError;

#[derive(Clone, Debug, Default)]
pub struct Manifest {
    entries: Vec<(String, String)>,
}

impl Manifest {
    pub fn new(command: &str) -> Self {
        let mut m = Manifest::default();
        m.push("command", command);
        m
    }

    pub fn push<V: Display>(&mut self, key: &str, value: V) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        crate::formats::atomic_write(path, self.render().as_bytes())
    }

    /// The manifest with timing lines removed, for idempotence checks.
    pub fn stable_lines(text: &str) -> Vec<&str> {
        text.lines()
            .filter(|l| !l.split(':').next().is_some_and(|k| k.ends_with("_ms")))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_in_insertion_order() {
        let mut m = Manifest::new("build");
        m.push("target", "G");
        m.push("wall_ms", 12);
        assert_eq!(m.render(), "command: build\ntarget: G\nwall_ms: 12\n");
        let stable = Manifest::stable_lines("a: 1\nwall_ms: 9\nb: 2\n");
        assert_eq!(stable, vec!["a: 1", "b: 2"]);
    }
}
