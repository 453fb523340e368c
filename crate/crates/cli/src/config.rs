use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Settings shared by all subcommands. Command-line flags override a
/// `--config` file, which overrides the defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub case: Option<u32>,
    pub dmin: Option<i64>,
    pub dmax: Option<i64>,
    pub bound: u32,
    /// The scan stability re-check runs at `stability · k`.
    pub stability: u32,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            case: None,
            dmin: None,
            dmax: None,
            bound: 6,
            stability: 2,
            format: Format::Text,
            seed: 0,
        }
    }
}

impl RunConfig {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        self.apply_str(&text)
    }

    pub fn apply_str(&mut self, text: &str) -> Result<(), String> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key = value", n + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |_| format!("config line {}: bad value `{value}` for `{key}`", n + 1);
            match key {
                "case" => self.case = Some(value.parse().map_err(bad)?),
                "dmin" => self.dmin = Some(value.parse().map_err(bad)?),
                "dmax" => self.dmax = Some(value.parse().map_err(bad)?),
                "bound" => self.bound = value.parse().map_err(bad)?,
                "stability" => self.stability = value.parse().map_err(bad)?,
                "seed" => self.seed = value.parse().map_err(bad)?,
                "format" => {
                    self.format = Format::from_str(value, true).map_err(|_| format!("config line {}: bad format", n + 1))?
                }
                _ => return Err(format!("config line {}: unknown key `{key}`", n + 1)),
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        if let (Some(lo), Some(hi)) = (self.dmin, self.dmax) {
            if lo > hi {
                return Err(format!("empty degree window [{lo}, {hi}]"));
            }
        }
        if self.bound == 0 {
            return Err("letter bound must be positive".into());
        }
        if self.stability < 2 {
            return Err("stability factor must be at least 2".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_files() {
        let mut c = RunConfig::default();
        c.apply_str("# comment\ncase = 2\nformat=json\nbound = 4 # trailing\n").unwrap();
        assert_eq!((c.case, c.format, c.bound), (Some(2), Format::Json, 4));
        assert!(c.apply_str("nope = 1").is_err());
        c.stability = 1;
        assert!(c.validate().is_err());
    }
}
