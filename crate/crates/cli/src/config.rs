//! Run configuration: command-line flags layered over an optional
//! `key=value` file, layered over defaults.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Symbolic,
    Numeric,
    All,
}

impl Suite {
    pub fn symbolic(self) -> bool {
        matches!(self, Suite::Symbolic | Suite::All)
    }

    pub fn numeric(self) -> bool {
        matches!(self, Suite::Numeric | Suite::All)
    }
}

macro_rules! enum_text {
    ($t:ty { $($v:ident => $s:literal),* }) => {
        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($s => Ok(<$t>::$v),)*
                    other => Err(format!("unknown value {other:?}")),
                }
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(<$t>::$v => $s,)* })
            }
        }
    };
}
enum_text!(Format { Json => "json", Latex => "latex", Text => "text" });
enum_text!(Suite { Symbolic => "symbolic", Numeric => "numeric", All => "all" });

/// Every setting as an optional layer.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Settings {
    pub order: Option<usize>,
    pub degree: Option<u32>,
    pub window: Option<i32>,
    pub weight: Option<u32>,
    pub digits: Option<u32>,
    pub format: Option<Format>,
    pub normalize_even: Option<bool>,
    pub suite: Option<Suite>,
    pub kmax: Option<u32>,
    pub mmax: Option<u32>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

fn parse_value<T: FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| CliError::Usage(format!("config key {key}: cannot parse {v:?}")))
}

impl Settings {
    /// `self` wins wherever it is set.
    pub fn over(self, base: Settings) -> Settings {
        Settings {
            order: self.order.or(base.order),
            degree: self.degree.or(base.degree),
            window: self.window.or(base.window),
            weight: self.weight.or(base.weight),
            digits: self.digits.or(base.digits),
            format: self.format.or(base.format),
            normalize_even: self.normalize_even.or(base.normalize_even),
            suite: self.suite.or(base.suite),
            kmax: self.kmax.or(base.kmax),
            mmax: self.mmax.or(base.mmax),
            trials: self.trials.or(base.trials),
            seed: self.seed.or(base.seed),
        }
    }

    /// Parses `key = value` lines; `#` starts a comment. Keys are the long
    /// flag names.
    pub fn parse_file(text: &str) -> Result<Settings, CliError> {
        let mut s = Settings::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", no + 1)))?;
            let (key, v) = (key.trim(), value.trim());
            match key {
                "order" => s.order = Some(parse_value(key, v)?),
                "degree" => s.degree = Some(parse_value(key, v)?),
                "window" => s.window = Some(parse_value(key, v)?),
                "weight" => s.weight = Some(parse_value(key, v)?),
                "digits" => s.digits = Some(parse_value(key, v)?),
                "format" => s.format = Some(parse_value(key, v)?),
                "normalize-even" => s.normalize_even = Some(parse_value(key, v)?),
                "suite" => s.suite = Some(parse_value(key, v)?),
                "kmax" => s.kmax = Some(parse_value(key, v)?),
                "mmax" => s.mmax = Some(parse_value(key, v)?),
                "trials" => s.trials = Some(parse_value(key, v)?),
                "seed" => s.seed = Some(parse_value(key, v)?),
                other => return Err(CliError::Usage(format!("config line {}: unknown key {other:?}", no + 1))),
            }
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Settings, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Settings::parse_file(&text)
    }
}

/// Resolved configuration. Truncations stay optional where the command
/// derives them from its own arguments.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub order: Option<usize>,
    pub degree: Option<u32>,
    pub window: Option<i32>,
    pub weight: Option<u32>,
    pub digits: u32,
    pub format: Format,
    pub normalize_even: bool,
    pub suite: Suite,
    pub kmax: u32,
    pub mmax: u32,
    pub trials: usize,
    pub seed: u64,
}

impl RunConfig {
    pub const DEFAULT_DIGITS: u32 = 30;

    /// Applies defaults and rejects non-positive values.
    pub fn resolve(s: Settings) -> Result<RunConfig, CliError> {
        let positive = |name: &str, v: Option<u64>| match v {
            Some(0) => Err(CliError::Usage(format!("--{name} must be positive"))),
            _ => Ok(()),
        };
        positive("order", s.order.map(|v| v as u64))?;
        positive("degree", s.degree.map(u64::from))?;
        positive("weight", s.weight.map(u64::from))?;
        positive("digits", s.digits.map(u64::from))?;
        positive("mmax", s.mmax.map(u64::from))?;
        positive("trials", s.trials.map(|v| v as u64))?;
        if let Some(w) = s.window {
            if w <= 0 {
                return Err(CliError::Usage("--window must be positive".into()));
            }
        }
        let digits = s.digits.unwrap_or(Self::DEFAULT_DIGITS);
        if digits > zetaops::mzv::MAX_DIGITS {
            return Err(CliError::Usage(format!("--digits must be at most {}", zetaops::mzv::MAX_DIGITS)));
        }
        Ok(RunConfig {
            order: s.order,
            degree: s.degree,
            window: s.window,
            weight: s.weight,
            digits,
            format: s.format.unwrap_or(Format::Text),
            normalize_even: s.normalize_even.unwrap_or(false),
            suite: s.suite.unwrap_or(Suite::All),
            kmax: s.kmax.unwrap_or(4),
            mmax: s.mmax.unwrap_or(3),
            trials: s.trials.unwrap_or(50),
            seed: s.seed.unwrap_or(0x5eed),
        })
    }

    /// The settings that shape a record, for embedding in JSON output.
    pub fn echo(&self) -> BTreeMap<String, serde_json::Value> {
        let mut m = BTreeMap::new();
        m.insert("digits".into(), self.digits.into());
        m.insert("normalize_even".into(), self.normalize_even.into());
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_layering() {
        let file = Settings::parse_file("# comment\norder = 6\nformat=json\nnormalize-even = true\n").unwrap();
        let cli = Settings { order: Some(9), ..Settings::default() };
        let cfg = RunConfig::resolve(cli.over(file)).unwrap();
        assert_eq!(cfg.order, Some(9));
        assert_eq!(cfg.format, Format::Json);
        assert!(cfg.normalize_even);
        assert_eq!(cfg.digits, RunConfig::DEFAULT_DIGITS);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Settings::parse_file("colour = red").is_err());
        assert!(Settings::parse_file("order").is_err());
        assert!(Settings::parse_file("order = x").is_err());
        let zero = Settings { order: Some(0), ..Settings::default() };
        assert!(matches!(RunConfig::resolve(zero), Err(CliError::Usage(_))));
        let neg = Settings { window: Some(-3), ..Settings::default() };
        assert!(RunConfig::resolve(neg).is_err());
    }
}
