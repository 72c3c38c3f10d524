//! Plain-text `key = value` configuration, one pair per line, `#` starts a
//! comment. Keys are the long flag names; `-` and `_` are interchangeable.
//! Command-line flags take precedence over the file, the file over defaults.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::CliError;

/// Keys a configuration file may set.
pub const KNOWN_KEYS: &[&str] = &[
    "identity",
    "all",
    "y",
    "w",
    "z",
    "a",
    "m",
    "alpha",
    "k",
    "c",
    "delta",
    "target",
    "function",
    "rel_tol",
    "abs_tol",
    "max_terms",
    "max_evals",
    "output",
    "format",
    "seed",
    "random",
    "threads",
    "timing",
    "calibrate",
    "rotated",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("config line {}: expected key = value", number + 1)))?;
            let key = key.trim().to_ascii_lowercase().replace('-', "_");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::usage(format!("config line {}: unknown key {key:?}", number + 1)));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(ConfigFile { values })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// `flag` when set, else the file value parsed by `parse`.
    pub fn or_flag<T, F>(&self, flag: Option<T>, key: &str, parse: F) -> Result<Option<T>, CliError>
    where
        F: FnOnce(&str) -> Result<T, CliError>,
    {
        match (flag, self.get(key)) {
            (Some(v), _) => Ok(Some(v)),
            (None, Some(text)) => parse(text).map(Some),
            (None, None) => Ok(None),
        }
    }

    /// A repeated flag when given at all, else the file value as one entry.
    pub fn or_list(&self, flag: Vec<String>, key: &str) -> Vec<String> {
        if flag.is_empty() {
            self.get(key).map(|v| vec![v.to_string()]).unwrap_or_default()
        } else {
            flag
        }
    }

    pub fn or_switch(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        self.get(key).map_or(Ok(false), parse_bool)
    }
}

pub fn parse_bool(text: &str) -> Result<bool, CliError> {
    match text.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        other => Err(CliError::usage(format!("expected a boolean, got {other:?}"))),
    }
}

pub fn parse_from_str<T: std::str::FromStr>(text: &str) -> Result<T, CliError> {
    text.trim().parse::<T>().map_err(|_| CliError::usage(format!("cannot parse {text:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_comments() {
        let cfg = ConfigFile::parse("# sweep\nidentity = wigert\ny = 1,0;2,0  # two points\n\nrel-tol=1e-9\n").unwrap();
        assert_eq!(cfg.get("identity"), Some("wigert"));
        assert_eq!(cfg.get("y"), Some("1,0;2,0"));
        assert_eq!(cfg.get("rel_tol"), Some("1e-9"));
    }

    #[test]
    fn rejects_unknown_keys_and_bare_words() {
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("identity").is_err());
    }

    #[test]
    fn flags_win_over_the_file() {
        let cfg = ConfigFile::parse("threads = 3\ny = 5,0\ntiming = yes").unwrap();
        assert_eq!(cfg.or_flag(Some(8usize), "threads", parse_from_str).unwrap(), Some(8));
        assert_eq!(cfg.or_flag(None, "threads", parse_from_str::<usize>).unwrap(), Some(3));
        assert_eq!(cfg.or_list(vec!["1,0".into()], "y"), vec!["1,0".to_string()]);
        assert_eq!(cfg.or_list(vec![], "y"), vec!["5,0".to_string()]);
        assert!(cfg.or_switch(false, "timing").unwrap());
    }
}
