//! Optional `key = value` settings file.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Result, VerifyError};

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub default_order: Option<i64>,
    pub jobs: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| VerifyError::Config(e.message().to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| VerifyError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys() {
        let c = Config::parse("default_order = 50\njobs = 4\n").unwrap();
        assert_eq!(c, Config { default_order: Some(50), jobs: Some(4) });
        assert_eq!(Config::parse("").unwrap(), Config::default());
        assert!(Config::parse("colour = 1").is_err());
        assert!(Config::parse("jobs = \"many\"").is_err());
    }
}
