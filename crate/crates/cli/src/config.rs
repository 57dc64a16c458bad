//! Run configuration: defaults, an optional TOML file, then flag overrides.

use std::path::Path;

use serde::Deserialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub precision_bits: u32,
    pub prime_bound: u64,
    pub enumeration_cap: usize,
    pub eps: f64,
    pub c1: f64,
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision_bits: 128,
            prime_bound: 10_000,
            enumeration_cap: 1_000_000,
            eps: 1e-6,
            c1: 1.0,
            output_format: OutputFormat::Text,
        }
    }
}

/// Keys accepted in the config file; all optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub precision_bits: Option<u32>,
    pub prime_bound: Option<u64>,
    pub enumeration_cap: Option<usize>,
    pub eps: Option<f64>,
    pub c1: Option<f64>,
    pub output_format: Option<OutputFormat>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

impl Config {
    /// Later layers win: defaults, then `file`, then `flags`.
    pub fn resolve(file: ConfigFile, flags: ConfigFile) -> Result<Self, String> {
        let mut c = Config::default();
        for layer in [file, flags] {
            if let Some(v) = layer.precision_bits {
                c.precision_bits = v;
            }
            if let Some(v) = layer.prime_bound {
                c.prime_bound = v;
            }
            if let Some(v) = layer.enumeration_cap {
                c.enumeration_cap = v;
            }
            if let Some(v) = layer.eps {
                c.eps = v;
            }
            if let Some(v) = layer.c1 {
                c.c1 = v;
            }
            if let Some(v) = layer.output_format {
                c.output_format = v;
            }
        }
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), String> {
        if self.precision_bits < 64 {
            return Err(format!("precision_bits must be at least 64, got {}", self.precision_bits));
        }
        if self.prime_bound < 2 {
            return Err("prime_bound must be at least 2".into());
        }
        if self.enumeration_cap == 0 {
            return Err("enumeration_cap must be positive".into());
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(format!("eps must be positive, got {}", self.eps));
        }
        if !(self.c1 > 0.0 && self.c1.is_finite()) {
            return Err(format!("c1 must be positive, got {}", self.c1));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: ConfigFile = toml::from_str("prime_bound = 50\neps = 0.01\noutput_format = \"json\"").unwrap();
        let flags = ConfigFile {
            prime_bound: Some(70),
            ..Default::default()
        };
        let c = Config::resolve(file, flags).unwrap();
        assert_eq!(c.prime_bound, 70);
        assert_eq!(c.eps, 0.01);
        assert_eq!(c.output_format, OutputFormat::Json);
        assert_eq!(c.precision_bits, 128);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(toml::from_str::<ConfigFile>("unknown = 1").is_err());
        let low = ConfigFile {
            precision_bits: Some(32),
            ..Default::default()
        };
        assert!(Config::resolve(ConfigFile::default(), low).is_err());
        let neg = ConfigFile {
            eps: Some(-1.0),
            ..Default::default()
        };
        assert!(Config::resolve(neg, ConfigFile::default()).is_err());
    }
}
