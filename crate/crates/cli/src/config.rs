//! Campaign configuration and its plain-text key/value format.
//!
//! A config file holds one `key = value` pair per line; blank lines and
//! lines starting with `#` are ignored. Recognized keys:
//!
//! ```text
//! e = 3                # modulus, 0 or >= 2
//! r = 3                # number of components
//! charges = 2,1,0      # one charge vector; repeat the key for several
//! nmax = 5             # largest size swept
//! budget = 8           # parabolic length budget for the chain search
//! fock = true          # Fock-side restrictedness cross-check
//! weyl = true          # chain-criterion cross-check (moduli >= 2)
//! tableaux-nmax = 6    # largest size for the tableau-side dominance sweep
//! ```

use std::fmt;

/// Everything a verification campaign needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CampaignConfig {
    pub e: u32,
    pub r: usize,
    pub charges: Vec<Vec<i64>>,
    pub n_max: usize,
    pub fock_check: bool,
    pub weyl_check: bool,
    pub budget: usize,
    pub tableaux_n_max: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            e: 0,
            r: 1,
            charges: Vec::new(),
            n_max: 4,
            fock_check: true,
            weyl_check: true,
            budget: 8,
            tableaux_n_max: 6,
        }
    }
}

/// Invalid configuration or config-file syntax.
#[derive(Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.e == 1 {
            return Err(err("e must be 0 or at least 2"));
        }
        if self.r == 0 {
            return Err(err("r must be positive"));
        }
        if self.charges.is_empty() {
            return Err(err("at least one charge vector is required"));
        }
        for charges in &self.charges {
            if charges.len() != self.r {
                return Err(err(format!(
                    "charge vector {charges:?} has length {}, expected r = {}",
                    charges.len(),
                    self.r
                )));
            }
        }
        Ok(())
    }

    /// Parses the plain-text key/value format described in the module docs.
    pub fn from_key_value(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = CampaignConfig::default();
        let mut saw_r = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| err(format!("line {}: invalid {what}: {value:?}", lineno + 1));
            match key {
                "e" => cfg.e = value.parse().map_err(|_| bad("e"))?,
                "r" => {
                    cfg.r = value.parse().map_err(|_| bad("r"))?;
                    saw_r = true;
                }
                "charges" => {
                    let vector = value
                        .split(',')
                        .map(|t| t.trim().parse::<i64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| bad("charges"))?;
                    cfg.charges.push(vector);
                }
                "nmax" => cfg.n_max = value.parse().map_err(|_| bad("nmax"))?,
                "budget" => cfg.budget = value.parse().map_err(|_| bad("budget"))?,
                "tableaux-nmax" => {
                    cfg.tableaux_n_max = value.parse().map_err(|_| bad("tableaux-nmax"))?
                }
                "fock" => cfg.fock_check = parse_bool(value).ok_or_else(|| bad("fock"))?,
                "weyl" => cfg.weyl_check = parse_bool(value).ok_or_else(|| bad("weyl"))?,
                other => return Err(err(format!("line {}: unknown key {other:?}", lineno + 1))),
            }
        }
        if !saw_r {
            cfg.r = cfg.charges.first().map(Vec::len).unwrap_or(0);
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn parse_bool(value: &str) -> Option<bool> {
    match value {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}
