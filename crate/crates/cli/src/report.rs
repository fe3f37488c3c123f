//! Machine-readable campaign reports with a versioned schema.
//!
//! Serialization is deterministic: fields are emitted in declaration order,
//! all collections are sorted, and wall-clock timings stay out of the JSON
//! so repeated runs of one configuration are byte-identical.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub e: u32,
    pub r: usize,
    pub n_max: usize,
    pub budget: usize,
    pub tableaux_n_max: usize,
    pub fock_check: bool,
    pub weyl_check: bool,
    pub charges: Vec<ChargeReport>,
    /// Wall-clock time of the sweep; printed in the human summary only.
    #[serde(skip)]
    pub runtime_ms: u128,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ChargeReport {
    pub charges: Vec<i64>,
    pub levels: Vec<LevelReport>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct LevelReport {
    pub n: usize,
    pub total: usize,
    pub kleshchev: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_tableaux: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_fock: Option<usize>,
    pub ladder: usize,
    pub strong_ladder: usize,
    pub multicore_kleshchev: usize,
    /// Broken proved relations; any entry makes the campaign fail.
    pub violations: Vec<String>,
    /// Data on the conjectured relations; informational only.
    pub findings: Vec<String>,
}

impl Report {
    pub fn violation_count(&self) -> usize {
        self.charges
            .iter()
            .flat_map(|c| &c.levels)
            .map(|l| l.violations.len())
            .sum()
    }

    pub fn finding_count(&self) -> usize {
        self.charges
            .iter()
            .flat_map(|c| &c.levels)
            .map(|l| l.findings.len())
            .sum()
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serialization");
        text.push('\n');
        text
    }

    /// One line per level, for terminal output.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for charge in &self.charges {
            let charges: Vec<String> = charge.charges.iter().map(i64::to_string).collect();
            out.push_str(&format!("charges ({})\n", charges.join(",")));
            for level in &charge.levels {
                out.push_str(&format!(
                    "  n={:<2} total={:<5} kleshchev={:<5} ladder={:<5} strong={:<5}",
                    level.n, level.total, level.kleshchev, level.ladder, level.strong_ladder
                ));
                if let Some(rt) = level.restricted_tableaux {
                    out.push_str(&format!(" restricted[tab]={rt:<5}"));
                }
                if let Some(rf) = level.restricted_fock {
                    out.push_str(&format!(" restricted[fock]={rf:<5}"));
                }
                out.push_str(&format!(
                    " violations={} findings={}\n",
                    level.violations.len(),
                    level.findings.len()
                ));
            }
        }
        out.push_str(&format!(
            "violations={} findings={} runtime={}ms\n",
            self.violation_count(),
            self.finding_count(),
            self.runtime_ms
        ));
        out
    }
}
