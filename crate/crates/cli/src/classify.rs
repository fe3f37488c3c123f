//! A flat record of every predicate for one multipartition.

use kleshchev::fock::is_restricted_fock;
use kleshchev::partition::{Multipartition, Partition};
use kleshchev::tableaux::is_restricted_tableaux;
use kleshchev::weyl::{multicore_chain_exists, ChainAnswer};

use serde::Serialize;

use crate::campaign::Session;
use crate::config::CampaignConfig;

/// All predicates evaluated on one multipartition, serialization-ready.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Classification {
    pub multipartition: String,
    pub e: u32,
    pub charges: Vec<i64>,
    pub size: usize,
    pub kleshchev: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_tableaux: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_fock: Option<bool>,
    pub ladder: bool,
    pub strong_ladder: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schedule: Option<Vec<(i64, usize)>>,
    pub multicore: bool,
    pub components_restricted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<String>,
}

impl Classification {
    /// The tableau and Fock restrictedness tests agree whenever both ran.
    pub fn is_consistent(&self) -> bool {
        match (self.restricted_tableaux, self.restricted_fock) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}

/// Runs every predicate on `m`. The tableau-side restrictedness test is
/// gated to `cfg.tableaux_n_max`; the chain search runs only for moduli
/// at least 2 on multi-cores.
pub fn classify(session: &Session, m: &Multipartition, cfg: &CampaignConfig) -> Classification {
    let q = session.charges();
    let e = q.modulus();
    let schedule = session.ladders.strong_schedule(m);
    let multicore = m.is_multicore(e);
    let kleshchev = session.crystal.is_kleshchev(m);
    let chain = if cfg.weyl_check && e >= 2 && multicore {
        let cores: Vec<Partition> = m.reversed().components().to_vec();
        let answer = multicore_chain_exists(&cores, &q.reversed(), cfg.budget);
        Some(match answer {
            ChainAnswer::Yes(_) => "yes".to_owned(),
            ChainAnswer::NoWithinBudget => "no-within-budget".to_owned(),
        })
    } else {
        None
    };
    Classification {
        multipartition: m.to_string(),
        e,
        charges: q.values().to_vec(),
        size: m.size(),
        kleshchev,
        restricted_tableaux: (m.size() <= cfg.tableaux_n_max)
            .then(|| is_restricted_tableaux(m, q)),
        restricted_fock: cfg.fock_check.then(|| is_restricted_fock(m, q)),
        ladder: session.ladders.is_ladder(m),
        strong_ladder: schedule.is_some(),
        schedule: schedule
            .map(|s| s.iter().map(|(res, count)| (res.value(), *count)).collect()),
        multicore,
        components_restricted: m.components().iter().all(|c| c.is_restricted(e)),
        chain,
    }
}
