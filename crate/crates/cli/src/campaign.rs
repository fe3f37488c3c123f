//! Exhaustive verification campaigns over (e, Q, r, n).
//!
//! Every level computes the full class sets and then checks the proved
//! inclusions — strong ladder inside restricted inside Kleshchev, strong
//! ladder inside ladder, Kleshchev multi-cores inside strong ladder, the
//! straightening expansion, the chain criterion, and the collapse of all
//! four classes at modulus 0. A broken proved relation is a violation and
//! fails the campaign; data on the conjectured equalities is reported as
//! findings and never fails anything.

use std::fs;
use std::io;
use std::path::Path;
use std::time::Instant;

use kleshchev::crystal::{crystal_graph, KleshchevCache};
use kleshchev::fock::{restricted_fock_set, verify_straightening};
use kleshchev::ladders::{LadderCache, Schedule};
use kleshchev::partition::{enumerate_multipartitions, ChargeVector, Multipartition, Partition};
use kleshchev::tableaux::restricted_set;
use kleshchev::weyl::multicore_chain_exists;

use crate::config::CampaignConfig;
use crate::report::{ChargeReport, LevelReport, Report, SCHEMA_VERSION};

/// Shared caches for one charge vector; every sweep of a configuration
/// reuses the same instance.
pub struct Session {
    pub crystal: KleshchevCache,
    pub ladders: LadderCache,
}

impl Session {
    pub fn new(q: ChargeVector) -> Self {
        Session {
            crystal: KleshchevCache::new(q.clone()),
            ladders: LadderCache::new(q),
        }
    }

    pub fn charges(&self) -> &ChargeVector {
        self.crystal.charges()
    }
}

/// The class data of one level, aligned with the shape enumeration.
pub struct LevelSets {
    pub shapes: Vec<Multipartition>,
    pub kleshchev: Vec<bool>,
    pub ladder: Vec<bool>,
    pub strong: Vec<Option<Schedule>>,
    pub restricted_tableaux: Option<Vec<bool>>,
    pub restricted_fock: Option<Vec<bool>>,
    pub multicore: Vec<bool>,
}

fn membership(shapes: &[Multipartition], subset: Vec<Multipartition>) -> Vec<bool> {
    let set: std::collections::BTreeSet<Multipartition> = subset.into_iter().collect();
    shapes.iter().map(|m| set.contains(m)).collect()
}

/// Classifies a whole level, fanning out over shapes when the `parallel`
/// feature is active.
pub fn level_sets(
    session: &Session,
    n: usize,
    with_tableaux: bool,
    with_fock: bool,
) -> LevelSets {
    let q = session.charges();
    let shapes = enumerate_multipartitions(q.r(), n);
    #[cfg(feature = "parallel")]
    let flags: Vec<(bool, bool, Option<Schedule>)> = {
        use rayon::prelude::*;
        shapes
            .par_iter()
            .map(|m| {
                (
                    session.crystal.is_kleshchev(m),
                    session.ladders.is_ladder(m),
                    session.ladders.strong_schedule(m),
                )
            })
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let flags: Vec<(bool, bool, Option<Schedule>)> = shapes
        .iter()
        .map(|m| {
            (
                session.crystal.is_kleshchev(m),
                session.ladders.is_ladder(m),
                session.ladders.strong_schedule(m),
            )
        })
        .collect();
    let e = q.modulus();
    LevelSets {
        kleshchev: flags.iter().map(|f| f.0).collect(),
        ladder: flags.iter().map(|f| f.1).collect(),
        strong: flags.into_iter().map(|f| f.2).collect(),
        restricted_tableaux: with_tableaux
            .then(|| membership(&shapes, restricted_set(q.r(), n, q))),
        restricted_fock: with_fock
            .then(|| membership(&shapes, restricted_fock_set(q.r(), n, q))),
        multicore: shapes.iter().map(|m| m.is_multicore(e)).collect(),
        shapes,
    }
}

/// Sequential twin of [`level_sets`], kept for benchmarking and as the
/// fallback body when the `parallel` feature is off.
pub fn level_sets_seq(
    session: &Session,
    n: usize,
    with_tableaux: bool,
    with_fock: bool,
) -> LevelSets {
    let q = session.charges();
    let shapes = enumerate_multipartitions(q.r(), n);
    let e = q.modulus();
    LevelSets {
        kleshchev: shapes.iter().map(|m| session.crystal.is_kleshchev(m)).collect(),
        ladder: shapes.iter().map(|m| session.ladders.is_ladder(m)).collect(),
        strong: shapes.iter().map(|m| session.ladders.strong_schedule(m)).collect(),
        restricted_tableaux: with_tableaux
            .then(|| membership(&shapes, kleshchev::tableaux::restricted_set_seq(q.r(), n, q))),
        restricted_fock: with_fock
            .then(|| membership(&shapes, kleshchev::fock::restricted_fock_set_seq(q.r(), n, q))),
        multicore: shapes.iter().map(|m| m.is_multicore(e)).collect(),
        shapes,
    }
}

fn count(flags: &[bool]) -> usize {
    flags.iter().filter(|&&b| b).count()
}

fn check_level(session: &Session, cfg: &CampaignConfig, n: usize, sets: &LevelSets) -> LevelReport {
    let q = session.charges();
    let e = q.modulus();
    let mut violations = Vec::new();
    let mut findings = Vec::new();

    for (idx, m) in sets.shapes.iter().enumerate() {
        let kle = sets.kleshchev[idx];
        let lad = sets.ladder[idx];
        let strong = sets.strong[idx].is_some();
        let restricted = sets
            .restricted_fock
            .as_ref()
            .map(|f| f[idx])
            .or(sets.restricted_tableaux.as_ref().map(|f| f[idx]));

        if strong && !lad {
            violations.push(format!("strong ladder {m} is not a ladder multipartition"));
        }
        if let Some(restricted) = restricted {
            if strong && !restricted {
                violations.push(format!("strong ladder {m} is not restricted"));
            }
            if restricted && !kle {
                violations.push(format!("restricted {m} is not Kleshchev"));
            }
            if e == 0 && kle && !restricted {
                violations.push(format!("Kleshchev {m} is not restricted at e = 0"));
            }
        }
        if kle && sets.multicore[idx] && !strong {
            violations.push(format!("Kleshchev multi-core {m} is not strong ladder"));
        }
        if let (Some(tab), Some(fock)) = (&sets.restricted_tableaux, &sets.restricted_fock) {
            if tab[idx] != fock[idx] {
                violations.push(format!(
                    "restrictedness tests disagree on {m}: tableaux={} fock={}",
                    tab[idx], fock[idx]
                ));
            }
        }
        if e == 0 {
            if kle && !strong {
                violations.push(format!("Kleshchev {m} is not strong ladder at e = 0"));
            }
            if lad && !strong {
                violations.push(format!("ladder {m} is not strong ladder at e = 0"));
            }
        } else {
            if kle && !strong {
                findings.push(format!("Kleshchev but not strong ladder: {m}"));
            }
            if lad && !strong {
                findings.push(format!("ladder but not strong ladder: {m}"));
            }
            if let Some(restricted) = restricted {
                if kle && !restricted {
                    findings.push(format!("Kleshchev but not restricted: {m}"));
                }
            }
        }
    }

    if cfg.fock_check {
        for (idx, m) in sets.shapes.iter().enumerate() {
            if let Some(schedule) = &sets.strong[idx] {
                if !verify_straightening(m, schedule, q) {
                    violations.push(format!("straightening expansion fails for {m}"));
                }
            }
        }
    }

    if cfg.weyl_check && e >= 2 {
        for (idx, m) in sets.shapes.iter().enumerate() {
            if !sets.multicore[idx] {
                continue;
            }
            let cores: Vec<Partition> = m.reversed().components().to_vec();
            let reversed_q = q.reversed();
            let answer = multicore_chain_exists(&cores, &reversed_q, cfg.budget);
            match (answer.is_yes(), sets.kleshchev[idx]) {
                (true, false) => violations.push(format!(
                    "chain criterion certifies non-Kleshchev multi-core {m}"
                )),
                (false, true) => {
                    // one-sided search: escalate once with a doubled budget
                    let retry = multicore_chain_exists(&cores, &reversed_q, cfg.budget * 2);
                    if retry.is_yes() {
                        findings.push(format!(
                            "chain for Kleshchev multi-core {m} needed budget {}",
                            cfg.budget * 2
                        ));
                    } else {
                        findings.push(format!(
                            "no chain for Kleshchev multi-core {m} within budget {}",
                            cfg.budget * 2
                        ));
                    }
                }
                _ => {}
            }
        }
    }

    LevelReport {
        n,
        total: sets.shapes.len(),
        kleshchev: count(&sets.kleshchev),
        restricted_tableaux: sets.restricted_tableaux.as_ref().map(|f| count(f)),
        restricted_fock: sets.restricted_fock.as_ref().map(|f| count(f)),
        ladder: count(&sets.ladder),
        strong_ladder: sets.strong.iter().filter(|s| s.is_some()).count(),
        multicore_kleshchev: sets
            .kleshchev
            .iter()
            .zip(&sets.multicore)
            .filter(|(&k, &c)| k && c)
            .count(),
        violations,
        findings,
    }
}

/// Runs the full campaign: every charge vector, every level up to `n_max`.
pub fn run_campaign(cfg: &CampaignConfig) -> Report {
    cfg.validate().expect("configuration must be validated before running");
    let start = Instant::now();
    let charges = cfg
        .charges
        .iter()
        .map(|charges| {
            let q = ChargeVector::new(cfg.e, charges.clone());
            let session = Session::new(q.clone());
            let levels = (0..=cfg.n_max)
                .map(|n| {
                    let sets = level_sets(
                        &session,
                        n,
                        n <= cfg.tableaux_n_max,
                        cfg.fock_check,
                    );
                    check_level(&session, cfg, n, &sets)
                })
                .collect();
            ChargeReport { charges: q.values().to_vec(), levels }
        })
        .collect();
    Report {
        schema_version: SCHEMA_VERSION,
        e: cfg.e,
        r: cfg.r,
        n_max: cfg.n_max,
        budget: cfg.budget,
        tableaux_n_max: cfg.tableaux_n_max,
        fock_check: cfg.fock_check,
        weyl_check: cfg.weyl_check,
        charges,
        runtime_ms: start.elapsed().as_millis(),
    }
}

/// Runs the campaign and flattens everything a conjecture hunter cares
/// about: all findings with their context, plus summary evidence on ranges
/// where the conjectured equalities held.
pub fn find_counterexamples(cfg: &CampaignConfig) -> Vec<String> {
    let report = run_campaign(cfg);
    let mut out = Vec::new();
    for charge in &report.charges {
        let label: Vec<String> = charge.charges.iter().map(i64::to_string).collect();
        let label = label.join(",");
        let mut clean = true;
        for level in &charge.levels {
            for violation in &level.violations {
                out.push(format!("VIOLATION e={} Q={} n={}: {}", cfg.e, label, level.n, violation));
            }
            for finding in &level.findings {
                clean = false;
                out.push(format!("e={} Q={} n={}: {}", cfg.e, label, level.n, finding));
            }
        }
        if cfg.e >= 2 && clean {
            let kleshchev: usize = charge.levels.iter().map(|l| l.kleshchev).sum();
            let multicore: usize = charge.levels.iter().map(|l| l.multicore_kleshchev).sum();
            out.push(format!(
                "e={} Q={} n<={}: conjectured equalities hold; {} Kleshchev shapes are strong ladder ({} beyond the multi-core case)",
                cfg.e,
                label,
                cfg.n_max,
                kleshchev,
                kleshchev - multicore
            ));
        }
    }
    out
}

/// Writes the good lattice in DOT form and returns the rendered text.
pub fn export_graph(q: &ChargeVector, n_max: usize, path: &Path) -> io::Result<String> {
    let dot = crystal_graph(q, n_max).to_dot();
    fs::write(path, &dot)?;
    Ok(dot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config(e: u32, charges: Vec<i64>, n_max: usize) -> CampaignConfig {
        CampaignConfig {
            e,
            r: charges.len(),
            charges: vec![charges],
            n_max,
            fock_check: true,
            weyl_check: true,
            budget: 8,
            tableaux_n_max: 6,
        }
    }

    #[test]
    fn modulus_zero_classes_collapse() {
        let report = run_campaign(&quick_config(0, vec![0, 1], 4));
        assert_eq!(report.violation_count(), 0);
        for level in &report.charges[0].levels {
            assert_eq!(level.kleshchev, level.ladder);
            assert_eq!(level.kleshchev, level.strong_ladder);
            assert_eq!(Some(level.kleshchev), level.restricted_fock);
        }
    }

    #[test]
    fn modulus_three_example_is_clean() {
        let report = run_campaign(&quick_config(3, vec![2, 1, 0], 4));
        assert_eq!(report.violation_count(), 0);
    }

    #[test]
    fn reports_are_byte_identical() {
        let cfg = quick_config(2, vec![0, 1], 4);
        let a = run_campaign(&cfg).to_json();
        let b = run_campaign(&cfg).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn level_sets_match_sequential() {
        let session = Session::new(ChargeVector::new(3, vec![2, 1, 0]));
        for n in 0..=4 {
            let par = level_sets(&session, n, true, true);
            let seq = level_sets_seq(&session, n, true, true);
            assert_eq!(par.kleshchev, seq.kleshchev);
            assert_eq!(par.ladder, seq.ladder);
            assert_eq!(par.strong, seq.strong);
            assert_eq!(par.restricted_tableaux, seq.restricted_tableaux);
            assert_eq!(par.restricted_fock, seq.restricted_fock);
        }
    }

    #[test]
    fn hunt_reports_supporting_evidence() {
        let lines = find_counterexamples(&quick_config(3, vec![2, 1], 4));
        assert!(lines.iter().all(|l| !l.starts_with("VIOLATION")));
        assert!(lines.iter().any(|l| l.contains("conjectured equalities hold")));
    }
}
