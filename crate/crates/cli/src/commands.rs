use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io;
use std::time::Instant;

use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use vq_chartab::character::{
    character_table, character_table_for, default_label, label_orbits, verify_with_table,
    CharLabel, CharacterTable, Report,
};
use vq_chartab::group::QuaternionSubgroup;
use vq_chartab::selftest::run_selftest;
use vq_chartab::Error;

use crate::cache;
use crate::config::{CliConfig, Format, Subject};
use crate::output::emit;
use crate::render;

/// Exit codes: 0 pass, 1 verification failure, 2 usage, 3 internal invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Failed = 1,
    Usage = 2,
    Internal = 3,
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Output(io::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Lib(Error::Usage(_) | Error::Parse(_)) => Status::Usage,
            CliError::Lib(_) => Status::Internal,
            CliError::Output(_) => Status::Usage,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Output(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Output(e)
    }
}

pub fn run(cfg: &CliConfig) -> Result<Status, CliError> {
    match &cfg.subject {
        Subject::Verify { .. } => cmd_verify(cfg),
        Subject::Table { .. } => cmd_table(cfg),
        Subject::Scan { .. } => cmd_scan(cfg),
        Subject::Selftest { .. } => cmd_selftest(cfg),
    }
}

fn timed_table(
    build: impl FnOnce() -> vq_chartab::Result<CharacterTable>,
) -> Result<(CharacterTable, f64), CliError> {
    let start = Instant::now();
    let table = build()?;
    Ok((table, start.elapsed().as_secs_f64() * 1e3))
}

pub fn cmd_verify(cfg: &CliConfig) -> Result<Status, CliError> {
    let Subject::Verify { prime, label } = cfg.subject else {
        unreachable!("cmd_verify on another subject")
    };
    let label = match label {
        Some(raw) => CharLabel::new(raw.0, raw.1, prime),
        None => default_label(prime),
    };

    let (table, table_ms) = timed_table(|| character_table(prime))?;
    let mut report = verify_with_table(&table, &label)?;
    report.timings.table_ms = table_ms;
    let mut reports = vec![report];

    if cfg.alt_subgroup {
        match QuaternionSubgroup::alternative(prime)? {
            Some(q) => {
                let (alt, ms) = timed_table(|| character_table_for(q))?;
                let mut r = verify_with_table(&alt, &label)?;
                r.timings.table_ms = ms;
                reports.push(r);
            }
            None => {
                info!("SL_2({prime}) has no second quaternion subgroup among the tried conjugates")
            }
        }
    }

    let body = match cfg.format {
        Format::Text => {
            let mut s = render::report_text(&reports[0]);
            if let Some(alt) = reports.get(1) {
                s.push_str("\nalternative quaternion subgroup\n");
                s.push_str(&render::report_text(alt));
            }
            s
        }
        Format::Json => {
            let json = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            };
            json.map_err(io::Error::other)? + "\n"
        }
        Format::Csv => render::report_csv(&reports),
    };
    emit(cfg.out.as_deref(), &body)?;
    Ok(if reports.iter().all(|r| r.pass) {
        Status::Pass
    } else {
        Status::Failed
    })
}

pub fn cmd_table(cfg: &CliConfig) -> Result<Status, CliError> {
    let Subject::Table { prime } = cfg.subject else {
        unreachable!("cmd_table on another subject")
    };
    let doc = cache::table_document(prime, cfg.cache_dir.as_deref())?;
    let body = match cfg.format {
        Format::Text => render::table_text(&doc),
        Format::Json => serde_json::to_string_pretty(&doc).map_err(io::Error::other)? + "\n",
        Format::Csv => render::table_csv(&doc),
    };
    emit(cfg.out.as_deref(), &body)?;
    Ok(Status::Pass)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabelResult {
    pub label: [u32; 2],
    pub chi: String,
    pub nu2: i128,
    pub psi_multiplicity: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeSummary {
    pub prime: u32,
    pub group_order: u64,
    pub class_count: usize,
    pub labels: Vec<LabelResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternative: Option<Vec<LabelResult>>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub primes: Vec<PrimeSummary>,
    /// `p=…, label=a,b` for every failing pair.
    pub failures: Vec<String>,
    pub pass: bool,
}

fn label_result(r: &Report) -> LabelResult {
    LabelResult {
        label: r.label,
        chi: r.chi_row.clone(),
        nu2: r.nu2,
        psi_multiplicity: r.psi_multiplicity,
        pass: r.pass,
    }
}

fn verify_all_reps(table: &CharacterTable) -> Result<Vec<LabelResult>, CliError> {
    label_orbits(table.group().quaternion())?
        .iter()
        .map(|l| Ok(label_result(&verify_with_table(table, l)?)))
        .collect()
}

fn scan_prime(p: u32, alt_subgroup: bool, timings: bool) -> Result<PrimeSummary, CliError> {
    let start = Instant::now();
    let table = character_table(p)?;
    let labels = verify_all_reps(&table)?;
    let alternative = match alt_subgroup {
        true => QuaternionSubgroup::alternative(p)?
            .map(|q| verify_all_reps(&character_table_for(q)?))
            .transpose()?,
        false => None,
    };
    let pass = labels.iter().all(|l| l.pass) && alternative.iter().flatten().all(|l| l.pass);
    Ok(PrimeSummary {
        prime: p,
        group_order: table.classes().group_order() as u64,
        class_count: table.classes().len(),
        labels,
        alternative,
        pass,
        elapsed_ms: timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

/// Runs every prime, on `jobs` threads, and returns the summary sorted by prime.
pub fn scan(
    primes: &[u32],
    jobs: usize,
    alt_subgroup: bool,
    timings: bool,
) -> Result<ScanSummary, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
    let mut results: Vec<PrimeSummary> = pool.install(|| {
        primes
            .par_iter()
            .map(|&p| scan_prime(p, alt_subgroup, timings))
            .collect::<Result<_, _>>()
    })?;
    results.sort_by_key(|s| s.prime);
    let mut failures = Vec::new();
    for s in &results {
        let alt = s
            .alternative
            .iter()
            .flatten()
            .map(|l| (l, " (alternative Q)"));
        for (l, tag) in s.labels.iter().map(|l| (l, "")).chain(alt) {
            if !l.pass {
                failures.push(format!(
                    "p={}, label={},{}{tag}",
                    s.prime, l.label[0], l.label[1]
                ));
            }
        }
    }
    Ok(ScanSummary {
        pass: failures.is_empty(),
        primes: results,
        failures,
    })
}

fn scan_text(summary: &ScanSummary) -> String {
    let mut s = String::new();
    for p in &summary.primes {
        let distinct: BTreeSet<u64> = p.labels.iter().map(|l| l.psi_multiplicity).collect();
        let mults: Vec<String> = distinct.iter().map(ToString::to_string).collect();
        let _ = write!(
            s,
            "p = {:<3} |G| = {:<6} labels {:<4} [χ², ψ] ∈ {{{}}}  {}",
            p.prime,
            p.group_order,
            p.labels.len(),
            mults.join(","),
            if p.pass { "PASS" } else { "FAIL" }
        );
        if let Some(alt) = &p.alternative {
            let _ = write!(s, "  (alternative Q: {} labels)", alt.len());
        }
        if let Some(ms) = p.elapsed_ms {
            let _ = write!(s, "  {ms:.0} ms");
        }
        s.push('\n');
    }
    for f in &summary.failures {
        let _ = writeln!(s, "FAILED {f}");
    }
    let _ = writeln!(
        s,
        "{} primes, verdict: {}",
        summary.primes.len(),
        if summary.pass { "PASS" } else { "FAIL" }
    );
    s
}

fn scan_csv(summary: &ScanSummary) -> String {
    let mut s = String::from("prime,label,chi,nu2,psi_multiplicity,pass\n");
    for p in &summary.primes {
        for l in &p.labels {
            let _ = writeln!(
                s,
                "{},\"{},{}\",{},{},{},{}",
                p.prime, l.label[0], l.label[1], l.chi, l.nu2, l.psi_multiplicity, l.pass
            );
        }
    }
    s
}

pub fn cmd_scan(cfg: &CliConfig) -> Result<Status, CliError> {
    let Subject::Scan { primes } = &cfg.subject else {
        unreachable!("cmd_scan on another subject")
    };
    let summary = scan(primes, cfg.jobs, cfg.alt_subgroup, cfg.timings)?;
    let body = match cfg.format {
        Format::Text => scan_text(&summary),
        Format::Json => serde_json::to_string_pretty(&summary).map_err(io::Error::other)? + "\n",
        Format::Csv => scan_csv(&summary),
    };
    emit(cfg.out.as_deref(), &body)?;
    for f in &summary.failures {
        eprintln!("verification failed: {f}");
    }
    Ok(if summary.pass {
        Status::Pass
    } else {
        Status::Failed
    })
}

pub fn cmd_selftest(cfg: &CliConfig) -> Result<Status, CliError> {
    let Subject::Selftest { prime } = cfg.subject else {
        unreachable!("cmd_selftest on another subject")
    };
    let outcome = run_selftest(prime, cfg.prime_bound)?;
    let body = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&outcome).map_err(io::Error::other)? + "\n",
        Format::Text | Format::Csv => render::selftest_text(&outcome),
    };
    emit(cfg.out.as_deref(), &body)?;
    Ok(if outcome.all_passed() {
        Status::Pass
    } else {
        Status::Internal
    })
}
