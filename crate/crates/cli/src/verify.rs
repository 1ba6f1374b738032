//! Verification suites swept over a parameter range.

use std::collections::BTreeSet;

use abacus_core::alpha::{amlev_check, build_alpha, strongs_characterization, verify_piquo, verify_triple_symmetry};
use abacus_core::core_quotient::{reconstruct, Quotient};
use abacus_core::simul_cores::{
    anderson_count, enumerate_cores, gcd, half_membership_check, kappa, kappa_size, max_triple_core_size,
};
use abacus_core::Partition;
use serde::Serialize;

use crate::args::Theorem;

/// Partitions up to this size are fed to the symmetry characterization.
const STRONGS_MAX_SIZE: usize = 14;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub params: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub theorem: &'static str,
    pub range: String,
    /// Conjunction of the instance results.
    pub passed: bool,
    pub instances: Vec<Instance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Report {
    pub fn new(theorem: &'static str, range: String, instances: Vec<Instance>) -> Self {
        let passed = instances.iter().all(|i| i.passed);
        Report { theorem, range, passed, instances, elapsed_ms: None }
    }
}

type SuiteResult = Result<Report, String>;

pub fn name(theorem: Theorem) -> &'static str {
    match theorem {
        Theorem::Piquo => "piquo",
        Theorem::Amlev => "amlev",
        Theorem::Triple => "triple",
        Theorem::Strongs => "strongs",
        Theorem::Half => "half",
        Theorem::Anderson => "anderson",
        Theorem::Sizes => "sizes",
        Theorem::All => "all",
    }
}

/// The suites `theorem` stands for, in report order.
pub fn expand(theorem: Theorem) -> Vec<Theorem> {
    match theorem {
        Theorem::All => vec![
            Theorem::Piquo,
            Theorem::Amlev,
            Theorem::Triple,
            Theorem::Strongs,
            Theorem::Half,
            Theorem::Anderson,
            Theorem::Sizes,
        ],
        single => vec![single],
    }
}

pub fn run_suite(theorem: Theorem, s_max: usize, r: Option<usize>) -> SuiteResult {
    match theorem {
        Theorem::Piquo => piquo(s_max),
        Theorem::Amlev => amlev(s_max, r),
        Theorem::Triple => triple(s_max),
        Theorem::Strongs => strongs(s_max),
        Theorem::Half => half(s_max),
        Theorem::Anderson => anderson(s_max),
        Theorem::Sizes => sizes(s_max),
        Theorem::All => unreachable!("expanded before dispatch"),
    }
}

fn err(e: abacus_core::Error) -> String {
    e.to_string()
}

fn even_from_4(s_max: usize) -> impl Iterator<Item = usize> {
    (4..=s_max).step_by(2)
}

fn coprime_pairs(s_max: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=s_max).flat_map(move |s| (s + 1..=s_max).map(move |t| (s, t))).filter(|&(s, t)| gcd(s, t) == 1)
}

fn piquo(s_max: usize) -> SuiteResult {
    let instances = even_from_4(s_max)
        .map(|s| {
            let report = verify_piquo(s).map_err(err)?;
            Ok(Instance { params: format!("s={s}"), passed: report.passed() })
        })
        .collect::<Result<_, String>>()?;
    Ok(Report::new("piquo", format!("even s in 4..={s_max}"), instances))
}

fn amlev(s_max: usize, r: Option<usize>) -> SuiteResult {
    let (values, range): (Vec<usize>, String) = match r {
        Some(r) => (vec![r], format!("r={r}")),
        None => ((3..=s_max).step_by(2).collect(), format!("odd r in 3..={s_max}")),
    };
    let instances = values
        .into_iter()
        .map(|r| Ok(Instance { params: format!("r={r}"), passed: amlev_check(r).map_err(err)? }))
        .collect::<Result<_, String>>()?;
    Ok(Report::new("amlev", range, instances))
}

fn triple(s_max: usize) -> SuiteResult {
    let instances = even_from_4(s_max)
        .map(|s| Ok(Instance { params: format!("s={s}"), passed: verify_triple_symmetry(s).map_err(err)? }))
        .collect::<Result<_, String>>()?;
    Ok(Report::new("triple", format!("even s in 4..={s_max}"), instances))
}

/// Empty core with a mirrored quotient of small self-conjugate parts.
fn mirrored_symmetric(s: usize) -> Vec<Partition> {
    const POOL: [&[usize]; 3] = [&[], &[1], &[2, 1]];
    const BUDGET: usize = 4;
    let half = s / 2;
    let mut out = Vec::new();
    let mut choice = vec![0usize; half];
    loop {
        let total: usize = choice.iter().map(|&c| POOL[c].iter().sum::<usize>()).sum();
        if total <= BUDGET {
            let parts: Vec<Partition> = choice
                .iter()
                .chain(choice.iter().rev())
                .map(|&c| Partition::new(POOL[c].to_vec()).expect("pool entries are partitions"))
                .collect();
            let quotient = Quotient::new(s, parts).expect("s parts");
            out.push(reconstruct(&Partition::empty(), &quotient).expect("the empty partition is a core"));
        }
        // Odometer over the pool.
        let Some(i) = choice.iter().rposition(|&c| c + 1 < POOL.len()) else { break };
        choice[i] += 1;
        choice[i + 1..].iter_mut().for_each(|c| *c = 0);
    }
    out
}

fn strongs(s_max: usize) -> SuiteResult {
    let small: Vec<Partition> = (0..=STRONGS_MAX_SIZE).flat_map(Partition::all_of_size).collect();
    let mut instances = Vec::new();
    for s in 2..=s_max {
        let mut candidates = small.clone();
        if s % 2 == 0 {
            candidates.extend(mirrored_symmetric(s));
            if s >= 4 {
                candidates.push(build_alpha(s).map_err(err)?.partition());
            }
        }
        let mut holds = true;
        let mut symmetric = 0;
        for lambda in &candidates {
            let verdict = strongs_characterization(lambda, s, None).map_err(err)?;
            holds &= verdict.biconditional_holds();
            symmetric += usize::from(verdict.symmetries_hold());
        }
        // Even s must exhibit the symmetric side, odd s never can.
        let witnessed = if s % 2 == 0 { symmetric > 0 } else { symmetric == 0 };
        instances.push(Instance {
            params: format!("s={s}: {} partitions, {symmetric} with both symmetries", candidates.len()),
            passed: holds && witnessed,
        });
    }
    Ok(Report::new("strongs", format!("s in 2..={s_max}"), instances))
}

fn half(s_max: usize) -> SuiteResult {
    let instances = coprime_pairs(s_max)
        .map(|(s, t)| {
            Ok(Instance { params: format!("(s,t)=({s},{t})"), passed: half_membership_check(s, t).map_err(err)? })
        })
        .collect::<Result<_, String>>()?;
    Ok(Report::new("half", format!("coprime 2 <= s < t <= {s_max}"), instances))
}

fn anderson(s_max: usize) -> SuiteResult {
    let instances = coprime_pairs(s_max)
        .filter(|&(s, t)| s + t <= s_max + 1)
        .map(|(s, t)| {
            let cores: Vec<Partition> = enumerate_cores(s, t).map_err(err)?.collect();
            let distinct = cores.iter().collect::<BTreeSet<_>>().len() == cores.len();
            let all_cores = cores.iter().all(|c| c.is_t_core(s) && c.is_t_core(t));
            let expected = anderson_count(s, t);
            Ok(Instance {
                params: format!("(s,t)=({s},{t}): {} cores, expected {expected}", cores.len()),
                passed: distinct && all_cores && cores.len() as u128 == expected,
            })
        })
        .collect::<Result<_, String>>()?;
    Ok(Report::new("anderson", format!("coprime 2 <= s < t, s+t <= {}", s_max + 1), instances))
}

fn sizes(s_max: usize) -> SuiteResult {
    let mut instances: Vec<Instance> = coprime_pairs(s_max)
        .map(|(s, t)| {
            let k = kappa(s, t).map_err(err)?;
            Ok(Instance {
                params: format!("(s,t)=({s},{t}): size {}", k.size()),
                passed: k.size() == kappa_size(s, t) && k.is_t_core(s) && k.is_t_core(t),
            })
        })
        .collect::<Result<_, String>>()?;
    for s in even_from_4(s_max) {
        let k = kappa(s - 1, s + 1).map_err(err)?;
        let triple = max_triple_core_size(s).map_err(err)?;
        instances.push(Instance {
            params: format!("s={s}: {} = 4 * {triple}, not an {s}-core", k.size()),
            passed: k.size() == 4 * triple && !k.is_t_core(s),
        });
    }
    Ok(Report::new("sizes", format!("coprime 2 <= s < t <= {s_max}; even s in 4..={s_max}"), instances))
}

/// Plain-text report: a summary line per suite with its instances indented below.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for report in reports {
        let passed = report.instances.iter().filter(|i| i.passed).count();
        out.push_str(&format!(
            "{}: {} ({passed}/{} instances; {})",
            report.theorem,
            verdict(report.passed),
            report.instances.len(),
            report.range
        ));
        if let Some(ms) = report.elapsed_ms {
            out.push_str(&format!(" [{ms:.3} ms]"));
        }
        out.push('\n');
        for instance in &report.instances {
            out.push_str(&format!("  {}: {}\n", instance.params, verdict(instance.passed)));
        }
    }
    if reports.len() > 1 {
        out.push_str(&format!("all: {}\n", verdict(reports.iter().all(|r| r.passed))));
    }
    out
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}
