//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use abacus_core::abacus::BeadSet;
use abacus_core::alpha::{amlev_check, build_alpha, nest, strongs_characterization, verify_triple_symmetry};
use abacus_core::core_quotient::{
    conjugate_quotient_check, reconstruct, s_core, s_quotient, size_decomposition, Quotient,
};
use abacus_core::simul_cores::{
    anderson_count, enumerate_cores, half_membership_check, kappa, kappa_size, max_triple_core_size,
};
use abacus_core::Partition;
use common::{gcd, p, partitions_up_to, random_partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_ab4c;
const RANDOM_INSTANCES: usize = 500;
const MAX_RANDOM_SIZE: usize = 40;

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn coprime_pairs(max: usize) -> Vec<(usize, usize)> {
    (2..=max).flat_map(|s| ((s + 1)..=max).map(move |t| (s, t))).filter(|&(s, t)| gcd(s, t) == 1).collect()
}

fn even_s() -> impl Iterator<Item = usize> {
    (4..=12).step_by(2)
}

fn criterion_1() -> Outcome {
    let k = kappa(3, 5).unwrap();
    let hooks = k.first_column_hooks();
    if k != p(&[4, 2, 1, 1]) || k.size() != 8 || hooks != [7, 4, 2, 1] {
        return fail(format!("kappa(3,5) = {k}, size {}, hooks {hooks:?}", k.size()));
    }
    ok("kappa(3,5) = (4,2,1,1), size 8, first-column hooks {7,4,2,1}")
}

fn criterion_2() -> Outcome {
    let pairs = coprime_pairs(13);
    for &(s, t) in &pairs {
        let k = kappa(s, t).unwrap();
        if k.size() * 24 != (s * s - 1) * (t * t - 1) {
            return fail(format!("|kappa({s},{t})| = {} != {}", k.size(), kappa_size(s, t)));
        }
    }
    ok(format!("{} coprime pairs with 2 <= s < t <= 13", pairs.len()))
}

fn criterion_3() -> Outcome {
    let pairs: Vec<_> = coprime_pairs(12).into_iter().filter(|&(s, t)| s + t <= 13).collect();
    for &(s, t) in &pairs {
        let mut listed: Vec<Partition> = enumerate_cores(s, t).unwrap().collect();
        if listed.len() as u128 != anderson_count(s, t) {
            return fail(format!("({s},{t}): {} cores, expected {}", listed.len(), anderson_count(s, t)));
        }
        if s + t <= 9 {
            let mut brute: Vec<Partition> =
                partitions_up_to(kappa_size(s, t)).filter(|q| q.is_t_core(s) && q.is_t_core(t)).collect();
            listed.sort();
            brute.sort();
            if listed != brute {
                return fail(format!("({s},{t}): enumeration disagrees with brute-force scan"));
            }
        }
    }
    ok(format!("{} pairs with s+t <= 13; brute-force agreement for s+t <= 9", pairs.len()))
}

fn criterion_4() -> Outcome {
    let k = kappa(7, 9).unwrap();
    let expected = Quotient::new(
        8,
        [&[3, 2, 1][..], &[2, 1], &[1], &[], &[], &[1], &[2, 1], &[3, 2, 1]].iter().map(|q| p(q)).collect(),
    )
    .unwrap();
    let quotient = s_quotient(&k, 8);
    let core = s_core(&k, 8);
    if quotient != expected || !core.is_empty() {
        return fail(format!("8-quotient {:?}, 8-core {core}", quotient.parts()));
    }
    ok("8-quotient of kappa(7,9) is (3,2,1),(2,1),(1),∅,∅,(1),(2,1),(3,2,1); 8-core ∅")
}

const ALPHA_8_BEADS: [usize; 24] =
    [1, 2, 3, 4, 5, 6, 8, 10, 11, 12, 13, 15, 17, 19, 20, 22, 24, 26, 29, 31, 33, 38, 40, 47];

fn criterion_5() -> Outcome {
    let alpha_8 = build_alpha(8).unwrap();
    if alpha_8.bead_set().beads() != ALPHA_8_BEADS {
        return fail(format!("alpha(8) beads {}", alpha_8.bead_set()));
    }
    for s in [6, 8, 10, 12] {
        if nest(&build_alpha(s - 2).unwrap()) != build_alpha(s).unwrap() {
            return fail(format!("nest(alpha({})) != alpha({s})", s - 2));
        }
    }
    for s in even_s() {
        if build_alpha(s).unwrap().partition() != kappa(s - 1, s + 1).unwrap() {
            return fail(format!("alpha({s}) does not encode kappa({},{})", s - 1, s + 1));
        }
    }
    ok("alpha(8) bead positions match; nesting for s in {6,8,10,12}; alpha(s) = kappa(s-1,s+1) for even s in 4..=12")
}

fn criterion_6() -> Outcome {
    for r in [3, 5, 7, 9, 11] {
        if !amlev_check(r).unwrap() {
            return fail(format!("rectangle symmetry fails for r={r}"));
        }
    }
    for s in even_s() {
        if !verify_triple_symmetry(s).unwrap() {
            return fail(format!("triple symmetry fails for s={s}"));
        }
    }
    ok("rectangle symmetry for r in {3,5,7,9,11}; triple symmetry for even s in 4..=12")
}

fn criterion_7() -> Outcome {
    for s in even_s() {
        let k = kappa(s - 1, s + 1).unwrap();
        let triple = max_triple_core_size(s).unwrap();
        if k.size() != 4 * triple {
            return fail(format!("s={s}: |kappa| = {} but 4 * {triple} = {}", k.size(), 4 * triple));
        }
        if k.is_t_core(s) {
            return fail(format!("kappa({},{}) is an {s}-core", s - 1, s + 1));
        }
    }
    let at_8 = kappa(7, 9).unwrap().size();
    ok(format!(
        "ratio 4 for even s in 4..=12 ({at_8} = 4*{} at s=8); never an s-core",
        max_triple_core_size(8).unwrap()
    ))
}

/// Self-conjugate partitions of size at most `max`, used to build symmetric abaci.
fn self_conjugates(max: usize) -> Vec<Partition> {
    partitions_up_to(max).filter(Partition::is_self_conjugate).collect()
}

/// Empty core, mirrored self-conjugate quotient: both symmetries by construction.
fn random_symmetric(rng: &mut impl Rng, s: usize, max_size: usize, pool: &[Partition]) -> Partition {
    loop {
        let half: Vec<Partition> = (0..s / 2).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect();
        let total: usize = half.iter().map(Partition::size).sum();
        if 2 * s * total > max_size {
            continue;
        }
        let parts = half.iter().cloned().chain(half.iter().rev().cloned()).collect();
        return reconstruct(&Partition::empty(), &Quotient::new(s, parts).unwrap()).unwrap();
    }
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();

    for _ in 0..RANDOM_INSTANCES {
        let lambda = random_partition(&mut rng, MAX_RANDOM_SIZE);
        let s = rng.random_range(2..=9);
        let core = s_core(&lambda, s);
        let quotient = s_quotient(&lambda, s);
        if reconstruct(&core, &quotient).ok() != Some(lambda.clone()) {
            failures.push(format!("roundtrip {lambda} s={s}"));
        }
        let (core_size, total) = size_decomposition(&lambda, s);
        if lambda.size() != core_size + s * total {
            failures.push(format!("size identity {lambda} s={s}"));
        }
    }

    for _ in 0..RANDOM_INSTANCES {
        let lambda = random_partition(&mut rng, MAX_RANDOM_SIZE);
        let s = rng.random_range(2..=6);
        if !conjugate_quotient_check(&lambda, s) {
            failures.push(format!("conjugate quotient {lambda} s={s}"));
        }
    }

    for _ in 0..RANDOM_INSTANCES {
        let lambda = random_partition(&mut rng, MAX_RANDOM_SIZE);
        let x = BeadSet::minimal(&lambda);
        let axis = x.axis();
        if !axis.balances(&x) || x.is_self_conjugate_axis() != lambda.is_self_conjugate() {
            failures.push(format!("axis {lambda}"));
        }
    }

    let pool = self_conjugates(10);
    let mut characterized = 0;
    let mut symmetric = 0;
    for s in [4, 6] {
        for q in [2, 4, 6] {
            let mut bucket = 0;
            let mut attempts = 0;
            while bucket < 200 && attempts < 500_000 {
                attempts += 1;
                let lambda = if attempts % 2 == 0 {
                    random_symmetric(&mut rng, s, MAX_RANDOM_SIZE, &pool)
                } else {
                    random_partition(&mut rng, MAX_RANDOM_SIZE)
                };
                let verdict = strongs_characterization(&lambda, s, None).unwrap();
                if verdict.q != q {
                    continue;
                }
                bucket += 1;
                symmetric += usize::from(verdict.symmetries_hold());
                if !verdict.biconditional_holds() {
                    failures.push(format!("characterization {lambda} s={s} q={q}"));
                }
            }
            if bucket < 200 {
                failures.push(format!("only {bucket} instances with s={s} q={q}"));
            }
            characterized += bucket;
        }
    }

    if failures.is_empty() {
        ok(format!(
            "{RANDOM_INSTANCES} roundtrip + size identity, {RANDOM_INSTANCES} conjugate-quotient, \
             {RANDOM_INSTANCES} axis, {characterized} characterization ({symmetric} symmetric) instances"
        ))
    } else {
        fail(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn criterion_9() -> Outcome {
    let pairs = coprime_pairs(13);
    for &(s, t) in &pairs {
        if !half_membership_check(s, t).unwrap() {
            return fail(format!("({s},{t})"));
        }
    }
    ok(format!("{} coprime pairs with s, t <= 13", pairs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 maximal (3,5)-core", Duration::from_millis(1), criterion_1),
        ("AC2 maximal core sizes", Duration::from_secs(1), criterion_2),
        ("AC3 simultaneous core counts", Duration::from_secs(30), criterion_3),
        ("AC4 8-quotient of kappa(7,9)", Duration::from_millis(10), criterion_4),
        ("AC5 alpha abacus, nesting, alpha = kappa", Duration::from_secs(1), criterion_5),
        ("AC6 rectangle and triple symmetry", Duration::from_secs(1), criterion_6),
        ("AC7 triple-core ratio, not an s-core", Duration::from_secs(1), criterion_7),
        ("AC8 randomized property suites", Duration::from_secs(60), criterion_8),
        ("AC9 half of 1..(s-1)(t-1) are gaps", Duration::from_secs(1), criterion_9),
    ];

    let mut all_passed = true;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < budget;
        let passed = outcome.passed && in_time;
        all_passed &= passed;
        println!(
            "[{}] {name}: {} ({:.3} ms, budget {} ms{})",
            if passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64() * 1e3,
            budget.as_millis(),
            if in_time { "" } else { ", over budget" },
        );
    }

    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
