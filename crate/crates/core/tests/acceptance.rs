//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use alphaseq::{
    enumerate_an, enumerate_dn, enumerate_ln, least_element, predecessor_ln, predecessor_step_ln,
    predecessor_step_an, seq, successor_ln, successor_step_an, successor_step_ln, apply_at,
    AlphaSequence, Oracle,
};

const SWEEP_MAX: u64 = 16;
const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const VERIFY_BUDGET: Duration = Duration::from_secs(60);

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_cli(args: &[&str]) -> (Option<i32>, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_alphaseq"))
        .args(args)
        .env_remove("ALPHASEQ_MAX_N")
        .env_remove("ALPHASEQ_ORACLE_MAX_N")
        .output()
        .expect("run alphaseq");
    (out.status.code(), String::from_utf8(out.stdout).unwrap(), start.elapsed())
}

fn golden(args: &[&str], rows: &[&str]) -> Check {
    let (code, out, took) = run_cli(args);
    let expected: String = rows.iter().map(|r| format!("{r}\n")).collect();
    ensure(code == Some(0), || format!("exit code {code:?}"))?;
    ensure(out == expected, || format!("output differs:\n{out}"))?;
    ensure(took < GOLDEN_BUDGET, || format!("took {took:?}"))
}

fn golden_l7() -> Check {
    golden(
        &["list", "--set", "ln", "7"],
        &["2,1,1,1,1", "2,1,2,1", "3,2,1", "3,1,1,1", "3,1,2", "4,2", "4,1,1", "5,1", "6"],
    )
}

fn golden_a4() -> Check {
    golden(
        &["list", "--set", "an", "4"],
        &["1,3", "1,2,1", "1,1,1,1", "1,1,2", "2,2", "2,1,1", "3,1", "4"],
    )
}

fn golden_d8() -> Check {
    golden(
        &["list", "--set", "dn", "8"],
        &[
            "0", "1", "2,1", "2,1,1,2,1", "2,1,1,1,1,1", "2,1,2,1,1", "3,2,1,1", "3,2,2",
            "3,1,1,2", "3,1,1,1,1", "3,1,2,1", "3", "4,3", "4,2,1", "4,1,1,1", "4,1,2", "5,2",
            "5,1,1", "6,1", "7",
        ],
    )
}

fn l11_adjacency() -> Check {
    let got = successor_ln(&seq![3, 2, 3, 2], 11).map_err(|e| e.to_string())?;
    ensure(got == seq![3, 1, 1, 3, 2], || format!("got {got:?}"))
}

fn least_elements() -> Check {
    let stated = [
        (7, seq![2, 1, 1, 1, 1]),
        (8, seq![2, 1, 1, 2, 1]),
        (2, seq![1]),
        (1, seq![]),
    ];
    for (n, expected) in stated {
        let got = least_element(n).unwrap();
        ensure(got == expected, || format!("least_element({n}) = {got:?}"))?;
    }
    let oracle = Oracle::default();
    for n in 1..=SWEEP_MAX {
        let min = oracle.ln(n).unwrap().into_iter().min().unwrap();
        let got = least_element(n).unwrap();
        ensure(got == min, || format!("n = {n}: {got:?} vs oracle {min:?}"))?;
    }
    Ok(())
}

fn oracle_sweep() -> Check {
    let (code, out, took) = run_cli(&["verify", "1", &SWEEP_MAX.to_string()]);
    ensure(code == Some(0), || format!("exit code {code:?}\n{out}"))?;
    ensure(took < VERIFY_BUDGET, || format!("took {took:?}"))
}

fn opposite_parity() -> Check {
    let mut violations = Vec::new();
    let mut on_star_steps = 0;
    for n in 1..=SWEEP_MAX {
        let l: Vec<_> = enumerate_ln(n).unwrap().collect();
        for w in l.windows(2) {
            if w[0].len() % 2 != w[1].len() % 2 {
                continue;
            }
            let step = successor_step_ln(&w[0], n).map_err(|e| e.to_string())?;
            if step.used_star_branch() {
                on_star_steps += 1;
            }
            violations.push(format!("L_{n}: {} -> {}", w[0], w[1]));
        }
    }
    ensure(violations.is_empty(), || {
        format!(
            "{} same-parity pairs ({on_star_steps} on r = 0 steps), first: {}",
            violations.len(),
            violations[..violations.len().min(3)].join("; ")
        )
    })
}

fn round_trip() -> Check {
    for n in 1..=SWEEP_MAX {
        let l: Vec<_> = enumerate_ln(n).unwrap().collect();
        for w in l.windows(2) {
            let up = successor_ln(&w[0], n).map_err(|e| e.to_string())?;
            let back = predecessor_ln(&up, n).map_err(|e| e.to_string())?;
            ensure(back == w[0], || format!("L_{n}: pred(succ({:?})) = {back:?}", w[0]))?;
            let down = predecessor_ln(&w[1], n).map_err(|e| e.to_string())?;
            let again = successor_ln(&down, n).map_err(|e| e.to_string())?;
            ensure(again == w[1], || format!("L_{n}: succ(pred({:?})) = {again:?}", w[1]))?;
        }
    }
    Ok(())
}

fn dual_star_branch() -> Check {
    let step = predecessor_step_ln(&seq![4, 3], 8).map_err(|e| e.to_string())?;
    let fact = step.factorization.ok_or("(4,3) not star-factored")?;
    ensure(fact.g == seq![3] && fact.d == 2, || format!("{fact:?}"))?;
    let hat = alphaseq::g_hat(&fact.g, fact.m).map_err(|e| e.to_string())?;
    ensure(hat == seq![2, 1], || format!("g_hat = {hat:?}"))?;
    ensure(step.predecessor == seq![3, 1, 2, 1], || format!("{:?}", step.predecessor))?;

    let oracle = Oracle::default();
    let mut checked = 0;
    for n in 2..=SWEEP_MAX {
        let l = oracle.ln(n).unwrap();
        for w in l.windows(2) {
            let step = predecessor_step_ln(&w[1], n).map_err(|e| e.to_string())?;
            if step.factorization.is_some() {
                checked += 1;
                ensure(step.predecessor == w[0], || {
                    format!("L_{n}: {:?} -> {:?}, oracle {:?}", w[1], step.predecessor, w[0])
                })?;
            }
        }
    }
    ensure(checked > 0, || "no star-factorizable elements".into())
}

fn compositions(n: u64) -> Vec<AlphaSequence> {
    Oracle::default().all_compositions(n).unwrap()
}

fn elementary_lemmas() -> Check {
    for d in 1..=10 {
        for a in compositions(d) {
            for i in 1..=a.len() {
                let Ok(b) = apply_at(&a, i) else { continue };
                ensure(a.len() % 2 != b.len() % 2, || format!("parity {a:?} at {i}"))?;
                let up = i % 2 == 0;
                ensure((b > a) == up && b != a, || format!("direction {a:?} at {i}"))?;
            }
        }
    }
    let oracle = Oracle::default();
    for n in 1..=12 {
        let set = oracle.an(n).unwrap();
        for (k, a) in set.iter().enumerate() {
            let succ = successor_step_an(a).ok();
            let pred = predecessor_step_an(a).ok();
            ensure(succ.as_ref() == set.get(k + 1), || format!("A_{n} succ {a:?}"))?;
            let below = k.checked_sub(1).map(|j| &set[j]);
            ensure(pred.as_ref() == below, || format!("A_{n} pred {a:?}"))?;
        }
    }
    Ok(())
}

fn cardinalities() -> Check {
    for n in 1..=SWEEP_MAX {
        let an = enumerate_an(n, None).unwrap().count() as u64;
        ensure(an == 1 << (n - 1), || format!("|A_{n}| = {an}"))?;
        let dn = enumerate_dn(n).unwrap().count();
        let sum: usize = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| enumerate_ln(d).unwrap().count())
            .sum();
        ensure(dn == sum, || format!("|D_{n}| = {dn}, sum = {sum}"))?;
    }
    Ok(())
}

fn prime_corollary() -> Check {
    for p in [5, 7, 11, 13] {
        for a in enumerate_ln(p).unwrap() {
            let Ok(step) = successor_step_ln(&a, p) else { continue };
            ensure(!step.used_star_branch(), || format!("L_{p}: star branch at {a:?}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 golden L_7 listing", golden_l7),
        ("2 golden A_4 listing", golden_a4),
        ("3 golden D_8 listing", golden_d8),
        ("4 L_11 adjacency example", l11_adjacency),
        ("5 least elements", least_elements),
        ("6 oracle equivalence sweep, verify 1 16", oracle_sweep),
        ("7 opposite parity of adjacent L_n elements", opposite_parity),
        ("8 successor/predecessor round trip", round_trip),
        ("9 dual-theorem star branch", dual_star_branch),
        ("10 elementary-operation lemmas", elementary_lemmas),
        ("11 cardinalities", cardinalities),
        ("12 prime corollary", prime_corollary),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
