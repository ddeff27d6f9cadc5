//! Acceptance criteria, one line each. Runs without the test harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zetaops::algebra::{rat, Monomial, SWindow};
use zetaops::mzv::{self, eval_amzv, MZVIndex};
use zetaops::operators::{build_d2, D1Constants};
use zetaops::par::Exec;
use zetaops::special::{euler_at_zero, euler_polynomial, rm_expansion};
use zetaops::verify::{
    check_corollary_numeric, check_lemma_suite, check_main_theorem, check_main_theorem_with, check_prop_resummation,
    CheckReport, LemmaConfig, D1_X3,
};

type Outcome = Result<(), String>;

/// Label, runtime budget, check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_zetaops")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn deep_pass(r: &CheckReport) -> Outcome {
    if !r.passed() {
        return Err(format!("{} failed: {:?}", r.name, r.first_mismatch));
    }
    r.children.iter().try_for_each(deep_pass)
}

fn operator_x3() -> Outcome {
    let out = cli(&["operator", "--which", "d1", "--order", "3"])?;
    (out.trim_end() == D1_X3).then_some(()).ok_or(format!("printed {out:?}"))
}

fn rm_values() -> Outcome {
    let out = cli(&["rm", "--max", "4"])?;
    let want = "r_1 = 3/32\nr_2 = 151/192\nr_3 = 3287/1536\nr_4 = 10629/2560\n";
    if out != want {
        return Err(format!("printed {out:?}"));
    }
    let e = rm_expansion(4).map_err(|e| e.to_string())?;
    e.singular.iter().all(|c| *c == rat(0, 1)).then_some(()).ok_or("singular part does not vanish".into())
}

fn d2_channel() -> Outcome {
    let d2 = build_d2(13, SWindow::for_order(13)).map_err(|e| e.to_string())?;
    for k in 0..=12u32 {
        let c = d2.coeff(k as usize + 1).coeff(-(k as i32) - 1).map_err(|e| e.to_string())?;
        let free = c.coefficient(&Monomial::one());
        if free != -euler_at_zero(k + 1) {
            return Err(format!("k = {k}: {free}"));
        }
    }
    Ok(())
}

fn main_theorem() -> Outcome {
    deep_pass(&check_main_theorem(8, 8, Exec::default()).map_err(|e| e.to_string())?)?;
    let mutant = D1Constants { sech2: rat(1, 5), ..D1Constants::default() };
    let r = check_main_theorem_with(4, 4, &mutant, Exec::default()).map_err(|e| e.to_string())?;
    (!r.passed()).then_some(()).ok_or("perturbed sech² constant still passes at N = 4".into())
}

fn lemma_suite() -> Outcome {
    let cfg = LemmaConfig { order: 8, trials: 50, seed: 0x5eed };
    let reports = check_lemma_suite(&cfg, Exec::default()).map_err(|e| e.to_string())?;
    if reports.len() != 9 {
        return Err(format!("{} lemma reports", reports.len()));
    }
    reports.iter().try_for_each(deep_pass)
}

fn resummation() -> Outcome {
    deep_pass(&check_prop_resummation(8).map_err(|e| e.to_string())?)
}

fn corollary() -> Outcome {
    deep_pass(&check_corollary_numeric(4, 3, 30, Exec::default()).map_err(|e| e.to_string())?)
}

fn k2_corrections() -> Outcome {
    for m in 1..=5u32 {
        let out = cli(&["reduce", "--k", "2", "--m", &m.to_string(), "--format", "json"])?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let c = v["corrections"].as_array().ok_or("no corrections")?;
        let coeff = euler_polynomial(2 * m - 1).coeff(2 * m - 2);
        if coeff != rat(-(2 * m as i64 - 1), 2) {
            return Err(format!("m = {m}: [z^{{2m−2}}]E_{{2m−1}} = {coeff}"));
        }
        let want = serde_json::json!([{"coeff": format!("{}/2", -(2 * m as i64 - 1)), "n": m + 1,
            "target": {"bar": 2 * m + 1, "ones": 1}}]);
        if serde_json::Value::Array(c.clone()) != want {
            return Err(format!("m = {m}: {}", v["corrections"]));
        }
    }
    Ok(())
}

fn numerics() -> Outcome {
    let d = 25;
    let pi = mzv::pi(40);
    let pi2 = pi.value() * pi.value();
    let z2bar = eval_amzv(&"-2".parse().unwrap(), 40).map_err(|e| e.to_string())?;
    if !z2bar.value().close_to(&(-pi2.div_int(12)), d) {
        return Err(format!("ζ(2̄) = {z2bar}"));
    }
    let z12 = eval_amzv(&"1,-2".parse().unwrap(), 40).map_err(|e| e.to_string())?;
    let z3 = mzv::eval_zeta(3, 40).map_err(|e| e.to_string())?;
    if !z12.value().close_to(&z3.value().div_int(8), d) {
        return Err(format!("ζ(1,2̄) = {z12}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let mut entries = vec![1; rng.random_range(0..=3)];
        entries.push(-rng.random_range(1..=6));
        let idx = MZVIndex::new(entries.clone()).map_err(|e| e.to_string())?;
        let lo = eval_amzv(&idx, d).map_err(|e| e.to_string())?;
        let hi = eval_amzv(&idx, d + 10).map_err(|e| e.to_string())?;
        if !lo.value().close_to(&hi.value().with_bits(lo.value().bits()), d) {
            return Err(format!("{idx}: {lo} vs {hi}"));
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("[x³]D₁ printed exactly", Duration::from_secs(1), operator_x3),
        ("r_1..r_4 and vanishing singular part", Duration::from_secs(1), rm_values),
        ("[x^{k+1}](D₂∘1) = −E_{k+1}(0)/s^{k+1}, k ≤ 12", Duration::from_secs(1), d2_channel),
        ("main theorem N = D = 8; sech² mutant fails at N = 4", Duration::from_secs(300), main_theorem),
        ("lemma suite at order 8, 50 random inputs", Duration::from_secs(120), lemma_suite),
        ("free-symbol resummation to x⁸", Duration::from_secs(30), resummation),
        ("depth reduction numerics k ≤ 4, m ≤ 3 at 30 digits", Duration::from_secs(600), corollary),
        ("k = 2 correction −(2m−1)/2·ζ(1,(2m+1)‾), m ≤ 5", Duration::from_secs(5), k2_corrections),
        ("ζ(2̄), ζ(1,2̄) closed forms and precision monotonicity", Duration::from_secs(120), numerics),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        let outcome = outcome.and_then(|()| {
            (elapsed <= *budget).then_some(()).ok_or(format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
