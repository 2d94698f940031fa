//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always printed; exits nonzero if any
//! criterion fails.
//!
//! Expected values come from oracles written here (product-formula
//! binomials, direct powers, hand-computed tables), not from the library.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use snc_milnor::chern_euler::{chi_open_closed_form, chi_open_inclusion_exclusion, chi_open_series, DegreeProfile};
use snc_milnor::exactalg::{cohomology_dims, gen_binomial, rat, Rat};
use snc_milnor::jordan::{check_condition_one, check_condition_two, find_witness, ResolutionGraph, WitnessVector};
use snc_milnor::koszul::{koszul_complex, shifted_twisted_sum};
use snc_milnor::milnor::{
    betti_table_thm03, chi_lambda, thm01_rank_check, zeta_function, ConeSingularityInput, CycloProduct,
    EigenvalueClass, Rank,
};
use snc_milnor_cli::input::{parse_input, InputDocument, Mode};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// `m (m-1) ... (m-k+1) / k!`, computed independently of the library.
fn oracle_binom(m: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(m - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn oracle_phi(n: u64) -> u64 {
    (1..=n).filter(|k| num_integer_gcd(*k, n) == 1).count() as u64
}

fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn smooth(n: usize, a: Vec<u64>, d: Vec<u64>) -> ConeSingularityInput {
    ConeSingularityInput::Smooth { n, multiplicities: a, degrees: d }
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn load(name: &str, mode: Mode) -> Result<InputDocument, String> {
    let text = std::fs::read_to_string(fixture(name)).map_err(|e| format!("{name}: {e}"))?;
    parse_input(&text, mode).map(|(d, _)| d).map_err(|e| format!("{name}: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=6usize {
        for m in 2..=10usize {
            let p = DegreeProfile::new(n, vec![1; m]).map_err(|e| e.to_string())?;
            let chi = chi_open_series(&p).map_err(|e| e.to_string())?;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = oracle_binom(m as i64 - 2, n as u64) * sign;
            ensure(chi == expected, || format!("n={n} m={m}: chi(U)={chi}, expected {expected}"))?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}, limit 1 s"))?;
    Ok(format!("{count} arrangements in {elapsed:?}"))
}

/// Every degree sequence of length `m` with entries in `1..=5`.
fn sequences(m: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=5u64).map(move |d| {
                    let mut t = s.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

fn criterion_2() -> Outcome {
    let (mut total, mut closed) = (0usize, 0usize);
    for m in 1..=6usize {
        for degrees in sequences(m) {
            let distinct = degrees.iter().collect::<BTreeSet<_>>().len() == m;
            for n in 1..=6usize {
                let p = DegreeProfile::new(n, degrees.clone()).map_err(|e| e.to_string())?;
                let s = chi_open_series(&p).map_err(|e| e.to_string())?;
                let ie = chi_open_inclusion_exclusion(&p).map_err(|e| e.to_string())?;
                ensure(s == ie, || format!("n={n} d={degrees:?}: series {s} != inclusion-exclusion {ie}"))?;
                if distinct && m >= 2 {
                    let c = chi_open_closed_form(&p).map_err(|e| e.to_string())?;
                    ensure(c == Rat::from_integer(s.clone()), || {
                        format!("n={n} d={degrees:?}: series {s} != closed form {c}")
                    })?;
                    closed += 1;
                }
                total += 1;
            }
        }
    }
    Ok(format!("{total} profiles, {closed} also against the closed form"))
}

fn criterion_3() -> Outcome {
    for d in 1..=10u64 {
        for n in 1..=8usize {
            let p = DegreeProfile::new(n, vec![d]).map_err(|e| e.to_string())?;
            let chi = chi_open_series(&p).map_err(|e| e.to_string())?;
            let lhs = BigInt::one() - BigInt::from(d) * &chi;
            let rhs = num_traits::pow(BigInt::from(1 - d as i64), n + 1);
            ensure(lhs == rhs, || format!("d={d} n={n}: 1 - d chi(U) = {lhs}, expected {rhs}"))?;
            if d <= 8 || n <= 8 {
                let t = betti_table_thm03(&smooth(n, vec![1], vec![d])).map_err(|e| e.to_string())?;
                let total: BigInt = (1..=d)
                    .filter(|c| d % c == 0)
                    .map(|c| t.rank(c, n).exact().cloned().unwrap_or_default() * BigInt::from(oracle_phi(c)))
                    .sum();
                let mu = num_traits::pow(BigInt::from(d as i64 - 1), n + 1);
                ensure(total == mu, || format!("d={d} n={n}: sum phi(c) b^n = {total}, expected {mu}"))?;
            }
        }
    }
    Ok("d <= 10, n <= 8".into())
}

fn criterion_4() -> Outcome {
    for m in 1..=8usize {
        let k = koszul_complex(m).map_err(|e| e.to_string())?;
        for j in 1..=m as i64 {
            let d = k.differential(j - 1).ok_or("missing differential")?;
            let expected = oracle_binom(m as i64 - 1, (j - 1) as u64);
            ensure(BigInt::from(d.rank()) == expected, || {
                format!("m={m}: rank d^{} = {}, expected {expected}", j - 1, d.rank())
            })?;
        }
        // acyclic iff dim K^j = rank d^j + rank d^{j-1} in every degree
        for j in 0..=m as i64 {
            let dim = oracle_binom(m as i64, j as u64);
            let ranks = k.rank_out(j) + if j > 0 { k.rank_out(j - 1) } else { 0 };
            ensure(BigInt::from(ranks) == dim, || format!("m={m}: not exact in degree {j}"))?;
        }
        let h = cohomology_dims(&k).map_err(|e| e.to_string())?;
        ensure(h.iter().all(|&(_, x)| x == 0), || format!("m={m}: nonzero cohomology {h:?}"))?;
    }
    Ok("m <= 8".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_261_015);
    let (mut valid, mut rejected) = (0, 0);
    while valid < 250 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=6);
        let a: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=6)).collect();
        let d: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=5)).collect();
        let input = smooth(n, a.clone(), d.clone());
        let t = match betti_table_thm03(&input) {
            Ok(t) => t,
            Err(snc_milnor::Error::Inconsistent(_)) => {
                rejected += 1;
                continue;
            }
            Err(e) => return Err(format!("{input:?}: {e}")),
        };
        valid += 1;
        let e: u64 = a.iter().zip(&d).map(|(x, y)| x * y).sum();
        let chi_u = chi_open_series(&DegreeProfile::new(n, d.clone()).unwrap()).unwrap();
        let zeta = zeta_function(&t).map_err(|err| format!("{input:?}: {err}"))?;
        let expected = CycloProduct::factor(e, -chi_u.clone()).unwrap();
        ensure(zeta == expected, || format!("{input:?}: zeta {zeta}, expected {expected}"))?;
        for c in 1..=e + 3 {
            let chi = chi_lambda(&t, EigenvalueClass::new(c).unwrap()).map_err(|err| err.to_string())?;
            let want = if e.is_multiple_of(c) { chi_u.clone() } else { BigInt::zero() };
            ensure(chi == want, || format!("{input:?}: chi_lambda(c={c}) = {chi}, expected {want}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}, limit 30 s"))?;
    Ok(format!("{valid} valid inputs ({rejected} rejected as inconsistent) in {elapsed:?}"))
}

fn exact(xs: &[i64]) -> Vec<Rank> {
    xs.iter().map(|&x| Rank::Exact(x.into())).collect()
}

fn column(t: &snc_milnor::milnor::BettiTable, c: u64) -> Vec<Rank> {
    (0..=t.n).map(|j| t.rank(c, j)).collect()
}

fn criterion_6() -> Outcome {
    let Ok(InputDocument::Cone(generic)) = load("generic_arrangement_n2_m4.json", Mode::Cone) else {
        return Err("cannot load the generic arrangement fixture".into());
    };
    let t = betti_table_thm03(&generic).map_err(|e| e.to_string())?;
    ensure(column(&t, 1) == exact(&[1, 3, 3]), || format!("b_1 = {:?}", column(&t, 1)))?;
    for c in [2, 4] {
        ensure(column(&t, c) == exact(&[0, 0, 1]), || format!("b_{c} = {:?}", column(&t, c)))?;
    }
    let zeta = zeta_function(&t).map_err(|e| e.to_string())?;
    let expected = CycloProduct::factor(4, -1).unwrap();
    ensure(zeta == expected, || format!("zeta = {zeta}"))?;

    let Ok(InputDocument::Cone(quadric)) = load("quadric_cone.json", Mode::Cone) else {
        return Err("cannot load the quadric cone fixture".into());
    };
    let t = betti_table_thm03(&quadric).map_err(|e| e.to_string())?;
    let top: Vec<(u64, BigInt)> = [1u64, 2]
        .iter()
        .map(|&c| (c, t.rank(c, 2).exact().cloned().unwrap_or_default() * BigInt::from(oracle_phi(c))))
        .collect();
    let mu: BigInt = top.iter().map(|(_, x)| x).sum();
    ensure(mu.is_one(), || format!("quadric cone mu = {mu}"))?;
    ensure(top[0].1.is_zero() && top[1].1.is_one(), || format!("quadric cone top degree by class {top:?}"))?;
    ensure(column(&t, 1) == exact(&[1, 0, 0]), || format!("quadric cone b_1 = {:?}", column(&t, 1)))?;
    Ok(format!("b_1 = (1,3,3), b_2 = b_4 = (0,0,1), zeta = {zeta}; quadric cone mu = 1 in class c=2"))
}

fn criterion_7() -> Outcome {
    for m in 1..=8usize {
        for n in 1..=8usize {
            let s = shifted_twisted_sum(m, n).map_err(|e| e.to_string())?;
            let t = betti_table_thm03(&smooth(n, vec![1; m], vec![1; m])).ok();
            for j in 0..n {
                let h = s.cohomology_in(j as i64).map_err(|e| e.to_string())?;
                let expected = oracle_binom(m as i64 - 1, j as u64);
                ensure(BigInt::from(h) == expected, || format!("m={m} n={n}: H^{j} = {h}, expected {expected}"))?;
                if let Some(t) = &t {
                    ensure(t.rank(1, j) == Rank::Exact(h.into()), || {
                        format!("m={m} n={n}: unipotent b^{j} = {} but E1 complex gives {h}", t.rank(1, j))
                    })?;
                }
            }
        }
    }
    Ok("m, n <= 8".into())
}

fn criterion_8() -> Outcome {
    for m in 0..=20i64 {
        for n in 1..=20u64 {
            let lhs = gen_binomial(m - 2, n - 1);
            let rhs: BigInt = (0..n)
                .map(|k| {
                    let term = gen_binomial(m - 1, n - 1 - k);
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            ensure(lhs == rhs, || format!("m={m} n={n}: {lhs} != {rhs}"))?;
            ensure(lhs == oracle_binom(m - 2, n - 1), || format!("gen_binomial({}, {}) = {lhs}", m - 2, n - 1))?;
        }
    }
    Ok("m, n <= 20".into())
}

fn graph(name: &str) -> Result<ResolutionGraph, String> {
    match load(name, Mode::Jordan)? {
        InputDocument::Jordan(g) => Ok(g),
        _ => Err(format!("{name} is not a resolution graph")),
    }
}

fn criterion_9() -> Outcome {
    let g = graph("a3_order2.json")?;
    ensure(g.target_order == 2, || "fixture order is not 2".into())?;
    let w = find_witness(&g).map_err(|e| e.to_string())?.ok_or("no witness at order 2")?;
    let w_ok = check_condition_one(&g, &w).map_err(|e| e.to_string())?
        && check_condition_two(&g, &w).map_err(|e| e.to_string())?;
    ensure(w_ok, || "found witness fails a condition".into())?;
    let names = ["Z'1", "C'1", "Z'2", "C'2"];
    let values = [1, 1, -1, -1];
    let mut coords = Vec::new();
    for (name, v) in names.iter().zip(values) {
        let st = g.strata.iter().find(|s| s.name.as_deref() == Some(name)).ok_or(format!("no stratum {name}"))?;
        coords.push((st.index_set.clone(), rat(v)));
    }
    let u = WitnessVector::from_scalars(coords);
    let one = check_condition_one(&g, &u).map_err(|e| e.to_string())?;
    let two = check_condition_two(&g, &u).map_err(|e| e.to_string())?;
    ensure(one && two, || format!("explicit u: condition one {one}, condition two {two}"))?;
    let reduced = graph("a3_multiplicity_one.json")?;
    let none = find_witness(&reduced).map_err(|e| e.to_string())?;
    ensure(none.is_none(), || "multiplicity-1 variant has a witness".into())?;
    Ok("witness found; u = (1, 1, -1, -1) on Z'1, C'1, Z'2, C'2 passes both conditions; reduced variant has none".into())
}

fn criterion_10() -> Outcome {
    let InputDocument::RankCheck(base) = load("xyz_rank_check.json", Mode::RankCheck)? else {
        return Err("wrong fixture mode".into());
    };
    let v = thm01_rank_check(&base.h_tilde_f, &base.h_link_phi, base.k_x, base.n).map_err(|e| e.to_string())?;
    ensure(v.passed() && v.implied_k_x == 1, || format!("verdict {v:?}"))?;
    let mut perturbations = 0;
    for delta in [-1i64, 1] {
        let shift = |x: u64| (x as i64 + delta).max(0) as u64;
        for target in 0..3 {
            let (mut f, mut l, mut k) = (base.h_tilde_f.clone(), base.h_link_phi.clone(), base.k_x);
            match target {
                0 => f[1] = shift(f[1]),
                1 => l[1] = shift(l[1]),
                _ => k = shift(k),
            }
            let v = thm01_rank_check(&f, &l, k, base.n).map_err(|e| e.to_string())?;
            ensure(!v.passed(), || format!("perturbation {f:?} {l:?} {k} passed"))?;
            perturbations += 1;
        }
    }
    Ok(format!("dims (2, 3) force dim K_x = 1; {perturbations} perturbations all reported"))
}

fn strip_timings(s: &str) -> String {
    s.lines()
        .map(|l| match l.rfind("; ") {
            Some(i) if l.ends_with(" ms)") => l[..i].to_string(),
            _ => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_11() -> Outcome {
    let run = || -> Result<(String, Duration), String> {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_snc-milnor"))
            .args(["verify", "--seed", "1", "--budget", "full"])
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
        ensure(out.status.success(), || format!("verify failed:\n{stdout}"))?;
        Ok((stdout, elapsed))
    };
    let (first, t1) = run()?;
    ensure(t1 < Duration::from_secs(60), || format!("took {t1:?}, limit 60 s"))?;
    let (second, t2) = run()?;
    ensure(strip_timings(&first) == strip_timings(&second), || "two runs with the same seed differ".into())?;
    Ok(format!("full budget in {t1:?} and {t2:?}, identical results"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("generic arrangement chi(U) = (-1)^n binom(m-2, n), under 1 s", criterion_1),
        ("series, inclusion-exclusion and closed-form chi(U) agree", criterion_2),
        ("m = 1 Milnor number identities", criterion_3),
        ("Koszul ranks and acyclicity", criterion_4),
        ("zeta and chi_lambda identities on random inputs, under 30 s", criterion_5),
        ("worked examples", criterion_6),
        ("E1 complex cohomology matches the unipotent column", criterion_7),
        ("alternating binomial identity", criterion_8),
        ("resolution graph witness", criterion_9),
        ("f = xyz rank check", criterion_10),
        ("verify command is deterministic and under 60 s", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
