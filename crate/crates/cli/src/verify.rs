//! The `verify` suite: every identity the library relies on, re-checked
//! over exhaustive small ranges and seeded random inputs.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use snc_milnor::chern_euler::{chi_open_closed_form, chi_open_inclusion_exclusion, chi_open_series, DegreeProfile};
use snc_milnor::exactalg::{cohomology_dims, divisors, euler_phi, gen_binomial, Rat};
use snc_milnor::jordan::{a3_graph, a3_multiplicity_one_graph, check_condition_one, check_condition_two, find_witness, WitnessVector};
use snc_milnor::koszul::{koszul_complex, shifted_twisted_sum};
use snc_milnor::milnor::{
    betti_bounds_thm02, betti_table_thm03, char_poly_per_degree, chi_lambda, thm01_rank_check, zeta_function,
    ClassKey, ConeSingularityInput, CycloProduct, EigenvalueClass, Rank, SncLinkInput,
};
use snc_milnor::spectral::{betti_bounds_from_e1, cone_e1_page, primitive_decomposition_check, weight_ss_e1, StratumDatum};

use crate::input::{to_input_json, InputDocument, RankCheckInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Budget {
    Small,
    Full,
}

impl Budget {
    fn random_cases(self) -> usize {
        match self {
            Budget::Small => 200,
            Budget::Full => 500,
        }
    }
}

pub type BinomialFn = fn(i64, u64) -> BigInt;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub budget: Budget,
    /// Generalized binomial used by the identity checks; replaceable so
    /// that tests can confirm a broken implementation is caught.
    pub gen_binomial: BinomialFn,
}

impl VerifyConfig {
    pub fn new(seed: u64, budget: Budget) -> Self {
        Self { seed, budget, gen_binomial }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Input reproducing a failure, as JSON.
    pub replay: Option<Value>,
    pub millis: u128,
}

struct Failure {
    detail: String,
    replay: Value,
}

type CheckResult = Result<String, Failure>;

fn fail(detail: impl Into<String>, replay: Value) -> Failure {
    Failure { detail: detail.into(), replay }
}

fn cone(n: usize, a: Vec<u64>, d: Vec<u64>) -> ConeSingularityInput {
    ConeSingularityInput::Smooth { n, multiplicities: a, degrees: d }
}

fn cone_replay(c: &ConeSingularityInput) -> Value {
    to_input_json(&InputDocument::Cone(c.clone()))
}

fn sign(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn err(e: snc_milnor::Error, replay: Value) -> Failure {
    fail(format!("unexpected error: {e}"), replay)
}

fn generic_arrangement(cfg: &VerifyConfig) -> CheckResult {
    for n in 1..=6usize {
        for m in 2..=10usize {
            let p = DegreeProfile::new(n, vec![1; m]).unwrap();
            let replay = json!({"n": n, "degrees": vec![1; m]});
            let chi = chi_open_series(&p).map_err(|e| err(e, replay.clone()))?;
            let expected = sign(n) * (cfg.gen_binomial)(m as i64 - 2, n as u64);
            if chi != expected {
                return Err(fail(format!("chi(U) = {chi}, expected {expected}"), replay));
            }
        }
    }
    Ok("n <= 6, 2 <= m <= 10".into())
}

fn random_profile(rng: &mut ChaCha8Rng) -> (usize, Vec<u64>) {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=6);
    (n, (0..m).map(|_| rng.gen_range(1..=5)).collect())
}

fn euler_routes(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> CheckResult {
    let mut closed = 0;
    for _ in 0..cfg.budget.random_cases() {
        let (n, degrees) = random_profile(rng);
        let replay = json!({"n": n, "degrees": degrees});
        let p = DegreeProfile::new(n, degrees.clone()).unwrap();
        let s = chi_open_series(&p).map_err(|e| err(e, replay.clone()))?;
        let ie = chi_open_inclusion_exclusion(&p).map_err(|e| err(e, replay.clone()))?;
        if s != ie {
            return Err(fail(format!("series {s} != inclusion-exclusion {ie}"), replay));
        }
        let distinct: BTreeSet<u64> = degrees.iter().copied().collect();
        if degrees.len() >= 2 && distinct.len() == degrees.len() {
            let c = chi_open_closed_form(&p).map_err(|e| err(e, replay.clone()))?;
            if c != Rat::from_integer(s.clone()) {
                return Err(fail(format!("series {s} != closed form {c}"), replay));
            }
            closed += 1;
        }
    }
    Ok(format!("{} profiles, {closed} with distinct degrees", cfg.budget.random_cases()))
}

fn milnor_number(_: &VerifyConfig) -> CheckResult {
    for d in 1..=10u64 {
        for n in 1..=8usize {
            let input = cone(n, vec![1], vec![d]);
            let replay = cone_replay(&input);
            let p = DegreeProfile::new(n, vec![d]).unwrap();
            let chi = chi_open_series(&p).map_err(|e| err(e, replay.clone()))?;
            let expected = num_traits::pow(BigInt::from(1 - d as i64), n + 1);
            let lhs = BigInt::from(1) - BigInt::from(d) * &chi;
            if lhs != expected {
                return Err(fail(format!("1 - d chi(U) = {lhs} != {expected}"), replay));
            }
            let t = betti_table_thm03(&input).map_err(|e| err(e, replay.clone()))?;
            let total: BigInt = divisors(d)
                .into_iter()
                .map(|c| t.rank(c, n).exact().cloned().unwrap_or_default() * BigInt::from(euler_phi(c)))
                .sum();
            let mu = num_traits::pow(BigInt::from(d as i64 - 1), n + 1);
            if total != mu {
                return Err(fail(format!("sum phi(c) b^n = {total} != {mu}"), replay));
            }
        }
    }
    Ok("d <= 10, n <= 8".into())
}

fn koszul_ranks(cfg: &VerifyConfig) -> CheckResult {
    for m in 1..=8usize {
        let replay = json!({"m": m});
        let k = koszul_complex(m).map_err(|e| err(e, replay.clone()))?;
        for j in 1..=m as i64 {
            let expected = (cfg.gen_binomial)(m as i64 - 1, (j - 1) as u64);
            if BigInt::from(k.rank_out(j - 1)) != expected {
                return Err(fail(format!("rank d^{} = {}, expected {expected}", j - 1, k.rank_out(j - 1)), replay));
            }
        }
        let h = cohomology_dims(&k).map_err(|e| err(e, replay.clone()))?;
        if h.iter().any(|&(_, d)| d != 0) {
            return Err(fail("Koszul complex is not acyclic", replay));
        }
    }
    Ok("m <= 8".into())
}

fn random_cone(rng: &mut ChaCha8Rng) -> ConeSingularityInput {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=6);
    cone(n, (0..m).map(|_| rng.gen_range(1..=6)).collect(), (0..m).map(|_| rng.gen_range(1..=5)).collect())
}

fn zeta_identity(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> CheckResult {
    let target = cfg.budget.random_cases();
    let (mut valid, mut rejected) = (0, 0);
    while valid < target {
        let input = random_cone(rng);
        let replay = cone_replay(&input);
        let t = match betti_table_thm03(&input) {
            Ok(t) => t,
            Err(snc_milnor::Error::Inconsistent(_)) => {
                rejected += 1;
                continue;
            }
            Err(e) => return Err(err(e, replay)),
        };
        valid += 1;
        let inv = t.cone_invariants().unwrap().clone();
        let polys = char_poly_per_degree(&t).map_err(|e| err(e, replay.clone()))?;
        if polys.iter().any(|p| p.root_multiplicities().values().any(|v| v.is_negative())) {
            return Err(fail("negative eigenvalue multiplicity", replay));
        }
        let zeta = zeta_function(&t).map_err(|e| err(e, replay.clone()))?;
        let expected = CycloProduct::factor(inv.e, -inv.chi_u.clone()).unwrap();
        if zeta != expected {
            return Err(fail(format!("zeta {zeta} != {expected}"), replay));
        }
        for c in 1..=inv.e + 2 {
            let chi = chi_lambda(&t, EigenvalueClass::new(c).unwrap()).map_err(|e| err(e, replay.clone()))?;
            let expected = if inv.e % c == 0 { inv.chi_u.clone() } else { BigInt::zero() };
            if chi != expected {
                return Err(fail(format!("chi_lambda for c={c} is {chi}, expected {expected}"), replay));
            }
        }
        for row in &t.rows {
            if row.cells.iter().any(|c| !c.semisimple || c.rank.exact().is_none_or(|r| r.is_negative())) {
                return Err(fail(format!("bad cell in row {}", row.class), replay));
            }
        }
    }
    Ok(format!("{valid} valid inputs, {rejected} rejected as inconsistent"))
}

fn ranks(t: &snc_milnor::milnor::BettiTable, c: u64) -> Vec<Rank> {
    (0..=t.n).map(|j| t.rank(c, j)).collect()
}

fn exact(xs: &[i64]) -> Vec<Rank> {
    xs.iter().map(|&x| Rank::Exact(x.into())).collect()
}

fn worked_examples(_: &VerifyConfig) -> CheckResult {
    let generic = cone(2, vec![1; 4], vec![1; 4]);
    let replay = cone_replay(&generic);
    let t = betti_table_thm03(&generic).map_err(|e| err(e, replay.clone()))?;
    if ranks(&t, 1) != exact(&[1, 3, 3]) || ranks(&t, 2) != exact(&[0, 0, 1]) || ranks(&t, 4) != exact(&[0, 0, 1]) {
        return Err(fail("generic arrangement Betti numbers", replay));
    }
    let zeta = zeta_function(&t).map_err(|e| err(e, replay.clone()))?;
    if zeta.to_string() != "(1-t^4)^-1" {
        return Err(fail(format!("generic arrangement zeta {zeta}"), replay));
    }
    let quadric = cone(2, vec![1], vec![2]);
    let replay = cone_replay(&quadric);
    let t = betti_table_thm03(&quadric).map_err(|e| err(e, replay.clone()))?;
    if ranks(&t, 1) != exact(&[1, 0, 0]) || ranks(&t, 2) != exact(&[0, 0, 1]) {
        return Err(fail("quadric cone Betti numbers", replay));
    }
    let two_lines = cone(2, vec![2, 3], vec![1, 1]);
    let replay = cone_replay(&two_lines);
    let t = betti_table_thm03(&two_lines).map_err(|e| err(e, replay.clone()))?;
    if ranks(&t, 1) != exact(&[1, 1, 0]) || ranks(&t, 5) != exact(&[0, 0, 0]) {
        return Err(fail("a=(2,3) Betti numbers", replay));
    }
    Ok("generic arrangement, quadric cone, a=(2,3)".into())
}

fn e1_complex(cfg: &VerifyConfig) -> CheckResult {
    for m in 1..=8usize {
        for n in 1..=8usize {
            let replay = json!({"m": m, "n": n});
            let s = shifted_twisted_sum(m, n).map_err(|e| err(e, replay.clone()))?;
            let unipotent = betti_table_thm03(&cone(n, vec![1; m], vec![1; m])).ok();
            for j in 0..n {
                let h = s.cohomology_in(j as i64).map_err(|e| err(e, replay.clone()))?;
                let expected = (cfg.gen_binomial)(m as i64 - 1, j as u64);
                if BigInt::from(h) != expected {
                    return Err(fail(format!("H^{j} = {h}, expected {expected}"), replay));
                }
                if let Some(t) = &unipotent {
                    if t.rank(1, j) != Rank::Exact(h.into()) {
                        return Err(fail(format!("H^{j} = {h} differs from the unipotent column"), replay));
                    }
                }
            }
        }
    }
    Ok("m, n <= 8".into())
}

fn binomial_identity(cfg: &VerifyConfig) -> CheckResult {
    let g = cfg.gen_binomial;
    for m in 0..=20i64 {
        for n in 1..=20u64 {
            let lhs = g(m - 2, n - 1);
            let rhs: BigInt = (0..n).map(|k| sign(k as usize) * g(m - 1, n - 1 - k)).sum();
            if lhs != rhs {
                return Err(fail(format!("binom({}, {}) = {lhs} but the alternating sum is {rhs}", m - 2, n - 1), json!({"m": m, "n": n})));
            }
        }
    }
    Ok("m, n <= 20".into())
}

fn resolution_graph(_: &VerifyConfig) -> CheckResult {
    let g = a3_graph(2).map_err(|e| err(e, Value::Null))?;
    let replay = to_input_json(&InputDocument::Jordan(g.clone()));
    let u = WitnessVector::from_scalars([
        (vec![0, 1], Rat::from_integer(1.into())),
        (vec![0, 3], Rat::from_integer(1.into())),
        (vec![0, 2], Rat::from_integer((-1).into())),
        (vec![0, 4], Rat::from_integer((-1).into())),
    ]);
    let one = check_condition_one(&g, &u).map_err(|e| err(e, replay.clone()))?;
    let two = check_condition_two(&g, &u).map_err(|e| err(e, replay.clone()))?;
    if !(one && two) {
        return Err(fail(format!("explicit witness: condition one {one}, condition two {two}"), replay));
    }
    let w = find_witness(&g).map_err(|e| err(e, replay.clone()))?;
    let Some(w) = w else { return Err(fail("no witness found at order 2", replay)) };
    if !(check_condition_one(&g, &w).unwrap_or(false) && check_condition_two(&g, &w).unwrap_or(false)) {
        return Err(fail("found witness does not pass both conditions", replay));
    }
    for (name, graph) in [("order 1", a3_graph(1).map_err(|e| err(e, Value::Null))?), ("multiplicity 1", a3_multiplicity_one_graph(2))] {
        let replay = to_input_json(&InputDocument::Jordan(graph.clone()));
        if find_witness(&graph).map_err(|e| err(e, replay.clone()))?.is_some() {
            return Err(fail(format!("{name} variant unexpectedly has a witness"), replay));
        }
    }
    Ok("witness at order 2; none at order 1 or with reduced components".into())
}

fn rank_check(_: &VerifyConfig) -> CheckResult {
    let base = RankCheckInput { n: 2, h_tilde_f: vec![0, 2], h_link_phi: vec![0, 3], k_x: 1 };
    let run = |r: &RankCheckInput| thm01_rank_check(&r.h_tilde_f, &r.h_link_phi, r.k_x, r.n);
    let replay = to_input_json(&InputDocument::RankCheck(base.clone()));
    let v = run(&base).map_err(|e| err(e, replay.clone()))?;
    if !v.passed() || v.implied_k_x != 1 {
        return Err(fail("f = xyz data rejected", replay));
    }
    let mut perturbed = Vec::new();
    for delta in [-1i64, 1] {
        let bump = |x: u64| (x as i64 + delta) as u64;
        let mut a = base.clone();
        a.h_tilde_f[1] = bump(a.h_tilde_f[1]);
        let mut b = base.clone();
        b.h_link_phi[1] = bump(b.h_link_phi[1]);
        let mut c = base.clone();
        c.k_x = bump(c.k_x);
        perturbed.extend([a, b, c]);
    }
    for p in &perturbed {
        let replay = to_input_json(&InputDocument::RankCheck(p.clone()));
        if run(p).map_err(|e| err(e, replay.clone()))?.passed() {
            return Err(fail("perturbed rank data passed", replay));
        }
    }
    Ok(format!("f = xyz passes with dim K_x = 1; {} perturbations fail", perturbed.len()))
}

fn low_degree_agreement(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> CheckResult {
    for _ in 0..cfg.budget.random_cases() / 2 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=6);
        let a: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=6)).collect();
        let d: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=5)).collect();
        let input = cone(n, a.clone(), d);
        let replay = cone_replay(&input);
        let Ok(t) = betti_table_thm03(&input) else { continue };
        let link = SncLinkInput { n, multiplicities: a, rhm: true };
        let l = betti_bounds_thm02(&link).map_err(|e| err(e, replay.clone()))?;
        let e = t.cone_invariants().unwrap().e;
        for c in divisors(e) {
            for j in 0..n {
                if let Rank::Exact(r) = l.rank(c, j) {
                    if t.rank(c, j) != Rank::Exact(r.clone()) {
                        return Err(fail(format!("c={c} j={j}: low-degree value {r}, cone value {}", t.rank(c, j)), replay));
                    }
                }
            }
        }
        for row in &l.rows {
            let delta = usize::from(row.class == ClassKey::Order(1));
            for (j, cell) in row.cells.iter().enumerate() {
                if cell.semisimple != (j + 2 <= n + delta) {
                    return Err(fail(format!("semisimple flag of {} at degree {j}", row.class), replay));
                }
            }
        }
    }
    Ok(format!("{} random inputs", cfg.budget.random_cases() / 2))
}

fn spectral_pages(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> CheckResult {
    for m in 1..=8usize {
        for n in 1..=6usize {
            let replay = json!({"m": m, "n": n});
            let Ok(t) = betti_table_thm03(&cone(n, vec![1; m], vec![1; m])) else { continue };
            let page = cone_e1_page(m, n, n - 1).map_err(|e| err(e, replay.clone()))?;
            let bounds = betti_bounds_from_e1(&page);
            for j in 0..n {
                let b = t.rank(1, j).exact().cloned().unwrap_or_default();
                if b > BigInt::from(bounds.get(&(j as i64)).copied().unwrap_or(0)) {
                    return Err(fail(format!("b^{j} = {b} exceeds the E1 bound"), replay));
                }
            }
        }
    }
    for _ in 0..cfg.budget.random_cases() / 2 {
        let n = rng.gen_range(0..6i64);
        let prim: BTreeMap<i64, u64> = (0..rng.gen_range(0..6)).map(|i| (n + i, rng.gen_range(0..4))).collect();
        let replay = json!({"n": n, "primitive": prim.iter().map(|(w, d)| (w.to_string(), d.to_string())).collect::<BTreeMap<_, _>>()});
        let gr = primitive_decomposition_check(&prim, n).map_err(|e| err(e, replay.clone()))?;
        if gr.iter().any(|(&j, &d)| gr.get(&(2 * n - j)) != Some(&d)) {
            return Err(fail("graded pieces not symmetric", replay));
        }
        let strata: Vec<StratumDatum> = (0..rng.gen_range(1..5usize))
            .map(|i| {
                let len = rng.gen_range(1..4usize);
                StratumDatum {
                    index_set: (i..i + len).collect(),
                    s_value: rng.gen_range(-1..len as i64),
                    cohomology_dims: (0..3).map(|q| (q, rng.gen_range(0..3))).collect(),
                }
            })
            .collect();
        let j_set: BTreeSet<usize> = (0..10).collect();
        let replay = json!({"strata": strata.iter().map(|s| json!({"I": s.index_set, "s": s.s_value})).collect::<Vec<_>>()});
        let page = weight_ss_e1(&strata, &j_set, 2).map_err(|e| err(e, replay.clone()))?;
        for &(p, _) in page.entries.keys() {
            let admissible = strata.iter().any(|s| {
                let len = s.index_set.len() as i64;
                (0..=s.s_value).any(|a| len - 1 - 2 * a == -p)
            });
            if !admissible {
                return Err(fail(format!("entry in column {p} has no admissible stratum"), replay));
            }
        }
    }
    Ok("E1 bounds for m <= 8, n <= 6; random primitive data and strata".into())
}

/// Run every check. Random inputs are drawn from one generator per check,
/// each seeded from `cfg.seed`, so results do not depend on check order.
pub fn run_verify(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    type Plain = fn(&VerifyConfig) -> CheckResult;
    type Seeded = fn(&VerifyConfig, &mut ChaCha8Rng) -> CheckResult;
    enum Kind {
        Plain(Plain),
        Seeded(Seeded),
    }
    let checks: Vec<(&'static str, Kind)> = vec![
        ("generic arrangement Euler characteristic", Kind::Plain(generic_arrangement)),
        ("three Euler characteristic routes agree", Kind::Seeded(euler_routes)),
        ("Milnor number of homogeneous polynomials", Kind::Plain(milnor_number)),
        ("Koszul ranks and acyclicity", Kind::Plain(koszul_ranks)),
        ("zeta function and chi_lambda identities", Kind::Seeded(zeta_identity)),
        ("worked examples", Kind::Plain(worked_examples)),
        ("E1 complex cohomology", Kind::Plain(e1_complex)),
        ("alternating binomial identity", Kind::Plain(binomial_identity)),
        ("resolution graph witness", Kind::Plain(resolution_graph)),
        ("Milnor fiber / link rank consistency", Kind::Plain(rank_check)),
        ("low-degree and cone theorems agree", Kind::Seeded(low_degree_agreement)),
        ("E1 pages and primitive decompositions", Kind::Seeded(spectral_pages)),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, kind))| {
            let start = Instant::now();
            let result = match kind {
                Kind::Plain(f) => f(cfg),
                Kind::Seeded(f) => f(cfg, &mut ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(i as u64))),
            };
            let millis = start.elapsed().as_millis();
            match result {
                Ok(detail) => CheckOutcome { name, passed: true, detail, replay: None, millis },
                Err(f) => CheckOutcome { name, passed: false, detail: f.detail, replay: Some(f.replay), millis },
            }
        })
        .collect()
}

pub fn format_outcome(o: &CheckOutcome) -> String {
    let mut line = format!(
        "{} {} ({}; {} ms)",
        if o.passed { "PASS" } else { "FAIL" },
        o.name,
        o.detail,
        o.millis
    );
    if let Some(r) = &o.replay {
        line.push_str(&format!("\n  replay: {r}"));
    }
    line
}
