//! The report document shared by the table and JSON output formats. Every
//! number is carried as a string so that JSON output round-trips exactly.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use snc_milnor::chern_euler::{chi_open_closed_form, chi_open_inclusion_exclusion, chi_open_series, DegreeProfile};
use snc_milnor::exactalg::{euler_phi, format_rat, Rat};
use snc_milnor::jordan::{find_witness, strata_sets, ResolutionGraph};
use snc_milnor::koszul::shifted_twisted_sum;
use snc_milnor::milnor::{
    betti_bounds_thm02, betti_table_thm03, char_poly_per_degree, chi_lambda, thm01_rank_check, zeta_function,
    BettiTable, ClassKey, ConeSingularityInput, EigenvalueClass, Rank, SncLinkInput,
};
use snc_milnor::Result;

use crate::input::{InputDocument, RankCheckInput};

pub const ZETA_CONVENTION: &str = "zeta(t) = prod_j det(1 - tT | H^j(F_x))^((-1)^(j+1))";
pub const JORDAN_CAVEAT: &str = "necessary conditions only";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub mode: String,
    pub input: Value,
    #[serde(default)]
    pub invariants: Vec<NamedValue>,
    #[serde(default)]
    pub classes: Vec<ClassInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiReport>,
    #[serde(default)]
    pub char_polys: Vec<DegreePoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaReport>,
    #[serde(default)]
    pub euler_checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan: Option<JordanReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_check: Option<RankCheckReport>,
    #[serde(default)]
    pub warnings: Vec<String>,
    #[serde(default)]
    pub oracles: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    /// `c=4` for one class, `c∤2` for every order not dividing 2.
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    /// Number of eigenvalues in the class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    pub divides_d: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divides_e: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub degrees: Vec<String>,
    pub rows: Vec<BettiRowReport>,
    /// `sum_c phi(c) b_c^j` per degree, when every rank is exact.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub totals: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRowReport {
    pub class: String,
    pub ranks: Vec<String>,
    /// `(j,j)` where the eigenspace is pure of that type.
    pub hodge: Vec<Option<String>>,
    pub semisimple: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePoly {
    pub degree: String,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub convention: String,
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataSetReport {
    pub a: String,
    pub b: String,
    pub j: Vec<String>,
    pub j0: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub stratum: String,
    pub index_set: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanReport {
    pub target_order: String,
    pub eigen_set: Vec<String>,
    pub strata_sets: Vec<StrataSetReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessEntry>>,
    pub verdict: String,
    pub caveat: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankFailureReport {
    pub degree: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCheckReport {
    pub n: String,
    pub passed: bool,
    pub implied_k_x: String,
    pub failures: Vec<RankFailureReport>,
}

fn named(name: &str, value: impl ToString) -> NamedValue {
    NamedValue { name: name.into(), value: value.to_string() }
}

fn check(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), holds, detail: detail.into() }
}

pub fn index_label(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn build_report(doc: &InputDocument, echo: Value) -> Result<ReportDocument> {
    match doc {
        InputDocument::Cone(c) => cone_report(c, echo),
        InputDocument::SncLink(s) => snc_link_report(s, echo),
        InputDocument::Jordan(g) => jordan_report(g, echo),
        InputDocument::RankCheck(r) => rank_check_report(r, echo),
    }
}

fn betti_report(t: &BettiTable, with_totals: bool) -> BettiReport {
    let rows = t
        .rows
        .iter()
        .map(|r| BettiRowReport {
            class: r.class.to_string(),
            ranks: r.cells.iter().map(|c| c.rank.to_string()).collect(),
            hodge: r.cells.iter().map(|c| c.hodge_type.map(|j| format!("({j},{j})"))).collect(),
            semisimple: r.cells.iter().map(|c| c.semisimple).collect(),
        })
        .collect();
    let totals = with_totals.then(|| {
        (0..=t.n)
            .map(|j| {
                let total: BigInt = t
                    .rows
                    .iter()
                    .filter_map(|r| match (r.class, &r.cells[j].rank) {
                        (ClassKey::Order(c), Rank::Exact(b)) => Some(b * BigInt::from(euler_phi(c))),
                        _ => None,
                    })
                    .sum();
                total.to_string()
            })
            .collect()
    });
    BettiReport { degrees: (0..=t.n).map(|j| j.to_string()).collect(), rows, totals }
}

pub fn cone_report(input: &ConeSingularityInput, echo: Value) -> Result<ReportDocument> {
    let t = betti_table_thm03(input)?;
    let inv = t.cone_invariants().expect("cone table").clone();
    let mut r = ReportDocument { mode: "cone".into(), input: echo, ..Default::default() };
    let top_total: BigInt = t
        .rows
        .iter()
        .filter_map(|row| match (row.class, &row.cells[inv.n].rank) {
            (ClassKey::Order(c), Rank::Exact(b)) => Some(b * BigInt::from(euler_phi(c))),
            _ => None,
        })
        .sum();
    r.invariants = vec![
        named("n", inv.n),
        named("m", inv.m),
        named("e", inv.e),
        named("d", inv.d),
        named("chi_U", &inv.chi_u),
        named("chi_F", &inv.chi_u * BigInt::from(inv.e)),
        named("top_degree_total", &top_total),
    ];
    r.classes = t
        .rows
        .iter()
        .filter_map(|row| match row.class {
            ClassKey::Order(c) => Some(ClassInfo {
                class: row.class.to_string(),
                order: Some(c.to_string()),
                phi: Some(euler_phi(c).to_string()),
                divides_d: inv.d % c == 0,
                divides_e: Some(inv.e % c == 0),
            }),
            ClassKey::NonDivisorsOf(_) => None,
        })
        .collect();
    r.betti = Some(betti_report(&t, true));
    r.char_polys = char_poly_per_degree(&t)?
        .iter()
        .enumerate()
        .map(|(j, p)| DegreePoly { degree: j.to_string(), product: p.to_string() })
        .collect();
    let zeta = zeta_function(&t)?;
    let expected = snc_milnor::milnor::CycloProduct::factor(inv.e, -inv.chi_u.clone())?;
    r.zeta = Some(ZetaReport {
        convention: ZETA_CONVENTION.into(),
        value: zeta.to_string(),
        expected: expected.to_string(),
    });
    r.oracles.push(check("zeta(t) = (1-t^e)^(-chi(U))", zeta == expected, zeta.to_string()));
    for row in &t.rows {
        if let ClassKey::Order(c) = row.class {
            let chi = chi_lambda(&t, EigenvalueClass::new(c)?)?;
            r.euler_checks.push(check(
                format!("chi_lambda(F) = chi(U) for c={c}"),
                chi == inv.chi_u,
                format!("{chi} vs {}", inv.chi_u),
            ));
        }
    }
    let chi_f: BigInt = (0..=inv.n)
        .map(|j| {
            let col: BigInt = t
                .rows
                .iter()
                .filter_map(|row| match (row.class, &row.cells[j].rank) {
                    (ClassKey::Order(c), Rank::Exact(b)) => Some(b * BigInt::from(euler_phi(c))),
                    _ => None,
                })
                .sum();
            if j % 2 == 0 {
                col
            } else {
                -col
            }
        })
        .sum();
    let e_chi = &inv.chi_u * BigInt::from(inv.e);
    r.euler_checks.push(check("chi(F) = e * chi(U)", chi_f == e_chi, format!("{chi_f} vs {e_chi}")));

    if let ConeSingularityInput::Smooth { n, multiplicities, degrees } = input {
        let p = DegreeProfile::new(*n, degrees.clone())?;
        let series = chi_open_series(&p)?;
        let ie = chi_open_inclusion_exclusion(&p)?;
        r.oracles.push(check("chi(U): series = inclusion-exclusion", series == ie, format!("{series} vs {ie}")));
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if degrees.len() >= 2 && sorted.len() == degrees.len() {
            let closed = chi_open_closed_form(&p)?;
            r.oracles.push(check(
                "chi(U): series = closed form",
                closed == Rat::from_integer(series.clone()),
                format_rat(&closed),
            ));
        }
        if degrees.len() == 1 && multiplicities[0] == 1 {
            let expected = num_traits::pow(BigInt::from(degrees[0] as i64 - 1), n + 1);
            r.oracles.push(check(
                "Milnor number = (d-1)^(n+1)",
                top_total == expected,
                format!("{top_total} vs {expected}"),
            ));
        }
    } else {
        r.warnings.push("chi(U) supplied by the input, not derived".into());
    }
    if inv.m <= 8 {
        let sum = shifted_twisted_sum(inv.m, inv.n)?;
        let mut agree = true;
        for j in 0..inv.n {
            let h = sum.cohomology_in(j as i64)?;
            agree &= t.rank(1, j) == Rank::Exact(h.into());
        }
        r.oracles.push(check(
            "unipotent ranks below n = cohomology of the Koszul E1 complex",
            agree,
            format!("degrees 0..{}", inv.n - 1),
        ));
    }
    Ok(r)
}

pub fn snc_link_report(input: &SncLinkInput, echo: Value) -> Result<ReportDocument> {
    let t = betti_bounds_thm02(input)?;
    let d = input.d();
    let mut r = ReportDocument { mode: "snc_link".into(), input: echo, ..Default::default() };
    r.invariants = vec![named("n", input.n), named("m", input.m()), named("d", d), named("rhm", input.rhm)];
    r.classes = t
        .rows
        .iter()
        .map(|row| match row.class {
            ClassKey::Order(c) => ClassInfo {
                class: row.class.to_string(),
                order: Some(c.to_string()),
                phi: Some(euler_phi(c).to_string()),
                divides_d: true,
                divides_e: None,
            },
            ClassKey::NonDivisorsOf(_) => ClassInfo {
                class: row.class.to_string(),
                order: None,
                phi: None,
                divides_d: false,
                divides_e: None,
            },
        })
        .collect();
    for row in &t.rows {
        for (j, cell) in row.cells.iter().enumerate() {
            match &cell.rank {
                Rank::Interval { lo, hi } => r.warnings.push(format!(
                    "{}: degree {j} only bounded, rank in [{lo}, {hi}]",
                    row.class
                )),
                Rank::Undetermined => {
                    r.warnings.push(format!("{}: degree {j} not determined by the low-degree theorem", row.class))
                }
                Rank::Exact(_) => {}
            }
        }
    }
    r.betti = Some(betti_report(&t, false));
    Ok(r)
}

pub fn jordan_report(g: &ResolutionGraph, echo: Value) -> Result<ReportDocument> {
    let witness = find_witness(g)?;
    let mut r = ReportDocument { mode: "jordan".into(), input: echo, ..Default::default() };
    let strata = [(1usize, 0i64), (2, 1), (0, 0), (1, 1)]
        .iter()
        .map(|&(a, b)| {
            let (j, j0) = strata_sets(g, a, b);
            StrataSetReport {
                a: a.to_string(),
                b: b.to_string(),
                j: j.iter().map(|s| g.stratum_name(s)).collect(),
                j0: j0.iter().map(|s| g.stratum_name(s)).collect(),
            }
        })
        .collect();
    let verdict = if witness.is_some() {
        "necessary conditions for non-semisimple monodromy on H^1 satisfied"
    } else {
        "no vector satisfies both necessary conditions"
    };
    r.jordan = Some(JordanReport {
        target_order: g.target_order.to_string(),
        eigen_set: g.eigen_set().iter().map(|&i| g.components[i].name.clone()).collect(),
        strata_sets: strata,
        witness: witness.map(|w| {
            w.coordinates
                .iter()
                .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
                .map(|(k, v)| WitnessEntry {
                    stratum: g.stratum_name(k),
                    index_set: index_label(k),
                    values: v.iter().map(format_rat).collect(),
                })
                .collect()
        }),
        verdict: verdict.into(),
        caveat: JORDAN_CAVEAT.into(),
    });
    Ok(r)
}

pub fn rank_check_report(input: &RankCheckInput, echo: Value) -> Result<ReportDocument> {
    let v = thm01_rank_check(&input.h_tilde_f, &input.h_link_phi, input.k_x, input.n)?;
    let mut r = ReportDocument { mode: "rank_check".into(), input: echo, ..Default::default() };
    r.rank_check = Some(RankCheckReport {
        n: input.n.to_string(),
        passed: v.passed(),
        implied_k_x: v.implied_k_x.to_string(),
        failures: v
            .failures
            .iter()
            .map(|f| RankFailureReport { degree: f.degree.to_string(), detail: f.detail.clone() })
            .collect(),
    });
    Ok(r)
}
