//! Euler characteristics of the strata `D_I` of a normal crossing divisor
//! `D_1 + ... + D_m` on `P^n`, and of the open complement `U`.
//!
//! `chi(D_I)` is the coefficient of `T^n` in
//! `(1+T)^{n+1} prod_{j in I} d_j T / (1 + d_j T)` computed in
//! `Q[[T]]/(T^{n+1})`. Three routes to `chi(U)` are provided: the product
//! series (canonical), inclusion-exclusion over strata, and a partial
//! fraction closed form valid for pairwise distinct degrees.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{rat, rat_to_integer, series_geom_inverse, Rat, TruncSeries};

/// Degrees `d_1, ..., d_m` of the components of a divisor on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    n: usize,
    degrees: Vec<u64>,
}

impl DegreeProfile {
    pub fn new(n: usize, degrees: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("projective dimension n must be >= 1".into()));
        }
        if degrees.is_empty() {
            return Err(Error::Argument("at least one component degree is required".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::Argument("component degrees must be >= 1".into()));
        }
        Ok(Self { n, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn m(&self) -> usize {
        self.degrees.len()
    }

    fn distinct(&self) -> bool {
        self.degrees.iter().all_unique()
    }
}

fn integral(q: Rat, what: &str) -> Result<BigInt> {
    rat_to_integer(&q).ok_or_else(|| Error::Internal(format!("{what} is not an integer: {q}")))
}

/// `chi(D_I)` for a set of 0-based component indices.
pub fn chi_stratum(p: &DegreeProfile, subset: &[usize]) -> Result<BigInt> {
    let n = p.n;
    if subset.len() > n {
        return Err(Error::Domain(format!(
            "stratum of {} components exceeds the dimension n = {n}",
            subset.len()
        )));
    }
    if let Some(&bad) = subset.iter().find(|&&j| j >= p.m()) {
        return Err(Error::Argument(format!("component index {bad} out of range")));
    }
    if !subset.iter().all_unique() {
        return Err(Error::Argument("stratum index set has repeated entries".into()));
    }
    let mut acc = TruncSeries::one_plus_t_pow(n as u64 + 1, n);
    for &j in subset {
        let d = p.degrees[j];
        let factor = series_geom_inverse(d, n)?.shift_up().scale(&rat(d as i64));
        acc = acc.try_mul(&factor)?;
    }
    integral(acc.coeff(n), "chi(D_I)")
}

/// `chi(U)` as the coefficient of `T^n` in `(1+T)^{n+1} prod_j (1 + d_j T)^{-1}`.
pub fn chi_open_series(p: &DegreeProfile) -> Result<BigInt> {
    let n = p.n;
    let mut acc = TruncSeries::one_plus_t_pow(n as u64 + 1, n);
    for &d in &p.degrees {
        acc = acc.try_mul(&series_geom_inverse(d, n)?)?;
    }
    integral(acc.coeff(n), "chi(U)")
}

/// `chi(U) = sum_{|I| <= n} (-1)^{|I|} chi(D_I)`, enumerating every stratum.
pub fn chi_open_inclusion_exclusion(p: &DegreeProfile) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for size in 0..=p.n.min(p.m()) {
        for subset in (0..p.m()).combinations(size) {
            let chi = chi_stratum(p, &subset)?;
            if size % 2 == 0 {
                total += chi;
            } else {
                total -= chi;
            }
        }
    }
    Ok(total)
}

fn pow_rat(base: &Rat, e: usize) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * base)
}

fn distinct_degrees(p: &DegreeProfile) -> Result<Vec<Rat>> {
    if !p.distinct() {
        return Err(Error::Domain(
            "the partial-fraction formula needs pairwise distinct degrees; \
             use the series evaluation (chi_open_series) for repeated degrees"
                .into(),
        ));
    }
    Ok(p.degrees.iter().map(|&d| rat(d as i64)).collect())
}

fn others_product(ds: &[Rat], i: usize) -> Rat {
    ds.iter()
        .enumerate()
        .filter(|&(p, _)| p != i)
        .fold(Rat::one(), |acc, (_, dp)| acc * (&ds[i] - dp))
}

/// `sum_i -d_i^{m-2} (1-d_i)^{n+1} / prod_{p != i} (d_i - d_p)`, for `m > 1`
/// and pairwise distinct degrees.
pub fn chi_open_closed_form(p: &DegreeProfile) -> Result<Rat> {
    if p.m() < 2 {
        return Err(Error::Domain("the closed form needs at least two components".into()));
    }
    let ds = distinct_degrees(p)?;
    let m = ds.len();
    let mut total = Rat::zero();
    for (i, d) in ds.iter().enumerate() {
        let num = pow_rat(d, m - 2) * pow_rat(&(Rat::one() - d), p.n + 1);
        total -= num / others_product(&ds, i);
    }
    Ok(total)
}

/// Coefficient of `T^k` in `prod_j (1 + d_j T)^{-1}`, evaluated both from
/// the series and from `(-1)^k sum_i d_i^{k+m-1} / prod_{p != i} (d_i - d_p)`.
/// The two must agree; the common value is returned.
pub fn series_coefficient_polynomial_check(p: &DegreeProfile, k: usize) -> Result<Rat> {
    let ds = distinct_degrees(p)?;
    if k > p.n {
        return Err(Error::Domain(format!("coefficient index {k} exceeds n = {}", p.n)));
    }
    let mut series = TruncSeries::one(p.n);
    for &d in &p.degrees {
        series = series.try_mul(&series_geom_inverse(d, p.n)?)?;
    }
    let from_series = series.coeff(k);

    let m = ds.len();
    let mut from_fractions: Rat = ds
        .iter()
        .enumerate()
        .map(|(i, d)| pow_rat(d, k + m - 1) / others_product(&ds, i))
        .sum();
    if k % 2 == 1 {
        from_fractions = -from_fractions;
    }
    if from_series != from_fractions {
        return Err(Error::Internal(format!(
            "coefficient of T^{k}: series gives {from_series}, partial fractions give {from_fractions}"
        )));
    }
    Ok(from_series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gen_binomial;

    fn profile(n: usize, d: &[u64]) -> DegreeProfile {
        DegreeProfile::new(n, d.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn stratum_values() {
        let p = profile(2, &[1, 2]);
        assert_eq!(chi_stratum(&p, &[]).unwrap(), big(3));
        assert_eq!(chi_stratum(&p, &[0]).unwrap(), big(2));
        assert_eq!(chi_stratum(&p, &[1]).unwrap(), big(2));
        // a line meets a conic in two points
        assert_eq!(chi_stratum(&p, &[0, 1]).unwrap(), big(2));
        assert!(chi_stratum(&profile(1, &[1, 1]), &[0, 1]).is_err());
    }

    #[test]
    fn open_series_values() {
        assert_eq!(chi_open_series(&profile(2, &[1, 1, 1, 1])).unwrap(), big(1));
        assert_eq!(chi_open_series(&profile(2, &[2])).unwrap(), big(1));
        assert_eq!(chi_open_series(&profile(2, &[1, 1])).unwrap(), big(0));
    }

    #[test]
    fn inclusion_exclusion_values() {
        // 3 - 4*2 + 6*1 = 1
        assert_eq!(chi_open_inclusion_exclusion(&profile(2, &[1, 1, 1, 1])).unwrap(), big(1));
        assert_eq!(chi_open_inclusion_exclusion(&profile(2, &[2])).unwrap(), big(1));
        assert_eq!(chi_open_inclusion_exclusion(&profile(2, &[1, 1])).unwrap(), big(0));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(chi_open_closed_form(&profile(2, &[1, 2])).unwrap(), rat(1));
        assert_eq!(chi_open_closed_form(&profile(2, &[1, 3])).unwrap(), rat(4));
        assert_eq!(chi_open_series(&profile(2, &[1, 3])).unwrap(), big(4));
        assert!(matches!(
            chi_open_closed_form(&profile(2, &[2, 2])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            chi_open_closed_form(&profile(2, &[2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn coefficient_polynomial() {
        assert_eq!(series_coefficient_polynomial_check(&profile(2, &[1, 2]), 0).unwrap(), rat(1));
        assert_eq!(series_coefficient_polynomial_check(&profile(2, &[1, 2]), 1).unwrap(), rat(-3));
        assert_eq!(series_coefficient_polynomial_check(&profile(2, &[1, 3]), 2).unwrap(), rat(13));
        assert!(series_coefficient_polynomial_check(&profile(2, &[3, 3]), 1).is_err());
    }

    #[test]
    fn routes_agree_on_small_profiles() {
        for n in 1..=4 {
            for degrees in (1..=3u64).combinations_with_replacement(3) {
                let p = profile(n, &degrees);
                let s = chi_open_series(&p).unwrap();
                assert_eq!(s, chi_open_inclusion_exclusion(&p).unwrap(), "{p:?}");
                if p.distinct() {
                    assert_eq!(Rat::from_integer(s), chi_open_closed_form(&p).unwrap());
                }
            }
        }
    }

    #[test]
    fn single_hypersurface_milnor_number() {
        for d in 1..=10i64 {
            for n in 1..=8usize {
                let chi = chi_open_series(&profile(n, &[d as u64])).unwrap();
                let lhs = big(1) - big(d) * chi;
                assert_eq!(lhs, num_traits::pow(big(1 - d), n + 1), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn generic_arrangement() {
        for m in 1..=10usize {
            for n in 1..=8usize {
                let chi = chi_open_series(&profile(n, &vec![1; m])).unwrap();
                let expected = gen_binomial(m as i64 - 2, n as u64);
                let expected = if n % 2 == 0 { expected } else { -expected };
                assert_eq!(chi, expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn profile_validation() {
        assert!(DegreeProfile::new(0, vec![1]).is_err());
        assert!(DegreeProfile::new(2, vec![]).is_err());
        assert!(DegreeProfile::new(2, vec![1, 0]).is_err());
    }
}
