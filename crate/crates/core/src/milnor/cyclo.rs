use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::betti::{BettiTable, Rank};
use crate::error::{Error, Result};
use crate::exactalg::{divisors, mobius};

/// A product `prod_c (1 - t^c)^{m_c}` with integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloProduct {
    exponents: BTreeMap<u64, BigInt>,
}

impl CycloProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// `(1 - t^c)^k`.
    pub fn factor(c: u64, k: impl Into<BigInt>) -> Result<Self> {
        Self::from_exponents([(c, k.into())])
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (u64, BigInt)>) -> Result<Self> {
        let mut out = Self::one();
        for (c, k) in pairs {
            if c == 0 {
                return Err(Error::Argument("cyclotomic factor needs c >= 1".into()));
            }
            out.add_exponent(c, &k);
        }
        Ok(out)
    }

    fn add_exponent(&mut self, c: u64, k: &BigInt) {
        let e = self.exponents.entry(c).or_insert_with(BigInt::zero);
        *e += k;
        if e.is_zero() {
            self.exponents.remove(&c);
        }
    }

    pub fn exponent(&self, c: u64) -> BigInt {
        self.exponents.get(&c).cloned().unwrap_or_default()
    }

    pub fn exponents(&self) -> &BTreeMap<u64, BigInt> {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&c, k) in &other.exponents {
            out.add_exponent(c, k);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let exponents = if k.is_zero() {
            BTreeMap::new()
        } else {
            self.exponents.iter().map(|(&c, e)| (c, e * &k)).collect()
        };
        Self { exponents }
    }

    /// Multiplicity of each primitive `c`-th root of unity as a root, using
    /// `1 - t^e = prod_{c | e} Phi_c(t)` up to sign.
    pub fn root_multiplicities(&self) -> BTreeMap<u64, BigInt> {
        let mut out: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (&e, k) in &self.exponents {
            for c in divisors(e) {
                *out.entry(c).or_insert_with(BigInt::zero) += k;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Inverse of [`Self::root_multiplicities`]: the product whose roots of
    /// order `c` have the given multiplicities.
    pub fn from_root_multiplicities(mult: &BTreeMap<u64, BigInt>) -> Result<Self> {
        let mut out = Self::one();
        // the exponent of (1 - t^e) is sum_{c : e | c} b_c mu(c / e)
        let mut candidates: Vec<u64> = mult.keys().flat_map(|&c| divisors(c)).collect();
        candidates.sort_unstable();
        candidates.dedup();
        for e in candidates {
            let mut k = BigInt::zero();
            for (&c, b) in mult {
                if c % e == 0 {
                    k += b * mobius(c / e);
                }
            }
            out.add_exponent(e, &k);
        }
        Ok(out)
    }
}

impl fmt::Display for CycloProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (c, k) in &self.exponents {
            if *c == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{c})")?;
            }
            if !k.is_one() {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// `det(1 - tT | H^j(F_x))` for each degree `j = 0..=n` of a cone table.
pub fn char_poly_per_degree(table: &BettiTable) -> Result<Vec<CycloProduct>> {
    if table.cone_invariants().is_none() {
        return Err(Error::Unsupported(
            "characteristic polynomials need a table with exact ranks in every degree".into(),
        ));
    }
    let mut out = Vec::with_capacity(table.n + 1);
    for j in 0..=table.n {
        let mut mult = BTreeMap::new();
        for row in &table.rows {
            let cell = &row.cells[j];
            let Rank::Exact(b) = &cell.rank else {
                return Err(Error::Unsupported(format!("degree {j} has a non-exact rank")));
            };
            if !cell.semisimple {
                return Err(Error::Unsupported(format!("degree {j} is not semisimple")));
            }
            let super::ClassKey::Order(c) = row.class else {
                return Err(Error::Unsupported("table rows must be single classes".into()));
            };
            if !b.is_zero() {
                mult.insert(c, b.clone());
            }
        }
        let poly = CycloProduct::from_root_multiplicities(&mult)?;
        let back = poly.root_multiplicities();
        if back.values().any(|v| v.is_negative()) || back != mult {
            return Err(Error::Inconsistent(format!(
                "degree {j}: cyclotomic product {poly} does not reproduce the eigenvalue multiplicities"
            )));
        }
        out.push(poly);
    }
    Ok(out)
}

/// `zeta(t) = prod_j det(1 - tT | H^j)^{(-1)^{j+1}}`, checked against
/// `(1 - t^e)^{-chi(U)}`.
pub fn zeta_function(table: &BettiTable) -> Result<CycloProduct> {
    let inv = table
        .cone_invariants()
        .ok_or_else(|| Error::Unsupported("zeta function needs a cone table".into()))?;
    let polys = char_poly_per_degree(table)?;
    let zeta = polys
        .iter()
        .enumerate()
        .fold(CycloProduct::one(), |acc, (j, p)| acc.mul(&p.pow(if j % 2 == 0 { -1 } else { 1 })));
    let expected = CycloProduct::factor(inv.e, -&inv.chi_u)?;
    if zeta != expected {
        return Err(Error::Internal(format!(
            "zeta function {zeta} differs from {expected}"
        )));
    }
    Ok(zeta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::{betti_table_thm03, ConeSingularityInput};

    fn table(n: usize, a: &[u64], d: &[u64]) -> BettiTable {
        betti_table_thm03(&ConeSingularityInput::Smooth {
            n,
            multiplicities: a.to_vec(),
            degrees: d.to_vec(),
        })
        .unwrap()
    }

    fn p(pairs: &[(u64, i64)]) -> CycloProduct {
        CycloProduct::from_exponents(pairs.iter().map(|&(c, k)| (c, BigInt::from(k)))).unwrap()
    }

    #[test]
    fn display() {
        assert_eq!(CycloProduct::one().to_string(), "1");
        assert_eq!(p(&[(1, 2), (4, 1)]).to_string(), "(1-t)^2(1-t^4)");
        assert_eq!(p(&[(2, -1)]).to_string(), "(1-t^2)^-1");
        assert!(p(&[(3, 1), (3, -1)]).is_one());
        assert!(CycloProduct::factor(0, 1).is_err());
    }

    #[test]
    fn generic_arrangement_polys() {
        let t = table(2, &[1; 4], &[1; 4]);
        let polys = char_poly_per_degree(&t).unwrap();
        assert_eq!(polys, vec![p(&[(1, 1)]), p(&[(1, 3)]), p(&[(1, 2), (4, 1)])]);
        assert_eq!(zeta_function(&t).unwrap(), p(&[(4, -1)]));
    }

    #[test]
    fn quadric_cone_polys() {
        let t = table(2, &[1], &[2]);
        let polys = char_poly_per_degree(&t).unwrap();
        // 1 + t = (1 - t^2)(1 - t)^{-1}
        assert_eq!(polys[2], p(&[(1, -1), (2, 1)]));
        assert_eq!(zeta_function(&t).unwrap(), p(&[(2, -1)]));
    }

    #[test]
    fn euler_zero_case() {
        let t = table(2, &[2, 3], &[1, 1]);
        let polys = char_poly_per_degree(&t).unwrap();
        assert!(polys[2].is_one());
        assert!(zeta_function(&t).unwrap().is_one());
    }

    #[test]
    fn root_multiplicity_roundtrip() {
        let q = p(&[(1, 3), (6, 2), (4, -1), (12, 1)]);
        let back = CycloProduct::from_root_multiplicities(&q.root_multiplicities()).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn snc_tables_unsupported() {
        let t = crate::milnor::betti_bounds_thm02(&crate::milnor::SncLinkInput {
            n: 2,
            multiplicities: vec![1, 1],
            rhm: false,
        })
        .unwrap();
        assert!(matches!(char_poly_per_degree(&t), Err(Error::Unsupported(_))));
        assert!(zeta_function(&t).is_err());
    }
}
