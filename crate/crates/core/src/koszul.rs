//! Koszul complex `K(Q; id, ..., id)` and the stupid truncations built from
//! it that model Cech complexes of link strata.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactalg::{cohomology_dims, rat, CochainComplex, RatMatrix};

/// Exterior algebra basis of `Lambda^j Q^m`: `j`-subsets in lexicographic order.
fn exterior_basis(m: usize, j: usize) -> Vec<Vec<usize>> {
    (0..m).combinations(j).collect()
}

/// Koszul complex of `m` copies of the identity: `Lambda^j Q^m` in degree
/// `j` with differential `e_I -> sum_{i not in I} (-1)^{#{p in I : p < i}} e_{I + i}`.
pub fn koszul_complex(m: usize) -> Result<CochainComplex> {
    if m == 0 {
        return Err(Error::Argument("Koszul complex needs m >= 1".into()));
    }
    let bases: Vec<Vec<Vec<usize>>> = (0..=m).map(|j| exterior_basis(m, j)).collect();
    let mut differentials = Vec::with_capacity(m);
    for j in 0..m {
        let target: HashMap<&[usize], usize> = bases[j + 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut d = RatMatrix::zeros(bases[j + 1].len(), bases[j].len());
        for (col, subset) in bases[j].iter().enumerate() {
            for i in (0..m).filter(|i| !subset.contains(i)) {
                let below = subset.iter().filter(|&&p| p < i).count();
                let mut bigger = subset.clone();
                bigger.push(i);
                bigger.sort_unstable();
                let row = target[bigger.as_slice()];
                d.set(row, col, rat(if below % 2 == 0 { 1 } else { -1 }));
            }
        }
        differentials.push(d);
    }
    CochainComplex::new(0, bases.iter().map(Vec::len).collect(), differentials)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncationSide {
    AtLeast,
    AtMost,
}

/// Stupid truncation `sigma_{>= i}` or `sigma_{<= i}`: components on the
/// other side are replaced by zero, without any cohomological correction.
pub fn sigma_truncate(c: &CochainComplex, i: i64, side: TruncationSide) -> CochainComplex {
    match side {
        TruncationSide::AtLeast => c.restrict_to(i, i64::MAX),
        TruncationSide::AtMost => c.restrict_to(i64::MIN, i),
    }
}

/// The Cech complex `K_lambda` of the link strata, modelled by the Koszul
/// complex. The identification holds only through `valid_through`; in degree
/// `n` strata may be reducible and the Koszul model is merely a direct factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KLambda {
    pub complex: CochainComplex,
    pub valid_through: i64,
}

impl KLambda {
    /// Cohomology of the model in degree `j`, together with whether this is
    /// the true value (`j <= valid_through`) or only a lower bound.
    pub fn cohomology_in(&self, j: i64) -> Result<(usize, bool)> {
        let dims = cohomology_dims(&self.complex)?;
        let dim = dims.iter().find(|&&(d, _)| d == j).map_or(0, |&(_, v)| v);
        Ok((dim, j <= self.valid_through))
    }
}

/// `K_lambda` for `m` components in a germ of dimension `n`, assuming each
/// link stratum with at most `n - 1` components is connected.
pub fn k_lambda_complex(m: usize, n: usize) -> Result<KLambda> {
    if n == 0 {
        return Err(Error::Argument("dimension n must be >= 1".into()));
    }
    Ok(KLambda {
        complex: koszul_complex(m)?,
        valid_through: n as i64 - 1,
    })
}

/// One summand of a direct sum of truncated complexes, already shifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedSummand {
    pub complex: CochainComplex,
    /// Tate twist `t` of `Q(t)`, applied uniformly to the summand.
    pub twist: i64,
    /// Shift `k` of `C[k]` that was applied.
    pub shift: i64,
    /// Truncation bound `i` of `sigma_{>= i}` before shifting.
    pub truncated_at: i64,
}

/// Direct sum of shifted and twisted stupid truncations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistedComplex {
    pub summands: Vec<TwistedSummand>,
}

impl TwistedComplex {
    /// The underlying complex, forgetting twists.
    pub fn base(&self) -> CochainComplex {
        let parts: Vec<CochainComplex> = self.summands.iter().map(|s| s.complex.clone()).collect();
        CochainComplex::direct_sum(&parts)
    }

    /// Twists present in each degree with a nonzero component.
    pub fn twist_labels(&self) -> Vec<(i64, Vec<i64>)> {
        let base = self.base();
        base.degrees()
            .filter(|&j| base.dim(j) > 0)
            .map(|j| {
                let twists = self
                    .summands
                    .iter()
                    .filter(|s| s.complex.dim(j) > 0)
                    .map(|s| s.twist)
                    .sorted()
                    .dedup()
                    .collect();
                (j, twists)
            })
            .collect()
    }

    /// Cohomology dimension per degree, summed over summands.
    pub fn cohomology_dims(&self) -> Result<Vec<(i64, usize)>> {
        let mut total: std::collections::BTreeMap<i64, usize> =
            self.base().degrees().map(|j| (j, 0)).collect();
        for s in &self.summands {
            for (j, h) in cohomology_dims(&s.complex)? {
                *total.entry(j).or_insert(0) += h;
            }
        }
        Ok(total.into_iter().collect())
    }

    pub fn cohomology_in(&self, j: i64) -> Result<usize> {
        Ok(self
            .cohomology_dims()?
            .into_iter()
            .find(|&(d, _)| d == j)
            .map_or(0, |(_, v)| v))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.summands.iter().map(|s| s.complex.euler_characteristic()).sum()
    }
}

/// `K~_lambda = sum_{i >= 1} (sigma_{>= i} K_lambda)(1 - i)[n + 1]`.
///
/// Summands with `i > m` vanish and are omitted.
pub fn ktilde_complex(m: usize, n: usize) -> Result<TwistedComplex> {
    let k = k_lambda_complex(m, n)?;
    let shift = n as i64 + 1;
    let summands = (1..=m as i64)
        .map(|i| TwistedSummand {
            complex: sigma_truncate(&k.complex, i, TruncationSide::AtLeast).shift(shift),
            twist: 1 - i,
            shift,
            truncated_at: i,
        })
        .collect();
    Ok(TwistedComplex { summands })
}

/// `sum_{w >= 0} sigma_{>= m - w} K [m - 2w] (-w)`, the E1 complex of the
/// weight spectral sequence for `U` in degrees below `n`.
///
/// Summands with `w >= n` only carry degrees `>= n` and are omitted.
pub fn shifted_twisted_sum(m: usize, n: usize) -> Result<TwistedComplex> {
    if n == 0 {
        return Err(Error::Argument("dimension n must be >= 1".into()));
    }
    let k = koszul_complex(m)?;
    let m = m as i64;
    let summands = (0..n as i64)
        .map(|w| TwistedSummand {
            complex: sigma_truncate(&k, m - w, TruncationSide::AtLeast).shift(m - 2 * w),
            twist: -w,
            shift: m - 2 * w,
            truncated_at: m - w,
        })
        .collect();
    Ok(TwistedComplex { summands })
}
