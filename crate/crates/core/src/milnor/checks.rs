use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Largest possible Jordan block at the point in degree `j`, given the
/// Jordan block sizes `k_i` of the nearby eigenspaces in degrees `i <= j`.
pub fn jordan_bound(sizes: &BTreeMap<usize, u64>, j: usize, n: usize) -> Result<u64> {
    if j >= n {
        return Err(Error::Domain(format!("the bound holds only for j < n = {n}, got j = {j}")));
    }
    if let Some(i) = sizes.keys().find(|&&i| i > j) {
        return Err(Error::Argument(format!("size given for degree {i} above j = {j}")));
    }
    sizes
        .values()
        .try_fold(0u64, |acc, k| acc.checked_add(*k))
        .ok_or_else(|| Error::Argument("bound overflows u64".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFailure {
    pub degree: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankVerdict {
    pub failures: Vec<RankFailure>,
    /// `dim H^{n-1}(link, phi) - dim H~^{n-1}(F_x)`, the only value of
    /// `dim K_x` compatible with the short exact sequence.
    pub implied_k_x: i64,
}

impl RankVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `dim H~^j(F_x) = dim H^j(link, phi)` for `j < n - 1` and
/// `dim H^{n-1}(link, phi) = dim H~^{n-1}(F_x) + dim K_x`. Missing degrees
/// count as zero.
pub fn thm01_rank_check(h_tilde_f: &[u64], h_link_phi: &[u64], k_x: u64, n: usize) -> Result<RankVerdict> {
    if n == 0 {
        return Err(Error::Argument("n must be >= 1".into()));
    }
    let at = |v: &[u64], j: usize| v.get(j).copied().unwrap_or(0) as i64;
    let mut failures = Vec::new();
    for j in 0..n - 1 {
        let (f, l) = (at(h_tilde_f, j), at(h_link_phi, j));
        if f != l {
            failures.push(RankFailure {
                degree: j,
                detail: format!("reduced Milnor fiber has rank {f} but link cohomology has rank {l}"),
            });
        }
    }
    let (f, l) = (at(h_tilde_f, n - 1), at(h_link_phi, n - 1));
    if l != f + k_x as i64 {
        failures.push(RankFailure {
            degree: n - 1,
            detail: format!("link rank {l} differs from fiber rank {f} plus dim K_x = {k_x}"),
        });
    }
    Ok(RankVerdict { failures, implied_k_x: l - f })
}
