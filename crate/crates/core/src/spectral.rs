//! E1 pages of weight spectral sequences, the Euler characteristics and
//! Betti bounds they force, and primitive-decomposition bookkeeping.
//!
//! Pages use the convention `E_1^{-k, j+k}`: the first index is `p = -k`,
//! the second `q = j + k`, and the total degree `p + q` is `j`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::binomial;

/// Cohomology of one open stratum `U_I` with coefficients in the rank-one
/// local system attached to an eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDatum {
    pub index_set: Vec<usize>,
    /// `|I ∩ exceptional components| - 1`.
    pub s_value: i64,
    /// Degree `q` to `dim H^q(U_I, F_I)`.
    pub cohomology_dims: BTreeMap<i64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub dim: u64,
    /// Weight of the pure term `E_1^{-k, j+k}`, always `j + k`.
    pub weight: i64,
    /// Tate twists `t` of `Q(t)` contributing to this entry.
    pub twists: Vec<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpectralPage {
    pub n: usize,
    pub entries: BTreeMap<(i64, i64), PageEntry>,
    /// Strata with `s(I) = -1`; they contribute nothing but are reported.
    pub flagged_strata: Vec<Vec<usize>>,
}

impl SpectralPage {
    pub fn new(n: usize) -> Self {
        Self { n, ..Self::default() }
    }

    pub fn dim(&self, p: i64, q: i64) -> u64 {
        self.entries.get(&(p, q)).map_or(0, |e| e.dim)
    }

    fn add(&mut self, p: i64, q: i64, dim: u64, twist: i64) {
        if dim == 0 {
            return;
        }
        let e = self.entries.entry((p, q)).or_insert(PageEntry {
            dim: 0,
            weight: q,
            twists: Vec::new(),
        });
        e.dim += dim;
        if let Err(pos) = e.twists.binary_search(&twist) {
            e.twists.insert(pos, twist);
        }
    }
}

/// Assemble `E_1^{-k, j+k} = sum H^{j-|I|+1}(U_I, F_I(a+1-|I|))` over strata
/// `I ⊂ J` and `0 <= a <= s(I)` with `|I| - 1 - 2a = k`.
pub fn weight_ss_e1(strata: &[StratumDatum], j_set: &BTreeSet<usize>, n: usize) -> Result<SpectralPage> {
    let mut page = SpectralPage::new(n);
    for st in strata {
        let size = st.index_set.len() as i64;
        if st.index_set.is_empty() {
            return Err(Error::Argument("stratum with empty index set".into()));
        }
        if let Some(i) = st.index_set.iter().find(|i| !j_set.contains(i)) {
            return Err(Error::Argument(format!(
                "stratum {:?} has component {i} outside the eigenvalue set",
                st.index_set
            )));
        }
        if st.s_value < -1 || st.s_value > size - 1 {
            return Err(Error::Inconsistent(format!(
                "stratum {:?} has s = {}, outside [-1, {}]",
                st.index_set,
                st.s_value,
                size - 1
            )));
        }
        if st.s_value == -1 {
            page.flagged_strata.push(st.index_set.clone());
            continue;
        }
        for a in 0..=st.s_value {
            let k = size - 1 - 2 * a;
            for (&q, &dim) in &st.cohomology_dims {
                let j = q + size - 1;
                page.add(-k, j + k, dim, a + 1 - size);
            }
        }
    }
    Ok(page)
}

/// The E1 page of the cone case for `m` components in dimension `n`:
/// `E_1^{-k, j+k} = Q^{binom(m, k)}((-j-k)/2)` when `j + k` is even and
/// `0 <= k <= j`, for `j <= j_max < n`.
pub fn cone_e1_page(m: usize, n: usize, j_max: usize) -> Result<SpectralPage> {
    if m == 0 {
        return Err(Error::Argument("m must be >= 1".into()));
    }
    if j_max >= n {
        return Err(Error::Domain(format!(
            "E1 formula holds only in degrees below n = {n}, got j_max = {j_max}"
        )));
    }
    let mut page = SpectralPage::new(n);
    for j in 0..=j_max as i64 {
        for k in (0..=j).filter(|k| (j + k) % 2 == 0) {
            let dim = binomial(m as u64, k as u64);
            let dim: u64 = dim
                .try_into()
                .map_err(|_| Error::Argument("page dimension exceeds u64".into()))?;
            page.add(-k, j + k, dim, -(j + k) / 2);
        }
    }
    Ok(page)
}

/// `sum (-1)^{p+q} dim E_1^{p,q}`, preserved through every page.
pub fn euler_from_e1(page: &SpectralPage) -> i64 {
    page.entries
        .iter()
        .map(|(&(p, q), e)| if (p + q) % 2 == 0 { e.dim as i64 } else { -(e.dim as i64) })
        .sum()
}

/// `dim H^j <= sum_k dim E_1^{-k, j+k}` for each total degree `j` present.
pub fn betti_bounds_from_e1(page: &SpectralPage) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for (&(p, q), e) in &page.entries {
        *out.entry(p + q).or_insert(0) += e.dim;
    }
    out
}

/// Graded pieces `gr_j = sum_{k >= max(0, n-j)} p_{j+2k}` of a filtration
/// built from primitive parts `p_w` (weight `w >= n`) by iterating `N`.
///
/// Fails unless the result is symmetric about `n`.
pub fn primitive_decomposition_check(
    primitive_dims: &BTreeMap<i64, u64>,
    n: i64,
) -> Result<BTreeMap<i64, u64>> {
    if let Some((&w, _)) = primitive_dims.iter().find(|&(&w, &d)| d > 0 && w < n) {
        return Err(Error::Inconsistent(format!(
            "primitive part in weight {w} below the center {n}"
        )));
    }
    let mut gr = BTreeMap::new();
    for (&w, &d) in primitive_dims.iter().filter(|&(_, &d)| d > 0) {
        // N^k P_w lands in weight w - 2k for 0 <= k <= w - n.
        for k in 0..=(w - n) {
            *gr.entry(w - 2 * k).or_insert(0u64) += d;
        }
    }
    for (&j, &d) in &gr {
        if gr.get(&(2 * n - j)).copied().unwrap_or(0) != d {
            return Err(Error::Inconsistent(format!(
                "graded pieces not symmetric about {n}: gr_{j} = {d}"
            )));
        }
    }
    Ok(gr)
}
