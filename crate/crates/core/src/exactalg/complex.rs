use super::matrix::RatMatrix;
use super::rat::rat;
use crate::error::{Error, Result};

/// Finite cochain complex of finite-dimensional rational vector spaces.
///
/// Components live in degrees `min_degree ..= min_degree + dims.len() - 1`;
/// `differentials[i]` maps degree `min_degree + i` to the next degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    min_degree: i64,
    dims: Vec<usize>,
    differentials: Vec<RatMatrix>,
}

impl CochainComplex {
    /// Checks that differential shapes match the adjacent components.
    /// The square-zero condition is checked separately by
    /// [`CochainComplex::check_square_zero`].
    pub fn new(min_degree: i64, dims: Vec<usize>, differentials: Vec<RatMatrix>) -> Result<Self> {
        if differentials.len() != dims.len().saturating_sub(1) {
            return Err(Error::Argument(format!(
                "{} components need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.cols() != dims[i] || d.rows() != dims[i + 1] {
                return Err(Error::Argument(format!(
                    "differential in degree {} is {}x{}, expected {}x{}",
                    min_degree + i as i64,
                    d.rows(),
                    d.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        Ok(Self {
            min_degree,
            dims,
            differentials,
        })
    }

    pub fn zero() -> Self {
        Self {
            min_degree: 0,
            dims: Vec::new(),
            differentials: Vec::new(),
        }
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Last degree carried by the complex, or `None` when it carries none.
    pub fn max_degree(&self) -> Option<i64> {
        (!self.dims.is_empty()).then(|| self.min_degree + self.dims.len() as i64 - 1)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len()).map(move |i| self.min_degree + i as i64)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension in degree `j`, zero outside the carried range.
    pub fn dim(&self, j: i64) -> usize {
        self.index(j).map_or(0, |i| self.dims[i])
    }

    /// The differential leaving degree `j`, when both ends are carried.
    pub fn differential(&self, j: i64) -> Option<&RatMatrix> {
        self.index(j).and_then(|i| self.differentials.get(i))
    }

    fn index(&self, j: i64) -> Option<usize> {
        let i = j - self.min_degree;
        (i >= 0 && (i as usize) < self.dims.len()).then_some(i as usize)
    }

    /// Rank of the differential leaving degree `j`.
    pub fn rank_out(&self, j: i64) -> usize {
        self.differential(j).map_or(0, RatMatrix::rank)
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for (i, pair) in self.differentials.windows(2).enumerate() {
            if !pair[1].try_mul(&pair[0])?.is_zero() {
                return Err(Error::InvalidComplex {
                    degree: self.min_degree + i as i64,
                });
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|j| sign(j) * self.dim(j) as i64)
            .sum()
    }

    /// The shifted complex `C[k]`, with `C[k]^j = C^{j+k}` and differential
    /// multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let s = rat(sign(k));
        Self {
            min_degree: self.min_degree - k,
            dims: self.dims.clone(),
            differentials: self.differentials.iter().map(|d| d.scale(&s)).collect(),
        }
    }

    /// Replaces every component outside `[lo, hi]` by zero, keeping the
    /// degree range of the complex unchanged.
    pub fn restrict_to(&self, lo: i64, hi: i64) -> Self {
        let keep = |j: i64| lo <= j && j <= hi;
        let dims: Vec<usize> = self
            .degrees()
            .map(|j| if keep(j) { self.dim(j) } else { 0 })
            .collect();
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let j = self.min_degree + i as i64;
                if keep(j) && keep(j + 1) {
                    d.clone()
                } else {
                    RatMatrix::zeros(dims[i + 1], dims[i])
                }
            })
            .collect();
        Self {
            min_degree: self.min_degree,
            dims,
            differentials,
        }
    }

    /// Direct sum, with block-diagonal differentials over the union of the
    /// degree ranges.
    pub fn direct_sum(parts: &[CochainComplex]) -> Self {
        let carried: Vec<&CochainComplex> = parts.iter().filter(|c| !c.dims.is_empty()).collect();
        let Some(lo) = carried.iter().map(|c| c.min_degree).min() else {
            return Self::zero();
        };
        let hi = carried.iter().filter_map(|c| c.max_degree()).max().unwrap_or(lo);
        let dims: Vec<usize> = (lo..=hi)
            .map(|j| carried.iter().map(|c| c.dim(j)).sum())
            .collect();
        let differentials = (lo..hi)
            .map(|j| {
                let blocks: Vec<RatMatrix> = carried
                    .iter()
                    .map(|c| {
                        c.differential(j)
                            .filter(|_| c.index(j + 1).is_some())
                            .cloned()
                            .unwrap_or_else(|| RatMatrix::zeros(c.dim(j + 1), c.dim(j)))
                    })
                    .collect();
                RatMatrix::block_diag(&blocks)
            })
            .collect();
        Self {
            min_degree: lo,
            dims,
            differentials,
        }
    }
}

fn sign(j: i64) -> i64 {
    if j.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(degree, dim H^degree)` for every carried degree, via
/// `dim H^j = dim C^j - rank d^j - rank d^{j-1}`.
pub fn cohomology_dims(c: &CochainComplex) -> Result<Vec<(i64, usize)>> {
    c.check_square_zero()?;
    Ok(c.degrees()
        .map(|j| (j, c.dim(j) - c.rank_out(j) - c.rank_out(j - 1)))
        .collect())
}
