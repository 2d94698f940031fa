use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{rat, RatMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub name: String,
    pub multiplicity: u64,
    /// Lies over the singular point. Exceptional components come first.
    pub exceptional: bool,
}

/// A nonempty intersection `Y_I` of components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Stratum {
    pub index_set: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Number of connected components of `Y_I`, i.e. `dim H^0(Y_I)`.
    #[serde(default = "one")]
    pub connected_components: usize,
    /// `dim H^q(U_I, F_I)` indexed by `q`, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<u64>>,
}

fn one() -> usize {
    1
}

/// A linear map between the cohomology spaces of two strata, given as a
/// row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Block {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

/// Combinatorial data of an embedded resolution of a surface germ.
///
/// `restrictions` holds the signed Cech maps `H^0(Y_I) -> H^0(Y_K)` for
/// `K = I + {j}`; when omitted for a pair of connected strata they default
/// to `(-1)^p` with `p` the position of `j` in `K`. `gysin` holds the maps
/// `H^0(Y_I) -> H^2(U_K, F_K)(1)` for `K = I - {j}`, already signed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionGraph {
    pub components: Vec<Component>,
    pub strata: Vec<Stratum>,
    #[serde(default)]
    pub restrictions: Vec<Block>,
    #[serde(default)]
    pub gysin: Vec<Block>,
    pub target_order: u64,
}

/// Sign of inserting or removing the element at position `pos`.
pub fn position_sign(pos: usize) -> i64 {
    if pos.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn label(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// The single element of `big` missing from `small`, with its position in
/// `big`, when `small` is `big` with one element removed.
fn extra_element(small: &[usize], big: &[usize]) -> Option<(usize, usize)> {
    if big.len() != small.len() + 1 {
        return None;
    }
    let pos = (0..big.len()).find(|&p| p == small.len() || big[p] != small[p])?;
    let mut rest = big.to_vec();
    let j = rest.remove(pos);
    (rest == small).then_some((j, pos))
}

impl ResolutionGraph {
    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn stratum(&self, set: &[usize]) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.index_set == set)
    }

    pub fn stratum_name(&self, set: &[usize]) -> String {
        match self.stratum(set).and_then(|s| s.name.clone()) {
            Some(n) => n,
            None => set
                .iter()
                .map(|&i| self.components.get(i).map_or_else(|| i.to_string(), |c| c.name.clone()))
                .collect::<Vec<_>>()
                .join("∩"),
        }
    }

    /// `s(I) = |I ∩ exceptional| - 1`.
    pub fn s_value(&self, set: &[usize]) -> i64 {
        set.iter().filter(|&&i| self.components[i].exceptional).count() as i64 - 1
    }

    /// `J(lambda)`: components whose multiplicity is divisible by the target order.
    pub fn eigen_set(&self) -> BTreeSet<usize> {
        (0..self.m())
            .filter(|&i| self.components[i].multiplicity.is_multiple_of(self.target_order))
            .collect()
    }

    pub fn h0_dim(&self, set: &[usize]) -> usize {
        self.stratum(set).map_or(0, |s| s.connected_components)
    }

    /// `dim H^2(U_I, F_I)`, failing when the stratum carries no cohomology data.
    pub fn h2_dim(&self, set: &[usize]) -> Result<usize> {
        let st = self.stratum(set).ok_or_else(|| Error::IncompleteData {
            stratum: self.stratum_name(set),
            detail: "stratum is not listed".into(),
        })?;
        let dims = st.cohomology.as_ref().ok_or_else(|| Error::IncompleteData {
            stratum: self.stratum_name(set),
            detail: "no cohomology of the local system on the open stratum".into(),
        })?;
        Ok(dims.get(2).copied().unwrap_or(0) as usize)
    }

    pub fn validate(&self) -> Result<()> {
        if self.target_order == 0 {
            return Err(Error::Argument("target_order must be >= 1".into()));
        }
        if self.components.is_empty() {
            return Err(Error::Argument("graph has no components".into()));
        }
        if let Some(c) = self.components.iter().find(|c| c.multiplicity == 0) {
            return Err(Error::Argument(format!("component {} has multiplicity 0", c.name)));
        }
        let r = self.components.iter().take_while(|c| c.exceptional).count();
        if self.components[r..].iter().any(|c| c.exceptional) {
            return Err(Error::Argument("exceptional components must come first".into()));
        }
        let mut seen = BTreeSet::new();
        for st in &self.strata {
            let set = &st.index_set;
            if set.is_empty() || set.windows(2).any(|w| w[0] >= w[1]) || set[set.len() - 1] >= self.m() {
                return Err(Error::Argument(format!(
                    "stratum {} must be a strictly increasing list of component indices",
                    label(set)
                )));
            }
            if !seen.insert(set.clone()) {
                return Err(Error::Argument(format!("stratum {} listed twice", label(set))));
            }
            if st.connected_components == 0 {
                return Err(Error::Argument(format!("stratum {} has no connected component", label(set))));
            }
        }
        for st in &self.strata {
            for p in 0..st.index_set.len() {
                let mut face = st.index_set.clone();
                face.remove(p);
                if !face.is_empty() && !seen.contains(&face) {
                    return Err(Error::Inconsistent(format!(
                        "stratum {} is listed but {} is not",
                        label(&st.index_set),
                        label(&face)
                    )));
                }
            }
        }
        for b in &self.restrictions {
            extra_element(&b.from, &b.to).ok_or_else(|| {
                Error::Argument(format!("restriction {} -> {} must add one component", label(&b.from), label(&b.to)))
            })?;
            self.check_shape(b, self.h0_dim(&b.to), "restriction")?;
            if b.matrix.iter().flatten().any(|x| x.abs() > 1) {
                return Err(Error::Argument(format!(
                    "restriction {} -> {} has entries outside {{-1, 0, 1}}",
                    label(&b.from),
                    label(&b.to)
                )));
            }
        }
        for b in &self.gysin {
            extra_element(&b.to, &b.from).ok_or_else(|| {
                Error::Argument(format!("Gysin map {} -> {} must drop one component", label(&b.from), label(&b.to)))
            })?;
            let rows = self.h2_dim(&b.to)?;
            self.check_shape(b, rows, "Gysin map")?;
        }
        Ok(())
    }

    fn check_shape(&self, b: &Block, rows: usize, what: &str) -> Result<()> {
        for set in [&b.from, &b.to] {
            if self.stratum(set).is_none() {
                return Err(Error::Argument(format!("{what} mentions unlisted stratum {}", label(set))));
            }
        }
        let cols = self.h0_dim(&b.from);
        if b.matrix.len() != rows || b.matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::Argument(format!(
                "{what} {} -> {} must be {rows}x{cols}",
                label(&b.from),
                label(&b.to)
            )));
        }
        Ok(())
    }

    fn to_matrix(rows: &[Vec<i64>], cols: usize) -> RatMatrix {
        let entries = rows.iter().flatten().map(|&x| rat(x)).collect();
        RatMatrix::new(rows.len(), cols, entries).expect("shape checked by validate")
    }

    /// The restriction `H^0(Y_from) -> H^0(Y_to)`.
    pub fn restriction(&self, from: &[usize], to: &[usize]) -> Result<RatMatrix> {
        let cols = self.h0_dim(from);
        let rows = self.h0_dim(to);
        if let Some(b) = self.restrictions.iter().find(|b| b.from == from && b.to == to) {
            return Ok(Self::to_matrix(&b.matrix, cols));
        }
        let (_, pos) = extra_element(from, to)
            .ok_or_else(|| Error::Internal(format!("{} is not a facet of {}", label(from), label(to))))?;
        if rows == 1 && cols == 1 {
            return RatMatrix::from_ints(1, 1, &[position_sign(pos)]);
        }
        Err(Error::IncompleteData {
            stratum: self.stratum_name(to),
            detail: format!("no restriction map from {} to a disconnected stratum", self.stratum_name(from)),
        })
    }

    /// The Gysin map `H^0(Y_from) -> H^2(U_to, F)(1)`; zero when the target vanishes.
    pub fn gysin_map(&self, from: &[usize], to: &[usize]) -> Result<RatMatrix> {
        let rows = self.h2_dim(to)?;
        let cols = self.h0_dim(from);
        if let Some(b) = self.gysin.iter().find(|b| b.from == from && b.to == to) {
            return Ok(Self::to_matrix(&b.matrix, cols));
        }
        if rows == 0 {
            return Ok(RatMatrix::zeros(0, cols));
        }
        Err(Error::IncompleteData {
            stratum: self.stratum_name(to),
            detail: format!("no Gysin map from {}", self.stratum_name(from)),
        })
    }

    /// Sorted index sets of all listed strata.
    pub fn index_sets(&self) -> BTreeMap<Vec<usize>, &Stratum> {
        self.strata.iter().map(|s| (s.index_set.clone(), s)).collect()
    }
}
