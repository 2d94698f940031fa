use std::collections::BTreeMap;

use num_traits::Zero;

use super::graph::ResolutionGraph;
use crate::error::{Error, Result};
use crate::exactalg::{Rat, RatMatrix};

/// An element of `⊕_{I ∈ J_0(lambda;1,0)} H^0(Y_I)`, one coordinate per
/// connected component of each stratum.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessVector {
    pub coordinates: BTreeMap<Vec<usize>, Vec<Rat>>,
}

impl WitnessVector {
    /// One scalar per connected stratum.
    pub fn from_scalars(pairs: impl IntoIterator<Item = (Vec<usize>, Rat)>) -> Self {
        Self { coordinates: pairs.into_iter().map(|(k, v)| (k, vec![v])).collect() }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Self {
            coordinates: self
                .coordinates
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(|x| x * q).collect()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.values().flatten().all(Zero::is_zero)
    }
}

/// `J(lambda;a,b) = {I ⊂ J(lambda) : |I| - 1 = a, s(I) >= b}` and the subset
/// `J_0` of those `I` with `Y_I` disjoint from every `Y_j`, `j ∉ J(lambda)`.
pub fn strata_sets(g: &ResolutionGraph, a: usize, b: i64) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let jl = g.eigen_set();
    let strata = g.index_sets();
    let j: Vec<Vec<usize>> = strata
        .keys()
        .filter(|set| set.len() == a + 1 && set.iter().all(|i| jl.contains(i)) && g.s_value(set) >= b)
        .cloned()
        .collect();
    let j0 = j
        .iter()
        .filter(|set| {
            (0..g.m()).filter(|i| !jl.contains(i)).all(|out| {
                let mut bigger = (*set).clone();
                bigger.push(out);
                bigger.sort_unstable();
                !strata.contains_key(&bigger)
            })
        })
        .cloned()
        .collect();
    (j, j0)
}

/// Coordinates of the direct sum over `sets`, in order.
fn offsets(sets: &[Vec<usize>], dim: impl Fn(&[usize]) -> Result<usize>) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(sets.len() + 1);
    out.push(0);
    for s in sets {
        let last = *out.last().unwrap();
        out.push(last + dim(s)?);
    }
    Ok(out)
}

/// Block matrix from `⊕_{sources}` to `⊕_{targets}` with blocks from `block`
/// wherever `related(source, target)`.
fn assemble(
    sources: &[Vec<usize>],
    src_off: &[usize],
    targets: &[Vec<usize>],
    tgt_off: &[usize],
    related: impl Fn(&[usize], &[usize]) -> bool,
    block: impl Fn(&[usize], &[usize]) -> Result<RatMatrix>,
) -> Result<RatMatrix> {
    let mut out = RatMatrix::zeros(tgt_off[targets.len()], src_off[sources.len()]);
    for (ti, t) in targets.iter().enumerate() {
        for (si, s) in sources.iter().enumerate() {
            if !related(s, t) {
                continue;
            }
            let b = block(s, t)?;
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.set(tgt_off[ti] + r, src_off[si] + c, b.get(r, c).clone());
                }
            }
        }
    }
    Ok(out)
}

fn is_facet(small: &[usize], big: &[usize]) -> bool {
    big.len() == small.len() + 1 && small.iter().all(|x| big.contains(x))
}

/// The linear maps entering both conditions for a fixed graph.
pub struct WitnessProblem {
    pub domain: Vec<Vec<usize>>,
    domain_off: Vec<usize>,
    /// `u -> (images in ⊕_{J_0(2,1)} H^0, images in ⊕_{J(0,0)} H^2(U_I)(1))`.
    pub differential: RatMatrix,
    /// `u -> its components on ⊕_{J_0(1,1)} H^0`.
    pub projection: RatMatrix,
    /// Restriction `⊕_{J_0(0,0)} H^0 -> ⊕_{J_0(1,1)} H^0`.
    pub obstruction: RatMatrix,
}

impl WitnessProblem {
    pub fn new(g: &ResolutionGraph) -> Result<Self> {
        g.validate()?;
        let h0 = |s: &[usize]| Ok(g.h0_dim(s));
        let (_, domain) = strata_sets(g, 1, 0);
        let (_, triples) = strata_sets(g, 2, 1);
        let (singles, _) = strata_sets(g, 0, 0);
        let (_, singles0) = strata_sets(g, 0, 0);
        let (_, pairs11) = strata_sets(g, 1, 1);

        let domain_off = offsets(&domain, h0)?;
        let triple_off = offsets(&triples, h0)?;
        let h2_off = offsets(&singles, |s| g.h2_dim(s))?;
        let singles0_off = offsets(&singles0, h0)?;
        let pairs11_off = offsets(&pairs11, h0)?;

        let cech = assemble(&domain, &domain_off, &triples, &triple_off, is_facet, |s, t| g.restriction(s, t))?;
        let gysin = assemble(&domain, &domain_off, &singles, &h2_off, |s, t| is_facet(t, s), |s, t| g.gysin_map(s, t))?;
        let differential = RatMatrix::vstack(&[cech, gysin], domain_off[domain.len()])?;
        let projection = assemble(&domain, &domain_off, &pairs11, &pairs11_off, |s, t| s == t, |s, _| {
            Ok(RatMatrix::identity(g.h0_dim(s)))
        })?;
        let obstruction =
            assemble(&singles0, &singles0_off, &pairs11, &pairs11_off, is_facet, |s, t| g.restriction(s, t))?;
        Ok(Self { domain, domain_off, differential, projection, obstruction })
    }

    pub fn flatten(&self, u: &WitnessVector) -> Result<Vec<Rat>> {
        if let Some(k) = u.coordinates.keys().find(|k| !self.domain.contains(k)) {
            return Err(Error::Argument(format!("witness has a coordinate on {k:?}, outside J_0(lambda;1,0)")));
        }
        let mut out = vec![Rat::zero(); self.domain_off[self.domain.len()]];
        for (i, set) in self.domain.iter().enumerate() {
            let width = self.domain_off[i + 1] - self.domain_off[i];
            if let Some(v) = u.coordinates.get(set) {
                if v.len() != width {
                    return Err(Error::Argument(format!(
                        "witness coordinate on {set:?} needs {width} entries, got {}",
                        v.len()
                    )));
                }
                out[self.domain_off[i]..self.domain_off[i + 1]].clone_from_slice(v);
            }
        }
        Ok(out)
    }

    pub fn unflatten(&self, v: &[Rat]) -> WitnessVector {
        let coordinates = self
            .domain
            .iter()
            .enumerate()
            .map(|(i, set)| (set.clone(), v[self.domain_off[i]..self.domain_off[i + 1]].to_vec()))
            .collect();
        WitnessVector { coordinates }
    }

    pub fn condition_one(&self, v: &[Rat]) -> Result<bool> {
        Ok(self.differential.apply(v)?.iter().all(Zero::is_zero))
    }

    pub fn condition_two(&self, v: &[Rat]) -> Result<bool> {
        let p = self.projection.apply(v)?;
        Ok(!self.obstruction.column_space_contains(&p)?)
    }
}

/// `u` is killed by `d_1`: its images in `⊕_{J_0(2,1)} H^0(Y_I)` and in
/// `⊕_{J(0,0)} H^2(U_I, F_I)(1)` vanish.
pub fn check_condition_one(g: &ResolutionGraph, u: &WitnessVector) -> Result<bool> {
    let p = WitnessProblem::new(g)?;
    p.condition_one(&p.flatten(u)?)
}

/// The image of `u` in `⊕_{J_0(1,1)} H^0(Y_I)` lies outside the image of
/// `⊕_{J_0(0,0)} H^0(Y_I)`.
pub fn check_condition_two(g: &ResolutionGraph, u: &WitnessVector) -> Result<bool> {
    let p = WitnessProblem::new(g)?;
    p.condition_two(&p.flatten(u)?)
}

/// First kernel basis vector of the condition-one map passing condition two,
/// scaled so that its first nonzero coordinate is 1.
///
/// If every basis vector fails condition two, the whole kernel does, since
/// the failing vectors form a subspace.
pub fn find_witness(g: &ResolutionGraph) -> Result<Option<WitnessVector>> {
    let p = WitnessProblem::new(g)?;
    for v in p.differential.nullspace() {
        if p.condition_two(&v)? {
            let lead = v.iter().find(|x| !x.is_zero()).expect("kernel basis vectors are nonzero").clone();
            let v: Vec<Rat> = v.iter().map(|x| x / &lead).collect();
            return Ok(Some(p.unflatten(&v)));
        }
    }
    Ok(None)
}
