use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chern_euler::{chi_open_series, DegreeProfile};
use crate::error::{Error, Result};
use crate::exactalg::gcd_list;

/// A cone-type singularity: one blow-up resolves it and the exceptional
/// divisor meets the proper transforms of the components transversally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ConeSingularityInput {
    /// Cone over a divisor of degrees `d_j` in a smooth projective space.
    Smooth {
        n: usize,
        multiplicities: Vec<u64>,
        degrees: Vec<u64>,
    },
    /// Invariants supplied directly, for a possibly singular base.
    Explicit {
        n: usize,
        e: u64,
        d: u64,
        chi_u: i64,
        m: usize,
    },
}

/// Resolved invariants of a cone-type singularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeInvariants {
    pub n: usize,
    pub m: usize,
    /// `sum a_j d_j`, the multiplicity along the exceptional divisor.
    pub e: u64,
    /// `gcd(a_j)`.
    pub d: u64,
    /// Euler characteristic of the complement of the divisor.
    pub chi_u: BigInt,
}

impl ConeSingularityInput {
    pub fn n(&self) -> usize {
        match self {
            Self::Smooth { n, .. } | Self::Explicit { n, .. } => *n,
        }
    }

    pub fn resolve(&self) -> Result<ConeInvariants> {
        match self {
            Self::Smooth { n, multiplicities, degrees } => {
                if multiplicities.len() != degrees.len() {
                    return Err(Error::Argument(format!(
                        "{} multiplicities but {} degrees",
                        multiplicities.len(),
                        degrees.len()
                    )));
                }
                check_multiplicities(multiplicities)?;
                let profile = DegreeProfile::new(*n, degrees.clone())?;
                let e = multiplicities
                    .iter()
                    .zip(degrees)
                    .try_fold(0u64, |acc, (a, d)| a.checked_mul(*d).and_then(|x| acc.checked_add(x)))
                    .ok_or_else(|| Error::Argument("e = sum a_j d_j overflows u64".into()))?;
                Ok(ConeInvariants {
                    n: *n,
                    m: multiplicities.len(),
                    e,
                    d: gcd_list(multiplicities),
                    chi_u: chi_open_series(&profile)?,
                })
            }
            Self::Explicit { n, e, d, chi_u, m } => {
                if *n == 0 || *m == 0 {
                    return Err(Error::Argument("n and m must be >= 1".into()));
                }
                if *e == 0 || *d == 0 {
                    return Err(Error::Argument("e and d must be >= 1".into()));
                }
                if e % d != 0 {
                    return Err(Error::Argument(format!("d = {d} does not divide e = {e}")));
                }
                Ok(ConeInvariants { n: *n, m: *m, e: *e, d: *d, chi_u: BigInt::from(*chi_u) })
            }
        }
    }
}

/// Multiplicities of the components of a divisor with normal crossings
/// outside the singular point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncLinkInput {
    pub n: usize,
    pub multiplicities: Vec<u64>,
    /// Whether every stratum `Y_I` is a rational homology manifold.
    #[serde(default)]
    pub rhm: bool,
}

impl SncLinkInput {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Argument(format!("n must be >= 2, got {}", self.n)));
        }
        check_multiplicities(&self.multiplicities)
    }

    pub fn m(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn d(&self) -> u64 {
        gcd_list(&self.multiplicities)
    }
}

fn check_multiplicities(a: &[u64]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::Argument("need at least one component".into()));
    }
    if a.contains(&0) {
        return Err(Error::Argument("multiplicities must be >= 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_resolution() {
        let inv = ConeSingularityInput::Smooth { n: 2, multiplicities: vec![2, 3], degrees: vec![1, 1] }
            .resolve()
            .unwrap();
        assert_eq!((inv.e, inv.d, inv.m), (5, 1, 2));
        assert_eq!(inv.chi_u, BigInt::from(0));
    }

    #[test]
    fn rejects_bad_inputs() {
        let mismatch = ConeSingularityInput::Smooth { n: 2, multiplicities: vec![1], degrees: vec![1, 1] };
        assert!(mismatch.resolve().is_err());
        let zero = ConeSingularityInput::Smooth { n: 2, multiplicities: vec![0], degrees: vec![1] };
        assert!(zero.resolve().is_err());
        let nodiv = ConeSingularityInput::Explicit { n: 2, e: 5, d: 2, chi_u: 1, m: 2 };
        assert!(matches!(nodiv.resolve(), Err(Error::Argument(_))));
        assert!(SncLinkInput { n: 1, multiplicities: vec![1], rhm: false }.validate().is_err());
        assert!(SncLinkInput { n: 2, multiplicities: vec![], rhm: false }.validate().is_err());
    }

    #[test]
    fn serde_shape() {
        let s = r#"{"kind":"explicit","n":3,"e":6,"d":2,"chi_u":-4,"m":3}"#;
        let c: ConeSingularityInput = serde_json::from_str(s).unwrap();
        assert_eq!(c, ConeSingularityInput::Explicit { n: 3, e: 6, d: 2, chi_u: -4, m: 3 });
        let l: SncLinkInput = serde_json::from_str(r#"{"n":3,"multiplicities":[1,1,1]}"#).unwrap();
        assert!(!l.rhm);
    }
}
