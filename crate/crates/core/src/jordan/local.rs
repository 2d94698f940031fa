use crate::error::{Error, Result};

/// Cohomology dimensions of a rank-one local system on a punctured compact
/// curve, optionally times a compact factor carrying the constant system.
///
/// The curve has Euler characteristic `base_chi` before removing the
/// punctures; the local monodromy around puncture `i` is `lambda^{a_i}` for
/// `lambda` of order `c`. With all local monodromies trivial this is the
/// constant sheaf; otherwise `H^0 = H^2 = 0` and `H^1` has dimension `-chi`.
pub fn local_system_cohomology_product(
    base_chi: i64,
    puncture_multiplicities: &[u64],
    c: u64,
    compact_factor: Option<&[u64]>,
) -> Result<Vec<u64>> {
    if puncture_multiplicities.is_empty() {
        return Err(Error::Argument("need at least one puncture".into()));
    }
    if c == 0 {
        return Err(Error::Argument("eigenvalue order must be >= 1".into()));
    }
    if base_chi > 2 || base_chi % 2 != 0 {
        return Err(Error::Argument(format!("{base_chi} is not the Euler characteristic of a compact curve")));
    }
    let k = puncture_multiplicities.len() as i64;
    let open_chi = base_chi - k;
    let trivial = puncture_multiplicities.iter().all(|a| a % c == 0);
    let curve: [u64; 3] = if trivial {
        [1, (1 - open_chi) as u64, 0]
    } else {
        // On a punctured sphere the local monodromies multiply to 1.
        let total: u64 = puncture_multiplicities.iter().sum();
        if base_chi == 2 && !total.is_multiple_of(c) {
            return Err(Error::Inconsistent(format!(
                "local monodromies around the punctures of a sphere multiply to a nontrivial root of order dividing {c}"
            )));
        }
        [0, (-open_chi) as u64, 0]
    };
    let factor = compact_factor.unwrap_or(&[1]);
    let mut out = vec![0u64; curve.len() + factor.len() - 1];
    for (p, &x) in curve.iter().enumerate() {
        for (q, &y) in factor.iter().enumerate() {
            out[p + q] += x * y;
        }
    }
    Ok(out)
}
