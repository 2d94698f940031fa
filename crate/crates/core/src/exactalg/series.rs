use num_traits::{One, Zero};

use super::arith::binomial;
use super::rat::{rat, Rat};
use crate::error::{Error, Result};

/// Element of `Q[[T]] / (T^{order+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    /// Builds a series of the given order, padding with zeros and dropping
    /// every coefficient above `order`.
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rat::one()], order)
    }

    /// `(1 + T)^e` truncated at `order`.
    pub fn one_plus_t_pow(e: u64, order: usize) -> Self {
        let coeffs = (0..=order as u64)
            .map(|k| Rat::from_integer(binomial(e, k)))
            .collect();
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `T^k`; zero above the order.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `T`.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self { coeffs }
    }

    /// Truncated Cauchy product. Both operands must share the same order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::Argument(format!(
                "series orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    a.try_mul(b)
}

/// Inverse of `1 + dT`, i.e. `sum_k (-d)^k T^k`.
pub fn series_geom_inverse(d: u64, order: usize) -> Result<TruncSeries> {
    if d == 0 {
        return Err(Error::Argument("geometric inverse needs d >= 1".into()));
    }
    let step = -rat(d as i64);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rat::one();
    for _ in 0..=order {
        coeffs.push(term.clone());
        term *= &step;
    }
    Ok(TruncSeries::new(coeffs, order))
}
