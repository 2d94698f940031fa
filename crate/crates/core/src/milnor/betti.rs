use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::input::{ConeInvariants, ConeSingularityInput, SncLinkInput};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, divisors, euler_phi, gen_binomial};

/// All primitive `c`-th roots of unity. Betti numbers depend on an
/// eigenvalue only through its order, so one class stands for `phi(c)` roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EigenvalueClass {
    order: u64,
}

impl EigenvalueClass {
    pub fn new(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::Argument("eigenvalue order must be >= 1".into()));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn count(&self) -> u64 {
        euler_phi(self.order)
    }

    /// `lambda^k = 1` for every `lambda` in the class.
    pub fn divides(&self, k: u64) -> bool {
        k.is_multiple_of(self.order)
    }
}

/// `J(lambda) = {j : lambda^{a_j} = 1}` as 0-based component indices.
pub fn classify_eigenvalue(c: EigenvalueClass, multiplicities: &[u64]) -> BTreeSet<usize> {
    multiplicities
        .iter()
        .enumerate()
        .filter(|(_, &a)| c.divides(a))
        .map(|(i, _)| i)
        .collect()
}

/// Row label of a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassKey {
    /// A single eigenvalue class.
    Order(u64),
    /// Every class whose order does not divide the given integer.
    NonDivisorsOf(u64),
}

impl ClassKey {
    pub fn contains(&self, c: u64) -> bool {
        match *self {
            ClassKey::Order(o) => o == c,
            ClassKey::NonDivisorsOf(d) => d % c != 0,
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKey::Order(c) => write!(f, "c={c}"),
            ClassKey::NonDivisorsOf(d) => write!(f, "c∤{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rank {
    Exact(BigInt),
    Interval { lo: BigInt, hi: BigInt },
    Undetermined,
}

impl Rank {
    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            Rank::Exact(r) => Some(r),
            _ => None,
        }
    }

    /// Whether `r` is compatible with this entry.
    pub fn admits(&self, r: &BigInt) -> bool {
        match self {
            Rank::Exact(x) => x == r,
            Rank::Interval { lo, hi } => lo <= r && r <= hi,
            Rank::Undetermined => true,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Exact(r) => write!(f, "{r}"),
            Rank::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            Rank::Undetermined => write!(f, "undetermined"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiCell {
    pub rank: Rank,
    /// `Some(j)` when the eigenspace is asserted pure of Hodge type `(j, j)`.
    pub hodge_type: Option<usize>,
    pub semisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiRow {
    pub class: ClassKey,
    /// Indexed by degree `0..=n`.
    pub cells: Vec<BettiCell>,
}

/// Which computation produced a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableSource {
    Cone(ConeInvariants),
    SncLink { m: usize, d: u64, rhm: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub rows: Vec<BettiRow>,
    pub source: TableSource,
}

impl BettiTable {
    /// The rank of `H^j(F_x)_lambda` for `lambda` of order `c`. Classes not
    /// listed in a cone table carry no cohomology.
    pub fn rank(&self, c: u64, j: usize) -> Rank {
        if j > self.n {
            return Rank::Exact(BigInt::zero());
        }
        match self.rows.iter().find(|r| r.class.contains(c)) {
            Some(row) => row.cells[j].rank.clone(),
            None => Rank::Exact(BigInt::zero()),
        }
    }

    pub fn row(&self, key: ClassKey) -> Option<&BettiRow> {
        self.rows.iter().find(|r| r.class == key)
    }

    pub fn is_exact(&self) -> bool {
        self.rows.iter().all(|r| r.cells.iter().all(|c| c.rank.exact().is_some()))
    }

    pub fn cone_invariants(&self) -> Option<&ConeInvariants> {
        match &self.source {
            TableSource::Cone(inv) => Some(inv),
            TableSource::SncLink { .. } => None,
        }
    }
}

/// Betti numbers of the Milnor fiber of a cone-type singularity, one row per
/// divisor `c` of `e`.
pub fn betti_table_thm03(input: &ConeSingularityInput) -> Result<BettiTable> {
    let inv = input.resolve()?;
    let n = inv.n;
    let m = inv.m as i64;
    let sign: BigInt = if n % 2 == 0 { 1.into() } else { (-1).into() };
    let top_generic = &sign * &inv.chi_u;
    let top_unipotent_like = &top_generic + gen_binomial(m - 2, n as u64 - 1);
    let mut rows = Vec::new();
    for c in divisors(inv.e) {
        let divides_d = inv.d % c == 0;
        let mut cells = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let rank = match (j < n, divides_d) {
                (true, true) => gen_binomial(m - 1, j as u64),
                (true, false) => BigInt::zero(),
                (false, true) => top_unipotent_like.clone(),
                (false, false) => top_generic.clone(),
            };
            if rank.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "rank of H^{j} for order {c} would be {rank}; chi(U) = {} cannot occur with e = {}, d = {}, m = {}",
                    inv.chi_u, inv.e, inv.d, inv.m
                )));
            }
            cells.push(BettiCell {
                rank: Rank::Exact(rank),
                hodge_type: (j < n).then_some(j),
                semisimple: true,
            });
        }
        rows.push(BettiRow { class: ClassKey::Order(c), cells });
    }
    Ok(BettiTable { n, rows, source: TableSource::Cone(inv) })
}

/// Ranks and bounds in low degrees for a divisor with normal crossings
/// outside the singular point. Degrees above `n - 2 + delta` are left
/// undetermined, where `delta = 1` only for the eigenvalue 1.
pub fn betti_bounds_thm02(input: &SncLinkInput) -> Result<BettiTable> {
    input.validate()?;
    let n = input.n;
    let m = input.m() as u64;
    let d = input.d();
    let mut keys: Vec<ClassKey> = divisors(d).into_iter().map(ClassKey::Order).collect();
    keys.push(ClassKey::NonDivisorsOf(d));
    let rows = keys
        .into_iter()
        .map(|class| {
            let (divides_d, delta) = match class {
                ClassKey::Order(c) => (true, usize::from(c == 1)),
                ClassKey::NonDivisorsOf(_) => (false, 0),
            };
            let top = n - 2 + delta;
            let cells = (0..=n)
                .map(|j| {
                    let covered = j <= top;
                    let rank = if !covered {
                        Rank::Undetermined
                    } else if !divides_d {
                        Rank::Exact(BigInt::zero())
                    } else if j < top || input.rhm {
                        Rank::Exact(binomial(m - 1, j as u64))
                    } else {
                        Rank::Interval { lo: BigInt::zero(), hi: binomial(m - 1, j as u64) }
                    };
                    BettiCell {
                        rank,
                        hodge_type: covered.then_some(j),
                        semisimple: covered,
                    }
                })
                .collect();
            BettiRow { class, cells }
        })
        .collect();
    Ok(BettiTable { n, rows, source: TableSource::SncLink { m: input.m(), d, rhm: input.rhm } })
}

/// `chi_lambda(F_x) = sum_j (-1)^j b_lambda^j` for `lambda` of order `c`.
pub fn chi_lambda(table: &BettiTable, c: EigenvalueClass) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for j in 0..=table.n {
        let rank = table.rank(c.order(), j);
        let r = rank.exact().ok_or_else(|| {
            Error::Unsupported(format!("rank of H^{j} for order {} is not exact", c.order()))
        })?;
        if j % 2 == 0 {
            total += r;
        } else {
            total -= r;
        }
    }
    Ok(total)
}
