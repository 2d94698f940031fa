//! Cross-module identities between Euler characteristics, Betti tables,
//! characteristic polynomials and E1 pages.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use snc_milnor::chern_euler::{chi_open_closed_form, chi_open_inclusion_exclusion, chi_open_series, DegreeProfile};
use snc_milnor::exactalg::{divisors, euler_phi, gen_binomial};
use snc_milnor::koszul::shifted_twisted_sum;
use snc_milnor::milnor::{
    betti_table_thm03, char_poly_per_degree, chi_lambda, zeta_function, ConeSingularityInput, CycloProduct,
    EigenvalueClass, Rank,
};
use snc_milnor::spectral::{betti_bounds_from_e1, cone_e1_page};

fn smooth(n: usize, a: Vec<u64>, d: Vec<u64>) -> ConeSingularityInput {
    ConeSingularityInput::Smooth { n, multiplicities: a, degrees: d }
}

#[test]
fn generic_arrangement_euler() {
    for n in 1..=6usize {
        for m in 2..=10usize {
            let p = DegreeProfile::new(n, vec![1; m]).unwrap();
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(chi_open_series(&p).unwrap(), gen_binomial(m as i64 - 2, n as u64) * sign);
        }
    }
}

#[test]
fn three_routes_agree_on_distinct_degrees() {
    for n in 1..=4usize {
        for degrees in [vec![1, 2], vec![2, 3, 5], vec![1, 3, 4, 5]] {
            let p = DegreeProfile::new(n, degrees).unwrap();
            let s = chi_open_series(&p).unwrap();
            assert_eq!(s, chi_open_inclusion_exclusion(&p).unwrap());
            assert_eq!(num_rational::BigRational::from_integer(s), chi_open_closed_form(&p).unwrap());
        }
    }
}

#[test]
fn milnor_number_of_homogeneous_polynomial() {
    for d in 1..=8u64 {
        for n in 1..=6usize {
            let t = betti_table_thm03(&smooth(n, vec![1], vec![d])).unwrap();
            let total: BigInt = divisors(d)
                .into_iter()
                .map(|c| t.rank(c, n).exact().unwrap() * BigInt::from(euler_phi(c)))
                .sum();
            let expected = num_traits::pow(BigInt::from(d as i64 - 1), n + 1);
            assert_eq!(total, expected, "d={d} n={n}");
        }
    }
}

#[test]
fn e1_bounds_dominate_unipotent_column() {
    for m in 1..=8usize {
        for n in 1..=6usize {
            let t = betti_table_thm03(&smooth(n, vec![1; m], vec![1; m]));
            let Ok(t) = t else { continue };
            let bounds = betti_bounds_from_e1(&cone_e1_page(m, n, n - 1).unwrap());
            for j in 0..n {
                let b = t.rank(1, j).exact().unwrap().clone();
                assert!(b <= BigInt::from(bounds.get(&(j as i64)).copied().unwrap_or(0)), "m={m} n={n} j={j}");
            }
        }
    }
}

#[test]
fn shifted_sum_matches_unipotent_column() {
    for m in 1..=6usize {
        for n in 1..=5usize {
            let Ok(t) = betti_table_thm03(&smooth(n, vec![1; m], vec![1; m])) else { continue };
            let s = shifted_twisted_sum(m, n).unwrap();
            for j in 0..n {
                assert_eq!(Rank::Exact(s.cohomology_in(j as i64).unwrap().into()), t.rank(1, j));
            }
        }
    }
}

fn cone_input() -> impl Strategy<Value = ConeSingularityInput> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(n, m)| {
        (Just(n), prop::collection::vec(1u64..=6, m), prop::collection::vec(1u64..=5, m))
            .prop_map(|(n, a, d)| smooth(n, a, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeta_and_chi_lambda(input in cone_input()) {
        let Ok(t) = betti_table_thm03(&input) else { return Ok(()) };
        let inv = t.cone_invariants().unwrap().clone();
        let zeta = zeta_function(&t).unwrap();
        prop_assert_eq!(zeta, CycloProduct::factor(inv.e, -inv.chi_u.clone()).unwrap());
        for c in 1..=inv.e + 3 {
            let chi = chi_lambda(&t, EigenvalueClass::new(c).unwrap()).unwrap();
            if inv.e % c == 0 {
                prop_assert_eq!(&chi, &inv.chi_u);
            } else {
                prop_assert!(chi.is_zero());
            }
        }
        for p in char_poly_per_degree(&t).unwrap() {
            prop_assert!(p.root_multiplicities().values().all(|v| !v.is_negative()));
        }
    }

    #[test]
    fn ranks_nonnegative(input in cone_input()) {
        if let Ok(t) = betti_table_thm03(&input) {
            for row in &t.rows {
                for cell in &row.cells {
                    prop_assert!(!cell.rank.exact().unwrap().is_negative());
                    prop_assert!(cell.semisimple);
                }
            }
        }
    }
}

#[test]
fn degree_one_unipotent_euler_is_one() {
    // a single hyperplane: U is affine space, chi = 1 and F_x is contractible
    for n in 1..=6usize {
        let t = betti_table_thm03(&smooth(n, vec![1], vec![1])).unwrap();
        assert!(chi_lambda(&t, EigenvalueClass::new(1).unwrap()).unwrap().is_one());
    }
}
