//! Resolution data of `f = (y^2 - x^4)(x^2 - y^4)` on the cone
//! `xw - yz = 0`, the standard example of non-semisimple monodromy on
//! `H^1` of a Milnor fiber with normal crossings outside the origin.
//!
//! Components, in order: `E0` (proper transform of the blown-up zero
//! section), `E1`, `E2` (blow-ups of `Z'_1`, `Z'_2`), `E3`, `E4` (over the
//! points `C_1`, `C_2`), `V` (the remaining even-multiplicity component
//! over `u0 = 0`) and the four reduced components `R1±`, `R2±`. The first
//! three lie over the origin.
//!
//! `H^2(E0)` uses the basis `(F_u, F_v, C_1, C_2)`: the two rulings of
//! `P^1 x P^1` and the two blow-up curves.

use super::graph::{Block, Component, ResolutionGraph, Stratum};
use super::local::local_system_cohomology_product;
use crate::error::{Error, Result};

const NAMES: [&str; 10] = ["E0", "E1", "E2", "E3", "E4", "V", "R1+", "R1-", "R2+", "R2-"];
const MULTIPLICITIES: [u64; 10] = [4, 6, 6, 6, 6, 4, 1, 1, 1, 1];

const PAIRS: [(&[usize], Option<&str>); 17] = [
    (&[0, 1], Some("Z'1")),
    (&[0, 2], Some("Z'2")),
    (&[0, 3], Some("C'1")),
    (&[0, 4], Some("C'2")),
    (&[0, 5], Some("W''")),
    (&[1, 3], None),
    (&[1, 6], None),
    (&[1, 7], None),
    (&[2, 4], None),
    (&[2, 8], None),
    (&[2, 9], None),
    (&[3, 5], None),
    (&[3, 6], None),
    (&[3, 7], None),
    (&[4, 5], None),
    (&[4, 8], None),
    (&[4, 9], None),
];

const TRIPLES: [&[usize]; 8] = [
    &[0, 1, 3],
    &[0, 2, 4],
    &[0, 3, 5],
    &[0, 4, 5],
    &[1, 3, 6],
    &[1, 3, 7],
    &[2, 4, 8],
    &[2, 4, 9],
];

/// Classes of the curves `E0 ∩ Y_j` in `H^2(E0)`, times the sign of
/// dropping `j` from `{0, j}`.
const E0_GYSIN: [(usize, [i64; 4]); 5] = [
    (1, [0, -1, 1, 0]),
    (2, [0, -1, 0, 1]),
    (3, [0, 0, -1, 0]),
    (4, [0, 0, 0, -1]),
    (5, [-1, 0, 1, 1]),
];

const E0_COHOMOLOGY: [u64; 5] = [1, 0, 4, 0, 1];
const RULING_BETTI: [u64; 3] = [1, 0, 1];

fn graph_with(multiplicities: [u64; 10], target_order: u64) -> ResolutionGraph {
    let components = NAMES
        .iter()
        .zip(multiplicities)
        .enumerate()
        .map(|(i, (name, multiplicity))| Component {
            name: (*name).into(),
            multiplicity,
            exceptional: i < 3,
        })
        .collect();
    let stratum = |set: &[usize], name: Option<&str>| Stratum {
        index_set: set.to_vec(),
        name: name.map(Into::into),
        connected_components: 1,
        cohomology: None,
    };
    let mut strata: Vec<Stratum> = (0..10).map(|i| stratum(&[i], None)).collect();
    strata.extend(PAIRS.iter().map(|(set, name)| stratum(set, *name)));
    strata.extend(TRIPLES.iter().map(|set| stratum(set, None)));
    ResolutionGraph { components, strata, restrictions: vec![], gysin: vec![], target_order }
}

fn column(from: Vec<usize>, to: Vec<usize>, entries: &[i64]) -> Block {
    Block { from, to, matrix: entries.iter().map(|&x| vec![x]).collect() }
}

/// The example with eigenvalue order `c = 2` (the eigenvalue `-1`) or `c = 1`.
pub fn a3_graph(target_order: u64) -> Result<ResolutionGraph> {
    let mut g = graph_with(MULTIPLICITIES, target_order);
    g.strata[0].cohomology = Some(E0_COHOMOLOGY.to_vec());
    g.gysin = E0_GYSIN.iter().map(|(j, v)| column(vec![0, *j], vec![0], v)).collect();
    match target_order {
        2 => {
            // E_i minus the two reduced sections is Z'_i times a twice
            // punctured line with monodromy -1 around both punctures.
            let dims = local_system_cohomology_product(2, &[1, 1], 2, Some(&RULING_BETTI))?;
            g.strata[1].cohomology = Some(dims.clone());
            g.strata[2].cohomology = Some(dims);
        }
        1 => {
            // E_i is a trivial P^1-bundle over Z'_i; H^2 has basis (section, fiber).
            for (e, c, r) in [(1usize, 3usize, 6usize), (2, 4, 8)] {
                g.strata[e].cohomology = Some(vec![1, 0, 2, 0, 1]);
                g.gysin.push(column(vec![0, e], vec![e], &[1, 0]));
                g.gysin.push(column(vec![e, c], vec![e], &[0, -1]));
                g.gysin.push(column(vec![e, r], vec![e], &[-1, 0]));
                g.gysin.push(column(vec![e, r + 1], vec![e], &[-1, 0]));
            }
        }
        c => {
            return Err(Error::Unsupported(format!(
                "the bundled example carries cohomology data only for orders 1 and 2, not {c}"
            )))
        }
    }
    Ok(g)
}

/// The same configuration with every multiplicity equal to 1, so that no
/// component carries the eigenvalue of order `target_order > 1`.
pub fn a3_multiplicity_one_graph(target_order: u64) -> ResolutionGraph {
    graph_with([1; 10], target_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::jordan::{check_condition_one, check_condition_two, find_witness, strata_sets, WitnessVector};

    fn paper_u() -> WitnessVector {
        WitnessVector::from_scalars([
            (vec![0, 1], rat(1)),
            (vec![0, 3], rat(1)),
            (vec![0, 2], rat(-1)),
            (vec![0, 4], rat(-1)),
        ])
    }

    #[test]
    fn fixture_validates() {
        for c in [1, 2] {
            a3_graph(c).unwrap().validate().unwrap();
        }
        a3_multiplicity_one_graph(2).validate().unwrap();
        assert!(matches!(a3_graph(3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn strata_sets_order_two() {
        let g = a3_graph(2).unwrap();
        let (j, j0) = strata_sets(&g, 1, 0);
        assert_eq!(j0, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4], vec![0, 5]]);
        assert!(j.contains(&vec![1, 3]) && !j0.contains(&vec![1, 3]));
        assert!(!j.iter().any(|s| s.iter().any(|&i| i >= 6)));
        assert_eq!(strata_sets(&g, 2, 1).1, vec![vec![0, 1, 3], vec![0, 2, 4]]);
        assert_eq!(strata_sets(&g, 0, 0).0, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(strata_sets(&g, 0, 0).1, vec![vec![0]]);
        assert_eq!(strata_sets(&g, 1, 1).1, vec![vec![0, 1], vec![0, 2]]);
        assert!(strata_sets(&g, 1, 5).0.is_empty());
    }

    #[test]
    fn all_divisible_means_no_exclusion() {
        let g = a3_graph(1).unwrap();
        for a in 0..3 {
            for b in -1..3 {
                let (j, j0) = strata_sets(&g, a, b);
                assert_eq!(j, j0);
            }
        }
    }

    #[test]
    fn paper_witness_passes() {
        let g = a3_graph(2).unwrap();
        let u = paper_u();
        assert!(check_condition_one(&g, &u).unwrap());
        assert!(check_condition_two(&g, &u).unwrap());
        assert!(check_condition_one(&g, &u.scale(&rat(-3))).unwrap());
        assert!(check_condition_two(&g, &u.scale(&rat(-3))).unwrap());
    }

    #[test]
    fn partial_witness_fails_condition_one() {
        let g = a3_graph(2).unwrap();
        let u = WitnessVector::from_scalars([(vec![0, 1], rat(1))]);
        assert!(!check_condition_one(&g, &u).unwrap());
    }

    #[test]
    fn trivial_vectors() {
        let g = a3_graph(2).unwrap();
        assert!(check_condition_one(&g, &WitnessVector::default()).unwrap());
        assert!(!check_condition_two(&g, &WitnessVector::default()).unwrap());
        // the restriction of 1 on E0 lies in the obstruction image by construction
        let image = WitnessVector::from_scalars([(vec![0, 1], rat(-1)), (vec![0, 2], rat(-1))]);
        assert!(!check_condition_two(&g, &image).unwrap());
    }

    #[test]
    fn found_witness_spans_paper_u() {
        let g = a3_graph(2).unwrap();
        let w = find_witness(&g).unwrap().unwrap();
        assert!(check_condition_one(&g, &w).unwrap());
        assert!(check_condition_two(&g, &w).unwrap());
        // the kernel is one-dimensional and the witness is normalized, so it is u
        for (k, v) in &w.coordinates {
            let expected = paper_u().coordinates.get(k).map_or(rat(0), |x| x[0].clone());
            assert_eq!(v, &vec![expected], "{k:?}");
        }
    }

    #[test]
    fn no_witness_for_unipotent_or_reduced() {
        assert_eq!(find_witness(&a3_graph(1).unwrap()).unwrap(), None);
        let g = a3_graph(1).unwrap();
        let p = crate::jordan::WitnessProblem::new(&g).unwrap();
        for v in p.differential.nullspace() {
            assert!(!p.condition_two(&v).unwrap());
        }
        assert_eq!(find_witness(&a3_multiplicity_one_graph(2)).unwrap(), None);
        assert!(strata_sets(&a3_multiplicity_one_graph(2), 0, 0).0.is_empty());
    }

    #[test]
    fn missing_cohomology_names_stratum() {
        let mut g = a3_graph(2).unwrap();
        g.strata[1].cohomology = None;
        match find_witness(&g) {
            Err(Error::IncompleteData { stratum, .. }) => assert_eq!(stratum, "E1"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
