//! Property tests of identities that hold across modules.

use proptest::prelude::*;
use subreg::geometry::{self, SectionAtom, SectionFormula};
use subreg::induction::WeightMultiset;
use subreg::rootdata::{build_root_datum, Coweight, Series, Weight};
use subreg::subregular::{classify, enumerate_subregular};
use subreg::weyl::{self, WeylWord};

fn small_types() -> Vec<(Series, usize)> {
    Series::all_types(6)
}

#[test]
fn classify_recovers_every_class() {
    for (s, l) in Series::all_types(8) {
        let rd = build_root_datum(s, l).unwrap();
        for c in enumerate_subregular(&rd).unwrap() {
            let back = classify(&rd, &c.tp, &c.mu)
                .unwrap()
                .expect("class is recognised");
            assert_eq!((back.tag, back.alpha_i), (c.tag, c.alpha_i));
        }
    }
}

#[test]
fn theta_prime_sections_are_sums_of_roots_or_zero() {
    for (s, l) in Series::all_types(8) {
        let rd = build_root_datum(s, l).unwrap();
        for c in enumerate_subregular(&rd).unwrap() {
            if c.alpha_j.is_none() || c.tag == subreg::subregular::SeriesTag::A {
                continue;
            }
            for f in geometry::theta_prime_sections(&c).unwrap() {
                let w = f.as_weight(&rd);
                let coeffs = rd.weight_root_coords(&w);
                assert!(
                    coeffs
                        .iter()
                        .all(|x| x.is_integer() && *x >= subreg::rational::q(0)),
                    "{}",
                    c.describe()
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn canonical_multiplicity_is_affine(which in 0usize..26, a in proptest::collection::vec(0i64..4, 6), b in proptest::collection::vec(0i64..4, 6)) {
        let types = small_types();
        let (s, l) = types[which % types.len()];
        let rd = build_root_datum(s, l).unwrap();
        let (a, b) = (&a[..l], &b[..l]);
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let m = |v: &[i64]| geometry::canonical_multiplicity(&rd, &Coweight::from_ints(v)).unwrap();
        prop_assert_eq!(m(&sum), m(a) + m(b) + 2);
    }

    #[test]
    fn simple_coroots_have_multiplicity_minus_one(which in 0usize..26, k in 1usize..=6) {
        let types = small_types();
        let (s, l) = types[which % types.len()];
        let rd = build_root_datum(s, l).unwrap();
        let k = 1 + (k - 1) % l;
        prop_assert_eq!(geometry::canonical_multiplicity(&rd, &rd.simple_coroot(k)).unwrap(), -1);
    }

    #[test]
    fn coroot_action_matches_coweight_action(which in 0usize..26, letters in proptest::collection::vec(1usize..=6, 0..10), c in proptest::collection::vec(-3i64..=3, 6)) {
        let types = small_types();
        let (s, l) = types[which % types.len()];
        let rd = build_root_datum(s, l).unwrap();
        let w = WeylWord::new(letters.into_iter().map(|k| 1 + (k - 1) % l).collect());
        let c = &c[..l];
        let via_ints = weyl::act_on_coroot_coeffs(&rd, &w, c);
        let via_coweight = weyl::act_on_coweight(&rd, &w, &Coweight::from_ints(c)).unwrap();
        prop_assert_eq!(Coweight::from_ints(&via_ints), via_coweight);
    }

    #[test]
    fn section_formulas_are_linear(terms in proptest::collection::vec((-3i64..=3, 1usize..=8, any::<bool>()), 0..8)) {
        let rd = build_root_datum(Series::E, 8).unwrap();
        let atom = |k: usize, varpi: bool| if varpi { SectionAtom::Varpi(k) } else { SectionAtom::Alpha(k) };
        let f = SectionFormula::new(terms.iter().map(|&(c, k, v)| (c, atom(k, v))));
        let mut direct = Weight::zero(8);
        for &(c, k, v) in &terms {
            let one = SectionFormula::new([(1, atom(k, v))]).as_weight(&rd);
            direct = &direct + &(c * &one);
        }
        prop_assert_eq!(f.as_weight(&rd), direct);
        let id: Vec<usize> = (1..=8).collect();
        prop_assert_eq!(f.relabel(&id), f.clone());
        prop_assert_eq!(f.is_zero(), f.terms.is_empty());
    }

    #[test]
    fn multiset_scaling(pairs in proptest::collection::vec((1i64..7, 1u64..4), 0..6), d in 1i64..4) {
        let m = WeightMultiset::scalar(pairs.iter().copied());
        let scaled = m.scaled(&[d]);
        prop_assert_eq!(scaled.total(), m.total());
        prop_assert_eq!(scaled.divisible_by(d), scaled.clone());
        prop_assert_eq!(m.divisible_by(1), m.clone());
        let weighted: i64 = m.weighted_sum()[0] * d;
        prop_assert_eq!(scaled.weighted_sum()[0], weighted);
    }
}
