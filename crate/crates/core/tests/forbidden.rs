mod common;

use common::{all_matrices, random_matrix, walks_up_to};
use peo_core::forbidden::{default_max_len, find_self_contained_walk_bruteforce};
use peo_core::ordering::is_simplicial;
use peo_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn walk(labels: &[usize]) -> Walk {
    Walk::from_one_based(labels).unwrap()
}

#[test]
fn no_simplicial_fixture_yields_forbidden_pair() {
    let a = fixtures::no_simplicial_5();
    let cert = extract_certificate(&a).unwrap();
    assert!(!cert.is_ordering());
    cert.validate(&a).unwrap();
}

#[test]
fn pair_only_fixture_yields_forbidden_pair() {
    let a = fixtures::six_pair_only();
    let cert = extract_certificate(&a).unwrap();
    let Certificate::Forbidden(w1, w2) = &cert else { panic!("expected a forbidden pair, got {cert}") };
    assert!(is_weighted_chordless(&a, w1).unwrap().holds());
    assert!(is_weighted_chordless(&a, w2).unwrap().holds());
    assert!(is_self_contained(&WalkFamily::new(vec![w1.clone(), w2.clone()]).unwrap()));
    // the published pair
    let fam = WalkFamily::new(vec![walk(&[6, 2, 1, 3, 6]), walk(&[1, 4, 6, 5, 1])]).unwrap();
    assert!(is_self_contained(&fam));
}

#[test]
fn unique_simplicial_fixture_yields_ordering() {
    let a = fixtures::unique_simplicial_4();
    assert_eq!(extract_certificate(&a).unwrap().to_string(), "PEO: 4 2 1 3");
}

#[test]
fn certificate_text_round_trips() {
    for a in [fixtures::six_pair_only(), fixtures::unique_simplicial_4(), fixtures::no_simplicial_5()] {
        let cert = extract_certificate(&a).unwrap();
        let back: Certificate = cert.to_string().parse().unwrap();
        assert_eq!(back, cert);
    }
}

#[test]
fn cycle_search_on_fixtures() {
    let b = fixtures::chordless_cycle_5();
    let c = find_weighted_chordless_cycle(&b).unwrap();
    assert!(is_weighted_chordless_cycle(&b, &c).unwrap());
    assert!(is_weighted_chordless_cycle(&b, &walk(&[1, 2, 3, 4, 5, 1])).unwrap());
    assert_eq!(find_weighted_chordless_cycle(&fixtures::no_simplicial_5()), None);
    let c4 = Graph::cycle(4).adjacency_matrix();
    assert!(is_weighted_chordless_cycle(&c4, &walk(&[1, 2, 3, 4, 1])).unwrap());
    assert!(matches!(is_weighted_chordless_cycle(&c4, &walk(&[1, 2, 3])), Err(Error::NotACycle)));
}

#[test]
fn critical_walks_on_unique_simplicial_fixture() {
    // orderable with a single simplicial element, so a critical walk must exist
    let a = fixtures::unique_simplicial_4();
    assert!(is_critical_walk(&a, &walk(&[4, 2, 1, 3, 4])));
    let critical: Vec<Walk> = walks_up_to(4, 8).into_iter().filter(|w| is_critical_walk(&a, w)).collect();
    assert!(!critical.is_empty());
    assert!(critical.iter().all(|w| w.start() == 3));
    assert!(matches!(structure_outcome(&a).unwrap(), Outcome::CriticalWalk(_)));

    let c = SymmetricMatrix::constant(4, matrix::int(3)).unwrap();
    assert!(walks_up_to(4, 5).iter().all(|w| !is_critical_walk(&c, w)));
}

#[test]
fn critical_walk_from_simplicial_element() {
    // 1 is simplicial; the closed walk 1-2-4-3-1 is weighted chordless and A_14 = min
    let a = SymmetricMatrix::from_integer_table(4, &[0, 1, 1, 0, 1, 0, 1, 2, 1, 1, 0, 2, 0, 2, 2, 0]).unwrap();
    assert!(is_simplicial(&a, 0).unwrap().holds());
    assert!(is_critical_walk(&a, &walk(&[1, 2, 4, 3, 1])));
    let out = structure_outcome(&a).unwrap();
    assert!(out.is_valid_for(&a), "{out:?}");
}

#[test]
fn rooted_walks() {
    assert!(is_rooted(&walk(&[1, 2, 3]), &[0, 2]));
    assert!(!is_rooted(&walk(&[1, 2, 3]), &[0, 1, 2]));
    assert!(!is_rooted(&walk(&[1, 3]), &[0, 2]));
}

#[test]
fn structure_outcomes_validate_exhaustively_at_four() {
    for a in all_matrices(4, 3) {
        let out = structure_outcome(&a).unwrap();
        assert!(out.is_valid_for(&a), "{a:?} {out:?}");
    }
}

/// PEO exists iff no self-contained pair exists iff
/// the extractor returns an ordering.
fn check_equivalence(a: &SymmetricMatrix) {
    let greedy = greedy_peo(a).is_some();
    let oracle = !all_peos_bruteforce(a).unwrap().is_empty();
    let pair = find_self_contained_pair_bruteforce(a, default_max_len(a.n())).unwrap();
    let cert = extract_certificate(a).unwrap();
    cert.validate(a).unwrap();
    assert_eq!(greedy, oracle, "{a:?}");
    assert_eq!(oracle, pair.is_none(), "{a:?} {pair:?}");
    assert_eq!(oracle, cert.is_ordering(), "{a:?} {cert}");
}

#[test]
fn equivalence_random_five_and_six() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..3000 {
        let n = 5 + k % 2;
        check_equivalence(&random_matrix(&mut rng, n, 3));
    }
}

#[test]
fn extractor_on_larger_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..3000 {
        let n = 6 + k % 7;
        let levels = 2 + (k % 4) as i64;
        let a = random_matrix(&mut rng, n, levels);
        let cert = extract_certificate(&a).unwrap();
        assert_eq!(cert.is_ordering(), greedy_peo(&a).is_some());
        let out = structure_outcome(&a).unwrap();
        assert!(out.is_valid_for(&a), "{a:?} {out:?}");
    }
}

#[test]
fn families_match_orderability_at_five() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..400 {
        let a = random_matrix(&mut rng, 5, 3);
        let fam = find_self_contained_family_bruteforce(&a, default_max_len(5)).unwrap();
        assert_eq!(fam.is_some(), greedy_peo(&a).is_none(), "{a:?}");
        if let Some(f) = fam {
            assert!(is_self_contained(&WalkFamily::new(f.clone()).unwrap()));
            assert!(f.iter().all(|w| is_weighted_chordless(&a, w).unwrap().holds()));
        } else {
            assert!(find_simplicial(&a).is_some());
        }
    }
}

#[test]
fn ordering_rules_out_weighted_chordless_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let a = random_matrix(&mut rng, 6, 3);
        if greedy_peo(&a).is_some() {
            assert_eq!(find_weighted_chordless_cycle(&a), None);
            let levels = level_decomposition(&a).unwrap();
            assert!(levels.levels.iter().all(|g| classes::is_chordal(g).holds()));
        }
    }
    // neither converse holds
    let b = fixtures::chordless_cycle_5();
    assert!(find_weighted_chordless_cycle(&b).is_some());
    assert!(classes::level_chordality(&b).iter().all(|&c| c));
    let a = fixtures::no_simplicial_5();
    assert!(find_weighted_chordless_cycle(&a).is_none() && greedy_peo(&a).is_none());
}

#[test]
fn simplicial_across_separations() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..1000 {
        let a = random_matrix(&mut rng, 6, 3);
        let Ok(sep) = find_separation(&a, None) else { continue };
        let sub = a.principal(&sep.x).unwrap();
        for (k, &x) in sep.x.iter().enumerate() {
            if sep.y.binary_search(&x).is_err() && is_simplicial(&sub, k).unwrap().holds() {
                assert!(is_simplicial(&a, x).unwrap().holds(), "{a:?} {sep:?} {x}");
            }
        }
    }
}

#[test]
fn single_walk_search() {
    assert_eq!(find_self_contained_walk_bruteforce(&fixtures::six_pair_only(), 14).unwrap(), None);
    let w = find_self_contained_walk_bruteforce(&fixtures::no_simplicial_5(), 14).unwrap().unwrap();
    assert!(w.is_self_contained());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn certificates_always_validate(entries in proptest::collection::vec(-3i64..4, 28)) {
        let n = 8;
        let mut it = entries.into_iter();
        let a = SymmetricMatrix::from_fn(n, |_, _| matrix::int(it.next().unwrap())).unwrap();
        let cert = extract_certificate(&a).unwrap();
        prop_assert!(cert.validate(&a).is_ok());
        prop_assert_eq!(cert.is_ordering(), greedy_peo(&a).is_some());
    }
}
