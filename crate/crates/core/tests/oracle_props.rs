mod common;

use cip_core::clique::max_clique;
use cip_core::oracle::{brute_force_omega, brute_force_theta, Oracle, OracleBudget, OracleError};
use cip_core::Graph;
use common::{omega_without, random_instances};

#[test]
fn enumerations_agree() {
    let oracle = Oracle::default();
    for (g, k) in random_instances(8, 200) {
        let (theta, witness) = oracle.theta(&g, k).unwrap();
        assert_eq!(oracle.theta_all_subsets(&g, k).unwrap(), theta);
        assert!(witness.len() <= k);
        assert_eq!(omega_without(&g, &witness), theta);
    }
}

#[test]
fn theta_is_monotone_in_k_and_under_deletion() {
    for (g, _) in random_instances(19, 120) {
        let omega = brute_force_omega(&g).unwrap();
        assert_eq!(max_clique(&g).size(), omega);
        let mut previous = omega;
        assert_eq!(brute_force_theta(&g, 0).unwrap().0, omega);
        for k in 1..=4 {
            let t = brute_force_theta(&g, k).unwrap().0;
            assert!(t <= previous && previous <= t + 1);
            previous = t;
        }
        let (sub, _) = g.remove_vertices(&[0, 2]);
        for k in 0..=3 {
            assert!(brute_force_theta(&sub, k).unwrap().0 <= brute_force_theta(&g, k).unwrap().0);
        }
    }
}

#[test]
fn budget_is_enforced() {
    assert!(matches!(
        brute_force_omega(&Graph::empty(17)),
        Err(OracleError::TooManyVertices { n: 17, max: 16 })
    ));
    assert!(matches!(
        brute_force_theta(&Graph::empty(15), 1),
        Err(OracleError::TooManyVertices { .. })
    ));
    assert!(matches!(
        brute_force_theta(&Graph::complete(10), 5),
        Err(OracleError::BudgetTooLarge { k: 5, max: 4 })
    ));
    let roomy = Oracle::new(OracleBudget {
        max_k: 10,
        ..Default::default()
    });
    assert_eq!(roomy.theta(&Graph::complete(10), 5).unwrap().0, 5);
    assert_eq!(brute_force_theta(&Graph::complete(6), 9).unwrap().0, 0);
}
