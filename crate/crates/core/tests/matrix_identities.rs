mod common;

use argshift::matrix::{
    generator_matrix, power_commutator_oracle_3, power_commutator_oracle_4, power_entry,
    power_matrix, power_matrix_recursive, tau, xi_twisted_trace,
};
use argshift::{Element, Rational, Word};
use common::*;

fn expanded_power_entry(n: usize, i: usize, j: usize, d: usize) -> Element {
    // all index paths i -> k1 -> ... -> j, written as plain words
    let mut paths: Vec<Vec<usize>> = vec![vec![i]];
    for _ in 0..n.saturating_sub(1) {
        paths = paths
            .into_iter()
            .flat_map(|p| (1..=d).map(move |k| [p.clone(), vec![k]].concat()))
            .collect();
    }
    if n == 0 {
        return if i == j {
            Element::one(d)
        } else {
            Element::zero(d)
        };
    }
    let words = paths.into_iter().map(|mut p| {
        p.push(j);
        let codes = p.windows(2).map(|w| code(w[0], w[1], d)).collect();
        (Word::from_codes(codes), q(1))
    });
    Element::from_words(d, words)
}

#[test]
fn power_entries_match_path_sums() {
    for d in 1..=3 {
        for n in 0..=4 {
            for i in 1..=d {
                for j in 1..=d {
                    assert_eq!(
                        power_entry::<Rational>(n, i, j, d).unwrap(),
                        expanded_power_entry(n, i, j, d)
                    );
                }
            }
            assert_eq!(
                power_matrix::<Rational>(n, d).unwrap(),
                power_matrix_recursive::<Rational>(n, d).unwrap()
            );
        }
    }
}

#[test]
fn power_bracket_with_generator_exhaustive() {
    for d in 1..=3 {
        for p in 0..=4 {
            for i in 1..=d {
                for j in 1..=d {
                    let ep = power_entry::<Rational>(p, i, j, d).unwrap();
                    for k in 1..=d {
                        for l in 1..=d {
                            let oracle =
                                power_commutator_oracle_3::<Rational>(p, (i, j, k, l), d).unwrap();
                            assert_eq!(ep.commutator(&gen(k, l, d)).unwrap(), oracle);
                            let right = power_entry::<Rational>(p, k, l, d).unwrap();
                            assert_eq!(gen(i, j, d).commutator(&right).unwrap(), oracle);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn power_bracket_closed_form_exhaustive() {
    for (d, total) in [(1, 5), (2, 5), (3, 4)] {
        for m in 0..=total {
            for n in 0..=total - m {
                for i in 1..=d {
                    for j in 1..=d {
                        let a = power_entry::<Rational>(m, i, j, d).unwrap();
                        for k in 1..=d {
                            for l in 1..=d {
                                let b = power_entry::<Rational>(n, k, l, d).unwrap();
                                let oracle =
                                    power_commutator_oracle_4::<Rational>(m, n, (i, j, k, l), d)
                                        .unwrap();
                                assert_eq!(a.commutator(&b).unwrap(), oracle, "d={d} m={m} n={n}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn traces_are_central() {
    for d in 1..=3 {
        for k in 1..=d + 1 {
            let t = tau::<Rational>(k, d).unwrap();
            for i in 1..=d {
                for j in 1..=d {
                    assert!(t.commutator(&gen(i, j, d)).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn trace_of_matrix_product() {
    for d in 1..=3 {
        let e = generator_matrix::<Rational>(d).unwrap();
        for n in 0..=3 {
            let prod = e.checked_mul(&power_matrix(n, d).unwrap()).unwrap();
            assert_eq!(prod.trace(), tau(n + 1, d).unwrap());
        }
    }
}

#[test]
fn twisted_traces_commute() {
    let mut r = rng(7);
    for d in 1..=3 {
        for _ in 0..3 {
            let xi = random_dense_shift(&mut r, d);
            let traces: Vec<Element> = (0..=3).map(|k| xi_twisted_trace(&xi, k).unwrap()).collect();
            for a in &traces {
                for b in &traces {
                    assert!(a.commutator(b).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn twisted_trace_examples() {
    let xi = argshift::Shift::parse("diag:2,1").unwrap();
    assert_eq!(
        xi_twisted_trace(&xi, 1).unwrap(),
        Element::parse("2*e[1,1] + e[2,2]", 2).unwrap()
    );
    let id = argshift::Shift::identity(2).unwrap();
    assert_eq!(xi_twisted_trace(&id, 2).unwrap(), tau(2, 2).unwrap());
}
