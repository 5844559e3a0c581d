//! Argument-shift data in U(gl_d) and the exact check suites built on it.
//!
//! Every check is an exact zero test; a failing check carries the offending
//! element as its witness.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{
    char_poly_generators, classical_derive_pow, classical_shift_check, symmetrize, uea_part_symbol,
    SymElement,
};
use crate::error::{Error, Result};
use crate::matrix::{power_matrix, ElementMatrix};
use crate::pbw::{check_dim, ElementJson, UeaElement};
use crate::quasideriv::{directional_derive, directional_power, matrix_quasi_derive, Variant};
use crate::scalar::Scalar;
use crate::shift::ShiftMatrix;

/// Default ceiling for [`estimate_theorem1_terms`].
pub const DEFAULT_TERM_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ElementJson>,
}

impl Check {
    fn zero_test<T: Scalar>(id: String, x: &UeaElement<T>) -> Self {
        if x.is_zero() {
            Check {
                id,
                status: Status::Pass,
                witness: None,
            }
        } else {
            Check {
                id,
                status: Status::Fail,
                witness: Some(x.to_json()),
            }
        }
    }

    fn flag(id: String, ok: bool) -> Self {
        Check {
            id,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub config: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.checks.extend(other.checks);
        self
    }
}

/// A named central element.
#[derive(Debug, Clone, PartialEq)]
pub struct Seed<T> {
    pub name: String,
    pub element: UeaElement<T>,
}

/// `τ_1..τ_d`.
pub fn tau_seeds<T: Scalar>(d: usize) -> Result<Vec<Seed<T>>> {
    (1..=d)
        .map(|k| {
            Ok(Seed {
                name: format!("tau{k}"),
                element: crate::matrix::tau(k, d)?,
            })
        })
        .collect()
}

/// `σ(I_1)..σ(I_d)`.
pub fn char_poly_seeds<T: Scalar>(d: usize) -> Result<Vec<Seed<T>>> {
    char_poly_generators::<T>(d)?
        .iter()
        .enumerate()
        .map(|(k, ik)| {
            Ok(Seed {
                name: format!("symI{}", k + 1),
                element: symmetrize(ik)?,
            })
        })
        .collect()
}

/// `T̂_i(ξ) = Σ_{j≠i} e^j_i e^i_j / (ξ_i − ξ_j)` for regular diagonal ξ.
pub fn t_hat<T: Scalar>(xi: &ShiftMatrix<T>, i: usize) -> Result<UeaElement<T>> {
    xi.require_regular_diagonal("t_hat")?;
    let d = xi.dim();
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange {
            row: i,
            col: i,
            dim: d,
        });
    }
    let mut out = UeaElement::zero(d);
    for j in (1..=d).filter(|&j| j != i) {
        let w = T::one() / (xi.get(i, i).clone() - xi.get(j, j).clone());
        let term = &UeaElement::generator(j, i, d)? * &UeaElement::generator(i, j, d)?;
        out = &out + &term.scale(&w);
    }
    Ok(out)
}

/// `∂_ξ^p f` for central `f`.
pub fn iterate_shift<T: Scalar>(
    xi: &ShiftMatrix<T>,
    f: &UeaElement<T>,
    p: usize,
    variant: Variant,
) -> Result<UeaElement<T>> {
    check_dim(xi.dim(), f.dim())?;
    if !f.is_central() {
        return Err(Error::NotCentral {
            op: "iterate_shift",
        });
    }
    directional_power(xi, f, p, variant)
}

/// `∂_ξ^p f` for every seed `f` and `p ≤ max_order`.
#[derive(Debug, Clone)]
pub struct ShiftFamily<T> {
    pub xi: ShiftMatrix<T>,
    pub seeds: Vec<Seed<T>>,
    pub max_order: usize,
    pub variant: Variant,
    elements: Vec<Vec<UeaElement<T>>>,
}

impl<T: Scalar> ShiftFamily<T> {
    pub fn new(
        xi: ShiftMatrix<T>,
        seeds: Vec<Seed<T>>,
        max_order: usize,
        variant: Variant,
    ) -> Result<Self> {
        let mut elements = Vec::with_capacity(seeds.len());
        for s in &seeds {
            check_dim(xi.dim(), s.element.dim())?;
            if !s.element.is_central() {
                return Err(Error::NotCentral {
                    op: "ShiftFamily::new",
                });
            }
            let mut chain = vec![s.element.clone()];
            for _ in 0..max_order {
                let next = directional_derive(&xi, chain.last().unwrap(), variant)?;
                chain.push(next);
            }
            elements.push(chain);
        }
        Ok(ShiftFamily {
            xi,
            seeds,
            max_order,
            variant,
            elements,
        })
    }

    /// `∂_ξ^p` of seed number `seed`.
    pub fn get(&self, seed: usize, p: usize) -> &UeaElement<T> {
        &self.elements[seed][p]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &UeaElement<T>)> {
        self.elements
            .iter()
            .enumerate()
            .flat_map(|(s, chain)| chain.iter().enumerate().map(move |(p, x)| (s, p, x)))
    }
}

/// Which two quasi-derivation variants are paired in a commutator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pairing {
    HatHat,
    HatBar,
    BarBar,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::HatHat, Pairing::HatBar, Pairing::BarBar];

    pub fn variants(self) -> (Variant, Variant) {
        match self {
            Pairing::HatHat => (Variant::Hat, Variant::Hat),
            Pairing::HatBar => (Variant::Hat, Variant::Bar),
            Pairing::BarBar => (Variant::Bar, Variant::Bar),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pairing::HatHat => "hat-hat",
            Pairing::HatBar => "hat-bar",
            Pairing::BarBar => "bar-bar",
        }
    }
}

/// `(seed_a, p, seed_b, q)` for every commutator the pairing needs.
/// Same-variant pairings skip the symmetric duplicates.
fn theorem1_pairs(
    num_seeds: usize,
    pmax: usize,
    pairing: Pairing,
) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..num_seeds {
        for b in 0..num_seeds {
            for p in 0..=pmax {
                for q in 0..=pmax - p {
                    let keep = match pairing {
                        Pairing::HatBar => true,
                        _ => a < b || (a == b && p < q),
                    };
                    if keep {
                        out.push((a, p, b, q));
                    }
                }
            }
        }
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut out: u128 = 1;
    for i in 0..k {
        out = match out.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    out
}

/// A-priori upper bound on the number of terms the commutators of
/// [`verify_theorem1`] can touch: every pair contributes the number of PBW
/// words of length at most `deg f + deg g`.
pub fn estimate_theorem1_terms(
    d: usize,
    seed_degrees: &[usize],
    pmax: usize,
    pairing: Pairing,
) -> u128 {
    let gens = (d * d) as u128;
    theorem1_pairs(seed_degrees.len(), pmax, pairing)
        .into_iter()
        .map(|(a, _, b, _)| {
            let n = (seed_degrees[a] + seed_degrees[b]) as u128;
            binomial(gens + n, n)
        })
        .fold(0u128, u128::saturating_add)
}

/// `[∂_ξ^p f, ∂_ξ^q g] = 0` for all seed pairs with `p + q ≤ pmax`.
pub fn verify_theorem1<T: Scalar>(
    xi: &ShiftMatrix<T>,
    seeds: &[Seed<T>],
    pmax: usize,
    pairing: Pairing,
    budget: u128,
) -> Result<Report> {
    let d = xi.dim();
    let degrees: Vec<usize> = seeds
        .iter()
        .map(|s| s.element.degree().max(0) as usize)
        .collect();
    let estimated = estimate_theorem1_terms(d, &degrees, pmax, pairing);
    if estimated > budget {
        return Err(Error::BudgetExceeded {
            estimated,
            ceiling: budget,
        });
    }
    let (va, vb) = pairing.variants();
    let left = ShiftFamily::new(xi.clone(), seeds.to_vec(), pmax, va)?;
    let right = if va == vb {
        None
    } else {
        Some(ShiftFamily::new(xi.clone(), seeds.to_vec(), pmax, vb)?)
    };
    let right = right.as_ref().unwrap_or(&left);

    let checks = theorem1_pairs(seeds.len(), pmax, pairing)
        .into_par_iter()
        .map(|(a, p, b, q)| {
            let c = left.get(a, p).commutator(right.get(b, q))?;
            let id = format!("[{va}^{p} {}, {vb}^{q} {}]", seeds[a].name, seeds[b].name);
            Ok(Check::zero_test(id, &c))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Report {
        config: json!({
            "suite": "theorem1",
            "d": d,
            "xi": xi.to_string(),
            "seeds": seeds.iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
            "pmax": pmax,
            "pairing": pairing.name(),
            "estimated_terms": estimated.to_string(),
        }),
        checks,
    })
}

/// `x` commutes with every `e^i_i` and every `T̂_i(ξ)`.
pub fn verify_centralizer<T: Scalar>(xi: &ShiftMatrix<T>, x: &UeaElement<T>) -> Result<Report> {
    xi.require_regular_diagonal("verify_centralizer")?;
    check_dim(xi.dim(), x.dim())?;
    let d = xi.dim();
    let mut checks = Vec::with_capacity(2 * d);
    for i in 1..=d {
        let c = UeaElement::generator(i, i, d)?.commutator(x)?;
        checks.push(Check::zero_test(format!("[e[{i},{i}], x]"), &c));
    }
    for i in 1..=d {
        let c = t_hat(xi, i)?.commutator(x)?;
        checks.push(Check::zero_test(format!("[T{i}, x]"), &c));
    }
    Ok(Report {
        config: json!({ "suite": "centralizer", "d": d, "xi": xi.to_string() }),
        checks,
    })
}

/// `(∂̂_ξ T̂_i(ξ), Σ_{j≠i} ξ_j / (ξ_i − ξ_j))`; the first should be the
/// second times the unit.
pub fn verify_eq9<T: Scalar>(xi: &ShiftMatrix<T>, i: usize) -> Result<(UeaElement<T>, T)> {
    let t = t_hat(xi, i)?;
    let computed = directional_derive(xi, &t, Variant::Hat)?;
    let d = xi.dim();
    let xii = xi.get(i, i).clone();
    let expected = (1..=d).filter(|&j| j != i).fold(T::zero(), |acc, j| {
        let xj = xi.get(j, j).clone();
        acc + xj.clone() / (xii.clone() - xj)
    });
    Ok((computed, expected))
}

/// `tr(ξ·[A, B])`.
fn trace_bracket<T: Scalar>(
    xi: &ShiftMatrix<T>,
    a: &ElementMatrix<T>,
    b: &ElementMatrix<T>,
) -> Result<UeaElement<T>> {
    a.commutator(b)?.trace_with(xi)
}

/// `tr(ξ·[D̂(T̂_i(ξ)), (e^n)^T]) = 0`.
pub fn verify_lemma1<T: Scalar>(xi: &ShiftMatrix<T>, i: usize, n: usize) -> Result<bool> {
    Ok(lemma1_bracket(xi, i, n)?.is_zero())
}

fn lemma1_bracket<T: Scalar>(xi: &ShiftMatrix<T>, i: usize, n: usize) -> Result<UeaElement<T>> {
    let dt = matrix_quasi_derive(&t_hat(xi, i)?, Variant::Hat);
    let en_t = power_matrix::<T>(n, xi.dim())?.transpose();
    trace_bracket(xi, &dt, &en_t)
}

fn module_bracket<T: Scalar>(
    xi: &ShiftMatrix<T>,
    dt: &ElementMatrix<T>,
    x: &UeaElement<T>,
) -> Result<UeaElement<T>> {
    trace_bracket(xi, dt, &matrix_quasi_derive(x, Variant::Hat))
}

/// For `x` with `tr(ξ·[D̂T̂_i, D̂x]) = 0`, checks `tr(ξ·[D̂T̂_i, D̂∂̂_ξ x]) = 0`.
pub fn verify_invariant_module<T: Scalar>(
    xi: &ShiftMatrix<T>,
    i: usize,
    x: &UeaElement<T>,
) -> Result<bool> {
    check_dim(xi.dim(), x.dim())?;
    let dt = matrix_quasi_derive(&t_hat(xi, i)?, Variant::Hat);
    if !module_bracket(xi, &dt, x)?.is_zero() {
        return Err(Error::NotInModule {
            op: "verify_invariant_module",
            index: i,
        });
    }
    let next = directional_derive(xi, x, Variant::Hat)?;
    Ok(module_bracket(xi, &dt, &next)?.is_zero())
}

/// Compares `∂̂_ξ^p σ(F)` with `∂_ξ^p F` for homogeneous `F`: the part of
/// degree `deg F − p` must be `∂_ξ^p F` and nothing of higher degree may
/// survive.
pub fn classical_limit_check<T: Scalar>(
    xi: &ShiftMatrix<T>,
    f: &SymElement<T>,
    p: usize,
    variant: Variant,
) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::InvalidArgument(
            "classical limit check needs a homogeneous polynomial".into(),
        ));
    }
    let deg = f.degree();
    if deg < 0 {
        return Ok(true);
    }
    let quantum = directional_power(xi, &symmetrize(f)?, p, variant)?;
    let classical = classical_derive_pow(xi, f, p)?;
    let deg = deg as usize;
    if p > deg {
        return Ok(quantum.is_zero() && classical.is_zero());
    }
    let target = deg - p;
    if quantum.degree() > target as i64 {
        return Ok(false);
    }
    Ok(uea_part_symbol(&quantum.homogeneous_part(target)) == classical)
}

/// `∂̂_ξ T̂_i(ξ) = Σ_{j≠i} ξ_j/(ξ_i − ξ_j)` for every `i`.
pub fn eq9_suite<T: Scalar>(xi: &ShiftMatrix<T>) -> Result<Report> {
    let d = xi.dim();
    let mut checks = Vec::with_capacity(d);
    for i in 1..=d {
        let (computed, expected) = verify_eq9(xi, i)?;
        let diff = &computed - &UeaElement::constant(d, expected);
        checks.push(Check::zero_test(format!("eq9 i={i}"), &diff));
    }
    Ok(Report {
        config: json!({ "suite": "eq9", "d": d, "xi": xi.to_string() }),
        checks,
    })
}

/// `tr(ξ·[D̂T̂_i, (e^n)^T]) = 0` for every `i` and `n ≤ nmax`.
pub fn lemma1_suite<T: Scalar>(xi: &ShiftMatrix<T>, nmax: usize) -> Result<Report> {
    let d = xi.dim();
    let mut checks = Vec::new();
    for i in 1..=d {
        for n in 0..=nmax {
            let b = lemma1_bracket(xi, i, n)?;
            checks.push(Check::zero_test(format!("lemma1 i={i} n={n}"), &b));
        }
    }
    Ok(Report {
        config: json!({ "suite": "lemma1", "d": d, "xi": xi.to_string(), "nmax": nmax }),
        checks,
    })
}

/// Module invariance for every seed, every `i`, and the first `depth`
/// shifts of each seed.
pub fn invariant_module_suite<T: Scalar>(
    xi: &ShiftMatrix<T>,
    seeds: &[Seed<T>],
    depth: usize,
) -> Result<Report> {
    let d = xi.dim();
    let family = ShiftFamily::new(xi.clone(), seeds.to_vec(), depth, Variant::Hat)?;
    let mut checks = Vec::new();
    for i in 1..=d {
        for (s, p, x) in family.iter().filter(|&(_, p, _)| p < depth.max(1)) {
            let ok = verify_invariant_module(xi, i, x)?;
            checks.push(Check::flag(
                format!("module i={i} hat^{p} {}", seeds[s].name),
                ok,
            ));
        }
    }
    Ok(Report {
        config: json!({
            "suite": "invariant-module",
            "d": d,
            "xi": xi.to_string(),
            "seeds": seeds.iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
            "depth": depth,
        }),
        checks,
    })
}

/// Centralizer conditions for every element of the hat family.
pub fn centralizer_suite<T: Scalar>(
    xi: &ShiftMatrix<T>,
    seeds: &[Seed<T>],
    pmax: usize,
) -> Result<Report> {
    xi.require_regular_diagonal("centralizer_suite")?;
    let family = ShiftFamily::new(xi.clone(), seeds.to_vec(), pmax, Variant::Hat)?;
    let mut checks = Vec::new();
    for (s, p, x) in family.iter() {
        for c in verify_centralizer(xi, x)?.checks {
            checks.push(Check {
                id: format!("hat^{p} {}: {}", seeds[s].name, c.id),
                ..c
            });
        }
    }
    Ok(Report {
        config: json!({
            "suite": "centralizer",
            "d": xi.dim(),
            "xi": xi.to_string(),
            "seeds": seeds.iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
            "pmax": pmax,
        }),
        checks,
    })
}

/// Classical commutativity over `I_1..I_d` with `p + q ≤ pmax`, plus the
/// classical-limit comparison for every `I_k` and `p ≤ limit_pmax`.
pub fn classical_suite<T: Scalar>(
    xi: &ShiftMatrix<T>,
    pmax: usize,
    limit_pmax: usize,
) -> Result<Report> {
    let d = xi.dim();
    let gens = char_poly_generators::<T>(d)?;
    let mut checks = Vec::new();
    for (a, f) in gens.iter().enumerate() {
        for (b, g) in gens.iter().enumerate() {
            for p in 0..=pmax {
                for q in 0..=pmax - p {
                    let ok = classical_shift_check(xi, p, q, f, g)?;
                    checks.push(Check::flag(
                        format!("{{d^{p} I{}, d^{q} I{}}}", a + 1, b + 1),
                        ok,
                    ));
                }
            }
        }
    }
    for (k, f) in gens.iter().enumerate() {
        for p in 0..=limit_pmax {
            for variant in [Variant::Hat, Variant::Bar] {
                let ok = classical_limit_check(xi, f, p, variant)?;
                checks.push(Check::flag(format!("limit {variant}^{p} I{}", k + 1), ok));
            }
        }
    }
    Ok(Report {
        config: json!({
            "suite": "classical",
            "d": d,
            "xi": xi.to_string(),
            "pmax": pmax,
            "limit_pmax": limit_pmax,
        }),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type E = UeaElement<Rational>;

    fn xi(s: &str) -> ShiftMatrix<Rational> {
        ShiftMatrix::parse(s).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn t_hat_examples() {
        let x = xi("diag:2,1");
        let t1 = t_hat(&x, 1).unwrap();
        assert_eq!(t1, E::parse("e[2,1]*e[1,2]", 2).unwrap());
        assert_eq!(
            t_hat(&x, 2).unwrap(),
            E::parse("-e[1,2]*e[2,1]", 2).unwrap()
        );
        assert!(matches!(
            t_hat(&xi("diag:1,1"), 1),
            Err(Error::IrregularShift { .. })
        ));
        assert!(t_hat(&xi("full:[[1,1],[0,2]]"), 1).is_err());
    }

    #[test]
    fn eq9_examples() {
        let x = xi("diag:2,1");
        let (c, e) = verify_eq9(&x, 1).unwrap();
        assert_eq!(e, q(1));
        assert_eq!(c, E::one(2));
        let (c, e) = verify_eq9(&x, 2).unwrap();
        assert_eq!(e, q(-2));
        assert_eq!(c, E::constant(2, q(-2)));
        let (c, e) = verify_eq9(&xi("diag:3,2,1"), 2).unwrap();
        assert_eq!(e, q(-2));
        assert_eq!(c, E::constant(3, q(-2)));
    }

    #[test]
    fn shift_examples() {
        let x = xi("diag:2,1");
        let t1 = crate::matrix::tau::<Rational>(1, 2).unwrap();
        assert_eq!(
            iterate_shift(&x, &t1, 1, Variant::Hat).unwrap(),
            E::constant(2, q(3))
        );
        assert_eq!(iterate_shift(&x, &t1, 0, Variant::Hat).unwrap(), t1);
        let g = E::parse("e[1,2]", 2).unwrap();
        assert!(matches!(
            iterate_shift(&x, &g, 1, Variant::Hat),
            Err(Error::NotCentral { .. })
        ));
        let t2 = crate::matrix::tau::<Rational>(2, 2).unwrap();
        let t3 = crate::matrix::tau::<Rational>(3, 2).unwrap();
        let a = iterate_shift(&x, &t2, 1, Variant::Hat).unwrap();
        let b = iterate_shift(&x, &t3, 1, Variant::Hat).unwrap();
        assert!(a.commutator(&b).unwrap().is_zero());
    }

    #[test]
    fn theorem1_small() {
        let seeds = tau_seeds::<Rational>(2).unwrap();
        for pairing in Pairing::ALL {
            let r = verify_theorem1(
                &xi("full:[[1,2],[-1,3]]"),
                &seeds,
                2,
                pairing,
                DEFAULT_TERM_BUDGET,
            )
            .unwrap();
            assert!(
                r.passed(),
                "{pairing:?}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
            let r0 =
                verify_theorem1(&xi("diag:2,1"), &seeds, 0, pairing, DEFAULT_TERM_BUDGET).unwrap();
            assert!(r0.passed());
        }
    }

    #[test]
    fn budget_guard() {
        let seeds = tau_seeds::<Rational>(3).unwrap();
        let err = verify_theorem1(
            &xi("diag:3,2,1"),
            &seeds,
            50,
            Pairing::HatHat,
            DEFAULT_TERM_BUDGET,
        );
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
        assert!(estimate_theorem1_terms(3, &[1, 2, 3], 3, Pairing::HatBar) <= DEFAULT_TERM_BUDGET);
    }

    #[test]
    fn centralizer_examples() {
        let x = xi("diag:2,1");
        let t2 = crate::matrix::tau::<Rational>(2, 2).unwrap();
        assert!(verify_centralizer(&x, &t2).unwrap().passed());
        let s = iterate_shift(&x, &t2, 1, Variant::Hat).unwrap();
        assert!(verify_centralizer(&x, &s).unwrap().passed());
        let r = verify_centralizer(&x, &E::parse("e[1,2]", 2).unwrap()).unwrap();
        assert_eq!(r.checks[0].status, Status::Fail);
    }

    #[test]
    fn lemma1_and_module() {
        let x = xi("diag:2,1");
        for i in 1..=2 {
            for n in 0..=3 {
                assert!(verify_lemma1(&x, i, n).unwrap(), "i={i} n={n}");
            }
        }
        let t1 = crate::matrix::tau::<Rational>(1, 2).unwrap();
        let t2 = crate::matrix::tau::<Rational>(2, 2).unwrap();
        assert!(verify_invariant_module(&x, 1, &t2).unwrap());
        assert!(verify_invariant_module(&x, 1, &E::one(2)).unwrap());
        assert!(verify_invariant_module(&x, 2, &(&t1 * &t2)).unwrap());
    }

    #[test]
    fn report_json_shape() {
        let r = verify_centralizer(&xi("diag:2,1"), &E::parse("e[1,2]", 2).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][0]["status"], "fail");
        assert!(v["checks"][0]["witness"]["terms"].is_array());
        let t2 = crate::matrix::tau::<Rational>(2, 2).unwrap();
        let ok = serde_json::to_value(verify_centralizer(&xi("diag:2,1"), &t2).unwrap()).unwrap();
        assert!(ok["checks"][0].get("witness").is_none());
    }
}
