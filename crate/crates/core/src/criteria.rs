//! Deciding whether a prime divides the index of every element of an order,
//! two ways: by comparing prime-ideal counts with irreducible-polynomial
//! counts, and by reducing the index form modulo the first divisor system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::fp_poly::{self, FpPolynomial};
use crate::hnf_ideals::{lambda_profile, ramification_probe, RamificationProbe};
use crate::multipoly::{in_system, DivisorSystem, MPoly};
use crate::number_field::{index_form, Order, OrderElement};
use crate::supplementary::{supplementary_report_of, SupplementaryReport};

pub const DEFAULT_WITNESS_BOUND: u32 = 3;

/// `(gbar(1), ..., gbar(n))`: monic irreducibles over `F_p` by degree.
pub fn gbar_table(p: u64, n: usize) -> Result<Vec<BigInt>> {
    (1..=n as u32)
        .map(|k| fp_poly::count_irreducible(p, k))
        .collect()
}

/// Degrees `kappa` (1-based) where the prime-ideal count exceeds the
/// polynomial count.
pub fn failing_degrees(profile: &[u32], gbar: &[BigInt]) -> Vec<u32> {
    profile
        .iter()
        .zip(gbar)
        .enumerate()
        .filter(|(_, (&l, g))| BigInt::from(l) > **g)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

pub fn is_cid_counts(order: &Order, p: u64) -> Result<(bool, Vec<u32>)> {
    let profile = lambda_profile(order, p)?;
    let failing = failing_degrees(&profile, &gbar_table(p, order.degree())?);
    Ok((!failing.is_empty(), failing))
}

pub fn is_cid_form_of(delta: &MPoly, p: u64) -> Result<bool> {
    Ok(in_system(delta, &DivisorSystem::new(p, 1, delta.nvars())?))
}

pub fn is_cid_form(order: &Order, p: u64) -> Result<bool> {
    is_cid_form_of(&index_form(order)?, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "crate::serde_big::vec")]
    pub coords: Vec<BigInt>,
    #[serde(with = "crate::serde_big::int")]
    pub index: BigInt,
}

/// Sort key of a coordinate: 1, -1, 2, -2, ... and 0 last.
fn value_rank(v: i64) -> u64 {
    match v {
        0 => u64::MAX,
        v if v > 0 => 2 * v as u64 - 1,
        v => 2 * v.unsigned_abs(),
    }
}

/// Coordinate vectors (first coordinate 0) with max-norm exactly `m`,
/// ordered by support size and then lexicographically by `value_rank`.
fn shell(n: usize, m: i64) -> Vec<Vec<i64>> {
    let tail = n - 1;
    let mut out = Vec::new();
    let mut cur = vec![-m; tail];
    loop {
        if cur.iter().any(|x| x.abs() == m) {
            let mut v = vec![0];
            v.extend_from_slice(&cur);
            out.push(v);
        }
        let mut i = tail;
        loop {
            if i == 0 {
                out.sort_by_key(|v| {
                    let support = v.iter().filter(|&&x| x != 0).count();
                    (
                        support,
                        v.iter().map(|&x| value_rank(x)).collect::<Vec<_>>(),
                    )
                });
                return out;
            }
            i -= 1;
            if cur[i] < m {
                cur[i] += 1;
                break;
            }
            cur[i] = -m;
        }
    }
}

/// First element with coordinates in `[-bound, bound]` (first coordinate 0)
/// whose index is prime to `p`.
pub fn witness_search(order: &Order, p: u64, bound: u32) -> Result<Option<Witness>> {
    if bound == 0 {
        return Err(Error::Domain("witness bound must be >= 1".into()));
    }
    let n = order.degree();
    if n < 2 {
        return Ok(None);
    }
    let pb = BigInt::from(p);
    for m in 1..=bound as i64 {
        for v in shell(n, m) {
            let a = OrderElement::from_i64(&v);
            let index = order.element_index(&a)?;
            if !index.is_zero() && index.gcd(&pb).is_one() {
                return Ok(Some(Witness {
                    coords: a.coords,
                    index,
                }));
            }
        }
    }
    Ok(None)
}

/// Degrees and multiplicities of the irreducible factors of the
/// characteristic polynomial of `a` modulo `p`, sorted.
pub fn factor_shape(order: &Order, a: &OrderElement, p: u64) -> Result<Vec<(u32, u32)>> {
    let index = order.element_index(a)?;
    if index.is_zero() || !index.gcd(&BigInt::from(p)).is_one() {
        return Err(Error::IndexNotCoprime {
            index: index.to_string(),
            p,
        });
    }
    let cp = order.charpoly_element(a)?;
    let f = FpPolynomial::from_bigints(p, &cp);
    let mut shape: Vec<(u32, u32)> = fp_poly::factor(&f)?
        .into_iter()
        .map(|(g, e)| (g.degree().unwrap_or(0) as u32, e))
        .collect();
    shape.sort_unstable();
    Ok(shape)
}

/// Number of distinct factors of each degree `1..=n` in a factor shape.
pub fn profile_from_shape(shape: &[(u32, u32)], n: usize) -> Vec<u32> {
    (1..=n as u32)
        .map(|k| shape.iter().filter(|(d, _)| *d == k).count() as u32)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub label: String,
    pub degree: usize,
    #[serde(with = "crate::serde_big::int")]
    pub disc: BigInt,
    pub p: u64,
    pub index_form: String,
    pub lambda_profile: Vec<u32>,
    #[serde(with = "crate::serde_big::vec")]
    pub gbar_table: Vec<BigInt>,
    pub verdict_counts: bool,
    pub verdict_form: bool,
    pub failing_degrees: Vec<u32>,
    pub witness_bound: u32,
    pub witness: Option<Witness>,
    pub factor_shape_of_witness: Option<Vec<(u32, u32)>>,
    pub ramification: RamificationProbe,
    pub supplementary: SupplementaryReport,
}

/// Runs both criteria, requires them to agree, and attaches a witness and
/// its factor shape (when `p` is not a common divisor) and the
/// supplementary field.
pub fn analyze(order: &Order, p: u64, bound: u32) -> Result<AnalysisReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = order.degree();
    let delta = index_form(order)?;
    let lambda_profile = lambda_profile(order, p)?;
    let gbar_table = gbar_table(p, n)?;
    let failing = failing_degrees(&lambda_profile, &gbar_table);
    let verdict_counts = !failing.is_empty();
    let verdict_form = is_cid_form_of(&delta, p)?;
    if verdict_counts != verdict_form {
        return Err(Error::InternalInconsistency(format!(
            "{} at p={p}: prime counts say {verdict_counts}, index form says {verdict_form}",
            order.label()
        )));
    }
    let (witness, shape) = if verdict_counts {
        (None, None)
    } else {
        match witness_search(order, p, bound)? {
            Some(w) => {
                let shape = factor_shape(order, &OrderElement::new(w.coords.clone()), p)?;
                if profile_from_shape(&shape, n) != lambda_profile {
                    return Err(Error::InternalInconsistency(format!(
                        "{} at p={p}: factor shape {shape:?} disagrees with prime counts {lambda_profile:?}",
                        order.label()
                    )));
                }
                (Some(w), Some(shape))
            }
            None => (None, None),
        }
    };
    let names = MPoly::u_names(n);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(AnalysisReport {
        label: order.label().to_string(),
        degree: n,
        disc: order.disc().clone(),
        p,
        index_form: delta.display_with(&names),
        lambda_profile,
        gbar_table,
        verdict_counts,
        verdict_form,
        failing_degrees: failing,
        witness_bound: bound,
        witness,
        factor_shape_of_witness: shape,
        ramification: ramification_probe(order, p)?,
        supplementary: supplementary_report_of(&delta, p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periods::{period_order, PeriodFieldSpec};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn dedekind() -> Order {
        Order::from_power_basis(
            "dedekind",
            &ints(&[-8, -2, -1, 1]),
            &[ints(&[2, 0, 0]), ints(&[0, 2, 0]), ints(&[0, 1, 1])],
            &BigInt::from(2),
        )
        .unwrap()
    }

    fn golden() -> Order {
        Order::from_power_basis(
            "golden",
            &ints(&[-1, -1, 1]),
            &[ints(&[1, 0]), ints(&[0, 1])],
            &BigInt::one(),
        )
        .unwrap()
    }

    #[test]
    fn gbar_tables() {
        assert_eq!(gbar_table(2, 3).unwrap(), ints(&[2, 1, 2]));
        assert_eq!(gbar_table(3, 2).unwrap(), ints(&[3, 3]));
        assert_eq!(gbar_table(7, 1).unwrap(), ints(&[7]));
    }

    #[test]
    fn count_criterion() {
        assert_eq!(is_cid_counts(&dedekind(), 2).unwrap(), (true, vec![1]));
        assert_eq!(is_cid_counts(&dedekind(), 3).unwrap(), (false, vec![]));
    }

    #[test]
    fn form_criterion() {
        assert!(is_cid_form(&dedekind(), 2).unwrap());
        assert!(!is_cid_form(&dedekind(), 3).unwrap());
        for p in [2, 3, 5, 7] {
            assert!(!is_cid_form(&golden(), p).unwrap());
        }
    }

    #[test]
    fn shells_are_ordered() {
        let s = shell(3, 1);
        assert_eq!(s.len(), 8);
        assert_eq!(s[0], vec![0, 1, 0]);
        assert_eq!(s[1], vec![0, -1, 0]);
        assert_eq!(s[2], vec![0, 0, 1]);
        assert_eq!(shell(3, 2).len(), 25 - 9);
    }

    #[test]
    fn witnesses() {
        let w = witness_search(&dedekind(), 3, 1).unwrap().unwrap();
        assert_eq!(w.coords, ints(&[0, 1, 0]));
        assert_eq!(w.index, BigInt::from(2));
        assert!(witness_search(&dedekind(), 2, 3).unwrap().is_none());
        let w = witness_search(&golden(), 2, 1).unwrap().unwrap();
        assert_eq!(w.index, BigInt::from(1));
    }

    #[test]
    fn shapes() {
        let alpha = OrderElement::from_i64(&[0, 1, 0]);
        assert_eq!(factor_shape(&dedekind(), &alpha, 3).unwrap(), vec![(3, 1)]);
        let shape = factor_shape(&dedekind(), &alpha, 5).unwrap();
        assert_eq!(
            profile_from_shape(&shape, 3),
            lambda_profile(&dedekind(), 5).unwrap()
        );
        let g_alpha = OrderElement::from_i64(&[0, 1]);
        assert_eq!(
            factor_shape(&golden(), &g_alpha, 11).unwrap(),
            vec![(1, 1), (1, 1)]
        );
        assert!(matches!(
            factor_shape(&dedekind(), &alpha, 2),
            Err(Error::IndexNotCoprime { .. })
        ));
    }

    #[test]
    fn analyses() {
        let r = analyze(&dedekind(), 2, 3).unwrap();
        assert!(r.verdict_counts && r.verdict_form);
        assert!(r.witness.is_none());
        assert_eq!(r.supplementary.nu, Some(3));
        let r = analyze(&dedekind(), 3, 1).unwrap();
        assert!(!r.verdict_counts && !r.verdict_form);
        assert_eq!(r.witness.unwrap().coords, ints(&[0, 1, 0]));
        let o = period_order(&PeriodFieldSpec::new(13, 4).unwrap()).unwrap();
        let r = analyze(&o, 3, 2).unwrap();
        assert!(r.verdict_counts && r.verdict_form);
        assert_eq!(r.lambda_profile[0], 4);
        assert_eq!(r.gbar_table[0], BigInt::from(3));
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = analyze(&dedekind(), 3, 1).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"disc\":\"-503\""));
        let back: AnalysisReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
