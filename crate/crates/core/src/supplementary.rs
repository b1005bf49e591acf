//! Supplementary fields: an abelian field in which the prime `p` has a
//! residue degree for which the index form stops vanishing identically, so
//! that some element of the composite has index prime to `p`.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{self, is_prime, mod_pow, multiplicative_order};
use crate::error::{Error, Result};
use crate::fp_poly::{ExtFieldCtx, FpPolynomial};
use crate::multipoly::{self, in_system, DivisorSystem, FieldEvaluator, MPoly};
use crate::number_field::{index_form, Order};
use crate::periods::{period_min_poly, PeriodFieldSpec};

/// Largest point count searched when confirming a verdict by evaluation.
pub const POINT_SEARCH_LIMIT: u128 = 1 << 20;

/// Conductors above this get no period polynomial in reports.
pub const PERIOD_POLY_CONDUCTOR_LIMIT: u64 = 2000;

/// Every `k` with `p^k <= E` (E the largest exponent of a single variable in
/// `delta`) for which `delta` lies in the order-`k` divisor system. Beyond
/// that range reduction only touches coefficients, so nothing else can
/// qualify.
pub fn membership_indices_of(delta: &MPoly, p: u64) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let e = delta.max_var_exponent() as u128;
    let mut out = Vec::new();
    let mut k = 1u32;
    while arith::checked_pow(p, k).is_some_and(|q| q <= e) {
        if in_system(delta, &DivisorSystem::new(p, k, delta.nvars())?) {
            out.push(k);
        }
        k += 1;
    }
    Ok(out)
}

pub fn membership_indices(order: &Order, p: u64) -> Result<Vec<u32>> {
    membership_indices_of(&index_form(order)?, p)
}

/// Maximal elements under divisibility. The input must be closed under
/// taking divisors.
pub fn minimal_index_set(ks: &[u32]) -> Result<Vec<u32>> {
    let missing: Vec<u32> = ks
        .iter()
        .flat_map(|&k| arith::divisors(k as u64).into_iter().map(|d| d as u32))
        .filter(|d| !ks.contains(d))
        .collect();
    if !missing.is_empty() {
        let mut m = missing;
        m.sort_unstable();
        m.dedup();
        return Err(Error::ClosureViolation(m));
    }
    let mut out: Vec<u32> = ks
        .iter()
        .copied()
        .filter(|&k| !ks.iter().any(|&j| j != k && j % k == 0))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `prod (p^{k_i} - 1)` over the minimal set.
pub fn obstruction_product(p: u64, minimal: &[u32]) -> BigInt {
    minimal
        .iter()
        .map(|&k| arith::big_pow(p, k as u64) - 1)
        .fold(BigInt::one(), |acc, x| acc * x)
}

/// Smallest prime other than `p` not dividing the obstruction product.
pub fn find_nu(p: u64, minimal: &[u32]) -> u64 {
    let f = obstruction_product(p, minimal);
    let mut q = 2u64;
    loop {
        if is_prime(q) && q != p && (&f % q) != BigInt::from(0) {
            return q;
        }
        q += 1;
    }
}

/// Largest `mu | nu - 1` with `nu` not dividing `prod (p^{mu k_i} - 1)`,
/// returned together with `lambda = (nu - 1) / mu`.
pub fn find_mu_lambda(p: u64, minimal: &[u32], nu: u64) -> Result<(u64, u64)> {
    if !is_prime(nu) || nu == p {
        return Err(Error::Domain(format!(
            "{nu} is not a prime different from {p}"
        )));
    }
    let fits = |mu: u64| minimal.iter().all(|&k| mod_pow(p, mu * k as u64, nu) != 1);
    arith::divisors(nu - 1)
        .into_iter()
        .rev()
        .find(|&mu| fits(mu))
        .map(|mu| (mu, (nu - 1) / mu))
        .ok_or_else(|| {
            Error::InternalInconsistency(format!(
                "no admissible subfield degree for nu={nu}, p={p}"
            ))
        })
}

/// Residue degree of `p` in the degree-`lambda` subfield of `Q(zeta_nu)`.
pub fn residue_degree(p: u64, nu: u64, lambda: u64) -> Result<u32> {
    let mu = (nu - 1) / lambda;
    multiplicative_order(mod_pow(p, mu, nu), nu)
        .map(|k| k as u32)
        .ok_or_else(|| Error::Domain(format!("{p} is not invertible mod {nu}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationStatus {
    /// A point with nonzero value was found.
    Verified,
    /// The index form lies in the divisor system for this residue degree.
    Refuted,
    /// Not a member symbolically, but the point space was too large to search.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub status: VerificationStatus,
    pub residue_degree: u32,
    /// Defining polynomial of the residue field, in `t`.
    pub field_modulus: String,
    pub point: Option<Vec<String>>,
}

/// First point of `F_{p^k}^n` (odometer order, last coordinate fastest)
/// where `delta` is nonzero, or `None` if it vanishes everywhere.
pub fn first_nonvanishing_point(
    delta: &MPoly,
    ctx: &ExtFieldCtx,
) -> Result<Option<Vec<FpPolynomial>>> {
    let n = delta.nvars();
    let q = ctx.size();
    let total = q.checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > POINT_SEARCH_LIMIT {
        return Err(Error::Capacity {
            what: "points in the search space",
            size: total,
            limit: POINT_SEARCH_LIMIT,
        });
    }
    let mut idx = vec![0u32; n];
    let q = q as u32;
    if q <= 4096 {
        let ev = FieldEvaluator::new(delta, ctx)?;
        loop {
            if ev.eval_indices(&idx) != 0 {
                return Ok(Some(idx.iter().map(|&i| ev.element(i).clone()).collect()));
            }
            if !advance(&mut idx, q) {
                return Ok(None);
            }
        }
    }
    let elements: Vec<FpPolynomial> = ctx.elements()?.collect();
    loop {
        let point: Vec<FpPolynomial> = idx.iter().map(|&i| elements[i as usize].clone()).collect();
        if !multipoly::eval_over_ext(delta, ctx, &point)?.is_zero() {
            return Ok(Some(point));
        }
        if !advance(&mut idx, q) {
            return Ok(None);
        }
    }
}

fn advance(idx: &mut [u32], q: u32) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < q {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Decides whether the residue degree `k` leaves `delta` outside the
/// divisor system, and if the point space is small enough, exhibits a
/// point where `delta` is nonzero.
pub fn verify_residue_degree(delta: &MPoly, p: u64, k: u32) -> Result<Verification> {
    let ctx = ExtFieldCtx::new(p, k)?;
    let field_modulus = ctx.modulus().display_with("t");
    let member = in_system(delta, &DivisorSystem::new(p, k, delta.nvars())?);
    let searchable = ctx
        .size()
        .checked_pow(delta.nvars() as u32)
        .is_some_and(|t| t <= POINT_SEARCH_LIMIT);
    let (status, point) = match (member, searchable) {
        (true, _) => (VerificationStatus::Refuted, None),
        (false, false) => (VerificationStatus::Unverified, None),
        (false, true) => match first_nonvanishing_point(delta, &ctx)? {
            Some(pt) => (
                VerificationStatus::Verified,
                Some(pt.iter().map(|z| z.display_with("t")).collect()),
            ),
            None => {
                return Err(Error::InternalInconsistency(format!(
                    "index form is outside the order-{k} system mod {p} but vanishes on every point"
                )))
            }
        },
    };
    Ok(Verification {
        status,
        residue_degree: k,
        field_modulus,
        point,
    })
}

/// Checks the candidate `(nu, lambda)` (or the rationals when `nu` is
/// `None`) against the index form.
pub fn verify_supplementary(
    delta: &MPoly,
    p: u64,
    nu: Option<u64>,
    lambda: u64,
) -> Result<Verification> {
    let k = match nu {
        None => 1,
        Some(nu) => residue_degree(p, nu, lambda)?,
    };
    verify_residue_degree(delta, p, k)
}

/// Every smaller candidate must fail: each proper subfield of the chosen
/// cyclotomic field, and the full cyclotomic field of each smaller
/// admissible prime, has a residue degree whose divisor system contains
/// `delta`.
pub fn check_minimality(delta: &MPoly, p: u64, nu: u64, lambda: u64) -> Result<bool> {
    let n = delta.nvars();
    for lam2 in arith::divisors(nu - 1).into_iter().filter(|&l| l < lambda) {
        let k = residue_degree(p, nu, lam2)?;
        if !in_system(delta, &DivisorSystem::new(p, k, n)?) {
            return Ok(false);
        }
    }
    for nu1 in arith::primes_up_to(nu - 1).into_iter().filter(|&q| q != p) {
        let k = residue_degree(p, nu1, nu1 - 1)?;
        if !in_system(delta, &DivisorSystem::new(p, k, n)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupplementaryReport {
    pub p: u64,
    /// Largest single-variable exponent in the index form.
    pub exponent_bound: u32,
    pub membership: Vec<u32>,
    pub minimal: Vec<u32>,
    #[serde(with = "crate::serde_big::int")]
    pub obstruction: BigInt,
    pub nu: Option<u64>,
    pub mu: Option<u64>,
    pub lambda: u64,
    pub description: String,
    #[serde(with = "crate::serde_big::opt_vec")]
    pub period_min_poly: Option<Vec<BigInt>>,
    pub minimality: bool,
    pub verification: Verification,
}

fn ordinal(n: u64) -> String {
    let suffix = match (n % 10, n % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{n}{suffix}")
}

pub fn supplementary_report_of(delta: &MPoly, p: u64) -> Result<SupplementaryReport> {
    let membership = membership_indices_of(delta, p)?;
    let minimal = minimal_index_set(&membership)?;
    let obstruction = obstruction_product(p, &minimal);
    let exponent_bound = delta.max_var_exponent();
    if minimal.is_empty() {
        let verification = verify_supplementary(delta, p, None, 1)?;
        return Ok(SupplementaryReport {
            p,
            exponent_bound,
            membership,
            minimal,
            obstruction,
            nu: None,
            mu: None,
            lambda: 1,
            description: "the rational field".into(),
            period_min_poly: None,
            minimality: true,
            verification,
        });
    }
    let nu = find_nu(p, &minimal);
    let (mu, lambda) = find_mu_lambda(p, &minimal, nu)?;
    let verification = verify_supplementary(delta, p, Some(nu), lambda)?;
    if verification.status == VerificationStatus::Refuted {
        return Err(Error::InternalInconsistency(format!(
            "chosen subfield (nu={nu}, lambda={lambda}) does not separate p={p}"
        )));
    }
    let period_min_poly = if lambda >= 2 && nu <= PERIOD_POLY_CONDUCTOR_LIMIT {
        Some(period_min_poly(&PeriodFieldSpec::new(nu, lambda)?)?)
    } else {
        None
    };
    Ok(SupplementaryReport {
        p,
        exponent_bound,
        membership,
        minimal,
        obstruction,
        nu: Some(nu),
        mu: Some(mu),
        lambda,
        description: if lambda == 1 {
            "the rational field".into()
        } else {
            format!(
                "degree-{lambda} subfield of the {} cyclotomic field",
                ordinal(nu)
            )
        },
        period_min_poly,
        minimality: check_minimality(delta, p, nu, lambda)?,
        verification,
    })
}

pub fn supplementary_report(order: &Order, p: u64) -> Result<SupplementaryReport> {
    supplementary_report_of(&index_form(order)?, p)
}
