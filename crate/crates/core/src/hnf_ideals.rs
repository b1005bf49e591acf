//! Ideals of an order as full-rank lattices in row Hermite normal form, and
//! the count of prime divisors of `p` per residue degree read off from the
//! norms of Frobenius ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{self, moebius};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::number_field::{Order, OrderElement};

/// Row Hermite normal form of the lattice spanned by `rows`.
pub fn hnf(rows: &[Vec<BigInt>]) -> Result<IntMatrix> {
    hnf_impl(rows, None)
}

/// Row Hermite normal form of `span(rows) + modulus * Z^n`. Every entry is
/// kept reduced modulo `modulus` during elimination.
pub fn hnf_modular(rows: &[Vec<BigInt>], modulus: &BigInt) -> Result<IntMatrix> {
    if !modulus.is_positive() {
        return Err(Error::Domain("HNF modulus must be positive".into()));
    }
    hnf_impl(rows, Some(modulus))
}

fn hnf_impl(rows: &[Vec<BigInt>], modulus: Option<&BigInt>) -> Result<IntMatrix> {
    let n = match rows.first() {
        Some(r) => r.len(),
        None => return Err(Error::RankDeficient),
    };
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("rows of unequal length".into()));
    }
    let reduce = |v: &mut Vec<BigInt>, from: usize| {
        if let Some(m) = modulus {
            for x in v.iter_mut().skip(from) {
                *x = x.mod_floor(m);
            }
        }
    };
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .cloned()
        .map(|mut r| {
            reduce(&mut r, 0);
            r
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut out: IntMatrix = Vec::with_capacity(n);
    for c in 0..n {
        if let Some(m) = modulus {
            let mut e = vec![BigInt::zero(); n];
            e[c] = m.clone();
            work.push(e);
        }
        let (mut active, rest): (Vec<_>, Vec<_>) = work.into_iter().partition(|r| !r[c].is_zero());
        work = rest;
        let Some(mut pivot) = active.pop() else {
            return Err(Error::RankDeficient);
        };
        for r in active {
            let eg = pivot[c].extended_gcd(&r[c]);
            let (a, b) = (&pivot[c] / &eg.gcd, &r[c] / &eg.gcd);
            let combined: Vec<BigInt> = pivot
                .iter()
                .zip(&r)
                .map(|(x, y)| &eg.x * x + &eg.y * y)
                .collect();
            let mut eliminated: Vec<BigInt> =
                pivot.iter().zip(&r).map(|(x, y)| &b * x - &a * y).collect();
            pivot = combined;
            reduce(&mut pivot, c + 1);
            reduce(&mut eliminated, c + 1);
            if eliminated.iter().any(|x| !x.is_zero()) {
                work.push(eliminated);
            }
        }
        if pivot[c].is_negative() {
            pivot.iter_mut().for_each(|x| *x = -&*x);
        }
        reduce(&mut pivot, c + 1);
        out.push(pivot);
    }
    for j in 1..n {
        for i in 0..j {
            let q = out[i][j].div_floor(&out[j][j]);
            if !q.is_zero() {
                let row_j = out[j].clone();
                for (x, y) in out[i].iter_mut().zip(&row_j) {
                    *x -= &q * y;
                }
            }
        }
    }
    Ok(out)
}

/// A full-rank sublattice of the order's coordinate lattice, closed under
/// multiplication by the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfLattice {
    basis: IntMatrix,
}

impl HnfLattice {
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn norm(&self) -> BigInt {
        lattice_norm(self)
    }

    /// Membership by back-substitution against the triangular basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut r = v.to_vec();
        for (c, row) in self.basis.iter().enumerate() {
            let (q, rem) = r[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    /// True when `self` is contained in `m * O`.
    pub fn is_divisible_by(&self, m: &BigInt) -> bool {
        self.basis.iter().flatten().all(|x| x.is_multiple_of(m))
    }
}

fn products_with_basis(
    order: &Order,
    gens: &[OrderElement],
    modulus: &BigInt,
) -> Result<IntMatrix> {
    let mut rows = Vec::with_capacity(gens.len() * order.degree());
    for g in gens {
        for j in 0..order.degree() {
            rows.push(order.mul_mod(g, &order.basis(j), modulus)?.coords);
        }
    }
    Ok(rows)
}

fn check_ideal(order: &Order, lat: &HnfLattice) -> Result<()> {
    for row in &lat.basis {
        let v = OrderElement::new(row.clone());
        for j in 1..order.degree() {
            if !lat.contains(&order.mul(&v, &order.basis(j))?.coords) {
                return Err(Error::InternalInconsistency(
                    "HNF lattice is not closed under multiplication".into(),
                ));
            }
        }
    }
    Ok(())
}

/// The ideal generated by `gens`.
pub fn ideal_from_elements(order: &Order, gens: &[OrderElement]) -> Result<HnfLattice> {
    let mut modulus = None;
    for g in gens {
        let nm = order.norm(g)?;
        if !nm.is_zero() {
            modulus = Some(nm.abs());
            break;
        }
    }
    // N(g) lies in the ideal generated by g.
    let modulus = modulus.ok_or(Error::RankDeficient)?;
    let rows = products_with_basis(order, gens, &modulus)?;
    let lat = HnfLattice {
        basis: hnf_modular(&rows, &modulus)?,
    };
    check_ideal(order, &lat)?;
    Ok(lat)
}

/// Index of the lattice in `Z^n`: the product of the HNF diagonal.
pub fn lattice_norm(lat: &HnfLattice) -> BigInt {
    lat.basis
        .iter()
        .enumerate()
        .map(|(i, r)| r[i].clone())
        .product()
}

/// Exact p-adic valuation of a positive integer.
pub fn vp(m: &BigInt, p: u64) -> Result<u32> {
    arith::valuation(m, p)
}

/// The integer `(1+p)^{p^nu} - (1+p)`, which stands in for `xi_1^{p^nu} - xi_1`.
pub fn frobenius_integer(p: u64, nu: u32) -> BigInt {
    let e = arith::big_pow(p, nu as u64);
    let base = BigInt::from(p + 1);
    num_traits::pow(base.clone(), e.to_usize().expect("exponent fits in usize")) - base
}

/// Ideal generated by `xi_i^{p^nu} - xi_i` for `i >= 2` together with
/// `(1+p)^{p^nu} - (1+p)`.
pub fn frobenius_ideal(order: &Order, p: u64, nu: u32) -> Result<HnfLattice> {
    if nu == 0 {
        return Err(Error::Domain("Frobenius exponent must be >= 1".into()));
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = frobenius_integer(p, nu);
    let e = arith::big_pow(p, nu as u64);
    let mut gens = Vec::with_capacity(order.degree());
    for i in 1..order.degree() {
        let xi = order.basis(i);
        let g = order.sub(&order.pow_mod(&xi, &e, &m)?, &xi)?;
        gens.push(g);
    }
    // m * O lies in the ideal, so the rows of g * xi_j may be reduced mod m
    let rows = products_with_basis(order, &gens, &m)?;
    Ok(HnfLattice {
        basis: hnf_modular(&rows, &m)?,
    })
}

/// p-adic valuations of `N(I_1), ..., N(I_n)`.
pub fn frobenius_valuations(order: &Order, p: u64, upto: u32) -> Result<Vec<u32>> {
    (1..=upto)
        .map(|nu| vp(&lattice_norm(&frobenius_ideal(order, p, nu)?), p))
        .collect()
}

fn lambda_from_valuations(vals: &[u32], kappa: u32) -> Result<u32> {
    let mut l: i64 = 0;
    for d in arith::divisors(kappa as u64) {
        l += moebius(kappa as u64 / d)? as i64 * vals[d as usize - 1] as i64;
    }
    if l < 0 || l % kappa as i64 != 0 {
        return Err(Error::NonIntegralLambda { kappa, value: l });
    }
    Ok((l / kappa as i64) as u32)
}

/// Number of distinct prime divisors of `p` of residue degree `kappa`.
pub fn lambda_kappa(order: &Order, p: u64, kappa: u32) -> Result<u32> {
    if kappa == 0 || kappa as usize > order.degree() {
        return Err(Error::Domain(format!(
            "residue degree {kappa} outside 1..={}",
            order.degree()
        )));
    }
    let vals = frobenius_valuations(order, p, kappa)?;
    lambda_from_valuations(&vals, kappa)
}

/// `(lambda_1, ..., lambda_n)`.
pub fn lambda_profile(order: &Order, p: u64) -> Result<Vec<u32>> {
    let n = order.degree() as u32;
    let vals = frobenius_valuations(order, p, n)?;
    (1..=n).map(|k| lambda_from_valuations(&vals, k)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RamificationProbe {
    /// Least `nu` with `xi_i^{p^nu} = xi_i` in `O/pO` for every `i`.
    pub unramified_witness: Option<u32>,
    pub divides_disc: bool,
}

/// Matrix of the Frobenius `x -> x^p` on `O/pO`: row `i` holds `xi_i^p mod p`.
pub fn frobenius_matrix_mod_p(order: &Order, p: u64) -> Result<Vec<Vec<u64>>> {
    let pb = BigInt::from(p);
    (0..order.degree())
        .map(|i| {
            let c = order.pow_mod(&order.basis(i), &pb, &pb)?;
            Ok(c.coords
                .iter()
                .map(|x| x.to_u64().expect("residue fits"))
                .collect())
        })
        .collect()
}

fn matmul_mod(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(0u64, |acc, k| {
                        ((acc as u128 + a[i][k] as u128 * b[k][j] as u128) % p as u128) as u64
                    })
                })
                .collect()
        })
        .collect()
}

/// Searches `nu = 1..lcm(1..n)` for a Frobenius ideal contained in `pO`.
pub fn ramification_probe(order: &Order, p: u64) -> Result<RamificationProbe> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = order.degree();
    let frob = frobenius_matrix_mod_p(order, p)?;
    let identity: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as u64).collect())
        .collect();
    let mut cur = frob.clone();
    let mut witness = None;
    for nu in 1..=arith::lcm_upto(n as u64) {
        if cur == identity {
            witness = Some(nu as u32);
            break;
        }
        cur = matmul_mod(&cur, &frob, p);
    }
    let divides_disc = order.disc().is_multiple_of(&BigInt::from(p));
    if witness.is_some() && divides_disc {
        return Err(Error::InternalInconsistency(format!(
            "{p} divides the discriminant of {} but has a Frobenius witness",
            order.label()
        )));
    }
    Ok(RamificationProbe {
        unramified_witness: witness,
        divides_disc,
    })
}
