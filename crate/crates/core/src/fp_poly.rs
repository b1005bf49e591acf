//! Dense polynomials over prime fields, irreducible counting and enumeration,
//! factorization by trial division, and small extension fields F_{p^k}.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{self, divisors, moebius};
use crate::error::{Error, Result};

/// Largest number of candidates any enumeration in this module will visit.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// A polynomial over F_p, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPolynomial {
    /// Builds a polynomial from signed coefficients (lowest degree first),
    /// reducing each one into `[0, p)`.
    pub fn new(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i64;
        Self::from_residues(p, coeffs.iter().map(|c| c.rem_euclid(pi) as u64).collect())
    }

    pub fn from_bigints(p: u64, coeffs: &[BigInt]) -> Self {
        let pb = BigInt::from(p);
        let res = coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        Self::from_residues(p, res)
    }

    pub fn from_residues(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPolynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPolynomial { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::from_residues(p, vec![c % p])
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Self {
        Self::from_residues(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn inv(&self, a: u64) -> u64 {
        arith::mod_pow(a, self.p - 2, self.p)
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::from_residues(
            self.p,
            self.coeffs.iter().map(|&a| self.mulmod(a, c)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv(self.leading()))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Self::from_residues(self.p, c)
    }

    pub fn neg(&self) -> Self {
        Self::from_residues(
            self.p,
            self.coeffs.iter().map(|&a| (self.p - a) % self.p).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + self.mulmod(a, b)) % self.p;
            }
        }
        Self::from_residues(self.p, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = self.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = self.mulmod(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let t = self.mulmod(c, b);
                rem[i - dd + j] = (rem[i - dd + j] + self.p - t) % self.p;
            }
        }
        (
            Self::from_residues(self.p, quot),
            Self::from_residues(self.p, rem),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Evaluates at a point of F_p.
    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (self.mulmod(acc, x) + c) % self.p)
    }

    /// Formats with the given variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// `x^{p^d} mod f`, by `d` successive p-th powers.
fn x_pow_p_pow(f: &FpPolynomial, d: usize) -> FpPolynomial {
    let p = f.modulus();
    let mut acc = FpPolynomial::x(p).rem(f);
    for _ in 0..d {
        acc = acc.pow_mod(p as u128, f);
    }
    acc
}

fn check_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Number of monic irreducible polynomials of degree `kappa` over F_p,
/// `(1/kappa) * sum_{d | kappa} mu(kappa/d) p^d`.
pub fn count_irreducible(p: u64, kappa: u32) -> Result<BigInt> {
    check_prime(p)?;
    if kappa == 0 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let mut total = BigInt::zero();
    for d in divisors(kappa as u64) {
        let mu = moebius(kappa as u64 / d)?;
        if mu != 0 {
            total += BigInt::from(mu) * arith::big_pow(p, d);
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(kappa));
    if !r.is_zero() || !q.is_positive() {
        return Err(Error::InternalInconsistency(format!(
            "necklace sum for p={p}, kappa={kappa} is not a positive multiple of kappa"
        )));
    }
    Ok(q)
}

/// Irreducibility test against `x^{p^d} - x`.
pub fn is_irreducible(f: &FpPolynomial) -> Result<bool> {
    let k = match f.degree() {
        None | Some(0) => {
            return Err(Error::Domain(
                "irreducibility is undefined for zero or constant polynomials".into(),
            ))
        }
        Some(k) => k,
    };
    let f = f.monic();
    let p = f.modulus();
    let x = FpPolynomial::x(p);
    if !x_pow_p_pow(&f, k).sub(&x).rem(&f).is_zero() {
        return Ok(false);
    }
    for (q, _) in arith::factorize(k as u64) {
        let g = x_pow_p_pow(&f, k / q as usize).sub(&x);
        if f.gcd(&g).degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn enumeration_guard(p: u64, k: u32, what: &'static str) -> Result<u64> {
    match arith::checked_pow(p, k) {
        Some(n) if n <= ENUMERATION_LIMIT => Ok(n as u64),
        other => Err(Error::Capacity {
            what,
            size: other.unwrap_or(u128::MAX),
            limit: ENUMERATION_LIMIT,
        }),
    }
}

/// Residues `c_0..c_{k-1}` whose base-p digits spell `index`.
fn digits(mut index: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(index % p);
        index /= p;
    }
    out
}

/// The `index`-th monic polynomial of degree `k`, ordered by the integer
/// `sum c_i p^i` formed from the lower coefficients.
fn monic_by_index(p: u64, k: usize, index: u64) -> FpPolynomial {
    let mut c = digits(index, p, k);
    c.push(1);
    FpPolynomial::from_residues(p, c)
}

/// All monic irreducibles of degree `kappa` over F_p in enumeration order
/// (lower coefficients read as a base-p integer, constant term least
/// significant).
pub fn enumerate_irreducibles(p: u64, kappa: u32) -> Result<Vec<FpPolynomial>> {
    check_prime(p)?;
    if kappa == 0 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let total = enumeration_guard(p, kappa, "monic polynomials to enumerate")?;
    let mut out = Vec::new();
    for i in 0..total {
        let f = monic_by_index(p, kappa as usize, i);
        if is_irreducible(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Complete factorization into monic irreducibles with multiplicities,
/// by trial division in increasing degree. Factors come out sorted by
/// degree, then in enumeration order.
pub fn factor(f: &FpPolynomial) -> Result<Vec<(FpPolynomial, u32)>> {
    if f.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let p = f.modulus();
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut kappa = 1usize;
    while rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        if deg < 2 * kappa {
            // no factor of degree < kappa remains, so `rest` is irreducible
            out.push((rest.clone(), 1));
            break;
        }
        for g in enumerate_irreducibles(p, kappa as u32)? {
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&g);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        kappa += 1;
    }
    Ok(out)
}

/// The finite field F_{p^k} = F_p[t]/(modulus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFieldCtx {
    p: u64,
    k: u32,
    modulus: FpPolynomial,
}

impl ExtFieldCtx {
    /// Uses the first monic irreducible of degree `k` in enumeration order.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        check_prime(p)?;
        if k == 0 {
            return Err(Error::Domain("extension degree must be at least 1".into()));
        }
        let total = enumeration_guard(p, k, "field elements")?;
        for i in 0..total {
            let f = monic_by_index(p, k as usize, i);
            if is_irreducible(&f)? {
                return Ok(ExtFieldCtx { p, k, modulus: f });
            }
        }
        Err(Error::InternalInconsistency(format!(
            "no irreducible of degree {k} over F_{p}"
        )))
    }

    pub fn with_modulus(modulus: FpPolynomial) -> Result<Self> {
        let k = modulus
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Domain("modulus must have degree at least 1".into()))?;
        if modulus.leading() != 1 || !is_irreducible(&modulus)? {
            return Err(Error::Domain(format!("{modulus} is not monic irreducible")));
        }
        Ok(ExtFieldCtx {
            p: modulus.modulus(),
            k: k as u32,
            modulus,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &FpPolynomial {
        &self.modulus
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.k)
    }

    pub fn zero(&self) -> FpPolynomial {
        FpPolynomial::zero(self.p)
    }

    pub fn one(&self) -> FpPolynomial {
        FpPolynomial::one(self.p)
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(&self) -> FpPolynomial {
        FpPolynomial::x(self.p).rem(&self.modulus)
    }

    pub fn from_int(&self, c: &BigInt) -> FpPolynomial {
        FpPolynomial::from_bigints(self.p, std::slice::from_ref(c))
    }

    pub fn reduce(&self, a: &FpPolynomial) -> FpPolynomial {
        a.rem(&self.modulus)
    }

    pub fn add(&self, a: &FpPolynomial, b: &FpPolynomial) -> FpPolynomial {
        a.add(b)
    }

    pub fn mul(&self, a: &FpPolynomial, b: &FpPolynomial) -> FpPolynomial {
        a.mul(b).rem(&self.modulus)
    }

    pub fn pow(&self, a: &FpPolynomial, e: u128) -> FpPolynomial {
        a.pow_mod(e, &self.modulus)
    }

    /// Every element of the field, in base-p index order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FpPolynomial> + '_> {
        let total = enumeration_guard(self.p, self.k, "field elements")?;
        Ok((0..total)
            .map(move |i| FpPolynomial::from_residues(self.p, digits(i, self.p, self.k as usize))))
    }
}

/// Free-function form of [`ExtFieldCtx::elements`].
pub fn ext_elements(ctx: &ExtFieldCtx) -> Result<impl Iterator<Item = FpPolynomial> + '_> {
    ctx.elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(p: u64, c: &[i64]) -> FpPolynomial {
        FpPolynomial::new(p, c)
    }

    #[test]
    fn counts_match_small_cases() {
        assert_eq!(count_irreducible(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(count_irreducible(2, 2).unwrap(), BigInt::from(1));
        assert_eq!(count_irreducible(2, 4).unwrap(), BigInt::from(3));
        assert!(count_irreducible(4, 1).is_err());
        assert!(count_irreducible(2, 0).is_err());
    }

    #[test]
    fn enumerations() {
        assert_eq!(
            enumerate_irreducibles(2, 1).unwrap(),
            vec![poly(2, &[0, 1]), poly(2, &[1, 1])]
        );
        assert_eq!(
            enumerate_irreducibles(2, 2).unwrap(),
            vec![poly(2, &[1, 1, 1])]
        );
        assert_eq!(
            enumerate_irreducibles(3, 1).unwrap(),
            vec![poly(3, &[0, 1]), poly(3, &[1, 1]), poly(3, &[2, 1])]
        );
        assert!(matches!(
            enumerate_irreducibles(2, 21),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&poly(2, &[1, 1, 1])).unwrap());
        assert!(!is_irreducible(&poly(2, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(2, &[1, 1, 0, 0, 1])).unwrap());
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(!is_irreducible(&poly(2, &[1, 0, 1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(2, &[1])).is_err());
        assert!(is_irreducible(&FpPolynomial::zero(2)).is_err());
    }

    #[test]
    fn factor_examples() {
        let f = poly(2, &[12, 2, 6, 1, 1]);
        assert_eq!(
            factor(&f).unwrap(),
            vec![(poly(2, &[0, 1]), 3), (poly(2, &[1, 1]), 1)]
        );
        assert_eq!(
            factor(&poly(2, &[1, 1, 1])).unwrap(),
            vec![(poly(2, &[1, 1, 1]), 1)]
        );
        let g = poly(3, &[-8, -2, -1, 1]);
        assert_eq!(g, poly(3, &[1, 1, 2, 1]));
        assert_eq!(factor(&g).unwrap(), vec![(poly(3, &[1, 1, 2, 1]), 1)]);
    }

    #[test]
    fn ext_field_elements() {
        let f2 = ExtFieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.elements().unwrap().count(), 2);
        let f4 = ExtFieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &poly(2, &[1, 1, 1]));
        let els: Vec<_> = f4.elements().unwrap().collect();
        assert_eq!(
            els,
            vec![
                poly(2, &[]),
                poly(2, &[1]),
                poly(2, &[0, 1]),
                poly(2, &[1, 1])
            ]
        );
        let t = f4.generator();
        // t^3 = 1 in F_4
        assert_eq!(f4.pow(&t, 3), f4.one());
        let f3 = ExtFieldCtx::new(3, 1).unwrap();
        assert_eq!(ext_elements(&f3).unwrap().count(), 3);
    }

    #[test]
    fn product_of_irreducibles_is_frobenius_poly() {
        for p in [2u64, 3] {
            for kappa in 1..=4u32 {
                let mut prod = FpPolynomial::one(p);
                for d in divisors(kappa as u64) {
                    for g in enumerate_irreducibles(p, d as u32).unwrap() {
                        prod = prod.mul(&g);
                    }
                }
                let n = p.pow(kappa) as usize;
                let mut c = vec![0u64; n + 1];
                c[n] = 1;
                c[1] = p - 1;
                assert_eq!(
                    prod,
                    FpPolynomial::from_residues(p, c),
                    "p={p} kappa={kappa}"
                );
            }
        }
    }

    #[test]
    fn necklace_sum_is_divisible() {
        for p in [2u64, 3, 5, 7, 11] {
            for kappa in 1..=12u32 {
                assert!(count_irreducible(p, kappa).is_ok());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn factorization_recombines(p in prop::sample::select(vec![2u64, 3]),
                                    coeffs in prop::collection::vec(0i64..3, 1..8usize)) {
            let f = FpPolynomial::new(p, &coeffs);
            prop_assume!(!f.is_zero());
            let mut prod = FpPolynomial::constant(p, f.leading());
            for (g, m) in factor(&f).unwrap() {
                prop_assert!(is_irreducible(&g).unwrap());
                for _ in 0..m {
                    prod = prod.mul(&g);
                }
            }
            prop_assert_eq!(prod, f);
        }
    }
}
