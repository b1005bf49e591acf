//! Gaussian periods of prime conductor, computed exactly in `Z[zeta_nu]`,
//! and the cubic-period test for 2 via `4 nu = A^2 + 27 B^2`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{self, is_prime, mod_pow};
use crate::criteria;
use crate::error::{Error, Result};
use crate::number_field::Order;

/// The degree-`lam` subfield of the `nu`-th cyclotomic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodFieldSpec {
    nu: u64,
    lam: u64,
    g: u64,
}

impl PeriodFieldSpec {
    pub fn new(nu: u64, lam: u64) -> Result<Self> {
        if !is_prime(nu) || nu == 2 {
            return Err(Error::NotPrime(nu));
        }
        if lam == 0 || (nu - 1) % lam != 0 {
            return Err(Error::NotDivisor { nu, lam });
        }
        Ok(PeriodFieldSpec {
            nu,
            lam,
            g: arith::least_primitive_root(nu)?,
        })
    }

    /// Same field, periods built from a chosen primitive root.
    pub fn with_primitive_root(nu: u64, lam: u64, g: u64) -> Result<Self> {
        let mut spec = Self::new(nu, lam)?;
        if arith::multiplicative_order(g, nu) != Some(nu - 1) {
            return Err(Error::Domain(format!(
                "{g} is not a primitive root mod {nu}"
            )));
        }
        spec.g = g;
        Ok(spec)
    }

    pub fn conductor(&self) -> u64 {
        self.nu
    }

    pub fn degree(&self) -> u64 {
        self.lam
    }

    pub fn primitive_root(&self) -> u64 {
        self.g
    }

    /// Number of roots of unity summed in each period.
    pub fn period_length(&self) -> u64 {
        (self.nu - 1) / self.lam
    }

    pub fn label(&self) -> String {
        format!("period-{}-{}", self.nu, self.lam)
    }

    /// The expected signed discriminant `(-1)^{r_2} nu^{lam-1}`; the field
    /// is real exactly when the period length is even.
    pub fn expected_disc(&self) -> BigInt {
        let mag = arith::big_pow(self.nu, self.lam - 1);
        if self.period_length() % 2 == 1 && (self.lam / 2) % 2 == 1 {
            -mag
        } else {
            mag
        }
    }
}

/// Elements of `Z[zeta]` in the basis `zeta^1, ..., zeta^{nu-1}`
/// (slot `k - 1` holds the coefficient of `zeta^k`).
struct Cyclotomic {
    nu: usize,
}

impl Cyclotomic {
    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let nu = self.nu;
        let mut by_exp = vec![0i64; nu];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    by_exp[(i + 1 + j + 1) % nu] += x * y;
                }
            }
        }
        // 1 = -(zeta + ... + zeta^{nu-1})
        let c0 = by_exp[0];
        by_exp[1..].iter().map(|&c| c - c0).collect()
    }
}

/// Cosets `C_j = { g^{j + lam t} }` as exponent lists.
fn cosets(spec: &PeriodFieldSpec) -> Vec<Vec<u64>> {
    (0..spec.lam)
        .map(|j| {
            (0..spec.period_length())
                .map(|t| mod_pow(spec.g, j + spec.lam * t, spec.nu))
                .collect()
        })
        .collect()
}

/// Coordinates of `eta_i * eta_j` in the basis `eta_0..eta_{lam-1}`.
fn period_products(spec: &PeriodFieldSpec) -> Result<Vec<Vec<Vec<i64>>>> {
    let nu = spec.nu as usize;
    let cyc = Cyclotomic { nu };
    let cs = cosets(spec);
    let etas: Vec<Vec<i64>> = cs
        .iter()
        .map(|c| {
            let mut v = vec![0i64; nu - 1];
            for &k in c {
                v[k as usize - 1] = 1;
            }
            v
        })
        .collect();
    let lam = spec.lam as usize;
    let mut out = vec![vec![Vec::new(); lam]; lam];
    for i in 0..lam {
        for j in i..lam {
            let prod = cyc.mul(&etas[i], &etas[j]);
            let coords: Vec<i64> = cs.iter().map(|c| prod[c[0] as usize - 1]).collect();
            for (c, &x) in cs.iter().zip(&coords) {
                if c.iter().any(|&k| prod[k as usize - 1] != x) {
                    return Err(Error::InternalInconsistency(format!(
                        "product of periods {i}, {j} for nu={} is not constant on cosets",
                        spec.nu
                    )));
                }
            }
            out[i][j] = coords.clone();
            out[j][i] = coords;
        }
    }
    Ok(out)
}

/// The ring of integers of the period field, in the basis
/// `(1, eta_1, ..., eta_{lam-1})`.
pub fn period_order(spec: &PeriodFieldSpec) -> Result<Order> {
    let lam = spec.lam as usize;
    if lam < 2 {
        return Err(Error::Domain("period orders need degree >= 2".into()));
    }
    let prods = period_products(spec)?;
    // eta_0 = -1 - sum_{k >= 1} eta_k
    let to_order = |c: &[i64]| -> Vec<BigInt> {
        let mut v = vec![BigInt::from(-c[0])];
        v.extend(c[1..].iter().map(|&x| BigInt::from(x - c[0])));
        v
    };
    let unit =
        |k: usize| -> Vec<BigInt> { (0..lam).map(|i| BigInt::from((i == k) as i32)).collect() };
    let mut table = vec![vec![Vec::new(); lam]; lam];
    for i in 0..lam {
        for j in 0..lam {
            table[i][j] = match (i, j) {
                (0, _) => unit(j),
                (_, 0) => unit(i),
                _ => to_order(&prods[i][j]),
            };
        }
    }
    let order = Order::from_table(spec.label(), table)?;
    let expect = spec.expected_disc();
    if order.disc() != &expect {
        return Err(Error::InternalInconsistency(format!(
            "period order ({}, {}) has disc {} instead of {expect}",
            spec.nu,
            spec.lam,
            order.disc()
        )));
    }
    Ok(order)
}

/// Minimal polynomial of `eta_1`, coefficients `c_0..c_lam`.
pub fn period_min_poly(spec: &PeriodFieldSpec) -> Result<Vec<BigInt>> {
    let order = period_order(spec)?;
    order.charpoly_element(&order.basis(1))
}

/// `nu = alpha^2 - 3 alpha beta + 9 beta^2`, `4 nu = A^2 + 27 B^2`, with
/// `A = 2 alpha - 3 beta`, `B = beta > 0` and `A = 1 (mod 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicDecomposition {
    pub nu: u64,
    pub alpha: i64,
    pub beta: i64,
    pub a: i64,
    pub b: i64,
}

pub fn cubic_decomposition(nu: u64) -> Result<CubicDecomposition> {
    if !is_prime(nu) {
        return Err(Error::NotPrime(nu));
    }
    if nu % 3 != 1 {
        return Err(Error::Domain(format!("{nu} is not 1 mod 3")));
    }
    let four_nu = 4 * nu as i64;
    let mut b = 1i64;
    while 27 * b * b <= four_nu {
        let rest = four_nu - 27 * b * b;
        let r = (rest as f64).sqrt().round() as i64;
        let root = (r.saturating_sub(2)..=r + 2).find(|&x| x >= 0 && x * x == rest);
        if let Some(root) = root {
            let a = if root.rem_euclid(3) == 1 { root } else { -root };
            if a.rem_euclid(3) != 1 {
                return Err(Error::NoRepresentation(nu));
            }
            let alpha = (a + 3 * b) / 2;
            let d = CubicDecomposition {
                nu,
                alpha,
                beta: b,
                a,
                b,
            };
            if alpha * alpha - 3 * alpha * b + 9 * b * b != nu as i64
                || a * a + 27 * b * b != four_nu
            {
                return Err(Error::InternalInconsistency(format!(
                    "bad decomposition of {nu}"
                )));
            }
            return Ok(d);
        }
        b += 1;
    }
    Err(Error::NoRepresentation(nu))
}

/// True iff 2 is a common index divisor of the cubic period field of
/// conductor `nu`: exactly when `B` is even.
pub fn two_is_cid_cubic(nu: u64) -> Result<bool> {
    Ok(cubic_decomposition(nu)?.b % 2 == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicCheck {
    pub decomposition: CubicDecomposition,
    pub parity_verdict: bool,
    pub counts_verdict: bool,
    pub form_verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicSurvey {
    pub limit: u64,
    pub hits: Vec<u64>,
    pub checks: Vec<CubicCheck>,
}

/// Composite entries that appear in the classical published list for
/// primes below 200; reported alongside the survey.
pub const PUBLISHED_COMPOSITE_ENTRIES: &[u64] = &[189];

/// Every prime `nu = 1 (mod 3)` up to `limit` whose cubic period field has 2
/// as a common index divisor. Each candidate is decided three ways (parity of
/// `B`, prime counts, index form) and any disagreement is an error.
pub fn cubic_survey(limit: u64) -> Result<CubicSurvey> {
    if limit < 7 {
        return Err(Error::Domain("survey limit must be at least 7".into()));
    }
    let mut hits = Vec::new();
    let mut checks = Vec::new();
    for nu in arith::primes_up_to(limit)
        .into_iter()
        .filter(|q| q % 3 == 1)
    {
        let decomposition = cubic_decomposition(nu)?;
        let parity_verdict = decomposition.b % 2 == 0;
        let order = period_order(&PeriodFieldSpec::new(nu, 3)?)?;
        let (counts_verdict, _) = criteria::is_cid_counts(&order, 2)?;
        let form_verdict = criteria::is_cid_form(&order, 2)?;
        if parity_verdict != counts_verdict || counts_verdict != form_verdict {
            return Err(Error::InternalInconsistency(format!(
                "cubic period field {nu}: parity {parity_verdict}, counts {counts_verdict}, form {form_verdict}"
            )));
        }
        if parity_verdict {
            hits.push(nu);
        }
        checks.push(CubicCheck {
            decomposition,
            parity_verdict,
            counts_verdict,
            form_verdict,
        });
    }
    Ok(CubicSurvey {
        limit,
        hits,
        checks,
    })
}

/// One-line remark about composite entries in the published list that fall
/// inside the surveyed range.
pub fn survey_note(limit: u64) -> Option<String> {
    let inside: Vec<String> = PUBLISHED_COMPOSITE_ENTRIES
        .iter()
        .filter(|&&x| x <= limit)
        .map(|x| {
            let f: Vec<String> = arith::factorize(*x)
                .into_iter()
                .map(|(q, e)| {
                    if e == 1 {
                        q.to_string()
                    } else {
                        format!("{q}^{e}")
                    }
                })
                .collect();
            format!("{x} = {}", f.join(" * "))
        })
        .collect();
    (!inside.is_empty()).then(|| {
        format!(
            "note: the classical published list for this range also names {}, which is not prime and so cannot be a conductor",
            inside.join(", ")
        )
    })
}
