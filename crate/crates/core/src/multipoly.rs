//! Sparse multivariate polynomials over Z.
//!
//! Exponent vectors are stored in a `BTreeMap`, so iteration runs in
//! lexicographic order with variable 0 most significant and the last entry
//! is the lex-leading term. When a polynomial carries the distinguished
//! variable `w` it always sits at index 0.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::fp_poly::{ExtFieldCtx, FpPolynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Shape(format!(
                    "exponent vector of length {} in a {nvars}-variable polynomial",
                    e.len()
                )));
            }
            out.add_term(e, c.into());
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Largest exponent of any single variable in any term.
    pub fn max_var_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// The lexicographically leading term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Multiplies by -1 if needed so that the leading coefficient is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Shape(format!(
                "variable count mismatch: {} vs {}",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Inserts a fresh variable at index 0, shifting the others up.
    pub fn lift_front(&self) -> Self {
        MPoly {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = Vec::with_capacity(e.len() + 1);
                    f.push(0);
                    f.extend_from_slice(e);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Sets variable `var` to zero, keeping the variable count.
    pub fn at_zero(&self, var: usize) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[var] == 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients with respect to variable `var`, lowest power first; the
    /// results live in the remaining `nvars - 1` variables.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars - 1); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest.remove(var) as usize;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    /// Substitutes integer values for all variables.
    pub fn eval_int(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::Shape(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum())
    }

    /// Exact division; `None` when `divisor` does not divide `self` over Z.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let t = Self::monomial(self.nvars, qe, q);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Formats with explicit variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{k}", names[i])
                    }
                })
                .collect();
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono.join("*")
            } else {
                format!("{mag}*{}", mono.join("*"))
            };
            match (idx, c.is_negative()) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }

    /// Names `u1..un`.
    pub fn u_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("u{i}")).collect()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = MPoly::u_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        self.checked_add(rhs).expect("MPoly add")
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self.checked_sub(rhs).expect("MPoly sub")
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        self.checked_mul(rhs).expect("MPoly mul")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// Exact ring arithmetic with a shape check.
pub fn mp_arith(a: &MPoly, b: &MPoly, op: ArithOp) -> Result<MPoly> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

/// Greatest common divisor of the coefficients; 0 for the zero polynomial.
pub fn mp_content(f: &MPoly) -> BigInt {
    arith::big_gcd_all(f.terms.values())
}

fn square_shape(m: &[Vec<MPoly>]) -> Result<(usize, usize)> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    let nvars = m.first().and_then(|r| r.first()).map_or(0, MPoly::nvars);
    if m.iter().flatten().any(|x| x.nvars() != nvars) {
        return Err(Error::Shape(
            "inconsistent variable counts in matrix".into(),
        ));
    }
    Ok((n, nvars))
}

/// Determinant by cofactor expansion, always expanding along the row or
/// column holding the most zero entries.
pub fn mp_det(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let (n, nvars) = square_shape(m)?;
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor(m, &rows, &cols, nvars))
}

fn cofactor(m: &[Vec<MPoly>], rows: &[usize], cols: &[usize], nvars: usize) -> MPoly {
    match rows.len() {
        0 => return MPoly::one(nvars),
        1 => return m[rows[0]][cols[0]].clone(),
        _ => {}
    }
    let zeros_in_row = |r: usize| cols.iter().filter(|&&c| m[r][c].is_zero()).count();
    let zeros_in_col = |c: usize| rows.iter().filter(|&&r| m[r][c].is_zero()).count();
    let (best_row, row_zeros) = rows
        .iter()
        .enumerate()
        .map(|(i, &r)| (i, zeros_in_row(r)))
        .max_by_key(|&(i, z)| (z, std::cmp::Reverse(i)))
        .unwrap();
    let (best_col, col_zeros) = cols
        .iter()
        .enumerate()
        .map(|(j, &c)| (j, zeros_in_col(c)))
        .max_by_key(|&(j, z)| (z, std::cmp::Reverse(j)))
        .unwrap();

    let mut acc = MPoly::zero(nvars);
    if row_zeros >= col_zeros {
        let r = rows[best_row];
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        for (j, &c) in cols.iter().enumerate() {
            let entry = &m[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = cofactor(m, &sub_rows, &sub_cols, nvars);
            let term = entry * &minor;
            acc = if (best_row + j) % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
    } else {
        let c = cols[best_col];
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        for (i, &r) in rows.iter().enumerate() {
            let entry = &m[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let minor = cofactor(m, &sub_rows, &sub_cols, nvars);
            let term = entry * &minor;
            acc = if (i + best_col) % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
    }
    acc
}

/// Determinant by fraction-free (Bareiss) elimination with exact
/// multivariate division.
pub fn mp_det_bareiss(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let (n, nvars) = square_shape(m)?;
    if n == 0 {
        return Ok(MPoly::one(nvars));
    }
    let mut a: Vec<Vec<MPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = MPoly::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).ok_or_else(|| {
                    Error::InternalInconsistency("Bareiss step is not exact".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// `det(w*I - M)` as a polynomial in `(w, vars of M)`, with `w` at index 0.
pub fn charpoly_matrix(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let (n, nvars) = square_shape(m)?;
    let w = MPoly::var(nvars + 1, 0);
    let shifted: Vec<Vec<MPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = -&m[i][j].lift_front();
                    if i == j {
                        &e + &w
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    mp_det(&shifted)
}

/// Splits `f` into its coefficients in `w` (index 0) and checks monicity.
fn monic_coefficients(f: &MPoly) -> Result<Vec<MPoly>> {
    if f.nvars() == 0 {
        return Err(Error::Domain("polynomial has no w variable".into()));
    }
    let c = f.coefficients_in(0);
    let lead = c.last().and_then(MPoly::as_constant);
    if lead != Some(BigInt::one()) {
        return Err(Error::Domain("polynomial is not monic in w".into()));
    }
    Ok(c)
}

/// Power sums `s_0..s_{count-1}` of the roots of a monic polynomial via
/// Newton's identities (integral because the polynomial is monic).
fn power_sums(c: &[MPoly], count: usize) -> Vec<MPoly> {
    let n = c.len() - 1;
    let nv = c[0].nvars();
    let mut s: Vec<MPoly> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            s.push(MPoly::constant(nv, n as i64));
            continue;
        }
        let mut acc = MPoly::zero(nv);
        let upper = if k <= n { k - 1 } else { n };
        for i in 1..=upper {
            acc = &acc + &(&c[n - i] * &s[k - i]);
        }
        if k <= n {
            acc = &acc + &c[n - k].scale(&BigInt::from(k));
        }
        s.push(-&acc);
    }
    s
}

/// Discriminant in `w` of a monic polynomial, in the remaining variables:
/// the determinant of the Hankel matrix of root power sums, which equals
/// the product of squared root differences.
pub fn disc_in_w(f: &MPoly) -> Result<MPoly> {
    let c = monic_coefficients(f)?;
    let n = c.len() - 1;
    if n < 2 {
        return Err(Error::Domain(format!(
            "discriminant needs degree >= 2 in w, got {n}"
        )));
    }
    let s = power_sums(&c, 2 * n - 1);
    let hankel: Vec<Vec<MPoly>> = (0..n)
        .map(|i| (0..n).map(|j| s[i + j].clone()).collect())
        .collect();
    mp_det(&hankel)
}

/// Resultant in `w` (index 0) via the Sylvester determinant.
pub fn resultant_in_w(f: &MPoly, g: &MPoly) -> Result<MPoly> {
    f.check_same(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("resultant with the zero polynomial".into()));
    }
    let a = f.coefficients_in(0);
    let b = g.coefficients_in(0);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let nv = f.nvars() - 1;
    if size == 0 {
        return Ok(MPoly::one(nv));
    }
    let mut syl = vec![vec![MPoly::zero(nv); size]; size];
    for i in 0..n {
        for (j, coef) in a.iter().rev().enumerate() {
            syl[i][i + j] = coef.clone();
        }
    }
    for i in 0..m {
        for (j, coef) in b.iter().rev().enumerate() {
            syl[n + i][i + j] = coef.clone();
        }
    }
    mp_det(&syl)
}

/// Derivative with respect to `w` (index 0).
pub fn derivative_in_w(f: &MPoly) -> MPoly {
    let mut out = MPoly::zero(f.nvars());
    for (e, c) in f.terms() {
        if e[0] > 0 {
            let mut d = e.clone();
            d[0] -= 1;
            out.add_term(d, c * BigInt::from(e[0]));
        }
    }
    out
}

/// Discriminant through the resultant, `(-1)^{n(n-1)/2} Res(f, f')` for
/// monic `f`. Independent of [`disc_in_w`].
pub fn disc_via_resultant(f: &MPoly) -> Result<MPoly> {
    let c = monic_coefficients(f)?;
    let n = c.len() - 1;
    if n < 2 {
        return Err(Error::Domain("discriminant needs degree >= 2 in w".into()));
    }
    let r = resultant_in_w(f, &derivative_in_w(f))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -&r } else { r })
}

/// Kronecker's module `(p; u_1^{p^k} - u_1, ..., u_n^{p^k} - u_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisorSystem {
    p: u64,
    k: u32,
    n: usize,
}

impl DivisorSystem {
    pub fn new(p: u64, k: u32, n: usize) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::Domain("divisor system index must be >= 1".into()));
        }
        Ok(DivisorSystem { p, k, n })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn index(&self) -> u32 {
        self.k
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Folds an exponent with `u^{p^k} = u`; positive exponents stay positive.
    pub fn fold_exponent(&self, e: u32) -> u32 {
        match arith::checked_pow(self.p, self.k) {
            Some(q) if (e as u128) >= q => (((e as u128 - 1) % (q - 1)) + 1) as u32,
            _ => e,
        }
    }
}

/// Canonical representative of `f` modulo the divisor system.
pub fn reduce_mod_system(f: &MPoly, sys: &DivisorSystem) -> MPoly {
    let p = BigInt::from(sys.p);
    let mut out = MPoly::zero(f.nvars());
    for (e, c) in f.terms() {
        let folded = e.iter().map(|&x| sys.fold_exponent(x)).collect();
        out.add_term(folded, c.clone());
    }
    out.terms = out
        .terms
        .into_iter()
        .map(|(e, c)| (e, c.mod_floor(&p)))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    out
}

pub fn in_system(f: &MPoly, sys: &DivisorSystem) -> bool {
    reduce_mod_system(f, sys).is_zero()
}

/// Evaluates `f` at a point of `F_{p^k}^n`.
pub fn eval_over_ext(f: &MPoly, ctx: &ExtFieldCtx, point: &[FpPolynomial]) -> Result<FpPolynomial> {
    if point.len() != f.nvars() {
        return Err(Error::Shape(format!(
            "point of length {} for {} variables",
            point.len(),
            f.nvars()
        )));
    }
    let mut acc = ctx.zero();
    for (e, c) in f.terms() {
        let mut t = ctx.from_int(c);
        if t.is_zero() {
            continue;
        }
        for (z, &k) in point.iter().zip(e) {
            if k > 0 {
                t = ctx.mul(&t, &ctx.pow(z, k as u128));
            }
        }
        acc = ctx.add(&acc, &t);
    }
    Ok(acc)
}

/// Polynomial prepared for repeated evaluation over one finite field: the
/// field is tabulated and every variable's power table is cached per point.
pub struct FieldEvaluator<'a> {
    ctx: &'a ExtFieldCtx,
    elements: Vec<FpPolynomial>,
    mul: Vec<Vec<u32>>,
    terms: Vec<(Vec<u32>, u32)>,
    max_exp: u32,
}

impl<'a> FieldEvaluator<'a> {
    pub fn new(f: &MPoly, ctx: &'a ExtFieldCtx) -> Result<Self> {
        let elements: Vec<FpPolynomial> = ctx.elements()?.collect();
        let q = elements.len();
        if q > 4096 {
            return Err(Error::Capacity {
                what: "field size for tabulated evaluation",
                size: q as u128,
                limit: 4096,
            });
        }
        let index_of = |a: &FpPolynomial| -> u32 {
            let p = ctx.characteristic();
            a.coeffs().iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
        };
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index_of(&ctx.mul(a, b))).collect())
            .collect();
        let terms = f
            .terms()
            .filter_map(|(e, c)| {
                let r = index_of(&ctx.from_int(c));
                (r != 0).then(|| (e.clone(), r))
            })
            .collect();
        Ok(FieldEvaluator {
            ctx,
            elements,
            mul,
            terms,
            max_exp: f.max_var_exponent(),
        })
    }

    pub fn field(&self) -> &ExtFieldCtx {
        self.ctx
    }

    pub fn element(&self, i: u32) -> &FpPolynomial {
        &self.elements[i as usize]
    }

    pub fn field_size(&self) -> usize {
        self.elements.len()
    }

    /// Evaluates at a point given by element indices; returns an index.
    pub fn eval_indices(&self, point: &[u32]) -> u32 {
        let powers: Vec<Vec<u32>> = point
            .iter()
            .map(|&z| {
                let mut v = Vec::with_capacity(self.max_exp as usize + 1);
                v.push(1u32);
                for k in 1..=self.max_exp as usize {
                    v.push(self.mul[v[k - 1] as usize][z as usize]);
                }
                v
            })
            .collect();
        let p = self.ctx.characteristic() as u32;
        let k = self.ctx.degree();
        let mut acc = vec![0u32; k as usize];
        for (e, c) in &self.terms {
            let mut t = *c;
            for (i, &x) in e.iter().enumerate() {
                if t == 0 {
                    break;
                }
                t = self.mul[t as usize][powers[i][x as usize] as usize];
            }
            let mut t = t;
            for slot in acc.iter_mut() {
                *slot = (*slot + t % p) % p;
                t /= p;
            }
        }
        acc.iter().rev().fold(0, |a, &c| a * p + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    fn c(n: usize, v: i64) -> MPoly {
        MPoly::constant(n, v)
    }

    /// 2u2^3 - u2^2 u3 - u2 u3^2 - 2u3^3 in three variables.
    fn dedekind_delta() -> MPoly {
        MPoly::from_terms(
            3,
            vec![
                (vec![0, 3, 0], 2),
                (vec![0, 2, 1], -1),
                (vec![0, 1, 2], -1),
                (vec![0, 0, 3], -2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn setting_a_variable_to_zero() {
        let f =
            MPoly::from_terms(2, vec![(vec![1, 0], 3), (vec![1, 1], 2), (vec![0, 2], -1)]).unwrap();
        let g = MPoly::from_terms(2, vec![(vec![0, 2], -1)]).unwrap();
        assert_eq!(f.at_zero(0), g);
        for y in -3i64..4 {
            let pt = [BigInt::from(0), BigInt::from(y)];
            assert_eq!(f.eval_int(&pt).unwrap(), g.eval_int(&pt).unwrap());
        }
    }

    #[test]
    fn arithmetic() {
        let (a, b) = (u(2, 0), u(2, 1));
        let prod = &(&a + &b) * &(&a - &b);
        assert_eq!(prod, &a.pow(2) - &b.pow(2));
        assert_eq!(&prod + &MPoly::zero(2), prod);
        let x = MPoly::monomial(3, vec![0, 3, 0], 2);
        assert_eq!(&x * &u(3, 2), MPoly::monomial(3, vec![0, 3, 1], 2));
        assert!(mp_arith(&u(2, 0), &u(3, 0), ArithOp::Add).is_err());
    }

    #[test]
    fn content() {
        let f = &MPoly::monomial(3, vec![0, 3, 0], 2) - &MPoly::monomial(3, vec![0, 0, 3], 2);
        assert_eq!(mp_content(&f), BigInt::from(2));
        assert_eq!(mp_content(&dedekind_delta()), BigInt::one());
        assert_eq!(mp_content(&MPoly::zero(3)), BigInt::zero());
    }

    #[test]
    fn determinants() {
        let id: Vec<Vec<MPoly>> = (0..3)
            .map(|i| (0..3).map(|j| c(2, (i == j) as i64)).collect())
            .collect();
        assert_eq!(mp_det(&id).unwrap(), MPoly::one(2));
        let diag = vec![vec![u(2, 0), c(2, 0)], vec![c(2, 0), u(2, 1)]];
        assert_eq!(mp_det(&diag).unwrap(), &u(2, 0) * &u(2, 1));
        assert!(mp_det(&[vec![u(2, 0), u(2, 1)]]).is_err());
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let n = 3;
        let m: Vec<Vec<MPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        &u(3, (i + j) % 3).pow((i * j % 2) as u32 + 1)
                            + &c(3, (i as i64) - (j as i64))
                    })
                    .collect()
            })
            .collect();
        assert_eq!(mp_det(&m).unwrap(), mp_det_bareiss(&m).unwrap());
    }

    #[test]
    fn charpolys() {
        assert_eq!(charpoly_matrix(&[vec![c(1, 0)]]).unwrap(), u(2, 0));
        let m = vec![vec![c(1, 0), c(1, 1)], vec![c(1, 1), c(1, 0)]];
        let w = u(2, 0);
        assert_eq!(charpoly_matrix(&m).unwrap(), &w.pow(2) - &c(2, 1));
    }

    #[test]
    fn symbolic_discriminants() {
        // w^2 + b w + c in (w, b, c)
        let (w, b, cc) = (u(3, 0), u(3, 1), u(3, 2));
        let f = &(&w.pow(2) + &(&b * &w)) + &cc;
        let expect = &MPoly::var(2, 0).pow(2) - &MPoly::var(2, 1).scale(&BigInt::from(4));
        assert_eq!(disc_in_w(&f).unwrap(), expect);
        assert_eq!(disc_via_resultant(&f).unwrap(), expect);

        // w^3 + p w + q
        let f = &(&w.pow(3) + &(&b * &w)) + &cc;
        let (p, q) = (MPoly::var(2, 0), MPoly::var(2, 1));
        let expect = &p.pow(3).scale(&BigInt::from(-4)) - &q.pow(2).scale(&BigInt::from(27));
        assert_eq!(disc_in_w(&f).unwrap(), expect);
        assert_eq!(disc_via_resultant(&f).unwrap(), expect);

        assert!(disc_in_w(&w).is_err());
        assert!(disc_in_w(&(&w.pow(2) + &w.pow(2))).is_err());
    }

    #[test]
    fn exact_division() {
        let (a, b) = (u(2, 0), u(2, 1));
        let f = &(&a + &b) * &(&a - &b);
        assert_eq!(f.div_exact(&(&a + &b)).unwrap(), &a - &b);
        assert!(f.div_exact(&(&a + &c(2, 1))).is_none());
    }

    #[test]
    fn folding() {
        let sys = DivisorSystem::new(2, 1, 1).unwrap();
        assert_eq!(reduce_mod_system(&u(1, 0).pow(2), &sys), u(1, 0));
        assert_eq!(sys.fold_exponent(5), 1);
        assert_eq!(sys.fold_exponent(0), 0);
        let s3 = DivisorSystem::new(3, 1, 1).unwrap();
        // u^2 stays, u^3 -> u, u^4 -> u^2, never to u^0
        assert_eq!(
            (1..=6).map(|e| s3.fold_exponent(e)).collect::<Vec<_>>(),
            vec![1, 2, 1, 2, 1, 2]
        );
        let d2 = DivisorSystem::new(2, 1, 3).unwrap();
        assert!(reduce_mod_system(&dedekind_delta(), &d2).is_zero());
        assert!(in_system(&dedekind_delta(), &d2));
        let d4 = DivisorSystem::new(2, 2, 3).unwrap();
        let expect = &MPoly::monomial(3, vec![0, 2, 1], 1) + &MPoly::monomial(3, vec![0, 1, 2], 1);
        assert_eq!(reduce_mod_system(&dedekind_delta(), &d4), expect);
        assert!(!in_system(&dedekind_delta(), &d4));
        let pg = dedekind_delta().scale(&BigInt::from(5));
        assert!(in_system(&pg, &DivisorSystem::new(5, 3, 3).unwrap()));
        assert!(DivisorSystem::new(4, 1, 3).is_err());
    }

    #[test]
    fn evaluation_over_extension() {
        let f2 = ExtFieldCtx::new(2, 1).unwrap();
        let pt: Vec<FpPolynomial> = [0, 1, 1]
            .iter()
            .map(|&v| FpPolynomial::constant(2, v))
            .collect();
        assert!(eval_over_ext(&dedekind_delta(), &f2, &pt)
            .unwrap()
            .is_zero());

        let f4 = ExtFieldCtx::new(2, 2).unwrap();
        let t = f4.generator();
        let pt = vec![f4.zero(), t.clone(), f4.mul(&t, &t)];
        assert_eq!(
            eval_over_ext(&dedekind_delta(), &f4, &pt).unwrap(),
            f4.one()
        );
        assert_eq!(eval_over_ext(&MPoly::one(3), &f4, &pt).unwrap(), f4.one());
        assert!(eval_over_ext(&MPoly::one(2), &f4, &pt).is_err());

        let ev = FieldEvaluator::new(&dedekind_delta(), &f4).unwrap();
        // indices: t = 2, t^2 = t + 1 = 3
        assert_eq!(ev.eval_indices(&[0, 2, 3]), 1);
    }
}
