//! Orders presented by multiplication tables over an integral basis
//! `xi_1 = 1, xi_2, ..., xi_n`, together with the fundamental form
//! `w_0 = u_1 xi_1 + ... + u_n xi_n` and the index form derived from it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::multipoly::{self, MPoly};

/// An element of an order, as integer coordinates in the order's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderElement {
    pub coords: Vec<BigInt>,
}

impl OrderElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        OrderElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        OrderElement {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// A rank-n ring with unit `xi_1 = 1`, given by its structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    label: String,
    n: usize,
    /// `table[i][j]` holds the coordinates of `xi_i * xi_j`.
    table: Vec<Vec<Vec<BigInt>>>,
    disc: BigInt,
}

impl Order {
    /// Validates a multiplication table: unital, commutative, associative and
    /// nondegenerate trace form.
    pub fn from_table(label: impl Into<String>, table: Vec<Vec<Vec<BigInt>>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAnOrder("empty basis".into()));
        }
        if table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::NotAnOrder(format!("table is not {n}x{n}x{n}")));
        }
        for j in 0..n {
            let unit: Vec<BigInt> = (0..n).map(|k| BigInt::from((k == j) as i32)).collect();
            if table[0][j] != unit || table[j][0] != unit {
                return Err(Error::NotUnital);
            }
        }
        for i in 0..n {
            for j in 0..i {
                if table[i][j] != table[j][i] {
                    return Err(Error::NotAnOrder(format!(
                        "table is not commutative at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mut order = Order {
            label: label.into(),
            n,
            table,
            disc: BigInt::zero(),
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = order.mul_raw(&order.table[i][j], &order.basis_coords(k));
                    let right = order.mul_raw(&order.basis_coords(i), &order.table[j][k]);
                    if left != right {
                        return Err(Error::NotAnOrder(format!(
                            "table is not associative at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        let traces: Vec<BigInt> = (0..n)
            .map(|k| order.trace_raw(&order.basis_coords(k)))
            .collect();
        let gram: IntMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        order.table[i][j]
                            .iter()
                            .zip(&traces)
                            .map(|(c, t)| c * t)
                            .sum()
                    })
                    .collect()
            })
            .collect();
        order.disc = linalg::det_int(&gram)?;
        if order.disc.is_zero() {
            return Err(Error::NotAnOrder("trace form is degenerate".into()));
        }
        Ok(order)
    }

    /// Builds the order spanned by `basis_numerators / denom` inside
    /// `Q[x]/(min_poly)`; rows are coordinates in `1, alpha, ..., alpha^{n-1}`.
    /// `min_poly` lists `c_0..c_n` and must be monic.
    pub fn from_power_basis(
        label: impl Into<String>,
        min_poly: &[BigInt],
        basis_numerators: &[Vec<BigInt>],
        denom: &BigInt,
    ) -> Result<Self> {
        let n = min_poly.len().checked_sub(1).unwrap_or(0);
        if n == 0 || !min_poly[n].is_one() {
            return Err(Error::NotAnOrder(
                "minimal polynomial must be monic of degree >= 1".into(),
            ));
        }
        if basis_numerators.len() != n || basis_numerators.iter().any(|r| r.len() != n) {
            return Err(Error::NotAnOrder(format!("basis matrix must be {n}x{n}")));
        }
        if !denom.is_positive() {
            return Err(Error::NotAnOrder("denominator must be positive".into()));
        }
        let basis: Vec<Vec<BigRational>> = basis_numerators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::new(x.clone(), denom.clone()))
                    .collect()
            })
            .collect();
        let one_row: Vec<BigRational> = (0..n)
            .map(|k| {
                if k == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        if basis[0] != one_row {
            return Err(Error::NotUnital);
        }
        let inv = linalg::inverse_rat(&basis)
            .map_err(|_| Error::Singular("basis matrix is not invertible".into()))?;
        let f: Vec<BigRational> = min_poly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let prod = mul_mod_monic(&basis[i], &basis[j], &f);
                let coords = linalg::vec_mat_rat(&prod, &inv);
                let ints = coords
                    .iter()
                    .map(|c| {
                        if c.is_integer() {
                            Ok(c.to_integer())
                        } else {
                            Err(Error::NotAnOrder(format!(
                                "xi_{} * xi_{} has non-integral coordinate {c}",
                                i + 1,
                                j + 1
                            )))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                table[i][j] = ints.clone();
                table[j][i] = ints;
            }
        }
        Self::from_table(label, table)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn table(&self) -> &[Vec<Vec<BigInt>>] {
        &self.table
    }

    fn basis_coords(&self, i: usize) -> Vec<BigInt> {
        (0..self.n).map(|k| BigInt::from((k == i) as i32)).collect()
    }

    pub fn one(&self) -> OrderElement {
        self.basis(0)
    }

    pub fn zero(&self) -> OrderElement {
        OrderElement::new(vec![BigInt::zero(); self.n])
    }

    /// The basis element `xi_{i+1}` (zero-based index).
    pub fn basis(&self, i: usize) -> OrderElement {
        OrderElement::new(self.basis_coords(i))
    }

    pub fn from_int(&self, c: impl Into<BigInt>) -> OrderElement {
        let mut v = vec![BigInt::zero(); self.n];
        v[0] = c.into();
        OrderElement::new(v)
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<OrderElement> {
        let e = OrderElement::new(coords);
        self.check(&e)?;
        Ok(e)
    }

    fn check(&self, a: &OrderElement) -> Result<()> {
        if a.coords.len() != self.n {
            return Err(Error::Shape(format!(
                "element of length {} does not belong to this degree-{} order",
                a.coords.len(),
                self.n
            )));
        }
        Ok(())
    }

    fn mul_raw(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &xy * t;
                    }
                }
            }
        }
        out
    }

    fn trace_raw(&self, a: &[BigInt]) -> BigInt {
        (0..self.n)
            .map(|i| self.mul_raw(a, &self.basis_coords(i))[i].clone())
            .sum()
    }

    pub fn add(&self, a: &OrderElement, b: &OrderElement) -> Result<OrderElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(OrderElement::new(
            a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        ))
    }

    pub fn sub(&self, a: &OrderElement, b: &OrderElement) -> Result<OrderElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(OrderElement::new(
            a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        ))
    }

    pub fn mul(&self, a: &OrderElement, b: &OrderElement) -> Result<OrderElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(OrderElement::new(self.mul_raw(&a.coords, &b.coords)))
    }

    /// Product with every coordinate reduced modulo `m` into `[0, m)`.
    pub fn mul_mod(&self, a: &OrderElement, b: &OrderElement, m: &BigInt) -> Result<OrderElement> {
        let mut c = self.mul(a, b)?;
        for x in c.coords.iter_mut() {
            *x = x.mod_floor(m);
        }
        Ok(c)
    }

    pub fn pow(&self, a: &OrderElement, e: &BigInt) -> Result<OrderElement> {
        self.pow_impl(a, e, None)
    }

    /// `a^e` with coordinates reduced modulo `m` after every product.
    pub fn pow_mod(&self, a: &OrderElement, e: &BigInt, m: &BigInt) -> Result<OrderElement> {
        self.pow_impl(a, e, Some(m))
    }

    fn pow_impl(&self, a: &OrderElement, e: &BigInt, m: Option<&BigInt>) -> Result<OrderElement> {
        self.check(a)?;
        if e.is_negative() {
            return Err(Error::Domain("negative exponent".into()));
        }
        let step = |x: &OrderElement, y: &OrderElement| match m {
            Some(m) => self.mul_mod(x, y, m),
            None => self.mul(x, y),
        };
        let mut acc = match m {
            Some(m) => self.from_int(BigInt::one().mod_floor(m)),
            None => self.one(),
        };
        for bit in (0..e.bits()).rev() {
            acc = step(&acc, &acc)?;
            if e.bit(bit) {
                acc = step(&acc, a)?;
            }
        }
        Ok(acc)
    }

    /// Row `i` holds the coordinates of `xi_i * a`.
    pub fn mult_matrix(&self, a: &OrderElement) -> Result<IntMatrix> {
        self.check(a)?;
        Ok((0..self.n)
            .map(|i| self.mul_raw(&self.basis_coords(i), &a.coords))
            .collect())
    }

    pub fn trace(&self, a: &OrderElement) -> Result<BigInt> {
        self.check(a)?;
        Ok(self.trace_raw(&a.coords))
    }

    pub fn norm(&self, a: &OrderElement) -> Result<BigInt> {
        linalg::det_int(&self.mult_matrix(a)?)
    }

    /// Characteristic polynomial `c_0..c_n` (monic), by Faddeev-LeVerrier.
    pub fn charpoly_element(&self, a: &OrderElement) -> Result<Vec<BigInt>> {
        let m = self.mult_matrix(a)?;
        Ok(charpoly_int(&m))
    }

    /// Matrix whose row `j` holds the coordinates of `a^j`, `j = 0..n-1`.
    pub fn power_matrix(&self, a: &OrderElement) -> Result<IntMatrix> {
        self.check(a)?;
        let mut rows = Vec::with_capacity(self.n);
        let mut cur = self.one();
        for _ in 0..self.n {
            rows.push(cur.coords.clone());
            cur = self.mul(&cur, a)?;
        }
        Ok(rows)
    }

    /// `|det|` of the power matrix: the index of `Z[a]` in the order, or 0.
    pub fn element_index(&self, a: &OrderElement) -> Result<BigInt> {
        Ok(linalg::det_int(&self.power_matrix(a)?)?.abs())
    }

    /// Presents the order as in `from_power_basis` relative to a primitive
    /// element `theta`: returns the minimal polynomial of `theta`, integer
    /// numerators of the basis in powers of `theta`, and their common
    /// denominator.
    pub fn power_basis_presentation(
        &self,
        theta: &OrderElement,
    ) -> Result<(Vec<BigInt>, IntMatrix, BigInt)> {
        let pm = self.power_matrix(theta)?;
        let inv = linalg::inverse_rat(&linalg::to_rational(&pm))
            .map_err(|_| Error::Singular("element does not generate the field".into()))?;
        let denom = inv
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = inv
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
                    .collect()
            })
            .collect();
        Ok((self.charpoly_element(theta)?, numerators, denom))
    }

    /// The same ring in a new basis; row `i` of `u` gives the old
    /// coordinates of the new `xi_{i+1}`. `u` must be unimodular with first
    /// row `e_1`.
    pub fn change_basis(&self, u: &[Vec<BigInt>]) -> Result<Order> {
        let n = self.n;
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("basis change must be {n}x{n}")));
        }
        if !linalg::det_int(u)?.abs().is_one() {
            return Err(Error::Singular("basis change is not unimodular".into()));
        }
        let inv = linalg::inverse_rat(&linalg::to_rational(u))?;
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod: Vec<BigRational> = self
                    .mul_raw(&u[i], &u[j])
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect();
                table[i][j] = linalg::vec_mat_rat(&prod, &inv)
                    .into_iter()
                    .map(|c| c.to_integer())
                    .collect();
            }
        }
        Order::from_table(self.label.clone(), table)
    }

    /// Multiplication of coordinate vectors whose entries are polynomials.
    pub fn mul_poly_coords(&self, a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
        let nv = a.first().map_or(0, MPoly::nvars);
        let mut out = vec![MPoly::zero(nv); self.n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o = &*o + &xy.scale(t);
                    }
                }
            }
        }
        out
    }

    /// The generic element `w_0 = sum u_i xi_i` as polynomial coordinates.
    pub fn generic_element(&self) -> Vec<MPoly> {
        (0..self.n).map(|i| MPoly::var(self.n, i)).collect()
    }

    /// Matrix of multiplication by `w_0`, entries linear in `u_1..u_n`.
    pub fn generic_mult_matrix(&self) -> Vec<Vec<MPoly>> {
        let w0 = self.generic_element();
        (0..self.n)
            .map(|i| {
                let e: Vec<MPoly> = (0..self.n)
                    .map(|k| MPoly::constant(self.n, (k == i) as i64))
                    .collect();
                self.mul_poly_coords(&e, &w0)
            })
            .collect()
    }
}

/// Product of two power-basis coordinate vectors modulo the monic `f`.
fn mul_mod_monic(a: &[BigRational], b: &[BigRational], f: &[BigRational]) -> Vec<BigRational> {
    let n = f.len() - 1;
    let mut prod = vec![BigRational::zero(); 2 * n - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    for d in (n..prod.len()).rev() {
        let c = std::mem::take(&mut prod[d]);
        if c.is_zero() {
            continue;
        }
        for k in 0..n {
            prod[d - n + k] -= &c * &f[k];
        }
    }
    prod.truncate(n);
    prod
}

/// Characteristic polynomial of an integer matrix, coefficients `c_0..c_n`.
pub fn charpoly_int(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk: IntMatrix = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = M * M_{k-1} + c_{n-k+1} I
        let mut next = matmul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = matmul(m, &mk);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -(tr / BigInt::from(k));
    }
    c
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `det(w I - M(u))` with `M(u)` the matrix of multiplication by the generic
/// element; variables are `(w, u_1, ..., u_n)`.
pub fn fundamental_charpoly(order: &Order) -> Result<MPoly> {
    multipoly::charpoly_matrix(&order.generic_mult_matrix())
}

/// Determinant of the coordinates of `w_0^0, ..., w_0^{n-1}`, sign
/// normalized so the lex-leading coefficient is positive. No consistency
/// checks.
pub fn index_form_raw(order: &Order) -> Result<MPoly> {
    let n = order.degree();
    let w0 = order.generic_element();
    let mut rows = Vec::with_capacity(n);
    let mut cur: Vec<MPoly> = (0..n)
        .map(|k| MPoly::constant(n, (k == 0) as i64))
        .collect();
    for _ in 0..n {
        rows.push(cur.clone());
        cur = order.mul_poly_coords(&cur, &w0);
    }
    Ok(multipoly::mp_det(&rows)?.normalize_sign())
}

/// The index form, checked for primitivity and for
/// `disc_w(fundamental charpoly) = index_form^2 * disc`. Both sides are free
/// of `u_1` (shifting `w` by `u_1` leaves root differences alone), so the
/// check runs with `u_1 = 0`.
pub fn index_form(order: &Order) -> Result<MPoly> {
    let delta = index_form_raw(order)?;
    let content = multipoly::mp_content(&delta);
    if !content.is_one() {
        return Err(Error::InternalInconsistency(format!(
            "index form of {} has content {content}",
            order.label()
        )));
    }
    if order.degree() >= 2 {
        let d = multipoly::disc_in_w(&fundamental_charpoly(order)?.at_zero(1))?;
        let expect = (&delta * &delta).scale(order.disc());
        if d != expect {
            return Err(Error::InternalInconsistency(format!(
                "discriminant of the fundamental equation of {} is not index_form^2 * disc",
                order.label()
            )));
        }
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| ints(r)).collect()
    }

    pub(crate) fn dedekind() -> Order {
        Order::from_power_basis(
            "dedekind",
            &ints(&[-8, -2, -1, 1]),
            &mat(&[&[2, 0, 0], &[0, 2, 0], &[0, 1, 1]]),
            &BigInt::from(2),
        )
        .unwrap()
    }

    fn golden() -> Order {
        Order::from_power_basis(
            "golden",
            &ints(&[-1, -1, 1]),
            &mat(&[&[1, 0], &[0, 1]]),
            &BigInt::one(),
        )
        .unwrap()
    }

    #[test]
    fn constructors() {
        assert_eq!(dedekind().disc(), &BigInt::from(-503));
        assert_eq!(golden().disc(), &BigInt::from(5));
        let quartic = Order::from_power_basis(
            "quartic",
            &ints(&[12, 2, 6, 1, 1]),
            &mat(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 2]]),
            &BigInt::from(2),
        )
        .unwrap();
        assert_eq!(quartic.disc(), &BigInt::from(13564));
    }

    #[test]
    fn constructor_errors() {
        // alpha/2 is not integral
        let e = Order::from_power_basis(
            "bad",
            &ints(&[-1, -1, 1]),
            &mat(&[&[2, 0], &[0, 1]]),
            &BigInt::from(2),
        );
        assert!(matches!(e, Err(Error::NotAnOrder(_))));
        let e = Order::from_power_basis(
            "bad",
            &ints(&[-1, -1, 1]),
            &mat(&[&[0, 1], &[1, 0]]),
            &BigInt::one(),
        );
        assert_eq!(e, Err(Error::NotUnital));
        let e = Order::from_power_basis(
            "bad",
            &ints(&[-1, -1, 1]),
            &mat(&[&[1, 0], &[1, 0]]),
            &BigInt::one(),
        );
        assert!(matches!(e, Err(Error::Singular(_))));
    }

    #[test]
    fn element_arithmetic() {
        let o = dedekind();
        let a = OrderElement::from_i64(&[-7, 3, 5]);
        assert_eq!(o.mul(&o.one(), &a).unwrap(), a);
        let alpha = o.basis(1);
        // (alpha^2 - alpha - 2)/2 = xi_3 - alpha - 1
        let beta = OrderElement::from_i64(&[-1, -1, 1]);
        assert_eq!(o.mul(&alpha, &beta).unwrap(), o.from_int(4));
        assert_eq!(o.pow(&a, &BigInt::zero()).unwrap(), o.one());
        assert_eq!(
            o.pow(&a, &BigInt::from(3)).unwrap(),
            o.mul(&a, &o.mul(&a, &a).unwrap()).unwrap()
        );
        assert!(o.mul(&a, &OrderElement::from_i64(&[1, 2])).is_err());
    }

    #[test]
    fn traces_and_charpolys() {
        let o = dedekind();
        assert_eq!(o.trace(&o.one()).unwrap(), BigInt::from(3));
        assert_eq!(o.charpoly_element(&o.one()).unwrap(), ints(&[-1, 3, -3, 1]));
        assert_eq!(
            o.charpoly_element(&o.basis(1)).unwrap(),
            ints(&[-8, -2, -1, 1])
        );
        let cp = o.charpoly_element(&o.basis(2)).unwrap();
        assert_eq!(cp.len(), 4);
        assert!(cp[3].is_one());
        let m = o.mult_matrix(&o.basis(2)).unwrap();
        assert_eq!(-&cp[2], (0..3).map(|i| m[i][i].clone()).sum::<BigInt>());
    }

    #[test]
    fn element_indices() {
        let o = dedekind();
        assert_eq!(o.element_index(&o.one()).unwrap(), BigInt::zero());
        assert_eq!(o.element_index(&o.basis(1)).unwrap(), BigInt::from(2));
        assert_eq!(
            o.power_matrix(&o.basis(1)).unwrap(),
            mat(&[&[1, 0, 0], &[0, 1, 0], &[0, -1, 2]])
        );
        let g = golden();
        assert_eq!(g.element_index(&g.basis(1)).unwrap(), BigInt::one());
    }

    #[test]
    fn fundamental_forms() {
        let trivial = Order::from_table("Q", vec![vec![ints(&[1])]]).unwrap();
        assert_eq!(
            fundamental_charpoly(&trivial).unwrap(),
            &MPoly::var(2, 0) - &MPoly::var(2, 1)
        );
        let g = golden();
        let (w, u1, u2) = (MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2));
        let two = BigInt::from(2);
        let expect = &(&w.pow(2) - &(&(&u1.scale(&two) + &u2) * &w))
            + &(&(&u1.pow(2) + &(&u1 * &u2)) - &u2.pow(2));
        assert_eq!(fundamental_charpoly(&g).unwrap(), expect);
        assert_eq!(index_form(&g).unwrap(), MPoly::var(2, 1));
    }

    #[test]
    fn dedekind_index_form_in_the_alternate_basis() {
        // basis {1, alpha, (alpha^2 - alpha - 2)/2}
        let o = Order::from_power_basis(
            "dedekind-original",
            &ints(&[-8, -2, -1, 1]),
            &mat(&[&[2, 0, 0], &[0, 2, 0], &[-2, -1, 1]]),
            &BigInt::from(2),
        )
        .unwrap();
        let expect = MPoly::from_terms(
            3,
            vec![
                (vec![0, 3, 0], 2),
                (vec![0, 2, 1], -1),
                (vec![0, 1, 2], -1),
                (vec![0, 0, 3], -2),
            ],
        )
        .unwrap();
        assert_eq!(index_form(&o).unwrap(), expect);
        let d = multipoly::disc_in_w(&fundamental_charpoly(&o).unwrap()).unwrap();
        assert_eq!(d, (&expect * &expect).scale(&BigInt::from(-503)));
    }

    #[test]
    fn index_form_properties() {
        let o = dedekind();
        let delta = index_form(&o).unwrap();
        assert!(delta.is_homogeneous());
        assert_eq!(delta.total_degree(), Some(3));
        for coords in [[0i64, 1, 0], [3, -2, 5], [0, 1, 1], [1, 0, 0]] {
            let pt = ints(&coords);
            let a = OrderElement::new(pt.clone());
            assert_eq!(
                delta.eval_int(&pt).unwrap().abs(),
                o.element_index(&a).unwrap()
            );
        }
    }

    #[test]
    fn unimodular_change_of_basis() {
        let o = dedekind();
        let u = mat(&[&[1, 0, 0], &[1, 1, 0], &[-1, 2, 1]]);
        let o2 = o.change_basis(&u).unwrap();
        assert_eq!(o2.disc(), o.disc());
        assert!(o
            .change_basis(&mat(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]))
            .is_err());
    }
}
