//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are kept in canonical form (no zero coefficients, exponent vectors
//! of fixed length), so equality of two polynomials is structural equality.
//! This is what turns every affgebra identity check into an exact zero test.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::kernel::{Field, Scalar, Vector};

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographically with `x0 > x1 > …`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable count and ground field shared by a family of polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyCtx {
    pub nvars: usize,
    pub field: Field,
}

impl PolyCtx {
    pub fn new(nvars: usize, field: Field) -> Self {
        PolyCtx { nvars, field }
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            ctx: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: &Scalar) -> MultiPoly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(self.nvars), c.clone());
        }
        p
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars, "variable x{i} out of range");
        let mut p = self.zero();
        p.terms.insert(Monomial::var(self.nvars, i), self.field.one());
        p
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: PolyCtx,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    /// Build from a term list; repeated monomials are merged and zero
    /// coefficients dropped.
    pub fn from_terms(ctx: PolyCtx, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = ctx.zero();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ctx.nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> PolyCtx {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars
    }

    pub fn field(&self) -> Field {
        self.ctx.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ctx.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.ctx.nvars != other.ctx.nvars {
            return Err(Error::ArityMismatch(self.ctx.nvars, other.ctx.nvars));
        }
        if self.ctx.field != other.ctx.field {
            return Err(Error::FieldMismatch(
                self.ctx.field.to_string(),
                other.ctx.field.to_string(),
            ));
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.ctx.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> MultiPoly {
        if s.is_zero() {
            return self.ctx.zero();
        }
        MultiPoly {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn eval(&self, point: &Vector) -> Result<Scalar> {
        if point.dim() != self.ctx.nvars {
            return Err(Error::ArityMismatch(self.ctx.nvars, point.dim()));
        }
        if point.field() != self.ctx.field {
            return Err(Error::FieldMismatch(
                self.ctx.field.to_string(),
                point.field().to_string(),
            ));
        }
        let mut acc = self.ctx.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitute `x_var := value`, keeping the variable count.
    pub fn substitute(&self, var: usize, value: &Scalar) -> MultiPoly {
        let mut out = self.ctx.zero();
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut m2 = m.clone();
            m2.0[var] = 0;
            out.add_term(m2, c * &value.pow(e as u32));
        }
        out
    }

    fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficient of `x_var^k`, as a polynomial in the remaining variables.
    fn coefficient_of_power(&self, var: usize, k: u16) -> MultiPoly {
        let mut out = self.ctx.zero();
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut m2 = m.clone();
                m2.0[var] = 0;
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    /// Grlex-sorted term list, leading term first, e.g. `2*x0^2*x1 - x2 + 1/2`.
    pub fn to_term_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut coef = c.clone();
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                    coef = -c;
                }
            } else if c.is_negative() {
                out.push_str(" - ");
                coef = -c;
            } else {
                out.push_str(" + ");
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                .collect();
            if vars.is_empty() {
                out.push_str(&coef.to_string());
            } else {
                if !coef.is_one() {
                    out.push_str(&coef.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_term_string())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_term_string())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomial arity/field mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomial arity/field mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial arity/field mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-&self.ctx.field.one())
    }
}

pub fn poly_add(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.try_add(q)
}

pub fn poly_mul(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.try_mul(q)
}

pub fn poly_eval(p: &MultiPoly, point: &Vector) -> Result<Scalar> {
    p.eval(point)
}

/// A point where `p` does not vanish, or `None` when `p` is the zero
/// polynomial.
///
/// Over `Q` a witness always exists for nonzero `p`. Over `F_p` the search
/// is guaranteed to succeed only while every per-variable degree is below
/// `p`; otherwise `None` may be returned for a nonzero polynomial.
pub fn find_nonzero_point(p: &MultiPoly) -> Option<Vector> {
    if p.is_zero() {
        return None;
    }
    let ctx = p.ctx();
    let field = ctx.field;
    let n = ctx.nvars;

    // Cheap probes first: they give the small witnesses people expect.
    let mut probes = vec![Vector::zeros(field, n)];
    probes.extend((0..n).map(|i| Vector::unit(field, n, i)));
    probes.push(Vector::from_ints(field, &vec![1; n]));
    for probe in probes {
        if !p.eval(&probe).expect("probe has the right arity").is_zero() {
            return Some(probe);
        }
    }

    let mut assignment: Vec<Option<Scalar>> = vec![None; n];
    if !assign_witness(p, &mut assignment) {
        return None;
    }
    let entries = assignment
        .into_iter()
        .map(|a| a.unwrap_or_else(|| field.zero()))
        .collect();
    let point = Vector::new(field, entries).expect("entries share the field");
    debug_assert!(!p.eval(&point).unwrap().is_zero());
    Some(point)
}

/// Recursively assigns values to the variables of `p` (which must be
/// nonzero) so that it evaluates to something nonzero.
fn assign_witness(p: &MultiPoly, assignment: &mut [Option<Scalar>]) -> bool {
    let field = p.field();
    let Some(var) = (0..p.nvars()).find(|&v| p.degree_in(v) > 0) else {
        return !p.is_zero();
    };
    let top = p.degree_in(var);
    let lead = p.coefficient_of_power(var, top);
    if !assign_witness(&lead, assignment) {
        return false;
    }
    let mut uni = p.clone();
    for (v, val) in assignment.iter().enumerate() {
        if v != var {
            uni = uni.substitute(v, val.as_ref().unwrap_or(&field.zero()));
        }
    }
    let limit = match field {
        Field::Rationals => top as u64,
        Field::Prime(q) => (top as u64).min(q - 1),
    };
    for t in 0..=limit {
        let value = field.int(t as i64);
        if !uni.substitute(var, &value).is_zero() {
            assignment[var] = Some(value);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn ctx(n: usize) -> PolyCtx {
        PolyCtx::new(n, Q)
    }

    #[test]
    fn add_examples() {
        let c = ctx(2);
        let x0 = c.var(0);
        let one = c.constant(&Q.one());
        let p = poly_add(&(&x0 + &one), &-&x0).unwrap();
        assert_eq!(p, one);
        assert_eq!(poly_add(&x0, &c.zero()).unwrap(), x0);
        let x0x1 = &x0 * &c.var(1);
        let two = poly_add(&x0x1, &x0x1).unwrap();
        assert_eq!(two, x0x1.scale(&Q.int(2)));
        assert!(matches!(
            poly_add(&x0, &ctx(3).var(0)),
            Err(Error::ArityMismatch(2, 3))
        ));
    }

    #[test]
    fn mul_examples() {
        let c = ctx(2);
        let (x0, x1) = (c.var(0), c.var(1));
        let p = poly_mul(&(&x0 + &x1), &(&x0 - &x1)).unwrap();
        assert_eq!(p, &(&x0 * &x0) - &(&x1 * &x1));
        assert_eq!(poly_mul(&p, &c.constant(&Q.one())).unwrap(), p);
        assert!(poly_mul(&p, &c.zero()).unwrap().is_zero());
    }

    #[test]
    fn eval_examples() {
        let c = ctx(2);
        let (x0, x1) = (c.var(0), c.var(1));
        let p = &(&x0 * &x0) - &(&x1 * &x1);
        assert_eq!(poly_eval(&p, &Vector::from_ints(Q, &[3, 2])).unwrap(), Q.int(5));
        let q = &(&x0 * &x1).scale(&Q.int(2)) + &c.constant(&Q.int(7));
        assert_eq!(poly_eval(&q, &Vector::zeros(Q, 2)).unwrap(), Q.int(7));
        let pt = Vector::new(Q, vec![Q.frac(1, 2).unwrap(), Q.int(4)]).unwrap();
        let r = (&x0 * &x1).scale(&Q.int(2));
        assert_eq!(poly_eval(&r, &pt).unwrap(), Q.int(4));
        assert!(poly_eval(&r, &Vector::zeros(Q, 3)).is_err());
    }

    #[test]
    fn witness_examples() {
        let c = ctx(3);
        assert_eq!(find_nonzero_point(&c.zero()), None);
        let w = find_nonzero_point(&c.var(0)).unwrap();
        assert_eq!(w, Vector::from_ints(Q, &[1, 0, 0]));
        let comm = &(&c.var(0) * &c.var(1)) - &(&c.var(1) * &c.var(0));
        assert_eq!(find_nonzero_point(&comm), None);
    }

    #[test]
    fn witness_needs_recursion() {
        // x0*x1*(x0 - 1)*(x1 - 1) vanishes on {0,1}^2 but not at (2, 2)
        let c = ctx(2);
        let one = c.constant(&Q.one());
        let p = &(&(&c.var(0) * &c.var(1)) * &(&c.var(0) - &one)) * &(&c.var(1) - &one);
        let w = find_nonzero_point(&p).unwrap();
        assert!(!p.eval(&w).unwrap().is_zero());
    }

    #[test]
    fn witness_over_small_field_may_not_exist() {
        // x^3 - x vanishes on all of F_3 but is a nonzero polynomial.
        let f3 = Field::prime(3).unwrap();
        let c = PolyCtx::new(1, f3);
        let x = c.var(0);
        let p = &(&(&x * &x) * &x) - &x;
        assert!(!p.is_zero());
        assert_eq!(find_nonzero_point(&p), None);
    }

    #[test]
    fn term_string_is_grlex() {
        let c = ctx(3);
        let p = &(&(&c.var(2) * &c.var(2)) + &c.var(0).scale(&Q.int(-3)))
            + &(&(&c.var(0) * &c.var(1)) + &c.constant(&Q.frac(1, 2).unwrap()));
        assert_eq!(p.to_term_string(), "x0*x1 + x2^2 - 3*x0 + 1/2");
    }
}
