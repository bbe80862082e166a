//! The coordinate model of affine spaces.
//!
//! Points of an n-dimensional affine space are vectors in `K^n`; the heap
//! operation is `⟨a,b,c⟩ = a − b + c` and the base-pointed action is
//! `ξ ▶_a b = ξ·b + (1 − ξ)·a`. Every finite-dimensional affine space is
//! isomorphic to this model, so unary affine maps become pairs `(M, t)` and
//! bi-affine maps become `B(a,b) + L1·a + L2·b + c`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coords::Coord;
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Scalar, Vector};
use crate::poly::{MultiPoly, PolyCtx};

/// A point of `K^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffinePoint(pub Vector);

impl AffinePoint {
    pub fn new(v: Vector) -> Self {
        AffinePoint(v)
    }

    pub fn origin(field: Field, n: usize) -> Self {
        AffinePoint(Vector::zeros(field, n))
    }

    pub fn from_ints(field: Field, xs: &[i64]) -> Self {
        AffinePoint(Vector::from_ints(field, xs))
    }

    pub fn coords(&self) -> &Vector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn field(&self) -> Field {
        self.0.field()
    }
}

impl From<Vector> for AffinePoint {
    fn from(v: Vector) -> Self {
        AffinePoint(v)
    }
}

impl std::fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `⟨a, b, c⟩ = a − b + c`.
pub fn heap_op(a: &AffinePoint, b: &AffinePoint, c: &AffinePoint) -> Result<AffinePoint> {
    Ok(AffinePoint(a.0.sub(&b.0)?.add(&c.0)?))
}

/// `ξ ▶_a b = ξ·b + (1 − ξ)·a`.
pub fn action(xi: &Scalar, a: &AffinePoint, b: &AffinePoint) -> Result<AffinePoint> {
    let one_minus = &a.field().one() - xi;
    Ok(AffinePoint(b.0.scale(xi).add(&a.0.scale(&one_minus))?))
}

/// Group law of the retract at `o`: `a +_o b = ⟨a, o, b⟩`.
pub fn retract_add(o: &AffinePoint, a: &AffinePoint, b: &AffinePoint) -> Result<AffinePoint> {
    heap_op(a, o, b)
}

/// Inverse in the retract at `o`: `⟨o, a, o⟩ = 2o − a`.
pub fn retract_inverse(o: &AffinePoint, a: &AffinePoint) -> Result<AffinePoint> {
    heap_op(o, a, o)
}

/// The translation `a ↦ ⟨a, o, e⟩`, which identifies the fibres at `o` and `e`.
pub fn translation_iso(o: &AffinePoint, e: &AffinePoint) -> Result<AffineMap> {
    let t = e.0.sub(&o.0)?;
    Ok(AffineMap::translation(t))
}

pub fn affine_eval(f: &AffineMap, a: &AffinePoint) -> Result<AffinePoint> {
    f.apply(a)
}

pub fn biaffine_eval(m: &BiAffineMap, a: &AffinePoint, b: &AffinePoint) -> Result<AffinePoint> {
    m.apply(a, b)
}

/// Unary affine map `a ↦ M·a + t` on `K^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    m: Matrix,
    t: Vector,
}

impl AffineMap {
    pub fn new(m: Matrix, t: Vector) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() != t.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: t.dim(),
            });
        }
        if m.field() != t.field() {
            return Err(Error::FieldMismatch(m.field().to_string(), t.field().to_string()));
        }
        Ok(AffineMap { m, t })
    }

    pub fn identity(field: Field, n: usize) -> Self {
        AffineMap {
            m: Matrix::identity(field, n),
            t: Vector::zeros(field, n),
        }
    }

    pub fn linear(m: Matrix) -> Result<Self> {
        let t = Vector::zeros(m.field(), m.rows());
        Self::new(m, t)
    }

    pub fn translation(t: Vector) -> Self {
        AffineMap {
            m: Matrix::identity(t.field(), t.dim()),
            t,
        }
    }

    pub fn constant(value: Vector) -> Self {
        AffineMap {
            m: Matrix::zeros(value.field(), value.dim(), value.dim()),
            t: value,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn translation_part(&self) -> &Vector {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn field(&self) -> Field {
        self.m.field()
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity() && self.t.is_zero()
    }

    pub fn apply(&self, a: &AffinePoint) -> Result<AffinePoint> {
        Ok(AffinePoint(self.m.mul_vec(&a.0)?.add(&self.t)?))
    }

    pub fn apply_coords<T: Coord>(&self, ctx: T::Ctx, a: &[T]) -> Vec<T> {
        (0..self.dim())
            .map(|i| {
                let mut acc = T::lift(ctx, &self.t[i]);
                for (j, x) in a.iter().enumerate() {
                    let s = &self.m[(i, j)];
                    if !s.is_zero() {
                        acc = acc.plus(&x.scaled(s));
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap> {
        AffineMap::new(
            self.m.mul(&inner.m)?,
            self.m.mul_vec(&inner.t)?.add(&self.t)?,
        )
    }

    pub fn inverse(&self) -> Result<Option<AffineMap>> {
        let Some(mi) = self.m.inverse()? else {
            return Ok(None);
        };
        let t = mi.mul_vec(&self.t)?.neg();
        Ok(Some(AffineMap { m: mi, t }))
    }

    /// The same map written in coordinates centred at `o` (`a' = a − o`).
    pub fn recentered(&self, o: &AffinePoint) -> Result<AffineMap> {
        let shift = self.m.mul_vec(&o.0)?.add(&self.t)?.sub(&o.0)?;
        AffineMap::new(self.m.clone(), shift)
    }
}

/// Interpolate a unary affine map from its values. The samples must include
/// the origin and every unit vector; any further samples are checked
/// against the interpolant.
pub fn interpolate_affine(
    samples: &[(AffinePoint, AffinePoint)],
    dim: usize,
    field: Field,
) -> Result<AffineMap> {
    let lookup = |p: &Vector| samples.iter().find(|(x, _)| &x.0 == p).map(|(_, y)| y);
    let origin = Vector::zeros(field, dim);
    let t = lookup(&origin)
        .ok_or_else(|| Error::InsufficientSamples("origin".into()))?
        .0
        .clone();
    let mut cols = Vec::with_capacity(dim);
    for i in 0..dim {
        let e = Vector::unit(field, dim, i);
        let y = lookup(&e).ok_or_else(|| Error::InsufficientSamples(format!("e{}", i + 1)))?;
        cols.push(y.0.sub(&t)?);
    }
    let f = AffineMap::new(Matrix::from_columns(field, dim, &cols), t)?;
    for (x, y) in samples {
        let predicted = f.apply(x)?;
        if &predicted != y {
            return Err(Error::NotAffine(format!(
                "at {x} the interpolant gives {predicted} but the sample is {y}"
            )));
        }
    }
    Ok(f)
}

/// Bi-affine map `μ(a,b) = B(a,b) + L1·a + L2·b + c`, where output
/// coordinate k of `B(a,b)` is `Σ_ij B[k][i][j]·a_i·b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiAffineMap {
    b: Vec<Matrix>,
    l1: Matrix,
    l2: Matrix,
    c: Vector,
}

impl BiAffineMap {
    pub fn new(b: Vec<Matrix>, l1: Matrix, l2: Matrix, c: Vector) -> Result<Self> {
        let n = c.dim();
        let field = c.field();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        for m in b.iter().chain([&l1, &l2]) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.rows().max(m.cols()),
                });
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), m.field().to_string()));
            }
        }
        Ok(BiAffineMap { b, l1, l2, c })
    }

    pub fn zero(field: Field, n: usize) -> Self {
        BiAffineMap {
            b: vec![Matrix::zeros(field, n, n); n],
            l1: Matrix::zeros(field, n, n),
            l2: Matrix::zeros(field, n, n),
            c: Vector::zeros(field, n),
        }
    }

    /// Pure bilinear map from a structure tensor.
    pub fn bilinear(b: Vec<Matrix>) -> Result<Self> {
        let n = b.len();
        let field = b.first().map_or(Field::Rationals, Matrix::field);
        let z = Matrix::zeros(field, n, n);
        Self::new(b, z.clone(), z, Vector::zeros(field, n))
    }

    /// `(a, b) ↦ f(a)`.
    pub fn from_left(f: &AffineMap) -> Self {
        let n = f.dim();
        let field = f.field();
        BiAffineMap {
            b: vec![Matrix::zeros(field, n, n); n],
            l1: f.m.clone(),
            l2: Matrix::zeros(field, n, n),
            c: f.t.clone(),
        }
    }

    /// `(a, b) ↦ f(b)`.
    pub fn from_right(f: &AffineMap) -> Self {
        let n = f.dim();
        let field = f.field();
        BiAffineMap {
            b: vec![Matrix::zeros(field, n, n); n],
            l1: Matrix::zeros(field, n, n),
            l2: f.m.clone(),
            c: f.t.clone(),
        }
    }

    pub fn tensor(&self) -> &[Matrix] {
        &self.b
    }
    pub fn left(&self) -> &Matrix {
        &self.l1
    }
    pub fn right(&self) -> &Matrix {
        &self.l2
    }
    pub fn constant(&self) -> &Vector {
        &self.c
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn field(&self) -> Field {
        self.c.field()
    }

    pub fn apply(&self, a: &AffinePoint, b: &AffinePoint) -> Result<AffinePoint> {
        let n = self.dim();
        for p in [a, b] {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.dim(),
                });
            }
            if p.field() != self.field() {
                return Err(Error::FieldMismatch(
                    self.field().to_string(),
                    p.field().to_string(),
                ));
            }
        }
        let out = self.apply_coords(self.field(), a.0.entries(), b.0.entries());
        Ok(AffinePoint(Vector::new(self.field(), out)?))
    }

    pub fn apply_coords<T: Coord>(&self, ctx: T::Ctx, a: &[T], b: &[T]) -> Vec<T> {
        let n = self.dim();
        let mut products: Vec<Option<T>> = vec![None; n * n];
        (0..n)
            .map(|k| {
                let mut acc = T::lift(ctx, &self.c[k]);
                for i in 0..n {
                    let s = &self.l1[(k, i)];
                    if !s.is_zero() {
                        acc = acc.plus(&a[i].scaled(s));
                    }
                    let s = &self.l2[(k, i)];
                    if !s.is_zero() {
                        acc = acc.plus(&b[i].scaled(s));
                    }
                }
                let bk = &self.b[k];
                for i in 0..n {
                    for j in 0..n {
                        let s = &bk[(i, j)];
                        if s.is_zero() {
                            continue;
                        }
                        let prod = products[i * n + j].get_or_insert_with(|| a[i].times(&b[j]));
                        acc = acc.plus(&prod.scaled(s));
                    }
                }
                acc
            })
            .collect()
    }

    /// `B(x, y)` on plain vectors, without the affine terms.
    pub fn bilinear_part(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let field = self.field();
        let entries = (0..n)
            .map(|k| {
                let mut acc = field.zero();
                for i in 0..n {
                    if x[i].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let s = &self.b[k][(i, j)];
                        if !s.is_zero() && !y[j].is_zero() {
                            acc = &acc + &(&(s * &x[i]) * &y[j]);
                        }
                    }
                }
                acc
            })
            .collect();
        Vector::new(field, entries).expect("entries share the field")
    }

    fn combine(&self, other: &BiAffineMap, sign: &Scalar) -> Result<BiAffineMap> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let b = self
            .b
            .iter()
            .zip(&other.b)
            .map(|(x, y)| x.add(&y.scale(sign)))
            .collect::<Result<Vec<_>>>()?;
        BiAffineMap::new(
            b,
            self.l1.add(&other.l1.scale(sign))?,
            self.l2.add(&other.l2.scale(sign))?,
            self.c.add(&other.c.scale(sign))?,
        )
    }

    pub fn add(&self, other: &BiAffineMap) -> Result<BiAffineMap> {
        self.combine(other, &self.field().one())
    }

    pub fn sub(&self, other: &BiAffineMap) -> Result<BiAffineMap> {
        self.combine(other, &-&self.field().one())
    }

    /// `(a, b) ↦ μ(b, a)`.
    pub fn swapped(&self) -> BiAffineMap {
        BiAffineMap {
            b: self.b.iter().map(Matrix::transpose).collect(),
            l1: self.l2.clone(),
            l2: self.l1.clone(),
            c: self.c.clone(),
        }
    }

    /// `h ∘ μ`.
    pub fn post_compose(&self, h: &AffineMap) -> Result<BiAffineMap> {
        let n = self.dim();
        let field = self.field();
        let mut b = vec![Matrix::zeros(field, n, n); n];
        for (k, bk) in b.iter_mut().enumerate() {
            for m in 0..n {
                let s = &h.m[(k, m)];
                if !s.is_zero() {
                    *bk = bk.add(&self.b[m].scale(s))?;
                }
            }
        }
        BiAffineMap::new(
            b,
            h.m.mul(&self.l1)?,
            h.m.mul(&self.l2)?,
            h.m.mul_vec(&self.c)?.add(&h.t)?,
        )
    }

    /// `(a, b) ↦ μ(f(a), g(b))`.
    pub fn pre_compose(&self, f: &AffineMap, g: &AffineMap) -> Result<BiAffineMap> {
        let n = self.dim();
        let field = self.field();
        let (mf, tf) = (&f.m, &f.t);
        let (mg, tg) = (&g.m, &g.t);
        let mft = mf.transpose();
        // B(·, t_g) and B(t_f, ·) as matrices
        let mut b_right = Matrix::zeros(field, n, n);
        let mut b_left = Matrix::zeros(field, n, n);
        let mut b = Vec::with_capacity(n);
        for k in 0..n {
            let bk = &self.b[k];
            let bt = bk.mul_vec(tg)?;
            let tb = bk.transpose().mul_vec(tf)?;
            for p in 0..n {
                b_right[(k, p)] = bt[p].clone();
                b_left[(k, p)] = tb[p].clone();
            }
            b.push(mft.mul(bk)?.mul(mg)?);
        }
        let bts = Vector::new(
            field,
            (0..n)
                .map(|k| tf.dot(&self.b[k].mul_vec(tg).expect("square")).expect("same dim"))
                .collect(),
        )?;
        let l1 = self.l1.mul(mf)?.add(&b_right.mul(mf)?)?;
        let l2 = self.l2.mul(mg)?.add(&b_left.mul(mg)?)?;
        let c = self
            .c
            .add(&bts)?
            .add(&self.l1.mul_vec(tf)?)?
            .add(&self.l2.mul_vec(tg)?)?;
        BiAffineMap::new(b, l1, l2, c)
    }

    /// `f ∘ μ ∘ (f⁻¹ × f⁻¹)` for an invertible affine map `f`.
    pub fn pushforward(&self, f: &AffineMap) -> Result<BiAffineMap> {
        let inv = f
            .inverse()?
            .ok_or_else(|| Error::PreconditionFailed("push-forward needs an invertible map".into()))?;
        self.pre_compose(&inv, &inv)?.post_compose(f)
    }

    /// The same operation in coordinates centred at `o` (`a' = a − o`).
    pub fn recentered(&self, o: &AffinePoint) -> Result<BiAffineMap> {
        self.pushforward(&AffineMap::translation(o.0.neg()))
    }

    /// Read a bi-affine map off polynomial coordinates in `2n` variables
    /// (first block `a`, second block `b`). Fails with `NotAffine` if any
    /// term is not of the shape `const`, `a_i`, `b_j` or `a_i·b_j`.
    pub fn from_polys(polys: &[MultiPoly], n: usize) -> Result<BiAffineMap> {
        let field = polys.first().map_or(Field::Rationals, MultiPoly::field);
        let mut out = BiAffineMap::zero(field, n);
        if polys.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: polys.len(),
            });
        }
        for (k, p) in polys.iter().enumerate() {
            if p.nvars() != 2 * n {
                return Err(Error::ArityMismatch(2 * n, p.nvars()));
            }
            for (m, c) in p.terms() {
                let vars: Vec<usize> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
                    .collect();
                match vars.as_slice() {
                    [] => out.c = set(&out.c, k, c),
                    [i] if *i < n => out.l1[(k, *i)] = c.clone(),
                    [j] => out.l2[(k, j - n)] = c.clone(),
                    [i, j] if *i < n && *j >= n => out.b[k][(*i, j - n)] = c.clone(),
                    _ => {
                        return Err(Error::NotAffine(format!(
                            "term {} of output {k} is not bi-affine",
                            p.to_term_string()
                        )))
                    }
                }
            }
        }
        Ok(out)
    }
}

fn set(v: &Vector, k: usize, s: &Scalar) -> Vector {
    let mut e = v.entries().to_vec();
    e[k] = s.clone();
    Vector::new(v.field(), e).expect("same field")
}

/// Recover `(B, L1, L2, c)` of a black-box bi-affine map from its values on
/// the probe grid `{0, e_1, …, e_n}²`. No validation happens here; see
/// [`validate_biaffine`].
pub fn interpolate_biaffine<F>(evaluator: F, dim: usize, field: Field) -> Result<BiAffineMap>
where
    F: Fn(&AffinePoint, &AffinePoint) -> AffinePoint,
{
    let zero = AffinePoint::origin(field, dim);
    let unit = |i| AffinePoint(Vector::unit(field, dim, i));
    let c = evaluator(&zero, &zero).0;
    let mut l1_cols = Vec::with_capacity(dim);
    let mut l2_cols = Vec::with_capacity(dim);
    for i in 0..dim {
        l1_cols.push(evaluator(&unit(i), &zero).0.sub(&c)?);
        l2_cols.push(evaluator(&zero, &unit(i)).0.sub(&c)?);
    }
    let mut b = vec![Matrix::zeros(field, dim, dim); dim];
    for i in 0..dim {
        for j in 0..dim {
            let v = evaluator(&unit(i), &unit(j))
                .0
                .sub(&l1_cols[i])?
                .sub(&l2_cols[j])?
                .sub(&c)?;
            for (k, bk) in b.iter_mut().enumerate() {
                bk[(i, j)] = v[k].clone();
            }
        }
    }
    BiAffineMap::new(
        b,
        Matrix::from_columns(field, dim, &l1_cols),
        Matrix::from_columns(field, dim, &l2_cols),
        c,
    )
}

/// Outcome of comparing a bi-affine normal form with a black box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BiAffineValidation {
    Pass,
    Mismatch {
        a: AffinePoint,
        b: AffinePoint,
        expected: AffinePoint,
        got: AffinePoint,
    },
}

impl BiAffineValidation {
    pub fn passed(&self) -> bool {
        matches!(self, BiAffineValidation::Pass)
    }
}

/// Compare `m` with `evaluator` on a few structured points (doubled unit
/// vectors and their sums) followed by `trials` pseudo-random points.
pub fn validate_biaffine<F>(
    m: &BiAffineMap,
    evaluator: F,
    trials: usize,
    seed: u64,
) -> Result<BiAffineValidation>
where
    F: Fn(&AffinePoint, &AffinePoint) -> AffinePoint,
{
    let n = m.dim();
    let field = m.field();
    let two = field.int(2);
    let zero = AffinePoint::origin(field, n);
    let doubled = |i| AffinePoint(Vector::unit(field, n, i).scale(&two));
    let mut points: Vec<(AffinePoint, AffinePoint)> = Vec::new();
    for i in 0..n {
        points.push((doubled(i), zero.clone()));
        points.push((zero.clone(), doubled(i)));
        for j in 0..n {
            points.push((doubled(i), doubled(j)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        points.push((random_point(&mut rng, field, n), random_point(&mut rng, field, n)));
    }
    for (a, b) in points {
        let expected = m.apply(&a, &b)?;
        let got = evaluator(&a, &b);
        if got != expected {
            return Ok(BiAffineValidation::Mismatch { a, b, expected, got });
        }
    }
    Ok(BiAffineValidation::Pass)
}

/// Small pseudo-random scalar: `num/den` with `|num| ≤ 6`, `den ≤ 3` over
/// `Q`, a uniform residue over `F_p`.
pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field {
        Field::Rationals => field
            .frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
            .expect("nonzero denominator"),
        Field::Prime(p) => field.int(rng.gen_range(0..p) as i64),
    }
}

pub fn random_point(rng: &mut impl Rng, field: Field, n: usize) -> AffinePoint {
    let entries = (0..n).map(|_| random_scalar(rng, field)).collect();
    AffinePoint(Vector::new(field, entries).expect("same field"))
}

/// Fresh polynomial variables for `blocks` points of dimension `dim`:
/// block k is `(x_{k·n}, …, x_{k·n+n−1})`.
pub fn symbolic_args(dim: usize, blocks: usize, field: Field) -> (PolyCtx, Vec<Vec<MultiPoly>>) {
    let ctx = PolyCtx::new(dim * blocks, field);
    let pts = (0..blocks)
        .map(|k| (0..dim).map(|i| ctx.var(k * dim + i)).collect())
        .collect();
    (ctx, pts)
}
