//! Affgebra structure types and their symbolic axiom checkers.
//!
//! The plain (non-Hom) structures are the same types with `α = id`; the
//! `untwisted` constructors and `is_untwisted` record that intent.

use crate::affine::{symbolic_args, AffineMap, AffinePoint, BiAffineMap};
use crate::coords::heap;
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Vector};
use crate::poly::{MultiPoly, PolyCtx};
use crate::verdict::Verdict;

fn check_dims(op: &BiAffineMap, alpha: &AffineMap) -> Result<()> {
    if op.dim() != alpha.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            found: alpha.dim(),
        });
    }
    if op.field() != alpha.field() {
        return Err(Error::FieldMismatch(op.field().to_string(), alpha.field().to_string()));
    }
    Ok(())
}

/// `(A, μ, α)` with `μ(α(a), μ(b,c)) = μ(μ(a,b), α(c))` expected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAssocAffgebra {
    pub mul: BiAffineMap,
    pub alpha: AffineMap,
}

impl HomAssocAffgebra {
    pub fn new(mul: BiAffineMap, alpha: AffineMap) -> Result<Self> {
        check_dims(&mul, &alpha)?;
        Ok(HomAssocAffgebra { mul, alpha })
    }

    pub fn untwisted(mul: BiAffineMap) -> Self {
        let alpha = AffineMap::identity(mul.field(), mul.dim());
        HomAssocAffgebra { mul, alpha }
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    pub fn is_untwisted(&self) -> bool {
        self.alpha.is_identity()
    }
}

/// `(A, {−,−}, α)`; a Hom-Lie affgebra when both affine anti-symmetry and
/// the affine Hom-Jacobi identity hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAffgebra {
    pub bracket: BiAffineMap,
    pub alpha: AffineMap,
}

impl HomLieAffgebra {
    pub fn new(bracket: BiAffineMap, alpha: AffineMap) -> Result<Self> {
        check_dims(&bracket, &alpha)?;
        Ok(HomLieAffgebra { bracket, alpha })
    }

    pub fn untwisted(bracket: BiAffineMap) -> Self {
        let alpha = AffineMap::identity(bracket.field(), bracket.dim());
        HomLieAffgebra { bracket, alpha }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn field(&self) -> Field {
        self.bracket.field()
    }

    pub fn is_untwisted(&self) -> bool {
        self.alpha.is_identity()
    }

    /// Transport of structure along an invertible affine map `f`.
    pub fn pushforward(&self, f: &AffineMap) -> Result<HomLieAffgebra> {
        let inv = f
            .inverse()?
            .ok_or_else(|| Error::PreconditionFailed("push-forward needs an invertible map".into()))?;
        HomLieAffgebra::new(
            self.bracket.pushforward(f)?,
            f.compose(&self.alpha)?.compose(&inv)?,
        )
    }

    /// The same structure in coordinates centred at `o`.
    pub fn recentered(&self, o: &AffinePoint) -> Result<HomLieAffgebra> {
        self.pushforward(&AffineMap::translation(o.0.neg()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `(A, •, α)` checked against the left or right Hom-pre-Lie law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPreLieAffgebra {
    pub prod: BiAffineMap,
    pub alpha: AffineMap,
    pub side: Side,
}

impl HomPreLieAffgebra {
    pub fn new(prod: BiAffineMap, alpha: AffineMap, side: Side) -> Result<Self> {
        check_dims(&prod, &alpha)?;
        Ok(HomPreLieAffgebra { prod, alpha, side })
    }

    pub fn untwisted(prod: BiAffineMap, side: Side) -> Self {
        let alpha = AffineMap::identity(prod.field(), prod.dim());
        HomPreLieAffgebra { prod, alpha, side }
    }

    pub fn dim(&self) -> usize {
        self.prod.dim()
    }

    pub fn field(&self) -> Field {
        self.prod.field()
    }

    pub fn is_untwisted(&self) -> bool {
        self.alpha.is_identity()
    }
}

fn check_tensor(sc: &[Matrix], alpha: &Matrix) -> Result<()> {
    let n = alpha.rows();
    if !alpha.is_square() {
        return Err(Error::NotSquare {
            rows: alpha.rows(),
            cols: alpha.cols(),
        });
    }
    if sc.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: sc.len(),
        });
    }
    for m in sc {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.rows().max(m.cols()),
            });
        }
        if m.field() != alpha.field() {
            return Err(Error::FieldMismatch(alpha.field().to_string(), m.field().to_string()));
        }
    }
    Ok(())
}

/// Linear Hom-Lie algebra: `sc[k][(i, j)]` is the coefficient of `e_k` in
/// `[e_i, e_j]`, and `alpha` is linear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomLieAlgebra {
    sc: Vec<Matrix>,
    alpha: Matrix,
}

impl HomLieAlgebra {
    pub fn new(sc: Vec<Matrix>, alpha: Matrix) -> Result<Self> {
        check_tensor(&sc, &alpha)?;
        Ok(HomLieAlgebra { sc, alpha })
    }

    pub fn abelian(field: Field, n: usize, alpha: Matrix) -> Result<Self> {
        Self::new(vec![Matrix::zeros(field, n, n); n], alpha)
    }

    pub fn sc(&self) -> &[Matrix] {
        &self.sc
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self> {
        Self::new(self.sc.clone(), alpha)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket_map().bilinear_part(x, y)
    }

    /// The bracket as a (purely bilinear) bi-affine map.
    pub fn bracket_map(&self) -> BiAffineMap {
        let n = self.dim();
        let z = Matrix::zeros(self.field(), n, n);
        BiAffineMap::new(self.sc.clone(), z.clone(), z, Vector::zeros(self.field(), n))
            .expect("validated tensor")
    }

    pub fn alpha_map(&self) -> AffineMap {
        AffineMap::linear(self.alpha.clone()).expect("square")
    }

    /// Matrix of `ad_q = [q, −]`.
    pub fn ad(&self, q: &Vector) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket(q, &Vector::unit(self.field(), n, j)))
            .collect();
        Matrix::from_columns(self.field(), n, &cols)
    }
}

/// Linear Hom-associative algebra, the fibre of a Hom-associative affgebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomAssocAlgebra {
    product: Vec<Matrix>,
    alpha: Matrix,
}

impl HomAssocAlgebra {
    pub fn new(product: Vec<Matrix>, alpha: Matrix) -> Result<Self> {
        check_tensor(&product, &alpha)?;
        Ok(HomAssocAlgebra { product, alpha })
    }

    pub fn product(&self) -> &[Matrix] {
        &self.product
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn product_map(&self) -> BiAffineMap {
        let n = self.dim();
        let field = self.alpha.field();
        let z = Matrix::zeros(field, n, n);
        BiAffineMap::new(self.product.clone(), z.clone(), z, Vector::zeros(field, n))
            .expect("validated tensor")
    }

    pub fn alpha_map(&self) -> AffineMap {
        AffineMap::linear(self.alpha.clone()).expect("square")
    }
}

type Pt = Vec<MultiPoly>;

struct Sym<'a> {
    ctx: PolyCtx,
    op: &'a BiAffineMap,
    alpha: &'a AffineMap,
}

impl Sym<'_> {
    fn op(&self, x: &[MultiPoly], y: &[MultiPoly]) -> Pt {
        self.op.apply_coords(self.ctx, x, y)
    }
    fn al(&self, x: &[MultiPoly]) -> Pt {
        self.alpha.apply_coords(self.ctx, x)
    }
}

fn sym_setup(op: &BiAffineMap, blocks: usize) -> (PolyCtx, Vec<Pt>) {
    symbolic_args(op.dim(), blocks, op.field())
}

fn diff(x: &[MultiPoly], y: &[MultiPoly]) -> Pt {
    heap::<MultiPoly>(&[x, y, &vec![x[0].ctx().zero(); x.len()]])
}

/// `⟨{a,b},{a,a},{b,a}⟩ = {b,b}`.
pub fn check_affine_antisymmetry(s: &HomLieAffgebra) -> Verdict {
    let (ctx, p) = sym_setup(&s.bracket, 2);
    let (a, b) = (&p[0], &p[1]);
    let br = |x: &[MultiPoly], y: &[MultiPoly]| s.bracket.apply_coords(ctx, x, y);
    let lhs = heap::<MultiPoly>(&[&br(a, b), &br(a, a), &br(b, a)]);
    Verdict::from_residual("affine_antisymmetry", &diff(&lhs, &br(b, b)), s.dim())
}

/// The six-term alternating sum
/// `{αa,{b,c}} − {αa,{a,a}} + {αb,{c,a}} − {αb,{b,b}} + {αc,{a,b}} − {αc,{c,c}}`.
pub fn check_affine_hom_jacobi(s: &HomLieAffgebra) -> Verdict {
    let (ctx, p) = sym_setup(&s.bracket, 3);
    let sym = Sym {
        ctx,
        op: &s.bracket,
        alpha: &s.alpha,
    };
    let (a, b, c) = (&p[0], &p[1], &p[2]);
    let (aa, ab, ac) = (sym.al(a), sym.al(b), sym.al(c));
    let terms = [
        sym.op(&aa, &sym.op(b, c)),
        sym.op(&aa, &sym.op(a, a)),
        sym.op(&ab, &sym.op(c, a)),
        sym.op(&ab, &sym.op(b, b)),
        sym.op(&ac, &sym.op(a, b)),
        sym.op(&ac, &sym.op(c, c)),
    ];
    let lhs = heap::<MultiPoly>(&[&terms[0], &terms[1], &terms[2], &terms[3], &terms[4]]);
    Verdict::from_residual("affine_hom_jacobi", &diff(&lhs, &terms[5]), s.dim())
}

/// Affine Jacobi identity of a Lie affgebra (`α` must be the identity).
pub fn check_affine_jacobi(s: &HomLieAffgebra) -> Result<Verdict> {
    if !s.is_untwisted() {
        return Err(Error::AlphaNotIdentity);
    }
    Ok(check_affine_hom_jacobi(s).renamed("affine_jacobi"))
}

/// Both Hom-Lie affgebra axioms.
pub fn check_hom_lie_affgebra(s: &HomLieAffgebra) -> Vec<Verdict> {
    vec![check_affine_antisymmetry(s), check_affine_hom_jacobi(s)]
}

pub fn is_hom_lie_affgebra(s: &HomLieAffgebra) -> bool {
    check_affine_antisymmetry(s).passed() && check_affine_hom_jacobi(s).passed()
}

/// `μ(α(a), μ(b,c)) = μ(μ(a,b), α(c))`.
pub fn check_hom_associativity(s: &HomAssocAffgebra) -> Verdict {
    hom_assoc_residual(&s.mul, &s.alpha)
}

fn hom_assoc_residual(mul: &BiAffineMap, alpha: &AffineMap) -> Verdict {
    let (ctx, p) = sym_setup(mul, 3);
    let sym = Sym {
        ctx,
        op: mul,
        alpha,
    };
    let (a, b, c) = (&p[0], &p[1], &p[2]);
    let lhs = sym.op(&sym.al(a), &sym.op(b, c));
    let rhs = sym.op(&sym.op(a, b), &sym.al(c));
    Verdict::from_residual("hom_associativity", &diff(&lhs, &rhs), mul.dim())
}

/// Left law: `(a•b)•α(c) = ⟨α(a)•(b•c), α(b)•(a•c), (b•a)•α(c)⟩`.
/// Right law: `α(a)•(b•c) = ⟨(a•b)•α(c), (a•c)•α(b), α(a)•(c•b)⟩`.
pub fn check_hom_prelie(s: &HomPreLieAffgebra) -> Verdict {
    let (ctx, p) = sym_setup(&s.prod, 3);
    let sym = Sym {
        ctx,
        op: &s.prod,
        alpha: &s.alpha,
    };
    let (a, b, c) = (&p[0], &p[1], &p[2]);
    let (aa, ab, ac) = (sym.al(a), sym.al(b), sym.al(c));
    let (name, lhs, rhs) = match s.side {
        Side::Left => (
            "hom_prelie_left",
            sym.op(&sym.op(a, b), &ac),
            heap::<MultiPoly>(&[
                &sym.op(&aa, &sym.op(b, c)),
                &sym.op(&ab, &sym.op(a, c)),
                &sym.op(&sym.op(b, a), &ac),
            ]),
        ),
        Side::Right => (
            "hom_prelie_right",
            sym.op(&aa, &sym.op(b, c)),
            heap::<MultiPoly>(&[
                &sym.op(&sym.op(a, b), &ac),
                &sym.op(&sym.op(a, c), &ab),
                &sym.op(&aa, &sym.op(c, b)),
            ]),
        ),
    };
    Verdict::from_residual(name, &diff(&lhs, &rhs), s.dim())
}

/// `α(μ(a,b)) = μ(α(a), α(b))`.
pub fn check_multiplicativity(op: &BiAffineMap, alpha: &AffineMap) -> Verdict {
    let (ctx, p) = sym_setup(op, 2);
    let sym = Sym { ctx, op, alpha };
    let (a, b) = (&p[0], &p[1]);
    let lhs = sym.al(&sym.op(a, b));
    let rhs = sym.op(&sym.al(a), &sym.al(b));
    Verdict::from_residual("multiplicativity", &diff(&lhs, &rhs), op.dim())
}

/// Anti-symmetry of the structure constants.
pub fn check_antisymmetry(l: &HomLieAlgebra) -> Verdict {
    let n = l.dim();
    for (k, m) in l.sc.iter().enumerate() {
        for i in 0..n {
            for j in i..n {
                if !(&m[(i, j)] + &m[(j, i)]).is_zero() {
                    return Verdict::fail_note(
                        "antisymmetry",
                        format!("coefficient of e{} in [e{}, e{}] + [e{}, e{}] is nonzero", k + 1, i + 1, j + 1, j + 1, i + 1),
                    );
                }
            }
        }
    }
    Verdict::pass("antisymmetry")
}

/// `[α(a),[b,c]] + [α(b),[c,a]] + [α(c),[a,b]] = 0`.
pub fn check_hom_jacobi(l: &HomLieAlgebra) -> Verdict {
    let br = l.bracket_map();
    let alpha = l.alpha_map();
    let (ctx, p) = sym_setup(&br, 3);
    let sym = Sym {
        ctx,
        op: &br,
        alpha: &alpha,
    };
    let (a, b, c) = (&p[0], &p[1], &p[2]);
    let t1 = sym.op(&sym.al(a), &sym.op(b, c));
    let t2 = sym.op(&sym.al(b), &sym.op(c, a));
    let t3 = sym.op(&sym.al(c), &sym.op(a, b));
    let sum: Pt = (0..l.dim()).map(|k| &(&t1[k] + &t2[k]) + &t3[k]).collect();
    Verdict::from_residual("hom_jacobi", &sum, l.dim())
}

pub fn check_homlie_algebra(l: &HomLieAlgebra) -> Verdict {
    Verdict::all("homlie_algebra", [check_antisymmetry(l), check_hom_jacobi(l)])
}

pub fn check_homassoc_algebra(a: &HomAssocAlgebra) -> Verdict {
    hom_assoc_residual(&a.product_map(), &a.alpha_map())
}

/// `α[a,b] = [α(a), α(b)]` for a linear Hom-Lie algebra.
pub fn check_algebra_multiplicativity(l: &HomLieAlgebra) -> Verdict {
    check_multiplicativity(&l.bracket_map(), &l.alpha_map())
}
