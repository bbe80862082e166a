//! Fibres of Hom-affgebras at fixed points of `α`, basepoint changes, and
//! extraction of the data `(L; α, κ, λ, r)`.
//!
//! Everything is computed after recentring coordinates at the base point
//! `o`: there `o` becomes the zero vector, the fibre bracket is the bilinear
//! part of the bracket, and `α` restricted to the fibre is its linear part.

use crate::affine::{symbolic_args, translation_iso, AffineMap, AffinePoint, BiAffineMap};
use crate::constructions::AffgebraData;
use crate::coords::{heap, vsub, Coord};
use crate::error::{Error, Result};
use crate::kernel::{Matrix, Vector};
use crate::poly::{MultiPoly, PolyCtx};
use crate::structures::{
    check_affine_antisymmetry, check_homassoc_algebra, check_homlie_algebra, HomAssocAffgebra,
    HomAssocAlgebra, HomLieAffgebra, HomLieAlgebra,
};
use crate::verdict::Verdict;

/// Solution set of `α(x) = x`: a particular point plus a basis of the
/// direction space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoints {
    pub particular: AffinePoint,
    pub kernel: Vec<Vector>,
}

impl FixedPoints {
    /// Number of independent fixed points (1 + dimension of the kernel).
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Fixed points of `α`, or `None` when `(M − I)x = −t` is inconsistent.
pub fn alpha_fixed_points(alpha: &AffineMap) -> Option<FixedPoints> {
    let n = alpha.dim();
    let field = alpha.field();
    let m = alpha
        .matrix()
        .sub(&Matrix::identity(field, n))
        .expect("square");
    let rhs = alpha.translation_part().neg();
    let particular = m.solve(&rhs).expect("shapes agree")?;
    Some(FixedPoints {
        particular: AffinePoint(particular),
        kernel: m.kernel(),
    })
}

fn require_fixed(alpha: &AffineMap, o: &AffinePoint) -> Result<()> {
    if o.dim() != alpha.dim() {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim(),
            found: o.dim(),
        });
    }
    let image = alpha.apply(o)?;
    if &image == o {
        Ok(())
    } else {
        Err(Error::NotFixedPoint(format!("alpha({o}) = {image}")))
    }
}

/// A fibre `T_o A` with its linear Hom-Lie structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberResult {
    pub base: AffinePoint,
    pub algebra: HomLieAlgebra,
}

/// A fibre `T_o A` with its linear Hom-associative structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocFiberResult {
    pub base: AffinePoint,
    pub algebra: HomAssocAlgebra,
}

/// `[a,b]_o = ⟨{a,b}, {a,o}, {o,o}, {o,b}, o⟩`, read off after recentring.
pub fn fiber_lie(s: &HomLieAffgebra, o: &AffinePoint) -> Result<FiberResult> {
    require_fixed(&s.alpha, o)?;
    let centred = s.recentered(o)?;
    let algebra = HomLieAlgebra::new(
        centred.bracket.tensor().to_vec(),
        centred.alpha.matrix().clone(),
    )?;
    let v = check_homlie_algebra(&algebra);
    if !v.passed() {
        return Err(Error::AxiomFailure(Box::new(v)));
    }
    Ok(FiberResult {
        base: o.clone(),
        algebra,
    })
}

/// `a •_o b = a•b − a•o + o•o − o•b + o`, read off after recentring.
pub fn fiber_assoc(s: &HomAssocAffgebra, o: &AffinePoint) -> Result<AssocFiberResult> {
    require_fixed(&s.alpha, o)?;
    let shift = AffineMap::translation(o.0.neg());
    let mul = s.mul.pushforward(&shift)?;
    let alpha = shift.compose(&s.alpha)?.compose(&AffineMap::translation(o.0.clone()))?;
    let algebra = HomAssocAlgebra::new(mul.tensor().to_vec(), alpha.matrix().clone())?;
    let v = check_homassoc_algebra(&algebra);
    if !v.passed() {
        return Err(Error::AxiomFailure(Box::new(v)));
    }
    Ok(AssocFiberResult {
        base: o.clone(),
        algebra,
    })
}

/// `r = {o,o}`, `λ(a) = {o,a} − {o,o}`, `κ(a) = {a,a} − {o,o}` in
/// coordinates centred at `o`, without re-checking the data invariants.
pub(crate) fn extract_raw(s: &HomLieAffgebra, o: &AffinePoint) -> Result<AffgebraData> {
    let anti = check_affine_antisymmetry(s);
    if !anti.passed() {
        return Err(Error::AxiomFailure(Box::new(anti)));
    }
    let fib = fiber_lie(s, o)?;
    let centred = s.recentered(o)?;
    let br = &centred.bracket;
    // B(a,a) = 0 by anti-symmetry, so {a,a} − {0,0} = (L1 + L2)a
    let kappa = br.left().add(br.right())?;
    AffgebraData::new(fib.algebra, kappa, br.right().clone(), br.constant().clone())
}

/// Recover `(L; α, κ, λ, r)` from a Hom-Lie affgebra at a fixed point `o`.
/// The result is re-verified; when `α` is not multiplicative the extracted
/// maps need not commute with `α`, which is reported as
/// `DataInvariantViolated`.
pub fn extract_data(s: &HomLieAffgebra, o: &AffinePoint) -> Result<AffgebraData> {
    let d = extract_raw(s, o)?;
    d.check_invariants()?;
    Ok(d)
}

/// `τ_o^e` together with the checks that it carries the fibre at `o` onto
/// the fibre at `e`.
#[derive(Debug, Clone)]
pub struct BasepointChange {
    pub tau: AffineMap,
    pub certificate: Vec<Verdict>,
}

impl BasepointChange {
    pub fn passed(&self) -> bool {
        self.certificate.iter().all(Verdict::passed)
    }
}

/// The fibre bracket as an operation on points:
/// `⟨{a,b}, {a,o}, {o,o}, {o,b}, o⟩`.
pub fn fiber_operation_coords<T: Coord>(
    op: &BiAffineMap,
    ctx: T::Ctx,
    o: &AffinePoint,
    a: &[T],
    b: &[T],
) -> Vec<T> {
    let oc: Vec<T> = o.0.iter().map(|x| T::lift(ctx, x)).collect();
    heap::<T>(&[
        &op.apply_coords(ctx, a, b),
        &op.apply_coords(ctx, a, &oc),
        &op.apply_coords(ctx, &oc, &oc),
        &op.apply_coords(ctx, &oc, b),
        &oc,
    ])
}

pub fn basepoint_change(s: &HomLieAffgebra, o: &AffinePoint, e: &AffinePoint) -> Result<BasepointChange> {
    require_fixed(&s.alpha, o)?;
    require_fixed(&s.alpha, e)?;
    let tau = translation_iso(o, e)?;
    let n = s.dim();
    let (ctx, p): (PolyCtx, Vec<Vec<MultiPoly>>) = symbolic_args(n, 2, s.field());
    let (a, b) = (&p[0], &p[1]);
    let lhs = tau.apply_coords(ctx, &fiber_operation_coords(&s.bracket, ctx, o, a, b));
    let rhs = fiber_operation_coords(
        &s.bracket,
        ctx,
        e,
        &tau.apply_coords(ctx, a),
        &tau.apply_coords(ctx, b),
    );
    let bracket = Verdict::from_residual("bracket_intertwined", &vsub(&lhs, &rhs), n);
    let lhs = tau.apply_coords(ctx, &s.alpha.apply_coords(ctx, a));
    let rhs = s.alpha.apply_coords(ctx, &tau.apply_coords(ctx, a));
    let alpha = Verdict::from_residual("alpha_intertwined", &vsub(&lhs, &rhs), n);
    Ok(BasepointChange {
        tau,
        certificate: vec![bracket, alpha],
    })
}
