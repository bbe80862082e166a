//! Structure-producing constructions: induced brackets, Yau twists and the
//! bracket `{a,b} = [a,b] + κ(a) + λ(b − a) + r` built from data.

use crate::affine::{symbolic_args, AffineMap, BiAffineMap};
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Scalar, Vector};
use crate::poly::MultiPoly;
use crate::structures::{
    check_algebra_multiplicativity, check_hom_associativity, check_hom_lie_affgebra,
    check_hom_prelie, check_homlie_algebra, check_multiplicativity, HomAssocAffgebra,
    HomLieAffgebra, HomLieAlgebra, HomPreLieAffgebra,
};
use crate::verdict::Verdict;

fn require(v: Verdict, what: &str) -> Result<()> {
    if v.passed() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!("{what}: {v}")))
    }
}

/// `{a,b} = ⟨ab, ba, α(b)⟩` on a multiplicative Hom-associative affgebra.
pub fn commutator_bracket(s: &HomAssocAffgebra) -> Result<HomLieAffgebra> {
    require(check_hom_associativity(s), "input is not Hom-associative")?;
    require(check_multiplicativity(&s.mul, &s.alpha), "input is not multiplicative")?;
    Ok(commutator_of(&s.mul, &s.alpha))
}

fn commutator_of(op: &BiAffineMap, alpha: &AffineMap) -> HomLieAffgebra {
    let bracket = op
        .sub(&op.swapped())
        .and_then(|m| m.add(&BiAffineMap::from_right(alpha)))
        .expect("same dimension");
    HomLieAffgebra::new(bracket, alpha.clone()).expect("same dimension")
}

/// `{a,b} = ⟨a•b, b•a, α(b)⟩`; `α` is applied to the second argument.
pub fn prelie_to_lie(s: &HomPreLieAffgebra) -> Result<HomLieAffgebra> {
    require(check_hom_prelie(s), "input is not Hom-pre-Lie")?;
    require(check_multiplicativity(&s.prod, &s.alpha), "input is not multiplicative")?;
    Ok(commutator_of(&s.prod, &s.alpha))
}

/// `{a,b} = ξ ▶_a b = ξ·b + (1 − ξ)·a`.
pub fn scalar_action_bracket(dim: usize, xi: &Scalar, alpha: &AffineMap) -> Result<HomLieAffgebra> {
    if alpha.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: alpha.dim(),
        });
    }
    let field = alpha.field();
    let one_minus = &field.one() - xi;
    let bracket = BiAffineMap::new(
        vec![Matrix::zeros(field, dim, dim); dim],
        Matrix::scalar(field, dim, &one_minus),
        Matrix::scalar(field, dim, xi),
        Vector::zeros(field, dim),
    )?;
    HomLieAffgebra::new(bracket, alpha.clone())
}

/// `{a,b} = φ(a)`.
pub fn constant_bracket(dim: usize, phi: &AffineMap, alpha: &AffineMap) -> Result<HomLieAffgebra> {
    if phi.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: phi.dim(),
        });
    }
    HomLieAffgebra::new(BiAffineMap::from_left(phi), alpha.clone())
}

fn endomorphism(op: &BiAffineMap, alpha: &AffineMap) -> Result<()> {
    if op.dim() != alpha.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            found: alpha.dim(),
        });
    }
    let v = check_multiplicativity(op, alpha).renamed("endomorphism");
    if v.passed() {
        Ok(())
    } else {
        Err(Error::NotEndomorphism(Box::new(v)))
    }
}

fn untwisted(is_id: bool) -> Result<()> {
    if is_id {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(
            "Yau twists start from an untwisted structure (alpha = id)".into(),
        ))
    }
}

/// `(A, α∘μ, α)` from an associative affgebra and an endomorphism `α`.
pub fn yau_twist_assoc(s: &HomAssocAffgebra, alpha: &AffineMap) -> Result<HomAssocAffgebra> {
    untwisted(s.is_untwisted())?;
    require(check_hom_associativity(s), "input is not associative")?;
    endomorphism(&s.mul, alpha)?;
    HomAssocAffgebra::new(s.mul.post_compose(alpha)?, alpha.clone())
}

/// `(A, α∘{−,−}, α)` from a Lie affgebra and an endomorphism `α`.
pub fn yau_twist_lie(s: &HomLieAffgebra, alpha: &AffineMap) -> Result<HomLieAffgebra> {
    untwisted(s.is_untwisted())?;
    for v in check_hom_lie_affgebra(s) {
        require(v, "input is not a Lie affgebra")?;
    }
    endomorphism(&s.bracket, alpha)?;
    HomLieAffgebra::new(s.bracket.post_compose(alpha)?, alpha.clone())
}

/// `a •_α b = α(a) • α(b)` from a pre-Lie affgebra and an endomorphism `α`.
pub fn yau_twist_prelie(s: &HomPreLieAffgebra, alpha: &AffineMap) -> Result<HomPreLieAffgebra> {
    untwisted(s.is_untwisted())?;
    require(check_hom_prelie(s), "input is not pre-Lie")?;
    endomorphism(&s.prod, alpha)?;
    HomPreLieAffgebra::new(s.prod.pre_compose(alpha, alpha)?, alpha.clone(), s.side)
}

fn commuting(a: &AffineMap, b: &AffineMap) -> Result<()> {
    if a.compose(b)? == b.compose(a)? {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(
            "the new twist must commute with the existing alpha".into(),
        ))
    }
}

/// Twist an already twisted Hom-associative affgebra again:
/// `(A, β∘μ, β∘α)` for an endomorphism `β` commuting with `α`.
pub fn retwist_assoc(s: &HomAssocAffgebra, beta: &AffineMap) -> Result<HomAssocAffgebra> {
    endomorphism(&s.mul, beta)?;
    commuting(beta, &s.alpha)?;
    HomAssocAffgebra::new(s.mul.post_compose(beta)?, beta.compose(&s.alpha)?)
}

/// Lie analogue of [`retwist_assoc`].
pub fn retwist_lie(s: &HomLieAffgebra, beta: &AffineMap) -> Result<HomLieAffgebra> {
    endomorphism(&s.bracket, beta)?;
    commuting(beta, &s.alpha)?;
    HomLieAffgebra::new(s.bracket.post_compose(beta)?, beta.compose(&s.alpha)?)
}

/// `(L; α, κ, λ, r)`: a Hom-Lie algebra with two linear maps and a vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffgebraData {
    pub algebra: HomLieAlgebra,
    pub kappa: Matrix,
    pub lambda: Matrix,
    pub r: Vector,
}

impl AffgebraData {
    pub fn new(algebra: HomLieAlgebra, kappa: Matrix, lambda: Matrix, r: Vector) -> Result<Self> {
        let n = algebra.dim();
        for m in [&kappa, &lambda] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        if r.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.dim(),
            });
        }
        for f in [kappa.field(), lambda.field(), r.field()] {
            if f != algebra.field() {
                return Err(Error::FieldMismatch(algebra.field().to_string(), f.to_string()));
            }
        }
        Ok(AffgebraData {
            algebra,
            kappa,
            lambda,
            r,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// `κα = ακ`, `λα = αλ`, and
    /// `λ[a,b] = [λa, αb] − [αa, κb] + [αa, λb]` on every basis pair.
    pub fn check_invariants(&self) -> Result<()> {
        match pair_violation(&self.algebra, &self.kappa, &self.lambda) {
            None => Ok(()),
            Some(msg) => Err(Error::DataInvariantViolated(msg)),
        }
    }

    pub fn invariants_hold(&self) -> bool {
        self.check_invariants().is_ok()
    }
}

/// First violated pair condition for `(κ, λ)` over `L`, if any.
pub(crate) fn pair_violation(l: &HomLieAlgebra, kappa: &Matrix, lambda: &Matrix) -> Option<String> {
    let alpha = l.alpha();
    if kappa.mul(alpha).ok()? != alpha.mul(kappa).ok()? {
        return Some("kappa does not commute with alpha".into());
    }
    if lambda.mul(alpha).ok()? != alpha.mul(lambda).ok()? {
        return Some("lambda does not commute with alpha".into());
    }
    let n = l.dim();
    let e = |i| Vector::unit(l.field(), n, i);
    let ap = |m: &Matrix, v: &Vector| m.mul_vec(v).expect("square");
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (e(i), e(j));
            let lhs = ap(lambda, &l.bracket(&a, &b));
            let rhs = l
                .bracket(&ap(lambda, &a), &ap(alpha, &b))
                .sub(&l.bracket(&ap(alpha, &a), &ap(kappa, &b)))
                .and_then(|v| v.add(&l.bracket(&ap(alpha, &a), &ap(lambda, &b))))
                .expect("same dimension");
            if lhs != rhs {
                return Some(format!(
                    "lambda[a,b] = [lambda a, alpha b] - [alpha a, kappa b] + [alpha a, lambda b] fails at (e{}, e{})",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    None
}

/// The bracket `B = sc`, `L1 = κ − λ`, `L2 = λ`, `c = r`, with no checks.
pub fn assemble_bracket(d: &AffgebraData) -> Result<HomLieAffgebra> {
    let bracket = BiAffineMap::new(
        d.algebra.sc().to_vec(),
        d.kappa.sub(&d.lambda)?,
        d.lambda.clone(),
        d.r.clone(),
    )?;
    HomLieAffgebra::new(bracket, d.algebra.alpha_map())
}

/// `{a,b} = [a,b] + κ(a) + λ(b − a) + r` with `α` the linear map of `L`.
pub fn build_from_data(d: &AffgebraData) -> Result<HomLieAffgebra> {
    d.check_invariants()?;
    assemble_bracket(d)
}

/// `{a,b} = [a,b] + α(b) + r`, i.e. the data `κ = λ = α`. Requires `α` to be
/// multiplicative for the bracket.
pub fn affine_from_homlie(l: &HomLieAlgebra, r: &Vector) -> Result<HomLieAffgebra> {
    let v = check_homlie_algebra(l);
    if !v.passed() {
        return Err(Error::AxiomFailure(Box::new(v)));
    }
    let m = check_algebra_multiplicativity(l);
    if !m.passed() {
        return Err(Error::AlphaNotMultiplicative(Box::new(m)));
    }
    let d = AffgebraData::new(l.clone(), l.alpha().clone(), l.alpha().clone(), r.clone())?;
    build_from_data(&d)
}

/// `[α(a), κ(a)] = 0` as a polynomial identity in the coordinates of `a`.
pub fn check_alpha_kappa_bracket(l: &HomLieAlgebra, kappa: &Matrix) -> Result<Verdict> {
    let n = l.dim();
    let (ctx, p) = symbolic_args(n, 1, l.field());
    let a = &p[0];
    let alpha_a = l.alpha_map().apply_coords(ctx, a);
    let kappa_a = AffineMap::linear(kappa.clone())?.apply_coords(ctx, a);
    let r: Vec<MultiPoly> = l.bracket_map().apply_coords(ctx, &alpha_a, &kappa_a);
    Ok(Verdict::from_residual("alpha_kappa_bracket", &r, n))
}
