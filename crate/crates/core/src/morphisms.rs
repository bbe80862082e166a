//! Homomorphisms of Hom-Lie affgebras, checked directly and through the
//! linear data `(ψ, q')` of their fibres.

use crate::affine::{symbolic_args, AffineMap, AffinePoint};
use crate::constructions::{build_from_data, AffgebraData};
use crate::coords::vsub;
use crate::error::{Error, Result};
use crate::fiber::{alpha_fixed_points, extract_raw};
use crate::kernel::{Field, Matrix, Vector};
use crate::structures::{HomLieAffgebra, HomLieAlgebra};
use crate::verdict::Verdict;

/// A candidate homomorphism `φ: source → target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffgebraHom {
    pub phi: AffineMap,
    pub source: HomLieAffgebra,
    pub target: HomLieAffgebra,
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `φ∘α = α'∘φ` and `φ{a,b} = {φ(a), φ(b)}'`, one verdict each.
pub fn affgebra_hom_checks(h: &AffgebraHom) -> Result<Vec<Verdict>> {
    let n = h.source.dim();
    same_dim(n, h.target.dim())?;
    same_dim(n, h.phi.dim())?;
    let (ctx, p) = symbolic_args(n, 2, h.source.field());
    let (a, b) = (&p[0], &p[1]);
    let phi = |x: &[_]| h.phi.apply_coords(ctx, x);

    let lhs = phi(&h.source.alpha.apply_coords(ctx, a));
    let rhs = h.target.alpha.apply_coords(ctx, &phi(a));
    let alpha = Verdict::from_residual("alpha_commutes", &vsub(&lhs, &rhs), n);

    let lhs = phi(&h.source.bracket.apply_coords(ctx, a, b));
    let rhs = h.target.bracket.apply_coords(ctx, &phi(a), &phi(b));
    let bracket = Verdict::from_residual("bracket_preserved", &vsub(&lhs, &rhs), n);
    Ok(vec![alpha, bracket])
}

pub fn check_affgebra_hom(h: &AffgebraHom) -> Result<Verdict> {
    Ok(Verdict::all("affgebra_hom", affgebra_hom_checks(h)?))
}

/// `ψ(a) = φ(a) − φ(o)` (the linear part of `φ`) and `q' = φ(o)`.
pub fn linearize_hom(h: &AffgebraHom, o: &AffinePoint) -> Result<(Matrix, Vector)> {
    let fixed = h.source.alpha.apply(o)?;
    if &fixed != o {
        return Err(Error::NotFixedPoint(format!("alpha({o}) = {fixed}")));
    }
    Ok((h.phi.matrix().clone(), h.phi.apply(o)?.0))
}

/// Linear data of a homomorphism between two presentations
/// `A(L; α, κ, λ, r) → A(L'; α', κ', λ', r')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataHom {
    pub psi: Matrix,
    pub qprime: Vector,
    pub source: AffgebraData,
    pub target: AffgebraData,
}

fn verdict_eq(name: &str, lhs: &Matrix, rhs: &Matrix) -> Verdict {
    if lhs == rhs {
        Verdict::pass(name)
    } else {
        Verdict::fail_note(name, format!("{lhs:?} != {rhs:?}"))
    }
}

fn verdict_vec(name: &str, lhs: &Vector, rhs: &Vector) -> Verdict {
    if lhs == rhs {
        Verdict::pass(name)
    } else {
        Verdict::fail_note(name, format!("{lhs} != {rhs}"))
    }
}

/// `ψ[a,b] = [ψa, ψb]'` on basis pairs.
fn bracket_hom(psi: &Matrix, l: &HomLieAlgebra, lt: &HomLieAlgebra) -> Verdict {
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (Vector::unit(l.field(), n, i), Vector::unit(l.field(), n, j));
            let lhs = psi.mul_vec(&l.bracket(&a, &b)).expect("shape");
            let rhs = lt.bracket(&psi.mul_vec(&a).expect("shape"), &psi.mul_vec(&b).expect("shape"));
            if lhs != rhs {
                return Verdict::fail_note(
                    "psi_bracket_hom",
                    format!("fails at (e{}, e{}): {lhs} != {rhs}", i + 1, j + 1),
                );
            }
        }
    }
    Verdict::pass("psi_bracket_hom")
}

fn check_shapes(d: &DataHom) -> Result<()> {
    let n = d.source.dim();
    same_dim(n, d.target.dim())?;
    same_dim(n, d.psi.rows())?;
    same_dim(n, d.psi.cols())?;
    same_dim(n, d.qprime.dim())
}

/// Line-by-line verdicts: `ψ` is a Hom-Lie algebra map, `q' = α'(q')`,
/// `ψκ = κ'ψ`, `ψλ = (ad_{q'} + λ')ψ`, `ψ(r) = r' − q' + κ'(q')`.
pub fn data_hom_checks(d: &DataHom) -> Result<Vec<Verdict>> {
    check_shapes(d)?;
    let (s, t) = (&d.source, &d.target);
    let (l, lt) = (&s.algebra, &t.algebra);
    let psi = &d.psi;
    let q = &d.qprime;
    let ad_q = lt.ad(q);
    Ok(vec![
        bracket_hom(psi, l, lt),
        verdict_eq("psi_alpha_hom", &psi.mul(l.alpha())?, &lt.alpha().mul(psi)?),
        verdict_vec("qprime_fixed", q, &lt.alpha().mul_vec(q)?),
        verdict_eq("kappa_intertwined", &psi.mul(&s.kappa)?, &t.kappa.mul(psi)?),
        verdict_eq(
            "lambda_intertwined",
            &psi.mul(&s.lambda)?,
            &ad_q.add(&t.lambda)?.mul(psi)?,
        ),
        verdict_vec(
            "constant_matched",
            &psi.mul_vec(&s.r)?,
            &t.r.sub(q)?.add(&t.kappa.mul_vec(q)?)?,
        ),
    ])
}

pub fn check_data_hom(d: &DataHom) -> Result<Verdict> {
    Ok(Verdict::all("data_hom", data_hom_checks(d)?))
}

/// `φ(a) = ψ·a + q'` between the assembled affgebras.
pub fn assemble_hom(d: &DataHom) -> Result<AffgebraHom> {
    let v = check_data_hom(d)?;
    if !v.passed() {
        return Err(Error::DataHomInvalid(v.to_string()));
    }
    Ok(AffgebraHom {
        phi: AffineMap::new(d.psi.clone(), d.qprime.clone())?,
        source: build_from_data(&d.source)?,
        target: build_from_data(&d.target)?,
    })
}

/// The base point used on the target side: the origin when `α'` fixes
/// it, otherwise the canonical particular fixed point.
pub fn target_base(s: &HomLieAffgebra) -> Result<AffinePoint> {
    let zero = AffinePoint::origin(s.field(), s.dim());
    if s.alpha.apply(&zero)? == zero {
        return Ok(zero);
    }
    alpha_fixed_points(&s.alpha)
        .map(|f| f.particular)
        .ok_or_else(|| Error::NotFixedPoint("alpha of the target has no fixed point".into()))
}

/// Run the direct check and the data-level check of `φ` and insist that
/// they agree. Both sides are recentred: the source at `o`, the target at
/// [`target_base`].
pub fn equivalence_check(
    s: &HomLieAffgebra,
    t: &HomLieAffgebra,
    phi: &AffineMap,
    o: &AffinePoint,
) -> Result<Verdict> {
    let h = AffgebraHom {
        phi: phi.clone(),
        source: s.clone(),
        target: t.clone(),
    };
    let direct = check_affgebra_hom(&h)?;
    let (psi, phi_o) = linearize_hom(&h, o)?;
    let o_t = target_base(t)?;
    let d = DataHom {
        psi,
        qprime: phi_o.sub(&o_t.0)?,
        source: extract_raw(s, o)?,
        target: extract_raw(t, &o_t)?,
    };
    let data = check_data_hom(&d)?;
    if direct.passed() != data.passed() {
        return Err(Error::InternalInconsistency(format!(
            "direct check says {direct}, data check says {data}"
        )));
    }
    Ok(direct.renamed("equivalence"))
}

/// Isomorphism form of the data conditions, for invertible `ψ` and
/// `q = ψ⁻¹(q')`: `κ' = ψκψ⁻¹`, `λ' = ψ(λ − ad_q)ψ⁻¹`,
/// `r' = ψ(r + q − κ(q))`, `q' = α'(ψ(q))`, plus `ψ` a Hom-Lie algebra map.
pub fn iso_data_checks(d: &DataHom) -> Result<Vec<Verdict>> {
    check_shapes(d)?;
    let inv = d.psi.inverse()?.ok_or(Error::PsiNotInvertible)?;
    let (s, t) = (&d.source, &d.target);
    let (l, lt) = (&s.algebra, &t.algebra);
    let psi = &d.psi;
    let q = inv.mul_vec(&d.qprime)?;
    let conj = |m: &Matrix| psi.mul(m).and_then(|x| x.mul(&inv));
    Ok(vec![
        bracket_hom(psi, l, lt),
        verdict_eq("psi_alpha_hom", &psi.mul(l.alpha())?, &lt.alpha().mul(psi)?),
        verdict_eq("kappa_conjugate", &t.kappa, &conj(&s.kappa)?),
        verdict_eq("lambda_conjugate", &t.lambda, &conj(&s.lambda.sub(&l.ad(&q))?)?),
        verdict_vec(
            "constant_transported",
            &t.r,
            &psi.mul_vec(&s.r.add(&q)?.sub(&s.kappa.mul_vec(&q)?)?)?,
        ),
        verdict_vec("qprime_fixed", &d.qprime, &lt.alpha().mul_vec(&psi.mul_vec(&q)?)?),
    ])
}

pub fn check_iso_data(d: &DataHom) -> Result<Verdict> {
    Ok(Verdict::all("iso_data", iso_data_checks(d)?))
}

/// Dimension of `[L, L]`, an isomorphism invariant.
pub fn derived_rank(l: &HomLieAlgebra) -> usize {
    let n = l.dim();
    let cols: Vec<Vector> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            l.bracket(&Vector::unit(l.field(), n, i), &Vector::unit(l.field(), n, j))
        })
        .collect();
    if cols.is_empty() {
        return 0;
    }
    Matrix::from_columns(l.field(), n, &cols).rank()
}

/// Every invertible `(ψ, q')` that passes [`check_data_hom`], by exhaustive
/// search. Only for prime fields and small dimensions (`p^(n²+n)` cases).
pub fn enumerate_data_isos(source: &AffgebraData, target: &AffgebraData) -> Result<Vec<(Matrix, Vector)>> {
    let field = source.field();
    let Field::Prime(p) = field else {
        return Err(Error::PreconditionFailed("exhaustive search needs a prime field".into()));
    };
    let n = source.dim();
    same_dim(n, target.dim())?;
    let count = (p as u128).checked_pow((n * n + n) as u32).unwrap_or(u128::MAX);
    if count > 1_000_000 {
        return Err(Error::PreconditionFailed(format!("{count} candidates is too many")));
    }
    let mut found = Vec::new();
    let mut digits = vec![0u64; n * n + n];
    for _ in 0..count {
        let entries: Vec<_> = digits.iter().map(|&d| field.int(d as i64)).collect();
        let psi = Matrix::from_flat(field, n, n, &entries[..n * n])?;
        let qprime = Vector::new(field, entries[n * n..].to_vec())?;
        if psi.rank() == n {
            let d = DataHom {
                psi,
                qprime,
                source: source.clone(),
                target: target.clone(),
            };
            if check_data_hom(&d)?.passed() {
                found.push((d.psi, d.qprime));
            }
        }
        for x in digits.iter_mut() {
            *x += 1;
            if *x < p {
                break;
            }
            *x = 0;
        }
    }
    Ok(found)
}
