//! Independent oracles. Nothing here uses the symbolic checkers or the
//! index-contraction assembly of the library: brackets are evaluated on
//! concrete vectors with plain loops, and derivation systems are built one
//! unknown at a time by evaluating the defining equations.

#![allow(dead_code)]

use affgebra::affine::random_scalar;
use affgebra::{AffgebraData, DataHom, Field, HomLieAlgebra, Matrix, Scalar, Vector};
use rand::Rng;

pub const Q: Field = Field::Rationals;

/// `[x, y]_k = Σ_ij x_i y_j sc[k][i][j]`, by plain loops.
pub fn br(sc: &[Matrix], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = sc.len();
    let f = x.first().map(Scalar::field).unwrap_or(Q);
    (0..n)
        .map(|k| {
            let mut s = f.zero();
            for i in 0..n {
                for j in 0..n {
                    s = &s + &(&(&x[i] * &y[j]) * &sc[k][(i, j)]);
                }
            }
            s
        })
        .collect()
}

pub fn apply(m: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| {
            let mut s = m.field().zero();
            for (j, xj) in x.iter().enumerate() {
                s = &s + &(&m[(i, j)] * xj);
            }
            s
        })
        .collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn unit(f: Field, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

/// Hom-Jacobi on all basis triples.
pub fn homlie_oracle(sc: &[Matrix], alpha: &Matrix) -> bool {
    let n = sc.len();
    let f = alpha.field();
    let e = |i| unit(f, n, i);
    for i in 0..n {
        for j in 0..n {
            if br(sc, &e(i), &e(j)) != br(sc, &e(j), &e(i)).iter().map(|x| -x).collect::<Vec<_>>() {
                return false;
            }
            for k in 0..n {
                let mut total = vec![f.zero(); n];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    total = add(&total, &br(sc, &apply(alpha, &e(a)), &br(sc, &e(b), &e(c))));
                }
                if total.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Residual of one derivation-type system, evaluated for concrete maps.
/// Returns every scalar that must vanish.
pub fn residuals(kind: &str, sc: &[Matrix], alpha: &Matrix, maps: &[Matrix]) -> Vec<Scalar> {
    let n = sc.len();
    let f = alpha.field();
    let e = |i| unit(f, n, i);
    let mut out = Vec::new();
    for m in maps {
        let c = m.mul(alpha).unwrap().sub(&alpha.mul(m).unwrap()).unwrap();
        out.extend_from_slice(c.flat());
    }
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (e(i), e(j));
            let (aa, ab) = (apply(alpha, &a), apply(alpha, &b));
            let ab_br = br(sc, &a, &b);
            match kind {
                "delta" => {
                    let lhs = add(&br(sc, &apply(&maps[0], &a), &ab), &br(sc, &aa, &apply(&maps[1], &b)));
                    out.extend(sub(&lhs, &apply(&maps[2], &ab_br)));
                }
                "qc" => {
                    out.extend(sub(&br(sc, &apply(&maps[0], &a), &ab), &br(sc, &aa, &apply(&maps[0], &b))));
                }
                "centroid" => {
                    let left = br(sc, &apply(&maps[0], &a), &ab);
                    out.extend(sub(&apply(&maps[0], &ab_br), &left));
                    out.extend(sub(&left, &br(sc, &aa, &apply(&maps[0], &b))));
                }
                "alphader" => {
                    let rhs = add(&br(sc, &apply(&maps[0], &a), &ab), &br(sc, &aa, &apply(&maps[0], &b)));
                    out.extend(sub(&apply(&maps[0], &ab_br), &rhs));
                }
                "pair" => {
                    let (kappa, lambda) = (&maps[0], &maps[1]);
                    let rhs = add(
                        &sub(&br(sc, &apply(lambda, &a), &ab), &br(sc, &aa, &apply(kappa, &b))),
                        &br(sc, &aa, &apply(lambda, &b)),
                    );
                    out.extend(sub(&apply(lambda, &ab_br), &rhs));
                }
                _ => panic!("unknown space {kind}"),
            }
        }
    }
    out
}

pub fn blocks(kind: &str) -> usize {
    match kind {
        "delta" => 3,
        "pair" => 2,
        _ => 1,
    }
}

/// Dimension of the solution space, by evaluating the system on every
/// elementary unknown and taking the rank of the resulting columns.
pub fn space_dim(kind: &str, sc: &[Matrix], alpha: &Matrix) -> usize {
    let n = sc.len();
    let f = alpha.field();
    let nb = blocks(kind);
    let mut cols = Vec::new();
    for b in 0..nb {
        for r in 0..n {
            for c in 0..n {
                let mut maps = vec![Matrix::zeros(f, n, n); nb];
                maps[b][(r, c)] = f.one();
                cols.push(Vector::new(f, residuals(kind, sc, alpha, &maps)).unwrap());
            }
        }
    }
    let height = cols[0].dim();
    nb * n * n - Matrix::from_columns(f, height, &cols).rank()
}

pub fn satisfies(kind: &str, sc: &[Matrix], alpha: &Matrix, maps: &[Matrix]) -> bool {
    residuals(kind, sc, alpha, maps).iter().all(Scalar::is_zero)
}

/// Structure constants transported along `ψ`: `[x, y]' = ψ[ψ⁻¹x, ψ⁻¹y]`.
pub fn transport_sc(sc: &[Matrix], psi: &Matrix, psi_inv: &Matrix) -> Vec<Matrix> {
    let n = sc.len();
    let f = psi.field();
    let mut out = vec![Matrix::zeros(f, n, n); n];
    for i in 0..n {
        for j in 0..n {
            let v = apply(psi, &br(sc, &apply(psi_inv, &unit(f, n, i)), &apply(psi_inv, &unit(f, n, j))));
            for (k, x) in v.into_iter().enumerate() {
                out[k][(i, j)] = x;
            }
        }
    }
    out
}

/// Evaluate `{a, b} = B(a,b) + L1 a + L2 b + c` directly.
pub fn eval_bracket(b: &affgebra::BiAffineMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    add(
        &add(&br(b.tensor(), x, y), &apply(b.left(), x)),
        &add(&apply(b.right(), y), b.constant().entries()),
    )
}

/// Product of a unit lower and a unit upper triangular matrix with small
/// random entries; always invertible.
pub fn random_invertible<R: Rng>(rng: &mut R, f: Field, n: usize) -> Matrix {
    let mut lo = Matrix::identity(f, n);
    let mut up = Matrix::identity(f, n);
    for i in 0..n {
        for j in 0..i {
            lo[(i, j)] = f.int(rng.gen_range(-2..=2));
            up[(j, i)] = f.int(rng.gen_range(-2..=2));
        }
    }
    lo.mul(&up).unwrap()
}

/// A random point fixed by `α`.
pub fn random_fixed<R: Rng>(rng: &mut R, alpha: &Matrix) -> Vector {
    let f = alpha.field();
    let n = alpha.rows();
    let ker = alpha.sub(&Matrix::identity(f, n)).unwrap().kernel();
    let mut q = Vector::zeros(f, n);
    for v in ker {
        q = q.add(&v.scale(&random_scalar(rng, f))).unwrap();
    }
    q
}

/// The data `d` carried along the isomorphism `a ↦ ψa + ψq`, with `q`
/// fixed by `α`. The target data is computed from the transport formulas
/// evaluated by hand, so the result is a valid data-level isomorphism.
pub fn transported(d: &AffgebraData, psi: &Matrix, q: &Vector) -> DataHom {
    let inv = psi.inverse().unwrap().unwrap();
    let conj = |m: &Matrix| psi.mul(m).unwrap().mul(&inv).unwrap();
    let l = &d.algebra;
    let lt = HomLieAlgebra::new(transport_sc(l.sc(), psi, &inv), conj(l.alpha())).unwrap();
    let n = l.dim();
    let mut ad_q = Matrix::zeros(psi.field(), n, n);
    for j in 0..n {
        let col = br(l.sc(), q.entries(), &unit(psi.field(), n, j));
        for (i, x) in col.into_iter().enumerate() {
            ad_q[(i, j)] = x;
        }
    }
    let r_t = apply(psi, &sub(&add(d.r.entries(), q.entries()), &apply(&d.kappa, q.entries())));
    let target = AffgebraData::new(
        lt,
        conj(&d.kappa),
        conj(&d.lambda.sub(&ad_q).unwrap()),
        Vector::new(psi.field(), r_t).unwrap(),
    )
    .unwrap();
    DataHom {
        psi: psi.clone(),
        qprime: psi.mul_vec(q).unwrap(),
        source: d.clone(),
        target,
    }
}
