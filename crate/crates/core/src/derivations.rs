//! Generalized derivations of Hom-Lie algebras as exact kernels.
//!
//! A triple `(λ, λ', λ'')` is a generalized derivation when
//! `[λ(a), α(b)] + [α(a), λ'(b)] = λ''([a,b])` and all three maps commute
//! with `α`. The spaces below are cut out of the flattened matrix unknowns
//! by one linear system each; by bilinearity the basis pairs suffice.

use std::fmt;
use std::str::FromStr;

use crate::constructions::pair_violation;
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Scalar, Vector};
use crate::structures::HomLieAlgebra;
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// Triples `(λ, λ', λ'')`.
    Delta,
    /// `[κa, αb] = [αa, κb]`.
    QuasiCentroid,
    /// `κ[a,b] = [κa, αb] = [αa, κb]`.
    Centroid,
    /// `λ[a,b] = [λa, αb] + [αa, λb]`.
    AlphaDerivation,
    /// Pairs `(κ, λ)` with `λ[a,b] = [λa, αb] − [αa, κb] + [αa, λb]`.
    Pair,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 5] = [
        SpaceKind::Delta,
        SpaceKind::QuasiCentroid,
        SpaceKind::Centroid,
        SpaceKind::AlphaDerivation,
        SpaceKind::Pair,
    ];

    /// Number of matrix unknowns.
    pub fn blocks(self) -> usize {
        match self {
            SpaceKind::Delta => 3,
            SpaceKind::Pair => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Delta => "delta",
            SpaceKind::QuasiCentroid => "qc",
            SpaceKind::Centroid => "centroid",
            SpaceKind::AlphaDerivation => "alphader",
            SpaceKind::Pair => "pair",
        }
    }

    fn equations(self) -> Vec<Vec<Term>> {
        use Slot::*;
        let t = |slot, block, sign| Term { slot, block, sign };
        match self {
            SpaceKind::Delta => vec![vec![t(Left, 0, 1), t(Right, 1, 1), t(Outer, 2, -1)]],
            SpaceKind::QuasiCentroid => vec![vec![t(Left, 0, 1), t(Right, 0, -1)]],
            SpaceKind::Centroid => vec![
                vec![t(Outer, 0, 1), t(Left, 0, -1)],
                vec![t(Left, 0, 1), t(Right, 0, -1)],
            ],
            SpaceKind::AlphaDerivation => vec![vec![t(Left, 0, 1), t(Right, 0, 1), t(Outer, 0, -1)]],
            // blocks: 0 = κ, 1 = λ
            SpaceKind::Pair => vec![vec![
                t(Outer, 1, 1),
                t(Left, 1, -1),
                t(Right, 0, 1),
                t(Right, 1, -1),
            ]],
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::PreconditionFailed(format!("unknown derivation space {s:?}")))
    }
}

/// Where an unknown matrix `X` enters a bracket equation on `(e_i, e_j)`.
#[derive(Debug, Clone, Copy)]
enum Slot {
    /// `[X e_i, α e_j]`
    Left,
    /// `[α e_i, X e_j]`
    Right,
    /// `X [e_i, e_j]`
    Outer,
}

#[derive(Debug, Clone, Copy)]
struct Term {
    slot: Slot,
    block: usize,
    sign: i64,
}

/// Kernel of one of the derivation systems. Each basis vector is the
/// row-major concatenation of `blocks` matrices of size `n × n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub kind: SpaceKind,
    pub n: usize,
    pub basis: Vec<Vector>,
    /// Always `None` here: the systems are homogeneous.
    pub particular: Option<Vector>,
    system: Matrix,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unknowns(&self) -> usize {
        self.kind.blocks() * self.n * self.n
    }

    pub fn field(&self) -> Field {
        self.system.field()
    }

    pub fn system(&self) -> &Matrix {
        &self.system
    }

    /// Split a flattened solution into its matrices.
    pub fn unflatten(&self, v: &Vector) -> Vec<Matrix> {
        let nn = self.n * self.n;
        (0..self.kind.blocks())
            .map(|b| {
                Matrix::from_flat(self.field(), self.n, self.n, &v.entries()[b * nn..(b + 1) * nn])
                    .expect("block size")
            })
            .collect()
    }

    pub fn flatten(&self, maps: &[Matrix]) -> Result<Vector> {
        if maps.len() != self.kind.blocks() {
            return Err(Error::DimensionMismatch {
                expected: self.kind.blocks(),
                found: maps.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.unknowns());
        for m in maps {
            if m.rows() != self.n || m.cols() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: m.rows().max(m.cols()),
                });
            }
            entries.extend_from_slice(m.flat());
        }
        Vector::new(self.field(), entries)
    }

    pub fn basis_maps(&self) -> Vec<Vec<Matrix>> {
        self.basis.iter().map(|v| self.unflatten(v)).collect()
    }

    pub fn contains(&self, maps: &[Matrix]) -> Result<bool> {
        let v = self.flatten(maps)?;
        Ok(self.system.mul_vec(&v)?.is_zero())
    }

    /// `Σ c_i · basis_i`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Result<Vec<Matrix>> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coeffs.len(),
            });
        }
        let mut acc = Vector::zeros(self.field(), self.unknowns());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc = acc.add(&b.scale(c))?;
        }
        Ok(self.unflatten(&acc))
    }
}

fn idx(n: usize, block: usize, r: usize, c: usize) -> usize {
    block * n * n + r * n + c
}

/// The linear system of `kind` over `L`, zero rows dropped.
pub fn assemble_system(l: &HomLieAlgebra, kind: SpaceKind) -> Matrix {
    let n = l.dim();
    let field = l.field();
    let sc = l.sc();
    let alpha = l.alpha();
    let width = kind.blocks() * n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut push = |row: Vec<Scalar>| {
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    };

    for eq in kind.equations() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = vec![field.zero(); width];
                    for t in &eq {
                        let sign = field.int(t.sign);
                        match t.slot {
                            Slot::Left => {
                                for p in 0..n {
                                    let mut s = field.zero();
                                    for q in 0..n {
                                        s = &s + &(&alpha[(q, j)] * &sc[k][(p, q)]);
                                    }
                                    let at = idx(n, t.block, p, i);
                                    row[at] = &row[at] + &(&sign * &s);
                                }
                            }
                            Slot::Right => {
                                for q in 0..n {
                                    let mut s = field.zero();
                                    for p in 0..n {
                                        s = &s + &(&alpha[(p, i)] * &sc[k][(p, q)]);
                                    }
                                    let at = idx(n, t.block, q, j);
                                    row[at] = &row[at] + &(&sign * &s);
                                }
                            }
                            Slot::Outer => {
                                for m in 0..n {
                                    let at = idx(n, t.block, k, m);
                                    row[at] = &row[at] + &(&sign * &sc[m][(i, j)]);
                                }
                            }
                        }
                    }
                    push(row);
                }
            }
        }
    }

    for block in 0..kind.blocks() {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![field.zero(); width];
                for m in 0..n {
                    let at = idx(n, block, r, m);
                    row[at] = &row[at] + &alpha[(m, c)];
                    let at = idx(n, block, m, c);
                    row[at] = &row[at] - &alpha[(r, m)];
                }
                push(row);
            }
        }
    }

    if rows.is_empty() {
        return Matrix::zeros(field, 0, width);
    }
    Matrix::from_rows(field, rows).expect("rows share width")
}

pub fn solution_space(l: &HomLieAlgebra, kind: SpaceKind) -> SolutionSpace {
    let system = assemble_system(l, kind);
    SolutionSpace {
        kind,
        n: l.dim(),
        basis: system.kernel(),
        particular: None,
        system,
    }
}

pub fn delta_space(l: &HomLieAlgebra) -> SolutionSpace {
    solution_space(l, SpaceKind::Delta)
}

pub fn qc_space(l: &HomLieAlgebra) -> SolutionSpace {
    solution_space(l, SpaceKind::QuasiCentroid)
}

pub fn centroid_space(l: &HomLieAlgebra) -> SolutionSpace {
    solution_space(l, SpaceKind::Centroid)
}

pub fn alpha_derivation_space(l: &HomLieAlgebra) -> SolutionSpace {
    solution_space(l, SpaceKind::AlphaDerivation)
}

pub fn pair_space(l: &HomLieAlgebra) -> SolutionSpace {
    solution_space(l, SpaceKind::Pair)
}

/// Is `(λ, λ', λ'')` a generalized derivation of `L`?
pub fn is_generalized_derivation(l: &HomLieAlgebra, lam: &Matrix, lam_p: &Matrix, lam_pp: &Matrix) -> Result<bool> {
    delta_space(l).contains(&[lam.clone(), lam_p.clone(), lam_pp.clone()])
}

/// A converted map together with the check that it lands where promised.
#[derive(Debug, Clone)]
pub struct Conversion {
    pub map: Matrix,
    pub certificate: Verdict,
}

/// `(δ, λ, λ) ∈ Δ(L)` gives `κ = λ − δ` satisfying the pair conditions.
pub fn delta_to_pair(delta: &Matrix, lam: &Matrix, l: &HomLieAlgebra) -> Result<Conversion> {
    if !is_generalized_derivation(l, delta, lam, lam)? {
        return Err(Error::NotInDelta(
            "(delta, lambda, lambda) violates the generalized derivation system".into(),
        ));
    }
    let kappa = lam.sub(delta)?;
    let certificate = match pair_violation(l, &kappa, lam) {
        None => Verdict::pass("pair_conditions"),
        Some(why) => Verdict::fail_note("pair_conditions", why),
    };
    Ok(Conversion {
        map: kappa,
        certificate,
    })
}

/// `(κ, λ)` satisfying the pair conditions gives `δ = λ − κ` with
/// `(δ, λ, λ) ∈ Δ(L)`.
pub fn pair_to_delta(kappa: &Matrix, lam: &Matrix, l: &HomLieAlgebra) -> Result<Conversion> {
    if let Some(why) = pair_violation(l, kappa, lam) {
        return Err(Error::NotInPairSpace(why));
    }
    let delta = lam.sub(kappa)?;
    let certificate = if is_generalized_derivation(l, &delta, lam, lam)? {
        Verdict::pass("generalized_derivation")
    } else {
        Verdict::fail_note("generalized_derivation", "(delta, lambda, lambda) not in Delta(L)")
    };
    Ok(Conversion {
        map: delta,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn sl2() -> HomLieAlgebra {
        let mut sc = vec![Matrix::zeros(Q, 3, 3); 3];
        for (k, i, j, v) in [(0, 2, 0, 2), (1, 2, 1, -2), (2, 0, 1, 1)] {
            sc[k][(i, j)] = Q.int(v);
            sc[k][(j, i)] = Q.int(-v);
        }
        HomLieAlgebra::new(sc, Matrix::identity(Q, 3)).unwrap()
    }

    fn heisenberg() -> HomLieAlgebra {
        let mut sc = vec![Matrix::zeros(Q, 3, 3); 3];
        sc[2][(0, 1)] = Q.one();
        sc[2][(1, 0)] = -Q.one();
        HomLieAlgebra::new(sc, Matrix::identity(Q, 3)).unwrap()
    }

    #[test]
    fn abelian_spaces() {
        let ab = HomLieAlgebra::abelian(Q, 2, Matrix::identity(Q, 2)).unwrap();
        assert_eq!(delta_space(&ab).dim(), 12);
        assert_eq!(alpha_derivation_space(&ab).dim(), 4);
        let ab1 = HomLieAlgebra::abelian(Q, 1, Matrix::from_ints(Q, &[&[2]])).unwrap();
        assert_eq!(delta_space(&ab1).dim(), 3);
        // commutant of diag(1, 2) is the diagonal matrices
        let ab = HomLieAlgebra::abelian(Q, 2, Matrix::from_ints(Q, &[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(qc_space(&ab).dim(), 2);
        assert_eq!(centroid_space(&ab).dim(), 2);
        assert_eq!(pair_space(&ab).dim(), 4);
    }

    #[test]
    fn sl2_spaces() {
        let l = sl2();
        assert_eq!(alpha_derivation_space(&l).dim(), 3);
        assert_eq!(centroid_space(&l).dim(), 1);
        assert_eq!(qc_space(&l).dim(), 1);
        let i = Matrix::identity(Q, 3);
        assert!(qc_space(&l).contains(&[i.clone()]).unwrap());
        assert!(centroid_space(&l).contains(&[Matrix::zeros(Q, 3, 3)]).unwrap());
        assert!(pair_space(&l).contains(&[i.clone(), i]).unwrap());
    }

    #[test]
    fn heisenberg_derivations() {
        assert_eq!(alpha_derivation_space(&heisenberg()).dim(), 6);
    }

    #[test]
    fn conversion_examples() {
        let l = sl2();
        let ad_h = l.ad(&Vector::from_ints(Q, &[0, 0, 1]));
        let fwd = delta_to_pair(&ad_h, &ad_h, &l).unwrap();
        assert!(fwd.map.is_zero() && fwd.certificate.passed());
        let back = pair_to_delta(&fwd.map, &ad_h, &l).unwrap();
        assert_eq!(back.map, ad_h);
        assert!(back.certificate.passed());

        let i = Matrix::identity(Q, 3);
        let back = pair_to_delta(&i, &i, &l).unwrap();
        assert!(back.map.is_zero() && back.certificate.passed());

        let bad = Matrix::diag(Q, &[Q.int(1), Q.int(0), Q.int(0)]);
        assert!(matches!(delta_to_pair(&bad, &i, &l), Err(Error::NotInDelta(_))));
        assert!(matches!(pair_to_delta(&bad, &i, &l), Err(Error::NotInPairSpace(_))));
    }

    #[test]
    fn names_round_trip() {
        for k in SpaceKind::ALL {
            assert_eq!(k.name().parse::<SpaceKind>().unwrap(), k);
        }
    }
}
