//! Concrete structures: classical Hom-Lie algebras, sampled data, and
//! affine spaces of matrices (the `sna(n)` family and row-stochastic
//! matrices) with their induced operations.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine::{
    interpolate_affine, interpolate_biaffine, random_point, random_scalar, validate_biaffine, AffineMap,
    AffinePoint, BiAffineMap, BiAffineValidation,
};
use crate::constructions::{build_from_data, constant_bracket, scalar_action_bracket, AffgebraData};
use crate::derivations::pair_space;
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Scalar, Vector};
use crate::structures::{
    check_affine_jacobi, check_hom_associativity, check_hom_lie_affgebra, check_homlie_algebra, HomAssocAffgebra,
    HomLieAffgebra, HomLieAlgebra,
};
use crate::verdict::Verdict;

/// Named Lie algebras of the test corpus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Classical {
    Abelian(usize),
    /// `[e1, e2] = e2`
    Aff1,
    /// `[x, y] = z`
    Heisenberg3,
    /// basis `e, f, h`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`
    Sl2,
    DirectSum(Vec<Classical>),
}

impl Classical {
    pub fn dim(&self) -> usize {
        match self {
            Classical::Abelian(n) => *n,
            Classical::Aff1 => 2,
            Classical::Heisenberg3 | Classical::Sl2 => 3,
            Classical::DirectSum(parts) => parts.iter().map(Classical::dim).sum(),
        }
    }

    /// Structure constants `sc[k][(i, j)]`.
    pub fn structure_constants(&self, field: Field) -> Vec<Matrix> {
        let n = self.dim();
        let mut sc = vec![Matrix::zeros(field, n, n); n];
        let mut set = |k: usize, i: usize, j: usize, v: i64| {
            sc[k][(i, j)] = field.int(v);
            sc[k][(j, i)] = field.int(-v);
        };
        match self {
            Classical::Abelian(_) => {}
            Classical::Aff1 => set(1, 0, 1, 1),
            Classical::Heisenberg3 => set(2, 0, 1, 1),
            Classical::Sl2 => {
                set(0, 2, 0, 2);
                set(1, 2, 1, -2);
                set(2, 0, 1, 1);
            }
            Classical::DirectSum(parts) => {
                let mut off = 0;
                for part in parts {
                    let m = part.dim();
                    for (k, block) in part.structure_constants(field).iter().enumerate() {
                        for i in 0..m {
                            for j in 0..m {
                                sc[off + k][(off + i, off + j)] = block[(i, j)].clone();
                            }
                        }
                    }
                    off += m;
                }
            }
        }
        sc
    }

    /// A fixed non-identity `α` compatible with the bracket.
    pub fn standard_alpha(&self, field: Field) -> Matrix {
        let diag = |xs: Vec<Scalar>| Matrix::diag(field, &xs);
        match self {
            Classical::Abelian(n) => diag((1..=*n as i64).map(|i| field.int(i)).collect()),
            Classical::Aff1 => diag(vec![field.int(1), field.int(2)]),
            Classical::Heisenberg3 => diag(vec![field.int(1), field.int(2), field.int(2)]),
            // e ↦ f, f ↦ e, h ↦ −h: an automorphism that is self-adjoint for
            // the Killing form, so both Hom-Jacobi and multiplicativity hold
            Classical::Sl2 => Matrix::from_ints(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]),
            Classical::DirectSum(parts) => {
                let n = self.dim();
                let mut m = Matrix::zeros(field, n, n);
                let mut off = 0;
                for part in parts {
                    let a = part.standard_alpha(field);
                    for i in 0..part.dim() {
                        for j in 0..part.dim() {
                            m[(off + i, off + j)] = a[(i, j)].clone();
                        }
                    }
                    off += part.dim();
                }
                m
            }
        }
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classical::Abelian(n) => write!(f, "abelian{n}"),
            Classical::Aff1 => write!(f, "aff1"),
            Classical::Heisenberg3 => write!(f, "heisenberg3"),
            Classical::Sl2 => write!(f, "sl2"),
            Classical::DirectSum(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join("+"))
            }
        }
    }
}

impl FromStr for Classical {
    type Err = Error;

    /// `abelian2`, `abelian(2)`, `aff1`, `heisenberg3` (or `heis3`), `sl2`,
    /// and `+`-separated direct sums such as `aff1+sl2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('+') {
            let parts = s.split('+').map(str::parse).collect::<Result<Vec<_>>>()?;
            return Ok(Classical::DirectSum(parts));
        }
        let unknown = || Error::PreconditionFailed(format!("unknown fixture {s:?}"));
        match s {
            "aff1" => Ok(Classical::Aff1),
            "heisenberg3" | "heis3" => Ok(Classical::Heisenberg3),
            "sl2" => Ok(Classical::Sl2),
            _ => {
                let rest = s.strip_prefix("abelian").ok_or_else(unknown)?;
                let digits = rest.trim_start_matches('(').trim_end_matches(')');
                digits.parse().map(Classical::Abelian).map_err(|_| unknown())
            }
        }
    }
}

/// The named algebra with the given `α`; fails with `AlphaIncompatible`
/// when Hom-Jacobi does not hold.
pub fn classical_homlie(name: &Classical, field: Field, alpha: Matrix) -> Result<HomLieAlgebra> {
    let l = HomLieAlgebra::new(name.structure_constants(field), alpha)?;
    let v = check_homlie_algebra(&l);
    if v.passed() {
        Ok(l)
    } else {
        Err(Error::AlphaIncompatible(Box::new(v)))
    }
}

/// Basis of all `α` making `(sc, α)` satisfy Hom-Jacobi; the identity is
/// linear in `α`, so this is a kernel.
pub fn compatible_alphas(sc: &[Matrix], field: Field) -> Vec<Matrix> {
    let n = sc.len();
    let br = |x: &Vector, y: &Vector| -> Vector {
        BiAffineMap::bilinear(sc.to_vec())
            .expect("square tensor")
            .bilinear_part(x, y)
    };
    let e = |i| Vector::unit(field, n, i);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // Σ_cyc [α e_i, [e_j, e_k]]; α e_i = Σ_p α[p,i] e_p
                let mut row_block = vec![vec![field.zero(); n * n]; n];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = br(&e(b), &e(c));
                    for p in 0..n {
                        let v = br(&e(p), &inner);
                        for (m, row) in row_block.iter_mut().enumerate() {
                            let at = p * n + a;
                            row[at] = &row[at] + &v[m];
                        }
                    }
                }
                rows.extend(row_block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
    }
    let basis = if rows.is_empty() {
        Matrix::zeros(field, 0, n * n).kernel()
    } else {
        Matrix::from_rows(field, rows).expect("rows share width").kernel()
    };
    basis
        .iter()
        .map(|v| Matrix::from_flat(field, n, n, v.entries()).expect("n x n"))
        .collect()
}

/// Deterministic pseudo-random combination of the compatible `α` basis.
pub fn sample_compatible_alpha(sc: &[Matrix], field: Field, seed: u64) -> Matrix {
    let n = sc.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = Matrix::zeros(field, n, n);
    for b in compatible_alphas(sc, field) {
        acc = acc.add(&b.scale(&random_scalar(&mut rng, field))).expect("same shape");
    }
    acc
}

/// Deterministic pseudo-random valid data over `L`: a combination of the
/// pair-space basis for `(κ, λ)` and a random `r`.
pub fn sample_valid_data(l: &HomLieAlgebra, seed: u64) -> Result<AffgebraData> {
    let space = pair_space(l);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<Scalar> = (0..space.dim())
        .map(|_| random_scalar(&mut rng, l.field()))
        .collect();
    let maps = space.combine(&coeffs)?;
    let r = random_point(&mut rng, l.field(), l.dim()).0;
    let d = AffgebraData::new(l.clone(), maps[0].clone(), maps[1].clone(), r)?;
    d.check_invariants()?;
    Ok(d)
}

/// Hom-Lie algebra fixtures: each classical algebra with `α = id` and with
/// its standard non-identity `α`.
pub fn homlie_fixtures(field: Field) -> Vec<(String, HomLieAlgebra)> {
    let names = [
        Classical::Abelian(1),
        Classical::Abelian(2),
        Classical::Abelian(3),
        Classical::Aff1,
        Classical::Heisenberg3,
        Classical::Sl2,
    ];
    let mut out = Vec::new();
    for name in names {
        let n = name.dim();
        for (tag, alpha) in [
            ("id", Matrix::identity(field, n)),
            ("std", name.standard_alpha(field)),
        ] {
            let l = classical_homlie(&name, field, alpha).expect("fixture alphas are compatible");
            out.push((format!("{name}/{tag}"), l));
        }
    }
    out
}

/// Index-range convention for the row and column sums defining `sna(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SnaConvention {
    /// sums over the first `n` indices
    Inner,
    /// sums over all `n + 1` indices
    Full,
}

impl fmt::Display for SnaConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SnaConvention::Inner => write!(f, "sums over 1..n"),
            SnaConvention::Full => write!(f, "sums over 1..n+1"),
        }
    }
}

/// An affine subspace of `size × size` matrices cut out by affine
/// constraints, with an explicit parametrization `K^d → space` (`embed`)
/// and a left inverse (`section`) that reads off the free coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpace {
    pub label: String,
    pub size: usize,
    field: Field,
    constraints: Matrix,
    rhs: Vector,
    base: Vector,
    directions: Vec<Vector>,
    free: Vec<usize>,
}

impl MatrixSpace {
    fn from_constraints(label: String, field: Field, size: usize, rows: Vec<(Vec<Scalar>, Scalar)>) -> Result<Self> {
        let (lhs, rhs): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let constraints = Matrix::from_rows(field, lhs)?;
        let rhs = Vector::new(field, rhs)?;
        let base = constraints
            .solve(&rhs)?
            .ok_or_else(|| Error::PreconditionFailed(format!("{label} is empty")))?;
        let (_, pivots) = constraints.rref();
        let free: Vec<usize> = (0..size * size).filter(|c| !pivots.contains(c)).collect();
        let directions = constraints.kernel();
        let space = MatrixSpace {
            label,
            size,
            field,
            constraints,
            rhs,
            base,
            directions,
            free,
        };
        space.check_model_agreement()?;
        Ok(space)
    }

    /// `sna(n) = {A ∈ sl(n+1) : every row and column sums to 1}`, with the
    /// sums ranging as in `convention`.
    pub fn sna(field: Field, n: usize, convention: SnaConvention) -> Result<Self> {
        if n == 0 {
            return Err(Error::PreconditionFailed("sna(n) needs n >= 1".into()));
        }
        let m = n + 1;
        let range = match convention {
            SnaConvention::Inner => n,
            SnaConvention::Full => m,
        };
        let mut rows = Vec::new();
        let mut trace = vec![field.zero(); m * m];
        for i in 0..m {
            trace[i * m + i] = field.one();
        }
        rows.push((trace, field.zero()));
        for j in 0..m {
            let mut col = vec![field.zero(); m * m];
            let mut row = vec![field.zero(); m * m];
            for i in 0..range {
                col[i * m + j] = field.one();
                row[j * m + i] = field.one();
            }
            rows.push((col, field.one()));
            rows.push((row, field.one()));
        }
        Self::from_constraints(format!("sna({n}) [{convention}]"), field, m, rows)
    }

    /// `m × m` matrices whose rows each sum to 1; closed under products.
    pub fn stochastic(field: Field, m: usize) -> Result<Self> {
        let rows = (0..m)
            .map(|i| {
                let mut r = vec![field.zero(); m * m];
                for j in 0..m {
                    r[i * m + j] = field.one();
                }
                (r, field.one())
            })
            .collect();
        Self::from_constraints(format!("stochastic({m})"), field, m, rows)
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn embed(&self, y: &Vector) -> Matrix {
        let mut x = self.base.clone();
        for (c, d) in y.iter().zip(&self.directions) {
            x = x.add(&d.scale(c)).expect("same length");
        }
        Matrix::from_flat(self.field, self.size, self.size, x.entries()).expect("square")
    }

    /// Free coordinates of `a` relative to the base point.
    pub fn section(&self, a: &Matrix) -> Vector {
        let entries = self
            .free
            .iter()
            .map(|&c| &a.flat()[c] - &self.base[c])
            .collect();
        Vector::new(self.field, entries).expect("same field")
    }

    pub fn contains(&self, a: &Matrix) -> bool {
        let x = Vector::new(self.field, a.flat().to_vec()).expect("same field");
        self.constraints.mul_vec(&x).map(|v| v == self.rhs).unwrap_or(false)
    }

    fn probes(&self) -> Vec<Vector> {
        let d = self.dim();
        std::iter::once(Vector::zeros(self.field, d))
            .chain((0..d).map(|i| Vector::unit(self.field, d, i)))
            .collect()
    }

    /// Heap and action in ambient matrices agree with the model through
    /// `embed`, on basis probes.
    fn check_model_agreement(&self) -> Result<()> {
        let probes = self.probes();
        let two = self.field.int(2);
        for a in &probes {
            for b in &probes {
                for c in &probes {
                    let heap = self.embed(&a.sub(b)?.add(c)?);
                    let ambient = self.embed(a).sub(&self.embed(b))?.add(&self.embed(c))?;
                    if heap != ambient || !self.contains(&ambient) {
                        return Err(Error::InternalInconsistency(format!("{} heap disagrees with embed", self.label)));
                    }
                }
                let act = self.embed(&b.scale(&two).add(&a.scale(&-&self.field.one()))?);
                let ambient = self.embed(b).scale(&two).sub(&self.embed(a))?;
                if act != ambient || !self.contains(&ambient) {
                    return Err(Error::InternalInconsistency(format!("{} action disagrees with embed", self.label)));
                }
            }
        }
        Ok(())
    }

    /// Pull a binary matrix operation back to model coordinates. Closure is
    /// checked on the probe grid `{0, e_1, …, e_d}²`; since the constraint
    /// residual of a bi-affine operation is itself bi-affine, the grid
    /// decides closure. The interpolant is then validated on random points.
    pub fn pull_back_binary<F>(&self, name: &str, op: F, seed: u64) -> Result<BiAffineMap>
    where
        F: Fn(&Matrix, &Matrix) -> Matrix,
    {
        let probes = self.probes();
        for a in &probes {
            for b in &probes {
                let (ma, mb) = (self.embed(a), self.embed(b));
                let out = op(&ma, &mb);
                if !self.contains(&out) {
                    return Err(Error::ClosureFailure(format!(
                        "{name} leaves {}: A = {ma:?}, B = {mb:?}, result = {out:?}",
                        self.label
                    )));
                }
            }
        }
        let eval = |a: &AffinePoint, b: &AffinePoint| AffinePoint(self.section(&op(&self.embed(&a.0), &self.embed(&b.0))));
        let m = interpolate_biaffine(eval, self.dim(), self.field)?;
        match validate_biaffine(&m, eval, 10, seed)? {
            BiAffineValidation::Pass => Ok(m),
            BiAffineValidation::Mismatch { a, b, .. } => Err(Error::ClosureFailure(format!(
                "{name} is not bi-affine on {}: mismatch at {a}, {b}",
                self.label
            ))),
        }
    }

    /// Pull a unary matrix map back to model coordinates (closure decided
    /// on `0, e_1, …, e_d`, then checked on random points).
    pub fn pull_back_unary<F>(&self, name: &str, op: F, seed: u64) -> Result<AffineMap>
    where
        F: Fn(&Matrix) -> Matrix,
    {
        let mut samples = Vec::new();
        for y in self.probes() {
            let ma = self.embed(&y);
            let out = op(&ma);
            if !self.contains(&out) {
                return Err(Error::ClosureFailure(format!(
                    "{name} leaves {}: A = {ma:?}, result = {out:?}",
                    self.label
                )));
            }
            samples.push((AffinePoint(y), AffinePoint(self.section(&out))));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..5 {
            let y = random_point(&mut rng, self.field, self.dim());
            let out = op(&self.embed(&y.0));
            samples.push((y, AffinePoint(self.section(&out))));
        }
        interpolate_affine(&samples, self.dim(), self.field)
    }
}

fn product(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("square")
}

/// Which convention makes the ambient product and the bracket
/// `AB − BA + B` close, for `sna(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionReport {
    pub n: usize,
    pub product_closed: Vec<(SnaConvention, bool)>,
    pub bracket_closed: Vec<(SnaConvention, bool)>,
    pub selected: SnaConvention,
}

impl fmt::Display for ConventionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((c, p), (_, b)) in self.product_closed.iter().zip(&self.bracket_closed) {
            writeln!(f, "sna({}) {c}: product closed = {p}, bracket closed = {b}", self.n)?;
        }
        write!(f, "selected convention: {}", self.selected)
    }
}

fn lie_of(a: &Matrix, b: &Matrix) -> Matrix {
    product(a, b).sub(&product(b, a)).and_then(|m| m.add(b)).expect("square")
}

/// Probe both conventions. The first one under which the product closes is
/// selected; failing that, the first one under which the bracket closes;
/// failing both, `Full`.
pub fn select_convention(field: Field, n: usize) -> Result<ConventionReport> {
    let mut product_closed = Vec::new();
    let mut bracket_closed = Vec::new();
    for conv in [SnaConvention::Inner, SnaConvention::Full] {
        let s = MatrixSpace::sna(field, n, conv)?;
        product_closed.push((conv, s.pull_back_binary("product", product, 0).is_ok()));
        bracket_closed.push((conv, s.pull_back_binary("bracket", lie_of, 0).is_ok()));
    }
    let pick = |v: &[(SnaConvention, bool)]| v.iter().find(|(_, ok)| *ok).map(|(c, _)| *c);
    let selected = pick(&product_closed)
        .or_else(|| pick(&bracket_closed))
        .unwrap_or(SnaConvention::Full);
    Ok(ConventionReport {
        n,
        product_closed,
        bracket_closed,
        selected,
    })
}

/// `sna(n)` together with the convention report that selected it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnaSpace {
    pub n: usize,
    pub space: MatrixSpace,
    pub report: ConventionReport,
}

impl std::ops::Deref for SnaSpace {
    type Target = MatrixSpace;

    fn deref(&self) -> &MatrixSpace {
        &self.space
    }
}

/// `sna(n)` under the convention chosen by [`select_convention`].
pub fn build_sna(field: Field, n: usize) -> Result<SnaSpace> {
    let report = select_convention(field, n)?;
    Ok(SnaSpace {
        n,
        space: MatrixSpace::sna(field, n, report.selected)?,
        report,
    })
}

/// The matrix operations of the examples, pulled back to model
/// coordinates. Each entry is either a structure or the reason it could
/// not be formed (typically a `ClosureFailure` with witness matrices).
#[derive(Debug, Clone)]
pub struct MatrixBundle {
    pub p: Matrix,
    /// `μ(A,B) = AB`
    pub assoc: Result<HomAssocAffgebra>,
    /// `{A,B} = AB − BA + B`
    pub lie: Result<HomLieAffgebra>,
    /// `μ(A,B) = P(AB)P⁻¹`, `α(A) = PAP⁻¹`
    pub hom_assoc: Result<HomAssocAffgebra>,
    /// `{A,B} = P(AB)P⁻¹ − P(BA)P⁻¹ + α(B)`
    pub hom_lie: Result<HomLieAffgebra>,
}

/// Deterministic invertible element of the space: the projection of
/// `I + k·E_{1,m}` for the first `k = 1, 2, …` that gives an invertible
/// matrix.
pub fn default_p(space: &MatrixSpace) -> Result<Matrix> {
    let m = space.size;
    let field = space.field();
    for k in 1..=16 {
        let mut cand = Matrix::identity(field, m);
        cand[(0, m - 1)] = &cand[(0, m - 1)] + &field.int(k);
        let p = space.embed(&space.section(&cand));
        if p.inverse()?.is_some() {
            return Ok(p);
        }
    }
    Err(Error::PNotInvertible)
}

pub fn matrix_structures(space: &MatrixSpace, p: Option<Matrix>) -> Result<MatrixBundle> {
    let p = match p {
        Some(p) => {
            if !space.contains(&p) {
                return Err(Error::PreconditionFailed(format!("P is not in {}", space.label)));
            }
            p
        }
        None => default_p(space)?,
    };
    let p_inv = p.inverse()?.ok_or(Error::PNotInvertible)?;
    let conj = |a: &Matrix| product(&product(&p, a), &p_inv);

    let assoc = space
        .pull_back_binary("AB", product, 1)
        .map(HomAssocAffgebra::untwisted);
    let lie = space
        .pull_back_binary("AB - BA + B", lie_of, 2)
        .map(HomLieAffgebra::untwisted);
    let alpha = space.pull_back_unary("PAP^-1", conj, 3);
    let hom_assoc = alpha.clone().and_then(|alpha| {
        let mul = space.pull_back_binary("P(AB)P^-1", |a, b| conj(&product(a, b)), 4)?;
        HomAssocAffgebra::new(mul, alpha)
    });
    let hom_lie = alpha.and_then(|alpha| {
        let br = space.pull_back_binary(
            "P(AB)P^-1 - P(BA)P^-1 + PBP^-1",
            |a, b| conj(&lie_of(a, b)),
            5,
        )?;
        HomLieAffgebra::new(br, alpha)
    });
    Ok(MatrixBundle {
        p,
        assoc,
        lie,
        hom_assoc,
        hom_lie,
    })
}

pub fn sna_structures(s: &SnaSpace, p: Option<Matrix>) -> Result<MatrixBundle> {
    matrix_structures(&s.space, p)
}

fn closure_or<F>(name: &str, r: &Result<F>, check: impl Fn(&F) -> Verdict) -> Verdict {
    match r {
        Ok(x) => check(x).renamed(name),
        Err(e) => Verdict::fail_note(name, &format!("not formed: {e}")),
    }
}

impl MatrixBundle {
    /// One verdict per structure: the axiom check when the operation
    /// closes, otherwise a failure carrying the closure witness.
    pub fn verdicts(&self) -> Vec<Verdict> {
        vec![
            closure_or("assoc", &self.assoc, check_hom_associativity),
            closure_or("lie", &self.lie, |s| {
                check_affine_jacobi(s).unwrap_or_else(|e| Verdict::fail_note("affine_jacobi", &e.to_string()))
            }),
            closure_or("hom_assoc", &self.hom_assoc, check_hom_associativity),
            closure_or("hom_lie", &self.hom_lie, |s| {
                Verdict::all("hom_lie", check_hom_lie_affgebra(s))
            }),
        ]
    }
}

/// Parse an `α` specification for a named algebra: `id`, `std`,
/// `scale:k`, `diag:a,b,…`, or `sample:seed` (a random compatible map).
pub fn alpha_from_spec(name: &Classical, spec: &str, field: Field) -> Result<Matrix> {
    let n = name.dim();
    let bad = || Error::PreconditionFailed(format!("bad alpha spec {spec:?}"));
    let (head, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "id" => Ok(Matrix::identity(field, n)),
        "std" => Ok(name.standard_alpha(field)),
        "scale" => Ok(Matrix::scalar(field, n, &field.parse(arg).map_err(|_| bad())?)),
        "diag" => {
            let xs = arg
                .split(',')
                .map(|x| field.parse(x.trim()))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| bad())?;
            if xs.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: xs.len() });
            }
            Ok(Matrix::diag(field, &xs))
        }
        "sample" => {
            let seed = arg.parse().map_err(|_| bad())?;
            Ok(sample_compatible_alpha(&name.structure_constants(field), field, seed))
        }
        _ => Err(bad()),
    }
}

/// `fixture_by_name("sl2", "id", Q)` and similar, as addressed from the CLI.
pub fn fixture_by_name(name: &str, alpha: &str, field: Field) -> Result<HomLieAlgebra> {
    let name: Classical = name.parse()?;
    let a = alpha_from_spec(&name, alpha, field)?;
    classical_homlie(&name, field, a)
}

/// Hom-Lie affgebra fixtures: the affgebra built from sampled data over
/// every Hom-Lie algebra fixture, plus a few direct constructions.
pub fn affgebra_fixtures(field: Field) -> Vec<(String, HomLieAffgebra)> {
    let mut out = Vec::new();
    for (i, (name, l)) in homlie_fixtures(field).into_iter().enumerate() {
        let d = sample_valid_data(&l, i as u64).expect("pair space sample");
        out.push((format!("data({name})"), build_from_data(&d).expect("valid data")));
    }
    for n in 1..=3 {
        let id = AffineMap::identity(field, n);
        out.push((
            format!("scalar_action({n})"),
            scalar_action_bracket(n, &field.int(3), &id).expect("identity alpha"),
        ));
        let phi = AffineMap::new(Matrix::scalar(field, n, &field.int(2)), Vector::zeros(field, n)).expect("square");
        out.push((
            format!("constant({n})"),
            constant_bracket(n, &phi, &id).expect("identity alpha"),
        ));
    }
    out
}
