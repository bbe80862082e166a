//! Exact computation with affine spaces, affgebras and their Hom-twisted
//! variants, in coordinates.
//!
//! Every defining identity is checked symbolically: the operation is lifted
//! to polynomial coordinates and the residual is tested for being the zero
//! polynomial. Failed checks come with a witness point.

pub mod affine;
pub mod constructions;
pub mod coords;
pub mod derivations;
pub mod error;
pub mod fiber;
pub mod fixtures;
pub mod io;
pub mod kernel;
pub mod morphisms;
pub mod poly;
pub mod structures;
pub mod verdict;

pub use affine::{AffineMap, AffinePoint, BiAffineMap};
pub use constructions::AffgebraData;
pub use derivations::{SolutionSpace, SpaceKind};
pub use error::{Error, Result};
pub use fiber::{AssocFiberResult, FiberResult};
pub use fixtures::{Classical, MatrixSpace, SnaSpace};
pub use io::{FormatError, Kind, Structure, StructureFile};
pub use kernel::{Field, Matrix, Scalar, Vector};
pub use morphisms::{AffgebraHom, DataHom};
pub use poly::{MultiPoly, PolyCtx};
pub use structures::{HomAssocAffgebra, HomAssocAlgebra, HomLieAffgebra, HomLieAlgebra, HomPreLieAffgebra, Side};
pub use verdict::Verdict;
