//! Inputs shared by the benchmarks.

use affgebra::constructions::build_from_data;
use affgebra::fixtures::{classical_homlie, sample_valid_data, Classical};
use affgebra::{Field, HomLieAffgebra, HomLieAlgebra};

/// A named algebra with its standard alpha, over the rationals.
pub fn algebra(name: &Classical) -> HomLieAlgebra {
    let q = Field::Rationals;
    classical_homlie(name, q, name.standard_alpha(q)).expect("standard alpha is compatible")
}

/// The Hom-Lie affgebra built from sampled data over `algebra(name)`.
pub fn affgebra(name: &Classical, seed: u64) -> HomLieAffgebra {
    let d = sample_valid_data(&algebra(name), seed).expect("pair space sample");
    build_from_data(&d).expect("valid data")
}
