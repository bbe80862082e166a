//! Coordinates that affine and bi-affine maps can be evaluated on: plain
//! scalars, or polynomials when an identity is checked symbolically.

use crate::kernel::{Field, Scalar};
use crate::poly::{MultiPoly, PolyCtx};

pub trait Coord: Clone {
    type Ctx: Copy;

    fn lift(ctx: Self::Ctx, s: &Scalar) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, s: &Scalar) -> Self;
    fn is_zero_coord(&self) -> bool;
}

impl Coord for Scalar {
    type Ctx = Field;

    fn lift(_: Field, s: &Scalar) -> Self {
        s.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, s: &Scalar) -> Self {
        self * s
    }
    fn is_zero_coord(&self) -> bool {
        self.is_zero()
    }
}

impl Coord for MultiPoly {
    type Ctx = PolyCtx;

    fn lift(ctx: PolyCtx, s: &Scalar) -> Self {
        ctx.constant(s)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, s: &Scalar) -> Self {
        self.scale(s)
    }
    fn is_zero_coord(&self) -> bool {
        self.is_zero()
    }
}

pub fn vadd<T: Coord>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

pub fn vsub<T: Coord>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

pub fn vscale<T: Coord>(a: &[T], s: &Scalar) -> Vec<T> {
    a.iter().map(|x| x.scaled(s)).collect()
}

/// Value of the heap expression `⟨x1, x2, …, x_{2k+1}⟩` in the coordinate
/// model: the alternating sum `x1 − x2 + x3 − … + x_{2k+1}`.
pub fn heap<T: Coord>(entries: &[&[T]]) -> Vec<T> {
    assert!(entries.len() % 2 == 1, "heap expressions need an odd number of entries");
    let mut acc = entries[0].to_vec();
    for (i, e) in entries.iter().enumerate().skip(1) {
        acc = if i % 2 == 1 { vsub(&acc, e) } else { vadd(&acc, e) };
    }
    acc
}
