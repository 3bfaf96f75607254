//! Exact-arithmetic toolkit for classifying space curves on low-degree
//! rational surfaces.
//!
//! Everything here is integer or rational arithmetic: Picard-lattice
//! intersection theory ([`lattice`]), line-bundle cohomology counts on
//! Hirzebruch surfaces and the quadric ([`cohomology`]), genus bounds for
//! projective curves ([`bounds`]), divisor-class enumeration with
//! very-ampleness obstruction tests ([`surfaces`]), component reports for
//! Hilbert schemes of degree-15 curves in P^5 ([`hilbert`]), and fat-point
//! zero-scheme linear algebra in the plane ([`zeroscheme`]).
//!
//! The crate is `no_std` (alloc only); IO, serialization, and the CLI live in
//! the companion `curveclass` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod cohomology;
pub mod error;
pub mod hilbert;
pub mod lattice;
pub mod linalg;
pub mod surfaces;
pub mod zeroscheme;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Binomial coefficient C(n, 2) extended by 0 for n < 2.
pub(crate) fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Integer square root of a nonnegative value (floor).
pub(crate) fn isqrt(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of negative value");
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}
