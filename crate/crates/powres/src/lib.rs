//! Exact-arithmetic toolkit for simplicial complexes that support free
//! resolutions of powers of square-free monomial ideals.
//!
//! The library builds the complex `L^r_q` on the lattice points of degree `r`
//! in `q` coordinates, trims it to `L^r(I)` for a concrete ideal `I`, checks
//! the standard support criteria (lcm-lattice acyclicity, and the
//! empty-or-connected criterion for quasi-trees), computes true multigraded
//! Betti numbers by exact rank computations, and evaluates closed-form Betti
//! bounds together with the extremal ideals that attain them.
//!
//! All arithmetic is exact: exponents are arbitrary-precision naturals,
//! homology ranks are computed over the rationals or a prime field.

pub mod acceptance;
pub mod bounds;
pub mod corpus;
pub mod extremal;
pub mod field;
pub mod homology;
pub mod monomial;
pub mod power_complex;
pub mod resolution;
pub mod simplicial;
