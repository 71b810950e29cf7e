//! Exact combinatorics of horospherical varieties.
//!
//! A horospherical homogeneous space is presented by a pair `(I, M)`: a set of
//! simple roots `I` and a lattice of characters `M`. From it we build a
//! coloured lattice, and coloured fans on that lattice classify the
//! equivariant embeddings. Everything here works over the integers and the
//! rationals; nothing uses floating point.

pub mod cli;
pub mod dictionary;
pub mod divisors;
pub mod horo;
pub mod intlin;
pub mod polyhedra;
pub mod rootsys;
