//! Dimension computations for vertex operator algebras.
//!
//! This crate computes two finite-dimensional quotients attached to a
//! vertex operator algebra V:
//!
//! * the level-zero Zhu algebra A(V), whose dimension counts irreducible
//!   modules with multiplicity, and
//! * the C2 quotient A\[2\](V) = V / span{ a_{-2} b }, whose dimension is
//!   always at least dim A(V).
//!
//! A VOA is called *anomalous* when the inequality is strict, i.e. when
//! dim A\[2\](V) > dim A(V). The crate covers three families:
//!
//! * lattice VOAs attached to even positive-definite integral lattices
//!   ([`lattice_voa`]),
//! * simple affine VOAs at non-negative integer level ([`affine`]),
//! * Virasoro minimal models ([`minimal`]).
//!
//! All arithmetic that decides a result is exact (big integers and big
//! rationals). Floating point appears only as a pruning hint inside lattice
//! point enumeration, and every pruned candidate is re-verified exactly
//! before it is used.

pub mod affine;
pub mod catalog;
pub mod exact;
pub mod lattice;
pub mod lattice_voa;
pub mod lie;
pub mod minimal;
pub mod qseries;
