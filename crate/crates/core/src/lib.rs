//! Exact structural computations for Brauer and Birman–Murakami–Wenzl algebras
//! of simply-laced type.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] builds ADE root systems over the simple roots.
//! * [`admissible`] handles mutually orthogonal root sets, their admissible
//!   closure, Weyl-group orbits and the monoidal poset on each orbit.
//! * [`braction`] implements the Brauer-monoid action on admissible sets.
//! * [`coxgroup`] realises Weyl groups and parabolic subgroups as permutation
//!   groups on roots and computes their orders with Schreier–Sims.
//! * [`laurent`] provides exact Laurent polynomials in `δ` and determinants of
//!   polynomial matrices.
//! * [`diagram`] is the classical Brauer diagram algebra (type A): products,
//!   cell layers, Gram determinants and semisimplicity reporters.
//! * [`morita`] assembles Morita-block, rank and Wedderburn reports.

pub mod admissible;
pub mod braction;
pub mod coxgroup;
pub mod diagram;
mod error;
pub mod laurent;
pub mod morita;
pub mod rootsys;
pub mod symmetric;

pub use admissible::{AdmissibleOrbit, EnumerationOptions, MonoidalPoset, RootSet};
pub use braction::{Generator, GeneratorKind, MonoidWord};
pub use coxgroup::{Perm, PermutationGroup, TypeLabel};
pub use diagram::{AlgebraElement, BrauerDiagram, CellDatum, HalfDiagram};
pub use error::{Error, Result};
pub use laurent::{ExactRational, LaurentPoly};
pub use morita::{AlgebraKind, CellPosetD, MoritaBlock, RankReport};
pub use rootsys::{DiagramSpec, Family, Root, RootSystem, Sign};
