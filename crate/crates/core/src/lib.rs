//! Exact computation of the weight monoids of spherical conjugacy classes in
//! simple simply-connected algebraic groups.
//!
//! A class is described by an involution `w = w0 w_J` of the Weyl group and a
//! finite subgroup `S_O` of the maximal torus; the highest weights occurring
//! in its coordinate ring are the dominant `lambda` with `w(lambda) = -lambda`
//! that evaluate trivially on `S_O`.

pub mod catalog;
pub mod error;
pub mod intlat;
pub mod monoid;
pub mod rootsys;
pub mod scalar;
pub mod torus;
pub mod verify;

use num_bigint::BigInt;

pub use catalog::{ClassDescriptor, ClassKind, ClosureSpecial, GroupCatalog, IsogenyEntry};
pub use error::{Error, Result};
pub use monoid::WeightMonoid;
pub use rootsys::{build_root_system, CartanType, Family, Root, RootSystem, Weight, WeylElement};
pub use scalar::ExactInt;

pub type IntMatrix = intlat::Matrix<BigInt>;
pub type SmithDecomposition = intlat::Smith<BigInt>;
pub type TorusPoint = torus::Coweight<i64>;
pub type FiniteTorusSubgroup = torus::TorusSubgroup<i64>;
