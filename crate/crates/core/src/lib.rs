//! Exact computation of the equivariant Euler characteristic of the real
//! toric variety attached to a crystallographic Weyl group, together with
//! the type-A machinery (induction product ring, series identities,
//! symmetric group characters) used to cross-check it.

pub mod class_fn;
pub mod cli;
pub mod coxeter_euler;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod root_system;
pub mod scalar;
pub mod symn;
pub mod verify;
pub mod weyl_group;

pub use class_fn::{induce, inner_product, restrict, ClassFunction};
pub use coxeter_euler::{lambda_main, lambda_orbit, phi, pi_two, EulerReport};
pub use error::{Error, Result};
pub use poly::PolyZ;
pub use root_system::{build_root_system, BuildOptions, Family, RootSystem};
pub use scalar::{Rational, Scalar};
pub use weyl_group::{WeylGroup, DEFAULT_GROUP_CAP};
