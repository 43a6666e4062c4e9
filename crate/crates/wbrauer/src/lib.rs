//! Exact computations with walled Brauer algebras and their permutation
//! modules over `Q` and `F_p`.

pub mod coeffs;
pub mod algcore;
pub mod bmod;
pub mod combinat;
pub mod error;
pub mod linalg;
pub mod modcore;
pub mod poly;
pub mod spechtmod;
pub mod suites;
pub mod symgrp;
pub mod walled;

pub use error::{Error, ErrorClass, Result};

#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod guide_diagrams {}
#[doc = include_str!("../../../book/src/algebra.md")]
pub mod guide_algebra {}
#[doc = include_str!("../../../book/src/modules.md")]
pub mod guide_modules {}
#[doc = include_str!("../../../book/src/young.md")]
pub mod guide_young {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod guide_verification {}
