//! Numerical Mellin transforms of the generating functions and the product
//! identities for their `m`-summed differences.

pub mod product;
pub mod quad;
pub mod transform;

pub use crate::outcome::VerificationOutcome;
pub use product::{product_prefactor, termwise_prefactor, verify_product_identity, ProductIdentity};
pub use quad::{integrate, Quadrature};
pub use transform::{mellin_transform, verify_mellin_definition, MellinCheck, MellinIntegrand, QuadratureConfig};
