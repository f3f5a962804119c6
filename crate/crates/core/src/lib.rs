//! The 111-dimensional representation of the Lyons group over GF(5).
//!
//! The crate builds the representation from five explicit matrices and
//! checks the finite facts about it: relations among root elements, the
//! torus and its normalizer, the invariant form, invariant subspaces, and
//! the decomposition of the character of the normalizer.
//!
//! Modules, bottom up:
//! - [`gf5`]: dense matrices and subspaces over GF(5)
//! - [`blocks`]: the 16-section coordinate scheme
//! - [`apartment`]: the 12-point apartment and the Weyl group
//! - [`generators`]: base matrices, root elements, derived elements
//! - [`verifier`]: group closures and the check suites
//! - [`cli`]: the command line front end

pub mod apartment;
pub mod blocks;
pub mod cli;
pub mod generators;
pub mod gf5;
pub mod verifier;
