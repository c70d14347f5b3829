//! Exact-arithmetic verification of binomial, multinomial and q-binomial
//! identities.
//!
//! The kernel ([`rational`], [`poly`], [`binomial`], [`enumeration`]) does
//! exact arithmetic only; [`catalog`] encodes each identity's two sides;
//! [`verifier`] compares them symbolically or at random rational points.

pub mod binomial;
pub mod catalog;
pub mod enumeration;
pub mod error;
pub mod poly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod verifier;

pub use catalog::{find, list_identities, IdentityDescriptor, Index, Mutation, SideKind, StructuralParams};
pub use error::{Error, Result};
pub use poly::{Assignment, Monomial, Polynomial};
pub use rational::Rational;
pub use verifier::{run_suite, GridSpec, Mode, Status, VerificationResult};
