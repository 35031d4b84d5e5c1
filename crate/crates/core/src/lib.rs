//! Rees algebras, associated graded rings, relation type, Tor and normal
//! transversality checks over exact rational polynomial rings and their
//! quotients.

pub mod arprobe;
pub mod error;
pub mod groebner;
pub mod idealops;
pub mod polycore;
pub mod reeslab;
pub mod session;
pub mod torlab;
pub mod transcheck;

pub use error::{Error, Result};
