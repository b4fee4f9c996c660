//! Exact Clifford algebra and real spin representation machinery.
//!
//! Everything here is pure computation over exact rationals (with an `f64`
//! fallback for the centralizer solver) and builds with `no_std` + `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod blade;
pub mod centralizer;
pub mod echelon;
pub mod error;
pub mod lie;
pub mod real_form;
pub mod scalar;
pub mod sparse;
pub mod suite;
pub mod spinor;
pub mod tensor;

pub use error::{Error, Result};
