//! Generalized Hamming weights of linear codes over finite fields.
//!
//! The crate covers field and matrix arithmetic over GF(p^s), linear code
//! constructors (Reed-Solomon, Reed-Muller, cyclic and BCH codes), counting
//! and enumeration of subspaces by support, and the weight computations:
//! generalized Hamming weights, weight hierarchies, relative weights and
//! higher weight spectra.
//!
//! ```
//! use std::sync::Arc;
//! use ghws::{hierarchy, ComputeOptions, FiniteField, LinearCode};
//!
//! let f = Arc::new(FiniteField::prime(13).unwrap());
//! let rs = LinearCode::reed_solomon(f, 4).unwrap();
//! assert_eq!(hierarchy(&rs, &ComputeOptions::default()).unwrap(), vec![10, 11, 12, 13]);
//! ```

pub mod code;
pub mod codefile;
pub mod enumerate;
pub mod error;
pub mod gf;
pub mod ghw;
pub mod infoset;
pub mod matrix;
mod poly;
pub mod samples;

#[cfg(test)]
mod test_support;

pub use code::{encode_subspace, support_weight, LinearCode};
pub use codefile::{parse_code_file, write_code_file};
pub use enumerate::{
    count_e, count_full_support, expand_to_support, expected_enumeration, gaussian_binomial, subspaces, support_choices,
};
pub use error::{Error, Result};
pub use gf::{Elem, FiniteField};
pub use ghw::{
    ghw, ghw_report, hierarchy, hierarchy_auto, hierarchy_report, higher_spectrum, naive_ghw, naive_ghw_with,
    naive_rghw, naive_rghw_with, rghw, rghw_report, rhierarchy, rhierarchy_report, rhigher_spectrum, wei_duality,
    ComputeOptions, GhwReport, Hierarchy, RoundEvent, Spectrum, Witness,
};
pub use infoset::{information, InfoSetDecomposition};
pub use matrix::{Matrix, Rref};
