//! Exact construction, verification and search for balanced neighborly
//! polynomials over `Q` and prime fields.
//!
//! A balanced polynomial in `d` color classes is a `d`-way coefficient
//! tensor. It is neighborly of type `(n_1, ..., n_d)` when every flattening
//! along a color set `S` with `|S| <= d/2` has full rank `∏_{k ∈ S} n_k`.

pub mod apolarity;
pub mod constructions;
pub mod error;
pub mod field;
pub mod linalg;
pub mod mpoly;
pub mod search;
pub mod srbridge;
pub mod verify;

pub use apolarity::{ann_component, hilbert_function, socle_check, top_socle_dim, AnnComponent};
pub use constructions::{construct, ConstructionKind};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::Matrix;
pub use mpoly::{mod_rep, BalancedPoly, ColorSet, FlatteningMatrix, Shape, VarId};
pub use search::{det_identity_check, enumerate_2222, SearchReport, SymbolicPoly2};
pub use srbridge::{
    extract_polynomial, parse_facets, quotient_dims, sphere_is_neighborly, BalancedComplex,
};
pub use verify::{
    duality_check, h_table, is_neighborly, HilbertTable, NeighborlyVerdict, TypeRule, Witness,
};
