//! Generalized adjoint crystals `B_l ≅ ⊕_{k≤l} B(kθ)` for the affine types
//! A_n^(1), C_n^(1) and D_{n+1}^(2): models, crystal graphs, and exhaustive
//! checks of their level-raising embeddings and `f_0` action.

pub mod affine_a;
pub mod affine_c;
pub mod affine_d2;
pub mod cli;
pub mod crystal;
pub mod crystal_graph;
pub mod error;
pub mod family;
pub mod root_data;
pub mod tableaux;
pub mod util;
pub mod verify;

pub use crystal::{AdjointModel, Crystal, Direction};
pub use crystal_graph::{CrystalGraph, Format};
pub use error::{Error, Result};
pub use family::{AdjointFamily, FamilyRegistry};
pub use verify::{Check, Report};
