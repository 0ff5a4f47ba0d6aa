//! Exact combinatorics of Levi subalgebras and Weyl modules for current
//! algebras of classical simple Lie algebras.
//!
//! Everything is computed at the level of characters and dimensions with
//! exact integer arithmetic. The modules build on each other:
//!
//! * [`rootsystem`]: classical root systems in ε-coordinates.
//! * [`characters`]: Freudenthal multiplicities, Weyl dimensions, tensor
//!   products, decomposition and restriction.
//! * [`levi`]: Levi subalgebras from closed root subsets, their
//!   classification, enumeration and the weight projection π.
//! * [`weylmodule`]: local and global Weyl module characters.
//! * [`admissibility`]: admissible pairs and the surjectivity oracle.
//! * [`verify`]: dimension-count checks and sweeps producing reports.
//! * [`cli`]: the command-line front end.

pub mod admissibility;
pub mod characters;
pub mod cli;
pub mod error;
pub mod levi;
pub mod rootsystem;
pub mod verify;
mod weight;
pub mod weylmodule;

pub use admissibility::{
    classify_fundamental_pair, classify_pair, surjectivity_oracle, AdmissibilityVerdict,
    Surjectivity,
};
pub use characters::{
    branching_multiplicities, decompose, dim_irreducible, irreducible_character,
    restrict_character, tensor_character, Character,
};
pub use error::{Error, Result};
pub use levi::{
    classify_component, enumerate_simple_levis, levi_from_root_subset, project_current_weight,
    project_weight, LeviSubalgebra, SimpleComponent,
};
pub use rootsystem::{build_root_system, CartanType, Family, NonnegSpan, RootSystem};
pub use weight::Weight;
pub use weylmodule::{
    fundamental_weyl_character, global_weyl_descriptor, local_weyl_character, local_weyl_dim,
    CurrentWeight, GlobalWeylDescriptor,
};
