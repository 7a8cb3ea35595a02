//! Exact construction and verification of the tube algebra of `Vec(G, ω)`
//! and of the Bisch–Haagerup annular algebra, with their isomorphisms onto
//! block sums of twisted centralizer group algebras and the resulting
//! representation theory.
//!
//! Group elements are indices into a [`GroupTable`] with the identity at 0;
//! circle values are exact [`Phase`]s.

pub mod algebra;
pub mod annular_bh;
pub mod coho;
pub mod cyclo;
pub mod error;
pub mod fixtures;
pub mod grp;
pub mod io;
pub mod phase;
pub mod rep;
pub mod tube_diag;
pub mod verify;
pub mod zlinear;

pub use algebra::{BlockAlgebra, BlockIso, BlockLabel, Label, StarAlgebra, StructureConstant};
pub use annular_bh::{ALabel, AnnularAlgebra, BoxMorphism, CutDown};
pub use coho::{BHSetup, Convention, GaugeFix, Pointed};
pub use error::{Check, Error, Failure, Result};
pub use grp::{ClassData, GroupTable};
pub use phase::{Cochain1, Cochain2, Cocycle2, Cocycle3, Phase};
pub use rep::{Decomposition, Representation, TwistedGroupAlgebra};
pub use tube_diag::{SimpleCount, TubeAlgebra, TubeLabel};
pub use verify::{Coverage, VerifyConfig};
