//! Double Toeplitz, double circulant and double negacirculant codes over
//! F2, F3 and F4: construction, exact weight enumerators, the average weight
//! enumerator and its length thresholds, monomial equivalence, and
//! exhaustive search with classification of optimal codes.

pub mod awe;
pub mod classify;
pub mod code;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod known;
mod packed;
pub mod search;
pub mod structured;
pub mod verify;

pub use code::{Budget, FqVector, GeneratorCode, WeightEnumerator};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use structured::{CirculantSpec, Sign, ToeplitzTriple, TripleKind};
