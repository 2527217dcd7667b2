//! Exact computation on the totally nonnegative complete flag variety and its
//! tropicalization.

pub mod algebra;
pub mod error;
pub mod extremal;
pub mod membership;
pub mod oracle;
pub mod perms;
pub mod plucker;
pub mod subset;
pub mod wiring;

pub use algebra::{LaurentMonomial, Matrix, Polynomial, Rational, TropValue};
pub use error::{Error, Result};
pub use extremal::ExtremalChain;
pub use membership::{CellCertificate, Verdict, Witness};
pub use perms::{Permutation, Subexpression, Word};
pub use plucker::{Cell, IncidenceRelation, PlueckerVector, TropPlueckerVector};
pub use subset::Subset;
pub use wiring::{PathCollection, SignedMonomial, WiringDiagram};
