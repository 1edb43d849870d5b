//! Colored combinatorics, Garsia-Stanton type bases and straightening for
//! the generalized coinvariant algebras of `G(r,1,n)` and their
//! Stanley-Reisner counterparts.

pub mod basis;
pub mod combinatorics;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod rewrite;
pub mod subset;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
