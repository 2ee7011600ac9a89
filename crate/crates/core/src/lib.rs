//! Weierstrass semigroups, maximal elements and pure gaps at several totally
//! ramified places of Kummer curves `y^m = prod (x - a_j)^lambda`, with the
//! algebraic-geometry code parameters they yield.

pub mod cli;
pub mod codes;
pub mod combinat;
pub mod curve;
pub mod error;
pub mod maximals;
pub mod oracle;
pub mod pure_gaps;
pub mod semigroup;
pub mod tuple;

pub use curve::{divisor_from_tuple, Divisor, KummerCurve, PlaceId};
pub use error::{Error, Result};
pub use oracle::{ell, EllResult, Oracle};
pub use tuple::TupleZ;
