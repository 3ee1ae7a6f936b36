//! Exact combinatorics of subregular unstable bundles on elliptic curves.
//!
//! ```
//! use subreg::geometry;
//! use subreg::rootdata::{build_root_datum, Series};
//! use subreg::subregular::enumerate_subregular;
//!
//! let rd = build_root_datum(Series::E, 7)?;
//! let classes = enumerate_subregular(&rd)?;
//! assert_eq!(classes.len(), 1);
//! assert_eq!(geometry::degree_d1(&classes[0])?, -2);
//! # Ok::<(), subreg::Error>(())
//! ```

pub mod bruhat;
pub mod error;
pub mod geometry;
pub mod induction;
pub mod linalg;
pub mod parabolic;
pub mod rational;
pub mod report;
pub mod rootdata;
pub mod subregular;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
