//! Root systems, Weyl groups and Hurwitz systems of reflections.
//!
//! The crate builds finite crystallographic root systems from Cartan type
//! labels, represents Weyl group elements as integer matrices in the basis of
//! simple roots, and implements the braid group action on tuples of
//! reflections whose product is the identity, together with the constructive
//! reductions that bring a generating tuple to a fixed normal form.
//!
//! ```
//! use std::sync::Arc;
//! use hurwitz_weyl::{hurwitz::{normal_form, HurwitzSystem}, rootsys::{RootSystem, RootVector}};
//!
//! let a2 = Arc::new(RootSystem::build(&"A2".parse().unwrap()).unwrap());
//! let axes = [vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 1]].map(RootVector::new);
//! let sys = HurwitzSystem::new(&a2, &axes).unwrap();
//! let (nf, log) = normal_form(&sys).unwrap();
//! assert_eq!(nf.axes(), [vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]].map(RootVector::new));
//! assert_eq!(hurwitz_weyl::hurwitz::replay(&sys, &log).unwrap(), nf);
//! ```

pub mod error;
pub mod hurwitz;
pub mod orbits;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use hurwitz::{BraidMove, BranchingData, HurwitzSystem, MoveLog};
pub use rootsys::{RootSystem, RootSystemSpec, RootVector};
pub use weyl::{Reflection, WeylElement};
