//! Exact combinatorics of Young tableaux, composition tableaux, crystal
//! reflection operators, and frank words, culminating in noncommutative
//! Littlewood-Richardson coefficients computed by three independent
//! algorithms that must agree.

pub mod composition;
pub mod error;
pub mod poset;
pub mod word;
pub mod young;

pub use composition::{Composition, Partition};
pub use error::{Error, Result};
pub use word::{Permutation, Word};
pub use young::SkewYoungTableau;
