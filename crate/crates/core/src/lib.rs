//! Balmer spectra of derived Mackey functor categories for finite groups.
//!
//! Given a finite group presented by permutation generators, this crate
//! computes a finite symbolic presentation of the Balmer spectrum of the
//! category of compact derived Mackey functors: its points (conjugacy classes
//! of subgroups crossed with a finite presentation of Spec(Z)), the
//! specialization topology, the induced maps for restriction, inflation and
//! geometric fixed points, the prime spectrum of the Burnside ring as a
//! gluing quotient, the lattice of thick tensor-ideals as down-sets, and the
//! chromatic height-{0,∞} embedding into the equivariant stable homotopy
//! spectrum.
//!
//! The crate is organized by layer:
//!
//! * [`group`] — permutation group engine: elements, subgroups, conjugacy
//!   classes, quotients, O^p residuals, p-subnormality;
//! * [`spectrum`] — the spectrum space, its topology and the induced maps;
//! * [`burnside`] — the Burnside-ring spectrum as the gluing quotient;
//! * [`ideals`] — admissible sets (thick tensor-ideal descriptors) and
//!   their enumeration on p-local slices;
//! * [`render`] — CLI documents: ASCII diagrams, DOT graphs, JSON, and the
//!   golden-figure checks.
//!
//! ```
//! use std::sync::Arc;
//! use mackey_spectrum::{PermGroup, PrimeSlot, SpecPoint, SpecSpace};
//!
//! let g = Arc::new(PermGroup::from_descriptor("S3")?);
//! let space = SpecSpace::build(&g);
//! assert_eq!(space.classes().len(), 4); // 1, C2, C3, S3
//!
//! // the trivial subgroup is 3-subnormal in C3, so its prime-3 point
//! // specializes below the rational point of C3
//! let below = SpecPoint { class: 0, slot: PrimeSlot::Prime(3) };
//! let above = SpecPoint { class: 2, slot: PrimeSlot::Zero };
//! assert!(space.specializes(below, above)?);
//! # Ok::<(), mackey_spectrum::Error>(())
//! ```

pub mod arith;
pub mod burnside;
pub mod catalog;
mod descriptor;
mod error;
pub mod group;
pub mod ideals;
pub mod perm;
pub mod render;
pub mod spectrum;

pub use error::{Error, Result};
pub use group::{PermGroup, QuotientPresentation, Subgroup, SubgroupClass};
pub use perm::Permutation;
pub use spectrum::{PrimeSlot, SpecPoint, SpecSpace};
