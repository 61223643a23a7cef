//! Classification of free finite group actions on 3-dimensional handlebodies.
//!
//! A free action of a finite group `G` on a handlebody of genus
//! `1 + |G|(n - 1)` corresponds to an orbit of marked generating vectors
//! `(g, v)`: a generating n-tuple of `G` together with a sign vector recording
//! which handles of the quotient reverse orientation. Orbits are taken under
//! Nielsen moves acting on both parts (equivalence), optionally together with
//! `Aut(G)` acting on the tuple (weak equivalence).
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: finite groups as multiplication tables, generation, μ(G),
//!   characters to C₂ and automorphisms.
//! * [`nielsen`]: marked vectors, moves and exhaustive orbit enumeration.
//! * [`covering`]: Schreier graphs of generating vectors, used as an
//!   independent check of orientability and genus.
//! * [`classify`]: per-(G, n) classification reports, genus spectra and the
//!   closed-form count for abelian groups.

pub mod abelian;
pub mod classify;
pub mod covering;
pub mod error;
pub mod group;
pub mod nielsen;
mod sign;

pub use classify::{
    abelian_formula, classify_actions, classify_detailed, genus_spectrum, orientability_class,
    single_class_check, ActionClass, ActionKind, ClassificationReport, GenusSpectrum,
};
pub use covering::{covering_genus, covering_orientable, schreier_graph, OrientationVerdict, SchreierGraph};
pub use error::{Error, Result};
pub use group::{Automorphism, Character, Elem, FiniteGroup, GroupSpec};
pub use nielsen::{
    apply_move, enumerate_orbits, nielsen_classes, orbit_of, EnumConfig, MarkedVector, Mode, Move,
    OrbitPartition,
};
pub use sign::Sign;
