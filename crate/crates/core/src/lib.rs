//! Coadjoint orbits of maximal nilpotent subalgebras of classical simple Lie algebras.
//!
//! The crate builds positive root systems with CHEVIE indexing and integer
//! structure constants ([`rootsys`]), studies linear forms and their skew
//! forms ([`forms`]), runs the quattern calculus and the move-based
//! classification of low-dimensional extensive orbits ([`quattern`],
//! [`classify`]), counts orbits by dimension as polynomials in `v = q - 1`
//! ([`counting`]) and cross-checks everything against brute-force orbit
//! enumeration over small prime fields ([`oracle`]).

pub mod classify;
pub mod counting;
pub mod criteria;
pub mod data;
pub mod dynkin;
pub mod elementary;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod oracle;
pub mod quattern;
pub mod report;
pub mod rootset;
pub mod rootsys;
pub mod vpoly;

pub use error::{Error, Result};
pub use rootset::RootSet;
pub use vpoly::VPoly;
pub use rootsys::{Family, Root, RootOrder, RootSystem, RootSystemSpec};
