//! Root systems, spherical roots and spherical systems.
//!
//! Simple roots are indexed from 0 in the library and from 1 (Bourbaki
//! numbering) in files and command-line output.

pub mod cli;
pub mod colors;
pub mod enumerate;
pub mod io;
pub mod rootsys;
pub mod sphroots;
pub mod system;
pub mod tangent;
pub mod zlinalg;
