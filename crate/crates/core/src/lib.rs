//! Roundtrip covers, roundtrip spanners, and girth estimation for directed
//! graphs with nonnegative integer edge lengths.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cluster;
pub mod collapse;
pub mod cover;
pub mod estimate;
pub mod girth;
pub mod graph;
pub mod oracle;
pub mod rng;
