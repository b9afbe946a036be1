//! Exact braid-group actions on the commutative character data of Yangians
//! and quantum loop algebras.
pub mod baxter;
pub mod braid;
pub mod cartan;
pub mod cli;
pub mod cyclicity;
pub mod exact;
pub mod hecke;
pub mod qloop;
pub mod suites;
