#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod hecke;
pub mod labels;
pub mod matrix;
pub mod rep;
pub mod tableau;
pub mod verify;
pub mod weyl;
