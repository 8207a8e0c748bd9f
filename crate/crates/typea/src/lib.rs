//! Exact combinatorics for finite groups of type A: lattices and centers,
//! cyclotomic Gauss sums, wreath-product characters and Lusztig series labels.

pub mod arith;
pub mod center;
pub mod cyclotomic;
pub mod dual;
pub mod field;
pub mod gauss;
pub mod lattice;
pub mod root_datum;
pub mod series;
pub mod symchar;
pub mod wreath;
