pub mod catalog;
pub mod error;
pub mod harness;
pub mod matrix;
pub mod quasi;
pub mod riordan;
pub mod series;
pub mod weighted;
