pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod fsets;
pub mod ore;
pub mod skew;
pub mod split;
pub mod text;
