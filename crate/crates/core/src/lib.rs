//! Exact algebra and combinatorics for the m/n Pieri rule.

pub mod hall;
pub mod llt;
pub mod qt;
pub mod ribbons;
pub mod shapes;
pub mod shuffle;
pub mod stable;
pub mod sym;
pub mod verify;
