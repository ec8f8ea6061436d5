//! Wehrl, Renyi and von Neumann entropies.

pub mod minimum;
pub mod renyi;
pub mod von_neumann;
pub mod wehrl;

pub use minimum::*;
pub use renyi::*;
pub use von_neumann::*;
pub use wehrl::*;
