//! Signatures of the link families arising from surgery presentations:
//! torus links, twisted annuli, and 2-colored torus links.

pub mod braid;
pub mod colored;
pub mod satellite;
pub mod torus;

pub use braid::Braid;
pub use torus::{litherland_torus_sigma, torus_link_seifert, torus_sigma_at};
