//! Coloring algorithms on the line.

mod online;
mod semi_online;

pub use online::OnlineColorer;
pub use semi_online::{Repair, SemiOnlineColorer};
