//! Exact canonical arc diagrams of polygonal spatial arcs, their chord
//! diagrams and interval estimates of knotting probabilities.

pub mod arc;
pub mod chord;
pub mod diagram;
pub mod geom;
pub mod io;
pub mod knotting;
pub mod poly;
pub mod scene;
pub mod seg;
pub mod trace;
