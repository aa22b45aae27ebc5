pub mod algebra;
pub mod bbridge;
pub mod complex;
pub mod context;
pub mod cotorsion;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod modrep;
pub mod par;
pub mod quiver;
pub mod report;
pub mod suite;
pub mod torsion;
pub mod twoterm;

pub use error::{Error, Result};
