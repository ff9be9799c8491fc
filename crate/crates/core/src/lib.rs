pub mod center;
pub mod error;
pub mod fault;
pub mod reduction;
pub mod report;
pub mod rootsys;
pub mod verify;
pub mod zlinalg;

pub use error::{Error, Result};
pub use fault::Fault;
pub use report::{Report, Verdict};
pub use rootsys::{Family, RootSystem, TypeLabel};
