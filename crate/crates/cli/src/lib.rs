//! Records, rendering and input parsing behind the `rootlattice` binary.

pub mod matrix_file;
pub mod record;
pub mod render;
