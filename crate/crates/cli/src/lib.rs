//! Output records shared by the `sphpark` binary and its tests.

pub mod record;
