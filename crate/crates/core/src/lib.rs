pub mod bruhat;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod lr;
pub mod partition;
pub mod presentation;
pub mod symfun;
