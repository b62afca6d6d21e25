pub mod cheeger;
pub mod cli;
pub mod error;
pub mod flow;
pub mod graph;
pub mod linear;
pub mod rational;
pub mod report;
pub mod spectrum;
pub mod tv;
pub mod verify;
