//! Catalog handling, parallel enumeration drivers, and verification
//! reports for the `sdcodes` command line tool.

pub mod catalog;
pub mod known;
pub mod parallel;
pub mod report;
pub mod verify;
