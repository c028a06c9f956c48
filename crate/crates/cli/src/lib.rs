//! File formats and the bundled catalog for the diagram toolkit.
//!
//! The extended-PD text format is line oriented:
//!
//! ```text
//! # comment
//! X c1 = (t1,s1,t2,s2) over=(2,4)   # crossing, slots counterclockwise
//! V v1 = (u1,s1,t1)                 # trivalent vertex
//! outer = c1.4                      # optional outer-region corner
//! region R1 = c1.1                  # optional region label pin
//! ```
//!
//! Corners are numbered from 1: corner `k` of a site is the wedge between
//! slots `k` and `k + 1` (counterclockwise, wrapping).

pub mod catalog;
pub mod json;
pub mod pd;
