//! Torus products and valuation sums (under construction).
pub mod snf;
pub mod subgroup;
