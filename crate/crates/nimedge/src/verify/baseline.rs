//! Frozen baselines for the certification suite.
//!
//! Every value here was measured by this crate's exhaustive searches (and,
//! where noted, cross-checked by an independent sweep in the test suite).
//! The suite requires the searches to reproduce these numbers exactly on
//! every run; a mismatch means a regression in the search kernels.

/// `nim(5; K3, K3)`: below the two-colour triangle Ramsey number every edge
/// survives, so the whole of `K_5` is NIM.
pub const NIM_MAX_5_TRIANGLE: usize = 10;

/// `nim(6; K3, K3)`, exhausted over all `2^15` colourings up to colour
/// swap. Strictly above `ex(6, K3) = 9`: at this order the forced
/// monochromatic triangles overlap enough to leave ten survivors.
pub const NIM_MAX_6_TRIANGLE: usize = 10;

/// `nim(7; K3, K3)`, exhausted over all `2^21` colourings up to colour
/// swap. Equals `ex(7, K3) = t(7, 2) = 12`.
pub const NIM_MAX_7_TRIANGLE: usize = 12;

/// `nim(7; C4, C4)`, exhausted. Equals [`EX_7_C4`], confirming that a
/// maximum `C4`-free colour class is already optimal at this order.
pub const NIM_MAX_7_C4: usize = 9;

/// `ex(7, C4)`, cross-checked by a brute-force sweep over all graphs on
/// seven vertices.
pub const EX_7_C4: usize = 9;

/// `ex(n, {K_{1,4}, M_2})` for every `n >= 4`: without two independent
/// edges the graph is a triangle or a star, and the star is capped at three
/// edges by the degree bound.
pub const EX_STAR4_M2_PLATEAU: usize = 3;
