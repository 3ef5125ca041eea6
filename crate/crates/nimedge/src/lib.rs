//! Exact desk-scale searches around NIM-edges of edge-coloured complete graphs.
//!
//! An edge of a `k`-edge-coloured `K_n` is a *NIM-edge* (not-in-monochromatic)
//! with respect to a sequence of forbidden graphs `H_1, ..., H_k` if it lies in
//! no colour-`i` copy of `H_i` for its own colour `i`. This crate computes NIM
//! edge sets, maximises the NIM count exactly by branch-and-bound, decides the
//! associated Ramsey-type quantities `r_hom` and `r*` with feasible template
//! colourings as certificates, and builds the standard lower-bound
//! constructions (blow-ups, tree overlays, the GF(16) triangle template).
//!
//! Graphs are capped at [`MAX_VERTICES`] vertices and stored as per-vertex
//! bitmasks; everything here is meant for orders where exhaustive search is
//! realistic, not for asymptotics.

pub mod colouring;
pub mod error;
pub mod graph;
pub mod hom;
pub mod iso;
pub mod nim;
pub mod ramsey;
pub mod turan;
pub mod verify;

pub use colouring::{
    blow_up, is_feasible, EdgeColouring, FeasibilityVerdict, FeasibilityViolation,
    TemplateColouring,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphFamilySpec, MAX_VERTICES};
pub use hom::{
    copy_through_edge, homomorphism_exists, is_homomorphism_critical, minimal_homomorphic_images,
    Embedding,
};
pub use iso::{are_isomorphic, canonical_key, edit_distance};
pub use nim::{
    blowup_lower_bound, nim_max_exact, nim_set, overlay_construction, peel_min_degree, NimReport,
    SearchOutcome,
};
pub use ramsey::{
    gf16_witness, is_nice, pair_classes_hom_free, r_hom, r_star, KnownRamseyTable, Provenance,
    RamseyStarResult,
};
pub use turan::{ex_exact, ex_exact_family, ExResult};
