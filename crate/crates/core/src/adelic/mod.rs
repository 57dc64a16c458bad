//! Ideal lattices, adelic boxes and the generator searches.
//!
//! A box is given by archimedean radii and a fractional ideal of the
//! working order standing for the finite-place radii. Its Haar measure is
//! `2^d c^-d (∏_v |γ_v|_v)^d`, and it contains a nonzero field element once
//! `c < ∏_v |γ_v|_v`. Points are found by Fincke–Pohst enumeration of the
//! ideal lattice under the Minkowski embedding, with every box condition
//! then decided exactly.

mod enumerate;
mod ideal;
mod measure;
mod search;

pub use enumerate::{
    compare_abs, compare_points, enumerate_box, enumerate_box_elements, fincke_pohst, in_box, real_sign, BoxPoint,
    DEFAULT_ENUMERATION_CAP,
};
pub use ideal::{
    expected_covolume, ideal_inverse, ideal_product, minkowski_lattice, place_ideal, prime_ideal, IdealLattice,
};
pub use measure::{box_measure, minkowski_guarantee, BoxSpec};
pub use search::{
    find_generator_padic, find_generator_real, padic_ideal, verify_certificate, ArchCheck, GeneratorCertificate,
    PlaceRecord, SearchStats, TheoremTag,
};
