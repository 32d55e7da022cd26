//! Representations of hom-Lie algebroids on the algebraic model, their cochain
//! complexes, the Cartan calculus on forms, and homology from top-degree
//! representations.

mod cartan;
mod dgca;
mod homotopy;
mod rep;

pub use cartan::{check_cartan, interior_mult, lie_derivative, CartanSample, CARTAN_IDS};
pub use dgca::{check_dgca, dgca1_bwd, dgca1_fwd, Dgca};
pub use homotopy::{algebroid_homology, form_contraction, generator_cocycle, homotopy_check, is_homotopic};
pub use rep::{check_rep, corres3_bwd, corres3_fwd, sqrt_rep, square_rep, AlgebroidRep};

use crate::exterior::GradedOperator;
use crate::rinehart::{cochain_differential, HomLieRinehart};
use crate::Error;

/// The coboundary `d_{A,E}` on `Alt_A(L, E)`; for the trivial representation this is `d_A`.
pub fn rep_differential(h: &HomLieRinehart, rep: &AlgebroidRep) -> Result<GradedOperator, Error> {
    cochain_differential(h, rep.module())
}

/// Cohomology dimensions of `(Alt_A(L, E), d_{A,E})`.
pub fn rep_cochain(h: &HomLieRinehart, rep: &AlgebroidRep) -> Result<Vec<usize>, Error> {
    Ok(rep_differential(h, rep)?.homology())
}
