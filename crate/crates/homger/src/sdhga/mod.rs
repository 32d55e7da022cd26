//! Strong differential hom-Gerstenhaber algebras, purely hom-Lie bialgebras,
//! hom-Poisson structures and the correspondence with hom-Lie bialgebroids.

mod bialgebra;
mod bialgebroid;
mod poisson;

pub use bialgebra::{
    check_bialgebra, check_coadjoint, coadjoint_exterior, coadjoint_rep, delta, dstar_from_dual, dual_coboundary, dual_side, PurelyHomLieBialgebra,
};
pub use bialgebroid::{sdhga_bialgebroid_bwd, sdhga_bialgebroid_fwd};
pub use poisson::{
    check_hom_poisson, cotangent_hlr, d_pi, hom_poisson_homology, pi_pair, pi_sharp, poisson_boundary, top_rep_dbar, HomPoisson,
};

use std::fmt;

use crate::algebra::HomLieAlgebra;
use crate::exterior::{alpha_extend, ger_bracket_homogeneous, Exterior, GradedOperator};
use crate::linalg::{axpy, Scalar};
use crate::report::{Checker, Report};
use crate::rinehart::{ExtendedBracket, HomLieRinehart};

type OwnedBracket = Box<dyn Fn(usize, &[Scalar], usize, &[Scalar]) -> Vec<Scalar>>;

/// A hom-Gerstenhaber algebra on an exterior algebra together with a degree-1 operator.
pub struct Sdhga {
    ext: Exterior,
    alpha: GradedOperator,
    bracket: OwnedBracket,
    d: GradedOperator,
    hlr: Option<HomLieRinehart>,
}

impl fmt::Debug for Sdhga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Sdhga").field("dims", &self.ext.dims()).field("d", &self.d).finish()
    }
}

impl Sdhga {
    pub fn new(ext: Exterior, alpha: GradedOperator, bracket: OwnedBracket, d: GradedOperator) -> Self {
        Sdhga { ext, alpha, bracket, d, hlr: None }
    }

    /// `(∧•𝔤, ∧, [·,·]_𝔊, α_𝔊)` with `d`.
    pub fn hom_lie(g: &HomLieAlgebra, d: GradedOperator) -> Self {
        let ext = Exterior::over_field(g.field(), g.dim());
        let owned = g.clone();
        let bracket: OwnedBracket = Box::new(move |k, x, l, y| ger_bracket_homogeneous(&owned, k, x, l, y));
        Sdhga { ext, alpha: alpha_extend(g), bracket, d, hlr: Some(HomLieRinehart::from_hom_lie(g)) }
    }

    /// `(∧•_A L, ∧, [·,·], α̃)` with `d`.
    pub fn rinehart(h: &HomLieRinehart, d: GradedOperator) -> Self {
        let br = ExtendedBracket::new(h);
        let ext = br.ext().clone();
        let alpha = br.alpha().clone();
        let bracket: OwnedBracket = Box::new(move |k, x, l, y| br.homogeneous(k, x, l, y));
        Sdhga { ext, alpha, bracket, d, hlr: Some(h.clone()) }
    }

    /// From a Gerstenhaber algebra with strong differential `d` and an endomorphism
    /// `α` commuting with `d`: bracket `α∘[·,·]` and differential `α∘d`.
    pub fn twisted(ext: Exterior, alpha: GradedOperator, classical: OwnedBracket, d: &GradedOperator) -> Self {
        let d_alpha = alpha.compose(d);
        let a = alpha.clone();
        let bracket: OwnedBracket = Box::new(move |k, x, l, y| {
            let b = classical(k, x, l, y);
            if b.is_empty() {
                b
            } else {
                a.apply(k + l - 1, &b)
            }
        });
        Sdhga { ext, alpha, bracket, d: d_alpha, hlr: None }
    }

    pub fn ext(&self) -> &Exterior {
        &self.ext
    }

    pub fn alpha(&self) -> &GradedOperator {
        &self.alpha
    }

    pub fn d(&self) -> &GradedOperator {
        &self.d
    }

    /// The hom-Lie–Rinehart algebra whose exterior algebra carries this structure, if known.
    pub fn hlr(&self) -> Option<&HomLieRinehart> {
        self.hlr.as_ref()
    }

    pub fn bracket(&self, k: usize, x: &[Scalar], l: usize, y: &[Scalar]) -> Vec<Scalar> {
        (self.bracket)(k, x, l, y)
    }

    pub fn with_d(self, d: GradedOperator) -> Self {
        Sdhga { d, ..self }
    }
}

pub const SDHGA_IDS: [&str; 4] = ["derivation", "square_zero", "commutes_alpha", "strong"];

/// The four clauses on homogeneous field-basis elements, each reported separately.
/// The strong condition is `d[X,Y] = [dX, αY] − (−1)^{|X|}[αX, dY]`.
pub fn check_sdhga(s: &Sdhga) -> Report {
    let ext = &s.ext;
    let r = ext.rank();
    let f = ext.field();
    let dims = ext.dims();
    let mut c = Checker::new();
    if s.d.degree() != 1 || s.d.dims() != dims.as_slice() {
        c.assert("shape", false, &[]);
        return c.finish("sdhga");
    }
    for id in SDHGA_IDS {
        c.declare(id);
    }
    match s.d.square_defect() {
        Some(k) => c.assert("square_zero", false, &[k]),
        None => c.assert("square_zero", true, &[]),
    };
    let (da, ad) = (s.d.compose(&s.alpha), s.alpha.compose(&s.d));
    for k in 0..=r {
        crate::algebra::compare_matrices(&mut c, "commutes_alpha", &[k], da.mat(k), ad.mat(k));
    }
    let mut offsets = vec![0; r + 2];
    for k in 0..=r {
        offsets[k + 1] = offsets[k] + dims[k];
    }
    for k in 0..=r {
        for l in 0..=r {
            for i in 0..dims[k] {
                let x = f.unit_vec(dims[k], i);
                let (ax, dx) = (s.alpha.apply(k, &x), s.d.apply(k, &x));
                for j in 0..dims[l] {
                    let y = f.unit_vec(dims[l], j);
                    let (ay, dy) = (s.alpha.apply(l, &y), s.d.apply(l, &y));
                    let tuple = [offsets[k] + i, offsets[l] + j];
                    if k + l < r {
                        let lhs = s.d.apply(k + l, &ext.wedge(k, &x, l, &y));
                        let mut rhs = ext.wedge(k + 1, &dx, l, &ay);
                        let sign = if k % 2 == 0 { f.one() } else { -f.one() };
                        axpy(&mut rhs, &sign, &ext.wedge(k, &ax, l + 1, &dy));
                        c.compare("derivation", &tuple, &lhs, &rhs);
                    }
                    if k + l >= 1 && k + l <= r {
                        let lhs = s.d.apply(k + l - 1, &s.bracket(k, &x, l, &y));
                        let mut rhs = s.bracket(k + 1, &dx, l, &ay);
                        let sign = if k % 2 == 1 { f.one() } else { -f.one() };
                        axpy(&mut rhs, &sign, &s.bracket(k, &ax, l + 1, &dy));
                        c.compare("strong", &tuple, &lhs, &rhs);
                    }
                }
            }
        }
    }
    c.finish("sdhga")
}
