//! Hom-Lie–Rinehart algebras over `(A, φ)` with `L` free of finite rank, their
//! modules, (co)homology and the correspondences with generators.

mod calculus;
mod complexes;
mod correspond;
mod gerstenhaber;
mod module;

pub use calculus::Calculus;
pub use complexes::{
    alt_wedge, cochain_differential, hlr_cohomology, hlr_cohomology_with, hlr_homology, hlr_homology_with, homology_boundary, phi_twist,
};
pub use correspond::{
    check_hlr_generator, corres1_bwd, corres1_fwd, corres2_bwd, corres2_fwd, res1_bwd, res1_fwd, top_dual_right_module,
};
pub use gerstenhaber::{bracket_extend, ExtendedBracket};
pub use module::{check_module, HLRModule, Side};

use crate::algebra::{check_comm_algebra, check_hom_lie, check_hom_lie_rep, is_phi_derivation, CommAlgebra, HomLieAlgebra, HomLieRep};
use crate::linalg::{axpy, Field, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::Error;

/// A hom-Lie–Rinehart algebra stored at field level: the field basis element
/// `b_p e_i` of `L` sits at index `i·m + p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieRinehart {
    alg: CommAlgebra,
    phi: Matrix,
    rank: usize,
    lie: HomLieAlgebra,
    anchor: Vec<Matrix>,
}

impl HomLieRinehart {
    /// Expands A-basis data `[e_i, e_j]`, `α(e_i)`, `ρ(e_i)` to field level using
    /// semilinearity of α and ρ and the hom-Leibniz rule.
    pub fn from_a_basis(
        alg: CommAlgebra,
        phi: Matrix,
        brackets: &[Vec<Vec<Scalar>>],
        alpha: &[Vec<Scalar>],
        anchor: &[Matrix],
    ) -> Result<Self, Error> {
        let m = alg.dim();
        let r = alpha.len();
        let f = alg.field();
        let n = r * m;
        if phi.rows() != m || phi.cols() != m {
            return Err(Error::Shape(format!("phi must be {m}x{m}")));
        }
        if anchor.len() != r || anchor.iter().any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::Shape(format!("need {r} anchor matrices of size {m}x{m}")));
        }
        if alpha.iter().any(|v| v.len() != n)
            || brackets.len() != r
            || brackets.iter().any(|row| row.len() != r || row.iter().any(|v| v.len() != n))
        {
            return Err(Error::Shape(format!("L-vectors must have length {n}")));
        }
        let lmod = LModule { alg: &alg, rank: r };
        let phi_b: Vec<Vec<Scalar>> = (0..m).map(|p| phi.col(p)).collect();
        let mut table = vec![vec![f.zeros(n); n]; n];
        for i in 0..r {
            for p in 0..m {
                for j in 0..r {
                    for q in 0..m {
                        let mut v = lmod.scale(&alg.mul(&phi_b[p], &phi_b[q]), &brackets[i][j]);
                        let rq = anchor[i].mul_vec(&alg.basis(q));
                        axpy(&mut v, &f.one(), &lmod.scale(&alg.mul(&phi_b[p], &rq), &alpha[j]));
                        let rp = anchor[j].mul_vec(&alg.basis(p));
                        axpy(&mut v, &-f.one(), &lmod.scale(&alg.mul(&phi_b[q], &rp), &alpha[i]));
                        table[i * m + p][j * m + q] = v;
                    }
                }
            }
        }
        let mut alpha_field = Matrix::zeros(f, n, n);
        let mut anchor_field = Vec::with_capacity(n);
        for i in 0..r {
            for p in 0..m {
                alpha_field.set_col(i * m + p, &lmod.scale(&phi_b[p], &alpha[i]));
                anchor_field.push(alg.mul_matrix(&phi_b[p]).mul(&anchor[i]));
            }
        }
        let lie = HomLieAlgebra::new(f, table, alpha_field)?;
        Ok(HomLieRinehart { alg, phi, rank: r, lie, anchor: anchor_field })
    }

    /// Raw field-level data; no consistency with an A-basis description is assumed.
    pub fn from_field_data(alg: CommAlgebra, phi: Matrix, rank: usize, lie: HomLieAlgebra, anchor: Vec<Matrix>) -> Result<Self, Error> {
        let m = alg.dim();
        if lie.dim() != rank * m || anchor.len() != rank * m || phi.rows() != m {
            return Err(Error::Shape("field-level data does not match rank and algebra".into()));
        }
        Ok(HomLieRinehart { alg, phi, rank, lie, anchor })
    }

    /// A hom-Lie algebra viewed over `A = F` with zero anchor.
    pub fn from_hom_lie(g: &HomLieAlgebra) -> Self {
        let f = g.field();
        HomLieRinehart {
            alg: CommAlgebra::ground(f),
            phi: Matrix::identity(f, 1),
            rank: g.dim(),
            lie: g.clone(),
            anchor: vec![Matrix::zeros(f, 1, 1); g.dim()],
        }
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn alg(&self) -> &CommAlgebra {
        &self.alg
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn m(&self) -> usize {
        self.alg.dim()
    }

    /// Field dimension of `L`.
    pub fn n(&self) -> usize {
        self.rank * self.m()
    }

    pub fn lie(&self) -> &HomLieAlgebra {
        &self.lie
    }

    pub fn anchor(&self) -> &[Matrix] {
        &self.anchor
    }

    /// Field vector of `a·e_i`.
    pub fn e(&self, i: usize, a: &[Scalar]) -> Vec<Scalar> {
        let m = self.m();
        let mut v = self.field().zeros(self.n());
        v[i * m..(i + 1) * m].clone_from_slice(a);
        v
    }

    pub fn unit_e(&self, i: usize) -> Vec<Scalar> {
        self.e(i, self.alg.unit())
    }

    /// `α(e_i)` as a field vector.
    pub fn alpha_e(&self, i: usize) -> Vec<Scalar> {
        self.lie.alpha().mul_vec(&self.unit_e(i))
    }

    pub fn alpha_images(&self) -> Vec<Vec<Scalar>> {
        (0..self.rank).map(|i| self.alpha_e(i)).collect()
    }

    /// `[e_i, e_j]` as a field vector.
    pub fn bracket_e(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.lie.bracket(&self.unit_e(i), &self.unit_e(j))
    }

    /// `ρ(x)` for a field vector `x ∈ L`.
    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        let m = self.m();
        let mut acc = Matrix::zeros(self.field(), m, m);
        for (u, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.anchor[u].scale(c));
            }
        }
        acc
    }

    /// `ρ(e_i)` on the A-basis.
    pub fn rho_e(&self, i: usize) -> Matrix {
        self.rho(&self.unit_e(i))
    }

    /// `a·x` for `a ∈ A`, `x ∈ L` (field vectors).
    pub fn scale_l(&self, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        LModule { alg: &self.alg, rank: self.rank }.scale(a, x)
    }

    pub fn phi_inv(&self) -> Option<Matrix> {
        self.phi.inverse()
    }

    pub fn is_regular(&self) -> bool {
        self.phi_inv().is_some() && self.lie.is_regular()
    }

    pub fn require_regular(&self) -> Result<(), Error> {
        if self.is_regular() {
            Ok(())
        } else {
            Err(Error::NotRegular("phi and alpha must be invertible".into()))
        }
    }

    /// Field-level data with `α` replaced; used to build negative fixtures.
    pub fn with_lie(&self, lie: HomLieAlgebra) -> Self {
        HomLieRinehart { lie, ..self.clone() }
    }

    pub fn with_anchor(&self, anchor: Vec<Matrix>) -> Self {
        HomLieRinehart { anchor, ..self.clone() }
    }
}

/// Free A-module of rank `rank` at field level (index `i·m + p`).
pub(crate) struct LModule<'a> {
    pub alg: &'a CommAlgebra,
    pub rank: usize,
}

impl LModule<'_> {
    pub fn scale(&self, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let m = self.alg.dim();
        let mut out = Vec::with_capacity(x.len());
        for i in 0..self.rank {
            out.extend(self.alg.mul(a, &x[i * m..(i + 1) * m]));
        }
        out
    }
}

/// The axioms of a hom-Lie–Rinehart algebra, checked on field bases.
pub fn check_hlr(h: &HomLieRinehart) -> Report {
    let f = h.field();
    let m = h.m();
    let n = h.n();
    let mut report = Report::new("hom_lie_rinehart");
    match check_comm_algebra(&h.alg, &h.phi) {
        Ok(r) => report.absorb("base", r),
        Err(_) => report.push_check("base.shape", false),
    }
    report.absorb("hom_lie", check_hom_lie(&h.lie));
    let rep = HomLieRep { rho: h.anchor.clone(), alpha_v: h.phi.clone() };
    match check_hom_lie_rep(&h.lie, &rep) {
        Ok(r) => report.absorb("anchor_rep", r),
        Err(_) => report.push_check("anchor_rep.shape", false),
    }
    let mut c = Checker::new();
    for id in ["alpha_semilinear", "anchor_semilinear", "anchor_derivation", "hom_leibniz"] {
        c.declare(id);
    }
    let basis: Vec<Vec<Scalar>> = (0..n).map(|u| f.unit_vec(n, u)).collect();
    for u in 0..n {
        c.assert("anchor_derivation", is_phi_derivation(&h.alg, &h.phi, &h.anchor[u]), &[u]);
        for p in 0..m {
            let a = h.alg.basis(p);
            let phi_a = h.phi.col(p);
            let ax = h.scale_l(&a, &basis[u]);
            let lhs = h.lie.alpha().mul_vec(&ax);
            let rhs = h.scale_l(&phi_a, &h.lie.alpha().col(u));
            c.compare("alpha_semilinear", &[p, u], &lhs, &rhs);
            let lhs = h.rho(&ax);
            let rhs = h.alg.mul_matrix(&phi_a).mul(&h.anchor[u]);
            crate::algebra::compare_matrices(&mut c, "anchor_semilinear", &[p, u], &lhs, &rhs);
            for v in 0..n {
                let ay = h.scale_l(&a, &basis[v]);
                let lhs = h.lie.bracket(&basis[u], &ay);
                let mut rhs = h.scale_l(&phi_a, &h.lie.bracket(&basis[u], &basis[v]));
                let rho_a = h.anchor[u].mul_vec(&a);
                axpy(&mut rhs, &f.one(), &h.scale_l(&rho_a, &h.lie.alpha().col(v)));
                c.compare("hom_leibniz", &[u, p, v], &lhs, &rhs);
            }
        }
    }
    for ch in c.finish("").checks {
        report.checks.push(ch);
    }
    report
}
