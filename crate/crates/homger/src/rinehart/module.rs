use serde::{Deserialize, Serialize};

use super::{HomLieRinehart, LModule};
use crate::algebra::{check_hom_lie_rep, compare_matrices, HomLieRep};
use crate::linalg::{axpy, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A module `M` free of rank `s` over `A`; the field basis element `b_p m_j` sits
/// at `j·m + p`. `action[u]` is the field matrix of `m ↦ {basis_u, m}` (left) or
/// `m ↦ {m, basis_u}` (right) for the field basis `basis_u` of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLRModule {
    side: Side,
    rank: usize,
    action: Vec<Matrix>,
    beta: Matrix,
}

impl HLRModule {
    pub fn from_field_data(side: Side, rank: usize, action: Vec<Matrix>, beta: Matrix) -> Self {
        HLRModule { side, rank, action, beta }
    }

    /// Expands `{e_i, m_j}` (left) or `{m_j, e_i}` (right), given as
    /// `action[i][j]`, and `β(m_j)` through the module axioms.
    pub fn from_a_basis(h: &HomLieRinehart, side: Side, action: &[Vec<Vec<Scalar>>], beta: &[Vec<Scalar>]) -> Result<Self, Error> {
        let m = h.m();
        let s = beta.len();
        let dim = s * m;
        let f = h.field();
        if beta.iter().any(|v| v.len() != dim)
            || action.len() != h.rank()
            || action.iter().any(|row| row.len() != s || row.iter().any(|v| v.len() != dim))
        {
            return Err(Error::Shape(format!("module vectors must have length {dim}")));
        }
        let alg = h.alg();
        let mm = LModule { alg, rank: s };
        let phi_b: Vec<Vec<Scalar>> = (0..m).map(|p| h.phi().col(p)).collect();
        let mut beta_field = Matrix::zeros(f, dim, dim);
        for j in 0..s {
            for p in 0..m {
                beta_field.set_col(j * m + p, &mm.scale(&phi_b[p], &beta[j]));
            }
        }
        let mut mats = Vec::with_capacity(h.n());
        for i in 0..h.rank() {
            let rho = h.rho_e(i);
            for q in 0..m {
                let rho_q = rho.mul_vec(&alg.basis(q));
                let mut mat = Matrix::zeros(f, dim, dim);
                for j in 0..s {
                    for p in 0..m {
                        let rho_p = rho.mul_vec(&alg.basis(p));
                        let col = match side {
                            Side::Left => {
                                let mut inner = mm.scale(&phi_b[p], &action[i][j]);
                                axpy(&mut inner, &f.one(), &mm.scale(&rho_p, &beta[j]));
                                mm.scale(&phi_b[q], &inner)
                            }
                            Side::Right => {
                                let mut unit = mm.scale(&phi_b[q], &action[i][j]);
                                axpy(&mut unit, &-f.one(), &mm.scale(&rho_q, &beta[j]));
                                let mut v = mm.scale(&phi_b[p], &unit);
                                let c = alg.mul(&phi_b[q], &rho_p);
                                axpy(&mut v, &-f.one(), &mm.scale(&c, &beta[j]));
                                v
                            }
                        };
                        mat.set_col(j * m + p, &col);
                    }
                }
                mats.push(mat);
            }
        }
        Ok(HLRModule { side, rank: s, action: mats, beta: beta_field })
    }

    /// `(A, φ)` with the anchor as left action.
    pub fn anchor(h: &HomLieRinehart) -> Self {
        HLRModule { side: Side::Left, rank: 1, action: h.anchor().to_vec(), beta: h.phi().clone() }
    }

    /// `(A, φ)` with zero action on the given side; a module only when the anchor vanishes.
    pub fn trivial(h: &HomLieRinehart, side: Side) -> Self {
        let m = h.m();
        HLRModule { side, rank: 1, action: vec![Matrix::zeros(h.field(), m, m); h.n()], beta: h.phi().clone() }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    /// Field dimension of `M`.
    pub fn dim(&self) -> usize {
        self.beta.rows()
    }

    /// The action of a field vector `x ∈ L` as a matrix on `M`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut acc = Matrix::zeros(self.beta.field(), d, d);
        for (u, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.action[u].scale(c));
            }
        }
        acc
    }

    pub(crate) fn scale(&self, h: &HomLieRinehart, a: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        LModule { alg: h.alg(), rank: self.rank }.scale(a, v)
    }
}

/// The module axioms for the module's side, checked on field bases. A right
/// action is a representation with the opposite sign: `(−θ, β)` satisfies the
/// representation identities.
pub fn check_module(h: &HomLieRinehart, md: &HLRModule) -> Report {
    let f = h.field();
    let m = h.m();
    let n = h.n();
    let d = md.dim();
    let mut report = Report::new(match md.side {
        Side::Left => "left_module",
        Side::Right => "right_module",
    });
    if md.action.len() != n || d != md.rank * m || md.action.iter().any(|a| a.rows() != d || a.cols() != d) || md.beta.cols() != d {
        report.push_check("shape", false);
        return report;
    }
    let rho: Vec<Matrix> = match md.side {
        Side::Left => md.action.clone(),
        Side::Right => md.action.iter().map(|a| a.scale(&-f.one())).collect(),
    };
    match check_hom_lie_rep(h.lie(), &HomLieRep { rho, alpha_v: md.beta.clone() }) {
        Ok(r) => report.absorb("rep", r),
        Err(_) => report.push_check("rep.shape", false),
    }
    let mut c = Checker::new();
    let ids: &[&str] = match md.side {
        Side::Left => &["beta_semilinear", "linear_in_l", "leibniz_in_m"],
        Side::Right => &["beta_semilinear", "module_slot", "algebra_slot"],
    };
    for id in ids {
        c.declare(id);
    }
    let basis_l: Vec<Vec<Scalar>> = (0..n).map(|u| f.unit_vec(n, u)).collect();
    for p in 0..m {
        let a = h.alg().basis(p);
        let phi_a = h.phi().col(p);
        let mul_a = block_mul(h, md.rank, &a);
        let mul_phi_a = block_mul(h, md.rank, &phi_a);
        compare_matrices(&mut c, "beta_semilinear", &[p], &md.beta.mul(&mul_a), &mul_phi_a.mul(&md.beta));
        for u in 0..n {
            let theta = &md.action[u];
            let theta_ax = md.act(&h.scale_l(&a, &basis_l[u]));
            let rho_a = h.alg().mul_matrix(&h.anchor()[u].mul_vec(&a));
            let rho_beta = block_mul_matrix(&rho_a, md.rank).mul(&md.beta);
            match md.side {
                Side::Left => {
                    compare_matrices(&mut c, "linear_in_l", &[p, u], &theta_ax, &mul_phi_a.mul(theta));
                    let rhs = mul_phi_a.mul(theta).add(&rho_beta);
                    compare_matrices(&mut c, "leibniz_in_m", &[u, p], &theta.mul(&mul_a), &rhs);
                }
                Side::Right => {
                    let rhs = mul_phi_a.mul(theta).sub(&rho_beta);
                    compare_matrices(&mut c, "module_slot", &[p, u], &theta.mul(&mul_a), &rhs);
                    compare_matrices(&mut c, "algebra_slot", &[p, u], &theta_ax, &rhs);
                }
            }
        }
    }
    for ch in c.finish("").checks {
        report.checks.push(ch);
    }
    report
}

/// Multiplication by `a` on a free module of rank `s`.
fn block_mul(h: &HomLieRinehart, s: usize, a: &[Scalar]) -> Matrix {
    block_mul_matrix(&h.alg().mul_matrix(a), s)
}

fn block_mul_matrix(mat: &Matrix, s: usize) -> Matrix {
    let m = mat.rows();
    let mut out = Matrix::zeros(mat.field(), s * m, s * m);
    for j in 0..s {
        for r in 0..m {
            for c in 0..m {
                out.set(j * m + r, j * m + c, mat.get(r, c).clone());
            }
        }
    }
    out
}
