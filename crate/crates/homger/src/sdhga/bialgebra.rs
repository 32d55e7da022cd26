use super::{check_sdhga, Sdhga};
use crate::algebra::{check_hom_lie, check_hom_lie_rep, HomLieAlgebra, HomLieRep};
use crate::exterior::{alpha_tilde, ger_bracket_homogeneous, members, Exterior, GradedOperator};
use crate::linalg::{axpy, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::rinehart::{Calculus, HomLieRinehart};
use crate::{require, Error};

/// A hom-Lie algebra `𝔤` and a hom-Lie algebra `𝔤*` on the dual space; basis `ε_i`
/// of `𝔤*` is dual to `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurelyHomLieBialgebra {
    pub g: HomLieAlgebra,
    pub g_star: HomLieAlgebra,
}

impl PurelyHomLieBialgebra {
    pub fn new(g: HomLieAlgebra, g_star: HomLieAlgebra) -> Result<Self, Error> {
        if g.dim() != g_star.dim() || g.field() != g_star.field() {
            return Err(Error::Shape("g and its dual must have the same dimension and field".into()));
        }
        Ok(PurelyHomLieBialgebra { g, g_star })
    }
}

/// `Δ(e_k) = Σ_{i<j} c^{ij}_k e_i∧e_j` where `[ε_i, ε_j]_* = Σ_k c^{ij}_k ε_k`.
pub fn delta(b: &PurelyHomLieBialgebra) -> Vec<Vec<Scalar>> {
    let n = b.g.dim();
    let ext = Exterior::over_field(b.g.field(), n);
    (0..n)
        .map(|k| {
            let mut out = ext.zero(2);
            for (pos, &mask) in ext.basis().masks(2).iter().enumerate() {
                let ij = members(mask);
                out[pos] = b.g_star.basis_bracket(ij[0], ij[1])[k].clone();
            }
            out
        })
        .collect()
}

fn delta_of(deltas: &[Vec<Scalar>], x: &[Scalar]) -> Vec<Scalar> {
    let mut out = x[0].field().zeros(deltas[0].len());
    for (c, d) in x.iter().zip(deltas) {
        axpy(&mut out, c, d);
    }
    out
}

/// Both hom-Lie algebras, `α_* = (α⁻¹)ᵀ`, and the compatibility in the two forms
/// `Δ[x,y] = [α⁻¹x, Δy] + [Δx, α⁻¹y]` and `Δ[x,y] = ad_{α⁻¹x}Δy − ad_{α⁻¹y}Δx`.
pub fn check_bialgebra(b: &PurelyHomLieBialgebra) -> Result<Report, Error> {
    let g = &b.g;
    let inv = g.alpha_inv().ok_or_else(|| Error::NotRegular("alpha of g".into()))?;
    if !b.g_star.is_regular() {
        return Err(Error::NotRegular("alpha of the dual".into()));
    }
    let n = g.dim();
    let f = g.field();
    let mut report = Report::new("hom_lie_bialgebra");
    report.absorb("g", check_hom_lie(g));
    report.absorb("g_star", check_hom_lie(&b.g_star));
    let mut c = Checker::new();
    for id in ["dual_twist", "bialcon", "bialcon2", "conventions_agree"] {
        c.declare(id);
    }
    crate::algebra::compare_matrices(&mut c, "dual_twist", &[], b.g_star.alpha(), &inv.transpose());
    let deltas = delta(b);
    for i in 0..n {
        let x = f.unit_vec(n, i);
        let ax = inv.mul_vec(&x);
        for j in 0..n {
            let y = f.unit_vec(n, j);
            let ay = inv.mul_vec(&y);
            let lhs = delta_of(&deltas, &g.bracket(&x, &y));
            let (dx, dy) = (&deltas[i], &deltas[j]);
            let mut rhs1 = ger_bracket_homogeneous(g, 1, &ax, 2, dy);
            axpy(&mut rhs1, &f.one(), &ger_bracket_homogeneous(g, 2, dx, 1, &ay));
            let mut rhs2 = ger_bracket_homogeneous(g, 1, &ax, 2, dy);
            axpy(&mut rhs2, &-f.one(), &ger_bracket_homogeneous(g, 1, &ay, 2, dx));
            let ok1 = c.compare("bialcon", &[i, j], &lhs, &rhs1);
            let ok2 = c.compare("bialcon2", &[i, j], &lhs, &rhs2);
            c.assert("conventions_agree", ok1 == ok2, &[i, j]);
        }
    }
    for ch in c.finish("").checks {
        report.checks.push(ch);
    }
    Ok(report)
}

fn naive_coadjoint(g: &HomLieAlgebra, z: &[Scalar]) -> Matrix {
    let n = g.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|k| g.bracket(z, &g.field().unit_vec(n, k))).collect();
    Matrix::from_cols(g.field(), n, &cols).transpose().scale(&-g.field().one())
}

/// `ad*_x = ad^∨_{α(x)}∘(α⁻²)ᵀ` with `⟨ad^∨_z ξ, y⟩ = −⟨ξ, [z, y]⟩`, twist `(α⁻¹)ᵀ`.
pub fn coadjoint_rep(g: &HomLieAlgebra) -> Result<HomLieRep, Error> {
    let inv = g.alpha_inv().ok_or_else(|| Error::NotRegular("alpha".into()))?;
    let inv2t = g.alpha_pow(-2)?.transpose();
    let rho = (0..g.dim()).map(|i| naive_coadjoint(g, &g.alpha().col(i)).mul(&inv2t)).collect();
    Ok(HomLieRep { rho, alpha_v: inv.transpose() })
}

fn dual_twist_extend(g: &HomLieAlgebra, inv: &Matrix) -> GradedOperator {
    let ext = Exterior::over_field(g.field(), g.dim());
    let images: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| inv.transpose().col(i)).collect();
    alpha_tilde(&ext, &Matrix::identity(g.field(), 1), &images)
}

/// `ad*_x(ξ1∧…∧ξk) = Σ_i α†ξ1∧…∧ad*_x ξi∧…∧α†ξk` on `∧•𝔤*`, one operator per basis vector.
pub fn coadjoint_exterior(g: &HomLieAlgebra) -> Result<Vec<GradedOperator>, Error> {
    let rep = coadjoint_rep(g)?;
    let n = g.dim();
    let ext = Exterior::over_field(g.field(), n);
    let twisted: Vec<Vec<Scalar>> = (0..n).map(|j| rep.alpha_v.col(j)).collect();
    Ok(rep
        .rho
        .iter()
        .map(|rho| {
            let acted: Vec<Vec<Scalar>> = (0..n).map(|j| rho.col(j)).collect();
            GradedOperator::from_fn(g.field(), &ext.dims(), 0, |k, i| {
                let (mask, _) = ext.split(k, i);
                let sm = members(mask);
                let mut out = ext.zero(k);
                for slot in 0..sm.len() {
                    let factors: Vec<&[Scalar]> = sm
                        .iter()
                        .enumerate()
                        .map(|(t, &s)| if t == slot { acted[s].as_slice() } else { twisted[s].as_slice() })
                        .collect();
                    axpy(&mut out, &g.field().one(), &ext.wedge_all(&factors));
                }
                out
            })
        })
        .collect())
}

/// The representation axioms for `ad*` on `𝔤*` and on every `∧^k 𝔤*`, and the
/// pairing `⟨ad*_x ξ, y⟩ = −⟨ξ, α⁻²[α(x), y]⟩`.
pub fn check_coadjoint(g: &HomLieAlgebra) -> Result<Report, Error> {
    let rep = coadjoint_rep(g)?;
    let inv = g.alpha_inv().ok_or_else(|| Error::NotRegular("alpha".into()))?;
    let inv2 = g.alpha_pow(-2)?;
    let n = g.dim();
    let mut report = Report::new("coadjoint");
    report.absorb("rep", check_hom_lie_rep(g, &rep)?);
    let ops = coadjoint_exterior(g)?;
    let twist = dual_twist_extend(g, &inv);
    for k in 0..=n {
        let ext_rep = HomLieRep { rho: ops.iter().map(|o| o.mat(k).clone()).collect(), alpha_v: twist.mat(k).clone() };
        report.absorb(&format!("exterior_{k}"), check_hom_lie_rep(g, &ext_rep)?);
    }
    let mut c = Checker::new();
    c.declare("twist_relation");
    for i in 0..n {
        let ax = g.alpha().col(i);
        for a in 0..n {
            let lhs = rep.rho[i].col(a);
            let rhs: Vec<Scalar> = (0..n).map(|b| -inv2.mul_vec(&g.bracket(&ax, &g.field().unit_vec(n, b)))[a].clone()).collect();
            c.compare("twist_relation", &[i, a], &lhs, &rhs);
        }
    }
    for ch in c.finish("").checks {
        report.checks.push(ch);
    }
    Ok(report)
}

/// `d_A` of `𝔤*` viewed over the ground field: the coboundary on forms on `𝔤*`,
/// that is on `∧•𝔤`.
pub fn dual_coboundary(g_star: &HomLieAlgebra) -> Result<GradedOperator, Error> {
    Ok(Calculus::new(&HomLieRinehart::from_hom_lie(g_star))?.d_a().clone())
}

/// `(∧•𝔤, d_*)`; refuses when the compatibility fails.
pub fn dstar_from_dual(b: &PurelyHomLieBialgebra) -> Result<Sdhga, Error> {
    require(check_bialgebra(b)?)?;
    let s = Sdhga::hom_lie(&b.g, dual_coboundary(&b.g_star)?);
    require(check_sdhga(&s))?;
    Ok(s)
}

/// `(∧•𝔤*, d)` with `d` the coboundary of `𝔤`.
pub fn dual_side(b: &PurelyHomLieBialgebra) -> Result<Sdhga, Error> {
    require(check_bialgebra(b)?)?;
    let s = Sdhga::hom_lie(&b.g_star, dual_coboundary(&b.g)?);
    require(check_sdhga(&s))?;
    Ok(s)
}
