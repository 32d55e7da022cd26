use super::{check_sdhga, Sdhga};
use crate::algebra::HomLieAlgebra;
use crate::exterior::GradedOperator;
use crate::linalg::{axpy, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::reps::{check_rep, interior_mult, lie_derivative, AlgebroidRep};
use crate::rinehart::{check_hlr, Calculus, ExtendedBracket, HLRModule, HomLieRinehart, Side};
use crate::{require, Error};

/// A bivector `π ∈ ∧²_A L` on a hom-Lie–Rinehart algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoisson {
    h: HomLieRinehart,
    pi: Vec<Scalar>,
}

impl HomPoisson {
    pub fn new(h: HomLieRinehart, pi: Vec<Scalar>) -> Result<Self, Error> {
        let want = ExtendedBracket::new(&h).ext().dim(2);
        if pi.len() != want {
            return Err(Error::Shape(format!("a bivector has {want} coordinates, got {}", pi.len())));
        }
        Ok(HomPoisson { h, pi })
    }

    pub fn h(&self) -> &HomLieRinehart {
        &self.h
    }

    pub fn pi(&self) -> &[Scalar] {
        &self.pi
    }
}

/// `α̃(π) = π` and `[π,π] = 0`.
pub fn check_hom_poisson(p: &HomPoisson) -> Report {
    let br = ExtendedBracket::new(&p.h);
    let mut c = Checker::new();
    c.declare("alpha_invariant");
    c.declare("self_bracket");
    c.compare("alpha_invariant", &[], &br.alpha().apply(2, &p.pi), &p.pi);
    if br.ext().rank() >= 3 {
        let sq = br.homogeneous(2, &p.pi, 2, &p.pi);
        c.compare("self_bracket", &[], &sq, &br.ext().zero(3));
    } else {
        c.assert("self_bracket", true, &[]);
    }
    c.finish("hom_poisson")
}

/// `d_π = [π, −]` on `∧•_A L`.
pub fn d_pi(p: &HomPoisson) -> Result<Sdhga, Error> {
    require(check_hom_poisson(p))?;
    let br = ExtendedBracket::new(&p.h);
    let ext = br.ext().clone();
    let d = GradedOperator::from_fn(ext.field(), &ext.dims(), 1, |k, i| br.homogeneous(2, &p.pi, k, &ext.field().unit_vec(ext.dim(k), i)));
    let s = Sdhga::rinehart(&p.h, d);
    require(check_sdhga(&s))?;
    Ok(s)
}

/// `π#(ξ) = π(ξ, −)`, so that `⟨π#ξ, η⟩ = π(ξ, η)`.
pub fn pi_sharp(calc: &Calculus, pi: &[Scalar], xi: &[Scalar]) -> Vec<Scalar> {
    calc.contract(1, xi, 2, pi)
}

/// `π(ξ, η) ∈ A` for 1-forms.
pub fn pi_pair(calc: &Calculus, pi: &[Scalar], xi: &[Scalar], eta: &[Scalar]) -> Vec<Scalar> {
    calc.pair(2, &calc.ext().wedge(1, xi, 1, eta), pi)
}

fn cotangent_bracket(calc: &Calculus, pi: &[Scalar], xi: &[Scalar], eta: &[Scalar]) -> Vec<Scalar> {
    let f = calc.ext().field();
    let mut out = lie_derivative(calc, 1, &pi_sharp(calc, pi, xi)).apply(1, eta);
    axpy(&mut out, &-f.one(), &lie_derivative(calc, 1, &pi_sharp(calc, pi, eta)).apply(1, xi));
    axpy(&mut out, &-f.one(), &calc.d_a().apply(0, &pi_pair(calc, pi, xi, eta)));
    out
}

/// `(L*, [·,·]_π, α†, ρ∘π#)` with `[ξ,η]_π = L_{π#ξ}η − L_{π#η}ξ − d_A π(ξ,η)`.
pub fn cotangent_hlr(p: &HomPoisson) -> Result<HomLieRinehart, Error> {
    require(check_hom_poisson(p))?;
    let h = &p.h;
    let calc = Calculus::new(h)?;
    let f = h.field();
    let n = h.n();
    let twist = calc.phi_hat().mat(1).clone();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|u| f.unit_vec(n, u)).collect();
    let table = basis.iter().map(|xi| basis.iter().map(|eta| cotangent_bracket(&calc, &p.pi, xi, eta)).collect()).collect();
    let anchor: Vec<Matrix> = basis.iter().map(|u| h.rho(&pi_sharp(&calc, &p.pi, u))).collect();
    let lie = HomLieAlgebra::new(f, table, twist)?;
    let cot = HomLieRinehart::from_field_data(h.alg().clone(), h.phi().clone(), h.rank(), lie, anchor)?;
    require(check_hlr(&cot))?;
    Ok(cot)
}

/// `∂_π = α̂ i_π α̂⁻¹ d_A α̂⁻¹ − α̂ d_A α̂⁻¹ i_π α̂⁻¹` on forms; refuses unless `∂_π² = 0`.
pub fn poisson_boundary(p: &HomPoisson) -> Result<GradedOperator, Error> {
    require(check_hom_poisson(p))?;
    let calc = Calculus::new(&p.h)?;
    let (phi, inv, d) = (calc.phi_hat(), calc.phi_hat_inv(), calc.d_a());
    let i_pi = interior_mult(&calc, 2, &p.pi);
    let first = phi.compose(&i_pi).compose(inv).compose(d).compose(inv);
    let second = phi.compose(d).compose(inv).compose(&i_pi).compose(inv);
    let boundary = first.sub(&second);
    let mut c = Checker::new();
    c.declare("square_zero");
    match boundary.square_defect() {
        Some(k) => c.assert("square_zero", false, &[k]),
        None => c.assert("square_zero", true, &[]),
    };
    require(c.finish("poisson_boundary"))?;
    Ok(boundary)
}

/// Betti numbers of `(∧•_A L*, ∂_π)` by form degree.
pub fn hom_poisson_homology(p: &HomPoisson) -> Result<Vec<usize>, Error> {
    Ok(poisson_boundary(p)?.homology())
}

/// The representation `D̄(ξ, μ) = [ξ, μ]_π − π(dξ)·α̂(μ)` of the cotangent structure on
/// top forms, together with the cotangent structure and a report containing the
/// representation axioms and the rewrite `D̄(ξ, μ) = L_{π#ξ}μ + π(dξ)·α̂(μ)`.
pub fn top_rep_dbar(p: &HomPoisson) -> Result<(HomLieRinehart, AlgebroidRep, Report), Error> {
    let cot = cotangent_hlr(p)?;
    let h = &p.h;
    let calc = Calculus::new(h)?;
    let cot_br = ExtendedBracket::new(&cot);
    let ext = calc.ext();
    let (f, r, m, n) = (h.field(), h.rank(), h.m(), h.n());
    let top_twist = calc.phi_hat().mat(r).clone();
    let mut action = Vec::with_capacity(n);
    let mut c = Checker::new();
    c.declare("remark_rewrite");
    for u in 0..n {
        let xi = f.unit_vec(n, u);
        let weight = calc.pair(2, &calc.d_a().apply(1, &xi), &p.pi);
        let lie = lie_derivative(&calc, 1, &pi_sharp(&calc, &p.pi, &xi));
        let mut cols = Vec::with_capacity(m);
        for q in 0..m {
            let mu = f.unit_vec(m, q);
            let twisted = top_twist.mul_vec(&mu);
            let scaled = ext.scale(&weight, r, &twisted);
            let mut dbar = cot_br.homogeneous(1, &xi, r, &mu);
            axpy(&mut dbar, &-f.one(), &scaled);
            let mut rewrite = lie.apply(r, &mu);
            axpy(&mut rewrite, &f.one(), &scaled);
            c.compare("remark_rewrite", &[u, q], &dbar, &rewrite);
            cols.push(dbar);
        }
        action.push(Matrix::from_cols(f, m, &cols));
    }
    let rep = AlgebroidRep::new(HLRModule::from_field_data(Side::Left, 1, action, top_twist))?;
    let mut report = check_rep(&cot, &rep);
    for ch in c.finish("").checks {
        report.checks.push(ch);
    }
    report.name = "top_rep_dbar".into();
    Ok((cot, rep, report))
}
