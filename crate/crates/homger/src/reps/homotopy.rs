use super::{corres3_bwd, AlgebroidRep};
use crate::exterior::GradedOperator;
use crate::linalg::Scalar;
use crate::report::{Checker, Report};
use crate::rinehart::{check_hlr_generator, Calculus, HomLieRinehart};
use crate::{require, Error};

/// Betti numbers of `(∧•_A L, D_∇)` for a representation on the top exterior power.
pub fn algebroid_homology(h: &HomLieRinehart, rep: &AlgebroidRep) -> Result<Vec<usize>, Error> {
    Ok(corres3_bwd(h, rep)?.homology())
}

/// `i_ξ` on multivectors for a 1-form `ξ`: `i_ξ(X) = ι_{α̂ξ}(α̃X)`, so that
/// `i_ξ(x) = φ(ξ(x))` on `L`.
pub fn form_contraction(calc: &Calculus, xi: &[Scalar]) -> GradedOperator {
    let ext = calc.ext();
    let t = calc.phi_hat().apply(1, xi);
    GradedOperator::from_fn(ext.field(), &ext.dims(), -1, |k, i| {
        let x = calc.alpha().apply(k, &ext.field().unit_vec(ext.dim(k), i));
        calc.contract(1, &t, k, &x)
    })
}

/// `ξ(e_i) = φ⁻¹((D1 − D2)(e_i))`, with checks that `D1 − D2 = i_ξ` in every grade,
/// `φ(i_ξ(x)) = i_ξ(α(x))` and `d_A ξ = 0`.
pub fn generator_cocycle(h: &HomLieRinehart, d1: &GradedOperator, d2: &GradedOperator) -> Result<(Vec<Scalar>, Report), Error> {
    let calc = Calculus::new(h)?;
    require(check_hlr_generator(h, d1)?)?;
    require(check_hlr_generator(h, d2)?)?;
    let (m, r, n, f) = (h.m(), h.rank(), h.n(), h.field());
    let phi_inv = h.phi_inv().ok_or_else(|| Error::NotRegular("phi".into()))?;
    let diff = d1.sub(d2);
    let mut xi = f.zeros(n);
    for i in 0..r {
        xi[i * m..(i + 1) * m].clone_from_slice(&phi_inv.mul_vec(&diff.apply(1, &h.unit_e(i))));
    }
    let contraction = form_contraction(&calc, &xi);
    let mut c = Checker::new();
    for id in ["contraction_form", "twist_compatible", "cocycle"] {
        c.declare(id);
    }
    for k in 0..=r {
        crate::algebra::compare_matrices(&mut c, "contraction_form", &[k], diff.mat(k), contraction.mat(k));
    }
    for u in 0..n {
        let x = f.unit_vec(n, u);
        let lhs = h.phi().mul_vec(&contraction.apply(1, &x));
        let rhs = contraction.apply(1, &h.lie().alpha().mul_vec(&x));
        c.compare("twist_compatible", &[u], &lhs, &rhs);
    }
    let dxi = calc.d_a().apply(1, &xi);
    c.compare("cocycle", &[], &dxi, &f.zeros(dxi.len()));
    Ok((xi, c.finish("generator_cocycle")))
}

/// The function `f` with `ξ = d_A f`, when the generators are homotopic.
pub fn is_homotopic(h: &HomLieRinehart, d1: &GradedOperator, d2: &GradedOperator) -> Result<Option<Vec<Scalar>>, Error> {
    let (xi, report) = generator_cocycle(h, d1, d2)?;
    require(report)?;
    let calc = Calculus::new(h)?;
    Ok(calc.d_a().mat(0).solve(&xi)?)
}

/// `D1(e^f·λ) = e^{φ(f)}·D2(λ)` on a field basis of every grade, and equal Betti numbers.
pub fn homotopy_check(h: &HomLieRinehart, d1: &GradedOperator, d2: &GradedOperator, func: &[Scalar]) -> Result<Report, Error> {
    let alg = h.alg();
    let ef = alg.exp_nilpotent(func)?;
    let ephi = alg.exp_nilpotent(&h.phi().mul_vec(func))?;
    let calc = Calculus::new(h)?;
    let ext = calc.ext();
    let f = h.field();
    let mut c = Checker::new();
    c.declare("relation");
    c.declare("betti");
    for k in 1..=h.rank() {
        for i in 0..ext.dim(k) {
            let lam = f.unit_vec(ext.dim(k), i);
            let lhs = d1.apply(k, &ext.scale(&ef, k, &lam));
            let rhs = ext.scale(&ephi, k - 1, &d2.apply(k, &lam));
            c.compare("relation", &[k, i], &lhs, &rhs);
        }
    }
    let (b1, b2) = (d1.homology(), d2.homology());
    c.assert("betti", b1 == b2, &[]);
    let mut report = c.finish("homotopy");
    report.push_dims("betti_d1", b1);
    report.push_dims("betti_d2", b2);
    Ok(report)
}
