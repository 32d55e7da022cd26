use super::{check_module, Calculus, HLRModule, HomLieRinehart, Side};
use crate::exterior::{ce_formula, check_generator_with, factor_basis, GradedOperator};
use crate::linalg::{axpy, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::{require, Error};

fn require_on_algebra(h: &HomLieRinehart, md: &HLRModule, side: Side) -> Result<(), Error> {
    if md.side() != side || md.rank() != 1 || md.beta() != h.phi() {
        return Err(Error::Domain(format!("expected a {side:?} module on (A, phi)").to_lowercase()));
    }
    require(check_module(h, md))
}

/// `(∧^r_A L*, Φ)` with the right action `Θ(ξ, x) = −d_A(i_{α⁻¹x} Φ⁻¹ξ)`.
pub fn top_dual_right_module(h: &HomLieRinehart) -> Result<HLRModule, Error> {
    let calc = Calculus::new(h)?;
    Ok(top_dual_with(&calc))
}

pub(crate) fn top_dual_with(calc: &Calculus) -> HLRModule {
    let h = calc.hlr();
    let (m, r, f) = (h.m(), h.rank(), h.field());
    let action = (0..h.n())
        .map(|u| {
            let x = f.unit_vec(h.n(), u);
            let cols: Vec<Vec<Scalar>> = (0..m).map(|p| calc.theta_top(&f.unit_vec(m, p), &x)).collect();
            Matrix::from_cols(f, m, &cols)
        })
        .collect();
    HLRModule::from_field_data(Side::Right, 1, action, calc.phi_hat().mat(r).clone())
}

/// The generator check for an operator on `∧•_A L` against the induced bracket.
pub fn check_hlr_generator(h: &HomLieRinehart, d: &GradedOperator) -> Result<Report, Error> {
    let br = super::ExtendedBracket::new(h);
    check_generator_with(br.ext(), br.alpha(), d, &|k, x, l, y| br.homogeneous(k, x, l, y))
}

/// Right module on `(A, φ)` ↦ the operator `D` on `∧•_A L` built from `{1, x}`.
pub fn corres1_fwd(h: &HomLieRinehart, md: &HLRModule) -> Result<GradedOperator, Error> {
    require_on_algebra(h, md, Side::Right)?;
    let br = super::ExtendedBracket::new(h);
    let ext = br.ext();
    let unit = h.alg().unit().to_vec();
    let act = |x: &[Scalar]| md.act(x).mul_vec(&unit);
    Ok(GradedOperator::from_fn(h.field(), &ext.dims(), -1, |k, i| {
        let (mask, p) = ext.split(k, i);
        ce_formula(ext, h.lie(), Some(&act), &factor_basis(ext, mask, p))
    }))
}

/// Exact generator `D` ↦ the right action `{b, x} = φ(b)D(x) − ρ(x)(b)` on `(A, φ)`.
pub fn corres1_bwd(h: &HomLieRinehart, d: &GradedOperator) -> Result<HLRModule, Error> {
    require(check_hlr_generator(h, d)?)?;
    let (m, f) = (h.m(), h.field());
    let action = (0..h.n())
        .map(|u| {
            let dx = d.apply(1, &f.unit_vec(h.n(), u));
            let cols: Vec<Vec<Scalar>> = (0..m)
                .map(|p| {
                    let mut v = h.alg().mul(&h.phi().col(p), &dx);
                    axpy(&mut v, &-f.one(), &h.anchor()[u].col(p));
                    v
                })
                .collect();
            Matrix::from_cols(f, m, &cols)
        })
        .collect();
    let md = HLRModule::from_field_data(Side::Right, 1, action, h.phi().clone());
    require(check_module(h, &md))?;
    Ok(md)
}

/// Right module on `(A, φ)` ↦ left module on `(∧^r_A L, α̃)` through
/// `∇(x, X)(ξ) = ⟨Θ(ξ̄, x), α̃X⟩ − {⟨ξ̄, X⟩, x}` with `ξ̄ = Φ⁻¹ξ`.
pub fn corres2_fwd(h: &HomLieRinehart, md: &HLRModule) -> Result<HLRModule, Error> {
    require_on_algebra(h, md, Side::Right)?;
    let calc = Calculus::new(h)?;
    let (m, r, n, f) = (h.m(), h.rank(), h.n(), h.field());
    let ext = calc.ext();
    let top = ext.basis().top();
    let functional = |x: &[Scalar], big_x: &[Scalar], xi: &[Scalar]| -> Vec<Scalar> {
        let bar = calc.phi_hat_inv().apply(r, xi);
        let mut v = calc.pair(r, &calc.theta_top(&bar, x), &calc.alpha().apply(r, big_x));
        axpy(&mut v, &-f.one(), &md.act(x).mul_vec(&calc.pair(r, &bar, big_x)));
        v
    };
    let mut c = Checker::new();
    c.declare("functional_a_linear");
    let mut action = Vec::with_capacity(n);
    for u in 0..n {
        let x = f.unit_vec(n, u);
        let mut cols = Vec::with_capacity(m);
        for p in 0..m {
            let big_x = ext.elem(top, &h.alg().basis(p));
            let at_top = functional(&x, &big_x, &ext.unit_elem(top));
            for q in 0..m {
                let b = h.alg().basis(q);
                let lhs = functional(&x, &big_x, &ext.elem(top, &b));
                c.compare("functional_a_linear", &[u, p, q], &lhs, &h.alg().mul(&b, &at_top));
            }
            cols.push(at_top);
        }
        action.push(Matrix::from_cols(f, m, &cols));
    }
    require(c.finish("corres2"))?;
    let out = HLRModule::from_field_data(Side::Left, 1, action, calc.alpha().mat(r).clone());
    require(check_module(h, &out))?;
    Ok(out)
}

/// Left module on `(∧^r_A L, α̃)` ↦ right module on `(A, φ)` through
/// `{a, x}·X = φ(a)[x, α̃⁻¹X] − ∇_x(a·α̃⁻¹X)`.
pub fn corres2_bwd(h: &HomLieRinehart, nabla: &HLRModule) -> Result<HLRModule, Error> {
    let calc = Calculus::new(h)?;
    let (m, r, n, f) = (h.m(), h.rank(), h.n(), h.field());
    if nabla.side() != Side::Left || nabla.rank() != 1 || nabla.beta() != calc.alpha().mat(r) {
        return Err(Error::Domain("expected a left module on the top exterior power".into()));
    }
    require(check_module(h, nabla))?;
    let ext = calc.ext();
    let top = ext.basis().top();
    let mu = |a: &[Scalar], x: &[Scalar], big_x: &[Scalar]| -> Vec<Scalar> {
        let pre = calc.alpha_inv().apply(r, big_x);
        let mut v = ext.scale(&h.phi().mul_vec(a), r, &calc.bracket().homogeneous(1, x, r, &pre));
        axpy(&mut v, &-f.one(), &nabla.act(x).mul_vec(&ext.scale(a, r, &pre)));
        v
    };
    let mut c = Checker::new();
    c.declare("action_a_linear");
    let mut action = Vec::with_capacity(n);
    for u in 0..n {
        let x = f.unit_vec(n, u);
        let mut cols = Vec::with_capacity(m);
        for p in 0..m {
            let a = h.alg().basis(p);
            let val = mu(&a, &x, &ext.unit_elem(top));
            for q in 0..m {
                let b = h.alg().basis(q);
                let lhs = mu(&a, &x, &ext.elem(top, &b));
                c.compare("action_a_linear", &[u, p, q], &lhs, &h.alg().mul(&b, &val));
            }
            cols.push(val);
        }
        action.push(Matrix::from_cols(f, m, &cols));
    }
    require(c.finish("corres2"))?;
    let out = HLRModule::from_field_data(Side::Right, 1, action, h.phi().clone());
    require(check_module(h, &out))?;
    Ok(out)
}

/// Exact generator ↦ left module on `(∧^r_A L, α̃)`.
pub fn res1_fwd(h: &HomLieRinehart, d: &GradedOperator) -> Result<HLRModule, Error> {
    corres2_fwd(h, &corres1_bwd(h, d)?)
}

/// Left module on `(∧^r_A L, α̃)` ↦ exact generator.
pub fn res1_bwd(h: &HomLieRinehart, nabla: &HLRModule) -> Result<GradedOperator, Error> {
    corres1_fwd(h, &corres2_bwd(h, nabla)?)
}
