use crate::exterior::GradedOperator;
use crate::linalg::{axpy, Scalar};
use crate::report::{Checker, Report};
use crate::rinehart::Calculus;

/// `i_X` on `∧•_A L*` for a grade-`k` multivector: `(i_X Ξ)(x_1, …) = α̂(Ξ)(α̃X, x_1, …)`.
pub fn interior_mult(calc: &Calculus, k: usize, x: &[Scalar]) -> GradedOperator {
    let ext = calc.ext();
    GradedOperator::from_fn(ext.field(), &ext.dims(), -(k as i32), |n, i| calc.interior(k, x, n, &ext.field().unit_vec(ext.dim(n), i)))
}

/// `L_X = (i_X∘d_A − (−1)^k d_A∘i_{α̃⁻¹X})∘α̂⁻¹`.
pub fn lie_derivative(calc: &Calculus, k: usize, x: &[Scalar]) -> GradedOperator {
    let i_x = interior_mult(calc, k, x);
    let i_pre = interior_mult(calc, k, &calc.alpha_inv().apply(k, x));
    let d = calc.d_a();
    let first = i_x.compose(d);
    let second = d.compose(&i_pre);
    let body = if k % 2 == 0 { first.sub(&second) } else { first.add(&second) };
    body.compose(calc.phi_hat_inv())
}

/// One sample for the Cartan identities: multivectors `X` (grade `k`), `Y` (grade `l`),
/// `x` (grade 1), a function `f`, a form `Ξ` of degree `n`, and forms `Ξ₁`, `Ξ₂` of
/// degrees `p`, `q`.
#[derive(Clone, Debug)]
pub struct CartanSample {
    pub k: usize,
    pub x_big: Vec<Scalar>,
    pub l: usize,
    pub y_big: Vec<Scalar>,
    pub x: Vec<Scalar>,
    pub f: Vec<Scalar>,
    pub n: usize,
    pub xi: Vec<Scalar>,
    pub p: usize,
    pub xi1: Vec<Scalar>,
    pub q: usize,
    pub xi2: Vec<Scalar>,
}

pub const CARTAN_IDS: [&str; 8] = [
    "interior_function_linear",
    "interior_module_linear",
    "interior_twist",
    "interior_composition",
    "lie_function_linear",
    "lie_leibniz",
    "interior_wedge",
    "lie_wedge",
];

/// The interior-multiplication and Lie-derivative identities on one sample.
pub fn check_cartan(calc: &Calculus, s: &CartanSample) -> Report {
    let ext = calc.ext();
    let fld = ext.field();
    let h = calc.hlr();
    let phi_f = h.phi().mul_vec(&s.f);
    let sign = |e: usize| if e % 2 == 0 { fld.one() } else { -fld.one() };
    let mut c = Checker::new();
    for id in CARTAN_IDS {
        c.declare(id);
    }
    let (k, l, n) = (s.k, s.l, s.n);
    let ix = interior_mult(calc, k, &s.x_big);
    if k <= n {
        let base = ix.apply(n, &s.xi);
        let scaled = ext.scale(&phi_f, n - k, &base);
        let fx = ext.scale(&s.f, k, &s.x_big);
        c.compare("interior_function_linear", &[k, n], &calc.interior(k, &fx, n, &s.xi), &scaled);
        c.compare("interior_module_linear", &[k, n], &ix.apply(n, &ext.scale(&s.f, n, &s.xi)), &scaled);
        let lhs = calc.phi_hat().apply(n - k, &base);
        let rhs = calc.interior(k, &calc.alpha().apply(k, &s.x_big), n, &calc.phi_hat().apply(n, &s.xi));
        c.compare("interior_twist", &[k, n], &lhs, &rhs);
    }
    if k + l <= n {
        let ax = calc.alpha().apply(k, &s.x_big);
        let ay = calc.alpha().apply(l, &s.y_big);
        let axy = calc.alpha().apply(k + l, &ext.wedge(k, &s.x_big, l, &s.y_big));
        let first = calc.interior(k + l, &axy, n, &calc.phi_hat().apply(n, &s.xi));
        let second = calc.interior(l, &ay, n - k, &ix.apply(n, &s.xi));
        let iy = calc.interior(l, &s.y_big, n, &s.xi);
        let mut third = ext.zero(n - k - l);
        axpy(&mut third, &sign(k * l), &calc.interior(k, &ax, n - l, &iy));
        c.compare("interior_composition", &[k, l, n, 0], &first, &second);
        c.compare("interior_composition", &[k, l, n, 1], &second, &third);
    }
    let dfa = calc.d_a().apply(0, &s.f);
    if k <= n + 1 && n + 1 - k <= ext.rank() {
        let lx = lie_derivative(calc, k, &s.x_big);
        let lfx = lie_derivative(calc, k, &ext.scale(&s.f, k, &s.x_big));
        let mut rhs = ext.scale(&phi_f, n + 1 - k, &lx.apply(n, &s.xi));
        if k <= n {
            let wedge = ext.wedge(1, &dfa, n - k, &ix.apply(n, &s.xi));
            axpy(&mut rhs, &-sign(k), &wedge);
        }
        c.compare("lie_function_linear", &[k, n], &lfx.apply(n, &s.xi), &rhs);
    }
    let lx1 = lie_derivative(calc, 1, &s.x);
    let ix1 = interior_mult(calc, 1, &s.x);
    {
        let lhs = lx1.apply(n, &ext.scale(&s.f, n, &s.xi));
        let mut rhs = ext.scale(&phi_f, n, &lx1.apply(n, &s.xi));
        let rho_f = h.rho(&s.x).mul_vec(&s.f);
        axpy(&mut rhs, &fld.one(), &ext.scale(&rho_f, n, &calc.phi_hat().apply(n, &s.xi)));
        c.compare("lie_leibniz", &[n], &lhs, &rhs);
    }
    let (p, q) = (s.p, s.q);
    if p + q <= ext.rank() {
        let prod = ext.wedge(p, &s.xi1, q, &s.xi2);
        let t1 = calc.phi_hat().apply(p, &s.xi1);
        let t2 = calc.phi_hat().apply(q, &s.xi2);
        if p + q >= 1 {
            let mut rhs = ext.zero(p + q - 1);
            if p >= 1 {
                rhs = ext.wedge(p - 1, &ix1.apply(p, &s.xi1), q, &t2);
            }
            if q >= 1 {
                axpy(&mut rhs, &sign(p), &ext.wedge(p, &t1, q - 1, &ix1.apply(q, &s.xi2)));
            }
            c.compare("interior_wedge", &[p, q], &ix1.apply(p + q, &prod), &rhs);
        }
        let mut rhs = ext.wedge(p, &lx1.apply(p, &s.xi1), q, &t2);
        axpy(&mut rhs, &fld.one(), &ext.wedge(p, &t1, q, &lx1.apply(q, &s.xi2)));
        c.compare("lie_wedge", &[p, q], &lx1.apply(p + q, &prod), &rhs);
    }
    c.finish("cartan")
}
