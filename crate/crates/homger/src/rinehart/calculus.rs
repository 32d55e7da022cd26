use super::gerstenhaber::ExtendedBracket;
use super::{cochain_differential, HLRModule, HomLieRinehart};
use crate::exterior::{merge_sign, Exterior, GradedOperator};
use crate::linalg::{axpy, Scalar};
use crate::Error;

/// Operators of a regular hom-Lie–Rinehart algebra on multivectors `∧•_A L` and
/// forms `∧•_A L*`. Both use the layout of [`Exterior`]; a form stores its values
/// `ξ(e_S)` on the basis multivectors.
pub struct Calculus {
    h: HomLieRinehart,
    bracket: ExtendedBracket,
    alpha_inv: GradedOperator,
    phi_hat: GradedOperator,
    phi_hat_inv: GradedOperator,
    d_a: GradedOperator,
}

impl Calculus {
    pub fn new(h: &HomLieRinehart) -> Result<Self, Error> {
        h.require_regular()?;
        let bracket = ExtendedBracket::new(h);
        let ext = bracket.ext();
        let alpha_inv = bracket.alpha().inverse().ok_or_else(|| Error::NotRegular("alpha on multivectors".into()))?;
        let phi = h.phi();
        let phi_hat = GradedOperator::from_fn(h.field(), &ext.dims(), 0, |k, i| {
            let (s, p) = ext.split(k, i);
            let b = ext.alg().basis(p);
            let mut out = ext.zero(k);
            for &t in ext.basis().masks(k) {
                let pre = alpha_inv.apply(k, &ext.unit_elem(t));
                let v = phi.mul_vec(&ext.alg().mul(&b, ext.coeff(&pre, s)));
                let base = ext.basis().pos(t) * ext.m();
                out[base..base + ext.m()].clone_from_slice(&v);
            }
            out
        });
        let phi_hat_inv = phi_hat.inverse().ok_or_else(|| Error::NotRegular("twist on forms".into()))?;
        let d_a = cochain_differential(h, &HLRModule::anchor(h))?;
        Ok(Calculus { h: h.clone(), bracket, alpha_inv, phi_hat, phi_hat_inv, d_a })
    }

    pub fn hlr(&self) -> &HomLieRinehart {
        &self.h
    }

    pub fn ext(&self) -> &Exterior {
        self.bracket.ext()
    }

    pub fn bracket(&self) -> &ExtendedBracket {
        &self.bracket
    }

    /// `α̃` on multivectors.
    pub fn alpha(&self) -> &GradedOperator {
        self.bracket.alpha()
    }

    pub fn alpha_inv(&self) -> &GradedOperator {
        &self.alpha_inv
    }

    /// `Φ = α̂` on forms.
    pub fn phi_hat(&self) -> &GradedOperator {
        &self.phi_hat
    }

    pub fn phi_hat_inv(&self) -> &GradedOperator {
        &self.phi_hat_inv
    }

    /// `d_A` on forms.
    pub fn d_a(&self) -> &GradedOperator {
        &self.d_a
    }

    /// `⟨ξ, X⟩ ∈ A` for a form and a multivector of the same grade.
    pub fn pair(&self, k: usize, xi: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let ext = self.ext();
        let mut out = self.h.field().zeros(ext.m());
        for &s in ext.basis().masks(k) {
            axpy(&mut out, &self.h.field().one(), &ext.alg().mul(ext.coeff(xi, s), ext.coeff(x, s)));
        }
        out
    }

    /// `ω(X ∧ −)`: the untwisted contraction of a degree-`n` form by a grade-`k` multivector.
    pub fn contract(&self, k: usize, x: &[Scalar], n: usize, omega: &[Scalar]) -> Vec<Scalar> {
        let ext = self.ext();
        if k > n {
            return Vec::new();
        }
        let f = self.h.field();
        let mut out = ext.zero(n - k);
        for &s in ext.basis().masks(k) {
            let xs = ext.coeff(x, s);
            if xs.iter().all(Scalar::is_zero) {
                continue;
            }
            for &t in ext.basis().masks(n - k) {
                let Some(neg) = merge_sign(s, t) else { continue };
                let v = ext.alg().mul(xs, ext.coeff(omega, s | t));
                let base = ext.basis().pos(t) * ext.m();
                axpy(&mut out[base..base + ext.m()], &if neg { -f.one() } else { f.one() }, &v);
            }
        }
        out
    }

    /// `i_X Ξ = α̂(Ξ)(α̃X, −)`; for `k = 1` this is the contraction `i_x`.
    pub fn interior(&self, k: usize, x: &[Scalar], n: usize, xi: &[Scalar]) -> Vec<Scalar> {
        if k > n {
            return Vec::new();
        }
        self.contract(k, &self.alpha().apply(k, x), n, &self.phi_hat.apply(n, xi))
    }

    /// The right action `Θ(ξ, x) = −d_A(i_{α⁻¹x} Φ⁻¹ξ)` on top-degree forms.
    pub fn theta_top(&self, xi: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let r = self.h.rank();
        let pre = self.alpha_inv.apply(1, x);
        let inner = self.interior(1, &pre, r, &self.phi_hat_inv.apply(r, xi));
        self.d_a.apply(r - 1, &inner).into_iter().map(|v| -v).collect()
    }
}
