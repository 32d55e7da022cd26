use std::cell::RefCell;
use std::collections::HashMap;

use super::HomLieRinehart;
use crate::exterior::{alpha_tilde, members, Exterior, GradedOperator, Multivector};
use crate::linalg::{axpy, Scalar};

/// The hom-Gerstenhaber bracket on `∧•_A L` induced by a hom-Lie–Rinehart algebra:
/// `[x, a] = ρ(x)(a)`, `[a, b] = 0`, `[x, y]` the bracket of `L`, extended by the
/// hom-Leibniz rule and graded skew-symmetry.
pub struct ExtendedBracket {
    h: HomLieRinehart,
    ext: Exterior,
    alpha: GradedOperator,
    images: Vec<Vec<Scalar>>,
    cache: RefCell<HashMap<(u32, usize, u32, usize), Vec<Scalar>>>,
}

impl ExtendedBracket {
    pub fn new(h: &HomLieRinehart) -> Self {
        let ext = Exterior::new(h.alg().clone(), h.rank());
        let images = h.alpha_images();
        let alpha = alpha_tilde(&ext, h.phi(), &images);
        ExtendedBracket { h: h.clone(), ext, alpha, images, cache: RefCell::new(HashMap::new()) }
    }

    pub fn ext(&self) -> &Exterior {
        &self.ext
    }

    /// `α̃` on `∧•_A L`.
    pub fn alpha(&self) -> &GradedOperator {
        &self.alpha
    }

    fn alpha_wedge(&self, mask: u32) -> Vec<Scalar> {
        let factors: Vec<&[Scalar]> = members(mask).into_iter().map(|j| self.images[j].as_slice()).collect();
        self.ext.wedge_all(&factors)
    }

    fn neg(v: Vec<Scalar>) -> Vec<Scalar> {
        v.into_iter().map(|x| -x).collect()
    }

    /// `[e_T, e_S]` for unit coefficients and nonempty `T`, `S`.
    fn units(&self, t: u32, s: u32) -> Vec<Scalar> {
        let (k, n) = (t.count_ones() as usize, s.count_ones() as usize);
        let f = self.ext.field();
        let mut out = self.ext.zero(k + n - 1);
        if k + n - 1 > self.ext.rank() {
            return out;
        }
        let tm = members(t);
        let sm = members(s);
        for (i, &ti) in tm.iter().enumerate() {
            for (j, &sj) in sm.iter().enumerate() {
                let br = self.h.bracket_e(ti, sj);
                if br.iter().all(Scalar::is_zero) {
                    continue;
                }
                let mut factors: Vec<&[Scalar]> = vec![&br];
                factors.extend(tm.iter().filter(|&&u| u != ti).map(|&u| self.images[u].as_slice()));
                factors.extend(sm.iter().filter(|&&u| u != sj).map(|&u| self.images[u].as_slice()));
                let term = self.ext.wedge_all(&factors);
                let sign = if (i + j) % 2 == 0 { f.one() } else { -f.one() };
                axpy(&mut out, &sign, &term);
            }
        }
        out
    }

    /// `[a, e_T]` for `a ∈ A`, `T` nonempty.
    fn scalar_left(&self, a: &[Scalar], t: u32) -> Vec<Scalar> {
        let k = t.count_ones() as usize;
        let f = self.ext.field();
        let mut out = self.ext.zero(k - 1);
        for (i, &ti) in members(t).iter().enumerate() {
            let r = self.h.rho_e(ti).mul_vec(a);
            if r.iter().all(Scalar::is_zero) {
                continue;
            }
            let rest = self.alpha_wedge(t & !(1 << ti));
            let sign = if i % 2 == 0 { -f.one() } else { f.one() };
            axpy(&mut out, &sign, &self.ext.scale(&r, k - 1, &rest));
        }
        out
    }

    /// `[b_p e_S, b_q e_T]`.
    pub fn basis(&self, s: u32, p: usize, t: u32, q: usize) -> Vec<Scalar> {
        if let Some(v) = self.cache.borrow().get(&(s, p, t, q)) {
            return v.clone();
        }
        let v = self.compute(s, p, t, q);
        self.cache.borrow_mut().insert((s, p, t, q), v.clone());
        v
    }

    fn compute(&self, s: u32, p: usize, t: u32, q: usize) -> Vec<Scalar> {
        let (n, k) = (s.count_ones() as usize, t.count_ones() as usize);
        let alg = self.ext.alg();
        let a = alg.basis(p);
        let phi_a = self.h.phi().col(p);
        let phi_b = self.h.phi().col(q);
        match (n, k) {
            (0, 0) => Vec::new(),
            (0, _) => self.ext.scale(&phi_b, k - 1, &self.scalar_left(&a, t)),
            (_, 0) => {
                let v = self.ext.scale(&phi_a, n - 1, &self.scalar_left(&alg.basis(q), s));
                if n % 2 == 1 {
                    Self::neg(v)
                } else {
                    v
                }
            }
            _ => {
                // [aX, b] ∧ α̃(Y)
                let x_b = self.basis(s, p, 0, q);
                let mut out = self.ext.wedge(n - 1, &x_b, k, &self.alpha_wedge(t));
                // φ(b)[aX, Y] with [aX, Y] = −(−1)^{(n−1)(k−1)} ([Y, a] ∧ α̃X + φ(a)[Y, X])
                let y_a = {
                    let v = self.scalar_left(&a, t);
                    if k % 2 == 1 {
                        Self::neg(v)
                    } else {
                        v
                    }
                };
                let mut inner = self.ext.wedge(k - 1, &y_a, n, &self.alpha_wedge(s));
                axpy(&mut inner, &self.ext.field().one(), &self.ext.scale(&phi_a, n + k - 1, &self.units(t, s)));
                let mut ax_y = self.ext.scale(&phi_b, n + k - 1, &inner);
                if (n - 1) * (k - 1) % 2 == 0 {
                    ax_y = Self::neg(ax_y);
                }
                axpy(&mut out, &self.ext.field().one(), &ax_y);
                out
            }
        }
    }

    /// Bracket of homogeneous elements of grades `k` and `l`.
    pub fn homogeneous(&self, k: usize, x: &[Scalar], l: usize, y: &[Scalar]) -> Vec<Scalar> {
        if k + l == 0 {
            return Vec::new();
        }
        let mut out = self.ext.zero(k + l - 1);
        if k + l - 1 > self.ext.rank() {
            return out;
        }
        for (i, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            let (s, p) = self.ext.split(k, i);
            for (j, yc) in y.iter().enumerate() {
                if yc.is_zero() {
                    continue;
                }
                let (t, q) = self.ext.split(l, j);
                axpy(&mut out, &(xc * yc), &self.basis(s, p, t, q));
            }
        }
        out
    }

    pub fn multivector(&self, x: &Multivector, y: &Multivector) -> Multivector {
        let mut out = Multivector::zero(&self.ext);
        let one = self.ext.field().one();
        for (k, xv) in x.grades.iter().enumerate() {
            for (l, yv) in y.grades.iter().enumerate() {
                if k + l == 0 || k + l - 1 > self.ext.rank() {
                    continue;
                }
                axpy(&mut out.grades[k + l - 1], &one, &self.homogeneous(k, xv, l, yv));
            }
        }
        out
    }
}

/// `[X, Y]` on `∧•_A L`.
pub fn bracket_extend(h: &HomLieRinehart, x: &Multivector, y: &Multivector) -> Multivector {
    ExtendedBracket::new(h).multivector(x, y)
}
