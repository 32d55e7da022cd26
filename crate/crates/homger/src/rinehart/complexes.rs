use super::{check_module, Calculus, HLRModule, HomLieRinehart, Side};
use crate::exterior::{members, Exterior, GradedOperator};
use crate::linalg::{axpy, CancelToken, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::{require, Error};

/// Field dimensions of `M ⊗_A ∧^n_A L` (equivalently `Hom_A(∧^n_A L, M)`).
fn module_dims(ext: &Exterior, d: usize) -> Vec<usize> {
    (0..=ext.rank()).map(|k| ext.basis().count(k) * d).collect()
}

/// `m ⊗ Y` in `M ⊗_A ∧^k_A L` for `m ∈ M`, `Y ∈ ∧^k_A L`.
fn tensor(h: &HomLieRinehart, md: &HLRModule, ext: &Exterior, k: usize, w: &[Scalar], y: &[Scalar], out: &mut [Scalar], sign: &Scalar) {
    let d = md.dim();
    for &t in ext.basis().masks(k) {
        let c = ext.coeff(y, t);
        if c.iter().all(Scalar::is_zero) {
            continue;
        }
        let base = ext.basis().pos(t) * d;
        axpy(&mut out[base..base + d], sign, &md.scale(h, c, w));
    }
}

fn square_zero_report(name: &str, op: &GradedOperator) -> Report {
    let mut c = Checker::new();
    c.declare("square_zero");
    match op.square_defect() {
        Some(k) => c.assert("square_zero", false, &[k]),
        None => c.assert("square_zero", true, &[]),
    };
    c.finish(name)
}

/// The boundary `d` on `M ⊗_A ∧•_A L` for a right module `M`, on the free basis
/// `b_p m_j ⊗ e_S` at `pos(S)·dim M + j·m + p`.
pub fn homology_boundary(h: &HomLieRinehart, md: &HLRModule) -> Result<GradedOperator, Error> {
    if md.side() != Side::Right {
        return Err(Error::Domain("homology needs a right module".into()));
    }
    require(check_module(h, md))?;
    let ext = Exterior::new(h.alg().clone(), h.rank());
    let d = md.dim();
    let f = h.field();
    let dims = module_dims(&ext, d);
    let alpha_e = h.alpha_images();
    let mut mats = Vec::with_capacity(dims.len());
    for (n, &cols) in dims.iter().enumerate() {
        let rows = if n == 0 { 0 } else { dims[n - 1] };
        let mut mat = Matrix::zeros(f, rows, cols);
        if n > 0 {
            for &s in ext.basis().masks(n) {
                let sm = members(s);
                let rest = |skip: &[usize]| -> Vec<Scalar> {
                    let fs: Vec<&[Scalar]> = sm.iter().filter(|u| !skip.contains(u)).map(|&u| alpha_e[u].as_slice()).collect();
                    ext.wedge_all(&fs)
                };
                let singles: Vec<Vec<Scalar>> = sm.iter().map(|&u| rest(&[u])).collect();
                let theta: Vec<Matrix> = sm.iter().map(|&u| md.act(&h.unit_e(u))).collect();
                let mut pairs = Vec::new();
                for (i, &si) in sm.iter().enumerate() {
                    for (j, &sj) in sm.iter().enumerate().skip(i + 1) {
                        let br = h.bracket_e(si, sj);
                        if br.iter().all(Scalar::is_zero) {
                            continue;
                        }
                        let r = rest(&[si, sj]);
                        let sign = if (i + j) % 2 == 0 { f.one() } else { -f.one() };
                        pairs.push((sign, ext.wedge(1, &br, n - 2, &r)));
                    }
                }
                for w_idx in 0..d {
                    let w = f.unit_vec(d, w_idx);
                    let mut col = f.zeros(rows);
                    for i in 0..sm.len() {
                        let acted = theta[i].mul_vec(&w);
                        let sign = if i % 2 == 0 { f.one() } else { -f.one() };
                        tensor(h, md, &ext, n - 1, &acted, &singles[i], &mut col, &sign);
                    }
                    let bw = md.beta().mul_vec(&w);
                    for (sign, y) in &pairs {
                        tensor(h, md, &ext, n - 1, &bw, y, &mut col, sign);
                    }
                    mat.set_col(ext.basis().pos(s) * d + w_idx, &col);
                }
            }
        }
        mats.push(mat);
    }
    let op = GradedOperator::from_mats(-1, &dims, mats);
    require(square_zero_report("boundary", &op))?;
    Ok(op)
}

/// Betti numbers of `(M ⊗_A ∧•_A L, d)`.
pub fn hlr_homology(h: &HomLieRinehart, md: &HLRModule) -> Result<Vec<usize>, Error> {
    hlr_homology_with(h, md, &CancelToken::never())
}

pub fn hlr_homology_with(h: &HomLieRinehart, md: &HLRModule, cancel: &CancelToken) -> Result<Vec<usize>, Error> {
    Ok(homology_boundary(h, md)?.homology_with(cancel)?)
}

/// The coboundary `δ` on `Alt_A(L, M)` for a left module `M` over a regular `h`.
/// The basis cochain `e_S ↦ b_p m_j` sits at `pos(S)·dim M + j·m + p`.
pub fn cochain_differential(h: &HomLieRinehart, md: &HLRModule) -> Result<GradedOperator, Error> {
    if md.side() != Side::Left {
        return Err(Error::Domain("cohomology needs a left module".into()));
    }
    h.require_regular()?;
    if md.beta().inverse().is_none() {
        return Err(Error::NotRegular("beta must be invertible".into()));
    }
    require(check_module(h, md))?;
    let op = raw_cochain_differential(h, md)?;
    require(square_zero_report("coboundary", &op))?;
    Ok(op)
}

/// The coboundary formula without input validation or the square-zero assertion.
pub(crate) fn raw_cochain_differential(h: &HomLieRinehart, md: &HLRModule) -> Result<GradedOperator, Error> {
    let alpha_inv = h.lie().alpha_inv().ok_or_else(|| Error::NotRegular("alpha must be invertible".into()))?;
    let alpha_inv2 = alpha_inv.mul(&alpha_inv);
    let ext = Exterior::new(h.alg().clone(), h.rank());
    let r = h.rank();
    let d = md.dim();
    let f = h.field();
    let dims = module_dims(&ext, d);
    let inv_e: Vec<Vec<Scalar>> = (0..r).map(|i| alpha_inv.mul_vec(&h.unit_e(i))).collect();
    let theta: Vec<Matrix> = inv_e.iter().map(|x| md.act(x)).collect();
    let mut mats = Vec::with_capacity(dims.len());
    for (n, &cols) in dims.iter().enumerate() {
        let rows = if n < r { dims[n + 1] } else { 0 };
        let mut mat = Matrix::zeros(f, rows, cols);
        let targets: &[u32] = if n < r { ext.basis().masks(n + 1) } else { &[] };
        for &u in targets {
            let um = members(u);
            let wedge_rest = |first: Option<&[Scalar]>, skip: &[usize]| -> Vec<Scalar> {
                let mut fs: Vec<&[Scalar]> = first.into_iter().collect();
                fs.extend(um.iter().filter(|v| !skip.contains(v)).map(|&v| inv_e[v].as_slice()));
                ext.wedge_all(&fs)
            };
            // (sign, θ-index or β, evaluated multivector of grade n)
            let mut terms: Vec<(Scalar, Option<usize>, Vec<Scalar>)> = Vec::new();
            for (i, &ui) in um.iter().enumerate() {
                let sign = if i % 2 == 0 { f.one() } else { -f.one() };
                terms.push((sign, Some(ui), wedge_rest(None, &[ui])));
            }
            for (i, &ui) in um.iter().enumerate() {
                for (j, &uj) in um.iter().enumerate().skip(i + 1) {
                    let br = h.bracket_e(ui, uj);
                    if br.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let first = alpha_inv2.mul_vec(&br);
                    let sign = if (i + j) % 2 == 0 { f.one() } else { -f.one() };
                    terms.push((sign, None, wedge_rest(Some(&first), &[ui, uj])));
                }
            }
            let row_base = ext.basis().pos(u) * d;
            for &s in ext.basis().masks(n) {
                for w_idx in 0..d {
                    let w = f.unit_vec(d, w_idx);
                    let mut val = f.zeros(d);
                    for (sign, op, y) in &terms {
                        let c = ext.coeff(y, s);
                        if c.iter().all(Scalar::is_zero) {
                            continue;
                        }
                        let fv = md.scale(h, c, &w);
                        let img = match op {
                            Some(i) => theta[*i].mul_vec(&fv),
                            None => md.beta().mul_vec(&fv),
                        };
                        axpy(&mut val, sign, &img);
                    }
                    let col = ext.basis().pos(s) * d + w_idx;
                    for (t, v) in val.into_iter().enumerate() {
                        mat.set(row_base + t, col, v);
                    }
                }
            }
        }
        mats.push(mat);
    }
    Ok(GradedOperator::from_mats(1, &dims, mats))
}

/// Cohomology dimensions of `(Alt_A(L, M), δ)`.
pub fn hlr_cohomology(h: &HomLieRinehart, md: &HLRModule) -> Result<Vec<usize>, Error> {
    hlr_cohomology_with(h, md, &CancelToken::never())
}

pub fn hlr_cohomology_with(h: &HomLieRinehart, md: &HLRModule, cancel: &CancelToken) -> Result<Vec<usize>, Error> {
    Ok(cochain_differential(h, md)?.homology_with(cancel)?)
}

/// Shuffle product of `A`-valued forms of degrees `p` and `q`; on the dual basis
/// it is the exterior product.
pub fn alt_wedge(h: &HomLieRinehart, p: usize, xi: &[Scalar], q: usize, eta: &[Scalar]) -> Vec<Scalar> {
    Exterior::new(h.alg().clone(), h.rank()).wedge(p, xi, q, eta)
}

/// `Φ(ξ)(x_1, …) = φ(ξ(α⁻¹x_1, …))` for a form of degree `p`.
pub fn phi_twist(h: &HomLieRinehart, p: usize, xi: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    Ok(Calculus::new(h)?.phi_hat().apply(p, xi))
}
