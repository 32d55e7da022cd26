use crate::exterior::{Exterior, GradedOperator};
use crate::linalg::{axpy, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::rinehart::{check_hlr, Calculus, HomLieRinehart};
use crate::{require, Error};

/// A twisted differential graded commutative algebra on `∧•_A L*`: forms in the
/// layout of [`Exterior`], a degree-0 twist and a degree-1 operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dgca {
    pub ext: Exterior,
    pub twist: GradedOperator,
    pub d: GradedOperator,
}

/// `d² = 0`, `d∘α̂ = α̂∘d`, `α̂` multiplicative, and
/// `d(ζ∧η) = d(ζ)∧α̂(η) + (−1)^{|ζ|}α̂(ζ)∧d(η)` on field-basis pairs.
pub fn check_dgca(g: &Dgca) -> Report {
    let ext = &g.ext;
    let r = ext.rank();
    let f = ext.field();
    let mut c = Checker::new();
    for id in ["shape", "square_zero", "commutes_twist", "twist_multiplicative", "derivation"] {
        c.declare(id);
    }
    let dims = ext.dims();
    if g.d.degree() != 1 || g.twist.degree() != 0 || g.d.dims() != dims.as_slice() || g.twist.dims() != dims.as_slice() {
        c.assert("shape", false, &[]);
        return c.finish("dgca");
    }
    match g.d.square_defect() {
        Some(k) => c.assert("square_zero", false, &[k]),
        None => c.assert("square_zero", true, &[]),
    };
    let (da, ad) = (g.d.compose(&g.twist), g.twist.compose(&g.d));
    for k in 0..=r {
        crate::algebra::compare_matrices(&mut c, "commutes_twist", &[k], da.mat(k), ad.mat(k));
    }
    for p in 0..=r {
        for q in 0..=r - p {
            for i in 0..dims[p] {
                let z = f.unit_vec(dims[p], i);
                let (tz, dz) = (g.twist.apply(p, &z), g.d.apply(p, &z));
                for j in 0..dims[q] {
                    let e = f.unit_vec(dims[q], j);
                    let te = g.twist.apply(q, &e);
                    let prod = ext.wedge(p, &z, q, &e);
                    c.compare("twist_multiplicative", &[p, i, q, j], &g.twist.apply(p + q, &prod), &ext.wedge(p, &tz, q, &te));
                    if p + q == r {
                        continue;
                    }
                    let lhs = g.d.apply(p + q, &prod);
                    let mut rhs = ext.wedge(p + 1, &dz, q, &te);
                    let sign = if p % 2 == 0 { f.one() } else { -f.one() };
                    axpy(&mut rhs, &sign, &ext.wedge(p, &tz, q + 1, &g.d.apply(q, &e)));
                    c.compare("derivation", &[p, i, q, j], &lhs, &rhs);
                }
            }
        }
    }
    c.finish("dgca")
}

/// `(∧•_A L*, α̂, d_A)` for a regular `h`.
pub fn dgca1_fwd(h: &HomLieRinehart) -> Result<Dgca, Error> {
    let calc = Calculus::new(h)?;
    let g = Dgca { ext: calc.ext().clone(), twist: calc.phi_hat().clone(), d: calc.d_a().clone() };
    require(check_dgca(&g))?;
    Ok(g)
}

/// Recovers `(φ, α, ρ, [·,·])` from a twisted dgca: `φ` is the twist on functions,
/// `α⁻¹` is read off the twist on 1-forms, `ρ(α⁻¹e_u)(f)` is `(d f)(e_u)`, and the
/// bracket solves the degree-1 coboundary formula for `φ(ξ(α⁻²[e_u, e_v]))`.
pub fn dgca1_bwd(g: &Dgca) -> Result<HomLieRinehart, Error> {
    require(check_dgca(g))?;
    let ext = &g.ext;
    let (m, r, f) = (ext.m(), ext.rank(), ext.field());
    let alg = ext.alg();
    let n = r * m;
    let phi = g.twist.mat(0).clone();
    let phi_inv = phi.inverse().ok_or_else(|| Error::NotRegular("twist on functions".into()))?;
    let form1 = |i: usize| ext.unit_elem(1 << i);
    // α⁻¹(e_j) = Σ_i φ⁻¹((α̂ ε_i)(e_j)) e_i
    let inv_e: Vec<Vec<Scalar>> = (0..r)
        .map(|j| {
            let mut v = f.zeros(n);
            for i in 0..r {
                let t = g.twist.apply(1, &form1(i));
                v[i * m..(i + 1) * m].clone_from_slice(&phi_inv.mul_vec(ext.coeff(&t, 1 << j)));
            }
            v
        })
        .collect();
    let scale_l = |a: &[Scalar], x: &[Scalar]| -> Vec<Scalar> { (0..r).flat_map(|i| alg.mul(a, &x[i * m..(i + 1) * m])).collect() };
    let mut alpha_inv = Matrix::zeros(f, n, n);
    for j in 0..r {
        for p in 0..m {
            alpha_inv.set_col(j * m + p, &scale_l(&phi_inv.col(p), &inv_e[j]));
        }
    }
    let alpha = alpha_inv.inverse().ok_or_else(|| Error::NotRegular("twist on 1-forms".into()))?;
    let alpha2 = alpha.mul(&alpha);
    let rho_inv: Vec<Matrix> = (0..r)
        .map(|u| {
            let cols: Vec<Vec<Scalar>> = (0..m).map(|p| ext.coeff(&g.d.apply(0, &alg.basis(p)), 1 << u).to_vec()).collect();
            Matrix::from_cols(f, m, &cols)
        })
        .collect();
    let alpha_images: Vec<Vec<Scalar>> = (0..r)
        .map(|w| {
            let mut e = f.zeros(n);
            e[w * m..(w + 1) * m].clone_from_slice(alg.unit());
            alpha.mul_vec(&e)
        })
        .collect();
    let anchor: Vec<Matrix> = alpha_images
        .iter()
        .map(|img| {
            let mut acc = Matrix::zeros(f, m, m);
            for (u, ru) in rho_inv.iter().enumerate() {
                acc = acc.add(&alg.mul_matrix(&img[u * m..(u + 1) * m]).mul(ru));
            }
            acc
        })
        .collect();
    let d_forms: Vec<Vec<Scalar>> = (0..r).map(|i| g.d.apply(1, &form1(i))).collect();
    let mut brackets = vec![vec![f.zeros(n); r]; r];
    for u in 0..r {
        for v in u + 1..r {
            let mut z = f.zeros(n);
            for i in 0..r {
                let mut val = rho_inv[u].mul_vec(&inv_e[v][i * m..(i + 1) * m]);
                axpy(&mut val, &-f.one(), &rho_inv[v].mul_vec(&inv_e[u][i * m..(i + 1) * m]));
                axpy(&mut val, &-f.one(), ext.coeff(&d_forms[i], (1 << u) | (1 << v)));
                z[i * m..(i + 1) * m].clone_from_slice(&phi_inv.mul_vec(&val));
            }
            let b = alpha2.mul_vec(&z);
            brackets[v][u] = b.iter().map(|x| -x.clone()).collect();
            brackets[u][v] = b;
        }
    }
    let h = HomLieRinehart::from_a_basis(alg.clone(), phi, &brackets, &alpha_images, &anchor)?;
    require(check_hlr(&h))?;
    Ok(h)
}
