//! Named example structures used by tests and shipped with the CLI.

use crate::algebra::{CommAlgebra, HomLieAlgebra};
use crate::linalg::{Field, Matrix, Scalar};
use crate::rinehart::HomLieRinehart;

fn diag(f: Field, d: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(f, d.len(), d.len());
    for (i, &x) in d.iter().enumerate() {
        m.set(i, i, f.int(x));
    }
    m
}

fn vec_of(f: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.int(x)).collect()
}

pub fn abelian(f: Field, n: usize) -> HomLieAlgebra {
    HomLieAlgebra::abelian(f, n, Matrix::identity(f, n))
}

/// `[e1,e2] = e3` with α = id.
pub fn heisenberg(f: Field) -> HomLieAlgebra {
    HomLieAlgebra::from_upper(f, 3, &[(0, 1, f.unit_vec(3, 2))], Matrix::identity(f, 3)).unwrap()
}

/// `[e1,e2] = e3` with α = diag(2,3,6).
pub fn heisenberg_twisted(f: Field) -> HomLieAlgebra {
    heisenberg(f).with_alpha(diag(f, &[2, 3, 6]))
}

fn sl2_table(f: Field, alpha: Matrix) -> HomLieAlgebra {
    // e1 = e, e2 = f, e3 = h
    HomLieAlgebra::from_upper(
        f,
        3,
        &[(0, 1, vec_of(f, &[0, 0, 1])), (0, 2, vec_of(f, &[-2, 0, 0])), (1, 2, vec_of(f, &[0, 2, 0]))],
        alpha,
    )
    .unwrap()
}

pub fn sl2(f: Field) -> HomLieAlgebra {
    sl2_table(f, Matrix::identity(f, 3))
}

/// sl2 constants with α = diag(1,1,2), which is not multiplicative.
pub fn sl2_bad_twist(f: Field) -> HomLieAlgebra {
    sl2_table(f, diag(f, &[1, 1, 2]))
}

/// `[e1,e2] = e2` with the unipotent automorphism α(e1) = e1 + c·e2, α(e2) = e2.
pub fn affine2_twisted(f: Field, c: i64) -> HomLieAlgebra {
    let alpha = Matrix::from_cols(f, 2, &[vec_of(f, &[1, c]), vec_of(f, &[0, 1])]);
    HomLieAlgebra::from_upper(f, 2, &[(0, 1, f.unit_vec(2, 1))], alpha).unwrap()
}

/// The hom-Lie algebras of the catalog, by name.
pub fn hom_lie_algebras(f: Field) -> Vec<(&'static str, HomLieAlgebra)> {
    vec![
        ("abelian2", abelian(f, 2)),
        ("abelian3", abelian(f, 3)),
        ("heisenberg", heisenberg(f)),
        ("heisenberg_twisted", heisenberg_twisted(f)),
        ("sl2", sl2(f)),
        ("affine2_twisted", affine2_twisted(f, 1)),
    ]
}

/// `φ(t^i) = c^i t^i` on `F[t]/(t^k)`.
fn scaling(f: Field, c: i64, k: usize) -> Matrix {
    diag(f, &(0..k as u32).map(|i| c.pow(i)).collect::<Vec<_>>())
}

/// The φ-derivation `t^i ↦ i·c^{i-1} t^i` of `F[t]/(t^k)` for `φ(t) = c·t`.
fn euler(f: Field, c: i64, k: usize) -> Matrix {
    diag(f, &(0..k as u32).map(|i| if i == 0 { 0 } else { i as i64 * c.pow(i - 1) }).collect::<Vec<_>>())
}

/// `L = A·e` over `A = F[t]/(t^k)` with `φ(t) = c·t`, `α(e) = e`, `ρ(e)(t) = t`.
pub fn free_line(f: Field, k: usize, c: i64) -> HomLieRinehart {
    let alg = CommAlgebra::truncated(f, k);
    let e = f.unit_vec(k, 0);
    HomLieRinehart::from_a_basis(alg, scaling(f, c, k), &[vec![f.zeros(k)]], &[e], &[euler(f, c, k)]).unwrap()
}

/// `L = A·e1 ⊕ A·e2` over `F[t]/(t^k)` with `φ(t) = c·t`, abelian on the basis,
/// `α(e1) = e1`, `α(e2) = μ·e2`, `ρ(e1)` the Euler φ-derivation and `ρ(e2) = 0`.
pub fn free_plane(f: Field, k: usize, c: i64, mu: i64) -> HomLieRinehart {
    let alg = CommAlgebra::truncated(f, k);
    let n = 2 * k;
    let mut a2 = f.zeros(n);
    a2[k] = f.int(mu);
    let zero = vec![f.zeros(n), f.zeros(n)];
    HomLieRinehart::from_a_basis(
        alg,
        scaling(f, c, k),
        &[zero.clone(), zero],
        &[f.unit_vec(n, 0), a2],
        &[euler(f, c, k), Matrix::zeros(f, k, k)],
    )
    .unwrap()
}

/// `A = F[x,y]/(x², y²)` with basis `1, y, x, xy`, `φ(x) = c·x`, `φ(y) = d·y`, and
/// `L` spanned by the commuting Euler fields `e1 = x∂x`, `e2 = y∂y`.
pub fn poisson_surrogate(f: Field, c: i64, d: i64) -> HomLieRinehart {
    let a = CommAlgebra::truncated(f, 2);
    let alg = a.tensor(&a);
    let phi = diag(f, &[1, d, c, c * d]);
    let zero = vec![f.zeros(8), f.zeros(8)];
    HomLieRinehart::from_a_basis(
        alg,
        phi,
        &[zero.clone(), zero],
        &[f.unit_vec(8, 0), f.unit_vec(8, 4)],
        &[diag(f, &[0, 0, 1, d]), diag(f, &[0, 1, 0, c])],
    )
    .unwrap()
}

/// The hom-Lie–Rinehart structures of the catalog, by name.
pub fn hlr_structures(f: Field) -> Vec<(&'static str, HomLieRinehart)> {
    vec![
        ("heisenberg_hlr", HomLieRinehart::from_hom_lie(&heisenberg(f))),
        ("free_line", free_line(f, 2, 1)),
        ("free_line_twisted", free_line(f, 3, 2)),
        ("free_plane", free_plane(f, 2, 1, 2)),
        ("poisson_classical", poisson_surrogate(f, 1, 1)),
        ("poisson_twisted", poisson_surrogate(f, 2, 3)),
    ]
}
