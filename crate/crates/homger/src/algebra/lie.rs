use super::{apply_table, Table};
use crate::linalg::{axpy, Field, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::Error;

/// Hom-Lie algebra on a field basis `x_0..x_{n-1}` with twist `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    field: Field,
    bracket: Table,
    alpha: Matrix,
}

impl HomLieAlgebra {
    pub fn new(field: Field, bracket: Table, alpha: Matrix) -> Result<Self, Error> {
        let n = alpha.rows();
        if alpha.cols() != n
            || bracket.len() != n
            || bracket.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::Shape(format!("bracket table and alpha must have dimension {n}")));
        }
        Ok(HomLieAlgebra { field, bracket, alpha })
    }

    /// Fills a skew table from the brackets `[x_i, x_j]` with `i < j`.
    pub fn from_upper(field: Field, n: usize, upper: &[(usize, usize, Vec<Scalar>)], alpha: Matrix) -> Result<Self, Error> {
        let mut t = vec![vec![field.zeros(n); n]; n];
        for (i, j, v) in upper {
            if i >= j || *j >= n || v.len() != n {
                return Err(Error::Shape(format!("bad bracket entry ({i},{j})")));
            }
            t[*j][*i] = v.iter().map(|x| -x).collect();
            t[*i][*j] = v.clone();
        }
        Self::new(field, t, alpha)
    }

    pub fn abelian(field: Field, n: usize, alpha: Matrix) -> Self {
        Self::new(field, vec![vec![field.zeros(n); n]; n], alpha).expect("square")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn table(&self) -> &Table {
        &self.bracket
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i][j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        apply_table(&self.bracket, self.dim(), self.field, x, y)
    }

    pub fn alpha_inv(&self) -> Option<Matrix> {
        self.alpha.inverse()
    }

    pub fn is_regular(&self) -> bool {
        self.alpha_inv().is_some()
    }

    /// `α^s`, using the inverse for negative `s`.
    pub fn alpha_pow(&self, s: i32) -> Result<Matrix, Error> {
        if s >= 0 {
            Ok(self.alpha.pow(s as u32))
        } else {
            let inv = self.alpha_inv().ok_or_else(|| Error::NotRegular("alpha is not invertible".into()))?;
            Ok(inv.pow(s.unsigned_abs()))
        }
    }

    pub fn with_alpha(&self, alpha: Matrix) -> Self {
        HomLieAlgebra { alpha, ..self.clone() }
    }
}

/// Skew-symmetry, multiplicativity of α and hom-Jacobi on all basis tuples.
pub fn check_hom_lie(g: &HomLieAlgebra) -> Report {
    let n = g.dim();
    let f = g.field;
    let mut c = Checker::new();
    for id in ["skew_symmetry", "alpha_multiplicative", "hom_jacobi"] {
        c.declare(id);
    }
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| g.alpha.col(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let neg: Vec<Scalar> = g.bracket[j][i].iter().map(|x| -x).collect();
            c.compare("skew_symmetry", &[i, j], &g.bracket[i][j], &neg);
            let lhs = g.alpha.mul_vec(&g.bracket[i][j]);
            let rhs = g.bracket(&images[i], &images[j]);
            c.compare("alpha_multiplicative", &[i, j], &lhs, &rhs);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut sum = g.bracket(&images[i], &g.bracket[j][k]);
                axpy(&mut sum, &f.one(), &g.bracket(&images[j], &g.bracket[k][i]));
                axpy(&mut sum, &f.one(), &g.bracket(&images[k], &g.bracket[i][j]));
                c.compare("hom_jacobi", &[i, j, k], &sum, &f.zeros(n));
            }
        }
    }
    c.finish("hom_lie")
}

/// Representation `(ρ, α_V)` of a hom-Lie algebra on a `d`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieRep {
    pub rho: Vec<Matrix>,
    pub alpha_v: Matrix,
}

impl HomLieRep {
    pub fn dim(&self) -> usize {
        self.alpha_v.rows()
    }

    /// `ρ(x)` for an arbitrary vector `x`.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        let f = self.alpha_v.field();
        let mut acc = Matrix::zeros(f, self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.rho[i].scale(c));
            }
        }
        acc
    }
}

/// `ρ(αx)∘α_V = α_V∘ρ(x)` and `ρ([x,y])∘α_V = ρ(αx)ρ(y) − ρ(αy)ρ(x)` on basis pairs.
pub fn check_hom_lie_rep(g: &HomLieAlgebra, r: &HomLieRep) -> Result<Report, Error> {
    let n = g.dim();
    let d = r.dim();
    if r.rho.len() != n || r.rho.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::Shape(format!("representation needs {n} matrices of size {d}x{d}")));
    }
    let mut c = Checker::new();
    c.declare("rep_twist");
    c.declare("rep_bracket");
    let rho_alpha: Vec<Matrix> = (0..n).map(|i| r.rho_of(&g.alpha.col(i))).collect();
    for i in 0..n {
        let lhs = rho_alpha[i].mul(&r.alpha_v);
        let rhs = r.alpha_v.mul(&r.rho[i]);
        compare_matrices(&mut c, "rep_twist", &[i], &lhs, &rhs);
        for j in 0..n {
            let lhs = r.rho_of(&g.bracket[i][j]).mul(&r.alpha_v);
            let rhs = rho_alpha[i].mul(&r.rho[j]).sub(&rho_alpha[j].mul(&r.rho[i]));
            compare_matrices(&mut c, "rep_bracket", &[i, j], &lhs, &rhs);
        }
    }
    Ok(c.finish("hom_lie_rep"))
}

/// Compares column by column so that a witness names the basis vector acted on.
pub(crate) fn compare_matrices(c: &mut Checker, id: &str, tuple: &[usize], lhs: &Matrix, rhs: &Matrix) {
    for k in 0..lhs.cols() {
        let (a, b) = (lhs.col(k), rhs.col(k));
        if a != b {
            let mut t = tuple.to_vec();
            t.push(k);
            c.compare(id, &t, &a, &b);
            return;
        }
    }
    c.assert(id, true, tuple);
}

/// The `α^s`-adjoint representation `ad_s(x)(h) = [α^s(x), h]` with twist `α`.
pub fn adjoint_rep(g: &HomLieAlgebra, s: i32) -> Result<HomLieRep, Error> {
    let n = g.dim();
    let a_s = g.alpha_pow(s)?;
    let rho = (0..n)
        .map(|i| {
            let x = a_s.col(i);
            let cols: Vec<Vec<Scalar>> = (0..n).map(|k| g.bracket(&x, &g.field.unit_vec(n, k))).collect();
            Matrix::from_cols(g.field, n, &cols)
        })
        .collect();
    Ok(HomLieRep { rho, alpha_v: g.alpha.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn abelian_is_valid_for_any_twist() {
        let f = Field::Rational;
        let alpha = Matrix::from_rows(f, vec![vec![f.int(1), f.int(5)], vec![f.int(0), f.int(7)]]).unwrap();
        assert!(check_hom_lie(&HomLieAlgebra::abelian(f, 2, alpha)).passed());
    }

    #[test]
    fn twisted_heisenberg_is_valid() {
        let r = check_hom_lie(&catalog::heisenberg_twisted(Field::Rational));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn sl2_with_bad_twist_fails_multiplicativity() {
        let r = check_hom_lie(&catalog::sl2_bad_twist(Field::Rational));
        assert!(r.failures().contains(&"alpha_multiplicative"));
        let w = r.get("alpha_multiplicative").unwrap().witness.clone().unwrap();
        assert_eq!(w.basis, vec![1, 2]);
    }

    #[test]
    fn jacobi_failure_is_witnessed() {
        let f = Field::Rational;
        // [e1,e2]=e2, [e1,e3]=e1, [e2,e3]=e3 violates Jacobi
        let g = HomLieAlgebra::from_upper(
            f,
            3,
            &[(0, 1, f.unit_vec(3, 1)), (0, 2, f.unit_vec(3, 0)), (1, 2, f.unit_vec(3, 2))],
            Matrix::identity(f, 3),
        )
        .unwrap();
        let r = check_hom_lie(&g);
        assert_eq!(r.failures(), vec!["hom_jacobi"]);
    }

    #[test]
    fn trivial_rep_is_valid() {
        let f = Field::Rational;
        let g = catalog::heisenberg(f);
        let r = HomLieRep { rho: vec![Matrix::zeros(f, 2, 2); 3], alpha_v: Matrix::identity(f, 2) };
        assert!(check_hom_lie_rep(&g, &r).unwrap().passed());
    }

    #[test]
    fn adjoint_values_on_twisted_heisenberg() {
        let f = Field::Rational;
        let g = catalog::heisenberg_twisted(f);
        let ad = adjoint_rep(&g, 1).unwrap();
        assert_eq!(ad.rho[0].col(1), vec![f.zero(), f.zero(), f.int(2)]);
        assert!(check_hom_lie_rep(&g, &ad).unwrap().passed());
        let classical = adjoint_rep(&catalog::heisenberg(f), 0).unwrap();
        assert_eq!(classical.rho[0].col(1), f.unit_vec(3, 2));
    }

    #[test]
    fn adjoint_with_foreign_twist_fails() {
        let f = Field::Rational;
        let g = catalog::heisenberg(f);
        let mut ad = adjoint_rep(&g, 0).unwrap();
        ad.alpha_v = Matrix::from_rows(
            f,
            vec![vec![f.int(1), f.zero(), f.zero()], vec![f.zero(), f.int(2), f.zero()], vec![f.zero(), f.zero(), f.int(3)]],
        )
        .unwrap();
        let r = check_hom_lie_rep(&g, &ad).unwrap();
        assert!(r.failures().contains(&"rep_twist"));
    }

    #[test]
    fn adjoint_of_abelian_is_zero() {
        let f = Field::Rational;
        let g = catalog::abelian(f, 2);
        for s in -1..3 {
            assert!(adjoint_rep(&g, s).unwrap().rho.iter().all(Matrix::is_zero));
        }
    }

    #[test]
    fn negative_power_needs_regular_twist() {
        let f = Field::Rational;
        let g = HomLieAlgebra::abelian(f, 2, Matrix::zeros(f, 2, 2));
        assert!(adjoint_rep(&g, -1).is_err());
        assert!(adjoint_rep(&g, 1).is_ok());
    }
}
