//! Commutative algebras with a twist, φ-derivations, hom-Lie algebras and their representations.

mod lie;

pub(crate) use lie::compare_matrices;
pub use lie::{adjoint_rep, check_hom_lie, check_hom_lie_rep, HomLieAlgebra, HomLieRep};

use crate::linalg::{axpy, Field, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::Error;

/// `t[i][j]` is the coefficient vector of the product of basis elements `i` and `j`.
pub type Table = Vec<Vec<Vec<Scalar>>>;

/// Bilinear extension of a structure-constant table.
pub fn apply_table(table: &Table, out_dim: usize, field: Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = field.zeros(out_dim);
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if !b.is_zero() {
                axpy(&mut out, &(a * b), &table[i][j]);
            }
        }
    }
    out
}

/// Finite-dimensional commutative unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    field: Field,
    mul: Table,
    unit: Vec<Scalar>,
}

/// The twist φ of a base algebra, as the matrix of its action on the basis.
pub type AlgebraMap = Matrix;

impl CommAlgebra {
    pub fn new(field: Field, mul: Table, unit: Vec<Scalar>) -> Result<Self, Error> {
        let m = unit.len();
        if mul.len() != m || mul.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m)) {
            return Err(Error::Shape(format!("multiplication table must be {m}x{m}x{m}")));
        }
        Ok(CommAlgebra { field, mul, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        CommAlgebra { field, mul: vec![vec![vec![field.one()]]], unit: vec![field.one()] }
    }

    /// `F[t]/(t^k)` with basis `1, t, ..., t^{k-1}`.
    pub fn truncated(field: Field, k: usize) -> Self {
        assert!(k >= 1);
        let mut mul = vec![vec![field.zeros(k); k]; k];
        for (i, row) in mul.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                if i + j < k {
                    v[i + j] = field.one();
                }
            }
        }
        CommAlgebra { field, mul, unit: field.unit_vec(k, 0) }
    }

    /// Tensor product; basis `(i, j)` sits at `i * other.dim() + j`.
    pub fn tensor(&self, other: &CommAlgebra) -> CommAlgebra {
        let (m, n) = (self.dim(), other.dim());
        let f = self.field;
        let mut mul = vec![vec![f.zeros(m * n); m * n]; m * n];
        for a in 0..m * n {
            for b in 0..m * n {
                let (i1, j1, i2, j2) = (a / n, a % n, b / n, b % n);
                for (k, x) in self.mul[i1][i2].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (l, y) in other.mul[j1][j2].iter().enumerate() {
                        if !y.is_zero() {
                            mul[a][b][k * n + l] += &(x * y);
                        }
                    }
                }
            }
        }
        let mut unit = f.zeros(m * n);
        for (i, x) in self.unit.iter().enumerate() {
            for (j, y) in other.unit.iter().enumerate() {
                unit[i * n + j] = x * y;
            }
        }
        CommAlgebra { field: f, mul, unit }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn table(&self) -> &Table {
        &self.mul
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mul[i][j]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        apply_table(&self.mul, self.dim(), self.field, a, b)
    }

    /// Matrix of multiplication by `a`.
    pub fn mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let m = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..m).map(|j| self.mul(a, &self.field.unit_vec(m, j))).collect();
        Matrix::from_cols(self.field, m, &cols)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        self.field.unit_vec(self.dim(), i)
    }

    pub fn scalar(&self, c: &Scalar) -> Vec<Scalar> {
        self.unit.iter().map(|u| u * c).collect()
    }

    pub fn pow(&self, a: &[Scalar], k: u32) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Smallest `k` with `a^k = 0`, if any up to `dim + 1`.
    pub fn nilpotency(&self, a: &[Scalar]) -> Option<u32> {
        let mut acc = self.unit.clone();
        for k in 1..=(self.dim() as u32 + 1) {
            acc = self.mul(&acc, a);
            if acc.iter().all(Scalar::is_zero) {
                return Some(k);
            }
        }
        None
    }

    /// Multiplicative inverse, when `a` is a unit.
    pub fn inverse(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        self.mul_matrix(a).solve(&self.unit).ok().flatten()
    }

    /// `exp(a) = Σ a^k / k!` for nilpotent `a` over characteristic zero or above the nilpotency degree.
    pub fn exp_nilpotent(&self, a: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        let k = self.nilpotency(a).ok_or_else(|| Error::Domain("exponent is not nilpotent".into()))?;
        let p = self.field.characteristic();
        if p != 0 && p < k as u64 {
            return Err(Error::Domain(format!("characteristic {p} divides a factorial in exp")));
        }
        let mut out = self.field.zeros(self.dim());
        let mut term = self.unit.clone();
        for i in 0..k {
            axpy(&mut out, &self.field.one(), &term);
            let inv = self.field.int(i as i64 + 1).inv().expect("nonzero factorial");
            term = self.mul(&term, a).iter().map(|x| x * &inv).collect();
        }
        Ok(out)
    }
}

/// Checks commutativity, associativity and the unit of `a`, and that `phi` is a unital algebra map.
pub fn check_comm_algebra(a: &CommAlgebra, phi: &AlgebraMap) -> Result<Report, Error> {
    let m = a.dim();
    if phi.rows() != m || phi.cols() != m {
        return Err(Error::Shape(format!("phi must be {m}x{m}")));
    }
    let mut c = Checker::new();
    for id in ["commutative", "associative", "unit", "phi_multiplicative", "phi_unital"] {
        c.declare(id);
    }
    for i in 0..m {
        let bi = a.basis(i);
        c.compare("unit", &[i], &a.mul(&a.unit, &bi), &bi);
        for j in 0..m {
            c.compare("commutative", &[i, j], &a.mul[i][j], &a.mul[j][i]);
            let bj = a.basis(j);
            let lhs = phi.mul_vec(&a.mul[i][j]);
            let rhs = a.mul(&phi.col(i), &phi.col(j));
            c.compare("phi_multiplicative", &[i, j], &lhs, &rhs);
            for l in 0..m {
                let bl = a.basis(l);
                let left = a.mul(&a.mul(&bi, &bj), &bl);
                let right = a.mul(&bi, &a.mul(&bj, &bl));
                c.compare("associative", &[i, j, l], &left, &right);
            }
        }
    }
    c.compare("phi_unital", &[], &phi.mul_vec(&a.unit), &a.unit);
    Ok(c.finish("comm_algebra"))
}

/// True when `delta(ab) = φ(a)δ(b) + φ(b)δ(a)` on all basis pairs.
pub fn is_phi_derivation(a: &CommAlgebra, phi: &AlgebraMap, delta: &Matrix) -> bool {
    let m = a.dim();
    (0..m).all(|i| {
        (0..m).all(|j| {
            let lhs = delta.mul_vec(&a.mul[i][j]);
            let mut rhs = a.mul(&phi.col(i), &delta.col(j));
            axpy(&mut rhs, &a.field.one(), &a.mul(&phi.col(j), &delta.col(i)));
            lhs == rhs
        })
    })
}

/// Basis of the space of φ-derivations of `a`, as `m×m` matrices.
pub fn phi_derivation_space(a: &CommAlgebra, phi: &AlgebraMap) -> Vec<Matrix> {
    let m = a.dim();
    let f = a.field;
    // unknown δ[k][l] (row k, column l) at position k*m + l
    let mut sys = Matrix::zeros(f, m * m * m, m * m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let row = (i * m + j) * m + k;
                // δ(b_i b_j)_k = Σ_l c[i][j][l] δ[k][l]
                for l in 0..m {
                    let c = &a.mul[i][j][l];
                    if !c.is_zero() {
                        let v = sys.get(row, k * m + l) + c;
                        sys.set(row, k * m + l, v);
                    }
                }
                // − (φ(b_i) δ(b_j))_k − (φ(b_j) δ(b_i))_k
                for (src, other) in [(j, i), (i, j)] {
                    let mult = a.mul_matrix(&phi.col(other));
                    for l in 0..m {
                        let c = mult.get(k, l);
                        if !c.is_zero() {
                            let v = sys.get(row, l * m + src) - c;
                            sys.set(row, l * m + src, v);
                        }
                    }
                }
            }
        }
    }
    sys.kernel_basis()
        .into_iter()
        .map(|v| {
            let rows = v.chunks(m).map(|r| r.to_vec()).collect();
            Matrix::from_rows(f, rows).expect("square")
        })
        .collect()
}
