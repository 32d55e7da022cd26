use crate::linalg::{CancelToken, Cancelled, Field, Matrix, Scalar};

/// Degree-homogeneous linear map on a graded space `⊕_k V_k`; `mats[k]` maps
/// `V_k` to `V_{k+degree}` and has no rows when that grade does not exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator {
    degree: i32,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl GradedOperator {
    fn target(dims: &[usize], k: usize, degree: i32) -> usize {
        let t = k as i64 + degree as i64;
        if t < 0 || t as usize >= dims.len() {
            0
        } else {
            dims[t as usize]
        }
    }

    /// Builds the operator from the images of field basis vectors: `image(k, i)` is the
    /// image of the `i`-th basis vector of grade `k`.
    pub fn from_fn(field: Field, dims: &[usize], degree: i32, mut image: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mats = (0..dims.len())
            .map(|k| {
                let rows = Self::target(dims, k, degree);
                let cols: Vec<Vec<Scalar>> = (0..dims[k])
                    .map(|i| if rows == 0 { Vec::new() } else { image(k, i) })
                    .collect();
                Matrix::from_cols(field, rows, &cols)
            })
            .collect();
        GradedOperator { degree, dims: dims.to_vec(), mats }
    }

    pub fn from_mats(degree: i32, dims: &[usize], mats: Vec<Matrix>) -> Self {
        assert_eq!(mats.len(), dims.len());
        for (k, m) in mats.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (Self::target(dims, k, degree), dims[k]), "grade {k}");
        }
        GradedOperator { degree, dims: dims.to_vec(), mats }
    }

    pub fn zero(field: Field, dims: &[usize], degree: i32) -> Self {
        let mats = (0..dims.len()).map(|k| Matrix::zeros(field, Self::target(dims, k, degree), dims[k])).collect();
        GradedOperator { degree, dims: dims.to_vec(), mats }
    }

    pub fn identity(field: Field, dims: &[usize]) -> Self {
        GradedOperator { degree: 0, dims: dims.to_vec(), mats: dims.iter().map(|&d| Matrix::identity(field, d)).collect() }
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mat(&self, k: usize) -> &Matrix {
        &self.mats[k]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// Image of a grade-`k` vector; empty when the target grade does not exist.
    pub fn apply(&self, k: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.mats[k].mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedOperator) -> GradedOperator {
        assert_eq!(self.dims, other.dims);
        let degree = self.degree + other.degree;
        let field = self.mats[0].field();
        let mats = (0..self.dims.len())
            .map(|k| {
                let mid = k as i64 + other.degree as i64;
                if mid < 0 || mid as usize >= self.dims.len() || Self::target(&self.dims, k, degree) == 0 {
                    Matrix::zeros(field, Self::target(&self.dims, k, degree), self.dims[k])
                } else {
                    self.mats[mid as usize].mul(&other.mats[k])
                }
            })
            .collect();
        GradedOperator { degree, dims: self.dims.clone(), mats }
    }

    pub fn sub(&self, other: &GradedOperator) -> GradedOperator {
        assert_eq!((self.degree, &self.dims), (other.degree, &other.dims));
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.sub(b)).collect();
        GradedOperator { degree: self.degree, dims: self.dims.clone(), mats }
    }

    pub fn add(&self, other: &GradedOperator) -> GradedOperator {
        assert_eq!((self.degree, &self.dims), (other.degree, &other.dims));
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect();
        GradedOperator { degree: self.degree, dims: self.dims.clone(), mats }
    }

    pub fn scale(&self, c: &Scalar) -> GradedOperator {
        GradedOperator { degree: self.degree, dims: self.dims.clone(), mats: self.mats.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    pub fn inverse(&self) -> Option<GradedOperator> {
        if self.degree != 0 {
            return None;
        }
        let mats = self.mats.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(GradedOperator { degree: 0, dims: self.dims.clone(), mats })
    }

    /// First grade where `self ∘ self` is nonzero, if any.
    pub fn square_defect(&self) -> Option<usize> {
        let sq = self.compose(self);
        (0..self.dims.len()).find(|&k| !sq.mats[k].is_zero())
    }

    /// Grade-wise `dim ker − rank of the incoming map`, treating the operator as a differential.
    pub fn homology(&self) -> Vec<usize> {
        self.homology_with(&CancelToken::never()).expect("uncancellable")
    }

    pub fn homology_with(&self, cancel: &CancelToken) -> Result<Vec<usize>, Cancelled> {
        let ranks = self.mats.iter().map(|m| m.rank_with(cancel)).collect::<Result<Vec<_>, _>>()?;
        Ok((0..self.dims.len())
            .map(|k| {
                let incoming = k as i64 - self.degree as i64;
                let inc = if incoming < 0 || incoming as usize >= self.dims.len() { 0 } else { ranks[incoming as usize] };
                self.dims[k] - ranks[k] - inc
            })
            .collect())
    }
}
