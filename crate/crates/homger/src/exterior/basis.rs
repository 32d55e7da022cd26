use crate::algebra::CommAlgebra;
use crate::linalg::{axpy, Field, Scalar};

/// Subsets of `{0..r-1}` as bitmasks, listed per grade in increasing numeric order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtBasis {
    r: usize,
    grades: Vec<Vec<u32>>,
    pos: Vec<usize>,
}

impl ExtBasis {
    pub fn new(r: usize) -> Self {
        assert!(r < 20, "rank too large for a dense exterior algebra");
        let mut grades = vec![Vec::new(); r + 1];
        let mut pos = vec![0; 1 << r];
        for mask in 0u32..(1 << r) {
            let k = mask.count_ones() as usize;
            pos[mask as usize] = grades[k].len();
            grades[k].push(mask);
        }
        ExtBasis { r, grades, pos }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn count(&self, k: usize) -> usize {
        self.grades.get(k).map_or(0, Vec::len)
    }

    pub fn masks(&self, k: usize) -> &[u32] {
        &self.grades[k]
    }

    pub fn pos(&self, mask: u32) -> usize {
        self.pos[mask as usize]
    }

    pub fn top(&self) -> u32 {
        ((1u64 << self.r) - 1) as u32
    }
}

/// Sign of `e_S ∧ e_T = ±e_{S∪T}`; `None` when the sets meet.
pub fn merge_sign(s: u32, t: u32) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    // count pairs (a ∈ S, b ∈ T) with a > b
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (s >> (b + 1)).count_ones();
    }
    Some(inversions % 2 == 1)
}

/// Elements of `S` in increasing order.
pub fn members(s: u32) -> Vec<usize> {
    (0..32).filter(|i| s >> i & 1 == 1).collect()
}

/// `∧•_A V` for `V` free of rank `r` over `A`; the field basis element `b_p e_S`
/// of grade `|S|` sits at `pos(S)·m + p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exterior {
    alg: CommAlgebra,
    basis: ExtBasis,
}

impl Exterior {
    pub fn new(alg: CommAlgebra, r: usize) -> Self {
        Exterior { alg, basis: ExtBasis::new(r) }
    }

    pub fn over_field(field: Field, r: usize) -> Self {
        Self::new(CommAlgebra::ground(field), r)
    }

    pub fn alg(&self) -> &CommAlgebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn m(&self) -> usize {
        self.alg.dim()
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &ExtBasis {
        &self.basis
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis.count(k) * self.m()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.rank()).map(|k| self.dim(k)).collect()
    }

    pub fn idx(&self, mask: u32, p: usize) -> usize {
        self.basis.pos(mask) * self.m() + p
    }

    /// Mask and algebra index of the field basis element at `i` in grade `k`.
    pub fn split(&self, k: usize, i: usize) -> (u32, usize) {
        (self.basis.masks(k)[i / self.m()], i % self.m())
    }

    pub fn zero(&self, k: usize) -> Vec<Scalar> {
        self.field().zeros(self.dim(k))
    }

    /// `a·e_S` for an algebra element `a`.
    pub fn elem(&self, mask: u32, a: &[Scalar]) -> Vec<Scalar> {
        let k = mask.count_ones() as usize;
        let mut v = self.zero(k);
        let base = self.basis.pos(mask) * self.m();
        v[base..base + self.m()].clone_from_slice(a);
        v
    }

    pub fn unit_elem(&self, mask: u32) -> Vec<Scalar> {
        self.elem(mask, self.alg.unit())
    }

    /// Algebra coefficient of `e_S` in the homogeneous element `x`.
    pub fn coeff<'a>(&self, x: &'a [Scalar], mask: u32) -> &'a [Scalar] {
        let base = self.basis.pos(mask) * self.m();
        &x[base..base + self.m()]
    }

    pub fn scale(&self, a: &[Scalar], k: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero(k);
        for &s in self.basis.masks(k) {
            let c = self.coeff(x, s);
            if c.iter().all(Scalar::is_zero) {
                continue;
            }
            let base = self.basis.pos(s) * self.m();
            out[base..base + self.m()].clone_from_slice(&self.alg.mul(a, c));
        }
        out
    }

    /// Wedge of homogeneous elements of grades `k` and `l`.
    pub fn wedge(&self, k: usize, x: &[Scalar], l: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero(k + l);
        if k + l > self.rank() {
            return out;
        }
        let one = self.field().one();
        for &s in self.basis.masks(k) {
            let a = self.coeff(x, s);
            if a.iter().all(Scalar::is_zero) {
                continue;
            }
            for &t in self.basis.masks(l) {
                let Some(neg) = merge_sign(s, t) else { continue };
                let b = self.coeff(y, t);
                if b.iter().all(Scalar::is_zero) {
                    continue;
                }
                let prod = self.alg.mul(a, b);
                let base = self.basis.pos(s | t) * self.m();
                let sign = if neg { -&one } else { one.clone() };
                axpy(&mut out[base..base + self.m()], &sign, &prod);
            }
        }
        out
    }

    /// Wedge of several homogeneous grade-1 elements, left to right.
    pub fn wedge_all(&self, factors: &[&[Scalar]]) -> Vec<Scalar> {
        let mut acc = self.alg.unit().to_vec();
        for (k, f) in factors.iter().enumerate() {
            acc = self.wedge(k, &acc, 1, f);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_are_sorted_per_grade() {
        let b = ExtBasis::new(3);
        assert_eq!(b.masks(1), &[1, 2, 4]);
        assert_eq!(b.masks(2), &[3, 5, 6]);
        assert_eq!(b.pos(6), 2);
    }

    #[test]
    fn merge_signs() {
        assert_eq!(merge_sign(0b001, 0b010), Some(false));
        assert_eq!(merge_sign(0b010, 0b001), Some(true));
        assert_eq!(merge_sign(0b011, 0b001), None);
        // e2 ∧ e13: e2 passes e1 once
        assert_eq!(merge_sign(0b010, 0b101), Some(true));
    }

    #[test]
    fn basic_wedges() {
        let f = Field::Rational;
        let e = Exterior::over_field(f, 2);
        let e1 = e.unit_elem(1);
        let e2 = e.unit_elem(2);
        assert_eq!(e.wedge(1, &e1, 1, &e2), vec![f.one()]);
        assert_eq!(e.wedge(1, &e2, 1, &e1), vec![-f.one()]);
        let e12 = e.unit_elem(3);
        assert_eq!(e.wedge(2, &e12, 1, &e1), e.zero(3));
    }

    #[test]
    fn coefficients_multiply_in_the_algebra() {
        let f = Field::Rational;
        let a = CommAlgebra::truncated(f, 2);
        let e = Exterior::new(a.clone(), 2);
        let t = a.basis(1);
        let x = e.elem(1, &t);
        let y = e.elem(2, &t);
        assert_eq!(e.wedge(1, &x, 1, &y), e.zero(2));
        let z = e.wedge(1, &x, 1, &e.unit_elem(2));
        assert_eq!(z, e.elem(3, &t));
    }
}
