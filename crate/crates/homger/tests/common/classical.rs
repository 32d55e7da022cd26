//! Independent finite models: field-level cochains of `L` with values in `A`, and
//! forms on an A-basis with the classical Koszul-Brylinski boundary.

use homger::linalg::{Matrix, Scalar};
use homger::rinehart::HomLieRinehart;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeat.
fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut neg = false;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                neg = !neg;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(neg)
}

fn add_into(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a = &*a + &(c * b);
    }
}

fn mul(alg_table: &[Vec<Vec<Scalar>>], a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let m = a.len();
    let mut out = vec![a[0].field().zero(); m];
    for i in 0..m {
        for j in 0..m {
            let c = &a[i] * &b[j];
            if !c.is_zero() {
                add_into(&mut out, &c, &alg_table[i][j]);
            }
        }
    }
    out
}

/// Alternating field-multilinear cochains `L^k → A`, stored by sorted index set.
struct FieldCochains<'a> {
    h: &'a HomLieRinehart,
    sets: Vec<Vec<Vec<usize>>>,
}

impl<'a> FieldCochains<'a> {
    fn new(h: &'a HomLieRinehart, top: usize) -> Self {
        let sets = (0..=top).map(|k| subsets(h.n(), k)).collect();
        FieldCochains { h, sets }
    }

    fn dim(&self, k: usize) -> usize {
        self.sets[k].len() * self.h.m()
    }

    fn position(&self, k: usize, sorted: &[usize]) -> usize {
        self.sets[k].binary_search_by(|s| s.as_slice().cmp(sorted)).unwrap()
    }

    /// `c(v_{idx_0}, …)` for basis vectors.
    fn eval_basis(&self, k: usize, c: &[Scalar], idx: &[usize]) -> Vec<Scalar> {
        let m = self.h.m();
        let f = self.h.field();
        let mut sorted = idx.to_vec();
        let Some(neg) = sort_sign(&mut sorted) else { return f.zeros(m) };
        let p = self.position(k, &sorted);
        let v = &c[p * m..(p + 1) * m];
        if neg {
            v.iter().map(|x| -x).collect()
        } else {
            v.to_vec()
        }
    }

    /// `c(w, v_{rest…})` for an arbitrary first argument `w`.
    fn eval_first(&self, k: usize, c: &[Scalar], w: &[Scalar], rest: &[usize]) -> Vec<Scalar> {
        let f = self.h.field();
        let mut out = f.zeros(self.h.m());
        for (u, wu) in w.iter().enumerate() {
            if wu.is_zero() {
                continue;
            }
            let mut idx = vec![u];
            idx.extend_from_slice(rest);
            add_into(&mut out, wu, &self.eval_basis(k, c, &idx));
        }
        out
    }

    /// Chevalley–Eilenberg differential with coefficients in `A` through `ρ`.
    fn differential(&self, k: usize) -> Matrix {
        let h = self.h;
        let (m, n, f) = (h.m(), h.n(), h.field());
        let unit = |u: usize| f.unit_vec(n, u);
        let cols: Vec<Vec<Scalar>> = (0..self.dim(k))
            .map(|col| {
                let c = f.unit_vec(self.dim(k), col);
                let mut out = f.zeros(self.dim(k + 1));
                for (p, set) in self.sets[k + 1].iter().enumerate() {
                    let mut val = f.zeros(m);
                    for i in 0..=k {
                        let rest: Vec<usize> = set.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &u)| u).collect();
                        let sign = if i % 2 == 0 { f.one() } else { -f.one() };
                        let inner = self.eval_basis(k, &c, &rest);
                        add_into(&mut val, &sign, &h.anchor()[set[i]].mul_vec(&inner));
                        for j in i + 1..=k {
                            let rest: Vec<usize> = set.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &u)| u).collect();
                            let br = h.lie().bracket(&unit(set[i]), &unit(set[j]));
                            let sign = if (i + j) % 2 == 0 { f.one() } else { -f.one() };
                            add_into(&mut val, &sign, &self.eval_first(k, &c, &br, &rest));
                        }
                    }
                    out[p * m..(p + 1) * m].clone_from_slice(&val);
                }
                out
            })
            .collect();
        Matrix::from_cols(f, self.dim(k + 1), &cols)
    }

    /// Basis (as columns) of the cochains with `c(a·v, …) = a·c(v, …)`.
    fn a_linear(&self, k: usize) -> Matrix {
        let h = self.h;
        let (m, n, f) = (h.m(), h.n(), h.field());
        if k == 0 {
            return Matrix::identity(f, self.dim(0));
        }
        let table = h.alg().table();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let basis: Vec<Vec<Scalar>> = (0..self.dim(k)).map(|i| f.unit_vec(self.dim(k), i)).collect();
        for a in 0..m {
            let av = h.alg().basis(a);
            for u in 0..n {
                let scaled = h.scale_l(&av, &f.unit_vec(n, u));
                for rest in subsets(n, k - 1) {
                    let vals: Vec<Vec<Scalar>> = basis
                        .iter()
                        .map(|c| {
                            let mut lhs = self.eval_first(k, c, &scaled, &rest);
                            let mut idx = vec![u];
                            idx.extend_from_slice(&rest);
                            let rhs = mul(table, &av, &self.eval_basis(k, c, &idx));
                            add_into(&mut lhs, &-f.one(), &rhs);
                            lhs
                        })
                        .collect();
                    for comp in 0..m {
                        let row: Vec<Scalar> = vals.iter().map(|v| v[comp].clone()).collect();
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        if rows.is_empty() {
            return Matrix::identity(f, self.dim(k));
        }
        let kernel = Matrix::from_rows(f, rows).unwrap().kernel_basis();
        Matrix::from_cols(f, self.dim(k), &kernel)
    }
}

/// Lie–Rinehart cohomology with values in `A`, from A-multilinear field cochains.
pub fn classical_lr_cohomology(h: &HomLieRinehart) -> Vec<usize> {
    let r = h.rank();
    let top = (r + 1).min(h.n());
    let model = FieldCochains::new(h, top);
    let sub: Vec<Matrix> = (0..=r).map(|k| model.a_linear(k)).collect();
    let ranks: Vec<usize> = (0..=r)
        .map(|k| if k + 1 > top || sub[k].cols() == 0 { 0 } else { model.differential(k).mul(&sub[k]).rank() })
        .collect();
    (0..=r).map(|k| sub[k].cols() - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }).collect()
}

/// Forms `Ω^k = Hom_A(∧^k L, A)` on an A-basis `e_1..e_r`, stored as `ω(e_S) ∈ A`.
pub struct FormModel<'a> {
    h: &'a HomLieRinehart,
    sets: Vec<Vec<Vec<usize>>>,
}

impl<'a> FormModel<'a> {
    pub fn new(h: &'a HomLieRinehart) -> Self {
        FormModel { h, sets: (0..=h.rank()).map(|k| subsets(h.rank(), k)).collect() }
    }

    fn dim(&self, k: usize) -> usize {
        self.sets[k].len() * self.h.m()
    }

    fn value(&self, k: usize, w: &[Scalar], idx: &[usize]) -> Vec<Scalar> {
        let m = self.h.m();
        let mut sorted = idx.to_vec();
        let Some(neg) = sort_sign(&mut sorted) else { return self.h.field().zeros(m) };
        let p = self.sets[k].iter().position(|s| *s == sorted).unwrap();
        let v = &w[p * m..(p + 1) * m];
        if neg {
            v.iter().map(|x| -x).collect()
        } else {
            v.to_vec()
        }
    }

    fn d(&self, k: usize) -> Matrix {
        let h = self.h;
        let (m, f) = (h.m(), h.field());
        let table = h.alg().table();
        if k + 1 > h.rank() {
            return Matrix::zeros(f, 0, self.dim(k));
        }
        let cols: Vec<Vec<Scalar>> = (0..self.dim(k))
            .map(|col| {
                let w = f.unit_vec(self.dim(k), col);
                let mut out = f.zeros(self.dim(k + 1));
                for (p, set) in self.sets[k + 1].iter().enumerate() {
                    let mut val = f.zeros(m);
                    for i in 0..=k {
                        let rest: Vec<usize> = set.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &u)| u).collect();
                        let sign = if i % 2 == 0 { f.one() } else { -f.one() };
                        add_into(&mut val, &sign, &h.rho_e(set[i]).mul_vec(&self.value(k, &w, &rest)));
                        for j in i + 1..=k {
                            let rest: Vec<usize> = set.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &u)| u).collect();
                            let br = h.bracket_e(set[i], set[j]);
                            let sign = if (i + j) % 2 == 0 { f.one() } else { -f.one() };
                            for l in 0..h.rank() {
                                let coeff = &br[l * m..(l + 1) * m];
                                let mut idx = vec![l];
                                idx.extend_from_slice(&rest);
                                add_into(&mut val, &sign, &mul(table, coeff, &self.value(k, &w, &idx)));
                            }
                        }
                    }
                    out[p * m..(p + 1) * m].clone_from_slice(&val);
                }
                out
            })
            .collect();
        Matrix::from_cols(f, self.dim(k + 1), &cols)
    }

    /// `(i_π ω)(e_S) = Σ_{a<b} π^{ab} ω(e_a, e_b, e_S)`.
    fn i_pi(&self, k: usize, pi: &[(usize, usize, Vec<Scalar>)]) -> Matrix {
        let h = self.h;
        let (m, f) = (h.m(), h.field());
        let table = h.alg().table();
        if k < 2 {
            return Matrix::zeros(f, 0, self.dim(k));
        }
        let cols: Vec<Vec<Scalar>> = (0..self.dim(k))
            .map(|col| {
                let w = f.unit_vec(self.dim(k), col);
                let mut out = f.zeros(self.dim(k - 2));
                for (p, set) in self.sets[k - 2].iter().enumerate() {
                    let mut val = f.zeros(m);
                    for (a, b, coeff) in pi {
                        let mut idx = vec![*a, *b];
                        idx.extend_from_slice(set);
                        add_into(&mut val, &f.one(), &mul(table, coeff, &self.value(k, &w, &idx)));
                    }
                    out[p * m..(p + 1) * m].clone_from_slice(&val);
                }
                out
            })
            .collect();
        Matrix::from_cols(f, self.dim(k - 2), &cols)
    }

    /// Betti numbers of `i_π d − d i_π`.
    pub fn koszul_brylinski(&self, pi: &[(usize, usize, Vec<Scalar>)]) -> Vec<usize> {
        let r = self.h.rank();
        let f = self.h.field();
        let boundary: Vec<Matrix> = (0..=r)
            .map(|k| {
                if k == 0 {
                    return Matrix::zeros(f, 0, self.dim(0));
                }
                let target = self.dim(k - 1);
                let first = if k + 1 <= r { self.i_pi(k + 1, pi).mul(&self.d(k)) } else { Matrix::zeros(f, target, self.dim(k)) };
                let second = if k >= 2 { self.d(k - 2).mul(&self.i_pi(k, pi)) } else { Matrix::zeros(f, target, self.dim(k)) };
                first.sub(&second)
            })
            .collect();
        for k in 2..=r {
            assert!(boundary[k - 1].mul(&boundary[k]).is_zero(), "classical boundary squares to zero");
        }
        let ranks: Vec<usize> = boundary.iter().map(Matrix::rank).collect();
        (0..=r).map(|k| self.dim(k) - ranks[k] - if k < r { ranks[k + 1] } else { 0 }).collect()
    }
}
