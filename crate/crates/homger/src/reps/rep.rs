use crate::exterior::{members, GradedOperator};
use crate::linalg::{axpy, Matrix, Scalar};
use crate::report::{Checker, Report};
use crate::rinehart::{check_hlr_generator, check_module, Calculus, HLRModule, HomLieRinehart, Side};
use crate::{require, Error};

/// A representation `∇` of a hom-Lie–Rinehart algebra on a free module `E` of rank
/// `s` with twist `β`; on the algebraic model this is a left module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidRep {
    module: HLRModule,
}

impl AlgebroidRep {
    pub fn new(module: HLRModule) -> Result<Self, Error> {
        if module.side() != Side::Left {
            return Err(Error::Domain("a representation is a left action".into()));
        }
        Ok(AlgebroidRep { module })
    }

    /// `∇(e_i, m_j)` and `β(m_j)` on A-bases, expanded by conditions (1) and (2).
    pub fn from_a_basis(h: &HomLieRinehart, nabla: &[Vec<Vec<Scalar>>], beta: &[Vec<Scalar>]) -> Result<Self, Error> {
        Self::new(HLRModule::from_a_basis(h, Side::Left, nabla, beta)?)
    }

    /// `∇(x, f) = ρ(x)(f)` on `(A, φ)`.
    pub fn trivial(h: &HomLieRinehart) -> Self {
        AlgebroidRep { module: HLRModule::anchor(h) }
    }

    /// The line representation `∇(x, f·t) = ρ(x)(f)·β(t)` on `E = A·t` with `β(t) = c·t`.
    pub fn line(h: &HomLieRinehart, c: &Scalar) -> Self {
        let m = h.m();
        let beta = h.alg().scalar(c);
        let zero = vec![vec![h.field().zeros(m)]; h.rank()];
        Self::from_a_basis(h, &zero, &[beta]).expect("rank-one shapes")
    }

    pub fn module(&self) -> &HLRModule {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn beta(&self) -> &Matrix {
        self.module.beta()
    }

    /// `∇_x` as a field matrix on `E`.
    pub fn nabla(&self, x: &[Scalar]) -> Matrix {
        self.module.act(x)
    }
}

/// Conditions (1)–(3) of a representation on a hom-bundle, checked on field bases.
pub fn check_rep(h: &HomLieRinehart, rep: &AlgebroidRep) -> Report {
    let inner = check_module(h, &rep.module);
    let mut out = Report::new("algebroid_rep");
    for ch in inner.checks {
        let id = match ch.id.as_str() {
            "linear_in_l" => "function_linear".to_string(),
            "leibniz_in_m" => "leibniz".to_string(),
            "beta_semilinear" => "beta_semilinear".to_string(),
            "shape" => "shape".to_string(),
            other => format!("hom_rep.{}", other.trim_start_matches("rep.")),
        };
        out.checks.push(crate::report::Check { id, ..ch });
    }
    out
}

fn require_top(h: &HomLieRinehart, calc: &Calculus, rep: &AlgebroidRep) -> Result<(), Error> {
    let r = h.rank();
    if rep.rank() != 1 || rep.beta() != calc.alpha().mat(r) {
        return Err(Error::Domain("expected a representation on the top exterior power".into()));
    }
    require(check_rep(h, rep))
}

/// Exact generator `D` ↦ `∇(a, X) = [a, X] − D(a)·α̃(X)` on `(∧^r_A L, α̃)`.
pub fn corres3_fwd(h: &HomLieRinehart, d: &GradedOperator) -> Result<AlgebroidRep, Error> {
    let calc = Calculus::new(h)?;
    require(check_hlr_generator(h, d)?)?;
    let (m, r, n, f) = (h.m(), h.rank(), h.n(), h.field());
    let ext = calc.ext();
    let action = (0..n)
        .map(|u| {
            let a = f.unit_vec(n, u);
            let da = d.apply(1, &a);
            let cols: Vec<Vec<Scalar>> = (0..m)
                .map(|p| {
                    let x = ext.elem(ext.basis().top(), &h.alg().basis(p));
                    let mut v = calc.bracket().homogeneous(1, &a, r, &x);
                    axpy(&mut v, &-f.one(), &ext.scale(&da, r, &calc.alpha().apply(r, &x)));
                    v
                })
                .collect();
            Matrix::from_cols(f, m, &cols)
        })
        .collect();
    let rep = AlgebroidRep::new(HLRModule::from_field_data(Side::Left, 1, action, calc.alpha().mat(r).clone()))?;
    require(check_rep(h, &rep))?;
    Ok(rep)
}

/// Representation on `(∧^r_A L, α̃)` ↦ the generator with `D(a)·α̃(X) = [a, X] − ∇(a, X)`,
/// extended by `D(a∧Y) = −[a, Y] + D(a)·α̃(Y) − α̃(a)∧D(Y)`.
pub fn corres3_bwd(h: &HomLieRinehart, rep: &AlgebroidRep) -> Result<GradedOperator, Error> {
    let calc = Calculus::new(h)?;
    require_top(h, &calc, rep)?;
    let (m, r, n, f) = (h.m(), h.rank(), h.n(), h.field());
    let ext = calc.ext();
    let top = ext.basis().top();
    let alg = h.alg();
    let w = calc.alpha().apply(r, &ext.unit_elem(top));
    let w_inv = alg.inverse(&w).ok_or_else(|| Error::NotRegular("alpha on the top power".into()))?;
    let defect = |a: &[Scalar], x: &[Scalar]| -> Vec<Scalar> {
        let mut v = calc.bracket().homogeneous(1, a, r, x);
        axpy(&mut v, &-f.one(), &rep.nabla(a).mul_vec(x));
        v
    };
    let mut c = Checker::new();
    c.declare("divisible");
    let mut d1 = Vec::with_capacity(n);
    for u in 0..n {
        let a = f.unit_vec(n, u);
        let da = alg.mul(&defect(&a, &ext.unit_elem(top)), &w_inv);
        for p in 0..m {
            let x = ext.elem(top, &alg.basis(p));
            let rhs = ext.scale(&da, r, &calc.alpha().apply(r, &x));
            c.compare("divisible", &[u, p], &defect(&a, &x), &rhs);
        }
        d1.push(da);
    }
    require(c.finish("corres3"))?;
    let dims = ext.dims();
    let mut cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); r + 1];
    cols[0] = vec![Vec::new(); dims[0]];
    cols[1] = d1;
    for k in 2..=r {
        let mut grade = Vec::with_capacity(dims[k]);
        for i in 0..dims[k] {
            let (s, p) = ext.split(k, i);
            let first = members(s)[0];
            let a = h.e(first, &alg.basis(p));
            let rest_mask = s & !(1 << first);
            let y = ext.unit_elem(rest_mask);
            let da = cols[1][first * m + p].clone();
            let mut dy = ext.zero(k - 2);
            for (j, yc) in y.iter().enumerate() {
                if !yc.is_zero() {
                    axpy(&mut dy, yc, &cols[k - 1][j]);
                }
            }
            let mut v = calc.bracket().homogeneous(1, &a, k - 1, &y);
            v.iter_mut().for_each(|x| *x = -x.clone());
            axpy(&mut v, &f.one(), &ext.scale(&da, k - 1, &calc.alpha().apply(k - 1, &y)));
            axpy(&mut v, &-f.one(), &ext.wedge(1, &calc.alpha().apply(1, &a), k - 2, &dy));
            grade.push(v);
        }
        cols[k] = grade;
    }
    let op = GradedOperator::from_fn(f, &dims, -1, |k, i| cols[k][i].clone());
    require(check_hlr_generator(h, &op)?)?;
    Ok(op)
}

/// `∇ ⊗ ∇` on `E ⊗_A E` for a rank-one representation, on the basis `t ⊗ t`.
pub fn square_rep(h: &HomLieRinehart, rep: &AlgebroidRep) -> Result<AlgebroidRep, Error> {
    if rep.rank() != 1 {
        return Err(Error::Domain("squaring needs a rank-one representation".into()));
    }
    let (m, n, f) = (h.m(), h.n(), h.field());
    let alg = h.alg();
    let one = alg.unit().to_vec();
    let u = rep.beta().mul_vec(&one);
    let beta = alg.mul_matrix(&alg.mul(&u, &u)).mul(h.phi());
    let action = (0..n)
        .map(|x| {
            let nx = rep.nabla(&f.unit_vec(n, x));
            let on_t = nx.mul_vec(&one);
            let cols: Vec<Vec<Scalar>> = (0..m)
                .map(|p| {
                    let mut v = alg.mul(&nx.mul_vec(&alg.basis(p)), &u);
                    axpy(&mut v, &f.one(), &alg.mul(&rep.beta().col(p), &on_t));
                    v
                })
                .collect();
            Matrix::from_cols(f, m, &cols)
        })
        .collect();
    AlgebroidRep::new(HLRModule::from_field_data(Side::Left, 1, action, beta))
}

/// The square root of a representation on `E ⊗_A E` with `β(t) = u·t`:
/// `∇(x, f·t) = ρ(x)(f)·β(t) + ½·f_x·β(f·t)` where `∇̄(x, t⊗t) = f_x·β̄(t⊗t)`.
pub fn sqrt_rep(h: &HomLieRinehart, rbar: &AlgebroidRep, u: &[Scalar]) -> Result<AlgebroidRep, Error> {
    let (m, n, f) = (h.m(), h.n(), h.field());
    if f.characteristic() == 2 {
        return Err(Error::Domain("square roots need characteristic other than 2".into()));
    }
    if rbar.rank() != 1 {
        return Err(Error::Domain("expected a rank-one representation".into()));
    }
    let alg = h.alg();
    let u_inv = alg.inverse(u).ok_or_else(|| Error::Domain("beta(t) must be a unit multiple of t".into()))?;
    let one = alg.unit().to_vec();
    let u2 = alg.mul(u, u);
    if rbar.beta().mul_vec(&one) != u2 {
        return Err(Error::Domain("the twist on E⊗E must be the square of beta".into()));
    }
    require(check_rep(h, rbar))?;
    let half = f.int(2).inv().expect("odd characteristic");
    let u2_inv = alg.mul(&u_inv, &u_inv);
    let beta = alg.mul_matrix(u).mul(h.phi());
    let action = (0..n)
        .map(|x| {
            let fx = alg.mul(&rbar.nabla(&f.unit_vec(n, x)).mul_vec(&one), &u2_inv);
            let cols: Vec<Vec<Scalar>> = (0..m)
                .map(|p| {
                    let mut v = alg.mul(&h.anchor()[x].mul_vec(&alg.basis(p)), u);
                    let twisted = beta.col(p);
                    axpy(&mut v, &half, &alg.mul(&fx, &twisted));
                    v
                })
                .collect();
            Matrix::from_cols(f, m, &cols)
        })
        .collect();
    let rep = AlgebroidRep::new(HLRModule::from_field_data(Side::Left, 1, action, beta.clone()))?;
    require(check_rep(h, &rep))?;
    let mut c = Checker::new();
    c.declare("squaring_law");
    for x in 0..n {
        let (nx, nbar) = (rep.nabla(&f.unit_vec(n, x)), rbar.nabla(&f.unit_vec(n, x)));
        for p in 0..m {
            for q in 0..m {
                let (s1, s2) = (alg.basis(p), alg.basis(q));
                let mut lhs = alg.mul(&nx.mul_vec(&s1), &beta.col(q));
                axpy(&mut lhs, &f.one(), &alg.mul(&beta.col(p), &nx.mul_vec(&s2)));
                c.compare("squaring_law", &[x, p, q], &lhs, &nbar.mul_vec(&alg.mul(&s1, &s2)));
            }
        }
    }
    require(c.finish("sqrt_rep"))?;
    Ok(rep)
}
