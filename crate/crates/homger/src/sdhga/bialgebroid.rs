use super::{check_sdhga, Sdhga};
use crate::linalg::axpy;
use crate::report::{Checker, Report};
use crate::reps::{dgca1_bwd, Dgca};
use crate::rinehart::{Calculus, ExtendedBracket, HomLieRinehart};
use crate::{require, Error};

/// `d[x,y] = [dx, α(y)] + [α(x), dy]` for `x, y` in a field basis of `L`.
fn dercond(s: &Sdhga) -> Report {
    let ext = s.ext();
    let f = ext.field();
    let n = ext.dim(1);
    let mut c = Checker::new();
    c.declare("dercond");
    for i in 0..n {
        let x = f.unit_vec(n, i);
        for j in 0..n {
            let y = f.unit_vec(n, j);
            let lhs = s.d().apply(1, &s.bracket(1, &x, 1, &y));
            let mut rhs = s.bracket(2, &s.d().apply(1, &x), 1, &s.alpha().apply(1, &y));
            axpy(&mut rhs, &f.one(), &s.bracket(1, &s.alpha().apply(1, &x), 2, &s.d().apply(1, &y)));
            c.compare("dercond", &[i, j], &lhs, &rhs);
        }
    }
    c.finish("bialgebroid")
}

/// The hom-Lie–Rinehart structure on `L*` read off from `(∧•_A L, α̃, d)` viewed as
/// forms on `L*`.
pub fn sdhga_bialgebroid_fwd(s: &Sdhga) -> Result<HomLieRinehart, Error> {
    let h = s.hlr().ok_or_else(|| Error::Domain("carrier is not the exterior algebra of a hom-Lie–Rinehart algebra".into()))?;
    if ExtendedBracket::new(h).alpha() != s.alpha() {
        return Err(Error::Domain("twist does not restrict to (φ, α) in degrees 0 and 1".into()));
    }
    require(dercond(s))?;
    let dgca = Dgca { ext: s.ext().clone(), twist: s.alpha().clone(), d: s.d().clone() };
    dgca1_bwd(&dgca)
}

/// The strong differential hom-Gerstenhaber algebra `(∧•_A L, d_*)` for a pair in duality.
pub fn sdhga_bialgebroid_bwd(h: &HomLieRinehart, h_dual: &HomLieRinehart) -> Result<Sdhga, Error> {
    let calc = Calculus::new(h_dual)?;
    let br = ExtendedBracket::new(h);
    let mut c = Checker::new();
    c.declare("duality");
    let same_base = h.alg() == h_dual.alg() && h.rank() == h_dual.rank() && h.phi() == h_dual.phi();
    c.assert("duality", same_base && calc.phi_hat() == br.alpha(), &[]);
    require(c.finish("bialgebroid"))?;
    let s = Sdhga::rinehart(h, calc.d_a().clone());
    let mut report = dercond(&s);
    report.absorb("sdhga", check_sdhga(&s));
    require(report)?;
    Ok(s)
}
