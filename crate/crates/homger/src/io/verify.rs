use crate::algebra::check_hom_lie;
use crate::exterior::check_hom_gerstenhaber;
use crate::report::Report;
use crate::reps::{check_dgca, check_rep, Dgca};
use crate::rinehart::{check_hlr, check_hlr_generator, check_module, Calculus, ExtendedBracket};
use crate::sdhga::{check_bialgebra, check_hom_poisson, check_sdhga, sdhga_bialgebroid_bwd, HomPoisson, PurelyHomLieBialgebra, Sdhga};
use crate::Error;

use super::Structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Lie,
    Gerstenhaber,
    Rinehart,
    Sdhga,
    Bialgebra,
}

/// Runs the checks of one level, or of every level that applies to the sections present.
/// `Err` means the structure could not be examined at all; failed axioms are in the report.
pub fn verify(s: &Structure, level: Option<Level>) -> Result<Report, Error> {
    let h = &s.hlr;
    let mut report = Report::new(format!("verify {}", s.name));
    let all = level.is_none();
    let wants = |l: Level| all || level == Some(l);
    if wants(Level::Lie) {
        report.absorb("lie", check_hom_lie(h.lie()));
    }
    if wants(Level::Gerstenhaber) {
        let br = ExtendedBracket::new(h);
        report.absorb("gerstenhaber", check_hom_gerstenhaber(br.ext(), br.alpha(), &|k, x, l, y| br.homogeneous(k, x, l, y)));
        if let Some(d) = &s.generator {
            report.absorb("generator", check_hlr_generator(h, d)?);
        }
    }
    if wants(Level::Rinehart) {
        report.absorb("rinehart", check_hlr(h));
        if let Some(md) = &s.module {
            report.absorb("module", check_module(h, md));
        }
        if let Some(rep) = &s.rep {
            report.absorb("rep", check_rep(h, rep));
        }
        if let Some(pi) = &s.bivector {
            report.absorb("hom_poisson", check_hom_poisson(&HomPoisson::new(h.clone(), pi.clone())?));
        }
        if let Some(dual) = &s.dual {
            report.absorb("dual", check_hlr(dual));
        }
    }
    if wants(Level::Sdhga) {
        let mut ran = false;
        if let Some(d) = &s.multivector_differential {
            report.absorb("sdhga", check_sdhga(&Sdhga::rinehart(h, d.clone())));
            ran = true;
        }
        if let Some(d) = &s.form_differential {
            let calc = Calculus::new(h)?;
            let g = Dgca { ext: calc.ext().clone(), twist: calc.phi_hat().clone(), d: d.clone() };
            report.absorb("dgca", check_dgca(&g));
            ran = true;
        }
        if !ran && !all {
            return Err(Error::Domain("level sdhga needs a multivector_differential or form_differential section".into()));
        }
    }
    if wants(Level::Bialgebra) {
        match &s.dual {
            Some(dual) => {
                if h.m() == 1 {
                    let b = PurelyHomLieBialgebra::new(h.lie().clone(), dual.lie().clone())?;
                    report.absorb("bialgebra", check_bialgebra(&b)?);
                }
                match sdhga_bialgebroid_bwd(h, dual) {
                    Ok(_) => report.push_check("bialgebroid.pair", true),
                    Err(Error::Invalid(inner)) => report.absorb("bialgebroid", *inner),
                    Err(e) => return Err(e),
                }
            }
            None if !all => return Err(Error::Domain("level bialgebra needs a dual section".into())),
            None => {}
        }
    }
    Ok(report)
}
