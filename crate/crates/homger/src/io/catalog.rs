use super::Structure;
use crate::algebra::HomLieAlgebra;
use crate::catalog;
use crate::linalg::{Field, Matrix};
use crate::reps::{corres3_fwd, dgca1_fwd};
use crate::rinehart::{corres1_fwd, HLRModule, HomLieRinehart, Side};
use crate::sdhga::{cotangent_hlr, d_pi, dual_coboundary, HomPoisson};

/// Catalog files shipped with the crate, by name.
pub const CATALOG: &[(&str, &str)] = &[
    ("abelian2", include_str!("../../catalog/abelian2.json")),
    ("abelian3", include_str!("../../catalog/abelian3.json")),
    ("heisenberg", include_str!("../../catalog/heisenberg.json")),
    ("heisenberg_twisted", include_str!("../../catalog/heisenberg_twisted.json")),
    ("sl2", include_str!("../../catalog/sl2.json")),
    ("affine2_twisted", include_str!("../../catalog/affine2_twisted.json")),
    ("bialgebra_affine", include_str!("../../catalog/bialgebra_affine.json")),
    ("bialgebra_affine_twisted", include_str!("../../catalog/bialgebra_affine_twisted.json")),
    ("bialgebra_heisenberg", include_str!("../../catalog/bialgebra_heisenberg.json")),
    ("freeL", include_str!("../../catalog/freeL.json")),
    ("freeL_twisted", include_str!("../../catalog/freeL_twisted.json")),
    ("free_plane", include_str!("../../catalog/free_plane.json")),
    ("poisson_classical", include_str!("../../catalog/poisson_classical.json")),
    ("poisson_twisted", include_str!("../../catalog/poisson_twisted.json")),
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

pub fn catalog_text(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Module, generator, representation and differential sections derived from `h`.
fn with_sections(name: &str, h: HomLieRinehart, md: HLRModule) -> Structure {
    let generator = corres1_fwd(&h, &md).expect("catalog module");
    let rep = corres3_fwd(&h, &generator).expect("catalog generator");
    let form_d = dgca1_fwd(&h).expect("catalog structure").d;
    let mut s = Structure::new(name, h);
    s.module = Some(md);
    s.generator = Some(generator);
    s.rep = Some(rep);
    s.form_differential = Some(form_d);
    s
}

/// The right module on `(A, φ)` determined by `{1, e_i} = 0`.
fn unit_module(h: &HomLieRinehart) -> HLRModule {
    let zero = vec![vec![h.field().zeros(h.m())]; h.rank()];
    HLRModule::from_a_basis(h, Side::Right, &zero, &[h.alg().unit().to_vec()]).expect("rank-one shapes")
}

fn hom_lie(name: &str, g: &HomLieAlgebra) -> Structure {
    rinehart(name, HomLieRinehart::from_hom_lie(g))
}

fn rinehart(name: &str, h: HomLieRinehart) -> Structure {
    let md = unit_module(&h);
    with_sections(name, h, md)
}

fn bialgebra(name: &str, g: &HomLieAlgebra, dual_bracket: (usize, usize, usize)) -> Structure {
    let f = g.field();
    let n = g.dim();
    let (i, j, k) = dual_bracket;
    let twist = g.alpha_inv().expect("regular").transpose();
    let gs = HomLieAlgebra::from_upper(f, n, &[(i, j, f.unit_vec(n, k))], twist).expect("catalog dual");
    let mut s = hom_lie(name, g);
    s.multivector_differential = Some(dual_coboundary(&gs).expect("regular dual"));
    s.dual = Some(HomLieRinehart::from_hom_lie(&gs));
    s
}

fn poisson(name: &str, h: HomLieRinehart) -> Structure {
    let pi = crate::exterior::Exterior::new(h.alg().clone(), h.rank()).unit_elem(0b11);
    let p = HomPoisson::new(h.clone(), pi.clone()).expect("rank two");
    let d = d_pi(&p).expect("catalog bivector").d().clone();
    let cot = cotangent_hlr(&p).expect("catalog bivector");
    let mut s = rinehart(name, h);
    s.bivector = Some(pi);
    s.multivector_differential = Some(d);
    s.dual = Some(cot);
    s
}

/// The value each catalog file must encode, rebuilt from the library constructors.
pub fn catalog_structure(name: &str) -> Option<Structure> {
    let f = Field::Rational;
    let affine = || HomLieAlgebra::from_upper(f, 2, &[(0, 1, f.unit_vec(2, 1))], Matrix::identity(f, 2)).expect("affine");
    Some(match name {
        "abelian2" => hom_lie(name, &catalog::abelian(f, 2)),
        "abelian3" => hom_lie(name, &catalog::abelian(f, 3)),
        "heisenberg" => hom_lie(name, &catalog::heisenberg(f)),
        "heisenberg_twisted" => hom_lie(name, &catalog::heisenberg_twisted(f)),
        "sl2" => hom_lie(name, &catalog::sl2(f)),
        "affine2_twisted" => hom_lie(name, &catalog::affine2_twisted(f, 1)),
        "bialgebra_affine" => bialgebra(name, &affine(), (0, 1, 1)),
        "bialgebra_affine_twisted" => bialgebra(name, &catalog::affine2_twisted(f, 1), (0, 1, 0)),
        "bialgebra_heisenberg" => bialgebra(name, &catalog::heisenberg(f), (0, 2, 0)),
        "freeL" => rinehart(name, catalog::free_line(f, 2, 1)),
        "freeL_twisted" => rinehart(name, catalog::free_line(f, 3, 2)),
        "free_plane" => rinehart(name, catalog::free_plane(f, 2, 1, 2)),
        "poisson_classical" => poisson(name, catalog::poisson_surrogate(f, 1, 1)),
        "poisson_twisted" => poisson(name, catalog::poisson_surrogate(f, 2, 3)),
        _ => return None,
    })
}
