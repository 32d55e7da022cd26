//! Classical cohomology and Poisson homology computed from first principles on the
//! finite models, compared with the library at α = φ = id.

mod common;

use common::classical::{classical_lr_cohomology, FormModel};
use homger::catalog;
use homger::linalg::{Field, Scalar};
use homger::rinehart::{hlr_cohomology, HLRModule, HomLieRinehart};
use homger::sdhga::{hom_poisson_homology, HomPoisson};

fn q() -> Field {
    Field::Rational
}

#[test]
fn lie_rinehart_cohomology_matches_classical_model() {
    let f = q();
    let fixtures: Vec<(&str, HomLieRinehart)> = vec![
        ("free_line", catalog::free_line(f, 2, 1)),
        ("free_plane", catalog::free_plane(f, 2, 1, 1)),
        ("sl2", HomLieRinehart::from_hom_lie(&catalog::sl2(f))),
        ("heisenberg", HomLieRinehart::from_hom_lie(&catalog::heisenberg(f))),
        ("poisson_classical", catalog::poisson_surrogate(f, 1, 1)),
    ];
    for (name, h) in fixtures {
        let oracle = classical_lr_cohomology(&h);
        let lib = hlr_cohomology(&h, &HLRModule::anchor(&h)).unwrap();
        assert_eq!(lib, oracle, "{name}");
    }
}

#[test]
fn classical_model_known_values() {
    let f = q();
    assert_eq!(classical_lr_cohomology(&HomLieRinehart::from_hom_lie(&catalog::sl2(f))), vec![1, 0, 0, 1]);
    assert_eq!(classical_lr_cohomology(&HomLieRinehart::from_hom_lie(&catalog::heisenberg(f))), vec![1, 2, 2, 1]);
}

#[test]
fn poisson_homology_matches_koszul_brylinski() {
    let f = q();
    let h = catalog::poisson_surrogate(f, 1, 1);
    let m = h.m();
    let model = FormModel::new(&h);
    let ints = |v: &[i64]| -> Vec<Scalar> { v.iter().map(|&x| f.int(x)).collect() };
    for coeff in [vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![2, -1, 3, 0], vec![0, 1, 1, 5], vec![0; 4]] {
        let a = ints(&coeff);
        let oracle = model.koszul_brylinski(&[(0, 1, a.clone())]);
        let mut pi = f.zeros(m);
        pi.clone_from_slice(&a);
        let lib = hom_poisson_homology(&HomPoisson::new(h.clone(), pi).unwrap()).unwrap();
        assert_eq!(lib, oracle, "π = {coeff:?}·e1∧e2");
    }
}
