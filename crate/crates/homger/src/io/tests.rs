use proptest::prelude::*;

use super::*;
use crate::algebra::CommAlgebra;
use crate::catalog as builders;

fn heisenberg_text() -> &'static str {
    catalog_text("heisenberg").unwrap()
}

fn edited(f: impl FnOnce(&mut serde_json::Value)) -> Vec<u8> {
    let mut v: serde_json::Value = serde_json::from_str(heisenberg_text()).unwrap();
    f(&mut v);
    serde_json::to_vec(&v).unwrap()
}

fn fails_at(bytes: &[u8], path: &str) -> InputError {
    let e = parse(bytes).unwrap_err();
    assert_eq!(e.path, path, "{e}");
    e
}

#[test]
fn catalog_files_match_builders() {
    let bless = std::env::var_os("HOMGER_BLESS").is_some();
    for name in catalog_names() {
        let s = catalog_structure(name).unwrap();
        let text = to_json(&s.to_file());
        if bless {
            let path = format!("{}/catalog/{name}.json", env!("CARGO_MANIFEST_DIR"));
            std::fs::write(path, &text).unwrap();
            continue;
        }
        assert_eq!(catalog_text(name).unwrap(), text, "{name}");
        assert_eq!(load(text.as_bytes()).unwrap(), s, "{name}");
    }
}

#[test]
fn heisenberg_file() {
    let s = load(heisenberg_text().as_bytes()).unwrap();
    assert_eq!(s.hlr.rank(), 3);
    assert_eq!(s.hlr.m(), 1);
    assert_eq!(s.hlr, crate::rinehart::HomLieRinehart::from_hom_lie(&builders::heisenberg(Field::Rational)));
}

#[test]
fn zero_denominator_is_reported_with_its_path() {
    let bytes = edited(|v| v["alpha"][0][1] = "1/0".into());
    let e = fails_at(&bytes, "alpha[0][1]");
    assert!(e.message.contains("1/0"));
}

#[test]
fn bracket_keys_must_be_increasing() {
    let bytes = edited(|v| {
        let val = v["bracket"]["1,2"].take();
        v["bracket"].as_object_mut().unwrap().remove("1,2");
        v["bracket"]["2,1"] = val;
    });
    let e = fails_at(&bytes, "bracket.2,1");
    assert!(e.message.contains("i < j"));
    let same = edited(|v| v["bracket"]["2,2"] = v["bracket"]["1,2"].clone());
    fails_at(&same, "bracket.2,2");
}

#[test]
fn indices_out_of_range() {
    let bytes = edited(|v| v["bracket"]["1,4"] = v["bracket"]["1,2"].clone());
    assert!(fails_at(&bytes, "bracket.1,4").message.contains("out of range"));
    let zero = edited(|v| v["bracket"]["0,2"] = v["bracket"]["1,2"].clone());
    fails_at(&zero, "bracket.0,2");
}

#[test]
fn field_must_be_prime() {
    let bytes = edited(|v| v["field"] = "Fp:6".into());
    assert!(fails_at(&bytes, "field").message.contains("prime"));
    let bytes = edited(|v| v["field"] = "R".into());
    fails_at(&bytes, "field");
    let ok = edited(|v| v["field"] = "Fp:7".into());
    assert_eq!(load(&ok).unwrap().field(), Field::Prime(7));
}

#[test]
fn denominators_vanishing_mod_p_are_rejected() {
    let bytes = edited(|v| {
        v["field"] = "Fp:3".into();
        v["alpha"][1][1] = "2/3".into();
    });
    fails_at(&bytes, "alpha[1][1]");
}

#[test]
fn malformed_and_mistyped_inputs() {
    let e = parse(b"{\"field\": ").unwrap_err();
    assert_eq!(e.path, "field");
    assert!(e.message.contains("EOF"), "{e}");
    assert_eq!(parse(b"not json").unwrap_err().path, "(root)");
    let bytes = edited(|v| v["module_rank"] = "three".into());
    fails_at(&bytes, "module_rank");
    let bytes = edited(|v| v["extra"] = 1.into());
    assert!(parse(&bytes).unwrap_err().message.contains("extra"));
    let bytes = edited(|v| v["phi"] = serde_json::json!([["1", "0"]]));
    fails_at(&bytes, "phi[0]");
    let bytes = edited(|v| v["generator"]["degree"] = 1.into());
    fails_at(&bytes, "generator.degree");
    let bytes = edited(|v| v["rep"]["side"] = "right".into());
    fails_at(&bytes, "rep.side");
    assert!(parse(&[0xff, 0xfe]).is_err());
}

#[test]
fn missing_sections_are_zero_maps() {
    let bytes = edited(|v| {
        let o = v.as_object_mut().unwrap();
        for key in ["alpha", "anchor", "bracket", "module", "rep", "generator", "form_differential"] {
            o.remove(key);
        }
    });
    let s = load(&bytes).unwrap();
    assert!(s.hlr.lie().alpha().is_zero());
    assert!(s.hlr.lie().table().iter().flatten().flatten().all(Scalar::is_zero));
    assert!(s.module.is_none() && s.generator.is_none());
}

#[test]
fn module_sections_round_trip() {
    let s = catalog_structure("freeL").unwrap();
    let md = s.module.clone().unwrap();
    assert_eq!(parse_module(module_to_json(&md).as_bytes(), &s.hlr).unwrap(), md);
    let e = parse_module(b"{\"side\": \"left\", \"rank\": 1, \"action\": [], \"beta\": []}", &s.hlr).unwrap_err();
    assert_eq!(e.path, "action");
}

#[test]
fn prime_field_catalog_entry_round_trips() {
    let f = Field::prime(5).unwrap();
    let mut s = Structure::new("sl2_mod5", crate::rinehart::HomLieRinehart::from_hom_lie(&builders::sl2(f)));
    s.generator = Some(crate::exterior::ce_boundary(&builders::sl2(f)));
    let text = to_json(&s.to_file());
    assert!(text.contains("\"Fp:5\""));
    assert_eq!(load(text.as_bytes()).unwrap(), s);
}

fn scalar_text() -> impl Strategy<Value = String> {
    prop_oneof![
        (-4i64..5).prop_map(|n| n.to_string()),
        (-4i64..5, 1i64..4).prop_map(|(n, d)| Field::Rational.ratio(n, d).unwrap().to_string()),
    ]
}

/// Random structures on `F[t]/(t^k)` with arbitrary (not necessarily valid) A-basis data.
fn random_structure() -> impl Strategy<Value = Structure> {
    (1usize..3, 1usize..4).prop_flat_map(|(k, r)| {
        let n = k * r;
        let pairs = r * (r - 1) / 2;
        (
            proptest::collection::vec(scalar_text(), k * k),
            proptest::collection::vec(proptest::collection::vec(scalar_text(), n), r),
            proptest::collection::vec(proptest::collection::vec(scalar_text(), n), pairs),
            proptest::collection::vec(proptest::collection::vec(scalar_text(), k * k), r),
            any::<bool>(),
        )
            .prop_map(move |(phi, alpha, br, anchor, prime)| {
                let f = if prime { Field::Prime(7) } else { Field::Rational };
                let sc = |s: &String| f.parse(s).unwrap();
                let mat = |v: &[String]| Matrix::from_rows(f, v.chunks(k).map(|c| c.iter().map(sc).collect()).collect()).unwrap();
                // φ(1) = 1 and ρ(e_i)(1) = 0, so the A-basis data is read back unchanged
                let unital = |mut m: Matrix, unit: bool| {
                    for i in 0..k {
                        m.set(i, 0, if unit && i == 0 { f.one() } else { f.zero() });
                    }
                    m
                };
                let mut table = vec![vec![f.zeros(n); r]; r];
                let mut it = br.iter();
                for i in 0..r {
                    for j in i + 1..r {
                        let v: Vec<Scalar> = it.next().unwrap().iter().map(sc).collect();
                        table[j][i] = v.iter().map(|x| -x).collect();
                        table[i][j] = v;
                    }
                }
                let alpha: Vec<Vec<Scalar>> = alpha.iter().map(|v| v.iter().map(sc).collect()).collect();
                let anchor: Vec<Matrix> = anchor.iter().map(|v| unital(mat(v), false)).collect();
                let h = crate::rinehart::HomLieRinehart::from_a_basis(CommAlgebra::truncated(f, k), unital(mat(&phi), true), &table, &alpha, &anchor).unwrap();
                let mut s = Structure::new("random", h.clone());
                s.dual = Some(h);
                s
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_inverts_serialize(s in random_structure()) {
        let file = s.to_file();
        let text = to_json(&file);
        let back = parse(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &file);
        prop_assert_eq!(build(&back).unwrap(), s);
        prop_assert_eq!(to_json(&back), text);
    }
}
