use secant_core::exactfield::Rng;
use secant_core::exec::ExecMode;
use secant_core::varieties::{
    catalog, load_variety, parse_selector, project, save_variety, scroll, validate, veronese,
};
use secant_core::{dimension_table, grass_dim, grass_secant_dim, secant_dim, ComputeCfg, Error};

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn every_catalog_entry_validates() {
    let cfg = ComputeCfg::default();
    for x in catalog() {
        let v = validate(&x, &cfg).unwrap();
        assert!(v.is_valid(), "{}: {v:?}", x.name());
        assert_eq!(v.is_cone, x.is_cone());
    }
}

#[test]
fn secant_dimensions_are_monotone() {
    let cfg = ComputeCfg::default();
    for x in catalog() {
        let t = dimension_table(&x, 3, &cfg).unwrap();
        for k in 1..=t.max_k {
            assert!(t.s(k - 1) <= t.s(k), "{} S_{k}", x.name());
            assert!(t.s(k) <= x.r());
        }
        for k in 2..=t.max_k {
            for h in 0..k - 1 {
                // An h-plane in the span of k points lies in the span of
                // those points and one more.
                assert!(t.ghk(h, k - 1) <= t.ghk(h, k), "{} h={h} k={k}", x.name());
            }
        }
    }
}

#[test]
fn points_of_secant_spaces_give_the_secant_variety() {
    let cfg = ComputeCfg::default();
    for x in catalog() {
        for k in 1..=3.min(x.r()) {
            let a = grass_secant_dim(&x, 0, k, &cfg).unwrap().dim;
            let b = secant_dim(&x, k, &cfg).unwrap().dim;
            assert_eq!(a, b, "{} k={k}", x.name());
        }
    }
}

#[test]
fn dimensions_are_stable_across_seeds() {
    let base = ComputeCfg::default();
    for sel in [
        "veronese:2,2",
        "scroll:3,1",
        "cone-rnc4",
        "segre:2,2",
        "veronese:1,4",
    ] {
        let x = parse_selector(sel).unwrap();
        let reference = dimension_table(&x, 3, &base).unwrap();
        for seed in [2, 3, 5, 8, 13] {
            let t = dimension_table(&x, 3, &base.clone().with_seed(seed)).unwrap();
            let dims = |t: &secant_core::DimTable| -> Vec<usize> {
                t.rows().iter().map(|e| e.dim).collect()
            };
            assert_eq!(dims(&t), dims(&reference), "{sel} seed {seed}");
        }
    }
}

#[test]
fn projections_of_the_cubic_veronese_are_general() {
    let cfg = ComputeCfg::default();
    let v = veronese(2, 3).unwrap();
    for seed in 1..=6 {
        let p = project(&v, 5, &Rng::new(seed)).unwrap();
        assert!(validate(&p, &cfg).unwrap().is_valid(), "seed {seed}");
        assert_eq!(
            grass_secant_dim(&p, 1, 2, &cfg).unwrap().dim,
            8,
            "seed {seed}"
        );
        assert_eq!(secant_dim(&p, 1, &cfg).unwrap().dim, 5, "seed {seed}");
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let x = parse_selector("segre:1,2").unwrap();
    let seq = ComputeCfg {
        exec: ExecMode::Sequential,
        ..ComputeCfg::default()
    };
    let def = ComputeCfg::default();
    assert_eq!(
        dimension_table(&x, 3, &seq).unwrap(),
        dimension_table(&x, 3, &def).unwrap()
    );
}

#[test]
fn other_primes_agree() {
    let x = scroll(2, 2).unwrap();
    for p in [
        2_147_483_659u64,
        4_611_686_018_427_387_847,
        9_223_372_036_854_775_783,
    ] {
        let cfg = ComputeCfg {
            prime: p,
            ..ComputeCfg::default()
        };
        assert_eq!(grass_secant_dim(&x, 1, 2, &cfg).unwrap().dim, 7, "p={p}");
        assert_eq!(grass_dim(&x, 2, &cfg).unwrap().dim, 6, "p={p}");
    }
}

#[test]
fn cross_check_agrees_with_modular_ranks() {
    let cfg = ComputeCfg {
        cross_check: true,
        ..ComputeCfg::default()
    };
    for sel in ["veronese:2,2", "scroll:4,0", "proj-veronese:2,3"] {
        let x = parse_selector(sel).unwrap();
        for e in [
            secant_dim(&x, 1, &cfg).unwrap(),
            grass_dim(&x, 2, &cfg).unwrap(),
            grass_secant_dim(&x, 1, 2, &cfg).unwrap(),
        ] {
            assert_eq!(e.exact_dim, Some(e.dim), "{sel} {}", e.label());
        }
    }
}

#[test]
fn handwritten_document_matches_constructor() {
    let loaded = load_variety(&fixture("scroll22.json")).unwrap();
    assert_eq!(loaded, scroll(2, 2).unwrap());
}

#[test]
fn large_coefficients_survive_a_round_trip() {
    let x = load_variety(&fixture("skew_cubic.json")).unwrap();
    assert_eq!(load_variety(&save_variety(&x)).unwrap(), x);
    let cfg = ComputeCfg {
        cross_check: true,
        ..ComputeCfg::default()
    };
    let s1 = secant_dim(&x, 1, &cfg).unwrap();
    assert_eq!((s1.dim, s1.exact_dim), (3, Some(3)));
}

#[test]
fn catalog_round_trips_through_documents() {
    for x in catalog() {
        let text = save_variety(&x);
        assert_eq!(load_variety(&text).unwrap(), x, "{}", x.name());
        assert_eq!(save_variety(&load_variety(&text).unwrap()), text);
    }
}

#[test]
fn degenerate_document_fails_validation() {
    let x = load_variety(&fixture("degenerate.json")).unwrap();
    let v = validate(&x, &ComputeCfg::default()).unwrap();
    assert!(!v.nondegenerate());
    assert!(!v.is_valid());
}

#[test]
fn direction_guard_is_enforced() {
    let x = parse_selector("segre:2,2").unwrap();
    let cfg = ComputeCfg {
        max_directions: 30,
        ..ComputeCfg::default()
    };
    assert!(matches!(
        dimension_table(&x, 4, &cfg),
        Err(Error::TooManyDirections { .. })
    ));
}
