//! Values from the exact-rational oracle in `tests/oracle/`, frozen here.
//!
//! The oracle computes `G_k` and `G_{h,k}` through tangent vectors of the
//! row space (no affine chart) and `S_k` through a symbolic Terracini stack,
//! sampling small integers over Q. Regenerate with
//! `python3 tests/oracle/tangent_oracle.py`.

use secant_core::varieties::parse_selector;
use secant_core::{dimension_table, secant_dim, ComputeCfg};

struct Expected {
    name: &'static str,
    s: &'static [usize],
    g: &'static [usize],
    ghk: &'static [((usize, usize), usize)],
}

const TABLE: &[Expected] = &[
    Expected {
        name: "veronese:1,3",
        s: &[1, 3, 3, 3],
        g: &[1, 2, 3, 0],
        ghk: &[
            ((0, 1), 3),
            ((0, 2), 3),
            ((1, 2), 4),
            ((0, 3), 3),
            ((1, 3), 4),
            ((2, 3), 3),
        ],
    },
    Expected {
        name: "veronese:1,4",
        s: &[1, 3, 4, 4],
        g: &[1, 2, 3, 4],
        ghk: &[
            ((0, 1), 3),
            ((0, 2), 4),
            ((1, 2), 5),
            ((0, 3), 4),
            ((1, 3), 6),
            ((2, 3), 6),
        ],
    },
    Expected {
        name: "veronese:2,2",
        s: &[2, 4, 5, 5],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 4),
            ((0, 2), 5),
            ((1, 2), 8),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "veronese:2,3",
        s: &[2, 5, 8, 9],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 5),
            ((0, 2), 8),
            ((1, 2), 8),
            ((0, 3), 9),
            ((1, 3), 12),
            ((2, 3), 11),
        ],
    },
    Expected {
        name: "proj-veronese:2,3",
        s: &[2, 5, 5, 5],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 5),
            ((0, 2), 5),
            ((1, 2), 8),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "scroll:2,2",
        s: &[2, 5, 5, 5],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 5),
            ((0, 2), 5),
            ((1, 2), 7),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "scroll:3,1",
        s: &[2, 5, 5, 5],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 5),
            ((0, 2), 5),
            ((1, 2), 7),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "scroll:4,0",
        s: &[2, 4, 5, 5],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 4),
            ((0, 2), 5),
            ((1, 2), 7),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "cone-rnc4",
        s: &[2, 4, 5, 5],
        g: &[2, 4, 6, 8],
        ghk: &[
            ((0, 1), 4),
            ((0, 2), 5),
            ((1, 2), 7),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "segre:1,1",
        s: &[2, 3, 3, 3],
        g: &[2, 4, 3, 0],
        ghk: &[
            ((0, 1), 3),
            ((0, 2), 3),
            ((1, 2), 4),
            ((0, 3), 3),
            ((1, 3), 4),
            ((2, 3), 3),
        ],
    },
    Expected {
        name: "segre:1,2",
        s: &[3, 5, 5, 5],
        g: &[3, 6, 9, 8],
        ghk: &[
            ((0, 1), 5),
            ((0, 2), 5),
            ((1, 2), 8),
            ((0, 3), 5),
            ((1, 3), 8),
            ((2, 3), 9),
        ],
    },
    Expected {
        name: "segre:2,2",
        s: &[4, 7, 8, 8],
        g: &[4, 8, 12, 16],
        ghk: &[
            ((0, 1), 7),
            ((0, 2), 8),
            ((1, 2), 14),
            ((0, 3), 8),
            ((1, 3), 14),
            ((2, 3), 17),
        ],
    },
];

/// `(d, k, dim S_k(veronese(1, d)))`.
const RNC: &[(u32, usize, usize)] = &[
    (2, 1, 2),
    (2, 2, 2),
    (2, 3, 2),
    (3, 1, 3),
    (3, 2, 3),
    (3, 3, 3),
    (4, 1, 3),
    (4, 2, 4),
    (4, 3, 4),
    (5, 1, 3),
    (5, 2, 5),
    (5, 3, 5),
    (6, 1, 3),
    (6, 2, 5),
    (6, 3, 6),
    (7, 1, 3),
    (7, 2, 5),
    (7, 3, 7),
    (8, 1, 3),
    (8, 2, 5),
    (8, 3, 7),
];

#[test]
fn catalog_table_matches_oracle() {
    let cfg = ComputeCfg::default();
    for e in TABLE {
        let x = parse_selector(e.name).unwrap();
        let max_k = e.s.len() - 1;
        let t = dimension_table(&x, max_k, &cfg).unwrap();
        for k in 0..=max_k {
            assert_eq!(t.s(k), e.s[k], "{} S_{k}", e.name);
            assert_eq!(t.g(k), e.g[k], "{} G_{k}", e.name);
        }
        assert_eq!(t.grass_secant.len(), e.ghk.len(), "{}", e.name);
        for &((h, k), v) in e.ghk {
            assert_eq!(t.ghk(h, k), v, "{} G_{{{h},{k}}}", e.name);
        }
    }
}

#[test]
fn rational_normal_curves_match_oracle() {
    let cfg = ComputeCfg::default();
    assert_eq!(RNC.len(), 21);
    for &(d, k, want) in RNC {
        let x = parse_selector(&format!("veronese:1,{d}")).unwrap();
        if k > x.r() {
            assert_eq!(want, x.r(), "d={d} k={k}");
            continue;
        }
        assert_eq!(secant_dim(&x, k, &cfg).unwrap().dim, want, "d={d} k={k}");
    }
}
