//! Acceptance suite: every criterion runs at zero tolerance (exact equality
//! throughout) and prints one `criterion N PASS/FAIL` line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, UnwindSafe};
use std::process::Command;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};

use kstab::arith::{factorize, rat, ratio, BigRational};
use kstab::polynomial::UniPoly;
use kstab::report::{format_linear, format_root};
use kstab::root_system::{DynkinDiagram, RootSystem, Weight};
use kstab::{
    complementary_roots, config, degree, pencil_table, BlowUpGeometry, Marking, TwoOrbitConfig,
    WeightPencil,
};

fn criterion(n: usize, desc: &str, f: impl FnOnce() + UnwindSafe) {
    match catch_unwind(f) {
        Ok(()) => println!("criterion {n} PASS — {desc}"),
        Err(e) => {
            println!("criterion {n} FAIL — {desc}");
            std::panic::resume_unwind(e);
        }
    }
}

fn kstab_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kstab"))
}

fn preset_json(name: &str) -> serde_json::Value {
    let out = kstab_bin()
        .args(["preset", "run", name, "--json"])
        .env("KSTAB_NO_COLOR", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "preset run {name} exited {:?}", out.status.code());
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

fn geometry(name: &str) -> BlowUpGeometry {
    BlowUpGeometry::new(config::preset(name).unwrap().to_config().unwrap()).unwrap()
}

#[test]
fn criterion_1_pas_f4_xi_exact() {
    criterion(1, "pas-f4: ξ = 2^73·19·23·199·1049 exactly, verdict positive", || {
        let expected = rat(2).pow(73) * rat(19) * rat(23) * rat(199) * rat(1049);
        let v = preset_json("pas-f4");
        assert_eq!(v["xi"]["value"], expected.to_string());
        assert_eq!(v["xi"]["factored"], "2^73 · 19 · 23 · 199 · 1049");
        assert_eq!(v["verdict"], "positive");
        assert_eq!(geometry("pas-f4").xi().unwrap(), expected);
    });
}

#[test]
fn criterion_2_pas_a1g2_xi_exact() {
    criterion(2, "pas-a1g2: ξ = 2^4·3^9·5·11 exactly, verdict positive", || {
        let expected = rat(2).pow(4) * rat(3).pow(9) * rat(5) * rat(11);
        let v = preset_json("pas-a1g2");
        assert_eq!(v["xi"]["value"], "17321040");
        assert_eq!(v["xi"]["factored"], "2^4 · 3^9 · 5 · 11");
        assert_eq!(v["verdict"], "positive");
        assert_eq!(geometry("pas-a1g2").xi().unwrap(), expected);
    });
}

fn f4_pencil() -> WeightPencil {
    WeightPencil::mix(
        &Weight::fundamental(1, 4),
        &UniPoly::x(),
        &Weight::fundamental(3, 4),
        &UniPoly::linear(rat(8), rat(-1)),
    )
    .unwrap()
}

#[test]
fn criterion_3_f4_intermediate_products() {
    criterion(3, "F4 products: ∏(ρ,γ) and the expanded numerator polynomial", || {
        let g = geometry("pas-f4");
        let rs = g.root_system();
        let marking = Marking::new([1, 3]).unwrap();
        let rho = rs.rho();

        let mut rho_product = rat(1);
        for gamma in complementary_roots(rs, &marking).unwrap() {
            rho_product *= rs.pairing(&rho, &gamma).unwrap();
        }
        assert_eq!(rho_product, rat(2).pow(4) * rat(3).pow(7) * rat(5).pow(4) * rat(7).pow(2) * rat(11));

        let rows = pencil_table(rs, &marking, &f4_pencil()).unwrap();
        let mut numerators = UniPoly::one();
        for row in &rows {
            numerators = &numerators * &row.numerator;
        }
        // −2^14·x²(x−8)^7(x+8)²(x−24)²(x−16)², expanded.
        let mut expected = UniPoly::constant(rat(-(1 << 14)));
        for (c, e) in [(0i64, 2u32), (-8, 7), (8, 2), (-24, 2), (-16, 2)] {
            expected = &expected * &UniPoly::linear(rat(c), rat(1)).pow(e);
        }
        assert_eq!(numerators, expected);
    });
}

#[test]
fn criterion_4_table_rows_bit_exact() {
    criterion(4, "all 22 F4 rows and all 7 A1×G2 rows render bit-exactly", || {
        let expected_f4: BTreeSet<&str> = [
            "(1,0,0,0) | x | 1",
            "(0,0,1,0) | (8-x)/2 | 1/2",
            "(1,1,0,0) | x | 2",
            "(0,1,1,0) | (8-x)/2 | 3/2",
            "(0,0,1,1) | (8-x)/2 | 1",
            "(1,1,1,0) | (8+x)/2 | 5/2",
            "(0,1,1,1) | (8-x)/2 | 2",
            "(1,1,1,1) | (8+x)/2 | 3",
            "(0,1,2,0) | 8-x | 2",
            "(1,1,2,0) | 8 | 3",
            "(0,1,2,1) | 8-x | 5/2",
            "(1,2,2,0) | 8 | 4",
            "(1,1,2,1) | 8 | 7/2",
            "(0,1,2,2) | 8-x | 3",
            "(1,2,2,1) | 8 | 9/2",
            "(1,1,2,2) | 8 | 4",
            "(1,2,3,1) | (24-x)/2 | 5",
            "(1,2,2,2) | 8 | 5",
            "(1,2,3,2) | (24-x)/2 | 11/2",
            "(1,2,4,2) | 16-x | 6",
            "(1,3,4,2) | 16-x | 7",
            "(2,3,4,2) | 16 | 8",
        ]
        .into();
        let rep = geometry("pas-f4").report().unwrap();
        let rendered: BTreeSet<String> = rep
            .table
            .iter()
            .map(|r| {
                format!(
                    "{} | {} | {}",
                    format_root(&r.root, &rep.diagram),
                    format_linear(&r.numerator),
                    r.denominator
                )
            })
            .collect();
        assert_eq!(rendered.len(), 22);
        assert_eq!(rendered, expected_f4.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>());
        assert!(rendered.contains("(1,2,3,1) | (24-x)/2 | 5"));

        let rep = geometry("pas-a1g2").report().unwrap();
        let rendered: Vec<String> = rep
            .table
            .iter()
            .map(|r| {
                format!(
                    "{} | {} | {}",
                    format_root(&r.root, &rep.diagram),
                    format_linear(&r.numerator),
                    r.denominator
                )
            })
            .collect();
        assert_eq!(
            rendered,
            [
                "α_0 | 6-2x | 1",
                "α_1 | 6-2x | 1",
                "α_2 | 3x | 3",
                "α_1+α_2 | 6+x | 4",
                "2α_1+α_2 | 12-x | 5",
                "3α_1+α_2 | 18-3x | 6",
                "3α_1+2α_2 | 18 | 9",
            ]
        );
    });
}

#[test]
fn criterion_5_root_system_goldens() {
    criterion(5, "F4 root list, fundamental weights, ρ; G2 weights and ρ", || {
        let f4 = RootSystem::new(DynkinDiagram::parse("F4").unwrap()).unwrap();
        let listed: BTreeSet<Vec<i64>> = [
            [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
            [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1],
            [1, 1, 1, 0], [0, 1, 1, 1], [1, 1, 1, 1], [0, 1, 2, 0],
            [1, 1, 2, 0], [0, 1, 2, 1], [1, 2, 2, 0], [1, 1, 2, 1],
            [0, 1, 2, 2], [1, 2, 2, 1], [1, 1, 2, 2], [1, 2, 3, 1],
            [1, 2, 2, 2], [1, 2, 3, 2], [1, 2, 4, 2], [1, 3, 4, 2], [2, 3, 4, 2],
        ]
        .map(|r| r.to_vec())
        .into();
        let got: BTreeSet<Vec<i64>> =
            f4.positive_roots().iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(f4.positive_roots().len(), 24);
        assert_eq!(got, listed);
        assert_eq!(f4.positive_roots().last().unwrap().coeffs(), [2, 3, 4, 2]);

        let m = f4.fundamental_weight_matrix();
        assert_eq!(m[0], [2, 3, 4, 2].map(rat));
        assert_eq!(m[1], [3, 6, 8, 4].map(rat));
        assert_eq!(m[2], [2, 4, 6, 3].map(rat));
        assert_eq!(m[3], [1, 2, 3, 2].map(rat));
        assert_eq!(f4.weight_in_simple_basis(&f4.rho()).unwrap(), [8, 15, 21, 11].map(rat));

        let g2 = RootSystem::new(DynkinDiagram::parse("G2").unwrap()).unwrap();
        assert_eq!(g2.fundamental_weight_matrix()[0], [2, 1].map(rat));
        assert_eq!(g2.fundamental_weight_matrix()[1], [3, 2].map(rat));
        assert_eq!(g2.weight_in_simple_basis(&g2.rho()).unwrap(), [5, 3].map(rat));
    });
}

#[test]
fn criterion_6_intersection_engine_checks() {
    criterion(6, "pas-a1g2 engine: H_X^8 = 12 and dim of the adjoint = 17", || {
        let g = geometry("pas-a1g2");
        let h = g.pullback_h_x();
        assert_eq!(g.intersection_product(&vec![h; 8]).unwrap(), rat(12));
        assert_eq!(g.root_system().dim_adjoint(), 17);
    });
}

fn random_identity_config(rng: &mut impl Rng, index: usize) -> TwoOrbitConfig {
    let diagrams = ["A1", "A2", "A3", "B2", "G2", "C3", "A1xA2", "A1xG2", "A2xA2"];
    loop {
        let diagram = DynkinDiagram::parse(diagrams[rng.gen_range(0..diagrams.len())]).unwrap();
        let rank = diagram.rank();
        // Random dominant weights whose support union covers a random marking.
        let mut omega_y = vec![0i64; rank];
        let mut omega_z = vec![0i64; rank];
        for i in 0..rank {
            if rng.gen_bool(0.7) {
                omega_y[i] = rng.gen_range(0..=2);
                omega_z[i] = rng.gen_range(0..=2);
            }
        }
        if omega_y.iter().all(|&c| c == 0) && omega_z.iter().all(|&c| c == 0) {
            continue;
        }
        let rs = RootSystem::new(diagram.clone()).unwrap();
        let support: BTreeSet<usize> = (0..rank)
            .filter(|&i| omega_y[i] != 0 || omega_z[i] != 0)
            .map(|i| i + 1)
            .collect();
        let marking = Marking::new(support).unwrap();
        let dim_e = complementary_roots(&rs, &marking).unwrap().len();
        let dim_x = dim_e + 1;
        if dim_x < 2 {
            continue;
        }
        let k = rng.gen_range(1..=6);
        let a_x = rng.gen_range(1..=3);
        let a_y = -rng.gen_range(0..=2);
        // ε = k/a_X parks the polarization pencil on a pullback from Y at
        // the right endpoint, which is exactly when the volume vanishes
        // there and the two invariant routes must agree.
        let cfg = TwoOrbitConfig {
            name: format!("random-{index}"),
            diagram,
            omega_y: Weight::new(omega_y.into_iter().map(rat).collect()),
            omega_z: Weight::new(omega_z.into_iter().map(rat).collect()),
            dim_x,
            codim: rng.gen_range(1..dim_x),
            epsilon: ratio(k, a_x),
            minus_kx_multiple: k,
            e_class: (a_y, a_x),
            symmetrizer_scales: None,
        };
        // β and S need L^n ≠ 0; redraw when the random polarization is
        // degenerate.
        let volume = BlowUpGeometry::new(cfg.clone())
            .unwrap()
            .anticanonical_volume()
            .unwrap();
        if !volume.is_zero() {
            return cfg;
        }
    }
}

#[test]
fn criterion_7_beta_equals_xi() {
    criterion(7, "β = ξ exactly on both presets and 20 randomized configs", || {
        for name in config::PRESET_NAMES {
            let g = geometry(name);
            assert_eq!(g.beta().unwrap(), g.xi().unwrap(), "{name}");
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(20250810);
        for index in 0..20 {
            let cfg = random_identity_config(&mut rng, index);
            let name = cfg.name.clone();
            let summary = format!("{} n={} r={} k={} e=({}, {})",
                cfg.diagram, cfg.dim_x, cfg.codim, cfg.minus_kx_multiple,
                cfg.e_class.0, cfg.e_class.1);
            let g = BlowUpGeometry::new(cfg).unwrap();
            assert_eq!(g.beta().unwrap(), g.xi().unwrap(), "{name}: {summary}");
        }
    });
}

/// Independent oracle: counts standard Young tableaux of a rows×cols
/// rectangle by direct enumeration.
fn syt_rectangle(rows: usize, cols: usize) -> u64 {
    fn go(heights: &mut Vec<usize>, placed: usize, total: usize, cols: usize) -> u64 {
        if placed == total {
            return 1;
        }
        let mut count = 0;
        for r in 0..heights.len() {
            if heights[r] < cols && (r == 0 || heights[r] < heights[r - 1]) {
                heights[r] += 1;
                count += go(heights, placed + 1, total, cols);
                heights[r] -= 1;
            }
        }
        count
    }
    go(&mut vec![0; rows], 0, rows * cols, cols)
}

#[test]
fn criterion_8_degree_oracles() {
    criterion(8, "Gr(2,4), Gr(2,5) degrees vs tableau counts; P^n degree 1", || {
        let a3 = RootSystem::new(DynkinDiagram::parse("A3").unwrap()).unwrap();
        let d = degree(&a3, &Marking::new([2]).unwrap(), &Weight::fundamental(2, 3)).unwrap();
        assert_eq!(d, rat(syt_rectangle(2, 2) as i64));
        assert_eq!(d, rat(2));

        let a4 = RootSystem::new(DynkinDiagram::parse("A4").unwrap()).unwrap();
        let d = degree(&a4, &Marking::new([2]).unwrap(), &Weight::fundamental(2, 4)).unwrap();
        assert_eq!(d, rat(syt_rectangle(2, 3) as i64));
        assert_eq!(d, rat(5));

        // P^n = the flag variety of A_n marked at an end node, degree 1.
        for n in 1..=8 {
            let rs = RootSystem::new(DynkinDiagram::new(vec![(kstab::DynkinType::A, n)]).unwrap())
                .unwrap();
            for node in [1, n] {
                let d = degree(&rs, &Marking::new([node]).unwrap(), &Weight::fundamental(node, n))
                    .unwrap();
                assert_eq!(d, rat(1), "P^{n} via node {node}");
            }
        }
    });
}

#[test]
fn criterion_9_property_suite() {
    criterion(9, "ξ scaling invariance; ρ = half-sum; integral additivity; factor round-trip", || {
        // ξ unchanged under per-component symmetrizer rescaling.
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for name in config::PRESET_NAMES {
            let base = geometry(name).xi().unwrap();
            let mut cfg = config::preset(name).unwrap().to_config().unwrap();
            let comps = cfg.diagram.components().len();
            cfg.symmetrizer_scales = Some(
                (0..comps).map(|_| ratio(rng.gen_range(1..=9), rng.gen_range(1..=9))).collect(),
            );
            assert_eq!(BlowUpGeometry::new(cfg).unwrap().xi().unwrap(), base, "{name}");
        }

        // ρ is half the sum of positive roots across all supported types.
        let mut names: Vec<String> = Vec::new();
        names.extend((1..=8).map(|n| format!("A{n}")));
        names.extend((2..=8).map(|n| format!("B{n}")));
        names.extend((2..=8).map(|n| format!("C{n}")));
        names.extend((4..=8).map(|n| format!("D{n}")));
        names.extend((6..=8).map(|n| format!("E{n}")));
        names.push("F4".into());
        names.push("G2".into());
        for name in &names {
            let rs = RootSystem::new(DynkinDiagram::parse(name).unwrap()).unwrap();
            let rho = rs.weight_in_simple_basis(&rs.rho()).unwrap();
            for (j, coord) in rho.iter().enumerate() {
                let col_sum: i64 = rs.positive_roots().iter().map(|r| r.coeffs()[j]).sum();
                assert_eq!(*coord, ratio(col_sum, 2), "{name} node {}", j + 1);
            }
        }

        // Exact additivity of the definite integral at random split points.
        for _ in 0..50 {
            let coeffs: Vec<BigRational> = (0..=rng.gen_range(0..6))
                .map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=12)))
                .collect();
            let p = UniPoly::from_coeffs(coeffs);
            let mut pts: Vec<BigRational> =
                (0..3).map(|_| ratio(rng.gen_range(-24..=24), rng.gen_range(1..=8))).collect();
            pts.sort();
            assert_eq!(
                p.definite_integral(&pts[0], &pts[1]) + p.definite_integral(&pts[1], &pts[2]),
                p.definite_integral(&pts[0], &pts[2])
            );
        }

        // Factorization round-trip on 1000 random integers below 10^30.
        let bound = rat(10).pow(30);
        for _ in 0..1000 {
            let mut n = num_bigint::BigInt::from(0);
            let digits = rng.gen_range(1..=30);
            for _ in 0..digits {
                n = n * 10 + rng.gen_range(0..=9);
            }
            if rng.gen_bool(0.5) {
                n = -n;
            }
            assert!(BigRational::from_integer(n.clone()).abs() < bound);
            let f = factorize(&n);
            assert_eq!(f.value(), n);
            // Primes strictly increasing, all certified.
            let primes: Vec<_> = f.factors().iter().map(|(p, _)| p.clone()).collect();
            assert!(primes.windows(2).all(|w| w[0] < w[1]));
            assert!(primes.iter().all(kstab::arith::is_prime));
        }
    });
}
