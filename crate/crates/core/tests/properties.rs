mod common;

use std::f64::consts::TAU;

use common::eisenstein;
use proptest::prelude::*;
use quintic::eos::{self, LandauParams};
use quintic::oracle::{find_all_roots, match_multisets, OracleConfig};
use quintic::poly::{deflate, eval_poly, solve_quadratic, solve_quartic};
use quintic::series::{
    convergence_margin, hypergeometric_coefficients, passare_tsikh_root, series_coefficient, trinomial_coefficients,
    PrincipalShells, TrinomialForm,
};
use quintic::tschirnhaus::{power_sums, reduce_to_principal, solve_pipeline, PipelineOptions, TschirnhausError};
use quintic::{Complex64, DepressedQuintic, Poly, PrincipalQuintic, RootSet};

fn disc(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..=1.0f64, 0.0..TAU).prop_map(move |(u, t)| Complex64::from_polar(radius * u.sqrt(), t))
}

fn depressed() -> impl Strategy<Value = DepressedQuintic> {
    (disc(1.0), disc(1.0), disc(1.0)).prop_map(|(a3, a1, a0)| DepressedQuintic::new(a3, a1, a0))
}

fn oracle_roots(p: &Poly) -> RootSet {
    find_all_roots(p, &OracleConfig::default()).expect("oracle converges")
}

fn residuals_are_fresh(p: &Poly, set: &RootSet) -> bool {
    let scale = p.residual_scale();
    set.roots
        .iter()
        .zip(&set.residuals)
        .all(|(&x, &r)| eval_poly(p, x).norm() / scale == r)
}

fn principal_inside() -> impl Strategy<Value = PrincipalQuintic> {
    (disc(0.25), disc(0.09))
        .prop_map(|(a, b)| PrincipalQuintic::new(a, b))
        .prop_filter("inside the convergence domain", |q| convergence_margin(q) < -0.05)
}

fn map_for(q: &DepressedQuintic) -> Option<quintic::tschirnhaus::TschirnhausMap> {
    match reduce_to_principal(q) {
        Ok(m) | Err(TschirnhausError::AlreadyPrincipal(m)) => Some(m),
        Err(_) => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quadratic_matches_oracle(a2 in disc(1.0), a1 in disc(1.0), a0 in disc(1.0)) {
        prop_assume!(a2.norm() > 1e-3);
        let set = solve_quadratic(a2, a1, a0).unwrap();
        let p = Poly::new(vec![a0, a1, a2]).unwrap();
        prop_assert!(residuals_are_fresh(&p, &set));
        let m = match_multisets(&set.roots, &oracle_roots(&p).roots, 1e-9).unwrap();
        prop_assert!(m.success, "distance {:e}", m.max_distance);
    }

    #[test]
    fn quartic_matches_oracle(c3 in disc(1.0), c2 in disc(1.0), c1 in disc(1.0), c0 in disc(1.0)) {
        let set = solve_quartic(c3, c2, c1, c0);
        let p = Poly::new(vec![c0, c1, c2, c3, Complex64::new(1.0, 0.0)]).unwrap();
        prop_assert!(residuals_are_fresh(&p, &set));
        let reference = oracle_roots(&p);
        // a near-double root is only determined to about sqrt(eps); skip those
        let separation = separation(&reference.roots);
        prop_assume!(separation > 1e-3);
        let m = match_multisets(&set.roots, &reference.roots, 1e-9).unwrap();
        prop_assert!(m.success, "distance {:e}", m.max_distance);
    }
}

fn separation(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn deflation_reconstructs(q in depressed()) {
        let p = q.to_poly();
        let roots = oracle_roots(&p);
        prop_assert!(residuals_are_fresh(&p, &roots));
        for &r in &roots.roots {
            if p.eval(r).norm() >= 1e-10 {
                continue;
            }
            let quotient = deflate(&p, r, 1e-10).unwrap();
            let rebuilt = quotient.mul(&Poly::new(vec![-r, Complex64::new(1.0, 0.0)]).unwrap());
            // the remainder dropped by deflation is p(r) in the constant term
            for (x, y) in rebuilt.coeffs().iter().zip(p.coeffs()) {
                prop_assert!((x - y).norm() <= 1e-10 * y.norm().max(1.0));
            }
        }
    }

    #[test]
    fn oracle_reconstructs_well_separated_roots(r in proptest::collection::vec(disc(1.0), 5)) {
        prop_assume!(separation(&r) > 1e-2);
        let p = Poly::from_roots(&r);
        let rebuilt = Poly::from_roots(&oracle_roots(&p).roots);
        for (x, y) in rebuilt.coeffs().iter().zip(p.coeffs()) {
            prop_assert!((x - y).norm() <= 1e-9 * y.norm().max(1.0), "{x} vs {y}");
        }
    }

    #[test]
    fn oracle_is_deterministic(q in depressed()) {
        let p = q.to_poly();
        let a = find_all_roots(&p, &OracleConfig::default()).unwrap();
        let b = find_all_roots(&p, &OracleConfig::default()).unwrap();
        prop_assert_eq!(a.roots.iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect::<Vec<_>>(),
                        b.roots.iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect::<Vec<_>>());
    }

    #[test]
    fn series_root_has_small_residual(q in principal_inside()) {
        let r = passare_tsikh_root(&q, 1e-12, 20_000).unwrap();
        prop_assert!(r.converged);
        prop_assert!(q.to_poly().residual(r.value) < 1e-9);
    }

    #[test]
    fn newton_identities_match_direct_sums(q in depressed()) {
        let sums = power_sums(&q);
        let roots = oracle_roots(&q.to_poly()).roots;
        for n in 1..=10 {
            let direct: Complex64 = roots.iter().map(|x| x.powu(n as u32)).sum();
            let scale: f64 = roots.iter().map(|x| x.norm().powi(n as i32)).sum::<f64>().max(1.0);
            prop_assert!((sums.get(n) - direct).norm() <= 1e-9 * scale, "n = {n}");
        }
    }

    #[test]
    fn map_image_is_the_principal_quintic(q in depressed()) {
        let Some(map) = map_for(&q) else { return Ok(()) };
        let ys: Vec<Complex64> = oracle_roots(&q.to_poly()).roots.iter().map(|&x| map.apply(x)).collect();
        let zs = oracle_roots(&map.principal_poly()).roots;
        let m = match_multisets(&ys, &zs, 1e-8).unwrap();
        prop_assert!(m.success, "distance {:e}", m.max_distance);
        // e1 = e2 = 0 in terms of the mapped roots
        let e1: Complex64 = ys.iter().sum();
        let mut e2 = Complex64::new(0.0, 0.0);
        for i in 0..5 {
            for j in (i + 1)..5 {
                e2 += ys[i] * ys[j];
            }
        }
        prop_assert!(e1.norm() <= 1e-9 && e2.norm() <= 1e-9, "{e1} {e2}");
    }

    #[test]
    fn pipeline_returns_five_good_roots(q in depressed(), small in any::<bool>()) {
        let q = if small { DepressedQuintic::new(q.a3, q.a1, q.a0 * 0.05) } else { q };
        let r = solve_pipeline(&q, &PipelineOptions::default());
        prop_assert_eq!(r.recovered_roots.len(), 5);
        prop_assert!(r.recovered_roots.max_residual() <= 1e-7);
        prop_assert!(residuals_are_fresh(&q.to_poly(), &r.recovered_roots));
    }

    #[test]
    fn pipeline_is_scale_equivariant(q in depressed(), s in (0.5..2.0f64, 0.0..TAU)) {
        let s = Complex64::from_polar(s.0, s.1);
        let base = solve_pipeline(&q, &PipelineOptions::default()).recovered_roots.roots;
        let scaled = solve_pipeline(&q.scaled_roots(s), &PipelineOptions::default()).recovered_roots.roots;
        let expected: Vec<Complex64> = base.iter().map(|x| x * s).collect();
        let m = match_multisets(&scaled, &expected, 1e-8).unwrap();
        prop_assert!(m.success, "distance {:e}", m.max_distance);
    }

    #[test]
    fn equilibrium_invariants(a in -2.0..2.0f64, b in -2.0..2.0f64, c in 0.1..2.0f64, f in -2.0..2.0f64) {
        let p = LandauParams::new(a, b, c, f);
        let r = eos::equilibrium(&p).unwrap();
        prop_assert!(p.state_residual(r.u_eq).abs() <= 1e-7 * (1.0 + f.abs()));
        let f_eq = eos::free_energy(&p, r.u_eq);
        for s in &r.all_stationary {
            prop_assert!(f_eq <= s.free_energy + 1e-12);
        }
        let mirror = eos::equilibrium(&LandauParams::new(a, b, c, -f)).unwrap();
        if r.degenerate {
            let mut x = r.minimizers();
            let mut y: Vec<f64> = mirror.minimizers().iter().map(|u| -u).collect();
            x.sort_by(f64::total_cmp);
            y.sort_by(f64::total_cmp);
            prop_assert_eq!(x.len(), y.len());
            for (u, v) in x.iter().zip(&y) {
                prop_assert!((u - v).abs() <= 1e-9);
            }
        } else {
            prop_assert!((r.u_eq + mirror.u_eq).abs() <= 1e-9, "{} vs {}", r.u_eq, mirror.u_eq);
        }
    }

    #[test]
    fn equilibrium_agrees_with_oracle_selection(a in -2.0..2.0f64, b in -2.0..2.0f64, c in 0.1..2.0f64, f in -2.0..2.0f64) {
        let p = LandauParams::new(a, b, c, f);
        let r = eos::equilibrium(&p).unwrap();
        // global minimum over the oracle's real roots
        let roots = oracle_roots(&eos::to_depressed_quintic(&p).unwrap().to_poly());
        let best = roots
            .roots
            .iter()
            .filter(|z| z.im.abs() < 1e-8)
            .map(|z| z.re)
            .min_by(|x, y| eos::free_energy(&p, *x).total_cmp(&eos::free_energy(&p, *y)))
            .unwrap();
        let nearest = r.minimizers().iter().map(|u| (u - best).abs()).fold(f64::INFINITY, f64::min);
        prop_assert!(nearest <= 1e-7, "{} vs oracle {best}", r.u_eq);
    }

    #[test]
    fn single_well_is_increasing(a in 0.01..2.0f64, b in 0.0..2.0f64, c in 0.1..2.0f64, f0 in -2.0..1.9f64) {
        let p = |f| LandauParams::new(a, b, c, f);
        let u0 = eos::equilibrium(&p(f0)).unwrap().u_eq;
        let u1 = eos::equilibrium(&p(f0 + 0.1)).unwrap().u_eq;
        prop_assert!(u1 > u0);
    }
}

#[test]
fn a_zero_coefficients_up_to_ten() {
    let shells: Vec<Vec<Complex64>> = PrincipalShells::new(&PrincipalQuintic::from_real(0.0, -1.0)).take(11).collect();
    for k in 0..=10u32 {
        let exact = eisenstein(k as u128);
        assert_eq!(series_coefficient(0, k), Some(exact));
        let float = shells[k as usize][0].re;
        assert_eq!(float.round(), exact as f64, "k = {k}");
        assert!((float - exact as f64).abs() <= 1e-12 * exact as f64);
    }
}

#[test]
fn catalan_terms_for_m_one_n_two() {
    let catalan: [u64; 10] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    for form in [TrinomialForm::Repaired, TrinomialForm::Printed] {
        let got: Vec<f64> = trinomial_coefficients(1, 2, 10, form);
        let want: Vec<f64> = catalan.iter().map(|&c| c as f64).collect();
        assert_eq!(got, want, "{form:?}");
    }
}

#[test]
fn hypergeometric_coefficients_up_to_eight() {
    // Exact: the 4F3 term ratio times 5^5/4^4, with the parameters written as
    // fractions, is prod_{i=1..4}(5k+i) * 5 / (8 (k+1)(2k+1)(4k+3)(4k+5)).
    // Cross-multiplying against consecutive integers proves the identity
    // one step at a time, starting from 1 = 1.
    for k in 0..8u128 {
        let num = (1..=4).map(|i| 5 * k + i).product::<u128>() * 5;
        let den = 8 * (k + 1) * (2 * k + 1) * (4 * k + 3) * (4 * k + 5);
        assert_eq!(eisenstein(k + 1) * den, eisenstein(k) * num, "k = {k}");
    }
    let coeffs = hypergeometric_coefficients(&[0.2, 0.4, 0.6, 0.8], &[0.5, 0.75, 1.25], 9);
    for (k, c) in coeffs.iter().enumerate() {
        let scaled = c * (3125.0f64 / 256.0).powi(k as i32);
        let exact = eisenstein(k as u128) as f64;
        assert_eq!(scaled.round(), exact);
        assert!((scaled - exact).abs() <= 1e-12 * exact);
    }
}
