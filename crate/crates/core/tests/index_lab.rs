use spingeo::index_lab::*;

#[test]
fn dlambda_sweep_has_index_zero() {
    for k in 0..=20 {
        let lambda = 0.1 * k as f64;
        let r = dlambda_index(lambda, 10).unwrap();
        assert_eq!(r.index, 0);
        let at_integer = (lambda - lambda.round()).abs() < 1e-12;
        assert_eq!(r.kernel_dim, at_integer as u64, "λ={lambda}");
        assert_eq!(dlambda_model(lambda, 10).unwrap().index(), 0);
    }
}

#[test]
fn torus_dirac_supertrace_vanishes() {
    for delta in [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5)] {
        let m = torus_dirac(delta, 20).unwrap();
        for t in [0.2, 1.0, 5.0] {
            assert!(m.supertrace(t).abs() <= 1e-12);
        }
    }
}

#[test]
fn sphere_hodge_mckean_singer() {
    let m = sphere2_hodge(40).unwrap();
    let r = mckean_singer_check(&m, &[0.1, 0.5, 1.0, 2.0]).unwrap();
    assert_eq!(r.inferred_index, 2);
    assert!(r.holds(), "{r:?}");
    // the individual traces do depend on t
    assert!((r.samples[0].even_trace - r.samples[3].even_trace).abs() > 1.0);
    let t = mckean_singer_check(&torus2_hodge(10).unwrap(), &[0.1, 1.0]).unwrap();
    assert_eq!(t.inferred_index, 0);
    assert!(t.holds());
}

#[test]
fn mehler_against_hermite_oracle_on_grid() {
    let grid = linspace(-1.0, 1.0, 5);
    let mut worst: f64 = 0.0;
    for &x in &grid {
        for &y in &grid {
            let m = mehler_kernel(0.3, x, y, 1.0).unwrap();
            let h = hermite_expansion(0.3, x, y, 1.0, 60).unwrap();
            worst = worst.max((m - h).abs());
            assert_eq!(m, mehler_kernel(0.3, y, x, 1.0).unwrap());
        }
    }
    println!("max |Mehler − Hermite| = {worst:e}");
    assert!(worst <= 1e-8);
}

#[test]
fn semigroup_and_delta_limit() {
    let quad = Quadrature::default();
    let grid = linspace(-2.0, 2.0, 5);
    let line = semigroup_residual(line_heat_kernel, 0.5, 0.5, &grid, &quad).unwrap();
    let mehler = semigroup_residual(|t, x, y| mehler_kernel(t, x, y, 1.0), 0.2, 0.3, &grid, &quad).unwrap();
    println!("semigroup residuals: line {:e}, Mehler {:e}", line.residual, mehler.residual);
    assert!(line.residual <= 1e-6 && mehler.residual <= 1e-6);
    let err = delta_limit_error(1e-4, bump, &linspace(-0.9, 0.9, 7), &quad).unwrap();
    println!("delta-limit error at t = 1e-4: {err:e}");
    assert!(err <= 1e-3);
}

#[test]
fn flat_identities() {
    use rand::SeedableRng;
    let (sq, lap) = flat_dirac_square(4).unwrap();
    assert_eq!(sq, lap);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    for n in [2, 4] {
        let c = symbol_check(n, 20, &mut rng).unwrap();
        assert!(c.squares_to_norm && c.invertible);
    }
}
