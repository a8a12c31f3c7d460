mod common;

use std::f64::consts::PI;

use glvortex::potentials::{
    circle_limit_check, circle_limit_check_with, complex_potential, field_velocity_conj, phase_field, velocities_conj,
    vortex_velocity_conj,
};
use glvortex::{DomainGeometry, SelfInteraction, Vortex, VortexConfiguration};
use num_complex::Complex64;
use rand::Rng;

fn random_config(domain: DomainGeometry, count: usize, seed: u64) -> VortexConfiguration {
    random_config_apart(domain, count, seed, 0.1)
}

fn random_config_apart(domain: DomainGeometry, count: usize, seed: u64, separation: f64) -> VortexConfiguration {
    let mut rng = common::rng(seed);
    let (lo, hi) = match domain {
        DomainGeometry::Disk { r2 } => (0.0, 0.85 * r2),
        DomainGeometry::Annulus { r1, r2 } => (r1 + 0.1 * (r2 - r1), r2 - 0.1 * (r2 - r1)),
    };
    loop {
        let vortices: Vec<Vortex> = (0..count)
            .map(|_| {
                let z = Complex64::from_polar(rng.gen_range(lo..hi), rng.gen_range(0.0..2.0 * PI));
                Vortex::at(z, if rng.gen_bool(0.5) { 1 } else { -1 })
            })
            .collect();
        let cfg = VortexConfiguration::new(domain, vortices).unwrap();
        if cfg.min_pair_distance() > separation {
            return cfg;
        }
    }
}

fn domains() -> [DomainGeometry; 3] {
    [
        DomainGeometry::disk(1.0).unwrap(),
        DomainGeometry::annulus(0.5, 1.5).unwrap(),
        DomainGeometry::annulus(0.2, 1.0).unwrap(),
    ]
}

#[test]
fn disk_velocity_matches_image_sum() {
    let cfg = random_config(DomainGeometry::disk(1.0).unwrap(), 4, 1);
    let i = Complex64::i();
    for j in 0..cfg.len() {
        let zj = cfg.vortices()[j].position;
        let mut want = common::disk_single(zj, cfg.vortices()[j].degree, 1.0);
        for (k, v) in cfg.vortices().iter().enumerate() {
            if k != j {
                let n = v.degree as f64;
                want += n / (i * (zj - v.position)) - n / (i * (zj - 1.0 / v.position.conj()));
            }
        }
        let got = vortex_velocity_conj(&cfg, j).unwrap();
        assert!((got - want).norm() < 1e-13 * want.norm().max(1.0));
    }
}

#[test]
fn boundary_impermeability() {
    for (s, domain) in domains().into_iter().enumerate() {
        for count in 1..=4 {
            let cfg = random_config(domain, count, 10 * s as u64 + count as u64);
            let mut radii = vec![domain.outer_radius()];
            radii.extend(domain.inner_radius());
            for r in radii {
                for m in 0..64 {
                    let z = Complex64::from_polar(r, 2.0 * PI * m as f64 / 64.0);
                    let w = field_velocity_conj(&cfg, z).unwrap();
                    let normal = (w * z).re.abs() / (w * z).norm();
                    assert!(normal < 1e-8, "{domain:?}, r = {r}, m = {m}: {normal:e}");
                }
            }
        }
    }
}

#[test]
fn rotation_covariance() {
    for (s, domain) in domains().into_iter().enumerate() {
        let cfg = random_config(domain, 3, 100 + s as u64);
        let base = velocities_conj(&cfg).unwrap();
        for alpha in [0.3, 1.9, -2.5] {
            let turned = velocities_conj(&cfg.rotated(alpha)).unwrap();
            let phase = Complex64::from_polar(1.0, -alpha);
            for (a, b) in base.iter().zip(&turned) {
                assert!((a * phase - b).norm() < 1e-10 * a.norm().max(1e-3));
            }
        }
    }
}

#[test]
fn degree_flip_negates_velocities() {
    for (s, domain) in domains().into_iter().enumerate() {
        let cfg = random_config(domain, 4, 200 + s as u64);
        let a = velocities_conj(&cfg).unwrap();
        let b = velocities_conj(&cfg.flipped()).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x + y).norm() <= 1e-14 * x.norm());
        }
    }
}

#[test]
fn potential_derivative_matches_field() {
    let h = 1e-6;
    for (s, domain) in domains().into_iter().enumerate() {
        let cfg = random_config(domain, 3, 300 + s as u64);
        let mut rng = common::rng(400 + s as u64);
        let (lo, hi) = (domain.inner_radius().unwrap_or(0.0), domain.outer_radius());
        let mut checked = 0;
        while checked < 50 {
            let z = Complex64::from_polar(rng.gen_range(lo + 0.02..hi - 0.02), rng.gen_range(0.0..2.0 * PI));
            if cfg.positions().iter().any(|p| (p - z).norm() < 0.05) {
                continue;
            }
            let mut dw = complex_potential(&cfg, z + h).unwrap() - complex_potential(&cfg, z - h).unwrap();
            // W jumps by 2πn across logarithm branch cuts.
            dw.re -= 2.0 * PI * (dw.re / (2.0 * PI)).round();
            let fd = dw / (2.0 * h);
            let w = field_velocity_conj(&cfg, z).unwrap();
            assert!((fd - w).norm() < 1e-6 * w.norm().max(1.0), "{domain:?} z = {z}: {fd} vs {w}");
            checked += 1;
        }
    }
}

#[test]
fn phase_winds_by_degree() {
    for (s, domain) in domains().into_iter().enumerate() {
        let cfg = random_config(domain, 3, 500 + s as u64);
        for (j, v) in cfg.vortices().iter().enumerate() {
            let steps = 400;
            let mut total = 0.0;
            let mut prev = phase_field(&cfg, v.position + 1e-3).unwrap();
            for m in 1..=steps {
                let z = v.position + Complex64::from_polar(1e-3, 2.0 * PI * m as f64 / steps as f64);
                let cur = phase_field(&cfg, z).unwrap();
                let mut d = cur - prev;
                d -= 2.0 * PI * (d / (2.0 * PI)).round();
                total += d;
                prev = cur;
            }
            assert!((total - 2.0 * PI * v.degree as f64).abs() < 1e-9, "{domain:?}, vortex {j}: {total}");
        }
    }
}

#[test]
fn pair_phase_reflections() {
    // Pair on the real axis: Φ0 is odd under reflection in the axis through
    // the pair and even under reflection in the perpendicular bisector.
    let cfg = VortexConfiguration::new(
        DomainGeometry::disk(1.0).unwrap(),
        vec![Vortex::new(0.4, 0.0, 1), Vortex::new(-0.4, 0.0, -1)],
    )
    .unwrap();
    let phi = |z: Complex64| phase_field(&cfg, z).unwrap();
    let wrap = |d: f64| d - 2.0 * PI * (d / (2.0 * PI)).round();
    let odd = |z: Complex64| phi(z) + phi(z.conj());
    let even = |z: Complex64| phi(z) - phi(-z.conj());
    let z0 = Complex64::new(0.2, -0.5);
    for z in [Complex64::new(0.7, 0.3), Complex64::new(0.1, 0.6), Complex64::new(-0.5, -0.2)] {
        assert!(wrap(odd(z) - odd(z0)).abs() < 1e-12);
        assert!(wrap(even(z) - even(z0)).abs() < 1e-12);
    }
}

fn self_term_gap(cfg: &VortexConfiguration, j: usize, dist: f64) -> f64 {
    let v = cfg.vortices()[j];
    let w_tilde = vortex_velocity_conj(cfg, j).unwrap();
    (0..8)
        .map(|m| {
            let d = Complex64::from_polar(dist, PI * m as f64 / 4.0);
            let z = v.position + d;
            let singular = v.degree as f64 / (Complex64::i() * (z - v.position));
            (field_velocity_conj(cfg, z).unwrap() - singular - w_tilde).norm()
        })
        .fold(0.0, f64::max)
}

#[test]
fn disk_self_term_removal() {
    let cfg = random_config_apart(DomainGeometry::disk(1.0).unwrap(), 3, 600, 0.3);
    for j in 0..cfg.len() {
        assert!(self_term_gap(&cfg, j, 1e-4) < 1e-3);
        let ratio = self_term_gap(&cfg, j, 1e-4) / self_term_gap(&cfg, j, 1e-5);
        assert!((ratio - 10.0).abs() < 0.5, "{ratio}");
    }
}

#[test]
fn annulus_self_term_laws() {
    let cfg = VortexConfiguration::new(
        DomainGeometry::annulus(0.5, 1.5).unwrap(),
        vec![
            Vortex::at(Complex64::from_polar(1.0, 0.3), 1),
            Vortex::at(Complex64::from_polar(0.9, 2.5), -1),
            Vortex::at(Complex64::from_polar(1.1, 4.4), 1),
        ],
    )
    .unwrap();
    let routh = cfg.clone().with_self_interaction(SelfInteraction::Routh);
    for j in 0..cfg.len() {
        assert!(self_term_gap(&routh, j, 1e-4) < 1e-3);
        let ratio = self_term_gap(&routh, j, 1e-4) / self_term_gap(&routh, j, 1e-5);
        assert!((ratio - 10.0).abs() < 0.5, "{ratio}");
        // The reduced law differs from the near-field limit by i·n/(2z).
        let v = cfg.vortices()[j];
        let diff = vortex_velocity_conj(&routh, j).unwrap() - vortex_velocity_conj(&cfg, j).unwrap();
        let expected = Complex64::i() * v.degree as f64 / (2.0 * v.position);
        assert!((diff - expected).norm() < 1e-13);
        assert!(self_term_gap(&cfg, j, 1e-5) > 0.9 * expected.norm());
    }
}

#[test]
fn circle_limit_with_routh_self_term() {
    let disk = DomainGeometry::disk(1.0).unwrap();
    for count in 1..=4 {
        let cfg = random_config(disk, count, 800 + count as u64);
        let gaps: Vec<f64> = [1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&r1| circle_limit_check_with(&cfg, r1, SelfInteraction::Routh).unwrap())
            .collect();
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
        assert!(gaps[2] < 1e-6, "{gaps:?}");
    }
}

#[test]
fn circle_limit_of_reduced_law_stalls() {
    let cfg = VortexConfiguration::new(DomainGeometry::disk(1.0).unwrap(), vec![Vortex::new(0.5, 0.0, 1)]).unwrap();
    // |i/(2·0.5)| / |W̃′| = 1 / (2/3)
    let gap = circle_limit_check(&cfg, 1e-4).unwrap();
    assert!((gap - 1.5).abs() < 1e-6, "{gap}");
}
