use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::MotionLaw;
use crate::domain::{DomainGeometry, VortexConfiguration};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Classical fixed-step Runge–Kutta of order 4.
    Rk4,
    /// Dormand–Prince 5(4) with error control and dense output.
    Rk45,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rk4" => Ok(Method::Rk4),
            "rk45" | "dopri5" => Ok(Method::Rk45),
            other => Err(format!("unknown method `{other}` (expected rk4 or rk45)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegratorParams {
    pub method: Method,
    /// Fixed step for RK4, initial step for RK45.
    pub dt: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub t_end: f64,
    /// Opposite-degree vortices closer than this annihilate.
    pub collision_eps: f64,
    /// Vortices closer than this to a boundary circle are absorbed.
    pub wall_eps: f64,
    /// Record samples on this uniform grid instead of at every step.
    pub sample_interval: Option<f64>,
    pub max_steps: usize,
}

impl IntegratorParams {
    /// Adaptive defaults scaled to the outer radius.
    pub fn for_domain(domain: &DomainGeometry, t_end: f64) -> Self {
        let r2 = domain.outer_radius();
        IntegratorParams {
            method: Method::Rk45,
            dt: 1e-3 * r2,
            rel_tol: 1e-8,
            abs_tol: 1e-10,
            t_end,
            collision_eps: 1e-2 * r2,
            wall_eps: 1e-2 * r2,
            sample_interval: None,
            max_steps: 10_000_000,
        }
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn rk4(mut self, dt: f64) -> Self {
        self.method = Method::Rk4;
        self.dt = dt;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("dt", self.dt),
            ("rel_tol", self.rel_tol),
            ("abs_tol", self.abs_tol),
            ("t_end", self.t_end),
            ("collision_eps", self.collision_eps),
            ("wall_eps", self.wall_eps),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidParams(format!("{name} must be positive, got {value}")));
            }
        }
        if let Some(s) = self.sample_interval {
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::InvalidParams(format!("sample_interval must be positive, got {s}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    PairAnnihilation,
    WallAbsorption,
}

impl EventKind {
    pub fn name(&self) -> &'static str {
        match self {
            EventKind::PairAnnihilation => "pair_annihilation",
            EventKind::WallAbsorption => "wall_absorption",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub t: f64,
    pub kind: EventKind,
    pub vortices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub t: f64,
    pub positions: Vec<Complex64>,
    pub alive: Vec<bool>,
}

/// Time-stamped vortex positions plus the discrete events met on the way.
#[derive(Debug, Clone)]
pub struct Trajectory {
    initial: VortexConfiguration,
    last: VortexConfiguration,
    samples: Vec<Snapshot>,
    events: Vec<Event>,
}

impl Trajectory {
    pub fn initial(&self) -> &VortexConfiguration {
        &self.initial
    }

    pub fn final_configuration(&self) -> &VortexConfiguration {
        &self.last
    }

    pub fn samples(&self) -> &[Snapshot] {
        &self.samples
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn final_time(&self) -> f64 {
        self.samples.last().map_or(0.0, |s| s.t)
    }

    /// Configuration recorded in sample `index`.
    pub fn configuration_at(&self, index: usize) -> VortexConfiguration {
        let s = &self.samples[index];
        let mut cfg = self.initial.with_positions(&s.positions);
        for (j, &alive) in s.alive.iter().enumerate() {
            if !alive {
                cfg.kill(j);
            }
        }
        cfg
    }
}

/// Advances every living vortex under `law` until `t_end` or until no
/// vortex is left, recording annihilation and wall-absorption events.
pub fn integrate<L: MotionLaw + ?Sized>(
    law: &L,
    config: &VortexConfiguration,
    params: &IntegratorParams,
) -> Result<Trajectory> {
    params.validate()?;
    let mut run = Run {
        law,
        params,
        cfg: config.clone(),
        t: 0.0,
        samples: Vec::new(),
        events: Vec::new(),
        next_sample: params.sample_interval.map(|_| 1),
    };
    run.process_events();
    run.record();
    run.advance()?;
    if run.samples.last().map_or(true, |s| s.t < run.t) {
        run.record();
    }
    Ok(Trajectory {
        initial: config.clone(),
        last: run.cfg,
        samples: run.samples,
        events: run.events,
    })
}

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

type State = Vec<Complex64>;

enum Dense {
    Dopri { y0: State, r2: State, r3: State, r4: State, r5: State },
    Hermite { y0: State, y1: State, f0: State, f1: State, h: f64 },
}

impl Dense {
    fn eval(&self, th: f64) -> State {
        match self {
            Dense::Dopri { y0, r2, r3, r4, r5 } => (0..y0.len())
                .map(|i| y0[i] + th * (r2[i] + (1.0 - th) * (r3[i] + th * (r4[i] + (1.0 - th) * r5[i]))))
                .collect(),
            Dense::Hermite { y0, y1, f0, f1, h } => {
                let h00 = 2.0 * th.powi(3) - 3.0 * th * th + 1.0;
                let h10 = th.powi(3) - 2.0 * th * th + th;
                let h01 = -2.0 * th.powi(3) + 3.0 * th * th;
                let h11 = th.powi(3) - th * th;
                (0..y0.len())
                    .map(|i| h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i])
                    .collect()
            }
        }
    }
}

struct Step {
    y1: State,
    f1: State,
    err: f64,
    dense: Dense,
}

struct Violation {
    slack: f64,
    ratio: f64,
    kind: EventKind,
    vortices: Vec<usize>,
}

struct Run<'a, L: ?Sized> {
    law: &'a L,
    params: &'a IntegratorParams,
    cfg: VortexConfiguration,
    t: f64,
    samples: Vec<Snapshot>,
    events: Vec<Event>,
    next_sample: Option<u64>,
}

fn axpy(y: &[Complex64], terms: &[(f64, &State)], h: f64) -> State {
    let mut out = y.to_vec();
    for &(coef, k) in terms {
        if coef != 0.0 {
            for (o, ki) in out.iter_mut().zip(k.iter()) {
                *o += h * coef * ki;
            }
        }
    }
    out
}

impl<L: MotionLaw + ?Sized> Run<'_, L> {
    fn f(&self, y: &[Complex64]) -> Result<State> {
        self.law.velocities(&self.cfg.with_positions(y))
    }

    fn record(&mut self) {
        self.samples.push(Snapshot {
            t: self.t,
            positions: self.cfg.positions(),
            alive: self.cfg.vortices().iter().map(|v| v.alive).collect(),
        });
    }

    fn violations(&self, y: &[Complex64]) -> Vec<Violation> {
        let mut out = Vec::new();
        let live: Vec<usize> = self.cfg.living().map(|(i, _)| i).collect();
        let vs = self.cfg.vortices();
        for (a, &i) in live.iter().enumerate() {
            for &j in &live[a + 1..] {
                if vs[i].degree == vs[j].degree {
                    continue;
                }
                let d = (y[i] - y[j]).norm();
                out.push(Violation {
                    slack: d - self.params.collision_eps,
                    ratio: d / self.params.collision_eps,
                    kind: EventKind::PairAnnihilation,
                    vortices: vec![i, j],
                });
            }
            let d = self.cfg.domain().wall_distance(y[i]);
            out.push(Violation {
                slack: d - self.params.wall_eps,
                ratio: d / self.params.wall_eps,
                kind: EventKind::WallAbsorption,
                vortices: vec![i],
            });
        }
        out
    }

    fn min_slack(&self, y: &[Complex64]) -> Option<Violation> {
        self.violations(y)
            .into_iter()
            .min_by(|a, b| a.slack.total_cmp(&b.slack))
    }

    /// Kills every vortex that sits inside a threshold, closest first.
    fn process_events(&mut self) {
        let y = self.cfg.positions();
        let mut hits: Vec<Violation> = self.violations(&y).into_iter().filter(|v| v.slack <= 0.0).collect();
        hits.sort_by(|a, b| a.ratio.total_cmp(&b.ratio));
        for hit in hits {
            if hit.vortices.iter().all(|&i| self.cfg.vortices()[i].alive) {
                for &i in &hit.vortices {
                    self.cfg.kill(i);
                }
                self.events.push(Event {
                    t: self.t,
                    kind: hit.kind,
                    vortices: hit.vortices,
                });
            }
        }
    }

    fn attempt(&self, y0: &State, f0: &State, h: f64) -> Result<Step> {
        match self.params.method {
            Method::Rk4 => {
                let k1 = f0;
                let k2 = self.f(&axpy(y0, &[(0.5, k1)], h))?;
                let k3 = self.f(&axpy(y0, &[(0.5, &k2)], h))?;
                let k4 = self.f(&axpy(y0, &[(1.0, &k3)], h))?;
                let y1 = axpy(y0, &[(1.0 / 6.0, k1), (1.0 / 3.0, &k2), (1.0 / 3.0, &k3), (1.0 / 6.0, &k4)], h);
                let f1 = self.f(&y1)?;
                Ok(Step {
                    dense: Dense::Hermite {
                        y0: y0.clone(),
                        y1: y1.clone(),
                        f0: f0.clone(),
                        f1: f1.clone(),
                        h,
                    },
                    y1,
                    f1,
                    err: 0.0,
                })
            }
            Method::Rk45 => {
                let mut k: Vec<State> = Vec::with_capacity(7);
                k.push(f0.clone());
                for s in 1..7 {
                    let terms: Vec<(f64, &State)> = (0..s).map(|r| (A[s][r], &k[r])).collect();
                    let ys = axpy(y0, &terms, h);
                    k.push(self.f(&ys)?);
                }
                debug_assert!(C[6] == 1.0);
                let terms: Vec<(f64, &State)> = (0..6).map(|r| (A[6][r], &k[r])).collect();
                let y1 = axpy(y0, &terms, h);
                let f1 = k[6].clone();

                let living = self.cfg.living_count().max(1) as f64;
                let mut acc = 0.0;
                for i in 0..y0.len() {
                    let e: Complex64 = (0..7).map(|s| E[s] * k[s][i]).sum::<Complex64>() * h;
                    for (ei, a, b) in [(e.re, y0[i].re, y1[i].re), (e.im, y0[i].im, y1[i].im)] {
                        let sc = self.params.abs_tol + self.params.rel_tol * a.abs().max(b.abs());
                        acc += (ei / sc).powi(2);
                    }
                }
                let err = (acc / (2.0 * living)).sqrt();

                let n = y0.len();
                let mut r2 = Vec::with_capacity(n);
                let mut r3 = Vec::with_capacity(n);
                let mut r4 = Vec::with_capacity(n);
                let mut r5 = Vec::with_capacity(n);
                for i in 0..n {
                    let dy = y1[i] - y0[i];
                    let bspl = h * k[0][i] - dy;
                    r2.push(dy);
                    r3.push(bspl);
                    r4.push(dy - h * k[6][i] - bspl);
                    r5.push(h * (0..7).map(|s| D[s] * k[s][i]).sum::<Complex64>());
                }
                Ok(Step {
                    dense: Dense::Dopri { y0: y0.clone(), r2, r3, r4, r5 },
                    y1,
                    f1,
                    err,
                })
            }
        }
    }

    fn emit_grid_samples(&mut self, dense: &Dense, t0: f64, h: f64, upto: f64) {
        let (Some(dt), Some(mut k)) = (self.params.sample_interval, self.next_sample) else {
            return;
        };
        while (k as f64) * dt <= upto + 1e-12 * upto.abs().max(1.0) {
            let ts = (k as f64 * dt).min(self.params.t_end);
            if ts > self.samples.last().map_or(f64::NEG_INFINITY, |s| s.t) {
                let y = dense.eval(((ts - t0) / h).clamp(0.0, 1.0));
                self.samples.push(Snapshot {
                    t: ts,
                    positions: y,
                    alive: self.cfg.vortices().iter().map(|v| v.alive).collect(),
                });
            }
            k += 1;
        }
        self.next_sample = Some(k);
    }

    fn advance(&mut self) -> Result<()> {
        let adaptive = self.params.method == Method::Rk45;
        let mut h = self.params.dt.min(self.params.t_end);
        let mut y = self.cfg.positions();
        let mut fy: Option<State> = None;
        let mut steps = 0usize;

        while self.t < self.params.t_end && self.cfg.living_count() > 0 {
            steps += 1;
            if steps > self.params.max_steps {
                return Err(Error::StepLimit {
                    steps: self.params.max_steps,
                    t: self.t,
                });
            }
            let remaining = self.params.t_end - self.t;
            let last = h >= remaining;
            let h_try = if last { remaining } else { h };
            let h_min = 1e-13 * self.t.abs().max(1.0);
            if h_try < h_min && !last {
                return Err(Error::StepUnderflow {
                    t: self.t,
                    h: h_try,
                    min_distance: self.cfg.min_pair_distance(),
                });
            }
            let f0 = match fy.take() {
                Some(f) => f,
                None => self.f(&y)?,
            };
            let step = match self.attempt(&y, &f0, h_try) {
                Ok(s) => s,
                Err(Error::CoincidentVortices { .. }) | Err(Error::Pole { .. }) => {
                    fy = Some(f0);
                    h = h_try * 0.25;
                    continue;
                }
                Err(e) => return Err(e),
            };
            if adaptive && !(step.err <= 1.0) {
                let factor = if step.err.is_finite() { (0.9 * step.err.powf(-0.2)).max(0.2) } else { 0.2 };
                h = h_try * factor;
                fy = Some(f0);
                continue;
            }

            // Scan the step for a threshold crossing.
            let mut crossing = None;
            let mut lo = 0.0;
            for th in [0.25, 0.5, 0.75, 1.0] {
                let yt = if th == 1.0 { step.y1.clone() } else { step.dense.eval(th) };
                match self.min_slack(&yt) {
                    Some(v) if v.slack < 0.0 => {
                        crossing = Some((lo, th, v));
                        break;
                    }
                    _ => lo = th,
                }
            }

            if let Some((mut a, mut b, v)) = crossing {
                // Only trust the interpolant of a step that ends just past
                // the threshold; otherwise shorten the step and retry.
                if (b < 1.0 || v.ratio < 0.5) && h_try > h_min {
                    h = if b < 1.0 { b * h_try } else { 0.5 * h_try };
                    fy = Some(f0);
                    continue;
                }
                while (b - a) * h_try > 1e-13 * self.t.abs().max(1.0) && b - a > 1e-15 {
                    let mid = 0.5 * (a + b);
                    match self.min_slack(&step.dense.eval(mid)) {
                        Some(v) if v.slack < 0.0 => b = mid,
                        _ => a = mid,
                    }
                }
                let t_event = self.t + b * h_try;
                self.emit_grid_samples(&step.dense, self.t, h_try, t_event);
                y = step.dense.eval(b);
                self.t = t_event;
                self.cfg = self.cfg.with_positions(&y);
                self.process_events();
                if self.samples.last().map_or(true, |s| s.t < self.t) {
                    self.record();
                } else if let Some(s) = self.samples.last_mut() {
                    s.alive = self.cfg.vortices().iter().map(|v| v.alive).collect();
                }
                fy = None;
                continue;
            }

            let t_next = if last { self.params.t_end } else { self.t + h_try };
            self.emit_grid_samples(&step.dense, self.t, h_try, t_next);
            self.t = t_next;
            y = step.y1;
            self.cfg = self.cfg.with_positions(&y);
            if self.params.sample_interval.is_none() {
                self.record();
            }
            fy = Some(step.f1);
            if adaptive {
                let factor = if step.err > 0.0 { (0.9 * step.err.powf(-0.2)).clamp(0.2, 5.0) } else { 5.0 };
                h = h_try * factor;
            } else if last {
                h = self.params.dt;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Vortex;
    use crate::dynamics::EquationKind;

    fn disk(vortices: Vec<Vortex>) -> VortexConfiguration {
        VortexConfiguration::new(DomainGeometry::disk(1.0).unwrap(), vortices).unwrap()
    }

    #[test]
    fn single_disk_vortex_orbits_at_known_rate() {
        // ż = 2 conj(W̃′) = 2i r/(R² − r²)·e^{iθ}: angular speed 2/(R² − r²).
        let cfg = disk(vec![Vortex::new(0.5, 0.0, 1)]);
        let params = IntegratorParams::for_domain(cfg.domain(), 3.0).with_tolerances(1e-11, 1e-13);
        let traj = integrate(&EquationKind::Schrodinger, &cfg, &params).unwrap();
        let z = traj.final_configuration().vortices()[0].position;
        let expected = Complex64::from_polar(0.5, 3.0 * 2.0 / 0.75);
        assert!((z - expected).norm() < 1e-8, "{z} vs {expected}");
        assert!(traj.events().is_empty());
        assert_eq!(traj.final_time(), 3.0);
    }

    #[test]
    fn samples_strictly_increase() {
        let cfg = disk(vec![Vortex::new(0.3, 0.0, 1), Vortex::new(-0.3, 0.0, -1)]);
        let mut params = IntegratorParams::for_domain(cfg.domain(), 2.0);
        params.sample_interval = Some(0.1);
        let traj = integrate(&EquationKind::Schrodinger, &cfg, &params).unwrap();
        assert_eq!(traj.samples().len(), 21);
        for w in traj.samples().windows(2) {
            assert!(w[1].t > w[0].t);
        }
    }

    #[test]
    fn heat_flow_pair_annihilates() {
        let cfg = disk(vec![Vortex::new(0.1, 0.0, 1), Vortex::new(-0.1, 0.0, -1)]);
        let params = IntegratorParams::for_domain(cfg.domain(), 10.0);
        let traj = integrate(&EquationKind::HeatFlow, &cfg, &params).unwrap();
        assert_eq!(traj.events().len(), 1);
        let e = &traj.events()[0];
        assert_eq!(e.kind, EventKind::PairAnnihilation);
        assert_eq!(e.vortices, vec![0, 1]);
        let last = traj.final_configuration();
        assert_eq!(last.living_count(), 0);
        let d = (last.vortices()[0].position - last.vortices()[1].position).norm();
        assert!((d - params.collision_eps).abs() < 1e-5, "{d}");
        assert!(traj.final_time() < 10.0);
    }

    #[test]
    fn initial_violation_is_an_immediate_event() {
        let cfg = disk(vec![Vortex::new(0.995, 0.0, 1), Vortex::new(0.0, 0.2, 1)]);
        let params = IntegratorParams::for_domain(cfg.domain(), 0.1);
        let traj = integrate(&EquationKind::HeatFlow, &cfg, &params).unwrap();
        assert_eq!(traj.events()[0].t, 0.0);
        assert_eq!(traj.events()[0].kind, EventKind::WallAbsorption);
        assert!(!traj.samples()[0].alive[0]);
    }

    #[test]
    fn rejects_bad_params() {
        let cfg = disk(vec![Vortex::new(0.3, 0.0, 1)]);
        let mut params = IntegratorParams::for_domain(cfg.domain(), 1.0);
        params.rel_tol = -1.0;
        assert!(matches!(
            integrate(&EquationKind::Schrodinger, &cfg, &params),
            Err(Error::InvalidParams(_))
        ));
    }
}
