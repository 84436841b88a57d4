//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

#[path = "../common/mod.rs"]
mod common;

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use common::{
    random_complex_matrix, random_complex_q, random_config, random_real_matrix, random_real_q, rel,
    rng, tangent_length_oracle,
};
use rand::Rng;
use threeterm::geometry::{
    cayley_disk_to_uhp, cayley_uhp_to_disk, disk_to_hyperboloid, hyp_distance_crossratio,
    hyp_distance_hyperboloid, hyperboloid_to_disk, BoundaryPoint, ClosedDiskPoint, DiskPoint,
    UhpPoint,
};
use threeterm::grassmann::reconstruct;
use threeterm::relations::{cross_ratio_points, rescaling_solve};
use threeterm::{
    ConcyclicConfig, Error, Matrix2x4, PluckerVector, Scalar, SixTuple, TorusElement, PAIRS,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const CONFIGS: usize = 1000;

fn configs() -> Vec<ConcyclicConfig> {
    let mut r = rng(0xacce_0001);
    (0..CONFIGS).map(|_| random_config(&mut r)).collect()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn four_relations(cfgs: &[ConcyclicConfig]) -> Outcome {
    const TOL: f64 = 1e-10;
    let mut worst = [0.0f64; 4];
    for cfg in cfgs {
        let res = cfg.measure_all().relative_residuals();
        for k in 0..4 {
            worst[k] = worst[k].max(res[k]);
        }
    }
    let max = worst.iter().copied().fold(0.0, f64::max);
    check(
        max <= TOL,
        format!(
            "{} configs, max relative residual d {:.1e}, t {:.1e}, lambda {:.1e}, P {:.1e} (tol {TOL:.0e})",
            cfgs.len(),
            worst[0],
            worst[1],
            worst[2],
            worst[3]
        ),
    )
}

fn rescaling_identities(cfgs: &[ConcyclicConfig]) -> Outcome {
    const TOL: f64 = 1e-10;
    let (mut chord_scaled, mut oracle, mut via_lambda, mut via_minor) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for cfg in cfgs {
        let m = cfg.measure_all();
        let r = cfg.radii();
        let (d, t, lambda, p) = (
            m.d.to_array(),
            m.t.to_array(),
            m.lambda.to_array(),
            m.p.to_array(),
        );
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let (ri, rj) = (r[i - 1], r[j - 1]);
            chord_scaled =
                chord_scaled.max(rel(t[k], (1.0 - ri).sqrt() * (1.0 - rj).sqrt() * d[k]));
            let (ci, cj) = (
                cfg.euclidean_center(i).unwrap(),
                cfg.euclidean_center(j).unwrap(),
            );
            oracle = oracle.max(rel(t[k], tangent_length_oracle(ci, ri, cj, rj)));
            via_lambda =
                via_lambda.max(rel(t[k], lambda[k] * (2.0 * ri).sqrt() * (2.0 * rj).sqrt()));
            via_minor = via_minor.max(rel(d[k], 2.0 * p[k]));
        }
    }
    let max = chord_scaled.max(oracle).max(via_lambda).max(via_minor);
    check(
        max <= TOL,
        format!(
            "max relative deviation t/d {chord_scaled:.1e}, t/tangent oracle {oracle:.1e}, t/lambda {via_lambda:.1e}, d/2P {via_minor:.1e} (tol {TOL:.0e})"
        ),
    )
}

fn degeneration() -> Outcome {
    const TOL: f64 = 1e-8;
    let mut r = rng(0xacce_0003);
    let mut worst = 0.0f64;
    let mut n = 0;
    while n < CONFIGS {
        let mut alpha: [f64; 4] = std::array::from_fn(|_| r.gen_range(0.0..std::f64::consts::PI));
        alpha.sort_by(f64::total_cmp);
        let Ok(cfg) = ConcyclicConfig::new(alpha, [1e-9; 4]) else {
            continue;
        };
        let m = cfg.measure_all();
        for (t, d) in m.t.to_array().iter().zip(m.d.to_array()) {
            worst = worst.max((t - d).abs());
        }
        n += 1;
    }
    check(
        worst <= TOL,
        format!("{n} configs with r = 1e-9, max |t - d| {worst:.1e} (tol {TOL:.0e})"),
    )
}

fn rel_err<S: Scalar>(a: S, b: S) -> f64 {
    (a - b).modulus() / a.modulus().max(b.modulus())
}

fn up_to_sign<S: Scalar>(got: &TorusElement<S>, want: &TorusElement<S>) -> f64 {
    let err = |g: &TorusElement<S>| {
        g.values()
            .iter()
            .zip(want.values())
            .map(|(&x, y)| rel_err(x, y))
            .fold(0.0, f64::max)
    };
    err(got).min(err(&got.negated()))
}

fn solver_round_trip() -> Outcome {
    const TOL: f64 = 1e-9;
    let mut r = rng(0xacce_0004);
    let (mut real, mut complex) = (0.0f64, 0.0f64);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let a = random_real_matrix(&mut r).minors().0;
        let q = TorusElement::new(random_real_q(&mut r)).unwrap();
        match rescaling_solve(&a, &a.torus_apply(&q), 1e-10) {
            Ok(got) => real = real.max(up_to_sign(&got, &q)),
            Err(e) => failures.push(format!("real: {e}")),
        }
        let a = random_complex_matrix(&mut r).minors().0;
        let q = TorusElement::new(random_complex_q(&mut r)).unwrap();
        match rescaling_solve(&a, &a.torus_apply(&q), 1e-10) {
            Ok(got) => complex = complex.max(up_to_sign(&got, &q)),
            Err(e) => failures.push(format!("complex: {e}")),
        }
    }
    let mut rejected = 0;
    let mut mismatched = 0;
    while mismatched < 100 {
        let a = random_real_matrix(&mut r).minors().0;
        let b0 = random_real_matrix(&mut r).minors().0;
        let (ka, kb) = (
            a.cross_ratio_invariant().unwrap(),
            b0.cross_ratio_invariant().unwrap(),
        );
        if (ka - kb).abs() <= 1e-6 * ka.abs().max(kb.abs()).max(1.0) {
            continue;
        }
        let b = b0.torus_apply(&TorusElement::new(random_real_q(&mut r)).unwrap());
        if matches!(
            rescaling_solve(&a, &b, 1e-10),
            Err(Error::NotSameOrbit { .. })
        ) {
            rejected += 1;
        }
        mismatched += 1;
    }
    let detail = format!(
        "1000 real + 1000 complex pairs, max relative error of ±q real {real:.1e}, complex {complex:.1e} (tol {TOL:.0e}); {rejected}/{mismatched} mismatched pairs rejected{}",
        if failures.is_empty() { String::new() } else { format!("; solver errors: {}", failures.join(", ")) }
    );
    check(
        failures.is_empty() && real <= TOL && complex <= TOL && rejected == mismatched,
        detail,
    )
}

fn round_trip_error<S: Scalar>(p: &SixTuple<S>) -> Result<f64, Error> {
    let m = reconstruct(&PluckerVector(*p), 1e-10)?;
    let scale = p.to_array().iter().map(|v| v.modulus()).fold(0.0, f64::max);
    let err = m
        .minors()
        .tuple()
        .to_array()
        .iter()
        .zip(p.to_array())
        .map(|(&x, y)| (x - y).modulus())
        .fold(0.0, f64::max);
    Ok(if scale == 0.0 { err } else { err / scale })
}

fn plucker_bidirectional() -> Outcome {
    const RESIDUAL_TOL: f64 = 1e-12;
    const ROUND_TRIP_TOL: f64 = 1e-10;
    let mut r = rng(0xacce_0005);
    let mut residual = 0.0f64;
    for _ in 0..1000 {
        residual = residual.max(
            random_real_matrix(&mut r)
                .minors()
                .tuple()
                .relative_residual(),
        );
        residual = residual.max(
            random_complex_matrix(&mut r)
                .minors()
                .tuple()
                .relative_residual(),
        );
    }
    let mut round_trip = 0.0f64;
    let mut errors = Vec::new();
    let mut record = |res: Result<f64, Error>| match res {
        Ok(e) => round_trip = round_trip.max(e),
        Err(e) => errors.push(e.to_string()),
    };
    for _ in 0..1000 {
        record(round_trip_error(
            random_real_matrix(&mut r).minors().tuple(),
        ));
        record(round_trip_error(
            random_complex_matrix(&mut r).minors().tuple(),
        ));
    }
    let mut zero_minor = 0;
    for k in 0..100 {
        let mut cols = random_real_matrix(&mut r).columns();
        // power-of-two factors keep the vanishing minor exactly zero
        let s = [-4.0, -2.0, -0.5, 0.5, 2.0, 4.0][r.gen_range(0..6)];
        let (src, dst) = [(0, 2), (1, 3), (0, 1), (2, 3), (0, 3), (1, 2)][k % 6];
        cols[dst] = [s * cols[src][0], s * cols[src][1]];
        let p = Matrix2x4::from_columns(cols).minors();
        if p.tuple().to_array().contains(&0.0) {
            zero_minor += 1;
        }
        record(round_trip_error(p.tuple()));
    }
    let zero = SixTuple::from_array([0.0f64; 6]);
    let zero_ok =
        reconstruct(&PluckerVector(zero), 1e-10).map(|m| m == Matrix2x4::zero()) == Ok(true);
    let detail = format!(
        "2000 matrices, max minor residual {residual:.1e} (tol {RESIDUAL_TOL:.0e}); 2000 + 100 zero-minor ({zero_minor} exact zeros) + zero tuple, max round-trip error {round_trip:.1e} (tol {ROUND_TRIP_TOL:.0e}); zero tuple {}{}",
        if zero_ok { "ok" } else { "FAILED" },
        if errors.is_empty() { String::new() } else { format!("; errors: {}", errors.join(", ")) }
    );
    check(
        residual <= RESIDUAL_TOL
            && round_trip <= ROUND_TRIP_TOL
            && errors.is_empty()
            && zero_minor == 100
            && zero_ok,
        detail,
    )
}

fn uhp_oracle(a: (f64, f64), b: (f64, f64)) -> f64 {
    2.0 * ((a.0 - b.0).hypot(a.1 - b.1) / (2.0 * (a.1 * b.1).sqrt())).asinh()
}

fn model_consistency() -> Outcome {
    const ROUND_TRIP_TOL: f64 = 1e-12;
    const DISTANCE_TOL: f64 = 1e-10;
    const LOG2_TOL: f64 = 1e-12;
    let mut r = rng(0xacce_0006);
    let (mut disk, mut cayley, mut ideal, mut dist) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let (rad, ang) = (
            r.gen_range(0.0..0.999f64),
            r.gen_range(0.0..std::f64::consts::TAU),
        );
        let p = DiskPoint::new(rad * ang.cos(), rad * ang.sin()).unwrap();
        let q = hyperboloid_to_disk(&disk_to_hyperboloid(&p));
        disk = disk.max((q.x() - p.x()).abs().max((q.y() - p.y()).abs()));

        let (re, im) = (r.gen_range(-3.0..3.0), r.gen_range(0.1..3.0));
        let w = UhpPoint::interior(re, im).unwrap();
        match cayley_disk_to_uhp(&cayley_uhp_to_disk(&w).unwrap()) {
            UhpPoint::Interior { re: r2, im: i2 } => {
                cayley = cayley.max((re - r2).abs().max((im - i2).abs()))
            }
            _ => cayley = f64::INFINITY,
        }

        let b = BoundaryPoint::new(r.gen_range(0.01..std::f64::consts::TAU - 0.01)).unwrap();
        match cayley_uhp_to_disk(&cayley_disk_to_uhp(&ClosedDiskPoint::Boundary(b))).unwrap() {
            ClosedDiskPoint::Boundary(b2) => ideal = ideal.max((b.theta() - b2.theta()).abs()),
            _ => ideal = f64::INFINITY,
        }

        let a = (r.gen_range(-2.0..2.0), r.gen_range(0.2..3.0));
        let c = (r.gen_range(-2.0..2.0), r.gen_range(0.2..3.0));
        let (w1, w2) = (
            UhpPoint::interior(a.0, a.1).unwrap(),
            UhpPoint::interior(c.0, c.1).unwrap(),
        );
        let cr = hyp_distance_crossratio(&w1, &w2).unwrap();
        let hyp =
            hyp_distance_hyperboloid(&w1.to_hyperboloid().unwrap(), &w2.to_hyperboloid().unwrap())
                .unwrap();
        dist = dist
            .max((cr - hyp).abs())
            .max((cr - uhp_oracle(a, c)).abs());
    }
    let log2 = hyp_distance_crossratio(
        &UhpPoint::interior(0.0, 1.0).unwrap(),
        &UhpPoint::interior(0.0, 2.0).unwrap(),
    )
    .map(|d| (d - std::f64::consts::LN_2).abs())
    .unwrap_or(f64::INFINITY);
    let round_trip = disk.max(cayley).max(ideal);
    check(
        round_trip <= ROUND_TRIP_TOL && dist <= DISTANCE_TOL && log2 <= LOG2_TOL,
        format!(
            "round trips disk/hyperboloid {disk:.1e}, Cayley interior {cayley:.1e}, Cayley ideal {ideal:.1e} (tol {ROUND_TRIP_TOL:.0e}); distance vs arccosh {dist:.1e} (tol {DISTANCE_TOL:.0e}); |d(i,2i) - log 2| {log2:.1e} (tol {LOG2_TOL:.0e})"
        ),
    )
}

fn cross_ratio_bridge() -> Outcome {
    const TOL: f64 = 1e-12;
    let mut r = rng(0xacce_0007);
    let mut worst = 0.0f64;
    let mut n = 0;
    let mut skipped = 0;
    while n < 1000 {
        let m = random_complex_matrix(&mut r);
        let p = m.minors();
        let (Ok(cols), Ok(inv)) = (
            cross_ratio_points(&m.columns()),
            p.tuple().cross_ratio_invariant(),
        ) else {
            skipped += 1;
            continue;
        };
        worst = worst.max((cols - inv).norm() / inv.norm().max(1.0));
        n += 1;
    }
    check(
        worst <= TOL,
        format!("{n} matrices ({skipped} skipped for zero denominators), max deviation {worst:.1e} (tol {TOL:.0e})"),
    )
}

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_threeterm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    manifest_path("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn cli_golden() -> Outcome {
    let mut problems = Vec::new();

    let square = fixture("square.json");
    let out = run_cli(&["measure", "--json", &square]);
    let golden =
        std::fs::read(manifest_path("tests/golden/square_measure.json")).unwrap_or_default();
    let golden_ok = out.status.code() == Some(0) && out.stdout == golden;
    if !golden_ok {
        problems.push("square report differs from golden".to_string());
    }

    let first = run_cli(&["render", &square]);
    let second = run_cli(&["render", &square]);
    let render_ok =
        first.status.code() == Some(0) && !first.stdout.is_empty() && first.stdout == second.stdout;
    if !render_ok {
        problems.push("render output not reproducible".to_string());
    }

    let cases: [(&[&str], &[&str], i32); 6] = [
        (&["measure"], &["malformed.json"], 2),
        (&["measure"], &["two_payloads.json"], 2),
        (&["measure"], &["overlap.json"], 3),
        (&["measure"], &["unordered.json"], 3),
        (&["rescale"], &["zero_entry.json", "invariant_one.json"], 3),
        (&["plucker", "reconstruct"], &["off_quadric.json"], 4),
    ];
    let mut codes_ok = 0;
    for (cmd, files, want) in cases {
        let paths: Vec<String> = files.iter().map(|f| fixture(f)).collect();
        let mut args = cmd.to_vec();
        args.extend(paths.iter().map(String::as_str));
        let got = run_cli(&args).status.code();
        if got == Some(want) {
            codes_ok += 1;
        } else {
            problems.push(format!(
                "{} {}: exit {got:?}, expected {want}",
                cmd.join(" "),
                files.join(" ")
            ));
        }
    }
    let detail = format!(
        "golden {}, render determinism {}, exit codes {codes_ok}/{}{}",
        if golden_ok { "bit-exact" } else { "MISMATCH" },
        if render_ok { "ok" } else { "FAILED" },
        cases.len(),
        if problems.is_empty() {
            String::new()
        } else {
            format!("; {}", problems.join("; "))
        }
    );
    check(problems.is_empty(), detail)
}

fn main() -> ExitCode {
    let cfgs = configs();
    let criteria: [Criterion; 8] = [
        ("four-relation suite", Box::new(|| four_relations(&cfgs))),
        (
            "rescaling identities",
            Box::new(|| rescaling_identities(&cfgs)),
        ),
        ("degeneration to Ptolemy", Box::new(degeneration)),
        ("solver round trip", Box::new(solver_round_trip)),
        (
            "Plucker relation both directions",
            Box::new(plucker_bidirectional),
        ),
        ("model consistency", Box::new(model_consistency)),
        ("cross-ratio bridge", Box::new(cross_ratio_bridge)),
        ("CLI golden tests", Box::new(cli_golden)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
