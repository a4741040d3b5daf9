//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the report reads top to bottom.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hitchin::bundle_poincare::{poincare_n_closed, poincare_n_recursion};
use hitchin::cli::{run_with, CliOutput, Settings};
use hitchin::exactpoly::coeff_extract_x;
use hitchin::geometry::{hitchin_base_dim, hn_leq, moduli_dim, spectral_numbers, HNType, Space};
use hitchin::git_stability::{
    hm_weight, hm_weight_filtered, hm_weight_graded, torus_classify, FiltrationBlock,
    FiltrationData, WeightProfile,
};
use hitchin::higgs_poincare::{poincare_m_closed, poincare_m_stratified};
use hitchin::{Genus, Group, ModuliParams};
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (CliOutput, Duration) {
    let mut argv = vec!["hitchin"];
    argv.extend_from_slice(args);
    let start = Instant::now();
    let out = run_with(argv, Settings::default());
    (out, start.elapsed())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:.2?}, limit {limit:.2?}")
    })
}

fn genus(g: u32) -> Genus {
    Genus::new(g).expect("genus >= 2")
}

fn poincare_both(space: &str, expected: &str, limit: Duration) -> Outcome {
    let (out, elapsed) = cli(&[
        "poincare", "--space", space, "--genus", "2", "--via", "both",
    ]);
    ensure(out.code == 0, || {
        format!("exit {}: {}", out.code, out.stderr)
    })?;
    let lines: Vec<&str> = out.stdout.lines().collect();
    let polys: Vec<&str> = lines[1..3]
        .iter()
        .map(|l| l.split_once(':').map_or("", |(_, p)| p.trim()))
        .collect();
    ensure(polys == [expected, expected], || format!("got {polys:?}"))?;
    within(elapsed, limit)?;
    Ok(format!("{expected} from both pipelines in {elapsed:.2?}"))
}

fn criterion_1() -> Outcome {
    poincare_both(
        "vector-bundles",
        "1 + t^2 + 4t^3 + t^4 + t^6",
        Duration::from_millis(100),
    )
}

fn criterion_2() -> Outcome {
    poincare_both(
        "higgs",
        "1 + t^2 + 4t^3 + 2t^4 + 34t^5 + 2t^6",
        Duration::from_millis(500),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for g in 2..=8 {
        let g = genus(g);
        let n_closed = poincare_n_closed(g).map_err(|e| e.to_string())?;
        let n_rec = poincare_n_recursion(g).map_err(|e| e.to_string())?;
        ensure(n_closed == n_rec, || {
            format!("bundle pipelines differ at genus {g}")
        })?;
        let m_closed = poincare_m_closed(g).map_err(|e| e.to_string())?;
        let m_strata = poincare_m_stratified(g).map_err(|e| e.to_string())?;
        ensure(m_closed == m_strata, || {
            format!("Higgs pipelines differ at genus {g}")
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("genus 2..8 agree in {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let mut slowest = Duration::ZERO;
    for (g, count) in [(2, 15), (3, 63), (4, 255), (5, 1023), (6, 4095)] {
        let gs = g.to_string();
        let (out, elapsed) = cli(&["--format", "json", "mirror", "--genus", &gs]);
        ensure(out.code == 0, || {
            format!("genus {g}: exit {} {}", out.code, out.stderr)
        })?;
        let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        ensure(v["elements_checked"] == count && v["pass"] == true, || {
            format!(
                "genus {g}: {} elements, pass = {}",
                v["elements_checked"], v["pass"]
            )
        })?;
        within(elapsed, Duration::from_secs(60))?;
        slowest = slowest.max(elapsed);
    }
    for mutation in ["shift", "pairing"] {
        for g in ["2", "4"] {
            let (out, _) = cli(&["mirror", "--genus", g, "--mutate", mutation]);
            ensure(out.code == 1, || {
                format!("--mutate {mutation} at genus {g} exited {}", out.code)
            })?;
        }
    }
    Ok(format!(
        "15/63/255/1023/4095 elements pass (genus 6 in {slowest:.2?}); both mutations exit 1"
    ))
}

fn random_filtration(rng: &mut StdRng) -> FiltrationData {
    loop {
        let s = rng.gen_range(1..=5);
        let dims: Vec<u64> = (0..s).map(|_| rng.gen_range(1..=6)).collect();
        let mut weights: Vec<i64> = (0..s).map(|_| rng.gen_range(-20..=20)).collect();
        weights.sort_unstable_by(|a, b| b.cmp(a));
        weights.dedup();
        if weights.len() != s {
            continue;
        }
        let n: i64 = dims.iter().map(|&d| d as i64).sum();
        let trace: i64 = dims.iter().zip(&weights).map(|(&d, &a)| d as i64 * a).sum();
        let blocks = dims
            .iter()
            .zip(&weights)
            .map(|(&dim, &a)| FiltrationBlock {
                dim,
                weight: n * a - trace,
                rank: rng.gen_range(1..=4),
                degree: rng.gen_range(-10..=10),
            })
            .collect();
        let g = genus(rng.gen_range(2..=8));
        return FiltrationData::new(blocks, rng.gen_range(0..=10), rng.gen_range(-5..=30), g)
            .expect("valid by construction");
    }
}

fn random_hn_type(rng: &mut StdRng, rank: u32, degree: i64) -> Option<HNType> {
    let mut blocks = Vec::new();
    let mut left = rank;
    let mut deg_left = degree;
    while left > 0 {
        let r = rng.gen_range(1..=left);
        left -= r;
        let d = if left == 0 {
            deg_left
        } else {
            rng.gen_range(-6..=6)
        };
        deg_left -= d;
        blocks.push((r, d));
    }
    HNType::new(blocks).ok()
}

fn criterion_5() -> Outcome {
    for g in 2..=10 {
        let p = poincare_n_closed(genus(g)).map_err(|e| e.to_string())?;
        ensure(p.is_palindromic_about(3 * (g as usize - 1)), || {
            format!("P_t(N) not palindromic at genus {g}")
        })?;
    }
    for g in 1..=8u32 {
        for n in 0..=12u32 {
            let p = coeff_extract_x(g, n);
            ensure(p.is_palindromic_about(n as usize), || {
                format!("S^{n}, genus {g} not palindromic")
            })?;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = if n <= 2 * g - 2 {
                binomial(BigInt::from(2 * g - 2), BigInt::from(n)) * sign
            } else {
                BigInt::from(0)
            };
            ensure(p.eval_i64(-1) == expected, || {
                format!("chi(S^{n}) wrong at genus {g}")
            })?;
        }
    }
    for r in 1..=6 {
        for g in 2..=10 {
            for (group, reduced) in [(Group::GL, false), (Group::SL, true)] {
                let params = ModuliParams::new(r, 1, g, group).map_err(|e| e.to_string())?;
                let higgs = moduli_dim(&params, Space::Higgs).map_err(|e| e.to_string())?;
                ensure(2 * hitchin_base_dim(r, genus(g), reduced) == higgs, || {
                    format!("half-dimension fails at r={r}, g={g}, {group}")
                })?;
            }
            let s = spectral_numbers(r, genus(g), 1).map_err(|e| e.to_string())?;
            ensure(
                2 * s.spectral_genus as i64 - 2
                    == i64::from(r) * (2 * i64::from(g) - 2) + s.ramification_degree as i64,
                || format!("Riemann-Hurwitz fails at r={r}, g={g}"),
            )?;
        }
    }
    let mut rng = StdRng::seed_from_u64(2024);
    for i in 0..1000 {
        let f = random_filtration(&mut rng);
        let graded = hm_weight_graded(&f);
        ensure(
            hm_weight_filtered(&f) == BigRational::from_integer(graded.clone()),
            || format!("weight expressions differ on filtration {i}"),
        )?;
        hm_weight(&f).map_err(|e| e.to_string())?;
    }
    let types: Vec<HNType> = (0..400)
        .filter_map(|_| random_hn_type(&mut rng, 4, 1))
        .collect();
    for a in &types {
        ensure(hn_leq(a, a) == Ok(true), || format!("{a} not <= itself"))?;
        for b in types.iter().take(60) {
            let ab = hn_leq(a, b).map_err(|e| e.to_string())?;
            let ba = hn_leq(b, a).map_err(|e| e.to_string())?;
            ensure(!(ab && ba) || a == b, || {
                format!("{a} and {b} violate antisymmetry")
            })?;
            for c in types.iter().take(20) {
                let bc = hn_leq(b, c).map_err(|e| e.to_string())?;
                let ac = hn_leq(a, c).map_err(|e| e.to_string())?;
                ensure(!(ab && bc) || ac, || {
                    format!("{a} <= {b} <= {c} not transitive")
                })?;
            }
        }
    }
    for _ in 0..2000 {
        let len = rng.gen_range(1..=6);
        let w: Vec<i64> = (0..len).map(|_| rng.gen_range(-10..=10)).collect();
        let c = rng.gen_range(1..=25);
        let p = WeightProfile::new(w.clone()).map_err(|e| e.to_string())?;
        let q = WeightProfile::new(w.iter().map(|x| x * c).collect()).map_err(|e| e.to_string())?;
        ensure(torus_classify(&p) == torus_classify(&q), || {
            format!("{w:?} changes under x{c}")
        })?;
    }
    Ok(format!(
        "palindromy, Euler characteristics, half-dimension, Riemann-Hurwitz, 1000 filtrations, Shatz order on {} types, scaling",
        types.len()
    ))
}

fn criterion_6() -> Outcome {
    let cases = [
        ("1,2", "weights {1, 2}: unstable (mu = 1)\n"),
        ("0", "weights {0}: strictly-polystable (mu = 0)\n"),
        ("-1,2", "weights {-1, 2}: stable (mu = -1)\n"),
    ];
    for (weights, expected) in cases {
        let (out, _) = cli(&["git", "classify", "--weights", weights]);
        ensure(out.code == 0 && out.stdout == expected, || {
            format!("{weights}: exit {}, {:?}", out.code, out.stdout)
        })?;
    }
    Ok("{1,2} unstable, {0} polystable, {-1,2} stable".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("vector-bundle Betti numbers, genus 2", criterion_1),
        ("Higgs Betti numbers, genus 2", criterion_2),
        ("cross-pipeline sweep, genus 2..8", criterion_3),
        ("mirror identity, genus 2..6, and mutations", criterion_4),
        ("property suites", criterion_5),
        ("GIT golden verdicts", criterion_6),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
