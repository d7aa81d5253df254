//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::Value;
use vrank_cli::{run, tables};
use vrank_core::bijections::{lambda_pd, phi, wright_m};
use vrank_core::families::{self, FamilyId, OddStaircase};
use vrank_core::oracle::{self, Theta};
use vrank_core::orbits::{build_orbits, o_hat, rotate_o, v_rank};
use vrank_core::{Element, Partition, Pipeline, VSpec, VTuple};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tuples(spec: &VSpec, n: u32) -> Result<Vec<VTuple>, String> {
    families::enumerate(&spec.family(), n)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|x| match x {
            Element::Tuple(cs) => VTuple::new(spec.clone(), cs).map_err(|e| e.to_string()),
            other => Err(format!("{other} is not a tuple")),
        })
        .collect()
}

/// Runs `orbits --n 5` through the CLI and checks the JSON against the table.
fn table_check(pipeline: Pipeline, orbit_count: usize) -> Outcome {
    let start = Instant::now();
    let out = run([
        "vrank",
        "orbits",
        "--family",
        pipeline.name(),
        "--n",
        "5",
        "--format",
        "json",
    ]);
    ensure(out.code == 0, || {
        format!("exit {}: {}", out.code, out.stderr)
    })?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let orbits = v["orbits"].as_array().ok_or("missing orbits")?;
    let rows = tables::table(pipeline);
    let mut seen = BTreeSet::new();
    let mut actual: BTreeSet<BTreeSet<String>> = BTreeSet::new();
    for orbit in orbits {
        let mut set = BTreeSet::new();
        for m in orbit.as_array().ok_or("orbit is not a list")? {
            let element = m[0].as_str().ok_or("element")?;
            let tuple = m[1].as_str().ok_or("tuple")?;
            let rank = m[2].as_i64().ok_or("rank")?;
            let row = rows
                .iter()
                .find(|r| r.0 == element)
                .ok_or(format!("unexpected {element}"))?;
            ensure(row.1 == tuple && row.2 == rank, || {
                format!(
                    "{element}: got {tuple} rank {rank}, expected {} rank {}",
                    row.1, row.2
                )
            })?;
            VTuple::parse(pipeline.spec(), tuple).map_err(|e| e.to_string())?;
            pipeline
                .domain()
                .parse_member(element)
                .map_err(|e| e.to_string())?;
            seen.insert(element.to_string());
            set.insert(element.to_string());
        }
        actual.insert(set);
    }
    ensure(seen.len() == rows.len(), || {
        format!("{} elements, expected {}", seen.len(), rows.len())
    })?;
    ensure(orbits.len() == orbit_count, || {
        format!("{} orbits, expected {orbit_count}", orbits.len())
    })?;
    let labels: BTreeSet<u32> = rows.iter().map(|r| r.3).collect();
    let expected: BTreeSet<BTreeSet<String>> = labels
        .into_iter()
        .map(|l| {
            rows.iter()
                .filter(|r| r.3 == l)
                .map(|r| r.0.to_string())
                .collect()
        })
        .collect();
    ensure(actual == expected, || "orbit partition differs".into())?;
    let md = run(["vrank", "orbits", "--family", pipeline.name(), "--n", "5"]);
    ensure(
        md.stdout.starts_with("| element | tuple | r_V | orbit |"),
        || "markdown header".into(),
    )?;
    ensure(md.stdout.lines().count() == rows.len() + 2, || {
        "markdown row count".into()
    })?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "{} elements, {} orbits, {t}",
        rows.len(),
        orbits.len()
    ))
}

fn anchors() -> Outcome {
    let t = phi(&p("4+4+2+2+1"));
    ensure(
        (t.core, t.even_a, t.even_b) == (p("1"), p("2"), p("6+4")),
        || "Φ".into(),
    )?;
    let d = "20+20+20'+4+4'+4+4+2'+2+1+1+1+1+1+1+1'+1"
        .parse()
        .map_err(|e: vrank_core::Error| e.to_string())?;
    let image = lambda_pd(&d).to_string();
    ensure(image == "(2;6+4;8+2+2;1;60+3)", || {
        format!("Λ_pd gave {image}")
    })?;
    let w = wright_m(&p("9+7+3"), &p("17+15+11+7+3+1")).map_err(|e| e.to_string())?;
    let tri = OddStaircase::new(3, true).map_err(|e| e.to_string())?;
    ensure(w.pi == p("16+16+14+8+6+4") && w.triangle == tri, || {
        format!("φ_m gave {} {:?}", w.pi, w.triangle)
    })?;
    let o = FamilyId::ordinary();
    let spec = VSpec::new(1, vec![o.clone(), o.clone(), o, FamilyId::Staircase])
        .map_err(|e| e.to_string())?;
    let v =
        VTuple::parse(spec, "(9+8+7+7+5+4;5+2+1;10+6+4+4+3+2;3+2+1)").map_err(|e| e.to_string())?;
    let v1 = o_hat(&v).map_err(|e| e.to_string())?;
    let v2 = o_hat(&v1).map_err(|e| e.to_string())?;
    let ranks = [v_rank(&v), v_rank(&v1), v_rank(&v2)];
    ensure(ranks == [3, 1, -1], || format!("ranks {ranks:?}"))?;
    Ok("Φ, Λ_pd(88), φ_m, ranks (3,1,-1)".into())
}

fn round_trips() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for pipeline in Pipeline::ALL {
        for n in 0..=24 {
            for x in families::enumerate(&pipeline.domain(), n).map_err(|e| e.to_string())? {
                let v = pipeline.forward(&x).map_err(|e| format!("{x}: {e}"))?;
                ensure(v.weight() == u64::from(n), || format!("{x} changes weight"))?;
                let back = pipeline.inverse(&v).map_err(|e| format!("{v}: {e}"))?;
                ensure(back == x, || format!("{x} -> {v} -> {back}"))?;
                checked += 1;
            }
            for v in tuples(&pipeline.spec(), n)? {
                let x = pipeline.inverse(&v).map_err(|e| format!("{v}: {e}"))?;
                ensure(x.weight() == u64::from(n), || format!("{v} changes weight"))?;
                let back = pipeline.forward(&x).map_err(|e| format!("{x}: {e}"))?;
                ensure(back == v, || format!("{v} -> {x} -> {back}"))?;
                checked += 1;
            }
        }
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} round trips, {t}"))
}

fn orbit_decomposition() -> Outcome {
    let mut slices = 0;
    for pipeline in Pipeline::ALL {
        for n in (2..=20).step_by(3) {
            let d =
                build_orbits(pipeline, n).map_err(|e| format!("{} n={n}: {e}", pipeline.name()))?;
            let count = families::count(&pipeline.domain(), n).map_err(|e| e.to_string())?;
            ensure(d.element_count() as u64 == count, || {
                format!("{} n={n} misses elements", pipeline.name())
            })?;
            ensure(count % 3 == 0, || format!("count {count} at n={n}"))?;
            for o in &d.orbits {
                ensure(o.rank_residues() == [0, 1, 2], || {
                    format!("residues {:?}", o.rank_residues())
                })?;
                let v = &o.members[0].tuple;
                let back = o_hat(
                    &o_hat(&o_hat(v).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?,
                )
                .map_err(|e| e.to_string())?;
                ensure(&back == v, || format!("Ô³ moves {v}"))?;
            }
            slices += 1;
        }
    }
    Ok(format!("{slices} slices"))
}

fn congruence_scans() -> Outcome {
    let start = Instant::now();
    let fams = [
        FamilyId::Designated,
        FamilyId::TwoColor,
        FamilyId::pod2(),
        FamilyId::overpartition_pairs(),
    ];
    for f in &fams {
        let s = oracle::family_series(f, 300).map_err(|e| e.to_string())?;
        let r = oracle::scan_congruence(&f.to_string(), &s, 3, 2, 300);
        ensure(r.violations.is_empty(), || {
            format!("{f}: {:?}", r.violations[0])
        })?;
    }
    let t = within(start, Duration::from_secs(30))?;
    for f in &fams {
        let s = oracle::family_series(f, 24).map_err(|e| e.to_string())?;
        oracle::validate_against_enumeration(f, &s, 24).map_err(|e| e.to_string())?;
    }
    Ok(format!(
        "4 families, 0 violations to 300, counts equal to 24, series {t}"
    ))
}

fn theta_values() -> Outcome {
    let tri = oracle::theta_series(Theta::Staircase, 100);
    let sq = oracle::theta_series(Theta::OddStaircase, 100);
    for n in 0..=100usize {
        let triangular = (0..=n).any(|k| k * (k + 1) / 2 == n);
        let square = (1..=n).any(|k| k * k == n);
        let want_tri = u8::from(triangular);
        let want_sq = if n == 0 {
            1
        } else if square {
            2
        } else {
            0
        };
        ensure(*tri.coefficient(n) == want_tri.into(), || {
            format!("staircase q^{n}")
        })?;
        ensure(*sq.coefficient(n) == want_sq.into(), || {
            format!("odd staircase q^{n}")
        })?;
    }
    Ok("q^0..q^100".into())
}

fn rotation() -> Outcome {
    let o = FamilyId::ordinary();
    let spec = VSpec::new(1, vec![o.clone(), o.clone(), o]).map_err(|e| e.to_string())?;
    let (mut total, mut fixed) = (0, 0);
    for n in 0..=12 {
        for v in tuples(&spec, n)? {
            let r = rotate_o(&v);
            ensure(rotate_o(&rotate_o(&r)) == v, || format!("O³ moves {v}"))?;
            let c = v.components();
            let diagonal = c[0] == c[1] && c[1] == c[2];
            ensure((r == v) == diagonal, || {
                format!("fixed-point mismatch at {v}")
            })?;
            total += 1;
            fixed += usize::from(diagonal);
        }
    }
    Ok(format!("{total} tuples, {fixed} fixed"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 PD orbit table, n = 5", || table_check(Pipeline::Pd, 5)),
        ("2 A orbit table, n = 5", || table_check(Pipeline::A, 4)),
        ("3 POD₋₂ orbit table, n = 5", || {
            table_check(Pipeline::Pod, 6)
        }),
        ("4 worked-example anchors", anchors),
        ("5 round trips, n ≤ 24", round_trips),
        (
            "6 orbit decomposition, n ≡ 2 mod 3, n ≤ 20",
            orbit_decomposition,
        ),
        ("7 congruence scans to 300", congruence_scans),
        ("8 theta spot values", theta_values),
        ("9 rotation order and fixed points, weight ≤ 12", rotation),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {name}: {reason}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
