//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line even when output capture is on; the
//! process exits nonzero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use qn_core::bounds::{bound_table, BoundReport};
use qn_core::constructions::{double, greedy_dominating_set, hamming_perfect_code};
use qn_core::solver::{naive_min_dominating, SearchConfig};
use qn_core::surfeit::{surfeit_of_set, zeta_m1, zeta_m2, Analysis, SurfeitProfile};
use qn_core::{congruence, CubeDim, DominatingSet, Vertex, VertexSet};
use qn_tools::solve::{solve, SolveConfig};
use qn_tools::witness;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn dim(n: u32) -> CubeDim {
    CubeDim::new(n).unwrap()
}

fn qn(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qn"))
        .args(args)
        .output()
        .expect("spawn qn");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:?}, limit {limit:?}"));
    }
    Ok(())
}

fn solve_exact(n: u32) -> Result<qn_core::solver::SearchResult, String> {
    solve(dim(n), &SolveConfig::default()).map_err(|e| format!("n={n}: {e}"))
}

fn q6_witness() -> DominatingSet {
    solve_exact(6).expect("n=6 search").witness
}

fn q12_doubled() -> DominatingSet {
    let mut d = q6_witness();
    for _ in 0..6 {
        d = double(&d).unwrap();
    }
    d
}

fn corpus() -> Vec<(String, DominatingSet)> {
    let mut out = Vec::new();
    for r in 2..=4 {
        out.push((format!("hamming r={r}"), hamming_perfect_code(r).unwrap()));
    }
    for n in 1..=12 {
        out.push((
            format!("greedy n={n}"),
            greedy_dominating_set(dim(n)).unwrap(),
        ));
    }
    for n in 1..=6 {
        out.push((format!("solver n={n}"), solve_exact(n).unwrap().witness));
    }
    let mut d = hamming_perfect_code(2).unwrap();
    for k in 1..=5 {
        d = double(&d).unwrap();
        out.push((format!("hamming r=2 doubled {k}x"), d.clone()));
    }
    out.push(("q6 minimum doubled 6x".into(), q12_doubled()));
    out
}

fn theorem2_ceilings() -> Outcome {
    let start = Instant::now();
    let (code, text) = qn(&["bounds", "--from", "6", "--to", "30", "--format", "json"]);
    ensure!(code == 0, "bounds exit {code}");
    let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let rows = doc["bounds"].as_array().ok_or("no bounds rows")?;
    let mut seen = Vec::new();
    for (n, want) in [(12u64, 348u64), (18, 14666), (24, 701709), (30, 35876816)] {
        let row = rows
            .iter()
            .find(|r| r["n"] == n)
            .ok_or(format!("missing n={n}"))?;
        let got = row["theorem2"]["ceiling"].as_u64();
        ensure!(
            got == Some(want),
            "n={n}: theorem2 ceiling {got:?}, want {want}"
        );
        seen.push(format!("{n}:{want}"));
    }
    within(start, Duration::from_secs(1), "bounds")?;
    Ok(seen.join(" "))
}

fn bound_ordering() -> Outcome {
    let start = Instant::now();
    let table: Vec<BoundReport> = bound_table(6, 30).map_err(|e| e.to_string())?;
    for n in [6u32, 12, 18, 24, 30] {
        let r = table.iter().find(|r| r.dim.get() == n).unwrap();
        let t2 = r.theorem2.ok_or(format!("n={n}: no theorem2"))?.ceiling;
        let vw = r.vanwee.ok_or(format!("n={n}: no vanwee"))?.ceiling;
        let sp = r.sphere.ceiling;
        ensure!(t2 >= vw && vw >= sp, "n={n}: {t2} >= {vw} >= {sp} fails");
    }
    within(start, Duration::from_secs(1), "bound table")?;
    Ok("n in {6,12,18,24,30}".into())
}

fn exact_gamma() -> Outcome {
    let expected = [1usize, 2, 2, 4, 7];
    for n in 1..=5u32 {
        let naive = naive_min_dominating(dim(n)).map_err(|e| e.to_string())?;
        let r = solve_exact(n)?;
        let want = expected[n as usize - 1];
        ensure!(
            naive.optimum == want && r.optimum == want && r.proven_optimal,
            "n={n}: solver {} naive {} want {want}",
            r.optimum,
            naive.optimum
        );
    }
    let start = Instant::now();
    let r = solve(
        dim(6),
        &SolveConfig {
            search: SearchConfig::default(),
            time_limit: Some(Duration::from_secs(600)),
            threads: 1,
        },
    )
    .map_err(|e| e.to_string())?;
    ensure!(
        r.optimum == 12 && r.proven_optimal && r.witness.revalidate(),
        "n=6: optimum {} proven {}",
        r.optimum,
        r.proven_optimal
    );
    Ok(format!(
        "1,2,2,4,7,12; n=6 proven in {:?} ({} nodes)",
        start.elapsed(),
        r.nodes_explored
    ))
}

fn perfect_codes() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    for r in [2u32, 3] {
        let n = (1u32 << r) - 1;
        let path = tmp.path().join(format!("h{r}.txt"));
        let path_s = path.to_str().unwrap();
        let (code, _) = qn(&[
            "construct",
            "hamming",
            "--r",
            &r.to_string(),
            "--out",
            path_s,
        ]);
        ensure!(code == 0, "construct r={r} exit {code}");
        let (code, text) = qn(&["verify", path_s]);
        ensure!(code == 0, "verify n={n} exit {code}");
        let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let size = doc["set_size"].as_u64().unwrap();
        ensure!(size * (n as u64 + 1) == 1 << n, "n={n}: size {size}");
        ensure!(
            doc["excess"]["total"] == 0,
            "n={n}: total excess {}",
            doc["excess"]["total"]
        );
        let d = DominatingSet::try_from(witness::read(Path::new(&path)).unwrap()).unwrap();
        ensure!(
            d.excess_profile().total() == 0,
            "n={n}: library total excess nonzero"
        );
    }
    Ok("n=3 size 2, n=7 size 16, zero excess".into())
}

fn excess_identity(corpus: &[(String, DominatingSet)]) -> Outcome {
    for (name, d) in corpus {
        let p = d.excess_profile();
        let lhs = p.total() as i64;
        let rhs = (d.dim().get() as i64 + 1) * d.len() as i64 - d.dim().order() as i64;
        ensure!(lhs == rhs, "{name}: {lhs} != {rhs}");
        let direct = d.excess_of_set(&VertexSet::full(d.dim())).unwrap() as i64;
        ensure!(direct == lhs, "{name}: direct sum {direct} != {lhs}");
    }
    Ok(format!("{} witnesses", corpus.len()))
}

fn surfeit_methods(corpus: &[(String, DominatingSet)]) -> Outcome {
    let mut negative_off_six = 0;
    for (name, d) in corpus {
        let p = d.excess_profile();
        let sp = SurfeitProfile::new(d, &p).unwrap();
        let direct = surfeit_of_set(&VertexSet::full(d.dim()), d).unwrap();
        let (m1, m2) = (zeta_m1(&p), zeta_m2(&sp));
        ensure!(
            m1 == direct && m2 == direct,
            "{name}: m1 {m1} m2 {m2} direct {direct}"
        );
        if direct < 0 && d.dim().get() % 6 != 0 {
            negative_off_six += 1;
        }
    }
    ensure!(
        negative_off_six > 0,
        "corpus has no negative total surfeit off multiples of six"
    );
    Ok(format!(
        "{} witnesses, {negative_off_six} with negative total at n not divisible by 6",
        corpus.len()
    ))
}

fn congruences(q6: &DominatingSet, q12: &DominatingSet) -> Outcome {
    for (d, order) in [(q6, 64usize), (q12, 4096)] {
        let r = congruence::check(d).map_err(|e| e.to_string())?;
        let n = d.dim().get();
        ensure!(
            r.vertices_checked == order,
            "n={n}: checked {}",
            r.vertices_checked
        );
        ensure!(
            r.is_clean(),
            "n={n}: {} parity, {} mod-3 violations",
            r.parity_violations.len(),
            r.mod3_violations.len()
        );
    }
    Ok("64 and 4096 vertices, no violations".into())
}

fn lemma_suite(q6: &DominatingSet, q12: &DominatingSet) -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for d in [q6, q12] {
        let n = d.dim().get();
        let path = tmp.path().join(format!("q{n}.txt"));
        witness::write(&path, d.members(), &[]).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let (code, text) = qn(&["lemmas", path.to_str().unwrap()]);
        within(start, Duration::from_secs(30), &format!("lemmas n={n}"))?;
        ensure!(code == 0, "n={n}: lemmas exit {code}");
        let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let lemmas = &doc["lemmas"];
        for k in 1..=5 {
            let l = &lemmas[format!("lemma{k}")];
            if k >= 4 && n < 12 {
                ensure!(l["status"] == "skipped", "n={n} lemma{k} not skipped");
                continue;
            }
            ensure!(l["status"] == "ran", "n={n} lemma{k}: {}", l["status"]);
            let v = l["violations"].as_array().map_or(usize::MAX, Vec::len);
            ensure!(v == 0, "n={n} lemma{k}: {v} violations");
            ensure!(
                l["vacuity"].as_object().is_some_and(|m| !m.is_empty()),
                "n={n} lemma{k}: no vacuity counts"
            );
            if k >= 4 {
                let slack = l["slack_x2"].as_i64().ok_or("missing slack")?;
                ensure!(slack >= 0, "n={n} lemma{k}: slack_x2 {slack}");
                notes.push(format!("L{k} slack_x2 {slack}"));
            }
        }
        notes.push(format!("n={n} in {:?}", start.elapsed()));
    }
    Ok(notes.join(", "))
}

/// `T_i(v)` from the definitions by a scan over every vertex.
fn brute_t(d: &DominatingSet, v: Vertex) -> [VertexSet; 5] {
    let dim = d.dim();
    let mut t: [VertexSet; 5] = std::array::from_fn(|_| VertexSet::new(dim));
    for u in dim.vertices() {
        if d.excess_of_vertex(u).unwrap() != 1 {
            continue;
        }
        let common = dim
            .vertices()
            .filter(|&w| d.contains(w) && w.distance(u) <= 1 && w.distance(v) <= 1)
            .count();
        let slot = match (u.distance(v), d.contains(u), common) {
            (1, false, _) => 0,
            (2, _, 0) => 1,
            (2, _, 2) => 2,
            (2, _, 1) => 3,
            (1, true, _) => 4,
            _ => continue,
        };
        t[slot].insert(u).unwrap();
    }
    t
}

fn partition_oracle(q12: &DominatingSet) -> Outcome {
    let a = Analysis::new(q12);
    let dim = q12.dim();
    let ones = a.excess().class(1);
    let mut centres = 0;
    for v in a.c().iter() {
        let part = a.t_partition(v).map_err(|e| e.to_string())?;
        ensure!(
            part.t == brute_t(q12, v),
            "centre {v}: partition differs from scan"
        );
        let mut ring = dim.sphere(v, 1).unwrap();
        ring.union_with(&dim.sphere(v, 2).unwrap()).unwrap();
        ring.intersect_with(&ones).unwrap();
        let total: usize = part.t.iter().map(VertexSet::len).sum();
        ensure!(
            total == ring.len(),
            "centre {v}: sum {total} != {}",
            ring.len()
        );
        centres += 1;
    }
    ensure!(centres > 0, "no centres with excess >= 2");
    Ok(format!("{centres} centres"))
}

fn main() {
    let q6 = q6_witness();
    let q12 = q12_doubled();
    let corpus = corpus();

    let criteria: Vec<Criterion> = vec![
        ("improved bound ceilings", Box::new(theorem2_ceilings)),
        ("bound ordering", Box::new(bound_ordering)),
        ("exact domination numbers", Box::new(exact_gamma)),
        ("perfect codes", Box::new(perfect_codes)),
        ("excess identity", Box::new(|| excess_identity(&corpus))),
        (
            "surfeit method agreement",
            Box::new(|| surfeit_methods(&corpus)),
        ),
        ("congruences", Box::new(|| congruences(&q6, &q12))),
        ("lemma suite", Box::new(|| lemma_suite(&q6, &q12))),
        ("partition oracle", Box::new(|| partition_oracle(&q12))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
