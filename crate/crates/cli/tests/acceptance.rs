//! The acceptance criteria, one line each. Runs without the libtest
//! harness so the lines are always printed.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hypercell::bounds::{dimension_exclusion, nk_bound, NkBound, NkQuery};
use hypercell::circuits::{
    circuit_40_obstruction, closed_form_eigenvalues, find_circuits, gram_matrix, relative_gap, symmetric_eigenvalues,
    GramParams,
};
use hypercell::exact::int;
use hypercell::identities::{check_identities, reflection_covolume, right_angled_stabilizers, volume_units};
use hypercell::lattice::{canonical_24cell, combinatorially_isomorphic, hypercube, octahedron, FaceLattice};
use hypercell::octahedrites::{enumerate_octahedrites, is_antiprism, min_faces_with_kgon};
use hypercell::oracle;
use hypercell::patterns::verify_non_embedding_claims;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cell24() -> Outcome {
    let c = canonical_24cell();
    let f = c.f_vector();
    ensure(f.0 == [24, 96, 96, 24], format!("f-vector {f}"))?;
    let ids = check_identities(&c).map_err(|e| e.to_string())?;
    ensure(ids.all(), format!("{ids:?}"))?;
    let q = volume_units(&f, true).map_err(|e| e.to_string())?.q;
    ensure(q == int(4), format!("volume {q}"))?;
    let cube = hypercube(3).unwrap();
    for v in 0..24 {
        ensure(combinatorially_isomorphic(&c.vertex_figure(v).unwrap(), &cube).unwrap(), format!("vertex figure {v}"))?;
    }
    let octa = octahedron();
    for facet in c.facets() {
        let fl = c.face_lattice(c.find(facet).unwrap()).unwrap();
        ensure(combinatorially_isomorphic(&fl, &octa).unwrap(), format!("facet {facet:?}"))?;
    }
    Ok("f = (24, 96, 96, 24), identities hold, q = 4, 24 cubes, 24 octahedra".into())
}

fn zehrt() -> Outcome {
    let c = canonical_24cell();
    let (s2, s0) = right_angled_stabilizers(&c);
    let z = reflection_covolume(&c, &s2, &s0).map_err(|e| e.to_string())?.q;
    let v = volume_units(&c.f_vector(), true).map_err(|e| e.to_string())?.q;
    ensure(z == v, format!("covolume {z} vs volume {v}"))?;
    Ok(format!("covolume = volume = {z} exactly"))
}

fn proposition_one() -> Outcome {
    let mut parts = Vec::new();
    for k in 3..=5 {
        let m = min_faces_with_kgon(k, 12).map_err(|e| e.to_string())?;
        ensure(m.min_f2 == 2 * k + 2, format!("k = {k}: minimum {}", m.min_f2))?;
        ensure(m.witnesses.len() == 1, format!("k = {k}: {} witnesses", m.witnesses.len()))?;
        ensure(is_antiprism(&m.witnesses[0]) == Some(k), format!("k = {k}: witness is not the antiprism"))?;
        parts.push(format!("k={k}: {}", m.min_f2));
    }
    Ok(parts.join(", ") + "; unique antiprism witnesses")
}

fn octahedrites() -> Outcome {
    let cat = enumerate_octahedrites(10).map_err(|e| e.to_string())?;
    let counts = cat.counts_by_n();
    let first: Vec<usize> = (6..=9).map(|n| counts[&n]).collect();
    ensure(first == [1, 0, 1, 1], format!("counts 6..9 {first:?}"))?;
    ensure(is_antiprism(&cat.graphs(8)[0]) == Some(4), "n = 8 member is not the square antiprism")?;
    for n in 6..=10 {
        let o = oracle::octahedrites(n).len();
        ensure(counts[&n] == o, format!("n = {n}: generator {}, oracle {o}", counts[&n]))?;
    }
    Ok(format!("counts 6..10 = {:?}, oracle agrees", counts.values().collect::<Vec<_>>()))
}

fn patterns() -> Outcome {
    let cat = enumerate_octahedrites(10).map_err(|e| e.to_string())?;
    let report = verify_non_embedding_claims(&cat).map_err(|e| e.to_string())?;
    for c in &report.claims {
        ensure(c.holds, format!("{}: {}", c.claim, c.detail))?;
    }
    Ok(format!("{} claims hold over {} hosts", report.claims.len(), report.hosts_checked))
}

fn lemma_three() -> Outcome {
    let mut rng = StdRng::seed_from_u64(24);
    let mut worst = 0.0f64;
    for i in 0..10_000 {
        let (a, b) = (20.0 - rng.gen_range(0.0..20.0), 20.0 - rng.gen_range(0.0..20.0));
        let p = GramParams::new(a, b).map_err(|e| format!("sample {i}: {e}"))?;
        let closed = closed_form_eigenvalues(p);
        let numeric = symmetric_eigenvalues(&gram_matrix(p));
        for (x, y) in closed.iter().zip(numeric) {
            worst = worst.max(relative_gap(*x, y));
        }
        let o = circuit_40_obstruction(p);
        ensure(o.negative_count == 2, format!("sample {i} ({a}, {b}): {} negative", o.negative_count))?;
    }
    ensure(worst <= 1e-12, format!("relative gap {worst:e}"))?;
    Ok(format!("10^4 samples, max relative gap {worst:.1e}, always 2 negative"))
}

fn circuits() -> Outcome {
    let c = canonical_24cell();
    for (k, l) in [(3, 0), (4, 0), (2, 1)] {
        let found = find_circuits(&c, k, l).map_err(|e| e.to_string())?;
        ensure(found.is_empty(), format!("{} ({k},{l}) circuits", found.len()))?;
    }
    Ok("no (3,0), (4,0) or (2,1) circuits".into())
}

fn dimension_bound() -> Outcome {
    let b = |n| nk_bound(NkQuery::new(n, 4, 3).unwrap());
    ensure(b(7) == NkBound::Bound { value: int(20) }, format!("n = 7: {:?}", b(7)))?;
    ensure(b(8) == NkBound::Bound { value: int(20) }, format!("n = 8: {:?}", b(8)))?;
    ensure(b(6) == NkBound::Inapplicable, format!("n = 6: {:?}", b(6)))?;
    let ex = dimension_exclusion(24, 64);
    ensure(ex == (7..=64).collect::<Vec<_>>(), format!("excluded {ex:?}"))?;
    Ok("bounds 20, 20, inapplicable; excluded n = 7..64".into())
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hypercell")).args(args).output().expect("binary runs")
}

fn read_dir_bytes(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect()
}

fn determinism() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for (label, jobs) in [("a", "1"), ("b", "8"), ("c", "8")] {
        let dir = tmp.path().join(label);
        let out = run_cli(&[
            "--jobs",
            jobs,
            "enumerate",
            "--max-n",
            "14",
            "--oracle-max",
            "0",
            "--out",
            dir.to_str().unwrap(),
        ]);
        ensure(out.status.success(), format!("jobs {jobs}: {}", String::from_utf8_lossy(&out.stderr)))?;
        outputs.push(read_dir_bytes(&dir));
    }
    ensure(outputs[0].len() == 2, "expected catalog and manifest")?;
    ensure(outputs[0] == outputs[1], "1 vs 8 workers differ")?;
    ensure(outputs[1] == outputs[2], "two runs differ")?;
    Ok("catalog and manifest byte-identical for 1 and 8 workers and across runs".into())
}

fn corrupt(lattice: &FaceLattice, facet: usize) -> String {
    let text = lattice.to_text();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let row = 2 + facet;
    let mut vs: Vec<u32> = lines[row].split_whitespace().map(|x| x.parse().unwrap()).collect();
    let outside = (0..lattice.num_vertices() as u32).find(|v| !vs.contains(v)).unwrap();
    vs[0] = outside;
    vs.sort_unstable();
    lines[row] = vs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    lines.join("\n") + "\n"
}

fn mutation() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let c = canonical_24cell();
    let good = tmp.path().join("good.txt");
    std::fs::write(&good, c.to_text()).unwrap();
    let out = run_cli(&["verify-24cell", "--input", good.to_str().unwrap()]);
    ensure(out.status.code() == Some(0), "unmodified 24-cell does not pass")?;
    for facet in 0..24 {
        let bad = tmp.path().join(format!("bad{facet}.txt"));
        std::fs::write(&bad, corrupt(&c, facet)).unwrap();
        let out = run_cli(&["verify-24cell", "--input", bad.to_str().unwrap()]);
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.code() == Some(1) && stdout.contains("FAIL "), format!("facet {facet}: no check failed"))?;
    }
    Ok("each of 24 single-facet corruptions fails at least one check".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 24-cell verification", cell24, Duration::from_secs(1)),
        ("2 covolume consistency", zehrt, Duration::from_secs(1)),
        ("3 smallest polyhedra with a k-gon", proposition_one, Duration::from_secs(300)),
        ("4 octahedrite enumeration", octahedrites, Duration::from_secs(120)),
        ("5 pattern claims", patterns, Duration::from_secs(120)),
        ("6 Gram obstruction", lemma_three, Duration::from_secs(10)),
        ("7 circuit absence", circuits, Duration::from_secs(30)),
        ("8 dimension bound", dimension_bound, Duration::from_secs(1)),
        ("9 determinism", determinism, Duration::MAX),
        ("10 mutation sensitivity", mutation, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let over = if took > budget { format!(", over the {:?} budget", budget) } else { String::new() };
        match outcome {
            Ok(detail) => println!("acceptance {name}: PASS ({detail}; {:.2} s{over})", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("acceptance {name}: FAIL ({why}; {:.2} s{over})", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of 10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
