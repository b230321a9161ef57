//! Subcommand bodies. Each returns a report; hard errors (bad input,
//! unreadable files) propagate and end the run with exit code 2.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use hypercell::bounds::{dimension_table, nk_bound, NkQuery};
use hypercell::circuits::{assert_forbidden_circuits, circuit_40_obstruction, GramParams};
use hypercell::exact;
use hypercell::identities::{
    certify_min_volume, check_identities, reflection_covolume, right_angled_stabilizers, volume_excess, volume_units,
    IdentityReport,
};
use hypercell::lattice::{canonical_24cell, combinatorially_isomorphic, hypercube, octahedron, FaceLattice};
use hypercell::octahedrites::{
    enumerate_octahedrites, is_antiprism, is_right_angled_candidate, CatalogManifest, OctahedriteCatalog,
};
use hypercell::oracle;
use hypercell::patterns::{
    find_embeddings, nu, omega, sigma, tau, verify_non_embedding_claims, PatternGraph, QuadReading,
};
use hypercell::planar::{octahedron_graph, PlanarGraph};
use hypercell::IdentityError;

use crate::report::RunReport;
use crate::{Cli, Command, HostChoice, ReadingChoice};

pub const CATALOG_FILE: &str = "octahedrites.pc";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const CATALOG_ENV: &str = "HYPERCELL_CATALOG_DIR";

pub fn run(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::Verify24Cell { input } => verify_24cell(input.as_deref()),
        Command::Enumerate { max_n, out, oracle_max } => enumerate(*max_n as usize, out.clone(), *oracle_max as usize),
        Command::Patterns { catalog, pattern, host, reading } => patterns(catalog.clone(), pattern, *host, *reading),
        Command::Bounds { min_f34, n_max } => Ok(bounds(*min_f34, *n_max as usize)),
        Command::Circuits { rho13, rho24, samples, input } => {
            circuits(*rho13, *rho24, *samples, cli.seed, input.as_deref())
        }
        Command::Volume { input, strict } => volume(input, *strict),
        Command::Schema => unreachable!("handled before dispatch"),
    }
}

fn catalog_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from)).unwrap_or_else(|| PathBuf::from("catalog"))
}

fn read_lattice(path: &Path) -> Result<(String, FaceLattice)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let lat = FaceLattice::from_text(&text).with_context(|| format!("parsing {}", path.display()));
    lat.map(|l| (text, l))
}

fn identity_checks(report: &mut RunReport, ids: &IdentityReport, f: &hypercell::FVector) {
    report.check("euler", ids.euler, format!("f0 - f1 + f2 - f3 = {}", f.euler_sum()));
    report.check("edge_vertex", ids.edge_vertex, format!("f1 = {}, 4 f0 = {}", f.get(1), 4 * f.get(0)));
    report.check("incidence_sum", ids.incidence_sum, "twelve 2-faces at every vertex");
}

fn verify_24cell(input: Option<&Path>) -> Result<RunReport> {
    let mut r = RunReport::new("verify-24cell");
    let lat = match input {
        None => {
            r.input("lattice", "built-in");
            canonical_24cell()
        }
        Some(path) => {
            r.input("lattice", path.display().to_string());
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            r.digest("input", text.as_bytes());
            match FaceLattice::from_text(&text) {
                Ok(l) => l,
                Err(e) => {
                    r.check("lattice_builds", false, e.to_string());
                    return Ok(r);
                }
            }
        }
    };
    if lat.dim() != 4 {
        r.check("dimension", false, format!("dimension {}", lat.dim()));
        return Ok(r);
    }
    let f = lat.f_vector();
    r.result("f_vector", &f);
    r.check("f_vector", f.0 == [24, 96, 96, 24], f.to_string());

    let ids = r.timed("identities", || check_identities(&lat))?;
    identity_checks(&mut r, &ids, &f);
    r.check("simple_at_edges", lat.is_simple_at_edges(), "every edge in three facets");

    let q = volume_units(&f, false)?.q;
    r.result("volume_units_q", exact::to_text(&q));
    r.check("volume", q == exact::int(4), format!("{} pi^2/3", exact::to_text(&q)));
    let (s2, s0) = right_angled_stabilizers(&lat);
    let z = reflection_covolume(&lat, &s2, &s0)?.q;
    r.check("covolume_matches_volume", z == q, format!("covolume {} pi^2/3", exact::to_text(&z)));

    let cube = hypercube(3)?;
    let mut bad_figures = Vec::new();
    r.timed("vertex_figures", || {
        for v in 0..lat.num_vertices() as u32 {
            let ok = lat.vertex_figure(v).and_then(|fig| combinatorially_isomorphic(&fig, &cube));
            if ok != Ok(true) {
                bad_figures.push(v);
            }
        }
    });
    r.check(
        "vertex_figures_are_cubes",
        bad_figures.is_empty(),
        format!("{} of {} are cubes", lat.num_vertices() - bad_figures.len(), lat.num_vertices()),
    );

    let octa = octahedron();
    let bad_facets = lat
        .facets()
        .iter()
        .filter(|facet| {
            let id = lat.find(facet).expect("facet is a face");
            lat.face_lattice(id).and_then(|fl| combinatorially_isomorphic(&fl, &octa)) != Ok(true)
        })
        .count();
    let nf = lat.facets().len();
    r.check("facets_are_octahedra", bad_facets == 0, format!("{} of {nf} are octahedra", nf - bad_facets));

    match r.timed("circuits", || assert_forbidden_circuits(&lat)) {
        Ok(c) => {
            let found = c.three_zero.len() + c.four_zero.len() + c.two_one.len();
            r.check("no_forbidden_circuits", c.is_clean(), format!("{found} circuit(s) of type (3,0), (4,0) or (2,1)"));
            r.result("forbidden_circuits", &c);
        }
        Err(e) => r.check("no_forbidden_circuits", false, e.to_string()),
    }

    match certify_min_volume(&lat) {
        Ok(cert) => {
            r.check("minimal_volume_certificate", true, cert.verdict.clone());
            r.result("certificate", &cert);
        }
        Err(e) => r.check("minimal_volume_certificate", false, e.to_string()),
    }
    Ok(r)
}

fn enumerate(max_n: usize, out: Option<PathBuf>, oracle_max: usize) -> Result<RunReport> {
    let mut r = RunReport::new("enumerate");
    let dir = catalog_dir(out);
    r.input("max_n", max_n);
    r.input("out", dir.display().to_string());
    r.input("oracle_max", oracle_max);

    let cat = r.timed("enumerate", || enumerate_octahedrites(max_n))?;
    let counts = cat.counts_by_n();
    r.result("counts_by_n", &counts);

    for n in 6..=max_n.min(oracle_max) {
        let expected = r.timed(&format!("oracle_n{n}"), || oracle::octahedrites(n).len());
        let got = counts[&n];
        r.check(&format!("oracle_n{n}"), got == expected, format!("generator {got}, oracle {expected}"));
    }
    if max_n >= 8 {
        let eight = cat.graphs(8);
        r.check(
            "n8_is_square_antiprism",
            eight.len() == 1 && is_antiprism(&eight[0]) == Some(4),
            format!("{} member(s)", eight.len()),
        );
    }

    let bytes = cat.to_planar_code();
    let manifest = serde_json::to_string_pretty(&cat.manifest())? + "\n";
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    fs::write(dir.join(CATALOG_FILE), &bytes)?;
    fs::write(dir.join(MANIFEST_FILE), &manifest)?;
    r.digest(CATALOG_FILE, &bytes);
    r.digest(MANIFEST_FILE, manifest.as_bytes());
    Ok(r)
}

fn load_catalog(r: &mut RunReport, dir: &Path) -> Result<OctahedriteCatalog> {
    let bytes = fs::read(dir.join(CATALOG_FILE)).with_context(|| format!("reading catalog in {}", dir.display()))?;
    let text = fs::read_to_string(dir.join(MANIFEST_FILE))
        .with_context(|| format!("reading manifest in {}", dir.display()))?;
    let manifest: CatalogManifest = serde_json::from_str(&text).context("parsing manifest")?;
    r.digest(CATALOG_FILE, &bytes);
    r.digest(MANIFEST_FILE, text.as_bytes());
    Ok(OctahedriteCatalog::from_parts(&bytes, &manifest)?)
}

fn readings(choice: Option<ReadingChoice>) -> Vec<QuadReading> {
    match choice {
        None => QuadReading::ALL.to_vec(),
        Some(ReadingChoice::Separate) => vec![QuadReading::Separate],
        Some(ReadingChoice::Merged) => vec![QuadReading::Merged],
    }
}

fn patterns(
    catalog: Option<PathBuf>,
    pattern: &str,
    host: HostChoice,
    reading: Option<ReadingChoice>,
) -> Result<RunReport> {
    let mut r = RunReport::new("patterns");
    r.input("pattern", pattern);
    r.input("host", format!("{host:?}").to_lowercase());

    if pattern == "claims" {
        let dir = catalog_dir(catalog);
        r.input("catalog", dir.display().to_string());
        let cat = load_catalog(&mut r, &dir)?;
        let report = r.timed("claims", || verify_non_embedding_claims(&cat))?;
        for (i, c) in report.claims.iter().enumerate() {
            r.check(
                &format!("claim_{}", ["tau", "sigma", "nu", "omega"].get(i).unwrap_or(&"extra")),
                c.holds,
                c.detail.clone(),
            );
        }
        r.result("readings", &report.readings);
        r.result("hosts_checked", report.hosts_checked);
        r.result("claims", &report.claims);
        return Ok(r);
    }

    let pats: Vec<PatternGraph> = match pattern {
        "tau" => vec![tau()],
        "sigma" => vec![sigma()],
        "nu" => readings(reading).into_iter().map(nu).collect(),
        "omega" => readings(reading).into_iter().map(omega).collect(),
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                vec![PatternGraph::from_json(&text)?]
            }
            None => bail!("unknown pattern {other:?}; use claims, tau, sigma, nu, omega or file:PATH"),
        },
    };

    let hosts: Vec<(usize, usize, PlanarGraph)> = match host {
        HostChoice::Octahedron => vec![(6, 0, octahedron_graph())],
        HostChoice::Catalog => {
            let dir = catalog_dir(catalog);
            r.input("catalog", dir.display().to_string());
            let cat = load_catalog(&mut r, &dir)?;
            cat.by_n.iter().flat_map(|(&n, gs)| gs.iter().enumerate().map(move |(i, g)| (n, i, g.clone()))).collect()
        }
    };

    let mut searches = Vec::new();
    for p in &pats {
        let base = p.without_refuted();
        let mut rows = Vec::new();
        let mut total = 0;
        for (n, index, g) in &hosts {
            let all = find_embeddings(&base, g, false)?.len();
            if all == 0 {
                continue;
            }
            total += all;
            let orbits = find_embeddings(&base, g, true)?.len();
            let mut row = json!({
                "n": n, "index": index, "embeddings": all, "orbits": orbits,
                "right_angled_candidate": is_right_angled_candidate(g),
            });
            if base.constraints.len() != p.constraints.len() {
                row["embeddings_meeting_refuted_constraint"] = json!(find_embeddings(p, g, false)?.len());
            }
            rows.push(row);
        }
        let mut t = format!("  {} ({}): {} embedding(s) in {} host(s)\n", p.name, p.reading, total, rows.len());
        for row in &rows {
            t += &format!("    n={} #{}: {}\n", row["n"], row["index"], row);
        }
        r.text.push(t);
        searches.push(json!({
            "pattern": p.name, "reading": p.reading,
            "vertices": p.num_vertices(), "edges": p.num_edges(),
            "total_embeddings": total, "hosts": rows,
        }));
    }
    r.result("hosts_searched", hosts.len());
    r.result("searches", searches);
    Ok(r)
}

fn bounds(min_f34: u64, n_max: usize) -> RunReport {
    let mut r = RunReport::new("bounds");
    r.input("min_f34", min_f34);
    r.input("n_max", n_max);
    let table = dimension_table(min_f34, n_max);
    let excluded: Vec<usize> = table.iter().filter(|row| row.excluded).map(|row| row.n).collect();
    let at = |n| nk_bound(NkQuery::new(n, 4, 3).expect("valid ranks")).value().map(exact::to_text);
    r.result("bound_n7", at(7));
    r.result("bound_n8", at(8));
    r.result("excluded", &excluded);
    let mut t = format!("  {:>4}  {:>12}  {:>10}  {:>8}\n", "n", "bound", "applicable", "excluded");
    for row in &table {
        t += &format!(
            "  {:>4}  {:>12}  {:>10}  {:>8}\n",
            row.n,
            row.bound.as_deref().unwrap_or("-"),
            if row.applicable { "yes" } else { "no" },
            if row.excluded { "yes" } else { "no" }
        );
    }
    r.text.push(t);
    r.result("table", &table);
    r
}

fn obstruction_checks(r: &mut RunReport, prefix: &str, rho13: f64, rho24: f64) -> Result<()> {
    let o = circuit_40_obstruction(GramParams::new(rho13, rho24)?);
    r.check(
        &format!("{prefix}closed_form_matches_numeric"),
        o.max_relative_gap <= 1e-12,
        format!("max relative gap {:.3e}", o.max_relative_gap),
    );
    r.check(
        &format!("{prefix}two_negative_eigenvalues"),
        o.negative_count == 2,
        format!("{} negative", o.negative_count),
    );
    r.check(&format!("{prefix}violates_lorentzian"), o.violates_lorentzian, "more than one negative eigenvalue");
    r.result(&format!("{prefix}obstruction"), &o);
    Ok(())
}

fn circuits(rho13: f64, rho24: f64, samples: u64, seed: u64, input: Option<&Path>) -> Result<RunReport> {
    let mut r = RunReport::new("circuits");
    r.input("rho13", rho13);
    r.input("rho24", rho24);
    r.input("samples", samples);
    r.input("seed", seed);
    obstruction_checks(&mut r, "", rho13, rho24)?;

    if samples > 0 {
        let mut rng = StdRng::seed_from_u64(seed);
        let (mut worst, mut wrong_count, mut rejected) = (0.0f64, 0u64, 0u64);
        r.timed("samples", || {
            for _ in 0..samples {
                let (a, b) = (20.0 - rng.gen_range(0.0..20.0), 20.0 - rng.gen_range(0.0..20.0));
                match GramParams::new(a, b) {
                    Ok(p) => {
                        let o = circuit_40_obstruction(p);
                        worst = worst.max(o.max_relative_gap);
                        wrong_count += u64::from(o.negative_count != 2);
                    }
                    Err(_) => rejected += 1,
                }
            }
        });
        r.check("samples_closed_form_matches_numeric", worst <= 1e-12, format!("max relative gap {worst:.3e}"));
        r.check(
            "samples_two_negative_eigenvalues",
            wrong_count == 0 && rejected == 0,
            format!("{wrong_count} wrong, {rejected} rejected"),
        );
    }

    if let Some(path) = input {
        let (text, lat) = read_lattice(path)?;
        r.input("lattice", path.display().to_string());
        r.digest("input", text.as_bytes());
        let c = r.timed("circuits", || assert_forbidden_circuits(&lat))?;
        let found = c.three_zero.len() + c.four_zero.len() + c.two_one.len();
        r.check("no_forbidden_circuits", c.is_clean(), format!("{found} found"));
        r.result("forbidden_circuits", &c);
    }
    Ok(r)
}

fn volume(input: &Path, strict: bool) -> Result<RunReport> {
    let mut r = RunReport::new("volume");
    r.input("lattice", input.display().to_string());
    r.input("strict", strict);
    let (text, lat) = read_lattice(input)?;
    r.digest("input", text.as_bytes());
    let f = lat.f_vector();
    r.result("f_vector", &f);
    let ids = check_identities(&lat)?;
    identity_checks(&mut r, &ids, &f);
    let q = volume_units(&f, strict)?.q;
    r.result("volume_units_q", exact::to_text(&q));
    r.result("volume", format!("{} pi^2/3", exact::to_text(&q)));
    if ids.all() {
        match volume_excess(&lat) {
            Ok(ex) => r.result("excess", &ex),
            Err(e) => r.check("excess_identity", false, e.to_string()),
        }
        match certify_min_volume(&lat) {
            Ok(cert) => r.result("certificate", &cert),
            Err(IdentityError::NotMinimal { q, excess }) => {
                r.result("certificate", json!({"verdict": "not minimal", "volume_units_q": q, "excess": excess}))
            }
            Err(e) => r.result("certificate", json!({"verdict": e.to_string()})),
        }
    }
    Ok(r)
}
