//! Families of instances checked in one command, for the larger acceptance items.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use toric::cohomology::{box_stability_check, cohomology, default_box, Method};
use toric::cuts::{cut_polytope_points, cut_vector, decompose_targets, four_coloring, planar_fixtures, seymour_inequalities, target_point};
use toric::fans::{divisor_of_character, Fan, WeilDivisor};
use toric::ideals::{is_toric_binomial, same_generators_over_fields, toric_ideal, toric_ideal_of_lattice, Field, Polynomial, TermOrder};
use toric::lattice::{kernel_lattice, IntMatrix};
use toric::matroids::{graphic_matroid, matroid_base_polytope, square_with_diagonal, uniform_matroid, white_check_budgeted, Matroid};
use toric::cuts::Graph;
use toric::polyhedra::{PointConfig, Polytope};
use toric::triangulations::{check_sturmfels_correspondence, multiplicity_report, normalized_volume, perturbed_weight, regular_subdivision};

use crate::args::CheckCommand;
use crate::config::RunConfig;
use crate::error::Result;

/// Counts cases and keeps a description of every failure.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn record(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self, extra: Value) -> Value {
        let mut out = json!({ "cases": self.cases, "failures": self.failures, "passed": self.failures.is_empty() });
        if let (Value::Object(o), Value::Object(e)) = (&mut out, extra) {
            o.extend(e);
        }
        out
    }
}

pub fn run(command: &CheckCommand, cfg: &RunConfig) -> Result<Value> {
    match command {
        CheckCommand::ProjectiveSpaces { k_max } => projective_spaces(*k_max),
        CheckCommand::Sturmfels { count } => sturmfels(*count, cfg.seed),
        CheckCommand::PlanarCuts => planar_cuts(),
        CheckCommand::Matroids { d } => matroids(*d, cfg),
        CheckCommand::Degrees => degrees(),
        CheckCommand::Properties { cases } => properties(*cases, cfg.seed),
    }
}

fn binomial(a: i64, k: i64) -> u64 {
    if a < 0 || k < 0 || k > a {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (a - i) as u64 / (i + 1) as u64)
}

fn projective_spaces(k_max: i64) -> Result<Value> {
    let mut tally = Tally::default();
    for n in 1..=3usize {
        let fan = Fan::projective_space(n);
        for k in -k_max..=k_max {
            let mut coeffs = vec![0; n + 1];
            coeffs[0] = k;
            let d = WeilDivisor::new(&fan, coeffs)?;
            let cbox = default_box(&fan, &d)?;
            let ni = n as i64;
            let mut expected = vec![0u64; n + 1];
            expected[0] = if k >= 0 { binomial(k + ni, ni) } else { 0 };
            expected[n] += if k < -ni { binomial(-k - 1, ni) } else { 0 };
            let coh1 = cohomology(Method::Coh1, &fan, &d, &cbox)?;
            let coh2 = cohomology(Method::Coh2, &fan, &d, &cbox)?;
            let stable = box_stability_check(Method::Coh1, &fan, &d, &cbox)? && box_stability_check(Method::Coh2, &fan, &d, &cbox)?;
            tally.record(coh1.dims == expected && coh2.dims == expected && stable, || {
                json!({ "n": n, "k": k, "expected": expected, "coh1": coh1.dims, "coh2": coh2.dims, "box_stable": stable })
            });
        }
    }
    Ok(tally.finish(json!({})))
}

/// `size` distinct points of `[0, 3]^2` not all on a line.
fn random_planar(rng: &mut ChaCha8Rng, size: usize) -> PointConfig {
    loop {
        let mut pts: Vec<Vec<i64>> = Vec::new();
        while pts.len() < size {
            let p = vec![rng.gen_range(0..=3), rng.gen_range(0..=3)];
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let config = PointConfig::new(2, pts).expect("planar points");
        if toric::triangulations::affine_dimension(&config) == 2 {
            return config;
        }
    }
}

fn sturmfels(count: usize, seed: u64) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let square = PointConfig::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])?;
    let mut instances: Vec<(PointConfig, Vec<i64>)> = vec![(square.clone(), vec![1, 0, 0, 0]), (square, vec![0, 1, 1, 0])];
    for _ in 0..count {
        let size = rng.gen_range(3..=6);
        let config = random_planar(&mut rng, size);
        let heights = (0..size).map(|_| rng.gen_range(0..=9)).collect();
        instances.push((config, heights));
    }
    let mut tally = Tally::default();
    let mut perturbed = 0;
    let mut non_unimodular = 0;
    for (config, heights) in instances {
        let heights = if regular_subdivision(&config, &heights)?.is_triangulation() {
            heights
        } else {
            perturbed += 1;
            perturbed_weight(&config, &heights)?
        };
        let report = check_sturmfels_correspondence(&config, &heights)?;
        let mult = multiplicity_report(&config, &heights)?;
        non_unimodular += usize::from(!mult.unimodular);
        tally.record(report.holds() && mult.consistent(), || {
            json!({ "points": config.points, "omega": heights, "faces_equal": report.faces_equal, "squarefree": mult.initial_squarefree, "unimodular": mult.unimodular })
        });
    }
    Ok(tally.finish(json!({ "seed": seed, "perturbed": perturbed, "non_unimodular": non_unimodular })))
}

fn planar_cuts() -> Result<Value> {
    let mut tally = Tally::default();
    let mut names = Vec::new();
    for (name, g) in planar_fixtures() {
        if g.vertex_count() > 7 {
            continue;
        }
        names.push(name);
        let parts = decompose_targets(&g)?;
        let sums_to_target = match &parts {
            Some(ps) => {
                let mut total = vec![0; g.edges().len() + 1];
                for p in ps {
                    for (t, x) in total.iter_mut().zip(cut_vector(&g, &p.a, &p.b)?) {
                        *t += x;
                    }
                }
                total == target_point(&g)
            }
            None => false,
        };
        let colors = four_coloring(&g)?;
        let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) && colors.iter().all(|c| (1..=4).contains(c));
        let seymour = if g.vertex_count() <= 6 {
            let ineqs = seymour_inequalities(&g)?;
            let pts = cut_polytope_points(&g)?;
            Some(pts.points.iter().all(|x| ineqs.iter().all(|c| c.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() >= 0)))
        } else {
            None
        };
        tally.record(sums_to_target && proper && seymour != Some(false), || {
            json!({ "graph": name, "decomposed": sums_to_target, "proper": proper, "seymour": seymour })
        });
    }
    Ok(tally.finish(json!({ "graphs": names })))
}

/// Connected graphs on at most six edges.
fn small_graphs() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::new(n, e.to_vec()).expect("fixture");
    vec![
        ("P4", Graph::path(4)),
        ("K3", Graph::cycle(3)),
        ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("square with diagonal", square_with_diagonal()),
        ("K4", Graph::complete(4)),
        ("K2,3", g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])),
        ("bowtie", g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])),
    ]
}

fn matroids(d: usize, cfg: &RunConfig) -> Result<Value> {
    let mut family: Vec<(String, Matroid)> = Vec::new();
    for r in 1..=3 {
        for n in r..=6 {
            family.push((format!("U({r},{n})"), uniform_matroid(r, n)?));
        }
    }
    for (name, g) in small_graphs() {
        family.push((format!("M({name})"), graphic_matroid(&g)?));
    }
    let mut tally = Tally::default();
    for (name, m) in &family {
        let mut connected = true;
        for degree in 2..=d {
            connected &= white_check_budgeted(m, degree, cfg.budgets.nodes)?.all_connected;
        }
        let normal = matroid_base_polytope(m)?.is_normal();
        tally.record(connected && normal, || json!({ "matroid": name, "white": connected, "normal": normal }));
    }
    Ok(tally.finish(json!({ "matroids": family.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(), "degree": d })))
}

fn degrees() -> Result<Value> {
    let mut tally = Tally::default();
    let mut check = |name: String, pts: Vec<Vec<i64>>, rank: usize, expected: Option<i64>| -> Result<()> {
        let p = Polytope::new(rank, &pts)?;
        let degree = p.degree_of_variety()?;
        let config = p.lattice_points(1);
        let volume = normalized_volume(&config);
        let poly = p.ehrhart()?;
        let k = p.dim() as i64 + 2;
        let counted = p.lattice_points(k as u64).len();
        let consistent = poly.eval(k).to_string() == counted.to_string();
        let ok = degree == volume && expected.is_none_or(|e| degree == e.into()) && consistent;
        tally.record(ok, || json!({ "polytope": name, "degree": degree.to_string(), "volume": volume.to_string(), "ehrhart_consistent": consistent }));
        Ok(())
    };
    for d in 1..=5 {
        check(format!("segment [0,{d}]"), vec![vec![0], vec![d]], 1, Some(d))?;
    }
    check("unit square".into(), vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], 2, Some(2))?;
    check("triangle 2Δ".into(), vec![vec![0, 0], vec![2, 0], vec![0, 2]], 2, Some(4))?;
    check("unit cube".into(), (0..8).map(|m| (0..3).map(|i| (m >> i) & 1).collect()).collect(), 3, Some(6))?;
    check("hexagon".into(), vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![-1, 0], vec![0, -1], vec![1, -1]], 2, Some(6))?;
    Ok(tally.finish(json!({})))
}

fn fixture_configs() -> Vec<(&'static str, PointConfig)> {
    let c = |r, pts: &[&[i64]]| PointConfig::new(r, pts.iter().map(|p| p.to_vec()).collect()).expect("fixture");
    vec![
        ("cusp", c(1, &[&[2], &[3]])),
        ("conic", c(2, &[&[1, 0], &[1, 1], &[1, 2]])),
        ("twisted cubic", c(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])),
        ("square", c(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).homogenized()),
        ("segment 0,1,3,4", c(1, &[&[0], &[1], &[3], &[4]]).homogenized()),
        ("3d configuration", c(3, &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1], &[3, 1, 1], &[4, 1, 1]])),
    ]
}

fn relation_basis(config: &PointConfig) -> Vec<Vec<i64>> {
    let cols: Vec<Vec<i64>> = (0..config.ambient_rank).map(|r| config.points.iter().map(|p| p[r]).collect()).collect();
    kernel_lattice(&IntMatrix::from_i64_rows(config.len(), &cols)).to_i64()
}

fn product_of_variables(n: usize, field: Field) -> Polynomial {
    (0..n).fold(Polynomial::constant(n, field, 1), |acc, i| acc.mul(&Polynomial::var(n, field, i)))
}

fn properties(cases: usize, seed: u64) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut configs: Vec<(String, PointConfig)> = fixture_configs().into_iter().map(|(n, c)| (n.to_string(), c)).collect();
    for i in 0..cases {
        let size = rng.gen_range(3..=5);
        configs.push((format!("random {i}"), random_planar(&mut rng, size).homogenized()));
    }
    let q = Field::Rationals;
    let mut binomiality = Tally::default();
    let mut exactness = Tally::default();
    let mut field_independence = Tally::default();
    let mut saturation = Tally::default();
    let mut groebner = Tally::default();
    for (name, config) in &configs {
        let ideal = toric_ideal(config, q)?;
        let binomial = ideal.generators().iter().all(|g| is_toric_binomial(g, config));
        binomiality.record(binomial, || json!(name));
        let untagged = toric_ideal_of_lattice(config.len(), &relation_basis(config), q, None)?;
        let same = ideal.same_ideal(&untagged)?;
        exactness.record(same, || json!(name));
        let independent = same_generators_over_fields(config)?;
        field_independence.record(independent, || json!(name));
        let order = TermOrder::GRevLex;
        let again = ideal.reduced(&order)?;
        groebner.record(again.generators() == ideal.generators(), || json!(name));
        if config.len() <= 5 {
            let f = product_of_variables(config.len(), q);
            let lattice = toric::ideals::Ideal::new(
                config.len(),
                q,
                relation_basis(config)
                    .iter()
                    .map(|u| {
                        let plus: Vec<u32> = u.iter().map(|&x| x.max(0) as u32).collect();
                        let minus: Vec<u32> = u.iter().map(|&x| (-x).max(0) as u32).collect();
                        Polynomial::binomial(q, &plus, &minus)
                    })
                    .collect(),
            )?;
            let once = lattice.saturate(&f)?;
            let twice = once.saturate(&f)?;
            let idempotent = once.same_ideal(&twice)? && once.same_ideal(&ideal)? && ideal.saturate(&f)?.same_ideal(&ideal)?;
            saturation.record(idempotent, || json!(name));
        }
    }
    let mut euler = Tally::default();
    let fans = [("P2", Fan::projective_space(2)), ("P1xP1", Fan::p1_x_p1()), ("F1", Fan::hirzebruch(1)), ("F2", Fan::hirzebruch(2))];
    for _ in 0..cases {
        let (name, fan) = &fans[rng.gen_range(0..fans.len())];
        let coeffs: Vec<i64> = (0..fan.rays().len()).map(|_| rng.gen_range(-3..=3)).collect();
        let m: Vec<i64> = (0..2).map(|_| rng.gen_range(-2..=2)).collect();
        let d = WeilDivisor::new(fan, coeffs.clone())?;
        let shifted = d.plus(&divisor_of_character(fan, &m));
        let a = cohomology(Method::Coh2, fan, &d, &default_box(fan, &d)?)?;
        let b = cohomology(Method::Coh2, fan, &shifted, &default_box(fan, &shifted)?)?;
        euler.record(a.euler_characteristic() == b.euler_characteristic() && a.dims == b.dims, || {
            json!({ "fan": name, "divisor": coeffs, "character": m, "dims": a.dims, "shifted_dims": b.dims })
        });
    }
    let suites = json!({
        "binomiality": binomiality.finish(json!({})),
        "exactness": exactness.finish(json!({})),
        "field_independence": field_independence.finish(json!({})),
        "saturation_idempotence": saturation.finish(json!({})),
        "groebner_idempotence": groebner.finish(json!({})),
        "euler_characteristic": euler.finish(json!({})),
    });
    let passed = suites.as_object().expect("object").values().all(|s| s["passed"] == json!(true));
    Ok(json!({ "seed": seed, "suites": suites, "passed": passed }))
}
