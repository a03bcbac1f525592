//! One handler per subcommand; each returns the `result` object.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};
use toric::cohomology::{box_stability_check, cohomology, default_box, CharacterBox, Method};
use toric::cuts::{cut_polytope_points, decompose_targets, four_coloring, normality_evidence, seymour_inequalities, Graph};
use toric::fans::{cartier_data, class_group, global_sections, positivity};
use toric::ideals::{default_names, is_toric_binomial, toric_ideal, Field, Polynomial, TermOrder};
use toric::matroids::{
    basis_variable_names, fedder_check, icp_check, matroid_base_polytope, matroid_toric_ideal, white_check_budgeted,
};
use toric::phylo::{complexity_estimate_budgeted, flows, move_generate_budgeted, phylo_toric_ideal, FiniteAbelianGroup, FlowTable};
use toric::polyhedra::{monoid_is_saturated_budgeted, Cone, PointConfig, Polytope};
use toric::triangulations::{check_sturmfels_correspondence, multiplicity_report, perturbed_weight, regular_subdivision};
use toric::Error;

use crate::args::{Command, CutsCommand, MatroidCommand, MethodChoice, PhyloCommand};
use crate::checks;
use crate::config::RunConfig;
use crate::error::{CliError, Result};
use crate::input;

pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Value> {
    match command {
        Command::Ideal(a) => ideal(&input::points(&a.points)?, cfg),
        Command::Normal(a) => normal(&input::points(&a.points)?, cfg),
        Command::VeryAmple(a) => {
            let c = input::points(&a.points)?;
            let p = Polytope::new(c.ambient_rank, &c.points)?;
            Ok(json!({ "very_ample": p.is_very_ample()?, "configuration_very_ample": c.is_very_ample()?, "dim": p.dim() }))
        }
        Command::Smooth(a) => {
            let c = input::points(&a.points)?;
            let p = Polytope::new(c.ambient_rank, &c.points)?;
            Ok(json!({ "smooth": p.is_smooth(), "dim": p.dim(), "vertices": p.vertices() }))
        }
        Command::HilbertBasis(a) => {
            let c = input::points(&a.points)?;
            let mut basis = Cone::new(c.ambient_rank, &c.points)?.hilbert_basis()?;
            basis.sort();
            Ok(json!({ "hilbert_basis": basis, "size": basis.len() }))
        }
        Command::Ehrhart(a) => ehrhart(&input::points(&a.points)?),
        Command::Classgroup(a) => {
            let g = class_group(&input::fan(&a.fan)?)?;
            Ok(json!({ "free_rank": g.free_rank, "torsion": strings(&g.torsion), "group": g.to_string() }))
        }
        Command::Cartier(a) => {
            let (fan, d) = input::fan_and_divisor(&a.fan.fan, &a.divisor)?;
            match cartier_data(&fan, &d) {
                Ok(data) => Ok(json!({ "cartier": true, "cones": fan.maximal_cones(), "local": data.local })),
                Err(Error::NotCartier { cone, solution }) => {
                    Ok(json!({ "cartier": false, "failing_cone": cone, "rational_solution": solution }))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Positivity(a) => {
            let (fan, d) = input::fan_and_divisor(&a.fan.fan, &a.divisor)?;
            to_value(&positivity(&fan, &d)?)
        }
        Command::Sections(a) => {
            let (fan, d) = input::fan_and_divisor(&a.fan.fan, &a.divisor)?;
            let s = global_sections(&fan, &d)?;
            Ok(json!({ "count": s.len(), "points": s.points }))
        }
        Command::Cohomology { divisor, radius, method } => {
            let (fan, d) = input::fan_and_divisor(&divisor.fan.fan, &divisor.divisor)?;
            let cbox = match radius.or(cfg.box_radius) {
                Some(r) => CharacterBox::symmetric(fan.ambient_rank(), r),
                None => default_box(&fan, &d)?,
            };
            sheaf_cohomology(&fan, &d, &cbox, *method)
        }
        Command::Triangulate { points, omega, check_correspondence } => {
            triangulate(&input::points(&points.points)?, omega, *check_correspondence)
        }
        Command::Cuts(c) => cuts(c, cfg),
        Command::Matroid(c) => matroid(c, cfg),
        Command::Phylo(c) => phylo(c, cfg),
        Command::Check(c) => checks::run(c, cfg),
        Command::Reproduce { .. } => Err(CliError::Usage("reproduce is handled by the runner".into())),
    }
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|source| CliError::Json { what: "result".into(), source })
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Generators with positive leading coefficient, rendered and sorted.
fn rendered(gens: &[Polynomial], names: &[String], order: &TermOrder) -> Vec<String> {
    let mut out: Vec<String> = gens.iter().map(|g| g.canonical_sign(order).display_with(names, order)).collect();
    out.sort();
    out
}

fn ideal(config: &PointConfig, cfg: &RunConfig) -> Result<Value> {
    let field = cfg.field()?;
    let order = cfg.term_order()?;
    let toric = toric_ideal(config, field)?;
    let gb = toric.groebner_budgeted(&order, cfg.budgets.pairs)?;
    let names = default_names(config.len());
    let mut out = json!({
        "nvars": config.len(),
        "variables": names,
        "field": field.to_string(),
        "order": order.name(),
        "generators": rendered(&gb, &names, &order),
        "binomial": gb.iter().all(|g| is_toric_binomial(g, config)),
    });
    if gb.iter().all(Polynomial::is_homogeneous) {
        let minimal = toric.minimal_generators()?;
        let degrees: Vec<u64> = minimal.generators().iter().map(Polynomial::total_degree).collect();
        out["minimal_generators"] = json!(rendered(minimal.generators(), &names, &TermOrder::GRevLex));
        out["max_degree"] = json!(degrees.into_iter().max().unwrap_or(0));
    }
    Ok(out)
}

fn normal(c: &PointConfig, cfg: &RunConfig) -> Result<Value> {
    let polytope = Polytope::new(c.ambient_rank, &c.points)?;
    let lifted = c.homogenized();
    let projective = monoid_is_saturated_budgeted(lifted.ambient_rank, &lifted.points, cfg.budgets.points)?;
    let affine = monoid_is_saturated_budgeted(c.ambient_rank, &c.points, cfg.budgets.points)?;
    Ok(json!({
        "normal": polytope.is_normal()?,
        "dim": polytope.dim(),
        "projectively_normal": projective.saturated,
        "projective_witness": projective.witness,
        "monoid_saturated": affine.saturated,
        "monoid_witness": affine.witness,
    }))
}

fn ehrhart(c: &PointConfig) -> Result<Value> {
    let p = Polytope::new(c.ambient_rank, &c.points)?;
    let poly = p.ehrhart()?;
    let d = p.dim();
    let check = d as u64 + 2;
    let counted = p.lattice_points(check).len();
    let predicted = poly.eval(check as i64);
    let consistent = predicted == BigRational::from_integer(BigInt::from(counted));
    Ok(json!({
        "dim": d,
        "coefficients": strings(&poly.coefficients),
        "degree": p.degree_of_variety()?.to_string(),
        "counts": (0..=check).map(|k| p.lattice_points(k).len()).collect::<Vec<_>>(),
        "check_dilation": check,
        "consistent": consistent,
    }))
}

fn sheaf_cohomology(fan: &toric::fans::Fan, d: &toric::fans::WeilDivisor, cbox: &CharacterBox, choice: MethodChoice) -> Result<Value> {
    let methods: &[Method] = match choice {
        MethodChoice::Coh1 => &[Method::Coh1],
        MethodChoice::Coh2 => &[Method::Coh2],
        MethodChoice::Both => &[Method::Coh1, Method::Coh2],
    };
    let mut results = Vec::new();
    let mut stable = true;
    for &m in methods {
        results.push(cohomology(m, fan, d, cbox)?);
        stable &= box_stability_check(m, fan, d, cbox)?;
    }
    let first = &results[0];
    if let Some(other) = results.iter().find(|r| r.dims != first.dims) {
        return Err(CliError::Mismatch(format!("coh1 gives {:?}, coh2 gives {:?}", first.dims, other.dims)));
    }
    let mut out = Map::new();
    for (p, dim) in first.dims.iter().enumerate() {
        out.insert(format!("H{p}"), json!(dim));
    }
    out.insert("dims".into(), json!(first.dims));
    out.insert("euler_characteristic".into(), json!(first.euler_characteristic()));
    out.insert("box".into(), json!({ "lo": cbox.lo, "hi": cbox.hi }));
    out.insert("box_stable".into(), json!(stable));
    out.insert("methods".into(), to_value(&methods)?);
    if methods.len() > 1 {
        out.insert("methods_agree".into(), json!(true));
    }
    let contributions: Vec<Value> =
        first.contributions.iter().map(|(m, p, rank)| json!({ "character": m, "degree": p, "rank": rank })).collect();
    out.insert("contributions".into(), Value::Array(contributions));
    Ok(Value::Object(out))
}

fn triangulate(c: &PointConfig, omega: &[i64], check: bool) -> Result<Value> {
    let sub = regular_subdivision(c, omega)?;
    let volumes: Vec<String> = sub.cells.iter().map(|cell| sub.cell_volume(cell).to_string()).collect();
    let mut out = json!({
        "cells": sub.cells,
        "dimension": sub.dimension(),
        "is_triangulation": sub.is_triangulation(),
        "unimodular": sub.is_triangulation() && sub.is_unimodular(),
        "cell_volumes": volumes,
        "volumes_add_up": sub.volumes_add_up(),
    });
    if check {
        let heights = if sub.is_triangulation() { omega.to_vec() } else { perturbed_weight(c, omega)? };
        let report = check_sturmfels_correspondence(c, &heights)?;
        let mult = multiplicity_report(c, &heights)?;
        out["correspondence"] = json!({
            "omega": heights,
            "holds": report.holds(),
            "faces_equal": report.faces_equal,
            "radical_identity": report.radical_identity,
            "triangulation": report.triangulation,
            "initial_complex_facets": report.initial_complex_facets,
            "initial_ideal": report.initial_ideal,
            "initial_squarefree": mult.initial_squarefree,
            "unimodular": mult.unimodular,
            "multiplicities_match": mult.consistent(),
        });
    }
    Ok(out)
}

fn proper(g: &Graph, colors: &[u8]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

fn cuts(c: &CutsCommand, cfg: &RunConfig) -> Result<Value> {
    match c {
        CutsCommand::Fourcolor(a) => {
            let g = input::graph(&a.graph)?;
            let parts = decompose_targets(&g)?;
            let colors = four_coloring(&g)?;
            Ok(json!({
                "decomposition": parts.map(|p| to_value(&p)).transpose()?,
                "coloring": colors,
                "proper": proper(&g, &colors),
            }))
        }
        CutsCommand::Facets(a) => {
            let g = input::graph(&a.graph)?;
            let ineqs = seymour_inequalities(&g)?;
            let pts = cut_polytope_points(&g)?;
            let violated = pts
                .points
                .iter()
                .flat_map(|x| ineqs.iter().map(move |c| (x, c)))
                .find(|(x, c)| x.iter().zip(c.iter()).map(|(a, b)| a * b).sum::<i64>() < 0);
            Ok(json!({
                "inequalities": ineqs,
                "count": ineqs.len(),
                "cut_vectors": pts.len(),
                "all_satisfied": violated.is_none(),
                "violation": violated.map(|(x, c)| json!({ "cut": x, "inequality": c })),
            }))
        }
        CutsCommand::NormalEvidence(a) => {
            let g = input::graph(&a.graph)?;
            to_value(&normality_evidence(&g, cfg.budgets.points)?)
        }
    }
}

fn render_with(g: &Polynomial, names: &[String]) -> String {
    g.display_with(names, &TermOrder::GRevLex)
}

fn matroid(c: &MatroidCommand, cfg: &RunConfig) -> Result<Value> {
    match c {
        MatroidCommand::White { matroid, d } => {
            let m = input::matroid(&matroid.matroid)?;
            to_value(&white_check_budgeted(&m, *d, cfg.budgets.nodes)?)
        }
        MatroidCommand::Fedder { matroid, candidate } => {
            let m = input::matroid(&matroid.matroid)?;
            let names = basis_variable_names(m.basis_count());
            let candidate = candidate.as_deref().map(|s| Polynomial::parse(s, &names, Field::Prime(2))).transpose()?;
            let report = fedder_check(&m, candidate.as_ref())?;
            Ok(json!({
                "field": Field::Prime(2).to_string(),
                "variables": names,
                "is_f_pure": report.is_f_pure,
                "witness": report.witness.as_ref().map(|w| render_with(w, &names)),
                "witness_modulo_squares": report.witness_modulo_squares.as_ref().map(|w| render_with(w, &names)),
                "colon_generators": report.colon.generators().iter().map(|g| render_with(g, &names)).collect::<Vec<_>>(),
                "candidate": report.candidate,
            }))
        }
        MatroidCommand::Polytope(a) => {
            let m = input::matroid(&a.matroid)?;
            let bp = matroid_base_polytope(&m)?;
            Ok(json!({
                "vertices": bp.polytope.vertices().len(),
                "dim": bp.polytope.dim(),
                "normal": bp.is_normal(),
                "witness": bp.normality.witness,
            }))
        }
        MatroidCommand::Icp { matroid, k } => to_value(&icp_check(&input::matroid(&matroid.matroid)?, *k)?),
        MatroidCommand::Ideal(a) => {
            let m = input::matroid(&a.matroid)?;
            let report = matroid_toric_ideal(&m)?;
            let names = basis_variable_names(m.basis_count());
            Ok(json!({
                "variables": names,
                "minimal_generators": rendered(report.minimal.generators(), &names, &TermOrder::GRevLex),
                "groebner_size": report.ideal.generators().len(),
                "max_degree": report.max_degree,
                "ground_size": report.ground_size,
                "within_ground_bound": report.within_ground_bound(),
            }))
        }
    }
}

fn group(spec: &str) -> Result<FiniteAbelianGroup> {
    Ok(spec.parse::<FiniteAbelianGroup>()?)
}

fn phylo(c: &PhyloCommand, cfg: &RunConfig) -> Result<Value> {
    match c {
        PhyloCommand::Flows(a) => {
            let g = group(&a.group)?;
            let all = flows(&g, a.n)?;
            let expected = (g.order() as u64).pow(a.n as u32 - 1);
            Ok(json!({ "group": g, "order": g.order(), "count": all.len(), "expected": expected, "flows": all }))
        }
        PhyloCommand::Complexity { group: a, max_degree } => {
            let g = group(&a.group)?;
            let report = complexity_estimate_budgeted(&g, a.n, *max_degree, cfg.budgets.nodes)?;
            let mut out = to_value(&report)?;
            out["within_group_order"] = json!(report.estimate <= g.order());
            Ok(out)
        }
        PhyloCommand::Path { group: spec, from, to, d } => {
            let g = group(spec)?;
            let t0 = FlowTable::new(&g, input::load_json(from, "table")?)?;
            let t1 = FlowTable::new(&g, input::load_json(to, "table")?)?;
            let path = move_generate_budgeted(&g, &t0, &t1, *d, cfg.budgets.nodes)?;
            Ok(match path {
                Some(p) => json!({ "connected": true, "length": p.length(), "tables": p.tables }),
                None => json!({ "connected": false }),
            })
        }
        PhyloCommand::Ideal(a) => {
            let g = group(&a.group)?;
            let report = phylo_toric_ideal(&g, a.n)?;
            let names = default_names(report.flows.len());
            Ok(json!({
                "flows": report.flows,
                "minimal_generators": rendered(report.minimal.generators(), &names, &TermOrder::GRevLex),
                "groebner_size": report.ideal.generators().len(),
                "max_degree": report.max_degree,
            }))
        }
    }
}
