//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::OutputFormat;

#[derive(Clone, Debug, Parser)]
#[command(name = "toric", version, about = "Exact computations with toric ideals, polytopes, fans and their applications")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags accepted by every subcommand; they override the `--config` file.
#[derive(Clone, Debug, Default, Args)]
pub struct GlobalArgs {
    /// JSON run configuration
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Seed for randomized suites
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Coefficient field: QQ or GF(p)
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Term order: lex, grlex, grevlex or weight:w1,..,wn[:tiebreak]
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Maximum S-pairs processed by a Groebner basis computation
    #[arg(long = "budget-pairs", global = true, value_name = "N")]
    pub budget_pairs: Option<usize>,
    /// Maximum tables or multisets enumerated by move searches
    #[arg(long = "budget-nodes", global = true, value_name = "N")]
    pub budget_nodes: Option<usize>,
    /// Maximum lattice points enumerated by saturation tests
    #[arg(long = "budget-points", global = true, value_name = "N")]
    pub budget_points: Option<u64>,
    /// Wall-clock limit for one command
    #[arg(long = "budget-seconds", global = true, value_name = "S")]
    pub budget_seconds: Option<u64>,
    /// Output format; text prints tables where a command has one
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
}

/// A point configuration: inline JSON (`[[2],[3]]` or `{"ambient_rank":..,"points":..}`) or a file.
#[derive(Clone, Debug, Args)]
pub struct PointsArg {
    #[arg(long, value_name = "JSON|FILE")]
    pub points: String,
}

#[derive(Clone, Debug, Args)]
pub struct FanArg {
    /// Fan as inline JSON or a file
    #[arg(long, value_name = "JSON|FILE")]
    pub fan: String,
}

#[derive(Clone, Debug, Args)]
pub struct DivisorArgs {
    #[command(flatten)]
    pub fan: FanArg,
    /// Coefficients of the torus-invariant prime divisors, e.g. -5,-3,0,0
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1, required = true)]
    pub divisor: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Coh1,
    Coh2,
    Both,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Toric ideal of a point configuration
    Ideal(PointsArg),
    /// Normality of conv(S) and saturation of the homogenized configuration
    Normal(PointsArg),
    /// Very ampleness of conv(S)
    VeryAmple(PointsArg),
    /// Smoothness of conv(S)
    Smooth(PointsArg),
    /// Hilbert basis of the cone generated by the points
    HilbertBasis(PointsArg),
    /// Ehrhart polynomial and degree of conv(S)
    Ehrhart(PointsArg),
    /// Class group of the toric variety of a fan
    Classgroup(FanArg),
    /// Local Cartier data of a divisor
    Cartier(DivisorArgs),
    /// Global generation, ampleness and very ampleness of a divisor
    Positivity(DivisorArgs),
    /// Lattice points of the section polytope of a divisor
    Sections(DivisorArgs),
    /// Sheaf cohomology dimensions of O(D)
    Cohomology {
        #[command(flatten)]
        divisor: DivisorArgs,
        /// Half-width of the character box, e.g. 6 or ±6
        #[arg(long = "box", value_parser = parse_radius, allow_hyphen_values = true)]
        radius: Option<i64>,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodChoice,
    },
    /// Regular subdivision induced by heights
    Triangulate {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1, required = true)]
        omega: Vec<i64>,
        /// Also compare with the initial complex of the toric ideal
        #[arg(long)]
        check_correspondence: bool,
    },
    /// Cut polytopes of graphs
    #[command(subcommand)]
    Cuts(CutsCommand),
    /// Matroid base polytopes and toric ideals
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Group-based phylogenetic models on star trees
    #[command(subcommand)]
    Phylo(PhyloCommand),
    /// Seeded families and property suites
    #[command(subcommand)]
    Check(CheckCommand),
    /// Run the fixture suite and print a pass/fail table
    Reproduce {
        /// Run only fixtures whose criterion or name contains this text
        #[arg(long)]
        only: Vec<String>,
        /// Fixture directory (defaults to the one shipped with the crate)
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, Args)]
pub struct GraphArg {
    /// Graph as {"n": 4, "edges": [[0,1],...]}, inline or a file
    #[arg(long, value_name = "JSON|FILE")]
    pub graph: String,
}

#[derive(Clone, Debug, Subcommand)]
pub enum CutsCommand {
    /// Split (3,2,...,2) into three cuts and derive a proper 4-coloring
    Fourcolor(GraphArg),
    /// Seymour inequalities, checked against every cut vector
    Facets(GraphArg),
    /// Budgeted saturation test of the cut monoid
    NormalEvidence(GraphArg),
}

#[derive(Clone, Debug, Args)]
pub struct MatroidArg {
    /// {"ground": n, "bases": [...]}, {"type": "uniform", "r": 2, "n": 4} or {"type": "graphic", "graph": {...}}
    #[arg(long, value_name = "JSON|FILE", default_value = r#"{"type":"uniform","r":2,"n":4}"#)]
    pub matroid: String,
}

#[derive(Clone, Debug, Subcommand)]
pub enum MatroidCommand {
    /// Connectivity of basis-multiset fibers under symmetric exchanges
    White {
        #[command(flatten)]
        matroid: MatroidArg,
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Fedder's F-purity test over GF(2)
    Fedder {
        #[command(flatten)]
        matroid: MatroidArg,
        /// Polynomial in a1..aN to test for membership in the colon ideal
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Base polytope and its normality
    Polytope(MatroidArg),
    /// Integer Carathéodory property for a dilation
    Icp {
        #[command(flatten)]
        matroid: MatroidArg,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Toric ideal and its minimal generators
    Ideal(MatroidArg),
}

#[derive(Clone, Debug, Args)]
pub struct GroupArgs {
    /// Z2, Z3, Z2xZ2, Z4, ...
    #[arg(long)]
    pub group: String,
    /// Number of leaves
    #[arg(long)]
    pub n: usize,
}

#[derive(Clone, Debug, Subcommand)]
pub enum PhyloCommand {
    /// Flows on the star tree
    Flows(GroupArgs),
    /// Largest move size needed up to a table degree
    Complexity {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "max-degree", default_value_t = 3)]
        max_degree: usize,
    },
    /// Shortest move path between two compatible tables
    Path {
        /// Z2, Z3, Z2xZ2, Z4, ...
        #[arg(long)]
        group: String,
        /// Rows as a JSON array of flows
        #[arg(long, value_name = "JSON|FILE")]
        from: String,
        #[arg(long, value_name = "JSON|FILE")]
        to: String,
        /// Largest number of rows replaced per move
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Toric ideal of the star model
    Ideal(GroupArgs),
}

#[derive(Clone, Debug, Subcommand)]
pub enum CheckCommand {
    /// H^p(P^n, O(k)) against the binomial formulas, both methods
    ProjectiveSpaces {
        #[arg(long, default_value_t = 5)]
        k_max: i64,
    },
    /// Triangulations against initial complexes on random planar configurations
    Sturmfels {
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Cut decompositions, colorings and Seymour inequalities on the planar fixtures
    PlanarCuts,
    /// Exchange connectivity and base polytope normality on small matroids
    Matroids {
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Degree against normalized volume and Ehrhart counts
    Degrees,
    /// Randomized algebraic invariants
    Properties {
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

fn parse_radius(s: &str) -> Result<i64, String> {
    let t = s.trim().trim_start_matches('±').trim_start_matches("+-");
    let r: i64 = t.parse().map_err(|_| format!("\"{s}\" is not a box radius"))?;
    if r < 0 {
        return Err("box radius must be nonnegative".into());
    }
    Ok(r)
}

impl Command {
    /// Dotted command name, e.g. `matroid.white`.
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ideal(_) => "ideal",
            Command::Normal(_) => "normal",
            Command::VeryAmple(_) => "very-ample",
            Command::Smooth(_) => "smooth",
            Command::HilbertBasis(_) => "hilbert-basis",
            Command::Ehrhart(_) => "ehrhart",
            Command::Classgroup(_) => "classgroup",
            Command::Cartier(_) => "cartier",
            Command::Positivity(_) => "positivity",
            Command::Sections(_) => "sections",
            Command::Cohomology { .. } => "cohomology",
            Command::Triangulate { .. } => "triangulate",
            Command::Cuts(c) => match c {
                CutsCommand::Fourcolor(_) => "cuts.fourcolor",
                CutsCommand::Facets(_) => "cuts.facets",
                CutsCommand::NormalEvidence(_) => "cuts.normal-evidence",
            },
            Command::Matroid(c) => match c {
                MatroidCommand::White { .. } => "matroid.white",
                MatroidCommand::Fedder { .. } => "matroid.fedder",
                MatroidCommand::Polytope(_) => "matroid.polytope",
                MatroidCommand::Icp { .. } => "matroid.icp",
                MatroidCommand::Ideal(_) => "matroid.ideal",
            },
            Command::Phylo(c) => match c {
                PhyloCommand::Flows(_) => "phylo.flows",
                PhyloCommand::Complexity { .. } => "phylo.complexity",
                PhyloCommand::Path { .. } => "phylo.path",
                PhyloCommand::Ideal(_) => "phylo.ideal",
            },
            Command::Check(c) => match c {
                CheckCommand::ProjectiveSpaces { .. } => "check.projective-spaces",
                CheckCommand::Sturmfels { .. } => "check.sturmfels",
                CheckCommand::PlanarCuts => "check.planar-cuts",
                CheckCommand::Matroids { .. } => "check.matroids",
                CheckCommand::Degrees => "check.degrees",
                CheckCommand::Properties { .. } => "check.properties",
            },
            Command::Reproduce { .. } => "reproduce",
        }
    }
}
