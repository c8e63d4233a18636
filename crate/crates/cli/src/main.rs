use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use pig_core::constructors::{brandt, cyclic_group, left_zero, subset_meet_semilattice, symmetric_inverse};
use pig_core::green::green_classes;
use pig_core::pig::{build_pig, PigVariant, Reduction};
use pig_core::skeletal::{
    brute_force_has_proper_skeletal, brute_force_min_skeletal_order, is_skeleton, max_skeletal,
    quotient, twin_partition, verify_skeletal,
};
use pig_core::spectral::{
    adjacency_matrix, eigen_multiplicity, laplacian_matrix, signless_laplacian_matrix,
    twin_spectral_report,
};
use pig_core::verify::{run_suite, Suite, VerifyParams};
use pig_core::{Graph, Partition, Semigroup, Side, VertexMap};

#[derive(Parser)]
#[command(name = "pig", version, about = "Principal ideal graphs of finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a semigroup and write its Cayley table as JSON.
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Ground-set size (isn, semilattice), group order (cyclic) or size (leftzero).
        #[arg(long)]
        n: Option<usize>,
        /// Order of the cyclic group used by brandt.
        #[arg(long, default_value_t = 1)]
        group_order: usize,
        /// Number of indices used by brandt.
        #[arg(long, default_value_t = 2)]
        indices: usize,
        #[arg(long)]
        adjoin_zero: bool,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a principal ideal graph or its Green-class quotient.
    Graph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Pig)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print order, degrees and connectivity of a graph.
    Stats {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print the L- or R-classes of a semigroup.
    Classes {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Check, compute or search for skeletals of a graph.
    Skeletal {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        op: SkeletalOp,
        /// Vertex map for `check`: {"map": [h-vertex per g-vertex]}.
        #[arg(long, required_if_eq("op", "check"))]
        map: Option<PathBuf>,
        /// Target graph for `check`; defaults to the quotient by the map's fibres.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Exact eigenvalue multiplicities.
    Spectral {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, requires = "lambda")]
        matrix: Option<MatrixArg>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
        #[arg(long, conflicts_with = "matrix")]
        twin_report: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        group_order: usize,
        #[arg(long, default_value_t = 2)]
        indices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Isn,
    Brandt,
    Semilattice,
    Cyclic,
    Leftzero,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Pig,
    Spig,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum SkeletalOp {
    Check,
    Max,
    IsSkeleton,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    #[value(name = "A")]
    A,
    #[value(name = "L")]
    L,
    #[value(name = "Q")]
    Q,
}

#[derive(Deserialize)]
struct MapFile {
    map: Vec<usize>,
}

/// Failure that is a reported result rather than an input problem.
struct CheckFailed;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_semigroup(path: &Path) -> Result<Semigroup> {
    Semigroup::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn build(family: FamilyArg, n: Option<usize>, group_order: usize, indices: usize) -> Result<Semigroup> {
    let need_n = || n.context("--n is required for this family");
    Ok(match family {
        FamilyArg::Isn => symmetric_inverse(need_n()?)?,
        FamilyArg::Brandt => brandt(&cyclic_group(group_order)?, indices)?,
        FamilyArg::Semilattice => subset_meet_semilattice(need_n()?)?,
        FamilyArg::Cyclic => cyclic_group(need_n()?)?,
        FamilyArg::Leftzero => left_zero(need_n()?)?,
    })
}

fn print_classes(s: &Semigroup, classes: &Partition) {
    for (i, class) in classes.classes().iter().enumerate() {
        let labels: Vec<String> = class.iter().map(|&x| s.label(x)).collect();
        println!("{i}: {}", labels.join(" "));
    }
}

fn run(cli: Cli) -> Result<std::result::Result<(), CheckFailed>> {
    match cli.command {
        Command::Build { family, n, group_order, indices, adjoin_zero, out } => {
            let mut s = build(family, n, group_order, indices)?;
            if adjoin_zero {
                s = s.adjoin_zero();
            }
            let json = s.to_json()?;
            let fmt = |x: Option<usize>| x.map_or("none".to_string(), |x| format!("{x} ({})", s.label(x)));
            let summary = format!(
                "order {}\nzero {}\nidentity {}\nidempotents {}",
                s.order(),
                fmt(s.zero()),
                fmt(s.identity()),
                s.idempotents().len()
            );
            match out {
                Some(path) => {
                    write_output(Some(&path), &json)?;
                    println!("{summary}");
                }
                None => {
                    println!("{json}");
                    eprintln!("{summary}");
                }
            }
        }
        Command::Graph { input, side, variant, format, out } => {
            let s = load_semigroup(&input)?;
            let reduction = match variant {
                VariantArg::Pig => Reduction::Full,
                VariantArg::Spig => Reduction::Skeletal,
            };
            let g = build_pig(&s, PigVariant { side: side.into(), reduction })?;
            let text = match format {
                Format::Dot => g.to_dot(),
                Format::Json => g.to_json()? + "\n",
                Format::Edges => g.to_edge_list(),
            };
            write_output(out.as_deref(), &text)?;
        }
        Command::Stats { graph } => {
            let g = load_graph(&graph)?;
            println!("{}", serde_json::to_string_pretty(&g.stats())?);
        }
        Command::Classes { input, side } => {
            let s = load_semigroup(&input)?;
            print_classes(&s, &green_classes(&s, side.into()));
        }
        Command::Skeletal { graph, op, map, target } => {
            let g = load_graph(&graph)?;
            match op {
                SkeletalOp::Check => {
                    let path = map.expect("clap enforces --map for check");
                    let file: MapFile = serde_json::from_str(&read(&path)?)
                        .with_context(|| format!("parsing {}", path.display()))?;
                    if file.map.len() != g.order() {
                        bail!("map has {} entries, graph has {} vertices", file.map.len(), g.order());
                    }
                    let (h, phi) = match target {
                        Some(t) => {
                            let h = load_graph(&t)?;
                            let phi = VertexMap::new(file.map, h.order())?;
                            (h, phi)
                        }
                        None => {
                            let partition = Partition::from_assignment(&file.map);
                            let order = file.map.iter().max().map_or(0, |m| m + 1);
                            if partition.len() != order {
                                bail!("map is not surjective onto 0..{order}");
                            }
                            match quotient(&g, &partition) {
                                Ok((h, _)) => (h, VertexMap::new(file.map, order)?),
                                Err(e) => {
                                    println!("not skeletal: {e}");
                                    return Ok(Err(CheckFailed));
                                }
                            }
                        }
                    };
                    let report = verify_skeletal(&g, &h, &phi)?;
                    println!("{}", serde_json::to_string_pretty(&report)?);
                    if !report.is_skeletal {
                        return Ok(Err(CheckFailed));
                    }
                }
                SkeletalOp::Max => {
                    let (h, phi) = max_skeletal(&g);
                    let doc = serde_json::json!({
                        "graph": serde_json::from_str::<serde_json::Value>(&h.to_json()?)?,
                        "map": phi.as_slice(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                SkeletalOp::IsSkeleton => {
                    let twins = twin_partition(&g);
                    println!("{}", is_skeleton(&g));
                    for class in twins.classes().iter().filter(|c| c.len() > 1) {
                        let labels: Vec<String> = class.iter().map(|&v| g.label(v)).collect();
                        println!("twins: {}", labels.join(" "));
                    }
                }
                SkeletalOp::Brute => {
                    println!("has_proper_skeletal {}", brute_force_has_proper_skeletal(&g)?);
                    println!("min_skeletal_order {}", brute_force_min_skeletal_order(&g)?);
                }
            }
        }
        Command::Spectral { graph, matrix, lambda, twin_report } => {
            let g = load_graph(&graph)?;
            if twin_report {
                let report = twin_spectral_report(&g);
                println!("{}", serde_json::to_string_pretty(&report)?);
                if !report.all_pass {
                    return Ok(Err(CheckFailed));
                }
            } else if let (Some(m), Some(lambda)) = (matrix, lambda) {
                let (name, mat) = match m {
                    MatrixArg::A => ("A", adjacency_matrix(&g)),
                    MatrixArg::L => ("L", laplacian_matrix(&g)),
                    MatrixArg::Q => ("Q", signless_laplacian_matrix(&g)),
                };
                println!("mult({name}, {lambda}) = {}", eigen_multiplicity(&mat, lambda)?);
            } else {
                let lambda = lambda.context("--lambda or --twin-report is required")?;
                println!("mult(A, {lambda}) = {}", eigen_multiplicity(&adjacency_matrix(&g), lambda)?);
                println!("mult(L, {lambda}) = {}", eigen_multiplicity(&laplacian_matrix(&g), lambda)?);
                println!(
                    "mult(Q, {lambda}) = {}",
                    eigen_multiplicity(&signless_laplacian_matrix(&g), lambda)?
                );
            }
        }
        Command::Verify { suite, n, group_order, indices, seed, json } => {
            let suite: Suite = suite.parse()?;
            let params = VerifyParams { n, group_order, indices, seed };
            let result = run_suite(suite, &params)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&result)?);
            } else {
                println!("{result}");
            }
            if !result.passed {
                return Ok(Err(CheckFailed));
            }
        }
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CheckFailed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
