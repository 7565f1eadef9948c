use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use goepel_core::pipeline::report::ClaimsReport;
use goepel_core::pipeline::stages::{run_stage, StageConfig, STAGES};
use goepel_core::pipeline::{self, GoepelSystem};
use goepel_core::poly::mono::Order;
use goepel_core::poly::ring::Ring;
use goepel_core::poly::text::print_poly;
use goepel_core::relations::{self, search};
use goepel_core::theta::{SiegelPoint, ThetaSample};
use rand::SeedableRng;
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "goepel", about = "Exact verification toolkit for the genus-3 Göpel variety")]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, ValueEnum)]
enum IdealTask {
    Gb,
    Hilbert,
    Quotient,
    Cluster,
    Smooth,
}

#[derive(Clone, ValueEnum)]
enum RelKind {
    Linear,
    Cubic,
    Quartic,
}

#[derive(Subcommand)]
enum Command {
    /// Run one pipeline stage (or all of them) and write its report fragment.
    Run {
        /// Stage id; omit to run every stage in dependency order.
        #[arg(long)]
        stage: Option<String>,
        #[arg(long, default_value_t = 557)]
        prime: u64,
        #[arg(long, default_value_t = 1e-20)]
        precision: f64,
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
        /// Re-derive the Noether normalization with random forms.
        #[arg(long)]
        rederive: bool,
    },
    /// Merge stage report fragments in a directory and print the table.
    Report {
        #[arg(long, default_value = "out")]
        dir: PathBuf,
    },
    /// Enumerate Göpel groups and even characteristics.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        genus: usize,
    },
    /// Sample theta constants at random Siegel points.
    Theta {
        #[command(subcommand)]
        sub: ThetaCommand,
    },
    /// Export discovered relations in the shared plain-text format.
    Relations {
        #[arg(long, default_value_t = 3)]
        genus: usize,
        #[arg(long, value_enum)]
        kind: RelKind,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a.ideal, b.ideal and the manifest.
    Ideals {
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Run one heavyweight ideal-theoretic task on the Göpel ideals.
    Ideal {
        #[arg(long, value_enum)]
        task: IdealTask,
        #[arg(long, default_value_t = 557)]
        prime: u64,
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum ThetaCommand {
    /// Evaluate all even theta constants at K random points.
    Sample {
        #[arg(long, default_value_t = 3)]
        genus: usize,
        #[arg(long, default_value_t = 1)]
        points: usize,
        #[arg(long, default_value_t = 1e-20)]
        precision: f64,
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("thread pool already initialized")?;
    }
    match cli.command {
        Command::Run {
            stage,
            prime,
            precision,
            seed,
            out_dir,
            rederive,
        } => {
            let cfg = StageConfig {
                prime,
                precision,
                seed,
                out_dir,
                rederive,
            };
            let stages: Vec<&str> = match &stage {
                Some(s) => {
                    if !STAGES.contains(&s.as_str()) {
                        bail!("unknown stage `{s}` (expected one of {STAGES:?})");
                    }
                    vec![s.as_str()]
                }
                None => STAGES.to_vec(),
            };
            let mut failed = 0usize;
            for s in stages {
                eprintln!("== stage {s}");
                let fragment = run_stage(s, &cfg)?;
                print!("{}", fragment.render_table());
                failed += fragment.failed();
            }
            std::process::exit(failed.min(255) as i32);
        }
        Command::Report { dir } => {
            let mut merged: Option<ClaimsReport> = None;
            let mut entries: Vec<_> = std::fs::read_dir(&dir)?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| {
                    p.file_name()
                        .and_then(|n| n.to_str())
                        .map(|n| n.ends_with(".report.json"))
                        .unwrap_or(false)
                })
                .collect();
            entries.sort();
            if entries.is_empty() {
                bail!("no *.report.json fragments in {}", dir.display());
            }
            for path in entries {
                let fragment = ClaimsReport::load(&path)?;
                match &mut merged {
                    None => merged = Some(fragment),
                    Some(m) => m.merge(fragment),
                }
            }
            let report = merged.unwrap();
            print!("{}", report.render_table());
            report.save(&dir.join("claims.json"))?;
            std::process::exit(report.failed().min(255) as i32);
        }
        Command::Enumerate { genus } => {
            let groups = goepel_core::f2::enumerate_gopel_groups(genus)?;
            let evens = goepel_core::f2::even_table(genus as u8)?;
            println!(
                "genus {genus}: {} Göpel groups, {} even characteristics",
                groups.len(),
                evens.len()
            );
            for (i, g) in groups.iter().enumerate() {
                println!("{:>3}: coset {:?}", i + 1, g.coset_indices);
            }
        }
        Command::Theta { sub } => match sub {
            ThetaCommand::Sample {
                genus,
                points,
                precision,
                seed,
                out,
            } => {
                let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
                let mut lines = Vec::new();
                for k in 0..points {
                    let s = ThetaSample::new(SiegelPoint::sample(genus, precision, &mut rng)?)?;
                    lines.push(format!("# point {k}"));
                    for (i, v) in s.theta.iter().enumerate() {
                        lines.push(format!("theta[{}] = {} + {}*i", i + 1, v.re, v.im));
                    }
                }
                let text = lines.join("\n") + "\n";
                match out {
                    Some(p) => std::fs::write(p, text)?,
                    None => print!("{text}"),
                }
            }
        },
        Command::Relations { genus, kind, out } => {
            let table = relations::GopelMonomialTable::build(genus as u8)?;
            let mut f = std::io::BufWriter::new(std::fs::File::create(&out)?);
            match kind {
                RelKind::Linear => {
                    let tri = relations::find_trinomials(&table);
                    let signs = if genus == 3 {
                        relations::load_trinomial_signs(&tri)?
                    } else {
                        relations::discover_trinomial_signs(&table, &tri, 3, 20260823)?
                    };
                    for (t, s) in tri.iter().zip(&signs) {
                        writeln!(
                            f,
                            "{}*Y{} + {}*Y{} + {}*Y{}",
                            s[0],
                            t.groups[0] + 1,
                            s[1],
                            t.groups[1] + 1,
                            s[2],
                            t.groups[2] + 1
                        )?;
                    }
                }
                RelKind::Cubic => {
                    for (l, r) in search::cubic_relations(&table) {
                        writeln!(f, "{} - {}", support(&l), support(&r))?;
                    }
                }
                RelKind::Quartic => {
                    for (l, r) in search::quartic_relations(&table) {
                        writeln!(f, "{} - {}", support(&l), support(&r))?;
                    }
                }
            }
        }
        Command::Ideals { out_dir } => {
            let cfg = StageConfig {
                out_dir,
                ..Default::default()
            };
            let fragment = run_stage("g3-ideals", &cfg)?;
            print!("{}", fragment.render_table());
            std::process::exit(fragment.failed().min(255) as i32);
        }
        Command::Ideal {
            task,
            prime,
            seed,
            out_dir,
        } => {
            let cfg = StageConfig {
                prime,
                seed,
                out_dir: out_dir.clone(),
                ..Default::default()
            };
            match task {
                IdealTask::Gb => {
                    let system = GoepelSystem::build()?;
                    let gb = pipeline::b_groebner(&system, prime)?;
                    std::fs::create_dir_all(&out_dir)?;
                    let ring15 = Ring::numbered("Y", 15, Order::GrevLex);
                    goepel_core::pipeline::report::write_ideal(
                        &out_dir.join(format!("b.gb.f{prime}.ideal")),
                        "gb(b)",
                        &ring15,
                        "Fp",
                        Some(prime),
                        &gb.polys,
                    )?;
                    println!("Gröbner basis of b mod {prime}: {} elements", gb.polys.len());
                    let _ = print_poly(&gb.polys[0], &ring15);
                }
                IdealTask::Hilbert => {
                    let fragment = run_stage("g3-hilbert", &cfg)?;
                    print!("{}", fragment.render_table());
                    std::process::exit(fragment.failed().min(255) as i32);
                }
                IdealTask::Quotient => {
                    let fragment = run_stage("g3-quotient", &cfg)?;
                    print!("{}", fragment.render_table());
                    std::process::exit(fragment.failed().min(255) as i32);
                }
                IdealTask::Cluster => {
                    let fragment = run_stage("g3-cluster", &cfg)?;
                    print!("{}", fragment.render_table());
                    std::process::exit(fragment.failed().min(255) as i32);
                }
                IdealTask::Smooth => {
                    let fragment = run_stage("g3-smooth", &cfg)?;
                    print!("{}", fragment.render_table());
                    std::process::exit(fragment.failed().min(255) as i32);
                }
            }
        }
    }
    Ok(())
}

fn support(groups: &[usize]) -> String {
    groups
        .iter()
        .map(|g| format!("Y{}", g + 1))
        .collect::<Vec<_>>()
        .join("*")
}
