//! Command line front end: analyze algebra description files, inspect
//! Jordan types of named forms, and explore commutator patterns and Young
//! diagrams.
//!
//! Exit codes: 0 success, 2 input error (with location), 3 quotient not
//! finite dimensional, 4 internal invariant violation.

mod job;
mod render;
mod run;

use std::fs;
use std::panic;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use commutant::commutator::{
    commutator_dimension, generic_pattern, is_in_commutator, is_nilpotent_via_blocks,
};
use commutant::field::FieldSpec;
use commutant::partition::{Numbering, Partition};

use job::parse_job;
use run::RunError;

#[derive(Parser)]
#[command(name = "commutant", version, about = "Exact analysis of nilpotent commutator algebras and Lefschetz properties of graded Artinian algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the analyses requested by a job file and write text + JSON reports.
    Analyze {
        file: PathBuf,
        /// Override the sampling seed from the job file.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the lambda sample list, comma separated.
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<i64>>,
        /// Override the coefficient bound of the sampling grid.
        #[arg(long)]
        coeff_bound: Option<i64>,
        /// Override the number of sampled coefficient vectors.
        #[arg(long)]
        samples: Option<usize>,
        /// Directory for the report files (defaults to the job file's directory).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print the Jordan type of multiplication by a named form.
    Jordan {
        file: PathBuf,
        /// Name of the form declared in the job file (e.g. `z`).
        #[arg(long)]
        form: String,
    },
    /// Describe the commutator algebra of the Jordan matrix of a partition.
    Commutator {
        /// Partition parts, comma separated, e.g. `5,3,1`.
        #[arg(long, value_delimiter = ',')]
        partition: Vec<usize>,
        /// Verify this many seeded random members of the algebra.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Render the Young diagram of a partition.
    Diagram {
        #[arg(long, value_delimiter = ',')]
        partition: Vec<usize>,
        /// `h` (horizontal), `v` (vertical) or `plain`.
        #[arg(long, default_value = "plain")]
        numbering: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error [{}]: {}", e.stage(), e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), RunError> {
    match cli.cmd {
        Cmd::Analyze { file, seed, lambda, coeff_bound, samples, out_dir } => {
            analyze(&file, seed, lambda, coeff_bound, samples, out_dir.as_deref())
        }
        Cmd::Jordan { file, form } => jordan(&file, &form),
        Cmd::Commutator { partition, random, seed } => commutator_info(&partition, random, seed),
        Cmd::Diagram { partition, numbering } => diagram(&partition, &numbering),
    }
}

fn load_job(file: &Path) -> Result<job::JobSpec, RunError> {
    let text = fs::read_to_string(file).map_err(|e| RunError::Input {
        stage: "parse",
        message: format!("cannot read `{}`: {e}", file.display()),
    })?;
    parse_job(&text).map_err(|e| RunError::Input { stage: "parse", message: e.to_string() })
}

fn analyze(
    file: &Path,
    seed: Option<u64>,
    lambda: Option<Vec<i64>>,
    coeff_bound: Option<i64>,
    samples: Option<usize>,
    out_dir: Option<&Path>,
) -> Result<(), RunError> {
    let mut job = load_job(file)?;
    if let Some(s) = seed {
        job.sampling.seed = s;
    }
    if let Some(l) = lambda {
        job.sampling.lambdas = l;
    }
    if let Some(b) = coeff_bound {
        job.sampling.coeff_bound = b;
    }
    if let Some(n) = samples {
        job.sampling.samples = n;
    }

    // a panic below this point is an internal invariant violation: exit 4
    let report = panic::catch_unwind(|| run::execute(&job))
        .map_err(|p| RunError::Internal { message: panic_text(p) })??;

    let text = render::render_text(&report);
    let json = serde_json::to_string_pretty(&report).map_err(|e| RunError::Internal {
        message: format!("report serialization failed: {e}"),
    })?;

    let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or("report");
    let dir = match out_dir {
        Some(d) => d.to_path_buf(),
        None => file.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from(".")),
    };
    fs::create_dir_all(&dir).map_err(|e| RunError::Input {
        stage: "analysis",
        message: format!("cannot create `{}`: {e}", dir.display()),
    })?;
    let txt_path = dir.join(format!("{stem}.report.txt"));
    let json_path = dir.join(format!("{stem}.report.json"));
    fs::write(&txt_path, &text).map_err(|e| RunError::Input {
        stage: "analysis",
        message: format!("cannot write `{}`: {e}", txt_path.display()),
    })?;
    fs::write(&json_path, &json).map_err(|e| RunError::Input {
        stage: "analysis",
        message: format!("cannot write `{}`: {e}", json_path.display()),
    })?;

    print!("{text}");
    println!("reports written: {} and {}", txt_path.display(), json_path.display());
    Ok(())
}

fn panic_text(p: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = p.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".to_string()
    }
}

fn jordan(file: &Path, form_name: &str) -> Result<(), RunError> {
    let job = load_job(file)?;
    let (a, named) = run::build_algebra(&job)?;
    let Some((_, f)) = named.iter().find(|(n, _)| n == form_name) else {
        return Err(RunError::Input {
            stage: "parse",
            message: format!("no form named `{form_name}` in the job file"),
        });
    };
    let (t, dual) = a.jordan_type_of(f);
    println!("form {form_name} = {}", f.display(a.vars()));
    println!("jordan type:    ({})", join(t.parts()));
    println!("dual partition: {}", t_plus(dual.parts()));
    print!("{}", t.render_young(Numbering::Plain));
    println!("rank: {}", a.dim() - t.num_parts());
    Ok(())
}

fn commutator_info(parts: &[usize], random: Option<usize>, seed: u64) -> Result<(), RunError> {
    let t = partition_arg(parts)?;
    let field = FieldSpec::rationals();
    let pattern = generic_pattern(&t);
    let dual = t.dual();
    println!("partition:      ({})", join(t.parts()));
    println!("dual partition: ({})", join(dual.parts()));
    let mults: Vec<String> =
        t.multiplicity_sequence().iter().map(|(f, m)| format!("{f}^{m}")).collect();
    println!("multiplicities: {}", mults.join(" "));
    println!("dim C(J):       {}", commutator_dimension(&t));
    println!("coarse sizes:   ({})", join(dual.parts()));
    let fine: Vec<usize> = t.multiplicity_sequence().iter().map(|&(_, m)| m).collect();
    println!("fine sizes:     ({})", join(&fine));
    println!("generic member (parameter ids, `.` means forced zero):");
    let n = t.size();
    let width = pattern.parameter_count().to_string().len();
    for i in 0..n {
        let mut row = String::new();
        for j in 0..n {
            match pattern.class_at(i, j) {
                Some(id) => row.push_str(&format!(" {:>width$}", id, width = width)),
                None => row.push_str(&format!(" {:>width$}", ".", width = width)),
            }
        }
        println!("{row}");
    }

    if let Some(count) = random {
        let j = t.jordan_first(field);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        println!("verifying {count} seeded random members (seed {seed}):");
        for k in 0..count {
            let m = pattern.random_instance(field, &mut rng, 3);
            let commutes = is_in_commutator(&m, &j).expect("sizes match");
            let nilpotent_blocks = is_nilpotent_via_blocks(&m, &t).expect("member of C(J)");
            let nilpotent_direct = m.pow(n).is_zero();
            if !commutes || nilpotent_blocks != nilpotent_direct {
                return Err(RunError::Internal {
                    message: format!("random member {k} violated a commutator invariant"),
                });
            }
            println!(
                "  member {k}: commutes=yes, nilpotent={} (block criterion agrees)",
                if nilpotent_direct { "yes" } else { "no" }
            );
        }
    }
    Ok(())
}

fn diagram(parts: &[usize], numbering: &str) -> Result<(), RunError> {
    let t = partition_arg(parts)?;
    let n = match numbering {
        "h" | "horizontal" => Numbering::Horizontal,
        "v" | "vertical" => Numbering::Vertical,
        "plain" => Numbering::Plain,
        other => {
            return Err(RunError::Input {
                stage: "parse",
                message: format!("unknown numbering `{other}` (expected h, v or plain)"),
            })
        }
    };
    print!("{}", t.render_young(n));
    Ok(())
}

fn partition_arg(parts: &[usize]) -> Result<Partition, RunError> {
    if parts.is_empty() || parts.iter().all(|&p| p == 0) {
        return Err(RunError::Input {
            stage: "parse",
            message: "partition must have at least one positive part".to_string(),
        });
    }
    Ok(Partition::new(parts.to_vec()))
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn t_plus(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+")
}
