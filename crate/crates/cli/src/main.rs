use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oddchar_core::json::exact_uint;
use oddchar_core::{
    alpha_sn, count_odd_irr_gl, count_odd_irr_sn, count_real_odd, levi_star, parabolic_star, run_suite, sharp_glu,
    sharp_sn, sl_census, star_sn, wreath_star, young_star, Error, GLabel, GPair, Kappa, Partition, Suite, VerifyParams,
};

#[derive(Parser)]
#[command(name = "oddchar", version, about = "Odd-degree character correspondences, as JSON")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The unique odd partition one cell smaller.
    Star { partition: String },
    /// Hook label of an odd partition, one hook per 2-adic block.
    Alpha { partition: String },
    /// Sign bits of the matching linear character of a Sylow 2-subgroup.
    Sharp { partition: String },
    /// Odd characters of a Young subgroup attached to an odd partition.
    YoungStar {
        partition: String,
        #[arg(long)]
        blocks: String,
    },
    /// Odd character of S_k wr S_t attached to an odd partition of kt.
    WreathStar {
        partition: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Line and rank n-1 label for the maximal parabolic of GL_n(q).
    ParabolicStar {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Omega label of an odd GL/GU label.
    SharpGlu {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Odd labels of the Levi factors GL_{k_1} x ... attached to a label.
    LeviStar {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        blocks: String,
    },
    /// Exact counts of odd-degree characters.
    Count {
        #[arg(value_enum)]
        group: CountKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        kappa: String,
    },
    /// Run a named verification sweep and print its report.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma separated list of prime powers.
        #[arg(long)]
        q: Option<String>,
        /// `+`, `-` or `+,-`.
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct LabelArgs {
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    kappa: String,
    #[arg(long)]
    q: u64,
    /// Pairs like `s=1:l=2,1;s=0:l=1`.
    #[arg(long)]
    pairs: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Sn,
    Gl,
    Sl,
    Real,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

enum Failure {
    Usage(String),
    Core(Error),
    VerifyFailed(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn usize_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',').map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("bad integer {t:?} in {s:?}")))).collect()
}

fn kappa(s: &str) -> Result<Kappa, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn label(args: &LabelArgs) -> Result<GLabel, Failure> {
    let mut pairs = Vec::new();
    for item in args.pairs.split(';').filter(|t| !t.trim().is_empty()) {
        let (mut s, mut lambda) = (None, None);
        for field in item.split(':') {
            match field.trim().split_once('=') {
                Some(("s", v)) => {
                    s = Some(v.trim().parse::<u64>().map_err(|_| Failure::Usage(format!("bad residue {v:?}")))?)
                }
                Some(("l" | "lambda", v)) => lambda = Some(partition(v)?),
                _ => {
                    return Err(Failure::Usage(format!("bad pair field {field:?}, expected s=<int> or l=<partition>")))
                }
            }
        }
        match (s, lambda) {
            (Some(s), Some(lambda)) => pairs.push(GPair::new(s, lambda)),
            _ => return Err(Failure::Usage(format!("pair {item:?} needs both s= and l="))),
        }
    }
    Ok(GLabel::new(kappa(&args.kappa)?, args.q, pairs)?)
}

fn run(command: Command) -> Result<Value, Failure> {
    Ok(match command {
        Command::Star { partition: p } => json!({ "result": star_sn(&partition(&p)?)? }),
        Command::Alpha { partition: p } => json!({ "theta": alpha_sn(&partition(&p)?)? }),
        Command::Sharp { partition: p } => json!({ "sharp": sharp_sn(&partition(&p)?)? }),
        Command::YoungStar { partition: p, blocks } => {
            json!({ "factors": young_star(&partition(&p)?, &usize_list(&blocks)?)? })
        }
        Command::WreathStar { partition: p, k, t } => json!(wreath_star(&partition(&p)?, k, t)?),
        Command::ParabolicStar { label: args } => json!(parabolic_star(&label(&args)?)?),
        Command::SharpGlu { label: args } => json!(sharp_glu(&label(&args)?)?),
        Command::LeviStar { label: args, blocks } => {
            json!({ "factors": levi_star(&label(&args)?, &usize_list(&blocks)?)? })
        }
        Command::Count { group, n, q, kappa: k } => {
            let need_q = || q.ok_or_else(|| Failure::Usage("--q is required for this count".into()));
            let count = match group {
                CountKind::Sn => count_odd_irr_sn(n),
                CountKind::Gl => count_odd_irr_gl(n, need_q()?, kappa(&k)?)?,
                CountKind::Sl => sl_census(n, need_q()?)?.into(),
                CountKind::Real => count_real_odd(n, need_q()?, kappa(&k)?)?,
            };
            json!({ "count": exact_uint(&count) })
        }
        Command::Verify { suite, max_n, q, kappa: k, jobs, format: Format::Json } => {
            let suite: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let qs = q
                .map(|s| {
                    s.split(',')
                        .map(|t| t.trim().parse::<u64>().map_err(|_| Failure::Usage(format!("bad q {t:?}"))))
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()?;
            let kappas = k.map(|s| s.split(',').map(kappa).collect::<Result<Vec<_>, _>>()).transpose()?;
            let report = run_suite(suite, &VerifyParams { max_n, qs, kappas, jobs })?;
            let value = json!(report);
            if !report.ok() {
                return Err(Failure::VerifyFailed(value));
            }
            value
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(Failure::VerifyFailed(value)) => {
            println!("{value}");
            ExitCode::from(3)
        }
        Err(Failure::Usage(msg)) => {
            println!("{}", json!({ "error": msg, "kind": "usage" }));
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            let (kind, code) = if e.is_violation() { ("violation", 3) } else { ("domain", 2) };
            println!("{}", json!({ "error": e.to_string(), "kind": kind }));
            ExitCode::from(code)
        }
    }
}
