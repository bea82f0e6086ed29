//! `toric-ci`: complete intersection decisions for toric configurations.
//!
//! Matrix files list the vectors of a configuration as COLUMNS. Exit status
//! is 0 when a command ran to completion, 2 for unusable input and 3 when an
//! internal consistency check failed.

mod input;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_ci::cisolver::{curve_blocks, curve_family_expected, random_chain, random_simplicial};
use toric_ci::{
    card_group, ci_projective, ci_simplicial, gen_family_curve, gen_family_surface, reduce, semigroup_member,
    verify_ci, GroupOrder, SimplicialConfig, SolverOptions, VerifyOutcome,
};

use input::{format_matrix, parse_configuration, parse_generators, parse_matrix, parse_vector, read_source};

#[derive(Parser)]
#[command(name = "toric-ci", version, about = "Complete intersection toric ideals, decided exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the toric ideal of a simplicial configuration is a complete intersection.
    IsCi {
        /// Matrix file, `-` for standard input.
        file: String,
        /// Use the reduction algorithm directly when the configuration is projective.
        #[arg(long, value_enum, default_value = "on")]
        projective_fast_path: Switch,
        /// Also compute the true m-value of vectors without a match (trace only).
        #[arg(long)]
        exact_m: bool,
        #[arg(long)]
        json: bool,
    },
    /// Membership in the semigroup spanned by the columns; prints a certificate or `0`.
    Belongs {
        file: String,
        /// Target vector, comma separated.
        vector: String,
    },
    /// Order of Z^m modulo the column lattice; `-1` when infinite.
    CardGroup { file: String },
    /// Reduce a configuration and recover the binomials found on the way.
    Reduce {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a candidate generating set given as `alpha | beta` lines.
    Verify { matrix: String, generators: String },
    /// Emit a test configuration as a matrix file.
    GenFamily {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
struct Expect {
    /// Add the known answer as a `# expect:` comment.
    #[arg(long)]
    expect: bool,
}

#[derive(Subcommand)]
enum Family {
    /// `{d e_1, d e_2, (d − d_k, d_k)}`, a complete intersection exactly when the
    /// `d_k` form a divisibility chain ending in `d`.
    Curve {
        #[arg(long)]
        d: u64,
        /// Strictly increasing values in `(1, d)`, comma separated.
        #[arg(long, value_delimiter = ',')]
        ds: Vec<u64>,
        #[command(flatten)]
        expect: Expect,
    },
    /// `{2 e_1, …, 2 e_m, e_i + e_j}`, always a complete intersection.
    Surface {
        #[arg(long)]
        m: usize,
        /// 1-based pair `i,j`.
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
        pair: Vec<usize>,
        #[command(flatten)]
        expect: Expect,
    },
    /// Direct sum of random curve blocks, always a complete intersection.
    Blocks {
        /// Chain length per block, including `d`.
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 4000)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        expect: Expect,
    },
    /// Axis vectors plus random vectors; the answer is not known in advance.
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        extra: usize,
        #[arg(long, default_value_t = 4000)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl From<input::InputError> for Failure {
    fn from(e: input::InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<toric_ci::Error> for Failure {
    fn from(e: toric_ci::Error) -> Self {
        match e {
            toric_ci::Error::Invariant(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn simplicial(file: &str) -> Result<SimplicialConfig, Failure> {
    let a = parse_configuration(&read_source(file)?)?;
    Ok(SimplicialConfig::new(a)?)
}

fn family_output(a: &SimplicialConfig, expect: Option<bool>) -> String {
    let comments: Vec<String> = expect.map(|e| format!("expect: {}", e)).into_iter().collect();
    format_matrix(a.config(), &comments)
}

fn gen_family(family: Family) -> Result<String, Failure> {
    match family {
        Family::Curve { d, ds, expect } => {
            let a = gen_family_curve(d, &ds)?;
            Ok(family_output(&a, expect.expect.then(|| curve_family_expected(d, &ds))))
        }
        Family::Surface { m, pair, expect } => {
            let [i, j] = pair[..] else {
                return Err(Failure::Input(format!("--pair takes two indices, got {}", pair.len())));
            };
            let a = gen_family_surface(m, i, j)?;
            Ok(family_output(&a, expect.expect.then_some(true)))
        }
        Family::Blocks { lengths, max, seed, expect } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let chains = lengths
                .iter()
                .map(|&len| {
                    random_chain(&mut rng, len, max)
                        .ok_or_else(|| Failure::Input(format!("no chain of length {} fits under {}", len, max)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let a = curve_blocks(&chains)?;
            Ok(family_output(&a, expect.expect.then_some(true)))
        }
        Family::Random { m, extra, max, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(family_output(&random_simplicial(&mut rng, m, extra, max)?, None))
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::IsCi { file, projective_fast_path, exact_m, json } => {
            let a = simplicial(&file)?;
            let r = if projective_fast_path == Switch::On && a.is_projective() {
                ci_projective(&a)?
            } else {
                ci_simplicial(&a, &SolverOptions { exact_m_values: exact_m })?
            };
            Ok(if json {
                format!("{}\n", render::ci_json(&r))
            } else {
                render::ci_text(&r)
            })
        }
        Command::Belongs { file, vector } => {
            let a = parse_configuration(&read_source(&file)?)?;
            let b = parse_vector(&vector)?;
            let cert = semigroup_member(&b, &a)?;
            Ok(format!("{}\n", render::certificate_text(cert.as_ref().map(|c| c.coefficients.as_slice()))))
        }
        Command::CardGroup { file } => {
            let m = parse_matrix(&read_source(&file)?)?;
            Ok(match card_group(&m) {
                GroupOrder::Finite(k) => format!("{}\n", k),
                GroupOrder::Infinite => "-1\n".into(),
            })
        }
        Command::Reduce { file, json } => {
            let a = parse_configuration(&read_source(&file)?)?;
            let r = reduce(&a)?;
            Ok(if json {
                format!("{}\n", render::reduce_json(&r))
            } else {
                render::reduce_text(&r)
            })
        }
        Command::Verify { matrix, generators } => {
            let a = parse_configuration(&read_source(&matrix)?)?;
            let gens = parse_generators(&read_source(&generators)?, a.len())?;
            Ok(match verify_ci(&a, &gens) {
                VerifyOutcome::Valid => "valid\n".into(),
                VerifyOutcome::Invalid(f) => format!("invalid: {}\n", f.code()),
            })
        }
        Command::GenFamily { family } => gen_family(family),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String, Failure> {
        let mut full = vec!["toric-ci"];
        full.extend_from_slice(args);
        run(Cli::try_parse_from(full).expect("arguments parse"))
    }

    #[test]
    fn curve_family_carries_the_oracle() {
        let out = run_args(&["gen-family", "curve", "--d", "12", "--ds", "2,4", "--expect"]).ok().unwrap();
        assert!(out.starts_with("# expect: true\n2 5\n"));
        let out = run_args(&["gen-family", "curve", "--d", "12", "--ds", "2,5", "--expect"]).ok().unwrap();
        assert!(out.starts_with("# expect: false\n"));
    }

    #[test]
    fn surface_two_is_the_conic() {
        let out = run_args(&["gen-family", "surface", "--m", "2"]).ok().unwrap();
        assert_eq!(out, "2 3\n2 0 1\n0 2 1\n");
        let out = run_args(&["gen-family", "surface", "--m", "3", "--pair", "2,3", "--expect"]).ok().unwrap();
        assert_eq!(out, "# expect: true\n3 4\n2 0 0 0\n0 2 0 1\n0 0 2 1\n");
        assert!(matches!(run_args(&["gen-family", "surface", "--m", "3", "--pair", "1"]), Err(Failure::Input(_))));
    }

    #[test]
    fn bad_family_parameters_are_input_errors() {
        assert!(matches!(run_args(&["gen-family", "curve", "--d", "5", "--ds", "7"]), Err(Failure::Input(_))));
        assert!(matches!(
            run_args(&["gen-family", "blocks", "--lengths", "30", "--max", "10"]),
            Err(Failure::Input(_))
        ));
    }

    #[test]
    fn seeded_families_are_reproducible() {
        let a = run_args(&["gen-family", "random", "--m", "3", "--extra", "4", "--seed", "9"]).ok().unwrap();
        let b = run_args(&["gen-family", "random", "--m", "3", "--extra", "4", "--seed", "9"]).ok().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invariant_errors_map_to_their_own_status() {
        let f: Failure = toric_ci::Error::Invariant("x".into()).into();
        assert!(matches!(f, Failure::Invariant(_)));
        let f: Failure = toric_ci::Error::NotProjective.into();
        assert!(matches!(f, Failure::Input(_)));
    }
}
