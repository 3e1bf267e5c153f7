//! Command-line front end. All logic lives in the library; this binary
//! parses arguments, moves bytes between files, and maps errors to exit
//! codes: 2 for usage problems, 3 for a decryption integrity abort, 4
//! for malformed files.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::{Num, One, Zero};
use rand_chacha::ChaCha20Rng;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bfhp::{bench, diophantine, format, rng, rsa, scheme, Error};

#[derive(Parser)]
#[command(name = "bfhp", version, about = "Bivariate-form key agreement, hybrid encryption, solvers, and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Role {
    Sender,
    Recipient,
}

#[derive(Subcommand)]
enum Command {
    /// Generate common parameters (an n-bit prime and four coprime values).
    Params {
        /// Security size n in bits.
        #[arg(long)]
        bits: u32,
        /// Output params file.
        #[arg(long)]
        out: PathBuf,
        /// Seed for the deterministic ChaCha20 generator.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generate a key pair under existing parameters.
    Keygen {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, value_enum)]
        role: Role,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Encrypt a message file to a peer public key (hex).
    Encrypt {
        #[arg(long)]
        params: PathBuf,
        /// Sender key file.
        #[arg(long)]
        key: PathBuf,
        /// Peer public key as a hex integer.
        #[arg(long = "peer-pub")]
        peer_pub: String,
        /// Message file, read as a big-endian integer; must be below p.
        #[arg(long = "msg-file")]
        msg_file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decrypt a ciphertext file; exits 3 on an integrity abort.
    Decrypt {
        #[arg(long)]
        params: PathBuf,
        /// Recipient key file.
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerate all (u, v) with a1*u + a2*v = g strictly inside (lo, hi)^2.
    #[command(name = "bfhp-solve")]
    BfhpSolve {
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        lo: String,
        #[arg(long)]
        hi: String,
    },
    /// Empirical collision rate of the bivariate form versus 2^-n.
    #[command(name = "bfhp-experiment")]
    BfhpExperiment {
        /// Coefficient bit size.
        #[arg(long)]
        n: u32,
        /// Variable bit size (m > n).
        #[arg(long)]
        m: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Seeded round-trip of RSA rewritten as a two-unknown relation.
    #[command(name = "rsa-bfhp-demo")]
    RsaBfhpDemo {
        /// Modulus bit size.
        #[arg(long)]
        k: u32,
        /// Public exponent (odd, >= 3).
        #[arg(long)]
        e: u32,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time keygen/encrypt/decrypt plus a modexp baseline; write CSV.
    Bench {
        /// Comma-separated sizes, each >= 64.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u32>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Timed runs per op (floor of 11; 3 warmups besides).
        #[arg(long, default_value_t = 11)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let message = match &e {
            Error::IntegrityAbort => "ABORT: integrity check failed".to_string(),
            other => other.to_string(),
        };
        Failure { message, code: e.exit_code() as u8 }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { message: e.to_string(), code: 2 }
    }
}

fn make_rng(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => rng::seeded(s),
        None => rng::from_entropy(),
    }
}

fn parse_uint(name: &str, text: &str) -> Result<BigUint, Failure> {
    BigUint::from_str_radix(text, 10).map_err(|_| Failure {
        message: format!("--{name}: '{text}' is not a decimal integer"),
        code: 2,
    })
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        code: 2,
    })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        code: 2,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Params { bits, out, seed } => {
            let mut rng = make_rng(seed);
            let params = scheme::setup(bits, &mut rng)?;
            write_file(&out, &format::encode_params(&params))?;
            println!("wrote {} (n = {}, p = {})", out.display(), params.n, params.p);
        }
        Command::Keygen { params, role, out, seed } => {
            let params = format::decode_params(&read_file(&params)?)?;
            let mut rng = make_rng(seed);
            let (bytes, e_pub) = match role {
                Role::Sender => {
                    let kp = scheme::keygen_sender(&params, &mut rng)?;
                    (format::encode_sender_key(params.n, &kp), kp.e_pub)
                }
                Role::Recipient => {
                    let kp = scheme::keygen_recipient(&params, &mut rng)?;
                    (format::encode_recipient_key(params.n, &kp), kp.e_pub)
                }
            };
            write_file(&out, &bytes)?;
            println!("wrote {} (public key = {:x})", out.display(), e_pub);
        }
        Command::Encrypt { params, key, peer_pub, msg_file, out } => {
            let params = format::decode_params(&read_file(&params)?)?;
            let (_, sender) = format::decode_sender_key(&read_file(&key)?)?;
            let e_b = BigUint::from_str_radix(peer_pub.trim(), 16).map_err(|_| Failure {
                message: "--peer-pub is not a hex integer".to_string(),
                code: 2,
            })?;
            let raw = read_file(&msg_file)?;
            let message = if raw.is_empty() {
                BigUint::zero()
            } else {
                BigUint::from_bytes_be(&raw)
            };
            let bundle = scheme::encrypt(&params, &sender, &e_b, &message)?;
            write_file(&out, &format::encode_ciphertext(params.n, &bundle))?;
            println!("wrote {}", out.display());
        }
        Command::Decrypt { params, key, input, out } => {
            let params = format::decode_params(&read_file(&params)?)?;
            let (_, recipient) = format::decode_recipient_key(&read_file(&key)?)?;
            let (_, bundle) = format::decode_ciphertext(&read_file(&input)?)?;
            let message = scheme::decrypt(&params, &recipient, &bundle)?;
            write_file(&out, &scheme::encode_message(&message))?;
            println!("wrote {}", out.display());
        }
        Command::BfhpSolve { a1, a2, g, lo, hi } => {
            let a1 = parse_uint("a1", &a1)?;
            let a2 = parse_uint("a2", &a2)?;
            let g = parse_uint("g", &g)?;
            let lo = parse_uint("lo", &lo)?;
            let hi = parse_uint("hi", &hi)?;
            let solutions = diophantine::solutions_in_box(&a1, &a2, &g, &lo, &hi)?;
            for (u, v) in &solutions {
                println!("{u} {v}");
            }
            eprintln!("{} solution(s) in the box", solutions.len());
        }
        Command::BfhpExperiment { n, m, trials, seed } => {
            let mut rng = make_rng(seed);
            let report = diophantine::collision_experiment(n, m, trials, &mut rng)?;
            let reference = 2f64.powi(-(n as i32));
            println!("trials:        {}", report.trials);
            println!("hits:          {}", report.hits);
            println!("empirical:     {:.6e}", report.empirical_rate());
            println!("exact mean:    {:.6e}", report.expected_rate());
            println!("2^-n:          {reference:.6e}");
            println!("sigma:         {:.6e}", report.std_dev());
        }
        Command::RsaBfhpDemo { k, e, seed } => {
            let mut rng = make_rng(seed);
            let key = rsa::toy_rsa_keygen(k, e, &mut rng)?;
            let message = {
                use num_bigint::RandBigInt;
                rng.gen_biguint_range(&BigUint::one(), &key.n)
            };
            let instance = rsa::RsaBfhpInstance::from_message(&message, key.e, &key.n)?;
            let recovered = instance.solve()?;
            println!("N = {}", instance.n);
            println!("e = {}", instance.e);
            println!("M = {message}");
            println!("C = {}", instance.c);
            println!("j = {}", instance.j);
            println!("recovered M = {recovered}");
            if recovered != message {
                return Err(Failure { message: "round trip failed".into(), code: 2 });
            }
        }
        Command::Bench { sizes, out, trials, seed } => {
            let mut rng = make_rng(seed);
            let report = bench::bench_run(&sizes, trials, &mut rng)?;
            write_file(&out, report.to_csv().as_bytes())?;
            for row in &report.rows {
                println!(
                    "n={:<5} {:<8} median {:>12} ns  |M|:|C| = 1:{:.2}  |M|:|E| = 1:{:.2}",
                    row.n, row.op, row.median_ns, row.ratio_mc, row.ratio_me
                );
            }
            println!("wrote {}", out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
