//! Measure what actually travels per message: C1 (n bits), C2 (message
//! length), and the 3n-bit public key — about five times the message,
//! with the key alone at three times.
//!
//! Run: cargo run -p bfhp --example size_ratios

use bfhp::bench::bench_run;
use bfhp::rng;

fn main() {
    let mut rng = rng::seeded(13);
    let report = bench_run(&[128, 256, 512], 11, &mut rng).unwrap();

    println!(
        "{:>5} {:>9} {:>9} {:>12} {:>9} {:>9}",
        "n", "msg bits", "ct bits", "pubkey bits", "|M|:|C|", "|M|:|E|"
    );
    for row in report.rows.iter().filter(|r| r.op == "encrypt") {
        println!(
            "{:>5} {:>9} {:>9} {:>12} {:>9} {:>9}",
            row.n,
            row.msg_bits,
            row.ct_bits,
            row.pubkey_bits,
            format!("1:{:.2}", row.ratio_mc),
            format!("1:{:.2}", row.ratio_me),
        );
    }

    println!("\nmedian wall times (ns):");
    println!("{:>5} {:>12} {:>12} {:>12} {:>12}", "n", "keygen", "encrypt", "decrypt", "modexp");
    for n in [128u32, 256, 512] {
        println!(
            "{n:>5} {:>12} {:>12} {:>12} {:>12}",
            report.median_ns(n, "keygen").unwrap(),
            report.median_ns(n, "encrypt").unwrap(),
            report.median_ns(n, "decrypt").unwrap(),
            report.median_ns(n, "modexp").unwrap(),
        );
    }
    println!("\nEncrypt/decrypt cost one modular multiplication plus hashing;");
    println!("the modexp column is what an exponentiation-based scheme pays per operation.");
}
