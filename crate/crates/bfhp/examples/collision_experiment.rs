//! How often do two different u values explain the same G? The claimed
//! rate is 2^-n; the experiment measures it and prints the exact
//! divisibility rate alongside.
//!
//! Run: cargo run -p bfhp --example collision_experiment [trials]

use bfhp::diophantine::collision_experiment;
use bfhp::rng;

fn main() {
    let trials: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("trials must be a number"))
        .unwrap_or(100_000);
    let mut rng = rng::seeded(11);

    println!("{:>3} {:>4} {:>12} {:>12} {:>12} {:>8}", "n", "m", "empirical", "exact mean", "2^-n", "sigmas");
    for n in [3u32, 4, 5, 6, 8] {
        let m = n + 10;
        let report = collision_experiment(n, m, trials, &mut rng).unwrap();
        let reference = 2f64.powi(-(n as i32));
        let sigmas = (report.empirical_rate() - report.expected_rate()).abs() / report.std_dev();
        println!(
            "{n:>3} {m:>4} {:>12.6} {:>12.6} {reference:>12.6} {sigmas:>8.2}",
            report.empirical_rate(),
            report.expected_rate(),
        );
    }
    println!("\nThe exact rate sits a little above 2^-n because the divisor A2");
    println!("averages about 1.5 * 2^(n-1), not 2^n.");
}
