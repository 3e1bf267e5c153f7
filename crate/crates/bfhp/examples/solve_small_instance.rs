//! Plant a small instance, inspect its solution line, and enumerate every
//! in-box solution. At desk scale the box holds a handful of candidates;
//! the window estimate shows why real sizes are out of reach.
//!
//! Run: cargo run -p bfhp --example solve_small_instance

use bfhp::diophantine::{self, expected_t_width};
use bfhp::rng;
use num_bigint::BigUint;
use num_traits::One;

fn main() {
    let (n, m) = (4, 10);
    let mut rng = rng::seeded(3);

    let (inst, (u, v)) = diophantine::plant_instance(n, m, &mut rng).unwrap();
    println!("coefficients A1 = {}, A2 = {} ({}-bit, coprime)", inst.a1, inst.a2, n);
    println!("planted (u, v)  = ({u}, {v})  ({}-bit)", m);
    println!("target G        = {}", inst.g);

    let line = diophantine::general_solution(&inst.a1, &inst.a2, &inst.g).unwrap();
    println!(
        "solution line   : (u, v) = ({} + {}*t, {} - {}*t)",
        line.u0, line.step_u, line.v0, line.step_v
    );

    let lo = BigUint::one() << (m - 1);
    let hi = (BigUint::one() << m) - 1u32;
    let sols = diophantine::solutions_in_box(&inst.a1, &inst.a2, &inst.g, &lo, &hi).unwrap();
    println!("in-box solutions ({} < u, v < {}):", lo, hi);
    for (su, sv) in &sols {
        let marker = if (su, sv) == (&u, &v) { "  <- planted" } else { "" };
        println!("  ({su}, {sv}){marker}");
    }
    println!(
        "window estimate 2^(m-n-2) = {}, actual candidates = {}",
        expected_t_width(m, n).unwrap(),
        sols.len()
    );

    // The same call refuses once the window is astronomically wide.
    let big_g = &inst.a1 * (BigUint::one() << 200) + &inst.a2 * (BigUint::one() << 200);
    let wide = diophantine::solutions_in_box(
        &inst.a1,
        &inst.a2,
        &big_g,
        &(BigUint::one() << 199),
        &(BigUint::one() << 201),
    );
    println!("at 200-bit bounds: {}", wide.unwrap_err());
}
