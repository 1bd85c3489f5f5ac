//! The rigid pattern inventory Q_rig(x) of Z/nZ, three ways.
//!
//! cargo run --example rigid_inventory -- 10

use strong_dichotomies::inventory::{
    eval_at_minus_one, qrig_bruteforce, qrig_via_moebius, qrig_via_tom, DEFAULT_BRUTE_FORCE_CUTOFF,
};

fn main() -> strong_dichotomies::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);

    let q = qrig_via_moebius(n)?;
    println!("Q_rig(x) = {q}");
    println!("Q_rig(-1) = {}", eval_at_minus_one(&q));
    println!("palindromic: {}", q.is_palindromic(n as usize));
    println!("table-of-marks route agrees: {}", qrig_via_tom(n)? == q);
    if n <= DEFAULT_BRUTE_FORCE_CUTOFF {
        println!("brute force agrees: {}", qrig_bruteforce(n)? == q);
    }
    Ok(())
}
