//! Machine check of Q_rig(-1) = -s(2k) over a range of odd k.
//!
//! cargo run --example verify_theorem -- 21

use strong_dichotomies::dichotomy::verify_theorem;

fn main() -> strong_dichotomies::Result<()> {
    let max_k: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(21);
    let mut all = true;
    for k in (1..=max_k).step_by(2) {
        let r = verify_theorem(k)?;
        let holds = r.theorem_holds == Some(true);
        all &= holds;
        println!(
            "k = {k:>2}: s = {:>8}, Q_rig(-1) = {:>9}, brute force {:>8}  {}",
            r.s_value,
            r.qrig_at_minus_one.map_or("-".into(), |q| q.to_string()),
            r.s_bruteforce.map_or("skipped".into(), |s| s.to_string()),
            if holds { "ok" } else { "FAIL" }
        );
    }
    if !all {
        std::process::exit(1);
    }
    Ok(())
}
