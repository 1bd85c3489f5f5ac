//! s(2k) for odd k: the lattice formula, checked against brute force while
//! that stays cheap.

use strong_dichotomies::dichotomy::{strong_count_bruteforce, strong_count_formula};

fn main() -> strong_dichotomies::Result<()> {
    println!("{:>3} {:>14}", "k", "s(2k)");
    for k in (1..=29).step_by(2) {
        let s = strong_count_formula(k)?;
        let check = if k <= 13 {
            if strong_count_bruteforce(k)? == s { "  (brute force agrees)" } else { "  (BRUTE FORCE DIFFERS)" }
        } else {
            ""
        };
        println!("{k:>3} {s:>14}{check}");
    }
    Ok(())
}
