//! Brute-force 𝔽₂ checks: Hom dimensions, extensions, quasi-splitness, and
//! the verification suites.

use grothmon::oracle::{all_ses, hom_dim, is_quasi_split_window, Rep};
use grothmon::quiver::Interval;
use grothmon::verify::{run_suite, Suite, VerifyOptions};

fn main() -> grothmon::Result<()> {
    let a = Rep::interval(3, Interval { lo: 1, hi: 2 })?;
    let b = Rep::interval(3, Interval { lo: 2, hi: 3 })?;
    println!("dim Hom([1,2], [2,3]) = {}", hom_dim(&a, &b)?);
    for s in all_ses(&a, &b)? {
        println!("0 → [1,2] → {} → [2,3] → 0", s.middle);
    }
    for n in 1..=3 {
        let v = is_quasi_split_window(n, 4)?;
        match v.witness {
            None => println!("n = {n}: every sequence splits"),
            Some(w) => println!("n = {n}: nonsplit middle {}", w.middle),
        }
    }
    for r in run_suite(Suite::Quiver, &VerifyOptions::default()) {
        println!(
            "{} {}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    Ok(())
}
