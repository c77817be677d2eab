//! Torsionfree classes of mod kA_n and their closure violations.

use grothmon::quiver::{
    enumerate_torsionfree_classes, torsionfree_violation, Interval, LinearAQuiver,
};

fn main() -> grothmon::Result<()> {
    for n in 1..=5 {
        let q = LinearAQuiver::new(n)?;
        println!(
            "n = {n}: {} classes",
            enumerate_torsionfree_classes(&q).len()
        );
    }
    let q = LinearAQuiver::new(3)?;
    for t in enumerate_torsionfree_classes(&q) {
        println!("  {t}");
    }
    let bad = [Interval { lo: 1, hi: 1 }, Interval { lo: 2, hi: 2 }].into();
    println!(
        "{{[1,1],[2,2]}}: {}",
        torsionfree_violation(&q, &bad).expect("not closed")
    );
    Ok(())
}
