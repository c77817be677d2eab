//! Hermite normal forms, membership and Smith invariants.

use grothmon::lattice::{hnf, int_vec, quotient_presentation, sublattices_of_index};

fn main() -> grothmon::Result<()> {
    let l = hnf(&[int_vec(&[4, 6]), int_vec(&[2, 2])], 2)?;
    println!("⟨(4,6), (2,2)⟩ = {l}");
    println!("(2,4) ∈ L: {}", l.contains(&int_vec(&[2, 4]))?);
    println!("(1,0) reduces to {:?}", l.reduce(&int_vec(&[1, 0]))?);
    println!("ℤ²/L = {}", quotient_presentation(2, &l)?);

    let subs = sublattices_of_index(2, 3)?;
    println!("{} sublattices of ℤ² with index ≤ 3:", subs.len());
    for s in subs {
        println!("  {s}");
    }
    Ok(())
}
