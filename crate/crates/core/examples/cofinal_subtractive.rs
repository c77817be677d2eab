//! Cofinal and subtractive submonoids of ℕ² and the subgroups they span.

use grothmon::lattice::int_vec;
use grothmon::monoid::{CanonicalMonoid, SubmonoidGens};

fn main() -> grothmon::Result<()> {
    let m = CanonicalMonoid::free(2)?;
    for gens in [
        vec![int_vec(&[1, 1])],
        vec![int_vec(&[2, 0]), int_vec(&[0, 2])],
        vec![int_vec(&[1, 0])],
        vec![int_vec(&[2, 1]), int_vec(&[1, 2])],
    ] {
        let n = SubmonoidGens::from_coords(&m, &gens)?;
        let sub = n.is_subtractive(4);
        println!(
            "⟨{}⟩: cofinal {}, subtractive {} (box {}), Φ = {}",
            n.gens()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            n.is_cofinal(),
            sub.holds,
            sub.bound,
            n.phi_subgroup()?,
        );
        if let Some((x, y)) = sub.counterexample {
            println!("  x = {x:?} and x + y lie in N, y = {y:?} does not");
        }
    }
    Ok(())
}
