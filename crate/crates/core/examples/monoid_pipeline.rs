//! Free monoid → localization → quotient, with faces and group completions.

use grothmon::lattice::int_vec;
use grothmon::monoid::{CanonicalMonoid, SubmonoidGens};

fn main() -> grothmon::Result<()> {
    let m = CanonicalMonoid::free(3)?;
    let loc = m.localize(&[m.basis_elem(0)?])?;
    println!("ℕ³ localized at e0: {loc}");

    // killing e0 + e1 makes e1 a unit too
    let n = SubmonoidGens::from_coords(&loc, &[int_vec(&[1, 1, 0])])?;
    let q = loc.quotient_by_submonoid(&n)?;
    println!("… / ⟨e0 + e1⟩: {q}, inverted {:?}", q.inverted());

    let t = CanonicalMonoid::make(2, &[0], &[int_vec(&[2, 0])])?;
    println!(
        "(ℤ/2)e0 ⊕ ℕe1: {t}, units {}, gp {}",
        t.units(),
        t.group_completion()
    );
    println!("reduced quotient: {}", t.reduced_quotient());
    for f in t.faces() {
        println!("  face {:?}", f.coords());
    }

    let a = t.elem_i64(&[3, 1])?;
    let b = t.elem_i64(&[1, 1])?;
    println!("(3,1) = (1,1): {}", a.equals(&b)?);
    println!("json: {}", serde_json::to_string(&t).expect("serializable"));
    Ok(())
}
