//! Serre subcategories of mod kA_n are faces of ℕⁿ.

use grothmon::quiver::{
    all_serre_subcategories, face_from_serre, grothendieck_monoid, LinearAQuiver,
};

fn main() -> grothmon::Result<()> {
    let q = LinearAQuiver::new(3)?;
    let m = grothendieck_monoid(&q);
    println!("M(mod kA_3) = {m}, {} faces", m.faces().len());
    for s in all_serre_subcategories(&q) {
        let t = s.intervals(&q);
        let names: Vec<String> = t.iter().map(|i| i.to_string()).collect();
        println!("{s} ↦ {{{}}} ↦ {:?}", names.join(","), face_from_serre(&t));
    }
    Ok(())
}
