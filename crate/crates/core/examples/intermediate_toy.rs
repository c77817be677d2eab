//! The intermediate subcategory F[1]*A for F = {[1,1],[1,2]} in mod kA_3.

use grothmon::intermediate::{
    class_of, commuting_square_check, from_torsionfree, monoid_of, serre_localization,
    serre_subcats_of, DObj,
};
use grothmon::quiver::{Interval, LinearAQuiver, ModuleObj, TorsionfreeClass};

fn iv(lo: usize, hi: usize) -> ModuleObj {
    ModuleObj::from(Interval { lo, hi })
}

fn main() -> grothmon::Result<()> {
    let q = LinearAQuiver::new(3)?;
    let f = TorsionfreeClass::new(&q, [Interval { lo: 1, hi: 1 }, Interval { lo: 1, hi: 2 }])?;
    let c = from_torsionfree(3, &f)?;
    println!("F = {f}, M(C) = {}", monoid_of(&c));

    let s2 = class_of(&c, &DObj::module(iv(2, 2)))?;
    let sum =
        class_of(&c, &DObj::module(iv(1, 2)))?.add(&class_of(&c, &DObj::shifted(iv(1, 1)))?)?;
    println!(
        "[S2] = {s2}, [[1,2]] + [S1[1]] = {sum}, equal {}",
        s2.equals(&sum)?
    );
    println!("[S2] is a unit: {}", s2.is_unit());

    for s in serre_subcats_of(&c) {
        let loc = serre_localization(&c, &s)?;
        println!(
            "S = {s}: {} vs {}, iso {}, square commutes {}",
            loc.m_quotient,
            loc.a_quotient,
            loc.iso,
            commuting_square_check(&c, &s, 4)?
        );
    }
    Ok(())
}
