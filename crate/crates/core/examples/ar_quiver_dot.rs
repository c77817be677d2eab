//! Prints the AR quiver of mod kA_3 ∪ (mod kA_3)[1] in DOT, shading the
//! indecomposables of F[1]*A for F = {[1,1],[1,2]}.

use std::collections::BTreeSet;

use grothmon::quiver::{ar_quiver_dot, ArNode, Interval, LinearAQuiver};

fn main() -> grothmon::Result<()> {
    let q = LinearAQuiver::new(3)?;
    let mut nodes: BTreeSet<ArNode> = q
        .intervals()
        .into_iter()
        .map(|interval| ArNode {
            interval,
            shifted: false,
        })
        .collect();
    for (lo, hi) in [(1, 1), (1, 2)] {
        nodes.insert(ArNode {
            interval: Interval { lo, hi },
            shifted: true,
        });
    }
    print!("{}", ar_quiver_dot(&q, &nodes));
    Ok(())
}
