//! Dense 2-out-of-3 subcategories of mod kA_2 from subgroups of ℤ².

use grothmon::verify::dense_rows;

fn main() -> grothmon::Result<()> {
    for r in dense_rows(4)? {
        let mark = if r.strictly_positive {
            "dense"
        } else {
            "     "
        };
        println!(
            "{mark}  {}  (2-out-of-3 {}, dense {}, recovered {})",
            r.subgroup, r.two_out_of_three, r.dense, r.roundtrip
        );
    }
    Ok(())
}
