//! The explicit constants, exactly.

use strong_immersion::bounds::{converse_n, converse_n_alpha, d_of_k, theorem31_constants};
use strong_immersion::generators::gen_complete;

fn main() -> strong_immersion::Result<()> {
    for k in 1..=4 {
        let d = d_of_k(k)?;
        println!("d({k}) = {d} ({} digits)", d.to_string().len());
    }
    let c = theorem31_constants(&gen_complete(4));
    println!("K4: m={} a={} k={} p={}", c.m, c.a, c.k, c.p);
    println!("K4: w has {} digits", c.w.to_string().len());
    println!("converse n(1,0,1,1) = {}", converse_n(1, 0, 1, 1));
    println!("converse n(alpha=3) = {}", converse_n_alpha(3));
    Ok(())
}
