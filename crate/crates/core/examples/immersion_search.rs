//! Finding and checking immersion certificates.

use strong_immersion::generators::{gen_complete, gen_pk};
use strong_immersion::immersion::{find_immersion, verify_immersion, ImmersionSearch};

fn main() -> strong_immersion::Result<()> {
    let host = gen_pk(2)?;
    let k3 = gen_complete(3);

    let ImmersionSearch::Found(cert) = find_immersion(&host, &k3, false, None) else {
        unreachable!("P_2 weakly immerses K3");
    };
    for (edge, path) in &cert.edge_map {
        println!("{edge} -> {}", path.join(" "));
    }
    println!("weak check: {:?}", verify_immersion(&host, &k3, &cert, false)?);
    // The same certificate routes through a branch vertex.
    println!("strong check: {:?}", verify_immersion(&host, &k3, &cert, true)?);
    println!("strong search: {:?}", find_immersion(&host, &k3, true, None));
    println!("budgeted: {:?}", find_immersion(&gen_complete(5), &gen_complete(4), true, Some(2)));
    Ok(())
}
