//! Building and verifying linearity certificates.

use strong_immersion::generators::{gen_pk, gen_pk_chorded};
use strong_immersion::path_decomp::{linear_decompose, verify_linear_certificate, LinearParams, Outcome};

fn main() -> strong_immersion::Result<()> {
    let params = LinearParams { m: 3, w_limit: 3, jobs: 2 };
    for (name, g) in [("P_3", gen_pk(3)?), ("chorded P_4", gen_pk_chorded(4)?)] {
        match linear_decompose(&g, g.vertices(), params)? {
            Outcome::Certified(run) => {
                let cert = &run.certificate;
                println!("{name}: A={:?} ordering={:?}", cert.apex, cert.decomposition.ordering);
                for sep in &run.separators {
                    println!("  L_{} = {:?} (cost {})", sep.index, sep.set, sep.cost);
                }
                let a = cert.achieved;
                println!("  achieved {a:?}");
                println!("  violations {:?}", verify_linear_certificate(&g, g.vertices(), cert, a.a, a.w, a.p)?);
            }
            Outcome::Failed(witness) => println!("{name}: {}", serde_json::to_string(&witness).unwrap()),
        }
    }
    Ok(())
}
