//! Sweeping the certifier over a parameter family from library code. The
//! `secant sweep` subcommand does the same from a JSON config; this is the
//! programmatic equivalent, here run over the family of minimal-degree
//! pencil instances where emptiness is the interesting outcome.

use std::time::Instant;

use secant_varieties::{certify_empty, CertifierInstance};

fn main() {
    println!("{:>4} {:>4} {:>4} {:>4} {:>3}  {:<15} {:<40}", "g", "r1", "d1", "e", "f", "status", "reasons");
    for d1 in 6..=12 {
        let (g, e, f) = (2 * d1 - 3, d1 - 4, 1);
        let instance = match CertifierInstance::new(g, 1, d1, e, f) {
            Ok(instance) => instance,
            Err(err) => {
                println!("(g, r1, d1, e, f) = ({g}, 1, {d1}, {e}, {f}) rejected: {err}");
                continue;
            }
        };
        let start = Instant::now();
        match certify_empty(&instance) {
            Ok(cert) => {
                let reasons: Vec<&str> = cert.reasons.iter().map(|r| r.code()).collect();
                println!(
                    "{:>4} {:>4} {:>4} {:>4} {:>3}  {:<15} {:<40} ({:?})",
                    g,
                    1,
                    d1,
                    e,
                    f,
                    cert.status.code(),
                    reasons.join(", "),
                    start.elapsed()
                );
            }
            Err(err) => println!("certification failed: {err}"),
        }
    }

    // The same loop with e bumped past the dimension gate shows the
    // certifier refusing rather than guessing.
    println!();
    let instance = CertifierInstance::new(9, 1, 6, 5, 1).unwrap();
    let cert = certify_empty(&instance).unwrap();
    println!(
        "(g, r1, d1, e, f) = (9, 1, 6, 5, 1): {} ({})",
        cert.status.code(),
        cert.reasons.iter().map(|r| r.code()).collect::<Vec<_>>().join(", ")
    );
}
