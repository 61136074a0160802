//! Brill-Noether bookkeeping for linear series: the number rho, the
//! speciality, and the residual series, together with the expected
//! dimensions of the secant and incidence loci built from a pair.

use secant_varieties::series::{expected_dim_secant, incidence_dim, rho};
use secant_varieties::SeriesParams;

fn main() {
    let samples = [(4, 1, 3), (9, 1, 6), (12, 2, 10), (6, 2, 6)];
    for (g, r, d) in samples {
        let series = SeriesParams::new(g, r, d).expect("valid parameters");
        println!(
            "g^{r}_{d} on a genus {g} curve: rho = {}, speciality = {}",
            series.rho(),
            series.speciality()
        );
        match series.residual() {
            Ok(res) => {
                println!(
                    "  residual series: g^{}_{} with rho = {}",
                    res.r(),
                    res.d(),
                    res.rho()
                );
                // Residuation is an involution whenever it is defined.
                let back = res.residual().expect("residual of a residual");
                assert_eq!((back.r(), back.d()), (series.r(), series.d()));
            }
            Err(_) => println!("  residual series is not a linear series (negative rank)"),
        }
    }

    // Expected dimension of the f-th secant locus inside a degree-e symmetric
    // product, for a series of rank r. Negative values suggest emptiness,
    // although the suggestion needs certification to become a theorem.
    println!();
    for (e, f, r) in [(2, 1, 3), (4, 2, 3), (4, 3, 3), (6, 1, 2)] {
        println!(
            "secant parameters (e, f) = ({e}, {f}) against rank {r}: expected dim {}",
            expected_dim_secant(e, f, r)
        );
    }
    println!(
        "incidence variety of a rank {r} series maps with fibers of dimension {dim}",
        r = 3,
        dim = incidence_dim(3)
    );

    // rho is defined for arbitrary integers, so limiting cases are cheap to
    // inspect even when no actual series exists.
    println!();
    println!("rho(23, 3, 17) = {}", rho(23, 3, 17));
    println!("rho(23, 3, 16) = {}", rho(23, 3, 16));
}
