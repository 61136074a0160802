//! Counting divisors that two linear series both fail to separate, by the
//! three available routes: the trinomial incidence formula, the adjunction
//! node count for pencil pairs, and the Severi-style formula when the second
//! series is a pencil.

use secant_varieties::counting::CountInputs;
use secant_varieties::{adjunction_nodes, incidence_count, severi_count, SeriesParams};

fn main() {
    // A pair of pencils on a genus 2 curve. Mapping with both at once gives
    // a nodal plane model, so the incidence count must match the node count
    // predicted by adjunction.
    let g = 2;
    let l1 = SeriesParams::new(g, 1, 3).unwrap();
    let l2 = SeriesParams::new(g, 1, 4).unwrap();
    let inputs = CountInputs::new(l1, l2).unwrap();
    let incidence = incidence_count(&inputs);
    let nodes = adjunction_nodes(g, l1.d(), l2.d());
    println!(
        "genus {g}, pencils of degrees {} and {}: incidence {incidence}, adjunction {nodes}",
        l1.d(),
        l2.d()
    );
    assert_eq!(incidence, nodes);

    // A net and a pencil. The Severi-style count applies because the second
    // series is a pencil, and it agrees with the incidence formula.
    let g = 6;
    let l1 = SeriesParams::new(g, 2, 6).unwrap();
    let l2 = SeriesParams::new(g, 1, 4).unwrap();
    let inputs = CountInputs::new(l1, l2).unwrap();
    let incidence = incidence_count(&inputs);
    let severi = severi_count(g, l1.r(), l1.d(), l2.d());
    println!(
        "genus {g}, net of degree {} with pencil of degree {}: incidence {incidence}, severi {severi}",
        l1.d(),
        l2.d()
    );
    assert_eq!(incidence, severi);

    // On the locus where rho vanishes and the pencil is residual to the net,
    // the count is always zero. That emptiness is what the certifier module
    // establishes by independent means.
    println!();
    for g in [3, 6, 9, 12] {
        let r1 = 2;
        let d1 = (2 * g + 6) / 3;
        if secant_varieties::series::rho(g, r1, d1) != 0.into() {
            continue;
        }
        let count = severi_count(g, r1, d1, r1 + 2);
        println!("rho = 0 instance (g, r1, d1) = ({g}, {r1}, {d1}): severi count {count}");
    }
}
