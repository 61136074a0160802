//! The intersection-theoretic route to the double-point count: realize each
//! incidence condition as a class in the Chow ring of the symmetric product,
//! multiply, and integrate against the known monomial values.

use num::rational::BigRational;
use num::BigInt;

use secant_varieties::counting::{chow_product_evaluate, gamma_class, CountInputs};
use secant_varieties::{incidence_count, ChowClass, SeriesParams};

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn main() {
    // Classes live in a polynomial ring with generators x and theta; a term
    // c * x^a theta^b is entered with add_term(a, b, c).
    let mut sample = ChowClass::zero();
    sample.add_term(1, 0, rational(2));
    sample.add_term(0, 1, rational(1));
    println!(
        "sample class 2x + theta: homogeneous of degree {:?}",
        sample.homogeneous_degree().unwrap()
    );
    let square = sample.mul(&sample);
    println!(
        "its square has x^2 coefficient {} and x theta coefficient {}",
        square.coefficient(2, 0),
        square.coefficient(1, 1)
    );

    // The class of divisors failing to be separated by a fixed series, in
    // the symmetric product of degree e = r1 + r2. Multiplying the classes
    // of two series and integrating gives the incidence count again.
    let g = 6;
    let l1 = SeriesParams::new(g, 2, 6).unwrap();
    let l2 = SeriesParams::new(g, 1, 4).unwrap();
    let e = l1.r() + l2.r();

    let c1 = gamma_class(g, l1.r(), l1.d(), e);
    let c2 = gamma_class(g, l2.r(), l2.d(), e);
    println!();
    println!("gamma class of the degree {} net:", l1.d());
    for ((a, b), coeff) in c1.terms() {
        println!("  {coeff} * x^{a} theta^{b}");
    }

    let product = chow_product_evaluate(&c1, &c2, g, e).unwrap();
    let inputs = CountInputs::new(l1, l2).unwrap();
    let direct = incidence_count(&inputs);
    println!("integral of the product: {product}");
    println!("trinomial incidence count: {direct}");
    assert_eq!(product, direct);
}
