//! On the projective line everything is computable by exact linear algebra,
//! which makes genus 0 a proving ground: secant membership is a rank
//! computation on Taylor coefficients, and ramification weights come from
//! the Wronskian. Both agree with the general theory.

use num::rational::BigRational;
use num::BigInt;

use secant_varieties::genus_zero::{
    is_secant_divisor, ramification_weight_total, secant_matrix, wronskian,
};
use secant_varieties::ramification::plucker_total;
use secant_varieties::{MultiDivisor, RationalSeries};

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn main() {
    // The twisted cubic is the complete series of degree 3. A chord through
    // two general points spans a line that misses the curve otherwise, so
    // no divisor of degree 2 drops a condition: there are no secant lines.
    let cubic = RationalSeries::complete(3);
    let chord = MultiDivisor::from_integer_points(&[(0, 1), (1, 1)]).unwrap();
    println!(
        "twisted cubic, chord through 0 and 1: secant with f = 1? {}",
        is_secant_divisor(&cubic, &chord, 1)
    );
    let matrix = secant_matrix(&cubic, &chord);
    println!(
        "  interpolation matrix is {}x{} of rank {}",
        matrix.rows(),
        matrix.cols(),
        matrix.rank()
    );

    // A tangent line counted with multiplicity 2 behaves the same way.
    let tangent = MultiDivisor::new(vec![(rational(2), 2)]).unwrap();
    println!(
        "twisted cubic, doubled point at 2: secant with f = 1? {}",
        is_secant_divisor(&cubic, &tangent, 1)
    );

    // An incomplete series can have honest secants. The span of 1, t^2 and
    // t^4 factors through the squaring map, so the curve it traces is a
    // double cover of a conic and the two points of any fiber impose only
    // one condition.
    let projected = RationalSeries::from_integer_basis(
        4,
        &[&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]],
    )
    .unwrap();
    let divisor = MultiDivisor::from_integer_points(&[(1, 1), (-1, 1)]).unwrap();
    println!(
        "double cover of a conic, fiber over 1: secant with f = 1? {}",
        is_secant_divisor(&projected, &divisor, 1)
    );

    // The Wronskian degree counts finite ramification; adding the weight at
    // infinity always lands on the Plucker total (r+1)d - r(r+1) for genus 0.
    println!();
    for series in [cubic, projected] {
        let w = wronskian(&series);
        let total = ramification_weight_total(&series);
        let predicted = plucker_total(0, series.r(), series.d());
        println!(
            "rank {} degree {} series: wronskian degree {:?}, total weight {}, plucker total {}",
            series.r(),
            series.d(),
            w.degree(),
            total,
            predicted
        );
        assert_eq!(total, predicted);
    }
}
