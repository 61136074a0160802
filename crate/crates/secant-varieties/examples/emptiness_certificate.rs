//! Certifying that a secant variety is empty by degenerating to a flag
//! curve: every hypothetical point would leave a combinatorial trace (a
//! pair of vanishing sequences) satisfying a catalogue of constraints, so
//! an exhaustive search with no survivors is a proof of emptiness.

use secant_varieties::certifier::{
    certify_empty_with, ConstraintFlags, ConstraintId, DEFAULT_SEARCH_CAP,
};
use secant_varieties::{certify_empty, CertifierInstance, Status};

fn main() {
    // The first member of the counterexample family: on a general curve of
    // genus 9, the residual of a degree 6 pencil is a g^3_10, and the locus
    // of divisors of degree 2 imposing only one condition on it is empty
    // even though its expected dimension is zero.
    let inst = CertifierInstance::new(9, 1, 6, 2, 1).unwrap();
    let cert = certify_empty(&inst).unwrap();
    println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
    assert_eq!(cert.status, Status::Empty);

    // Weakening the constraint catalogue lets candidates through. The
    // certificate then reports INCONCLUSIVE and lists the survivors as
    // witness sequence pairs, which is how one inspects what each
    // constraint is responsible for killing.
    let weak = ConstraintFlags::none()
        .with(ConstraintId::ZeroStart)
        .with(ConstraintId::ValueSubset);
    let cert = certify_empty_with(&inst, &weak, DEFAULT_SEARCH_CAP).unwrap();
    println!();
    println!(
        "with only C-ZERO and C-SUB enabled: {} survivors, status {:?}",
        cert.survivor_count, cert.status
    );
    let first = &cert.witnesses[0];
    println!(
        "first survivor: a1_y = {:?}, at_y = {:?}, a1_z = {:?}, at_z = {:?}",
        first.a1_y, first.at_y, first.a1_z, first.at_z
    );

    // Some instances never reach the search. A negative Brill-Noether
    // number for the extension series already forces emptiness.
    let inst = CertifierInstance::new(9, 1, 6, 3, 2).unwrap();
    let cert = certify_empty(&inst).unwrap();
    println!();
    println!(
        "(g, r1, d1, e, f) = (9, 1, 6, 3, 2): status {:?}, reasons {:?}",
        cert.status, cert.reasons
    );

    // And instances that fail the dimension gate are outside the method's
    // scope altogether.
    let inst = CertifierInstance::new(9, 1, 6, 5, 1).unwrap();
    let cert = certify_empty(&inst).unwrap();
    println!(
        "(g, r1, d1, e, f) = (9, 1, 6, 5, 1): status {:?}, reasons {:?}",
        cert.status, cert.reasons
    );
}
