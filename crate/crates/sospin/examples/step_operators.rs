//! Step operators: projector-dressed left multiplications that move between
//! the E_k-annihilated sectors. Their sum resolves plain left
//! multiplication, and their images on multipoles have closed forms.
//!
//! Run with: cargo run -p sospin --example step_operators

use sospin::multipole::{
    multipole, step, step_polynomial, step_resolution_holds, verify_right_step_identities,
    verify_step_down_image, verify_step_level_image, StepKind,
};
use sospin::uea::{left_mul, Axis, UeaElement};

fn main() {
    use Axis::{X, Y};

    // The three dressing polynomials at level 2.
    for kind in StepKind::ALL {
        println!("{kind:?} polynomial at k = 2: {}", step_polynomial(kind, 2));
    }

    // Apply them to the quadrupole T2[xy].
    let t2 = multipole(2, &[X, Y]).unwrap();
    println!("\nT2[xy] = {t2}");
    for kind in StepKind::ALL {
        let image = step(kind, X, 2, &t2).unwrap();
        println!("  {kind:?} by Jx: {image}");
    }

    // The three pieces sum to L_v: the resolution of the identity.
    let sum: UeaElement = StepKind::ALL
        .iter()
        .map(|&kind| step(kind, X, 2, &t2).unwrap())
        .fold(UeaElement::zero(), |acc, v| &acc + &v);
    assert_eq!(sum, left_mul(&UeaElement::generator(X), &t2));
    println!("\nD + Level + Up = L_Jx on T2[xy]: verified");
    assert!(step_resolution_holds(4, Y, &[X, X, Y, Y]).unwrap());
    println!("same at level 4 on T4[xxyy]: verified");

    // Closed-form images and the right-multiplication variants.
    assert!(verify_step_down_image(3, X, &[X, Y, Y]).unwrap());
    assert!(verify_step_level_image(3, Y, &[X, Y, Y]).unwrap());
    assert!(verify_right_step_identities(2, X, &[X, Y]).unwrap());
    println!("closed-form step images and right-step identities: verified");

    // Feeding an element of the wrong level is rejected.
    let err = step(StepKind::Up, X, 3, &t2).unwrap_err();
    println!("\nwrong level hint is caught: {err}");
}
