//! The adjoint Casimir operator E and its shifted factors E_k. The kernel
//! of E_k on degree-k elements is exactly the level-k multipole sector, and
//! that is what the whole decomposition is built on.
//!
//! Run with: cargo run -p sospin --example casimir_action

use sospin::multipole::multipole;
use sospin::uea::{e_action, e_action_split, e_factor, normal_form, Axis, UeaElement};

fn main() {
    use Axis::{X, Y, Z};

    println!("E(1)    = {}", e_action(&UeaElement::one()));
    for a in Axis::ALL {
        println!(
            "E(J{})   = {}",
            a.name(),
            e_action(&UeaElement::generator(a))
        );
    }

    // E through its two computed forms: the adjoint sum and 2L_C - 2 sum L_a R_a.
    let x = normal_form(&[Z, X, Y]);
    println!("\nx = {x}");
    println!("E(x) adjoint route   = {}", e_action(&x));
    println!("E(x) left-right route = {}", e_action_split(&x));
    assert_eq!(e_action(&x), e_action_split(&x));

    // The shifted factors: E_1 kills the generators, E_2 kills level 2.
    for b in Axis::ALL {
        assert!(e_factor(1, &UeaElement::generator(b)).is_zero());
    }
    println!("\nE_1 annihilates every generator");
    let t2 = multipole(2, &[X, Y]).unwrap();
    println!("T2[xy] = {t2}");
    println!("E_2(T2[xy]) = {}", e_factor(2, &t2));
    println!("E_0(T2[xy]) = {}", e_factor(0, &t2));
}
