//! PBW normal forms in U(so(3)): free words reduce to a canonical
//! coefficient table, and the commutator of generators is their cross
//! product.
//!
//! Run with: cargo run -p sospin --example normal_form

use sospin::uea::{casimir, multiply, normal_form, Axis, UeaElement};

fn main() {
    use Axis::{X, Y, Z};

    for word in [vec![X, Y], vec![Y, X], vec![Z, Z, X], vec![Z, Y, X]] {
        let names: String = word.iter().map(|a| format!("J{}", a.name())).collect();
        println!("{names:10} = {}", normal_form(&word));
    }

    let jx = UeaElement::generator(X);
    let jy = UeaElement::generator(Y);
    let bracket = &multiply(&jx, &jy) - &multiply(&jy, &jx);
    println!("\n[Jx, Jy]   = {bracket}");

    let c = casimir();
    println!("C          = {c}");
    for a in Axis::ALL {
        let g = UeaElement::generator(a);
        let comm = &multiply(&c, &g) - &multiply(&g, &c);
        println!("[C, J{}]    = {comm}", a.name());
    }

    // Products of arbitrary elements stay canonical.
    let p = multiply(&normal_form(&[Z, X]), &normal_form(&[Y, Y, X]));
    println!("\n(JzJx)(JyJyJx) = {p}");
}
