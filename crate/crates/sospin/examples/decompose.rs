//! Every element of U(so(3)) is a unique combination of central multiples
//! of multipole components: C^m · T_n(component). This example decomposes a
//! few elements and reconstructs them exactly.
//!
//! Run with: cargo run -p sospin --example decompose

use sospin::expr::parse;
use sospin::rational::pretty_string;
use sospin::spinalg::central_basis;

fn main() {
    let basis = central_basis(4).unwrap();
    for text in [
        "Jx*Jy - Jy*Jx",
        "Jx*Jx + Jy*Jy + Jz*Jz",
        "Jx*Jx",
        "Jz*Jz*Jz",
        "(Jx*Jy)*(Jx*Jy)",
    ] {
        let element = parse(text).unwrap();
        let coeffs = basis.reduce(&element).unwrap();
        println!("{text}");
        println!("  = {element}");
        for (idx, c) in &coeffs {
            let power = match idx.casimir_power {
                0 => String::new(),
                1 => "C ".into(),
                m => format!("C^{m} "),
            };
            println!(
                "    {:>6} * {power}T{}(component {})",
                pretty_string(c),
                idx.level,
                idx.component
            );
        }
        assert_eq!(basis.reconstruct(&coeffs), element);
        println!("    reconstruction: exact\n");
    }
}
