//! Building the finite spin algebras and checking their defining
//! identities: the Casimir scalar, the generator eigenspectrum, and the
//! Clifford and Kemmer relations.
//!
//! Run with: cargo run -p sospin --example spin_algebra

use sospin::rational::pretty_string;
use sospin::spinalg::{
    build_spin_algebra, casimir_scalar_check, clifford_check, eigenspectrum_check, kemmer_check,
    top_multipole_vanishes, SpinLabel,
};
use sospin::uea::Axis;

fn main() {
    for two_s in 0..=2u32 {
        let table = build_spin_algebra(SpinLabel { two_s }).unwrap();
        println!(
            "S_{{{}/2}}: dimension {}, Casimir scalar {}",
            two_s,
            table.dimension(),
            pretty_string(table.casimir_scalar())
        );
        assert!(casimir_scalar_check(&table).unwrap());
        for a in Axis::ALL {
            assert!(eigenspectrum_check(&table, a).unwrap());
        }
        assert!(top_multipole_vanishes(&table).unwrap());
    }

    // Spin 1/2 carries the Clifford anticommutator in the real convention:
    // J_a J_b + J_b J_a = -(1/2) delta_ab.
    let half = build_spin_algebra(SpinLabel { two_s: 1 }).unwrap();
    println!("\nClifford identity in S_1/2: {}", clifford_check(&half));
    let jx = half.basis_index(1, 0);
    println!(
        "  Jx * Jx -> {}",
        pretty_string(&half.product_vector(jx, jx)[0])
    );

    // Spin 1 carries the Kemmer triple-product identity.
    let one = build_spin_algebra(SpinLabel { two_s: 2 }).unwrap();
    println!("Kemmer identity in S_1:    {}", kemmer_check(&one));

    // A peek at the spin-1 table: the quadrupole sector appears in products
    // of generators.
    let (jx, jy) = (one.basis_index(1, 0), one.basis_index(1, 1));
    print!("  Jx * Jy ->");
    for (l, c) in one.product_terms(jx, jy) {
        let b = &one.basis()[*l];
        let idx: String = b.indices.iter().map(|a| a.name()).collect();
        print!(" {} T{}[{}]", pretty_string(c), b.level, idx);
    }
    println!();
}
