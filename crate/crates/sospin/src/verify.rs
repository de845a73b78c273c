//! The machine-checkable identity suite.
//!
//! Every structural claim the kernel is built on is re-verified here from
//! scratch: projector congruences, the operator identities on U(so(3)), the
//! multipole laws, the step-image formulas, and the spin-algebra identities,
//! plus optional floating-point cross-checks against the matrix oracle.
//! Randomized items draw from a fixed-seed generator so runs are
//! reproducible.

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::multipole::{
    self, index_multisets, left_action_annihilator, multipole, multipole_image_rank,
    slot_contraction, step_resolution_holds,
};
use crate::oracle;
use crate::poly::{apply_poly, Polynomial};
use crate::projector::{bezout_projectors, FactoredMinPoly};
use crate::rational::{int, rat, Rational};
use crate::spinalg::{self, build_spin_algebra, SpinLabel};
use crate::uea::{
    e_action, e_action_split, e_factor, left_mul, multiply, right_mul, structure_constant, Axis,
    PbwMonomial, UeaElement,
};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest doubled spin whose algebra is checked.
    pub two_s_max: u32,
    /// Largest multipole level exercised.
    pub k_max: u32,
    /// Also run the floating-point matrix cross-checks.
    pub oracle: bool,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            two_s_max: 4,
            k_max: 6,
            oracle: false,
            seed: 7,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyItem {
    pub id: String,
    pub statement: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub items: Vec<VerifyItem>,
    pub oracle_max_deviation: Option<f64>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|i| !i.passed)
            .map(|i| i.id.as_str())
            .collect()
    }

    fn push(&mut self, id: impl Into<String>, statement: impl Into<String>, passed: bool) {
        self.items.push(VerifyItem {
            id: id.into(),
            statement: statement.into(),
            passed,
        });
    }
}

/// Random PBW element: up to `terms` monomials of degree ≤ `max_deg` with
/// small integer coefficients.
pub fn random_element(rng: &mut StdRng, max_deg: u32, terms: usize) -> UeaElement {
    let mut e = UeaElement::zero();
    for _ in 0..rng.random_range(1..=terms) {
        let d = rng.random_range(0..=max_deg);
        let ex = rng.random_range(0..=d);
        let ey = rng.random_range(0..=d - ex);
        let ez = rng.random_range(0..=d - ex - ey);
        let c = loop {
            let c = rng.random_range(-9i64..=9);
            if c != 0 {
                break c;
            }
        };
        e.add_term(PbwMonomial([ex, ey, ez]), int(c));
    }
    e
}

fn random_word(rng: &mut StdRng, len: usize) -> Vec<Axis> {
    (0..len)
        .map(|_| Axis::from_index(rng.random_range(0..3)))
        .collect()
}

/// Runs the whole suite. Each item is an independent pass/fail; nothing
/// short-circuits, so a failure report names every broken identity.
pub fn run(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut report = VerifyReport::default();

    projector_items(&mut report, &mut rng);
    operator_identity_items(&mut report, &mut rng);
    multipole_items(&mut report, opts)?;
    step_image_items(&mut report, opts, &mut rng)?;
    spin_items(&mut report, opts, &mut rng)?;
    if opts.oracle {
        oracle_items(&mut report, opts)?;
    }
    Ok(report)
}

fn projector_items(report: &mut VerifyReport, rng: &mut StdRng) {
    let mut all = true;
    for _ in 0..50 {
        // Distinct rational roots, multiplicity 1 or 2, total degree <= 6.
        let n_roots = rng.random_range(2..=3usize);
        let mut roots: Vec<Rational> = Vec::new();
        while roots.len() < n_roots {
            let r = rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=4));
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let factors: Vec<(Polynomial, u32)> = roots
            .iter()
            .map(|r| (Polynomial::linear_root(r), rng.random_range(1u32..=2)))
            .collect();
        let m = FactoredMinPoly::new(factors).expect("distinct roots are coprime");
        let set = bezout_projectors(&m).expect("coprime factors");
        all &= set.congruences_hold(&m);
    }
    report.push(
        "projector-congruences",
        "50 random coprime factorizations: sum = 1, orthogonal, idempotent, factor-annihilated (mod m)",
        all,
    );
}

fn operator_identity_items(report: &mut VerifyReport, rng: &mut StdRng) {
    // Exact eigenvalues of E on the lowest sectors.
    let monopole = e_action(&UeaElement::one()).is_zero();
    let dipole = Axis::ALL
        .iter()
        .all(|&b| e_action(&UeaElement::generator(b)) == UeaElement::generator(b).scale(&int(-2)));
    report.push(
        "casimir-adjoint-eigenvalues",
        "E(1) = 0 and E(J_b) = -2 J_b",
        monopole && dipole,
    );

    let f_op = |b: Axis, x: &UeaElement| -> UeaElement {
        let mut out = UeaElement::zero();
        for c in Axis::ALL {
            for a in Axis::ALL {
                let eps = structure_constant(b, c, a);
                if eps.is_zero() {
                    continue;
                }
                let t = multiply(
                    &UeaElement::generator(c),
                    &multiply(x, &UeaElement::generator(a)),
                );
                out.add_scaled(&t, &eps);
            }
        }
        out
    };

    let mut split = true;
    let mut adjoint_lr = true;
    let mut e_l_comm = true;
    let mut e_lr_comm = true;
    let mut e_f_comm = true;
    for _ in 0..30 {
        let x = random_element(rng, 4, 5);
        split &= e_action(&x) == e_action_split(&x);
        for v in Axis::ALL {
            let g = UeaElement::generator(v);
            adjoint_lr &= crate::uea::adjoint_gen(v, &x) == &left_mul(&g, &x) - &right_mul(&g, &x);
            let el = &e_action(&left_mul(&g, &x)) - &left_mul(&g, &e_action(&x));
            e_l_comm &= el == f_op(v, &x).scale(&int(-2));
            let er = &e_action(&right_mul(&g, &x)) - &right_mul(&g, &e_action(&x));
            e_lr_comm &= el == er;
            let lhs = &e_action(&f_op(v, &x)) - &f_op(v, &e_action(&x));
            let rhs = &left_mul(&g, &e_action(&x)) + &e_action(&right_mul(&g, &x));
            e_f_comm &= lhs == rhs;
        }
    }
    report.push(
        "adjoint-split",
        "ad_v = L_v - R_v on random elements",
        adjoint_lr,
    );
    report.push(
        "casimir-action-split",
        "sum_a ad_a^2 = 2 L_C - 2 sum_a L_a R_a on random elements",
        split,
    );
    report.push(
        "e-left-commutator",
        "[E, L_b] = -2 sum_{c,a} eps_bca L_c R_a",
        e_l_comm,
    );
    report.push("e-left-right-commutator", "[E, L_a] = [E, R_a]", e_lr_comm);
    report.push("e-f-commutator", "[E, F(J_b)] = L_b E + E R_b", e_f_comm);

    // The cubic commutator law, on 100 random elements per generator.
    let mut cubic = true;
    for _ in 0..100 {
        let x = random_element(rng, 4, 5);
        for v in Axis::ALL {
            let g = UeaElement::generator(v);
            let lv = |y: &UeaElement| left_mul(&g, y);
            let c1 = |y: &UeaElement| &e_action(&lv(y)) - &lv(&e_action(y));
            let c2 = |y: &UeaElement| &e_action(&c1(y)) - &c1(&e_action(y));
            let c3 = &e_action(&c2(&x)) - &c2(&e_action(&x));
            let e2l = e_action(&e_action(&lv(&x)));
            let le2 = lv(&e_action(&e_action(&x)));
            cubic &= (&c3 + &(&e2l - &le2).scale(&int(2))).is_zero();
        }
    }
    report.push(
        "left-action-cubic",
        "[E,[E,[E,L_v]]] + 2[E^2, L_v] = 0 on 100 random elements, each generator",
        cubic,
    );
}

fn multipole_items(report: &mut VerifyReport, opts: &VerifyOptions) -> Result<()> {
    for k in 0..=opts.k_max {
        let multisets = index_multisets(k);

        let mut annihilated = true;
        for w in &multisets {
            annihilated &= e_factor(k, &multipole(k, w)?).is_zero();
        }
        report.push(
            format!("multipole-annihilation-k{k}"),
            format!("E_{k} T_{k} = 0 on every index multiset"),
            annihilated,
        );

        // Full symmetry: every word equals its sorted representative.
        let mut symmetric = true;
        for word in all_words(k as usize) {
            let mut sorted = word.clone();
            sorted.sort();
            symmetric &= multipole(k, &word)? == multipole(k, &sorted)?;
        }
        report.push(
            format!("multipole-symmetry-k{k}"),
            format!("T_{k} is invariant under all 3^{k} slot words vs their sorted forms"),
            symmetric,
        );

        if k >= 2 {
            let mut traceless = true;
            for w in &multisets {
                for p in 0..w.len() {
                    for q in p + 1..w.len() {
                        traceless &= slot_contraction(k, w, p, q)?.is_zero();
                    }
                }
            }
            report.push(
                format!("multipole-traceless-k{k}"),
                format!("sum_a T_{k}(.. a .. a ..) = 0 over every slot pair"),
                traceless,
            );
        }

        report.push(
            format!("multipole-rank-k{k}"),
            format!("dim Im T_{k} = {} by exact rank", 2 * k + 1),
            multipole_image_rank(k) == (2 * k + 1) as usize,
        );

        let mut resolution = true;
        for w in &multisets {
            for v in Axis::ALL {
                resolution &= step_resolution_holds(k, v, w)?;
            }
        }
        report.push(
            format!("step-resolution-k{k}"),
            format!("L_v = D_v + Lambda_v + S+_v on T_{k}"),
            resolution,
        );
    }
    Ok(())
}

fn all_words(len: usize) -> Vec<Vec<Axis>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                Axis::ALL.iter().map(move |&a| {
                    let mut w2 = w.clone();
                    w2.push(a);
                    w2
                })
            })
            .collect();
    }
    out
}

fn step_image_items(
    report: &mut VerifyReport,
    opts: &VerifyOptions,
    rng: &mut StdRng,
) -> Result<()> {
    let mut dipole = true;
    for a in Axis::ALL {
        for b in Axis::ALL {
            dipole &= multipole::verify_step_down_dipole(a, b)?;
        }
    }
    report.push(
        "step-down-dipole",
        "D_a T_1(J_b) = (1/3) C delta_ab",
        dipole,
    );

    for k in 2..=opts.k_max.min(5) {
        let mut ok = true;
        if k <= 3 {
            for a in Axis::ALL {
                for w in all_words(k as usize) {
                    ok &= multipole::verify_step_down_image(k, a, &w)?;
                }
            }
        } else {
            for _ in 0..6 {
                let a = Axis::from_index(rng.random_range(0..3));
                let w = random_word(rng, k as usize);
                ok &= multipole::verify_step_down_image(k, a, &w)?;
            }
        }
        report.push(
            format!("step-down-image-k{k}"),
            format!("D_a T_{k} matches its closed form over T_{}", k - 1),
            ok,
        );
    }

    for k in 1..=opts.k_max.min(5) {
        let mut ok = true;
        if k <= 3 {
            for a in Axis::ALL {
                for w in all_words(k as usize) {
                    ok &= multipole::verify_step_level_image(k, a, &w)?;
                }
            }
        } else {
            for _ in 0..6 {
                let a = Axis::from_index(rng.random_range(0..3));
                let w = random_word(rng, k as usize);
                ok &= multipole::verify_step_level_image(k, a, &w)?;
            }
        }
        report.push(
            format!("step-level-image-k{k}"),
            format!("Lambda_a T_{k} = (1/2) sum_p eps rotation of T_{k}"),
            ok,
        );
    }

    for k in 0..=opts.k_max.min(5) {
        let mut ok = true;
        if k <= 3 {
            for v in Axis::ALL {
                for w in index_multisets(k) {
                    ok &= multipole::verify_right_step_identities(k, v, &w)?;
                }
            }
        } else {
            for _ in 0..6 {
                let v = Axis::from_index(rng.random_range(0..3));
                let w = random_word(rng, k as usize);
                ok &= multipole::verify_right_step_identities(k, v, &w)?;
            }
        }
        report.push(
            format!("right-step-identities-k{k}"),
            "right-multiplication steps: D^R = D, S+^R = S+, Lambda^R = -Lambda",
            ok,
        );
    }

    // Cubic annihilator on L_v T_m, and its minimality: no proper divisor
    // annihilates every sample.
    for m in 1..=opts.k_max.min(5) {
        let cubic = left_action_annihilator(m);
        let samples: Vec<UeaElement> = index_multisets(m)
            .iter()
            .flat_map(|w| {
                let t = multipole(m, w).unwrap();
                Axis::ALL
                    .iter()
                    .map(|&v| left_mul(&UeaElement::generator(v), &t))
                    .collect::<Vec<_>>()
            })
            .collect();
        let annihilates = samples
            .iter()
            .all(|s| apply_poly(&cubic, e_action, s).is_zero());
        let mi = m as i64;
        let linear = |c: i64| Polynomial::from_i64(&[c, 1]);
        let factors = [
            linear(mi * (mi + 1)),
            linear((mi + 1) * (mi + 2)),
            linear((mi - 1) * mi),
        ];
        // Proper divisors: each single factor and each product of two.
        let mut divisors: Vec<Polynomial> = factors.to_vec();
        for i in 0..3 {
            for j in i + 1..3 {
                divisors.push(&factors[i] * &factors[j]);
            }
        }
        let minimal = divisors.iter().all(|q| {
            samples
                .iter()
                .any(|s| !apply_poly(q, e_action, s).is_zero())
        });
        report.push(
            format!("left-annihilator-minimality-m{m}"),
            format!(
                "the cubic (E+{}) (E+{}) (E+{}) kills L_v T_{m} and no proper divisor does",
                mi * (mi + 1),
                (mi + 1) * (mi + 2),
                (mi - 1) * mi
            ),
            annihilates && minimal,
        );
    }
    Ok(())
}

fn spin_items(report: &mut VerifyReport, opts: &VerifyOptions, rng: &mut StdRng) -> Result<()> {
    for k in 0..=opts.two_s_max {
        let table = build_spin_algebra(SpinLabel { two_s: k })?;
        let dim = table.dimension();

        report.push(
            format!("spin-dimension-2s{k}"),
            format!("dim S = (2s+1)^2 = {}", (k + 1) * (k + 1)),
            dim == ((k + 1) * (k + 1)) as usize,
        );
        report.push(
            format!("spin-identity-element-2s{k}"),
            "T_0 is a two-sided identity",
            spinalg::identity_element_check(&table),
        );

        let assoc = if k <= 3 {
            let mut ok = true;
            for i in 0..dim {
                for j in 0..dim {
                    for l in 0..dim {
                        ok &= spinalg::associativity_holds(&table, i, j, l);
                    }
                }
            }
            ok
        } else {
            (0..500).all(|_| {
                let (i, j, l) = (
                    rng.random_range(0..dim),
                    rng.random_range(0..dim),
                    rng.random_range(0..dim),
                );
                spinalg::associativity_holds(&table, i, j, l)
            })
        };
        report.push(
            format!("spin-associativity-2s{k}"),
            if k <= 3 {
                "associativity over all basis triples"
            } else {
                "associativity over 500 random basis triples"
            },
            assoc,
        );

        report.push(
            format!("casimir-scalar-2s{k}"),
            format!(
                "C acts as the scalar {}",
                crate::rational::pretty_string(table.casimir_scalar())
            ),
            spinalg::casimir_scalar_check(&table)?,
        );

        let mut spectrum = true;
        for a in Axis::ALL {
            spectrum &= spinalg::eigenspectrum_check(&table, a)?;
        }
        report.push(
            format!("eigenspectrum-2s{k}"),
            "the generator eigenspectrum polynomial reduces to zero",
            spectrum,
        );

        report.push(
            format!("top-multipole-2s{k}"),
            format!("all components of T_{} and T_{} vanish", k + 1, k + 2),
            spinalg::top_multipole_vanishes(&table)?,
        );
        report.push(
            format!("casimir-factor-2s{k}"),
            format!("(4C + {}) T_{k} reduces to zero", k * (k + 2)),
            spinalg::casimir_factor_identity_check(&table)?,
        );

        let mut stepdown = true;
        for w in index_multisets(k) {
            for a in Axis::ALL {
                for b in Axis::ALL {
                    stepdown &= spinalg::stepdown_stepup_vanishes(&table, a, b, &w)?;
                }
            }
        }
        report.push(
            format!("stepdown-stepup-2s{k}"),
            "D_a S+_b T_{2s} reduces to zero",
            stepdown,
        );

        report.push(
            format!("lie-closure-2s{k}"),
            "[T_1(J_a), T_1(J_b)] = sum_c eps_abc T_1(J_c)",
            spinalg::lie_closure_check(&table),
        );
    }

    if opts.two_s_max >= 1 {
        let table = build_spin_algebra(SpinLabel { two_s: 1 })?;
        report.push(
            "clifford-spin-half",
            "J_a J_b + J_b J_a = -(1/2) delta_ab in S_{1/2}",
            spinalg::clifford_check(&table),
        );
    }
    if opts.two_s_max >= 2 {
        let table = build_spin_algebra(SpinLabel { two_s: 2 })?;
        report.push(
            "kemmer-spin-one",
            "J_a J_b J_c + J_c J_b J_a = -(delta_ab J_c + delta_cb J_a) in S_1",
            spinalg::kemmer_check(&table),
        );
    }
    Ok(())
}

fn oracle_items(report: &mut VerifyReport, opts: &VerifyOptions) -> Result<()> {
    let tol = oracle::DEFAULT_TOL;
    let mut max_dev: f64 = 0.0;
    for k in 0..=opts.two_s_max {
        let table = build_spin_algebra(SpinLabel { two_s: k })?;
        let cmp = oracle::compare_structure_constants(&table, tol);
        max_dev = max_dev.max(cmp.max_deviation);
        report.push(
            format!("oracle-structure-constants-2s{k}"),
            format!(
                "matrix rep reproduces all {} products within {tol:.0e}",
                cmp.pairs_checked
            ),
            cmp.passed(),
        );

        // Rank of the multipole images in this representation.
        let rep = oracle::Rep::real(k);
        let mut ranks_ok = true;
        for level in 0..=k {
            let mats: Vec<_> = index_multisets(level)
                .iter()
                .map(|w| oracle::evaluate(&multipole(level, w).unwrap(), &rep))
                .collect();
            ranks_ok &= oracle::numerical_rank(&mats, 1e-8) == (2 * level + 1) as usize;
        }
        let above: Vec<_> = index_multisets(k + 1)
            .iter()
            .map(|w| oracle::evaluate(&multipole(k + 1, w).unwrap(), &rep))
            .collect();
        ranks_ok &= oracle::numerical_rank(&above, 1e-8) == 0;
        report.push(
            format!("oracle-multipole-rank-2s{k}"),
            format!("image ranks are 2k+1 for k <= {k} and 0 at k = {}", k + 1),
            ranks_ok,
        );
    }

    // Clifford and Kemmer in the physics convention.
    let m = oracle::build_spin_matrices(1);
    let mut clifford = true;
    for a in 0..3 {
        for b in 0..3 {
            let anti = m[a].mul(&m[b]).add(&m[b].mul(&m[a]));
            let expected = if a == b {
                oracle::ComplexMatrix::identity(2).scale(num_complex::Complex64::new(0.5, 0.0))
            } else {
                oracle::ComplexMatrix::zero(2)
            };
            let dev = anti.sub(&expected).frobenius_norm();
            max_dev = max_dev.max(dev);
            clifford &= dev < tol;
        }
    }
    report.push(
        "oracle-clifford",
        "S_a S_b + S_b S_a = (1/2) delta_ab at spin 1/2 (physics convention)",
        clifford,
    );

    let m = oracle::build_spin_matrices(2);
    let mut kemmer = true;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let lhs = m[a].mul(&m[b]).mul(&m[c]).add(&m[c].mul(&m[b]).mul(&m[a]));
                let mut rhs = oracle::ComplexMatrix::zero(3);
                if a == b {
                    rhs = rhs.add(&m[c]);
                }
                if c == b {
                    rhs = rhs.add(&m[a]);
                }
                let dev = lhs.sub(&rhs).frobenius_norm();
                max_dev = max_dev.max(dev);
                kemmer &= dev < tol;
            }
        }
    }
    report.push(
        "oracle-kemmer",
        "S_a S_b S_c + S_c S_b S_a = delta_ab S_c + delta_cb S_a at spin 1 (physics convention)",
        kemmer,
    );

    report.oracle_max_deviation = Some(max_dev);
    Ok(())
}
