//! The universal enveloping algebra of so(3) in exact PBW normal form.
//!
//! Elements are finite rational-coefficient tables over ordered monomials
//! Jx^a Jy^b Jz^c. Products are computed by rewriting free words: an adjacent
//! out-of-order pair is bubble-swapped and the cross-product commutator is
//! carried as a shorter word, terminating on the (length, inversion) measure.
//! The three natural actions (left and right multiplication and the
//! adjoint) and the Casimir machinery E, E_k live here.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Signed, Zero};

use crate::poly::LinearSpace;
use crate::rational::{int, pretty_string, Rational};

/// A generator axis. The fixed total order x < y < z defines the PBW basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    pub fn from_name(s: &str) -> Option<Axis> {
        match s {
            "x" => Some(Axis::X),
            "y" => Some(Axis::Y),
            "z" => Some(Axis::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Levi-Civita ε_abc with ε_xyz = +1; the structure constants of so(3),
/// J_a × J_b = Σ_c ε_abc J_c.
pub fn structure_constant(a: Axis, b: Axis, c: Axis) -> Rational {
    let (i, j, k) = (a.index() as i32, b.index() as i32, c.index() as i32);
    if i == j || j == k || i == k {
        return Rational::zero();
    }
    // Parity of the permutation (i, j, k) of (0, 1, 2).
    if (j - i).rem_euclid(3) == 1 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// J_a × J_b for a ≠ b: the unique axis with nonzero ε and its sign.
pub fn cross(a: Axis, b: Axis) -> Option<(Axis, i8)> {
    if a == b {
        return None;
    }
    let c = Axis::from_index(3 - a.index() - b.index());
    let sign = if (b.index() as i32 - a.index() as i32).rem_euclid(3) == 1 {
        1
    } else {
        -1
    };
    Some((c, sign))
}

/// Exponent triple (e_x, e_y, e_z) of an ordered monomial Jx^a Jy^b Jz^c.
/// The derived `Ord` is the lexicographic order used by every export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(pub [u32; 3]);

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial([0, 0, 0]);

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn word(&self) -> Vec<Axis> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            w.extend(std::iter::repeat_n(Axis::from_index(i), e as usize));
        }
        w
    }

    pub fn exponent(&self, a: Axis) -> u32 {
        self.0[a.index()]
    }
}

/// All monomials of exact degree `d`, lexicographically sorted.
pub fn monomials_of_degree(d: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for ex in 0..=d {
        for ey in 0..=d - ex {
            out.push(PbwMonomial([ex, ey, d - ex - ey]));
        }
    }
    out.sort();
    out
}

/// All monomials of degree ≤ `n`, sorted by degree then lexicographically.
pub fn monomials_up_to(n: u32) -> Vec<PbwMonomial> {
    (0..=n).flat_map(monomials_of_degree).collect()
}

/// An element of U(so(3)): a canonical coefficient table over PBW monomials.
/// Zero coefficients are never stored, so equality is table equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        UeaElement::default()
    }

    pub fn one() -> Self {
        UeaElement::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = UeaElement::zero();
        e.add_term(PbwMonomial::ONE, c);
        e
    }

    pub fn generator(a: Axis) -> Self {
        let mut exps = [0u32; 3];
        exps[a.index()] = 1;
        UeaElement::monomial(PbwMonomial(exps))
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        let mut e = UeaElement::zero();
        e.add_term(m, Rational::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Max monomial degree, `None` for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(*m, x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UeaElement::zero();
        }
        UeaElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// The part of exact degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> UeaElement {
        UeaElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficients against an explicit monomial support, for exact rank work.
    pub fn coeff_vector(&self, support: &[PbwMonomial]) -> Vec<Rational> {
        support.iter().map(|m| self.coeff(m)).collect()
    }
}

/// Sorted union of the monomials appearing in `elems`.
pub fn monomial_support<'a>(elems: impl IntoIterator<Item = &'a UeaElement>) -> Vec<PbwMonomial> {
    let mut set: Vec<PbwMonomial> = elems
        .into_iter()
        .flat_map(|e| e.terms.keys().copied())
        .collect();
    set.sort();
    set.dedup();
    set
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&-Rational::one())
    }
}

impl Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        multiply(self, rhs)
    }
}

impl LinearSpace for UeaElement {
    fn add_with(&self, other: &Self) -> Self {
        self + other
    }
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Degree-descending, x before y before z; exports use plain lex order.
        let mut terms: Vec<(&PbwMonomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (std::cmp::Reverse(m.degree()), std::cmp::Reverse(**m)));
        for (i, (m, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let scalar_monomial = **m == PbwMonomial::ONE;
            if !mag.is_one() || scalar_monomial {
                write!(f, "{}", pretty_string(&mag))?;
                if !scalar_monomial {
                    write!(f, " ")?;
                }
            }
            for a in Axis::ALL {
                match m.exponent(a) {
                    0 => {}
                    1 => write!(f, "J{}", a.name())?,
                    e => write!(f, "J{}^{}", a.name(), e)?,
                }
            }
        }
        Ok(())
    }
}

/// A word in the free algebra on the generators; the domain of the multipole
/// maps and the input to PBW reduction.
pub type FreeWord = Vec<Axis>;

thread_local! {
    static NF_CACHE: RefCell<HashMap<Box<[Axis]>, Rc<UeaElement>>> =
        RefCell::new(HashMap::new());
}

// Words longer than this are reduced through cached subwords but not
// themselves retained, bounding the cache at a few hundred thousand entries.
const NF_CACHE_MAX_LEN: usize = 10;

fn sorted_word_monomial(word: &[Axis]) -> Option<PbwMonomial> {
    if word.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    let mut exps = [0u32; 3];
    for a in word {
        exps[a.index()] += 1;
    }
    Some(PbwMonomial(exps))
}

/// The unique PBW representative of a free word.
pub fn normal_form(word: &[Axis]) -> UeaElement {
    if let Some(m) = sorted_word_monomial(word) {
        return UeaElement::monomial(m);
    }
    NF_CACHE.with(|cache| (*nf_rec(word, &mut cache.borrow_mut())).clone())
}

fn nf_rec(word: &[Axis], cache: &mut HashMap<Box<[Axis]>, Rc<UeaElement>>) -> Rc<UeaElement> {
    if let Some(m) = sorted_word_monomial(word) {
        return Rc::new(UeaElement::monomial(m));
    }
    if let Some(hit) = cache.get(word) {
        return hit.clone();
    }
    let i = word.windows(2).position(|w| w[0] > w[1]).unwrap();
    // w[i] w[i+1] = w[i+1] w[i] + w[i] x w[i+1]
    let mut swapped = word.to_vec();
    swapped.swap(i, i + 1);
    let mut acc = (*nf_rec(&swapped, cache)).clone();
    let (c, sign) = cross(word[i], word[i + 1]).expect("strict inversion");
    let mut contracted = Vec::with_capacity(word.len() - 1);
    contracted.extend_from_slice(&word[..i]);
    contracted.push(c);
    contracted.extend_from_slice(&word[i + 2..]);
    acc.add_scaled(&nf_rec(&contracted, cache), &int(sign as i64));
    let result = Rc::new(acc);
    if word.len() <= NF_CACHE_MAX_LEN {
        cache.insert(word.into(), result.clone());
    }
    result
}

/// The associative product of U, bilinear over the PBW tables.
pub fn multiply(a: &UeaElement, b: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    NF_CACHE.with(|cache| {
        let cache = &mut cache.borrow_mut();
        for (ma, ca) in &a.terms {
            let head = ma.word();
            for (mb, cb) in &b.terms {
                let mut word = head.clone();
                word.extend(mb.word());
                let nf = nf_rec(&word, cache);
                out.add_scaled(&nf, &(ca * cb));
            }
        }
    });
    out
}

/// Left multiplication L_v: A ↦ v⊗A.
pub fn left_mul(v: &UeaElement, a: &UeaElement) -> UeaElement {
    multiply(v, a)
}

/// Right multiplication R_v: A ↦ A⊗v. Not a Lie algebra action: composing
/// two right multiplications reverses the bracket.
pub fn right_mul(v: &UeaElement, a: &UeaElement) -> UeaElement {
    multiply(a, v)
}

/// Adjoint action of a single generator: the derivation that replaces each
/// letter by its cross product with J_v. Degree-preserving.
pub fn adjoint_gen(v: Axis, a: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, coeff) in &a.terms {
        let word = m.word();
        for (p, &letter) in word.iter().enumerate() {
            let Some((replacement, sign)) = cross(v, letter) else {
                continue;
            };
            let mut replaced = word.clone();
            replaced[p] = replacement;
            out.add_scaled(&normal_form(&replaced), &(coeff * &int(sign as i64)));
        }
    }
    out
}

/// Adjoint action of an arbitrary element: scalars scale, generators act by
/// the cross product, and a monomial acts by composing its letters left to
/// right; extended linearly in `u`.
pub fn adjoint(u: &UeaElement, a: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, coeff) in &u.terms {
        let mut acted = a.clone();
        for letter in m.word().iter().rev() {
            acted = adjoint_gen(*letter, &acted);
        }
        out.add_scaled(&acted, coeff);
    }
    out
}

/// The Casimir element C = Jx² + Jy² + Jz², the generator of the centre.
pub fn casimir() -> UeaElement {
    let mut c = UeaElement::zero();
    c.add_term(PbwMonomial([2, 0, 0]), Rational::one());
    c.add_term(PbwMonomial([0, 2, 0]), Rational::one());
    c.add_term(PbwMonomial([0, 0, 2]), Rational::one());
    c
}

/// E = ad_C = Σ_a ad_a∘ad_a, the adjoint action of the Casimir element.
pub fn e_action(a: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for axis in Axis::ALL {
        out.add_scaled(&adjoint_gen(axis, &adjoint_gen(axis, a)), &Rational::one());
    }
    out
}

/// The same operator computed through its multiplication form,
/// E = 2·L_C − 2·Σ_a L_a∘R_a. Agreement with [`e_action`] is a tested
/// identity, not an assumption.
pub fn e_action_split(a: &UeaElement) -> UeaElement {
    let c = casimir();
    let mut out = multiply(&c, a).scale(&int(2));
    for axis in Axis::ALL {
        let gen = UeaElement::generator(axis);
        let lr = multiply(&gen, &multiply(a, &gen));
        out.add_scaled(&lr, &int(-2));
    }
    out
}

/// E_k = E + k(k+1)·id, the Casimir factor whose kernel is multipole level k.
pub fn e_factor(k: u32, a: &UeaElement) -> UeaElement {
    let mut out = e_action(a);
    out.add_scaled(a, &int((k as i64) * (k as i64 + 1)));
    out
}

/// A rational linear combination of free words: the k-adic tensor arguments
/// fed to the multipole maps.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeTensor {
    terms: BTreeMap<FreeWord, Rational>,
}

impl FreeTensor {
    pub fn zero() -> Self {
        FreeTensor::default()
    }

    pub fn word(w: &[Axis]) -> Self {
        let mut t = FreeTensor::zero();
        t.add_term(w.to_vec(), Rational::one());
        t
    }

    pub fn add_term(&mut self, w: FreeWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FreeTensor, c: &Rational) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adjoint action of a generator on tensor slots: the derivation that
    /// rotates each letter, with no reordering (the slots are free).
    pub fn adjoint_gen(&self, v: Axis) -> FreeTensor {
        let mut out = FreeTensor::zero();
        for (w, coeff) in &self.terms {
            for (p, &letter) in w.iter().enumerate() {
                let Some((replacement, sign)) = cross(v, letter) else {
                    continue;
                };
                let mut replaced = w.clone();
                replaced[p] = replacement;
                out.add_term(replaced, coeff * &int(sign as i64));
            }
        }
        out
    }

    /// Adjoint action of an arbitrary algebra element on tensor slots,
    /// mirroring [`adjoint`].
    pub fn adjoint_elem(&self, u: &UeaElement) -> FreeTensor {
        let mut out = FreeTensor::zero();
        for (m, coeff) in &u.terms {
            let mut acted = self.clone();
            for letter in m.word().iter().rev() {
                acted = acted.adjoint_gen(*letter);
            }
            out.add_scaled(&acted, coeff);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn gen(a: Axis) -> UeaElement {
        UeaElement::generator(a)
    }

    #[test]
    fn structure_constants_are_levi_civita() {
        use Axis::*;
        assert_eq!(structure_constant(X, Y, Z), int(1));
        assert_eq!(structure_constant(Y, X, Z), int(-1));
        assert_eq!(structure_constant(X, X, Z), int(0));
        // Total antisymmetry over every triple.
        for a in Axis::ALL {
            for b in Axis::ALL {
                for c in Axis::ALL {
                    assert_eq!(structure_constant(a, b, c), -structure_constant(b, a, c));
                    assert_eq!(structure_constant(a, b, c), -structure_constant(a, c, b));
                }
            }
        }
    }

    #[test]
    fn normal_form_of_ordered_word_is_a_monomial() {
        let nf = normal_form(&[Axis::X, Axis::Y]);
        assert_eq!(nf, UeaElement::monomial(PbwMonomial([1, 1, 0])));
    }

    #[test]
    fn normal_form_swaps_with_commutator() {
        // Jy Jx = Jx Jy - Jz
        let nf = normal_form(&[Axis::Y, Axis::X]);
        let mut expected = UeaElement::monomial(PbwMonomial([1, 1, 0]));
        expected.add_term(PbwMonomial([0, 0, 1]), int(-1));
        assert_eq!(nf, expected);
    }

    #[test]
    fn multiply_identity_and_bracket() {
        let a = normal_form(&[Axis::Z, Axis::X, Axis::Y]);
        assert_eq!(multiply(&UeaElement::one(), &a), a);
        let bracket =
            &multiply(&gen(Axis::X), &gen(Axis::Y)) - &multiply(&gen(Axis::Y), &gen(Axis::X));
        assert_eq!(bracket, gen(Axis::Z));
    }

    #[test]
    fn casimir_is_central() {
        let c = casimir();
        for a in Axis::ALL {
            let g = gen(a);
            assert_eq!(multiply(&c, &g), multiply(&g, &c));
        }
        assert!(adjoint(&c, &UeaElement::one()).is_zero());
    }

    #[test]
    fn left_and_right_mul_agree_for_central_elements() {
        let c = casimir();
        let jz = gen(Axis::Z);
        assert_eq!(left_mul(&c, &jz), right_mul(&c, &jz));
        assert_eq!(left_mul(&gen(Axis::X), &UeaElement::one()), gen(Axis::X));
        assert_eq!(
            left_mul(&gen(Axis::X), &gen(Axis::X)),
            UeaElement::monomial(PbwMonomial([2, 0, 0]))
        );
    }

    #[test]
    fn right_mul_composition_reverses_the_bracket() {
        // (R_a∘R_b − R_b∘R_a)(1) = J_b × J_a
        let one = UeaElement::one();
        let (a, b) = (gen(Axis::X), gen(Axis::Y));
        let lhs = &right_mul(&a, &right_mul(&b, &one)) - &right_mul(&b, &right_mul(&a, &one));
        assert_eq!(lhs, -&gen(Axis::Z));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint(&gen(Axis::X), &gen(Axis::Y)), gen(Axis::Z));
        let c = casimir();
        for a in Axis::ALL {
            assert_eq!(adjoint(&c, &gen(a)), gen(a).scale(&int(-2)));
        }
    }

    #[test]
    fn apply_poly_drives_operator_actions() {
        use crate::poly::{apply_poly, Polynomial};
        let jy = gen(Axis::Y);
        // p = 1 is the identity action.
        assert_eq!(apply_poly(&Polynomial::one(), e_action, &jy), jy);
        // p = x applies E once: the dipole eigenvalue.
        assert_eq!(
            apply_poly(&Polynomial::x(), e_action, &jy),
            jy.scale(&int(-2))
        );
        // x(x+2) is the minimal polynomial of E there, so it annihilates.
        let m = &Polynomial::x() * &Polynomial::from_i64(&[2, 1]);
        assert!(apply_poly(&m, e_action, &jy).is_zero());
    }

    #[test]
    fn e_action_eigenvalues() {
        assert!(e_action(&UeaElement::one()).is_zero());
        for b in Axis::ALL {
            assert_eq!(e_action(&gen(b)), gen(b).scale(&int(-2)));
            assert!(e_factor(1, &gen(b)).is_zero());
            assert_eq!(e_factor(0, &gen(b)), e_action(&gen(b)));
            assert_eq!(e_factor(2, &gen(b)), gen(b).scale(&int(4)));
        }
    }

    #[test]
    fn display_reads_naturally() {
        let mut e = UeaElement::monomial(PbwMonomial([1, 1, 0]));
        e.add_term(PbwMonomial([0, 0, 1]), rat(-1, 2));
        assert_eq!(e.to_string(), "JxJy - 1/2 Jz");
        assert_eq!(UeaElement::zero().to_string(), "0");
        assert_eq!(UeaElement::scalar(int(1)).to_string(), "1");
    }

    // An independent reducer for the confluence tests: rewrites the *last*
    // inversion instead of the first, so it walks a different path through
    // the rewriting graph.
    fn normal_form_last_inversion(word: &[Axis]) -> UeaElement {
        if let Some(m) = sorted_word_monomial(word) {
            return UeaElement::monomial(m);
        }
        let i = (0..word.len() - 1)
            .rev()
            .find(|&i| word[i] > word[i + 1])
            .unwrap();
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let mut acc = normal_form_last_inversion(&swapped);
        let (c, sign) = cross(word[i], word[i + 1]).unwrap();
        let mut contracted = word[..i].to_vec();
        contracted.push(c);
        contracted.extend_from_slice(&word[i + 2..]);
        acc.add_scaled(&normal_form_last_inversion(&contracted), &int(sign as i64));
        acc
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        pub fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<Axis>> {
            proptest::collection::vec(0usize..3, 0..=max_len)
                .prop_map(|v| v.into_iter().map(Axis::from_index).collect())
        }

        pub fn arb_element(max_deg: u32) -> impl Strategy<Value = UeaElement> {
            proptest::collection::vec(
                ((0u32..=max_deg, 0u32..=max_deg, 0u32..=max_deg), -6i64..=6),
                1..=5,
            )
            .prop_map(move |terms| {
                let mut e = UeaElement::zero();
                for ((mut ex, mut ey, ez), c) in terms {
                    // Clamp the triple so the degree bound holds.
                    while ex + ey + ez > max_deg {
                        if ex > 0 {
                            ex -= 1;
                        } else {
                            ey -= 1;
                        }
                    }
                    e.add_term(PbwMonomial([ex, ey, ez]), int(c));
                }
                e
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn pbw_confluence(word in arb_word(6), split in 0usize..7) {
                // First-inversion and last-inversion rewriting agree…
                let nf = normal_form(&word);
                prop_assert_eq!(&nf, &normal_form_last_inversion(&word));
                // …and reducing the two halves first gives the same element.
                let cut = split.min(word.len());
                let left = normal_form(&word[..cut]);
                let right = normal_form(&word[cut..]);
                prop_assert_eq!(multiply(&left, &right), nf);
            }

            #[test]
            fn multiplication_is_associative(
                a in arb_word(3), b in arb_word(3), c in arb_word(3)
            ) {
                let (a, b, c) = (normal_form(&a), normal_form(&b), normal_form(&c));
                prop_assert_eq!(
                    multiply(&multiply(&a, &b), &c),
                    multiply(&a, &multiply(&b, &c))
                );
            }

            #[test]
            fn jacobi_consistency(x in arb_element(4)) {
                // ad_{a×b} = ad_a∘ad_b − ad_b∘ad_a
                for a in Axis::ALL {
                    for b in Axis::ALL {
                        let mut lhs = UeaElement::zero();
                        for c in Axis::ALL {
                            lhs.add_scaled(&adjoint_gen(c, &x), &structure_constant(a, b, c));
                        }
                        let rhs = &adjoint_gen(a, &adjoint_gen(b, &x))
                            - &adjoint_gen(b, &adjoint_gen(a, &x));
                        prop_assert_eq!(&lhs, &rhs);
                    }
                }
            }

            #[test]
            fn adjoint_is_left_minus_right(x in arb_element(4)) {
                for v in Axis::ALL {
                    let g = UeaElement::generator(v);
                    let lhs = adjoint_gen(v, &x);
                    let rhs = &left_mul(&g, &x) - &right_mul(&g, &x);
                    prop_assert_eq!(&lhs, &rhs);
                }
            }

            #[test]
            fn casimir_action_split_agrees(x in arb_element(4)) {
                prop_assert_eq!(e_action(&x), e_action_split(&x));
            }
        }
    }

    // F(J_b) = Σ_{c,a} ε_{bca} L_c∘R_a
    fn f_operator(b: Axis, x: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for c in Axis::ALL {
            for a in Axis::ALL {
                let eps = structure_constant(b, c, a);
                if eps.is_zero() {
                    continue;
                }
                let term = multiply(
                    &UeaElement::generator(c),
                    &multiply(x, &UeaElement::generator(a)),
                );
                out.add_scaled(&term, &eps);
            }
        }
        out
    }

    mod commutator_identities {
        use super::*;
        use proptest::prelude::*;

        use super::properties::arb_element;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn e_commutes_into_f(x in arb_element(4)) {
                // [E, L_b] = −2 F(J_b), and [E, L_b] = [E, R_b]
                for b in Axis::ALL {
                    let g = UeaElement::generator(b);
                    let el = &e_action(&left_mul(&g, &x)) - &left_mul(&g, &e_action(&x));
                    prop_assert_eq!(&el, &f_operator(b, &x).scale(&int(-2)));
                    let er = &e_action(&right_mul(&g, &x)) - &right_mul(&g, &e_action(&x));
                    prop_assert_eq!(&el, &er);
                }
            }

            #[test]
            fn e_f_commutator(x in arb_element(4)) {
                // [E, F(J_b)] = L_b∘E + E∘R_b
                for b in Axis::ALL {
                    let g = UeaElement::generator(b);
                    let lhs = &e_action(&f_operator(b, &x)) - &f_operator(b, &e_action(&x));
                    let rhs = &left_mul(&g, &e_action(&x)) + &e_action(&right_mul(&g, &x));
                    prop_assert_eq!(&lhs, &rhs);
                }
            }

            #[test]
            fn left_action_cubic_identity(x in arb_element(4)) {
                // [E,[E,[E,L_v]]] + 2[E², L_v] = 0 on the whole algebra.
                for v in Axis::ALL {
                    let g = UeaElement::generator(v);
                    let lv = |y: &UeaElement| left_mul(&g, y);
                    let comm_e =
                        |op: &dyn Fn(&UeaElement) -> UeaElement, y: &UeaElement| {
                            &e_action(&op(y)) - &op(&e_action(y))
                        };
                    let c1 = |y: &UeaElement| comm_e(&lv, y);
                    let c2 = |y: &UeaElement| comm_e(&c1, y);
                    let c3 = comm_e(&c2, &x);
                    let e2l = e_action(&e_action(&lv(&x)));
                    let le2 = lv(&e_action(&e_action(&x)));
                    let total = &c3 + &(&e2l - &le2).scale(&int(2));
                    prop_assert!(total.is_zero(), "residual {total}");
                }
            }
        }
    }
}
