//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty list. This module carries the extended GCD
//! with normalized minimal-degree Bézout pairs, which is the engine behind
//! every projector construction in the kernel.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{pretty_string, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c·x^degree`.
    pub fn monomial(degree: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn x() -> Self {
        Polynomial::monomial(1, Rational::one())
    }

    /// `x - root`.
    pub fn linear_root(root: &Rational) -> Self {
        Polynomial::new(vec![-root.clone(), Rational::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&(Rational::one() / lc)),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    /// Panics on a zero divisor; all callers divide by known-nonzero factors.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dlc = divisor
            .leading_coeff()
            .expect("polynomial division by zero");
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let shift = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap() / dlc;
            if !factor.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let t = d * &factor;
                    rem[shift + i] = &rem[shift + i] - &t;
                }
                quot[shift] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial { coeffs: rem })
    }

    pub fn rem(&self, modulus: &Polynomial) -> Polynomial {
        self.div_rem(modulus).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", pretty_string(c))?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{}*x", pretty_string(c))?,
                _ if c.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "{}*x^{k}", pretty_string(c))?,
            }
        }
        Ok(())
    }
}

/// Extended GCD with the Bézout pair in normalized minimal-degree form:
/// `a·p + b·q = g`, `g` monic, and `deg a < deg(q/g)` (or `a = 0`).
pub fn extended_gcd(
    p: &Polynomial,
    q: &Polynomial,
) -> Result<(Polynomial, Polynomial, Polynomial)> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothPolynomialsZero);
    }
    // Euclid with cofactor tracking: invariants r0 = a0·p + b0·q, r1 = a1·p + b1·q.
    let mut r0 = p.clone();
    let mut a0 = Polynomial::one();
    let mut b0 = Polynomial::zero();
    let mut r1 = q.clone();
    let mut a1 = Polynomial::zero();
    let mut b1 = Polynomial::one();
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1);
        let a2 = &a0 - &(&quot * &a1);
        let b2 = &b0 - &(&quot * &b1);
        r0 = r1;
        a0 = a1;
        b0 = b1;
        r1 = rem;
        a1 = a2;
        b1 = b2;
    }
    // Make g monic, then reduce a modulo q/g so the degree bound holds.
    let lc = r0.leading_coeff().unwrap().clone();
    let inv = Rational::one() / lc;
    let g = r0.scale(&inv);
    let mut a = a0.scale(&inv);
    let mut b = b0.scale(&inv);
    if !q.is_zero() {
        let qg = q.exact_div(&g);
        if !qg.is_constant() {
            a = a.rem(&qg);
            b = (&g - &(&a * p)).exact_div(q);
        } else {
            // q divides g, i.e. g = monic(q); take the canonical pair.
            a = Polynomial::zero();
            b = Polynomial::constant(Rational::one() / q.leading_coeff().unwrap());
        }
    }
    debug_assert_eq!(&(&a * p) + &(&b * q), g);
    Ok((g, a, b))
}

/// Evaluates `p(op)` on `x` by Horner's scheme, for any linear action the
/// caller supplies. Exact throughout; `op` is invoked `deg p` times.
pub fn apply_poly<V, F>(p: &Polynomial, mut op: F, x: &V) -> V
where
    V: LinearSpace,
    F: FnMut(&V) -> V,
{
    let mut cs = p.coeffs().iter().rev();
    let mut acc = match cs.next() {
        None => return x.scale_by(&Rational::zero()),
        Some(c) => x.scale_by(c),
    };
    for c in cs {
        acc = op(&acc).add_with(&x.scale_by(c));
    }
    acc
}

/// Minimal vector-space surface needed by [`apply_poly`].
pub trait LinearSpace: Clone {
    fn add_with(&self, other: &Self) -> Self;
    fn scale_by(&self, c: &Rational) -> Self;
}

impl LinearSpace for Polynomial {
    fn add_with(&self, other: &Self) -> Self {
        self + other
    }
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64(cs)
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[-1, 1]); // x - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        assert_eq!(p(&[0, 2]).gcd(&p(&[0, 0, 3])), p(&[0, 1]));
    }

    #[test]
    fn egcd_linear_pair() {
        // (x, x+2): (-1/2)x + (1/2)(x+2) = 1
        let (g, a, b) = extended_gcd(&p(&[0, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(g, Polynomial::one());
        assert_eq!(a, Polynomial::constant(rat(-1, 2)));
        assert_eq!(b, Polynomial::constant(rat(1, 2)));
    }

    #[test]
    fn egcd_common_factor() {
        // (x^2-1, x-1) -> (x-1, 0, 1)
        let (g, a, b) = extended_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert!(a.is_zero());
        assert_eq!(b, Polynomial::one());
    }

    #[test]
    fn egcd_quadratic_pair() {
        // (x^2+1, x) -> (1, 1, -x)
        let (g, a, b) = extended_gcd(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!(g, Polynomial::one());
        assert_eq!(a, Polynomial::one());
        assert_eq!(b, p(&[0, -1]));
    }

    #[test]
    fn egcd_rejects_double_zero() {
        assert!(extended_gcd(&Polynomial::zero(), &Polynomial::zero()).is_err());
    }

    #[test]
    fn egcd_one_side_zero() {
        let (g, a, b) = extended_gcd(&p(&[0, 0, 3]), &Polynomial::zero()).unwrap();
        assert_eq!(g, p(&[0, 0, 1]));
        assert_eq!(&(&a * &p(&[0, 0, 3])) + &(&b * &Polynomial::zero()), g);
    }

    #[test]
    fn apply_poly_in_quotient_ring() {
        // op = multiplication by x modulo x^2 - 2; p = x^2 + 1 acts as 3.
        let modulus = p(&[-2, 0, 1]);
        let op = |v: &Polynomial| (&Polynomial::x() * v).rem(&modulus);
        let got = apply_poly(&p(&[1, 0, 1]), op, &Polynomial::one());
        assert_eq!(got, Polynomial::constant(int(3)));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[2, -1, 1]).to_string(), "x^2 + -1*x + 2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec((-9i64..=9, 1i64..=4), 0..=max_deg + 1)
                .prop_map(|cs| Polynomial::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
        }

        proptest! {
            #[test]
            fn egcd_identity_holds(a in arb_poly(6), b in arb_poly(6)) {
                prop_assume!(!(a.is_zero() && b.is_zero()));
                let (g, s, t) = extended_gcd(&a, &b).unwrap();
                prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
                prop_assert!(a.rem(&g).is_zero() || a.is_zero());
                prop_assert!(b.rem(&g).is_zero() || b.is_zero());
                // Normalized degree bound: deg s < deg(b/g), or s = 0.
                if !b.is_zero() {
                    let bg = b.exact_div(&g);
                    if !bg.is_constant() {
                        prop_assert!(s.is_zero() || s.degree() < bg.degree());
                    } else {
                        prop_assert!(s.is_zero());
                    }
                }
            }

            #[test]
            fn div_rem_reconstructs(a in arb_poly(8), b in arb_poly(4)) {
                prop_assume!(!b.is_zero());
                let (q, r) = a.div_rem(&b);
                prop_assert_eq!(&(&q * &b) + &r, a);
                prop_assert!(r.is_zero() || r.degree() < b.degree());
            }
        }
    }
}
