use std::fmt;

use num_bigint::{BigInt, Sign};

use super::{nat_add, nat_mul, Natural};

/// An integer as the class `[(a, b)]` of a pair of naturals standing for `a - b`.
///
/// Any representative may be stored. Equality is class equality
/// (`(a,b) ~ (c,d)` iff `a + d = b + c`); [`IntegerPair::canonical`] picks the
/// representative with `min(a, b) = 0`.
#[derive(Clone, Debug)]
pub struct IntegerPair {
    pub a: Natural,
    pub b: Natural,
}

impl IntegerPair {
    /// A representative, stored as given.
    pub fn new(a: Natural, b: Natural) -> Self {
        IntegerPair { a, b }
    }

    pub fn from_i64(v: i64) -> Self {
        if v >= 0 {
            IntegerPair::new(Natural::from(v as u64), Natural::zero())
        } else {
            IntegerPair::new(Natural::zero(), Natural::from(v.unsigned_abs()))
        }
    }

    /// Embedding of the naturals: `n ↦ [(n, 0)]`.
    pub fn from_natural(n: Natural) -> Self {
        IntegerPair::new(n, Natural::zero())
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        let mag = Natural::from(v.magnitude().clone());
        match v.sign() {
            Sign::Minus => IntegerPair::new(Natural::zero(), mag),
            _ => IntegerPair::new(mag, Natural::zero()),
        }
    }

    pub fn equivalent(&self, other: &IntegerPair) -> bool {
        nat_add(&self.a, &other.b) == nat_add(&self.b, &other.a)
    }

    pub fn canonical(&self) -> IntegerPair {
        match self.a.checked_sub(&self.b) {
            Some(d) => IntegerPair::new(d, Natural::zero()),
            None => IntegerPair::new(
                Natural::zero(),
                self.b.checked_sub(&self.a).expect("b > a"),
            ),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.a.is_zero() || self.b.is_zero()
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.a.as_biguint().clone()) - BigInt::from(self.b.as_biguint().clone())
    }

    /// `[(a,b)] ≤ [(c,d)]` iff `a + d ≤ b + c`.
    pub fn le(&self, other: &IntegerPair) -> bool {
        nat_add(&self.a, &other.b) <= nat_add(&self.b, &other.a)
    }
}

impl PartialEq for IntegerPair {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl Eq for IntegerPair {}

/// `[(a,b)] + [(c,d)] := [(a+c, b+d)]`, canonicalized.
pub fn int_add(p: &IntegerPair, q: &IntegerPair) -> IntegerPair {
    IntegerPair::new(nat_add(&p.a, &q.a), nat_add(&p.b, &q.b)).canonical()
}

/// `[(a,b)] · [(c,d)] := [(ac+bd, ad+bc)]`, canonicalized.
pub fn int_mul(p: &IntegerPair, q: &IntegerPair) -> IntegerPair {
    let ac = nat_mul(&p.a, &q.a);
    let bd = nat_mul(&p.b, &q.b);
    let ad = nat_mul(&p.a, &q.b);
    let bc = nat_mul(&p.b, &q.a);
    IntegerPair::new(nat_add(&ac, &bd), nat_add(&ad, &bc)).canonical()
}

impl fmt::Display for IntegerPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bigint())
    }
}
