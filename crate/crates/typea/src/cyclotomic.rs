//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element of order `N` is stored in the power basis `1, x, ..., x^{phi(N)-1}`
//! of `Q[x]/Phi_N(x)` as integer numerators over one positive common denominator.
//! Binary operations lift both operands to the lcm of their orders.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{divisors, euler_phi, factorize, inv_mod, mobius};

/// Largest order accepted for a cyclotomic field.
pub const MAX_ORDER: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("cyclotomic order {0} exceeds the bound {MAX_ORDER}")]
    OrderTooLarge(u64),
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

/// An element of Q/Z, kept as a reduced fraction in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QmodZ {
    num: i64,
    den: i64,
}

impl QmodZ {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        QmodZ { num: num / g, den: den / g }
    }

    pub fn zero() -> Self {
        QmodZ { num: 0, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Order of the element in Q/Z.
    pub fn order(&self) -> u64 {
        self.den as u64
    }

    pub fn add(&self, other: &QmodZ) -> QmodZ {
        let l = self.den.lcm(&other.den);
        QmodZ::new(self.num * (l / self.den) + other.num * (l / other.den), l)
    }

    pub fn sub(&self, other: &QmodZ) -> QmodZ {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QmodZ {
        QmodZ::new(-self.num, self.den)
    }

    pub fn scale(&self, k: i64) -> QmodZ {
        QmodZ::new(((self.num as i128 * k as i128).rem_euclid(self.den as i128)) as i64, self.den)
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    if let Some(p) = phi_cache().lock().expect("poisoned cache").get(&n) {
        return p.clone();
    }
    let deg = euler_phi(n) as usize;
    let poly = if n == 1 {
        vec![-1, 1]
    } else {
        // Phi_N = prod_{d | N} (1 - x^d)^{mu(N/d)} as a power series truncated past deg
        let mut s = vec![0i128; deg + 1];
        s[0] = 1;
        for d in divisors(n) {
            let d_us = d as usize;
            match mobius(n / d) {
                1 => {
                    for k in (d_us..=deg).rev() {
                        s[k] -= s[k - d_us];
                    }
                }
                -1 => {
                    for k in d_us..=deg {
                        s[k] += s[k - d_us];
                    }
                }
                _ => {}
            }
        }
        s.into_iter().map(|c| i64::try_from(c).expect("cyclotomic coefficient fits i64")).collect()
    };
    let poly = Arc::new(poly);
    phi_cache().lock().expect("poisoned cache").insert(n, poly.clone());
    poly
}

/// Reduces a coefficient vector (index = exponent) modulo `Phi_n`, returning `phi(n)` coefficients.
fn reduce_mod_phi(mut c: Vec<BigInt>, n: u64) -> Vec<BigInt> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if c.len() <= deg {
        c.resize(deg, BigInt::zero());
        return c;
    }
    for k in (deg..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let lead = std::mem::take(&mut c[k]);
        let shift = k - deg;
        for (i, &a) in phi[..deg].iter().enumerate() {
            if a != 0 {
                c[shift + i] -= &lead * a;
            }
        }
    }
    c.truncate(deg);
    c
}

/// Element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    fn normalized(order: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return Cyclotomic { order: 1, num: vec![BigInt::zero()], den: BigInt::one() };
        }
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -&*c;
            }
        }
        let g = num.iter().fold(den.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() {
            for c in &mut num {
                *c = &*c / &g;
            }
            den /= g;
        }
        Cyclotomic { order, num, den }
    }

    fn check_order(n: u64) -> Result<(), CyclotomicError> {
        match n {
            0 => Err(CyclotomicError::ZeroOrder),
            n if n > MAX_ORDER => Err(CyclotomicError::OrderTooLarge(n)),
            _ => Ok(()),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::normalized(1, vec![BigInt::from(k)], BigInt::one())
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Self::normalized(1, vec![k], BigInt::one())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::normalized(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// `sum_e counts[e] zeta_n^e` for a dense list of integer counts.
    pub fn from_exponent_counts(n: u64, counts: &[i64]) -> Result<Self, CyclotomicError> {
        Self::check_order(n)?;
        let mut c = vec![BigInt::zero(); n as usize];
        for (e, &k) in counts.iter().enumerate() {
            if k != 0 {
                c[e % n as usize] += k;
            }
        }
        Ok(Self::normalized(n, reduce_mod_phi(c, n), BigInt::one()))
    }

    /// `sum coeff * zeta_n^exp` for sparse rational terms.
    pub fn from_terms(n: u64, terms: &[(i64, BigRational)]) -> Result<Self, CyclotomicError> {
        Self::check_order(n)?;
        let den = terms.iter().fold(BigInt::one(), |acc, (_, r)| acc.lcm(r.denom()));
        let mut c = vec![BigInt::zero(); n as usize];
        for (e, r) in terms {
            let idx = e.rem_euclid(n as i64) as usize;
            c[idx] += r.numer() * (&den / r.denom());
        }
        Ok(Self::normalized(n, reduce_mod_phi(c, n), den))
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(k: i64, n: u64) -> Result<Self, CyclotomicError> {
        Self::check_order(n)?;
        let q = QmodZ::new(k, n as i64);
        Ok(Self::from_phase(q))
    }

    /// `exp(2 pi i x)` for `x` in Q/Z.
    pub fn from_phase(x: QmodZ) -> Self {
        let n = x.denom() as u64;
        assert!(n <= MAX_ORDER, "root of unity of order {n} exceeds the bound");
        let mut c = vec![BigInt::zero(); n as usize];
        c[x.numer() as usize] = BigInt::one();
        Self::normalized(n, reduce_mod_phi(c, n), BigInt::one())
    }

    /// The imaginary unit `zeta_4`.
    pub fn i() -> Self {
        Self::from_phase(QmodZ::new(1, 4))
    }

    /// Order of the field this value is currently stored in.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// Value expressed in `Q(zeta_m)` for a multiple `m` of the current order.
    pub fn lift(&self, m: u64) -> Result<Self, CyclotomicError> {
        Self::check_order(m)?;
        assert_eq!(m % self.order, 0, "lift target must be a multiple of the order");
        if m == self.order {
            return Ok(self.clone());
        }
        if self.is_zero() {
            let deg = euler_phi(m) as usize;
            return Ok(Cyclotomic { order: m, num: vec![BigInt::zero(); deg], den: BigInt::one() });
        }
        let step = (m / self.order) as usize;
        let mut c = vec![BigInt::zero(); m as usize];
        for (e, a) in self.num.iter().enumerate() {
            c[e * step] = a.clone();
        }
        Ok(Self::normalized(m, reduce_mod_phi(c, m), self.den.clone()))
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (
            self.lift(m).expect("common order within bound"),
            other.lift(m).expect("common order within bound"),
        )
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let den = a.den.lcm(&b.den);
        let fa = &den / &a.den;
        let fb = &den / &b.den;
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x * &fa + y * &fb).collect();
        Self::normalized(a.order, num, den)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Cyclotomic { order: self.order, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = self.common(other);
        let n = a.num.len();
        let mut c = vec![BigInt::zero(); 2 * n];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        Self::normalized(a.order, reduce_mod_phi(c, a.order), &a.den * &b.den)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::normalized(self.order, num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Image under `zeta_N -> zeta_N^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order;
        assert_eq!(k.rem_euclid(n as i64).gcd(&(n as i64)), 1, "Galois exponent must be a unit");
        let mut c = vec![BigInt::zero(); n as usize];
        for (e, a) in self.num.iter().enumerate() {
            if !a.is_zero() {
                let idx = ((e as i64 * k).rem_euclid(n as i64)) as usize;
                c[idx] += a;
            }
        }
        Self::normalized(n, reduce_mod_phi(c, n), self.den.clone())
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse, via the product of the nontrivial Galois conjugates.
    pub fn inverse(&self) -> Result<Self, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::DivisionByZero);
        }
        let x = self.reduce_conductor();
        if let Some(r) = x.to_rational() {
            return Ok(Self::from_rational(&(BigRational::one() / r)));
        }
        let n = x.order as i64;
        let mut others = Self::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = others.mul_ref(&x.galois(k));
            }
        }
        let norm = others.mul_ref(&x).to_rational().expect("field norm is rational");
        Ok(others.scale(&(BigRational::one() / norm)))
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// True when every numerator is divisible by the denominator.
    pub fn is_integral_in_power_basis(&self) -> bool {
        self.den.is_one()
    }

    /// Same value stored in the smallest cyclotomic field containing it.
    pub fn reduce_conductor(&self) -> Self {
        let mut x = self.clone();
        loop {
            let mut changed = false;
            for (p, a) in factorize(x.order) {
                if let Some(y) = x.descend(p, a) {
                    x = y;
                    changed = true;
                    break;
                }
            }
            if !changed {
                return x;
            }
        }
    }

    /// Tries to express the value in `Q(zeta_{N/p})`.
    fn descend(&self, p: u64, a: u32) -> Option<Self> {
        let n = self.order;
        let m = n / p;
        if a >= 2 {
            // Phi_N(x) = Phi_m(x^p): the subfield is spanned by exponents divisible by p
            if self.num.iter().enumerate().any(|(e, c)| !(e as u64).is_multiple_of(p) && !c.is_zero()) {
                return None;
            }
            let num = self.num.iter().step_by(p as usize).cloned().collect();
            return Some(Self::normalized(m, num, self.den.clone()));
        }
        // N = p m with gcd(p, m) = 1: write the value as sum_b y_b zeta_p^b, y_b in Q(zeta_m)
        let u = inv_mod(m as i64, p as i64).expect("coprime") as u64;
        let v = inv_mod(p as i64, m as i64).unwrap_or(0) as u64;
        let mut parts = vec![vec![BigInt::zero(); m as usize]; p as usize];
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = e as u64;
            let b = (e * u % p) as usize;
            let k = if m == 1 { 0 } else { (e * v % m) as usize };
            parts[b][k] += c;
        }
        let ys: Vec<Vec<BigInt>> = parts.into_iter().map(|c| reduce_mod_phi(c, m)).collect();
        let diff = |b: usize| -> Vec<BigInt> { ys[b].iter().zip(&ys[0]).map(|(x, y)| x - y).collect() };
        let d1 = diff(1);
        if (2..p as usize).any(|b| diff(b) != d1) {
            return None;
        }
        let num = d1.into_iter().map(|c| -c).collect();
        Some(Self::normalized(m, num, self.den.clone()))
    }

    /// `Some(x)` when the value equals `exp(2 pi i x)`.
    pub fn as_root_of_unity(&self) -> Option<QmodZ> {
        if self.mul_ref(&self.conj()) != Self::one() {
            return None;
        }
        let x = self.reduce_conductor();
        let l = x.order.lcm(&2);
        let target = x.lift(l).ok()?;
        let phi = cyclotomic_polynomial(l);
        let deg = phi.len() - 1;
        // walk the powers zeta_l^j in reduced form
        let mut cur: Vec<BigInt> = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for j in 0..l {
            if target.den.is_one() && cur == target.num {
                return Some(QmodZ::new(j as i64, l as i64));
            }
            let top = cur.pop().expect("nonempty");
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (i, &a) in phi[..deg].iter().enumerate() {
                    if a != 0 {
                        cur[i] -= &top * a;
                    }
                }
            }
        }
        None
    }

    /// Sparse `(exponent, coefficient)` terms at the minimal conductor.
    pub fn terms(&self) -> (u64, Vec<(u64, BigRational)>) {
        let x = self.reduce_conductor();
        let terms = x
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, BigRational::new(c.clone(), x.den.clone())))
            .collect();
        (x.order, terms)
    }

    /// Approximate complex value, for display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.order as f64;
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / d;
            let t = 2.0 * std::f64::consts::PI * e as f64 / n;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

macro_rules! binop {
    ($tr:ident, $method:ident, $impl:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$impl(rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$impl(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$impl(rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a.add_ref(&b))
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", fmt_rational(&r));
        }
        if let Some(x) = self.as_root_of_unity() {
            return match (x.numer(), x.denom()) {
                (1, 4) => write!(f, "i"),
                (3, 4) => write!(f, "-i"),
                (k, n) => write!(f, "ζ_{n}^{k}"),
            };
        }
        let (n, terms) = self.terms();
        let parts: Vec<String> = terms
            .iter()
            .map(|(e, c)| match *e {
                0 => fmt_rational(c),
                _ if c.is_one() => format!("ζ_{n}^{e}"),
                _ if (-c).is_one() => format!("-ζ_{n}^{e}"),
                _ => format!("{}*ζ_{n}^{e}", fmt_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    #[serde(rename = "N")]
    n: u64,
    coeffs: Vec<(u64, CoeffRepr)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (n, terms) = self.terms();
        let coeffs = terms
            .into_iter()
            .map(|(e, c)| {
                let repr = match (c.is_integer(), c.to_integer().to_i64()) {
                    (true, Some(k)) => CoeffRepr::Int(k),
                    _ => CoeffRepr::Text(fmt_rational(&c)),
                };
                (e, repr)
            })
            .collect();
        CyclotomicRepr { n, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.coeffs.len());
        for (e, c) in repr.coeffs {
            let r = match c {
                CoeffRepr::Int(k) => BigRational::from_integer(BigInt::from(k)),
                CoeffRepr::Text(s) => parse_rational(&s).ok_or_else(|| D::Error::custom(CyclotomicError::BadCoefficient(s)))?,
            };
            terms.push((e as i64, r));
        }
        Cyclotomic::from_terms(repr.n, &terms).map_err(D::Error::custom)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, n: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(k, n).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        let p105 = cyclotomic_polynomial(105);
        assert_eq!(p105.len() - 1, 48);
        assert_eq!(p105[7], -2);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..40u64 {
            let s: Cyclotomic = (0..n as i64).map(|k| z(k, n)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn equality_across_orders() {
        assert_eq!(z(1, 4), z(3, 12));
        assert_eq!(z(2, 4), Cyclotomic::from_int(-1));
        assert_eq!(z(1, 6) * z(1, 6), z(1, 3));
        assert_ne!(z(1, 5), z(1, 10));
    }

    #[test]
    fn conductor_descent() {
        assert_eq!(z(9, 12).reduce_conductor().order(), 4);
        assert_eq!(z(1, 10).reduce_conductor().order(), 5);
        // sqrt(-3) = zeta_3 - zeta_3^2 lives in Q(zeta_3)
        let s = z(1, 12).lift(60).unwrap() * z(1, 12).conj() * (z(1, 3) - z(2, 3));
        assert_eq!(s.reduce_conductor().order(), 3);
        let r = (z(1, 7) + z(6, 7)).lift(42).unwrap();
        assert_eq!(r.reduce_conductor().order(), 7);
        assert!((z(1, 5) + z(4, 5) + z(2, 5) + z(3, 5)).is_rational());
    }

    #[test]
    fn roots_detected() {
        assert_eq!(z(3, 12).as_root_of_unity(), Some(QmodZ::new(1, 4)));
        assert_eq!(Cyclotomic::from_int(-1).as_root_of_unity(), Some(QmodZ::new(1, 2)));
        assert_eq!((-z(1, 5)).as_root_of_unity(), Some(QmodZ::new(7, 10)));
        assert_eq!(Cyclotomic::from_int(2).as_root_of_unity(), None);
        assert_eq!((z(1, 8) + z(7, 8)).as_root_of_unity(), None);
    }

    #[test]
    fn inverse_and_display() {
        let x = z(1, 5) + Cyclotomic::from_int(2);
        assert_eq!(x.inverse().unwrap() * &x, Cyclotomic::one());
        assert_eq!(Cyclotomic::i().neg_ref().to_string(), "-i");
        assert_eq!(z(1, 3).to_string(), "ζ_3^1");
        assert_eq!(Cyclotomic::from_int(-1).to_string(), "-1");
    }

    #[test]
    fn json_roundtrip() {
        let x = z(1, 5).scale(&BigRational::new(BigInt::from(1), BigInt::from(2))) + z(3, 12);
        let s = serde_json::to_string(&x).unwrap();
        let y: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert_eq!(serde_json::to_string(&(-Cyclotomic::i())).unwrap(), r#"{"N":4,"coeffs":[[1,-1]]}"#);
    }

    #[test]
    fn zero_plus_higher_order() {
        let z = Cyclotomic::from_phase(QmodZ::new(1, 3));
        let x = (Cyclotomic::one() + z.clone()).scale_int(4);
        assert_eq!(Cyclotomic::zero() + x.clone(), x);
        assert_eq!(x.clone() + Cyclotomic::zero(), x);
        assert_eq!(Cyclotomic::zero() - z.clone() + z, Cyclotomic::zero());
    }

}
