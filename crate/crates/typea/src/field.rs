//! Finite fields `F_{p^s}` given by log/antilog tables.
//!
//! Elements are encoded as integers `sum_i c_i p^i`, where `c_i` is the
//! coefficient of `x^i` in the reduced polynomial representative.

use thiserror::Error;

use crate::arith::is_prime;

/// Largest field size accepted.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {0} exceeds the bound {MAX_FIELD_SIZE}")]
    TooLarge(u64),
    #[error("exponent {k} is not prime to the unit group order {order}")]
    NotAGenerator { k: u64, order: u64 },
}

/// Element code of a finite field.
pub type Fe = u32;

/// `F_{p^s}` with a distinguished generator `g` of the unit group.
///
/// The defining polynomial is the monic degree-`s` polynomial whose lower
/// coefficients have the least code `sum_{i<s} c_i p^i` among those making
/// `x` a generator of the unit group; `g` is then `x` (or a chosen power of it).
#[derive(Clone, Debug)]
pub struct FqField {
    p: u64,
    s: u32,
    size: u64,
    poly: Vec<u64>,
    gen_power: u64,
    exp: Vec<Fe>,
    log: Vec<u32>,
    trace: Vec<Fe>,
    add_table: Option<Vec<Fe>>,
}

const NO_LOG: u32 = u32::MAX;

impl FqField {
    pub fn new(p: u64, s: u32) -> Result<Self, FieldError> {
        Self::with_generator_power(p, s, 1)
    }

    /// Same field with distinguished generator `x^k`, `gcd(k, p^s - 1) = 1`.
    pub fn with_generator_power(p: u64, s: u32, k: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if s == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = p.checked_pow(s).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(FieldError::TooLarge(p.saturating_pow(s)))?;
        let order = size - 1;
        if num_integer::gcd(k, order) != 1 && order > 1 {
            return Err(FieldError::NotAGenerator { k, order });
        }
        let (poly, x_powers) = (0..p.pow(s))
            .find_map(|code| {
                let poly = digits(code, p, s as usize);
                powers_of_x(&poly, p, s as usize, order).map(|pw| (poly, pw))
            })
            .expect("a primitive polynomial exists");
        let exp: Vec<Fe> = (0..order).map(|j| x_powers[(j * k % order.max(1)) as usize]).collect();
        let mut log = vec![NO_LOG; size as usize];
        for (j, &c) in exp.iter().enumerate() {
            log[c as usize] = j as u32;
        }
        let mut field = FqField { p, s, size, poly, gen_power: k % order.max(1), exp, log, trace: Vec::new(), add_table: None };
        if size <= 256 {
            let mut t = vec![0; (size * size) as usize];
            for a in 0..size {
                for b in 0..size {
                    t[(a * size + b) as usize] = field.add_digits(a as Fe, b as Fe);
                }
            }
            field.add_table = Some(t);
        }
        field.trace = (0..size as Fe)
            .map(|a| {
                let mut acc = 0;
                let mut y = a;
                for _ in 0..s {
                    acc = field.add(acc, y);
                    y = field.pow(y, p);
                }
                acc
            })
            .collect();
        debug_assert!(field.trace.iter().all(|&t| (t as u64) < p));
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Order of the unit group.
    pub fn unit_order(&self) -> u64 {
        self.size - 1
    }

    /// Lower coefficients `c_0..c_{s-1}` of the monic defining polynomial.
    pub fn defining_polynomial(&self) -> &[u64] {
        &self.poly
    }

    /// Exponent `k` with `g = x^k`.
    pub fn generator_power(&self) -> u64 {
        self.gen_power
    }

    pub fn generator(&self) -> Fe {
        self.exp[1 % self.exp.len()]
    }

    /// `g^j`.
    pub fn exp(&self, j: u64) -> Fe {
        self.exp[(j % self.unit_order()) as usize]
    }

    /// Discrete log to base `g`; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u64> {
        let l = self.log[a as usize];
        (l != NO_LOG).then_some(l as u64)
    }

    /// Element of the prime field with the given residue.
    pub fn from_int(&self, k: i64) -> Fe {
        k.rem_euclid(self.p as i64) as Fe
    }

    fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.s {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as Fe
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.add_table {
            Some(t) => t[(a as u64 * self.size + b as u64) as usize],
            None => self.add_digits(a, b),
        }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let mut a = a as u64;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.s {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out as Fe
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        let q = self.unit_order();
        self.exp[((self.log[a as usize] as u64 + self.log[b as usize] as u64) % q) as usize]
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        let l = self.log(a)?;
        let q = self.unit_order();
        Some(self.exp[((q - l) % q) as usize])
    }

    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        match self.log(a) {
            None => {
                if k == 0 {
                    1
                } else {
                    0
                }
            }
            Some(l) => {
                let q = self.unit_order();
                self.exp[((l as u128 * k as u128) % q as u128) as usize]
            }
        }
    }

    /// Absolute trace to the prime field, as a residue in `0..p`.
    pub fn trace(&self, a: Fe) -> u64 {
        self.trace[a as usize] as u64
    }

    /// Elements of the subfield `F_{p^t}`, `t | s`.
    pub fn subfield(&self, t: u32) -> Vec<Fe> {
        assert_eq!(self.s % t, 0, "subfield degree must divide the field degree");
        let pt = self.p.pow(t);
        (0..self.size as Fe).filter(|&a| self.pow(a, pt) == a).collect()
    }

    /// `-1` as a field element.
    pub fn minus_one(&self) -> Fe {
        self.neg(1)
    }

    /// Checks that `g` generates the unit group (always true by construction).
    pub fn generator_is_primitive(&self) -> bool {
        let q = self.unit_order();
        q == 0 || crate::arith::factorize(q).iter().all(|&(l, _)| self.pow(self.generator(), q / l) != 1)
    }
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

/// `x^0, ..., x^{order-1}` as codes modulo `x^s + sum c_i x^i`, if `x` has exactly that order.
fn powers_of_x(poly: &[u64], p: u64, s: usize, order: u64) -> Option<Vec<Fe>> {
    let mut cur = vec![0u64; s];
    cur[0] = 1;
    let encode = |v: &[u64]| -> Fe { v.iter().rev().fold(0u64, |acc, &d| acc * p + d) as Fe };
    let mut out = Vec::with_capacity(order as usize);
    for j in 0..order {
        let code = encode(&cur);
        if j > 0 && code == 1 {
            return None;
        }
        out.push(code);
        // multiply by x
        let top = cur[s - 1];
        for i in (1..s).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..s {
            cur[i] = (cur[i] + (p - top) * poly[i]) % p;
        }
    }
    (encode(&cur) == 1).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f = FqField::new(2, 2).unwrap();
        assert_eq!(f.defining_polynomial(), &[1, 1]);
        assert_eq!(f.size(), 4);
        let f = FqField::new(3, 1).unwrap();
        assert_eq!(f.generator(), 2);
        let f = FqField::new(5, 2).unwrap();
        assert!(f.generator_is_primitive());
        for a in 1..25 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn trace_is_additive_and_onto() {
        let f = FqField::new(3, 3).unwrap();
        let mut counts = [0; 3];
        for a in 0..27 {
            counts[f.trace(a) as usize] += 1;
            for b in 0..27 {
                assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % 3);
            }
        }
        assert_eq!(counts, [9, 9, 9]);
    }

    #[test]
    fn distributivity() {
        let f = FqField::new(7, 2).unwrap();
        for a in 0..49 {
            for b in (0..49).step_by(5) {
                for c in (0..49).step_by(7) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn other_generator() {
        let f = FqField::with_generator_power(5, 2, 7).unwrap();
        assert!(f.generator_is_primitive());
        assert_eq!(f.generator(), FqField::new(5, 2).unwrap().exp(7));
        assert!(FqField::with_generator_power(5, 2, 2).is_err());
        assert_eq!(f.subfield(1).len(), 5);
    }
}
