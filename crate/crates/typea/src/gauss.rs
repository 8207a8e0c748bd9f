//! Gauss sums over finite fields and the group constants `G(G, zeta)`.
//!
//! Conventions: `kappa(g) = zeta_{p^s - 1}` for the field's distinguished
//! generator `g`, and `chi_1(x) = zeta_p^x` on the prime field.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::center::{center_group, f_minus_one, is_cuspidal_character, CenterGroup};
use crate::cyclotomic::{Cyclotomic, CyclotomicError, QmodZ};
use crate::field::{FieldError, FqField};
use crate::lattice::AbChar;
use crate::root_datum::{frobenius_sign, perm_sign, FrobeniusData, RootDatumA};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaussError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error("the Legendre character needs an odd prime, got p = 2")]
    EvenPrime,
    #[error("a half-integral power of q = {0} is not defined for even q")]
    HalfPowerOfEven(u64),
    #[error("the character is not trivial on (F - 1) of the center")]
    NotStable,
    #[error("the character is not cuspidal")]
    NotCuspidal,
    #[error("no F-stable cuspidal character: n = {n} does not divide q - epsilon = {q_minus_eps}")]
    NoStableCuspidal { n: usize, q_minus_eps: i64 },
    #[error("route `{route}` does not apply: {reason}")]
    RouteNotApplicable { route: String, reason: String },
    #[error("unknown route `{0}`")]
    UnknownRoute(String),
    #[error("the character does not belong to the center of this group")]
    WrongGroup,
}

/// `G_s(kappa^m) = sum_{x in F^x} kappa^m(x) chi_s(x)` by direct summation.
pub fn gauss_sum(field: &FqField, m: i64) -> Result<Cyclotomic, GaussError> {
    let q = field.unit_order();
    let p = field.p();
    let mr = m.rem_euclid(q as i64) as u64;
    let g = num_integer::gcd(mr, q);
    let ord = q / g;
    let step = mr / g;
    // zeta_ord^a zeta_p^b = zeta_{p ord}^{a p + b ord}
    let n = p * ord;
    let mut counts = vec![0i64; n as usize];
    for j in 0..q {
        let a = (j * step) % ord;
        let b = field.trace(field.exp(j));
        counts[((a * p + b * ord) % n) as usize] += 1;
    }
    Ok(Cyclotomic::from_exponent_counts(n, &counts)?)
}

/// The Legendre exponent `(p^s - 1) / 2`.
fn legendre_exponent(field: &FqField) -> i64 {
    (field.unit_order() / 2) as i64
}

/// `p^{1/2}`: `G_1(L_1)` if `p = 1 mod 4`, `i^{-1} G_1(L_1)` if `p = 3 mod 4`.
pub fn sqrt_p(p: u64) -> Result<Cyclotomic, GaussError> {
    if p == 2 {
        return Err(GaussError::EvenPrime);
    }
    let f = FqField::new(p, 1)?;
    let g = gauss_sum(&f, legendre_exponent(&f))?;
    Ok(if p % 4 == 1 { g } else { Cyclotomic::i().conj() * g })
}

/// `q^{k/2}` for `q = p^r`, with the square root fixed by [`sqrt_p`].
pub fn q_half_power(p: u64, r: u32, k: i64) -> Result<Cyclotomic, GaussError> {
    let q = BigInt::from(p).pow(r);
    let rational = |e: i64| -> Cyclotomic {
        let v = if e >= 0 {
            BigRational::from_integer(q.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), q.pow((-e) as u32))
        };
        Cyclotomic::from_rational(&v)
    };
    if k % 2 == 0 {
        return Ok(rational(k / 2));
    }
    if r.is_multiple_of(2) {
        let base = BigRational::from_integer(BigInt::from(p).pow(r / 2));
        let abs = (0..k.unsigned_abs()).fold(BigRational::one(), |acc, _| acc * &base);
        let v = if k > 0 { abs } else { BigRational::one() / abs };
        return Ok(Cyclotomic::from_rational(&v));
    }
    if p == 2 {
        return Err(GaussError::HalfPowerOfEven(p.pow(r)));
    }
    // q^{k/2} = (p^{1/2})^{r} q^{(k-1)/2}
    let sq = sqrt_p(p)?.pow(r);
    Ok(sq * rational((k - 1) / 2))
}

/// `lambda_s = p^{-s/2} G_s(L_s)`.
pub fn lambda(p: u64, s: u32) -> Result<Cyclotomic, GaussError> {
    if p == 2 {
        return Err(GaussError::EvenPrime);
    }
    let f = FqField::new(p, s)?;
    let g = gauss_sum(&f, legendre_exponent(&f))?;
    Ok(g * q_half_power(p, s, -1)?)
}

/// Closed form of `lambda_s` from the Hasse-Davenport relation
/// `G_s(L_s) = (-1)^{s-1} G_1(L_1)^s`: `(-1)^{s-1}` if `p = 1 mod 4`,
/// `(-1)^{s-1} i^s` if `p = 3 mod 4`.
pub fn lambda_closed(p: u64, s: u32) -> Result<Cyclotomic, GaussError> {
    let sign = if s % 2 == 1 { 1 } else { -1 };
    Ok(legendre_formula(p, s)?.scale_int(sign))
}

/// The classical table `1` (`p = 1 mod 4`) or `i^s` (`p = 3 mod 4`).
/// It agrees with [`lambda`] for odd `s` only.
pub fn legendre_formula(p: u64, s: u32) -> Result<Cyclotomic, GaussError> {
    if p == 2 {
        return Err(GaussError::EvenPrime);
    }
    Ok(if p % 4 == 1 { Cyclotomic::one() } else { Cyclotomic::i().pow(s) })
}

/// One Gauss-sum factor of the group constant, for an orbit of `phi_0` on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantFactor {
    pub orbit: Vec<usize>,
    /// `F^{|omega|}(alpha) = p^{r_omega} alpha`.
    pub r_omega: u32,
    /// `<zeta_dot, varpi_alpha^vee>` modulo 1.
    pub phase: QmodZ,
}

impl ConstantFactor {
    /// The exponent `m` with `theta = kappa^m` on `F_{p^{r_omega}}`.
    pub fn kappa_exponent(&self, p: u64) -> Result<i64, GaussError> {
        let q = p.pow(self.r_omega) as i64 - 1;
        let num = self.phase.numer() * q;
        if num % self.phase.denom() != 0 {
            return Err(GaussError::NotStable);
        }
        Ok(num / self.phase.denom())
    }
}

/// Data needed to evaluate `G(G, zeta)`.
#[derive(Clone, Debug)]
pub struct ConstantProblem {
    pub datum: RootDatumA,
    pub frob: FrobeniusData,
    pub center: CenterGroup,
    pub zeta: AbChar,
}

impl ConstantProblem {
    pub fn new(datum: RootDatumA, frob: FrobeniusData, zeta: AbChar) -> Result<Self, GaussError> {
        let center = center_group(&datum, &frob);
        if zeta.group() != center.group() {
            return Err(GaussError::WrongGroup);
        }
        let f1 = f_minus_one(&center);
        let stable = (0..center.group().rank()).all(|j| {
            let col: Vec<u64> = (0..center.group().rank()).map(|i| f1.matrix().get_i64(i, j) as u64).collect();
            zeta.phase_coords(&col).is_zero()
        });
        if !stable {
            return Err(GaussError::NotStable);
        }
        Ok(ConstantProblem { datum, frob, center, zeta })
    }

    /// `(n, epsilon)` when the group is a single simply connected factor.
    pub fn simple_type(&self) -> Option<(usize, i64)> {
        match (self.datum.factors(), self.datum.lattice_index()) {
            ([n], 1) => Some((*n, if self.frob.twisted[0] { -1 } else { 1 })),
            _ => None,
        }
    }

    pub fn factors(&self) -> Vec<ConstantFactor> {
        self.frob
            .root_orbits()
            .into_iter()
            .map(|orbit| {
                let alpha = orbit[0];
                let phase = self.zeta.phase_coords(self.center.coweight_image(alpha));
                ConstantFactor { r_omega: self.frob.r * orbit.len() as u32, orbit, phase }
            })
            .collect()
    }

    /// Sign in front of the product: `(-1)^{|Δ/phi_0|}` times, over the
    /// `phi_0`-orbits of factors, the sign of `phi_0^k` on one factor of the orbit.
    pub fn sign(&self) -> i64 {
        let orbit_count = self.frob.root_orbits().len() as i64;
        let offs = self.datum.factor_offsets();
        let mut s = if orbit_count % 2 == 0 { 1 } else { -1 };
        for orbit in self.frob.factor_orbits() {
            let f = orbit[0];
            let n = self.datum.factors()[f];
            let k = orbit.len();
            let restricted: Vec<usize> = (0..n - 1)
                .map(|j| {
                    let mut i = offs[f] + j;
                    for _ in 0..k {
                        i = self.frob.phi0_perm[i];
                    }
                    i - offs[f]
                })
                .collect();
            s *= perm_sign(&restricted);
        }
        s
    }

    /// `sign * q^{-rank/2}`.
    fn prefactor(&self) -> Result<Cyclotomic, GaussError> {
        let rank = self.datum.semisimple_rank() as i64;
        Ok(q_half_power(self.frob.p, self.frob.r, -rank)?.scale_int(self.sign()))
    }

    /// The `(epsilon, eta)` pair of the group, for reference in reports.
    pub fn signs(&self) -> (i64, i64) {
        frobenius_sign(&self.datum, &self.frob)
    }
}

/// A way of evaluating `G(G, zeta)`.
pub trait ConstantRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn evaluate(&self, problem: &ConstantProblem) -> Result<Cyclotomic, GaussError>;
}

/// Product of Gauss sums, each computed by direct summation over the field.
pub struct DirectRoute;

impl ConstantRoute for DirectRoute {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn evaluate(&self, problem: &ConstantProblem) -> Result<Cyclotomic, GaussError> {
        let mut acc = problem.prefactor()?;
        for f in problem.factors() {
            let field = FqField::new(problem.frob.p, f.r_omega)?;
            acc = acc * gauss_sum(&field, f.kappa_exponent(problem.frob.p)?)?;
        }
        Ok(acc)
    }
}

/// Product of Gauss sums evaluated through the norm, Legendre and unitary identities.
pub struct ProductRoute;

impl ProductRoute {
    fn not_applicable(reason: impl Into<String>) -> GaussError {
        GaussError::RouteNotApplicable { route: "product".into(), reason: reason.into() }
    }
}

impl ConstantRoute for ProductRoute {
    fn name(&self) -> &'static str {
        "product"
    }

    fn evaluate(&self, problem: &ConstantProblem) -> Result<Cyclotomic, GaussError> {
        let p = problem.frob.p;
        let mut pending: Vec<(u32, QmodZ)> = problem.factors().into_iter().map(|f| (f.r_omega, f.phase)).collect();
        let mut acc = problem.prefactor()?;
        while let Some((r, phase)) = pending.pop() {
            let q_r = p.pow(r);
            if phase.is_zero() {
                // trivial character: sum of chi over the units
                acc = acc.scale_int(-1);
            } else if phase.denom() == 2 {
                if p == 2 {
                    return Err(Self::not_applicable("quadratic character in characteristic 2"));
                }
                acc = acc * lambda_closed(p, r)? * q_half_power(p, r, 1)?;
            } else if let Some(pos) = pending.iter().position(|&(r2, ph2)| r2 == r && ph2 == phase.neg()) {
                pending.remove(pos);
                // G(theta) G(theta^{-1}) = p^r theta(-1)
                let m = phase.numer() * (q_r as i64 - 1) / phase.denom();
                let sign = if p == 2 || m % 2 == 0 { 1 } else { -1 };
                acc = acc.scale_int(sign * q_r as i64);
            } else if r % 2 == 0 && (p.pow(r / 2) + 1).is_multiple_of(phase.denom() as u64) {
                // G_{2t}(theta) = theta(xi) p^t for theta^{p^t + 1} = 1
                let qt = p.pow(r / 2);
                let xi_sign = if p == 2 {
                    1
                } else {
                    // xi = g^{(p^t + 1)/2}: theta(xi) = exp(2 pi i phase (p^t + 1) / 2)
                    let e = phase.scale(qt.div_ceil(2) as i64);
                    if e.is_zero() {
                        1
                    } else {
                        -1
                    }
                };
                acc = acc.scale_int(xi_sign * qt as i64);
            } else {
                return Err(Self::not_applicable(format!("no identity for a character of order {} over F_{}", phase.denom(), q_r)));
            }
        }
        Ok(acc)
    }
}

/// Closed formula for `SL_n` / `SU_n` with an injective `F`-stable `zeta`.
pub struct ClosedRoute;

impl ConstantRoute for ClosedRoute {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn evaluate(&self, problem: &ConstantProblem) -> Result<Cyclotomic, GaussError> {
        let (n, eps) = problem.simple_type().ok_or_else(|| GaussError::RouteNotApplicable {
            route: "closed".into(),
            reason: "the group is not a single simply connected factor".into(),
        })?;
        if !is_cuspidal_character(&problem.center, &problem.zeta) {
            return Err(GaussError::NotCuspidal);
        }
        sln_constant_closed(n, problem.frob.q, eps < 0)
    }
}

/// `1` for `n` odd, `-lambda_r (-1)^{(q - epsilon)(n - 2)/8}` for `n` even,
/// with `lambda_r` the exact value (see [`lambda_closed`]).
pub fn sln_constant_closed(n: usize, q: u64, twisted: bool) -> Result<Cyclotomic, GaussError> {
    let (p, r) = crate::arith::prime_power(q).ok_or(GaussError::Field(FieldError::NotPrime(q)))?;
    let q_minus_eps = if twisted { q as i64 + 1 } else { q as i64 - 1 };
    if q_minus_eps % n as i64 != 0 {
        return Err(GaussError::NoStableCuspidal { n, q_minus_eps });
    }
    if n % 2 == 1 {
        return Ok(Cyclotomic::one());
    }
    let e = q_minus_eps * (n as i64 - 2) / 8;
    let sign = if e % 2 == 0 { -1 } else { 1 };
    Ok(lambda_closed(p, r)?.scale_int(sign))
}

/// Named evaluation routes for group constants.
#[derive(Clone, Default)]
pub struct Registry(HashMap<String, Arc<dyn ConstantRoute>>);

impl Registry {
    /// The three built-in routes: `closed`, `product` and `direct`.
    pub fn standard() -> Self {
        let mut reg = Registry::default();
        reg.register(Arc::new(ClosedRoute));
        reg.register(Arc::new(ProductRoute));
        reg.register(Arc::new(DirectRoute));
        reg
    }

    pub fn register(&mut self, route: Arc<dyn ConstantRoute>) {
        self.0.insert(route.name().to_string(), route);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn ConstantRoute>, GaussError> {
        self.0.get(name).cloned().ok_or_else(|| GaussError::UnknownRoute(name.to_string()))
    }

    /// Route names in sorted order.
    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = self.0.keys().cloned().collect();
        v.sort();
        v
    }
}

/// `G(G, zeta)` from the Gauss-sum product, evaluated by direct summation.
pub fn group_constant(datum: &RootDatumA, frob: &FrobeniusData, zeta: &AbChar) -> Result<Cyclotomic, GaussError> {
    let problem = ConstantProblem::new(datum.clone(), frob.clone(), zeta.clone())?;
    DirectRoute.evaluate(&problem)
}

/// Cuspidal characters of the center that are trivial on `(F - 1)`.
pub fn stable_cuspidal_characters(center: &CenterGroup) -> Vec<AbChar> {
    let f1 = f_minus_one(center);
    let rank = center.group().rank();
    AbChar::all(center.group())
        .into_iter()
        .filter(|z| is_cuspidal_character(center, z))
        .filter(|z| {
            (0..rank).all(|j| {
                let col: Vec<u64> = (0..rank).map(|i| f1.matrix().get_i64(i, j) as u64).collect();
                z.phase_coords(&col).is_zero()
            })
        })
        .collect()
}

/// Nonzero `xi` in `F_{q^2}` with `Tr_{q^2/q}(xi) = 0`, located by search.
pub fn trace_zero_element(field: &FqField, q: u64) -> Option<crate::field::Fe> {
    (1..field.size() as crate::field::Fe).find(|&x| field.add(x, field.pow(x, q)) == 0)
}

/// `theta(x)` for `theta = kappa^m` as an element of Q/Z.
pub fn kappa_power_phase(field: &FqField, m: i64, x: crate::field::Fe) -> Option<QmodZ> {
    let l = field.log(x)?;
    let q = field.unit_order() as i64;
    Some(QmodZ::new((m.rem_euclid(q) as i128 * l as i128 % q as i128) as i64, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::build_group;

    #[test]
    fn trivial_character_sum() {
        for (p, s) in [(2, 1), (3, 2), (5, 1), (7, 2)] {
            let f = FqField::new(p, s).unwrap();
            assert_eq!(gauss_sum(&f, 0).unwrap(), Cyclotomic::from_int(-1));
        }
    }

    #[test]
    fn quadratic_sum_mod_three() {
        let f = FqField::new(3, 1).unwrap();
        let g = gauss_sum(&f, 1).unwrap();
        assert_eq!(g.pow(2), Cyclotomic::from_int(-3));
    }

    #[test]
    fn order_three_over_f4() {
        let f = FqField::new(2, 2).unwrap();
        assert_eq!(gauss_sum(&f, 1).unwrap(), Cyclotomic::from_int(2));
        assert_eq!(gauss_sum(&f, 2).unwrap(), Cyclotomic::from_int(2));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(5, 1).unwrap(), Cyclotomic::one());
        assert_eq!(lambda(5, 3).unwrap(), Cyclotomic::one());
        assert_eq!(lambda(3, 1).unwrap(), Cyclotomic::i());
        assert_eq!(lambda(3, 2).unwrap(), Cyclotomic::one());
        assert_eq!(lambda(5, 2).unwrap(), Cyclotomic::from_int(-1));
        assert_eq!(lambda(2, 1), Err(GaussError::EvenPrime));
        for p in [3, 5, 7, 11] {
            for s in 1..=3 {
                assert_eq!(lambda(p, s).unwrap(), lambda_closed(p, s).unwrap(), "p={p} s={s}");
                assert_eq!(lambda(p, s).unwrap() == legendre_formula(p, s).unwrap(), s % 2 == 1);
            }
        }
    }

    #[test]
    fn closed_examples() {
        assert_eq!(sln_constant_closed(3, 7, false).unwrap(), Cyclotomic::one());
        assert_eq!(sln_constant_closed(2, 3, false).unwrap(), -Cyclotomic::i());
        assert_eq!(sln_constant_closed(2, 5, false).unwrap(), Cyclotomic::from_int(-1));
        assert!(matches!(sln_constant_closed(3, 5, false), Err(GaussError::NoStableCuspidal { .. })));
    }

    #[test]
    fn routes_agree_on_sl2_3() {
        let (d, f) = build_group(2, 1, 3, false).unwrap();
        let c = center_group(&d, &f);
        let zetas = stable_cuspidal_characters(&c);
        assert_eq!(zetas.len(), 1);
        let problem = ConstantProblem::new(d, f, zetas[0].clone()).unwrap();
        let reg = Registry::standard();
        assert_eq!(reg.names(), vec!["closed", "direct", "product"]);
        for name in reg.names() {
            assert_eq!(reg.get(&name).unwrap().evaluate(&problem).unwrap(), -Cyclotomic::i(), "route {name}");
        }
        assert!(reg.get("nope").is_err());
    }
}
