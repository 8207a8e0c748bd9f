//! Groups `G = (prod_c S_{n_c}) ⋊ A` with `A` finite abelian permuting the
//! components, their characters (Clifford theory with canonical extensions),
//! twisted induction through `pi_a`, and the integrality criterion.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::lattice::{AbChar, AbSubgroup, FinAbGroup};
use crate::symchar::{char_value, factorial, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("generator {0} is not a permutation of the components")]
    BadPermutation(usize),
    #[error("generator {0} moves a component onto one of a different size")]
    SizeNotPreserved(usize),
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("generator {0} has order not dividing its invariant factor")]
    BadOrder(usize),
    #[error("expected {expected} generator permutations, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("the character is not stable under the acting element")]
    NotStable,
    #[error("the Young subgroup is not stable under the acting element")]
    YoungNotStable,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// A permutation as an image list; `compose(s, t)(i) = s[t[i]]`.
pub type Perm = Vec<usize>;

pub fn compose(s: &[usize], t: &[usize]) -> Perm {
    t.iter().map(|&i| s[i]).collect()
}

pub fn inverse(s: &[usize]) -> Perm {
    let mut out = vec![0; s.len()];
    for (i, &j) in s.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn is_identity(s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &j)| i == j)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathGroup {
    components: Vec<usize>,
    acting: FinAbGroup,
    generator_action: Vec<Perm>,
}

/// Element `w * a` with `w` in `prod S_{n_c}` and `a` in `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElem {
    pub w: Vec<Perm>,
    pub a: Vec<u64>,
}

/// A `G°`-class inside the coset `G° a`: for each `a`-cycle of components
/// (starting at its least member) the cycle type of `pi_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetClass {
    pub a: Vec<u64>,
    pub cycles: Vec<(Vec<usize>, Partition)>,
}

/// Class functions, keyed by coset classes.
pub type ClassFunction = BTreeMap<CosetClass, Cyclotomic>;

/// An irreducible character `Ind_{G(lambda)}^G (chi~_lambda ⊗ xi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathChar {
    /// Least member of its `A`-orbit.
    pub lambda: Vec<Partition>,
    pub stabilizer: AbSubgroup,
    /// A character of `A` whose restriction to the stabilizer is `xi`;
    /// the least such exponent vector.
    pub xi: AbChar,
    pub degree: u128,
}

impl WreathChar {
    pub fn b_invariant(&self) -> usize {
        self.lambda.iter().map(Partition::b_invariant).sum()
    }
}

impl WreathGroup {
    /// `acting` has one permutation of the components per invariant-factor generator.
    pub fn new(components: Vec<usize>, acting: FinAbGroup, generator_action: Vec<Perm>) -> Result<Self, WreathError> {
        let k = components.len();
        if generator_action.len() != acting.rank() {
            return Err(WreathError::GeneratorCount { expected: acting.rank(), got: generator_action.len() });
        }
        for (i, p) in generator_action.iter().enumerate() {
            let set: BTreeSet<usize> = p.iter().copied().collect();
            if p.len() != k || set.len() != k || set.iter().any(|&x| x >= k) {
                return Err(WreathError::BadPermutation(i));
            }
            if (0..k).any(|c| components[p[c]] != components[c]) {
                return Err(WreathError::SizeNotPreserved(i));
            }
            let mut q: Perm = (0..k).collect();
            for _ in 0..acting.invariant_factors()[i] {
                q = compose(p, &q);
            }
            if !is_identity(&q) {
                return Err(WreathError::BadOrder(i));
            }
            for (j, r) in generator_action.iter().enumerate().take(i) {
                if compose(p, r) != compose(r, p) {
                    return Err(WreathError::NotCommuting(j, i));
                }
            }
        }
        Ok(WreathGroup { components, acting, generator_action })
    }

    /// `prod_c S_{n_c}` with trivial `A`.
    pub fn direct(components: Vec<usize>) -> Self {
        WreathGroup { components, acting: FinAbGroup::trivial(), generator_action: Vec::new() }
    }

    /// `S_n ≀ C_d`: `d` copies of `S_n` cyclically permuted.
    pub fn cyclic_wreath(n: usize, d: usize) -> Self {
        let shift: Perm = (0..d).map(|c| (c + 1) % d).collect();
        let acting = FinAbGroup::cyclic(d as u64);
        let action = if acting.rank() == 0 { Vec::new() } else { vec![shift] };
        WreathGroup::new(vec![n; d], acting, action).expect("cyclic shift is a valid action")
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn acting(&self) -> &FinAbGroup {
        &self.acting
    }

    pub fn base_order(&self) -> u128 {
        self.components.iter().map(|&n| factorial(n)).product()
    }

    pub fn order(&self) -> u128 {
        self.base_order() * self.acting.order() as u128
    }

    /// Permutation of the components by `a`.
    pub fn action(&self, a: &[u64]) -> Perm {
        let mut p: Perm = (0..self.components.len()).collect();
        for (g, &e) in self.generator_action.iter().zip(a) {
            for _ in 0..e {
                p = compose(g, &p);
            }
        }
        p
    }

    /// Cycles of `a` on the components, each starting at its least member.
    pub fn cycles(&self, a: &[u64]) -> Vec<Vec<usize>> {
        let p = self.action(a);
        let mut seen = vec![false; p.len()];
        let mut out = Vec::new();
        for c in 0..p.len() {
            if seen[c] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = c;
            while !seen[d] {
                seen[d] = true;
                cyc.push(d);
                d = p[d];
            }
            out.push(cyc);
        }
        out
    }

    pub fn identity(&self) -> WreathElem {
        WreathElem { w: self.components.iter().map(|&n| (0..n).collect()).collect(), a: vec![0; self.acting.rank()] }
    }

    /// `(w a)(w' a') = (w · a w' a^{-1}) (a a')` with `(a w' a^{-1})_{a(c)} = w'_c`.
    pub fn mul(&self, x: &WreathElem, y: &WreathElem) -> WreathElem {
        let inv = inverse(&self.action(&x.a));
        let w = (0..self.components.len()).map(|c| compose(&x.w[c], &y.w[inv[c]])).collect();
        WreathElem { w, a: self.acting.add_coords(&x.a, &y.a) }
    }

    pub fn inv(&self, x: &WreathElem) -> WreathElem {
        // (w a)^{-1} = a^{-1} w^{-1} = (a^{-1} w^{-1} a) a^{-1}
        let a_inv = self.acting.scale_coords(&x.a, -1);
        let p = self.action(&a_inv);
        let pinv = inverse(&p);
        let w = (0..self.components.len()).map(|c| inverse(&x.w[pinv[c]])).collect();
        WreathElem { w, a: a_inv }
    }

    /// All elements; intended for small groups in checks.
    pub fn elements(&self) -> Vec<WreathElem> {
        let mut bases: Vec<Vec<Perm>> = vec![Vec::new()];
        for &n in &self.components {
            let perms = all_perms(n);
            bases = bases
                .into_iter()
                .flat_map(|b| {
                    perms.iter().map(move |p| {
                        let mut b = b.clone();
                        b.push(p.clone());
                        b
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for a in self.acting.coordinate_tuples() {
            for w in &bases {
                out.push(WreathElem { w: w.clone(), a: a.clone() });
            }
        }
        out
    }

    /// `pi_a(g)`: on each `a`-cycle `(c, a(c), ...)` of length `d`, the product
    /// `w_c w_{a^{-1} c} ... w_{a^{-(d-1)} c}`, i.e. the `c`-coordinate of `g^d a^{-d}`.
    pub fn pi_project(&self, g: &WreathElem) -> Vec<(Vec<usize>, Perm)> {
        let p = self.action(&g.a);
        let pinv = inverse(&p);
        self.cycles(&g.a)
            .into_iter()
            .map(|cyc| {
                let c = cyc[0];
                let mut prod = g.w[c].clone();
                let mut d = pinv[c];
                for _ in 1..cyc.len() {
                    prod = compose(&prod, &g.w[d]);
                    d = pinv[d];
                }
                (cyc, prod)
            })
            .collect()
    }

    pub fn coset_class(&self, g: &WreathElem) -> CosetClass {
        let cycles = self.pi_project(g).into_iter().map(|(c, p)| (c, Partition::cycle_type(&p))).collect();
        CosetClass { a: g.a.clone(), cycles }
    }

    /// All coset classes with their sizes.
    pub fn classes(&self) -> Vec<(CosetClass, u128)> {
        let mut out = Vec::new();
        for a in self.acting.coordinate_tuples() {
            let cycles = self.cycles(&a);
            let mut partial: Vec<(Vec<(Vec<usize>, Partition)>, u128)> = vec![(Vec::new(), 1)];
            for cyc in &cycles {
                let n = self.components[cyc[0]];
                let scale = factorial(n).pow(cyc.len() as u32 - 1);
                let mut next = Vec::new();
                for (prefix, size) in &partial {
                    for lam in Partition::all(n) {
                        let mut v = prefix.clone();
                        v.push((cyc.clone(), lam.clone()));
                        next.push((v, size * scale * lam.class_size()));
                    }
                }
                partial = next;
            }
            out.extend(partial.into_iter().map(|(cycles, size)| (CosetClass { a: a.clone(), cycles }, size)));
        }
        out
    }

    /// `(a . lambda)_{a(c)} = lambda_c`.
    pub fn act_on_labels(&self, a: &[u64], lambda: &[Partition]) -> Vec<Partition> {
        let p = self.action(a);
        let mut out = lambda.to_vec();
        for (c, lam) in lambda.iter().enumerate() {
            out[p[c]] = lam.clone();
        }
        out
    }

    pub fn all_labels(&self) -> Vec<Vec<Partition>> {
        let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
        for &n in &self.components {
            let ps = Partition::all(n);
            out = out
                .into_iter()
                .flat_map(|v| {
                    ps.iter().map(move |p| {
                        let mut v = v.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn orbit(&self, lambda: &[Partition]) -> BTreeSet<Vec<Partition>> {
        self.acting.coordinate_tuples().iter().map(|a| self.act_on_labels(a, lambda)).collect()
    }

    /// `A(lambda)`.
    pub fn stabilizer(&self, lambda: &[Partition]) -> AbSubgroup {
        let gens: Vec<Vec<u64>> =
            self.acting.coordinate_tuples().into_iter().filter(|a| self.act_on_labels(a, lambda) == lambda).collect();
        AbSubgroup::generated_by(&self.acting, &gens)
    }

    /// `chi~(g)` for the canonical extension of `chi_lambda` to `G° ⋊ A(lambda)`.
    pub fn canonical_extension_value(&self, lambda: &[Partition], g: &WreathElem) -> Result<i64, WreathError> {
        self.canonical_extension_at(lambda, &self.coset_class(g))
    }

    pub fn canonical_extension_at(&self, lambda: &[Partition], class: &CosetClass) -> Result<i64, WreathError> {
        if lambda.len() != self.components.len() {
            return Err(WreathError::Shape(format!("{} labels for {} components", lambda.len(), self.components.len())));
        }
        let mut v = 1;
        for (cyc, ty) in &class.cycles {
            let lam = &lambda[cyc[0]];
            if cyc.iter().any(|&c| &lambda[c] != lam) {
                return Err(WreathError::NotStable);
            }
            v *= char_value(lam, ty).map_err(|e| WreathError::Shape(e.to_string()))?;
        }
        Ok(v)
    }

    /// Characters of `A` with distinct restrictions to `sub`, each the least representative.
    pub fn restricted_characters(&self, sub: &AbSubgroup) -> Vec<AbChar> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for xi in AbChar::all(&self.acting) {
            let key: Vec<_> = sub.elements().iter().map(|e| xi.phase_coords(e)).collect();
            if seen.insert(key) {
                out.push(xi);
            }
        }
        out
    }

    /// Complete list of irreducible characters, ordered by orbit representative then `xi`.
    pub fn irr_semidirect(&self) -> Vec<WreathChar> {
        let mut reps = BTreeSet::new();
        for lam in self.all_labels() {
            reps.insert(self.orbit(&lam).into_iter().next().expect("orbit is nonempty"));
        }
        let mut out = Vec::new();
        for lambda in reps {
            let stabilizer = self.stabilizer(&lambda);
            let index = self.acting.order() as u128 / stabilizer.order() as u128;
            let deg: u128 = lambda.iter().map(|l| crate::symchar::degree(l) as u128).product();
            for xi in self.restricted_characters(&stabilizer) {
                out.push(WreathChar { lambda: lambda.clone(), stabilizer: stabilizer.clone(), xi, degree: index * deg });
            }
        }
        out
    }

    /// Value of an irreducible at a coset class:
    /// `xi(a) sum_{lambda' in A.lambda} chi~_{lambda'}` on `G(lambda)`, zero elsewhere.
    pub fn char_at(&self, chi: &WreathChar, class: &CosetClass) -> Cyclotomic {
        if !chi.stabilizer.contains(&class.a) {
            return Cyclotomic::zero();
        }
        let s: i64 = self
            .orbit(&chi.lambda)
            .iter()
            .map(|l| self.canonical_extension_at(l, class).expect("stabilizer elements fix the label"))
            .sum();
        Cyclotomic::from_phase(chi.xi.phase_coords(&class.a)).scale_int(s)
    }

    pub fn char_values(&self, chi: &WreathChar) -> ClassFunction {
        self.classes().into_iter().map(|(k, _)| {
            let v = self.char_at(chi, &k);
            (k, v)
        }).collect()
    }

    /// `<f, g>_G = |G|^{-1} sum_x f(x) conj(g(x))`; missing classes count as zero.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (k, size) in self.classes() {
            if let (Some(x), Some(y)) = (f.get(&k), g.get(&k)) {
                acc = acc + (x * &y.conj()).scale(&BigRational::from_integer(BigInt::from(size)));
            }
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(self.order())))
    }

    /// `<Res_{G_lambda} eta, xi>` with `G_lambda = (prod_c S_{lambda_c}) ⋊ A(lambda)`
    /// and `xi` a character of `A` read on `A(lambda)`.
    pub fn young_pairing(&self, eta: &ClassFunction, lambda: &[Partition], xi: &AbChar) -> Cyclotomic {
        let stab = self.stabilizer(lambda);
        let young_order: u128 = lambda.iter().map(|l| l.parts().iter().map(|&x| factorial(x)).product::<u128>()).product();
        let mut acc = Cyclotomic::zero();
        for b in stab.elements() {
            let cycles = self.cycles(b);
            // per cycle: G-cycle-type of pi_b(y b) with multiplicities
            let mut partial: Vec<(Vec<(Vec<usize>, Partition)>, u128)> = vec![(Vec::new(), 1)];
            for cyc in &cycles {
                let lam = &lambda[cyc[0]];
                let s_lam: u128 = lam.parts().iter().map(|&x| factorial(x)).product();
                let scale = s_lam.pow(cyc.len() as u32 - 1);
                let counts = young_class_counts(lam);
                let mut next = Vec::new();
                for (prefix, w) in &partial {
                    for (nu, cnt) in &counts {
                        let mut v = prefix.clone();
                        v.push((cyc.clone(), nu.clone()));
                        next.push((v, w * scale * cnt));
                    }
                }
                partial = next;
            }
            let xi_bar = Cyclotomic::from_phase(xi.phase_coords(b).neg());
            for (cycles, w) in partial {
                let class = CosetClass { a: b.clone(), cycles };
                if let Some(v) = eta.get(&class) {
                    acc = acc + (v * &xi_bar).scale(&BigRational::from_integer(BigInt::from(w)));
                }
            }
        }
        let denom = young_order * stab.order() as u128;
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(denom)))
    }

    /// `eta` lies in `Z Irr G` iff `<Res_{G_lambda} eta, xi>` is a rational
    /// integer for every `(lambda, xi)` in `P+`.
    pub fn integrality_test(&self, eta: &ClassFunction) -> bool {
        self.irr_semidirect().iter().all(|chi| {
            let v = self.young_pairing(eta, &chi.lambda, &chi.xi);
            v.to_rational().is_some_and(|r| r.is_integer())
        })
    }

    /// Twisted induction on the coset `G° a` from `H° a`, `H° = prod_c S_{mu_c}` with
    /// the compositions `young[c]` (stable under `a`). `f` is keyed by, for each
    /// `a`-cycle, the tuple of classes of the blocks of `S_{mu}`; the result is keyed
    /// by the coset class.
    pub fn twisted_induce(
        &self,
        a: &[u64],
        young: &[Vec<usize>],
        f: &BTreeMap<Vec<Vec<Partition>>, Cyclotomic>,
    ) -> Result<ClassFunction, WreathError> {
        if young.len() != self.components.len() {
            return Err(WreathError::Shape("one composition per component is needed".into()));
        }
        for (c, mu) in young.iter().enumerate() {
            if mu.iter().sum::<usize>() != self.components[c] || mu.contains(&0) {
                return Err(WreathError::Shape(format!("composition {mu:?} is not of {}", self.components[c])));
            }
        }
        let p = self.action(a);
        if (0..young.len()).any(|c| young[p[c]] != young[c]) {
            return Err(WreathError::YoungNotStable);
        }
        let cycles = self.cycles(a);
        let mut out = ClassFunction::new();
        for (key, value) in f {
            if key.len() != cycles.len() {
                return Err(WreathError::Shape("one class tuple per a-cycle is needed".into()));
            }
            // Ind from prod S_mu to S_n is computed class by class; the contribution of
            // the S_mu-class K to the S_n-class nu is |C(nu)| / |C_{S_mu}(K)|.
            let mut factor = BigRational::one();
            let mut target = Vec::new();
            for (cyc, blocks) in cycles.iter().zip(key) {
                let mu = &young[cyc[0]];
                if blocks.len() != mu.len() || blocks.iter().zip(mu).any(|(k, &m)| k.size() != m) {
                    return Err(WreathError::Shape(format!("class {blocks:?} does not match blocks {mu:?}")));
                }
                let nu = Partition::from_unsorted(blocks.iter().flat_map(|k| k.parts().iter().copied()).collect());
                let c_h: u128 = blocks.iter().map(Partition::centralizer_order).product();
                factor *= BigRational::new(BigInt::from(nu.centralizer_order()), BigInt::from(c_h));
                target.push((cyc.clone(), nu));
            }
            let class = CosetClass { a: a.to_vec(), cycles: target };
            let entry = out.entry(class).or_insert_with(Cyclotomic::zero);
            *entry = &*entry + &value.scale(&factor);
        }
        Ok(out)
    }
}

/// Number of elements of the Young subgroup `S_lambda` with each cycle type in `S_n`.
pub fn young_class_counts(lambda: &Partition) -> BTreeMap<Partition, u128> {
    let mut acc: BTreeMap<Vec<usize>, u128> = BTreeMap::from([(Vec::new(), 1)]);
    for &m in lambda.parts() {
        let mut next = BTreeMap::new();
        for (parts, cnt) in &acc {
            for k in Partition::all(m) {
                let mut v = parts.clone();
                v.extend_from_slice(k.parts());
                v.sort_unstable_by(|a, b| b.cmp(a));
                *next.entry(v).or_insert(0) += cnt * k.class_size();
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(v, c)| (Partition::from_unsorted(v), c)).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut p: Perm = (0..n).collect();
    let mut out = vec![p.clone()];
    while crate::center::next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Is `v` zero on every class?
pub fn is_zero_function(f: &ClassFunction) -> bool {
    f.values().all(Cyclotomic::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn irreducible_counts() {
        let g = WreathGroup::cyclic_wreath(3, 2);
        let irr = g.irr_semidirect();
        assert_eq!(irr.len(), 9);
        assert_eq!(irr.iter().map(|c| c.degree * c.degree).sum::<u128>(), g.order());

        let g = WreathGroup::cyclic_wreath(2, 2);
        let mut degs: Vec<u128> = g.irr_semidirect().iter().map(|c| c.degree).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 1, 2]);

        let g = WreathGroup::direct(vec![3, 4]);
        assert_eq!(g.irr_semidirect().len(), 3 * 5);
    }

    #[test]
    fn orthonormal_table() {
        let g = WreathGroup::cyclic_wreath(2, 3);
        let irr = g.irr_semidirect();
        assert_eq!(irr.iter().map(|c| c.degree * c.degree).sum::<u128>(), g.order());
        let vals: Vec<ClassFunction> = irr.iter().map(|c| g.char_values(c)).collect();
        for i in 0..vals.len() {
            for j in 0..vals.len() {
                let ip = g.inner_product(&vals[i], &vals[j]);
                assert_eq!(ip, Cyclotomic::from_int((i == j) as i64), "{i} {j}");
            }
        }
    }

    #[test]
    fn pi_examples() {
        let g = WreathGroup::cyclic_wreath(3, 2);
        let swap = WreathElem { w: vec![vec![0, 1, 2], vec![0, 1, 2]], a: vec![1] };
        assert_eq!(g.pi_project(&swap)[0].1, vec![0, 1, 2]);
        let x = WreathElem { w: vec![vec![1, 0, 2], vec![0, 2, 1]], a: vec![1] };
        assert_eq!(g.pi_project(&x)[0].1, compose(&[1, 0, 2], &[0, 2, 1]));
        let chi = vec![p(&[2, 1]), p(&[2, 1])];
        assert_eq!(g.canonical_extension_value(&chi, &swap).unwrap(), 2);
        let y = WreathElem { w: vec![vec![1, 2, 0], vec![0, 1, 2]], a: vec![1] };
        assert_eq!(g.canonical_extension_value(&chi, &y).unwrap(), -1);
        assert_eq!(
            g.canonical_extension_value(&[p(&[3]), p(&[2, 1])], &swap),
            Err(WreathError::NotStable)
        );
    }

    #[test]
    fn group_law() {
        let g = WreathGroup::cyclic_wreath(2, 3);
        let els = g.elements();
        assert_eq!(els.len() as u128, g.order());
        for x in els.iter().step_by(5) {
            assert_eq!(g.mul(x, &g.inv(x)), g.identity());
            for y in els.iter().step_by(7) {
                let xy = g.mul(x, y);
                for z in els.iter().step_by(11) {
                    assert_eq!(g.mul(&xy, z), g.mul(x, &g.mul(y, z)));
                }
                // pi classes are conjugation invariant
                let c = g.mul(&g.mul(y, x), &g.inv(y));
                let k1 = g.coset_class(x);
                let k2 = g.coset_class(&c);
                let mut t1: Vec<_> = k1.cycles.iter().map(|(_, t)| t.clone()).collect();
                let mut t2: Vec<_> = k2.cycles.iter().map(|(_, t)| t.clone()).collect();
                t1.sort();
                t2.sort();
                assert_eq!(t1, t2);
            }
        }
    }

    #[test]
    fn class_sizes_sum() {
        let g = WreathGroup::cyclic_wreath(3, 2);
        assert_eq!(g.classes().iter().map(|(_, s)| s).sum::<u128>(), g.order());
    }
}
