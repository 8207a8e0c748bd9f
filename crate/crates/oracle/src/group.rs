//! Finite groups given by generators, enumerated by closure.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use typea::arith::{ipow, prime_power};
use typea::field::{Fe, FqField};

use crate::OracleError;

/// Largest group accepted.
pub const MAX_ORDER: usize = 100_000;

/// Element encoding: a row-major matrix of field codes, or a permutation image list.
pub type Elem = Vec<u32>;

#[derive(Clone, Debug)]
pub enum GroupKind {
    /// `n x n` matrices over a finite field; projective ones are stored with
    /// their first nonzero entry scaled to 1.
    Matrix { field: Arc<FqField>, n: usize, projective: bool },
    /// Permutations of `0..degree`, composed as functions: `(xy)(i) = x(y(i))`.
    Perm { degree: usize },
}

impl GroupKind {
    pub fn identity(&self) -> Elem {
        match self {
            GroupKind::Matrix { n, .. } => (0..n * n).map(|k| u32::from(k / n == k % n)).collect(),
            GroupKind::Perm { degree } => (0..*degree as u32).collect(),
        }
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Elem {
        match self {
            GroupKind::Matrix { field, n, projective } => {
                let n = *n;
                let mut out = vec![0; n * n];
                for i in 0..n {
                    for k in 0..n {
                        let a = x[i * n + k];
                        if a == 0 {
                            continue;
                        }
                        for j in 0..n {
                            let b = y[k * n + j];
                            if b != 0 {
                                out[i * n + j] = field.add(out[i * n + j], field.mul(a, b));
                            }
                        }
                    }
                }
                if *projective {
                    normalize_projective(field, &mut out);
                }
                out
            }
            GroupKind::Perm { .. } => y.iter().map(|&i| x[i as usize]).collect(),
        }
    }

    pub fn field(&self) -> Option<&FqField> {
        match self {
            GroupKind::Matrix { field, .. } => Some(field),
            GroupKind::Perm { .. } => None,
        }
    }
}

fn normalize_projective(field: &FqField, m: &mut [u32]) {
    if let Some(&lead) = m.iter().find(|&&x| x != 0) {
        let s = field.inv(lead).expect("nonzero entry is invertible");
        for x in m.iter_mut() {
            *x = field.mul(*x, s);
        }
    }
}

/// One conjugacy class: representative (least element index), size and element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub size: usize,
    pub order: u64,
}

/// A finite group with its elements, classes and power maps.
#[derive(Clone)]
pub struct FiniteGroup {
    pub name: String,
    pub kind: GroupKind,
    pub generators: Vec<Elem>,
    elements: Vec<Elem>,
    index: HashMap<Elem, usize>,
    inverse: Vec<usize>,
    order_of: Vec<u64>,
    class_of: Vec<usize>,
    classes: Vec<ConjugacyClass>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {}, {} classes)", self.name, self.elements.len(), self.classes.len())
    }
}

impl FiniteGroup {
    /// Closure of the generators, then conjugacy classes by orbits under the generators.
    pub fn from_generators(name: &str, kind: GroupKind, generators: Vec<Elem>) -> Result<Self, OracleError> {
        let id = kind.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &generators {
                let y = kind.mul(&x, g);
                if !index.contains_key(&y) {
                    if elements.len() >= MAX_ORDER {
                        return Err(OracleError::TooLarge { bound: MAX_ORDER });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        // orders and inverses by walking powers
        let mut order_of = vec![0u64; n];
        let mut inverse = vec![0usize; n];
        for i in 0..n {
            let mut prev = 0usize;
            let mut cur = i;
            let mut k = 1;
            while cur != 0 {
                prev = cur;
                cur = index[&kind.mul(&elements[cur], &elements[i])];
                k += 1;
            }
            order_of[i] = k;
            inverse[i] = if i == 0 { 0 } else { prev };
        }
        let gen_idx: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[i] = c;
            let mut stack = vec![i];
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &g in &gen_idx {
                    let y = index[&kind.mul(&kind.mul(&elements[g], &elements[x]), &elements[inverse[g]])];
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        stack.push(y);
                    }
                }
            }
            classes.push(ConjugacyClass { rep: i, size, order: order_of[i] });
        }
        Ok(FiniteGroup { name: name.to_string(), kind, generators, elements, index, inverse, order_of, class_of, classes })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Elem {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &[u32]) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.index[&self.kind.mul(&self.elements[a], &self.elements[b])]
    }

    pub fn inverse_idx(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.order_of[a]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |acc, c| num_integer::lcm(acc, c.order))
    }

    /// `power[c][t]` is the class of `g_c^t`, `0 <= t < ord(g_c)`.
    pub fn power_maps(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| {
                let mut out = Vec::with_capacity(c.order as usize);
                let mut cur = 0;
                for _ in 0..c.order {
                    out.push(self.class_of[cur]);
                    cur = self.mul_idx(cur, c.rep);
                }
                out
            })
            .collect()
    }

    /// Class of the inverse of each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| self.class_of[self.inverse[c.rep]]).collect()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| self.generators.iter().all(|g| {
                let gi = self.index[g];
                self.mul_idx(gi, x) == self.mul_idx(x, gi)
            }))
            .collect()
    }
}

fn group_order_formula(n: usize, q: u64, eps: i64) -> u64 {
    let mut ord = ipow(q, (n * (n - 1) / 2) as u32);
    for i in 2..=n as u32 {
        let qi = ipow(q, i) as i64;
        ord *= (qi - eps.pow(i)) as u64;
    }
    ord
}

fn field_for(q: u64, twisted: bool) -> Result<Arc<FqField>, OracleError> {
    let (p, r) = prime_power(q).ok_or(OracleError::NotPrimePower(q))?;
    let s = if twisted { 2 * r } else { r };
    Ok(Arc::new(FqField::new(p, s)?))
}

fn matrix_from_fn(n: usize, f: impl Fn(usize, usize) -> Fe) -> Elem {
    (0..n * n).map(|k| f(k / n, k % n)).collect()
}

/// The standard Frobenius `x -> x^q` applied entrywise.
fn frob(field: &FqField, m: &[u32], q: u64) -> Elem {
    m.iter().map(|&x| field.pow(x, q)).collect()
}

fn transpose(n: usize, m: &[u32]) -> Elem {
    matrix_from_fn(n, |i, j| m[j * n + i])
}

fn det(field: &FqField, n: usize, m: &[u32]) -> Fe {
    let mut a: Vec<Fe> = m.to_vec();
    let mut d: Fe = 1;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            d = field.neg(d);
        }
        let pv = a[col * n + col];
        d = field.mul(d, pv);
        let inv = field.inv(pv).expect("pivot is nonzero");
        for r in col + 1..n {
            let f = field.mul(a[r * n + col], inv);
            if f == 0 {
                continue;
            }
            for j in col..n {
                let v = field.sub(a[r * n + j], field.mul(f, a[col * n + j]));
                a[r * n + j] = v;
            }
        }
    }
    d
}

/// Antidiagonal matrix `J` of ones.
fn antidiagonal(n: usize) -> Elem {
    matrix_from_fn(n, |i, j| u32::from(i + j == n - 1))
}

/// All upper unitriangular matrices satisfying `keep`.
fn unitriangular(field: &FqField, n: usize, keep: impl Fn(&Elem) -> bool) -> Vec<Elem> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let size = field.size();
    let total = size.pow(slots.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = matrix_from_fn(n, |i, j| u32::from(i == j));
        let mut c = code;
        for &(i, j) in &slots {
            m[i * n + j] = (c % size) as Fe;
            c /= size;
        }
        if keep(&m) {
            out.push(m);
        }
    }
    out
}

/// A small generating set of the group generated by `elems`.
fn thin_generators(kind: &GroupKind, elems: &[Elem]) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut span: std::collections::HashSet<Elem> = std::collections::HashSet::from([kind.identity()]);
    for e in elems {
        if span.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let mut frontier: Vec<Elem> = span.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = kind.mul(&x, g);
                if span.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

/// Generators `U ∪ J U J` from the upper unitriangular part `U` of the group.
fn build_from_unipotent(name: &str, kind: GroupKind, n: usize, upper: &[Elem], expected: u64) -> Result<FiniteGroup, OracleError> {
    if expected as usize > MAX_ORDER {
        return Err(OracleError::TooLarge { bound: MAX_ORDER });
    }
    let ugens = thin_generators(&kind, upper);
    let j = antidiagonal(n);
    let mut gens = ugens.clone();
    gens.extend(ugens.iter().map(|u| kind.mul(&kind.mul(&j, u), &j)));
    let g = FiniteGroup::from_generators(name, kind, gens)?;
    if g.order() as u64 != expected {
        return Err(OracleError::Construction(format!("{name}: closure has order {}, expected {expected}", g.order())));
    }
    Ok(g)
}

/// `SL_n(q)`.
pub fn special_linear(n: usize, q: u64) -> Result<FiniteGroup, OracleError> {
    let field = field_for(q, false)?;
    let kind = GroupKind::Matrix { field: field.clone(), n, projective: false };
    let upper = unitriangular(&field, n, |_| true);
    build_from_unipotent(&format!("SL_{n}({q})"), kind, n, &upper, group_order_formula(n, q, 1))
}

/// `SU_n(q)` inside `GL_n(q^2)`: `A^T` of the Frobenius twist satisfies `F(A)^T J A = J`, `det A = 1`.
pub fn special_unitary(n: usize, q: u64) -> Result<FiniteGroup, OracleError> {
    let field = field_for(q, true)?;
    let kind = GroupKind::Matrix { field: field.clone(), n, projective: false };
    let j = antidiagonal(n);
    let upper = unitriangular(&field, n, |m| {
        let lhs = kind.mul(&kind.mul(&transpose(n, &frob(&field, m, q)), &j), m);
        lhs == j && det(&field, n, m) == 1
    });
    build_from_unipotent(&format!("SU_{n}({q})"), kind, n, &upper, group_order_formula(n, q, -1))
}

/// `PGL_n(q)`.
pub fn projective_linear(n: usize, q: u64) -> Result<FiniteGroup, OracleError> {
    let field = field_for(q, false)?;
    let kind = GroupKind::Matrix { field: field.clone(), n, projective: true };
    let mut upper = unitriangular(&field, n, |_| true);
    let mut d = matrix_from_fn(n, |i, j| u32::from(i == j));
    d[0] = field.generator();
    normalize_projective(&field, &mut d);
    upper.push(d);
    // |PGL_n(q)| = |GL_n(q)| / (q - 1) = |SL_n(q)|
    build_from_unipotent(&format!("PGL_{n}({q})"), kind, n, &upper, group_order_formula(n, q, 1))
}

/// The symmetric group on `0..n`.
pub fn symmetric(n: usize) -> Result<FiniteGroup, OracleError> {
    let kind = GroupKind::Perm { degree: n };
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Elem = (0..n as u32).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n as u32).map(|i| (i + 1) % n as u32).collect());
    }
    FiniteGroup::from_generators(&format!("S_{n}"), kind, gens)
}

/// A permutation group from explicit generators.
pub fn permutation_group(name: &str, degree: usize, generators: Vec<Elem>) -> Result<FiniteGroup, OracleError> {
    FiniteGroup::from_generators(name, GroupKind::Perm { degree }, generators)
}

impl FiniteGroup {
    /// Matrix size, for matrix groups.
    pub fn matrix_size(&self) -> Option<usize> {
        match &self.kind {
            GroupKind::Matrix { n, .. } => Some(*n),
            GroupKind::Perm { .. } => None,
        }
    }

    /// Determinant of an element of a (non-projective) matrix group.
    pub fn det(&self, a: usize) -> Option<Fe> {
        match &self.kind {
            GroupKind::Matrix { field, n, projective: false } => Some(det(field, *n, &self.elements[a])),
            _ => None,
        }
    }
}
