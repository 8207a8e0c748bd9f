//! Wreath-type groups `(prod S_{n_c}) ⋊ B` as concrete permutation groups,
//! and brute-force checks of their character theory.

use std::collections::{BTreeSet, HashMap};

use typea::cyclotomic::Cyclotomic;
use typea::lattice::AbSubgroup;
use typea::symchar::{char_value, Partition};
use typea::wreath::{WreathElem, WreathGroup};

use crate::cache::TableCache;
use crate::dixon::CharTable;
use crate::group::{permutation_group, Elem, FiniteGroup};
use crate::OracleError;

/// Faithful permutation model: the components' points, then the regular action of `A`.
pub struct WreathModel<'a> {
    pub wreath: &'a WreathGroup,
    pub subgroup: AbSubgroup,
    offsets: Vec<usize>,
    base_degree: usize,
    a_tuples: Vec<Vec<u64>>,
    a_index: HashMap<Vec<u64>, usize>,
    pub group: FiniteGroup,
}

impl<'a> WreathModel<'a> {
    /// `G° ⋊ B` for a subgroup `B` of the acting group.
    pub fn new(wreath: &'a WreathGroup, subgroup: AbSubgroup) -> Result<Self, OracleError> {
        let mut offsets = Vec::new();
        let mut acc = 0;
        for &n in wreath.components() {
            offsets.push(acc);
            acc += n;
        }
        let a_tuples = wreath.acting().coordinate_tuples();
        let a_index = a_tuples.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let mut model = WreathModel {
            wreath,
            subgroup,
            offsets,
            base_degree: acc,
            a_tuples,
            a_index,
            group: permutation_group("trivial", 0, Vec::new())?,
        };
        let degree = model.base_degree + model.a_tuples.len();
        let mut gens: Vec<Elem> = Vec::new();
        for (c, &n) in wreath.components().iter().enumerate() {
            if n < 2 {
                continue;
            }
            let id = wreath.identity();
            let mut t = id.clone();
            t.w[c].swap(0, 1);
            gens.push(model.encode(&t));
            let mut cyc = id;
            cyc.w[c] = (0..n).map(|i| (i + 1) % n).collect();
            gens.push(model.encode(&cyc));
        }
        for b in model.subgroup.generators().to_vec() {
            let mut e = wreath.identity();
            e.a = b;
            gens.push(model.encode(&e));
        }
        let name = format!("wreath{:?}x{:?}/{:?}", wreath.components(), wreath.acting().invariant_factors(), model.subgroup.elements());
        model.group = permutation_group(&name, degree, gens)?;
        Ok(model)
    }

    /// `w a` as a permutation: `a` sends point `(c, i)` to `(a(c), i)`, then `w` acts blockwise.
    pub fn encode(&self, g: &WreathElem) -> Elem {
        let p = self.wreath.action(&g.a);
        let mut out = vec![0u32; self.base_degree + self.a_tuples.len()];
        for (c, &off) in self.offsets.iter().enumerate() {
            let d = p[c];
            for i in 0..self.wreath.components()[c] {
                out[off + i] = (self.offsets[d] + g.w[d][i]) as u32;
            }
        }
        for (x, t) in self.a_tuples.iter().enumerate() {
            let y = self.a_index[&self.wreath.acting().add_coords(&g.a, t)];
            out[self.base_degree + x] = (self.base_degree + y) as u32;
        }
        out
    }

    pub fn decode(&self, perm: &[u32]) -> WreathElem {
        let zero = self.a_index[&vec![0; self.wreath.acting().rank()]];
        let a = self.a_tuples[perm[self.base_degree + zero] as usize - self.base_degree].clone();
        let p = self.wreath.action(&a);
        let w = self
            .offsets
            .iter()
            .enumerate()
            .map(|(c, &off)| {
                // perm(off_c + i) = off_{a(c)} + w_{a(c)}(i)
                let d = p[c];
                let mut wd = vec![0; self.wreath.components()[d]];
                for (i, slot) in wd.iter_mut().enumerate() {
                    *slot = perm[off + i] as usize - self.offsets[d];
                }
                (d, wd)
            })
            .fold(vec![Vec::new(); self.offsets.len()], |mut acc, (d, wd)| {
                acc[d] = wd;
                acc
            });
        WreathElem { w, a }
    }
}

fn row_key(row: &[Cyclotomic]) -> String {
    serde_json::to_string(row).unwrap_or_default()
}

/// Values of the closed-form irreducibles at the oracle's class representatives.
pub fn closed_form_rows(model: &WreathModel<'_>, table: &CharTable) -> Vec<Vec<Cyclotomic>> {
    let classes: Vec<_> = table.classes.iter().map(|c| model.wreath.coset_class(&model.decode(&c.rep))).collect();
    model
        .wreath
        .irr_semidirect()
        .iter()
        .map(|chi| classes.iter().map(|cl| model.wreath.char_at(chi, cl)).collect())
        .collect()
}

/// The oracle table of the whole wreath group equals the closed-form irreducibles.
pub fn compare_wreath_table(w: &WreathGroup, cache: &TableCache) -> Result<(), OracleError> {
    let model = WreathModel::new(w, AbSubgroup::whole(w.acting()))?;
    let table = cache.table(&model.group)?;
    let oracle: BTreeSet<String> = table.characters.iter().map(|r| row_key(r)).collect();
    let closed = closed_form_rows(&model, &table);
    let formula: BTreeSet<String> = closed.iter().map(|r| row_key(r)).collect();
    if closed.len() != table.characters.len() || oracle != formula {
        return Err(OracleError::Mismatch(format!(
            "{}: {} oracle irreducibles, {} closed-form, sets differ: {}",
            model.group.name,
            table.characters.len(),
            closed.len(),
            oracle != formula
        )));
    }
    Ok(())
}

/// Exactly one extension of `chi_lambda` to `G° ⋊ A(lambda)` is a positive integer on
/// `A(lambda)`, there are `|A(lambda)|` extensions in all, and the distinguished one is the
/// closed-form canonical extension.
pub fn check_canonical_extension(w: &WreathGroup, lambda: &[Partition], cache: &TableCache) -> Result<(), OracleError> {
    let stab = w.stabilizer(lambda);
    let model = WreathModel::new(w, stab.clone())?;
    let table = cache.table(&model.group)?;
    let decoded: Vec<WreathElem> = table.classes.iter().map(|c| model.decode(&c.rep)).collect();
    let zero_a = vec![0u64; w.acting().rank()];
    let base_value = |g: &WreathElem| -> Result<i64, OracleError> {
        let mut v = 1;
        for (c, lam) in lambda.iter().enumerate() {
            v *= char_value(lam, &Partition::cycle_type(&g.w[c])).map_err(|e| OracleError::Mismatch(e.to_string()))?;
        }
        Ok(v)
    };
    let mut extensions = Vec::new();
    'rows: for (r, row) in table.characters.iter().enumerate() {
        for (g, v) in decoded.iter().zip(row) {
            if g.a == zero_a && v.to_integer() != Some(base_value(g)?.into()) {
                continue 'rows;
            }
        }
        extensions.push(r);
    }
    if extensions.len() as u64 != stab.order() {
        return Err(OracleError::Mismatch(format!("{} extensions, |A(lambda)| = {}", extensions.len(), stab.order())));
    }
    let pure: Vec<usize> = stab
        .elements()
        .iter()
        .map(|b| {
            let mut e = w.identity();
            e.a = b.clone();
            model.group.index_of(&model.encode(&e)).map(|i| model.group.class_of(i))
        })
        .collect::<Option<_>>()
        .ok_or_else(|| OracleError::Mismatch("element of A(lambda) missing from the model".into()))?;
    let positive: Vec<usize> = extensions
        .into_iter()
        .filter(|&r| pure.iter().all(|&c| table.characters[r][c].to_integer().is_some_and(|v| v > 0.into())))
        .collect();
    let [only] = positive[..] else {
        return Err(OracleError::Mismatch(format!("{} positive integral extensions", positive.len())));
    };
    for (g, v) in decoded.iter().zip(&table.characters[only]) {
        let want = w.canonical_extension_value(lambda, g).map_err(|e| OracleError::Mismatch(e.to_string()))?;
        if v.to_integer() != Some(want.into()) {
            return Err(OracleError::Mismatch(format!("canonical extension differs at {g:?}")));
        }
    }
    Ok(())
}

/// Character table of `S_n` from the oracle against the symmetric-group formula.
pub fn compare_symmetric(n: usize, cache: &TableCache) -> Result<(), OracleError> {
    let g = crate::group::symmetric(n)?;
    let table = cache.table(&g)?;
    let types: Vec<Partition> =
        table.classes.iter().map(|c| Partition::cycle_type(&c.rep.iter().map(|&x| x as usize).collect::<Vec<_>>())).collect();
    let oracle: BTreeSet<String> = table.characters.iter().map(|r| row_key(r)).collect();
    let mut formula = BTreeSet::new();
    for lam in Partition::all(n) {
        let row: Vec<Cyclotomic> = types
            .iter()
            .map(|mu| char_value(&lam, mu).map(Cyclotomic::from_int))
            .collect::<Result<_, _>>()
            .map_err(|e| OracleError::Mismatch(e.to_string()))?;
        formula.insert(row_key(&row));
    }
    if oracle != formula {
        return Err(OracleError::Mismatch(format!("S_{n}: oracle table differs from the character formula")));
    }
    Ok(())
}
