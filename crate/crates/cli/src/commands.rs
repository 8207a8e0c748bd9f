use std::collections::BTreeMap;

use serde_json::{json, Value};
use typea::center::{
    affine_stabilizer, center_group, cuspidal_data, fixed_center, h1_center, levi_center, levi_kernel,
    self_opposed_closure,
};
use typea::cyclotomic::Cyclotomic;
use typea::dual::{class_invariants, omega1_phase, torsor_element};
use typea::field::FqField;
use typea::gauss::{gauss_sum, sln_constant_closed, stable_cuspidal_characters, ConstantProblem, Registry};
use typea::lattice::{AbChar, FinAbGroup};
use typea::root_datum::{build_group, LeviLabel};
use typea::series::{
    families, gelfand_graev_labels, is_identity_matrix, jordan_counts, mat_mul, series_catalog, FamilyEntry,
    SeriesEntry,
};
use typea_oracle::census::census;
use typea_oracle::TableCache;

use crate::{CenterArgs, Cli, CliError, Command, GaussArgs, GroupArgs, Method, Report, Verdict, SCHEMA_VERSION};

/// Largest rank the center suite enumerates all Levi pairs for.
const MAX_CENTER_SUITE_N: usize = 8;

pub(crate) fn execute(cli: &Cli, echo: String) -> Result<Report, CliError> {
    let cache = match &cli.cache {
        Some(dir) => TableCache::at(dir),
        None => TableCache::from_env(),
    };
    let (inputs, results, verdicts) = match &cli.command {
        Command::Center(a) => (json!(a), center(a)?, Vec::new()),
        Command::Series(a) => (json!(a), series(a)?, Vec::new()),
        Command::Gauss(a) => {
            let (results, verdicts) = gauss(a)?;
            (json!(a), results, verdicts)
        }
        Command::Verify(a) => {
            let (results, verdicts) = verify(a, &cache)?;
            (json!(a), results, verdicts)
        }
    };
    Ok(Report { schema_version: SCHEMA_VERSION, command: echo, inputs, results, verdicts })
}

fn char_json(c: &AbChar) -> Value {
    json!(c.exponents())
}

fn group_json(g: &FinAbGroup) -> Value {
    json!(g.invariant_factors())
}

fn center(a: &CenterArgs) -> Result<Value, CliError> {
    let q = a.q.unwrap_or(a.p);
    match typea::arith::prime_power(q) {
        Some((p, _)) if p == a.p => {}
        _ => return Err(CliError::Input(format!("q = {q} is not a power of p = {}", a.p))),
    }
    let (datum, frob) = build_group(a.n, a.d, q, a.twisted)?;
    let c = center_group(&datum, &frob);
    let cus = cuspidal_data(&c, &datum);
    let min_levi: Vec<Value> = cus
        .min_levi
        .iter()
        .map(|(k, l)| json!({ "kernel": k.elements(), "levi": l.0, "blocks": datum.composition(l) }))
        .collect();
    let mut out = json!({
        "center": c.summary(),
        "fixed_center": group_json(&fixed_center(&c)),
        "h1": group_json(&h1_center(&c)),
        "cuspidal_characters": cus.characters.iter().map(char_json).collect::<Vec<_>>(),
        "minimal_levis": min_levi,
    });
    if let Some(blocks) = &a.levi {
        let l = LeviLabel::from_composition(a.n, blocks)?;
        let k = levi_kernel(&c, &l);
        out["levi"] = json!({
            "blocks": blocks,
            "simple_roots": l.0,
            "kernel": k.elements(),
            "quotient": group_json(&k.quotient_structure()),
            "levi_center": group_json(&levi_center(&datum, &l, a.p)),
            "self_opposed_closure": self_opposed_closure(&datum, &l)?.0,
        });
    }
    Ok(out)
}

fn family_json(f: &FamilyEntry) -> Value {
    let m = &f.fourier;
    json!({
        "representative": f.representative,
        "orbit_size": f.orbit.len(),
        "stabilizer_order": f.stabilizer.order(),
        "fixed": group_json(&f.fixed),
        "h1": group_json(&f.h1),
        "size": f.size(),
        "fourier": {
            "rows": m.rows.iter().map(|(a, tau)| json!({ "a": a, "tau": char_json(tau) })).collect::<Vec<_>>(),
            "columns": m.cols.iter().map(|(xi, alpha)| json!({ "xi": char_json(xi), "alpha": alpha })).collect::<Vec<_>>(),
            "entries": m.entries,
        },
        "rational_counts": f.rational_counts.iter().map(|(al, c)| json!({ "alpha": al, "count": c })).collect::<Vec<_>>(),
    })
}

fn entry_json(i: usize, e: &SeriesEntry) -> Value {
    json!({
        "index": i,
        "lift": e.class.lift(),
        "geometric_id": e.class.geometric_id(),
        "alpha": e.class.alpha,
        "a_order": e.invariants.a_order(),
        "a_fixed": group_json(&e.invariants.fixed),
        "size": e.size,
        "central_character": char_json(&e.central_char),
        "epsilon_g": e.epsilon_g,
        "epsilon_c": e.epsilon_c,
        "components": e.components.iter().map(|c| json!({
            "eigenvalues": c.eigenvalues,
            "multiplicity": c.multiplicity,
            "twisted": c.twisted,
        })).collect::<Vec<_>>(),
    })
}

/// Series indices grouped by geometric class, in catalog order.
fn geometric_groups(cat: &[SeriesEntry]) -> Vec<Vec<usize>> {
    let mut groups: Vec<(String, Vec<usize>)> = Vec::new();
    for (i, e) in cat.iter().enumerate() {
        let key = format!("{:?}", e.class.geometric_id());
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push(i),
            None => groups.push((key, vec![i])),
        }
    }
    groups.into_iter().map(|(_, v)| v).collect()
}

fn series(a: &GroupArgs) -> Result<Value, CliError> {
    let cat = series_catalog(a.n, a.q, a.twisted)?;
    let geometric: Vec<Value> = geometric_groups(&cat)
        .into_iter()
        .map(|members| {
            let base = &cat[members[0]];
            json!({
                "geometric_id": base.class.geometric_id(),
                "series": members,
                "families": families(base).iter().map(family_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let gg: Vec<Value> = gelfand_graev_labels(&cat)?
        .iter()
        .map(|g| {
            json!({
                "z": g.z,
                "constituents": g.constituents.iter().map(|l| json!({ "series": l.series, "xi": char_json(&l.xi) })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let jordan: Vec<Value> = jordan_counts(&cat)
        .iter()
        .map(|r| json!({ "series": r.series, "series_size": r.series_size, "unipotent_count": r.unipotent_count }))
        .collect();
    Ok(json!({
        "series_count": cat.len(),
        "total": cat.iter().map(|e| e.size).sum::<usize>(),
        "sizes": cat.iter().map(|e| e.size).collect::<Vec<_>>(),
        "series": cat.iter().enumerate().map(|(i, e)| entry_json(i, e)).collect::<Vec<_>>(),
        "geometric_classes": geometric,
        "gelfand_graev": gg,
        "jordan": jordan,
    }))
}

fn route_names(m: Method) -> Vec<&'static str> {
    match m {
        Method::All => vec!["closed", "direct", "product"],
        Method::Closed => vec!["closed"],
        Method::Product => vec!["product"],
        Method::Direct => vec!["direct"],
    }
}

/// Values of `G(G, zeta)` per stable cuspidal `zeta` and route.
fn group_constants(n: usize, q: u64, twisted: bool, method: Method) -> Result<(Value, Vec<Verdict>), CliError> {
    let (datum, frob) = build_group(n, 1, q, twisted)?;
    let c = center_group(&datum, &frob);
    let registry = Registry::standard();
    let mut rows = Vec::new();
    let mut verdicts = Vec::new();
    let closed = sln_constant_closed(n, q, twisted).ok();
    for zeta in stable_cuspidal_characters(&c) {
        let problem = ConstantProblem::new(datum.clone(), frob.clone(), zeta.clone())?;
        let mut values = BTreeMap::new();
        for name in route_names(method) {
            values.insert(name, registry.get(name)?.evaluate(&problem)?);
        }
        let first = values.values().next().cloned();
        let agree = values.values().all(|v| Some(v) == first.as_ref());
        let fourth = first.as_ref().map(|v| v.pow(4) == Cyclotomic::one()).unwrap_or(false);
        let matches_closed = match (&closed, &first) {
            (Some(c), Some(v)) => c == v,
            _ => false,
        };
        let label = format!("zeta = {:?}", zeta.exponents());
        if values.len() > 1 {
            verdicts.push(Verdict::new(format!("routes agree at {label}"), agree));
        }
        verdicts.push(Verdict::new(format!("fourth power is 1 at {label}"), fourth));
        verdicts.push(Verdict::new(format!("closed form at {label}"), matches_closed));
        rows.push(json!({ "zeta": char_json(&zeta), "values": values, "signs": problem.signs() }));
    }
    Ok((json!({ "closed_form": closed, "characters": rows }), verdicts))
}

fn gauss(a: &GaussArgs) -> Result<(Value, Vec<Verdict>), CliError> {
    if a.raw {
        let (p, s, m) = (a.p.unwrap_or_default(), a.s.unwrap_or_default(), a.m.unwrap_or_default());
        let field = FqField::new(p, s)?;
        return Ok((json!({ "p": p, "s": s, "m": m, "value": gauss_sum(&field, m)? }), Vec::new()));
    }
    let (n, q) = (a.n.unwrap_or_default(), a.q.unwrap_or_default());
    group_constants(n, q, a.twisted, a.method)
}

fn series_suite(cat: &[SeriesEntry], verdicts: &mut Vec<Verdict>) -> Result<(), CliError> {
    let mut fourier_ok = true;
    let mut partition_ok = true;
    let mut asai_ok = true;
    for members in geometric_groups(cat) {
        let base = &cat[members[0]];
        let fams = families(base);
        let mut per_alpha: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for f in &fams {
            let m = &f.fourier;
            fourier_ok &= is_identity_matrix(&m.gram()) && is_identity_matrix(&mat_mul(&m.inverse(), &m.entries));
            partition_ok &= f.rational_counts.iter().map(|(_, c)| c).sum::<usize>() == f.size();
            for (al, c) in &f.rational_counts {
                *per_alpha.entry(al.clone()).or_default() += c;
            }
        }
        let inv = class_invariants(&base.class);
        let center = base.class.setting.fixed_center();
        for &i in &members {
            let other = &cat[i];
            let alpha = torsor_element(&base.class, &other.class)
                .map(|t| inv.project_h1(&t))
                .ok_or_else(|| CliError::Input("rational classes with one geometric class lack a torsor element".into()))?;
            partition_ok &= per_alpha.get(&alpha).copied().unwrap_or(0) == other.size;
            for z in center.coordinate_tuples() {
                let lhs = other.central_char.phase_coords(&z).sub(&base.central_char.phase_coords(&z));
                asai_ok &= lhs == omega1_phase(&base.class, &alpha, &z)?;
            }
        }
    }
    verdicts.push(Verdict::new("Fourier matrices are unitary and invertible", fourier_ok));
    verdicts.push(Verdict::new("families partition the geometric series", partition_ok));
    verdicts.push(Verdict::new("rational labels differ by omega^1", asai_ok));
    let jordan_ok = jordan_counts(cat).iter().all(|r| r.series_size == r.unipotent_count);
    verdicts.push(Verdict::new("Jordan decomposition counts", jordan_ok));
    Ok(())
}

fn center_suite(n: usize, p: u64, verdicts: &mut Vec<Verdict>) -> Result<(), CliError> {
    let (datum, frob) = build_group(n, 1, p, false)?;
    let c = center_group(&datum, &frob);
    let labels: Vec<LeviLabel> =
        (0u32..1 << (n - 1)).map(|mask| LeviLabel::new((0..n - 1).filter(|&i| mask >> i & 1 == 1))).collect();
    let kernels: Vec<_> = labels.iter().map(|l| levi_kernel(&c, l)).collect();
    let mut product_ok = true;
    for (a, ka) in labels.iter().zip(&kernels) {
        for (b, kb) in labels.iter().zip(&kernels) {
            product_ok &= levi_kernel(&c, &a.intersection(b)) == ka.join(kb);
        }
    }
    verdicts.push(Verdict::new("kernel of an intersection of Levis is the product of kernels", product_ok));
    let mut closure_ok = true;
    let mut affine_ok = true;
    for (l, k) in labels.iter().zip(&kernels) {
        let inf = self_opposed_closure(&datum, l)?;
        closure_ok &= *k == levi_kernel(&c, &inf);
        if !(n as u64).is_multiple_of(p) {
            affine_ok &= levi_kernel(&c, &inf) == affine_stabilizer(&c, &inf)?;
        }
    }
    verdicts.push(Verdict::new("kernel depends only on the self-opposed closure", closure_ok));
    if !(n as u64).is_multiple_of(p) {
        verdicts.push(Verdict::new("coweight kernel equals the affine stabilizer", affine_ok));
    }
    Ok(())
}

fn verify(a: &GroupArgs, cache: &TableCache) -> Result<(Value, Vec<Verdict>), CliError> {
    let c = census(a.n, a.q, a.twisted, cache)?;
    let mut verdicts: Vec<Verdict> = c
        .report
        .checks
        .iter()
        .map(|chk| {
            let v = Verdict::new(chk.identity.clone(), chk.passed);
            if chk.passed {
                v
            } else {
                v.with_detail(format!("expected {}, found {}", chk.expected, chk.found))
            }
        })
        .collect();
    series_suite(&c.catalog, &mut verdicts)?;
    let q_minus_eps = if a.twisted { a.q + 1 } else { a.q - 1 };
    if q_minus_eps % a.n as u64 == 0 {
        let (_, gv) = group_constants(a.n, a.q, a.twisted, Method::All)?;
        verdicts.extend(gv);
    }
    if a.n <= MAX_CENTER_SUITE_N && a.n >= 2 {
        let p = c.catalog[0].class.setting.p;
        center_suite(a.n, p, &mut verdicts)?;
    }
    let degrees = c.table.degrees();
    let results = json!({
        "group": c.group.name,
        "order": c.report.order,
        "class_count": c.report.class_count,
        "series_sizes": c.report.series_sizes,
        "degrees": degrees,
        "gelfand_graev": c.gelfand_graev.iter().map(|g| json!({
            "psi": g.psi,
            "degree": g.degree().map(|d| d.to_string()),
            "constituents": g.constituents.iter().map(|&(i, _)| i).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok((results, verdicts))
}
