use std::sync::Arc;

use super::{object_set_name, CorrespondError};
use crate::frobenius::{check_frobenius, FrobCandidate};
use crate::groupoid::{check_groupoid, Groupoid};
use crate::relcore::{Carrier, FinSet, Rel};
use crate::report::{require, CheckReport, FailedChecks, Law, Witness};

fn unique(c: &FrobCandidate, arrow: usize, role: &'static str, found: Vec<usize>) -> Result<usize, CorrespondError> {
    match found.as_slice() {
        &[x] => Ok(x),
        _ => Err(CorrespondError::NonUniqueWitness {
            arrow: c.label(arrow).to_owned(),
            role,
            found: found.iter().map(|&i| c.label(i).to_owned()).collect(),
        }),
    }
}

/// Groupoid of a relative Frobenius algebra: arrows are `X`, objects are the
/// unit elements, `s(f)` is the unit `x` with `f·x` defined, `t(f)` the unit
/// `y` with `y·f` defined, `ε` includes the units diagonally and `ι(f)` is the
/// `g` with `gf` and `fg` both units.
///
/// Objects are labelled by their unit arrows.
pub fn frob_to_groupoid(c: &FrobCandidate) -> Result<Groupoid, CorrespondError> {
    let reports = require(check_frobenius(c)).map_err(CorrespondError::Precondition)?;
    let units = reports
        .iter()
        .find_map(|r| r.unit.clone())
        .expect("a passing (U) report carries its unit");
    let units = units.members().to_vec();
    let n = c.len();
    let table = c.table()?;
    let product = |g: usize, f: usize| table[g * n + f];
    let object_of = |u: usize| units.iter().position(|&x| x == u);

    let mut source = Vec::with_capacity(n);
    let mut target = Vec::with_capacity(n);
    let mut inv = Vec::with_capacity(n);
    for f in 0..n {
        let s = units.iter().copied().filter(|&x| product(f, x).is_some()).collect();
        source.push(unique(c, f, "source", s)?);
        let t = units.iter().copied().filter(|&y| product(y, f).is_some()).collect();
        target.push(unique(c, f, "target", t)?);
        let i = (0..n)
            .filter(|&g| {
                let is_unit = |v: Option<usize>| v.is_some_and(|v| object_of(v).is_some());
                is_unit(product(g, f)) && is_unit(product(f, g))
            })
            .collect();
        inv.push(unique(c, f, "inverse", i)?);
    }
    let source: Vec<usize> = source.into_iter().map(|u| object_of(u).expect("unit")).collect();
    let target: Vec<usize> = target.into_iter().map(|u| object_of(u).expect("unit")).collect();
    for g in 0..n {
        for f in 0..n {
            if product(g, f).is_some() != (source[g] == target[f]) {
                return Err(CorrespondError::DomainMismatch {
                    g: c.label(g).to_owned(),
                    f: c.label(f).to_owned(),
                });
            }
        }
    }

    let objects = FinSet::new(
        object_set_name(c.carrier().name()),
        units.iter().map(|&u| c.label(u).to_owned()),
    )?
    .into_arc();
    let g = Groupoid::new(
        objects,
        Arc::clone(c.carrier()),
        source,
        target,
        units.clone(),
        inv,
        table,
    )?;
    require(check_groupoid(&g)).map_err(CorrespondError::Construction)?;
    Ok(g)
}

/// `X = G1` with `m` the graph of composition; pairs off the pullback are
/// unrelated. The unit of the result is `ε(G0)`.
pub fn groupoid_to_frob(g: &Groupoid) -> Result<FrobCandidate, CorrespondError> {
    require(check_groupoid(g)).map_err(CorrespondError::Precondition)?;
    let c = FrobCandidate::from_table(g.arrows(), g.base().comp_table())?;
    let reports = check_frobenius(&c);
    let unit_ok = reports.iter().find_map(|r| r.unit.as_ref()).is_some_and(|u| {
        let mut expected = g.units().to_vec();
        expected.sort_unstable();
        expected.dedup();
        u.members() == expected.as_slice()
    });
    require(reports).map_err(CorrespondError::Construction)?;
    if !unit_ok {
        let r = CheckReport::internal(Law::U, "unit differs from the groupoid's units");
        return Err(CorrespondError::Construction(FailedChecks(vec![r])));
    }
    Ok(c)
}

/// Whether going to the groupoid and back returns exactly the same relation
/// on the same carrier.
pub fn roundtrip_frob(c: &FrobCandidate) -> Result<bool, CorrespondError> {
    let back = groupoid_to_frob(&frob_to_groupoid(c)?)?;
    Ok(back.carrier() == c.carrier() && back.mult_rel() == c.mult_rel())
}

/// Object and arrow bijections between two groupoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidIso {
    pub object_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.len() == n && map.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

/// Checks that the maps are bijections commuting with `s`, `t`, `ε`, `ι`
/// and `m`.
pub fn verify_iso(g: &Groupoid, h: &Groupoid, iso: &GroupoidIso) -> Result<(), CorrespondError> {
    let fail = |square, element: &str| {
        Err(CorrespondError::IsoFailure {
            square,
            element: element.to_owned(),
        })
    };
    if !is_bijection(&iso.object_map, g.objects().len()) || h.objects().len() != g.objects().len() {
        return fail("object bijection", g.objects().name());
    }
    if !is_bijection(&iso.arrow_map, g.arrows().len()) || h.arrows().len() != g.arrows().len() {
        return fail("arrow bijection", g.arrows().name());
    }
    let (om, am) = (&iso.object_map, &iso.arrow_map);
    for f in 0..g.arrows().len() {
        let label = g.arrows().label(f);
        if h.source(am[f]) != om[g.source(f)] {
            return fail("s", label);
        }
        if h.target(am[f]) != om[g.target(f)] {
            return fail("t", label);
        }
        if h.inv(am[f]) != am[g.inv(f)] {
            return fail("ι", label);
        }
        for k in 0..g.arrows().len() {
            if h.comp(am[f], am[k]) != g.comp(f, k).map(|v| am[v]) {
                return fail("m", &format!("({label}, {})", g.arrows().label(k)));
            }
        }
    }
    for x in 0..g.objects().len() {
        if h.unit(om[x]) != am[g.unit(x)] {
            return fail("ε", g.objects().label(x));
        }
    }
    Ok(())
}

/// The canonical isomorphism from `g` to its reconstruction through the
/// Frobenius side: identity on arrows, `x ↦ ε(x)` on objects.
pub fn roundtrip_groupoid(g: &Groupoid) -> Result<GroupoidIso, CorrespondError> {
    let back = frob_to_groupoid(&groupoid_to_frob(g)?)?;
    let object_map = (0..g.objects().len())
        .map(|x| {
            let u = g.unit(x);
            back.units()
                .iter()
                .position(|&v| v == u)
                .ok_or(CorrespondError::IsoFailure {
                    square: "ε",
                    element: g.objects().label(x).to_owned(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let iso = GroupoidIso {
        object_map,
        arrow_map: (0..g.arrows().len()).collect(),
    };
    verify_iso(g, &back, &iso)?;
    Ok(iso)
}

/// Reading the unit map as the full product `U × U ⊆ G0 × G1` instead of the
/// diagonal. Fails with a witness object whenever some object is sent to
/// more than one arrow, i.e. whenever `|U| > 1`, since then `s∘ε ≠ 1`.
/// Always informational.
pub fn literal_unit_relation(c: &FrobCandidate) -> CheckReport {
    let Some(units) = crate::frobenius::unit_of(c) else {
        return CheckReport::pass(Law::LiteralUnitRelation)
            .informational()
            .with_note("no unit; nothing to compare");
    };
    let u = units.members();
    let objects = Carrier::of(c.carrier());
    let eps = Rel::from_pairs(
        objects.clone(),
        objects,
        u.iter().flat_map(|&a| u.iter().map(move |&b| (a, b))),
    )
    .expect("unit indices are in range");
    let w = u.iter().find(|&&x| eps.image_len(x) > 1).map(|&x| {
        let images: Vec<String> = eps.image(x).map(|v| c.label(v).to_owned()).collect();
        Witness::new(
            "several-images",
            vec![c.label(x).to_owned()],
            format!(
                "U × U sends object {} to {{{}}}, so s∘ε is not the identity",
                c.label(x),
                images.join(", ")
            ),
        )
    });
    CheckReport::from_witness(Law::LiteralUnitRelation, w)
        .informational()
        .with_note("the diagonal reading is used for the construction")
}
