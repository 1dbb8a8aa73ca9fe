use std::collections::BTreeMap;

use super::{object_set_name, CorrespondError};
use crate::frobenius::{check_hstar, is_pseudoinverse, FrobCandidate, HStarCandidate};
use crate::groupoid::{check_local_cancellativity, check_semigroupoid, is_regular, Semigroupoid};
use crate::relcore::FinSet;
use crate::report::{require, CheckReport, Law, Witness};

fn lcr_checks(g: &Semigroupoid) -> Vec<CheckReport> {
    let mut reports = check_semigroupoid(g);
    reports.push(is_regular(g));
    reports.push(check_local_cancellativity(g));
    reports
}

/// `X = G1` with `m` the graph of composition on the pullback, under the
/// canonical involution on subsets.
pub fn sgpd_to_hstar(g: &Semigroupoid) -> Result<HStarCandidate, CorrespondError> {
    require(lcr_checks(g)).map_err(CorrespondError::Precondition)?;
    let c: HStarCandidate = FrobCandidate::from_table(g.arrows(), g.comp_table())?.into();
    require(check_hstar(&c)?).map_err(CorrespondError::Construction)?;
    Ok(c)
}

/// The value of `f ↦ f*f` (or `ff*`) over all pseudoinverses `f*`, which
/// must agree.
fn over_pseudoinverses(
    c: &FrobCandidate,
    f: usize,
    map: &'static str,
    pinv: &[usize],
    product: impl Fn(usize) -> Option<usize>,
) -> Result<usize, CorrespondError> {
    let mut values: Vec<Option<usize>> = pinv.iter().map(|&b| product(b)).collect();
    values.sort_unstable();
    values.dedup();
    match values.as_slice() {
        &[Some(v)] => Ok(v),
        _ => Err(CorrespondError::NotSingleValued {
            arrow: c.label(f).to_owned(),
            map,
            values: values
                .iter()
                .map(|v| v.map_or_else(|| "undefined".to_owned(), |v| c.label(v).to_owned()))
                .collect(),
        }),
    }
}

/// Semigroupoid of a relative H*-algebra: objects are the idempotents,
/// `s(f) = f*f` and `t(f) = ff*` over the pseudoinverses `f*` of `f`, and
/// composition is the multiplication. Single-valuedness of `s`, `t` and the
/// agreement of the multiplication's domain with the pullback are checked
/// rather than assumed.
pub fn hstar_to_sgpd(c: &HStarCandidate) -> Result<Semigroupoid, CorrespondError> {
    require(check_hstar(c)?).map_err(CorrespondError::Precondition)?;
    let base = c.base();
    let n = base.len();
    let table = base.table()?;
    let product = |g: usize, f: usize| table[g * n + f];
    let idempotents: Vec<usize> = (0..n).filter(|&f| product(f, f) == Some(f)).collect();

    let mut source = Vec::with_capacity(n);
    let mut target = Vec::with_capacity(n);
    for f in 0..n {
        let mut pinv = Vec::new();
        for b in 0..n {
            if is_pseudoinverse(base, f, b)? {
                pinv.push(b);
            }
        }
        if pinv.is_empty() {
            return Err(CorrespondError::NoPseudoinverse {
                arrow: base.label(f).to_owned(),
            });
        }
        let s = over_pseudoinverses(base, f, "s", &pinv, |b| product(b, f))?;
        let t = over_pseudoinverses(base, f, "t", &pinv, |b| product(f, b))?;
        let object = |e: usize| idempotents.iter().position(|&x| x == e);
        // f*f and ff* are idempotent whenever f* is a pseudoinverse
        source.push(object(s).expect("f*f is idempotent"));
        target.push(object(t).expect("ff* is idempotent"));
    }
    for g in 0..n {
        for f in 0..n {
            if product(g, f).is_some() != (source[g] == target[f]) {
                return Err(CorrespondError::DomainMismatch {
                    g: base.label(g).to_owned(),
                    f: base.label(f).to_owned(),
                });
            }
        }
    }
    let objects = FinSet::new(
        object_set_name(base.carrier().name()),
        idempotents.iter().map(|&e| base.label(e).to_owned()),
    )?
    .into_arc();
    let sg = Semigroupoid::new(objects, base.carrier().clone(), source, target, table)?;
    require(lcr_checks(&sg)).map_err(CorrespondError::Construction)?;
    Ok(sg)
}

/// Round trip through the H* side. Arrows and composition must come back
/// unchanged; objects come back as idempotent arrows, so the report also
/// checks that `s(f) ↦ s'(f)`, `t(f) ↦ t'(f)` is a well-defined map onto
/// the new objects. The map is recorded in the note.
pub fn roundtrip_sgpd(g: &Semigroupoid) -> Result<CheckReport, CorrespondError> {
    let back = hstar_to_sgpd(&sgpd_to_hstar(g)?)?;
    if back.arrows().labels() != g.arrows().labels() {
        return Ok(CheckReport::fail(
            Law::RoundTrip,
            Witness::new("arrows-changed", vec![], "arrow sets differ".into()),
        ));
    }
    if let Some(i) = (0..g.comp_table().len()).find(|&i| back.comp_table()[i] != g.comp_table()[i]) {
        let n = g.arrow_count();
        let labels = vec![g.arrows().label(i / n).to_owned(), g.arrows().label(i % n).to_owned()];
        return Ok(CheckReport::fail(
            Law::RoundTrip,
            Witness::new(
                "composition-changed",
                labels,
                "composite differs after the round trip".into(),
            ),
        ));
    }
    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    for f in 0..g.arrow_count() {
        for (old, new) in [(g.source(f), back.source(f)), (g.target(f), back.target(f))] {
            if let Some(&prev) = map.get(&old) {
                if prev != new {
                    let eq = format!(
                        "object {} goes to both {} and {}",
                        g.objects().label(old),
                        back.objects().label(prev),
                        back.objects().label(new)
                    );
                    return Ok(CheckReport::fail(
                        Law::RoundTrip,
                        Witness::new("object-map-ill-defined", vec![g.arrows().label(f).to_owned()], eq),
                    ));
                }
            }
            map.insert(old, new);
        }
    }
    if let Some(missed) = (0..back.objects().len()).find(|o| !map.values().any(|v| v == o)) {
        let label = back.objects().label(missed).to_owned();
        return Ok(CheckReport::fail(
            Law::RoundTrip,
            Witness::new(
                "object-map-not-surjective",
                vec![label.clone()],
                format!("{label} is not hit"),
            ),
        ));
    }
    let note: Vec<String> = map
        .iter()
        .map(|(&o, &n)| format!("{} ↦ {}", g.objects().label(o), back.objects().label(n)))
        .collect();
    Ok(CheckReport::pass(Law::RoundTrip).with_note(format!("object map: {}", note.join(", "))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspond::groupoid_to_frob;
    use crate::frobenius::fixtures as fx;
    use crate::groupoid::fixtures as gx;
    use crate::groupoid::underlying_semigroupoid;
    use crate::report::all_pass;

    #[test]
    fn sgpd_to_hstar_examples() {
        let c = sgpd_to_hstar(&gx::z2_sg()).unwrap();
        assert!(all_pass(&check_hstar(&c).unwrap()));
        let p2 = underlying_semigroupoid(&gx::p2()).unwrap();
        assert!(all_pass(&check_hstar(&sgpd_to_hstar(&p2).unwrap()).unwrap()));
        assert!(matches!(
            sgpd_to_hstar(&gx::rb2()),
            Err(CorrespondError::Precondition(_))
        ));
    }

    #[test]
    fn hstar_to_sgpd_examples() {
        let sg = hstar_to_sgpd(&fx::z2().into()).unwrap();
        assert_eq!(sg.objects().labels(), ["e"]);
        assert_eq!(sg.comp_table(), gx::z2_sg().comp_table());

        let p2 = underlying_semigroupoid(&gx::p2()).unwrap();
        let sg = hstar_to_sgpd(&sgpd_to_hstar(&p2).unwrap()).unwrap();
        assert_eq!(sg.objects().labels(), ["11", "22"]);
        // f = 12, f* = 21: f*f = 22
        assert_eq!(sg.objects().label(sg.source(1)), "22");
        assert_eq!(sg.objects().label(sg.target(1)), "11");

        assert!(matches!(
            hstar_to_sgpd(&fx::sl2().into()),
            Err(CorrespondError::Precondition(_))
        ));
    }

    #[test]
    fn roundtrip_sgpd_examples() {
        let r = roundtrip_sgpd(&gx::z2_sg()).unwrap();
        assert!(r.passed());
        assert_eq!(r.note.as_deref(), Some("object map: o ↦ e"));
        let p2 = underlying_semigroupoid(&gx::p2()).unwrap();
        let r = roundtrip_sgpd(&p2).unwrap();
        assert!(r.passed());
        assert_eq!(r.note.as_deref(), Some("object map: 1 ↦ 11, 2 ↦ 22"));
    }

    #[test]
    fn composite_coherence() {
        for g in [gx::z2(), gx::p2(), gx::d2()] {
            let via_sgpd = sgpd_to_hstar(&underlying_semigroupoid(&g).unwrap()).unwrap();
            assert_eq!(via_sgpd.mult_rel(), groupoid_to_frob(&g).unwrap().mult_rel());
        }
    }
}
