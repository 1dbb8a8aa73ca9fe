//! Elementwise readings of the axioms, evaluated with set semantics so they
//! apply to arbitrary (possibly multi-valued) relations: `hg` denotes the set
//! `{f | ((h, g), f) ∈ m}` and `f = hg` means `f ∈ hg`.

use super::FrobCandidate;
use crate::relcore::PtSubset;
use crate::report::Witness;

/// (M): the first multi-valued cell, else the first element that is not a
/// product.
pub fn m_witness(c: &FrobCandidate) -> Option<Witness> {
    let n = c.len();
    for h in 0..n {
        for g in 0..n {
            let mut it = c.products(h, g);
            if let (Some(f1), Some(f2)) = (it.next(), it.next()) {
                let l = c.labels(&[h, g, f1, f2]);
                let eq = format!(
                    "{h}{g} contains {f1} and {f2}, so m∘m† relates {f1} to {f2}",
                    h = l[0],
                    g = l[1],
                    f1 = l[2],
                    f2 = l[3]
                );
                return Some(Witness::new("multi-valued", l, eq));
            }
        }
    }
    let mut hit = vec![false; n];
    for (_, f) in c.mult_rel().pairs() {
        hit[f] = true;
    }
    hit.iter().position(|&h| !h).map(|f| {
        let l = c.labels(&[f]);
        let eq = format!("no h, g with {0} = hg, so m∘m† does not relate {0} to itself", l[0]);
        Witness::new("not-a-product", l, eq)
    })
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// The three predicates of (F) at `(a, b, c, d)`:
/// `ab = cd`, `∃e: b = ed ∧ c = ae`, `∃e: d = eb ∧ a = ce`.
pub fn f_predicates(c: &FrobCandidate, a: usize, b: usize, cc: usize, d: usize) -> (bool, bool, bool) {
    let n = c.len();
    let bits = c.mult_rel().bits();
    let equal = intersects(bits.row(c.cell(a, b)), bits.row(c.cell(cc, d)));
    let right = (0..n).any(|e| c.relates(e, d, b) && c.relates(a, e, cc));
    let left = (0..n).any(|e| c.relates(e, b, d) && c.relates(cc, e, a));
    (equal, right, left)
}

/// (F): the first quadruple `(a, b, c, d)` where the three readings differ.
///
/// Clause `left` compares `(1×m)∘(m†×1)` with `m†∘m`; clause `right`
/// compares `m†∘m` with `(m×1)∘(1×m†)`.
pub fn f_witness(c: &FrobCandidate) -> Option<Witness> {
    let n = c.len();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    let (equal, right, left) = f_predicates(c, a, b, cc, d);
                    if equal == left && equal == right {
                        continue;
                    }
                    let l = c.labels(&[a, b, cc, d]);
                    let prod = if equal {
                        format!("{}{} = {}{}", l[0], l[1], l[2], l[3])
                    } else {
                        format!("{}{} ≠ {}{}", l[0], l[1], l[2], l[3])
                    };
                    let (clause, eq) = if equal != left {
                        (
                            "left",
                            format!(
                                "{prod}, but ∃e: {d} = e{b} ∧ {a} = {c}e is {left}",
                                a = l[0],
                                b = l[1],
                                c = l[2],
                                d = l[3]
                            ),
                        )
                    } else {
                        (
                            "right",
                            format!(
                                "{prod}, but ∃e: {b} = e{d} ∧ {c} = {a}e is {right}",
                                a = l[0],
                                b = l[1],
                                c = l[2],
                                d = l[3]
                            ),
                        )
                    };
                    return Some(Witness::new(clause, l, eq));
                }
            }
        }
    }
    None
}

/// `(fg)h` and `f(gh)` as bitsets over `X` (one bool per element).
pub fn a_sides(c: &FrobCandidate, f: usize, g: usize, h: usize) -> (Vec<bool>, Vec<bool>) {
    let n = c.len();
    let mut left = vec![false; n];
    let mut right = vec![false; n];
    for x in c.products(f, g) {
        for z in c.products(x, h) {
            left[z] = true;
        }
    }
    for y in c.products(g, h) {
        for z in c.products(f, y) {
            right[z] = true;
        }
    }
    (left, right)
}

/// (A): the first triple whose two bracketings have different value sets,
/// together with the first element in the symmetric difference.
pub fn a_witness(c: &FrobCandidate) -> Option<Witness> {
    let n = c.len();
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                let (left, right) = a_sides(c, f, g, h);
                if let Some(z) = (0..n).find(|&z| left[z] != right[z]) {
                    let l = c.labels(&[f, g, h, z]);
                    let (clause, eq) = if left[z] {
                        (
                            "left-only",
                            format!(
                                "({f}{g}){h} ∋ {z} but {f}({g}{h}) ∌ {z}",
                                f = l[0],
                                g = l[1],
                                h = l[2],
                                z = l[3]
                            ),
                        )
                    } else {
                        (
                            "right-only",
                            format!(
                                "{f}({g}{h}) ∋ {z} but ({f}{g}){h} ∌ {z}",
                                f = l[0],
                                g = l[1],
                                h = l[2],
                                z = l[3]
                            ),
                        )
                    };
                    return Some(Witness::new(clause, l, eq));
                }
            }
        }
    }
    None
}

/// `u` composes with nothing except as an identity: `fu ⊆ {f}` and
/// `uf ⊆ {f}` for every `f`.
pub fn unit_admissible(c: &FrobCandidate, u: usize) -> bool {
    (0..c.len()).all(|f| c.products(f, u).all(|y| y == f) && c.products(u, f).all(|y| y == f))
}

pub struct UnitSearch {
    /// The largest subset satisfying the two universal assertions.
    pub maximal: PtSubset,
    /// Whether the qualifying subset, if any, is unique.
    pub unique: bool,
    pub witness: Option<Witness>,
}

fn has_units(c: &FrobCandidate, members: &[usize], f: usize) -> (bool, bool) {
    let right = members.iter().any(|&u| c.relates(f, u, f));
    let left = members.iter().any(|&u| c.relates(u, f, f));
    (right, left)
}

/// The four assertions of (U): every `f` has `u ∈ U` with `fu = f` and with
/// `uf = f`, and every `u ∈ U` composing with `f` on either side yields `f`.
pub fn unit_search(c: &FrobCandidate) -> UnitSearch {
    let n = c.len();
    let admissible: Vec<usize> = (0..n).filter(|&u| unit_admissible(c, u)).collect();
    let maximal = PtSubset::new(c.carrier(), admissible.iter().copied()).expect("in range");
    for f in 0..n {
        let (right, left) = has_units(c, &admissible, f);
        if !right || !left {
            let clause = if !right { "no-right-unit" } else { "no-left-unit" };
            let l = c.labels(&[f]);
            let eq = if !right {
                format!("no u acting as an identity wherever it composes has {0}u = {0}", l[0])
            } else {
                format!("no u acting as an identity wherever it composes has u{0} = {0}", l[0])
            };
            return UnitSearch {
                maximal,
                unique: true,
                witness: Some(Witness::new(clause, l, eq)),
            };
        }
    }
    let unique = admissible.iter().all(|&drop| {
        let rest: Vec<usize> = admissible.iter().copied().filter(|&u| u != drop).collect();
        (0..n).any(|f| {
            let (r, l) = has_units(c, &rest, f);
            !r || !l
        })
    });
    UnitSearch {
        maximal,
        unique,
        witness: None,
    }
}

/// Whether a given subset satisfies all four assertions of (U).
pub fn is_unit_subset(c: &FrobCandidate, u: &PtSubset) -> bool {
    let members = u.members();
    members.iter().all(|&m| unit_admissible(c, m)) && (0..c.len()).all(|f| has_units(c, members, f) == (true, true))
}

/// The two (H) equations at subset `x` with `x* = xs`, elementwise:
/// right: `q ∈ p·x*  ⟺  p ∈ q·x`; left: `q ∈ x*·p  ⟺  p ∈ x·q`.
/// Returns the first disagreeing `(clause, p, q)`.
pub fn h_mismatch(c: &FrobCandidate, x: &PtSubset, xs: &PtSubset) -> Option<(&'static str, usize, usize)> {
    let n = c.len();
    for p in 0..n {
        for q in 0..n {
            let lhs = xs.members().iter().any(|&b| c.relates(p, b, q));
            let rhs = x.members().iter().any(|&a| c.relates(q, a, p));
            if lhs != rhs {
                return Some(("right", p, q));
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            let lhs = xs.members().iter().any(|&b| c.relates(b, p, q));
            let rhs = x.members().iter().any(|&a| c.relates(a, q, p));
            if lhs != rhs {
                return Some(("left", p, q));
            }
        }
    }
    None
}
