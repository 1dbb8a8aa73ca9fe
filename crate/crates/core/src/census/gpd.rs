//! Backtracking enumeration of groupoids and locally cancellative regular
//! semigroupoids. Deliberately uses only the groupoid-side checkers so that
//! comparisons with the table census are not circular.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::{require_cap, tables::carrier, CensusError, CensusResult, Kind};
use crate::correspond::object_set_name;
use crate::groupoid::{
    check_groupoid, check_local_cancellativity, check_semigroupoid, is_regular, Groupoid, Semigroupoid,
};
use crate::relcore::FinSet;
use crate::report::all_pass;

/// Fills every composable cell of a composition table with an arrow of the
/// right endpoints (or the forced value), pruning any partial table that
/// already breaks associativity. Non-composable cells stay undefined.
struct Filler<'a> {
    n: usize,
    source: &'a [usize],
    target: &'a [usize],
    comp: Vec<Option<usize>>,
    cells: Vec<(usize, Vec<usize>)>,
}

impl<'a> Filler<'a> {
    fn new(
        n: usize,
        source: &'a [usize],
        target: &'a [usize],
        forced: impl Fn(usize, usize) -> Option<usize>,
    ) -> Option<Self> {
        let mut comp = vec![None; n * n];
        let mut cells = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if source[g] != target[f] {
                    continue;
                }
                if let Some(v) = forced(g, f) {
                    comp[g * n + f] = Some(v);
                    continue;
                }
                let options: Vec<usize> = (0..n)
                    .filter(|&v| source[v] == source[f] && target[v] == target[g])
                    .collect();
                if options.is_empty() {
                    return None;
                }
                cells.push((g * n + f, options));
            }
        }
        Some(Self {
            n,
            source,
            target,
            comp,
            cells,
        })
    }

    /// No fully evaluated composable triple disagrees.
    fn consistent(&self) -> bool {
        let n = self.n;
        let m = |g: usize, f: usize| self.comp[g * n + f];
        for h in 0..n {
            for g in (0..n).filter(|&g| self.source[h] == self.target[g]) {
                let Some(hg) = m(h, g) else { continue };
                for f in (0..n).filter(|&f| self.source[g] == self.target[f]) {
                    if let (Some(l), Some(gf)) = (m(hg, f), m(g, f)) {
                        if let Some(r) = m(h, gf) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, emit: &mut impl FnMut(&[Option<usize>])) {
        if self.consistent() {
            self.step(0, emit);
        }
    }

    fn step(&mut self, i: usize, emit: &mut impl FnMut(&[Option<usize>])) {
        if i == self.cells.len() {
            emit(&self.comp);
            return;
        }
        let (cell, options) = (self.cells[i].0, self.cells[i].1.clone());
        for v in options {
            self.comp[cell] = Some(v);
            if self.consistent() {
                self.step(i + 1, emit);
            }
        }
        self.comp[cell] = None;
    }
}

/// Every choice of one candidate per position, in lexicographic order.
fn product_choices(options: &[Vec<usize>], emit: &mut impl FnMut(&[usize])) {
    fn go(options: &[Vec<usize>], acc: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
        match options.get(acc.len()) {
            None => emit(acc),
            Some(opts) => {
                for &o in opts {
                    acc.push(o);
                    go(options, acc, emit);
                    acc.pop();
                }
            }
        }
    }
    go(options, &mut Vec::new(), emit);
}

fn groupoids_for(x: &Arc<FinSet>, units: &[usize], st_index: u64) -> Vec<Groupoid> {
    let n = x.len();
    let k = units.len();
    let unit_object = |a: usize| units.iter().position(|&u| u == a);
    let mut source = vec![0; n];
    let mut target = vec![0; n];
    let mut idx = st_index;
    for a in 0..n {
        if let Some(o) = unit_object(a) {
            source[a] = o;
            target[a] = o;
        } else {
            source[a] = (idx % k as u64) as usize;
            idx /= k as u64;
            target[a] = (idx % k as u64) as usize;
            idx /= k as u64;
        }
    }
    let forced = |g: usize, f: usize| {
        if unit_object(g).is_some() {
            Some(f)
        } else if unit_object(f).is_some() {
            Some(g)
        } else {
            None
        }
    };
    let Some(mut filler) = Filler::new(n, &source, &target, forced) else {
        return Vec::new();
    };
    let objects = FinSet::new(object_set_name(x.name()), units.iter().map(|&u| x.label(u).to_owned()))
        .expect("unit labels are distinct")
        .into_arc();
    let mut out = Vec::new();
    filler.run(&mut |comp| {
        let m = |g: usize, f: usize| comp[g * n + f];
        let inverse_options: Vec<Vec<usize>> = (0..n)
            .map(|f| {
                (0..n)
                    .filter(|&g| m(g, f) == Some(units[source[f]]) && m(f, g) == Some(units[target[f]]))
                    .collect()
            })
            .collect();
        product_choices(&inverse_options, &mut |inv| {
            let g = Groupoid::new(
                objects.clone(),
                x.clone(),
                source.clone(),
                target.clone(),
                units.to_vec(),
                inv.to_vec(),
                comp.to_vec(),
            )
            .expect("well formed");
            if all_pass(&check_groupoid(&g)) {
                out.push(g);
            }
        });
    });
    out
}

/// Every groupoid with arrow set `X`, objects identified with (and labelled
/// by) their unit arrows.
pub fn enumerate_groupoids(n: usize) -> Result<CensusResult<Groupoid>, CensusError> {
    enumerate_groupoids_with(n, None)
}

pub fn enumerate_groupoids_with(n: usize, cap: Option<usize>) -> Result<CensusResult<Groupoid>, CensusError> {
    require_cap(Kind::Groupoid, n, cap)?;
    let start = Instant::now();
    let x = carrier(n);
    let mut tasks: Vec<(Vec<usize>, u64)> = Vec::new();
    if n == 0 {
        tasks.push((vec![], 0));
    }
    for mask in 1u64..(1 << n) {
        let units: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let free = (n - units.len()) as u32;
        let combos = (units.len() as u64).pow(2 * free);
        tasks.extend((0..combos).map(|i| (units.clone(), i)));
    }
    let found = tasks
        .par_iter()
        .map(|(units, i)| groupoids_for(&x, units, *i))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(CensusResult::timed(Kind::Groupoid, n, start, found))
}

/// Source/target sequences `s0, t0, s1, t1, …` in which every object first
/// appears right after the largest one seen so far.
fn object_sequences(n: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, acc: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        if acc.len() == len {
            out.push(acc.clone());
            return;
        }
        for o in 0..=next {
            acc.push(o);
            go(len, acc, next.max(o + 1), out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * n, &mut Vec::new(), 0, &mut out);
    out
}

fn object_set(x: &Arc<FinSet>, k: usize) -> Arc<FinSet> {
    FinSet::new(object_set_name(x.name()), (0..k).map(|i| i.to_string()))
        .expect("numbered")
        .into_arc()
}

/// Relabels objects by first occurrence in `s0, t0, s1, t1, …`, dropping
/// objects no arrow touches.
pub fn canonical_objects(g: &Semigroupoid) -> Semigroupoid {
    let mut map = vec![None; g.objects().len()];
    let mut next = 0;
    for f in 0..g.arrow_count() {
        for o in [g.source(f), g.target(f)] {
            if map[o].is_none() {
                map[o] = Some(next);
                next += 1;
            }
        }
    }
    let relabel = |o: usize| map[o].expect("touched");
    Semigroupoid::new(
        object_set(g.arrows(), next),
        g.arrows().clone(),
        g.sources().iter().map(|&o| relabel(o)).collect(),
        g.targets().iter().map(|&o| relabel(o)).collect(),
        g.comp_table().to_vec(),
    )
    .expect("relabelling preserves shape")
}

/// Every semigroupoid on arrows `X` passing the semigroupoid laws,
/// regularity and local cancellativity. Objects are those touched by some
/// arrow, numbered by first occurrence.
pub fn enumerate_lcr_semigroupoids(n: usize) -> Result<CensusResult<Semigroupoid>, CensusError> {
    enumerate_lcr_semigroupoids_with(n, None)
}

pub fn enumerate_lcr_semigroupoids_with(
    n: usize,
    cap: Option<usize>,
) -> Result<CensusResult<Semigroupoid>, CensusError> {
    require_cap(Kind::LcrSemigroupoid, n, cap)?;
    let start = Instant::now();
    let x = carrier(n);
    let found = object_sequences(n)
        .par_iter()
        .map(|seq| {
            let source: Vec<usize> = seq.iter().step_by(2).copied().collect();
            let target: Vec<usize> = seq.iter().skip(1).step_by(2).copied().collect();
            let k = seq.iter().max().map_or(0, |m| m + 1);
            let objects = object_set(&x, k);
            let mut out = Vec::new();
            if let Some(mut filler) = Filler::new(n, &source, &target, |_, _| None) {
                filler.run(&mut |comp| {
                    let g = Semigroupoid::new(
                        objects.clone(),
                        x.clone(),
                        source.clone(),
                        target.clone(),
                        comp.to_vec(),
                    )
                    .expect("well formed");
                    if all_pass(&check_semigroupoid(&g))
                        && is_regular(&g).passed()
                        && check_local_cancellativity(&g).passed()
                    {
                        out.push(g);
                    }
                });
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(CensusResult::timed(Kind::LcrSemigroupoid, n, start, found))
}
