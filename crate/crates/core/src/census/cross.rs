use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::gpd::{enumerate_groupoids_with, enumerate_lcr_semigroupoids_with};
use super::tables::{enumerate_frobenius_with, enumerate_hstar_with};
use super::CensusError;
use crate::correspond::{frob_to_groupoid, groupoid_to_frob, hstar_to_sgpd, roundtrip_sgpd, sgpd_to_hstar};
use crate::frobenius::{check_frobenius, FrobCandidate, HStarCandidate};
use crate::groupoid::{check_local_cancellativity, check_semigroupoid, is_regular, Groupoid, Semigroupoid};
use crate::report::all_pass;

fn table_key(c: &FrobCandidate) -> Vec<Option<usize>> {
    c.table().expect("census candidates are single valued")
}

fn groupoid_key(g: &Groupoid) -> String {
    format!("{g:?}")
}

fn describe_table(c: &FrobCandidate) -> String {
    let n = c.len();
    let cells: Vec<String> = table_key(c)
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| format!("{}{}={}", c.label(i / n), c.label(i % n), c.label(v))))
        .collect();
    format!("[{}]", cells.join(" "))
}

fn describe_sgpd(g: &Semigroupoid) -> String {
    let n = g.arrow_count();
    let cells: Vec<String> = g
        .comp_table()
        .iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let l = |a: usize| g.arrows().label(a);
            v.map(|v| format!("{}{}={}", l(i / n), l(i % n), l(v)))
        })
        .collect();
    let ends: Vec<String> = (0..n)
        .map(|f| format!("{}:{}->{}", g.arrows().label(f), g.source(f), g.target(f)))
        .collect();
    format!("[{} | {}]", ends.join(" "), cells.join(" "))
}

/// Comparison of the Frobenius and groupoid censuses of one size.
#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub n: usize,
    pub frobenius: usize,
    pub groupoids: usize,
    /// Structures without a partner under the conversions, or whose
    /// conversion failed.
    pub unmatched: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty() && self.frobenius == self.groupoids
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "n = {}: bijection of size {}", self.n, self.frobenius)
        } else {
            writeln!(
                f,
                "n = {}: MISMATCH ({} Frobenius algebras, {} groupoids)",
                self.n, self.frobenius, self.groupoids
            )?;
            for u in &self.unmatched {
                writeln!(f, "  unmatched {u}")?;
            }
            Ok(())
        }
    }
}

/// Checks that `frob_to_groupoid` and `groupoid_to_frob` are mutually
/// inverse bijections between the two censuses of size `n`.
pub fn cross_check_theorem1(n: usize) -> Result<BijectionReport, CensusError> {
    cross_check_theorem1_with(n, None)
}

pub fn cross_check_theorem1_with(n: usize, cap: Option<usize>) -> Result<BijectionReport, CensusError> {
    let frob = enumerate_frobenius_with(n, cap)?.structures;
    let gpds = enumerate_groupoids_with(n, cap)?.structures;
    let frob_index: HashMap<Vec<Option<usize>>, usize> =
        frob.iter().enumerate().map(|(i, c)| (table_key(c), i)).collect();
    let gpd_index: HashMap<String, usize> = gpds.iter().enumerate().map(|(i, g)| (groupoid_key(g), i)).collect();

    let mut unmatched = Vec::new();
    let mut frob_hit = vec![false; frob.len()];
    for (i, c) in frob.iter().enumerate() {
        let ok = frob_to_groupoid(c).ok().and_then(|g| {
            let j = *gpd_index.get(&groupoid_key(&g))?;
            let back = groupoid_to_frob(&gpds[j]).ok()?;
            (back.mult_rel() == c.mult_rel()).then_some(j)
        });
        match ok {
            Some(_) => frob_hit[i] = true,
            None => unmatched.push(format!("Frobenius {}", describe_table(c))),
        }
    }
    for g in &gpds {
        let ok = groupoid_to_frob(g).ok().and_then(|c| {
            let i = *frob_index.get(&table_key(&c))?;
            let back = frob_to_groupoid(&frob[i]).ok()?;
            (groupoid_key(&back) == groupoid_key(g)).then_some(i)
        });
        if ok.is_none() {
            unmatched.push(format!("groupoid {}", describe_sgpd(g.base())));
        }
    }
    Ok(BijectionReport {
        n,
        frobenius: frob.len(),
        groupoids: gpds.len(),
        unmatched,
    })
}

/// Conversions between the LCR semigroupoid and H* censuses of one size.
#[derive(Debug, Clone)]
pub struct LcrHstarReport {
    pub n: usize,
    pub semigroupoids: usize,
    pub hstar: usize,
    /// LCR semigroupoids whose H* image fails a check.
    pub to_hstar_failures: Vec<String>,
    /// H* candidates whose semigroupoid fails a check.
    pub to_sgpd_failures: Vec<String>,
    /// Failed or ill-defined round trips.
    pub roundtrip_failures: Vec<String>,
    /// H* candidates that are not relative Frobenius algebras. Recorded,
    /// not judged.
    pub hstar_not_frobenius: Vec<String>,
}

impl LcrHstarReport {
    pub fn passed(&self) -> bool {
        self.to_hstar_failures.is_empty() && self.to_sgpd_failures.is_empty() && self.roundtrip_failures.is_empty()
    }
}

impl fmt::Display for LcrHstarReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}: {} LCR semigroupoids, {} H*-algebras: {}",
            self.n,
            self.semigroupoids,
            self.hstar,
            if self.passed() {
                "all conversions pass"
            } else {
                "MISMATCH"
            }
        )?;
        for (label, list) in [
            ("semigroupoid -> H* failed", &self.to_hstar_failures),
            ("H* -> semigroupoid failed", &self.to_sgpd_failures),
            ("round trip failed", &self.roundtrip_failures),
        ] {
            for item in list {
                writeln!(f, "  {label}: {item}")?;
            }
        }
        write!(
            f,
            "  H* but not Frobenius: {}",
            if self.hstar_not_frobenius.is_empty() {
                "none".to_owned()
            } else {
                self.hstar_not_frobenius.join(", ")
            }
        )
    }
}

fn lcr_passes(g: &Semigroupoid) -> bool {
    all_pass(&check_semigroupoid(g)) && is_regular(g).passed() && check_local_cancellativity(g).passed()
}

/// Every LCR semigroupoid converts to a passing H* candidate, every H*
/// candidate converts to a passing LCR semigroupoid, and the semigroupoid
/// round trips are well defined.
pub fn cross_check_theorems23(n: usize) -> Result<LcrHstarReport, CensusError> {
    cross_check_theorems23_with(n, None)
}

pub fn cross_check_theorems23_with(n: usize, cap: Option<usize>) -> Result<LcrHstarReport, CensusError> {
    let sgpds = enumerate_lcr_semigroupoids_with(n, cap)?.structures;
    let hstars = enumerate_hstar_with(n, cap)?.structures;

    let per_sgpd: Vec<(Option<String>, Option<String>)> = sgpds
        .par_iter()
        .map(|g| {
            let d = describe_sgpd(g);
            let to_hstar = match sgpd_to_hstar(g) {
                Ok(_) => None,
                Err(e) => Some(format!("{d}: {e}")),
            };
            let roundtrip = match roundtrip_sgpd(g) {
                Ok(r) if r.passed() => None,
                Ok(r) => Some(format!("{d}: {r}")),
                Err(e) => Some(format!("{d}: {e}")),
            };
            (to_hstar, roundtrip)
        })
        .collect();
    let per_hstar: Vec<(Option<String>, Option<String>)> = hstars
        .par_iter()
        .map(|c: &HStarCandidate| {
            let d = describe_table(c.base());
            let to_sgpd = match hstar_to_sgpd(c) {
                Ok(g) if lcr_passes(&g) => None,
                Ok(_) => Some(format!("{d}: output fails a semigroupoid check")),
                Err(e) => Some(format!("{d}: {e}")),
            };
            let not_frob = (!all_pass(&check_frobenius(c.base()))).then_some(d);
            (to_sgpd, not_frob)
        })
        .collect();

    let (to_hstar_failures, roundtrip_failures) = split(per_sgpd);
    let (to_sgpd_failures, hstar_not_frobenius) = split(per_hstar);
    Ok(LcrHstarReport {
        n,
        semigroupoids: sgpds.len(),
        hstar: hstars.len(),
        to_hstar_failures,
        to_sgpd_failures,
        roundtrip_failures,
        hstar_not_frobenius,
    })
}

fn split(v: Vec<(Option<String>, Option<String>)>) -> (Vec<String>, Vec<String>) {
    let (a, b): (Vec<_>, Vec<_>) = v.into_iter().unzip();
    (a.into_iter().flatten().collect(), b.into_iter().flatten().collect())
}
