//! Local confluence check by critical-pair resolution, plus a cross-check of
//! the memoized engine against an independent reducer.

use std::collections::HashMap;

use serde::Serialize;
use smallvec::SmallVec;

use super::presentation::{canonical, LinComb, Presentation, Word, DEFAULT_STEP_BUDGET};
use crate::qcoeff::Laurent;

#[derive(Clone, Debug, Serialize)]
pub struct OverlapFailure {
    pub word: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub degree_bound: usize,
    pub rules: usize,
    pub critical_pairs: usize,
    pub joinable: usize,
    pub failures: Vec<OverlapFailure>,
    pub words_cross_checked: usize,
    pub engine_mismatches: Vec<String>,
    pub star_closed: bool,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty() && self.engine_mismatches.is_empty() && self.star_closed
    }
}

fn render(pres: &Presentation, lc: &LinComb) -> String {
    if lc.is_empty() {
        return "0".into();
    }
    lc.iter().map(|(w, c)| format!("({}) {}", c, pres.word_name(w))).collect::<Vec<_>>().join(" + ")
}

fn reduce_comb(pres: &Presentation, lc: &LinComb) -> Result<LinComb, String> {
    let mut acc: HashMap<Word, Laurent> = HashMap::new();
    for (w, c) in lc {
        for (u, l) in pres.reduce_rightmost(w, DEFAULT_STEP_BUDGET).map_err(|e| e.to_string())? {
            acc.entry(u).or_default().add_assign(&l.mul(c));
        }
    }
    Ok(canonical(acc.into_iter().collect()))
}

/// Every starred rule `(b* a*) - star(rhs)` reduces to zero.
fn star_closed(pres: &Presentation) -> bool {
    pres.rules().all(|(a, b, rhs)| {
        let lhs: LinComb = vec![(SmallVec::from_slice(&[pres.star_of(b), pres.star_of(a)]), Laurent::one())];
        let starred: LinComb = rhs.iter().map(|(w, c)| (pres.star_word(w), c.clone())).collect();
        matches!((reduce_comb(pres, &lhs), reduce_comb(pres, &starred)), (Ok(l), Ok(r)) if l == r)
    })
}

/// Resolves every overlap `abc` of two left-hand sides `ab`, `bc` (when
/// `degree_bound >= 3`) and compares the memoized engine with the rightmost
/// reducer on every word of length at most `degree_bound`.
pub fn check_local_confluence(pres: &Presentation, degree_bound: usize) -> ConfluenceReport {
    let n = pres.num_generators() as u8;
    let mut critical_pairs = 0;
    let mut joinable = 0;
    let mut failures = Vec::new();
    if degree_bound >= 3 {
        for (a, b, rhs_ab) in pres.rules() {
            for c in 0..n {
                let Some(rhs_bc) = pres.rule(b, c) else { continue };
                critical_pairs += 1;
                let word: Word = SmallVec::from_slice(&[a, b, c]);
                let left: LinComb = rhs_ab
                    .iter()
                    .map(|(w, l)| {
                        let mut v = w.clone();
                        v.push(c);
                        (v, l.clone())
                    })
                    .collect();
                let right: LinComb = rhs_bc
                    .iter()
                    .map(|(w, l)| {
                        let mut v: Word = SmallVec::from_slice(&[a]);
                        v.extend_from_slice(w);
                        (v, l.clone())
                    })
                    .collect();
                match (reduce_comb(pres, &left), reduce_comb(pres, &right)) {
                    (Ok(l), Ok(r)) if l == r => joinable += 1,
                    (l, r) => failures.push(OverlapFailure {
                        word: pres.word_name(&word),
                        left: l.map(|x| render(pres, &x)).unwrap_or_else(|e| e),
                        right: r.map(|x| render(pres, &x)).unwrap_or_else(|e| e),
                    }),
                }
            }
        }
    }

    let mut engine_mismatches = Vec::new();
    let mut words_cross_checked = 0;
    let mut layer: Vec<Word> = vec![Word::new()];
    for _ in 0..degree_bound {
        let mut next = Vec::with_capacity(layer.len() * n as usize);
        for w in &layer {
            for g in 0..n {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        for w in &next {
            words_cross_checked += 1;
            let engine = pres.reduce(w);
            match pres.reduce_rightmost(w, DEFAULT_STEP_BUDGET) {
                Ok(r) if r == *engine => {}
                Ok(r) => engine_mismatches.push(format!(
                    "{}: engine {} vs rightmost {}",
                    pres.word_name(w),
                    render(pres, &engine),
                    render(pres, &r)
                )),
                Err(e) => engine_mismatches.push(e.to_string()),
            }
        }
        layer = next;
    }

    ConfluenceReport {
        presentation: pres.name().to_string(),
        degree_bound,
        rules: pres.rule_count(),
        critical_pairs,
        joinable,
        failures,
        words_cross_checked,
        engine_mismatches,
        star_closed: star_closed(pres),
    }
}
