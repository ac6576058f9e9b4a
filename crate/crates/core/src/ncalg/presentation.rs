//! Presented *-algebras with quadratic rewrite rules and a memoized
//! normal-form engine.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use smallvec::SmallVec;

use super::AlgebraError;
use crate::qcoeff::Laurent;

/// A word in the generators, as generator indices. The empty word is the unit.
pub type Word = SmallVec<[u8; 16]>;

/// A linear combination of words with Laurent-polynomial coefficients.
pub type LinComb = Vec<(Word, Laurent)>;

/// Default rewrite-step budget for a single reduction.
pub const DEFAULT_STEP_BUDGET: usize = 50_000_000;

/// A generator: a base symbol plus a star flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub base: String,
    pub starred: bool,
    /// Index of the starred partner.
    pub star: u8,
    /// Weight used by the word order (see [`Presentation::cmp_words`]).
    pub weight: u32,
}

impl Generator {
    pub fn name(&self) -> String {
        if self.starred {
            format!("{}*", self.base)
        } else {
            self.base.clone()
        }
    }
}

/// Generators in increasing order and rewrite rules `ab -> rhs` on two-letter
/// left-hand sides. Words avoiding every left-hand side are the normal forms.
pub struct Presentation {
    name: String,
    gens: Vec<Generator>,
    rules: Vec<Option<LinComb>>,
    append_cache: DashMap<(Word, u8), Arc<LinComb>>,
    product_cache: DashMap<(Word, Word), Arc<LinComb>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.gens.iter().map(|g| g.name()).collect::<Vec<_>>())
            .field("rules", &self.rule_count())
            .finish()
    }
}

impl Presentation {
    /// Builds a presentation. Each rule is given as `(a, b, rhs)`. Its starred
    /// image `(b*, a*) -> star(rhs)` is added as a rule when it decreases the
    /// order (and must then agree with any explicit rule on that left-hand
    /// side); otherwise it is verified to follow from the rules.
    pub fn new(
        name: &str,
        gens: Vec<Generator>,
        rules: Vec<(u8, u8, LinComb)>,
    ) -> Result<Self, AlgebraError> {
        let n = gens.len();
        for (i, g) in gens.iter().enumerate() {
            let partner = &gens[g.star as usize];
            if partner.star as usize != i || partner.base != g.base {
                return Err(AlgebraError::Presentation(format!("star map not involutive at {}", g.name())));
            }
        }
        let mut pres = Presentation {
            name: name.to_string(),
            gens,
            rules: vec![None; n * n],
            append_cache: DashMap::new(),
            product_cache: DashMap::new(),
        };
        let mut images = Vec::new();
        for (a, b, rhs) in rules {
            let rhs = canonical(rhs);
            let (sa, sb) = (pres.gens[b as usize].star, pres.gens[a as usize].star);
            let srhs = canonical(rhs.iter().map(|(w, c)| (pres.star_word(w), c.clone())).collect());
            pres.insert_rule(a, b, rhs)?;
            images.push((sa, sb, srhs));
        }
        // Starred images that decrease the order become rules; the others
        // must already be consequences of the rules.
        let mut consequences = Vec::new();
        for (a, b, rhs) in images {
            let lhs: Word = SmallVec::from_slice(&[a, b]);
            if rhs.iter().all(|(w, _)| pres.cmp_words(w, &lhs) == Ordering::Less) {
                pres.insert_rule(a, b, rhs)?;
            } else {
                consequences.push((lhs, rhs));
            }
        }
        for (lhs, rhs) in consequences {
            let mut diff = pres.reduce_rightmost(&lhs, DEFAULT_STEP_BUDGET)?;
            for (w, c) in &rhs {
                for (u, l) in pres.reduce_rightmost(w, DEFAULT_STEP_BUDGET)? {
                    diff.push((u, l.mul(c).neg()));
                }
            }
            if !canonical(diff).is_empty() {
                return Err(AlgebraError::Presentation(format!(
                    "starred relation at {} is not a consequence of the rules",
                    pres.word_name(&lhs)
                )));
            }
        }
        Ok(pres)
    }

    fn insert_rule(&mut self, x: u8, y: u8, r: LinComb) -> Result<(), AlgebraError> {
        let lhs: Word = SmallVec::from_slice(&[x, y]);
        for (w, _) in &r {
            if self.cmp_words(w, &lhs) != Ordering::Less {
                return Err(AlgebraError::Presentation(format!(
                    "rule {} -> ... is not decreasing at {}",
                    self.word_name(&lhs),
                    self.word_name(w)
                )));
            }
        }
        let n = self.gens.len();
        let slot = &mut self.rules[x as usize * n + y as usize];
        match slot {
            Some(existing) if *existing != r => {
                Err(AlgebraError::Presentation(format!("conflicting rules for {}", self.word_name(&lhs))))
            }
            _ => {
                *slot = Some(r);
                Ok(())
            }
        }
    }

    /// A presentation with no relations.
    pub fn free(name: &str, gens: Vec<Generator>) -> Result<Self, AlgebraError> {
        Self::new(name, gens, Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<u8> {
        self.gens.iter().position(|g| g.name() == name).map(|i| i as u8)
    }

    pub fn star_of(&self, g: u8) -> u8 {
        self.gens[g as usize].star
    }

    /// Reverses the word and stars every letter.
    pub fn star_word(&self, w: &[u8]) -> Word {
        w.iter().rev().map(|g| self.star_of(*g)).collect()
    }

    pub fn word_name(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|g| self.gens[*g as usize].name()).collect::<Vec<_>>().join(" ")
    }

    pub fn rule(&self, a: u8, b: u8) -> Option<&LinComb> {
        self.rules[a as usize * self.gens.len() + b as usize].as_ref()
    }

    /// All rules as `(a, b, rhs)`.
    pub fn rules(&self) -> impl Iterator<Item = (u8, u8, &LinComb)> {
        let n = self.gens.len();
        self.rules
            .iter()
            .enumerate()
            .filter_map(move |(i, r)| r.as_ref().map(|r| ((i / n) as u8, (i % n) as u8, r)))
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().filter(|r| r.is_some()).count()
    }

    fn weight(&self, w: &[u8]) -> u32 {
        w.iter().map(|g| self.gens[*g as usize].weight).sum()
    }

    /// Word order: weighted degree, then length, then lexicographic in the
    /// generator order.
    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| self.rule(p[0], p[1]).is_none())
    }

    /// Normal form of `w * g` for a normal word `w`.
    pub(crate) fn append(&self, w: &[u8], g: u8, budget: &mut usize) -> Result<Arc<LinComb>, AlgebraError> {
        let last = match w.last() {
            None => return Ok(Arc::new(vec![(SmallVec::from_slice(&[g]), Laurent::one())])),
            Some(l) => *l,
        };
        let rule = match self.rule(last, g) {
            None => {
                let mut v: Word = SmallVec::from_slice(w);
                v.push(g);
                return Ok(Arc::new(vec![(v, Laurent::one())]));
            }
            Some(r) => r,
        };
        let key: (Word, u8) = (SmallVec::from_slice(w), g);
        if let Some(hit) = self.append_cache.get(&key).map(|r| r.clone()) {
            return Ok(hit);
        }
        if *budget == 0 {
            return Err(AlgebraError::StepBudget(self.word_name(w)));
        }
        *budget -= 1;
        let prefix = &w[..w.len() - 1];
        let mut acc: HashMap<Word, Laurent> = HashMap::new();
        for (v, c) in rule {
            let part = self.mul_normal_word(prefix, v, budget)?;
            for (u, l) in part.iter() {
                acc.entry(u.clone()).or_default().add_assign(&l.mul(c));
            }
        }
        let result = Arc::new(canonical(acc.into_iter().collect()));
        self.append_cache.insert(key, result.clone());
        Ok(result)
    }

    /// Normal form of `a * b` where `a` is normal and `b` is any word.
    fn mul_normal_word(&self, a: &[u8], b: &[u8], budget: &mut usize) -> Result<Arc<LinComb>, AlgebraError> {
        if b.is_empty() {
            return Ok(Arc::new(vec![(SmallVec::from_slice(a), Laurent::one())]));
        }
        if b.len() == 1 {
            return self.append(a, b[0], budget);
        }
        let mut cur: HashMap<Word, Laurent> = HashMap::new();
        cur.insert(SmallVec::from_slice(a), Laurent::one());
        for g in b {
            let mut next: HashMap<Word, Laurent> = HashMap::new();
            for (w, c) in cur {
                for (u, l) in self.append(&w, *g, budget)?.iter() {
                    next.entry(u.clone()).or_default().add_assign(&l.mul(&c));
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        Ok(Arc::new(canonical(cur.into_iter().collect())))
    }

    /// Normal form of the product of two normal words (memoized).
    pub fn mul_words(&self, a: &[u8], b: &[u8]) -> Arc<LinComb> {
        if b.is_empty() || a.is_empty() || self.rule(a[a.len() - 1], b[0]).is_none() {
            let mut w: Word = SmallVec::from_slice(a);
            w.extend_from_slice(b);
            return Arc::new(vec![(w, Laurent::one())]);
        }
        let key: (Word, Word) = (SmallVec::from_slice(a), SmallVec::from_slice(b));
        if let Some(hit) = self.product_cache.get(&key).map(|r| r.clone()) {
            return hit;
        }
        let mut budget = DEFAULT_STEP_BUDGET;
        let r = self
            .mul_normal_word(a, b, &mut budget)
            .unwrap_or_else(|e| panic!("normal form did not terminate: {}", e));
        self.product_cache.insert(key, r.clone());
        r
    }

    /// Normal form of an arbitrary word (memoized).
    pub fn reduce(&self, w: &[u8]) -> Arc<LinComb> {
        if self.is_normal(w) {
            return Arc::new(vec![(SmallVec::from_slice(w), Laurent::one())]);
        }
        let key: (Word, Word) = (Word::new(), SmallVec::from_slice(w));
        if let Some(hit) = self.product_cache.get(&key).map(|r| r.clone()) {
            return hit;
        }
        let mut budget = DEFAULT_STEP_BUDGET;
        let r = self
            .mul_normal_word(&[], w, &mut budget)
            .unwrap_or_else(|e| panic!("normal form did not terminate: {}", e));
        self.product_cache.insert(key, r.clone());
        r
    }

    /// Normal form of an arbitrary word with an explicit step budget.
    pub fn reduce_word(&self, w: &[u8], budget: usize) -> Result<LinComb, AlgebraError> {
        let mut budget = budget;
        Ok(self.mul_normal_word(&[], w, &mut budget)?.as_ref().clone())
    }

    /// Independent reducer: rewrites the rightmost reducible pair until no rule
    /// applies, without touching the caches. Used to cross-check the engine.
    pub fn reduce_rightmost(&self, w: &[u8], budget: usize) -> Result<LinComb, AlgebraError> {
        let mut budget = budget;
        let mut pending: HashMap<Word, Laurent> = HashMap::new();
        pending.insert(SmallVec::from_slice(w), Laurent::one());
        let mut done: HashMap<Word, Laurent> = HashMap::new();
        while let Some(word) = pending.keys().next().cloned() {
            let c = pending.remove(&word).unwrap();
            if c.is_zero() {
                continue;
            }
            let pos = (0..word.len().saturating_sub(1)).rev().find(|&i| self.rule(word[i], word[i + 1]).is_some());
            match pos {
                None => done.entry(word).or_default().add_assign(&c),
                Some(i) => {
                    if budget == 0 {
                        return Err(AlgebraError::StepBudget(self.word_name(&word)));
                    }
                    budget -= 1;
                    for (v, l) in self.rule(word[i], word[i + 1]).unwrap() {
                        let mut nw: Word = SmallVec::from_slice(&word[..i]);
                        nw.extend_from_slice(v);
                        nw.extend_from_slice(&word[i + 2..]);
                        pending.entry(nw).or_default().add_assign(&l.mul(&c));
                    }
                }
            }
        }
        Ok(canonical(done.into_iter().collect()))
    }

    /// Number of memoized reductions (diagnostics).
    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.append_cache.len(), self.product_cache.len())
    }
}

/// Drops zero coefficients, merges duplicates and sorts by word.
pub(crate) fn canonical(terms: LinComb) -> LinComb {
    let mut map: HashMap<Word, Laurent> = HashMap::new();
    for (w, c) in terms {
        map.entry(w).or_default().add_assign(&c);
    }
    let mut v: LinComb = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}
