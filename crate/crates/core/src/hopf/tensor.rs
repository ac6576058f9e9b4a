//! Tensor products of two presented algebras.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::ncalg::{NCPoly, Presentation, Word};
use crate::qcoeff::{QScalar, ScalarAcc};

/// An element of `A ⊗ B` written in the basis of pairs of normal words.
#[derive(Clone)]
pub struct TensorPoly {
    left: Arc<Presentation>,
    right: Arc<Presentation>,
    terms: BTreeMap<(Word, Word), QScalar>,
}

impl TensorPoly {
    pub fn zero(left: &Arc<Presentation>, right: &Arc<Presentation>) -> Self {
        TensorPoly { left: left.clone(), right: right.clone(), terms: BTreeMap::new() }
    }

    pub fn one(left: &Arc<Presentation>, right: &Arc<Presentation>) -> Self {
        let mut t = Self::zero(left, right);
        t.terms.insert((Word::new(), Word::new()), QScalar::one());
        t
    }

    /// `a ⊗ b`.
    pub fn pure(a: &NCPoly, b: &NCPoly) -> Self {
        let mut acc: HashMap<(Word, Word), ScalarAcc> = HashMap::new();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                acc.entry((wa.clone(), wb.clone())).or_default().add(&ca.mul(cb));
            }
        }
        Self::from_acc(a.presentation(), b.presentation(), acc)
    }

    fn from_acc(left: &Arc<Presentation>, right: &Arc<Presentation>, acc: HashMap<(Word, Word), ScalarAcc>) -> Self {
        let terms = acc
            .into_iter()
            .filter_map(|(k, a)| {
                let c = a.finish();
                (!c.is_zero()).then_some((k, c))
            })
            .collect();
        TensorPoly { left: left.clone(), right: right.clone(), terms }
    }

    pub fn left(&self) -> &Arc<Presentation> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Presentation> {
        &self.right
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &QScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Right-leg coefficient of a fixed left word, as an element of `B`.
    pub fn right_component(&self, left_word: &[u8]) -> NCPoly {
        NCPoly::normal_form(
            &self.right,
            self.terms.iter().filter(|((l, _), _)| l.as_slice() == left_word).map(|((_, r), c)| (r.clone(), c.clone())),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::sum(&self.left, &self.right, [self, other])
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&QScalar::from_int(-1))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, d)| (k.clone(), d.mul(c))).collect()
        };
        TensorPoly { left: self.left.clone(), right: self.right.clone(), terms }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a TensorPoly>>(
        left: &Arc<Presentation>,
        right: &Arc<Presentation>,
        items: I,
    ) -> Self {
        let mut acc: HashMap<(Word, Word), ScalarAcc> = HashMap::new();
        for t in items {
            for (k, c) in &t.terms {
                acc.entry(k.clone()).or_default().add(c);
            }
        }
        Self::from_acc(left, right, acc)
    }

    /// `sum_i a_i b_i` in the tensor-product algebra.
    pub fn dot<'a, I>(left: &Arc<Presentation>, right: &Arc<Presentation>, pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a TensorPoly, &'a TensorPoly)>,
    {
        let mut acc: HashMap<(Word, Word), ScalarAcc> = HashMap::new();
        for (a, b) in pairs {
            for ((al, ar), ca) in &a.terms {
                for ((bl, br), cb) in &b.terms {
                    let c = ca.mul(cb);
                    let l = left.mul_words(al, bl);
                    let r = right.mul_words(ar, br);
                    for (wl, ll) in l.iter() {
                        for (wr, lr) in r.iter() {
                            acc.entry((wl.clone(), wr.clone())).or_default().add_scaled(&c, &ll.mul(lr));
                        }
                    }
                }
            }
        }
        Self::from_acc(left, right, acc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::dot(&self.left, &self.right, [(self, other)])
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((l, r), c)| {
                format!("({}) {} ⊗ {}", c.render(), self.left.word_name(l), self.right.word_name(r))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl PartialEq for TensorPoly {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.left, &other.left) && Arc::ptr_eq(&self.right, &other.right) && self.terms == other.terms
    }
}

impl Eq for TensorPoly {}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({})", self.render())
    }
}

/// Threefold tensors, used only to compare the two sides of coassociativity.
pub type Tensor3 = BTreeMap<(Word, Word, Word), QScalar>;

fn add_into(out: &mut Tensor3, key: (Word, Word, Word), c: QScalar) {
    let slot = out.entry(key.clone()).or_default();
    slot.add_assign(&c);
    if slot.is_zero() {
        out.remove(&key);
    }
}

/// `(f ⊗ id)(t)` for a map `f` on the left leg.
pub fn map_left<F: Fn(&NCPoly) -> TensorPoly>(t: &TensorPoly, f: F) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((l, r), c) in t.terms() {
        let img = f(&NCPoly::term(t.left(), l, QScalar::one()));
        for ((a, b), d) in img.terms() {
            add_into(&mut out, (a.clone(), b.clone(), r.clone()), c.mul(d));
        }
    }
    out
}

/// `(id ⊗ f)(t)` for a map `f` on the right leg.
pub fn map_right<F: Fn(&NCPoly) -> TensorPoly>(t: &TensorPoly, f: F) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((l, r), c) in t.terms() {
        let img = f(&NCPoly::term(t.right(), r, QScalar::one()));
        for ((a, b), d) in img.terms() {
            add_into(&mut out, (l.clone(), a.clone(), b.clone()), c.mul(d));
        }
    }
    out
}
