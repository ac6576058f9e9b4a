//! Coproduct, counit, antipode and the coaction on the 7-sphere.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use super::tensor::TensorPoly;
use crate::ncalg::{presentation_s7q, presentation_suq2, s7, su2, NCPoly, Presentation, Word};
use crate::qcoeff::{QScalar, ScalarAcc};

/// An algebra homomorphism `A -> B ⊗ C` fixed by its values on generators.
/// Images of normal words are memoized.
pub struct TensorHom {
    source: Arc<Presentation>,
    left: Arc<Presentation>,
    right: Arc<Presentation>,
    images: Vec<TensorPoly>,
    cache: DashMap<Word, Arc<TensorPoly>>,
}

impl TensorHom {
    pub fn new(source: &Arc<Presentation>, images: Vec<TensorPoly>) -> Self {
        assert_eq!(images.len(), source.num_generators());
        let (left, right) = (images[0].left().clone(), images[0].right().clone());
        TensorHom { source: source.clone(), left, right, images, cache: DashMap::new() }
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    fn word_image(&self, w: &[u8]) -> Arc<TensorPoly> {
        match w.len() {
            0 => return Arc::new(TensorPoly::one(&self.left, &self.right)),
            1 => return Arc::new(self.images[w[0] as usize].clone()),
            _ => {}
        }
        if let Some(hit) = self.cache.get(w).map(|r| r.clone()) {
            return hit;
        }
        let (head, last) = w.split_at(w.len() - 1);
        let img = Arc::new(self.word_image(head).mul(&self.images[last[0] as usize]));
        self.cache.insert(Word::from_slice(w), img.clone());
        img
    }

    pub fn apply(&self, p: &NCPoly) -> TensorPoly {
        assert!(Arc::ptr_eq(p.presentation(), &self.source), "map applied to the wrong algebra");
        let mut acc: HashMap<(Word, Word), ScalarAcc> = HashMap::new();
        for (w, c) in p.terms() {
            for (k, d) in self.word_image(w).terms() {
                acc.entry(k.clone()).or_default().add(&c.mul(d));
            }
        }
        let parts: Vec<TensorPoly> = acc
            .into_iter()
            .map(|((l, r), a)| TensorPoly::pure(&NCPoly::term(&self.left, &l, a.finish()), &NCPoly::term(&self.right, &r, QScalar::one())))
            .collect();
        TensorPoly::sum(&self.left, &self.right, parts.iter())
    }
}

fn t(a: &NCPoly, b: &NCPoly) -> TensorPoly {
    TensorPoly::pure(a, b)
}

fn coproduct_map() -> &'static TensorHom {
    static M: OnceLock<TensorHom> = OnceLock::new();
    M.get_or_init(|| {
        use su2::*;
        let h = presentation_suq2();
        let g = |i| NCPoly::generator(&h, i);
        let (a, a_s, c, c_s) = (g(ALPHA), g(ALPHA_S), g(GAMMA), g(GAMMA_S));
        let q = |e: i32| QScalar::q_pow(e);
        let mut images = vec![TensorPoly::zero(&h, &h); 4];
        images[ALPHA as usize] = t(&a, &a).sub(&t(&c_s, &c).scale(&q(1)));
        images[GAMMA as usize] = t(&c, &a).add(&t(&a_s, &c));
        images[ALPHA_S as usize] = t(&a_s, &a_s).sub(&t(&c, &c_s).scale(&q(1)));
        images[GAMMA_S as usize] = t(&c_s, &a_s).add(&t(&a, &c_s));
        TensorHom::new(&h, images)
    })
}

fn coaction_map() -> &'static TensorHom {
    static M: OnceLock<TensorHom> = OnceLock::new();
    M.get_or_init(|| {
        use s7::*;
        let (a7, h) = (presentation_s7q(), presentation_suq2());
        let x = |i| NCPoly::generator(&a7, i);
        let g = |i| NCPoly::generator(&h, i);
        let (al, al_s, ga, ga_s) = (g(su2::ALPHA), g(su2::ALPHA_S), g(su2::GAMMA), g(su2::GAMMA_S));
        let q = QScalar::q_pow(1);
        let mut images = vec![TensorPoly::zero(&a7, &h); 8];
        images[X1 as usize] = t(&x(X1), &al).add(&t(&x(X2), &ga));
        images[X2 as usize] = t(&x(X2), &al_s).sub(&t(&x(X1), &ga_s).scale(&q));
        images[X3 as usize] = t(&x(X3), &al).sub(&t(&x(X4), &ga));
        images[X4 as usize] = t(&x(X4), &al_s).add(&t(&x(X3), &ga_s).scale(&q));
        images[X1S as usize] = t(&x(X1S), &al_s).add(&t(&x(X2S), &ga_s));
        images[X2S as usize] = t(&x(X2S), &al).sub(&t(&x(X1S), &ga).scale(&q));
        images[X3S as usize] = t(&x(X3S), &al_s).sub(&t(&x(X4S), &ga_s));
        images[X4S as usize] = t(&x(X4S), &al).add(&t(&x(X3S), &ga).scale(&q));
        TensorHom::new(&a7, images)
    })
}

/// The coproduct of `SU_q(2)`, determined by `Δ(t) = t ⊗̇ t` for the
/// fundamental matrix `t = [[α, -qγ*], [γ, α*]]`.
pub fn coproduct(h: &NCPoly) -> TensorPoly {
    coproduct_map().apply(h)
}

/// The right coaction of `SU_q(2)` on the 7-sphere, determined by
/// `δ(u) = u ⊗̇ t` for the instanton matrix `u`.
pub fn coaction_s7(p: &NCPoly) -> TensorPoly {
    coaction_map().apply(p)
}

/// True iff `δ(p) = p ⊗ 1`.
pub fn is_coinvariant(p: &NCPoly) -> bool {
    coaction_s7(p) == TensorPoly::pure(p, &NCPoly::one(&presentation_suq2()))
}

fn counit_values(pres: &Arc<Presentation>) -> Vec<QScalar> {
    if Arc::ptr_eq(pres, &presentation_suq2()) {
        let mut v = vec![QScalar::zero(); 4];
        v[su2::ALPHA as usize] = QScalar::one();
        v[su2::ALPHA_S as usize] = QScalar::one();
        v
    } else if Arc::ptr_eq(pres, &presentation_s7q()) {
        let mut v = vec![QScalar::zero(); 8];
        v[s7::X4 as usize] = QScalar::one();
        v[s7::X4S as usize] = QScalar::one();
        v
    } else {
        panic!("no counit on {}", pres.name())
    }
}

/// The counit of `SU_q(2)`, or the character of the 7-sphere that sends
/// `x4, x4*` to 1 and the other generators to 0.
pub fn counit(p: &NCPoly) -> QScalar {
    let values = counit_values(p.presentation());
    let mut acc = ScalarAcc::new();
    for (w, c) in p.terms() {
        let mut v = c.clone();
        for g in w.iter() {
            v = v.mul(&values[*g as usize]);
            if v.is_zero() {
                break;
            }
        }
        acc.add(&v);
    }
    acc.finish()
}

/// The antipode of `SU_q(2)`: the antihomomorphism with `S(α) = α*`,
/// `S(γ) = -qγ`, `S(γ*) = -q^{-1}γ*`, `S(α*) = α`.
pub fn antipode(h: &NCPoly) -> NCPoly {
    use su2::*;
    let pres = presentation_suq2();
    assert!(Arc::ptr_eq(h.presentation(), &pres), "antipode is defined on SU_q(2)");
    let g = |i| NCPoly::generator(&pres, i);
    let mut images = vec![NCPoly::zero(&pres); 4];
    images[ALPHA as usize] = g(ALPHA_S);
    images[ALPHA_S as usize] = g(ALPHA);
    images[GAMMA as usize] = g(GAMMA).scale(&QScalar::monomial(-1, 1));
    images[GAMMA_S as usize] = g(GAMMA_S).scale(&QScalar::monomial(-1, -1));
    let parts: Vec<NCPoly> = h
        .terms()
        .map(|(w, c)| {
            let mut img = NCPoly::constant(&pres, c.clone());
            for l in w.iter() {
                img = images[*l as usize].mul(&img);
            }
            img
        })
        .collect();
    NCPoly::sum(&pres, parts.iter())
}

/// `(id ⊗ ε)`: contracts the right leg with the counit.
pub fn contract_right_counit(t: &TensorPoly) -> NCPoly {
    let parts: Vec<NCPoly> = t
        .terms()
        .map(|((l, r), c)| NCPoly::term(t.left(), l, c.mul(&counit(&NCPoly::term(t.right(), r, QScalar::one())))))
        .collect();
    NCPoly::sum(t.left(), parts.iter())
}
