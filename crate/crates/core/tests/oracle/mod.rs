//! Brute-force reference computations.
//!
//! These read only the raw tables of a crossed module (endpoints,
//! composition, fibre addition, action, boundary) and enumerate every
//! candidate function outright. Nothing here calls the library's
//! enumerators, products or inverses.

#![allow(dead_code)]

use itertools::Itertools;
use xmod::{CrossedModule, FiniteGroup, FiniteGroupoid};

/// Plain tables copied out of a crossed module.
pub struct Raw {
    pub objects: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// `comp[a][b]` when `tgt a = src b`.
    pub comp: Vec<Vec<Option<usize>>>,
    pub ident: Vec<usize>,
    pub base: Vec<usize>,
    pub add: Vec<Vec<Option<usize>>>,
    pub zero: Vec<usize>,
    pub act: Vec<Vec<Option<usize>>>,
    pub delta: Vec<usize>,
}

impl Raw {
    pub fn new(x: &CrossedModule) -> Raw {
        let (g, c) = (x.g(), x.c());
        let m = g.num_arrows();
        let n = c.len();
        let src: Vec<usize> = (0..m).map(|a| g.src(a)).collect();
        let tgt: Vec<usize> = (0..m).map(|a| g.tgt(a)).collect();
        let comp = (0..m).map(|a| (0..m).map(|b| g.try_comp(a, b)).collect()).collect();
        let ident = (0..g.num_objects())
            .map(|y| (0..m).find(|&a| src[a] == y && tgt[a] == y && (0..m).all(|b| src[b] != y || g.try_comp(a, b) == Some(b))).unwrap())
            .collect();
        let base: Vec<usize> = (0..n).map(|e| c.base(e)).collect();
        let add = (0..n)
            .map(|p| (0..n).map(|q| (base[p] == base[q]).then(|| c.add(p, q))).collect())
            .collect();
        let zero = (0..g.num_objects())
            .map(|y| (0..n).find(|&e| base[e] == y && (0..n).all(|f| base[f] != y || c.add(e, f) == f)).unwrap())
            .collect();
        let act = (0..n)
            .map(|e| (0..m).map(|a| (src[a] == base[e]).then(|| x.act(e, a))).collect())
            .collect();
        let delta = (0..n).map(|e| x.delta(e)).collect();
        Raw { objects: g.num_objects(), src, tgt, comp, ident, base, add, zero, act, delta }
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    pub fn c(&self, a: usize, b: usize) -> usize {
        self.comp[a][b].expect("composable")
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.arrows()).find(|&b| self.comp[a][b] == Some(self.ident[self.src[a]])).unwrap()
    }

    pub fn plus(&self, p: usize, q: usize) -> usize {
        self.add[p][q].expect("same fibre")
    }

    pub fn minus(&self, p: usize) -> usize {
        let z = self.zero[self.base[p]];
        (0..self.base.len()).find(|&q| self.add[p][q] == Some(z)).unwrap()
    }

    pub fn pow(&self, p: usize, a: usize) -> usize {
        self.act[p][a].expect("action defined")
    }
}

/// A free derivation as a pair of plain vectors.
pub type Fd = (Vec<usize>, Vec<usize>);

/// Every `(s₀, s₁)` with `s₀(y)` ending at `y` and `s₁(a) ∈ C(βa)` satisfying
/// `s₁(a + b) = s₁(a)^b + s₁(b)`.
pub fn free_derivations(r: &Raw) -> Vec<Fd> {
    let m = r.arrows();
    let into = |y: usize| (0..m).filter(move |&a| r.tgt[a] == y).collect::<Vec<_>>();
    let s0s: Vec<Vec<usize>> = (0..r.objects).map(into).multi_cartesian_product().collect();
    let fibre = |y: usize| (0..r.base.len()).filter(move |&e| r.base[e] == y).collect::<Vec<_>>();
    let s1s: Vec<Vec<usize>> = (0..m)
        .map(|a| fibre(r.tgt[a]))
        .multi_cartesian_product()
        .filter(|s1| {
            (0..m).all(|a| {
                (0..m).all(|b| match r.comp[a][b] {
                    Some(ab) => s1[ab] == r.plus(r.pow(s1[a], b), s1[b]),
                    None => true,
                })
            })
        })
        .collect();
    s0s.iter().cartesian_product(&s1s).map(|(a, b)| (a.clone(), b.clone())).collect()
}

/// Arrow part of the endomorphism induced by `s`.
pub fn induced_arrows(r: &Raw, s: &Fd) -> Vec<usize> {
    (0..r.arrows())
        .map(|a| {
            let y = s.0[r.src[a]];
            let mid = r.c(r.c(y, a), r.delta[s.1[a]]);
            r.c(mid, r.inv(s.0[r.tgt[a]]))
        })
        .collect()
}

pub fn identity(r: &Raw) -> Fd {
    (r.ident.clone(), (0..r.arrows()).map(|a| r.zero[r.tgt[a]]).collect())
}

/// `(s∗t)₀(z) = s₀(g₀z) + t₀z`, `(s∗t)₁(a) = t₁a + s₁(g₁a)^{t₀βa}`, with `g`
/// induced by `t`.
pub fn product(r: &Raw, s: &Fd, t: &Fd) -> Fd {
    let g1 = induced_arrows(r, t);
    let s0 = (0..r.objects).map(|z| r.c(s.0[r.src[t.0[z]]], t.0[z])).collect();
    let s1 = (0..r.arrows())
        .map(|a| r.plus(t.1[a], r.pow(s.1[g1[a]], t.0[r.tgt[a]])))
        .collect();
    (s0, s1)
}

/// Two-sided inverse found by search.
pub fn searched_inverse(r: &Raw, all: &[Fd], s: &Fd) -> Option<Fd> {
    let id = identity(r);
    all.iter().find(|t| product(r, s, t) == id && product(r, t, s) == id).cloned()
}

pub fn fder_star_order(x: &CrossedModule) -> usize {
    let r = Raw::new(x);
    let all = free_derivations(&r);
    all.iter().filter(|s| searched_inverse(&r, &all, s).is_some()).count()
}

/// Sections `x ↦ s₂(x) ∈ C(x)`.
pub fn m2_order(x: &CrossedModule) -> usize {
    let r = Raw::new(x);
    (0..r.objects).map(|y| r.base.iter().filter(|&&b| b == y).count()).product()
}

/// Sections of the target map whose sources form a permutation.
pub fn msec_order(g: &FiniteGroupoid) -> usize {
    let into = |y: usize| g.arrows().filter(move |&a| g.tgt(a) == y).collect::<Vec<_>>();
    g.objects()
        .map(into)
        .multi_cartesian_product()
        .filter(|s| s.iter().map(|&a| g.src(a)).all_unique())
        .count()
}

/// Arrow permutations preserving endpoints (via some object permutation)
/// and composition.
pub fn groupoid_automorphism_count(g: &FiniteGroupoid) -> usize {
    let m = g.num_arrows();
    (0..m)
        .permutations(m)
        .filter(|p| {
            let obj: Vec<Option<usize>> = g
                .objects()
                .map(|y| g.arrows().find(|&a| g.src(a) == y).map(|a| g.src(p[a])))
                .collect();
            g.arrows().all(|a| {
                obj[g.src(a)] == Some(g.src(p[a])) && obj[g.tgt(a)] == Some(g.tgt(p[a]))
            }) && g.arrows().all(|a| {
                g.arrows().all(|b| match g.try_comp(a, b) {
                    Some(ab) => g.try_comp(p[a], p[b]) == Some(p[ab]),
                    None => true,
                })
            })
        })
        .count()
}

/// Bijections preserving the multiplication table.
pub fn group_automorphism_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b]))))
        .count()
}
