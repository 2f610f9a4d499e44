//! Braided regular crossed modules and their translation to and from
//! 2-crossed modules.
//!
//! A braided crossed module is a crossed module `δ: A₂ → A₁` whose object
//! set `A₀` is a monoid acting on both sides of `A₁` and `A₂`, together
//! with a braiding `{a, b} ∈ A₂(βa·βb)`. It is regular when `A₀` is a group.

use std::collections::HashMap;

use crate::actor::{Actor, Section2};
use crate::crossed::{
    enumerate_xmod_automorphisms, validate_crossed_module, CrossedModule, GroupoidAction,
    XmodMorphism,
};
use crate::derivation::{enumerate_homotopies, induced_tables, FreeDerivation};
use crate::group::{ConcreteGroup, FiniteGroup};
use crate::groupoid::{FiniteGroupoid, GroupBundle};
use crate::report::ValidationReport;
use crate::two_crossed::{validate_2crossed, TwoCrossedIsomorphism, TwoCrossedModule};
use crate::{Error, Result, SearchLimit};

/// Objects of the underlying crossed module are the elements of `A₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedXmod {
    pub xmod: CrossedModule,
    /// `monoid[x][y] = xy`.
    pub monoid: Vec<Vec<usize>>,
    pub unit: usize,
    /// `left1[x][a] = x.a`.
    pub left1: Vec<Vec<usize>>,
    /// `right1[y][a] = a.y`.
    pub right1: Vec<Vec<usize>>,
    /// `left2[x][c] = x.c`.
    pub left2: Vec<Vec<usize>>,
    /// `right2[y][c] = c.y`.
    pub right2: Vec<Vec<usize>>,
    /// `braiding[a][b] = {a, b}`.
    pub braiding: Vec<Vec<usize>>,
}

impl BraidedXmod {
    pub fn a1(&self) -> &FiniteGroupoid {
        self.xmod.g()
    }

    pub fn a2(&self) -> &GroupBundle {
        self.xmod.c()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.monoid[x][y]
    }

    /// Two-sided inverse in `A₀`, if any.
    pub fn monoid_inverse(&self, x: usize) -> Option<usize> {
        (0..self.monoid.len()).find(|&y| self.mul(x, y) == self.unit && self.mul(y, x) == self.unit)
    }

    pub fn is_regular(&self) -> bool {
        (0..self.monoid.len()).all(|x| self.monoid_inverse(x).is_some())
    }

    /// The trivial structure on the trivial crossed module.
    pub fn trivial() -> Self {
        BraidedXmod {
            xmod: CrossedModule::trivial(),
            monoid: vec![vec![0]],
            unit: 0,
            left1: vec![vec![0]],
            right1: vec![vec![0]],
            left2: vec![vec![0]],
            right2: vec![vec![0]],
            braiding: vec![vec![0]],
        }
    }

    fn check_shape(&self) -> Result<()> {
        let n0 = self.monoid.len();
        let n1 = self.a1().num_arrows();
        let n2 = self.a2().len();
        let ok = |t: &Vec<Vec<usize>>, rows: usize, cols: usize, range: usize| {
            t.len() == rows && t.iter().all(|r| r.len() == cols && r.iter().all(|&v| v < range))
        };
        if self.xmod.num_objects() != n0
            || self.unit >= n0
            || !ok(&self.monoid, n0, n0, n0)
            || !ok(&self.left1, n0, n1, n1)
            || !ok(&self.right1, n0, n1, n1)
            || !ok(&self.left2, n0, n2, n2)
            || !ok(&self.right2, n0, n2, n2)
            || !ok(&self.braiding, n1, n1, n2)
        {
            return Err(Error::MalformedTable("braided structure tables have the wrong shape".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedReport {
    pub report: ValidationReport,
    pub regular: bool,
}

/// Checks the crossed module and every braided axiom over all tuples.
pub fn validate_braided(b: &BraidedXmod) -> Result<BraidedReport> {
    b.check_shape()?;
    let mut r = validate_crossed_module(&b.xmod)?.combined().scoped("crossed module");
    let (g, c) = (b.a1(), b.a2());
    let n0 = b.monoid.len();
    let objs = 0..n0;
    let an = |a: usize| g.arrow_name(a).to_string();
    let cn = |e: usize| c.name(e).to_string();
    let on = |x: usize| g.object_name(x).to_string();

    // monoid
    for x in objs.clone() {
        r.check(b.mul(b.unit, x) == x && b.mul(x, b.unit) == x, "monoid unit", || on(x));
        for y in objs.clone() {
            for z in objs.clone() {
                r.check(b.mul(b.mul(x, y), z) == b.mul(x, b.mul(y, z)), "monoid associativity", || {
                    format!("({}, {}, {})", on(x), on(y), on(z))
                });
            }
        }
    }
    if !r.is_valid() {
        return Ok(BraidedReport { report: r, regular: b.is_regular() });
    }

    // biactions
    for a in g.arrows() {
        r.check(b.left1[b.unit][a] == a && b.right1[b.unit][a] == a, "biaction unit", || an(a));
        for x in objs.clone() {
            let xa = b.left1[x][a];
            let ax = b.right1[x][a];
            r.check(
                g.src(xa) == b.mul(x, g.src(a)) && g.tgt(xa) == b.mul(x, g.tgt(a)),
                "biaction left endpoints",
                || format!("{}.{}", on(x), an(a)),
            );
            r.check(
                g.src(ax) == b.mul(g.src(a), x) && g.tgt(ax) == b.mul(g.tgt(a), x),
                "biaction right endpoints",
                || format!("{}.{}", an(a), on(x)),
            );
            for y in objs.clone() {
                r.check(b.left1[x][b.left1[y][a]] == b.left1[b.mul(x, y)][a], "biaction left action", || {
                    format!("{}.({}.{})", on(x), on(y), an(a))
                });
                r.check(b.right1[y][b.right1[x][a]] == b.right1[b.mul(x, y)][a], "biaction right action", || {
                    format!("({}.{}).{}", an(a), on(x), on(y))
                });
                r.check(b.left1[x][b.right1[y][a]] == b.right1[y][b.left1[x][a]], "biaction commute", || {
                    format!("{}.{}.{}", on(x), an(a), on(y))
                });
            }
        }
    }
    for e in c.elements() {
        r.check(b.left2[b.unit][e] == e && b.right2[b.unit][e] == e, "biaction unit", || cn(e));
        for x in objs.clone() {
            r.check(c.base(b.left2[x][e]) == b.mul(x, c.base(e)), "biaction left endpoints", || {
                format!("{}.{}", on(x), cn(e))
            });
            r.check(c.base(b.right2[x][e]) == b.mul(c.base(e), x), "biaction right endpoints", || {
                format!("{}.{}", cn(e), on(x))
            });
            for y in objs.clone() {
                r.check(b.left2[x][b.left2[y][e]] == b.left2[b.mul(x, y)][e], "biaction left action", || {
                    format!("{}.({}.{})", on(x), on(y), cn(e))
                });
                r.check(b.right2[y][b.right2[x][e]] == b.right2[b.mul(x, y)][e], "biaction right action", || {
                    format!("({}.{}).{}", cn(e), on(x), on(y))
                });
                r.check(b.left2[x][b.right2[y][e]] == b.right2[y][b.left2[x][e]], "biaction commute", || {
                    format!("{}.{}.{}", on(x), cn(e), on(y))
                });
            }
        }
    }
    if !r.is_valid() {
        return Ok(BraidedReport { report: r, regular: b.is_regular() });
    }
    for x in objs.clone() {
        for a in g.arrows() {
            for a2 in g.arrows().filter(|&a2| g.src(a2) == g.tgt(a)) {
                let s = g.comp(a, a2);
                r.check(
                    b.left1[x][s] == g.comp(b.left1[x][a], b.left1[x][a2]),
                    "biaction left preserves composition",
                    || format!("{}.({} + {})", on(x), an(a), an(a2)),
                );
                r.check(
                    b.right1[x][s] == g.comp(b.right1[x][a], b.right1[x][a2]),
                    "biaction right preserves composition",
                    || format!("({} + {}).{}", an(a), an(a2), on(x)),
                );
            }
        }
        for y in objs.clone() {
            for &e in c.fibre(y) {
                for &e2 in c.fibre(y) {
                    let s = c.add(e, e2);
                    r.check(
                        b.left2[x][s] == c.add(b.left2[x][e], b.left2[x][e2]),
                        "biaction left preserves addition",
                        || format!("{}.({} + {})", on(x), cn(e), cn(e2)),
                    );
                    r.check(
                        b.right2[x][s] == c.add(b.right2[x][e], b.right2[x][e2]),
                        "biaction right preserves addition",
                        || format!("({} + {}).{}", cn(e), cn(e2), on(x)),
                    );
                }
            }
        }
    }

    // biactions against the crossed module structure
    for z in objs.clone() {
        for e in c.elements() {
            for a in g.arrows().filter(|&a| g.src(a) == c.base(e)) {
                let ca = b.xmod.act(e, a);
                r.check(
                    b.left2[z][ca] == b.xmod.act(b.left2[z][e], b.left1[z][a]),
                    "biaction respects action, left",
                    || format!("{}.({}^{})", on(z), cn(e), an(a)),
                );
                r.check(
                    b.right2[z][ca] == b.xmod.act(b.right2[z][e], b.right1[z][a]),
                    "biaction respects action, right",
                    || format!("({}^{}).{}", cn(e), an(a), on(z)),
                );
            }
            r.check(b.xmod.delta(b.left2[z][e]) == b.left1[z][b.xmod.delta(e)], "biaction respects boundary, left", || {
                format!("δ({}.{})", on(z), cn(e))
            });
            r.check(b.xmod.delta(b.right2[z][e]) == b.right1[z][b.xmod.delta(e)], "biaction respects boundary, right", || {
                format!("δ({}.{})", cn(e), on(z))
            });
        }
    }
    if !r.is_valid() {
        return Ok(BraidedReport { report: r, regular: b.is_regular() });
    }

    // braiding
    let o_e = g.id(b.unit);
    for a in g.arrows() {
        for bb in g.arrows() {
            r.check(
                c.base(b.braiding[a][bb]) == b.mul(g.tgt(a), g.tgt(bb)),
                "braiding fibre",
                || format!("{{{}, {}}}", an(a), an(bb)),
            );
        }
        r.check(b.braiding[o_e][a] == c.zero(g.tgt(a)), "braiding unit, left", || an(a));
        r.check(b.braiding[a][o_e] == c.zero(g.tgt(a)), "braiding unit, right", || an(a));
    }
    if !r.is_valid() {
        return Ok(BraidedReport { report: r, regular: b.is_regular() });
    }
    let br = |a: usize, bb: usize| b.braiding[a][bb];
    for a in g.arrows() {
        let (aa, ba) = (g.src(a), g.tgt(a));
        for bb in g.arrows() {
            let (ab, bbt) = (g.src(bb), g.tgt(bb));
            for b2 in g.arrows().filter(|&b2| g.src(b2) == bbt) {
                let lhs = br(a, g.comp(bb, b2));
                let rhs = c.add(b.xmod.act(br(a, bb), b.left1[ba][b2]), br(a, b2));
                r.check(lhs == rhs, "braiding additive in b", || format!("a = {}, b = {}, b' = {}", an(a), an(bb), an(b2)));
            }
            for a2 in g.arrows().filter(|&a2| g.src(a2) == ba) {
                let lhs = br(g.comp(a, a2), bb);
                let rhs = c.add(br(a2, bb), b.xmod.act(br(a, bb), b.right1[bbt][a2]));
                r.check(lhs == rhs, "braiding additive in a", || format!("a = {}, a' = {}, b = {}", an(a), an(a2), an(bb)));
            }
            let rhs = g.sum(&[
                g.neg(b.left1[ba][bb]),
                g.neg(b.right1[ab][a]),
                b.left1[aa][bb],
                b.right1[bbt][a],
            ]);
            r.check(b.xmod.delta(br(a, bb)) == rhs, "boundary of braiding", || {
                format!("a = {}, b = {}", an(a), an(bb))
            });
            for x in objs.clone() {
                r.check(b.left2[x][br(a, bb)] == br(b.left1[x][a], bb), "braiding equivariant, left", || {
                    format!("{}.{{{}, {}}}", on(x), an(a), an(bb))
                });
                r.check(b.right2[x][br(a, bb)] == br(a, b.right1[x][bb]), "braiding equivariant, right", || {
                    format!("{{{}, {}}}.{}", an(a), an(bb), on(x))
                });
                r.check(br(b.right1[x][a], bb) == br(a, b.left1[x][bb]), "braiding equivariant, middle", || {
                    format!("{{{}.{}, {}}} vs {{{}, {}.{}}}", an(a), on(x), an(bb), an(a), on(x), an(bb))
                });
            }
        }
        for e in c.elements() {
            let y = c.base(e);
            let lhs = br(a, b.xmod.delta(e));
            let rhs = c.add(
                c.neg(b.left2[ba][e]),
                b.xmod.act(b.left2[aa][e], b.right1[y][a]),
            );
            r.check(lhs == rhs, "braiding against a boundary, right", || format!("a = {}, c' = {}", an(a), cn(e)));
        }
    }
    for e in c.elements() {
        let x = c.base(e);
        for bb in g.arrows() {
            let lhs = br(b.xmod.delta(e), bb);
            let rhs = c.add(
                c.neg(b.xmod.act(b.right2[g.src(bb)][e], b.left1[x][bb])),
                b.right2[g.tgt(bb)][e],
            );
            r.check(lhs == rhs, "braiding against a boundary, left", || format!("c = {}, b = {}", cn(e), an(bb)));
        }
    }
    Ok(BraidedReport {
        report: r,
        regular: b.is_regular(),
    })
}

/// An arrow of `AUT(𝒞)`: a homotopy `(s₀, s₁)` over the automorphism with
/// index `f`. Its source is the automorphism it induces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutHomotopy {
    pub s0: Vec<usize>,
    pub s1: Vec<usize>,
    pub f: usize,
}

/// `AUT(𝒞)` with the element data behind each index.
#[derive(Debug, Clone)]
pub struct AutBraided {
    pub aut: ConcreteGroup<XmodMorphism>,
    pub a1: Vec<AutHomotopy>,
    /// `(s₂, f)` with `s₂(x) ∈ C(f₀x)`.
    pub a2: Vec<(Section2, usize)>,
    pub braided: BraidedXmod,
}

fn index<T: Eq + std::hash::Hash>(map: &HashMap<T, usize>, key: &T, what: &str) -> Result<usize> {
    map.get(key)
        .copied()
        .ok_or_else(|| Error::Inconsistent(format!("{what} leaves its set")))
}

/// Builds the braided regular crossed module of automorphisms of `x`.
pub fn build_aut_braided(x: &CrossedModule, limit: SearchLimit) -> Result<AutBraided> {
    let aut = enumerate_xmod_automorphisms(x, limit)?;
    let (g, c) = (x.g(), x.c());
    let n0 = aut.order();
    let autg = aut.group();

    // A₁
    let mut a1 = Vec::new();
    let mut a1_src = Vec::new();
    for (fi, f) in aut.elements().iter().enumerate() {
        for h in enumerate_homotopies(x, x, f, limit)? {
            let induced = induced_tables(x, x, &h.s0, &h.s1, f);
            if let Some(gi) = aut.index_of(&induced) {
                a1.push(AutHomotopy { s0: h.s0, s1: h.s1, f: fi });
                a1_src.push(gi);
            }
        }
    }
    limit.check((a1.len() as u128).pow(2))?;
    let a1_index: HashMap<AutHomotopy, usize> = a1.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
    let a1_tgt: Vec<usize> = a1.iter().map(|h| h.f).collect();
    let compose1 = |s: &AutHomotopy, t: &AutHomotopy| AutHomotopy {
        s0: g.objects().map(|y| g.comp(s.s0[y], t.s0[y])).collect(),
        s1: g
            .arrows()
            .map(|a| c.add(t.s1[a], x.act(s.s1[a], t.s0[g.tgt(a)])))
            .collect(),
        f: t.f,
    };
    let object_names: Vec<String> = aut.group().names().to_vec();
    let a1_names: Vec<String> = (0..a1.len()).map(|i| format!("h{i}")).collect();
    let a1_groupoid = FiniteGroupoid::from_fn_checked(
        object_names.clone(),
        a1_names,
        a1_src.clone(),
        a1_tgt.clone(),
        |i, j| a1_index.get(&compose1(&a1[i], &a1[j])).copied(),
    )?;

    // A₂
    let mut a2 = Vec::new();
    for (fi, f) in aut.elements().iter().enumerate() {
        let fibres: Vec<&[usize]> = f.f0.iter().map(|&y| c.fibre(y)).collect();
        let sizes: Vec<usize> = fibres.iter().map(|s| s.len()).collect();
        crate::groupoid::for_each_choice(&sizes, |choice| {
            let s2 = Section2(choice.iter().enumerate().map(|(y, &k)| fibres[y][k]).collect());
            a2.push((s2, fi));
        });
    }
    let a2_index: HashMap<(Section2, usize), usize> = a2.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let a2_base: Vec<usize> = a2.iter().map(|e| e.1).collect();
    let a2_names: Vec<String> = (0..a2.len())
        .map(|i| format!("{}:c{}", object_names[a2[i].1], i))
        .collect();
    let a2_groupoid = FiniteGroupoid::from_fn_checked(
        object_names,
        a2_names,
        a2_base.clone(),
        a2_base,
        |i, j| {
            let sum = Section2(a2[i].0 .0.iter().zip(&a2[j].0 .0).map(|(&p, &q)| c.add(p, q)).collect());
            a2_index.get(&(sum, a2[i].1)).copied()
        },
    )?;
    let bundle = GroupBundle::from_groupoid(a2_groupoid)?;

    // δ and the action
    let mut delta = Vec::with_capacity(a2.len());
    for (s2, fi) in &a2 {
        let f = aut.element(*fi);
        let h = AutHomotopy {
            s0: s2.0.iter().map(|&e| x.delta(e)).collect(),
            s1: g
                .arrows()
                .map(|a| c.add(x.act(c.neg(s2.0[g.src(a)]), f.f1[a]), s2.0[g.tgt(a)]))
                .collect(),
            f: *fi,
        };
        delta.push(index(&a1_index, &h, "δ")?);
    }
    let n1 = a1.len();
    let mut table = vec![None; a2.len() * n1];
    for (ei, (s2, fi)) in a2.iter().enumerate() {
        for (ai, t) in a1.iter().enumerate().filter(|&(ai, _)| a1_src[ai] == *fi) {
            let moved = Section2(t.s0.iter().enumerate().map(|(y, &a)| x.act(s2.0[y], a)).collect());
            table[ei * n1 + ai] = Some(index(&a2_index, &(moved, t.f), "action on A₂")?);
        }
    }
    let action = GroupoidAction::from_table(bundle, a1_groupoid, table)?;
    let xmod = CrossedModule::new_unchecked(action, delta)?;

    // biactions and braiding
    let mut left1 = vec![vec![0; a1.len()]; n0];
    let mut right1 = vec![vec![0; a1.len()]; n0];
    let mut left2 = vec![vec![0; a2.len()]; n0];
    let mut right2 = vec![vec![0; a2.len()]; n0];
    for (hi, h) in aut.elements().iter().enumerate() {
        for (i, s) in a1.iter().enumerate() {
            let l = AutHomotopy {
                s0: s.s0.iter().map(|&a| h.f1[a]).collect(),
                s1: s.s1.iter().map(|&e| h.f2[e]).collect(),
                f: autg.mul(hi, s.f),
            };
            left1[hi][i] = index(&a1_index, &l, "left action on A₁")?;
            let rt = AutHomotopy {
                s0: h.f0.iter().map(|&y| s.s0[y]).collect(),
                s1: h.f1.iter().map(|&a| s.s1[a]).collect(),
                f: autg.mul(s.f, hi),
            };
            right1[hi][i] = index(&a1_index, &rt, "right action on A₁")?;
        }
        for (i, (s2, f)) in a2.iter().enumerate() {
            let l = (Section2(s2.0.iter().map(|&e| h.f2[e]).collect()), autg.mul(hi, *f));
            left2[hi][i] = index(&a2_index, &l, "left action on A₂")?;
            let rt = (Section2(h.f0.iter().map(|&y| s2.0[y]).collect()), autg.mul(*f, hi));
            right2[hi][i] = index(&a2_index, &rt, "right action on A₂")?;
        }
    }
    let mut braiding = vec![vec![0; a1.len()]; a1.len()];
    for (i, s) in a1.iter().enumerate() {
        for (j, t) in a1.iter().enumerate() {
            let v = (Section2(t.s0.iter().map(|&a| s.s1[a]).collect()), autg.mul(s.f, t.f));
            braiding[i][j] = index(&a2_index, &v, "braiding")?;
        }
    }
    let braided = BraidedXmod {
        xmod,
        monoid: (0..n0).map(|p| (0..n0).map(|q| autg.mul(p, q)).collect()).collect(),
        unit: autg.identity(),
        left1,
        right1,
        left2,
        right2,
        braiding,
    };
    Ok(AutBraided { aut, a1, a2, braided })
}

/// A 2-crossed module obtained from a braided one, with the arrows of `A₁`
/// forming `K` and the elements of `A₂` forming `L`.
#[derive(Debug, Clone)]
pub struct CostarTwoCrossed {
    pub two_crossed: TwoCrossedModule,
    /// `k[i]` is the `A₁` arrow of element `i` of `M`.
    pub k: Vec<usize>,
    /// `l[i]` is the `A₂` element of element `i` of `L`.
    pub l: Vec<usize>,
}

/// `A₂(e) → K → A₀` with `K` the costar at `e`, `ab = (a.αb) + b`,
/// `c!a = (c.αa)^a`, diagonal `A₀`-actions and `⟨a, b⟩ = {a⁻¹, b}!a`.
pub fn braided_to_2crossed(b: &BraidedXmod) -> Result<CostarTwoCrossed> {
    b.check_shape()?;
    if !b.is_regular() {
        return Err(Error::NotRegular);
    }
    let (g, c) = (b.a1(), b.a2());
    let e = b.unit;
    let n0 = b.monoid.len();
    let k = g.costar(e)?;
    let l = c.fibre(e).to_vec();
    let kpos: HashMap<usize, usize> = k.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let lpos: HashMap<usize, usize> = l.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let kmul = |a: usize, bb: usize| g.comp(b.right1[g.src(bb)][a], bb);
    let mut table = vec![vec![0; k.len()]; k.len()];
    for (i, &a) in k.iter().enumerate() {
        for (j, &bb) in k.iter().enumerate() {
            table[i][j] = kpos[&kmul(a, bb)];
        }
    }
    let m = FiniteGroup::from_table(k.iter().map(|&a| g.arrow_name(a).to_string()).collect(), table)?;
    let (lg, _) = c.groupoid().vertex_group(e);
    let p_names: Vec<String> = (0..n0).map(|x| g.object_name(x).to_string()).collect();
    let p = FiniteGroup::from_table(p_names, b.monoid.clone())?;

    let bang = |ci: usize, a: usize| b.xmod.act(b.right2[g.src(a)][ci], a);
    let d1 = l.iter().map(|&ci| kpos[&b.xmod.delta(ci)]).collect();
    let d2 = k.iter().map(|&a| g.src(a)).collect();
    let mut p_on_l = vec![vec![0; l.len()]; n0];
    let mut p_on_m = vec![vec![0; k.len()]; n0];
    for q in 0..n0 {
        let qi = p.inv(q);
        for (i, &ci) in l.iter().enumerate() {
            p_on_l[q][i] = lpos[&b.right2[q][b.left2[qi][ci]]];
        }
        for (i, &a) in k.iter().enumerate() {
            p_on_m[q][i] = kpos[&b.right1[q][b.left1[qi][a]]];
        }
    }
    let mut m_on_l = vec![vec![0; l.len()]; k.len()];
    let mut lift = vec![vec![0; k.len()]; k.len()];
    for (j, &a) in k.iter().enumerate() {
        for (i, &ci) in l.iter().enumerate() {
            m_on_l[j][i] = lpos[&bang(ci, a)];
        }
        let a_inv = k[m.inv(j)];
        for (i, &bb) in k.iter().enumerate() {
            lift[j][i] = lpos[&bang(b.braiding[a_inv][bb], a)];
        }
    }
    Ok(CostarTwoCrossed {
        two_crossed: TwoCrossedModule {
            l: lg,
            m,
            p,
            d1,
            d2,
            p_on_l,
            p_on_m,
            m_on_l,
            lift,
        },
        k,
        l,
    })
}

/// The braided regular crossed module of a 2-crossed module `L → G → P`:
/// `A₁ = G × P` with `α(g,p) = ∂g·p`, `β(g,p) = p`, and `A₂ = L × P`.
/// Element `(g, p)` has index `g + |G|·p`, and `(l, p)` has `l + |L|·p`.
pub fn twocrossed_to_braided(t: &TwoCrossedModule) -> Result<BraidedXmod> {
    let report = validate_2crossed(t)?;
    if !report.is_valid() {
        return Err(Error::InvalidTwoCrossed(report));
    }
    let (l, gm, p) = (&t.l, &t.m, &t.p);
    let (nl, ng, np) = t.orders();
    let object_names: Vec<String> = p.names().to_vec();
    let a1 = FiniteGroupoid::from_fn_unchecked(
        object_names.clone(),
        (0..ng * np)
            .map(|i| format!("({},{})", gm.name(i % ng), p.name(i / ng)))
            .collect(),
        (0..ng * np).map(|i| p.mul(t.d2[i % ng], i / ng)).collect(),
        (0..ng * np).map(|i| i / ng).collect(),
        |i, j| gm.mul(i % ng, j % ng) + ng * (j / ng),
    );
    let a2 = FiniteGroupoid::from_fn_unchecked(
        object_names,
        (0..nl * np)
            .map(|i| format!("({},{})", l.name(i % nl), p.name(i / nl)))
            .collect(),
        (0..nl * np).map(|i| i / nl).collect(),
        (0..nl * np).map(|i| i / nl).collect(),
        |i, j| l.mul(i % nl, j % nl) + nl * (i / nl),
    );
    let bundle = GroupBundle::from_groupoid(a2)?;
    let action = GroupoidAction::from_fn(bundle, a1, |c, a| t.m_on_l[a % ng][c % nl] + nl * (a / ng));
    let delta = (0..nl * np).map(|i| t.d1[i % nl] + ng * (i / nl)).collect();
    let xmod = CrossedModule::new_unchecked(action, delta)?;
    let mut left1 = vec![vec![0; ng * np]; np];
    let mut right1 = vec![vec![0; ng * np]; np];
    let mut left2 = vec![vec![0; nl * np]; np];
    let mut right2 = vec![vec![0; nl * np]; np];
    for q in 0..np {
        let qi = p.inv(q);
        for i in 0..ng * np {
            let (gg, pp) = (i % ng, i / ng);
            left1[q][i] = t.p_on_m[qi][gg] + ng * p.mul(q, pp);
            right1[q][i] = gg + ng * p.mul(pp, q);
        }
        for i in 0..nl * np {
            let (ll, pp) = (i % nl, i / nl);
            left2[q][i] = t.p_on_l[qi][ll] + nl * p.mul(q, pp);
            right2[q][i] = ll + nl * p.mul(pp, q);
        }
    }
    let mut braiding = vec![vec![0; ng * np]; ng * np];
    for i in 0..ng * np {
        let (g1, p1) = (i % ng, i / ng);
        for j in 0..ng * np {
            let (g2, p2) = (j % ng, j / ng);
            let inner = t.lift[gm.inv(g1)][t.p_on_m[p1][g2]];
            braiding[i][j] = t.m_on_l[g1][inner] + nl * p.mul(p1, p2);
        }
    }
    Ok(BraidedXmod {
        xmod,
        monoid: (0..np).map(|a| (0..np).map(|b| p.mul(a, b)).collect()).collect(),
        unit: p.identity(),
        left1,
        right1,
        left2,
        right2,
        braiding,
    })
}

/// Evidence that a 2-crossed module survives the round trip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismWitness {
    pub iso: TwoCrossedIsomorphism,
    /// Whether the identification maps of the construction sufficed.
    pub canonical: bool,
}

/// Sends `t` through [`twocrossed_to_braided`] and back and exhibits an
/// isomorphism with the original. The canonical maps `g ↦ (g, 1)`,
/// `l ↦ (l, 1)` are tried first; an exhaustive search is the fallback.
pub fn roundtrip_check(t: &TwoCrossedModule, limit: SearchLimit) -> Result<IsomorphismWitness> {
    let back = braided_to_2crossed(&twocrossed_to_braided(t)?)?;
    let (nl, ng, _) = t.orders();
    let e = t.p.identity();
    let kpos: HashMap<usize, usize> = back.k.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let lpos: HashMap<usize, usize> = back.l.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let canonical = TwoCrossedIsomorphism {
        on_l: (0..nl).map(|x| lpos[&(x + nl * e)]).collect(),
        on_m: (0..ng).map(|g| kpos[&(g + ng * e)]).collect(),
        on_p: t.p.elements().collect(),
    };
    if canonical.validate(t, &back.two_crossed).is_valid() {
        return Ok(IsomorphismWitness { iso: canonical, canonical: true });
    }
    search_isomorphism(t, &back.two_crossed, limit)?
        .map(|iso| IsomorphismWitness { iso, canonical: false })
        .ok_or_else(|| Error::NoIsomorphismFound("round trip".into()))
}

/// Exhaustive search for an isomorphism of 2-crossed modules.
pub fn search_isomorphism(
    a: &TwoCrossedModule,
    b: &TwoCrossedModule,
    limit: SearchLimit,
) -> Result<Option<TwoCrossedIsomorphism>> {
    if a.orders() != b.orders() {
        return Ok(None);
    }
    let isos_p = a.p.isomorphisms(&b.p, limit)?;
    let isos_m = a.m.isomorphisms(&b.m, limit)?;
    let isos_l = a.l.isomorphisms(&b.l, limit)?;
    limit.check(isos_p.len() as u128 * isos_m.len() as u128 * isos_l.len() as u128)?;
    for fp in &isos_p {
        for fm in isos_m.iter().filter(|fm| a.m.elements().all(|g| b.d2[fm[g]] == fp[a.d2[g]])) {
            for fl in isos_l.iter().filter(|fl| a.l.elements().all(|x| b.d1[fl[x]] == fm[a.d1[x]])) {
                let iso = TwoCrossedIsomorphism {
                    on_l: fl.clone(),
                    on_m: fm.clone(),
                    on_p: fp.clone(),
                };
                if iso.validate(a, b).is_valid() {
                    return Ok(Some(iso));
                }
            }
        }
    }
    Ok(None)
}

/// Identifies the costar of `AUT(𝒞)` at the identity with `FDer*(𝒞)` and
/// `A₂(I)` with `M₂(𝒞)`, giving a map from the actor into the 2-crossed
/// module derived from the braiding. Validate it to compare the two.
pub fn costar_identification(actor: &Actor, aut: &AutBraided, derived: &CostarTwoCrossed) -> Result<TwoCrossedIsomorphism> {
    let mut on_m = vec![0; actor.fder_star.order()];
    for (i, &arrow) in derived.k.iter().enumerate() {
        let h = &aut.a1[arrow];
        let s = FreeDerivation { s0: h.s0.clone(), s1: h.s1.clone() };
        let j = actor
            .fder_star
            .index_of(&s)
            .ok_or_else(|| Error::Inconsistent("costar element outside FDer*".into()))?;
        on_m[j] = i;
    }
    let mut on_l = vec![0; actor.m2.order()];
    for (i, &el) in derived.l.iter().enumerate() {
        let j = actor
            .m2
            .index_of(&aut.a2[el].0)
            .ok_or_else(|| Error::Inconsistent("vertex element outside M₂".into()))?;
        on_l[j] = i;
    }
    let mut on_p = vec![0; actor.aut.order()];
    for (i, f) in aut.aut.elements().iter().enumerate() {
        let j = actor
            .aut
            .index_of(f)
            .ok_or_else(|| Error::Inconsistent("automorphism mismatch".into()))?;
        on_p[j] = i;
    }
    Ok(TwoCrossedIsomorphism { on_l, on_m, on_p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actor::build_actor_2crossed;
    use crate::catalog;

    #[test]
    fn trivial_structure_is_valid() {
        let r = validate_braided(&BraidedXmod::trivial()).unwrap();
        assert!(r.report.is_valid() && r.regular, "{}", r.report);
    }

    #[test]
    fn aut_braided_c2c2() {
        let x = catalog::c2_identity();
        let a = build_aut_braided(&x, SearchLimit::default()).unwrap();
        assert_eq!(a.aut.order(), 1);
        assert_eq!(a.a1.len(), 2);
        let r = validate_braided(&a.braided).unwrap();
        assert!(r.report.is_valid() && r.regular, "{}", r.report);
    }

    #[test]
    fn broken_braiding_is_witnessed() {
        let x = catalog::c2_identity();
        let mut b = build_aut_braided(&x, SearchLimit::default()).unwrap().braided;
        let other = b.a2().fibre(0).iter().copied().find(|&e| e != b.braiding[1][1]).unwrap();
        b.braiding[1][1] = other;
        let r = validate_braided(&b).unwrap();
        assert!(!r.report.is_valid());
    }

    #[test]
    fn actor_matches_costar_on_c3() {
        let x = catalog::c3_to_trivial();
        let lim = SearchLimit::default();
        let actor = build_actor_2crossed(&x, lim).unwrap();
        let aut = build_aut_braided(&x, lim).unwrap();
        let derived = braided_to_2crossed(&aut.braided).unwrap();
        let iso = costar_identification(&actor, &aut, &derived).unwrap();
        let r = iso.validate(&actor.two_crossed, &derived.two_crossed);
        assert!(r.is_valid(), "{r}");
    }

    /// `{1, z}` with `zz = z`, acting on the discrete groupoid on itself.
    fn non_regular() -> BraidedXmod {
        let monoid = vec![vec![0, 1], vec![1, 1]];
        let g = FiniteGroupoid::discrete(2);
        let action = GroupoidAction::trivial_on(g.clone());
        let delta = (0..2).map(|y| g.id(action.bundle().base(y))).collect();
        let xmod = CrossedModule::new(action, delta).unwrap();
        let on_ids: Vec<Vec<usize>> = (0..2).map(|x| (0..2).map(|y| g.id(monoid[x][y])).collect()).collect();
        let zeros: Vec<Vec<usize>> = (0..2).map(|x| (0..2).map(|y| xmod.c().zero(monoid[x][y])).collect()).collect();
        let braiding = (0..2)
            .map(|a| (0..2).map(|b| xmod.c().zero(monoid[g.tgt(a)][g.tgt(b)])).collect())
            .collect();
        BraidedXmod {
            xmod,
            monoid,
            unit: 0,
            left1: on_ids.clone(),
            right1: on_ids,
            left2: zeros.clone(),
            right2: zeros,
            braiding,
        }
    }

    #[test]
    fn non_regular_is_valid_but_refused() {
        let b = non_regular();
        let r = validate_braided(&b).unwrap();
        assert!(r.report.is_valid(), "{}", r.report);
        assert!(!r.regular);
        assert!(matches!(braided_to_2crossed(&b), Err(Error::NotRegular)));
    }

    #[test]
    fn roundtrip_of_group() {
        let t = TwoCrossedModule::from_group(&FiniteGroup::cyclic(2));
        let w = roundtrip_check(&t, SearchLimit::default()).unwrap();
        assert!(w.canonical);
    }
}
