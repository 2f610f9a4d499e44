//! Groupoid actions, crossed modules of groupoids and their morphisms.
//!
//! A crossed module `(C, G, δ)` consists of a group bundle `C` and a
//! groupoid `G` on the same objects, a right action `c^a` of `G` on `C`
//! defined when `β(c) = α(a)`, and a boundary `δ: C → G` over the identity on
//! objects, subject to
//!
//! * CM1: `δ(c^a) = −a + δc + a`
//! * CM2: `c^{δc₁} = −c₁ + c + c₁`
//!
//! A structure satisfying only CM1 is a pre-crossed module; the validator
//! reports a [`Verdict`] that distinguishes the two.

use std::fmt;

use crate::group::{semidirect_product, ConcreteGroup, FiniteGroup};
use crate::groupoid::{
    enumerate_groupoid_automorphisms, for_each_choice, invert_permutation, is_permutation,
    product_size, validate_groupoid_map, FiniteGroupoid, GroupBundle,
};
use crate::report::ValidationReport;
use crate::{Error, Result, SearchLimit};

/// A right action of a groupoid `G` on a group bundle `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidAction {
    c: GroupBundle,
    g: FiniteGroupoid,
    /// `act[c·|G| + a]`, `None` where `c^a` is undefined.
    act: Vec<Option<usize>>,
}

impl GroupoidAction {
    /// Tabulates `f(c, a)` for every pair with `β(c) = α(a)`. Nothing is
    /// checked; see [`validate_action`].
    pub fn from_fn(c: GroupBundle, g: FiniteGroupoid, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut act = vec![None; c.len() * g.num_arrows()];
        if c.num_objects() == g.num_objects() {
            for e in c.elements() {
                for a in g.arrows() {
                    if c.base(e) == g.src(a) {
                        act[e * g.num_arrows() + a] = Some(f(e, a));
                    }
                }
            }
        }
        GroupoidAction { c, g, act }
    }

    /// Raw table indexed by `c·|G| + a`.
    pub fn from_table(c: GroupBundle, g: FiniteGroupoid, act: Vec<Option<usize>>) -> Result<Self> {
        if act.len() != c.len() * g.num_arrows() {
            return Err(Error::MalformedTable(format!(
                "action table has {} entries, expected {}",
                act.len(),
                c.len() * g.num_arrows()
            )));
        }
        if let Some(v) = act.iter().flatten().find(|&&v| v >= c.len()) {
            return Err(Error::MalformedTable(format!("action value {v} out of range")));
        }
        Ok(GroupoidAction { c, g, act })
    }

    /// The action of `G` on the trivial bundle over its objects.
    pub fn trivial_on(g: FiniteGroupoid) -> Self {
        let names = g.object_names().to_vec();
        let c = GroupBundle::constant(names, &FiniteGroup::trivial());
        let zeros: Vec<usize> = g.objects().map(|y| c.zero(y)).collect();
        let tgt: Vec<usize> = g.arrows().map(|a| g.tgt(a)).collect();
        Self::from_fn(c, g, |_, a| zeros[tgt[a]])
    }

    pub fn bundle(&self) -> &GroupBundle {
        &self.c
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.g
    }

    pub fn try_act(&self, c: usize, a: usize) -> Option<usize> {
        self.act[c * self.g.num_arrows() + a]
    }

    /// `c^a`. Panics when `β(c) ≠ α(a)`.
    pub fn act(&self, c: usize, a: usize) -> usize {
        self.try_act(c, a).unwrap_or_else(|| {
            panic!(
                "{} cannot act on {}",
                self.g.arrow_name(a),
                self.c.name(c)
            )
        })
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.act
    }
}

/// Checks the three action axioms over every pair and triple.
pub fn validate_action(x: &GroupoidAction) -> Result<ValidationReport> {
    let (c, g) = (&x.c, &x.g);
    if c.num_objects() != g.num_objects() {
        return Err(Error::BaseMismatch(c.num_objects(), g.num_objects()));
    }
    let mut report = ValidationReport::new();
    for e in c.elements() {
        for a in g.arrows() {
            let defined = x.try_act(e, a);
            let should = c.base(e) == g.src(a);
            match defined {
                Some(v) => report.check(should && c.base(v) == g.tgt(a), "action domain", || {
                    format!("{}^{} = {}", c.name(e), g.arrow_name(a), c.name(v))
                }),
                None => report.check(!should, "action total", || {
                    format!("{}^{} undefined", c.name(e), g.arrow_name(a))
                }),
            }
        }
    }
    if !report.is_valid() {
        return Ok(report);
    }
    for a in g.arrows() {
        let x0 = g.src(a);
        for &c1 in c.fibre(x0) {
            for &c2 in c.fibre(x0) {
                report.check(
                    x.act(c.add(c1, c2), a) == c.add(x.act(c1, a), x.act(c2, a)),
                    "additive",
                    || format!("({} + {})^{}", c.name(c1), c.name(c2), g.arrow_name(a)),
                );
            }
            for b in g.arrows().filter(|&b| g.src(b) == g.tgt(a)) {
                report.check(
                    x.act(c1, g.comp(a, b)) == x.act(x.act(c1, a), b),
                    "composition",
                    || format!("{}^({} + {})", c.name(c1), g.arrow_name(a), g.arrow_name(b)),
                );
            }
        }
    }
    for y in g.objects() {
        for &c1 in c.fibre(y) {
            report.check(x.act(c1, g.id(y)) == c1, "unit", || {
                format!("{}^1_{}", c.name(c1), g.object_name(y))
            });
        }
    }
    Ok(report)
}

/// Outcome of [`validate_crossed_module`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// CM1 and CM2 hold.
    Crossed,
    /// CM1 holds and CM2 fails.
    PreCrossedOnly,
    /// The action, the boundary or CM1 fails.
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Crossed => "crossed module",
            Verdict::PreCrossedOnly => "pre-crossed module only",
            Verdict::Neither => "not a pre-crossed module",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmodReport {
    pub verdict: Verdict,
    /// Action, boundary and CM1 failures.
    pub pre_crossed: ValidationReport,
    /// CM2 failures.
    pub peiffer: ValidationReport,
}

impl XmodReport {
    pub fn is_crossed(&self) -> bool {
        self.verdict == Verdict::Crossed
    }

    /// Both reports, merged.
    pub fn combined(&self) -> ValidationReport {
        let mut r = self.pre_crossed.clone();
        r.merge(self.peiffer.clone());
        r
    }
}

/// A crossed module of groupoids `(C, G, δ)`, or a pre-crossed one when
/// built through [`CrossedModule::new_unchecked`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    action: GroupoidAction,
    delta: Vec<usize>,
}

impl CrossedModule {
    /// Validates and rejects anything short of a crossed module.
    pub fn new(action: GroupoidAction, delta: Vec<usize>) -> Result<Self> {
        let x = Self::new_unchecked(action, delta)?;
        let report = validate_crossed_module(&x)?;
        if report.is_crossed() {
            Ok(x)
        } else {
            Err(Error::Invalid(report.combined()))
        }
    }

    /// Only checks table shapes, so pre-crossed modules can be represented.
    pub fn new_unchecked(action: GroupoidAction, delta: Vec<usize>) -> Result<Self> {
        if delta.len() != action.c.len() {
            return Err(Error::MalformedTable(format!(
                "boundary has {} entries for {} elements",
                delta.len(),
                action.c.len()
            )));
        }
        if let Some(&a) = delta.iter().find(|&&a| a >= action.g.num_arrows()) {
            return Err(Error::MalformedTable(format!("boundary value {a} out of range")));
        }
        Ok(CrossedModule { action, delta })
    }

    /// One-object structure from groups `C`, `G`, a boundary and a right
    /// action `(c, g) ↦ c^g`. Unchecked.
    pub fn from_groups_unchecked(
        c: &FiniteGroup,
        g: &FiniteGroup,
        delta: Vec<usize>,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let bundle = GroupBundle::from_groups(vec!["*".into()], std::slice::from_ref(c));
        Self::new_unchecked(GroupoidAction::from_fn(bundle, g.to_groupoid(), act), delta)
    }

    /// `(1, G, 0)`: the trivial bundle over `G`.
    pub fn trivial_over(g: FiniteGroupoid) -> Self {
        let action = GroupoidAction::trivial_on(g);
        let delta = action.c.elements().map(|e| action.g.id(action.c.base(e))).collect();
        CrossedModule { action, delta }
    }

    /// The trivial crossed module over one object.
    pub fn trivial() -> Self {
        Self::trivial_over(FiniteGroupoid::discrete(1))
    }

    pub fn action(&self) -> &GroupoidAction {
        &self.action
    }

    pub fn c(&self) -> &GroupBundle {
        &self.action.c
    }

    pub fn g(&self) -> &FiniteGroupoid {
        &self.action.g
    }

    pub fn num_objects(&self) -> usize {
        self.action.g.num_objects()
    }

    pub fn delta(&self, c: usize) -> usize {
        self.delta[c]
    }

    pub fn delta_table(&self) -> &[usize] {
        &self.delta
    }

    pub fn act(&self, c: usize, a: usize) -> usize {
        self.action.act(c, a)
    }

    /// Total element count `|C| + |G|`, a rough size measure.
    pub fn size(&self) -> usize {
        self.c().len() + self.g().num_arrows()
    }

    pub fn shape(&self) -> Shape {
        Shape {
            objects: self.num_objects(),
            arrows: self.g().num_arrows(),
            elements: self.c().len(),
        }
    }
}

/// Checks action, boundary, CM1 and CM2 over all pairs.
pub fn validate_crossed_module(x: &CrossedModule) -> Result<XmodReport> {
    let mut pre = validate_action(&x.action)?.scoped("action");
    let mut peiffer = ValidationReport::new();
    let (c, g) = (x.c(), x.g());
    if pre.is_valid() {
        for e in c.elements() {
            let d = x.delta(e);
            pre.check(g.src(d) == c.base(e) && g.tgt(d) == c.base(e), "boundary endpoints", || {
                format!("δ({}) = {}", c.name(e), g.arrow_name(d))
            });
        }
    }
    if pre.is_valid() {
        for y in g.objects() {
            for &c1 in c.fibre(y) {
                for &c2 in c.fibre(y) {
                    pre.check(
                        x.delta(c.add(c1, c2)) == g.comp(x.delta(c1), x.delta(c2)),
                        "boundary additive",
                        || format!("δ({} + {})", c.name(c1), c.name(c2)),
                    );
                }
            }
        }
    }
    if pre.is_valid() {
        for e in c.elements() {
            for a in g.arrows().filter(|&a| g.src(a) == c.base(e)) {
                let lhs = x.delta(x.act(e, a));
                let rhs = g.sum(&[g.neg(a), x.delta(e), a]);
                pre.check(lhs == rhs, "CM1", || {
                    format!(
                        "c = {}, a = {}: δ(c^a) = {} but −a + δc + a = {}",
                        c.name(e),
                        g.arrow_name(a),
                        g.arrow_name(lhs),
                        g.arrow_name(rhs)
                    )
                });
            }
        }
        for y in g.objects() {
            for &e in c.fibre(y) {
                for &e1 in c.fibre(y) {
                    let lhs = x.act(e, x.delta(e1));
                    let rhs = c.sum(&[c.neg(e1), e, e1]);
                    peiffer.check(lhs == rhs, "CM2", || {
                        format!(
                            "c = {}, c₁ = {}: c^δc₁ = {} but −c₁ + c + c₁ = {}",
                            c.name(e),
                            c.name(e1),
                            c.name(lhs),
                            c.name(rhs)
                        )
                    });
                }
            }
        }
    }
    let verdict = if !pre.is_valid() {
        Verdict::Neither
    } else if !peiffer.is_valid() {
        Verdict::PreCrossedOnly
    } else {
        Verdict::Crossed
    };
    Ok(XmodReport {
        verdict,
        pre_crossed: pre,
        peiffer,
    })
}

/// Sizes of a crossed module: objects, arrows of `G`, elements of `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape {
    pub objects: usize,
    pub arrows: usize,
    pub elements: usize,
}

/// A morphism `(f₀, f₁, f₂)` of crossed modules as explicit tables.
///
/// The domain shape is implied by the table lengths; the codomain shape is
/// stored so that composition can be checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XmodMorphism {
    pub f0: Vec<usize>,
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
    pub cod: Shape,
}

impl XmodMorphism {
    pub fn identity(x: &CrossedModule) -> Self {
        XmodMorphism {
            f0: x.g().objects().collect(),
            f1: x.g().arrows().collect(),
            f2: x.c().elements().collect(),
            cod: x.shape(),
        }
    }

    pub fn dom(&self) -> Shape {
        Shape {
            objects: self.f0.len(),
            arrows: self.f1.len(),
            elements: self.f2.len(),
        }
    }

    pub fn is_endo(&self) -> bool {
        self.dom() == self.cod
    }

    /// `self ∘ other`. Panics if the shapes do not match; see
    /// [`compose_xmod_morphisms`] for the checked form.
    pub fn compose(&self, other: &XmodMorphism) -> XmodMorphism {
        compose_xmod_morphisms(self, other).expect("composable morphisms")
    }

    pub fn is_bijective(&self) -> bool {
        self.is_endo() && is_permutation(&self.f0) && is_permutation(&self.f1) && is_permutation(&self.f2)
    }

    /// Inverse of a bijective endomorphism.
    pub fn inverse(&self) -> Option<XmodMorphism> {
        if !self.is_endo() {
            return None;
        }
        Some(XmodMorphism {
            f0: invert_permutation(&self.f0)?,
            f1: invert_permutation(&self.f1)?,
            f2: invert_permutation(&self.f2)?,
            cod: self.cod,
        })
    }

    /// Checks that `(f₀, f₁)` is a groupoid morphism, `f₂` a bundle morphism
    /// over `f₀`, and that both squares commute.
    pub fn validate(&self, dom: &CrossedModule, cod: &CrossedModule) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.dom() != dom.shape() || self.cod != cod.shape() {
            report.fail("shape", "morphism tables do not match the crossed modules");
            return report;
        }
        report.merge(validate_groupoid_map(&self.f0, &self.f1, dom.g(), cod.g()).scoped("f1"));
        let (c, c2) = (dom.c(), cod.c());
        if self.f2.iter().any(|&e| e >= c2.len()) {
            report.fail("f2/shape", "value out of range");
            return report;
        }
        report.merge(
            validate_groupoid_map(&self.f0, &self.f2, c.groupoid(), c2.groupoid()).scoped("f2"),
        );
        if !report.is_valid() {
            return report;
        }
        for e in c.elements() {
            report.check(
                cod.delta(self.f2[e]) == self.f1[dom.delta(e)],
                "boundary square",
                || format!("δ'f₂({}) ≠ f₁δ({})", c.name(e), c.name(e)),
            );
            for a in dom.g().arrows().filter(|&a| dom.g().src(a) == c.base(e)) {
                report.check(
                    self.f2[dom.act(e, a)] == cod.act(self.f2[e], self.f1[a]),
                    "action square",
                    || format!("f₂({}^{}) ≠ f₂(c)^f₁(a)", c.name(e), dom.g().arrow_name(a)),
                );
            }
        }
        report
    }
}

/// `f ∘ g`, apply `g` first.
pub fn compose_xmod_morphisms(f: &XmodMorphism, g: &XmodMorphism) -> Result<XmodMorphism> {
    if g.cod != f.dom() {
        return Err(Error::DomainMismatch(format!(
            "codomain {:?} of the first map differs from domain {:?} of the second",
            g.cod,
            f.dom()
        )));
    }
    Ok(XmodMorphism {
        f0: g.f0.iter().map(|&x| f.f0[x]).collect(),
        f1: g.f1.iter().map(|&a| f.f1[a]).collect(),
        f2: g.f2.iter().map(|&c| f.f2[c]).collect(),
        cod: f.cod,
    })
}

/// The group `Aut(𝒞)` with product `f·g = f ∘ g`.
///
/// Enumerates groupoid automorphisms of `G`, then for each one the fibrewise
/// group isomorphisms of `C` that commute with `δ`, and keeps the
/// equivariant combinations.
pub fn enumerate_xmod_automorphisms(
    x: &CrossedModule,
    limit: SearchLimit,
) -> Result<ConcreteGroup<XmodMorphism>> {
    let (c, g) = (x.c(), x.g());
    let fibres: Vec<(FiniteGroup, Vec<usize>)> =
        g.objects().map(|y| c.groupoid().vertex_group(y)).collect();
    let mut elements = Vec::new();
    let aut_g = enumerate_groupoid_automorphisms(g, limit)?;
    for phi in aut_g.elements() {
        // candidates[y] = fibre maps C(y) → C(f₀ y), as element tables
        let mut candidates: Vec<Vec<Vec<usize>>> = Vec::with_capacity(g.num_objects());
        for y in g.objects() {
            let (src_group, src_elems) = &fibres[y];
            let (dst_group, dst_elems) = &fibres[phi.obj_map[y]];
            let maps = src_group
                .isomorphisms(dst_group, limit)?
                .into_iter()
                .map(|m| m.into_iter().map(|i| dst_elems[i]).collect::<Vec<_>>())
                .filter(|m| {
                    src_elems
                        .iter()
                        .zip(m)
                        .all(|(&e, &fe)| x.delta(fe) == phi.arr_map[x.delta(e)])
                })
                .collect();
            candidates.push(maps);
        }
        let sizes: Vec<usize> = candidates.iter().map(Vec::len).collect();
        limit.check(product_size(&sizes))?;
        for_each_choice(&sizes, |choice| {
            let mut f2 = vec![0; c.len()];
            for y in g.objects() {
                for (&e, &fe) in fibres[y].1.iter().zip(&candidates[y][choice[y]]) {
                    f2[e] = fe;
                }
            }
            let equivariant = c.elements().all(|e| {
                g.arrows()
                    .filter(|&a| g.src(a) == c.base(e))
                    .all(|a| f2[x.act(e, a)] == x.act(f2[e], phi.arr_map[a]))
            });
            if equivariant {
                elements.push(XmodMorphism {
                    f0: phi.obj_map.clone(),
                    f1: phi.arr_map.clone(),
                    f2,
                    cod: x.shape(),
                });
            }
        });
    }
    elements.sort();
    let identity = XmodMorphism::identity(x);
    if let Some(pos) = elements.iter().position(|f| *f == identity) {
        elements[..=pos].rotate_right(1);
    }
    ConcreteGroup::from_elements(elements, |f, h| f.compose(h), |i, _| {
        if i == 0 {
            "I".to_string()
        } else {
            format!("f{i}")
        }
    })
}

/// `(H, G, inclusion)` with conjugation `c^a = −a + c + a`, for `H` normal
/// in `G`.
pub fn from_normal_subgroup(g: &FiniteGroup, h: &[usize]) -> Result<CrossedModule> {
    if !g.is_subgroup(h) {
        return Err(Error::MalformedTable("not a subgroup".into()));
    }
    if !g.is_normal_subgroup(h) {
        return Err(Error::NotNormal(format!(
            "{{{}}}",
            h.iter().map(|&e| g.name(e)).collect::<Vec<_>>().join(", ")
        )));
    }
    let (sub, embed) = g.subgroup(h)?;
    let pos = |e: usize| embed.iter().position(|&v| v == e).expect("closed under conjugation");
    CrossedModule::from_groups_unchecked(&sub, g, embed.clone(), |c, a| pos(g.conj(embed[c], a)))
}

/// `(N, G, inclusion)` for a wide subgroupoid `N` of loops of `G` that is
/// closed under conjugation `−a + n + a`.
pub fn from_normal_subgroupoid(g: &FiniteGroupoid, n: &[usize]) -> Result<CrossedModule> {
    let mut inside = vec![false; g.num_arrows()];
    for &a in n {
        if a >= g.num_arrows() {
            return Err(Error::MalformedTable(format!("arrow {a} out of range")));
        }
        inside[a] = true;
    }
    for a in g.arrows().filter(|&a| inside[a]) {
        if g.src(a) != g.tgt(a) {
            return Err(Error::NotNormal(format!("{} is not a loop", g.arrow_name(a))));
        }
    }
    for y in g.objects() {
        if !inside[g.id(y)] {
            return Err(Error::NotNormal(format!("missing identity at {}", g.object_name(y))));
        }
    }
    for a in g.arrows().filter(|&a| inside[a]) {
        for b in g.arrows().filter(|&b| inside[b] && g.src(b) == g.src(a)) {
            if !inside[g.comp(a, b)] || !inside[g.neg(a)] {
                return Err(Error::NotNormal("not a subgroupoid".into()));
            }
        }
        for t in g.arrows().filter(|&t| g.src(t) == g.src(a)) {
            if !inside[g.sum(&[g.neg(t), a, t])] {
                return Err(Error::NotNormal(format!(
                    "conjugate of {} by {} leaves the subgroupoid",
                    g.arrow_name(a),
                    g.arrow_name(t)
                )));
            }
        }
    }
    let members: Vec<usize> = g.arrows().filter(|&a| inside[a]).collect();
    let pos = |a: usize| members.binary_search(&a).expect("member");
    let sub = FiniteGroupoid::from_fn_unchecked(
        g.object_names().to_vec(),
        members.iter().map(|&a| g.arrow_name(a).to_string()).collect(),
        members.iter().map(|&a| g.src(a)).collect(),
        members.iter().map(|&a| g.tgt(a)).collect(),
        |i, j| pos(g.comp(members[i], members[j])),
    );
    let bundle = GroupBundle::from_groupoid(sub)?;
    let action = GroupoidAction::from_fn(bundle, g.clone(), |c, a| {
        pos(g.sum(&[g.neg(a), members[c], a]))
    });
    CrossedModule::new(action, members.clone())
}

fn check_group_action(g: &FiniteGroup, m: &FiniteGroup, act: &impl Fn(usize, usize) -> usize) -> Result<()> {
    // a semidirect product exists exactly when `act` is an action by automorphisms
    semidirect_product(m, g, act).map(|_| ())
}

/// `(M, G, 0)` for a right `G`-module `M`, with `act(m, g) = m^g`.
pub fn from_module_zero_map(
    g: &FiniteGroup,
    m: &FiniteGroup,
    act: impl Fn(usize, usize) -> usize,
) -> Result<CrossedModule> {
    check_group_action(g, m, &act)?;
    if !m.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let delta = vec![g.identity(); m.order()];
    CrossedModule::from_groups_unchecked(m, g, delta, act)
}

/// `(M, N ⋊ G, δ)` with `δ(m) = (η(m), 1)` and `m^{(n,g)} = m^g`, for a
/// morphism `η: M → N` of right `G`-modules.
///
/// The semidirect product uses the element layout of
/// [`semidirect_product`], so `(n, g)` has index `n + |N|·g`.
pub fn from_module_morphism(
    g: &FiniteGroup,
    m: &FiniteGroup,
    m_act: impl Fn(usize, usize) -> usize,
    n: &FiniteGroup,
    n_act: impl Fn(usize, usize) -> usize,
    eta: &[usize],
) -> Result<CrossedModule> {
    check_group_action(g, m, &m_act)?;
    check_group_action(g, n, &n_act)?;
    if !m.is_abelian() || !n.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if eta.len() != m.order() || eta.iter().any(|&v| v >= n.order()) {
        return Err(Error::MalformedTable("η has the wrong shape".into()));
    }
    if !m.is_homomorphism(n, eta) {
        return Err(Error::NotEquivariant("η is not a homomorphism".into()));
    }
    for e in m.elements() {
        for h in g.elements() {
            if eta[m_act(e, h)] != n_act(eta[e], h) {
                return Err(Error::NotEquivariant(format!(
                    "η({}^{}) ≠ η({})^{}",
                    m.name(e),
                    g.name(h),
                    m.name(e),
                    g.name(h)
                )));
            }
        }
    }
    let big = semidirect_product(n, g, &n_act)?;
    let nn = n.order();
    let delta = eta.to_vec();
    let x = CrossedModule::from_groups_unchecked(m, &big, delta, |e, p| m_act(e, p / nn))?;
    let report = validate_crossed_module(&x)?;
    if !report.is_crossed() {
        return Err(Error::Inconsistent(format!("module morphism crossed module:\n{}", report.combined())));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2c2() -> CrossedModule {
        let c2 = FiniteGroup::cyclic(2);
        CrossedModule::from_groups_unchecked(&c2, &c2, vec![0, 1], |c, _| c).unwrap()
    }

    #[test]
    fn c2_identity_boundary_is_crossed() {
        let r = validate_crossed_module(&c2c2()).unwrap();
        assert_eq!(r.verdict, Verdict::Crossed, "{}", r.combined());
    }

    #[test]
    fn trivial_is_crossed_and_has_trivial_aut() {
        let x = CrossedModule::trivial();
        assert!(validate_crossed_module(&x).unwrap().is_crossed());
        assert_eq!(enumerate_xmod_automorphisms(&x, SearchLimit::default()).unwrap().order(), 1);
    }

    #[test]
    fn nonabelian_zero_map_is_pre_crossed_only() {
        let s3 = FiniteGroup::symmetric(3);
        let x = CrossedModule::from_groups_unchecked(&s3, &FiniteGroup::trivial(), vec![0; 6], |c, _| c)
            .unwrap();
        let r = validate_crossed_module(&x).unwrap();
        assert_eq!(r.verdict, Verdict::PreCrossedOnly);
        assert!(r.peiffer.violates("CM2"));
    }

    #[test]
    fn broken_additivity_is_witnessed() {
        let c2 = FiniteGroup::cyclic(2);
        let bundle = GroupBundle::from_groups(vec!["*".into()], &[c2.clone()]);
        // sends everything to the generator under the generator
        let action = GroupoidAction::from_fn(bundle, c2.to_groupoid(), |c, a| if a == 1 { 1 } else { c });
        let r = validate_action(&action).unwrap();
        assert!(r.violates("additive"), "{r}");
    }

    #[test]
    fn base_mismatch() {
        let action = GroupoidAction::from_fn(
            GroupBundle::constant(vec!["x".into()], &FiniteGroup::trivial()),
            FiniteGroupoid::discrete(2),
            |c, _| c,
        );
        assert!(matches!(validate_action(&action), Err(Error::BaseMismatch(1, 2))));
    }

    #[test]
    fn normal_subgroup_constructors() {
        let c4 = FiniteGroup::cyclic(4);
        assert!(from_normal_subgroup(&c4, &[0, 2]).is_ok());
        let s3 = FiniteGroup::symmetric(3);
        let a3: Vec<usize> = s3.elements().filter(|&e| s3.element_order(e) != 2).collect();
        let x = from_normal_subgroup(&s3, &a3).unwrap();
        assert!(validate_crossed_module(&x).unwrap().is_crossed());
        let t = s3.elements().find(|&e| s3.element_order(e) == 2).unwrap();
        assert!(matches!(
            from_normal_subgroup(&s3, &[s3.identity(), t]),
            Err(Error::NotNormal(_))
        ));
        // G ◁ G acts by conjugation
        let all: Vec<usize> = s3.elements().collect();
        let y = from_normal_subgroup(&s3, &all).unwrap();
        for c in s3.elements() {
            for a in s3.elements() {
                assert_eq!(y.act(c, a), s3.conj(c, a));
            }
        }
    }

    #[test]
    fn module_constructors() {
        let c2 = FiniteGroup::cyclic(2);
        let c3 = FiniteGroup::cyclic(3);
        let inv = |m: usize, g: usize| if g == 1 { (3 - m) % 3 } else { m };
        let x = from_module_zero_map(&c2, &c3, inv).unwrap();
        assert!(validate_crossed_module(&x).unwrap().is_crossed());
        let s3 = FiniteGroup::symmetric(3);
        assert!(matches!(
            from_module_zero_map(&FiniteGroup::trivial(), &s3, |m, _| m),
            Err(Error::NotAbelian)
        ));
        let y = from_module_morphism(&c2, &c3, inv, &c3, inv, &[0, 1, 2]).unwrap();
        assert_eq!(y.g().num_arrows(), 6);
        assert!(y.g().vertex_group(0).0.is_isomorphic(&s3));
        // η = 2·id is not equivariant against a trivial action on N
        assert!(matches!(
            from_module_morphism(&c2, &c3, inv, &c3, |n, _| n, &[0, 2, 1]),
            Err(Error::NotEquivariant(_))
        ));
    }

    #[test]
    fn automorphism_groups() {
        let lim = SearchLimit::default();
        assert_eq!(enumerate_xmod_automorphisms(&c2c2(), lim).unwrap().order(), 1);
        let c3 = FiniteGroup::cyclic(3);
        let x = from_module_zero_map(&FiniteGroup::trivial(), &c3, |m, _| m).unwrap();
        let aut = enumerate_xmod_automorphisms(&x, lim).unwrap();
        assert_eq!(aut.order(), 2);
        let f = aut.element(1);
        assert_eq!(f.compose(f), XmodMorphism::identity(&x));
        assert!(f.validate(&x, &x).is_valid());
    }

    #[test]
    fn compose_checks_shapes() {
        let x = c2c2();
        let y = CrossedModule::trivial();
        let ix = XmodMorphism::identity(&x);
        let iy = XmodMorphism::identity(&y);
        assert!(matches!(compose_xmod_morphisms(&ix, &iy), Err(Error::DomainMismatch(_))));
        assert_eq!(compose_xmod_morphisms(&ix, &ix).unwrap(), ix);
    }
}
