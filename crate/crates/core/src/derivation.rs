//! Homotopies, free derivations and the groups built from them.
//!
//! A homotopy over a morphism `g: 𝒞 → 𝒟` is a pair `(s₀, s₁)` where
//! `s₀(x)` is an arrow of `H` with target `g₀(x)` and `s₁` is a
//! `g`-derivation: `s₁(a) ∈ D(g₀ βa)` and
//!
//! ```text
//! s₁(a + b) = s₁(a)^{g₁ b} + s₁(b)
//! ```
//!
//! It induces the morphism `f` with
//!
//! ```text
//! f₀(x) = α s₀(x)
//! f₁(a) = s₀(αa) + g₁a + δs₁(a) − s₀(βa)
//! f₂(c) = (g₂c + s₁δc)^{−s₀(βc)}
//! ```
//!
//! Free derivations are homotopies over the identity. They form a monoid
//! `FDer(𝒞)` whose unit group is `FDer*(𝒞)`, and `Δ: FDer(𝒞) → End(𝒞)`
//! sending `s` to its induced morphism is a monoid morphism.

use crate::group::{semidirect_product, ConcreteGroup, FiniteGroup};
use crate::groupoid::{for_each_choice, is_permutation, product_size, FiniteGroupoid};
use crate::report::ValidationReport;
use crate::crossed::{CrossedModule, XmodMorphism};
use crate::{Error, Result, SearchLimit};

/// A homotopy `(s₀, s₁)` over the base morphism `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homotopy {
    pub s0: Vec<usize>,
    pub s1: Vec<usize>,
    pub g: XmodMorphism,
}

/// A homotopy over the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeDerivation {
    pub s0: Vec<usize>,
    pub s1: Vec<usize>,
}

/// A section `s₀` of the target map whose sources `αs₀` form a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoadmissibleSection(pub Vec<usize>);

/// A derivation `s₁` paired with the identity section.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlainDerivation(pub Vec<usize>);

impl FreeDerivation {
    /// `(x ↦ 1_x, a ↦ 0)`.
    pub fn identity(x: &CrossedModule) -> Self {
        FreeDerivation {
            s0: x.g().objects().map(|y| x.g().id(y)).collect(),
            s1: x.g().arrows().map(|a| x.c().zero(x.g().tgt(a))).collect(),
        }
    }

    pub fn from_parts(s0: &CoadmissibleSection, s1: &PlainDerivation) -> Self {
        FreeDerivation {
            s0: s0.0.clone(),
            s1: s1.0.clone(),
        }
    }

    pub fn as_homotopy(&self, x: &CrossedModule) -> Homotopy {
        Homotopy {
            s0: self.s0.clone(),
            s1: self.s1.clone(),
            g: XmodMorphism::identity(x),
        }
    }

    /// Checks the section condition and the derivation law.
    pub fn validate(&self, x: &CrossedModule) -> ValidationReport {
        validate_homotopy(x, x, &self.as_homotopy(x))
    }
}

impl CoadmissibleSection {
    pub fn identity(g: &FiniteGroupoid) -> Self {
        CoadmissibleSection(g.objects().map(|y| g.id(y)).collect())
    }

    pub fn is_coadmissible(&self, g: &FiniteGroupoid) -> bool {
        self.0.len() == g.num_objects()
            && self.0.iter().enumerate().all(|(y, &a)| g.tgt(a) == y)
            && is_permutation(&self.0.iter().map(|&a| g.src(a)).collect::<Vec<_>>())
    }
}

impl PlainDerivation {
    pub fn zero(x: &CrossedModule) -> Self {
        PlainDerivation(x.g().arrows().map(|a| x.c().zero(x.g().tgt(a))).collect())
    }

    pub fn as_free(&self, x: &CrossedModule) -> FreeDerivation {
        FreeDerivation::from_parts(&CoadmissibleSection::identity(x.g()), self)
    }
}

/// Checks section typing and the `g`-derivation law exhaustively.
pub fn validate_homotopy(dom: &CrossedModule, cod: &CrossedModule, h: &Homotopy) -> ValidationReport {
    let mut report = ValidationReport::new();
    let (g, hh, d) = (dom.g(), cod.g(), cod.c());
    let base = &h.g;
    if h.s0.len() != g.num_objects()
        || h.s1.len() != g.num_arrows()
        || base.dom() != dom.shape()
        || base.cod != cod.shape()
        || h.s0.iter().any(|&a| a >= hh.num_arrows())
        || h.s1.iter().any(|&c| c >= d.len())
    {
        report.fail("shape", "homotopy tables do not match the crossed modules");
        return report;
    }
    for y in g.objects() {
        report.check(hh.tgt(h.s0[y]) == base.f0[y], "section target", || {
            format!("s₀({}) = {}", g.object_name(y), hh.arrow_name(h.s0[y]))
        });
    }
    for a in g.arrows() {
        report.check(d.base(h.s1[a]) == base.f0[g.tgt(a)], "derivation fibre", || {
            format!("s₁({}) = {}", g.arrow_name(a), d.name(h.s1[a]))
        });
    }
    if !report.is_valid() {
        return report;
    }
    for a in g.arrows() {
        for b in g.arrows().filter(|&b| g.src(b) == g.tgt(a)) {
            let lhs = h.s1[g.comp(a, b)];
            let rhs = d.add(cod.act(h.s1[a], base.f1[b]), h.s1[b]);
            report.check(lhs == rhs, "derivation law", || {
                format!(
                    "s₁({} + {}) = {} but s₁(a)^g(b) + s₁(b) = {}",
                    g.arrow_name(a),
                    g.arrow_name(b),
                    d.name(lhs),
                    d.name(rhs)
                )
            });
        }
    }
    report
}

/// The induced tables, without any checks.
pub(crate) fn induced_tables(
    dom: &CrossedModule,
    cod: &CrossedModule,
    s0: &[usize],
    s1: &[usize],
    base: &XmodMorphism,
) -> XmodMorphism {
    let (g, hh, c, d) = (dom.g(), cod.g(), dom.c(), cod.c());
    let f0 = s0.iter().map(|&a| hh.src(a)).collect();
    let f1 = g
        .arrows()
        .map(|a| {
            hh.sum(&[
                s0[g.src(a)],
                base.f1[a],
                cod.delta(s1[a]),
                hh.neg(s0[g.tgt(a)]),
            ])
        })
        .collect();
    let f2 = c
        .elements()
        .map(|e| {
            let inner = d.add(base.f2[e], s1[dom.delta(e)]);
            cod.act(inner, hh.neg(s0[c.base(e)]))
        })
        .collect();
    XmodMorphism {
        f0,
        f1,
        f2,
        cod: cod.shape(),
    }
}

/// The morphism induced by a homotopy.
///
/// Debug builds re-validate the result as a crossed-module morphism.
pub fn induced_morphism(dom: &CrossedModule, cod: &CrossedModule, h: &Homotopy) -> Result<XmodMorphism> {
    let report = validate_homotopy(dom, cod, h);
    if !report.is_valid() {
        return Err(Error::InvalidHomotopy(report.to_string()));
    }
    let f = induced_tables(dom, cod, &h.s0, &h.s1, &h.g);
    if cfg!(debug_assertions) {
        let check = f.validate(dom, cod);
        if !check.is_valid() {
            return Err(Error::Inconsistent(format!("induced morphism is not a morphism:\n{check}")));
        }
    }
    Ok(f)
}

/// `Δ(s)`, the endomorphism induced by a free derivation.
pub fn delta(x: &CrossedModule, s: &FreeDerivation) -> XmodMorphism {
    induced_tables(x, x, &s.s0, &s.s1, &XmodMorphism::identity(x))
}

/// `s ∗ t`, with `(s∗t)₀(z) = s₀(g₀z) + t₀(z)` and
/// `(s∗t)₁(a) = t₁(a) + s₁(g₁a)^{t₀(βa)}` where `g = Δ(t)`.
pub fn fder_multiply(x: &CrossedModule, s: &FreeDerivation, t: &FreeDerivation) -> FreeDerivation {
    let (g, c) = (x.g(), x.c());
    let dt = delta(x, t);
    FreeDerivation {
        s0: g.objects().map(|z| g.comp(s.s0[dt.f0[z]], t.s0[z])).collect(),
        s1: g
            .arrows()
            .map(|a| c.add(t.s1[a], x.act(s.s1[dt.f1[a]], t.s0[g.tgt(a)])))
            .collect(),
    }
}

/// Why a free derivation fails to be invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invertibility {
    Invertible,
    /// Two distinct arrows with the same image under `Δ(s)₁`.
    Collapses(usize, usize),
}

impl Invertibility {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Invertibility::Invertible)
    }
}

fn first_collision(map: &[usize]) -> Option<(usize, usize)> {
    let mut seen = std::collections::HashMap::new();
    for (i, &v) in map.iter().enumerate() {
        if let Some(j) = seen.insert(v, i) {
            return Some((j, i));
        }
    }
    None
}

/// Decides invertibility from bijectivity of `Δ(s)₁` and cross-checks it
/// against bijectivity of `Δ(s)₂`; the two always agree for a crossed
/// module, so disagreement is reported as [`Error::Inconsistent`].
pub fn is_invertible(x: &CrossedModule, s: &FreeDerivation) -> Result<Invertibility> {
    let f = delta(x, s);
    let on_arrows = first_collision(&f.f1);
    let on_elements = is_permutation(&f.f2);
    if on_arrows.is_none() != on_elements {
        return Err(Error::Inconsistent(format!(
            "Δ(s)₁ bijective: {}, Δ(s)₂ bijective: {}",
            on_arrows.is_none(),
            on_elements
        )));
    }
    Ok(match on_arrows {
        None => Invertibility::Invertible,
        Some((a, b)) => Invertibility::Collapses(a, b),
    })
}

/// The inverse `s₀⁻¹(x) = −s₀(f₀⁻¹x)`, `s₁⁻¹(a) = −s₁(f₁⁻¹a)^{s₀⁻¹(βa)}`
/// with `f = Δ(s)`.
pub fn fder_inverse(x: &CrossedModule, s: &FreeDerivation) -> Result<FreeDerivation> {
    if !is_invertible(x, s)?.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let f = delta(x, s).inverse().ok_or(Error::NotInvertible)?;
    let (g, c) = (x.g(), x.c());
    let s0: Vec<usize> = g.objects().map(|y| g.neg(s.s0[f.f0[y]])).collect();
    let s1 = g
        .arrows()
        .map(|a| x.act(c.neg(s.s1[f.f1[a]]), s0[g.tgt(a)]))
        .collect();
    Ok(FreeDerivation { s0, s1 })
}

/// All sections `s₀` with `s₀(x)` ending at `obj_map(x)`, in lexicographic
/// order of the costar positions.
pub fn enumerate_sections_over(g: &FiniteGroupoid, obj_map: &[usize]) -> Vec<Vec<usize>> {
    let costars: Vec<Vec<usize>> = obj_map
        .iter()
        .map(|&y| g.costar(y).expect("object in range"))
        .collect();
    let sizes: Vec<usize> = costars.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    for_each_choice(&sizes, |choice| {
        out.push(choice.iter().enumerate().map(|(i, &k)| costars[i][k]).collect());
    });
    out
}

fn sections_count(g: &FiniteGroupoid, obj_map: &[usize]) -> u128 {
    obj_map.iter().map(|&y| g.costar(y).expect("object in range").len() as u128).product()
}

fn derivation_candidates(dom: &CrossedModule, cod: &CrossedModule, base: &XmodMorphism) -> (Vec<usize>, u128) {
    let plan = dom.g().word_plan();
    let count = product_size(
        &plan
            .generators
            .iter()
            .map(|&a| cod.c().fibre(base.f0[dom.g().tgt(a)]).len())
            .collect::<Vec<_>>(),
    );
    (plan.generators, count)
}

/// All `g`-derivations `G → D` for the base morphism `g: 𝒞 → 𝒟`.
///
/// Values on a generating set are chosen freely and extended along the
/// word plan; each extension is then checked against the full law.
pub fn enumerate_g_derivations(
    dom: &CrossedModule,
    cod: &CrossedModule,
    base: &XmodMorphism,
    limit: SearchLimit,
) -> Result<Vec<Vec<usize>>> {
    let (g, d) = (dom.g(), cod.c());
    let plan = g.word_plan();
    let options: Vec<&[usize]> = plan
        .generators
        .iter()
        .map(|&a| d.fibre(base.f0[g.tgt(a)]))
        .collect();
    let sizes: Vec<usize> = options.iter().map(|o| o.len()).collect();
    limit.check(product_size(&sizes))?;
    let mut out = Vec::new();
    for_each_choice(&sizes, |choice| {
        let mut s1 = vec![usize::MAX; g.num_arrows()];
        for y in g.objects() {
            s1[g.id(y)] = d.zero(base.f0[y]);
        }
        for (i, &a) in plan.generators.iter().enumerate() {
            s1[a] = options[i][choice[i]];
        }
        for st in &plan.steps {
            s1[st.arrow] = d.add(cod.act(s1[st.prefix], base.f1[st.generator]), s1[st.generator]);
        }
        let lawful = g.arrows().all(|a| {
            g.arrows()
                .filter(|&b| g.src(b) == g.tgt(a))
                .all(|b| s1[g.comp(a, b)] == d.add(cod.act(s1[a], base.f1[b]), s1[b]))
        });
        if lawful {
            out.push(s1);
        }
    });
    Ok(out)
}

/// All homotopies over `base`.
pub fn enumerate_homotopies(
    dom: &CrossedModule,
    cod: &CrossedModule,
    base: &XmodMorphism,
    limit: SearchLimit,
) -> Result<Vec<Homotopy>> {
    let (_, der_count) = derivation_candidates(dom, cod, base);
    limit.check(sections_count(cod.g(), &base.f0).saturating_mul(der_count))?;
    let ders = enumerate_g_derivations(dom, cod, base, limit)?;
    let mut out = Vec::new();
    for s0 in enumerate_sections_over(cod.g(), &base.f0) {
        for s1 in &ders {
            out.push(Homotopy {
                s0: s0.clone(),
                s1: s1.clone(),
                g: base.clone(),
            });
        }
    }
    Ok(out)
}

/// The monoid `FDer(𝒞)`, ordered by section then derivation; the identity
/// comes first.
pub fn enumerate_fder(x: &CrossedModule, limit: SearchLimit) -> Result<Vec<FreeDerivation>> {
    let id = XmodMorphism::identity(x);
    let mut out: Vec<FreeDerivation> = enumerate_homotopies(x, x, &id, limit)?
        .into_iter()
        .map(|h| FreeDerivation { s0: h.s0, s1: h.s1 })
        .collect();
    identity_first(&mut out, &FreeDerivation::identity(x));
    Ok(out)
}

pub(crate) fn identity_first<T: PartialEq>(v: &mut [T], id: &T) {
    if let Some(pos) = v.iter().position(|e| e == id) {
        v[..=pos].rotate_right(1);
    }
}

/// The group `FDer*(𝒞)` of invertible free derivations under `∗`.
pub fn enumerate_fder_star(x: &CrossedModule, limit: SearchLimit) -> Result<ConcreteGroup<FreeDerivation>> {
    let mut units = Vec::new();
    for s in enumerate_fder(x, limit)? {
        if is_invertible(x, &s)?.is_invertible() {
            units.push(s);
        }
    }
    ConcreteGroup::from_elements(units, |s, t| fder_multiply(x, s, t), |i, _| element_name("s", i))
}

pub(crate) fn element_name(prefix: &str, i: usize) -> String {
    if i == 0 {
        "1".to_string()
    } else {
        format!("{prefix}{i}")
    }
}

/// `s^f = (f₁⁻¹∘s₀∘f₀, f₂⁻¹∘s₁∘f₁)` for an automorphism `f`.
///
/// With the product `f·g = f∘g` on `Aut(𝒞)` this is a right action and
/// `Δ(s^f) = f⁻¹∘Δ(s)∘f`.
pub fn aut_action(x: &CrossedModule, s: &FreeDerivation, f: &XmodMorphism) -> Result<FreeDerivation> {
    if f.dom() != x.shape() {
        return Err(Error::NotAutomorphism);
    }
    let inv = f.inverse().ok_or(Error::NotAutomorphism)?;
    Ok(FreeDerivation {
        s0: f.f0.iter().map(|&y| inv.f1[s.s0[y]]).collect(),
        s1: f.f1.iter().map(|&a| inv.f2[s.s1[a]]).collect(),
    })
}

/// `(s₀∗t₀)(x) = s₀(α t₀x) + t₀x`.
pub fn msec_multiply(g: &FiniteGroupoid, s0: &CoadmissibleSection, t0: &CoadmissibleSection) -> CoadmissibleSection {
    CoadmissibleSection(
        g.objects()
            .map(|y| g.comp(s0.0[g.src(t0.0[y])], t0.0[y]))
            .collect(),
    )
}

/// The group `M(G)` of coadmissible sections.
pub fn enumerate_msec(g: &FiniteGroupoid, limit: SearchLimit) -> Result<ConcreteGroup<CoadmissibleSection>> {
    let ids: Vec<usize> = g.objects().collect();
    limit.check(sections_count(g, &ids))?;
    let mut out: Vec<CoadmissibleSection> = enumerate_sections_over(g, &ids)
        .into_iter()
        .map(CoadmissibleSection)
        .filter(|s| s.is_coadmissible(g))
        .collect();
    identity_first(&mut out, &CoadmissibleSection::identity(g));
    ConcreteGroup::from_elements(out, |s, t| msec_multiply(g, s, t), |i, _| element_name("m", i))
}

/// `(s₁∗t₁)(a) = t₁a + s₁(a + δt₁a)`.
pub fn der_multiply(x: &CrossedModule, s1: &PlainDerivation, t1: &PlainDerivation) -> PlainDerivation {
    let (g, c) = (x.g(), x.c());
    PlainDerivation(
        g.arrows()
            .map(|a| c.add(t1.0[a], s1.0[g.comp(a, x.delta(t1.0[a]))]))
            .collect(),
    )
}

/// `s₁^{t₀}(a) = s₁(t₀(αa) + a − t₀(βa))^{t₀(βa)}`.
pub fn msec_action_on_der(x: &CrossedModule, s1: &PlainDerivation, t0: &CoadmissibleSection) -> PlainDerivation {
    let g = x.g();
    PlainDerivation(
        g.arrows()
            .map(|a| {
                let (p, q) = (t0.0[g.src(a)], t0.0[g.tgt(a)]);
                x.act(s1.0[g.sum(&[p, a, g.neg(q)])], q)
            })
            .collect(),
    )
}

/// The group `Der*(𝒞)` of derivations whose induced endomorphism is an
/// automorphism.
pub fn enumerate_der_star(x: &CrossedModule, limit: SearchLimit) -> Result<ConcreteGroup<PlainDerivation>> {
    let id = XmodMorphism::identity(x);
    let mut out = Vec::new();
    for s1 in enumerate_g_derivations(x, x, &id, limit)? {
        let d = PlainDerivation(s1);
        if is_invertible(x, &d.as_free(x))?.is_invertible() {
            out.push(d);
        }
    }
    identity_first(&mut out, &PlainDerivation::zero(x));
    ConcreteGroup::from_elements(out, |s, t| der_multiply(x, s, t), |i, _| element_name("d", i))
}

/// `s ↦ (s₀, s₁)`; note `s = (s₀, 0) ∗ (1, s₁)`.
pub fn split_fder(x: &CrossedModule, s: &FreeDerivation) -> Result<(CoadmissibleSection, PlainDerivation)> {
    if !is_invertible(x, s)?.is_invertible() {
        return Err(Error::NotInvertible);
    }
    Ok((CoadmissibleSection(s.s0.clone()), PlainDerivation(s.s1.clone())))
}

pub fn merge_fder(pair: &(CoadmissibleSection, PlainDerivation)) -> FreeDerivation {
    FreeDerivation::from_parts(&pair.0, &pair.1)
}

/// `FDer*(𝒞)` next to `Der*(𝒞) ⋊ M(G)` and the map between them.
#[derive(Debug, Clone)]
pub struct SemidirectDecomposition {
    pub fder_star: ConcreteGroup<FreeDerivation>,
    pub der_star: ConcreteGroup<PlainDerivation>,
    pub msec: ConcreteGroup<CoadmissibleSection>,
    /// `Der* ⋊ M(G)` with `(n₁,h₁)(n₂,h₂) = (n₁^{h₂}∗n₂, h₁h₂)`.
    pub product: FiniteGroup,
    /// `split[i]` is the index in `product` of the split of element `i`.
    pub split: Vec<usize>,
}

impl SemidirectDecomposition {
    /// Checks that `split` is a bijective homomorphism.
    pub fn is_isomorphism(&self) -> bool {
        is_permutation(&self.split)
            && self.fder_star.group().is_homomorphism(&self.product, &self.split)
    }
}

/// Builds both sides of `FDer*(𝒞) ≅ Der*(𝒞) ⋊ M(G)` and the splitting map.
pub fn semidirect_decomposition(x: &CrossedModule, limit: SearchLimit) -> Result<SemidirectDecomposition> {
    let fder_star = enumerate_fder_star(x, limit)?;
    let der_star = enumerate_der_star(x, limit)?;
    let msec = enumerate_msec(x.g(), limit)?;
    let lookup_der = |d: &PlainDerivation| {
        der_star
            .index_of(d)
            .ok_or_else(|| Error::Inconsistent("derivation outside Der*".into()))
    };
    let mut act = vec![vec![0; der_star.order()]; msec.order()];
    for (h, t0) in msec.elements().iter().enumerate() {
        for (n, s1) in der_star.elements().iter().enumerate() {
            act[h][n] = lookup_der(&msec_action_on_der(x, s1, t0))?;
        }
    }
    let product = semidirect_product(der_star.group(), msec.group(), |n, h| act[h][n])?;
    let nn = der_star.order();
    let mut split = Vec::with_capacity(fder_star.order());
    for s in fder_star.elements() {
        let (s0, s1) = split_fder(x, s)?;
        let h = msec
            .index_of(&s0)
            .ok_or_else(|| Error::Inconsistent("section outside M(G)".into()))?;
        split.push(lookup_der(&s1)? + nn * h);
    }
    Ok(SemidirectDecomposition {
        fder_star,
        der_star,
        msec,
        product,
        split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::crossed::from_normal_subgroup;

    fn c2c2() -> CrossedModule {
        let c2 = FiniteGroup::cyclic(2);
        CrossedModule::from_groups_unchecked(&c2, &c2, vec![0, 1], |c, _| c).unwrap()
    }

    #[test]
    fn c2c2_counts() {
        let x = c2c2();
        let lim = SearchLimit::default();
        assert_eq!(enumerate_fder(&x, lim).unwrap().len(), 4);
        assert_eq!(enumerate_fder_star(&x, lim).unwrap().order(), 2);
    }

    #[test]
    fn collapsing_derivation() {
        let x = c2c2();
        let s = FreeDerivation { s0: vec![0], s1: vec![0, 1] };
        let f = delta(&x, &s);
        assert_eq!(f.f1, vec![0, 0]);
        assert_eq!(is_invertible(&x, &s).unwrap(), Invertibility::Collapses(0, 1));
        assert!(matches!(fder_inverse(&x, &s), Err(Error::NotInvertible)));
    }

    #[test]
    fn section_only_derivation_is_an_involution() {
        let x = c2c2();
        let s = FreeDerivation { s0: vec![1], s1: vec![0, 0] };
        assert!(is_invertible(&x, &s).unwrap().is_invertible());
        assert_eq!(fder_inverse(&x, &s).unwrap(), s);
        assert_eq!(fder_multiply(&x, &s, &s), FreeDerivation::identity(&x));
    }

    #[test]
    fn conjugating_section_in_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let a3: Vec<usize> = s3.elements().filter(|&e| s3.element_order(e) != 2).collect();
        let x = from_normal_subgroup(&s3, &a3).unwrap();
        let t = s3.elements().find(|&e| s3.element_order(e) == 2).unwrap();
        let s = FreeDerivation { s0: vec![t], s1: vec![x.c().zero(0); 6] };
        let h = s.as_homotopy(&x);
        let f = induced_morphism(&x, &x, &h).unwrap();
        for a in s3.elements() {
            assert_eq!(f.f1[a], s3.product(&[t, a, s3.inv(t)]));
        }
    }

    #[test]
    fn bad_homotopy_is_rejected() {
        let x = c2c2();
        let h = FreeDerivation { s0: vec![0], s1: vec![1, 0] }.as_homotopy(&x);
        assert!(matches!(induced_morphism(&x, &x, &h), Err(Error::InvalidHomotopy(_))));
    }

    #[test]
    fn indiscrete_sections() {
        let g = FiniteGroupoid::indiscrete(2);
        let m = enumerate_msec(&g, SearchLimit::default()).unwrap();
        assert_eq!(m.order(), 2);
        let swap = m.element(1);
        assert_eq!(msec_multiply(&g, swap, swap), CoadmissibleSection::identity(&g));
    }

    #[test]
    fn semidirect_for_c2c2() {
        let d = semidirect_decomposition(&c2c2(), SearchLimit::default()).unwrap();
        assert_eq!(d.der_star.order(), 1);
        assert_eq!(d.msec.order(), 2);
        assert!(d.is_isomorphism());
    }
}
