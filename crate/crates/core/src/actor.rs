//! The actor 2-crossed module `M₂(𝒞) → FDer*(𝒞) → Aut(𝒞)`.
//!
//! `M₂(𝒞)` is the group of sections `s₂(x) ∈ C(x)` under pointwise
//! addition, mapped into `FDer*(𝒞)` by
//! `ζ(s₂) = (δs₂, a ↦ −s₂(αa)^a + s₂(βa))`. `FDer*` acts on `M₂` by
//! `s₂^t(x) = s₂(αt₀x)^{t₀x}` and `Aut(𝒞)` acts on both. The Peiffer
//! lifting is `⟨s,t⟩(x) = u((s₀⁻¹∗t₀∗s₀)(x))` where `u` is the inverse of
//! `s₁` in `Der*(𝒞)` and `∗` is the product of coadmissible sections.

use crate::derivation::{
    aut_action, delta, element_name, enumerate_fder_star, fder_inverse, identity_first,
    msec_multiply, CoadmissibleSection, FreeDerivation,
};
use crate::group::ConcreteGroup;
use crate::groupoid::product_size;
use crate::two_crossed::{validate_2crossed, TwoCrossedModule};
use crate::crossed::{enumerate_xmod_automorphisms, CrossedModule, XmodMorphism};
use crate::{Error, Result, SearchLimit, ValidationReport};

/// A section `x ↦ s₂(x) ∈ C(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Section2(pub Vec<usize>);

impl Section2 {
    pub fn zero(x: &CrossedModule) -> Self {
        Section2(x.g().objects().map(|y| x.c().zero(y)).collect())
    }

    pub fn add(&self, x: &CrossedModule, other: &Section2) -> Section2 {
        Section2(self.0.iter().zip(&other.0).map(|(&a, &b)| x.c().add(a, b)).collect())
    }

    pub fn is_valid(&self, x: &CrossedModule) -> bool {
        self.0.len() == x.num_objects() && self.0.iter().enumerate().all(|(y, &c)| x.c().base(c) == y)
    }
}

/// The group `M₂(𝒞)`.
pub fn enumerate_m2(x: &CrossedModule, limit: SearchLimit) -> Result<ConcreteGroup<Section2>> {
    let fibres: Vec<&[usize]> = x.g().objects().map(|y| x.c().fibre(y)).collect();
    let sizes: Vec<usize> = fibres.iter().map(|f| f.len()).collect();
    limit.check(product_size(&sizes))?;
    let mut out = Vec::new();
    crate::groupoid::for_each_choice(&sizes, |choice| {
        out.push(Section2(choice.iter().enumerate().map(|(y, &k)| fibres[y][k]).collect()));
    });
    identity_first(&mut out, &Section2::zero(x));
    ConcreteGroup::from_elements(out, |a, b| a.add(x, b), |i, _| element_name("c", i))
}

/// `ζ(s₂) = (δs₂, a ↦ −s₂(αa)^a + s₂(βa))`.
pub fn zeta(x: &CrossedModule, s2: &Section2) -> FreeDerivation {
    let (g, c) = (x.g(), x.c());
    FreeDerivation {
        s0: s2.0.iter().map(|&e| x.delta(e)).collect(),
        s1: g
            .arrows()
            .map(|a| c.add(x.act(c.neg(s2.0[g.src(a)]), a), s2.0[g.tgt(a)]))
            .collect(),
    }
}

/// `s₂^t(x) = s₂(αt₀x)^{t₀x}`.
pub fn fder_action_on_m2(x: &CrossedModule, s2: &Section2, t: &FreeDerivation) -> Section2 {
    let g = x.g();
    Section2(t.s0.iter().map(|&a| x.act(s2.0[g.src(a)], a)).collect())
}

/// `s₂^f = f₂⁻¹ ∘ s₂ ∘ f₀`.
pub fn aut_action_on_m2(x: &CrossedModule, s2: &Section2, f: &XmodMorphism) -> Result<Section2> {
    if f.dom() != x.shape() {
        return Err(Error::NotAutomorphism);
    }
    let inv = f.inverse().ok_or(Error::NotAutomorphism)?;
    Ok(Section2(f.f0.iter().map(|&y| inv.f2[s2.0[y]]).collect()))
}

/// `⟨s, t⟩ = u(s₀⁻¹ ∗ t₀ ∗ s₀)` with `u` the `Der*`-inverse of `s₁`.
pub fn actor_peiffer_lifting(x: &CrossedModule, s: &FreeDerivation, t: &FreeDerivation) -> Result<Section2> {
    let g = x.g();
    let s_inv = fder_inverse(x, s)?;
    let plain = FreeDerivation {
        s0: g.objects().map(|y| g.id(y)).collect(),
        s1: s.s1.clone(),
    };
    let u = fder_inverse(x, &plain)?.s1;
    let s0 = CoadmissibleSection(s.s0.clone());
    let w = msec_multiply(
        g,
        &msec_multiply(g, &CoadmissibleSection(s_inv.s0), &CoadmissibleSection(t.s0.clone())),
        &s0,
    );
    Ok(Section2(w.0.iter().map(|&a| u[a]).collect()))
}

/// The actor of a crossed module together with the concrete groups it is
/// built from. Group indices in `two_crossed` are indices into `m2`,
/// `fder_star` and `aut`.
#[derive(Debug, Clone)]
pub struct Actor {
    pub m2: ConcreteGroup<Section2>,
    pub fder_star: ConcreteGroup<FreeDerivation>,
    pub aut: ConcreteGroup<XmodMorphism>,
    pub two_crossed: TwoCrossedModule,
}

fn lookup<T: Clone + Eq + std::hash::Hash>(g: &ConcreteGroup<T>, e: &T, what: &str) -> Result<usize> {
    g.index_of(e)
        .ok_or_else(|| Error::Inconsistent(format!("{what} lands outside its group")))
}

/// Assembles `M₂(𝒞) →ζ FDer*(𝒞) →Δ Aut(𝒞)` with its actions and lifting.
pub fn build_actor_2crossed(x: &CrossedModule, limit: SearchLimit) -> Result<Actor> {
    let aut = enumerate_xmod_automorphisms(x, limit)?;
    let fder_star = enumerate_fder_star(x, limit)?;
    let m2 = enumerate_m2(x, limit)?;
    let (nl, nm, np) = (m2.order(), fder_star.order(), aut.order());
    limit.check((nm as u128) * (nm as u128) + (nl as u128) * (nm as u128 + np as u128))?;

    let mut d1 = Vec::with_capacity(nl);
    for s2 in m2.elements() {
        d1.push(lookup(&fder_star, &zeta(x, s2), "ζ")?);
    }
    let mut d2 = Vec::with_capacity(nm);
    for s in fder_star.elements() {
        d2.push(lookup(&aut, &delta(x, s), "Δ")?);
    }
    let mut p_on_l = vec![vec![0; nl]; np];
    let mut p_on_m = vec![vec![0; nm]; np];
    for (p, f) in aut.elements().iter().enumerate() {
        for (i, s2) in m2.elements().iter().enumerate() {
            p_on_l[p][i] = lookup(&m2, &aut_action_on_m2(x, s2, f)?, "Aut-action on M₂")?;
        }
        for (i, s) in fder_star.elements().iter().enumerate() {
            p_on_m[p][i] = lookup(&fder_star, &aut_action(x, s, f)?, "Aut-action on FDer*")?;
        }
    }
    let mut m_on_l = vec![vec![0; nl]; nm];
    let mut lift = vec![vec![0; nm]; nm];
    for (j, t) in fder_star.elements().iter().enumerate() {
        for (i, s2) in m2.elements().iter().enumerate() {
            m_on_l[j][i] = lookup(&m2, &fder_action_on_m2(x, s2, t), "FDer*-action on M₂")?;
        }
        for (i, s) in fder_star.elements().iter().enumerate() {
            lift[i][j] = lookup(&m2, &actor_peiffer_lifting(x, s, t)?, "Peiffer lifting")?;
        }
    }
    let two_crossed = TwoCrossedModule {
        l: m2.group().clone(),
        m: fder_star.group().clone(),
        p: aut.group().clone(),
        d1,
        d2,
        p_on_l,
        p_on_m,
        m_on_l,
        lift,
    };
    Ok(Actor {
        m2,
        fder_star,
        aut,
        two_crossed,
    })
}

impl Actor {
    pub fn validate(&self) -> Result<ValidationReport> {
        validate_2crossed(&self.two_crossed)
    }

    /// `Δ: FDer* → Aut` as a one-object structure with the `Aut`-action; in
    /// general only pre-crossed.
    pub fn delta_pre_crossed(&self) -> Result<CrossedModule> {
        let t = &self.two_crossed;
        CrossedModule::from_groups_unchecked(&t.m, &t.p, t.d2.clone(), |s, f| t.p_on_m[f][s])
    }

    /// `ζ: M₂ → FDer*` with the `FDer*`-action, as a one-object crossed
    /// module.
    pub fn zeta_crossed(&self) -> Result<CrossedModule> {
        let t = &self.two_crossed;
        CrossedModule::from_groups_unchecked(&t.l, &t.m, t.d1.clone(), |c, s| t.m_on_l[s][c])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::crossed::{from_module_zero_map, validate_crossed_module};

    fn c2c2() -> CrossedModule {
        let c2 = FiniteGroup::cyclic(2);
        CrossedModule::from_groups_unchecked(&c2, &c2, vec![0, 1], |c, _| c).unwrap()
    }

    #[test]
    fn zeta_on_c2c2() {
        let x = c2c2();
        assert_eq!(zeta(&x, &Section2::zero(&x)), FreeDerivation::identity(&x));
        let z = zeta(&x, &Section2(vec![1]));
        assert_eq!(z, FreeDerivation { s0: vec![1], s1: vec![0, 0] });
    }

    #[test]
    fn actor_of_c2c2() {
        let a = build_actor_2crossed(&c2c2(), SearchLimit::default()).unwrap();
        assert_eq!(a.two_crossed.orders(), (2, 2, 1));
        let r = a.validate().unwrap();
        assert!(r.is_valid(), "{r}");
    }

    #[test]
    fn actor_of_c3_to_trivial() {
        let c3 = FiniteGroup::cyclic(3);
        let x = from_module_zero_map(&FiniteGroup::trivial(), &c3, |m, _| m).unwrap();
        let a = build_actor_2crossed(&x, SearchLimit::default()).unwrap();
        assert_eq!(a.two_crossed.orders(), (3, 1, 2));
        assert!(a.validate().unwrap().is_valid());
        assert!(validate_crossed_module(&a.zeta_crossed().unwrap()).unwrap().is_crossed());
    }

    #[test]
    fn lifting_with_identity() {
        let x = c2c2();
        let fs = enumerate_fder_star(&x, SearchLimit::default()).unwrap();
        let id = FreeDerivation::identity(&x);
        for t in fs.elements() {
            assert_eq!(actor_peiffer_lifting(&x, &id, t).unwrap(), Section2::zero(&x));
            assert_eq!(actor_peiffer_lifting(&x, t, &id).unwrap(), Section2::zero(&x));
        }
    }
}
