//! Small named crossed modules used by tests, the guide and the CLI corpus.

use crate::group::FiniteGroup;
use crate::groupoid::{FiniteGroupoid, GroupBundle};
use crate::crossed::{
    from_module_morphism, from_module_zero_map, from_normal_subgroup, from_normal_subgroupoid,
    CrossedModule, GroupoidAction,
};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub xmod: CrossedModule,
}

/// `m ↦ m⁻¹` on `C₃`, the action of the generator of `C₂`.
fn inversion(m: usize, g: usize) -> usize {
    if g == 1 {
        (3 - m) % 3
    } else {
        m
    }
}

pub fn trivial() -> CrossedModule {
    CrossedModule::trivial()
}

/// `C₂ → C₂` with `δ = id` and trivial action.
pub fn c2_identity() -> CrossedModule {
    let c2 = FiniteGroup::cyclic(2);
    CrossedModule::new(
        GroupoidAction::from_fn(
            GroupBundle::from_groups(vec!["*".into()], &[c2.clone()]),
            c2.to_groupoid(),
            |c, _| c,
        ),
        vec![0, 1],
    )
    .expect("valid")
}

pub fn c2_in_c4() -> CrossedModule {
    from_normal_subgroup(&FiniteGroup::cyclic(4), &[0, 2]).expect("normal")
}

pub fn a3_in_s3() -> CrossedModule {
    let s3 = FiniteGroup::symmetric(3);
    let a3: Vec<usize> = s3.elements().filter(|&e| s3.element_order(e) != 2).collect();
    from_normal_subgroup(&s3, &a3).expect("normal")
}

pub fn s3_conjugation() -> CrossedModule {
    let s3 = FiniteGroup::symmetric(3);
    let all: Vec<usize> = s3.elements().collect();
    from_normal_subgroup(&s3, &all).expect("normal")
}

/// `C₃ → C₂` with zero boundary and inversion action.
pub fn c3_zero_over_c2() -> CrossedModule {
    from_module_zero_map(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3), inversion).expect("module")
}

/// `C₃ → 1`.
pub fn c3_to_trivial() -> CrossedModule {
    from_module_zero_map(&FiniteGroup::trivial(), &FiniteGroup::cyclic(3), |m, _| m).expect("module")
}

/// `η = id: C₃ → C₃` of `C₂`-modules under inversion, over `C₃ ⋊ C₂ ≅ S₃`.
pub fn c3_identity_over_s3() -> CrossedModule {
    let c2 = FiniteGroup::cyclic(2);
    let c3 = FiniteGroup::cyclic(3);
    from_module_morphism(&c2, &c3, inversion, &c3, inversion, &[0, 1, 2]).expect("module morphism")
}

/// Trivial bundle over the indiscrete groupoid on two objects.
pub fn indiscrete2() -> CrossedModule {
    CrossedModule::trivial_over(FiniteGroupoid::indiscrete(2))
}

/// All loops of `I₂ × C₂` as a normal subgroupoid of it.
pub fn indiscrete2_c2() -> CrossedModule {
    let g = FiniteGroupoid::indiscrete_times(2, &FiniteGroup::cyclic(2));
    let loops: Vec<usize> = g.arrows().filter(|&a| g.src(a) == g.tgt(a)).collect();
    from_normal_subgroupoid(&g, &loops).expect("normal")
}

/// Two disjoint copies of `C₂ → C₂` with `δ = id`.
pub fn disconnected_c2() -> CrossedModule {
    let c2 = FiniteGroup::cyclic(2);
    let bundle = GroupBundle::from_groups(vec!["x".into(), "y".into()], &[c2.clone(), c2]);
    let g = bundle.groupoid().clone();
    let all: Vec<usize> = g.arrows().collect();
    from_normal_subgroupoid(&g, &all).expect("normal")
}

/// Every named instance, smallest first.
pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |name, description, xmod| CatalogEntry {
        name,
        description,
        xmod,
    };
    vec![
        entry("trivial", "trivial crossed module on one object", trivial()),
        entry("c2c2", "C2 -> C2, identity boundary, trivial action", c2_identity()),
        entry("c3_trivial", "C3 -> 1", c3_to_trivial()),
        entry("c2_in_c4", "C2 normal in C4, conjugation", c2_in_c4()),
        entry("a3_in_s3", "A3 normal in S3, conjugation", a3_in_s3()),
        entry("c3_zero_c2", "C3 -> C2, zero boundary, inversion action", c3_zero_over_c2()),
        entry("c3_eta_s3", "C3 -> C3 x| C2 from the identity module morphism", c3_identity_over_s3()),
        entry("s3_conj", "S3 -> S3, identity boundary, conjugation", s3_conjugation()),
        entry("indiscrete2", "trivial bundle over the indiscrete groupoid on two objects", indiscrete2()),
        entry("indiscrete2_c2", "loops of I2 x C2 inside I2 x C2", indiscrete2_c2()),
        entry("disconnected_c2", "two disjoint copies of C2 -> C2", disconnected_c2()),
    ]
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
