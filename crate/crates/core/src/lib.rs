//! Finite crossed modules over groupoids.
//!
//! Everything is tabulated: groups, groupoids, actions and maps are dense
//! index tables, and every construction is checked exhaustively. The crate
//! computes free derivations of a crossed module, its automorphism group and
//! the actor 2-crossed module, together with the braided regular crossed
//! module of automorphisms and the translations between the two.

pub mod actor;
pub mod braided;
pub mod catalog;
pub mod derivation;
pub mod error;
pub mod format;
pub mod group;
pub mod groupoid;
pub mod report;
pub mod two_crossed;
pub mod crossed;

pub use actor::{
    actor_peiffer_lifting, aut_action_on_m2, build_actor_2crossed, enumerate_m2,
    fder_action_on_m2, zeta, Actor, Section2,
};
pub use braided::{
    braided_to_2crossed, build_aut_braided, costar_identification, roundtrip_check,
    search_isomorphism, twocrossed_to_braided, validate_braided, AutBraided, AutHomotopy,
    BraidedReport, BraidedXmod, CostarTwoCrossed, IsomorphismWitness,
};
pub use derivation::{
    aut_action, delta, der_multiply, enumerate_der_star, enumerate_fder, enumerate_fder_star,
    enumerate_g_derivations, enumerate_homotopies, enumerate_msec, fder_inverse, fder_multiply,
    induced_morphism, is_invertible, merge_fder, msec_action_on_der, msec_multiply,
    semidirect_decomposition, split_fder, validate_homotopy, CoadmissibleSection, FreeDerivation,
    Homotopy, Invertibility, PlainDerivation, SemidirectDecomposition,
};
pub use error::{Error, Result};
pub use format::{
    parse, parse_xmod_document, serialize, serialize_two_crossed, serialize_xmod, Document,
    TwoCrossedDocument, XmodDocument,
};
pub use group::{semidirect_product, ConcreteGroup, FiniteGroup};
pub use groupoid::{
    enumerate_groupoid_automorphisms, enumerate_morphisms, validate_groupoid, FiniteGroupoid,
    GroupBundle, GroupoidMorphism, GroupoidTables,
};
pub use report::{ValidationReport, Violation};
pub use two_crossed::{validate_2crossed, TwoCrossedIsomorphism, TwoCrossedModule};
pub use crossed::{
    compose_xmod_morphisms, enumerate_xmod_automorphisms, from_module_morphism,
    from_module_zero_map, from_normal_subgroup, from_normal_subgroupoid, validate_action,
    validate_crossed_module, CrossedModule, GroupoidAction, Shape, Verdict, XmodMorphism,
    XmodReport,
};

/// Upper bound on the number of candidate maps a search may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimit(pub u64);

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit(1_000_000)
    }
}

impl SearchLimit {
    pub const fn new(limit: u64) -> Self {
        SearchLimit(limit)
    }

    pub const fn unbounded() -> Self {
        SearchLimit(u64::MAX)
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::SearchSpaceExceeded {
                needed,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/crossed_modules.md")]
    pub mod crossed_modules {}
    #[doc = include_str!("../../../book/src/free_derivations.md")]
    pub mod free_derivations {}
    #[doc = include_str!("../../../book/src/actor.md")]
    pub mod actor {}
    #[doc = include_str!("../../../book/src/braided.md")]
    pub mod braided {}
    #[doc = include_str!("../../../book/src/format_and_cli.md")]
    pub mod format_and_cli {}
}

#[doc = include_str!("../../../README.md")]
#[cfg(doctest)]
pub struct ReadmeDoctests;
