mod oracle;

use oracle::Raw;
use xmod::*;

const LIM: SearchLimit = SearchLimit::new(1_000_000);

#[test]
fn c2c2_counts() {
    let x = catalog::c2_identity();
    let r = Raw::new(&x);
    assert_eq!(oracle::free_derivations(&r).len(), 4);
    assert_eq!(oracle::fder_star_order(&x), 2);
    assert_eq!(oracle::m2_order(&x), 2);
    assert_eq!(enumerate_fder(&x, LIM).unwrap().len(), 4);
    assert_eq!(enumerate_fder_star(&x, LIM).unwrap().order(), 2);
    assert_eq!(enumerate_m2(&x, LIM).unwrap().order(), 2);
}

#[test]
fn indiscrete_msec() {
    let g = FiniteGroupoid::indiscrete(2);
    assert_eq!(oracle::msec_order(&g), 2);
    assert_eq!(enumerate_msec(&g, LIM).unwrap().order(), 2);
}

#[test]
fn fder_matches_oracle_on_catalog() {
    for e in catalog::catalog() {
        let r = Raw::new(&e.xmod);
        let mut want = oracle::free_derivations(&r);
        let mut got: Vec<_> = enumerate_fder(&e.xmod, LIM)
            .unwrap()
            .into_iter()
            .map(|s| (s.s0, s.s1))
            .collect();
        want.sort();
        got.sort();
        assert_eq!(got, want, "{}", e.name);
        assert_eq!(enumerate_fder_star(&e.xmod, LIM).unwrap().order(), oracle::fder_star_order(&e.xmod), "{}", e.name);
        assert_eq!(enumerate_m2(&e.xmod, LIM).unwrap().order(), oracle::m2_order(&e.xmod), "{}", e.name);
        assert_eq!(enumerate_msec(e.xmod.g(), LIM).unwrap().order(), oracle::msec_order(e.xmod.g()), "{}", e.name);
    }
}

#[test]
fn product_matches_oracle() {
    for name in ["c2c2", "c2_in_c4", "indiscrete2_c2", "disconnected_c2"] {
        let x = catalog::by_name(name).unwrap().xmod;
        let r = Raw::new(&x);
        let all = enumerate_fder(&x, LIM).unwrap();
        for s in &all {
            for t in &all {
                let p = fder_multiply(&x, s, t);
                let q = oracle::product(&r, &(s.s0.clone(), s.s1.clone()), &(t.s0.clone(), t.s1.clone()));
                assert_eq!((p.s0, p.s1), q, "{name}");
            }
        }
    }
}

#[test]
fn formula_inverse_equals_searched_inverse() {
    for e in catalog::catalog() {
        let r = Raw::new(&e.xmod);
        let all = oracle::free_derivations(&r);
        for s in enumerate_fder(&e.xmod, LIM).unwrap() {
            let searched = oracle::searched_inverse(&r, &all, &(s.s0.clone(), s.s1.clone()));
            match (fder_inverse(&e.xmod, &s), searched) {
                (Ok(inv), Some(t)) => assert_eq!((inv.s0, inv.s1), t, "{}", e.name),
                (Err(Error::NotInvertible), None) => {}
                (got, want) => panic!("{}: {got:?} vs {want:?}", e.name),
            }
        }
    }
}

#[test]
fn groupoid_automorphisms_match_oracle() {
    for g in [
        FiniteGroupoid::discrete(2),
        FiniteGroupoid::indiscrete(2),
        FiniteGroupoid::indiscrete(3),
        FiniteGroup::cyclic(4).to_groupoid(),
    ] {
        let got = enumerate_groupoid_automorphisms(&g, LIM).unwrap().order();
        assert_eq!(got, oracle::groupoid_automorphism_count(&g));
    }
}

#[test]
fn s3_automorphisms_match_oracle() {
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(oracle::group_automorphism_count(&s3), 6);
    assert_eq!(s3.isomorphisms(&s3, LIM).unwrap().len(), 6);
}
