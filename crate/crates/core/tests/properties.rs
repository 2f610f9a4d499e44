use proptest::prelude::*;
use xmod::*;

const LIM: SearchLimit = SearchLimit::new(1_000_000);

fn cyclic_subgroup(g: &FiniteGroup, a: usize) -> Vec<usize> {
    let mut h = vec![g.identity()];
    let mut p = a;
    while p != g.identity() {
        h.push(p);
        p = g.mul(p, a);
    }
    h.sort();
    h
}

/// `C_k` as a `C_n`-module via `m ↦ m·u`, for a unit `u` with `u^n = 1`.
fn cyclic_module(n: usize, k: usize, flip: bool) -> (FiniteGroup, FiniteGroup, Vec<usize>) {
    let u = if flip && n % 2 == 0 && k > 2 { k - 1 } else { 1 };
    let mut pows = vec![1 % k.max(1)];
    for i in 1..n {
        pows.push(pows[i - 1] * u % k);
    }
    (FiniteGroup::cyclic(n), FiniteGroup::cyclic(k), pows)
}

fn arb_xmod() -> impl Strategy<Value = CrossedModule> {
    prop_oneof![
        (1usize..=3, 1usize..=3, any::<prop::sample::Index>()).prop_map(|(a, b, i)| {
            let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(a), &FiniteGroup::cyclic(b));
            let h = cyclic_subgroup(&g, i.index(g.order()));
            from_normal_subgroup(&g, &h).unwrap()
        }),
        (1usize..=4, 1usize..=5, any::<bool>()).prop_map(|(n, k, flip)| {
            let (g, m, pows) = cyclic_module(n, k, flip);
            from_module_zero_map(&g, &m, |x, y| x * pows[y] % k).unwrap()
        }),
        (0usize..catalog::catalog().len()).prop_map(|i| catalog::catalog()[i].xmod.clone()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_instances_are_crossed(x in arb_xmod()) {
        prop_assert!(validate_crossed_module(&x).unwrap().is_crossed());
    }

    #[test]
    fn delta_is_multiplicative(x in arb_xmod(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let all = enumerate_fder(&x, LIM).unwrap();
        let (s, t) = (&all[i.index(all.len())], &all[j.index(all.len())]);
        let lhs = delta(&x, &fder_multiply(&x, s, t));
        let rhs = delta(&x, s).compose(&delta(&x, t));
        prop_assert_eq!(lhs, rhs);
        let id = FreeDerivation::identity(&x);
        prop_assert_eq!(&fder_multiply(&x, s, &id), s);
        prop_assert_eq!(&fder_multiply(&x, &id, s), s);
    }

    #[test]
    fn fder_product_is_associative(x in arb_xmod(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let all = enumerate_fder(&x, LIM).unwrap();
        let (s, t, u) = (&all[i.index(all.len())], &all[j.index(all.len())], &all[k.index(all.len())]);
        prop_assert_eq!(
            fder_multiply(&x, &fder_multiply(&x, s, t), u),
            fder_multiply(&x, s, &fder_multiply(&x, t, u))
        );
    }

    #[test]
    fn inverse_is_two_sided(x in arb_xmod()) {
        let id = FreeDerivation::identity(&x);
        for s in enumerate_fder_star(&x, LIM).unwrap().elements() {
            let inv = fder_inverse(&x, s).unwrap();
            prop_assert_eq!(&fder_multiply(&x, s, &inv), &id);
            prop_assert_eq!(&fder_multiply(&x, &inv, s), &id);
        }
    }

    #[test]
    fn serialization_is_stable(x in arb_xmod()) {
        let doc = Document::Crossed(XmodDocument { name: Some("p".into()), provenance: None, xmod: x });
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn parser_survives_damage(cut in any::<prop::sample::Index>(), line in any::<prop::sample::Index>(), junk in "[ -~]{0,6}") {
        let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/c2c2.xmod")).unwrap();
        let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
        let i = line.index(lines.len());
        let l = &mut lines[i];
        let at = cut.index(l.len() + 1);
        l.replace_range(at.., &junk);
        let _ = parse(&lines.join("\n"));
    }

    #[test]
    fn group_roundtrip_is_canonical(n in 1usize..=4, sym in any::<bool>()) {
        let p = if sym { FiniteGroup::symmetric(3) } else { FiniteGroup::cyclic(n) };
        let w = roundtrip_check(&TwoCrossedModule::from_group(&p), LIM).unwrap();
        prop_assert!(w.canonical);
    }
}

#[test]
fn search_finds_relabelled_isomorphism() {
    // a 2-crossed module compared with a copy whose P is relabelled
    let p = FiniteGroup::symmetric(3);
    let t = TwoCrossedModule::from_group(&p);
    let perm = [0, 2, 1, 4, 3, 5];
    let n = p.order();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a]][perm[b]] = perm[p.mul(a, b)];
        }
    }
    let mut names = vec![String::new(); n];
    for a in 0..n {
        names[perm[a]] = p.name(a).to_string();
    }
    let q = FiniteGroup::from_table(names, table).unwrap();
    let u = TwoCrossedModule::from_group(&q);
    let iso = search_isomorphism(&t, &u, LIM).unwrap().expect("isomorphic");
    assert!(iso.validate(&t, &u).is_valid());
    let c2 = TwoCrossedModule::from_group(&FiniteGroup::cyclic(6));
    assert!(search_isomorphism(&t, &c2, LIM).unwrap().is_none());
}
