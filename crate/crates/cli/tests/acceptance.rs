//! One PASS/FAIL line per acceptance criterion, over the shipped corpus.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use xmod::*;

const LIM: SearchLimit = SearchLimit::new(1_000_000);

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_files() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "xmod"))
        .collect();
    v.sort();
    v
}

struct Corpus {
    xmods: Vec<(String, CrossedModule)>,
    two_crossed: Vec<(String, TwoCrossedModule)>,
}

fn load_corpus() -> Corpus {
    let mut c = Corpus { xmods: Vec::new(), two_crossed: Vec::new() };
    for p in corpus_files() {
        let name = p.file_stem().unwrap().to_string_lossy().into_owned();
        match parse(&std::fs::read_to_string(&p).unwrap()).unwrap() {
            Document::Crossed(d) => c.xmods.push((name, d.xmod)),
            Document::TwoCrossed(d) => c.two_crossed.push((name, d.two_crossed)),
        }
    }
    c
}

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn axiom_suite(c: &Corpus) -> Outcome {
    let required = ["a3_in_s3", "c2c2", "c3_zero_c2", "c3_eta_s3"];
    for r in required {
        ensure(c.xmods.iter().any(|(n, _)| n == r), || format!("corpus lacks {r}"))?;
    }
    let multi = c.xmods.iter().filter(|(_, x)| x.num_objects() > 1).count();
    ensure(c.xmods.len() >= 8 && multi >= 2, || format!("{} instances, {multi} multi-object", c.xmods.len()))?;
    let mut checked = 0;
    for (n, x) in &c.xmods {
        let a = validate_action(x.action()).map_err(|e| e.to_string())?;
        let r = validate_crossed_module(x).map_err(|e| e.to_string())?;
        ensure(a.is_valid() && r.is_crossed(), || format!("{n}: {}", r.combined()))?;
        checked += a.checked + r.combined().checked;
    }
    Ok(format!("{} instances, {multi} multi-object, {checked} axiom instances", c.xmods.len()))
}

fn homotopy_closure(c: &Corpus) -> Outcome {
    let mut count = 0;
    for (n, x) in &c.xmods {
        let aut = enumerate_xmod_automorphisms(x, LIM).map_err(|e| e.to_string())?;
        for f in aut.elements() {
            for h in enumerate_homotopies(x, x, f, LIM).map_err(|e| e.to_string())? {
                let g = induced_morphism(x, x, &h).map_err(|e| format!("{n}: {e}"))?;
                let r = g.validate(x, x);
                ensure(r.is_valid(), || format!("{n}: {r}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} homotopies"))
}

fn der_monoid(c: &Corpus) -> Outcome {
    let mut pairs = 0u64;
    for (n, x) in &c.xmods {
        let all = enumerate_fder(x, LIM).map_err(|e| e.to_string())?;
        if all.len() > 64 {
            continue;
        }
        let index: HashMap<&FreeDerivation, usize> = all.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut table = vec![vec![0; all.len()]; all.len()];
        for (i, s) in all.iter().enumerate() {
            for (j, t) in all.iter().enumerate() {
                let p = fder_multiply(x, s, t);
                table[i][j] = *index.get(&p).ok_or_else(|| format!("{n}: product leaves FDer"))?;
                ensure(delta(x, &p) == delta(x, s).compose(&delta(x, t)), || format!("{n}: Δ(s∗t) ≠ Δs∘Δt"))?;
                pairs += 1;
            }
        }
        let e = index[&FreeDerivation::identity(x)];
        for a in 0..all.len() {
            ensure(table[e][a] == a && table[a][e] == a, || format!("{n}: identity"))?;
            for b in 0..all.len() {
                for d in 0..all.len() {
                    ensure(table[table[a][b]][d] == table[a][table[b][d]], || format!("{n}: associativity"))?;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn invertibility(c: &Corpus) -> Outcome {
    let mut n_inv = 0;
    let mut n_all = 0;
    for (n, x) in &c.xmods {
        let r = oracle::Raw::new(x);
        let every = oracle::free_derivations(&r);
        for s in enumerate_fder(x, LIM).map_err(|e| e.to_string())? {
            let f = delta(x, &s);
            let b1 = oracle_bijective(&f.f1);
            let b2 = oracle_bijective(&f.f2);
            let searched = oracle::searched_inverse(&r, &every, &(s.s0.clone(), s.s1.clone()));
            ensure(b1 == b2 && b1 == searched.is_some(), || format!("{n}: {b1} {b2} {}", searched.is_some()))?;
            if let Some(t) = searched {
                let inv = fder_inverse(x, &s).map_err(|e| format!("{n}: {e}"))?;
                ensure((inv.s0, inv.s1) == t, || format!("{n}: formula inverse differs from search"))?;
                n_inv += 1;
            }
            n_all += 1;
        }
    }
    Ok(format!("{n_all} free derivations, {n_inv} invertible"))
}

fn oracle_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&v| v < map.len() && !std::mem::replace(&mut seen[v], true))
}

fn pre_crossed(c: &Corpus) -> Outcome {
    let mut count = 0;
    for (n, x) in &c.xmods {
        let aut = enumerate_xmod_automorphisms(x, LIM).map_err(|e| e.to_string())?;
        let star = enumerate_fder_star(x, LIM).map_err(|e| e.to_string())?;
        let id = XmodMorphism::identity(x);
        for s in star.elements() {
            ensure(&aut_action(x, s, &id).map_err(|e| e.to_string())? == s, || format!("{n}: s^I ≠ s"))?;
            for f in aut.elements() {
                let sf = aut_action(x, s, f).map_err(|e| e.to_string())?;
                let finv = f.inverse().ok_or("automorphism without inverse")?;
                let cm1 = finv.compose(&delta(x, s)).compose(f);
                ensure(delta(x, &sf) == cm1, || format!("{n}: CM1"))?;
                for g in aut.elements() {
                    let lhs = aut_action(x, s, &f.compose(g)).map_err(|e| e.to_string())?;
                    let rhs = aut_action(x, &sf, g).map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || format!("{n}: s^(fg) ≠ (s^f)^g"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} (s, f, g) triples"))
}

fn semidirect(c: &Corpus) -> Outcome {
    for (n, x) in &c.xmods {
        let d = semidirect_decomposition(x, LIM).map_err(|e| e.to_string())?;
        ensure(d.is_isomorphism(), || format!("{n}: split is not an isomorphism"))?;
        let nn = d.der_star.order();
        for (i, s) in d.fder_star.elements().iter().enumerate() {
            let k = d.split[i];
            let pair = (d.msec.element(k / nn).clone(), d.der_star.element(k % nn).clone());
            ensure(&merge_fder(&pair) == s, || format!("{n}: merge∘split ≠ id"))?;
            ensure(split_fder(x, s).map_err(|e| e.to_string())? == pair, || format!("{n}: split mismatch"))?;
        }
        // brute force: the product table agrees elementwise
        let g = d.fder_star.group();
        for a in g.elements() {
            for b in g.elements() {
                ensure(d.split[g.mul(a, b)] == d.product.mul(d.split[a], d.split[b]), || format!("{n}: not a homomorphism"))?;
            }
        }
    }
    Ok(format!("{} instances", c.xmods.len()))
}

fn zeta_crossed(c: &Corpus) -> Outcome {
    for (n, x) in &c.xmods {
        let a = build_actor_2crossed(x, LIM).map_err(|e| e.to_string())?;
        let m2 = &a.m2;
        for s in m2.elements() {
            for t in m2.elements() {
                let lhs = zeta(x, &s.add(x, t));
                let rhs = fder_multiply(x, &zeta(x, s), &zeta(x, t));
                ensure(lhs == rhs, || format!("{n}: ζ is not a homomorphism"))?;
            }
        }
        let r = validate_crossed_module(&a.zeta_crossed().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(r.is_crossed(), || format!("{n}: {}", r.combined()))?;
    }
    Ok(format!("{} instances", c.xmods.len()))
}

fn actor_axioms(c: &Corpus) -> Outcome {
    let mut in_scope = 0;
    for (n, x) in &c.xmods {
        let a = build_actor_2crossed(x, LIM).map_err(|e| e.to_string())?;
        let r = a.validate().map_err(|e| e.to_string())?;
        ensure(r.is_valid(), || format!("{n}: {r}"))?;
        if a.fder_star.order() <= 16 && a.aut.order() <= 16 {
            in_scope += 1;
        }
    }
    Ok(format!("{in_scope} instances in scope, all {} valid", c.xmods.len()))
}

fn braided_axioms(c: &Corpus) -> Outcome {
    for (n, x) in &c.xmods {
        let b = build_aut_braided(x, LIM).map_err(|e| e.to_string())?;
        let r = validate_braided(&b.braided).map_err(|e| e.to_string())?;
        ensure(r.report.is_valid() && r.regular, || format!("{n}: {}", r.report))?;
    }
    Ok(format!("{} instances", c.xmods.len()))
}

fn braid_roundtrip(c: &Corpus) -> Outcome {
    let mut twos: Vec<(String, TwoCrossedModule)> = c.two_crossed.clone();
    for (n, x) in &c.xmods {
        let actor = build_actor_2crossed(x, LIM).map_err(|e| e.to_string())?;
        let aut = build_aut_braided(x, LIM).map_err(|e| e.to_string())?;
        let derived = braided_to_2crossed(&aut.braided).map_err(|e| e.to_string())?;
        let iso = costar_identification(&actor, &aut, &derived).map_err(|e| e.to_string())?;
        let r = iso.validate(&actor.two_crossed, &derived.two_crossed);
        ensure(r.is_valid(), || format!("{n}: {r}"))?;
        ensure(!r.violates("lifting") && r.checked_by_axiom.contains_key("lifting"), || format!("{n}: lifts"))?;
        twos.push((format!("{n} actor"), actor.two_crossed));
    }
    for (n, t) in &twos {
        roundtrip_check(t, LIM).map_err(|e| format!("{n}: {e}"))?;
    }
    Ok(format!("{} 2-crossed modules, {} costar comparisons", twos.len(), c.xmods.len()))
}

fn derived_counts(c: &Corpus) -> Outcome {
    let x = &c.xmods.iter().find(|(n, _)| n == "c2c2").ok_or("no c2c2")?.1;
    let fs = enumerate_fder_star(x, LIM).map_err(|e| e.to_string())?.order();
    let m2 = enumerate_m2(x, LIM).map_err(|e| e.to_string())?.order();
    let g = FiniteGroupoid::indiscrete(2);
    let mg = enumerate_msec(&g, LIM).map_err(|e| e.to_string())?.order();
    let want = (oracle::fder_star_order(x), oracle::m2_order(x), oracle::msec_order(&g));
    ensure((fs, m2, mg) == (2, 2, 2) && want == (2, 2, 2), || format!("got {:?}, oracle {want:?}", (fs, m2, mg)))?;
    Ok("|FDer*| = 2, |M2| = 2, |M(G)| = 2".into())
}

fn run_cli(args: &[&str], env: Option<(&str, &str)>) -> (i32, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_xmod"));
    cmd.args(args).env_remove("XMOD_MAX_SIZE");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    let mut all = out.stdout;
    all.extend(out.stderr);
    (out.status.code().unwrap_or(-1), all)
}

fn cli_determinism(_: &Corpus) -> Outcome {
    let commands: [&[&str]; 8] = [
        &["check"],
        &["fder"],
        &["fder", "--invertible", "--table"],
        &["aut"],
        &["actor"],
        &["braided"],
        &["roundtrip"],
        &["--json", "roundtrip"],
    ];
    let mut runs = 0;
    for f in corpus_files() {
        let path = f.to_str().unwrap();
        for c in commands {
            let mut args = c.to_vec();
            args.push(path);
            let (c1, o1) = run_cli(&args, None);
            let (c2, o2) = run_cli(&args, None);
            ensure(o1 == o2 && c1 == c2, || format!("{args:?} differs between runs"))?;
            ensure(c1 == 0 || c1 == 2, || format!("{args:?} exited {c1}"))?;
            runs += 2;
        }
    }
    let neg = corpus_dir().join("negative");
    let expected = std::fs::read_to_string(neg.join("EXPECTED")).unwrap();
    let mut negatives = 0;
    for line in expected.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let mut parts = line.splitn(3, ' ');
        let (file, code, needle) = (parts.next().unwrap(), parts.next().unwrap(), parts.next().unwrap());
        let (got, out) = run_cli(&["check", neg.join(file).to_str().unwrap()], None);
        let out = String::from_utf8_lossy(&out);
        ensure(got.to_string() == code && out.contains(needle), || format!("{file}: exit {got}, output {out}"))?;
        negatives += 1;
    }
    let big = corpus_dir().join("s3_conj.xmod");
    let (code, _) = run_cli(&["fder", big.to_str().unwrap()], Some(("XMOD_MAX_SIZE", "10")));
    ensure(code == 3, || format!("XMOD_MAX_SIZE=10 gave exit {code}"))?;
    Ok(format!("{runs} runs, {negatives} negative files, size cap exit 3"))
}

#[test]
fn acceptance() {
    let corpus = load_corpus();
    let criteria: [(&str, fn(&Corpus) -> Outcome); 12] = [
        ("axiom suite", axiom_suite),
        ("homotopy closure", homotopy_closure),
        ("FDer monoid and Δ", der_monoid),
        ("invertibility", invertibility),
        ("pre-crossed Aut action", pre_crossed),
        ("semidirect split", semidirect),
        ("ζ crossed module", zeta_crossed),
        ("actor P1-P6", actor_axioms),
        ("braided axioms", braided_axioms),
        ("braided roundtrip", braid_roundtrip),
        ("derived counts", derived_counts),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(|| f(&corpus)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {:2} FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
