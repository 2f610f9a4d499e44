use std::path::Path;

use xmod::{
    braided_to_2crossed, build_actor_2crossed, build_aut_braided, costar_identification,
    enumerate_fder, enumerate_fder_star, enumerate_xmod_automorphisms, fder_multiply, parse,
    roundtrip_check, serialize_two_crossed, validate_2crossed, validate_braided,
    validate_crossed_module, CrossedModule, Document, FiniteGroup, FreeDerivation,
    IsomorphismWitness, SearchLimit, TwoCrossedDocument, TwoCrossedModule, XmodDocument,
    XmodMorphism,
};

use crate::report::Report;
use crate::Failure;

fn load(path: &Path) -> Result<Document, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|_| Failure::Io(format!("{}: not UTF-8", path.display())))?;
    Ok(parse(&text)?)
}

fn load_xmod(path: &Path) -> Result<XmodDocument, Failure> {
    match load(path)? {
        Document::Crossed(d) => Ok(d),
        Document::TwoCrossed(_) => Err(Failure::Io(format!(
            "{}: expected a crossed module, found a 2-crossed module",
            path.display()
        ))),
    }
}

/// Validates `doc`; on failure the returned report explains why.
fn require_crossed(command: &str, doc: &XmodDocument) -> Result<Result<(), Report>, Failure> {
    let r = validate_crossed_module(&doc.xmod)?;
    if r.is_crossed() {
        return Ok(Ok(()));
    }
    let mut rep = Report::new(command, doc.name.as_deref());
    rep.absorb("crossed module", &r.combined());
    Ok(Err(rep))
}

fn names(xs: impl Iterator<Item = usize>, name: impl Fn(usize) -> String) -> String {
    xs.map(name).collect::<Vec<_>>().join(" ")
}

fn describe_derivation(x: &CrossedModule, s: &FreeDerivation) -> String {
    let (g, c) = (x.g(), x.c());
    format!(
        "s0 = [{}]  s1 = [{}]",
        names(s.s0.iter().copied(), |a| g.arrow_name(a).to_string()),
        names(s.s1.iter().copied(), |e| c.name(e).to_string()),
    )
}

fn describe_morphism(x: &CrossedModule, f: &XmodMorphism) -> Vec<String> {
    let (g, c) = (x.g(), x.c());
    vec![
        format!("f0 = [{}]", names(f.f0.iter().copied(), |y| g.object_name(y).to_string())),
        format!("f1 = [{}]", names(f.f1.iter().copied(), |a| g.arrow_name(a).to_string())),
        format!("f2 = [{}]", names(f.f2.iter().copied(), |e| c.name(e).to_string())),
    ]
}

fn cayley(g: &FiniteGroup) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header = vec![String::new()];
    header.extend(g.names().iter().cloned());
    let rows = g
        .elements()
        .map(|a| {
            let mut row = vec![g.name(a).to_string()];
            row.extend(g.elements().map(|b| g.name(g.mul(a, b)).to_string()));
            row
        })
        .collect();
    (header, rows)
}

pub fn check(path: &Path) -> Result<Report, Failure> {
    match load(path)? {
        Document::Crossed(doc) => {
            let x = &doc.xmod;
            let mut rep = Report::new("check", doc.name.as_deref());
            let shape = x.shape();
            rep.order("objects", shape.objects);
            rep.order("arrows", shape.arrows);
            rep.order("elements", shape.elements);
            let r = validate_crossed_module(x)?;
            rep.absorb("crossed module", &r.combined());
            rep.section("verdict", vec![format!("{:?}", r.verdict)]);
            Ok(rep)
        }
        Document::TwoCrossed(doc) => {
            let t = &doc.two_crossed;
            let mut rep = Report::new("check", doc.name.as_deref());
            let (l, m, p) = t.orders();
            rep.order("L", l);
            rep.order("M", m);
            rep.order("P", p);
            rep.absorb("2-crossed module", &validate_2crossed(t)?);
            Ok(rep)
        }
    }
}

pub fn fder(path: &Path, invertible: bool, table: bool, limit: SearchLimit) -> Result<Report, Failure> {
    let doc = load_xmod(path)?;
    if let Err(rep) = require_crossed("fder", &doc)? {
        return Ok(rep);
    }
    let x = &doc.xmod;
    let mut rep = Report::new("fder", doc.name.as_deref());
    let (label, elements, product) = if invertible {
        let g = enumerate_fder_star(x, limit)?;
        let els = g.elements().to_vec();
        let names = g.group().names().to_vec();
        ("FDer*", els, Some((g.group().clone(), names)))
    } else {
        ("FDer", enumerate_fder(x, limit)?, None)
    };
    rep.order(label, elements.len());
    let labels: Vec<String> = match &product {
        Some((_, n)) => n.clone(),
        None => (0..elements.len()).map(|i| if i == 0 { "1".into() } else { format!("s{i}") }).collect(),
    };
    rep.section(
        "elements",
        elements.iter().zip(&labels).map(|(s, n)| format!("{n}: {}", describe_derivation(x, s))).collect(),
    );
    if table {
        let (header, rows) = match &product {
            Some((g, _)) => cayley(g),
            None => {
                limit.check((elements.len() as u128).pow(2))?;
                let index: std::collections::HashMap<&FreeDerivation, usize> =
                    elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
                let mut header = vec![String::new()];
                header.extend(labels.iter().cloned());
                let rows = elements
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        let mut row = vec![labels[i].clone()];
                        row.extend(elements.iter().map(|t| {
                            let p = fder_multiply(x, s, t);
                            index.get(&p).map_or_else(|| "?".into(), |&k| labels[k].clone())
                        }));
                        row
                    })
                    .collect();
                (header, rows)
            }
        };
        rep.table(&format!("{label} product s*t (row s, column t)"), header, rows);
    }
    Ok(rep)
}

pub fn aut(path: &Path, limit: SearchLimit) -> Result<Report, Failure> {
    let doc = load_xmod(path)?;
    if let Err(rep) = require_crossed("aut", &doc)? {
        return Ok(rep);
    }
    let x = &doc.xmod;
    let aut = enumerate_xmod_automorphisms(x, limit)?;
    let g = aut.group();
    let mut rep = Report::new("aut", doc.name.as_deref());
    rep.order("Aut", aut.order());
    let mut lines = Vec::new();
    for k in g.generators() {
        lines.push(format!("{}:", g.name(k)));
        lines.extend(describe_morphism(x, aut.element(k)).into_iter().map(|l| format!("  {l}")));
    }
    rep.section("generators", lines);
    let (header, rows) = cayley(g);
    rep.table("Aut product f.g = f after g (row f, column g)", header, rows);
    Ok(rep)
}

pub fn actor(path: &Path, emit: Option<&Path>, limit: SearchLimit) -> Result<Report, Failure> {
    let doc = load_xmod(path)?;
    if let Err(rep) = require_crossed("actor", &doc)? {
        return Ok(rep);
    }
    let x = &doc.xmod;
    let a = build_actor_2crossed(x, limit)?;
    let mut rep = Report::new("actor", doc.name.as_deref());
    rep.order("M2", a.m2.order());
    rep.order("FDer*", a.fder_star.order());
    rep.order("Aut", a.aut.order());
    rep.absorb("2-crossed module", &a.validate()?);
    let zeta = validate_crossed_module(&a.zeta_crossed()?)?;
    let delta = validate_crossed_module(&a.delta_pre_crossed()?)?;
    rep.absorb("zeta", &zeta.combined());
    rep.section(
        "boundaries",
        vec![
            format!("zeta: M2 -> FDer* is {:?}", zeta.verdict),
            format!("Delta: FDer* -> Aut is {:?}", delta.verdict),
        ],
    );
    if let Some(out) = emit {
        let name = doc.name.as_deref().map_or_else(|| "actor".to_string(), |n| format!("{n} actor"));
        let text = serialize_two_crossed(&TwoCrossedDocument {
            name: Some(name),
            provenance: Some("xmod actor".into()),
            two_crossed: a.two_crossed.clone(),
        });
        std::fs::write(out, text).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
        rep.section("emitted", vec![out.display().to_string()]);
    }
    Ok(rep)
}

pub fn braided(path: &Path, limit: SearchLimit) -> Result<Report, Failure> {
    let doc = load_xmod(path)?;
    if let Err(rep) = require_crossed("braided", &doc)? {
        return Ok(rep);
    }
    let b = build_aut_braided(&doc.xmod, limit)?;
    let mut rep = Report::new("braided", doc.name.as_deref());
    rep.order("A0", b.aut.order());
    rep.order("A1", b.a1.len());
    rep.order("A2", b.a2.len());
    let r = validate_braided(&b.braided)?;
    rep.absorb("braided", &r.report);
    rep.section("regular", vec![r.regular.to_string()]);
    Ok(rep)
}

fn witness_section(rep: &mut Report, t: &TwoCrossedModule, back: &TwoCrossedModule, w: &IsomorphismWitness) {
    let mut lines = vec![format!("canonical: {}", w.canonical)];
    for (key, a, b, map) in [
        ("L", &t.l, &back.l, &w.iso.on_l),
        ("M", &t.m, &back.m, &w.iso.on_m),
        ("P", &t.p, &back.p, &w.iso.on_p),
    ] {
        for (i, &j) in map.iter().enumerate() {
            lines.push(format!("{key} {} -> {}", a.name(i), b.name(j)));
        }
    }
    rep.section("witness", lines);
}

fn roundtrip_two_crossed(rep: &mut Report, t: &TwoCrossedModule, limit: SearchLimit) -> Result<(), Failure> {
    let r = validate_2crossed(t)?;
    rep.absorb("2-crossed module", &r);
    if !r.is_valid() {
        return Ok(());
    }
    let w = roundtrip_check(t, limit)?;
    let back = braided_to_2crossed(&xmod::twocrossed_to_braided(t)?)?;
    rep.absorb("roundtrip isomorphism", &w.iso.validate(t, &back.two_crossed));
    witness_section(rep, t, &back.two_crossed, &w);
    Ok(())
}

pub fn roundtrip(path: &Path, limit: SearchLimit) -> Result<Report, Failure> {
    match load(path)? {
        Document::TwoCrossed(doc) => {
            let mut rep = Report::new("roundtrip", doc.name.as_deref());
            roundtrip_two_crossed(&mut rep, &doc.two_crossed, limit)?;
            Ok(rep)
        }
        Document::Crossed(doc) => {
            if let Err(rep) = require_crossed("roundtrip", &doc)? {
                return Ok(rep);
            }
            let x = &doc.xmod;
            let mut rep = Report::new("roundtrip", doc.name.as_deref());
            let actor = build_actor_2crossed(x, limit)?;
            rep.order("M2", actor.m2.order());
            rep.order("FDer*", actor.fder_star.order());
            rep.order("Aut", actor.aut.order());
            roundtrip_two_crossed(&mut rep, &actor.two_crossed, limit)?;
            let aut = build_aut_braided(x, limit)?;
            let derived = braided_to_2crossed(&aut.braided)?;
            let iso = costar_identification(&actor, &aut, &derived)?;
            rep.absorb("costar identification", &iso.validate(&actor.two_crossed, &derived.two_crossed));
            Ok(rep)
        }
    }
}
