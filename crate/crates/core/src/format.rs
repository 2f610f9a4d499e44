//! Line-oriented text format for crossed modules and 2-crossed modules.
//!
//! ```text
//! version 1
//! name c2c2
//! OBJECTS
//! *
//! ARROWS
//! # arrow source target
//! 1 * *
//! g * *
//! COMP
//! # a b a+b, one line per composable pair
//! 1 1 1
//! 1 g g
//! g 1 g
//! g g 1
//! GROUPS
//! # per object: its elements, then one Cayley row per element
//! * : *:0 *:1
//! *:0 *:1
//! *:1 *:0
//! DELTA
//! *:0 1
//! *:1 g
//! ACTION
//! # c a c^a, one line per c in C(x) and a starting at x
//! *:0 1 *:0
//! *:0 g *:0
//! *:1 1 *:1
//! *:1 g *:1
//! ```
//!
//! A 2-crossed module file carries `kind two-crossed` and the sections
//! `GROUP L`, `GROUP M`, `GROUP P`, `D1`, `D2`, `P_ON_L`, `P_ON_M`,
//! `M_ON_L` and `LIFT`. Lines starting with `#` are comments.
//!
//! Parsing does not validate axioms; only names and table totality are
//! checked here.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::crossed::{CrossedModule, GroupoidAction};
use crate::group::FiniteGroup;
use crate::groupoid::{FiniteGroupoid, GroupBundle, GroupoidTables};
use crate::two_crossed::TwoCrossedModule;
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmodDocument {
    pub name: Option<String>,
    pub provenance: Option<String>,
    pub xmod: CrossedModule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCrossedDocument {
    pub name: Option<String>,
    pub provenance: Option<String>,
    pub two_crossed: TwoCrossedModule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Crossed(XmodDocument),
    TwoCrossed(TwoCrossedDocument),
}

impl Document {
    pub fn name(&self) -> Option<&str> {
        match self {
            Document::Crossed(d) => d.name.as_deref(),
            Document::TwoCrossed(d) => d.name.as_deref(),
        }
    }
}

#[derive(Debug)]
struct Line<'a> {
    no: usize,
    raw: &'a str,
    tokens: Vec<(usize, &'a str)>,
}

impl Line<'_> {
    fn syntax(&self, tok: usize, msg: impl Into<String>) -> Error {
        let col = self.tokens.get(tok).map_or(1, |t| t.0);
        Error::Syntax { line: self.no, col, msg: msg.into() }
    }

    fn semantic(&self, msg: impl Into<String>) -> Error {
        Error::Semantic { line: self.no, msg: msg.into() }
    }

    fn expect_len(&self, n: usize, what: &str) -> Result<()> {
        if self.tokens.len() == n {
            Ok(())
        } else {
            let msg = format!("expected {n} tokens ({what}), found {}", self.tokens.len());
            if self.tokens.len() > n {
                Err(self.syntax(n, msg))
            } else {
                Err(Error::Syntax { line: self.no, col: self.raw.chars().count() + 1, msg })
            }
        }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in raw.chars().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push((s, col));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            tokens.push((s, raw.chars().count()));
        }
        // columns are char-based, slices are byte-based
        let byte_at: Vec<usize> = raw.char_indices().map(|(b, _)| b).chain([raw.len()]).collect();
        let tokens = tokens
            .into_iter()
            .map(|(s, e)| (s + 1, &raw[byte_at[s]..byte_at[e]]))
            .collect();
        out.push(Line { no: i + 1, raw, tokens });
    }
    out
}

const XMOD_SECTIONS: [&str; 6] = ["OBJECTS", "ARROWS", "COMP", "GROUPS", "DELTA", "ACTION"];
const TWO_SECTIONS: [&str; 9] = [
    "GROUP L", "GROUP M", "GROUP P", "D1", "D2", "P_ON_L", "P_ON_M", "M_ON_L", "LIFT",
];

struct Header {
    name: Option<String>,
    provenance: Option<String>,
    two_crossed: bool,
}

type Sections<'a, 'b> = HashMap<&'static str, (&'b Line<'a>, &'b [Line<'a>])>;

fn split<'a, 'b>(ls: &'b [Line<'a>]) -> Result<(Header, Sections<'a, 'b>, usize)> {
    let first = ls.first().ok_or(Error::Syntax { line: 1, col: 1, msg: "empty file".into() })?;
    if first.tokens[0].1 != "version" {
        return Err(first.syntax(0, "expected `version 1` header"));
    }
    first.expect_len(2, "version header")?;
    if first.tokens[1].1 != FORMAT_VERSION.to_string() {
        return Err(first.syntax(1, format!("unsupported version {}", first.tokens[1].1)));
    }
    let mut header = Header { name: None, provenance: None, two_crossed: false };
    let mut i = 1;
    while i < ls.len() {
        let l = &ls[i];
        let rest = || l.raw.trim()[l.tokens[0].1.len()..].trim().to_string();
        match l.tokens[0].1 {
            "name" => header.name = Some(rest()),
            "provenance" => header.provenance = Some(rest()),
            "kind" => {
                l.expect_len(2, "kind")?;
                header.two_crossed = match l.tokens[1].1 {
                    "crossed-module" => false,
                    "two-crossed" => true,
                    k => return Err(l.syntax(1, format!("unknown kind `{k}`"))),
                }
            }
            _ => break,
        }
        i += 1;
    }
    let known: &[&'static str] = if header.two_crossed { &TWO_SECTIONS } else { &XMOD_SECTIONS };
    let header_of = |l: &Line| -> Option<&'static str> {
        let key = l.tokens.iter().map(|t| t.1).collect::<Vec<_>>().join(" ");
        known.iter().copied().find(|&k| k == key)
    };
    let mut sections: Sections = HashMap::new();
    while i < ls.len() {
        let head = &ls[i];
        let key = header_of(head).ok_or_else(|| head.syntax(0, "expected a section header"))?;
        let start = i + 1;
        i = start;
        while i < ls.len() && header_of(&ls[i]).is_none() {
            let l = &ls[i];
            let word = l.tokens[0].1;
            if l.tokens.len() == 1 && word.len() > 1 && word.chars().all(|c| c.is_ascii_uppercase() || c == '_') {
                return Err(l.syntax(0, format!("unknown section {word}")));
            }
            i += 1;
        }
        if sections.insert(key, (head, &ls[start..i])).is_some() {
            return Err(head.syntax(0, format!("duplicate section {key}")));
        }
    }
    let end = ls.last().map_or(1, |l| l.no + 1);
    for k in known {
        if !sections.contains_key(k) {
            return Err(Error::Syntax { line: end, col: 1, msg: format!("missing section {k}") });
        }
    }
    Ok((header, sections, end))
}

fn names_index<'a>(names: impl Iterator<Item = (&'a Line<'a>, &'a str)>, what: &str) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::new();
    for (l, n) in names {
        let k = map.len();
        if map.insert(n.to_string(), k).is_some() {
            return Err(l.semantic(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(map)
}

fn lookup(map: &HashMap<String, usize>, l: &Line, tok: usize, what: &str) -> Result<usize> {
    let n = l.tokens[tok].1;
    map.get(n).copied().ok_or_else(|| l.semantic(format!("unknown {what} `{n}`")))
}

/// Parses the element line and Cayley rows of one group block.
fn group_block(head: &Line, elements: &[(usize, &str)], rows: &[Line]) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    let names: Vec<String> = elements.iter().map(|t| t.1.to_string()).collect();
    let index = names_index(elements.iter().map(|t| (head, t.1)), "element")?;
    if rows.len() != names.len() {
        let l = rows.last().unwrap_or(head);
        return Err(l.semantic(format!("group table needs {} rows, found {}", names.len(), rows.len())));
    }
    let mut table = Vec::new();
    for l in rows {
        l.expect_len(names.len(), "Cayley row")?;
        table.push((0..names.len()).map(|t| lookup(&index, l, t, "element")).collect::<Result<_>>()?);
    }
    Ok((names, table))
}

fn parse_xmod(header: Header, s: &Sections, end: usize) -> Result<XmodDocument> {
    let (oh, obj_lines) = s["OBJECTS"];
    for l in obj_lines {
        l.expect_len(1, "object name")?;
    }
    if obj_lines.is_empty() {
        return Err(oh.semantic("object set is empty"));
    }
    let objects = names_index(obj_lines.iter().map(|l| (l, l.tokens[0].1)), "object")?;
    let object_names: Vec<String> = obj_lines.iter().map(|l| l.tokens[0].1.to_string()).collect();

    let (_, arrow_lines) = s["ARROWS"];
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for l in arrow_lines {
        l.expect_len(3, "arrow source target")?;
        src.push(lookup(&objects, l, 1, "object")?);
        tgt.push(lookup(&objects, l, 2, "object")?);
    }
    let arrows = names_index(arrow_lines.iter().map(|l| (l, l.tokens[0].1)), "arrow")?;
    let arrow_names: Vec<String> = arrow_lines.iter().map(|l| l.tokens[0].1.to_string()).collect();
    let m = arrow_names.len();

    let (ch, comp_lines) = s["COMP"];
    let mut seen = vec![false; m * m];
    let mut comp = Vec::new();
    for l in comp_lines {
        l.expect_len(3, "a b a+b")?;
        let a = lookup(&arrows, l, 0, "arrow")?;
        let b = lookup(&arrows, l, 1, "arrow")?;
        let c = lookup(&arrows, l, 2, "arrow")?;
        if tgt[a] != src[b] {
            return Err(l.semantic(format!("{} and {} are not composable", arrow_names[a], arrow_names[b])));
        }
        if std::mem::replace(&mut seen[a * m + b], true) {
            return Err(l.semantic(format!("duplicate entry for {} + {}", arrow_names[a], arrow_names[b])));
        }
        comp.push((a, b, c));
    }
    for a in 0..m {
        for b in (0..m).filter(|&b| tgt[a] == src[b]) {
            if !seen[a * m + b] {
                let l = comp_lines.last().unwrap_or(ch);
                return Err(l.semantic(format!("composition table lacks {} + {}", arrow_names[a], arrow_names[b])));
            }
        }
    }
    let g = FiniteGroupoid::from_tables(GroupoidTables {
        object_names: object_names.clone(),
        arrow_names: arrow_names.clone(),
        src: src.clone(),
        tgt: tgt.clone(),
        comp,
    })?;

    let (gh, group_lines) = s["GROUPS"];
    let mut groups: Vec<Option<FiniteGroup>> = vec![None; object_names.len()];
    let mut i = 0;
    while i < group_lines.len() {
        let head = &group_lines[i];
        if head.tokens.len() < 3 || head.tokens[1].1 != ":" {
            return Err(head.syntax(head.tokens.len().min(1), "expected `<object> : <elements>`"));
        }
        let x = lookup(&objects, head, 0, "object")?;
        let prefix = format!("{}:", object_names[x]);
        let mut locals = Vec::new();
        for &(col, e) in &head.tokens[2..] {
            match e.strip_prefix(&prefix) {
                Some(local) if !local.is_empty() => locals.push((col, e)),
                _ => return Err(head.semantic(format!("element `{e}` is not namespaced as {prefix}<name>"))),
            }
        }
        let n = locals.len();
        let rows = group_lines.get(i + 1..i + 1 + n).ok_or_else(|| {
            head.semantic(format!("group at {} needs {n} table rows", object_names[x]))
        })?;
        let (names, table) = group_block(head, &locals, rows)?;
        let locals: Vec<String> = names.iter().map(|e| e[prefix.len()..].to_string()).collect();
        if groups[x].replace(FiniteGroup::from_table(locals, table)?).is_some() {
            return Err(head.semantic(format!("duplicate group for object {}", object_names[x])));
        }
        i += 1 + n;
    }
    let groups: Vec<FiniteGroup> = groups
        .into_iter()
        .enumerate()
        .map(|(x, gr)| gr.ok_or_else(|| gh.semantic(format!("no group given for object {}", object_names[x]))))
        .collect::<Result<_>>()?;
    let bundle = GroupBundle::from_groups(object_names, &groups);
    let elements = names_index(bundle.elements().map(|e| (gh, bundle.name(e))), "element")?;
    let n = bundle.len();

    let (dh, delta_lines) = s["DELTA"];
    let mut delta = vec![None; n];
    for l in delta_lines {
        l.expect_len(2, "c δc")?;
        let c = lookup(&elements, l, 0, "element")?;
        let a = lookup(&arrows, l, 1, "arrow")?;
        if delta[c].replace(a).is_some() {
            return Err(l.semantic(format!("duplicate boundary for {}", bundle.name(c))));
        }
    }
    let delta: Vec<usize> = delta
        .into_iter()
        .enumerate()
        .map(|(c, a)| {
            a.ok_or_else(|| {
                delta_lines.last().unwrap_or(dh).semantic(format!("boundary of {} missing", bundle.name(c)))
            })
        })
        .collect::<Result<_>>()?;

    let (ah, action_lines) = s["ACTION"];
    let mut act = vec![None; n * m];
    for l in action_lines {
        l.expect_len(3, "c a c^a")?;
        let c = lookup(&elements, l, 0, "element")?;
        let a = lookup(&arrows, l, 1, "arrow")?;
        let r = lookup(&elements, l, 2, "element")?;
        if bundle.base(c) != src[a] {
            return Err(l.semantic(format!("{} does not start at the base of {}", arrow_names[a], bundle.name(c))));
        }
        if act[c * m + a].replace(r).is_some() {
            return Err(l.semantic(format!("duplicate action entry {}^{}", bundle.name(c), arrow_names[a])));
        }
    }
    for c in 0..n {
        for a in (0..m).filter(|&a| src[a] == bundle.base(c)) {
            if act[c * m + a].is_none() {
                let l = action_lines.last().unwrap_or(ah);
                return Err(l.semantic(format!("action table lacks {}^{}", bundle.name(c), arrow_names[a])));
            }
        }
    }
    let _ = end;
    let xmod = CrossedModule::new_unchecked(GroupoidAction::from_table(bundle, g, act)?, delta)?;
    Ok(XmodDocument { name: header.name, provenance: header.provenance, xmod })
}

fn parse_two_crossed(header: Header, s: &Sections) -> Result<TwoCrossedDocument> {
    let group = |key: &'static str| -> Result<(FiniteGroup, HashMap<String, usize>)> {
        let (h, body) = s[key];
        let first = body.first().ok_or_else(|| h.semantic(format!("{key} has no elements")))?;
        if first.tokens[0].1 != ":" || first.tokens.len() < 2 {
            return Err(first.syntax(0, "expected `: <elements>`"));
        }
        let (names, table) = group_block(first, &first.tokens[1..], &body[1..])?;
        let index = names_index(names.iter().map(|n| (first, n.as_str())), "element")?;
        Ok((FiniteGroup::from_table(names, table)?, index))
    };
    let (l, li) = group("GROUP L")?;
    let (m, mi) = group("GROUP M")?;
    let (p, pi) = group("GROUP P")?;
    let map = |key: &'static str, dom: &HashMap<String, usize>, cod: &HashMap<String, usize>| -> Result<Vec<usize>> {
        let (h, body) = s[key];
        let mut out = vec![None; dom.len()];
        for line in body {
            line.expect_len(2, "x f(x)")?;
            let x = lookup(dom, line, 0, "element")?;
            if out[x].replace(lookup(cod, line, 1, "element")?).is_some() {
                return Err(line.semantic(format!("duplicate entry for `{}`", line.tokens[0].1)));
            }
        }
        out.into_iter()
            .map(|v| v.ok_or_else(|| body.last().unwrap_or(h).semantic(format!("{key} is not total"))))
            .collect()
    };
    // entries `x y r`, stored as table[y][x]
    let table = |key: &'static str,
                 xs: &HashMap<String, usize>,
                 ys: &HashMap<String, usize>,
                 rs: &HashMap<String, usize>|
     -> Result<Vec<Vec<usize>>> {
        let (h, body) = s[key];
        let mut out = vec![vec![None; xs.len()]; ys.len()];
        for line in body {
            line.expect_len(3, "x y result")?;
            let x = lookup(xs, line, 0, "element")?;
            let y = lookup(ys, line, 1, "element")?;
            if out[y][x].replace(lookup(rs, line, 2, "element")?).is_some() {
                return Err(line.semantic("duplicate entry"));
            }
        }
        out.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.ok_or_else(|| body.last().unwrap_or(h).semantic(format!("{key} is not total"))))
                    .collect()
            })
            .collect()
    };
    let d1 = map("D1", &li, &mi)?;
    let d2 = map("D2", &mi, &pi)?;
    let p_on_l = table("P_ON_L", &li, &pi, &li)?;
    let p_on_m = table("P_ON_M", &mi, &pi, &mi)?;
    let m_on_l = table("M_ON_L", &li, &mi, &li)?;
    let lift_t = table("LIFT", &mi, &mi, &li)?;
    // LIFT lines read `m0 m1 ⟨m0,m1⟩`; undo the transposition
    let lift = (0..m.order()).map(|a| (0..m.order()).map(|b| lift_t[b][a]).collect()).collect();
    Ok(TwoCrossedDocument {
        name: header.name,
        provenance: header.provenance,
        two_crossed: TwoCrossedModule { l, m, p, d1, d2, p_on_l, p_on_m, m_on_l, lift },
    })
}

pub fn parse(text: &str) -> Result<Document> {
    let ls = lines(text);
    let (header, sections, end) = split(&ls)?;
    if header.two_crossed {
        parse_two_crossed(header, &sections).map(Document::TwoCrossed)
    } else {
        parse_xmod(header, &sections, end).map(Document::Crossed)
    }
}

/// Parses a file that must describe a crossed module.
pub fn parse_xmod_document(text: &str) -> Result<XmodDocument> {
    match parse(text)? {
        Document::Crossed(d) => Ok(d),
        Document::TwoCrossed(_) => Err(Error::Semantic { line: 1, msg: "expected a crossed module, found a 2-crossed module".into() }),
    }
}

/// Replaces characters the tokenizer cannot carry.
fn token(name: &str) -> String {
    let t: String = name.chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect();
    match t.strip_prefix('#') {
        Some(rest) => format!("_{rest}"),
        None if t.is_empty() => "_".into(),
        None => t,
    }
}

fn write_meta(out: &mut String, name: &Option<String>, provenance: &Option<String>) {
    if let Some(n) = name {
        writeln!(out, "name {n}").unwrap();
    }
    if let Some(p) = provenance {
        writeln!(out, "provenance {p}").unwrap();
    }
}

fn write_group(out: &mut String, names: &[String], g: &FiniteGroup) {
    for a in g.elements() {
        let row: Vec<&str> = g.elements().map(|b| names[g.mul(a, b)].as_str()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

pub fn serialize_xmod(doc: &XmodDocument) -> String {
    let x = &doc.xmod;
    let (g, c) = (x.g(), x.c());
    let mut out = format!("version {FORMAT_VERSION}\n");
    write_meta(&mut out, &doc.name, &doc.provenance);
    let objs: Vec<String> = g.object_names().iter().map(|n| token(n)).collect();
    let arrs: Vec<String> = g.arrow_names().iter().map(|n| token(n)).collect();
    let elems: Vec<String> = c
        .elements()
        .map(|e| {
            let obj = &c.groupoid().object_names()[c.base(e)];
            let local = c.name(e).strip_prefix(&format!("{obj}:")).unwrap_or(c.name(e));
            format!("{}:{}", objs[c.base(e)], token(local))
        })
        .collect();
    out.push_str("OBJECTS\n");
    for o in &objs {
        writeln!(out, "{o}").unwrap();
    }
    out.push_str("ARROWS\n");
    for a in g.arrows() {
        writeln!(out, "{} {} {}", arrs[a], objs[g.src(a)], objs[g.tgt(a)]).unwrap();
    }
    out.push_str("COMP\n");
    for a in g.arrows() {
        for b in g.arrows().filter(|&b| g.src(b) == g.tgt(a)) {
            writeln!(out, "{} {} {}", arrs[a], arrs[b], arrs[g.comp(a, b)]).unwrap();
        }
    }
    out.push_str("GROUPS\n");
    for y in g.objects() {
        let fibre = c.fibre(y);
        let names: Vec<&str> = fibre.iter().map(|&e| elems[e].as_str()).collect();
        writeln!(out, "{} : {}", objs[y], names.join(" ")).unwrap();
        for &a in fibre {
            let row: Vec<&str> = fibre.iter().map(|&b| elems[c.add(a, b)].as_str()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out.push_str("DELTA\n");
    for y in g.objects() {
        for &e in c.fibre(y) {
            writeln!(out, "{} {}", elems[e], arrs[x.delta(e)]).unwrap();
        }
    }
    out.push_str("ACTION\n");
    for y in g.objects() {
        for &e in c.fibre(y) {
            for a in g.arrows().filter(|&a| g.src(a) == y) {
                writeln!(out, "{} {} {}", elems[e], arrs[a], elems[x.act(e, a)]).unwrap();
            }
        }
    }
    out
}

pub fn serialize_two_crossed(doc: &TwoCrossedDocument) -> String {
    let t = &doc.two_crossed;
    let mut out = format!("version {FORMAT_VERSION}\nkind two-crossed\n");
    write_meta(&mut out, &doc.name, &doc.provenance);
    let names = |g: &FiniteGroup| -> Vec<String> { g.names().iter().map(|n| token(n)).collect() };
    let (ln, mn, pn) = (names(&t.l), names(&t.m), names(&t.p));
    for (key, g, ns) in [("L", &t.l, &ln), ("M", &t.m, &mn), ("P", &t.p, &pn)] {
        writeln!(out, "GROUP {key}\n: {}", ns.join(" ")).unwrap();
        write_group(&mut out, ns, g);
    }
    out.push_str("D1\n");
    for x in t.l.elements() {
        writeln!(out, "{} {}", ln[x], mn[t.d1[x]]).unwrap();
    }
    out.push_str("D2\n");
    for x in t.m.elements() {
        writeln!(out, "{} {}", mn[x], pn[t.d2[x]]).unwrap();
    }
    let triples = |out: &mut String, key: &str, xs: &[String], ys: &[String], rs: &[String], f: &dyn Fn(usize, usize) -> usize| {
        writeln!(out, "{key}").unwrap();
        for y in 0..ys.len() {
            for x in 0..xs.len() {
                writeln!(out, "{} {} {}", xs[x], ys[y], rs[f(x, y)]).unwrap();
            }
        }
    };
    triples(&mut out, "P_ON_L", &ln, &pn, &ln, &|x, y| t.p_on_l[y][x]);
    triples(&mut out, "P_ON_M", &mn, &pn, &mn, &|x, y| t.p_on_m[y][x]);
    triples(&mut out, "M_ON_L", &ln, &mn, &ln, &|x, y| t.m_on_l[y][x]);
    triples(&mut out, "LIFT", &mn, &mn, &ln, &|x, y| t.lift[x][y]);
    out
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Crossed(d) => serialize_xmod(d),
        Document::TwoCrossed(d) => serialize_two_crossed(d),
    }
}
