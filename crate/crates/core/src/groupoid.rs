//! Finite groupoids, group bundles and their morphisms.
//!
//! Arrows and objects are dense indices. Composition is written additively
//! and in diagrammatic order: `comp(a, b)` is `a + b`, defined exactly when
//! `tgt(a) = src(b)`, and `src(a + b) = src(a)`, `tgt(a + b) = tgt(b)`.

use std::collections::HashMap;

use itertools::Itertools;

use crate::group::{ConcreteGroup, FiniteGroup};
use crate::report::ValidationReport;
use crate::{Error, Result, SearchLimit};

/// Unvalidated groupoid data, as read from a file or assembled by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupoidTables {
    pub object_names: Vec<String>,
    pub arrow_names: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// Composition entries `(a, b, a + b)`.
    pub comp: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    object_names: Vec<String>,
    arrow_names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    comp: Vec<Option<usize>>,
    identity: Vec<usize>,
    inverse: Vec<usize>,
    hom: Vec<Vec<usize>>,
}

/// Checks every groupoid axiom on raw tables.
///
/// The report cites a witness for each failure. Ids outside the declared
/// ranges are not axiom failures but a [`Error::MalformedTable`].
pub fn validate_groupoid(t: &GroupoidTables) -> Result<ValidationReport> {
    let n = t.object_names.len();
    let m = t.arrow_names.len();
    if t.src.len() != m || t.tgt.len() != m {
        return Err(Error::MalformedTable(format!(
            "{m} arrows but {} sources and {} targets",
            t.src.len(),
            t.tgt.len()
        )));
    }
    if let Some((a, _)) = t
        .src
        .iter()
        .zip(&t.tgt)
        .enumerate()
        .find(|(_, (&s, &e))| s >= n || e >= n)
    {
        return Err(Error::MalformedTable(format!(
            "arrow {} has an endpoint outside the object set",
            t.arrow_names[a]
        )));
    }
    for &(a, b, c) in &t.comp {
        if a >= m || b >= m || c >= m {
            return Err(Error::MalformedTable(format!(
                "composition entry ({a}, {b}, {c}) references an unknown arrow"
            )));
        }
    }

    let mut report = ValidationReport::new();
    if n == 0 {
        report.fail("nonempty", "groupoid has no objects");
        return Ok(report);
    }
    let name = |a: usize| t.arrow_names[a].as_str();
    let mut comp: Vec<Option<usize>> = vec![None; m * m];
    for &(a, b, c) in &t.comp {
        report.check(t.tgt[a] == t.src[b], "composition domain", || {
            format!("{} + {} given although tgt({}) != src({})", name(a), name(b), name(a), name(b))
        });
        let slot = &mut comp[a * m + b];
        match *slot {
            Some(prev) if prev != c => report.fail(
                "composition functional",
                format!("{} + {} given as both {} and {}", name(a), name(b), name(prev), name(c)),
            ),
            _ => *slot = Some(c),
        }
    }
    for a in 0..m {
        for b in 0..m {
            if t.tgt[a] != t.src[b] {
                continue;
            }
            match comp[a * m + b] {
                None => report.fail(
                    "composition total",
                    format!("{} + {} is missing", name(a), name(b)),
                ),
                Some(c) => report.check(
                    t.src[c] == t.src[a] && t.tgt[c] == t.tgt[b],
                    "composite endpoints",
                    || format!("{} + {} = {}", name(a), name(b), name(c)),
                ),
            }
        }
    }
    if !report.is_valid() {
        return Ok(report);
    }
    let get = |a: usize, b: usize| comp[a * m + b].expect("checked total");
    for a in 0..m {
        for b in (0..m).filter(|&b| t.tgt[a] == t.src[b]) {
            for c in (0..m).filter(|&c| t.tgt[b] == t.src[c]) {
                report.check(
                    get(get(a, b), c) == get(a, get(b, c)),
                    "associativity",
                    || format!("({}, {}, {})", name(a), name(b), name(c)),
                );
            }
        }
    }
    let mut identity = vec![None; n];
    for (x, slot) in identity.iter_mut().enumerate() {
        *slot = (0..m).find(|&e| {
            t.src[e] == x
                && t.tgt[e] == x
                && (0..m).all(|a| {
                    (t.src[a] != x || get(e, a) == a) && (t.tgt[a] != x || get(a, e) == a)
                })
        });
        report.check(slot.is_some(), "identity", || {
            format!("object {} has no two-sided unit", t.object_names[x])
        });
    }
    if report.is_valid() {
        for a in 0..m {
            let (x, y) = (t.src[a], t.tgt[a]);
            let ok = (0..m).any(|b| {
                t.src[b] == y
                    && t.tgt[b] == x
                    && Some(get(a, b)) == identity[x]
                    && Some(get(b, a)) == identity[y]
            });
            report.check(ok, "inverse", || format!("{} has no inverse", name(a)));
        }
    }
    Ok(report)
}

impl FiniteGroupoid {
    pub fn from_tables(t: GroupoidTables) -> Result<Self> {
        validate_groupoid(&t)?.into_result()?;
        let m = t.arrow_names.len();
        let mut comp = vec![None; m * m];
        for &(a, b, c) in &t.comp {
            comp[a * m + b] = Some(c);
        }
        Ok(Self::assemble(t.object_names, t.arrow_names, t.src, t.tgt, comp))
    }

    /// Builds from a composition function known to satisfy the axioms.
    pub(crate) fn from_fn_unchecked(
        object_names: Vec<String>,
        arrow_names: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let m = arrow_names.len();
        let mut table = vec![None; m * m];
        for a in 0..m {
            for b in 0..m {
                if tgt[a] == src[b] {
                    table[a * m + b] = Some(comp(a, b));
                }
            }
        }
        Self::assemble(object_names, arrow_names, src, tgt, table)
    }

    /// Like `from_fn_unchecked` but runs the full validator first.
    pub(crate) fn from_fn_checked(
        object_names: Vec<String>,
        arrow_names: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let m = arrow_names.len();
        let mut entries = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if tgt[a] == src[b] {
                    if let Some(c) = comp(a, b) {
                        entries.push((a, b, c));
                    }
                }
            }
        }
        Self::from_tables(GroupoidTables {
            object_names,
            arrow_names,
            src,
            tgt,
            comp: entries,
        })
    }

    fn assemble(
        object_names: Vec<String>,
        arrow_names: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Self {
        let n = object_names.len();
        let m = arrow_names.len();
        let get = |a: usize, b: usize| comp[a * m + b];
        let identity: Vec<usize> = (0..n)
            .map(|x| {
                (0..m)
                    .find(|&e| src[e] == x && tgt[e] == x && get(e, e) == Some(e))
                    .expect("validated groupoid has identities")
            })
            .collect();
        let inverse = (0..m)
            .map(|a| {
                (0..m)
                    .find(|&b| src[b] == tgt[a] && tgt[b] == src[a] && get(a, b) == Some(identity[src[a]]))
                    .expect("validated groupoid has inverses")
            })
            .collect();
        let mut hom = vec![Vec::new(); n * n];
        for a in 0..m {
            hom[src[a] * n + tgt[a]].push(a);
        }
        FiniteGroupoid {
            object_names,
            arrow_names,
            src,
            tgt,
            comp,
            identity,
            inverse,
            hom,
        }
    }

    /// Re-checks the axioms on this groupoid's own tables.
    pub fn validate(&self) -> ValidationReport {
        validate_groupoid(&self.tables()).expect("stored tables are in range")
    }

    pub fn tables(&self) -> GroupoidTables {
        let m = self.num_arrows();
        let comp = (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .filter_map(|(a, b)| self.try_comp(a, b).map(|c| (a, b, c)))
            .collect();
        GroupoidTables {
            object_names: self.object_names.clone(),
            arrow_names: self.arrow_names.clone(),
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            comp,
        }
    }

    /// One object, one identity arrow per object and nothing else.
    pub fn discrete(n: usize) -> Self {
        let objects = (0..n).map(|x| format!("x{x}")).collect();
        let arrows = (0..n).map(|x| format!("1_x{x}")).collect();
        let ids: Vec<usize> = (0..n).collect();
        Self::from_fn_unchecked(objects, arrows, ids.clone(), ids, |a, _| a)
    }

    /// Exactly one arrow `x → y` for every ordered pair of objects; arrow
    /// `x → y` has index `x·n + y`.
    pub fn indiscrete(n: usize) -> Self {
        Self::indiscrete_times(n, &FiniteGroup::trivial())
    }

    /// The connected groupoid `(X × X) × H`: arrows `(x, y, h)` at index
    /// `(x·n + y)·|H| + h`, composed by `(x,y,h) + (y,z,k) = (x,z,hk)`.
    /// Every vertex group is `H`.
    pub fn indiscrete_times(n: usize, h: &FiniteGroup) -> Self {
        let k = h.order();
        let objects: Vec<String> = (0..n).map(|x| format!("x{x}")).collect();
        let mut arrows = Vec::with_capacity(n * n * k);
        let mut src = Vec::with_capacity(n * n * k);
        let mut tgt = Vec::with_capacity(n * n * k);
        for x in 0..n {
            for y in 0..n {
                for e in 0..k {
                    let label = if k == 1 {
                        format!("x{x}x{y}")
                    } else {
                        format!("x{x}x{y}:{}", h.name(e))
                    };
                    arrows.push(label);
                    src.push(x);
                    tgt.push(y);
                }
            }
        }
        Self::from_fn_unchecked(objects, arrows, src, tgt, |a, b| {
            let (x, e1) = (a / k / n, a % k);
            let (z, e2) = ((b / k) % n, b % k);
            (x * n + z) * k + h.mul(e1, e2)
        })
    }

    /// The group as a one-object groupoid.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        Self::from_fn_unchecked(
            vec!["*".into()],
            g.names().to_vec(),
            vec![0; n],
            vec![0; n],
            |a, b| g.mul(a, b),
        )
    }

    pub fn num_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrow_names.len()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.num_objects()
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.num_arrows()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.object_names[x]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrow_names[a]
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn arrow_names(&self) -> &[String] {
        &self.arrow_names
    }

    pub fn with_names(mut self, objects: Vec<String>, arrows: Vec<String>) -> Self {
        assert_eq!(objects.len(), self.num_objects());
        assert_eq!(arrows.len(), self.num_arrows());
        self.object_names = objects;
        self.arrow_names = arrows;
        self
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn id(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, a: usize) -> bool {
        self.identity[self.src[a]] == a
    }

    pub fn neg(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn try_comp(&self, a: usize, b: usize) -> Option<usize> {
        self.comp[a * self.num_arrows() + b]
    }

    /// `a + b`. Panics if `tgt(a) != src(b)`.
    pub fn comp(&self, a: usize, b: usize) -> usize {
        self.try_comp(a, b).unwrap_or_else(|| {
            panic!(
                "arrows {} and {} are not composable",
                self.arrow_names[a], self.arrow_names[b]
            )
        })
    }

    /// `a₁ + a₂ + … + aₖ`. Panics on an empty slice or a non-composable pair.
    pub fn sum(&self, arrows: &[usize]) -> usize {
        let (&first, rest) = arrows.split_first().expect("empty sum");
        rest.iter().fold(first, |acc, &b| self.comp(acc, b))
    }

    /// Arrows `x → y`.
    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.hom[x * self.num_objects() + y]
    }

    /// Arrows with target `x`.
    pub fn costar(&self, x: usize) -> Result<Vec<usize>> {
        if x >= self.num_objects() {
            return Err(Error::UnknownObject(x));
        }
        Ok(self.arrows().filter(|&a| self.tgt[a] == x).collect())
    }

    pub fn is_totally_intransitive(&self) -> bool {
        self.arrows().all(|a| self.src[a] == self.tgt[a])
    }

    /// Smallest `k ≥ 1` with `k·a` an identity; `None` unless `a` is a loop.
    pub fn loop_order(&self, a: usize) -> Option<usize> {
        if self.src[a] != self.tgt[a] {
            return None;
        }
        let e = self.id(self.src[a]);
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.comp(x, a);
            k += 1;
        }
        Some(k)
    }

    /// The vertex group at `x` and the arrow ids of its elements.
    pub fn vertex_group(&self, x: usize) -> (FiniteGroup, Vec<usize>) {
        let arrows = self.hom(x, x).to_vec();
        let pos: HashMap<usize, usize> = arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let k = arrows.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &arrows {
            for &b in &arrows {
                table.push(pos[&self.comp(a, b)]);
            }
        }
        let names = arrows.iter().map(|&a| self.arrow_names[a].clone()).collect();
        (FiniteGroup::from_flat_unchecked(names, table, k), arrows)
    }

    /// Generators and a composition plan reaching every arrow from them.
    pub(crate) fn word_plan(&self) -> WordPlan {
        let m = self.num_arrows();
        let mut known = vec![false; m];
        for &e in &self.identity {
            known[e] = true;
        }
        let mut generators: Vec<usize> = Vec::new();
        let mut steps: Vec<Step> = Vec::new();
        loop {
            let mut queue: Vec<usize> = (0..m).filter(|&a| known[a]).collect();
            let mut i = 0;
            while i < queue.len() {
                let b = queue[i];
                i += 1;
                for &g in &generators {
                    if let Some(c) = self.try_comp(b, g) {
                        if !known[c] {
                            known[c] = true;
                            steps.push(Step {
                                arrow: c,
                                prefix: b,
                                generator: g,
                            });
                            queue.push(c);
                        }
                    }
                }
            }
            match (0..m).find(|&a| !known[a]) {
                None => break,
                Some(g) => {
                    generators.push(g);
                    known[g] = true;
                }
            }
        }
        WordPlan { generators, steps }
    }
}

/// Arrow `arrow = prefix + generator`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Step {
    pub arrow: usize,
    pub prefix: usize,
    pub generator: usize,
}

/// A generating set plus a recipe expressing every other non-identity arrow
/// as an earlier arrow followed by a generator.
#[derive(Debug, Clone)]
pub(crate) struct WordPlan {
    pub generators: Vec<usize>,
    pub steps: Vec<Step>,
}

/// Iterates the cartesian product of `0..sizes[i]` in lexicographic order.
pub(crate) fn for_each_choice(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    if sizes.iter().any(|&s| s == 0) {
        return;
    }
    let mut idx = vec![0; sizes.len()];
    loop {
        f(&idx);
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sizes[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub(crate) fn product_size(sizes: &[usize]) -> u128 {
    sizes.iter().map(|&s| s as u128).product()
}

/// A morphism of groupoids, stored as explicit object and arrow maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupoidMorphism {
    pub obj_map: Vec<usize>,
    pub arr_map: Vec<usize>,
}

impl GroupoidMorphism {
    pub fn identity(g: &FiniteGroupoid) -> Self {
        GroupoidMorphism {
            obj_map: g.objects().collect(),
            arr_map: g.arrows().collect(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupoidMorphism) -> GroupoidMorphism {
        GroupoidMorphism {
            obj_map: other.obj_map.iter().map(|&x| self.obj_map[x]).collect(),
            arr_map: other.arr_map.iter().map(|&a| self.arr_map[a]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        is_permutation(&self.obj_map) && is_permutation(&self.arr_map)
    }

    pub fn inverse(&self) -> Option<GroupoidMorphism> {
        Some(GroupoidMorphism {
            obj_map: invert_permutation(&self.obj_map)?,
            arr_map: invert_permutation(&self.arr_map)?,
        })
    }

    /// Checks that the maps preserve source, target, composition and
    /// identities.
    pub fn validate(&self, dom: &FiniteGroupoid, cod: &FiniteGroupoid) -> ValidationReport {
        validate_groupoid_map(&self.obj_map, &self.arr_map, dom, cod)
    }
}

pub(crate) fn validate_groupoid_map(
    obj_map: &[usize],
    arr_map: &[usize],
    dom: &FiniteGroupoid,
    cod: &FiniteGroupoid,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    if obj_map.len() != dom.num_objects()
        || arr_map.len() != dom.num_arrows()
        || obj_map.iter().any(|&x| x >= cod.num_objects())
        || arr_map.iter().any(|&a| a >= cod.num_arrows())
    {
        report.fail("shape", "map does not match domain and codomain sizes");
        return report;
    }
    for a in dom.arrows() {
        let fa = arr_map[a];
        report.check(
            cod.src(fa) == obj_map[dom.src(a)] && cod.tgt(fa) == obj_map[dom.tgt(a)],
            "preserves endpoints",
            || format!("{} -> {}", dom.arrow_name(a), cod.arrow_name(fa)),
        );
    }
    if !report.is_valid() {
        return report;
    }
    for x in dom.objects() {
        report.check(
            arr_map[dom.id(x)] == cod.id(obj_map[x]),
            "preserves identities",
            || dom.object_name(x).to_string(),
        );
    }
    for a in dom.arrows() {
        for b in dom.arrows() {
            if let Some(c) = dom.try_comp(a, b) {
                report.check(
                    cod.try_comp(arr_map[a], arr_map[b]) == Some(arr_map[c]),
                    "preserves composition",
                    || format!("({}, {})", dom.arrow_name(a), dom.arrow_name(b)),
                );
            }
        }
    }
    report
}

pub(crate) fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    v.iter().all(|&x| x < v.len() && !std::mem::replace(&mut seen[x], true))
}

pub(crate) fn invert_permutation(v: &[usize]) -> Option<Vec<usize>> {
    if !is_permutation(v) {
        return None;
    }
    let mut inv = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        inv[x] = i;
    }
    Some(inv)
}

/// All groupoid morphisms `dom → cod` over the object map `obj_map`, as arrow
/// maps. With `bijective`, only bijections are returned.
pub fn enumerate_morphisms(
    dom: &FiniteGroupoid,
    cod: &FiniteGroupoid,
    obj_map: &[usize],
    bijective: bool,
    limit: SearchLimit,
) -> Result<Vec<Vec<usize>>> {
    let plan = dom.word_plan();
    let candidates: Vec<Vec<usize>> = plan
        .generators
        .iter()
        .map(|&g| {
            let order = dom.loop_order(g);
            cod.hom(obj_map[dom.src(g)], obj_map[dom.tgt(g)])
                .iter()
                .copied()
                .filter(|&h| match (order, cod.loop_order(h)) {
                    (Some(k), Some(l)) => {
                        if bijective {
                            k == l
                        } else {
                            k % l == 0
                        }
                    }
                    _ => true,
                })
                .collect()
        })
        .collect();
    let sizes: Vec<usize> = candidates.iter().map(Vec::len).collect();
    limit.check(product_size(&sizes))?;
    let mut out = Vec::new();
    for_each_choice(&sizes, |choice| {
        let mut map = vec![usize::MAX; dom.num_arrows()];
        for x in dom.objects() {
            map[dom.id(x)] = cod.id(obj_map[x]);
        }
        for (i, &g) in plan.generators.iter().enumerate() {
            map[g] = candidates[i][choice[i]];
        }
        for s in &plan.steps {
            map[s.arrow] = cod.comp(map[s.prefix], map[s.generator]);
        }
        let is_morphism = dom.arrows().all(|a| {
            dom.arrows().all(|b| match dom.try_comp(a, b) {
                Some(c) => cod.try_comp(map[a], map[b]) == Some(map[c]),
                None => true,
            })
        });
        if is_morphism && (!bijective || is_permutation(&map)) {
            out.push(map);
        }
    });
    Ok(out)
}

/// Permutations of the objects of `g` that preserve the sizes of all
/// hom-sets; every automorphism has one of these as its object part.
pub(crate) fn candidate_object_permutations(
    dom: &FiniteGroupoid,
    cod: &FiniteGroupoid,
) -> Vec<Vec<usize>> {
    let n = dom.num_objects();
    if n != cod.num_objects() {
        return Vec::new();
    }
    (0..n)
        .permutations(n)
        .filter(|p| {
            dom.objects().all(|x| {
                dom.objects()
                    .all(|y| dom.hom(x, y).len() == cod.hom(p[x], p[y]).len())
            })
        })
        .collect()
}

/// The automorphism group of `g`, multiplied by composition
/// (`f·h = f ∘ h`).
pub fn enumerate_groupoid_automorphisms(
    g: &FiniteGroupoid,
    limit: SearchLimit,
) -> Result<ConcreteGroup<GroupoidMorphism>> {
    let mut elements = Vec::new();
    for perm in candidate_object_permutations(g, g) {
        for arr_map in enumerate_morphisms(g, g, &perm, true, limit)? {
            elements.push(GroupoidMorphism {
                obj_map: perm.clone(),
                arr_map,
            });
        }
    }
    ConcreteGroup::from_elements(elements, |f, h| f.compose(h), |i, _| format!("f{i}"))
}

/// A totally intransitive groupoid, viewed as a family of groups `C(x)`.
///
/// For an element `c ∈ C(x)` the base object `x` is written `β(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupBundle {
    groupoid: FiniteGroupoid,
}

impl GroupBundle {
    pub fn from_groupoid(groupoid: FiniteGroupoid) -> Result<Self> {
        if let Some(a) = groupoid.arrows().find(|&a| groupoid.src(a) != groupoid.tgt(a)) {
            let mut report = ValidationReport::new();
            report.fail(
                "totally intransitive",
                format!("{} is not a loop", groupoid.arrow_name(a)),
            );
            return Err(Error::Invalid(report));
        }
        Ok(GroupBundle { groupoid })
    }

    /// One group per object; element `e` of the group at object `x` is named
    /// `x:e`.
    pub fn from_groups(object_names: Vec<String>, groups: &[FiniteGroup]) -> Self {
        assert_eq!(object_names.len(), groups.len());
        let mut arrow_names = Vec::new();
        let mut base = Vec::new();
        let mut offset = Vec::new();
        for (x, g) in groups.iter().enumerate() {
            offset.push(arrow_names.len());
            for e in g.elements() {
                arrow_names.push(format!("{}:{}", object_names[x], g.name(e)));
                base.push(x);
            }
        }
        let groupoid = FiniteGroupoid::from_fn_unchecked(
            object_names,
            arrow_names,
            base.clone(),
            base.clone(),
            |a, b| {
                let x = base[a];
                offset[x] + groups[x].mul(a - offset[x], b - offset[x])
            },
        );
        GroupBundle { groupoid }
    }

    /// The same group at every one of `names`.
    pub fn constant(object_names: Vec<String>, group: &FiniteGroup) -> Self {
        let groups = vec![group.clone(); object_names.len()];
        Self::from_groups(object_names, &groups)
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn into_groupoid(self) -> FiniteGroupoid {
        self.groupoid
    }

    pub fn num_objects(&self) -> usize {
        self.groupoid.num_objects()
    }

    pub fn len(&self) -> usize {
        self.groupoid.num_arrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.groupoid.arrows()
    }

    pub fn base(&self, c: usize) -> usize {
        self.groupoid.src(c)
    }

    pub fn fibre(&self, x: usize) -> &[usize] {
        self.groupoid.hom(x, x)
    }

    pub fn zero(&self, x: usize) -> usize {
        self.groupoid.id(x)
    }

    pub fn is_zero(&self, c: usize) -> bool {
        self.groupoid.is_identity(c)
    }

    pub fn add(&self, c1: usize, c2: usize) -> usize {
        self.groupoid.comp(c1, c2)
    }

    pub fn sum(&self, cs: &[usize]) -> usize {
        self.groupoid.sum(cs)
    }

    pub fn neg(&self, c: usize) -> usize {
        self.groupoid.neg(c)
    }

    pub fn name(&self, c: usize) -> &str {
        self.groupoid.arrow_name(c)
    }

    pub fn group_at(&self, x: usize) -> FiniteGroup {
        self.groupoid.vertex_group(x).0
    }

    pub fn is_abelian(&self) -> bool {
        self.groupoid
            .objects()
            .all(|x| self.fibre(x).iter().all(|&a| {
                self.fibre(x).iter().all(|&b| self.add(a, b) == self.add(b, a))
            }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_one_object_is_valid() {
        let g = FiniteGroupoid::discrete(1);
        assert!(g.validate().is_valid());
        assert_eq!(g.costar(0).unwrap(), vec![g.id(0)]);
    }

    #[test]
    fn indiscrete_two_objects() {
        let g = FiniteGroupoid::indiscrete(2);
        assert_eq!(g.num_arrows(), 4);
        assert!(g.validate().is_valid());
        let costar = g.costar(0).unwrap();
        assert_eq!(costar.len(), 2);
        assert!(costar.contains(&g.id(0)));
        assert!(matches!(g.costar(2), Err(Error::UnknownObject(2))));
    }

    #[test]
    fn composition_domain_violation_is_reported() {
        let mut t = FiniteGroupoid::indiscrete(2).tables();
        // x0x0 + x1x1 is not composable
        t.comp.push((0, 3, 0));
        let report = validate_groupoid(&t).unwrap();
        assert!(report.violates("composition domain"), "{report}");
    }

    #[test]
    fn unknown_arrow_in_comp_is_malformed() {
        let mut t = FiniteGroupoid::discrete(1).tables();
        t.comp.push((0, 0, 7));
        assert!(matches!(validate_groupoid(&t), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn empty_groupoid_is_rejected() {
        let t = GroupoidTables::default();
        assert!(validate_groupoid(&t).unwrap().violates("nonempty"));
    }

    #[test]
    fn group_as_groupoid_costar_is_everything() {
        let g = FiniteGroup::symmetric(3).to_groupoid();
        assert_eq!(g.costar(0).unwrap().len(), 6);
    }

    #[test]
    fn automorphism_counts() {
        let lim = SearchLimit::default();
        assert_eq!(enumerate_groupoid_automorphisms(&FiniteGroupoid::discrete(1), lim).unwrap().order(), 1);
        let c2 = FiniteGroup::cyclic(2).to_groupoid();
        assert_eq!(enumerate_groupoid_automorphisms(&c2, lim).unwrap().order(), 1);
        let ind = FiniteGroupoid::indiscrete(2);
        assert_eq!(enumerate_groupoid_automorphisms(&ind, lim).unwrap().order(), 2);
        let s3 = FiniteGroup::symmetric(3).to_groupoid();
        assert_eq!(enumerate_groupoid_automorphisms(&s3, lim).unwrap().order(), 6);
    }

    #[test]
    fn bundle_roundtrips_through_groupoid() {
        let b = GroupBundle::from_groups(
            vec!["x".into(), "y".into()],
            &[FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)],
        );
        let g = b.clone().into_groupoid();
        let back = GroupBundle::from_groupoid(FiniteGroupoid::from_tables(g.tables()).unwrap()).unwrap();
        assert_eq!(back, b);
        assert_eq!(b.fibre(1).len(), 3);
        assert!(GroupBundle::from_groupoid(FiniteGroupoid::indiscrete(2)).is_err());
    }

    #[test]
    fn search_limit_is_enforced() {
        let s3 = FiniteGroup::symmetric(3).to_groupoid();
        let err = enumerate_morphisms(&s3, &s3, &[0], false, SearchLimit::new(3));
        assert!(matches!(err, Err(Error::SearchSpaceExceeded { .. })));
    }
}
