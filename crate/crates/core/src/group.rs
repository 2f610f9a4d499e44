//! Finite groups given by explicit multiplication tables.
//!
//! Groups are written multiplicatively here (`mul`, `inv`). The additive
//! notation used for groupoids elsewhere in the crate is a matter of naming
//! only: a one-object groupoid and a [`FiniteGroup`] carry the same data, see
//! [`FiniteGroup::to_groupoid`].

use std::collections::HashMap;
use std::hash::Hash;

use crate::groupoid::{enumerate_morphisms, FiniteGroupoid};
use crate::report::ValidationReport;
use crate::{Error, Result, SearchLimit};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Checks the group axioms on a square table. Out-of-range entries are a
/// [`Error::MalformedTable`].
pub fn validate_group_table(table: &[Vec<usize>]) -> Result<ValidationReport> {
    let n = table.len();
    let mut report = ValidationReport::new();
    if n == 0 {
        report.fail("nonempty", "group has no elements");
        return Ok(report);
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedTable(format!(
                "entry {bad} in row {i} is not an element"
            )));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = table[table[a][b]][c];
                let rhs = table[a][table[b][c]];
                report.check(lhs == rhs, "associativity", || format!("({a},{b},{c})"));
            }
        }
    }
    let identity = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a));
    match identity {
        None => report.fail("identity", "no two-sided identity"),
        Some(e) => {
            for a in 0..n {
                let has_inverse = (0..n).any(|b| table[a][b] == e && table[b][a] == e);
                report.check(has_inverse, "inverse", || format!("{a}"));
            }
        }
    }
    Ok(report)
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, `table[a][b] = a·b`.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        if names.len() != table.len() {
            return Err(Error::MalformedTable(format!(
                "{} names for {} elements",
                names.len(),
                table.len()
            )));
        }
        validate_group_table(&table)?.into_result()?;
        let n = table.len();
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Ok(Self::from_flat_unchecked(names, flat, n))
    }

    pub(crate) fn from_flat_unchecked(names: Vec<String>, table: Vec<usize>, n: usize) -> Self {
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] == a))
            .expect("group table without identity");
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a * n + b] == identity)
                    .expect("group table without inverse")
            })
            .collect();
        FiniteGroup {
            names,
            table,
            identity,
            inverse,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group of order `n` on `0..n` with addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        Self::from_flat_unchecked(names, table, n)
    }

    /// Permutation group generated by `generators`, each a permutation of
    /// `0..degree` in image form. Elements are listed in breadth-first order
    /// from the identity and named by their image lists.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut next = 0;
        while next < elements.len() {
            let p = elements[next].clone();
            next += 1;
            for g in generators {
                let q = compose_perm(&p, g);
                if !index.contains_key(&q) {
                    index.insert(q.clone(), elements.len());
                    elements.push(q);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for p in &elements {
            for q in &elements {
                table.push(index[&compose_perm(p, q)]);
            }
        }
        let names = elements
            .iter()
            .map(|p| {
                let body: Vec<String> = p.iter().map(|i| i.to_string()).collect();
                format!("[{}]", body.join(""))
            })
            .collect();
        Self::from_flat_unchecked(names, table, n)
    }

    /// The symmetric group on `degree` points (permutations act on the right:
    /// `p·q` applies `p` first).
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            gens.push(swap);
            let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            gens.push(cycle);
        }
        Self::from_permutations(degree, &gens)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                table.push(a.mul(xa, ya) * nb + b.mul(xb, yb));
            }
        }
        let names = (0..n)
            .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
            .collect();
        Self::from_flat_unchecked(names, table, n)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order());
        self.names = names;
        self
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    /// `g⁻¹·a·g`, the right conjugation action.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.product(&[self.inv(g), a, g])
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.product(&[self.inv(a), self.inv(b), a, b])
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, |acc, k| lcm(acc, k))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(|row| row.to_vec())
            .collect()
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        if h.is_empty() || h.iter().any(|&x| x >= self.order()) {
            return false;
        }
        let set: std::collections::HashSet<usize> = h.iter().copied().collect();
        h.iter()
            .all(|&a| h.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal_subgroup(&self, h: &[usize]) -> bool {
        if !self.is_subgroup(h) {
            return false;
        }
        let set: std::collections::HashSet<usize> = h.iter().copied().collect();
        self.elements()
            .all(|g| h.iter().all(|&a| set.contains(&self.conj(a, g))))
    }

    /// The subgroup on `h` (in the given order) together with its inclusion.
    pub fn subgroup(&self, h: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(h) {
            return Err(Error::MalformedTable("not a subgroup".into()));
        }
        let pos: HashMap<usize, usize> = h.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = h.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in h {
            for &b in h {
                table.push(pos[&self.mul(a, b)]);
            }
        }
        let names = h.iter().map(|&a| self.names[a].clone()).collect();
        Ok((Self::from_flat_unchecked(names, table, n), h.to_vec()))
    }

    /// A greedy generating set: repeatedly adds the smallest element outside
    /// the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        while let Some(g) = self.elements().find(|&a| !inside[a]) {
            gens.push(g);
            let mut i = 0;
            // closure of span under right multiplication by generators
            for &a in &span {
                inside[a] = true;
            }
            let mut queue = span.clone();
            while i < queue.len() {
                let a = queue[i];
                i += 1;
                for &s in &gens {
                    let b = self.mul(a, s);
                    if !inside[b] {
                        inside[b] = true;
                        queue.push(b);
                    }
                }
            }
            span = queue;
        }
        gens
    }

    /// The group as a groupoid with one object `*`.
    pub fn to_groupoid(&self) -> FiniteGroupoid {
        FiniteGroupoid::from_group(self)
    }

    /// All group isomorphisms `self → other`, as image vectors.
    pub fn isomorphisms(&self, other: &FiniteGroup, limit: SearchLimit) -> Result<Vec<Vec<usize>>> {
        if self.order() != other.order() {
            return Ok(Vec::new());
        }
        let maps = enumerate_morphisms(&self.to_groupoid(), &other.to_groupoid(), &[0], true, limit)?;
        Ok(maps)
    }

    /// All homomorphisms `self → other`, as image vectors.
    pub fn homomorphisms(&self, other: &FiniteGroup, limit: SearchLimit) -> Result<Vec<Vec<usize>>> {
        enumerate_morphisms(&self.to_groupoid(), &other.to_groupoid(), &[0], false, limit)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        if self.order() != other.order() || self.order_profile() != other.order_profile() {
            return false;
        }
        self.isomorphisms(other, SearchLimit::unbounded())
            .map(|v| !v.is_empty())
            .unwrap_or(false)
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Checks that `map` is a homomorphism `self → other`.
    pub fn is_homomorphism(&self, other: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&x| x < other.order())
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b]))
            })
    }
}

fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    // p first, then q
    p.iter().map(|&i| q[i]).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A finite group whose elements are concrete values (derivations, morphisms,
/// sections, ...), together with its index table.
///
/// Element `i` of [`ConcreteGroup::group`] is [`ConcreteGroup::element`]`(i)`.
#[derive(Debug, Clone)]
pub struct ConcreteGroup<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    group: FiniteGroup,
}

impl<T: Clone + Eq + Hash> ConcreteGroup<T> {
    /// Tabulates `mul` over `elements`; fails if the set is not closed or the
    /// table is not a group.
    pub fn from_elements(
        elements: Vec<T>,
        mul: impl Fn(&T, &T) -> T,
        name: impl Fn(usize, &T) -> String,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::MalformedTable(format!("duplicate element at {i}")));
            }
        }
        let n = elements.len();
        let mut table = vec![vec![0; n]; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = mul(a, b);
                table[i][j] = *index.get(&c).ok_or_else(|| {
                    Error::Inconsistent(format!("product of elements {i} and {j} leaves the set"))
                })?;
            }
        }
        let names = elements.iter().enumerate().map(|(i, e)| name(i, e)).collect();
        let group = FiniteGroup::from_table(names, table)?;
        Ok(ConcreteGroup {
            elements,
            index,
            group,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_element(&self) -> &T {
        &self.elements[self.group.identity()]
    }
}

/// Semidirect product `N ⋊ H` for a right action `n ↦ n^h` of `H` on `N` by
/// automorphisms.
///
/// Elements are pairs `(n, h)` stored at index `n + |N|·h` and multiplied by
/// `(n₁,h₁)(n₂,h₂) = (n₁^{h₂}·n₂, h₁h₂)`.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    act: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup> {
    let (nn, nh) = (n.order(), h.order());
    let table: Vec<Vec<usize>> = (0..nh)
        .map(|k| (0..nn).map(|a| act(a, k)).collect())
        .collect();
    if table.iter().flatten().any(|&v| v >= nn) {
        return Err(Error::NotAnAction("image outside N".into()));
    }
    for a in 0..nn {
        if table[h.identity()][a] != a {
            return Err(Error::NotAnAction(format!(
                "identity of H moves {}",
                n.name(a)
            )));
        }
    }
    for k in 0..nh {
        for a in 0..nn {
            for b in 0..nn {
                if table[k][n.mul(a, b)] != n.mul(table[k][a], table[k][b]) {
                    return Err(Error::NotAnAction(format!(
                        "{} does not act by a homomorphism",
                        h.name(k)
                    )));
                }
            }
        }
        for l in 0..nh {
            for a in 0..nn {
                if table[h.mul(k, l)][a] != table[l][table[k][a]] {
                    return Err(Error::NotAnAction(format!(
                        "(n^{})^{} differs from n^({}{})",
                        h.name(k),
                        h.name(l),
                        h.name(k),
                        h.name(l)
                    )));
                }
            }
        }
    }
    let size = nn * nh;
    let mut flat = Vec::with_capacity(size * size);
    for x in 0..size {
        let (n1, h1) = (x % nn, x / nn);
        for y in 0..size {
            let (n2, h2) = (y % nn, y / nn);
            let nprod = n.mul(table[h2][n1], n2);
            flat.push(nprod + nn * h.mul(h1, h2));
        }
    }
    let names = (0..size)
        .map(|x| format!("({},{})", n.name(x % nn), h.name(x / nn)))
        .collect();
    Ok(FiniteGroup::from_flat_unchecked(names, flat, size))
}
