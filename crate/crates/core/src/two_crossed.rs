//! 2-crossed modules of groups.
//!
//! A complex `L → M → P` of groups with right actions of `P` on `L` and `M`,
//! an action of `M` on `L` making `L → M` a crossed module, and a Peiffer
//! lifting `⟨,⟩: M × M → L`. All groups here are written multiplicatively
//! with right actions `x^p`; the lifting axioms are checked verbatim:
//!
//! ```text
//! P1  ∂⟨m₀,m₁⟩ = m₀⁻¹ m₁⁻¹ m₀ m₁^{∂m₀}
//! P2  ⟨∂l, m⟩ = l⁻¹ l^m
//! P3  ⟨m, ∂l⟩ = (l^m)⁻¹ l^{∂m}
//! P4  ⟨m₀, m₁m₂⟩ = ⟨m₀,m₂⟩ ⟨m₀,m₁⟩^{m₂^{∂m₀}}
//! P5  ⟨m₀m₁, m₂⟩ = ⟨m₀,m₂⟩^{m₁} ⟨m₁, m₂^{∂m₀}⟩
//! P6  ⟨m₀,m₁⟩^p = ⟨m₀^p, m₁^p⟩
//! ```

use crate::group::FiniteGroup;
use crate::groupoid::is_permutation;
use crate::report::ValidationReport;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCrossedModule {
    pub l: FiniteGroup,
    pub m: FiniteGroup,
    pub p: FiniteGroup,
    pub d1: Vec<usize>,
    pub d2: Vec<usize>,
    /// `p_on_l[p][l] = l^p`.
    pub p_on_l: Vec<Vec<usize>>,
    /// `p_on_m[p][m] = m^p`.
    pub p_on_m: Vec<Vec<usize>>,
    /// `m_on_l[m][l] = l^m`.
    pub m_on_l: Vec<Vec<usize>>,
    /// `lift[m₀][m₁] = ⟨m₀, m₁⟩`.
    pub lift: Vec<Vec<usize>>,
}

impl TwoCrossedModule {
    /// `1 → 1 → P`.
    pub fn from_group(p: &FiniteGroup) -> Self {
        let one = FiniteGroup::trivial();
        TwoCrossedModule {
            l: one.clone(),
            m: one,
            p: p.clone(),
            d1: vec![0],
            d2: vec![p.identity()],
            p_on_l: vec![vec![0]; p.order()],
            p_on_m: vec![vec![0]; p.order()],
            m_on_l: vec![vec![0]],
            lift: vec![vec![0]],
        }
    }

    /// `L → M → 1` for a crossed module of groups, with the given lifting.
    pub fn over_trivial_p(
        l: &FiniteGroup,
        m: &FiniteGroup,
        d1: Vec<usize>,
        m_on_l: Vec<Vec<usize>>,
        lift: Vec<Vec<usize>>,
    ) -> Self {
        TwoCrossedModule {
            l: l.clone(),
            m: m.clone(),
            p: FiniteGroup::trivial(),
            d1,
            d2: vec![0; m.order()],
            p_on_l: vec![l.elements().collect()],
            p_on_m: vec![m.elements().collect()],
            m_on_l,
            lift,
        }
    }

    pub fn lift(&self, m0: usize, m1: usize) -> usize {
        self.lift[m0][m1]
    }

    pub fn orders(&self) -> (usize, usize, usize) {
        (self.l.order(), self.m.order(), self.p.order())
    }

    fn check_shape(&self) -> Result<()> {
        let (nl, nm, np) = self.orders();
        let bad = |what: &str| Err(Error::MalformedTable(format!("{what} has the wrong shape")));
        let square = |t: &Vec<Vec<usize>>, rows: usize, cols: usize, range: usize| {
            t.len() == rows && t.iter().all(|r| r.len() == cols && r.iter().all(|&v| v < range))
        };
        if self.d1.len() != nl || self.d1.iter().any(|&v| v >= nm) {
            return bad("d1");
        }
        if self.d2.len() != nm || self.d2.iter().any(|&v| v >= np) {
            return bad("d2");
        }
        if !square(&self.p_on_l, np, nl, nl) {
            return bad("P-action on L");
        }
        if !square(&self.p_on_m, np, nm, nm) {
            return bad("P-action on M");
        }
        if !square(&self.m_on_l, nm, nl, nl) {
            return bad("M-action on L");
        }
        if !square(&self.lift, nm, nm, nl) {
            return bad("lifting");
        }
        Ok(())
    }
}

fn check_action(report: &mut ValidationReport, name: &str, acting: &FiniteGroup, on: &FiniteGroup, t: &[Vec<usize>]) {
    for x in on.elements() {
        report.check(t[acting.identity()][x] == x, name, || {
            format!("identity moves {}", on.name(x))
        });
    }
    for g in acting.elements() {
        for x in on.elements() {
            for y in on.elements() {
                report.check(t[g][on.mul(x, y)] == on.mul(t[g][x], t[g][y]), name, || {
                    format!("{} is not multiplicative on ({}, {})", acting.name(g), on.name(x), on.name(y))
                });
            }
            for h in acting.elements() {
                report.check(t[acting.mul(g, h)][x] == t[h][t[g][x]], name, || {
                    format!("{}^({}{}) ≠ ({}^{})^{}", on.name(x), acting.name(g), acting.name(h), on.name(x), acting.name(g), acting.name(h))
                });
            }
        }
    }
}

/// Checks the complex, equivariance, crossed-module and compatibility
/// conditions and P1–P6 over every tuple.
pub fn validate_2crossed(t: &TwoCrossedModule) -> Result<ValidationReport> {
    t.check_shape()?;
    let (l, m, p) = (&t.l, &t.m, &t.p);
    let lift = |a: usize, b: usize| t.lift[a][b];
    let lm = |x: usize, g: usize| t.m_on_l[g][x];
    let lp = |x: usize, q: usize| t.p_on_l[q][x];
    let mp = |x: usize, q: usize| t.p_on_m[q][x];
    let mut r = ValidationReport::new();

    for a in l.elements() {
        for b in l.elements() {
            r.check(t.d1[l.mul(a, b)] == m.mul(t.d1[a], t.d1[b]), "d1 homomorphism", || {
                format!("({}, {})", l.name(a), l.name(b))
            });
        }
        r.check(t.d2[t.d1[a]] == p.identity(), "complex", || {
            format!("∂∂{} ≠ 1", l.name(a))
        });
    }
    for a in m.elements() {
        for b in m.elements() {
            r.check(t.d2[m.mul(a, b)] == p.mul(t.d2[a], t.d2[b]), "d2 homomorphism", || {
                format!("({}, {})", m.name(a), m.name(b))
            });
        }
    }
    check_action(&mut r, "P-action on L", p, l, &t.p_on_l);
    check_action(&mut r, "P-action on M", p, m, &t.p_on_m);
    check_action(&mut r, "M-action on L", m, l, &t.m_on_l);
    if !r.is_valid() {
        return Ok(r);
    }

    for q in p.elements() {
        for a in l.elements() {
            r.check(t.d1[lp(a, q)] == mp(t.d1[a], q), "d1 P-equivariant", || {
                format!("l = {}, p = {}", l.name(a), p.name(q))
            });
            for g in m.elements() {
                r.check(lp(lm(a, g), q) == lm(lp(a, q), mp(g, q)), "compatibility", || {
                    format!("l = {}, m = {}, p = {}", l.name(a), m.name(g), p.name(q))
                });
            }
        }
        for g in m.elements() {
            r.check(t.d2[mp(g, q)] == p.conj(t.d2[g], q), "d2 P-equivariant", || {
                format!("m = {}, p = {}", m.name(g), p.name(q))
            });
        }
    }
    for a in l.elements() {
        for g in m.elements() {
            r.check(t.d1[lm(a, g)] == m.conj(t.d1[a], g), "CM1", || {
                format!("l = {}, m = {}", l.name(a), m.name(g))
            });
        }
        for b in l.elements() {
            r.check(lm(a, t.d1[b]) == l.conj(a, b), "CM2", || {
                format!("l = {}, l' = {}", l.name(a), l.name(b))
            });
        }
    }

    for m0 in m.elements() {
        let dm0 = t.d2[m0];
        for m1 in m.elements() {
            let rhs = m.product(&[m.inv(m0), m.inv(m1), m0, mp(m1, dm0)]);
            r.check(t.d1[lift(m0, m1)] == rhs, "P1", || {
                format!("m₀ = {}, m₁ = {}", m.name(m0), m.name(m1))
            });
            for m2 in m.elements() {
                let p4 = l.mul(lift(m0, m2), lm(lift(m0, m1), mp(m2, dm0)));
                r.check(lift(m0, m.mul(m1, m2)) == p4, "P4", || {
                    format!("m₀ = {}, m₁ = {}, m₂ = {}", m.name(m0), m.name(m1), m.name(m2))
                });
                let p5 = l.mul(lm(lift(m0, m2), m1), lift(m1, mp(m2, dm0)));
                r.check(lift(m.mul(m0, m1), m2) == p5, "P5", || {
                    format!("m₀ = {}, m₁ = {}, m₂ = {}", m.name(m0), m.name(m1), m.name(m2))
                });
            }
            for q in p.elements() {
                r.check(lp(lift(m0, m1), q) == lift(mp(m0, q), mp(m1, q)), "P6", || {
                    format!("m₀ = {}, m₁ = {}, p = {}", m.name(m0), m.name(m1), p.name(q))
                });
            }
        }
        for a in l.elements() {
            r.check(lift(t.d1[a], m0) == l.mul(l.inv(a), lm(a, m0)), "P2", || {
                format!("l = {}, m = {}", l.name(a), m.name(m0))
            });
            let p3 = l.mul(l.inv(lm(a, m0)), lp(a, dm0));
            r.check(lift(m0, t.d1[a]) == p3, "P3", || {
                format!("m = {}, l = {}", m.name(m0), l.name(a))
            });
        }
    }
    Ok(r)
}

/// Three group isomorphisms between 2-crossed modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCrossedIsomorphism {
    pub on_l: Vec<usize>,
    pub on_m: Vec<usize>,
    pub on_p: Vec<usize>,
}

impl TwoCrossedIsomorphism {
    pub fn identity(t: &TwoCrossedModule) -> Self {
        TwoCrossedIsomorphism {
            on_l: t.l.elements().collect(),
            on_m: t.m.elements().collect(),
            on_p: t.p.elements().collect(),
        }
    }

    /// Checks that the maps are group isomorphisms commuting with both
    /// boundaries, all three actions and the lifting.
    pub fn validate(&self, a: &TwoCrossedModule, b: &TwoCrossedModule) -> ValidationReport {
        let mut r = ValidationReport::new();
        let (fl, fm, fp) = (&self.on_l, &self.on_m, &self.on_p);
        if a.orders() != b.orders() || fl.len() != a.l.order() || fm.len() != a.m.order() || fp.len() != a.p.order() {
            r.fail("shape", "orders differ");
            return r;
        }
        r.check(is_permutation(fl) && a.l.is_homomorphism(&b.l, fl), "L isomorphism", String::new);
        r.check(is_permutation(fm) && a.m.is_homomorphism(&b.m, fm), "M isomorphism", String::new);
        r.check(is_permutation(fp) && a.p.is_homomorphism(&b.p, fp), "P isomorphism", String::new);
        if !r.is_valid() {
            return r;
        }
        for x in a.l.elements() {
            r.check(b.d1[fl[x]] == fm[a.d1[x]], "d1", || a.l.name(x).to_string());
            for q in a.p.elements() {
                r.check(b.p_on_l[fp[q]][fl[x]] == fl[a.p_on_l[q][x]], "P-action on L", || {
                    format!("({}, {})", a.l.name(x), a.p.name(q))
                });
            }
            for g in a.m.elements() {
                r.check(b.m_on_l[fm[g]][fl[x]] == fl[a.m_on_l[g][x]], "M-action on L", || {
                    format!("({}, {})", a.l.name(x), a.m.name(g))
                });
            }
        }
        for g in a.m.elements() {
            r.check(b.d2[fm[g]] == fp[a.d2[g]], "d2", || a.m.name(g).to_string());
            for q in a.p.elements() {
                r.check(b.p_on_m[fp[q]][fm[g]] == fm[a.p_on_m[q][g]], "P-action on M", || {
                    format!("({}, {})", a.m.name(g), a.p.name(q))
                });
            }
            for h in a.m.elements() {
                r.check(b.lift[fm[g]][fm[h]] == fl[a.lift[g][h]], "lifting", || {
                    format!("({}, {})", a.m.name(g), a.m.name(h))
                });
            }
        }
        r
    }
}
