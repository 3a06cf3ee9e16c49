//! Dense-exponent Buchberger engine.
//!
//! Callers compress the ring to the variables that actually occur before
//! handing polynomials over, so exponent vectors stay short.

use std::cmp::Ordering;

use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mono {
    e: Box<[u32]>,
    deg: u32,
    /// Degree in the front block of an elimination order, zero otherwise.
    wdeg: u32,
    mask: u64,
}

pub(crate) type Term<T> = (Mono, T);

#[derive(Clone, Debug)]
pub(crate) struct DPoly<T> {
    pub terms: Vec<Term<T>>,
    pub sugar: u32,
}

impl<T> DPoly<T> {
    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Lex,
    GrevLex,
    Block {
        front: Vec<usize>,
        rest: Vec<usize>,
        in_front: Vec<bool>,
    },
}

/// A polynomial ring on `nvars` dense variables with a compiled order.
#[derive(Clone, Debug)]
pub(crate) struct Ring {
    nvars: usize,
    kind: Kind,
}

impl Ring {
    /// `order` must already refer to the compressed variable indices.
    pub fn new(nvars: usize, order: &MonomialOrder) -> Self {
        let kind = match order {
            MonomialOrder::Lex => Kind::Lex,
            MonomialOrder::GrevLex => Kind::GrevLex,
            MonomialOrder::BlockElimination { front } => {
                let in_front: Vec<bool> = (0..nvars).map(|v| front.contains(&v)).collect();
                Kind::Block {
                    front: (0..nvars).filter(|&v| in_front[v]).collect(),
                    rest: (0..nvars).filter(|&v| !in_front[v]).collect(),
                    in_front,
                }
            }
        };
        Self { nvars, kind }
    }

    fn mono(&self, e: Box<[u32]>) -> Mono {
        let mut deg = 0;
        let mut wdeg = 0;
        let mut mask = 0u64;
        for (v, &x) in e.iter().enumerate() {
            if x > 0 {
                deg += x;
                mask |= 1 << (v % 64);
                if let Kind::Block { in_front, .. } = &self.kind {
                    if in_front[v] {
                        wdeg += x;
                    }
                }
            }
        }
        Mono { e, deg, wdeg, mask }
    }

    pub fn one(&self) -> Mono {
        self.mono(vec![0; self.nvars].into_boxed_slice())
    }

    pub fn mono_from(&self, m: &Monomial, map: &[usize]) -> Mono {
        let mut e = vec![0u32; self.nvars];
        for (v, x) in m.iter() {
            e[map[v]] += x;
        }
        self.mono(e.into_boxed_slice())
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match &self.kind {
            Kind::Lex => a.e.cmp(&b.e),
            Kind::GrevLex => a.deg.cmp(&b.deg).then_with(|| {
                for k in (0..self.nvars).rev() {
                    if a.e[k] != b.e[k] {
                        return b.e[k].cmp(&a.e[k]);
                    }
                }
                Ordering::Equal
            }),
            Kind::Block { front, rest, .. } => a
                .wdeg
                .cmp(&b.wdeg)
                .then_with(|| revlex(&a.e, &b.e, front))
                .then_with(|| (a.deg - a.wdeg).cmp(&(b.deg - b.wdeg)))
                .then_with(|| revlex(&a.e, &b.e, rest)),
        }
    }

    fn mul(&self, a: &Mono, b: &Mono) -> Mono {
        let e: Box<[u32]> = a.e.iter().zip(b.e.iter()).map(|(x, y)| x + y).collect();
        Mono {
            e,
            deg: a.deg + b.deg,
            wdeg: a.wdeg + b.wdeg,
            mask: a.mask | b.mask,
        }
    }

    fn divides(a: &Mono, b: &Mono) -> bool {
        a.mask & !b.mask == 0 && a.deg <= b.deg && a.e.iter().zip(b.e.iter()).all(|(x, y)| x <= y)
    }

    /// `b / a`, assuming `a | b`.
    fn div(&self, b: &Mono, a: &Mono) -> Mono {
        let e: Box<[u32]> = b.e.iter().zip(a.e.iter()).map(|(x, y)| x - y).collect();
        self.mono(e)
    }

    fn lcm(&self, a: &Mono, b: &Mono) -> Mono {
        let e: Box<[u32]> = a.e.iter().zip(b.e.iter()).map(|(x, y)| *x.max(y)).collect();
        self.mono(e)
    }

    fn coprime(a: &Mono, b: &Mono) -> bool {
        a.e.iter().zip(b.e.iter()).all(|(x, y)| *x == 0 || *y == 0)
    }

    pub fn to_monomial(&self, m: &Mono, back: &[usize]) -> Monomial {
        Monomial::from_pairs(m.e.iter().enumerate().map(|(v, &x)| (back[v], x)))
    }

    pub fn import<T: Field>(&self, p: &Polynomial<T>, map: &[usize]) -> DPoly<T> {
        let mut terms: Vec<Term<T>> = p
            .terms()
            .map(|(m, c)| (self.mono_from(m, map), c.clone()))
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let sugar = terms.iter().map(|t| t.0.deg).max().unwrap_or(0);
        DPoly { terms, sugar }
    }

    pub fn export<T: Field>(&self, p: &DPoly<T>, back: &[usize], nvars: usize) -> Polynomial<T> {
        Polynomial::from_terms(
            nvars,
            p.terms
                .iter()
                .map(|(m, c)| (self.to_monomial(m, back), c.clone())),
        )
    }

    /// `f - c * m * g`, all inputs sorted descending.
    fn sub_mul<T: Field>(&self, f: &[Term<T>], c: &T, m: &Mono, g: &[Term<T>]) -> Vec<Term<T>> {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|(gm, gc)| (self.mul(gm, m), gc.clone() * c.clone())).peekable();
        while i < f.len() {
            let Some(next) = gi.peek() else { break };
            match self.cmp(&f[i].0, &next.0) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (gm, gc) = gi.next().unwrap();
                    out.push((gm, -gc));
                }
                Ordering::Equal => {
                    let (gm, gc) = gi.next().unwrap();
                    let v = f[i].1.clone() - gc;
                    if !v.is_zero() {
                        out.push((gm, v));
                    }
                    i += 1;
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        out.extend(gi.map(|(gm, gc)| (gm, -gc)));
        out
    }

    fn find_reducer<'a, T>(&self, m: &Mono, basis: &'a [&DPoly<T>]) -> Option<&'a DPoly<T>> {
        let mut best: Option<&DPoly<T>> = None;
        for g in basis {
            if Self::divides(g.lm(), m) && best.map_or(true, |b| g.terms.len() < b.terms.len()) {
                best = Some(g);
            }
        }
        best
    }

    /// Full reduction of `f` modulo `basis` (monic leading terms not
    /// required).
    pub fn reduce<T: Field>(&self, f: DPoly<T>, basis: &[&DPoly<T>]) -> DPoly<T> {
        let sugar = f.sugar;
        let mut rem: Vec<Term<T>> = Vec::new();
        let mut cur = f.terms;
        let mut start = 0;
        while start < cur.len() {
            let (m, c) = &cur[start];
            match self.find_reducer(m, basis) {
                Some(g) => {
                    let q = self.div(m, g.lm());
                    let coeff = c.clone() / g.terms[0].1.clone();
                    cur = self.sub_mul(&cur[start + 1..], &coeff, &q, &g.terms[1..]);
                    start = 0;
                }
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        DPoly { terms: rem, sugar }
    }

    fn make_monic<T: Field>(&self, p: &mut DPoly<T>) {
        if let Some((_, lc)) = p.terms.first() {
            if lc.is_one() {
                return;
            }
            let inv = T::one() / lc.clone();
            for t in &mut p.terms {
                t.1 = t.1.clone() * inv.clone();
            }
        }
    }

    fn spoly<T: Field>(&self, f: &DPoly<T>, g: &DPoly<T>, lcm: &Mono) -> DPoly<T> {
        let mf = self.div(lcm, f.lm());
        let mg = self.div(lcm, g.lm());
        let cf = T::one() / f.terms[0].1.clone();
        let cg = T::one() / g.terms[0].1.clone();
        let left: Vec<Term<T>> = f.terms[1..]
            .iter()
            .map(|(m, c)| (self.mul(m, &mf), c.clone() * cf.clone()))
            .collect();
        let terms = self.sub_mul(&left, &cg, &mg, &g.terms[1..]);
        let sugar = (f.sugar + mf.deg).max(g.sugar + mg.deg);
        DPoly { terms, sugar }
    }

    /// Reduced Gröbner basis, sorted by descending leading monomial, monic.
    pub fn groebner<T: Field>(&self, gens: Vec<DPoly<T>>) -> Vec<DPoly<T>> {
        let mut gens: Vec<DPoly<T>> = gens.into_iter().filter(|p| !p.terms.is_empty()).collect();
        gens.sort_by(|a, b| self.cmp(a.lm(), b.lm()).then(a.terms.len().cmp(&b.terms.len())));
        let mut state = Buchberger {
            ring: self,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        for g in gens {
            state.add(g);
            if state.is_unit() {
                break;
            }
        }
        while !state.is_unit() {
            let Some(pair) = state.select() else { break };
            let s = self.spoly(&state.polys[pair.i], &state.polys[pair.j], &pair.lcm);
            state.add(DPoly {
                terms: s.terms,
                sugar: pair.sugar,
            });
        }
        state.finish()
    }
}

fn revlex(a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
    for &k in vars.iter().rev() {
        if a[k] != b[k] {
            return b[k].cmp(&a[k]);
        }
    }
    Ordering::Equal
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

struct Buchberger<'r, T> {
    ring: &'r Ring,
    polys: Vec<DPoly<T>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<T: Field> Buchberger<'_, T> {
    fn basis_refs(&self) -> Vec<&DPoly<T>> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }

    fn is_unit(&self) -> bool {
        self.active
            .iter()
            .any(|&k| self.polys[k].lm().deg == 0)
    }

    fn select(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Reduces `h`, then runs the Gebauer-Möller update if it survives.
    fn add(&mut self, h: DPoly<T>) {
        let ring = self.ring;
        let mut h = ring.reduce(h, &self.basis_refs());
        if h.terms.is_empty() {
            return;
        }
        ring.make_monic(&mut h);
        let hk = self.polys.len();
        let lt_h = h.lm().clone();
        let sugar_h = h.sugar;
        self.polys.push(h);

        let cands: Vec<(usize, Mono, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lt_g = self.polys[g].lm();
                (g, ring.lcm(&lt_h, lt_g), Ring::coprime(&lt_h, lt_g))
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<usize> = Vec::new();
        for a in 0..cands.len() {
            let (_, lcm_a, coprime_a) = &cands[a];
            let dominated = !coprime_a
                && (cands[a + 1..]
                    .iter()
                    .any(|(_, lcm_b, _)| Ring::divides(lcm_b, lcm_a))
                    || kept.iter().any(|&b| Ring::divides(&cands[b].1, lcm_a)));
            if !dominated {
                kept.push(a);
            }
        }
        // old pairs whose lcm is divisible by LT(h) strictly
        self.pairs.retain(|p| {
            !Ring::divides(&lt_h, &p.lcm)
                || ring.lcm(&self.polys[p.i].terms[0].0, &lt_h) == p.lcm
                || ring.lcm(&lt_h, &self.polys[p.j].terms[0].0) == p.lcm
        });
        for a in kept {
            let (g, lcm, coprime) = &cands[a];
            if *coprime {
                continue;
            }
            let lt_g = self.polys[*g].lm();
            let sugar = (sugar_h + lcm.deg - lt_h.deg).max(self.polys[*g].sugar + lcm.deg - lt_g.deg);
            self.pairs.push(Pair {
                i: *g,
                j: hk,
                lcm: lcm.clone(),
                sugar,
            });
        }
        let polys = &self.polys;
        self.active.retain(|&g| !Ring::divides(&lt_h, polys[g].lm()));
        self.active.push(hk);
    }

    fn finish(self) -> Vec<DPoly<T>> {
        let ring = self.ring;
        if self.is_unit() {
            let one = ring.one();
            return vec![DPoly {
                terms: vec![(one, T::one())],
                sugar: 0,
            }];
        }
        let mut basis: Vec<DPoly<T>> = self.active.iter().map(|&k| self.polys[k].clone()).collect();
        basis.sort_by(|a, b| ring.cmp(b.lm(), a.lm()));
        // minimality is maintained by the update; tail-reduce each element
        for i in 0..basis.len() {
            let others: Vec<&DPoly<T>> = basis
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p)
                .collect();
            let head = basis[i].terms[0].clone();
            let tail = DPoly {
                terms: basis[i].terms[1..].to_vec(),
                sugar: basis[i].sugar,
            };
            let reduced = ring.reduce(tail, &others);
            let mut terms = Vec::with_capacity(reduced.terms.len() + 1);
            terms.push(head);
            terms.extend(reduced.terms);
            basis[i].terms = terms;
        }
        basis
    }
}
