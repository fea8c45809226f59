//! Buchberger's algorithm for submodules of R^p, R a polynomial ring over a
//! field. Ideals are the case p = 1.
//!
//! Vectors are ordered position-over-term: the leading term of a vector is
//! the lex-leading term of its first nonzero component. Optionally every
//! basis element carries its expression in terms of the input generators.

use std::collections::HashSet;

use crate::algebra::{Monomial, R0Element, Scalar, ScalarRing};

pub(crate) type Vector = Vec<R0Element>;

#[derive(Clone, Debug)]
pub(crate) struct Lead {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

pub(crate) fn lead(v: &[R0Element]) -> Option<Lead> {
    v.iter().enumerate().find_map(|(pos, c)| {
        c.leading_term().map(|(m, a)| Lead {
            pos,
            mono: m.clone(),
            coeff: a.clone(),
        })
    })
}

fn mul_vec(v: &[R0Element], m: &Monomial, c: &Scalar) -> Vector {
    v.iter().map(|x| x.mul_term(m, c)).collect()
}

fn sub_vec(a: &mut [R0Element], b: &[R0Element]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.sub(y);
        }
    }
}

/// A reduced Gröbner basis of the submodule generated by `ngens` vectors.
#[derive(Clone, Debug)]
pub(crate) struct ModuleBasis {
    rank: usize,
    base: ScalarRing,
    nvars: usize,
    ngens: usize,
    elements: Vec<Vector>,
    leads: Vec<Lead>,
    cofactors: Option<Vec<Vector>>,
}

impl ModuleBasis {
    /// Runs Buchberger on `gens`, each a vector of length `rank` over
    /// `base[x_1..x_nvars]`. `base` must be a field.
    pub fn compute(gens: &[Vector], rank: usize, base: ScalarRing, nvars: usize, track: bool) -> Self {
        assert!(base.is_field(), "Gröbner bases need field coefficients");
        let ngens = gens.len();
        let mut gb = ModuleBasis {
            rank,
            base,
            nvars,
            ngens,
            elements: Vec::new(),
            leads: Vec::new(),
            cofactors: track.then(Vec::new),
        };
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        // Smallest leads first, each reduced by those already in: redundant
        // generators then vanish before they spawn pairs.
        let mut order: Vec<usize> = (0..ngens).collect();
        order.sort_by_cached_key(|&j| lead(&gens[j]).map(|l| (l.pos, l.mono.total_degree(), l.mono)));
        for j in order {
            assert_eq!(gens[j].len(), rank, "generator has wrong length");
            let cof = track.then(|| gb.unit_cofactor(j));
            let (r, rcof) = gb.reduce_tracked(&gens[j], cof, None);
            gb.push(r, rcof, &mut pending);
        }
        while let Some((i, j)) = gb.next_pair(&pending) {
            pending.remove(&(i, j));
            if gb.skip_pair(i, j, &pending) {
                continue;
            }
            let (s, scof) = gb.s_vector(i, j);
            let (r, rcof) = gb.reduce_tracked(&s, scof, None);
            gb.push(r, rcof, &mut pending);
        }
        gb.finish();
        gb
    }

    fn unit_cofactor(&self, j: usize) -> Vector {
        let mut v = vec![R0Element::zero(self.base, self.nvars); self.ngens];
        v[j] = R0Element::one(self.base, self.nvars);
        v
    }

    fn zero_cofactor(&self) -> Vector {
        vec![R0Element::zero(self.base, self.nvars); self.ngens]
    }

    // Adds a (not yet normalized) element unless it is zero.
    fn push(&mut self, v: Vector, cof: Option<Vector>, pending: &mut HashSet<(usize, usize)>) {
        let Some(l) = lead(&v) else {
            return;
        };
        let inv = l.coeff.inverse().expect("field coefficient");
        let one = Monomial::one(self.nvars);
        let v = mul_vec(&v, &one, &inv);
        let k = self.elements.len();
        for (i, li) in self.leads.iter().enumerate() {
            if li.pos == l.pos {
                pending.insert((i, k));
            }
        }
        if let (Some(cofs), Some(c)) = (self.cofactors.as_mut(), cof) {
            cofs.push(mul_vec(&c, &one, &inv));
        }
        self.leads.push(Lead {
            pos: l.pos,
            mono: l.mono,
            coeff: self.base.one(),
        });
        self.elements.push(v);
    }

    fn pair_lcm(&self, i: usize, j: usize) -> Monomial {
        self.leads[i].mono.lcm(&self.leads[j].mono)
    }

    // Normal selection strategy: smallest lcm degree, ties by lex then age.
    fn next_pair(&self, pending: &HashSet<(usize, usize)>) -> Option<(usize, usize)> {
        pending.iter().copied().min_by(|&(a, b), &(c, d)| {
            let la = self.pair_lcm(a, b);
            let lc = self.pair_lcm(c, d);
            la.total_degree()
                .cmp(&lc.total_degree())
                .then_with(|| la.cmp(&lc))
                .then_with(|| (b, a).cmp(&(d, c)))
        })
    }

    fn skip_pair(&self, i: usize, j: usize, pending: &HashSet<(usize, usize)>) -> bool {
        let (li, lj) = (&self.leads[i], &self.leads[j]);
        // Coprime leading monomials: only valid for ideals.
        if self.rank == 1 && li.mono.coprime(&lj.mono) {
            return true;
        }
        let lcm = li.mono.lcm(&lj.mono);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        self.leads.iter().enumerate().any(|(k, lk)| {
            k != i
                && k != j
                && lk.pos == li.pos
                && lk.mono.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        })
    }

    fn s_vector(&self, i: usize, j: usize) -> (Vector, Option<Vector>) {
        let lcm = self.pair_lcm(i, j);
        let mi = self.leads[i].mono.quotient_of(&lcm).expect("lcm");
        let mj = self.leads[j].mono.quotient_of(&lcm).expect("lcm");
        let one = self.base.one();
        let mut s = mul_vec(&self.elements[i], &mi, &one);
        sub_vec(&mut s, &mul_vec(&self.elements[j], &mj, &one));
        let cof = self.cofactors.as_ref().map(|cofs| {
            let mut c = mul_vec(&cofs[i], &mi, &one);
            sub_vec(&mut c, &mul_vec(&cofs[j], &mj, &one));
            c
        });
        (s, cof)
    }

    /// Full reduction of `v`; returns the remainder and, when tracking, the
    /// cofactors of the remainder given those of `v`.
    fn reduce_tracked(&self, v: &[R0Element], cof: Option<Vector>, skip: Option<usize>) -> (Vector, Option<Vector>) {
        let mut p = v.to_vec();
        let mut rem = vec![R0Element::zero(self.base, self.nvars); self.rank];
        let mut cof = cof;
        while let Some(l) = lead(&p) {
            let divisor = self
                .leads
                .iter()
                .enumerate()
                .find(|(k, lk)| Some(*k) != skip && lk.pos == l.pos && lk.mono.divides(&l.mono));
            let term_only = R0Element::term(self.base, l.mono.clone(), l.coeff.clone());
            match divisor {
                Some((k, lk)) => {
                    let qm = lk.mono.quotient_of(&l.mono).expect("divides");
                    let qc = l.coeff.exact_div(&lk.coeff).expect("field");
                    sub_vec(&mut p, &mul_vec(&self.elements[k], &qm, &qc));
                    if let (Some(c), Some(cofs)) = (cof.as_mut(), self.cofactors.as_ref()) {
                        sub_vec(c, &mul_vec(&cofs[k], &qm, &qc));
                    }
                }
                None => {
                    rem[l.pos] = rem[l.pos].add(&term_only);
                    p[l.pos] = p[l.pos].sub(&term_only);
                }
            }
        }
        (rem, cof)
    }

    // Minimizes and interreduces into the reduced basis.
    fn finish(&mut self) {
        let n = self.elements.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && keep[j]
                    && self.leads[j].pos == self.leads[i].pos
                    && self.leads[j].mono.divides(&self.leads[i].mono)
                    && (self.leads[j].mono != self.leads[i].mono || j < i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut elements = Vec::new();
        let mut leads = Vec::new();
        let mut cofactors = self.cofactors.as_ref().map(|_| Vec::new());
        for i in (0..n).filter(|&i| keep[i]) {
            elements.push(self.elements[i].clone());
            leads.push(self.leads[i].clone());
            if let (Some(out), Some(cofs)) = (cofactors.as_mut(), self.cofactors.as_ref()) {
                out.push(cofs[i].clone());
            }
        }
        self.elements = elements;
        self.leads = leads;
        self.cofactors = cofactors;
        for i in 0..self.elements.len() {
            let v = self.elements[i].clone();
            let l = lead(&v).expect("nonzero basis element");
            // The leading term is irreducible by the others; reduce the tail.
            let mut head = vec![R0Element::zero(self.base, self.nvars); self.rank];
            head[l.pos] = R0Element::term(self.base, l.mono.clone(), l.coeff.clone());
            let mut tail = v.clone();
            sub_vec(&mut tail, &head);
            // Starting from v's cofactors yields those of head + remainder.
            let cof = self.cofactors.as_ref().map(|c| c[i].clone());
            let (r, rcof) = self.reduce_tracked(&tail, cof, Some(i));
            let mut out = head;
            for (x, y) in out.iter_mut().zip(&r) {
                *x = x.add(y);
            }
            self.elements[i] = out;
            if let (Some(cofs), Some(c)) = (self.cofactors.as_mut(), rcof) {
                cofs[i] = c;
            }
        }
        let mut order: Vec<usize> = (0..self.elements.len()).collect();
        order.sort_by(|&a, &b| {
            let (la, lb) = (&self.leads[a], &self.leads[b]);
            la.pos.cmp(&lb.pos).then_with(|| lb.mono.cmp(&la.mono))
        });
        self.elements = order.iter().map(|&i| self.elements[i].clone()).collect();
        self.leads = order.iter().map(|&i| self.leads[i].clone()).collect();
        if let Some(cofs) = self.cofactors.take() {
            self.cofactors = Some(order.iter().map(|&i| cofs[i].clone()).collect());
        }
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    #[cfg(test)]
    /// Expressions of the basis elements in the input generators.
    pub fn cofactors(&self) -> Option<&[Vector]> {
        self.cofactors.as_deref()
    }

    /// Remainder of `v` on division by the basis.
    pub fn remainder(&self, v: &[R0Element]) -> Vector {
        self.reduce_tracked(v, None, None).0
    }

    /// For `v` in the module, coefficients `h` with `v = Σ h_j g_j` over the
    /// input generators. Requires tracking; `None` when `v` is not a member.
    pub fn express(&self, v: &[R0Element]) -> Option<Vector> {
        assert!(self.cofactors.is_some(), "cofactor tracking is off");
        let (r, c) = self.reduce_tracked(v, Some(self.zero_cofactor()), None);
        if r.iter().all(R0Element::is_zero) {
            // reduce_tracked computed 0 - Σ q_k C_k, so negate.
            c.map(|c| c.iter().map(R0Element::neg).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[R0Element]) -> bool {
        self.remainder(v).iter().all(R0Element::is_zero)
    }

    /// True iff the module is all of R^p.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|pos| self.leads.iter().any(|l| l.pos == pos && l.mono.is_one()))
    }
}

/// Reduced Gröbner basis of an ideal, as polynomials.
pub(crate) fn ideal_basis(gens: &[R0Element], base: ScalarRing, nvars: usize, track: bool) -> ModuleBasis {
    let vecs: Vec<Vector> = gens.iter().map(|g| vec![g.clone()]).collect();
    ModuleBasis::compute(&vecs, 1, base, nvars, track)
}
