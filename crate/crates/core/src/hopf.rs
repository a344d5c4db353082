//! Finite-dimensional Hopf algebras given by structure constants.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Field, Scalar};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Raw structure constants, as read from a file or produced by a
/// constructor. `antipode[i]` holds the coordinates of S(e_i).
#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    pub field: Field,
    pub labels: Vec<String>,
    /// (i, j, k, c): e_i e_j has coefficient c on e_k.
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub unit: Vec<Scalar>,
    /// (i, j, k, c): Δ(e_i) has coefficient c on e_j ⊗ e_k.
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<Scalar>>,
    pub pivot: Option<Vec<Scalar>>,
}

type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    id: u64,
    field: Field,
    n: usize,
    labels: Vec<String>,
    mult: Vec<Sparse>,
    unit: Vec<Scalar>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: Vec<Sparse>,
    antipode_inv: Option<Vec<Sparse>>,
    pivot: Option<Vec<Scalar>>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.pivot == other.pivot
    }
}

fn accumulate(out: &mut Sparse, k: usize, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match out.iter_mut().find(|(j, _)| *j == k) {
        Some((_, v)) => *v = &*v + &c,
        None => out.push((k, c)),
    }
}

fn finish(mut s: Sparse) -> Sparse {
    s.retain(|(_, c)| !c.is_zero());
    s.sort_by_key(|(k, _)| *k);
    s
}

fn sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// An element of a specific algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    alg: u64,
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { alg: self.alg, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Element { alg: self.alg, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.scale(&other.coeffs[0].field().from_int(-1)))
    }
}

/// A linear functional on a specific algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    alg: u64,
    coeffs: Vec<Scalar>,
}

impl Functional {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        Functional { alg: self.alg, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// A sparse element of H^{⊗k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    alg: u64,
    order: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Option<&Scalar> {
        self.terms.get(idx)
    }

    /// The value of an order-0 tensor.
    pub fn as_scalar(&self, field: &Field) -> Option<Scalar> {
        (self.order == 0).then(|| self.terms.get(&Vec::new()).cloned().unwrap_or_else(|| field.zero()))
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        debug_assert_eq!(idx.len(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        if self.alg != other.alg || self.order != other.order {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.neg());
        }
        Ok(out)
    }
}

/// Result of a single axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Basis indices of the first failing instance.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    fn record(&mut self, axiom: &'static str, witness: Option<Vec<usize>>) {
        self.checks.push(AxiomCheck { axiom, passed: witness.is_none(), witness });
    }

    /// The first failure as an error.
    pub fn into_result(self) -> Result<()> {
        match self.checks.into_iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => Err(Error::AxiomFailure {
                axiom: c.axiom.to_string(),
                witness: c.witness.and_then(|w| w.first().copied()).unwrap_or(0),
            }),
        }
    }
}

type Acc2 = BTreeMap<(usize, usize), Scalar>;

fn acc2_add(m: &mut Acc2, key: (usize, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&key) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                m.remove(&key);
            }
        }
        None => {
            m.insert(key, c);
        }
    }
}

impl HopfAlgebra {
    /// Builds the algebra from raw data. Only shapes are validated here;
    /// the Hopf axioms are checked by [`HopfAlgebra::verify_axioms`].
    pub fn new(data: HopfData) -> Result<HopfAlgebra> {
        let n = data.unit.len();
        let bad = |what: &str| Error::Invalid(alloc::format!("{what} has the wrong shape for dimension {n}"));
        if n == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        if data.labels.len() != n {
            return Err(bad("labels"));
        }
        if data.counit.len() != n {
            return Err(bad("counit"));
        }
        if data.antipode.len() != n || data.antipode.iter().any(|r| r.len() != n) {
            return Err(bad("antipode"));
        }
        if data.pivot.as_ref().is_some_and(|p| p.len() != n) {
            return Err(bad("pivot"));
        }
        let f = &data.field;
        let all_in_field = data
            .unit
            .iter()
            .chain(&data.counit)
            .chain(data.antipode.iter().flatten())
            .chain(data.pivot.iter().flatten())
            .chain(data.mult.iter().map(|t| &t.3))
            .chain(data.comult.iter().map(|t| &t.3))
            .all(|s| s.field() == *f);
        if !all_in_field {
            return Err(Error::MixedFields);
        }
        let mut mult = vec![Vec::new(); n * n];
        for (i, j, k, c) in data.mult {
            if i >= n || j >= n || k >= n {
                return Err(bad("mult"));
            }
            accumulate(&mut mult[i * n + j], k, c);
        }
        let mult = mult.into_iter().map(finish).collect();
        let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        for (i, j, k, c) in data.comult {
            if i >= n || j >= n || k >= n {
                return Err(bad("comult"));
            }
            if c.is_zero() {
                continue;
            }
            match comult[i].iter_mut().find(|(a, b, _)| *a == j && *b == k) {
                Some((_, _, v)) => *v = &*v + &c,
                None => comult[i].push((j, k, c)),
            }
        }
        for terms in comult.iter_mut() {
            terms.retain(|t| !t.2.is_zero());
            terms.sort_by_key(|t| (t.0, t.1));
        }
        let antipode: Vec<Sparse> = data.antipode.iter().map(|r| sparse(r)).collect();
        // columns of the matrix are the images S(e_i)
        let cols: Vec<Vec<Scalar>> = (0..n).map(|r| (0..n).map(|c| data.antipode[c][r].clone()).collect()).collect();
        let antipode_inv = linalg::inverse(f, &cols)
            .ok()
            .map(|inv| (0..n).map(|i| sparse(&(0..n).map(|r| inv[r][i].clone()).collect::<Vec<_>>())).collect());
        Ok(HopfAlgebra {
            id: fresh_id(),
            field: data.field,
            n,
            labels: data.labels,
            mult,
            unit: data.unit,
            comult,
            counit: data.counit,
            antipode,
            antipode_inv,
            pivot: data.pivot,
        })
    }

    /// The raw structure constants.
    pub fn data(&self) -> HopfData {
        let n = self.n;
        HopfData {
            field: self.field.clone(),
            labels: self.labels.clone(),
            mult: (0..n * n)
                .flat_map(|ij| self.mult[ij].iter().map(move |(k, c)| (ij / n, ij % n, *k, c.clone())))
                .collect(),
            unit: self.unit.clone(),
            comult: (0..n).flat_map(|i| self.comult[i].iter().map(move |(j, k, c)| (i, *j, *k, c.clone()))).collect(),
            counit: self.counit.clone(),
            antipode: (0..n).map(|i| self.densify(&self.antipode[i])).collect(),
            pivot: self.pivot.clone(),
        }
    }

    pub fn with_pivot(&self, pivot: Option<Vec<Scalar>>) -> Result<HopfAlgebra> {
        let mut d = self.data();
        d.pivot = pivot;
        HopfAlgebra::new(d)
    }

    fn densify(&self, s: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.n];
        for (k, c) in s {
            v[*k] = c.clone();
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    // ---- element constructors ----

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element> {
        if coeffs.len() != self.n {
            return Err(Error::AlgebraMismatch);
        }
        if coeffs.iter().any(|c| c.field() != self.field) {
            return Err(Error::MixedFields);
        }
        Ok(Element { alg: self.id, coeffs })
    }

    pub(crate) fn elem(&self, coeffs: Vec<Scalar>) -> Element {
        Element { alg: self.id, coeffs }
    }

    pub fn zero(&self) -> Element {
        self.elem(vec![self.field.zero(); self.n])
    }

    pub fn one(&self) -> Element {
        self.elem(self.unit.clone())
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut v = vec![self.field.zero(); self.n];
        v[i] = self.field.one();
        self.elem(v)
    }

    pub fn functional(&self, coeffs: Vec<Scalar>) -> Result<Functional> {
        if coeffs.len() != self.n {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Functional { alg: self.id, coeffs })
    }

    pub fn counit(&self) -> Functional {
        Functional { alg: self.id, coeffs: self.counit.clone() }
    }

    pub fn tensor(&self, order: usize) -> Tensor {
        Tensor { alg: self.id, order, terms: BTreeMap::new() }
    }

    /// x_1 ⊗ ... ⊗ x_k.
    pub fn pure_tensor(&self, factors: &[&Element]) -> Result<Tensor> {
        let mut t = self.tensor(0);
        t.terms.insert(Vec::new(), self.field.one());
        for x in factors {
            self.check(x)?;
            let mut next = self.tensor(t.order + 1);
            for (idx, c) in &t.terms {
                for (k, xk) in x.coeffs.iter().enumerate() {
                    if !xk.is_zero() {
                        let mut i = idx.clone();
                        i.push(k);
                        next.add_term(i, c * xk);
                    }
                }
            }
            t = next;
        }
        Ok(t)
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.alg != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn owns(&self, x: &Element) -> bool {
        x.alg == self.id
    }

    // ---- structure maps ----

    pub(crate) fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.n + j]
    }

    pub(crate) fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub(crate) fn counit_coeffs(&self) -> &[Scalar] {
        &self.counit
    }

    pub(crate) fn unit_coeffs(&self) -> &[Scalar] {
        &self.unit
    }

    /// Product of coefficient vectors.
    pub(crate) fn mul_coeffs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    pub(crate) fn apply_sparse(&self, map: &[Sparse], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in &map[i] {
                out[*k].add_mul(xi, c);
            }
        }
        out
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.elem(self.mul_coeffs(&x.coeffs, &y.coeffs)))
    }

    /// Product of several elements, left to right.
    pub fn product(&self, xs: &[&Element]) -> Result<Element> {
        let mut acc = self.one();
        for x in xs {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn comultiply(&self, x: &Element) -> Result<Tensor> {
        self.iterated_comultiply(x, 2)
    }

    /// Δ^{(n)}: ε for n = 0, the identity for n = 1, then Δ on the last slot.
    pub fn iterated_comultiply(&self, x: &Element, n: usize) -> Result<Tensor> {
        self.check(x)?;
        if n == 0 {
            let mut t = self.tensor(0);
            t.add_term(Vec::new(), self.eval(&self.counit, &x.coeffs));
            return Ok(t);
        }
        let mut t = self.tensor(1);
        for (i, c) in x.coeffs.iter().enumerate() {
            t.add_term(vec![i], c.clone());
        }
        for _ in 1..n {
            t = self.comultiply_last(&t);
        }
        Ok(t)
    }

    /// Applies Δ to the last tensor factor.
    pub fn comultiply_last(&self, t: &Tensor) -> Tensor {
        let mut next = self.tensor(t.order + 1);
        for (idx, c) in &t.terms {
            let (last, head) = idx.split_last().expect("positive order");
            for (j, k, d) in &self.comult[*last] {
                let mut i = head.to_vec();
                i.push(*j);
                i.push(*k);
                next.add_term(i, c * d);
            }
        }
        next
    }

    pub fn antipode_power(&self, x: &Element, d: i64) -> Result<Element> {
        self.check(x)?;
        let mut v = x.coeffs.clone();
        for _ in 0..d.unsigned_abs() {
            v = if d > 0 {
                self.apply_sparse(&self.antipode, &v)
            } else {
                let inv = self
                    .antipode_inv
                    .as_ref()
                    .ok_or(Error::AxiomFailure { axiom: "antipode bijective".into(), witness: 0 })?;
                self.apply_sparse(inv, &v)
            };
        }
        Ok(self.elem(v))
    }

    pub fn antipode(&self, x: &Element) -> Result<Element> {
        self.antipode_power(x, 1)
    }

    pub(crate) fn eval(&self, f: &[Scalar], x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (a, b) in f.iter().zip(x) {
            acc.add_mul(a, b);
        }
        acc
    }

    pub fn apply_functional(&self, f: &Functional, x: &Element) -> Result<Scalar> {
        self.check(x)?;
        if f.alg != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.eval(&f.coeffs, &x.coeffs))
    }

    /// (f_1 ⊗ ... ⊗ f_k)(t).
    pub fn apply_functional_slotwise(&self, fs: &[&Functional], t: &Tensor) -> Result<Scalar> {
        if fs.len() != t.order {
            return Err(Error::OrderMismatch { expected: fs.len(), found: t.order });
        }
        if t.alg != self.id || fs.iter().any(|f| f.alg != self.id) {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = self.field.zero();
        for (idx, c) in &t.terms {
            let mut term = c.clone();
            for (f, &i) in fs.iter().zip(idx) {
                term = &term * &f.coeffs[i];
                if term.is_zero() {
                    break;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Slotwise product in H^{⊗k}.
    pub fn multiply_tensors(&self, a: &Tensor, b: &Tensor) -> Result<Tensor> {
        if a.alg != self.id || b.alg != self.id || a.order != b.order {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.tensor(a.order);
        for (ia, ca) in &a.terms {
            for (ib, cb) in &b.terms {
                let c = ca * cb;
                // expand slot by slot
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), c)];
                for s in 0..a.order {
                    let prods = self.mul_basis(ia[s], ib[s]);
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (idx, v) in &partial {
                        for (k, m) in prods {
                            let mut i = idx.clone();
                            i.push(*k);
                            next.push((i, v * m));
                        }
                    }
                    partial = next;
                }
                for (i, v) in partial {
                    out.add_term(i, v);
                }
            }
        }
        Ok(out)
    }

    /// Applies Δ to one slot, which becomes two adjacent slots.
    pub fn comultiply_slot(&self, t: &Tensor, slot: usize) -> Tensor {
        let mut next = self.tensor(t.order + 1);
        for (idx, c) in &t.terms {
            for (j, k, d) in &self.comult[idx[slot]] {
                let mut i = Vec::with_capacity(idx.len() + 1);
                i.extend_from_slice(&idx[..slot]);
                i.push(*j);
                i.push(*k);
                i.extend_from_slice(&idx[slot + 1..]);
                next.add_term(i, c * d);
            }
        }
        next
    }

    /// Places the slots of `t` at `positions` in an order-`order` tensor,
    /// filling the remaining slots with 1.
    pub fn embed(&self, t: &Tensor, positions: &[usize], order: usize) -> Tensor {
        let unit = sparse(&self.unit);
        let mut out = self.tensor(order);
        for (idx, c) in &t.terms {
            let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), c.clone())];
            for s in 0..order {
                let choices: Vec<(usize, Scalar)> = match positions.iter().position(|&p| p == s) {
                    Some(k) => vec![(idx[k], self.field.one())],
                    None => unit.clone(),
                };
                let mut next = Vec::with_capacity(partial.len() * choices.len());
                for (i, v) in &partial {
                    for (k, u) in &choices {
                        let mut j = i.clone();
                        j.push(*k);
                        next.push((j, v * u));
                    }
                }
                partial = next;
            }
            for (i, v) in partial {
                out.add_term(i, v);
            }
        }
        out
    }

    /// Two-sided inverse of an element, by solving x·y = 1.
    pub fn inverse(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        let cols: Vec<Vec<Scalar>> = (0..self.n).map(|j| self.mul_coeffs(&x.coeffs, &self.basis(j).coeffs)).collect();
        let m: Vec<Vec<Scalar>> = (0..self.n).map(|r| (0..self.n).map(|c| cols[c][r].clone()).collect()).collect();
        let inv = linalg::inverse(&self.field, &m).map_err(|_| Error::DivisionByZero)?;
        let y: Vec<Scalar> = (0..self.n).map(|r| self.eval(&inv[r], &self.unit)).collect();
        let y = self.elem(y);
        if self.multiply(&y, x)? != self.one() {
            return Err(Error::DivisionByZero);
        }
        Ok(y)
    }

    pub fn is_central(&self, x: &Element) -> bool {
        (0..self.n).all(|i| {
            let b = self.basis(i);
            self.multiply(x, &b).ok() == self.multiply(&b, x).ok()
        })
    }

    /// Applies a permutation of tensor slots: slot s of the output is slot perm[s] of the input.
    pub fn permute_tensor(&self, t: &Tensor, perm: &[usize]) -> Tensor {
        let mut out = self.tensor(t.order);
        for (idx, c) in &t.terms {
            out.add_term(perm.iter().map(|&p| idx[p]).collect(), c.clone());
        }
        out
    }

    /// Applies a linear map given on basis vectors to one slot.
    pub fn map_slot(&self, t: &Tensor, slot: usize, f: impl Fn(usize) -> Vec<Scalar>) -> Tensor {
        let mut out = self.tensor(t.order);
        for (idx, c) in &t.terms {
            for (k, v) in f(idx[slot]).iter().enumerate() {
                if !v.is_zero() {
                    let mut i = idx.clone();
                    i[slot] = k;
                    out.add_term(i, c * v);
                }
            }
        }
        out
    }

    /// Multiplies the factors of each term together: m^{(k)}(t).
    pub fn collapse(&self, t: &Tensor) -> Element {
        let mut out = vec![self.field.zero(); self.n];
        for (idx, c) in &t.terms {
            let mut v = self.basis(idx[0]).coeffs;
            for &i in &idx[1..] {
                let b = self.basis(i).coeffs;
                v = self.mul_coeffs(&v, &b);
            }
            for (o, x) in out.iter_mut().zip(&v) {
                o.add_mul(c, x);
            }
        }
        self.elem(out)
    }

    pub fn is_group_like(&self, x: &Element) -> bool {
        if self.check(x).is_err() || !self.eval(&self.counit, &x.coeffs).is_one() {
            return false;
        }
        let d = self.comultiply(x).expect("owned element");
        d == self.pure_tensor(&[x, x]).expect("owned element")
    }

    pub fn pivot(&self) -> Option<Element> {
        self.pivot.as_ref().map(|p| self.elem(p.clone()))
    }

    /// g⁻¹ = S(g) for the pivot g.
    pub fn pivot_inverse(&self) -> Result<Element> {
        let g = self.pivot().ok_or(Error::MissingPivot)?;
        self.antipode(&g)
    }

    /// Checks every Hopf axiom on basis elements.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.n;
        let f = &self.field;
        let mut rep = AxiomReport::default();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis(i).coeffs).collect();
        let products: Vec<Vec<Scalar>> = (0..n * n).map(|ij| self.densify(&self.mult[ij])).collect();

        // (e_i e_j) e_k = e_i (e_j e_k)
        let assoc = (|| {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut lhs = vec![f.zero(); n];
                        for (l, c) in &self.mult[i * n + j] {
                            for (m, d) in &self.mult[l * n + k] {
                                lhs[*m].add_mul(c, d);
                            }
                        }
                        let mut rhs = vec![f.zero(); n];
                        for (l, c) in &self.mult[j * n + k] {
                            for (m, d) in &self.mult[i * n + l] {
                                rhs[*m].add_mul(c, d);
                            }
                        }
                        if lhs != rhs {
                            return Some(vec![i, j, k]);
                        }
                    }
                }
            }
            None
        })();
        rep.record("associativity", assoc);

        let unit = (0..n).find(|&i| {
            self.mul_coeffs(&self.unit, &basis[i]) != basis[i] || self.mul_coeffs(&basis[i], &self.unit) != basis[i]
        });
        rep.record("unit", unit.map(|i| vec![i]));

        let coassoc = (0..n).find(|&i| {
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs = lhs.clone();
            let add = |m: &mut BTreeMap<(usize, usize, usize), Scalar>, k, c: Scalar| {
                let e = m.entry(k).or_insert_with(|| f.zero());
                *e = &*e + &c;
            };
            for (a, b, c) in &self.comult[i] {
                for (x, y, d) in &self.comult[*a] {
                    add(&mut lhs, (*x, *y, *b), c * d);
                }
                for (x, y, d) in &self.comult[*b] {
                    add(&mut rhs, (*a, *x, *y), c * d);
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            lhs != rhs
        });
        rep.record("coassociativity", coassoc.map(|i| vec![i]));

        let counit = (0..n).find(|&i| {
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for (a, b, c) in &self.comult[i] {
                left[*b].add_mul(c, &self.counit[*a]);
                right[*a].add_mul(c, &self.counit[*b]);
            }
            left != basis[i] || right != basis[i]
        });
        rep.record("counit", counit.map(|i| vec![i]));

        // Δ(e_i e_j) = Δ(e_i) Δ(e_j), ε multiplicative, Δ(1) = 1 ⊗ 1, ε(1) = 1
        let bialg = (|| {
            for i in 0..n {
                for j in 0..n {
                    let mut lhs = Acc2::new();
                    for (k, c) in &self.mult[i * n + j] {
                        for (a, b, d) in &self.comult[*k] {
                            acc2_add(&mut lhs, (*a, *b), c * d);
                        }
                    }
                    let mut rhs = Acc2::new();
                    for (a1, b1, c1) in &self.comult[i] {
                        for (a2, b2, c2) in &self.comult[j] {
                            let c = c1 * c2;
                            for (x, cx) in &self.mult[a1 * n + a2] {
                                let cc = &c * cx;
                                for (y, cy) in &self.mult[b1 * n + b2] {
                                    acc2_add(&mut rhs, (*x, *y), &cc * cy);
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return Some(vec![i, j]);
                    }
                    let e = self.eval(&self.counit, &products[i * n + j]);
                    if e != &self.counit[i] * &self.counit[j] {
                        return Some(vec![i, j]);
                    }
                }
            }
            None
        })();
        rep.record("bialgebra", bialg);
        let one = self.one();
        let unit_ok = self.comultiply(&one).ok() == self.pure_tensor(&[&one, &one]).ok()
            && self.eval(&self.counit, &self.unit).is_one();
        rep.record("unit is group-like", (!unit_ok).then(Vec::new));

        let antipode = (0..n).find(|&i| {
            let target: Vec<Scalar> = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for (a, b, c) in &self.comult[i] {
                let sa = self.densify(&self.antipode[*a]);
                let sb = self.densify(&self.antipode[*b]);
                for (o, v) in left.iter_mut().zip(self.mul_coeffs(&sa, &basis[*b])) {
                    o.add_mul(c, &v);
                }
                for (o, v) in right.iter_mut().zip(self.mul_coeffs(&basis[*a], &sb)) {
                    o.add_mul(c, &v);
                }
            }
            left != target || right != target
        });
        rep.record("antipode", antipode.map(|i| vec![i]));
        rep.record("antipode bijective", self.antipode_inv.is_none().then(Vec::new));

        if let Some(g) = self.pivot() {
            rep.record("pivot group-like", (!self.is_group_like(&g)).then(Vec::new));
            let ginv = self.apply_sparse(&self.antipode, &g.coeffs);
            let conj = (0..n).find(|&i| {
                let s2 = self.apply_sparse(&self.antipode, &self.apply_sparse(&self.antipode, &basis[i]));
                let c = self.mul_coeffs(&self.mul_coeffs(&g.coeffs, &basis[i]), &ginv);
                s2 != c
            });
            rep.record("pivot implements S^2", conj.map(|i| vec![i]));
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn z2_basics() {
        let h = zoo::cyclic_group_algebra(2, &Field::Rational).unwrap();
        let t = h.basis(1);
        assert_eq!(h.multiply(&t, &t).unwrap(), h.one());
        let t3 = h.iterated_comultiply(&t, 3).unwrap();
        assert_eq!(t3, h.pure_tensor(&[&t, &t, &t]).unwrap());
        let lam = h.one().add(&t).unwrap();
        let e = h.iterated_comultiply(&lam, 0).unwrap();
        assert_eq!(e.as_scalar(h.field()), Some(h.field().from_int(2)));
        assert_eq!(h.iterated_comultiply(&t, 1).unwrap().len(), 1);
        let eps = h.counit();
        assert!(h.apply_functional(&eps, &h.one()).unwrap().is_one());
        let tt = h.pure_tensor(&[&t, &t]).unwrap();
        assert!(h.apply_functional_slotwise(&[&eps, &eps], &tt).unwrap().is_one());
        assert_eq!(h.apply_functional_slotwise(&[&eps], &tt), Err(Error::OrderMismatch { expected: 1, found: 2 }));
        assert!(h.verify_axioms().all_passed());
    }

    #[test]
    fn corrupted_antipode_is_caught() {
        let h = zoo::cyclic_group_algebra(2, &Field::Rational).unwrap();
        let mut d = h.data();
        let f = Field::Rational;
        d.antipode[1] = vec![f.one(), f.zero()];
        let bad = HopfAlgebra::new(d).unwrap();
        let rep = bad.verify_axioms();
        let c = rep.get("antipode").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness, Some(vec![1]));
    }

    #[test]
    fn mismatched_algebras() {
        let f = Field::Rational;
        let a = zoo::cyclic_group_algebra(2, &f).unwrap();
        let b = zoo::cyclic_group_algebra(2, &f).unwrap();
        assert_eq!(a.multiply(&a.one(), &b.one()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn group_likes() {
        let h = zoo::cyclic_group_algebra(3, &Field::Rational).unwrap();
        assert!(h.is_group_like(&h.one()));
        assert!(h.is_group_like(&h.basis(2)));
        assert!(!h.is_group_like(&h.one().add(&h.basis(1)).unwrap()));
        let g = h.basis(1);
        let sg = h.antipode(&g).unwrap();
        assert_eq!(h.multiply(&sg, &g).unwrap(), h.one());
    }
}
