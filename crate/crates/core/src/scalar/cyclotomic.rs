//! ℚ(ζ_m) as dense coefficient vectors modulo the cyclotomic polynomial.
//!
//! Elements are stored low degree first with trailing zeros trimmed, so
//! zero is the empty vector.

use alloc::vec;
use alloc::vec::Vec;

use super::rational::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder for a nonzero divisor.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].recip().expect("nonzero divisor");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::ZERO; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1].mul(&lead);
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] = r[shift + k].sub(&c.mul(bk));
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or(Rational::ZERO);
            match b.get(i) {
                Some(y) => x.sub(y),
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Φ_m, obtained by dividing x^m − 1 by Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Rational> {
    assert!(m >= 1);
    let mut p = vec![Rational::ZERO; m as usize + 1];
    p[0] = Rational::from_int(-1);
    p[m as usize] = Rational::ONE;
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = poly_divrem(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    m: u32,
    phi: Vec<Rational>,
    /// x^k mod Φ_m for deg ≤ k < 2·deg − 1, each of length deg.
    reductions: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub fn new(m: u32) -> Self {
        assert!(m >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        let mut reductions = Vec::new();
        // x^deg = −(lower part of Φ)
        let mut cur: Vec<Rational> = phi[..deg].iter().map(Rational::neg).collect();
        for _ in deg..(2 * deg).saturating_sub(1).max(deg + 1) {
            reductions.push(cur.clone());
            // multiply by x and reduce the overflowing top coefficient
            let top = cur[deg - 1].clone();
            let mut next = vec![Rational::ZERO; deg];
            next[1..deg].clone_from_slice(&cur[..deg - 1]);
            if !top.is_zero() {
                for k in 0..deg {
                    next[k] = next[k].sub(&top.mul(&phi[k]));
                }
            }
            cur = next;
        }
        CyclotomicField { m, phi, reductions }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of Φ_m, constant term first.
    pub fn modulus(&self) -> &[Rational] {
        &self.phi
    }

    pub(crate) fn reduce(&self, mut p: Poly) -> Poly {
        let deg = self.degree();
        if p.len() > deg {
            if p.len() <= deg + self.reductions.len() {
                let high: Vec<Rational> = p.drain(deg..).collect();
                p.resize(deg, Rational::ZERO);
                for (k, c) in high.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (t, r) in self.reductions[k].iter().enumerate() {
                        if !r.is_zero() {
                            p[t] = p[t].add(&c.mul(r));
                        }
                    }
                }
            } else {
                p = poly_divrem(&p, &self.phi).1;
            }
        }
        trim(&mut p);
        p
    }

    pub(crate) fn mul(&self, a: &[Rational], b: &[Rational]) -> Poly {
        self.reduce(poly_mul(a, b))
    }

    pub(crate) fn add(&self, a: &[Rational], b: &[Rational]) -> Poly {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = long.to_vec();
        for (o, s) in out.iter_mut().zip(short) {
            *o = o.add(s);
        }
        trim(&mut out);
        out
    }

    /// Inverse by the extended Euclidean algorithm against Φ_m.
    pub(crate) fn inv(&self, a: &[Rational]) -> Option<Poly> {
        if a.is_empty() {
            return None;
        }
        let (mut r0, mut r1) = (self.phi.clone(), a.to_vec());
        let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![Rational::ONE]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = core::mem::replace(&mut r1, r);
            t0 = core::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant because Φ_m is irreducible
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].recip()?;
        let scaled: Poly = t0.iter().map(|t| t.mul(&c)).collect();
        Some(self.reduce(scaled))
    }

    /// ζ^k for any integer k.
    pub(crate) fn zeta_pow(&self, k: i64) -> Poly {
        let e = k.rem_euclid(self.m as i64) as usize;
        let mut p = vec![Rational::ZERO; e + 1];
        p[e] = Rational::ONE;
        self.reduce(p)
    }
}
