//! Built-in Hopf algebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hopf::{Element, Functional, HopfAlgebra, HopfData};
use crate::scalar::{Field, Scalar};

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates the table: closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table"));
        }
        if labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not square over its elements"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::InvalidGroup("no identity"))?;
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == identity && table[y][x] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::InvalidGroup("missing inverse"))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup("not associative"));
                    }
                }
            }
        }
        Ok(GroupTable { table, inverse, identity, labels })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".into(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            })
            .collect();
        GroupTable::new(table, labels).expect("cyclic group")
    }

    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1)
    }

    /// S_3 as permutations of {0,1,2} in lexicographic order, composed
    /// right to left.
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms.iter().map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect()).collect();
        let labels = perms.iter().map(|p| format!("({}{}{})", p[0], p[1], p[2])).collect();
        GroupTable::new(table, labels).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// The group algebra 𝕜[G] with pivot 1.
pub fn group_algebra(g: &GroupTable, field: &Field) -> Result<HopfAlgebra> {
    let n = g.order();
    if field.characteristic() != 0 && n as u64 % field.characteristic() == 0 {
        return Err(Error::InvalidGroup("field characteristic divides the group order"));
    }
    let one = field.one();
    let basis = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = one.clone();
        v
    };
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            mult.push((a, b, g.mul(a, b), one.clone()));
        }
    }
    HopfAlgebra::new(HopfData {
        field: field.clone(),
        labels: g.labels().to_vec(),
        mult,
        unit: basis(g.identity()),
        comult: (0..n).map(|a| (a, a, a, one.clone())).collect(),
        counit: vec![one.clone(); n],
        antipode: (0..n).map(|a| basis(g.inv(a))).collect(),
        pivot: Some(basis(g.identity())),
    })
}

pub fn cyclic_group_algebra(n: usize, field: &Field) -> Result<HopfAlgebra> {
    group_algebra(&GroupTable::cyclic(n), field)
}

/// Sweedler's four-dimensional algebra on 1, γ, x, γx with pivot γ.
pub fn sweedler_algebra(field: &Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Invalid("Sweedler's algebra needs characteristic other than 2".into()));
    }
    // basis index a + 2b for γ^a x^b
    let s = |k: i64| field.from_int(k);
    let mut mult = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d < 2 {
                let sign = if b * c == 1 { -1 } else { 1 };
                mult.push((i, j, (a + c) % 2 + 2 * (b + d), s(sign)));
            }
        }
    }
    let comult =
        vec![(0, 0, 0, s(1)), (1, 1, 1, s(1)), (2, 2, 0, s(1)), (2, 1, 2, s(1)), (3, 3, 1, s(1)), (3, 0, 3, s(1))];
    let row = |v: [i64; 4]| v.iter().map(|&k| s(k)).collect::<Vec<_>>();
    HopfAlgebra::new(HopfData {
        field: field.clone(),
        labels: ["1", "g", "x", "gx"].iter().map(|l| String::from(*l)).collect(),
        mult,
        unit: row([1, 0, 0, 0]),
        comult,
        counit: row([1, 1, 0, 0]),
        antipode: vec![row([1, 0, 0, 0]), row([0, 1, 0, 0]), row([0, 0, 0, -1]), row([0, 0, 1, 0])],
        pivot: Some(row([0, 1, 0, 0])),
    })
}

/// The small quantum group with its closed-form integral and cointegral.
#[derive(Clone, Debug)]
pub struct SmallQuantumGroup {
    pub algebra: HopfAlgebra,
    pub r: usize,
    pub lambda: Functional,
    pub cointegral: Element,
}

/// PBW monomial K^a E^b F^c.
type Mono = (usize, usize, usize);

struct Pbw {
    r: usize,
    q: Scalar,
    /// 1 / (q − q⁻¹)
    bracket: Scalar,
}

impl Pbw {
    fn index(&self, (a, b, c): Mono) -> usize {
        (a * self.r + b) * self.r + c
    }

    fn add(out: &mut BTreeMap<Mono, Scalar>, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = out.entry(m).or_insert_with(|| c.field().zero());
        *e = &*e + &c;
        if e.is_zero() {
            out.remove(&m);
        }
    }

    /// K^a E^b F^c · gen, with gen ∈ {K, E, F} as 0, 1, 2.
    fn times_gen(&self, (a, b, c): Mono, gen: u8, coef: &Scalar, out: &mut BTreeMap<Mono, Scalar>) {
        let r = self.r;
        match gen {
            0 => {
                let e = 2 * (c as i64 - b as i64);
                Self::add(out, ((a + 1) % r, b, c), coef * &self.q.pow(e).expect("q invertible"));
            }
            2 => {
                if c + 1 < r {
                    Self::add(out, (a, b, c + 1), coef.clone());
                }
            }
            _ => {
                if c == 0 {
                    if b + 1 < r {
                        Self::add(out, (a, b + 1, 0), coef.clone());
                    }
                    return;
                }
                // F E = E F − (K − K⁻¹)/(q − q⁻¹)
                let mut tmp = BTreeMap::new();
                self.times_gen((a, b, c - 1), 1, coef, &mut tmp);
                for (m, v) in tmp {
                    self.times_gen(m, 2, &v, out);
                }
                let d = coef * &self.bracket;
                self.times_gen((a, b, c - 1), 0, &d.neg(), out);
                let mut tmp = BTreeMap::new();
                self.times_gen((a, b, c - 1), 0, &d, &mut tmp);
                for _ in 0..r - 2 {
                    let prev = core::mem::take(&mut tmp);
                    for (m, v) in prev {
                        self.times_gen(m, 0, &v, &mut tmp);
                    }
                }
                for (m, v) in tmp {
                    Self::add(out, m, v);
                }
            }
        }
    }

    fn product(&self, x: Mono, (a, b, c): Mono, one: &Scalar) -> BTreeMap<Mono, Scalar> {
        let mut cur = BTreeMap::new();
        cur.insert(x, one.clone());
        let word = core::iter::repeat_n(0u8, a).chain(core::iter::repeat_n(1u8, b)).chain(core::iter::repeat_n(2u8, c));
        for gen in word {
            let mut next = BTreeMap::new();
            for (m, v) in &cur {
                self.times_gen(*m, gen, v, &mut next);
            }
            cur = next;
        }
        cur
    }
}

fn pbw_label((a, b, c): Mono) -> String {
    let mut s = String::new();
    for (g, e) in [("K", a), ("E", b), ("F", c)] {
        match e {
            0 => {}
            1 => s.push_str(g),
            _ => s.push_str(&format!("{g}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// U_q(sl2) at q = ζ_{2r}, over ℚ(ζ_{2r}).
pub fn small_quantum_sl2(r: usize, c: &Scalar) -> Result<SmallQuantumGroup> {
    let field = Field::cyclotomic(2 * r as u32);
    let q = field.zeta_pow(1)?;
    small_quantum_sl2_at(r, c, &q)
}

/// U_q(sl2) for an explicit primitive 2r-th root of unity q.
pub fn small_quantum_sl2_at(r: usize, c: &Scalar, q: &Scalar) -> Result<SmallQuantumGroup> {
    if r < 2 {
        return Err(Error::BadRoot);
    }
    let field = q.field();
    if !c.same_field(q) {
        return Err(Error::MixedFields);
    }
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut p = field.one();
    for k in 1..=2 * r {
        p = &p * q;
        if p.is_one() != (k == 2 * r) {
            return Err(Error::BadRoot);
        }
    }
    let bracket = (q - &q.inv()?).inv()?;
    let pbw = Pbw { r, q: q.clone(), bracket };
    let n = r * r * r;
    let monos: Vec<Mono> = (0..r).flat_map(|a| (0..r).flat_map(move |b| (0..r).map(move |c| (a, b, c)))).collect();
    let one = field.one();

    let mut mult = Vec::new();
    for &x in &monos {
        for &y in &monos {
            for (m, v) in pbw.product(x, y, &one) {
                mult.push((pbw.index(x), pbw.index(y), pbw.index(m), v));
            }
        }
    }

    // coproduct of a monomial as a product of generator coproducts in H ⊗ H
    type T2 = BTreeMap<(Mono, Mono), Scalar>;
    let tensor_mul = |x: &T2, y: &T2| -> T2 {
        let mut out: T2 = BTreeMap::new();
        for ((a1, b1), c1) in x {
            for ((a2, b2), c2) in y {
                let left = pbw.product(*a1, *a2, &one);
                let right = pbw.product(*b1, *b2, &one);
                for (l, lv) in &left {
                    for (rm, rv) in &right {
                        let v = &(&(c1 * c2) * lv) * rv;
                        let e = out.entry((*l, *rm)).or_insert_with(|| field.zero());
                        *e = &*e + &v;
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    };
    let unit_m: Mono = (0, 0, 0);
    let k_m: Mono = (1, 0, 0);
    let kinv_m: Mono = (r - 1, 0, 0);
    let dk: T2 = [((k_m, k_m), one.clone())].into_iter().collect();
    let de: T2 = [((unit_m, (0, 1, 0)), one.clone()), (((0, 1, 0), k_m), one.clone())].into_iter().collect();
    let df: T2 = [((kinv_m, (0, 0, 1)), one.clone()), (((0, 0, 1), unit_m), one.clone())].into_iter().collect();
    let mut comult = Vec::new();
    for &(a, b, c) in &monos {
        let mut t: T2 = [((unit_m, unit_m), one.clone())].into_iter().collect();
        for _ in 0..a {
            t = tensor_mul(&t, &dk);
        }
        for _ in 0..b {
            t = tensor_mul(&t, &de);
        }
        for _ in 0..c {
            t = tensor_mul(&t, &df);
        }
        for ((x, y), v) in t {
            comult.push((pbw.index((a, b, c)), pbw.index(x), pbw.index(y), v));
        }
    }

    // S(K^a E^b F^c) = S(F)^c S(E)^b S(K)^a
    let dense = |m: &BTreeMap<Mono, Scalar>| {
        let mut v = vec![field.zero(); n];
        for (k, c) in m {
            v[pbw.index(*k)] = c.clone();
        }
        v
    };
    let mul_elems = |x: &BTreeMap<Mono, Scalar>, y: &BTreeMap<Mono, Scalar>| {
        let mut out = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                for (m, v) in pbw.product(*a, *b, &one) {
                    Pbw::add(&mut out, m, &(ca * cb) * &v);
                }
            }
        }
        out
    };
    let neg = field.from_int(-1);
    let s_k: BTreeMap<Mono, Scalar> = [(kinv_m, one.clone())].into_iter().collect();
    let s_e = pbw.product((0, 1, 0), kinv_m, &neg);
    let s_f = pbw.product(k_m, (0, 0, 1), &neg);
    let mut antipode = Vec::new();
    for &(a, b, c) in &monos {
        let mut acc: BTreeMap<Mono, Scalar> = [(unit_m, one.clone())].into_iter().collect();
        for _ in 0..c {
            acc = mul_elems(&acc, &s_f);
        }
        for _ in 0..b {
            acc = mul_elems(&acc, &s_e);
        }
        for _ in 0..a {
            acc = mul_elems(&acc, &s_k);
        }
        antipode.push(dense(&acc));
    }

    let basis_vec = |m: Mono| {
        let mut v = vec![field.zero(); n];
        v[pbw.index(m)] = one.clone();
        v
    };
    let algebra = HopfAlgebra::new(HopfData {
        field: field.clone(),
        labels: monos.iter().map(|&m| pbw_label(m)).collect(),
        mult,
        unit: basis_vec(unit_m),
        comult,
        counit: monos.iter().map(|&(_, b, c)| if b == 0 && c == 0 { one.clone() } else { field.zero() }).collect(),
        antipode,
        pivot: Some(basis_vec(k_m)),
    })?;

    let rr = field.from_int(r as i64);
    let top = r - 1;
    let mut lam = vec![field.zero(); n];
    lam[pbw.index((1, top, top))] = rr.try_div(c)?;
    let mut coint = vec![field.zero(); n];
    let share = c.try_div(&rr)?;
    for j in 0..r {
        coint[pbw.index((j, top, top))] = share.clone();
    }
    Ok(SmallQuantumGroup { lambda: algebra.functional(lam)?, cointegral: algebra.element(coint)?, algebra, r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert!((0..6).any(|a| (0..6).any(|b| s3.mul(a, b) != s3.mul(b, a))));
        assert_eq!(
            GroupTable::new(vec![vec![0, 0], vec![0, 1]], vec!["a".into(), "b".into()]),
            Err(Error::InvalidGroup("missing inverse"))
        );
        let triv = group_algebra(&GroupTable::trivial(), &Field::Rational).unwrap();
        assert_eq!(triv.dim(), 1);
        assert!(triv.verify_axioms().all_passed());
        assert!(group_algebra(&GroupTable::cyclic(2), &Field::Prime(2)).is_err());
    }

    #[test]
    fn quantum_group_relations() {
        let f = Field::cyclotomic(4);
        let u = small_quantum_sl2(2, &f.one()).unwrap();
        let h = &u.algebra;
        assert_eq!(h.dim(), 8);
        let idx = |l: &str| h.label_index(l).unwrap();
        let (k, e, fe) = (h.basis(idx("K")), h.basis(idx("E")), h.basis(idx("F")));
        let q2 = f.zeta_pow(2).unwrap();
        // KE = q² EK
        let ke = h.multiply(&k, &e).unwrap();
        let ek = h.multiply(&e, &k).unwrap();
        assert_eq!(ke, ek.scale(&q2));
        let kinv = h.antipode(&k).unwrap();
        assert_eq!(h.multiply(&k, &kinv).unwrap(), h.one());
        // S(E) = −E K⁻¹
        assert_eq!(h.antipode(&e).unwrap(), h.multiply(&e, &kinv).unwrap().scale(&f.from_int(-1)));
        // Δ(E) = 1 ⊗ E + E ⊗ K
        let de = h.comultiply(&e).unwrap();
        let mut want = h.pure_tensor(&[&h.one(), &e]).unwrap();
        for (i, c) in h.pure_tensor(&[&e, &k]).unwrap().terms() {
            want.add_term(i.to_vec(), c.clone());
        }
        assert_eq!(de, want);
        assert_eq!(h.comultiply(&k).unwrap(), h.pure_tensor(&[&k, &k]).unwrap());
        assert!(h.is_group_like(&k));
        assert!(!h.is_group_like(&e));
        assert!(!h.is_group_like(&fe));
        assert!(h.verify_axioms().all_passed());
    }

    #[test]
    fn bad_roots() {
        let f = Field::cyclotomic(8);
        let not_primitive = f.zeta_pow(2).unwrap();
        assert_eq!(small_quantum_sl2_at(4, &f.one(), &not_primitive).err(), Some(Error::BadRoot));
        assert_eq!(small_quantum_sl2(1, &Field::cyclotomic(2).one()).err(), Some(Error::BadRoot));
    }

    #[test]
    fn sweedler() {
        let h = sweedler_algebra(&Field::Rational).unwrap();
        assert!(h.verify_axioms().all_passed());
    }
}
