//! The Drinfeld double D(H) = H^{*cop} ⊗ H on the basis e_i^* ⊗ e_j.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hopf::{AxiomReport, Element, Functional, HopfAlgebra, HopfData, Tensor};
use crate::integrals::{self, IntegralData, QuasitriangularReport, RibbonReport};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    pub algebra: HopfAlgebra,
    pub r: Tensor,
    pub r_inv: Tensor,
    pub theta: Element,
    pub u: Element,
    pub lambda_d: Functional,
    pub a_d: Element,
    pub g_d: Element,
    pub mu_d: Functional,
    pub base: HopfAlgebra,
    pub base_integrals: IntegralData,
}

/// Index of e_i^* ⊗ e_j.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// f ⊗ v as an element of the double.
pub fn pure(d: &HopfAlgebra, n: usize, f: &[Scalar], v: &[Scalar]) -> Element {
    let field = d.field();
    let mut c = vec![field.zero(); n * n];
    for (i, fi) in f.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                c[pair_index(n, i, j)] = fi * vj;
            }
        }
    }
    d.element(c).expect("double-sized")
}

fn structure(h: &HopfAlgebra) -> Result<HopfData> {
    let n = h.dim();
    let field = h.field().clone();
    let zero = field.zero();

    // T[c][a][p] = S⁻¹(e_c) e_p e_a
    let sinv: Vec<Vec<Scalar>> =
        (0..n).map(|c| h.antipode_power(&h.basis(c), -1).map(|x| x.coeffs().to_vec())).collect::<Result<_>>()?;
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis(i).coeffs().to_vec()).collect();
    let mut t = vec![vec![Vec::new(); n]; n];
    for c in 0..n {
        for p in 0..n {
            let sp = h.mul_coeffs(&sinv[c], &basis[p]);
            for a in 0..n {
                t[c][a].push(h.mul_coeffs(&sp, &basis[a]));
            }
        }
    }
    // e_i^* e_p^* = Σ_x c_x^{ip} e_x^*
    let mut dual_mult: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for x in 0..n {
        for (i, p, c) in h.comult_basis(x) {
            dual_mult[i * n + p].push((x, c.clone()));
        }
    }
    let delta3: Vec<Tensor> = (0..n).map(|j| h.iterated_comultiply(&h.basis(j), 3)).collect::<Result<_>>()?;

    let mut mult = Vec::new();
    for j in 0..n {
        for i in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (abc, w) in delta3[j].terms() {
                        let (a, b, c) = (abc[0], abc[1], abc[2]);
                        // e_i^* · e_k^*(S⁻¹(e_c) ♠ e_a) as a functional
                        let mut conv = vec![zero.clone(); n];
                        for p in 0..n {
                            let phi = &t[c][a][p][k];
                            if phi.is_zero() {
                                continue;
                            }
                            for (x, cx) in &dual_mult[i * n + p] {
                                conv[*x].add_mul(phi, cx);
                            }
                        }
                        for (x, cx) in conv.iter().enumerate() {
                            if cx.is_zero() {
                                continue;
                            }
                            let wc = w * cx;
                            for (y, m) in h.mul_basis(b, l) {
                                let e = acc.entry(pair_index(n, x, *y)).or_insert_with(|| zero.clone());
                                e.add_mul(&wc, m);
                            }
                        }
                    }
                    for (xy, c) in acc {
                        if !c.is_zero() {
                            mult.push((pair_index(n, i, j), pair_index(n, k, l), xy, c));
                        }
                    }
                }
            }
        }
    }

    // Δ(e_i^*) = Σ m_{yx}^i e_x^* ⊗ e_y^*
    let mut dual_comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for y in 0..n {
        for x in 0..n {
            for (i, c) in h.mul_basis(y, x) {
                dual_comult[*i].push((x, y, c.clone()));
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (x, y, c) in &dual_comult[i] {
                for (a, b, d) in h.comult_basis(j) {
                    comult.push((pair_index(n, i, j), pair_index(n, *x, *a), pair_index(n, *y, *b), c * d));
                }
            }
        }
    }

    let eps = h.counit_coeffs();
    let unit = h.unit_coeffs();
    let mut counit = vec![zero.clone(); n * n];
    let mut d_unit = vec![zero.clone(); n * n];
    for i in 0..n {
        for j in 0..n {
            counit[pair_index(n, i, j)] = &unit[i] * &eps[j];
            d_unit[pair_index(n, i, j)] = &eps[i] * &unit[j];
        }
    }
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    let mut pivot = vec![zero.clone(); n * n];
    for i in 0..n {
        for j in 0..n {
            pivot[pair_index(n, i, j)] = &eps[i] * &g.coeffs()[j];
        }
    }
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}*|{}", h.labels()[i], h.labels()[j]))
        .collect();
    Ok(HopfData { field, labels, mult, unit: d_unit, comult, counit, antipode: Vec::new(), pivot: Some(pivot) })
}

impl DrinfeldDouble {
    /// Builds D(H) and verifies every structural invariant.
    pub fn new(h: &HopfAlgebra) -> Result<DrinfeldDouble> {
        let d = DrinfeldDouble::build(h)?;
        d.verify().into_result()?;
        Ok(d)
    }

    /// Builds D(H) without running the invariant suite.
    pub fn build(h: &HopfAlgebra) -> Result<DrinfeldDouble> {
        let base_integrals = integrals::integral_data(h)?;
        let mu = base_integrals.mu.clone().ok_or(Error::NotSpherical("base algebra is not spherical"))?;
        let n = h.dim();
        let nn = n * n;
        let mut data = structure(h)?;
        let field = data.field.clone();

        // S^D(f ⊗ v) = (ε ⊗ S(v)) (f∘S⁻¹ ⊗ 1), computed with the finished product
        let identity: Vec<Vec<Scalar>> =
            (0..nn).map(|i| (0..nn).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
        data.antipode = identity;
        let provisional = HopfAlgebra::new(data.clone())?;
        let eps = h.counit_coeffs().to_vec();
        let one = h.unit_coeffs().to_vec();
        let mut antipode = Vec::with_capacity(nn);
        for i in 0..n {
            let f_sinv: Vec<Scalar> = (0..n)
                .map(|p| h.antipode_power(&h.basis(p), -1).map(|x| x.coeffs()[i].clone()))
                .collect::<Result<_>>()?;
            let right = pure(&provisional, n, &f_sinv, &one);
            for j in 0..n {
                let sv = h.antipode(&h.basis(j))?;
                let left = pure(&provisional, n, &eps, sv.coeffs());
                antipode.push(provisional.multiply(&left, &right)?.coeffs().to_vec());
            }
        }
        data.antipode = antipode;
        let algebra = HopfAlgebra::new(data)?;

        let mut r = algebra.tensor(2);
        let mut r_inv = algebra.tensor(2);
        for i in 0..n {
            let e_i = h.basis(i);
            let mut dual = vec![field.zero(); n];
            dual[i] = field.one();
            let right = pure(&algebra, n, &dual, &one);
            let left = pure(&algebra, n, &eps, e_i.coeffs());
            let left_inv = pure(&algebra, n, &eps, h.antipode(&e_i)?.coeffs());
            for (idx, c) in algebra.pure_tensor(&[&left, &right])?.terms() {
                r.add_term(idx.to_vec(), c.clone());
            }
            for (idx, c) in algebra.pure_tensor(&[&left_inv, &right])?.terms() {
                r_inv.add_term(idx.to_vec(), c.clone());
            }
        }

        let coint = base_integrals.cointegral.coeffs();
        let lam = base_integrals.lambda.coeffs();
        let pair_fn =
            |f: &[Scalar], v: &[Scalar]| -> Vec<Scalar> { (0..nn).map(|ij| &f[ij / n] * &v[ij % n]).collect() };
        let lambda_d = algebra.functional(pair_fn(coint, lam))?;
        let mu_d = algebra.functional(pair_fn(coint, mu.coeffs()))?;
        let a_d = pure(&algebra, n, base_integrals.alpha.coeffs(), base_integrals.a.coeffs());
        let g_d = algebra.pivot().ok_or(Error::MissingPivot)?;
        let theta = integrals::ribbon_element(&algebra, &r)?;
        let u = integrals::drinfeld_element(&algebra, &r)?;
        Ok(DrinfeldDouble { algebra, r, r_inv, theta, u, lambda_d, a_d, g_d, mu_d, base: h.clone(), base_integrals })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// (μ^D(g^D θ^D), μ^D((g^D)⁻¹ (θ^D)⁻¹)).
    pub fn delta_constants(&self) -> Result<(Scalar, Scalar)> {
        let d = &self.algebra;
        let g_inv = d.antipode(&self.g_d)?;
        let theta_inv = d.inverse(&self.theta)?;
        let delta = d.apply_functional(&self.mu_d, &d.multiply(&self.g_d, &self.theta)?)?;
        let delta_inv = d.apply_functional(&self.mu_d, &d.multiply(&g_inv, &theta_inv)?)?;
        if (&delta * &delta_inv).is_zero() {
            return Err(Error::NotNondegenerate);
        }
        Ok((delta, delta_inv))
    }

    /// Integral-related checks on the double.
    pub fn double_integrals(&self) -> Result<DoubleIntegralReport> {
        let d = &self.algebra;
        let n = self.base.dim();
        let solved_lambda = integrals::right_integral(d)?;
        let solved_coint = integrals::left_cointegral(d)?;
        let lambda_is_right_integral = proportional(solved_lambda.coeffs(), self.lambda_d.coeffs());
        let expected_coint = pure(d, n, self.base_integrals.lambda.coeffs(), self.base_integrals.cointegral.coeffs());
        let cointegral_matches = proportional(solved_coint.coeffs(), expected_coint.coeffs());
        let pairing_is_one = d.apply_functional(&self.lambda_d, &expected_coint)?.is_one();
        let (alpha, a) = integrals::distinguished_group_likes(d, &solved_lambda, &solved_coint)?;
        let a_matches = a == self.a_d;
        let unimodular = alpha == d.counit();
        let mu_from_pivot: Vec<Scalar> = (0..d.dim())
            .map(|i| d.apply_functional(&self.lambda_d, &d.multiply(&self.g_d, &d.basis(i))?))
            .collect::<Result<_>>()?;
        let mu_matches = mu_from_pivot == self.mu_d.coeffs();
        Ok(DoubleIntegralReport {
            lambda_is_right_integral,
            cointegral_matches,
            pairing_is_one,
            a_matches,
            unimodular,
            mu_matches,
        })
    }

    /// Runs the full invariant suite.
    pub fn verify(&self) -> DoubleReport {
        let d = &self.algebra;
        let axioms = d.verify_axioms();
        let quasi = integrals::verify_quasitriangular(d, &self.r, Some(&self.r_inv));
        let ribbon = integrals::ribbon_check(d, &self.r);
        let pivotal = integrals::is_pivotal(d).unwrap_or(false);
        let g_squared_is_a = d.multiply(&self.g_d, &self.g_d).ok() == Some(self.a_d.clone());
        let integrals = self.double_integrals();
        let delta = self.delta_constants();
        let theta_is_uinv_g = d.multiply(&self.u, &self.theta).ok() == Some(self.g_d.clone());
        let su = d.antipode(&self.u).expect("own element");
        let usu = d.multiply(&self.u, &su).expect("own element");
        let u_su_central = usu == d.multiply(&su, &self.u).expect("own element") && d.is_central(&usu);
        let theta_coproduct = self.theta_coproduct_identity().unwrap_or(false);
        DoubleReport {
            axioms,
            quasi,
            ribbon,
            pivotal,
            g_squared_is_a,
            integrals,
            delta,
            theta_is_uinv_g,
            u_su_central,
            theta_coproduct,
        }
    }

    /// Δ(θ) = (Σ s_j r_i ⊗ r_j s_i)(θ ⊗ θ).
    pub fn theta_coproduct_identity(&self) -> Result<bool> {
        let d = &self.algebra;
        let mut left = d.tensor(2);
        for (ri, ci) in self.r.terms() {
            for (rj, cj) in self.r.terms() {
                let a = d.multiply(&d.basis(rj[1]), &d.basis(ri[0]))?;
                let b = d.multiply(&d.basis(rj[0]), &d.basis(ri[1]))?;
                for (idx, c) in d.pure_tensor(&[&a, &b])?.terms() {
                    left.add_term(idx.to_vec(), &(ci * cj) * c);
                }
            }
        }
        let tt = d.pure_tensor(&[&self.theta, &self.theta])?;
        Ok(d.comultiply(&self.theta)? == d.multiply_tensors(&left, &tt)?)
    }
}

fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    let Some(p) = b.iter().position(|x| !x.is_zero()) else {
        return a.iter().all(Scalar::is_zero);
    };
    let Ok(inv) = b[p].inv() else { return false };
    let s = &a[p] * &inv;
    !s.is_zero() && a.iter().zip(b).all(|(x, y)| *x == &s * y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleIntegralReport {
    /// The solver's right integral is a multiple of Λ ⊗ λ.
    pub lambda_is_right_integral: bool,
    /// The solver's left cointegral is a multiple of λ ⊗ Λ.
    pub cointegral_matches: bool,
    /// λ^D(λ ⊗ Λ) = 1.
    pub pairing_is_one: bool,
    /// The solved distinguished group-like equals α ⊗ a.
    pub a_matches: bool,
    pub unimodular: bool,
    /// λ^D(g^D ·) = Λ ⊗ μ.
    pub mu_matches: bool,
}

impl DoubleIntegralReport {
    pub fn passed(&self) -> bool {
        self.lambda_is_right_integral
            && self.cointegral_matches
            && self.pairing_is_one
            && self.a_matches
            && self.unimodular
            && self.mu_matches
    }
}

#[derive(Clone, Debug)]
pub struct DoubleReport {
    pub axioms: AxiomReport,
    pub quasi: Result<QuasitriangularReport>,
    pub ribbon: Result<RibbonReport>,
    pub pivotal: bool,
    pub g_squared_is_a: bool,
    pub integrals: Result<DoubleIntegralReport>,
    pub delta: Result<(Scalar, Scalar)>,
    pub theta_is_uinv_g: bool,
    pub u_su_central: bool,
    pub theta_coproduct: bool,
}

impl DoubleReport {
    pub fn into_result(self) -> Result<()> {
        self.axioms.into_result()?;
        self.quasi?.into_result()?;
        let ribbon = self.ribbon?;
        let fail = |what: &str| Err(Error::AxiomFailure { axiom: what.into(), witness: 0 });
        if !ribbon.ribbon() {
            return fail("double ribbon element");
        }
        if !self.pivotal || !self.g_squared_is_a {
            return fail("double pivot");
        }
        if !self.integrals?.passed() {
            return fail("double integrals");
        }
        let (delta, delta_inv) = self.delta?;
        if !delta.is_one() || !(&delta * &delta_inv).is_one() {
            return fail("double normalization");
        }
        if !self.theta_is_uinv_g || !self.u_su_central || !self.theta_coproduct {
            return fail("double Drinfeld element");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use crate::zoo;

    #[test]
    fn z2_double() {
        let h = zoo::cyclic_group_algebra(2, &Field::Rational).unwrap();
        let d = DrinfeldDouble::new(&h).unwrap();
        assert_eq!(d.dim(), 4);
        let (delta, _) = d.delta_constants().unwrap();
        assert!(delta.is_one());
    }

    #[test]
    fn half_products() {
        let f = Field::Rational;
        let h = zoo::group_algebra(&zoo::GroupTable::symmetric3(), &f).unwrap();
        let d = DrinfeldDouble::build(&h).unwrap();
        let dd = &d.algebra;
        let n = h.dim();
        let unit = |i: usize| {
            let mut v = vec![f.zero(); n];
            v[i] = f.one();
            v
        };
        let eps = h.counit_coeffs().to_vec();
        let one = h.unit_coeffs().to_vec();
        for (i, j) in [(1, 2), (3, 5), (4, 4)] {
            for (k, l) in [(0, 3), (2, 1)] {
                // (f ⊗ 1)(f' ⊗ v') = f f' ⊗ v'
                let lhs = dd.multiply(&pure(dd, n, &unit(i), &one), &pure(dd, n, &unit(k), &unit(l))).unwrap();
                let mut ff = vec![f.zero(); n];
                for x in 0..n {
                    for (a, b, c) in h.comult_basis(x) {
                        if *a == i && *b == k {
                            ff[x] = &ff[x] + c;
                        }
                    }
                }
                assert_eq!(lhs, pure(dd, n, &ff, &unit(l)));
                // (f ⊗ v)(ε ⊗ v') = f ⊗ v v'
                let lhs = dd.multiply(&pure(dd, n, &unit(i), &unit(j)), &pure(dd, n, &eps, &unit(l))).unwrap();
                let vv = h.multiply(&h.basis(j), &h.basis(l)).unwrap();
                assert_eq!(lhs, pure(dd, n, &unit(i), vv.coeffs()));
            }
        }
    }
}
