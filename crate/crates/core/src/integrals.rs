//! Integrals, cointegrals, distinguished group-likes and ribbon data.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hopf::{Element, Functional, HopfAlgebra, Tensor};
use crate::linalg::RowEchelon;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    pub lambda: Functional,
    pub cointegral: Element,
    pub alpha: Functional,
    pub a: Element,
    pub mu: Option<Functional>,
}

fn unique_kernel(ech: RowEchelon, what: &'static str) -> Result<Vec<Scalar>> {
    let mut ns = ech.nullspace();
    match ns.len() {
        0 => Err(Error::NoIntegral(what)),
        1 => Ok(ns.pop().expect("one vector")),
        dim => Err(Error::AmbiguousIntegral { what, dim }),
    }
}

/// λ with λ(x_(1)) x_(2) = λ(x) 1 on every basis vector.
pub fn right_integral(h: &HopfAlgebra) -> Result<Functional> {
    let n = h.dim();
    let f = h.field();
    let mut ech = RowEchelon::new(f, n);
    for i in 0..n {
        // one equation per output coordinate k
        let mut rows = vec![vec![f.zero(); n]; n];
        for (j, k, c) in h.comult_basis(i) {
            rows[*k][*j] = &rows[*k][*j] + c;
        }
        for (k, u) in h.unit_coeffs().iter().enumerate() {
            rows[k][i] = &rows[k][i] - u;
        }
        for row in rows {
            if row.iter().any(|x| !x.is_zero()) {
                ech.push(row);
            }
        }
    }
    h.functional(unique_kernel(ech, "right integral")?)
}

/// Λ with x Λ = ε(x) Λ on every basis vector.
pub fn left_cointegral(h: &HopfAlgebra) -> Result<Element> {
    let n = h.dim();
    let f = h.field();
    let mut ech = RowEchelon::new(f, n);
    for i in 0..n {
        let mut rows = vec![vec![f.zero(); n]; n];
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                rows[*k][j] = &rows[*k][j] + c;
            }
        }
        let eps = &h.counit_coeffs()[i];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = &row[k] - eps;
        }
        for row in rows {
            if row.iter().any(|x| !x.is_zero()) {
                ech.push(row);
            }
        }
    }
    h.element(unique_kernel(ech, "left cointegral")?)
}

/// Rescales Λ so that λ(Λ) = 1.
pub fn normalize_pair(h: &HopfAlgebra, lambda: &Functional, cointegral: &Element) -> Result<(Functional, Element)> {
    let v = h.apply_functional(lambda, cointegral)?;
    if v.is_zero() {
        return Err(Error::DegeneratePairing);
    }
    Ok((lambda.clone(), cointegral.scale(&v.inv()?)))
}

/// α from Λ v = α(v) Λ and a from f λ = f(a) λ.
pub fn distinguished_group_likes(
    h: &HopfAlgebra,
    lambda: &Functional,
    cointegral: &Element,
) -> Result<(Functional, Element)> {
    let n = h.dim();
    let lc = cointegral.coeffs();
    let p = lc.iter().position(|x| !x.is_zero()).ok_or(Error::NoIntegral("left cointegral"))?;
    let pinv = lc[p].inv()?;
    let mut alpha = Vec::with_capacity(n);
    for i in 0..n {
        let y = h.multiply(cointegral, &h.basis(i))?;
        let ai = &y.coeffs()[p] * &pinv;
        if y != cointegral.scale(&ai) {
            return Err(Error::InconsistentSystem("cointegral is not an eigenvector of right multiplication"));
        }
        alpha.push(ai);
    }

    // (e_i^* λ)(e_k) = Σ c_k^{il} λ_l must equal a_i λ(e_k)
    let lv = lambda.coeffs();
    let x = lv.iter().position(|v| !v.is_zero()).ok_or(Error::NoIntegral("right integral"))?;
    let conv = |i: usize, k: usize| {
        let mut acc = h.field().zero();
        for (j, l, c) in h.comult_basis(k) {
            if *j == i {
                acc.add_mul(c, &lv[*l]);
            }
        }
        acc
    };
    let xinv = lv[x].inv()?;
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let ai = &conv(i, x) * &xinv;
        if (0..n).any(|k| conv(i, k) != &ai * &lv[k]) {
            return Err(Error::InconsistentSystem("integral is not an eigenvector of convolution"));
        }
        a.push(ai);
    }
    Ok((h.functional(alpha)?, h.element(a)?))
}

/// λ, Λ normalized, with α, a, and μ when the algebra is spherical.
pub fn integral_data(h: &HopfAlgebra) -> Result<IntegralData> {
    let (lambda, cointegral) = normalize_pair(h, &right_integral(h)?, &left_cointegral(h)?)?;
    let (alpha, a) = distinguished_group_likes(h, &lambda, &cointegral)?;
    let mut data = IntegralData { lambda, cointegral, alpha, a, mu: None };
    if spherical_report_with(h, &data)?.spherical() {
        data.mu = Some(symmetrized_integral_unchecked(h, &data.lambda)?);
    }
    Ok(data)
}

pub fn is_unimodular(h: &HopfAlgebra) -> Result<bool> {
    let lambda = right_integral(h)?;
    let cointegral = left_cointegral(h)?;
    let (alpha, _) = distinguished_group_likes(h, &lambda, &cointegral)?;
    Ok(alpha == h.counit())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphericalReport {
    pub pivotal: bool,
    pub unimodular: bool,
    pub pivot_squared_is_a: bool,
}

impl SphericalReport {
    pub fn spherical(&self) -> bool {
        self.pivotal && self.unimodular && self.pivot_squared_is_a
    }
}

/// Pivot group-like and implementing S² by conjugation.
pub fn is_pivotal(h: &HopfAlgebra) -> Result<bool> {
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    if !h.is_group_like(&g) {
        return Ok(false);
    }
    let ginv = h.antipode(&g)?;
    for i in 0..h.dim() {
        let b = h.basis(i);
        if h.antipode_power(&b, 2)? != h.product(&[&g, &b, &ginv])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn spherical_report_with(h: &HopfAlgebra, data: &IntegralData) -> Result<SphericalReport> {
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    Ok(SphericalReport {
        pivotal: is_pivotal(h)?,
        unimodular: data.alpha == h.counit(),
        pivot_squared_is_a: h.multiply(&g, &g)? == data.a,
    })
}

pub fn spherical_report(h: &HopfAlgebra) -> Result<SphericalReport> {
    let lambda = right_integral(h)?;
    let cointegral = left_cointegral(h)?;
    let (alpha, a) = distinguished_group_likes(h, &lambda, &cointegral)?;
    spherical_report_with(h, &IntegralData { lambda, cointegral, alpha, a, mu: None })
}

pub fn verify_spherical(h: &HopfAlgebra) -> Result<bool> {
    Ok(spherical_report(h)?.spherical())
}

fn symmetrized_integral_unchecked(h: &HopfAlgebra, lambda: &Functional) -> Result<Functional> {
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    let mu =
        (0..h.dim()).map(|i| h.apply_functional(lambda, &h.multiply(&g, &h.basis(i))?)).collect::<Result<Vec<_>>>()?;
    h.functional(mu)
}

/// μ = λ(g ·), checked against the three symmetrized-integral axioms.
pub fn symmetrized_integral(h: &HopfAlgebra, lambda: &Functional) -> Result<Functional> {
    if !verify_spherical(h)? {
        return Err(Error::NotSpherical("pivot, unimodularity or g^2 = a fails"));
    }
    let mu = symmetrized_integral_unchecked(h, lambda)?;
    check_symmetrized(h, &mu)?;
    Ok(mu)
}

/// (μ ⊗ g)Δ(x) = μ(x)1, μ(xy) = μ(yx), μ∘S = μ on basis vectors.
pub fn check_symmetrized(h: &HopfAlgebra, mu: &Functional) -> Result<()> {
    let n = h.dim();
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    let fail = |axiom: &str, witness| Err(Error::AxiomFailure { axiom: axiom.into(), witness });
    let m = mu.coeffs();
    for i in 0..n {
        let mut lhs = h.zero();
        for (j, k, c) in h.comult_basis(i) {
            let w = c * &m[*j];
            if !w.is_zero() {
                lhs = lhs.add(&h.multiply(&g, &h.basis(*k))?.scale(&w))?;
            }
        }
        if lhs != h.one().scale(&m[i]) {
            return fail("symmetrized integral: (mu (x) g) Delta = mu 1", i);
        }
        if h.apply_functional(mu, &h.antipode(&h.basis(i))?)? != m[i] {
            return fail("symmetrized integral: mu S = mu", i);
        }
        for j in 0..n {
            let xy = h.apply_functional(mu, &h.multiply(&h.basis(i), &h.basis(j))?)?;
            let yx = h.apply_functional(mu, &h.multiply(&h.basis(j), &h.basis(i))?)?;
            if xy != yx {
                return fail("symmetrized integral: mu(xy) = mu(yx)", i);
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitriangularReport {
    /// R R⁻¹ = 1 ⊗ 1.
    pub invertible: bool,
    /// (Δ ⊗ id)R = R13 R23, (id ⊗ Δ)R = R13 R12, τΔ(h)R = RΔ(h).
    pub identities: [bool; 3],
    /// First basis vector violating the third identity.
    pub witness: Option<usize>,
}

impl QuasitriangularReport {
    pub fn passed(&self) -> bool {
        self.invertible && self.identities.iter().all(|&b| b)
    }

    pub fn into_result(self) -> Result<()> {
        match self.identities.iter().position(|&b| !b) {
            Some(k) => Err(Error::NotQuasitriangular(k + 1)),
            None if !self.invertible => Err(Error::NotQuasitriangular(0)),
            None => Ok(()),
        }
    }
}

/// (S ⊗ id)(R), the inverse of any R-matrix.
pub fn r_inverse(h: &HopfAlgebra, r: &Tensor) -> Tensor {
    h.map_slot(r, 0, |i| h.antipode(&h.basis(i)).expect("own basis").coeffs().to_vec())
}

pub fn verify_quasitriangular(h: &HopfAlgebra, r: &Tensor, r_inv: Option<&Tensor>) -> Result<QuasitriangularReport> {
    let owned;
    let r_inv = match r_inv {
        Some(t) => t,
        None => {
            owned = r_inverse(h, r);
            &owned
        }
    };
    let one = h.one();
    let one2 = h.pure_tensor(&[&one, &one])?;
    let invertible = h.multiply_tensors(r, r_inv)? == one2 && h.multiply_tensors(r_inv, r)? == one2;

    let r12 = h.embed(r, &[0, 1], 3);
    let r13 = h.embed(r, &[0, 2], 3);
    let r23 = h.embed(r, &[1, 2], 3);
    let first = h.comultiply_slot(r, 0) == h.multiply_tensors(&r13, &r23)?;
    let second = h.comultiply_slot(r, 1) == h.multiply_tensors(&r13, &r12)?;
    let mut witness = None;
    for i in 0..h.dim() {
        let d = h.comultiply(&h.basis(i))?;
        let lhs = h.multiply_tensors(&h.permute_tensor(&d, &[1, 0]), r)?;
        if lhs != h.multiply_tensors(r, &d)? {
            witness = Some(i);
            break;
        }
    }
    Ok(QuasitriangularReport { invertible, identities: [first, second, witness.is_none()], witness })
}

/// u = Σ S(s_i) r_i.
pub fn drinfeld_element(h: &HopfAlgebra, r: &Tensor) -> Result<Element> {
    let mut u = h.zero();
    for (idx, c) in r.terms() {
        let s = h.antipode(&h.basis(idx[1]))?;
        u = u.add(&h.multiply(&s, &h.basis(idx[0]))?.scale(c))?;
    }
    Ok(u)
}

/// θ = m(τ((g ⊗ 1)R)) = Σ s_i g r_i.
pub fn ribbon_element(h: &HopfAlgebra, r: &Tensor) -> Result<Element> {
    let g = h.pivot().ok_or(Error::MissingPivot)?;
    let mut theta = h.zero();
    for (idx, c) in r.terms() {
        let t = h.product(&[&h.basis(idx[1]), &g, &h.basis(idx[0])])?;
        theta = theta.add(&t.scale(c))?;
    }
    Ok(theta)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonReport {
    pub theta: Element,
    /// θ = m((1 ⊗ g⁻¹)R).
    pub matches_alternative: bool,
    pub central: bool,
    pub antipode_invariant: bool,
    /// Ribbon and spherical agree, as they must for unimodular
    /// quasitriangular pivotal algebras.
    pub spherical_consistent: bool,
}

impl RibbonReport {
    pub fn ribbon(&self) -> bool {
        self.matches_alternative && self.central && self.antipode_invariant
    }
}

pub fn ribbon_check(h: &HopfAlgebra, r: &Tensor) -> Result<RibbonReport> {
    let theta = ribbon_element(h, r)?;
    let ginv = h.pivot_inverse()?;
    let mut alt = h.zero();
    for (idx, c) in r.terms() {
        alt = alt.add(&h.product(&[&h.basis(idx[0]), &ginv, &h.basis(idx[1])])?.scale(c))?;
    }
    let matches_alternative = alt == theta;
    let central = h.is_central(&theta);
    let antipode_invariant = h.antipode(&theta)? == theta;
    let spherical = verify_spherical(h)?;
    let ribbon = matches_alternative && central && antipode_invariant;
    Ok(RibbonReport {
        theta,
        matches_alternative,
        central,
        antipode_invariant,
        spherical_consistent: ribbon == spherical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use crate::zoo;

    #[test]
    fn group_algebra_integrals() {
        let f = Field::Rational;
        let h = zoo::group_algebra(&zoo::GroupTable::symmetric3(), &f).unwrap();
        let lam = right_integral(&h).unwrap();
        // a multiple of the coordinate functional at the identity
        assert!(lam.coeffs()[1..].iter().all(Scalar::is_zero));
        let coint = left_cointegral(&h).unwrap();
        assert!(coint.coeffs().iter().all(|c| *c == coint.coeffs()[0]));
        let d = integral_data(&h).unwrap();
        assert_eq!(d.alpha, h.counit());
        assert_eq!(d.a, h.one());
        assert_eq!(d.mu.as_ref(), Some(&d.lambda));
        assert!(verify_spherical(&h).unwrap());
    }

    #[test]
    fn z2_normalization() {
        let f = Field::Rational;
        let h = zoo::cyclic_group_algebra(2, &f).unwrap();
        let lam = h.functional(vec![f.one(), f.zero()]).unwrap();
        let coint = h.one().add(&h.basis(1)).unwrap();
        let (l2, c2) = normalize_pair(&h, &lam, &coint).unwrap();
        assert_eq!((l2, c2.clone()), (lam.clone(), coint.clone()));
        let doubled = coint.scale(&f.from_int(2));
        let lam2 = lam.scale(&f.from_int(1));
        assert_eq!(normalize_pair(&h, &lam2, &doubled).unwrap().1, coint);
        let d = integral_data(&h).unwrap();
        assert!(h.apply_functional(d.mu.as_ref().unwrap(), &h.one()).unwrap().is_one());
        assert_eq!(
            normalize_pair(&h, &h.functional(vec![f.one(), f.from_int(-1)]).unwrap(), &coint),
            Err(Error::DegeneratePairing)
        );
    }

    #[test]
    fn sweedler_is_not_unimodular() {
        let h = zoo::sweedler_algebra(&Field::Rational).unwrap();
        assert!(!is_unimodular(&h).unwrap());
        let rep = spherical_report(&h).unwrap();
        assert!(rep.pivotal);
        assert!(!rep.spherical());
        let d = integral_data(&h).unwrap();
        assert!(d.mu.is_none());
        assert!(matches!(symmetrized_integral(&h, &d.lambda), Err(Error::NotSpherical(_))));
    }

    #[test]
    fn trivial_ribbon() {
        let f = Field::Rational;
        let h = zoo::group_algebra(&zoo::GroupTable::trivial(), &f).unwrap();
        let r = h.pure_tensor(&[&h.one(), &h.one()]).unwrap();
        assert!(verify_quasitriangular(&h, &r, None).unwrap().passed());
        let rib = ribbon_check(&h, &r).unwrap();
        assert_eq!(rib.theta, h.one());
        assert!(rib.ribbon() && rib.spherical_consistent);
    }

    #[test]
    fn quantum_group_integrals() {
        let f = Field::cyclotomic(4);
        let u = zoo::small_quantum_sl2(2, &f.one()).unwrap();
        let h = &u.algebra;
        let d = integral_data(h).unwrap();
        // solver output is proportional to the closed forms
        let k = h.label_index("KEF").unwrap();
        let scale = &d.lambda.coeffs()[k] * &u.lambda.coeffs()[k].inv().unwrap();
        assert_eq!(d.lambda, u.lambda.scale(&scale));
        assert_eq!(d.cointegral, u.cointegral.scale(&scale.inv().unwrap()));
        assert!(h.apply_functional(&u.lambda, &u.cointegral).unwrap().is_one());
        let kk = h.basis(h.label_index("K").unwrap());
        assert_eq!(d.a, h.multiply(&kk, &kk).unwrap());
        assert_eq!(d.alpha, h.counit());
        let mu = d.mu.unwrap();
        let ef = h.label_index("EF").unwrap();
        for (i, m) in mu.coeffs().iter().enumerate() {
            assert_eq!(m.is_zero(), i != ef);
        }
    }

    #[test]
    fn missing_pivot() {
        let h = zoo::cyclic_group_algebra(2, &Field::Rational).unwrap().with_pivot(None).unwrap();
        assert_eq!(verify_spherical(&h), Err(Error::MissingPivot));
    }
}
