#![allow(dead_code)]

use hopfknot_core::chromatic::{self, FlatHeegaardDiagram, HeegaardEvent, Travel};
use hopfknot_core::zoo::{self, GroupTable};
use hopfknot_core::{Field, HopfAlgebra};
use rand::Rng;

pub fn z2() -> HopfAlgebra {
    zoo::cyclic_group_algebra(2, &Field::Rational).unwrap()
}

pub fn s3() -> HopfAlgebra {
    zoo::group_algebra(&GroupTable::symmetric3(), &Field::Rational).unwrap()
}

pub fn u2() -> HopfAlgebra {
    zoo::small_quantum_sl2(2, &Field::cyclotomic(4).one()).unwrap().algebra
}

/// The normal-form test diagrams, before flattening.
pub fn test_diagrams() -> Vec<(&'static str, FlatHeegaardDiagram)> {
    vec![
        ("S3", chromatic::standard_sphere()),
        ("L(2,1)", chromatic::lens_space(2).unwrap()),
        ("L(3,1)", chromatic::lens_space(3).unwrap()),
        ("genus-2", chromatic::genus_two_example()),
    ]
}

fn travel<R: Rng>(rng: &mut R) -> Travel {
    if rng.gen() {
        Travel::Right
    } else {
        Travel::Left
    }
}

/// One move chosen uniformly among the generators, with random placement.
pub fn random_move<R: Rng>(d: &FlatHeegaardDiagram, rng: &mut R) -> FlatHeegaardDiagram {
    let c = rng.gen_range(0..d.beta().len());
    let len = d.beta()[c].len();
    match rng.gen_range(0..5) {
        0 => d.reverse_beta(c),
        1 => d.reverse_alpha(rng.gen_range(0..d.genus())),
        2 => {
            let a = rng.gen_range(0..d.genus());
            let slot = rng.gen_range(1..=d.alpha_slots(a).len() + 1);
            d.insert_r2(c, rng.gen_range(0..=len), a, slot, rng.gen())
        }
        3 => d.insert_extremum_pair(c, rng.gen_range(0..=len), travel(rng)),
        _ => d.shift_basepoint(c),
    }
    .expect("generated move is valid")
}

/// A flat diagram of genus ≤ 2 obtained from a random test diagram by a
/// few random moves.
pub fn random_diagram<R: Rng>(rng: &mut R) -> FlatHeegaardDiagram {
    let bases = test_diagrams();
    let mut d = bases[rng.gen_range(0..bases.len())].1.flatten().unwrap();
    for _ in 0..rng.gen_range(1..=3) {
        d = random_move(&d, rng);
    }
    d
}

/// Every move applied once: all base-point positions, both orientation
/// reversals for each curve, and a random R2 and extremum pair.
pub fn move_family<R: Rng>(d: &FlatHeegaardDiagram, rng: &mut R) -> Vec<(String, FlatHeegaardDiagram)> {
    let mut out = Vec::new();
    for c in 0..d.beta().len() {
        let mut x = d.clone();
        for k in 1..d.beta()[c].len() {
            x = x.shift_basepoint(c).unwrap();
            out.push((format!("basepoint β{c}+{k}"), x.clone()));
        }
        out.push((format!("reverse β{c}"), d.reverse_beta(c).unwrap()));
        let len = d.beta()[c].len();
        out.push((format!("extrema on β{c}"), d.insert_extremum_pair(c, rng.gen_range(0..=len), travel(rng)).unwrap()));
        let a = rng.gen_range(0..d.genus());
        let slot = rng.gen_range(1..=d.alpha_slots(a).len() + 1);
        out.push((format!("R2 β{c}×α{a}"), d.insert_r2(c, rng.gen_range(0..=len), a, slot, rng.gen()).unwrap()));
    }
    for a in 0..d.genus() {
        out.push((format!("reverse α{a}"), d.reverse_alpha(a).unwrap()));
    }
    out
}

/// |Hom(π₁, G)| by enumeration: one generator per α curve, one relator
/// per β curve read off its crossings (d = 0 gives x, d = 1 gives x⁻¹).
pub fn count_homs(d: &FlatHeegaardDiagram, g: &GroupTable) -> usize {
    let relators: Vec<Vec<(usize, bool)>> = d
        .beta()
        .iter()
        .map(|w| {
            w.iter()
                .filter_map(|e| match *e {
                    HeegaardEvent::Cross { alpha, d, .. } => Some((alpha, d == 0)),
                    _ => None,
                })
                .collect()
        })
        .collect();
    let n = g.order();
    let mut count = 0;
    let mut x = vec![0usize; d.genus()];
    loop {
        let ok = relators.iter().all(|r| {
            r.iter().fold(g.identity(), |acc, &(i, pos)| g.mul(acc, if pos { x[i] } else { g.inv(x[i]) }))
                == g.identity()
        });
        count += ok as usize;
        let mut k = 0;
        loop {
            if k == x.len() {
                return count;
            }
            x[k] += 1;
            if x[k] < n {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Signature of an integer symmetric matrix from its characteristic
/// polynomial: the roots are real, so Descartes' rule counts them exactly.
pub fn charpoly_signature(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    // Faddeev–LeVerrier: coeffs[k] multiplies x^k.
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum::<i128>();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        m = next;
        let tr: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>()).sum();
        coeffs[n - k] = -tr / k as i128;
    }
    let changes = |cs: &[i128]| {
        let signs: Vec<bool> = cs.iter().filter(|c| **c != 0).map(|c| *c > 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
    };
    let flipped: Vec<i128> = coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { *c }).collect();
    changes(&coeffs) - changes(&flipped)
}

pub fn random_symmetric<R: Rng>(rng: &mut R, max_n: usize) -> Vec<Vec<i64>> {
    let n = rng.gen_range(1..=max_n);
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-4..=4);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}
