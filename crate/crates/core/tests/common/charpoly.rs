//! Exact characteristic polynomials of small adjacency matrices, used as an
//! oracle for the floating-point eigensolver.
//!
//! `det(xI − A)` is expanded by cofactors with integer polynomial entries,
//! split into square-free factors by multiplicity over the rationals, and
//! evaluated exactly at rational points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use subspace_angles::Graph;

/// Integer coefficients, lowest degree first.
pub type IntPoly = Vec<i64>;
/// Rational coefficients, lowest degree first, no trailing zeros.
pub type RatPoly = Vec<BigRational>;

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_add_scaled(acc: &mut IntPoly, p: &IntPoly, sign: i64) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += sign * x;
    }
}

fn det(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = vec![0];
    for col in 0..n {
        if m[0][col].iter().all(|&c| c == 0) {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = int_mul(&m[0][col], &det(&minor));
        int_add_scaled(&mut acc, &term, if col % 2 == 0 { 1 } else { -1 });
    }
    acc
}

/// `det(xI − A)` of the adjacency matrix of `g`.
pub fn characteristic_polynomial(g: &Graph) -> IntPoly {
    let n = g.vertex_count();
    let m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![0, 1]
                    } else if g.has_edge(i, j) {
                        vec![-1]
                    } else {
                        vec![0]
                    }
                })
                .collect()
        })
        .collect();
    let mut p = det(&m);
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn deriv(p: &RatPoly) -> RatPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect(),
    )
}

fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| {
                let x = a.get(k).cloned().unwrap_or_else(Zero::zero);
                let y = b.get(k).cloned().unwrap_or_else(Zero::zero);
                x - y
            })
            .collect(),
    )
}

/// Quotient and remainder; `b` nonzero.
fn div_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &c * bj;
        }
        q[k] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: RatPoly) -> RatPoly {
    let lead = p.last().unwrap().clone();
    p.into_iter().map(|c| c / &lead).collect()
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

fn is_one(p: &RatPoly) -> bool {
    p.len() == 1 && p[0].is_one()
}

/// Yun's square-free decomposition: `factors[m-1]` is the product of the
/// monic irreducible factors of multiplicity exactly `m`.
pub fn square_free_factors(p: &IntPoly) -> Vec<RatPoly> {
    let f: RatPoly = monic(trim(p.iter().map(|&c| rat(c)).collect()));
    let mut out = Vec::new();
    if f.len() == 1 {
        return out;
    }
    let df = deriv(&f);
    let a0 = gcd(&f, &df);
    let mut b = div_rem(&f, &a0).0;
    let c = div_rem(&df, &a0).0;
    let mut d = sub(&c, &deriv(&b));
    while !is_one(&b) {
        let a = gcd(&b, &d);
        let b_next = div_rem(&b, &a).0;
        let c_next = div_rem(&d, &a).0;
        d = sub(&c_next, &deriv(&b_next));
        b = b_next;
        out.push(a);
    }
    out
}

/// Exact sign of `p(x)`.
pub fn sign_at(p: &RatPoly, x: &BigRational) -> i32 {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// Checks that each computed eigenvalue `λ` has a root of the exact
/// characteristic polynomial, with matching multiplicity, inside
/// `[λ − radius, λ + radius]`. Returns a description of the first failure.
pub fn check_spectrum(g: &Graph, eigenvalues: &[f64], radius: f64) -> Result<(), String> {
    let p = characteristic_polynomial(g);
    let factors = square_free_factors(&p);
    let degree_sum: usize = factors
        .iter()
        .enumerate()
        .map(|(k, f)| (k + 1) * (f.len() - 1))
        .sum();
    if degree_sum != g.vertex_count() {
        return Err(format!("decomposition degree {degree_sum} != n"));
    }

    let mut sorted = eigenvalues.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut start = 0;
    while start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && sorted[end - 1] - sorted[end] < 1e-6 {
            end += 1;
        }
        let multiplicity = end - start;
        let Some(factor) = factors.get(multiplicity - 1).filter(|f| f.len() > 1) else {
            return Err(format!(
                "{g}: no root of multiplicity {multiplicity} near {}",
                sorted[start]
            ));
        };
        for &lambda in &sorted[start..end] {
            let lo = sign_at(factor, &to_rational(lambda - radius));
            let hi = sign_at(factor, &to_rational(lambda + radius));
            if lo * hi > 0 {
                return Err(format!(
                    "{g}: {lambda} (multiplicity {multiplicity}) not bracketed within ±{radius:e}"
                ));
            }
        }
        start = end;
    }
    Ok(())
}
