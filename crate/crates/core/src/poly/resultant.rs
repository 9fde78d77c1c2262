use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::ring::{Field, IntegralDomain, Ring};

/// Pseudo-remainder: the `r` with `lc(g)^(deg f - deg g + 1) f = q g + r`, `deg r < deg g`.
/// Works over any integral domain; no division is performed.
pub fn pseudo_rem<R: Ring>(
    ring: &R,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<Poly<R::Elem>> {
    let dg = g.degree().ok_or(Error::DivisionByZero)?;
    let lg = g.leading().expect("nonzero");
    let Some(df) = f.degree() else {
        return Ok(f.clone());
    };
    if df < dg {
        return Ok(f.clone());
    }
    let mut rem: Vec<R::Elem> = f.coeffs().to_vec();
    let mut steps = df - dg + 1;
    while rem.len() > dg && !rem.is_empty() {
        let top = rem.len() - 1;
        let lead = rem[top].clone();
        let shift = top - dg;
        for c in rem.iter_mut() {
            *c = ring.mul(c, lg);
        }
        for (j, gj) in g.coeffs().iter().enumerate() {
            rem[shift + j] = ring.sub(&rem[shift + j], &ring.mul(&lead, gj));
        }
        steps -= 1;
        while rem.last().is_some_and(|c| ring.is_zero(c)) {
            rem.pop();
        }
    }
    let scale = ring.pow(lg, steps as u64);
    Ok(PolyRing::new(ring).from_coeffs(rem.iter().map(|c| ring.mul(c, &scale)).collect()))
}

/// Resultant of `f` and `g` by the subresultant polynomial remainder sequence.
///
/// Every division in the loop is exact in the coefficient domain, so this runs over the
/// integers and over `Q[x]` alike. Zero exactly when `f` and `g` share a nonconstant factor.
pub fn resultant<R: IntegralDomain>(
    ring: &R,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<R::Elem> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let exact = |a: &R::Elem, b: &R::Elem| {
        ring.exact_div(a, b)
            .ok_or_else(|| Error::Inconsistent("inexact division in subresultant sequence".into()))
    };
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    let (mut da, mut db) = (a.degree().unwrap(), b.degree().unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    if db == 0 {
        let r = ring.pow(b.leading().unwrap(), da as u64);
        return Ok(if negate { ring.neg(&r) } else { r });
    }
    let mut g_acc = ring.one();
    let mut h_acc = ring.one();
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(ring, &a, &b)?;
        if r.is_zero() {
            return Ok(ring.zero());
        }
        let divisor = ring.mul(&g_acc, &ring.pow(&h_acc, delta as u64));
        let next_b = r.try_map(|c| exact(c, &divisor))?;
        a = b;
        b = next_b;
        g_acc = a.leading().unwrap().clone();
        h_acc = match delta {
            0 => h_acc,
            1 => g_acc.clone(),
            d => exact(&ring.pow(&g_acc, d as u64), &ring.pow(&h_acc, d as u64 - 1))?,
        };
        da = a.degree().unwrap();
        db = b.degree().unwrap();
        if db == 0 {
            break;
        }
    }
    let lb = b.leading().unwrap();
    let result = if da == 1 {
        lb.clone()
    } else {
        exact(&ring.pow(lb, da as u64), &ring.pow(&h_acc, da as u64 - 1))?
    };
    Ok(if negate { ring.neg(&result) } else { result })
}

/// Determinant of the Sylvester matrix of `f` and `g` by Gaussian elimination.
///
/// Cubic in `deg f + deg g`; kept as an independent reference for [`resultant`].
pub fn sylvester_determinant<R: Field>(
    ring: &R,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<R::Elem> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(Error::ZeroPolynomial),
    };
    let size = m + n;
    if size == 0 {
        return Ok(ring.one());
    }
    let mut mat = vec![vec![ring.zero(); size]; size];
    for row in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + j] = c.clone();
        }
    }
    let mut det = ring.one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !ring.is_zero(&mat[r][col])) else {
            return Ok(ring.zero());
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = ring.neg(&det);
        }
        let p = mat[col][col].clone();
        det = ring.mul(&det, &p);
        let p_inv = ring.inv(&p)?;
        for r in col + 1..size {
            if ring.is_zero(&mat[r][col]) {
                continue;
            }
            let factor = ring.mul(&mat[r][col], &p_inv);
            let (above, below) = mat.split_at_mut(r);
            for (x, y) in below[0][col..].iter_mut().zip(&above[col][col..]) {
                let v = ring.mul(&factor, y);
                *x = ring.sub(x, &v);
            }
        }
    }
    Ok(det)
}
