//! Finite field tables for small prime powers.
//!
//! Elements are indices `0..q`. Index 0 is the additive identity, index 1
//! the multiplicative identity. A prime field is modular arithmetic; a
//! prime-power field GF(p^k) represents elements as polynomials over GF(p)
//! with digit i of the index (base p) the coefficient of x^i, reduced by
//! the first irreducible monic polynomial of degree k in index order.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteFieldTable {
    q: u64,
    p: u64,
    k: u32,
    add: Vec<u64>,
    mul: Vec<u64>,
    /// Lower coefficients of the reduction polynomial (prime case: empty).
    modulus: Vec<u64>,
}

/// Factors q as p^k for prime p, if possible.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            return (rest == 1).then_some((p, k));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Builds GF(q) for a prime power q <= 64.
pub fn finite_field(q: u64) -> Result<FiniteFieldTable> {
    if q > 64 {
        return Err(Error::FieldTooLarge(q));
    }
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let modulus = if k == 1 {
        Vec::new()
    } else {
        first_irreducible(p, k)
    };
    let qz = q as usize;
    let mut add = vec![0u64; qz * qz];
    let mut mul = vec![0u64; qz * qz];
    for a in 0..q {
        for b in 0..q {
            add[(a * q + b) as usize] = add_poly(a, b, p, k);
            mul[(a * q + b) as usize] = mul_poly(a, b, p, k, &modulus);
        }
    }
    Ok(FiniteFieldTable {
        q,
        p,
        k,
        add,
        mul,
        modulus,
    })
}

fn digits(x: u64, p: u64, k: u32) -> Vec<u64> {
    let mut d = vec![0u64; k as usize];
    let mut rest = x;
    for slot in d.iter_mut() {
        *slot = rest % p;
        rest /= p;
    }
    d
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn add_poly(a: u64, b: u64, p: u64, k: u32) -> u64 {
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    undigits(&sum, p)
}

/// Multiplies two elements, reducing by x^k = -(modulus) when k > 1.
fn mul_poly(a: u64, b: u64, p: u64, k: u32, modulus: &[u64]) -> u64 {
    if k == 1 {
        return (a * b) % p;
    }
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let mut prod = vec![0u64; 2 * k as usize - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce from the top: x^(k+t) = -modulus(x) * x^t
    for top in (k as usize..prod.len()).rev() {
        let coeff = prod[top];
        if coeff != 0 {
            prod[top] = 0;
            for (i, &mc) in modulus.iter().enumerate() {
                let idx = top - k as usize + i;
                prod[idx] = (prod[idx] + coeff * (p - mc) % p) % p;
            }
        }
    }
    undigits(&prod[..k as usize], p)
}

/// The first irreducible monic polynomial of degree k over GF(p), scanning
/// lower-coefficient vectors in ascending index order. Irreducibility is by
/// trial division with every monic polynomial of degree 1..=k/2.
fn first_irreducible(p: u64, k: u32) -> Vec<u64> {
    let total = p.pow(k);
    'candidate: for code in 0..total {
        let mut cand = digits(code, p, k);
        cand.push(1); // monic of degree k
        for deg in 1..=k / 2 {
            for dcode in 0..p.pow(deg) {
                let mut div = digits(dcode, p, deg);
                div.push(1);
                if divides(&div, &cand, p) {
                    continue 'candidate;
                }
            }
        }
        cand.pop();
        return cand;
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

/// Whether monic `div` divides monic `poly` over GF(p).
fn divides(div: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (i, &c) in div.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + lead * (p - c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

impl FiniteFieldTable {
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u64) -> u64 {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists")
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| {
            (1..self.q)
                .find(|&b| self.mul(a, b) == 1)
                .expect("multiplicative inverse exists")
        })
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Exhaustive field-law check; feasible for q <= 16.
    pub fn verify_laws(&self) -> bool {
        let q = self.q;
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return false;
            }
            if (0..q).all(|b| self.add(a, b) != 0) {
                return false;
            }
            if a != 0 && (0..q).all(|b| self.mul(a, b) != 1) {
                return false;
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return false;
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
