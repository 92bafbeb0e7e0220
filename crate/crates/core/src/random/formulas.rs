//! Closed-form expectations and asymptotic references for degree-collision
//! counts in H^(r)(n, 1/2), plus the binomial-sum approximations they rest
//! on. Exact formulas are evaluated in log space through the log-gamma
//! function so the huge binomials never overflow.

use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

fn ln_choose(n: f64, k: f64) -> f64 {
    ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)
}

/// C(n, k) as f64, exact for small arguments.
pub fn choose_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc = 1f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Exact `E(X2)` at p = 1/2: the expected number of equal-degree vertex
/// pairs is `C(n,2) * C(2B, B) / 2^(2B)` with `B = C(n-2, r-1)`.
pub fn expected_x2_exact(n: u64, r: u64) -> Result<f64> {
    if r < 2 || n < r + 2 {
        return Err(Error::ExpectationDomain {
            r: r as usize,
            n: n as usize,
        });
    }
    let b = choose_f64(n - 2, r - 1);
    let ln = ln_choose(n as f64, 2.0) + ln_choose(2.0 * b, b) - 2.0 * b * std::f64::consts::LN_2;
    Ok(ln.exp())
}

/// Leading-order `E(X2)`: `sqrt((r-1)!) / (2 sqrt(pi)) * n^(2-(r-1)/2)`.
pub fn expected_x2_asymptotic(n: u64, r: u64) -> f64 {
    let fact: f64 = (1..r).map(|i| i as f64).product();
    fact.sqrt() / (2.0 * std::f64::consts::PI.sqrt())
        * (n as f64).powf(2.0 - (r as f64 - 1.0) / 2.0)
}

/// The Poisson reference probability `e^(-sqrt(6/pi))` that a large random
/// 5-uniform hypergraph has no equal-degree pair.
pub fn poisson_reference() -> f64 {
    (-(6.0 / std::f64::consts::PI).sqrt()).exp()
}

/// Leading-order values used for sanity ratios only: the orders of E(X3)
/// and E(X4), and the expected number of all-equal-degree edges at r = 3.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AsymptoticOrders {
    /// Theta(n^(4-r)) for equal-degree triples.
    pub x3_order: f64,
    /// Theta(n^(4-3(r-1)/2)) for equal-degree quadruples.
    pub x4_order: f64,
    /// C(n,3) * 2 / (pi sqrt(3) n^2): expected all-equal-degree edges, r=3.
    pub x3_edges: f64,
}

pub fn asymptotic_orders(n: u64, r: u64) -> AsymptoticOrders {
    let nf = n as f64;
    AsymptoticOrders {
        x3_order: nf.powf(4.0 - r as f64),
        x4_order: nf.powf(4.0 - 3.0 * (r as f64 - 1.0) / 2.0),
        x3_edges: choose_f64(n, 3) * 2.0 / (std::f64::consts::PI * 3f64.sqrt() * nf * nf),
    }
}

/// Exact `sum_i C(m, i)^k` (binomials are integers below 2^53 for m <= 63).
pub fn sum_binomial_powers(m: u64, k: u32) -> f64 {
    (0..=m).map(|i| choose_f64(m, i).powi(k as i32)).sum()
}

/// The matching asymptote `(2^m sqrt(2/(pi m)))^k * sqrt(pi m / (2k))`.
pub fn sum_binomial_powers_asymptote(m: u64, k: u32) -> f64 {
    let mf = m as f64;
    let pi = std::f64::consts::PI;
    (2f64.powf(mf) * (2.0 / (pi * mf)).sqrt()).powi(k as i32) * (pi * mf / (2.0 * k as f64)).sqrt()
}

/// Exact central binomial coefficient `C(m, floor(m/2))`.
pub fn central_binomial(m: u64) -> f64 {
    choose_f64(m, m / 2)
}

/// The central-binomial asymptote `2^(m + 1/2) / sqrt(pi m)`.
pub fn central_binomial_asymptote(m: u64) -> f64 {
    2f64.powf(m as f64 + 0.5) / (std::f64::consts::PI * m as f64).sqrt()
}
