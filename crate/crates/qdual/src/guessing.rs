//! Classical and quantum guessing complexity: exact values by enumeration or
//! shell sums at desk scale, and the entropy-relative upper bounds the cost
//! estimator uses at cryptographic size.
//!
//! Convention: ranks are indexed from 0, so G(X) = sum_i i * p_i is the expected
//! number of *failed* guesses and the expected guess count is G + 1. Lower
//! bounds stated for guess counts (Massey) must be compared against G + 1.

use crate::error::{Error, Result};
use crate::gaussian::{
    self, discrete_gaussian_entropy, log2_rho_lattice, rho_lattice, shannon_entropy,
    ModularGaussian, PointCounter,
};

/// Exact guessing statistics of one distribution, outcomes of type `T`.
#[derive(Debug, Clone)]
pub struct GuessingReport<T> {
    /// G = sum_i i * p_i over ranks i = 0, 1, 2, ...
    pub g_classical: f64,
    /// G^qc = sum_i sqrt(i) * p_i, same rank convention.
    pub g_quantum: f64,
    pub entropy_bits: f64,
    /// Outcomes with their probabilities, non-increasing probability order.
    pub order: Vec<(T, f64)>,
}

impl<T> GuessingReport<T> {
    fn check_invariants(&self) {
        // Cauchy-Schwarz: sum sqrt(i) p_i <= sqrt(sum i p_i).
        debug_assert!(self.g_quantum <= self.g_classical.sqrt() + 1.0);
        debug_assert!(self
            .order
            .windows(2)
            .all(|w| w[0].1 >= w[1].1 - 1e-15 * w[0].1.abs()));
    }
}

/// A Lemma 3 style upper bound in log2, flagged when the small-n exact
/// fallback was used instead of the bound formula.
#[derive(Debug, Clone, Copy)]
pub struct BoundValue {
    pub log2: f64,
    pub exact_fallback: bool,
}

/// All Lemma 3 quantities for one (sigma, n, modular) triple.
#[derive(Debug, Clone, Copy)]
pub struct GuessingBounds {
    pub g_upper: f64,
    pub gqc_upper: f64,
    pub a_sigma: f64,
    pub entropy_lo: f64,
    pub entropy_hi: f64,
    pub modular_factor_applied: bool,
}

/// Exact G and G^qc of an explicit pmf (masses sum to 1 within 1e-9).
///
/// Ties in the descending sort are broken by original index, so the report is
/// deterministic; G and G^qc do not depend on how ties are resolved.
pub fn exact_guessing(pmf: &[f64]) -> Result<GuessingReport<usize>> {
    if pmf.is_empty() {
        return Err(Error::Domain("exact_guessing: empty pmf".into()));
    }
    let entropy_bits = shannon_entropy(pmf)?;
    let mut order: Vec<(usize, f64)> = pmf.iter().copied().enumerate().collect();
    order.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    let (mut g, mut gqc) = (0.0, 0.0);
    for (rank, &(_, p)) in order.iter().enumerate() {
        g += rank as f64 * p;
        gqc += (rank as f64).sqrt() * p;
    }
    let report = GuessingReport {
        g_classical: g,
        g_quantum: gqc,
        entropy_bits,
        order,
    };
    report.check_invariants();
    Ok(report)
}

/// Exact G and G^qc of the n-fold modular discrete Gaussian on Z_q^n,
/// by full enumeration of the q^n outcomes (capped at 2^20).
///
/// Outcomes are vectors of centered representatives; the order is by
/// non-increasing probability, which coincides with non-decreasing lifted norm.
pub fn modular_gaussian_order(sigma: f64, q: u32, n: u32) -> Result<GuessingReport<Vec<i64>>> {
    if n == 0 || n > 3 {
        return Err(Error::Unsupported(format!(
            "modular_gaussian_order: n = {n} outside 1..=3"
        )));
    }
    let size = (q as u64).checked_pow(n).filter(|&s| s <= 1 << 20);
    let Some(size) = size else {
        return Err(Error::Unsupported(format!(
            "modular_gaussian_order: q^n = {q}^{n} exceeds 2^20"
        )));
    };
    let mg = ModularGaussian::new(sigma, q)?;
    let mut order: Vec<(Vec<i64>, f64)> = Vec::with_capacity(size as usize);
    // Lexicographic enumeration over centered reps; the later stable sort keeps
    // this order within probability ties.
    let reps: Vec<i64> = {
        let lo = -((q / 2) as i64);
        let hi = ((q + 1) / 2) as i64;
        (lo..hi).collect()
    };
    let mut idx = vec![0usize; n as usize];
    loop {
        let outcome: Vec<i64> = idx.iter().map(|&i| reps[i]).collect();
        let p: f64 = outcome.iter().map(|&x| mg.pmf(x)).product();
        order.push((outcome, p));
        let mut carry = n as usize;
        while carry > 0 {
            idx[carry - 1] += 1;
            if idx[carry - 1] < reps.len() {
                break;
            }
            idx[carry - 1] = 0;
            carry -= 1;
        }
        if carry == 0 {
            break;
        }
    }
    order.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    let (mut g, mut gqc) = (0.0, 0.0);
    for (rank, &(_, p)) in order.iter().enumerate() {
        g += rank as f64 * p;
        gqc += (rank as f64).sqrt() * p;
    }
    let report = GuessingReport {
        g_classical: g,
        g_quantum: gqc,
        entropy_bits: n as f64 * mg.entropy_bits(),
        order,
    };
    report.check_invariants();
    Ok(report)
}

// Sum of sqrt(i) for i = 1..=n, by Euler-Maclaurin past n = 1000:
// (2/3) n^{3/2} + sqrt(n)/2 + zeta(-1/2) + 1/(24 sqrt(n)) + O(n^{-5/2}).
fn sum_sqrt_first(n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if n <= 1000 {
        return (1..=n).map(|i| (i as f64).sqrt()).sum();
    }
    const ZETA_MINUS_HALF: f64 = -0.207_886_224_977_354_6;
    let x = n as f64;
    (2.0 / 3.0) * x.powf(1.5) + 0.5 * x.sqrt() + ZETA_MINUS_HALF + 1.0 / (24.0 * x.sqrt())
}

/// Exact G and G^qc of the (non-modular) discrete Gaussian on Z^n, n <= 8,
/// via shell sums: every vector with |x|^2 = ell shares the mass
/// rho(sqrt(ell))/rho(Z^n), and its rank range is [N(ell-1), N(ell)) with N
/// the ball point count. Shells are summed until their mass drops below 1e-15
/// past the bulk at ell ~ n sigma^2.
pub fn exact_gaussian_guessing(sigma: f64, n: u32) -> Result<(f64, f64)> {
    if n == 0 || n > 8 {
        return Err(Error::Unsupported(format!(
            "exact_gaussian_guessing: n = {n} outside 1..=8"
        )));
    }
    let total = rho_lattice(sigma, n)?;
    let mut pc = PointCounter::new();
    let bulk = (n as f64 * sigma * sigma).ceil() as u64 + 1;
    let (mut g, mut gqc, mut mass_seen) = (0.0, 0.0, 0.0);
    let mut prev = 0u64; // N(ell - 1)
    for ell in 0..=u64::MAX {
        let cur = pc.count(n, ell)?;
        let per_vector = gaussian::rho(sigma, ell as f64)? / total;
        let shell = (cur - prev) as f64;
        let mass = shell * per_vector;
        mass_seen += mass;
        let (a, b) = (prev as f64, cur as f64);
        // sum of ranks a..b-1 and of their square roots
        g += per_vector * shell * (a + b - 1.0) / 2.0;
        let lo = if prev == 0 { 0.0 } else { sum_sqrt_first(prev - 1) };
        gqc += per_vector * (sum_sqrt_first(cur - 1) - lo);
        prev = cur;
        // Stop once even a full-ball-sized shell at this radius would weigh
        // under 1e-15; a per-shell mass test would trip on empty shells (three
        // squares miss 4^a(8b+7), two squares miss far more).
        if ell > bulk && per_vector * (cur as f64 + 1.0) < 1e-15 {
            break;
        }
        if ell > 50_000_000 {
            return Err(Error::Unsupported(format!(
                "exact_gaussian_guessing: sigma = {sigma}, n = {n} needs shells past 5e7"
            )));
        }
    }
    debug_assert!((mass_seen - 1.0).abs() < 1e-9, "shell masses sum to {mass_seen}");
    Ok((g, gqc))
}

// log2(1 - e^{-x}) without cancellation for small x.
fn log2_one_minus_exp_neg(x: f64) -> f64 {
    (-(-x).exp_m1()).log2()
}

/// log2 of the Lemma 3 classical bound 2^n rho_sigma(Z^n) / (1 - e^{-1/2sigma^2}),
/// doubled if `modular`. The bound needs n >= 4; below that the exact shell
/// value (times the modular factor) is returned with `exact_fallback` set.
pub fn bound_g(sigma: f64, n: u32, modular: bool) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Domain("bound_g: n must be >= 1".into()));
    }
    let modular_log2 = if modular { 1.0 } else { 0.0 };
    if n < 4 {
        let (g, _) = exact_gaussian_guessing(sigma, n)?;
        return Ok(BoundValue {
            log2: g.log2() + modular_log2,
            exact_fallback: true,
        });
    }
    let log2 = n as f64 + log2_rho_lattice(sigma, n)?
        - log2_one_minus_exp_neg(1.0 / (2.0 * sigma * sigma))
        + modular_log2;
    Ok(BoundValue {
        log2,
        exact_fallback: false,
    })
}

/// Smallest width where the Lemma 3 quantum bound applies: (2/(27 pi^2))^{1/4}.
pub fn gqc_sigma_threshold() -> f64 {
    (2.0 / (27.0 * std::f64::consts::PI * std::f64::consts::PI)).powf(0.25)
}

/// log2 of the Lemma 3 quantum bound
/// (7/6) (3/2)^{3n/4} sqrt(rho_sigma(Z^n)) / (1 - e^{-1/3sigma^2})^{3/2},
/// plus log2(3/2) if `modular`. Requires sigma above [`gqc_sigma_threshold`].
pub fn bound_gqc(sigma: f64, n: u32, modular: bool) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::Domain("bound_gqc: n must be >= 1".into()));
    }
    if sigma < gqc_sigma_threshold() {
        return Err(Error::Domain(format!(
            "bound_gqc: sigma = {sigma} below the Lemma 3 validity threshold (2/27pi^2)^(1/4) ~ 0.294"
        )));
    }
    let modular_log2 = if modular { 1.5f64.log2() } else { 0.0 };
    if n < 4 {
        let (_, gqc) = exact_gaussian_guessing(sigma, n)?;
        return Ok(BoundValue {
            log2: gqc.log2() + modular_log2,
            exact_fallback: true,
        });
    }
    let log2 = (7.0 / 6.0f64).log2()
        + 0.75 * n as f64 * 1.5f64.log2()
        + 0.5 * log2_rho_lattice(sigma, n)?
        - 1.5 * log2_one_minus_exp_neg(1.0 / (3.0 * sigma * sigma))
        + modular_log2;
    Ok(BoundValue {
        log2,
        exact_fallback: false,
    })
}

/// The extra factor a(sigma) = exp(8 pi^2 sigma^2 e^{-2 pi^2 sigma^2} tanh(pi^2 sigma^2)).
/// Decreasing toward 1 as sigma grows.
pub fn a_sigma(sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!("a_sigma: sigma must be positive, got {sigma}")));
    }
    let p2s2 = std::f64::consts::PI * std::f64::consts::PI * sigma * sigma;
    Ok((8.0 * p2s2 * (-2.0 * p2s2).exp() * p2s2.tanh()).exp())
}

/// Entropy-relative Lemma 3 bounds in log2:
/// G <= (2a/sqrt(e))^n 2^H / (1-e^{-1/2s^2}) and
/// G^qc <= (7/6) (27a^2/8e)^{n/4} 2^{H/2} / (1-e^{-1/3s^2})^{3/2},
/// with H = n times the exact 1-D entropy. These are what the estimator uses
/// for the enumeration-stage guessing factors.
pub fn entropy_relative_bounds(sigma: f64, n: u32) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::Domain("entropy_relative_bounds: n must be >= 1".into()));
    }
    let h = n as f64 * discrete_gaussian_entropy(sigma)?;
    let a = a_sigma(sigma)?;
    let e = std::f64::consts::E;
    let g = h + n as f64 * (2.0 * a / e.sqrt()).log2()
        - log2_one_minus_exp_neg(1.0 / (2.0 * sigma * sigma));
    let gqc = 0.5 * h
        + 0.25 * n as f64 * (27.0 * a * a / (8.0 * e)).log2()
        + (7.0 / 6.0f64).log2()
        - 1.5 * log2_one_minus_exp_neg(1.0 / (3.0 * sigma * sigma));
    Ok((g, gqc))
}

/// All Lemma 3 quantities for one width: direct bounds, a(sigma), and the
/// entropy sandwich H in [n(1/2 + ln(sigma sqrt(2pi)))/ln 2 - lo, ... + hi].
pub fn lemma3_bounds(sigma: f64, n: u32, modular: bool) -> Result<GuessingBounds> {
    let g_upper = bound_g(sigma, n, modular)?.log2;
    let gqc_upper = bound_gqc(sigma, n, modular)?.log2;
    let a = a_sigma(sigma)?;
    let p2s2 = std::f64::consts::PI * std::f64::consts::PI * sigma * sigma;
    let center =
        n as f64 * (0.5 + (sigma * (2.0 * std::f64::consts::PI).sqrt()).ln()) / std::f64::consts::LN_2;
    let coth = 1.0 / p2s2.tanh();
    let lo = center - n as f64 * 8.0 * p2s2 * (-2.0 * p2s2).exp() / (std::f64::consts::LN_2 * coth);
    let hi = center + n as f64 * coth.log2();
    Ok(GuessingBounds {
        g_upper,
        gqc_upper,
        a_sigma: a,
        entropy_lo: lo,
        entropy_hi: hi,
        modular_factor_applied: modular,
    })
}

/// Massey's entropy lower bound on the expected guess count, in the index-0
/// convention: returns Some(G + 1 >= 2^H/4 + 1) when H >= 2 bits, None below
/// the theorem's validity threshold.
pub fn massey_check(g_classical: f64, entropy_bits: f64) -> Option<bool> {
    if entropy_bits < 2.0 {
        return None;
    }
    Some(g_classical + 1.0 >= 0.25 * entropy_bits.exp2() + 1.0)
}
