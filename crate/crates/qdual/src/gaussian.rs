//! Discrete Gaussian mass functions, modular discrete Gaussians, lattice point
//! counting, and the standard normal CDF with high-precision tail inverses.
//!
//! Width convention: rho_sigma(x) = exp(-|x|^2 / (2 sigma^2)), so sigma is the
//! standard deviation of the continuous Gaussian being discretized.

use crate::error::{Error, Result};

/// rho_sigma at squared norm `norm_sq`: exp(-norm_sq / (2 sigma^2)).
pub fn rho(sigma: f64, norm_sq: f64) -> Result<f64> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!("rho: sigma must be positive, got {sigma}")));
    }
    if !(norm_sq >= 0.0) {
        return Err(Error::Domain(format!("rho: squared norm must be nonnegative, got {norm_sq}")));
    }
    Ok((-norm_sq / (2.0 * sigma * sigma)).exp())
}

// One-dimensional theta sum rho_sigma(Z) = 1 + 2 sum_{k>=1} exp(-k^2/2sigma^2),
// truncated at |k| <= ceil(13 sigma) + 2. The first neglected term is below
// exp(-84.5) of the leading one, so the tail check cannot fire for sigma > 0;
// it guards against future edits to the cutoff.
fn theta_1d(sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!("theta_1d: sigma must be positive, got {sigma}")));
    }
    let k_max = (13.0 * sigma).ceil() as i64 + 2;
    let mut s = 1.0;
    for k in 1..=k_max {
        s += 2.0 * rho(sigma, (k * k) as f64)?;
    }
    let next = 2.0 * rho(sigma, ((k_max + 1) * (k_max + 1)) as f64)?;
    if next >= 1e-18 * s {
        return Err(Error::Domain(format!(
            "theta_1d: truncation at k={k_max} leaves a tail term {next:.3e} >= 1e-18 * {s:.3e}"
        )));
    }
    Ok(s)
}

/// rho_sigma(Z^n), the Gaussian mass of the integer lattice.
///
/// Errors with [`Error::Overflow`] once the n-th power leaves f64 range; use
/// [`log2_rho_lattice`] there.
pub fn rho_lattice(sigma: f64, n: u32) -> Result<f64> {
    let theta = theta_1d(sigma)?;
    let log2 = n as f64 * theta.log2();
    if log2 > 1020.0 {
        return Err(Error::Overflow(format!(
            "rho_lattice: sigma={sigma}, n={n} needs 2^{log2:.1}; use log2_rho_lattice"
        )));
    }
    let out = theta.powi(n as i32);
    // Sandwich from the smoothing argument: (sigma sqrt(2 pi))^n <= rho <= that times coth(pi^2 sigma^2)^n.
    debug_assert!({
        let base = sigma * (2.0 * std::f64::consts::PI).sqrt();
        let coth = 1.0 / (std::f64::consts::PI.powi(2) * sigma * sigma).tanh();
        let lo = n as f64 * base.log2() - 1e-9;
        let hi = n as f64 * (base.log2() + coth.log2()) + 1e-9;
        n == 0 || (log2 >= lo.min(-1e-9) && log2 <= hi.max(1e-9))
    });
    Ok(out)
}

/// log2 of rho_sigma(Z^n); safe for n in the hundreds.
pub fn log2_rho_lattice(sigma: f64, n: u32) -> Result<f64> {
    Ok(n as f64 * theta_1d(sigma)?.log2())
}

/// Centered representative of x mod q, in [-floor(q/2), ceil(q/2)-1].
///
/// For odd q this is the symmetric range [-(q-1)/2, (q-1)/2]; for even q the
/// class q/2 is represented by -q/2 (a symmetric range does not exist).
pub fn centered(x: i64, q: u32) -> i64 {
    let q = q as i64;
    let r = x.rem_euclid(q);
    if 2 * r >= q + (q & 1) {
        r - q
    } else {
        r
    }
}

/// A discrete Gaussian on Z reduced mod q, tabulated over centered representatives.
#[derive(Debug, Clone)]
pub struct ModularGaussian {
    pub q: u32,
    pub sigma: f64,
    // probs[j] = P[X = j mod q] for residue class j in 0..q.
    probs: Vec<f64>,
}

impl ModularGaussian {
    /// Tabulate D_{Z,sigma} mod q. Truncation keeps relative tail mass below 1e-15.
    pub fn new(sigma: f64, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::Domain(format!("ModularGaussian: q must be >= 2, got {q}")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::Domain(format!("ModularGaussian: sigma must be positive, got {sigma}")));
        }
        let qf = q as f64;
        let mut probs = vec![0.0f64; q as usize];
        if sigma >= qf {
            // Wide regime: Poisson-summed form of the wrapped mass,
            //   mass(x) = 1 + 2 sum_{j>=1} exp(-2 pi^2 sigma^2 j^2 / q^2) cos(2 pi j x / q)
            // up to a constant that normalization removes. Converges in a couple of
            // terms once sigma >= q, where the direct sum would need ~13 sigma/q terms.
            let pi = std::f64::consts::PI;
            let decay = 2.0 * pi * pi * sigma * sigma / (qf * qf);
            let j_max = (1.45 * qf / sigma).ceil() as i64 + 2;
            for (j, p) in probs.iter_mut().enumerate() {
                let x = centered(j as i64, q) as f64;
                let mut m = 1.0;
                for t in 1..=j_max {
                    let tf = t as f64;
                    m += 2.0 * (-decay * tf * tf).exp() * (2.0 * pi * tf * x / qf).cos();
                }
                *p = m;
            }
        } else {
            let k_max = (13.0 * sigma / qf).ceil() as i64 + 2;
            for (j, p) in probs.iter_mut().enumerate() {
                let x = centered(j as i64, q);
                let mut m = 0.0;
                for k in -k_max..=k_max {
                    let y = (x + k * q as i64) as f64;
                    m += rho(sigma, y * y)?;
                }
                *p = m;
            }
        }
        // Two normalization passes so the tabulated masses sum to 1 up to final rounding.
        for _ in 0..2 {
            let total = kahan_sum(&probs);
            if !(total > 0.0) {
                return Err(Error::Domain(format!(
                    "ModularGaussian: sigma={sigma}, q={q} produced zero total mass"
                )));
            }
            for p in &mut probs {
                *p /= total;
            }
        }
        Ok(Self { q, sigma, probs })
    }

    /// P[X = x mod q] for any integer x.
    pub fn pmf(&self, x: i64) -> f64 {
        self.probs[x.rem_euclid(self.q as i64) as usize]
    }

    /// (centered rep, probability) pairs in ascending rep order.
    pub fn table(&self) -> Vec<(i64, f64)> {
        let mut out: Vec<(i64, f64)> = (0..self.q as i64)
            .map(|j| (centered(j, self.q), self.pmf(j)))
            .collect();
        out.sort_by_key(|&(r, _)| r);
        out
    }

    /// Probabilities in non-increasing order, ties broken toward smaller |rep|
    /// and, within a +-pair, the positive rep first.
    pub fn ranked(&self) -> Vec<(i64, f64)> {
        let mut out = self.table();
        out.sort_by(|a, b| {
            b.1.partial_cmp(&a.1)
                .unwrap()
                .then(a.0.abs().cmp(&b.0.abs()))
                .then(b.0.cmp(&a.0))
        });
        out
    }

    /// Shannon entropy in bits.
    pub fn entropy_bits(&self) -> f64 {
        shannon_entropy(&self.probs).expect("tabulated pmf is normalized")
    }
}

fn kahan_sum(xs: &[f64]) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for &x in xs {
        let y = x - c;
        let t = s + y;
        c = (t - s) - y;
        s = t;
    }
    s
}

/// Shannon entropy in bits of a probability vector; the masses must be
/// nonnegative and sum to 1 within 1e-9.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    let mut total = 0.0;
    for &x in p {
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("shannon_entropy: invalid mass {x}")));
        }
        total += x;
    }
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "shannon_entropy: masses sum to {total}, not 1 within 1e-9"
        )));
    }
    Ok(p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum())
}

/// Shannon entropy in bits of the (unreduced) discrete Gaussian D_{Z,sigma}.
pub fn discrete_gaussian_entropy(sigma: f64) -> Result<f64> {
    let theta = theta_1d(sigma)?;
    let k_max = (13.0 * sigma).ceil() as i64 + 2;
    let mut h = 0.0;
    for k in -k_max..=k_max {
        let p = rho(sigma, (k * k) as f64)? / theta;
        if p > 0.0 {
            h -= p * p.log2();
        }
    }
    Ok(h)
}

/// Counts integer points in centered balls: N_n(ell) = #{x in Z^n : |x|^2 <= ell}.
///
/// Tables are built by the convolution recurrence
/// N_n(ell) = sum_{j^2 <= ell} N_{n-1}(ell - j^2) and memoized per dimension.
#[derive(Debug, Default)]
pub struct PointCounter {
    // tables[d-1][ell] = N_d(ell)
    tables: Vec<Vec<u64>>,
}

const POINT_COUNT_MAX_DIM: u32 = 8;
const POINT_COUNT_MAX_ELL: u64 = 1 << 32;

impl PointCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// N_n(ell) for 1 <= n <= 8. Errors on u64 overflow rather than saturating.
    pub fn count(&mut self, n: u32, ell: u64) -> Result<u64> {
        if n == 0 || n > POINT_COUNT_MAX_DIM {
            return Err(Error::Unsupported(format!(
                "point_count: dimension {n} outside 1..={POINT_COUNT_MAX_DIM}"
            )));
        }
        if ell > POINT_COUNT_MAX_ELL {
            return Err(Error::Unsupported(format!(
                "point_count: radius^2 {ell} exceeds {POINT_COUNT_MAX_ELL}"
            )));
        }
        self.ensure(n, ell)?;
        Ok(self.tables[(n - 1) as usize][ell as usize])
    }

    fn ensure(&mut self, n: u32, ell: u64) -> Result<()> {
        for d in 1..=n {
            let have = self.tables.get((d - 1) as usize).map_or(0, Vec::len);
            if have > ell as usize {
                continue;
            }
            let mut col = self
                .tables
                .get((d - 1) as usize)
                .cloned()
                .unwrap_or_default();
            for l in have as u64..=ell {
                let v = if d == 1 {
                    2 * isqrt(l) + 1
                } else {
                    let mut acc: u64 = self.tables[(d - 2) as usize][l as usize];
                    let mut j = 1u64;
                    while j * j <= l {
                        let sub = self.tables[(d - 2) as usize][(l - j * j) as usize];
                        acc = acc
                            .checked_add(2 * sub)
                            .ok_or_else(|| {
                                Error::Overflow(format!("point_count: N_{d}({l}) exceeds u64"))
                            })?;
                        j += 1;
                    }
                    acc
                };
                col.push(v);
            }
            if self.tables.len() < d as usize {
                self.tables.push(col);
            } else {
                self.tables[(d - 1) as usize] = col;
            }
        }
        Ok(())
    }
}

/// One-shot [`PointCounter::count`].
pub fn point_count(n: u32, ell: u64) -> Result<u64> {
    PointCounter::new().count(n, ell)
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    while r * r > x {
        r -= 1;
    }
    r
}

/// Standard normal CDF via erfc, accurate in both tails.
pub fn std_normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// log2 of the upper tail Q(x) = 1 - Phi(x), x >= 0: the forward companion
/// of [`inv_upper_tail_log2`], usable for round-trip checks in deep tails.
pub fn log2_upper_tail(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("log2_upper_tail: x = {x} must be >= 0")));
    }
    Ok(ln_upper_tail(x) / std::f64::consts::LN_2)
}

// ln of the upper tail Q(x) = 1 - Phi(x) for x >= 0. Switches to the
// asymptotic expansion once erfc underflows (x beyond ~36).
fn ln_upper_tail(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x <= 36.0 {
        (0.5 * libm::erfc(x / std::f64::consts::SQRT_2)).ln()
    } else {
        let x2 = x * x;
        let corr = (-1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2)).ln_1p();
        -0.5 * x2 - x.ln() - 0.5 * (2.0 * std::f64::consts::PI).ln() + corr
    }
}

// Solve Q(x) = t given ln t <= -ln 2, by Newton on ln Q. The derivative is the
// negated hazard rate, exp(ln phi - ln Q), kept in log space so deep tails
// (x in the thousands) do not underflow.
fn inv_upper_tail_ln(ln_t: f64) -> Result<f64> {
    if !(ln_t <= -std::f64::consts::LN_2) {
        return Err(Error::Domain(format!(
            "inv_upper_tail: ln t = {ln_t} must be <= -ln 2"
        )));
    }
    let l = -ln_t;
    let mut x = if l < 1.0 {
        0.2
    } else {
        let x0 = (2.0 * l).sqrt();
        (2.0 * (l - (x0 * (2.0 * std::f64::consts::PI).sqrt()).ln()))
            .max(0.04)
            .sqrt()
    };
    for _ in 0..60 {
        let g = ln_upper_tail(x) - ln_t;
        let ln_phi = -0.5 * x * x - 0.5 * (2.0 * std::f64::consts::PI).ln();
        let dg = -(ln_phi - ln_upper_tail(x)).exp();
        let step = g / dg;
        let next = (x - step).max(0.0);
        let done = (next - x).abs() <= 1e-13 * (1.0 + x);
        x = next;
        if done {
            break;
        }
    }
    Ok(x)
}

/// Inverse standard normal CDF, accurate to ~1e-12 in x.
pub fn std_normal_inv(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("std_normal_inv: p must be in (0,1), got {p}")));
    }
    if p == 0.5 {
        return Ok(0.0);
    }
    let (tail, sign) = if p < 0.5 { (p, -1.0) } else { (1.0 - p, 1.0) };
    Ok(sign * inv_upper_tail_ln(tail.ln())?)
}

/// x >= 0 with log2(1 - Phi(x)) = log2_t, for log2_t <= -1.
///
/// Takes the tail mass in log2 so thresholds like Phi^{-1}(1 - mu / (2 N p^k))
/// stay computable when N p^k is astronomically large.
pub fn inv_upper_tail_log2(log2_t: f64) -> Result<f64> {
    if !log2_t.is_finite() {
        return Err(Error::Domain(format!("inv_upper_tail_log2: log2 t = {log2_t}")));
    }
    inv_upper_tail_ln(log2_t * std::f64::consts::LN_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rho_known_values() {
        assert_eq!(rho(1.0, 0.0).unwrap(), 1.0);
        assert!((rho(1.0, 2.0).unwrap() - (-1.0f64).exp()).abs() < 1e-16);
        assert!((rho(2.0, 8.0).unwrap() - (-1.0f64).exp()).abs() < 1e-16);
        assert!(rho(-1.0, 0.0).is_err(), "negative sigma must be rejected");
    }

    #[test]
    fn theta_matches_poisson_identity() {
        // rho_1(Z) = sqrt(2 pi) (1 + 2 e^{-2 pi^2} + ...) by Poisson summation.
        let direct = rho_lattice(1.0, 1).unwrap();
        let pi = std::f64::consts::PI;
        let poisson = (2.0 * pi).sqrt() * (1.0 + 2.0 * (-2.0 * pi * pi).exp());
        assert!(
            (direct - poisson).abs() < 1e-12,
            "direct {direct} vs poisson {poisson}"
        );
        assert!((direct - 2.506628288042905).abs() < 1e-12);
    }

    #[test]
    fn rho_lattice_powers_and_overflow() {
        let t = rho_lattice(1.5, 1).unwrap();
        assert!((rho_lattice(1.5, 5).unwrap() - t.powi(5)).abs() < 1e-9);
        assert!(matches!(rho_lattice(100.0, 200), Err(Error::Overflow(_))));
        let lg = log2_rho_lattice(100.0, 200).unwrap();
        assert!((lg - 200.0 * rho_lattice(100.0, 1).unwrap().log2()).abs() < 1e-9);
    }

    #[test]
    fn centered_reps() {
        assert_eq!(centered(0, 7), 0);
        assert_eq!(centered(3, 7), 3);
        assert_eq!(centered(4, 7), -3);
        assert_eq!(centered(-1, 7), -1);
        assert_eq!(centered(10, 7), 3);
        // Even q: class q/2 lifts to -q/2, so reps cover [-2, 1] for q = 4.
        assert_eq!(centered(2, 4), -2);
        assert_eq!(centered(3, 4), -1);
        assert_eq!(centered(1, 4), 1);
    }

    // Independent oracle: wrapped mass by a wide direct double loop, no shared code.
    fn modular_oracle(sigma: f64, q: u32) -> Vec<f64> {
        let mut m = vec![0.0f64; q as usize];
        for j in -210i64..=210 {
            let w = (-(j * j) as f64 / (2.0 * sigma * sigma)).exp();
            m[j.rem_euclid(q as i64) as usize] += w;
        }
        let s: f64 = m.iter().sum();
        m.iter().map(|x| x / s).collect()
    }

    #[test]
    fn modular_pmf_matches_oracle() {
        for &(sigma, q) in &[(1.0, 7u32), (2.5, 11), (0.5, 4), (3.0, 12)] {
            let mg = ModularGaussian::new(sigma, q).unwrap();
            let oracle = modular_oracle(sigma, q);
            for j in 0..q {
                assert!(
                    (mg.pmf(j as i64) - oracle[j as usize]).abs() < 1e-14,
                    "sigma={sigma} q={q} j={j}: {} vs oracle {}",
                    mg.pmf(j as i64),
                    oracle[j as usize]
                );
            }
        }
    }

    #[test]
    fn modular_pmf_flat_limit() {
        // sigma >> q wraps to uniform; exercises the Poisson branch.
        let mg = ModularGaussian::new(1e6, 3).unwrap();
        for j in 0..3 {
            assert!((mg.pmf(j) - 1.0 / 3.0).abs() < 1e-8, "pmf({j}) = {}", mg.pmf(j));
        }
    }

    #[test]
    fn modular_ranked_order() {
        let mg = ModularGaussian::new(1.0, 7).unwrap();
        let ranked = mg.ranked();
        assert_eq!(ranked[0].0, 0);
        assert_eq!(ranked[1].0, 1, "positive rep first within a tie pair");
        assert_eq!(ranked[2].0, -1);
        let probs: Vec<f64> = ranked.iter().map(|r| r.1).collect();
        assert!(probs.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn entropy_values() {
        let uniform = vec![0.125f64; 8];
        assert!((shannon_entropy(&uniform).unwrap() - 3.0).abs() < 1e-12);
        assert!(shannon_entropy(&[0.3, 0.3]).is_err(), "unnormalized input must fail");
        // 1-D entropy oracle: direct sum over the same convention.
        let sigma = 1.7;
        let theta: f64 = (-60..=60i64)
            .map(|k| (-(k * k) as f64 / (2.0 * sigma * sigma)).exp())
            .sum();
        let h_oracle: f64 = (-60..=60i64)
            .map(|k| {
                let p = (-(k * k) as f64 / (2.0 * sigma * sigma)).exp() / theta;
                -p * p.log2()
            })
            .sum();
        assert!((discrete_gaussian_entropy(sigma).unwrap() - h_oracle).abs() < 1e-12);
    }

    #[test]
    fn point_count_small_dims() {
        assert_eq!(point_count(1, 4).unwrap(), 5);
        assert_eq!(point_count(2, 2).unwrap(), 9);
        assert_eq!(point_count(3, 2).unwrap(), 19);
        assert_eq!(point_count(3, 0).unwrap(), 1);
        assert!(point_count(9, 4).is_err(), "dimension cap is 8");
    }

    #[test]
    fn point_count_matches_brute_force_dim4() {
        let ell = 9i64;
        let mut brute = 0u64;
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    for d in -3i64..=3 {
                        if a * a + b * b + c * c + d * d <= ell {
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(point_count(4, ell as u64).unwrap(), brute);
    }

    #[test]
    fn point_counter_memoizes_across_queries() {
        let mut pc = PointCounter::new();
        let a = pc.count(8, 50).unwrap();
        let b = pc.count(8, 200).unwrap();
        assert_eq!(a, pc.count(8, 50).unwrap());
        assert!(b > a);
        assert_eq!(b, point_count(8, 200).unwrap());
    }

    #[test]
    fn normal_cdf_and_inverse() {
        assert_eq!(std_normal_cdf(0.0), 0.5);
        assert!((std_normal_cdf(1.959963984540054) - 0.975).abs() < 1e-12);
        assert!((std_normal_inv(0.975).unwrap() - 1.959963984540054).abs() < 1e-10);
        assert!((std_normal_inv(0.025).unwrap() + 1.959963984540054).abs() < 1e-10);
        assert!(std_normal_inv(0.0).is_err());
        assert!(std_normal_inv(1.0).is_err());
    }

    #[test]
    fn inverse_tail_deep() {
        // Round-trip at log2 t = -400: x ~ 23.3, far past double-precision CDFs
        // built by subtraction but fine for the erfc route.
        let x = inv_upper_tail_log2(-400.0).unwrap();
        let back = ln_upper_tail(x) / std::f64::consts::LN_2;
        assert!((back + 400.0).abs() < 1e-8, "x={x} gives log2 tail {back}");
        // And at -1e6, deep in the asymptotic branch.
        let x = inv_upper_tail_log2(-1e6).unwrap();
        let back = ln_upper_tail(x) / std::f64::consts::LN_2;
        assert!(((back + 1e6) / 1e6).abs() < 1e-10, "x={x} gives log2 tail {back}");
        assert_eq!(inv_upper_tail_log2(-1.0).unwrap(), 0.0);
    }

    proptest! {
        #[test]
        fn prop_modular_pmf_normalized_and_symmetric(
            sigma in 0.05f64..50.0,
            q in 2u32..64,
        ) {
            let mg = ModularGaussian::new(sigma, q).unwrap();
            let total: f64 = (0..q as i64).map(|j| mg.pmf(j)).sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
            for j in 0..q as i64 {
                prop_assert!((mg.pmf(j) - mg.pmf(-j)).abs() < 1e-15);
            }
        }

        #[test]
        fn prop_rho_lattice_sandwich(sigma in 0.2f64..8.0, n in 1u32..6) {
            let v = rho_lattice(sigma, n).unwrap();
            let base = (sigma * (2.0 * std::f64::consts::PI).sqrt()).powi(n as i32);
            let coth = 1.0 / (std::f64::consts::PI.powi(2) * sigma * sigma).tanh();
            prop_assert!(v >= base * (1.0 - 1e-12));
            prop_assert!(v <= base * coth.powi(n as i32) * (1.0 + 1e-12));
        }

        #[test]
        fn prop_normal_inv_round_trip(p in 1e-9f64..0.9999) {
            let x = std_normal_inv(p).unwrap();
            prop_assert!((std_normal_cdf(x) - p).abs() < 1e-11);
        }

        #[test]
        fn prop_point_count_monotone(ell in 0u64..400, n in 1u32..6) {
            let a = point_count(n, ell).unwrap();
            let b = point_count(n, ell + 1).unwrap();
            prop_assert!(b >= a);
            if n > 1 {
                prop_assert!(point_count(n - 1, ell).unwrap() <= a);
            }
        }
    }
}
