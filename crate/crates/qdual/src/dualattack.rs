//! The cost estimator: distinguisher sample counts and thresholds, the
//! quantum attack cost, a MATZOV-style classical baseline, and a
//! deterministic grid optimizer over the attack parameters.
//!
//! Everything here works in base-2 logarithms. Linear-space values are only
//! formed where they provably fit in an f64 (the short-vector length, the
//! d_arg factor, the normal quantiles).

use std::collections::HashMap;
use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::costmodels::{
    bkz_cost, delta_beta, expected_short_length, gaussian_heuristic_log2, n_sieve, sieve_cost,
    CostModel, BETA_FLOOR,
};
use crate::error::{Error, Result};
use crate::gaussian::{inv_upper_tail_log2, rho, rho_lattice};
use crate::guessing::{entropy_relative_bounds, exact_gaussian_guessing};

/// log2(2^a + 2^b) without leaving log space.
pub fn lse2(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp2().ln_1p() / LN_2
}

/// The LWE instance being attacked. `alpha` is always derived, never stored.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LweParameters {
    pub n: u32,
    pub m: u32,
    pub q: u64,
    pub sigma_s: f64,
    pub sigma_e: f64,
}

impl LweParameters {
    /// Normalisation factor between error and secret widths.
    pub fn alpha(&self) -> f64 {
        self.sigma_e / self.sigma_s
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::Domain(format!("n = {}, m = {} must be >= 1", self.n, self.m)));
        }
        if self.q < 2 {
            return Err(Error::Domain(format!("q = {} must be >= 2", self.q)));
        }
        if !(self.sigma_s > 0.0) || !(self.sigma_e > 0.0) {
            return Err(Error::Domain(format!(
                "widths must be positive: sigma_s = {}, sigma_e = {}",
                self.sigma_s, self.sigma_e
            )));
        }
        Ok(())
    }
}

/// One parameter point of the attack. The secret splits as
/// k_enum + k_fft + k_lat = n, and the dual lattice has dimension
/// d = m + k_lat.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AttackParameters {
    pub beta0: u32,
    pub beta1: u32,
    pub k_enum: u32,
    pub k_fft: u32,
    pub k_lat: u32,
    pub p: u64,
    pub mu: f64,
    pub nu: f64,
    pub eta: f64,
}

impl AttackParameters {
    /// Builds a point from the overall failure budget nu, with mu = nu/2.
    /// eta starts at 1 and is tightened to the Lemma-5 bound by the cost
    /// routines once phi_fp is known.
    pub fn with_nu(
        beta0: u32,
        beta1: u32,
        k_enum: u32,
        k_fft: u32,
        k_lat: u32,
        p: u64,
        nu: f64,
    ) -> Self {
        AttackParameters { beta0, beta1, k_enum, k_fft, k_lat, p, mu: nu / 2.0, nu, eta: 1.0 }
    }

    pub fn d(&self, lwe: &LweParameters) -> u32 {
        lwe.m + self.k_lat
    }

    pub fn validate(&self, lwe: &LweParameters) -> Result<()> {
        if self.k_enum + self.k_fft + self.k_lat != lwe.n {
            return Err(Error::Domain(format!(
                "k_enum + k_fft + k_lat = {} but n = {}",
                self.k_enum + self.k_fft + self.k_lat,
                lwe.n
            )));
        }
        let d = self.d(lwe);
        if self.beta0 < 2 || self.beta0 > d || self.beta1 < 2 || self.beta1 > d {
            return Err(Error::Domain(format!(
                "block sizes beta0 = {}, beta1 = {} outside 2..=d = {}",
                self.beta0, self.beta1, d
            )));
        }
        if self.p < 2 {
            return Err(Error::Domain(format!("p = {} is a degenerate FFT modulus", self.p)));
        }
        if self.p > lwe.q {
            return Err(Error::Domain(format!("p = {} exceeds q = {}", self.p, lwe.q)));
        }
        if !(self.mu > 0.0 && self.mu < 1.0) || !(self.nu > 0.0 && self.nu < 1.0) {
            return Err(Error::Domain(format!("mu = {}, nu = {} must lie in (0,1)", self.mu, self.nu)));
        }
        if !(self.eta > 0.0 && self.eta <= 1.0) {
            return Err(Error::Domain(format!("eta = {} must lie in (0,1]", self.eta)));
        }
        Ok(())
    }
}

/// The four sample-count factors and the two quantiles behind them.
///
/// d_eq, d_round and d_fpfn are stored as base-2 logs because d_eq alone
/// overflows f64 for bad grid cells; linear accessors are provided for the
/// desk-scale regime. d_arg is bounded in (1/2, 3/2] and stays linear.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DistinguisherTerms {
    pub d_eq_log2: f64,
    pub d_round_log2: f64,
    pub d_arg: f64,
    pub d_fpfn_log2: f64,
    pub phi_fp: f64,
    pub phi_fn: f64,
    pub tau_sq: f64,
    /// log2 of the expected 1-based rank of the true s_enum (the number of
    /// statistical tests the false-positive budget is split over).
    pub n_enum_log2: f64,
    /// log2 of the per-test false-positive tail mu / (2 N_enum p^k_fft).
    pub fp_tail_log2: f64,
}

impl DistinguisherTerms {
    pub fn d_eq(&self) -> f64 {
        self.d_eq_log2.exp2()
    }
    pub fn d_round(&self) -> f64 {
        self.d_round_log2.exp2()
    }
    pub fn d_fpfn(&self) -> f64 {
        self.d_fpfn_log2.exp2()
    }
}

/// log2 of the expected 1-based classical and quantum guess counts for
/// k_enum coordinates of width sigma_s: (log2(G+1), log2(G_qc+1)).
///
/// k_enum = 0 contributes a single (empty) guess. For 1..=3 coordinates the
/// exact shell sums are used; the relative-entropy bounds take over at
/// k_enum >= 4 where their derivation is valid and the shell enumeration
/// would not scale anyway. The bounds dominate the exact values, so the seam
/// only ever under-prices tiny k_enum, never over-prices it.
fn expected_guess_counts_log2(sigma_s: f64, k_enum: u32) -> Result<(f64, f64)> {
    if k_enum == 0 {
        return Ok((0.0, 0.0));
    }
    if k_enum <= 3 {
        let (g, gqc) = exact_gaussian_guessing(sigma_s, k_enum)?;
        Ok(((g + 1.0).log2(), (gqc + 1.0).log2()))
    } else {
        let (g_log2, gqc_log2) = entropy_relative_bounds(sigma_s, k_enum)?;
        Ok((lse2(g_log2, 0.0), lse2(gqc_log2, 0.0)))
    }
}

/// Mass below which a secret value is dropped from the rounding-loss support.
const ROUND_SUPPORT_CUTOFF: f64 = 1e-15;

/// Per-coordinate averaged rounding loss in bits: -2 log2 E_s[sinc(pi s/p)],
/// the mean taken over the secret's value distribution with s unreduced.
///
/// Averaging the attenuation before squaring (rather than averaging the
/// squared loss, or taking a product over residue classes) is the convention
/// of the averaged distinguisher: the correct-guess score is a sum over
/// coordinates whose expected shrinkage per coordinate is E[sinc], so the
/// sample count grows by its inverse square. It also keeps every p >= 2
/// finite for the Gaussian surrogate law, since a value on a multiple of p
/// contributes sinc = 0 to the mean instead of a zero factor to a product.
/// The fixed-instance form below keeps per-value semantics, where a
/// coordinate on a multiple of p really does lose its signal.
fn round_loss_per_coord_log2(sigma_s: f64, p: u64) -> Result<f64> {
    if p < 2 {
        return Err(Error::Domain(format!("p = {p} is a degenerate FFT modulus")));
    }
    // sinc(pi s/p) is the Fourier attenuation of the uniform rounding error
    // on a coordinate holding secret value s; the averaged correct-guess
    // score therefore shrinks by E[sinc] per coordinate and the sample count
    // grows by its inverse square. The mean is over values, not residues:
    // s at a nonzero multiple of p cancels completely (sinc = 0) and pulls
    // the mean down rather than blowing up a product, which keeps every
    // p >= 2 finite for the Gaussian surrogate law.
    let total = rho_lattice(sigma_s, 1)?;
    let smax = (13.0 * sigma_s).ceil() as u64 + 2;
    let mut mean = 1.0 / total; // s = 0: chi(0) * sinc(0)
    for sbar in 1..=smax {
        let chi = rho(sigma_s, (sbar * sbar) as f64)? / total;
        if chi < ROUND_SUPPORT_CUTOFF {
            break; // chi is decreasing in |sbar|
        }
        let x = PI * sbar as f64 / p as f64;
        // both signs +-sbar carry mass chi each
        mean += 2.0 * chi * (x.sin() / x);
    }
    if !(mean > 0.0) {
        return Err(Error::Infeasible(format!(
            "E[sinc(pi s/p)] = {mean} at sigma_s = {sigma_s}, p = {p}: \
             the rounded FFT table retains no usable signal"
        )));
    }
    Ok(-2.0 * mean.log2())
}

/// Shared assembly of the four factors once tau^2, the rounding loss, and the
/// enumeration count are known. `averaged` adds the extra mu factor of the
/// averaged false-positive/false-negative term.
fn assemble_with_phi(
    q: f64,
    mu: f64,
    tau_sq: f64,
    d_round_log2: f64,
    n_enum_log2: f64,
    fp_tail_log2: f64,
    phi_fp: f64,
    phi_fn: f64,
    averaged: bool,
) -> DistinguisherTerms {
    let x = PI * PI * tau_sq / (q * q); // (pi tau / q)^2
    let d_eq_log2 = 4.0 * x / LN_2;
    let d_arg = 0.5 + (-8.0 * x).exp();
    let d_fpfn_log2 =
        2.0 * (phi_fp + phi_fn).log2() + if averaged { mu.log2() } else { 0.0 };
    DistinguisherTerms {
        d_eq_log2,
        d_round_log2,
        d_arg,
        d_fpfn_log2,
        phi_fp,
        phi_fn,
        tau_sq,
        n_enum_log2,
        fp_tail_log2,
    }
}

fn phi_quantiles(mu: f64, n_enum_log2: f64, k_fft: u32, p: f64) -> Result<(f64, f64, f64)> {
    let fp_tail_log2 = mu.log2() - 1.0 - n_enum_log2 - k_fft as f64 * p.log2();
    let phi_fp = inv_upper_tail_log2(fp_tail_log2)?;
    let phi_fn = inv_upper_tail_log2(mu.log2() - 1.0)?;
    Ok((fp_tail_log2, phi_fp, phi_fn))
}

/// Distinguisher factors at expected instance statistics.
///
/// averaged=true is the averaged-over-(s,e) form: tau^2 = (sigma_s ell)^2,
/// the rounding loss is the chi_s-weighted product, N_enum is the expected
/// guess rank, and the fp/fn term carries the extra mu factor. averaged=false
/// evaluates the fixed-instance formulas at the same expected statistics
/// (E||e||^2 = m sigma_e^2, E||s_lat||^2 = k_lat sigma_s^2, expected rank),
/// which drops only the mu factor. For genuinely fixed instances see
/// [`distinguisher_terms_fixed`].
pub fn distinguisher_terms(
    lwe: &LweParameters,
    ap: &AttackParameters,
    ell: f64,
    averaged: bool,
) -> Result<DistinguisherTerms> {
    lwe.validate()?;
    ap.validate(lwe)?;
    if !(ell > 0.0) {
        return Err(Error::Domain(format!("ell = {ell} must be positive")));
    }
    // E[alpha^-2 ||e||^2 + ||s_lat||^2] = sigma_s^2 (m + k_lat), so the
    // expected tau^2 is (sigma_s ell)^2 in both forms.
    let tau_sq = (lwe.sigma_s * ell) * (lwe.sigma_s * ell);
    let d_round_log2 = if ap.k_fft == 0 {
        0.0
    } else {
        ap.k_fft as f64 * round_loss_per_coord_log2(lwe.sigma_s, ap.p)?
    };
    let (g1_log2, _) = expected_guess_counts_log2(lwe.sigma_s, ap.k_enum)?;
    let (fp_tail_log2, phi_fp, phi_fn) = phi_quantiles(ap.mu, g1_log2, ap.k_fft, ap.p as f64)?;
    Ok(assemble_with_phi(
        lwe.q as f64,
        ap.mu,
        tau_sq,
        d_round_log2,
        g1_log2,
        fp_tail_log2,
        phi_fp,
        phi_fn,
        averaged,
    ))
}

/// Actual instance data for the fixed-secret form of the distinguisher
/// factors, used by the simulator against sampled (s, e).
#[derive(Debug, Clone)]
pub struct FixedInstance {
    pub e_norm_sq: f64,
    pub s_lat_norm_sq: f64,
    /// The k_fft secret coordinates as unreduced centered values.
    pub s_fft: Vec<i64>,
    /// 1-based rank of the true s_enum in the enumeration order.
    pub n_enum_rank: f64,
}

/// Fixed-instance distinguisher factors (no mu factor, exact tau^2 and
/// rounding loss for the given secret).
pub fn distinguisher_terms_fixed(
    lwe: &LweParameters,
    ap: &AttackParameters,
    ell: f64,
    inst: &FixedInstance,
) -> Result<DistinguisherTerms> {
    lwe.validate()?;
    ap.validate(lwe)?;
    if !(ell > 0.0) {
        return Err(Error::Domain(format!("ell = {ell} must be positive")));
    }
    if inst.s_fft.len() != ap.k_fft as usize {
        return Err(Error::Domain(format!(
            "s_fft has {} coordinates, k_fft = {}",
            inst.s_fft.len(),
            ap.k_fft
        )));
    }
    if !(inst.n_enum_rank >= 1.0) {
        return Err(Error::Domain(format!("rank {} must be >= 1", inst.n_enum_rank)));
    }
    let alpha = lwe.alpha();
    let d = ap.d(lwe) as f64;
    let tau_sq = (inst.e_norm_sq / (alpha * alpha) + inst.s_lat_norm_sq) / d * (ell * ell);
    let mut d_round_log2 = 0.0;
    for &s in &inst.s_fft {
        if s == 0 {
            continue;
        }
        if s.unsigned_abs() % ap.p == 0 {
            return Err(Error::Infeasible(format!(
                "secret coordinate {s} is a nonzero multiple of p = {}; its rounding \
                 loss is infinite",
                ap.p
            )));
        }
        let x = PI * s as f64 / ap.p as f64;
        d_round_log2 -= (x.sin() / x).powi(2).log2();
    }
    let n_enum_log2 = inst.n_enum_rank.log2();
    let (fp_tail_log2, phi_fp, phi_fn) = phi_quantiles(ap.mu, n_enum_log2, ap.k_fft, ap.p as f64)?;
    Ok(assemble_with_phi(
        lwe.q as f64,
        ap.mu,
        tau_sq,
        d_round_log2,
        n_enum_log2,
        fp_tail_log2,
        phi_fp,
        phi_fn,
        false,
    ))
}

/// log2 of the required sample count D = D_eq * D_round * D_arg * D_fpfn.
pub fn required_samples(terms: &DistinguisherTerms) -> f64 {
    terms.d_eq_log2 + terms.d_round_log2 + terms.d_arg.log2() + terms.d_fpfn_log2
}

/// Acceptance threshold C = phi_fp * sqrt(D_arg * D), in both forms.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Threshold {
    pub linear: f64,
    pub log2: f64,
}

pub fn threshold_c(terms: &DistinguisherTerms, d_log2: f64) -> Threshold {
    let log2 = terms.phi_fp.log2() + 0.5 * (terms.d_arg.log2() + d_log2);
    Threshold { linear: log2.exp2(), log2 }
}

/// Expected score of the correct guess, log2(D / sqrt(D_eq * D_round)).
/// When D equals the required_samples product exactly (averaged=false), this
/// is C + phi_fn * sqrt(D_arg * D): the threshold plus the fn margin.
pub fn correct_mean_log2(terms: &DistinguisherTerms, d_log2: f64) -> f64 {
    d_log2 - 0.5 * (terms.d_eq_log2 + terms.d_round_log2)
}

/// Largest permissible amplitude-estimation failure rate,
/// eta <= sqrt(2 pi) mu / (8 phi_fp).
pub fn eta_max(terms: &DistinguisherTerms, mu: f64) -> Result<f64> {
    if !(terms.phi_fp > 0.0) {
        return Err(Error::Domain(format!("phi_fp = {} must be positive", terms.phi_fp)));
    }
    Ok((2.0 * PI).sqrt() * mu / (8.0 * terms.phi_fp))
}

/// log2 det of the scaled dual basis [[alpha I_m, 0], [A_lat^T, q I_k_lat]]:
/// m log2 alpha + k_lat log2 q.
pub fn volume_log2(lwe: &LweParameters, k_lat: u32) -> f64 {
    lwe.m as f64 * lwe.alpha().log2() + k_lat as f64 * (lwe.q as f64).log2()
}

/// A fully-priced parameter point. `m` records the sample count actually
/// used (it differs from the budget only under the optimize-m flag).
#[derive(Debug, Clone, Serialize)]
pub struct CostEstimate {
    pub total_log2: f64,
    pub reduction_log2: f64,
    pub search_log2: f64,
    #[serde(rename = "D_log2")]
    pub d_log2: f64,
    #[serde(rename = "C_log2")]
    pub c_log2: f64,
    pub ell: f64,
    pub m: u32,
    pub params: AttackParameters,
    pub model: String,
}

/// Cost of filling one table entry from one dual sample, log2 units, in the
/// unit-cost convention (1 operation per sample).
pub const K_FILL_LOG2: f64 = 0.0;

/// Shape of the per-guess FFT cost in the classical attack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FftCostForm {
    /// k_fft * p^k_fft * log2(p) operations: textbook N log N on the table.
    Unit,
    /// gates * k_fft * p^(k_fft + 1): the [Matzov22] circuit accounting
    /// (their Section 5 prices the FFT with C_mul = 32^2 gate multipliers
    /// and an extra factor p from the word width).
    Gates { mul_log2: f64 },
}

/// Per-guess constants of the classical search term. The reference attack
/// defers these to [Matzov22]; they are configuration, not physics, and the
/// defaults are the values that reproduce the published cost table:
/// table updates cost 4 * C_add = 4 * 5 * 32 = 640 gates per sample and the
/// FFT uses the gate form above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConvention {
    pub fill_log2: f64,
    pub fft: FftCostForm,
    /// Extra log2 bits added to the required sample count D (calibration knob).
    pub d_extra_log2: f64,
    /// Multiplier on the modelled dual-vector length. The default is
    /// (4/3)^(1/4): sieve output vectors are up to sqrt(4/3) longer than the
    /// Gaussian heuristic predicts and the published estimates price the
    /// distinguisher with a length between the mean and that cap. The value
    /// here is the one that reproduces the published table; see README.
    pub ell_factor: f64,
    /// Additive log2 term on the quantum search cost. Amplitude estimation
    /// needs about pi/eps oracle calls for additive error eps [BHMT02], a
    /// constant the bare query-count display drops; log2(pi) recovers it.
    pub tw_search_extra_log2: f64,
}

impl Default for SearchConvention {
    fn default() -> Self {
        SearchConvention {
            fill_log2: 640f64.log2(),
            fft: FftCostForm::Gates { mul_log2: 10.0 },
            d_extra_log2: 0.0,
            ell_factor: (4.0f64 / 3.0).powf(0.25),
            tw_search_extra_log2: std::f64::consts::PI.log2(),
        }
    }
}

impl SearchConvention {
    /// The 1-operation-per-sample, N log N convention with no calibration
    /// terms: lengths straight from the reduction model, searches priced as
    /// bare operation counts. This is the convention the worked examples and
    /// the desk-scale oracles use.
    pub fn unit() -> Self {
        SearchConvention {
            fill_log2: K_FILL_LOG2,
            fft: FftCostForm::Unit,
            d_extra_log2: 0.0,
            ell_factor: 1.0,
            tw_search_extra_log2: 0.0,
        }
    }

    /// Query-model pricing: table fills and FFT butterflies count one each,
    /// with the calibration terms kept. The naive-sieve columns (CN, QN,
    /// TW_QN) are defined in this convention.
    pub fn query() -> Self {
        SearchConvention { fill_log2: 0.0, fft: FftCostForm::Unit, ..Self::default() }
    }

    /// The convention each named cost model is defined under: gate-counted
    /// searches for the MATZOV-style gate model and the Core-SVP columns,
    /// query counting for the naive-sieve columns.
    pub fn for_model(model: &CostModel) -> Self {
        match model.name.as_str() {
            "CN" | "QN" | "TW_QN" => Self::query(),
            _ => Self::default(),
        }
    }

    /// log2 cost of one FFT over the k_fft-dimensional table mod p;
    /// -inf when k_fft = 0 (no FFT stage at all).
    pub fn fft_log2(&self, k_fft: u32, p: u64) -> f64 {
        if k_fft == 0 {
            return f64::NEG_INFINITY;
        }
        let k = k_fft as f64;
        let lp = (p as f64).log2();
        match self.fft {
            FftCostForm::Unit => k * lp + (k * lp).log2(),
            FftCostForm::Gates { mul_log2 } => mul_log2 + k.log2() + (k + 1.0) * lp,
        }
    }
}

fn cost_impl(lwe: &LweParameters, ap: &AttackParameters, model: &CostModel) -> Result<CostEstimate> {
    cost_impl_with(lwe, ap, model, &SearchConvention::default())
}

fn cost_impl_with(
    lwe: &LweParameters,
    ap: &AttackParameters,
    model: &CostModel,
    conv: &SearchConvention,
) -> Result<CostEstimate> {
    lwe.validate()?;
    ap.validate(lwe)?;
    let d = ap.d(lwe);
    let vol = volume_log2(lwe, ap.k_lat);
    let ell = expected_short_length(d, ap.beta0, ap.beta1, vol)? * conv.ell_factor;
    let terms = distinguisher_terms(lwe, ap, ell, true)?;
    let d_log2 = required_samples(&terms) + conv.d_extra_log2;
    let c_log2 = threshold_c(&terms, d_log2).log2;
    let repeats_log2 = (d_log2 - n_sieve(ap.beta1, model)?).max(0.0);
    let reduction_log2 =
        repeats_log2 + lse2(bkz_cost(d, ap.beta0, model)?, sieve_cost(ap.beta1, model).log2);
    let (g1_log2, gqc1_log2) = expected_guess_counts_log2(lwe.sigma_s, ap.k_enum)?;
    let search_log2 = if model.is_this_work() {
        gqc1_log2
            + ap.k_fft as f64 * 0.5 * (ap.p as f64).log2()
            + 0.5 * d_log2
            + conv.tw_search_extra_log2
    } else {
        g1_log2 + lse2(d_log2 + conv.fill_log2, conv.fft_log2(ap.k_fft, ap.p))
    };
    let total_log2 = lse2(reduction_log2, search_log2);
    let mut params = *ap;
    params.eta = eta_max(&terms, ap.mu)?.min(1.0);
    let est = CostEstimate {
        total_log2,
        reduction_log2,
        search_log2,
        d_log2,
        c_log2,
        ell,
        m: lwe.m,
        params,
        model: model.name.clone(),
    };
    for (name, v) in [
        ("total", est.total_log2),
        ("reduction", est.reduction_log2),
        ("search", est.search_log2),
        ("D", est.d_log2),
        ("C", est.c_log2),
        ("ell", est.ell),
    ] {
        if !v.is_finite() {
            return Err(Error::Domain(format!("{name} is not finite at this parameter point")));
        }
    }
    Ok(est)
}

/// Cost of the quantum-augmented attack at a fixed parameter point. Requires
/// one of the this-work models (TW_QN, TW_Q0).
pub fn quantum_attack_cost(
    lwe: &LweParameters,
    ap: &AttackParameters,
    model: &CostModel,
) -> Result<CostEstimate> {
    if !model.is_this_work() {
        return Err(Error::Config(format!(
            "quantum_attack_cost prices the this-work algorithm; got model {}",
            model.name
        )));
    }
    cost_impl(lwe, ap, model)
}

/// MATZOV-style classical attack cost. Accepts any non-this-work model:
/// CC, CN, C0 and also QN, Q0 (quantum sieve inside the classical attack).
pub fn classical_attack_cost(
    lwe: &LweParameters,
    ap: &AttackParameters,
    model: &CostModel,
) -> Result<CostEstimate> {
    if model.is_this_work() {
        return Err(Error::Config(format!(
            "classical_attack_cost prices the reference attack; got this-work model {}",
            model.name
        )));
    }
    cost_impl(lwe, ap, model)
}

/// Dispatch on the model family.
pub fn attack_cost(
    lwe: &LweParameters,
    ap: &AttackParameters,
    model: &CostModel,
) -> Result<CostEstimate> {
    cost_impl(lwe, ap, model)
}

/// Grid-search configuration. The defaults implement the documented search:
/// coarse steps of 8 in beta1 (and beta0), 4 in k_enum and k_fft,
/// p in {2..12} u {q}, beta0 within a +-40 window of beta1, followed by
/// step-1 refinement around the best coarse cells.
#[derive(Debug, Clone)]
pub struct OptimizerOptions {
    pub beta1_step: u32,
    pub k_enum_step: u32,
    pub k_fft_step: u32,
    pub beta0_window: u32,
    /// Empty means {2..=12} plus q.
    pub p_candidates: Vec<u64>,
    /// Search over m in multiples of m_step up to lwe.m instead of fixing m.
    pub optimize_m: bool,
    pub m_step: u32,
    /// How many distinct coarse cells get step-1 refinement.
    pub refine_top: usize,
    /// Per-guess constants of the classical search term.
    pub convention: SearchConvention,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        OptimizerOptions {
            beta1_step: 8,
            k_enum_step: 4,
            k_fft_step: 4,
            beta0_window: 40,
            p_candidates: Vec::new(),
            optimize_m: false,
            m_step: 16,
            refine_top: 4,
            convention: SearchConvention::default(),
        }
    }
}

/// Identifies one grid cell; the tuple order (beta0, beta1, k_enum, k_fft, p,
/// m) is the lexicographic tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Cell {
    beta0: u32,
    beta1: u32,
    k_enum: u32,
    k_fft: u32,
    p: u64,
    m: u32,
}

struct SearchState<'a> {
    lwe: &'a LweParameters,
    model: &'a CostModel,
    convention: SearchConvention,
    mu: f64,
    phi_fn: f64,
    /// Conservative log2 lower bound on D, used for loop pruning.
    d_floor_log2: f64,
    /// log2 delta(beta) and GH(beta) caches indexed by beta.
    log2_delta: Vec<f64>,
    gh_log2: Vec<f64>,
    sieve_log2: Vec<f64>,
    nsieve: Vec<f64>,
    guesses: HashMap<u32, (f64, f64)>,
    round_loss: HashMap<u64, f64>,
    /// phi_fp and its tail, keyed by (k_enum, k_fft, p): the quantile is the
    /// only Newton solve in the cell evaluation and depends on nothing else.
    phi_cache: HashMap<(u32, u32, u64), (f64, f64)>,
    best: Option<(f64, Cell)>,
    /// Best total per coarse (k_enum, k_fft) block, for refinement seeds.
    block_best: HashMap<(u32, u32), (f64, Cell)>,
}

impl<'a> SearchState<'a> {
    fn new(
        lwe: &'a LweParameters,
        model: &'a CostModel,
        convention: SearchConvention,
        mu: f64,
    ) -> Result<Self> {
        let d_max = (lwe.m + lwe.n) as usize;
        let mut log2_delta = vec![f64::NAN; d_max + 1];
        let mut gh_log2 = vec![f64::NAN; d_max + 1];
        let mut sieve_log2 = vec![f64::NAN; d_max + 1];
        let mut nsieve = vec![f64::NAN; d_max + 1];
        for beta in BETA_FLOOR as usize..=d_max {
            log2_delta[beta] = delta_beta(beta as u32)?.log2();
            gh_log2[beta] = gaussian_heuristic_log2(beta as u32)?;
            sieve_log2[beta] = sieve_cost(beta as u32, model).log2;
            nsieve[beta] = n_sieve(beta as u32, model)?;
        }
        let phi_fn = inv_upper_tail_log2(mu.log2() - 1.0)?;
        // D >= D_arg * D_fpfn >= (1/2) (2 phi_fn)^2 mu since phi_fp >= phi_fn
        let d_floor_log2 = (2.0 * (2.0 * phi_fn).log2() + mu.log2() - 1.0).min(0.0);
        Ok(SearchState {
            lwe,
            model,
            convention,
            mu,
            phi_fn,
            d_floor_log2,
            log2_delta,
            gh_log2,
            sieve_log2,
            nsieve,
            guesses: HashMap::new(),
            round_loss: HashMap::new(),
            phi_cache: HashMap::new(),
            best: None,
            block_best: HashMap::new(),
        })
    }

    fn best_total(&self) -> f64 {
        self.best.map(|(t, _)| t).unwrap_or(f64::INFINITY)
    }

    fn guess_counts(&mut self, k_enum: u32) -> Result<(f64, f64)> {
        if let Some(&g) = self.guesses.get(&k_enum) {
            return Ok(g);
        }
        let g = expected_guess_counts_log2(self.lwe.sigma_s, k_enum)?;
        self.guesses.insert(k_enum, g);
        Ok(g)
    }

    fn round_loss(&mut self, p: u64) -> Result<f64> {
        if let Some(&l) = self.round_loss.get(&p) {
            return Ok(l);
        }
        let l = round_loss_per_coord_log2(self.lwe.sigma_s, p)?;
        self.round_loss.insert(p, l);
        Ok(l)
    }

    /// Evaluates one cell; updates best/block_best. Infeasible cells are
    /// skipped silently (they are priced, not errors, during search).
    fn visit(&mut self, cell: Cell, track_blocks: bool) -> Result<()> {
        let n = self.lwe.n;
        let k_lat = n - cell.k_enum - cell.k_fft;
        let d = cell.m + k_lat;
        if cell.beta0 < BETA_FLOOR || cell.beta1 < BETA_FLOOR || cell.beta0 > d || cell.beta1 > d {
            return Ok(());
        }
        if cell.p < 2 || cell.p > self.lwe.q {
            return Ok(());
        }
        let tw = self.model.is_this_work();
        let (g1, gqc1) = self.guess_counts(cell.k_enum)?;
        let d_round_log2 = if cell.k_fft == 0 {
            0.0
        } else {
            cell.k_fft as f64 * self.round_loss(cell.p)?
        };
        let key = (cell.k_enum, cell.k_fft, cell.p);
        let (fp_tail_log2, phi_fp) = match self.phi_cache.get(&key) {
            Some(&v) => v,
            None => {
                let (tail, fp, fnq) = phi_quantiles(self.mu, g1, cell.k_fft, cell.p as f64)?;
                debug_assert_eq!(fnq, self.phi_fn);
                self.phi_cache.insert(key, (tail, fp));
                (tail, fp)
            }
        };
        let phi_fn = self.phi_fn;

        let lwe_m = LweParameters { m: cell.m, ..*self.lwe };
        let vol = volume_log2(&lwe_m, k_lat);
        let log2_ell = 0.25 * (4.0f64 / 3.0).log2()
            + self.gh_log2[cell.beta1 as usize]
            + (d - cell.beta1) as f64 * self.log2_delta[cell.beta0 as usize]
            + vol / d as f64;
        let ell = log2_ell.exp2() * self.convention.ell_factor;
        let tau_sq = (self.lwe.sigma_s * ell) * (self.lwe.sigma_s * ell);
        let terms = assemble_with_phi(
            self.lwe.q as f64,
            self.mu,
            tau_sq,
            d_round_log2,
            g1,
            fp_tail_log2,
            phi_fp,
            phi_fn,
            true,
        );
        let d_log2 = required_samples(&terms) + self.convention.d_extra_log2;
        let repeats_log2 = (d_log2 - self.nsieve[cell.beta1 as usize]).max(0.0);
        let bkz = bkz_cost(d, cell.beta0, self.model)?;
        let reduction_log2 = repeats_log2 + lse2(bkz, self.sieve_log2[cell.beta1 as usize]);
        let search_log2 = if tw {
            gqc1
                + cell.k_fft as f64 * 0.5 * (cell.p as f64).log2()
                + 0.5 * d_log2
                + self.convention.tw_search_extra_log2
        } else {
            g1 + lse2(d_log2 + self.convention.fill_log2, self.convention.fft_log2(cell.k_fft, cell.p))
        };
        let total = lse2(reduction_log2, search_log2);
        if !total.is_finite() {
            return Ok(());
        }
        let better = match self.best {
            None => true,
            Some((t, c)) => total < t || (total == t && cell < c),
        };
        if better {
            self.best = Some((total, cell));
        }
        if track_blocks {
            let key = (cell.k_enum, cell.k_fft);
            let entry = self.block_best.entry(key).or_insert((f64::INFINITY, cell));
            if total < entry.0 || (total == entry.0 && cell < entry.1) {
                *entry = (total, cell);
            }
        }
        Ok(())
    }

    /// Sweeps beta1 x beta0 for one (m, k_enum, k_fft, p) block with the
    /// given steps, with monotone pruning against the current best.
    fn sweep_betas(
        &mut self,
        m: u32,
        k_enum: u32,
        k_fft: u32,
        p: u64,
        beta1_range: (u32, u32),
        beta0_window: u32,
        step: u32,
        track_blocks: bool,
    ) -> Result<()> {
        let k_lat = self.lwe.n - k_enum - k_fft;
        let d = m + k_lat;
        let mut beta1 = beta1_range.0.max(BETA_FLOOR);
        while beta1 <= beta1_range.1.min(d) {
            // reduction >= sieve(beta1): once that alone exceeds the best,
            // larger beta1 cannot win
            if self.sieve_log2[beta1 as usize] > self.best_total() {
                break;
            }
            let lo = beta1.saturating_sub(beta0_window).max(BETA_FLOOR);
            let hi = (beta1 + beta0_window).min(d);
            let mut beta0 = lo;
            while beta0 <= hi {
                if bkz_cost(d, beta0, self.model)? > self.best_total() {
                    break; // bkz is nondecreasing in beta0
                }
                self.visit(Cell { beta0, beta1, k_enum, k_fft, p, m }, track_blocks)?;
                beta0 += step;
            }
            beta1 += step;
        }
        Ok(())
    }
}

/// Deterministic grid optimizer: coarse sweep, then step-1 refinement around
/// the best coarse cells. Ties break toward the lexicographically smallest
/// (beta0, beta1, k_enum, k_fft, p, m) tuple. Cells are evaluated in a fixed
/// order and each evaluation is pure, so output is bit-identical across runs.
pub fn optimize_with(
    lwe: &LweParameters,
    model: &CostModel,
    nu: f64,
    opts: &OptimizerOptions,
) -> Result<CostEstimate> {
    lwe.validate()?;
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::Domain(format!("nu = {nu} must lie in (0,1)")));
    }
    if opts.beta1_step == 0 || opts.k_enum_step == 0 || opts.k_fft_step == 0 || opts.m_step == 0 {
        return Err(Error::Config("optimizer steps must be positive".into()));
    }
    let mu = nu / 2.0;
    let mut st = SearchState::new(lwe, model, opts.convention, mu)?;
    let tw = model.is_this_work();

    let p_candidates: Vec<u64> = if opts.p_candidates.is_empty() {
        let mut v: Vec<u64> = (2..=12).collect();
        v.push(lwe.q);
        v.sort_unstable();
        v.dedup();
        v
    } else {
        let mut v = opts.p_candidates.clone();
        v.sort_unstable();
        v.dedup();
        v
    };
    let p_candidates: Vec<u64> =
        p_candidates.into_iter().filter(|&p| (2..=lwe.q).contains(&p)).collect();
    if p_candidates.is_empty() {
        return Err(Error::Config("no valid p candidates (need 2 <= p <= q)".into()));
    }

    let m_grid: Vec<u32> = if opts.optimize_m {
        // multiples of m_step only: budgets form a chain, so a larger budget
        // searches a superset and the optimum is monotone in m
        let mut v: Vec<u32> =
            (1..=lwe.m / opts.m_step).map(|i| i * opts.m_step).collect();
        if v.is_empty() {
            v.push(lwe.m);
        }
        v
    } else {
        vec![lwe.m]
    };

    // coarse pass
    for &m in &m_grid {
        let mut k_enum = 0;
        while k_enum <= lwe.n {
            let (g1, gqc1) = st.guess_counts(k_enum)?;
            let outer = if tw { gqc1 } else { g1 };
            // search >= outer + d_floor (tw: + d_floor/2); prune the rest of
            // the ascending k_enum loop once that can no longer win
            let search_floor =
                if tw { outer + 0.5 * st.d_floor_log2 } else { outer + st.d_floor_log2 };
            if search_floor > st.best_total() {
                break;
            }
            let mut k_fft = 0;
            while k_fft <= lwe.n - k_enum {
                let kf_floor = if tw {
                    outer + 0.5 * (k_fft as f64 + st.d_floor_log2)
                } else if k_fft > 0 {
                    outer + k_fft as f64
                } else {
                    search_floor
                };
                if kf_floor > st.best_total() {
                    break;
                }
                for &p in &p_candidates {
                    st.sweep_betas(
                        m,
                        k_enum,
                        k_fft,
                        p,
                        (BETA_FLOOR, m + lwe.n),
                        opts.beta0_window,
                        opts.beta1_step,
                        true,
                    )?;
                    if k_fft == 0 {
                        break; // p is irrelevant without FFT coordinates
                    }
                }
                k_fft += opts.k_fft_step;
            }
            k_enum += opts.k_enum_step;
        }
    }

    // refinement pass around the best coarse blocks
    let mut seeds: Vec<(f64, Cell)> = st.block_best.values().copied().collect();
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    seeds.truncate(opts.refine_top.max(1));
    for (_, seed) in seeds {
        let ke_lo = seed.k_enum.saturating_sub(opts.k_enum_step - 1);
        let ke_hi = (seed.k_enum + opts.k_enum_step - 1).min(lwe.n);
        for k_enum in ke_lo..=ke_hi {
            let kf_lo = seed.k_fft.saturating_sub(opts.k_fft_step - 1);
            let kf_hi = (seed.k_fft + opts.k_fft_step - 1).min(lwe.n - k_enum);
            for k_fft in kf_lo..=kf_hi {
                for &p in &p_candidates {
                    st.sweep_betas(
                        seed.m,
                        k_enum,
                        k_fft,
                        p,
                        (
                            seed.beta1.saturating_sub(opts.beta1_step - 1),
                            seed.beta1 + opts.beta1_step - 1,
                        ),
                        opts.beta0_window,
                        1,
                        false,
                    )?;
                    if k_fft == 0 {
                        break;
                    }
                }
            }
        }
    }

    let (_, cell) = st
        .best
        .ok_or_else(|| Error::Infeasible("no feasible parameter point in the search grid".into()))?;
    let lwe_m = LweParameters { m: cell.m, ..*lwe };
    let ap = AttackParameters::with_nu(
        cell.beta0,
        cell.beta1,
        cell.k_enum,
        cell.k_fft,
        lwe.n - cell.k_enum - cell.k_fft,
        cell.p,
        nu,
    );
    // re-price through the same path the search used so the returned estimate
    // matches the convention the caller optimized under
    cost_impl_with(&lwe_m, &ap, model, &opts.convention)
}

/// [`optimize_with`] under the default documented grid.
pub fn optimize(lwe: &LweParameters, model: &CostModel, nu: f64) -> Result<CostEstimate> {
    optimize_with(lwe, model, nu, &OptimizerOptions::default())
}
