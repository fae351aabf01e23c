//! Lattice-reduction cost conventions: sieve and BKZ costs under named models,
//! sieve output counts, and the GSA-based expected length of sampled dual
//! vectors. All costs are log2.

use crate::error::{Error, Result};

pub const MODEL_NAMES: [&str; 7] = ["CC", "CN", "C0", "QN", "Q0", "TW_QN", "TW_Q0"];

/// One named cost model. `sieve_exponent`/`sieve_affine` give the sieve cost
/// as an affine function of the block size; `bkz_tour_factor` scales the
/// poly(d) term of BKZ; `o_term` is the o(beta) correction in the sieve
/// output count (default 0).
#[derive(Debug, Clone, PartialEq)]
pub struct CostModel {
    pub name: String,
    pub sieve_exponent: f64,
    pub sieve_affine: f64,
    pub bkz_tour_factor: f64,
    pub o_term: f64,
    pub source: String,
}

impl CostModel {
    /// Core-SVP models price BKZ as a single SVP call: no affine term, no
    /// poly(d) factor.
    pub fn is_core_svp(&self) -> bool {
        matches!(self.name.as_str(), "C0" | "Q0" | "TW_Q0")
    }

    /// The two models costing this work's quantum attack rather than the
    /// classical baseline.
    pub fn is_this_work(&self) -> bool {
        self.name.starts_with("TW_")
    }
}

/// An ordered set of cost models as loaded from a coefficient file.
#[derive(Debug, Clone, PartialEq)]
pub struct CostModelSet {
    header: Vec<String>,
    models: Vec<CostModel>,
}

impl CostModelSet {
    /// Parse the pipe-separated coefficient format. Leading `#` lines are
    /// preserved verbatim so that `to_text` round-trips the file bit-exactly.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header = Vec::new();
        let mut models = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.starts_with('#') || line.trim().is_empty() {
                if models.is_empty() {
                    header.push(line.to_string());
                    continue;
                }
                return Err(Error::Config(format!(
                    "cost model file line {}: comments only allowed before records",
                    lineno + 1
                )));
            }
            let fields: Vec<&str> = line.split('|').collect();
            if fields.len() != 6 {
                return Err(Error::Config(format!(
                    "cost model file line {}: expected 6 pipe-separated fields, got {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            let num = |s: &str, what: &str| -> Result<f64> {
                s.parse::<f64>().map_err(|_| {
                    Error::Config(format!(
                        "cost model file line {}: bad {what} value {s:?}",
                        lineno + 1
                    ))
                })
            };
            let model = CostModel {
                name: fields[0].to_string(),
                sieve_exponent: num(fields[1], "sieve_exponent")?,
                sieve_affine: num(fields[2], "sieve_affine")?,
                bkz_tour_factor: num(fields[3], "tour_factor")?,
                o_term: num(fields[4], "o_term")?,
                source: fields[5].to_string(),
            };
            if !(model.sieve_exponent > 0.0) {
                return Err(Error::Config(format!(
                    "cost model {}: sieve_exponent must be positive",
                    model.name
                )));
            }
            models.push(model);
        }
        let set = Self { header, models };
        set.check_fixed_exponents()?;
        Ok(set)
    }

    // The published Core-SVP exponents are not configurable.
    fn check_fixed_exponents(&self) -> Result<()> {
        for m in &self.models {
            let expect = match m.name.as_str() {
                "C0" => Some(0.292),
                "Q0" | "TW_Q0" => Some(0.257),
                _ => None,
            };
            if let Some(e) = expect {
                if (m.sieve_exponent - e).abs() > 1e-12 {
                    return Err(Error::Config(format!(
                        "cost model {}: exponent must be {e}, got {}",
                        m.name, m.sieve_exponent
                    )));
                }
            }
        }
        Ok(())
    }

    /// Serialize; parse(to_text(set)) == set, and to_text(parse(file)) == file
    /// when the file's numerals are in shortest round-trip form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.header {
            out.push_str(line);
            out.push('\n');
        }
        for m in &self.models {
            out.push_str(&format!(
                "{}|{}|{}|{}|{}|{}\n",
                m.name, m.sieve_exponent, m.sieve_affine, m.bkz_tour_factor, m.o_term, m.source
            ));
        }
        out
    }

    /// The coefficient file shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(include_str!("../data/costmodels.txt"))
            .expect("shipped cost model file parses")
    }

    pub fn get(&self, name: &str) -> Result<&CostModel> {
        self.models
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::Config(format!("unknown cost model {name:?}")))
    }

    pub fn models(&self) -> &[CostModel] {
        &self.models
    }
}

/// Minimum block size where the affine sieve fits are meaningful; below it
/// costs are clamped and flagged.
pub const BETA_FLOOR: u32 = 50;

#[derive(Debug, Clone, Copy)]
pub struct SieveCost {
    pub log2: f64,
    /// true when beta was below [`BETA_FLOOR`] and got clamped
    pub clamped: bool,
}

/// Sieve cost in dimension beta: exponent*beta + affine, clamped at beta = 50.
pub fn sieve_cost(beta: u32, model: &CostModel) -> SieveCost {
    let clamped = beta < BETA_FLOOR;
    let b = beta.max(BETA_FLOOR) as f64;
    SieveCost {
        log2: model.sieve_exponent * b + model.sieve_affine,
        clamped,
    }
}

/// BKZ-beta0 cost in dimension d: sieve(beta0) plus log2(tour_factor * d),
/// with the polynomial term suppressed for Core-SVP models (single SVP call).
pub fn bkz_cost(d: u32, beta0: u32, model: &CostModel) -> Result<f64> {
    if beta0 < 2 || beta0 > d {
        return Err(Error::Domain(format!(
            "bkz_cost: need 2 <= beta0 <= d, got beta0 = {beta0}, d = {d}"
        )));
    }
    let sieve = sieve_cost(beta0, model).log2;
    if model.is_core_svp() {
        Ok(sieve)
    } else {
        Ok(sieve + (model.bkz_tour_factor * d as f64).log2())
    }
}

/// log2 of the number of vectors one sieve call outputs:
/// beta1 * log2(sqrt(4/3)) + o-term.
pub fn n_sieve(beta1: u32, model: &CostModel) -> Result<f64> {
    if beta1 < 2 {
        return Err(Error::Domain(format!("n_sieve: beta1 = {beta1} must be >= 2")));
    }
    Ok(beta1 as f64 * 0.5 * (4.0f64 / 3.0).log2() + model.o_term)
}

/// Root-Hermite factor delta(beta) = ((beta/2 pi e) * (pi beta)^{1/beta})^{1/(2(beta-1))}.
pub fn delta_beta(beta: u32) -> Result<f64> {
    if beta < 2 {
        return Err(Error::Domain(format!("delta_beta: beta = {beta} must be >= 2")));
    }
    let b = beta as f64;
    let tau = std::f64::consts::TAU;
    Ok(((b / (tau * std::f64::consts::E)) * (std::f64::consts::PI * b).powf(1.0 / b))
        .powf(1.0 / (2.0 * (b - 1.0))))
}

/// log2 of the Gaussian heuristic radius of a unit-volume lattice of rank k:
/// GH(k) = Gamma(k/2+1)^{1/k} / sqrt(pi).
pub fn gaussian_heuristic_log2(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("gaussian_heuristic: k must be >= 1".into()));
    }
    let kf = k as f64;
    Ok((libm::lgamma(kf / 2.0 + 1.0) / kf - 0.5 * std::f64::consts::PI.ln())
        / std::f64::consts::LN_2)
}

/// Expected Euclidean length of the short vectors produced by sieving the
/// first beta1 vectors of a BKZ-beta0 reduced basis of a rank-d lattice with
/// the given log2 volume:
///   ell = sqrt(4/3) * GH(beta1) * delta(beta0)^{d - beta1} * Vol^{1/d}.
/// Under the GSA the sublattice spanned by the first beta1 basis vectors has
/// volume delta^{beta1 (d - beta1)} Vol^{beta1/d}; its Gaussian-heuristic
/// radius divided into the sieve's (4/3)^{beta1/2} ball gives the formula.
pub fn expected_short_length(d: u32, beta0: u32, beta1: u32, volume_log2: f64) -> Result<f64> {
    if beta1 < 2 || beta1 > d || beta0 < 2 || beta0 > d {
        return Err(Error::Domain(format!(
            "expected_short_length: need 2 <= beta0, beta1 <= d (beta0 = {beta0}, beta1 = {beta1}, d = {d})"
        )));
    }
    let delta = delta_beta(beta0)?;
    if delta < 1.0 {
        return Err(Error::Domain(format!(
            "expected_short_length: delta(beta0 = {beta0}) = {delta} < 1, degenerate GSA profile"
        )));
    }
    let log2_ell = 0.25 * (4.0f64 / 3.0).log2()
        + gaussian_heuristic_log2(beta1)?
        + (d - beta1) as f64 * delta.log2()
        + volume_log2 / d as f64;
    Ok(log2_ell.exp2())
}

/// The full reduction-side bundle for one parameter point.
#[derive(Debug, Clone, Copy)]
pub struct ReductionCost {
    pub log2_bkz: f64,
    pub log2_sieve: f64,
    pub log2_nsieve: f64,
    pub expected_length: f64,
}

pub fn reduction_cost(
    d: u32,
    beta0: u32,
    beta1: u32,
    volume_log2: f64,
    model: &CostModel,
) -> Result<ReductionCost> {
    Ok(ReductionCost {
        log2_bkz: bkz_cost(d, beta0, model)?,
        log2_sieve: sieve_cost(beta1, model).log2,
        log2_nsieve: n_sieve(beta1, model)?,
        expected_length: expected_short_length(d, beta0, beta1, volume_log2)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_round_trips() {
        let set = CostModelSet::builtin();
        assert_eq!(set.models().len(), 7);
        let text = include_str!("../data/costmodels.txt");
        assert_eq!(set.to_text(), text, "shipped file must round-trip bit-exactly");
        let reparsed = CostModelSet::parse(&set.to_text()).unwrap();
        assert_eq!(reparsed, set);
    }

    #[test]
    fn core_svp_examples() {
        let set = CostModelSet::builtin();
        let c0 = set.get("C0").unwrap();
        let q0 = set.get("Q0").unwrap();
        assert_eq!(sieve_cost(100, c0).log2, 29.2);
        assert!((sieve_cost(100, q0).log2 - 25.7).abs() < 1e-12);
        // Single-SVP convention: no poly(d) term.
        assert_eq!(bkz_cost(200, 100, c0).unwrap(), 29.2);
    }

    #[test]
    fn beta_floor_clamps_with_flag() {
        let set = CostModelSet::builtin();
        let c0 = set.get("C0").unwrap();
        let clamped = sieve_cost(30, c0);
        assert!(clamped.clamped);
        assert_eq!(clamped.log2, sieve_cost(50, c0).log2);
        assert!(!sieve_cost(50, c0).clamped);
    }

    #[test]
    fn bkz_poly_term_additive() {
        let set = CostModelSet::builtin();
        let cn = set.get("CN").unwrap();
        let d = 200u32;
        let diff = bkz_cost(d, 100, cn).unwrap() - sieve_cost(100, cn).log2;
        assert!((diff - (cn.bkz_tour_factor * d as f64).log2()).abs() < 1e-12);
        assert!(bkz_cost(100, 150, cn).is_err(), "beta0 > d must fail");
    }

    #[test]
    fn n_sieve_examples() {
        let set = CostModelSet::builtin();
        let m = set.get("C0").unwrap();
        let v = n_sieve(100, m).unwrap();
        assert!((v - 20.7519).abs() < 1e-3, "log2 sqrt(4/3) = 0.20752/beta");
        assert!((n_sieve(200, m).unwrap() - 2.0 * v).abs() < 1e-12);
        assert!(n_sieve(1, m).is_err());
    }

    #[test]
    fn model_ordering_at_fixed_beta() {
        let set = CostModelSet::builtin();
        for beta in [100u32, 300, 700] {
            let c0 = sieve_cost(beta, set.get("C0").unwrap()).log2;
            let q0 = sieve_cost(beta, set.get("Q0").unwrap()).log2;
            assert!(q0 <= c0, "quantum Core-SVP never above classical");
            // TW_Q0 shares Q0's sieve term exactly; TW_QN shares QN's
            // exponent but carries its own calibrated affine constant.
            assert_eq!(
                sieve_cost(beta, set.get("TW_Q0").unwrap()).log2,
                q0
            );
            assert_eq!(
                set.get("TW_QN").unwrap().sieve_exponent,
                set.get("QN").unwrap().sieve_exponent
            );
        }
    }

    #[test]
    fn delta_and_gh_values() {
        // Hand evaluation at beta = 380: (380/(2 pi e) * (380 pi)^{1/380}) =
        // 22.25 * 1.01882 = 22.669, ln = 3.1211, / (2*379) = 0.0041175,
        // exp = 1.0041260.
        let d380 = delta_beta(380).unwrap();
        assert!((d380 - 1.0041260).abs() < 2e-6, "delta(380) = {d380}");
        assert!(delta_beta(100).unwrap() > delta_beta(200).unwrap());
        // GH(k) ~ sqrt(k/2пe) for large k.
        let gh = gaussian_heuristic_log2(400).unwrap().exp2();
        let stirling = (400.0f64 / (std::f64::consts::TAU * std::f64::consts::E)).sqrt();
        assert!((gh / stirling - 1.0).abs() < 0.01, "GH(400) = {gh} vs {stirling}");
    }

    #[test]
    fn short_length_boundary_and_monotonicity() {
        // beta1 = beta0 = d: a single sieve over the whole lattice.
        let vol_log2 = 100.0 * 11.7;
        let ell = expected_short_length(100, 100, 100, vol_log2).unwrap();
        let direct =
            (0.25 * (4.0f64 / 3.0).log2() + gaussian_heuristic_log2(100).unwrap() + 11.7).exp2();
        assert!((ell - direct).abs() < 1e-6 * direct);
        // Stronger reduction never lengthens the output.
        let weak = expected_short_length(180, 60, 120, vol_log2).unwrap();
        let strong = expected_short_length(180, 170, 120, vol_log2).unwrap();
        assert!(strong <= weak);
        // Degenerate profile rejected.
        assert!(matches!(
            expected_short_length(180, 5, 120, vol_log2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn unknown_model_is_config_error() {
        let set = CostModelSet::builtin();
        assert!(matches!(set.get("GE19"), Err(Error::Config(_))));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(CostModelSet::parse("C0|0.292|0|1|0").is_err(), "missing field");
        assert!(CostModelSet::parse("C0|x|0|1|0|src").is_err(), "bad number");
        assert!(
            CostModelSet::parse("C0|0.3|0|1|0|src").is_err(),
            "C0 exponent is pinned to 0.292"
        );
    }
}
