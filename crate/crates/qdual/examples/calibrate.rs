// Scratch diagnostic: full exponent-model table under a convention grid.
// Prints err = total - target per scheme/model so convention constants can
// be chosen. Not part of the shipped surface.

use qdual::costmodels::CostModelSet;
use qdual::dualattack::{optimize_with, FftCostForm, OptimizerOptions, SearchConvention};
use qdual::presets::PresetSet;

const TARGETS: &[(&str, f64, f64, f64)] = &[
    // scheme, C0, Q0, TW_Q0
    ("Kyber512", 115.4, 102.7, 99.7),
    ("Kyber768", 173.7, 154.6, 150.0),
    ("Kyber1024", 241.8, 215.0, 208.4),
    ("LightSaber", 121.8, 107.7, 100.6),
    ("Saber", 182.3, 162.4, 157.9),
    ("FireSaber", 247.4, 220.3, 214.0),
    ("TFHE630", 93.0, 83.0, 80.7),
    ("TFHE1024", 95.4, 84.8, 83.2),
];

fn main() {
    let presets = PresetSet::builtin();
    let models = CostModelSet::builtin();
    let nu = 0.5;

    let mut args = std::env::args().skip(1);
    let fill = args
        .next()
        .map(|s| s.parse::<f64>().expect("fill_log2"))
        .unwrap_or(640f64.log2());
    let mul = args.next().map(|s| s.parse::<f64>().expect("mul_log2"));
    let d_extra = args
        .next()
        .map(|s| s.parse::<f64>().expect("d_extra_log2"))
        .unwrap_or(0.0);
    let ell_factor = args
        .next()
        .map(|s| s.parse::<f64>().expect("ell_factor"))
        .unwrap_or((4.0f64 / 3.0).powf(0.25));
    let tw_extra = args
        .next()
        .map(|s| s.parse::<f64>().expect("tw_search_extra_log2"))
        .unwrap_or(std::f64::consts::PI.log2());
    let optimize_m = args.next().map(|s| s == "m").unwrap_or(false);
    let only: Option<String> = args.next();
    let conv = SearchConvention {
        fill_log2: fill,
        fft: match mul {
            Some(m) => FftCostForm::Gates { mul_log2: m },
            None => FftCostForm::Gates { mul_log2: 10.0 },
        },
        d_extra_log2: d_extra,
        ell_factor,
        tw_search_extra_log2: tw_extra,
    };
    eprintln!("convention: {conv:?}");

    let mut worst = 0f64;
    let mut sum = 0f64;
    for (name, c0, q0, twq0) in TARGETS {
        if let Some(f) = &only {
            if !name.contains(f.as_str()) {
                continue;
            }
        }
        let preset = presets.get(name).expect("preset");
        let lwe = preset.lwe;
        for (model_name, target) in [("C0", c0), ("Q0", q0), ("TW_Q0", twq0)] {
            let model = models.get(model_name).expect("model");
            let opts = OptimizerOptions {
                convention: conv,
                optimize_m,
                ..OptimizerOptions::default()
            };
            match optimize_with(&lwe, model, nu, &opts) {
                Ok(est) => {
                    let err = est.total_log2 - target;
                    worst = worst.max(err.abs());
                    sum += err.abs();
                    println!(
                        "{name:<11} {model_name:<6} total {:>7.2} target {target:>6.1} err {err:>+6.2}  \
                         b0 {:>3} b1 {:>3} ke {:>2} kf {:>2} p {:>5} m {:>4} D {:>6.2} red {:>7.2} search {:>7.2}",
                        est.total_log2,
                        est.params.beta0,
                        est.params.beta1,
                        est.params.k_enum,
                        est.params.k_fft,
                        est.params.p,
                        est.m,
                        est.d_log2,
                        est.reduction_log2,
                        est.search_log2,
                    );
                }
                Err(e) => println!("{name:<11} {model_name:<6} ERROR {e}"),
            }
        }
    }
    println!("max |err| {worst:.2}  sum |err| {sum:.2}");
}
