use qdual::costmodels::CostModelSet;
use qdual::dualattack::{optimize_with, OptimizerOptions};
use qdual::presets::PresetSet;

fn main() {
    let presets = PresetSet::builtin();
    let set = CostModelSet::builtin();
    for (scheme, model) in [("Kyber512", "C0"), ("LightSaber", "C0"), ("TFHE630", "C0")] {
        let p = presets.get(scheme).unwrap();
        let m = set.get(model).unwrap();
        let est = optimize_with(&p.lwe, m, 0.5, &OptimizerOptions::default()).unwrap();
        println!("{scheme} {model}: {}", serde_json::to_string_pretty(&est).unwrap());
    }
}
