//! Monte-Carlo validation of the analytic extreme-value cdfs.

use po_extremes::mc::validate_extreme;
use po_extremes::{BaselineSpec, ExtremeKind, GeneratorSpec, POSampleSpec, Result};

fn main() -> Result<()> {
    let draws = 100_000;
    let cases = [
        (
            "independent, n = 3",
            POSampleSpec::new(BaselineSpec::weibull_survival(9.0, 0.9)?, vec![7.0, 25.0, 100.0], GeneratorSpec::independence())?,
        ),
        (
            "nelsen-4-2-19, n = 2",
            POSampleSpec::new(BaselineSpec::weibull_survival(1.0, 0.3)?, vec![0.34, 0.65], GeneratorSpec::nelsen_4_2_19(5.0)?)?,
        ),
        (
            "nelsen-4-2-8, n = 2",
            POSampleSpec::new(BaselineSpec::truncated_exp_growth(), vec![0.5, 1.7], GeneratorSpec::nelsen_4_2_8(1.5)?)?,
        ),
    ];
    for (name, spec) in &cases {
        for kind in [ExtremeKind::Min, ExtremeKind::Max] {
            let ks = validate_extreme(spec, kind, draws, 42)?;
            println!(
                "{name:<22} {kind}: KS {:.4e} (critical {:.4e}) {}",
                ks.distance,
                ks.critical,
                if ks.pass { "pass" } else { "fail" }
            );
        }
    }
    Ok(())
}
