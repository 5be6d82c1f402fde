//! Hypothesis tables of the comparison theorems for the built-in scenarios.

use po_extremes::order_checks::{verify_hypotheses, TheoremId};
use po_extremes::scenario::registry;
use po_extremes::Result;

fn main() -> Result<()> {
    for s in registry() {
        for t in TheoremId::ALL.into_iter().filter(|t| t.kind() == s.kind) {
            let report = verify_hypotheses(t, &s)?;
            let failed: Vec<&str> = report.failed().map(|h| h.name.as_str()).collect();
            println!(
                "{:<8} theorem {:<5} {}",
                s.id,
                t.to_string(),
                if failed.is_empty() { "all pass".to_string() } else { format!("fails: {}", failed.join("; ")) }
            );
        }
    }
    Ok(())
}
