use crate::bitset::VertexSet;
use crate::family::RainbowSelection;
use crate::pattern::PatternId;
use crate::repeating::RepeatingGraph;

use super::WitnessError;

/// Which pattern the repeating graph is assumed to avoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagMode {
    /// `K_r`-free, with at least `max(n, r)` columns.
    CompleteK,
    /// `K_r^-`-free, with at least `max(n, r - 1)` columns.
    CompleteMinusEdge,
}

/// A rainbow independent `n`-set, with the columns as colours and `n` the
/// number of rows: a loopless row if there is one, else (for `K_r^-`) the
/// diagonal `{(a, a)}`.
pub fn repeating_diag_rainbow(rg: &RepeatingGraph, mode: DiagMode, r: usize) -> Result<RainbowSelection, WitnessError> {
    let n = rg.rows();
    let need = match mode {
        DiagMode::CompleteK => n.max(r),
        DiagMode::CompleteMinusEdge => n.max(r.saturating_sub(1)),
    };
    if rg.columns() < need || r < 2 {
        return Err(WitnessError::Precondition(format!(
            "{} columns with {n} rows and r = {r}; need r >= 2 and at least {need} columns",
            rg.columns()
        )));
    }
    let base = rg.base();
    let row_selection = |b: usize| RainbowSelection::new((0..n).map(|a| (a, rg.vertex(a, b))).collect());
    if let Some(b) = (0..n).find(|&b| !base.has_loop(b)) {
        return Ok(row_selection(b));
    }
    if n == 0 {
        return Ok(RainbowSelection::default());
    }
    match mode {
        DiagMode::CompleteK => Err(WitnessError::PatternFound {
            pattern: PatternId::CompleteK(r),
            witness: (0..r).map(|a| rg.vertex(a, 0)).collect(),
        }),
        DiagMode::CompleteMinusEdge => {
            // (a, a) ~ (a2, a2) for a < a2 exactly when a -> a2.
            for a2 in 0..n {
                if let Some(a) = (0..a2).find(|&a| base.has_arc(a, a2)) {
                    let mut witness: VertexSet = (0..r - 1).map(|c| rg.vertex(c, a2)).collect();
                    witness.insert(rg.vertex(0, a));
                    return Err(WitnessError::PatternFound {
                        pattern: PatternId::CompleteMinusEdge(r),
                        witness,
                    });
                }
            }
            Ok(RainbowSelection::new((0..n).map(|a| (a, rg.vertex(a, a))).collect()))
        }
    }
}
