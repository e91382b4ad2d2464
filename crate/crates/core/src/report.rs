//! The combined analysis of one automaton, as text or JSON.

use std::fmt;

use serde::Serialize;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::orbit::{orbit_data, OrbitData};
use crate::reach::{verify_don, DonReport};
use crate::rystsov::is_perfectly_reachable;
use crate::standardize::{standardize, StandardizationReport};

/// Version tag carried by every structured document this crate emits.
pub const FORMAT: &str = "creach/1";

#[derive(Debug, Clone, Serialize)]
pub struct DonSummary {
    pub holds: bool,
    pub completely_reachable: bool,
    pub violations: usize,
    pub unreachable: usize,
    pub report: DonReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub format: &'static str,
    pub n: usize,
    pub standardization: StandardizationReport,
    pub standardized_a: Vec<usize>,
    pub orbit: OrbitData,
    /// `H₀ = Z_n`, which guarantees every proper subset is expanded by a
    /// word of length at most `n` and hence the `n(n − k)` bound.
    pub theorem_applies: bool,
    pub perfectly_reachable: bool,
    /// Present when `n` is within the lattice limit and it was requested.
    pub don: Option<DonSummary>,
    pub don_skipped: Option<String>,
}

/// Standardizes `dfa` and collects orbit data, the perfect-reachability
/// verdict and (optionally) a Don check of the input automaton.
pub fn analyze(dfa: &Dfa, with_don: bool) -> Result<AnalysisReport> {
    let standardization = standardize(dfa)?;
    let std_dfa = &standardization.result;
    let orbit = orbit_data(std_dfa)?;
    let perfectly_reachable = is_perfectly_reachable(std_dfa);
    let (don, don_skipped) = if !with_don {
        (None, Some("not requested".to_string()))
    } else {
        match verify_don(dfa) {
            Ok(report) => (
                Some(DonSummary {
                    holds: report.violations.is_empty(),
                    completely_reachable: report.is_completely_reachable(),
                    violations: report.violations.len(),
                    unreachable: report.unreachable.len(),
                    report,
                }),
                None,
            ),
            Err(e @ Error::LatticeCapacity { .. }) => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        }
    };
    Ok(AnalysisReport {
        format: FORMAT,
        n: dfa.n(),
        standardized_a: std_dfa.action(crate::Letter::A).to_vec(),
        theorem_applies: orbit.h0_is_full,
        orbit,
        perfectly_reachable,
        don,
        don_skipped,
        standardization,
    })
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.standardization;
        let o = &self.orbit;
        writeln!(f, "states: {}", self.n)?;
        writeln!(
            f,
            "standardization: cyclic letter {}, rotation {}, shift k = {}",
            s.circular_letter.as_char(),
            s.rotation,
            s.shift_k
        )?;
        writeln!(f, "standardized a: {:?}", self.standardized_a)?;
        writeln!(f, "d = {}, r = {}, orbit length {}", o.d, o.r, o.ell)?;
        writeln!(f, "orbit: {:?}", o.orbit)?;
        writeln!(f, "gcd chain: {:?}", o.gcds)?;
        writeln!(
            f,
            "H0 = {}Z_{}{}",
            o.h0_generator,
            o.n,
            if o.h0_is_full { " (the whole group)" } else { "" }
        )?;
        writeln!(
            f,
            "n-expandability guaranteed: {}",
            if self.theorem_applies { "yes" } else { "no" }
        )?;
        writeln!(
            f,
            "perfectly reachable: {}",
            if self.perfectly_reachable { "yes" } else { "no" }
        )?;
        match (&self.don, &self.don_skipped) {
            (Some(d), _) => {
                write!(f, "Don bound: ")?;
                if d.holds {
                    write!(f, "no violations")?;
                } else {
                    write!(f, "{} violations", d.violations)?;
                }
                writeln!(f, ", {} unreachable subsets", d.unreachable)
            }
            (None, Some(why)) => writeln!(f, "Don bound: skipped ({why})"),
            (None, None) => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin_example, Example};

    #[test]
    fn e12_report() {
        let r = analyze(&builtin_example(Example::E12), true).unwrap();
        assert_eq!(r.orbit.h0_generator, 2);
        assert!(!r.theorem_applies);
        assert!(r.perfectly_reachable);
        assert!(r.don.as_ref().unwrap().holds);
        let text = r.to_string();
        assert!(text.contains("H0 = 2Z_12"));
        assert!(text.contains("no violations"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["format"], FORMAT);
        assert_eq!(json["orbit"]["d"], 10);
    }

    #[test]
    fn e48_skips_don() {
        let r = analyze(&builtin_example(Example::E48), true).unwrap();
        assert!(r.don.is_none());
        assert!(r.don_skipped.unwrap().contains("limit"));
        assert_eq!(r.orbit.orbit, vec![24, 18]);
    }

    #[test]
    fn non_circular_rejected() {
        let dfa = Dfa::new(&[0, 0, 1], &[1, 1, 2]).unwrap();
        assert_eq!(analyze(&dfa, false).unwrap_err(), Error::NotCircular);
    }
}
