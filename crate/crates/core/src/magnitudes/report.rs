use std::fmt;

/// Verdict for one axiom. A pass may carry the largest Archimedean witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass(Option<u64>),
    Fail(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: String,
    pub sample_size: usize,
    /// Axioms 1 to 9, in order.
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes
            .iter()
            .all(|o| matches!(o, AxiomOutcome::Pass(_)))
    }

    pub fn failures(&self) -> usize {
        self.outcomes.len()
            - self
                .outcomes
                .iter()
                .filter(|o| matches!(o, AxiomOutcome::Pass(_)))
                .count()
    }
}

/// One line per axiom: `AXIOM <k>: PASS` or `AXIOM <k>: FAIL <witness>`,
/// followed by a summary line.
impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, outcome) in self.outcomes.iter().enumerate() {
            match outcome {
                AxiomOutcome::Pass(Some(n)) => writeln!(f, "AXIOM {}: PASS max_n={n}", i + 1)?,
                AxiomOutcome::Pass(None) => writeln!(f, "AXIOM {}: PASS", i + 1)?,
                AxiomOutcome::Fail(w) => writeln!(f, "AXIOM {}: FAIL {w}", i + 1)?,
            }
        }
        if self.all_pass() {
            write!(
                f,
                "SUMMARY: {}: no counterexample found on a sample of {}",
                self.system, self.sample_size
            )
        } else {
            write!(
                f,
                "SUMMARY: {}: {} axiom(s) failed on a sample of {}",
                self.system,
                self.failures(),
                self.sample_size
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyOutcome {
    Pass,
    Fail(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureReport {
    pub system: String,
    pub sample_size: usize,
    pub outcomes: Vec<PropertyOutcome>,
}

impl MeasureReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| *o == PropertyOutcome::Pass)
    }
}

impl fmt::Display for MeasureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, outcome) in self.outcomes.iter().enumerate() {
            match outcome {
                PropertyOutcome::Pass => writeln!(f, "PROPERTY {}: PASS", i + 1)?,
                PropertyOutcome::Fail(w) => writeln!(f, "PROPERTY {}: FAIL {w}", i + 1)?,
            }
        }
        Ok(())
    }
}
