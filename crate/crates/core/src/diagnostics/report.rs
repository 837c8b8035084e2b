//! Per-lemma, per-clause pass/fail reporting.
//!
//! A clause "passes" exactly when its recorded inequality holds for the
//! measured value; sampled clauses also record how many random sets were
//! examined, so a pass is never mistaken for a proof of a for-all statement.

use serde::Serialize;

/// Direction of the recorded inequality `measured REL threshold`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// measured <= threshold
    Le,
    /// measured < threshold (strict, as typeset in the source inequality)
    Lt,
    /// measured > threshold (strict, as typeset in the source inequality)
    Gt,
}

/// One clause: the worst measured value seen, the threshold it is compared
/// against at that worst case, and the verdict.
#[derive(Clone, Debug, Serialize)]
pub struct ClauseReport {
    pub clause: String,
    pub relation: Relation,
    /// Worst measured value across everything examined.
    pub measured: f64,
    pub threshold: f64,
    pub pass: bool,
    /// Number of instances examined (vertices, sets, or pairs; exhaustive
    /// clauses count every instance). Zero instances pass vacuously.
    pub samples: usize,
    /// Count of examined instances that individually violated the clause.
    pub violations: usize,
    /// Human-readable locus of the worst case.
    pub witness: String,
}

impl ClauseReport {
    pub fn new(
        clause: impl Into<String>,
        relation: Relation,
        measured: f64,
        threshold: f64,
        samples: usize,
        violations: usize,
        witness: impl Into<String>,
    ) -> Self {
        let satisfied = match relation {
            Relation::Le => measured <= threshold,
            Relation::Lt => measured < threshold,
            Relation::Gt => measured > threshold,
        };
        let pass = samples == 0 || (violations == 0 && satisfied);
        ClauseReport {
            clause: clause.into(),
            relation,
            measured,
            threshold,
            pass,
            samples,
            violations,
            witness: witness.into(),
        }
    }
}

/// Full report for one lemma run.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub lemma: String,
    pub clauses: Vec<ClauseReport>,
    /// Seed value the sampling used, for reproducibility.
    pub seed: u64,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause == name)
    }
}

/// Accumulates instances of one clause, keeping the worst case.
/// "Worst" is the largest signed violation margin.
pub(crate) struct ClauseTracker {
    relation: Relation,
    measured: f64,
    threshold: f64,
    violations: usize,
    samples: usize,
    witness: String,
    /// Samples counted toward `samples` but not eligible as worst case;
    /// used when an instance is vacuous (e.g. no qualifying vertex).
    seen_any: bool,
}

impl ClauseTracker {
    pub fn new(relation: Relation, default_threshold: f64) -> Self {
        ClauseTracker {
            relation,
            measured: 0.0,
            threshold: default_threshold,
            violations: 0,
            samples: 0,
            witness: String::new(),
            seen_any: false,
        }
    }

    pub fn observe(&mut self, measured: f64, threshold: f64, witness: impl Into<String>) {
        self.samples += 1;
        let margin = match self.relation {
            Relation::Le | Relation::Lt => measured - threshold,
            Relation::Gt => threshold - measured,
        };
        // NaN compares as a violation for the strict relations
        let cmp = measured.partial_cmp(&threshold);
        let violated = match self.relation {
            Relation::Le => measured > threshold,
            Relation::Lt => !matches!(cmp, Some(std::cmp::Ordering::Less)),
            Relation::Gt => !matches!(cmp, Some(std::cmp::Ordering::Greater)),
        };
        if violated {
            self.violations += 1;
        }
        let current_margin = match self.relation {
            Relation::Le | Relation::Lt => self.measured - self.threshold,
            Relation::Gt => self.threshold - self.measured,
        };
        if !self.seen_any || margin > current_margin {
            self.measured = measured;
            self.threshold = threshold;
            self.witness = witness.into();
            self.seen_any = true;
        }
    }

    pub fn into_clause(self, name: &str) -> ClauseReport {
        ClauseReport::new(
            name,
            self.relation,
            self.measured,
            self.threshold,
            self.samples,
            self.violations,
            self.witness,
        )
    }
}
