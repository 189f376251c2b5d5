use serde::Serialize;

/// One instance of an experiment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub id: String,
    pub family: String,
    /// The graph in graph6.
    pub graph: String,
    pub p: u32,
    pub k: usize,
    pub outcome: String,
    pub span: Option<u32>,
    pub fallbacks: usize,
    pub nodes: u64,
    /// Seed the list assignment was drawn from, when random.
    pub seed: Option<u64>,
}

/// A comparison against a closed form or a guarantee.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub rows: Vec<Row>,
    pub verdicts: Vec<Verdict>,
    pub failures: usize,
    pub theorem_violations: usize,
    /// Re-checkable evidence for failures and witnesses.
    pub certificates: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            ..Report::default()
        }
    }

    pub fn verdict(&mut self, check: impl Into<String>, expected: impl ToString, observed: impl ToString) -> bool {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let pass = expected == observed;
        if !pass {
            self.failures += 1;
        }
        self.verdicts.push(Verdict {
            check: check.into(),
            expected,
            observed,
            pass,
        });
        pass
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.theorem_violations == 0
    }

    /// 0 pass, 1 property failure, 3 theorem violation.
    pub fn exit_code(&self) -> i32 {
        if self.theorem_violations > 0 {
            3
        } else if self.failures > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn rows_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("row serializes");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }

    pub fn verdicts_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for v in &self.verdicts {
            w.serialize(v).expect("verdict serializes");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }
}
