use serde::{Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated; serialized as "skip: reason".
    Skip(String),
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn budget() -> Self {
        Status::Skip("budget".into())
    }

    pub fn is_skip(&self) -> bool {
        matches!(self, Status::Skip(_))
    }

    pub fn label(&self) -> String {
        match self {
            Status::Pass => "pass".into(),
            Status::Fail => "fail".into(),
            Status::Skip(r) => format!("skip: {r}"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub observed: Value,
    pub expected: Value,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunMeta {
    pub prime: u64,
    pub sqrt_minus7: u64,
    pub seed: u64,
    pub samples: usize,
    pub conjugate: bool,
    /// SHA-256 of the 84 cubics over ℚ(ω), one canonical line each.
    pub dataset_sha256: String,
    pub toolkit_version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertReport {
    pub meta: RunMeta,
    pub checks: Vec<CheckRecord>,
    pub overall: Status,
}

impl CertReport {
    /// Overall pass iff every record that was not skipped passed.
    pub fn new(meta: RunMeta, checks: Vec<CheckRecord>) -> Self {
        let ok = checks.iter().all(|c| c.status != Status::Fail);
        Self {
            meta,
            checks,
            overall: Status::from_bool(ok),
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    /// The report with every duration zeroed.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.checks.iter_mut().for_each(|c| c.ms = 0);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn meta() -> RunMeta {
        RunMeta {
            prime: 263,
            sqrt_minus7: 16,
            seed: 42,
            samples: 100,
            conjugate: false,
            dataset_sha256: "00".into(),
            toolkit_version: "0".into(),
        }
    }

    fn rec(id: &str, status: Status) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            status,
            observed: json!({}),
            expected: json!({}),
            ms: 5,
        }
    }

    #[test]
    fn schema() {
        let r = CertReport::new(
            meta(),
            vec![
                rec("hilbert_series", Status::Pass),
                rec("smoothness", Status::budget()),
            ],
        );
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["id"], "hilbert_series");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][1]["status"], "skip: budget");
        assert!(v["checks"][0]["ms"].is_u64());
        assert_eq!(v["meta"]["prime"], 263);
        assert_eq!(v["overall"], "pass");
    }

    #[test]
    fn skips_do_not_fail_and_failures_do() {
        assert!(CertReport::new(meta(), vec![rec("a", Status::Skip("x".into()))]).passed());
        assert!(
            !CertReport::new(meta(), vec![rec("a", Status::Pass), rec("b", Status::Fail)]).passed()
        );
    }
}
