use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

/// Text lines and the equivalent JSON document for one command.
#[derive(Debug)]
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
    pub status: Status,
}

impl Report {
    pub fn ok(lines: Vec<String>, json: Value) -> Self {
        Report {
            lines,
            json,
            status: Status::Ok,
        }
    }

    pub fn failed_if(mut self, failed: bool) -> Self {
        if failed {
            self.status = Status::VerificationFailed;
        }
        self
    }
}
