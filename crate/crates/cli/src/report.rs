use serde::Serialize;

/// What every subcommand prints. In JSON all fields are present; unknown
/// ones are `null`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub value: String,
    /// Bare digits, without sign or markers.
    pub digits: Option<String>,
    pub indeterminate_at: Option<usize>,
    pub precision_used: Option<u32>,
    pub sign_unknown: bool,
    pub details: Vec<String>,
}

impl Report {
    pub fn new(value: String, digits: Option<String>) -> Self {
        Report {
            value,
            digits,
            indeterminate_at: None,
            precision_used: None,
            sign_unknown: false,
            details: Vec::new(),
        }
    }

    /// The value on the first line, details after it.
    pub fn plain(&self) -> String {
        let mut s = self.value.clone();
        s.push('\n');
        for line in &self.details {
            s.push_str(line);
            s.push('\n');
        }
        s
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
