use serde::Serialize;

/// One exact identity: both sides rendered canonically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Check {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}
