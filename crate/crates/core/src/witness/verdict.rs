use serde::Serialize;

/// One checked statement. `id` is a stable dotted identifier, `claim` the
/// statement in words, `detail` what was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub claim: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub version: String,
    pub suite: String,
    pub p: u32,
    pub claims: Vec<Claim>,
    pub pass: bool,
}

impl VerdictReport {
    pub fn new(suite: impl Into<String>, p: u32) -> Self {
        Self {
            version: crate::VERSION.to_string(),
            suite: suite.into(),
            p,
            claims: Vec::new(),
            pass: true,
        }
    }

    pub fn check(
        &mut self,
        id: impl Into<String>,
        claim: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) -> bool {
        self.pass &= pass;
        self.claims.push(Claim {
            id: id.into(),
            claim: claim.into(),
            pass,
            detail: detail.into(),
        });
        pass
    }

    /// Appends the claims of `other`, keeping this report's suite name.
    pub fn absorb(&mut self, other: VerdictReport) {
        self.pass &= other.pass;
        self.claims.extend(other.claims);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("suite,id,pass,claim,detail\n");
        for c in &self.claims {
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                self.suite,
                c.id,
                c.pass,
                csv_field(&c.claim),
                csv_field(&c.detail)
            ));
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "<!-- {} -->\n### Suite `{}` over F_{}: {}\n\n| id | result | claim | detail |\n|---|---|---|---|\n",
            self.version,
            self.suite,
            self.p,
            if self.pass { "pass" } else { "FAIL" }
        );
        for c in &self.claims {
            s.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                c.id,
                if c.pass { "pass" } else { "FAIL" },
                c.claim.replace('|', "\\|"),
                c.detail.replace('|', "\\|")
            ));
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_every_claim() {
        let mut v = VerdictReport::new("s", 2);
        assert!(v.check("a", "one", true, ""));
        assert!(v.pass);
        assert!(!v.check("b", "two", false, "x, y"));
        assert!(!v.pass);
        assert_eq!(v.failures().count(), 1);
        assert!(v.to_csv().ends_with("s,b,false,two,\"x, y\"\n"));
        let mut w = VerdictReport::new("t", 2);
        w.absorb(v);
        assert!(!w.pass);
        assert_eq!(w.claims.len(), 2);
    }
}
