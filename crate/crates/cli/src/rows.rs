//! Report records. Complex numbers serialize as `{"re": …, "im": …}` in JSON
//! and as `_re`/`_im` column pairs in CSV.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use loglambert_core::report::{IdentityId, IdentityReport};
use loglambert_core::ComplexValue;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexValue> for Complex {
    fn from(z: ComplexValue) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

/// Named parameters in a fixed order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params(pub Vec<(String, Complex)>);

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Params {
    pub fn from_pairs(pairs: &[(String, ComplexValue)]) -> Self {
        Params(pairs.iter().map(|(k, v)| (k.clone(), Complex::from(*v))).collect())
    }

    /// `name=(re,im)` joined by `;`, the CSV form.
    pub fn flat(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}=({},{})", number(v.re), number(v.im))).collect::<Vec<_>>().join(";")
    }
}

/// One identity at one parameter point. A row whose computation failed has
/// no sides, `pass = false` and the error text.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub identity: &'static str,
    pub paper_ref: &'static str,
    pub params: Params,
    pub lhs: Option<Complex>,
    pub rhs: Option<Complex>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub pass: bool,
    pub terms: usize,
    pub evals: usize,
    pub wall_ms: u64,
    pub error: Option<String>,
}

impl Row {
    pub fn from_report(r: &IdentityReport) -> Self {
        Row {
            identity: r.id.name(),
            paper_ref: r.id.description(),
            params: Params::from_pairs(&r.params),
            lhs: Some(r.lhs.into()),
            rhs: Some(r.rhs.into()),
            abs_err: Some(r.abs_err),
            rel_err: Some(r.rel_err),
            pass: r.pass,
            terms: r.terms,
            evals: r.evals,
            wall_ms: 0,
            error: None,
        }
    }

    pub fn failed(id: IdentityId, params: Params, error: String) -> Self {
        Row {
            identity: id.name(),
            paper_ref: id.description(),
            params,
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            pass: false,
            terms: 0,
            evals: 0,
            wall_ms: 0,
            error: Some(error),
        }
    }
}

/// Shortest round-trip text of a float, as JSON writes it; non-finite
/// values become `null`.
pub fn number(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| "null".into())
}

fn opt(x: Option<f64>) -> String {
    x.map(number).unwrap_or_default()
}

/// Flattened CSV view of a [`Row`].
pub const ROW_COLUMNS: [&str; 14] = [
    "identity",
    "paper_ref",
    "params",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_err",
    "rel_err",
    "pass",
    "terms",
    "evals",
    "wall_ms",
    "error",
];

impl Row {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.identity.to_string(),
            self.paper_ref.to_string(),
            self.params.flat(),
            opt(self.lhs.map(|c| c.re)),
            opt(self.lhs.map(|c| c.im)),
            opt(self.rhs.map(|c| c.re)),
            opt(self.rhs.map(|c| c.im)),
            opt(self.abs_err),
            opt(self.rel_err),
            self.pass.to_string(),
            self.terms.to_string(),
            self.evals.to_string(),
            self.wall_ms.to_string(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

/// Any record the writers can emit in both formats.
pub trait Record: Serialize {
    fn columns() -> &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

impl Record for Row {
    fn columns() -> &'static [&'static str] {
        &ROW_COLUMNS
    }

    fn fields(&self) -> Vec<String> {
        self.csv_fields()
    }
}
